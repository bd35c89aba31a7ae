use num_bigint::BigInt;

use cubecover::bounds::{smith_asymptotic, BoundPipeline, ProgramKind, SMITH_REFERENCE};
use cubecover::lp::solve_min;
use cubecover::{Execution, Rational};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

#[test]
fn reduced_table_through_twelve() {
    let table = BoundPipeline::default()
        .bounds_table(12, ProgramKind::Reduced, Execution::Parallel)
        .unwrap();
    let dims: Vec<usize> = table.iter().map(|r| r.dim).collect();
    assert_eq!(dims, (2..=12).collect::<Vec<_>>());
    let got: Vec<String> = table.iter().map(|r| r.our_bound.to_string()).collect();
    assert_eq!(
        got,
        ["2", "5", "16", "60", "252", "1143", "5104", "22616", "98183", "520866", "2927619"]
    );
    for r in &table {
        assert_eq!(r.our_bound, r.lp_value.ceil().to_integer());
    }
}

#[test]
fn exact_optima() {
    let p = BoundPipeline::default();
    let lp = |d| p.cover_lower_bound(d, ProgramKind::Reduced).unwrap().lp_value;
    assert_eq!(lp(6), q("1256/5"));
    assert_eq!(lp(10), q("313693556/3195"));
    assert_eq!(lp(11), q("1898553176/3645"));
    assert_eq!(lp(12), q("7523174985728/2569725"));
}

#[test]
fn headline_rounds_to_five_figures() {
    let r = BoundPipeline::default()
        .cover_lower_bound(12, ProgramKind::Reduced)
        .unwrap();
    let n = r.our_bound;
    assert_eq!(n.to_string().len(), 7);
    assert_eq!((n + 50) / 100, BigInt::from(29276));
}

#[test]
fn execution_modes_agree() {
    let p = BoundPipeline::default();
    let a = p.bounds_table(12, ProgramKind::Reduced, Execution::Parallel).unwrap();
    let b = p.bounds_table(12, ProgramKind::Reduced, Execution::Sequential).unwrap();
    assert_eq!(a, b);
}

#[test]
fn dominates_smith_reference() {
    let p = BoundPipeline::default();
    for (d, smith) in SMITH_REFERENCE {
        let r = p.cover_lower_bound(d, ProgramKind::Reduced).unwrap();
        assert_eq!(r.reference_smith, Some(smith));
        assert!(r.our_bound >= BigInt::from(smith), "d={d}");
        assert_eq!(r.our_bound == BigInt::from(smith), d == 3, "d={d}");
        assert!(r.smith_asymptotic < r.our_bound || d <= 3, "d={d}");
    }
    assert!(smith_asymptotic(12) < BigInt::from(2_900_000));
}

#[test]
fn reduced_dominates_general() {
    let p = BoundPipeline::default();
    for d in 3..=12 {
        let g = p.cover_lower_bound(d, ProgramKind::General).unwrap();
        let r = p.cover_lower_bound(d, ProgramKind::Reduced).unwrap();
        assert!(r.lp_value >= g.lp_value, "d={d}");
    }
    assert_eq!(
        p.cover_lower_bound(3, ProgramKind::General).unwrap().our_bound,
        BigInt::from(5)
    );
}

#[test]
fn scaling_does_not_change_optima() {
    let p = BoundPipeline::default();
    for kind in [ProgramKind::Reduced, ProgramKind::General] {
        for d in 1..=12 {
            let a = solve_min(&p.build_program(d, kind, true).unwrap());
            let b = solve_min(&p.build_program(d, kind, false).unwrap());
            assert!(a.is_optimal() && b.is_optimal());
            assert_eq!(a.value, b.value, "{kind} d={d}");
        }
    }
}

#[test]
fn bounds_are_monotone() {
    let table = BoundPipeline::default()
        .bounds_table(12, ProgramKind::Reduced, Execution::Parallel)
        .unwrap();
    assert!(table.windows(2).all(|w| w[0].our_bound <= w[1].our_bound));
}

#[test]
fn witnesses_are_feasible_far_out() {
    let p = BoundPipeline::default();
    for d in [1, 2, 13, 20, 30] {
        for kind in [ProgramKind::Reduced, ProgramKind::General] {
            let lp = p.build_program(d, kind, true).unwrap();
            assert!(lp.is_feasible(&p.feasible_witness(d, kind)), "{kind} d={d}");
        }
    }
    let r = p.cover_lower_bound(20, ProgramKind::Reduced).unwrap();
    assert!(r.asymptotic_v);
    assert!(!p.cover_lower_bound(13, ProgramKind::Reduced).unwrap().asymptotic_v);
}
