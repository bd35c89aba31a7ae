use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;

use cubecover::bounds::{BoundRecord, BoundReport};

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn single(out: &mut impl Write, r: &BoundReport) -> Result<()> {
    writeln!(out, "dimension          {}", r.dim)?;
    writeln!(out, "program            {}", r.program)?;
    writeln!(out, "our bound          {}", r.our_bound)?;
    writeln!(out, "lp value           {}", r.lp_value)?;
    writeln!(out, "naive volume bound {}", r.naive_volume_bound)?;
    writeln!(out, "smith asymptotic   {}", r.smith_asymptotic)?;
    writeln!(out, "smith reference    {}", opt(r.reference_smith))?;
    writeln!(out, "hughes reference   {}", opt(r.reference_hughes))?;
    if r.asymptotic_v {
        writeln!(
            out,
            "note               asymptotic-V regime: V(d) beyond the exact table"
        )?;
    }
    Ok(())
}

fn table(out: &mut impl Write, reports: &[BoundReport]) -> Result<()> {
    let rows: Vec<[String; 7]> = reports
        .iter()
        .map(|r| {
            [
                format!("{}{}", r.dim, if r.asymptotic_v { "*" } else { "" }),
                r.our_bound.to_string(),
                r.lp_value.to_string(),
                r.naive_volume_bound.to_string(),
                r.smith_asymptotic.to_string(),
                opt(r.reference_smith),
                opt(r.reference_hughes),
            ]
        })
        .collect();
    let header = [
        "dim",
        "our_bound",
        "lp_value",
        "naive",
        "smith_asym",
        "smith_ref",
        "hughes_ref",
    ];
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in &rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for r in &rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    if reports.iter().any(|r| r.asymptotic_v) {
        writeln!(out, "* asymptotic-V regime: V(d) beyond the exact table")?;
    }
    Ok(())
}

/// Renders reports; `as_table` picks the tabular text layout and a JSON array.
pub fn reports(out: &mut impl Write, reports: &[BoundReport], format: Format, as_table: bool) -> Result<()> {
    let records: Vec<BoundRecord> = reports.iter().map(BoundRecord::from).collect();
    match format {
        Format::Text if as_table => table(out, reports)?,
        Format::Text => {
            for r in reports {
                single(out, r)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json if as_table => {
            serde_json::to_writer_pretty(&mut *out, &records)?;
            writeln!(out)?;
        }
        Format::Json => {
            for r in &records {
                serde_json::to_writer_pretty(&mut *out, r)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}
