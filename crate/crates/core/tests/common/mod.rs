pub mod lp_corpus;
