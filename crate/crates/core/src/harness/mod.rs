//! Corpus orchestration, bound comparison and reporting.

mod config;
mod corpus;
mod report;

pub use config::{CorpusSource, RunConfig, ALL_MIN_D_DEFAULT_LIMIT, SAFE_PRODUCT_LIMIT};
pub use corpus::{
    load_corpus, rank_records, run_corpus, search_extremal, verify_pair, CorpusRun, CorpusSummary, Extremal,
    PairVerification, RankedInstance,
};
pub use report::{emit_report, load_json_report, BoundReport, InstanceRecord, Ratio, ReportFormat, CSV_HEADER};
