use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::enumerate::{DEFAULT_ENUMERATION_CAP, HARD_ENUMERATION_LIMIT};
use crate::error::{Error, Result};

/// Largest product allowed without `unsafe_caps`.
pub const SAFE_PRODUCT_LIMIT: usize = 30;

/// Products up to this size have every minimum dominating set checked when
/// `all_min_d` is on.
pub const ALL_MIN_D_DEFAULT_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusSource {
    /// Every connected graph up to the caps, one per isomorphism class.
    BuiltIn,
    /// Graphs read from a graph6 file; used for both factors.
    Graph6File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub max_ng: usize,
    pub max_nh: usize,
    pub corpus_source: CorpusSource,
    /// Run the pipeline on every minimum dominating set of small products.
    pub all_min_d: bool,
    pub all_min_d_limit: usize,
    pub order_shuffle_seed: Option<u64>,
    /// Embed proof traces in the JSON report.
    pub embed_traces: bool,
    pub out_dir: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub unsafe_caps: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_ng: 6,
            max_nh: 4,
            corpus_source: CorpusSource::BuiltIn,
            all_min_d: false,
            all_min_d_limit: ALL_MIN_D_DEFAULT_LIMIT,
            order_shuffle_seed: None,
            embed_traces: false,
            out_dir: None,
            jobs: None,
            unsafe_caps: false,
        }
    }
}

impl RunConfig {
    pub fn with_caps(max_ng: usize, max_nh: usize) -> Self {
        RunConfig {
            max_ng,
            max_nh,
            ..RunConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_ng == 0 || self.max_nh == 0 {
            return Err(Error::Config("corpus caps must be at least 1".into()));
        }
        let (factor_cap, product_cap) = if self.unsafe_caps {
            (HARD_ENUMERATION_LIMIT, crate::bitset::MAX_VERTICES)
        } else {
            (DEFAULT_ENUMERATION_CAP, SAFE_PRODUCT_LIMIT)
        };
        if self.max_ng > factor_cap || self.max_nh > factor_cap {
            return Err(Error::Config(format!(
                "factor caps ({}, {}) exceed {factor_cap}{}",
                self.max_ng,
                self.max_nh,
                if self.unsafe_caps {
                    ""
                } else {
                    "; pass --unsafe-caps to go further"
                }
            )));
        }
        if self.max_ng * self.max_nh > product_cap {
            return Err(Error::Config(format!(
                "products of up to {} vertices exceed {product_cap}{}",
                self.max_ng * self.max_nh,
                if self.unsafe_caps {
                    ""
                } else {
                    "; pass --unsafe-caps to go further"
                }
            )));
        }
        if self.all_min_d_limit > crate::domination::ALL_MINIMUM_LIMIT {
            return Err(Error::Config(format!(
                "all-minimum-D limit {} exceeds {}",
                self.all_min_d_limit,
                crate::domination::ALL_MINIMUM_LIMIT
            )));
        }
        if self.jobs == Some(0) {
            return Err(Error::Config("jobs must be positive".into()));
        }
        Ok(())
    }
}
