//! Ground truth and bulk checking: exhaustive oracles for tiny graphs,
//! exhaustive Ramsey search over colorings of small `K_N`, and seeded
//! random campaigns over the extractors.

mod campaign;
mod oracle;
mod search;

pub use campaign::{
    default_vertices, random_campaign, trial_coloring, CampaignConfig, CampaignMode, CampaignReport, TrialFailure,
};
pub use oracle::{oracle_clique, oracle_fan, oracle_max_matching, ORACLE_MAX_VERTICES};
pub use search::{
    ramsey_check, threads_from_env, SearchOptions, SearchResult, SearchStats, Target, Verdict,
    DEFAULT_MAX_VERTICES,
};
