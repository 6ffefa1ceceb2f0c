//! Verification harness for the RM(r, m) one-step majority-logic decoder:
//! exhaustive and sampled campaigns, channel simulation, and reporting.

pub mod campaign;
pub mod io;
pub mod pattern;
pub mod report;
pub mod sim;

pub use campaign::{
    run_erasure_campaign, run_error_campaign, run_transversal_campaign, ErasureCampaign,
    ErrorCampaign, MessagePolicy, PatternMode, TransversalCampaign,
};
pub use report::CampaignReport;
pub use sim::{run_channel_sim, Channel, DecoderKind, SimCampaign};
