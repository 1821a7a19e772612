//! Decision procedures, brute-force oracles and sweep campaigns.

mod campaigns;
mod exhaustive;
mod forcing;
mod progression;
mod sweeps;

pub use campaigns::*;
pub use exhaustive::{exhaustive_search, DEFAULT_BRUTE_FORCE_CAP};
pub use forcing::{forced_extension, Contradiction, ForcingOutcome};
pub use progression::*;
pub use sweeps::*;
