//! Run configuration shared by the subcommands.

use clap::ValueEnum;
use polyinv_core::filtration::FiltrationSpec;
use polyinv_core::poly::MonomialOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Iterative,
    Groebner,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InnerOrder {
    Lex,
    Grevlex,
}

impl InnerOrder {
    pub fn as_order(self) -> MonomialOrder {
        match self {
            InnerOrder::Lex => MonomialOrder::Lex,
            InnerOrder::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

/// Everything a single run needs besides its inputs. Budgets are `None`
/// when neither flag nor `POLYINV_MAX_DEG` overrode the engine defaults.
#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub filtration: FiltrationSpec,
    pub engine: Engine,
    pub format: OutputFormat,
    pub order: InnerOrder,
    pub budget: Option<u32>,
    pub max_degree: Option<u32>,
    pub verbose: bool,
}

impl SessionConfig {
    pub fn budget_override(explicit: Option<u32>) -> Option<u32> {
        explicit.or_else(|| {
            std::env::var("POLYINV_MAX_DEG")
                .ok()
                .and_then(|v| v.parse().ok())
        })
    }
}
