//! One module per study; each turns a prepared [`Context`] into tables, a JSON summary and gates.

use std::path::Path;

use perturbed_hardy::spaces::SpaceData;
use perturbed_hardy::Tolerances;

use crate::config::{ExperimentConfig, StudyKind};
use crate::error::CliError;
use crate::report::StudyOutput;

pub mod asymptotics;
pub mod convergence;
pub mod duality;
pub mod orthonormal;
pub mod sandwich;
pub mod theorem;
pub mod unitarity;

/// Validated configuration plus the space built from it.
#[derive(Debug, Clone)]
pub struct Context<'a> {
    pub config: &'a ExperimentConfig,
    pub base_dir: &'a Path,
    pub space: SpaceData,
}

impl<'a> Context<'a> {
    pub fn new(config: &'a ExperimentConfig, base_dir: &'a Path) -> Result<Self, CliError> {
        config.validate()?;
        let space = config.space_on(config.grid, base_dir)?;
        Ok(Self { config, base_dir, space })
    }

    pub fn tol(&self) -> &Tolerances {
        &self.config.tolerances
    }
}

pub fn run_study(kind: StudyKind, ctx: &Context) -> Result<StudyOutput, CliError> {
    match kind {
        StudyKind::Asymptotics => asymptotics::run(ctx),
        StudyKind::Duality => duality::run(ctx),
        StudyKind::Sandwich => sandwich::run(ctx),
        StudyKind::Theorem => theorem::run(ctx),
        StudyKind::Unitarity => unitarity::run(ctx),
        StudyKind::Orthonormal => orthonormal::run(ctx),
        StudyKind::Convergence => convergence::run(ctx),
    }
}
