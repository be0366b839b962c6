use rayon::prelude::*;
use serde_json::json;

use perturbed_hardy::duality::{duality_identity, DualData};
use perturbed_hardy::kernels::kernel_value;
use perturbed_hardy::spaces::SpaceData;

use super::Context;
use crate::error::CliError;
use crate::report::{real, Gate, StudyOutput, Table};

const STUDY: &str = "convergence";

/// Residuals below this are treated as converged to rounding level.
pub const PLATEAU_FLOOR: f64 = 64.0 * f64::EPSILON;

/// Whether a residual sequence improves under refinement: every step may at
/// most double the previous value (or the floor, once there), and the last
/// value must not exceed the first.
pub fn refinement_monotone(residuals: &[f64]) -> bool {
    let (Some(first), Some(last)) = (residuals.first(), residuals.last()) else {
        return true;
    };
    residuals.windows(2).all(|w| w[1] <= 2.0 * w[0].max(PLATEAU_FLOOR)) && *last <= first.max(PLATEAU_FLOOR)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Sweep {
    Grid(usize),
    Degree(usize),
    Rho(f64),
    Cutoff(usize),
}

impl Sweep {
    fn name(self) -> &'static str {
        match self {
            Sweep::Grid(_) => "grid",
            Sweep::Degree(_) => "degree",
            Sweep::Rho(_) => "rho",
            Sweep::Cutoff(_) => "cutoff",
        }
    }

    fn value(self) -> String {
        match self {
            Sweep::Grid(v) | Sweep::Degree(v) | Sweep::Cutoff(v) => v.to_string(),
            Sweep::Rho(r) => real(r),
        }
    }
}

struct Point {
    sweep: Sweep,
    identity_residual: f64,
    kernel: f64,
    shifted_distance: f64,
}

fn evaluate(ctx: &Context, sweep: Sweep) -> Result<Point, CliError> {
    let c = ctx.config;
    let (space, degree): (SpaceData, usize) = match sweep {
        Sweep::Grid(g) => (c.space_on(g, ctx.base_dir)?, c.degree),
        Sweep::Degree(d) => (ctx.space.clone(), d),
        Sweep::Rho(r) => (ctx.space.with_rho(r).map_err(CliError::core("rho"))?, c.degree),
        Sweep::Cutoff(n) => (ctx.space.with_cutoff(n).map_err(CliError::core("cutoff"))?, c.degree),
    };
    let hankel = if matches!(sweep, Sweep::Grid(_) | Sweep::Degree(_)) { None } else { c.hankel };
    let tol = ctx.tol();
    let dual = DualData::from_space(&space, c.convention, tol).map_err(CliError::core("dual data"))?;
    let id = duality_identity(&space, &dual, degree, hankel, tol).map_err(CliError::core("duality identity"))?;
    let kernel = kernel_value(&space, degree, hankel, tol).map_err(CliError::core("kernel"))?;
    let shifted = kernel_value(&space.shifted(c.n_range[1]), degree, hankel, tol).map_err(CliError::core("kernel"))?;
    Ok(Point { sweep, identity_residual: id.residual, kernel, shifted_distance: (shifted - 1.0).abs() })
}

/// Identity residual and kernel values under grid/degree refinement and the `ρ`/`N` regularizations.
pub fn run(ctx: &Context) -> Result<StudyOutput, CliError> {
    let c = ctx.config;
    let spec = c.convergence_sweeps();
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    let mut rho = spec.rho.clone();
    rho.sort_by(f64::total_cmp);
    let sweeps: Vec<Sweep> = sorted(spec.grids)
        .into_iter()
        .map(Sweep::Grid)
        .chain(sorted(spec.degrees).into_iter().map(Sweep::Degree))
        .chain(rho.into_iter().map(Sweep::Rho))
        .chain(sorted(spec.cutoffs).into_iter().map(Sweep::Cutoff))
        .collect();
    let points = sweeps.par_iter().map(|&s| evaluate(ctx, s)).collect::<Result<Vec<_>, _>>()?;
    let reference = kernel_value(&ctx.space, c.degree, c.hankel, ctx.tol()).map_err(CliError::core("kernel"))?;

    let mut table = Table::new(STUDY, &["sweep", "value", "identity_residual", "kernel_at_zero", "shifted_distance_from_one"]);
    for p in &points {
        table.push(vec![p.sweep.name().into(), p.sweep.value(), real(p.identity_residual), real(p.kernel), real(p.shifted_distance)]);
    }
    let of = |name: &str| points.iter().filter(|p| p.sweep.name() == name).collect::<Vec<_>>();
    let slack = c.tolerances.order;
    let file = table.file_name();
    let mut gates = Vec::new();
    let mut flags = serde_json::Map::new();
    for name in ["grid", "degree"] {
        let residuals: Vec<f64> = of(name).iter().map(|p| p.identity_residual).collect();
        if residuals.len() >= 2 {
            let ok = refinement_monotone(&residuals);
            flags.insert(format!("{name}_refinement_monotone"), ok.into());
            gates.push(Gate::flag(STUDY, &format!("{name}_refinement_monotone"), ok, &file));
        }
    }
    let rho_points = of("rho");
    if rho_points.len() >= 2 {
        let ok = rho_points.windows(2).all(|w| w[1].kernel >= w[0].kernel - slack) && rho_points.iter().all(|p| p.kernel <= reference + slack);
        flags.insert("rho_increases_toward_full".into(), ok.into());
        gates.push(Gate::flag(STUDY, "rho_increases_toward_full", ok, &file));
    }
    let cut_points = of("cutoff");
    if cut_points.len() >= 2 {
        let ok = cut_points.windows(2).all(|w| w[1].kernel <= w[0].kernel + slack) && cut_points.iter().all(|p| p.kernel >= reference - slack);
        flags.insert("cutoff_decreases_toward_full".into(), ok.into());
        gates.push(Gate::flag(STUDY, "cutoff_decreases_toward_full", ok, &file));
    }
    let summary = json!({
        "points": points.len(),
        "reference_kernel_at_zero": reference,
        "plateau_floor": PLATEAU_FLOOR,
        "flags": flags,
    });
    Ok(StudyOutput { study: STUDY.into(), tables: vec![table], summary, gates })
}
