use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use perturbed_hardy::circle::{validate_szego, CircleGrid, MassSet, SymbolData};
use perturbed_hardy::duality::MassConvention;
use perturbed_hardy::spaces::SpaceData;
use perturbed_hardy::{Tolerances, C64};

use crate::error::CliError;

/// How the symbol `R` is given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SymbolSpec {
    /// Fourier coefficients `r_p`.
    Coefficients(Vec<CoefficientSpec>),
    /// Expression in `t` and `conj(t)`, e.g. `0.5*conj(t)/(1-0.3*conj(t))`.
    Expression(String),
    /// CSV file with columns `re,im`, one row per equispaced node starting at `t = 1`.
    Samples(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientSpec {
    pub index: i64,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassSpec {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
    pub weight: f64,
}

/// Parameter sweeps of the convergence study; each non-empty list needs two or more values.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConvergenceSpec {
    pub grids: Vec<usize>,
    pub degrees: Vec<usize>,
    pub rho: Vec<f64>,
    pub cutoffs: Vec<usize>,
}

impl ConvergenceSpec {
    fn is_empty(&self) -> bool {
        self.grids.is_empty() && self.degrees.is_empty() && self.rho.is_empty() && self.cutoffs.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StudyKind {
    Asymptotics,
    Duality,
    Sandwich,
    Theorem,
    Unitarity,
    Orthonormal,
    Convergence,
}

impl StudyKind {
    pub fn name(self) -> &'static str {
        match self {
            StudyKind::Asymptotics => "asymptotics",
            StudyKind::Duality => "duality",
            StudyKind::Sandwich => "sandwich",
            StudyKind::Theorem => "theorem",
            StudyKind::Unitarity => "unitarity",
            StudyKind::Orthonormal => "orthonormal",
            StudyKind::Convergence => "convergence",
        }
    }
}

fn default_name() -> String {
    "experiment".into()
}
fn default_grid() -> usize {
    4096
}
fn default_degree() -> usize {
    48
}
fn default_n_range() -> [i64; 2] {
    [0, 16]
}
fn default_rho() -> Vec<f64> {
    vec![0.5, 0.9]
}
fn default_shifts() -> Vec<i64> {
    vec![0, 1, 3]
}
fn default_orthonormal_range() -> [i64; 2] {
    [0, 8]
}
fn default_random_vectors() -> usize {
    20
}
fn default_random_band() -> usize {
    16
}
fn default_half_band() -> usize {
    32
}
fn default_conv_tol() -> f64 {
    1e-3
}
fn default_monotone_from() -> i64 {
    4
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "default_name")]
    pub name: String,
    pub symbol: SymbolSpec,
    #[serde(default)]
    pub masses: Vec<MassSpec>,
    #[serde(default = "default_grid")]
    pub grid: usize,
    /// Truncation degree `M` of the analytic basis.
    #[serde(default = "default_degree")]
    pub degree: usize,
    /// Hankel truncation `J`; `grid/2 - M` when absent.
    #[serde(default)]
    pub hankel: Option<usize>,
    /// Inclusive range of shifts for the asymptotic sweep.
    #[serde(default = "default_n_range")]
    pub n_range: [i64; 2],
    /// Scalings `ρ` for the sandwich study.
    #[serde(default = "default_rho")]
    pub rho: Vec<f64>,
    /// Mass cutoffs `N` for the sandwich study; all proper truncations when empty.
    #[serde(default)]
    pub cutoffs: Vec<usize>,
    #[serde(default = "default_shifts")]
    pub sandwich_shifts: Vec<i64>,
    #[serde(default = "default_orthonormal_range")]
    pub orthonormal_range: [i64; 2],
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub convention: MassConvention,
    pub studies: Vec<StudyKind>,
    /// Seed of the random test vectors in the unitarity study.
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_random_vectors")]
    pub random_vectors: usize,
    /// Laurent band `-b ..= b` of the random test vectors.
    #[serde(default = "default_random_band")]
    pub random_band: usize,
    /// Laurent half-band of the theorem check.
    #[serde(default = "default_half_band")]
    pub half_band: usize,
    /// Overrides the thresholds of all residual gates.
    #[serde(default)]
    pub tol_gate: Option<f64>,
    /// `|K - 1|` threshold of the asymptotic sweep.
    #[serde(default = "default_conv_tol")]
    pub conv_tol: f64,
    /// First shift of the monotone-tail check.
    #[serde(default = "default_monotone_from")]
    pub monotone_from: i64,
    #[serde(default)]
    pub convergence: ConvergenceSpec,
    #[serde(default)]
    pub out: Option<PathBuf>,
}

/// Command-line overrides applied on top of a parsed configuration.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub grid: Option<usize>,
    pub degree: Option<usize>,
    pub convention: Option<MassConvention>,
    pub tol_gate: Option<f64>,
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<(Self, PathBuf), CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok((Self::from_json(&text)?, base))
    }

    pub fn apply(&mut self, o: &Overrides) {
        if let Some(g) = o.grid {
            self.grid = g;
        }
        if let Some(d) = o.degree {
            self.degree = d;
        }
        if let Some(c) = o.convention {
            self.convention = c;
        }
        if let Some(t) = o.tol_gate {
            self.tol_gate = Some(t);
        }
        if let Some(out) = &o.out {
            self.out = Some(out.clone());
        }
    }

    /// Convergence sweeps, with defaults filled in when none were given.
    pub fn convergence_sweeps(&self) -> ConvergenceSpec {
        if !self.convergence.is_empty() {
            return self.convergence.clone();
        }
        let grids = [256, 512, 1024, 2048, 4096].into_iter().filter(|&g| g <= self.grid && g > 2 * self.degree).collect();
        let degrees = [4, 8, 16, 32, 48].into_iter().filter(|&d| d <= self.degree).collect();
        let cutoffs = if self.masses.len() >= 2 { (1..=self.masses.len()).collect() } else { Vec::new() };
        ConvergenceSpec { grids, degrees, rho: vec![0.9, 0.99, 0.999], cutoffs }
    }

    pub fn sandwich_cutoffs(&self) -> Vec<usize> {
        if self.cutoffs.is_empty() {
            (0..self.masses.len().max(1)).collect()
        } else {
            self.cutoffs.clone()
        }
    }

    /// Range checks that need no numerical work beyond sampling the symbol.
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: String| Err(CliError::Config(m));
        if self.studies.is_empty() {
            return bad("no studies requested".into());
        }
        if !self.grid.is_power_of_two() || self.grid < 8 {
            return bad(format!("grid {} must be a power of two >= 8", self.grid));
        }
        if self.degree == 0 || 2 * self.degree >= self.grid {
            return bad(format!("degree {} must be in 1..{}", self.degree, self.grid / 2));
        }
        if 2 * self.half_band >= self.grid || self.half_band == 0 {
            return bad(format!("half_band {} must be in 1..{}", self.half_band, self.grid / 2));
        }
        if self.hankel == Some(0) {
            return bad("hankel truncation must be at least 1".into());
        }
        let [lo, hi] = self.n_range;
        if lo < 0 || hi < lo || hi < 1 {
            return bad(format!("n_range [{lo}, {hi}] must satisfy 0 <= lo <= hi, hi >= 1"));
        }
        let [olo, ohi] = self.orthonormal_range;
        if ohi < olo {
            return bad(format!("orthonormal_range [{olo}, {ohi}] is empty"));
        }
        if olo < 0 && (-olo) as usize + self.degree >= self.grid / 2 {
            return bad("orthonormal_range reaches outside the grid band".into());
        }
        if self.rho.iter().any(|r| !(*r > 0.0 && *r <= 1.0)) {
            return bad("every rho must lie in (0, 1]".into());
        }
        if self.cutoffs.iter().any(|&n| n > self.masses.len()) {
            return bad(format!("cutoffs must not exceed the {} masses", self.masses.len()));
        }
        if self.random_vectors == 0 || self.random_band == 0 || 2 * self.random_band >= self.grid {
            return bad("random_vectors and random_band must be positive and fit the grid".into());
        }
        if self.tol_gate.is_some_and(|t| !(t > 0.0)) {
            return bad("tol_gate must be positive".into());
        }
        if !(self.conv_tol > 0.0) {
            return bad("conv_tol must be positive".into());
        }
        if self.masses.iter().any(|m| !(m.weight > 0.0 && m.weight.is_finite())) {
            return bad("mass weights must be positive and finite".into());
        }
        if self.studies.contains(&StudyKind::Convergence) {
            let c = self.convergence_sweeps();
            for (name, len) in [("grids", c.grids.len()), ("degrees", c.degrees.len()), ("rho", c.rho.len()), ("cutoffs", c.cutoffs.len())] {
                if len == 1 {
                    return bad(format!("convergence sweep '{name}' needs at least two values"));
                }
            }
            if c.grids.is_empty() && c.degrees.is_empty() && c.rho.is_empty() && c.cutoffs.is_empty() {
                return bad("convergence study has nothing to sweep".into());
            }
            if c.grids.iter().any(|&g| !g.is_power_of_two() || g <= 2 * self.degree) {
                return bad(format!("convergence grids must be powers of two above {}", 2 * self.degree));
            }
            if c.degrees.iter().any(|&d| d == 0 || 2 * d >= self.grid) {
                return bad("convergence degrees must fit the grid".into());
            }
            if c.rho.iter().any(|r| !(*r > 0.0 && *r <= 1.0)) || c.cutoffs.iter().any(|&n| n > self.masses.len()) {
                return bad("convergence rho/cutoffs out of range".into());
            }
        }
        Ok(())
    }

    pub fn mass_set(&self) -> Result<MassSet, CliError> {
        MassSet::new(
            self.masses.iter().map(|m| C64::new(m.re, m.im)).collect(),
            self.masses.iter().map(|m| m.weight).collect(),
        )
        .map_err(CliError::core("masses"))
    }

    /// Samples the symbol on a grid of the given size.
    pub fn symbol_on(&self, size: usize, base_dir: &Path) -> Result<SymbolData, CliError> {
        let grid = CircleGrid::new(size).map_err(CliError::core("grid"))?;
        match &self.symbol {
            SymbolSpec::Coefficients(cs) => {
                let pairs: Vec<(i64, C64)> = cs.iter().map(|c| (c.index, C64::new(c.re, c.im))).collect();
                SymbolData::from_coefficients(&grid, &pairs).map_err(CliError::core("symbol coefficients"))
            }
            SymbolSpec::Expression(e) => SymbolData::from_expression(&grid, e).map_err(CliError::core("symbol expression")),
            SymbolSpec::Samples(path) => {
                let path = if path.is_absolute() { path.clone() } else { base_dir.join(path) };
                let values = read_samples(&path)?;
                if !values.len().is_power_of_two() || values.len() < 8 {
                    return Err(CliError::Config(format!("{} holds {} samples, need a power of two >= 8", path.display(), values.len())));
                }
                let source = CircleGrid::new(values.len()).map_err(CliError::core("sample grid"))?;
                SymbolData::from_values(&source, values)
                    .and_then(|s| s.regrid(&grid))
                    .map_err(CliError::core("symbol samples"))
            }
        }
    }

    /// Builds the space on a grid of the given size, rejecting non-contractive symbols.
    pub fn space_on(&self, size: usize, base_dir: &Path) -> Result<SpaceData, CliError> {
        let symbol = self.symbol_on(size, base_dir)?;
        validate_szego(&symbol, &self.tolerances).map_err(CliError::core("symbol"))?;
        Ok(SpaceData::new(symbol, self.mass_set()?))
    }

    /// Residual-gate threshold: `tol_gate` when set, otherwise `default`.
    pub fn gate(&self, default: f64) -> f64 {
        self.tol_gate.unwrap_or(default)
    }
}

fn read_samples(path: &Path) -> Result<Vec<C64>, CliError> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    #[derive(Deserialize)]
    struct Row {
        re: f64,
        im: f64,
    }
    reader
        .deserialize::<Row>()
        .map(|r| r.map(|r| C64::new(r.re, r.im)).map_err(|e| CliError::Config(format!("{}: {e}", path.display()))))
        .collect()
}
