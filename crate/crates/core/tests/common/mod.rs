#![allow(dead_code)]

use perturbed_hardy::circle::expr::Expr;
use perturbed_hardy::circle::{CircleGrid, MassSet, SymbolData};
use perturbed_hardy::spaces::SpaceData;
use perturbed_hardy::C64;

/// A test dataset: symbol expression in `t` plus point masses.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub name: &'static str,
    pub symbol: &'static str,
    pub masses: Vec<(C64, f64)>,
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

impl Dataset {
    pub fn space(&self, grid_size: usize) -> SpaceData {
        let grid = CircleGrid::new(grid_size).unwrap();
        let symbol = SymbolData::from_expression(&grid, self.symbol).unwrap();
        SpaceData::new(symbol, self.mass_set())
    }

    pub fn mass_set(&self) -> MassSet {
        MassSet::new(self.masses.iter().map(|m| m.0).collect(), self.masses.iter().map(|m| m.1).collect()).unwrap()
    }

    pub fn points(&self) -> Vec<C64> {
        self.masses.iter().map(|m| m.0).collect()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.masses.iter().map(|m| m.1).collect()
    }

    /// The symbol as a function, evaluated pointwise rather than from grid data.
    pub fn symbol_fn(&self) -> impl Fn(C64) -> C64 {
        let e = Expr::parse(self.symbol).unwrap();
        move |t| e.eval(t)
    }
}

pub fn mass_only() -> Dataset {
    Dataset { name: "mass", symbol: "0", masses: vec![(c(0.5, 0.0), 3.0)] }
}

pub fn hankel_only() -> Dataset {
    Dataset { name: "hankel", symbol: "0.6*conj(t)", masses: vec![] }
}

pub fn two_masses() -> Dataset {
    Dataset { name: "two-mass", symbol: "0", masses: vec![(c(0.5, 0.0), 3.0), (c(1.0 / 3.0, 0.0), 1.0)] }
}

pub fn classical() -> Dataset {
    Dataset { name: "classical", symbol: "0", masses: vec![] }
}

pub fn mixed() -> Vec<Dataset> {
    vec![
        Dataset {
            name: "mix1",
            symbol: "0.5*conj(t)/(1-0.3*conj(t))",
            masses: vec![(c(0.5, 0.0), 1.0), (c(-0.3, 0.2), 2.0)],
        },
        Dataset {
            name: "mix2",
            symbol: "0.4*conj(t)^2+0.2*t",
            masses: vec![(c(0.0, 0.4), 0.5), (c(0.25, 0.0), 1.5)],
        },
        Dataset {
            name: "mix3",
            symbol: "(0.3+0.3i)*conj(t)/(1-0.4*t)",
            masses: vec![(c(0.5, 0.0), 3.0), (c(1.0 / 3.0, 0.0), 1.0)],
        },
        Dataset {
            name: "mix4",
            symbol: "0.6*conj(t)*(1+0.2*conj(t))",
            masses: vec![(c(0.3, -0.3), 1.0), (c(0.55, 0.0), 0.7), (c(0.0, -0.45), 2.5)],
        },
        Dataset {
            name: "mix5",
            symbol: "0.45*conj(t)^2/(1+0.25*conj(t)^2)+0.1*t",
            masses: vec![(c(0.0, 0.6), 0.8), (c(-0.5, 0.0), 1.2)],
        },
    ]
}

/// Every dataset of the corpus.
pub fn corpus() -> Vec<Dataset> {
    let mut all = vec![mass_only(), hankel_only(), two_masses(), classical()];
    all.extend(mixed());
    all
}

/// Largest modulus over matrix entries (or any sequence of complex values).
pub fn max_abs<'a>(m: impl IntoIterator<Item = &'a C64>) -> f64 {
    m.into_iter().map(|c| c.norm()).fold(0.0, f64::max)
}
