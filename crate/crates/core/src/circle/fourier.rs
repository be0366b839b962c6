use crate::C64;

/// A finite two-sided sequence of Fourier coefficients `c_p`, stored for
/// indices `lo ..= lo + len - 1`. Indices outside the stored band read as zero.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoeffs {
    lo: i64,
    values: Vec<C64>,
}

impl FourierCoeffs {
    pub fn new(lo: i64, values: Vec<C64>) -> Self {
        Self { lo, values }
    }

    pub fn zeros(lo: i64, hi: i64) -> Self {
        let len = (hi - lo + 1).max(0) as usize;
        Self { lo, values: vec![C64::new(0.0, 0.0); len] }
    }

    /// Builds a sequence from sparse `(index, value)` pairs. Repeated indices add.
    pub fn from_pairs(pairs: &[(i64, C64)]) -> Self {
        if pairs.is_empty() {
            return Self::new(0, Vec::new());
        }
        let lo = pairs.iter().map(|p| p.0).min().unwrap();
        let hi = pairs.iter().map(|p| p.0).max().unwrap();
        let mut out = Self::zeros(lo, hi);
        for &(p, c) in pairs {
            out.values[(p - lo) as usize] += c;
        }
        out
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest stored index (`lo - 1` when empty).
    pub fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64 - 1
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn get(&self, p: i64) -> C64 {
        if p < self.lo || p > self.hi() {
            return C64::new(0.0, 0.0);
        }
        self.values[(p - self.lo) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        self.values.iter().enumerate().map(move |(i, &c)| (self.lo + i as i64, c))
    }

    /// Coefficients of `z^n · f`, i.e. `c'_p = c_{p-n}`.
    pub fn shifted(&self, n: i64) -> Self {
        Self { lo: self.lo + n, values: self.values.clone() }
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self { lo: self.lo, values: self.values.iter().map(|&c| c * factor).collect() }
    }

    /// Restriction to the indices `lo ..= hi`.
    pub fn band(&self, lo: i64, hi: i64) -> Self {
        let values = (lo..=hi).map(|p| self.get(p)).collect();
        Self { lo, values }
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `sqrt(Σ_{p<0} |c_p|²)`.
    pub fn antianalytic_norm(&self) -> f64 {
        self.iter().filter(|(p, _)| *p < 0).map(|(_, c)| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `sqrt(Σ_{p≥0} |c_p|²)`.
    pub fn analytic_norm(&self) -> f64 {
        self.iter().filter(|(p, _)| *p >= 0).map(|(_, c)| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_below(&self, index: i64) -> f64 {
        self.iter().filter(|(p, _)| *p < index).map(|(_, c)| c.norm()).fold(0.0, f64::max)
    }

    /// Evaluates `Σ_{p≥0} c_p z^p` by Horner's rule, ignoring negative indices.
    pub fn eval_analytic(&self, z: C64) -> C64 {
        let hi = self.hi();
        if hi < 0 {
            return C64::new(0.0, 0.0);
        }
        let mut acc = C64::new(0.0, 0.0);
        for p in (0.max(self.lo)..=hi).rev() {
            acc = acc * z + self.get(p);
        }
        if self.lo > 0 {
            acc *= z.powi(self.lo as i32);
        }
        acc
    }

    /// Evaluates the full Laurent sum `Σ c_p z^p` (requires `z ≠ 0` when
    /// negative indices carry nonzero coefficients).
    pub fn eval(&self, z: C64) -> C64 {
        self.iter().map(|(p, c)| c * z.powi(p as i32)).sum()
    }
}
