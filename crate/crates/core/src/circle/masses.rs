use crate::{Error, Result, C64};

/// Points `ζ_k` of the open unit disk with positive weights `ν_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MassSet {
    points: Vec<C64>,
    weights: Vec<f64>,
    blaschke_sum: f64,
    has_origin: bool,
}

/// Points closer than this are considered the same point.
const COINCIDENCE: f64 = 1e-12;

impl MassSet {
    pub fn new(points: Vec<C64>, weights: Vec<f64>) -> Result<Self> {
        if points.len() != weights.len() {
            return Err(Error::InvalidMass(format!("{} points but {} weights", points.len(), weights.len())));
        }
        for (k, (z, w)) in points.iter().zip(&weights).enumerate() {
            if !(z.norm() < 1.0) {
                return Err(Error::InvalidMass(format!("point {k} has modulus {} ≥ 1", z.norm())));
            }
            if !(*w > 0.0) || !w.is_finite() {
                return Err(Error::InvalidMass(format!("weight {k} = {w} is not a positive number")));
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if (points[i] - points[j]).norm() < COINCIDENCE {
                    return Err(Error::DuplicatePoint { first: i, second: j });
                }
            }
        }
        let blaschke_sum = points.iter().map(|z| 1.0 - z.norm()).sum();
        let has_origin = points.iter().any(|z| z.norm() == 0.0);
        if has_origin {
            log::warn!("mass set contains the origin; negative shifts and the duality identity are unavailable");
        }
        Ok(Self { points, weights, blaschke_sum, has_origin })
    }

    pub fn empty() -> Self {
        Self { points: Vec::new(), weights: Vec::new(), blaschke_sum: 0.0, has_origin: false }
    }

    pub fn single(point: C64, weight: f64) -> Result<Self> {
        Self::new(vec![point], vec![weight])
    }

    pub fn points(&self) -> &[C64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Σ (1 - |ζ_k|)`.
    pub fn blaschke_sum(&self) -> f64 {
        self.blaschke_sum
    }

    pub fn has_origin(&self) -> bool {
        self.has_origin
    }

    /// The first `n` masses (the finite truncation `ν^N`).
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.len());
        Self::new(self.points[..n].to_vec(), self.weights[..n].to_vec()).expect("subset of a valid mass set")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_inputs() {
        let half = C64::new(0.5, 0.0);
        assert!(MassSet::new(vec![half], vec![0.0]).is_err());
        assert!(MassSet::new(vec![C64::new(1.0, 0.0)], vec![1.0]).is_err());
        assert!(MassSet::new(vec![half, half], vec![1.0, 2.0]).is_err());
        assert!(MassSet::new(vec![half], vec![1.0, 2.0]).is_err());
        let m = MassSet::new(vec![half, C64::new(0.0, 0.25)], vec![3.0, 1.0]).unwrap();
        assert!((m.blaschke_sum() - 1.25).abs() < 1e-15);
        assert!(!m.has_origin());
        assert_eq!(m.truncated(1).len(), 1);
        assert!(MassSet::single(C64::new(0.0, 0.0), 1.0).unwrap().has_origin());
    }
}
