//! The q-ary entropy function, its inverse on `[0, (q-1)/q]`, and the
//! relative-distance targets for rate-`1/l` quasi-cyclic and additive cyclic
//! codes.

use alloc::format;

use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Parameters shared by the bound computations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundQuery {
    pub q: u64,
    pub ell: u64,
    /// Absolute error allowed when inverting the entropy function.
    pub tolerance: f64,
}

impl BoundQuery {
    pub fn new(q: u64, ell: u64) -> Result<BoundQuery> {
        BoundQuery::with_tolerance(q, ell, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(q: u64, ell: u64, tolerance: f64) -> Result<BoundQuery> {
        if q < 2 {
            return Err(Error::Precondition(format!("alphabet size {q} must be at least 2")));
        }
        if ell < 2 {
            return Err(Error::DegreeTooSmall {
                degree: ell as usize,
                min: 2,
            });
        }
        if !(tolerance > 0.0 && tolerance < 1.0) {
            return Err(Error::Precondition(format!("tolerance {tolerance} must lie in (0, 1)")));
        }
        Ok(BoundQuery { q, ell, tolerance })
    }

    pub fn gv_targets(&self) -> Result<GvTargets> {
        let delta_qc = entropy_inv(self.q, 1.0 - 1.0 / self.ell as f64, self.tolerance)?;
        Ok(GvTargets {
            delta_qc,
            delta_add: delta_qc / self.ell as f64,
        })
    }
}

/// Relative distances guaranteed for rate `1/l`: `delta_qc` for the
/// quasi-cyclic ensemble and `delta_add = delta_qc / l` for its additive
/// cyclic image.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GvTargets {
    pub delta_qc: f64,
    pub delta_add: f64,
}

fn log_q(q: f64, x: f64) -> f64 {
    libm::log(x) / libm::log(q)
}

fn max_arg(q: u64) -> f64 {
    (q - 1) as f64 / q as f64
}

/// `H_q(y) = y log_q(q-1) - y log_q(y) - (1-y) log_q(1-y)` on
/// `[0, (q-1)/q]`, with `H_q(0) = 0` and `H_q((q-1)/q) = 1`.
pub fn entropy(q: u64, y: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::Precondition(format!("alphabet size {q} must be at least 2")));
    }
    let top = max_arg(q);
    if !(0.0..=top).contains(&y) {
        return Err(Error::Precondition(format!("argument {y} outside [0, {top}]")));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    if y == top {
        return Ok(1.0);
    }
    let qf = q as f64;
    Ok(y * log_q(qf, (q - 1) as f64) - y * log_q(qf, y) - (1.0 - y) * log_q(qf, 1.0 - y))
}

/// The `y` in `[0, (q-1)/q]` with `H_q(y) = t`, by bisection until the
/// bracket is narrower than `tolerance`.
pub fn entropy_inv(q: u64, t: f64, tolerance: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Precondition(format!("target {t} outside [0, 1]")));
    }
    let (mut lo, mut hi) = (0.0, max_arg(q));
    entropy(q, lo)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    if t == 1.0 {
        return Ok(hi);
    }
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if entropy(q, mid)? < t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `delta_qc = H_q^{-1}(1 - 1/l)` and `delta_add = delta_qc / l`.
pub fn gv_targets(q: u64, ell: u64) -> Result<GvTargets> {
    BoundQuery::new(q, ell)?.gv_targets()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy(2, 0.5).unwrap(), 1.0);
        assert_eq!(entropy(7, 0.0).unwrap(), 0.0);
        assert_eq!(entropy(4, 0.75).unwrap(), 1.0);
        assert!(entropy(2, 0.6).is_err());
        assert!(entropy(2, -0.1).is_err());
        assert!(entropy(1, 0.1).is_err());
        // Just inside the endpoint the formula agrees with the convention.
        assert!((entropy(4, 0.75 - 1e-9).unwrap() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(entropy_inv(2, 1.0, DEFAULT_TOLERANCE).unwrap(), 0.5);
        assert_eq!(entropy_inv(3, 0.0, DEFAULT_TOLERANCE).unwrap(), 0.0);
        assert!((entropy_inv(2, 0.5, DEFAULT_TOLERANCE).unwrap() - 0.110028).abs() < 1e-6);
        assert!(entropy_inv(2, 1.5, DEFAULT_TOLERANCE).is_err());
    }

    #[test]
    fn strictly_increasing_on_grid() {
        for q in [2u64, 3, 4, 5, 9] {
            let top = max_arg(q);
            let mut prev = -1.0;
            for i in 0..=1000 {
                let y = top * i as f64 / 1000.0;
                let h = entropy(q, y).unwrap();
                assert!(h > prev, "q={q} y={y}");
                prev = h;
            }
        }
    }

    #[test]
    fn targets() {
        let t = gv_targets(2, 2).unwrap();
        assert!((t.delta_qc - 0.110028).abs() < 1e-6);
        assert!((t.delta_add - 0.055014).abs() < 1e-6);
        for q in [2u64, 3, 4, 5] {
            let mut prev = 0.0;
            for l in 2..40 {
                let t = gv_targets(q, l).unwrap();
                assert!(t.delta_add < t.delta_qc);
                assert!(t.delta_qc > prev);
                assert!(t.delta_qc < max_arg(q));
                prev = t.delta_qc;
            }
        }
        assert!(gv_targets(2, 1).is_err());
        assert!(BoundQuery::with_tolerance(2, 2, 0.0).is_err());
    }
}
