//! The integral transformation machinery: certified monotone maps
//! `F(u) = ∫ζ du`, numerical inversion `ϑ → u`, reconstruction of
//! `u`-derivatives from `ϑ`-derivatives, and solution grids.

use crate::antideriv::Antiderivative;
use crate::bivar::{BivariateExpr, XtWindow};
use crate::expr::{Expr, FuncError, Interval};
use crate::rootfind::{brent, RootError};

pub const INVERT_TOL: f64 = 1e-12;
pub const MONOTONE_SAMPLES: usize = 100;
pub const ZETA_FLOOR: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TransformError {
    #[error("zeta changes sign or vanishes on the window at u = {u} (zeta = {zeta})")]
    NonMonotone { u: f64, zeta: f64 },
    #[error("target {target} outside map range [{lo}, {hi}]")]
    OutOfRange { target: f64, lo: f64, hi: f64 },
    #[error("target {target} at node (x = {x}, t = {t}) outside map range [{lo}, {hi}]")]
    OutOfRangeAt {
        target: f64,
        x: f64,
        t: f64,
        lo: f64,
        hi: f64,
    },
    #[error("|zeta(u)| = {zeta} below {ZETA_FLOOR} at u = {u}")]
    DegenerateZeta { u: f64, zeta: f64 },
    #[error("function evaluation failed: {0}")]
    Func(#[from] FuncError),
    #[error("root finding failed: {0}")]
    Root(#[from] RootError),
}

/// A strictly monotone anchored antiderivative of `ζ` over a `u`-window,
/// invertible by bracketed root finding.
#[derive(Clone)]
pub struct MonotoneMap {
    zeta: Expr,
    f: Antiderivative,
    u_window: Interval,
    range: Interval,
    /// Sign of `ζ` on the window: `+1.0` (increasing) or `-1.0`.
    direction: f64,
}

impl MonotoneMap {
    /// Certify monotonicity by sampling `ζ` at [`MONOTONE_SAMPLES`] points
    /// (all one sign, bounded away from zero), then record the range from the
    /// window endpoints.
    pub fn new(zeta: Expr, f: Antiderivative, u_window: Interval) -> Result<Self, TransformError> {
        let mut direction = 0.0;
        for u in u_window.linspace(MONOTONE_SAMPLES) {
            let z = zeta.eval_raw(u)?;
            if !z.is_finite() || z.abs() <= ZETA_FLOOR {
                return Err(TransformError::NonMonotone { u, zeta: z });
            }
            if direction == 0.0 {
                direction = z.signum();
            } else if z.signum() != direction {
                return Err(TransformError::NonMonotone { u, zeta: z });
            }
        }
        let f_lo = f.value(u_window.lo)?;
        let f_hi = f.value(u_window.hi)?;
        let range = if f_lo < f_hi {
            Interval::new(f_lo, f_hi)
        } else {
            Interval::new(f_hi, f_lo)
        };
        Ok(MonotoneMap {
            zeta,
            f,
            u_window,
            range,
            direction,
        })
    }

    pub fn zeta(&self) -> &Expr {
        &self.zeta
    }

    pub fn antiderivative(&self) -> &Antiderivative {
        &self.f
    }

    pub fn u_window(&self) -> Interval {
        self.u_window
    }

    pub fn range(&self) -> Interval {
        self.range
    }

    pub fn direction(&self) -> f64 {
        self.direction
    }

    pub fn value(&self, u: f64) -> Result<f64, TransformError> {
        Ok(self.f.value(u)?)
    }

    /// Solve `F(u) = target` for `u` to `|F(u) - target| <= 1e-12·max(1, |target|)`.
    pub fn invert(&self, target: f64) -> Result<f64, TransformError> {
        if !self.range.contains_closed(target) {
            return Err(TransformError::OutOfRange {
                target,
                lo: self.range.lo,
                hi: self.range.hi,
            });
        }
        let tol = INVERT_TOL * target.abs().max(1.0);
        let mut g = |u: f64| self.f.value(u).map(|v| v - target);
        let u = brent(&mut g, self.u_window.lo, self.u_window.hi, tol)?;
        Ok(u)
    }
}

/// `u_x = ϑ_x/ζ`, `u_t = ϑ_t/ζ`, `u_xx = ϑ_xx/ζ − ϑ_x² ζ'_u / ζ³`.
pub fn reconstruct_derivatives(
    zeta: &Expr,
    u: f64,
    theta_partials: (f64, f64, f64),
) -> Result<(f64, f64, f64), TransformError> {
    let (tt, tx, txx) = theta_partials;
    let z = zeta.eval_raw(u)?;
    if z.abs() < ZETA_FLOOR {
        return Err(TransformError::DegenerateZeta { u, zeta: z });
    }
    let zp = zeta.differentiate().eval_raw(u)?;
    let u_t = tt / z;
    let u_x = tx / z;
    let u_xx = txx / z - tx * tx * zp / (z * z * z);
    Ok((u_t, u_x, u_xx))
}

/// Dense rectangular sample of an implicit solution: `ϑ` evaluated and
/// inverted at every node.
#[derive(Clone)]
pub struct SolutionGrid {
    pub entry: String,
    pub instantiation_hash: String,
    pub x_nodes: Vec<f64>,
    pub t_nodes: Vec<f64>,
    /// Row-major `[t][x]`.
    pub theta: Vec<Vec<f64>>,
    pub u: Vec<Vec<f64>>,
}

impl SolutionGrid {
    pub fn nx(&self) -> usize {
        self.x_nodes.len()
    }

    pub fn nt(&self) -> usize {
        self.t_nodes.len()
    }

    pub fn dx(&self) -> f64 {
        self.x_nodes[1] - self.x_nodes[0]
    }

    pub fn dt(&self) -> f64 {
        self.t_nodes[1] - self.t_nodes[0]
    }

    /// CSV with header `x,t,theta,u`; row-major with x fastest; 17 significant
    /// digits so re-export is byte-identical.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,t,theta,u\n");
        for (it, &t) in self.t_nodes.iter().enumerate() {
            for (ix, &x) in self.x_nodes.iter().enumerate() {
                out.push_str(&format!(
                    "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                    x, t, self.theta[it][ix], self.u[it][ix]
                ));
            }
        }
        out
    }
}

/// Build a grid by inverting the map at every node of a uniform lattice.
pub fn solution_grid(
    map: &MonotoneMap,
    theta: &BivariateExpr,
    window: &XtWindow,
    nx: usize,
    nt: usize,
    entry: &str,
    instantiation_hash: &str,
) -> Result<SolutionGrid, TransformError> {
    let x_nodes = window.x.linspace(nx);
    let t_nodes = window.t.linspace(nt);
    let mut th = vec![vec![0.0; nx]; nt];
    let mut uu = vec![vec![0.0; nx]; nt];
    for (it, &t) in t_nodes.iter().enumerate() {
        for (ix, &x) in x_nodes.iter().enumerate() {
            let v = theta.eval_raw(x, t)?;
            let u = map.invert(v).map_err(|e| match e {
                TransformError::OutOfRange { target, lo, hi } => {
                    TransformError::OutOfRangeAt { target, x, t, lo, hi }
                }
                other => other,
            })?;
            th[it][ix] = v;
            uu[it][ix] = u;
        }
    }
    Ok(SolutionGrid {
        entry: entry.to_string(),
        instantiation_hash: instantiation_hash.to_string(),
        x_nodes,
        t_nodes,
        theta: th,
        u: uu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{constant, var};

    #[test]
    fn identity_map_inversion() {
        let map = MonotoneMap::new(
            constant(1.0),
            Antiderivative::new(constant(1.0), 0.0),
            Interval::new(-3.0, 3.0),
        )
        .unwrap();
        assert!((map.invert(2.5).unwrap() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn cubic_map_inversion() {
        // F(u) = u^3 on (0, 3): zeta = 3u^2
        let zeta = 3.0 * var().powf(2.0);
        let f = Antiderivative::with_closed(zeta.clone(), 0.0, var().powf(3.0));
        let map = MonotoneMap::new(zeta, f, Interval::new(0.01, 3.0)).unwrap();
        assert!((map.invert(8.0).unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn shifted_cosine_matches_bisection_oracle() {
        // zeta = 1 + sin u, F(u) = u + 1 - cos u on (0, 2), target 1.
        let zeta = 1.0 + var().sin();
        let f = Antiderivative::with_closed(zeta.clone(), 0.0, var() - var().cos());
        let map = MonotoneMap::new(zeta, f, Interval::new(0.0, 2.0)).unwrap();
        let got = map.invert(1.0).unwrap();

        let g = |u: f64| u + 1.0 - u.cos() - 1.0;
        let (mut lo, mut hi) = (0.0_f64, 2.0_f64);
        for _ in 0..64 {
            let mid = 0.5 * (lo + hi);
            if g(lo) * g(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        assert!((got - 0.5 * (lo + hi)).abs() < 1e-10);
    }

    #[test]
    fn out_of_range_rejected() {
        let map = MonotoneMap::new(
            constant(1.0),
            Antiderivative::new(constant(1.0), 0.0),
            Interval::new(0.0, 1.0),
        )
        .unwrap();
        let span = map.range().span();
        assert!(matches!(
            map.invert(map.range().hi + 0.01 * span),
            Err(TransformError::OutOfRange { .. })
        ));
        assert!(matches!(
            map.invert(map.range().lo - 0.01 * span),
            Err(TransformError::OutOfRange { .. })
        ));
    }

    #[test]
    fn sign_change_rejected() {
        // zeta = u changes sign on (-1, 1)
        let r = MonotoneMap::new(
            var(),
            Antiderivative::new(var(), 0.0),
            Interval::new(-1.0, 1.0),
        );
        assert!(matches!(r, Err(TransformError::NonMonotone { .. })));
    }

    #[test]
    fn derivative_reconstruction_formulas() {
        // zeta == 1: identity.
        let (ut, ux, uxx) =
            reconstruct_derivatives(&constant(1.0), 0.4, (3.0, 2.0, 1.0)).unwrap();
        assert_eq!((ut, ux, uxx), (3.0, 2.0, 1.0));

        // zeta(u) = u at u = 4, theta_x = 2 -> u_x = 0.5;
        // with theta_xx = 1: u_xx = 1/4 - 4*1/64 = 0.1875.
        let (_, ux, uxx) = reconstruct_derivatives(&var(), 4.0, (0.0, 2.0, 1.0)).unwrap();
        assert!((ux - 0.5).abs() < 1e-15);
        assert!((uxx - 0.1875).abs() < 1e-15);
    }

    #[test]
    fn degenerate_zeta_rejected() {
        let r = reconstruct_derivatives(&var(), 0.0, (1.0, 1.0, 1.0));
        assert!(matches!(r, Err(TransformError::DegenerateZeta { .. })));
    }
}
