//! Reference numerical machinery: a conservative method-of-lines solver for
//! the equation class, an embedded Runge-Kutta integrator with dense output
//! for the auxiliary ODEs, and grid-refinement convergence studies.

use std::sync::Arc;

use crate::catalog::{self, Instance};
use crate::expr::{Expr, FuncError, Interval};
use crate::transform::TransformError;

#[derive(Debug, Clone, thiserror::Error)]
pub enum SolveError {
    #[error("state left the solution window (u = {u} at t = {t}); nonlinearity blow-up guard")]
    StabilityViolation { t: f64, u: f64 },
    #[error("ODE integration hit a singularity near x = {x}")]
    SingularityHit { x: f64 },
    #[error("time span [{t0}, {t1}] leaves the instance t-window")]
    TimeWindow { t0: f64, t1: f64 },
    #[error(transparent)]
    Func(#[from] FuncError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("{0}")]
    Catalog(String),
}

impl From<catalog::CatalogError> for SolveError {
    fn from(e: catalog::CatalogError) -> Self {
        SolveError::Catalog(e.to_string())
    }
}

// ---------------------------------------------------------------- aux ODEs

/// Auxiliary-ODE shapes the catalog needs (the paper's omega, xi, eta).
#[derive(Clone)]
pub enum AuxOdeKind {
    /// `(a w')' + p w' + q w + r = 0` in `x`.
    Linear2 { a: Expr, p: Expr, q: Expr, r: Expr },
    /// `(a w')' + k w^{n+1} = 0`.
    EmdenFowler { a: Expr, k: f64, n: f64 },
    /// `w w' + p(u) w + q(u) = 0` (first order, Abel of the second kind).
    Abel2 { p: Expr, q: Expr },
    /// `w'' = rhs(x, w, w')` for shapes outside the named kinds.
    General2 {
        rhs: Arc<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>,
    },
}

#[derive(Clone)]
pub struct AuxOdeSpec {
    pub kind: AuxOdeKind,
    pub interval: Interval,
    /// `(w(x0), Some(w'(x0)))` for second-order kinds; derivative ignored for
    /// first-order kinds. `x0 = interval.lo`.
    pub init: (f64, Option<f64>),
}

impl AuxOdeSpec {
    fn order(&self) -> usize {
        match self.kind {
            AuxOdeKind::Abel2 { .. } => 1,
            _ => 2,
        }
    }

    /// Residual of the governing equation at `x` given `(w, w', w'')`.
    pub fn residual(&self, x: f64, w: f64, wp: f64, wpp: f64) -> f64 {
        match &self.kind {
            AuxOdeKind::Linear2 { a, p, q, r } => {
                let av = a.eval_raw(x).unwrap_or(f64::NAN);
                let apv = a.differentiate().eval_raw(x).unwrap_or(f64::NAN);
                av * wpp
                    + apv * wp
                    + p.eval_raw(x).unwrap_or(f64::NAN) * wp
                    + q.eval_raw(x).unwrap_or(f64::NAN) * w
                    + r.eval_raw(x).unwrap_or(f64::NAN)
            }
            AuxOdeKind::EmdenFowler { a, k, n } => {
                let av = a.eval_raw(x).unwrap_or(f64::NAN);
                let apv = a.differentiate().eval_raw(x).unwrap_or(f64::NAN);
                av * wpp + apv * wp + k * w.powf(n + 1.0)
            }
            AuxOdeKind::Abel2 { p, q } => {
                w * wp
                    + p.eval_raw(x).unwrap_or(f64::NAN) * w
                    + q.eval_raw(x).unwrap_or(f64::NAN)
            }
            AuxOdeKind::General2 { rhs } => wpp - rhs(x, w, wp),
        }
    }

    fn deriv(&self, x: f64, y: &[f64], dy: &mut [f64]) {
        match &self.kind {
            AuxOdeKind::Linear2 { a, p, q, r } => {
                let av = a.eval_raw(x).unwrap_or(f64::NAN);
                let apv = a.differentiate().eval_raw(x).unwrap_or(f64::NAN);
                let pv = p.eval_raw(x).unwrap_or(f64::NAN);
                let qv = q.eval_raw(x).unwrap_or(f64::NAN);
                let rv = r.eval_raw(x).unwrap_or(f64::NAN);
                dy[0] = y[1];
                dy[1] = -((apv + pv) * y[1] + qv * y[0] + rv) / av;
            }
            AuxOdeKind::EmdenFowler { a, k, n } => {
                let av = a.eval_raw(x).unwrap_or(f64::NAN);
                let apv = a.differentiate().eval_raw(x).unwrap_or(f64::NAN);
                dy[0] = y[1];
                dy[1] = -(apv * y[1] + k * y[0].powf(n + 1.0)) / av;
            }
            AuxOdeKind::Abel2 { p, q } => {
                let pv = p.eval_raw(x).unwrap_or(f64::NAN);
                let qv = q.eval_raw(x).unwrap_or(f64::NAN);
                dy[0] = -pv - qv / y[0];
            }
            AuxOdeKind::General2 { rhs } => {
                dy[0] = y[1];
                dy[1] = rhs(x, y[0], y[1]);
            }
        }
    }
}

/// Dense-output solution: knot states plus knot derivatives, interpolated by
/// cubic Hermite segments per component.
pub struct DenseOutput {
    order: usize,
    xs: Vec<f64>,
    ys: Vec<Vec<f64>>,
    ds: Vec<Vec<f64>>,
}

impl DenseOutput {
    fn locate(&self, x: f64) -> usize {
        match self
            .xs
            .binary_search_by(|p| p.partial_cmp(&x).expect("finite knots"))
        {
            Ok(i) => i.min(self.xs.len() - 2),
            Err(i) => i.clamp(1, self.xs.len() - 1) - 1,
        }
    }

    fn hermite(&self, comp: usize, x: f64) -> (f64, f64) {
        let i = self.locate(x);
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let h = x1 - x0;
        let s = (x - x0) / h;
        let (y0, y1) = (self.ys[i][comp], self.ys[i + 1][comp]);
        let (d0, d1) = (self.ds[i][comp] * h, self.ds[i + 1][comp] * h);
        let h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        let h10 = s * (1.0 - s) * (1.0 - s);
        let h01 = s * s * (3.0 - 2.0 * s);
        let h11 = s * s * (s - 1.0);
        let value = h00 * y0 + h10 * d0 + h01 * y1 + h11 * d1;
        let dh00 = 6.0 * s * s - 6.0 * s;
        let dh10 = 3.0 * s * s - 4.0 * s + 1.0;
        let dh01 = -dh00;
        let dh11 = 3.0 * s * s - 2.0 * s;
        let deriv = (dh00 * y0 + dh10 * d0 + dh01 * y1 + dh11 * d1) / h;
        (value, deriv)
    }

    pub fn value(&self, x: f64) -> f64 {
        self.hermite(0, x).0
    }

    /// First derivative. For second-order systems this interpolates the
    /// stored `w'` component (which carries its own exact knot slopes).
    pub fn derivative(&self, x: f64) -> f64 {
        if self.order >= 2 {
            self.hermite(1, x).0
        } else {
            self.hermite(0, x).1
        }
    }

    /// Second derivative (second-order systems only), from the slope of the
    /// `w'` interpolant.
    pub fn second_derivative(&self, x: f64) -> f64 {
        assert!(self.order >= 2);
        self.hermite(1, x).1
    }
}

pub const ODE_RTOL: f64 = 1e-10;
pub const ODE_ATOL: f64 = 1e-10;

/// Dormand-Prince 5(4), adaptive with a max-step cap so dense output stays
/// accurate enough for residual checks.
pub fn integrate_aux_ode(spec: &AuxOdeSpec) -> Result<DenseOutput, SolveError> {
    let dim = spec.order();
    let x0 = spec.interval.lo;
    let x_end = spec.interval.hi;
    let span = x_end - x0;
    let h_max = span / 4096.0;
    let mut x = x0;
    let mut y = vec![spec.init.0];
    if dim == 2 {
        y.push(spec.init.1.unwrap_or(0.0));
    }
    let f = |x: f64, y: &[f64], dy: &mut [f64]| spec.deriv(x, y, dy);

    let mut k1 = vec![0.0; dim];
    f(x, &y, &mut k1);
    if k1.iter().any(|v| !v.is_finite()) {
        return Err(SolveError::SingularityHit { x });
    }
    let mut xs = vec![x];
    let mut ys = vec![y.clone()];
    let mut ds = vec![k1.clone()];
    let mut h = h_max;

    let stage = |x: f64,
                 y: &[f64],
                 h: f64,
                 k: &[Vec<f64>],
                 coefs: &[f64],
                 cfrac: f64,
                 f: &dyn Fn(f64, &[f64], &mut [f64])|
     -> Vec<f64> {
        let mut yt = y.to_vec();
        for (j, &c) in coefs.iter().enumerate() {
            if c != 0.0 {
                for i in 0..yt.len() {
                    yt[i] += h * c * k[j][i];
                }
            }
        }
        let mut out = vec![0.0; yt.len()];
        f(x + cfrac * h, &yt, &mut out);
        out
    };

    while x < x_end {
        if h < 1e-14 * span.abs().max(1.0) {
            return Err(SolveError::SingularityHit { x });
        }
        let h_try = h.min(x_end - x).min(h_max);
        let k = {
            let mut k = vec![k1.clone()];
            k.push(stage(x, &y, h_try, &k, &[0.2], 0.2, &f));
            k.push(stage(x, &y, h_try, &k, &[3.0 / 40.0, 9.0 / 40.0], 0.3, &f));
            k.push(stage(
                x,
                &y,
                h_try,
                &k,
                &[44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0],
                0.8,
                &f,
            ));
            k.push(stage(
                x,
                &y,
                h_try,
                &k,
                &[
                    19372.0 / 6561.0,
                    -25360.0 / 2187.0,
                    64448.0 / 6561.0,
                    -212.0 / 729.0,
                ],
                8.0 / 9.0,
                &f,
            ));
            k.push(stage(
                x,
                &y,
                h_try,
                &k,
                &[
                    9017.0 / 3168.0,
                    -355.0 / 33.0,
                    46732.0 / 5247.0,
                    49.0 / 176.0,
                    -5103.0 / 18656.0,
                ],
                1.0,
                &f,
            ));
            k
        };
        const B5: [f64; 6] = [
            35.0 / 384.0,
            0.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        ];
        const B4: [f64; 7] = [
            5179.0 / 57600.0,
            0.0,
            7571.0 / 16695.0,
            393.0 / 640.0,
            -92097.0 / 339200.0,
            187.0 / 2100.0,
            1.0 / 40.0,
        ];
        let mut y5 = y.clone();
        for (j, &bj) in B5.iter().enumerate() {
            if bj != 0.0 {
                for i in 0..dim {
                    y5[i] += h_try * bj * k[j][i];
                }
            }
        }
        let mut k7 = vec![0.0; dim];
        f(x + h_try, &y5, &mut k7);
        if y5.iter().chain(k7.iter()).any(|v| !v.is_finite()) {
            return Err(SolveError::SingularityHit { x });
        }
        let mut err: f64 = 0.0;
        for i in 0..dim {
            let mut y4i = y[i];
            for (j, &bj) in B4.iter().enumerate() {
                if bj != 0.0 {
                    y4i += h_try * bj * if j < 6 { k[j][i] } else { k7[i] };
                }
            }
            let sc = ODE_ATOL + ODE_RTOL * y[i].abs().max(y5[i].abs());
            err = err.max(((y5[i] - y4i) / sc).abs());
        }
        if err <= 1.0 {
            x += h_try;
            y = y5;
            k1 = k7; // FSAL
            xs.push(x);
            ys.push(y.clone());
            ds.push(k1.clone());
            let scale = (0.9 * err.max(1e-10).powf(-0.2)).clamp(0.2, 5.0);
            h = (h_try * scale).min(h_max);
        } else {
            let scale = (0.9 * err.powf(-0.2)).clamp(0.2, 1.0);
            h = h_try * scale;
        }
    }
    Ok(DenseOutput {
        order: dim,
        xs,
        ys,
        ds,
    })
}

/// Max ODE residual of a dense-output solution at `n` interior sample points.
pub fn ode_residual(spec: &AuxOdeSpec, sol: &DenseOutput, n: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for x in spec.interval.linspace(n) {
        let w = sol.value(x);
        let wp = sol.derivative(x);
        let wpp = if spec.order() == 2 {
            sol.second_derivative(x)
        } else {
            0.0
        };
        worst = worst.max(spec.residual(x, w, wp, wpp).abs());
    }
    worst
}

// ---------------------------------------------------------------- MOL

#[derive(Debug, Clone, Copy)]
pub struct MolConfig {
    pub nx: usize,
    /// Fraction of the parabolic stability bound `dx^2 / (2 max|a f|)`.
    pub dt_safety: f64,
    pub t_end: f64,
}

impl Default for MolConfig {
    fn default() -> Self {
        MolConfig {
            nx: 41,
            dt_safety: 0.5,
            t_end: 0.1,
        }
    }
}

pub struct MolResult {
    pub x_nodes: Vec<f64>,
    pub t0: f64,
    pub t1: f64,
    pub u_numeric: Vec<f64>,
    pub u_exact: Vec<f64>,
    pub linf: f64,
    pub l2: f64,
    pub steps: usize,
}

/// Solve the instance's PDE by conservative method of lines with classic
/// four-stage Runge-Kutta time stepping. Initial and Dirichlet boundary data
/// are harvested from the exact solution.
pub fn mol_solve(inst: &Instance, cfg: &MolConfig) -> Result<MolResult, SolveError> {
    let sol = &inst.solution;
    let co = &inst.coeffs;
    let map = sol.monotone_map()?;
    let xw = sol.xt_window.x;
    let tw = sol.xt_window.t;
    let t0 = tw.lo;
    let t1 = t0 + cfg.t_end;
    if t1 > tw.hi {
        return Err(SolveError::TimeWindow { t0, t1 });
    }
    let nx = cfg.nx;
    let x_nodes = xw.linspace(nx);
    let dx = x_nodes[1] - x_nodes[0];

    let exact_at = |x: f64, t: f64| -> Result<f64, SolveError> {
        Ok(map.invert(sol.theta.eval_raw(x, t)?)?)
    };

    // Stability bound from window extremes of |a f|.
    let mut af_max: f64 = 0.0;
    for &x in &x_nodes {
        let av = co.a.eval_raw(x)?.abs();
        for u in sol.u_window.linspace(20) {
            af_max = af_max.max(av * co.f.eval_raw(u)?.abs());
        }
    }
    let dt_bound = cfg.dt_safety * dx * dx / (2.0 * af_max.max(1e-12));
    let steps = ((cfg.t_end / dt_bound).ceil() as usize).max(1);
    let dt = cfg.t_end / steps as f64;

    // Precomputed spatial coefficients.
    let a_half: Vec<f64> = (0..nx - 1)
        .map(|i| co.a.eval_raw(0.5 * (x_nodes[i] + x_nodes[i + 1])))
        .collect::<Result<_, _>>()?;
    let b_at: Vec<f64> = x_nodes
        .iter()
        .map(|&x| co.b.eval_raw(x))
        .collect::<Result<_, _>>()?;
    let c_at: Vec<f64> = x_nodes
        .iter()
        .map(|&x| co.c.eval_raw(x))
        .collect::<Result<_, _>>()?;

    let guard_lo = sol.u_window.lo - 0.1 * sol.u_window.span();
    let guard_hi = sol.u_window.hi + 0.1 * sol.u_window.span();

    // State holds interior nodes; boundary values come from the exact solution
    // at each stage time.
    let rhs = |t: f64, interior: &[f64], out: &mut [f64]| -> Result<(), SolveError> {
        let left = exact_at(x_nodes[0], t)?;
        let right = exact_at(x_nodes[nx - 1], t)?;
        let u_at = |i: usize| -> f64 {
            if i == 0 {
                left
            } else if i == nx - 1 {
                right
            } else {
                interior[i - 1]
            }
        };
        for i in 1..nx - 1 {
            let ui = u_at(i);
            let um = u_at(i - 1);
            let up = u_at(i + 1);
            let fp = co.f.eval_raw(0.5 * (ui + up))?;
            let fm = co.f.eval_raw(0.5 * (um + ui))?;
            let flux_p = a_half[i] * fp * (up - ui) / dx;
            let flux_m = a_half[i - 1] * fm * (ui - um) / dx;
            let diffusion = (flux_p - flux_m) / dx;
            let convection = b_at[i] * co.g.eval_raw(ui)? * (up - um) / (2.0 * dx);
            let reaction = c_at[i] * co.h.eval_raw(ui)?;
            out[i - 1] = diffusion + convection + reaction;
        }
        Ok(())
    };

    let mut u: Vec<f64> = x_nodes[1..nx - 1]
        .iter()
        .map(|&x| exact_at(x, t0))
        .collect::<Result<_, _>>()?;
    let m = u.len();
    let mut k1 = vec![0.0; m];
    let mut k2 = vec![0.0; m];
    let mut k3 = vec![0.0; m];
    let mut k4 = vec![0.0; m];
    let mut tmp = vec![0.0; m];

    let mut t = t0;
    for _ in 0..steps {
        rhs(t, &u, &mut k1)?;
        for i in 0..m {
            tmp[i] = u[i] + 0.5 * dt * k1[i];
        }
        rhs(t + 0.5 * dt, &tmp, &mut k2)?;
        for i in 0..m {
            tmp[i] = u[i] + 0.5 * dt * k2[i];
        }
        rhs(t + 0.5 * dt, &tmp, &mut k3)?;
        for i in 0..m {
            tmp[i] = u[i] + dt * k3[i];
        }
        rhs(t + dt, &tmp, &mut k4)?;
        for i in 0..m {
            u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        t += dt;
        for &ui in &u {
            if !ui.is_finite() || ui < guard_lo || ui > guard_hi {
                return Err(SolveError::StabilityViolation { t, u: ui });
            }
        }
    }

    let mut u_numeric = Vec::with_capacity(nx);
    let mut u_exact = Vec::with_capacity(nx);
    let mut linf: f64 = 0.0;
    let mut sq = 0.0;
    for (i, &x) in x_nodes.iter().enumerate() {
        let ex = exact_at(x, t1)?;
        let num = if i == 0 {
            exact_at(x_nodes[0], t1)?
        } else if i == nx - 1 {
            exact_at(x_nodes[nx - 1], t1)?
        } else {
            u[i - 1]
        };
        linf = linf.max((num - ex).abs());
        sq += (num - ex) * (num - ex);
        u_numeric.push(num);
        u_exact.push(ex);
    }
    let l2 = (sq / nx as f64).sqrt();
    Ok(MolResult {
        x_nodes,
        t0,
        t1,
        u_numeric,
        u_exact,
        linf,
        l2,
        steps,
    })
}

// ---------------------------------------------------------------- studies

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConvergenceRow {
    pub nx: usize,
    pub linf: f64,
    pub l2: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConvergenceReport {
    pub entry: String,
    pub label: String,
    pub t_end: f64,
    pub rows: Vec<ConvergenceRow>,
    /// `log2(e_coarse/e_fine)` between consecutive rows (Linf).
    pub orders_linf: Vec<f64>,
    pub orders_l2: Vec<f64>,
    /// "truncation" when errors are resolvable, "exact" when the scheme
    /// reproduces the solution to the time-integrator floor.
    pub regime: String,
}

pub const EXACT_REGIME_FLOOR: f64 = 1e-9;

/// Run the first default instance of an entry over a list of grid sizes.
pub fn convergence_study(
    entry_id: &str,
    nx_list: &[usize],
    t_end: f64,
) -> Result<ConvergenceReport, SolveError> {
    let instances = catalog::default_instantiation(entry_id)?;
    let inst = &instances[0];
    convergence_study_instance(inst, nx_list, t_end)
}

pub fn convergence_study_instance(
    inst: &Instance,
    nx_list: &[usize],
    t_end: f64,
) -> Result<ConvergenceReport, SolveError> {
    let mut rows = Vec::new();
    for &nx in nx_list {
        let r = mol_solve(
            inst,
            &MolConfig {
                nx,
                t_end,
                ..MolConfig::default()
            },
        )?;
        rows.push(ConvergenceRow {
            nx,
            linf: r.linf,
            l2: r.l2,
        });
    }
    let order = |es: &[f64]| -> Vec<f64> {
        es.windows(2)
            .map(|w| (w[0] / w[1]).log2())
            .collect::<Vec<_>>()
    };
    let linfs: Vec<f64> = rows.iter().map(|r| r.linf).collect();
    let l2s: Vec<f64> = rows.iter().map(|r| r.l2).collect();
    let regime = if linfs.iter().all(|&e| e < EXACT_REGIME_FLOOR) {
        "exact".to_string()
    } else {
        "truncation".to_string()
    };
    Ok(ConvergenceReport {
        entry: inst.entry_id.clone(),
        label: inst.label.clone(),
        t_end,
        rows,
        orders_linf: order(&linfs),
        orders_l2: order(&l2s),
        regime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{constant, var};

    #[test]
    fn sine_from_linear_second_order() {
        // w'' = -w, w(0) = 0, w'(0) = 1 -> w(pi/2) = 1
        let spec = AuxOdeSpec {
            kind: AuxOdeKind::Linear2 {
                a: constant(1.0),
                p: constant(0.0),
                q: constant(1.0),
                r: constant(0.0),
            },
            interval: Interval::new(0.0, std::f64::consts::FRAC_PI_2),
            init: (0.0, Some(1.0)),
        };
        let sol = integrate_aux_ode(&spec).unwrap();
        let got = sol.value(std::f64::consts::FRAC_PI_2);
        assert!((got - 1.0).abs() < 1e-9, "w(pi/2) = {got}");
        assert!(ode_residual(&spec, &sol, 100) < 1e-8);
    }

    #[test]
    fn emden_fowler_n_minus_one_quadratic() {
        // (w')' + 1 = 0 with w(0) = 2, w'(0) = 0.3 -> w = -x^2/2 + 0.3 x + 2
        let spec = AuxOdeSpec {
            kind: AuxOdeKind::EmdenFowler {
                a: constant(1.0),
                k: 1.0,
                n: -1.0,
            },
            interval: Interval::new(0.0, 1.5),
            init: (2.0, Some(0.3)),
        };
        let sol = integrate_aux_ode(&spec).unwrap();
        for &x in &[0.3, 0.9, 1.5] {
            let expect = -x * x / 2.0 + 0.3 * x + 2.0;
            assert!((sol.value(x) - expect).abs() < 1e-9);
        }
        assert!(ode_residual(&spec, &sol, 100) < 1e-8);
    }

    #[test]
    fn abel_constant_branch() {
        // f = 1, k = 0.5, s = 1: p = 1 - 0.5 = 0.5, q = f h = -s(1 - 0.5) = -0.5
        // then xi == 1 is a solution.
        let spec = AuxOdeSpec {
            kind: AuxOdeKind::Abel2 {
                p: constant(0.5),
                q: constant(-0.5),
            },
            interval: Interval::new(-1.0, 1.0),
            init: (1.0, None),
        };
        let sol = integrate_aux_ode(&spec).unwrap();
        for &x in &[-0.5, 0.0, 0.99] {
            assert!((sol.value(x) - 1.0).abs() < 1e-10);
        }
        assert!(ode_residual(&spec, &sol, 100) < 1e-8);
    }

    #[test]
    fn dense_output_matches_interior_points() {
        // w' = w (first order via Abel? use General2 on 2nd order instead):
        // w'' = w with w(0)=1, w'(0)=1 -> e^x
        let spec = AuxOdeSpec {
            kind: AuxOdeKind::General2 {
                rhs: Arc::new(|_x, w, _wp| w),
            },
            interval: Interval::new(0.0, 1.0),
            init: (1.0, Some(1.0)),
        };
        let sol = integrate_aux_ode(&spec).unwrap();
        for &x in &[0.123, 0.5, 0.987] {
            assert!((sol.value(x) - x.exp()).abs() < 1e-9);
            assert!((sol.derivative(x) - x.exp()).abs() < 1e-8);
        }
    }

    #[test]
    fn constant_data_is_a_fixed_point() {
        // u_t = [u_x]_x with constant initial data and c*h = 0 stays constant.
        let insts = crate::catalog::default_instantiation("S12").unwrap();
        let mut inst = insts[0].clone();
        // Zero out the reaction so constant data is stationary.
        inst.coeffs.h = constant(0.0);
        // Replace theta with a constant-compatible exact solution: u = const.
        // With zeta = 1, theta = const works (derivatives vanish identically).
        inst.solution.theta = crate::bivar::bconst(2.0);
        let r = mol_solve(
            &inst,
            &MolConfig {
                nx: 21,
                t_end: 0.05,
                ..Default::default()
            },
        )
        .unwrap();
        for (n, e) in r.u_numeric.iter().zip(&r.u_exact) {
            assert!((n - e).abs() < 1e-13, "drifted: {n} vs {e}");
        }
        let _ = var();
    }
}
