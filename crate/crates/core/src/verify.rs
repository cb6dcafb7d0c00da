//! Residual engines: u-level finite differences, analytic theta-level,
//! the bilinear identity with its four variants, per-entry splitting
//! relations, the nonclassical-reduction classifier, and the linearizing
//! transformation cross-check.

use crate::antideriv::Antiderivative;
use crate::bivar::{BivariateExpr, XtWindow};
use crate::catalog::{
    self, CatalogError, CoefficientSet, ImplicitSolution, Instance, RelSide, SlotValues, Variant,
};
use crate::expr::{Expr, FuncError, Interval};
use crate::report::{
    EntryReport, InstanceReport, NamedResidual, ResidualSummary, Tolerances,
};
use crate::transform::{solution_grid, SolutionGrid, TransformError};

#[derive(Debug, Clone, thiserror::Error)]
pub enum VerifyError {
    #[error("grid too small for 4th-order stencils: {nx} x {nt} (need >= 7 per axis)")]
    GridTooSmall { nx: usize, nt: usize },
    #[error("splitting-form variant mismatch: instance is {instance}, caller expected {expected}")]
    VariantMismatch { instance: String, expected: String },
    #[error(transparent)]
    Func(#[from] FuncError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// A normalized residual field over the interior of a grid.
pub struct ResidualField {
    pub values: Vec<Vec<f64>>,
    pub x_nodes: Vec<f64>,
    pub t_nodes: Vec<f64>,
    pub summary: ResidualSummary,
}

fn summarize(values: &[Vec<f64>], xs: &[f64], ts: &[f64]) -> ResidualSummary {
    let mut max_abs: f64 = 0.0;
    let mut arg = (f64::NAN, f64::NAN);
    let mut sq = 0.0;
    let mut n = 0usize;
    for (it, row) in values.iter().enumerate() {
        for (ix, &v) in row.iter().enumerate() {
            let a = v.abs();
            if a > max_abs {
                max_abs = a;
                arg = (xs[ix], ts[it]);
            }
            sq += v * v;
            n += 1;
        }
    }
    ResidualSummary {
        max_abs,
        rms: if n > 0 { (sq / n as f64).sqrt() } else { 0.0 },
        argmax_x: arg.0,
        argmax_t: arg.1,
    }
}

/// Ring of nodes excluded so 4th-order central stencils never go one-sided.
pub const STENCIL_RING: usize = 3;

fn fd4_first(v: [f64; 5], h: f64) -> f64 {
    (-v[4] + 8.0 * v[3] - 8.0 * v[1] + v[0]) / (12.0 * h)
}

fn fd4_second(v: [f64; 5], h: f64) -> f64 {
    (-v[4] + 16.0 * v[3] - 30.0 * v[2] + 16.0 * v[1] - v[0]) / (12.0 * h * h)
}

/// PDE residual `u_t - [a f u_x]_x - b g u_x - c h` with 4th-order central
/// finite differences on the grid's u-values; interior ring only;
/// scale-normalized by `max(1, max |u_t|)`.
pub fn residual_u_level(
    coeffs: &CoefficientSet,
    grid: &SolutionGrid,
) -> Result<ResidualField, VerifyError> {
    let (nx, nt) = (grid.nx(), grid.nt());
    if nx < 7 || nt < 7 {
        return Err(VerifyError::GridTooSmall { nx, nt });
    }
    let (dx, dt) = (grid.dx(), grid.dt());
    let ring = STENCIL_RING;
    let ap = coeffs.a.differentiate();
    let fp = coeffs.f.differentiate();
    let mut values = vec![vec![0.0; nx - 2 * ring]; nt - 2 * ring];
    let mut ut_max: f64 = 0.0;
    for it in ring..nt - ring {
        for ix in ring..nx - ring {
            let x = grid.x_nodes[ix];
            let u = grid.u[it][ix];
            let col = |k: isize| grid.u[(it as isize + k) as usize][ix];
            let row = |k: isize| grid.u[it][(ix as isize + k) as usize];
            let u_t = fd4_first([col(-2), col(-1), col(0), col(1), col(2)], dt);
            let u_x = fd4_first([row(-2), row(-1), row(0), row(1), row(2)], dx);
            let u_xx = fd4_second([row(-2), row(-1), row(0), row(1), row(2)], dx);
            let av = coeffs.a.eval_raw(x)?;
            let apv = ap.eval_raw(x)?;
            let bv = coeffs.b.eval_raw(x)?;
            let cv = coeffs.c.eval_raw(x)?;
            let fv = coeffs.f.eval_raw(u)?;
            let fpv = fp.eval_raw(u)?;
            let gv = coeffs.g.eval_raw(u)?;
            let hv = coeffs.h.eval_raw(u)?;
            let diffusion = apv * fv * u_x + av * fpv * u_x * u_x + av * fv * u_xx;
            values[it - ring][ix - ring] = u_t - diffusion - bv * gv * u_x - cv * hv;
            ut_max = ut_max.max(u_t.abs());
        }
    }
    let scale = ut_max.max(1.0);
    for row in &mut values {
        for v in row.iter_mut() {
            *v /= scale;
        }
    }
    let xs = grid.x_nodes[ring..nx - ring].to_vec();
    let ts = grid.t_nodes[ring..nt - ring].to_vec();
    let summary = summarize(&values, &xs, &ts);
    Ok(ResidualField {
        values,
        x_nodes: xs,
        t_nodes: ts,
        summary,
    })
}

/// Transformed-equation residual
/// `-theta_t + (a theta_x)_x f + a theta_x^2 (f/zeta)'_u + b theta_x g + c h zeta`
/// with symbolic theta-partials and the grid's inverted u-values;
/// scale-normalized by `max(1, max |u_t|)`.
pub fn residual_theta_level(
    coeffs: &CoefficientSet,
    sol: &ImplicitSolution,
    grid: &SolutionGrid,
) -> Result<ResidualField, VerifyError> {
    let (tt, tx, txx) = sol.theta.partials();
    let ap = coeffs.a.differentiate();
    let dfz = (coeffs.f.clone() / sol.zeta.clone()).differentiate();
    let (nx, nt) = (grid.nx(), grid.nt());
    let mut values = vec![vec![0.0; nx]; nt];
    let mut ut_max: f64 = 0.0;
    for it in 0..nt {
        let t = grid.t_nodes[it];
        for ix in 0..nx {
            let x = grid.x_nodes[ix];
            let u = grid.u[it][ix];
            let ttv = tt.eval_raw(x, t)?;
            let txv = tx.eval_raw(x, t)?;
            let txxv = txx.eval_raw(x, t)?;
            let av = coeffs.a.eval_raw(x)?;
            let apv = ap.eval_raw(x)?;
            let bv = coeffs.b.eval_raw(x)?;
            let cv = coeffs.c.eval_raw(x)?;
            let fv = coeffs.f.eval_raw(u)?;
            let gv = coeffs.g.eval_raw(u)?;
            let hv = coeffs.h.eval_raw(u)?;
            let zv = sol.zeta.eval_raw(u)?;
            let dfzv = dfz.eval_raw(u)?;
            let flux = (apv * txv + av * txxv) * fv;
            values[it][ix] =
                -ttv + flux + av * txv * txv * dfzv + bv * txv * gv + cv * hv * zv;
            ut_max = ut_max.max((ttv / zv).abs());
        }
    }
    let scale = ut_max.max(1.0);
    for row in &mut values {
        for v in row.iter_mut() {
            *v /= scale;
        }
    }
    let summary = summarize(&values, &grid.x_nodes, &grid.t_nodes);
    Ok(ResidualField {
        values,
        x_nodes: grid.x_nodes.clone(),
        t_nodes: grid.t_nodes.clone(),
        summary,
    })
}

/// The five-term bilinear form of an instance, in its entry's variant.
pub struct SplittingForm {
    pub variant: Variant,
    coeffs: CoefficientSet,
    theta: BivariateExpr,
    tt: BivariateExpr,
    tx: BivariateExpr,
    txx: BivariateExpr,
    a_prime: Expr,
    zeta: Expr,
    dfz: Expr,
    z_expr: Expr,
}

impl SplittingForm {
    pub fn for_instance(inst: &Instance) -> SplittingForm {
        let (tt, tx, txx) = inst.solution.theta.partials();
        SplittingForm {
            variant: inst.variant,
            coeffs: inst.coeffs.clone(),
            theta: inst.solution.theta.clone(),
            tt,
            tx,
            txx,
            a_prime: inst.coeffs.a.differentiate(),
            zeta: inst.solution.zeta.clone(),
            dfz: (inst.coeffs.f.clone() / inst.solution.zeta.clone()).differentiate(),
            z_expr: inst.solution.fzeta.clone().into_expr(),
        }
    }

    /// `Phi_n(x, t)`, n in 1..=5.
    pub fn phi(&self, n: usize, x: f64, t: f64) -> Result<f64, FuncError> {
        let txv = self.tx.eval_raw(x, t)?;
        Ok(match n {
            1 => {
                let ttv = self.tt.eval_raw(x, t)?;
                match self.variant {
                    Variant::Plain | Variant::ThetaWeighted => -ttv,
                    Variant::Exponential { lambda } => {
                        -(lambda * self.theta.eval_raw(x, t)?).exp() * ttv
                    }
                    Variant::Power { n: pow } => {
                        -self.theta.eval_raw(x, t)?.powf(pow) * ttv
                    }
                }
            }
            2 => {
                self.a_prime.eval_raw(x)? * txv
                    + self.coeffs.a.eval_raw(x)? * self.txx.eval_raw(x, t)?
            }
            3 => self.coeffs.a.eval_raw(x)? * txv * txv,
            4 => self.coeffs.b.eval_raw(x)? * txv,
            5 => {
                let cv = self.coeffs.c.eval_raw(x)?;
                match self.variant {
                    Variant::Plain | Variant::Exponential { .. } => cv,
                    Variant::ThetaWeighted | Variant::Power { .. } => {
                        cv * self.theta.eval_raw(x, t)?
                    }
                }
            }
            _ => panic!("Phi index out of range: {n}"),
        })
    }

    /// `Psi_n(u)`, n in 1..=5.
    pub fn psi(&self, n: usize, u: f64) -> Result<f64, FuncError> {
        Ok(match n {
            1 => match self.variant {
                Variant::Plain | Variant::ThetaWeighted => 1.0,
                Variant::Exponential { lambda } => {
                    (-lambda * self.z_expr.eval_raw(u)?).exp()
                }
                Variant::Power { n: pow } => self.z_expr.eval_raw(u)?.powf(-pow),
            },
            2 => self.coeffs.f.eval_raw(u)?,
            3 => self.dfz.eval_raw(u)?,
            4 => self.coeffs.g.eval_raw(u)?,
            5 => {
                let hz = self.coeffs.h.eval_raw(u)? * self.zeta.eval_raw(u)?;
                match self.variant {
                    Variant::Plain | Variant::Exponential { .. } => hz,
                    Variant::ThetaWeighted | Variant::Power { .. } => {
                        hz / self.z_expr.eval_raw(u)?
                    }
                }
            }
            _ => panic!("Psi index out of range: {n}"),
        })
    }
}

/// Pointwise `sum_n Phi_n Psi_n` on the grid, normalized at each node by the
/// largest contributing term (floored at 1).
pub fn bilinear_identity(
    form: &SplittingForm,
    inst: &Instance,
    grid: &SolutionGrid,
) -> Result<ResidualField, VerifyError> {
    if form.variant.tag() != inst.variant.tag() {
        return Err(VerifyError::VariantMismatch {
            instance: inst.variant.tag().to_string(),
            expected: form.variant.tag().to_string(),
        });
    }
    let (nx, nt) = (grid.nx(), grid.nt());
    let mut values = vec![vec![0.0; nx]; nt];
    for it in 0..nt {
        let t = grid.t_nodes[it];
        for ix in 0..nx {
            let x = grid.x_nodes[ix];
            let u = grid.u[it][ix];
            let mut sum = 0.0;
            let mut biggest: f64 = 1.0;
            for n in 1..=5 {
                let term = form.phi(n, x, t)? * form.psi(n, u)?;
                sum += term;
                biggest = biggest.max(term.abs());
            }
            values[it][ix] = sum / biggest;
        }
    }
    let summary = summarize(&values, &grid.x_nodes, &grid.t_nodes);
    Ok(ResidualField {
        values,
        x_nodes: grid.x_nodes.clone(),
        t_nodes: grid.t_nodes.clone(),
        summary,
    })
}

/// Check every recorded splitting relation: Phi-relations pointwise on the
/// grid, Psi-relations at `u_samples` window points. Residuals are relative
/// to the largest participating term (floored at 1).
pub fn splitting_relations(
    inst: &Instance,
    form: &SplittingForm,
    grid: &SolutionGrid,
    u_samples: usize,
) -> Result<Vec<NamedResidual>, VerifyError> {
    let mut out = Vec::new();
    let uw = inst.solution.u_window;
    for rel in &inst.relations {
        let mut worst: f64 = 0.0;
        match rel.side {
            RelSide::Phi => {
                for (it, &t) in grid.t_nodes.iter().enumerate() {
                    let _ = it;
                    for &x in &grid.x_nodes {
                        let mut sum = 0.0;
                        let mut big: f64 = 1.0;
                        for &(idx, c) in &rel.terms {
                            let v = c * form.phi(idx, x, t)?;
                            sum += v;
                            big = big.max(v.abs());
                        }
                        worst = worst.max((sum / big).abs());
                    }
                }
            }
            RelSide::Psi => {
                for u in uw.linspace(u_samples) {
                    let mut sum = 0.0;
                    let mut big: f64 = 1.0;
                    for &(idx, c) in &rel.terms {
                        let v = c * form.psi(idx, u)?;
                        sum += v;
                        big = big.max(v.abs());
                    }
                    worst = worst.max((sum / big).abs());
                }
            }
        }
        out.push(NamedResidual {
            name: rel.name.clone(),
            max_abs: worst,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------- classifier

pub const NONCLASSICAL_THRESHOLD: f64 = 1e-8;
pub const NONCLASSICAL_SAMPLES: usize = 200;

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct NonclassicalFit {
    pub c1: f64,
    pub c2: f64,
    pub relative_residual: f64,
    pub conforms: bool,
    /// Rank-deficient normal system (reported as conforming-degenerate).
    pub degenerate: bool,
}

/// Least-squares fit of `zeta(u)·(C1·F(u) + C2) = f(u)` over the window,
/// `F = ∫f du`. Solutions reachable by the nonclassical reduction satisfy
/// this with residual at rounding level.
pub fn nonclassical_fit(
    f: &Expr,
    zeta: &Expr,
    u_window: Interval,
) -> Result<NonclassicalFit, VerifyError> {
    let bigf = Antiderivative::new(f.clone(), u_window.midpoint());
    let mut s11 = 0.0;
    let mut s12 = 0.0;
    let mut s22 = 0.0;
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    let mut ynorm = 0.0;
    let mut rows = Vec::with_capacity(NONCLASSICAL_SAMPLES);
    for u in u_window.linspace(NONCLASSICAL_SAMPLES) {
        let zv = zeta.eval_raw(u)?;
        let fv = f.eval_raw(u)?;
        let fint = bigf.value(u)?;
        let p1 = zv * fint;
        let p2 = zv;
        s11 += p1 * p1;
        s12 += p1 * p2;
        s22 += p2 * p2;
        b1 += p1 * fv;
        b2 += p2 * fv;
        ynorm += fv * fv;
        rows.push((p1, p2, fv));
    }
    let det = s11 * s22 - s12 * s12;
    if det.abs() <= 1e-14 * (s11 * s22).abs().max(1e-300) {
        return Ok(NonclassicalFit {
            c1: 0.0,
            c2: 0.0,
            relative_residual: 0.0,
            conforms: true,
            degenerate: true,
        });
    }
    let c1 = (b1 * s22 - b2 * s12) / det;
    let c2 = (s11 * b2 - s12 * b1) / det;
    let mut rsq = 0.0;
    for (p1, p2, fv) in rows {
        let r = c1 * p1 + c2 * p2 - fv;
        rsq += r * r;
    }
    let relative_residual = (rsq / ynorm.max(1e-300)).sqrt();
    Ok(NonclassicalFit {
        c1,
        c2,
        relative_residual,
        conforms: relative_residual <= NONCLASSICAL_THRESHOLD,
        degenerate: false,
    })
}

// ---------------------------------------------------------------- linearization

pub struct LinearizationReport {
    pub linear_max: f64,
    pub nonlinear_max: f64,
    pub grid: SolutionGrid,
}

/// Map a solution `theta` of the linear equation
/// `theta_t = a theta_xx + b(x) theta_x + c(x)` through `u = Zinv(theta)`
/// with `zeta = exp((1/a) ∫f du)` and check the nonlinear equation
/// `u_t = a u_xx + f u_x^2 + b u_x + c exp(-(1/a) ∫f du)` by finite
/// differences on the inverted field.
#[allow(clippy::too_many_arguments)]
pub fn linearization_check(
    b: &Expr,
    c: &Expr,
    f: &Expr,
    a_const: f64,
    lin_solution: &BivariateExpr,
    window: &XtWindow,
    u_window: Interval,
    nx: usize,
    nt: usize,
) -> Result<LinearizationReport, VerifyError> {
    // 1. The provided field must actually solve the linear equation.
    let (tt, tx, txx) = lin_solution.partials();
    let mut linear_max: f64 = 0.0;
    let mut tt_max: f64 = 0.0;
    for t in window.t.linspace(nt) {
        for x in window.x.linspace(nx) {
            let r = tt.eval_raw(x, t)?
                - a_const * txx.eval_raw(x, t)?
                - b.eval_raw(x)? * tx.eval_raw(x, t)?
                - c.eval_raw(x)?;
            linear_max = linear_max.max(r.abs());
            tt_max = tt_max.max(tt.eval_raw(x, t)?.abs());
        }
    }
    linear_max /= tt_max.max(1.0);

    // 2. Build the transformation and invert.
    let bigf = Antiderivative::new(f.clone(), 0.0).into_expr();
    let zeta = (bigf.clone() / a_const).exp();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let map = crate::transform::MonotoneMap::new(zeta.clone(), fzeta, u_window)?;
    let grid = solution_grid(&map, lin_solution, window, nx, nt, "linearization", "-")?;

    // 3. Nonlinear residual on the inverted field (4th-order FD).
    let (gnx, gnt) = (grid.nx(), grid.nt());
    if gnx < 7 || gnt < 7 {
        return Err(VerifyError::GridTooSmall { nx: gnx, nt: gnt });
    }
    let (dx, dt) = (grid.dx(), grid.dt());
    let ring = STENCIL_RING;
    let hterm = (bigf * (-1.0 / a_const)).exp();
    let mut worst: f64 = 0.0;
    let mut ut_max: f64 = 0.0;
    for it in ring..gnt - ring {
        for ix in ring..gnx - ring {
            let x = grid.x_nodes[ix];
            let u = grid.u[it][ix];
            let col = |k: isize| grid.u[(it as isize + k) as usize][ix];
            let row = |k: isize| grid.u[it][(ix as isize + k) as usize];
            let u_t = fd4_first([col(-2), col(-1), col(0), col(1), col(2)], dt);
            let u_x = fd4_first([row(-2), row(-1), row(0), row(1), row(2)], dx);
            let u_xx = fd4_second([row(-2), row(-1), row(0), row(1), row(2)], dx);
            let r = u_t
                - a_const * u_xx
                - f.eval_raw(u)? * u_x * u_x
                - b.eval_raw(x)? * u_x
                - c.eval_raw(x)? * hterm.eval_raw(u)?;
            worst = worst.max(r.abs());
            ut_max = ut_max.max(u_t.abs());
        }
    }
    Ok(LinearizationReport {
        linear_max,
        nonlinear_max: worst / ut_max.max(1.0),
        grid,
    })
}

// ---------------------------------------------------------------- mutation

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientSlot {
    A,
    B,
    C,
    F,
    G,
    H,
}

pub const ALL_COEFFICIENTS: [CoefficientSlot; 6] = [
    CoefficientSlot::A,
    CoefficientSlot::B,
    CoefficientSlot::C,
    CoefficientSlot::F,
    CoefficientSlot::G,
    CoefficientSlot::H,
];

/// `e -> e + eps*sqrt(1 + e^2)`: a perturbation of size at least `eps`
/// everywhere, scaling with the coefficient's magnitude.
pub fn perturb_expr(e: &Expr, eps: f64) -> Expr {
    e.clone() + (1.0 + e.clone() * e.clone()).sqrt() * eps
}

pub fn perturb_coefficient(
    coeffs: &CoefficientSet,
    slot: CoefficientSlot,
    eps: f64,
) -> CoefficientSet {
    let mut out = coeffs.clone();
    match slot {
        CoefficientSlot::A => out.a = perturb_expr(&coeffs.a, eps),
        CoefficientSlot::B => out.b = perturb_expr(&coeffs.b, eps),
        CoefficientSlot::C => out.c = perturb_expr(&coeffs.c, eps),
        CoefficientSlot::F => out.f = perturb_expr(&coeffs.f, eps),
        CoefficientSlot::G => out.g = perturb_expr(&coeffs.g, eps),
        CoefficientSlot::H => out.h = perturb_expr(&coeffs.h, eps),
    }
    out
}

// ---------------------------------------------------------------- full runs

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub nx: usize,
    pub nt: usize,
    pub tolerances: Tolerances,
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            nx: 41,
            nt: 41,
            tolerances: Tolerances::default(),
            jobs: 1,
        }
    }
}

pub const SELF_CHECK_SAMPLES: usize = 50;

/// Run every check on one instance and assemble the report.
pub fn verify_instance(
    inst: &Instance,
    cfg: &VerifyConfig,
) -> Result<InstanceReport, VerifyError> {
    let tol = cfg.tolerances;
    let mut failures = Vec::new();

    let self_check = catalog::self_check(inst, SELF_CHECK_SAMPLES)?
        .into_iter()
        .map(|(name, max_abs)| NamedResidual { name, max_abs })
        .collect::<Vec<_>>();
    for r in &self_check {
        if r.max_abs > tol.self_check {
            failures.push(format!(
                "self-check `{}` = {:.3e} > {:.1e}",
                r.name, r.max_abs, tol.self_check
            ));
        }
    }

    let map = inst.solution.monotone_map()?;
    let grid = solution_grid(
        &map,
        &inst.solution.theta,
        &inst.solution.xt_window,
        cfg.nx,
        cfg.nt,
        &inst.label,
        &inst.instantiation_hash,
    )?;

    let theta_res = residual_theta_level(&inst.coeffs, &inst.solution, &grid)?;
    if theta_res.summary.max_abs > tol.analytic {
        failures.push(format!(
            "theta-level residual {:.3e} > {:.1e}",
            theta_res.summary.max_abs, tol.analytic
        ));
    }
    let u_res = residual_u_level(&inst.coeffs, &grid)?;
    if u_res.summary.max_abs > tol.fd {
        failures.push(format!(
            "u-level FD residual {:.3e} > {:.1e}",
            u_res.summary.max_abs, tol.fd
        ));
    }
    let form = SplittingForm::for_instance(inst);
    let bilinear = bilinear_identity(&form, inst, &grid)?;
    if bilinear.summary.max_abs > tol.identity {
        failures.push(format!(
            "bilinear identity residual {:.3e} > {:.1e}",
            bilinear.summary.max_abs, tol.identity
        ));
    }
    let relations = splitting_relations(inst, &form, &grid, SELF_CHECK_SAMPLES)?;
    for r in &relations {
        if r.max_abs > tol.identity {
            failures.push(format!(
                "splitting relation `{}` = {:.3e} > {:.1e}",
                r.name, r.max_abs, tol.identity
            ));
        }
    }

    Ok(InstanceReport {
        label: inst.label.clone(),
        entry: inst.entry_id.clone(),
        instantiation_hash: inst.instantiation_hash.clone(),
        variant: inst.variant.tag().to_string(),
        grid_nx: cfg.nx,
        grid_nt: cfg.nt,
        self_check,
        residual_theta_level: theta_res.summary,
        residual_u_level: u_res.summary,
        bilinear_identity: bilinear.summary,
        relation_residuals: relations,
        tolerances: tol,
        pass: failures.is_empty(),
        failures,
    })
}

pub fn verify_entry(
    id: &str,
    slots: &SlotValues,
    cfg: &VerifyConfig,
) -> Result<EntryReport, VerifyError> {
    let instances = catalog::instantiate(id, slots)?;
    let mut reports = Vec::new();
    for inst in &instances {
        reports.push(verify_instance(inst, cfg)?);
    }
    Ok(EntryReport {
        entry: id.to_string(),
        pass: reports.iter().all(|r| r.pass),
        instances: reports,
    })
}

/// Entry-level fan-out across up to `cfg.jobs` workers; reports are merged in
/// catalog order regardless of scheduling.
pub fn verify_many(
    ids: &[String],
    slots: &SlotValues,
    cfg: &VerifyConfig,
) -> Result<Vec<EntryReport>, VerifyError> {
    let jobs = cfg.jobs.max(1).min(ids.len().max(1));
    if jobs <= 1 {
        return ids.iter().map(|id| verify_entry(id, slots, cfg)).collect();
    }
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Mutex;
    let next = AtomicUsize::new(0);
    let results: Vec<Mutex<Option<Result<EntryReport, VerifyError>>>> =
        ids.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= ids.len() {
                    break;
                }
                let r = verify_entry(&ids[i], slots, cfg);
                *results[i].lock().unwrap() = Some(r);
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("worker completed"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivar::{bt, of_x};
    use crate::expr::{constant, var};

    /// Heat-equation grids with known polynomial fields: FD stencils are
    /// exact on x^2 + linear t, so residuals isolate the equation itself.
    fn poly_grid(ct: f64) -> (CoefficientSet, SolutionGrid) {
        let coeffs = CoefficientSet {
            a: constant(1.0),
            b: constant(1.0),
            c: constant(0.0),
            f: constant(1.0),
            g: constant(0.0),
            h: constant(1.0),
        };
        let xw = XtWindow::new(0.0, 1.0, 0.0, 1.0);
        let xs = xw.x.linspace(11);
        let ts = xw.t.linspace(11);
        let mut u = vec![vec![0.0; 11]; 11];
        for (it, &t) in ts.iter().enumerate() {
            for (ix, &x) in xs.iter().enumerate() {
                u[it][ix] = x * x + ct * t;
            }
        }
        let grid = SolutionGrid {
            entry: "test".into(),
            instantiation_hash: "-".into(),
            x_nodes: xs,
            t_nodes: ts,
            theta: u.clone(),
            u,
        };
        (coeffs, grid)
    }

    #[test]
    fn heat_polynomial_residual_zero() {
        // u = x^2 + 2t satisfies u_t = u_xx exactly.
        let (coeffs, grid) = poly_grid(2.0);
        let r = residual_u_level(&coeffs, &grid).unwrap();
        assert!(r.summary.max_abs < 1e-12, "max {}", r.summary.max_abs);
    }

    #[test]
    fn heat_polynomial_residual_one() {
        // u = x^2 + 3t leaves residual exactly 1 (normalized by max|u_t| = 3).
        let (coeffs, grid) = poly_grid(3.0);
        let r = residual_u_level(&coeffs, &grid).unwrap();
        assert!(
            (r.summary.max_abs - 1.0 / 3.0).abs() < 1e-12,
            "normalized residual {}",
            r.summary.max_abs
        );
        // Raw interior value is 1 everywhere before normalization.
        for row in &r.values {
            for v in row {
                assert!((v.abs() - 1.0 / 3.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn grid_too_small_is_rejected() {
        let (coeffs, mut grid) = poly_grid(2.0);
        grid.x_nodes.truncate(6);
        for row in grid.u.iter_mut() {
            row.truncate(6);
        }
        assert!(matches!(
            residual_u_level(&coeffs, &grid),
            Err(VerifyError::GridTooSmall { .. })
        ));
    }

    #[test]
    fn nonclassical_exact_member_recovers_constants() {
        // zeta = f/(2F + 3) -> fit returns (2, 3) with tiny residual.
        let f = var().exp();
        let fint = Antiderivative::new(f.clone(), 0.5).into_expr();
        let zeta = f.clone() / (fint * 2.0 + 3.0);
        let fit = nonclassical_fit(&f, &zeta, Interval::new(0.0, 1.0)).unwrap();
        assert!(fit.conforms, "residual {}", fit.relative_residual);
        // The fitted constants refer to F anchored at the window midpoint;
        // C1 is anchor-free.
        assert!((fit.c1 - 2.0).abs() < 1e-8, "c1 {}", fit.c1);
    }

    #[test]
    fn nonclassical_zeta_equals_f_conforms() {
        let f = var().cos() + 2.0;
        let fit = nonclassical_fit(&f, &f, Interval::new(-1.0, 1.0)).unwrap();
        assert!(fit.conforms);
        assert!(fit.c1.abs() < 1e-10);
        assert!((fit.c2 - 1.0).abs() < 1e-10);
    }

    #[test]
    fn nonclassical_f_over_u_rejected() {
        // zeta = f/u with f = e^u on (0.5, 2): outside the reachable family.
        let f = var().exp();
        let zeta = (f.clone() / var()).with_domain(Interval::new(0.0, f64::INFINITY));
        let fit = nonclassical_fit(&f, &zeta, Interval::new(0.5, 2.0)).unwrap();
        assert!(!fit.conforms);
        assert!(fit.relative_residual > 1e-3, "{}", fit.relative_residual);
    }

    #[test]
    fn corrupted_reaction_term_is_visible() {
        // S01 default with h -> h + 0.1: theta-level residual jumps to
        // ~0.1*|zeta| scaled.
        let inst = &crate::catalog::default_instantiation("S01").unwrap()[0];
        let map = inst.solution.monotone_map().unwrap();
        let grid = solution_grid(
            &map,
            &inst.solution.theta,
            &inst.solution.xt_window,
            15,
            15,
            "S01",
            "-",
        )
        .unwrap();
        let clean = residual_theta_level(&inst.coeffs, &inst.solution, &grid).unwrap();
        assert!(clean.summary.max_abs < 1e-11);
        let mut corrupted = inst.coeffs.clone();
        corrupted.h = corrupted.h + 0.1;
        let dirty = residual_theta_level(&corrupted, &inst.solution, &grid).unwrap();
        assert!(
            dirty.summary.max_abs > 0.01,
            "corruption invisible: {}",
            dirty.summary.max_abs
        );
    }

    #[test]
    fn linearization_identity_case() {
        // f == 0 makes the transformation the identity: theta = x^2 + 2t
        // solves theta_t = theta_xx, and u = theta solves the same equation.
        let theta = of_x(var().powf(2.0)) + bt() * 2.0;
        let rep = linearization_check(
            &constant(0.0),
            &constant(0.0),
            &constant(0.0),
            1.0,
            &theta,
            &XtWindow::new(0.0, 1.0, 0.0, 1.0),
            Interval::new(-0.5, 3.5),
            15,
            15,
        )
        .unwrap();
        assert!(rep.linear_max < 1e-12, "linear {}", rep.linear_max);
        assert!(rep.nonlinear_max < 1e-10, "nonlinear {}", rep.nonlinear_max);
    }
}
