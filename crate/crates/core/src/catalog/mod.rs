//! The 33-family solution catalog.
//!
//! Each entry is a parameterized constructor: free function slots plus
//! constant slots go in, a concrete PDE instance (coefficient set) and its
//! exact implicit solution come out, together with machine-checkable
//! defining constraints and the entry's splitting relations.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::antideriv::Antiderivative;
use crate::bivar::{BivariateExpr, XtWindow};
use crate::expr::{constant, var, Expr, FuncError, Interval};
use crate::pdesolve::AuxOdeSpec;
use crate::report::Fnv;
use crate::transform::{MonotoneMap, TransformError};

mod s01_16;
mod s17_33;

#[derive(Debug, Clone, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("entry {entry} has no slot named `{slot}`")]
    MissingSlot { entry: String, slot: String },
    #[error("window violation for {entry}: {what}")]
    Window { entry: String, what: String },
    #[error(transparent)]
    Func(#[from] FuncError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// The six functional coefficients of `u_t = [a f u_x]_x + b g u_x + c h`.
#[derive(Clone)]
pub struct CoefficientSet {
    pub a: Expr,
    pub b: Expr,
    pub c: Expr,
    pub f: Expr,
    pub g: Expr,
    pub h: Expr,
}

/// An exact solution in implicit form `∫ζ(u) du = ϑ(x, t)`.
#[derive(Clone)]
pub struct ImplicitSolution {
    pub zeta: Expr,
    pub fzeta: Antiderivative,
    pub theta: BivariateExpr,
    pub u_window: Interval,
    pub xt_window: XtWindow,
}

impl ImplicitSolution {
    pub fn monotone_map(&self) -> Result<MonotoneMap, TransformError> {
        MonotoneMap::new(self.zeta.clone(), self.fzeta.clone(), self.u_window)
    }
}

/// Which bilinear form the entry's splitting relations live on.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum Variant {
    Plain,
    Exponential { lambda: f64 },
    ThetaWeighted,
    Power { n: f64 },
}

impl Variant {
    pub fn tag(&self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Exponential { .. } => "exponential",
            Variant::ThetaWeighted => "theta-weighted",
            Variant::Power { .. } => "power",
        }
    }
}

/// A defining relation that must vanish on the instance.
#[derive(Clone)]
pub enum Constraint {
    /// Residual expression in `u`, sampled on the `u`-window.
    U { name: String, expr: Expr },
    /// Residual expression in `(x, t)`, sampled on the `xt`-window.
    Xt { name: String, expr: BivariateExpr },
}

impl Constraint {
    pub fn name(&self) -> &str {
        match self {
            Constraint::U { name, .. } | Constraint::Xt { name, .. } => name,
        }
    }

    pub fn u(name: &str, expr: Expr) -> Constraint {
        Constraint::U {
            name: name.to_string(),
            expr,
        }
    }

    pub fn xt(name: &str, expr: BivariateExpr) -> Constraint {
        Constraint::Xt {
            name: name.to_string(),
            expr,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum RelSide {
    Phi,
    Psi,
}

/// A linear splitting relation `Σ cᵢ·Φᵢ = 0` or `Σ cᵢ·Ψᵢ = 0`
/// (indices 1..=5 into the entry's bilinear form).
#[derive(Clone)]
pub struct Relation {
    pub name: String,
    pub side: RelSide,
    pub terms: Vec<(usize, f64)>,
}

impl Relation {
    pub fn phi(name: &str, terms: &[(usize, f64)]) -> Relation {
        Relation {
            name: name.to_string(),
            side: RelSide::Phi,
            terms: terms.to_vec(),
        }
    }

    pub fn psi(name: &str, terms: &[(usize, f64)]) -> Relation {
        Relation {
            name: name.to_string(),
            side: RelSide::Psi,
            terms: terms.to_vec(),
        }
    }
}

/// An auxiliary-ODE check shipped with an instance: the spec to integrate and
/// the analytic solution the default parameters admit.
#[derive(Clone)]
pub struct AuxCheck {
    pub name: String,
    pub spec: AuxOdeSpec,
    pub analytic: Expr,
}

/// One concrete (equation, exact solution) pair.
#[derive(Clone)]
pub struct Instance {
    /// `S07`, or `S02+` / `S02-` for two-branch entries.
    pub label: String,
    pub entry_id: String,
    pub coeffs: CoefficientSet,
    pub solution: ImplicitSolution,
    pub variant: Variant,
    pub constraints: Vec<Constraint>,
    pub relations: Vec<Relation>,
    pub aux: Vec<AuxCheck>,
    pub instantiation_hash: String,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum VarKind {
    X,
    U,
}

/// Slot values for `instantiate`: overrides are merged over entry defaults.
#[derive(Default, Clone)]
pub struct SlotValues {
    pub funcs: BTreeMap<String, Expr>,
    pub consts: BTreeMap<String, f64>,
    pub u_window: Option<Interval>,
    pub xt_window: Option<XtWindow>,
}

impl SlotValues {
    pub fn new() -> SlotValues {
        SlotValues::default()
    }

    pub fn with_fn(mut self, name: &str, e: Expr) -> SlotValues {
        self.funcs.insert(name.to_string(), e);
        self
    }

    pub fn with_const(mut self, name: &str, v: f64) -> SlotValues {
        self.consts.insert(name.to_string(), v);
        self
    }

    pub fn with_u_window(mut self, w: Interval) -> SlotValues {
        self.u_window = Some(w);
        self
    }

    pub fn with_xt_window(mut self, w: XtWindow) -> SlotValues {
        self.xt_window = Some(w);
        self
    }
}

/// Fully-resolved slots handed to an entry constructor.
pub(crate) struct Slots {
    pub funcs: BTreeMap<String, Expr>,
    pub consts: BTreeMap<String, f64>,
    pub u_window: Option<Interval>,
    pub xt_window: Option<XtWindow>,
}

impl Slots {
    pub fn num(&self, name: &str) -> f64 {
        self.consts[name]
    }

    pub fn func(&self, name: &str) -> Expr {
        self.funcs[name].clone()
    }

    pub fn uw(&self, default: Interval) -> Interval {
        self.u_window.unwrap_or(default)
    }

    pub fn xtw(&self, default: XtWindow) -> XtWindow {
        self.xt_window.unwrap_or(default)
    }
}

pub struct EntryDef {
    pub id: &'static str,
    pub description: &'static str,
    /// (name, variable, default constructor)
    pub func_slots: &'static [(&'static str, VarKind, fn() -> Expr)],
    pub const_slots: &'static [(&'static str, f64)],
    pub has_aux_ode: bool,
    pub two_branch: bool,
    /// Plain-text math of the implicit solution, for metadata export.
    pub solution_form: &'static str,
    pub(crate) construct: fn(&Slots) -> Result<Vec<Instance>, CatalogError>,
}

/// All 33 entries in stable order S01..S33.
pub fn entries() -> &'static [EntryDef] {
    static REG: OnceLock<Vec<EntryDef>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut v = s01_16::entries();
        v.extend(s17_33::entries());
        assert_eq!(v.len(), 33);
        for (i, e) in v.iter().enumerate() {
            assert_eq!(e.id, format!("S{:02}", i + 1));
        }
        v
    })
}

pub fn find_entry(id: &str) -> Result<&'static EntryDef, CatalogError> {
    entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| CatalogError::UnknownEntry(id.to_string()))
}

/// Metadata row for `list`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct EntryInfo {
    pub id: String,
    pub description: String,
    pub free_slots: Vec<String>,
    pub constant_slots: Vec<(String, f64)>,
    pub has_aux_ode: bool,
    pub two_branch: bool,
    pub solution_form: String,
}

pub fn list_entries() -> Vec<EntryInfo> {
    entries()
        .iter()
        .map(|e| EntryInfo {
            id: e.id.to_string(),
            description: e.description.to_string(),
            free_slots: e
                .func_slots
                .iter()
                .map(|(n, k, _)| {
                    format!("{n}({})", if *k == VarKind::X { "x" } else { "u" })
                })
                .collect(),
            constant_slots: e
                .const_slots
                .iter()
                .map(|(n, v)| (n.to_string(), *v))
                .collect(),
            has_aux_ode: e.has_aux_ode,
            two_branch: e.two_branch,
            solution_form: e.solution_form.to_string(),
        })
        .collect()
}

/// Instantiate an entry. Unknown slot names are rejected before any
/// computation; window and nondegeneracy violations surface as errors.
pub fn instantiate(id: &str, values: &SlotValues) -> Result<Vec<Instance>, CatalogError> {
    let entry = find_entry(id)?;
    for name in values.funcs.keys() {
        if !entry.func_slots.iter().any(|(n, _, _)| n == name) {
            return Err(CatalogError::MissingSlot {
                entry: id.to_string(),
                slot: name.clone(),
            });
        }
    }
    for name in values.consts.keys() {
        if !entry.const_slots.iter().any(|(n, _)| n == name) {
            return Err(CatalogError::MissingSlot {
                entry: id.to_string(),
                slot: name.clone(),
            });
        }
    }
    let mut funcs = BTreeMap::new();
    for (name, _, default) in entry.func_slots {
        let e = values
            .funcs
            .get(*name)
            .cloned()
            .unwrap_or_else(|| default());
        funcs.insert(name.to_string(), e);
    }
    let mut consts = BTreeMap::new();
    for (name, default) in entry.const_slots {
        consts.insert(
            name.to_string(),
            values.consts.get(*name).copied().unwrap_or(*default),
        );
    }
    let slots = Slots {
        funcs,
        consts,
        u_window: values.u_window,
        xt_window: values.xt_window,
    };
    let mut instances = (entry.construct)(&slots)?;
    for inst in &mut instances {
        inst.instantiation_hash = instance_hash(inst, &slots);
        certify_instance(inst)?;
    }
    Ok(instances)
}

/// The entry's shipped default instantiation (closed-form throughout).
pub fn default_instantiation(id: &str) -> Result<Vec<Instance>, CatalogError> {
    instantiate(id, &SlotValues::new())
}

/// All default instances of all entries, in catalog order.
pub fn all_default_instances() -> Result<Vec<Instance>, CatalogError> {
    let mut out = Vec::new();
    for e in entries() {
        out.extend(default_instantiation(e.id)?);
    }
    Ok(out)
}

fn instance_hash(inst: &Instance, slots: &Slots) -> String {
    let mut h = Fnv::new();
    for b in inst.label.bytes() {
        h.byte(b);
    }
    for (name, v) in &slots.consts {
        for b in name.bytes() {
            h.byte(b);
        }
        h.bits(v.to_bits());
    }
    for (name, e) in &slots.funcs {
        for b in name.bytes() {
            h.byte(b);
        }
        e.hash_into(&mut h);
    }
    h.bits(inst.solution.u_window.lo.to_bits());
    h.bits(inst.solution.u_window.hi.to_bits());
    format!("{:016x}", h.finish())
}

/// Nondegeneracy: `a(x) ≠ 0` on the x-window, `f(u) ≠ 0` and `ζ` one-signed
/// on the u-window, and every coefficient finite on its window.
fn certify_instance(inst: &Instance) -> Result<(), CatalogError> {
    let uw = inst.solution.u_window;
    let xw = inst.solution.xt_window.x;
    let err = |what: String| CatalogError::Window {
        entry: inst.label.clone(),
        what,
    };
    let check_nonzero = |e: &Expr, w: Interval, n: &str| -> Result<(), CatalogError> {
        for p in w.linspace(100) {
            let v = e.eval_raw(p).map_err(CatalogError::Func)?;
            if !v.is_finite() || v.abs() < 1e-12 {
                return Err(err(format!("{n} vanishes or blows up at {p} (value {v})")));
            }
        }
        Ok(())
    };
    check_nonzero(&inst.coeffs.a, xw, "a(x)")?;
    check_nonzero(&inst.coeffs.f, uw, "f(u)")?;
    for (e, n) in [
        (&inst.coeffs.b, "b(x)"),
        (&inst.coeffs.c, "c(x)"),
    ] {
        e.certify_on(xw, 100)
            .map_err(|fe| err(format!("{n}: {fe}")))?;
    }
    for (e, n) in [(&inst.coeffs.g, "g(u)"), (&inst.coeffs.h, "h(u)")] {
        e.certify_on(uw, 100)
            .map_err(|fe| err(format!("{n}: {fe}")))?;
    }
    // zeta one-signed: delegated to the monotone map constructor.
    inst.solution.monotone_map().map_err(|te| match te {
        TransformError::NonMonotone { u, zeta } => err(format!(
            "zeta changes sign or vanishes on the u-window at u = {u} (zeta = {zeta})"
        )),
        other => CatalogError::Transform(other),
    })?;
    Ok(())
}

/// Evaluate every defining constraint of the instance: u-side constraints at
/// `n` window samples, (x,t)-side constraints on an `n`-point lattice.
/// Returns `(constraint_name, max_abs_residual)` pairs.
pub fn self_check(inst: &Instance, n: usize) -> Result<Vec<(String, f64)>, CatalogError> {
    let mut out = Vec::new();
    let uw = inst.solution.u_window;
    let xtw = inst.solution.xt_window;
    // lattice close to n points
    let nt = ((n as f64).sqrt().floor() as usize).max(2);
    let nx = n.div_ceil(nt).max(2);
    for c in &inst.constraints {
        let max = match c {
            Constraint::U { expr, .. } => {
                let mut m: f64 = 0.0;
                for u in uw.linspace(n) {
                    m = m.max(expr.eval_raw(u).map_err(CatalogError::Func)?.abs());
                }
                m
            }
            Constraint::Xt { expr, .. } => {
                let mut m: f64 = 0.0;
                for t in xtw.t.linspace(nt) {
                    for x in xtw.x.linspace(nx) {
                        m = m.max(expr.eval_raw(x, t).map_err(CatalogError::Func)?.abs());
                    }
                }
                m
            }
        };
        out.push((c.name().to_string(), max));
    }
    Ok(out)
}

// ---- builders shared by the entry files ----

pub(crate) fn uv() -> Expr {
    var()
}

pub(crate) fn xv() -> Expr {
    var()
}

pub(crate) fn num(v: f64) -> Expr {
    constant(v)
}

/// Anchored `∫ e dx` as an expression (closed form when the table knows one).
pub(crate) fn integral(e: &Expr, anchor: f64) -> Expr {
    Antiderivative::new(e.clone(), anchor).into_expr()
}

/// The built-in safe function pool used by the CLI and the randomized tests.
pub fn pool_fn(id: &str) -> Option<Expr> {
    Some(match id {
        "one" => constant(1.0),
        "linear" => var(),
        "quadratic_plus_one" => 1.0 + var().powf(2.0),
        "exp" => var().exp(),
        "exp_neg" => (-var()).exp(),
        "cos_plus_two" => var().cos() + 2.0,
        _ => return None,
    })
}

pub fn pool_ids() -> &'static [&'static str] {
    &[
        "one",
        "linear",
        "quadratic_plus_one",
        "exp",
        "exp_neg",
        "cos_plus_two",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_33_entries_in_order() {
        let es = entries();
        assert_eq!(es.len(), 33);
        assert_eq!(es[0].id, "S01");
        assert_eq!(es[32].id, "S33");
        // S22 ships an auxiliary ODE.
        assert!(find_entry("S22").unwrap().has_aux_ode);
        // S01 exposes three free functions.
        let info = &list_entries()[0];
        assert_eq!(info.free_slots, vec!["a(x)", "f(u)", "g(u)"]);
    }

    #[test]
    fn default_instances_count_includes_branches() {
        let insts = all_default_instances().unwrap();
        // 33 entries, six of which carry +- branches.
        assert_eq!(insts.len(), 39);
        let two_branch: Vec<&str> = entries()
            .iter()
            .filter(|e| e.two_branch)
            .map(|e| e.id)
            .collect();
        assert_eq!(two_branch, vec!["S02", "S05", "S08", "S09", "S11", "S33"]);
    }

    #[test]
    fn defaults_pass_self_check() {
        for inst in all_default_instances().unwrap() {
            for (name, r) in self_check(&inst, 50).unwrap() {
                assert!(
                    r <= 1e-10,
                    "{}: constraint `{name}` residual {r:.3e}",
                    inst.label
                );
            }
        }
    }

    #[test]
    fn defaults_are_closed_form_throughout() {
        for inst in all_default_instances().unwrap() {
            assert!(
                inst.solution.fzeta.has_closed_form(),
                "{}: Fzeta falls back to quadrature",
                inst.label
            );
        }
    }

    #[test]
    fn default_theta_ranges_sit_inside_map_ranges() {
        for inst in all_default_instances().unwrap() {
            let map = inst.solution.monotone_map().unwrap();
            let range = map.range();
            let w = &inst.solution.xt_window;
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for t in w.t.linspace(21) {
                for x in w.x.linspace(21) {
                    let v = inst.solution.theta.eval_raw(x, t).unwrap();
                    lo = lo.min(v);
                    hi = hi.max(v);
                }
            }
            assert!(
                range.lo < lo && hi < range.hi,
                "{}: theta range [{lo}, {hi}] not inside map range [{}, {}]",
                inst.label,
                range.lo,
                range.hi
            );
        }
    }

    #[test]
    fn unknown_entry_and_slot_are_rejected() {
        assert!(matches!(
            instantiate("S99", &SlotValues::new()),
            Err(CatalogError::UnknownEntry(_))
        ));
        assert!(matches!(
            instantiate("S01", &SlotValues::new().with_const("nope", 1.0)),
            Err(CatalogError::MissingSlot { .. })
        ));
        assert!(matches!(
            instantiate("S01", &SlotValues::new().with_fn("nope", var())),
            Err(CatalogError::MissingSlot { .. })
        ));
    }

    #[test]
    fn s01_simplest_instantiation_matches_hand_values() {
        // f = 1, g = 0, a = 1, C2 = 1, k = 2: h == 1, zeta == 1,
        // theta = t - x/2 + C1, and the PDE residual vanishes (u_t = 1 = c h).
        let slots = SlotValues::new()
            .with_fn("a", constant(1.0))
            .with_fn("f", constant(1.0))
            .with_fn("g", constant(0.0))
            .with_const("k", 2.0)
            .with_const("C2", 1.0)
            .with_const("C1", 0.25)
            .with_u_window(Interval::new(-2.0, 2.0));
        let inst = &instantiate("S01", &slots).unwrap()[0];
        for u in [-1.0, 0.0, 1.0] {
            assert!((inst.coeffs.h.eval_raw(u).unwrap() - 1.0).abs() < 1e-15);
            assert!((inst.solution.zeta.eval_raw(u).unwrap() - 1.0).abs() < 1e-15);
        }
        for (x, t) in [(0.2, 0.3), (0.8, 0.9)] {
            let th = inst.solution.theta.eval_raw(x, t).unwrap();
            assert!((th - (t - 0.5 * x + 0.25)).abs() < 1e-14);
        }
        for (name, r) in self_check(inst, 50).unwrap() {
            assert!(r <= 1e-12, "`{name}` residual {r}");
        }
    }

    #[test]
    fn s12_instantiation_is_the_quadratic_heat_case() {
        // f = 1 gives u_t = u_xx + 2k + beta with u = -k x^2 + alpha x + beta t + C.
        let inst = &default_instantiation("S12").unwrap()[0];
        assert!((inst.coeffs.h.eval_raw(0.5).unwrap() - (0.7 + 1.2)).abs() < 1e-15);
        let u = |x: f64, t: f64| -0.6 * x * x + 0.8 * x + 0.7 * t + 1.5;
        let map = inst.solution.monotone_map().unwrap();
        for (x, t) in [(0.3, 0.4), (0.9, 0.8)] {
            let th = inst.solution.theta.eval_raw(x, t).unwrap();
            assert!((map.invert(th).unwrap() - u(x, t)).abs() < 1e-12);
        }
    }

    #[test]
    fn s15_spec_instantiation() {
        // f = 1, xi = 1, g = 0: h == -(k+1), u = -k t + ln x + C1 on x > 0.
        let slots = SlotValues::new()
            .with_fn("f", constant(1.0))
            .with_fn("xi", constant(1.0))
            .with_fn("g", constant(0.0))
            .with_u_window(Interval::new(-2.0, 2.0));
        let inst = &instantiate("S15", &slots).unwrap()[0];
        let k = 0.6;
        for u in [-0.5, 0.5] {
            assert!((inst.coeffs.h.eval_raw(u).unwrap() + (k + 1.0)).abs() < 1e-14);
        }
        for (name, r) in self_check(inst, 50).unwrap() {
            assert!(r <= 1e-12, "`{name}` residual {r}");
        }
    }

    #[test]
    fn s16_diffusion_term_vanishes_on_solution() {
        let inst = &default_instantiation("S16").unwrap()[0];
        let found = self_check(inst, 50)
            .unwrap()
            .into_iter()
            .find(|(n, _)| n.contains("diffusion term vanishes"))
            .expect("constraint present");
        assert!(found.1 <= 1e-10, "residual {}", found.1);
    }

    #[test]
    fn s08_special_case_reduces_to_simpler_equation() {
        // k = -1, f = 1, s = 0: the convective coefficient g = k + f vanishes
        // and c = -x^2/a.
        let slots = SlotValues::new()
            .with_fn("f", constant(1.0))
            .with_const("k", -1.0)
            .with_const("s", 0.0)
            .with_u_window(Interval::new(-0.4, 6.0));
        let insts = instantiate("S08", &slots).unwrap();
        let inst = &insts[0];
        for u in [-0.2, 1.0, 4.0] {
            assert!(inst.coeffs.g.eval_raw(u).unwrap().abs() < 1e-15);
        }
        for x in [0.6, 1.0, 1.4] {
            let c = inst.coeffs.c.eval_raw(x).unwrap();
            let a = inst.coeffs.a.eval_raw(x).unwrap();
            assert!((c + x * x / a).abs() < 1e-14);
        }
    }

    #[test]
    fn s28_default_omega_is_the_quadratic() {
        // n = -1, a = 1, k = 1: omega = -x^2/2 + C1 x + C2.
        let inst = &default_instantiation("S28").unwrap()[0];
        let th = &inst.solution.theta;
        for (x, t) in [(0.6, 1.2), (1.3, 1.9)] {
            let omega = -x * x / 2.0 + 0.3 * x + 2.0;
            assert!((th.eval_raw(x, t).unwrap() - omega / t).abs() < 1e-13);
        }
        assert!(matches!(
            instantiate("S28", &SlotValues::new().with_const("n", 2.0)),
            Err(CatalogError::Window { .. })
        ));
    }

    #[test]
    fn s32_explicit_form_matches_quarter_square() {
        let inst = &default_instantiation("S32").unwrap()[0];
        let map = inst.solution.monotone_map().unwrap();
        for (x, t) in [(0.2, 0.3), (0.8, 0.9)] {
            let th = inst.solution.theta.eval_raw(x, t).unwrap();
            let u = map.invert(th).unwrap();
            // theta = xi t + eta - 2 (anchor at u0 = 1), so u = ((theta+2)/2)^2.
            let explicit = ((th + 2.0) / 2.0) * ((th + 2.0) / 2.0);
            assert!((u - explicit).abs() < 1e-10, "u {u} vs explicit {explicit}");
        }
    }

    #[test]
    fn window_error_on_sign_changing_zeta() {
        // S01 with g chosen so k G + C2 crosses zero on the window.
        let slots = SlotValues::new()
            .with_fn("g", constant(1.0))
            .with_fn("f", constant(1.0))
            .with_const("C2", 0.5)
            .with_const("k", 1.0)
            .with_u_window(Interval::new(-3.0, 3.0));
        // denominator = u + 0.5 crosses zero inside (-3, 3).
        assert!(matches!(
            instantiate("S01", &slots),
            Err(CatalogError::Window { .. })
        ));
    }

    #[test]
    fn pool_covers_documented_ids() {
        for id in pool_ids() {
            assert!(pool_fn(id).is_some());
        }
        assert!(pool_fn("bogus").is_none());
    }
}
