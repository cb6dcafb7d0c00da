//! Anchored antiderivatives: closed form when one is known, adaptive
//! Simpson quadrature otherwise.

use crate::expr::{constant, var, Expr, FuncError, Interval};

pub const QUAD_TOL: f64 = 1e-12;
pub const QUAD_MAX_DEPTH: usize = 40;

/// `F(u) = ∫_{anchor}^{u} integrand(s) ds`, so `F(anchor) = 0` exactly.
///
/// When a closed form `T` is available the value is `T(u) - T(anchor)`;
/// otherwise each evaluation runs adaptive quadrature to [`QUAD_TOL`].
#[derive(Clone)]
pub struct Antiderivative {
    integrand: Expr,
    anchor: f64,
    /// Total antiderivative `T` (defined up to a constant).
    closed: Option<Expr>,
    closed_at_anchor: f64,
    tol: f64,
}

impl std::fmt::Debug for Antiderivative {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Antiderivative(int[{}..u] {} ds, {})",
            self.anchor,
            self.integrand.display_with("s"),
            if self.closed.is_some() {
                "closed"
            } else {
                "quadrature"
            }
        )
    }
}

impl Antiderivative {
    /// Build, deriving a closed form from the pattern table when possible.
    pub fn new(integrand: Expr, anchor: f64) -> Antiderivative {
        let closed = closed_antiderivative(&integrand);
        Self::assemble(integrand, anchor, closed)
    }

    /// Build with a caller-supplied closed form `T` (total, unanchored).
    pub fn with_closed(integrand: Expr, anchor: f64, closed: Expr) -> Antiderivative {
        Self::assemble(integrand, anchor, Some(closed))
    }

    /// Force the quadrature path even when a closed form is derivable.
    pub fn quadrature_only(integrand: Expr, anchor: f64) -> Antiderivative {
        Self::assemble(integrand, anchor, None)
    }

    fn assemble(integrand: Expr, anchor: f64, closed: Option<Expr>) -> Antiderivative {
        let closed_at_anchor = closed
            .as_ref()
            .and_then(|t| t.eval_raw(anchor).ok())
            .unwrap_or(0.0);
        Antiderivative {
            integrand,
            anchor,
            closed,
            closed_at_anchor,
            tol: QUAD_TOL,
        }
    }

    pub fn integrand(&self) -> &Expr {
        &self.integrand
    }

    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn has_closed_form(&self) -> bool {
        self.closed.is_some()
    }

    pub fn value(&self, u: f64) -> Result<f64, FuncError> {
        if u == self.anchor {
            return Ok(0.0);
        }
        match &self.closed {
            Some(t) => Ok(t.eval_raw(u)? - self.closed_at_anchor),
            None => adaptive_simpson(
                &|s| self.integrand.eval_raw(s),
                self.anchor,
                u,
                self.tol,
                QUAD_MAX_DEPTH,
            ),
        }
    }

    /// Value by quadrature regardless of the closed form (cross-check path).
    pub fn value_by_quadrature(&self, u: f64) -> Result<f64, FuncError> {
        adaptive_simpson(
            &|s| self.integrand.eval_raw(s),
            self.anchor,
            u,
            self.tol,
            QUAD_MAX_DEPTH,
        )
    }

    /// Wrap as an expression node. Closed-form antiderivatives become plain
    /// trees; quadrature-backed ones embed an integral node.
    pub fn into_expr(self) -> Expr {
        match &self.closed {
            Some(t) => {
                let d = self.integrand.domain();
                (t.clone() - constant(self.closed_at_anchor)).with_domain(d)
            }
            None => Expr::from_integral(self),
        }
    }
}

/// Adaptive Simpson with Richardson correction. Signature takes a fallible
/// integrand so quadrature of quadrature-backed expressions composes.
pub fn adaptive_simpson(
    f: &dyn Fn(f64) -> Result<f64, FuncError>,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: usize,
) -> Result<f64, FuncError> {
    if a == b {
        return Ok(0.0);
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let m = 0.5 * (lo + hi);
    let flo = f(lo)?;
    let fm = f(m)?;
    let fhi = f(hi)?;
    let whole = (hi - lo) * (flo + 4.0 * fm + fhi) / 6.0;
    let v = simpson_step(f, lo, m, hi, flo, fm, fhi, whole, tol, max_depth)?;
    Ok(sign * v)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> Result<f64, FuncError>,
    a: f64,
    m: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<f64, FuncError> {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = (m - a) * (fa + 4.0 * flm + fm) / 6.0;
    let right = (b - m) * (fm + 4.0 * frm + fb) / 6.0;
    let delta = left + right - whole;
    let scale = tol.max(tol * whole.abs());
    if delta.abs() <= 15.0 * scale {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(FuncError::QuadratureFailure {
            a,
            b,
            tol,
            max_depth: QUAD_MAX_DEPTH,
        });
    }
    let l = simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?;
    let r = simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}

/// Pattern table for total antiderivatives of the shapes the catalog and the
/// built-in function pool produce. Deliberately small; anything else falls
/// back to quadrature.
pub fn closed_antiderivative(e: &Expr) -> Option<Expr> {
    use crate::expr::Node;
    match e.node() {
        Node::Const(c) => Some(constant(*c) * var()),
        Node::Var => Some(var().powf(2.0) / 2.0),
        Node::Sum(a, b) => Some(closed_antiderivative(a)? + closed_antiderivative(b)?),
        Node::Diff(a, b) => Some(closed_antiderivative(a)? - closed_antiderivative(b)?),
        Node::Prod(a, b) => {
            if let Some(c) = a.as_const() {
                Some(constant(c) * closed_antiderivative(b)?)
            } else if let Some(c) = b.as_const() {
                Some(closed_antiderivative(a)? * c)
            } else {
                None
            }
        }
        Node::Quot(a, b) => {
            if let Some(c) = b.as_const() {
                Some(closed_antiderivative(a)? / c)
            } else if let (Some(c), Some((al, _))) = (a.as_const(), as_linear(b)) {
                // c / (al*u + be)
                if al != 0.0 {
                    Some(constant(c / al) * b.clone().ln())
                } else {
                    None
                }
            } else if let (Some(c), Node::Pow(base, n)) = (a.as_const(), b.node()) {
                // c / (al*u + be)^n, n != 1
                let (al, _) = as_linear(base)?;
                if al != 0.0 && *n != 1.0 {
                    Some(constant(c / (al * (1.0 - n))) * base.clone().powf(1.0 - n))
                } else {
                    None
                }
            } else if let (Some((c1, a1, b1)), Some((c2, a2, b2))) = (as_cexp(a), as_cexp(b)) {
                // ratio of scaled exponentials
                let alpha = a1 - a2;
                let scale = c1 / c2;
                if alpha == 0.0 {
                    Some(constant(scale * (b1 - b2).exp()) * var())
                } else {
                    Some(constant(scale / alpha) * (var() * alpha + (b1 - b2)).exp())
                }
            } else if let (Some((c1, n1)), Some((c2, n2))) = (as_cpow(a), as_cpow(b)) {
                // ratio of scaled powers of u
                let n = n1 - n2;
                let c = c1 / c2;
                if n == -1.0 {
                    Some(constant(c) * var().ln())
                } else {
                    Some(constant(c / (n + 1.0)) * var().powf(n + 1.0))
                }
            } else {
                None
            }
        }
        Node::Pow(base, n) => {
            let (al, _) = as_linear(base)?;
            if al == 0.0 {
                return None;
            }
            if *n == -1.0 {
                Some(base.clone().ln() / al)
            } else {
                Some(base.clone().powf(n + 1.0) / (al * (n + 1.0)))
            }
        }
        Node::Exp(inner) => {
            let (al, _) = as_linear(inner)?;
            (al != 0.0).then(|| inner.clone().exp() / al)
        }
        Node::Sin(inner) => {
            let (al, _) = as_linear(inner)?;
            (al != 0.0).then(|| constant(-1.0 / al) * inner.clone().cos())
        }
        Node::Cos(inner) => {
            let (al, _) = as_linear(inner)?;
            (al != 0.0).then(|| inner.clone().sin() / al)
        }
        Node::Sqrt(inner) => {
            let (al, _) = as_linear(inner)?;
            (al != 0.0).then(|| constant(2.0 / (3.0 * al)) * inner.clone().powf(1.5))
        }
        Node::Ln(inner) => {
            let (al, _) = as_linear(inner)?;
            (al != 0.0)
                .then(|| (inner.clone() * inner.clone().ln() - inner.clone()) / al)
        }
        _ => None,
    }
}

/// Recognize `c * exp(alpha u + beta)`.
fn as_cexp(e: &Expr) -> Option<(f64, f64, f64)> {
    use crate::expr::Node;
    match e.node() {
        Node::Const(c) => Some((*c, 0.0, 0.0)),
        Node::Exp(inner) => {
            let (al, be) = as_linear(inner)?;
            Some((1.0, al, be))
        }
        Node::Prod(a, b) => {
            if let Some(c) = a.as_const() {
                let (s, al, be) = as_cexp(b)?;
                Some((c * s, al, be))
            } else if let Some(c) = b.as_const() {
                let (s, al, be) = as_cexp(a)?;
                Some((c * s, al, be))
            } else {
                None
            }
        }
        Node::Quot(a, b) => {
            let c = b.as_const()?;
            let (s, al, be) = as_cexp(a)?;
            Some((s / c, al, be))
        }
        _ => None,
    }
}

/// Recognize `c * u^n`.
fn as_cpow(e: &Expr) -> Option<(f64, f64)> {
    use crate::expr::Node;
    match e.node() {
        Node::Const(c) => Some((*c, 0.0)),
        Node::Var => Some((1.0, 1.0)),
        Node::Pow(base, n) => {
            if matches!(base.node(), Node::Var) {
                Some((1.0, *n))
            } else {
                None
            }
        }
        Node::Sqrt(base) => {
            if matches!(base.node(), Node::Var) {
                Some((1.0, 0.5))
            } else {
                None
            }
        }
        Node::Prod(a, b) => {
            if let Some(c) = a.as_const() {
                let (s, n) = as_cpow(b)?;
                Some((c * s, n))
            } else if let Some(c) = b.as_const() {
                let (s, n) = as_cpow(a)?;
                Some((c * s, n))
            } else {
                None
            }
        }
        Node::Quot(a, b) => {
            let c = b.as_const()?;
            let (s, n) = as_cpow(a)?;
            Some((s / c, n))
        }
        _ => None,
    }
}

/// Recognize `alpha*u + beta`.
fn as_linear(e: &Expr) -> Option<(f64, f64)> {
    use crate::expr::Node;
    match e.node() {
        Node::Const(c) => Some((0.0, *c)),
        Node::Var => Some((1.0, 0.0)),
        Node::Sum(a, b) => {
            let (a1, b1) = as_linear(a)?;
            let (a2, b2) = as_linear(b)?;
            Some((a1 + a2, b1 + b2))
        }
        Node::Diff(a, b) => {
            let (a1, b1) = as_linear(a)?;
            let (a2, b2) = as_linear(b)?;
            Some((a1 - a2, b1 - b2))
        }
        Node::Prod(a, b) => {
            if let Some(c) = a.as_const() {
                let (al, be) = as_linear(b)?;
                Some((c * al, c * be))
            } else if let Some(c) = b.as_const() {
                let (al, be) = as_linear(a)?;
                Some((c * al, c * be))
            } else {
                None
            }
        }
        Node::Quot(a, b) => {
            let c = b.as_const()?;
            let (al, be) = as_linear(a)?;
            Some((al / c, be / c))
        }
        _ => None,
    }
}

/// Validity window helper: antiderivative of `e` from `anchor`, wrapped as an
/// expression usable inside further formulas.
pub fn antideriv_expr(e: &Expr, anchor: f64) -> Expr {
    Antiderivative::new(e.clone(), anchor).into_expr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, FRAC_PI_2};

    #[test]
    fn anchored_log() {
        // integrand 1/u, anchor 1, evaluate at e -> 1
        let ad = Antiderivative::new(
            (1.0 / var()).with_domain(Interval::new(0.0, f64::INFINITY)),
            1.0,
        );
        assert!(ad.has_closed_form());
        assert!((ad.value(E).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(ad.value(1.0).unwrap(), 0.0);
    }

    #[test]
    fn anchored_sine() {
        // integrand cos(u), anchor 0, evaluate at pi/2 -> 1
        let ad = Antiderivative::new(var().cos(), 0.0);
        assert!((ad.value(FRAC_PI_2).unwrap() - 1.0).abs() < 1e-12);
    }

    // Independent oracles for ∫_0^1 exp(-u^2) du: test-local adaptive Simpson
    // written against raw closures, plus a composite Gauss-Legendre 5-point rule.
    fn oracle_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
        fn rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: usize) -> f64 {
            let m = 0.5 * (a + b);
            let lm = 0.5 * (a + m);
            let rm = 0.5 * (m + b);
            let flm = f(lm);
            let frm = f(rm);
            let left = (m - a) * (fa + 4.0 * flm + fm) / 6.0;
            let right = (b - m) * (fm + 4.0 * frm + fb) / 6.0;
            if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
                left + right + (left + right - whole) / 15.0
            } else {
                rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                    + rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
            }
        }
        let m = 0.5 * (a + b);
        let (fa, fm, fb) = (f(a), f(m), f(b));
        let whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0;
        rec(f, a, b, fa, fm, fb, whole, tol, 48)
    }

    fn oracle_gauss5_composite(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
        // 5-point Gauss-Legendre nodes/weights on [-1, 1].
        const X: [f64; 5] = [
            -0.906179845938663992797626878299,
            -0.538469310105683091036314420700,
            0.0,
            0.538469310105683091036314420700,
            0.906179845938663992797626878299,
        ];
        const W: [f64; 5] = [
            0.236926885056189087514264040720,
            0.478628670499366468041291514836,
            0.568888888888888888888888888889,
            0.478628670499366468041291514836,
            0.236926885056189087514264040720,
        ];
        let h = (b - a) / panels as f64;
        let mut total = 0.0;
        for p in 0..panels {
            let lo = a + h * p as f64;
            let mid = lo + 0.5 * h;
            for i in 0..5 {
                total += W[i] * f(mid + 0.5 * h * X[i]);
            }
        }
        total * 0.5 * h
    }

    #[test]
    fn gaussian_integral_matches_independent_oracles() {
        let f = |u: f64| (-u * u).exp();
        let simpson = oracle_simpson(&f, 0.0, 1.0, 1e-12);
        let gauss = oracle_gauss5_composite(&f, 0.0, 1.0, 64);
        // Frozen from the oracles (= sqrt(pi)/2 * erf(1)).
        let frozen = 0.746824132812427_f64;
        assert!((simpson - frozen).abs() < 1e-12, "simpson oracle {simpson}");
        assert!((gauss - frozen).abs() < 1e-12, "gauss oracle {gauss}");
        assert!((simpson - gauss).abs() < 1e-12);

        // Production path: no closed form for exp(-u^2), so this exercises quadrature.
        let ad = Antiderivative::new((-(var() * var())).exp(), 0.0);
        assert!(!ad.has_closed_form());
        let got = ad.value(1.0).unwrap();
        assert!((got - simpson).abs() < 1e-11, "production {got}");
    }

    #[test]
    fn quadrature_direction_is_signed() {
        let ad = Antiderivative::quadrature_only(var().cos(), 0.0);
        let fwd = ad.value(1.0).unwrap();
        let back = ad.value(-1.0).unwrap();
        assert!((fwd - 1.0_f64.sin()).abs() < 1e-12);
        assert!((back + 1.0_f64.sin()).abs() < 1e-12);
    }

    #[test]
    fn closed_and_quadrature_agree() {
        let integrand = var().exp() + 1.0 / (var() * 2.0 + 3.0);
        let ad = Antiderivative::new(
            integrand.with_domain(Interval::new(-1.4, f64::INFINITY)),
            0.0,
        );
        assert!(ad.has_closed_form());
        for &u in &[-0.8, -0.2, 0.4, 1.3, 2.0] {
            let c = ad.value(u).unwrap();
            let q = ad.value_by_quadrature(u).unwrap();
            assert!((c - q).abs() < 1e-10, "u={u}: closed {c} vs quad {q}");
        }
    }

    #[test]
    fn derivative_of_integral_node_is_integrand() {
        let integrand = (-(var() * var())).exp();
        let e = Antiderivative::new(integrand.clone(), 0.0).into_expr();
        let d = e.differentiate();
        for &u in &[0.0, 0.5, 1.0] {
            assert!((d.eval_raw(u).unwrap() - integrand.eval_raw(u).unwrap()).abs() < 1e-15);
        }
    }

    #[test]
    fn pattern_table_covers_pool() {
        let pool = [
            constant(1.0),
            var(),
            var().exp(),
            (-var()).exp(),
            1.0 + var().powf(2.0),
            var().cos() + 2.0,
        ];
        for e in pool {
            let t = closed_antiderivative(&e).expect("pool function integrable");
            // T' == e pointwise
            let d = t.differentiate();
            for &u in &[-1.1, 0.3, 2.2] {
                assert!(
                    (d.eval_raw(u).unwrap() - e.eval_raw(u).unwrap()).abs() < 1e-11,
                    "table wrong for {e}"
                );
            }
        }
    }

    #[test]
    fn quadrature_failure_is_an_error_value() {
        // 1/u over an interval containing 0 cannot converge.
        let bad = (1.0 / var()).with_domain(Interval::REAL);
        let r = adaptive_simpson(&|s| bad.eval_raw(s), -1.0, 2.0, 1e-12, 12);
        assert!(matches!(r, Err(FuncError::QuadratureFailure { .. })) || r.unwrap().is_nan());
    }
}
