//! Closed-form univariate functions with exact symbolic differentiation.
//!
//! An [`Expr`] is an immutable tree over one real variable. Trees are shared
//! via `Arc`, evaluation is pure, and the only rewriting ever performed is
//! constant folding at construction time. Every expression carries an open
//! interval on which it is declared to be defined; safety on that interval is
//! certified by sampling (see [`Expr::certify_on`]), not by symbolic analysis.

use std::fmt;
use std::sync::Arc;

use crate::antideriv::Antiderivative;

/// Errors raised by expression evaluation and quadrature.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FuncError {
    #[error("argument {x} outside declared domain ({lo}, {hi})")]
    OutsideDomain { x: f64, lo: f64, hi: f64 },
    #[error("expression evaluated to a non-finite value at {x}")]
    NonFinite { x: f64 },
    #[error("adaptive quadrature on [{a}, {b}] did not reach tolerance {tol} within depth {max_depth}")]
    QuadratureFailure {
        a: f64,
        b: f64,
        tol: f64,
        max_depth: usize,
    },
}

/// An open real interval. Also used (with closed-endpoint queries) for the
/// sampling windows of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const REAL: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub fn new(lo: f64, hi: f64) -> Interval {
        assert!(lo < hi, "interval requires lo < hi, got [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn contains_open(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    pub fn contains_closed(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    pub fn span(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// `n` points spanning the closed interval, endpoints included.
    /// Only meaningful for bounded intervals.
    pub fn linspace(&self, n: usize) -> Vec<f64> {
        assert!(n >= 2);
        assert!(self.lo.is_finite() && self.hi.is_finite());
        let h = self.span() / (n - 1) as f64;
        (0..n).map(|i| self.lo + h * i as f64).collect()
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Node {
    Const(f64),
    Var,
    Sum(Expr, Expr),
    Diff(Expr, Expr),
    Prod(Expr, Expr),
    Quot(Expr, Expr),
    /// Real (possibly rational) exponent.
    Pow(Expr, f64),
    Exp(Expr),
    Ln(Expr),
    Sin(Expr),
    Cos(Expr),
    Sqrt(Expr),
    /// `outer` applied to the value of `inner`.
    Compose(Expr, Expr),
    /// Anchored integral of a stored integrand; see [`Antiderivative`].
    Integral(Antiderivative),
}

struct Inner {
    node: Node,
    domain: Interval,
}

/// A closed-form function of one real variable.
#[derive(Clone)]
pub struct Expr(Arc<Inner>);

fn mk(node: Node, domain: Interval) -> Expr {
    Expr(Arc::new(Inner { node, domain }))
}

/// The variable.
pub fn var() -> Expr {
    mk(Node::Var, Interval::REAL)
}

/// A constant.
pub fn constant(c: f64) -> Expr {
    mk(Node::Const(c), Interval::REAL)
}

impl Expr {
    pub fn domain(&self) -> Interval {
        self.0.domain
    }

    pub(crate) fn node(&self) -> &Node {
        &self.0.node
    }

    /// Same tree, narrower declared domain.
    pub fn with_domain(&self, domain: Interval) -> Expr {
        mk(self.0.node.clone(), domain)
    }

    pub fn as_const(&self) -> Option<f64> {
        match self.0.node {
            Node::Const(c) => Some(c),
            _ => None,
        }
    }

    fn binary_domain(a: &Expr, b: &Expr) -> Interval {
        a.domain().intersect(&b.domain())
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => constant(x + y),
            (Some(0.0), _) => b,
            (_, Some(0.0)) => a,
            _ => {
                let d = Expr::binary_domain(&a, &b);
                mk(Node::Sum(a, b), d)
            }
        }
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => constant(x - y),
            (_, Some(0.0)) => a,
            _ => {
                let d = Expr::binary_domain(&a, &b);
                mk(Node::Diff(a, b), d)
            }
        }
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => constant(x * y),
            (Some(0.0), _) | (_, Some(0.0)) => constant(0.0),
            (Some(1.0), _) => b,
            (_, Some(1.0)) => a,
            _ => {
                let d = Expr::binary_domain(&a, &b);
                mk(Node::Prod(a, b), d)
            }
        }
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => constant(x / y),
            (Some(0.0), _) => constant(0.0),
            (_, Some(1.0)) => a,
            _ => {
                let d = Expr::binary_domain(&a, &b);
                mk(Node::Quot(a, b), d)
            }
        }
    }

    pub fn powf(self, n: f64) -> Expr {
        if n == 0.0 {
            return constant(1.0);
        }
        if n == 1.0 {
            return self;
        }
        if let Some(c) = self.as_const() {
            return constant(c.powf(n));
        }
        let d = self.domain();
        mk(Node::Pow(self, n), d)
    }

    pub fn exp(self) -> Expr {
        if let Some(c) = self.as_const() {
            return constant(c.exp());
        }
        let d = self.domain();
        mk(Node::Exp(self, ), d)
    }

    pub fn ln(self) -> Expr {
        if let Some(c) = self.as_const() {
            return constant(c.ln());
        }
        let d = self.domain();
        mk(Node::Ln(self), d)
    }

    pub fn sin(self) -> Expr {
        if let Some(c) = self.as_const() {
            return constant(c.sin());
        }
        let d = self.domain();
        mk(Node::Sin(self), d)
    }

    pub fn cos(self) -> Expr {
        if let Some(c) = self.as_const() {
            return constant(c.cos());
        }
        let d = self.domain();
        mk(Node::Cos(self), d)
    }

    pub fn sqrt(self) -> Expr {
        if let Some(c) = self.as_const() {
            return constant(c.sqrt());
        }
        let d = self.domain();
        mk(Node::Sqrt(self), d)
    }

    /// `outer(inner(x))`; `outer` is an expression in its own variable.
    pub fn compose(outer: Expr, inner: Expr) -> Expr {
        if let Some(c) = inner.as_const() {
            if let Ok(v) = outer.eval_raw(c) {
                return constant(v);
            }
        }
        if matches!(inner.node(), Node::Var) {
            return outer;
        }
        let d = inner.domain();
        mk(Node::Compose(outer, inner), d)
    }

    pub(crate) fn from_integral(ad: Antiderivative) -> Expr {
        let d = ad.integrand().domain();
        mk(Node::Integral(ad), d)
    }

    /// Evaluate at `x`, checking the declared domain.
    pub fn eval(&self, x: f64) -> Result<f64, FuncError> {
        let d = self.domain();
        if !d.contains_open(x) {
            return Err(FuncError::OutsideDomain {
                x,
                lo: d.lo,
                hi: d.hi,
            });
        }
        let v = self.eval_raw(x)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(FuncError::NonFinite { x })
        }
    }

    /// Evaluate without the domain gate. Quadrature-backed nodes may still fail.
    pub fn eval_raw(&self, x: f64) -> Result<f64, FuncError> {
        Ok(match &self.0.node {
            Node::Const(c) => *c,
            Node::Var => x,
            Node::Sum(a, b) => a.eval_raw(x)? + b.eval_raw(x)?,
            Node::Diff(a, b) => a.eval_raw(x)? - b.eval_raw(x)?,
            Node::Prod(a, b) => a.eval_raw(x)? * b.eval_raw(x)?,
            Node::Quot(a, b) => a.eval_raw(x)? / b.eval_raw(x)?,
            Node::Pow(a, n) => a.eval_raw(x)?.powf(*n),
            Node::Exp(a) => a.eval_raw(x)?.exp(),
            Node::Ln(a) => a.eval_raw(x)?.ln(),
            Node::Sin(a) => a.eval_raw(x)?.sin(),
            Node::Cos(a) => a.eval_raw(x)?.cos(),
            Node::Sqrt(a) => a.eval_raw(x)?.sqrt(),
            Node::Compose(outer, inner) => outer.eval_raw(inner.eval_raw(x)?)?,
            Node::Integral(ad) => ad.value(x)?,
        })
    }

    /// Exact symbolic derivative, on the same declared domain.
    pub fn differentiate(&self) -> Expr {
        let d = self.domain();
        let out = match &self.0.node {
            Node::Const(_) => constant(0.0),
            Node::Var => constant(1.0),
            Node::Sum(a, b) => Expr::add(a.differentiate(), b.differentiate()),
            Node::Diff(a, b) => Expr::sub(a.differentiate(), b.differentiate()),
            Node::Prod(a, b) => Expr::add(
                Expr::mul(a.differentiate(), b.clone()),
                Expr::mul(a.clone(), b.differentiate()),
            ),
            Node::Quot(a, b) => Expr::div(
                Expr::sub(
                    Expr::mul(a.differentiate(), b.clone()),
                    Expr::mul(a.clone(), b.differentiate()),
                ),
                Expr::mul(b.clone(), b.clone()),
            ),
            Node::Pow(a, n) => Expr::mul(
                Expr::mul(constant(*n), a.clone().powf(n - 1.0)),
                a.differentiate(),
            ),
            Node::Exp(a) => Expr::mul(a.clone().exp(), a.differentiate()),
            Node::Ln(a) => Expr::div(a.differentiate(), a.clone()),
            Node::Sin(a) => Expr::mul(a.clone().cos(), a.differentiate()),
            Node::Cos(a) => Expr::mul(
                constant(-1.0),
                Expr::mul(a.clone().sin(), a.differentiate()),
            ),
            Node::Sqrt(a) => Expr::div(
                a.differentiate(),
                Expr::mul(constant(2.0), a.clone().sqrt()),
            ),
            Node::Compose(outer, inner) => Expr::mul(
                Expr::compose(outer.differentiate(), inner.clone()),
                inner.differentiate(),
            ),
            Node::Integral(ad) => ad.integrand().clone(),
        };
        out.with_domain(d)
    }

    /// Sample `n` points of the closed window and confirm finite evaluation.
    /// The window must sit inside the declared domain.
    pub fn certify_on(&self, window: Interval, n: usize) -> Result<(), FuncError> {
        for x in window.linspace(n.max(2)) {
            let v = self.eval_raw(x)?;
            if !v.is_finite() {
                return Err(FuncError::NonFinite { x });
            }
        }
        Ok(())
    }

    /// Structural equality (same tree shape, bit-equal constants).
    pub fn structural_eq(&self, other: &Expr) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&self.0.node, &other.0.node) {
            (Node::Const(a), Node::Const(b)) => a == b,
            (Node::Var, Node::Var) => true,
            (Node::Sum(a1, b1), Node::Sum(a2, b2))
            | (Node::Diff(a1, b1), Node::Diff(a2, b2))
            | (Node::Prod(a1, b1), Node::Prod(a2, b2))
            | (Node::Quot(a1, b1), Node::Quot(a2, b2))
            | (Node::Compose(a1, b1), Node::Compose(a2, b2)) => {
                a1.structural_eq(a2) && b1.structural_eq(b2)
            }
            (Node::Pow(a1, n1), Node::Pow(a2, n2)) => n1 == n2 && a1.structural_eq(a2),
            (Node::Exp(a1), Node::Exp(a2))
            | (Node::Ln(a1), Node::Ln(a2))
            | (Node::Sin(a1), Node::Sin(a2))
            | (Node::Cos(a1), Node::Cos(a2))
            | (Node::Sqrt(a1), Node::Sqrt(a2)) => a1.structural_eq(a2),
            (Node::Integral(a1), Node::Integral(a2)) => {
                a1.anchor() == a2.anchor() && a1.integrand().structural_eq(a2.integrand())
            }
            _ => false,
        }
    }

    /// Render with a chosen variable symbol.
    pub fn display_with(&self, v: &str) -> String {
        let mut s = String::new();
        self.fmt_prec(&mut s, v, 0);
        s
    }

    fn fmt_prec(&self, out: &mut String, v: &str, parent: u8) {
        use std::fmt::Write;
        let prec = match &self.0.node {
            Node::Const(_) | Node::Var => 4,
            Node::Exp(_) | Node::Ln(_) | Node::Sin(_) | Node::Cos(_) | Node::Sqrt(_) => 4,
            Node::Compose(..) | Node::Integral(_) => 4,
            Node::Pow(..) => 3,
            Node::Prod(..) | Node::Quot(..) => 2,
            Node::Sum(..) | Node::Diff(..) => 1,
        };
        let need_paren = prec < parent;
        if need_paren {
            out.push('(');
        }
        match &self.0.node {
            Node::Const(c) => {
                if *c < 0.0 {
                    let _ = write!(out, "({c})");
                } else {
                    let _ = write!(out, "{c}");
                }
            }
            Node::Var => out.push_str(v),
            Node::Sum(a, b) => {
                a.fmt_prec(out, v, 1);
                out.push_str(" + ");
                b.fmt_prec(out, v, 2);
            }
            Node::Diff(a, b) => {
                a.fmt_prec(out, v, 1);
                out.push_str(" - ");
                b.fmt_prec(out, v, 2);
            }
            Node::Prod(a, b) => {
                a.fmt_prec(out, v, 2);
                out.push('*');
                b.fmt_prec(out, v, 3);
            }
            Node::Quot(a, b) => {
                a.fmt_prec(out, v, 2);
                out.push('/');
                b.fmt_prec(out, v, 3);
            }
            Node::Pow(a, n) => {
                a.fmt_prec(out, v, 4);
                let _ = write!(out, "^{n}");
            }
            Node::Exp(a) => {
                out.push_str("exp(");
                a.fmt_prec(out, v, 0);
                out.push(')');
            }
            Node::Ln(a) => {
                out.push_str("ln(");
                a.fmt_prec(out, v, 0);
                out.push(')');
            }
            Node::Sin(a) => {
                out.push_str("sin(");
                a.fmt_prec(out, v, 0);
                out.push(')');
            }
            Node::Cos(a) => {
                out.push_str("cos(");
                a.fmt_prec(out, v, 0);
                out.push(')');
            }
            Node::Sqrt(a) => {
                out.push_str("sqrt(");
                a.fmt_prec(out, v, 0);
                out.push(')');
            }
            Node::Compose(outer, inner) => {
                out.push('[');
                outer.fmt_prec(out, "@", 0);
                out.push_str("]@(");
                inner.fmt_prec(out, v, 0);
                out.push(')');
            }
            Node::Integral(ad) => {
                let _ = write!(out, "int[{}..{v}](", ad.anchor());
                ad.integrand().fmt_prec(out, "s", 0);
                out.push_str(") ds");
            }
        }
        if need_paren {
            out.push(')');
        }
    }

    /// Feed a canonical byte rendering into a hash state.
    pub fn hash_into(&self, h: &mut crate::report::Fnv) {
        match &self.0.node {
            Node::Const(c) => {
                h.byte(0);
                h.bits(c.to_bits());
            }
            Node::Var => h.byte(1),
            Node::Sum(a, b) => {
                h.byte(2);
                a.hash_into(h);
                b.hash_into(h);
            }
            Node::Diff(a, b) => {
                h.byte(3);
                a.hash_into(h);
                b.hash_into(h);
            }
            Node::Prod(a, b) => {
                h.byte(4);
                a.hash_into(h);
                b.hash_into(h);
            }
            Node::Quot(a, b) => {
                h.byte(5);
                a.hash_into(h);
                b.hash_into(h);
            }
            Node::Pow(a, n) => {
                h.byte(6);
                h.bits(n.to_bits());
                a.hash_into(h);
            }
            Node::Exp(a) => {
                h.byte(7);
                a.hash_into(h);
            }
            Node::Ln(a) => {
                h.byte(8);
                a.hash_into(h);
            }
            Node::Sin(a) => {
                h.byte(9);
                a.hash_into(h);
            }
            Node::Cos(a) => {
                h.byte(10);
                a.hash_into(h);
            }
            Node::Sqrt(a) => {
                h.byte(11);
                a.hash_into(h);
            }
            Node::Compose(a, b) => {
                h.byte(12);
                a.hash_into(h);
                b.hash_into(h);
            }
            Node::Integral(ad) => {
                h.byte(13);
                h.bits(ad.anchor().to_bits());
                ad.integrand().hash_into(h);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("u"))
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({self})")
    }
}

// Operator sugar so catalog formulas read like the paper's.
impl std::ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::add(self, rhs)
    }
}
impl std::ops::Add<f64> for Expr {
    type Output = Expr;
    fn add(self, rhs: f64) -> Expr {
        Expr::add(self, constant(rhs))
    }
}
impl std::ops::Add<Expr> for f64 {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::add(constant(self), rhs)
    }
}
impl std::ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::sub(self, rhs)
    }
}
impl std::ops::Sub<f64> for Expr {
    type Output = Expr;
    fn sub(self, rhs: f64) -> Expr {
        Expr::sub(self, constant(rhs))
    }
}
impl std::ops::Sub<Expr> for f64 {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::sub(constant(self), rhs)
    }
}
impl std::ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::mul(self, rhs)
    }
}
impl std::ops::Mul<f64> for Expr {
    type Output = Expr;
    fn mul(self, rhs: f64) -> Expr {
        Expr::mul(self, constant(rhs))
    }
}
impl std::ops::Mul<Expr> for f64 {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::mul(constant(self), rhs)
    }
}
impl std::ops::Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::div(self, rhs)
    }
}
impl std::ops::Div<f64> for Expr {
    type Output = Expr;
    fn div(self, rhs: f64) -> Expr {
        Expr::div(self, constant(rhs))
    }
}
impl std::ops::Div<Expr> for f64 {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::div(constant(self), rhs)
    }
}
impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::mul(constant(-1.0), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "expected {b}, got {a} (tol {tol})");
    }

    #[test]
    fn eval_identity_cases() {
        // sin at 0
        close(var().sin().eval(0.0).unwrap(), 0.0, 0.0);
        // u*exp(u) at 1 -> e
        let e = var() * var().exp();
        close(e.eval(1.0).unwrap(), std::f64::consts::E, 1e-15);
        // ln(x)/x at x=e -> 1/e
        let e = var().ln() / var();
        close(
            e.with_domain(Interval::new(0.0, f64::INFINITY))
                .eval(std::f64::consts::E)
                .unwrap(),
            1.0 / std::f64::consts::E,
            1e-15,
        );
    }

    #[test]
    fn eval_rejects_outside_domain() {
        let e = var().ln().with_domain(Interval::new(0.0, f64::INFINITY));
        assert!(matches!(
            e.eval(-1.0),
            Err(FuncError::OutsideDomain { .. })
        ));
    }

    #[test]
    fn derivative_analytic_cases() {
        // d/du u^2 at 3 -> 6
        let e = var().powf(2.0);
        close(e.differentiate().eval(3.0).unwrap(), 6.0, 1e-13);
        // d/du (u e^u) at 1 -> 2e
        let e = var() * var().exp();
        close(
            e.differentiate().eval(1.0).unwrap(),
            2.0 * std::f64::consts::E,
            1e-13,
        );
        // d/dx ln x at 2 -> 0.5
        let e = var().ln().with_domain(Interval::new(0.0, f64::INFINITY));
        close(e.differentiate().eval(2.0).unwrap(), 0.5, 1e-15);
    }

    #[test]
    fn derivative_of_constant_is_zero_expr() {
        let d = constant(4.25).differentiate();
        assert_eq!(d.as_const(), Some(0.0));
    }

    #[test]
    fn compose_chain_rule() {
        // sin(u^2)' = cos(u^2) * 2u
        let e = Expr::compose(var().sin(), var().powf(2.0));
        let d = e.differentiate();
        let x = 0.7;
        close(d.eval(x).unwrap(), (x * x).cos() * 2.0 * x, 1e-14);
    }

    #[test]
    fn constant_folding() {
        let e = constant(2.0) + constant(3.0);
        assert_eq!(e.as_const(), Some(5.0));
        let e = constant(0.0) * var().exp();
        assert_eq!(e.as_const(), Some(0.0));
        let e = var() * 1.0;
        assert!(e.structural_eq(&var()));
    }

    #[test]
    fn display_roundtrips_meaning() {
        let e = (var() * 2.0 + 1.0) / var().exp();
        let s = e.display_with("x");
        assert!(s.contains("exp"), "{s}");
    }

    #[test]
    fn certify_detects_bad_window() {
        let e = 1.0 / var();
        assert!(e.certify_on(Interval::new(0.5, 1.5), 50).is_ok());
        assert!(e.certify_on(Interval::new(-1.0, 1.0), 51).is_err());
    }
}
