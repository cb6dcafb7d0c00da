//! Closed-form functions of `(x, t)` with symbolic partial derivatives,
//! built from univariate [`Expr`] pieces in either variable.

use std::fmt;
use std::sync::Arc;

use crate::expr::{Expr, FuncError, Interval};

/// Rectangle in the `(x, t)` plane. Grid windows use closed endpoints and
/// must sit strictly inside the open domains of the member expressions.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct XtWindow {
    pub x: Interval,
    pub t: Interval,
}

impl XtWindow {
    pub fn new(x_lo: f64, x_hi: f64, t_lo: f64, t_hi: f64) -> XtWindow {
        XtWindow {
            x: Interval::new(x_lo, x_hi),
            t: Interval::new(t_lo, t_hi),
        }
    }
}

#[derive(Clone)]
enum BNode {
    Const(f64),
    X,
    T,
    OfX(Expr),
    OfT(Expr),
    Sum(BivariateExpr, BivariateExpr),
    Diff(BivariateExpr, BivariateExpr),
    Prod(BivariateExpr, BivariateExpr),
    Quot(BivariateExpr, BivariateExpr),
    Pow(BivariateExpr, f64),
    Exp(BivariateExpr),
    Ln(BivariateExpr),
    Sin(BivariateExpr),
    Cos(BivariateExpr),
    Sqrt(BivariateExpr),
    /// Univariate outer function applied to a bivariate inner value.
    ComposeU(Expr, BivariateExpr),
}

struct BInner {
    node: BNode,
    xdom: Interval,
    tdom: Interval,
}

/// A closed-form function of `(x, t)`.
#[derive(Clone)]
pub struct BivariateExpr(Arc<BInner>);

fn mk(node: BNode, xdom: Interval, tdom: Interval) -> BivariateExpr {
    BivariateExpr(Arc::new(BInner { node, xdom, tdom }))
}

pub fn bconst(c: f64) -> BivariateExpr {
    mk(BNode::Const(c), Interval::REAL, Interval::REAL)
}

/// The spatial variable as a bivariate expression.
pub fn bx() -> BivariateExpr {
    mk(BNode::X, Interval::REAL, Interval::REAL)
}

/// The time variable as a bivariate expression.
pub fn bt() -> BivariateExpr {
    mk(BNode::T, Interval::REAL, Interval::REAL)
}

/// Lift a univariate expression in `x`.
pub fn of_x(e: Expr) -> BivariateExpr {
    if let Some(c) = e.as_const() {
        return bconst(c);
    }
    let d = e.domain();
    mk(BNode::OfX(e), d, Interval::REAL)
}

/// Lift a univariate expression in `t`.
pub fn of_t(e: Expr) -> BivariateExpr {
    if let Some(c) = e.as_const() {
        return bconst(c);
    }
    let d = e.domain();
    mk(BNode::OfT(e), Interval::REAL, d)
}

impl BivariateExpr {
    pub fn x_domain(&self) -> Interval {
        self.0.xdom
    }

    pub fn t_domain(&self) -> Interval {
        self.0.tdom
    }

    pub fn as_const(&self) -> Option<f64> {
        match self.0.node {
            BNode::Const(c) => Some(c),
            _ => None,
        }
    }

    fn join(a: &BivariateExpr, b: &BivariateExpr) -> (Interval, Interval) {
        (
            a.x_domain().intersect(&b.x_domain()),
            a.t_domain().intersect(&b.t_domain()),
        )
    }

    pub fn add(a: BivariateExpr, b: BivariateExpr) -> BivariateExpr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => bconst(x + y),
            (Some(0.0), _) => b,
            (_, Some(0.0)) => a,
            _ => {
                let (xd, td) = Self::join(&a, &b);
                mk(BNode::Sum(a, b), xd, td)
            }
        }
    }

    pub fn sub(a: BivariateExpr, b: BivariateExpr) -> BivariateExpr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => bconst(x - y),
            (_, Some(0.0)) => a,
            _ => {
                let (xd, td) = Self::join(&a, &b);
                mk(BNode::Diff(a, b), xd, td)
            }
        }
    }

    pub fn mul(a: BivariateExpr, b: BivariateExpr) -> BivariateExpr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => bconst(x * y),
            (Some(0.0), _) | (_, Some(0.0)) => bconst(0.0),
            (Some(1.0), _) => b,
            (_, Some(1.0)) => a,
            _ => {
                let (xd, td) = Self::join(&a, &b);
                mk(BNode::Prod(a, b), xd, td)
            }
        }
    }

    pub fn div(a: BivariateExpr, b: BivariateExpr) -> BivariateExpr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => bconst(x / y),
            (Some(0.0), _) => bconst(0.0),
            (_, Some(1.0)) => a,
            _ => {
                let (xd, td) = Self::join(&a, &b);
                mk(BNode::Quot(a, b), xd, td)
            }
        }
    }

    pub fn powf(self, n: f64) -> BivariateExpr {
        if n == 0.0 {
            return bconst(1.0);
        }
        if n == 1.0 {
            return self;
        }
        if let Some(c) = self.as_const() {
            return bconst(c.powf(n));
        }
        let (xd, td) = (self.x_domain(), self.t_domain());
        mk(BNode::Pow(self, n), xd, td)
    }

    pub fn exp(self) -> BivariateExpr {
        if let Some(c) = self.as_const() {
            return bconst(c.exp());
        }
        let (xd, td) = (self.x_domain(), self.t_domain());
        mk(BNode::Exp(self), xd, td)
    }

    pub fn ln(self) -> BivariateExpr {
        if let Some(c) = self.as_const() {
            return bconst(c.ln());
        }
        let (xd, td) = (self.x_domain(), self.t_domain());
        mk(BNode::Ln(self), xd, td)
    }

    pub fn sin(self) -> BivariateExpr {
        if let Some(c) = self.as_const() {
            return bconst(c.sin());
        }
        let (xd, td) = (self.x_domain(), self.t_domain());
        mk(BNode::Sin(self), xd, td)
    }

    pub fn cos(self) -> BivariateExpr {
        if let Some(c) = self.as_const() {
            return bconst(c.cos());
        }
        let (xd, td) = (self.x_domain(), self.t_domain());
        mk(BNode::Cos(self), xd, td)
    }

    pub fn sqrt(self) -> BivariateExpr {
        if let Some(c) = self.as_const() {
            return bconst(c.sqrt());
        }
        let (xd, td) = (self.x_domain(), self.t_domain());
        mk(BNode::Sqrt(self), xd, td)
    }

    pub fn compose_u(outer: Expr, inner: BivariateExpr) -> BivariateExpr {
        let (xd, td) = (inner.x_domain(), inner.t_domain());
        mk(BNode::ComposeU(outer, inner), xd, td)
    }

    pub fn eval(&self, x: f64, t: f64) -> Result<f64, FuncError> {
        if !self.x_domain().contains_open(x) {
            return Err(FuncError::OutsideDomain {
                x,
                lo: self.x_domain().lo,
                hi: self.x_domain().hi,
            });
        }
        if !self.t_domain().contains_open(t) {
            return Err(FuncError::OutsideDomain {
                x: t,
                lo: self.t_domain().lo,
                hi: self.t_domain().hi,
            });
        }
        let v = self.eval_raw(x, t)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(FuncError::NonFinite { x })
        }
    }

    pub fn eval_raw(&self, x: f64, t: f64) -> Result<f64, FuncError> {
        Ok(match &self.0.node {
            BNode::Const(c) => *c,
            BNode::X => x,
            BNode::T => t,
            BNode::OfX(e) => e.eval_raw(x)?,
            BNode::OfT(e) => e.eval_raw(t)?,
            BNode::Sum(a, b) => a.eval_raw(x, t)? + b.eval_raw(x, t)?,
            BNode::Diff(a, b) => a.eval_raw(x, t)? - b.eval_raw(x, t)?,
            BNode::Prod(a, b) => a.eval_raw(x, t)? * b.eval_raw(x, t)?,
            BNode::Quot(a, b) => a.eval_raw(x, t)? / b.eval_raw(x, t)?,
            BNode::Pow(a, n) => a.eval_raw(x, t)?.powf(*n),
            BNode::Exp(a) => a.eval_raw(x, t)?.exp(),
            BNode::Ln(a) => a.eval_raw(x, t)?.ln(),
            BNode::Sin(a) => a.eval_raw(x, t)?.sin(),
            BNode::Cos(a) => a.eval_raw(x, t)?.cos(),
            BNode::Sqrt(a) => a.eval_raw(x, t)?.sqrt(),
            BNode::ComposeU(outer, inner) => outer.eval_raw(inner.eval_raw(x, t)?)?,
        })
    }

    fn derive(&self, wrt_x: bool) -> BivariateExpr {
        let d = |e: &BivariateExpr| e.derive(wrt_x);
        match &self.0.node {
            BNode::Const(_) => bconst(0.0),
            BNode::X => bconst(if wrt_x { 1.0 } else { 0.0 }),
            BNode::T => bconst(if wrt_x { 0.0 } else { 1.0 }),
            BNode::OfX(e) => {
                if wrt_x {
                    of_x(e.differentiate())
                } else {
                    bconst(0.0)
                }
            }
            BNode::OfT(e) => {
                if wrt_x {
                    bconst(0.0)
                } else {
                    of_t(e.differentiate())
                }
            }
            BNode::Sum(a, b) => BivariateExpr::add(d(a), d(b)),
            BNode::Diff(a, b) => BivariateExpr::sub(d(a), d(b)),
            BNode::Prod(a, b) => BivariateExpr::add(
                BivariateExpr::mul(d(a), b.clone()),
                BivariateExpr::mul(a.clone(), d(b)),
            ),
            BNode::Quot(a, b) => BivariateExpr::div(
                BivariateExpr::sub(
                    BivariateExpr::mul(d(a), b.clone()),
                    BivariateExpr::mul(a.clone(), d(b)),
                ),
                BivariateExpr::mul(b.clone(), b.clone()),
            ),
            BNode::Pow(a, n) => BivariateExpr::mul(
                BivariateExpr::mul(bconst(*n), a.clone().powf(n - 1.0)),
                d(a),
            ),
            BNode::Exp(a) => BivariateExpr::mul(a.clone().exp(), d(a)),
            BNode::Ln(a) => BivariateExpr::div(d(a), a.clone()),
            BNode::Sin(a) => BivariateExpr::mul(a.clone().cos(), d(a)),
            BNode::Cos(a) => BivariateExpr::mul(
                bconst(-1.0),
                BivariateExpr::mul(a.clone().sin(), d(a)),
            ),
            BNode::Sqrt(a) => BivariateExpr::div(
                d(a),
                BivariateExpr::mul(bconst(2.0), a.clone().sqrt()),
            ),
            BNode::ComposeU(outer, inner) => BivariateExpr::mul(
                BivariateExpr::compose_u(outer.differentiate(), inner.clone()),
                d(inner),
            ),
        }
    }

    pub fn d_dx(&self) -> BivariateExpr {
        self.derive(true)
    }

    pub fn d_dt(&self) -> BivariateExpr {
        self.derive(false)
    }

    /// `(e_t, e_x, e_xx)`, all symbolic and total on the same domain.
    pub fn partials(&self) -> (BivariateExpr, BivariateExpr, BivariateExpr) {
        let ex = self.d_dx();
        let exx = ex.d_dx();
        (self.d_dt(), ex, exx)
    }

    pub fn display(&self) -> String {
        let mut s = String::new();
        self.fmt_into(&mut s);
        s
    }

    fn fmt_into(&self, out: &mut String) {
        use std::fmt::Write;
        match &self.0.node {
            BNode::Const(c) => {
                let _ = write!(out, "{c}");
            }
            BNode::X => out.push('x'),
            BNode::T => out.push('t'),
            BNode::OfX(e) => {
                let _ = write!(out, "{}", e.display_with("x"));
            }
            BNode::OfT(e) => {
                let _ = write!(out, "{}", e.display_with("t"));
            }
            BNode::Sum(a, b) => {
                out.push('(');
                a.fmt_into(out);
                out.push_str(" + ");
                b.fmt_into(out);
                out.push(')');
            }
            BNode::Diff(a, b) => {
                out.push('(');
                a.fmt_into(out);
                out.push_str(" - ");
                b.fmt_into(out);
                out.push(')');
            }
            BNode::Prod(a, b) => {
                out.push('(');
                a.fmt_into(out);
                out.push('*');
                b.fmt_into(out);
                out.push(')');
            }
            BNode::Quot(a, b) => {
                out.push('(');
                a.fmt_into(out);
                out.push('/');
                b.fmt_into(out);
                out.push(')');
            }
            BNode::Pow(a, n) => {
                out.push('(');
                a.fmt_into(out);
                let _ = write!(out, ")^{n}");
            }
            BNode::Exp(a) => {
                out.push_str("exp(");
                a.fmt_into(out);
                out.push(')');
            }
            BNode::Ln(a) => {
                out.push_str("ln(");
                a.fmt_into(out);
                out.push(')');
            }
            BNode::Sin(a) => {
                out.push_str("sin(");
                a.fmt_into(out);
                out.push(')');
            }
            BNode::Cos(a) => {
                out.push_str("cos(");
                a.fmt_into(out);
                out.push(')');
            }
            BNode::Sqrt(a) => {
                out.push_str("sqrt(");
                a.fmt_into(out);
                out.push(')');
            }
            BNode::ComposeU(outer, inner) => {
                let _ = write!(out, "[{}]@(", outer.display_with("@"));
                inner.fmt_into(out);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for BivariateExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl std::ops::Add for BivariateExpr {
    type Output = BivariateExpr;
    fn add(self, rhs: BivariateExpr) -> BivariateExpr {
        BivariateExpr::add(self, rhs)
    }
}
impl std::ops::Sub for BivariateExpr {
    type Output = BivariateExpr;
    fn sub(self, rhs: BivariateExpr) -> BivariateExpr {
        BivariateExpr::sub(self, rhs)
    }
}
impl std::ops::Mul for BivariateExpr {
    type Output = BivariateExpr;
    fn mul(self, rhs: BivariateExpr) -> BivariateExpr {
        BivariateExpr::mul(self, rhs)
    }
}
impl std::ops::Div for BivariateExpr {
    type Output = BivariateExpr;
    fn div(self, rhs: BivariateExpr) -> BivariateExpr {
        BivariateExpr::div(self, rhs)
    }
}
impl std::ops::Mul<f64> for BivariateExpr {
    type Output = BivariateExpr;
    fn mul(self, rhs: f64) -> BivariateExpr {
        BivariateExpr::mul(self, bconst(rhs))
    }
}
impl std::ops::Mul<BivariateExpr> for f64 {
    type Output = BivariateExpr;
    fn mul(self, rhs: BivariateExpr) -> BivariateExpr {
        BivariateExpr::mul(bconst(self), rhs)
    }
}
impl std::ops::Add<f64> for BivariateExpr {
    type Output = BivariateExpr;
    fn add(self, rhs: f64) -> BivariateExpr {
        BivariateExpr::add(self, bconst(rhs))
    }
}
impl std::ops::Sub<f64> for BivariateExpr {
    type Output = BivariateExpr;
    fn sub(self, rhs: f64) -> BivariateExpr {
        BivariateExpr::sub(self, bconst(rhs))
    }
}
impl std::ops::Neg for BivariateExpr {
    type Output = BivariateExpr;
    fn neg(self) -> BivariateExpr {
        BivariateExpr::mul(bconst(-1.0), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{constant, var, Interval};

    #[test]
    fn partials_of_plane() {
        // theta = t - x/2: partials (1, -1/2, 0)
        let theta = bt() - of_x(var() / 2.0);
        let (tt, tx, txx) = theta.partials();
        assert_eq!(tt.eval_raw(0.3, 0.4).unwrap(), 1.0);
        assert_eq!(tx.eval_raw(0.3, 0.4).unwrap(), -0.5);
        assert_eq!(txx.eval_raw(0.3, 0.4).unwrap(), 0.0);
    }

    #[test]
    fn exponential_ansatz_time_derivative() {
        // theta = (g x + d) e^{a x + b t}: theta_t = b * theta
        let (ga, de, al, be) = (0.5, 0.8, 0.4, 0.7);
        let theta = of_x((var() * ga + de) * (var() * al).exp()) * of_t((var() * be).exp());
        let tt = theta.d_dt();
        for &(x, t) in &[(0.2, 0.3), (0.8, 0.9)] {
            let lhs = tt.eval_raw(x, t).unwrap();
            let rhs = be * theta.eval_raw(x, t).unwrap();
            assert!((lhs - rhs).abs() < 1e-13);
        }
    }

    #[test]
    fn separable_sine_second_derivative() {
        // theta = e^{l t} sin x: theta_xx = -theta
        let theta = of_t((var() * 0.7).exp()) * of_x(var().sin());
        let (_, _, txx) = theta.partials();
        for &(x, t) in &[(0.4, 0.2), (1.1, 0.8)] {
            let lhs = txx.eval_raw(x, t).unwrap();
            let rhs = -theta.eval_raw(x, t).unwrap();
            assert!((lhs - rhs).abs() < 1e-13);
        }
    }

    #[test]
    fn mixed_partials_commute() {
        let theta = (bx() * bt()
            + of_x((var() * 0.3).exp()) * of_t(var().powf(2.0))
            + BivariateExpr::compose_u(var().ln().with_domain(Interval::new(0.0, f64::INFINITY)),
                bx() * bt() + 2.0))
        .sin();
        let xt = theta.d_dx().d_dt();
        let tx = theta.d_dt().d_dx();
        for &x in &[0.3, 0.9, 1.7] {
            for &t in &[0.2, 0.6, 1.4] {
                let a = xt.eval_raw(x, t).unwrap();
                let b = tx.eval_raw(x, t).unwrap();
                let denom = a.abs().max(b.abs()).max(1.0);
                assert!(
                    ((a - b) / denom).abs() < 1e-10,
                    "mixed partials differ at ({x},{t}): {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn domain_checks_apply_per_axis() {
        let theta = of_x(var().ln().with_domain(Interval::new(0.0, f64::INFINITY))) + bt();
        assert!(theta.eval(-0.5, 0.5).is_err());
        assert!(theta.eval(0.5, -0.5).is_ok());
        let _ = constant(0.0);
    }
}
