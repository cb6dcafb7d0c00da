//! Bracketed hybrid root finding: bisection safeguarding secant and inverse
//! quadratic interpolation steps (Brent's method).

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RootError {
    #[error("root not bracketed: f({a}) = {fa}, f({b}) = {fb}")]
    NotBracketed { a: f64, b: f64, fa: f64, fb: f64 },
    #[error("root finder exceeded {0} iterations")]
    Budget(usize),
    #[error("function evaluation failed during root finding: {0}")]
    Eval(String),
}

pub const MAX_ITER: usize = 200;

/// Find `u` in `[a, b]` with `|f(u)| <= tol_f`, assuming `f(a)` and `f(b)`
/// bracket a sign change. The bracket never widens, so bisection progress is
/// guaranteed even when interpolation steps are rejected.
pub fn brent<E: std::fmt::Display>(
    f: &mut dyn FnMut(f64) -> Result<f64, E>,
    a0: f64,
    b0: f64,
    tol_f: f64,
) -> Result<f64, RootError> {
    let mut a = a0;
    let mut b = b0;
    let mut fa = f(a).map_err(|e| RootError::Eval(e.to_string()))?;
    let mut fb = f(b).map_err(|e| RootError::Eval(e.to_string()))?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(RootError::NotBracketed { a, b, fa, fb });
    }
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut mflag = true;

    for _ in 0..MAX_ITER {
        if fb.abs() <= tol_f {
            return Ok(b);
        }
        let s = if fa != fc && fb != fc {
            // inverse quadratic interpolation
            a * fb * fc / ((fa - fb) * (fa - fc))
                + b * fa * fc / ((fb - fa) * (fb - fc))
                + c * fa * fb / ((fc - fa) * (fc - fb))
        } else {
            // secant
            b - fb * (b - a) / (fb - fa)
        };

        let lo = (3.0 * a + b) / 4.0;
        let (lo, hi) = if lo < b { (lo, b) } else { (b, lo) };
        let eps = f64::EPSILON * b.abs().max(1.0);
        let cond_out = s <= lo || s >= hi;
        let cond_slow = if mflag {
            (s - b).abs() >= 0.5 * (b - c).abs() || (b - c).abs() < eps
        } else {
            (s - b).abs() >= 0.5 * d.abs() || d.abs() < eps
        };
        let (s, used_bisect) = if cond_out || cond_slow {
            (0.5 * (a + b), true)
        } else {
            (s, false)
        };

        let fs = f(s).map_err(|e| RootError::Eval(e.to_string()))?;
        d = b - c;
        c = b;
        fc = fb;
        if fa.signum() != fs.signum() {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if fa.abs() < fb.abs() {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut fa, &mut fb);
        }
        mflag = used_bisect;
        if (a - b).abs() <= f64::EPSILON * (a.abs() + b.abs() + 1.0) {
            return Ok(b);
        }
    }
    if fb.abs() <= tol_f * 1e3 {
        // Interval collapsed without meeting the f-tolerance exactly.
        return Ok(b);
    }
    Err(RootError::Budget(MAX_ITER))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::convert::Infallible;

    fn ok(f: impl Fn(f64) -> f64 + 'static) -> Box<dyn FnMut(f64) -> Result<f64, String>> {
        Box::new(move |x| Ok::<f64, String>(f(x)))
    }

    #[test]
    fn cubic_root() {
        let mut f = ok(|x| x * x * x - 8.0);
        let r = brent(&mut *f, 0.0, 3.0, 1e-14).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
    }

    #[test]
    fn transcendental_root_matches_bisection_oracle() {
        // u + 1 - cos u = 1 on (0, 2); oracle: plain bisection to 1e-12.
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
        let oracle = 0.5 * (lo + hi);
        let mut f = ok(g);
        let r = brent(&mut *f, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - oracle).abs() < 1e-11, "brent {r} vs bisection {oracle}");
        // u = cos u: the Dottie number.
        assert!((r - 0.739_085_133_215_160_7).abs() < 1e-10);
    }

    #[test]
    fn unbracketed_is_error() {
        let mut f = ok(|x| x * x + 1.0);
        assert!(matches!(
            brent(&mut *f, -1.0, 1.0, 1e-12),
            Err(RootError::NotBracketed { .. })
        ));
        let _: Option<Infallible> = None;
    }
}
