//! Entries S01..S16: families obtained from the plain bilinear form of the
//! transformed equation.

use super::*;
use crate::bivar::{bconst, bt, of_t, of_x, BivariateExpr};
use crate::pdesolve::{AuxOdeKind, AuxOdeSpec};

const XPOS: Interval = Interval {
    lo: 0.0,
    hi: f64::INFINITY,
};

fn mk_inst(
    label: &str,
    entry: &str,
    coeffs: CoefficientSet,
    solution: ImplicitSolution,
    variant: Variant,
    constraints: Vec<Constraint>,
    relations: Vec<Relation>,
    aux: Vec<AuxCheck>,
) -> Instance {
    Instance {
        label: label.to_string(),
        entry_id: entry.to_string(),
        coeffs,
        solution,
        variant,
        constraints,
        relations,
        aux,
        instantiation_hash: String::new(),
    }
}

/// `(a ϑ_x)_x = a'ϑ_x + aϑ_xx` as a bivariate expression.
pub(super) fn flux_div(a: &Expr, theta: &BivariateExpr) -> BivariateExpr {
    let tx = theta.d_dx();
    of_x(a.differentiate()) * tx.clone() + of_x(a.clone()) * tx.d_dx()
}

/// `(f/ζ)'_u`.
pub(super) fn dfz(f: &Expr, zeta: &Expr) -> Expr {
    (f.clone() / zeta.clone()).differentiate()
}

/// Total antiderivative of `cnum·(A u² + C)^{-1/2}` for `A, C > 0`:
/// `(cnum/√A)·ln(√A·u + √(A u² + C))`.
pub(super) fn sqrt_quad_antideriv(cnum: f64, a2: f64, c0: f64) -> Expr {
    let root = (uv().powf(2.0) * a2 + c0).sqrt();
    (uv() * a2.sqrt() + root).ln() * (cnum / a2.sqrt())
}

pub(super) fn entries() -> Vec<EntryDef> {
    vec![
        s01_def(),
        s02_def(),
        s03_def(),
        s04_def(),
        s05_def(),
        s06_def(),
        s07_def(),
        s08_def(),
        s09_def(),
        s10_def(),
        s11_def(),
        s12_def(),
        s13_def(),
        s14_def(),
        s15_def(),
        s16_def(),
    ]
}

// ---------------------------------------------------------------- S01

fn s01_def() -> EntryDef {
    EntryDef {
        id: "S01",
        description: "generalized traveling wave for u_t = [a f u_x]_x + g u_x + (k G + C2)/f",
        func_slots: &[
            ("a", VarKind::X, || xv().exp()),
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().exp()),
        ],
        const_slots: &[
            ("k", 1.2),
            ("C1", 0.3),
            ("C2", 1.7),
            ("b0", 1.0),
            ("c0", 1.0),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f/(k*G + C2) du = c0*t - (b0/k)*int dx/a + C1",
        construct: s01,
    }
}

fn s01(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, g) = (s.func("a"), s.func("f"), s.func("g"));
    let (k, c1, c2, b0, c0) = (
        s.num("k"),
        s.num("C1"),
        s.num("C2"),
        s.num("b0"),
        s.num("c0"),
    );
    let big_g = integral(&g, 0.0);
    let den = big_g.clone() * k + c2;
    let zeta = f.clone() / den.clone();
    let h = den.clone() / f.clone();
    let fzeta = if f.structural_eq(&g) {
        Antiderivative::with_closed(zeta.clone(), 0.0, den.clone().ln() / k)
    } else {
        Antiderivative::new(zeta.clone(), 0.0)
    };
    let ia = integral(&(1.0 / a.clone()), 0.0);
    let theta = bt() * c0 - of_x(ia) * (b0 / k) + c1;
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: num(b0),
        c: num(c0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-3.0, 2.2)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u("h*zeta - 1", h.clone() * zeta.clone() - 1.0),
        Constraint::u("(f/zeta)'_u - k*g", dfz(&f, &zeta) - g.clone() * k),
        Constraint::xt("theta_t - c", theta.d_dt() - bconst(c0)),
        Constraint::xt("(a*theta_x)_x", flux_div(&a, &theta)),
        Constraint::xt(
            "k*a*theta_x^2 + b*theta_x",
            of_x(a.clone()) * theta.d_dx().powf(2.0) * k + of_x(num(b0)) * theta.d_dx(),
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = -Phi5", &[(1, 1.0), (5, 1.0)]),
        Relation::phi("Phi2 = 0", &[(2, 1.0)]),
        Relation::phi("k*Phi3 = -Phi4", &[(3, k), (4, 1.0)]),
        Relation::psi("Psi1 = Psi5", &[(1, 1.0), (5, -1.0)]),
        Relation::psi("Psi3 = k*Psi4", &[(3, 1.0), (4, -k)]),
    ];
    Ok(vec![mk_inst(
        "S01",
        "S01",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S02

fn s02_def() -> EntryDef {
    EntryDef {
        id: "S02",
        description: "two implicit solutions of u_t = [a f u_x]_x + lambda a u_x - (k/a) h",
        func_slots: &[
            ("a", VarKind::X, || xv().with_domain(XPOS)),
            ("f", VarKind::U, || num(1.0)),
            ("h", VarKind::U, uv),
        ],
        const_slots: &[("k", 1.2), ("lambda", 0.7), ("C2", 0.3), ("C3", 2.0)],
        has_aux_ode: false,
        two_branch: true,
        solution_form: "+-int f*(2k*int f*h du + C3)^(-1/2) du = lambda*t + int dx/a + C2",
        construct: s02,
    }
}

fn s02(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, h) = (s.func("a"), s.func("f"), s.func("h"));
    let (k, lambda, c2, c3) = (s.num("k"), s.num("lambda"), s.num("C2"), s.num("C3"));
    let ia = integral(&(1.0 / a.clone()), 1.0);
    let theta = bt() * lambda + of_x(ia) + c2;
    let fh = integral(&(f.clone() * h.clone()), 0.0);
    let srt = fh.clone() * (2.0 * k) + c3;
    let default_shape = f.as_const() == Some(1.0) && h.structural_eq(&uv());
    let mut out = Vec::new();
    for sign in [1.0, -1.0] {
        let zeta = srt.clone().powf(-0.5) * (sign * 1.0) * f.clone();
        let fzeta = if default_shape {
            Antiderivative::with_closed(zeta.clone(), 0.0, sqrt_quad_antideriv(sign, k, c3))
        } else {
            Antiderivative::new(zeta.clone(), 0.0)
        };
        let coeffs = CoefficientSet {
            a: a.clone(),
            b: a.clone() * lambda,
            c: num(-k) / a.clone(),
            f: f.clone(),
            g: num(1.0),
            h: h.clone(),
        };
        let u_default = if sign > 0.0 {
            Interval::new(-1.5, 3.5)
        } else {
            Interval::new(-3.5, 1.5)
        };
        let sol = ImplicitSolution {
            zeta: zeta.clone(),
            fzeta,
            theta: theta.clone(),
            u_window: s.uw(u_default),
            xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 0.9)),
        };
        let constraints = vec![
            Constraint::u("g - 1", coeffs.g.clone() - 1.0),
            Constraint::u(
                "(f/zeta)'_u - k*h*zeta",
                dfz(&f, &zeta) - h.clone() * zeta.clone() * k,
            ),
            Constraint::xt(
                "theta_t - b*theta_x",
                theta.d_dt() - of_x(coeffs.b.clone()) * theta.d_dx(),
            ),
            Constraint::xt("(a*theta_x)_x", flux_div(&a, &theta)),
            Constraint::xt(
                "k*a*theta_x^2 + c",
                of_x(a.clone()) * theta.d_dx().powf(2.0) * k + of_x(coeffs.c.clone()),
            ),
        ];
        let relations = vec![
            Relation::phi("Phi1 = -Phi4", &[(1, 1.0), (4, 1.0)]),
            Relation::phi("Phi2 = 0", &[(2, 1.0)]),
            Relation::phi("k*Phi3 = -Phi5", &[(3, k), (5, 1.0)]),
            Relation::psi("Psi1 = Psi4", &[(1, 1.0), (4, -1.0)]),
            Relation::psi("Psi3 = k*Psi5", &[(3, 1.0), (5, -k)]),
        ];
        let label = if sign > 0.0 { "S02+" } else { "S02-" };
        out.push(mk_inst(
            label,
            "S02",
            coeffs,
            sol,
            Variant::Plain,
            constraints,
            relations,
            vec![],
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------- S03

fn s03_def() -> EntryDef {
    EntryDef {
        id: "S03",
        description: "traveling wave with zeta = f for b(x) = k3 a/(k2 x + C1)",
        func_slots: &[
            ("a", VarKind::X, || xv().powf(2.0).with_domain(XPOS)),
            ("f", VarKind::U, || 1.0 + uv().powf(2.0)),
            ("g", VarKind::U, || uv().cos() + 2.0),
        ],
        const_slots: &[
            ("k1", 1.2),
            ("k2", 0.7),
            ("k3", 1.0),
            ("C1", 0.3),
            ("C2", 0.4),
            ("c0", 1.0),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = c0*k1*t - c0*k2*int x/a dx - C1*int dx/a + C2",
        construct: s03,
    }
}

fn s03(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, g) = (s.func("a"), s.func("f"), s.func("g"));
    let (k1, k2, k3, c1, c2, c0) = (
        s.num("k1"),
        s.num("k2"),
        s.num("k3"),
        s.num("C1"),
        s.num("C2"),
        s.num("c0"),
    );
    let ixa = integral(&(xv() / a.clone()), 1.0);
    let ia = integral(&(1.0 / a.clone()), 1.0);
    let theta = bt() * (c0 * k1) - of_x(ixa) * (c0 * k2) - of_x(ia) * c1 + c2;
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let b = a.clone() * (c0 * k3) / (xv() * (c0 * k2) + c1);
    let h = num(k1) / f.clone() + k2 + g.clone() * k3 / f.clone();
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: num(c0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(0.3, 1.8)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::u(
            "h*zeta - (k1 + k2*f + k3*g)",
            h.clone() * zeta.clone() - (num(k1) + f.clone() * k2 + g.clone() * k3),
        ),
        Constraint::xt("theta_t - k1*c", theta.d_dt() - bconst(k1 * c0)),
        Constraint::xt(
            "(a*theta_x)_x + k2*c",
            flux_div(&a, &theta) + bconst(k2 * c0),
        ),
        Constraint::xt(
            "b*theta_x + k3*c",
            of_x(b.clone()) * theta.d_dx() + bconst(k3 * c0),
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = -k1*Phi5", &[(1, 1.0), (5, k1)]),
        Relation::phi("Phi2 = -k2*Phi5", &[(2, 1.0), (5, k2)]),
        Relation::phi("Phi4 = -k3*Phi5", &[(4, 1.0), (5, k3)]),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi(
            "Psi5 = k1*Psi1 + k2*Psi2 + k3*Psi4",
            &[(5, 1.0), (1, -k1), (2, -k2), (4, -k3)],
        ),
    ];
    Ok(vec![mk_inst(
        "S03",
        "S03",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S04

fn s04_def() -> EntryDef {
    EntryDef {
        id: "S04",
        description: "int f du = c(x)*t + s(x) with c, s built from exp(-k int b/a dx)",
        func_slots: &[
            ("a", VarKind::X, || num(1.0)),
            ("b", VarKind::X, || num(1.0)),
            ("f", VarKind::U, || uv().exp()),
        ],
        const_slots: &[
            ("k", 1.0),
            ("C1", 1.0),
            ("C2", 0.0),
            ("C3", 1.0),
            ("C4", 0.0),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = (C1*E + C2)*t + C3*E + C4,  E = int exp(-k int b/a dx)/a dx",
        construct: s04,
    }
}

fn s04(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, b, f) = (s.func("a"), s.func("b"), s.func("f"));
    let (k, c1, c2, c3, c4) = (
        s.num("k"),
        s.num("C1"),
        s.num("C2"),
        s.num("C3"),
        s.num("C4"),
    );
    let iba = integral(&(b.clone() / a.clone()), 0.0);
    let kernel = (iba * (-k)).exp() / a.clone();
    let e_int = integral(&kernel, 0.0);
    let cfun = e_int.clone() * c1 + c2;
    let sfun = e_int.clone() * c3 + c4;
    let theta = of_x(cfun.clone()) * bt() + of_x(sfun);
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: cfun.clone(),
        f: f.clone(),
        g: f.clone() * k,
        h: 1.0 / f.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-1.2, 1.3)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "h*zeta - 1",
            coeffs.h.clone() * zeta.clone() - 1.0,
        ),
        Constraint::u("g - k*f", coeffs.g.clone() - f.clone() * k),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt("theta_t - c(x)", theta.d_dt() - of_x(cfun.clone())),
        Constraint::xt(
            "(a*theta_x)_x + k*b*theta_x",
            flux_div(&a, &theta) + of_x(b.clone()) * theta.d_dx() * k,
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = -Phi5", &[(1, 1.0), (5, 1.0)]),
        Relation::phi("Phi2 = -k*Phi4", &[(2, 1.0), (4, k)]),
        Relation::psi("Psi1 = Psi5", &[(1, 1.0), (5, -1.0)]),
        Relation::psi("k*Psi2 = Psi4", &[(2, k), (4, -1.0)]),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
    ];
    Ok(vec![mk_inst(
        "S04",
        "S04",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S05

fn s05_def() -> EntryDef {
    EntryDef {
        id: "S05",
        description: "f = g = 1; zeta = +-(2/k int h du + C2)^(-1/2); free profile r(x)",
        func_slots: &[
            ("a", VarKind::X, || num(1.0)),
            ("r", VarKind::X, xv),
            ("h", VarKind::U, uv),
        ],
        const_slots: &[("k", 1.2), ("lambda", 0.7), ("C1", 0.3), ("C2", 2.0)],
        has_aux_ode: false,
        two_branch: true,
        solution_form: "+-int (2/k int h du + C2)^(-1/2) du = lambda*t + int r dx + C1",
        construct: s05,
    }
}

fn s05(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, r, h) = (s.func("a"), s.func("r"), s.func("h"));
    let (k, lambda, c1, c2) = (s.num("k"), s.num("lambda"), s.num("C1"), s.num("C2"));
    let ir = integral(&r, 1.0);
    let theta = bt() * lambda + of_x(ir) + c1;
    let ar = a.clone() * r.clone();
    let b = num(lambda) / r.clone() - ar.differentiate() / r.clone();
    let c = -(a.clone() * r.clone() * r.clone()) / k;
    let bigh = integral(&h, 0.0);
    let srt = bigh.clone() * (2.0 / k) + c2;
    let default_shape = h.structural_eq(&uv());
    let mut out = Vec::new();
    for sign in [1.0, -1.0] {
        let zeta = srt.clone().powf(-0.5) * sign;
        let fzeta = if default_shape {
            Antiderivative::with_closed(zeta.clone(), 0.0, sqrt_quad_antideriv(sign, 1.0 / k, c2))
        } else {
            Antiderivative::new(zeta.clone(), 0.0)
        };
        let coeffs = CoefficientSet {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            f: num(1.0),
            g: num(1.0),
            h: h.clone(),
        };
        let u_default = if sign > 0.0 {
            Interval::new(-1.0, 4.0)
        } else {
            Interval::new(-4.0, 1.0)
        };
        let sol = ImplicitSolution {
            zeta: zeta.clone(),
            fzeta,
            theta: theta.clone(),
            u_window: s.uw(u_default),
            xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
        };
        let constraints = vec![
            Constraint::u("f - 1", coeffs.f.clone() - 1.0),
            Constraint::u("g - 1", coeffs.g.clone() - 1.0),
            Constraint::u(
                "k*(f/zeta)'_u - h*zeta",
                dfz(&coeffs.f, &zeta) * k - h.clone() * zeta.clone(),
            ),
            Constraint::xt(
                "-theta_t + (a*theta_x)_x + b*theta_x",
                -theta.d_dt() + flux_div(&a, &theta) + of_x(b.clone()) * theta.d_dx(),
            ),
            Constraint::xt(
                "a*theta_x^2 + k*c",
                of_x(a.clone()) * theta.d_dx().powf(2.0) + of_x(c.clone()) * k,
            ),
        ];
        let relations = vec![
            Relation::phi("Phi1 + Phi2 + Phi4 = 0", &[(1, 1.0), (2, 1.0), (4, 1.0)]),
            Relation::phi("Phi3 = -k*Phi5", &[(3, 1.0), (5, k)]),
            Relation::psi("Psi2 = Psi1", &[(2, 1.0), (1, -1.0)]),
            Relation::psi("Psi4 = Psi1", &[(4, 1.0), (1, -1.0)]),
            Relation::psi("k*Psi3 = Psi5", &[(3, k), (5, -1.0)]),
        ];
        let label = if sign > 0.0 { "S05+" } else { "S05-" };
        out.push(mk_inst(
            label,
            "S05",
            coeffs,
            sol,
            Variant::Plain,
            constraints,
            relations,
            vec![],
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------- S06

fn s06_def() -> EntryDef {
    EntryDef {
        id: "S06",
        description: "zeta = -f/(k2 int g du + C3) for b(x) = k2 (k1 x + C1)",
        func_slots: &[
            ("a", VarKind::X, || xv().powf(2.0).with_domain(XPOS)),
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().exp()),
        ],
        const_slots: &[
            ("k1", 1.2),
            ("k2", 1.0),
            ("C1", 0.3),
            ("C2", 0.4),
            ("C3", 1.5),
            ("lambda", 0.7),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f/G du = lambda*t - k1*int x/a dx - C1*int dx/a - C2,  G = k2*int g du + C3",
        construct: s06,
    }
}

fn s06(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, g) = (s.func("a"), s.func("f"), s.func("g"));
    let (k1, k2, c1, c2, c3, lambda) = (
        s.num("k1"),
        s.num("k2"),
        s.num("C1"),
        s.num("C2"),
        s.num("C3"),
        s.num("lambda"),
    );
    let ixa = integral(&(xv() / a.clone()), 1.0);
    let ia = integral(&(1.0 / a.clone()), 1.0);
    let theta = bt() * (-lambda) + of_x(ixa) * k1 + of_x(ia) * c1 + c2;
    let g2 = integral(&g, 0.0) * k2 + c3;
    let zeta = -(f.clone() / g2.clone());
    let fzeta = if f.structural_eq(&g) {
        Antiderivative::with_closed(zeta.clone(), 0.0, g2.clone().ln() * (-1.0 / k2))
    } else {
        Antiderivative::new(zeta.clone(), 0.0)
    };
    let h = ((f.clone() * k1 + lambda) / f.clone()) * g2.clone();
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: (xv() * k1 + c1) * k2,
        c: num(1.0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-3.5, 2.5)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "lambda + k1*f + h*zeta",
            num(lambda) + f.clone() * k1 + h.clone() * zeta.clone(),
        ),
        Constraint::u("(f/zeta)'_u + k2*g", dfz(&f, &zeta) + g.clone() * k2),
        Constraint::xt("theta_t + lambda*c", theta.d_dt() + bconst(lambda)),
        Constraint::xt("(a*theta_x)_x - k1*c", flux_div(&a, &theta) - bconst(k1)),
        Constraint::xt(
            "b*theta_x - k2*a*theta_x^2",
            of_x(coeffs.b.clone()) * theta.d_dx()
                - of_x(a.clone()) * theta.d_dx().powf(2.0) * k2,
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = lambda*Phi5", &[(1, 1.0), (5, -lambda)]),
        Relation::phi("Phi2 = k1*Phi5", &[(2, 1.0), (5, -k1)]),
        Relation::phi("Phi4 = k2*Phi3", &[(4, 1.0), (3, -k2)]),
        Relation::psi(
            "lambda*Psi1 + k1*Psi2 + Psi5 = 0",
            &[(1, lambda), (2, k1), (5, 1.0)],
        ),
        Relation::psi("Psi3 = -k2*Psi4", &[(3, 1.0), (4, k2)]),
    ];
    Ok(vec![mk_inst(
        "S06",
        "S06",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S07

fn s07_def() -> EntryDef {
    EntryDef {
        id: "S07",
        description: "zeta = -k1 f/h; convection carries lambda + h'(u)",
        func_slots: &[
            ("a", VarKind::X, || xv().powf(2.0).with_domain(XPOS)),
            ("f", VarKind::U, || uv().exp()),
            ("h", VarKind::U, || -((uv() * 2.0).exp())),
        ],
        const_slots: &[("lambda", 0.7), ("C1", -0.6), ("k1", 1.0), ("k3", 1.0)],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f/h du = -lambda*t - int dx/sqrt(a) + C",
        construct: s07,
    }
}

fn s07(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, h) = (s.func("a"), s.func("f"), s.func("h"));
    let (lambda, c1, k1, k3) = (s.num("lambda"), s.num("C1"), s.num("k1"), s.num("k3"));
    let k2sq = 1.0 / lambda;
    let isa = integral(&(1.0 / a.clone().sqrt()), 1.0);
    let theta = bt() * lambda + of_x(isa) + c1;
    let zeta = -(f.clone() * k1 / h.clone());
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let g = (1.0 + h.differentiate() * (k2sq / k1)) / k3;
    let b = a.clone().sqrt() * (k3 * lambda);
    let c = a.differentiate() / (a.clone().sqrt() * (2.0 * k1));
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-1.2, 3.0)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "h*zeta + k1*f",
            h.clone() * zeta.clone() + f.clone() * k1,
        ),
        Constraint::u(
            "1 - k2^2*(f/zeta)'_u - k3*g",
            num(1.0) - dfz(&f, &zeta) * k2sq - g.clone() * k3,
        ),
        Constraint::xt("(a*theta_x)_x - k1*c", flux_div(&a, &theta) - of_x(c.clone()) * k1),
        Constraint::xt(
            "a*theta_x^2 - k2^2*theta_t",
            of_x(a.clone()) * theta.d_dx().powf(2.0) - theta.d_dt() * k2sq,
        ),
        Constraint::xt(
            "b*theta_x - k3*theta_t",
            of_x(b.clone()) * theta.d_dx() - theta.d_dt() * k3,
        ),
    ];
    let relations = vec![
        Relation::phi("Phi2 = k1*Phi5", &[(2, 1.0), (5, -k1)]),
        Relation::phi("Phi3 = -k2^2*Phi1", &[(3, 1.0), (1, k2sq)]),
        Relation::phi("Phi4 = -k3*Phi1", &[(4, 1.0), (1, k3)]),
        Relation::psi("Psi5 = -k1*Psi2", &[(5, 1.0), (2, k1)]),
        Relation::psi(
            "Psi1 - k2^2*Psi3 - k3*Psi4 = 0",
            &[(1, 1.0), (3, -k2sq), (4, -k3)],
        ),
    ];
    Ok(vec![mk_inst(
        "S07",
        "S07",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S08

fn s08_def() -> EntryDef {
    EntryDef {
        id: "S08",
        description: "two implicit solutions with g = k + f and c = -(x+s)^2/a",
        func_slots: &[
            ("a", VarKind::X, || xv().powf(2.0).with_domain(XPOS)),
            ("f", VarKind::U, || num(1.0)),
            ("h", VarKind::U, uv),
        ],
        const_slots: &[("k", 1.2), ("s", 0.3), ("C2", 0.4), ("C3", 2.0)],
        has_aux_ode: false,
        two_branch: true,
        solution_form: "+-int f*(2 int f*h du + C3)^(-1/2) du = k*t - int (x+s)/a dx + C2",
        construct: s08,
    }
}

fn s08(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, h) = (s.func("a"), s.func("f"), s.func("h"));
    let (k, sh, c2, c3) = (s.num("k"), s.num("s"), s.num("C2"), s.num("C3"));
    let ixs = integral(&((xv() + sh) / a.clone()), 1.0);
    let theta = bt() * k - of_x(ixs) + c2;
    let b = -(a.clone() / (xv() + sh));
    let c = -((xv() + sh).powf(2.0) / a.clone());
    let g = f.clone() + k;
    let fh = integral(&(f.clone() * h.clone()), 0.0);
    let srt = fh.clone() * 2.0 + c3;
    let default_shape = f.as_const() == Some(1.0) && h.structural_eq(&uv());
    let mut out = Vec::new();
    for sign in [1.0, -1.0] {
        let zeta = srt.clone().powf(-0.5) * sign * f.clone();
        let fzeta = if default_shape {
            Antiderivative::with_closed(zeta.clone(), 0.0, sqrt_quad_antideriv(sign, 1.0, c3))
        } else {
            Antiderivative::new(zeta.clone(), 0.0)
        };
        let coeffs = CoefficientSet {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            f: f.clone(),
            g: g.clone(),
            h: h.clone(),
        };
        let u_default = if sign > 0.0 {
            Interval::new(-0.5, 10.0)
        } else {
            Interval::new(-10.0, 0.5)
        };
        let sol = ImplicitSolution {
            zeta: zeta.clone(),
            fzeta,
            theta: theta.clone(),
            u_window: s.uw(u_default),
            xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 0.7)),
        };
        let constraints = vec![
            Constraint::u("g - k - f", g.clone() - k - f.clone()),
            Constraint::u(
                "(f/zeta)'_u - h*zeta",
                dfz(&f, &zeta) - h.clone() * zeta.clone(),
            ),
            Constraint::xt(
                "theta_t - k*b*theta_x",
                theta.d_dt() - of_x(b.clone()) * theta.d_dx() * k,
            ),
            Constraint::xt(
                "(a*theta_x)_x + b*theta_x",
                flux_div(&a, &theta) + of_x(b.clone()) * theta.d_dx(),
            ),
            Constraint::xt(
                "a*theta_x^2 + c",
                of_x(a.clone()) * theta.d_dx().powf(2.0) + of_x(c.clone()),
            ),
        ];
        let relations = vec![
            Relation::phi("Phi1 = -k*Phi4", &[(1, 1.0), (4, k)]),
            Relation::phi("Phi2 = -Phi4", &[(2, 1.0), (4, 1.0)]),
            Relation::phi("Phi3 = -Phi5", &[(3, 1.0), (5, 1.0)]),
            Relation::psi("Psi4 = k*Psi1 + Psi2", &[(4, 1.0), (1, -k), (2, -1.0)]),
            Relation::psi("Psi3 = Psi5", &[(3, 1.0), (5, -1.0)]),
        ];
        let label = if sign > 0.0 { "S08+" } else { "S08-" };
        out.push(mk_inst(
            label,
            "S08",
            coeffs,
            sol,
            Variant::Plain,
            constraints,
            relations,
            vec![],
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------- S09

fn s09_def() -> EntryDef {
    EntryDef {
        id: "S09",
        description: "zeta = f/u: u_t = [a f u_x]_x + (lambda - beta^2/a) u/f, both signs",
        func_slots: &[
            ("a", VarKind::X, || xv().exp()),
            ("f", VarKind::U, || uv().powf(2.0)),
        ],
        const_slots: &[
            ("lambda", 0.7),
            ("beta", 0.8),
            ("C1p", 0.3),
            ("C1m", 1.2),
        ],
        has_aux_ode: false,
        two_branch: true,
        solution_form: "int f/u du = lambda*t +- beta*int dx/a + C1",
        construct: s09,
    }
}

fn s09(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f) = (s.func("a"), s.func("f"));
    let (lambda, beta, c1p, c1m) = (
        s.num("lambda"),
        s.num("beta"),
        s.num("C1p"),
        s.num("C1m"),
    );
    let ia = integral(&(1.0 / a.clone()), 0.0);
    let zeta = (f.clone() / uv()).with_domain(XPOS);
    let fzeta = Antiderivative::new(zeta.clone(), 1.0);
    let c = num(lambda) - num(beta * beta) / a.clone();
    let h = (uv() / f.clone()).with_domain(XPOS);
    let mut out = Vec::new();
    for sign in [1.0, -1.0] {
        let c1 = if sign > 0.0 { c1p } else { c1m };
        let theta = bt() * lambda + of_x(ia.clone()) * (sign * beta) + c1;
        let coeffs = CoefficientSet {
            a: a.clone(),
            b: num(1.0),
            c: c.clone(),
            f: f.clone(),
            g: num(0.0),
            h: h.clone(),
        };
        let sol = ImplicitSolution {
            zeta: zeta.clone(),
            fzeta: fzeta.clone(),
            theta: theta.clone(),
            u_window: s.uw(Interval::new(0.7, 2.4)),
            xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
        };
        let constraints = vec![
            Constraint::u("(f/zeta)'_u - 1", dfz(&f, &zeta) - 1.0),
            Constraint::u("h*zeta - 1", h.clone() * zeta.clone() - 1.0),
            Constraint::u("g = 0", coeffs.g.clone()),
            Constraint::xt(
                "-theta_t + a*theta_x^2 + c",
                -theta.d_dt() + of_x(a.clone()) * theta.d_dx().powf(2.0) + of_x(c.clone()),
            ),
            Constraint::xt("(a*theta_x)_x", flux_div(&a, &theta)),
        ];
        let relations = vec![
            Relation::phi("Phi1 + Phi3 + Phi5 = 0", &[(1, 1.0), (3, 1.0), (5, 1.0)]),
            Relation::phi("Phi2 = 0", &[(2, 1.0)]),
            Relation::psi("Psi3 = Psi1", &[(3, 1.0), (1, -1.0)]),
            Relation::psi("Psi4 = 0", &[(4, 1.0)]),
            Relation::psi("Psi5 = Psi1", &[(5, 1.0), (1, -1.0)]),
        ];
        let label = if sign > 0.0 { "S09+" } else { "S09-" };
        out.push(mk_inst(
            label,
            "S09",
            coeffs,
            sol,
            Variant::Plain,
            constraints,
            relations,
            vec![],
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------- S10

fn s10_def() -> EntryDef {
    EntryDef {
        id: "S10",
        description: "zeta = f/(k2 F + C3) with logarithmic spatial profile",
        func_slots: &[
            ("a", VarKind::X, || xv().exp()),
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().cos() + 2.0),
        ],
        const_slots: &[
            ("k1", 1.2),
            ("k2", 0.7),
            ("k3", 0.5),
            ("C1", 0.8),
            ("C2", 0.3),
            ("C3", 1.5),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "(1/k2) ln(k2 F + C3) = k1*t + (1/k2) ln(k2 int dx/a + C1) + C2",
        construct: s10,
    }
}

fn s10(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, g) = (s.func("a"), s.func("f"), s.func("g"));
    let (k1, k2, k3, c1, c2, c3) = (
        s.num("k1"),
        s.num("k2"),
        s.num("k3"),
        s.num("C1"),
        s.num("C2"),
        s.num("C3"),
    );
    let ia = integral(&(1.0 / a.clone()), 0.0);
    let den_x = ia.clone() * k2 + c1;
    let theta = bt() * k1 + of_x(den_x.clone().ln() / k2) + c2;
    let bigf = integral(&f, 0.0);
    let den_u = bigf.clone() * k2 + c3;
    let zeta = f.clone() / den_u.clone();
    let fzeta = Antiderivative::with_closed(zeta.clone(), 0.0, den_u.clone().ln() / k2);
    let h = ((num(k1) + g.clone() * k3) / f.clone()) * den_u.clone();
    let b = -(a.clone() * den_x.clone() * k3);
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: num(1.0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-0.5, 2.4)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "h*zeta - k1 - k3*g",
            h.clone() * zeta.clone() - k1 - g.clone() * k3,
        ),
        Constraint::u("(f/zeta)'_u - k2*f", dfz(&f, &zeta) - f.clone() * k2),
        Constraint::xt("theta_t - k1*c", theta.d_dt() - bconst(k1)),
        Constraint::xt(
            "(a*theta_x)_x + k2*a*theta_x^2",
            flux_div(&a, &theta) + of_x(a.clone()) * theta.d_dx().powf(2.0) * k2,
        ),
        Constraint::xt(
            "b*theta_x + k3*c",
            of_x(b.clone()) * theta.d_dx() + bconst(k3),
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = -k1*Phi5", &[(1, 1.0), (5, k1)]),
        Relation::phi("Phi2 = -k2*Phi3", &[(2, 1.0), (3, k2)]),
        Relation::phi("Phi4 = -k3*Phi5", &[(4, 1.0), (5, k3)]),
        Relation::psi(
            "Psi5 = k1*Psi1 + k3*Psi4",
            &[(5, 1.0), (1, -k1), (4, -k3)],
        ),
        Relation::psi("Psi3 = k2*Psi2", &[(3, 1.0), (2, -k2)]),
    ];
    Ok(vec![mk_inst(
        "S10",
        "S10",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S11

fn s11_def() -> EntryDef {
    EntryDef {
        id: "S11",
        description: "Abel-equation family; defaults force the constant-xi branch",
        func_slots: &[
            ("a", VarKind::X, || xv().powf(2.0).with_domain(XPOS)),
            ("f", VarKind::U, || uv().exp()),
        ],
        const_slots: &[("k", 1.2), ("C1", 1.5), ("s", 1.0)],
        has_aux_ode: true,
        two_branch: true,
        solution_form: "int f/xi du = -t +- int dx/sqrt(a) + C1;  xi*xi' + (1 -+ k f)*xi + f*h = 0",
        construct: s11,
    }
}

fn s11(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f) = (s.func("a"), s.func("f"));
    let (k, c1, xs) = (s.num("k"), s.num("C1"), s.num("s"));
    let isa = integral(&(1.0 / a.clone().sqrt()), 1.0);
    let b = a.clone().sqrt() * k + a.differentiate() / 2.0;
    let g = -f.clone();
    let zeta = f.clone() / xs;
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let mut out = Vec::new();
    for sign in [1.0, -1.0] {
        let k1 = sign * k;
        // constant-xi branch: h = -s (1 - k1 f)/f
        let h = -((1.0 - f.clone() * k1) * xs) / f.clone();
        let theta = bt() * (-1.0) + of_x(isa.clone()) * sign + c1;
        let coeffs = CoefficientSet {
            a: a.clone(),
            b: b.clone(),
            c: num(1.0),
            f: f.clone(),
            g: g.clone(),
            h: h.clone(),
        };
        let u_default = if sign > 0.0 {
            Interval::new(-2.0, 1.2)
        } else {
            Interval::new(-1.5, 1.25)
        };
        let sol = ImplicitSolution {
            zeta: zeta.clone(),
            fzeta: fzeta.clone(),
            theta: theta.clone(),
            u_window: s.uw(u_default),
            xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
        };
        let constraints = vec![
            Constraint::u("f + k2*g", f.clone() + g.clone()),
            Constraint::u(
                "1 + (f/zeta)'_u + k1*g + h*zeta",
                num(1.0) + dfz(&f, &zeta) + g.clone() * k1 + h.clone() * zeta.clone(),
            ),
            Constraint::xt(
                "a*theta_x^2 + theta_t",
                of_x(a.clone()) * theta.d_dx().powf(2.0) + theta.d_dt(),
            ),
            Constraint::xt(
                "b*theta_x + k1*theta_t - (a*theta_x)_x",
                of_x(b.clone()) * theta.d_dx() + theta.d_dt() * k1 - flux_div(&a, &theta),
            ),
            Constraint::xt("c + theta_t", bconst(1.0) + theta.d_dt()),
        ];
        let relations = vec![
            Relation::phi("Phi3 = Phi1", &[(3, 1.0), (1, -1.0)]),
            Relation::phi(
                "Phi4 = k1*Phi1 + k2*Phi2",
                &[(4, 1.0), (1, -k1), (2, -1.0)],
            ),
            Relation::phi("Phi5 = Phi1", &[(5, 1.0), (1, -1.0)]),
            Relation::psi(
                "Psi1 + Psi3 + k1*Psi4 + Psi5 = 0",
                &[(1, 1.0), (3, 1.0), (4, k1), (5, 1.0)],
            ),
            Relation::psi("Psi2 + k2*Psi4 = 0", &[(2, 1.0), (4, 1.0)]),
        ];
        let uw = s.uw(u_default);
        let aux = vec![AuxCheck {
            name: format!("abel xi (branch {})", if sign > 0.0 { "+" } else { "-" }),
            spec: AuxOdeSpec {
                kind: AuxOdeKind::Abel2 {
                    p: 1.0 - f.clone() * k1,
                    q: f.clone() * h.clone(),
                },
                interval: uw,
                init: (xs, None),
            },
            analytic: num(xs),
        }];
        let label = if sign > 0.0 { "S11+" } else { "S11-" };
        out.push(mk_inst(
            label,
            "S11",
            coeffs,
            sol,
            Variant::Plain,
            constraints,
            relations,
            aux,
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------- S12

fn s12_def() -> EntryDef {
    EntryDef {
        id: "S12",
        description: "steady-quadratic case: u_t = [f u_x]_x + 2k + beta/f",
        func_slots: &[("f", VarKind::U, || num(1.0))],
        const_slots: &[("k", 0.6), ("alpha", 0.8), ("beta", 0.7), ("C", 1.5)],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = -k*x^2 + alpha*x + beta*t + C",
        construct: s12,
    }
}

fn s12(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let f = s.func("f");
    let (k, alpha, beta, cc) = (s.num("k"), s.num("alpha"), s.num("beta"), s.num("C"));
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let h = num(beta) / f.clone() + 2.0 * k;
    let theta = of_x(xv().powf(2.0) * (-k) + xv() * alpha) + bt() * beta + cc;
    let coeffs = CoefficientSet {
        a: num(1.0),
        b: num(1.0),
        c: num(1.0),
        f: f.clone(),
        g: num(0.0),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(1.3, 2.8)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::u("g = 0", coeffs.g.clone()),
        Constraint::u(
            "h*zeta - beta - 2k*f",
            h.clone() * zeta.clone() - beta - f.clone() * (2.0 * k),
        ),
        Constraint::xt("theta_t - beta", theta.d_dt() - bconst(beta)),
        Constraint::xt("theta_xx + 2k", theta.d_dx().d_dx() + bconst(2.0 * k)),
        Constraint::xt(
            "theta_x + 2k*x - alpha",
            theta.d_dx() + of_x(xv() * (2.0 * k)) - bconst(alpha),
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = -beta*Phi5", &[(1, 1.0), (5, beta)]),
        Relation::phi("Phi2 = -2k*Phi5", &[(2, 1.0), (5, 2.0 * k)]),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi("Psi4 = 0", &[(4, 1.0)]),
        Relation::psi(
            "Psi5 = beta*Psi1 + 2k*Psi2",
            &[(5, 1.0), (1, -beta), (2, -2.0 * k)],
        ),
    ];
    Ok(vec![mk_inst(
        "S12",
        "S12",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S13

fn s13_def() -> EntryDef {
    EntryDef {
        id: "S13",
        description: "steady profile plus drift: u_t = [a f u_x]_x - mu a f u_x + k mu + beta/f",
        func_slots: &[
            ("a", VarKind::X, || xv().exp()),
            ("f", VarKind::U, || uv().exp()),
        ],
        const_slots: &[
            ("beta", 0.7),
            ("mu", 0.4),
            ("k", 0.6),
            ("C1", 0.5),
            ("C2", 0.3),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = beta*t + k*int dx/a + C1*int exp(mu x)/a dx + C2",
        construct: s13,
    }
}

fn s13(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f) = (s.func("a"), s.func("f"));
    let (beta, mu, k, c1, c2) = (
        s.num("beta"),
        s.num("mu"),
        s.num("k"),
        s.num("C1"),
        s.num("C2"),
    );
    let ia = integral(&(1.0 / a.clone()), 0.0);
    let ea = integral(&((xv() * mu).exp() / a.clone()), 0.0);
    let theta = bt() * beta + of_x(ia * k) + of_x(ea * c1) + c2;
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let h = num(k * mu) + num(beta) / f.clone();
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: a.clone(),
        c: num(1.0),
        f: f.clone(),
        g: -(f.clone() * mu),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-1.2, 1.2)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u("g + mu*f", coeffs.g.clone() + f.clone() * mu),
        Constraint::u(
            "h - k*mu - beta/f",
            h.clone() - k * mu - num(beta) / f.clone(),
        ),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt("theta_t - beta", theta.d_dt() - bconst(beta)),
        Constraint::xt(
            "(a*theta_x)_x - mu*a*theta_x + mu*k",
            flux_div(&a, &theta) - of_x(a.clone()) * theta.d_dx() * mu + bconst(mu * k),
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = -beta*Phi5", &[(1, 1.0), (5, beta)]),
        Relation::phi(
            "Phi2 - mu*Phi4 = -mu*k*Phi5",
            &[(2, 1.0), (4, -mu), (5, mu * k)],
        ),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi("Psi4 = -mu*Psi2", &[(4, 1.0), (2, mu)]),
        Relation::psi(
            "Psi5 = k*mu*Psi2 + beta*Psi1",
            &[(5, 1.0), (2, -k * mu), (1, -beta)],
        ),
    ];
    Ok(vec![mk_inst(
        "S13",
        "S13",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S14

fn s14_def() -> EntryDef {
    EntryDef {
        id: "S14",
        description: "separable drift e^{lambda t} xi(x); a(x) built from b(x)",
        func_slots: &[
            ("b", VarKind::X, || num(1.0)),
            ("f", VarKind::U, || uv().exp()),
        ],
        const_slots: &[
            ("A", 0.8),
            ("B", 1.0),
            ("lambda", 0.7),
            ("C1", 0.5),
            ("C2", 0.6),
            ("beta", 0.9),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = beta*t + C2*e^{lambda t}*exp((lambda/B) int dx/b)",
        construct: s14,
    }
}

fn s14(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (b, f) = (s.func("b"), s.func("f"));
    let (ca, cb, lambda, c1, c2, beta) = (
        s.num("A"),
        s.num("B"),
        s.num("lambda"),
        s.num("C1"),
        s.num("C2"),
        s.num("beta"),
    );
    let ilb = integral(&(1.0 / b.clone()), 0.0);
    let exl = (ilb.clone() * (lambda / cb)).exp();
    let iexl = integral(&exl, 0.0);
    let a = b.clone() * (ilb * (-lambda / cb)).exp() * (iexl * ca + c1);
    let xi = exl * c2;
    let thetabar = of_t((uv() * lambda).exp()) * of_x(xi.clone());
    let theta = bt() * beta + thetabar.clone();
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: num(1.0),
        f: f.clone(),
        g: num(cb) - f.clone() * ca,
        h: num(beta) / f.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-0.6, 1.6)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "g - B + A*f",
            coeffs.g.clone() - cb + f.clone() * ca,
        ),
        Constraint::u("h*zeta - beta", coeffs.h.clone() * zeta.clone() - beta),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt(
            "(a*thetabar_x)_x - A*b*thetabar_x",
            flux_div(&a, &thetabar) - of_x(b.clone()) * thetabar.d_dx() * ca,
        ),
        Constraint::xt(
            "B*b*thetabar_x - lambda*thetabar",
            of_x(b.clone()) * thetabar.d_dx() * cb - thetabar.clone() * lambda,
        ),
        Constraint::xt(
            "theta_t - beta - lambda*thetabar",
            theta.d_dt() - bconst(beta) - thetabar.clone() * lambda,
        ),
    ];
    let relations = vec![
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi(
            "Psi4 = B*Psi1 - A*Psi2",
            &[(4, 1.0), (1, -cb), (2, ca)],
        ),
        Relation::psi("Psi5 = beta*Psi1", &[(5, 1.0), (1, -beta)]),
    ];
    Ok(vec![mk_inst(
        "S14",
        "S14",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S15

fn s15_def() -> EntryDef {
    EntryDef {
        id: "S15",
        description: "invariant solution of u_t = [x^2 f u_x]_x + x g u_x + h on x > 0",
        func_slots: &[
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().cos() + 2.0),
            ("xi", VarKind::U, || (uv() * 0.5).exp()),
        ],
        const_slots: &[("k", 0.6), ("C1", 1.0)],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f/xi du = -k*t + ln x + C1",
        construct: s15,
    }
}

fn s15(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (f, g, xi) = (s.func("f"), s.func("g"), s.func("xi"));
    let (k, c1) = (s.num("k"), s.num("C1"));
    let a = xv().powf(2.0).with_domain(XPOS);
    let b = xv().with_domain(XPOS);
    let zeta = f.clone() / xi.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let h = -((xi.clone() / f.clone())
        * (num(k) + f.clone() + g.clone() + xi.differentiate()));
    let theta = bt() * (-k) + of_x(xv().ln().with_domain(XPOS)) + c1;
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: num(1.0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-0.5, 1.2)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "h*f + xi*(k + f + g + xi')",
            h.clone() * f.clone()
                + xi.clone() * (num(k) + f.clone() + g.clone() + xi.differentiate()),
        ),
        Constraint::u("zeta*xi - f", zeta.clone() * xi.clone() - f.clone()),
        Constraint::xt("theta_t + k", theta.d_dt() + bconst(k)),
        Constraint::xt("(a*theta_x)_x - c", flux_div(&a, &theta) - bconst(1.0)),
        Constraint::xt(
            "a*theta_x^2 - c",
            of_x(a.clone()) * theta.d_dx().powf(2.0) - bconst(1.0),
        ),
        Constraint::xt(
            "b*theta_x - c",
            of_x(b.clone()) * theta.d_dx() - bconst(1.0),
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = k*Phi5", &[(1, 1.0), (5, -k)]),
        Relation::phi("Phi2 = Phi5", &[(2, 1.0), (5, -1.0)]),
        Relation::phi("Phi3 = Phi5", &[(3, 1.0), (5, -1.0)]),
        Relation::phi("Phi4 = Phi5", &[(4, 1.0), (5, -1.0)]),
        Relation::psi(
            "k*Psi1 + Psi2 + Psi3 + Psi4 + Psi5 = 0",
            &[(1, k), (2, 1.0), (3, 1.0), (4, 1.0), (5, 1.0)],
        ),
    ];
    Ok(vec![mk_inst(
        "S15",
        "S15",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S16

fn s16_def() -> EntryDef {
    EntryDef {
        id: "S16",
        description: "diffusion term vanishes on the solution; free c(x)",
        func_slots: &[
            ("a", VarKind::X, || xv().exp()),
            ("c", VarKind::X, || xv().cos() + 2.0),
            ("f", VarKind::U, || uv().exp()),
        ],
        const_slots: &[
            ("lambda", 0.7),
            ("k1", 0.8),
            ("k2", 0.9),
            ("k3", 0.6),
            ("C1", 0.4),
            ("C2", 0.3),
            ("C3", 1.1),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "(1/k3) ln(k3 F + C3) = lambda*t + (1/k3) ln(k3 int dx/a + C1) + C2",
        construct: s16,
    }
}

fn s16(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, cfun, f) = (s.func("a"), s.func("c"), s.func("f"));
    let (lambda, k1, k2, k3, c1, c2, c3) = (
        s.num("lambda"),
        s.num("k1"),
        s.num("k2"),
        s.num("k3"),
        s.num("C1"),
        s.num("C2"),
        s.num("C3"),
    );
    let ia = integral(&(1.0 / a.clone()), 0.0);
    let den_x = ia.clone() * k3 + c1;
    let theta = bt() * lambda + of_x(den_x.clone().ln() / k3) + c2;
    let bigf = integral(&f, 0.0);
    let den_u = bigf.clone() * k3 + c3;
    let zeta = f.clone() / den_u.clone();
    let fzeta = Antiderivative::with_closed(zeta.clone(), 0.0, den_u.clone().ln() / k3);
    let h = -((num(k2) / f.clone()) * den_u.clone());
    let b = -(((cfun.clone() * k2 + lambda) / k1) * a.clone() * den_x.clone());
    let g = num(-k1);
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: cfun.clone(),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-1.8, 1.4)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    // On the solution, a*f*u_x = a*theta_x*exp(k3*theta), so its x-derivative
    // vanishing is a closed-form statement.
    let diffusion_flux = of_x(a.clone()) * theta.d_dx() * (theta.clone() * k3).exp();
    let constraints = vec![
        Constraint::u("h*zeta + k2", h.clone() * zeta.clone() + k2),
        Constraint::u("(f/zeta)'_u - k3*f", dfz(&f, &zeta) - f.clone() * k3),
        Constraint::u("g + k1", g.clone() + k1),
        Constraint::xt("theta_t - lambda", theta.d_dt() - bconst(lambda)),
        Constraint::xt(
            "(a*theta_x)_x + k3*a*theta_x^2",
            flux_div(&a, &theta) + of_x(a.clone()) * theta.d_dx().powf(2.0) * k3,
        ),
        Constraint::xt(
            "theta_t + k1*b*theta_x + k2*c",
            theta.d_dt() + of_x(b.clone()) * theta.d_dx() * k1 + of_x(cfun.clone()) * k2,
        ),
        Constraint::xt(
            "diffusion term vanishes: d/dx[a f u_x] = 0",
            diffusion_flux.d_dx(),
        ),
    ];
    let relations = vec![
        Relation::phi(
            "Phi1 = k1*Phi4 + k2*Phi5",
            &[(1, 1.0), (4, -k1), (5, -k2)],
        ),
        Relation::phi("Phi2 = -k3*Phi3", &[(2, 1.0), (3, k3)]),
        Relation::psi("Psi3 = k3*Psi2", &[(3, 1.0), (2, -k3)]),
        Relation::psi("Psi4 = -k1*Psi1", &[(4, 1.0), (1, k1)]),
        Relation::psi("Psi5 = -k2*Psi1", &[(5, 1.0), (1, k2)]),
    ];
    Ok(vec![mk_inst(
        "S16",
        "S16",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}
