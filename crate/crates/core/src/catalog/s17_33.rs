//! Entries S17..S33: families obtained from equivalent equations
//! (exponential, theta-weighted and power bilinear forms, and shifted forms).

use super::s01_16::{dfz, flux_div};
use super::*;
use crate::bivar::{bconst, bt, bx, of_t, of_x};
use crate::pdesolve::{AuxOdeKind, AuxOdeSpec};
use std::sync::Arc;

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

pub(super) fn entries() -> Vec<EntryDef> {
    vec![
        s17_def(),
        s18_def(),
        s19_def(),
        s20_def(),
        s21_def(),
        s22_def(),
        s23_def(),
        s24_def(),
        s25_def(),
        s26_def(),
        s27_def(),
        s28_def(),
        s29_def(),
        s30_def(),
        s31_def(),
        s32_def(),
        s33_def(),
    ]
}

// ---------------------------------------------------------------- S17

fn s17_def() -> EntryDef {
    EntryDef {
        id: "S17",
        description: "exponential form of S01: logarithmic time profile, h carries e^{-lambda Z}",
        func_slots: &[
            ("a", VarKind::X, || xv().exp()),
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().exp()),
        ],
        const_slots: &[
            ("k", 1.2),
            ("lambda", 0.7),
            ("C1", 0.8),
            ("C2", 1.7),
            ("b0", 1.0),
            ("t0", 1.0),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f/(k G + C2) du = (1/lambda) ln(t + t0) - (b0/k) int dx/a + C1",
        construct: s17,
    }
}

fn s17(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, g) = (s.func("a"), s.func("f"), s.func("g"));
    let (k, lambda, c1, c2, b0, t0) = (
        s.num("k"),
        s.num("lambda"),
        s.num("C1"),
        s.num("C2"),
        s.num("b0"),
        s.num("t0"),
    );
    let big_g = integral(&g, 0.0);
    let den = big_g.clone() * k + c2;
    let zeta = f.clone() / den.clone();
    let fzeta = if f.structural_eq(&g) {
        Antiderivative::with_closed(zeta.clone(), 0.0, den.clone().ln() / k)
    } else {
        Antiderivative::new(zeta.clone(), 0.0)
    };
    let zx = fzeta.clone().into_expr();
    let h = (den.clone() / f.clone()) * (zx.clone() * (-lambda)).exp();
    let ia = integral(&(1.0 / a.clone()), 0.0);
    let cfun = ((ia.clone() * (-b0 * lambda / k) + c1 * lambda).exp()) / lambda;
    let theta = of_t((xv() + t0).ln().with_domain(Interval::new(-t0, f64::INFINITY)) / lambda)
        - of_x(ia) * (b0 / k)
        + c1;
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: num(b0),
        c: cfun.clone(),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-2.0, 2.0)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "h*zeta - exp(-lambda*Z)",
            h.clone() * zeta.clone() - (zx.clone() * (-lambda)).exp(),
        ),
        Constraint::u("(f/zeta)'_u - k*g", dfz(&f, &zeta) - g.clone() * k),
        Constraint::xt(
            "exp(lambda*theta)*theta_t - c",
            (theta.clone() * lambda).exp() * theta.d_dt() - of_x(cfun.clone()),
        ),
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
        "S17",
        "S17",
        coeffs,
        sol,
        Variant::Exponential { lambda },
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S18

fn s18_def() -> EntryDef {
    EntryDef {
        id: "S18",
        description: "exponential form with free non-constant c(x); a and b derived from c",
        func_slots: &[
            ("c", VarKind::X, || xv().exp()),
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().cos() + 2.0),
        ],
        const_slots: &[
            ("k1", 1.1),
            ("k2", 0.5),
            ("k3", 0.6),
            ("lambda", 0.7),
            ("C1", 0.4),
            ("C2", 2.0),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = (1/lambda) ln(k1 (lambda t + C1) c(x))",
        construct: s18,
    }
}

fn s18(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (cfun, f, g) = (s.func("c"), s.func("f"), s.func("g"));
    let (k1, k2, k3, lambda, c1, c2) = (
        s.num("k1"),
        s.num("k2"),
        s.num("k3"),
        s.num("lambda"),
        s.num("C1"),
        s.num("C2"),
    );
    let cp = cfun.differentiate();
    let ic = integral(&cfun, 0.0);
    let a = (cfun.clone() / cp.clone()) * (num(c2) - ic * (k2 * lambda));
    let b = -((cfun.clone() * cfun.clone() * (k3 * lambda)) / cp.clone());
    let bigf = integral(&f, 0.0);
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let h = (num(1.0) / f.clone())
        * ((bigf.clone() * (-lambda)).exp() * k1 + f.clone() * k2 + g.clone() * k3);
    let theta = (bconst(k1.ln())
        + of_t(
            (xv() * lambda + c1)
                .ln()
                .with_domain(Interval::new(-c1 / lambda, f64::INFINITY)),
        )
        + of_x(cfun.clone().ln()))
        * (1.0 / lambda);
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
        u_window: s.uw(Interval::new(-0.9, 1.4)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "h*f - k1*e^{-lambda F} - k2*f - k3*g",
            h.clone() * f.clone()
                - (bigf.clone() * (-lambda)).exp() * k1
                - f.clone() * k2
                - g.clone() * k3,
        ),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt(
            "exp(lambda*theta)*theta_t - k1*c",
            (theta.clone() * lambda).exp() * theta.d_dt() - of_x(cfun.clone()) * k1,
        ),
        Constraint::xt(
            "(a*theta_x)_x + k2*c",
            flux_div(&a, &theta) + of_x(cfun.clone()) * k2,
        ),
        Constraint::xt(
            "b*theta_x + k3*c",
            of_x(b.clone()) * theta.d_dx() + of_x(cfun.clone()) * k3,
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
        "S18",
        "S18",
        coeffs,
        sol,
        Variant::Exponential { lambda },
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S19

fn s19_def() -> EntryDef {
    EntryDef {
        id: "S19",
        description: "exponential form of S04 with zeta = m f",
        func_slots: &[
            ("a", VarKind::X, || num(1.0)),
            ("b", VarKind::X, || num(1.0)),
            ("f", VarKind::U, || uv().exp()),
        ],
        const_slots: &[
            ("k", 1.2),
            ("lambda", 0.7),
            ("m", 0.8),
            ("C1", 0.4),
            ("C2", 0.6),
            ("C3", 0.3),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "m int f du = (1/lambda) ln(t + C1) + C2 E + C3,  E = int exp(-k int b/a dx)/a dx",
        construct: s19,
    }
}

fn s19(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, b, f) = (s.func("a"), s.func("b"), s.func("f"));
    let (k, lambda, m, c1, c2, c3) = (
        s.num("k"),
        s.num("lambda"),
        s.num("m"),
        s.num("C1"),
        s.num("C2"),
        s.num("C3"),
    );
    let iba = integral(&(b.clone() / a.clone()), 0.0);
    let kernel = (iba * (-k)).exp() / a.clone();
    let eb = integral(&kernel, 0.0);
    let bigf = integral(&f, 0.0);
    let zeta = f.clone() * m;
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let g = f.clone() * k;
    let h = ((bigf.clone() * (-m * lambda)).exp()) / (f.clone() * m);
    let cfun = ((eb.clone() * c2 + c3) * lambda).exp() / lambda;
    let theta = of_t(
        (xv() + c1)
            .ln()
            .with_domain(Interval::new(-c1, f64::INFINITY))
            / lambda,
    ) + of_x(eb.clone() * c2)
        + c3;
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
        u_window: s.uw(Interval::new(-2.8, 1.2)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "h*zeta - exp(-lambda*Z)",
            h.clone() * zeta.clone() - (zx.clone() * (-lambda)).exp(),
        ),
        Constraint::u("g - k*f", g.clone() - f.clone() * k),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt(
            "exp(lambda*theta)*theta_t - c",
            (theta.clone() * lambda).exp() * theta.d_dt() - of_x(cfun.clone()),
        ),
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
        "S19",
        "S19",
        coeffs,
        sol,
        Variant::Exponential { lambda },
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S20

fn s20_def() -> EntryDef {
    EntryDef {
        id: "S20",
        description: "invariant solution for a = b = c = e^{lambda x}; free f, g, zeta",
        func_slots: &[
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().cos() + 2.0),
            ("zeta", VarKind::U, || (uv() * 0.5).exp()),
        ],
        const_slots: &[("lambda", 0.7)],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int zeta du = (1/lambda) ln t + x",
        construct: s20,
    }
}

fn s20(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (f, g, zeta) = (s.func("f"), s.func("g"), s.func("zeta"));
    let lambda = s.num("lambda");
    let (k1, k2, k3, k4) = (-1.0 / lambda, lambda, 1.0, 1.0);
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let abc = (xv() * lambda).exp();
    let h = -((num(k1) * (zx.clone() * (-lambda)).exp()
        + f.clone() * k2
        + dfz(&f, &zeta) * k3
        + g.clone() * k4)
        / zeta.clone());
    let theta = of_t(xv().ln().with_domain(XPOS) / lambda) + bx();
    let coeffs = CoefficientSet {
        a: abc.clone(),
        b: abc.clone(),
        c: abc.clone(),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(0.3, 2.0)),
        xt_window: s.xtw(XtWindow::new(1.0, 2.0, 1.0, 2.0)),
    };
    let constraints = vec![
        Constraint::u(
            "k1 e^{-lambda Z} + k2 f + k3 (f/zeta)' + k4 g + h zeta",
            (zx.clone() * (-lambda)).exp() * k1
                + f.clone() * k2
                + dfz(&f, &zeta) * k3
                + g.clone() * k4
                + h.clone() * zeta.clone(),
        ),
        Constraint::xt(
            "exp(lambda*theta)*theta_t + k1*c",
            (theta.clone() * lambda).exp() * theta.d_dt() + of_x(abc.clone()) * k1,
        ),
        Constraint::xt(
            "(a*theta_x)_x - k2*c",
            flux_div(&abc, &theta) - of_x(abc.clone()) * k2,
        ),
        Constraint::xt(
            "a*theta_x^2 - k3*c",
            of_x(abc.clone()) * theta.d_dx().powf(2.0) - of_x(abc.clone()) * k3,
        ),
        Constraint::xt(
            "b*theta_x - k4*c",
            of_x(abc.clone()) * theta.d_dx() - of_x(abc.clone()) * k4,
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = k1*Phi5", &[(1, 1.0), (5, -k1)]),
        Relation::phi("Phi2 = k2*Phi5", &[(2, 1.0), (5, -k2)]),
        Relation::phi("Phi3 = k3*Phi5", &[(3, 1.0), (5, -k3)]),
        Relation::phi("Phi4 = k4*Phi5", &[(4, 1.0), (5, -k4)]),
        Relation::psi(
            "k1*Psi1 + k2*Psi2 + k3*Psi3 + k4*Psi4 + Psi5 = 0",
            &[(1, k1), (2, k2), (3, k3), (4, k4), (5, 1.0)],
        ),
    ];
    Ok(vec![mk_inst(
        "S20",
        "S20",
        coeffs,
        sol,
        Variant::Exponential { lambda },
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S21

fn s21_def() -> EntryDef {
    EntryDef {
        id: "S21",
        description: "self-similar solution for power-law coefficients x^n, x^{n-1}, x^{n-2}",
        func_slots: &[
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().cos() + 2.0),
            ("zeta", VarKind::U, || (uv() * 0.5).exp()),
        ],
        const_slots: &[("n", 3.0)],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int zeta du = (1/(n-2)) ln t + ln x",
        construct: s21,
    }
}

fn s21(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (f, g, zeta) = (s.func("f"), s.func("g"), s.func("zeta"));
    let n = s.num("n");
    let lambda = n - 2.0;
    let (k1, k2, k3, k4) = (-1.0 / lambda, n - 1.0, 1.0, 1.0);
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let a = xv().powf(n).with_domain(XPOS);
    let b = xv().powf(n - 1.0).with_domain(XPOS);
    let c = xv().powf(n - 2.0).with_domain(XPOS);
    let h = -((num(k1) * (zx.clone() * (-lambda)).exp()
        + f.clone() * k2
        + dfz(&f, &zeta) * k3
        + g.clone() * k4)
        / zeta.clone());
    let theta = of_t(xv().ln().with_domain(XPOS) / lambda)
        + of_x(xv().ln().with_domain(XPOS));
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
        u_window: s.uw(Interval::new(-2.4, 1.0)),
        xt_window: s.xtw(XtWindow::new(1.0, 2.0, 0.4, 1.4)),
    };
    let constraints = vec![
        Constraint::u(
            "k1 e^{-lambda Z} + k2 f + k3 (f/zeta)' + k4 g + h zeta",
            (zx.clone() * (-lambda)).exp() * k1
                + f.clone() * k2
                + dfz(&f, &zeta) * k3
                + g.clone() * k4
                + h.clone() * zeta.clone(),
        ),
        Constraint::xt(
            "exp(lambda*theta)*theta_t + k1*c",
            (theta.clone() * lambda).exp() * theta.d_dt() + of_x(c.clone()) * k1,
        ),
        Constraint::xt(
            "(a*theta_x)_x - k2*c",
            flux_div(&a, &theta) - of_x(c.clone()) * k2,
        ),
        Constraint::xt(
            "a*theta_x^2 - k3*c",
            of_x(a.clone()) * theta.d_dx().powf(2.0) - of_x(c.clone()) * k3,
        ),
        Constraint::xt(
            "b*theta_x - k4*c",
            of_x(b.clone()) * theta.d_dx() - of_x(c.clone()) * k4,
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = k1*Phi5", &[(1, 1.0), (5, -k1)]),
        Relation::phi("Phi2 = k2*Phi5", &[(2, 1.0), (5, -k2)]),
        Relation::phi("Phi3 = k3*Phi5", &[(3, 1.0), (5, -k3)]),
        Relation::phi("Phi4 = k4*Phi5", &[(4, 1.0), (5, -k4)]),
        Relation::psi(
            "k1*Psi1 + k2*Psi2 + k3*Psi3 + k4*Psi4 + Psi5 = 0",
            &[(1, k1), (2, k2), (3, k3), (4, k4), (5, 1.0)],
        ),
    ];
    Ok(vec![mk_inst(
        "S21",
        "S21",
        coeffs,
        sol,
        Variant::Exponential { lambda },
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S22

fn s22_def() -> EntryDef {
    EntryDef {
        id: "S22",
        description: "additive separation u = -(1/beta) ln t + eta(x) for exponential nonlinearity",
        func_slots: &[("a", VarKind::X, || (-xv()).exp())],
        const_slots: &[("beta", 0.8)],
        has_aux_ode: true,
        two_branch: false,
        solution_form: "u = (1/beta)(ln x - ln t);  xi = e^{beta eta} solves (a xi')' + b xi' + beta c xi + 1 = 0",
        construct: s22,
    }
}

fn s22(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let a = s.func("a");
    let beta = s.num("beta");
    let lambda = -beta;
    let fgh = (uv() * beta).exp();
    let zeta = num(1.0);
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    // b = -a' makes xi(x) = x exact for any a; then c = -1/(beta x).
    let b = -a.differentiate();
    let c = (num(-1.0 / beta) / xv()).with_domain(XPOS);
    let theta = (of_x(xv().ln().with_domain(XPOS)) - of_t(xv().ln().with_domain(XPOS)))
        * (1.0 / beta);
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        f: fgh.clone(),
        g: fgh.clone(),
        h: fgh.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(-1.8, 2.1)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.4, 1.4)),
    };
    let xi = xv();
    let xi_ode = (a.clone() * xi.differentiate()).differentiate()
        + b.clone() * xi.differentiate()
        + c.clone() * xi.clone() * beta
        + 1.0;
    let phi_sum = -((theta.clone() * lambda).exp() * theta.d_dt())
        + flux_div(&a, &theta)
        + of_x(a.clone()) * theta.d_dx().powf(2.0) * beta
        + of_x(b.clone()) * theta.d_dx()
        + of_x(c.clone());
    let constraints = vec![
        Constraint::u(
            "e^{-lambda Z} - f",
            ((uv() * beta).exp()) - fgh.clone(),
        ),
        Constraint::u("(f/zeta)' - beta*f", dfz(&fgh, &zeta) - fgh.clone() * beta),
        Constraint::u("g - f", coeffs.g.clone() - fgh.clone()),
        Constraint::u("h*zeta - f", coeffs.h.clone() * zeta.clone() - fgh.clone()),
        Constraint::xt("(a xi')' + b xi' + beta c xi + 1", of_x(xi_ode.clone())),
        Constraint::xt("k1*Phi1 + Phi2 + k2*Phi3 + k3*Phi4 + k4*Phi5", phi_sum),
    ];
    let relations = vec![
        Relation::psi("Psi1 = Psi2", &[(1, 1.0), (2, -1.0)]),
        Relation::psi("Psi3 = beta*Psi2", &[(3, 1.0), (2, -beta)]),
        Relation::psi("Psi4 = Psi2", &[(4, 1.0), (2, -1.0)]),
        Relation::psi("Psi5 = Psi2", &[(5, 1.0), (2, -1.0)]),
        Relation::phi(
            "Phi1 + Phi2 + beta*Phi3 + Phi4 + Phi5 = 0",
            &[(1, 1.0), (2, 1.0), (3, beta), (4, 1.0), (5, 1.0)],
        ),
    ];
    let xw = sol.xt_window.x;
    let aux = vec![AuxCheck {
        name: "xi linear second-order".to_string(),
        spec: AuxOdeSpec {
            kind: AuxOdeKind::Linear2 {
                a: a.clone(),
                p: b.clone(),
                q: c.clone() * beta,
                r: num(1.0),
            },
            interval: xw,
            init: (xw.lo, Some(1.0)),
        },
        analytic: xv(),
    }];
    Ok(vec![mk_inst(
        "S22",
        "S22",
        coeffs,
        sol,
        Variant::Exponential { lambda },
        constraints,
        relations,
        aux,
    )])
}

// ---------------------------------------------------------------- S23

fn s23_def() -> EntryDef {
    EntryDef {
        id: "S23",
        description: "product separation u = t^{-1/n} x for power-law nonlinearity",
        func_slots: &[
            ("a", VarKind::X, || num(1.0)),
            ("b", VarKind::X, || (-xv()).exp()),
        ],
        const_slots: &[("n", 2.0)],
        has_aux_ode: true,
        two_branch: false,
        solution_form: "u = t^{-1/n} xi(x), xi = e^{eta};  defaults take eta = ln x",
        construct: s23,
    }
}

fn s23(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, b) = (s.func("a"), s.func("b"));
    let n = s.num("n");
    let lambda = -n;
    let f = uv().powf(n).with_domain(XPOS);
    let g = f.clone();
    let h = uv().powf(n + 1.0).with_domain(XPOS);
    let zeta = (1.0 / uv()).with_domain(XPOS);
    let fzeta = Antiderivative::new(zeta.clone(), 1.0);
    let zx = fzeta.clone().into_expr();
    // eta = ln x; the coefficient c closes the eta-equation for any a, b.
    let c = -((xv().powf(-n) / n)
        + a.differentiate() / xv()
        + a.clone() * n / xv().powf(2.0)
        + b.clone() / xv())
    .with_domain(XPOS);
    let theta = of_x(xv().ln().with_domain(XPOS))
        - of_t(xv().ln().with_domain(XPOS)) * (1.0 / n);
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
        u_window: s.uw(Interval::new(0.35, 2.9)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.4, 1.4)),
    };
    let eta = xv().ln().with_domain(XPOS);
    let eta_ode = ((-eta.clone() * n).exp() / n)
        + (a.clone() * eta.differentiate()).differentiate()
        + a.clone() * eta.differentiate().powf(2.0) * (n + 1.0)
        + b.clone() * eta.differentiate()
        + c.clone();
    let phi_sum = -((theta.clone() * lambda).exp() * theta.d_dt())
        + flux_div(&a, &theta)
        + of_x(a.clone()) * theta.d_dx().powf(2.0) * (n + 1.0)
        + of_x(b.clone()) * theta.d_dx()
        + of_x(c.clone());
    let constraints = vec![
        Constraint::u("e^{-lambda Z} - f", (zx.clone() * n).exp() - f.clone()),
        Constraint::u(
            "(f/zeta)' - (n+1)*f",
            dfz(&f, &zeta) - f.clone() * (n + 1.0),
        ),
        Constraint::u("g - f", g.clone() - f.clone()),
        Constraint::u("h*zeta - f", h.clone() * zeta.clone() - f.clone()),
        Constraint::xt("eta-equation", of_x(eta_ode.clone())),
        Constraint::xt("k1*Phi1 + Phi2 + k2*Phi3 + k3*Phi4 + k4*Phi5", phi_sum),
    ];
    let relations = vec![
        Relation::psi("Psi1 = Psi2", &[(1, 1.0), (2, -1.0)]),
        Relation::psi("Psi3 = (n+1)*Psi2", &[(3, 1.0), (2, -(n + 1.0))]),
        Relation::psi("Psi4 = Psi2", &[(4, 1.0), (2, -1.0)]),
        Relation::psi("Psi5 = Psi2", &[(5, 1.0), (2, -1.0)]),
        Relation::phi(
            "Phi1 + Phi2 + (n+1)*Phi3 + Phi4 + Phi5 = 0",
            &[(1, 1.0), (2, 1.0), (3, n + 1.0), (4, 1.0), (5, 1.0)],
        ),
    ];
    let xw = sol.xt_window.x;
    let (acl, bcl, ccl) = (a.clone(), b.clone(), c.clone());
    let rhs = move |x: f64, w: f64, wp: f64| -> f64 {
        let av = acl.eval_raw(x).unwrap_or(f64::NAN);
        let apv = acl.differentiate().eval_raw(x).unwrap_or(f64::NAN);
        let bv = bcl.eval_raw(x).unwrap_or(f64::NAN);
        let cv = ccl.eval_raw(x).unwrap_or(f64::NAN);
        -(((-n * w).exp() / n) + apv * wp + av * (n + 1.0) * wp * wp + bv * wp + cv) / av
    };
    let aux = vec![AuxCheck {
        name: "eta profile (nonlinear second-order)".to_string(),
        spec: AuxOdeSpec {
            kind: AuxOdeKind::General2 {
                rhs: Arc::new(rhs),
            },
            interval: xw,
            init: (xw.lo.ln(), Some(1.0 / xw.lo)),
        },
        analytic: xv().ln().with_domain(XPOS),
    }];
    Ok(vec![mk_inst(
        "S23",
        "S23",
        coeffs,
        sol,
        Variant::Exponential { lambda },
        constraints,
        relations,
        aux,
    )])
}

// ---------------------------------------------------------------- S24

fn s24_def() -> EntryDef {
    EntryDef {
        id: "S24",
        description: "theta = e^{lambda t} omega(x), (a omega')' = -(k2 lambda/k1) omega",
        func_slots: &[
            ("a", VarKind::X, || num(1.0)),
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().cos() + 2.0),
        ],
        const_slots: &[("k1", 1.1), ("lambda", 0.7), ("k3", 0.0)],
        has_aux_ode: true,
        two_branch: false,
        solution_form: "int f du = e^{lambda t} omega(x); defaults take a = 1, omega = sin x",
        construct: s24,
    }
}

fn s24(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, g) = (s.func("a"), s.func("f"), s.func("g"));
    let (k1, lambda, k3) = (s.num("k1"), s.num("lambda"), s.num("k3"));
    let k2 = k1 / lambda; // so (a w')' = -w holds for omega = sin x
    let omega = xv().sin();
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let b = -(omega.clone() / omega.differentiate()) * (k3 * lambda / k1);
    let cval = lambda / k1;
    let h = (num(k1) + f.clone() * k2 + g.clone() * k3) * zx.clone() / f.clone();
    let theta = of_t((xv() * lambda).exp()) * of_x(omega.clone());
    let coeffs = CoefficientSet {
        a: a.clone(),
        b: b.clone(),
        c: num(cval),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(0.05, 1.35)),
        xt_window: s.xtw(XtWindow::new(0.4, 2.6, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::u(
            "h*zeta/Z - k1 - k2*f - k3*g",
            h.clone() * zeta.clone() / zx.clone()
                - (num(k1) + f.clone() * k2 + g.clone() * k3),
        ),
        Constraint::xt(
            "theta_t - k1*c*theta",
            theta.d_dt() - theta.clone() * (k1 * cval),
        ),
        Constraint::xt(
            "(a*theta_x)_x + k2*c*theta",
            flux_div(&a, &theta) + theta.clone() * (k2 * cval),
        ),
        Constraint::xt(
            "b*theta_x + k3*c*theta",
            of_x(b.clone()) * theta.d_dx() + theta.clone() * (k3 * cval),
        ),
        Constraint::xt(
            "(a*omega')' + (k2 lambda/k1) omega",
            of_x(
                (a.clone() * omega.differentiate()).differentiate()
                    + omega.clone() * (k2 * lambda / k1),
            ),
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
    let xw = sol.xt_window.x;
    let aux = vec![AuxCheck {
        name: "omega linear second-order".to_string(),
        spec: AuxOdeSpec {
            kind: AuxOdeKind::Linear2 {
                a: a.clone(),
                p: num(0.0),
                q: num(k2 * lambda / k1),
                r: num(0.0),
            },
            interval: xw,
            init: (xw.lo.sin(), Some(xw.lo.cos())),
        },
        analytic: xv().sin(),
    }];
    Ok(vec![mk_inst(
        "S24",
        "S24",
        coeffs,
        sol,
        Variant::ThetaWeighted,
        constraints,
        relations,
        aux,
    )])
}

// ---------------------------------------------------------------- S25

fn s25_def() -> EntryDef {
    EntryDef {
        id: "S25",
        description: "int f du = (gamma x + delta) e^{alpha x + beta t} for a = b = c = 1",
        func_slots: &[("f", VarKind::U, uv)],
        const_slots: &[
            ("alpha", 0.4),
            ("beta", 0.7),
            ("gamma", 0.5),
            ("delta", 0.8),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = (gamma x + delta) e^{alpha x + beta t}",
        construct: s25,
    }
}

fn s25(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let f = s.func("f");
    let (alpha, beta, gamma, delta) = (
        s.num("alpha"),
        s.num("beta"),
        s.num("gamma"),
        s.num("delta"),
    );
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let g = -(f.clone() * (2.0 * alpha));
    let h = (num(alpha * alpha) + num(beta) / f.clone()) * zx.clone();
    let theta = of_x((xv() * gamma + delta) * (xv() * alpha).exp())
        * of_t((xv() * beta).exp());
    let coeffs = CoefficientSet {
        a: num(1.0),
        b: num(1.0),
        c: num(1.0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(1.0, 3.2)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u("g + 2*alpha*f", g.clone() + f.clone() * (2.0 * alpha)),
        Constraint::u(
            "h*f/F - alpha^2*f - beta",
            h.clone() * f.clone() / zx.clone() - f.clone() * (alpha * alpha) - beta,
        ),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt("theta_t - beta*theta", theta.d_dt() - theta.clone() * beta),
        Constraint::xt(
            "theta_xx - 2 alpha theta_x + alpha^2 theta",
            theta.d_dx().d_dx() - theta.d_dx() * (2.0 * alpha)
                + theta.clone() * (alpha * alpha),
        ),
    ];
    let relations = vec![
        Relation::phi("Phi1 = -beta*Phi5", &[(1, 1.0), (5, beta)]),
        Relation::phi(
            "Phi2 - 2 alpha Phi4 + alpha^2 Phi5 = 0",
            &[(2, 1.0), (4, -2.0 * alpha), (5, alpha * alpha)],
        ),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi("Psi4 = -2 alpha Psi2", &[(4, 1.0), (2, 2.0 * alpha)]),
        Relation::psi(
            "Psi5 = alpha^2 Psi2 + beta Psi1",
            &[(5, 1.0), (2, -alpha * alpha), (1, -beta)],
        ),
    ];
    Ok(vec![mk_inst(
        "S25",
        "S25",
        coeffs,
        sol,
        Variant::ThetaWeighted,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S26

fn s26_def() -> EntryDef {
    EntryDef {
        id: "S26",
        description: "int f du = A e^{alpha x + beta t} + B e^{gamma x + delta t}",
        func_slots: &[("f", VarKind::U, || uv().exp())],
        const_slots: &[
            ("A", 0.6),
            ("B", 0.5),
            ("alpha", 0.4),
            ("beta", 0.7),
            ("gamma", -0.3),
            ("delta", 0.2),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = A e^{alpha x + beta t} + B e^{gamma x + delta t}",
        construct: s26,
    }
}

fn s26(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let f = s.func("f");
    let (ca, cb, alpha, beta, gamma, delta) = (
        s.num("A"),
        s.num("B"),
        s.num("alpha"),
        s.num("beta"),
        s.num("gamma"),
        s.num("delta"),
    );
    let drift = (delta - beta) / (gamma - alpha);
    let cc = (beta * gamma - alpha * delta) / (gamma - alpha);
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let g = num(drift) - f.clone() * (alpha + gamma);
    let h = (num(alpha * gamma) + num(cc) / f.clone()) * zx.clone();
    let theta = of_x((xv() * alpha).exp()) * of_t((xv() * beta).exp()) * ca
        + of_x((xv() * gamma).exp()) * of_t((xv() * delta).exp()) * cb;
    let coeffs = CoefficientSet {
        a: num(1.0),
        b: num(1.0),
        c: num(1.0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(0.4, 1.6)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "g - drift + (alpha+gamma) f",
            g.clone() - drift + f.clone() * (alpha + gamma),
        ),
        Constraint::u(
            "h*f/F - alpha*gamma*f - cc",
            h.clone() * f.clone() / zx.clone() - f.clone() * (alpha * gamma) - cc,
        ),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt(
            "theta_xx - (alpha+gamma) theta_x + alpha gamma theta",
            theta.d_dx().d_dx() - theta.d_dx() * (alpha + gamma)
                + theta.clone() * (alpha * gamma),
        ),
        Constraint::xt(
            "-theta_t + drift*theta_x + cc*theta",
            -theta.d_dt() + theta.d_dx() * drift + theta.clone() * cc,
        ),
    ];
    let relations = vec![
        Relation::phi(
            "Phi2 - (alpha+gamma) Phi4 + alpha gamma Phi5 = 0",
            &[(2, 1.0), (4, -(alpha + gamma)), (5, alpha * gamma)],
        ),
        Relation::phi(
            "Phi1 + drift*Phi4 + cc*Phi5 = 0",
            &[(1, 1.0), (4, drift), (5, cc)],
        ),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi(
            "Psi4 = drift Psi1 - (alpha+gamma) Psi2",
            &[(4, 1.0), (1, -drift), (2, alpha + gamma)],
        ),
        Relation::psi(
            "Psi5 = alpha gamma Psi2 + cc Psi1",
            &[(5, 1.0), (2, -alpha * gamma), (1, -cc)],
        ),
    ];
    Ok(vec![mk_inst(
        "S26",
        "S26",
        coeffs,
        sol,
        Variant::ThetaWeighted,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S27

fn s27_def() -> EntryDef {
    EntryDef {
        id: "S27",
        description: "int f du = A e^{alpha t} sin(beta x + sigma t + delta)",
        func_slots: &[("f", VarKind::U, || uv().exp())],
        const_slots: &[
            ("A", 0.9),
            ("alpha", 0.3),
            ("beta", 0.8),
            ("sigma", 0.24),
            ("delta", 0.4),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = A e^{alpha t} sin(beta x + sigma t + delta)",
        construct: s27,
    }
}

fn s27(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let f = s.func("f");
    let (ca, alpha, beta, sigma, delta) = (
        s.num("A"),
        s.num("alpha"),
        s.num("beta"),
        s.num("sigma"),
        s.num("delta"),
    );
    let gamma = sigma / beta;
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let g = num(gamma);
    let h = (num(beta * beta) + num(alpha) / f.clone()) * zx.clone();
    let phase = of_x(xv() * beta + delta) + of_t(xv() * sigma);
    let theta = phase.sin() * of_t((xv() * alpha).exp()) * ca;
    let coeffs = CoefficientSet {
        a: num(1.0),
        b: num(1.0),
        c: num(1.0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(0.1, 1.2)),
        xt_window: s.xtw(XtWindow::new(0.2, 1.2, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u("g - sigma/beta", g.clone() - gamma),
        Constraint::u(
            "h*f/F - beta^2*f - alpha",
            h.clone() * f.clone() / zx.clone() - f.clone() * (beta * beta) - alpha,
        ),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt(
            "theta_xx + beta^2 theta",
            theta.d_dx().d_dx() + theta.clone() * (beta * beta),
        ),
        Constraint::xt(
            "-theta_t + gamma theta_x + alpha theta",
            -theta.d_dt() + theta.d_dx() * gamma + theta.clone() * alpha,
        ),
    ];
    let relations = vec![
        Relation::phi("Phi2 + beta^2 Phi5 = 0", &[(2, 1.0), (5, beta * beta)]),
        Relation::phi(
            "Phi1 + gamma Phi4 + alpha Phi5 = 0",
            &[(1, 1.0), (4, gamma), (5, alpha)],
        ),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi("Psi4 = gamma Psi1", &[(4, 1.0), (1, -gamma)]),
        Relation::psi(
            "Psi5 = beta^2 Psi2 + alpha Psi1",
            &[(5, 1.0), (2, -beta * beta), (1, -alpha)],
        ),
    ];
    Ok(vec![mk_inst(
        "S27",
        "S27",
        coeffs,
        sol,
        Variant::ThetaWeighted,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S28

fn s28_def() -> EntryDef {
    EntryDef {
        id: "S28",
        description: "power form: int f du = omega(x) t^{1/n}, Emden-Fowler profile",
        func_slots: &[
            ("a", VarKind::X, || num(1.0)),
            ("f", VarKind::U, || uv().exp()),
            ("g", VarKind::U, || uv().cos() + 2.0),
        ],
        const_slots: &[("n", -1.0), ("k", 1.0), ("C1", 0.3), ("C2", 2.0)],
        has_aux_ode: true,
        two_branch: false,
        solution_form: "int f du = omega(x) t^{1/n};  (a omega')' + k omega^{n+1} = 0",
        construct: s28,
    }
}

fn s28(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, f, g) = (s.func("a"), s.func("f"), s.func("g"));
    let (n, k, c1, c2) = (s.num("n"), s.num("k"), s.num("C1"), s.num("C2"));
    if n != -1.0 {
        return Err(CatalogError::Window {
            entry: "S28".to_string(),
            what: "the shipped constructor uses the closed-form omega of the n = -1 case; \
                   integrate other n with the auxiliary-ODE solver"
                .to_string(),
        });
    }
    let (k1, k2, k3) = (1.0 / n, k, 1.0);
    // n = -1: omega = -k int x/a dx + C1 int dx/a + C2 solves (a w')' + k = 0.
    let ixa = integral(&(xv() / a.clone()), 0.0);
    let ia = integral(&(1.0 / a.clone()), 0.0);
    let omega = ixa * (-k) + ia * c1 + c2;
    let omega_p = omega.differentiate();
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let b = -(omega.clone().powf(n + 1.0) / omega_p.clone());
    let c = omega.clone().powf(n);
    let h = (zx.clone() / f.clone())
        * (f.clone() * k + g.clone() + zx.clone().powf(-n) * (1.0 / n));
    let theta = of_t(xv().powf(1.0 / n).with_domain(XPOS)) * of_x(omega.clone());
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
        u_window: s.uw(Interval::new(0.2, 1.5)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 1.0, 2.0)),
    };
    let constraints = vec![
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::u(
            "h*zeta/Z - k1 Z^{-n} - k2 f - k3 g",
            h.clone() * zeta.clone() / zx.clone()
                - zx.clone().powf(-n) * k1
                - f.clone() * k2
                - g.clone() * k3,
        ),
        Constraint::xt(
            "theta^n theta_t - k1 c theta",
            theta.clone().powf(n) * theta.d_dt() - of_x(c.clone()) * theta.clone() * k1,
        ),
        Constraint::xt(
            "(a theta_x)_x + k2 c theta",
            flux_div(&a, &theta) + of_x(c.clone()) * theta.clone() * k2,
        ),
        Constraint::xt(
            "b theta_x + k3 c theta",
            of_x(b.clone()) * theta.d_dx() + of_x(c.clone()) * theta.clone() * k3,
        ),
        Constraint::xt(
            "(a omega')' + k omega^{n+1}",
            of_x(
                (a.clone() * omega_p.clone()).differentiate()
                    + omega.clone().powf(n + 1.0) * k,
            ),
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
    let xw = sol.xt_window.x;
    let aux = vec![AuxCheck {
        name: "omega Emden-Fowler".to_string(),
        spec: AuxOdeSpec {
            kind: AuxOdeKind::EmdenFowler {
                a: a.clone(),
                k,
                n,
            },
            interval: xw,
            init: (
                omega.eval_raw(xw.lo).map_err(CatalogError::Func)?,
                Some(omega_p.eval_raw(xw.lo).map_err(CatalogError::Func)?),
            ),
        },
        analytic: omega.clone(),
    }];
    Ok(vec![mk_inst(
        "S28",
        "S28",
        coeffs,
        sol,
        Variant::Power { n },
        constraints,
        relations,
        aux,
    )])
}

// ---------------------------------------------------------------- S29

fn s29_def() -> EntryDef {
    EntryDef {
        id: "S29",
        description: "int f du = C1 e^{lambda t} + C2 e^{beta t - mu x} for a = b = c = 1",
        func_slots: &[("f", VarKind::U, || uv().exp())],
        const_slots: &[
            ("C1", 0.6),
            ("C2", 0.5),
            ("lambda", 0.4),
            ("beta", 0.3),
            ("mu", 0.8),
        ],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f du = C1 e^{lambda t} + C2 e^{beta t - mu x}",
        construct: s29,
    }
}

fn s29(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let f = s.func("f");
    let (c1, c2, lambda, beta, mu) = (
        s.num("C1"),
        s.num("C2"),
        s.num("lambda"),
        s.num("beta"),
        s.num("mu"),
    );
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let g = f.clone() * mu + (lambda - beta) / mu;
    let h = zx.clone() * lambda / f.clone();
    let theta = of_t((xv() * lambda).exp()) * c1
        + of_t((xv() * beta).exp()) * of_x((-(xv() * mu)).exp()) * c2;
    let coeffs = CoefficientSet {
        a: num(1.0),
        b: num(1.0),
        c: num(1.0),
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
    };
    let sol = ImplicitSolution {
        zeta: zeta.clone(),
        fzeta,
        theta: theta.clone(),
        u_window: s.uw(Interval::new(0.3, 1.3)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "g - mu f - (lambda-beta)/mu",
            g.clone() - f.clone() * mu - (lambda - beta) / mu,
        ),
        Constraint::u("h*f - lambda*F", h.clone() * f.clone() - zx.clone() * lambda),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt(
            "theta_xx + mu theta_x",
            theta.d_dx().d_dx() + theta.d_dx() * mu,
        ),
        Constraint::xt(
            "theta_t - lambda theta + ((beta-lambda)/mu) theta_x",
            theta.d_dt() - theta.clone() * lambda + theta.d_dx() * ((beta - lambda) / mu),
        ),
    ];
    let relations = vec![
        Relation::phi("Phi2 + mu Phi4 = 0", &[(2, 1.0), (4, mu)]),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi(
            "Psi4 = mu Psi2 + ((lambda-beta)/mu) Psi1",
            &[(4, 1.0), (2, -mu), (1, -(lambda - beta) / mu)],
        ),
    ];
    Ok(vec![mk_inst(
        "S29",
        "S29",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S30

fn s30_def() -> EntryDef {
    EntryDef {
        id: "S30",
        description: "zeta = -(1/sigma) f/u with power-law a, b; steady profile plus e^{k sigma t}",
        func_slots: &[
            ("f", VarKind::U, || uv().powf(2.0)),
            ("g", VarKind::U, || uv().cos() + 2.0),
        ],
        const_slots: &[("k", 1.2), ("sigma", 0.6), ("Ce", -0.7)],
        has_aux_ode: false,
        two_branch: false,
        solution_form: "int f/u du = C e^{k sigma t} - (sigma/k) x^k",
        construct: s30,
    }
}

fn s30(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (f, g) = (s.func("f"), s.func("g"));
    let (k, sigma, ce) = (s.num("k"), s.num("sigma"), s.num("Ce"));
    let lambda = k * sigma;
    let a = xv().powf(2.0 - k).with_domain(XPOS);
    let b = xv().powf(1.0 - k).with_domain(XPOS);
    let w_int = Antiderivative::new((f.clone() / uv()).with_domain(XPOS), 1.0);
    let wx = w_int.into_expr();
    let zeta = ((f.clone() / uv()) * (-1.0 / sigma)).with_domain(XPOS);
    let fzeta = Antiderivative::new(zeta.clone(), 1.0);
    let zx = fzeta.clone().into_expr();
    let h = ((uv() * sigma) / f.clone()) * (f.clone() + g.clone() + wx.clone() * k);
    let steady = xv().powf(k).with_domain(XPOS) / k;
    let theta = of_x(steady.clone()) + of_t((xv() * lambda).exp()) * ce;
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
        u_window: s.uw(Interval::new(0.3, 2.5)),
        xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
    };
    let constraints = vec![
        Constraint::u(
            "lambda + k (f/zeta)'_u",
            num(lambda) + dfz(&f, &zeta) * k,
        ),
        Constraint::u(
            "-lambda Z + f + g + h zeta",
            -(zx.clone() * lambda) + f.clone() + g.clone() + h.clone() * zeta.clone(),
        ),
        Constraint::xt("(a theta_x)_x - 1", flux_div(&a, &theta) - bconst(1.0)),
        Constraint::xt("b theta_x - 1", of_x(b.clone()) * theta.d_dx() - bconst(1.0)),
        Constraint::xt(
            "a theta_x^2 - k (theta - Ce e^{lambda t})",
            of_x(a.clone()) * theta.d_dx().powf(2.0)
                - (theta.clone() - of_t((xv() * lambda).exp()) * ce) * k,
        ),
        Constraint::xt(
            "theta_t - lambda (theta - steady)",
            theta.d_dt() - (theta.clone() - of_x(steady.clone())) * lambda,
        ),
    ];
    let relations = vec![
        Relation::phi("Phi2 = Phi5", &[(2, 1.0), (5, -1.0)]),
        Relation::phi("Phi4 = Phi5", &[(4, 1.0), (5, -1.0)]),
        Relation::psi("lambda Psi1 + k Psi3 = 0", &[(1, lambda), (3, k)]),
    ];
    Ok(vec![mk_inst(
        "S30",
        "S30",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        vec![],
    )])
}

// ---------------------------------------------------------------- S31

fn s31_def() -> EntryDef {
    EntryDef {
        id: "S31",
        description: "int f du = m2 c(x) t + eta(x); (a c')' + b c' + m3 c^2 = 0 links a, b, c",
        func_slots: &[
            ("a", VarKind::X, || num(1.0)),
            ("c", VarKind::X, || (-xv()).exp()),
            ("f", VarKind::U, || uv().exp()),
        ],
        const_slots: &[("m1", 0.5), ("m2", 0.8), ("m3", 0.6), ("rho", 0.9)],
        has_aux_ode: true,
        two_branch: false,
        solution_form: "int f du = m2 c(x) t + eta(x)",
        construct: s31,
    }
}

fn s31(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, cfun, f) = (s.func("a"), s.func("c"), s.func("f"));
    let (m1, m2, m3, rho) = (s.num("m1"), s.num("m2"), s.num("m3"), s.num("rho"));
    let cp = cfun.differentiate();
    let b = -(((a.clone() * cp.clone()).differentiate()
        + cfun.clone() * cfun.clone() * m3)
        / cp.clone());
    // Closed-form eta for the shipped a = 1, c = e^{-x}; with general slots the
    // eta-equation constraint reports the mismatch.
    let eta = (-xv()).exp() * rho - m1 / m3;
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 0.0);
    let zx = fzeta.clone().into_expr();
    let g = f.clone();
    let h = num(m1) + num(m2) / f.clone() + zx.clone() * m3;
    let theta = of_x(cfun.clone()) * bt() * m2 + of_x(eta.clone());
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
        u_window: s.uw(Interval::new(-1.5, 1.0)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let eta_ode = (a.clone() * eta.differentiate()).differentiate()
        + b.clone() * eta.differentiate()
        + cfun.clone() * eta.clone() * m3
        + cfun.clone() * m1;
    let c_ode = (a.clone() * cp.clone()).differentiate()
        + b.clone() * cp.clone()
        + cfun.clone() * cfun.clone() * m3;
    let constraints = vec![
        Constraint::u("g - f", g.clone() - f.clone()),
        Constraint::u(
            "h - m1 - m2/f - m3 F",
            h.clone() - m1 - num(m2) / f.clone() - zx.clone() * m3,
        ),
        Constraint::u("(f/zeta)'_u", dfz(&f, &zeta)),
        Constraint::xt("(a c')' + b c' + m3 c^2", of_x(c_ode)),
        Constraint::xt("(a eta')' + b eta' + m3 c eta + m1 c", of_x(eta_ode)),
        Constraint::xt(
            "theta_t - m2 c",
            theta.d_dt() - of_x(cfun.clone()) * m2,
        ),
    ];
    let relations = vec![
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
        Relation::psi("Psi4 = Psi2", &[(4, 1.0), (2, -1.0)]),
    ];
    let xw = sol.xt_window.x;
    let aux = vec![AuxCheck {
        name: "eta linear second-order".to_string(),
        spec: AuxOdeSpec {
            kind: AuxOdeKind::Linear2 {
                a: a.clone(),
                p: b.clone(),
                q: cfun.clone() * m3,
                r: cfun.clone() * m1,
            },
            interval: xw,
            init: (
                eta.eval_raw(xw.lo).map_err(CatalogError::Func)?,
                Some(
                    eta.differentiate()
                        .eval_raw(xw.lo)
                        .map_err(CatalogError::Func)?,
                ),
            ),
        },
        analytic: eta.clone(),
    }];
    Ok(vec![mk_inst(
        "S31",
        "S31",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        aux,
    )])
}

// ---------------------------------------------------------------- S32

fn s32_def() -> EntryDef {
    EntryDef {
        id: "S32",
        description: "explicit solution u = (1/4)(xi t + eta)^2 for f = g = u^{-1/2}",
        func_slots: &[
            ("a", VarKind::X, || num(1.0)),
            ("b", VarKind::X, || num(1.0)),
            ("c", VarKind::X, || num(1.0)),
        ],
        const_slots: &[("k3", 0.8), ("k4", 0.5), ("rho", 0.7), ("q", 2.5)],
        has_aux_ode: true,
        two_branch: false,
        solution_form: "u = (1/4)(xi t + eta)^2;  xi = k3 when c = 1",
        construct: s32,
    }
}

fn s32(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let (a, b, cfun) = (s.func("a"), s.func("b"), s.func("c"));
    let (k3, k4, rho, q) = (s.num("k3"), s.num("k4"), s.num("rho"), s.num("q"));
    let f = uv().powf(-0.5).with_domain(XPOS);
    let g = f.clone();
    let h = uv().powf(0.5).with_domain(XPOS) * k3 + k4;
    let zeta = f.clone();
    let fzeta = Antiderivative::new(zeta.clone(), 1.0);
    let zx = fzeta.clone().into_expr();
    // xi = k3 solves the xi-equation exactly when c = 1;
    // eta = rho e^{-x} - k4 x + q solves the eta-equation for a = b = 1.
    let xi = num(k3);
    let eta = (-xv()).exp() * rho - xv() * k4 + q;
    // F is anchored at u0 = 1, so theta = xi t + eta - 2 sqrt(u0).
    let theta = bt() * k3 + of_x(eta.clone()) - 2.0;
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
        u_window: s.uw(Interval::new(1.0, 5.0)),
        xt_window: s.xtw(XtWindow::new(0.0, 1.0, 0.1, 1.0)),
    };
    let xi_ode = (a.clone() * xi.differentiate()).differentiate()
        + b.clone() * xi.differentiate()
        + cfun.clone() * xi.clone() * (0.5 * k3)
        - xi.clone() * xi.clone() * 0.5;
    let eta_ode = (a.clone() * eta.differentiate()).differentiate()
        + b.clone() * eta.differentiate()
        + cfun.clone() * eta.clone() * (0.5 * k3)
        - xi.clone() * eta.clone() * 0.5
        + cfun.clone() * k4;
    let constraints = vec![
        Constraint::u("g - f", g.clone() - f.clone()),
        Constraint::u(
            "F - k5/f - k6  (k5 = 2, k6 = 0)",
            (zx.clone() + 2.0) - num(2.0) / f.clone(),
        ),
        Constraint::u(
            "h - k3 sqrt(u) - k4",
            h.clone() - uv().powf(0.5).with_domain(XPOS) * k3 - k4,
        ),
        Constraint::xt("(a xi')' + b xi' + (k3/2) c xi - xi^2/2", of_x(xi_ode)),
        Constraint::xt(
            "(a eta')' + b eta' + (k3/2) c eta - xi eta/2 + k4 c",
            of_x(eta_ode),
        ),
        Constraint::xt("theta_t - xi", theta.d_dt() - of_x(xi.clone())),
    ];
    let relations = vec![
        Relation::psi("Psi4 = Psi2", &[(4, 1.0), (2, -1.0)]),
        Relation::psi("Psi3 = 0", &[(3, 1.0)]),
    ];
    let xw = sol.xt_window.x;
    let q_eta = cfun.clone() * (0.5 * k3) - 0.5 * k3;
    let aux = vec![AuxCheck {
        name: "eta linear second-order".to_string(),
        spec: AuxOdeSpec {
            kind: AuxOdeKind::Linear2 {
                a: a.clone(),
                p: b.clone(),
                q: q_eta,
                r: cfun.clone() * k4,
            },
            interval: xw,
            init: (
                eta.eval_raw(xw.lo).map_err(CatalogError::Func)?,
                Some(
                    eta.differentiate()
                        .eval_raw(xw.lo)
                        .map_err(CatalogError::Func)?,
                ),
            ),
        },
        analytic: eta.clone(),
    }];
    Ok(vec![mk_inst(
        "S32",
        "S32",
        coeffs,
        sol,
        Variant::Plain,
        constraints,
        relations,
        aux,
    )])
}

// ---------------------------------------------------------------- S33

fn s33_def() -> EntryDef {
    EntryDef {
        id: "S33",
        description: "zeta = f/u: int f/u du = (lambda/4) x^2 +- gamma x + beta e^{-lambda t}",
        func_slots: &[("f", VarKind::U, || uv().powf(2.0))],
        const_slots: &[("lambda", 0.6), ("gamma", 0.5), ("beta", 0.8)],
        has_aux_ode: false,
        two_branch: true,
        solution_form: "int f/u du = (lambda/4) x^2 +- gamma x + beta e^{-lambda t}",
        construct: s33,
    }
}

fn s33(s: &Slots) -> Result<Vec<Instance>, CatalogError> {
    let f = s.func("f");
    let (lambda, gamma, beta) = (s.num("lambda"), s.num("gamma"), s.num("beta"));
    let w_int = Antiderivative::new((f.clone() / uv()).with_domain(XPOS), 1.0);
    let wx = w_int.into_expr();
    let zeta = (f.clone() / uv()).with_domain(XPOS);
    let fzeta = Antiderivative::new(zeta.clone(), 1.0);
    let h = -(uv() * (lambda / 2.0))
        - (uv() / f.clone()) * (gamma * gamma)
        - (uv() / f.clone()) * wx.clone() * lambda;
    let mut out = Vec::new();
    for sign in [1.0, -1.0] {
        let steady = xv().powf(2.0) * (lambda / 4.0) + xv() * (sign * gamma);
        let theta = of_x(steady.clone()) + of_t((-(xv() * lambda)).exp()) * beta;
        let coeffs = CoefficientSet {
            a: num(1.0),
            b: num(0.0),
            c: num(1.0),
            f: f.clone(),
            g: num(1.0),
            h: h.clone(),
        };
        let sol = ImplicitSolution {
            zeta: zeta.clone(),
            fzeta: fzeta.clone(),
            theta: theta.clone(),
            u_window: s.uw(Interval::new(0.8, 2.3)),
            xt_window: s.xtw(XtWindow::new(0.5, 1.5, 0.1, 1.0)),
        };
        let constraints = vec![
            Constraint::u(
                "h zeta + (lambda/2) f + gamma^2 + lambda W",
                h.clone() * zeta.clone()
                    + f.clone() * (lambda / 2.0)
                    + gamma * gamma
                    + wx.clone() * lambda,
            ),
            Constraint::u("(f/zeta)' - 1", dfz(&f, &zeta) - 1.0),
            Constraint::xt(
                "theta_xx - lambda/2",
                theta.d_dx().d_dx() - bconst(lambda / 2.0),
            ),
            Constraint::xt(
                "theta_t + lambda (theta - steady)",
                theta.d_dt() + (theta.clone() - of_x(steady.clone())) * lambda,
            ),
            Constraint::xt(
                "theta_x^2 - lambda steady - gamma^2",
                theta.d_dx().powf(2.0) - of_x(steady.clone()) * lambda - bconst(gamma * gamma),
            ),
        ];
        let relations = vec![Relation::psi("Psi3 = Psi1", &[(3, 1.0), (1, -1.0)])];
        let label = if sign > 0.0 { "S33+" } else { "S33-" };
        out.push(mk_inst(
            label,
            "S33",
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
