use ncnet::algebra::{Element, Matrix};
use ncnet::io::{serialize_cyclic, serialize_element, Labels};
use ncnet::refactor::*;
use ncnet::rmatrix::disk_rho;
use ncnet::scalar::{Scalar, Var};

fn ctx(n: usize, d: usize) -> FreeMatrixContext {
    FreeMatrixContext::new(n, d).unwrap()
}

fn show(c: &FreeMatrixContext, e: &Element) -> String {
    serialize_element(e, &c.labels())
}

/// Coefficient of `t^k` in every entry.
fn t_coeff(m: &Matrix, k: u32) -> Matrix {
    m.map(|e| {
        e.map_coeffs(|c| Scalar::from_fraction(c.numer().coeff_in(Var::T, k), c.denom().clone()).unwrap())
    })
}

#[test]
fn generator_brackets() {
    let c = ctx(2, 4);
    let t = db_generators(&c).unwrap();
    for i in 0..2 {
        assert!(t.get(c.gen(i, i), c.gen(i, i)).is_none());
    }
    let l = c.labels();
    let wd = |w: &ncnet::algebra::Word| {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|g| l.gen_label(*g).unwrap()).collect::<Vec<_>>().join(".")
        }
    };
    let show_wt = |a, b| {
        let mut v: Vec<String> = t
            .get(a, b)
            .map(|w| w.iter().map(|((u, v), k)| format!("{k} * {} (x) {}", wd(u), wd(v))).collect())
            .unwrap_or_default();
        v.sort();
        v.join(" + ")
    };
    assert_eq!(show_wt(c.gen(0, 0), c.gen(0, 1)), "-1/2 * 1 (x) X12 + -1/2 * X11 (x) X12");
    assert_eq!(show_wt(c.gen(0, 0), c.gen(1, 1)), "-1 * X21 (x) X12");
    assert!(t.get(c.gen(0, 1), c.gen(1, 0)).is_none());
    // Skew: ⟪b, a⟫ = −τ⟪a, b⟫.
    for ((a, b), w) in t.pairs() {
        let back = t.get(*b, *a).expect("skew partner");
        for ((u, v), k) in w {
            assert_eq!(back.get(&(v.clone(), u.clone())), Some(&-k));
        }
        assert_eq!(back.len(), w.len());
    }

    let c1 = ctx(1, 4);
    assert!(db_generators(&c1).unwrap().get(c1.gen(0, 0), c1.gen(0, 0)).is_none());
}

#[test]
fn logarithm() {
    let c = ctx(2, 1);
    assert_eq!(log_b(&c).unwrap(), c.x());
    let c = ctx(1, 3);
    assert_eq!(show(&c, log_b(&c).unwrap().get(0, 0)), "1 * X11 + -1/2 * X11.X11 + 1/3 * X11.X11.X11");
    let c = ctx(2, 2);
    assert_eq!(show(&c, log_b(&c).unwrap().get(0, 1)), "1 * X12 + -1/2 * X11.X12 + -1/2 * X12.X22");
}

#[test]
fn hamiltonian_forms() {
    assert_eq!(harmonic(1), Scalar::one());
    assert_eq!(harmonic(2), Scalar::ratio(3, 2));
    assert_eq!(harmonic(3), Scalar::ratio(11, 6));
    let c = ctx(2, 2);
    assert_eq!(serialize_cyclic(&hamiltonian(&c).unwrap(), &c.labels()), "1/2 * cyc:X11.X11 + 1 * cyc:X12.X21 + 1/2 * cyc:X22.X22");
    let c = ctx(1, 4);
    assert_eq!(
        serialize_cyclic(&hamiltonian(&c).unwrap(), &c.labels()),
        "1/2 * cyc:X11.X11 + -1/2 * cyc:X11.X11.X11 + 11/24 * cyc:X11.X11.X11.X11"
    );
    assert!(hamiltonian(&ctx(2, 1)).unwrap().is_zero());
    let c = ctx(2, 5);
    assert_eq!(hamiltonian_square(&c).unwrap(), hamiltonian_series(&c).unwrap());
}

#[test]
fn hamiltonian_flow_is_a_commutator() {
    let c = ctx(2, 4);
    let (lhs, _, d) = flow_rhs(&c).unwrap();
    assert!(d.is_empty(), "{:?}", d.first());
    assert!(!lhs.is_zero());

    let (lhs, _, d) = flow_rhs(&ctx(1, 4)).unwrap();
    assert!(d.is_empty() && lhs.is_zero());

    let flipped = m_tilde(&c).unwrap().scale(&Scalar::int(-1));
    assert!(!flow_rhs_with(&c, &flipped, 2).unwrap().2.is_empty());

    // The constant-ρ corollary form is twice the matrix that works.
    let cor = m_corollary(&c).unwrap();
    assert!(!flow_rhs_with(&c, &cor, 2).unwrap().2.is_empty());
    assert!(flow_rhs_with(&c, &cor.scale(&Scalar::ratio(1, 2)), 2).unwrap().2.is_empty());
    assert_eq!(m_tilde_with(&c, &disk_rho(2).unwrap()).unwrap(), cor.scale(&Scalar::ratio(1, 2)));
}

#[test]
fn exact_through_the_cut() {
    // Cutting H at D loses nothing below degree D.
    let c = ctx(2, 4);
    let m = m_tilde(&c).unwrap();
    for upto in 1..=4 {
        assert!(flow_rhs_with(&c, &m, upto).unwrap().2.is_empty());
    }
}

#[test]
fn exponential() {
    let c = ctx(2, 3);
    let g = exp_tlog(&c).unwrap();
    assert_eq!(t_coeff(&g, 0), c.identity());
    assert_eq!(t_coeff(&g, 1), log_b(&c).unwrap());
    let c = ctx(1, 3);
    let g = exp_tlog(&c).unwrap();
    assert_eq!(show(&c, t_coeff(&g, 2).get(0, 0)), "1/2 * X11.X11 + -1/2 * X11.X11.X11");
}

#[test]
fn gauss_factorization() {
    let c = ctx(2, 3);
    let lower = Matrix::from_fn(c.objects(), c.objects(), |i, j| {
        if i >= j {
            c.b().get(i, j).clone()
        } else {
            Element::zero(c.objects()[i], c.objects()[j])
        }
    });
    let (gp, gm) = gauss_factor(&c, &lower).unwrap();
    assert_eq!(gp, c.identity());
    assert_eq!(gm, lower);

    let c = ctx(2, 2);
    let l = log_b(&c).unwrap();
    let t = Scalar::var(Var::T);
    let g = c.identity().try_add(&l.scale(&t)).unwrap();
    let (gp, gm) = gauss_factor(&c, &g).unwrap();
    assert!(strict_upper(&gm).is_zero());
    // U12 = −t L12 + t² L12 L22 through degree 2.
    let u12 = gp.get(0, 1);
    assert_eq!(show(&c, u12), "-t * X12 + (t)/2 * X11.X12 + (2*t^2+t)/2 * X12.X22");
    assert_eq!(gp.get(0, 0), &Element::identity(c.objects()[0]));
    assert!(gp.get(1, 0).is_zero());

    assert!(gauss_factor(&c, &c.identity().scale(&Scalar::int(2))).is_err());
}

#[test]
fn refactorization_flow() {
    let c = ctx(2, 5);
    let r = verify_flow(&c).unwrap();
    assert!(r.factorization.is_empty(), "{:?}", r.factorization.first());
    assert!(r.traces.is_empty(), "{:?}", r.traces.first());
    // The flow of B_t = g_+ B g_+^{-1} is not the Hamiltonian flow of H.
    assert_eq!(r.flow.len(), 4);
    assert_eq!(r.flow[0].location, "d/dt B_t (1,1) to degree 3");

    let r1 = verify_flow(&ctx(1, 4)).unwrap();
    assert!(r1.all().is_empty());
    let (bt, _, _) = b_t(&ctx(1, 4)).unwrap();
    assert_eq!(bt, ctx(1, 4).b());
}

#[test]
fn what_the_two_flows_are() {
    // d/dt B_t = −[(g_+ log B g_+^{-1})_+, B_t] exactly.
    let c = ctx(2, 5);
    let (bt, gp, _) = b_t(&c).unwrap();
    let lt = gp.mul_truncated(&log_b(&c).unwrap(), 5).unwrap().mul_truncated(&series_inverse(&c, &gp).unwrap(), 5).unwrap();
    let dt = bt.map(|e| e.map_coeffs(|k| k.derivative(Var::T)));
    let fact = commutator(&c, &strict_upper(&lt), &bt).unwrap().scale(&Scalar::int(-1));
    assert_eq!(dt, fact);

    // {H, ·} is a derivation, so {H, B_t} = [g_+ M̃ g_+^{-1} + {H, g_+} g_+^{-1}, B_t].
    let inv = series_inverse(&c, &gp).unwrap();
    let table = db_generators(&c).unwrap();
    let h = hamiltonian(&c).unwrap();
    let hb = hamiltonian_flow(&c, &table, &h, &bt).unwrap();
    let hg = hamiltonian_flow(&c, &table, &h, &gp).unwrap();
    let conj = gp.mul_truncated(&m_tilde(&c).unwrap(), 5).unwrap().mul_truncated(&inv, 5).unwrap();
    let mt = conj.try_add(&hg.mul_truncated(&inv, 5).unwrap()).unwrap();
    assert_eq!(hb.truncate(3), commutator(&c, &mt, &bt).unwrap().truncate(3));
}
