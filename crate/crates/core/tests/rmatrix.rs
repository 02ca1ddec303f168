mod common;

use common::show_t;
use ncnet::algebra::TensorElement;
use ncnet::error::Error;
use ncnet::network::*;
use ncnet::rmatrix::*;
use ncnet::scalar::{parse_scalar, Scalar, Var};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(num: &str, den: &str) -> Scalar {
    parse_scalar(&format!("({num})/({den})")).unwrap()
}

fn half() -> Scalar {
    Scalar::ratio(1, 2)
}

#[test]
fn elementary_pieces_satisfy_the_formula() {
    for net in [gamma_white(), gamma_black(), fig1(), gamma_white_on(Surface::Cylinder), gamma_black_cut()] {
        let d = verify_rmatrix_theorem(&net).unwrap();
        assert!(d.is_empty(), "{d:?}");
    }
}

#[test]
fn random_planar_networks() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..50 {
        let net = random_planar(&mut rng, 6, &format!("p{k}"));
        let d = verify_rmatrix_theorem(&net).unwrap();
        assert!(d.is_empty(), "network {k}: {:?}", &d[..d.len().min(3)]);
    }
}

#[test]
fn random_cylindrical_networks() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for k in 0..25 {
        let net = random_cylindrical(&mut rng, 5, &format!("c{k}"));
        let d = verify_rmatrix_theorem(&net).unwrap();
        assert!(d.is_empty(), "network {k}: {:?}", &d[..d.len().min(3)]);
    }
}

#[test]
fn cut_black_piece_entries() {
    let net = gamma_black_cut();
    let (lhs, rhs) = rmatrix_sides(&net).unwrap();
    assert_eq!(lhs.dims(), [2, 1, 2, 1]);
    assert_eq!(show_t(&net, lhs.get((0, 0, 1, 0))), "(λ)/2 * y1.y3 (x) y2.y3");
    assert_eq!(show_t(&net, lhs.get((1, 0, 0, 0))), "(-μ)/2 * y2.y3 (x) y1.y3");
    assert!(lhs.get((0, 0, 0, 0)).is_zero() && lhs.get((1, 0, 1, 0)).is_zero());

    // Right-hand side written out through b11, b21.
    let b = boundary_matrix(&net).unwrap();
    let bl = |i: usize| b.get(i, 0).clone();
    let bm = |i: usize| b.get(i, 0).substitute(Var::Lambda, Var::Mu);
    let p = |x: &ncnet::algebra::Element, y: &ncnet::algebra::Element| TensorElement::pure(x, y);
    let s = q("μ+λ", "2*μ-2*λ");
    let expected = [
        ((0, 0, 0, 0), p(&bl(0), &bm(0)).scale(&s).try_sub(&p(&bm(0), &bl(0)).scale(&s)).unwrap()),
        (
            (0, 0, 1, 0),
            p(&bl(1), &bm(0)).scale(&q("λ", "μ-λ")).try_sub(&p(&bm(1), &bl(0)).scale(&s)).unwrap(),
        ),
        (
            (1, 0, 0, 0),
            p(&bl(0), &bm(1)).scale(&q("μ", "μ-λ")).try_sub(&p(&bm(0), &bl(1)).scale(&s)).unwrap(),
        ),
        ((1, 0, 1, 0), p(&bl(1), &bm(1)).scale(&s).try_sub(&p(&bm(1), &bl(1)).scale(&s)).unwrap()),
    ];
    for (ix, e) in expected {
        assert_eq!(rhs.get(ix), &e, "cell {ix:?}");
        assert_eq!(lhs.get(ix), &e, "cell {ix:?}");
    }
}

#[test]
fn wrong_rmatrix_is_reported() {
    let net = gamma_white();
    let b = boundary_matrix(&net).unwrap();
    let r = disk_r(1).unwrap();
    let lhs = ncnet::bracket::matrix_db_spectral(
        &ncnet::bracket::GeneratorTable::from_network(&net, &ncnet::bracket::BracketParams::standard()).unwrap(),
        &b,
    )
    .unwrap();
    let zero = RMatrix::zero(2);
    let rhs = twisted_commutator(&r, &zero, &b, Var::Lambda, Var::Mu).unwrap();
    let d = table_defects(&rhs, &lhs, &net).unwrap();
    assert_eq!(d.len(), 2);
    assert_eq!(d[0].location, "cell (1,1),(1,2)");
    assert!(twisted_commutator(&disk_r(2).unwrap(), &zero, &b, Var::Lambda, Var::Mu).is_err());
}

#[test]
fn skew_symmetry() {
    for n in 1..=4 {
        assert!(check_skew(&disk_r(n).unwrap()).is_empty());
        assert!(check_skew(&trig_r(n).unwrap()).is_empty());
    }
    let mut r = RMatrix::zero(2);
    r.set(0, 1, 1, 0, Scalar::one());
    let d = check_skew(&r);
    assert_eq!(d.len(), 2);
    assert_eq!(d[0].location, "skew (1,2,2,1)");
}

#[test]
fn trigonometric_quasi_yang_baxter() {
    for n in 1..=4 {
        let r = trig_r(n).unwrap();
        assert!(check_qybe_one(&r).is_empty(), "n={n}");
        assert!(check_qybe_two(&r).is_empty(), "n={n}");
        assert!(check_r_conditions(&r, &r).is_empty());
        assert!(check_rho(&trig_rho(n).unwrap()).is_empty());
    }
}

#[test]
fn transposed_second_equation_fails_for_trig() {
    // The first sum with its index pairs swapped is not equivalent.
    assert!(check_qybe_two_transposed(&trig_r(1).unwrap()).is_empty());
    let d = check_qybe_two_transposed(&trig_r(3).unwrap());
    assert_eq!(d.len(), 18);
}

#[test]
fn zero_and_disk_matrices_fail() {
    let d = check_qybe_one(&RMatrix::zero(2));
    assert_eq!(d.len(), 2);
    assert_eq!(d[0].expected, "-1/4");
    assert_eq!(d[0].actual, "0");

    // The constant disk matrix satisfies none of the trigonometric equations.
    let rho = disk_rho(3).unwrap();
    let d = check_rho(&rho);
    assert_eq!(d.len(), 27);
    assert_eq!(d[0].location, "rho (1,1,1)");
    assert_eq!(d[0].actual, "1/4");
    assert_eq!(check_qybe_one(&disk_r(3).unwrap()).len(), 27);
}

#[test]
fn six_cases_match_written_forms() {
    let rho = trig_rho(3).unwrap();
    let cases = rho_cases(&rho);
    assert_eq!(cases.len(), 6);
    let h = half();
    let written = [
        &(&(&q("μ", "ν-μ") * &q("λ", "μ-λ")) + &(&q("λ", "λ-ν") * &q("ν", "ν-μ"))) + &(&q("λ", "μ-λ") * &q("λ", "λ-ν")),
        &(&(&q("ν", "ν-μ") * &q("λ", "μ-λ")) + &(&q("λ", "λ-ν") * &q("ν", "ν-μ"))) + &(&q("λ", "μ-λ") * &q("ν", "λ-ν")),
        &(&(&q("μ", "ν-μ") * &q("λ", "μ-λ")) + &(&(&q("λ", "λ-ν") * &h) * &q("μ+ν", "ν-μ")))
            + &(&(&h * &q("λ+μ", "μ-λ")) * &q("λ", "λ-ν")),
        &(&(&(&h * &q("ν+μ", "ν-μ")) * &q("λ", "μ-λ")) + &(&q("λ", "λ-ν") * &q("ν", "ν-μ")))
            + &(&(&q("λ", "μ-λ") * &h) * &q("λ+ν", "λ-ν")),
        &(&(&(&q("ν", "ν-μ") * &h) * &q("μ+λ", "μ-λ")) + &(&(&h * &q("λ+ν", "λ-ν")) * &q("ν", "ν-μ")))
            + &(&q("λ", "μ-λ") * &q("ν", "λ-ν")),
        &(&(&(&(&h * &q("μ+ν", "ν-μ")) * &h) * &q("μ+λ", "μ-λ"))
            + &(&(&(&h * &q("λ+ν", "λ-ν")) * &h) * &q("ν+μ", "ν-μ")))
            + &(&(&(&(&h * &q("μ+λ", "μ-λ")) * &h) * &q("λ+ν", "λ-ν")) + &Scalar::ratio(1, 4)),
    ];
    for ((name, v), w) in cases.iter().zip(&written) {
        assert!(v.is_zero(), "{name}: {v}");
        assert!(w.is_zero(), "{name} written form: {w}");
    }
    let disk = rho_cases(&disk_rho(3).unwrap());
    assert_eq!(disk[5].1, Scalar::ratio(1, 4));
}

#[test]
fn quasi_jacobi_trigonometric() {
    let ctx = FormalLaxContext::new(2, 0, 1).unwrap();
    let r = trig_r(2).unwrap();
    let d = quasi_jacobi_check(&ctx, &r, &r).unwrap();
    assert!(d.is_empty(), "{:?}", &d[..d.len().min(2)]);
    // Not vacuous: the diagonal tuple carries both quarter terms.
    let t = formal_triple_bracket(&ctx, &r, &r).unwrap();
    assert!(!t[&(0, 0, 0, 0, 0, 0)].is_empty());
}

#[test]
fn quasi_jacobi_disk_holds_without_the_equations() {
    // The equations are sufficient, not necessary.
    let ctx = FormalLaxContext::new(3, 0, 0).unwrap();
    let r = disk_r(3).unwrap();
    assert!(quasi_jacobi_check(&ctx, &r, &r).unwrap().is_empty());
}

#[test]
fn quasi_jacobi_zero_matrix_fails() {
    let ctx = FormalLaxContext::new(2, 0, 0).unwrap();
    let z = RMatrix::zero(2);
    let d = quasi_jacobi_check(&ctx, &z, &z).unwrap();
    assert_eq!(d.len(), 24);
    assert_eq!(d[0].location, "(1,1),(1,1),(1,2)");
    assert_eq!(d[0].expected, "-1/4 * h_11(0) (x) h_11(0) (x) h_12(0)");
    assert_eq!(d[0].actual, "0");
}

#[test]
fn quasi_jacobi_rejects_non_skew() {
    let ctx = FormalLaxContext::new(2, 0, 0).unwrap();
    let mut r = RMatrix::zero(2);
    r.set(0, 1, 1, 0, Scalar::one());
    assert!(matches!(quasi_jacobi_check(&ctx, &r, &r), Err(Error::SkewViolated(_))));
}

#[test]
fn generator_level_agrees() {
    let ctx = FormalLaxContext::new(2, 0, 1).unwrap();
    for r in [disk_r(2).unwrap(), trig_r(2).unwrap()] {
        let table = ctx.generator_table(&r, &r).unwrap();
        let sym = formal_triple_bracket(&ctx, &r, &r).unwrap();
        let b = ctx.expanded_matrix();
        let (bl, bm, bn) = (b.clone(), b.substitute(Var::Lambda, Var::Mu), b.substitute(Var::Lambda, Var::Nu));
        for (&(a1, a4, b1, b4, c1, c4), t) in sym.iter().step_by(5) {
            let g = cyclic_sum(&table, bl.get(a1, a4), bm.get(b1, b4), bn.get(c1, c4));
            assert_eq!(&g, t);
        }
    }
}

#[test]
fn generator_level_needs_closure() {
    // On constant matrices the trigonometric brackets are constant.
    let narrow = FormalLaxContext::new(2, 0, 0).unwrap();
    let r = trig_r(2).unwrap();
    assert!(narrow.generator_table(&r, &r).is_ok());
    let mut r = RMatrix::zero(1);
    r.set(0, 0, 0, 0, parse_scalar("1/(μ+λ)").unwrap());
    let ctx = FormalLaxContext::new(1, 0, 1).unwrap();
    assert!(matches!(ctx.generator_table(&r, &r), Err(Error::NotClosed(_))));
    r.set(0, 0, 0, 0, parse_scalar("λ*μ").unwrap());
    assert!(matches!(ctx.generator_table(&r, &r), Err(Error::NotClosed(_))));
}
