use ncnet::integrable::*;
use ncnet::io::serialize_cyclic;
use ncnet::network::*;
use ncnet::rmatrix::{trig_rho, RhoMatrix};
use ncnet::scalar::{lambda, mu, Scalar};

fn fixture() -> TorusContext {
    glue_to_torus(&torus_fixture()).unwrap()
}

fn loop_edge() -> TorusContext {
    let mut net = identity_wires(Surface::Cylinder, 1, "");
    net.edges[0].label = Some("e".into());
    net.edges[0].cut = 1;
    glue_to_torus(&net).unwrap()
}

#[test]
fn traces() {
    let ctx = loop_edge();
    assert_eq!(serialize_cyclic(&trace_power(&ctx, 3).unwrap(), &ctx.net), "λ^3 * cyc:e.e.e");

    let ctx = fixture();
    let t0 = trace_power(&ctx, 0).unwrap();
    assert_eq!(t0.len(), 2);
    assert_eq!(t0, identity_classes(&ctx));
    // Two diagonal paths: p1 -y2(cut)-y3-x3-x2-> q1 and p2 -y1-y3-x3-x1-> q2.
    assert_eq!(
        serialize_cyclic(&trace_power(&ctx, 1).unwrap(), &ctx.net),
        "1 * cyc:x1.y1.y3.x3 + λ * cyc:x2.y2.y3.x3"
    );
}

#[test]
fn hamiltonian_set() {
    let ctx = fixture();
    let h = hamiltonians(&ctx, 3).unwrap();
    assert_eq!(h.keys().filter(|(k, _)| *k == 1).map(|(_, j)| *j).collect::<Vec<_>>(), vec![0, 1]);
    assert_eq!(h.keys().filter(|(k, _)| *k == 3).map(|(_, j)| *j).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    for ((k, j), x) in &h {
        assert!(x.terms().all(|(_, c)| c.is_constant()), "H_{k}{j} still depends on λ");
    }
}

#[test]
fn lax_matrix() {
    let ctx = loop_edge();
    let m = lax_m(&ctx, &trig_rho(1).unwrap(), 2).unwrap();
    let diag = &(&Scalar::int(2) * &Scalar::ratio(1, 2)) * &(&(&mu() + &lambda()) / &(&mu() - &lambda()));
    assert_eq!(*m.get(0, 0), ctx.b.pow(2).unwrap().get(0, 0).scale(&diag));
    assert!(lax_m(&ctx, &trig_rho(1).unwrap(), 0).is_err());
    assert!(lax_m(&fixture(), &trig_rho(1).unwrap(), 1).is_err());
}

#[test]
fn lax_equation() {
    let ctx = fixture();
    for k in 1..=3 {
        let d = verify_lax(&ctx, k).unwrap();
        assert!(d.is_empty(), "k={k}: {:?}", d.first());
    }
    // No internal vertices: both sides vanish.
    assert!(verify_lax(&loop_edge(), 2).unwrap().is_empty());
}

#[test]
fn lax_bracket_is_not_trivial() {
    let ctx = fixture();
    let table = torus_table(&ctx).unwrap();
    let (lhs, _) = lax_sides(&ctx, &table, &trig_rho(2).unwrap(), 2).unwrap();
    assert!(!lhs.is_zero());
}

#[test]
fn corrupted_rho_is_caught() {
    let ctx = fixture();
    let good = trig_rho(2).unwrap();
    let bad = RhoMatrix::from_fn(2, |a, b| if a == 0 && b == 1 { -good.get(a, b) } else { good.get(a, b).clone() });
    let d = verify_lax_with(&ctx, &bad, 1).unwrap();
    assert!(!d.is_empty());
    assert!(d[0].location.starts_with("lax k=1 entry ("));
}

#[test]
fn involutivity() {
    let ctx = fixture();
    let mut nonvacuous = false;
    for k in 1..=3 {
        for l in 1..=3 {
            let r = verify_involutivity(&ctx, k, l).unwrap();
            assert!(r.defects.is_empty(), "({k},{l}): {:?}", r.defects.first());
            nonvacuous |= r.nonvacuous;
        }
    }
    assert!(nonvacuous);
    let r = verify_involutivity(&ctx, 0, 2).unwrap();
    assert!(r.defects.is_empty() && !r.nonvacuous);
}

#[test]
fn hamiltonians_commute_coefficientwise() {
    let ctx = fixture();
    let table = torus_table(&ctx).unwrap();
    let h = hamiltonians(&ctx, 2).unwrap();
    for ((k1, j1), x) in h.iter().filter(|((k, _), _)| *k == 2) {
        for ((k2, j2), y) in h.iter().filter(|((k, _), _)| *k == 1) {
            let b = hamiltonian_bracket(&table, x, y).unwrap();
            assert!(b.is_zero(), "⟨H_{k1}{j1}, H_{k2}{j2}⟩ = {}", serialize_cyclic(&b, &ctx.net));
        }
    }
}
