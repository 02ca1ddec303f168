mod common;

use common::{el, show_t};
use ncnet::algebra::{word, Element, Gen, Word};
use ncnet::bracket::*;
use ncnet::network::*;
use ncnet::scalar::Scalar;
use proptest::prelude::*;

fn std_table(net: &Network) -> GeneratorTable {
    GeneratorTable::from_network(net, &BracketParams::standard()).unwrap()
}

fn alt_params() -> BracketParams {
    BracketParams::from_json(r#"{"w12":"1/4","w13":"1/2","w23":"1/4","b12":"-1","b13":"1/4","b23":"-1/4"}"#).unwrap()
}

#[test]
fn local_rules() {
    let w = gamma_white();
    let p = BracketParams::from_json(r#"{"w12":"2","w13":"3","w23":"5","b12":"7","b13":"11","b23":"13"}"#).unwrap();
    let t = generator_bracket(&w, &p, "x1", "x2").unwrap();
    let (x1, x2, x3) = (w.gen_of("x1").unwrap(), w.gen_of("x2").unwrap(), w.gen_of("x3").unwrap());
    assert_eq!(t.get(&(word(&[x1]), word(&[x2]))), Some(&Scalar::int(2)));
    let t = generator_bracket(&w, &p, "x3", "x2").unwrap();
    assert_eq!(t.get(&(Word::new(), word(&[x3, x2]))), Some(&Scalar::int(-5)));

    let b = gamma_black();
    let (y2, y3) = (b.gen_of("y2").unwrap(), b.gen_of("y3").unwrap());
    let t = generator_bracket(&b, &p, "y2", "y3").unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.get(&(Word::new(), word(&[y2, y3]))), Some(&Scalar::int(13)));
    assert!(generator_bracket(&b, &p, "y3", "y3").unwrap().is_empty());
    assert!(generator_bracket(&b, &p, "y3", "nope").is_err());
}

#[test]
fn gamma_white_table() {
    let net = gamma_white();
    let b = boundary_matrix(&net).unwrap();
    let t = matrix_db(&std_table(&net), &b, &b).unwrap();
    assert!(t.get((0, 0, 0, 0)).is_zero());
    assert!(t.get((0, 1, 0, 1)).is_zero());
    assert_eq!(show_t(&net, t.get((0, 0, 0, 1))), "-1/2 * x3.x2 (x) x3.x1");
    assert_eq!(show_t(&net, t.get((0, 1, 0, 0))), "1/2 * x3.x1 (x) x3.x2");
}

#[test]
fn gamma_black_table() {
    let net = gamma_black();
    let b = boundary_matrix(&net).unwrap();
    let t = matrix_db(&std_table(&net), &b, &b).unwrap();
    assert_eq!(show_t(&net, t.get((0, 0, 1, 0))), "-1/2 * y2.y3 (x) y1.y3");
    assert_eq!(show_t(&net, t.get((1, 0, 0, 0))), "1/2 * y1.y3 (x) y2.y3");
    assert!(t.get((0, 0, 0, 0)).is_zero());
    assert!(t.get((1, 0, 1, 0)).is_zero());
}

#[test]
fn fig1_brackets() {
    let net = fig1();
    let table = std_table(&net);
    let b = boundary_matrix(&net).unwrap();
    let (b11, b21, b22) = (b.get(0, 0), b.get(1, 0), b.get(1, 1));
    assert_eq!(show_t(&net, &db(&table, b11, b21)), "-1/2 * a.d (x) d");
    assert_eq!(show_t(&net, &db(&table, b11, b22)), "-1 * a.d (x) d.c");
    let (w, bb) = (Scalar::ratio(1, 2), Scalar::ratio(-1, 2));
    assert_eq!(db_direct(&net, b11, b21, &w, &bb).unwrap(), db(&table, b11, b21));
    assert_eq!(db_direct(&net, b11, b22, &w, &bb).unwrap(), db(&table, b11, b22));
}

#[test]
fn direct_formula_examples() {
    let net = gamma_white();
    let (w, b) = (Scalar::ratio(1, 2), Scalar::ratio(-1, 2));
    let f = el(&net, "1 * x3.x2", "p1", "q1");
    let g = el(&net, "1 * x3.x1", "p1", "q2");
    assert_eq!(show_t(&net, &db_direct(&net, &f, &g, &w, &b).unwrap()), "-1/2 * x3.x2 (x) x3.x1");

    let net = gamma_black();
    let f = el(&net, "1 * y1.y3", "p1", "q1");
    let g = el(&net, "1 * y2.y3", "p2", "q1");
    assert_eq!(show_t(&net, &db_direct(&net, &f, &g, &w, &b).unwrap()), "-1/2 * y2.y3 (x) y1.y3");

    let net = fig1();
    let y = net.gen_of("d").unwrap();
    assert!(db_direct_words(&net, &[y], &[y], &w, &b).is_err());
    let d = el(&net, "1 * d", "b1", "b4");
    let id = Element::identity(d.src());
    assert!(db(&std_table(&net), &d, &id).is_zero());
}

/// Every boundary path of a network, as raw edge words.
fn all_paths(net: &Network) -> Vec<Vec<Gen>> {
    boundary_paths(net).unwrap().into_iter().flat_map(|m| m.into_values().flatten()).map(|(w, _)| w.to_vec()).collect()
}

fn engines_agree(net: &Network, params: &BracketParams) {
    let table = GeneratorTable::from_network(net, params).unwrap();
    let (w, b) = (params.w(), params.b());
    let paths = all_paths(net);
    for f in &paths {
        for g in &paths {
            let lhs = db_words(&table, f, g);
            let rhs = db_direct_words(net, f, g, &w, &b).unwrap();
            assert_eq!(lhs, rhs, "paths {f:?} {g:?}");
        }
    }
}

#[test]
fn engine_equivalence_on_fixtures() {
    for net in [gamma_white(), gamma_black(), gamma_black_cut(), fig1(), torus_fixture()] {
        engines_agree(&net, &BracketParams::standard());
        engines_agree(&net, &alt_params());
    }
}

#[test]
fn disjoint_paths_have_zero_bracket() {
    let net = {
        // two parallel white pieces side by side never meet
        let mut b = LayeredBuilder::new(Surface::Disk, 2, "");
        b.white(0);
        b.white(2);
        b.finish()
    };
    let paths = all_paths(&net);
    let (w, bb) = (Scalar::ratio(1, 2), Scalar::ratio(-1, 2));
    let top = &paths[0];
    let bottom = paths.last().unwrap();
    assert!(db_direct_words(&net, top, bottom, &w, &bb).unwrap().is_empty());
    assert!(db_words(&std_table(&net), top, bottom).is_empty());
}

#[test]
fn pieces_glued_in_series_do_not_interact() {
    let (a, b) = (gamma_black(), gamma_white());
    let g = glue(&a, &b).unwrap();
    let table = std_table(&g);
    // boundary matrices of each half, written in the glued network's generators
    let y3 = g.gen_of("y3").unwrap();
    let x3 = g.gen_of("x3").unwrap();
    let x1 = g.gen_of("x1").unwrap();
    let o = ncnet::algebra::ObjectId(0);
    let left = Element::monomial(o, o, word(&[g.gen_of("y1").unwrap(), y3]), Scalar::one());
    let right = Element::monomial(o, o, word(&[x3, x1]), Scalar::one());
    assert!(db(&table, &left, &right).is_zero());
}

#[test]
fn matrix_leibniz_against_expanded_entries() {
    let ctx = glue_to_torus(&torus_fixture()).unwrap();
    let table = std_table(&ctx.net);
    let x = &ctx.b;
    let y = x.substitute(ncnet::scalar::Var::Lambda, ncnet::scalar::Var::Mu);
    for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
        let fast = matrix_power_db(&table, x, k, l).unwrap();
        let xk = x.pow(k).unwrap();
        let yl = y.pow(l).unwrap();
        let slow = matrix_db(&table, &xk, &yl).unwrap();
        assert!(fast.differences(&slow).unwrap().is_empty(), "k={k} l={l}");
    }
    let id = ncnet::algebra::Matrix::identity(x.rows().to_vec());
    assert!(matrix_power_db(&table, &id, 2, 2).unwrap().is_zero());
}

#[test]
fn h0_descends_to_cyclic_classes() {
    let ctx = glue_to_torus(&torus_fixture()).unwrap();
    let table = std_table(&ctx.net);
    let b = &ctx.b;
    let b2 = b.mul(b).unwrap();
    // ab and ba for the loop (B^2)_11 = Σ b1j bj1 split at the seam
    let h = b2.get(0, 0);
    let rotated = {
        let mut e = Element::zero(h.src(), h.dst());
        for (w, c) in h.terms() {
            let mut r: Word = w[w.len() / 2..].iter().copied().collect();
            r.extend_from_slice(&w[..w.len() / 2]);
            e.add_term(r, c.clone());
        }
        e
    };
    for i in 0..2 {
        for j in 0..2 {
            let g = b.get(i, j);
            let lhs = h0_bracket(&table, h, g).unwrap();
            let rhs = h0_bracket(&table, &rotated, g).unwrap();
            // rotating by half of a two-letter-block word is a rotation of the loop
            assert_eq!(ncnet::algebra::cyclic_reduce(h).unwrap(), ncnet::algebra::cyclic_reduce(&rotated).unwrap());
            assert_eq!(lhs, rhs);
            let id = Element::identity(g.src());
            assert!(h0_bracket(&table, h, &id).unwrap().is_zero());
        }
    }
    let path = Element::monomial(ncnet::algebra::ObjectId(0), ncnet::algebra::ObjectId(1), word(&[Gen(0)]), Scalar::one());
    assert!(h0_bracket(&table, &path, b.get(0, 0)).is_err());
}

fn word_strategy(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..n as u32, 1..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn skew_symmetry_on_fig1_words(a in word_strategy(8), b in word_strategy(8)) {
        let net = fig1();
        let table = std_table(&net);
        let a: Vec<Gen> = a.into_iter().map(Gen).collect();
        let b: Vec<Gen> = b.into_iter().map(Gen).collect();
        let lhs = db_words(&table, &a, &b);
        let rhs = neg_tau(&db_words(&table, &b, &a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn skew_symmetry_on_torus_words(a in word_strategy(7), b in word_strategy(7)) {
        let net = torus_fixture();
        let table = GeneratorTable::from_network(&net, &alt_params()).unwrap();
        let a: Vec<Gen> = a.into_iter().map(Gen).collect();
        let b: Vec<Gen> = b.into_iter().map(Gen).collect();
        prop_assert_eq!(db_words(&table, &a, &b), neg_tau(&db_words(&table, &b, &a)));
    }

    #[test]
    fn leibniz_in_second_argument(a in word_strategy(8), b in word_strategy(8), c in word_strategy(8)) {
        // ⟪a, bc⟫ = (b ⊗ 1)⟪a, c⟫ + ⟪a, b⟫(1 ⊗ c)
        let net = fig1();
        let table = std_table(&net);
        let g = |v: Vec<u32>| -> Vec<Gen> { v.into_iter().map(Gen).collect() };
        let (a, b, c) = (g(a), g(b), g(c));
        let bc: Vec<Gen> = b.iter().chain(&c).copied().collect();
        let lhs = db_words(&table, &a, &bc);
        let mut rhs = WordTensor::new();
        for ((u, v), k) in db_words(&table, &a, &c) {
            let mut u2: Word = b.iter().copied().collect();
            u2.extend_from_slice(&u);
            let e = rhs.entry((u2, v)).or_insert_with(Scalar::zero);
            *e = e.add_ref(&k);
        }
        for ((u, v), k) in db_words(&table, &a, &b) {
            let mut v2 = v.clone();
            v2.extend_from_slice(&c);
            let e = rhs.entry((u, v2)).or_insert_with(Scalar::zero);
            *e = e.add_ref(&k);
        }
        rhs.retain(|_, k| !k.is_zero());
        prop_assert_eq!(lhs, rhs);
    }
}
