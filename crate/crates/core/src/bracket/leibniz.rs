//! The double bracket of arbitrary elements by the double Leibniz rule:
//! `⟪a1..am, b1..bn⟫ = Σ (b1..b(j-1) ⊗ a1..a(i-1)) ⟪ai, bj⟫ (a(i+1)..am ⊗ b(j+1)..bn)`.

use super::generators::{add_wt, GeneratorTable, WordTensor};
use crate::algebra::{Element, Gen, TensorElement, Word};
use crate::scalar::Scalar;

/// Adds `k · ⟪a, b⟫` to `out`, dropping terms longer than `max_len`.
pub fn db_words_into(
    table: &GeneratorTable,
    a: &[Gen],
    b: &[Gen],
    k: &Scalar,
    max_len: Option<usize>,
    out: &mut WordTensor,
) {
    // Every generator bracket shortens the total length by at most two.
    if let Some(m) = max_len {
        if a.len() + b.len() > m + 2 {
            return;
        }
    }
    for i in 0..a.len() {
        for j in 0..b.len() {
            let Some(t) = table.get(a[i], b[j]) else { continue };
            for ((u, v), c) in t {
                let len = j + u.len() + (a.len() - i - 1) + i + v.len() + (b.len() - j - 1);
                if max_len.is_some_and(|m| len > m) {
                    continue;
                }
                let mut left = Word::with_capacity(j + u.len() + a.len() - i);
                left.extend_from_slice(&b[..j]);
                left.extend_from_slice(u);
                left.extend_from_slice(&a[i + 1..]);
                let mut right = Word::with_capacity(i + v.len() + b.len() - j);
                right.extend_from_slice(&a[..i]);
                right.extend_from_slice(v);
                right.extend_from_slice(&b[j + 1..]);
                add_wt(out, left, right, c.mul_ref(k));
            }
        }
    }
}

pub fn db_words(table: &GeneratorTable, a: &[Gen], b: &[Gen]) -> WordTensor {
    let mut out = WordTensor::new();
    db_words_into(table, a, b, &Scalar::one(), None, &mut out);
    out
}

/// `⟪f, g⟫` with slots typed `Hom(C,B) ⊗ Hom(A,D)` for `f: A→B`, `g: C→D`.
pub fn db(table: &GeneratorTable, f: &Element, g: &Element) -> TensorElement {
    db_truncated(table, f, g, None)
}

/// [`db`] keeping only terms whose two words have total length at most `max_len`.
pub fn db_truncated(table: &GeneratorTable, f: &Element, g: &Element, max_len: Option<usize>) -> TensorElement {
    let mut out = WordTensor::new();
    for (a, x) in f.terms() {
        for (b, y) in g.terms() {
            db_words_into(table, a, b, &x.mul_ref(y), max_len, &mut out);
        }
    }
    wrap(out, (g.src(), f.dst()), (f.src(), g.dst()))
}

pub(crate) fn wrap(
    t: WordTensor,
    s1: (crate::algebra::ObjectId, crate::algebra::ObjectId),
    s2: (crate::algebra::ObjectId, crate::algebra::ObjectId),
) -> TensorElement {
    let mut x = TensorElement::zero(s1, s2);
    for ((a, b), c) in t {
        x.add_term(a, b, c);
    }
    x
}
