//! The merge/split formula for boundary paths:
//! `⟪f, g⟫ = Σ_V α_V(f, g) (g'_V f''_V ⊗ f'_V g''_V)` over vertices where the paths meet.

use std::collections::HashMap;

use super::generators::{add_wt, WordTensor};
use super::leibniz::wrap;
use crate::algebra::{concat_words, Element, Gen, TensorElement};
use crate::error::{Error, Result};
use crate::network::{Color, Network, Role};
use crate::scalar::Scalar;

/// How a path passes a vertex: incoming edge, outgoing edge, split position.
#[derive(Clone, Copy)]
struct Pass {
    inc: Gen,
    out: Gen,
    at: usize,
}

fn passes(net: &Network, p: &[Gen]) -> Result<HashMap<String, Pass>> {
    let bad = |m: &str| Error::Argument(format!("not a boundary path: {m}"));
    let first = net.edges.get(p.first().ok_or_else(|| bad("empty"))?.0 as usize).ok_or_else(|| bad("unknown edge"))?;
    let last = net.edge(*p.last().expect("nonempty"));
    let role = |id: &str| net.boundary.iter().find(|b| b.id == id).map(|b| b.role);
    if role(&first.tail) != Some(Role::Source) {
        return Err(bad(&format!("{} does not start at a source", first.id)));
    }
    if role(&last.head) != Some(Role::Sink) {
        return Err(bad(&format!("{} does not end at a sink", last.id)));
    }
    let mut out = HashMap::new();
    for k in 0..p.len() - 1 {
        let (e, f) = (net.edge(p[k]), net.edge(p[k + 1]));
        if e.head != f.tail {
            return Err(bad(&format!("{} does not continue into {}", e.id, f.id)));
        }
        out.insert(e.head.clone(), Pass { inc: p[k], out: p[k + 1], at: k + 1 });
    }
    Ok(out)
}

/// Sign +1 when `f`'s edge comes before `g`'s in the vertex's ccw order, so that
/// `α = +B` when `f` enters a merge through `y1` and `α = +W` when it leaves a split through `x1`.
fn slot_sign(ccw: &[String], net: &Network, f: Gen, g: Gen) -> i64 {
    let pos = |x: Gen| ccw.iter().position(|id| *id == net.edge(x).id);
    if pos(f) < pos(g) {
        1
    } else {
        -1
    }
}

/// The merge/split formula for two boundary-to-boundary paths, given `W` and `B`.
///
/// Orientation-respecting paths only merge at black vertices and split at white
/// ones; the white-merge and black-split rows are kept for completeness and are
/// unreachable for such paths.
pub fn db_direct_words(net: &Network, f: &[Gen], g: &[Gen], w: &Scalar, b: &Scalar) -> Result<WordTensor> {
    let (pf, pg) = (passes(net, f)?, passes(net, g)?);
    let mut out = WordTensor::new();
    for v in &net.internal {
        let (Some(x), Some(y)) = (pf.get(&v.id), pg.get(&v.id)) else { continue };
        let alpha = match (x.inc == y.inc, x.out == y.out, v.color) {
            (_, _, Color::Through) | (true, true, _) => continue,
            // merge
            (false, true, Color::Black) => b.mul_ref(&Scalar::int(slot_sign(&v.ccw, net, x.inc, y.inc))),
            (false, true, Color::White) => w.mul_ref(&Scalar::int(slot_sign(&v.ccw, net, x.inc, y.inc))),
            // split
            (true, false, Color::White) => w.mul_ref(&Scalar::int(slot_sign(&v.ccw, net, x.out, y.out))),
            (true, false, Color::Black) => b.mul_ref(&Scalar::int(slot_sign(&v.ccw, net, x.out, y.out))),
            (false, false, _) => {
                return Err(Error::Inconsistent(format!("paths cross at {} without sharing an edge", v.id)))
            }
        };
        let (f1, f2) = f.split_at(x.at);
        let (g1, g2) = g.split_at(y.at);
        add_wt(&mut out, concat_words(g1, f2), concat_words(f1, g2), alpha);
    }
    Ok(out)
}

/// [`db_direct_words`] extended bilinearly to elements made of boundary paths.
pub fn db_direct(net: &Network, f: &Element, g: &Element, w: &Scalar, b: &Scalar) -> Result<TensorElement> {
    let mut out = WordTensor::new();
    for (a, x) in f.terms() {
        for (c, y) in g.terms() {
            for ((l, r), k) in db_direct_words(net, a, c, w, b)? {
                add_wt(&mut out, l, r, k.mul_ref(&x.mul_ref(y)));
            }
        }
    }
    Ok(wrap(out, (g.src(), f.dst()), (f.src(), g.dst())))
}
