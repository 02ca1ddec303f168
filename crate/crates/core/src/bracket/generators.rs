//! Brackets of single generators, from the local vertex rules or supplied directly.

use std::collections::{BTreeMap, HashMap};

use super::params::BracketParams;
use crate::algebra::{word, Gen, Word};
use crate::error::Result;
use crate::network::{Color, Network};
use crate::scalar::Scalar;

/// Linear combination of word pairs without declared endpoints.
pub type WordTensor = BTreeMap<(Word, Word), Scalar>;

pub(crate) fn add_wt(t: &mut WordTensor, a: Word, b: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.entry((a, b)) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add_ref(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// `-τ(t)`.
pub fn neg_tau(t: &WordTensor) -> WordTensor {
    t.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.neg_ref())).collect()
}

/// Double brackets of generator pairs; absent pairs bracket to zero.
#[derive(Clone, Debug, Default)]
pub struct GeneratorTable {
    map: HashMap<(Gen, Gen), WordTensor>,
}

impl GeneratorTable {
    pub fn new() -> GeneratorTable {
        GeneratorTable::default()
    }

    pub fn get(&self, a: Gen, b: Gen) -> Option<&WordTensor> {
        self.map.get(&(a, b))
    }

    /// Adds `t` to the bracket of `(a, b)`.
    pub fn add(&mut self, a: Gen, b: Gen, t: &WordTensor) {
        let e = self.map.entry((a, b)).or_default();
        for ((u, v), c) in t {
            add_wt(e, u.clone(), v.clone(), c.clone());
        }
        if e.is_empty() {
            self.map.remove(&(a, b));
        }
    }

    /// Adds `t` to `(a, b)` and `-τ t` to `(b, a)`.
    pub fn add_skew(&mut self, a: Gen, b: Gen, t: &WordTensor) {
        self.add(a, b, t);
        self.add(b, a, &neg_tau(t));
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(Gen, Gen), &WordTensor)> {
        self.map.iter()
    }

    /// Local rules summed over every shared trivalent vertex; through points give nothing.
    pub fn from_network(net: &Network, params: &BracketParams) -> Result<GeneratorTable> {
        let mut t = GeneratorTable::new();
        for v in &net.internal {
            if v.color == Color::Through {
                continue;
            }
            let e: Vec<Gen> = v.ccw.iter().map(|id| net.gen_of(id)).collect::<Result<_>>()?;
            let (e1, e2, e3) = (e[0], e[1], e[2]);
            let one = Word::new;
            let rules: [(Gen, Gen, Word, Word, &Scalar); 3] = match v.color {
                Color::White => [
                    (e1, e2, word(&[e1]), word(&[e2]), &params.w12),
                    (e1, e3, word(&[e3, e1]), one(), &params.w13),
                    (e2, e3, word(&[e3, e2]), one(), &params.w23),
                ],
                _ => [
                    (e1, e2, word(&[e2]), word(&[e1]), &params.b12),
                    (e1, e3, one(), word(&[e1, e3]), &params.b13),
                    (e2, e3, one(), word(&[e2, e3]), &params.b23),
                ],
            };
            for (f, g, l, r, c) in rules {
                if c.is_zero() {
                    continue;
                }
                let mut wt = WordTensor::new();
                wt.insert((l, r), c.clone());
                t.add_skew(f, g, &wt);
            }
        }
        Ok(t)
    }
}

/// The bracket of two edges of a network.
pub fn generator_bracket(net: &Network, params: &BracketParams, e: &str, f: &str) -> Result<WordTensor> {
    let (a, b) = (net.gen_of(e)?, net.gen_of(f)?);
    let t = GeneratorTable::from_network(net, params)?;
    Ok(t.get(a, b).cloned().unwrap_or_default())
}
