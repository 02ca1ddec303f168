//! Text form of elements, tensors and cyclic elements.
//!
//! `term = coeff " * " word`, words are labels joined by `.` or `1_<object>`,
//! tensor slots are separated by ` (x) ` and cyclic words carry a `cyc:` prefix.
//! Identity-labeled edges are dropped before printing, and terms are sorted
//! shortlex on their label sequences.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::algebra::{CyclicElement, Element, Gen, Matrix, ObjectId, TensorElement, TripleTensor, Word};
use crate::error::{Error, Result};
use crate::network::Network;
use crate::scalar::{parse_scalar, Scalar};

/// Names for generators and objects. `None` marks an identity-labeled generator.
pub trait Labels {
    fn gen_label(&self, g: Gen) -> Option<String>;
    fn object_label(&self, o: ObjectId) -> String;
}

impl Labels for Network {
    fn gen_label(&self, g: Gen) -> Option<String> {
        self.label(g).map(str::to_string)
    }

    fn object_label(&self, o: ObjectId) -> String {
        self.boundary.get(o.0 as usize).map(|b| b.id.clone()).unwrap_or_else(|| format!("o{}", o.0))
    }
}

/// Explicit name tables, for contexts without a network.
#[derive(Clone, Debug, Default)]
pub struct NameTable {
    pub gens: Vec<String>,
    pub objects: Vec<String>,
}

impl Labels for NameTable {
    fn gen_label(&self, g: Gen) -> Option<String> {
        Some(self.gens.get(g.0 as usize).cloned().unwrap_or_else(|| format!("g{}", g.0)))
    }

    fn object_label(&self, o: ObjectId) -> String {
        self.objects.get(o.0 as usize).cloned().unwrap_or_else(|| format!("o{}", o.0))
    }
}

type Labeled = Vec<String>;

fn project(w: &[Gen], labels: &dyn Labels) -> Labeled {
    w.iter().filter_map(|g| labels.gen_label(*g)).collect()
}

fn shortlex(a: &Labeled, b: &Labeled) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn word_text(w: &Labeled, obj: ObjectId, labels: &dyn Labels) -> String {
    if w.is_empty() {
        format!("1_{}", labels.object_label(obj))
    } else {
        w.join(".")
    }
}

fn join_terms(terms: Vec<(Scalar, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.into_iter().map(|(c, w)| format!("{c} * {w}")).collect::<Vec<_>>().join(" + ")
}

fn merge<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: &Scalar) {
    let e = map.entry(k).or_default();
    *e = e.add_ref(c);
}

/// Label-projected form of an element: label sequence to coefficient.
pub fn projected(x: &Element, labels: &dyn Labels) -> BTreeMap<Labeled, Scalar> {
    let mut m = BTreeMap::new();
    for (w, c) in x.terms() {
        merge(&mut m, project(w, labels), c);
    }
    m.retain(|_, c| !c.is_zero());
    m
}

pub fn serialize_element(x: &Element, labels: &dyn Labels) -> String {
    let mut terms: Vec<(Labeled, Scalar)> = projected(x, labels).into_iter().collect();
    terms.sort_by(|a, b| shortlex(&a.0, &b.0));
    join_terms(terms.into_iter().map(|(w, c)| (c, word_text(&w, x.src(), labels))).collect())
}

/// Paper-style matrix `(d, dc; ad, b+adc)`: rows split by `;`, unit coefficients dropped,
/// labels run together when all are one character and joined by `.` otherwise.
pub fn serialize_matrix_compact(m: &Matrix, labels: &dyn Labels) -> String {
    let entries: Vec<Vec<Vec<(Labeled, Scalar)>>> = (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| {
                    let mut t: Vec<_> = projected(m.get(i, j), labels).into_iter().collect();
                    t.sort_by(|a, b| shortlex(&a.0, &b.0));
                    t
                })
                .collect()
        })
        .collect();
    let short = entries.iter().flatten().flatten().flat_map(|(w, _)| w).all(|l| l.chars().count() == 1);
    let sep = if short { "" } else { "." };
    let entry = |t: &[(Labeled, Scalar)]| -> String {
        if t.is_empty() {
            return "0".into();
        }
        t.iter()
            .map(|(w, c)| {
                let w = if w.is_empty() { "1".to_string() } else { w.join(sep) };
                if *c == Scalar::one() {
                    w
                } else if *c == -&Scalar::one() {
                    format!("-{w}")
                } else {
                    format!("{c}*{w}")
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    };
    let rows: Vec<String> =
        entries.iter().map(|r| r.iter().map(|t| entry(t)).collect::<Vec<_>>().join(", ")).collect();
    format!("({})", rows.join("; "))
}

pub fn serialize_tensor(x: &TensorElement, labels: &dyn Labels) -> String {
    let mut m: BTreeMap<(Labeled, Labeled), Scalar> = BTreeMap::new();
    for ((a, b), c) in x.terms() {
        merge(&mut m, (project(a, labels), project(b, labels)), c);
    }
    let mut terms: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_by(|x, y| shortlex(&x.0 .0, &y.0 .0).then_with(|| shortlex(&x.0 .1, &y.0 .1)));
    join_terms(
        terms
            .into_iter()
            .map(|((a, b), c)| {
                let w = format!(
                    "{} (x) {}",
                    word_text(&a, x.slot1().0, labels),
                    word_text(&b, x.slot2().0, labels)
                );
                (c, w)
            })
            .collect(),
    )
}

fn min_rotation(w: &Labeled) -> Labeled {
    if w.is_empty() {
        return w.clone();
    }
    let k = crate::algebra::least_rotation(w);
    let mut r = w[k..].to_vec();
    r.extend_from_slice(&w[..k]);
    r
}

pub fn serialize_cyclic(x: &CyclicElement, labels: &dyn Labels) -> String {
    let mut m: BTreeMap<(Labeled, String), Scalar> = BTreeMap::new();
    for (w, c) in x.terms() {
        let p = min_rotation(&project(w.letters(), labels));
        let base = match (p.is_empty(), w.empty_base()) {
            (true, Some(o)) => labels.object_label(o),
            _ => String::new(),
        };
        merge(&mut m, (p, base), c);
    }
    let mut terms: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_by(|x, y| shortlex(&x.0 .0, &y.0 .0).then_with(|| x.0 .1.cmp(&y.0 .1)));
    join_terms(
        terms
            .into_iter()
            .map(|((w, base), c)| {
                let text = if w.is_empty() {
                    if base.is_empty() { "cyc:1".to_string() } else { format!("cyc:1_{base}") }
                } else {
                    format!("cyc:{}", w.join("."))
                };
                (c, text)
            })
            .collect(),
    )
}

fn split_terms(s: &str) -> Vec<&str> {
    let s = s.trim();
    if s == "0" {
        return Vec::new();
    }
    s.split(" + ").collect()
}

fn parse_term(t: &str) -> Result<(Scalar, &str)> {
    let (c, w) = t
        .split_once(" * ")
        .ok_or_else(|| Error::Parse(format!("term {t:?} lacks ' * '")))?;
    Ok((parse_scalar(c)?, w.trim()))
}

fn parse_word(w: &str, resolve: &dyn Fn(&str) -> Option<Gen>) -> Result<Word> {
    if w.starts_with("1_") {
        return Ok(Word::new());
    }
    w.split('.')
        .map(|l| resolve(l).ok_or_else(|| Error::Parse(format!("unknown generator {l:?}"))))
        .collect()
}

/// Parses an element with known endpoints; `resolve` maps labels to generators.
pub fn parse_element(
    s: &str,
    src: ObjectId,
    dst: ObjectId,
    resolve: &dyn Fn(&str) -> Option<Gen>,
) -> Result<Element> {
    let mut e = Element::zero(src, dst);
    for t in split_terms(s) {
        let (c, w) = parse_term(t)?;
        e.add_term(parse_word(w, resolve)?, c);
    }
    Ok(e)
}

/// Parses a tensor; `⊗` is accepted in place of ` (x) `.
pub fn parse_tensor(
    s: &str,
    s1: (ObjectId, ObjectId),
    s2: (ObjectId, ObjectId),
    resolve: &dyn Fn(&str) -> Option<Gen>,
) -> Result<TensorElement> {
    let norm = s.replace('⊗', "(x)").replace(" (x) ", "(x)").replace("(x)", " (x) ");
    let mut x = TensorElement::zero(s1, s2);
    for t in split_terms(&norm) {
        let (c, w) = parse_term(t)?;
        let (a, b) = w
            .split_once(" (x) ")
            .ok_or_else(|| Error::Parse(format!("tensor term {t:?} lacks a separator")))?;
        x.add_term(parse_word(a.trim(), resolve)?, parse_word(b.trim(), resolve)?, c);
    }
    Ok(x)
}

/// Triple tensors; slots are separated by ` (x) ` and empty words print as `1`.
pub fn serialize_triple(x: &TripleTensor, labels: &dyn Labels) -> String {
    let mut m: BTreeMap<(Labeled, Labeled, Labeled), Scalar> = BTreeMap::new();
    for ((a, b, c), k) in x.terms() {
        merge(&mut m, (project(a, labels), project(b, labels), project(c, labels)), k);
    }
    let mut terms: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_by(|x, y| {
        shortlex(&x.0 .0, &y.0 .0)
            .then_with(|| shortlex(&x.0 .1, &y.0 .1))
            .then_with(|| shortlex(&x.0 .2, &y.0 .2))
    });
    let text = |w: &Labeled| if w.is_empty() { "1".to_string() } else { w.join(".") };
    join_terms(
        terms
            .into_iter()
            .map(|((a, b, c), k)| (k, format!("{} (x) {} (x) {}", text(&a), text(&b), text(&c))))
            .collect(),
    )
}
