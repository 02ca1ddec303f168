use std::collections::BTreeMap;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Var};

/// An edge generator, indexed within its network or context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(pub u32);

/// A marked point: a boundary vertex or an identified seam point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectId(pub u32);

/// A sequence of generators read left to right; the empty word is an identity.
pub type Word = SmallVec<[Gen; 8]>;

pub fn word(gens: &[Gen]) -> Word {
    SmallVec::from_slice(gens)
}

pub fn concat_words(a: &[Gen], b: &[Gen]) -> Word {
    let mut w = Word::with_capacity(a.len() + b.len());
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    w
}

pub(crate) fn add_into<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

/// A finite linear combination of words sharing one source and one target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    src: ObjectId,
    dst: ObjectId,
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero(src: ObjectId, dst: ObjectId) -> Element {
        Element { src, dst, terms: BTreeMap::new() }
    }

    pub fn identity(obj: ObjectId) -> Element {
        Element::monomial(obj, obj, Word::new(), Scalar::one())
    }

    pub fn monomial(src: ObjectId, dst: ObjectId, w: Word, c: Scalar) -> Element {
        let mut e = Element::zero(src, dst);
        add_into(&mut e.terms, w, c);
        e
    }

    pub fn generator(src: ObjectId, dst: ObjectId, g: Gen) -> Element {
        Element::monomial(src, dst, word(&[g]), Scalar::one())
    }

    pub fn src(&self) -> ObjectId {
        self.src
    }

    pub fn dst(&self) -> ObjectId {
        self.dst
    }

    pub fn is_loop(&self) -> bool {
        self.src == self.dst
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[Gen]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Relabels the endpoints, e.g. when a torus identification is installed.
    pub fn with_endpoints(mut self, src: ObjectId, dst: ObjectId) -> Element {
        self.src = src;
        self.dst = dst;
        self
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        add_into(&mut self.terms, w, c);
    }

    fn check_same(&self, o: &Element) -> Result<()> {
        if (self.src, self.dst) != (o.src, o.dst) && !self.is_zero() && !o.is_zero() {
            return Err(Error::EndpointMismatch(format!(
                "adding Hom({:?},{:?}) to Hom({:?},{:?})",
                o.src, o.dst, self.src, self.dst
            )));
        }
        Ok(())
    }

    /// In-place addition. A zero summand adopts the endpoints of a nonzero one.
    pub fn add_assign(&mut self, o: &Element) -> Result<()> {
        self.check_same(o)?;
        if self.is_zero() {
            self.src = o.src;
            self.dst = o.dst;
        }
        for (w, c) in &o.terms {
            add_into(&mut self.terms, w.clone(), c.clone());
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, o: &Element, k: &Scalar) -> Result<()> {
        self.check_same(o)?;
        if self.is_zero() {
            self.src = o.src;
            self.dst = o.dst;
        }
        if k.is_zero() {
            return Ok(());
        }
        for (w, c) in &o.terms {
            add_into(&mut self.terms, w.clone(), c.mul_ref(k));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Element) -> Result<Element> {
        let mut s = self.clone();
        s.add_assign(o)?;
        Ok(s)
    }

    pub fn try_sub(&self, o: &Element) -> Result<Element> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        let mut e = Element::zero(self.src, self.dst);
        if k.is_zero() {
            return e;
        }
        for (w, c) in &self.terms {
            add_into(&mut e.terms, w.clone(), c.mul_ref(k));
        }
        e
    }

    /// Concatenation `self · o`: first `self`, then `o`.
    pub fn concat(&self, o: &Element) -> Result<Element> {
        self.concat_truncated(o, usize::MAX)
    }

    /// Concatenation dropping words longer than `max_len`.
    pub fn concat_truncated(&self, o: &Element, max_len: usize) -> Result<Element> {
        if self.dst != o.src {
            return Err(Error::EndpointMismatch(format!(
                "cannot compose Hom({:?},{:?}) with Hom({:?},{:?})",
                self.src, self.dst, o.src, o.dst
            )));
        }
        let mut e = Element::zero(self.src, o.dst);
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                if u.len() + v.len() > max_len {
                    continue;
                }
                add_into(&mut e.terms, concat_words(u, v), a.mul_ref(b));
            }
        }
        Ok(e)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        let mut e = Element::zero(self.src, self.dst);
        for (w, c) in &self.terms {
            add_into(&mut e.terms, w.clone(), f(c));
        }
        e
    }

    pub fn substitute(&self, from: Var, to: Var) -> Element {
        if from == to {
            return self.clone();
        }
        self.map_coeffs(|c| c.substitute(from, to))
    }

    pub fn truncate(&self, max_len: usize) -> Element {
        let mut e = self.clone();
        e.terms.retain(|w, _| w.len() <= max_len);
        e
    }

    /// Keeps only words of exactly length `d`.
    pub fn homogeneous(&self, d: usize) -> Element {
        let mut e = self.clone();
        e.terms.retain(|w, _| w.len() == d);
        e
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

/// Linear combination of ordered word pairs with declared slot endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    s1: (ObjectId, ObjectId),
    s2: (ObjectId, ObjectId),
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorElement {
    pub fn zero(s1: (ObjectId, ObjectId), s2: (ObjectId, ObjectId)) -> TensorElement {
        TensorElement { s1, s2, terms: BTreeMap::new() }
    }

    /// `a ⊗ b` expanded bilinearly.
    pub fn pure(a: &Element, b: &Element) -> TensorElement {
        let mut t = TensorElement::zero((a.src, a.dst), (b.src, b.dst));
        for (u, x) in &a.terms {
            for (v, y) in &b.terms {
                add_into(&mut t.terms, (u.clone(), v.clone()), x.mul_ref(y));
            }
        }
        t
    }

    pub fn slot1(&self) -> (ObjectId, ObjectId) {
        self.s1
    }

    pub fn slot2(&self) -> (ObjectId, ObjectId) {
        self.s2
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &[Gen], b: &[Gen]) -> Scalar {
        self.terms.get(&(word(a), word(b))).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Scalar) {
        add_into(&mut self.terms, (a, b), c);
    }

    pub fn add_assign(&mut self, o: &TensorElement) -> Result<()> {
        if (self.s1, self.s2) != (o.s1, o.s2) && !self.is_zero() && !o.is_zero() {
            return Err(Error::EndpointMismatch(format!(
                "adding tensors with slots {:?}⊗{:?} and {:?}⊗{:?}",
                o.s1, o.s2, self.s1, self.s2
            )));
        }
        if self.is_zero() {
            self.s1 = o.s1;
            self.s2 = o.s2;
        }
        for (k, c) in &o.terms {
            add_into(&mut self.terms, k.clone(), c.clone());
        }
        Ok(())
    }

    pub fn try_add(&self, o: &TensorElement) -> Result<TensorElement> {
        let mut s = self.clone();
        s.add_assign(o)?;
        Ok(s)
    }

    pub fn try_sub(&self, o: &TensorElement) -> Result<TensorElement> {
        self.try_add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, k: &Scalar) -> TensorElement {
        let mut t = TensorElement::zero(self.s1, self.s2);
        if k.is_zero() {
            return t;
        }
        for (w, c) in &self.terms {
            add_into(&mut t.terms, w.clone(), c.mul_ref(k));
        }
        t
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&Scalar::int(-1))
    }

    /// The slot swap τ.
    pub fn tau(&self) -> TensorElement {
        let mut t = TensorElement::zero(self.s2, self.s1);
        for ((a, b), c) in &self.terms {
            t.terms.insert((b.clone(), a.clone()), c.clone());
        }
        t
    }

    /// Componentwise product `(f⊗g)(h⊗m) = fh ⊗ gm`.
    pub fn mul(&self, o: &TensorElement) -> Result<TensorElement> {
        if self.s1.1 != o.s1.0 || self.s2.1 != o.s2.0 {
            return Err(Error::EndpointMismatch(format!(
                "componentwise product of {:?}⊗{:?} with {:?}⊗{:?}",
                self.s1, self.s2, o.s1, o.s2
            )));
        }
        let mut t = TensorElement::zero((self.s1.0, o.s1.1), (self.s2.0, o.s2.1));
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                add_into(&mut t.terms, (concat_words(a, c), concat_words(b, d)), x.mul_ref(y));
            }
        }
        Ok(t)
    }

    /// `(u ⊗ v) · self`.
    pub fn sandwich_left(&self, u: &Element, v: &Element) -> Result<TensorElement> {
        TensorElement::pure(u, v).mul(self)
    }

    /// `self · (u ⊗ v)`.
    pub fn sandwich_right(&self, u: &Element, v: &Element) -> Result<TensorElement> {
        self.mul(&TensorElement::pure(u, v))
    }

    /// Multiplication map `a ⊗ b ↦ a·b`.
    pub fn multiply(&self) -> Result<Element> {
        if self.s1.1 != self.s2.0 {
            return Err(Error::EndpointMismatch(format!(
                "cannot multiply slots {:?} and {:?}",
                self.s1, self.s2
            )));
        }
        let mut e = Element::zero(self.s1.0, self.s2.1);
        for ((a, b), c) in &self.terms {
            add_into(&mut e.terms, concat_words(a, b), c.clone());
        }
        Ok(e)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> TensorElement {
        let mut t = TensorElement::zero(self.s1, self.s2);
        for (w, c) in &self.terms {
            add_into(&mut t.terms, w.clone(), f(c));
        }
        t
    }

    pub fn truncate(&self, max_len: usize) -> TensorElement {
        let mut t = self.clone();
        t.terms.retain(|(a, b), _| a.len() + b.len() <= max_len);
        t
    }

    /// Replaces the declared slot endpoints, e.g. for a seam identification.
    pub fn with_slots(mut self, s1: (ObjectId, ObjectId), s2: (ObjectId, ObjectId)) -> TensorElement {
        self.s1 = s1;
        self.s2 = s2;
        self
    }
}

/// Linear combination of word triples, used for triple brackets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TripleTensor {
    terms: BTreeMap<(Word, Word, Word), Scalar>,
}

impl TripleTensor {
    pub fn new() -> TripleTensor {
        TripleTensor::default()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Word, k: Scalar) {
        add_into(&mut self.terms, (a, b, c), k);
    }

    pub fn add_assign(&mut self, o: &TripleTensor) {
        for (k, c) in &o.terms {
            add_into(&mut self.terms, k.clone(), c.clone());
        }
    }

    pub fn scale(&self, k: &Scalar) -> TripleTensor {
        let mut t = TripleTensor::new();
        for (w, c) in &self.terms {
            add_into(&mut t.terms, w.clone(), c.mul_ref(k));
        }
        t
    }

    pub fn sub(&self, o: &TripleTensor) -> TripleTensor {
        let mut t = self.clone();
        t.add_assign(&o.scale(&Scalar::int(-1)));
        t
    }

    /// `a⊗b⊗c ↦ c⊗a⊗b`.
    pub fn sigma123(&self) -> TripleTensor {
        let mut t = TripleTensor::new();
        for ((a, b, c), k) in &self.terms {
            t.terms.insert((c.clone(), a.clone(), b.clone()), k.clone());
        }
        t
    }

    /// `a⊗b⊗c ↦ b⊗c⊗a`.
    pub fn sigma132(&self) -> TripleTensor {
        let mut t = TripleTensor::new();
        for ((a, b, c), k) in &self.terms {
            t.terms.insert((b.clone(), c.clone(), a.clone()), k.clone());
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: ObjectId = ObjectId(0);
    const Q: ObjectId = ObjectId(1);

    fn g(i: u32) -> Gen {
        Gen(i)
    }

    #[test]
    fn concat_and_identity() {
        let f = Element::generator(P, Q, g(1));
        let h = Element::generator(Q, Q, g(2));
        let fh = f.concat(&h).unwrap();
        assert_eq!(fh.coeff(&[g(1), g(2)]), Scalar::one());
        assert_eq!(Element::identity(P).concat(&f).unwrap(), f);
        assert_eq!(f.concat(&Element::identity(Q)).unwrap(), f);
        assert!(h.concat(&f).is_err());
    }

    #[test]
    fn tensor_product_and_tau() {
        let f = Element::generator(P, Q, g(1));
        let gq = Element::generator(Q, P, g(2));
        let h = Element::generator(Q, Q, g(3));
        let m = Element::generator(P, P, g(4));
        let x = TensorElement::pure(&f, &gq).mul(&TensorElement::pure(&h, &m)).unwrap();
        assert_eq!(x.coeff(&[g(1), g(3)], &[g(2), g(4)]), Scalar::one());
        assert_eq!(x.tau().tau(), x);
        let a = Element::generator(P, P, g(5));
        let b = Element::generator(Q, Q, g(6));
        let unit_sandwich = TensorElement::pure(&a, &Element::identity(Q))
            .mul(&TensorElement::pure(&Element::identity(P), &b))
            .unwrap();
        assert_eq!(unit_sandwich, TensorElement::pure(&a, &b));
    }

    #[test]
    fn zero_adopts_endpoints() {
        let mut z = Element::zero(Q, Q);
        z.add_assign(&Element::generator(P, Q, g(1))).unwrap();
        assert_eq!((z.src(), z.dst()), (P, Q));
        let mut y = Element::generator(Q, Q, g(2));
        assert!(y.add_assign(&Element::generator(P, Q, g(1))).is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = Element::generator(P, Q, g(1));
        assert!(f.try_sub(&f).unwrap().is_zero());
    }
}
