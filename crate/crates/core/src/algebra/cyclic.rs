//! Unbased loops: words modulo rotation.

use std::collections::BTreeMap;

use super::element::{add_into, Element, Gen, ObjectId, Word};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, Var};

/// A loop stored as its lexicographically least rotation. Empty loops remember their base.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Word,
    base: Option<ObjectId>,
}

impl CyclicWord {
    pub fn new(w: &[Gen], base: ObjectId) -> CyclicWord {
        if w.is_empty() {
            CyclicWord { letters: Word::new(), base: Some(base) }
        } else {
            let k = least_rotation(w);
            let mut letters = Word::with_capacity(w.len());
            letters.extend_from_slice(&w[k..]);
            letters.extend_from_slice(&w[..k]);
            CyclicWord { letters, base: None }
        }
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn empty_base(&self) -> Option<ObjectId> {
        self.base
    }
}

/// Booth's algorithm: start index of the least rotation.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let sj = &s[j % n];
        let mut i = f[j - k - 1];
        while i != -1 && *sj != s[(k + i as usize + 1) % n] {
            if *sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && *sj != s[(k + i.wrapping_add(1) as usize) % n] {
            if *sj < s[k % n] {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclicElement {
    terms: BTreeMap<CyclicWord, Scalar>,
}

impl CyclicElement {
    pub fn zero() -> CyclicElement {
        CyclicElement::default()
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

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: CyclicWord, c: Scalar) {
        add_into(&mut self.terms, w, c);
    }

    pub fn add_assign(&mut self, o: &CyclicElement) {
        for (w, c) in &o.terms {
            add_into(&mut self.terms, w.clone(), c.clone());
        }
    }

    pub fn scale(&self, k: &Scalar) -> CyclicElement {
        let mut e = CyclicElement::zero();
        for (w, c) in &self.terms {
            add_into(&mut e.terms, w.clone(), c.mul_ref(k));
        }
        e
    }

    pub fn sub(&self, o: &CyclicElement) -> CyclicElement {
        let mut e = self.clone();
        e.add_assign(&o.scale(&Scalar::int(-1)));
        e
    }

    pub fn truncate(&self, max_len: usize) -> CyclicElement {
        let mut e = self.clone();
        e.terms.retain(|w, _| w.letters.len() <= max_len);
        e
    }

    pub fn substitute(&self, from: Var, to: Var) -> CyclicElement {
        let mut e = CyclicElement::zero();
        for (w, c) in &self.terms {
            add_into(&mut e.terms, w.clone(), c.substitute(from, to));
        }
        e
    }

    /// A based representative: each class written as a loop at `base_of(word)`.
    pub fn representatives(
        &self,
        base_of: impl Fn(&[Gen]) -> ObjectId,
    ) -> Vec<Element> {
        let mut by_base: BTreeMap<ObjectId, Element> = BTreeMap::new();
        for (w, c) in &self.terms {
            let base = w.base.unwrap_or_else(|| base_of(&w.letters));
            by_base
                .entry(base)
                .or_insert_with(|| Element::zero(base, base))
                .add_term(w.letters.clone(), c.clone());
        }
        by_base.into_values().collect()
    }
}

/// The universal trace of a loop element.
pub fn cyclic_reduce(f: &Element) -> Result<CyclicElement> {
    if f.is_zero() {
        return Ok(CyclicElement::zero());
    }
    if !f.is_loop() {
        return Err(Error::NotALoop(format!("element from {:?} to {:?}", f.src(), f.dst())));
    }
    let mut out = CyclicElement::zero();
    for (w, c) in f.terms() {
        out.add_term(CyclicWord::new(w, f.src()), c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::element::word;

    fn brute_force(s: &[u32]) -> Vec<u32> {
        (0..s.len().max(1))
            .map(|k| {
                let mut r = s[k.min(s.len())..].to_vec();
                r.extend_from_slice(&s[..k.min(s.len())]);
                r
            })
            .min()
            .unwrap_or_default()
    }

    #[test]
    fn booth_matches_brute_force() {
        let cases: [&[u32]; 7] =
            [&[3, 1, 2], &[1, 1, 1], &[2, 1, 2, 1], &[5], &[2, 2, 1, 2, 2, 1, 2], &[0, 3, 0, 2], &[4, 3, 4, 3, 1]];
        for c in cases {
            let k = least_rotation(c);
            let mut r = c[k..].to_vec();
            r.extend_from_slice(&c[..k]);
            assert_eq!(r, brute_force(c), "{c:?}");
        }
    }

    #[test]
    fn rotations_agree() {
        let p = ObjectId(0);
        let abc = CyclicWord::new(&word(&[Gen(1), Gen(2), Gen(3)]), p);
        let cab = CyclicWord::new(&word(&[Gen(3), Gen(1), Gen(2)]), p);
        assert_eq!(abc, cab);
    }

    #[test]
    fn rejects_non_loops() {
        let f = Element::generator(ObjectId(0), ObjectId(1), Gen(0));
        assert!(cyclic_reduce(&f).is_err());
        let id = Element::identity(ObjectId(2));
        let c = cyclic_reduce(&id).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.terms().next().unwrap().0.empty_base(), Some(ObjectId(2)));
    }
}
