//! The quasi-Jacobi identity for the bracket `⟪B(λ), B(μ)⟫` defined by an r-matrix.
//!
//! The entries `B(s)_ij` for `s ∈ {λ, μ, ν}` are treated as free symbols whose pairwise
//! brackets are the twisted-commutator cells; nested brackets then follow from the Leibniz
//! rule. Results are expanded into `B(s)_ij = Σ_k s^k h_ij(k)` over a finite window of `k`.

use std::collections::BTreeMap;

use super::conditions::check_skew;
use super::rmatrix::RMatrix;
use super::twisted::twisted_commutator_pair;
use crate::algebra::{word, Element, Gen, Matrix, ObjectId, TripleTensor, Word};
use crate::bracket::{db_words, GeneratorTable, WordTensor};
use crate::error::{Error, Result};
use crate::io::{serialize_triple, Labels};
use crate::report::Defect;
use crate::scalar::{Scalar, Var};

const SLOTS: [Var; 3] = [Var::Lambda, Var::Mu, Var::Nu];

/// Index tuple `(a1, a4, b1, b4, c1, c4)` of `B(λ)_{a1a4}`, `B(μ)_{b1b4}`, `B(ν)_{c1c4}`.
pub type TripleIndex = (usize, usize, usize, usize, usize, usize);

/// An `n × n` formal Lax matrix whose coefficients `h_ij(k)` have `k` in `lo..=hi`.
#[derive(Clone, Debug)]
pub struct FormalLaxContext {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
}

impl FormalLaxContext {
    pub fn new(n: usize, lo: i64, hi: i64) -> Result<FormalLaxContext> {
        if n == 0 || lo > hi {
            return Err(Error::Argument(format!("empty formal context n={n}, window {lo}..={hi}")));
        }
        Ok(FormalLaxContext { n, lo, hi })
    }

    fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    fn n_symbols(&self) -> u32 {
        (3 * self.n * self.n) as u32
    }

    /// The symbol `B(SLOTS[s])_ij`.
    pub fn symbol(&self, s: usize, i: usize, j: usize) -> Gen {
        Gen(((s * self.n + i) * self.n + j) as u32)
    }

    /// The coefficient `h_ij(k)`.
    pub fn h(&self, i: usize, j: usize, k: i64) -> Gen {
        let w = self.width();
        Gen(self.n_symbols() + ((i * self.n + j) * w + (k - self.lo) as usize) as u32)
    }

    fn decode_h(&self, g: Gen) -> Option<(usize, usize, i64)> {
        let x = g.0.checked_sub(self.n_symbols())? as usize;
        let w = self.width();
        let (ij, k) = (x / w, x % w);
        (ij < self.n * self.n).then_some((ij / self.n, ij % self.n, self.lo + k as i64))
    }

    fn decode_symbol(&self, g: Gen) -> Option<(usize, usize, usize)> {
        let x = g.0 as usize;
        (g.0 < self.n_symbols()).then_some((x / (self.n * self.n), (x / self.n) % self.n, x % self.n))
    }

    fn rows(&self) -> Vec<ObjectId> {
        (0..self.n as u32).map(ObjectId).collect()
    }

    fn cols(&self) -> Vec<ObjectId> {
        (self.n as u32..2 * self.n as u32).map(ObjectId).collect()
    }

    /// `B(SLOTS[s])` as a matrix of symbols.
    pub fn symbol_matrix(&self, s: usize) -> Matrix {
        Matrix::from_fn(self.rows(), self.cols(), |i, j| {
            Element::generator(ObjectId(i as u32), ObjectId((self.n + j) as u32), self.symbol(s, i, j))
        })
    }

    /// `Σ_k λ^k h_ij(k)`.
    pub fn expanded_matrix(&self) -> Matrix {
        Matrix::from_fn(self.rows(), self.cols(), |i, j| {
            let mut e = Element::zero(ObjectId(i as u32), ObjectId((self.n + j) as u32));
            for k in self.lo..=self.hi {
                e.add_term(word(&[self.h(i, j, k)]), Scalar::var_pow(Var::Lambda, k as i32));
            }
            e
        })
    }

    /// Brackets of symbols in distinct slot variables.
    pub fn symbol_table(&self, r: &RMatrix, r_out: &RMatrix) -> Result<GeneratorTable> {
        let mut table = GeneratorTable::new();
        for s in 0..3 {
            for t in 0..3 {
                if s == t {
                    continue;
                }
                let cells =
                    twisted_commutator_pair(r, r_out, &self.symbol_matrix(s), &self.symbol_matrix(t), SLOTS[s], SLOTS[t])?;
                for ((a1, a3, b1, b3), cell) in cells.cells() {
                    let wt: WordTensor = cell.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
                    table.add(self.symbol(s, a1, a3), self.symbol(t, b1, b3), &wt);
                }
            }
        }
        Ok(table)
    }

    /// Brackets of the coefficients `h_ij(k)`, read off from the Laurent expansion of
    /// the twisted commutator. Fails with `NotClosed` unless every coefficient is Laurent
    /// and every extracted exponent lies in the window.
    pub fn generator_table(&self, r: &RMatrix, r_out: &RMatrix) -> Result<GeneratorTable> {
        let b = self.expanded_matrix();
        let cells = twisted_commutator_pair(
            r,
            r_out,
            &b,
            &b.substitute(Var::Lambda, Var::Mu),
            Var::Lambda,
            Var::Mu,
        )?;
        let mut table = GeneratorTable::new();
        for ((a1, a3, b1, b3), cell) in cells.cells() {
            for ((u, v), c) in cell.terms() {
                let terms = c
                    .laurent_terms()
                    .ok_or_else(|| Error::NotClosed(format!("coefficient {c} is not a Laurent polynomial")))?;
                for (e, p, q) in terms {
                    let (k, l) = (e[Var::Lambda as usize], e[Var::Mu as usize]);
                    let out = !(self.lo..=self.hi).contains(&k) || !(self.lo..=self.hi).contains(&l);
                    if out || e[Var::Nu as usize] != 0 || e[Var::T as usize] != 0 {
                        return Err(Error::NotClosed(format!("exponents {e:?} fall outside the window")));
                    }
                    let mut wt = WordTensor::new();
                    wt.insert((u.clone(), v.clone()), Scalar::from_bigints(p, q)?);
                    table.add(self.h(a1, a3, k), self.h(b1, b3, l), &wt);
                }
            }
        }
        Ok(table)
    }

    /// `B(s)_ij ↦ Σ_k s^k h_ij(k)` applied letterwise.
    pub fn expand(&self, t: &TripleTensor) -> TripleTensor {
        let expand_word = |w: &Word| -> Vec<(Word, Scalar)> {
            let mut acc = vec![(Word::new(), Scalar::one())];
            for g in w {
                let opts: Vec<(Gen, Scalar)> = match self.decode_symbol(*g) {
                    Some((s, i, j)) => {
                        (self.lo..=self.hi).map(|k| (self.h(i, j, k), Scalar::var_pow(SLOTS[s], k as i32))).collect()
                    }
                    None => vec![(*g, Scalar::one())],
                };
                acc = acc
                    .iter()
                    .flat_map(|(w, c)| {
                        opts.iter().map(move |(h, k)| {
                            let mut w2 = w.clone();
                            w2.push(*h);
                            (w2, c.mul_ref(k))
                        })
                    })
                    .collect();
            }
            acc
        };
        let mut out = TripleTensor::new();
        for ((a, b, c), k) in t.terms() {
            let (ea, eb, ec) = (expand_word(a), expand_word(b), expand_word(c));
            for (wa, ka) in &ea {
                for (wb, kb) in &eb {
                    for (wc, kc) in &ec {
                        out.add_term(wa.clone(), wb.clone(), wc.clone(), k.mul_ref(ka).mul_ref(kb).mul_ref(kc));
                    }
                }
            }
        }
        out
    }

    /// Names `B(λ)_ij` and `h_ij(k)`, 1-based.
    pub fn labels(&self) -> FormalLabels<'_> {
        FormalLabels(self)
    }
}

pub struct FormalLabels<'a>(&'a FormalLaxContext);

impl Labels for FormalLabels<'_> {
    fn gen_label(&self, g: Gen) -> Option<String> {
        if let Some((s, i, j)) = self.0.decode_symbol(g) {
            return Some(format!("B({})_{}{}", SLOTS[s].symbol(), i + 1, j + 1));
        }
        Some(match self.0.decode_h(g) {
            Some((i, j, k)) => format!("h_{}{}({k})", i + 1, j + 1),
            None => format!("g{}", g.0),
        })
    }

    fn object_label(&self, o: ObjectId) -> String {
        format!("o{}", o.0)
    }
}

fn add_words(out: &mut TripleTensor, table: &GeneratorTable, x: &[Gen], y: &[Gen], z: &[Gen], k: &Scalar) {
    for ((u, v), c) in db_words(table, y, z) {
        for ((p, q), d) in db_words(table, x, &u) {
            out.add_term(p, q, v.clone(), k.mul_ref(&c).mul_ref(&d));
        }
    }
}

/// `⟪x, ⟪y, z⟫⟫_L`, where `⟪x, u⊗v⟫_L = ⟪x, u⟫ ⊗ v`.
pub fn nested_bracket(table: &GeneratorTable, x: &Element, y: &Element, z: &Element) -> TripleTensor {
    let mut out = TripleTensor::new();
    for (a, ka) in x.terms() {
        for (b, kb) in y.terms() {
            for (c, kc) in z.terms() {
                add_words(&mut out, table, a, b, c, &ka.mul_ref(kb).mul_ref(kc));
            }
        }
    }
    out
}

/// `⟪x,⟪y,z⟫⟫_L + σ(⟪y,⟪z,x⟫⟫_L) + σ²(⟪z,⟪x,y⟫⟫_L)`.
pub fn cyclic_sum(table: &GeneratorTable, x: &Element, y: &Element, z: &Element) -> TripleTensor {
    let mut t = nested_bracket(table, x, y, z);
    t.add_assign(&nested_bracket(table, y, z, x).sigma123());
    t.add_assign(&nested_bracket(table, z, x, y).sigma132());
    t
}

impl FormalLaxContext {
    fn symbol_el(&self, s: usize, i: usize, j: usize) -> Element {
        Element::generator(ObjectId(i as u32), ObjectId((self.n + j) as u32), self.symbol(s, i, j))
    }

    /// The expected value
    /// `−¼ δ_{a1b1}δ_{a1c1} B(λ)_{a1a4}⊗B(μ)_{b1b4}⊗B(ν)_{c1c4} + ¼ δ_{a4b4}δ_{a4c4} B(ν)_{c1c4}⊗B(λ)_{a1a4}⊗B(μ)_{b1b4}`.
    pub fn quasi_jacobi_rhs(&self, ix: TripleIndex) -> TripleTensor {
        let (a1, a4, b1, b4, c1, c4) = ix;
        let (x, y, z) = (self.symbol(0, a1, a4), self.symbol(1, b1, b4), self.symbol(2, c1, c4));
        let mut t = TripleTensor::new();
        if a1 == b1 && a1 == c1 {
            t.add_term(word(&[x]), word(&[y]), word(&[z]), Scalar::ratio(-1, 4));
        }
        if a4 == b4 && a4 == c4 {
            t.add_term(word(&[z]), word(&[x]), word(&[y]), Scalar::ratio(1, 4));
        }
        t
    }

    fn all_indices(&self) -> Vec<TripleIndex> {
        let n = self.n;
        let mut v = Vec::new();
        for p in 0..n.pow(6) {
            let d = |k: u32| (p / n.pow(k)) % n;
            v.push((d(5), d(4), d(3), d(2), d(1), d(0)));
        }
        v
    }
}

/// The symbolic triple bracket `Σ cyclic ⟪B(λ)_{a1a4}, ⟪B(μ)_{b1b4}, B(ν)_{c1c4}⟫⟫` for every
/// index tuple, expanded into the window.
pub fn formal_triple_bracket(
    ctx: &FormalLaxContext,
    r: &RMatrix,
    r_out: &RMatrix,
) -> Result<BTreeMap<TripleIndex, TripleTensor>> {
    let table = ctx.symbol_table(r, r_out)?;
    let mut out = BTreeMap::new();
    for ix in ctx.all_indices() {
        let (a1, a4, b1, b4, c1, c4) = ix;
        let t = cyclic_sum(&table, &ctx.symbol_el(0, a1, a4), &ctx.symbol_el(1, b1, b4), &ctx.symbol_el(2, c1, c4));
        out.insert(ix, ctx.expand(&t));
    }
    Ok(out)
}

/// Compares the triple bracket with the quasi-Jacobi right-hand side for every index tuple.
/// Both r-matrices must be skew-symmetric, since otherwise the symbol brackets are not a
/// double bracket at all.
pub fn quasi_jacobi_check(ctx: &FormalLaxContext, r: &RMatrix, r_out: &RMatrix) -> Result<Vec<Defect>> {
    for (name, m) in [("r", r), ("outgoing r", r_out)] {
        if let Some(d) = check_skew(m).first() {
            return Err(Error::SkewViolated(format!("{name}: {d}")));
        }
    }
    let labels = ctx.labels();
    let mut defects = Vec::new();
    for (ix, lhs) in formal_triple_bracket(ctx, r, r_out)? {
        let rhs = ctx.expand(&ctx.quasi_jacobi_rhs(ix));
        if !lhs.sub(&rhs).is_zero() {
            let (a1, a4, b1, b4, c1, c4) = ix;
            defects.push(Defect::new(
                format!("({},{}),({},{}),({},{})", a1 + 1, a4 + 1, b1 + 1, b4 + 1, c1 + 1, c4 + 1),
                serialize_triple(&rhs, &labels),
                serialize_triple(&lhs, &labels),
            ));
        }
    }
    Ok(defects)
}
