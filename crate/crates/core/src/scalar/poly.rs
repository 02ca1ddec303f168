//! Sparse multivariate polynomials with integer coefficients in λ, μ, ν, t.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The four variables of the ground field, in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Lambda = 0,
    Mu = 1,
    Nu = 2,
    T = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Lambda, Var::Mu, Var::Nu, Var::T];

    pub fn symbol(self) -> char {
        match self {
            Var::Lambda => 'λ',
            Var::Mu => 'μ',
            Var::Nu => 'ν',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'λ' => Some(Var::Lambda),
            'μ' => Some(Var::Mu),
            'ν' => Some(Var::Nu),
            't' => Some(Var::T),
            _ => None,
        }
    }

    fn idx(self) -> usize {
        self as usize
    }
}

/// Exponent vector indexed by [`Var`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(v: Var, e: u32) -> Monomial {
        let mut m = [0; 4];
        m[v.idx()] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.idx()]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0) {
            *a += b;
        }
        Monomial(m)
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0).all(|(a, b)| *a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut m = o.0;
        for (a, b) in m.iter_mut().zip(self.0) {
            *a -= b;
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }
}

impl Ord for Monomial {
    /// Degree-lex with t > ν > μ > λ.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0[3].cmp(&other.0[3]))
            .then(self.0[2].cmp(&other.0[2]))
            .then(self.0[1].cmp(&other.0[1]))
            .then(self.0[0].cmp(&other.0[0]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.symbol())?;
            } else {
                write!(f, "{}^{}", v.symbol(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Terms are kept sorted by strictly decreasing monomial, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Monomial::ONE, c)] }
        }
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(Monomial::var(v, 1), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, combining duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> Poly {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    pub fn highest_var(&self) -> Option<Var> {
        Var::ALL.iter().rev().copied().find(|v| self.contains_var(*v))
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return o.mul_term(m, c);
        }
        if o.is_monomial() {
            let (m, c) = &o.terms[0];
            return self.mul_term(m, c);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(terms)
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Gcd of the integer coefficients, nonnegative.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int_exact(&self, c: &BigInt) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, tc)| (*m, tc / c)).collect() }
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let (dm, dc) = d.terms[0].clone();
        if d.is_monomial() {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) || !c.is_multiple_of(&dc) {
                    return None;
                }
                out.push((dm.quotient_of(m), c / &dc));
            }
            return Some(Poly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            if !dm.divides(&rm) || !rc.is_multiple_of(&dc) {
                return None;
            }
            let qm = dm.quotient_of(&rm);
            let qc = &rc / &dc;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, v: Var, e: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == e)
            .map(|(m, c)| {
                let mut mm = *m;
                mm.0[v.idx()] = 0;
                (mm, c.clone())
            })
            .collect();
        Poly::from_terms(terms)
    }

    /// All coefficients with respect to `v`, as (exponent, coefficient) pairs.
    pub fn coeffs_in(&self, v: Var) -> Vec<(u32, Poly)> {
        let mut exps: Vec<u32> = self.terms.iter().map(|(m, _)| m.exp(v)).collect();
        exps.sort_unstable();
        exps.dedup();
        exps.into_iter().rev().map(|e| (e, self.coeff_in(v, e))).collect()
    }

    /// Renames variables: each variable `v` is sent to `map[v]`.
    pub fn rename(&self, map: &[Var; 4]) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = [0u32; 4];
                for v in Var::ALL {
                    e[map[v.idx()].idx()] += m.exp(v);
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Poly::from_terms(terms)
    }

    /// Partial derivative in `v`.
    pub fn derivative(&self, v: Var) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| {
                let mut e = m.0;
                e[v.idx()] -= 1;
                (Monomial(e), c * BigInt::from(m.exp(v)))
            })
            .collect();
        Poly::from_terms(terms)
    }

    pub fn leading_is_negative(&self) -> bool {
        self.terms.first().map(|(_, c)| c.is_negative()).unwrap_or(false)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}
