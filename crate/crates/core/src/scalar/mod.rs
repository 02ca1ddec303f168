//! The ground field ℚ(λ, μ, ν, t) as reduced fractions of integer polynomials.

mod gcd;
mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use gcd::gcd as poly_gcd;
pub use parse::parse_scalar;
pub use poly::{Monomial, Poly, Var};

use crate::error::Error;

/// A reduced rational function. The denominator's leading coefficient is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar::int(1)
    }

    pub fn int(n: i64) -> Scalar {
        Scalar { num: Poly::constant(BigInt::from(n)), den: Poly::one() }
    }

    pub fn ratio(p: i64, q: i64) -> Scalar {
        Scalar::from_bigints(BigInt::from(p), BigInt::from(q)).expect("nonzero denominator")
    }

    pub fn from_bigints(p: BigInt, q: BigInt) -> Result<Scalar, Error> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = gcd::int_gcd(&p, &q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(Scalar { num: Poly::constant(p), den: Poly::constant(q) })
    }

    pub fn var(v: Var) -> Scalar {
        Scalar { num: Poly::var(v), den: Poly::one() }
    }

    /// `v^e` for any integer `e`.
    pub fn var_pow(v: Var, e: i32) -> Scalar {
        let m = Poly::monomial(Monomial::var(v, e.unsigned_abs()), BigInt::one());
        if e >= 0 {
            Scalar { num: m, den: Poly::one() }
        } else {
            Scalar { num: Poly::one(), den: m }
        }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar { num: p, den: Poly::one() }
    }

    /// Reduces `num/den` to canonical form.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Scalar, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else if den.is_constant() {
            let d = den.as_constant().expect("constant");
            let g = gcd::int_gcd(&num.int_content(), &d);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_int_exact(&g), Poly::constant(d / g))
            }
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        if den.leading_is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a reduced integer fraction, if constant.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        Some((self.num.as_constant()?, self.den.as_constant()?))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn both_const(&self, o: &Scalar) -> Option<(BigInt, BigInt, BigInt, BigInt)> {
        let (a, b) = self.as_rational()?;
        let (c, d) = o.as_rational()?;
        Some((a, b, c, d))
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if let Some((a, b, c, d)) = self.both_const(o) {
            return Scalar::from_bigints(a * &d + c * &b, b * d).expect("nonzero");
        }
        if self.den == o.den {
            return Scalar::reduce(self.num.add(&o.num), self.den.clone());
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Scalar::reduce(num, self.den.mul(&o.den))
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if let Some((a, b, c, d)) = self.both_const(o) {
            return Scalar::from_bigints(a * c, b * d).expect("nonzero");
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: Poly::one() };
        }
        // Cross-cancel before multiplying to keep the gcds small.
        let g1 = poly_gcd(&self.num, &o.den);
        let g2 = poly_gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("divides");
        let d2 = o.den.div_exact(&g1).expect("divides");
        let n2 = o.num.div_exact(&g2).expect("divides");
        let d1 = self.den.div_exact(&g2).expect("divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading_is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div_ref(&self, o: &Scalar) -> Result<Scalar, Error> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Simultaneous variable renaming; `map[v]` is the image of `v`.
    pub fn rename(&self, map: &[Var; 4]) -> Scalar {
        if self.is_constant() {
            return self.clone();
        }
        let num = self.num.rename(map);
        let den = self.den.rename(map);
        let injective = {
            let mut seen = [false; 4];
            map.iter().all(|v| !std::mem::replace(&mut seen[*v as usize], true))
        };
        if injective {
            let (mut num, mut den) = (num, den);
            if den.leading_is_negative() {
                num = num.neg();
                den = den.neg();
            }
            Scalar { num, den }
        } else {
            Scalar::from_fraction(num, den).expect("renaming keeps the denominator nonzero")
        }
    }

    /// Replaces one variable by another.
    pub fn substitute(&self, from: Var, to: Var) -> Scalar {
        let mut map = Var::ALL;
        map[from as usize] = to;
        self.rename(&map)
    }

    /// Splits into `(numerator, e)` when the denominator is `c·m` for a monomial `m`,
    /// returning the Laurent terms as `(exponents, p, q)` rational coefficients `p/q`.
    pub fn laurent_terms(&self) -> Option<Vec<([i64; 4], BigInt, BigInt)>> {
        if !self.den.is_monomial() {
            return None;
        }
        let (dm, dc) = self.den.leading().cloned()?;
        let mut out = Vec::new();
        for (m, c) in self.num.terms() {
            let mut e = [0i64; 4];
            for v in Var::ALL {
                e[v as usize] = m.exp(v) as i64 - dm.exp(v) as i64;
            }
            let g = c.gcd(&dc);
            let (mut p, mut q) = (c / &g, &dc / &g);
            if q.is_negative() {
                p = -p;
                q = -q;
            }
            out.push((e, p, q));
        }
        Some(out)
    }

    /// Partial derivative in `v` by the quotient rule.
    pub fn derivative(&self, v: Var) -> Scalar {
        let dn = self.num.derivative(v);
        if self.den.is_constant() {
            return Scalar::from_fraction(dn, self.den.clone()).expect("nonzero denominator");
        }
        let num = dn.mul(&self.den).sub(&self.num.mul(&self.den.derivative(v)));
        Scalar::from_fraction(num, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    pub fn from_laurent_monomial(e: [i64; 4], p: BigInt, q: BigInt) -> Scalar {
        let mut s = Scalar::from_bigints(p, q).expect("nonzero denominator");
        for v in Var::ALL {
            s = s.mul_ref(&Scalar::var_pow(v, e[v as usize] as i32));
        }
        s
    }
}

impl fmt::Display for Scalar {
    /// `p/q` for constants, otherwise parenthesized polynomials without spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((p, q)) = self.as_rational() {
            return if q.is_one() { write!(f, "{p}") } else { write!(f, "{p}/{q}") };
        }
        if self.den.is_one() {
            if self.num.is_monomial() {
                return write!(f, "{}", self.num);
            }
            return write!(f, "({})", self.num);
        }
        match self.num.as_constant() {
            Some(c) => write!(f, "{c}")?,
            None => write!(f, "({})", self.num)?,
        }
        match self.den.as_constant() {
            Some(c) => write!(f, "/{c}"),
            None => write!(f, "/({})", self.den),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::div_ref`] for a fallible version.
    fn div(self, o: &Scalar) -> Scalar {
        self.div_ref(o).expect("division by zero scalar")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

/// Shorthands for the named variables.
pub fn lambda() -> Scalar {
    Scalar::var(Var::Lambda)
}

pub fn mu() -> Scalar {
    Scalar::var(Var::Mu)
}

pub fn nu() -> Scalar {
    Scalar::var(Var::Nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_difference_quotient() {
        let l = lambda();
        let m = mu();
        let s = &(&(&m * &m) - &(&l * &l)) / &(&m - &l);
        assert_eq!(s, &m + &l);
        assert!(s.is_polynomial());
    }

    #[test]
    fn substitution_renames() {
        let l = lambda();
        let m = mu();
        let s = &l / &(&m - &l);
        let t = s.substitute(Var::Lambda, Var::Nu);
        assert_eq!(t, &nu() / &(&m - &nu()));
    }

    #[test]
    fn swap_renaming_fixes_sign() {
        let s = &Scalar::one() / &(&mu() - &lambda());
        let t = s.rename(&[Var::Mu, Var::Lambda, Var::Nu, Var::T]);
        assert_eq!(t, -(&Scalar::one() / &(&mu() - &lambda())));
        assert!(!t.denom().leading_is_negative());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::ratio(-2, 4).to_string(), "-1/2");
        assert_eq!(Scalar::int(3).to_string(), "3");
        let half_ratio = &(&mu() + &lambda()) / &(&Scalar::int(2) * &(&mu() - &lambda()));
        assert_eq!(half_ratio.to_string(), "(μ+λ)/(2*μ-2*λ)");
        assert_eq!(Scalar::var_pow(Var::Lambda, -1).to_string(), "1/(λ)");
        assert_eq!((&lambda() * &Scalar::int(-2)).to_string(), "-2*λ");
    }

    #[test]
    fn zero_division_errors() {
        assert!(Scalar::one().div_ref(&Scalar::zero()).is_err());
        assert!(Scalar::from_bigints(BigInt::one(), BigInt::zero()).is_err());
    }

    #[test]
    fn trig_skew_pair_cancels() {
        let l = lambda();
        let m = mu();
        let r12 = &l / &(&m - &l);
        let r21_swapped = (&m / &(&m - &l)).rename(&[Var::Mu, Var::Lambda, Var::Nu, Var::T]);
        assert_eq!(&r12 + &r21_swapped, Scalar::zero());
    }

    #[test]
    fn laurent_split() {
        let s = &(&lambda() + &Scalar::int(3)) / &(&Scalar::int(2) * &lambda());
        let t = s.laurent_terms().unwrap();
        assert_eq!(t.len(), 2);
        let back = t
            .into_iter()
            .map(|(e, p, q)| Scalar::from_laurent_monomial(e, p, q))
            .fold(Scalar::zero(), |a, b| &a + &b);
        assert_eq!(back, s);
    }

    #[test]
    fn quotient_rule() {
        let l = lambda();
        let m = mu();
        let s = &l / &(&m - &l);
        // d/dλ λ/(μ−λ) = μ/(μ−λ)²
        let want = &m / &(&(&m - &l) * &(&m - &l));
        assert_eq!(s.derivative(Var::Lambda), want);
        assert_eq!(Scalar::int(5).derivative(Var::T), Scalar::zero());
    }
}
