//! Multivariate polynomial gcd over ℤ by recursive primitive remainder sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, Poly, Var};

/// Greatest common divisor with positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let g = gcd_raw(a, b);
    normalize_sign(g)
}

fn normalize_sign(p: Poly) -> Poly {
    if p.leading_is_negative() {
        p.neg()
    } else {
        p
    }
}

fn gcd_raw(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_one() || b.is_one() {
        return Poly::one();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.int_content().gcd(&b.int_content()));
    }
    if a.is_monomial() {
        return monomial_gcd(a, b);
    }
    if b.is_monomial() {
        return monomial_gcd(b, a);
    }
    let v = match (a.highest_var(), b.highest_var()) {
        (Some(x), Some(y)) => x.max(y),
        _ => unreachable!("nonconstant polynomials contain a variable"),
    };
    if !a.contains_var(v) {
        return gcd_raw(a, &content(b, v));
    }
    if !b.contains_var(v) {
        return gcd_raw(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_raw(&ca, &cb);
    let p = primitive_gcd(pa, pb, v);
    c.mul(&p)
}

fn monomial_gcd(m: &Poly, p: &Poly) -> Poly {
    let (mm, mc) = m.leading().cloned().expect("monomial");
    let mut e = mm.0;
    for (tm, _) in p.terms() {
        for (x, y) in e.iter_mut().zip(tm.0) {
            *x = (*x).min(y);
        }
    }
    let c = mc.abs().gcd(&p.int_content());
    Poly::monomial(Monomial(e), c)
}

/// Content with respect to `v`: gcd of the coefficients of powers of `v`.
fn content(p: &Poly, v: Var) -> Poly {
    let mut g = Poly::zero();
    for (_, c) in p.coeffs_in(v) {
        g = gcd_raw(&g, &c);
        if g.is_one() {
            break;
        }
    }
    normalize_sign(g)
}

fn primitive_part(p: &Poly, v: Var) -> Poly {
    let c = content(p, v);
    normalize_sign(p.div_exact(&c).expect("content divides"))
}

/// Pseudo-remainder of `p` by `q` in `v`.
fn prem(p: &Poly, q: &Poly, v: Var) -> Poly {
    let dq = q.degree_in(v);
    let lq = q.coeff_in(v, dq);
    let mut r = p.clone();
    while !r.is_zero() && r.degree_in(v) >= dq {
        let dr = r.degree_in(v);
        let lr = r.coeff_in(v, dr);
        let shift = Monomial::var(v, dr - dq);
        let sub = q.mul(&lr).mul_term(&shift, &BigInt::one());
        r = r.mul(&lq).sub(&sub);
    }
    r
}

/// Gcd of two polynomials that are primitive in `v` and both involve `v`.
fn primitive_gcd(a: Poly, b: Poly, v: Var) -> Poly {
    let (mut p, mut q) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        let r = prem(&p, &q, v);
        if r.is_zero() {
            return primitive_part(&q, v);
        }
        if !r.contains_var(v) {
            return Poly::one();
        }
        p = q;
        q = primitive_part(&r, v);
    }
}

/// Integer gcd helper used by the fast constant paths.
pub fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let g = a.gcd(b);
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }
    fn c(n: i64) -> Poly {
        Poly::constant(BigInt::from(n))
    }

    #[test]
    fn gcd_of_products() {
        let l = v(Var::Lambda);
        let m = v(Var::Mu);
        let n = v(Var::Nu);
        let f1 = m.sub(&l);
        let f2 = l.mul(&n).add(&c(3));
        let f3 = m.add(&n).add(&c(1));
        let a = f1.mul(&f2).mul(&c(6));
        let b = f1.mul(&f3).mul(&c(4));
        assert_eq!(gcd(&a, &b), f1.mul(&c(2)));
        let a = f1.mul(&f2).mul(&f2);
        let b = f2.mul(&f3).neg();
        assert_eq!(gcd(&a, &b), f2);
    }

    #[test]
    fn gcd_with_monomials() {
        let l = v(Var::Lambda);
        let m = v(Var::Mu);
        let a = l.mul(&l).mul(&m).mul(&c(4));
        let b = l.mul(&m).add(&l.mul(&l)).mul(&c(6));
        assert_eq!(gcd(&a, &b), l.mul(&c(2)));
    }

    #[test]
    fn coprime() {
        let l = v(Var::Lambda);
        let m = v(Var::Mu);
        assert_eq!(gcd(&m.sub(&l), &m.add(&l)), Poly::one());
    }
}
