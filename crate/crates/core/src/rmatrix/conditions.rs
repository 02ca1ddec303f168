//! Skew-symmetry and the quasi Yang-Baxter equations, in three slot variables λ, μ, ν.

use super::rmatrix::{RMatrix, RhoMatrix};
use crate::report::Defect;
use crate::scalar::{Scalar, Var};

const L: Var = Var::Lambda;
const M: Var = Var::Mu;
const N: Var = Var::Nu;

fn delta(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] == w[1])
}

fn quarter(sign: i64, on: bool) -> Scalar {
    if on {
        Scalar::ratio(sign, 4)
    } else {
        Scalar::zero()
    }
}

fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(k as u32)).map(move |mut p| {
        let mut v = vec![0; k];
        for slot in v.iter_mut().rev() {
            *slot = p % n;
            p /= n;
        }
        v
    })
}

fn one_based(ix: &[usize]) -> String {
    ix.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// `r_{a1a2}^{b1b2}(λ,μ) + r_{b1b2}^{a1a2}(μ,λ) = 0`.
pub fn check_skew(r: &RMatrix) -> Vec<Defect> {
    let mut out = Vec::new();
    for ix in tuples(r.size(), 4) {
        let (a, b, c, d) = (ix[0], ix[1], ix[2], ix[3]);
        let s = &r.get_at(a, b, c, d, L, M) + &r.get_at(c, d, a, b, M, L);
        if !s.is_zero() {
            out.push(Defect::new(format!("skew ({})", one_based(&ix)), "0", s.to_string()));
        }
    }
    out
}

/// Left side of the first quasi Yang-Baxter equation at `(a1,a3,b1,b3,c1,c3)`.
pub fn qybe_one_lhs(r: &RMatrix, a1: usize, a3: usize, b1: usize, b3: usize, c1: usize, c3: usize) -> Scalar {
    let mut s = Scalar::zero();
    for x in 0..r.size() {
        s = &s + &(&r.get_at(b1, x, c1, c3, M, N) * &r.get_at(a1, a3, x, b3, L, M));
        s = &s + &(&r.get_at(c1, x, a1, a3, N, L) * &r.get_at(b1, b3, x, c3, M, N));
        s = &s + &(&r.get_at(a1, x, b1, b3, L, M) * &r.get_at(c1, c3, x, a3, N, L));
    }
    s
}

/// `Σ r r + Σ r r + Σ r r = −¼ δ_{a1b1}δ_{a1c1}δ_{a1a3}δ_{b1b3}δ_{c1c3}` for every index tuple.
pub fn check_qybe_one(r: &RMatrix) -> Vec<Defect> {
    let mut out = Vec::new();
    for ix in tuples(r.size(), 6) {
        let (a1, a3, b1, b3, c1, c3) = (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5]);
        let lhs = qybe_one_lhs(r, a1, a3, b1, b3, c1, c3);
        let rhs = quarter(-1, delta(&[a1, b1, c1]) && a1 == a3 && b1 == b3 && c1 == c3);
        if lhs != rhs {
            out.push(Defect::new(format!("qybe I ({})", one_based(&ix)), rhs.to_string(), lhs.to_string()));
        }
    }
    out
}

/// Left side of the second equation at `(a2,a4,b2,b4,c2,c4)`. The first sum is
/// `Σ r̲_{a2a4}^{c2c3}(λ,ν) r̲_{b2b4}^{c3c4}(μ,ν)`, which is what the triple bracket produces.
pub fn qybe_two_lhs(r: &RMatrix, a2: usize, a4: usize, b2: usize, b4: usize, c2: usize, c4: usize) -> Scalar {
    let mut s = Scalar::zero();
    for x in 0..r.size() {
        s = &s + &(&r.get_at(a2, a4, c2, x, L, N) * &r.get_at(b2, b4, x, c4, M, N));
        s = &s + &(&r.get_at(b2, b4, a2, x, M, L) * &r.get_at(c2, c4, x, a4, N, L));
        s = &s + &(&r.get_at(c2, c4, b2, x, N, M) * &r.get_at(a2, a4, x, b4, L, M));
    }
    s
}

/// The second equation with its first sum written `Σ r̲_{c2c3}^{a2a4}(λ,ν) r̲_{b2b4}^{c3c4}(μ,ν)`.
/// Kept to document that this index placement does not hold for the trigonometric r-matrix.
pub fn qybe_two_lhs_transposed(r: &RMatrix, a2: usize, a4: usize, b2: usize, b4: usize, c2: usize, c4: usize) -> Scalar {
    let mut s = Scalar::zero();
    for x in 0..r.size() {
        s = &s + &(&r.get_at(c2, x, a2, a4, L, N) * &r.get_at(b2, b4, x, c4, M, N));
        s = &s + &(&r.get_at(b2, b4, a2, x, M, L) * &r.get_at(c2, c4, x, a4, N, L));
        s = &s + &(&r.get_at(c2, c4, b2, x, N, M) * &r.get_at(a2, a4, x, b4, L, M));
    }
    s
}

fn check_two_with(
    r: &RMatrix,
    tag: &str,
    lhs: impl Fn(&RMatrix, usize, usize, usize, usize, usize, usize) -> Scalar,
) -> Vec<Defect> {
    let mut out = Vec::new();
    for ix in tuples(r.size(), 6) {
        let (a2, a4, b2, b4, c2, c4) = (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5]);
        let l = lhs(r, a2, a4, b2, b4, c2, c4);
        let rhs = quarter(1, delta(&[a4, b4, c4]) && a2 == a4 && b2 == b4 && c2 == c4);
        if l != rhs {
            out.push(Defect::new(format!("{tag} ({})", one_based(&ix)), rhs.to_string(), l.to_string()));
        }
    }
    out
}

/// `... = ¼ δ_{a4b4}δ_{a4c4}δ_{a2a4}δ_{b2b4}δ_{c2c4}` for every index tuple.
pub fn check_qybe_two(r: &RMatrix) -> Vec<Defect> {
    check_two_with(r, "qybe II", qybe_two_lhs)
}

pub fn check_qybe_two_transposed(r: &RMatrix) -> Vec<Defect> {
    check_two_with(r, "qybe II (transposed first sum)", qybe_two_lhs_transposed)
}

/// Skew-symmetry of both matrices, the first equation for `r` and the second for `r_out`.
pub fn check_r_conditions(r: &RMatrix, r_out: &RMatrix) -> Vec<Defect> {
    let mut out = check_skew(r);
    out.extend(check_skew(r_out).into_iter().map(|mut d| {
        d.location = format!("outgoing {}", d.location);
        d
    }));
    out.extend(check_qybe_one(r));
    out.extend(check_qybe_two(r_out));
    out
}

/// `ρ_{b1c1}(μ,ν)ρ_{a1c1}(λ,μ) + ρ_{c1a1}(ν,λ)ρ_{b1a1}(μ,ν) + ρ_{a1b1}(λ,μ)ρ_{c1b1}(ν,λ) + ¼δ_{a1b1}δ_{a1c1}`.
pub fn rho_identity(rho: &RhoMatrix, a1: usize, b1: usize, c1: usize) -> Scalar {
    let p = |x: usize, y: usize, s: Var, t: Var| rho.get_at(x, y, s, t);
    let mut s = &p(b1, c1, M, N) * &p(a1, c1, L, M);
    s = &s + &(&p(c1, a1, N, L) * &p(b1, a1, M, N));
    s = &s + &(&p(a1, b1, L, M) * &p(c1, b1, N, L));
    &s + &quarter(1, delta(&[a1, b1, c1]))
}

/// The identity for every triple of indices.
pub fn check_rho(rho: &RhoMatrix) -> Vec<Defect> {
    tuples(rho.size(), 3)
        .filter_map(|ix| {
            let v = rho_identity(rho, ix[0], ix[1], ix[2]);
            (!v.is_zero()).then(|| Defect::new(format!("rho ({})", one_based(&ix)), "0", v.to_string()))
        })
        .collect()
}

/// The six orderings of `(a1, b1, c1)` with `a1` smallest, at representative indices.
pub const RHO_CASES: [(&str, [usize; 3]); 6] = [
    ("a1<b1<c1", [0, 1, 2]),
    ("a1<c1<b1", [0, 2, 1]),
    ("a1=b1<c1", [0, 0, 1]),
    ("a1<b1=c1", [0, 1, 1]),
    ("a1=c1<b1", [0, 1, 0]),
    ("a1=b1=c1", [0, 0, 0]),
];

/// Values of the identity in the six cases; cases needing more indices than `ρ` has are skipped.
pub fn rho_cases(rho: &RhoMatrix) -> Vec<(&'static str, Scalar)> {
    RHO_CASES
        .iter()
        .filter(|(_, ix)| ix.iter().all(|&i| i < rho.size()))
        .map(|(name, ix)| (*name, rho_identity(rho, ix[0], ix[1], ix[2])))
        .collect()
}
