//! r-matrices in two slot variables, stored in λ (first slot) and μ (second slot).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{lambda, mu, Scalar, Var};

/// `r = Σ r_ij^kl E_ij ⊠ E_kl`, indices from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    n: usize,
    entries: BTreeMap<(usize, usize, usize, usize), Scalar>,
}

/// The ansatz `r = Σ ρ_mn E_mn ⊠ E_nm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoMatrix {
    n: usize,
    rho: Vec<Scalar>,
}

/// Renames the slot variables `(λ, μ)` to `(s1, s2)` simultaneously.
pub fn at(c: &Scalar, s1: Var, s2: Var) -> Scalar {
    assert_ne!(s1, s2, "slot variables must differ");
    let mut rest = Var::ALL.into_iter().filter(|v| *v != s1 && *v != s2);
    let mut map = Var::ALL;
    map[Var::Lambda as usize] = s1;
    map[Var::Mu as usize] = s2;
    map[Var::Nu as usize] = rest.next().expect("four variables");
    map[Var::T as usize] = rest.next().expect("four variables");
    c.rename(&map)
}

impl RMatrix {
    pub fn zero(n: usize) -> RMatrix {
        RMatrix { n, entries: BTreeMap::new() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `r_ij^kl` in the stored variables.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> Scalar {
        self.entries.get(&(i, j, k, l)).cloned().unwrap_or_default()
    }

    /// `r_ij^kl(s1, s2)`.
    pub fn get_at(&self, i: usize, j: usize, k: usize, l: usize, s1: Var, s2: Var) -> Scalar {
        match self.entries.get(&(i, j, k, l)) {
            Some(c) => at(c, s1, s2),
            None => Scalar::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, c: Scalar) {
        if c.is_zero() {
            self.entries.remove(&(i, j, k, l));
        } else {
            self.entries.insert((i, j, k, l), c);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn scale(&self, k: &Scalar) -> RMatrix {
        let mut r = RMatrix::zero(self.n);
        for (ix, c) in &self.entries {
            r.set(ix.0, ix.1, ix.2, ix.3, c.mul_ref(k));
        }
        r
    }
}

impl RhoMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Scalar) -> RhoMatrix {
        RhoMatrix { n, rho: (0..n * n).map(|p| f(p / n, p % n)).collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> &Scalar {
        &self.rho[a * self.n + b]
    }

    pub fn get_at(&self, a: usize, b: usize, s1: Var, s2: Var) -> Scalar {
        at(self.get(a, b), s1, s2)
    }

    pub fn to_rmatrix(&self) -> RMatrix {
        let mut r = RMatrix::zero(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                r.set(a, b, b, a, self.get(a, b).clone());
            }
        }
        r
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Argument("r-matrix size must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `r_n = ½ Σ_{i<j} (E_ji ⊠ E_ij − E_ij ⊠ E_ji)`.
pub fn disk_r(n: usize) -> Result<RMatrix> {
    Ok(disk_rho(n)?.to_rmatrix())
}

/// `ρ_mn = −½` above the diagonal, `+½` below, zero on it.
pub fn disk_rho(n: usize) -> Result<RhoMatrix> {
    check_size(n)?;
    Ok(RhoMatrix::from_fn(n, |a, b| match a.cmp(&b) {
        std::cmp::Ordering::Less => Scalar::ratio(-1, 2),
        std::cmp::Ordering::Equal => Scalar::zero(),
        std::cmp::Ordering::Greater => Scalar::ratio(1, 2),
    }))
}

/// `ρ = λ/(μ−λ)` above the diagonal, `½(μ+λ)/(μ−λ)` on it, `μ/(μ−λ)` below.
pub fn trig_rho(n: usize) -> Result<RhoMatrix> {
    check_size(n)?;
    let (l, m) = (lambda(), mu());
    let d = &m - &l;
    Ok(RhoMatrix::from_fn(n, |a, b| match a.cmp(&b) {
        std::cmp::Ordering::Less => &l / &d,
        std::cmp::Ordering::Equal => &(&Scalar::ratio(1, 2) * &(&m + &l)) / &d,
        std::cmp::Ordering::Greater => &m / &d,
    }))
}

pub fn trig_r(n: usize) -> Result<RMatrix> {
    Ok(trig_rho(n)?.to_rmatrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_renaming() {
        let c = &lambda() / &(&mu() - &lambda());
        let nu = crate::scalar::nu();
        assert_eq!(at(&c, Var::Mu, Var::Lambda), &mu() / &(&lambda() - &mu()));
        assert_eq!(at(&c, Var::Nu, Var::Lambda), &nu / &(&lambda() - &nu));
        assert_eq!(at(&c, Var::Mu, Var::Nu), &mu() / &(&nu - &mu()));
        assert_eq!(at(&c, Var::Lambda, Var::Nu), &lambda() / &(&nu - &lambda()));
        assert_eq!(at(&c, Var::Lambda, Var::Mu), c);
    }

    #[test]
    fn small_cases() {
        assert_eq!(disk_r(1).unwrap(), RMatrix::zero(1));
        let r = disk_r(2).unwrap();
        assert_eq!(r.entries().count(), 2);
        assert_eq!(r.get(0, 1, 1, 0), Scalar::ratio(-1, 2));
        assert_eq!(r.get(1, 0, 0, 1), Scalar::ratio(1, 2));
        let t = trig_r(1).unwrap();
        assert_eq!(t.get(0, 0, 0, 0).to_string(), "(μ+λ)/(2*μ-2*λ)");
        assert_eq!(trig_rho(3).unwrap().get(0, 1), &(&lambda() / &(&mu() - &lambda())));
        assert!(trig_r(0).is_err());
    }
}
