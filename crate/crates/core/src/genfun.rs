//! Exact integer polynomials and the generating-function identities tying
//! `p_S(x) = Σ χ_S(i) x^i` to the representation function.
//!
//! Geometric factors `(1 - x^{m+1}) / (1 - x)` never involve division here:
//! they are the all-ones polynomial of degree `m`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exec::Exec;
use crate::repfn::repfn_table;
use crate::sets::IntSet;

/// Integer polynomial, coefficients from degree 0, trailing zeros trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// `c·x^k`.
    pub fn monomial(k: usize, c: i64) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `1 + x + … + x^m`, the expansion of `(1 - x^{m+1}) / (1 - x)`.
    pub fn geometric(m: usize) -> Self {
        IntPolynomial::from_coeffs(vec![1; m + 1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(degree, value)` for every nonzero coefficient.
    pub fn nonzero_terms(&self) -> Vec<(usize, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect()
    }

    pub fn scale(&self, factor: i64) -> Self {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// `p(x^2)`.
    pub fn compose_square(&self) -> Self {
        let mut coeffs = vec![0; (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Product with output coefficients computed independently (and in parallel under `exec`).
    pub fn mul_with(&self, other: &Self, exec: Exec) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let (p, q) = (&self.coeffs, &other.coeffs);
        let len = p.len() + q.len() - 1;
        IntPolynomial::from_coeffs(exec.map(0..len, |k| {
            let lo = k.saturating_sub(q.len() - 1);
            let hi = k.min(p.len() - 1);
            (lo..=hi).map(|i| p[i] * q[k - i]).sum()
        }))
    }

    fn zip(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|k| f(self.coefficient(k), other.coefficient(k))).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.mul_with(rhs, Exec::default())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

/// `p_S(x) = Σ_{i <= m} χ_S(i) x^i`; members beyond `m` are rejected.
pub fn charpoly(set: &IntSet, m: usize) -> Result<IntPolynomial> {
    if let Some(max) = set.max() {
        if max > m {
            return Err(invalid(format!("member {max} exceeds degree bound {m}")));
        }
    }
    Ok(IntPolynomial::from_coeffs((0..=m).map(|i| set.chi(i) as i64).collect()))
}

/// `p_D - (G_m - p_C + x^r)` with `G_m = 1 + … + x^m`. Zero iff `D` is
/// exactly the complement of `C` in `[0, m]` plus the point `r` (given `r ∈ C`).
pub fn eq3_residual(c: &IntSet, d: &IntSet, m: usize, r: usize) -> Result<IntPolynomial> {
    let (pc, pd) = (charpoly(c, m)?, charpoly(d, m)?);
    let partner = &(&IntPolynomial::geometric(m) - &pc) + &IntPolynomial::monomial(r, 1);
    Ok(&pd - &partner)
}

/// Least `k <= n_max` where the coefficient of `x^k` in `(p_S(x)^2 - p_S(x^2)) / 2`
/// differs from `R_S(k)` (an odd coefficient also counts as a failure).
pub fn eq4_check(set: &IntSet, n_max: usize) -> Option<usize> {
    let p = charpoly(set, set.bound()).expect("a set fits its own universe");
    let twice = &(&p * &p) - &p.compose_square();
    let table = repfn_table(set, n_max);
    (0..=n_max).find(|&k| {
        let c = twice.coefficient(k);
        c % 2 != 0 || c / 2 != table.get(k) as i64
    })
}

/// `2 p_C(x^2) - [G_m(x^2) + 2 p_C G_m - G_m^2 - 2 x^r G_m + 2 x^r p_C]`, to full degree.
///
/// With `0, r ∈ C` and `D` the partner of `C` (see [`eq3_partner`]), this vanishes exactly
/// when `R_C = R_D`. Only `C ⊆ [0, m]` and `r <= m` are enforced, so
/// perturbed inputs still produce a residual.
pub fn eq5_residual(c: &IntSet, m: usize, r: usize) -> Result<IntPolynomial> {
    if r > m {
        return Err(invalid(format!("overlap point {r} exceeds m = {m}")));
    }
    let pc = charpoly(c, m)?;
    let g = IntPolynomial::geometric(m);
    let xr = IntPolynomial::monomial(r, 1);

    let lhs = pc.compose_square().scale(2);
    let g_pc = &g * &pc;
    let rhs = &(&(&(&g.compose_square() + &g_pc.scale(2)) - &(&g * &g)) - &(&xr * &g).scale(2)) + &(&xr * &pc).scale(2);
    Ok(&lhs - &rhs)
}

/// The partner set `([0, m] \ C) ∪ {r}` of a single-overlap pair.
pub fn eq3_partner(c: &IntSet, m: usize, r: usize) -> IntSet {
    let mut d = IntSet::interval(m).difference(c);
    d.insert(r);
    d.restrict(m.max(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityRelation {
    pub k: usize,
    /// `χ_C(k/2)`.
    pub lhs: i64,
    /// `χ_C(k) + χ_C(k - r) - χ_C(k - 1 - r)`.
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub m: usize,
    pub r: usize,
    /// One entry per even `k` with `r <= k < 2r <= m`.
    pub parity: Vec<ParityRelation>,
    /// `Σ_{i <= r} χ_C(i)`, expected `(r + 1) / 2`.
    pub prefix_sum: i64,
    /// `χ_C((r - 1) / 2)`, expected 0.
    pub middle: i64,
    /// `k` of every violated parity relation.
    pub failed_k: Vec<usize>,
    pub prefix_sum_holds: bool,
    pub middle_holds: bool,
}

impl RelationsReport {
    pub fn holds(&self) -> bool {
        self.failed_k.is_empty() && self.prefix_sum_holds && self.middle_holds
    }
}

/// Coefficient relations satisfied by a solution `C` with odd overlap point `r`:
/// for even `k ∈ [r, 2r)` with `2r <= m`, `χ_C(k/2) = χ_C(k) + χ_C(k-r) - χ_C(k-1-r)`;
/// `Σ_{i<=r} χ_C(i) = (r+1)/2`; and `χ_C((r-1)/2) = 0`.
pub fn coefficient_relations_check(c: &IntSet, m: usize, r: usize) -> Result<RelationsReport> {
    if r.is_multiple_of(2) {
        return Err(invalid(format!("relations are stated for odd r, got {r}")));
    }
    if r > m {
        return Err(invalid(format!("overlap point {r} exceeds m = {m}")));
    }
    charpoly(c, m)?;
    let chi = |i: usize| c.chi(i) as i64;

    let parity: Vec<ParityRelation> = if 2 * r <= m {
        (r..2 * r)
            .filter(|k| k % 2 == 0)
            .map(|k| ParityRelation {
                k,
                lhs: chi(k / 2),
                rhs: chi(k) + chi(k - r) - chi(k - 1 - r),
            })
            .collect()
    } else {
        Vec::new()
    };
    let failed_k = parity.iter().filter(|p| p.lhs != p.rhs).map(|p| p.k).collect();
    let prefix_sum: i64 = (0..=r).map(chi).sum();
    let middle = chi((r - 1) / 2);
    Ok(RelationsReport {
        m,
        r,
        parity,
        prefix_sum,
        middle,
        failed_k,
        prefix_sum_holds: 2 * prefix_sum == r as i64 + 1,
        middle_holds: middle == 0,
    })
}
