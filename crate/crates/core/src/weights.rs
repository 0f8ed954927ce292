//! Quasi-homogeneous weights and their spectra.
//!
//! A germ is quasi-homogeneous with weights `w_0..w_n` when every support
//! monomial lies on the hyperplane `w . nu = 1`. The weights are recovered by
//! solving that linear system exactly; the spectrum is then the multiset
//! expansion of the weighted Poincare series of the Milnor module,
//!
//! ```text
//! Sp(s) = prod_i (s - s^{w_i}) / (s^{w_i} - 1),
//! ```
//!
//! carried out by exact polynomial division after rescaling all exponents to
//! a common denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::rat::{format_rat, rat, rat_int, Rat};
use crate::spectrum::SpectralSet;

/// Weights of a quasi-homogeneous germ, one per variable, each in `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("the support does not lie on any common weight hyperplane")]
    NotQuasiHomogeneous,
    #[error("the support does not determine the weights (solution space is positive-dimensional)")]
    UnderdeterminedWeights,
    #[error("weight solution exists but w_{index} = {value} is outside (0, 1)")]
    WeightOutOfRange { index: usize, value: String },
    #[error("weight {value} is outside (0, 1)")]
    InvalidWeight { value: String },
    #[error("product of (1 - w_i)/w_i is {value}, not a non-negative integer")]
    NonIntegralMu { value: String },
}

impl WeightVector {
    /// Validate and wrap a weight list; every entry must lie in `(0, 1)`.
    pub fn new(weights: Vec<Rat>) -> Result<Self, WeightError> {
        for w in &weights {
            if !(w > &Rat::zero() && w < &Rat::one()) {
                return Err(WeightError::InvalidWeight {
                    value: format_rat(w),
                });
            }
        }
        Ok(WeightVector { weights })
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `prod (1 - w_i) / w_i`: the Milnor number when the weights come from
    /// an isolated quasi-homogeneous germ.
    pub fn mu(&self) -> Rat {
        let mut p = Rat::one();
        for w in &self.weights {
            p *= (Rat::one() - w) / w;
        }
        p
    }
}

/// Solve `{w . nu = 1 : nu in support(f)}` exactly.
#[allow(clippy::needless_range_loop)]
pub fn detect_weights(f: &Poly) -> Result<WeightVector, WeightError> {
    let n = f.num_vars();
    // Augmented system: rows [nu | 1].
    let mut rows: Vec<Vec<Rat>> = f
        .support()
        .into_iter()
        .map(|e| {
            let mut row: Vec<Rat> = e.0.iter().map(|&k| rat_int(k as i64)).collect();
            row.push(Rat::one());
            row
        })
        .collect();
    // Gaussian elimination with exact arithmetic.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..=n {
                    let sub = &rows[r][j] * &factor;
                    rows[i][j] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    // Inconsistent: a zero row with nonzero right-hand side.
    for row in &rows[r.min(rows.len())..] {
        if row[..n].iter().all(Rat::is_zero) && !row[n].is_zero() {
            return Err(WeightError::NotQuasiHomogeneous);
        }
    }
    if pivot_cols.len() < n {
        return Err(WeightError::UnderdeterminedWeights);
    }
    let mut weights = vec![Rat::zero(); n];
    for (row, &c) in rows.iter().zip(&pivot_cols) {
        weights[c] = row[n].clone();
    }
    for (i, w) in weights.iter().enumerate() {
        if !(w > &Rat::zero() && w < &Rat::one()) {
            return Err(WeightError::WeightOutOfRange {
                index: i,
                value: format_rat(w),
            });
        }
    }
    Ok(WeightVector { weights })
}

/// Spectrum of a quasi-homogeneous isolated germ with the given weights, as
/// the multiset expansion of `prod (s - s^{w_i}) / (s^{w_i} - 1)`.
pub fn qh_spectrum(w: &WeightVector) -> Result<SpectralSet, WeightError> {
    let mu = w.mu();
    if !mu.denom().is_one() || mu.is_negative() {
        return Err(WeightError::NonIntegralMu {
            value: format_rat(&mu),
        });
    }
    let n = w.len();
    if n == 0 {
        return Ok(SpectralSet::empty(0));
    }
    // Common denominator: all exponents become integer multiples of 1/d.
    let mut d = BigInt::one();
    for wi in w.weights() {
        d = d.lcm(wi.denom());
    }
    let d_usize = d
        .to_usize()
        .expect("common weight denominator exceeds usize");
    // Numerator product of u^d - u^{k_i}, then exact division by each
    // u^{k_i} - 1, where u = s^(1/d) and k_i = w_i * d.
    let mut num: Vec<BigInt> = vec![BigInt::one()];
    let mut shifts: Vec<usize> = Vec::new();
    for wi in w.weights() {
        let k = (wi * Rat::from_integer(d.clone()))
            .to_integer()
            .to_usize()
            .expect("scaled weight exceeds usize");
        shifts.push(k);
        // Multiply num by (u^d - u^k).
        let mut next = vec![BigInt::zero(); num.len() + d_usize];
        for (i, c) in num.iter().enumerate() {
            next[i + d_usize] += c;
            next[i + k] -= c;
        }
        num = next;
    }
    for k in shifts {
        // Divide by u^k - 1 exactly; the quotient of the full product is a
        // polynomial whenever the weights come from an isolated germ.
        num = divide_by_u_pow_minus_one(&num, k);
    }
    let entries = num.into_iter().enumerate().filter_map(|(i, c)| {
        if c.is_zero() {
            return None;
        }
        let m = c
            .to_u64()
            .unwrap_or_else(|| panic!("negative or huge multiplicity in Poincare expansion"));
        Some((Rat::new(BigInt::from(i), d.clone()), m))
    });
    let set = SpectralSet::from_entries(n, entries.collect::<Vec<_>>());
    debug_assert_eq!(Rat::from_integer(set.mu().into()), mu);
    Ok(set)
}

/// Exact division of a dense integer polynomial by `u^k - 1`. Panics on a
/// nonzero remainder: that would mean the weights do not belong to any
/// isolated quasi-homogeneous germ and slipped past the integrality check.
fn divide_by_u_pow_minus_one(p: &[BigInt], k: usize) -> Vec<BigInt> {
    assert!(k >= 1);
    if p.iter().all(BigInt::is_zero) {
        return Vec::new();
    }
    let deg = p.len() - 1;
    let mut rem = p.to_vec();
    let mut quot = vec![BigInt::zero(); deg.saturating_sub(k) + 1];
    for i in (k..=deg).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        quot[i - k] += &c;
        rem[i - k] += c;
    }
    for (i, c) in rem.iter().enumerate().take(k) {
        assert!(
            c.is_zero(),
            "nonzero remainder at u^{i} dividing Poincare numerator by u^{k} - 1"
        );
    }
    quot
}

/// Spectrum of a sum of pure powers, directly as the multiset
/// `{sum (k_i + 1)/a_i : 0 <= k_i <= a_i - 2}`.
pub fn bp_spectrum(exponents: &[u64]) -> SpectralSet {
    assert!(
        exponents.iter().all(|&a| a >= 2),
        "pure-power exponents must be at least 2"
    );
    let mut values: Vec<Rat> = vec![Rat::zero()];
    for &a in exponents {
        let mut next = Vec::with_capacity(values.len() * (a as usize - 1));
        for v in &values {
            for k in 0..=(a - 2) {
                next.push(v + rat((k + 1) as i64, a as i64));
            }
        }
        values = next;
    }
    if exponents.is_empty() {
        return SpectralSet::empty(0);
    }
    SpectralSet::from_values(exponents.len(), values)
}
