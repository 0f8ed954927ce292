//! Spectral sets and their algebra.
//!
//! A [`SpectralSet`] is the sorted multiset of spectral numbers of a germ,
//! tagged with the number of ambient variables so that the range `(0, n+1)`
//! and the symmetry about `(n+1)/2` can be checked without re-supplying `n`.
//! Thom-Sebastiani sums turn into pairwise sums of multisets, suspensions are
//! Thom-Sebastiani with the spectrum of a power of one extra variable, and
//! reducing mod 1 yields monodromy eigenvalues.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cyclotomic::{cyclotomic, totient, IntPoly};
use crate::rat::{format_rat, frac_part, rat, rat_int, Rat};

/// Sorted multiset of spectral numbers with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralSet {
    entries: Vec<(Rat, u64)>,
    num_vars: usize,
}

/// Which unit interval a count refers to: `(a, a+1)` or `(a, a+1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalKind {
    Open,
    HalfOpenRight,
}

/// Multiset of monodromy eigenvalues, each stored as the fraction
/// `alpha mod 1` of `exp(2*pi*i*alpha)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueSet {
    entries: Vec<(Rat, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("eigenvalue multiset is not closed under the Galois action; raw fractions: {fractions}")]
pub struct GaloisUnstable {
    pub set: EigenvalueSet,
    pub fractions: String,
}

/// A product of cyclotomic polynomials `prod Phi_q(t)^m_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicProduct {
    /// `(q, multiplicity)` pairs, ascending in `q`.
    pub factors: Vec<(u64, u64)>,
    /// The expanded integer polynomial.
    pub expanded: IntPoly,
}

/// Both sides of the spectral variance inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarianceReport {
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
}

impl SpectralSet {
    /// Empty spectrum of a germ in `num_vars` variables (a smooth point).
    /// With `num_vars = 0` this is the Thom-Sebastiani identity.
    pub fn empty(num_vars: usize) -> Self {
        SpectralSet {
            entries: Vec::new(),
            num_vars,
        }
    }

    /// Collect an iterator of `(alpha, multiplicity)` into canonical form.
    pub fn from_entries(num_vars: usize, entries: impl IntoIterator<Item = (Rat, u64)>) -> Self {
        let mut map: BTreeMap<Rat, u64> = BTreeMap::new();
        for (a, m) in entries {
            if m == 0 {
                continue;
            }
            *map.entry(a).or_insert(0) += m;
        }
        SpectralSet {
            entries: map.into_iter().collect(),
            num_vars,
        }
    }

    pub fn from_values(num_vars: usize, values: impl IntoIterator<Item = Rat>) -> Self {
        Self::from_entries(num_vars, values.into_iter().map(|a| (a, 1)))
    }

    pub fn entries(&self) -> &[(Rat, u64)] {
        &self.entries
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity; the Milnor number of the germ.
    pub fn mu(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.entries.first().map(|(a, _)| a)
    }

    pub fn max(&self) -> Option<&Rat> {
        self.entries.last().map(|(a, _)| a)
    }

    pub fn multiplicity(&self, alpha: &Rat) -> u64 {
        self.entries
            .binary_search_by(|(a, _)| a.cmp(alpha))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    /// Thom-Sebastiani sum: all pairwise sums of spectral numbers, with
    /// multiplicities multiplied; variable counts add. The empty spectrum in
    /// zero variables is the identity.
    pub fn thom_sebastiani(&self, other: &SpectralSet) -> SpectralSet {
        if self.num_vars == 0 && self.entries.is_empty() {
            return other.clone();
        }
        if other.num_vars == 0 && other.entries.is_empty() {
            return self.clone();
        }
        let mut map: BTreeMap<Rat, u64> = BTreeMap::new();
        for (a, m) in &self.entries {
            for (b, n) in &other.entries {
                *map.entry(a + b).or_insert(0) += m * n;
            }
        }
        SpectralSet {
            entries: map.into_iter().collect(),
            num_vars: self.num_vars + other.num_vars,
        }
    }

    /// Spectrum of a power of a single variable: `{1/m, ..., (m-1)/m}`.
    pub fn power_of_one_variable(m: u64) -> SpectralSet {
        assert!(m >= 1);
        SpectralSet::from_values(1, (1..m).map(|i| rat(i as i64, m as i64)))
    }

    /// Add one variable `z^m`: the result is the union of `m - 1` copies of
    /// this spectrum shifted by `1/m, ..., (m-1)/m`.
    pub fn suspension(&self, m: u64) -> SpectralSet {
        assert!(m >= 2, "suspension exponent must be at least 2");
        self.thom_sebastiani(&SpectralSet::power_of_one_variable(m))
    }

    /// Is the multiset invariant under `alpha -> num_vars - alpha`?
    pub fn check_symmetry(&self) -> bool {
        let n = rat_int(self.num_vars as i64);
        self.entries
            .iter()
            .all(|(a, m)| self.multiplicity(&(&n - a)) == *m)
    }

    /// Does every entry lie strictly between 0 and `num_vars`?
    pub fn check_range(&self) -> bool {
        let zero = Rat::zero();
        let n = rat_int(self.num_vars as i64);
        self.entries.iter().all(|(a, _)| *a > zero && *a < n)
    }

    /// Total multiplicity in `(alpha, alpha+1)` or `(alpha, alpha+1]`.
    pub fn interval_count(&self, alpha: &Rat, kind: IntervalKind) -> u64 {
        let upper = alpha + rat_int(1);
        self.entries
            .iter()
            .filter(|(a, _)| {
                a > alpha
                    && match kind {
                        IntervalKind::Open => *a < upper,
                        IntervalKind::HalfOpenRight => *a <= upper,
                    }
            })
            .map(|(_, m)| m)
            .sum()
    }

    /// Monodromy eigenvalues `exp(2*pi*i*alpha)`, collected as fractions mod 1.
    pub fn eigenvalues(&self) -> EigenvalueSet {
        let mut map: BTreeMap<Rat, u64> = BTreeMap::new();
        for (a, m) in &self.entries {
            *map.entry(frac_part(a)).or_insert(0) += m;
        }
        EigenvalueSet {
            entries: map.into_iter().collect(),
        }
    }

    /// Variance inequality: mean squared deviation from the center of the
    /// range against one twelfth of the spectral spread.
    ///
    /// Panics on an empty spectrum.
    pub fn variance_check(&self) -> VarianceReport {
        assert!(!self.is_empty(), "variance of an empty spectrum");
        let mu = rat_int(self.mu() as i64);
        let center = rat(self.num_vars as i64, 2);
        let mut sum = Rat::zero();
        for (a, m) in &self.entries {
            let d = a - &center;
            sum += &d * &d * rat_int(*m as i64);
        }
        let lhs = sum / mu;
        let rhs = (self.max().unwrap() - self.min().unwrap()) / rat_int(12);
        let holds = lhs <= rhs;
        VarianceReport { lhs, rhs, holds }
    }

    /// Two-row boxed table, multiplicities above spectral numbers.
    pub fn render_table(&self) -> String {
        if self.entries.is_empty() {
            return "(empty spectrum)".to_string();
        }
        let cells: Vec<(String, String)> = self
            .entries
            .iter()
            .map(|(a, m)| (m.to_string(), format_rat(a)))
            .collect();
        let widths: Vec<usize> = cells.iter().map(|(m, a)| m.len().max(a.len())).collect();
        let rule: String = {
            let mut s = String::from("+");
            for w in &widths {
                s.push_str(&"-".repeat(w + 2));
                s.push('+');
            }
            s
        };
        let row = |select: fn(&(String, String)) -> &String| {
            let mut s = String::from("|");
            for (cell, w) in cells.iter().zip(&widths) {
                let text = select(cell);
                s.push_str(&format!(" {:^w$} |", text, w = w));
            }
            s
        };
        format!(
            "{rule}\n{}\n{rule}\n{}\n{rule}",
            row(|c| &c.0),
            row(|c| &c.1)
        )
    }
}

impl EigenvalueSet {
    pub fn from_fractions(entries: impl IntoIterator<Item = (Rat, u64)>) -> Self {
        let mut map: BTreeMap<Rat, u64> = BTreeMap::new();
        for (a, m) in entries {
            assert!(
                !a.is_negative() && a < rat_int(1),
                "eigenvalue fraction out of [0, 1)"
            );
            if m > 0 {
                *map.entry(a).or_insert(0) += m;
            }
        }
        EigenvalueSet {
            entries: map.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[(Rat, u64)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Least common multiple of the reduced denominators: the order of the
    /// semisimple part of the monodromy.
    pub fn monodromy_order(&self) -> BigInt {
        let mut l = BigInt::one();
        for (a, _) in &self.entries {
            l = l.lcm(a.denom());
        }
        l
    }

    /// Group fractions by reduced denominator `q` and, when every primitive
    /// `q`-th fraction carries the same multiplicity, return the product of
    /// cyclotomic polynomials `Phi_q^{m_q}`.
    pub fn characteristic_polynomial(&self) -> Result<CyclotomicProduct, GaloisUnstable> {
        let mut by_denom: BTreeMap<u64, Vec<(BigInt, u64)>> = BTreeMap::new();
        for (a, m) in &self.entries {
            let q = a.denom().to_u64().ok_or_else(|| self.unstable())?;
            by_denom.entry(q).or_default().push((a.numer().clone(), *m));
        }
        let mut factors = Vec::new();
        for (q, nums) in &by_denom {
            let phi = totient(*q);
            if nums.len() as u64 != phi {
                return Err(self.unstable());
            }
            let m0 = nums[0].1;
            if nums.iter().any(|(_, m)| *m != m0) {
                return Err(self.unstable());
            }
            factors.push((*q, m0));
        }
        let mut expanded = IntPoly::one();
        for (q, m) in &factors {
            let phi = cyclotomic(*q);
            for _ in 0..*m {
                expanded = expanded.mul(&phi);
            }
        }
        Ok(CyclotomicProduct { factors, expanded })
    }

    fn unstable(&self) -> GaloisUnstable {
        let fractions = self
            .entries
            .iter()
            .map(|(a, m)| format!("{}x{}", m, format_rat(a)))
            .collect::<Vec<_>>()
            .join(", ");
        GaloisUnstable {
            set: self.clone(),
            fractions,
        }
    }
}
