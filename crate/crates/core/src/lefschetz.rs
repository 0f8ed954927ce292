//! Integer Picard-Lefschetz data for morsified curve singularities.
//!
//! Only the curve case is implemented: the intersection form on vanishing
//! cycles is skew-symmetric and each critical value contributes a transvection
//! `T_i(x) = x - <x, d_i> d_i`. Signs are calibrated against the explicit
//! 2x2 matrices of the two-critical-point analysis, and the total monodromy
//! multiplies the local transvections with later paths acting on the left.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cyclotomic::{cyclotomic, totient, IntPoly};
use crate::rat::Rat;
use crate::spectrum::EigenvalueSet;

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            rows: vec![vec![BigInt::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        IntMatrix {
            n,
            rows: rows
                .iter()
                .map(|r| {
                    assert_eq!(r.len(), n);
                    r.iter().map(|&x| BigInt::from(x)).collect()
                })
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.rows[i][j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self == &IntMatrix::identity(self.n)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let mut out = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let prod = &self.rows[i][k] * &other.rows[k][j];
                    out.rows[i][j] += prod;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.rows[i][j] -= &other.rows[i][j];
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.rows[j][i] = self.rows[i][j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(BigInt::is_zero))
    }

    /// Exact determinant by fraction-free elimination on a rational copy.
    #[allow(clippy::needless_range_loop)]
    pub fn det(&self) -> BigInt {
        let mut m: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        let mut det = Rat::one();
        for c in 0..self.n {
            let Some(p) = (c..self.n).find(|&i| !m[i][c].is_zero()) else {
                return BigInt::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= m[c][c].clone();
            let inv = m[c][c].clone();
            for j in c..self.n {
                m[c][j] = &m[c][j] / &inv;
            }
            for i in (c + 1)..self.n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].clone();
                for j in c..self.n {
                    let sub = &m[c][j] * &f;
                    m[i][j] -= sub;
                }
            }
        }
        debug_assert!(det.denom().is_one());
        det.to_integer()
    }

    /// Characteristic polynomial `det(t I - M)` by the Faddeev-LeVerrier
    /// recursion, exact over the rationals.
    #[allow(clippy::needless_range_loop)]
    pub fn char_poly(&self) -> IntPoly {
        let n = self.n;
        if n == 0 {
            return IntPoly::one();
        }
        // c_n t^n + ... with c_n = 1; A_0 = I, c_{n-k} = -tr(M A_{k-1}) / k,
        // A_k = M A_{k-1} + c_{n-k} I.
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut prev: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        for k in 1..=n {
            // product = M * prev
            let mut product = vec![vec![Rat::zero(); n]; n];
            for i in 0..n {
                for l in 0..n {
                    if self.rows[i][l].is_zero() {
                        continue;
                    }
                    let a = Rat::from_integer(self.rows[i][l].clone());
                    for j in 0..n {
                        let add = &a * &prev[l][j];
                        product[i][j] += add;
                    }
                }
            }
            let trace: Rat = (0..n).map(|i| product[i][i].clone()).sum();
            let c = -trace / Rat::from_integer(BigInt::from(k));
            coeffs[n - k] = c.clone();
            // prev = product + c * I
            for (i, row) in product.iter_mut().enumerate() {
                row[i] += &c;
            }
            prev = product;
        }
        let ints = coeffs
            .into_iter()
            .map(|c| {
                debug_assert!(c.denom().is_one(), "integer matrix char poly");
                c.to_integer()
            })
            .collect();
        let mut p = IntPoly(ints);
        while p.0.last().is_some_and(BigInt::is_zero) {
            p.0.pop();
        }
        p
    }
}

/// A distinguished basis of vanishing cycles: the skew intersection form and
/// the order in which the critical values are encircled.
#[derive(Debug, Clone)]
pub struct VanishingBasis {
    pub rank: usize,
    pub intersection: IntMatrix,
    /// 0-based indices; later entries are multiplied on the left.
    pub path_order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("matrix has no power equal to the identity within cap {cap}")]
pub struct NotFiniteWithinCap {
    pub cap: u64,
}

/// Chain of `k` vanishing cycles with `<d_i, d_{i+1}> = 1`, the morsification
/// pattern of a one-branch curve germ with `k` critical values.
pub fn ak_chain(k: usize) -> VanishingBasis {
    assert!(k >= 1);
    let mut intersection = IntMatrix::zero(k);
    for i in 0..k.saturating_sub(1) {
        intersection.set(i, i + 1, BigInt::one());
        intersection.set(i + 1, i, -BigInt::one());
    }
    VanishingBasis {
        rank: k,
        intersection,
        path_order: (0..k).collect(),
    }
}

/// The transvection of the `i`-th vanishing cycle, `x -> x - <x, d_i> d_i`,
/// as a matrix on the given basis (0-based `i`).
pub fn local_monodromy(basis: &VanishingBasis, i: usize) -> IntMatrix {
    assert!(i < basis.rank);
    let mut m = IntMatrix::identity(basis.rank);
    for j in 0..basis.rank {
        if j != i {
            let v = basis.intersection.get(i, j).clone();
            m.set(i, j, v);
        }
    }
    m
}

/// Product of the local transvections in path order, later paths on the left.
pub fn total_monodromy(basis: &VanishingBasis) -> IntMatrix {
    let mut t = IntMatrix::identity(basis.rank);
    for &i in &basis.path_order {
        t = local_monodromy(basis, i).mul(&t);
    }
    t
}

/// Least `q <= cap` with `m^q = I`.
pub fn matrix_order(m: &IntMatrix, cap: u64) -> Result<u64, NotFiniteWithinCap> {
    assert!(cap >= 1);
    let mut power = m.clone();
    for q in 1..=cap {
        if power.is_identity() {
            return Ok(q);
        }
        power = power.mul(m);
    }
    Err(NotFiniteWithinCap { cap })
}

/// Eigenvalue fractions of an integer matrix whose characteristic polynomial
/// is a product of cyclotomics; `None` when some factor is not cyclotomic
/// (an eigenvalue off the unit circle).
pub fn cyclotomic_eigenvalues(m: &IntMatrix) -> Option<EigenvalueSet> {
    let mut p = m.char_poly();
    if p.is_zero() {
        return None;
    }
    let mut entries: Vec<(Rat, u64)> = Vec::new();
    // Candidate orders: phi(q) must divide into the remaining degree. All
    // roots of unity of order q with totient(q) <= deg can occur.
    let mut q = 1u64;
    while p.degree() > 0 {
        if q > 4 * (m.size() as u64) * (m.size() as u64) + 4 {
            return None;
        }
        if totient(q) <= p.degree() as u64 {
            let phi = cyclotomic(q);
            while let Some(quot) = p.div_exact(&phi) {
                for r in 0..q {
                    if q == 1 || r.gcd(&q) == 1 {
                        entries.push((Rat::new(BigInt::from(r), BigInt::from(q)), 1));
                    }
                }
                p = quot;
                if p.degree() == 0 {
                    break;
                }
            }
        }
        q += 1;
    }
    if p != IntPoly::one() && p.0 != vec![BigInt::one()] {
        // Leftover non-cyclotomic factor (or leading unit != 1).
        if !(p.0.len() == 1 && p.0[0].is_one()) {
            return None;
        }
    }
    Some(EigenvalueSet::from_fractions(entries))
}
