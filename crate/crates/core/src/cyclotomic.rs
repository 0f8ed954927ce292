//! Integer polynomials and cyclotomic factors.
//!
//! Just enough univariate arithmetic over `Z` to expand products of
//! cyclotomic polynomials and to compute characteristic polynomials of small
//! integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense univariate polynomial over `Z`, coefficients in ascending degree,
/// normalized so the top coefficient is nonzero (the zero polynomial is an
/// empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        let mut p = IntPoly(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        p.normalize();
        p
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = -BigInt::one();
        c[n] = BigInt::one();
        IntPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn normalize(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = IntPoly(out);
        p.normalize();
        p
    }

    /// Exact division; `None` when `other` does not divide `self` over `Z`.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.0.len() < other.0.len() {
            return None;
        }
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); self.0.len() - other.0.len() + 1];
        let lead = other.0.last().unwrap();
        for k in (0..quot.len()).rev() {
            let top = rem[k + other.0.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return None;
            }
            quot[k] = q.clone();
            for (j, b) in other.0.iter().enumerate() {
                rem[k + j] -= &q * b;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut p = IntPoly(quot);
        p.normalize();
        Some(p)
    }

    /// Render with `t` as the indeterminate, highest degree first.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{}", i),
            };
            let lead = parts.is_empty();
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            let coeff = if abs.is_one() && i > 0 {
                String::new()
            } else {
                abs.to_string()
            };
            let sep = if lead {
                if neg {
                    "-".to_string()
                } else {
                    String::new()
                }
            } else if neg {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            let body = match (coeff.is_empty(), mono.is_empty()) {
                (true, _) => mono.clone(),
                (false, true) => coeff,
                (false, false) => format!("{}*{}", coeff, mono),
            };
            parts.push(format!("{}{}", sep, body));
        }
        parts.concat()
    }
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Euler totient.
pub fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `n`-th cyclotomic polynomial, by dividing `x^n - 1` by the cyclotomic
/// polynomials of the proper divisors of `n`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n > 0, "cyclotomic index must be positive");
    if n == 1 {
        return IntPoly::from_i64(&[-1, 1]);
    }
    let mut result = IntPoly::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        result = result
            .div_exact(&cyclotomic(d))
            .expect("x^n - 1 is divisible by cyclotomic factors");
    }
    result
}
