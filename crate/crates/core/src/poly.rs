//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Poly`] is a finite map from exponent vectors to nonzero rational
//! coefficients, together with an ordered list of variable names. No zero
//! coefficient is ever stored, so structural equality is equality of the
//! canonical term maps.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{format_rat, Rat};

/// Exponent vector of a monomial: one non-negative exponent per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(pub Vec<u32>);

impl ExpVec {
    pub fn zero(num_vars: usize) -> Self {
        ExpVec(vec![0; num_vars])
    }

    /// The monomial `x_i`.
    pub fn unit(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        ExpVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum (monomial product).
    pub fn add(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.len(), other.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference (monomial quotient); `None` unless `other` divides `self`.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExpVec)
    }

    /// Does `self` divide `other` as a monomial?
    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum (monomial lcm).
    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

/// Exact multivariate polynomial over `Q`.
///
/// Terms are kept in a `BTreeMap` so iteration order, printing, and equality
/// are all canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    variables: Vec<String>,
    terms: BTreeMap<ExpVec, Rat>,
}

impl Poly {
    pub fn zero(variables: Vec<String>) -> Self {
        Poly {
            variables,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(variables: Vec<String>, c: Rat) -> Self {
        let mut p = Poly::zero(variables);
        if !c.is_zero() {
            p.terms.insert(ExpVec::zero(p.variables.len()), c);
        }
        p
    }

    /// Build from raw term pairs, combining duplicates and dropping zeros.
    pub fn from_terms(variables: Vec<String>, terms: impl IntoIterator<Item = (ExpVec, Rat)>) -> Self {
        let mut p = Poly::zero(variables);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVec) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant term, i.e. the value at the origin.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&ExpVec::zero(self.num_vars()))
    }

    /// Is the value at the origin zero?
    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Largest total degree among the terms; zero for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(ExpVec::total_degree).max().unwrap_or(0)
    }

    /// Exponent vectors with nonzero coefficient.
    pub fn support(&self) -> Vec<ExpVec> {
        self.terms.keys().cloned().collect()
    }

    /// Accumulate `c * x^e`, dropping the term if the sum cancels.
    pub fn add_term(&mut self, e: ExpVec, c: Rat) {
        debug_assert_eq!(e.len(), self.num_vars());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.variables.clone());
        }
        Poly {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiply by a single term `c * x^e`.
    pub fn mul_term(&self, c: &Rat, e: &ExpVec) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.variables.clone());
        }
        Poly {
            variables: self.variables.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.add(e), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_compatible(other);
        let mut out = Poly::zero(self.variables.clone());
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.add_term(e.add(f), c * d);
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.num_vars());
        let mut out = Poly::zero(self.variables.clone());
        for (e, c) in &self.terms {
            if e.0[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d.0[i] -= 1;
            out.add_term(d, c * Rat::from_integer(e.0[i].into()));
        }
        out
    }

    /// All partial derivatives, in variable order. These generate the Jacobian ideal.
    pub fn partials(&self) -> Vec<Poly> {
        (0..self.num_vars()).map(|i| self.partial(i)).collect()
    }

    /// Reorder this polynomial onto a permuted variable list. `perm[i]` is the
    /// position of old variable `i` in the new order.
    pub fn permute_variables(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.num_vars());
        let mut vars = vec![String::new(); self.num_vars()];
        for (i, &p) in perm.iter().enumerate() {
            vars[p] = self.variables[i].clone();
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut n = vec![0u32; e.len()];
            for (i, &p) in perm.iter().enumerate() {
                n[p] = e.0[i];
            }
            (ExpVec(n), c.clone())
        });
        Poly::from_terms(vars, terms.collect::<Vec<_>>())
    }

    fn check_compatible(&self, other: &Poly) {
        assert_eq!(
            self.variables, other.variables,
            "polynomial arithmetic requires identical variable lists"
        );
    }
}

/// Print order: total degree ascending, ties broken lexicographically with
/// earlier variables weighted most (so `x^5` prints before `y^5`). This is the
/// order the canonical form uses.
fn print_cmp(a: &ExpVec, b: &ExpVec) -> std::cmp::Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| b.0.cmp(&a.0))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&ExpVec> = self.terms.keys().collect();
        keys.sort_by(|a, b| print_cmp(a, b));
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &k) in self.variables.iter().zip(&e.0) {
                match k {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{}^{}", v, k)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", format_rat(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", format_rat(&abs))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn partials_of_cusp() {
        // x^3 + y^4 -> [3x^2, 4y^3]
        let f = Poly::from_terms(
            vars(&["x", "y"]),
            vec![
                (ExpVec(vec![3, 0]), rat_int(1)),
                (ExpVec(vec![0, 4]), rat_int(1)),
            ],
        );
        let p = f.partials();
        assert_eq!(p[0].to_string(), "3*x^2");
        assert_eq!(p[1].to_string(), "4*y^3");
    }

    #[test]
    fn partials_of_constant_are_zero() {
        let f = Poly::constant(vars(&["x", "y"]), rat_int(5));
        for p in f.partials() {
            assert!(p.is_zero());
        }
    }

    #[test]
    fn support_of_acampo_polynomial() {
        let f = Poly::from_terms(
            vars(&["x", "y"]),
            vec![
                (ExpVec(vec![2, 2]), rat_int(1)),
                (ExpVec(vec![5, 0]), rat_int(1)),
                (ExpVec(vec![0, 5]), rat_int(1)),
            ],
        );
        let supp = f.support();
        assert_eq!(supp.len(), 3);
        assert!(supp.contains(&ExpVec(vec![2, 2])));
        assert!(supp.contains(&ExpVec(vec![5, 0])));
        assert!(supp.contains(&ExpVec(vec![0, 5])));
        assert_eq!(f.to_string(), "x^2*y^2+x^5+y^5");
    }

    #[test]
    fn cancellation_yields_zero() {
        let x = Poly::from_terms(vars(&["x"]), vec![(ExpVec(vec![1]), rat_int(2))]);
        let diff = x.sub(&x);
        assert!(diff.is_zero());
        assert_eq!(diff.to_string(), "0");
        assert!(diff.support().is_empty());
    }

    #[test]
    fn display_orders_by_degree_then_lex() {
        let f = Poly::from_terms(
            vars(&["x", "y"]),
            vec![
                (ExpVec(vec![0, 4]), rat_int(1)),
                (ExpVec(vec![3, 0]), rat_int(1)),
            ],
        );
        assert_eq!(f.to_string(), "x^3+y^4");
    }

    #[test]
    fn display_negative_and_fractional_coefficients() {
        let f = Poly::from_terms(
            vars(&["x", "y"]),
            vec![
                (ExpVec(vec![1, 0]), crate::rat::rat(-1, 2)),
                (ExpVec(vec![0, 0]), rat_int(-3)),
            ],
        );
        assert_eq!(f.to_string(), "-3-1/2*x");
    }
}
