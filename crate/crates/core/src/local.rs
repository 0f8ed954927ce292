//! Local standard bases and the Milnor number.
//!
//! The Milnor number of a germ is the dimension of the local ring modulo the
//! Jacobian ideal. We compute it with Mora's tangent-cone algorithm: a
//! Buchberger loop whose normal form uses ecart selection and may enlarge the
//! reducer set with intermediate results, which is what makes it terminate
//! for local (anti-graded) orders. The dimension is then the number of
//! monomials under the staircase of the resulting leading ideal.

use std::cmp::Ordering;

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{ExpVec, Poly};
use crate::rat::Rat;

/// Default bound on the size of the staircase complement before giving up.
pub const DEFAULT_STAIRCASE_LIMIT: usize = 10_000;

/// Local monomial orders: `1` is the largest monomial, smaller total degree
/// wins, and ties are broken lexicographically (`NegDegLex`) or
/// reverse-lexicographically (`NegDegRevLex`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalOrder {
    NegDegLex,
    NegDegRevLex,
}

impl LocalOrder {
    /// Compare monomials; `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match b.total_degree().cmp(&a.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self {
            LocalOrder::NegDegLex => {
                // First difference decides: larger exponent on an earlier
                // variable means the larger monomial.
                for (x, y) in a.0.iter().zip(&b.0) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            LocalOrder::NegDegRevLex => {
                // Last difference decides: smaller exponent on a later
                // variable means the larger monomial.
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    match y.cmp(x) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// A standard basis of an ideal in the local ring, with the minimal
/// generators of its leading ideal (the staircase corners).
#[derive(Debug, Clone)]
pub struct StandardBasis {
    pub order: LocalOrder,
    pub generators: Vec<Poly>,
    pub staircase: Vec<ExpVec>,
}

impl StandardBasis {
    /// Is the monomial `m` in the leading ideal?
    pub fn leading_ideal_contains(&self, m: &ExpVec) -> bool {
        self.staircase.iter().any(|g| g.divides(m))
    }
}

/// Milnor number: finite with a monomial basis of the Milnor algebra, or
/// infinite for a non-isolated critical point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Milnor {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorData {
    pub mu: Milnor,
    /// Monomials spanning the Milnor algebra, in graded order; empty when
    /// `mu` is infinite.
    pub basis: Vec<ExpVec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("the germ does not vanish at the origin (constant term {0})")]
    NotACriticalGerm(String),
    #[error("staircase complement exceeds the configured limit of {limit} monomials")]
    ResourceLimit { limit: usize },
}

fn leading_exponent(p: &Poly, order: LocalOrder) -> Option<&ExpVec> {
    p.terms()
        .map(|(e, _)| e)
        .max_by(|a, b| order.cmp(a, b))
}

fn leading_term(p: &Poly, order: LocalOrder) -> Option<(ExpVec, Rat)> {
    leading_exponent(p, order).map(|e| (e.clone(), p.coeff(e)))
}

/// Ecart: total degree of the polynomial minus total degree of its leading
/// monomial. Zero for homogeneous polynomials, positive when higher-degree
/// tails are present.
fn ecart(p: &Poly, order: LocalOrder) -> u64 {
    let lm = leading_exponent(p, order).expect("ecart of zero polynomial");
    p.total_degree() - lm.total_degree()
}

/// `spoly(f, g) = f - (lt(f)/lt(g)) * g` when `lm(g)` divides `lm(f)`;
/// for a Buchberger pair both are lifted to the monomial lcm.
fn s_poly(f: &Poly, g: &Poly, order: LocalOrder) -> Poly {
    let (lf, cf) = leading_term(f, order).expect("s_poly: zero input");
    let (lg, cg) = leading_term(g, order).expect("s_poly: zero input");
    let lcm = lf.lcm(&lg);
    let mf = lcm.checked_sub(&lf).unwrap();
    let mg = lcm.checked_sub(&lg).unwrap();
    let one = Rat::from_integer(1.into());
    f.mul_term(&one, &mf)
        .sub(&g.mul_term(&(cf / cg), &mg))
}

/// Mora weak normal form of `h` against `reducers`.
///
/// Reduction always cancels the current leading term. When every usable
/// reducer has strictly larger ecart than the current remainder, the
/// remainder itself is added to the reducer set before continuing; this is
/// the tangent-cone twist that guarantees termination.
fn mora_normal_form(h: &Poly, reducers: &[Poly], order: LocalOrder) -> Poly {
    let mut current = h.clone();
    let mut local: Vec<Poly> = reducers.to_vec();
    loop {
        if current.is_zero() {
            return current;
        }
        let (lm, lc) = leading_term(&current, order).unwrap();
        let mut best: Option<(usize, u64)> = None;
        for (i, g) in local.iter().enumerate() {
            let lg = leading_exponent(g, order).unwrap();
            if lg.divides(&lm) {
                let e = ecart(g, order);
                if best.is_none_or(|(_, be)| e < be) {
                    best = Some((i, e));
                }
            }
        }
        let Some((i, e)) = best else {
            return current;
        };
        if e > ecart(&current, order) {
            local.push(current.clone());
        }
        let g = &local[i];
        let (lg, cg) = leading_term(g, order).unwrap();
        let m = lm.checked_sub(&lg).unwrap();
        current = current.sub(&g.mul_term(&(lc / cg), &m));
    }
}

/// Keep only exponents that are minimal for divisibility.
fn minimalize_staircase(mut exps: Vec<ExpVec>) -> Vec<ExpVec> {
    exps.sort();
    exps.dedup();
    let keep: Vec<ExpVec> = exps
        .iter()
        .filter(|e| !exps.iter().any(|f| f != *e && f.divides(e)))
        .cloned()
        .collect();
    keep
}

/// Compute a standard basis of the ideal generated by `gens` with respect to
/// the given local order. Zero generators are ignored.
pub fn standard_basis(gens: &[Poly], order: LocalOrder) -> StandardBasis {
    let mut basis: Vec<Poly> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let li = leading_exponent(&basis[i], order).unwrap();
        let lj = leading_exponent(&basis[j], order).unwrap();
        // Product criterion: coprime leading monomials reduce to zero.
        if li.lcm(lj) == li.add(lj) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let h = mora_normal_form(&s, &basis, order);
        if !h.is_zero() {
            let k = basis.len();
            basis.push(h);
            for t in 0..k {
                pairs.push((t, k));
            }
        }
    }
    let staircase = minimalize_staircase(
        basis
            .iter()
            .map(|p| leading_exponent(p, order).unwrap().clone())
            .collect(),
    );
    // Keep one generator per staircase corner, smallest leading monomial first.
    let mut generators: Vec<Poly> = Vec::new();
    for corner in &staircase {
        if let Some(g) = basis
            .iter()
            .find(|p| leading_exponent(p, order).unwrap() == corner)
        {
            generators.push(g.clone());
        }
    }
    StandardBasis {
        order,
        generators,
        staircase,
    }
}

/// Does the staircase contain a pure power of every variable? If not, the
/// complement is infinite.
fn complement_is_finite(staircase: &[ExpVec], num_vars: usize) -> bool {
    if num_vars == 0 {
        return true;
    }
    (0..num_vars).all(|i| {
        staircase
            .iter()
            .any(|e| e.0.iter().enumerate().all(|(j, &k)| j == i || k == 0))
    })
}

/// Enumerate the monomials outside the leading ideal, aborting once more than
/// `limit` have been found.
fn staircase_complement(
    staircase: &[ExpVec],
    num_vars: usize,
    limit: usize,
) -> Result<Vec<ExpVec>, LocalError> {
    // The staircase contains the origin exactly when the ideal is the whole
    // ring; the complement is then empty.
    if staircase.iter().any(|e| e.is_constant()) {
        return Ok(Vec::new());
    }
    let mut out: Vec<ExpVec> = Vec::new();
    let mut prefix = vec![0u32; num_vars];
    fn recurse(
        gens: &[Vec<u32>],
        var: usize,
        num_vars: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<ExpVec>,
        limit: usize,
    ) -> Result<(), LocalError> {
        if var == num_vars {
            if out.len() >= limit {
                return Err(LocalError::ResourceLimit { limit });
            }
            out.push(ExpVec(prefix.clone()));
            return Ok(());
        }
        // Height of the staircase in direction `var` given the prefix: the
        // smallest pure-power bound among generators already dominated in all
        // remaining coordinates.
        let mut e = 0u32;
        loop {
            prefix[var] = e;
            // Generators still relevant after fixing prefix[..=var]: those
            // not yet dominated would need larger later coordinates.
            let dominated = gens.iter().any(|g| {
                g.iter()
                    .zip(prefix.iter())
                    .take(var + 1)
                    .all(|(gi, pi)| gi <= pi)
                    && g.iter().skip(var + 1).all(|&gi| gi == 0)
            });
            if dominated {
                break;
            }
            recurse(gens, var + 1, num_vars, prefix, out, limit)?;
            e += 1;
        }
        prefix[var] = 0;
        Ok(())
    }
    let gens: Vec<Vec<u32>> = staircase.iter().map(|e| e.0.clone()).collect();
    recurse(&gens, 0, num_vars, &mut prefix, &mut out, limit)?;
    out.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// Milnor number and monomial basis of the Milnor algebra, with the default
/// staircase limit and order.
pub fn milnor_number(f: &Poly) -> Result<MilnorData, LocalError> {
    milnor_number_with(f, LocalOrder::NegDegRevLex, DEFAULT_STAIRCASE_LIMIT)
}

/// As [`milnor_number`], with an explicit local order and complement-size cap.
pub fn milnor_number_with(
    f: &Poly,
    order: LocalOrder,
    limit: usize,
) -> Result<MilnorData, LocalError> {
    let c = f.constant_term();
    if !c.is_zero() {
        return Err(LocalError::NotACriticalGerm(crate::rat::format_rat(&c)));
    }
    let num_vars = f.num_vars();
    // A linear term makes some partial a unit: smooth point, mu = 0.
    let has_linear = f.terms().any(|(e, _)| e.total_degree() == 1);
    if has_linear {
        return Ok(MilnorData {
            mu: Milnor::Finite(0),
            basis: Vec::new(),
        });
    }
    let partials: Vec<Poly> = f
        .partials()
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    if partials.is_empty() {
        // f = 0: the Jacobian ideal is zero, so the quotient is the whole
        // local ring; with no variables at all that ring is 1-dimensional.
        return Ok(if num_vars == 0 {
            MilnorData {
                mu: Milnor::Finite(1),
                basis: vec![ExpVec::zero(0)],
            }
        } else {
            MilnorData {
                mu: Milnor::Infinite,
                basis: Vec::new(),
            }
        });
    }
    let sb = standard_basis(&partials, order);
    if !complement_is_finite(&sb.staircase, num_vars) {
        return Ok(MilnorData {
            mu: Milnor::Infinite,
            basis: Vec::new(),
        });
    }
    let basis = staircase_complement(&sb.staircase, num_vars, limit)?;
    Ok(MilnorData {
        mu: Milnor::Finite(basis.len()),
        basis,
    })
}
