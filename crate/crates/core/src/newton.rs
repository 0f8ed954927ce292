//! Newton polyhedra, Newton weights, and spectra of nondegenerate germs.
//!
//! The Newton polyhedron of a support set is the convex hull of the union of
//! shifted positive orthants. Its compact codimension-one faces (the Newton
//! diagram) carry the weight function `w(v) = min over facets of (l.v)/c`;
//! for convenient diagrams these cones cover the whole positive orthant. The
//! spectral numbers in `(0,1]` are the weights `<= 1` of shifted lattice
//! points, and for nondegenerate germs the full spectrum is read off the
//! Newton weights of a monomial basis of the Milnor algebra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::local::{milnor_number_with, LocalError, LocalOrder, Milnor, DEFAULT_STAIRCASE_LIMIT};
use crate::poly::{ExpVec, Poly};
use crate::rat::{format_rat, rat_int, Rat};
use crate::spectrum::SpectralSet;

/// One compact facet `{ v : normal . v = level }` of the Newton polyhedron,
/// with a primitive, strictly positive integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub level: BigInt,
}

/// Facet description of a Newton diagram.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    pub num_vars: usize,
    /// Support points that are vertices of the polyhedron, sorted.
    pub vertices: Vec<ExpVec>,
    /// Compact codimension-one faces, deterministically ordered by normal.
    pub facets: Vec<Facet>,
    /// Does the diagram meet every coordinate axis?
    pub convenient: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error("the Newton diagram does not meet every coordinate axis")]
    NotConvenient,
    #[error("the germ has a non-isolated critical point")]
    NotIsolated,
    #[error(
        "monomial basis is incompatible with the Newton filtration; raw weight multiset: {raw}"
    )]
    BasisIncompatible { raw: String },
    #[error(transparent)]
    Local(#[from] LocalError),
}

/// Is the non-strict rational system `sum a_ij x_j >= b_i` satisfiable?
/// Decided by Fourier-Motzkin elimination; sizes here are tiny.
fn linear_system_feasible(constraints: &[(Vec<Rat>, Rat)]) -> bool {
    let mut rows: Vec<(Vec<Rat>, Rat)> = constraints.to_vec();
    let num_vars = rows.first().map_or(0, |(a, _)| a.len());
    for var in (0..num_vars).rev() {
        let mut pos: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut neg: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut rest: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for (a, b) in rows {
            if a[var].is_positive() {
                pos.push((a, b));
            } else if a[var].is_negative() {
                neg.push((a, b));
            } else {
                rest.push((a, b));
            }
        }
        // x_var >= (b - rest)/a for pos rows, <= for neg rows; eliminate by
        // pairing each lower bound with each upper bound.
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                // Scale so the var coefficients cancel: an[var] * p - ap[var] * n
                // keeps inequality direction because an[var] < 0 < ap[var].
                let mut a = vec![Rat::zero(); var];
                for j in 0..var {
                    a[j] = &ap[j] * (-an[var].clone()) + &an[j] * ap[var].clone();
                }
                let b = bp * (-an[var].clone()) + bn * ap[var].clone();
                rest.push((a, b));
            }
        }
        rows = rest
            .into_iter()
            .map(|(mut a, b)| {
                a.truncate(var);
                (a, b)
            })
            .collect();
    }
    rows.iter().all(|(_, b)| !b.is_positive())
}

/// Primitive integer normal of the hyperplane through the given points
/// orthogonal to nothing else: returns `None` when the points do not span a
/// hyperplane. The normal's sign is chosen to make its first nonzero entry
/// positive.
#[allow(clippy::needless_range_loop)]
fn hyperplane_normal(points: &[&ExpVec], num_vars: usize) -> Option<Vec<BigInt>> {
    assert_eq!(points.len(), num_vars);
    // Solve d_i . x = 0 for the difference vectors d_i = p_i - p_0.
    let mut m: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| {
            p.0.iter()
                .zip(&points[0].0)
                .map(|(&a, &b)| rat_int(a as i64 - b as i64))
                .collect()
        })
        .collect();
    // Row-reduce; the nullspace must be one-dimensional.
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..num_vars {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..num_vars {
                    let sub = &m[r][j] * &f;
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() != num_vars - 1 {
        return None;
    }
    let free = (0..num_vars).find(|c| !pivots.contains(c)).unwrap();
    // Back-substitute with the free coordinate set to 1.
    let mut sol = vec![Rat::zero(); num_vars];
    sol[free] = Rat::from_integer(1.into());
    for (row, &c) in m.iter().zip(&pivots) {
        sol[c] = -row[free].clone();
    }
    // Clear denominators and divide by the gcd.
    let mut denom_lcm = BigInt::from(1);
    for s in &sol {
        denom_lcm = denom_lcm.lcm(s.denom());
    }
    let mut ints: Vec<BigInt> = sol
        .iter()
        .map(|s| (s * Rat::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        return None;
    }
    for v in ints.iter_mut() {
        *v /= &g;
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in ints.iter_mut() {
                *v = -v.clone();
            }
        }
    }
    Some(ints)
}

fn dot(l: &[BigInt], v: &ExpVec) -> BigInt {
    l.iter()
        .zip(&v.0)
        .map(|(a, &b)| a * BigInt::from(b))
        .sum()
}

/// Subsets of size `k` from `0..n`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Build the Newton polyhedron of a support set.
///
/// Facets are found by brute force over variable-count-sized subsets of the
/// support: every compact facet's hyperplane is spanned by support points,
/// and compactness forces a strictly positive normal. The inputs here are
/// tiny, so the subset enumeration is perfectly adequate.
pub fn newton_polyhedron(supp: &[ExpVec]) -> NewtonPolyhedron {
    assert!(!supp.is_empty(), "empty support has no Newton polyhedron");
    let num_vars = supp[0].len();
    assert!(
        supp.iter().all(|v| !v.is_constant()),
        "support must not contain the origin"
    );
    let mut points: Vec<ExpVec> = supp.to_vec();
    points.sort();
    points.dedup();

    let mut facets: Vec<Facet> = Vec::new();
    for idx in subsets(points.len(), num_vars) {
        let chosen: Vec<&ExpVec> = idx.iter().map(|&i| &points[i]).collect();
        let Some(normal) = hyperplane_normal(&chosen, num_vars) else {
            continue;
        };
        if !normal.iter().all(|x| x.is_positive()) {
            continue;
        }
        let level = dot(&normal, chosen[0]);
        if !points.iter().all(|v| dot(&normal, v) >= level) {
            continue;
        }
        let f = Facet { normal, level };
        if !facets.contains(&f) {
            facets.push(f);
        }
    }
    facets.sort_by(|a, b| a.normal.cmp(&b.normal).then_with(|| a.level.cmp(&b.level)));

    // A support point is a vertex exactly when it is not contained in the
    // polyhedron generated by the other points: there must be a nonnegative
    // functional strictly separating it.
    let vertices: Vec<ExpVec> = points
        .iter()
        .filter(|v| {
            let others: Vec<&ExpVec> = points.iter().filter(|u| u != v).collect();
            if others.is_empty() {
                return true;
            }
            // Feasibility of: l >= 0, l.(u - v) >= 1 for all other u.
            let mut cons: Vec<(Vec<Rat>, Rat)> = Vec::new();
            for j in 0..num_vars {
                let mut a = vec![Rat::zero(); num_vars];
                a[j] = Rat::from_integer(1.into());
                cons.push((a, Rat::zero()));
            }
            for u in &others {
                let a: Vec<Rat> = u
                    .0
                    .iter()
                    .zip(&v.0)
                    .map(|(&x, &y)| rat_int(x as i64 - y as i64))
                    .collect();
                cons.push((a, Rat::from_integer(1.into())));
            }
            linear_system_feasible(&cons)
        })
        .cloned()
        .collect();

    let convenient = (0..num_vars).all(|i| {
        points
            .iter()
            .any(|v| v.0.iter().enumerate().all(|(j, &k)| j == i || k == 0))
    });

    NewtonPolyhedron {
        num_vars,
        vertices,
        facets,
        convenient,
    }
}

impl NewtonPolyhedron {
    /// Newton weight of a positive rational vector: the minimum over facets
    /// of `(normal . v) / level`. Requires a convenient diagram, so the facet
    /// cones cover the positive orthant.
    pub fn weight(&self, v: &[Rat]) -> Result<Rat, NewtonError> {
        if !self.convenient {
            return Err(NewtonError::NotConvenient);
        }
        assert_eq!(v.len(), self.num_vars);
        let mut best: Option<Rat> = None;
        for f in &self.facets {
            let num: Rat = f
                .normal
                .iter()
                .zip(v)
                .map(|(l, x)| Rat::from_integer(l.clone()) * x)
                .sum();
            let w = num / Rat::from_integer(f.level.clone());
            if best.as_ref().is_none_or(|b| &w < b) {
                best = Some(w);
            }
        }
        Ok(best.expect("convenient diagram has at least one facet"))
    }

    /// Weight of the shifted lattice point `m + (1, ..., 1)`.
    pub fn weight_of_shifted(&self, m: &ExpVec) -> Result<Rat, NewtonError> {
        let v: Vec<Rat> = m.0.iter().map(|&k| rat_int(k as i64 + 1)).collect();
        self.weight(&v)
    }

    /// The smallest spectral candidate: the weight of `(1, ..., 1)`.
    pub fn lct(&self) -> Result<Rat, NewtonError> {
        let ones = vec![Rat::from_integer(1.into()); self.num_vars];
        self.weight(&ones)
    }

    /// The part of the spectrum in `(0, 1]`: weights of all shifted lattice
    /// points that are at most 1. Finite because the region under the diagram
    /// is bounded.
    pub fn spectrum_unit_part(&self) -> Result<SpectralSet, NewtonError> {
        if !self.convenient {
            return Err(NewtonError::NotConvenient);
        }
        // Componentwise bound: v_i <= max over facets of level / normal_i.
        let one = Rat::from_integer(1.into());
        let mut bounds: Vec<u64> = Vec::with_capacity(self.num_vars);
        for i in 0..self.num_vars {
            let mut hi = BigInt::zero();
            for f in &self.facets {
                let q = f.level.div_ceil(&f.normal[i]);
                if q > hi {
                    hi = q;
                }
            }
            bounds.push(u64::try_from(hi).unwrap_or(u64::MAX));
        }
        let mut values: Vec<Rat> = Vec::new();
        let mut cursor = vec![1u64; self.num_vars];
        'outer: loop {
            let v: Vec<Rat> = cursor.iter().map(|&k| rat_int(k as i64)).collect();
            let w = self.weight(&v)?;
            if w <= one {
                values.push(w);
            }
            // Odometer over the box [1, bound_i].
            for i in 0..self.num_vars {
                if cursor[i] < bounds[i] {
                    cursor[i] += 1;
                    continue 'outer;
                }
                cursor[i] = 1;
            }
            break;
        }
        Ok(SpectralSet::from_values(self.num_vars, values))
    }
}

/// Full spectrum of a convenient Newton-nondegenerate germ: Newton weights of
/// the shifted monomial basis of the Milnor algebra, post-validated against
/// symmetry, range, and the `(0,1]` part from the diagram alone.
pub fn nondegenerate_spectrum(f: &Poly) -> Result<SpectralSet, NewtonError> {
    nondegenerate_spectrum_with(f, DEFAULT_STAIRCASE_LIMIT)
}

pub fn nondegenerate_spectrum_with(f: &Poly, limit: usize) -> Result<SpectralSet, NewtonError> {
    let supp = f.support();
    if supp.is_empty() {
        return Err(NewtonError::NotIsolated);
    }
    if supp.iter().any(|v| v.is_constant()) {
        // A constant term has no Newton diagram at the origin; let the local
        // route produce its germ error.
        return Err(NewtonError::Local(LocalError::NotACriticalGerm(
            crate::rat::format_rat(&f.constant_term()),
        )));
    }
    let p = newton_polyhedron(&supp);
    if !p.convenient {
        return Err(NewtonError::NotConvenient);
    }
    let milnor = milnor_number_with(f, LocalOrder::NegDegRevLex, limit)?;
    let basis = match milnor.mu {
        Milnor::Finite(_) => milnor.basis,
        Milnor::Infinite => return Err(NewtonError::NotIsolated),
    };
    let mut values = Vec::with_capacity(basis.len());
    for m in &basis {
        values.push(p.weight_of_shifted(m)?);
    }
    let set = SpectralSet::from_values(f.num_vars(), values);
    let unit_part_ok = {
        // The diagram enumeration agrees with the spectrum below 1, and at
        // weight exactly 1 from two variables up. In one variable the range
        // axiom keeps 1 out of the spectrum, while the lattice point at the
        // axis intercept always has weight 1.
        let one = Rat::from_integer(1.into());
        let expected = p.spectrum_unit_part()?;
        let restrict = |s: &SpectralSet, include_one: bool| {
            SpectralSet::from_entries(
                f.num_vars(),
                s.entries()
                    .iter()
                    .filter(|(a, _)| {
                        a > &Rat::zero() && if include_one { a <= &one } else { a < &one }
                    })
                    .cloned()
                    .collect::<Vec<_>>(),
            )
        };
        let include_one = f.num_vars() >= 2;
        restrict(&expected, include_one) == restrict(&set, include_one)
    };
    if !set.check_symmetry() || !set.check_range() || !unit_part_ok {
        let raw = set
            .entries()
            .iter()
            .map(|(a, m)| format!("{}x{}", m, format_rat(a)))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(NewtonError::BasisIncompatible { raw });
    }
    Ok(set)
}
