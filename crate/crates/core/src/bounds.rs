//! Arnold numbers, Fermat spectra, classical node bounds, and the
//! semicontinuity engine for singularity configurations on projective
//! hypersurfaces.
//!
//! The central inequality compares, for every unit interval, the number of
//! spectral numbers of a configuration of germs against the spectrum of the
//! Fermat germ of the same degree. Both counts are piecewise constant in the
//! interval endpoint with breakpoints only at spectral numbers and spectral
//! numbers minus one, so scanning breakpoints and the midpoints between them
//! replaces the quantification over all real endpoints by a finite exact one.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rat::{format_rat, rat, rat_int, Rat};
use crate::spectrum::{IntervalKind, SpectralSet};
use crate::weights::bp_spectrum;

/// A bound problem: hypersurface of degree `d` in projective `n`-space, with
/// local germs in `n` variables, counted on open or half-open intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundProblem {
    pub n: usize,
    pub d: u64,
    pub kind: IntervalKind,
}

/// One scanned interval endpoint with both counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub alpha: Rat,
    pub fermat: u64,
    pub config: u64,
}

/// Result of checking a configuration against the Fermat spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub feasible: bool,
    /// Endpoint with the largest configuration-minus-Fermat deficit;
    /// breakpoints win ties over midpoints, then smaller endpoints win.
    pub worst_alpha: Rat,
    pub fermat_count: u64,
    pub config_count: u64,
    /// Counts at every breakpoint (entries and entries minus one of all
    /// participating spectra).
    pub table: Vec<BoundRow>,
}

/// Outcome of maximizing copies of one germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaxCopies {
    Bounded(u64),
    /// Reserved: cannot occur for a nonempty germ spectrum, because some
    /// interval always captures one of its entries.
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{bound} bound is not defined for degree {d}: {reason}")]
    Domain {
        bound: &'static str,
        d: u64,
        reason: String,
    },
}

/// Exact lattice count
/// `#{ k in (0,d)^n : nd/2 - d + 1 < sum k_i <= nd/2 }`,
/// with the half-integer bounds compared exactly.
pub fn arnold_number(n: usize, d: u64) -> BigUint {
    if d < 2 || n == 0 {
        return BigUint::zero();
    }
    // Coefficients of (x + ... + x^{d-1})^n by iterated convolution.
    let dm1 = (d - 1) as usize;
    let mut coeffs: Vec<BigUint> = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); coeffs.len() + dm1];
        for (s, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for k in 1..=dm1 {
                next[s + k] += c;
            }
        }
        coeffs = next;
    }
    let half_nd = rat((n as i64) * (d as i64), 2);
    let lower = &half_nd - rat_int(d as i64) + rat_int(1);
    let s_min_int = (lower.floor().to_integer() + BigInt::one()).max(BigInt::zero());
    let s_min = s_min_int.to_usize().unwrap_or(usize::MAX);
    let s_max = half_nd
        .floor()
        .to_integer()
        .to_usize()
        .unwrap_or(0)
        .min(coeffs.len() - 1);
    let mut total = BigUint::zero();
    if s_min <= s_max {
        for c in &coeffs[s_min..=s_max] {
            total += c;
        }
    }
    total
}

/// The closed-form cubic for three variables, split by parity of `d`.
pub fn arnold_closed_form_3(d: u64) -> Rat {
    let d = rat_int(d as i64);
    let d2 = &d * &d;
    let d3 = &d2 * &d;
    if (&d % rat_int(2)).is_zero() {
        rat(23, 48) * &d3 - rat(9, 8) * &d2 + rat(5, 6) * &d
    } else {
        rat(23, 48) * &d3 - rat(23, 16) * &d2 + rat(73, 48) * &d - rat(9, 16)
    }
}

/// Spectrum of the degree-`d` Fermat germ in `n` variables.
pub fn fermat_spectrum(n: usize, d: u64) -> SpectralSet {
    assert!(n >= 1 && d >= 2);
    bp_spectrum(&vec![d; n])
}

/// All entries and entries-minus-one across the sets, deduplicated and
/// sorted, with the midpoints of consecutive values merged in. Every
/// piecewise-constant interval-count function attains all its values on this
/// candidate list.
pub fn breakpoints(sets: &[&SpectralSet]) -> Vec<Rat> {
    let (bps, mids) = breakpoints_split(sets);
    let mut all = bps;
    all.extend(mids);
    all.sort();
    all.dedup();
    all
}

fn breakpoints_split(sets: &[&SpectralSet]) -> (Vec<Rat>, Vec<Rat>) {
    let mut bps: Vec<Rat> = Vec::new();
    for s in sets {
        for (a, _) in s.entries() {
            bps.push(a.clone());
            bps.push(a - rat_int(1));
        }
    }
    bps.sort();
    bps.dedup();
    let mids = bps
        .windows(2)
        .map(|w| (&w[0] + &w[1]) / rat_int(2))
        .collect();
    (bps, mids)
}

fn config_count(gs: &[&SpectralSet], alpha: &Rat, kind: IntervalKind) -> u64 {
    gs.iter().map(|g| g.interval_count(alpha, kind)).sum()
}

/// Largest number of disjoint copies of the germ `g` the Fermat spectrum
/// admits: the minimum over candidate endpoints of the floor ratio of the
/// two interval counts.
pub fn max_copies(g: &SpectralSet, p: &BoundProblem) -> MaxCopies {
    assert!(!g.is_empty(), "max_copies needs a nonempty germ spectrum");
    let fermat = fermat_spectrum(p.n, p.d);
    let candidates = breakpoints(&[g, &fermat]);
    let mut best: Option<u64> = None;
    for alpha in &candidates {
        let cg = g.interval_count(alpha, p.kind);
        if cg == 0 {
            continue;
        }
        let cf = fermat.interval_count(alpha, p.kind);
        let q = cf / cg;
        if best.is_none_or(|b| q < b) {
            best = Some(q);
        }
    }
    match best {
        Some(b) => MaxCopies::Bounded(b),
        None => MaxCopies::Unbounded,
    }
}

/// Check a configuration of germs against the Fermat spectrum on every
/// candidate interval.
pub fn check_configuration(gs: &[&SpectralSet], p: &BoundProblem) -> BoundReport {
    let fermat = fermat_spectrum(p.n, p.d);
    let mut participating: Vec<&SpectralSet> = gs.to_vec();
    participating.push(&fermat);
    let (bps, mids) = breakpoints_split(&participating);

    let mut feasible = true;
    let mut worst: Option<(BigInt, Rat, u64, u64)> = None;
    let mut table = Vec::with_capacity(bps.len());
    // Breakpoints are scanned before midpoints so that on ties the reported
    // witness is a breakpoint; within each class smaller endpoints win.
    for (is_breakpoint, alpha) in bps
        .iter()
        .map(|a| (true, a))
        .chain(mids.iter().map(|a| (false, a)))
    {
        let cf = fermat.interval_count(alpha, p.kind);
        let cc = config_count(gs, alpha, p.kind);
        if cc > cf {
            feasible = false;
        }
        let deficit = BigInt::from(cc) - BigInt::from(cf);
        if worst.as_ref().is_none_or(|(w, _, _, _)| &deficit > w) {
            worst = Some((deficit, alpha.clone(), cf, cc));
        }
        if is_breakpoint {
            table.push(BoundRow {
                alpha: alpha.clone(),
                fermat: cf,
                config: cc,
            });
        }
    }
    let (_, worst_alpha, fermat_count, config_count) =
        worst.unwrap_or((BigInt::zero(), Rat::zero(), 0, 0));
    BoundReport {
        feasible,
        worst_alpha,
        fermat_count,
        config_count,
        table,
    }
}

impl BoundReport {
    /// Fixed JSON shape: rationals as `p/q` strings, counts as integers.
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self
            .table
            .iter()
            .map(|r| {
                format!(
                    "{{\"alpha\": \"{}\", \"fermat\": {}, \"config\": {}}}",
                    format_rat(&r.alpha),
                    r.fermat,
                    r.config
                )
            })
            .collect();
        format!(
            "{{\"feasible\": {}, \"worst_alpha\": \"{}\", \"fermat_count\": {}, \"config_count\": {}, \"table\": [{}]}}",
            self.feasible,
            format_rat(&self.worst_alpha),
            self.fermat_count,
            self.config_count,
            rows.join(", ")
        )
    }
}

/// `d(d-1)/2`: the maximal number of nodes on a plane curve of degree `d`.
pub fn plane_curve_bound(d: u64) -> Result<BigUint, BoundsError> {
    if d < 1 {
        return Err(BoundsError::Domain {
            bound: "plane curve",
            d,
            reason: "degree must be at least 1".into(),
        });
    }
    Ok(BigUint::from(d) * BigUint::from(d - 1) / BigUint::from(2u32))
}

/// Smallest integer `t >= 0` with `t^2 >= r`.
fn isqrt_ceil(r: &BigUint) -> BigUint {
    let s = r.sqrt();
    if &(&s * &s) == r {
        s
    } else {
        s + BigUint::one()
    }
}

/// The 1906 surface bound `(d(d-1)^2 - 5 - sqrt(d(d-1)(3d-14)+25)) / 2`,
/// rounded down with exact integer square roots.
pub fn basset_bound(d: u64) -> Result<BigInt, BoundsError> {
    if d < 3 {
        return Err(BoundsError::Domain {
            bound: "Basset",
            d,
            reason: "degree must be at least 3".into(),
        });
    }
    let db = BigInt::from(d);
    let radicand: BigInt = &db * (&db - 1) * (BigInt::from(3u32) * &db - 14) + 25;
    if radicand.is_negative() {
        return Err(BoundsError::Domain {
            bound: "Basset",
            d,
            reason: format!("radicand {} is negative", radicand),
        });
    }
    let a: BigInt = &db * (&db - 1) * (&db - 1) - 5;
    let t = BigInt::from(isqrt_ceil(&radicand.to_biguint().unwrap()));
    // floor((a - sqrt(radicand)) / 2) = floor((a - ceil(sqrt)) / 2).
    Ok((a - t).div_floor(&BigInt::from(2)))
}

/// `4/9 d(d-1)^2` for surfaces of general type, `d >= 4`.
pub fn miyaoka_yau_bound(d: u64) -> Result<Rat, BoundsError> {
    if d < 4 {
        return Err(BoundsError::Domain {
            bound: "Miyaoka-Yau",
            d,
            reason: "degree must be at least 4".into(),
        });
    }
    let db = rat_int(d as i64);
    Ok(rat(4, 9) * &db * (&db - rat_int(1)) * (&db - rat_int(1)))
}

/// All three classical bounds at once; errors on the first bound whose
/// precondition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalBounds {
    pub basset: BigInt,
    pub miyaoka_yau: Rat,
    pub plane_curve: BigUint,
}

pub fn classical_bounds(d: u64) -> Result<ClassicalBounds, BoundsError> {
    Ok(ClassicalBounds {
        basset: basset_bound(d)?,
        miyaoka_yau: miyaoka_yau_bound(d)?,
        plane_curve: plane_curve_bound(d)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1_surface() -> SpectralSet {
        SpectralSet::from_entries(3, [(rat(3, 2), 1)])
    }

    fn bru(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn arnold_numbers_for_surfaces() {
        for (d, expect) in [(3, 4u64), (4, 16), (5, 31), (6, 68), (7, 104)] {
            assert_eq!(arnold_number(3, d), bru(expect), "d = {d}");
        }
    }

    #[test]
    fn closed_form_matches_lattice_count_in_three_variables() {
        for d in 2..=40 {
            let cf = arnold_closed_form_3(d);
            assert!(cf.denom().is_one(), "closed form not integral at d = {d}");
            assert_eq!(
                BigInt::from(arnold_number(3, d)),
                cf.to_integer(),
                "d = {d}"
            );
        }
    }

    #[test]
    fn kalker_binomial_formula_for_cubics() {
        // A_n(3) = C(n+1, floor(n/2))
        fn binom(n: u64, k: u64) -> BigUint {
            let mut r = BigUint::one();
            for i in 0..k {
                r = r * BigUint::from(n - i) / BigUint::from(i + 1);
            }
            r
        }
        for n in 2..=10usize {
            assert_eq!(
                arnold_number(n, 3),
                binom(n as u64 + 1, (n / 2) as u64),
                "n = {n}"
            );
        }
        assert_eq!(arnold_number(3, 3), bru(4));
        assert_eq!(arnold_number(4, 3), bru(10));
        assert_eq!(arnold_number(5, 3), bru(15));
    }

    #[test]
    fn one_variable_row_evaluates_per_definition() {
        // #{k in [1, d-1] : 1 - d/2 < k <= d/2} = floor(d/2).
        for d in 2..=9u64 {
            assert_eq!(arnold_number(1, d), bru(d / 2), "d = {d}");
        }
    }

    #[test]
    fn degenerate_inputs_count_zero() {
        assert_eq!(arnold_number(3, 1), BigUint::zero());
        assert_eq!(arnold_number(0, 5), BigUint::zero());
    }

    #[test]
    fn fermat_spectrum_tables() {
        let f = fermat_spectrum(3, 3);
        let mults: Vec<u64> = f.entries().iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 3, 3, 1]);
        let f = fermat_spectrum(3, 4);
        let mults: Vec<u64> = f.entries().iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 3, 6, 7, 6, 3, 1]);
    }

    #[test]
    fn plane_fermat_has_d_minus_one_ones() {
        for d in 2..=6 {
            let f = fermat_spectrum(2, d);
            assert_eq!(f.mu(), (d - 1) * (d - 1));
            assert_eq!(f.multiplicity(&rat_int(1)), d - 1);
        }
    }

    #[test]
    fn breakpoints_of_singleton() {
        let s = SpectralSet::from_entries(3, [(rat(3, 2), 1)]);
        assert_eq!(
            breakpoints(&[&s]),
            vec![rat(1, 2), rat(1, 1), rat(3, 2)]
        );
        assert!(breakpoints(&[]).is_empty());
    }

    #[test]
    fn node_bounds_on_surfaces() {
        for (d, expect) in [(3, 4u64), (4, 16), (5, 31)] {
            let p = BoundProblem {
                n: 3,
                d,
                kind: IntervalKind::Open,
            };
            assert_eq!(max_copies(&a1_surface(), &p), MaxCopies::Bounded(expect));
        }
    }

    #[test]
    fn cusp_surface_germs_on_a_cubic() {
        // A_2 surface germ {4/3, 5/3}: at most three on a cubic surface.
        let a2 = SpectralSet::from_entries(3, [(rat(4, 3), 1), (rat(5, 3), 1)]);
        let p = BoundProblem {
            n: 3,
            d: 3,
            kind: IntervalKind::Open,
        };
        assert_eq!(max_copies(&a2, &p), MaxCopies::Bounded(3));
    }

    #[test]
    fn a6_is_rejected_on_a_cubic_with_witness_one_third() {
        // sp(A_6 surface germ) = {8/7, ..., 13/7}.
        let a6 = SpectralSet::from_values(3, (1..=6).map(|j| rat(j, 7) + rat_int(1)));
        let p = BoundProblem {
            n: 3,
            d: 3,
            kind: IntervalKind::Open,
        };
        let report = check_configuration(&[&a6], &p);
        assert!(!report.feasible);
        assert_eq!(report.worst_alpha, rat(1, 3));
        assert_eq!(report.config_count, 2);
        assert_eq!(report.fermat_count, 1);
    }

    #[test]
    fn a5_plus_a1_is_allowed_on_a_cubic() {
        let a5 = SpectralSet::from_values(3, (1..=5).map(|j| rat(j, 6) + rat_int(1)));
        let p = BoundProblem {
            n: 3,
            d: 3,
            kind: IntervalKind::Open,
        };
        let report = check_configuration(&[&a5, &a1_surface()], &p);
        assert!(report.feasible);
    }

    #[test]
    fn four_nodes_yes_five_nodes_no_on_a_cubic() {
        let p = BoundProblem {
            n: 3,
            d: 3,
            kind: IntervalKind::Open,
        };
        let a1 = a1_surface();
        let four: Vec<&SpectralSet> = std::iter::repeat_n(&a1, 4).collect();
        assert!(check_configuration(&four, &p).feasible);
        let five: Vec<&SpectralSet> = std::iter::repeat_n(&a1, 5).collect();
        assert!(!check_configuration(&five, &p).feasible);
    }

    #[test]
    fn report_table_is_symmetric_for_open_intervals() {
        let p = BoundProblem {
            n: 3,
            d: 4,
            kind: IntervalKind::Open,
        };
        let report = check_configuration(&[&a1_surface()], &p);
        let reflect = rat_int(p.n as i64 - 1);
        for row in &report.table {
            let mirrored = &reflect - &row.alpha;
            let twin = report
                .table
                .iter()
                .find(|r| r.alpha == mirrored)
                .unwrap_or_else(|| panic!("no mirror row for {}", row.alpha));
            assert_eq!(row.fermat, twin.fermat);
        }
    }

    #[test]
    fn bound_report_json_shape() {
        let p = BoundProblem {
            n: 3,
            d: 3,
            kind: IntervalKind::Open,
        };
        let report = check_configuration(&[&a1_surface()], &p);
        let json = report.to_json();
        assert!(json.starts_with("{\"feasible\": true"));
        assert!(json.contains("\"worst_alpha\": \""));
        assert!(json.contains("\"table\": [{\"alpha\": "));
    }

    #[test]
    fn half_open_bound_is_never_smaller() {
        for d in 3..=6 {
            let open = BoundProblem {
                n: 3,
                d,
                kind: IntervalKind::Open,
            };
            let half = BoundProblem {
                n: 3,
                d,
                kind: IntervalKind::HalfOpenRight,
            };
            let MaxCopies::Bounded(a) = max_copies(&a1_surface(), &open) else {
                panic!()
            };
            let MaxCopies::Bounded(b) = max_copies(&a1_surface(), &half) else {
                panic!()
            };
            assert!(b >= a, "d = {d}: half-open {b} < open {a}");
        }
    }

    #[test]
    fn classical_bound_values() {
        assert_eq!(plane_curve_bound(4).unwrap(), bru(6));
        assert_eq!(plane_curve_bound(1).unwrap(), BigUint::zero());
        // Direct evaluation of 4/9 d(d-1)^2 at d = 14.
        assert_eq!(miyaoka_yau_bound(14).unwrap(), rat(9464, 9));
        assert_eq!(miyaoka_yau_bound(9).unwrap(), rat_int(256));
    }

    #[test]
    fn basset_bound_values() {
        // d = 4: (31 - sqrt(1))/2 = 15; d = 5: (75 - sqrt(45))/2 -> 34.
        assert_eq!(basset_bound(4).unwrap(), BigInt::from(15));
        assert_eq!(basset_bound(5).unwrap(), BigInt::from(34));
        assert_eq!(basset_bound(6).unwrap(), BigInt::from(66));
        // d = 3 has a negative radicand.
        assert!(matches!(
            basset_bound(3),
            Err(BoundsError::Domain { bound: "Basset", .. })
        ));
        assert!(basset_bound(2).is_err());
    }

    #[test]
    fn classical_record_requires_all_preconditions() {
        assert!(classical_bounds(4).is_ok());
        assert!(classical_bounds(3).is_err());
    }
}
