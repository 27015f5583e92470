//! The three construction recipes at the level of torsion data.
//!
//! A configuration is represented by its torsion shadow: the line t = P(F\[p\])
//! of the auxiliary curve, its position relative to the factor lines r and s,
//! and the degrees of the two isogenies out of it. The enumeration operations
//! list all admissible graph lines for each construction.

use alloc::vec::Vec;
use core::fmt;

use crate::alpha::{enumerate_antisymplectic, graph_line, AlphaMap, GraphLine};
use crate::classify::{Recipe, RecipeKind};
use crate::fp::{gcd, validate_modulus, MAX_MODULUS};
use crate::geom::{LineRelation, ProjLine, ProjPoint};
use crate::Error;

/// Degrees of the two isogenies φ: F → E and φ': F → E'. Their kernels are
/// understood to intersect trivially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsogenyDatum {
    pub deg_phi: u64,
    pub deg_phi_prime: u64,
}

impl IsogenyDatum {
    pub fn new(deg_phi: u64, deg_phi_prime: u64) -> Result<Self, Error> {
        if deg_phi == 0 || deg_phi_prime == 0 {
            return Err(Error::InvalidWitness("isogeny degrees must be positive"));
        }
        if deg_phi > MAX_MODULUS || deg_phi_prime > MAX_MODULUS {
            return Err(Error::InvalidWitness(
                "isogeny degree out of supported range",
            ));
        }
        Ok(IsogenyDatum {
            deg_phi,
            deg_phi_prime,
        })
    }

    pub fn sum(&self) -> u64 {
        self.deg_phi + self.deg_phi_prime
    }
}

/// Position of the line t relative to the factor lines r and s.
///
/// The order of F ∩ ({0} x E') is deg φ and the order of F ∩ (E x {0}) is
/// deg φ', so t meets s exactly when p | deg φ and meets r exactly when
/// p | deg φ'. Divisibility alone cannot separate Meet from Equal (that needs
/// the p-group structure of the intersection), so the derived rule reports
/// Meet and callers model the coincident case explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TPosition {
    pub rel_r: LineRelation,
    pub rel_s: LineRelation,
}

/// Derives the position of t from the isogeny degrees.
pub fn t_position(p: u64, iso: &IsogenyDatum) -> Result<TPosition, Error> {
    validate_modulus(p)?;
    let rel = |deg: u64| {
        if deg.is_multiple_of(p) {
            LineRelation::Meet
        } else {
            LineRelation::Skew
        }
    };
    Ok(TPosition {
        rel_r: rel(iso.deg_phi_prime),
        rel_s: rel(iso.deg_phi),
    })
}

/// Case labels for p = 2, by the parities of (deg φ, deg φ').
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// Both degrees odd: r, s, t mutually skew.
    BothOdd,
    /// Both degrees even: t meets both r and s.
    BothEven,
    /// One degree even and t coincides with the corresponding factor line.
    EqualLine,
    /// One degree even and t meets the corresponding factor line in a single
    /// point.
    CoplanarDistinct,
}

impl Scenario {
    /// The generic scenario for the given degrees; the coincident case must
    /// be requested explicitly since parity cannot see it.
    pub fn generic_from_degrees(iso: &IsogenyDatum) -> Scenario {
        match (
            iso.deg_phi.is_multiple_of(2),
            iso.deg_phi_prime.is_multiple_of(2),
        ) {
            (false, false) => Scenario::BothOdd,
            (true, true) => Scenario::BothEven,
            _ => Scenario::CoplanarDistinct,
        }
    }

    /// Whether the label is consistent with the parities of the degrees.
    pub fn matches_degrees(&self, iso: &IsogenyDatum) -> bool {
        let phi_even = iso.deg_phi.is_multiple_of(2);
        let prime_even = iso.deg_phi_prime.is_multiple_of(2);
        match self {
            Scenario::BothOdd => !phi_even && !prime_even,
            Scenario::BothEven => phi_even && prime_even,
            Scenario::EqualLine | Scenario::CoplanarDistinct => phi_even != prime_even,
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scenario::BothOdd => write!(f, "both-odd"),
            Scenario::BothEven => write!(f, "both-even"),
            Scenario::EqualLine => write!(f, "equal-line"),
            Scenario::CoplanarDistinct => write!(f, "coplanar-distinct"),
        }
    }
}

/// A failed precondition of the degree-sum construction, carrying the first
/// predicate that does not hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    BaseDegreeOutOfRange { n: u64 },
    TargetDegreeOutOfRange { d: u64 },
    DegreeSumMismatch { sum: u64, expected: u64 },
    NotCoprime { n: u64, deg_phi: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BaseDegreeOutOfRange { n } => {
                write!(
                    f,
                    "n = {n} must be at least 2 and within the supported range"
                )
            }
            Violation::TargetDegreeOutOfRange { d } => {
                write!(
                    f,
                    "d = {d} must be at least 2 and within the supported range"
                )
            }
            Violation::DegreeSumMismatch { sum, expected } => {
                write!(f, "deg φ + deg φ' = {sum}, expected {expected}")
            }
            Violation::NotCoprime { n, deg_phi } => {
                write!(f, "gcd({n}, {deg_phi}) > 1")
            }
        }
    }
}

/// Validates the data of the degree-sum construction: deg φ + deg φ' = n d
/// with n coprime to deg φ. On success the recipe has ν = 1 and twisting
/// number m = deg φ.
pub fn validate_ex1(n: u64, d: u64, iso: &IsogenyDatum) -> Result<Recipe, Violation> {
    if !(2..=MAX_MODULUS).contains(&n) {
        return Err(Violation::BaseDegreeOutOfRange { n });
    }
    if !(2..=MAX_MODULUS).contains(&d) {
        return Err(Violation::TargetDegreeOutOfRange { d });
    }
    if iso.sum() != n * d {
        return Err(Violation::DegreeSumMismatch {
            sum: iso.sum(),
            expected: n * d,
        });
    }
    if gcd(n, iso.deg_phi) != 1 {
        return Err(Violation::NotCoprime {
            n,
            deg_phi: iso.deg_phi,
        });
    }
    Ok(Recipe {
        kind: RecipeKind::Ex1,
        p: n,
        d,
        m: iso.deg_phi,
        nu: 1,
        deg_phi: iso.deg_phi,
        deg_phi_prime: iso.deg_phi_prime,
    })
}

/// All isotropic graph lines through the witness point v, distinct from t.
///
/// Preconditions: v lies on t but on neither factor line, and t is neither
/// factor line. The result is nonempty whenever they hold.
pub fn enumerate_h_exp(p: u64, t: &ProjLine, v: &ProjPoint) -> Result<Vec<GraphLine>, Error> {
    validate_modulus(p)?;
    if t.modulus() != p || v.modulus() != p {
        return Err(Error::ModulusMismatch {
            left: p,
            right: if t.modulus() != p {
                t.modulus()
            } else {
                v.modulus()
            },
        });
    }
    let r = ProjLine::line_r(p)?;
    let s = ProjLine::line_s(p)?;
    if *t == r || *t == s {
        return Err(Error::InvalidWitness(
            "t must differ from both factor lines",
        ));
    }
    if !t.contains(v) {
        return Err(Error::InvalidWitness("witness point must lie on t"));
    }
    if r.contains(v) || s.contains(v) {
        return Err(Error::InvalidWitness(
            "witness point must avoid both factor lines",
        ));
    }
    let mut out = Vec::new();
    for alpha in enumerate_antisymplectic(p)? {
        let g = graph_line(&alpha);
        if g.contains(v) && g.line() != t {
            out.push(g);
        }
    }
    Ok(out)
}

/// All isotropic graph lines disjoint from t (as projective lines).
pub fn enumerate_h_exp2(p: u64, t: &ProjLine) -> Result<Vec<GraphLine>, Error> {
    validate_modulus(p)?;
    if t.modulus() != p {
        return Err(Error::ModulusMismatch {
            left: p,
            right: t.modulus(),
        });
    }
    let mut out = Vec::new();
    for alpha in enumerate_antisymplectic(p)? {
        let g = graph_line(&alpha);
        if g.line().relation(t)? == LineRelation::Skew {
            out.push(g);
        }
    }
    Ok(out)
}

/// The degree of the induced elliptic map: ν (deg φ + deg φ') / p, defined
/// when p divides the product.
pub fn fbar_theta_degree(p: u64, nu: u64, iso: &IsogenyDatum) -> Result<u64, Error> {
    validate_modulus(p)?;
    if nu != 1 && nu != p && nu != p * p {
        return Err(Error::InvalidWitness("nu must be one of 1, p, p^2"));
    }
    let product = nu
        .checked_mul(iso.sum())
        .ok_or(Error::Inconsistent("nu times the degree sum overflows"))?;
    if !product.is_multiple_of(p) {
        return Err(Error::Inconsistent(
            "p does not divide nu * (deg φ + deg φ')",
        ));
    }
    Ok(product / p)
}

/// A concrete line t realizing the position and isotropy that the isogeny
/// degrees force: t meets s iff p | deg φ, meets r iff p | deg φ', and is
/// isotropic iff p divides deg φ + deg φ' (the form restricted to F\[p\] is the
/// degree sum times the form of F).
pub fn witness_line(p: u64, iso: &IsogenyDatum) -> Result<ProjLine, Error> {
    validate_modulus(p)?;
    let meets_s = iso.deg_phi.is_multiple_of(p);
    let meets_r = iso.deg_phi_prime.is_multiple_of(p);
    let isotropic = iso.sum().is_multiple_of(p);
    match (meets_r, meets_s) {
        // Transversals of r and s are always isotropic, matching p | sum.
        (true, true) => ProjLine::from_span_ints([1, 0, 0, 0], [0, 0, 1, 0], p),
        (true, false) => ProjLine::from_span_ints([0, 1, 0, 0], [1, 0, 1, 0], p),
        (false, true) => ProjLine::from_span_ints([1, 0, 1, 0], [0, 0, 0, 1], p),
        (false, false) => {
            // A graph line: isotropic iff its determinant is -1.
            let c = if isotropic { -1 } else { 1 };
            let g = graph_line(&AlphaMap::new([[1, 0], [0, c]], p)?);
            Ok(*g.line())
        }
    }
}

/// A concrete line t for one of the p = 2 case labels.
pub fn scenario_witness_line(p: u64, scenario: Scenario) -> Result<ProjLine, Error> {
    if p != 2 {
        return Err(Error::OutOfScope("scenario labels apply to p = 2"));
    }
    match scenario {
        Scenario::BothOdd => ProjLine::from_span_ints([1, 0, 1, 0], [0, 1, 0, 1], 2),
        Scenario::BothEven => ProjLine::from_span_ints([1, 0, 0, 0], [0, 0, 1, 0], 2),
        Scenario::EqualLine => ProjLine::line_r(2),
        Scenario::CoplanarDistinct => ProjLine::from_span_ints([0, 1, 0, 0], [1, 0, 1, 0], 2),
    }
}

/// The first point of t lying on neither factor line, in canonical order.
pub fn witness_point(t: &ProjLine) -> Result<ProjPoint, Error> {
    let r = ProjLine::line_r(t.modulus())?;
    let s = ProjLine::line_s(t.modulus())?;
    t.points()
        .into_iter()
        .find(|pt| !r.contains(pt) && !s.contains(pt))
        .ok_or(Error::InvalidWitness("t has no point off the factor lines"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::enumerate_lines;

    #[test]
    fn validate_ex1_examples() {
        // (n=2, d=3): degrees 1 + 5 = 6, gcd(2,1) = 1, twisting number 1
        let r = validate_ex1(2, 3, &IsogenyDatum::new(1, 5).unwrap()).unwrap();
        assert_eq!((r.m, r.nu, r.deg_phi, r.deg_phi_prime), (1, 1, 1, 5));
        // degrees 2 + 4: sum fine, coprimality fails
        assert_eq!(
            validate_ex1(2, 3, &IsogenyDatum::new(2, 4).unwrap()),
            Err(Violation::NotCoprime { n: 2, deg_phi: 2 })
        );
        // degrees 3 + 3: twisting number 3
        let r = validate_ex1(2, 3, &IsogenyDatum::new(3, 3).unwrap()).unwrap();
        assert_eq!(r.m, 3);
        // wrong sum reported first
        assert_eq!(
            validate_ex1(2, 3, &IsogenyDatum::new(1, 4).unwrap()),
            Err(Violation::DegreeSumMismatch {
                sum: 5,
                expected: 6
            })
        );
        assert_eq!(
            validate_ex1(1, 3, &IsogenyDatum::new(1, 2).unwrap()),
            Err(Violation::BaseDegreeOutOfRange { n: 1 })
        );
    }

    #[test]
    fn t_position_examples() {
        let skew = TPosition {
            rel_r: LineRelation::Skew,
            rel_s: LineRelation::Skew,
        };
        assert_eq!(
            t_position(2, &IsogenyDatum::new(1, 5).unwrap()).unwrap(),
            skew
        );
        assert_eq!(
            t_position(3, &IsogenyDatum::new(1, 5).unwrap()).unwrap(),
            skew
        );
        let both = t_position(2, &IsogenyDatum::new(2, 4).unwrap()).unwrap();
        assert_eq!(both.rel_r, LineRelation::Meet);
        assert_eq!(both.rel_s, LineRelation::Meet);
        // deg φ' even only: t meets r
        let mixed = t_position(2, &IsogenyDatum::new(1, 2).unwrap()).unwrap();
        assert_eq!(mixed.rel_r, LineRelation::Meet);
        assert_eq!(mixed.rel_s, LineRelation::Skew);
    }

    #[test]
    fn witness_line_realizes_position_and_isotropy() {
        for p in [2u64, 3, 5] {
            let r = ProjLine::line_r(p).unwrap();
            let s = ProjLine::line_s(p).unwrap();
            for deg_phi in 1..=6 {
                for deg_phi_prime in 1..=6 {
                    let iso = IsogenyDatum::new(deg_phi, deg_phi_prime).unwrap();
                    let t = witness_line(p, &iso).unwrap();
                    let pos = t_position(p, &iso).unwrap();
                    assert_eq!(t.relation(&r).unwrap(), pos.rel_r, "p={p} {iso:?}");
                    assert_eq!(t.relation(&s).unwrap(), pos.rel_s, "p={p} {iso:?}");
                    assert_eq!(
                        t.is_isotropic(),
                        iso.sum().is_multiple_of(p),
                        "p={p} {iso:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn h_exp_counts_mod_2() {
        // t meeting a factor line: both graph lines through v remain.
        let iso = IsogenyDatum::new(1, 2).unwrap();
        let t = witness_line(2, &iso).unwrap();
        let v = witness_point(&t).unwrap();
        let found = enumerate_h_exp(2, &t, &v).unwrap();
        assert_eq!(found.len(), 2);
        for g in &found {
            assert!(g.line().is_isotropic());
            assert!(g.contains(&v));
            assert_ne!(g.line(), &t);
        }

        // t skew to both factor lines: t is itself one of the two graph
        // lines through v, so exactly one other remains.
        let iso = IsogenyDatum::new(1, 1).unwrap();
        let t = witness_line(2, &iso).unwrap();
        let v = witness_point(&t).unwrap();
        assert_eq!(enumerate_h_exp(2, &t, &v).unwrap().len(), 1);
    }

    #[test]
    fn h_exp_matches_brute_force() {
        for p in [2u64, 3] {
            for (deg_phi, deg_phi_prime) in [(1, 1), (1, 2), (2, 1), (1, 5), (2, 4), (3, 3)] {
                let iso = IsogenyDatum::new(deg_phi, deg_phi_prime).unwrap();
                let t = witness_line(p, &iso).unwrap();
                let v = witness_point(&t).unwrap();
                let got = enumerate_h_exp(p, &t, &v).unwrap();
                // Oracle: filter the full line list directly.
                let r = ProjLine::line_r(p).unwrap();
                let s = ProjLine::line_s(p).unwrap();
                let expected = enumerate_lines(p)
                    .unwrap()
                    .into_iter()
                    .filter(|l| {
                        l.is_isotropic()
                            && l.contains(&v)
                            && *l != t
                            && l.relation(&r).unwrap() == LineRelation::Skew
                            && l.relation(&s).unwrap() == LineRelation::Skew
                    })
                    .count();
                assert_eq!(got.len(), expected, "p={p} {iso:?}");
                assert!(!got.is_empty(), "existence for p={p} {iso:?}");
            }
        }
    }

    #[test]
    fn h_exp_pencil_count_mod_3_and_5() {
        // For odd p the isotropic lines through v off the factor lines number
        // p, minus one when t is itself such a line.
        for p in [3u64, 5] {
            let skew_iso = IsogenyDatum::new(1, p * 2 - 1).unwrap(); // sum = 2p, isotropic t
            let t = witness_line(p, &skew_iso).unwrap();
            assert!(t.is_isotropic());
            let v = witness_point(&t).unwrap();
            assert_eq!(enumerate_h_exp(p, &t, &v).unwrap().len(), p as usize - 1);

            let skew_noniso = IsogenyDatum::new(1, 1).unwrap(); // sum = 2, non-isotropic for odd p
            let t = witness_line(p, &skew_noniso).unwrap();
            assert!(!t.is_isotropic());
            let v = witness_point(&t).unwrap();
            assert_eq!(enumerate_h_exp(p, &t, &v).unwrap().len(), p as usize);
        }
    }

    #[test]
    fn h_exp_rejects_bad_witness() {
        let t = witness_line(2, &IsogenyDatum::new(1, 2).unwrap()).unwrap();
        let on_r = ProjPoint::from_ints([0, 1, 0, 0], 2).unwrap();
        assert!(t.contains(&on_r));
        assert_eq!(
            enumerate_h_exp(2, &t, &on_r).unwrap_err(),
            Error::InvalidWitness("witness point must avoid both factor lines")
        );
        let off_t = ProjPoint::from_ints([0, 0, 1, 1], 2).unwrap();
        assert_eq!(
            enumerate_h_exp(2, &t, &off_t).unwrap_err(),
            Error::InvalidWitness("witness point must lie on t")
        );
        let r = ProjLine::line_r(2).unwrap();
        let v = ProjPoint::from_ints([1, 0, 1, 0], 2).unwrap();
        assert_eq!(
            enumerate_h_exp(2, &r, &v).unwrap_err(),
            Error::InvalidWitness("t must differ from both factor lines")
        );
    }

    #[test]
    fn h_exp2_scenario_counts_mod_2() {
        let cases = [
            (Scenario::BothOdd, 2usize),
            (Scenario::BothEven, 4),
            (Scenario::EqualLine, 6),
            (Scenario::CoplanarDistinct, 2),
        ];
        for (scenario, expected) in cases {
            let t = scenario_witness_line(2, scenario).unwrap();
            let found = enumerate_h_exp2(2, &t).unwrap();
            assert_eq!(found.len(), expected, "{scenario}");
            for g in &found {
                assert_eq!(g.line().relation(&t).unwrap(), LineRelation::Skew);
                assert!(g.line().is_isotropic());
            }
        }
        assert_eq!(
            scenario_witness_line(3, Scenario::BothOdd).unwrap_err(),
            Error::OutOfScope("scenario labels apply to p = 2")
        );
    }

    #[test]
    fn h_exp2_counts_invariant_under_factor_swap() {
        // Swapping the two factors maps graphs to graphs; the counts for the
        // mirrored witness lines agree.
        let swap = |l: &ProjLine| {
            let b = l.basis();
            let c0 = b[0].raw();
            let c1 = b[1].raw();
            ProjLine::from_span_ints(
                [c0[2] as i64, c0[3] as i64, c0[0] as i64, c0[1] as i64],
                [c1[2] as i64, c1[3] as i64, c1[0] as i64, c1[1] as i64],
                2,
            )
            .unwrap()
        };
        for scenario in [
            Scenario::BothOdd,
            Scenario::BothEven,
            Scenario::EqualLine,
            Scenario::CoplanarDistinct,
        ] {
            let t = scenario_witness_line(2, scenario).unwrap();
            let mirrored = swap(&t);
            assert_eq!(
                enumerate_h_exp2(2, &t).unwrap().len(),
                enumerate_h_exp2(2, &mirrored).unwrap().len(),
                "{scenario}"
            );
        }
    }

    #[test]
    fn h_exp2_double_counting_mod_2() {
        // Mod 2 every graph line is isotropic, so the result must equal the
        // set of all lines disjoint from r, s and t.
        let r = ProjLine::line_r(2).unwrap();
        let s = ProjLine::line_s(2).unwrap();
        for scenario in [
            Scenario::BothOdd,
            Scenario::BothEven,
            Scenario::CoplanarDistinct,
        ] {
            let t = scenario_witness_line(2, scenario).unwrap();
            let direct = enumerate_lines(2)
                .unwrap()
                .into_iter()
                .filter(|l| {
                    [&r, &s, &t]
                        .iter()
                        .all(|fixed| l.relation(fixed).unwrap() == LineRelation::Skew)
                })
                .count();
            assert_eq!(enumerate_h_exp2(2, &t).unwrap().len(), direct, "{scenario}");
        }
    }

    #[test]
    fn all_returned_lines_are_isotropic_graphs() {
        for p in [2u64, 3, 5] {
            let iso = IsogenyDatum::new(1, 2).unwrap();
            let t = witness_line(p, &iso).unwrap();
            let v = witness_point(&t).unwrap();
            for g in enumerate_h_exp(p, &t, &v).unwrap() {
                assert!(g.line().is_isotropic());
                assert_eq!(crate::alpha::line_to_alpha(g.line()).unwrap(), *g.alpha());
            }
            for g in enumerate_h_exp2(p, &t).unwrap() {
                assert!(g.line().is_isotropic());
                assert_eq!(crate::alpha::line_to_alpha(g.line()).unwrap(), *g.alpha());
            }
        }
    }

    #[test]
    fn h_exp2_lower_bound_odd_p() {
        // With r, s, t mutually skew at least
        // (p+1)(p^2+1) - 2(p+1)^2 graphs survive.
        for p in [3u64, 5] {
            let t = witness_line(p, &IsogenyDatum::new(1, 1).unwrap()).unwrap();
            let found = enumerate_h_exp2(p, &t).unwrap().len() as i64;
            let bound = (p as i64 + 1) * ((p * p) as i64 + 1) - 2 * (p as i64 + 1).pow(2);
            assert!(bound > 0);
            assert!(found >= bound, "p={p}: {found} >= {bound}");
        }
    }

    #[test]
    fn fbar_theta_degree_examples() {
        // degree-sum construction at n=2, d=3
        assert_eq!(
            fbar_theta_degree(2, 1, &IsogenyDatum::new(1, 5).unwrap()).unwrap(),
            3
        );
        // order-p construction: sum = d
        assert_eq!(
            fbar_theta_degree(2, 2, &IsogenyDatum::new(1, 2).unwrap()).unwrap(),
            3
        );
        // order-p^2 construction: sum = δ, d = p δ
        assert_eq!(
            fbar_theta_degree(2, 4, &IsogenyDatum::new(1, 1).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            fbar_theta_degree(2, 1, &IsogenyDatum::new(1, 2).unwrap()).unwrap_err(),
            Error::Inconsistent("p does not divide nu * (deg φ + deg φ')")
        );
        assert_eq!(
            fbar_theta_degree(2, 3, &IsogenyDatum::new(1, 1).unwrap()).unwrap_err(),
            Error::InvalidWitness("nu must be one of 1, p, p^2")
        );
    }

    #[test]
    fn scenario_labels() {
        let d12 = IsogenyDatum::new(1, 2).unwrap();
        assert_eq!(
            Scenario::generic_from_degrees(&d12),
            Scenario::CoplanarDistinct
        );
        assert!(Scenario::EqualLine.matches_degrees(&d12));
        assert!(!Scenario::BothOdd.matches_degrees(&d12));
        assert_eq!(
            Scenario::generic_from_degrees(&IsogenyDatum::new(3, 3).unwrap()),
            Scenario::BothOdd
        );
        assert_eq!(
            Scenario::generic_from_degrees(&IsogenyDatum::new(2, 4).unwrap()),
            Scenario::BothEven
        );
    }
}
