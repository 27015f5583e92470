//! Intersection numbers of curve classes on a product of elliptic curves,
//! the exhaustive smoothness certificate, and the reducibility test for the
//! degree-2 construction.
//!
//! The ambient surface is E x E' with E without complex multiplication and
//! E' = E/<ξ> for a point ξ of order r. Its connected 1-dimensional
//! subgroups other than the factors are the classes D_{a,b} = {(ax, bφ'(x))}
//! with a, b coprime; only the four pairings documented on
//! [`ReferenceClass`] are defined.

use alloc::vec::Vec;
use core::fmt;

use crate::alpha::AlphaMap;
use crate::fp::gcd;
use crate::Error;

/// A class D_{a,b} with a ≥ 0 and gcd(a, b) = 1, in the context of a fixed
/// cyclic kernel order r. The convention gcd(0, b) = |b| forces b = ±1 when
/// a = 0, and D_{a,b} = D_{-a,-b} lets every class be normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DabClass {
    a: u64,
    b: i64,
    r: u64,
}

/// Caps keeping every documented pairing inside u64.
const MAX_COMPONENT: u64 = 10_000;
const MAX_KERNEL_ORDER: u64 = 10_000_000;

impl DabClass {
    pub fn new(a: i64, b: i64, r: u64) -> Result<Self, Error> {
        if r < 3 {
            return Err(Error::InvalidClass("kernel order r must be at least 3"));
        }
        if r > MAX_KERNEL_ORDER
            || a.unsigned_abs() > MAX_COMPONENT
            || b.unsigned_abs() > MAX_COMPONENT
        {
            return Err(Error::InvalidClass("class data out of supported range"));
        }
        // Normalize the sign so that a >= 0, with b = 1 when a = 0.
        let (a, b) = if a < 0 || (a == 0 && b < 0) {
            (-a, -b)
        } else {
            (a, b)
        };
        if a == 0 && b == 0 {
            return Err(Error::InvalidClass("(0, 0) is not a curve class"));
        }
        if gcd(a as u64, b.unsigned_abs()) != 1 {
            return Err(Error::InvalidClass("a and b must be coprime"));
        }
        Ok(DabClass { a: a as u64, b, r })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// δ = gcd(a, r), with δ = r when a = 0: the order of the kernel of the
    /// parametrization E → D_{a,b}.
    pub fn delta(&self) -> u64 {
        if self.a == 0 {
            self.r
        } else {
            gcd(self.a, self.r)
        }
    }

    /// Intersection number against one of the documented reference classes.
    /// All four values are exact integers by construction.
    pub fn intersect(&self, other: ReferenceClass) -> u64 {
        let delta = self.delta();
        let a2 = self.a * self.a;
        let b2 = (self.b * self.b) as u64;
        match other {
            ReferenceClass::D01 => a2 / delta,
            ReferenceClass::D10 => b2 * self.r / delta,
            ReferenceClass::D11 => {
                let diff = self.b - self.a as i64;
                (diff * diff) as u64 * self.r / delta
            }
            ReferenceClass::Xi => (a2 + b2 * self.r) / delta,
        }
    }

    /// Intersection against another D-class, defined only when the other
    /// class is one of the documented ones.
    pub fn intersect_class(&self, other: &DabClass) -> Result<u64, Error> {
        if other.r != self.r {
            return Err(Error::InvalidClass("classes live on different surfaces"));
        }
        let reference = match (other.a, other.b) {
            (0, 1) => ReferenceClass::D01,
            (1, 0) => ReferenceClass::D10,
            (1, 1) => ReferenceClass::D11,
            _ => return Err(Error::UnsupportedPairing),
        };
        Ok(self.intersect(reference))
    }
}

impl fmt::Display for DabClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{})", self.a, self.b)
    }
}

/// The classes against which the pairing is documented: the two factors,
/// the diagonal-type class D_{1,1}, and the product polarization
/// Ξ = D_{1,0} + D_{0,1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceClass {
    /// {0} x E'
    D01,
    /// E x {0}
    D10,
    /// The graph-type class D_{1,1}.
    D11,
    /// The product polarization.
    Xi,
}

/// A formal integer combination of D-classes, paired linearly against the
/// reference classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NsClass {
    terms: Vec<(i64, DabClass)>,
}

impl NsClass {
    pub fn new(terms: Vec<(i64, DabClass)>) -> Result<Self, Error> {
        if let Some(((_, first), rest)) = terms.split_first() {
            for (_, c) in rest {
                if c.r() != first.r() {
                    return Err(Error::InvalidClass("classes live on different surfaces"));
                }
            }
        }
        Ok(NsClass { terms })
    }

    pub fn terms(&self) -> &[(i64, DabClass)] {
        &self.terms
    }

    pub fn intersect(&self, other: ReferenceClass) -> i64 {
        self.terms
            .iter()
            .map(|(c, d)| c * d.intersect(other) as i64)
            .sum()
    }
}

/// One side (a, b, ν) of a candidate splitting of the polarization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SideTuple {
    pub a: u64,
    pub b: i64,
    pub nu: u64,
}

/// A pair of sides that satisfies every constraint of the reducibility
/// system; the certificate is the statement that none exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CandidatePair {
    pub first: SideTuple,
    pub second: SideTuple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Smooth,
    CandidateFound,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Smooth => write!(f, "smooth"),
            Verdict::CandidateFound => write!(f, "candidate-found"),
        }
    }
}

/// The droppable constraint families of the certificate, used to demonstrate
/// that the system is not vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintFamily {
    /// C3: each side pairs to exactly n/ν against the polarization.
    PairingExactness,
    /// C4 + C5: the two fiber intersection numbers of the sum equal n.
    FiberSums,
    /// C6: n²/ν divides the pairing against D_{1,1} (the intersection with
    /// the graph subgroup is contained in the one with the diagonal class).
    TwistDivisibility,
}

/// Result of the exhaustive infeasibility search for a given (n, d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub n: u64,
    pub d: u64,
    pub r: u64,
    pub candidates: Vec<CandidatePair>,
    pub verdict: Verdict,
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|k| n.is_multiple_of(*k)).collect()
}

fn isqrt(n: u64) -> u64 {
    let mut k = 0;
    while (k + 1) * (k + 1) <= n {
        k += 1;
    }
    k
}

/// All candidate pairs surviving the constraint system, optionally with one
/// family removed. The search is exhaustive within the derived bounds
/// ν a ≤ n (a²/δ ≥ a) and b² ≤ n (ν r/δ ≥ 1), so an empty result is a
/// certificate of infeasibility.
pub fn smoothness_search(
    n: u64,
    d: u64,
    skip: Option<ConstraintFamily>,
) -> Result<Vec<CandidatePair>, Error> {
    if n < 2 {
        return Err(Error::OutOfScope("n must be at least 2"));
    }
    if d < 3 {
        return Err(Error::OutOfScope(
            "d must be at least 3; the degree-2 case has its own reducibility test",
        ));
    }
    if n > 100 || d > 10_000 {
        return Err(Error::OutOfScope(
            "search supported for n <= 100, d <= 10000",
        ));
    }
    let r = d * n - 1;
    let keep = |family: ConstraintFamily| skip != Some(family);

    // Per-side filtering: C1 (normalization and coprimality), C2 (ν | n²),
    // then C3 and C6 unless dropped.
    let mut sides: Vec<(SideTuple, DabClass)> = Vec::new();
    let b_bound = isqrt(n) as i64;
    for a in 0..=n as i64 {
        for b in -b_bound..=b_bound {
            let Ok(class) = DabClass::new(a, b, r) else {
                continue;
            };
            if class.a() != a as u64 || class.b() != b {
                continue; // only canonical representatives
            }
            for &nu in &divisors(n * n) {
                if keep(ConstraintFamily::PairingExactness) {
                    // n/ν = D·Ξ must hold exactly, forcing ν | n.
                    if !n.is_multiple_of(nu) || class.intersect(ReferenceClass::Xi) != n / nu {
                        continue;
                    }
                }
                if keep(ConstraintFamily::TwistDivisibility) {
                    // |H ∩ D| = n²/ν divides D·D_{1,1}, since the graph
                    // subgroup meets D inside the diagonal class.
                    let h = n * n / nu;
                    if class.intersect(ReferenceClass::D11) % h != 0 {
                        continue;
                    }
                }
                sides.push((SideTuple { a: a as u64, b, nu }, class));
            }
        }
    }

    // Joint constraints on unordered pairs, reported in lexicographic order.
    let mut out = Vec::new();
    for i in 0..sides.len() {
        for j in i..sides.len() {
            let (s1, c1) = sides[i];
            let (s2, c2) = sides[j];
            if keep(ConstraintFamily::FiberSums) {
                let total = NsClass::new(alloc::vec![(s1.nu as i64, c1), (s2.nu as i64, c2)])?;
                if total.intersect(ReferenceClass::D01) != n as i64
                    || total.intersect(ReferenceClass::D10) != n as i64
                {
                    continue;
                }
            }
            out.push(CandidatePair {
                first: s1,
                second: s2,
            });
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Runs the full constraint system for (n, d); the verdict is Smooth exactly
/// when no candidate splitting survives.
pub fn smoothness_certificate(n: u64, d: u64) -> Result<SmoothnessReport, Error> {
    let candidates = smoothness_search(n, d, None)?;
    let verdict = if candidates.is_empty() {
        Verdict::Smooth
    } else {
        Verdict::CandidateFound
    };
    Ok(SmoothnessReport {
        n,
        d,
        r: d * n - 1,
        candidates,
        verdict,
    })
}

/// Whether the degree-2 construction for α yields a reducible polarization:
/// true exactly when some isomorphism ψ: E' → E, acting on 2-torsion as one
/// of `torsion_actions`, carries the graph of α to the diagonal, i.e.
/// ψ∘α = id. For curves without extra automorphisms the only action is the
/// identity; an empty list means the two curves are not isomorphic.
pub fn bielliptic_reducible(alpha: &AlphaMap, torsion_actions: &[AlphaMap]) -> Result<bool, Error> {
    if alpha.modulus() != 2 {
        return Err(Error::OutOfScope("the reducibility test applies to p = 2"));
    }
    let id = AlphaMap::identity(2)?;
    for psi in torsion_actions {
        if psi.modulus() != 2 {
            return Err(Error::OutOfScope("the reducibility test applies to p = 2"));
        }
        if psi.compose(alpha)? == id {
            return Ok(true);
        }
    }
    Ok(false)
}
