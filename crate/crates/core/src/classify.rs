//! Classification of non-trivial elliptic configurations by twisting number.
//!
//! Given the prime p, the second degree d and the twisting number m, the
//! classifier decides which construction recipes can realize the
//! configuration, and [`realize`] produces the torsion-level scenario
//! (a witness line plus the admissible graph lines) for a recipe.

use alloc::vec::Vec;
use core::fmt;

use crate::alpha::{graph_line, AlphaMap, GraphLine};
use crate::configs::{
    enumerate_h_exp, enumerate_h_exp2, witness_line, witness_point, IsogenyDatum,
};
use crate::fp::{gcd, is_prime, validate_modulus, MAX_MODULUS};
use crate::geom::{LineRelation, ProjLine};
use crate::Error;

/// Which of the three constructions a recipe refers to, by the index
/// ν ∈ {1, p, p²} of the pulled-back curve class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecipeKind {
    /// ν = 1: degree sum p·d, degrees coprime to p.
    Ex1,
    /// ν = p: degree sum d.
    ExP,
    /// ν = p²: requires p | d, degree sum d/p.
    ExP2,
}

impl fmt::Display for RecipeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecipeKind::Ex1 => write!(f, "ex1"),
            RecipeKind::ExP => write!(f, "exp"),
            RecipeKind::ExP2 => write!(f, "exp2"),
        }
    }
}

/// The discrete outcome of classification: which construction, with which
/// isogeny degrees, realizes a configuration with the given invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recipe {
    pub kind: RecipeKind,
    pub p: u64,
    pub d: u64,
    pub m: u64,
    pub nu: u64,
    pub deg_phi: u64,
    pub deg_phi_prime: u64,
}

impl Recipe {
    pub fn iso(&self) -> IsogenyDatum {
        IsogenyDatum {
            deg_phi: self.deg_phi,
            deg_phi_prime: self.deg_phi_prime,
        }
    }

    /// Checks the structural invariants tying m, ν and the degrees together.
    pub fn validate(&self) -> Result<(), Error> {
        validate_modulus(self.p)
            .map_err(|_| Error::InvalidRecipe("p must be a prime in the supported range"))?;
        if self.d < 2 || self.d > MAX_MODULUS {
            return Err(Error::InvalidRecipe("d must be at least 2 and in range"));
        }
        if self.deg_phi == 0 || self.deg_phi_prime == 0 {
            return Err(Error::InvalidRecipe("isogeny degrees must be positive"));
        }
        if self.deg_phi > MAX_MODULUS || self.deg_phi_prime > MAX_MODULUS {
            return Err(Error::InvalidRecipe("recipe data out of supported range"));
        }
        if Some(self.m) != self.nu.checked_mul(self.deg_phi) {
            return Err(Error::InvalidRecipe("m must equal nu * deg φ"));
        }
        if self.m == 0 || self.m > self.p * self.d - 1 {
            return Err(Error::InvalidRecipe("m must lie in [1, pd - 1]"));
        }
        let sum = self.deg_phi + self.deg_phi_prime;
        match self.kind {
            RecipeKind::Ex1 => {
                if self.nu != 1 {
                    return Err(Error::InvalidRecipe("nu must be 1"));
                }
                if sum != self.p * self.d {
                    return Err(Error::InvalidRecipe("degree sum must be p*d"));
                }
                if gcd(self.p, self.deg_phi) != 1 {
                    return Err(Error::InvalidRecipe("deg φ must be coprime to p"));
                }
            }
            RecipeKind::ExP => {
                if self.nu != self.p {
                    return Err(Error::InvalidRecipe("nu must be p"));
                }
                if sum != self.d {
                    return Err(Error::InvalidRecipe("degree sum must be d"));
                }
            }
            RecipeKind::ExP2 => {
                if self.nu != self.p * self.p {
                    return Err(Error::InvalidRecipe("nu must be p^2"));
                }
                if !self.d.is_multiple_of(self.p) {
                    return Err(Error::InvalidRecipe("p must divide d"));
                }
                if sum != self.d / self.p {
                    return Err(Error::InvalidRecipe("degree sum must be d/p"));
                }
            }
        }
        Ok(())
    }
}

/// Why a (p, d, m) triple admits no configuration at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidReason {
    NotPrime(u64),
    DegreeTooSmall(u64),
    OutOfRange(u64),
    TwistTooSmall(i64),
    TwistTooLarge { m: i64, max: u64 },
    NoAdmissibleRecipe,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::NotPrime(p) => write!(f, "{p} is not prime"),
            InvalidReason::DegreeTooSmall(d) => write!(f, "d = {d} must be at least 2"),
            InvalidReason::OutOfRange(v) => write!(f, "{v} exceeds the supported range"),
            InvalidReason::TwistTooSmall(m) => write!(f, "m = {m} must be positive"),
            InvalidReason::TwistTooLarge { m, max } => {
                write!(f, "m = {m} exceeds the trivial value {max}")
            }
            InvalidReason::NoAdmissibleRecipe => write!(f, "no construction matches"),
        }
    }
}

/// Result of classifying (p, d, m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyOutcome {
    /// m = pd: the complementary map, not a genuinely new configuration.
    Trivial,
    Invalid(InvalidReason),
    /// All admissible recipes, never empty.
    Recipes(Vec<Recipe>),
}

/// Decides which constructions can realize a non-trivial configuration with
/// twisting number m: values coprime to p give the degree-sum construction,
/// multiples of p the order-p one, and multiples of p² additionally the
/// order-p² one when p | d.
pub fn classify(p: u64, d: u64, m: i64) -> ClassifyOutcome {
    if p > MAX_MODULUS {
        return ClassifyOutcome::Invalid(InvalidReason::OutOfRange(p));
    }
    if d > MAX_MODULUS {
        return ClassifyOutcome::Invalid(InvalidReason::OutOfRange(d));
    }
    if !is_prime(p) {
        return ClassifyOutcome::Invalid(InvalidReason::NotPrime(p));
    }
    if d < 2 {
        return ClassifyOutcome::Invalid(InvalidReason::DegreeTooSmall(d));
    }
    let pd = p * d;
    if m < 1 {
        return ClassifyOutcome::Invalid(InvalidReason::TwistTooSmall(m));
    }
    let m = m as u64;
    if m > pd {
        return ClassifyOutcome::Invalid(InvalidReason::TwistTooLarge {
            m: m as i64,
            max: pd,
        });
    }
    if m == pd {
        return ClassifyOutcome::Trivial;
    }
    if !m.is_multiple_of(p) {
        return ClassifyOutcome::Recipes(alloc::vec![Recipe {
            kind: RecipeKind::Ex1,
            p,
            d,
            m,
            nu: 1,
            deg_phi: m,
            deg_phi_prime: pd - m,
        }]);
    }
    let mut recipes = Vec::new();
    let mu = m / p;
    if (1..=d - 1).contains(&mu) {
        recipes.push(Recipe {
            kind: RecipeKind::ExP,
            p,
            d,
            m,
            nu: p,
            deg_phi: mu,
            deg_phi_prime: d - mu,
        });
    }
    if m.is_multiple_of(p * p) && d.is_multiple_of(p) {
        let delta = d / p;
        let mu2 = m / (p * p);
        if delta >= 2 && mu2 < delta {
            recipes.push(Recipe {
                kind: RecipeKind::ExP2,
                p,
                d,
                m,
                nu: p * p,
                deg_phi: mu2,
                deg_phi_prime: delta - mu2,
            });
        }
    }
    if recipes.is_empty() {
        ClassifyOutcome::Invalid(InvalidReason::NoAdmissibleRecipe)
    } else {
        ClassifyOutcome::Recipes(recipes)
    }
}

/// The bi-tri-elliptic case: classification of (2, 3, m). Odd twisting
/// numbers in [1, 5] give the degree-sum construction with deg φ = m, even
/// ones the order-2 construction with deg φ = m/2, and m = 6 is trivial.
pub fn classify_bitri(m: i64) -> ClassifyOutcome {
    classify(2, 3, m)
}

/// The torsion-level scenario built for a recipe: the witness line, its
/// position, the number of admissible graph lines, and a canonical sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizeWitness {
    pub t: ProjLine,
    pub rel_r: LineRelation,
    pub rel_s: LineRelation,
    pub h_count: u64,
    pub sample: Option<GraphLine>,
}

/// Builds the torsion-level scenario for a recipe with the generic witness
/// line that the isogeny degrees force.
pub fn realize(recipe: &Recipe) -> Result<RealizeWitness, Error> {
    recipe.validate()?;
    let t = match recipe.kind {
        // The subgroup H here is the p-torsion of the auxiliary curve
        // itself: an isotropic graph line skew to both factor lines.
        RecipeKind::Ex1 => *graph_line(&AlphaMap::new([[1, 0], [0, -1]], recipe.p)?).line(),
        RecipeKind::ExP | RecipeKind::ExP2 => witness_line(recipe.p, &recipe.iso())?,
    };
    realize_with_line(recipe, &t)
}

/// Like [`realize`] but with an explicitly chosen witness line, e.g. one of
/// the p = 2 scenario lines.
pub fn realize_with_line(recipe: &Recipe, t: &ProjLine) -> Result<RealizeWitness, Error> {
    recipe.validate()?;
    if t.modulus() != recipe.p {
        return Err(Error::ModulusMismatch {
            left: recipe.p,
            right: t.modulus(),
        });
    }
    let r = ProjLine::line_r(recipe.p)?;
    let s = ProjLine::line_s(recipe.p)?;
    let (h_count, sample) = match recipe.kind {
        RecipeKind::Ex1 => {
            // H is t itself; there is exactly one choice per witness line.
            let alpha = crate::alpha::line_to_alpha(t).map_err(|_| {
                Error::InvalidWitness("the degree-sum construction needs a graph line")
            })?;
            if !t.is_isotropic() {
                return Err(Error::InvalidWitness(
                    "the degree-sum construction needs an isotropic line",
                ));
            }
            (1, Some(graph_line(&alpha)))
        }
        RecipeKind::ExP => {
            let v = witness_point(t)?;
            let hs = enumerate_h_exp(recipe.p, t, &v)?;
            (hs.len() as u64, hs.into_iter().next())
        }
        RecipeKind::ExP2 => {
            let hs = enumerate_h_exp2(recipe.p, t)?;
            (hs.len() as u64, hs.into_iter().next())
        }
    };
    Ok(RealizeWitness {
        t: *t,
        rel_r: t.relation(&r)?,
        rel_s: t.relation(&s)?,
        h_count,
        sample,
    })
}
