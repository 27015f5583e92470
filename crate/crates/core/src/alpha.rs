//! Isomorphisms E\[p\] → E'\[p\] as invertible 2x2 matrices, the anti-symplectic
//! condition, and their graphs as lines of P^3(F_p).
//!
//! A map is anti-symplectic when it inverts the factor pairing, written
//! additively: ω(αu, αv) = -ω(u, v). Its graph {(u, αu)} is then isotropic
//! for the product form, and conversely.

use alloc::vec::Vec;
use core::fmt;

use crate::fp::{validate_modulus, FpScalar};
use crate::geom::{ProjLine, ProjPoint, TorsionVector};
use crate::Error;

/// An invertible 2x2 matrix over F_p, acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaMap {
    entries: [[FpScalar; 2]; 2],
}

impl AlphaMap {
    /// Builds the map from row-major entries. Fails on a non-prime modulus
    /// or a singular matrix.
    pub fn new(entries: [[i64; 2]; 2], modulus: u64) -> Result<Self, Error> {
        validate_modulus(modulus)?;
        let m = AlphaMap {
            entries: [
                [
                    FpScalar::reduce(entries[0][0], modulus),
                    FpScalar::reduce(entries[0][1], modulus),
                ],
                [
                    FpScalar::reduce(entries[1][0], modulus),
                    FpScalar::reduce(entries[1][1], modulus),
                ],
            ],
        };
        if m.det().is_zero() {
            return Err(Error::NotAnIsomorphism);
        }
        Ok(m)
    }

    pub fn identity(modulus: u64) -> Result<Self, Error> {
        Self::new([[1, 0], [0, 1]], modulus)
    }

    pub fn modulus(&self) -> u64 {
        self.entries[0][0].modulus()
    }

    pub fn entries(&self) -> [[FpScalar; 2]; 2] {
        self.entries
    }

    pub fn raw_entries(&self) -> [[u64; 2]; 2] {
        [
            [self.entries[0][0].value(), self.entries[0][1].value()],
            [self.entries[1][0].value(), self.entries[1][1].value()],
        ]
    }

    pub fn det(&self) -> FpScalar {
        let e = self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }

    pub fn apply(&self, v: [FpScalar; 2]) -> [FpScalar; 2] {
        let e = self.entries;
        [
            e[0][0] * v[0] + e[0][1] * v[1],
            e[1][0] * v[0] + e[1][1] * v[1],
        ]
    }

    pub fn compose(&self, inner: &AlphaMap) -> Result<AlphaMap, Error> {
        if self.modulus() != inner.modulus() {
            return Err(Error::ModulusMismatch {
                left: self.modulus(),
                right: inner.modulus(),
            });
        }
        let a = self.entries;
        let b = inner.entries;
        Ok(AlphaMap {
            entries: [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ],
        })
    }

    /// Tests the matrix identity `MᵀωM = -ω` for the factor form
    /// ω = `[[0,1],[-1,0]]`, which says the map inverts the pairing.
    pub fn is_antisymplectic(&self) -> bool {
        // For 2x2 matrices MᵀωM = det(M)·ω; tests cross-check against the
        // det(M) = -1 shortcut.
        let p = self.modulus();
        let zero = FpScalar::reduce(0, p);
        let one = FpScalar::reduce(1, p);
        let omega = [[zero, one], [-one, zero]];
        let m = self.entries;
        let mt = [[m[0][0], m[1][0]], [m[0][1], m[1][1]]];
        let mul = |a: [[FpScalar; 2]; 2], b: [[FpScalar; 2]; 2]| {
            [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ]
        };
        let lhs = mul(mt, mul(omega, m));
        lhs == [[zero, -one], [one, zero]]
    }
}

impl fmt::Display for AlphaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.raw_entries();
        write!(f, "[[{},{}],[{},{}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// The graph line H = {(u, αu)} of a map, together with the map itself.
/// It meets both factor lines trivially by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphLine {
    alpha: AlphaMap,
    line: ProjLine,
}

impl GraphLine {
    pub fn alpha(&self) -> &AlphaMap {
        &self.alpha
    }

    pub fn line(&self) -> &ProjLine {
        &self.line
    }

    pub fn contains(&self, pt: &ProjPoint) -> bool {
        self.line.contains(pt)
    }
}

/// The line spanned by (e1, αe1) and (e2, αe2). It is isotropic exactly when
/// the map is anti-symplectic.
pub fn graph_line(alpha: &AlphaMap) -> GraphLine {
    let p = alpha.modulus();
    let m = alpha.raw_entries();
    // Columns of the matrix are the images of the basis vectors, so the
    // rows below are already in reduced echelon form.
    let line = ProjLine::from_span(
        &TorsionVector::from_raw([1, 0, m[0][0], m[1][0]], p),
        &TorsionVector::from_raw([0, 1, m[0][1], m[1][1]], p),
    )
    .expect("graph rows are independent");
    GraphLine {
        alpha: *alpha,
        line,
    }
}

/// Recovers the unique map whose graph is the given line, when the line meets
/// both factor lines trivially; `NotAGraph` otherwise.
pub fn line_to_alpha(line: &ProjLine) -> Result<AlphaMap, Error> {
    // The left 2x2 block of the echelon basis is invertible exactly when the
    // pivots sit in the first two columns; the map is then read off the right
    // block, and must itself be invertible for the line to avoid the first
    // factor.
    if line.pivots() != [0, 1] {
        return Err(Error::NotAGraph);
    }
    let b = line.basis();
    let r0 = b[0].coords();
    let r1 = b[1].coords();
    let m = AlphaMap {
        entries: [[r0[2], r1[2]], [r0[3], r1[3]]],
    };
    if m.det().is_zero() {
        return Err(Error::NotAGraph);
    }
    Ok(m)
}

/// All anti-symplectic maps for the prime p, ordered lexicographically by
/// matrix entries; there are p(p^2 - 1) of them.
pub fn enumerate_antisymplectic(p: u64) -> Result<Vec<AlphaMap>, Error> {
    validate_modulus(p)?;
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let det = (a * d + p * p - b * c) % p;
                    if det == (p - 1) % p {
                        let m = AlphaMap {
                            entries: [
                                [FpScalar::reduce(a as i64, p), FpScalar::reduce(b as i64, p)],
                                [FpScalar::reduce(c as i64, p), FpScalar::reduce(d as i64, p)],
                            ],
                        };
                        out.push(m);
                    }
                }
            }
        }
    }
    Ok(out)
}
