//! Points, lines and the symplectic form on a 4-dimensional space over F_p.
//!
//! The 4-space models the p-torsion of a product of two elliptic curves, with
//! coordinates (u1, u2, u1', u2'): the first pair lives on one factor, the
//! second pair on the other. Lines of the projective 3-space are stored as
//! reduced row echelon bases, which are unique per subspace, so enumerations
//! and set comparisons are canonical.

use alloc::vec::Vec;
use core::fmt;

use crate::fp::{validate_modulus, FpScalar};
use crate::Error;

/// Guardrail for the enumeration operations: the number of lines grows like
/// p^4, so blowing past this by accident is usually a bug in the caller.
pub const DEFAULT_ENUM_BOUND: u64 = 101;

/// An element of the 4-dimensional torsion space, `(u1, u2, u1', u2')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionVector {
    coords: [FpScalar; 4],
}

impl TorsionVector {
    pub fn new(coords: [FpScalar; 4]) -> Result<Self, Error> {
        let p = coords[0].modulus();
        for c in &coords[1..] {
            if c.modulus() != p {
                return Err(Error::ModulusMismatch {
                    left: p,
                    right: c.modulus(),
                });
            }
        }
        Ok(TorsionVector { coords })
    }

    pub fn from_ints(coords: [i64; 4], modulus: u64) -> Result<Self, Error> {
        validate_modulus(modulus)?;
        Ok(Self::from_raw(
            [
                coords[0].rem_euclid(modulus as i64) as u64,
                coords[1].rem_euclid(modulus as i64) as u64,
                coords[2].rem_euclid(modulus as i64) as u64,
                coords[3].rem_euclid(modulus as i64) as u64,
            ],
            modulus,
        ))
    }

    pub(crate) fn from_raw(coords: [u64; 4], modulus: u64) -> Self {
        TorsionVector {
            coords: [
                FpScalar::reduce(coords[0] as i64, modulus),
                FpScalar::reduce(coords[1] as i64, modulus),
                FpScalar::reduce(coords[2] as i64, modulus),
                FpScalar::reduce(coords[3] as i64, modulus),
            ],
        }
    }

    pub fn coords(&self) -> [FpScalar; 4] {
        self.coords
    }

    pub(crate) fn raw(&self) -> [u64; 4] {
        [
            self.coords[0].value(),
            self.coords[1].value(),
            self.coords[2].value(),
            self.coords[3].value(),
        ]
    }

    pub fn modulus(&self) -> u64 {
        self.coords[0].modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(FpScalar::is_zero)
    }
}

impl fmt::Display for TorsionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.raw();
        write!(f, "({},{},{},{})", c[0], c[1], c[2], c[3])
    }
}

/// The product symplectic form `Ω((u,u'),(v,v')) = ω(u,v) + ω(u',v')` with
/// `ω(u,v) = u1 v2 - u2 v1`, values in F_p.
///
/// It is bilinear, alternating and non-degenerate on the 4-space; both factor
/// pairings are written additively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticForm {
    modulus: u64,
}

impl SymplecticForm {
    pub fn new(modulus: u64) -> Result<Self, Error> {
        validate_modulus(modulus)?;
        Ok(SymplecticForm { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn eval(&self, x: &TorsionVector, y: &TorsionVector) -> FpScalar {
        assert_eq!(x.modulus(), self.modulus, "vector from a different field");
        assert_eq!(y.modulus(), self.modulus, "vector from a different field");
        let a = x.coords();
        let b = y.coords();
        (a[0] * b[1] - a[1] * b[0]) + (a[2] * b[3] - a[3] * b[2])
    }
}

/// A point of P^3(F_p): a nonzero torsion vector normalized so that its
/// first nonzero coordinate is 1. Equality is plain equality of the stored
/// representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    vector: TorsionVector,
}

impl ProjPoint {
    pub fn new(v: &TorsionVector) -> Result<Self, Error> {
        if v.is_zero() {
            return Err(Error::DegenerateSpan);
        }
        let lead = v.coords().into_iter().find(|c| !c.is_zero()).unwrap();
        let inv = lead.inv();
        let c = v.coords();
        let vector = TorsionVector {
            coords: [c[0] * inv, c[1] * inv, c[2] * inv, c[3] * inv],
        };
        Ok(ProjPoint { vector })
    }

    pub fn from_ints(coords: [i64; 4], modulus: u64) -> Result<Self, Error> {
        Self::new(&TorsionVector::from_ints(coords, modulus)?)
    }

    pub fn vector(&self) -> &TorsionVector {
        &self.vector
    }

    pub fn modulus(&self) -> u64 {
        self.vector.modulus()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.vector.raw();
        write!(f, "{}:{}:{}:{}", c[0], c[1], c[2], c[3])
    }
}

/// How two lines of P^3 sit relative to each other, by the dimension of the
/// intersection of the underlying 2-dimensional subspaces (2 / 1 / 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineRelation {
    Equal,
    Meet,
    Skew,
}

impl fmt::Display for LineRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineRelation::Equal => write!(f, "equal"),
            LineRelation::Meet => write!(f, "meet"),
            LineRelation::Skew => write!(f, "skew"),
        }
    }
}

/// A line of P^3(F_p), i.e. a 2-dimensional subspace of the torsion space,
/// stored as its unique reduced row echelon basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    rows: [[u64; 4]; 2],
    pivots: [usize; 2],
    modulus: u64,
}

impl ProjLine {
    /// The line spanned by two vectors. Fails when they are dependent.
    pub fn from_span(v1: &TorsionVector, v2: &TorsionVector) -> Result<Self, Error> {
        let p = v1.modulus();
        if v2.modulus() != p {
            return Err(Error::ModulusMismatch {
                left: p,
                right: v2.modulus(),
            });
        }
        let (rows, pivots) = rref2([v1.raw(), v2.raw()], p).ok_or(Error::DegenerateSpan)?;
        Ok(ProjLine {
            rows,
            pivots,
            modulus: p,
        })
    }

    pub fn from_span_ints(v1: [i64; 4], v2: [i64; 4], modulus: u64) -> Result<Self, Error> {
        let a = TorsionVector::from_ints(v1, modulus)?;
        let b = TorsionVector::from_ints(v2, modulus)?;
        Self::from_span(&a, &b)
    }

    pub fn from_points(a: &ProjPoint, b: &ProjPoint) -> Result<Self, Error> {
        Self::from_span(a.vector(), b.vector())
    }

    pub(crate) fn from_rref(rows: [[u64; 4]; 2], pivots: [usize; 2], modulus: u64) -> Self {
        ProjLine {
            rows,
            pivots,
            modulus,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn basis(&self) -> [TorsionVector; 2] {
        [
            TorsionVector::from_raw(self.rows[0], self.modulus),
            TorsionVector::from_raw(self.rows[1], self.modulus),
        ]
    }

    pub fn pivots(&self) -> [usize; 2] {
        self.pivots
    }

    /// `P(E[p] x {0})`, the line of the first factor.
    pub fn line_r(p: u64) -> Result<Self, Error> {
        Self::from_span_ints([1, 0, 0, 0], [0, 1, 0, 0], p)
    }

    /// `P({0} x E'[p])`, the line of the second factor.
    pub fn line_s(p: u64) -> Result<Self, Error> {
        Self::from_span_ints([0, 0, 1, 0], [0, 0, 0, 1], p)
    }

    pub fn contains_vector(&self, v: &TorsionVector) -> bool {
        if v.modulus() != self.modulus {
            return false;
        }
        let p = self.modulus;
        let mut w = v.raw();
        for i in 0..2 {
            let c = w[self.pivots[i]];
            if c != 0 {
                sub_scaled_row(&mut w, &self.rows[i], c, p);
            }
        }
        w == [0, 0, 0, 0]
    }

    pub fn contains(&self, pt: &ProjPoint) -> bool {
        self.contains_vector(pt.vector())
    }

    /// The p+1 points on the line, in ascending canonical order.
    pub fn points(&self) -> Vec<ProjPoint> {
        let p = self.modulus;
        let b = self.basis();
        let mut out = Vec::with_capacity(p as usize + 1);
        out.push(ProjPoint::new(&b[1]).unwrap());
        for x in 0..p {
            let combo = add_scaled(&b[0], &b[1], x);
            out.push(ProjPoint::new(&combo).unwrap());
        }
        out.sort_unstable();
        out
    }

    /// Whether the symplectic form vanishes on the underlying subspace. By
    /// bilinearity and alternation it suffices to test one basis pair.
    pub fn is_isotropic(&self) -> bool {
        let form = SymplecticForm {
            modulus: self.modulus,
        };
        let b = self.basis();
        form.eval(&b[0], &b[1]).is_zero()
    }

    pub fn relation(&self, other: &ProjLine) -> Result<LineRelation, Error> {
        line_relation(self, other)
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rows;
        write!(
            f,
            "span({}:{}:{}:{}, {}:{}:{}:{})",
            r[0][0], r[0][1], r[0][2], r[0][3], r[1][0], r[1][1], r[1][2], r[1][3]
        )
    }
}

fn add_scaled(a: &TorsionVector, b: &TorsionVector, x: u64) -> TorsionVector {
    let p = a.modulus();
    let ar = a.raw();
    let br = b.raw();
    TorsionVector::from_raw(
        [
            (ar[0] + x * br[0]) % p,
            (ar[1] + x * br[1]) % p,
            (ar[2] + x * br[2]) % p,
            (ar[3] + x * br[3]) % p,
        ],
        p,
    )
}

fn scale_row(row: &mut [u64; 4], f: u64, p: u64) {
    for v in row.iter_mut() {
        *v = *v * f % p;
    }
}

/// row <- row - c * other, mod p.
fn sub_scaled_row(row: &mut [u64; 4], other: &[u64; 4], c: u64, p: u64) {
    for (v, o) in row.iter_mut().zip(other) {
        *v = (*v + (p - c % p) * o) % p;
    }
}

/// Reduced row echelon form of a 2x4 matrix over F_p. Returns `None` when the
/// rank is below 2.
fn rref2(mut rows: [[u64; 4]; 2], p: u64) -> Option<([[u64; 4]; 2], [usize; 2])> {
    let inv = |x: u64| FpScalar::reduce(x as i64, p).inv().value();
    for row in &mut rows {
        for v in row.iter_mut() {
            *v %= p;
        }
    }

    // First pivot.
    let mut c1 = None;
    'outer: for col in 0..4 {
        for row in 0..2 {
            if rows[row][col] != 0 {
                rows.swap(0, row);
                c1 = Some(col);
                break 'outer;
            }
        }
    }
    let c1 = c1?;
    let f = inv(rows[0][c1]);
    scale_row(&mut rows[0], f, p);
    let top = rows[0];
    if rows[1][c1] != 0 {
        let c = rows[1][c1];
        sub_scaled_row(&mut rows[1], &top, c, p);
    }

    // Second pivot.
    let c2 = (c1 + 1..4).find(|&col| rows[1][col] != 0)?;
    let f = inv(rows[1][c2]);
    scale_row(&mut rows[1], f, p);
    let bottom = rows[1];
    if rows[0][c2] != 0 {
        let c = rows[0][c2];
        sub_scaled_row(&mut rows[0], &bottom, c, p);
    }
    Some((rows, [c1, c2]))
}

/// Rank of a stack of vectors over F_p by Gaussian elimination.
fn rank4(mut rows: Vec<[u64; 4]>, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..4 {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let f = FpScalar::reduce(rows[rank][col] as i64, p).inv().value();
        scale_row(&mut rows[rank], f, p);
        let pivot_row = rows[rank];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_multiple_of(p) {
                let c = row[col];
                sub_scaled_row(row, &pivot_row, c, p);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Classifies a pair of lines as equal, meeting in one point, or skew.
pub fn line_relation(l1: &ProjLine, l2: &ProjLine) -> Result<LineRelation, Error> {
    if l1.modulus != l2.modulus {
        return Err(Error::ModulusMismatch {
            left: l1.modulus,
            right: l2.modulus,
        });
    }
    let rows = alloc::vec![l1.rows[0], l1.rows[1], l2.rows[0], l2.rows[1]];
    match rank4(rows, l1.modulus) {
        2 => Ok(LineRelation::Equal),
        3 => Ok(LineRelation::Meet),
        4 => Ok(LineRelation::Skew),
        _ => unreachable!("each line already has rank 2"),
    }
}

fn check_enum_args(p: u64, bound: u64) -> Result<(), Error> {
    validate_modulus(p)?;
    if p > bound {
        return Err(Error::BoundExceeded { p, bound });
    }
    Ok(())
}

/// All points of P^3(F_p) in ascending canonical order; there are
/// p^3 + p^2 + p + 1 of them.
pub fn enumerate_points(p: u64) -> Result<Vec<ProjPoint>, Error> {
    enumerate_points_bounded(p, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_points_bounded(p: u64, bound: u64) -> Result<Vec<ProjPoint>, Error> {
    check_enum_args(p, bound)?;
    let mut out = Vec::new();
    let pt = |raw: [u64; 4]| ProjPoint {
        vector: TorsionVector::from_raw(raw, p),
    };
    out.push(pt([0, 0, 0, 1]));
    for z in 0..p {
        out.push(pt([0, 0, 1, z]));
    }
    for y in 0..p {
        for z in 0..p {
            out.push(pt([0, 1, y, z]));
        }
    }
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                out.push(pt([1, x, y, z]));
            }
        }
    }
    Ok(out)
}

// Visits every line of P^3(F_p) once, in the canonical order: echelon shapes
// by pivot pair, then the non-pivot entries odometer-style.
fn for_each_line(p: u64, mut visit: impl FnMut(ProjLine)) {
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    visit(ProjLine::from_rref([[1, 0, a, b], [0, 1, c, d]], [0, 1], p));
                }
            }
        }
    }
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                visit(ProjLine::from_rref([[1, a, 0, b], [0, 0, 1, c]], [0, 2], p));
            }
        }
    }
    for a in 0..p {
        for b in 0..p {
            visit(ProjLine::from_rref([[1, a, b, 0], [0, 0, 0, 1]], [0, 3], p));
        }
    }
    for a in 0..p {
        for b in 0..p {
            visit(ProjLine::from_rref([[0, 1, 0, a], [0, 0, 1, b]], [1, 2], p));
        }
    }
    for a in 0..p {
        visit(ProjLine::from_rref([[0, 1, a, 0], [0, 0, 0, 1]], [1, 3], p));
    }
    visit(ProjLine::from_rref([[0, 0, 1, 0], [0, 0, 0, 1]], [2, 3], p));
}

/// All lines of P^3(F_p), i.e. all 2-dimensional subspaces, in a fixed
/// canonical order (by pivot columns of the echelon basis, then entries);
/// there are (p^2+1)(p^2+p+1) of them.
pub fn enumerate_lines(p: u64) -> Result<Vec<ProjLine>, Error> {
    enumerate_lines_bounded(p, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_lines_bounded(p: u64, bound: u64) -> Result<Vec<ProjLine>, Error> {
    check_enum_args(p, bound)?;
    let mut out = Vec::new();
    for_each_line(p, |l| out.push(l));
    Ok(out)
}

/// Line and isotropic-line totals by the same exhaustive sweep as
/// [`enumerate_lines`], without materializing the list.
pub fn line_census(p: u64) -> Result<(u64, u64), Error> {
    check_enum_args(p, DEFAULT_ENUM_BOUND)?;
    let mut lines = 0;
    let mut isotropic = 0;
    for_each_line(p, |l| {
        lines += 1;
        if l.is_isotropic() {
            isotropic += 1;
        }
    });
    Ok((lines, isotropic))
}

/// Census of the isotropic lines of P^3(F_p), produced by exhaustive
/// enumeration: the total, the number through a point (the same for every
/// point), and how many meet a fixed isotropic resp. non-isotropic line
/// (the fixed line itself included when isotropic).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsotropicLineStats {
    pub total: u64,
    pub through_any_point: u64,
    pub meeting_isotropic_line: u64,
    pub meeting_non_isotropic_line: u64,
}

pub fn isotropic_line_stats(p: u64) -> Result<IsotropicLineStats, Error> {
    let lines = enumerate_lines(p)?;
    let iso: Vec<&ProjLine> = lines.iter().filter(|l| l.is_isotropic()).collect();
    let total = iso.len() as u64;

    let mut through_any_point = 0;
    for (i, pt) in enumerate_points(p)?.iter().enumerate() {
        let n = iso.iter().filter(|l| l.contains(pt)).count() as u64;
        if i == 0 {
            through_any_point = n;
        } else {
            assert_eq!(
                n, through_any_point,
                "pencil size must not depend on the point"
            );
        }
    }

    let witness_iso = iso[0];
    let witness_non_iso = ProjLine::line_r(p)?;
    let meets = |fixed: &ProjLine| {
        iso.iter()
            .filter(|l| line_relation(l, fixed).unwrap() != LineRelation::Skew)
            .count() as u64
    };
    Ok(IsotropicLineStats {
        total,
        through_any_point,
        meeting_isotropic_line: meets(witness_iso),
        meeting_non_isotropic_line: meets(&witness_non_iso),
    })
}
