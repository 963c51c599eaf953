//! Isotopy classes of simple closed curves on the punctured disk.
//!
//! A curve is stored through its coordinate vector, which is a complete
//! isotopy invariant, so equality of classes is equality of vectors. The
//! curve surrounding every puncture, and every curve when fewer than three
//! punctures exist, is boundary-parallel; such curves carry no coordinates
//! and are tagged peripheral instead.
//!
//! Curves built from a puncture subset remember it, and images under the
//! group action remember the acting word, so that the twist about the
//! curve can later be written down as an explicit conjugate.

use crate::error::{Error, Result};
use crate::intersect::intersection_number;
use crate::loops::{round_subset_coords, LoopCoords};
use crate::realize::component_count;
use crate::word::BraidWord;
use num_bigint::BigInt;

/// A puncture subset standing for the curve that surrounds it: the
/// boundary of a tubular neighborhood of arcs dropping from the chosen
/// punctures to a horizontal segment below them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundCurveSpec {
    n: usize,
    subset: Vec<usize>,
}

impl RoundCurveSpec {
    /// Validates 2 <= |subset| <= n with strictly increasing entries in
    /// 1..=n. Singletons are rejected: the curve around one puncture
    /// bounds a once-punctured disk and its twist is trivial.
    pub fn new(n: usize, subset: Vec<usize>) -> Result<Self> {
        if subset.len() < 2 {
            return Err(Error::BadPunctureSet(
                format!("{subset:?}"),
                "at least two punctures required",
            ));
        }
        if !subset.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::BadPunctureSet(
                format!("{subset:?}"),
                "punctures must be strictly increasing",
            ));
        }
        if subset[0] < 1 || *subset.last().unwrap() > n {
            return Err(Error::BadPunctureSet(
                format!("{subset:?}"),
                "punctures out of range",
            ));
        }
        Ok(RoundCurveSpec { n, subset })
    }

    pub fn punctures(&self) -> usize {
        self.n
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// A curve around every puncture is parallel to the disk boundary.
    pub fn is_peripheral(&self) -> bool {
        self.subset.len() == self.n
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Essential(LoopCoords),
    Peripheral,
}

/// How the curve was produced, kept so its Dehn twist can be written as a
/// braid word. Coordinate vectors supplied directly have no recipe.
#[derive(Clone, Debug)]
pub(crate) enum Recipe {
    Round(Vec<usize>),
    Image { base: Vec<usize>, conjugator: BraidWord },
}

#[derive(Clone, Debug)]
pub struct Curve {
    n: usize,
    repr: Repr,
    pub(crate) recipe: Option<Recipe>,
}

/// Isotopy is coordinate equality; how the curve was built is irrelevant.
impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.repr == other.repr
    }
}
impl Eq for Curve {}

/// The curve surrounding the punctures of `spec`.
pub fn round_curve(spec: &RoundCurveSpec) -> Result<Curve> {
    let repr = if spec.is_peripheral() || spec.n < 3 {
        Repr::Peripheral
    } else {
        Repr::Essential(LoopCoords::new(
            spec.n,
            round_subset_coords(spec.n, &spec.subset),
        )?)
    };
    Ok(Curve {
        n: spec.n,
        repr,
        recipe: Some(Recipe::Round(spec.subset.clone())),
    })
}

/// A curve from a raw coordinate vector. The vector must describe exactly
/// one connected essential curve; the zero vector (empty multicurve) and
/// vectors tracing several components are rejected.
pub fn from_coords(n: usize, coords: Vec<BigInt>) -> Result<Curve> {
    let lc = LoopCoords::new(n, coords)?;
    if lc.is_zero() {
        return Err(Error::NotConnected { components: 0 });
    }
    let components = component_count(&lc)?;
    if components != 1 {
        return Err(Error::NotConnected { components });
    }
    Ok(Curve { n, repr: Repr::Essential(lc), recipe: None })
}

/// Image of the curve under the mapping class of a braid word.
pub fn act(u: &BraidWord, c: &Curve) -> Result<Curve> {
    if u.n() != c.n {
        return Err(Error::StrandCountMismatch(u.n(), c.n));
    }
    let repr = match &c.repr {
        Repr::Peripheral => Repr::Peripheral,
        Repr::Essential(lc) => Repr::Essential(lc.apply(u)?),
    };
    let recipe = match &c.recipe {
        None => None,
        Some(Recipe::Round(s)) => Some(Recipe::Image {
            base: s.clone(),
            conjugator: u.freely_reduced(),
        }),
        Some(Recipe::Image { base, conjugator }) => Some(Recipe::Image {
            base: base.clone(),
            conjugator: u.compose(conjugator)?.freely_reduced(),
        }),
    };
    Ok(Curve { n: c.n, repr, recipe })
}

/// Minimal number of transverse crossings between representatives of the
/// two classes. Peripheral curves can be pushed to the boundary, away
/// from everything.
pub fn geometric_intersection(c1: &Curve, c2: &Curve) -> Result<u64> {
    if c1.n != c2.n {
        return Err(Error::StrandCountMismatch(c1.n, c2.n));
    }
    match (&c1.repr, &c2.repr) {
        (Repr::Essential(a), Repr::Essential(b)) => {
            Ok(intersection_number(a, b)? as u64)
        }
        _ => Ok(0),
    }
}

pub fn is_isotopic(c1: &Curve, c2: &Curve) -> Result<bool> {
    if c1.n != c2.n {
        return Err(Error::StrandCountMismatch(c1.n, c2.n));
    }
    Ok(c1 == c2)
}

impl Curve {
    pub fn punctures(&self) -> usize {
        self.n
    }

    pub fn is_peripheral(&self) -> bool {
        matches!(self.repr, Repr::Peripheral)
    }

    /// Coordinate vector; absent exactly for peripheral curves.
    pub fn coords(&self) -> Option<&LoopCoords> {
        match &self.repr {
            Repr::Essential(lc) => Some(lc),
            Repr::Peripheral => None,
        }
    }
}
