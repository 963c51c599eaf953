//! Splittings of the strand-forgetting homomorphism PB_{n+1} -> PB_n.
//!
//! Two constructions produce a section: cabling, which doubles one strand
//! so that the new point travels alongside x_k, and inclusion, which parks
//! the new point next to the boundary where nothing ever crosses it. Each
//! can be twisted by any homomorphism PB_n -> Z applied as a power of a
//! twist that the rest of the image commutes with, giving infinitely many
//! homotopy classes distinguished already on abelianizations. The images
//! are characterized by preserving a curve: the one around the doubled
//! pair, or the one around all the old punctures.

use crate::curve::{act, is_isotopic, round_curve, Curve, RoundCurveSpec};
use crate::error::{Error, Result};
use crate::twist::{artin_generator, twist_word};
use crate::word::BraidWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionKind {
    /// The new point rides immediately next to x_k.
    NearK { k: usize },
    /// The new point sits between the old configuration and the boundary.
    Infinity,
}

/// A candidate section of the forgetful map PB_{n+1} -> PB_n: a base
/// construction plus an integer weight for every strand pair, defining the
/// twisting homomorphism phi(u) = sum of w_ij * lk_ij(u).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSpec {
    n: usize,
    kind: SectionKind,
    weights: Vec<i64>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

impl SectionSpec {
    fn build(n: usize, kind: SectionKind, entries: &[(usize, usize, i64)]) -> Result<Self> {
        if n < 1 {
            return Err(Error::TooFewStrands { n, min: 1 });
        }
        if let SectionKind::NearK { k } = kind {
            if k < 1 || k > n {
                return Err(Error::StrandOutOfRange { strand: k, n });
            }
        }
        let mut weights = vec![0i64; n * (n - 1) / 2];
        let mut seen = vec![false; weights.len()];
        for &(i, j, w) in entries {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::BadPunctureSet(
                    format!("({i}, {j})"),
                    "weight pair out of range",
                ));
            }
            let idx = pair_index(n, i, j);
            if seen[idx] {
                return Err(Error::BadPunctureSet(
                    format!("({i}, {j})"),
                    "duplicate weight pair",
                ));
            }
            seen[idx] = true;
            weights[idx] = w;
        }
        Ok(SectionSpec { n, kind, weights })
    }

    pub fn near_k(n: usize, k: usize, entries: &[(usize, usize, i64)]) -> Result<Self> {
        Self::build(n, SectionKind::NearK { k }, entries)
    }

    pub fn infinity(n: usize, entries: &[(usize, usize, i64)]) -> Result<Self> {
        Self::build(n, SectionKind::Infinity, entries)
    }

    pub fn source_strands(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> SectionKind {
        self.kind
    }

    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.weights[pair_index(self.n, i, j)]
    }

    /// Index of the added strand in the image group PB_{n+1}.
    pub fn new_strand_index(&self) -> usize {
        match self.kind {
            SectionKind::NearK { k } => k,
            SectionKind::Infinity => self.n + 1,
        }
    }

    /// The twisting homomorphism evaluated on a pure word.
    pub fn phi(&self, u: &BraidWord) -> Result<i64> {
        let lk = u.linking_matrix()?;
        Ok(lk
            .upper_entries()
            .into_iter()
            .map(|(i, j, v)| self.weight(i, j) * v)
            .sum())
    }
}

/// The word on n+1 strands in which strand k is doubled: the new strand is
/// inserted immediately left of k and becomes index k, old strands from k
/// on shift up by one. Every crossing of strand k becomes two parallel
/// crossings, and the pair picks up one internal full twist per unit of
/// total linking of strand k, matching the geometric picture of a
/// satellite point carried by a flow line: the satellite's offset
/// direction turns once each time its anchor orbits another point.
pub fn cable_strand(u: &BraidWord, k: usize) -> Result<BraidWord> {
    let n = u.n();
    if k < 1 || k > n {
        return Err(Error::StrandOutOfRange { strand: k, n });
    }
    if !u.is_pure() {
        let perm = u.permutation();
        return Err(Error::NotPure { strand: k, ends_at: perm.image_of(k) });
    }
    // Simulate in application order (rightmost letter first), tracking the
    // doubled cluster's position; collected letters are therefore in time
    // order and get reversed into reading order at the end.
    let mut pos = k;
    let mut time_letters: Vec<i32> = Vec::new();
    for letter in u.application_order() {
        let q = letter.unsigned_abs() as usize;
        let sign = letter.signum();
        if q == pos {
            // The cluster moves right past a single strand.
            time_letters.push(sign * (q as i32 + 1));
            time_letters.push(sign * q as i32);
            pos += 1;
        } else if q + 1 == pos {
            // A single strand moves right past the cluster.
            time_letters.push(sign * q as i32);
            time_letters.push(sign * (q as i32 + 1));
            pos -= 1;
        } else if q > pos {
            time_letters.push(sign * (q as i32 + 1));
        } else {
            time_letters.push(sign * q as i32);
        }
    }
    debug_assert_eq!(pos, k);
    time_letters.reverse();
    let blackboard = BraidWord::new(n + 1, time_letters)?;
    let internal = artin_generator(n + 1, k, k + 1)?.power(u.linking_matrix()?.row_sum(k));
    blackboard.compose(&internal)
}

/// The same letters read in PB_{n+1}: the added strand n+1 sits next to
/// the boundary and is never crossed.
pub fn include_new_strand(u: &BraidWord) -> Result<BraidWord> {
    if !u.is_pure() {
        return Err(Error::NotPure { strand: 1, ends_at: u.permutation().image_of(1) });
    }
    BraidWord::new(u.n() + 1, u.letters().to_vec())
}

fn twisting_element(spec: &SectionSpec) -> Result<BraidWord> {
    let m = spec.n + 1;
    match spec.kind {
        SectionKind::NearK { k } => artin_generator(m, k, k + 1),
        SectionKind::Infinity => {
            // T_c T_b^{-1}: the twist about the curve around the old
            // punctures, corrected by the central boundary twist.
            let c = twist_word(&round_curve(&RoundCurveSpec::new(
                m,
                (1..=spec.n).collect(),
            )?)?)?;
            let b = twist_word(&round_curve(&RoundCurveSpec::new(
                m,
                (1..=m).collect(),
            )?)?)?;
            c.compose(&b.inverse())
        }
    }
}

/// The section applied to a pure word: the base construction times the
/// twisting element raised to phi(u).
pub fn apply_section(spec: &SectionSpec, u: &BraidWord) -> Result<BraidWord> {
    if u.n() != spec.n {
        return Err(Error::StrandCountMismatch(u.n(), spec.n));
    }
    let base = match spec.kind {
        SectionKind::NearK { k } => cable_strand(u, k)?,
        SectionKind::Infinity => include_new_strand(u)?,
    };
    let e = spec.phi(u)?;
    if e == 0 {
        return Ok(base);
    }
    base.compose(&twisting_element(spec)?.power(e))
}

/// The curve every image of the section preserves: around the doubled
/// pair for cabling, around all old punctures for inclusion.
pub fn preserved_curve(spec: &SectionSpec) -> Result<Curve> {
    let m = spec.n + 1;
    let subset = match spec.kind {
        SectionKind::NearK { k } => vec![k, k + 1],
        SectionKind::Infinity => (1..=spec.n).collect(),
    };
    round_curve(&RoundCurveSpec::new(m, subset)?)
}

/// Results of checking the section axioms on a spec, one entry per
/// generator or sample; `verdict` is the conjunction of everything.
#[derive(Clone, Debug)]
pub struct SectionReport {
    pub retraction: Vec<((usize, usize), bool)>,
    pub homomorphism: Vec<bool>,
    pub curve_invariance: Vec<((usize, usize), bool)>,
    pub verdict: bool,
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// A short random pure word: a product of a few standard generators with
/// random signs.
fn sample_pure_word(n: usize, state: &mut u64) -> Result<BraidWord> {
    let mut w = BraidWord::identity(n);
    for _ in 0..3 {
        let r = splitmix(state);
        let i = 1 + (r % n as u64) as usize;
        let j = 1 + ((r >> 16) % n as u64) as usize;
        if i == j {
            continue;
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let g = artin_generator(n, i, j)?;
        let g = if r & (1 << 32) != 0 { g.inverse() } else { g };
        w = w.compose(&g)?;
    }
    Ok(w.freely_reduced())
}

/// Checks the section axioms: forgetting the new strand undoes the section
/// on every generator, the section is multiplicative on random pure pairs,
/// and every generator image fixes the preserved curve. Sampling is
/// deterministic in the seed.
pub fn verify_section(spec: &SectionSpec, sample_count: usize, seed: u64) -> Result<SectionReport> {
    let n = spec.n;
    let new_idx = spec.new_strand_index();
    let curve = preserved_curve(spec)?;
    let mut retraction = Vec::new();
    let mut curve_invariance = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let g = artin_generator(n, i, j)?;
            let image = apply_section(spec, &g)?;
            let back = image.forget_strand(new_idx)?;
            retraction.push(((i, j), back.equals(&g)?));
            let moved = act(&image, &curve)?;
            curve_invariance.push(((i, j), is_isotopic(&moved, &curve)?));
        }
    }
    let mut state = seed;
    let mut homomorphism = Vec::new();
    for _ in 0..sample_count {
        let u = sample_pure_word(n, &mut state)?;
        let v = sample_pure_word(n, &mut state)?;
        let joint = apply_section(spec, &u.compose(&v)?)?;
        let split = apply_section(spec, &u)?.compose(&apply_section(spec, &v)?)?;
        homomorphism.push(joint.equals(&split)?);
    }
    let verdict = retraction.iter().all(|(_, ok)| *ok)
        && curve_invariance.iter().all(|(_, ok)| *ok)
        && homomorphism.iter().all(|ok| *ok);
    Ok(SectionReport { retraction, homomorphism, curve_invariance, verdict })
}
