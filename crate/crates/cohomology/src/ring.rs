//! Rational cohomology of an n-fold product of a closed oriented surface.
//!
//! A class is a linear combination of basis monomials; a monomial picks, in
//! each factor, the unit, a symplectic basis element `a_k`/`b_k`, or the
//! fundamental class `w`. Products interleave factors with the usual Koszul
//! sign, and the symplectic pairing is normalized so that `b_k ⌣ a_k = w`
//! in every factor. The diagonal class below is calibrated to that pairing:
//! restricting it to the diagonal itself yields the Euler characteristic
//! `(2 − 2g)·w`, which is what the obstruction computations rely on.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// The surface whose n-fold product carries the classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Surface {
    /// A closed oriented surface of the given genus.
    Genus(u32),
    /// An even-dimensional sphere. Its only positive-degree class is the top
    /// class, recorded as [`Symbol::Omega`]; the dimension never enters the
    /// algebra because the top class has even degree either way.
    Sphere,
}

/// The entry a basis monomial assigns to a single factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    One,
    /// `a_k`, 1-based.
    A(u32),
    /// `b_k`, 1-based.
    B(u32),
    /// The fundamental class of the factor.
    Omega,
}

impl Symbol {
    pub fn degree(self) -> usize {
        match self {
            Symbol::One => 0,
            Symbol::A(_) | Symbol::B(_) => 1,
            Symbol::Omega => 2,
        }
    }

    fn is_odd(self) -> bool {
        self.degree() % 2 == 1
    }

    fn check(self, surface: Surface) -> Result<(), Error> {
        match (self, surface) {
            (Symbol::A(k) | Symbol::B(k), Surface::Genus(g)) => {
                if k == 0 || k > g {
                    Err(Error::SymbolOutOfRange { index: k, genus: g })
                } else {
                    Ok(())
                }
            }
            (Symbol::A(_) | Symbol::B(_), Surface::Sphere) => Err(Error::OddSymbolOnSphere),
            _ => Ok(()),
        }
    }
}

/// Product of two symbols within one factor: `None` is zero. The sign
/// carries the pairing normalization `b_k ⌣ a_k = w`.
fn mul_symbols(x: Symbol, y: Symbol) -> Option<(Symbol, i8)> {
    use Symbol::*;
    match (x, y) {
        (One, s) | (s, One) => Some((s, 1)),
        (A(k), B(l)) if k == l => Some((Omega, -1)),
        (B(k), A(l)) if k == l => Some((Omega, 1)),
        _ => None,
    }
}

fn mono_degree(mono: &[Symbol]) -> usize {
    mono.iter().map(|s| s.degree()).sum()
}

/// A homogeneous rational cohomology class on the product of `factors`
/// copies of `surface`. The zero class is the empty combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    surface: Surface,
    factors: usize,
    terms: BTreeMap<Vec<Symbol>, BigRational>,
}

impl GradedClass {
    pub fn zero(surface: Surface, factors: usize) -> Self {
        GradedClass {
            surface,
            factors,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit.
    pub fn unit(surface: Surface, factors: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![Symbol::One; factors], BigRational::one());
        GradedClass {
            surface,
            factors,
            terms,
        }
    }

    /// The image of `symbol` from the cohomology of the `factor`-th copy
    /// (1-based), i.e. the pullback along the projection onto that copy.
    /// `Symbol::One` gives the unit.
    pub fn generator(
        surface: Surface,
        factors: usize,
        factor: usize,
        symbol: Symbol,
    ) -> Result<Self, Error> {
        if factor == 0 || factor > factors {
            return Err(Error::FactorOutOfRange { factor, factors });
        }
        symbol.check(surface)?;
        let mut mono = vec![Symbol::One; factors];
        mono[factor - 1] = symbol;
        let mut terms = BTreeMap::new();
        terms.insert(mono, BigRational::one());
        Ok(GradedClass {
            surface,
            factors,
            terms,
        })
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero class.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| mono_degree(m))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Symbol], &BigRational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    /// Coefficient of a basis monomial, zero if absent.
    pub fn coefficient(&self, monomial: &[Symbol]) -> BigRational {
        self.terms.get(monomial).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert_term(&mut self, mono: Vec<Symbol>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), Error> {
        if self.surface != other.surface || self.factors != other.factors {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        if let (Some(d1), Some(d2)) = (self.degree(), other.degree()) {
            if d1 != d2 {
                return Err(Error::MixedDegree(d1, d2));
            }
        }
        let mut out = self.clone();
        for (mono, coeff) in &other.terms {
            out.insert_term(mono.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.scaled(&-BigRational::one()))
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return GradedClass::zero(self.surface, self.factors);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v * c))
            .collect();
        GradedClass {
            surface: self.surface,
            factors: self.factors,
            terms,
        }
    }

    /// Cup product, bilinear over the basis monomials.
    pub fn cup(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = GradedClass::zero(self.surface, self.factors);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((mono, sign)) = mul_monomials(m1, m2) {
                    let mut c = c1 * c2;
                    if sign < 0 {
                        c = -c;
                    }
                    out.insert_term(mono, c);
                }
            }
        }
        Ok(out)
    }
}

/// Factorwise product of two monomials with the Koszul sign from moving the
/// odd entries of the right monomial past the odd entries of the left one.
fn mul_monomials(m1: &[Symbol], m2: &[Symbol]) -> Option<(Vec<Symbol>, i8)> {
    let n = m1.len();
    let mut sign = 1i8;
    for i in 0..n {
        if m2[i].is_odd() {
            for j in i + 1..n {
                if m1[j].is_odd() {
                    sign = -sign;
                }
            }
        }
    }
    let mut mono = Vec::with_capacity(n);
    for (&x, &y) in m1.iter().zip(m2) {
        let (s, fsign) = mul_symbols(x, y)?;
        sign *= fsign;
        mono.push(s);
    }
    Some((mono, sign))
}

/// The Poincaré dual of the locus in the product where factors `i` and `j`
/// agree.
///
/// For genus g this is `w(i) + w(j) + Σ_k a_k(i)b_k(j) − b_k(i)a_k(j)`; for
/// the sphere it is `c_i + c_j`. The cross-term sign matches the pairing
/// `b_k ⌣ a_k = w`, so that the class restricts on the diagonal itself to
/// `(2 − 2g)·w`.
pub fn diagonal_class(
    surface: Surface,
    factors: usize,
    i: usize,
    j: usize,
) -> Result<GradedClass, Error> {
    if i == j {
        return Err(Error::EqualFactors);
    }
    let mut class = GradedClass::generator(surface, factors, i, Symbol::Omega)?
        .add(&GradedClass::generator(surface, factors, j, Symbol::Omega)?)?;
    if let Surface::Genus(g) = surface {
        for k in 1..=g {
            let ai = GradedClass::generator(surface, factors, i, Symbol::A(k))?;
            let bj = GradedClass::generator(surface, factors, j, Symbol::B(k))?;
            let bi = GradedClass::generator(surface, factors, i, Symbol::B(k))?;
            let aj = GradedClass::generator(surface, factors, j, Symbol::A(k))?;
            class = class.add(&ai.cup(&bj)?)?.sub(&bi.cup(&aj)?)?;
        }
    }
    Ok(class)
}

fn monomial_label(mono: &[Symbol]) -> String {
    let mut out = String::new();
    for (idx, sym) in mono.iter().enumerate() {
        let factor = idx + 1;
        match sym {
            Symbol::One => {}
            Symbol::A(k) => out.push_str(&format!("a{k}({factor})")),
            Symbol::B(k) => out.push_str(&format!("b{k}({factor})")),
            Symbol::Omega => out.push_str(&format!("w({factor})")),
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in &self.terms {
            let negative = coeff.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mag = coeff.abs();
            let label = monomial_label(mono);
            if label == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}
