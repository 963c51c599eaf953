//! Obstruction evaluators for sections of point-forgetting maps.
//!
//! A section of the map that forgets the added point would compose with the
//! projections into maps `g_i = (f, p_i)` into the two-fold product that miss
//! the diagonal, so each `g_i` must pull the diagonal class back to something
//! that dies in the configuration space. Degree-two classes die there exactly
//! when they lie in the span of the pairwise diagonal classes, so the checker
//! evaluates the pullbacks for a candidate `f^*` and searches for one that
//! escapes the span; such a class certifies that no section exists.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{diagonal_class, GradedClass, Surface, Symbol};
use crate::Error;

/// A candidate for the map induced on cohomology by the composition of a
/// hypothetical section with the projection to the added point.
///
/// The images of the degree-one basis are arbitrary degree-one classes on the
/// n-fold product; the image of the fundamental class is recorded as a
/// rational multiple of the first factor's fundamental class, which covers
/// every candidate that factors through a projection (up to permuting the
/// factors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidatePullback {
    genus: u32,
    factors: usize,
    a_images: Vec<GradedClass>,
    b_images: Vec<GradedClass>,
    omega_image: GradedClass,
}

impl CandidatePullback {
    /// Builds a candidate from explicit image classes; each `a_k`/`b_k` image
    /// must be degree one or zero and the fundamental-class image degree two
    /// or zero, all on the same n-fold product.
    pub fn from_images(
        genus: u32,
        factors: usize,
        a_images: Vec<GradedClass>,
        b_images: Vec<GradedClass>,
        omega_image: GradedClass,
    ) -> Result<Self, Error> {
        if genus == 0 {
            return Err(Error::Requires("genus at least one"));
        }
        if factors == 0 {
            return Err(Error::Requires("at least one factor"));
        }
        let surface = Surface::Genus(genus);
        if a_images.len() != genus as usize || b_images.len() != genus as usize {
            return Err(Error::BadPullback("expected one image per basis element"));
        }
        for image in a_images.iter().chain(&b_images) {
            if image.surface() != surface || image.factors() != factors {
                return Err(Error::RingMismatch);
            }
            if !matches!(image.degree(), None | Some(1)) {
                return Err(Error::BadPullback("basis images must have degree one"));
            }
        }
        if omega_image.surface() != surface || omega_image.factors() != factors {
            return Err(Error::RingMismatch);
        }
        if !matches!(omega_image.degree(), None | Some(2)) {
            return Err(Error::BadPullback(
                "fundamental class image must have degree two",
            ));
        }
        Ok(CandidatePullback {
            genus,
            factors,
            a_images,
            b_images,
            omega_image,
        })
    }

    /// Builds a candidate from a coefficient matrix on the degree-one basis.
    ///
    /// Rows list the images of `a_1..a_g` then `b_1..b_g`; columns run
    /// factor-major, listing `a_1..a_g, b_1..b_g` of factor 1, then of factor
    /// 2, and so on. `omega` scales the first factor's fundamental class.
    pub fn from_matrix(
        genus: u32,
        factors: usize,
        matrix: &[Vec<BigRational>],
        omega: BigRational,
    ) -> Result<Self, Error> {
        if genus == 0 {
            return Err(Error::Requires("genus at least one"));
        }
        if factors == 0 {
            return Err(Error::Requires("at least one factor"));
        }
        let g = genus as usize;
        if matrix.len() != 2 * g {
            return Err(Error::BadPullback("expected 2*genus rows"));
        }
        if matrix.iter().any(|row| row.len() != 2 * g * factors) {
            return Err(Error::BadPullback("expected 2*genus*factors columns"));
        }
        let surface = Surface::Genus(genus);
        let row_class = |row: &[BigRational]| -> Result<GradedClass, Error> {
            let mut class = GradedClass::zero(surface, factors);
            for factor in 1..=factors {
                for k in 1..=genus {
                    let base = (factor - 1) * 2 * g;
                    let a_col = base + (k as usize - 1);
                    let b_col = base + g + (k as usize - 1);
                    for (col, symbol) in [(a_col, Symbol::A(k)), (b_col, Symbol::B(k))] {
                        if !row[col].is_zero() {
                            let generator =
                                GradedClass::generator(surface, factors, factor, symbol)?;
                            class = class.add(&generator.scaled(&row[col]))?;
                        }
                    }
                }
            }
            Ok(class)
        };
        let a_images = matrix[..g].iter().map(|r| row_class(r)).collect::<Result<_, _>>()?;
        let b_images = matrix[g..].iter().map(|r| row_class(r)).collect::<Result<_, _>>()?;
        let omega_image =
            GradedClass::generator(surface, factors, 1, Symbol::Omega)?.scaled(&omega);
        CandidatePullback::from_images(genus, factors, a_images, b_images, omega_image)
    }

    /// The zero pullback: every generator and the fundamental class map to 0.
    pub fn vanishing(genus: u32, factors: usize) -> Result<Self, Error> {
        if genus == 0 {
            return Err(Error::Requires("genus at least one"));
        }
        let surface = Surface::Genus(genus);
        let zero = GradedClass::zero(surface, factors);
        CandidatePullback::from_images(
            genus,
            factors,
            vec![zero.clone(); genus as usize],
            vec![zero.clone(); genus as usize],
            zero,
        )
    }

    /// A rank-one pullback supported on `a_1`: it maps `a_1` to the first
    /// factor's `a_1` and kills everything else, the shape forced on a
    /// candidate whose fundamental group image is infinite cyclic.
    pub fn rank_one(genus: u32, factors: usize) -> Result<Self, Error> {
        if genus == 0 {
            return Err(Error::Requires("genus at least one"));
        }
        let surface = Surface::Genus(genus);
        let zero = GradedClass::zero(surface, factors);
        let mut a_images = vec![zero.clone(); genus as usize];
        a_images[0] = GradedClass::generator(surface, factors, 1, Symbol::A(1))?;
        CandidatePullback::from_images(
            genus,
            factors,
            a_images,
            vec![zero.clone(); genus as usize],
            zero,
        )
    }

    /// The pullback of the projection onto the first factor.
    pub fn first_projection(genus: u32, factors: usize) -> Result<Self, Error> {
        if genus == 0 {
            return Err(Error::Requires("genus at least one"));
        }
        let surface = Surface::Genus(genus);
        let a_images = (1..=genus)
            .map(|k| GradedClass::generator(surface, factors, 1, Symbol::A(k)))
            .collect::<Result<_, _>>()?;
        let b_images = (1..=genus)
            .map(|k| GradedClass::generator(surface, factors, 1, Symbol::B(k)))
            .collect::<Result<_, _>>()?;
        let omega_image = GradedClass::generator(surface, factors, 1, Symbol::Omega)?;
        CandidatePullback::from_images(genus, factors, a_images, b_images, omega_image)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    fn apply(&self, symbol: Symbol) -> GradedClass {
        let surface = Surface::Genus(self.genus);
        match symbol {
            Symbol::One => GradedClass::unit(surface, self.factors),
            Symbol::A(k) => self.a_images[k as usize - 1].clone(),
            Symbol::B(k) => self.b_images[k as usize - 1].clone(),
            Symbol::Omega => self.omega_image.clone(),
        }
    }

    /// Pullback of a class on the two-fold product along `(f, p_factor)`:
    /// the first tensor slot goes through the candidate, the second through
    /// the projection onto `factor`.
    pub fn pull_back(&self, class: &GradedClass, factor: usize) -> Result<GradedClass, Error> {
        let surface = Surface::Genus(self.genus);
        if class.surface() != surface || class.factors() != 2 {
            return Err(Error::RingMismatch);
        }
        if factor == 0 || factor > self.factors {
            return Err(Error::FactorOutOfRange {
                factor,
                factors: self.factors,
            });
        }
        let mut out = GradedClass::zero(surface, self.factors);
        for (mono, coeff) in class.terms() {
            let left = self.apply(mono[0]);
            let right = GradedClass::generator(surface, self.factors, factor, mono[1])?;
            out = out.add(&left.cup(&right)?.scaled(coeff))?;
        }
        Ok(out)
    }
}

/// One linear condition `kappa·κ + constant = 0` on an unknown rational κ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub kappa: BigRational,
    pub constant: BigRational,
}

impl std::fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use num_traits::Signed;
        if self.kappa.is_one() {
            write!(f, "k")?;
        } else {
            write!(f, "{}*k", self.kappa)?;
        }
        if !self.constant.is_zero() {
            if self.constant.is_negative() {
                write!(f, " - {}", self.constant.abs())?;
            } else {
                write!(f, " + {}", self.constant)?;
            }
        }
        write!(f, " = 0")
    }
}

/// Evidence that no section exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoSectionWitness {
    /// The pullback of the diagonal class along `(f, p_factor)` escapes the
    /// span of the pairwise diagonal classes; it is nonzero by construction.
    Class { factor: usize, class: GradedClass },
    /// Linear constraints with no common solution.
    Constraints(Vec<LinearConstraint>),
}

/// Outcome of an obstruction computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionVerdict {
    NoSection(NoSectionWitness),
    /// Every computed class or constraint is consistent with a section;
    /// nothing is decided.
    Inconclusive,
}

/// Solves `Σ x_i·generators[i] = target` exactly; `None` when the target is
/// outside the span. All classes must share ring and degree.
fn span_solve(generators: &[GradedClass], target: &GradedClass) -> Option<Vec<BigRational>> {
    let mut monomials: Vec<&[Symbol]> = Vec::new();
    for class in generators.iter().chain(std::iter::once(target)) {
        for (mono, _) in class.terms() {
            if !monomials.contains(&mono) {
                monomials.push(mono);
            }
        }
    }
    monomials.sort();
    let cols = generators.len();
    let mut rows: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|m| {
            let mut row: Vec<BigRational> =
                generators.iter().map(|g| g.coefficient(m)).collect();
            row.push(target.coefficient(m));
            row
        })
        .collect();
    let mut rank = 0;
    let mut pivots: Vec<usize> = Vec::new();
    for c in 0..cols {
        let Some(r) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = rows[rank][c].clone();
        for entry in rows[rank].iter_mut() {
            *entry /= inv.clone();
        }
        for r2 in 0..rows.len() {
            if r2 != rank && !rows[r2][c].is_zero() {
                let factor = rows[r2][c].clone();
                for c2 in 0..=cols {
                    let delta = &factor * &rows[rank][c2];
                    rows[r2][c2] -= delta;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if rows.iter().skip(rank).any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut solution = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        solution[c] = rows[i][cols].clone();
    }
    Some(solution)
}

/// Evaluates the diagonal-class pullbacks `g_i^*([Δ])` of a candidate on the
/// genus-g, n-factor product and reports the first one that escapes the span
/// of the pairwise diagonal classes.
pub fn obstruction_closed_surface(
    candidate: &CandidatePullback,
) -> Result<ObstructionVerdict, Error> {
    let genus = candidate.genus();
    if genus < 2 {
        return Err(Error::Requires("genus at least two"));
    }
    let factors = candidate.factors();
    if factors < 2 {
        return Err(Error::Requires("at least two factors"));
    }
    let surface = Surface::Genus(genus);
    let diagonal_pair = diagonal_class(surface, 2, 1, 2)?;
    let mut span = Vec::new();
    for s in 1..=factors {
        for t in s + 1..=factors {
            span.push(diagonal_class(surface, factors, s, t)?);
        }
    }
    for factor in 1..=factors {
        let class = candidate.pull_back(&diagonal_pair, factor)?;
        if span_solve(&span, &class).is_none() {
            return Ok(ObstructionVerdict::NoSection(NoSectionWitness::Class {
                factor,
                class,
            }));
        }
    }
    Ok(ObstructionVerdict::Inconclusive)
}

/// Constraints on a candidate section over the ordered two-point
/// configuration space of an even-dimensional sphere.
///
/// Writing `f^*` of the top class as `κ·c_1`, both compositions with the
/// projections miss the diagonal, and in the complement of the diagonal the
/// two top classes satisfy `c_1 + c_2 = 0`. The two pullbacks of the diagonal
/// class reduce to `(κ + 1)·c_1` and `(κ − 1)·c_1`, whose vanishing is an
/// unsatisfiable pair; the algebra never involves the sphere's dimension, so
/// the verdict is the same for every `k`.
pub fn s2k_section_constraints(k: u32) -> Result<ObstructionVerdict, Error> {
    if k == 0 {
        return Err(Error::Requires("a sphere of positive even dimension"));
    }
    Ok(sphere_pair_verdict(true))
}

/// `impose_vanishing` turns the diagonal-missing requirement on and off; the
/// off position is a negative control in which no constraint arises at all.
pub(crate) fn sphere_pair_verdict(impose_vanishing: bool) -> ObstructionVerdict {
    if !impose_vanishing {
        return ObstructionVerdict::Inconclusive;
    }
    let diagonal =
        diagonal_class(Surface::Sphere, 2, 1, 2).expect("two-factor sphere diagonal exists");
    let alpha = diagonal.coefficient(&[Symbol::Omega, Symbol::One]);
    let beta = diagonal.coefficient(&[Symbol::One, Symbol::Omega]);
    // g_i^*: the first slot becomes κ·c_1, the second becomes c_i, and the
    // complement relation rewrites c_2 as −c_1.
    let constraints = vec![
        LinearConstraint {
            kappa: alpha.clone(),
            constant: beta.clone(),
        },
        LinearConstraint {
            kappa: alpha,
            constant: -beta,
        },
    ];
    if constraints_satisfiable(&constraints) {
        ObstructionVerdict::Inconclusive
    } else {
        ObstructionVerdict::NoSection(NoSectionWitness::Constraints(constraints))
    }
}

fn constraints_satisfiable(constraints: &[LinearConstraint]) -> bool {
    let mut root: Option<BigRational> = None;
    for c in constraints {
        if c.kappa.is_zero() {
            if !c.constant.is_zero() {
                return false;
            }
        } else {
            let r = -(&c.constant / &c.kappa);
            match &root {
                None => root = Some(r),
                Some(prev) => {
                    if *prev != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Dimension of the degree-one rational cohomology of the ordered n-point
/// configuration space of a genus-g closed surface; restriction from the
/// n-fold product is an isomorphism in degree one, giving `2·g·n`.
pub fn h1_pconf_dimension(genus: u32, factors: usize) -> Result<u64, Error> {
    if genus < 2 {
        return Err(Error::Requires("genus at least two"));
    }
    if factors == 0 {
        return Err(Error::Requires("at least one factor"));
    }
    Ok(2 * u64::from(genus) * factors as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn gen(surface: Surface, factors: usize, factor: usize, sym: Symbol) -> GradedClass {
        GradedClass::generator(surface, factors, factor, sym).unwrap()
    }

    #[test]
    fn vanishing_pullback_is_obstructed_at_the_first_factor() {
        for genus in 2..=3 {
            for factors in 2..=4 {
                let candidate = CandidatePullback::vanishing(genus, factors).unwrap();
                let verdict = obstruction_closed_surface(&candidate).unwrap();
                let expect = gen(Surface::Genus(genus), factors, 1, Symbol::Omega);
                assert_eq!(
                    verdict,
                    ObstructionVerdict::NoSection(NoSectionWitness::Class {
                        factor: 1,
                        class: expect
                    })
                );
            }
        }
    }

    #[test]
    fn rank_one_pullback_leaves_a_cross_term() {
        for genus in 2..=3 {
            for factors in 2..=4 {
                let surface = Surface::Genus(genus);
                let candidate = CandidatePullback::rank_one(genus, factors).unwrap();
                // The first composition collapses: w(1) + a1⌣b1 on one factor
                // cancels exactly, so the witness appears at the second.
                let g1 = candidate
                    .pull_back(&diagonal_class(surface, 2, 1, 2).unwrap(), 1)
                    .unwrap();
                assert!(g1.is_zero());
                let verdict = obstruction_closed_surface(&candidate).unwrap();
                let expect = gen(surface, factors, 2, Symbol::Omega)
                    .add(
                        &gen(surface, factors, 1, Symbol::A(1))
                            .cup(&gen(surface, factors, 2, Symbol::B(1)))
                            .unwrap(),
                    )
                    .unwrap();
                assert_eq!(
                    verdict,
                    ObstructionVerdict::NoSection(NoSectionWitness::Class {
                        factor: 2,
                        class: expect
                    })
                );
            }
        }
    }

    #[test]
    fn projection_pullback_scales_by_the_euler_characteristic() {
        for genus in 2..=3u32 {
            for factors in 2..=4 {
                let candidate = CandidatePullback::first_projection(genus, factors).unwrap();
                let verdict = obstruction_closed_surface(&candidate).unwrap();
                let expect = gen(Surface::Genus(genus), factors, 1, Symbol::Omega)
                    .scaled(&q(2 - 2 * i64::from(genus)));
                assert_eq!(
                    verdict,
                    ObstructionVerdict::NoSection(NoSectionWitness::Class {
                        factor: 1,
                        class: expect
                    })
                );
            }
        }
    }

    #[test]
    fn projection_pullback_reproduces_the_pairwise_diagonal() {
        // Along (p_1^*, p_2) the two-factor diagonal class lands exactly on
        // the diagonal class of factors 1 and 2: the membership coefficient
        // forced on a section candidate is 1.
        let surface = Surface::Genus(2);
        let candidate = CandidatePullback::first_projection(2, 3).unwrap();
        let pulled = candidate
            .pull_back(&diagonal_class(surface, 2, 1, 2).unwrap(), 2)
            .unwrap();
        assert_eq!(pulled, diagonal_class(surface, 3, 1, 2).unwrap());
    }

    #[test]
    fn diagonal_classes_are_linearly_independent() {
        for genus in 1..=2u32 {
            for factors in 2..=4usize {
                let surface = Surface::Genus(genus);
                let mut all = Vec::new();
                for s in 1..=factors {
                    for t in s + 1..=factors {
                        all.push(diagonal_class(surface, factors, s, t).unwrap());
                    }
                }
                for leave_out in 0..all.len() {
                    let rest: Vec<GradedClass> = all
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != leave_out)
                        .map(|(_, c)| c.clone())
                        .collect();
                    assert_eq!(
                        span_solve(&rest, &all[leave_out]),
                        None,
                        "genus={genus} factors={factors} leave_out={leave_out}"
                    );
                }
            }
        }
    }

    #[test]
    fn span_solve_returns_exact_coefficients() {
        let surface = Surface::Genus(2);
        let d12 = diagonal_class(surface, 3, 1, 2).unwrap();
        let d13 = diagonal_class(surface, 3, 1, 3).unwrap();
        let d23 = diagonal_class(surface, 3, 2, 3).unwrap();
        let minus_half = BigRational::new((-1).into(), 2.into());
        let combo = d12.scaled(&q(3)).add(&d23.scaled(&minus_half)).unwrap();
        let gens = [d12, d13, d23];
        let sol = span_solve(&gens, &combo).unwrap();
        assert_eq!(sol[0], q(3));
        assert!(sol[1].is_zero());
        assert_eq!(sol[2], BigRational::new((-1).into(), 2.into()));
        let zero = GradedClass::zero(surface, 3);
        assert_eq!(span_solve(&gens, &zero), Some(vec![q(0), q(0), q(0)]));
    }

    #[test]
    fn matrix_construction_matches_the_presets() {
        let genus = 2u32;
        let factors = 3usize;
        let g = genus as usize;
        let cols = 2 * g * factors;
        let mut matrix = vec![vec![q(0); cols]; 2 * g];
        for k in 0..g {
            matrix[k][k] = q(1); // a_k -> a_k of factor 1
            matrix[g + k][g + k] = q(1); // b_k -> b_k of factor 1
        }
        let built = CandidatePullback::from_matrix(genus, factors, &matrix, q(1)).unwrap();
        assert_eq!(
            built,
            CandidatePullback::first_projection(genus, factors).unwrap()
        );
        let zero = CandidatePullback::from_matrix(genus, factors, &vec![vec![q(0); cols]; 2 * g], q(0))
            .unwrap();
        assert_eq!(zero, CandidatePullback::vanishing(genus, factors).unwrap());
    }

    #[test]
    fn malformed_pullback_data_is_rejected() {
        assert_eq!(
            CandidatePullback::from_matrix(2, 2, &vec![vec![q(0); 8]; 3], q(0)),
            Err(Error::BadPullback("expected 2*genus rows"))
        );
        assert_eq!(
            CandidatePullback::from_matrix(2, 2, &vec![vec![q(0); 7]; 4], q(0)),
            Err(Error::BadPullback("expected 2*genus*factors columns"))
        );
        let surface = Surface::Genus(2);
        let wrong_degree = gen(surface, 2, 1, Symbol::Omega);
        assert_eq!(
            CandidatePullback::from_images(
                2,
                2,
                vec![wrong_degree.clone(), GradedClass::zero(surface, 2)],
                vec![GradedClass::zero(surface, 2); 2],
                GradedClass::zero(surface, 2),
            ),
            Err(Error::BadPullback("basis images must have degree one"))
        );
        assert_eq!(
            CandidatePullback::from_images(
                2,
                2,
                vec![GradedClass::zero(surface, 2); 2],
                vec![GradedClass::zero(surface, 2); 2],
                gen(surface, 2, 1, Symbol::A(1)),
            ),
            Err(Error::BadPullback(
                "fundamental class image must have degree two"
            ))
        );
    }

    #[test]
    fn obstruction_preconditions() {
        let candidate = CandidatePullback::vanishing(1, 2).unwrap();
        assert_eq!(
            obstruction_closed_surface(&candidate),
            Err(Error::Requires("genus at least two"))
        );
        let candidate = CandidatePullback::vanishing(2, 1).unwrap();
        assert_eq!(
            obstruction_closed_surface(&candidate),
            Err(Error::Requires("at least two factors"))
        );
    }

    #[test]
    fn sphere_constraints_are_unsatisfiable_for_every_dimension() {
        for k in 1..=5 {
            let verdict = s2k_section_constraints(k).unwrap();
            let expect = vec![
                LinearConstraint {
                    kappa: q(1),
                    constant: q(1),
                },
                LinearConstraint {
                    kappa: q(1),
                    constant: q(-1),
                },
            ];
            assert_eq!(
                verdict,
                ObstructionVerdict::NoSection(NoSectionWitness::Constraints(expect))
            );
        }
        assert_eq!(
            s2k_section_constraints(0),
            Err(Error::Requires("a sphere of positive even dimension"))
        );
    }

    #[test]
    fn without_the_vanishing_requirement_nothing_is_forced() {
        assert_eq!(sphere_pair_verdict(false), ObstructionVerdict::Inconclusive);
    }

    #[test]
    fn constraint_satisfiability_logic() {
        let sat = vec![
            LinearConstraint {
                kappa: q(2),
                constant: q(2),
            },
            LinearConstraint {
                kappa: q(1),
                constant: q(1),
            },
            LinearConstraint {
                kappa: q(0),
                constant: q(0),
            },
        ];
        assert!(constraints_satisfiable(&sat));
        let unsat = vec![LinearConstraint {
            kappa: q(0),
            constant: q(3),
        }];
        assert!(!constraints_satisfiable(&unsat));
        assert_eq!(format!("{}", sat[0]), "2*k + 2 = 0");
        assert_eq!(
            format!(
                "{}",
                LinearConstraint {
                    kappa: q(1),
                    constant: q(-1)
                }
            ),
            "k - 1 = 0"
        );
    }

    #[test]
    fn h1_dimension_values() {
        assert_eq!(h1_pconf_dimension(2, 1).unwrap(), 4);
        assert_eq!(h1_pconf_dimension(2, 3).unwrap(), 12);
        assert_eq!(h1_pconf_dimension(3, 2).unwrap(), 12);
        assert_eq!(
            h1_pconf_dimension(1, 2),
            Err(Error::Requires("genus at least two"))
        );
        assert_eq!(
            h1_pconf_dimension(2, 0),
            Err(Error::Requires("at least one factor"))
        );
    }
}
