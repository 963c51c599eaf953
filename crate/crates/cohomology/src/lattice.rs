//! Finitely presented abelian groups and Smith normal form.
//!
//! The second cohomology of the configuration space of the sphere is
//! presented by n generators p_1..p_n (one top class per point) and the
//! relations p_i + p_j over all pairs; the invariant factors of that
//! presentation and explicit memberships in its relation lattice are what the
//! sphere-side obstruction arguments consume.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::Error;

/// An abelian group given as Z^generators modulo the row span of integer
/// relation vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLatticePresentation {
    generators: usize,
    relations: Vec<Vec<BigInt>>,
}

impl IntegerLatticePresentation {
    pub fn new(generators: usize, relations: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        if relations.iter().any(|r| r.len() != generators) {
            return Err(Error::RelationLength(generators));
        }
        Ok(IntegerLatticePresentation {
            generators,
            relations,
        })
    }

    /// The presentation with one generator per point of an n-point sphere
    /// configuration and one relation `p_i + p_j` per pair `i < j`.
    pub fn sphere_h2(points: usize) -> Result<Self, Error> {
        if points < 2 {
            return Err(Error::Requires("at least two points"));
        }
        let mut relations = Vec::new();
        for i in 0..points {
            for j in i + 1..points {
                let mut row = vec![BigInt::zero(); points];
                row[i] = BigInt::from(1);
                row[j] = BigInt::from(1);
                relations.push(row);
            }
        }
        IntegerLatticePresentation::new(points, relations)
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &[Vec<BigInt>] {
        &self.relations
    }

    /// The nonzero diagonal of the Smith normal form of the relation matrix,
    /// including trivial entries; its length is the rank.
    pub fn nonzero_diagonal(&self) -> Vec<BigInt> {
        let smith = smith(&self.relations, self.generators);
        smith.diagonal()
    }

    /// Invariant factors of the presented group: the torsion entries larger
    /// than one in divisibility order, followed by one zero per free rank.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let diagonal = self.nonzero_diagonal();
        let rank = diagonal.len();
        let one = BigInt::from(1);
        let mut factors: Vec<BigInt> = diagonal.into_iter().filter(|d| *d != one).collect();
        for _ in rank..self.generators {
            factors.push(BigInt::zero());
        }
        factors
    }

    /// An integer combination of the relation rows equal to `target`, if one
    /// exists.
    pub fn express(&self, target: &[BigInt]) -> Result<Option<Vec<BigInt>>, Error> {
        if target.len() != self.generators {
            return Err(Error::VectorLength {
                got: target.len(),
                expected: self.generators,
            });
        }
        let rows = self.relations.len();
        if rows == 0 {
            return Ok(if target.iter().all(Zero::is_zero) {
                Some(Vec::new())
            } else {
                None
            });
        }
        // Solve M x = target where M has the relations as columns, via
        // U M V = D: y = V^-1 x must satisfy D y = U target.
        let transposed: Vec<Vec<BigInt>> = (0..self.generators)
            .map(|g| (0..rows).map(|r| self.relations[r][g].clone()).collect())
            .collect();
        let smith = smith(&transposed, rows);
        let rhs = mat_vec(&smith.u, target);
        let mut y = vec![BigInt::zero(); rows];
        for (i, value) in rhs.iter().enumerate() {
            let d = if i < rows.min(self.generators) {
                smith.d[i][i].clone()
            } else {
                BigInt::zero()
            };
            if d.is_zero() {
                if !value.is_zero() {
                    return Ok(None);
                }
            } else {
                if (value % &d) != BigInt::zero() {
                    return Ok(None);
                }
                y[i] = value / &d;
            }
        }
        let x = mat_vec(&smith.v, &y);
        debug_assert_eq!(
            {
                let mut check = vec![BigInt::zero(); self.generators];
                for (r, coeff) in x.iter().enumerate() {
                    for (g, entry) in self.relations[r].iter().enumerate() {
                        check[g] += coeff * entry;
                    }
                }
                check
            },
            target.to_vec()
        );
        Ok(Some(x))
    }
}

/// Invariant factors of the sphere presentation: `[0]` for two points
/// (an infinite cyclic group) and `[2]` for three or more.
pub fn h2_pconf_sphere(points: usize) -> Result<Vec<BigInt>, Error> {
    Ok(IntegerLatticePresentation::sphere_h2(points)?.invariant_factors())
}

/// Certificate that twice a generator lies in the sphere relation lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerVanishing {
    pub vanishes: bool,
    /// Nonzero relation-row coefficients, keyed by the 1-based point pair of
    /// each row.
    pub combination: Vec<((usize, usize), BigInt)>,
}

/// Whether `2·p_k` lies in the relation lattice of the n-point sphere
/// presentation, with the integer combination as witness.
pub fn euler_class_vanishes_sphere(points: usize, k: usize) -> Result<EulerVanishing, Error> {
    if points <= 2 {
        return Err(Error::Requires("more than two points"));
    }
    if k == 0 || k > points {
        return Err(Error::FactorOutOfRange {
            factor: k,
            factors: points,
        });
    }
    let presentation = IntegerLatticePresentation::sphere_h2(points)?;
    let mut target = vec![BigInt::zero(); points];
    target[k - 1] = BigInt::from(2);
    let Some(solution) = presentation.express(&target)? else {
        return Ok(EulerVanishing {
            vanishes: false,
            combination: Vec::new(),
        });
    };
    let mut pairs = Vec::new();
    for i in 1..=points {
        for j in i + 1..=points {
            pairs.push((i, j));
        }
    }
    let combination = pairs
        .into_iter()
        .zip(solution)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(EulerVanishing {
        vanishes: true,
        combination,
    })
}

struct Smith {
    d: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Smith {
    fn diagonal(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        let n = self.d.len().min(if self.d.is_empty() { 0 } else { self.d[0].len() });
        for t in 0..n {
            if self.d[t][t].is_zero() {
                break;
            }
            out.push(self.d[t][t].clone());
        }
        out
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Diagonalize by unimodular row and column operations, maintaining
/// `u * a * v = d` with entries along the diagonal in divisibility order.
fn smith(a: &[Vec<BigInt>], cols: usize) -> Smith {
    let rows = a.len();
    let mut d: Vec<Vec<BigInt>> = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let least_entry = |d: &Vec<Vec<BigInt>>, t: usize| -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if d[r][c].is_zero() {
                    continue;
                }
                match best {
                    Some((br, bc)) if d[br][bc].abs() <= d[r][c].abs() => {}
                    _ => best = Some((r, c)),
                }
            }
        }
        best
    };

    let mut t = 0;
    while t < rows.min(cols) {
        'place: loop {
            let Some((pi, pj)) = least_entry(&d, t) else {
                return Smith { d, u, v };
            };
            d.swap(t, pi);
            u.swap(t, pi);
            if pj != t {
                for row in d.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
            }
            let mut cleared = true;
            for r in t + 1..rows {
                if d[r][t].is_zero() {
                    continue;
                }
                let q = &d[r][t] / &d[t][t];
                if !q.is_zero() {
                    for c in 0..cols {
                        let delta = &q * &d[t][c];
                        d[r][c] -= delta;
                    }
                    for c in 0..rows {
                        let delta = &q * &u[t][c];
                        u[r][c] -= delta;
                    }
                }
                if !d[r][t].is_zero() {
                    cleared = false;
                }
            }
            for c in t + 1..cols {
                if d[t][c].is_zero() {
                    continue;
                }
                let q = &d[t][c] / &d[t][t];
                if !q.is_zero() {
                    for r in 0..rows {
                        let delta = &q * &d[r][t];
                        d[r][c] -= delta;
                    }
                    for row in v.iter_mut() {
                        let delta = &q * &row[t];
                        row[c] -= delta;
                    }
                }
                if !d[t][c].is_zero() {
                    cleared = false;
                }
            }
            if !cleared {
                continue 'place;
            }
            // Divisibility sweep: every remaining entry must be a multiple of
            // the pivot; otherwise fold its row into row t and retry.
            let pivot = d[t][t].clone();
            let offender = (t + 1..rows).find(|&r| {
                (t + 1..cols).any(|c| (&d[r][c] % &pivot) != BigInt::zero())
            });
            if let Some(r) = offender {
                for c in 0..cols {
                    let add = d[r][c].clone();
                    d[t][c] += add;
                }
                for c in 0..rows {
                    let add = u[r][c].clone();
                    u[t][c] += add;
                }
                continue 'place;
            }
            break 'place;
        }
        if d[t][t].is_negative() {
            for c in 0..cols {
                d[t][c] = -d[t][c].clone();
            }
            for c in 0..rows {
                u[t][c] = -u[t][c].clone();
            }
        }
        t += 1;
    }
    Smith { d, u, v }
}
