//! Ordered point configurations in the plane and the two point-addition
//! constructions on them.
//!
//! Both constructions compute a safety radius from the configuration, flow
//! for that arc length from a chosen basepoint, and prepend the endpoint.
//! Adding near a point flows along a straight line from one of the existing
//! points for half the minimal pairwise distance. Adding at infinity views
//! the plane as the unit sphere minus its north pole under the stereographic
//! correspondence and flows down from the pole for half the minimal
//! spherical distance from the lifted points to the pole.
//!
//! Prepending leaves every input point untouched, so forgetting the first
//! point of the output recovers the input with no rounding at all.

use crate::error::{Error, Result};
use crate::UNIT_TOLERANCE;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

/// Ordered configuration of pairwise distinct points in the plane with
/// double-precision coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarConfig {
    points: Vec<[f64; 2]>,
}

impl PlanarConfig {
    /// Coordinates must be finite and the points pairwise distinct.
    pub fn new(points: Vec<[f64; 2]>) -> Result<Self> {
        for p in &points {
            if !p[0].is_finite() || !p[1].is_finite() {
                return Err(Error::NonFinite);
            }
        }
        check_distinct(&points, |p, q| p == q)?;
        Ok(Self { points })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    /// Half the minimal pairwise Euclidean distance.
    pub fn epsilon_pairwise(&self) -> Result<f64> {
        if self.points.len() < 2 {
            return Err(Error::TooFewPoints { n: self.points.len(), min: 2 });
        }
        let mut min = f64::INFINITY;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                min = min.min(euclidean(self.points[i], self.points[j]));
            }
        }
        Ok(min / 2.0)
    }

    /// Half the minimal spherical distance from the stereographic lifts of
    /// the points to the north pole.
    pub fn epsilon_infinity(&self) -> Result<f64> {
        if self.points.is_empty() {
            return Err(Error::TooFewPoints { n: 0, min: 1 });
        }
        let min = self
            .points
            .iter()
            .map(|p| distance_to_pole(*p))
            .fold(f64::INFINITY, f64::min);
        Ok(min / 2.0)
    }

    /// Flows in a straight line from point `k` (1-based) along the unit
    /// vector `direction` for the pairwise safety radius and prepends the
    /// endpoint. Forgetting point 1 of the output gives back `self`.
    pub fn add_near_k(&self, k: usize, direction: [f64; 2]) -> Result<Self> {
        if k == 0 || k > self.points.len() {
            return Err(Error::PointOutOfRange { index: k, n: self.points.len() });
        }
        check_unit(direction)?;
        let eps = self.epsilon_pairwise()?;
        let base = self.points[k - 1];
        let new = [base[0] + eps * direction[0], base[1] + eps * direction[1]];
        self.with_prepended(new)
    }

    /// Flows down from the north pole along the unit tangent `direction`
    /// for the infinity safety radius and projects the endpoint back to the
    /// plane. The new point is prepended and lands strictly farther from
    /// the origin than every input point.
    pub fn add_at_infinity(&self, direction: [f64; 2]) -> Result<Self> {
        check_unit(direction)?;
        let eps = self.epsilon_infinity()?;
        // The flow endpoint (sin(e) * u, cos(e)) projects to u / tan(e / 2).
        let scale = 1.0 / (eps / 2.0).tan();
        let new = [scale * direction[0], scale * direction[1]];
        self.with_prepended(new)
    }

    /// Removes point `i` (1-based). `forget(1)` undoes either addition
    /// exactly.
    pub fn forget(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.points.len() {
            return Err(Error::PointOutOfRange { index: i, n: self.points.len() });
        }
        let mut points = self.points.clone();
        points.remove(i - 1);
        Ok(Self { points })
    }

    fn with_prepended(&self, new: [f64; 2]) -> Result<Self> {
        let mut points = Vec::with_capacity(self.points.len() + 1);
        points.push(new);
        points.extend_from_slice(&self.points);
        Self::new(points)
    }
}

/// Ordered configuration of pairwise distinct points in the plane with
/// exact rational coordinates. The straight-line flow is affine, so the
/// near-point addition stays exact whenever the flow time is rational; the
/// constructions that pass through the sphere are transcendental and live
/// on [`PlanarConfig`] only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPlanarConfig {
    points: Vec<[BigRational; 2]>,
}

impl ExactPlanarConfig {
    /// Points must be pairwise distinct.
    pub fn new(points: Vec<[BigRational; 2]>) -> Result<Self> {
        check_distinct(&points, |p, q| p == q)?;
        Ok(Self { points })
    }

    pub fn from_integers(points: &[[i64; 2]]) -> Result<Self> {
        Self::new(
            points
                .iter()
                .map(|p| {
                    [
                        BigRational::from_integer(p[0].into()),
                        BigRational::from_integer(p[1].into()),
                    ]
                })
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[[BigRational; 2]] {
        &self.points
    }

    /// Quarter of the minimal pairwise squared distance, exactly.
    pub fn epsilon_pairwise_squared(&self) -> Result<BigRational> {
        if self.points.len() < 2 {
            return Err(Error::TooFewPoints { n: self.points.len(), min: 2 });
        }
        let mut min: Option<BigRational> = None;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let dx = &self.points[i][0] - &self.points[j][0];
                let dy = &self.points[i][1] - &self.points[j][1];
                let sq = &dx * &dx + &dy * &dy;
                if min.as_ref().is_none_or(|m| sq < *m) {
                    min = Some(sq);
                }
            }
        }
        Ok(min.expect("two points checked above") / BigRational::from_integer(4.into()))
    }

    /// Half the minimal pairwise distance. Errors when that value is
    /// irrational.
    pub fn epsilon_pairwise(&self) -> Result<BigRational> {
        rational_sqrt(&self.epsilon_pairwise_squared()?).ok_or(Error::IrrationalFlowTime)
    }

    /// Exact counterpart of [`PlanarConfig::add_near_k`]. The direction
    /// must be exactly unit length and the flow time rational.
    pub fn add_near_k(&self, k: usize, direction: &[BigRational; 2]) -> Result<Self> {
        if k == 0 || k > self.points.len() {
            return Err(Error::PointOutOfRange { index: k, n: self.points.len() });
        }
        let norm_sq = &direction[0] * &direction[0] + &direction[1] * &direction[1];
        if !norm_sq.is_one() {
            return Err(Error::NonUnitDirection);
        }
        let eps = self.epsilon_pairwise()?;
        let base = &self.points[k - 1];
        let new = [
            &base[0] + &eps * &direction[0],
            &base[1] + &eps * &direction[1],
        ];
        let mut points = Vec::with_capacity(self.points.len() + 1);
        points.push(new);
        points.extend_from_slice(&self.points);
        Self::new(points)
    }

    /// Removes point `i` (1-based). `forget(1)` undoes an addition exactly.
    pub fn forget(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.points.len() {
            return Err(Error::PointOutOfRange { index: i, n: self.points.len() });
        }
        let mut points = self.points.clone();
        points.remove(i - 1);
        Ok(Self { points })
    }

    /// Rounds every coordinate to double precision.
    pub fn to_double(&self) -> Result<PlanarConfig> {
        let points = self
            .points
            .iter()
            .map(|p| match (p[0].to_f64(), p[1].to_f64()) {
                (Some(x), Some(y)) => Ok([x, y]),
                _ => Err(Error::NonFinite),
            })
            .collect::<Result<Vec<_>>>()?;
        PlanarConfig::new(points)
    }
}

fn check_distinct<P>(points: &[P], coincide: impl Fn(&P, &P) -> bool) -> Result<()> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if coincide(&points[i], &points[j]) {
                return Err(Error::CoincidentPoints { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(())
}

fn euclidean(p: [f64; 2], q: [f64; 2]) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

/// Spherical distance from the stereographic lift of `p` to the north
/// pole. A point at planar radius r lifts to colatitude 2 * atan(1 / r).
fn distance_to_pole(p: [f64; 2]) -> f64 {
    2.0 * 1.0_f64.atan2(p[0].hypot(p[1]))
}

fn check_unit(v: [f64; 2]) -> Result<()> {
    if !v[0].is_finite() || !v[1].is_finite() {
        return Err(Error::NonUnitDirection);
    }
    if (v[0].hypot(v[1]) - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::NonUnitDirection);
    }
    Ok(())
}

/// Exact square root of a non-negative rational, when one exists.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let sn = q.numer().sqrt();
    let sd = q.denom().sqrt();
    if &(&sn * &sn) == q.numer() && &(&sd * &sd) == q.denom() {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn cfg(points: &[[f64; 2]]) -> PlanarConfig {
        PlanarConfig::new(points.to_vec()).unwrap()
    }

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pairwise_radius_of_an_axis_pair() {
        assert_eq!(cfg(&[[0.0, 0.0], [1.0, 0.0]]).epsilon_pairwise().unwrap(), 0.5);
    }

    #[test]
    fn pairwise_radius_takes_the_minimum_over_pairs() {
        let c = cfg(&[[0.0, 0.0], [1.0, 0.0], [0.0, 3.0]]);
        assert_eq!(c.epsilon_pairwise().unwrap(), 0.5);
    }

    #[test]
    fn pairwise_radius_needs_two_points() {
        assert_eq!(
            cfg(&[[0.0, 0.0]]).epsilon_pairwise(),
            Err(Error::TooFewPoints { n: 1, min: 2 })
        );
    }

    #[test]
    fn constructor_rejects_bad_points() {
        assert_eq!(
            PlanarConfig::new(vec![[1.0, 2.0], [1.0, 2.0]]),
            Err(Error::CoincidentPoints { i: 1, j: 2 })
        );
        assert_eq!(PlanarConfig::new(vec![[f64::NAN, 0.0]]), Err(Error::NonFinite));
    }

    #[test]
    fn infinity_radius_of_the_origin_is_a_quarter_turn() {
        let eps = cfg(&[[0.0, 0.0]]).epsilon_infinity().unwrap();
        assert!((eps - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn infinity_radius_shrinks_as_points_move_outward() {
        let mut last = f64::INFINITY;
        for scale in [1.0, 2.0, 5.0, 40.0] {
            let eps = cfg(&[[scale, 0.0], [0.0, 2.0 * scale]]).epsilon_infinity().unwrap();
            assert!(eps < last);
            last = eps;
        }
    }

    #[test]
    fn infinity_radius_is_set_by_the_farthest_point() {
        let eps = cfg(&[[0.0, 0.0], [1.0e6, 0.0]]).epsilon_infinity().unwrap();
        let far = 1.0_f64.atan2(1.0e6);
        assert!(((eps - far) / far).abs() < 1e-12);
        assert!(eps < 1.0e-5);
    }

    #[test]
    fn infinity_radius_needs_a_point() {
        assert_eq!(
            PlanarConfig::new(vec![]).unwrap().epsilon_infinity(),
            Err(Error::TooFewPoints { n: 0, min: 1 })
        );
    }

    #[test]
    fn near_point_addition_flows_half_the_gap() {
        let input = cfg(&[[0.0, 0.0], [1.0, 0.0]]);
        let out = input.add_near_k(1, [1.0, 0.0]).unwrap();
        assert_eq!(out.n(), 3);
        assert_eq!(out.points()[0], [0.5, 0.0]);
        assert_eq!(out.forget(1).unwrap(), input);
    }

    #[test]
    fn near_point_addition_validates_its_inputs() {
        let c = cfg(&[[0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(
            c.add_near_k(0, [1.0, 0.0]),
            Err(Error::PointOutOfRange { index: 0, n: 2 })
        );
        assert_eq!(
            c.add_near_k(3, [1.0, 0.0]),
            Err(Error::PointOutOfRange { index: 3, n: 2 })
        );
        assert_eq!(c.add_near_k(1, [1.0, 1.0]), Err(Error::NonUnitDirection));
    }

    #[test]
    fn infinity_addition_lands_outside_every_input() {
        let c = cfg(&[[3.0, -1.0], [0.25, 0.5], [-2.0, 2.0]]);
        let out = c.add_at_infinity([0.6, 0.8]).unwrap();
        let new = out.points()[0];
        let new_r = new[0].hypot(new[1]);
        for p in c.points() {
            assert!(new_r > p[0].hypot(p[1]));
        }
        assert_eq!(out.forget(1).unwrap(), c);
    }

    #[test]
    fn infinity_addition_is_rotation_equivariant() {
        let theta: f64 = 0.7;
        let rot = |p: [f64; 2]| {
            [
                p[0] * theta.cos() - p[1] * theta.sin(),
                p[0] * theta.sin() + p[1] * theta.cos(),
            ]
        };
        let c = cfg(&[[3.0, -1.0], [0.25, 0.5], [-2.0, 2.0]]);
        let rotated = PlanarConfig::new(c.points().iter().map(|p| rot(*p)).collect()).unwrap();
        let u = [0.6, 0.8];
        let direct = rotated.add_at_infinity(rot(u)).unwrap().points()[0];
        let mapped = rot(c.add_at_infinity(u).unwrap().points()[0]);
        assert!((direct[0] - mapped[0]).abs() < 1e-9);
        assert!((direct[1] - mapped[1]).abs() < 1e-9);
    }

    #[test]
    fn forget_checks_its_index() {
        let c = cfg(&[[0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(c.forget(0), Err(Error::PointOutOfRange { index: 0, n: 2 }));
        assert_eq!(c.forget(3), Err(Error::PointOutOfRange { index: 3, n: 2 }));
        assert_eq!(c.forget(2).unwrap(), cfg(&[[0.0, 0.0]]));
    }

    #[test]
    fn exact_pairwise_radius_and_flow() {
        let c = ExactPlanarConfig::from_integers(&[[0, 0], [1, 0]]).unwrap();
        assert_eq!(c.epsilon_pairwise().unwrap(), rational(1, 2));
        let out = c.add_near_k(1, &[rational(1, 1), rational(0, 1)]).unwrap();
        assert_eq!(out.points()[0], [rational(1, 2), rational(0, 1)]);
        assert_eq!(out.forget(1).unwrap(), c);
    }

    #[test]
    fn exact_flow_along_a_pythagorean_direction() {
        let c = ExactPlanarConfig::from_integers(&[[0, 0], [5, 0]]).unwrap();
        let out = c.add_near_k(1, &[rational(3, 5), rational(4, 5)]).unwrap();
        assert_eq!(out.points()[0], [rational(3, 2), rational(2, 1)]);
    }

    #[test]
    fn exact_flow_time_can_be_irrational() {
        let c = ExactPlanarConfig::from_integers(&[[0, 0], [1, 1]]).unwrap();
        assert_eq!(c.epsilon_pairwise_squared().unwrap(), rational(1, 2));
        assert_eq!(
            c.add_near_k(1, &[rational(1, 1), rational(0, 1)]),
            Err(Error::IrrationalFlowTime)
        );
    }

    #[test]
    fn exact_direction_must_be_exactly_unit() {
        let c = ExactPlanarConfig::from_integers(&[[0, 0], [1, 0]]).unwrap();
        assert_eq!(
            c.add_near_k(1, &[rational(1, 1), rational(1, 1)]),
            Err(Error::NonUnitDirection)
        );
    }

    #[test]
    fn exact_config_rounds_to_double() {
        let c = ExactPlanarConfig::new(vec![
            [rational(1, 3), rational(0, 1)],
            [rational(1, 1), rational(2, 1)],
        ])
        .unwrap();
        let d = c.to_double().unwrap();
        assert!((d.points()[0][0] - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(d.points()[1], [1.0, 2.0]);
    }

    #[test]
    fn exact_constructor_rejects_duplicates() {
        assert_eq!(
            ExactPlanarConfig::from_integers(&[[2, 3], [0, 0], [2, 3]]),
            Err(Error::CoincidentPoints { i: 1, j: 3 })
        );
    }
}
