//! Ordered point configurations on the unit sphere and the near-point
//! addition construction, which flows along a great circle.

use crate::error::{Error, Result};
use crate::UNIT_TOLERANCE;

/// Ordered configuration of pairwise distinct unit vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereConfig {
    points: Vec<[f64; 3]>,
}

impl SphereConfig {
    /// Points must be unit length within [`UNIT_TOLERANCE`] and pairwise
    /// distinct.
    pub fn new(points: Vec<[f64; 3]>) -> Result<Self> {
        for (idx, p) in points.iter().enumerate() {
            if !p.iter().all(|c| c.is_finite()) {
                return Err(Error::NonFinite);
            }
            let deviation = (norm(*p) - 1.0).abs();
            if deviation > UNIT_TOLERANCE {
                return Err(Error::OffSphere { index: idx + 1, deviation });
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if spherical_distance(points[i], points[j]) == 0.0 {
                    return Err(Error::CoincidentPoints { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Self { points })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[[f64; 3]] {
        &self.points
    }

    /// Half the minimal pairwise great-circle distance.
    pub fn epsilon_pairwise(&self) -> Result<f64> {
        if self.points.len() < 2 {
            return Err(Error::TooFewPoints { n: self.points.len(), min: 2 });
        }
        let mut min = f64::INFINITY;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                min = min.min(spherical_distance(self.points[i], self.points[j]));
            }
        }
        Ok(min / 2.0)
    }

    /// Flows along the great circle from point `k` (1-based) with initial
    /// velocity `direction` for the pairwise safety radius and prepends the
    /// endpoint. The direction must be unit length and tangent to the
    /// sphere at that point. Forgetting point 1 of the output gives back
    /// `self`.
    pub fn add_near_k(&self, k: usize, direction: [f64; 3]) -> Result<Self> {
        if k == 0 || k > self.points.len() {
            return Err(Error::PointOutOfRange { index: k, n: self.points.len() });
        }
        if !direction.iter().all(|c| c.is_finite())
            || (norm(direction) - 1.0).abs() > UNIT_TOLERANCE
        {
            return Err(Error::NonUnitDirection);
        }
        let base = self.points[k - 1];
        if dot(base, direction).abs() > UNIT_TOLERANCE {
            return Err(Error::NotTangent);
        }
        let eps = self.epsilon_pairwise()?;
        let (sin, cos) = eps.sin_cos();
        let mut new = [
            cos * base[0] + sin * direction[0],
            cos * base[1] + sin * direction[1],
            cos * base[2] + sin * direction[2],
        ];
        let len = norm(new);
        for c in &mut new {
            *c /= len;
        }
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
}

/// Great-circle distance between unit vectors.
pub fn spherical_distance(p: [f64; 3], q: [f64; 3]) -> f64 {
    let cross = [
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    ];
    norm(cross).atan2(dot(p, q))
}

fn dot(p: [f64; 3], q: [f64; 3]) -> f64 {
    p[0] * q[0] + p[1] * q[1] + p[2] * q[2]
}

fn norm(p: [f64; 3]) -> f64 {
    dot(p, p).sqrt()
}
