//! Intersection numbers of round curves by explicit polygon reduction.
//!
//! The curve surrounding a subset S of punctures is drawn as the outline of
//! a comb: a horizontal bar below the puncture line with one vertical tooth
//! rising around each puncture of S. Two combs with incommensurable edge
//! coordinates meet only in proper crossings of a horizontal against a
//! vertical edge. Crossing pairs that are consecutive along both outlines
//! and bound a region winding around no puncture cancel by isotopy;
//! removing such pairs until none remain leaves the curves in minimal
//! position, and the survivor count is the geometric intersection number.
//!
//! This route never looks at coordinate vectors or normal-form slabs, which
//! keeps it an independent check on the coordinate-based machinery.

use num_rational::Rational64;
use num_traits::{Signed, Zero};

type Q = Rational64;

#[derive(Clone, PartialEq, Eq, Debug)]
struct Pt {
    x: Q,
    y: Q,
}

/// Closed counterclockwise outline of the comb with teeth at `s`. The
/// closing edge from the last vertex to the first is implicit.
fn comb(s: &[usize], w: Q, h: Q, yl: Q) -> Vec<Pt> {
    let lo = Q::from(s[0] as i64);
    let hi = Q::from(*s.last().unwrap() as i64);
    let (bot, top) = (yl - w, yl + w);
    let mut out = vec![
        Pt { x: lo - w, y: bot },
        Pt { x: hi + w, y: bot },
        Pt { x: hi + w, y: top },
    ];
    for &p in s.iter().rev() {
        let p = Q::from(p as i64);
        out.push(Pt { x: p + w, y: top });
        out.push(Pt { x: p + w, y: h });
        out.push(Pt { x: p - w, y: h });
        out.push(Pt { x: p - w, y: top });
    }
    out.push(Pt { x: lo - w, y: top });
    out
}

/// Proper crossing of two axis-aligned segments, as fractional positions
/// along each. The comb parameters guarantee no shared coordinates, so
/// touching or collinear contact cannot occur.
fn cross_hv(p1: &Pt, q1: &Pt, p2: &Pt, q2: &Pt) -> Option<(Q, Q)> {
    if p1.y == q1.y && p2.x == q2.x {
        let (lo, hi) = if p1.x < q1.x { (p1.x, q1.x) } else { (q1.x, p1.x) };
        let (lo2, hi2) = if p2.y < q2.y { (p2.y, q2.y) } else { (q2.y, p2.y) };
        if lo < p2.x && p2.x < hi && lo2 < p1.y && p1.y < hi2 {
            let t = (p2.x - p1.x) / (q1.x - p1.x);
            let s = (p1.y - p2.y) / (q2.y - p2.y);
            return Some((t, s));
        }
        None
    } else if p1.x == q1.x && p2.y == q2.y {
        cross_hv(p2, q2, p1, q1).map(|(s, t)| (t, s))
    } else {
        None
    }
}

/// Signed crossings of the closed polyline with the upward ray from
/// (px, 0); leftward passage above the puncture counts +1.
fn winding(pts: &[Pt], px: Q) -> i64 {
    let mut w = 0;
    for k in 0..pts.len() {
        let u = &pts[k];
        let v = &pts[(k + 1) % pts.len()];
        if u.x == v.x {
            continue;
        }
        let (lo, hi, sign) = if u.x < v.x { (u.x, v.x, -1) } else { (v.x, u.x, 1) };
        if lo < px && px < hi {
            let y_at = u.y + (v.y - u.y) * (px - u.x) / (v.x - u.x);
            assert!(!y_at.is_zero());
            if y_at.is_positive() {
                w += sign;
            }
        }
    }
    w
}

/// Vertices from crossing `from` forward along the outline to crossing
/// `to`; crossings are (segment index, parameter, point).
fn arc(poly: &[Pt], from: &(usize, Q, Pt), to: &(usize, Q, Pt)) -> Vec<Pt> {
    let mut out = vec![from.2.clone()];
    if !(from.0 == to.0 && from.1 < to.1) {
        let mut seg = from.0;
        loop {
            seg = (seg + 1) % poly.len();
            out.push(poly[seg].clone());
            if seg == to.0 {
                break;
            }
        }
    }
    out.push(to.2.clone());
    out
}

/// Geometric intersection number of the round curves about two puncture
/// subsets of the n-punctured disk. Subsets must be strictly increasing and
/// within 1..=n.
pub fn round_intersection(n: usize, s1: &[usize], s2: &[usize]) -> usize {
    for s in [s1, s2] {
        assert!(!s.is_empty());
        assert!(s.windows(2).all(|p| p[0] < p[1]));
        assert!(*s.last().unwrap() <= n && s[0] >= 1);
    }
    let r = |num: i64, den: i64| Q::new(num, den);
    let pa = comb(s1, r(1, 8), r(1, 3), r(-1, 2));
    let pb = comb(s2, r(1, 9), r(1, 4), r(-3, 5));

    // Crossings as positions along each outline.
    let mut on_a: Vec<(usize, Q, Pt)> = Vec::new();
    let mut on_b: Vec<(usize, Q, Pt)> = Vec::new();
    for ka in 0..pa.len() {
        let (u1, v1) = (&pa[ka], &pa[(ka + 1) % pa.len()]);
        for kb in 0..pb.len() {
            let (u2, v2) = (&pb[kb], &pb[(kb + 1) % pb.len()]);
            if let Some((t, s)) = cross_hv(u1, v1, u2, v2) {
                let at = Pt {
                    x: u1.x + (v1.x - u1.x) * t,
                    y: u1.y + (v1.y - u1.y) * t,
                };
                on_a.push((ka, t, at.clone()));
                on_b.push((kb, s, at));
            }
        }
    }

    let mut alive: Vec<usize> = (0..on_a.len()).collect();
    'restart: loop {
        let mut order_a = alive.clone();
        order_a.sort_by(|&x, &y| (on_a[x].0, on_a[x].1).cmp(&(on_a[y].0, on_a[y].1)));
        let mut order_b = alive.clone();
        order_b.sort_by(|&x, &y| (on_b[x].0, on_b[x].1).cmp(&(on_b[y].0, on_b[y].1)));
        let succ = |order: &[usize], i: usize| {
            let pos = order.iter().position(|&x| x == i).unwrap();
            order[(pos + 1) % order.len()]
        };
        for &i in &order_a {
            let j = succ(&order_a, i);
            if i == j {
                continue;
            }
            let mut b_arcs = Vec::new();
            if succ(&order_b, j) == i {
                b_arcs.push(arc(&pb, &on_b[j], &on_b[i]));
            }
            if succ(&order_b, i) == j {
                let mut rev = arc(&pb, &on_b[i], &on_b[j]);
                rev.reverse();
                b_arcs.push(rev);
            }
            let a_arc = arc(&pa, &on_a[i], &on_a[j]);
            for b_arc in b_arcs {
                let mut loop_pts = a_arc.clone();
                loop_pts.extend(b_arc.into_iter().skip(1));
                loop_pts.pop();
                if (1..=n).all(|p| winding(&loop_pts, Q::from(p as i64)) == 0) {
                    alive.retain(|&x| x != i && x != j);
                    continue 'restart;
                }
            }
        }
        return alive.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_or_nested_subsets_do_not_cross() {
        assert_eq!(round_intersection(4, &[1, 2], &[3, 4]), 0);
        assert_eq!(round_intersection(4, &[1, 2], &[1, 2, 3]), 0);
        assert_eq!(round_intersection(4, &[2], &[1, 3]), 0);
        assert_eq!(round_intersection(5, &[2, 3], &[1, 2, 3, 4]), 0);
        assert_eq!(round_intersection(5, &[1, 5], &[2, 4]), 0);
    }

    #[test]
    fn linked_pairs_cross_twice() {
        assert_eq!(round_intersection(3, &[1, 2], &[2, 3]), 2);
        assert_eq!(round_intersection(4, &[1, 2], &[2, 3]), 2);
        assert_eq!(round_intersection(4, &[1, 3], &[2, 3]), 2);
        assert_eq!(round_intersection(4, &[1, 3], &[3, 4]), 2);
        assert_eq!(round_intersection(5, &[1, 2, 4], &[2, 3]), 2);
    }

    #[test]
    fn interleaved_pairs_cross_more() {
        // {1,3} vs {2,4}: each pair of adjacent gaps is pierced twice.
        assert_eq!(round_intersection(4, &[1, 3], &[2, 4]), 4);
        assert_eq!(round_intersection(6, &[1, 3, 5], &[2, 4, 6]), 6);
    }

    #[test]
    fn self_intersection_vanishes() {
        for s in [vec![1, 2], vec![1, 3], vec![2, 3, 5]] {
            assert_eq!(round_intersection(5, &s, &s), 0, "{s:?}");
        }
    }

    #[test]
    fn symmetric() {
        for (s1, s2) in [(vec![1, 3], vec![2, 3]), (vec![1, 2, 4], vec![2, 5])] {
            assert_eq!(
                round_intersection(5, &s1, &s2),
                round_intersection(5, &s2, &s1)
            );
        }
    }
}
