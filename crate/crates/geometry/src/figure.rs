//! Plain SVG emission for before/after configuration pairs. The first
//! point of the after configuration is drawn highlighted; input points are
//! drawn as open rings so the overlay shows what moved (nothing) and what
//! appeared.

use crate::planar::PlanarConfig;
use crate::sphere::SphereConfig;
use std::fmt::Write;

const SIZE: f64 = 420.0;
const MARGIN: f64 = 30.0;

pub fn planar_svg(before: &PlanarConfig, after: &PlanarConfig) -> String {
    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    for p in before.points().iter().chain(after.points()) {
        for axis in 0..2 {
            min[axis] = min[axis].min(p[axis]);
            max[axis] = max[axis].max(p[axis]);
        }
    }
    let span = (max[0] - min[0]).max(max[1] - min[1]).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let place = |p: [f64; 2]| {
        (
            MARGIN + (p[0] - min[0]) * scale,
            SIZE - MARGIN - (p[1] - min[1]) * scale,
        )
    };
    let mut svg = header();
    for p in before.points() {
        let (x, y) = place(*p);
        let _ = writeln!(
            svg,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"7\" fill=\"none\" stroke=\"#8888aa\"/>"
        );
    }
    for (i, p) in after.points().iter().enumerate() {
        let (x, y) = place(*p);
        let fill = if i == 0 { "#cc3333" } else { "#222222" };
        let _ = writeln!(svg, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3.5\" fill=\"{fill}\"/>");
    }
    svg.push_str("</svg>\n");
    svg
}

/// Orthographic view from outside the north pole; points on the far
/// hemisphere are drawn faded.
pub fn sphere_svg(before: &SphereConfig, after: &SphereConfig) -> String {
    let radius = SIZE / 2.0 - MARGIN;
    let center = SIZE / 2.0;
    let place = |p: [f64; 3]| (center + p[0] * radius, center - p[1] * radius);
    let mut svg = header();
    let _ = writeln!(
        svg,
        "  <circle cx=\"{center:.2}\" cy=\"{center:.2}\" r=\"{radius:.2}\" fill=\"none\" stroke=\"#444444\"/>"
    );
    for p in before.points() {
        let (x, y) = place(*p);
        let opacity = if p[2] < 0.0 { 0.35 } else { 1.0 };
        let _ = writeln!(
            svg,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"7\" fill=\"none\" stroke=\"#8888aa\" opacity=\"{opacity}\"/>"
        );
    }
    for (i, p) in after.points().iter().enumerate() {
        let (x, y) = place(*p);
        let fill = if i == 0 { "#cc3333" } else { "#222222" };
        let opacity = if p[2] < 0.0 { 0.35 } else { 1.0 };
        let _ = writeln!(
            svg,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3.5\" fill=\"{fill}\" opacity=\"{opacity}\"/>"
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn header() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_figure_draws_every_point_once() {
        let before = PlanarConfig::new(vec![[0.0, 0.0], [1.0, 0.0]]).unwrap();
        let after = before.add_near_k(1, [0.0, 1.0]).unwrap();
        let svg = planar_svg(&before, &after);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<circle").count(), before.n() + after.n());
        assert_eq!(svg.matches("#cc3333").count(), 1);
    }

    #[test]
    fn sphere_figure_includes_the_outline() {
        let before =
            SphereConfig::new(vec![[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]]).unwrap();
        let after = before.add_near_k(1, [1.0, 0.0, 0.0]).unwrap();
        let svg = sphere_svg(&before, &after);
        assert_eq!(svg.matches("<circle").count(), before.n() + after.n() + 1);
        assert_eq!(svg.matches("opacity=\"0.35\"").count(), 2);
    }
}
