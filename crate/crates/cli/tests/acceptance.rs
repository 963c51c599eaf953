//! Acceptance gate: one test per criterion, each ending with a single
//! printed PASS or FAIL line. Checks accumulate failure messages rather
//! than panicking early, so one run reports every broken item.

use confsec_cohomology::{
    euler_class_vanishes_sphere, h2_pconf_sphere, obstruction_closed_surface,
    s2k_section_constraints, CandidatePullback, GradedClass, NoSectionWitness,
    ObstructionVerdict, Surface, Symbol,
};
use confsec_core::curve::{geometric_intersection, round_curve, Curve, RoundCurveSpec};
use confsec_core::section::{verify_section, SectionSpec};
use confsec_core::twist::{classify_product_type, twist_word, ReducibilityType};
use confsec_core::word::BraidWord;
use confsec_geometry::{spherical_distance, PlanarConfig, SphereConfig};
use confsec_oracles::polygon::round_intersection;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::time::{Duration, Instant};

fn conclude(number: u32, description: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {number} ({description}): PASS");
    } else {
        println!("criterion {number} ({description}): FAIL");
        panic!(
            "criterion {number} ({description}) failed with {} problem(s):\n{}",
            failures.len(),
            failures.join("\n")
        );
    }
}

macro_rules! check {
    ($failures:expr, $cond:expr, $($msg:tt)*) => {
        if !$cond {
            $failures.push(format!($($msg)*));
        }
    };
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn uniform(state: &mut u64) -> f64 {
    (splitmix(state) >> 11) as f64 / (1u64 << 53) as f64
}

fn range(state: &mut u64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * uniform(state)
}

fn pick(state: &mut u64, n: usize) -> usize {
    (splitmix(state) % n as u64) as usize
}

fn gaussian(state: &mut u64) -> f64 {
    let u = uniform(state).max(1e-300);
    let v = uniform(state);
    (-2.0 * u.ln()).sqrt() * (std::f64::consts::TAU * v).cos()
}

#[test]
fn criterion_1_lantern_identities() {
    let mut failures = Vec::new();
    for preset in [
        "case1-pb3",
        "case1-pb4",
        "case2-pb4",
        "case3-pb4",
        "case3-pb5",
        "case3-pb6",
    ] {
        let started = Instant::now();
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_confsec"))
            .args(["verify-lantern", "--preset", preset])
            .output()
            .expect("binary runs");
        let elapsed = started.elapsed();
        check!(failures, out.status.code() == Some(0), "{preset}: exit {:?}", out.status.code());
        let text = String::from_utf8_lossy(&out.stdout);
        let verdict: serde_json::Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("{preset}: non-JSON output ({e})"));
                continue;
            }
        };
        check!(failures, verdict["status"] == "verified", "{preset}: {}", verdict["status"]);
        check!(
            failures,
            elapsed < Duration::from_secs(5),
            "{preset}: took {elapsed:?}, limit 5 s"
        );
    }
    conclude(1, "lantern identities hold exactly", failures);
}

#[test]
fn criterion_2_trace_classification() {
    let mut failures = Vec::new();
    for i in 1..=10u64 {
        let cls = classify_product_type(i).expect("positive intersection");
        let expected_trace = BigInt::from(2) - BigInt::from(i) * BigInt::from(i);
        check!(
            failures,
            cls.trace == expected_trace,
            "i = {i}: trace {} instead of {expected_trace}",
            cls.trace
        );
        let expected_kind = match i {
            1 => ReducibilityType::Elliptic,
            2 => ReducibilityType::Parabolic,
            _ => ReducibilityType::Hyperbolic,
        };
        check!(
            failures,
            cls.kind == expected_kind,
            "i = {i}: classified {:?} instead of {expected_kind:?}",
            cls.kind
        );
    }
    conclude(2, "twist products classify by exact trace", failures);
}

#[test]
fn criterion_3_section_axioms() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut state = 0xacce_0003u64;
    for n in [4usize, 5, 6] {
        let mut kinds: Vec<Option<usize>> = (1..=n).map(Some).collect();
        kinds.push(None);
        for kind in kinds {
            for trial in 0..10 {
                let mut entries = Vec::new();
                for i in 1..=n {
                    for j in i + 1..=n {
                        entries.push((i, j, pick(&mut state, 7) as i64 - 3));
                    }
                }
                let spec = match kind {
                    Some(k) => SectionSpec::near_k(n, k, &entries).expect("valid spec"),
                    None => SectionSpec::infinity(n, &entries).expect("valid spec"),
                };
                let seed = splitmix(&mut state);
                let label = format!("n = {n}, kind {kind:?}, trial {trial}");
                let report = verify_section(&spec, 100, seed).expect("spec runs");
                check!(
                    failures,
                    report.retraction.len() == n * (n - 1) / 2,
                    "{label}: retraction checked {} generators",
                    report.retraction.len()
                );
                check!(
                    failures,
                    report.homomorphism.len() >= 100,
                    "{label}: only {} homomorphism samples",
                    report.homomorphism.len()
                );
                check!(failures, report.verdict, "{label}: section axioms failed");
            }
        }
    }
    let elapsed = started.elapsed();
    check!(
        failures,
        elapsed < Duration::from_secs(120),
        "suite took {elapsed:?}, limit 2 min"
    );
    conclude(3, "weighted cabling specs satisfy the section axioms", failures);
}

fn subsets_of_size_at_least_two(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for bits in 0u32..(1 << n) {
        if bits.count_ones() >= 2 {
            out.push((1..=n).filter(|i| bits & (1 << (i - 1)) != 0).collect());
        }
    }
    out
}

#[test]
fn criterion_4_intersection_vs_commutation() {
    let mut failures = Vec::new();
    for n in [4usize, 5] {
        let curves: Vec<(Vec<usize>, Curve, BraidWord)> = subsets_of_size_at_least_two(n)
            .into_iter()
            .map(|subset| {
                let curve =
                    round_curve(&RoundCurveSpec::new(n, subset.clone()).unwrap()).unwrap();
                let twist = twist_word(&curve).unwrap();
                (subset, curve, twist)
            })
            .collect();
        for a in 0..curves.len() {
            for b in a..curves.len() {
                let (sa, ca, ta) = &curves[a];
                let (sb, cb, tb) = &curves[b];
                let label = format!("n = {n}, {sa:?} vs {sb:?}");
                let coords_i = geometric_intersection(ca, cb).unwrap();
                let polygon_i = round_intersection(n, sa, sb) as u64;
                check!(
                    failures,
                    coords_i == polygon_i,
                    "{label}: coordinates give {coords_i}, polygons give {polygon_i}"
                );
                let commutator = ta
                    .compose(tb)
                    .and_then(|w| w.compose(&ta.inverse()))
                    .and_then(|w| w.compose(&tb.inverse()))
                    .unwrap();
                let commute = commutator.is_identity();
                check!(
                    failures,
                    (coords_i == 0) == commute,
                    "{label}: intersection {coords_i} but twists commute = {commute}"
                );
            }
        }
    }
    conclude(4, "intersection numbers match polygons and commutation", failures);
}

#[test]
fn criterion_5_obstruction_witnesses() {
    let mut failures = Vec::new();
    for g in [2u32, 3] {
        for n in [2usize, 3, 4] {
            let surface = Surface::Genus(g);
            let generator = |factor: usize, sym: Symbol| {
                GradedClass::generator(surface, n, factor, sym).unwrap()
            };
            let cross = generator(1, Symbol::A(1)).cup(&generator(2, Symbol::B(1))).unwrap();
            let scenarios: [(&str, CandidatePullback, usize, GradedClass); 3] = [
                (
                    "zero pullback",
                    CandidatePullback::vanishing(g, n).unwrap(),
                    1,
                    generator(1, Symbol::Omega),
                ),
                (
                    "rank-one pullback",
                    CandidatePullback::rank_one(g, n).unwrap(),
                    2,
                    generator(2, Symbol::Omega).add(&cross).unwrap(),
                ),
                (
                    "projection pullback",
                    CandidatePullback::first_projection(g, n).unwrap(),
                    1,
                    generator(1, Symbol::Omega)
                        .scaled(&BigRational::from_integer((2 - 2 * i64::from(g)).into())),
                ),
            ];
            for (name, candidate, factor, class) in scenarios {
                let label = format!("g = {g}, n = {n}, {name}");
                let got = obstruction_closed_surface(&candidate).unwrap();
                let expected =
                    ObstructionVerdict::NoSection(NoSectionWitness::Class { factor, class });
                check!(failures, got == expected, "{label}: got {got:?}");
            }
        }
    }
    conclude(5, "obstruction witnesses match coefficient for coefficient", failures);
}

#[test]
fn criterion_6_sphere_lattice() {
    let mut failures = Vec::new();
    for n in 3..=8usize {
        let factors = h2_pconf_sphere(n).unwrap();
        check!(
            failures,
            factors == vec![BigInt::from(2)],
            "n = {n}: invariant factors {factors:?}"
        );
        for k in 1..=n {
            let euler = euler_class_vanishes_sphere(n, k).unwrap();
            check!(failures, euler.vanishes, "n = {n}, k = {k}: doubled class does not vanish");
        }
    }
    for k in 1..=5u32 {
        let verdict = s2k_section_constraints(k).unwrap();
        let strings: Vec<String> = match &verdict {
            ObstructionVerdict::NoSection(NoSectionWitness::Constraints(cs)) => {
                cs.iter().map(|c| c.to_string()).collect()
            }
            other => {
                failures.push(format!("k = {k}: verdict {other:?}"));
                continue;
            }
        };
        check!(
            failures,
            strings == ["k + 1 = 0", "k - 1 = 0"],
            "k = {k}: constraints {strings:?}"
        );
    }
    conclude(6, "sphere lattice invariants and constraint pairs", failures);
}

fn random_planar(state: &mut u64, n: usize, floor: f64) -> PlanarConfig {
    let mut points: Vec<[f64; 2]> = Vec::with_capacity(n);
    while points.len() < n {
        let candidate = [range(state, -5.0, 5.0), range(state, -5.0, 5.0)];
        if points
            .iter()
            .all(|p| (p[0] - candidate[0]).hypot(p[1] - candidate[1]) >= floor)
        {
            points.push(candidate);
        }
    }
    PlanarConfig::new(points).unwrap()
}

fn random_sphere(state: &mut u64, n: usize, floor: f64) -> SphereConfig {
    let mut points: Vec<[f64; 3]> = Vec::with_capacity(n);
    while points.len() < n {
        let raw = [gaussian(state), gaussian(state), gaussian(state)];
        let len = (raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2]).sqrt();
        if len < 1e-3 {
            continue;
        }
        let candidate = [raw[0] / len, raw[1] / len, raw[2] / len];
        if points.iter().all(|p| spherical_distance(*p, candidate) >= floor) {
            points.push(candidate);
        }
    }
    SphereConfig::new(points).unwrap()
}

fn random_tangent(state: &mut u64, base: [f64; 3]) -> [f64; 3] {
    loop {
        let seed = [gaussian(state), gaussian(state), gaussian(state)];
        let d = seed[0] * base[0] + seed[1] * base[1] + seed[2] * base[2];
        let t = [seed[0] - d * base[0], seed[1] - d * base[1], seed[2] - d * base[2]];
        let len = (t[0] * t[0] + t[1] * t[1] + t[2] * t[2]).sqrt();
        if len >= 0.1 {
            return [t[0] / len, t[1] / len, t[2] / len];
        }
    }
}

fn planar_points_distinct(cfg: &PlanarConfig) -> bool {
    let pts = cfg.points();
    (0..pts.len()).all(|i| {
        (i + 1..pts.len()).all(|j| (pts[i][0] - pts[j][0]).hypot(pts[i][1] - pts[j][1]) > 0.0)
    })
}

fn sphere_points_distinct(cfg: &SphereConfig) -> bool {
    let pts = cfg.points();
    (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| spherical_distance(pts[i], pts[j]) > 0.0))
}

#[test]
fn criterion_7_point_addition() {
    let mut failures = Vec::new();
    let mut state = 0xacce_0007u64;

    // 5000 planar plus 5000 spherical random configurations, checking
    // distinct outputs and bit-exact deletion retraction on each.
    for trial in 0..5_000 {
        let n = 2 + pick(&mut state, 9);
        let cfg = random_planar(&mut state, n, 1e-3);
        let theta = range(&mut state, 0.0, std::f64::consts::TAU);
        let direction = [theta.cos(), theta.sin()];
        let out = if trial % 2 == 0 {
            cfg.add_near_k(1 + pick(&mut state, n), direction).unwrap()
        } else {
            cfg.add_at_infinity(direction).unwrap()
        };
        check!(failures, out.n() == n + 1, "planar trial {trial}: wrong size");
        check!(failures, planar_points_distinct(&out), "planar trial {trial}: collision");
        check!(
            failures,
            out.forget(1).unwrap() == cfg,
            "planar trial {trial}: retraction is not exact"
        );
        if failures.len() > 20 {
            break;
        }
    }
    for trial in 0..5_000 {
        let n = 2 + pick(&mut state, 9);
        let cfg = random_sphere(&mut state, n, 1e-3);
        let k = 1 + pick(&mut state, n);
        let direction = random_tangent(&mut state, cfg.points()[k - 1]);
        let out = cfg.add_near_k(k, direction).unwrap();
        check!(failures, out.n() == n + 1, "sphere trial {trial}: wrong size");
        check!(failures, sphere_points_distinct(&out), "sphere trial {trial}: collision");
        check!(
            failures,
            out.forget(1).unwrap() == cfg,
            "sphere trial {trial}: retraction is not exact"
        );
        if failures.len() > 20 {
            break;
        }
    }

    // Continuity probes at perturbation scale 1e-6: the output may move by
    // at most a thousand times the input perturbation.
    let scale = 1e-6;
    for trial in 0..300 {
        let n = 2 + pick(&mut state, 9);
        let cfg = random_planar(&mut state, n, 1e-2);
        let mut moved = Vec::with_capacity(n);
        let mut perturbation = 0f64;
        for p in cfg.points() {
            let d = [range(&mut state, -scale, scale), range(&mut state, -scale, scale)];
            perturbation = perturbation.max(d[0].hypot(d[1]));
            moved.push([p[0] + d[0], p[1] + d[1]]);
        }
        let moved = PlanarConfig::new(moved).unwrap();
        if perturbation == 0.0 {
            continue;
        }
        let k = 1 + pick(&mut state, n);
        let theta = range(&mut state, 0.0, std::f64::consts::TAU);
        let direction = [theta.cos(), theta.sin()];
        for (name, a, b) in [
            (
                "near point",
                cfg.add_near_k(k, direction).unwrap(),
                moved.add_near_k(k, direction).unwrap(),
            ),
            (
                "near infinity",
                cfg.add_at_infinity(direction).unwrap(),
                moved.add_at_infinity(direction).unwrap(),
            ),
        ] {
            let jump = a
                .points()
                .iter()
                .zip(b.points())
                .map(|(p, q)| (p[0] - q[0]).hypot(p[1] - q[1]))
                .fold(0f64, f64::max);
            let bounded = jump <= 1e3 * perturbation;
            check!(
                failures,
                bounded,
                "planar probe {trial} ({name}): jump {jump:e} for perturbation {perturbation:e}"
            );
        }
    }
    for trial in 0..300 {
        let n = 2 + pick(&mut state, 9);
        let cfg = random_sphere(&mut state, n, 1e-2);
        let mut moved = Vec::with_capacity(n);
        let mut perturbation = 0f64;
        for p in cfg.points() {
            let raw = [
                p[0] + scale * gaussian(&mut state),
                p[1] + scale * gaussian(&mut state),
                p[2] + scale * gaussian(&mut state),
            ];
            let len = (raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2]).sqrt();
            let q = [raw[0] / len, raw[1] / len, raw[2] / len];
            perturbation = perturbation.max(spherical_distance(*p, q));
            moved.push(q);
        }
        let moved = SphereConfig::new(moved).unwrap();
        if perturbation == 0.0 {
            continue;
        }
        let k = 1 + pick(&mut state, n);
        let tangent_seed = [gaussian(&mut state), gaussian(&mut state), gaussian(&mut state)];
        let project = |base: [f64; 3]| {
            let d =
                tangent_seed[0] * base[0] + tangent_seed[1] * base[1] + tangent_seed[2] * base[2];
            let t = [
                tangent_seed[0] - d * base[0],
                tangent_seed[1] - d * base[1],
                tangent_seed[2] - d * base[2],
            ];
            let len = (t[0] * t[0] + t[1] * t[1] + t[2] * t[2]).sqrt();
            if len < 0.1 {
                None
            } else {
                Some([t[0] / len, t[1] / len, t[2] / len])
            }
        };
        let (da, db) = match (project(cfg.points()[k - 1]), project(moved.points()[k - 1])) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        let a = cfg.add_near_k(k, da).unwrap();
        let b = moved.add_near_k(k, db).unwrap();
        let jump = a
            .points()
            .iter()
            .zip(b.points())
            .map(|(p, q)| spherical_distance(*p, *q))
            .fold(0f64, f64::max);
        let bounded = jump <= 1e3 * perturbation;
        check!(
            failures,
            bounded,
            "sphere probe {trial}: jump {jump:e} for perturbation {perturbation:e}"
        );
    }
    conclude(7, "point additions are distinct, retractable, continuous", failures);
}

fn random_word(state: &mut u64, n: usize, max_len: usize) -> BraidWord {
    let len = pick(state, max_len + 1);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = 1 + pick(state, n - 1) as i32;
            if splitmix(state) & 1 == 0 {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

#[test]
fn criterion_8_word_problem() {
    let mut failures = Vec::new();
    let mut state = 0xacce_0008u64;
    for trial in 0..1_000 {
        let n = 3 + pick(&mut state, 4);
        let w = random_word(&mut state, n, 20);

        // Variant one: trivial by free reduction alone.
        let free_trivial = w.compose(&w.inverse()).unwrap();
        check!(
            failures,
            free_trivial.is_identity(),
            "trial {trial}: w w^-1 not recognized as trivial"
        );

        // Variant two: trivial only through the defining relations. The
        // relator never freely reduces, so the conjugate is a genuine test.
        let relator = if n >= 4 && splitmix(&mut state) & 1 == 0 {
            // Distant generators commute: pick i and j with j >= i + 2.
            let i = 1 + pick(&mut state, n - 3) as i32;
            let j = i + 2 + pick(&mut state, n - 2 - i as usize) as i32;
            BraidWord::new(n, vec![i, j, -i, -j]).unwrap()
        } else {
            let i = 1 + pick(&mut state, n - 2) as i32;
            BraidWord::new(n, vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]).unwrap()
        };
        let v = random_word(&mut state, n, 10);
        let relation_trivial =
            v.compose(&relator).and_then(|u| u.compose(&v.inverse())).unwrap();
        check!(
            failures,
            !relation_trivial.freely_reduced().is_empty(),
            "trial {trial}: relator collapsed under free reduction"
        );
        check!(
            failures,
            relation_trivial.is_identity(),
            "trial {trial}: conjugated relator not recognized as trivial"
        );

        // Filter agreement on the raw word: a nontrivial permutation or a
        // nonzero linking matrix are certificates of nontriviality, and an
        // identity verdict must be consistent with both.
        let identity = w.is_identity();
        let permutation_trivial = w.permutation().is_identity();
        check!(
            failures,
            permutation_trivial || !identity,
            "trial {trial}: identity with a nontrivial permutation"
        );
        if w.is_pure() {
            let linking_zero = w.linking_matrix().unwrap().is_zero();
            check!(
                failures,
                linking_zero || !identity,
                "trial {trial}: identity with nonzero linking numbers"
            );
            check!(
                failures,
                !identity || (permutation_trivial && linking_zero),
                "trial {trial}: identity verdict contradicts a filter"
            );
        }
        if failures.len() > 20 {
            break;
        }
    }
    conclude(8, "triviality decisions agree with filters and relations", failures);
}
