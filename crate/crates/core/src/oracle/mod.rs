//! Numerical cross-check of a classification on a sampled grid.
//!
//! The grid signs are exact (integer arithmetic at rational lattice points),
//! so a cell is a zero-cell exactly when the surface passes through its
//! closure or touches one of its corners. Sign-changing classes are the
//! surface components the grid can see; touch-only classes are lattice
//! points or lines of a zero set that does not change sign there.

mod grid;
mod mesh;
mod rays;

use serde::Serialize;

pub use grid::{choose_box, count_components, CellClass, Components, SignGrid};
pub use mesh::{extract_mesh, Mesh};
pub use rays::{nesting_depth, ray_root_count, refine_singularities, SingularCandidate};

use crate::classify::{PieceKind, TopologyReport};
use crate::quadric::{line_restriction, strata_singularities, QuarticCoefficients, Stratum};
use crate::rational::{to_f64, Q};

pub const DEFAULT_RESOLUTION: usize = 64;
pub const MAX_RESOLUTION: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Agree,
    Disagree,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RayRootCounts {
    pub axis: usize,
    pub face_diagonal: usize,
    pub space_diagonal: usize,
}

impl RayRootCounts {
    pub fn get(&self, st: Stratum) -> usize {
        match st {
            Stratum::Axis => self.axis,
            Stratum::FaceDiagonal => self.face_diagonal,
            Stratum::SpaceDiagonal => self.space_diagonal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub resolution: usize,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub half_width: Q,
    /// The component counts agreed at `resolution` and twice that.
    pub stable: bool,
    /// All zero-cell classes.
    pub component_count: usize,
    pub crossing_components: usize,
    pub touch_components: usize,
    pub boundary_touching: usize,
    pub ray_root_counts: RayRootCounts,
    pub nesting_depth: usize,
    pub singular_candidates: Vec<SingularCandidate>,
    pub min_abs_value: f64,
    pub degenerate_locus_detected: bool,
    /// Singular points found by a local Newton search that are not among the
    /// symbolic ones, up to symmetry. A heuristic, reported but not judged.
    pub off_stratum_suspects: usize,
    pub agreement: Agreement,
    pub mismatches: Vec<String>,
}

/// What the grid can see of one classified zero set.
struct Expectation {
    crossing: usize,
    unbounded_crossing: usize,
    /// Touch classes: lattice points and lines.
    touch_min: usize,
    touch_max: usize,
    double_locus: bool,
    origin_point: bool,
}

fn expectation(report: &TopologyReport) -> Expectation {
    let mut e = Expectation {
        crossing: 0,
        unbounded_crossing: 0,
        touch_min: 0,
        touch_max: 0,
        double_locus: false,
        origin_point: false,
    };
    for p in &report.pieces {
        match p.kind {
            PieceKind::Origin => {
                e.origin_point = true;
                e.touch_min += 1;
                e.touch_max += 1;
            }
            // irrational in general; lattice hits are tolerated
            PieceKind::AxisPoints | PieceKind::DiagonalPoints => e.touch_max += p.count,
            PieceKind::CoordinateAxes | PieceKind::DiagonalLines => {
                e.touch_min += 1;
                e.touch_max += 1;
            }
            PieceKind::DoubleSphere => {
                e.double_locus = true;
                e.touch_max = usize::MAX;
            }
            _ => {
                e.crossing += p.count;
                if !p.bounded {
                    e.unbounded_crossing += p.count;
                }
            }
        }
    }
    e
}

struct Sample {
    n: usize,
    comps: Components,
    min_abs: f64,
    grid: SignGrid,
}

fn sample(f: &QuarticCoefficients, l: &Q, n: usize) -> Sample {
    let grid = SignGrid::sample(f, l, n);
    let comps = count_components(&grid);
    Sample { n: grid.n, min_abs: grid.min_abs_value(), comps, grid }
}

fn signature(c: &Components) -> (usize, usize, usize) {
    (c.crossing().count(), c.touching().count(), c.boundary_touching())
}

/// Rough size of the second derivatives of `f` on the box.
fn hessian_scale(f: &QuarticCoefficients, l: f64) -> f64 {
    let [a, b, c, _] = f.to_f64();
    12.0 * (a.abs() + b.abs()) * l.max(1.0).powi(2) + 2.0 * c.abs()
}

fn grad_norm2(f: &QuarticCoefficients, p: [f64; 3]) -> f64 {
    f.gradient_f64(p).iter().map(|g| g * g).sum()
}

/// Newton's method on `∇f = 0` with a finite-difference Hessian.
fn newton_critical_point(f: &QuarticCoefficients, mut p: [f64; 3]) -> Option<[f64; 3]> {
    for _ in 0..30 {
        let g = f.gradient_f64(p);
        let e = 1e-6 * p.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
        let mut hm = [[0.0; 3]; 3];
        for j in 0..3 {
            let (mut a, mut b) = (p, p);
            a[j] += e;
            b[j] -= e;
            let (ga, gb) = (f.gradient_f64(a), f.gradient_f64(b));
            for i in 0..3 {
                hm[i][j] = (ga[i] - gb[i]) / (2.0 * e);
            }
        }
        let step = solve3(hm, g)?;
        for i in 0..3 {
            p[i] -= step[i];
        }
        if step.iter().map(|x| x.abs()).fold(0.0, f64::max) < 1e-13 * e / 1e-6 {
            return Some(p);
        }
    }
    None
}

fn solve3(m: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(&m);
    if d == 0.0 || !d.is_finite() {
        return None;
    }
    let mut x = [0.0; 3];
    for (c, xc) in x.iter_mut().enumerate() {
        let mut mc = m;
        for r in 0..3 {
            mc[r][c] = b[r];
        }
        *xc = det(&mc) / d;
    }
    Some(x)
}

/// Searches the fundamental wedge `x ≥ y ≥ z ≥ 0` for singular points that
/// are not among `known`: corners near the surface where `|∇f|` is a local
/// minimum seed a Newton iteration on `∇f = 0`; converged points on the
/// surface that are at least three cells from every known point are counted
/// (up to symmetry, deduplicated).
fn off_stratum_suspects(f: &QuarticCoefficients, s: &Sample, known: &[SingularCandidate], skip: bool) -> usize {
    if skip {
        return 0;
    }
    let h = s.grid.step();
    let l = to_f64(&s.grid.half_width);
    let f_tol = hessian_scale(f, l) * h * h;
    let tol = 1e-8 * to_f64(f.d()).abs().max(1.0);
    let n = s.grid.n;
    let c = n / 2;
    let mut found: Vec<[f64; 3]> = Vec::new();
    for k in c..n {
        for j in k..n {
            for i in j..n {
                let idx = s.grid.corner_index(i, j, k);
                if f64::from(s.grid.values[idx].abs()) > f_tol {
                    continue;
                }
                let p = s.grid.corner_point(i, j, k);
                let g0 = grad_norm2(f, p);
                let is_min = (0..27).filter(|&m| m != 13).all(|m| {
                    let d = [m % 3, (m / 3) % 3, m / 9].map(|t| t as f64 - 1.0);
                    grad_norm2(f, [p[0] + d[0] * h, p[1] + d[1] * h, p[2] + d[2] * h]) >= g0
                });
                if !is_min {
                    continue;
                }
                let Some(r) = newton_critical_point(f, p) else { continue };
                if f.eval_f64(r).abs() > tol || grad_norm2(f, r).sqrt() > tol {
                    continue;
                }
                let dist = |a: [f64; 3], b: [f64; 3]| (0..3).map(|i| (a[i] - b[i]).powi(2)).sum::<f64>().sqrt();
                // compare up to symmetry via sorted absolute coordinates
                let canon = |p: [f64; 3]| {
                    let mut a = p.map(f64::abs);
                    a.sort_by(f64::total_cmp);
                    a
                };
                let rc = canon(r);
                if known.iter().any(|k| dist(canon(k.point), rc) <= 3.0 * h) {
                    continue;
                }
                if !found.iter().any(|q| dist(*q, rc) <= 1e-6) {
                    found.push(rc);
                }
            }
        }
    }
    found.len()
}

/// Compares `report` with the sampled zero set at resolution `n`, doubling
/// (up to [`MAX_RESOLUTION`]) until two consecutive resolutions give the same
/// conclusive component counts.
pub fn verify(f: &QuarticCoefficients, report: &TopologyReport, n: usize) -> OracleReport {
    let l = choose_box(f);
    let cap = MAX_RESOLUTION.max(n);
    let mut cur = sample(f, &l, n.max(16));
    let mut stable = false;
    while cur.n * 2 <= cap {
        let next = sample(f, &l, cur.n * 2);
        let same = signature(&cur.comps) == signature(&next.comps);
        if same && !cur.comps.inconclusive() && !next.comps.inconclusive() {
            stable = true;
            break;
        }
        cur = next;
    }
    judge(f, report, &l, cur, stable)
}

/// Single-resolution comparison, without the stability check.
pub fn verify_at(f: &QuarticCoefficients, report: &TopologyReport, n: usize) -> OracleReport {
    let l = choose_box(f);
    let s = sample(f, &l, n.max(16));
    let stable = !s.comps.inconclusive();
    judge(f, report, &l, s, stable)
}

fn judge(f: &QuarticCoefficients, report: &TopologyReport, l: &Q, s: Sample, stable: bool) -> OracleReport {
    let comps = &s.comps;
    let crossing = comps.crossing().count();
    let touch = comps.touching().count();
    let boundary_crossing = comps.crossing().filter(|c| c.boundary).count();
    let h = 2.0 * to_f64(l) / s.n as f64;
    let degenerate = crossing == 0 && (touch > 0 || s.min_abs < h * h * hessian_scale(f, to_f64(l)));

    let rays = RayRootCounts {
        axis: ray_root_count(f, Stratum::Axis, l),
        face_diagonal: ray_root_count(f, Stratum::FaceDiagonal, l),
        space_diagonal: ray_root_count(f, Stratum::SpaceDiagonal, l),
    };
    let nesting = rays.axis;
    let singular_candidates = refine_singularities(f, &strata_singularities(f));
    let suspects = off_stratum_suspects(f, &s, &singular_candidates, report.nonisolated_singular);

    let mut mismatches = Vec::new();
    let mut check = |ok: bool, msg: String| {
        if !ok {
            mismatches.push(msg);
        }
    };
    if report.components == 0 {
        check(comps.count() == 0, format!("expected an empty zero set, grid has {} zero-cell classes", comps.count()));
    } else {
        let e = expectation(report);
        check(
            e.crossing + e.touch_min <= report.components && report.components <= e.crossing + e.touch_max.min(report.components),
            "report pieces do not add up to its component count".into(),
        );
        check(crossing == e.crossing, format!("sign-changing components: grid {crossing}, report {}", e.crossing));
        check(
            boundary_crossing == e.unbounded_crossing,
            format!("components reaching the box boundary: grid {boundary_crossing}, report {}", e.unbounded_crossing),
        );
        check(
            (e.touch_min..=e.touch_max).contains(&touch),
            format!("touch-only classes: grid {touch}, report {}..={}", e.touch_min, e.touch_max),
        );
        if e.double_locus {
            check(degenerate, "multiplicity-two locus not detected".into());
        }
        if e.origin_point {
            check(
                comps.touching().any(|c| c.contains_origin),
                "isolated origin not seen as a touch-only class".into(),
            );
        }
        let shells_only = !report.unbounded
            && report.singular_orbits.is_empty()
            && report.pieces.iter().all(|p| matches!(p.kind, PieceKind::Shell | PieceKind::Sphere));
        if shells_only {
            check(nesting == report.nesting_depth, format!("nesting: ray {nesting}, report {}", report.nesting_depth));
        }
    }
    for st in Stratum::ALL {
        let lr = line_restriction(f, st);
        if !lr.identically_zero {
            check(
                rays.get(st) == lr.crossing_roots,
                format!("{st:?} ray crossings: sampled {}, symbolic {}", rays.get(st), lr.crossing_roots),
            );
        }
    }
    // one entry per refined point, tagged with its orbit size
    let mut got: Vec<usize> = Vec::new();
    for c in &singular_candidates {
        check(c.accepted, format!("singular candidate {:?} not confirmed", c.point));
        got.push(c.orbit_size);
    }
    let mut want: Vec<usize> = report.singular_orbits.iter().flat_map(|o| std::iter::repeat(o.size).take(o.size)).collect();
    got.sort_unstable();
    want.sort_unstable();
    check(got == want, format!("singular points: refined {got:?}, report {want:?}"));

    let agreement = if !mismatches.is_empty() && stable {
        Agreement::Disagree
    } else if !stable {
        Agreement::Inconclusive
    } else {
        Agreement::Agree
    };
    OracleReport {
        resolution: s.n,
        half_width: l.clone(),
        stable,
        component_count: comps.count(),
        crossing_components: crossing,
        touch_components: touch,
        boundary_touching: comps.boundary_touching(),
        ray_root_counts: rays,
        nesting_depth: nesting,
        singular_candidates,
        min_abs_value: s.min_abs,
        degenerate_locus_detected: degenerate,
        off_stratum_suspects: suspects,
        agreement,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::rational::{q, qf};

    fn run(a: Q, b: Q, c: Q, d: Q) -> OracleReport {
        let f = QuarticCoefficients::new(a, b, c, d).unwrap();
        verify(&f, &classify(&f), DEFAULT_RESOLUTION)
    }

    #[test]
    fn eight_conical_points() {
        let r = run(q(1), q(0), q(-1), qf(3, 4));
        assert_eq!(r.agreement, Agreement::Agree, "{:?}", r.mismatches);
        assert_eq!(r.singular_candidates.len(), 8);
    }

    #[test]
    fn empty_case() {
        let r = run(q(1), q(-3), q(0), q(-1));
        assert_eq!(r.agreement, Agreement::Agree, "{:?}", r.mismatches);
        assert_eq!(r.component_count, 0);
    }

    #[test]
    fn double_sphere_is_a_degenerate_locus() {
        let r = run(q(0), q(1), q(-1), qf(1, 4));
        assert!(r.degenerate_locus_detected);
        assert_eq!(r.agreement, Agreement::Agree, "{:?}", r.mismatches);
    }

    #[test]
    fn corrupted_report_disagrees() {
        let f = QuarticCoefficients::new(q(1), q(0), q(-1), qf(1, 2)).unwrap();
        let mut rep = classify(&f);
        rep.components += 1;
        rep.pieces.push(crate::classify::Piece { kind: PieceKind::Shell, count: 1, bounded: true });
        assert_eq!(verify(&f, &rep, 64).agreement, Agreement::Disagree);
    }

    #[test]
    fn critical_point_search_finds_unlisted_singularities() {
        let f = QuarticCoefficients::new(q(1), q(0), q(-1), qf(3, 4)).unwrap();
        let s = sample(&f, &choose_box(&f), 64);
        assert_eq!(off_stratum_suspects(&f, &s, &[], false), 1);
        let known = refine_singularities(&f, &strata_singularities(&f));
        assert_eq!(off_stratum_suspects(&f, &s, &known, false), 0);
    }

    #[test]
    fn determinism() {
        let f = QuarticCoefficients::new(q(1), q(1), q(-1), qf(1, 8)).unwrap();
        let rep = classify(&f);
        let a = serde_json::to_string(&verify_at(&f, &rep, 32)).unwrap();
        let b = serde_json::to_string(&verify_at(&f, &rep, 32)).unwrap();
        assert_eq!(a, b);
    }
}
