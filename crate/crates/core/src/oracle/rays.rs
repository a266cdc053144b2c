//! Root counting along the symmetry lines and Newton refinement of singular
//! points.

use serde::Serialize;

use super::grid::LatticeEval;
use crate::octgroup::orbit;
use crate::quadric::{QuarticCoefficients, SingularKind, SingularOrbit, Stratum};
use crate::rational::{q, to_f64, Q};

/// Samples per ray.
const RAY_SAMPLES: i64 = 4096;
const MAX_NEWTON: usize = 50;

/// Strict sign changes of `t ↦ f(t·dir)` over `(0, L]`, from exact signs at
/// `RAY_SAMPLES` equally spaced points. Touching zeros are not counted.
pub fn ray_root_count(f: &QuarticCoefficients, stratum: Stratum, half_width: &Q) -> usize {
    let ev = LatticeEval::new(f, &(half_width / q(RAY_SAMPLES)));
    let [dx, dy, dz] = stratum.direction();
    let mut last = 0i8;
    let mut changes = 0;
    for j in 1..=RAY_SAMPLES {
        let s = ev.sign(j * dx, j * dy, j * dz);
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Shells pierced by the positive `x` axis inside the box.
pub fn nesting_depth(f: &QuarticCoefficients, half_width: &Q) -> usize {
    ray_root_count(f, Stratum::Axis, half_width)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularCandidate {
    pub stratum: SingularKind,
    pub orbit_size: usize,
    pub point: [f64; 3],
    pub f_residual: f64,
    pub grad_residual: f64,
    pub iterations: usize,
    pub converged: bool,
    pub accepted: bool,
}

fn norm(v: [f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Refines each orbit by Newton's method on `t ↦ d/dt f(t·dir)` from the
/// symbolic root, then reports the residuals `|f|` and `|∇f|` at every point
/// of the orbit. A point is accepted when both are below
/// `10⁻⁹·max(1, |D|)`.
pub fn refine_singularities(f: &QuarticCoefficients, candidates: &[SingularOrbit]) -> Vec<SingularCandidate> {
    let tol = 1e-9 * to_f64(f.d()).abs().max(1.0);
    let mut out = Vec::new();
    for orb in candidates {
        let (t, iterations, converged, dirs) = match orb.kind.stratum() {
            None => (0.0, 0, true, vec![[0.0; 3]]),
            Some(st) => {
                let dir = st.direction().map(|c| c as f64);
                let dphi = |t: f64| {
                    let g = f.gradient_f64(dir.map(|c| c * t));
                    g[0] * dir[0] + g[1] * dir[1] + g[2] * dir[2]
                };
                let mut t = to_f64(&orb.s).sqrt();
                let mut iterations = 0;
                let mut converged = false;
                while iterations < MAX_NEWTON {
                    let d1 = dphi(t);
                    if d1 == 0.0 {
                        converged = true;
                        break;
                    }
                    let e = 1e-6 * t.abs().max(1.0);
                    let d2 = (dphi(t + e) - dphi(t - e)) / (2.0 * e);
                    if d2 == 0.0 || !d2.is_finite() {
                        break;
                    }
                    let step = d1 / d2;
                    t -= step;
                    iterations += 1;
                    if step.abs() <= 1e-15 * t.abs().max(1.0) {
                        converged = true;
                        break;
                    }
                }
                let dirs = orbit(&st.direction().map(q)).points.iter().map(|p| [0, 1, 2].map(|i| to_f64(&p[i]))).collect();
                (t, iterations, converged, dirs)
            }
        };
        for d in dirs {
            let p = d.map(|c| c * t);
            let f_residual = f.eval_f64(p).abs();
            let grad_residual = norm(f.gradient_f64(p));
            out.push(SingularCandidate {
                stratum: orb.kind,
                orbit_size: orb.size,
                point: p,
                f_residual,
                grad_residual,
                iterations,
                converged,
                accepted: converged && f_residual < tol && grad_residual < tol,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadric::{line_restriction, strata_singularities};
    use crate::rational::qf;

    fn c(a: Q, b: Q, cc: Q, d: Q) -> QuarticCoefficients {
        QuarticCoefficients::new(a, b, cc, d).unwrap()
    }

    #[test]
    fn ray_examples() {
        let f = c(q(1), q(0), q(-1), qf(1, 2));
        let l = super::super::grid::choose_box(&f);
        assert_eq!(ray_root_count(&f, Stratum::SpaceDiagonal, &l), 2);
        let sphere = QuarticCoefficients::from_ints(0, 1, 0, -1).unwrap();
        assert_eq!(ray_root_count(&sphere, Stratum::Axis, &qf(3, 2)), 1);
        let tangent = c(q(1), q(0), q(-1), qf(3, 4));
        let l = super::super::grid::choose_box(&tangent);
        assert_eq!(ray_root_count(&tangent, Stratum::SpaceDiagonal, &l), 0);
        assert!(line_restriction(&tangent, Stratum::SpaceDiagonal).double_positive_root.is_some());
    }

    #[test]
    fn nesting_examples() {
        let f = c(q(0), q(1), q(-1), qf(1, 8));
        assert_eq!(nesting_depth(&f, &super::super::grid::choose_box(&f)), 2);
        let f = QuarticCoefficients::from_ints(0, 1, 0, -1).unwrap();
        assert_eq!(nesting_depth(&f, &qf(3, 2)), 1);
        // β = 1, ε = (+,−), k = 1/2 < 3/4: octahedron inside a rounded cube
        let f = c(q(1), q(1), q(-1), qf(1, 8));
        assert_eq!(nesting_depth(&f, &super::super::grid::choose_box(&f)), 2);
    }

    #[test]
    fn singular_points_refine_to_tiny_residuals() {
        let f = c(q(1), q(0), q(-1), qf(3, 4));
        let r = refine_singularities(&f, &strata_singularities(&f));
        assert_eq!(r.len(), 8);
        for p in &r {
            assert!(p.accepted && p.f_residual < 1e-12 && p.grad_residual < 1e-12, "{p:?}");
            assert!((p.point[0].abs() - 0.5f64.sqrt()).abs() < 1e-12);
        }

        let f = QuarticCoefficients::from_ints(1, 0, -1, 1).unwrap();
        let r = refine_singularities(&f, &strata_singularities(&f));
        assert_eq!(r.len(), 12);
        assert!(r.iter().all(|p| p.accepted));

        let f = QuarticCoefficients::from_ints(1, 0, -1, 0).unwrap();
        let r = refine_singularities(&f, &strata_singularities(&f));
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].f_residual, r[0].grad_residual), (0.0, 0.0));
    }
}
