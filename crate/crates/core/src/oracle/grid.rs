//! Exact sign sampling on a cubic lattice and zero-cell component labelling.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::quadric::{line_restriction, QuarticCoefficients, Stratum};
use crate::rational::{ceil_to, q, to_f64, Q};

/// Sign of `f` at lattice points `h·(i, j, k)`, computed in integers.
///
/// With integer coefficients `a..d` and `h = p/r`,
/// `r⁴ f = a p⁴ V + b p⁴ U² + c p² r² U + d r⁴` where `U, V` are `u, v` of
/// `(i, j, k)`.
#[derive(Debug, Clone)]
pub(crate) struct LatticeEval {
    small: Option<[i128; 4]>,
    big: [BigInt; 4],
}

impl LatticeEval {
    pub(crate) fn new(f: &QuarticCoefficients, step: &Q) -> Self {
        let [a, b, c, d] = f.integer_coefficients();
        let (p2, r2) = (step.numer() * step.numer(), step.denom() * step.denom());
        let big = [a * &p2 * &p2, b * &p2 * &p2, c * &p2 * &r2, d * &r2 * &r2];
        let small = big.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>().map(|v| [v[0], v[1], v[2], v[3]]);
        LatticeEval { small, big }
    }

    pub(crate) fn sign(&self, i: i64, j: i64, k: i64) -> i8 {
        let [x, y, z] = [i, j, k].map(|t| i128::from(t) * i128::from(t));
        let u = x + y + z;
        let v = x * y + y * z + z * x;
        if let Some([a, b, c, d]) = self.small {
            let val = a
                .checked_mul(v)
                .zip(b.checked_mul(u).and_then(|t| t.checked_mul(u)))
                .and_then(|(s, t)| s.checked_add(t))
                .and_then(|s| c.checked_mul(u).and_then(|t| s.checked_add(t)))
                .and_then(|s| s.checked_add(d));
            if let Some(val) = val {
                return val.signum() as i8;
            }
        }
        let (u, v) = (BigInt::from(u), BigInt::from(v));
        let [a, b, c, d] = &self.big;
        let val = a * &v + b * &u * &u + c * &u + d;
        if val.is_zero() {
            0
        } else if val.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// `f` at a point from its sorted squared coordinates, so that the result is
/// bit-identical for all signed permutations of the point.
pub(crate) fn value_sorted(c: &[f64; 4], p: [f64; 3]) -> f64 {
    let mut s = p.map(|t| t * t);
    s.sort_by(f64::total_cmp);
    let u = s[0] + s[1] + s[2];
    let v = s[0] * s[1] + s[1] * s[2] + s[2] * s[0];
    c[0] * v + c[1] * u * u + c[2] * u + c[3]
}

/// Half-width of the sampling box: `1.5·√s` for the largest positive stratum
/// root `s` (rounded up to a multiple of 1/16), at least 1.
pub fn choose_box(f: &QuarticCoefficients) -> Q {
    let smax = Stratum::ALL
        .iter()
        .flat_map(|&st| line_restriction(f, st).positive_root_values())
        .map(|r| r.to_f64())
        .fold(0.0_f64, f64::max);
    if smax <= 0.0 {
        return q(1);
    }
    let l = ceil_to(1.5 * smax.sqrt(), 16);
    if l < q(1) {
        q(1)
    } else {
        l
    }
}

/// Corner samples of `f` on `[-L, L]³` with `n` cells per axis.
#[derive(Debug, Clone)]
pub struct SignGrid {
    pub half_width: Q,
    pub n: usize,
    /// Exact signs, `x` index fastest.
    pub signs: Vec<i8>,
    /// Floating-point values (for interpolation and residual scans).
    pub values: Vec<f32>,
}

impl SignGrid {
    /// Samples `f`; `n` is rounded up to an even number so the origin is a
    /// lattice point.
    pub fn sample(f: &QuarticCoefficients, half_width: &Q, n: usize) -> Self {
        let n = (n.max(2) + 1) & !1;
        let half = (n / 2) as i64;
        let step = half_width / q(half);
        let ev = LatticeEval::new(f, &step);
        let cf = f.to_f64();
        let h = to_f64(&step);
        let m = n + 1;
        let slabs: Vec<(Vec<i8>, Vec<f32>)> = (0..m)
            .into_par_iter()
            .map(|k| {
                let mut s = Vec::with_capacity(m * m);
                let mut v = Vec::with_capacity(m * m);
                let kk = k as i64 - half;
                for j in 0..m {
                    let jj = j as i64 - half;
                    for i in 0..m {
                        let ii = i as i64 - half;
                        s.push(ev.sign(ii, jj, kk));
                        v.push(value_sorted(&cf, [ii as f64 * h, jj as f64 * h, kk as f64 * h]) as f32);
                    }
                }
                (s, v)
            })
            .collect();
        let mut signs = Vec::with_capacity(m * m * m);
        let mut values = Vec::with_capacity(m * m * m);
        for (s, v) in slabs {
            signs.extend(s);
            values.extend(v);
        }
        SignGrid { half_width: half_width.clone(), n, signs, values }
    }

    pub fn step(&self) -> f64 {
        2.0 * to_f64(&self.half_width) / self.n as f64
    }

    pub fn corner_index(&self, i: usize, j: usize, k: usize) -> usize {
        (k * (self.n + 1) + j) * (self.n + 1) + i
    }

    pub fn corner_point(&self, i: usize, j: usize, k: usize) -> [f64; 3] {
        let h = self.step();
        let c = (self.n / 2) as f64;
        [i, j, k].map(|t| (t as f64 - c) * h)
    }

    pub(crate) fn cell_signs(&self, i: usize, j: usize, k: usize) -> [i8; 8] {
        let mut out = [0; 8];
        for (c, o) in out.iter_mut().enumerate() {
            *o = self.signs[self.corner_index(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1))];
        }
        out
    }

    /// Smallest `|f|` over all corners.
    pub fn min_abs_value(&self) -> f64 {
        self.values.iter().map(|v| f64::from(v.abs())).fold(f64::INFINITY, f64::min)
    }
}

/// One class of 26-connected zero-cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellClass {
    pub cells: usize,
    /// Contains a cell with both a positive and a negative corner.
    pub crossing: bool,
    pub boundary: bool,
    pub contains_origin: bool,
    /// Largest extent along an axis, in cells.
    pub extent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Components {
    /// Classes in order of their first cell in scan order.
    pub classes: Vec<CellClass>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn crossing(&self) -> impl Iterator<Item = &CellClass> {
        self.classes.iter().filter(|c| c.crossing)
    }

    pub fn touching(&self) -> impl Iterator<Item = &CellClass> {
        self.classes.iter().filter(|c| !c.crossing)
    }

    pub fn boundary_touching(&self) -> usize {
        self.classes.iter().filter(|c| c.boundary).count()
    }

    /// Some sign-changing class spans at most two cells: the lattice is too
    /// coarse to trust the count.
    pub fn inconclusive(&self) -> bool {
        self.crossing().any(|c| c.extent <= 2)
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

/// Labels zero-cells (cells whose corners are not all of one strict sign)
/// under 26-adjacency.
pub fn count_components(grid: &SignGrid) -> Components {
    const NONE: u32 = u32::MAX;
    let n = grid.n;
    let cell = |i: usize, j: usize, k: usize| (k * n + j) * n + i;
    let mut kind = vec![0u8; n * n * n]; // 0 none, 1 touch, 2 crossing
    kind.par_chunks_mut(n * n).enumerate().for_each(|(k, slab)| {
        for j in 0..n {
            for i in 0..n {
                let s = grid.cell_signs(i, j, k);
                let pos = s.iter().any(|&x| x > 0);
                let neg = s.iter().any(|&x| x < 0);
                let zero = s.iter().any(|&x| x == 0);
                slab[j * n + i] = if pos && neg {
                    2
                } else if zero {
                    1
                } else {
                    0
                };
            }
        }
    });
    let mut parent = vec![NONE; n * n * n];
    for (c, &t) in kind.iter().enumerate() {
        if t > 0 {
            parent[c] = c as u32;
        }
    }
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                let c = cell(i, j, k);
                if kind[c] == 0 {
                    continue;
                }
                // the 13 neighbours that come earlier in scan order
                for dk in -1i64..=0 {
                    for dj in -1i64..=1 {
                        for di in -1i64..=1 {
                            if dk == 0 && (dj > 0 || (dj == 0 && di >= 0)) {
                                continue;
                            }
                            let (ni, nj, nk) = (i as i64 + di, j as i64 + dj, k as i64 + dk);
                            if ni < 0 || nj < 0 || nk < 0 || ni >= n as i64 || nj >= n as i64 {
                                continue;
                            }
                            let nc = cell(ni as usize, nj as usize, nk as usize);
                            if kind[nc] == 0 {
                                continue;
                            }
                            let (a, b) = (find(&mut parent, c as u32), find(&mut parent, nc as u32));
                            if a != b {
                                // keep the earlier cell as root
                                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                                parent[hi as usize] = lo;
                            }
                        }
                    }
                }
            }
        }
    }
    struct Acc {
        class: CellClass,
        lo: [usize; 3],
        hi: [usize; 3],
    }
    let mut slot = std::collections::HashMap::new();
    let mut acc: Vec<Acc> = Vec::new();
    let half = n / 2;
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                let c = cell(i, j, k);
                if kind[c] == 0 {
                    continue;
                }
                let r = find(&mut parent, c as u32);
                let idx = *slot.entry(r).or_insert_with(|| {
                    acc.push(Acc {
                        class: CellClass { cells: 0, crossing: false, boundary: false, contains_origin: false, extent: 0 },
                        lo: [i, j, k],
                        hi: [i, j, k],
                    });
                    acc.len() - 1
                });
                let a = &mut acc[idx];
                a.class.cells += 1;
                a.class.crossing |= kind[c] == 2;
                a.class.boundary |= [i, j, k].iter().any(|&t| t == 0 || t == n - 1);
                a.class.contains_origin |= [i, j, k].iter().all(|&t| t + 1 == half || t == half);
                for (d, t) in [i, j, k].into_iter().enumerate() {
                    a.lo[d] = a.lo[d].min(t);
                    a.hi[d] = a.hi[d].max(t);
                }
            }
        }
    }
    let classes = acc
        .into_iter()
        .map(|a| {
            let mut class = a.class;
            class.extent = (0..3).map(|d| a.hi[d] - a.lo[d] + 1).max().unwrap_or(0);
            class
        })
        .collect();
    Components { classes }
}
