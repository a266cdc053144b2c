//! Exact component analysis through the radial profile of the quartic.
//!
//! Write a nonzero point as radius `r` and unit direction `ω`, and put
//! `s = 1/r²` and `ρ(ω) = v/u² ∈ [0, 1/3]`. For `A > 0`,
//!
//! ```text
//! f = 0  <=>  ρ(ω) = h(s),   h(s) = −(D s² + C s + B) / A.
//! ```
//!
//! On the unit sphere `ρ` has its 6 minima on the axes (value 0), 12 saddles
//! on the face diagonals (1/4) and 8 maxima on the space diagonals (1/3). The
//! level `{ρ = c}` is six circles for `0 < c < 1/4`, one connected graph at
//! `1/4`, and eight circles for `1/4 < c < 1/3`. Every maximal `s`-interval on
//! which `h` stays in `[0, 1/3]` therefore contributes 1, 6 or 8 components,
//! depending only on which levels `h` attains there. `h` is a quadratic, so
//! replacing it by the piecewise-linear path through its start value, its
//! vertex and a far end value preserves every crossing order; all of it is
//! exact rational arithmetic.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::quadric::QuarticCoefficients;
use crate::rational::{q, qf, quadratic_roots, Q, QuadSurd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    /// Bounded surface whose directions cover the whole sphere; encloses the
    /// origin.
    Shell,
    /// One connected surface that is not a shell.
    Connected,
    /// Six congruent pieces around the coordinate axes.
    AxisPieces,
    /// Eight congruent pieces around the space diagonals.
    DiagonalPieces,
    /// Six isolated points on the axes.
    AxisPoints,
    /// Eight isolated points on the space diagonals.
    DiagonalPoints,
    Origin,
    Sphere,
    DoubleSphere,
    CoordinateAxes,
    DiagonalLines,
    Cone,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub kind: PieceKind,
    /// Number of connected components.
    pub count: usize,
    pub bounded: bool,
}

impl Piece {
    fn new(kind: PieceKind, count: usize, bounded: bool) -> Self {
        Piece { kind, count, bounded }
    }

    pub fn is_points(&self) -> bool {
        matches!(self.kind, PieceKind::AxisPoints | PieceKind::DiagonalPoints | PieceKind::Origin)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub pieces: Vec<Piece>,
    /// Some component is singular along a curve or a surface.
    pub nonisolated_singular: bool,
    /// Squared radii when the zero set is a union of round spheres.
    #[serde(skip)]
    pub sphere_radii_sq: Vec<QuadSurd>,
}

impl Profile {
    pub fn components(&self) -> usize {
        self.pieces.iter().map(|p| p.count).sum()
    }

    pub fn isolated_points(&self) -> usize {
        self.pieces.iter().filter(|p| p.is_points()).map(|p| p.count).sum()
    }

    pub fn unbounded(&self) -> bool {
        self.pieces.iter().any(|p| !p.bounded)
    }

    /// Closed surfaces around the origin.
    pub fn nesting_depth(&self) -> usize {
        self.pieces
            .iter()
            .filter(|p| matches!(p.kind, PieceKind::Shell | PieceKind::Sphere | PieceKind::DoubleSphere))
            .map(|p| p.count)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

/// Component structure of the zero set. Works on any valid coefficients; the
/// overall sign is normalized internally.
pub fn analyze(f: &QuarticCoefficients) -> Profile {
    let f = if f.a().is_negative() || (f.a().is_zero() && f.b().is_negative()) {
        f.negated()
    } else {
        f.clone()
    };
    if f.a().is_zero() {
        return spheres(&f);
    }
    if f.c().is_zero() && f.d().is_zero() {
        return cone(&f);
    }
    let mut pieces = level_pieces(&f);
    if f.d().is_zero() {
        pieces.push(Piece::new(PieceKind::Origin, 1, true));
    }
    Profile { pieces, nonisolated_singular: false, sphere_radii_sq: Vec::new() }
}

/// `A = 0`: `f = B u² + C u + D` with `B > 0`.
fn spheres(f: &QuarticCoefficients) -> Profile {
    let (b, c, d) = (f.b(), f.c(), f.d());
    let disc = c * c - q(4) * b * d;
    let roots: Vec<QuadSurd> = quadratic_roots(b, c, d).into_iter().filter(|r| r.sign() > 0).collect();
    let mut pieces = Vec::new();
    let mut nonisolated_singular = false;
    if disc.is_zero() && roots.len() == 1 {
        pieces.push(Piece::new(PieceKind::DoubleSphere, 1, true));
        nonisolated_singular = true;
    } else if !roots.is_empty() {
        pieces.push(Piece::new(PieceKind::Sphere, roots.len(), true));
    }
    if d.is_zero() {
        pieces.push(Piece::new(PieceKind::Origin, 1, true));
    }
    Profile { pieces, nonisolated_singular, sphere_radii_sq: roots }
}

/// `C = D = 0`: the zero set is a cone over the level `ρ = −B/A`.
fn cone(f: &QuarticCoefficients) -> Profile {
    let c = -f.b() / f.a();
    let (third, quarter) = (qf(1, 3), qf(1, 4));
    let (piece, nonisolated) = if c.is_negative() || c > third {
        (Piece::new(PieceKind::Origin, 1, true), false)
    } else if c.is_zero() {
        (Piece::new(PieceKind::CoordinateAxes, 1, false), true)
    } else if c == third {
        (Piece::new(PieceKind::DiagonalLines, 1, false), true)
    } else {
        (Piece::new(PieceKind::Cone, 1, false), c == quarter)
    };
    Profile { pieces: vec![piece], nonisolated_singular: nonisolated, sphere_radii_sq: Vec::new() }
}

/// Node values of the piecewise-linear stand-in for `h` on `s ∈ (0, ∞)`.
/// Consecutive values are distinct; the first node is the open end `s → 0⁺`.
pub(crate) fn profile_nodes(f: &QuarticCoefficients) -> Vec<Q> {
    let (a, b, c, d) = (f.a(), f.b(), f.c(), f.d());
    let h = |s: &Q| -(d * s * s + c * s + b) / a;
    let mut nodes = vec![-b / a];
    if !d.is_zero() {
        let s_star = -c / (q(2) * d);
        if s_star.is_positive() {
            nodes.push(h(&s_star));
        }
    }
    let end_up = if d.is_zero() { (-c / a).is_positive() } else { (-d / a).is_positive() };
    let far = nodes.iter().fold(Q::one(), |m, x| if x.abs() > m { x.abs() } else { m }) + Q::one();
    nodes.push(if end_up { far } else { -far });
    nodes
}

fn level_pieces(f: &QuarticCoefficients) -> Vec<Piece> {
    let nodes = profile_nodes(f);
    let (lo_band, hi_band) = (Q::zero(), qf(1, 3));

    // parameter τ runs over [0, nodes.len() - 1]; y is linear on each [i, i+1]
    let mut intervals: Vec<(Q, Q)> = Vec::new();
    for i in 0..nodes.len() - 1 {
        let (ya, yb) = (&nodes[i], &nodes[i + 1]);
        let at = |y: &Q| q(i as i64) + (y - ya) / (yb - ya);
        let (t0, t1) = (at(&lo_band), at(&hi_band));
        let (t_lo, t_hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
        let seg_lo = q(i as i64);
        let seg_hi = q(i as i64 + 1);
        let lo = if t_lo > seg_lo { t_lo } else { seg_lo };
        let hi = if t_hi < seg_hi { t_hi } else { seg_hi };
        if lo > hi {
            continue;
        }
        match intervals.last_mut() {
            Some(last) if last.1 == lo => last.1 = hi,
            _ => intervals.push((lo, hi)),
        }
    }

    let value_at = |t: &Q| -> Q {
        let i = t.floor().to_integer().to_usize().unwrap_or(0).min(nodes.len() - 2);
        let (ya, yb) = (&nodes[i], &nodes[i + 1]);
        ya + (yb - ya) * (t - q(i as i64))
    };

    let quarter = qf(1, 4);
    let mut pieces = Vec::new();
    for (lo, hi) in intervals {
        let open_start = lo.is_zero();
        if open_start && hi.is_zero() {
            // only the limit s → 0⁺ lies in the band
            continue;
        }
        if !open_start && lo == hi {
            let y = value_at(&lo);
            let kind = if y.is_zero() { PieceKind::AxisPoints } else { PieceKind::DiagonalPoints };
            let count = if y.is_zero() { 6 } else { 8 };
            pieces.push(Piece::new(kind, count, true));
            continue;
        }
        // candidate extreme values with an "attained" flag
        let mut cands: Vec<(Q, bool)> = vec![(value_at(&lo), !open_start), (value_at(&hi), true)];
        let mut t = lo.floor() + Q::one();
        while t < hi {
            cands.push((value_at(&t), true));
            t += Q::one();
        }
        let min = cands.iter().map(|c| &c.0).min().unwrap().clone();
        let max = cands.iter().map(|c| &c.0).max().unwrap().clone();
        let attained = |v: &Q| cands.iter().any(|(x, ok)| x == v && *ok);
        let reaches_quarter = (min < quarter && quarter < max)
            || (min == quarter && attained(&min))
            || (max == quarter && attained(&max));
        let bounded = !open_start;
        let piece = if reaches_quarter {
            let shell = bounded && min.is_zero() && max == hi_band;
            Piece::new(if shell { PieceKind::Shell } else { PieceKind::Connected }, 1, bounded)
        } else if max <= quarter {
            Piece::new(PieceKind::AxisPieces, 6, bounded)
        } else {
            Piece::new(PieceKind::DiagonalPieces, 8, bounded)
        };
        pieces.push(piece);
    }
    pieces
}
