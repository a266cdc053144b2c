//! The full octahedral group as 3x3 signed permutation matrices, point
//! orbits, and the fundamental invariants.

use std::collections::{BTreeSet, VecDeque};
use std::ops::Mul;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::rational::Q;

/// A signed permutation matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GroupElement(pub [[i8; 3]; 3]);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

    /// Quarter turn about the x axis.
    pub const G1: GroupElement = GroupElement([[1, 0, 0], [0, 0, -1], [0, 1, 0]]);
    /// Quarter turn about the y axis.
    pub const G2: GroupElement = GroupElement([[0, 0, -1], [0, 1, 0], [1, 0, 0]]);
    /// Reflection in the plane z = 0.
    pub const G3: GroupElement = GroupElement([[1, 0, 0], [0, 1, 0], [0, 0, -1]]);

    pub fn rows(&self) -> &[[i8; 3]; 3] {
        &self.0
    }

    pub fn det(&self) -> i8 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn transpose(&self) -> GroupElement {
        let m = &self.0;
        let mut t = [[0i8; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = m[j][i];
            }
        }
        GroupElement(t)
    }

    /// Orthogonal, so the inverse is the transpose.
    pub fn inverse(&self) -> GroupElement {
        self.transpose()
    }

    pub fn is_signed_permutation(&self) -> bool {
        let m = &self.0;
        let ok_entries = m.iter().flatten().all(|v| (-1..=1).contains(v));
        let rows = m.iter().all(|r| r.iter().filter(|v| **v != 0).count() == 1);
        let cols = (0..3).all(|j| (0..3).filter(|&i| m[i][j] != 0).count() == 1);
        ok_entries && rows && cols
    }

    pub fn apply_q(&self, p: &[Q; 3]) -> [Q; 3] {
        std::array::from_fn(|i| {
            let mut acc = Q::zero();
            for (j, pj) in p.iter().enumerate() {
                match self.0[i][j] {
                    1 => acc += pj,
                    -1 => acc -= pj,
                    _ => {}
                }
            }
            acc
        })
    }

    pub fn apply_f64(&self, p: [f64; 3]) -> [f64; 3] {
        std::array::from_fn(|i| (0..3).map(|j| self.0[i][j] as f64 * p[j]).sum())
    }

    pub fn apply_i64(&self, p: [i64; 3]) -> [i64; 3] {
        std::array::from_fn(|i| (0..3).map(|j| self.0[i][j] as i64 * p[j]).sum())
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: GroupElement) -> GroupElement {
        let mut out = [[0i8; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        GroupElement(out)
    }
}

/// Closure of `{g1, g2, g3}` under multiplication, in canonical
/// (lexicographic row-major) order.
pub fn generate_group() -> Vec<GroupElement> {
    let gens = [GroupElement::G1, GroupElement::G2, GroupElement::G3];
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(GroupElement::IDENTITY);
    queue.push_back(GroupElement::IDENTITY);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let p = g * h;
            if seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    seen.into_iter().collect()
}

/// Cached copy of [`generate_group`].
pub fn group() -> &'static [GroupElement] {
    static GROUP: OnceLock<Vec<GroupElement>> = OnceLock::new();
    GROUP.get_or_init(generate_group)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: [Q; 3],
    /// Sorted, deduplicated by exact equality.
    pub points: Vec<[Q; 3]>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

pub fn orbit(p: &[Q; 3]) -> Orbit {
    let points: BTreeSet<[Q; 3]> = group().iter().map(|g| g.apply_q(p)).collect();
    Orbit { representative: p.clone(), points: points.into_iter().collect() }
}

/// Elements fixing `p` exactly.
pub fn stabilizer(p: &[Q; 3]) -> Vec<GroupElement> {
    group().iter().copied().filter(|g| &g.apply_q(p) == p).collect()
}

/// `(u, v, w) = (x²+y²+z², x²y²+y²z²+z²x², x²y²z²)`.
pub fn invariants_uvw(p: &[Q; 3]) -> (Q, Q, Q) {
    let [x2, y2, z2] = [&p[0] * &p[0], &p[1] * &p[1], &p[2] * &p[2]];
    let u = &x2 + &y2 + &z2;
    let v = &x2 * &y2 + &y2 * &z2 + &z2 * &x2;
    let w = x2 * y2 * z2;
    (u, v, w)
}

pub fn invariants_uvw_f64(p: [f64; 3]) -> (f64, f64, f64) {
    let [x2, y2, z2] = p.map(|c| c * c);
    (x2 + y2 + z2, x2 * y2 + y2 * z2 + z2 * x2, x2 * y2 * z2)
}

/// Chamber `0 <= Z <= X <= Y` of the squared-coordinate space, bounded by
/// the planes `Z = 0`, `Z = X` and `X = Y`. Its six images under coordinate
/// permutations tile the first octant.
pub fn in_fundamental_cone(p: &[Q; 3]) -> bool {
    let [x, y, z] = p;
    !z.is_negative() && z <= x && x <= y
}

/// Tetrahedral region `{x >= 0, 0 <= y <= x, 0 <= z <= x}` of the original
/// coordinates.
pub fn in_fundamental_tetrahedron(p: &[Q; 3]) -> bool {
    let [x, y, z] = p;
    !x.is_negative() && !y.is_negative() && y <= x && !z.is_negative() && z <= x
}

/// The six coordinate permutations (determinant of either sign, no sign
/// flips); they permute the chambers of the first octant.
pub fn octant_permutations() -> Vec<GroupElement> {
    group()
        .iter()
        .copied()
        .filter(|g| g.0.iter().flatten().all(|v| *v >= 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn group_has_48_elements_and_24_rotations() {
        let g = generate_group();
        assert_eq!(g.len(), 48);
        assert_eq!(g.iter().filter(|e| e.det() == 1).count(), 24);
        assert!(g.contains(&GroupElement::IDENTITY));
        assert!(g.iter().all(|e| e.is_signed_permutation()));
        assert!(g.iter().all(|e| e.det().abs() == 1));
    }

    #[test]
    fn group_is_closed_under_product_and_inverse() {
        let g = group();
        let set: BTreeSet<_> = g.iter().copied().collect();
        for a in g {
            assert!(set.contains(&a.inverse()));
            assert_eq!(*a * a.inverse(), GroupElement::IDENTITY);
            for b in g {
                assert!(set.contains(&(*a * *b)));
            }
        }
    }

    #[test]
    fn canonical_order_is_sorted() {
        let g = generate_group();
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn orbit_sizes_on_strata() {
        let t = qf(3, 7);
        let z = q(0);
        assert_eq!(orbit(&[t.clone(), t.clone(), t.clone()]).size(), 8);
        assert_eq!(orbit(&[t.clone(), z.clone(), z.clone()]).size(), 6);
        assert_eq!(orbit(&[t.clone(), t.clone(), z.clone()]).size(), 12);
        assert_eq!(orbit(&[z.clone(), z.clone(), z.clone()]).size(), 1);
        assert_eq!(orbit(&[q(1), q(2), q(3)]).size(), 48);
    }

    #[test]
    fn uvw_examples() {
        assert_eq!(invariants_uvw(&[q(1), q(0), q(0)]), (q(1), q(0), q(0)));
        assert_eq!(invariants_uvw(&[q(1), q(1), q(1)]), (q(3), q(3), q(1)));
    }

    #[test]
    fn cone_predicate_examples() {
        assert!(in_fundamental_cone(&[q(1), q(1), q(0)]));
        assert!(!in_fundamental_cone(&[q(1), q(2), q(3)]));
        assert!(in_fundamental_tetrahedron(&[q(2), q(1), q(1)]));
        assert!(!in_fundamental_tetrahedron(&[q(1), q(2), q(0)]));
    }

    #[test]
    fn six_octant_permutations() {
        let perms = octant_permutations();
        assert_eq!(perms.len(), 6);
    }
}
