//! Triangle mesh of the zero set by marching tetrahedra over the sign grid.
//!
//! Each cell is cut into the six tetrahedra of the Kuhn triangulation, which
//! matches across cell faces, so vertices shared by neighbouring cells are
//! identical and closed surfaces give closed meshes.

use std::collections::HashMap;
use std::io::{self, Write};

use super::grid::SignGrid;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    /// Zero-based vertex indices, oriented with normals towards `f > 0`.
    pub faces: Vec<[u32; 3]>,
}

/// Corner offsets of the six tetrahedra along the paths from corner 0 to 7.
const KUHN: [[usize; 4]; 6] =
    [[0, 1, 3, 7], [0, 1, 5, 7], [0, 2, 3, 7], [0, 2, 6, 7], [0, 4, 5, 7], [0, 4, 6, 7]];

pub fn extract_mesh(grid: &SignGrid) -> Result<Mesh> {
    let n = grid.n;
    let mut mesh = Mesh::default();
    let mut edge_vertex: HashMap<(usize, usize), u32> = HashMap::new();
    let inside = |c: usize| grid.signs[c] < 0;
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                let s = grid.cell_signs(i, j, k);
                if s.iter().all(|&x| x < 0) || s.iter().all(|&x| x >= 0) {
                    continue;
                }
                let corner = |c: usize| (i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1));
                let gi = |c: usize| {
                    let (a, b, d) = corner(c);
                    grid.corner_index(a, b, d)
                };
                for tet in KUHN {
                    let ids = tet.map(gi);
                    let ins: Vec<usize> = ids.iter().copied().filter(|&c| inside(c)).collect();
                    let out: Vec<usize> = ids.iter().copied().filter(|&c| !inside(c)).collect();
                    let mut vert = |a: usize, b: usize| -> u32 {
                        let key = if a < b { (a, b) } else { (b, a) };
                        *edge_vertex.entry(key).or_insert_with(|| {
                            mesh.vertices.push(interpolate(grid, a, b));
                            (mesh.vertices.len() - 1) as u32
                        })
                    };
                    let tris: Vec<[u32; 3]> = match (ins.len(), out.len()) {
                        (1, 3) => vec![[vert(ins[0], out[0]), vert(ins[0], out[1]), vert(ins[0], out[2])]],
                        (3, 1) => vec![[vert(out[0], ins[0]), vert(out[0], ins[1]), vert(out[0], ins[2])]],
                        (2, 2) => {
                            let (a, b, c, d) = (ins[0], ins[1], out[0], out[1]);
                            let (ac, ad, bd, bc) = (vert(a, c), vert(a, d), vert(b, d), vert(b, c));
                            vec![[ac, ad, bd], [ac, bd, bc]]
                        }
                        _ => vec![],
                    };
                    let centroid = |v: &[usize]| {
                        let mut m = [0.0; 3];
                        for &c in v {
                            let p = corner_point_of(grid, c);
                            for d in 0..3 {
                                m[d] += p[d] / v.len() as f64;
                            }
                        }
                        m
                    };
                    let outward = sub(centroid(&out), centroid(&ins));
                    for t in tris {
                        let [a, b, c] = t.map(|x| mesh.vertices[x as usize]);
                        let nrm = cross(sub(b, a), sub(c, a));
                        let face = if dot(nrm, outward) < 0.0 { [t[0], t[2], t[1]] } else { t };
                        mesh.faces.push(face);
                    }
                }
            }
        }
    }
    if mesh.faces.is_empty() {
        return Err(Error::EmptyMesh);
    }
    Ok(mesh)
}

fn corner_point_of(grid: &SignGrid, c: usize) -> [f64; 3] {
    let m = grid.n + 1;
    grid.corner_point(c % m, (c / m) % m, c / (m * m))
}

fn interpolate(grid: &SignGrid, a: usize, b: usize) -> [f64; 3] {
    let (pa, pb) = (corner_point_of(grid, a), corner_point_of(grid, b));
    let (fa, fb) = (f64::from(grid.values[a]), f64::from(grid.values[b]));
    let t = if grid.signs[a] == 0 {
        0.0
    } else if grid.signs[b] == 0 {
        1.0
    } else if fa == fb {
        0.5
    } else {
        (fa / (fa - fb)).clamp(0.0, 1.0)
    };
    [0, 1, 2].map(|d| pa[d] + t * (pb[d] - pa[d]))
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

impl Mesh {
    /// Every undirected edge belongs to exactly two faces.
    pub fn is_watertight(&self) -> bool {
        let mut count: HashMap<(u32, u32), u32> = HashMap::new();
        for f in &self.faces {
            for e in 0..3 {
                let (a, b) = (f[e], f[(e + 1) % 3]);
                *count.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        count.values().all(|&c| c == 2)
    }

    /// Connected pieces of the face graph.
    pub fn piece_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for f in &self.faces {
            for e in 1..3 {
                let (a, b) = (find(&mut parent, f[0] as usize), find(&mut parent, f[e] as usize));
                parent[a.max(b)] = a.min(b);
            }
        }
        let used: std::collections::BTreeSet<usize> =
            self.faces.iter().flat_map(|f| f.iter().map(|&v| v as usize)).collect();
        let roots: std::collections::BTreeSet<usize> = used.into_iter().map(|v| find(&mut parent, v)).collect();
        roots.len()
    }

    /// Wavefront OBJ with 9 significant digits.
    pub fn write_obj<W: Write>(&self, mut w: W) -> io::Result<()> {
        for v in &self.vertices {
            writeln!(w, "v {} {} {}", sig9(v[0]), sig9(v[1]), sig9(v[2]))?;
        }
        for f in &self.faces {
            writeln!(w, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1)?;
        }
        Ok(())
    }

    pub fn to_obj(&self) -> String {
        let mut buf = Vec::new();
        self.write_obj(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("OBJ output is ASCII")
    }
}

/// Nine significant digits in plain notation, trailing zeros trimmed.
fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{:.8e}", x);
    let v: f64 = s.parse().expect("formatted float parses");
    let mag = v.abs().log10().floor() as i32;
    let decimals = (8 - mag).max(0) as usize;
    let out = format!("{:.*}", decimals, v);
    let out = if out.contains('.') { out.trim_end_matches('0').trim_end_matches('.').to_string() } else { out };
    if out == "-0" {
        "0".into()
    } else {
        out
    }
}
