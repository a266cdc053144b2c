//! The quadric obtained by substituting `X = x²`, `Y = y²`, `Z = z²`:
//! its 4x4 matrix, exact invariants, affine type, and the restriction of the
//! quartic to the three symmetry strata.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::octgroup;
use crate::rational::{fmt_q, q, qf, quadratic_roots, sign, to_f64, QuadSurd, SqrtQ, Q};

/// Coefficients of `A·v + B·u² + C·u + D` with `u = x²+y²+z²`,
/// `v = x²y²+y²z²+z²x²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarticCoefficients {
    a: Q,
    b: Q,
    c: Q,
    d: Q,
}

impl QuarticCoefficients {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::NotAQuartic);
        }
        Ok(QuarticCoefficients { a, b, c, d })
    }

    /// Integer convenience constructor.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(q(a), q(b), q(c), q(d))
    }

    pub fn a(&self) -> &Q {
        &self.a
    }
    pub fn b(&self) -> &Q {
        &self.b
    }
    pub fn c(&self) -> &Q {
        &self.c
    }
    pub fn d(&self) -> &Q {
        &self.d
    }

    pub fn as_array(&self) -> [&Q; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [to_f64(&self.a), to_f64(&self.b), to_f64(&self.c), to_f64(&self.d)]
    }

    /// `-f`, same zero set.
    pub fn negated(&self) -> Self {
        QuarticCoefficients { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// Coefficients of `mu·f(x/sqrt(lambda))`... expressed on `(A,B,C,D)` as
    /// `(mu·lambda²·A, mu·lambda²·B, mu·lambda·C, mu·D)`. The zero set is the
    /// original one scaled by `1/sqrt(lambda)` (for `lambda > 0`).
    pub fn rescaled(&self, mu: &Q, lambda: &Q) -> Result<Self> {
        let l2 = lambda * lambda;
        Self::new(mu * &l2 * &self.a, mu * &l2 * &self.b, mu * lambda * &self.c, mu * &self.d)
    }

    /// Value from the invariants: `A v + B u² + C u + D`.
    pub fn eval_uv(&self, u: &Q, v: &Q) -> Q {
        &self.a * v + &self.b * u * u + &self.c * u + &self.d
    }

    pub fn eval(&self, p: &[Q; 3]) -> Q {
        let (u, v, _) = octgroup::invariants_uvw(p);
        self.eval_uv(&u, &v)
    }

    /// Term-by-term expansion, kept separate from [`Self::eval`].
    pub fn eval_expanded(&self, p: &[Q; 3]) -> Q {
        let [x, y, z] = p;
        let (x2, y2, z2) = (x * x, y * y, z * z);
        let quartic_a = &x2 * &y2 + &y2 * &z2 + &x2 * &z2;
        let s = &x2 + &y2 + &z2;
        &self.a * quartic_a + &self.b * &s * &s + &self.c * &s + &self.d
    }

    pub fn eval_f64(&self, p: [f64; 3]) -> f64 {
        let [a, b, c, d] = self.to_f64();
        let (u, v, _) = octgroup::invariants_uvw_f64(p);
        a * v + b * u * u + c * u + d
    }

    /// Closed-form gradient: `∂f/∂x = 2x (A(y²+z²) + 2B u + C)` and cyclic.
    pub fn gradient_f64(&self, p: [f64; 3]) -> [f64; 3] {
        let [a, b, c, _] = self.to_f64();
        let [x, y, z] = p;
        let u = x * x + y * y + z * z;
        let g = |t: f64, o1: f64, o2: f64| 2.0 * t * (a * (o1 * o1 + o2 * o2) + 2.0 * b * u + c);
        [g(x, y, z), g(y, z, x), g(z, x, y)]
    }

    /// Quadric form `F(X,Y,Z) = A(XY+YZ+ZX) + B(X+Y+Z)² + C(X+Y+Z) + D`.
    pub fn eval_quadric(&self, p: &[Q; 3]) -> Q {
        let [x, y, z] = p;
        let s = x + y + z;
        &self.a * (x * y + y * z + x * z) + &self.b * &s * &s + &self.c * &s + &self.d
    }

    /// Common positive denominator scaling to integer coefficients.
    pub fn integer_coefficients(&self) -> [BigInt; 4] {
        let l = self
            .as_array()
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        self.as_array().map(|x| (x * Q::from_integer(l.clone())).to_integer())
    }
}

impl std::fmt::Display for QuarticCoefficients {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", fmt_q(&self.a), fmt_q(&self.b), fmt_q(&self.c), fmt_q(&self.d))
    }
}

/// Symmetric 4x4 matrix of the quadric in homogeneous form `(1, X, Y, Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricMatrix {
    pub lambda: [[Q; 4]; 4],
    /// Off-diagonal entry `W = (A + 2B)/2` of the 3x3 block.
    pub w: Q,
}

impl QuadricMatrix {
    /// Lower-right 3x3 block.
    pub fn lambda0(&self) -> [[Q; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.lambda[i + 1][j + 1].clone()))
    }

    pub fn diagonal_b(&self) -> &Q {
        &self.lambda[1][1]
    }

    /// Half the linear coefficient, `C/2`.
    pub fn half_c(&self) -> &Q {
        &self.lambda[0][1]
    }

    /// `Xᵀ Λ X` for `X = (1, X, Y, Z)`.
    pub fn quadratic_form(&self, p: &[Q; 3]) -> Q {
        let v = [Q::one(), p[0].clone(), p[1].clone(), p[2].clone()];
        let mut acc = Q::zero();
        for i in 0..4 {
            for j in 0..4 {
                acc += &v[i] * &self.lambda[i][j] * &v[j];
            }
        }
        acc
    }
}

pub fn assemble_lambda(q: &QuarticCoefficients) -> QuadricMatrix {
    let w = (q.a() + qf(2, 1) * q.b()) / qf(2, 1);
    let half_c = q.c() / qf(2, 1);
    let mut lambda: [[Q; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| Q::zero()));
    lambda[0][0] = q.d().clone();
    for i in 1..4 {
        lambda[0][i] = half_c.clone();
        lambda[i][0] = half_c.clone();
        for j in 1..4 {
            lambda[i][j] = if i == j { q.b().clone() } else { w.clone() };
        }
    }
    QuadricMatrix { lambda, w }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadricInvariants {
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub det_lambda: Q,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub det_lambda0: Q,
    pub rk_lambda: usize,
    pub rk_lambda0: usize,
    /// Sum of the principal 2x2 minors of Λ₀.
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub j: Q,
    /// Sum of the principal 2x2 minors of Λ that contain the constant row;
    /// separates real from imaginary parallel planes.
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub border_minor_sum: Q,
    /// `(λ₁, λ₂, λ₃) = (B−W, B−W, B+2W)`.
    #[serde(skip)]
    pub eigs0: [Q; 3],
    pub sigma_minus0: usize,
    pub sigma_plus0: usize,
}

impl QuadricInvariants {
    pub fn zero_eigs0(&self) -> usize {
        3 - self.sigma_minus0 - self.sigma_plus0
    }
}

/// Determinant and rank by fraction-free (Bareiss) elimination on the
/// integer-scaled matrix, pivoting on the first nonzero entry of the column.
pub fn det_and_rank<const N: usize>(m: &[[Q; N]; N]) -> (Q, usize) {
    let den = m.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scale = Q::from_integer(den.clone());
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|x| (x * &scale).to_integer()).collect())
        .collect();

    let mut rank = 0;
    let mut det_sign_flip = false;
    let mut prev = BigInt::one();
    let mut full = true;
    let mut row = 0;
    for col in 0..N {
        let Some(piv) = (row..N).find(|&r| !a[r][col].is_zero()) else {
            full = false;
            continue;
        };
        if piv != row {
            a.swap(piv, row);
            det_sign_flip = !det_sign_flip;
        }
        for r in row + 1..N {
            for c in col + 1..N {
                let v = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
        rank += 1;
    }
    let det = if full && rank == N {
        let d = Q::new(a[N - 1][N - 1].clone(), num_traits::pow(den, N));
        if det_sign_flip {
            -d
        } else {
            d
        }
    } else {
        Q::zero()
    };
    (det, rank)
}

pub fn invariants(m: &QuadricMatrix) -> QuadricInvariants {
    let l0 = m.lambda0();
    let (det_lambda, rk_lambda) = det_and_rank(&m.lambda);
    let (det_lambda0, rk_lambda0) = det_and_rank(&l0);

    let minor = |i: usize, j: usize| &l0[i][i] * &l0[j][j] - &l0[i][j] * &l0[j][i];
    let j = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let border_minor_sum = (1..4)
        .map(|i| &m.lambda[0][0] * &m.lambda[i][i] - &m.lambda[0][i] * &m.lambda[i][0])
        .fold(Q::zero(), |acc, x| acc + x);

    let b = m.diagonal_b();
    let lam12 = b - &m.w;
    let lam3 = b + qf(2, 1) * &m.w;
    let eigs0 = [lam12.clone(), lam12, lam3];
    let sigma_minus0 = eigs0.iter().filter(|e| e.is_negative()).count();
    let sigma_plus0 = eigs0.iter().filter(|e| e.is_positive()).count();

    QuadricInvariants {
        det_lambda,
        det_lambda0,
        rk_lambda,
        rk_lambda0,
        j,
        border_minor_sum,
        eigs0,
        sigma_minus0,
        sigma_plus0,
    }
}

/// Center `P₀`, the solution of `Λ₀ P = −C/2·(1,1,1)`, when `B + 2W ≠ 0`.
///
/// With `B + 2W = 0` the system is either inconsistent or has a line of
/// solutions; either way there is no single center.
pub fn center(m: &QuadricMatrix) -> Option<[Q; 3]> {
    let lam3 = m.diagonal_b() + qf(2, 1) * &m.w;
    if lam3.is_zero() {
        return None;
    }
    let t = -m.half_c() / lam3;
    Some([t.clone(), t.clone(), t])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadricKind {
    EllipticParaboloid,
    HyperbolicParaboloid,
    RealEllipticCylinder,
    HyperbolicCylinder,
    ParabolicCylinder,
    PairOfImaginaryLines,
    PairOfSecantPlanes,
    PairOfParallelPlanesReal,
    PairOfParallelPlanesImaginary,
    DoublePlane,
    RealEllipsoid,
    ImaginaryEllipsoid,
    OneSheetedHyperboloid,
    TwoSheetedHyperboloid,
    RealEllipticCone,
    ImaginaryEllipticCone,
    /// Invariants that no real quadric of this family produces; kept so the
    /// decision tree stays total.
    CylinderDegenerate,
}

/// Singular overlay for `det Λ = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadricSingularity {
    /// rk Λ = 3 with a finite solution of `Λ₀ P = −C/2`: cone vertex.
    ProperPoint(#[serde(serialize_with = "ser_point")] [Q; 3]),
    /// rk Λ = 3 with no finite vertex: cylinder.
    ImproperPoint,
    /// rk Λ = 2: two planes meeting along the singular locus.
    PlanePair,
    /// rk Λ = 1: the whole plane is singular.
    DoublePlane,
}

fn ser_point<S: serde::Serializer>(p: &[Q; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for c in p {
        seq.serialize_element(&fmt_q(c))?;
    }
    seq.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadricType {
    pub kind: QuadricKind,
    pub singularity: Option<QuadricSingularity>,
}

/// Affine classification of the quadric from its matrix invariants.
pub fn bromwich_burington_classify(inv: &QuadricInvariants) -> QuadricType {
    use QuadricKind::*;
    let js = sign(&inv.j);
    let ds = sign(&inv.det_lambda);
    let kind = if inv.det_lambda0.is_zero() {
        match inv.rk_lambda {
            4 => match js {
                1 => EllipticParaboloid,
                -1 => HyperbolicParaboloid,
                _ => CylinderDegenerate,
            },
            3 => match js {
                1 => RealEllipticCylinder,
                -1 => HyperbolicCylinder,
                _ => ParabolicCylinder,
            },
            2 => match js {
                1 => PairOfImaginaryLines,
                -1 => PairOfSecantPlanes,
                _ => {
                    if inv.border_minor_sum.is_negative() {
                        PairOfParallelPlanesReal
                    } else {
                        PairOfParallelPlanesImaginary
                    }
                }
            },
            _ => DoublePlane,
        }
    } else {
        let definite = inv.sigma_minus0 == 3 || inv.sigma_plus0 == 3;
        match (inv.rk_lambda, definite) {
            (4, true) => {
                if ds > 0 {
                    ImaginaryEllipsoid
                } else {
                    RealEllipsoid
                }
            }
            (4, false) => {
                if ds > 0 {
                    OneSheetedHyperboloid
                } else {
                    TwoSheetedHyperboloid
                }
            }
            (_, true) => ImaginaryEllipticCone,
            (_, false) => RealEllipticCone,
        }
    };
    QuadricType { kind, singularity: None }
}

/// [`bromwich_burington_classify`] plus the singular overlay, which needs the
/// matrix itself to locate the vertex.
pub fn classify_quadric(m: &QuadricMatrix) -> (QuadricInvariants, QuadricType) {
    let inv = invariants(m);
    let mut ty = bromwich_burington_classify(&inv);
    if inv.det_lambda.is_zero() {
        ty.singularity = Some(match inv.rk_lambda {
            3 => match center(m) {
                Some(p) if !inv.det_lambda0.is_zero() => QuadricSingularity::ProperPoint(p),
                _ => QuadricSingularity::ImproperPoint,
            },
            2 => QuadricSingularity::PlanePair,
            _ => QuadricSingularity::DoublePlane,
        });
    }
    (inv, ty)
}

/// Symmetry-fixed line through the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stratum {
    /// `(t, 0, 0)`
    Axis,
    /// `(t, t, 0)`
    FaceDiagonal,
    /// `(t, t, t)`
    SpaceDiagonal,
}

impl Stratum {
    pub const ALL: [Stratum; 3] = [Stratum::Axis, Stratum::FaceDiagonal, Stratum::SpaceDiagonal];

    /// Unnormalized direction with 0/1 entries.
    pub fn direction(self) -> [i64; 3] {
        match self {
            Stratum::Axis => [1, 0, 0],
            Stratum::FaceDiagonal => [1, 1, 0],
            Stratum::SpaceDiagonal => [1, 1, 1],
        }
    }

    /// Value of `v/u²` on this line.
    pub fn rho(self) -> Q {
        match self {
            Stratum::Axis => Q::zero(),
            Stratum::FaceDiagonal => qf(1, 4),
            Stratum::SpaceDiagonal => qf(1, 3),
        }
    }

    pub fn orbit_size(self) -> usize {
        let p = self.direction().map(q);
        octgroup::orbit(&p).size()
    }
}

/// `f(t·dir) = a s² + b s + c` with `s = t²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineRestriction {
    pub stratum: Stratum,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub a: Q,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub b: Q,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub c: Q,
    /// Distinct roots `s > 0`.
    pub positive_roots: usize,
    /// Positive roots where the sign of the restriction changes.
    pub crossing_roots: usize,
    #[serde(serialize_with = "crate::rational::ser_opt_q")]
    pub double_positive_root: Option<Q>,
    pub has_zero_root: bool,
    /// The whole line lies on the surface.
    pub identically_zero: bool,
}

impl LineRestriction {
    pub fn roots(&self) -> Vec<QuadSurd> {
        quadratic_roots(&self.a, &self.b, &self.c)
    }

    pub fn positive_root_values(&self) -> Vec<QuadSurd> {
        self.roots().into_iter().filter(|r| r.sign() > 0).collect()
    }
}

pub fn line_restriction(q: &QuarticCoefficients, stratum: Stratum) -> LineRestriction {
    let (a, b, c) = match stratum {
        Stratum::Axis => (q.b().clone(), q.c().clone(), q.d().clone()),
        Stratum::FaceDiagonal => (q.a() + qf(4, 1) * q.b(), qf(2, 1) * q.c(), q.d().clone()),
        Stratum::SpaceDiagonal => (qf(3, 1) * q.a() + qf(9, 1) * q.b(), qf(3, 1) * q.c(), q.d().clone()),
    };
    let identically_zero = a.is_zero() && b.is_zero() && c.is_zero();
    let roots = quadratic_roots(&a, &b, &c);
    let positive: Vec<_> = roots.iter().filter(|r| r.sign() > 0).collect();
    let disc = &b * &b - qf(4, 1) * &a * &c;
    let double_positive_root = if !a.is_zero() && disc.is_zero() {
        let r = -&b / (qf(2, 1) * &a);
        r.is_positive().then_some(r)
    } else {
        None
    };
    let crossing_roots = positive.len() - usize::from(double_positive_root.is_some());
    LineRestriction {
        stratum,
        positive_roots: positive.len(),
        crossing_roots,
        double_positive_root,
        has_zero_root: c.is_zero() && !identically_zero,
        identically_zero,
        a,
        b,
        c,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularKind {
    Origin,
    Axis,
    FaceDiagonal,
    SpaceDiagonal,
}

impl From<Stratum> for SingularKind {
    fn from(s: Stratum) -> Self {
        match s {
            Stratum::Axis => SingularKind::Axis,
            Stratum::FaceDiagonal => SingularKind::FaceDiagonal,
            Stratum::SpaceDiagonal => SingularKind::SpaceDiagonal,
        }
    }
}

impl SingularKind {
    pub fn stratum(self) -> Option<Stratum> {
        match self {
            SingularKind::Origin => None,
            SingularKind::Axis => Some(Stratum::Axis),
            SingularKind::FaceDiagonal => Some(Stratum::FaceDiagonal),
            SingularKind::SpaceDiagonal => Some(Stratum::SpaceDiagonal),
        }
    }
}

/// An orbit of singular points; the representative is `sqrt(s)·dir`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularOrbit {
    #[serde(rename = "stratum")]
    pub kind: SingularKind,
    /// Squared coordinate `s = t²` along the stratum direction (0 for the
    /// origin).
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub s: Q,
    #[serde(rename = "rep")]
    pub representative: [SqrtQ; 3],
    pub size: usize,
}

impl SingularOrbit {
    pub fn origin() -> Self {
        SingularOrbit {
            kind: SingularKind::Origin,
            s: Q::zero(),
            representative: [SqrtQ::zero(), SqrtQ::zero(), SqrtQ::zero()],
            size: 1,
        }
    }

    fn on_stratum(stratum: Stratum, s: Q) -> Self {
        let representative = stratum
            .direction()
            .map(|c| if c == 0 { SqrtQ::zero() } else { SqrtQ::sqrt_of(s.clone()) });
        SingularOrbit { kind: stratum.into(), s, representative, size: stratum.orbit_size() }
    }

    pub fn representative_f64(&self) -> [f64; 3] {
        [0, 1, 2].map(|i| self.representative[i].to_f64())
    }

    /// All points of the orbit in floating point.
    pub fn points_f64(&self) -> Vec<[f64; 3]> {
        let t = to_f64(&self.s).sqrt();
        let dir = match self.kind.stratum() {
            Some(st) => st.direction(),
            None => return vec![[0.0; 3]],
        };
        let orb = octgroup::orbit(&dir.map(q));
        orb.points
            .iter()
            .map(|p| [0, 1, 2].map(|i| to_f64(&p[i]) * t))
            .collect()
    }
}

/// Singular points of the zero set that lie on the origin or the strata:
/// double positive roots of the stratum restrictions, plus the origin when
/// `D = 0`.
pub fn strata_singularities(q: &QuarticCoefficients) -> Vec<SingularOrbit> {
    let mut out = Vec::new();
    if q.d().is_zero() {
        out.push(SingularOrbit::origin());
    }
    for st in Stratum::ALL {
        if let Some(s) = line_restriction(q, st).double_positive_root {
            out.push(SingularOrbit::on_stratum(st, s));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Existence {
    Empty,
    PointOnly,
    NonemptySurface,
}

/// Exact emptiness test.
///
/// `f = A v + B u² + C u + D` and the attainable `(u, v)` are exactly
/// `u >= 0, 0 <= v <= u²/3`. Since `f` is affine in `v`, there is a zero at
/// radius `sqrt(u)` iff the axis value `B u² + C u + D` and the diagonal value
/// `(A/3 + B) u² + C u + D` straddle zero.
pub fn existence_check(q: &QuarticCoefficients) -> Existence {
    let q = if q.a().is_negative() { q.negated() } else { q.clone() };
    // with A >= 0 the diagonal value is the larger one
    let (lo_a, lo_b, lo_c) = (q.b().clone(), q.c().clone(), q.d().clone());
    let (hi_a, hi_b, hi_c) = (q.a() / qf(3, 1) + q.b(), q.c().clone(), q.d().clone());
    let straddles = |u: &QuadSurd| {
        u.eval_quadratic(&lo_a, &lo_b, &lo_c).sign() <= 0 && u.eval_quadratic(&hi_a, &hi_b, &hi_c).sign() >= 0
    };
    // If the straddle set meets u > 0 it contains a positive interval
    // endpoint, i.e. a positive root of one of the two quadratics.
    let candidates = quadratic_roots(&lo_a, &lo_b, &lo_c)
        .into_iter()
        .chain(quadratic_roots(&hi_a, &hi_b, &hi_c))
        .filter(|r| r.sign() > 0);
    let identically_straddles = [&lo_a, &lo_b, &lo_c].iter().all(|x| x.is_zero())
        || [&hi_a, &hi_b, &hi_c].iter().all(|x| x.is_zero());
    let any_positive = identically_straddles || candidates.into_iter().any(|u| straddles(&u)) || {
        // both quadratics one-signed with opposite signs on all of u > 0
        let probe = QuadSurd::from_q(Q::one());
        quadratic_roots(&lo_a, &lo_b, &lo_c).iter().all(|r| r.sign() <= 0)
            && quadratic_roots(&hi_a, &hi_b, &hi_c).iter().all(|r| r.sign() <= 0)
            && straddles(&probe)
    };
    if any_positive {
        Existence::NonemptySurface
    } else if q.d().is_zero() {
        Existence::PointOnly
    } else {
        Existence::Empty
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qc(a: Q, b: Q, c: Q, d: Q) -> QuarticCoefficients {
        QuarticCoefficients::new(a, b, c, d).unwrap()
    }

    #[test]
    fn principal_minor_sum_is_three_times_b2_minus_w2() {
        for (a, b) in [(q(1), q(0)), (qf(3, 2), qf(-2, 7)), (q(-4), q(5)), (qf(1, 9), qf(1, 3))] {
            let m = assemble_lambda(&qc(a, b.clone(), qf(1, 2), q(-1)));
            let inv = invariants(&m);
            let b2w2 = &b * &b - &m.w * &m.w;
            assert_eq!(inv.j, qf(3, 1) * &b2w2);
            assert_eq!(sign(&inv.j), sign(&(qf(9, 1) * &b2w2)));
        }
    }

    #[test]
    fn rejects_a_b_zero() {
        assert_eq!(QuarticCoefficients::from_ints(0, 0, 1, 1), Err(Error::NotAQuartic));
    }

    #[test]
    fn lambda_examples() {
        let m = assemble_lambda(&QuarticCoefficients::from_ints(1, 0, -1, 0).unwrap());
        let l0 = m.lambda0();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l0[i][j], if i == j { q(0) } else { qf(1, 2) });
            }
        }
        let m = assemble_lambda(&QuarticCoefficients::from_ints(0, 1, 0, 0).unwrap());
        assert!(m.lambda0().iter().flatten().all(|x| x == &q(1)));
        assert_eq!(m.lambda[0], [q(0), q(0), q(0), q(0)]);
    }

    #[test]
    fn invariants_for_b_zero_family() {
        let c = qf(-3, 5);
        let d = qf(7, 11);
        let m = assemble_lambda(&qc(q(1), q(0), c.clone(), d.clone()));
        let inv = invariants(&m);
        assert_eq!(inv.eigs0, [qf(-1, 2), qf(-1, 2), q(1)]);
        assert_eq!(inv.det_lambda, (q(4) * &d - q(3) * &c * &c) / q(16));
        assert_eq!(inv.det_lambda0, qf(1, 4));
        assert_eq!(inv.rk_lambda, 4);
    }

    #[test]
    fn all_ones_block_has_rank_one() {
        let inv = invariants(&assemble_lambda(&QuarticCoefficients::from_ints(0, 1, 0, 0).unwrap()));
        assert!(inv.det_lambda0.is_zero());
        assert_eq!(inv.rk_lambda0, 1);
        assert_eq!(inv.rk_lambda, 1);
        // C = D = 0 is below the generic rank 2 of the A = 0 family
        let inv = invariants(&assemble_lambda(&QuarticCoefficients::from_ints(0, 1, -1, 0).unwrap()));
        assert_eq!(inv.rk_lambda, 2);
    }

    #[test]
    fn center_examples() {
        let m = assemble_lambda(&QuarticCoefficients::from_ints(0, 1, 0, 5).unwrap());
        assert_eq!(center(&m), Some([q(0), q(0), q(0)]));
        let m = assemble_lambda(&QuarticCoefficients::from_ints(0, 1, 1, 0).unwrap());
        assert_eq!(center(&m), Some([qf(-1, 6), qf(-1, 6), qf(-1, 6)]));
        // A + 3B = 0: no center
        let m = assemble_lambda(&QuarticCoefficients::from_ints(3, -1, 1, 0).unwrap());
        assert_eq!(center(&m), None);
    }

    #[test]
    fn plus_minus_center_lies_at_positive_diagonal() {
        // β v + u² - u + D: the center along v₃ is sqrt(3)/(2(β+3)), i.e.
        // each coordinate equals 1/(2(β+3))
        for beta in [1, 2, 5] {
            let m = assemble_lambda(&QuarticCoefficients::from_ints(beta, 1, -1, 0).unwrap());
            let c = center(&m).unwrap();
            assert_eq!(c[0], qf(1, 2 * (beta + 3)));
        }
    }

    #[test]
    fn bromwich_burington_examples() {
        use QuadricKind::*;
        let kind = |a: Q, b: Q, c: Q, d: Q| {
            let m = assemble_lambda(&qc(a, b, c, d));
            classify_quadric(&m).1
        };
        let t = kind(q(0), q(1), q(-1), qf(1, 8));
        assert_eq!(t.kind, PairOfParallelPlanesReal);
        assert_eq!(kind(q(0), q(1), q(1), q(1)).kind, PairOfParallelPlanesImaginary);
        assert_eq!(kind(q(1), q(0), q(-1), q(1)).kind, OneSheetedHyperboloid);
        assert_eq!(kind(q(1), q(0), q(-1), qf(1, 2)).kind, TwoSheetedHyperboloid);
        let cyl = kind(q(1), qf(-1, 3), q(0), q(1));
        assert_eq!(cyl.kind, RealEllipticCylinder);
        assert_eq!(cyl.singularity, Some(QuadricSingularity::ImproperPoint));
        assert_eq!(kind(q(1), q(-1), q(0), q(1)).kind, RealEllipsoid);
        assert_eq!(kind(q(1), q(-1), q(0), q(-1)).kind, ImaginaryEllipsoid);
        let cone = kind(q(1), q(0), q(-1), qf(3, 4));
        assert_eq!(cone.kind, RealEllipticCone);
        assert_eq!(
            cone.singularity,
            Some(QuadricSingularity::ProperPoint([qf(1, 2), qf(1, 2), qf(1, 2)]))
        );
        assert_eq!(kind(q(3), q(-1), q(1), q(0)).kind, EllipticParaboloid);
        assert_eq!(kind(q(0), q(1), q(2), q(1)).kind, DoublePlane);
    }

    #[test]
    fn line_restriction_examples() {
        let lr = line_restriction(&qc(q(1), q(0), q(-1), qf(3, 4)), Stratum::SpaceDiagonal);
        assert_eq!((lr.a.clone(), lr.b.clone(), lr.c.clone()), (q(3), q(-3), qf(3, 4)));
        assert_eq!(lr.double_positive_root, Some(qf(1, 2)));
        assert_eq!(lr.positive_roots, 1);
        assert_eq!(lr.crossing_roots, 0);

        let lr = line_restriction(&qc(q(1), q(0), q(-1), q(1)), Stratum::FaceDiagonal);
        assert_eq!((lr.a.clone(), lr.b.clone(), lr.c.clone()), (q(1), q(-2), q(1)));
        assert_eq!(lr.double_positive_root, Some(q(1)));

        let lr = line_restriction(&qc(q(0), q(1), q(1), q(0)), Stratum::SpaceDiagonal);
        assert_eq!((lr.a.clone(), lr.b.clone(), lr.c.clone()), (q(9), q(3), q(0)));
        assert!(lr.has_zero_root);
        assert_eq!(lr.positive_roots, 0);

        let lr = line_restriction(&qc(q(1), q(0), q(-1), qf(1, 2)), Stratum::SpaceDiagonal);
        assert_eq!(lr.positive_roots, 2);
        assert_eq!(lr.crossing_roots, 2);
    }

    #[test]
    fn strata_singularity_examples() {
        let s = strata_singularities(&qc(q(1), q(0), q(-1), qf(3, 4)));
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].size, 8);
        assert_eq!(s[0].representative[0], SqrtQ::sqrt_of(qf(1, 2)));

        let s = strata_singularities(&qc(q(1), q(0), q(-1), q(1)));
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].size, 12);
        assert_eq!(s[0].representative_f64(), [1.0, 1.0, 0.0]);

        let s = strata_singularities(&qc(q(0), q(1), q(-1), q(0)));
        assert_eq!(s, vec![SingularOrbit::origin()]);
    }

    #[test]
    fn existence_examples() {
        assert_eq!(existence_check(&qc(q(1), q(-3), q(0), q(-1))), Existence::Empty);
        assert_eq!(existence_check(&qc(q(3), q(-1), q(0), q(-1))), Existence::Empty);
        assert_eq!(existence_check(&qc(q(0), q(1), q(1), q(0))), Existence::PointOnly);
        assert_eq!(existence_check(&qc(q(0), q(1), q(0), q(-1))), Existence::NonemptySurface);
        assert_eq!(existence_check(&qc(q(1), q(0), q(1), qf(1, 2))), Existence::Empty);
        // three coordinate axes
        assert_eq!(existence_check(&qc(q(1), q(0), q(0), q(0))), Existence::NonemptySurface);
        // double sphere touches zero without crossing
        assert_eq!(existence_check(&qc(q(0), q(1), q(-1), qf(1, 4))), Existence::NonemptySurface);
    }
}
