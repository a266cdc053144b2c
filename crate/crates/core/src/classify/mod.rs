//! Scale-invariant normal forms and the full topological classification.

mod cases;
pub mod profile;
mod sweep;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub use cases::{bullet_for, Bullet, CaseLabel, Expect, Status};
pub use profile::{analyze, Piece, PieceKind, Profile};
pub use sweep::{parse_range, sweep, SweepAxis, SweepFamily, SweepRow, SweepSpec, SWEEP_COLUMNS};

use crate::quadric::{
    assemble_lambda, classify_quadric, existence_check, strata_singularities, Existence, QuadricType,
    QuarticCoefficients, SingularOrbit,
};
use crate::rational::{fmt_q, sign, Radius, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    /// No quartic `v` term: unions of round spheres.
    AZero,
    /// No `u²` term.
    BZero,
    /// No `u` term.
    CZero,
    /// All of `A, B, C` nonzero: `β v + ε₁ u² + ε₂ u + ε₁ k/4`.
    Eps,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::AZero => "A_ZERO",
            FamilyTag::BZero => "B_ZERO",
            FamilyTag::CZero => "C_ZERO",
            FamilyTag::Eps => "EPS",
        }
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Normal form of a quartic up to `f → μ f(x/λ)` and overall sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyForm {
    pub family: FamilyTag,
    /// `|A/B|`.
    #[serde(serialize_with = "crate::rational::ser_opt_q")]
    pub beta: Option<Q>,
    /// Sign of `B` once `A > 0`.
    pub eps1: Option<i8>,
    /// Sign of `C` once the leading coefficient is positive.
    pub eps2: Option<i8>,
    /// `4DB/C²`.
    #[serde(serialize_with = "crate::rational::ser_opt_q")]
    pub k: Option<Q>,
    /// `D·B/C²` (no `v` term) or `D·A/C²` (no `u²` term), when `C ≠ 0`.
    #[serde(serialize_with = "crate::rational::ser_opt_q")]
    pub d_over_c2: Option<Q>,
    /// `B/A` (no `u` term).
    #[serde(serialize_with = "crate::rational::ser_opt_q")]
    pub b: Option<Q>,
    /// Sign of `D`, when it is the only remaining parameter.
    pub d_sign: Option<i8>,
    /// Representative coefficients of the normal form.
    #[serde(serialize_with = "ser_coeffs")]
    pub normal_form: QuarticCoefficients,
}

fn ser_coeffs<S: Serializer>(c: &QuarticCoefficients, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(4))?;
    for x in c.as_array() {
        seq.serialize_element(&fmt_q(x))?;
    }
    seq.end()
}

/// Coefficients with the overall sign fixed so the leading normalizer (`A`,
/// else `B`) is positive. The zero set is unchanged.
pub fn sign_normalized(q: &QuarticCoefficients) -> QuarticCoefficients {
    let lead = if q.a().is_zero() { q.b() } else { q.a() };
    if lead.is_negative() {
        q.negated()
    } else {
        q.clone()
    }
}

pub fn normalize(q: &QuarticCoefficients) -> FamilyForm {
    let q = sign_normalized(q);
    let (a, b, c, d) = (q.a(), q.b(), q.c(), q.d());
    let one = Q::one;
    let zero = Q::zero;
    let blank = |family, normal_form| FamilyForm {
        family,
        beta: None,
        eps1: None,
        eps2: None,
        k: None,
        d_over_c2: None,
        b: None,
        d_sign: None,
        normal_form,
    };
    let mk = |a: Q, b: Q, c: Q, d: Q| QuarticCoefficients::new(a, b, c, d).expect("leading coefficient is nonzero");
    let e2 = sign(c);
    if a.is_zero() || b.is_zero() {
        let (tag, lead) = if a.is_zero() { (FamilyTag::AZero, b) } else { (FamilyTag::BZero, a) };
        let place = |lead_val: Q, c_val: Q, d_val: Q| {
            if a.is_zero() {
                mk(zero(), lead_val, c_val, d_val)
            } else {
                mk(lead_val, zero(), c_val, d_val)
            }
        };
        if c.is_zero() {
            let mut f = blank(tag, place(one(), zero(), Q::from_integer(sign(d).into())));
            f.eps2 = Some(0);
            f.d_sign = Some(sign(d));
            return f;
        }
        let dd = d * lead / (c * c);
        let mut f = blank(tag, place(one(), Q::from_integer(e2.into()), dd.clone()));
        f.eps2 = Some(e2);
        f.d_over_c2 = Some(dd);
        return f;
    }
    if c.is_zero() {
        let mut f = blank(FamilyTag::CZero, mk(one(), b / a, zero(), Q::from_integer(sign(d).into())));
        f.b = Some(b / a);
        f.d_sign = Some(sign(d));
        return f;
    }
    let beta = a / b.abs();
    let e1 = sign(b);
    let k = Q::from_integer(4.into()) * d * b / (c * c);
    let e1q = Q::from_integer(e1.into());
    let nf = mk(beta.clone(), e1q.clone(), Q::from_integer(e2.into()), &e1q * &k / Q::from_integer(4.into()));
    let mut f = blank(FamilyTag::Eps, nf);
    f.beta = Some(beta);
    f.eps1 = Some(e1);
    f.eps2 = Some(e2);
    f.k = Some(k);
    f
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    /// Parameter region that fired.
    pub bullet: String,
    pub status: Status,
    pub note: Option<&'static str>,
    /// Extra facts and any inconsistency found while classifying.
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub case_label: CaseLabel,
    /// Connected components of the real zero set, isolated points included.
    pub components: usize,
    pub isolated_points: usize,
    pub unbounded: bool,
    /// Closed surfaces enclosing the origin.
    pub nesting_depth: usize,
    pub singular_orbits: Vec<SingularOrbit>,
    /// Singular along curves or surfaces, not only at points.
    pub nonisolated_singular: bool,
    /// Sphere radii when the zero set is a union of round spheres.
    pub radii: Vec<Radius>,
    pub family: FamilyForm,
    pub quadric: QuadricType,
    pub pieces: Vec<Piece>,
    pub provenance: Provenance,
}

impl TopologyReport {
    pub fn singular_point_count(&self) -> usize {
        self.singular_orbits.iter().map(|o| o.size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components == 0
    }
}

/// Classifies the real zero set of `q`.
pub fn classify(q: &QuarticCoefficients) -> TopologyReport {
    let family = normalize(q);
    let bullet = bullet_for(&family);
    let profile = analyze(q);
    let singular_orbits = strata_singularities(q);
    let existence = existence_check(q);
    let (inv, quadric) = classify_quadric(&assemble_lambda(q));

    let mut diagnostics = Vec::new();
    let mut status = bullet.status;
    let ex = &bullet.expect;
    let mut sizes: Vec<usize> = singular_orbits.iter().map(|o| o.size).collect();
    sizes.sort_unstable();
    let checks = [
        (profile.components() == ex.components, "component count"),
        (profile.isolated_points() == ex.isolated, "isolated point count"),
        (profile.unbounded() == ex.unbounded, "boundedness"),
        (sizes == ex.singular, "singular orbits"),
        (profile.nonisolated_singular == ex.nonisolated, "non-isolated singular locus"),
        ((existence == Existence::Empty) == (ex.components == 0), "emptiness"),
        (
            (existence == Existence::PointOnly) == (ex.components == 1 && ex.isolated == 1 && q.d().is_zero()),
            "point-only zero set",
        ),
    ];
    for (ok, what) in checks {
        if !ok {
            status = Status::Conflict;
            diagnostics.push(format!("conflict: case expectation and exact analysis disagree on {what}"));
        }
    }
    if q.a().is_zero() && inv.rk_lambda != 2 {
        diagnostics.push(format!("rank of the quadric matrix is {}, not the generic 2 of this family", inv.rk_lambda));
    }

    let radii = profile.sphere_radii_sq.iter().map(|u| Radius { squared: u.clone() }).collect();

    TopologyReport {
        case_label: bullet.label,
        components: profile.components(),
        isolated_points: profile.isolated_points(),
        unbounded: profile.unbounded(),
        nesting_depth: profile.nesting_depth(),
        singular_orbits,
        nonisolated_singular: profile.nonisolated_singular,
        radii,
        family,
        quadric,
        pieces: profile.pieces,
        provenance: Provenance { bullet: bullet.id, status, note: bullet.note, diagnostics },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn qc(a: Q, b: Q, c: Q, d: Q) -> QuarticCoefficients {
        QuarticCoefficients::new(a, b, c, d).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let f = normalize(&qc(q(1), qf(1, 2), qf(1, 2), q(3)));
        assert_eq!(f.family, FamilyTag::Eps);
        assert_eq!(f.beta, Some(q(2)));
        assert_eq!((f.eps1, f.eps2), (Some(1), Some(1)));
        assert_eq!(f.k, Some(q(24)));

        let f = normalize(&qc(q(0), q(-2), q(2), q(2)));
        assert_eq!(f.family, FamilyTag::AZero);
        assert_eq!(f.normal_form, qc(q(0), q(1), q(-1), q(-1)));

        let f = normalize(&qc(q(1), q(0), q(-1), qf(3, 4)));
        assert_eq!(f.family, FamilyTag::BZero);
        assert_eq!(f.d_over_c2, Some(qf(3, 4)));
    }

    #[test]
    fn normal_form_has_the_same_case() {
        let f = qc(q(2), qf(-1, 3), qf(5, 7), qf(-2, 9));
        let nf = normalize(&f).normal_form;
        assert_eq!(classify(&f).case_label, classify(&nf).case_label);
        assert_eq!(normalize(&nf).k, normalize(&f).k);
    }

    #[test]
    fn documented_examples() {
        let r = classify(&qc(q(0), q(1), q(-1), qf(1, 8)));
        assert_eq!(r.case_label, CaseLabel::TwoNestedSpheres);
        assert_eq!(r.components, 2);
        assert_eq!(r.radii.len(), 2);
        let r = classify(&qc(q(0), q(1), q(-1), qf(1, 4)));
        assert_eq!(r.case_label, CaseLabel::DoubleSphereMultiplicityTwo);
        assert!((r.radii[0].to_f64() - 0.5f64.sqrt()).abs() < 1e-12);
        let r = classify(&qc(q(1), q(0), q(-1), qf(1, 2)));
        assert_eq!((r.components, r.unbounded, r.nesting_depth), (2, true, 1));
        let r = classify(&qc(q(1), q(1), q(-1), qf(1, 5)));
        assert_eq!(r.case_label, CaseLabel::KummerLike12ConicPoints);
        assert_eq!(r.singular_point_count(), 12);
        assert_eq!(classify(&qc(q(1), qf(-1, 3), q(0), q(1))).case_label, CaseLabel::StellatedCube);
    }

    #[test]
    fn conflicts_are_flagged_not_hidden() {
        let r = classify(&qc(q(1), q(0), q(1), qf(1, 2)));
        assert_eq!(r.case_label, CaseLabel::Empty);
        assert_eq!(r.provenance.status, Status::PaperConflict);
        let r = classify(&qc(q(1), qf(-1, 3), q(0), q(0)));
        assert_eq!(r.case_label, CaseLabel::FourDiagonalLines);
        assert_eq!(r.provenance.status, Status::PaperConflict);
    }

    #[test]
    fn double_sphere_reports_low_rank_note() {
        let r = classify(&qc(q(0), q(1), q(0), q(0)));
        assert!(r.provenance.diagnostics.iter().any(|d| d.contains("rank")));
    }
}
