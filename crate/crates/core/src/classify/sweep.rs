//! Parameter sweeps over the normal-form families.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{classify, TopologyReport};
use crate::error::{Error, Result};
use crate::quadric::QuarticCoefficients;
use crate::rational::{fmt_q, parse_q, q, Q};

/// Hard limit on nodes per axis.
const MAX_NODES: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepFamily {
    /// `u² + ε₂ u + d` (spheres).
    AZero { eps2: i8 },
    /// `v + ε₂ u + d`.
    BZero { eps2: i8 },
    /// `v + b u² + D`; outer axis `b`, inner axis `D`.
    CZero,
    /// `β v + ε₁ u² + ε₂ u + ε₁ k/4`; outer axis `β`, inner axis `k`.
    Eps { eps1: i8, eps2: i8 },
}

impl SweepFamily {
    pub fn name(&self) -> &'static str {
        match self {
            SweepFamily::AZero { .. } => "a0",
            SweepFamily::BZero { .. } => "b0",
            SweepFamily::CZero => "c0",
            SweepFamily::Eps { .. } => "eps",
        }
    }

    /// Coefficients at one node; `outer` is ignored by the one-axis families.
    pub fn coefficients(&self, outer: &Q, inner: &Q) -> Result<QuarticCoefficients> {
        let z = Q::zero;
        match *self {
            SweepFamily::AZero { eps2 } => QuarticCoefficients::new(z(), q(1), q(eps2.into()), inner.clone()),
            SweepFamily::BZero { eps2 } => QuarticCoefficients::new(q(1), z(), q(eps2.into()), inner.clone()),
            SweepFamily::CZero => QuarticCoefficients::new(q(1), outer.clone(), z(), inner.clone()),
            SweepFamily::Eps { eps1, eps2 } => {
                if !outer.is_positive() {
                    return Err(Error::InvalidGrid(format!("beta must be positive, got {}", fmt_q(outer))));
                }
                let e1 = q(eps1.into());
                QuarticCoefficients::new(outer.clone(), e1.clone(), q(eps2.into()), e1 * inner / q(4))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepAxis {
    pub values: Vec<Q>,
}

impl SweepAxis {
    pub fn single(x: Q) -> Self {
        SweepAxis { values: vec![x] }
    }
}

/// Parses `LO:HI:STEP` into the exact nodes `LO, LO+STEP, …` up to `HI`
/// inclusive. A bare number gives a single node.
pub fn parse_range(s: &str) -> Result<SweepAxis> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [x] => Ok(SweepAxis::single(parse_q(x)?)),
        [lo, hi, step] => {
            let (lo, hi, step) = (parse_q(lo)?, parse_q(hi)?, parse_q(step)?);
            if !step.is_positive() {
                return Err(Error::InvalidGrid("step must be positive".into()));
            }
            if hi < lo {
                return Err(Error::InvalidGrid("range end is below its start".into()));
            }
            let n = ((&hi - &lo) / &step).floor().to_integer();
            let n: usize = n
                .try_into()
                .ok()
                .filter(|n| *n < MAX_NODES)
                .ok_or_else(|| Error::InvalidGrid("too many grid nodes".into()))?;
            Ok(SweepAxis { values: (0..=n).map(|i| &lo + &step * q(i as i64)).collect() })
        }
        _ => Err(Error::InvalidGrid(format!("expected LO:HI:STEP, got {s:?}"))),
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub family: SweepFamily,
    /// `β` (eps) or `b` (c0); unused otherwise.
    pub outer: SweepAxis,
    /// `k` (eps) or `d`/`D`.
    pub inner: SweepAxis,
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub family: SweepFamily,
    pub outer: Q,
    pub inner: Q,
    pub coefficients: Option<QuarticCoefficients>,
    pub report: std::result::Result<TopologyReport, String>,
}

pub const SWEEP_COLUMNS: &[&str] = &[
    "family",
    "eps1",
    "eps2",
    "beta",
    "b",
    "k",
    "d",
    "A",
    "B",
    "C",
    "D",
    "case_label",
    "components",
    "isolated_points",
    "unbounded",
    "nesting",
    "sing_orbit_1",
    "sing_orbit_6",
    "sing_orbit_8",
    "sing_orbit_12",
    "status",
    "error",
];

impl SweepRow {
    pub fn columns() -> &'static [&'static str] {
        SWEEP_COLUMNS
    }

    /// Values in [`SWEEP_COLUMNS`] order.
    pub fn fields(&self) -> Vec<String> {
        let s = |x: &Q| fmt_q(x);
        let blank = String::new;
        let (eps1, eps2, beta, b, k, d) = match self.family {
            SweepFamily::AZero { eps2 } | SweepFamily::BZero { eps2 } => {
                (blank(), eps2.to_string(), blank(), blank(), blank(), s(&self.inner))
            }
            SweepFamily::CZero => (blank(), blank(), blank(), s(&self.outer), blank(), s(&self.inner)),
            SweepFamily::Eps { eps1, eps2 } => {
                (eps1.to_string(), eps2.to_string(), s(&self.outer), blank(), s(&self.inner), blank())
            }
        };
        let coeffs: Vec<String> = match &self.coefficients {
            Some(c) => c.as_array().iter().map(|x| fmt_q(x)).collect(),
            None => vec![blank(); 4],
        };
        let mut out = vec![self.family.name().to_string(), eps1, eps2, beta, b, k, d];
        out.extend(coeffs);
        match &self.report {
            Ok(r) => {
                let count = |n: usize| r.singular_orbits.iter().filter(|o| o.size == n).count().to_string();
                out.extend([
                    r.case_label.as_str().to_string(),
                    r.components.to_string(),
                    r.isolated_points.to_string(),
                    r.unbounded.to_string(),
                    r.nesting_depth.to_string(),
                    count(1),
                    count(6),
                    count(8),
                    count(12),
                    r.provenance.status.as_str().to_string(),
                    blank(),
                ]);
            }
            Err(e) => {
                out.extend(std::iter::repeat_with(blank).take(10));
                out.push(e.clone());
            }
        }
        out
    }
}

/// Classifies every node, row-major (outer axis slowest). Nodes run in
/// parallel; the output order is the grid order.
pub fn sweep(spec: &SweepSpec) -> Vec<SweepRow> {
    let outer: Vec<Q> = match spec.family {
        SweepFamily::AZero { .. } | SweepFamily::BZero { .. } => vec![Q::zero()],
        _ => spec.outer.values.clone(),
    };
    let nodes: Vec<(Q, Q)> = outer
        .iter()
        .flat_map(|o| spec.inner.values.iter().map(move |i| (o.clone(), i.clone())))
        .collect();
    nodes
        .into_par_iter()
        .map(|(o, i)| {
            let coeffs = spec.family.coefficients(&o, &i);
            let report = coeffs.as_ref().map(classify).map_err(|e| e.to_string());
            SweepRow { family: spec.family, outer: o, inner: i, coefficients: coeffs.ok(), report }
        })
        .collect()
}
