//! Exact topology of octahedrally symmetric quartic surfaces
//! `A·v + B·u² + C·u + D = 0`.

pub mod classify;
pub mod error;
pub mod oracle;
pub mod octgroup;
pub mod quadric;
pub mod rational;

pub use classify::{classify, normalize, CaseLabel, TopologyReport};
pub use error::{Error, Result};
pub use octgroup::{GroupElement, Orbit};
pub use quadric::{QuarticCoefficients, Stratum};
pub use rational::Q;
