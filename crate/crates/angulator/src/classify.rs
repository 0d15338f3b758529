//! Component tags of diagonals: the transjective component `S^d` and the
//! tubes `T_p^d`, `T_q^d`, together with the degree `d` and the tube level.
//!
//! The outer arc `O_{mx-(d+1), km+2}` lies in `T_p^d` at level `k`, so an
//! outer arc starting at `s` has degree `-(s+1) mod m`; inner arcs are
//! treated the same way with `T_q^d`. A type-1 diagonal leaving `O_x` lies
//! in `S^i` with `x ≡ m - i (mod m)`, i.e. degree `-x mod m`. With these
//! formulas one step of the rotation `[1]` raises every degree by one.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{endpoints, AnnulusConfig, GeometryError, MDiagonal};

/// Which component family a diagonal belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentKind {
    Transjective,
    TubeP,
    TubeQ,
}

/// Component, degree and (for tubes) level of a diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentTag {
    pub kind: ComponentKind,
    pub degree: usize,
    pub level: Option<usize>,
}

impl fmt::Display for ComponentTag {
    /// `S^d`, `T_p^d[k]` or `T_q^d[k]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree;
        match (self.kind, self.level) {
            (ComponentKind::Transjective, _) => write!(f, "S^{d}"),
            (ComponentKind::TubeP, Some(k)) => write!(f, "T_p^{d}[{k}]"),
            (ComponentKind::TubeQ, Some(k)) => write!(f, "T_q^{d}[{k}]"),
            (ComponentKind::TubeP, None) => write!(f, "T_p^{d}"),
            (ComponentKind::TubeQ, None) => write!(f, "T_q^{d}"),
        }
    }
}

/// Errors of [`check_component_shift`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{first} and {second} are not two arcs on the same boundary with the target of the first starting the second")]
    PreconditionViolation { first: MDiagonal, second: MDiagonal },
}

fn neg_mod(x: usize, m: usize) -> usize {
    (m - x % m) % m
}

/// The component tag of a valid diagonal.
///
/// ```
/// use angulator::{classify, AnnulusConfig, MDiagonal};
/// let c = AnnulusConfig::new(2, 2, 2).unwrap();
/// let tag = classify(&c, &MDiagonal::Type2 { start: 1, level: 1 });
/// assert_eq!(tag.to_string(), "T_p^0[1]");
/// let c3 = AnnulusConfig::new(2, 2, 3).unwrap();
/// let tag = classify(&c3, &MDiagonal::Type1 { outer: 1, inner: 1, winding: 0 });
/// assert_eq!(tag.to_string(), "S^2");
/// ```
pub fn classify(config: &AnnulusConfig, d: &MDiagonal) -> ComponentTag {
    let m = config.m();
    match *d {
        MDiagonal::Type1 { outer, .. } => ComponentTag {
            kind: ComponentKind::Transjective,
            degree: neg_mod(outer, m),
            level: None,
        },
        MDiagonal::Type2 { start, level } => ComponentTag {
            kind: ComponentKind::TubeP,
            degree: neg_mod(start + 1, m),
            level: Some(level),
        },
        MDiagonal::Type3 { start, level } => ComponentTag {
            kind: ComponentKind::TubeQ,
            degree: neg_mod(start + 1, m),
            level: Some(level),
        },
    }
}

/// For two arcs on the same boundary where the second starts at the target
/// of the first, checks that the second sits one degree lower.
///
/// ```
/// use angulator::{check_component_shift, AnnulusConfig, MDiagonal};
/// let c = AnnulusConfig::new(2, 2, 2).unwrap();
/// let d = MDiagonal::Type2 { start: 0, level: 1 };
/// let e = MDiagonal::Type2 { start: 3, level: 1 };
/// assert_eq!(check_component_shift(&c, &d, &e), Ok(true));
/// assert!(check_component_shift(&c, &e, &e).is_err());
/// ```
pub fn check_component_shift(
    config: &AnnulusConfig,
    d: &MDiagonal,
    e: &MDiagonal,
) -> Result<bool, ClassifyError> {
    d.check(config)?;
    e.check(config)?;
    let same_boundary = matches!(
        (d, e),
        (MDiagonal::Type2 { .. }, MDiagonal::Type2 { .. })
            | (MDiagonal::Type3 { .. }, MDiagonal::Type3 { .. })
    );
    if !same_boundary || endpoints(config, d).1 != endpoints(config, e).0 {
        return Err(ClassifyError::PreconditionViolation {
            first: *d,
            second: *e,
        });
    }
    let m = config.m();
    let (a, b) = (classify(config, d), classify(config, e));
    Ok(b.kind == a.kind && (b.degree + 1) % m == a.degree)
}
