//! The marked annulus `P(p,q,m)`, its m-diagonals, the rotation `[s]` and the
//! crossing predicate.
//!
//! Positions are reasoned about in the universal cover of the annulus: a
//! horizontal strip whose top line covers the outer boundary and whose bottom
//! line covers the inner boundary. One trip around the annulus is one unit of
//! `x`. The outer vertex `O_j` lifts to `x = j/(mp) + t` and the inner vertex
//! `I_j` lifts to `x = -j/(mq) + t`; the minus sign reflects that the inner
//! polygon is labelled clockwise while the outer one is labelled
//! counterclockwise.
//!
//! A type-1 diagonal `T1(o,i;w)` is the straight segment from `O_o` at
//! `x = o/(mp)` to `I_i` at `x = -i/(mq) + w`. The integer `w` (the winding)
//! tells the homotopy classes with the same endpoints apart: shifting it by
//! one makes the arc wrap once more around the hole.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational number used for every position in the universal cover.
pub type Rational = Ratio<i64>;

/// Errors raised while building or combining geometric objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    /// The triple `(p, q, m)` violates `p, q >= 2`, `m >= 1`.
    #[error("invalid configuration P({p},{q},{m}): {reason}")]
    InvalidConfig {
        p: usize,
        q: usize,
        m: usize,
        reason: &'static str,
    },
    /// Type-1 endpoints must agree modulo `m`.
    #[error("outer index {outer} and inner index {inner} are not congruent modulo {m}")]
    CongruenceViolation {
        outer: usize,
        inner: usize,
        m: usize,
    },
    /// A vertex index lies outside `0..bound`.
    #[error("{what} index {index} is out of range 0..{bound}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    /// Levels start at 1.
    #[error("level must be at least 1")]
    ZeroLevel,
    /// A boundary-parallel arc spanning this many vertices would have to
    /// cross itself.
    #[error("level {level} on a boundary with {vertices} vertices: the diagonal has a self-intersection")]
    SelfIntersecting { level: usize, vertices: usize },
    /// The diagonal does not belong to the given annulus.
    #[error("diagonal {diagonal} does not belong to {config}")]
    ConfigMismatch {
        diagonal: MDiagonal,
        config: AnnulusConfig,
    },
    /// A textual literal could not be parsed.
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// The polygon `P(p,q,m)`: an outer `mp`-gon with an inner `mq`-gon removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ConfigFields")]
pub struct AnnulusConfig {
    p: usize,
    q: usize,
    m: usize,
}

#[derive(Deserialize)]
struct ConfigFields {
    p: usize,
    q: usize,
    m: usize,
}

impl TryFrom<ConfigFields> for AnnulusConfig {
    type Error = GeometryError;

    fn try_from(f: ConfigFields) -> Result<Self, Self::Error> {
        AnnulusConfig::new(f.p, f.q, f.m)
    }
}

impl AnnulusConfig {
    /// Builds `P(p,q,m)`, requiring `p >= 2`, `q >= 2` and `m >= 1`.
    ///
    /// ```
    /// use angulator::AnnulusConfig;
    /// let c = AnnulusConfig::new(2, 3, 2).unwrap();
    /// assert_eq!((c.outer_count(), c.inner_count()), (4, 6));
    /// assert!(AnnulusConfig::new(1, 2, 1).is_err());
    /// ```
    pub fn new(p: usize, q: usize, m: usize) -> Result<Self, GeometryError> {
        let reason = if p < 2 {
            Some("p >= 2 required")
        } else if q < 2 {
            Some("q >= 2 required")
        } else if m < 1 {
            Some("m >= 1 required")
        } else if m * p.max(q) > 1 << 20 {
            Some("polygon too large")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(GeometryError::InvalidConfig { p, q, m, reason }),
            None => Ok(AnnulusConfig { p, q, m }),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of marked vertices on the outer boundary, `m·p`.
    pub fn outer_count(&self) -> usize {
        self.m * self.p
    }

    /// Number of marked vertices on the inner boundary, `m·q`.
    pub fn inner_count(&self) -> usize {
        self.m * self.q
    }

    /// Number of diagonals in every `(m+2)`-angulation, `p + q`.
    pub fn diagonal_count(&self) -> usize {
        self.p + self.q
    }
}

impl fmt::Display for AnnulusConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{},{})", self.p, self.q, self.m)
    }
}

impl FromStr for AnnulusConfig {
    type Err = GeometryError;

    /// Parses the literal `P(p,q,m)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let args = parse_call(s, "P", 3)?;
        AnnulusConfig::new(args[0] as usize, args[1] as usize, args[2] as usize)
    }
}

/// A marked vertex: `O_j` on the outer boundary or `I_j` on the inner one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    Outer(usize),
    Inner(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Outer(j) => write!(f, "O_{j}"),
            Vertex::Inner(j) => write!(f, "I_{j}"),
        }
    }
}

/// One of the two boundary components, and the matching line of the cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Boundary {
    Outer,
    Inner,
}

/// An m-diagonal of `P(p,q,m)`, stored in canonical form.
///
/// * `Type1 { outer, inner, winding }` joins `O_outer` to `I_inner`; the
///   indices agree modulo `m`.
/// * `Type2 { start, level }` is the outer arc `O_{start, level·m+2}`: it
///   leaves `O_start` and cuts off the `level·m + 2` consecutive outer
///   vertices counted counterclockwise from it.
/// * `Type3 { start, level }` is the inner arc `I_{start, level·m+2}`, counted
///   clockwise on the inner polygon.
///
/// The derived order (type, then fields) is the deterministic order used by
/// enumeration and by [`crate::Angulation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MDiagonal {
    Type1 {
        outer: usize,
        inner: usize,
        winding: i64,
    },
    Type2 {
        start: usize,
        level: usize,
    },
    Type3 {
        start: usize,
        level: usize,
    },
}

impl MDiagonal {
    /// `true` for diagonals joining the two boundaries.
    pub fn is_type1(&self) -> bool {
        matches!(self, MDiagonal::Type1 { .. })
    }

    /// The type number 1, 2 or 3.
    pub fn type_number(&self) -> u8 {
        match self {
            MDiagonal::Type1 { .. } => 1,
            MDiagonal::Type2 { .. } => 2,
            MDiagonal::Type3 { .. } => 3,
        }
    }

    /// Checks every invariant of the canonical form against `config`.
    pub fn check(&self, config: &AnnulusConfig) -> Result<(), GeometryError> {
        let rebuilt = match *self {
            MDiagonal::Type1 {
                outer,
                inner,
                winding,
            } => make_type1(config, outer, inner, winding),
            MDiagonal::Type2 { start, level } => make_type2(config, start, level),
            MDiagonal::Type3 { start, level } => make_type3(config, start, level),
        };
        rebuilt.map(|_| ())
    }
}

impl fmt::Display for MDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MDiagonal::Type1 {
                outer,
                inner,
                winding,
            } => write!(f, "T1({outer},{inner};{winding})"),
            MDiagonal::Type2 { start, level } => write!(f, "T2({start},{level})"),
            MDiagonal::Type3 { start, level } => write!(f, "T3({start},{level})"),
        }
    }
}

impl FromStr for MDiagonal {
    type Err = GeometryError;

    /// Parses `T1(o,i;w)`, `T2(s,k)` or `T3(s,k)`. The result is not yet
    /// checked against a configuration; see [`MDiagonal::check`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = |reason: &str| GeometryError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let non_negative =
            |v: i64| usize::try_from(v).map_err(|_| bad("indices must be non-negative"));
        if t.starts_with("T1") {
            let normalized = t.replacen(';', ",", 1);
            let args = parse_call(&normalized, "T1", 3).map_err(|_| bad("expected T1(o,i;w)"))?;
            Ok(MDiagonal::Type1 {
                outer: non_negative(args[0])?,
                inner: non_negative(args[1])?,
                winding: args[2],
            })
        } else if t.starts_with("T2") || t.starts_with("T3") {
            let name = &t[..2];
            let args = parse_call(t, name, 2).map_err(|_| bad("expected T2(s,k) or T3(s,k)"))?;
            let (start, level) = (non_negative(args[0])?, non_negative(args[1])?);
            Ok(if name == "T2" {
                MDiagonal::Type2 { start, level }
            } else {
                MDiagonal::Type3 { start, level }
            })
        } else {
            Err(bad("expected a literal starting with T1, T2 or T3"))
        }
    }
}

impl Serialize for MDiagonal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MDiagonal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `NAME(a,b,...)` with exactly `arity` integer arguments.
fn parse_call(s: &str, name: &str, arity: usize) -> Result<Vec<i64>, GeometryError> {
    let bad = |reason: String| GeometryError::Parse {
        input: s.to_string(),
        reason,
    };
    let body = s
        .trim()
        .strip_prefix(name)
        .and_then(|rest| rest.trim_start().strip_prefix('('))
        .and_then(|rest| rest.trim_end().strip_suffix(')'))
        .ok_or_else(|| bad(format!("expected {name}(...)")))?;
    let args: Vec<i64> = body
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<i64>()
                .map_err(|e| bad(format!("{a:?}: {e}")))
        })
        .collect::<Result<_, _>>()?;
    if args.len() != arity {
        return Err(bad(format!(
            "expected {arity} arguments, found {}",
            args.len()
        )));
    }
    Ok(args)
}

/// Builds the type-1 diagonal from `O_o` to `I_i` with winding `w`.
///
/// ```
/// use angulator::{make_type1, AnnulusConfig, GeometryError, MDiagonal};
/// let c = AnnulusConfig::new(2, 2, 2).unwrap();
/// assert_eq!(
///     make_type1(&c, 0, 0, 0).unwrap(),
///     MDiagonal::Type1 { outer: 0, inner: 0, winding: 0 }
/// );
/// assert!(matches!(make_type1(&c, 1, 0, 0), Err(GeometryError::CongruenceViolation { .. })));
/// ```
pub fn make_type1(
    config: &AnnulusConfig,
    o: usize,
    i: usize,
    w: i64,
) -> Result<MDiagonal, GeometryError> {
    check_index("outer", o, config.outer_count())?;
    check_index("inner", i, config.inner_count())?;
    if o % config.m != i % config.m {
        return Err(GeometryError::CongruenceViolation {
            outer: o,
            inner: i,
            m: config.m,
        });
    }
    Ok(MDiagonal::Type1 {
        outer: o,
        inner: i,
        winding: w,
    })
}

/// Builds the outer arc `O_{s, km+2}`.
///
/// Levels `k >= p` would need an arc running more than once around the
/// outer boundary and are rejected.
///
/// ```
/// use angulator::{make_type2, AnnulusConfig, GeometryError};
/// let c = AnnulusConfig::new(2, 2, 2).unwrap();
/// assert!(make_type2(&c, 1, 1).is_ok());
/// assert!(matches!(make_type2(&c, 0, 2), Err(GeometryError::SelfIntersecting { .. })));
/// ```
pub fn make_type2(config: &AnnulusConfig, s: usize, k: usize) -> Result<MDiagonal, GeometryError> {
    check_index("outer", s, config.outer_count())?;
    check_level(k, config.p, config.outer_count())?;
    Ok(MDiagonal::Type2 { start: s, level: k })
}

/// Builds the inner arc `I_{s, km+2}`; the mirror image of [`make_type2`].
pub fn make_type3(config: &AnnulusConfig, s: usize, k: usize) -> Result<MDiagonal, GeometryError> {
    check_index("inner", s, config.inner_count())?;
    check_level(k, config.q, config.inner_count())?;
    Ok(MDiagonal::Type3 { start: s, level: k })
}

fn check_index(what: &'static str, index: usize, bound: usize) -> Result<(), GeometryError> {
    if index < bound {
        Ok(())
    } else {
        Err(GeometryError::IndexOutOfRange { what, index, bound })
    }
}

fn check_level(k: usize, spokes: usize, vertices: usize) -> Result<(), GeometryError> {
    if k == 0 {
        Err(GeometryError::ZeroLevel)
    } else if k >= spokes {
        Err(GeometryError::SelfIntersecting { level: k, vertices })
    } else {
        Ok(())
    }
}

/// Number of boundary edges cut off by a type-2/3 arc of level `k`.
pub(crate) fn span(config: &AnnulusConfig, level: usize) -> usize {
    level * config.m + 1
}

/// Source and target of a diagonal.
///
/// A type-2 arc `O_{s,km+2}` runs from `O_s` to `O_{s+km+1}`; type 3 is the
/// same on the inner polygon; a type-1 diagonal runs from its outer to its
/// inner endpoint. For `m = 1` and the top level the two endpoints of a
/// boundary arc coincide: the arc is a loop around the hole.
///
/// ```
/// use angulator::{endpoints, AnnulusConfig, MDiagonal, Vertex};
/// let c = AnnulusConfig::new(2, 2, 2).unwrap();
/// let d = MDiagonal::Type3 { start: 2, level: 1 };
/// assert_eq!(endpoints(&c, &d), (Vertex::Inner(2), Vertex::Inner(1)));
/// ```
pub fn endpoints(config: &AnnulusConfig, d: &MDiagonal) -> (Vertex, Vertex) {
    match *d {
        MDiagonal::Type1 { outer, inner, .. } => (Vertex::Outer(outer), Vertex::Inner(inner)),
        MDiagonal::Type2 { start, level } => (
            Vertex::Outer(start),
            Vertex::Outer((start + span(config, level)) % config.outer_count()),
        ),
        MDiagonal::Type3 { start, level } => (
            Vertex::Inner(start),
            Vertex::Inner((start + span(config, level)) % config.inner_count()),
        ),
    }
}

/// The rotation `[s]`: the outer polygon turns `s` steps clockwise and the
/// inner polygon `s` steps counterclockwise, so both vertex indices drop by
/// `s`. `rotate(_, m)` is the translation `τ`; negative `s` rotates back.
///
/// ```
/// use angulator::{rotate, AnnulusConfig, MDiagonal};
/// let c = AnnulusConfig::new(3, 2, 2).unwrap();
/// let d = MDiagonal::Type1 { outer: 1, inner: 3, winding: 0 };
/// assert_eq!(rotate(&c, &rotate(&c, &d, 5), -5), d);
/// ```
pub fn rotate(config: &AnnulusConfig, d: &MDiagonal, s: i64) -> MDiagonal {
    let n_out = config.outer_count() as i64;
    let n_in = config.inner_count() as i64;
    match *d {
        MDiagonal::Type1 {
            outer,
            inner,
            winding,
        } => {
            let o = outer as i64 - s;
            let i = inner as i64 - s;
            // Translate the whole lift so the outer end comes back to
            // [0, 1); the inner end then picks up the carries of both
            // index reductions.
            let shift = -o.div_euclid(n_out);
            MDiagonal::Type1 {
                outer: o.rem_euclid(n_out) as usize,
                inner: i.rem_euclid(n_in) as usize,
                winding: winding - i.div_euclid(n_in) + shift,
            }
        }
        MDiagonal::Type2 { start, level } => MDiagonal::Type2 {
            start: (start as i64 - s).rem_euclid(n_out) as usize,
            level,
        },
        MDiagonal::Type3 { start, level } => MDiagonal::Type3 {
            start: (start as i64 - s).rem_euclid(n_in) as usize,
            level,
        },
    }
}

/// A point on one of the two lines of the universal cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverPoint {
    pub line: Boundary,
    pub x: Rational,
}

/// One lift of a diagonal to the universal cover.
///
/// For a type-1 diagonal `start` lies on the outer line and `end` on the
/// inner line. For a boundary arc both ends lie on the same line, `start` at
/// the source and `end` at the target. Raising `shift` by one translates both
/// ends by exactly one circumference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LiftedArc {
    pub start: CoverPoint,
    pub end: CoverPoint,
    pub shift: i64,
}

/// Position of `O_j` in the cover, before translation.
pub fn outer_x(config: &AnnulusConfig, j: i64) -> Rational {
    Rational::new(j, config.outer_count() as i64)
}

/// Position of `I_j` in the cover, before translation.
pub fn inner_x(config: &AnnulusConfig, j: i64) -> Rational {
    Rational::new(-j, config.inner_count() as i64)
}

/// The lift of `d` translated by `shift` circumferences.
///
/// ```
/// use angulator::{lift, AnnulusConfig, MDiagonal, Rational};
/// let c = AnnulusConfig::new(2, 2, 2).unwrap();
/// let d = MDiagonal::Type1 { outer: 1, inner: 3, winding: 1 };
/// let l = lift(&c, &d, 0);
/// assert_eq!(l.start.x, Rational::new(1, 4));
/// assert_eq!(l.end.x, Rational::new(1, 4)); // -3/4 + 1
/// assert_eq!(lift(&c, &d, 2).end.x, Rational::new(9, 4));
/// ```
pub fn lift(config: &AnnulusConfig, d: &MDiagonal, shift: i64) -> LiftedArc {
    let t = Rational::from_integer(shift);
    let (start, end) = match *d {
        MDiagonal::Type1 {
            outer,
            inner,
            winding,
        } => (
            CoverPoint {
                line: Boundary::Outer,
                x: outer_x(config, outer as i64) + t,
            },
            CoverPoint {
                line: Boundary::Inner,
                x: inner_x(config, inner as i64) + Rational::from_integer(winding) + t,
            },
        ),
        MDiagonal::Type2 { start, level } => {
            let s = start as i64;
            (
                CoverPoint {
                    line: Boundary::Outer,
                    x: outer_x(config, s) + t,
                },
                CoverPoint {
                    line: Boundary::Outer,
                    x: outer_x(config, s + span(config, level) as i64) + t,
                },
            )
        }
        MDiagonal::Type3 { start, level } => {
            let s = start as i64;
            (
                CoverPoint {
                    line: Boundary::Inner,
                    x: inner_x(config, s) + t,
                },
                CoverPoint {
                    line: Boundary::Inner,
                    x: inner_x(config, s + span(config, level) as i64) + t,
                },
            )
        }
    };
    LiftedArc { start, end, shift }
}

/// Whether two diagonals of `config` cross in the interior of the annulus.
///
/// Diagonals that only share a marked vertex do not cross, and no diagonal
/// crosses itself.
///
/// ```
/// use angulator::{crosses, AnnulusConfig, MDiagonal};
/// let c = AnnulusConfig::new(2, 2, 2).unwrap();
/// let a = MDiagonal::Type2 { start: 0, level: 1 };
/// let b = MDiagonal::Type2 { start: 1, level: 1 };
/// assert!(crosses(&c, &a, &b).unwrap());
/// assert!(!crosses(&c, &a, &a).unwrap());
/// ```
pub fn crosses(
    config: &AnnulusConfig,
    a: &MDiagonal,
    b: &MDiagonal,
) -> Result<bool, GeometryError> {
    for d in [a, b] {
        d.check(config).map_err(|_| GeometryError::ConfigMismatch {
            diagonal: *d,
            config: *config,
        })?;
    }
    Ok(crosses_unchecked(config, a, b))
}

/// [`crosses`] without validating the inputs.
pub(crate) fn crosses_unchecked(config: &AnnulusConfig, a: &MDiagonal, b: &MDiagonal) -> bool {
    use MDiagonal::*;
    let n_out = config.outer_count();
    let n_in = config.inner_count();
    match (*a, *b) {
        (Type1 { .. }, Type1 { .. }) => {
            // Lifts cross iff some translate t of b makes the top and bottom
            // differences change sign: t strictly between u and v.
            let (la, lb) = (lift(config, a, 0), lift(config, b, 0));
            let u = la.start.x - lb.start.x;
            let v = la.end.x - lb.end.x;
            let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
            lo.floor() + Rational::from_integer(1) < hi
        }
        (
            Type2 {
                start: s1,
                level: k1,
            },
            Type2 {
                start: s2,
                level: k2,
            },
        ) => arcs_interleave(s1, span(config, k1), s2, span(config, k2), n_out),
        (
            Type3 {
                start: s1,
                level: k1,
            },
            Type3 {
                start: s2,
                level: k2,
            },
        ) => arcs_interleave(s1, span(config, k1), s2, span(config, k2), n_in),
        (Type2 { .. }, Type3 { .. }) | (Type3 { .. }, Type2 { .. }) => false,
        (Type2 { start, level }, Type1 { outer, .. })
        | (Type1 { outer, .. }, Type2 { start, level }) => {
            strictly_inside(outer, start, span(config, level), n_out)
        }
        (Type3 { start, level }, Type1 { inner, .. })
        | (Type1 { inner, .. }, Type3 { start, level }) => {
            strictly_inside(inner, start, span(config, level), n_in)
        }
    }
}

/// Is `x` strictly inside the cyclic interval `[s, s + len]` of a circle
/// with `n` points?
fn strictly_inside(x: usize, s: usize, len: usize, n: usize) -> bool {
    let d = (x + n - s) % n;
    d > 0 && d < len
}

/// Do the cyclic intervals `[s1, s1+l1]` and `[s2, s2+l2]` strictly
/// interleave, i.e. does exactly one endpoint of one lie strictly inside the
/// other?
fn arcs_interleave(s1: usize, l1: usize, s2: usize, l2: usize, n: usize) -> bool {
    let d = (s2 + n - s1) % n;
    let e = (s1 + n - s2) % n;
    (d > 0 && d < l1 && d + l2 > l1) || (e > 0 && e < l2 && e + l1 > l2)
}

/// Every m-diagonal of `config`, with type-1 windings restricted to
/// `windings`, in the canonical order.
pub fn all_diagonals(
    config: &AnnulusConfig,
    windings: std::ops::RangeInclusive<i64>,
) -> Vec<MDiagonal> {
    let mut out = Vec::new();
    for outer in 0..config.outer_count() {
        for inner in (outer % config.m..config.inner_count()).step_by(config.m) {
            for winding in windings.clone() {
                out.push(MDiagonal::Type1 {
                    outer,
                    inner,
                    winding,
                });
            }
        }
    }
    for start in 0..config.outer_count() {
        for level in 1..config.p {
            out.push(MDiagonal::Type2 { start, level });
        }
    }
    for start in 0..config.inner_count() {
        for level in 1..config.q {
            out.push(MDiagonal::Type3 { start, level });
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: usize, q: usize, m: usize) -> AnnulusConfig {
        AnnulusConfig::new(p, q, m).unwrap()
    }

    #[test]
    fn config_bounds() {
        assert!(AnnulusConfig::new(2, 2, 1).is_ok());
        assert!(matches!(
            AnnulusConfig::new(1, 2, 1),
            Err(GeometryError::InvalidConfig {
                reason: "p >= 2 required",
                ..
            })
        ));
        assert!(AnnulusConfig::new(2, 1, 1).is_err());
        assert!(AnnulusConfig::new(2, 2, 0).is_err());
        assert_eq!("P(4, 4, 3)".parse::<AnnulusConfig>().unwrap(), cfg(4, 4, 3));
        assert!("P(4,4)".parse::<AnnulusConfig>().is_err());
    }

    #[test]
    fn type1_construction() {
        let c = cfg(4, 4, 3);
        assert_eq!(
            make_type1(&c, 0, 3, 0).unwrap(),
            MDiagonal::Type1 {
                outer: 0,
                inner: 3,
                winding: 0
            }
        );
        assert!(matches!(
            make_type1(&c, 12, 0, 0),
            Err(GeometryError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn endpoint_formula() {
        let c = cfg(2, 2, 2);
        let d = MDiagonal::Type2 { start: 0, level: 1 };
        assert_eq!(endpoints(&c, &d), (Vertex::Outer(0), Vertex::Outer(3)));
        let d = MDiagonal::Type1 {
            outer: 0,
            inner: 0,
            winding: 0,
        };
        assert_eq!(endpoints(&c, &d), (Vertex::Outer(0), Vertex::Inner(0)));
    }

    #[test]
    fn loops_only_for_m_one() {
        let c = cfg(3, 2, 1);
        let d = make_type2(&c, 1, 2).unwrap();
        let (s, t) = endpoints(&c, &d);
        assert_eq!(s, t);
        for m in 2..5 {
            let c = cfg(3, 3, m);
            for d in all_diagonals(&c, 0..=0) {
                let (s, t) = endpoints(&c, &d);
                assert_ne!(s, t, "{d}");
            }
        }
    }

    #[test]
    fn literals_round_trip() {
        for text in ["T1(0,3;-2)", "T2(4,1)", "T3(0,2)"] {
            let d: MDiagonal = text.parse().unwrap();
            assert_eq!(d.to_string(), text);
        }
        assert!("T1(0,3,1)".parse::<MDiagonal>().is_ok());
        assert!("T4(0,1)".parse::<MDiagonal>().is_err());
        assert!("T2(-1,1)".parse::<MDiagonal>().is_err());
    }

    #[test]
    fn rotation_round_trip_and_identity() {
        let c = cfg(3, 2, 2);
        for d in all_diagonals(&c, -1..=1) {
            assert_eq!(rotate(&c, &d, 0), d);
            for s in -7..=7 {
                let r = rotate(&c, &d, s);
                r.check(&c).unwrap();
                assert_eq!(rotate(&c, &r, -s), d);
            }
        }
    }

    #[test]
    fn rotation_moves_the_lift_affinely() {
        // The top end moves by -s/(mp), the bottom end by +s/(mq), up to a
        // common integer translation.
        let c = cfg(3, 2, 2);
        let d = MDiagonal::Type1 {
            outer: 1,
            inner: 1,
            winding: 0,
        };
        let r = rotate(&c, &d, 3);
        let (ld, lr) = (lift(&c, &d, 0), lift(&c, &r, 0));
        let dt = lr.start.x - (ld.start.x - Rational::new(3, 6));
        let db = lr.end.x - (ld.end.x + Rational::new(3, 4));
        assert!(dt.is_integer());
        assert_eq!(dt, db);
    }

    #[test]
    fn boundary_arc_cases() {
        let c = cfg(2, 2, 2);
        let t2 = |s, k| MDiagonal::Type2 { start: s, level: k };
        let t3 = |s, k| MDiagonal::Type3 { start: s, level: k };
        assert!(crosses_unchecked(&c, &t2(0, 1), &t2(1, 1)));
        // Any two level-1 arcs of a 4-gon interleave, even when they share
        // an endpoint: O_0 lies inside O_{3,4} and O_2 inside O_{0,4}.
        assert!(crosses_unchecked(&c, &t2(0, 1), &t2(3, 1)));
        let hexagon = cfg(3, 2, 2);
        assert!(!crosses_unchecked(&hexagon, &t2(0, 1), &t2(3, 1)));
        assert!(!crosses_unchecked(&hexagon, &t2(0, 2), &t2(1, 1)));
        assert!(!crosses_unchecked(&c, &t2(0, 1), &t3(0, 1)));
        let inside = MDiagonal::Type1 {
            outer: 1,
            inner: 1,
            winding: 0,
        };
        let at_end = MDiagonal::Type1 {
            outer: 3,
            inner: 1,
            winding: 0,
        };
        assert!(crosses_unchecked(&c, &t2(0, 1), &inside));
        assert!(!crosses_unchecked(&c, &t2(0, 1), &at_end));
    }

    #[test]
    fn windings_two_apart_always_cross() {
        let c = cfg(3, 2, 1);
        let ds = all_diagonals(&c, 0..=0);
        for a in ds.iter().filter(|d| d.is_type1()) {
            for b in ds.iter().filter(|d| d.is_type1()) {
                if let MDiagonal::Type1 { outer, inner, .. } = *b {
                    let far = MDiagonal::Type1 {
                        outer,
                        inner,
                        winding: 2,
                    };
                    assert!(crosses_unchecked(&c, a, &far), "{a} vs {far}");
                }
            }
        }
    }
}
