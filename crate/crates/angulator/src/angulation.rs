//! (m+2)-angulations of `P(p,q,m)`: validation, face decomposition,
//! exhaustive enumeration and the canonical angulation `Δ_P`.
//!
//! Faces are traced on the map formed by the marked vertices, the boundary
//! edges and the diagonals. At each vertex the incident edges are put in
//! angular order using their lift directions in the cover strip; walking
//! "enter along an edge, leave along the next edge counterclockwise" then
//! visits every face of the annulus counterclockwise. Besides the interior
//! faces this walk finds the two faces outside the annulus (bounded by
//! boundary edges only), which are discarded.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    all_diagonals, crosses_unchecked, lift, span, AnnulusConfig, GeometryError, MDiagonal,
    Rational, Vertex,
};

/// Errors raised while validating or enumerating angulations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AngulationError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("diagonal {0} is listed twice")]
    Duplicate(MDiagonal),
    #[error("diagonals {0} and {1} cross")]
    CrossingPair(MDiagonal, MDiagonal),
    #[error("expected {expected} diagonals, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("expected {expected} interior faces, traced {found}")]
    FaceCount { expected: usize, found: usize },
    #[error("face {face} has {sides} sides instead of {expected}")]
    BadFace {
        face: usize,
        sides: usize,
        expected: usize,
    },
    #[error("enumeration limit of {cap} angulations exceeded")]
    LimitExceeded { cap: usize },
    #[error("invalid angulation JSON: {0}")]
    Json(String),
}

/// One side of a face: a diagonal (by index into
/// [`Angulation::diagonals`]) or a boundary edge. `OuterEdge(j)` joins `O_j`
/// and `O_{j+1}`; `InnerEdge(j)` joins `I_j` and `I_{j+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Diagonal(usize),
    OuterEdge(usize),
    InnerEdge(usize),
}

/// A face of an angulation, its sides listed counterclockwise. The list
/// starts at the smallest side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face {
    pub sides: Vec<Side>,
}

impl Face {
    /// Indices of the diagonals bounding this face, in counterclockwise
    /// order of their sides.
    pub fn diagonals(&self) -> impl Iterator<Item = usize> + '_ {
        self.sides.iter().filter_map(|s| match s {
            Side::Diagonal(d) => Some(*d),
            _ => None,
        })
    }

    /// Position of diagonal `d` in [`Face::sides`], if it bounds the face.
    pub fn position(&self, d: usize) -> Option<usize> {
        self.sides.iter().position(|s| *s == Side::Diagonal(d))
    }
}

/// A validated (m+2)-angulation with its faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Angulation {
    config: AnnulusConfig,
    diagonals: Vec<MDiagonal>,
    faces: Vec<Face>,
}

impl Angulation {
    pub fn config(&self) -> &AnnulusConfig {
        &self.config
    }

    /// The diagonals in canonical order; faces and quivers refer to them by
    /// index into this slice.
    pub fn diagonals(&self) -> &[MDiagonal] {
        &self.diagonals
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Index of `d` in [`Angulation::diagonals`].
    pub fn index_of(&self, d: &MDiagonal) -> Option<usize> {
        self.diagonals.binary_search(d).ok()
    }

    /// Serializes as `{"config": {p,q,m}, "diagonals": [literals]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(AngulationFile {
            config: self.config,
            diagonals: self.diagonals.clone(),
        })
        .expect("angulations always serialize")
    }

    /// Parses and validates the JSON produced by [`Angulation::to_json`].
    pub fn from_json(text: &str) -> Result<Angulation, AngulationError> {
        let file: AngulationFile =
            serde_json::from_str(text).map_err(|e| AngulationError::Json(e.to_string()))?;
        validate(&file.config, &file.diagonals)
    }
}

impl fmt::Display for Angulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.config)?;
        for (k, d) in self.diagonals.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// On-disk form of an angulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngulationFile {
    pub config: AnnulusConfig,
    pub diagonals: Vec<MDiagonal>,
}

/// Checks that `diagonals` is an (m+2)-angulation of `config` and computes
/// its faces.
///
/// ```
/// use angulator::{validate, AngulationError, AnnulusConfig};
/// let c = AnnulusConfig::new(2, 2, 1).unwrap();
/// assert_eq!(
///     validate(&c, &[]).unwrap_err(),
///     AngulationError::WrongCount { expected: 4, found: 0 }
/// );
/// ```
pub fn validate(
    config: &AnnulusConfig,
    diagonals: &[MDiagonal],
) -> Result<Angulation, AngulationError> {
    for d in diagonals {
        d.check(config)?;
    }
    let mut sorted = diagonals.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(AngulationError::Duplicate(w[0]));
    }
    let expected = config.diagonal_count();
    if sorted.len() != expected {
        return Err(AngulationError::WrongCount {
            expected,
            found: sorted.len(),
        });
    }
    for (k, a) in sorted.iter().enumerate() {
        for b in &sorted[k + 1..] {
            if crosses_unchecked(config, a, b) {
                return Err(AngulationError::CrossingPair(*a, *b));
            }
        }
    }
    let faces = trace_faces(config, &sorted);
    if faces.len() != expected {
        return Err(AngulationError::FaceCount {
            expected,
            found: faces.len(),
        });
    }
    let size = config.m() + 2;
    if let Some((face, f)) = faces
        .iter()
        .enumerate()
        .find(|(_, f)| f.sides.len() != size)
    {
        return Err(AngulationError::BadFace {
            face,
            sides: f.sides.len(),
            expected: size,
        });
    }
    Ok(Angulation {
        config: *config,
        diagonals: sorted,
        faces,
    })
}

/// The faces of a validated angulation (already computed by [`validate`]).
pub fn faces_of(angulation: &Angulation) -> &[Face] {
    &angulation.faces
}

/// Angular position of a half-edge around its origin: a group, then a
/// tie-break within the group. Smaller keys come first in clockwise order
/// as seen in the cover strip, which is counterclockwise on the annulus.
type AngleKey = (u8, Rational);

/// Traces the interior faces of the map formed by `diagonals` (sorted) and
/// the boundary edges.
fn trace_faces(config: &AnnulusConfig, diagonals: &[MDiagonal]) -> Vec<Face> {
    let n_out = config.outer_count();
    let n_in = config.inner_count();
    // Edges: diagonals, then outer edges, then inner edges. Half-edge 2e
    // starts at the edge's first endpoint, 2e + 1 at its second.
    let mut sides: Vec<Side> = (0..diagonals.len()).map(Side::Diagonal).collect();
    sides.extend((0..n_out).map(Side::OuterEdge));
    sides.extend((0..n_in).map(Side::InnerEdge));
    let vertex_id = |v: Vertex| match v {
        Vertex::Outer(j) => j,
        Vertex::Inner(j) => n_out + j,
    };
    let mut around: Vec<Vec<(AngleKey, usize)>> = vec![Vec::new(); n_out + n_in];
    let zero = Rational::from_integer(0);
    for (e, d) in diagonals.iter().enumerate() {
        let (first, second) = crate::geometry::endpoints(config, d);
        let (a, b) = match *d {
            MDiagonal::Type1 { .. } => {
                let l = lift(config, d, 0);
                let dx = l.end.x - l.start.x;
                // Outer end: the segment leaning furthest right (largest
                // bottom - top) comes first. Inner end: the segment leaning
                // furthest left (smallest top - bottom) comes first. Both
                // orders sort by top - bottom.
                ((2u8, -dx), (2u8, -dx))
            }
            MDiagonal::Type2 { level, .. } | MDiagonal::Type3 { level, .. } => {
                let w = Rational::from_integer(span(config, level) as i64);
                ((1u8, w), (3u8, -w))
            }
        };
        around[vertex_id(first)].push((a, 2 * e));
        around[vertex_id(second)].push((b, 2 * e + 1));
    }
    let base_out = diagonals.len();
    let base_in = base_out + n_out;
    for j in 0..n_out {
        let e = base_out + j;
        around[j].push(((0, zero), 2 * e));
        around[(j + 1) % n_out].push(((4, zero), 2 * e + 1));
    }
    for j in 0..n_in {
        let e = base_in + j;
        around[n_out + j].push(((0, zero), 2 * e));
        around[n_out + (j + 1) % n_in].push(((4, zero), 2 * e + 1));
    }
    for list in around.iter_mut() {
        list.sort();
    }
    let half_edges = 2 * sides.len();
    let mut place = vec![(0usize, 0usize); half_edges];
    for (v, list) in around.iter().enumerate() {
        for (k, &(_, h)) in list.iter().enumerate() {
            place[h] = (v, k);
        }
    }
    // Arrive along h, turn to the previous half-edge in strip-clockwise
    // order around the far end: the face stays on the right in the strip,
    // i.e. on the left on the annulus.
    let next = |h: usize| {
        let twin = h ^ 1;
        let (v, k) = place[twin];
        let list = &around[v];
        list[(k + list.len() - 1) % list.len()].1
    };
    let mut seen = vec![false; half_edges];
    let mut faces = Vec::new();
    for h0 in 0..half_edges {
        if seen[h0] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut h = h0;
        while !seen[h] {
            seen[h] = true;
            cycle.push(sides[h / 2]);
            h = next(h);
        }
        if cycle.iter().any(|s| matches!(s, Side::Diagonal(_))) {
            let start = (0..cycle.len()).min_by_key(|&k| cycle[k]).unwrap_or(0);
            cycle.rotate_left(start);
            faces.push(Face { sides: cycle });
        }
    }
    faces.sort();
    faces
}

/// Options for [`enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Largest type-1 winding considered; the smallest one is always 0.
    pub winding_bound: i64,
    /// Stop with [`AngulationError::LimitExceeded`] once more than this many
    /// angulations exist. A cap of 0 fails immediately.
    pub cap: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            winding_bound: 1,
            cap: None,
        }
    }
}

/// Lazily enumerates angulations by backtracking over candidate diagonals.
pub struct Enumerator {
    config: AnnulusConfig,
    candidates: Vec<MDiagonal>,
    compatible: Vec<Vec<bool>>,
    stack: Vec<usize>,
    next: usize,
    produced: usize,
    cap: Option<usize>,
    finished: bool,
}

impl Enumerator {
    fn next_subset(&mut self) -> Option<Vec<usize>> {
        let n = self.candidates.len();
        let target = self.config.diagonal_count();
        loop {
            if self.stack.len() == target {
                let found = self.stack.clone();
                let last = self.stack.pop().expect("non-empty");
                self.next = last + 1;
                return Some(found);
            }
            if self.next >= n || n - self.next < target - self.stack.len() {
                let last = self.stack.pop()?;
                self.next = last + 1;
                continue;
            }
            let c = self.next;
            if self.stack.iter().all(|&s| self.compatible[s][c]) {
                self.stack.push(c);
            }
            self.next = c + 1;
        }
    }
}

impl Iterator for Enumerator {
    type Item = Result<Angulation, AngulationError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        while let Some(subset) = self.next_subset() {
            let chosen: Vec<MDiagonal> = subset.iter().map(|&k| self.candidates[k]).collect();
            let normalized = chosen
                .iter()
                .any(|d| matches!(d, MDiagonal::Type1 { winding: 0, .. }));
            if !normalized {
                continue;
            }
            let Ok(angulation) = validate(&self.config, &chosen) else {
                continue;
            };
            if let Some(cap) = self.cap {
                if self.produced == cap {
                    self.finished = true;
                    return Some(Err(AngulationError::LimitExceeded { cap }));
                }
            }
            self.produced += 1;
            return Some(Ok(angulation));
        }
        self.finished = true;
        None
    }
}

/// Every angulation of `config` whose type-1 windings lie in
/// `0..=winding_bound` with at least one winding equal to 0, in a
/// deterministic order.
///
/// Any two non-crossing type-1 diagonals have windings at most one apart,
/// so the default bound of 1 already produces every angulation up to
/// twisting around the hole.
///
/// ```
/// use angulator::{enumerate, AnnulusConfig, EnumerateOptions};
/// let c = AnnulusConfig::new(2, 2, 1).unwrap();
/// let all: Vec<_> = enumerate(&c, EnumerateOptions::default())
///     .collect::<Result<_, _>>()
///     .unwrap();
/// assert!(!all.is_empty());
/// assert!(all.iter().all(|a| a.diagonals().len() == 4));
/// ```
pub fn enumerate(config: &AnnulusConfig, options: EnumerateOptions) -> Enumerator {
    let candidates = all_diagonals(config, 0..=options.winding_bound.max(0));
    let compatible = candidates
        .iter()
        .map(|a| {
            candidates
                .iter()
                .map(|b| a != b && !crosses_unchecked(config, a, b))
                .collect()
        })
        .collect();
    Enumerator {
        config: *config,
        candidates,
        compatible,
        stack: Vec::new(),
        next: 0,
        produced: 0,
        cap: options.cap,
        finished: false,
    }
}

/// Shifts all type-1 windings so that the smallest is 0.
pub fn normalize_windings(diagonals: &[MDiagonal]) -> Vec<MDiagonal> {
    let min = diagonals
        .iter()
        .filter_map(|d| match d {
            MDiagonal::Type1 { winding, .. } => Some(*winding),
            _ => None,
        })
        .min()
        .unwrap_or(0);
    diagonals
        .iter()
        .map(|d| match *d {
            MDiagonal::Type1 {
                outer,
                inner,
                winding,
            } => MDiagonal::Type1 {
                outer,
                inner,
                winding: winding - min,
            },
            other => other,
        })
        .collect()
}

/// The canonical angulation `Δ_P`, whose bound quiver is the hereditary
/// quiver `Ã_{p,q}`: `α_0 → α_1 → … → α_p` and
/// `α_0 = β_q → β_{q-1} → … → β_1 → α_p`.
///
/// The diagonals `α_j` (`0 <= j < p`) join `O_{mj}` to `I_0`. The remaining
/// `q` diagonals fan out from `O_0` on the other side of `α_0`, reaching
/// `I_0` (once around the hole) and `I_{m(q-k)}` for `0 < k < q`. Windings
/// are normalized so the smallest is 0.
///
/// ```
/// use angulator::{delta_p, AnnulusConfig, MDiagonal};
/// let c = AnnulusConfig::new(3, 2, 2).unwrap();
/// let d = delta_p(&c);
/// assert_eq!(d.diagonals().len(), 5);
/// assert!(d.diagonals().iter().all(MDiagonal::is_type1));
/// ```
pub fn delta_p(config: &AnnulusConfig) -> Angulation {
    let (p, q, m) = (config.p(), config.q(), config.m());
    let mut diagonals: Vec<MDiagonal> = (0..p)
        .map(|j| MDiagonal::Type1 {
            outer: m * j,
            inner: 0,
            winding: 0,
        })
        .collect();
    diagonals.push(MDiagonal::Type1 {
        outer: 0,
        inner: 0,
        winding: -1,
    });
    diagonals.extend((1..q).map(|k| MDiagonal::Type1 {
        outer: 0,
        inner: m * (q - k),
        winding: 0,
    }));
    validate(config, &normalize_windings(&diagonals)).expect("the canonical angulation is valid")
}

/// Triples of type-1 diagonals `(i, j, k)` on one face such that `i ∩ j` and
/// `j ∩ k` are two different single vertices while `i ∩ j ∩ k` is empty.
/// Returns `(face, [i, j, k])` for each occurrence; valid angulations have
/// none.
pub fn chained_type1_triples(angulation: &Angulation) -> Vec<(usize, [usize; 3])> {
    let config = angulation.config();
    let ends = |d: usize| -> BTreeSet<Vertex> {
        let (a, b) = crate::geometry::endpoints(config, &angulation.diagonals[d]);
        [a, b].into_iter().collect()
    };
    let mut found = Vec::new();
    for (f, face) in angulation.faces.iter().enumerate() {
        let t1: Vec<usize> = face
            .diagonals()
            .filter(|&d| angulation.diagonals[d].is_type1())
            .collect();
        for &i in &t1 {
            for &j in &t1 {
                for &k in &t1 {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let (ei, ej, ek) = (ends(i), ends(j), ends(k));
                    let ij: BTreeSet<_> = ei.intersection(&ej).copied().collect();
                    let jk: BTreeSet<_> = ej.intersection(&ek).copied().collect();
                    let all = ij.intersection(&ek).count();
                    if ij.len() == 1 && jk.len() == 1 && ij != jk && all == 0 {
                        found.push((f, [i, j, k]));
                    }
                }
            }
        }
    }
    found
}
