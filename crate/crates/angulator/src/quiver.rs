//! Coloured quivers of angulations, their colour-0 bound quivers, the
//! gentleness test and an isomorphism test for bound quivers.
//!
//! Two diagonals bounding a common face are joined by a pair of arrows
//! `i → j` and `j → i` whose colours count the sides of that face lying
//! strictly between them; the two colours always add up to `m`. An arrow
//! `i → j` has colour 0 exactly when `i` directly follows `j`
//! counterclockwise around the face, so `j` is obtained from `i` by turning
//! clockwise about their common corner. Two colour-0 arrows `i → j → k`
//! inside the same face compose to zero.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::angulation::Angulation;

/// An arrow of a [`BoundQuiver`]; `src` and `dst` index
/// [`BoundQuiver::vertices`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub dst: usize,
}

/// A quiver with quadratic monomial relations.
///
/// A relation `(a, b)` between arrows with `t(a) = s(b)` states that the
/// path "`a` then `b`" is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundQuiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<(usize, usize)>,
}

/// Errors raised while building or parsing bound quivers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("duplicate {kind} {name:?}")]
    Duplicate { kind: &'static str, name: String },
    #[error("arrows {0:?} and {1:?} are not composable")]
    NotComposable(String, String),
    #[error("invalid quiver JSON: {0}")]
    Json(String),
}

#[derive(Serialize, Deserialize)]
struct ArrowFile {
    id: String,
    src: String,
    dst: String,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    arrows: Vec<ArrowFile>,
    #[serde(default)]
    relations: Vec<(String, String)>,
}

impl BoundQuiver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of the vertex called `name`.
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Index of the arrow called `id`.
    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Adds a vertex, or returns the index of an existing one.
    pub fn vertex(&mut self, name: &str) -> usize {
        match self.vertex_index(name) {
            Some(v) => v,
            None => {
                self.vertices.push(name.to_string());
                self.vertices.len() - 1
            }
        }
    }

    /// Adds the arrow `id: src → dst`, creating missing vertices.
    pub fn add_arrow(&mut self, id: &str, src: &str, dst: &str) -> Result<usize, QuiverError> {
        if self.arrow_index(id).is_some() {
            return Err(QuiverError::Duplicate {
                kind: "arrow",
                name: id.to_string(),
            });
        }
        let (src, dst) = (self.vertex(src), self.vertex(dst));
        self.arrows.push(Arrow {
            id: id.to_string(),
            src,
            dst,
        });
        Ok(self.arrows.len() - 1)
    }

    /// Declares that `first` followed by `second` is zero.
    pub fn add_relation(&mut self, first: &str, second: &str) -> Result<(), QuiverError> {
        let a = self
            .arrow_index(first)
            .ok_or_else(|| QuiverError::UnknownArrow(first.to_string()))?;
        let b = self
            .arrow_index(second)
            .ok_or_else(|| QuiverError::UnknownArrow(second.to_string()))?;
        self.push_relation(a, b)
    }

    fn push_relation(&mut self, a: usize, b: usize) -> Result<(), QuiverError> {
        if self.arrows[a].dst != self.arrows[b].src {
            return Err(QuiverError::NotComposable(
                self.arrows[a].id.clone(),
                self.arrows[b].id.clone(),
            ));
        }
        if self.relations.contains(&(a, b)) {
            return Err(QuiverError::Duplicate {
                kind: "relation",
                name: format!("{}·{}", self.arrows[a].id, self.arrows[b].id),
            });
        }
        self.relations.push((a, b));
        Ok(())
    }

    /// Builds a quiver from `(id, src, dst)` triples and relation pairs of
    /// arrow ids; vertices appear in order of first mention.
    ///
    /// ```
    /// use angulator::BoundQuiver;
    /// let q = BoundQuiver::from_parts(&[("x", "1", "2"), ("y", "2", "3")], &[("x", "y")]).unwrap();
    /// assert_eq!(q.vertices, ["1", "2", "3"]);
    /// assert_eq!(q.relations, [(0, 1)]);
    /// ```
    pub fn from_parts(
        arrows: &[(&str, &str, &str)],
        relations: &[(&str, &str)],
    ) -> Result<Self, QuiverError> {
        let mut q = BoundQuiver::new();
        for (id, s, t) in arrows {
            q.add_arrow(id, s, t)?;
        }
        for (a, b) in relations {
            q.add_relation(a, b)?;
        }
        Ok(q)
    }

    /// Serializes as
    /// `{"vertices": [...], "arrows": [{"id","src","dst"}], "relations": [[id, id]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let file = QuiverFile {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowFile {
                    id: a.id.clone(),
                    src: self.vertices[a.src].clone(),
                    dst: self.vertices[a.dst].clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|&(a, b)| (self.arrows[a].id.clone(), self.arrows[b].id.clone()))
                .collect(),
        };
        serde_json::to_value(file).expect("quivers always serialize")
    }

    /// Parses the format written by [`BoundQuiver::to_json`]. Arrow
    /// endpoints must be listed vertices.
    pub fn from_json(text: &str) -> Result<Self, QuiverError> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| QuiverError::Json(e.to_string()))?;
        let mut q = BoundQuiver::new();
        for v in &file.vertices {
            if q.vertex_index(v).is_some() {
                return Err(QuiverError::Duplicate {
                    kind: "vertex",
                    name: v.clone(),
                });
            }
            q.vertex(v);
        }
        for a in &file.arrows {
            for end in [&a.src, &a.dst] {
                if q.vertex_index(end).is_none() {
                    return Err(QuiverError::UnknownVertex(end.clone()));
                }
            }
            q.add_arrow(&a.id, &a.src, &a.dst)?;
        }
        for (a, b) in &file.relations {
            q.add_relation(a, b)?;
        }
        Ok(q)
    }

    /// Graphviz rendering. Relations are drawn as dotted chords from the
    /// start of the first arrow to the end of the second.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph Q {\n  rankdir=LR;\n  node [shape=circle];\n");
        for v in &self.vertices {
            out.push_str(&format!("  {};\n", dot_quote(v)));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "  {} -> {} [label={}];\n",
                dot_quote(&self.vertices[a.src]),
                dot_quote(&self.vertices[a.dst]),
                dot_quote(&a.id)
            ));
        }
        for &(a, b) in &self.relations {
            out.push_str(&format!(
                "  {} -> {} [style=dotted, dir=none, constraint=false, label={}];\n",
                dot_quote(&self.vertices[self.arrows[a].src]),
                dot_quote(&self.vertices[self.arrows[b].dst]),
                dot_quote(&format!("{}·{}", self.arrows[a].id, self.arrows[b].id))
            ));
        }
        out.push_str("}\n");
        out
    }

    /// The same quiver with vertex `v` renamed to position `perm[v]`.
    /// Arrow ids and relations are carried along.
    pub fn permuted(&self, perm: &[usize]) -> BoundQuiver {
        let mut vertices = vec![String::new(); self.vertices.len()];
        for (v, name) in self.vertices.iter().enumerate() {
            vertices[perm[v]] = name.clone();
        }
        BoundQuiver {
            vertices,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    src: perm[a.src],
                    dst: perm[a.dst],
                })
                .collect(),
            relations: self.relations.clone(),
        }
    }

    /// The connected components of the underlying graph as separate bound
    /// quivers, ordered by their smallest vertex. Names, ids and relations
    /// are kept.
    ///
    /// ```
    /// use angulator::BoundQuiver;
    /// let q = BoundQuiver::from_parts(&[("x", "0", "1"), ("y", "2", "3")], &[]).unwrap();
    /// let parts = q.components();
    /// assert_eq!(parts.len(), 2);
    /// assert_eq!(parts[1].vertices, ["2", "3"]);
    /// ```
    pub fn components(&self) -> Vec<BoundQuiver> {
        let n = self.vertices.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for a in &self.arrows {
                    for (x, y) in [(a.src, a.dst), (a.dst, a.src)] {
                        if x == v && label[y] == usize::MAX {
                            label[y] = count;
                            stack.push(y);
                        }
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let mut part = BoundQuiver::new();
                let mut arrow_map = vec![usize::MAX; self.arrows.len()];
                for v in (0..n).filter(|&v| label[v] == c) {
                    part.vertex(&self.vertices[v]);
                }
                for (i, a) in self
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| label[a.src] == c)
                {
                    arrow_map[i] = part.arrows.len();
                    part.arrows.push(Arrow {
                        id: a.id.clone(),
                        src: part
                            .vertex_index(&self.vertices[a.src])
                            .expect("vertex of this part"),
                        dst: part
                            .vertex_index(&self.vertices[a.dst])
                            .expect("vertex of this part"),
                    });
                }
                part.relations = self
                    .relations
                    .iter()
                    .filter(|&&(a, _)| label[self.arrows[a].src] == c)
                    .map(|&(a, b)| (arrow_map[a], arrow_map[b]))
                    .collect();
                part
            })
            .collect()
    }

    /// Arrows leaving `v`.
    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].src == v)
    }

    /// Arrows entering `v`.
    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].dst == v)
    }

    /// Is "`a` then `b`" a relation?
    pub fn is_relation(&self, a: usize, b: usize) -> bool {
        self.relations.contains(&(a, b))
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl fmt::Display for BoundQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.arrows {
            writeln!(
                f,
                "{}: {} -> {}",
                a.id, self.vertices[a.src], self.vertices[a.dst]
            )?;
        }
        for &(a, b) in &self.relations {
            writeln!(f, "{} . {} = 0", self.arrows[a].id, self.arrows[b].id)?;
        }
        Ok(())
    }
}

/// An arrow of the coloured quiver: `src → dst` with its colour, drawn
/// inside face `face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColouredArrow {
    pub src: usize,
    pub dst: usize,
    pub colour: usize,
    pub face: usize,
}

/// The coloured quiver of an angulation; vertices are diagonal indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouredQuiver {
    pub vertex_count: usize,
    pub m: usize,
    pub arrows: Vec<ColouredArrow>,
}

/// One arrow per face and ordered pair of distinct diagonals on it.
///
/// ```
/// use angulator::{coloured_quiver, delta_p, AnnulusConfig};
/// let a = delta_p(&AnnulusConfig::new(2, 2, 1).unwrap());
/// let q = coloured_quiver(&a);
/// assert!(q.arrows.iter().all(|x| x.colour <= 1));
/// ```
pub fn coloured_quiver(angulation: &Angulation) -> ColouredQuiver {
    let m = angulation.config().m();
    let size = m + 2;
    let mut arrows = Vec::new();
    for (f, face) in angulation.faces().iter().enumerate() {
        let placed: Vec<(usize, usize)> = face
            .diagonals()
            .map(|d| (d, face.position(d).expect("diagonal of this face")))
            .collect();
        for &(i, pi) in &placed {
            for &(j, pj) in &placed {
                if i != j {
                    arrows.push(ColouredArrow {
                        src: i,
                        dst: j,
                        colour: (pi + 2 * size - pj - 1) % size,
                        face: f,
                    });
                }
            }
        }
    }
    arrows.sort();
    ColouredQuiver {
        vertex_count: angulation.diagonals().len(),
        m,
        arrows,
    }
}

/// The colour-0 subquiver with the relations coming from consecutive
/// colour-0 arrows inside one face. Vertices are named by their diagonal
/// literals; arrow ids are `f<face>:d<source index>`.
///
/// ```
/// use angulator::{bound_quiver, delta_p, AnnulusConfig};
/// let q = bound_quiver(&delta_p(&AnnulusConfig::new(2, 2, 2).unwrap()));
/// assert_eq!((q.vertices.len(), q.arrows.len(), q.relations.len()), (4, 4, 0));
/// ```
pub fn bound_quiver(angulation: &Angulation) -> BoundQuiver {
    let coloured = coloured_quiver(angulation);
    let mut q = BoundQuiver {
        vertices: angulation
            .diagonals()
            .iter()
            .map(|d| d.to_string())
            .collect(),
        ..BoundQuiver::default()
    };
    let mut face_of = Vec::new();
    for a in coloured.arrows.iter().filter(|a| a.colour == 0) {
        q.arrows.push(Arrow {
            id: format!("f{}:d{}", a.face, a.src),
            src: a.src,
            dst: a.dst,
        });
        face_of.push(a.face);
    }
    for a in 0..q.arrows.len() {
        for b in 0..q.arrows.len() {
            if face_of[a] == face_of[b] && q.arrows[a].dst == q.arrows[b].src {
                q.relations.push((a, b));
            }
        }
    }
    q
}

/// The rule of the gentleness test a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GentleRule {
    /// At most two arrows start and at most two arrows end at each vertex.
    G1,
    /// Each arrow has at most one continuation and one precedent outside the
    /// relations.
    G2,
    /// Each arrow has at most one continuation and one precedent inside the
    /// relations.
    G3,
}

/// A failed gentleness rule, located at a vertex or an arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GentleViolation {
    pub rule: GentleRule,
    pub at: String,
    pub detail: String,
}

/// Result of [`is_gentle`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GentleReport {
    pub gentle: bool,
    pub violations: Vec<GentleViolation>,
}

/// Tests the three gentleness rules and lists every violation.
///
/// ```
/// use angulator::{is_gentle, BoundQuiver, GentleRule};
/// let star = BoundQuiver::from_parts(&[("x", "0", "1"), ("y", "0", "2"), ("z", "0", "3")], &[]).unwrap();
/// let report = is_gentle(&star);
/// assert!(!report.gentle);
/// assert_eq!(report.violations[0].rule, GentleRule::G1);
/// ```
pub fn is_gentle(q: &BoundQuiver) -> GentleReport {
    let mut violations = Vec::new();
    for (v, name) in q.vertices.iter().enumerate() {
        let (out, inc) = (q.outgoing(v).count(), q.incoming(v).count());
        if out > 2 || inc > 2 {
            violations.push(GentleViolation {
                rule: GentleRule::G1,
                at: name.clone(),
                detail: format!("{out} outgoing and {inc} incoming arrows"),
            });
        }
    }
    for (a, arrow) in q.arrows.iter().enumerate() {
        let after: Vec<usize> = q.outgoing(arrow.dst).collect();
        let before: Vec<usize> = q.incoming(arrow.src).collect();
        let free_after = after.iter().filter(|&&b| !q.is_relation(a, b)).count();
        let free_before = before.iter().filter(|&&b| !q.is_relation(b, a)).count();
        let zero_after = after.len() - free_after;
        let zero_before = before.len() - free_before;
        let mut report = |rule, count: usize, what: &str| {
            if count > 1 {
                violations.push(GentleViolation {
                    rule,
                    at: arrow.id.clone(),
                    detail: format!("{count} {what}"),
                });
            }
        };
        report(
            GentleRule::G2,
            free_after,
            "continuations outside the relations",
        );
        report(
            GentleRule::G2,
            free_before,
            "precedents outside the relations",
        );
        report(
            GentleRule::G3,
            zero_after,
            "continuations inside the relations",
        );
        report(
            GentleRule::G3,
            zero_before,
            "precedents inside the relations",
        );
    }
    GentleReport {
        gentle: violations.is_empty(),
        violations,
    }
}

/// Are the two bound quivers isomorphic, i.e. related by bijections of
/// vertices and arrows that respect endpoints and relations? Names and ids
/// are ignored.
///
/// ```
/// use angulator::{iso_check, BoundQuiver};
/// let a = BoundQuiver::from_parts(&[("x", "1", "2"), ("y", "2", "3")], &[("x", "y")]).unwrap();
/// let b = BoundQuiver::from_parts(&[("u", "b", "c"), ("v", "a", "b")], &[("v", "u")]).unwrap();
/// let c = BoundQuiver::from_parts(&[("u", "b", "c"), ("v", "a", "b")], &[]).unwrap();
/// assert!(iso_check(&a, &b));
/// assert!(!iso_check(&a, &c));
/// ```
pub fn iso_check(q1: &BoundQuiver, q2: &BoundQuiver) -> bool {
    find_isomorphism(q1, q2).is_some()
}

/// A vertex map `v ↦ map[v]` realizing [`iso_check`], if there is one.
pub fn find_isomorphism(q1: &BoundQuiver, q2: &BoundQuiver) -> Option<Vec<usize>> {
    let n = q1.vertices.len();
    if n != q2.vertices.len()
        || q1.arrows.len() != q2.arrows.len()
        || q1.relations.len() != q2.relations.len()
    {
        return None;
    }
    let (s1, s2) = (Shape::of(q1), Shape::of(q2));
    let mut sig1: Vec<_> = s1.signature.clone();
    let mut sig2: Vec<_> = s2.signature.clone();
    sig1.sort();
    sig2.sort();
    if sig1 != sig2 {
        return None;
    }
    // Place vertices in breadth-first order so each new vertex is usually
    // adjacent to one already placed.
    let order = bfs_order(&s1);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign_vertices(0, &order, &s1, &s2, q1, q2, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Adjacency data used by the isomorphism search.
struct Shape {
    count: Vec<Vec<usize>>,
    signature: Vec<(usize, usize, usize, usize, usize)>,
    neighbours: Vec<BTreeSet<usize>>,
}

impl Shape {
    fn of(q: &BoundQuiver) -> Shape {
        let n = q.vertices.len();
        let mut count = vec![vec![0; n]; n];
        let mut neighbours = vec![BTreeSet::new(); n];
        for a in &q.arrows {
            count[a.src][a.dst] += 1;
            neighbours[a.src].insert(a.dst);
            neighbours[a.dst].insert(a.src);
        }
        let mut rel_through = vec![0; n];
        for &(a, _) in &q.relations {
            rel_through[q.arrows[a].dst] += 1;
        }
        let signature = (0..n)
            .map(|v| {
                let out: usize = count[v].iter().sum();
                let inc: usize = (0..n).map(|u| count[u][v]).sum();
                (out, inc, count[v][v], rel_through[v], neighbours[v].len())
            })
            .collect();
        Shape {
            count,
            signature,
            neighbours,
        }
    }
}

fn bfs_order(s: &Shape) -> Vec<usize> {
    let n = s.count.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &s.neighbours[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn assign_vertices(
    k: usize,
    order: &[usize],
    s1: &Shape,
    s2: &Shape,
    q1: &BoundQuiver,
    q2: &BoundQuiver,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return arrows_match(q1, q2, map);
    }
    let u = order[k];
    for v in 0..s2.count.len() {
        if used[v] || s1.signature[u] != s2.signature[v] {
            continue;
        }
        let consistent = order[..k].iter().all(|&w| {
            s1.count[u][w] == s2.count[v][map[w]] && s1.count[w][u] == s2.count[map[w]][v]
        });
        if !consistent {
            continue;
        }
        map[u] = v;
        used[v] = true;
        if assign_vertices(k + 1, order, s1, s2, q1, q2, map, used) {
            return true;
        }
        used[v] = false;
        map[u] = usize::MAX;
    }
    false
}

/// Given a vertex bijection, looks for an arrow bijection inside each
/// bundle of parallel arrows that carries relations onto relations.
fn arrows_match(q1: &BoundQuiver, q2: &BoundQuiver, map: &[usize]) -> bool {
    let mut bundles: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (b, arrow) in q2.arrows.iter().enumerate() {
        bundles.entry((arrow.src, arrow.dst)).or_default().push(b);
    }
    let rel2: BTreeSet<(usize, usize)> = q2.relations.iter().copied().collect();
    let rel1: BTreeSet<(usize, usize)> = q1.relations.iter().copied().collect();
    let mut image = vec![usize::MAX; q1.arrows.len()];
    let mut taken = vec![false; q2.arrows.len()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        a: usize,
        q1: &BoundQuiver,
        map: &[usize],
        bundles: &HashMap<(usize, usize), Vec<usize>>,
        rel1: &BTreeSet<(usize, usize)>,
        rel2: &BTreeSet<(usize, usize)>,
        image: &mut Vec<usize>,
        taken: &mut Vec<bool>,
    ) -> bool {
        if a == q1.arrows.len() {
            return true;
        }
        let arrow = &q1.arrows[a];
        let Some(candidates) = bundles.get(&(map[arrow.src], map[arrow.dst])) else {
            return false;
        };
        for &b in candidates {
            if taken[b] {
                continue;
            }
            image[a] = b;
            let ok = (0..=a).all(|x| {
                (0..=a).all(|y| rel1.contains(&(x, y)) == rel2.contains(&(image[x], image[y])))
            });
            if ok {
                taken[b] = true;
                if go(a + 1, q1, map, bundles, rel1, rel2, image, taken) {
                    return true;
                }
                taken[b] = false;
            }
            image[a] = usize::MAX;
        }
        false
    }
    go(0, q1, map, &bundles, &rel1, &rel2, &mut image, &mut taken)
}

/// Counts colour-0 arrows per ordered pair of diagonals; handy for
/// inspecting double arrows.
pub fn arrow_multiplicities(q: &BoundQuiver) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for a in &q.arrows {
        *out.entry((a.src, a.dst)).or_insert(0) += 1;
    }
    out
}
