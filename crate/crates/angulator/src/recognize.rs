//! Recognition of bound quivers of m-cluster tilted algebras of type `Ã`.
//!
//! A connected bound quiver passes when it is gentle and satisfies five
//! conditions:
//!
//! * (a) up to m-saturated cycles it has at most one cycle, the *root*, and
//!   everything else hangs off the root as rays;
//! * (b) an oriented root carries at least one internal relation;
//! * (c) every other cycle is m-saturated;
//! * (d) outside m-saturated cycles there are at most `m - 1` consecutive
//!   relations;
//! * (e) if the root carries internal relations, `r_h ≡ r_a (mod m)`.
//!
//! Cycles are chordless cycles of the underlying graph. An *m-saturated*
//! cycle is an oriented cycle of `m + 2` arrows in which every two
//! consecutive arrows form a relation. Several chordless cycles can differ
//! from each other only by m-saturated cycles (two cycles glued along a
//! saturated one); they represent the same root, so condition (a) is decided
//! on the cycle space: the number of independent cycles left after
//! discarding the saturated ones must be at most one.
//!
//! Orientation: the chosen traversal of the root is called clockwise. An
//! internal relation (both arrows on the root) is clockwise when both arrows
//! point along the traversal, counterclockwise when both point against it;
//! it is strictly internal when neither arrow lies on a saturated cycle.
//! `α_h`, `α_a` count the strictly internal clockwise and counterclockwise
//! relations. A saturated cycle sharing `k >= 2` arrows with the root gets
//! `β_h = k - 1`, `β_a = m + 1 - k` when the shared arrows point clockwise
//! (swapped otherwise), and is classified as follows:
//!
//! 1. `α_a >= β_h` only: counterclockwise;
//! 2. `α_h >= β_a` only: clockwise;
//! 3. otherwise: counterclockwise when `β_h <= β_a`, else clockwise.
//!
//! Finally `r_h = α_h + Σ β_h` over clockwise cycles and
//! `r_a = α_a + Σ β_a` over counterclockwise ones. Because
//! `β_h + β_a = m`, the residue of `r_h - r_a` modulo `m` does not depend on
//! the classification, nor on the direction of traversal.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::quiver::{is_gentle, BoundQuiver, GentleReport};

/// Inputs outside the scope of the recognizer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("the quiver has no vertices")]
    Empty,
    #[error("the quiver is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("m must be at least 1")]
    InvalidM,
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("arrow {0:?} does not lie on the root cycle")]
    ArrowNotOnRoot(String),
}

/// How a saturated cycle sits relative to the root traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrientationClass {
    Clockwise,
    Counterclockwise,
    NotApplicable,
}

/// A cycle of the underlying graph.
///
/// `arrows[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`;
/// `forward[i]` says it points from the former to the latter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRecord {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
    pub forward: Vec<bool>,
    pub oriented: bool,
    pub saturated: bool,
    pub shared_root_vertices: usize,
    pub shared_root_arrows: usize,
    pub beta_h: Option<usize>,
    pub beta_a: Option<usize>,
    pub orientation_class: OrientationClass,
}

impl CycleRecord {
    fn new(q: &BoundQuiver, m: usize, vertices: Vec<usize>, arrows: Vec<usize>) -> Self {
        let n = vertices.len();
        let forward: Vec<bool> = (0..n)
            .map(|i| {
                q.arrows[arrows[i]].src == vertices[i]
                    && q.arrows[arrows[i]].dst == vertices[(i + 1) % n]
            })
            .collect();
        let oriented = forward.iter().all(|&f| f) || forward.iter().all(|&f| !f);
        let saturated = oriented
            && n == m + 2
            && (0..n).all(|i| {
                let (x, y) = (arrows[i], arrows[(i + 1) % n]);
                if forward[0] {
                    q.is_relation(x, y)
                } else {
                    q.is_relation(y, x)
                }
            });
        CycleRecord {
            vertices,
            arrows,
            forward,
            oriented,
            saturated,
            shared_root_vertices: 0,
            shared_root_arrows: 0,
            beta_h: None,
            beta_a: None,
            orientation_class: OrientationClass::NotApplicable,
        }
    }

    fn len(&self) -> usize {
        self.arrows.len()
    }

    fn arrow_vector(&self, arrow_count: usize) -> Vec<bool> {
        let mut v = vec![false; arrow_count];
        for &a in &self.arrows {
            v[a] ^= true;
        }
        v
    }

    fn to_json(&self, q: &BoundQuiver) -> serde_json::Value {
        json!({
            "vertices": self.vertices.iter().map(|&v| q.vertices[v].clone()).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|&a| q.arrows[a].id.clone()).collect::<Vec<_>>(),
            "oriented": self.oriented,
            "saturated": self.saturated,
            "shared_root_vertices": self.shared_root_vertices,
            "shared_root_arrows": self.shared_root_arrows,
            "beta_h": self.beta_h,
            "beta_a": self.beta_a,
            "orientation_class": self.orientation_class,
        })
    }
}

/// Outcome of one condition, with human-readable witnesses on failure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub passed: bool,
    pub witnesses: Vec<String>,
}

impl ConditionResult {
    fn pass() -> Self {
        ConditionResult {
            passed: true,
            witnesses: Vec::new(),
        }
    }

    fn check(passed: bool, witnesses: Vec<String>) -> Self {
        ConditionResult {
            passed,
            witnesses: if passed { Vec::new() } else { witnesses },
        }
    }
}

/// The five conditions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    pub a: ConditionResult,
    pub b: ConditionResult,
    pub c: ConditionResult,
    pub d: ConditionResult,
    pub e: ConditionResult,
}

/// Final verdict of [`recognize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// Gentle, all conditions hold, and there is a root cycle.
    Accepted,
    /// Gentle, all conditions hold, but no cycle survives besides saturated
    /// ones: the algebra is also of type `A`.
    AcceptedTypeAOnly,
    Rejected {
        reasons: Vec<String>,
    },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        !matches!(self, Verdict::Rejected { .. })
    }
}

/// Everything [`recognize`] found out about a bound quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionReport {
    pub m: usize,
    pub gentle: GentleReport,
    /// All chordless cycles of the underlying graph.
    pub cycles: Vec<CycleRecord>,
    /// The root, traversed clockwise by definition.
    pub root_cycle: Option<CycleRecord>,
    pub saturated_cycles: Vec<CycleRecord>,
    pub internal_relations: usize,
    pub alpha_h: usize,
    pub alpha_a: usize,
    pub r_h: usize,
    pub r_a: usize,
    pub conditions: Conditions,
    pub verdict: Verdict,
    quiver: BoundQuiver,
    reversed: bool,
}

impl RecognitionReport {
    /// The analysed quiver.
    pub fn quiver(&self) -> &BoundQuiver {
        &self.quiver
    }

    /// JSON with names instead of indices.
    pub fn to_json(&self) -> serde_json::Value {
        let q = &self.quiver;
        json!({
            "m": self.m,
            "gentle": self.gentle,
            "verdict": self.verdict,
            "conditions": self.conditions,
            "root_cycle": self.root_cycle.as_ref().map(|c| c.to_json(q)),
            "saturated_cycles": self.saturated_cycles.iter().map(|c| c.to_json(q)).collect::<Vec<_>>(),
            "cycles": self.cycles.iter().map(|c| c.to_json(q)).collect::<Vec<_>>(),
            "internal_relations": self.internal_relations,
            "alpha_h": self.alpha_h,
            "alpha_a": self.alpha_a,
            "r_h": self.r_h,
            "r_a": self.r_a,
        })
    }
}

/// Options for [`recognize_with`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecognizeOptions {
    /// Traverse the root so that this arrow points clockwise.
    pub clockwise_arrow: Option<String>,
}

/// Runs gentleness and conditions (a)–(e) on a connected bound quiver.
///
/// ```
/// use angulator::{recognize, BoundQuiver, Verdict};
/// // The hereditary square  0 → 1 → 2 ← 3 ← 0.
/// let q = BoundQuiver::from_parts(
///     &[("x", "0", "1"), ("y", "1", "2"), ("z", "3", "2"), ("w", "0", "3")],
///     &[],
/// )
/// .unwrap();
/// assert_eq!(recognize(&q, 2).unwrap().verdict, Verdict::Accepted);
/// ```
pub fn recognize(q: &BoundQuiver, m: usize) -> Result<RecognitionReport, RecognizeError> {
    recognize_with(q, m, &RecognizeOptions::default())
}

/// [`recognize`] with a pinned traversal direction.
pub fn recognize_with(
    q: &BoundQuiver,
    m: usize,
    options: &RecognizeOptions,
) -> Result<RecognitionReport, RecognizeError> {
    let analysis = Analysis::new(q, m)?;
    let pinned = match &options.clockwise_arrow {
        None => None,
        Some(id) => Some(
            q.arrow_index(id)
                .ok_or_else(|| RecognizeError::UnknownArrow(id.clone()))?,
        ),
    };
    let choice = analysis.choose_root(pinned)?;
    Ok(analysis.report(choice))
}

/// Recomputes the report with the root traversed the other way and checks
/// that the verdict and the outcome of condition (e) are unchanged.
pub fn orientation_sweep(report: &RecognitionReport) -> bool {
    let Ok(analysis) = Analysis::new(&report.quiver, report.m) else {
        return false;
    };
    let Some(root) = &report.root_cycle else {
        return true;
    };
    let arrows: BTreeSet<usize> = root.arrows.iter().copied().collect();
    let Some(index) = analysis.candidates.iter().position(|&c| {
        analysis.cycles[c]
            .arrows
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            == arrows
    }) else {
        return false;
    };
    let flipped = analysis.report(Some((index, !report.reversed)));
    flipped.verdict == report.verdict && flipped.conditions.e.passed == report.conditions.e.passed
}

/// Chordless cycles of the underlying graph of `q`, tagged oriented and
/// m-saturated, in a deterministic order.
///
/// ```
/// use angulator::{find_cycles, BoundQuiver};
/// let tree = BoundQuiver::from_parts(&[("x", "0", "1"), ("y", "1", "2")], &[]).unwrap();
/// assert!(find_cycles(&tree, 1).is_empty());
/// ```
pub fn find_cycles(q: &BoundQuiver, m: usize) -> Vec<CycleRecord> {
    let n = q.vertices.len();
    let mut between: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut out = Vec::new();
    for (a, arrow) in q.arrows.iter().enumerate() {
        if arrow.src == arrow.dst {
            out.push(CycleRecord::new(q, m, vec![arrow.src], vec![a]));
        } else {
            let key = (arrow.src.min(arrow.dst), arrow.src.max(arrow.dst));
            between.entry(key).or_default().push(a);
        }
    }
    for (&(u, v), arrows) in &between {
        for (i, &a) in arrows.iter().enumerate() {
            for &b in &arrows[i + 1..] {
                out.push(CycleRecord::new(q, m, vec![u, v], vec![a, b]));
            }
        }
    }
    // Longer cycles: only pairs joined by exactly one arrow can be cycle
    // edges; any other joined pair is a chord.
    let joined = |u: usize, v: usize| between.get(&(u.min(v), u.max(v))).map_or(0, Vec::len);
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && joined(u, v) > 0).collect())
        .collect();
    for s in 0..n {
        let mut path = vec![s];
        extend_chordless(
            s,
            &mut path,
            &neighbours,
            &joined,
            &mut |cycle: &[usize]| {
                let arrows = (0..cycle.len())
                    .map(|i| {
                        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                        between[&(u.min(v), u.max(v))][0]
                    })
                    .collect();
                out.push(CycleRecord::new(q, m, cycle.to_vec(), arrows));
            },
        );
    }
    out
}

fn extend_chordless(
    s: usize,
    path: &mut Vec<usize>,
    neighbours: &[Vec<usize>],
    joined: &dyn Fn(usize, usize) -> usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    let last = *path.last().expect("non-empty path");
    for &w in &neighbours[last] {
        if w <= s || path.contains(&w) || joined(last, w) != 1 {
            continue;
        }
        // No chords to the inner part of the path.
        if path.len() > 2 && path[1..path.len() - 1].iter().any(|&x| joined(x, w) > 0) {
            continue;
        }
        let to_start = joined(s, w);
        if path.len() >= 2 {
            if to_start == 1 {
                if path[1] < w {
                    path.push(w);
                    emit(path);
                    path.pop();
                }
                continue;
            }
            if to_start > 1 {
                continue;
            }
        }
        path.push(w);
        extend_chordless(s, path, neighbours, joined, emit);
        path.pop();
    }
}

/// Oriented cycles of `m + 2` arrows in which every two consecutive arrows
/// form a relation, found by following relations.
fn saturated_cycles(q: &BoundQuiver, m: usize) -> Vec<CycleRecord> {
    let mut next: Vec<Option<usize>> = vec![None; q.arrows.len()];
    for &(a, b) in &q.relations {
        next[a].get_or_insert(b);
    }
    let mut found: Vec<CycleRecord> = Vec::new();
    let mut claimed = vec![false; q.arrows.len()];
    for start in 0..q.arrows.len() {
        if claimed[start] {
            continue;
        }
        let mut arrows = vec![start];
        let mut a = start;
        while arrows.len() <= m + 2 {
            match next[a] {
                Some(b) if b == start => break,
                Some(b) if !arrows.contains(&b) => {
                    arrows.push(b);
                    a = b;
                }
                _ => {
                    arrows.clear();
                    break;
                }
            }
        }
        if arrows.len() != m + 2 || next[a] != Some(start) {
            continue;
        }
        let vertices: Vec<usize> = arrows.iter().map(|&x| q.arrows[x].src).collect();
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            continue;
        }
        for &x in &arrows {
            claimed[x] = true;
        }
        found.push(CycleRecord::new(q, m, vertices, arrows));
    }
    found
}

/// Reduces `v` against an echelon basis; returns `true` if it vanishes.
fn reduce(v: &mut [bool], basis: &[(usize, Vec<bool>)]) -> bool {
    for (pivot, b) in basis {
        if v[*pivot] {
            for (x, y) in v.iter_mut().zip(b) {
                *x ^= *y;
            }
        }
    }
    v.iter().all(|x| !x)
}

fn insert(mut v: Vec<bool>, basis: &mut Vec<(usize, Vec<bool>)>) -> bool {
    if reduce(&mut v, basis) {
        return false;
    }
    let pivot = v.iter().position(|&x| x).expect("non-zero");
    basis.push((pivot, v));
    true
}

/// Root-independent facts about the quiver.
struct Analysis {
    q: BoundQuiver,
    m: usize,
    gentle: GentleReport,
    cycles: Vec<CycleRecord>,
    saturated: Vec<CycleRecord>,
    on_saturated: Vec<bool>,
    /// Independent cycles left after removing saturated ones.
    excess: usize,
    /// Indices into `cycles` of the chordless cycles outside the span of the
    /// saturated ones, shortest first.
    candidates: Vec<usize>,
    d: ConditionResult,
}

/// The numbers attached to one choice of root and direction.
struct RootEval {
    root: CycleRecord,
    saturated: Vec<CycleRecord>,
    internal: usize,
    alpha_h: usize,
    alpha_a: usize,
    r_h: usize,
    r_a: usize,
    b: ConditionResult,
    e: ConditionResult,
}

impl Analysis {
    fn new(q: &BoundQuiver, m: usize) -> Result<Analysis, RecognizeError> {
        if m == 0 {
            return Err(RecognizeError::InvalidM);
        }
        let n = q.vertices.len();
        if n == 0 {
            return Err(RecognizeError::Empty);
        }
        let components = component_count(q);
        if components != 1 {
            return Err(RecognizeError::Disconnected { components });
        }
        let gentle = is_gentle(q);
        let cycles = find_cycles(q, m);
        let saturated = saturated_cycles(q, m);
        let arrow_count = q.arrows.len();
        let mut on_saturated = vec![false; arrow_count];
        let mut basis = Vec::new();
        for c in &saturated {
            for &a in &c.arrows {
                on_saturated[a] = true;
            }
            insert(c.arrow_vector(arrow_count), &mut basis);
        }
        let rank = basis.len();
        let cycle_rank = arrow_count + 1 - n;
        let excess = cycle_rank - rank;
        let mut candidates: Vec<usize> = (0..cycles.len())
            .filter(|&i| !reduce(&mut cycles[i].arrow_vector(arrow_count), &basis))
            .collect();
        candidates.sort_by_key(|&i| (cycles[i].len(), i));
        let d = consecutive_relations(q, m, &on_saturated, &saturated);
        Ok(Analysis {
            q: q.clone(),
            m,
            gentle,
            cycles,
            saturated,
            on_saturated,
            excess,
            candidates,
            d,
        })
    }

    /// Picks the root: with a pinned arrow, the first candidate containing
    /// it; otherwise the first candidate (shortest first) that passes (b)
    /// and (e), falling back to the first candidate.
    fn choose_root(&self, pinned: Option<usize>) -> Result<Option<(usize, bool)>, RecognizeError> {
        if self.candidates.is_empty() {
            return Ok(None);
        }
        if let Some(arrow) = pinned {
            for (k, &c) in self.candidates.iter().enumerate() {
                if let Some(i) = self.cycles[c].arrows.iter().position(|&a| a == arrow) {
                    return Ok(Some((k, !self.cycles[c].forward[i])));
                }
            }
            return Err(RecognizeError::ArrowNotOnRoot(
                self.q.arrows[arrow].id.clone(),
            ));
        }
        for k in 0..self.candidates.len() {
            let eval = self.evaluate(self.candidates[k], false);
            if eval.b.passed && eval.e.passed {
                return Ok(Some((k, false)));
            }
        }
        Ok(Some((0, false)))
    }

    fn evaluate(&self, cycle: usize, reversed: bool) -> RootEval {
        let q = &self.q;
        let m = self.m;
        let mut root = self.cycles[cycle].clone();
        let root_arrows: BTreeSet<usize> = root.arrows.iter().copied().collect();
        let root_vertices: BTreeSet<usize> = root.vertices.iter().copied().collect();
        let clockwise: BTreeMap<usize, bool> = root
            .arrows
            .iter()
            .zip(&root.forward)
            .map(|(&a, &f)| (a, f != reversed))
            .collect();
        let (mut internal, mut alpha_h, mut alpha_a) = (0, 0, 0);
        for &(a, b) in &q.relations {
            if !(root_arrows.contains(&a) && root_arrows.contains(&b)) {
                continue;
            }
            internal += 1;
            if self.on_saturated[a] || self.on_saturated[b] {
                continue;
            }
            match (clockwise[&a], clockwise[&b]) {
                (true, true) => alpha_h += 1,
                (false, false) => alpha_a += 1,
                _ => {}
            }
        }
        let mut saturated = self.saturated.clone();
        let (mut r_h, mut r_a) = (alpha_h, alpha_a);
        for c in &mut saturated {
            c.shared_root_vertices = c
                .vertices
                .iter()
                .filter(|v| root_vertices.contains(v))
                .count();
            let shared: Vec<usize> = c
                .arrows
                .iter()
                .copied()
                .filter(|a| root_arrows.contains(a))
                .collect();
            c.shared_root_arrows = shared.len();
            let k = shared.len();
            if k < 2 {
                continue;
            }
            let (bh, ba) = if clockwise[&shared[0]] {
                (k - 1, m + 1 - k)
            } else {
                (m + 1 - k, k - 1)
            };
            c.beta_h = Some(bh);
            c.beta_a = Some(ba);
            let cond1 = alpha_a >= bh;
            let cond2 = alpha_h >= ba;
            let counterclockwise = match (cond1, cond2) {
                (true, false) => true,
                (false, true) => false,
                _ => bh <= ba,
            };
            if counterclockwise {
                c.orientation_class = OrientationClass::Counterclockwise;
                r_a += ba;
            } else {
                c.orientation_class = OrientationClass::Clockwise;
                r_h += bh;
            }
        }
        root.shared_root_vertices = root.vertices.len();
        root.shared_root_arrows = root.arrows.len();
        if reversed {
            root.vertices.reverse();
            root.vertices.rotate_right(1);
            root.arrows.reverse();
            root.forward = root.forward.iter().rev().map(|f| !f).collect();
        }
        let names = |c: &CycleRecord| {
            c.arrows
                .iter()
                .map(|&a| q.arrows[a].id.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let b = ConditionResult::check(
            !root.oriented || internal > 0,
            vec![format!(
                "oriented root cycle without internal relations: {}",
                names(&root)
            )],
        );
        let e = ConditionResult::check(
            internal == 0 || (r_h + m * (r_a + 1) - r_a).is_multiple_of(m),
            vec![format!("r_h = {r_h} and r_a = {r_a} differ modulo {m}")],
        );
        RootEval {
            root,
            saturated,
            internal,
            alpha_h,
            alpha_a,
            r_h,
            r_a,
            b,
            e,
        }
    }

    fn report(&self, choice: Option<(usize, bool)>) -> RecognitionReport {
        let q = &self.q;
        let names = |c: &CycleRecord| {
            c.arrows
                .iter()
                .map(|&a| q.arrows[a].id.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let eval =
            choice.map(|(k, reversed)| (self.evaluate(self.candidates[k], reversed), k, reversed));
        // (a): one cycle class besides saturated ones, and rays meeting the
        // root twice do so through a saturated cycle.
        let mut a_witnesses = Vec::new();
        if self.excess > 1 {
            a_witnesses.push(format!(
                "{} independent non-saturated cycles, at most one allowed",
                self.excess
            ));
        }
        if let Some((ev, _, _)) = &eval {
            a_witnesses.extend(self.ray_violations(&ev.root, &ev.saturated));
        }
        let a = ConditionResult::check(a_witnesses.is_empty(), a_witnesses);
        // (c): every chordless cycle other than the root is saturated or
        // differs from the root by saturated cycles.
        let c = match &eval {
            Some((ev, _, _)) if self.excess > 1 => {
                let arrow_count = q.arrows.len();
                let mut basis = Vec::new();
                for s in &self.saturated {
                    insert(s.arrow_vector(arrow_count), &mut basis);
                }
                insert(ev.root.arrow_vector(arrow_count), &mut basis);
                let witnesses: Vec<String> = self
                    .cycles
                    .iter()
                    .filter(|cy| {
                        !cy.saturated && !reduce(&mut cy.arrow_vector(arrow_count), &basis)
                    })
                    .map(|cy| format!("non-saturated cycle besides the root: {}", names(cy)))
                    .collect();
                ConditionResult::check(witnesses.is_empty(), witnesses)
            }
            _ => ConditionResult::pass(),
        };
        let (b, e) = match &eval {
            Some((ev, _, _)) => (ev.b.clone(), ev.e.clone()),
            None => (ConditionResult::pass(), ConditionResult::pass()),
        };
        let conditions = Conditions {
            a,
            b,
            c,
            d: self.d.clone(),
            e,
        };
        let mut reasons = Vec::new();
        if !self.gentle.gentle {
            reasons.push("not gentle".to_string());
        }
        for (label, cond) in [
            ("a", &conditions.a),
            ("b", &conditions.b),
            ("c", &conditions.c),
            ("d", &conditions.d),
            ("e", &conditions.e),
        ] {
            if !cond.passed {
                reasons.push(format!("condition ({label}) fails"));
            }
        }
        let verdict = if !reasons.is_empty() {
            Verdict::Rejected { reasons }
        } else if eval.is_none() {
            Verdict::AcceptedTypeAOnly
        } else {
            Verdict::Accepted
        };
        let (root_cycle, saturated_cycles, internal, alpha_h, alpha_a, r_h, r_a, reversed) =
            match eval {
                Some((ev, _, reversed)) => (
                    Some(ev.root),
                    ev.saturated,
                    ev.internal,
                    ev.alpha_h,
                    ev.alpha_a,
                    ev.r_h,
                    ev.r_a,
                    reversed,
                ),
                None => (None, self.saturated.clone(), 0, 0, 0, 0, 0, false),
            };
        RecognitionReport {
            m: self.m,
            gentle: self.gentle.clone(),
            cycles: self.cycles.clone(),
            root_cycle,
            saturated_cycles,
            internal_relations: internal,
            alpha_h,
            alpha_a,
            r_h,
            r_a,
            conditions,
            verdict,
            quiver: self.q.clone(),
            reversed,
        }
    }

    /// Rays are the connected pieces left after deleting the root arrows.
    /// A ray touching the root in two or more vertices must do so through a
    /// saturated cycle sharing at least two vertices with the root.
    fn ray_violations(&self, root: &CycleRecord, saturated: &[CycleRecord]) -> Vec<String> {
        let q = &self.q;
        let n = q.vertices.len();
        let root_arrows: BTreeSet<usize> = root.arrows.iter().copied().collect();
        let on_root: BTreeSet<usize> = root.vertices.iter().copied().collect();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let ray_arrows: Vec<usize> = (0..q.arrows.len())
            .filter(|a| !root_arrows.contains(a))
            .collect();
        for &a in &ray_arrows {
            let (x, y) = (
                find(&mut parent, q.arrows[a].src),
                find(&mut parent, q.arrows[a].dst),
            );
            parent[x] = y;
        }
        let mut pieces: BTreeMap<usize, (BTreeSet<usize>, bool)> = BTreeMap::new();
        for &a in &ray_arrows {
            let r = find(&mut parent, q.arrows[a].src);
            pieces.entry(r).or_default();
        }
        for v in 0..n {
            let r = find(&mut parent, v);
            if let Some(piece) = pieces.get_mut(&r) {
                if on_root.contains(&v) {
                    piece.0.insert(v);
                }
            }
        }
        for c in saturated {
            if c.shared_root_vertices < 2 {
                continue;
            }
            if let Some(&a) = c.arrows.iter().find(|a| !root_arrows.contains(a)) {
                let r = find(&mut parent, q.arrows[a].src);
                if let Some(piece) = pieces.get_mut(&r) {
                    piece.1 = true;
                }
            }
        }
        pieces
            .values()
            .filter(|(touch, through_saturated)| touch.len() >= 2 && !through_saturated)
            .map(|(touch, _)| {
                format!(
                    "a ray meets the root at {} without a saturated cycle",
                    touch
                        .iter()
                        .map(|&v| q.vertices[v].as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect()
    }
}

fn component_count(q: &BoundQuiver) -> usize {
    let n = q.vertices.len();
    let mut adj = vec![Vec::new(); n];
    for a in &q.arrows {
        adj[a.src].push(a.dst);
        adj[a.dst].push(a.src);
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    components
}

/// Condition (d): chains of consecutive relations (`(a, b)`, `(b, c)`, …)
/// that do not run inside a saturated cycle contain at most `m - 1`
/// relations. A chain that closes up on itself is unbounded.
fn consecutive_relations(
    q: &BoundQuiver,
    m: usize,
    on_saturated: &[bool],
    saturated: &[CycleRecord],
) -> ConditionResult {
    let inside_saturated = |a: usize, b: usize| {
        saturated
            .iter()
            .any(|c| c.arrows.contains(&a) && c.arrows.contains(&b))
    };
    let rels: Vec<(usize, usize)> = q
        .relations
        .iter()
        .copied()
        .filter(|&(a, b)| !(on_saturated[a] && on_saturated[b] && inside_saturated(a, b)))
        .collect();
    let n = rels.len();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| rels[j].0 == rels[i].1).collect())
        .collect();
    // Longest chain starting at each relation, with cycle detection.
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        New,
        Active,
        Done(usize),
    }
    fn longest(i: usize, succ: &[Vec<usize>], state: &mut [State]) -> Option<usize> {
        match state[i] {
            State::Done(l) => return Some(l),
            State::Active => return None,
            State::New => {}
        }
        state[i] = State::Active;
        let mut best = 1;
        for &j in &succ[i] {
            best = best.max(1 + longest(j, succ, state)?);
        }
        state[i] = State::Done(best);
        Some(best)
    }
    let mut state = vec![State::New; n];
    let mut witnesses = Vec::new();
    let name = |a: usize| q.arrows[a].id.as_str();
    for i in 0..n {
        match longest(i, &succ, &mut state) {
            None => {
                witnesses.push(format!(
                    "relations close up into an unbounded chain through {}·{}",
                    name(rels[i].0),
                    name(rels[i].1)
                ));
                break;
            }
            Some(l) if l + 1 > m => {
                let has_pred = (0..n).any(|j| rels[j].1 == rels[i].0);
                if !has_pred {
                    witnesses.push(format!(
                        "{l} consecutive relations starting at {}·{}, at most {} allowed",
                        name(rels[i].0),
                        name(rels[i].1),
                        m - 1
                    ));
                }
            }
            _ => {}
        }
    }
    ConditionResult::check(witnesses.is_empty(), witnesses)
}
