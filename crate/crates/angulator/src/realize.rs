//! From an accepted bound quiver back to an angulation.
//!
//! Every diagonal has two sides, and in the angulation each side sits in
//! exactly one face. At a vertex of the quiver the arrows already say how
//! those sides look: an incoming and an outgoing arrow forming a relation
//! belong to one side, every other arrow occupies a side of its own, and
//! sides left over carry no colour-0 arrow at all. Following arrows side by
//! side produces *runs*: maximal blocks of consecutive diagonal sides of a
//! face. A closed run is an `(m+2)`-gon made of diagonals only (an
//! `m`-saturated cycle); an open run of `ℓ` sides needs `ℓ` slots plus at
//! least one boundary edge after it.
//!
//! The endpoints of the diagonals are glued together by the runs alone, so
//! the marked points and, for each of them, the run arriving at it and the
//! run leaving it along the boundary are fixed by the quiver. What remains
//! is to decide which open runs share a face and in which cyclic order,
//! i.e. a permutation `φ` of the open runs, and how many boundary edges
//! separate consecutive runs. The glued surface is an annulus exactly when
//! there are `p + q` faces and the boundary closes up into two cycles; the
//! search below enumerates `φ` with both constraints pruned incrementally,
//! then splits the spare boundary edges so that both cycles have lengths
//! divisible by `m`.
//!
//! Coordinates come from cutting along one type-1 diagonal `d_0`, which is
//! placed as `T1(0,0;0)`: the cut surface is a disk, outer and inner labels
//! are read off along the two boundary cycles, and a marked point on the
//! cut is assigned to the copy of `d_0` on whose side it lies. Every
//! candidate is validated as an angulation and its bound quiver is compared
//! with the input, so a returned realization is always correct.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::angulation::{normalize_windings, validate, Angulation};
use crate::geometry::{make_type1, make_type2, make_type3, AnnulusConfig, MDiagonal};
use crate::quiver::{bound_quiver, iso_check, BoundQuiver};
use crate::recognize::{recognize, Verdict};

/// Errors of [`realize`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("m must be at least 1")]
    InvalidM,
    #[error("the quiver is not accepted: {}", reasons.join("; "))]
    NotAccepted { reasons: Vec<String> },
    #[error("unsupported shape: {reason} (vertices: {})", vertices.join(", "))]
    UnsupportedShape {
        reason: String,
        vertices: Vec<String>,
    },
}

/// Options for [`realize_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Only accept realizations in `P(p, q, m)` for this `(p, q)`.
    pub shape: Option<(usize, usize)>,
    /// Upper bound on search nodes before giving up with
    /// [`RealizeError::UnsupportedShape`].
    pub node_budget: usize,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            shape: None,
            node_budget: 2_000_000,
        }
    }
}

/// An angulation together with the diagonal chosen for every quiver vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub angulation: Angulation,
    pub placement: BTreeMap<String, MDiagonal>,
}

impl Realization {
    pub fn config(&self) -> &AnnulusConfig {
        self.angulation.config()
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.config())?;
        for (v, d) in &self.placement {
            writeln!(f, "  {v} ↦ {d}")?;
        }
        Ok(())
    }
}

/// Realizes an accepted bound quiver as the colour-0 quiver of an
/// `(m+2)`-angulation of some `P(p, q, m)`.
///
/// ```
/// use angulator::{bound_quiver, delta_p, iso_check, realize, AnnulusConfig};
/// let c = AnnulusConfig::new(3, 2, 2).unwrap();
/// let q = bound_quiver(&delta_p(&c));
/// let r = realize(&q, 2).unwrap();
/// assert!(iso_check(&bound_quiver(&r.angulation), &q));
/// assert_eq!(r.config().p() + r.config().q(), 5);
/// ```
pub fn realize(q: &BoundQuiver, m: usize) -> Result<Realization, RealizeError> {
    realize_with(q, m, &RealizeOptions::default())
}

/// [`realize`] with a fixed target shape or search budget.
pub fn realize_with(
    q: &BoundQuiver,
    m: usize,
    options: &RealizeOptions,
) -> Result<Realization, RealizeError> {
    if m == 0 {
        return Err(RealizeError::InvalidM);
    }
    let preferred = accepted_roots(q, m)?;
    let unsupported = |reason: String, vertices: Vec<usize>| RealizeError::UnsupportedShape {
        reason,
        vertices: vertices.iter().map(|&v| q.vertices[v].clone()).collect(),
    };
    let n = q.vertices.len();
    if n < 4 {
        return Err(unsupported(
            "an annulus needs at least four diagonals".into(),
            (0..n).collect(),
        ));
    }
    if let Some((p, qq)) = options.shape {
        if p < 2 || qq < 2 || p + qq != n {
            return Err(unsupported(
                format!("no angulation of P({p},{qq},{m}) has {n} diagonals"),
                Vec::new(),
            ));
        }
    }
    let layout = Layout::new(q, m).map_err(|(reason, vs)| unsupported(reason, vs))?;
    let mut order = preferred;
    for v in 0..n {
        if !order.contains(&v) {
            order.push(v);
        }
    }
    let mut search = Search::new(&layout, q, m, options, order);
    search.run();
    match search.found.take() {
        Some(r) => Ok(r),
        None if search.exhausted => Err(unsupported(
            format!("search budget of {} nodes exhausted", options.node_budget),
            (0..n).collect(),
        )),
        None => Err(unsupported(
            match options.shape {
                Some((p, qq)) => format!("no gluing of faces yields P({p},{qq},{m})"),
                None => "no gluing of faces yields an annulus".into(),
            },
            (0..n).collect(),
        )),
    }
}

/// Checks every connected component and returns the root-cycle vertices
/// (as indices of `q`) in traversal order.
fn accepted_roots(q: &BoundQuiver, m: usize) -> Result<Vec<usize>, RealizeError> {
    let mut roots = Vec::new();
    for part in q.components() {
        let report = recognize(&part, m).map_err(|e| RealizeError::NotAccepted {
            reasons: vec![e.to_string()],
        })?;
        if let Verdict::Rejected { reasons } = report.verdict {
            return Err(RealizeError::NotAccepted { reasons });
        }
        if let Some(root) = &report.root_cycle {
            roots.extend(
                root.vertices
                    .iter()
                    .filter_map(|&v| q.vertex_index(&part.vertices[v])),
            );
        }
    }
    Ok(roots)
}

/// A side of a diagonal: side `2v` runs from endpoint slot `2v` to slot
/// `2v + 1`, side `2v + 1` runs back, so side `s` starts at slot `s` and
/// ends at slot `s ^ 1`.
#[derive(Clone, Copy, Debug, Default)]
struct SideArrows {
    incoming: Option<usize>,
    outgoing: Option<usize>,
}

/// Everything the quiver fixes before the search: runs, marked points and
/// how runs meet the boundary.
struct Layout {
    /// Open runs, each listing its sides in counterclockwise order.
    runs: Vec<Vec<usize>>,
    /// Closed runs (faces made of diagonals only).
    closed: Vec<Vec<usize>>,
    /// For every side, the run containing it and its position there.
    run_of_side: Vec<(usize, usize)>,
    /// For every side, the next side of its run, if any.
    next_side: Vec<Option<usize>>,
    /// Marked point of every endpoint slot.
    point_of_slot: Vec<usize>,
    /// The open run whose first side starts at each point.
    arriving: Vec<usize>,
    /// The open run whose last side ends at each point.
    leaving: Vec<usize>,
    /// `rho[r]`: the run leaving the point where run `r` arrives.
    rho: Vec<usize>,
}

type LayoutError = (String, Vec<usize>);

impl Layout {
    fn new(q: &BoundQuiver, m: usize) -> Result<Self, LayoutError> {
        let n = q.vertices.len();
        let mut sides = vec![SideArrows::default(); 2 * n];
        for v in 0..n {
            let ins: Vec<usize> = q.incoming(v).collect();
            let mut outs: Vec<usize> = q.outgoing(v).collect();
            let mut found = Vec::new();
            for a in ins {
                match outs.iter().position(|&b| q.is_relation(a, b)) {
                    Some(k) => found.push(SideArrows {
                        incoming: Some(a),
                        outgoing: Some(outs.remove(k)),
                    }),
                    None => found.push(SideArrows {
                        incoming: Some(a),
                        outgoing: None,
                    }),
                }
            }
            found.extend(outs.into_iter().map(|b| SideArrows {
                incoming: None,
                outgoing: Some(b),
            }));
            if found.len() > 2 {
                return Err((format!("vertex needs {} sides", found.len()), vec![v]));
            }
            for (k, s) in found.into_iter().enumerate() {
                sides[2 * v + k] = s;
            }
        }
        let side_with = |arrow: usize, out: bool| {
            (0..2 * n)
                .find(|&s| {
                    if out {
                        sides[s].outgoing == Some(arrow)
                    } else {
                        sides[s].incoming == Some(arrow)
                    }
                })
                .expect("every arrow leaves and enters some side")
        };
        // Arrow `i → j` means `j` directly precedes `i` counterclockwise.
        let next_side: Vec<Option<usize>> = sides
            .iter()
            .map(|s| s.incoming.map(|a| side_with(a, true)))
            .collect();

        let mut run_of_side = vec![(usize::MAX, 0); 2 * n];
        let mut runs = Vec::new();
        for start in (0..2 * n).filter(|&s| sides[s].outgoing.is_none()) {
            let mut run = vec![start];
            while let Some(s) = next_side[*run.last().expect("nonempty")] {
                run.push(s);
            }
            if run.len() > m + 1 {
                return Err((
                    format!(
                        "relation path with {} vertices does not fit into an (m+2)-gon",
                        run.len()
                    ),
                    run.iter().map(|s| s / 2).collect(),
                ));
            }
            for (k, &s) in run.iter().enumerate() {
                run_of_side[s] = (runs.len(), k);
            }
            runs.push(run);
        }
        let mut closed = Vec::new();
        for start in 0..2 * n {
            if run_of_side[start].0 != usize::MAX {
                continue;
            }
            let mut cycle = vec![start];
            let mut s = next_side[start].expect("sides outside open runs continue");
            while s != start {
                cycle.push(s);
                s = next_side[s].expect("sides outside open runs continue");
            }
            if cycle.len() != m + 2 {
                return Err((
                    format!("oriented cycle of {} relations is not a face", cycle.len()),
                    cycle.iter().map(|s| s / 2).collect(),
                ));
            }
            for (k, &s) in cycle.iter().enumerate() {
                run_of_side[s] = (usize::MAX - 1 - closed.len(), k);
            }
            closed.push(cycle);
        }

        // Glue endpoints along consecutive sides: the end of `s` is the
        // start of the side that follows it.
        let mut uf: Vec<usize> = (0..2 * n).collect();
        fn find(uf: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            let mut y = x;
            while uf[y] != r {
                let up = uf[y];
                uf[y] = r;
                y = up;
            }
            r
        }
        for (s, next) in next_side.iter().enumerate() {
            if let &Some(t) = next {
                let (a, b) = (find(&mut uf, s ^ 1), find(&mut uf, t));
                uf[a] = b;
            }
        }
        let mut point_id = BTreeMap::new();
        let mut point_of_slot = vec![0; 2 * n];
        for (slot, point) in point_of_slot.iter_mut().enumerate() {
            let root = find(&mut uf, slot);
            let next = point_id.len();
            *point = *point_id.entry(root).or_insert(next);
        }
        let points = point_id.len();
        let mut arriving = vec![Vec::new(); points];
        let mut leaving = vec![Vec::new(); points];
        for (r, run) in runs.iter().enumerate() {
            arriving[point_of_slot[run[0]]].push(r);
            leaving[point_of_slot[run[run.len() - 1] ^ 1]].push(r);
        }
        for p in 0..points {
            if arriving[p].len() != 1 || leaving[p].len() != 1 {
                let vertices = (0..2 * n)
                    .filter(|&s| point_of_slot[s] == p)
                    .map(|s| s / 2)
                    .collect();
                let reason = if arriving[p].is_empty() {
                    "diagonals close up around an interior point".to_string()
                } else {
                    "several boundary segments meet at one point".to_string()
                };
                return Err((reason, vertices));
            }
        }
        let arriving: Vec<usize> = arriving.into_iter().map(|v| v[0]).collect();
        let leaving: Vec<usize> = leaving.into_iter().map(|v| v[0]).collect();
        let rho = runs
            .iter()
            .map(|run| leaving[point_of_slot[run[0]]])
            .collect();
        Ok(Layout {
            runs,
            closed,
            run_of_side,
            next_side,
            point_of_slot,
            arriving,
            leaving,
            rho,
        })
    }

    fn size(&self, r: usize) -> usize {
        self.runs[r].len() + 1
    }

    /// Whether `s` is the last side of an open run.
    fn ends_run(&self, s: usize) -> bool {
        self.next_side[s].is_none()
    }
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    layout: &'a Layout,
    quiver: &'a BoundQuiver,
    m: usize,
    n: usize,
    shape: Option<(usize, usize)>,
    budget: usize,
    order: Vec<usize>,
    target_faces: usize,
    phi: Vec<usize>,
    used: Vec<bool>,
    unused: usize,
    psi_next: Vec<usize>,
    psi_edges: usize,
    closed_cycles: usize,
    faces: Vec<Vec<usize>>,
    nodes: usize,
    exhausted: bool,
    found: Option<Realization>,
}

impl<'a> Search<'a> {
    fn new(
        layout: &'a Layout,
        quiver: &'a BoundQuiver,
        m: usize,
        options: &RealizeOptions,
        order: Vec<usize>,
    ) -> Self {
        let runs = layout.runs.len();
        let n = quiver.vertices.len();
        Search {
            layout,
            quiver,
            m,
            n,
            shape: options.shape,
            budget: options.node_budget,
            order,
            target_faces: n.saturating_sub(layout.closed.len()),
            phi: vec![UNSET; runs],
            used: vec![false; runs],
            unused: runs,
            psi_next: vec![UNSET; runs],
            psi_edges: 0,
            closed_cycles: 0,
            faces: Vec::new(),
            nodes: 0,
            exhausted: false,
            found: None,
        }
    }

    fn done(&self) -> bool {
        self.found.is_some() || self.exhausted
    }

    fn run(&mut self) {
        if self.target_faces == 0 || self.layout.runs.len() < self.target_faces {
            return;
        }
        self.open_face();
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    /// Sets `φ(a) = b`, recording the boundary step `a → ρ(b)`. Returns
    /// whether this closed a boundary cycle.
    fn link(&mut self, a: usize, b: usize) -> bool {
        self.phi[a] = b;
        let target = self.layout.rho[b];
        self.psi_next[a] = target;
        self.psi_edges += 1;
        let mut x = target;
        while x != UNSET && x != a {
            x = self.psi_next[x];
        }
        let closes = x == a;
        if closes {
            self.closed_cycles += 1;
        }
        closes
    }

    fn unlink(&mut self, a: usize, closed: bool) {
        self.phi[a] = UNSET;
        self.psi_next[a] = UNSET;
        self.psi_edges -= 1;
        if closed {
            self.closed_cycles -= 1;
        }
    }

    fn boundary_ok(&self) -> bool {
        self.closed_cycles < 2
            || (self.closed_cycles == 2 && self.psi_edges == self.layout.runs.len())
    }

    fn open_face(&mut self) {
        if self.done() || !self.tick() {
            return;
        }
        let Some(head) = (0..self.used.len()).find(|&r| !self.used[r]) else {
            if self.faces.len() == self.target_faces && self.closed_cycles == 2 {
                self.found = self.complete();
            }
            return;
        };
        if self.faces.len() + 1 > self.target_faces {
            return;
        }
        self.used[head] = true;
        self.unused -= 1;
        let size = self.layout.size(head);
        self.extend_face(vec![head], size);
        self.used[head] = false;
        self.unused += 1;
    }

    fn extend_face(&mut self, face: Vec<usize>, size: usize) {
        if self.done() || !self.tick() {
            return;
        }
        let head = face[0];
        let tail = *face.last().expect("faces are nonempty");
        // Close the face here.
        let closed_after = self.faces.len() + 1;
        if closed_after + usize::from(self.unused > 0) <= self.target_faces
            && closed_after + self.unused >= self.target_faces
        {
            let closes = self.link(tail, head);
            if self.boundary_ok() {
                self.faces.push(face.clone());
                self.open_face();
                self.faces.pop();
            }
            self.unlink(tail, closes);
        }
        // Or continue it with another run.
        if self.faces.len() + self.unused < self.target_faces {
            return;
        }
        for r in 0..self.used.len() {
            if self.done() {
                return;
            }
            if self.used[r] || size + self.layout.size(r) > self.m + 2 {
                continue;
            }
            let closes = self.link(tail, r);
            if self.boundary_ok() {
                self.used[r] = true;
                self.unused -= 1;
                let mut longer = face.clone();
                longer.push(r);
                self.extend_face(longer, size + self.layout.size(r));
                self.used[r] = false;
                self.unused += 1;
            }
            self.unlink(tail, closes);
        }
    }

    /// Called with a complete face structure: checks connectivity, splits
    /// spare boundary edges and tries the resulting coordinates.
    fn complete(&mut self) -> Option<Realization> {
        let layout = self.layout;
        let runs = layout.runs.len();
        // Faces: open faces first, then closed runs.
        let face_count = self.faces.len() + layout.closed.len();
        let mut face_of_run = vec![0; runs];
        for (f, face) in self.faces.iter().enumerate() {
            for &r in face {
                face_of_run[r] = f;
            }
        }
        let face_of_side = |s: usize| {
            let (r, _) = layout.run_of_side[s];
            if r < runs {
                face_of_run[r]
            } else {
                self.faces.len() + (usize::MAX - 1 - r)
            }
        };
        let mut uf: Vec<usize> = (0..face_count).collect();
        fn find(uf: &[usize], mut x: usize) -> usize {
            while uf[x] != x {
                x = uf[x];
            }
            x
        }
        for v in 0..self.n {
            let (a, b) = (
                find(&uf, face_of_side(2 * v)),
                find(&uf, face_of_side(2 * v + 1)),
            );
            uf[a] = b;
        }
        let root = find(&uf, 0);
        if (0..face_count).any(|f| find(&uf, f) != root) {
            return None;
        }

        // Boundary cycles of ψ.
        let mut cycle_of_run = vec![UNSET; runs];
        let mut cycles = 0;
        for r in 0..runs {
            if cycle_of_run[r] != UNSET {
                continue;
            }
            let mut x = r;
            while cycle_of_run[x] == UNSET {
                cycle_of_run[x] = cycles;
                x = self.psi_next[x];
            }
            cycles += 1;
        }
        debug_assert_eq!(cycles, 2);

        // Every gap has one edge; spare edges of a face go to the first gap
        // on each cycle, split between the cycles where a face touches both.
        let m = self.m;
        let mut base = [0usize; 2];
        let mut mixed = Vec::new();
        for (f, face) in self.faces.iter().enumerate() {
            let spare = m + 2 - face.iter().map(|&r| layout.size(r)).sum::<usize>();
            let mut on = [false; 2];
            for &r in face {
                base[cycle_of_run[r]] += 1;
                on[cycle_of_run[r]] = true;
            }
            if on[0] && on[1] {
                mixed.push((f, spare));
            } else {
                base[usize::from(on[1])] += spare;
            }
        }
        let total = m * self.n;
        let flexible: usize = mixed.iter().map(|&(_, s)| s).sum();
        let mut lengths: Vec<usize> = (base[0]..=base[0] + flexible)
            .filter(|&l0| l0 % m == 0 && l0 >= 2 * m && total - l0 >= 2 * m)
            .collect();
        // Prefer balanced boundaries.
        lengths.sort_by_key(|&l0| (l0.abs_diff(total - l0), l0));
        for l0 in lengths {
            let lens = [l0, total - l0];
            let assignments: Vec<(usize, usize)> = match self.shape {
                None if lens[0] >= lens[1] => vec![(0, 1)],
                None => vec![(1, 0)],
                Some((p, q)) => [(0, 1), (1, 0)]
                    .into_iter()
                    .filter(|&(o, i)| lens[o] == m * p && lens[i] == m * q)
                    .collect(),
            };
            for (outer, inner) in assignments {
                let mut extra = vec![[0usize; 2]; self.faces.len()];
                for (f, face) in self.faces.iter().enumerate() {
                    if !mixed.iter().any(|&(g, _)| g == f) {
                        let c = cycle_of_run[face[0]];
                        extra[f][c] = m + 2 - face.iter().map(|&r| layout.size(r)).sum::<usize>();
                    }
                }
                let mut want0 = l0 - base[0];
                for &(f, spare) in &mixed {
                    let to0 = want0.min(spare);
                    extra[f] = [to0, spare - to0];
                    want0 -= to0;
                }
                let gaps = self.gap_lengths(&extra, &cycle_of_run);
                if let Some(r) = self.coordinates(&gaps, &cycle_of_run, outer, inner, lens) {
                    return Some(r);
                }
            }
        }
        None
    }

    /// Length of the gap following each open run.
    fn gap_lengths(&self, extra: &[[usize; 2]], cycle_of_run: &[usize]) -> Vec<usize> {
        let mut gaps = vec![1; self.layout.runs.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for (c, &spare) in extra[f].iter().enumerate() {
                if let Some(&r) = face.iter().find(|&&r| cycle_of_run[r] == c) {
                    gaps[r] += spare;
                }
            }
        }
        gaps
    }

    /// Whether walking around the endpoint where side `s` starts, towards
    /// the boundary edge leaving that point, passes a side of `d0`.
    fn passes(&self, s: usize, d0: usize) -> bool {
        let mut side = s;
        loop {
            let twin = side ^ 1;
            if self.layout.ends_run(twin) {
                return false;
            }
            side = self.layout.next_side[twin].expect("checked above");
            if side / 2 == d0 {
                return true;
            }
        }
    }

    fn coordinates(
        &self,
        gaps: &[usize],
        cycle_of_run: &[usize],
        outer: usize,
        inner: usize,
        lens: [usize; 2],
    ) -> Option<Realization> {
        let layout = self.layout;
        let m = self.m;
        let slot_cycle = |slot: usize| cycle_of_run[layout.leaving[layout.point_of_slot[slot]]];
        let d0 = *self
            .order
            .iter()
            .find(|&&v| slot_cycle(2 * v) != slot_cycle(2 * v + 1))?;
        let d0_outer_slot = if slot_cycle(2 * d0) == outer {
            2 * d0
        } else {
            2 * d0 + 1
        };
        let d0_inner_slot = d0_outer_slot ^ 1;

        // Labels of marked points along each boundary cycle, starting at d0.
        let mut label = vec![UNSET; layout.arriving.len()];
        for start in [
            layout.point_of_slot[d0_outer_slot],
            layout.point_of_slot[d0_inner_slot],
        ] {
            let mut point = start;
            let mut at = 0;
            loop {
                label[point] = at;
                let r = layout.leaving[point];
                at += gaps[r];
                point = layout.point_of_slot[layout.runs[self.phi[r]][0]];
                if point == start {
                    break;
                }
            }
        }
        let (mp, mq) = (lens[outer], lens[inner]);
        let config = AnnulusConfig::new(mp / m, mq / m, m).ok()?;
        let lifted = |slot: usize| {
            let point = layout.point_of_slot[slot];
            let len = if slot_cycle(slot) == outer { mp } else { mq };
            match label[point] {
                0 if self.passes(slot, d0) => len,
                j => j,
            }
        };
        let mut diagonals = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let (a, b) = (2 * v, 2 * v + 1);
            let d = if v == d0 {
                make_type1(&config, 0, 0, 0).ok()?
            } else if slot_cycle(a) != slot_cycle(b) {
                let (o, i) = if slot_cycle(a) == outer {
                    (a, b)
                } else {
                    (b, a)
                };
                let (j, k) = (lifted(o), lifted(i));
                let w = 1 - i64::from(k == mq) - i64::from(j == mp);
                make_type1(&config, j % mp, k % mq, w).ok()?
            } else {
                let (j, k) = (lifted(a), lifted(b));
                let (lo, hi) = (j.min(k), j.max(k));
                let span = hi - lo;
                if span % m != 1 % m || span < 1 {
                    return None;
                }
                let level = (span - 1) / m;
                if slot_cycle(a) == outer {
                    make_type2(&config, lo % mp, level).ok()?
                } else {
                    make_type3(&config, lo % mq, level).ok()?
                }
            };
            diagonals.push(d);
        }
        let diagonals = normalize_windings(&diagonals);
        let angulation = validate(&config, &diagonals).ok()?;
        if !iso_check(&bound_quiver(&angulation), self.quiver) {
            return None;
        }
        let placement = self
            .quiver
            .vertices
            .iter()
            .cloned()
            .zip(diagonals.iter().copied())
            .collect();
        Some(Realization {
            angulation,
            placement,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angulation::{delta_p, enumerate, EnumerateOptions};

    fn round_trip(q: &BoundQuiver, m: usize) -> Realization {
        let r = realize(q, m).unwrap_or_else(|e| panic!("{e}\n{q}"));
        assert!(iso_check(&bound_quiver(&r.angulation), q));
        r
    }

    #[test]
    fn hereditary_quivers_come_back() {
        for (p, q, m) in [(2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 3, 2), (4, 2, 3)] {
            let c = AnnulusConfig::new(p, q, m).unwrap();
            let quiver = bound_quiver(&delta_p(&c));
            let r = round_trip(&quiver, m);
            assert_eq!(r.config().p() + r.config().q(), p + q);
        }
    }

    #[test]
    fn small_sweep_round_trips() {
        for (p, q, m) in [(2, 2, 1), (2, 2, 2), (3, 2, 1)] {
            let c = AnnulusConfig::new(p, q, m).unwrap();
            for a in enumerate(&c, EnumerateOptions::default()) {
                let a = a.unwrap();
                let quiver = bound_quiver(&a);
                let shape = RealizeOptions {
                    shape: Some((p, q)),
                    ..RealizeOptions::default()
                };
                let r = realize_with(&quiver, m, &shape).unwrap_or_else(|e| panic!("{a}: {e}"));
                assert_eq!(r.config(), &c);
                assert!(iso_check(&bound_quiver(&r.angulation), &quiver), "{a}");
            }
        }
    }

    #[test]
    fn first_root_vertex_sits_at_the_origin() {
        let c = AnnulusConfig::new(3, 2, 2).unwrap();
        let quiver = bound_quiver(&delta_p(&c));
        let report = recognize(&quiver, 2).unwrap();
        let first = &quiver.vertices[report.root_cycle.unwrap().vertices[0]];
        let r = round_trip(&quiver, 2);
        assert!(matches!(
            r.placement[first],
            MDiagonal::Type1 {
                outer: 0,
                inner: 0,
                ..
            }
        ));
    }

    #[test]
    fn rejected_quivers_are_not_realized() {
        // An oriented square without relations.
        let q = BoundQuiver::from_parts(
            &[
                ("a", "0", "1"),
                ("b", "1", "2"),
                ("c", "2", "3"),
                ("d", "3", "0"),
            ],
            &[],
        )
        .unwrap();
        assert!(matches!(
            realize(&q, 2),
            Err(RealizeError::NotAccepted { .. })
        ));
        assert_eq!(realize(&q, 0), Err(RealizeError::InvalidM));
    }

    #[test]
    fn tiny_quivers_are_unsupported() {
        let q = BoundQuiver::from_parts(&[("a", "0", "1")], &[]).unwrap();
        assert!(matches!(
            realize(&q, 2),
            Err(RealizeError::UnsupportedShape { .. })
        ));
    }

    #[test]
    fn wrong_shape_is_reported() {
        let c = AnnulusConfig::new(2, 2, 2).unwrap();
        let quiver = bound_quiver(&delta_p(&c));
        let options = RealizeOptions {
            shape: Some((3, 2)),
            ..RealizeOptions::default()
        };
        assert!(matches!(
            realize_with(&quiver, 2, &options),
            Err(RealizeError::UnsupportedShape { .. })
        ));
    }
}
