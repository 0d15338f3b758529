//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use angulator::{
    enumerate, validate, Angulation, AnnulusConfig, BoundQuiver, EnumerateOptions, MDiagonal,
};

/// The four annuli swept exhaustively.
pub const SWEEP: [(usize, usize, usize); 4] = [(2, 2, 1), (2, 2, 2), (3, 2, 1), (2, 2, 3)];

pub fn config(p: usize, q: usize, m: usize) -> AnnulusConfig {
    AnnulusConfig::new(p, q, m).unwrap()
}

pub fn all_angulations(c: &AnnulusConfig) -> Vec<Angulation> {
    enumerate(c, EnumerateOptions::default())
        .collect::<Result<_, _>>()
        .unwrap()
}

/// The eight-vertex quiver `a … h` with relations through `c` and `h`.
pub fn eight_vertex_quiver() -> BoundQuiver {
    BoundQuiver::from_parts(
        &[
            ("ha", "h", "a"),
            ("ab", "a", "b"),
            ("cb", "c", "b"),
            ("dc", "d", "c"),
            ("de", "d", "e"),
            ("fe", "f", "e"),
            ("gf", "g", "f"),
            ("gh", "g", "h"),
        ],
        &[("gh", "ha"), ("dc", "cb")],
    )
    .unwrap()
}

/// The 4,4,3 angulation realizing [`eight_vertex_quiver`], keyed by vertex.
pub fn eight_vertex_diagonals() -> Vec<(&'static str, MDiagonal)> {
    let t1 = |outer, inner, winding| MDiagonal::Type1 {
        outer,
        inner,
        winding,
    };
    vec![
        ("a", t1(0, 0, 0)),
        ("b", t1(0, 3, 0)),
        ("c", MDiagonal::Type3 { start: 3, level: 1 }),
        ("d", t1(10, 7, 1)),
        ("e", t1(7, 10, 1)),
        ("f", t1(10, 10, 1)),
        ("g", t1(4, 10, 1)),
        ("h", MDiagonal::Type2 { start: 0, level: 1 }),
    ]
}

pub fn eight_vertex_angulation() -> Angulation {
    let ds: Vec<MDiagonal> = eight_vertex_diagonals()
        .into_iter()
        .map(|(_, d)| d)
        .collect();
    validate(&config(4, 4, 3), &ds).unwrap()
}

/// A root of ten vertices `r0 … r9` sharing the arrows `r0→r1→r2` with the
/// 3-saturated cycle `r0→r1→r2→x1→x2→r0`. Along the root there are three
/// strictly internal relations pointing one way (`a2·a3`, `a3·a4`,
/// `a5·a6`) and one pointing the other way (`a8·a7`).
pub fn counting_example() -> BoundQuiver {
    BoundQuiver::from_parts(
        &[
            ("a0", "r0", "r1"),
            ("a1", "r1", "r2"),
            ("a2", "r2", "r3"),
            ("a3", "r3", "r4"),
            ("a4", "r4", "r5"),
            ("a5", "r5", "r6"),
            ("a6", "r6", "r7"),
            ("a7", "r8", "r7"),
            ("a8", "r9", "r8"),
            ("a9", "r9", "r0"),
            ("c2", "r2", "x1"),
            ("c3", "x1", "x2"),
            ("c4", "x2", "r0"),
        ],
        &[
            ("a0", "a1"),
            ("a1", "c2"),
            ("c2", "c3"),
            ("c3", "c4"),
            ("c4", "a0"),
            ("a2", "a3"),
            ("a3", "a4"),
            ("a5", "a6"),
            ("a8", "a7"),
        ],
    )
    .unwrap()
}
