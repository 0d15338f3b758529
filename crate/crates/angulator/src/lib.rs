//! Angulations of the annulus and their gentle bound quivers.

pub mod angulation;
pub mod classify;
pub mod geometry;
pub mod oracle;
pub mod quiver;
pub mod realize;
pub mod recognize;

pub use angulation::{
    chained_type1_triples, delta_p, enumerate, faces_of, normalize_windings, validate, Angulation,
    AngulationError, AngulationFile, EnumerateOptions, Enumerator, Face, Side,
};
pub use classify::{check_component_shift, classify, ClassifyError, ComponentKind, ComponentTag};
pub use geometry::{
    all_diagonals, crosses, endpoints, lift, make_type1, make_type2, make_type3, rotate,
    AnnulusConfig, Boundary, CoverPoint, GeometryError, LiftedArc, MDiagonal, Rational, Vertex,
};
pub use quiver::{
    bound_quiver, coloured_quiver, find_isomorphism, is_gentle, iso_check, Arrow, BoundQuiver,
    ColouredArrow, ColouredQuiver, GentleReport, GentleRule, GentleViolation, QuiverError,
};
pub use realize::{realize, realize_with, Realization, RealizeError, RealizeOptions};
pub use recognize::{
    find_cycles, orientation_sweep, recognize, recognize_with, ConditionResult, Conditions,
    CycleRecord, OrientationClass, RecognitionReport, RecognizeError, RecognizeOptions, Verdict,
};

/// The README and the chapters of the book under `book/src`, compiled as
/// doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/annulus.md")]
    pub struct Annulus;
    #[doc = include_str!("../../../book/src/angulations.md")]
    pub struct Angulations;
    #[doc = include_str!("../../../book/src/quivers.md")]
    pub struct Quivers;
    #[doc = include_str!("../../../book/src/components.md")]
    pub struct Components;
    #[doc = include_str!("../../../book/src/recognition.md")]
    pub struct Recognition;
    #[doc = include_str!("../../../book/src/realization.md")]
    pub struct Realization;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
