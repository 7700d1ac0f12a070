//! Right-angled Artin groups on small graphs: word problem, centralizers,
//! pearls and pearl chains, ear decompositions, amalgamated-product
//! assembly, minors, and graph-property classifiers computed two ways.

pub mod assembly;
pub mod classify;
pub mod ears;
pub mod error;
pub mod free;
pub mod graph;
mod iso;
pub mod limits;
pub mod minors;
pub mod pearls;
pub mod words;

pub use assembly::{
    abelianising_step, all_full_smoothings, apply_word_map, assemble, fully_smoothed,
    identification_step, is_subdivision_of, pearl_deletion_step, plan_from_decomposition,
    smoothing_step, Assembled, AssemblyPlan, AssemblyStep, End, Gluing, HomomorphismStep, PearlRef,
    StepKind,
};
pub use classify::{classify, Classification, Evidence, Property, Route, RouteOutcome, Value};
pub use ears::{
    check_3conn_conditions, ear_capacity, ear_count_formula, find_3conn_bundle,
    find_3conn_certificate, find_loose, find_nested, find_odd, find_proper, find_standard,
    min_capacity_over_decompositions, Ear, EarCount, EarDecomposition, Kind, ThreeConnBundle,
    ThreeConnCertificate, Violation,
};
pub use error::{RaagError, Result};
pub use graph::{enumerate_graphs, isomorphism_classes, Graph, NamedGraph};
pub use limits::Limits;
pub use minors::{
    find_minor, find_topological_minor, replay, witness_to_sequences, MinorSequences, MinorWitness,
    TopologicalWitness,
};
pub use pearls::{
    are_adjacent_pearls, check_basis_extension, check_deg1_conditions, check_deg2_conditions,
    check_special_case, classify_pearl, ear_shape, verify_pearl_chain, ChainReport, ChainStep,
    Check, CheckReport, DecoratedEar, EarShape, PearlCertificate, PearlClass, PearlKind, Verdict,
    WitnessBundle,
};
pub use words::{
    AbelianVector, CentralizerDescription, CentralizerOutcome, CentralizerShape, CyclicReduction,
    Letter, NormalForm, Raag, Word,
};
