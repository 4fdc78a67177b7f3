//! Exact checks on line graphs and their switched relatives.

pub mod charpoly;
pub mod clique;
pub mod geometricity;
pub mod srg;
pub mod witness;

pub use charpoly::{char_poly_mod, CharPolyError, CharPolyMod, DEFAULT_PRIMES};
pub use clique::{
    cliques_through_edge, max_clique_through_edge, maximal_cliques_at_least, CliqueError,
};
pub use geometricity::{geometricity_report, GeometricityReport};
pub use srg::{
    denniston_line_graph_params, srg_check, srg_spectrum, srg_to_geometry_params, Spectrum,
    SpectrumError, SrgError, SrgParams,
};
pub use witness::{proposition_witness, WitnessCheck, WitnessReport};
