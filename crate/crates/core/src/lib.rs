//! Line graphs of linear representations of maximal arcs in PG(2, 2^h),
//! WQH switching, and exact verification of strong regularity, cospectrality
//! and (non-)geometricity.
//!
//! The usual pipeline:
//!
//! ```
//! use srgswitch::prelude::*;
//!
//! let field = Field::new(2).unwrap();
//! let arc = denniston_arc(&field, 1).unwrap();
//! let lines = LineSet::new(&field, &arc);
//! let gamma = build_line_graph(&lines);
//! assert_eq!(srg_check(&gamma).unwrap(), SrgParams::new(96, 20, 4, 4));
//!
//! let cfg = find_switching_config(&field, &arc, 1, &Default::default()).unwrap();
//! let partition = build_partition(&cfg, &lines);
//! let switched = apply_switch(&gamma, &partition).unwrap();
//! assert_eq!(srg_check(&switched).unwrap(), SrgParams::new(96, 20, 4, 4));
//! assert!(!geometricity_report(&switched, cfg.t).geometric());
//! ```

pub mod analysis;
pub mod arcs;
pub mod explore;
pub mod geometry;
pub mod gf2h;
pub mod graph;
pub mod linrep;
pub mod switching;

pub mod prelude {
    pub use crate::analysis::{
        char_poly_mod, geometricity_report, max_clique_through_edge, proposition_witness,
        srg_check, srg_spectrum, srg_to_geometry_params, SrgParams,
    };
    pub use crate::arcs::{denniston_arc, load_arc, verify_maximal_arc, Arc};
    pub use crate::explore::{
        explore, find_generic_partitions, Census, ExploreOptions, Fingerprint,
    };
    pub use crate::gf2h::{Field, FieldElem};
    pub use crate::graph::{graph6_decode, graph6_encode, Graph};
    pub use crate::linrep::{build_line_graph, LineSet};
    pub use crate::switching::{
        apply_switch, build_partition, find_switching_config, verify_wqh_hypotheses, PartitionSpec,
        SwitchingChoices, SwitchingConfig,
    };
}
