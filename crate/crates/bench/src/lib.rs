//! Shared fixtures for the criterion benches.

use srgswitch::prelude::*;

pub struct Fixture {
    pub field: Field,
    pub arc: Arc,
    pub lines: LineSet,
    pub gamma: Graph,
    pub config: SwitchingConfig,
}

/// Denniston arc of degree `2^m` in PG(2, 2^h), its line graph and the default switching configuration.
pub fn fixture(h: u32, m: u32) -> Fixture {
    let field = Field::new(h).expect("valid degree");
    let arc = denniston_arc(&field, m).expect("0 < m < h");
    let lines = LineSet::new(&field, &arc);
    let gamma = build_line_graph(&lines);
    let config = find_switching_config(&field, &arc, (1 << m) - 1, &Default::default())
        .expect("configuration exists");
    Fixture {
        field,
        arc,
        lines,
        gamma,
        config,
    }
}
