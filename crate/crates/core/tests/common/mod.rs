#![allow(dead_code)]

use srgswitch::analysis::denniston_line_graph_params;
use srgswitch::prelude::*;
use srgswitch::switching::build_partition;

/// Everything built from a Denniston arc of degree `2^m` in PG(2, 2^h).
pub struct Built {
    pub h: u32,
    pub m: u32,
    pub field: Field,
    pub arc: Arc,
    pub lines: LineSet,
    pub gamma: Graph,
    pub config: SwitchingConfig,
    pub partition: PartitionSpec,
}

impl Built {
    pub fn t(&self) -> usize {
        self.arc.len() - 1
    }

    pub fn q(&self) -> usize {
        self.field.order() as usize
    }

    pub fn expected(&self) -> SrgParams {
        denniston_line_graph_params(self.h, self.m)
    }
}

pub fn build(h: u32, m: u32) -> Built {
    let field = Field::new(h).unwrap();
    let arc = denniston_arc(&field, m).unwrap();
    let lines = LineSet::new(&field, &arc);
    let gamma = build_line_graph(&lines);
    let config =
        find_switching_config(&field, &arc, (1 << m) - 1, &SwitchingChoices::default()).unwrap();
    let partition = build_partition(&config, &lines);
    Built {
        h,
        m,
        field,
        arc,
        lines,
        gamma,
        config,
        partition,
    }
}

/// Vertices `0..n` in a seeded random order.
pub fn random_perm(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    p
}
