//! Graphviz export.

use std::fmt::Write;

use crate::category::PreObj;
use crate::decompose::{core_partition, quotient_poset};
use crate::topology::components;

const PALETTE: [&str; 8] =
    ["lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightcyan", "wheat"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Draw one node per `≃`-class and only the covering relations of the
    /// quotient poset.
    pub hasse: bool,
    /// Fill nodes by connected component.
    pub color_components: bool,
}

pub fn export_dot(a: &PreObj, options: DotOptions) -> String {
    let comps = components(a);
    let mut out = String::from("digraph preorder {\n");
    let fill = |x: usize| {
        if options.color_components {
            format!(", style=filled, fillcolor={}", PALETTE[comps.class_of(x) % PALETTE.len()])
        } else {
            String::new()
        }
    };
    if options.hasse {
        let blocks = core_partition(a);
        let (q, _) = quotient_poset(a);
        for block in blocks.blocks() {
            let label: Vec<String> = block.iter().map(usize::to_string).collect();
            writeln!(out, "  n{} [label=\"{}\"{}];", block[0], label.join(","), fill(block[0])).unwrap();
        }
        let reps = blocks.representatives();
        for (i, j) in q.rel().off_diagonal_pairs() {
            let covered = (0..q.n()).any(|k| k != i && k != j && q.related(i, k) && q.related(k, j));
            if !covered {
                writeln!(out, "  n{} -> n{};", reps[i], reps[j]).unwrap();
            }
        }
    } else {
        for x in 0..a.n() {
            writeln!(out, "  n{x} [label=\"{x}\"{}];", fill(x)).unwrap();
        }
        for (x, y) in a.rel().off_diagonal_pairs() {
            writeln!(out, "  n{x} -> n{y};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
