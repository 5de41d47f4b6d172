//! Bundled Cartan presets.
//!
//! Two E6 variants ship side by side. `E6-bourbaki` is the standard
//! numbering (chain 1-3-4-5-6 with node 2 attached to node 4). `E6-paper`
//! keeps the stated adjacency `1-3` and `6-3` and completes it with the
//! chain 3-4, 4-5, 5-2; the completion is one arbitrary choice among many,
//! and [`crate::cartan::check_diagram_type`] reports what shape it actually
//! has rather than assuming. Both carry noncompact labels on nodes 1 and 6.

use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanSpec, NodeLabel};
use crate::rat::{rat, Rat};

pub const A1: &str = "A1";
pub const A2: &str = "A2";
pub const C2: &str = "C2";
pub const G2: &str = "G2";
pub const E6_BOURBAKI: &str = "E6-bourbaki";
pub const E6_PAPER: &str = "E6-paper";

/// Ids of every bundled preset, in catalog order.
pub fn builtin_ids() -> Vec<&'static str> {
    vec![A1, A2, C2, G2, E6_BOURBAKI, E6_PAPER]
}

/// All bundled presets.
pub fn builtin() -> Vec<CartanSpec> {
    vec![a1(), a2(), c2(), g2(), e6_bourbaki(), e6_paper()]
}

/// Look up a bundled preset by id.
pub fn by_id(id: &str) -> Option<CartanSpec> {
    builtin().into_iter().find(|s| s.name == id)
}

fn simply_laced_lengths(n: usize) -> Vec<Rat> {
    vec![rat(2); n]
}

pub fn a1() -> CartanSpec {
    CartanSpec::new(
        A1,
        vec![vec![2]],
        vec![NodeLabel::Noncompact],
        simply_laced_lengths(1),
    )
}

pub fn a2() -> CartanSpec {
    CartanSpec::new(
        A2,
        vec![vec![2, -1], vec![-1, 2]],
        vec![NodeLabel::Noncompact; 2],
        simply_laced_lengths(2),
    )
}

/// C2: `nu1` short (length^2 2), `nu2` long (length^2 4), `(nu1, nu2) = -2`.
/// Positive roots: `nu1, nu2, nu1+nu2, 2nu1+nu2`.
pub fn c2() -> CartanSpec {
    CartanSpec::new(
        C2,
        vec![vec![2, -2], vec![-1, 2]],
        vec![NodeLabel::Noncompact; 2],
        vec![rat(2), rat(4)],
    )
}

pub fn g2() -> CartanSpec {
    CartanSpec::new(
        G2,
        vec![vec![2, -3], vec![-1, 2]],
        vec![NodeLabel::Noncompact; 2],
        vec![rat(2), rat(6)],
    )
}

fn e6_labels() -> Vec<NodeLabel> {
    vec![
        NodeLabel::Noncompact,
        NodeLabel::Compact,
        NodeLabel::Compact,
        NodeLabel::Compact,
        NodeLabel::Compact,
        NodeLabel::Noncompact,
    ]
}

/// Standard E6: edges 1-3, 3-4, 4-5, 5-6, 2-4.
pub fn e6_bourbaki() -> CartanSpec {
    CartanSpec::new(
        E6_BOURBAKI,
        vec![
            vec![2, 0, -1, 0, 0, 0],
            vec![0, 2, 0, -1, 0, 0],
            vec![-1, 0, 2, -1, 0, 0],
            vec![0, -1, -1, 2, -1, 0],
            vec![0, 0, 0, -1, 2, -1],
            vec![0, 0, 0, 0, -1, 2],
        ],
        e6_labels(),
        simply_laced_lengths(6),
    )
}

/// The stated adjacency 1-3 and 6-3, completed with the chain 3-4, 4-5, 5-2.
/// Node 3 ends up trivalent with legs (1, 1, 3) — a D6 shape, not E6.
pub fn e6_paper() -> CartanSpec {
    CartanSpec::new(
        E6_PAPER,
        vec![
            vec![2, 0, -1, 0, 0, 0],
            vec![0, 2, 0, 0, -1, 0],
            vec![-1, 0, 2, -1, 0, -1],
            vec![0, 0, -1, 2, -1, 0],
            vec![0, -1, 0, -1, 2, 0],
            vec![0, 0, -1, 0, 0, 2],
        ],
        e6_labels(),
        simply_laced_lengths(6),
    )
}
