//! Generalized Cartan matrices with compact/non-compact node labels,
//! validation, and Dynkin-diagram classification.
//!
//! Conventions used throughout the crate:
//!
//! - `matrix[i][j] = 2 (a_i, a_j) / (a_i, a_i)` — the pairing of simple
//!   root `a_j` against the coroot of `a_i`;
//! - `lengths[i] = (a_i, a_i)` — the squared length of simple root `i`;
//! - the symmetrized form is `B = D * matrix` with `D = diag(lengths / 2)`,
//!   so `B[i][j] = (a_i, a_j)` exactly.
//!
//! Simple-root and fundamental-weight indices are 1-based in every public
//! API, matching the usual labelling of Dynkin diagram nodes.


use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;



use crate::linalg;
use crate::rat::Rat;

/// Compactness tag of a simple root (a node of the Satake diagram).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeLabel {
    Compact,
    Noncompact,
}

impl NodeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeLabel::Compact => "compact",
            NodeLabel::Noncompact => "noncompact",
        }
    }

    pub fn parse(s: &str) -> Option<NodeLabel> {
        match s {
            "compact" => Some(NodeLabel::Compact),
            "noncompact" => Some(NodeLabel::Noncompact),
            _ => None,
        }
    }
}

impl core::fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Validation failure for a [`CartanSpec`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanError {
    #[error("matrix must be square and nonempty with rank matching the rank field (rank field {rank}, matrix {rows}x{cols})")]
    BadShape { rank: usize, rows: usize, cols: usize },
    #[error("labels/lengths must have one entry per node (rank {rank}, labels {labels}, lengths {lengths})")]
    BadMetadata { rank: usize, labels: usize, lengths: usize },
    #[error("diagonal entry at node {node} is {value}, expected 2")]
    BadDiagonal { node: usize, value: i64 },
    #[error("off-diagonal entry ({i},{j}) is {value}, expected <= 0")]
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    #[error("zero pattern is asymmetric: entry ({i},{j}) is zero but ({j},{i}) is not")]
    AsymmetricZeroPattern { i: usize, j: usize },
    #[error("root length at node {node} must be positive")]
    NonPositiveLength { node: usize },
    #[error("lengths do not symmetrize the matrix: (D*A)[{i}][{j}] != (D*A)[{j}][{i}]")]
    NonSymmetricForm { i: usize, j: usize },
    #[error("symmetrized form is not positive definite (not a finite-type Cartan matrix)")]
    NotPositiveDefinite,
}

/// A rank-n generalized Cartan matrix plus node metadata. The seed for
/// everything: root systems, Weyl groups, weight lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanSpec {
    pub name: String,
    pub rank: usize,
    pub matrix: Vec<Vec<i64>>,
    pub labels: Vec<NodeLabel>,
    pub lengths: Vec<Rat>,
}

impl CartanSpec {
    pub fn new(
        name: &str,
        matrix: Vec<Vec<i64>>,
        labels: Vec<NodeLabel>,
        lengths: Vec<Rat>,
    ) -> Self {
        CartanSpec {
            name: name.to_string(),
            rank: matrix.len(),
            matrix,
            labels,
            lengths,
        }
    }

    /// Check every structural invariant: shape, diagonal of 2s,
    /// non-positive off-diagonal, symmetric zero pattern, and a symmetric
    /// positive-definite symmetrized form.
    pub fn validate(&self) -> Result<(), CartanError> {
        let n = self.rank;
        if n == 0 || self.matrix.len() != n || self.matrix.iter().any(|row| row.len() != n) {
            return Err(CartanError::BadShape {
                rank: n,
                rows: self.matrix.len(),
                cols: self.matrix.first().map_or(0, Vec::len),
            });
        }
        if self.labels.len() != n || self.lengths.len() != n {
            return Err(CartanError::BadMetadata {
                rank: n,
                labels: self.labels.len(),
                lengths: self.lengths.len(),
            });
        }
        for (i, len) in self.lengths.iter().enumerate() {
            use num_traits::Signed;
            if !len.is_positive() {
                return Err(CartanError::NonPositiveLength { node: i + 1 });
            }
        }
        for i in 0..n {
            if self.matrix[i][i] != 2 {
                return Err(CartanError::BadDiagonal {
                    node: i + 1,
                    value: self.matrix[i][i],
                });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.matrix[i][j] > 0 {
                    return Err(CartanError::PositiveOffDiagonal {
                        i: i + 1,
                        j: j + 1,
                        value: self.matrix[i][j],
                    });
                }
                if self.matrix[i][j] == 0 && self.matrix[j][i] != 0 {
                    return Err(CartanError::AsymmetricZeroPattern { i: i + 1, j: j + 1 });
                }
            }
        }
        let form = self.symmetrized_form();
        for i in 0..n {
            for j in i + 1..n {
                if form[i][j] != form[j][i] {
                    return Err(CartanError::NonSymmetricForm { i: i + 1, j: j + 1 });
                }
            }
        }
        if !linalg::is_positive_definite(&form) {
            return Err(CartanError::NotPositiveDefinite);
        }
        Ok(())
    }

    /// The symmetrized form `D * A`, whose `(i,j)` entry is `(a_i, a_j)`.
    pub fn symmetrized_form(&self) -> Vec<Vec<Rat>> {
        let two = crate::rat::rat(2);
        self.matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let d = &self.lengths[i] / &two;
                row.iter().map(|&a| &d * crate::rat::rat(a)).collect()
            })
            .collect()
    }

    /// 1-based indices of the noncompact nodes.
    pub fn noncompact_indices(&self) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == NodeLabel::Noncompact)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// 1-based indices of the compact nodes.
    pub fn compact_indices(&self) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == NodeLabel::Compact)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Isomorphism type of one connected Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(u8),
    F4,
    G2,
}

impl core::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::B(n) => write!(f, "B{n}"),
            DynkinType::C(n) => write!(f, "C{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
            DynkinType::F4 => write!(f, "F4"),
            DynkinType::G2 => write!(f, "G2"),
        }
    }
}

/// Outcome of [`check_diagram_type`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinTypeReport {
    /// One entry per connected component; empty when unrecognized.
    pub components: Vec<DynkinType>,
    /// False when the diagram does not match any finite-type shape.
    pub finite: bool,
    /// Human-readable type, e.g. `"E6"`, `"D6"`, `"A1 + A1"`,
    /// or `"not a finite type"`.
    pub type_name: String,
    /// Whether the diagram is graph-isomorphic to the canonical E6 diagram.
    pub isomorphic_to_e6: bool,
}

/// Classify the Dynkin diagram underlying `spec` and test it against the
/// canonical E6 shape (one trivalent node with simple-edge legs of lengths
/// 1, 2, 2).
pub fn check_diagram_type(spec: &CartanSpec) -> DynkinTypeReport {
    let n = spec.rank;
    // Edge multiplicities m_ij = A_ij * A_ji (1 = simple, 2 = double, 3 = triple).
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && spec.matrix[i][j] != 0 {
                adj[i].push((j, spec.matrix[i][j] * spec.matrix[j][i]));
            }
        }
    }

    let mut component_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![start];
        let mut nodes = Vec::new();
        component_of[start] = id;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for &(w, _) in &adj[v] {
                if component_of[w] == usize::MAX {
                    component_of[w] = id;
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        components.push(nodes);
    }

    let mut types = Vec::new();
    for nodes in &components {
        match classify_component(spec, &adj, nodes) {
            Some(t) => types.push(t),
            None => {
                return DynkinTypeReport {
                    components: Vec::new(),
                    finite: false,
                    type_name: "not a finite type".to_string(),
                    isomorphic_to_e6: false,
                };
            }
        }
    }

    let type_name = types
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" + ");
    let isomorphic_to_e6 = types.len() == 1 && types[0] == DynkinType::E(6);
    DynkinTypeReport {
        components: types,
        finite: true,
        type_name,
        isomorphic_to_e6,
    }
}

fn classify_component(
    spec: &CartanSpec,
    adj: &[Vec<(usize, i64)>],
    nodes: &[usize],
) -> Option<DynkinType> {
    let n = nodes.len();
    if n == 1 {
        return Some(DynkinType::A(1));
    }
    let degree = |v: usize| adj[v].len();
    let edge_count: usize = nodes.iter().map(|&v| degree(v)).sum::<usize>() / 2;
    if edge_count != n - 1 {
        // A cycle; affine, never finite type.
        return None;
    }
    let max_mult = nodes
        .iter()
        .flat_map(|&v| adj[v].iter().map(|&(_, m)| m))
        .max()
        .unwrap_or(1);
    if max_mult >= 4 {
        return None;
    }
    if max_mult == 3 {
        return (n == 2).then_some(DynkinType::G2);
    }

    let branch_nodes: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
    if let [hub] = branch_nodes[..] {
        // D/E shapes: simply laced, one trivalent hub.
        if degree(hub) != 3 || max_mult != 1 {
            return None;
        }
        let mut legs = Vec::new();
        for &(first, _) in &adj[hub] {
            let mut len = 1;
            let (mut prev, mut cur) = (hub, first);
            loop {
                let next: Vec<usize> =
                    adj[cur].iter().map(|&(w, _)| w).filter(|&w| w != prev).collect();
                match next[..] {
                    [] => break,
                    [w] => {
                        len += 1;
                        prev = cur;
                        cur = w;
                    }
                    _ => return None, // second branch point
                }
            }
            legs.push(len);
        }
        legs.sort_unstable();
        return match legs[..] {
            [1, 1, k] => Some(DynkinType::D(k + 3)),
            [1, 2, 2] => Some(DynkinType::E(6)),
            [1, 2, 3] => Some(DynkinType::E(7)),
            [1, 2, 4] => Some(DynkinType::E(8)),
            _ => None,
        };
    }
    if !branch_nodes.is_empty() {
        return None;
    }

    // A path. Order its nodes end to end.
    let ends: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) == 1).collect();
    let [start, _] = ends[..] else { return None };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = adj[cur].iter().map(|&(w, _)| w).find(|&w| w != prev)?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    let mult_at = |i: usize| -> i64 {
        adj[order[i]]
            .iter()
            .find(|&&(w, _)| w == order[i + 1])
            .map(|&(_, m)| m)
            .unwrap_or(0)
    };
    let doubles: Vec<usize> = (0..n - 1).filter(|&i| mult_at(i) == 2).collect();
    match doubles[..] {
        [] => Some(DynkinType::A(n)),
        [pos] => {
            if n == 2 {
                // B2 and C2 are the same abstract diagram; report the C name.
                return Some(DynkinType::C(2));
            }
            if pos == 0 || pos == n - 2 {
                let (end, inner) = if pos == 0 {
                    (order[0], order[1])
                } else {
                    (order[n - 1], order[n - 2])
                };
                let end_len = &spec.lengths[end];
                let inner_len = &spec.lengths[inner];
                if end_len > inner_len {
                    Some(DynkinType::C(n))
                } else if end_len < inner_len {
                    Some(DynkinType::B(n))
                } else {
                    None
                }
            } else if n == 4 && pos == 1 {
                Some(DynkinType::F4)
            } else {
                None
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rat::rat;

    #[test]
    fn presets_all_validate() {
        for spec in presets::builtin() {
            spec.validate().unwrap_or_else(|e| panic!("{}: {e}", spec.name));
        }
    }

    #[test]
    fn bad_diagonal_rejected() {
        let spec = CartanSpec::new(
            "bad",
            vec![vec![1]],
            vec![NodeLabel::Noncompact],
            vec![rat(2)],
        );
        assert!(matches!(
            spec.validate(),
            Err(CartanError::BadDiagonal { node: 1, value: 1 })
        ));
    }

    #[test]
    fn positive_off_diagonal_rejected() {
        let spec = CartanSpec::new(
            "bad",
            vec![vec![2, 1], vec![1, 2]],
            vec![NodeLabel::Noncompact; 2],
            vec![rat(2), rat(2)],
        );
        assert!(matches!(
            spec.validate(),
            Err(CartanError::PositiveOffDiagonal { .. })
        ));
    }

    #[test]
    fn asymmetric_zero_pattern_rejected() {
        let spec = CartanSpec::new(
            "bad",
            vec![vec![2, 0], vec![-1, 2]],
            vec![NodeLabel::Noncompact; 2],
            vec![rat(2), rat(2)],
        );
        assert!(matches!(
            spec.validate(),
            Err(CartanError::AsymmetricZeroPattern { .. })
        ));
    }

    #[test]
    fn affine_matrix_rejected_as_not_positive_definite() {
        let spec = CartanSpec::new(
            "affine-a1",
            vec![vec![2, -2], vec![-2, 2]],
            vec![NodeLabel::Noncompact; 2],
            vec![rat(2), rat(2)],
        );
        assert_eq!(spec.validate(), Err(CartanError::NotPositiveDefinite));
    }

    #[test]
    fn wrong_lengths_fail_to_symmetrize() {
        // C2 matrix with equal lengths: D*A is not symmetric.
        let spec = CartanSpec::new(
            "bad-c2",
            vec![vec![2, -2], vec![-1, 2]],
            vec![NodeLabel::Noncompact; 2],
            vec![rat(2), rat(2)],
        );
        assert!(matches!(
            spec.validate(),
            Err(CartanError::NonSymmetricForm { .. })
        ));
    }

    #[test]
    fn classifies_the_bundled_presets() {
        let cases = [
            ("A1", "A1", false),
            ("A2", "A2", false),
            ("C2", "C2", false),
            ("G2", "G2", false),
            ("E6-bourbaki", "E6", true),
            ("E6-paper", "D6", false),
        ];
        for (id, expected, is_e6) in cases {
            let report = check_diagram_type(&presets::by_id(id).unwrap());
            assert_eq!(report.type_name, expected, "{id}");
            assert!(report.finite);
            assert_eq!(report.isomorphic_to_e6, is_e6, "{id}");
        }
    }

    #[test]
    fn classifies_b3_and_f4_shapes() {
        // B3: end node short.
        let b3 = CartanSpec::new(
            "b3",
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
            vec![NodeLabel::Noncompact; 3],
            vec![rat(2), rat(2), rat(1)],
        );
        b3.validate().unwrap();
        assert_eq!(check_diagram_type(&b3).type_name, "B3");

        // C3: end node long.
        let c3 = CartanSpec::new(
            "c3",
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
            vec![NodeLabel::Noncompact; 3],
            vec![rat(2), rat(2), rat(4)],
        );
        c3.validate().unwrap();
        assert_eq!(check_diagram_type(&c3).type_name, "C3");

        let f4 = CartanSpec::new(
            "f4",
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
            vec![NodeLabel::Noncompact; 4],
            vec![rat(4), rat(4), rat(2), rat(2)],
        );
        f4.validate().unwrap();
        assert_eq!(check_diagram_type(&f4).type_name, "F4");
    }

    #[test]
    fn disconnected_diagram_reports_each_component() {
        let spec = CartanSpec::new(
            "a1a1",
            vec![vec![2, 0], vec![0, 2]],
            vec![NodeLabel::Noncompact; 2],
            vec![rat(2), rat(2)],
        );
        spec.validate().unwrap();
        let report = check_diagram_type(&spec);
        assert_eq!(report.type_name, "A1 + A1");
        assert!(!report.isomorphic_to_e6);
    }

    #[test]
    fn index_helpers_follow_labels() {
        let e6 = presets::e6_bourbaki();
        assert_eq!(e6.noncompact_indices(), vec![1, 6]);
        assert_eq!(e6.compact_indices(), vec![2, 3, 4, 5]);
    }
}
