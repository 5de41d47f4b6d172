//! Weyl groups as permutation groups on the root index set.
//!
//! Each simple reflection permutes the (canonically ordered) roots, so the
//! group generated by a subset of simple reflections is enumerated by
//! breadth-first closure over permutation composition. Discovery order is
//! deterministic: the queue starts at the identity and generators are
//! applied in index order.
//!
//! Root indices fit in `u16` for every system within the enumeration bound.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::roots::{RootSystem, RootSystemError};

/// A permutation of the root index set, in image form: `perm[i]` is the
/// index of the image of root `i`.
pub type RootPermutation = Vec<u16>;

/// A finite reflection group acting on the roots of a [`RootSystem`].
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<RootPermutation>,
    generators: Vec<RootPermutation>,
    /// 1-based simple-root indices of the generators.
    generator_indices: Vec<usize>,
    degree: usize,
}

/// Build the group generated by the given simple reflections (all of them
/// when `generator_subset` is `None`). The subset uses 1-based indices;
/// this is how the compact Weyl group is formed from the compact nodes.
pub fn weyl_group(
    rs: &RootSystem,
    generator_subset: Option<&[usize]>,
) -> Result<WeylGroup, RootSystemError> {
    let all: Vec<usize> = (1..=rs.rank()).collect();
    let indices: Vec<usize> = match generator_subset {
        None => all,
        Some(subset) => {
            let mut v = subset.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        }
    };
    let degree = rs.count();
    let mut generators = Vec::with_capacity(indices.len());
    for &k in &indices {
        let mut perm = vec![0u16; degree];
        for (i, root) in rs.roots().iter().enumerate() {
            let image = rs.reflect_root(root, k)?;
            let j = rs
                .root_index(image.coords())
                .expect("root systems are closed under simple reflections");
            perm[i] = j as u16;
        }
        generators.push(perm);
    }

    let identity: RootPermutation = (0..degree as u16).collect();
    let mut seen: hashbrown::HashSet<RootPermutation> = hashbrown::HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity.clone()];
    let mut queue: VecDeque<RootPermutation> = VecDeque::new();
    queue.push_back(identity);
    while let Some(p) = queue.pop_front() {
        for g in &generators {
            let q = compose(g, &p);
            if !seen.contains(&q) {
                seen.insert(q.clone());
                elements.push(q.clone());
                queue.push_back(q);
            }
        }
    }

    Ok(WeylGroup {
        elements,
        generators,
        generator_indices: indices,
        degree,
    })
}

/// `a` after `b`: the permutation sending `i` to `a[b[i]]`.
pub fn compose(a: &[u16], b: &[u16]) -> RootPermutation {
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Inverse permutation.
pub fn inverse(p: &[u16]) -> RootPermutation {
    let mut inv = vec![0u16; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j as usize] = i as u16;
    }
    inv
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in breadth-first discovery order (identity first).
    pub fn elements(&self) -> &[RootPermutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[RootPermutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    /// Number of roots acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn contains(&self, p: &[u16]) -> bool {
        self.elements.iter().any(|e| e == p)
    }

    /// The matrix of an element on simple-root coordinates: column `j` is
    /// the coordinate vector of the image of simple root `j+1`.
    pub fn element_matrix(&self, rs: &RootSystem, element: &[u16]) -> Vec<Vec<i64>> {
        let n = rs.rank();
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            let simple = rs.simple_root(j + 1).expect("index in range");
            let idx = rs.root_index(simple.coords()).expect("simple roots are roots");
            let image = &rs.roots()[element[idx] as usize];
            for i in 0..n {
                m[i][j] = image.coords()[i];
            }
        }
        m
    }
}
