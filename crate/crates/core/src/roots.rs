//! Root systems as the reflection closure of the simple roots.
//!
//! Roots live in simple-root coordinates (integer vectors). The closure is
//! computed breadth-first under all simple reflections, guarded by a
//! configurable bound so that a malformed matrix fails fast instead of
//! diverging. Roots are stored sorted lexicographically, which fixes the
//! permutation indices used by [`crate::weyl`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::cartan::{CartanError, CartanSpec};
use crate::linalg;
use crate::rat::{rat, Rat};

/// Bound on the reflection closure before giving up; generous for every
/// finite type through E8 (240 roots).
pub const DEFAULT_ROOT_BOUND: usize = 10_000;

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    coords: Vec<i64>,
}

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn negated(&self) -> RootVector {
        RootVector::new(self.coords.iter().map(|&c| -c).collect())
    }

    pub fn to_rat(&self) -> Vec<Rat> {
        self.coords.iter().map(|&c| rat(c)).collect()
    }

    /// Sum of coefficients over the given 1-based node indices, mod 2.
    /// Even means compact under the Z/2 grading convention.
    pub fn is_compact_mod2(&self, noncompact_indices: &[usize]) -> bool {
        let s: i64 = noncompact_indices.iter().map(|&k| self.coords[k - 1]).sum();
        s.rem_euclid(2) == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSystemError {
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(#[from] CartanError),
    #[error("reflection closure exceeded {bound} roots; the form is not positive definite or the bound is too small")]
    NonFiniteType { bound: usize },
    #[error("dimension mismatch: expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

/// The finite set of roots of a Cartan spec, with its exact bilinear form
/// and the cached change of basis between simple-root and
/// fundamental-weight coordinates. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: CartanSpec,
    roots: Vec<RootVector>,
    form: Vec<Vec<Rat>>,
    inverse_cartan: Vec<Vec<Rat>>,
    index: BTreeMap<Vec<i64>, usize>,
}

impl RootSystem {
    /// Reflection closure of the simple roots with the default bound.
    pub fn build(spec: CartanSpec) -> Result<Self, RootSystemError> {
        Self::build_with_bound(spec, DEFAULT_ROOT_BOUND)
    }

    pub fn build_with_bound(spec: CartanSpec, bound: usize) -> Result<Self, RootSystemError> {
        spec.validate()?;
        let n = spec.rank;
        let mut seen: hashbrown::HashSet<Vec<i64>> = hashbrown::HashSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone());
            frontier.push(e);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for k in 0..n {
                    let w = reflect_int(&spec.matrix, k, v);
                    if !seen.contains(&w) {
                        if seen.len() >= bound {
                            return Err(RootSystemError::NonFiniteType { bound });
                        }
                        seen.insert(w.clone());
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }

        let mut roots: Vec<RootVector> = seen.into_iter().map(RootVector::new).collect();
        roots.sort();
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.to_vec(), i))
            .collect();
        let form = spec.symmetrized_form();
        let inverse_cartan = linalg::invert(&linalg::from_int(&spec.matrix))
            .expect("validated Cartan matrices are invertible");
        Ok(RootSystem {
            spec,
            roots,
            form,
            inverse_cartan,
            index,
        })
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn count(&self) -> usize {
        self.roots.len()
    }

    /// Roots in canonical (lexicographic) order.
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// The simple root `a_k` (1-based).
    pub fn simple_root(&self, k: usize) -> Result<RootVector, RootSystemError> {
        self.check_index(k)?;
        let mut e = vec![0i64; self.rank()];
        e[k - 1] = 1;
        Ok(RootVector::new(e))
    }

    fn check_index(&self, k: usize) -> Result<(), RootSystemError> {
        if k == 0 || k > self.rank() {
            return Err(RootSystemError::IndexOutOfRange {
                index: k,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_dim(&self, len: usize) -> Result<(), RootSystemError> {
        if len != self.rank() {
            return Err(RootSystemError::DimensionMismatch {
                expected: self.rank(),
                got: len,
            });
        }
        Ok(())
    }

    /// The symmetrized bilinear form `x^T B y` on simple-root coordinates.
    pub fn bilinear(&self, x: &[Rat], y: &[Rat]) -> Result<Rat, RootSystemError> {
        self.check_dim(x.len())?;
        self.check_dim(y.len())?;
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc += xi * yj * &self.form[i][j];
            }
        }
        Ok(acc)
    }

    /// Bilinear form on integer (root) coordinates.
    pub fn bilinear_int(&self, x: &[i64], y: &[i64]) -> Rat {
        let xr: Vec<Rat> = x.iter().map(|&c| rat(c)).collect();
        let yr: Vec<Rat> = y.iter().map(|&c| rat(c)).collect();
        self.bilinear(&xr, &yr).expect("integer coords have full rank length")
    }

    /// Squared length of a root.
    pub fn length_sq(&self, r: &RootVector) -> Rat {
        self.bilinear_int(r.coords(), r.coords())
    }

    /// Simple reflection `s_k(v) = v - <v, a_k^vee> a_k` on rational
    /// simple-root coordinates. `k` is 1-based.
    pub fn reflect(&self, v: &[Rat], k: usize) -> Result<Vec<Rat>, RootSystemError> {
        self.check_index(k)?;
        self.check_dim(v.len())?;
        let row = &self.spec.matrix[k - 1];
        let pairing: Rat = row
            .iter()
            .zip(v)
            .map(|(&a, c)| rat(a) * c)
            .sum();
        let mut out = v.to_vec();
        out[k - 1] = &out[k - 1] - &pairing;
        Ok(out)
    }

    /// Simple reflection on an integer root vector.
    pub fn reflect_root(&self, r: &RootVector, k: usize) -> Result<RootVector, RootSystemError> {
        self.check_index(k)?;
        self.check_dim(r.coords.len())?;
        Ok(RootVector::new(reflect_int(&self.spec.matrix, k - 1, r.coords())))
    }

    /// Fundamental-weight coordinates of a vector given in simple-root
    /// coordinates: `u = A c`.
    pub fn root_to_weight_coords(&self, c: &[Rat]) -> Result<Vec<Rat>, RootSystemError> {
        self.check_dim(c.len())?;
        Ok(linalg::mat_vec(&linalg::from_int(&self.spec.matrix), c))
    }

    /// Simple-root coordinates of a vector given in fundamental-weight
    /// coordinates: `c = A^{-1} u`.
    pub fn weight_to_root_coords(&self, u: &[Rat]) -> Result<Vec<Rat>, RootSystemError> {
        self.check_dim(u.len())?;
        Ok(linalg::mat_vec(&self.inverse_cartan, u))
    }

    /// The cached inverse Cartan matrix.
    pub fn inverse_cartan(&self) -> &[Vec<Rat>] {
        &self.inverse_cartan
    }
}

/// `s_k` on integer simple-root coordinates (`k` 0-based internal form).
fn reflect_int(matrix: &[Vec<i64>], k: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = matrix[k].iter().zip(v).map(|(&a, &c)| a * c).sum();
    let mut out = v.to_vec();
    out[k] -= pairing;
    out
}

/// Convenience wrapper matching the operation name used by the pipeline.
pub fn build_root_system(spec: CartanSpec) -> Result<RootSystem, RootSystemError> {
    RootSystem::build(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rat::ratio;

    #[test]
    fn a1_has_two_roots() {
        let rs = build_root_system(presets::a1()).unwrap();
        assert_eq!(rs.count(), 2);
        assert!(rs.contains(&[1]));
        assert!(rs.contains(&[-1]));
    }

    #[test]
    fn e6_has_72_roots_of_equal_length() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        assert_eq!(rs.count(), 72);
        for r in rs.roots() {
            assert_eq!(rs.length_sq(r), rat(2));
        }
    }

    #[test]
    fn c2_has_8_roots_and_g2_has_12() {
        let c2 = RootSystem::build(presets::c2()).unwrap();
        assert_eq!(c2.count(), 8);
        let mut lengths: Vec<Rat> = c2.roots().iter().map(|r| c2.length_sq(r)).collect();
        lengths.sort();
        lengths.dedup();
        assert_eq!(lengths, vec![rat(2), rat(4)]);

        let g2 = RootSystem::build(presets::g2()).unwrap();
        assert_eq!(g2.count(), 12);
    }

    #[test]
    fn negation_closed() {
        for spec in presets::builtin() {
            let rs = RootSystem::build(spec).unwrap();
            for r in rs.roots() {
                assert!(rs.contains(r.negated().coords()), "{}", rs.spec().name);
            }
        }
    }

    #[test]
    fn deterministic_canonical_order() {
        let a = RootSystem::build(presets::e6_bourbaki()).unwrap();
        let b = RootSystem::build(presets::e6_bourbaki()).unwrap();
        assert_eq!(a.roots(), b.roots());
        let mut sorted = a.roots().to_vec();
        sorted.sort();
        assert_eq!(sorted, a.roots());
    }

    #[test]
    fn bilinear_matches_symmetrized_cartan() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        let a1 = rs.simple_root(1).unwrap().to_rat();
        let a6 = rs.simple_root(6).unwrap().to_rat();
        assert_eq!(rs.bilinear(&a1, &a1).unwrap(), rat(2));
        assert_eq!(rs.bilinear(&a1, &a6).unwrap(), rat(0));
        let zero = vec![rat(0); 6];
        assert_eq!(rs.bilinear(&zero, &a6).unwrap(), rat(0));
    }

    #[test]
    fn bilinear_rejects_bad_dimension() {
        let rs = RootSystem::build(presets::a2()).unwrap();
        let err = rs.bilinear(&[rat(1)], &[rat(1), rat(0)]).unwrap_err();
        assert!(matches!(err, RootSystemError::DimensionMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn reflect_own_root_negates() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        let a1 = rs.simple_root(1).unwrap();
        assert_eq!(rs.reflect_root(&a1, 1).unwrap(), a1.negated());
    }

    #[test]
    fn reflect_fixes_orthogonal_vectors() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        // a6 pairs to zero against a1's coroot, so s_1 fixes it.
        let a6 = rs.simple_root(6).unwrap().to_rat();
        assert_eq!(rs.reflect(&a6, 1).unwrap(), a6);
    }

    #[test]
    fn reflect_is_involutive_on_a_sample() {
        let rs = RootSystem::build(presets::c2()).unwrap();
        let v = vec![ratio(3, 2), ratio(-5, 7)];
        for k in 1..=2 {
            let w = rs.reflect(&v, k).unwrap();
            assert_eq!(rs.reflect(&w, k).unwrap(), v);
        }
    }

    #[test]
    fn reflect_index_out_of_range() {
        let rs = RootSystem::build(presets::a1()).unwrap();
        assert!(matches!(
            rs.reflect(&[rat(1)], 2),
            Err(RootSystemError::IndexOutOfRange { index: 2, rank: 1 })
        ));
        assert!(matches!(
            rs.reflect(&[rat(1)], 0),
            Err(RootSystemError::IndexOutOfRange { index: 0, rank: 1 })
        ));
    }

    #[test]
    fn bound_guard_trips() {
        let err = RootSystem::build_with_bound(presets::e6_bourbaki(), 10).unwrap_err();
        assert!(matches!(err, RootSystemError::NonFiniteType { bound: 10 }));
    }

    #[test]
    fn invalid_spec_reported_before_enumeration() {
        let mut spec = presets::a2();
        spec.matrix[0][1] = 1;
        assert!(matches!(
            RootSystem::build(spec),
            Err(RootSystemError::InvalidCartan(_))
        ));
    }

    #[test]
    fn coordinate_changes_are_mutually_inverse() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        let c = vec![rat(1), rat(-2), rat(0), ratio(1, 3), rat(5), rat(0)];
        let u = rs.root_to_weight_coords(&c).unwrap();
        assert_eq!(rs.weight_to_root_coords(&u).unwrap(), c);
    }

    #[test]
    fn mod2_grading_splits_e6_roots() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        let nc = rs.spec().noncompact_indices();
        let compact = rs.roots().iter().filter(|r| r.is_compact_mod2(&nc)).count();
        assert_eq!(compact, 40);
        assert_eq!(rs.count() - compact, 32);
    }
}
