//! Weight lattices in fundamental-weight coordinates, the theta projection
//! with its kernel certificate, compact-Weyl averaging, and the compact
//! compensation term.
//!
//! A weight is a rational vector in the fundamental-weight basis of a named
//! lattice. Fundamental weights are dual to the simple coroots,
//! `<w_i, a_j^vee> = delta_ij`, so pairing a weight against a simple coroot
//! just reads off a coordinate — which is what makes the compensation term
//! and the kernel structure of the theta map exactly computable.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cartan::NodeLabel;
use crate::linalg;
use crate::rat::{rat, Rat};
use crate::roots::RootSystem;
use crate::snf;
use crate::weyl::WeylGroup;

/// Lattice id for the rank-6 source side.
pub const LATTICE_E6: &str = "P(E6)";
/// Lattice id for the rank-2 target side.
pub const LATTICE_SP4: &str = "P(Sp4)";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("weight belongs to lattice {found:?}, expected {expected:?}")]
    LatticeMismatch { expected: String, found: String },
    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A rational vector in the fundamental-weight basis of a named lattice.
/// Serializes with coordinates in the canonical `p/q` string form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Weight {
    pub lattice: String,
    #[serde(with = "crate::rat::rat_vec_serde")]
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn new(lattice: &str, coords: Vec<Rat>) -> Self {
        Weight {
            lattice: lattice.to_string(),
            coords,
        }
    }

    pub fn zero(lattice: &str, rank: usize) -> Self {
        Weight::new(lattice, vec![Rat::zero(); rank])
    }

    /// The fundamental weight `w_k` (1-based).
    pub fn fundamental(lattice: &str, rank: usize, k: usize) -> Self {
        let mut coords = vec![Rat::zero(); rank];
        coords[k - 1] = Rat::one();
        Weight::new(lattice, coords)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(Rat::is_integer)
    }

    /// All coordinates nonnegative (the dominance test in this basis).
    pub fn is_dominant(&self) -> bool {
        use num_traits::Signed;
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// Pairing against the simple coroot `a_k^vee`; by duality this is the
    /// k-th coordinate. `k` is 1-based.
    pub fn pair_coroot(&self, k: usize) -> Result<Rat, WeightError> {
        if k == 0 || k > self.rank() {
            return Err(WeightError::IndexOutOfRange {
                index: k,
                rank: self.rank(),
            });
        }
        Ok(self.coords[k - 1].clone())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.lattice, other.lattice);
        assert_eq!(self.rank(), other.rank());
        Weight::new(
            &self.lattice,
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.lattice, other.lattice);
        assert_eq!(self.rank(), other.rank());
        Weight::new(
            &self.lattice,
            self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn scale(&self, factor: &Rat) -> Weight {
        Weight::new(
            &self.lattice,
            self.coords.iter().map(|c| c * factor).collect(),
        )
    }
}

/// A weight split into its noncompact- and compact-supported parts.
/// The two parts have disjoint support and sum back to the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub noncompact_part: Weight,
    pub compact_part: Weight,
}

/// Coordinate-wise split of a weight by node label.
pub fn decompose(
    weight: &Weight,
    labels: &[NodeLabel],
) -> Result<WeightDecomposition, WeightError> {
    if labels.len() != weight.rank() {
        return Err(WeightError::DimensionMismatch {
            expected: weight.rank(),
            got: labels.len(),
        });
    }
    let mut noncompact = vec![Rat::zero(); weight.rank()];
    let mut compact = vec![Rat::zero(); weight.rank()];
    for (i, c) in weight.coords.iter().enumerate() {
        match labels[i] {
            NodeLabel::Noncompact => noncompact[i] = c.clone(),
            NodeLabel::Compact => compact[i] = c.clone(),
        }
    }
    Ok(WeightDecomposition {
        noncompact_part: Weight::new(&weight.lattice, noncompact),
        compact_part: Weight::new(&weight.lattice, compact),
    })
}

/// Compensation term: the sum of squared pairings of `weight` against the
/// compact simple coroots (1-based `compact_indices`). Nonnegative, and
/// zero exactly when the compact part of the weight vanishes.
pub fn compensation(weight: &Weight, compact_indices: &[usize]) -> Result<Rat, WeightError> {
    let mut acc = Rat::zero();
    for &k in compact_indices {
        let p = weight.pair_coroot(k)?;
        acc += &p * &p;
    }
    Ok(acc)
}

/// A lattice homomorphism given by the images of the source fundamental
/// weights. The shipped instance sends `w1 -> w'1`, `w6 -> w'2`, and the
/// compact fundamentals `w2..w5` to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaMap {
    pub source: String,
    pub target: String,
    /// `basis_images[k]` is the image of source fundamental weight `k+1`,
    /// in target fundamental-weight coordinates.
    pub basis_images: Vec<Vec<Rat>>,
}

impl ThetaMap {
    pub fn new(source: &str, target: &str, basis_images: Vec<Vec<Rat>>) -> Self {
        ThetaMap {
            source: source.to_string(),
            target: target.to_string(),
            basis_images,
        }
    }

    /// The shipped rank-6 to rank-2 projection.
    pub fn e6_to_sp4() -> Self {
        let zero = || vec![Rat::zero(), Rat::zero()];
        ThetaMap::new(
            LATTICE_E6,
            LATTICE_SP4,
            vec![
                vec![Rat::one(), Rat::zero()], // w1 -> w'1
                zero(),
                zero(),
                zero(),
                zero(),
                vec![Rat::zero(), Rat::one()], // w6 -> w'2
            ],
        )
    }

    /// Identity map on a lattice (its kernel is trivial).
    pub fn identity(lattice: &str, rank: usize) -> Self {
        let images = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        ThetaMap::new(lattice, lattice, images)
    }

    pub fn source_rank(&self) -> usize {
        self.basis_images.len()
    }

    pub fn target_rank(&self) -> usize {
        self.basis_images.first().map_or(0, Vec::len)
    }

    /// Linear extension of the basis images.
    pub fn project(&self, weight: &Weight) -> Result<Weight, WeightError> {
        if weight.lattice != self.source {
            return Err(WeightError::LatticeMismatch {
                expected: self.source.clone(),
                found: weight.lattice.clone(),
            });
        }
        if weight.rank() != self.source_rank() {
            return Err(WeightError::DimensionMismatch {
                expected: self.source_rank(),
                got: weight.rank(),
            });
        }
        let mut out = vec![Rat::zero(); self.target_rank()];
        for (c, image) in weight.coords.iter().zip(&self.basis_images) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(image) {
                *o = &*o + &(c * x);
            }
        }
        Ok(Weight::new(&self.target, out))
    }

    /// The map's matrix with basis images as columns (target_rank rows).
    pub fn matrix(&self) -> Vec<Vec<Rat>> {
        let rows = self.target_rank();
        let cols = self.source_rank();
        (0..rows)
            .map(|r| (0..cols).map(|c| self.basis_images[c][r].clone()).collect())
            .collect()
    }
}

/// Kernel data for a [`ThetaMap`], with the rank bookkeeping that certifies
/// the induced quotient map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelCertificate {
    /// An integral basis of the kernel lattice, as source weights.
    pub basis: Vec<Weight>,
    pub source_rank: usize,
    pub kernel_rank: usize,
    pub image_rank: usize,
    pub target_rank: usize,
    /// `source_rank - kernel_rank == target_rank`: the quotient has the
    /// rank of the target.
    pub quotient_rank_matches_target: bool,
    /// Every elementary divisor is 1: the image is the full target lattice,
    /// so the quotient map is an isomorphism onto it.
    pub image_is_full_lattice: bool,
}

/// Integral kernel basis of the map, computed by Smith normal form of the
/// integerized matrix (clearing denominators does not change the kernel).
pub fn kernel_basis(map: &ThetaMap) -> KernelCertificate {
    let source_rank = map.source_rank();
    let target_rank = map.target_rank();
    let m = map.matrix();
    // Common denominator per matrix; entries are tiny here.
    let mut denom = BigInt::one();
    for row in &m {
        for x in row {
            denom = num_integer::lcm(denom.clone(), x.denom().clone());
        }
    }
    let int_matrix: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let scaled = x * Rat::from_integer(denom.clone());
                    scaled.to_integer()
                })
                .collect()
        })
        .collect();
    let snf_data = snf::smith_normal_form(&int_matrix);
    let kernel = snf::integer_kernel_basis(&int_matrix);
    let image_rank = snf_data.rank;
    let kernel_rank = kernel.len();
    let basis: Vec<Weight> = kernel
        .into_iter()
        .map(|v| {
            Weight::new(
                &map.source,
                v.into_iter().map(Rat::from_integer).collect(),
            )
        })
        .collect();
    // The divisors of the scaled matrix are denom * (divisors of the map);
    // the image is the full target lattice iff each divisor equals denom.
    let image_is_full_lattice = image_rank == target_rank
        && snf_data.divisors.iter().all(|d| *d == denom);
    KernelCertificate {
        basis,
        source_rank,
        kernel_rank,
        image_rank,
        target_rank,
        quotient_rank_matches_target: source_rank - kernel_rank == target_rank,
        image_is_full_lattice,
    }
}

/// The averaging operator of a finite reflection group: the exact mean of
/// the group action, precomputed as a single matrix on fundamental-weight
/// coordinates. Applying it projects onto the subspace fixed by the group.
#[derive(Debug, Clone)]
pub struct AveragingOperator {
    matrix: Vec<Vec<Rat>>,
    order: usize,
}

impl AveragingOperator {
    /// Average of all elements of `group`, conjugated into the
    /// fundamental-weight basis: `A (1/|W| sum M_w) A^{-1}`.
    pub fn new(group: &WeylGroup, rs: &RootSystem) -> Self {
        let n = rs.rank();
        let order = group.order();
        let mut sum = vec![vec![Rat::zero(); n]; n];
        for element in group.elements() {
            let m = group.element_matrix(rs, element);
            for i in 0..n {
                for j in 0..n {
                    sum[i][j] += rat(m[i][j]);
                }
            }
        }
        let scale = Rat::new(BigInt::one(), BigInt::from(order));
        for row in sum.iter_mut() {
            for x in row.iter_mut() {
                *x = &*x * &scale;
            }
        }
        let cartan = linalg::from_int(&rs.spec().matrix);
        let matrix = linalg::mat_mul(&linalg::mat_mul(&cartan, &sum), rs.inverse_cartan());
        AveragingOperator { matrix, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Apply to fundamental-weight coordinates.
    pub fn apply(&self, coords: &[Rat]) -> Vec<Rat> {
        linalg::mat_vec(&self.matrix, coords)
    }

    /// The operator's matrix on fundamental-weight coordinates.
    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }
}

/// Exact group average of `weight` under `group` (typically the compact
/// Weyl group). Returns fundamental-weight coordinates. The result is fixed
/// by every element of the group.
pub fn compact_average(
    weight: &Weight,
    group: &WeylGroup,
    rs: &RootSystem,
) -> Result<Vec<Rat>, WeightError> {
    if weight.rank() != rs.rank() {
        return Err(WeightError::DimensionMismatch {
            expected: rs.rank(),
            got: weight.rank(),
        });
    }
    Ok(AveragingOperator::new(group, rs).apply(&weight.coords))
}

/// Render a weight as `c1*w1 + ...` over a named generator symbol; used in
/// reports. Zero renders as `"0"`.
pub fn format_weight_combination(coords: &[Rat], symbol: &str) -> String {
    let mut parts = Vec::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = i + 1;
        if c.is_one() {
            parts.push(format!("{symbol}{k}"));
        } else {
            parts.push(format!("{}*{symbol}{k}", crate::rat::format_rat(c)));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}
