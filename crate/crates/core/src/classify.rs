//! Finite parameter descriptors and their restriction to the rank-2 side.
//!
//! A descriptor is the computable surrogate for a representation
//! parameter: a series tag (discrete / principal / complementary), a
//! dominant weight, and — depending on the series — a continuous vector
//! over the noncompact nodes or a deformation parameter `t` in `(0, 1)`.
//!
//! Restriction applies the theta projection to the weight, preserves the
//! series tag, maps the continuous part coordinate-wise through theta, and
//! for complementary descriptors records the compensation scale
//! symbolically as its exponent `-C(lambda) * kappa(t)`.
//!
//! The injectivity scan compares restriction images pairwise over a finite
//! family and partitions every collision into "kernel-explained" (the
//! inputs differ only by a kernel element of the weight, all other fields
//! equal) or "unexplained" (anything else). For the shipped map the
//! unexplained class is provably empty; the scan checks it anyway.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::kappa::{KappaError, KappaRule};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::snf;
use crate::weights::{self, ThetaMap, Weight, WeightError};

/// The two groups descriptors can belong to. Closed by design: the
/// pipeline is the rank-6 to rank-2 reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    #[serde(rename = "E6m14")]
    E6m14,
    #[serde(rename = "Sp4")]
    Sp4,
}

impl GroupId {
    pub fn lattice(self) -> &'static str {
        match self {
            GroupId::E6m14 => weights::LATTICE_E6,
            GroupId::Sp4 => weights::LATTICE_SP4,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            GroupId::E6m14 => 6,
            GroupId::Sp4 => 2,
        }
    }

    /// 1-based noncompact node indices.
    pub fn noncompact_indices(self) -> &'static [usize] {
        match self {
            GroupId::E6m14 => &[1, 6],
            GroupId::Sp4 => &[1, 2],
        }
    }

    /// 1-based compact node indices.
    pub fn compact_indices(self) -> &'static [usize] {
        match self {
            GroupId::E6m14 => &[2, 3, 4, 5],
            GroupId::Sp4 => &[],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GroupId::E6m14 => "E6m14",
            GroupId::Sp4 => "Sp4",
        }
    }
}

/// Representation series tag. [`series_type_map`] is the identity on this
/// set: restriction preserves the tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Series {
    Discrete,
    Principal,
    Complementary,
}

impl Series {
    pub const ALL: [Series; 3] = [Series::Discrete, Series::Principal, Series::Complementary];

    pub fn as_str(self) -> &'static str {
        match self {
            Series::Discrete => "discrete",
            Series::Principal => "principal",
            Series::Complementary => "complementary",
        }
    }
}

/// The series tag carried through restriction: discrete maps to discrete,
/// principal to principal, complementary to complementary.
pub fn series_type_map(series: Series) -> Series {
    series
}

/// Descriptor validation failure, carrying the offending field path.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct DescriptorError {
    pub path: String,
    pub message: String,
}

impl DescriptorError {
    fn new(path: &str, message: String) -> Self {
        DescriptorError {
            path: path.to_string(),
            message,
        }
    }
}

/// A finite surrogate for a representation parameter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParameterDescriptor {
    pub group: GroupId,
    pub series: Series,
    pub weight: Weight,
    /// Present exactly when `series == Principal`; one entry per noncompact
    /// node of the group.
    pub continuous: Option<Vec<Rat>>,
    /// Present exactly when `series == Complementary`; must lie in (0, 1).
    pub t: Option<Rat>,
}

impl ParameterDescriptor {
    pub fn discrete(group: GroupId, weight_coords: Vec<Rat>) -> Self {
        ParameterDescriptor {
            group,
            series: Series::Discrete,
            weight: Weight::new(group.lattice(), weight_coords),
            continuous: None,
            t: None,
        }
    }

    pub fn principal(group: GroupId, weight_coords: Vec<Rat>, continuous: Vec<Rat>) -> Self {
        ParameterDescriptor {
            group,
            series: Series::Principal,
            weight: Weight::new(group.lattice(), weight_coords),
            continuous: Some(continuous),
            t: None,
        }
    }

    pub fn complementary(group: GroupId, weight_coords: Vec<Rat>, t: Rat) -> Self {
        ParameterDescriptor {
            group,
            series: Series::Complementary,
            weight: Weight::new(group.lattice(), weight_coords),
            continuous: None,
            t: Some(t),
        }
    }

    /// Structural validity: lattice and length bookkeeping, field presence
    /// matching the series, `t` in the open unit interval, dominance, and
    /// integrality for discrete weights.
    pub fn validate(&self) -> Result<(), DescriptorError> {
        let rank = self.group.rank();
        if self.weight.lattice != self.group.lattice() {
            return Err(DescriptorError::new(
                "weight",
                format!(
                    "lattice {:?} does not match group {} (expected {:?})",
                    self.weight.lattice,
                    self.group.as_str(),
                    self.group.lattice()
                ),
            ));
        }
        if self.weight.rank() != rank {
            return Err(DescriptorError::new(
                "weight",
                format!(
                    "expected {rank} coordinates for group {}, got {}",
                    self.group.as_str(),
                    self.weight.rank()
                ),
            ));
        }
        if !self.weight.is_dominant() {
            return Err(DescriptorError::new(
                "weight",
                "coordinates must be nonnegative (dominant)".to_string(),
            ));
        }
        match self.series {
            Series::Discrete => {
                if !self.weight.is_integral() {
                    return Err(DescriptorError::new(
                        "weight",
                        "discrete series requires integral coordinates".to_string(),
                    ));
                }
            }
            Series::Principal => {}
            Series::Complementary => {}
        }
        match (&self.continuous, self.series) {
            (Some(_), Series::Principal) | (None, Series::Discrete | Series::Complementary) => {}
            (Some(_), _) => {
                return Err(DescriptorError::new(
                    "continuous",
                    "must be present exactly when series = principal".to_string(),
                ));
            }
            (None, Series::Principal) => {
                return Err(DescriptorError::new(
                    "continuous",
                    "required when series = principal".to_string(),
                ));
            }
        }
        if let Some(c) = &self.continuous {
            let expected = self.group.noncompact_indices().len();
            if c.len() != expected {
                return Err(DescriptorError::new(
                    "continuous",
                    format!(
                        "expected {expected} entries (one per noncompact node {:?}), got {}",
                        self.group.noncompact_indices(),
                        c.len()
                    ),
                ));
            }
        }
        match (&self.t, self.series) {
            (Some(_), Series::Complementary) | (None, Series::Discrete | Series::Principal) => {}
            (Some(_), _) => {
                return Err(DescriptorError::new(
                    "t",
                    "must be present exactly when series = complementary".to_string(),
                ));
            }
            (None, Series::Complementary) => {
                return Err(DescriptorError::new(
                    "t",
                    "required when series = complementary".to_string(),
                ));
            }
        }
        if let Some(t) = &self.t {
            if !(t.is_positive() && *t < Rat::one()) {
                return Err(DescriptorError::new(
                    "t",
                    format!(
                        "must lie in the open interval (0,1), got {}",
                        format_rat(t)
                    ),
                ));
            }
        }
        Ok(())
    }

    /// Regularity surrogate for discrete descriptors: strictly positive
    /// coordinates on the noncompact nodes. Advisory only — scans and
    /// restriction accept non-regular discrete descriptors; this predicate
    /// flags the ones standing in for genuinely regular parameters.
    pub fn is_regular(&self) -> bool {
        match self.series {
            Series::Discrete => self
                .group
                .noncompact_indices()
                .iter()
                .all(|&k| self.weight.coords[k - 1].is_positive()),
            _ => true,
        }
    }
}

/// Wire form: weight as a bare coordinate array (the lattice is implied by
/// the group), rationals as canonical strings.
#[derive(Serialize, Deserialize)]
struct DescriptorWire {
    group: GroupId,
    series: Series,
    weight: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    continuous: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<String>,
}

impl Serialize for ParameterDescriptor {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        DescriptorWire {
            group: self.group,
            series: self.series,
            weight: self.weight.coords.iter().map(format_rat).collect(),
            continuous: self
                .continuous
                .as_ref()
                .map(|v| v.iter().map(format_rat).collect()),
            t: self.t.as_ref().map(format_rat),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ParameterDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = DescriptorWire::deserialize(de)?;
        let parse_vec = |field: &str, v: &[String]| -> Result<Vec<Rat>, D::Error> {
            v.iter()
                .enumerate()
                .map(|(i, s)| {
                    parse_rat(s).map_err(|e| D::Error::custom(format!("{field}[{i}]: {e}")))
                })
                .collect()
        };
        let weight = parse_vec("weight", &wire.weight)?;
        let continuous = match &wire.continuous {
            None => None,
            Some(v) => Some(parse_vec("continuous", v)?),
        };
        let t = match &wire.t {
            None => None,
            Some(s) => Some(parse_rat(s).map_err(|e| D::Error::custom(format!("t: {e}")))?),
        };
        Ok(ParameterDescriptor {
            group: wire.group,
            series: wire.series,
            weight: Weight::new(wire.group.lattice(), weight),
            continuous,
            t,
        })
    }
}

/// True exactly for discrete descriptors; the checkable stand-in for
/// "the parameter is elliptic". Commutes with restriction.
pub fn is_elliptic_surrogate(d: &ParameterDescriptor) -> bool {
    d.series == Series::Discrete
}

/// The compensation scale attached to a restricted complementary
/// descriptor, stored symbolically through its exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleRecord {
    /// `C(lambda)`: compensation of the source weight.
    #[serde(with = "crate::rat::rat_serde")]
    pub c_value: Rat,
    /// `kappa(t)` under the configured rule.
    #[serde(with = "crate::rat::rat_serde")]
    pub kappa_value: Rat,
    /// `-c_value * kappa_value` exactly.
    #[serde(with = "crate::rat::rat_serde")]
    pub exponent: Rat,
}

/// What restriction kept and what it discarded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    /// The theta image of the source weight (equals the result weight).
    pub theta_image: Weight,
    /// The compact part of the source weight, killed by the projection.
    pub discarded_compact_part: Weight,
}

/// Result of restricting a descriptor to the rank-2 side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionResult {
    pub descriptor: ParameterDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<ScaleRecord>,
    pub provenance: Provenance,
}

/// The theta map and scale rule restriction runs under.
#[derive(Debug, Clone)]
pub struct RestrictionSetting {
    pub map: ThetaMap,
    pub kappa: KappaRule,
}

impl RestrictionSetting {
    /// The shipped pipeline: the rank-6 to rank-2 theta map with
    /// `kappa == 1`.
    pub fn shipped() -> Self {
        RestrictionSetting {
            map: ThetaMap::e6_to_sp4(),
            kappa: KappaRule::One,
        }
    }

    pub fn with_kappa(kappa: KappaRule) -> Self {
        RestrictionSetting {
            map: ThetaMap::e6_to_sp4(),
            kappa,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RestrictError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(#[from] DescriptorError),
    #[error("weight arithmetic failed: {0}")]
    Weight(#[from] WeightError),
    #[error("theta image {coords:?} of a discrete weight is not dominant on the target")]
    NonDominantImage { coords: Vec<String> },
    #[error("kappa rule failed: {0}")]
    Kappa(#[from] KappaError),
}

/// Restrict a rank-6 descriptor through the theta map: the weight is
/// projected, the series tag is preserved, the continuous part (principal)
/// maps coordinate-wise through theta on the noncompact nodes, and the
/// compensation scale (complementary) is recorded symbolically.
pub fn restrict_descriptor(
    d: &ParameterDescriptor,
    setting: &RestrictionSetting,
) -> Result<RestrictionResult, RestrictError> {
    d.validate()?;
    if d.group != GroupId::E6m14 {
        return Err(RestrictError::InvalidDescriptor(DescriptorError::new(
            "group",
            format!("restriction starts from E6m14 descriptors, got {}", d.group.as_str()),
        )));
    }
    let theta_image = setting.map.project(&d.weight)?;
    if d.series == Series::Discrete && !theta_image.is_dominant() {
        return Err(RestrictError::NonDominantImage {
            coords: theta_image.coords.iter().map(format_rat).collect(),
        });
    }

    let continuous = match &d.continuous {
        None => None,
        Some(c) => Some(project_continuous(c, d.group, &setting.map)?),
    };

    let scale = match (&d.t, d.series) {
        (Some(t), Series::Complementary) => {
            let c_value = weights::compensation(&d.weight, d.group.compact_indices())?;
            let kappa_value = setting.kappa.eval(t)?;
            let exponent = -(&c_value * &kappa_value);
            Some(ScaleRecord {
                c_value,
                kappa_value,
                exponent,
            })
        }
        _ => None,
    };

    let labels = e6_labels_for(d.group);
    let decomposition = weights::decompose(&d.weight, &labels)?;

    let descriptor = ParameterDescriptor {
        group: GroupId::Sp4,
        series: series_type_map(d.series),
        weight: theta_image.clone(),
        continuous,
        t: d.t.clone(),
    };
    Ok(RestrictionResult {
        descriptor,
        scale,
        provenance: Provenance {
            theta_image,
            discarded_compact_part: decomposition.compact_part,
        },
    })
}

/// The continuous vector lives over the noncompact nodes; embed it as a
/// weight supported there, project, and read off the target coordinates.
fn project_continuous(
    continuous: &[Rat],
    group: GroupId,
    map: &ThetaMap,
) -> Result<Vec<Rat>, WeightError> {
    let mut coords = vec![Rat::zero(); group.rank()];
    for (value, &k) in continuous.iter().zip(group.noncompact_indices()) {
        coords[k - 1] = value.clone();
    }
    let image = map.project(&Weight::new(group.lattice(), coords))?;
    Ok(image.coords)
}

fn e6_labels_for(group: GroupId) -> Vec<crate::cartan::NodeLabel> {
    use crate::cartan::NodeLabel;
    let compact: Vec<usize> = group.compact_indices().to_vec();
    (1..=group.rank())
        .map(|k| {
            if compact.contains(&k) {
                NodeLabel::Compact
            } else {
                NodeLabel::Noncompact
            }
        })
        .collect()
}

/// One colliding pair of inputs whose restriction images coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionRecord {
    pub left: ParameterDescriptor,
    pub right: ParameterDescriptor,
    /// `left.weight - right.weight` in source coordinates.
    #[serde(with = "crate::rat::rat_vec_serde")]
    pub weight_difference: Vec<Rat>,
    /// Whether the difference lies in the integer span of the kernel basis
    /// (always true for integral-weight families under the shipped map).
    pub difference_in_kernel_lattice: bool,
}

/// Outcome of [`injectivity_scan`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityReport {
    /// Collisions explained by the kernel: equal series/continuous/t and a
    /// weight difference annihilated by theta.
    pub collisions_kernel: Vec<CollisionRecord>,
    /// Everything else. Empty for the shipped map.
    pub collisions_unexplained: Vec<CollisionRecord>,
    pub family_size: usize,
    pub image_count: usize,
}

/// Restrict every descriptor in `family` and compare the images pairwise.
/// The image of a descriptor is its restricted [`ParameterDescriptor`]
/// (series, weight, continuous, t); the scale record is provenance, not
/// identity. Results are deterministic: the family is ordered canonically
/// before comparison.
pub fn injectivity_scan(
    family: &[ParameterDescriptor],
    setting: &RestrictionSetting,
) -> Result<InjectivityReport, RestrictError> {
    let mut sorted: Vec<ParameterDescriptor> = family.to_vec();
    sorted.sort();

    let kernel_cert = weights::kernel_basis(&setting.map);
    let kernel_basis_int: Vec<Vec<BigInt>> = kernel_cert
        .basis
        .iter()
        .map(|w| w.coords.iter().map(|c| c.to_integer()).collect())
        .collect();

    let mut groups: BTreeMap<ParameterDescriptor, Vec<usize>> = BTreeMap::new();
    for (i, d) in sorted.iter().enumerate() {
        let image = restrict_descriptor(d, setting)?.descriptor;
        groups.entry(image).or_default().push(i);
    }

    let mut collisions_kernel = Vec::new();
    let mut collisions_unexplained = Vec::new();
    for indices in groups.values() {
        for (a, &i) in indices.iter().enumerate() {
            for &j in &indices[a + 1..] {
                let left = &sorted[i];
                let right = &sorted[j];
                let diff = crate::rat::vec_sub(&left.weight.coords, &right.weight.coords);
                let theta_kills_diff = setting
                    .map
                    .project(&Weight::new(left.weight.lattice.as_str(), diff.clone()))
                    .map(|w| w.is_zero())
                    .unwrap_or(false);
                let kernel_explained = left.series == right.series
                    && left.continuous == right.continuous
                    && left.t == right.t
                    && theta_kills_diff;
                let record = CollisionRecord {
                    left: left.clone(),
                    right: right.clone(),
                    difference_in_kernel_lattice: snf::integer_span_contains(
                        &kernel_basis_int,
                        &diff,
                    ),
                    weight_difference: diff,
                };
                if kernel_explained {
                    collisions_kernel.push(record);
                } else {
                    collisions_unexplained.push(record);
                }
            }
        }
    }

    Ok(InjectivityReport {
        collisions_kernel,
        collisions_unexplained,
        family_size: sorted.len(),
        image_count: groups.len(),
    })
}

/// Enumerate the descriptor grid used by scans: for each selected series,
/// weights with integer coordinates in `0..=bound` on the 1-based
/// `support` indices and zero elsewhere. Principal descriptors carry a zero
/// continuous vector; complementary ones carry `t = 1/2`.
pub fn descriptor_grid(
    series: &[Series],
    bound: u32,
    support: &[usize],
) -> Result<Vec<ParameterDescriptor>, DescriptorError> {
    let group = GroupId::E6m14;
    let rank = group.rank();
    let mut support: Vec<usize> = support.to_vec();
    support.sort_unstable();
    support.dedup();
    for &k in &support {
        if k == 0 || k > rank {
            return Err(DescriptorError::new(
                "support",
                format!("index {k} out of range 1..={rank}"),
            ));
        }
    }
    let mut weights_grid: Vec<Vec<Rat>> = vec![vec![Rat::zero(); rank]];
    for &k in &support {
        let mut next = Vec::with_capacity(weights_grid.len() * (bound as usize + 1));
        for w in &weights_grid {
            for v in 0..=bound {
                let mut coords = w.clone();
                coords[k - 1] = crate::rat::rat(i64::from(v));
                next.push(coords);
            }
        }
        weights_grid = next;
    }

    let noncompact = group.noncompact_indices().len();
    let mut out = Vec::new();
    for &s in series {
        for coords in &weights_grid {
            let d = match s {
                Series::Discrete => ParameterDescriptor::discrete(group, coords.clone()),
                Series::Principal => ParameterDescriptor::principal(
                    group,
                    coords.clone(),
                    vec![Rat::zero(); noncompact],
                ),
                Series::Complementary => ParameterDescriptor::complementary(
                    group,
                    coords.clone(),
                    crate::rat::ratio(1, 2),
                ),
            };
            out.push(d);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
