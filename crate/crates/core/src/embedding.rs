//! The non-compact subsystem `{a1, a6, a1+a6, 2a1+a6}` and its tabulated
//! map into the C2 root system, together with exact verification of every
//! numeric assertion attached to that table.
//!
//! The map is a finite lookup: `a1 -> nu1`, `a6 -> nu2`,
//! `a1+a6 -> nu1+nu2`, `2a1+a6 -> 2nu1+nu2`, with `nu1 = (1,0)` and
//! `nu2 = (0,1)` in C2 simple-root coordinates. Whether the tabulated
//! relations actually hold inside a given rank-6 root system is a question
//! for [`subsystem_membership`] and [`verify_embedding_claims`] — failures
//! come back as verdicts, never as crashes.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::ledger::{ClaimRecord, Verdict};
use crate::presets;
use crate::rat::{format_rat, rat, sign, Rat};
use crate::roots::{RootSystem, RootVector};

/// One of the four tabulated elements of the non-compact subsystem, as an
/// integer combination of the simple roots `a1` and `a6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubsystemElement {
    Alpha1,
    Alpha6,
    Alpha1PlusAlpha6,
    TwoAlpha1PlusAlpha6,
}

impl SubsystemElement {
    pub const ALL: [SubsystemElement; 4] = [
        SubsystemElement::Alpha1,
        SubsystemElement::Alpha6,
        SubsystemElement::Alpha1PlusAlpha6,
        SubsystemElement::TwoAlpha1PlusAlpha6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubsystemElement::Alpha1 => "a1",
            SubsystemElement::Alpha6 => "a6",
            SubsystemElement::Alpha1PlusAlpha6 => "a1+a6",
            SubsystemElement::TwoAlpha1PlusAlpha6 => "2a1+a6",
        }
    }

    /// Coefficients `(x, y)` of `x*a1 + y*a6`.
    fn coefficients(self) -> (i64, i64) {
        match self {
            SubsystemElement::Alpha1 => (1, 0),
            SubsystemElement::Alpha6 => (0, 1),
            SubsystemElement::Alpha1PlusAlpha6 => (1, 1),
            SubsystemElement::TwoAlpha1PlusAlpha6 => (2, 1),
        }
    }

    /// The element as a vector in rank-6 simple-root coordinates.
    pub fn vector(self) -> Vec<i64> {
        let (x, y) = self.coefficients();
        vec![x, 0, 0, 0, 0, y]
    }
}

impl core::fmt::Display for SubsystemElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("vector {coords:?} is not one of the four tabulated subsystem elements")]
    NotInDomain { coords: Vec<i64> },
}

/// The fixed four-entry table from subsystem elements to C2 roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingTable {
    entries: [(SubsystemElement, RootVector); 4],
}

impl EmbeddingTable {
    pub fn shipped() -> Self {
        let img = |x: i64, y: i64| RootVector::new(vec![x, y]);
        EmbeddingTable {
            entries: [
                (SubsystemElement::Alpha1, img(1, 0)),
                (SubsystemElement::Alpha6, img(0, 1)),
                (SubsystemElement::Alpha1PlusAlpha6, img(1, 1)),
                (SubsystemElement::TwoAlpha1PlusAlpha6, img(2, 1)),
            ],
        }
    }

    /// Image of a tabulated element; total on the four-element domain.
    pub fn image(&self, e: SubsystemElement) -> &RootVector {
        &self
            .entries
            .iter()
            .find(|(el, _)| *el == e)
            .expect("table is total on SubsystemElement")
            .1
    }

    /// Image of an arbitrary rank-6 vector, or `NotInDomain` when it is not
    /// one of the four tabulated elements.
    pub fn image_of_vector(&self, coords: &[i64]) -> Result<RootVector, EmbeddingError> {
        for (el, image) in &self.entries {
            if el.vector() == coords {
                return Ok(image.clone());
            }
        }
        Err(EmbeddingError::NotInDomain {
            coords: coords.to_vec(),
        })
    }

    pub fn entries(&self) -> &[(SubsystemElement, RootVector)] {
        &self.entries
    }
}

/// The tabulated image of a subsystem element in C2 simple-root coordinates.
pub fn phi_map(e: SubsystemElement) -> RootVector {
    EmbeddingTable::shipped().image(e).clone()
}

/// Membership data for one subsystem element inside a given root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipEntry {
    pub element: SubsystemElement,
    pub vector: Vec<i64>,
    pub is_root: bool,
    pub length_sq: Rat,
}

/// Per-element membership report for the four subsystem elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub entries: Vec<MembershipEntry>,
}

impl MembershipReport {
    pub fn entry(&self, e: SubsystemElement) -> &MembershipEntry {
        self.entries
            .iter()
            .find(|x| x.element == e)
            .expect("report covers all four elements")
    }
}

/// For each tabulated element: is it a root of `rs`, and what is its exact
/// squared length under the system's form? `rs` must have rank 6.
pub fn subsystem_membership(rs: &RootSystem) -> MembershipReport {
    assert_eq!(rs.rank(), 6, "subsystem elements live in a rank-6 system");
    let entries = SubsystemElement::ALL
        .iter()
        .map(|&e| {
            let v = e.vector();
            MembershipEntry {
                element: e,
                vector: v.clone(),
                is_root: rs.contains(&v),
                length_sq: rs.bilinear_int(&v, &v),
            }
        })
        .collect();
    MembershipReport { entries }
}

/// Exact angle data `(sign of inner product, cos^2)`, with the standard
/// crystallographic angles named in degrees.
pub fn angle_description(inner: &Rat, len_sq_a: &Rat, len_sq_b: &Rat) -> String {
    if len_sq_a.is_zero() || len_sq_b.is_zero() {
        return "undefined (zero vector)".to_string();
    }
    let cos_sq = (inner * inner) / (len_sq_a * len_sq_b);
    let named = match (sign(inner), format_rat(&cos_sq).as_str()) {
        (0, _) => Some("90deg"),
        (1, "1/4") => Some("60deg"),
        (-1, "1/4") => Some("120deg"),
        (1, "1/2") => Some("45deg"),
        (-1, "1/2") => Some("135deg"),
        (1, "3/4") => Some("30deg"),
        (-1, "3/4") => Some("150deg"),
        (1, "1") => Some("0deg"),
        (-1, "1") => Some("180deg"),
        _ => None,
    };
    match named {
        Some(deg) => deg.to_string(),
        None => format!(
            "cos^2 = {}, inner product {}",
            format_rat(&cos_sq),
            if inner.is_positive() { "positive" } else { "negative" }
        ),
    }
}

fn record(id: &str, anchor: &str, claimed: &str, computed: &str, notes: &str) -> ClaimRecord {
    ClaimRecord {
        id: id.to_string(),
        anchor: anchor.to_string(),
        claimed: claimed.to_string(),
        computed: computed.to_string(),
        verdict: if claimed == computed {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        notes: notes.to_string(),
    }
}

/// Evaluate the six numeric assertions attached to the subsystem table
/// against `rs` (a rank-6 system) and the bundled C2 system. Always returns
/// exactly six records with definite verdicts, in a fixed order.
pub fn verify_embedding_claims(rs: &RootSystem) -> Vec<ClaimRecord> {
    assert_eq!(rs.rank(), 6, "embedding claims are about a rank-6 system");
    let membership = subsystem_membership(rs);
    let a1 = SubsystemElement::Alpha1.vector();
    let a6 = SubsystemElement::Alpha6.vector();
    let inner = rs.bilinear_int(&a1, &a6);
    let len_a1 = rs.bilinear_int(&a1, &a1);
    let len_a6 = rs.bilinear_int(&a6, &a6);

    let mut out = Vec::with_capacity(6);

    out.push(record(
        "emb-i",
        "Definition 1, \"<a1, a6> = -1 = <nu1, nu2>\"",
        "-1",
        &format_rat(&inner),
        "inner product of the simple roots a1 and a6 under the symmetrized form",
    ));

    out.push(record(
        "emb-ii",
        "Definition 1, \"The angle between a1 and a6 is 120 degrees\"",
        "120deg",
        &angle_description(&inner, &len_a1, &len_a6),
        "exact comparison via cos^2 and the sign of the inner product",
    ));

    let sum = membership.entry(SubsystemElement::Alpha1PlusAlpha6);
    out.push(record(
        "emb-iii",
        "Definition 1, \"a1+a6 is a medium root (length sqrt(6))\"",
        "root with length^2 = 6",
        &describe_membership(sum),
        "",
    ));

    let double = membership.entry(SubsystemElement::TwoAlpha1PlusAlpha6);
    out.push(record(
        "emb-iv",
        "Definition 1, \"2a1+a6 is a long root (length 2*sqrt(2))\"",
        "root with length^2 = 8",
        &describe_membership(double),
        "",
    ));

    let c2 = RootSystem::build(presets::c2()).expect("bundled C2 preset is valid");
    let nu1 = c2.simple_root(1).unwrap();
    let nu2 = c2.simple_root(2).unwrap();
    let c2_inner = c2.bilinear_int(nu1.coords(), nu2.coords());
    let c2_angle = angle_description(&c2_inner, &c2.length_sq(&nu1), &c2.length_sq(&nu2));
    out.push(record(
        "emb-v",
        "Definition 1, \"consistent with the angle between nu1 (short) and nu2 (long) in the C2 root system\"",
        "120deg",
        &c2_angle,
        "angle between the C2 simple roots under the standard C2 form",
    ));

    // Internal consistency: expand |a1+a6|^2 from the claimed Gram values
    // <a1,a1> = 2, <a6,a6> = 2, <a1,a6> = -1 and compare with the claimed 6.
    let expanded = rat(2) + rat(2) + rat(2) * rat(-1);
    out.push(record(
        "emb-vi",
        "Definition 1, \"a1+a6 is a medium root (length sqrt(6))\" against its own \"<a1, a6> = -1\"",
        "6",
        &format_rat(&expanded),
        "length^2 of a1+a6 recomputed as <a1,a1> + <a6,a6> + 2<a1,a6> from the claimed values themselves",
    ));

    out
}

fn describe_membership(entry: &MembershipEntry) -> String {
    format!(
        "{} with length^2 = {}",
        if entry.is_root { "root" } else { "not a root" },
        format_rat(&entry.length_sq)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rat::ratio;
    use crate::roots::RootSystem;

    #[test]
    fn phi_matches_the_table() {
        assert_eq!(phi_map(SubsystemElement::Alpha1).coords(), &[1, 0]);
        assert_eq!(phi_map(SubsystemElement::Alpha6).coords(), &[0, 1]);
        assert_eq!(phi_map(SubsystemElement::Alpha1PlusAlpha6).coords(), &[1, 1]);
        assert_eq!(phi_map(SubsystemElement::TwoAlpha1PlusAlpha6).coords(), &[2, 1]);
    }

    #[test]
    fn phi_is_injective_on_its_domain() {
        let images: Vec<RootVector> =
            SubsystemElement::ALL.iter().map(|&e| phi_map(e)).collect();
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                assert_ne!(images[i], images[j]);
            }
        }
    }

    #[test]
    fn phi_respects_the_tabulated_additive_relations() {
        let add = |a: &RootVector, b: &RootVector| -> Vec<i64> {
            a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect()
        };
        let nu1 = phi_map(SubsystemElement::Alpha1);
        let nu2 = phi_map(SubsystemElement::Alpha6);
        assert_eq!(
            phi_map(SubsystemElement::Alpha1PlusAlpha6).coords(),
            add(&nu1, &nu2)
        );
        let two_nu1 = RootVector::new(nu1.coords().iter().map(|c| 2 * c).collect());
        assert_eq!(
            phi_map(SubsystemElement::TwoAlpha1PlusAlpha6).coords(),
            add(&two_nu1, &nu2)
        );
    }

    #[test]
    fn phi_images_are_genuine_c2_roots() {
        let c2 = RootSystem::build(presets::c2()).unwrap();
        for e in SubsystemElement::ALL {
            assert!(c2.contains(phi_map(e).coords()), "{e}");
        }
    }

    #[test]
    fn vector_queries_outside_the_table_are_rejected() {
        let table = EmbeddingTable::shipped();
        // a3 is a compact simple root, excluded by construction.
        let a3 = [0, 0, 1, 0, 0, 0];
        assert!(matches!(
            table.image_of_vector(&a3),
            Err(EmbeddingError::NotInDomain { .. })
        ));
        assert_eq!(
            table.image_of_vector(&[1, 0, 0, 0, 0, 0]).unwrap().coords(),
            &[1, 0]
        );
    }

    #[test]
    fn membership_on_the_standard_preset() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        let report = subsystem_membership(&rs);
        let a1 = report.entry(SubsystemElement::Alpha1);
        assert!(a1.is_root);
        assert_eq!(a1.length_sq, rat(2));
        let sum = report.entry(SubsystemElement::Alpha1PlusAlpha6);
        assert!(!sum.is_root);
        assert_eq!(sum.length_sq, rat(4));
        let double = report.entry(SubsystemElement::TwoAlpha1PlusAlpha6);
        assert!(!double.is_root);
        assert_eq!(double.length_sq, rat(10));
        // negation closure mirrors membership
        assert_eq!(rs.contains(&[-1, 0, 0, 0, 0, 0]), a1.is_root);
    }

    #[test]
    fn claims_have_fixed_order_and_pinned_verdicts() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        let claims = verify_embedding_claims(&rs);
        let ids: Vec<&str> = claims.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["emb-i", "emb-ii", "emb-iii", "emb-iv", "emb-v", "emb-vi"]);
        for c in &claims {
            assert_ne!(c.verdict, Verdict::NotApplicable);
            assert!(!c.anchor.is_empty());
        }
        // All six fail on the standard preset, with these computed values.
        assert_eq!(claims[0].computed, "0");
        assert_eq!(claims[1].computed, "90deg");
        assert_eq!(claims[2].computed, "not a root with length^2 = 4");
        assert_eq!(claims[3].computed, "not a root with length^2 = 10");
        assert_eq!(claims[4].computed, "135deg");
        assert_eq!(claims[5].computed, "2");
        assert!(claims.iter().all(|c| c.verdict == Verdict::Fail));
    }

    #[test]
    fn claims_are_deterministic() {
        let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
        assert_eq!(verify_embedding_claims(&rs), verify_embedding_claims(&rs));
    }

    #[test]
    fn angle_naming_covers_the_crystallographic_cases() {
        assert_eq!(angle_description(&rat(0), &rat(2), &rat(2)), "90deg");
        assert_eq!(angle_description(&rat(-1), &rat(2), &rat(2)), "120deg");
        assert_eq!(angle_description(&rat(-2), &rat(2), &rat(4)), "135deg");
        assert_eq!(angle_description(&rat(-3), &rat(2), &rat(6)), "150deg");
        assert_eq!(angle_description(&rat(1), &rat(2), &rat(2)), "60deg");
        // an angle outside the crystallographic table
        assert_eq!(
            angle_description(&ratio(1, 3), &rat(1), &rat(1)),
            "cos^2 = 1/9, inner product positive"
        );
    }
}
