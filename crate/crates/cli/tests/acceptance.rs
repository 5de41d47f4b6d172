//! Acceptance suite: one test per criterion, each printing a PASS line when
//! its assertions hold. Every comparison is exact; the only tolerances are
//! the wall-clock budgets on the two enumeration criteria.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lietheta::classify::{
    injectivity_scan, is_elliptic_surrogate, restrict_descriptor, GroupId, ParameterDescriptor,
    RestrictionSetting, Series,
};
use lietheta::ledger::claim_ids;
use lietheta::linalg;
use lietheta::presets;
use lietheta::rat::{rat, Rat};
use lietheta::roots::RootSystem;
use lietheta::snf;
use lietheta::weights::{self, compensation, decompose, AveragingOperator, ThetaMap, Weight};
use lietheta::weyl::{weyl_group, WeylGroup};

fn e6() -> &'static RootSystem {
    static CELL: OnceLock<RootSystem> = OnceLock::new();
    CELL.get_or_init(|| RootSystem::build(presets::e6_bourbaki()).unwrap())
}

fn e6_weyl() -> &'static WeylGroup {
    static CELL: OnceLock<WeylGroup> = OnceLock::new();
    CELL.get_or_init(|| weyl_group(e6(), None).unwrap())
}

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn random_rat(rng: &mut StdRng) -> Rat {
    Rat::new(
        rng.gen_range(-30i64..=30).into(),
        rng.gen_range(1i64..=12).into(),
    )
}

fn random_vec6(rng: &mut StdRng) -> Vec<Rat> {
    (0..6).map(|_| random_rat(rng)).collect()
}

/// Test-local reflection closure, independent of the production search.
fn closure_oracle(matrix: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = matrix.len();
    let mut set: BTreeSet<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    loop {
        let mut next = set.clone();
        for v in &set {
            for k in 0..n {
                let pairing: i64 = matrix[k].iter().zip(v).map(|(&a, &c)| a * c).sum();
                let mut w = v.clone();
                w[k] -= pairing;
                next.insert(w);
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

fn cli(args: &[&str], stdin: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lietheta"));
    cmd.args(args)
        .env_remove("LIETHETA_PRESETS")
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    cmd.stdin(if stdin.is_some() {
        Stdio::piped()
    } else {
        Stdio::null()
    });
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn criterion_1_root_enumeration() {
    let start = Instant::now();
    let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(rs.count(), 72);
    assert!(
        elapsed < Duration::from_secs(1),
        "E6 enumeration took {elapsed:?}"
    );

    for (id, expected) in [("A1", 2usize), ("A2", 6), ("C2", 8), ("G2", 12)] {
        let spec = presets::by_id(id).unwrap();
        let oracle = closure_oracle(&spec.matrix);
        assert_eq!(oracle.len(), expected, "{id} oracle");
        let built = RootSystem::build(spec).unwrap();
        assert_eq!(built.count(), expected, "{id}");
        let produced: BTreeSet<Vec<i64>> =
            built.roots().iter().map(|r| r.coords().to_vec()).collect();
        assert_eq!(produced, oracle, "{id} root sets");
    }
    println!(
        "acceptance criterion 1: PASS (E6 yields 72 roots in {elapsed:?}; A1/A2/C2/G2 = 2/6/8/12 against the closure oracle)"
    );
}

#[test]
fn criterion_2_weyl_order() {
    let rs = RootSystem::build(presets::e6_bourbaki()).unwrap();
    let start = Instant::now();
    let group = weyl_group(&rs, None).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(group.order(), 51_840);
    assert!(
        elapsed < Duration::from_secs(30),
        "E6 Weyl closure took {elapsed:?}"
    );
    println!("acceptance criterion 2: PASS (|W(E6)| = 51840 in {elapsed:?})");
}

#[test]
fn criterion_3_theta_structure() {
    let map = ThetaMap::e6_to_sp4();
    let cert = weights::kernel_basis(&map);
    assert_eq!(cert.kernel_rank, 4);
    assert_eq!(cert.source_rank - cert.kernel_rank, 2);
    assert_eq!(cert.target_rank, 2);
    assert!(cert.quotient_rank_matches_target);
    assert!(cert.image_is_full_lattice);
    let expected: Vec<Vec<lietheta::snf::BigInt>> = (2..=5)
        .map(|k| {
            (1..=6)
                .map(|i| lietheta::snf::BigInt::from(i64::from(i == k)))
                .collect()
        })
        .collect();
    let got: Vec<Vec<lietheta::snf::BigInt>> = cert
        .basis
        .iter()
        .map(|w| {
            assert!(w.is_integral());
            w.coords.iter().map(|c| c.to_integer()).collect()
        })
        .collect();
    assert!(snf::same_integer_lattice(&expected, &got));

    let lam = Weight::new(
        weights::LATTICE_E6,
        (1..=6).map(|k| rat(i64::from(k == 1 || k == 6))).collect(),
    );
    let image = map.project(&lam).unwrap();
    assert_eq!(image.coords, vec![rat(1), rat(1)]);
    assert_eq!(
        compensation(&lam, GroupId::E6m14.compact_indices()).unwrap(),
        rat(0)
    );
    println!(
        "acceptance criterion 3: PASS (kernel = <w2,w3,w4,w5>, quotient rank 2, theta(w1+w6) = w'1+w'2, C(w1+w6) = 0)"
    );
}

#[test]
fn criterion_4_averaging() {
    let rs = e6();
    let wc = weyl_group(rs, Some(&[2, 3, 4, 5])).unwrap();
    let op = AveragingOperator::new(&wc, rs);

    // 20 randomized rational vectors in the compact-root span map to zero.
    let mut r = rng(0x5EED_0004);
    for _ in 0..20 {
        let mut root_coords = vec![rat(0); 6];
        for k in [2usize, 3, 4, 5] {
            root_coords[k - 1] = random_rat(&mut r);
        }
        let u = rs.root_to_weight_coords(&root_coords).unwrap();
        let avg = op.apply(&u);
        assert!(avg.iter().all(|x| x == &rat(0)), "A(v) != 0 for v = {root_coords:?}");
    }

    // the noncompact fundamental weights are fixed exactly
    for k in [1usize, 6] {
        let mut unit = vec![rat(0); 6];
        unit[k - 1] = rat(1);
        assert_eq!(op.apply(&unit), unit, "A(w{k})");
    }

    // idempotent and invariant under every compact generator on 50 inputs
    for _ in 0..50 {
        let v = random_vec6(&mut r);
        let once = op.apply(&v);
        assert_eq!(op.apply(&once), once, "idempotence");
        let root_coords = rs.weight_to_root_coords(&once).unwrap();
        for k in [2usize, 3, 4, 5] {
            let reflected = rs.reflect(&root_coords, k).unwrap();
            assert_eq!(
                rs.root_to_weight_coords(&reflected).unwrap(),
                once,
                "invariance under s_{k}"
            );
        }
    }
    println!(
        "acceptance criterion 4: PASS (A = 0 on 20 compact-span samples; A fixes w1, w6; idempotent and W_c-invariant on 50 samples)"
    );
}

#[test]
fn criterion_5_claim_ledger() {
    let (code, stdout) = cli(&["verify", "--format", "json"], None);
    assert_eq!(code, 1, "known failures must drive exit code 1");
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let records = report["records"].as_array().unwrap();
    let ids: Vec<&str> = records.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, claim_ids(), "all cataloged claims present, in order");

    let verdict = |id: &str| -> &str {
        records
            .iter()
            .find(|r| r["id"] == id)
            .unwrap_or_else(|| panic!("claim {id} missing"))["verdict"]
            .as_str()
            .unwrap()
    };
    for id in ["01", "02", "11", "13", "14"] {
        assert_eq!(verdict(id), "PASS", "claim {id}");
    }
    for id in ["04", "05d", "05f", "06", "07", "08", "10"] {
        assert_eq!(verdict(id), "FAIL", "claim {id}");
    }
    for r in records {
        assert!(!r["anchor"].as_str().unwrap().is_empty());
    }

    let (_, second) = cli(&["verify", "--format", "json"], None);
    assert_eq!(stdout, second, "byte-deterministic report");
    println!(
        "acceptance criterion 5: PASS (21 records for the 16 cataloged claims; pinned verdicts hold; byte-deterministic)"
    );
}

#[test]
fn criterion_6_pipeline_worked_example() {
    let doc = r#"{"group":"E6m14","series":"discrete","weight":["1","0","0","0","0","1"]}"#;
    let (code, stdout) = cli(&["classify"], Some(doc));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["descriptor"]["series"], "discrete");
    assert_eq!(v["descriptor"]["group"], "Sp4");
    assert_eq!(v["descriptor"]["weight"][0], "1");
    assert_eq!(v["descriptor"]["weight"][1], "1");
    assert!(v.get("scale").is_none(), "discrete restriction carries no scale");
    println!(
        "acceptance criterion 6: PASS (discrete w1+w6 restricts to Sp4 discrete weight (1,1) with empty scale)"
    );
}

#[test]
fn criterion_7_injectivity_scan() {
    // support {1,6}, bound 2: 9 descriptors, zero collisions
    let (code, stdout) = cli(
        &["scan", "--series", "discrete", "--bound", "2", "--support", "1,6"],
        None,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["family_size"], 9);
    assert_eq!(v["image_count"], 9);
    assert!(v["collisions_kernel"].as_array().unwrap().is_empty());
    assert!(v["collisions_unexplained"].as_array().unwrap().is_empty());

    // a grid including a compact node: every collision kernel-explained,
    // cross-checked by brute-force pairwise comparison of theta images
    let family = lietheta::classify::descriptor_grid(&[Series::Discrete], 2, &[1, 3, 6]).unwrap();
    assert_eq!(family.len(), 27);
    let report = injectivity_scan(&family, &RestrictionSetting::shipped()).unwrap();
    assert!(report.collisions_unexplained.is_empty());

    let mut brute_pairs = 0usize;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            // theta image of a discrete grid weight is (c1, c6)
            let wi = &family[i].weight.coords;
            let wj = &family[j].weight.coords;
            if wi[0] == wj[0] && wi[5] == wj[5] {
                brute_pairs += 1;
                let diff: Vec<Rat> = wi.iter().zip(wj).map(|(a, b)| a - b).collect();
                assert!(diff[0] == rat(0) && diff[5] == rat(0));
            }
        }
    }
    assert_eq!(
        report.collisions_kernel.len(),
        brute_pairs,
        "scan collisions match brute-force pair count"
    );
    for c in &report.collisions_kernel {
        assert!(c.difference_in_kernel_lattice);
    }
    println!(
        "acceptance criterion 7: PASS (support {{1,6}} bound 2 collision-free; compact-support collisions all kernel-explained, matching {brute_pairs} brute-force pairs)"
    );
}

#[test]
fn criterion_8_property_suites() {
    let theta = ThetaMap::e6_to_sp4();
    let rs = e6();
    let mut r = rng(0x5EED_0008);

    // theta linearity on 100 random pairs
    for _ in 0..100 {
        let x = Weight::new(weights::LATTICE_E6, random_vec6(&mut r));
        let y = Weight::new(weights::LATTICE_E6, random_vec6(&mut r));
        let a = random_rat(&mut r);
        let b = random_rat(&mut r);
        let lhs = theta.project(&x.scale(&a).add(&y.scale(&b))).unwrap();
        let rhs = theta
            .project(&x)
            .unwrap()
            .scale(&a)
            .add(&theta.project(&y).unwrap().scale(&b));
        assert_eq!(lhs, rhs, "theta linearity");
    }

    // reflection involutivity on 50 random vectors
    for _ in 0..50 {
        let v = random_vec6(&mut r);
        let k = r.gen_range(1usize..=6);
        let w = rs.reflect(&v, k).unwrap();
        assert_eq!(rs.reflect(&w, k).unwrap(), v, "involution at node {k}");
    }

    // Weyl form preservation on 100 random (element, x, y) triples
    let group = e6_weyl();
    for _ in 0..100 {
        let element = &group.elements()[r.gen_range(0..group.order())];
        let m = linalg::from_int(&group.element_matrix(rs, element));
        let x = random_vec6(&mut r);
        let y = random_vec6(&mut r);
        let wx = linalg::mat_vec(&m, &x);
        let wy = linalg::mat_vec(&m, &y);
        assert_eq!(
            rs.bilinear(&wx, &wy).unwrap(),
            rs.bilinear(&x, &y).unwrap(),
            "form preservation"
        );
    }

    // compensation nonnegativity and zero-iff on 100 random weights
    let labels = presets::e6_bourbaki().labels;
    for _ in 0..100 {
        let w = Weight::new(weights::LATTICE_E6, random_vec6(&mut r));
        let c = compensation(&w, GroupId::E6m14.compact_indices()).unwrap();
        assert!(c >= rat(0));
        let compact_part = decompose(&w, &labels).unwrap().compact_part;
        assert_eq!(c == rat(0), compact_part.is_zero(), "zero-iff");
    }

    // type preservation and ellipticity commutation on 100 random descriptors
    let setting = RestrictionSetting::shipped();
    for _ in 0..100 {
        let coords: Vec<Rat> = (0..6).map(|_| rat(r.gen_range(0i64..=4))).collect();
        let d = match r.gen_range(0..3) {
            0 => ParameterDescriptor::discrete(GroupId::E6m14, coords),
            1 => ParameterDescriptor::principal(
                GroupId::E6m14,
                coords,
                vec![random_rat(&mut r), random_rat(&mut r)],
            ),
            _ => ParameterDescriptor::complementary(
                GroupId::E6m14,
                coords,
                Rat::new(r.gen_range(1i64..=19).into(), 20.into()),
            ),
        };
        let restricted = restrict_descriptor(&d, &setting).unwrap();
        assert_eq!(restricted.descriptor.series, d.series, "type preservation");
        assert_eq!(
            is_elliptic_surrogate(&d),
            is_elliptic_surrogate(&restricted.descriptor),
            "ellipticity biconditional"
        );
        assert_eq!(
            restricted.descriptor.weight,
            theta.project(&d.weight).unwrap(),
            "weight functoriality"
        );
    }
    println!(
        "acceptance criterion 8: PASS (theta linearity x100, involutivity x50, form preservation x100, compensation x100, type/ellipticity x100, all exact)"
    );
}
