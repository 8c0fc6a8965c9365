//! The general decision against direct, low-level oracles in the classical
//! special cases: triangles (Ceva's product), facet-spanning cevians
//! (hyperplane intersection) and ordinary cevians (line intersection).

mod common;

use std::collections::BTreeMap;

use ceva_core::generate::{generate, trial_rng, Mode};
use ceva_core::{cycle_ratio_product, intersect_family, verify_equivalence, BaryPoint, CevianFamily, ExactScalar, Face};
use common::{gauss, int, Solve};

const MODES: [Mode; 3] = [Mode::Concurrent, Mode::Perturbed, Mode::Random];

/// `k = n - 1`: each foot `a P_i + b P_j` on edge `{i, j}` cuts out the
/// hyperplane `b x_i - a x_j = 0`.
fn hyperplane_oracle(fam: &CevianFamily) -> Option<BaryPoint> {
    let n = fam.ambient_n();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for c in fam.members() {
        let e = c.foot().support();
        let (i, j) = (e.indices()[0], e.indices()[1]);
        let mut row = vec![int(0); n + 1];
        row[i] = c.foot().coord(j).clone();
        row[j] = -c.foot().coord(i);
        a.push(row);
        b.push(int(0));
    }
    a.push(vec![int(1); n + 1]);
    b.push(int(1));
    match gauss(&a, &b) {
        Solve::Unique(x) if x.iter().all(ExactScalar::is_positive) => Some(BaryPoint::new(x).unwrap()),
        Solve::Underdetermined => panic!("facet cevians always pin the point"),
        _ => None,
    }
}

/// `k = 1`: intersect the lines `P_0 Q_0` and `P_1 Q_1`, then check the
/// point against every other line `P_t Q_t`.
fn line_oracle(fam: &CevianFamily) -> Option<BaryPoint> {
    let n = fam.ambient_n();
    let foot = |t: usize| {
        fam.members()
            .iter()
            .find(|c| c.apex().indices() == [t])
            .unwrap()
            .foot()
            .clone()
    };
    let (q0, q1) = (foot(0), foot(1));
    // (1 - s) P_0 + s Q_0 = (1 - u) P_1 + u Q_1
    // coordinate 0: 1 - s = u q1[0];  coordinate 1: s q0[1] = 1 - u
    let a = vec![vec![int(1), q1.coord(0).clone()], vec![q0.coord(1).clone(), int(1)]];
    let b = vec![int(1), int(1)];
    let Solve::Unique(su) = gauss(&a, &b) else { return None };
    let s = &su[0];
    let mut x: Vec<ExactScalar> = q0.coords().iter().map(|c| s * c).collect();
    x[0] = &x[0] + &(ExactScalar::one() - s);
    for t in 0..=n {
        let qt = foot(t);
        let st = ExactScalar::one() - &x[t];
        for v in (0..=n).filter(|&v| v != t) {
            if x[v] != &st * qt.coord(v) {
                return None;
            }
        }
    }
    if !x.iter().all(ExactScalar::is_positive) {
        return None;
    }
    Some(BaryPoint::new(x).unwrap())
}

fn ceva_product_is_one(fam: &CevianFamily) -> bool {
    let edges: BTreeMap<Face, BaryPoint> = fam
        .members()
        .iter()
        .map(|c| (c.foot().support(), c.foot().clone()))
        .collect();
    cycle_ratio_product(&Face::full(2), &[0, 1, 2], &edges).unwrap().is_one()
}

#[test]
fn triangle_decision_is_ceva_product() {
    for mode in MODES {
        for trial in 0..100 {
            let inst = generate(&mut trial_rng(11, 2, 1, mode, trial), 2, 1, mode, 12).unwrap();
            let decided = intersect_family(&inst.family).is_some();
            assert_eq!(decided, ceva_product_is_one(&inst.family), "{mode} trial {trial}");
            if mode == Mode::Concurrent {
                assert!(decided);
            }
        }
    }
}

#[test]
fn facet_cevians_match_hyperplane_oracle() {
    for n in 3..=6 {
        for mode in MODES {
            for trial in 0..20 {
                let inst = generate(&mut trial_rng(12, n, n - 1, mode, trial), n, n - 1, mode, 64).unwrap();
                assert_eq!(
                    intersect_family(&inst.family),
                    hyperplane_oracle(&inst.family),
                    "n={n} {mode} trial {trial}"
                );
            }
        }
    }
}

#[test]
fn ordinary_cevians_match_line_oracle() {
    for n in 3..=6 {
        for mode in MODES {
            for trial in 0..20 {
                let inst = generate(&mut trial_rng(13, n, 1, mode, trial), n, 1, mode, 64).unwrap();
                let got = intersect_family(&inst.family);
                assert_eq!(got, line_oracle(&inst.family), "n={n} {mode} trial {trial}");
                if mode == Mode::Concurrent {
                    assert_eq!(got, inst.witness);
                }
                assert_eq!(verify_equivalence(&inst.family).unwrap().intersects, got.is_some());
            }
        }
    }
}
