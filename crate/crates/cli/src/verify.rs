use anyhow::{bail, Context};
use ceva_core::generate::{generate, trial_rng, Mode};
use ceva_core::{check_condition_2_via_order, verify_equivalence, Error};
use rayon::prelude::*;
use serde::Serialize;

use crate::EXIT_FALSIFIED;

#[derive(Debug, Clone)]
pub struct Plan {
    pub cells: Vec<(usize, usize)>,
    pub trials: u64,
    pub seed: u64,
    pub denominator_bound: u64,
}

fn parse_n_range(s: &str) -> anyhow::Result<(usize, usize)> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), s.trim()),
    };
    let lo: usize = lo.parse().with_context(|| format!("bad --n {s:?}"))?;
    let hi: usize = hi.parse().with_context(|| format!("bad --n {s:?}"))?;
    if lo < 2 || hi < lo {
        bail!("--n must be a nonempty range with n >= 2, got {s:?}");
    }
    Ok((lo, hi))
}

impl Plan {
    pub fn parse(n: &str, k: &str, trials: u64, seed: u64, denominator_bound: u64) -> anyhow::Result<Plan> {
        let (lo, hi) = parse_n_range(n)?;
        let k_rule: Option<usize> = match k.trim() {
            "all" => None,
            v => Some(v.parse().with_context(|| format!("bad --k {k:?}"))?),
        };
        let mut cells = Vec::new();
        for n in lo..=hi {
            match k_rule {
                None => cells.extend((1..n).map(|k| (n, k))),
                Some(k) if k >= 1 && k < n => cells.push((n, k)),
                Some(_) => {}
            }
        }
        if cells.is_empty() {
            bail!("no (n, k) cell with 1 <= k < n in --n {n} --k {k}");
        }
        if trials == 0 {
            bail!("--trials must be at least 1");
        }
        if denominator_bound <= hi as u64 {
            bail!("--denominator-bound must exceed n, got {denominator_bound}");
        }
        Ok(Plan {
            cells,
            trials,
            seed,
            denominator_bound,
        })
    }

    fn jobs(&self) -> Vec<(usize, usize, Mode, u64)> {
        let concurrent = self.trials.div_ceil(2);
        let perturbed = self.trials / 2;
        let mut jobs = Vec::new();
        for &(n, k) in &self.cells {
            jobs.extend((0..concurrent).map(|t| (n, k, Mode::Concurrent, t)));
            jobs.extend((0..perturbed).map(|t| (n, k, Mode::Perturbed, t)));
        }
        jobs
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Falsification {
    pub n: usize,
    pub k: usize,
    pub mode: String,
    pub trial: u64,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellSummary {
    pub n: usize,
    pub k: usize,
    pub concurrent: u64,
    pub perturbed: u64,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub seed: u64,
    pub trials_per_cell: u64,
    pub denominator_bound: u64,
    pub cells: Vec<CellSummary>,
    pub total_instances: u64,
    pub falsifications: Vec<Falsification>,
}

impl Summary {
    pub fn exit_code(&self) -> u8 {
        if self.falsifications.is_empty() {
            0
        } else {
            EXIT_FALSIFIED
        }
    }
}

/// `None` when the instance behaves as its mode predicts and both forms of
/// the per-face criterion agree.
fn run_one(n: usize, k: usize, mode: Mode, trial: u64, plan: &Plan) -> Option<String> {
    let inst = match generate(&mut trial_rng(plan.seed, n, k, mode, trial), n, k, mode, plan.denominator_bound) {
        Ok(inst) => inst,
        Err(e) => return Some(format!("generation failed: {e}")),
    };
    let report = match verify_equivalence(&inst.family) {
        Ok(r) => r,
        Err(e @ Error::TheoremViolation { .. }) => return Some(e.to_string()),
        Err(e) => return Some(format!("check failed: {e}")),
    };
    match check_condition_2_via_order(&inst.family) {
        Ok(by_order) if by_order == report.failing_faces => {}
        Ok(by_order) => {
            return Some(format!(
                "order-based criterion disagrees: {:?} vs {:?}",
                by_order.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                report.failing_faces.iter().map(|f| f.to_string()).collect::<Vec<_>>()
            ))
        }
        Err(e) => return Some(format!("order-based check failed: {e}")),
    }
    match mode {
        Mode::Concurrent if !report.intersects || report.witness != inst.witness => {
            Some("concurrent instance not recovered at its witness".into())
        }
        Mode::Perturbed if report.intersects => Some("perturbed instance still intersects".into()),
        _ => None,
    }
}

pub fn run(plan: &Plan) -> Summary {
    let jobs = plan.jobs();
    let outcomes: Vec<Option<String>> = jobs
        .par_iter()
        .map(|&(n, k, mode, trial)| run_one(n, k, mode, trial, plan))
        .collect();

    let mut cells: Vec<CellSummary> = plan
        .cells
        .iter()
        .map(|&(n, k)| CellSummary {
            n,
            k,
            concurrent: 0,
            perturbed: 0,
            passed: 0,
            failed: 0,
        })
        .collect();
    let mut falsifications = Vec::new();
    for (&(n, k, mode, trial), outcome) in jobs.iter().zip(outcomes) {
        let cell = cells.iter_mut().find(|c| c.n == n && c.k == k).expect("job from plan");
        match mode {
            Mode::Concurrent => cell.concurrent += 1,
            _ => cell.perturbed += 1,
        }
        match outcome {
            None => cell.passed += 1,
            Some(reason) => {
                cell.failed += 1;
                falsifications.push(Falsification {
                    n,
                    k,
                    mode: mode.to_string(),
                    trial,
                    reason,
                });
            }
        }
    }
    Summary {
        seed: plan.seed,
        trials_per_cell: plan.trials,
        denominator_bound: plan.denominator_bound,
        total_instances: jobs.len() as u64,
        cells,
        falsifications,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_rules() {
        let p = Plan::parse("2..4", "all", 3, 0, 64).unwrap();
        assert_eq!(p.cells, vec![(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]);
        let p = Plan::parse("5", "2", 1, 0, 64).unwrap();
        assert_eq!(p.cells, vec![(5, 2)]);
        assert!(Plan::parse("1..3", "all", 1, 0, 64).is_err());
        assert!(Plan::parse("4..2", "all", 1, 0, 64).is_err());
        assert!(Plan::parse("3", "3", 1, 0, 64).is_err());
        assert!(Plan::parse("3", "x", 1, 0, 64).is_err());
        assert!(Plan::parse("3", "all", 0, 0, 64).is_err());
        assert!(Plan::parse("6", "all", 1, 0, 6).is_err());
    }

    #[test]
    fn halves_round_toward_concurrent() {
        let p = Plan::parse("2", "all", 5, 0, 64).unwrap();
        let s = run(&p);
        assert_eq!(s.cells[0].concurrent, 3);
        assert_eq!(s.cells[0].perturbed, 2);
        assert_eq!(s.total_instances, 5);
        assert!(s.falsifications.is_empty());
    }
}
