//! Branching coefficients under the Sundaram and companion-symplectic
//! models, the violation-mirroring verifier, and the Littlewood-regime
//! consistency check.
//!
//! Counts are always counts of tableaux T, never of companions, so no
//! injectivity assumption is load-bearing; distinct-companion counts are
//! recorded alongside and any collision is reported as a counterexample.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::companion;
use crate::error::{CheckFailure, Error};
use crate::io::TableauRecord;
use crate::lr::{self, LrInstance};
use crate::partition::{even_subpartitions, partitions_of_size, subpartitions, Partition};
use crate::sundaram;
use crate::tableau::SkewTableau;

/// Per-weight tableau counts for one `(lambda, mu, n)` instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuBreakdown {
    pub nu: Partition,
    pub lr: usize,
    pub lrs: usize,
    pub symplectic_companions: usize,
    pub distinct_companions: usize,
}

/// A tableau on which one of the verified statements failed.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub nu: Partition,
    pub tableau: TableauRecord,
    pub detail: String,
}

/// Outcome of verifying one `(lambda, mu, n)` instance: per-weight counts
/// under both models plus every counterexample found.
#[derive(Clone, Debug, Serialize)]
pub struct BranchingReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: usize,
    pub per_nu: Vec<NuBreakdown>,
    pub sundaram_total: usize,
    pub kwon_total: usize,
    pub theorem_holds: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl BranchingReport {
    /// Total LR tableaux examined across all weights.
    pub fn tableaux(&self) -> usize {
        self.per_nu.iter().map(|b| b.lr).sum()
    }
}

/// Both counts disagree: the flagged side kept fewer tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LittlewoodDiscrepancy {
    pub sundaram: usize,
    pub unrestricted: usize,
}

fn validate_args(lambda: &Partition, mu: &Partition, n: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidAlphabet { two_n: 0 });
    }
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    if mu.len() > n {
        return Err(Error::MuTooLong { rows: mu.len(), n });
    }
    if lambda.len() > 2 * n {
        return Err(Error::AlphabetTooSmall {
            two_n: 2 * n,
            rows: lambda.len(),
        });
    }
    Ok(())
}

fn even_weights(lambda: &Partition, mu: &Partition) -> Vec<Partition> {
    even_subpartitions(lambda, lambda.size() - mu.size())
}

/// Sum over even weights of the number of LR tableaux satisfying the
/// Sundaram bound.
pub fn sundaram_count(lambda: &Partition, mu: &Partition, n: usize) -> Result<usize, Error> {
    validate_args(lambda, mu, n)?;
    let mut total = 0;
    for nu in even_weights(lambda, mu) {
        let inst = LrInstance::new(lambda.clone(), mu.clone(), nu, 2 * n)?;
        total += sundaram::enumerate_lrs(&inst, n)?.len();
    }
    Ok(total)
}

/// Sum over even weights of the number of LR tableaux whose left
/// companion is symplectic.
pub fn kwon_count(lambda: &Partition, mu: &Partition, n: usize) -> Result<usize, Error> {
    validate_args(lambda, mu, n)?;
    let mut total = 0;
    for nu in even_weights(lambda, mu) {
        let inst = LrInstance::new(lambda.clone(), mu.clone(), nu, 2 * n)?;
        for t in lr::enumerate(&inst) {
            let res = companion::left_companion(&t)?;
            if companion::is_symplectic(res.companion()) {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// Runs every per-tableau consistency check on one LR tableau of even
/// weight:
///
/// - the full Sundaram check agrees with its first-column reduction;
/// - the Sundaram check fails exactly when the companion fails the
///   symplectic check;
/// - the companion columns agree with the peeling cross check;
/// - on joint failure, the minimal violating row matches the localized
///   first-column pattern, that pattern pins a unique offset t, and the
///   maximal symplectic violation of the companion sits among the bottom
///   t+1 first-column cells;
/// - when the Sundaram check passes, first-column entries meet their even
///   lower bounds and the companion has no symplectic violation;
/// - the two-sided violation structure holds on the first column.
pub fn check_tableau_mirroring(t: &SkewTableau, n: usize) -> Result<Option<CheckFailure>, Error> {
    let sundaram_ok = sundaram::satisfies_full(t, n)?;
    let first_col_ok = sundaram::satisfies_first_column(t, n)?;
    if sundaram_ok != first_col_ok {
        return Ok(Some(CheckFailure::general(
            "first-column reduction",
            format!("full check {sundaram_ok} but first-column check {first_col_ok}"),
        )));
    }

    let res = companion::left_companion(t)?;
    let symplectic_ok = companion::is_symplectic(res.companion());
    if sundaram_ok != symplectic_ok {
        return Ok(Some(CheckFailure::general(
            "violation mirroring",
            format!("sundaram {sundaram_ok} but companion symplectic {symplectic_ok}"),
        )));
    }

    let peeled = companion::columns_by_peeling(res.chain());
    let g = res.companion();
    for (c, col) in peeled.iter().enumerate() {
        let literal: Vec<usize> = (1..=g.lambda().len())
            .filter_map(|r| g.entry(r, c + 1))
            .collect();
        if &literal != col {
            return Ok(Some(CheckFailure::general(
                "companion column cross check",
                format!("column {}: peeled {col:?}, literal {literal:?}", c + 1),
            )));
        }
    }

    if let Some(cf) = sundaram::check_violation_corollary(t, n)? {
        return Ok(Some(cf));
    }

    let min_violation = sundaram::minimal_violation(t, n)?;
    if sundaram_ok != min_violation.is_none() {
        return Ok(Some(CheckFailure::general(
            "minimal violation presence",
            format!("sundaram {sundaram_ok} but minimal violation {min_violation:?}"),
        )));
    }

    match min_violation {
        None => {
            let mut off = 1;
            while let Some(e) = t.entry(n + off, 1) {
                if e < 2 * off {
                    return Ok(Some(CheckFailure::at(
                        "first-column lower bound",
                        n + off,
                        1,
                        format!("entry {e} below {}", 2 * off),
                    )));
                }
                off += 1;
            }
            if let Some(v) = companion::maximal_symplectic_violation(res.companion()) {
                return Ok(Some(CheckFailure::general(
                    "stray symplectic violation",
                    format!("{v:?} on a companion of a Sundaram tableau"),
                )));
            }
            companion::minimal_symplectic_violation(res.companion());
        }
        Some(v) => {
            let offset = v.aux_t.expect("sundaram violations carry t");

            // minimal violating row over all cells, not only column 1
            let min_row_all = t
                .skew_cells()
                .filter(|(cell, e)| e % 2 == 1 && cell.row > n + (e - 1) / 2)
                .map(|(cell, _)| cell.row)
                .min();
            if min_row_all != Some(v.row) {
                return Ok(Some(CheckFailure::general(
                    "minimal violating row",
                    format!("report row {} but cellwise minimum {min_row_all:?}", v.row),
                )));
            }

            let upper = t.lambda().len().saturating_sub(n + 1);
            let matches: Vec<usize> = (0..=upper)
                .filter(|&cand| sundaram::violation_pattern_holds(t, n, cand))
                .collect();
            if matches != vec![offset] {
                return Ok(Some(CheckFailure::general(
                    "violation pattern uniqueness",
                    format!("offsets {matches:?} match, reported {offset}"),
                )));
            }

            let Some(maxv) = companion::maximal_symplectic_violation(res.companion()) else {
                return Ok(Some(CheckFailure::general(
                    "missing symplectic violation",
                    "companion of a non-Sundaram tableau is symplectic".to_owned(),
                )));
            };
            let lm = t.mu().len();
            if maxv.row > lm || lm - maxv.row > offset {
                return Ok(Some(CheckFailure::general(
                    "maximal violation row range",
                    format!(
                        "row {} outside rows {}..={} for t = {offset}",
                        maxv.row,
                        lm.saturating_sub(offset),
                        lm
                    ),
                )));
            }
            companion::minimal_symplectic_violation(res.companion());
        }
    }
    Ok(None)
}

/// Enumerates every even weight and every LR tableau of the instance,
/// running [`check_tableau_mirroring`] on each and recording per-weight
/// counts under both models plus distinct-companion counts.
pub fn verify_mirroring(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<BranchingReport, Error> {
    validate_args(lambda, mu, n)?;
    let mut per_nu = Vec::new();
    let mut counterexamples = Vec::new();
    for nu in even_weights(lambda, mu) {
        let inst = LrInstance::new(lambda.clone(), mu.clone(), nu.clone(), 2 * n)?;
        let ts = lr::enumerate(&inst);
        let mut breakdown = NuBreakdown {
            nu: nu.clone(),
            lr: ts.len(),
            lrs: 0,
            symplectic_companions: 0,
            distinct_companions: 0,
        };
        let mut companions = BTreeSet::new();
        for t in &ts {
            if let Some(cf) = check_tableau_mirroring(t, n)? {
                counterexamples.push(Counterexample {
                    nu: nu.clone(),
                    tableau: TableauRecord::from_tableau(t),
                    detail: cf.to_string(),
                });
            }
            if sundaram::satisfies_full(t, n)? {
                breakdown.lrs += 1;
            }
            let res = companion::left_companion(t)?;
            if companion::is_symplectic(res.companion()) {
                breakdown.symplectic_companions += 1;
            }
            companions.insert(
                res.companion()
                    .rows()
                    .flatten()
                    .copied()
                    .collect::<Vec<usize>>(),
            );
        }
        breakdown.distinct_companions = companions.len();
        if breakdown.distinct_companions != breakdown.lr {
            counterexamples.push(Counterexample {
                nu: nu.clone(),
                tableau: TableauRecord {
                    lambda: lambda.parts().to_vec(),
                    mu: mu.parts().to_vec(),
                    n,
                    rows: Vec::new(),
                },
                detail: format!(
                    "companion collision: {} tableaux, {} distinct companions",
                    breakdown.lr, breakdown.distinct_companions
                ),
            });
        }
        per_nu.push(breakdown);
    }
    let sundaram_total = per_nu.iter().map(|b| b.lrs).sum();
    let kwon_total = per_nu.iter().map(|b| b.symplectic_companions).sum();
    let theorem_holds = counterexamples.is_empty();
    Ok(BranchingReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n,
        per_nu,
        sundaram_total,
        kwon_total,
        theorem_holds,
        counterexamples,
    })
}

/// With no flag condition active (n at least the number of rows of
/// lambda), the Sundaram count must equal the unrestricted even-weight LR
/// count.
pub fn littlewood_consistency(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<Option<LittlewoodDiscrepancy>, Error> {
    validate_args(lambda, mu, n)?;
    if n < lambda.len() {
        return Err(Error::NotLittlewoodRegime {
            n,
            rows: lambda.len(),
        });
    }
    let sundaram = sundaram_count(lambda, mu, n)?;
    let mut unrestricted = 0;
    for nu in even_weights(lambda, mu) {
        let inst = LrInstance::new(lambda.clone(), mu.clone(), nu, 2 * n)?;
        unrestricted += lr::enumerate(&inst).len();
    }
    Ok((sundaram != unrestricted).then_some(LittlewoodDiscrepancy {
        sundaram,
        unrestricted,
    }))
}

/// All `(lambda, mu, n)` triples with `|lambda| <= max_cells`,
/// `n <= max_n`, `l(lambda) <= 2n`, `mu` inside `lambda`, and
/// `l(mu) <= n`, in a fixed deterministic order.
pub fn sweep_instances(max_cells: usize, max_n: usize) -> Vec<(Partition, Partition, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for size in 0..=max_cells {
            for lambda in partitions_of_size(size) {
                if lambda.len() > 2 * n {
                    continue;
                }
                for mu in subpartitions(&lambda) {
                    if mu.len() > n {
                        continue;
                    }
                    out.push((lambda.clone(), mu.clone(), n));
                }
            }
        }
    }
    out
}
