//! The left companion of a Littlewood-Richardson tableau, the symplectic
//! (King) first-column condition, and the localization of symplectic
//! violations on companions.
//!
//! For T of shape lambda/mu on [2n], the companion chain member with top
//! index 2n-r+1 records the shape of the entries < r (mu cells counting
//! as 0) in rows r, r+1, ..., 2n of T. The chain descends from mu and its
//! ascent indices spell the first column of the companion. Row counts of
//! each member are asserted to be weakly decreasing and consecutive
//! members are asserted to differ by horizontal strips; a failure there
//! is a bug in this library, not bad input.

use crate::error::{CheckFailure, Error};
use crate::lr;
use crate::partition::{reversed_difference, Partition};
use crate::sundaram::{ViolationKind, ViolationReport};
use crate::tableau::{NestedChain, SkewTableau};

/// A companion tableau together with its defining chain and the weight of
/// the source tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionResult {
    companion: SkewTableau,
    chain: NestedChain,
    source_weight: Partition,
}

impl CompanionResult {
    pub fn companion(&self) -> &SkewTableau {
        &self.companion
    }

    pub fn chain(&self) -> &NestedChain {
        &self.chain
    }

    pub fn source_weight(&self) -> &Partition {
        &self.source_weight
    }

    /// First column of the companion, read off the chain ascents.
    pub fn first_column(&self) -> Vec<usize> {
        let from_chain = self.chain.first_column();
        debug_assert_eq!(
            from_chain,
            (1..=self.companion.lambda().len())
                .map(|r| self.companion.entry(r, 1).expect("cell of the shape"))
                .collect::<Vec<_>>()
        );
        from_chain
    }
}

/// Builds the left companion of an LR tableau. The result has shape mu on
/// the same alphabet and content equal to the reversed padded difference
/// lambda - nu.
pub fn left_companion(t: &SkewTableau) -> Result<CompanionResult, Error> {
    let nu = lr::require_lr(t)?;
    let two_n = t.two_n();
    let rows = t.lambda().len();
    let mut members = Vec::with_capacity(two_n);
    for r in 1..=two_n {
        let mut parts = Vec::new();
        for k in 1.. {
            let row = r + k - 1;
            if row > rows {
                break;
            }
            parts.push(t.row_slice(row).iter().filter(|&&e| e < r).count());
        }
        members.push(
            Partition::new(parts).expect("companion chain member has weakly decreasing rows"),
        );
    }
    let chain =
        NestedChain::new(members).expect("companion chain is nested with horizontal-strip steps");
    let companion = chain.to_tableau();
    assert_eq!(companion.lambda(), t.mu(), "companion shape must equal mu");
    let expected =
        reversed_difference(t.lambda(), &nu, two_n).expect("an LR weight is contained in lambda");
    assert_eq!(
        companion.content(),
        expected,
        "companion content must be the reversed shape difference"
    );
    Ok(CompanionResult {
        companion,
        chain,
        source_weight: nu,
    })
}

/// Columns of the companion computed the long way: column c is the ascent
/// list of the chain after peeling c-1 leading columns off every member.
/// A cross check against [`NestedChain::to_tableau`].
pub fn columns_by_peeling(chain: &NestedChain) -> Vec<Vec<usize>> {
    let width = chain.shape().part(1);
    let two_n = chain.two_n();
    let mut lens_and_members: Vec<Partition> = chain.members().to_vec();
    let mut columns = Vec::with_capacity(width);
    for _ in 0..width {
        let mut column = Vec::new();
        let mut prev = 0;
        for m in 1..=two_n {
            let len = lens_and_members[two_n - m].len();
            if len > prev {
                column.push(m);
            }
            prev = len;
        }
        columns.push(column);
        lens_and_members = lens_and_members
            .iter()
            .map(|q| {
                Partition::new(q.parts().iter().map(|&x| x - 1).collect::<Vec<_>>())
                    .expect("peeling keeps parts weakly decreasing")
            })
            .collect();
    }
    columns
}

/// King's condition on a straight tableau: the k-th first-column entry is
/// at least 2k-1.
pub fn is_symplectic(g: &SkewTableau) -> bool {
    assert!(g.is_straight(), "symplectic checks take straight shapes");
    (1..=g.lambda().len()).all(|k| g.entry(k, 1).expect("cell of the shape") >= 2 * k - 1)
}

/// The unique minimal row breaking the symplectic bound, if any. On a
/// violation at row i >= 2 the entries are pinned: the row above sits
/// exactly on its bound (2i-3) and the violating entry is exactly one
/// short (2i-2). When no row violates, the shape is asserted to have at
/// most n rows. Assertion failures signal a bug in this library.
pub fn minimal_symplectic_violation(g: &SkewTableau) -> Option<ViolationReport> {
    assert!(g.is_straight(), "symplectic checks take straight shapes");
    let ell = g.lambda().len();
    for k in 1..=ell {
        let e = g.entry(k, 1).expect("cell of the shape");
        if e < 2 * k - 1 {
            if k >= 2 {
                let above = g.entry(k - 1, 1).expect("cell of the shape");
                assert_eq!(
                    above,
                    2 * k - 3,
                    "row above the minimal symplectic violation must sit on its bound"
                );
                assert_eq!(
                    e,
                    2 * k - 2,
                    "minimal symplectic violation must be one short of its bound"
                );
            }
            return Some(ViolationReport {
                kind: ViolationKind::Symplectic,
                row: k,
                col: 1,
                entry: e,
                bound: 2 * k - 1,
                aux_t: None,
            });
        }
    }
    assert!(
        ell <= g.two_n() / 2,
        "a symplectic tableau has at most n rows"
    );
    None
}

/// The largest row breaking the symplectic bound, if any.
pub fn maximal_symplectic_violation(g: &SkewTableau) -> Option<ViolationReport> {
    assert!(g.is_straight(), "symplectic checks take straight shapes");
    (1..=g.lambda().len()).rev().find_map(|k| {
        let e = g.entry(k, 1).expect("cell of the shape");
        (e < 2 * k - 1).then_some(ViolationReport {
            kind: ViolationKind::Symplectic,
            row: k,
            col: 1,
            entry: e,
            bound: 2 * k - 1,
            aux_t: None,
        })
    })
}

/// Confirms the correspondence between the first column of T below row
/// l(mu) and the length profile of the companion chain:
///
/// 1. the first column continues the staircase k at row k from row
///    l(mu)+s downward exactly when the chain tail from top index
///    2n-(l(mu)+s)+1 is all empty;
/// 2. the staircase fills every row below l(mu) exactly when the profile
///    drops strictly to zero over the first l(mu) steps;
/// 3. for s = T(l(mu)+1, 1) in [l(mu)]: an even s flattens the profile
///    first at step s, an odd s starts a consecutive first-column run of
///    even length whose extent the profile flattens across.
///
/// Requires an LR tableau of even weight.
pub fn check_proposition(t: &SkewTableau) -> Result<Option<CheckFailure>, Error> {
    lr::require_even_lr(t)?;
    let res = left_companion(t)?;
    let chain = res.chain();
    let two_n = t.two_n();
    let lm = t.mu().len();
    let ll = t.lambda().len();
    let len_at = |m: usize| -> usize {
        if m == 0 {
            0
        } else {
            chain.member(m).len()
        }
    };

    // clause 1: staircase tails match empty chain tails, per start row
    for s in 1..=(two_n - lm) {
        let lhs = match t.entry(lm + s, 1) {
            None => true,
            Some(e) => e == lm + s,
        };
        let rhs = (s..=(two_n - lm)).all(|off| len_at(two_n - (lm + off) + 1) == 0);
        if lhs != rhs {
            return Ok(Some(CheckFailure::at(
                "staircase tail vs empty chain tail",
                lm + s,
                1,
                format!("column condition {lhs} but chain condition {rhs}"),
            )));
        }
    }

    // clause 2: full staircase below mu matches a strictly dropping profile
    let full_staircase = ((lm + 1)..=ll).all(|k| t.entry(k, 1) == Some(k));
    let strict_profile = (0..lm).all(|j| len_at(two_n - j) > len_at(two_n - j - 1))
        && (1..=(two_n - lm)).all(|m| len_at(m) == 0);
    if full_staircase != strict_profile {
        return Ok(Some(CheckFailure::general(
            "full staircase vs strictly dropping profile",
            format!("column condition {full_staircase} but chain condition {strict_profile}"),
        )));
    }

    // clause 3: the first entry below mu against the profile's first flat
    if let Some(s) = t.entry(lm + 1, 1) {
        if (1..=lm).contains(&s) {
            if s % 2 == 0 {
                let strict_part = (0..s - 1).all(|j| len_at(two_n - j) > len_at(two_n - j - 1));
                let flat = len_at(two_n - s + 1) == len_at(two_n - s);
                if !(strict_part && flat) {
                    return Ok(Some(CheckFailure::at(
                        "even start: profile must drop strictly then flatten once",
                        lm + 1,
                        1,
                        format!("s = {s}, strict {strict_part}, flat {flat}"),
                    )));
                }
            } else {
                let mut run = 0;
                while t.entry(lm + run + 1, 1) == Some(s + run) {
                    run += 1;
                }
                if run < 2 {
                    return Ok(Some(CheckFailure::at(
                        "odd start: first column must run consecutively for even length",
                        lm + 1,
                        1,
                        format!("s = {s}, run {run}"),
                    )));
                }
                let cap = run.min(lm + 2 - s).min(two_n + 1 - s);
                let even_run = cap - cap % 2;
                let strict_part = (0..s - 1).all(|j| len_at(two_n - j) > len_at(two_n - j - 1));
                let flat =
                    (0..even_run).all(|a| len_at(two_n - s + 1 - a) == len_at(two_n - s - a));
                if !(strict_part && flat) {
                    return Ok(Some(CheckFailure::at(
                        "odd start: profile must flatten across the run",
                        lm + 1,
                        1,
                        format!("s = {s}, run {even_run}, strict {strict_part}, flat {flat}"),
                    )));
                }
            }
        }
    }
    Ok(None)
}
