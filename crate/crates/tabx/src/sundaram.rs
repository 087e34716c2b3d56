//! The Sundaram flag condition on Littlewood-Richardson tableaux of even
//! weight, its first-column reduction, and localization of the minimal
//! violating row.
//!
//! Throughout, rows are 1-based and "row n+i or above" means row index
//! `<= n + i`. The checks take `n` as a separate argument so one tableau
//! can be examined under several flag bounds; consistency of `2n` with
//! the tableau alphabet is enforced only by [`enumerate_lrs`].

use serde::Serialize;

use crate::error::{CheckFailure, Error};
use crate::lr::{self, LrInstance};
use crate::tableau::SkewTableau;

/// Which model a violation belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    Sundaram,
    Symplectic,
}

/// A located violation of the Sundaram bound (in a skew LR tableau) or
/// of the symplectic first-column bound (in a straight tableau).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ViolationReport {
    pub kind: ViolationKind,
    pub row: usize,
    pub col: usize,
    pub entry: usize,
    /// The threshold the entry had to meet.
    pub bound: usize,
    /// For Sundaram violations, the offset t with minimal violating row
    /// n + t + 1.
    #[serde(rename = "t", skip_serializing_if = "Option::is_none")]
    pub aux_t: Option<usize>,
}

fn require_preconditions(t: &SkewTableau, n: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidAlphabet { two_n: 0 });
    }
    lr::require_even_lr(t)?;
    if t.mu().len() > n {
        return Err(Error::MuTooLong {
            rows: t.mu().len(),
            n,
        });
    }
    Ok(())
}

/// True iff every odd entry 2i+1 sits in row n+i or above. Rejects
/// tableaux that are not LR of even weight or have too long a `mu`.
pub fn satisfies_full(t: &SkewTableau, n: usize) -> Result<bool, Error> {
    require_preconditions(t, n)?;
    for (cell, e) in t.skew_cells() {
        if e % 2 == 1 && cell.row > n + (e - 1) / 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first-column reduction: it suffices that every odd first-column
/// entry below row n, say at row n+t, is at least 2t+1.
pub fn satisfies_first_column(t: &SkewTableau, n: usize) -> Result<bool, Error> {
    require_preconditions(t, n)?;
    Ok(first_violation_offset(t, n).is_none())
}

/// Offset t' >= 1 of the first first-column row n+t' breaking its odd
/// bound.
fn first_violation_offset(t: &SkewTableau, n: usize) -> Option<usize> {
    let mut off = 1;
    while let Some(e) = t.entry(n + off, 1) {
        if e % 2 == 1 && e < 2 * off + 1 {
            return Some(off);
        }
        off += 1;
    }
    None
}

/// Locates the minimal row of `t` violating the Sundaram bound, reported
/// as row n+t+1 with `aux_t = t`, and asserts the forced first-column
/// pattern around it: entries 2t, 2t+1, 2(t+1) stacked at rows n+t,
/// n+t+1, n+t+2 with all rows above meeting their even lower bounds. A
/// failed assertion signals a bug in this library, not bad input. The
/// assertion on row n+t+2 is skipped when that cell lies outside the
/// shape.
pub fn minimal_violation(t: &SkewTableau, n: usize) -> Result<Option<ViolationReport>, Error> {
    require_preconditions(t, n)?;
    let Some(off) = first_violation_offset(t, n) else {
        return Ok(None);
    };
    let tp = off - 1;
    let entry = t.entry(n + tp + 1, 1).expect("violating cell exists");
    assert_eq!(
        entry,
        2 * tp + 1,
        "minimal violation must carry the entry 2t+1"
    );
    if tp >= 1 {
        assert_eq!(
            t.entry(n + tp, 1),
            Some(2 * tp),
            "row above the minimal violation must carry 2t"
        );
    } else {
        assert_eq!(
            t.entry(n, 1),
            Some(0),
            "a violation at row n+1 forces a mu cell at (n, 1)"
        );
    }
    if let Some(below) = t.entry(n + tp + 2, 1) {
        assert_eq!(
            below,
            2 * (tp + 1),
            "even weight forces 2(t+1) below the minimal violation"
        );
    }
    for s in 1..tp {
        let e = t.entry(n + s, 1).expect("rows above the violation exist");
        assert!(
            e >= 2 * s,
            "rows above the minimal violation must meet their even bounds"
        );
    }
    Ok(Some(ViolationReport {
        kind: ViolationKind::Sundaram,
        row: n + tp + 1,
        col: 1,
        entry,
        bound: 2 * (tp + 1) + 1,
        aux_t: Some(tp),
    }))
}

/// The literal first-column pattern for a candidate offset, used to scan
/// for uniqueness of t on failing tableaux.
pub fn violation_pattern_holds(t: &SkewTableau, n: usize, cand: usize) -> bool {
    if t.entry(n + cand + 1, 1) != Some(2 * cand + 1) {
        return false;
    }
    if cand >= 1 {
        if t.entry(n + cand, 1) != Some(2 * cand) {
            return false;
        }
    } else if t.entry(n, 1) != Some(0) {
        return false;
    }
    if let Some(below) = t.entry(n + cand + 2, 1) {
        if below != 2 * (cand + 1) {
            return false;
        }
    }
    (1..cand).all(|s| t.entry(n + s, 1).is_some_and(|e| e >= 2 * s))
}

/// Confirms the two-sided structure of first-column violations: an even
/// entry below its 2t bound is preceded above by an odd sub-bound entry,
/// and an odd sub-bound entry is followed below by an even sub-bound
/// entry.
pub fn check_violation_corollary(t: &SkewTableau, n: usize) -> Result<Option<CheckFailure>, Error> {
    require_preconditions(t, n)?;
    let mut column = Vec::new();
    let mut off = 1;
    while let Some(e) = t.entry(n + off, 1) {
        column.push((off, e));
        off += 1;
    }
    for &(tq, e) in &column {
        if e % 2 == 0 && e < 2 * tq {
            let witnessed = column
                .iter()
                .any(|&(s, f)| s < tq && f % 2 == 1 && f < 2 * s + 1);
            if !witnessed {
                return Ok(Some(CheckFailure::at(
                    "even sub-bound entry lacks an odd sub-bound entry above",
                    n + tq,
                    1,
                    format!("entry {e} < {}", 2 * tq),
                )));
            }
        }
        if e % 2 == 1 && e < 2 * tq + 1 {
            let witnessed = column
                .iter()
                .any(|&(s, f)| s > tq && f % 2 == 0 && f < 2 * s);
            if !witnessed {
                return Ok(Some(CheckFailure::at(
                    "odd sub-bound entry lacks an even sub-bound entry below",
                    n + tq,
                    1,
                    format!("entry {e} < {}", 2 * tq + 1),
                )));
            }
        }
    }
    Ok(None)
}

/// The LR tableaux of the instance that satisfy the Sundaram bound, in
/// enumeration order. Requires an even weight and `2n` matching the
/// instance alphabet.
pub fn enumerate_lrs(inst: &LrInstance, n: usize) -> Result<Vec<SkewTableau>, Error> {
    if inst.two_n() != 2 * n {
        return Err(Error::AlphabetMismatch {
            expected: inst.two_n(),
            got: 2 * n,
        });
    }
    if !inst.nu().is_even() {
        return Err(Error::WeightNotEven);
    }
    let mut out = Vec::new();
    for t in lr::enumerate(inst) {
        if satisfies_full(&t, n)? {
            out.push(t);
        }
    }
    Ok(out)
}
