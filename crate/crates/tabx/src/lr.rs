//! Recognition and exhaustive enumeration of Littlewood-Richardson
//! tableaux of a given skew shape and weight.
//!
//! The enumerator fills cells in reverse-row-word order (rows top to
//! bottom, each row right to left) so the Yamanouchi prefix condition and
//! the semistandard bounds can be maintained incrementally. Letters are
//! tried in increasing order, which makes the output sorted
//! lexicographically by reverse row word.

use crate::error::{CheckFailure, Error};
use crate::partition::{ContentVector, Partition};
use crate::tableau::SkewTableau;

/// A validated enumeration instance `(lambda, mu, nu, 2n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrInstance {
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    two_n: usize,
}

impl LrInstance {
    /// Standard constructor; additionally requires `l(mu) <= n`.
    pub fn new(
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        two_n: usize,
    ) -> Result<Self, Error> {
        let inst = Self::new_relaxed(lambda, mu, nu, two_n)?;
        if inst.mu.len() > two_n / 2 {
            return Err(Error::MuTooLong {
                rows: inst.mu.len(),
                n: two_n / 2,
            });
        }
        Ok(inst)
    }

    /// Skips the `l(mu) <= n` bound; for straight-shape experiments only.
    pub fn new_relaxed(
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        two_n: usize,
    ) -> Result<Self, Error> {
        if two_n == 0 || !two_n.is_multiple_of(2) {
            return Err(Error::InvalidAlphabet { two_n });
        }
        if !lambda.contains(&mu) {
            return Err(Error::NotContained {
                inner: mu.to_string(),
                outer: lambda.to_string(),
            });
        }
        if !lambda.contains(&nu) {
            return Err(Error::NotContained {
                inner: nu.to_string(),
                outer: lambda.to_string(),
            });
        }
        if lambda.len() > two_n {
            return Err(Error::AlphabetTooSmall {
                two_n,
                rows: lambda.len(),
            });
        }
        let skew = lambda.size() - mu.size();
        if nu.size() != skew {
            return Err(Error::WeightSizeMismatch {
                nu: nu.size(),
                skew,
            });
        }
        Ok(LrInstance {
            lambda,
            mu,
            nu,
            two_n,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn two_n(&self) -> usize {
        self.two_n
    }
}

/// True iff the reverse row word of `t` is Yamanouchi with weight `nu`.
pub fn is_lr(t: &SkewTableau, nu: &Partition) -> bool {
    let w = t.reverse_row_word();
    if !w.is_yamanouchi() {
        return false;
    }
    match ContentVector::from_partition(nu, t.two_n()) {
        Ok(target) => w.weight(t.two_n()) == target,
        Err(_) => false,
    }
}

/// The weight of `t` if its reverse row word is Yamanouchi.
pub(crate) fn require_lr(t: &SkewTableau) -> Result<Partition, Error> {
    let w = t.reverse_row_word();
    if !w.is_yamanouchi() {
        return Err(Error::NotLittlewoodRichardson);
    }
    Ok(w.weight(t.two_n())
        .as_partition()
        .expect("a Yamanouchi word has partition weight"))
}

/// As [`require_lr`], and the weight must be an even partition.
pub(crate) fn require_even_lr(t: &SkewTableau) -> Result<Partition, Error> {
    let nu = require_lr(t)?;
    if !nu.is_even() {
        return Err(Error::WeightNotEven);
    }
    Ok(nu)
}

struct Search<'a> {
    inst: &'a LrInstance,
    cells: Vec<(usize, usize)>,
    // cap[i][x]: cells at position >= i lying in rows >= x
    cap: Vec<Vec<usize>>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    target: Vec<usize>,
    // suffix_needed[z] = sum over letters y >= z of target[y] - counts[y]
    suffix_needed: Vec<usize>,
    out: Vec<SkewTableau>,
}

/// Every semistandard filling of `lambda/mu` on `[2n]` whose reverse row
/// word is Yamanouchi of weight `nu`, sorted lexicographically by reverse
/// row word.
pub fn enumerate(inst: &LrInstance) -> Vec<SkewTableau> {
    let lambda = &inst.lambda;
    let mu = &inst.mu;
    let two_n = inst.two_n;

    let cells: Vec<(usize, usize)> = (1..=lambda.len())
        .flat_map(|r| (mu.part(r) + 1..=lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let total = cells.len();

    let mut cap = Vec::with_capacity(total + 1);
    cap.push(vec![0usize; two_n + 1]);
    for i in (0..total).rev() {
        let prev = cap.last().expect("seeded above");
        let row: Vec<usize> = (0..=two_n)
            .map(|x| {
                if x == 0 {
                    0
                } else {
                    prev[x] + usize::from(cells[i].0 >= x)
                }
            })
            .collect();
        cap.push(row);
    }
    cap.reverse();

    let target: Vec<usize> = (0..=two_n)
        .map(|x| if x == 0 { 0 } else { inst.nu.part(x) })
        .collect();
    let mut suffix_needed = vec![0usize; two_n + 2];
    for z in (1..=two_n).rev() {
        suffix_needed[z] = suffix_needed[z + 1] + target[z];
    }

    let grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&w| vec![0; w]).collect();
    let mut search = Search {
        inst,
        cells,
        cap,
        grid,
        counts: vec![0usize; two_n + 1],
        target,
        suffix_needed,
        out: Vec::new(),
    };
    search.fill(0, total);
    search.out
}

impl Search<'_> {
    fn fill(&mut self, pos: usize, total: usize) {
        if pos == total {
            let entries: Vec<usize> = self.grid.iter().flatten().copied().collect();
            debug_assert!(
                self.grid
                    .iter()
                    .enumerate()
                    .all(|(i, row)| row.iter().all(|&e| e <= i + 1)),
                "row bound used for pruning must hold on every output"
            );
            self.out.push(SkewTableau::from_flat_unchecked(
                self.inst.lambda.clone(),
                self.inst.mu.clone(),
                self.inst.two_n,
                entries,
            ));
            return;
        }
        let (r, c) = self.cells[pos];
        let lo = if r > 1 {
            self.grid[r - 2][c - 1] + 1
        } else {
            1
        };
        // entries in row r of an LR tableau never exceed r
        let mut hi = r.min(self.inst.two_n);
        if c < self.inst.lambda.part(r) {
            hi = hi.min(self.grid[r - 1][c]);
        }
        for x in lo..=hi {
            if self.counts[x] >= self.target[x] {
                continue;
            }
            if x > 1 && self.counts[x] >= self.counts[x - 1] {
                continue;
            }
            self.counts[x] += 1;
            for z in 1..=x {
                self.suffix_needed[z] -= 1;
            }
            let feasible =
                (1..=self.inst.two_n).all(|z| self.suffix_needed[z] <= self.cap[pos + 1][z]);
            if feasible {
                self.grid[r - 1][c - 1] = x;
                self.fill(pos + 1, total);
                self.grid[r - 1][c - 1] = 0;
            }
            self.counts[x] -= 1;
            for z in 1..=x {
                self.suffix_needed[z] += 1;
            }
        }
    }
}

/// Confirms, on an LR tableau of even weight, that odd entries force even
/// successors strictly below, that odd first-column entries are followed
/// immediately by their even successor, and that no entry exceeds its row
/// index. Returns the first counterexample cell otherwise.
pub fn check_lr_lemma(t: &SkewTableau) -> Result<Option<CheckFailure>, Error> {
    require_even_lr(t)?;
    for (cell, e) in t.skew_cells() {
        if e > cell.row {
            return Ok(Some(CheckFailure::at(
                "entry exceeds its row index",
                cell.row,
                cell.col,
                format!("entry {e} in row {}", cell.row),
            )));
        }
    }
    for (cell, e) in t.skew_cells() {
        if e % 2 == 1 {
            let succ = e + 1;
            let found = t
                .skew_cells()
                .any(|(below, f)| below.row > cell.row && f == succ);
            if !found {
                return Ok(Some(CheckFailure::at(
                    "odd entry lacks its even successor below",
                    cell.row,
                    cell.col,
                    format!("no {succ} strictly below the {e}"),
                )));
            }
        }
    }
    for r in 1..=t.lambda().len() {
        let e = t.entry(r, 1).expect("cell of lambda");
        if e != 0 && e % 2 == 1 && t.entry(r + 1, 1) != Some(e + 1) {
            return Ok(Some(CheckFailure::at(
                "odd first-column entry not followed by its successor",
                r,
                1,
                format!(
                    "entry {e} but row {} column 1 is {:?}",
                    r + 1,
                    t.entry(r + 1, 1)
                ),
            )));
        }
    }
    Ok(None)
}
