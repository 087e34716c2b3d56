//! Skew semistandard tableaux, reverse row words, the Yamanouchi test,
//! and the nested-chain realization of straight-shape tableaux.
//!
//! Coordinates are matrix style and 1-based: `(row, col)` with rows
//! growing downward. A tableau of shape `lambda/mu` stores an entry for
//! every cell of `lambda`; cells of `mu` carry the entry 0 and the
//! positive entries live on the skew part. Cells outside `lambda` are
//! simply absent (`entry` returns `None`), so comparisons against them
//! succeed vacuously.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::partition::{ContentVector, Partition};

/// A 1-based matrix-style cell address.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// A word over the alphabet `[2n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&x| x >= 1));
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter multiplicities over the alphabet `[two_n]`.
    pub fn weight(&self, two_n: usize) -> ContentVector {
        let mut counts = vec![0usize; two_n];
        for &x in &self.letters {
            assert!(x >= 1 && x <= two_n, "letter {x} outside [1, {two_n}]");
            counts[x - 1] += 1;
        }
        ContentVector::new(counts)
    }

    /// True iff every prefix has weakly decreasing letter multiplicities.
    pub fn is_yamanouchi(&self) -> bool {
        let max = self.letters.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max + 1];
        for &x in &self.letters {
            if x > 1 && counts[x] >= counts[x - 1] {
                return false;
            }
            counts[x] += 1;
        }
        true
    }
}

/// A filling of the shape `lambda/mu` on the alphabet `[two_n]`,
/// row-major storage with per-row offsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    lambda: Partition,
    mu: Partition,
    two_n: usize,
    entries: Vec<usize>,
    offsets: Vec<usize>,
}

impl SkewTableau {
    /// Fully validated constructor: shape data, zero placement, and the
    /// semistandard row/column conditions.
    pub fn from_rows(
        lambda: Partition,
        mu: Partition,
        two_n: usize,
        rows: &[Vec<usize>],
    ) -> Result<Self, Error> {
        let t = Self::from_rows_unchecked(lambda, mu, two_n, rows)?;
        t.validate_filling()?;
        Ok(t)
    }

    /// Validates the shape data only; the filling may violate the
    /// semistandard conditions. Used to hold candidates for
    /// [`SkewTableau::is_semistandard`].
    pub fn from_rows_unchecked(
        lambda: Partition,
        mu: Partition,
        two_n: usize,
        rows: &[Vec<usize>],
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
        if lambda.len() > two_n {
            return Err(Error::AlphabetTooSmall {
                two_n,
                rows: lambda.len(),
            });
        }
        if rows.len() != lambda.len() {
            return Err(Error::RowCountMismatch {
                want: lambda.len(),
                got: rows.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != lambda.part(i + 1) {
                return Err(Error::RowLengthMismatch {
                    row: i + 1,
                    got: row.len(),
                    want: lambda.part(i + 1),
                });
            }
            for (j, &e) in row.iter().enumerate() {
                if e > two_n {
                    return Err(Error::EntryOutOfRange {
                        row: i + 1,
                        col: j + 1,
                        entry: e,
                        two_n,
                    });
                }
            }
        }
        let mut offsets = Vec::with_capacity(lambda.len() + 1);
        let mut entries = Vec::with_capacity(lambda.size());
        offsets.push(0);
        for row in rows {
            entries.extend_from_slice(row);
            offsets.push(entries.len());
        }
        Ok(SkewTableau {
            lambda,
            mu,
            two_n,
            entries,
            offsets,
        })
    }

    /// Fast path for enumeration: the caller guarantees validity.
    pub(crate) fn from_flat_unchecked(
        lambda: Partition,
        mu: Partition,
        two_n: usize,
        entries: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(entries.len(), lambda.size());
        let mut offsets = Vec::with_capacity(lambda.len() + 1);
        offsets.push(0);
        let mut acc = 0;
        for &p in lambda.parts() {
            acc += p;
            offsets.push(acc);
        }
        let t = SkewTableau {
            lambda,
            mu,
            two_n,
            entries,
            offsets,
        };
        debug_assert!(t.is_semistandard());
        t
    }

    /// Checks zero placement and the row/column monotonicity conditions,
    /// naming the first violated invariant.
    pub fn validate_filling(&self) -> Result<(), Error> {
        for r in 1..=self.lambda.len() {
            let mu_r = self.mu.part(r);
            for c in 1..=self.lambda.part(r) {
                let e = self.entry(r, c).expect("cell of lambda");
                if c <= mu_r {
                    if e != 0 {
                        return Err(Error::NonzeroOnMu {
                            row: r,
                            col: c,
                            entry: e,
                        });
                    }
                    continue;
                }
                if e == 0 {
                    return Err(Error::ZeroOffMu { row: r, col: c });
                }
                if c > mu_r + 1 {
                    let left = self.entry(r, c - 1).expect("cell of lambda");
                    if left > e {
                        return Err(Error::RowNotWeaklyIncreasing { row: r, col: c });
                    }
                }
                if r > 1 {
                    let above = self.entry(r - 1, c).expect("lambda is a partition");
                    if above >= e {
                        return Err(Error::ColumnNotStrictlyIncreasing { row: r, col: c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_semistandard(&self) -> bool {
        self.validate_filling().is_ok()
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// The alphabet bound `2n`.
    pub fn two_n(&self) -> usize {
        self.two_n
    }

    pub fn is_straight(&self) -> bool {
        self.mu.is_empty()
    }

    /// Number of skew cells.
    pub fn skew_size(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    /// Entry at a 1-based cell; `None` off the shape, `Some(0)` on `mu`.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || col == 0 || row > self.lambda.len() || col > self.lambda.part(row) {
            return None;
        }
        Some(self.entries[self.offsets[row - 1] + col - 1])
    }

    pub fn row_slice(&self, row: usize) -> &[usize] {
        &self.entries[self.offsets[row - 1]..self.offsets[row]]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        (1..=self.lambda.len()).map(move |r| self.row_slice(r))
    }

    /// All skew cells with their entries, row-major.
    pub fn skew_cells(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        (1..=self.lambda.len()).flat_map(move |r| {
            (self.mu.part(r) + 1..=self.lambda.part(r)).map(move |c| {
                (
                    Cell { row: r, col: c },
                    self.entry(r, c).expect("cell of lambda"),
                )
            })
        })
    }

    /// Entries of each row read right to left, rows top to bottom, zeros
    /// omitted.
    pub fn reverse_row_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.skew_size());
        for r in 1..=self.lambda.len() {
            for c in (self.mu.part(r) + 1..=self.lambda.part(r)).rev() {
                letters.push(self.entry(r, c).expect("cell of lambda"));
            }
        }
        Word::new(letters)
    }

    /// Cellwise letter multiplicities.
    pub fn content(&self) -> ContentVector {
        let mut counts = vec![0usize; self.two_n];
        for (_, e) in self.skew_cells() {
            counts[e - 1] += 1;
        }
        ContentVector::new(counts)
    }

    /// Rebuilds the tableau over a different alphabet bound, revalidating.
    pub fn with_alphabet(&self, two_n: usize) -> Result<Self, Error> {
        let rows: Vec<Vec<usize>> = self.rows().map(|r| r.to_vec()).collect();
        SkewTableau::from_rows(self.lambda.clone(), self.mu.clone(), two_n, &rows)
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SkewTableau({}/{} on [{}]; rows ",
            self.lambda, self.mu, self.two_n
        )?;
        f.debug_list().entries(self.rows()).finish()?;
        write!(f, ")")
    }
}

/// A descending chain of `2n` partitions with horizontal-strip steps,
/// indexed from the top shape down: `member(2n), ..., member(1)`. The
/// chain is the shape-by-shape record of a straight semistandard tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NestedChain {
    members: Vec<Partition>,
}

impl NestedChain {
    /// Builds a chain from members listed top index first. Validates
    /// nesting and the horizontal-strip condition at every step,
    /// including the step from `member(1)` down to the empty shape.
    pub fn new(members: Vec<Partition>) -> Result<Self, Error> {
        let two_n = members.len();
        if two_n == 0 || !two_n.is_multiple_of(2) {
            return Err(Error::InvalidAlphabet { two_n });
        }
        let empty = Partition::empty();
        for i in 0..two_n {
            let outer = &members[i];
            let inner = members.get(i + 1).unwrap_or(&empty);
            if !outer.contains(inner) {
                return Err(Error::ChainNotNested { step: i + 1 });
            }
            if !is_horizontal_strip(outer, inner) {
                return Err(Error::ChainStepNotHorizontal { step: i + 1 });
            }
        }
        Ok(NestedChain { members })
    }

    /// Records, for each letter bound m, the shape filled by entries <= m.
    pub fn from_tableau(g: &SkewTableau) -> Result<Self, Error> {
        if !g.is_straight() {
            return Err(Error::SkewInput);
        }
        let two_n = g.two_n();
        let mut members = Vec::with_capacity(two_n);
        for m in (1..=two_n).rev() {
            let parts: Vec<usize> = (1..=g.lambda().len())
                .map(|r| g.row_slice(r).iter().filter(|&&e| e <= m).count())
                .collect();
            members.push(
                Partition::new(parts).expect("sub-shape row counts of a tableau are decreasing"),
            );
        }
        NestedChain::new(members)
    }

    pub fn two_n(&self) -> usize {
        self.members.len()
    }

    /// The member with top index `m`, for `m` in `1..=2n`.
    pub fn member(&self, m: usize) -> &Partition {
        &self.members[self.members.len() - m]
    }

    /// Members listed top index first: `member(2n), ..., member(1)`.
    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    /// The full shape, `member(2n)`.
    pub fn shape(&self) -> &Partition {
        &self.members[0]
    }

    /// The straight tableau with entry m on `member(m) \ member(m-1)`.
    pub fn to_tableau(&self) -> SkewTableau {
        let shape = self.shape().clone();
        let two_n = self.two_n();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&w| vec![0; w]).collect();
        for m in 1..=two_n {
            let cur = self.member(m);
            for r in 1..=cur.len() {
                let from = if m == 1 {
                    0
                } else {
                    self.member(m - 1).part(r)
                };
                for c in from + 1..=cur.part(r) {
                    rows[r - 1][c - 1] = m;
                }
            }
        }
        SkewTableau::from_rows(shape, Partition::empty(), two_n, &rows)
            .expect("a nested chain with horizontal-strip steps fills a semistandard tableau")
    }

    /// Indices m at which the member length strictly grows, in increasing
    /// order: exactly the first column of [`NestedChain::to_tableau`] read
    /// top to bottom.
    pub fn first_column(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut prev = 0;
        for m in 1..=self.two_n() {
            let len = self.member(m).len();
            debug_assert!(
                len <= prev + 1,
                "horizontal strips grow length by at most 1"
            );
            if len > prev {
                out.push(m);
            }
            prev = len;
        }
        out
    }
}

/// True iff `outer/inner` has at most one box per column; containment is
/// checked by the caller.
pub(crate) fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    (1..outer.len()).all(|i| outer.part(i + 1) <= inner.part(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{all_skew_ssyt, example_main_t, yamanouchi_prefix_oracle};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn nested_example_chain() -> NestedChain {
        NestedChain::new(vec![
            p(&[4, 3, 2, 1]),
            p(&[4, 3, 1]),
            p(&[4, 2, 1]),
            p(&[3, 2]),
            p(&[3, 1]),
            p(&[1]),
            Partition::empty(),
            Partition::empty(),
        ])
        .unwrap()
    }

    fn nested_example_tableau() -> SkewTableau {
        SkewTableau::from_rows(
            p(&[4, 3, 2, 1]),
            Partition::empty(),
            8,
            &[vec![3, 4, 4, 6], vec![4, 5, 7], vec![6, 8], vec![8]],
        )
        .unwrap()
    }

    #[test]
    fn semistandard_examples() {
        assert!(example_main_t().is_semistandard());

        let single = SkewTableau::from_rows(p(&[1]), Partition::empty(), 2, &[vec![1]]).unwrap();
        assert!(single.is_semistandard());

        let bad = SkewTableau::from_rows_unchecked(
            p(&[1, 1]),
            Partition::empty(),
            2,
            &[vec![2], vec![2]],
        )
        .unwrap();
        assert!(!bad.is_semistandard());
        assert_eq!(
            bad.validate_filling(),
            Err(Error::ColumnNotStrictlyIncreasing { row: 2, col: 1 })
        );
    }

    #[test]
    fn shape_validation_errors() {
        assert!(matches!(
            SkewTableau::from_rows(p(&[1]), p(&[2]), 2, &[vec![0]]),
            Err(Error::NotContained { .. })
        ));
        assert!(matches!(
            SkewTableau::from_rows(
                p(&[1, 1, 1]),
                Partition::empty(),
                2,
                &[vec![1], vec![2], vec![3]]
            ),
            Err(Error::AlphabetTooSmall { .. })
        ));
        assert!(matches!(
            SkewTableau::from_rows(p(&[2]), Partition::empty(), 3, &[vec![1, 1]]),
            Err(Error::InvalidAlphabet { two_n: 3 })
        ));
        assert!(matches!(
            SkewTableau::from_rows(p(&[2]), Partition::empty(), 4, &[vec![1]]),
            Err(Error::RowLengthMismatch {
                row: 1,
                got: 1,
                want: 2
            })
        ));
        assert!(matches!(
            SkewTableau::from_rows(p(&[2]), p(&[1]), 4, &[vec![1, 1]]),
            Err(Error::NonzeroOnMu {
                row: 1,
                col: 1,
                entry: 1
            })
        ));
        assert!(matches!(
            SkewTableau::from_rows(p(&[2]), Partition::empty(), 4, &[vec![0, 1]]),
            Err(Error::ZeroOffMu { row: 1, col: 1 })
        ));
    }

    #[test]
    fn reverse_row_word_examples() {
        let t = example_main_t();
        assert_eq!(
            t.reverse_row_word().letters(),
            &[1, 1, 2, 1, 3, 2, 1, 4, 3, 2, 4, 3, 2, 4]
        );

        let empty =
            SkewTableau::from_rows(p(&[2, 1]), p(&[2, 1]), 4, &[vec![0, 0], vec![0]]).unwrap();
        assert!(empty.reverse_row_word().is_empty());

        let row = SkewTableau::from_rows(p(&[2]), Partition::empty(), 4, &[vec![1, 2]]).unwrap();
        assert_eq!(row.reverse_row_word().letters(), &[2, 1]);
    }

    #[test]
    fn weight_examples() {
        let t = example_main_t();
        let w = t.reverse_row_word().weight(8);
        assert_eq!(w.entries(), &[4, 4, 3, 3, 0, 0, 0, 0]);

        assert_eq!(Word::new(vec![]).weight(4), ContentVector::zero(4));
        assert_eq!(Word::new(vec![2, 1, 1]).weight(4).entries(), &[2, 1, 0, 0]);
    }

    #[test]
    fn yamanouchi_examples() {
        let w = Word::new(vec![1, 1, 2, 1, 2, 3, 2, 3, 4, 3, 4, 4]);
        assert!(yamanouchi_prefix_oracle(&w));
        assert!(w.is_yamanouchi());

        assert!(Word::new(vec![]).is_yamanouchi());
        assert!(!Word::new(vec![2, 1]).is_yamanouchi());
    }

    #[test]
    fn chain_to_tableau_examples() {
        assert_eq!(
            nested_example_chain().to_tableau(),
            nested_example_tableau()
        );

        let empties = NestedChain::new(vec![Partition::empty(); 4]).unwrap();
        let t = empties.to_tableau();
        assert!(t.lambda().is_empty());
        assert_eq!(t.two_n(), 4);

        let c = NestedChain::new(vec![p(&[1]), Partition::empty()]).unwrap();
        let t = c.to_tableau();
        assert_eq!(t.entry(1, 1), Some(2));
    }

    #[test]
    fn tableau_to_chain_examples() {
        let chain = NestedChain::from_tableau(&nested_example_tableau()).unwrap();
        assert_eq!(chain, nested_example_chain());

        let empty = SkewTableau::from_rows(Partition::empty(), Partition::empty(), 4, &[]).unwrap();
        assert_eq!(
            NestedChain::from_tableau(&empty).unwrap(),
            NestedChain::new(vec![Partition::empty(); 4]).unwrap()
        );

        let single = SkewTableau::from_rows(p(&[1]), Partition::empty(), 2, &[vec![1]]).unwrap();
        assert_eq!(
            NestedChain::from_tableau(&single).unwrap(),
            NestedChain::new(vec![p(&[1]), p(&[1])]).unwrap()
        );

        assert_eq!(
            NestedChain::from_tableau(&example_main_t()),
            Err(Error::SkewInput)
        );
    }

    #[test]
    fn first_column_examples() {
        assert_eq!(nested_example_chain().first_column(), vec![3, 4, 6, 8]);
        assert!(NestedChain::new(vec![Partition::empty(); 4])
            .unwrap()
            .first_column()
            .is_empty());
        assert_eq!(
            NestedChain::new(vec![p(&[1]), Partition::empty()])
                .unwrap()
                .first_column(),
            vec![2]
        );
    }

    #[test]
    fn chain_validation_rejects_bad_steps() {
        assert!(matches!(
            NestedChain::new(vec![p(&[1]), p(&[2])]),
            Err(Error::ChainNotNested { step: 1 })
        ));
        // (2,2)/(1) puts two boxes in column 2
        assert!(matches!(
            NestedChain::new(vec![p(&[2, 2]), p(&[1])]),
            Err(Error::ChainStepNotHorizontal { step: 1 })
        ));
        // member(1) itself must be a horizontal strip over the empty shape
        assert!(matches!(
            NestedChain::new(vec![p(&[1, 1]), p(&[1, 1])]),
            Err(Error::ChainStepNotHorizontal { step: 2 })
        ));
        assert!(matches!(
            NestedChain::new(vec![p(&[1])]),
            Err(Error::InvalidAlphabet { two_n: 1 })
        ));
    }

    #[test]
    fn chain_round_trip_exhaustive() {
        for two_n in [2usize, 4, 6] {
            for size in 0..=6 {
                for shape in crate::partition::partitions_of_size(size) {
                    if shape.len() > two_n {
                        continue;
                    }
                    for g in all_skew_ssyt(&shape, &Partition::empty(), two_n) {
                        let chain = NestedChain::from_tableau(&g).unwrap();
                        assert_eq!(chain.to_tableau(), g);
                        assert_eq!(
                            NestedChain::from_tableau(&chain.to_tableau()).unwrap(),
                            chain
                        );
                        // chain ascents spell the literal first column
                        let literal: Vec<usize> = (1..=g.lambda().len())
                            .map(|r| g.entry(r, 1).unwrap())
                            .collect();
                        assert_eq!(chain.first_column(), literal);
                    }
                }
            }
        }
    }

    #[test]
    fn word_weight_equals_cell_content_exhaustive() {
        for size in 0..=7 {
            for lambda in crate::partition::partitions_of_size(size) {
                if lambda.len() > 6 {
                    continue;
                }
                for mu in crate::partition::subpartitions(&lambda) {
                    for t in all_skew_ssyt(&lambda, &mu, 6) {
                        assert_eq!(t.reverse_row_word().weight(6), t.content());
                    }
                }
            }
        }
    }

    #[test]
    fn with_alphabet_revalidates() {
        let t = example_main_t();
        let wider = t.with_alphabet(12).unwrap();
        assert_eq!(wider.two_n(), 12);
        assert_eq!(
            wider.rows().collect::<Vec<_>>(),
            t.rows().collect::<Vec<_>>()
        );
        // entries up to 4 but 2 rows > alphabet 2
        assert!(t.with_alphabet(2).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn yamanouchi_matches_prefix_oracle(letters in prop::collection::vec(1usize..=6, 0..24)) {
                let w = Word::new(letters);
                prop_assert_eq!(w.is_yamanouchi(), yamanouchi_prefix_oracle(&w));
            }
        }
    }
}
