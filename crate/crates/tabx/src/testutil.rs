//! Shared fixtures and independent brute-force oracles for unit tests.

use crate::lr::LrInstance;
use crate::partition::Partition;
use crate::tableau::{SkewTableau, Word};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn t(lambda: &[usize], mu: &[usize], two_n: usize, rows: &[&[usize]]) -> SkewTableau {
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    SkewTableau::from_rows(p(lambda), p(mu), two_n, &rows).unwrap()
}

/// The worked companion example: lambda (6,5,5,4,3,1), mu (4,3,2,1),
/// weight (4,4,3,3), alphabet [8].
pub fn example_main_t() -> SkewTableau {
    t(
        &[6, 5, 5, 4, 3, 1],
        &[4, 3, 2, 1],
        8,
        &[
            &[0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 1, 2],
            &[0, 0, 1, 2, 3],
            &[0, 2, 3, 4],
            &[2, 3, 4],
            &[4],
        ],
    )
}

/// Violation example with an entry 1 at row 6 for n = 5; companion first
/// column (4,5,6,7,8).
pub fn example_item1() -> SkewTableau {
    t(
        &[5, 5, 5, 3, 2, 2, 2, 1],
        &[4, 3, 2, 1, 1],
        10,
        &[
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 2],
            &[0, 0, 1, 2, 3],
            &[0, 2, 4],
            &[0, 5],
            &[1, 6],
            &[2, 7],
            &[8],
        ],
    )
}

/// Twelve-row example that satisfies the flag bound at n = 7.
pub fn example_item2() -> SkewTableau {
    t(
        &[5, 5, 5, 4, 4, 2, 2, 2, 2, 2, 1, 1],
        &[4, 3, 2, 1, 1],
        14,
        &[
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 2],
            &[0, 0, 1, 2, 3],
            &[0, 2, 3, 4],
            &[0, 3, 4, 5],
            &[1, 6],
            &[2, 7],
            &[4, 8],
            &[5, 9],
            &[6, 10],
            &[11],
            &[12],
        ],
    )
}

/// Ten-row example reused at n = 5, 6, 7; pass the alphabet 2n.
pub fn example_item3(two_n: usize) -> SkewTableau {
    t(
        &[5, 5, 5, 4, 4, 2, 2, 2, 2, 2],
        &[4, 3, 2, 1, 1],
        two_n,
        &[
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 2],
            &[0, 0, 1, 2, 3],
            &[0, 2, 3, 4],
            &[0, 3, 4, 5],
            &[1, 6],
            &[2, 7],
            &[4, 8],
            &[5, 9],
            &[6, 10],
        ],
    )
}

/// Violation example with an entry 5 at row 8 for n = 5; companion first
/// column (2,3,4,8,10).
pub fn example_item4() -> SkewTableau {
    t(
        &[5, 5, 5, 4, 4, 2, 2, 2, 2],
        &[4, 3, 2, 1, 1],
        10,
        &[
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 2],
            &[0, 0, 1, 2, 3],
            &[0, 1, 3, 4],
            &[0, 2, 4, 5],
            &[2, 3],
            &[4, 6],
            &[5, 7],
            &[6, 8],
        ],
    )
}

/// Prefix-count Yamanouchi oracle, independent of `Word::is_yamanouchi`.
pub fn yamanouchi_prefix_oracle(w: &Word) -> bool {
    let letters = w.letters();
    for k in 1..=letters.len() {
        let prefix = &letters[..k];
        let max = prefix.iter().copied().max().unwrap_or(0);
        let counts: Vec<usize> = (1..=max)
            .map(|x| prefix.iter().filter(|&&y| y == x).count())
            .collect();
        if counts.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
    }
    true
}

/// Every semistandard filling of `lambda/mu` on `[two_n]`, generated by
/// plain left-to-right row filling with no Yamanouchi or weight pruning.
pub fn all_skew_ssyt(lambda: &Partition, mu: &Partition, two_n: usize) -> Vec<SkewTableau> {
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&w| vec![0; w]).collect();
    let cells: Vec<(usize, usize)> = (1..=lambda.len())
        .flat_map(|r| (mu.part(r) + 1..=lambda.part(r)).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        lambda: &Partition,
        mu: &Partition,
        two_n: usize,
        cells: &[(usize, usize)],
        pos: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<SkewTableau>,
    ) {
        if pos == cells.len() {
            out.push(
                SkewTableau::from_rows(lambda.clone(), mu.clone(), two_n, rows)
                    .expect("generated filling is semistandard"),
            );
            return;
        }
        let (r, c) = cells[pos];
        let mut lo = 1;
        if c > mu.part(r) + 1 {
            lo = lo.max(rows[r - 1][c - 2]);
        }
        if r > 1 && c <= lambda.part(r - 1) {
            lo = lo.max(rows[r - 2][c - 1] + 1);
        }
        for e in lo..=two_n {
            rows[r - 1][c - 1] = e;
            rec(lambda, mu, two_n, cells, pos + 1, rows, out);
            rows[r - 1][c - 1] = 0;
        }
    }
    rec(lambda, mu, two_n, &cells, 0, &mut rows, &mut out);
    out
}

/// Brute-force LR enumeration: all semistandard fillings filtered by a
/// local Yamanouchi check and the weight, sorted by reverse row word.
pub fn naive_lr_oracle(inst: &LrInstance) -> Vec<SkewTableau> {
    let mut out: Vec<SkewTableau> = all_skew_ssyt(inst.lambda(), inst.mu(), inst.two_n())
        .into_iter()
        .filter(|t| {
            let w = t.reverse_row_word();
            if !yamanouchi_prefix_oracle(&w) {
                return false;
            }
            let counts: Vec<usize> = (1..=inst.two_n())
                .map(|x| w.letters().iter().filter(|&&y| y == x).count())
                .collect();
            let target: Vec<usize> = (1..=inst.two_n()).map(|i| inst.nu().part(i)).collect();
            counts == target
        })
        .collect();
    out.sort_by_key(|t| t.reverse_row_word().letters().to_vec());
    out
}
