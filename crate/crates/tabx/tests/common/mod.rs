//! Fixtures and independent oracles shared by the integration suites.
//!
//! The brute-force generators here deliberately re-derive everything from
//! first principles (left-to-right row filling, prefix counting) so they
//! stay independent of the library's pruned enumeration path.
#![allow(dead_code)]

use std::path::PathBuf;

use tabx::io::parse_tableau;
use tabx::lr::LrInstance;
use tabx::{Partition, SkewTableau, Word};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn fixture(name: &str) -> SkewTableau {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture exists");
    parse_tableau(&text).expect("fixture parses")
}

/// The worked companion example: lambda (6,5,5,4,3,1), mu (4,3,2,1).
pub fn companion_example() -> SkewTableau {
    fixture("companion_example.txt")
}

pub fn item1() -> SkewTableau {
    fixture("item1.txt")
}

pub fn item2() -> SkewTableau {
    fixture("item2.txt")
}

/// The ten-row example, rebuilt over the alphabet `[2n]`.
pub fn item3(n: usize) -> SkewTableau {
    fixture("item3.txt")
        .with_alphabet(2 * n)
        .expect("alphabet fits")
}

pub fn item4() -> SkewTableau {
    fixture("item4.txt")
}

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Prefix-count Yamanouchi oracle.
pub fn yamanouchi_oracle(w: &Word) -> bool {
    let letters = w.letters();
    for k in 1..=letters.len() {
        let prefix = &letters[..k];
        let max = prefix.iter().copied().max().unwrap_or(0);
        for x in 2..=max {
            let cx = prefix.iter().filter(|&&y| y == x).count();
            let cp = prefix.iter().filter(|&&y| y == x - 1).count();
            if cx > cp {
                return false;
            }
        }
    }
    true
}

/// Every semistandard filling of `lambda/mu` on `[two_n]`, generated by
/// plain left-to-right row filling without Yamanouchi or weight pruning.
pub fn all_skew_ssyt(lambda: &Partition, mu: &Partition, two_n: usize) -> Vec<SkewTableau> {
    let cells: Vec<(usize, usize)> = (1..=lambda.len())
        .flat_map(|r| (mu.part(r) + 1..=lambda.part(r)).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&w| vec![0; w]).collect();
    let mut out = Vec::new();
    fill(lambda, mu, two_n, &cells, 0, &mut rows, &mut out);
    out
}

fn fill(
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
        fill(lambda, mu, two_n, cells, pos + 1, rows, out);
        rows[r - 1][c - 1] = 0;
    }
}

/// Brute-force LR enumeration: generate-all-semistandard, then filter by
/// the prefix oracle and the weight; sorted by reverse row word.
pub fn naive_lr(inst: &LrInstance) -> Vec<SkewTableau> {
    let mut out: Vec<SkewTableau> = all_skew_ssyt(inst.lambda(), inst.mu(), inst.two_n())
        .into_iter()
        .filter(|t| {
            let w = t.reverse_row_word();
            if !yamanouchi_oracle(&w) {
                return false;
            }
            (1..=inst.two_n())
                .all(|x| w.letters().iter().filter(|&&y| y == x).count() == inst.nu().part(x))
        })
        .collect();
    out.sort_by_key(|t| t.reverse_row_word().letters().to_vec());
    out
}
