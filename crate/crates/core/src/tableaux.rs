//! Standard Young tableaux, exhaustive enumeration, and row insertion /
//! reverse row insertion with the relabelling that turns them into a
//! bijection `(P, corner) <-> (P⁻, i)`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Cell, Partition};

/// A filling of a shape by `1..=n`, increasing along rows and down columns.
///
/// Stored row by row; `rows[i]` has length `shape.parts()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates shape, standardness, and that the entries are exactly `1..=n`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(lens).map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for v in rows.iter().flatten() {
            if *v == 0 || *v > n || seen[*v] {
                return Err(Error::InvalidTableau("entries must be a permutation of 1..=n".to_string()));
            }
            seen[*v] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("rows must increase".to_string()));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau("columns must increase".to_string()));
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    /// Entries row by row, top row first.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// Every SYT of shape `λ`, sorted lexicographically by row word.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    // Place n, n-1, ..., 1 into removable corners of the shrinking shape.
    fn rec(shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
        let n = shape.size();
        if n == 0 {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for c in shape.removable_cells() {
            rows[c.row - 1][c.col - 1] = n;
            let smaller = shape.remove_cell(c).expect("removable");
            rec(&smaller, rows, out);
        }
    }
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    rec(lambda, &mut rows, &mut out);
    out.sort_by_cached_key(StandardTableau::row_word);
    out
}

/// Every SYT with `n` cells, shapes in reverse-lexicographic order.
pub fn enumerate_syt_of_size(n: usize) -> Vec<StandardTableau> {
    partitions_of(n).iter().flat_map(enumerate_syt).collect()
}

/// Reverse row insertion from the removable corner `x`, then relabelling.
///
/// The entry at `x` moves up one row at a time, replacing the largest entry
/// smaller than it; the value displaced from row 1 is ejected as `i`. All
/// entries greater than `i` are then decremented, giving a SYT of size
/// `n - 1`.
pub fn reverse_row_insert(p: &StandardTableau, x: Cell) -> Result<(StandardTableau, usize)> {
    if !p.shape().removable_cells().contains(&x) {
        return Err(Error::NotRemovable { row: x.row, col: x.col });
    }
    let mut rows = p.rows.clone();
    let mut carried = rows[x.row - 1].pop().expect("corner cell exists");
    if rows[x.row - 1].is_empty() {
        rows.pop();
    }
    for r in (0..x.row - 1).rev() {
        let row = &mut rows[r];
        // largest entry smaller than the carried value
        let pos = row.partition_point(|&v| v < carried) - 1;
        core::mem::swap(&mut row[pos], &mut carried);
    }
    let ejected = carried;
    for v in rows.iter_mut().flatten() {
        if *v > ejected {
            *v -= 1;
        }
    }
    Ok((StandardTableau { rows }, ejected))
}

/// Inverse of [`reverse_row_insert`]: increments entries `>= i`, row-inserts
/// `i`, and returns the new tableau with the cell the insertion created.
pub fn forward_row_insert(p: &StandardTableau, i: usize) -> Result<(StandardTableau, Cell)> {
    let n = p.size() + 1;
    if i == 0 || i > n {
        return Err(Error::OutOfRange { value: i, max: n });
    }
    let mut rows = p.rows.clone();
    for v in rows.iter_mut().flatten() {
        if *v >= i {
            *v += 1;
        }
    }
    let mut carried = i;
    for (r, row) in rows.iter_mut().enumerate() {
        // smallest entry greater than the carried value
        let pos = row.partition_point(|&v| v < carried);
        if pos == row.len() {
            row.push(carried);
            return Ok((StandardTableau { rows }, Cell::new(r + 1, pos + 1)));
        }
        core::mem::swap(&mut row[pos], &mut carried);
    }
    let row = rows.len() + 1;
    rows.push(vec![carried]);
    Ok((StandardTableau { rows }, Cell::new(row, 1)))
}

impl fmt::Display for StandardTableau {
    /// Rows of space-separated entries joined by `/`, e.g. `1 3/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for StandardTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(StandardTableau::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|v| v.parse::<usize>().map_err(|_| Error::InvalidTableau(s.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::f_lambda;
    use alloc::format;
    use alloc::string::String;
    use num_bigint::BigUint;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    /// Backtracking oracle: place 1..=n one at a time into any addable cell.
    fn count_by_forward_placement(lambda: &Partition) -> usize {
        fn rec(cur: &Partition, target: &Partition) -> usize {
            if cur == target {
                return 1;
            }
            cur.addable_cells()
                .into_iter()
                .filter(|c| target.contains(*c))
                .map(|c| rec(&cur.add_cell(c).unwrap(), target))
                .sum()
        }
        rec(&Partition::empty(), lambda)
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_syt(&part(&[1, 1])).len(), 1);
        let two_one: Vec<String> = enumerate_syt(&part(&[2, 1])).iter().map(|t| format!("{t}")).collect();
        assert_eq!(two_one, ["1 2/3", "1 3/2"]);
        assert_eq!(enumerate_syt(&part(&[2, 2])).len(), 2);
        assert_eq!(enumerate_syt(&Partition::empty()), vec![StandardTableau::empty()]);
    }

    #[test]
    fn enumeration_matches_oracle_and_hook_formula() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let all = enumerate_syt(&lam);
                assert_eq!(all.len(), count_by_forward_placement(&lam), "{lam}");
                assert_eq!(BigUint::from(all.len()), f_lambda(&lam).unwrap(), "{lam}");
                for t in &all {
                    assert_eq!(StandardTableau::new(t.rows().to_vec()).as_ref(), Ok(t));
                }
                assert!(all.windows(2).all(|w| w[0].row_word() < w[1].row_word()));
            }
        }
    }

    #[test]
    fn reverse_insertion_examples() {
        let single = tab("1");
        assert_eq!(
            reverse_row_insert(&single, Cell::new(1, 1)).unwrap(),
            (StandardTableau::empty(), 1)
        );
        assert_eq!(reverse_row_insert(&tab("1 2"), Cell::new(1, 2)).unwrap(), (tab("1"), 2));
        // 2 bumps 1 out of row one, leaving "3" which relabels to "2"... then to "1 2"
        let p = tab("1 3/2");
        let (smaller, i) = reverse_row_insert(&p, Cell::new(2, 1)).unwrap();
        assert_eq!((format!("{smaller}"), i), (String::from("1 2"), 1));
        assert_eq!(forward_row_insert(&smaller, i).unwrap(), (p, Cell::new(2, 1)));
        assert_eq!(
            reverse_row_insert(&tab("1 3/2"), Cell::new(1, 1)),
            Err(Error::NotRemovable { row: 1, col: 1 })
        );
    }

    #[test]
    fn forward_insertion_examples() {
        assert_eq!(
            forward_row_insert(&StandardTableau::empty(), 1).unwrap(),
            (tab("1"), Cell::new(1, 1))
        );
        assert_eq!(
            forward_row_insert(&tab("1 2"), 4),
            Err(Error::OutOfRange { value: 4, max: 3 })
        );
        assert_eq!(forward_row_insert(&tab("1 2"), 0), Err(Error::OutOfRange { value: 0, max: 3 }));
    }

    #[test]
    fn round_trips_small_sizes() {
        for n in 1..=6 {
            for p in enumerate_syt_of_size(n) {
                for x in p.shape().removable_cells() {
                    let (pm, i) = reverse_row_insert(&p, x).unwrap();
                    assert_eq!(forward_row_insert(&pm, i).unwrap(), (p.clone(), x));
                }
            }
            for pm in enumerate_syt_of_size(n - 1) {
                for i in 1..=n {
                    let (p, x) = forward_row_insert(&pm, i).unwrap();
                    assert_eq!(reverse_row_insert(&p, x).unwrap(), (pm.clone(), i));
                }
            }
        }
    }

    #[test]
    fn parse_rejects_non_standard() {
        assert!("2 1".parse::<StandardTableau>().is_err());
        assert!("1 2/2".parse::<StandardTableau>().is_err());
        assert!("1/2 3".parse::<StandardTableau>().is_err());
        assert!("1 3/2".parse::<StandardTableau>().is_ok());
        assert_eq!("".parse::<StandardTableau>().unwrap(), StandardTableau::empty());
    }
}
