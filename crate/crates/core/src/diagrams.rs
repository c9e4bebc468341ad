//! Young diagrams, contents and the branching lattice.
//!
//! Boxes are indexed matrix-style from 1: box `(i, j)` sits in row `i`,
//! column `j` and has content `j - i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of `n`, stored as its weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDiagram("a diagram needs at least one box".into()));
        }
        if rows.contains(&0) {
            return Err(Error::InvalidDiagram(format!(
                "row lengths must be positive: {rows:?}"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "row lengths must be weakly decreasing: {rows:?}"
            )));
        }
        Ok(Self { rows })
    }

    /// Builds a diagram from a list that may contain trailing zeros.
    pub fn from_padded(rows: &[usize]) -> Result<Self> {
        let trimmed: Vec<usize> = rows.iter().copied().take_while(|&r| r > 0).collect();
        if rows[trimmed.len()..].iter().any(|&r| r > 0) {
            return Err(Error::InvalidDiagram(format!(
                "row lengths must be weakly decreasing: {rows:?}"
            )));
        }
        Self::new(trimmed)
    }

    /// The single-row diagram `[n]`.
    pub fn row(n: usize) -> Self {
        Self { rows: vec![n] }
    }

    /// The single-column diagram `[1^n]`.
    pub fn column(n: usize) -> Self {
        Self { rows: vec![1; n] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let cols = (1..=self.rows[0])
            .map(|j| self.rows.iter().filter(|&&r| r >= j).count())
            .collect();
        Self { rows: cols }
    }

    /// All boxes `(i, j)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Contents `j - i` of every box, in row-major order.
    pub fn contents(&self) -> Vec<i64> {
        self.boxes().map(|(i, j)| content(i, j)).collect()
    }

    /// Number of boxes on each diagonal, keyed by content.
    pub fn diagonal_counts(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for c in self.contents() {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    /// Boxes whose removal leaves a valid diagram.
    pub fn removable_boxes(&self) -> Vec<(usize, usize)> {
        (0..self.rows.len())
            .filter(|&i| i + 1 == self.rows.len() || self.rows[i] > self.rows[i + 1])
            .map(|i| (i + 1, self.rows[i]))
            .collect()
    }

    /// Positions where a box can be added.
    pub fn addable_boxes(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.rows.len())
            .filter(|&i| i == 0 || self.rows[i - 1] > self.rows[i])
            .map(|i| (i + 1, self.rows[i] + 1))
            .collect();
        out.push((self.rows.len() + 1, 1));
        out
    }

    /// Diagrams obtained by deleting one corner box, with the deleted box.
    /// Empty for `[1]`.
    pub fn branch_down_with_boxes(&self) -> Vec<(YoungDiagram, (usize, usize))> {
        if self.n() == 1 {
            return Vec::new();
        }
        self.removable_boxes()
            .into_iter()
            .map(|(i, j)| {
                let mut rows = self.rows.clone();
                rows[i - 1] -= 1;
                if rows[i - 1] == 0 {
                    rows.pop();
                }
                (YoungDiagram { rows }, (i, j))
            })
            .collect()
    }

    pub fn branch_down(&self) -> Vec<YoungDiagram> {
        self.branch_down_with_boxes()
            .into_iter()
            .map(|(d, _)| d)
            .collect()
    }

    pub fn branch_up(&self) -> Vec<YoungDiagram> {
        self.addable_boxes()
            .into_iter()
            .map(|(i, _)| {
                let mut rows = self.rows.clone();
                if i > rows.len() {
                    rows.push(1);
                } else {
                    rows[i - 1] += 1;
                }
                YoungDiagram { rows }
            })
            .collect()
    }

    /// Number of standard tableaux, i.e. the dimension of the irrep.
    pub fn dimension(&self) -> u64 {
        dimension(self)
    }
}

pub fn content(i: usize, j: usize) -> i64 {
    j as i64 - i as i64
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Comma-separated row lengths, e.g. `4,1,1`; surrounding brackets are
    /// tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let rows = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row length {t:?} in diagram {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for YoungDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A chain `[1] = G_1 < G_2 < ... < G_n`, each step adding one box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauPath {
    chain: Vec<YoungDiagram>,
}

impl TableauPath {
    pub fn new(chain: Vec<YoungDiagram>) -> Result<Self> {
        let ok = chain.first().is_some_and(|d| d.n() == 1)
            && chain
                .windows(2)
                .all(|w| w[0].branch_up().contains(&w[1]));
        if !ok {
            return Err(Error::InvalidArgument(
                "a tableau path must start at [1] and add one box per step".into(),
            ));
        }
        Ok(Self { chain })
    }

    pub fn chain(&self) -> &[YoungDiagram] {
        &self.chain
    }

    pub fn end(&self) -> &YoungDiagram {
        self.chain.last().expect("paths are nonempty")
    }

    /// Content of the box added at each step; step 1 is the box `(1,1)`.
    pub fn added_contents(&self) -> Vec<i64> {
        let mut out = vec![0];
        for w in self.chain.windows(2) {
            let (small, big) = (&w[0], &w[1]);
            let row = (0..big.rows.len())
                .find(|&i| small.rows.get(i).copied().unwrap_or(0) != big.rows[i])
                .expect("consecutive diagrams differ");
            out.push(content(row + 1, big.rows[row]));
        }
        out
    }
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rem == 0 {
            out.push(YoungDiagram { rows: cur.clone() });
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Every standard-tableau chain ending at `g`.
pub fn paths(g: &YoungDiagram) -> Vec<TableauPath> {
    fn go(g: &YoungDiagram, suffix: &mut Vec<YoungDiagram>, out: &mut Vec<TableauPath>) {
        suffix.push(g.clone());
        if g.n() == 1 {
            let chain: Vec<YoungDiagram> = suffix.iter().rev().cloned().collect();
            out.push(TableauPath { chain });
        } else {
            for parent in g.branch_down() {
                go(&parent, suffix, out);
            }
        }
        suffix.pop();
    }
    let mut out = Vec::new();
    go(g, &mut Vec::new(), &mut out);
    out
}

static DIMENSIONS: LazyLock<RwLock<HashMap<YoungDiagram, u64>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Dimension by the branching rule `|G| = sum over parents |G'|`, memoized.
pub fn dimension(g: &YoungDiagram) -> u64 {
    if g.n() == 1 {
        return 1;
    }
    if let Some(&d) = DIMENSIONS.read().expect("dimension memo poisoned").get(g) {
        return d;
    }
    let d = g.branch_down().iter().map(dimension).sum();
    DIMENSIONS
        .write()
        .expect("dimension memo poisoned")
        .insert(g.clone(), d);
    d
}

/// Snapshot of the dimension memo (for persistence).
pub fn dimension_memo() -> Vec<(YoungDiagram, u64)> {
    let memo = DIMENSIONS.read().expect("dimension memo poisoned");
    let mut v: Vec<_> = memo.iter().map(|(k, &d)| (k.clone(), d)).collect();
    v.sort();
    v
}

/// Seeds the dimension memo. Entries are verified against the branching
/// rule lazily: a seeded value is only trusted if it matches a recomputation
/// from its parents.
pub fn seed_dimension_memo(entries: impl IntoIterator<Item = (YoungDiagram, u64)>) -> usize {
    let mut accepted = 0;
    for (g, d) in entries {
        let parents_sum: u64 = g.branch_down().iter().map(dimension).sum();
        let expect = if g.n() == 1 { 1 } else { parents_sum };
        if expect == d {
            DIMENSIONS
                .write()
                .expect("dimension memo poisoned")
                .insert(g, d);
            accepted += 1;
        }
    }
    accepted
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn hook_dimension(g: &YoungDiagram) -> u128 {
        // n! / prod(hooks), test-only cross-check
        let conj = g.conjugate();
        let fact: u128 = (1..=g.n() as u128).product();
        let hooks: u128 = g
            .boxes()
            .map(|(i, j)| (g.rows()[i - 1] - j + conj.rows()[j - 1] - i + 1) as u128)
            .product();
        fact / hooks
    }

    #[test]
    fn validation() {
        assert!(YoungDiagram::new(vec![]).is_err());
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert!(YoungDiagram::new(vec![2, 0]).is_err());
        assert!("2,,1".parse::<YoungDiagram>().is_err());
        assert_eq!(d("[4,1,1]").rows(), &[4, 1, 1]);
        assert_eq!(YoungDiagram::from_padded(&[2, 1, 0, 0]).unwrap(), d("2,1"));
        assert!(YoungDiagram::from_padded(&[2, 0, 1]).is_err());
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions(3), vec![d("3"), d("2,1"), d("1,1,1")]);
        let p6 = partitions(6);
        assert_eq!(p6.len(), 11);
        assert!(p6.contains(&d("4,1,1")) && p6.contains(&d("3,3")));
        assert!(partitions(0).is_empty());
    }

    #[test]
    fn partition_counts_match_euler_recurrence() {
        // p(n) = sum_k (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
        let mut p = vec![1i64];
        for n in 1..=20i64 {
            let mut s = 0;
            for k in 1..=n {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                    if g <= n {
                        s += sign * p[(n - g) as usize];
                    }
                }
            }
            p.push(s);
        }
        assert_eq!(p[14], 135);
        for n in 1..=20 {
            assert_eq!(partitions(n).len() as i64, p[n], "n={n}");
        }
    }

    #[test]
    fn partitions_are_descending_and_distinct() {
        for n in 1..=9 {
            let ps = partitions(n);
            assert!(ps.windows(2).all(|w| w[0] > w[1]), "n={n}");
            assert!(ps.iter().all(|g| g.n() == n));
        }
    }

    #[test]
    fn contents_of_small_diagrams() {
        assert_eq!(d("1,1,1").contents(), vec![0, -1, -2]);
        assert_eq!(d("3,3").contents(), vec![0, 1, 2, -1, 0, 1]);
        let mut c = d("4,1,1").contents();
        c.sort();
        assert_eq!(c, vec![-2, -1, 0, 1, 2, 3]);
    }

    #[test]
    fn diagonal_counts_examples() {
        let b: Vec<_> = d("3,3").diagonal_counts().into_iter().collect();
        assert_eq!(b, vec![(-1, 1), (0, 2), (1, 2), (2, 1)]);
        let row: Vec<_> = YoungDiagram::row(5).diagonal_counts().into_iter().collect();
        assert_eq!(row, (0..5).map(|k| (k, 1)).collect::<Vec<_>>());
    }

    #[test]
    fn extreme_diagonals_hold_one_box() {
        for n in 1..=9 {
            for g in partitions(n) {
                let b = g.diagonal_counts();
                assert_eq!(*b.values().next().unwrap(), 1, "{g:?}");
                assert_eq!(*b.values().next_back().unwrap(), 1, "{g:?}");
                assert_eq!(b.values().sum::<usize>(), n);
            }
        }
    }

    #[test]
    fn branching() {
        assert_eq!(d("3,1").branch_down(), vec![d("2,1"), d("3")]);
        assert_eq!(d("2,1").branch_down(), vec![d("1,1"), d("2")]);
        assert!(d("1").branch_down().is_empty());
        assert_eq!(d("2").branch_up(), vec![d("3"), d("2,1")]);
        assert_eq!(d("2,1").branch_up(), vec![d("3,1"), d("2,2"), d("2,1,1")]);
    }

    #[test]
    fn branching_is_an_adjunction() {
        for n in 1..=7 {
            for g in partitions(n) {
                for h in partitions(n + 1) {
                    assert_eq!(
                        g.branch_up().contains(&h),
                        h.branch_down().contains(&g),
                        "{g:?} {h:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn path_counts() {
        assert_eq!(paths(&d("2,1")).len(), 2);
        assert_eq!(paths(&d("3,1")).len(), 3);
        assert_eq!(paths(&YoungDiagram::row(6)).len(), 1);
        assert_eq!(d("2,1").dimension(), 2);
        assert_eq!(d("3").dimension(), 1);
    }

    #[test]
    fn paths_are_distinct_and_end_at_target() {
        for n in 1..=6 {
            for g in partitions(n) {
                let ps = paths(&g);
                assert_eq!(ps.len() as u64, g.dimension());
                let set: std::collections::HashSet<_> = ps.iter().collect();
                assert_eq!(set.len(), ps.len());
                for p in &ps {
                    assert_eq!(p.end(), &g);
                    assert_eq!(p.chain().len(), n);
                    assert!(TableauPath::new(p.chain().to_vec()).is_ok());
                    let mut contents = p.added_contents();
                    let mut expect = g.contents();
                    contents.sort();
                    expect.sort();
                    assert_eq!(contents, expect);
                }
            }
        }
    }

    #[test]
    fn dimension_recursion_and_hook_formula() {
        for n in 2..=8 {
            for g in partitions(n) {
                let by_parents: u64 = g.branch_down().iter().map(|p| p.dimension()).sum();
                assert_eq!(g.dimension(), by_parents);
                assert_eq!(g.dimension() as u128, hook_dimension(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn squared_dimensions_sum_to_factorial() {
        for n in 1..=7u64 {
            let total: u64 = partitions(n as usize)
                .iter()
                .map(|g| g.dimension().pow(2))
                .sum();
            assert_eq!(total, (1..=n).product::<u64>());
        }
    }

    #[test]
    fn tableau_path_validation() {
        assert!(TableauPath::new(vec![d("1"), d("2"), d("3")]).is_ok());
        assert!(TableauPath::new(vec![d("1"), d("3")]).is_err());
        assert!(TableauPath::new(vec![d("2")]).is_err());
    }
}
