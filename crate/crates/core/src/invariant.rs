//! Spectrum of the fundamental invariant `C_n` and what it encodes.
//!
//! The eigenvalue of `C_n` on the irrep `G` is the sum of the q-contents of
//! the boxes of `G`. Its coefficients are cumulative diagonal lengths, which
//! is what lets [`reconstruct_diagram`] invert it. Under `q = exp(delta)`
//! the eigenvalue of `C~_n = ((q-1)/q) C_n` is the generating function of
//! the content power sums `sigma_k`, which determine the central characters
//! of the single-cycle class-sums.

use std::collections::{BTreeMap, HashSet};

use num_traits::One;

use crate::diagrams::{partitions, YoungDiagram};
use crate::error::{Error, Result};
use crate::laurent::rational::{factorial, int, ratio, to_i64};
use crate::laurent::{exp_series, q_content, LaurentPoly, Rational};

/// Eigenvalue of `C_n` on `g`: `sum over boxes of q[j-i]_q`.
pub fn eigenvalue_c(g: &YoungDiagram) -> LaurentPoly {
    g.contents().into_iter().map(q_content).sum()
}

/// Eigenvalue of `C~_n`: `sum over boxes of (q^(j-i) - 1)`.
pub fn eigenvalue_ctilde(g: &YoungDiagram) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for c in g.contents() {
        out.add_term(c, Rational::one());
        out.add_term(0, -Rational::one());
    }
    out
}

/// `sum over boxes of (j-i)^k`.
pub fn power_sum(g: &YoungDiagram, k: u32) -> i128 {
    g.contents()
        .into_iter()
        .map(|c| (c as i128).checked_pow(k).expect("power sum overflow"))
        .sum()
}

/// Closed forms for the central characters of the 2-, 3-, 4- and 5-cycle
/// class-sums of `S_n` in terms of content power sums.
pub fn central_character(p: usize, n: usize, g: &YoungDiagram) -> Result<Rational> {
    if g.n() != n {
        return Err(Error::InvalidArgument(format!(
            "diagram {g} has {} boxes, expected {n}",
            g.n()
        )));
    }
    let s = |k| Rational::from_integer(power_sum(g, k).into());
    let n = n as i64;
    Ok(match p {
        2 => s(1),
        3 => s(2) - int(n * (n - 1) / 2),
        4 => s(3) - int(2 * n - 3) * s(1),
        5 => {
            s(4) - int(3 * n - 10) * s(2) - int(2) * s(1) * s(1)
                + ratio(n * (n - 1) * (5 * n - 19), 6)
        }
        other => return Err(Error::UnsupportedCycle(other)),
    })
}

/// Central characters of the single-cycle class-sums `[(p)]_n`,
/// `p = 2..=5`, for every irrep of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacterTable {
    pub n: usize,
    pub entries: BTreeMap<(usize, YoungDiagram), Rational>,
}

impl CentralCharacterTable {
    pub fn new(n: usize) -> Self {
        let mut entries = BTreeMap::new();
        for g in partitions(n) {
            for p in 2..=5 {
                let v = central_character(p, n, &g).expect("p in range and g partitions n");
                entries.insert((p, g.clone()), v);
            }
        }
        Self { n, entries }
    }

    pub fn get(&self, p: usize, g: &YoungDiagram) -> Option<&Rational> {
        self.entries.get(&(p, g.clone()))
    }
}

/// Recovers `sigma_1..=sigma_kmax` from an eigenvalue of `C~_n` via its
/// expansion at `q = exp(delta)`.
pub fn sigma_from_eigenvalue(p: &LaurentPoly, kmax: usize) -> Result<Vec<Rational>> {
    let series = exp_series(p, kmax)?;
    (1..=kmax)
        .map(|k| {
            let v = series.coeff(k) * Rational::from_integer(factorial(k));
            if v.is_integer() {
                Ok(v)
            } else {
                Err(Error::NonIntegerSigma {
                    k,
                    value: v.to_string(),
                })
            }
        })
        .collect()
}

/// Rebuilds the Young diagram with `n` boxes whose `C_n` eigenvalue is `p`.
///
/// The coefficient of `q^k` (`k > 0`) counts boxes of content `>= k`; the
/// coefficient of `q^(k+1)` (`k < 0`) is minus the count of boxes of content
/// `<= k`. Differencing gives the diagonal lengths, and the principal
/// diagonal takes the remaining boxes.
pub fn reconstruct_diagram(p: &LaurentPoly, n: usize) -> Result<YoungDiagram> {
    let invalid = |why: String| Error::InvalidSpectrum(format!("{p}: {why}"));
    let coeff = |e: i64| -> Result<i64> {
        to_i64(&p.coeff(e)).ok_or_else(|| invalid(format!("non-integer coefficient of q^{e}")))
    };
    if n == 0 {
        return Err(invalid("a diagram needs at least one box".into()));
    }
    let nn = n as i64;
    if let (Some(lo), Some(hi)) = (p.min_exponent(), p.max_exponent()) {
        if hi >= nn || lo < 2 - nn {
            return Err(invalid(format!("exponent out of range for {n} boxes")));
        }
    }
    if n == 1 {
        return if p.is_zero() {
            Ok(YoungDiagram::row(1))
        } else {
            Err(invalid("a single box has eigenvalue 0".into()))
        };
    }

    // pi_k for k = 1..n-1, nu_k for k = -1..-(n-1)
    let pi: Vec<i64> = (1..nn).map(coeff).collect::<Result<_>>()?;
    let nu: Vec<i64> = (1..nn)
        .map(|k| coeff(1 - k).map(|c| -c))
        .collect::<Result<_>>()?;

    let mut beta: BTreeMap<i64, i64> = BTreeMap::new();
    for k in 1..nn {
        let here = pi[(k - 1) as usize];
        let next = pi.get(k as usize).copied().unwrap_or(0);
        beta.insert(k, here - next);
        let here = nu[(k - 1) as usize];
        let next = nu.get(k as usize).copied().unwrap_or(0);
        beta.insert(-k, here - next);
    }
    beta.insert(0, nn - (pi[0] + nu[0]));
    if let Some((k, b)) = beta.iter().find(|(_, &b)| b < 0) {
        return Err(invalid(format!("negative diagonal length {b} at content {k}")));
    }

    // Diagonal k >= 0 occupies (1, 1+k), (2, 2+k), ...; diagonal k < 0
    // occupies (1-k, 1), (2-k, 2), ...
    let mut row_boxes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&k, &b) in &beta {
        for t in 1..=b {
            let (i, j) = if k >= 0 { (t, t + k) } else { (t - k, t) };
            row_boxes.entry(i as usize).or_default().push(j as usize);
        }
    }
    let mut rows = Vec::new();
    for (expected_row, (&i, cols)) in (1..).zip(&row_boxes) {
        let mut cols = cols.clone();
        cols.sort_unstable();
        if i != expected_row || cols.iter().enumerate().any(|(t, &j)| j != t + 1) {
            return Err(invalid("diagonal lengths do not form a Young diagram".into()));
        }
        rows.push(cols.len());
    }
    let g = YoungDiagram::new(rows).map_err(|e| invalid(e.to_string()))?;
    if g.n() != n || &eigenvalue_c(&g) != p {
        return Err(invalid("not the eigenvalue of any diagram".into()));
    }
    Ok(g)
}

/// Smallest `k` such that `(sigma_1, ..., sigma_k)` separates all
/// partitions of `n`.
pub fn separating_depth(n: usize) -> Result<usize> {
    if !(1..=41).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "separating depth is computed for 1 <= n <= 41, got {n}"
        )));
    }
    let parts = partitions(n);
    let contents: Vec<Vec<i128>> = parts
        .iter()
        .map(|g| g.contents().into_iter().map(i128::from).collect())
        .collect();
    let mut tuples: Vec<Vec<i128>> = vec![Vec::new(); parts.len()];
    for k in 1.. {
        for (t, cs) in tuples.iter_mut().zip(&contents) {
            t.push(cs.iter().map(|&c| c.pow(k)).sum());
        }
        let distinct: HashSet<&Vec<i128>> = tuples.iter().collect();
        if distinct.len() == tuples.len() {
            return Ok(k as usize);
        }
    }
    unreachable!("power sums eventually separate distinct multisets")
}
