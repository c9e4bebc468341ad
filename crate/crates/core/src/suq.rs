//! Gelfand–Zetlin states of `SU_q(N)` irreps, squared Chevalley matrix
//! elements, and the spectrum of the normalized quadratic Casimir
//! `Lambda = sum_{k<N} q^{2(l_k - k)}` with its link to `C_n(q^2)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::YoungDiagram;
use crate::error::{Error, Result};
use crate::invariant::eigenvalue_c;
use crate::laurent::rational::int;
use crate::laurent::{sym_bracket, LaurentPoly, Rational};

/// An irrep of `SU_q(N)`, given by the top row `l_1 >= ... >= l_N = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuqIrrep {
    n_group: usize,
    top: Vec<i64>,
}

impl SuqIrrep {
    /// `rows` may omit trailing zeros but must leave `l_N = 0`.
    pub fn new(n_group: usize, rows: &[usize]) -> Result<Self> {
        if n_group < 2 {
            return Err(Error::InvalidArgument(format!("SU({n_group}) needs N >= 2")));
        }
        let nonzero = rows.iter().rposition(|&r| r > 0).map_or(0, |p| p + 1);
        if nonzero > n_group - 1 {
            return Err(Error::InvalidArgument(format!(
                "{rows:?} has more than N-1 = {} rows",
                n_group - 1
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "row lengths must be weakly decreasing: {rows:?}"
            )));
        }
        let mut top: Vec<i64> = rows[..nonzero].iter().map(|&r| r as i64).collect();
        top.resize(n_group, 0);
        Ok(Self { n_group, top })
    }

    pub fn from_diagram(g: &YoungDiagram, n_group: usize) -> Result<Self> {
        Self::new(n_group, g.rows())
    }

    /// `N`.
    pub fn group_rank(&self) -> usize {
        self.n_group
    }

    /// `h_{1,N}, ..., h_{N,N}`.
    pub fn top_row(&self) -> &[i64] {
        &self.top
    }

    /// Number of boxes, the eigenvalue of the linear invariant.
    pub fn boxes(&self) -> usize {
        self.top.iter().sum::<i64>() as usize
    }

    /// The Young diagram, or `None` for the trivial irrep.
    pub fn diagram(&self) -> Option<YoungDiagram> {
        let rows: Vec<usize> = self.top.iter().map(|&r| r as usize).collect();
        YoungDiagram::from_padded(&rows).ok()
    }
}

impl fmt::Display for SuqIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<String> = self
            .top
            .iter()
            .filter(|&&r| r > 0)
            .map(i64::to_string)
            .collect();
        if nonzero.is_empty() {
            write!(f, "{}:0", self.n_group)
        } else {
            write!(f, "{}:{}", self.n_group, nonzero.join(","))
        }
    }
}

impl fmt::Debug for SuqIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuqIrrep({self})")
    }
}

impl FromStr for SuqIrrep {
    type Err = Error;

    /// `N:l1,l2,...`, trailing zeros optional.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected N:l1,l2,... but got {s:?}"));
        let (n, rows) = s.trim().split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let rows = if rows.trim().is_empty() {
            Vec::new()
        } else {
            rows.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(n, &rows)
    }
}

impl Serialize for SuqIrrep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SuqIrrep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A Gelfand–Zetlin pattern; `h(i, j)` for `1 <= i <= j <= N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GZPattern {
    // rows[j-1][i-1] = h_{i,j}
    rows: Vec<Vec<i64>>,
}

impl GZPattern {
    /// From rows listed bottom-up: `rows[j-1]` has the `j` entries `h_{.,j}`.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (j, r) in rows.iter().enumerate() {
            if r.len() != j + 1 {
                return Err(Error::InvalidArgument(format!(
                    "row {} of a GZ pattern needs {} entries",
                    j + 1,
                    j + 1
                )));
            }
        }
        let p = Self { rows };
        if let Some((i, j)) = p.first_violation() {
            return Err(Error::PatternViolation { j: i, k: j });
        }
        Ok(p)
    }

    pub fn n_group(&self) -> usize {
        self.rows.len()
    }

    pub fn h(&self, i: usize, j: usize) -> i64 {
        self.rows[j - 1][i - 1]
    }

    pub fn row(&self, j: usize) -> &[i64] {
        &self.rows[j - 1]
    }

    /// The first `(i, j)` with `h_{i,j+1} >= h_{i,j} >= h_{i+1,j+1}` failing.
    fn first_violation(&self) -> Option<(usize, usize)> {
        for j in 1..self.rows.len() {
            for i in 1..=j {
                let v = self.h(i, j);
                if !(self.h(i, j + 1) >= v && v >= self.h(i + 1, j + 1)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }

    /// The pattern with `h_{j,k}` moved by `delta`.
    fn shifted(&self, j: usize, k: usize, delta: i64) -> Self {
        let mut p = self.clone();
        p.rows[k - 1][j - 1] += delta;
        p
    }

    /// Exponent of the `q^{h_k}` eigenvalue:
    /// `2 sum_{i<=k} h_{i,k} - sum_{i<=k+1} h_{i,k+1} - sum_{i<=k-1} h_{i,k-1}`.
    pub fn weight(&self, k: usize) -> i64 {
        let s = |j: usize| -> i64 {
            if j == 0 {
                0
            } else {
                self.rows[j - 1].iter().sum()
            }
        };
        2 * s(k) - s(k + 1) - s(k - 1)
    }
}

impl fmt::Display for GZPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, r) in self.rows.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" / ")?;
            }
            let s: Vec<String> = r.iter().map(i64::to_string).collect();
            f.write_str(&s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GZPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GZ[{self}]")
    }
}

/// All GZ patterns with the irrep's top row, in lexicographic order of
/// the rows read from the top down.
pub fn gz_enumerate(irrep: &SuqIrrep) -> Vec<GZPattern> {
    let n = irrep.n_group;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![irrep.top.clone()];
    fill(&mut stack, n, &mut out);
    out
}

fn fill(stack: &mut Vec<Vec<i64>>, n: usize, out: &mut Vec<GZPattern>) {
    let above = stack.last().expect("top row present").clone();
    if above.len() == 1 {
        let mut rows = stack.clone();
        rows.reverse();
        debug_assert_eq!(rows.len(), n);
        out.push(GZPattern { rows });
        return;
    }
    let mut row = vec![0; above.len() - 1];
    choose(&above, 0, &mut row, stack, n, out);
}

fn choose(
    above: &[i64],
    i: usize,
    row: &mut Vec<i64>,
    stack: &mut Vec<Vec<i64>>,
    n: usize,
    out: &mut Vec<GZPattern>,
) {
    if i == row.len() {
        stack.push(row.clone());
        fill(stack, n, out);
        stack.pop();
        return;
    }
    for v in above[i + 1]..=above[i] {
        row[i] = v;
        choose(above, i + 1, row, stack, n, out);
    }
}

/// `sum_{k=1}^{N-1} q^{2(l_k - k)}`.
pub fn casimir_hat_eigenvalue(irrep: &SuqIrrep) -> LaurentPoly {
    (1..irrep.n_group)
        .map(|k| LaurentPoly::q_pow(2 * (irrep.top[k - 1] - k as i64)))
        .sum()
}

/// Checks, symbolically,
/// `((q^2-1)/q^2)^2 Lambda_C(q^2) + ((q^2-1)/q^2) n
///   = Lambda_hat + (q^{-2(N-1)} - 1)/(q^2 - 1)`.
pub fn correspondence_check(g: &YoungDiagram, n_group: usize) -> Result<bool> {
    let irrep = SuqIrrep::from_diagram(g, n_group)?;
    let u = LaurentPoly::one() - LaurentPoly::q_pow(-2);
    let lhs = u.pow(2) * eigenvalue_c(g).dilate(2) + u.scale(&int(g.n() as i64));
    let tail = (LaurentPoly::q_pow(-2 * (n_group as i64 - 1)) - LaurentPoly::one())
        .divide_exact(&(LaurentPoly::q_pow(2) - LaurentPoly::one()))?;
    Ok(lhs == casimir_hat_eigenvalue(&irrep) + tail)
}

/// Recovers the irrep from `sum_k q^{2 L_k}`: sort the exponents in
/// decreasing order and set `l_k = L_k + k`.
pub fn reconstruct_from_casimir(spectrum: &LaurentPoly, n_group: usize) -> Result<SuqIrrep> {
    let bad = |why: String| Error::InvalidSpectrum(format!("{spectrum}: {why}"));
    if n_group < 2 {
        return Err(Error::InvalidArgument(format!("SU({n_group}) needs N >= 2")));
    }
    if spectrum.num_terms() != n_group - 1 {
        return Err(bad(format!("expected {} distinct powers of q", n_group - 1)));
    }
    let mut rows = Vec::with_capacity(n_group - 1);
    for (k, (e, c)) in spectrum.terms().rev().enumerate() {
        if !c.is_one() {
            return Err(bad(format!("coefficient {c} of q^{e} is not 1")));
        }
        if e % 2 != 0 {
            return Err(bad(format!("odd power q^{e}")));
        }
        let l = e / 2 + k as i64 + 1;
        if l < 0 {
            return Err(bad(format!("negative row length {l}")));
        }
        rows.push(l as usize);
    }
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad(format!("row lengths {rows:?} are not weakly decreasing")));
    }
    SuqIrrep::new(n_group, &rows).map_err(|e| bad(e.to_string()))
}

fn sb(x: i64, q0: &Rational) -> Result<Rational> {
    sym_bracket(x).eval(q0)
}

/// `|<h - e_{j,k}| f_k |h>|^2 = -P_1 P_2 / P_3` at `q0`, with
/// `P_1 = prod_{i<=k+1} [h_{i,k+1} - h_{j,k} - i + j + 1]_s`,
/// `P_2 = prod_{i<=k-1} [h_{i,k-1} - h_{j,k} - i + j]_s`,
/// `P_3 = prod_{i<=k, i!=j} [h_{i,k} - h_{j,k} - i + j + 1]_s [h_{i,k} - h_{j,k} - i + j]_s`.
pub fn chevalley_squared(p: &GZPattern, j: usize, k: usize, q0: &Rational) -> Result<Rational> {
    let n = p.n_group();
    if k == 0 || k >= n || j == 0 || j > k {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= j <= k <= N-1, got j={j}, k={k}, N={n}"
        )));
    }
    if !p.shifted(j, k, -1).is_valid() {
        return Err(Error::PatternViolation { j, k });
    }
    let hjk = p.h(j, k);
    let ji = j as i64;
    let mut p1 = Rational::one();
    for i in 1..=k + 1 {
        p1 *= sb(p.h(i, k + 1) - hjk - i as i64 + ji + 1, q0)?;
    }
    let mut p2 = Rational::one();
    for i in 1..k {
        p2 *= sb(p.h(i, k - 1) - hjk - i as i64 + ji, q0)?;
    }
    let mut p3 = Rational::one();
    for i in (1..=k).filter(|&i| i != j) {
        let d = p.h(i, k) - hjk - i as i64 + ji;
        p3 *= sb(d + 1, q0)? * sb(d, q0)?;
    }
    if p3.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(-(p1 * p2) / p3)
}

/// As [`chevalley_squared`], but zero when the shift leaves the cone.
pub fn chevalley_squared_or_zero(
    p: &GZPattern,
    j: usize,
    k: usize,
    q0: &Rational,
) -> Result<Rational> {
    match chevalley_squared(p, j, k, q0) {
        Err(Error::PatternViolation { .. }) => Ok(Rational::zero()),
        other => other,
    }
}

/// Checks `<h|[e_k, f_k]|h> = [h_k]_s` on every GZ state, using
/// `<h|e_k f_k|h> = sum_j |<h - e_{j,k}|f_k|h>|^2` and
/// `<h|f_k e_k|h> = sum_j |<h|f_k|h + e_{j,k}>|^2`.
pub fn verify_ef_commutator(irrep: &SuqIrrep, k: usize, q0: &Rational) -> Result<bool> {
    let n = irrep.n_group;
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= N-1, got k={k}")));
    }
    for h in gz_enumerate(irrep) {
        let mut ef = Rational::zero();
        let mut fe = Rational::zero();
        for j in 1..=k {
            ef += chevalley_squared_or_zero(&h, j, k, q0)?;
            let up = h.shifted(j, k, 1);
            if up.is_valid() {
                fe += chevalley_squared(&up, j, k, q0)?;
            }
        }
        if ef - fe != sb(h.weight(k), q0)? {
            return Ok(false);
        }
    }
    Ok(true)
}
