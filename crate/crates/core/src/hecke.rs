//! The regular representation of `H_n(q)` specialized at a rational `q0`.
//!
//! Elements are sparse combinations of the basis words `g_w`, `w in S_n`.
//! Products are computed by rewriting one generator at a time:
//! `g_w g_i = g_{w s_i}` when `l(w s_i) > l(w)` and
//! `g_w g_i = (q0 - 1) g_w + q0 g_{w s_i}` otherwise (mirrored on the left).
//! This module is the independent oracle the symbolic results are checked
//! against.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::diagrams::{partitions, YoungDiagram};
use crate::error::{Error, Result};
use crate::invariant::eigenvalue_c;
use crate::laurent::rational::{int, is_unit_magnitude, pow};
use crate::laurent::Rational;
use crate::perm::Permutation;

/// Largest `n` the oracle will build tables for.
pub const MAX_ORACLE_N: usize = 7;

/// Side on which a generator multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Basis bookkeeping for `H_n(q0)`: every permutation, its rank, and the
/// action of each simple transposition on both sides.
pub struct HeckeAlgebra {
    n: usize,
    q0: Rational,
    qm1: Rational,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    // right[r][i-1] = rank of w s_i, with the flag set when it is longer
    right: Vec<Vec<(u32, bool)>>,
    left: Vec<Vec<(u32, bool)>>,
    words: Vec<Vec<usize>>,
    trace_table: OnceLock<Vec<Rational>>,
    invariant: OnceLock<HeckeElement>,
}

impl fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}({})", self.n, self.q0)
    }
}

static ALGEBRAS: LazyLock<Mutex<HashMap<(usize, Rational), Arc<HeckeAlgebra>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

impl HeckeAlgebra {
    /// The shared algebra `H_n(q0)`.
    pub fn get(n: usize, q0: &Rational) -> Result<Arc<Self>> {
        if n == 0 || n > MAX_ORACLE_N {
            return Err(Error::InvalidArgument(format!(
                "oracle supports 1 <= n <= {MAX_ORACLE_N}, got {n}"
            )));
        }
        if q0.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        let mut all = ALGEBRAS.lock().expect("oracle registry poisoned");
        Ok(Arc::clone(
            all.entry((n, q0.clone()))
                .or_insert_with(|| Arc::new(Self::build(n, q0.clone()))),
        ))
    }

    fn build(n: usize, q0: Rational) -> Self {
        let perms = Permutation::all(n);
        let index: HashMap<Permutation, u32> = perms
            .iter()
            .enumerate()
            .map(|(r, w)| (w.clone(), r as u32))
            .collect();
        let mut right = Vec::with_capacity(perms.len());
        let mut left = Vec::with_capacity(perms.len());
        for w in &perms {
            let raw = w.raw();
            let pos = w.inverse();
            let pos = pos.raw();
            right.push(
                (1..n)
                    .map(|i| (index[&w.times_simple(i)], raw[i - 1] < raw[i]))
                    .collect(),
            );
            left.push(
                (1..n)
                    .map(|i| (index[&w.simple_times(i)], pos[i - 1] < pos[i]))
                    .collect(),
            );
        }
        let words = perms.iter().map(Permutation::reduced_word).collect();
        let qm1 = &q0 - Rational::one();
        Self {
            n,
            q0,
            qm1,
            perms,
            index,
            right,
            left,
            words,
            trace_table: OnceLock::new(),
            invariant: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q0(&self) -> &Rational {
        &self.q0
    }

    /// `n!`, the dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    pub fn permutation(&self, rank: u32) -> &Permutation {
        &self.perms[rank as usize]
    }

    pub fn rank(&self, w: &Permutation) -> Option<u32> {
        self.index.get(w).copied()
    }

    /// Multiplies a dense coefficient vector by `g_i` in place.
    fn act(&self, v: &mut [Rational], i: usize, side: Side) {
        let table = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        // each pair {r, r s_i} is visited once, from its shorter end
        for r in 0..v.len() {
            let (rs, longer) = table[r][i - 1];
            if !longer {
                continue;
            }
            let (a, b) = (&v[r], &v[rs as usize]);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            // g_w g = g_{ws}, g_{ws} g = (q-1) g_{ws} + q g_w
            let new_r = &self.q0 * b;
            let new_rs = a + &self.qm1 * b;
            v[r] = new_r;
            v[rs as usize] = new_rs;
        }
    }

    /// `sum_w [g_w](g_v g_w)` for every `v`, so that the regular trace is a
    /// dot product. Built once by pulling each coordinate functional back
    /// through the reduced word of `w`.
    fn trace_table(&self) -> &[Rational] {
        self.trace_table.get_or_init(|| {
            let mut table = vec![Rational::zero(); self.dim()];
            for (w, word) in self.words.iter().enumerate() {
                // covector c with c(x) = [g_w](x g_{i_1} ... g_{i_k})
                let mut c: BTreeMap<u32, Rational> = BTreeMap::new();
                c.insert(w as u32, Rational::one());
                for &i in word.iter().rev() {
                    c = self.pull_back_right(&c, i);
                }
                for (v, x) in c {
                    table[v as usize] += x;
                }
            }
            table
        })
    }

    /// Transpose of right multiplication by `g_i`:
    /// `(R^T c)[u] = c[u s]` if `u s > u`, else `(q-1) c[u] + q c[u s]`.
    fn pull_back_right(&self, c: &BTreeMap<u32, Rational>, i: usize) -> BTreeMap<u32, Rational> {
        let touched: BTreeSet<u32> = c
            .keys()
            .flat_map(|&t| [t, self.right[t as usize][i - 1].0])
            .collect();
        let get = |k: u32| c.get(&k).cloned().unwrap_or_else(Rational::zero);
        let mut out = BTreeMap::new();
        for u in touched {
            let (us, up) = self.right[u as usize][i - 1];
            let v = if up {
                get(us)
            } else {
                &self.qm1 * get(u) + &self.q0 * get(us)
            };
            if !v.is_zero() {
                out.insert(u, v);
            }
        }
        out
    }
}

/// A sparse element of `H_n(q0)` in the basis `g_w`.
#[derive(Clone)]
pub struct HeckeElement {
    alg: Arc<HeckeAlgebra>,
    coeffs: BTreeMap<u32, Rational>,
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.n == other.alg.n && self.alg.q0 == other.alg.q0 && self.coeffs == other.coeffs
    }
}

impl Eq for HeckeElement {}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[", self.alg)?;
        for (k, (w, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}*g{}", self.alg.perms[*w as usize])?;
        }
        f.write_str("]")
    }
}

impl HeckeElement {
    pub fn zero(alg: &Arc<HeckeAlgebra>) -> Self {
        Self {
            alg: Arc::clone(alg),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(alg: &Arc<HeckeAlgebra>) -> Self {
        Self::scalar(alg, Rational::one())
    }

    pub fn scalar(alg: &Arc<HeckeAlgebra>, c: Rational) -> Self {
        let mut x = Self::zero(alg);
        x.add_term(0, c);
        x
    }

    /// The basis element `g_w`.
    pub fn basis(alg: &Arc<HeckeAlgebra>, w: &Permutation) -> Result<Self> {
        let r = alg.rank(w).ok_or_else(|| {
            Error::InvalidArgument(format!("{w} is not in S_{}", alg.n))
        })?;
        let mut x = Self::zero(alg);
        x.add_term(r, Rational::one());
        Ok(x)
    }

    pub fn algebra(&self) -> &Arc<HeckeAlgebra> {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.alg.n
    }

    pub fn q0(&self) -> &Rational {
        &self.alg.q0
    }

    fn add_term(&mut self, r: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(r).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&r);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, w: &Permutation) -> Rational {
        self.alg
            .rank(w)
            .and_then(|r| self.coeffs.get(&r).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// `(w, coefficient)` pairs in lexicographic order of `w`.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.coeffs
            .iter()
            .map(|(r, c)| (&self.alg.perms[*r as usize], c))
    }

    fn check_same(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.alg, &other.alg)
                || (self.alg.n == other.alg.n && self.alg.q0 == other.alg.q0),
            "elements of different algebras"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (r, c) in &other.coeffs {
            out.add_term(*r, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(&self.alg);
        if !c.is_zero() {
            for (r, x) in &self.coeffs {
                out.coeffs.insert(*r, x * c);
            }
        }
        out
    }

    /// Multiplies by `g_i` on the given side.
    pub fn generator_multiply(&self, i: usize, side: Side) -> Result<Self> {
        let n = self.alg.n;
        if i == 0 || i >= n {
            return Err(Error::InvalidArgument(format!(
                "generator g_{i} does not exist in H_{n}"
            )));
        }
        Ok(self.times_generator(i, side))
    }

    fn times_generator(&self, i: usize, side: Side) -> Self {
        let mut buf = self.to_dense();
        self.alg.act(&mut buf, i, side);
        Self::from_dense(&self.alg, buf)
    }

    fn to_dense(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.alg.dim()];
        for (&r, c) in &self.coeffs {
            v[r as usize] = c.clone();
        }
        v
    }

    fn from_dense(alg: &Arc<HeckeAlgebra>, v: Vec<Rational>) -> Self {
        let coeffs = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (r as u32, c))
            .collect();
        Self {
            alg: Arc::clone(alg),
            coeffs,
        }
    }

    /// The product `self * other`, by rewriting along reduced words of the
    /// sparser factor.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let alg = &self.alg;
        let mut out = vec![Rational::zero(); alg.dim()];
        let (short, long, side) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other, Side::Left)
        } else {
            (other, self, Side::Right)
        };
        let dense = long.to_dense();
        for (&v, c) in &short.coeffs {
            let mut y = dense.clone();
            let word = &alg.words[v as usize];
            match side {
                Side::Left => word.iter().rev().for_each(|&i| alg.act(&mut y, i, side)),
                Side::Right => word.iter().for_each(|&i| alg.act(&mut y, i, side)),
            }
            for (o, x) in out.iter_mut().zip(y) {
                if !x.is_zero() {
                    *o += x * c;
                }
            }
        }
        Self::from_dense(alg, out)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Trace of left multiplication on the basis `g_w`.
    pub fn regular_trace(&self) -> Rational {
        let table = self.alg.trace_table();
        self.coeffs
            .iter()
            .map(|(r, c)| c * &table[*r as usize])
            .sum()
    }

    /// Regular trace computed straight from the definition, without the
    /// cached table.
    pub fn regular_trace_naive(&self) -> Rational {
        let alg = &self.alg;
        let mut total = Rational::zero();
        for (w, word) in alg.words.iter().enumerate() {
            let mut y = self.clone();
            for &i in word {
                y = y.times_generator(i, Side::Right);
            }
            if let Some(c) = y.coeffs.get(&(w as u32)) {
                total += c;
            }
        }
        total
    }

    /// Evaluates `sum_k coeffs[k] * self^k` by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[Rational]) -> Self {
        let mut acc = Self::zero(&self.alg);
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).add(&Self::scalar(&self.alg, c.clone()));
        }
        acc
    }
}

/// Product of generators `g_{i_1} ... g_{i_k}`.
pub fn word_element(n: usize, q0: &Rational, word: &[usize]) -> Result<HeckeElement> {
    let alg = HeckeAlgebra::get(n, q0)?;
    let mut x = HeckeElement::identity(&alg);
    for &i in word {
        x = x.generator_multiply(i, Side::Right)?;
    }
    Ok(x)
}

/// `C_n = sum_{i<j} q^{-(j-i-1)} g_i g_{i+1} ... g_{j-1} ... g_{i+1} g_i`.
pub fn fundamental_invariant(n: usize, q0: &Rational) -> Result<HeckeElement> {
    invariant_in(&HeckeAlgebra::get(n, q0)?, n)
}

/// `C_m` embedded in `H_n` for `m <= n`.
fn invariant_in(alg: &Arc<HeckeAlgebra>, m: usize) -> Result<HeckeElement> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("C_{m} needs m >= 2")));
    }
    if m == alg.n {
        if let Some(c) = alg.invariant.get() {
            return Ok(c.clone());
        }
    }
    let mut out = HeckeElement::zero(alg);
    for i in 1..m {
        for j in i + 1..=m {
            let w = Permutation::transposition(alg.n, i, j);
            let weight = pow(&alg.q0, -((j - i - 1) as i64));
            out = out.add(&HeckeElement::basis(alg, &w)?.scale(&weight));
        }
    }
    if m == alg.n {
        let _ = alg.invariant.set(out.clone());
    }
    Ok(out)
}

/// The sandwich word `g_i g_{i+1} ... g_{j-1} ... g_{i+1} g_i`.
pub fn sandwich_word(i: usize, j: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (i..j).collect();
    w.extend((i..j - 1).rev());
    w
}

/// Murphy element `L_i = C_i - C_{i-1}` in `H_n`, with `C_1 = 0`.
pub fn murphy_element(n: usize, q0: &Rational, i: usize) -> Result<HeckeElement> {
    if i < 2 || i > n {
        return Err(Error::InvalidArgument(format!(
            "Murphy element L_{i} needs 2 <= i <= {n}"
        )));
    }
    let alg = HeckeAlgebra::get(n, q0)?;
    let ci = invariant_in(&alg, i)?;
    if i == 2 {
        return Ok(ci);
    }
    Ok(ci.sub(&invariant_in(&alg, i - 1)?))
}

/// `D_3 = g_1 g_2 + g_2 g_1 + ((q-1)/q) g_1 g_2 g_1`.
pub fn d3_element(q0: &Rational) -> Result<HeckeElement> {
    let t = (q0 - Rational::one()) / q0;
    Ok(word_element(3, q0, &[1, 2])?
        .add(&word_element(3, q0, &[2, 1])?)
        .add(&word_element(3, q0, &[1, 2, 1])?.scale(&t)))
}

/// A projector written as a polynomial in `C_n`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorPoly {
    pub diagram: YoungDiagram,
    pub q0: Rational,
    pub coeffs: Vec<Rational>,
}

impl ProjectorPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `P(C_n)` as an element.
    pub fn to_element(&self) -> Result<HeckeElement> {
        let alg = HeckeAlgebra::get(self.diagram.n(), &self.q0)?;
        self.apply(&HeckeElement::identity(&alg))
    }

    /// `P(C_n) x` by Horner's rule, never forming powers of `C_n`.
    pub fn apply(&self, x: &HeckeElement) -> Result<HeckeElement> {
        if self.degree() == 0 {
            let k = self.coeffs.first().cloned().unwrap_or_else(Rational::zero);
            return Ok(x.scale(&k));
        }
        let c = fundamental_invariant(x.n(), x.q0())?;
        let mut acc = HeckeElement::zero(x.algebra());
        for k in self.coeffs.iter().rev() {
            acc = c.mul(&acc).add(&x.scale(k));
        }
        Ok(acc)
    }
}

/// Lagrange interpolation in `C_n` through the specialized spectrum.
pub fn hecke_projector(g: &YoungDiagram, n: usize, q0: &Rational) -> Result<ProjectorPoly> {
    if g.n() != n {
        return Err(Error::InvalidArgument(format!(
            "diagram {g} has {} boxes, expected {n}",
            g.n()
        )));
    }
    let target = eigenvalue_c(g).eval(q0)?;
    let mut coeffs = vec![Rational::one()];
    for h in partitions(n) {
        if &h == g {
            continue;
        }
        let other = eigenvalue_c(&h).eval(q0)?;
        if other == target {
            return Err(Error::DegenerateSpecialization {
                first: g.to_string(),
                second: h.to_string(),
                q0: q0.to_string(),
            });
        }
        let inv = (&target - &other).recip();
        // multiply by (t - other) / (target - other)
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c * &inv;
            next[k] -= c * &other * &inv;
        }
        coeffs = next;
    }
    Ok(ProjectorPoly {
        diagram: g.clone(),
        q0: q0.clone(),
        coeffs,
    })
}

/// Irreducible trace `tr_g(g_{w})` of a word, read off the regular
/// representation: `tr_reg(P_g x) / dim g`.
pub fn irreducible_trace(
    g: &YoungDiagram,
    word: &[usize],
    n: usize,
    q0: &Rational,
) -> Result<Rational> {
    let x = word_element(n, q0, word)?;
    irreducible_trace_of(g, &x)
}

/// As [`irreducible_trace`] for an arbitrary element.
pub fn irreducible_trace_of(g: &YoungDiagram, x: &HeckeElement) -> Result<Rational> {
    let p = projector_element(g, x.algebra())?;
    Ok(p.mul(x).regular_trace() / int(g.dimension() as i64))
}

static PROJECTORS: LazyLock<Mutex<HashMap<(YoungDiagram, Rational), HeckeElement>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `P_g` expanded in the basis, memoized per diagram and `q0`.
pub fn projector_element(g: &YoungDiagram, alg: &Arc<HeckeAlgebra>) -> Result<HeckeElement> {
    let key = (g.clone(), alg.q0.clone());
    if let Some(p) = PROJECTORS.lock().expect("projector memo poisoned").get(&key) {
        return Ok(p.clone());
    }
    let p = hecke_projector(g, alg.n, &alg.q0)?.apply(&HeckeElement::identity(alg))?;
    PROJECTORS
        .lock()
        .expect("projector memo poisoned")
        .insert(key, p.clone());
    Ok(p)
}

/// Rejects specializations at which the oracle is not faithful.
pub fn check_generic(q0: &Rational) -> Result<()> {
    if q0.is_zero() || is_unit_magnitude(q0) {
        return Err(Error::InvalidArgument(format!(
            "q0 = {q0} is not generic; use a rational other than 0, 1, -1"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rational::ratio;

    fn two() -> Rational {
        int(2)
    }

    fn d(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn w(n: usize, word: &[usize]) -> HeckeElement {
        word_element(n, &two(), word).unwrap()
    }

    #[test]
    fn quadratic_and_braid_relations() {
        let q = two();
        for n in 2..=5 {
            let alg = HeckeAlgebra::get(n, &q).unwrap();
            let one = HeckeElement::identity(&alg);
            for i in 1..n {
                let gi = w(n, &[i]);
                let expect = gi.scale(&(&q - int(1))).add(&one.scale(&q));
                assert_eq!(w(n, &[i, i]), expect);
                if i + 1 < n {
                    assert_eq!(w(n, &[i, i + 1, i]), w(n, &[i + 1, i, i + 1]));
                }
                for j in i + 2..n {
                    assert_eq!(w(n, &[i, j]), w(n, &[j, i]));
                }
            }
        }
        assert_eq!(w(3, &[]), HeckeElement::identity(&HeckeAlgebra::get(3, &two()).unwrap()));
    }

    #[test]
    fn left_and_right_actions_associate() {
        let n = 4;
        let x = w(n, &[1, 2, 3, 1]).add(&w(n, &[2]).scale(&ratio(-3, 5)));
        for i in 1..n {
            for j in 1..n {
                let a = x
                    .generator_multiply(i, Side::Left)
                    .unwrap()
                    .generator_multiply(j, Side::Right)
                    .unwrap();
                let b = x
                    .generator_multiply(j, Side::Right)
                    .unwrap()
                    .generator_multiply(i, Side::Left)
                    .unwrap();
                assert_eq!(a, b);
                assert_eq!(w(n, &[i]).mul(&x), x.generator_multiply(i, Side::Left).unwrap());
            }
        }
        assert!(x.generator_multiply(4, Side::Left).is_err());
    }

    #[test]
    fn multiplication_is_associative() {
        let n = 4;
        let a = w(n, &[1, 2]).add(&w(n, &[3]).scale(&int(2)));
        let b = w(n, &[2, 3, 2]).sub(&w(n, &[1]));
        let c = w(n, &[3, 1, 2, 1]).add(&w(n, &[]).scale(&ratio(1, 3)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn c3_matches_the_displayed_sum() {
        let q = two();
        let c3 = fundamental_invariant(3, &q).unwrap();
        let expect = w(3, &[1]).add(&w(3, &[2])).add(&w(3, &[1, 2, 1]).scale(&ratio(1, 2)));
        assert_eq!(c3, expect);
    }

    #[test]
    fn fundamental_invariant_is_central() {
        for q in [two(), ratio(-3, 2)] {
            for n in 2..=5 {
                let c = fundamental_invariant(n, &q).unwrap();
                for i in 1..n {
                    let gi = word_element(n, &q, &[i]).unwrap();
                    assert!(c.commutator(&gi).is_zero(), "n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn cayley_cubic_annihilates_c3() {
        for q in [two(), int(3), ratio(1, 3)] {
            let c3 = fundamental_invariant(3, &q).unwrap();
            let qi = q.recip();
            let one = Rational::one();
            let a2 = -(&q - &one) * (&q + int(4) + &qi);
            let a1 = &q * &q * &q - &q * &q - int(9) * &q - &one + &qi;
            let a0 = (&q - &one) * (int(2) * &q * &q + int(5) * &q + int(2));
            let p = c3.eval_poly(&[a0, a1, a2, one]);
            assert!(p.is_zero(), "q0={q}");
        }
    }

    #[test]
    fn d3_elimination_identity() {
        let q = ratio(5, 3);
        let c3 = fundamental_invariant(3, &q).unwrap();
        let alg = c3.algebra().clone();
        let lhs = c3.mul(&c3);
        let rhs = HeckeElement::scalar(&alg, int(3) * &q)
            .add(&c3.scale(&(int(2) * (&q - int(1)))))
            .add(&d3_element(&q).unwrap().scale(&(&q + int(1) + q.recip())));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn murphy_elements_commute() {
        let q = two();
        let n = 4;
        let ls: Vec<_> = (2..=n).map(|i| murphy_element(n, &q, i).unwrap()).collect();
        assert_eq!(ls[0], w(n, &[1]));
        for a in &ls {
            for b in &ls {
                assert!(a.commutator(b).is_zero());
            }
        }
        let l2l4 = ls[0].mul(&ls[2]);
        let expect = w(n, &[1, 3])
            .add(&w(n, &[1, 2, 3, 2]).scale(&ratio(1, 2)))
            .add(&w(n, &[1, 1, 2, 3, 2, 1]).scale(&ratio(1, 4)));
        assert_eq!(l2l4, expect);
        assert!(murphy_element(4, &q, 1).is_err());
        assert!(murphy_element(4, &q, 5).is_err());
    }

    #[test]
    fn regular_trace_table_matches_definition() {
        for q in [two(), ratio(-2, 3)] {
            for n in 1..=4 {
                let alg = HeckeAlgebra::get(n, &q).unwrap();
                for v in 0..alg.dim() {
                    let x = HeckeElement::basis(&alg, alg.permutation(v as u32)).unwrap();
                    assert_eq!(x.regular_trace(), x.regular_trace_naive());
                }
                assert_eq!(
                    HeckeElement::identity(&alg).regular_trace(),
                    int(alg.dim() as i64)
                );
            }
        }
        assert_eq!(w(3, &[1]).regular_trace(), int(3));
    }

    #[test]
    fn regular_trace_is_cyclic() {
        let n = 4;
        let a = w(n, &[1, 2, 3]).add(&w(n, &[2, 1]).scale(&int(-2)));
        let b = w(n, &[3, 2]).add(&w(n, &[1, 3]).scale(&ratio(1, 7)));
        assert_eq!(a.mul(&b).regular_trace(), b.mul(&a).regular_trace());
    }

    #[test]
    fn two_point_projector() {
        let p = hecke_projector(&d("2"), 2, &two()).unwrap();
        assert_eq!(p.coeffs, vec![ratio(1, 3), ratio(1, 3)]);
    }

    #[test]
    fn projector_algebra_small_n() {
        let q = two();
        for n in 1..=4 {
            let alg = HeckeAlgebra::get(n, &q).unwrap();
            let ps: Vec<_> = partitions(n)
                .iter()
                .map(|g| (g.clone(), hecke_projector(g, n, &q).unwrap().to_element().unwrap()))
                .collect();
            let mut total = HeckeElement::zero(&alg);
            for (g, p) in &ps {
                assert_eq!(p.mul(p), *p);
                let dim = int(g.dimension() as i64);
                assert_eq!(p.regular_trace(), &dim * &dim);
                for (h, r) in &ps {
                    if g != h {
                        assert!(p.mul(r).is_zero());
                    }
                }
                total = total.add(p);
            }
            assert_eq!(total, HeckeElement::identity(&alg));
        }
    }

    #[test]
    fn irreducible_traces_from_the_tables() {
        let q = two();
        assert_eq!(irreducible_trace(&d("3"), &[1, 2], 3, &q).unwrap(), int(4));
        assert_eq!(irreducible_trace(&d("2,1"), &[1, 2], 3, &q).unwrap(), int(-2));
        assert_eq!(irreducible_trace(&d("2,1"), &[1], 3, &q).unwrap(), int(1));
        assert_eq!(irreducible_trace(&d("1,1,1"), &[1], 3, &q).unwrap(), int(-1));
        assert_eq!(irreducible_trace(&d("3,1"), &[1, 3], 4, &q).unwrap(), int(0));
        let q = int(3);
        assert_eq!(irreducible_trace(&d("3,1"), &[1, 3], 4, &q).unwrap(), int(3));
    }

    #[test]
    fn connectivity_classes_share_traces() {
        let q = two();
        for n in 4..=5 {
            for g in partitions(n) {
                let t = |word: &[usize]| irreducible_trace(&g, word, n, &q).unwrap();
                assert_eq!(t(&[1]), t(&[2]));
                assert_eq!(t(&[1, 2]), t(&[2, 3]));
                assert_eq!(t(&[1, 3]), t(&[1, 4.min(n - 1)]));
            }
        }
    }

    #[test]
    fn degenerate_specialization_is_reported() {
        // [2] and [1,1] both have eigenvalue -1 at q0 = -1
        let err = hecke_projector(&d("2"), 2, &int(-1)).unwrap_err();
        assert!(matches!(err, Error::DegenerateSpecialization { .. }));
        assert!(check_generic(&int(1)).is_err());
        assert!(check_generic(&int(-1)).is_err());
        assert!(check_generic(&ratio(1, 2)).is_ok());
    }
}
