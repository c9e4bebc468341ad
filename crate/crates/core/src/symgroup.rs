//! The class algebra of `S_n`: class-sums, their products by brute force,
//! projection operators written as polynomials in the 2- and 3-cycle
//! class-sums, and the character rows those projectors carry.
//!
//! The Murnaghan–Nakayama rule is provided as an independent source of
//! characters.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, Mutex, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::{partitions, YoungDiagram};
use crate::error::{Error, Result};
use crate::registry::Strategy;
use crate::invariant::central_character;
use crate::laurent::rational::{factorial, int, to_i64};
use crate::laurent::Rational;
use crate::perm::Permutation;

/// Largest `n` for which class structure constants are enumerated.
pub const MAX_CLASS_N: usize = 8;

/// Cycle structure of a conjugacy class: a partition of `n` including unit
/// cycles. Displayed with unit cycles suppressed, e.g. `(3)(2)`; the
/// identity class prints as `(1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("bad cycle type {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn identity(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The class of a single `p`-cycle in `S_n`.
    pub fn cycle(n: usize, p: usize) -> Result<Self> {
        if p == 0 || p > n {
            return Err(Error::InvalidArgument(format!("no {p}-cycles in S_{n}")));
        }
        let mut parts = vec![p];
        parts.extend(std::iter::repeat_n(1, n - p));
        Self::new(parts)
    }

    pub fn of(w: &Permutation) -> Self {
        Self {
            parts: w.cycle_type(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn sign(&self) -> i64 {
        if (self.n() - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of permutations with this cycle type, `n! / z`.
    pub fn class_size(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        for (p, m) in counts {
            z *= BigInt::from(p).pow(m as u32) * factorial(m);
        }
        factorial(self.n()) / z
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.parts.iter().filter(|&&p| p > 1).collect();
        if nontrivial.is_empty() {
            return f.write_str("(1)");
        }
        for p in nontrivial {
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}_{}", self.n())
    }
}

impl CycleType {
    /// Parses the display form, e.g. `(3)(2)`, given the degree `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let bad = || Error::Parse(format!("bad cycle type {s:?}"));
        let body = s.trim();
        if !body.starts_with('(') || !body.ends_with(')') {
            return Err(bad());
        }
        let mut parts = Vec::new();
        for tok in body[1..body.len() - 1].split(")(") {
            let p: usize = tok.trim().parse().map_err(|_| bad())?;
            if p > 1 {
                parts.push(p);
            } else if p == 0 {
                return Err(bad());
            }
        }
        let used: usize = parts.iter().sum();
        if used > n {
            return Err(Error::InvalidArgument(format!("{s} does not fit in S_{n}")));
        }
        parts.extend(std::iter::repeat_n(1, n - used));
        Self::new(parts)
    }
}

/// An element of the center of `Q[S_n]` in the class-sum basis.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassVector {
    n: usize,
    coeffs: BTreeMap<CycleType, Rational>,
}

impl ClassVector {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The identity element, i.e. the class-sum of the identity class.
    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut v = Self::zero(n);
        v.add_term(CycleType::identity(n), c);
        v
    }

    pub fn class_sum(ct: CycleType) -> Self {
        let mut v = Self::zero(ct.n());
        v.add_term(ct, Rational::one());
        v
    }

    /// `[(p)]_n`.
    pub fn cycle_sum(n: usize, p: usize) -> Result<Self> {
        Ok(Self::class_sum(CycleType::cycle(n, p)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, ct: CycleType, c: Rational) {
        assert_eq!(ct.n(), self.n, "cycle type from a different S_n");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(ct.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&ct);
        }
    }

    pub fn coeff(&self, ct: &CycleType) -> Rational {
        self.coeffs.get(ct).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CycleType, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (ct, c) in &other.coeffs {
            out.add_term(ct.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (ct, v) in &self.coeffs {
            out.add_term(ct.clone(), v * c);
        }
        out
    }

    /// Product in the group algebra, see [`class_product`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        class_product(self, other)
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (ct, c)) in self.coeffs.iter().enumerate() {
            if c.is_negative() {
                f.write_str(if k == 0 { "-" } else { " - " })?;
            } else if k > 0 {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "[{ct}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassVector_{}({self})", self.n)
    }
}

/// Conjugacy classes of `S_n` with their elements and a memo of class-sum
/// structure constants.
pub struct ClassAlgebra {
    n: usize,
    classes: Vec<CycleType>,
    index: HashMap<CycleType, usize>,
    elements: Vec<Vec<Permutation>>,
    // (a, b) -> coefficients of [a][b] on each class
    products: RwLock<HashMap<(usize, usize), Arc<Vec<BigInt>>>>,
}

impl ClassAlgebra {
    fn build(n: usize) -> Self {
        let classes: Vec<CycleType> = partitions(n)
            .into_iter()
            .rev()
            .map(|g| CycleType {
                parts: g.rows().to_vec(),
            })
            .collect();
        let index: HashMap<CycleType, usize> =
            classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let mut elements = vec![Vec::new(); classes.len()];
        for w in Permutation::all(n) {
            elements[index[&CycleType::of(&w)]].push(w);
        }
        Self {
            n,
            classes,
            index,
            elements,
            products: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Classes ordered from the identity upwards (ascending cycle type).
    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn class_index(&self, ct: &CycleType) -> Option<usize> {
        self.index.get(ct).copied()
    }

    pub fn class_elements(&self, idx: usize) -> &[Permutation] {
        &self.elements[idx]
    }

    /// Coefficients of `[a][b]` on every class. `[a][b] = sum_c k_c [c]`
    /// with `k_c = |a| * #{y in b : x y in c} / |c|` for a fixed `x in a`.
    pub fn structure_constants(&self, a: usize, b: usize) -> Arc<Vec<BigInt>> {
        let key = if a <= b { (a, b) } else { (b, a) };
        if let Some(v) = self.products.read().expect("memo poisoned").get(&key) {
            return Arc::clone(v);
        }
        let (a, b) = key;
        let x = &self.elements[a][0];
        let mut hits = vec![0u64; self.classes.len()];
        for y in &self.elements[b] {
            hits[self.index[&CycleType::of(&x.compose(y))]] += 1;
        }
        let size_a = BigInt::from(self.elements[a].len());
        let coeffs: Vec<BigInt> = hits
            .iter()
            .enumerate()
            .map(|(c, &h)| {
                let num = &size_a * BigInt::from(h);
                let den = BigInt::from(self.elements[c].len());
                debug_assert!((&num % &den).is_zero());
                num / den
            })
            .collect();
        let coeffs = Arc::new(coeffs);
        self.products
            .write()
            .expect("memo poisoned")
            .entry(key)
            .or_insert_with(|| Arc::clone(&coeffs));
        coeffs
    }

    /// Snapshot of the structure-constant memo, for persistence.
    pub fn memo_entries(&self) -> Vec<(CycleType, CycleType, Vec<BigInt>)> {
        let memo = self.products.read().expect("memo poisoned");
        let mut out: Vec<_> = memo
            .iter()
            .map(|(&(a, b), v)| (self.classes[a].clone(), self.classes[b].clone(), (**v).clone()))
            .collect();
        out.sort();
        out
    }

    /// Seeds the memo with previously computed constants. Entries that do
    /// not fit this algebra (wrong degree or length, or violating the
    /// class-size count `sum_c k_c |c| = |a| |b|`) are skipped.
    pub fn seed_memo(&self, entries: Vec<(CycleType, CycleType, Vec<BigInt>)>) -> usize {
        let mut accepted = 0;
        let mut memo = self.products.write().expect("memo poisoned");
        for (a, b, v) in entries {
            let (Some(ia), Some(ib)) = (self.class_index(&a), self.class_index(&b)) else {
                continue;
            };
            if v.len() != self.classes.len() {
                continue;
            }
            let total: BigInt = v
                .iter()
                .enumerate()
                .map(|(c, k)| k * BigInt::from(self.elements[c].len()))
                .sum();
            let expect =
                BigInt::from(self.elements[ia].len()) * BigInt::from(self.elements[ib].len());
            if total != expect {
                continue;
            }
            let key = if ia <= ib { (ia, ib) } else { (ib, ia) };
            memo.entry(key).or_insert_with(|| Arc::new(v));
            accepted += 1;
        }
        accepted
    }
}

static ALGEBRAS: LazyLock<Mutex<HashMap<usize, Arc<ClassAlgebra>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The shared class algebra of `S_n`, built on first use.
pub fn class_algebra(n: usize) -> Result<Arc<ClassAlgebra>> {
    if n == 0 || n > MAX_CLASS_N {
        return Err(Error::InvalidArgument(format!(
            "class algebra is enumerated for 1 <= n <= {MAX_CLASS_N}, got {n}"
        )));
    }
    let mut all = ALGEBRAS.lock().expect("class algebra registry poisoned");
    Ok(Arc::clone(
        all.entry(n).or_insert_with(|| Arc::new(ClassAlgebra::build(n))),
    ))
}

/// The class algebras built so far, by degree.
pub fn built_class_algebras() -> Vec<Arc<ClassAlgebra>> {
    let all = ALGEBRAS.lock().expect("class algebra registry poisoned");
    let mut v: Vec<_> = all.values().cloned().collect();
    v.sort_by_key(|a| a.n());
    v
}

/// Conjugacy classes of `S_n` with their sizes.
pub fn classes(n: usize) -> Result<Vec<(CycleType, BigInt)>> {
    let alg = class_algebra(n)?;
    Ok(alg
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), BigInt::from(alg.class_elements(i).len())))
        .collect())
}

/// Product of two central elements, expressed in the class basis.
pub fn class_product(a: &ClassVector, b: &ClassVector) -> Result<ClassVector> {
    if a.n != b.n {
        return Err(Error::InvalidArgument(format!(
            "cannot multiply elements of S_{} and S_{}",
            a.n, b.n
        )));
    }
    let alg = class_algebra(a.n)?;
    let mut out = ClassVector::zero(a.n);
    for (ca, xa) in &a.coeffs {
        let ia = alg.index[ca];
        for (cb, xb) in &b.coeffs {
            let ib = alg.index[cb];
            let w = xa * xb;
            for (ic, k) in alg.structure_constants(ia, ib).iter().enumerate() {
                if !k.is_zero() {
                    out.add_term(alg.classes[ic].clone(), &w * Rational::from_integer(k.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// A projector together with the factors it was assembled from.
#[derive(Clone, Debug)]
pub struct ClassProjector {
    pub diagram: YoungDiagram,
    /// Lagrange product over the distinct transposition eigenvalues other
    /// than that of `diagram`.
    pub stage_one: ClassVector,
    /// For each irrep sharing the transposition eigenvalue, the factor
    /// `([(3)]_n - lambda') / (lambda - lambda')` that removes it.
    pub partner_factors: Vec<(YoungDiagram, ClassVector)>,
    pub projector: ClassVector,
}

/// Central idempotent of `Q[S_n]` for the irrep `g`, built from `[(2)]_n`
/// and, where transposition eigenvalues coincide, `[(3)]_n`.
pub fn build_projector(g: &YoungDiagram, n: usize) -> Result<ClassProjector> {
    if g.n() != n {
        return Err(Error::InvalidArgument(format!(
            "diagram {g} has {} boxes, expected {n}",
            g.n()
        )));
    }
    let lambda = |p: usize, h: &YoungDiagram| central_character(p, n, h);
    let target2 = lambda(2, g)?;
    let mut others2: Vec<Rational> = Vec::new();
    let mut partners = Vec::new();
    for h in partitions(n) {
        if &h == g {
            continue;
        }
        let l2 = lambda(2, &h)?;
        if l2 == target2 {
            partners.push(h);
        } else if !others2.contains(&l2) {
            others2.push(l2);
        }
    }

    let id = ClassVector::identity(n);
    let mut stage_one = id.clone();
    if !others2.is_empty() {
        let t = ClassVector::cycle_sum(n, 2)?;
        for v in &others2 {
            let factor = t
                .sub(&ClassVector::scalar(n, v.clone()))
                .scale(&(&target2 - v).recip());
            stage_one = class_product(&stage_one, &factor)?;
        }
    }

    let mut partner_factors = Vec::new();
    let mut projector = stage_one.clone();
    if !partners.is_empty() {
        let target3 = lambda(3, g)?;
        let c3 = ClassVector::cycle_sum(n, 3)?;
        for h in partners {
            let l3 = lambda(3, &h)?;
            if l3 == target3 {
                return Err(Error::NotSeparated {
                    first: g.to_string(),
                    second: h.to_string(),
                });
            }
            let factor = c3
                .sub(&ClassVector::scalar(n, l3.clone()))
                .scale(&(&target3 - &l3).recip());
            projector = class_product(&projector, &factor)?;
            partner_factors.push((h, factor));
        }
    }
    Ok(ClassProjector {
        diagram: g.clone(),
        stage_one,
        partner_factors,
        projector,
    })
}

/// Reads the character row of `g` off its projector:
/// `chi(C) = coeff_C(P) * n! / dim(g)`.
pub fn characters_from_projector(
    p: &ClassVector,
    g: &YoungDiagram,
) -> Result<BTreeMap<CycleType, i64>> {
    let alg = class_algebra(p.n)?;
    let scale = Rational::from_integer(factorial(p.n)) / int(g.dimension() as i64);
    alg.classes()
        .iter()
        .map(|ct| {
            let v = p.coeff(ct) * &scale;
            to_i64(&v)
                .map(|x| (ct.clone(), x))
                .ok_or_else(|| Error::NonIntegerCharacter {
                    class: ct.to_string(),
                    value: v.to_string(),
                })
        })
        .collect()
}

/// Irreducible character `chi_g(c)` by the Murnaghan–Nakayama rule,
/// removing border strips in the beta-number (abacus) picture.
pub fn mn_character(g: &YoungDiagram, c: &CycleType) -> Result<i64> {
    if g.n() != c.n() {
        return Err(Error::InvalidArgument(format!(
            "diagram {g} and class {c} are for different n"
        )));
    }
    let m = g.num_rows();
    let betas: Vec<usize> = g
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &r)| r + m - 1 - i)
        .collect();
    Ok(mn_recurse(betas, c.parts()))
}

fn mn_recurse(betas: Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (k, &b) in betas.iter().enumerate() {
        if b < r || betas.contains(&(b - r)) {
            continue;
        }
        let crossed = betas.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut next = betas.clone();
        next[k] = b - r;
        total += sign * mn_recurse(next, rest);
    }
    total
}

/// Full character table of `S_n`: rows in descending partition order,
/// columns in [`ClassAlgebra::classes`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub rows: Vec<YoungDiagram>,
    pub columns: Vec<CycleType>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn get(&self, g: &YoungDiagram, c: &CycleType) -> Option<i64> {
        let i = self.rows.iter().position(|r| r == g)?;
        let j = self.columns.iter().position(|x| x == c)?;
        Some(self.values[i][j])
    }

    pub fn row(&self, g: &YoungDiagram) -> Option<&[i64]> {
        let i = self.rows.iter().position(|r| r == g)?;
        Some(&self.values[i])
    }

    /// Nested map `diagram -> class -> value`.
    pub fn to_map(&self) -> BTreeMap<String, BTreeMap<String, i64>> {
        self.rows
            .iter()
            .zip(&self.values)
            .map(|(g, vals)| {
                let row = self
                    .columns
                    .iter()
                    .zip(vals)
                    .map(|(c, &v)| (c.to_string(), v))
                    .collect();
                (g.to_string(), row)
            })
            .collect()
    }

    pub fn from_map(n: usize, map: &BTreeMap<String, BTreeMap<String, i64>>) -> Result<Self> {
        let columns: Vec<CycleType> = class_algebra(n)?.classes().to_vec();
        let mut rows = Vec::new();
        let mut values = Vec::new();
        for g in partitions(n) {
            let row = map
                .get(&g.to_string())
                .ok_or_else(|| Error::Parse(format!("missing row {g}")))?;
            let mut vals = Vec::new();
            for c in &columns {
                vals.push(
                    *row.get(&c.to_string())
                        .ok_or_else(|| Error::Parse(format!("missing column {c} in row {g}")))?,
                );
            }
            rows.push(g);
            values.push(vals);
        }
        if map.len() != rows.len() {
            return Err(Error::Parse("unexpected extra rows".into()));
        }
        Ok(Self {
            n,
            rows,
            columns,
            values,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CharacterTableDoc {
    n: usize,
    table: BTreeMap<String, BTreeMap<String, i64>>,
}

impl Serialize for CharacterTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterTableDoc {
            n: self.n,
            table: self.to_map(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharacterTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = CharacterTableDoc::deserialize(d)?;
        Self::from_map(doc.n, &doc.table).map_err(serde::de::Error::custom)
    }
}

/// A named way of producing the character table of `S_n`.
pub trait CharacterMethod: Strategy {
    /// Largest `n` the method accepts.
    fn max_n(&self) -> usize;
    fn table(&self, n: usize) -> Result<CharacterTable>;
}

/// Characters read off the class-algebra projectors.
pub struct ProjectorMethod;

impl Strategy for ProjectorMethod {
    fn name(&self) -> &'static str {
        "projector"
    }

    fn description(&self) -> &'static str {
        "expand central idempotents built from [(2)]_n and [(3)]_n"
    }
}

impl CharacterMethod for ProjectorMethod {
    fn max_n(&self) -> usize {
        MAX_CLASS_N
    }

    fn table(&self, n: usize) -> Result<CharacterTable> {
        let columns = class_algebra(n)?.classes().to_vec();
        let rows = partitions(n);
        let mut values = Vec::with_capacity(rows.len());
        for g in &rows {
            let proj = build_projector(g, n)?;
            let chars = characters_from_projector(&proj.projector, g)?;
            values.push(columns.iter().map(|c| chars[c]).collect());
        }
        Ok(CharacterTable {
            n,
            rows,
            columns,
            values,
        })
    }
}

/// Characters from the Murnaghan–Nakayama rule.
pub struct MurnaghanNakayama;

impl Strategy for MurnaghanNakayama {
    fn name(&self) -> &'static str {
        "mn"
    }

    fn description(&self) -> &'static str {
        "Murnaghan-Nakayama border-strip recursion"
    }
}

impl CharacterMethod for MurnaghanNakayama {
    fn max_n(&self) -> usize {
        20
    }

    fn table(&self, n: usize) -> Result<CharacterTable> {
        if n == 0 || n > self.max_n() {
            return Err(Error::InvalidArgument(format!(
                "mn character tables are computed for 1 <= n <= {}",
                self.max_n()
            )));
        }
        let rows = partitions(n);
        let columns: Vec<CycleType> = rows
            .iter()
            .rev()
            .map(|g| CycleType {
                parts: g.rows().to_vec(),
            })
            .collect();
        let values = rows
            .iter()
            .map(|g| columns.iter().map(|c| mn_character(g, c)).collect())
            .collect::<Result<_>>()?;
        Ok(CharacterTable {
            n,
            rows,
            columns,
            values,
        })
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Full cycle type as comma-separated lengths, e.g. `3,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad cycle length {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}
