//! Irreducible traces of Murphy operators and of simply connected words
//! `g_1 g_2 ... g_{k-1}`, symbolic in `q`, from the branching lattice.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::diagrams::{content, YoungDiagram};
use crate::error::{Error, Result};
use crate::registry::Strategy;
use crate::invariant::eigenvalue_c;
use crate::laurent::rational::{binomial, int};
use crate::laurent::{q_content, LaurentPoly, Rational};

/// `tr(L_i)` in one irrep, for `i = 2..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MurphyTraceTable {
    pub diagram: YoungDiagram,
    pub entries: BTreeMap<usize, LaurentPoly>,
}

impl MurphyTraceTable {
    pub fn get(&self, i: usize) -> Option<&LaurentPoly> {
        self.entries.get(&i)
    }

    /// `sum_i tr(L_i)`, which equals `dim * Lambda_C`.
    pub fn total(&self) -> LaurentPoly {
        self.entries.values().sum()
    }
}

type Entries = Arc<BTreeMap<usize, LaurentPoly>>;

static MEMO: LazyLock<RwLock<HashMap<YoungDiagram, Entries>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn removed_content(box_: (usize, usize)) -> LaurentPoly {
    q_content(content(box_.0, box_.1))
}

fn murphy_entries(g: &YoungDiagram) -> Entries {
    if let Some(e) = MEMO.read().expect("trace memo poisoned").get(g) {
        return Arc::clone(e);
    }
    let n = g.n();
    let mut entries: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    if n >= 2 {
        let mut last = LaurentPoly::zero();
        for (parent, b) in g.branch_down_with_boxes() {
            let sub = murphy_entries(&parent);
            for (&i, t) in sub.iter() {
                *entries.entry(i).or_insert_with(LaurentPoly::zero) += t;
            }
            last += removed_content(b).scale(&Rational::from_integer(parent.dimension().into()));
        }
        entries.insert(n, last);
    }
    let entries = Arc::new(entries);
    MEMO.write()
        .expect("trace memo poisoned")
        .entry(g.clone())
        .or_insert_with(|| Arc::clone(&entries));
    entries
}

/// `tr(L_i)` for every `i`, by summing over the diagrams one box smaller.
pub fn murphy_traces(g: &YoungDiagram) -> MurphyTraceTable {
    MurphyTraceTable {
        diagram: g.clone(),
        entries: (*murphy_entries(g)).clone(),
    }
}

/// `tr(L_n) = dim * Lambda_C - sum_{i<n} tr(L_i)`, the eigenvalue form.
pub fn last_murphy_trace_from_eigenvalue(g: &YoungDiagram) -> LaurentPoly {
    let n = g.n();
    let t = murphy_entries(g);
    let lower: LaurentPoly = t.range(..n).map(|(_, p)| p).sum();
    eigenvalue_c(g).scale(&dim_rational(g)) - lower
}

fn dim_rational(g: &YoungDiagram) -> Rational {
    Rational::from_integer(g.dimension().into())
}

/// `(q - 1) / q`.
fn t_factor() -> LaurentPoly {
    LaurentPoly::one() - LaurentPoly::q_pow(-1)
}

/// `tau_k = tr(g_1 g_2 ... g_{k-1})`, recovered from the Murphy traces.
pub fn simply_connected_trace(g: &YoungDiagram, k: usize) -> Result<LaurentPoly> {
    let n = g.n();
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!(
            "tau_{k} needs 2 <= k <= {n} for {g}"
        )));
    }
    let l = murphy_entries(g);
    let mut sum = LaurentPoly::zero();
    for i in 0..=k - 2 {
        let c = Rational::from_integer(binomial(k - 1, i));
        let term = l[&(k - i)].scale(&c);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let e = (k - 2) as u32;
    let qm1 = LaurentPoly::q() - LaurentPoly::one();
    (sum.shift(e as i64)).divide_exact(&qm1.pow(e))
}

/// All of `tau_2 .. tau_n`, keyed by `k`.
pub fn simply_connected_traces(g: &YoungDiagram) -> Result<BTreeMap<usize, LaurentPoly>> {
    (2..=g.n())
        .map(|k| simply_connected_trace(g, k).map(|t| (k, t)))
        .collect()
}

/// Checks `tr(C_n) = sum_i C(n,i) ((q-1)/q)^{i-2} tau_i` against
/// `dim * Lambda_C`.
pub fn trace_cn_consistency(g: &YoungDiagram) -> Result<bool> {
    let n = g.n();
    if n < 2 {
        return Ok(eigenvalue_c(g).is_zero());
    }
    let t = t_factor();
    let mut lhs = LaurentPoly::zero();
    for i in 2..=n {
        let c = Rational::from_integer(binomial(n, i));
        lhs += t.pow((i - 2) as u32) * simply_connected_trace(g, i)?.scale(&c);
    }
    Ok(lhs == eigenvalue_c(g).scale(&dim_rational(g)))
}

/// `tr(L_{a_1} ... L_{a_l})` as a sum over branching chains from size
/// `a_1 - 1` up to `g`, each weighted by the dimension of its bottom
/// diagram and the q-contents of the boxes added at steps `a_i`.
/// Indices must be nondecreasing and lie in `2..=n`.
pub fn murphy_product_trace(g: &YoungDiagram, alphas: &[usize]) -> Result<LaurentPoly> {
    let n = g.n();
    let Some(&first) = alphas.first() else {
        return Err(Error::InvalidArgument("empty list of Murphy indices".into()));
    };
    if alphas.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument(format!(
            "Murphy indices {alphas:?} must be nondecreasing"
        )));
    }
    if first < 2 || alphas[alphas.len() - 1] > n {
        return Err(Error::InvalidArgument(format!(
            "Murphy indices {alphas:?} must lie in 2..={n}"
        )));
    }
    let mut mult: BTreeMap<usize, u32> = BTreeMap::new();
    for &a in alphas {
        *mult.entry(a).or_insert(0) += 1;
    }
    let mut memo = HashMap::new();
    Ok(chain_sum(g, first - 1, &mult, &mut memo))
}

fn chain_sum(
    g: &YoungDiagram,
    bottom: usize,
    mult: &BTreeMap<usize, u32>,
    memo: &mut HashMap<YoungDiagram, LaurentPoly>,
) -> LaurentPoly {
    if g.n() == bottom {
        return LaurentPoly::constant(dim_rational(g));
    }
    if let Some(v) = memo.get(g) {
        return v.clone();
    }
    let step = g.n();
    let mut total = LaurentPoly::zero();
    for (parent, b) in g.branch_down_with_boxes() {
        let below = chain_sum(&parent, bottom, mult, memo);
        total += match mult.get(&step) {
            Some(&m) => below * removed_content(b).pow(m),
            None => below,
        };
    }
    memo.insert(g.clone(), total.clone());
    total
}

/// `tr(g_1 g_3)` and, for `n >= 5`, `tr(g_1 g_3 g_4)`, solved from the
/// expansions of `tr(L_2 L_4)` and `tr(L_2 L_5)` in reduced words.
pub fn doubly_connected_traces(g: &YoungDiagram) -> Result<BTreeMap<String, LaurentPoly>> {
    let n = g.n();
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "g1g3 needs n >= 4, {g} has n = {n}"
        )));
    }
    let q = LaurentPoly::q;
    let qi = || LaurentPoly::q_pow(-1);
    let c = |v: i64| LaurentPoly::from_int(v);
    let t = t_factor();
    let tau = simply_connected_traces(g)?;

    let l2l4 = murphy_product_trace(g, &[2, 4])?;
    let g1g3 = l2l4
        - t.clone() * (q() + qi()) * tau[&4].clone()
        - (q() - c(1) + qi()).scale(&int(2)) * tau[&3].clone()
        - (q() - c(1)) * tau[&2].clone();

    let mut out = BTreeMap::new();
    if n >= 5 {
        let l2l5 = murphy_product_trace(g, &[2, 5])?;
        let rest = l2l5
            - g1g3.scale(&int(2))
            - t.pow(2) * (q() + qi()) * tau[&5].clone()
            - t.clone() * (q().scale(&int(3)) - c(2) + qi().scale(&int(3))) * tau[&4].clone()
            - (q().scale(&int(3)) - c(4) + qi().scale(&int(3))) * tau[&3].clone()
            - (q() - c(1)) * tau[&2].clone();
        // divide by (q - 1)/q
        let g1g3g4 = rest.shift(1).divide_exact(&(q() - c(1)))?;
        out.insert("g1g3g4".to_string(), g1g3g4);
    }
    out.insert("g1g3".to_string(), g1g3);
    Ok(out)
}

/// Label of the simply connected word `g_1 ... g_{k-1}`.
pub fn simply_label(k: usize) -> String {
    (1..k).map(|i| format!("g{i}")).collect()
}

/// Options shared by the trace kinds.
#[derive(Clone, Debug, Default)]
pub struct TraceRequest {
    pub alphas: Option<Vec<usize>>,
}

/// A named family of irreducible traces.
pub trait TraceKind: Strategy {
    /// Traces for one irrep, keyed by a label for the element traced.
    fn compute(&self, g: &YoungDiagram, req: &TraceRequest)
        -> Result<BTreeMap<String, LaurentPoly>>;
}

pub struct MurphyKind;
pub struct SimplyKind;
pub struct ProductsKind;
pub struct DoublyKind;

impl Strategy for MurphyKind {
    fn name(&self) -> &'static str {
        "murphy"
    }

    fn description(&self) -> &'static str {
        "tr(L_i) for i = 2..n"
    }
}

impl TraceKind for MurphyKind {
    fn compute(&self, g: &YoungDiagram, _: &TraceRequest) -> Result<BTreeMap<String, LaurentPoly>> {
        Ok(murphy_traces(g)
            .entries
            .into_iter()
            .map(|(i, p)| (format!("L{i}"), p))
            .collect())
    }
}

impl Strategy for SimplyKind {
    fn name(&self) -> &'static str {
        "simply"
    }

    fn description(&self) -> &'static str {
        "tr(g_1 g_2 ... g_{k-1}) for k = 2..n"
    }
}

impl TraceKind for SimplyKind {
    fn compute(&self, g: &YoungDiagram, _: &TraceRequest) -> Result<BTreeMap<String, LaurentPoly>> {
        Ok(simply_connected_traces(g)?
            .into_iter()
            .map(|(k, p)| (simply_label(k), p))
            .collect())
    }
}

impl Strategy for ProductsKind {
    fn name(&self) -> &'static str {
        "products"
    }

    fn description(&self) -> &'static str {
        "tr(L_a1 L_a2 ...) for the given indices"
    }
}

impl TraceKind for ProductsKind {
    fn compute(&self, g: &YoungDiagram, req: &TraceRequest) -> Result<BTreeMap<String, LaurentPoly>> {
        let alphas = req
            .alphas
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("products needs --alphas".into()))?;
        let label: String = alphas.iter().map(|a| format!("L{a}")).collect();
        Ok(BTreeMap::from([(label, murphy_product_trace(g, alphas)?)]))
    }
}

impl Strategy for DoublyKind {
    fn name(&self) -> &'static str {
        "doubly"
    }

    fn description(&self) -> &'static str {
        "tr(g_1 g_3) and tr(g_1 g_3 g_4)"
    }
}

impl TraceKind for DoublyKind {
    fn compute(&self, g: &YoungDiagram, _: &TraceRequest) -> Result<BTreeMap<String, LaurentPoly>> {
        doubly_connected_traces(g)
    }
}

/// Snapshot of the Murphy-trace memo, for persistence.
pub fn trace_memo() -> Vec<(YoungDiagram, BTreeMap<usize, LaurentPoly>)> {
    let memo = MEMO.read().expect("trace memo poisoned");
    let mut out: Vec<_> = memo.iter().map(|(g, e)| (g.clone(), (**e).clone())).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Seeds the memo. Entries whose index set is not `2..=n` or whose total
/// disagrees with `dim * Lambda_C` are skipped.
pub fn seed_trace_memo(
    entries: impl IntoIterator<Item = (YoungDiagram, BTreeMap<usize, LaurentPoly>)>,
) -> usize {
    let mut accepted = 0;
    let mut memo = MEMO.write().expect("trace memo poisoned");
    for (g, e) in entries {
        let n = g.n();
        let keys_ok = e.keys().copied().eq(2..=n.max(1)) || (n < 2 && e.is_empty());
        let total: LaurentPoly = e.values().sum();
        if !keys_ok || total != eigenvalue_c(&g).scale(&dim_rational(&g)) {
            continue;
        }
        memo.entry(g).or_insert_with(|| Arc::new(e));
        accepted += 1;
    }
    accepted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::partitions;
    use crate::hecke::{irreducible_trace, irreducible_trace_of, murphy_element};
    use crate::laurent::rational::int;

    fn d(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn murphy_traces_small_cases() {
        let t = murphy_traces(&d("2,1"));
        assert_eq!(t.get(2), Some(&p("q-1")));
        assert_eq!(t.get(3), Some(&p("q-1")));
        let t = murphy_traces(&d("3,1"));
        assert_eq!(t.get(2), Some(&p("2*q-1")));
        assert_eq!(t.get(3), Some(&p("q^2+2*q-1")));
        assert_eq!(t.get(4), Some(&p("2*q^2+2*q-1")));
        assert_eq!(murphy_traces(&d("3")).get(3), Some(&p("q^2+q")));
        assert!(murphy_traces(&d("1")).entries.is_empty());
    }

    #[test]
    fn both_last_trace_forms_agree() {
        for n in 2..=7 {
            for g in partitions(n) {
                let t = murphy_traces(&g);
                assert_eq!(t.get(n).unwrap(), &last_murphy_trace_from_eigenvalue(&g));
                assert_eq!(t.total(), eigenvalue_c(&g).scale(&dim_rational(&g)));
            }
        }
    }

    #[test]
    fn branching_consistency() {
        for n in 3..=7 {
            for g in partitions(n) {
                let t = murphy_traces(&g);
                for i in 2..n {
                    let s: LaurentPoly = g
                        .branch_down()
                        .iter()
                        .map(|h| murphy_traces(h).get(i).unwrap().clone())
                        .sum();
                    assert_eq!(t.get(i).unwrap(), &s);
                }
            }
        }
    }

    #[test]
    fn simply_connected_small_cases() {
        let g = d("3,1");
        assert_eq!(simply_connected_trace(&g, 2).unwrap(), p("2*q-1"));
        assert_eq!(simply_connected_trace(&g, 3).unwrap(), p("q^2-q"));
        assert_eq!(simply_connected_trace(&g, 4).unwrap(), p("-q^2"));
        let g = d("1,1,1");
        assert_eq!(simply_connected_trace(&g, 2).unwrap(), p("-1"));
        assert_eq!(simply_connected_trace(&g, 3).unwrap(), p("1"));
        for n in 2..=7 {
            for k in 2..=n {
                assert_eq!(
                    simply_connected_trace(&YoungDiagram::row(n), k).unwrap(),
                    LaurentPoly::q_pow(k as i64 - 1)
                );
            }
        }
        assert!(simply_connected_trace(&g, 4).is_err());
        assert!(simply_connected_trace(&g, 1).is_err());
    }

    #[test]
    fn trace_of_c3_in_the_row() {
        let g = d("3");
        let t = t_factor();
        let lhs = simply_connected_trace(&g, 2).unwrap().scale(&int(3))
            + t * simply_connected_trace(&g, 3).unwrap();
        assert_eq!(lhs, p("q^2+2*q"));
    }

    #[test]
    fn consistency_holds_through_seven() {
        assert!(trace_cn_consistency(&d("1")).unwrap());
        for n in 2..=7 {
            for g in partitions(n) {
                assert!(trace_cn_consistency(&g).unwrap(), "{g}");
            }
        }
    }

    #[test]
    fn product_traces() {
        assert_eq!(murphy_product_trace(&d("3,1"), &[2, 4]).unwrap(), p("q^3-2*q"));
        assert_eq!(murphy_product_trace(&d("4"), &[2, 4]).unwrap(), p("q^4+q^3+q^2"));
        for n in 2..=6 {
            for g in partitions(n) {
                let t = murphy_traces(&g);
                for i in 2..=n {
                    assert_eq!(&murphy_product_trace(&g, &[i]).unwrap(), t.get(i).unwrap());
                }
            }
        }
        assert!(murphy_product_trace(&d("3,1"), &[4, 2]).is_err());
        assert!(murphy_product_trace(&d("3,1"), &[1]).is_err());
        assert!(murphy_product_trace(&d("3,1"), &[5]).is_err());
        assert!(murphy_product_trace(&d("3,1"), &[]).is_err());
    }

    #[test]
    fn product_traces_match_oracle() {
        let q = int(2);
        let n = 5;
        let cases: &[&[usize]] = &[&[2, 4], &[3, 5], &[2, 5], &[2, 2], &[3, 4, 4], &[2, 3, 5]];
        for g in partitions(n) {
            for alphas in cases {
                let mut x = murphy_element(n, &q, alphas[0]).unwrap();
                for &a in &alphas[1..] {
                    x = x.mul(&murphy_element(n, &q, a).unwrap());
                }
                let expect = irreducible_trace_of(&g, &x).unwrap();
                let got = murphy_product_trace(&g, alphas).unwrap().eval(&q).unwrap();
                assert_eq!(got, expect, "{g} {alphas:?}");
            }
        }
    }

    #[test]
    fn doubly_connected_small_cases() {
        assert_eq!(doubly_connected_traces(&d("4")).unwrap()["g1g3"], p("q^2"));
        assert_eq!(doubly_connected_traces(&d("3,1")).unwrap()["g1g3"], p("q^2-2*q"));
        assert!(doubly_connected_traces(&d("2,1")).is_err());
        assert!(!doubly_connected_traces(&d("3,1")).unwrap().contains_key("g1g3g4"));
    }

    #[test]
    fn simply_and_doubly_connected_match_oracle() {
        let q = int(2);
        for n in 4..=5 {
            for g in partitions(n) {
                for k in 2..=n {
                    let word: Vec<usize> = (1..k).collect();
                    assert_eq!(
                        simply_connected_trace(&g, k).unwrap().eval(&q).unwrap(),
                        irreducible_trace(&g, &word, n, &q).unwrap()
                    );
                }
                let dc = doubly_connected_traces(&g).unwrap();
                assert_eq!(
                    dc["g1g3"].eval(&q).unwrap(),
                    irreducible_trace(&g, &[1, 3], n, &q).unwrap()
                );
                if n == 5 {
                    assert_eq!(
                        dc["g1g3g4"].eval(&q).unwrap(),
                        irreducible_trace(&g, &[1, 3, 4], n, &q).unwrap(),
                        "{g}"
                    );
                }
            }
        }
    }

    #[test]
    fn trace_kinds_label_their_output() {
        let g = d("3,1");
        let req = TraceRequest::default();
        let m = MurphyKind.compute(&g, &req).unwrap();
        assert_eq!(m.keys().cloned().collect::<Vec<_>>(), ["L2", "L3", "L4"]);
        let s = SimplyKind.compute(&g, &req).unwrap();
        assert_eq!(s["g1g2g3"], p("-q^2"));
        assert!(ProductsKind.compute(&g, &req).is_err());
        let req = TraceRequest {
            alphas: Some(vec![2, 4]),
        };
        assert_eq!(ProductsKind.compute(&g, &req).unwrap()["L2L4"], p("q^3-2*q"));
    }

    #[test]
    fn table_json_and_memo_seed() {
        let t = murphy_traces(&d("2,1"));
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"diagram":"2,1","entries":{"2":"q-1","3":"q-1"}}"#);
        let back: MurphyTraceTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        let mut bad = t.entries.clone();
        bad.insert(3, p("q"));
        assert_eq!(seed_trace_memo([(d("2,1"), bad)]), 0);
        assert_eq!(seed_trace_memo([(d("2,1"), t.entries)]), 1);
    }
}
