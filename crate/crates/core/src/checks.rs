//! Named checks of the symbolic results against the regular-representation
//! oracle, run by `heckeq verify`.

use serde::Serialize;

use num_traits::Zero;

use crate::diagrams::partitions;
use crate::error::Result;
use crate::hecke::{
    fundamental_invariant, irreducible_trace, irreducible_trace_of,
    murphy_element, projector_element, word_element, HeckeAlgebra, HeckeElement,
};
use crate::invariant::eigenvalue_c;
use crate::laurent::rational::int;
use crate::laurent::Rational;
use crate::registry::Strategy;
use crate::symgroup::{CharacterMethod, MurnaghanNakayama, ProjectorMethod, MAX_CLASS_N};
use crate::traces::{doubly_connected_traces, murphy_traces, simply_connected_trace};

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A property checked in `H_n(q0)` or `S_n`.
pub trait OracleCheck: Strategy {
    /// Whether the check means anything for this `n`.
    fn applies(&self, n: usize) -> bool {
        n >= 2
    }

    /// `Ok(None)` on success, `Ok(Some(reason))` on a failed property.
    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>>;

    fn run(&self, n: usize, q0: &Rational) -> CheckOutcome {
        let (passed, detail) = if !self.applies(n) {
            (true, format!("skipped for n = {n}"))
        } else {
            match self.check(n, q0) {
                Ok(None) => (true, "ok".to_string()),
                Ok(Some(why)) => (false, why),
                Err(e) => (false, format!("error: {e}")),
            }
        };
        CheckOutcome {
            name: self.name().to_string(),
            passed,
            detail,
        }
    }
}

macro_rules! strategy {
    ($ty:ident, $name:literal, $desc:literal) => {
        pub struct $ty;

        impl Strategy for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn description(&self) -> &'static str {
                $desc
            }
        }
    };
}

strategy!(Relations, "relations", "quadratic, braid and far-commutation relations");
strategy!(Centrality, "centrality", "C_n commutes with every generator");
strategy!(MurphyCommute, "murphy", "Murphy elements commute and sum to C_n");
strategy!(Spectrum, "spectrum", "prod over irreps of (C_n - Lambda) vanishes");
strategy!(Projectors, "projectors", "idempotent, orthogonal, complete, regular trace dim^2");
strategy!(MurphyTraces, "murphy-traces", "tr(L_i) from branching equals the oracle");
strategy!(SimplyTraces, "simply-traces", "tr(g_1...g_{k-1}) equals the oracle");
strategy!(DoublyTraces, "doubly-traces", "tr(g_1g_3), tr(g_1g_3g_4) equal the oracle");
strategy!(Characters, "characters", "projector character table equals Murnaghan-Nakayama");

/// All built-in checks in run order.
pub fn builtin() -> Vec<Box<dyn OracleCheck>> {
    vec![
        Box::new(Relations),
        Box::new(Centrality),
        Box::new(MurphyCommute),
        Box::new(Spectrum),
        Box::new(Projectors),
        Box::new(MurphyTraces),
        Box::new(SimplyTraces),
        Box::new(DoublyTraces),
        Box::new(Characters),
    ]
}

fn generator(n: usize, q0: &Rational, i: usize) -> Result<HeckeElement> {
    word_element(n, q0, &[i])
}

impl OracleCheck for Relations {
    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>> {
        let alg = HeckeAlgebra::get(n, q0)?;
        let one = HeckeElement::identity(&alg);
        for i in 1..n {
            let gi = generator(n, q0, i)?;
            let quad = gi.scale(&(q0 - int(1))).add(&one.scale(q0));
            if gi.mul(&gi) != quad {
                return Ok(Some(format!("g_{i}^2 != (q-1) g_{i} + q")));
            }
            if i + 1 < n && word_element(n, q0, &[i, i + 1, i])? != word_element(n, q0, &[i + 1, i, i + 1])? {
                return Ok(Some(format!("braid relation fails at i = {i}")));
            }
            for j in i + 2..n {
                if !gi.commutator(&generator(n, q0, j)?).is_zero() {
                    return Ok(Some(format!("g_{i} and g_{j} do not commute")));
                }
            }
        }
        Ok(None)
    }
}

impl OracleCheck for Centrality {
    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>> {
        let c = fundamental_invariant(n, q0)?;
        for i in 1..n {
            if !c.commutator(&generator(n, q0, i)?).is_zero() {
                return Ok(Some(format!("[C_{n}, g_{i}] != 0")));
            }
        }
        Ok(None)
    }
}

impl OracleCheck for MurphyCommute {
    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>> {
        let ls = (2..=n)
            .map(|i| murphy_element(n, q0, i))
            .collect::<Result<Vec<_>>>()?;
        for (a, la) in ls.iter().enumerate() {
            for (b, lb) in ls.iter().enumerate().skip(a + 1) {
                if !la.commutator(lb).is_zero() {
                    return Ok(Some(format!("[L_{}, L_{}] != 0", a + 2, b + 2)));
                }
            }
        }
        let alg = HeckeAlgebra::get(n, q0)?;
        let sum = ls.iter().fold(HeckeElement::zero(&alg), |acc, l| acc.add(l));
        if sum != fundamental_invariant(n, q0)? {
            return Ok(Some("sum of Murphy elements != C_n".into()));
        }
        Ok(None)
    }
}

impl OracleCheck for Spectrum {
    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>> {
        let c = fundamental_invariant(n, q0)?;
        let mut roots: Vec<Rational> = Vec::new();
        for g in partitions(n) {
            let v = eigenvalue_c(&g).eval(q0)?;
            if !roots.contains(&v) {
                roots.push(v);
            }
        }
        // monic polynomial with these roots, ascending coefficients
        let mut coeffs = vec![Rational::from_integer(1.into())];
        for r in &roots {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (k, a) in coeffs.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            coeffs = next;
        }
        if !c.eval_poly(&coeffs).is_zero() {
            return Ok(Some("C_n is not annihilated by its spectrum".into()));
        }
        Ok(None)
    }
}

impl OracleCheck for Projectors {
    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>> {
        let alg = HeckeAlgebra::get(n, q0)?;
        let gs = partitions(n);
        let c = fundamental_invariant(n, q0)?;
        let mut total = HeckeElement::zero(&alg);
        for g in &gs {
            let p = projector_element(g, &alg)?;
            let dim = int(g.dimension() as i64);
            if p.regular_trace() != &dim * &dim {
                return Ok(Some(format!("regular trace of P_[{g}] != dim^2")));
            }
            // C P = lambda P makes P(C) P = P(lambda) P for every polynomial,
            // which gives idempotence and orthogonality at once
            let lambda = eigenvalue_c(g).eval(q0)?;
            if c.mul(&p) != p.scale(&lambda) {
                return Ok(Some(format!("C_{n} P_[{g}] != Lambda P_[{g}]")));
            }
            total = total.add(&p);
        }
        if total != HeckeElement::identity(&alg) {
            return Ok(Some("projectors do not sum to 1".into()));
        }
        Ok(None)
    }
}

impl OracleCheck for MurphyTraces {
    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>> {
        for g in partitions(n) {
            let t = murphy_traces(&g);
            for i in 2..=n {
                let oracle = irreducible_trace_of(&g, &murphy_element(n, q0, i)?)?;
                if t.entries[&i].eval(q0)? != oracle {
                    return Ok(Some(format!("tr(L_{i}) differs for [{g}]")));
                }
            }
        }
        Ok(None)
    }
}

impl OracleCheck for SimplyTraces {
    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>> {
        for g in partitions(n) {
            for k in 2..=n {
                let word: Vec<usize> = (1..k).collect();
                let sym = simply_connected_trace(&g, k)?.eval(q0)?;
                if sym != irreducible_trace(&g, &word, n, q0)? {
                    return Ok(Some(format!("tau_{k} differs for [{g}]")));
                }
            }
        }
        Ok(None)
    }
}

impl OracleCheck for DoublyTraces {
    fn applies(&self, n: usize) -> bool {
        n >= 4
    }

    fn check(&self, n: usize, q0: &Rational) -> Result<Option<String>> {
        for g in partitions(n) {
            let d = doubly_connected_traces(&g)?;
            for (label, word) in [("g1g3", &[1, 3][..]), ("g1g3g4", &[1, 3, 4][..])] {
                let Some(sym) = d.get(label) else { continue };
                if sym.eval(q0)? != irreducible_trace(&g, word, n, q0)? {
                    return Ok(Some(format!("tr({label}) differs for [{g}]")));
                }
            }
        }
        Ok(None)
    }
}

impl OracleCheck for Characters {
    fn applies(&self, n: usize) -> bool {
        (1..=MAX_CLASS_N).contains(&n)
    }

    fn check(&self, n: usize, _: &Rational) -> Result<Option<String>> {
        if ProjectorMethod.table(n)? != MurnaghanNakayama.table(n)? {
            return Ok(Some(format!("character tables of S_{n} differ")));
        }
        Ok(None)
    }
}

/// Runs every check in `checks` for `H_n(q0)`.
pub fn run_all<'a>(
    checks: impl IntoIterator<Item = &'a dyn OracleCheck>,
    n: usize,
    q0: &Rational,
) -> Vec<CheckOutcome> {
    checks.into_iter().map(|c| c.run(n, q0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::oracle_checks;

    #[test]
    fn all_checks_pass_for_small_n() {
        let reg = oracle_checks();
        for n in 1..=4 {
            for q0 in [int(2), Rational::new(3.into(), 2.into())] {
                for o in run_all(reg.iter(), n, &q0) {
                    assert!(o.passed, "n={n} q0={q0}: {o:?}");
                }
            }
        }
    }

    #[test]
    fn errors_surface_as_failures() {
        let o = Projectors.run(2, &int(-1));
        assert!(!o.passed);
        assert!(o.detail.starts_with("error:"), "{}", o.detail);
        let o = DoublyTraces.run(3, &int(2));
        assert!(o.passed && o.detail.starts_with("skipped"));
    }
}
