//! q-analogues of integers used throughout: `[k]_q`, the q-content
//! `q[c]_q` of a box, and the symmetric bracket `[x]_s`.

use super::LaurentPoly;

/// `[k]_q = (q^k - 1)/(q - 1)`, valid for every integer `k`.
pub fn q_integer(k: i64) -> LaurentPoly {
    if k >= 0 {
        (0..k).map(LaurentPoly::q_pow).sum()
    } else {
        -(k..0).map(LaurentPoly::q_pow).sum::<LaurentPoly>()
    }
}

/// The q-content `q[c]_q` of a box with content `c`.
pub fn q_content(c: i64) -> LaurentPoly {
    q_integer(c).shift(1)
}

/// `[x]_s = (q^x - q^-x)/(q - q^-1) = q^(x-1) + q^(x-3) + ... + q^(1-x)`.
pub fn sym_bracket(x: i64) -> LaurentPoly {
    let m = x.abs();
    let p: LaurentPoly = (0..m).map(|i| LaurentPoly::q_pow(m - 1 - 2 * i)).sum();
    if x < 0 {
        -p
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rational::int;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(3), p("1+q+q^2"));
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(-1), p("-q^-1"));
        // (q^-3 - 1)/(q - 1) == -(q^-1 + q^-2 + q^-3)
        assert_eq!(q_integer(-3), p("-q^-1-q^-2-q^-3"));
    }

    #[test]
    fn q_contents() {
        assert_eq!(q_content(2), p("q+q^2"));
        assert_eq!(q_content(-2), p("-1-q^-1"));
        assert!(q_content(0).is_zero());
    }

    #[test]
    fn q_integer_times_q_minus_one() {
        for k in -6..=6 {
            let lhs = &q_integer(k) * &p("q-1");
            assert_eq!(lhs, &LaurentPoly::q_pow(k) - &LaurentPoly::one(), "k={k}");
        }
    }

    #[test]
    fn symmetric_brackets() {
        assert_eq!(sym_bracket(1), LaurentPoly::one());
        assert_eq!(sym_bracket(2), p("q+q^-1"));
        assert!(sym_bracket(0).is_zero());
        assert_eq!(sym_bracket(-3), -sym_bracket(3));
    }

    #[test]
    fn content_limit_at_q_equal_one() {
        for c in -7..=7 {
            assert_eq!(q_content(c).at_one(), int(c));
        }
    }

    #[test]
    fn bracket_cross_identity() {
        let denom = p("q-q^-1");
        for x in -6..=6 {
            let lhs = &sym_bracket(x) * &denom;
            let rhs = &LaurentPoly::q_pow(x) - &LaurentPoly::q_pow(-x);
            assert_eq!(lhs, rhs, "x={x}");
        }
    }
}
