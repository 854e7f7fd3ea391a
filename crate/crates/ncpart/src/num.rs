//! Exact integer combinatorics helpers: factorials, generalized binomial and
//! multinomial coefficients over arbitrary-precision integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `k!` as a big integer; `k < 0` is a caller bug and panics.
pub fn factorial(k: i64) -> BigInt {
    assert!(k >= 0, "factorial of negative argument");
    let mut acc = BigInt::one();
    for t in 2..=k {
        acc *= t;
    }
    acc
}

/// Generalized binomial coefficient `binom(a, k) = a(a-1)...(a-k+1)/k!` for an
/// arbitrary integer top `a`; zero when `k < 0`.
pub fn binom(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for t in 0..k {
        num *= a - t;
    }
    num / factorial(k)
}

/// Generalized binomial with a big-integer top.
pub fn binom_big(a: &BigInt, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for t in 0..k {
        num *= a - BigInt::from(t);
    }
    num / factorial(k)
}

/// Multinomial coefficient `M! / (m_1! ... m_r! (M - sum m_k)!)`.
///
/// By convention the value is zero whenever `M - sum m_k < 0` or some `m_k < 0`;
/// this is exactly the degenerate-input reading the closed formulas rely on.
pub fn multinomial(m_top: i64, parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) {
        return BigInt::zero();
    }
    let s: i64 = parts.iter().sum();
    if m_top - s < 0 {
        return BigInt::zero();
    }
    // M >= sum >= 0 here, so plain factorials apply.
    let mut denom = factorial(m_top - s);
    for &p in parts {
        denom *= factorial(p);
    }
    factorial(m_top) / denom
}

/// Exact rational from an integer pair; panics on zero denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational from a big integer.
pub fn big_to_ratio(b: BigInt) -> BigRational {
    BigRational::from_integer(b)
}

/// Extracts an integer from a rational that must be integral (panics otherwise).
pub fn ratio_to_big(r: &BigRational) -> BigInt {
    assert!(r.is_integer(), "expected an integer value, got {r}");
    r.to_integer()
}

/// True if the rational is a non-negative integer.
pub fn is_nonneg_integer(r: &BigRational) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn binom_standard_and_generalized() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(5, 0), BigInt::from(1));
        assert_eq!(binom(5, -1), BigInt::from(0));
        assert_eq!(binom(3, 5), BigInt::from(0));
        // negative top: binom(-1, k) = (-1)^k
        assert_eq!(binom(-1, 3), BigInt::from(-1));
        assert_eq!(binom(-2, 2), BigInt::from(3));
    }

    #[test]
    fn multinomial_conventions() {
        assert_eq!(multinomial(4, &[2, 1]), BigInt::from(12)); // 4!/2!1!1!
        assert_eq!(multinomial(4, &[]), BigInt::from(1));
        assert_eq!(multinomial(2, &[3]), BigInt::from(0)); // M - sum < 0
        assert_eq!(multinomial(4, &[-1, 2]), BigInt::from(0)); // negative part
        assert_eq!(multinomial(-1, &[]), BigInt::from(0)); // M - 0 < 0
    }

    /// All vectors (m_1, ..., m_r) of non-negative integers with sum i*m_i = r.
    fn weighted_compositions(r: usize) -> Vec<Vec<i64>> {
        fn go(i: usize, r: usize, rem: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if i > r {
                if rem == 0 {
                    out.push(prefix.clone());
                }
                return;
            }
            let mut mi = 0i64;
            while (i as i64) * mi <= rem {
                prefix.push(mi);
                go(i + 1, r, rem - (i as i64) * mi, prefix, out);
                prefix.pop();
                mi += 1;
            }
        }
        let mut out = Vec::new();
        go(1, r, r as i64, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn binsum_identity_small() {
        // sum over m_1 + 2 m_2 + ... + r m_r = r of multinomial(M; m) equals
        // binom(M + r - 1, r); tiny sizes here, the full range is exercised by
        // the acceptance suite.
        for m_top in 0..=4i64 {
            for r in 0..=4usize {
                let mut total = BigInt::zero();
                for mv in weighted_compositions(r) {
                    total += multinomial(m_top, &mv);
                }
                assert_eq!(total, binom(m_top + r as i64 - 1, r as i64), "M={m_top} r={r}");
            }
        }
    }
}
