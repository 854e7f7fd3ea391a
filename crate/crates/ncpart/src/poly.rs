//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! One type covers every symbolic need of the crate: univariate polynomials in
//! the divisibility parameter `m` or the chain variable `z`, bivariate
//! M-triangles in `x, y`, and the dihedral tables' polynomials in `m, a`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::num::factorial;

/// A polynomial with exact rational coefficients in a fixed, named variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactPoly {
    vars: Vec<String>,
    /// exponent vector (same arity as `vars`) -> nonzero coefficient
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl ExactPoly {
    /// The zero polynomial over the given variables.
    pub fn zero(vars: &[&str]) -> Self {
        ExactPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    /// A constant polynomial.
    pub fn constant(vars: &[&str], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    /// Constant polynomial from an integer.
    pub fn constant_int(vars: &[&str], c: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(BigInt::from(c)))
    }

    /// Constant polynomial from a big integer.
    pub fn constant_big(vars: &[&str], c: BigInt) -> Self {
        Self::constant(vars, BigRational::from_integer(c))
    }

    /// The polynomial consisting of a single named variable.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name);
        let mut exp = vec![0; p.vars.len()];
        exp[idx] = 1;
        p.terms.insert(exp, BigRational::one());
        p
    }

    fn var_index(&self, name: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable {name} in {:?}", self.vars))
    }

    /// Variable names.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Iterate over (exponent vector, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    /// True when the polynomial is identically zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exp: &[u32]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomial variable lists differ");
    }

    /// Sum of two polynomials over the same variables.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        ExactPoly { vars: self.vars.clone(), terms }
    }

    /// Multiplication by an exact rational scalar.
    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s;
        }
        out
    }

    /// Integer power.
    pub fn pow(&self, k: u32) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut acc = Self::constant(&vars, BigRational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a full assignment of rational values (one per variable).
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(values.len(), self.vars.len(), "wrong number of values");
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (exp, v) in e.iter().zip(values) {
                for _ in 0..*exp {
                    term *= v;
                }
            }
            acc += term;
        }
        acc
    }

    /// Evaluation of a univariate polynomial at an integer point.
    pub fn eval_int(&self, value: i64) -> BigRational {
        self.eval(&[BigRational::from_integer(BigInt::from(value))])
    }

    /// Rebuilds the polynomial by transforming every term; used e.g. for the
    /// dual transform of M-triangles which reflects exponent vectors.
    pub fn map_terms<F>(&self, f: F) -> Self
    where
        F: Fn(&[u32], &BigRational) -> (Vec<u32>, BigRational),
    {
        let mut out = Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let (ne, nc) = f(e, c);
            assert_eq!(ne.len(), self.vars.len());
            if nc.is_zero() {
                continue;
            }
            let entry = out.terms.entry(ne).or_insert_with(BigRational::zero);
            *entry += nc;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// Total degree (None for the zero polynomial).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Falling factorial `p (p-1) ... (p-k+1)`; the zero-factor product is 1.
    pub fn falling(&self, k: i64) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut acc = Self::constant(&vars, BigRational::one());
        for t in 0..k {
            acc = acc.mul(&self.sub(&Self::constant_int(&vars, t)));
        }
        acc
    }

    /// Generalized binomial `binom(p, k)` with a polynomial top; zero when `k < 0`.
    pub fn binom_poly(&self, k: i64) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        if k < 0 {
            return Self::zero(&vars);
        }
        self.falling(k).scale(&BigRational::new(BigInt::one(), factorial(k)))
    }

    /// Multinomial `multinomial(p; parts)` with a polynomial top: the falling
    /// factorial of length `sum(parts)` divided by the part factorials. Zero when
    /// some part is negative.
    pub fn multinomial_poly(&self, parts: &[i64]) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        if parts.iter().any(|&p| p < 0) {
            return Self::zero(&vars);
        }
        let s: i64 = parts.iter().sum();
        let mut denom = BigInt::one();
        for &p in parts {
            denom *= factorial(p);
        }
        self.falling(s).scale(&BigRational::new(BigInt::one(), denom))
    }

    /// JSON value: `{"vars": [...], "terms": [{"exp": [..], "coeff": "p/q"}, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "exp": e,
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "vars": self.vars, "terms": terms })
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, then reverse-lexicographic for stability
        let mut entries: Vec<(&Vec<u32>, &BigRational)> = self.terms.iter().collect();
        entries.sort_by(|(e1, _), (e2, _)| {
            let d1: u32 = e1.iter().sum();
            let d2: u32 = e2.iter().sum();
            d2.cmp(&d1).then_with(|| e2.cmp(e1))
        });
        for (i, (e, c)) in entries.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(abs.to_string());
            }
            for (v, &exp) in self.vars.iter().zip(e.iter()) {
                if exp == 1 {
                    factors.push(v.clone());
                } else if exp > 1 {
                    factors.push(format!("{v}^{exp}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> ExactPoly {
        ExactPoly::var(&["m"], "m")
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = m().mul(&m()).add(&ExactPoly::constant_int(&["m"], 1)); // m^2 + 1
        assert_eq!(p.eval_int(3), BigRational::from_integer(BigInt::from(10)));
        let q = p.sub(&p);
        assert!(q.is_zero());
    }

    #[test]
    fn binom_poly_matches_integer_binomials() {
        let p = m().scale(&BigRational::from_integer(BigInt::from(4))); // 4m
        let b = p.binom_poly(3); // binom(4m, 3)
        for mval in 0..6 {
            assert_eq!(b.eval_int(mval), BigRational::from_integer(crate::num::binom(4 * mval, 3)));
        }
    }

    #[test]
    fn multinomial_poly_matches_integer_multinomials() {
        let p = m();
        let q = p.multinomial_poly(&[1, 2]);
        for mval in 0..7 {
            assert_eq!(
                q.eval_int(mval),
                BigRational::from_integer(crate::num::multinomial(mval, &[1, 2]))
            );
        }
    }

    #[test]
    fn display_readable() {
        let p = m().pow(2).scale(&crate::num::ratio(3, 2)).sub(&m());
        assert_eq!(p.to_string(), "3/2*m^2 - m");
    }
}
