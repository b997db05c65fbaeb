//! Integer-coefficient polynomials in one and two variables.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial, `coeffs[i]` is the coefficient of `t^i`.
/// Canonical: no trailing zeros, the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c · t^deg`
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Compact text such as `3q^2-12q+12`.
    pub fn to_text(&self, var: &str) -> String {
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero());
        render_terms(terms.map(|(i, c)| (c, monomial_text(&[(var, i)]))), false)
    }

    /// LaTeX rendering such as `3q^{2} - 12q + 12`.
    pub fn to_latex(&self, var: &str) -> String {
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero());
        render_terms(
            terms.map(|(i, c)| {
                let m = match i {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{{{i}}}"),
                };
                (c, m)
            }),
            true,
        )
    }
}

fn monomial_text(vars: &[(&str, usize)]) -> String {
    let mut s = String::new();
    for &(v, e) in vars {
        match e {
            0 => {}
            1 => s.push_str(v),
            _ => {
                let _ = write!(s, "{v}^{e}");
            }
        }
    }
    s
}

fn render_terms<'a>(terms: impl Iterator<Item = (&'a BigInt, String)>, spaced: bool) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if spaced {
            out.push_str(if neg { " - " } else { " + " });
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if mono.is_empty() {
            let _ = write!(out, "{abs}");
        } else {
            if !abs.is_one() {
                let _ = write!(out, "{abs}");
            }
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::from_coeffs(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)).collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &-rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

/// Sparse polynomial in `x` and `y`; only nonzero coefficients are stored,
/// keyed by the exponent pair `(i, j)` of `x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(c: impl Into<BigInt>, i: usize, j: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), i, j);
        p
    }

    pub fn add_term(&mut self, c: BigInt, i: usize, j: usize) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// `c · (x−1)^a · (y−1)^b`, expanded.
    pub fn shifted_monomial(c: &BigInt, a: usize, b: usize) -> Self {
        let xa = binomial_shift(a);
        let yb = binomial_shift(b);
        let mut p = Self::zero();
        for (i, ci) in xa.iter().enumerate() {
            for (j, cj) in yb.iter().enumerate() {
                p.add_term(c * ci * cj, i, j);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic order of `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j))
            .sum()
    }

    /// Substitutes univariate polynomials for `x` and `y`.
    pub fn substitute(&self, x: &IntPolynomial, y: &IntPolynomial) -> IntPolynomial {
        self.terms.iter().fold(IntPolynomial::zero(), |acc, (&(i, j), c)| {
            &acc + &(&x.pow(i) * &y.pow(j)).scale(c)
        })
    }

    /// Compact text with terms in descending lexicographic order, e.g. `x^2+xy+y+1`.
    pub fn to_text(&self) -> String {
        render_terms(self.terms.iter().rev().map(|(&(i, j), c)| (c, monomial_text(&[("x", i), ("y", j)]))), false)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

/// Coefficients of `(z−1)^n` in ascending order.
fn binomial_shift(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c;
        }
        row = next;
    }
    row
}
