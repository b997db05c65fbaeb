//! Quasi-polynomials: a period `ρ` and one integer polynomial per residue
//! class `k = 1..ρ`.
//!
//! When constituents only depend on `gcd(k, ρ)` they are stored once per
//! divisor of `ρ`. Chromatic quasi-polynomials always have this shape, and the
//! divisor count of `ρ` is usually tiny compared to `ρ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

#[derive(Clone, Debug)]
enum Constituents {
    /// Index `k - 1` holds the constituent of class `k`.
    Full(Vec<IntPolynomial>),
    /// Keyed by the divisors of the period.
    ByGcd(BTreeMap<u64, IntPolynomial>),
}

#[derive(Clone, Debug)]
pub struct QuasiPolynomial {
    period: u64,
    constituents: Constituents,
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl QuasiPolynomial {
    /// A genuine polynomial, period 1.
    pub fn polynomial(p: IntPolynomial) -> Self {
        Self::from_gcd_classes(1, BTreeMap::from([(1, p)])).unwrap()
    }

    pub fn zero() -> Self {
        Self::polynomial(IntPolynomial::zero())
    }

    /// Full storage: `constituents[k-1]` is the class-`k` polynomial.
    pub fn from_constituents(constituents: Vec<IntPolynomial>) -> Result<Self> {
        if constituents.is_empty() {
            return Err(Error::PreconditionViolated("a quasi-polynomial needs at least one constituent".into()));
        }
        Ok(QuasiPolynomial { period: constituents.len() as u64, constituents: Constituents::Full(constituents) })
    }

    /// Compressed storage; the keys must be exactly the divisors of `period`.
    pub fn from_gcd_classes(period: u64, classes: BTreeMap<u64, IntPolynomial>) -> Result<Self> {
        if period == 0 {
            return Err(Error::PreconditionViolated("period must be positive".into()));
        }
        let keys: Vec<u64> = classes.keys().copied().collect();
        if keys != divisors(period) {
            return Err(Error::PreconditionViolated(format!(
                "compressed classes {keys:?} are not the divisors of {period}"
            )));
        }
        Ok(QuasiPolynomial { period, constituents: Constituents::ByGcd(classes) })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn is_compressed(&self) -> bool {
        matches!(self.constituents, Constituents::ByGcd(_))
    }

    /// The constituent governing every `q ≡ k (mod ρ)`; any `k ≥ 1` is accepted.
    pub fn constituent(&self, k: u64) -> &IntPolynomial {
        assert!(k >= 1, "residue classes are numbered from 1");
        match &self.constituents {
            Constituents::Full(v) => &v[((k - 1) % self.period) as usize],
            Constituents::ByGcd(m) => &m[&k.gcd(&self.period)],
        }
    }

    /// Stored `(class, polynomial)` pairs: divisors when compressed, `1..=ρ` otherwise.
    pub fn stored(&self) -> Vec<(u64, &IntPolynomial)> {
        match &self.constituents {
            Constituents::Full(v) => v.iter().enumerate().map(|(i, p)| (i as u64 + 1, p)).collect(),
            Constituents::ByGcd(m) => m.iter().map(|(k, p)| (*k, p)).collect(),
        }
    }

    pub fn evaluate(&self, q: u64) -> BigInt {
        self.constituent(q).eval(&BigInt::from(q))
    }

    pub fn lift_period(&self, rho_new: u64) -> Result<Self> {
        if rho_new == 0 || !rho_new.is_multiple_of(self.period) {
            return Err(Error::NotAMultiple { old: self.period, new: rho_new });
        }
        Ok(match &self.constituents {
            Constituents::ByGcd(_) => QuasiPolynomial {
                period: rho_new,
                constituents: Constituents::ByGcd(
                    divisors(rho_new).into_iter().map(|d| (d, self.constituent(d).clone())).collect(),
                ),
            },
            Constituents::Full(_) => QuasiPolynomial {
                period: rho_new,
                constituents: Constituents::Full((1..=rho_new).map(|k| self.constituent(k).clone()).collect()),
            },
        })
    }

    /// Constituent-wise combination after lifting both to the lcm of the periods.
    fn combine(&self, other: &Self, op: impl Fn(&IntPolynomial, &IntPolynomial) -> IntPolynomial) -> Self {
        let period = self.period.lcm(&other.period);
        if self.is_compressed() && other.is_compressed() {
            let classes = divisors(period).into_iter().map(|d| (d, op(self.constituent(d), other.constituent(d)))).collect();
            QuasiPolynomial { period, constituents: Constituents::ByGcd(classes) }
        } else {
            let v = (1..=period).map(|k| op(self.constituent(k), other.constituent(k))).collect();
            QuasiPolynomial { period, constituents: Constituents::Full(v) }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let constituents = match &self.constituents {
            Constituents::Full(v) => Constituents::Full(v.iter().map(|p| p.scale(c)).collect()),
            Constituents::ByGcd(m) => Constituents::ByGcd(m.iter().map(|(k, p)| (*k, p.scale(c))).collect()),
        };
        QuasiPolynomial { period: self.period, constituents }
    }

    /// Constituents with equal `gcd(k, ρ)` coincide.
    pub fn has_gcd_property(&self) -> bool {
        match &self.constituents {
            Constituents::ByGcd(_) => true,
            Constituents::Full(v) => {
                v.iter().enumerate().all(|(i, p)| p == &v[(i as u64 + 1).gcd(&self.period) as usize - 1])
            }
        }
    }

    /// Divisor-keyed storage, or `None` when the gcd property fails.
    pub fn compress(&self) -> Option<Self> {
        if !self.has_gcd_property() {
            return None;
        }
        let classes = divisors(self.period).into_iter().map(|d| (d, self.constituent(d).clone())).collect();
        Some(QuasiPolynomial { period: self.period, constituents: Constituents::ByGcd(classes) })
    }

    /// One stored constituent per class `1..=ρ`.
    pub fn expand(&self) -> Self {
        let v = (1..=self.period).map(|k| self.constituent(k).clone()).collect();
        QuasiPolynomial { period: self.period, constituents: Constituents::Full(v) }
    }

    /// Smallest divisor `ρ'` of the period such that the constituents are
    /// already periodic mod `ρ'`.
    pub fn minimal_period(&self) -> u64 {
        divisors(self.period)
            .into_iter()
            .find(|&p| (1..=self.period).all(|k| self.constituent(k) == self.constituent((k - 1) % p + 1)))
            .unwrap_or(self.period)
    }

    /// Same function on the positive integers (constituent-wise after lifting).
    pub fn same_function(&self, other: &Self) -> bool {
        let period = self.period.lcm(&other.period);
        (1..=period).all(|k| self.constituent(k) == other.constituent(k))
    }

    /// LaTeX `cases` display, one line per stored class.
    pub fn to_latex_cases(&self, var: &str) -> String {
        let rho = self.period;
        let lines: Vec<String> = self
            .stored()
            .into_iter()
            .map(|(k, p)| {
                let cond = if self.is_compressed() {
                    format!("\\gcd({var},{rho})={k}")
                } else {
                    format!("{var}\\equiv {k} \\pmod{{{rho}}}")
                };
                format!("{} & \\text{{if }} {cond}", p.to_latex(var))
            })
            .collect();
        format!("\\begin{{cases}}\n{}\n\\end{{cases}}", lines.join(", \\\\\n"))
    }
}

impl PartialEq for QuasiPolynomial {
    /// Equal periods and equal constituents, regardless of storage form.
    fn eq(&self, other: &Self) -> bool {
        self.period == other.period && (1..=self.period).all(|k| self.constituent(k) == other.constituent(k))
    }
}

impl Eq for QuasiPolynomial {}
