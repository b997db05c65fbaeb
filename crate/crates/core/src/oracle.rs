//! Brute-force counters. Nothing here touches Smith normal forms or the
//! subset-sum formulas: homomorphisms and residue vectors are enumerated with
//! a mixed-radix counter and tested one by one.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::group::ElementList;
use crate::matrix::IntMatrix;
use crate::transforms::CwInstance;
use crate::tutte::chromatic_quasi;
use crate::Limits;

fn residue(x: &BigInt, q: u64) -> u64 {
    x.mod_floor(&BigInt::from(q)).to_u64().expect("residue below q")
}

fn check_size(size: BigInt, cap: u64) -> Result<()> {
    if size > BigInt::from(cap) {
        return Err(Error::EnumerationTooLarge { size: size.to_string(), cap });
    }
    Ok(())
}

/// Visits every tuple of a mixed-radix counter in lexicographic order.
fn for_each_tuple(radices: &[u64], mut visit: impl FnMut(&[u64])) {
    if radices.contains(&0) {
        return;
    }
    let mut digits = vec![0u64; radices.len()];
    loop {
        visit(&digits);
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return;
            }
            digits[pos] += 1;
            if digits[pos] < radices[pos] {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn dot_mod(weights: &[u64], digits: &[u64], q: u64) -> u64 {
    weights.iter().zip(digits).fold(0u64, |acc, (w, d)| (acc + w * d % q) % q)
}

/// `#{φ ∈ Hom(Γ, Z/qZ) : φ(α) ≠ 0 for all α ∈ A}`.
///
/// A free generator may go anywhere; a generator of order `d` goes to one of
/// the `gcd(d, q)` multiples of `q / gcd(d, q)`.
pub fn bm_count(a: &ElementList, q: u64, limits: &Limits) -> Result<u64> {
    if q == 0 {
        return Err(Error::PreconditionViolated("q must be positive".into()));
    }
    let gamma = a.group();
    let r = gamma.free_rank();
    let mut radices = vec![q; r];
    let mut steps = vec![1u64; r];
    for d in gamma.invariant_factors() {
        let g = d.gcd(&BigInt::from(q)).to_u64().expect("gcd bounded by q");
        radices.push(g);
        steps.push(q / g);
    }
    check_size(radices.iter().map(|&x| BigInt::from(x)).product(), limits.enum_cap)?;

    let weights: Vec<Vec<u64>> = a
        .iter()
        .map(|e| e.coords().iter().zip(&steps).map(|(c, s)| residue(c, q) * s % q).collect())
        .collect();
    let mut count = 0u64;
    for_each_tuple(&radices, |digits| {
        if weights.iter().all(|w| dot_mod(w, digits, q) != 0) {
            count += 1;
        }
    });
    Ok(count)
}

/// `#Hom(Γ, Z/qZ)` by enumeration.
pub fn hom_enumeration_count(gamma: &crate::group::FgAbelianGroup, q: u64, limits: &Limits) -> Result<u64> {
    bm_count(&ElementList::empty(gamma.clone()), q, limits)
}

/// `#{z ∈ (Z/qZ)^ℓ : z·A has no zero entry, z·B = 0}`.
pub fn cw_count(cw: &CwInstance, q: u64, limits: &Limits) -> Result<u64> {
    if q == 0 {
        return Err(Error::PreconditionViolated("q must be positive".into()));
    }
    check_size(num_traits::pow(BigInt::from(q), cw.ell), limits.enum_cap)?;
    let reduce = |m: &IntMatrix| -> Vec<Vec<u64>> {
        m.columns().iter().map(|c| c.iter().map(|x| residue(x, q)).collect()).collect()
    };
    let a = reduce(&cw.a);
    let b = reduce(&cw.b);
    let mut count = 0u64;
    for_each_tuple(&vec![q; cw.ell], |z| {
        if a.iter().all(|c| dot_mod(c, z, q) != 0) && b.iter().all(|c| dot_mod(c, z, q) == 0) {
            count += 1;
        }
    });
    Ok(count)
}

/// `#{z ∈ (Z/qZ)^ℓ : z·A has no zero entry}`.
pub fn ktt_count(a: &IntMatrix, ell: usize, q: u64, limits: &Limits) -> Result<u64> {
    let cw = CwInstance::new(a.clone(), IntMatrix::zeros(ell, 0), ell)?;
    cw_count(&cw, q, limits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub q: u64,
    pub oracle: BigInt,
    pub symbolic: BigInt,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.oracle == self.symbolic
    }
}

impl fmt::Display for VerifyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "q={} oracle={} symbolic={} {status}", self.q, self.oracle, self.symbolic)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(VerifyRow::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Compares the chromatic quasi-polynomial with [`bm_count`] for `q = 1..=q_max`.
pub fn verify(a: &ElementList, q_max: u64, limits: &Limits) -> Result<VerifyReport> {
    let f = chromatic_quasi(a, limits)?;
    let rows = (1..=q_max)
        .map(|q| Ok(VerifyRow { q, oracle: BigInt::from(bm_count(a, q, limits)?), symbolic: f.evaluate(q) }))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::hom_count;
    use crate::group::FgAbelianGroup;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn empty_list_counts_homs() {
        let l = Limits::default();
        let g = FgAbelianGroup::with_torsion(1, &[2, 4]).unwrap();
        for q in 1..=12 {
            assert_eq!(BigInt::from(bm_count(&ElementList::empty(g.clone()), q, &l).unwrap()), hom_count(&g, q));
        }
    }

    #[test]
    fn cyclic_group_generator() {
        let l = Limits::default();
        let g = FgAbelianGroup::with_torsion(0, &[4]).unwrap();
        let a = ElementList::from_coords(g, &[vec![1]]).unwrap();
        for q in 1..=12u64 {
            assert_eq!(bm_count(&a, q, &l).unwrap(), q.gcd(&4) - 1);
        }
    }

    #[test]
    fn klein_four_injective_maps() {
        let l = Limits::default();
        let g = FgAbelianGroup::with_torsion(0, &[2, 2]).unwrap();
        let a = ElementList::from_coords(g, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!((1..=16).all(|q| bm_count(&a, q, &l).unwrap() == 0));
    }

    #[test]
    fn cw_and_ktt_counts() {
        let l = Limits::default();
        let zero_b = CwInstance::from_columns(2, &[], &[ints(&[0, 0])]).unwrap();
        assert_eq!(cw_count(&zero_b, 5, &l).unwrap(), 25);
        let line = IntMatrix::from_rows(&[vec![1]]);
        assert_eq!(ktt_count(&line, 1, 7, &l).unwrap(), 6);
        let tri = IntMatrix::from_columns(3, &[ints(&[-1, 1, 0]), ints(&[-1, 0, 1]), ints(&[0, -1, 1])]);
        for q in 1..=5 {
            assert_eq!(ktt_count(&tri, 3, q, &l).unwrap(), q * q.saturating_sub(1) * q.saturating_sub(2));
        }
        assert_eq!(ktt_count(&IntMatrix::zeros(2, 0), 2, 4, &l).unwrap(), 16);
    }

    #[test]
    fn caps_are_errors() {
        let limits = Limits { enum_cap: 100, ..Limits::default() };
        let g = FgAbelianGroup::free(3);
        assert!(matches!(bm_count(&ElementList::empty(g), 5, &limits), Err(Error::EnumerationTooLarge { .. })));
        let cw = CwInstance::from_columns(3, &[], &[]).unwrap();
        assert!(cw_count(&cw, 4, &limits).is_ok());
        assert!(cw_count(&cw, 5, &limits).is_err());
    }

    #[test]
    fn report_format() {
        let row = VerifyRow { q: 3, oracle: BigInt::from(4), symbolic: BigInt::from(4) };
        assert_eq!(row.to_string(), "q=3 oracle=4 symbolic=4 PASS");
        let bad = VerifyRow { q: 3, oracle: BigInt::from(4), symbolic: BigInt::from(5) };
        assert_eq!(bad.to_string(), "q=3 oracle=4 symbolic=5 FAIL");
    }

    #[test]
    fn verify_small_lists() {
        let l = Limits::default();
        let report = verify(&ElementList::empty(FgAbelianGroup::free(2)), 6, &l).unwrap();
        assert!(report.passed());
        assert_eq!(report.rows[4].oracle, BigInt::from(25));
    }
}
