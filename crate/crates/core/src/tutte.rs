//! G-Tutte and G-characteristic polynomials, chromatic quasi-polynomials and
//! the characteristic polynomial of the associated real arrangement.
//!
//! Two independent routes compute the chromatic quasi-polynomial: the subset
//! sum over all sublists (main path), and the deletion–contraction recursion
//! pivoting on the last element.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::abelian::{hom_torsion_count, SubsetTable};
use crate::error::{Error, Result};
use crate::group::{ElementList, FgAbelianGroup, GSpec, Mask};
use crate::poly::{BivariatePolynomial, IntPolynomial};
use crate::quasi::{divisors, QuasiPolynomial};
use crate::transforms::{contraction, deletion, torsion_mask, torsion_split};
use crate::Limits;

fn sign(n: usize) -> BigInt {
    if n.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() }
}

/// `Σ_S m(S;G) (x−1)^{r_A−r_S} (y−1)^{#S−r_S}`.
pub fn g_tutte(a: &ElementList, g: &GSpec, limits: &Limits) -> Result<BivariatePolynomial> {
    let table = SubsetTable::new(a, limits)?;
    let r_a = table.list_rank();
    let mut out = BivariatePolynomial::zero();
    for (_, s) in table.iter() {
        let m = hom_torsion_count(&s.torsion, g);
        out = &out + &BivariatePolynomial::shifted_monomial(&m, r_a - s.rank, s.size - s.rank);
    }
    Ok(out)
}

fn char_poly_from_table(table: &SubsetTable, g: &GSpec) -> IntPolynomial {
    let mut coeffs = vec![BigInt::from(0); table.group_rank() + 1];
    for (_, s) in table.iter() {
        coeffs[table.group_rank() - s.rank] += sign(s.size) * hom_torsion_count(&s.torsion, g);
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// `Σ_S (−1)^{#S} m(S;G) t^{r_Γ−r_S}`.
pub fn g_char_poly(a: &ElementList, g: &GSpec, limits: &Limits) -> Result<IntPolynomial> {
    Ok(char_poly_from_table(&SubsetTable::new(a, limits)?, g))
}

/// `(−1)^{r_A} t^{r_Γ−r_A} T_A^G(1−t, 0)`, the defining specialization of the
/// G-Tutte polynomial. Kept as a cross-check of [`g_char_poly`].
pub fn g_char_poly_via_tutte(a: &ElementList, g: &GSpec, limits: &Limits) -> Result<IntPolynomial> {
    let r_a = SubsetTable::new(a, limits)?.list_rank();
    let tutte = g_tutte(a, g, limits)?;
    let specialized = tutte.substitute(&IntPolynomial::from_i64(&[1, -1]), &IntPolynomial::zero());
    let shift = IntPolynomial::monomial(sign(r_a), a.group().free_rank() - r_a);
    Ok(&specialized * &shift)
}

/// The chromatic quasi-polynomial `q ↦ #{φ : Γ → Z/qZ, φ(α) ≠ 0 ∀α ∈ A}`,
/// with period `ρ_A` and one constituent per divisor of `ρ_A`.
pub fn chromatic_quasi(a: &ElementList, limits: &Limits) -> Result<QuasiPolynomial> {
    let table = SubsetTable::new(a, limits)?;
    let rho = table.lcm_period()?;
    let classes: BTreeMap<u64, IntPolynomial> =
        divisors(rho).into_iter().map(|k| (k, char_poly_from_table(&table, &GSpec::Cyclic(k)))).collect();
    QuasiPolynomial::from_gcd_classes(rho, classes)
}

/// `q ↦ #Hom(Γ, Z/qZ)`: period `d_s`, constituent `t^r ∏ gcd(dᵢ, k)`.
pub fn hom_count_quasi(gamma: &FgAbelianGroup) -> Result<QuasiPolynomial> {
    let rho = gamma.exponent().to_u64().ok_or(Error::PeriodOverflow)?;
    let classes = divisors(rho)
        .into_iter()
        .map(|k| {
            let c: BigInt = gamma.invariant_factors().iter().map(|d| d.gcd(&BigInt::from(k))).product();
            (k, IntPolynomial::monomial(c, gamma.free_rank()))
        })
        .collect();
    QuasiPolynomial::from_gcd_classes(rho, classes)
}

/// Chromatic quasi-polynomial by deletion–contraction on the last element.
pub fn chromatic_quasi_dc(a: &ElementList, limits: &Limits) -> Result<QuasiPolynomial> {
    if a.len() > limits.subset_cap {
        return Err(Error::ListTooLarge { len: a.len(), cap: limits.subset_cap });
    }
    dc(a)
}

fn dc(a: &ElementList) -> Result<QuasiPolynomial> {
    if a.is_empty() {
        return hom_count_quasi(a.group());
    }
    let last = Mask::single(a.len() - 1);
    let deleted = deletion(a, last)?;
    let (_, contracted) = contraction(a, last)?;
    Ok(dc(&deleted)?.sub(&dc(&contracted)?))
}

/// Characteristic polynomial of the real arrangement of `A`: the
/// 1-constituent of the list with its torsion elements removed.
pub fn real_char_poly(a: &ElementList, limits: &Limits) -> Result<IntPolynomial> {
    let (free_part, _) = torsion_split(a)?;
    g_char_poly(&free_part, &GSpec::Cyclic(1), limits)
}

/// Whether the 1-constituent of a list containing torsion elements vanishes.
pub fn torsion_vanishing_check(a: &ElementList, limits: &Limits) -> Result<bool> {
    if torsion_mask(a) == Mask::EMPTY {
        return Err(Error::PreconditionViolated("the list has no torsion elements".into()));
    }
    Ok(g_char_poly(a, &GSpec::Cyclic(1), limits)?.is_zero())
}

pub fn minimal_period(f: &QuasiPolynomial) -> u64 {
    f.minimal_period()
}
