//! Quotients, ranks, multiplicities and the LCM-period.
//!
//! A group `Γ = Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_s` is handled internally as
//! `Z^{r+s} / ⟨dᵢ·e_{r+i}⟩`, so the quotient `Γ/⟨S⟩` is the cokernel of the
//! integer matrix whose columns are the coordinates of `S` followed by the
//! relation vectors. Its Smith normal form gives both the presentation of the
//! quotient and, through the left transform, the coset map.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{ElementList, FgAbelianGroup, GSpec, GroupElement, Mask};
use crate::matrix::IntMatrix;
use crate::snf::snf;
use crate::Limits;

/// Linear map `Γ → Γ/⟨S⟩` on normalized coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetMap {
    rows: Vec<Vec<BigInt>>,
    target: FgAbelianGroup,
}

impl CosetMap {
    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn apply(&self, e: &GroupElement) -> GroupElement {
        let mut coords: Vec<BigInt> = self
            .rows
            .iter()
            .map(|row| row.iter().zip(e.coords()).map(|(a, b)| a * b).sum())
            .collect();
        self.target.normalize(&mut coords);
        self.target.element_from(coords, 0).expect("coset map produces target-sized vectors")
    }

    pub fn apply_list(&self, list: &ElementList) -> ElementList {
        let elements = list.iter().map(|e| self.apply(e)).collect();
        ElementList::new(self.target.clone(), elements).expect("images are normalized")
    }
}

/// Presentation of `Γ/⟨S⟩` together with the projection onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub group: FgAbelianGroup,
    pub map: CosetMap,
}

fn check_same_group(gamma: &FgAbelianGroup, s: &ElementList) -> Result<()> {
    if s.group() != gamma {
        return Err(Error::ElementNotInGroup { index: 0, reason: format!("list lives in {}, not {gamma}", s.group()) });
    }
    Ok(())
}

/// Columns of `S` followed by the relation columns of `gamma`.
fn presentation_matrix(gamma: &FgAbelianGroup, s: &[GroupElement]) -> IntMatrix {
    let mut columns: Vec<Vec<BigInt>> = s.iter().map(|e| e.coords().to_vec()).collect();
    columns.extend(gamma.relation_columns());
    IntMatrix::from_columns(gamma.dim(), &columns)
}

/// Free rank and torsion invariants (all `> 1`, as a chain) of `Γ/⟨S⟩`.
fn quotient_invariants(gamma: &FgAbelianGroup, s: &[GroupElement]) -> (usize, Vec<BigInt>) {
    let r = snf(&presentation_matrix(gamma, s));
    let rank = r.rank();
    let torsion = r.d[..rank].iter().filter(|d| !d.is_one()).cloned().collect();
    (gamma.dim() - rank, torsion)
}

pub fn quotient(gamma: &FgAbelianGroup, s: &ElementList) -> Result<Quotient> {
    check_same_group(gamma, s)?;
    let n = gamma.dim();
    if s.iter().all(GroupElement::is_zero) {
        let rows = (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as u8)).collect()).collect();
        return Ok(Quotient { group: gamma.clone(), map: CosetMap { rows, target: gamma.clone() } });
    }
    let r = snf(&presentation_matrix(gamma, s.elements()));
    let rank = r.rank();
    let mut rows: Vec<Vec<BigInt>> = (rank..n).map(|i| r.u.row(i).to_vec()).collect();
    hermite_rows(&mut rows);
    let mut torsion = Vec::new();
    for i in 0..rank {
        if !r.d[i].is_one() {
            rows.push(r.u.row(i).to_vec());
            torsion.push(r.d[i].clone());
        }
    }
    let group = FgAbelianGroup::new(n - rank, torsion).expect("SNF produces a divisibility chain");
    Ok(Quotient { map: CosetMap { rows, target: group.clone() }, group })
}

/// Row-style Hermite normal form in place, by unimodular row operations.
/// Applied to the free rows of a coset map it fixes the choice of basis for
/// the free part, so relations that only touch torsion coordinates leave the
/// free coordinates alone.
fn hermite_rows(rows: &mut [Vec<BigInt>]) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut p = 0;
    for j in 0..cols {
        if p == rows.len() {
            break;
        }
        while let Some(m) = (p..rows.len())
            .filter(|&i| !rows[i][j].is_zero())
            .min_by(|&a, &b| rows[a][j].magnitude().cmp(rows[b][j].magnitude()))
        {
            rows.swap(p, m);
            let mut done = true;
            for i in p + 1..rows.len() {
                let f = rows[i][j].div_floor(&rows[p][j]);
                if !f.is_zero() {
                    let pivot = rows[p].clone();
                    rows[i].iter_mut().zip(&pivot).for_each(|(x, y)| *x -= &f * y);
                }
                done &= rows[i][j].is_zero();
            }
            if done {
                break;
            }
        }
        if rows[p][j].is_zero() {
            continue;
        }
        if rows[p][j].sign() == num_bigint::Sign::Minus {
            rows[p].iter_mut().for_each(|x| *x = -&*x);
        }
        let pivot = rows[p].clone();
        for row in &mut rows[..p] {
            let f = row[j].div_floor(&pivot[j]);
            row.iter_mut().zip(&pivot).for_each(|(x, y)| *x -= &f * y);
        }
        p += 1;
    }
}

/// `r_S`, the rank of the subgroup generated by `s`.
pub fn subgroup_rank(gamma: &FgAbelianGroup, s: &ElementList) -> Result<usize> {
    check_same_group(gamma, s)?;
    let (free, _) = quotient_invariants(gamma, s.elements());
    Ok(gamma.free_rank() - free)
}

/// `#Hom(T, G)` for a finite group `T` with the given invariant factors.
pub fn hom_torsion_count(torsion: &[BigInt], g: &GSpec) -> BigInt {
    torsion.iter().map(|d| g.hom_from_cyclic(d)).product()
}

/// `m(S; G) = #Hom((Γ/⟨S⟩)_tor, G)`.
pub fn multiplicity(gamma: &FgAbelianGroup, s: &ElementList, g: &GSpec) -> Result<BigInt> {
    check_same_group(gamma, s)?;
    let (_, torsion) = quotient_invariants(gamma, s.elements());
    Ok(hom_torsion_count(&torsion, g))
}

/// `#Hom(Γ, Z/qZ) = q^r · ∏ gcd(dᵢ, q)`.
pub fn hom_count(gamma: &FgAbelianGroup, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let free = num_traits::pow(q.clone(), gamma.free_rank());
    gamma.invariant_factors().iter().fold(free, |acc, d| acc * d.gcd(&q))
}

/// Data about one sublist `S` needed by the subset-sum formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetInfo {
    pub size: usize,
    pub rank: usize,
    /// Torsion invariants of `Γ/⟨S⟩`.
    pub torsion: Vec<BigInt>,
}

impl SubsetInfo {
    /// Largest torsion invariant of the quotient, 1 if there is none.
    pub fn top_invariant(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }
}

/// `SubsetInfo` for every sublist of a list, indexed by mask.
#[derive(Clone, Debug)]
pub struct SubsetTable {
    group_rank: usize,
    entries: Vec<SubsetInfo>,
}

impl SubsetTable {
    pub fn new(a: &ElementList, limits: &Limits) -> Result<Self> {
        if a.len() > limits.subset_cap || a.len() >= 64 {
            return Err(Error::ListTooLarge { len: a.len(), cap: limits.subset_cap.min(63) });
        }
        let gamma = a.group();
        let entries = (0..1u64 << a.len())
            .map(|bits| {
                let mask = Mask(bits);
                let s: Vec<GroupElement> = mask.indices().map(|i| a.elements()[i].clone()).collect();
                let (free, torsion) = quotient_invariants(gamma, &s);
                SubsetInfo { size: mask.count(), rank: gamma.free_rank() - free, torsion }
            })
            .collect();
        Ok(SubsetTable { group_rank: gamma.free_rank(), entries })
    }

    pub fn group_rank(&self) -> usize {
        self.group_rank
    }

    /// `r_A`, the rank of the whole list.
    pub fn list_rank(&self) -> usize {
        self.entries.last().map_or(0, |e| e.rank)
    }

    pub fn get(&self, mask: Mask) -> &SubsetInfo {
        &self.entries[mask.0 as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Mask, &SubsetInfo)> {
        self.entries.iter().enumerate().map(|(i, e)| (Mask(i as u64), e))
    }

    /// `lcm` of the top torsion invariant over all sublists.
    pub fn lcm_period(&self) -> Result<u64> {
        let l = self.entries.iter().fold(BigInt::one(), |acc, e| acc.lcm(&e.top_invariant()));
        l.to_u64().ok_or(Error::PeriodOverflow)
    }
}

/// The LCM-period `ρ_A`.
pub fn lcm_period(a: &ElementList, limits: &Limits) -> Result<u64> {
    SubsetTable::new(a, limits)?.lcm_period()
}

/// Rank of the integer matrix with the given columns.
pub fn column_rank(dim: usize, columns: &[Vec<BigInt>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    snf(&IntMatrix::from_columns(dim, columns)).rank()
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}
