//! Finitely generated abelian groups in invariant-factor form, their elements,
//! lists of elements, and the closed family of coefficient groups `G`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_s` with `1 < d₁ | d₂ | … | d_s`.
///
/// Elements are coordinate vectors of length `r + s`: free coordinates first,
/// then one coordinate per invariant factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Result<Self> {
        for (i, d) in invariant_factors.iter().enumerate() {
            if *d <= BigInt::one() {
                return Err(Error::parse("group", format!("invariant factor {d} must exceed 1")));
            }
            if i > 0 && !d.is_multiple_of(&invariant_factors[i - 1]) {
                return Err(Error::parse(
                    "group",
                    format!("invariant factors must form a divisibility chain, {} does not divide {d}", invariant_factors[i - 1]),
                ));
            }
        }
        Ok(FgAbelianGroup { free_rank, invariant_factors })
    }

    /// Convenience constructor from machine integers.
    pub fn with_torsion(free_rank: usize, invariant_factors: &[u64]) -> Result<Self> {
        Self::new(free_rank, invariant_factors.iter().map(|&d| BigInt::from(d)).collect())
    }

    /// `Z^r`.
    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { free_rank: rank, invariant_factors: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Length of coordinate vectors, `r + s`.
    pub fn dim(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Largest invariant factor, or 1 for a torsion-free group.
    pub fn exponent(&self) -> BigInt {
        self.invariant_factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// The relation vectors `dᵢ·e_{r+i}` presenting the group as a quotient of `Z^{r+s}`.
    pub fn relation_columns(&self) -> Vec<Vec<BigInt>> {
        let n = self.dim();
        self.invariant_factors
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut v = vec![BigInt::zero(); n];
                v[self.free_rank + i] = d.clone();
                v
            })
            .collect()
    }

    /// Reduces torsion coordinates into `[0, dᵢ)`.
    pub fn normalize(&self, coords: &mut [BigInt]) {
        for (i, d) in self.invariant_factors.iter().enumerate() {
            let x = &mut coords[self.free_rank + i];
            *x = x.mod_floor(d);
        }
    }

    pub fn element<T: Into<BigInt> + Clone>(&self, coords: &[T]) -> Result<GroupElement> {
        self.element_from(coords.iter().cloned().map(Into::into).collect(), 0)
    }

    pub(crate) fn element_from(&self, mut coords: Vec<BigInt>, index: usize) -> Result<GroupElement> {
        if coords.len() != self.dim() {
            return Err(Error::ElementNotInGroup {
                index,
                reason: format!("expected {} coordinates, got {}", self.dim(), coords.len()),
            });
        }
        self.normalize(&mut coords);
        Ok(GroupElement { coords })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![BigInt::zero(); self.dim()] }
    }

    /// True if `e` has the right length and normalized torsion coordinates.
    pub fn contains(&self, e: &GroupElement) -> bool {
        e.coords.len() == self.dim()
            && self
                .invariant_factors
                .iter()
                .zip(&e.coords[self.free_rank..])
                .all(|(d, x)| !x.is_negative() && x < d)
    }

    pub fn is_torsion(&self, e: &GroupElement) -> bool {
        e.coords[..self.free_rank].iter().all(Zero::is_zero)
    }

    /// Same free rank and invariant factors.
    pub fn is_isomorphic(&self, other: &FgAbelianGroup) -> bool {
        self == other
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        terms.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl FromStr for FgAbelianGroup {
    type Err = Error;

    /// Parses `"Z^r + Z/d1 + ... + Z/ds"`, whitespace-insensitive. `Z` means
    /// `Z^1` and `0` is the trivial group. Free terms must precede torsion terms.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("group", "empty group descriptor"));
        }
        let mut free_rank = 0usize;
        let mut factors = Vec::new();
        for term in compact.split('+') {
            if term == "0" {
                continue;
            }
            if let Some(d) = term.strip_prefix("Z/") {
                let d: BigInt = d
                    .parse()
                    .map_err(|_| Error::parse("group", format!("bad cyclic order in `{term}`")))?;
                factors.push(d);
            } else if term == "Z" || term.starts_with("Z^") {
                if !factors.is_empty() {
                    return Err(Error::parse("group", "free terms must come before torsion terms"));
                }
                let r = match term.strip_prefix("Z^") {
                    Some(r) => r
                        .parse::<usize>()
                        .map_err(|_| Error::parse("group", format!("bad rank in `{term}`")))?,
                    None => 1,
                };
                free_rank += r;
            } else {
                return Err(Error::parse("group", format!("unrecognized term `{term}`")));
            }
        }
        Self::new(free_rank, factors)
    }
}

/// Coordinates of one element relative to a group presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A subset of list positions, bit `i` set meaning index `i` is selected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mask(pub u64);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(len: usize) -> Mask {
        assert!(len <= 64, "masks address at most 64 positions");
        if len == 64 { Mask(u64::MAX) } else { Mask((1u64 << len) - 1) }
    }

    pub fn single(i: usize) -> Mask {
        Mask(1u64 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Result<Mask> {
        let mut m = 0u64;
        for &i in indices {
            if i >= 64 {
                return Err(Error::BadIndex { index: i, len: 64 });
            }
            m |= 1 << i;
        }
        Ok(Mask(m))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn count(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// Fails if the mask selects a position `>= len`.
    pub fn check(self, len: usize) -> Result<()> {
        match self.indices().find(|&i| i >= len) {
            Some(index) => Err(Error::BadIndex { index, len }),
            None => Ok(()),
        }
    }
}

/// An ordered list (multiset) of elements of one group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementList {
    group: FgAbelianGroup,
    elements: Vec<GroupElement>,
}

impl ElementList {
    pub fn new(group: FgAbelianGroup, elements: Vec<GroupElement>) -> Result<Self> {
        for (index, e) in elements.iter().enumerate() {
            if !group.contains(e) {
                return Err(Error::ElementNotInGroup { index, reason: format!("{e} is not normalized for {group}") });
            }
        }
        Ok(ElementList { group, elements })
    }

    /// Builds a list from raw coordinates, normalizing torsion coordinates.
    pub fn from_coords<T: Into<BigInt> + Clone>(group: FgAbelianGroup, coords: &[Vec<T>]) -> Result<Self> {
        let elements = coords
            .iter()
            .enumerate()
            .map(|(i, c)| group.element_from(c.iter().cloned().map(Into::into).collect(), i))
            .collect::<Result<Vec<_>>>()?;
        Ok(ElementList { group, elements })
    }

    pub fn empty(group: FgAbelianGroup) -> Self {
        ElementList { group, elements: Vec::new() }
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GroupElement> {
        self.elements.iter()
    }

    /// Elements at the masked positions, in list order.
    pub fn select(&self, mask: Mask) -> Result<ElementList> {
        mask.check(self.len())?;
        let elements = self.elements.iter().enumerate().filter(|(i, _)| mask.contains(*i)).map(|(_, e)| e.clone()).collect();
        Ok(ElementList { group: self.group.clone(), elements })
    }

    /// Concatenation of two lists over the same group.
    pub fn concat(&self, other: &ElementList) -> Result<ElementList> {
        if self.group != other.group {
            return Err(Error::ElementNotInGroup { index: 0, reason: format!("{} is not {}", other.group, self.group) });
        }
        let mut elements = self.elements.clone();
        elements.extend(other.elements.iter().cloned());
        Ok(ElementList { group: self.group.clone(), elements })
    }

    pub fn full_mask(&self) -> Mask {
        Mask::full(self.len())
    }

    pub fn coords(&self) -> Vec<Vec<BigInt>> {
        self.elements.iter().map(|e| e.coords.clone()).collect()
    }
}

/// A torsion-wise finite coefficient group `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GSpec {
    /// `Z/kZ`, `k ≥ 1`.
    Cyclic(u64),
    /// `Z`
    Integers,
    /// `Q/Z`
    Circle,
    /// Finite direct sum.
    Sum(Vec<GSpec>),
}

impl GSpec {
    /// `#Hom(Z/dZ, G)` for `d ≥ 1`.
    pub fn hom_from_cyclic(&self, d: &BigInt) -> BigInt {
        match self {
            GSpec::Cyclic(k) => d.gcd(&BigInt::from(*k)),
            GSpec::Integers => BigInt::one(),
            GSpec::Circle => d.clone(),
            GSpec::Sum(parts) => parts.iter().map(|g| g.hom_from_cyclic(d)).product(),
        }
    }
}

impl fmt::Display for GSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GSpec::Cyclic(k) => write!(f, "k:{k}"),
            GSpec::Integers => f.write_str("Z"),
            GSpec::Circle => f.write_str("QZ"),
            GSpec::Sum(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join("+"))
            }
        }
    }
}

impl FromStr for GSpec {
    type Err = Error;

    /// Accepts `k:<int>` (or `Z/<int>`), `Z`, `QZ`, and `+`-separated sums of these.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parts = compact
            .split('+')
            .map(|term| match term {
                "Z" => Ok(GSpec::Integers),
                "QZ" | "Q/Z" => Ok(GSpec::Circle),
                _ => {
                    let k = term
                        .strip_prefix("k:")
                        .or_else(|| term.strip_prefix("Z/"))
                        .ok_or_else(|| Error::parse("g", format!("unrecognized coefficient group `{term}`")))?;
                    match k.parse::<u64>() {
                        Ok(k) if k >= 1 => Ok(GSpec::Cyclic(k)),
                        _ => Err(Error::parse("g", format!("cyclic order must be a positive integer, got `{k}`"))),
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(GSpec::Sum(parts))
        }
    }
}
