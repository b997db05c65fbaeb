//! List surgery: deletion, contraction, the conversions between matrix-pair
//! instances and lists in abelian groups, graph import, torsion split and
//! localization.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::{column_rank, is_zero_vec, quotient};
use crate::error::{Error, Result};
use crate::group::{ElementList, FgAbelianGroup, Mask};
use crate::matrix::IntMatrix;

pub fn deletion(a: &ElementList, mask: Mask) -> Result<ElementList> {
    mask.check(a.len())?;
    a.select(Mask(!mask.0 & a.full_mask().0))
}

/// `Γ/⟨S⟩` and the cosets of the unmasked elements, zero cosets included.
pub fn contraction(a: &ElementList, mask: Mask) -> Result<(FgAbelianGroup, ElementList)> {
    mask.check(a.len())?;
    let q = quotient(a.group(), &a.select(mask)?)?;
    let rest = deletion(a, mask)?;
    Ok((q.group, q.map.apply_list(&rest)))
}

/// Lists `A` and `B` in `Z^ℓ`, stored as the columns of `ℓ`-row matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwInstance {
    pub a: IntMatrix,
    pub b: IntMatrix,
    pub ell: usize,
}

impl CwInstance {
    pub fn new(a: IntMatrix, b: IntMatrix, ell: usize) -> Result<Self> {
        for (name, m) in [("A", &a), ("B", &b)] {
            if m.rows() != ell {
                return Err(Error::parse(format!("cw.{name}"), format!("expected {ell} rows, got {}", m.rows())));
            }
        }
        Ok(CwInstance { a, b, ell })
    }

    /// Builds an instance from column vectors.
    pub fn from_columns(ell: usize, a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Result<Self> {
        for (name, cols) in [("A", a), ("B", b)] {
            if let Some(c) = cols.iter().find(|c| c.len() != ell) {
                return Err(Error::parse(format!("cw.{name}"), format!("column of length {} in dimension {ell}", c.len())));
            }
        }
        Self::new(IntMatrix::from_columns(ell, a), IntMatrix::from_columns(ell, b), ell)
    }
}

/// Representatives `Ã` and relation vectors `Q` in `Z^{r+s}` with `Γ ≅ Z^{r+s}/⟨Q⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lifting {
    pub a_tilde: ElementList,
    pub q_list: ElementList,
}

/// `(Z^ℓ/⟨B⟩, (A ⊔ B)/B)`.
pub fn cw_to_bm(cw: &CwInstance) -> Result<(FgAbelianGroup, ElementList)> {
    let free = FgAbelianGroup::free(cw.ell);
    let b = ElementList::from_coords(free.clone(), &cw.b.columns())?;
    let a = ElementList::from_coords(free.clone(), &cw.a.columns())?;
    let q = quotient(&free, &b)?;
    Ok((q.group, q.map.apply_list(&a)))
}

/// Lifts a list to `Z^{r+s}` using the normalized coordinates as representatives.
pub fn bm_to_cw(a: &ElementList) -> Result<(CwInstance, Lifting)> {
    let gamma = a.group();
    let ell = gamma.dim();
    let free = FgAbelianGroup::free(ell);
    let a_tilde = ElementList::from_coords(free.clone(), &a.coords())?;
    let relations = gamma.relation_columns();
    let q_list = ElementList::from_coords(free, &relations)?;
    let cw = CwInstance::from_columns(ell, &a.coords(), &relations)?;
    Ok((cw, Lifting { a_tilde, q_list }))
}

/// A finite graph; vertices are `0..vertices`, loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(i, j) in &edges {
            for v in [i, j] {
                if v >= vertices {
                    return Err(Error::BadVertexIndex { vertex: v, vertices });
                }
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph { vertices: n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { vertices: n, edges: (1..n).map(|j| (j - 1, j)).collect() }
    }
}

/// One vector per edge `(i, j)` in `Z^{#V}`: `+1` at `j`, `−1` at `i`.
/// A loop `(i, i)` gives the zero vector.
pub fn graph_to_list(graph: &Graph) -> Result<ElementList> {
    let graph = Graph::new(graph.vertices, graph.edges.clone())?;
    let coords: Vec<Vec<BigInt>> = graph
        .edges
        .iter()
        .map(|&(i, j)| {
            let mut v = vec![BigInt::zero(); graph.vertices];
            v[j] += BigInt::one();
            v[i] -= BigInt::one();
            v
        })
        .collect();
    ElementList::from_coords(FgAbelianGroup::free(graph.vertices), &coords)
}

/// Mask of the torsion elements (zero free part).
pub fn torsion_mask(a: &ElementList) -> Mask {
    let bits = a.iter().enumerate().filter(|(_, e)| a.group().is_torsion(e)).fold(0u64, |m, (i, _)| m | 1 << i);
    Mask(bits)
}

/// `(A ∖ A^tor, A^tor)`
pub fn torsion_split(a: &ElementList) -> Result<(ElementList, ElementList)> {
    let tor = torsion_mask(a);
    Ok((deletion(a, tor)?, a.select(tor)?))
}

fn localization_checks(a: &ElementList, s_mask: Mask) -> Result<()> {
    if !a.group().is_free() {
        return Err(Error::FreeGroupRequired(a.group().to_string()));
    }
    s_mask.check(a.len())?;
    if let Some(i) = s_mask.indices().find(|&i| a.elements()[i].is_zero()) {
        return Err(Error::ZeroElementInS(i));
    }
    Ok(())
}

/// Positions of `A_X`, the elements in the rational span of the masked sublist.
pub fn localization_mask(a: &ElementList, s_mask: Mask) -> Result<Mask> {
    localization_checks(a, s_mask)?;
    let dim = a.group().dim();
    let s: Vec<Vec<BigInt>> = s_mask.indices().map(|i| a.elements()[i].coords().to_vec()).collect();
    let base = column_rank(dim, &s);
    let mut bits = 0u64;
    for (i, e) in a.iter().enumerate() {
        let inside = if is_zero_vec(e.coords()) {
            true
        } else {
            let mut cols = s.clone();
            cols.push(e.coords().to_vec());
            column_rank(dim, &cols) == base
        };
        if inside {
            bits |= 1 << i;
        }
    }
    Ok(Mask(bits))
}

/// `A_X` for `X` the intersection of the hyperplanes of the masked elements.
pub fn localization(a: &ElementList, s_mask: Mask) -> Result<ElementList> {
    a.select(localization_mask(a, s_mask)?)
}

/// The restriction to `X`, represented as the contraction `A / A_X`.
pub fn restriction(a: &ElementList, s_mask: Mask) -> Result<(FgAbelianGroup, ElementList)> {
    contraction(a, localization_mask(a, s_mask)?)
}
