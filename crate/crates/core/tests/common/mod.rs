//! Fixtures and independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quasichrom_core::{ElementList, FgAbelianGroup, Graph, IntMatrix};

pub const CORPUS_SEED: u64 = 0x5eed_c0de;
pub const CORPUS_SIZE: usize = 240;

pub fn example_list() -> ElementList {
    let g = FgAbelianGroup::with_torsion(2, &[4]).unwrap();
    ElementList::from_coords(g, &[vec![2, 2, 1], vec![0, 2, 3], vec![0, 0, 3]]).unwrap()
}

pub fn klein_zero_list() -> ElementList {
    let g = FgAbelianGroup::with_torsion(0, &[2, 2]).unwrap();
    ElementList::from_coords(g, &[vec![0, 0], vec![1, 0]]).unwrap()
}

/// Random pair: free rank ≤ 2, at most one torsion factor from {2,3,4,6},
/// at most 4 elements, coordinates drawn from [−4, 4].
pub fn random_pair(rng: &mut impl Rng) -> ElementList {
    loop {
        let r = rng.gen_range(0..=2usize);
        let torsion: Vec<u64> = match rng.gen_range(0..5) {
            0 => vec![],
            i => vec![[2, 3, 4, 6][i - 1]],
        };
        if r + torsion.len() == 0 {
            continue;
        }
        let g = FgAbelianGroup::with_torsion(r, &torsion).unwrap();
        let n = rng.gen_range(0..=4usize);
        let coords: Vec<Vec<i64>> = (0..n).map(|_| (0..g.dim()).map(|_| rng.gen_range(-4..=4)).collect()).collect();
        return ElementList::from_coords(g, &coords).unwrap();
    }
}

/// The fixed test corpus: the worked example followed by seeded random pairs.
pub fn corpus() -> Vec<ElementList> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = vec![example_list()];
    while out.len() < CORPUS_SIZE {
        out.push(random_pair(&mut rng));
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * laplace_det(&minor)
            })
            .sum(),
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of all k×k minors, for k = 1..=min(rows, cols).
pub fn minor_gcds(m: &[Vec<i128>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = 0i128;
            for rs in combinations(rows, k) {
                for cs in combinations(cols, k) {
                    let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    g = g.gcd(&laplace_det(&sub));
                }
            }
            g
        })
        .collect()
}

pub fn to_i128_rows(m: &IntMatrix) -> Vec<Vec<i128>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| i128::try_from(x).unwrap()).collect()).collect()
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntMatrix::from_rows(&data)
}

/// Proper q-colorings of a graph by exhaustive labeling.
pub fn proper_colorings(graph: &Graph, q: u64) -> u64 {
    let n = graph.vertices;
    let total = q.pow(n as u32);
    (0..total)
        .filter(|&code| {
            let color = |v: usize| code / q.pow(v as u32) % q;
            graph.edges.iter().all(|&(i, j)| color(i) != color(j))
        })
        .count() as u64
}

fn components(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut count = vertices;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// Tutte polynomial of a graph by edge-subset rank enumeration on the graphic
/// matroid, `r(F) = #V − c(F)`. Returns coefficients keyed by `(i, j)` of `x^i y^j`.
pub fn graphic_tutte(graph: &Graph) -> BTreeMap<(usize, usize), BigInt> {
    let m = graph.edges.len();
    let n = graph.vertices;
    let rank = |f: &[(usize, usize)]| n - components(n, f);
    let full = rank(&graph.edges);
    // expand (x-1)^a (y-1)^b with binomials
    let binom = |a: usize, i: usize| -> i64 { (0..i).fold(1i64, |acc, t| acc * (a - t) as i64 / (t + 1) as i64) };
    let mut out: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for bits in 0u32..1 << m {
        let f: Vec<(usize, usize)> = (0..m).filter(|&e| bits >> e & 1 == 1).map(|e| graph.edges[e]).collect();
        let r = rank(&f);
        let (a, b) = (full - r, f.len() - r);
        for i in 0..=a {
            for j in 0..=b {
                let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                *out.entry((i, j)).or_default() += BigInt::from(sign * binom(a, i) * binom(b, j));
            }
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}
