mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quasichrom_core::abelian::hom_torsion_count;
use quasichrom_core::oracle::{bm_count, cw_count, hom_enumeration_count, ktt_count};
use quasichrom_core::transforms::{
    bm_to_cw, contraction, cw_to_bm, deletion, graph_to_list, localization, localization_mask, restriction,
};
use quasichrom_core::tutte::{
    chromatic_quasi, g_char_poly, g_char_poly_via_tutte, g_tutte, real_char_poly,
};
use quasichrom_core::{
    hom_count, lcm_period, multiplicity, quotient, snf, subgroup_rank, ElementList, FgAbelianGroup, GSpec, Graph,
    IntMatrix, IntPolynomial, Limits, Mask,
};

use common::*;

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r).prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn pair_strategy() -> impl Strategy<Value = ElementList> {
    any::<u64>().prop_map(|seed| random_pair(&mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_is_a_valid_decomposition(m in matrix_strategy()) {
        let r = snf(&m);
        prop_assert_eq!(&(&r.u * &m) * &r.v, r.diagonal_matrix());
        prop_assert!(r.u.is_unimodular());
        prop_assert!(r.v.is_unimodular());
        let rank = r.rank();
        prop_assert!(r.d[rank..].iter().all(Zero::is_zero));
        for w in r.d[..rank].windows(2) {
            prop_assert!(w[0] > BigInt::zero());
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        let gcds = minor_gcds(&to_i128_rows(&m));
        let mut prefix = BigInt::one();
        for (k, g) in gcds.iter().enumerate() {
            prefix *= &r.d[k];
            prop_assert_eq!(&prefix, &BigInt::from(*g));
        }
    }

    #[test]
    fn snf_is_deterministic(m in matrix_strategy()) {
        prop_assert_eq!(snf(&m), snf(&m));
    }

    #[test]
    fn quotients_compose(a in pair_strategy(), split in any::<u64>()) {
        // contracting by S then by the image of T equals contracting by S ⊔ T
        let mask = Mask(split & a.full_mask().0);
        let s = a.select(mask).unwrap();
        let t = deletion(&a, mask).unwrap();
        let q1 = quotient(a.group(), &s).unwrap();
        let q2 = quotient(&q1.group, &q1.map.apply_list(&t)).unwrap();
        let direct = quotient(a.group(), &a).unwrap();
        prop_assert_eq!(&q2.group, &direct.group);

        let (g1, rest) = contraction(&a, mask).unwrap();
        prop_assert_eq!(g1, q1.group.clone());
        let (g2, _) = contraction(&rest, rest.full_mask()).unwrap();
        prop_assert_eq!(g2, direct.group);
    }

    #[test]
    fn ranks_are_monotone(a in pair_strategy(), bits in any::<u64>()) {
        let g = a.group();
        let small = Mask(bits & a.full_mask().0 & (bits >> 7));
        let big = Mask(bits & a.full_mask().0);
        let rs = subgroup_rank(g, &a.select(small).unwrap()).unwrap();
        let rb = subgroup_rank(g, &a.select(big).unwrap()).unwrap();
        prop_assert!(small.is_subset_of(big));
        prop_assert!(rs <= rb);
        prop_assert!(rb <= g.free_rank());
    }

    #[test]
    fn trivial_coefficients_have_multiplicity_one(a in pair_strategy()) {
        prop_assert_eq!(multiplicity(a.group(), &a, &GSpec::Cyclic(1)).unwrap(), BigInt::one());
    }

    #[test]
    fn periods_divide_parent(a in pair_strategy()) {
        prop_assume!(!a.is_empty());
        let limits = Limits::default();
        let rho = lcm_period(&a, &limits).unwrap();
        let last = Mask::single(a.len() - 1);
        let (_, contracted) = contraction(&a, last).unwrap();
        prop_assert_eq!(rho % lcm_period(&deletion(&a, last).unwrap(), &limits).unwrap(), 0);
        prop_assert_eq!(rho % lcm_period(&contracted, &limits).unwrap(), 0);
    }

    #[test]
    fn lifting_representatives_do_not_matter(a in pair_strategy(), seed in any::<u64>()) {
        let limits = Limits::default();
        let (cw, lifting) = bm_to_cw(&a).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let relations = lifting.q_list.coords();
        let perturbed: Vec<Vec<BigInt>> = cw.a.columns().into_iter().map(|mut col| {
            for rel in &relations {
                let c = BigInt::from(rng.gen_range(-3i64..=3));
                for (x, y) in col.iter_mut().zip(rel) {
                    *x += &c * y;
                }
            }
            col
        }).collect();
        let other = quasichrom_core::CwInstance::from_columns(cw.ell, &perturbed, &relations).unwrap();
        for q in 1..=12 {
            prop_assert_eq!(cw_count(&cw, q, &limits).unwrap(), cw_count(&other, q, &limits).unwrap());
        }
    }
}

#[test]
fn hom_count_matches_enumeration() {
    let limits = Limits::default();
    let groups = [
        FgAbelianGroup::free(3),
        FgAbelianGroup::with_torsion(2, &[4]).unwrap(),
        FgAbelianGroup::with_torsion(1, &[2, 6]).unwrap(),
        FgAbelianGroup::with_torsion(0, &[3, 3, 9]).unwrap(),
        FgAbelianGroup::with_torsion(0, &[5]).unwrap(),
    ];
    for g in &groups {
        for q in 1..=12 {
            assert_eq!(hom_count(g, q), BigInt::from(hom_enumeration_count(g, q, &limits).unwrap()), "{g} q={q}");
        }
    }
}

#[test]
fn specialization_consistency_on_corpus() {
    let limits = Limits::default();
    let mut gs = vec![GSpec::Integers, GSpec::Circle];
    gs.extend((1..=8).map(GSpec::Cyclic));
    for a in corpus() {
        for g in &gs {
            assert_eq!(g_char_poly(&a, g, &limits).unwrap(), g_char_poly_via_tutte(&a, g, &limits).unwrap(), "{a:?} {g}");
        }
    }
}

#[test]
fn constituents_are_g_characteristic_polynomials() {
    let limits = Limits::default();
    for a in corpus().iter().take(60) {
        let f = chromatic_quasi(a, &limits).unwrap();
        for k in 1..=f.period() {
            assert_eq!(f.constituent(k), &g_char_poly(a, &GSpec::Cyclic(k), &limits).unwrap());
        }
    }
}

#[test]
fn tutte_evaluations_count_subsets() {
    // T(2, 2) with G = Z counts all sublists
    let limits = Limits::default();
    for a in corpus().iter().take(80) {
        let t = g_tutte(a, &GSpec::Integers, &limits).unwrap();
        assert_eq!(t.eval(&BigInt::from(2), &BigInt::from(2)), BigInt::from(1u64 << a.len()));
        // and G = Q/Z gives m(∅) = |Γ_tor| as the constant at (1,1) when the list is empty
        if a.is_empty() {
            let qz = g_tutte(a, &GSpec::Circle, &limits).unwrap();
            assert_eq!(qz.eval(&BigInt::one(), &BigInt::one()), hom_torsion_count(a.group().invariant_factors(), &GSpec::Circle));
        }
    }
}

#[test]
fn cw_round_trips_on_random_instances() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let ell = rng.gen_range(1..=2usize);
        let mut cols = |n: usize| -> Vec<Vec<BigInt>> {
            (0..n).map(|_| (0..ell).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect()).collect()
        };
        let a = cols(2);
        let b = cols(1);
        let cw = quasichrom_core::CwInstance::from_columns(ell, &a, &b).unwrap();
        let (_, list) = cw_to_bm(&cw).unwrap();
        for q in 1..=16 {
            assert_eq!(cw_count(&cw, q, &limits).unwrap(), bm_count(&list, q, &limits).unwrap());
        }
    }
}

#[test]
fn ktt_is_bm_over_free_groups() {
    let limits = Limits::default();
    for a in corpus().into_iter().filter(|a| a.group().is_free()).take(40) {
        let m = IntMatrix::from_columns(a.group().dim(), &a.coords());
        for q in 1..=10 {
            assert_eq!(ktt_count(&m, a.group().dim(), q, &limits).unwrap(), bm_count(&a, q, &limits).unwrap());
        }
    }
}

#[test]
fn localization_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let ell = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=5usize);
        let coords: Vec<Vec<i64>> = (0..n).map(|_| (0..ell).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let a = ElementList::from_coords(FgAbelianGroup::free(ell), &coords).unwrap();
        let nonzero: Vec<usize> = (0..n).filter(|&i| !a.elements()[i].is_zero()).collect();
        let s = Mask::from_indices(&nonzero.into_iter().filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>()).unwrap();
        let ax = localization_mask(&a, s).unwrap();
        assert!(s.is_subset_of(ax));
        let nonzero_ax = Mask(ax.0 & !a.iter().enumerate().filter(|(_, e)| e.is_zero()).fold(0, |m, (i, _)| m | 1 << i));
        assert_eq!(localization_mask(&a, nonzero_ax).unwrap(), ax);
        assert_eq!(localization(&a, nonzero_ax).unwrap(), a.select(ax).unwrap());
    }
}

#[test]
fn restriction_of_lifted_example() {
    let limits = Limits::default();
    let l = ElementList::from_coords(FgAbelianGroup::free(3), &[vec![2, 2, 1], vec![0, 2, 3], vec![0, 0, 4]]).unwrap();
    let (_, restricted) = restriction(&l, Mask::single(2)).unwrap();
    assert_eq!(real_char_poly(&restricted, &limits).unwrap(), IntPolynomial::from_i64(&[1, -2, 1]));
    assert_eq!(g_char_poly(&restricted, &GSpec::Cyclic(1), &limits).unwrap(), IntPolynomial::from_i64(&[1, -2, 1]));
}

#[test]
fn graphs_give_true_polynomials() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let n = rng.gen_range(1..=4usize);
        let m = rng.gen_range(0..=5usize);
        let edges = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let g = Graph::new(n, edges).unwrap();
        let f = chromatic_quasi(&graph_to_list(&g).unwrap(), &limits).unwrap();
        assert_eq!(f.minimal_period(), 1);
        for q in 1..=4 {
            assert_eq!(f.evaluate(q), BigInt::from(proper_colorings(&g, q)));
        }
    }
}
