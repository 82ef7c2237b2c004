mod common;

use common::*;
use diopkit_core::dioperad::{arities, quotient_dim, Presentation, SLOTS};
use diopkit_core::koszul::*;
use diopkit_core::ratlin::{homology_dims, homology_euler, kernel, rank, Mat};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn homology_table(p: &Presentation, w: usize, op: bool) -> Vec<((usize, usize), Vec<(i32, usize)>)> {
    arities(w)
        .into_iter()
        .map(|(m, n)| {
            let (a, b) = if op { (n, m) } else { (m, n) };
            let h = koszul_slice(p, a, b).unwrap().homology().unwrap();
            ((m, n), h.into_iter().collect())
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, .. ProptestConfig::default() })]

    #[test]
    fn cobar_and_koszul_square_to_zero(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        for (m, n) in arities(3) {
            let c = cobar_slice(&p, m, n).unwrap();
            prop_assert!(c.complex().is_differential());
            let k = koszul_slice(&p, m, n).unwrap();
            prop_assert!(k.complex().is_differential());
        }
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..7, seed in any::<u64>()) {
        let mut g = rng(seed);
        let dense: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| g.gen_range(-2..=2)).collect()).collect();
        let refs: Vec<&[i64]> = dense.iter().map(|r| r.as_slice()).collect();
        let a = Mat::from_i64(cols, &refs);
        let k = kernel(&a);
        prop_assert_eq!(rank(&a) + k.dim(), cols);
        for v in k.rows() {
            prop_assert!(a.apply(v).is_empty());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 25, .. ProptestConfig::default() })]

    #[test]
    fn complement_dims_and_double_dual(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        prop_assert!(pairing_is_equivariant(&p).unwrap());
        let d = quadratic_dual(&p).unwrap();
        prop_assert!(complement_dims_add_up(&p, &d));
        for slot in SLOTS {
            prop_assert_eq!(p.relation(slot).dim() + d.relation(slot).dim(), p.relation(slot).ambient_dim());
        }
        prop_assert!(same_relations(&p, &quadratic_dual(&d).unwrap()));
    }

    #[test]
    fn euler_characteristics_match_homology(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        for (m, n) in arities(3) {
            let row = koszulity_row(&p, m, n, false).unwrap();
            prop_assert_eq!(row.euler_characteristic(), homology_euler(&row.homology));
            let c = cobar_slice(&p, m, n).unwrap();
            prop_assert_eq!(c.complex().euler_characteristic(), homology_euler(&homology_dims(c.complex()).unwrap()));
        }
    }

    #[test]
    fn h0_is_the_dual(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        for (m, n) in arities(3).into_iter().filter(|&(m, n)| m + n >= 3) {
            let r = h0_report(&p, m, n).unwrap();
            prop_assert!(r.holds(), "({}, {}): {:?}", m, n, r);
        }
    }

    #[test]
    fn coop_has_dual_dimensions(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        let d = quadratic_dual(&p).unwrap();
        for (m, n) in arities(3) {
            prop_assert_eq!(coop_slice(&p, m, n).unwrap().dim(), quotient_dim(&d, m, n).unwrap());
        }
    }

    #[test]
    fn koszul_homology_is_opposite_invariant(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        prop_assert_eq!(homology_table(&p, 3, false), homology_table(&p.opposite().unwrap(), 3, true));
    }

    #[test]
    fn weight_two_is_always_exact(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        let t = koszulity_check(&p, 2, true).unwrap();
        prop_assert!(t.is_koszul());
        prop_assert!(t.consistent());
    }

    #[test]
    fn koszul_and_cobar_agree(seed in any::<u64>()) {
        let p = random_presentation(&mut rng(seed));
        let t = koszulity_check(&p, 3, true).unwrap();
        prop_assert!(t.consistent(), "{:?}", t);
    }
}

#[test]
fn distributive_presentations_are_koszul() {
    for p in [bilie(), bilie_dual_spanning()] {
        let r = distributive_check(&p).unwrap();
        assert!(r.verdict.is_some());
        assert_eq!(r.dual_holds(), Some(true));
        assert!(koszulity_check(&p, 4, false).unwrap().is_koszul());
    }
}
