mod common;

use common::*;
use diopkit_core::dioperad::{quotient_dim, DimTable, SLOTS};
use diopkit_core::koszul::*;
use diopkit_core::sbimod::SBimoduleSpace;
use diopkit_core::Subspace;

#[test]
fn pairing_is_equivariant_for_examples() {
    assert!(pairing_is_equivariant(&bilie()).unwrap());
    assert!(pairing_is_equivariant(&bilie_dual_spanning()).unwrap());
    let reg12 = SBimoduleSpace::direct_sum(&[
        SBimoduleSpace::one_dim(1, 2, false, false),
        SBimoduleSpace::one_dim(1, 2, false, true),
    ])
    .unwrap();
    let p = diopkit_core::dioperad::Presentation::new(
        "mixed",
        reg12,
        SBimoduleSpace::one_dim(2, 1, true, false),
        Vec::new(),
    )
    .unwrap();
    assert!(pairing_is_equivariant(&p).unwrap());
}

#[test]
fn dual_of_bilie() {
    let p = bilie();
    let d = quadratic_dual(&p).unwrap();
    assert_eq!(d.name(), "bilie!");
    for s in [d.e12(), d.e21()] {
        assert!(s.left().iter().chain(s.right()).all(|m| *m == diopkit_core::Mat::identity(1)));
    }
    let dims: Vec<usize> = SLOTS.iter().map(|&s| d.relation(s).dim()).collect();
    assert_eq!(dims, vec![2, 2, 4]);
    let spanning = bilie_dual_spanning();
    for slot in SLOTS {
        assert!(spanning.relation(slot).is_subspace_of(d.relation(slot)));
        assert_eq!(spanning.relation(slot), d.relation(slot));
    }
    for r in bilie_dual_relations(d.generators()) {
        let (m, n) = r.element.arity();
        let v = d.slot_slice((m, n)).to_vec(&r.element).unwrap();
        assert!(d.relation((m, n)).contains(&v), "{} not in R-perp", r.name);
    }
    assert!(complement_dims_add_up(&p, &d));
    let dd = quadratic_dual(&d).unwrap();
    assert_eq!(dd.name(), "bilie");
    assert!(same_relations(&p, &dd));
    for (m, n) in [(1, 3), (2, 2), (3, 1), (2, 3)] {
        assert_eq!(quotient_dim(&d, m, n).unwrap(), 1);
    }
}

#[test]
fn dual_of_free_presentation_kills_weight_two() {
    let p = diopkit_core::dioperad::Presentation::new(
        "free",
        SBimoduleSpace::one_dim(1, 2, false, true),
        SBimoduleSpace::one_dim(2, 1, true, false),
        Vec::new(),
    )
    .unwrap();
    let d = quadratic_dual(&p).unwrap();
    for slot in SLOTS {
        assert_eq!(*d.relation(slot), Subspace::full(d.relation(slot).ambient_dim()));
        assert_eq!(quotient_dim(&d, slot.0, slot.1).unwrap(), 0);
    }
    let t = DimTable::of_presentation(&d, 2).unwrap();
    assert_eq!(t.get((1, 2)), Some(1));
}

#[test]
fn cobar_of_bilie() {
    let p = bilie();
    let c = cobar_slice(&p, 1, 2).unwrap();
    assert_eq!(c.complex().dims(), &[1]);
    let c = cobar_slice(&p, 1, 3).unwrap();
    assert_eq!(c.complex().lowest(), -1);
    assert_eq!(c.complex().dims(), &[2, 3]);
    let h = c.homology().unwrap();
    assert_eq!(h[&-1], 0);
    assert_eq!(h[&0], 1);
    for (m, n) in [(1, 3), (3, 1), (2, 2), (1, 4), (2, 3), (3, 2), (4, 1)] {
        let r = h0_report(&p, m, n).unwrap();
        assert!(r.holds(), "({m},{n}): {r:?}");
        assert_eq!(r.h0, 1);
        let h = cobar_slice(&p, m, n).unwrap().homology().unwrap();
        assert!(h.iter().all(|(&q, &d)| q == 0 || d == 0), "({m},{n}): {h:?}");
    }
}

#[test]
fn coop_dims_match_dual() {
    for p in [bilie(), bilie_dual_spanning(), lie()] {
        let d = quadratic_dual(&p).unwrap();
        for (m, n) in diopkit_core::dioperad::arities(3) {
            let c = coop_slice(&p, m, n).unwrap();
            assert_eq!(c.dim(), quotient_dim(&d, m, n).unwrap(), "{} at ({m},{n})", p.name());
        }
    }
}

#[test]
fn koszul_complex_of_bilie_small() {
    let p = bilie();
    let k = koszul_slice(&p, 1, 1).unwrap();
    assert_eq!(k.complex().dims(), &[1]);
    assert!(k.is_exact().unwrap());
    for (m, n) in [(1, 2), (2, 1), (1, 3), (3, 1), (2, 2)] {
        let k = koszul_slice(&p, m, n).unwrap();
        assert!(k.is_exact().unwrap(), "({m},{n})");
    }
}

#[test]
fn bilie_and_its_dual_are_koszul() {
    let p = bilie();
    let t = koszulity_check(&p, 4, true).unwrap();
    assert!(t.is_koszul());
    assert!(t.consistent());
    assert_eq!(t.get((2, 2)).unwrap().dims, vec![1, 5, 4]);
    let t = koszulity_check(&quadratic_dual(&p).unwrap(), 3, true).unwrap();
    assert!(t.is_koszul() && t.consistent());
}

#[test]
fn antiassociative_is_not_koszul() {
    let p = one_binary("antiass", 1);
    assert_eq!(quotient_dim(&p, 1, 4).unwrap(), 0);
    let t = koszulity_check(&p, 4, true).unwrap();
    assert_eq!(t.first_nonexact(), Some((1, 5)));
    assert!(t.consistent());
    let row = t.get((1, 5)).unwrap();
    assert_eq!(row.homology[&-2], 480);
    assert!(koszulity_check(&one_binary("ass", -1), 4, false).unwrap().is_koszul());
}

#[test]
fn distributive_verdicts() {
    let r = distributive_check(&bilie()).unwrap();
    assert_eq!(r.verdict, Some(Orientation::AB));
    assert_eq!(r.rows[0].dim, 4);
    assert_eq!(r.rows[0].box_dims, [4, 1]);
    assert_eq!(r.dual_holds(), Some(true));
    let r = distributive_check(&bilie_dual_spanning()).unwrap();
    assert_eq!(r.verdict, Some(Orientation::BA));
    assert_eq!(r.dual_holds(), Some(true));
    let r = distributive_check(&without_r22(&bilie())).unwrap();
    assert_eq!(r.verdict, None);
    assert_eq!(r.rows[0].dim, 5);
    assert_eq!(r.dual_holds(), None);
}

#[test]
fn bilie_without_r22_is_still_koszul() {
    let q = without_r22(&bilie());
    let d = quadratic_dual(&q).unwrap();
    assert_eq!(quotient_dim(&d, 2, 2).unwrap(), 0);
    let t = koszulity_check(&q, 3, true).unwrap();
    assert!(t.is_koszul() && t.consistent());
    assert_eq!(t.get((2, 2)).unwrap().dims, vec![0, 5, 5]);
}
