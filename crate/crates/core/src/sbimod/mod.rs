//! Symmetric-group bimodules, decorated tree spaces and twists.

mod decorated;
mod space;

pub use decorated::{
    canonical_decorated, decorated_space, expand_tensor, flatten, relabel_action, unflatten, DecoratedSpace, Generators,
};
pub use space::{SBimoduleSpace, TwistKind};

#[cfg(test)]
mod tests {
    use alloc::vec;
    use alloc::vec::Vec;

    use super::*;
    use crate::perm::Perm;
    use crate::ratlin::{Mat, Rat};
    use crate::trees::{enumerate_trees, DiTree, Profile};

    fn bracket() -> SBimoduleSpace {
        SBimoduleSpace::one_dim(1, 2, false, true)
    }

    fn lie_bialgebra_gens() -> Generators {
        let mut e = Generators::new();
        e.insert(bracket());
        e.insert(SBimoduleSpace::one_dim(2, 1, true, false));
        e
    }

    #[test]
    fn action_signs() {
        let l = bracket();
        let s = Perm::transposition(2, 0);
        assert_eq!(l.action(&Perm::identity(1), &s).unwrap(), Mat::from_i64(1, &[&[-1]]));
        let m = SBimoduleSpace::one_dim(1, 2, false, false);
        assert_eq!(m.action(&Perm::identity(1), &s).unwrap(), Mat::identity(1));
        let reg = SBimoduleSpace::new(1, 2, 2, vec![], vec![Mat::from_i64(2, &[&[0, 1], &[1, 0]])], 0).unwrap();
        assert_eq!(reg.action(&Perm::identity(1), &s).unwrap(), Mat::from_i64(2, &[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn invalid_actions() {
        let bad = Mat::from_i64(1, &[&[2]]);
        assert!(SBimoduleSpace::new(1, 2, 1, vec![], vec![bad], 0).is_err());
        assert!(SBimoduleSpace::new(1, 2, 1, vec![], vec![], 0).is_err());
        let a = Mat::from_i64(2, &[&[0, 1], &[1, 0]]);
        let b = Mat::from_i64(2, &[&[1, 0], &[0, -1]]);
        assert!(SBimoduleSpace::new(1, 3, 2, vec![], vec![a, b], 0).is_err());
    }

    #[test]
    fn action_is_a_homomorphism() {
        let reg = SBimoduleSpace::new(
            1,
            3,
            2,
            vec![],
            vec![Mat::from_i64(2, &[&[-1, 1], &[0, 1]]), Mat::from_i64(2, &[&[1, 0], &[1, -1]])],
            0,
        )
        .unwrap();
        let id = Perm::identity(1);
        let ps: Vec<Perm> = (0..6)
            .map(|k| {
                let mut p = Perm::identity(3);
                for i in 0..k {
                    p = p.compose(&Perm::transposition(3, i % 2));
                }
                p
            })
            .collect();
        for p in &ps {
            for q in &ps {
                let lhs = reg.action(&id, &p.compose(q)).unwrap();
                let rhs = reg.action(&id, p).unwrap().mul(&reg.action(&id, q).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn twists() {
        let l = bracket();
        assert_eq!(l.twist(TwistKind::Vee).twist(TwistKind::Vee), l);
        assert_eq!(l.twist(TwistKind::DualStar).twist(TwistKind::DualStar), l);
        let v = l.twist(TwistKind::Vee);
        assert_eq!(v.right()[0], Mat::identity(1));
        assert_eq!(l.twist(TwistKind::Lambda).degree(), 1);
        assert_eq!(l.twist(TwistKind::Sigma).degree(), 1);
        assert_eq!(l.twist(TwistKind::SigmaInv).degree(), -1);
        let s = l.twist(TwistKind::Sigma).twist(TwistKind::SigmaInv);
        assert_eq!(s.right(), l.right());
        assert_eq!(s.degree(), 0);
        assert_eq!(l.opposite().opposite(), l);
        assert_eq!(l.opposite().arity(), (2, 1));
        let t = l.tensor(&l).unwrap();
        assert_eq!(t.right()[0], Mat::identity(1));
        let d = SBimoduleSpace::direct_sum(&[l.clone(), SBimoduleSpace::one_dim(1, 2, false, false)]).unwrap();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.right()[0].get(0, 0), Rat::from_int(-1));
    }

    #[test]
    fn flatten_roundtrip() {
        let dims = [2, 3, 1, 4];
        for k in 0..24 {
            assert_eq!(flatten(&dims, &unflatten(&dims, k)), k);
        }
        assert_eq!(
            expand_tensor(&[vec![(0, Rat::one()), (1, Rat::from_int(2))], vec![(2, Rat::from_int(3))]]).len(),
            2
        );
    }

    #[test]
    fn relabel_action_sign() {
        let e = lie_bialgebra_gens();
        let d = decorated_space(&e, &DiTree::corolla(1, 2));
        let (t, m) = relabel_action(&e, &d, &Perm::identity(1), &Perm::transposition(2, 0)).unwrap();
        assert_eq!(t.tree, DiTree::corolla(1, 2));
        assert_eq!(m, Mat::from_i64(1, &[&[-1]]));
    }

    #[test]
    fn relabel_action_is_functorial() {
        let e = lie_bialgebra_gens();
        let p = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let q = Perm::from_cycles(3, &[vec![1, 3]]).unwrap();
        let s = Perm::transposition(2, 0);
        for t in enumerate_trees(2, 3, &Profile::trivalent()) {
            let d = decorated_space(&e, &t);
            let (d1, a) = relabel_action(&e, &d, &s, &p).unwrap();
            let (d2, b) = relabel_action(&e, &d1, &s, &q).unwrap();
            let (d3, c) = relabel_action(&e, &d, &Perm::identity(2), &q.compose(&p)).unwrap();
            assert_eq!(d2, d3);
            assert_eq!(b.mul(&a).unwrap(), c);
        }
    }
}
