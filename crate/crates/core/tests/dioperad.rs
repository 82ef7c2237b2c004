mod common;

use common::*;
use diopkit_core::dioperad::*;
use diopkit_core::ratlin::Mat;
use diopkit_core::sbimod::SBimoduleSpace;
use diopkit_core::trees::DiTree;

#[test]
fn free_dims_at_weight_two() {
    let p = bilie();
    assert_eq!(free_slice(&p, 1, 3).unwrap().dim(), 3);
    assert_eq!(free_slice(&p, 3, 1).unwrap().dim(), 3);
    assert_eq!(free_slice(&p, 2, 2).unwrap().dim(), 5);
    assert_eq!(free_slice(&p, 1, 1).unwrap().dim(), 1);
    assert!(matches!(free_slice(&p, 4, 6), Err(diopkit_core::Error::WeightBoundExceeded { .. })));
}

#[test]
fn composition_examples() {
    let p = bilie();
    let e = p.generators();
    let l = g12();
    assert_eq!(FreeElement::unit().compose(1, 1, &l, e).unwrap(), l);
    assert_eq!(l.compose(2, 1, &FreeElement::unit(), e).unwrap(), l);
    let ll = l.compose(1, 1, &l, e).unwrap();
    assert_eq!(ll, FreeElement::basis(DiTree::from_text("(1,3)[r1|e0,l3][e0|l1,l2]").unwrap(), vec![0, 0]));
    assert!(l.compose(3, 1, &l, e).is_err());
    let dl = g21().compose(1, 1, &l, e).unwrap();
    assert_eq!(dl.len(), 1);
    assert_eq!(dl.arity(), (2, 2));
    // l with its inputs swapped is -l
    let sw = diopkit_core::Perm::transposition(2, 0);
    assert_eq!(l.act(&diopkit_core::Perm::identity(1), &sw, e).unwrap(), l.scale(&r(-1)));
}

#[test]
fn bilie_relation_and_quotient_dims() {
    let p = bilie();
    for slot in SLOTS {
        assert_eq!(p.relation(slot).dim(), 1, "{slot:?}");
    }
    assert_eq!(quotient_dim(&p, 1, 3).unwrap(), 2);
    assert_eq!(quotient_dim(&p, 3, 1).unwrap(), 2);
    assert_eq!(quotient_dim(&p, 2, 2).unwrap(), 4);
    assert_eq!(quotient_dim(&p, 1, 4).unwrap(), 6);
    assert_eq!(quotient_dim(&p, 1, 5).unwrap(), 24);
    assert_eq!(quotient_slice(&p, 2, 2).unwrap().dim(), 4);
}

#[test]
fn bilie_dual_is_one_dimensional() {
    let p = bilie_dual_spanning();
    assert_eq!(p.relation((1, 3)).dim(), 2);
    assert_eq!(p.relation((3, 1)).dim(), 2);
    assert_eq!(p.relation((2, 2)).dim(), 4);
    for (m, n) in arities(3) {
        assert_eq!(quotient_dim(&p, m, n).unwrap(), 1, "({m},{n})");
    }
}

#[test]
fn ideal_is_closed() {
    assert!(ideal_sweep(&bilie(), 3).unwrap());
    assert!(ideal_sweep(&bilie_dual_spanning(), 3).unwrap());
    let free = Presentation::from_subspaces(
        "free",
        SBimoduleSpace::one_dim(1, 2, false, true),
        SBimoduleSpace::one_dim(2, 1, true, false),
        Default::default(),
    )
    .unwrap();
    for (_, s) in ideal_closure(&free, 3).unwrap() {
        assert_eq!(s.dim(), 0);
    }
}

#[test]
fn quotient_projection_kills_ideal() {
    let q = quotient_slice(&bilie(), 2, 3).unwrap();
    let proj = q.projection();
    for row in q.ideal().rows() {
        assert!(proj.apply(row).is_empty());
    }
    assert_eq!(q.dim() + q.ideal().dim(), q.free().dim());
}

#[test]
fn opposite_is_involutive() {
    let p = bilie();
    let op = p.opposite().unwrap();
    assert_eq!(op.name(), "bilie^op");
    let back = op.opposite().unwrap();
    assert_eq!(back.name(), "bilie");
    for slot in SLOTS {
        assert_eq!(back.relation(slot), p.relation(slot));
    }
    assert_eq!(DimTable::of_presentation(&op, 2).unwrap(), DimTable::of_presentation(&p, 2).unwrap().opposite());
    let lie_op = DimTable::lie(3).opposite();
    assert_eq!(lie_op.get((4, 1)), Some(6));
    let mut a = DimTable::new();
    a.insert((2, 2), 4);
    let mut b = DimTable::new();
    b.insert((2, 2), 1);
    assert_eq!(a.tensor(&b).get((2, 2)), Some(4));
}

#[test]
fn lie_as_dioperad() {
    let p = lie();
    assert_eq!(DimTable::of_presentation(&p, 3).unwrap(), DimTable::lie(3));
}

#[test]
fn box_examples() {
    let lie = DimTable::lie(4);
    let com = DimTable::com(4);
    assert_eq!(box_dim(&lie, &lie.opposite(), 2, 2).unwrap(), 4);
    assert_eq!(box_dim(&com.opposite(), &com, 2, 2).unwrap(), 1);
    let unit = DimTable::unit(4);
    for (m, n) in arities(4) {
        let b = DimTable::of_presentation(&bilie(), 2).unwrap();
        if m + n - 2 > 2 {
            continue;
        }
        assert_eq!(box_dim(&b, &unit, m, n).unwrap(), b.get((m, n)).unwrap());
        assert_eq!(box_dim(&unit, &b, m, n).unwrap(), b.get((m, n)).unwrap());
    }
    assert!(box_dim(&lie, &lie, 4, 5).is_err());
}

/// Block sizes of every set partition of an `n`-set.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, blocks: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(blocks.clone());
            return;
        }
        // the smallest remaining element joins an existing block or opens one
        for k in 0..blocks.len() {
            blocks[k] += 1;
            rec(left - 1, blocks, out);
            blocks[k] -= 1;
        }
        blocks.push(1);
        rec(left - 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Sequences of `k` positive integers summing to `total`.
fn compositions(total: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(k - 1) {
        for mut rest in compositions(total - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Spanning trees of `K_{a,b}` in which the `a` side has degrees `da` and
/// the `b` side has degrees `db`.
fn bipartite_trees(da: &[usize], db: &[usize]) -> usize {
    let multi = |n: usize, parts: &[usize]| factorial(n) / parts.iter().map(|&x| factorial(x - 1)).product::<usize>();
    multi(db.len() - 1, da) * multi(da.len() - 1, db)
}

/// Oracle for the collapsed model: root blocks are level-1 vertices, leaf
/// blocks level-2 vertices, joined along a spanning tree.
fn bipartite_box(p1: &DimTable, p2: &DimTable, m: usize, n: usize) -> usize {
    let mut total = 0;
    for roots in partitions(m) {
        for leaves in partitions(n) {
            let (a, b) = (roots.len(), leaves.len());
            for da in compositions(a + b - 1, a) {
                for db in compositions(a + b - 1, b) {
                    let mut d = bipartite_trees(&da, &db);
                    for (sz, deg) in roots.iter().zip(&da) {
                        d *= p1.get((*sz, *deg)).unwrap();
                    }
                    for (sz, deg) in leaves.iter().zip(&db) {
                        d *= p2.get((*deg, *sz)).unwrap();
                    }
                    total += d;
                }
            }
        }
    }
    total
}

#[test]
fn box_matches_bipartite_formula() {
    let b = DimTable::of_presentation(&bilie(), 3).unwrap();
    let pairs = [
        (DimTable::lie(4), DimTable::lie(4).opposite()),
        (DimTable::com(4).opposite(), DimTable::com(4)),
        (b.clone(), b.opposite()),
        (DimTable::unit(4), b.clone()),
    ];
    for (p1, p2) in &pairs {
        for (m, n) in arities(3) {
            assert_eq!(box_dim(p1, p2, m, n).unwrap(), bipartite_box(p1, p2, m, n), "({m},{n})");
        }
    }
    let com = DimTable::com(4);
    for (m, n) in arities(4) {
        assert_eq!(box_dim(&com.opposite(), &com, m, n).unwrap(), 1);
    }
}

#[test]
fn endv_lie_bialgebra() {
    let p = bilie();
    let bracket = Mat::from_i64(4, &[&[0, 1, -1, 0], &[0, 0, 0, 0]]);
    let cobracket = Mat::from_i64(2, &[&[0, 0], &[0, 1], &[0, -1], &[0, 0]]);
    let alg = Algebra { dim: 2, maps: [((1, 2), vec![bracket.clone()]), ((2, 1), vec![cobracket])].into() };
    let rep = check_algebra(&p, &alg).unwrap();
    assert!(rep.is_morphism(), "{rep:?}");
    let bad = Mat::from_i64(2, &[&[1, 0], &[0, 1], &[0, -1], &[0, 0]]);
    let alg = Algebra { dim: 2, maps: [((1, 2), vec![bracket]), ((2, 1), vec![bad])].into() };
    let rep = check_algebra(&p, &alg).unwrap();
    assert!(!rep.is_morphism());
    assert_eq!(rep.violated, vec!["cojacobi".to_string(), "drinfeld".to_string()]);
    assert_eq!(rep.symmetry_violations.len(), 1);
    let zero = Algebra { dim: 3, maps: [((1, 2), vec![Mat::zeros(3, 9)]), ((2, 1), vec![Mat::zeros(9, 3)])].into() };
    assert!(check_algebra(&p, &zero).unwrap().is_morphism());
}
