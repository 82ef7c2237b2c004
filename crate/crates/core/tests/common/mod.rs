#![allow(dead_code)]

use diopkit_core::dioperad::{self, FreeElement, FreeSlice, NamedRelation, Presentation, SLOTS};
use diopkit_core::ratlin::Mat;
use diopkit_core::sbimod::{Generators, SBimoduleSpace};
use diopkit_core::{Perm, Rat};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn r(x: i64) -> Rat {
    Rat::from_int(x)
}

pub fn gens(e12: &SBimoduleSpace, e21: &SBimoduleSpace) -> Generators {
    let mut g = Generators::new();
    g.insert(e12.clone());
    g.insert(e21.clone());
    g
}

pub fn g12() -> FreeElement {
    FreeElement::generator(1, 2, 0)
}

pub fn g21() -> FreeElement {
    FreeElement::generator(2, 1, 0)
}

pub fn cyc3() -> Perm {
    Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap()
}

/// `x . s` for a permutation acting on inputs.
pub fn right(x: &FreeElement, s: &Perm, e: &Generators) -> FreeElement {
    x.act(&Perm::identity(x.arity().0), &s.inverse(), e).unwrap()
}

/// `s . x` for a permutation acting on outputs.
pub fn left(s: &Perm, x: &FreeElement, e: &Generators) -> FreeElement {
    x.act(s, &Perm::identity(x.arity().1), e).unwrap()
}

pub fn sum(xs: &[(i64, FreeElement)]) -> FreeElement {
    let (m, n) = xs[0].1.arity();
    xs.iter().fold(FreeElement::zero(m, n), |acc, (c, x)| acc.add(&x.scale(&r(*c))).unwrap())
}

pub fn rel(name: &str, x: FreeElement) -> NamedRelation {
    NamedRelation { name: name.into(), element: x }
}

/// The three relations of the Lie bialgebra dioperad, written with the
/// bracket `l` and cobracket `d`.
pub fn bilie_relations(e: &Generators) -> Vec<NamedRelation> {
    let (l, d) = (g12(), g21());
    let s = cyc3();
    let ll = l.compose(1, 1, &l, e).unwrap();
    let jacobi = sum(&[(1, ll.clone()), (1, right(&ll, &s, e)), (1, right(&ll, &s.compose(&s), e))]);
    let dd = d.compose(1, 1, &d, e).unwrap();
    let cojacobi = sum(&[(1, dd.clone()), (1, left(&s, &dd, e)), (1, left(&s.compose(&s), &dd, e))]);
    let mut terms = vec![(1, d.compose(1, 1, &l, e).unwrap())];
    for i in 1..=2 {
        for j in 1..=2 {
            terms.push((-1, l.compose(i, j, &d, e).unwrap()));
        }
    }
    vec![rel("jacobi", jacobi), rel("cojacobi", cojacobi), rel("drinfeld", sum(&terms))]
}

pub fn bilie() -> Presentation {
    let e12 = SBimoduleSpace::one_dim(1, 2, false, true);
    let e21 = SBimoduleSpace::one_dim(2, 1, true, false);
    let e = gens(&e12, &e21);
    Presentation::new("bilie", e12, e21, bilie_relations(&e)).unwrap()
}

/// The eight spanning relations of the dual, with product `m` and
/// coproduct `D`, both with trivial actions.
pub fn bilie_dual_relations(e: &Generators) -> Vec<NamedRelation> {
    let (m, dd) = (g12(), g21());
    let s = cyc3();
    let s2 = s.compose(&s);
    let mm = m.compose(1, 1, &m, e).unwrap();
    let cc = dd.compose(1, 1, &dd, e).unwrap();
    let dm = dd.compose(1, 1, &m, e).unwrap();
    let mut out = vec![
        rel("assoc1", sum(&[(1, mm.clone()), (-1, right(&mm, &s, e))])),
        rel("assoc2", sum(&[(1, mm.clone()), (-1, right(&mm, &s2, e))])),
        rel("coassoc1", sum(&[(1, cc.clone()), (-1, left(&s, &cc, e))])),
        rel("coassoc2", sum(&[(1, cc.clone()), (-1, left(&s2, &cc, e))])),
    ];
    for i in 1..=2 {
        for j in 1..=2 {
            out.push(rel(&format!("frobenius{i}{j}"), sum(&[(1, dm.clone()), (-1, m.compose(i, j, &dd, e).unwrap())])));
        }
    }
    out
}

pub fn bilie_dual_spanning() -> Presentation {
    let e12 = SBimoduleSpace::one_dim(1, 2, false, false);
    let e21 = SBimoduleSpace::one_dim(2, 1, false, false);
    let e = gens(&e12, &e21);
    Presentation::new("bilie_dual", e12, e21, bilie_dual_relations(&e)).unwrap()
}

/// Lie as a dioperad: only the bracket and the Jacobi relation.
pub fn lie() -> Presentation {
    let e12 = SBimoduleSpace::one_dim(1, 2, false, true);
    let e21 = SBimoduleSpace::zero(2, 1);
    let e = gens(&e12, &SBimoduleSpace::one_dim(2, 1, true, false));
    let rels = bilie_relations(&e).into_iter().take(1).collect();
    Presentation::new("lie", e12, e21, rels).unwrap()
}

/// One binary operation without symmetry and `(xy)z = -s x(yz)` with
/// `s = 1`, or plain associativity with `s = -1`.
pub fn one_binary(name: &str, s: i64) -> Presentation {
    let swap = diopkit_core::Mat::from_i64(2, &[&[0, 1], &[1, 0]]);
    let e12 = SBimoduleSpace::new(1, 2, 2, vec![], vec![swap], 0).unwrap();
    let e = gens(&e12, &SBimoduleSpace::one_dim(2, 1, false, false));
    let g = g12();
    let x = sum(&[(1, g.compose(1, 1, &g, &e).unwrap()), (s, g.compose(2, 1, &g, &e).unwrap())]);
    Presentation::new(name, e12, SBimoduleSpace::zero(2, 1), vec![rel("a", x)]).unwrap()
}

pub fn without_r22(p: &Presentation) -> Presentation {
    p.with_relation((2, 2), diopkit_core::Subspace::zero(p.relation((2, 2)).ambient_dim())).unwrap()
}

/// Regular representation at `(1,2)`, sign at `(2,1)`: both kinds of action.
pub fn mixed_generators() -> Generators {
    let swap = Mat::from_i64(2, &[&[0, 1], &[1, 0]]);
    let e12 = SBimoduleSpace::new(1, 2, 2, vec![], vec![swap], 0).unwrap();
    gens(&e12, &SBimoduleSpace::one_dim(2, 1, true, false))
}

const ARITIES: [(usize, usize); 7] = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1), (2, 2)];

pub fn random_element(e: &Generators, rng: &mut ChaCha8Rng) -> FreeElement {
    let (m, n) = *ARITIES.choose(rng).unwrap();
    let slice = FreeSlice::new(e, m, n);
    let mut x = FreeElement::zero(m, n);
    for _ in 0..rng.gen_range(1..=3) {
        let b = rng.gen_range(0..slice.dim());
        x = x.add(&slice.basis_element(b).scale(&r(rng.gen_range(-3..=3)))).unwrap();
    }
    if x.is_zero() {
        slice.basis_element(0)
    } else {
        x
    }
}

pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

pub fn axiom_c(e: &Generators, f: &FreeElement, g: &FreeElement, rng: &mut ChaCha8Rng) -> bool {
    let ((m1, n1), (m2, n2)) = (f.arity(), g.arity());
    let (p1, s1, p2, s2) = (random_perm(m1, rng), random_perm(n1, rng), random_perm(m2, rng), random_perm(n2, rng));
    let i = rng.gen_range(1..=n1);
    let j = rng.gen_range(1..=m2);
    dioperad::equivariance_c(e, f, g, (&p1, &s1), (&p2, &s2), i, j).unwrap()
}

pub fn random_generator(m: usize, n: usize, rng: &mut ChaCha8Rng) -> SBimoduleSpace {
    match rng.gen_range(0..10) {
        0 => SBimoduleSpace::zero(m, n),
        1 | 2 => {
            let swap = Mat::from_i64(2, &[&[0, 1], &[1, 0]]);
            if m == 1 {
                SBimoduleSpace::new(1, 2, 2, vec![], vec![swap], 0).unwrap()
            } else {
                SBimoduleSpace::new(2, 1, 2, vec![swap], vec![], 0).unwrap()
            }
        }
        _ => SBimoduleSpace::one_dim(m, n, rng.gen_bool(0.5), rng.gen_bool(0.5)),
    }
}

pub fn random_presentation(rng: &mut ChaCha8Rng) -> Presentation {
    let e12 = random_generator(1, 2, rng);
    let e21 = random_generator(2, 1, rng);
    let e = gens(&e12, &e21);
    let mut rels = Vec::new();
    for slot in SLOTS {
        let slice = FreeSlice::new(&e, slot.0, slot.1);
        if slice.dim() == 0 {
            continue;
        }
        for k in 0..rng.gen_range(0..=2) {
            let mut v = Vec::new();
            for c in 0..slice.dim() {
                let x = if rng.gen_bool(0.4) { rng.gen_range(-2..=2) } else { 0 };
                if x != 0 {
                    v.push((c, r(x)));
                }
            }
            rels.push(NamedRelation { name: format!("r{}{}_{k}", slot.0, slot.1), element: slice.from_vec(&v) });
        }
    }
    Presentation::new("random", e12, e21, rels).unwrap()
}
