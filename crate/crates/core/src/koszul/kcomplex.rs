use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::basis::DecoratedBasis;
use super::coop::{coop_slice, CoopSlice};
use super::quot::Quotients;
use crate::dioperad::{check_weight, FreeElement, Presentation, WEIGHT_LIMIT};
use crate::error::{Error, Result};
use crate::perm::sort_sign;
use crate::ratlin::{homology_dims, ChainComplex, Mat, Rat, SparseVec};
use crate::sbimod::{canonical_decorated, expand_tensor, Generators};
use crate::trees::{DiTree, Slot, Vertex};

/// `K P(m,n) = (P □ P^¡)(m,n)`: two-level trees with `P` on the root side
/// and `P^¡` on the leaf side, in degrees `-(m+n-2) ..= 0`.
#[derive(Clone, Debug)]
pub struct KoszulComplexSlice {
    m: usize,
    n: usize,
    /// terms by degree, lowest first
    terms: Vec<DecoratedBasis>,
    complex: ChainComplex,
}

impl KoszulComplexSlice {
    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> &[DecoratedBasis] {
        &self.terms
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn homology(&self) -> Result<BTreeMap<i32, usize>> {
        homology_dims(&self.complex)
    }

    /// Exact means zero homology everywhere, except `k` at `(1,1)`.
    pub fn is_exact(&self) -> Result<bool> {
        let h = self.homology()?;
        let expected = usize::from((self.m, self.n) == (1, 1));
        Ok(h.values().sum::<usize>() == expected)
    }
}

fn is_level_one(v: &Vertex) -> bool {
    v.outs.iter().any(|s| matches!(s, Slot::Root(_)))
}

fn set_partitions(n: usize) -> Vec<Vec<Vec<u16>>> {
    fn rec(k: usize, n: usize, cur: &mut Vec<Vec<u16>>, out: &mut Vec<Vec<Vec<u16>>>) {
        if k > n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(k as u16);
            rec(k + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![k as u16]);
        rec(k + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}

fn spanning_trees(a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, j))).collect();
    let need = a + b - 1;
    let mut out = Vec::new();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        r
    }
    fn rec(
        k: usize,
        chosen: &mut Vec<(usize, usize)>,
        edges: &[(usize, usize)],
        need: usize,
        a: usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == need {
            let mut p: Vec<usize> = (0..a + need + 1).collect();
            for &(i, j) in chosen.iter() {
                let (x, y) = (find(&mut p, i), find(&mut p, a + j));
                if x == y {
                    return;
                }
                p[x] = y;
            }
            out.push(chosen.clone());
            return;
        }
        if edges.len() - k < need - chosen.len() {
            return;
        }
        chosen.push(edges[k]);
        rec(k + 1, chosen, edges, need, a, out);
        chosen.pop();
        rec(k + 1, chosen, edges, need, a, out);
    }
    rec(0, &mut Vec::new(), &edges, need, a, &mut out);
    out
}

/// Canonical two-level skeletons of bi-arity `(m,n)`: root blocks on level
/// one, leaf blocks on level two, joined along a spanning tree.
pub fn two_level_skeletons(m: usize, n: usize) -> Vec<DiTree> {
    let mut out = BTreeSet::new();
    for roots in set_partitions(m) {
        for leaves in set_partitions(n) {
            let (a, b) = (roots.len(), leaves.len());
            for st in spanning_trees(a, b) {
                let mut vs: Vec<Vertex> = roots
                    .iter()
                    .map(|r| Vertex { outs: r.iter().map(|&x| Slot::Root(x)).collect(), ins: Vec::new() })
                    .collect();
                vs.extend(
                    leaves.iter().map(|l| Vertex { outs: Vec::new(), ins: l.iter().map(|&x| Slot::Leaf(x)).collect() }),
                );
                for (e, &(i, j)) in st.iter().enumerate() {
                    vs[i].ins.push(Slot::Edge(e as u16));
                    vs[a + j].outs.push(Slot::Edge(e as u16));
                }
                let t = DiTree::new(m, n, vs).expect("bipartite spanning tree");
                out.insert(t.canonicalize().0);
            }
        }
    }
    out.into_iter().collect()
}

/// Weight `a+b-2` of a vertex shape.
fn weight((a, b): (usize, usize)) -> usize {
    a + b - 2
}

enum KDeco {
    P(FreeElement),
    Odd { tree: DiTree, decos: Vec<u32>, ids: Vec<usize> },
    Kept { col: usize, ids: Vec<usize> },
}

struct Ctx<'a> {
    q: Quotients<'a>,
    coops: BTreeMap<(usize, usize), CoopSlice>,
}

impl<'a> Ctx<'a> {
    fn gens(&self) -> &'a Generators {
        self.q.presentation().generators()
    }

    fn coop(&mut self, shape: (usize, usize)) -> Result<&CoopSlice> {
        if !self.coops.contains_key(&shape) {
            let c = coop_slice(self.q.presentation(), shape.0, shape.1)?;
            self.coops.insert(shape, c);
        }
        Ok(&self.coops[&shape])
    }

    fn vertex_dim(&mut self, v: &Vertex) -> Result<usize> {
        if is_level_one(v) {
            self.q.dim(v.shape())
        } else {
            Ok(self.coop(v.shape())?.dim())
        }
    }
}

/// Contracts edge `e`, merging the decorations of its endpoints.
fn contract(x: &DiTree, decos: Vec<KDeco>, e: usize, gens: &Generators) -> Result<(DiTree, Vec<KDeco>, usize)> {
    let ed = x.edges()[e];
    let (dst, i0) = ed.dst;
    let (src, j0) = ed.src;
    let (raw, merged) = x.contract_raw(e)?;
    let mut slots: Vec<Option<KDeco>> = decos.into_iter().map(Some).collect();
    let lower = slots[src].take().expect("source decoration");
    let upper = slots[dst].take().expect("target decoration");
    let new = match (upper, lower) {
        (KDeco::P(a), KDeco::P(b)) => KDeco::P(a.compose(i0 + 1, j0 + 1, &b, gens)?),
        (KDeco::P(a), KDeco::Odd { tree, decos, .. }) => {
            let sv: Vec<SparseVec> = decos.iter().map(|&k| vec![(k as usize, Rat::one())]).collect();
            let b = FreeElement::from_decorated(gens, &tree, &sv)?;
            KDeco::P(a.compose(i0 + 1, j0 + 1, &b, gens)?)
        }
        (KDeco::Odd { tree: t1, decos: d1, ids: i1 }, KDeco::Odd { tree: t2, decos: d2, ids: i2 }) => KDeco::Odd {
            tree: DiTree::graft(&t1, i0 + 1, j0 + 1, &t2)?,
            decos: d1.into_iter().chain(d2).collect(),
            ids: i1.into_iter().chain(i2).collect(),
        },
        _ => return Err(Error::MalformedTree("contraction across incompatible levels".into())),
    };
    let mut new = Some(new);
    let mut out = Vec::with_capacity(slots.len() - 1);
    for (k, s) in slots.into_iter().enumerate() {
        if k == src {
            continue;
        }
        out.push(if k == dst { new.take().expect("merged decoration") } else { s.expect("untouched decoration") });
    }
    Ok((raw, out, merged))
}

type Acc = BTreeMap<(DiTree, Vec<u32>), Rat>;

/// Image of one basis element under `d`, in the free coordinates of the
/// level-two vertices.
fn differential_of(ctx: &mut Ctx, s: &DiTree, idx: &[u32], acc: &mut Acc) -> Result<()> {
    let gens = ctx.gens();
    let nv = s.num_vertices();
    let mut offsets = vec![0usize; nv];
    let mut next = 0;
    for v in 0..nv {
        if !is_level_one(&s.vertices()[v]) {
            offsets[v] = next;
            next += weight(s.shape(v));
        }
    }
    for w in 0..nv {
        let vw = &s.vertices()[w];
        if is_level_one(vw) || weight(vw.shape()) == 0 {
            continue;
        }
        let elem = ctx.coop(vw.shape())?.element(idx[w] as usize);
        for ((tau, tdeco), coef) in elem.terms() {
            for g in 0..tau.num_vertices() {
                if !tau.vertices()[g].outs.iter().all(|x| matches!(x, Slot::Root(_))) {
                    continue;
                }
                let sign1 = if (offsets[w] + g) % 2 == 0 { 1 } else { -1 };
                let x = s.substitute(w, tau)?;
                let mut decos: Vec<KDeco> = Vec::with_capacity(x.num_vertices());
                for u in 0..nv {
                    if u == w {
                        for (tv, &k) in tdeco.iter().enumerate() {
                            decos.push(KDeco::Odd {
                                tree: {
                                    let (a, b) = tau.shape(tv);
                                    DiTree::corolla(a, b)
                                },
                                decos: vec![k],
                                ids: vec![offsets[w] + tv],
                            });
                        }
                    } else if is_level_one(&s.vertices()[u]) {
                        let shape = s.shape(u);
                        decos.push(KDeco::P(ctx.q.lift(shape, &[(idx[u] as usize, Rat::one())])?));
                    } else {
                        let shape = s.shape(u);
                        let c = ctx.coop(shape)?;
                        let col = c.space().pivots()[idx[u] as usize];
                        decos.push(KDeco::Kept { col, ids: (offsets[u]..offsets[u] + weight(shape)).collect() });
                    }
                }
                let gid = offsets[w] + g;
                let (t, d) = move_down(x, decos, w + g, gens)?;
                place(ctx, &t, d, gid, Rat::from_int(sign1) * coef.clone(), acc)?;
            }
        }
    }
    Ok(())
}

/// Merges vertex `g` into the level-one vertices below it, collapses the
/// remaining level-two pieces and inserts identities on bare leaves.
fn move_down(mut x: DiTree, mut decos: Vec<KDeco>, g: usize, gens: &Generators) -> Result<(DiTree, Vec<KDeco>)> {
    let mut cur = g;
    while let Some(e) = x.vertices()[cur].outs.iter().find_map(|s| match *s {
        Slot::Edge(e) => Some(e as usize),
        _ => None,
    }) {
        let (t, d, merged) = contract(&x, decos, e, gens)?;
        x = t;
        decos = d;
        cur = merged;
    }
    loop {
        let e = x.edges().iter().position(|ed| {
            matches!(decos[ed.src.0], KDeco::Odd { .. }) && matches!(decos[ed.dst.0], KDeco::Odd { .. })
        });
        let Some(e) = e else { break };
        let shift = x.edges()[e].src.0 < cur;
        let (t, d, _) = contract(&x, decos, e, gens)?;
        x = t;
        decos = d;
        if shift {
            cur -= 1;
        }
    }
    let mut vs: Vec<Vertex> = x.vertices().to_vec();
    let mut ne = x.edges().len() as u16;
    let bare: Vec<usize> = (0..vs[cur].ins.len()).filter(|&k| matches!(vs[cur].ins[k], Slot::Leaf(_))).collect();
    if bare.is_empty() {
        return Ok((x, decos));
    }
    for k in bare {
        let leaf = vs[cur].ins[k];
        vs[cur].ins[k] = Slot::Edge(ne);
        vs.push(Vertex { outs: vec![Slot::Edge(ne)], ins: vec![leaf] });
        decos.push(KDeco::Odd { tree: DiTree::unit(), decos: Vec::new(), ids: Vec::new() });
        ne += 1;
    }
    Ok((DiTree::new(x.m(), x.n(), vs)?, decos))
}

/// Canonicalizes the result of [`move_down`] and adds it to `acc`.
fn place(ctx: &mut Ctx, x: &DiTree, decos: Vec<KDeco>, gid: usize, coef: Rat, acc: &mut Acc) -> Result<()> {
    let gens = ctx.gens();
    let c = x.canonicalize_full();
    let nv = x.num_vertices();
    let mut factors: Vec<SparseVec> = vec![Vec::new(); nv];
    let mut ids_at: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut coef = coef;
    for (r, d) in decos.into_iter().enumerate() {
        let pos = c.vertex_map[r];
        let (op, ip) = (&c.out_perm[r], &c.in_perm[r]);
        match d {
            KDeco::P(a) => {
                let a = if op.is_identity() && ip.is_identity() { a } else { a.act(op, ip, gens)? };
                factors[pos] = ctx.q.reduce(&a)?;
            }
            KDeco::Kept { col, ids } => {
                if !(op.is_identity() && ip.is_identity()) {
                    return Err(Error::MalformedTree("untouched level-two vertex was reordered".into()));
                }
                factors[pos] = vec![(col, Rat::one())];
                ids_at[pos] = ids;
            }
            KDeco::Odd { tree, decos, ids } => {
                if tree.is_unit() {
                    factors[pos] = vec![(0, Rat::one())];
                    continue;
                }
                let relabeled = tree.relabel(op, ip);
                let cc = relabeled.canonicalize_full();
                let mut new_ids = vec![0; ids.len()];
                for (v, &id) in ids.iter().enumerate() {
                    new_ids[cc.vertex_map[v]] = id;
                }
                ids_at[pos] = new_ids;
                let sv: Vec<SparseVec> = decos.iter().map(|&k| vec![(k as usize, Rat::one())]).collect();
                let (ct, terms) = canonical_decorated(gens, &relabeled, &sv)?;
                let cs = ctx.coop(ct.arity())?;
                let mut f = Vec::with_capacity(terms.len());
                for (dd, y) in terms {
                    let col = cs
                        .free()
                        .index_of(&ct, &dd)
                        .ok_or_else(|| Error::MalformedTree(alloc::format!("level-two tree {ct} not in slice")))?;
                    f.push((col, y));
                }
                factors[pos] = f;
            }
        }
    }
    let order: Vec<usize> = ids_at.into_iter().flatten().collect();
    debug_assert!(!order.contains(&gid));
    coef = coef * Rat::from_int(sort_sign(&order));
    for (d, y) in expand_tensor(&factors) {
        let key = (c.tree.clone(), d);
        let s = acc.entry(key).or_insert_with(Rat::zero);
        *s = &*s + &(&y * &coef);
    }
    Ok(())
}

/// Builds `K P(m,n)` with its differential and checks `d∘d = 0`.
pub fn koszul_slice(p: &Presentation, m: usize, n: usize) -> Result<KoszulComplexSlice> {
    check_weight(m, n, WEIGHT_LIMIT)?;
    let top = m + n - 2;
    let mut ctx = Ctx { q: Quotients::new(p), coops: BTreeMap::new() };
    let mut by_degree: Vec<Vec<(DiTree, Vec<usize>)>> = (0..=top).map(|_| Vec::new()).collect();
    for s in two_level_skeletons(m, n) {
        let lw: usize = s.vertices().iter().filter(|v| !is_level_one(v)).map(|v| weight(v.shape())).sum();
        let dims = s.vertices().iter().map(|v| ctx.vertex_dim(v)).collect::<Result<Vec<_>>>()?;
        by_degree[top - lw].push((s, dims));
    }
    let terms: Vec<DecoratedBasis> = by_degree.into_iter().map(DecoratedBasis::new).collect();
    let mut diffs = Vec::with_capacity(top);
    for k in 0..top {
        let (src, dst) = (&terms[k], &terms[k + 1]);
        let mut cols: Vec<SparseVec> = Vec::with_capacity(src.dim());
        for b in 0..src.dim() {
            let (ti, idx) = src.locate(b);
            let s = &src.trees()[ti];
            let mut acc = Acc::new();
            differential_of(&mut ctx, s, &idx, &mut acc)?;
            let mut col: BTreeMap<usize, Rat> = BTreeMap::new();
            'keys: for ((t, mut d), y) in acc {
                if y.is_zero() {
                    continue;
                }
                for (v, vx) in t.vertices().iter().enumerate() {
                    if !is_level_one(vx) {
                        match ctx.coop(vx.shape())?.row_of_pivot(d[v] as usize) {
                            Some(r) => d[v] = r as u32,
                            None => continue 'keys,
                        }
                    }
                }
                let i = dst
                    .index_of(&t, &d)
                    .ok_or_else(|| Error::MalformedTree(alloc::format!("skeleton {t} missing from the next term")))?;
                let s = col.entry(i).or_insert_with(Rat::zero);
                *s = &*s + &y;
            }
            cols.push(col.into_iter().filter(|(_, x)| !x.is_zero()).collect());
        }
        diffs.push(Mat::from_rows(dst.dim(), cols)?.transpose());
    }
    let lowest = -(top as i32);
    let dims = terms.iter().map(|t| t.dim()).collect();
    let complex = ChainComplex::new(lowest, dims, diffs)?;
    if !complex.is_differential() {
        return Err(Error::NotADifferential(alloc::format!("Koszul complex at ({m},{n})")));
    }
    Ok(KoszulComplexSlice { m, n, terms, complex })
}
