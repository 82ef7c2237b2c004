use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{parity_sign, Perm};

/// One end of a vertex: an internal edge (0-based id), a leaf or a root
/// (1-based labels).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Edge(u16),
    Leaf(u16),
    Root(u16),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub outs: Vec<Slot>,
    pub ins: Vec<Slot>,
}

impl Vertex {
    pub fn shape(&self) -> (usize, usize) {
        (self.outs.len(), self.ins.len())
    }
}

/// Internal edge from output slot `src.1` of vertex `src.0` into input slot
/// `dst.1` of vertex `dst.0`. The source is on the leaf side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: (usize, usize),
    pub dst: (usize, usize),
}

/// Directed tree with `n` labeled leaves and `m` labeled roots.
///
/// The edge list order is the orientation order used for `det(T)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiTree {
    m: usize,
    n: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

/// Result of [`DiTree::canonicalize_full`].
#[derive(Clone, Debug)]
pub struct Canonical {
    pub tree: DiTree,
    /// old vertex index -> new vertex index
    pub vertex_map: Vec<usize>,
    /// per old vertex: old output slot -> new output slot
    pub out_perm: Vec<Perm>,
    /// per old vertex: old input slot -> new input slot
    pub in_perm: Vec<Perm>,
    /// old edge index -> new edge index
    pub edge_map: Vec<usize>,
    /// parity of `edge_map`
    pub edge_sign: i64,
}

impl DiTree {
    /// The bare (1,1) strand with no vertices.
    pub fn unit() -> Self {
        DiTree { m: 1, n: 1, vertices: Vec::new(), edges: Vec::new() }
    }

    /// Single vertex with roots `1..m` and leaves `1..n` in slot order.
    pub fn corolla(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1, "corolla needs an input and an output");
        let v = Vertex {
            outs: (1..=m).map(|k| Slot::Root(k as u16)).collect(),
            ins: (1..=n).map(|k| Slot::Leaf(k as u16)).collect(),
        };
        DiTree { m, n, vertices: vec![v], edges: Vec::new() }
    }

    /// Validates the vertex list and derives the edge list from slot ids.
    pub fn new(m: usize, n: usize, vertices: Vec<Vertex>) -> Result<Self> {
        let bad = |s: &str| Err(Error::MalformedTree(s.into()));
        if vertices.is_empty() {
            return if m == 1 && n == 1 { Ok(DiTree::unit()) } else { bad("no vertices") };
        }
        let ne = vertices.len() - 1;
        let mut src = vec![None; ne];
        let mut dst = vec![None; ne];
        let mut leaves = vec![false; n];
        let mut roots = vec![false; m];
        for (vi, v) in vertices.iter().enumerate() {
            if v.outs.is_empty() || v.ins.is_empty() {
                return bad("vertex without input or output");
            }
            for (si, s) in v.outs.iter().enumerate() {
                match *s {
                    Slot::Edge(e) if (e as usize) < ne && src[e as usize].is_none() => src[e as usize] = Some((vi, si)),
                    Slot::Root(r) if r >= 1 && (r as usize) <= m && !roots[r as usize - 1] => {
                        roots[r as usize - 1] = true
                    }
                    _ => return bad("bad output slot"),
                }
            }
            for (si, s) in v.ins.iter().enumerate() {
                match *s {
                    Slot::Edge(e) if (e as usize) < ne && dst[e as usize].is_none() => dst[e as usize] = Some((vi, si)),
                    Slot::Leaf(l) if l >= 1 && (l as usize) <= n && !leaves[l as usize - 1] => {
                        leaves[l as usize - 1] = true
                    }
                    _ => return bad("bad input slot"),
                }
            }
        }
        if !leaves.iter().all(|&x| x) || !roots.iter().all(|&x| x) {
            return bad("missing leaf or root label");
        }
        let mut edges = Vec::with_capacity(ne);
        for e in 0..ne {
            match (src[e], dst[e]) {
                (Some(s), Some(d)) => edges.push(Edge { src: s, dst: d }),
                _ => return bad("dangling edge"),
            }
        }
        let t = DiTree { m, n, vertices, edges };
        if !t.connected() {
            return bad("not connected");
        }
        Ok(t)
    }

    fn connected(&self) -> bool {
        let nv = self.vertices.len();
        let mut seen = vec![false; nv];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&x| x)
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let vx = &self.vertices[v];
        vx.outs.iter().chain(vx.ins.iter()).filter_map(move |s| match *s {
            Slot::Edge(e) => {
                let ed = self.edges[e as usize];
                Some(if ed.src.0 == v { ed.dst.0 } else { ed.src.0 })
            }
            _ => None,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_unit(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `m + n - 2`.
    pub fn weight(&self) -> usize {
        self.m + self.n - 2
    }

    pub fn shape(&self, v: usize) -> (usize, usize) {
        self.vertices[v].shape()
    }

    /// Vertex and input slot holding leaf `l`.
    pub fn leaf_position(&self, l: usize) -> Option<(usize, usize)> {
        self.find_slot(Slot::Leaf(l as u16), false)
    }

    /// Vertex and output slot holding root `r`.
    pub fn root_position(&self, r: usize) -> Option<(usize, usize)> {
        self.find_slot(Slot::Root(r as u16), true)
    }

    fn find_slot(&self, s: Slot, out: bool) -> Option<(usize, usize)> {
        self.vertices.iter().enumerate().find_map(|(vi, v)| {
            let list = if out { &v.outs } else { &v.ins };
            list.iter().position(|x| *x == s).map(|si| (vi, si))
        })
    }

    /// Relabels roots `k -> pi(k)` and leaves `k -> sigma(k)` (1-based labels,
    /// 0-based permutations). The result is not canonicalized.
    pub fn relabel(&self, pi: &Perm, sigma: &Perm) -> DiTree {
        assert!(pi.len() == self.m && sigma.len() == self.n, "permutation sizes");
        if self.is_unit() {
            return self.clone();
        }
        let map = |s: &Slot| match *s {
            Slot::Leaf(l) => Slot::Leaf(sigma.apply(l as usize - 1) as u16 + 1),
            Slot::Root(r) => Slot::Root(pi.apply(r as usize - 1) as u16 + 1),
            e => e,
        };
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { outs: v.outs.iter().map(map).collect(), ins: v.ins.iter().map(map).collect() })
            .collect();
        DiTree { m: self.m, n: self.n, vertices, edges: self.edges.clone() }
    }

    /// The opposite tree: every edge reversed, leaves and roots exchanged.
    pub fn reverse(&self) -> DiTree {
        let flip = |s: &Slot| match *s {
            Slot::Leaf(l) => Slot::Root(l),
            Slot::Root(r) => Slot::Leaf(r),
            e => e,
        };
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { outs: v.ins.iter().map(flip).collect(), ins: v.outs.iter().map(flip).collect() })
            .collect();
        let edges = self.edges.iter().map(|e| Edge { src: e.dst, dst: e.src }).collect();
        DiTree { m: self.n, n: self.m, vertices, edges }
    }

    /// Reorders the edge list by `order` (new position -> old edge id).
    pub fn with_edge_order(&self, order: &[usize]) -> Result<DiTree> {
        if order.len() != self.edges.len() {
            return Err(Error::SizeMismatch("edge order length".into()));
        }
        let mut new_id = vec![usize::MAX; order.len()];
        for (k, &e) in order.iter().enumerate() {
            if e >= order.len() || new_id[e] != usize::MAX {
                return Err(Error::MalformedTree("edge order is not a permutation".into()));
            }
            new_id[e] = k;
        }
        let map = |s: &Slot| match *s {
            Slot::Edge(e) => Slot::Edge(new_id[e as usize] as u16),
            x => x,
        };
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { outs: v.outs.iter().map(map).collect(), ins: v.ins.iter().map(map).collect() })
            .collect();
        let edges = order.iter().map(|&e| self.edges[e]).collect();
        Ok(DiTree { m: self.m, n: self.n, vertices, edges })
    }

    /// Smallest label of the given kind in the component of `start` once
    /// edge `cut` is removed.
    fn branch_min(&self, start: usize, cut: usize, roots: bool) -> u16 {
        let mut best = u16::MAX;
        let mut stack = vec![(start, cut)];
        while let Some((v, from)) = stack.pop() {
            let vx = &self.vertices[v];
            for s in vx.outs.iter().chain(vx.ins.iter()) {
                match *s {
                    Slot::Root(r) if roots => best = best.min(r),
                    Slot::Leaf(l) if !roots => best = best.min(l),
                    Slot::Edge(e) if e as usize != from => {
                        let ed = self.edges[e as usize];
                        let w = if ed.src.0 == v { ed.dst.0 } else { ed.src.0 };
                        stack.push((w, e as usize));
                    }
                    _ => {}
                }
            }
        }
        best
    }

    /// Sort key of a slot: smallest root (output side) or leaf (input side)
    /// label reachable across it.
    fn slot_key(&self, v: usize, s: Slot, out: bool) -> u16 {
        match s {
            Slot::Root(r) => r,
            Slot::Leaf(l) => l,
            Slot::Edge(e) => {
                let ed = self.edges[e as usize];
                if out {
                    self.branch_min(ed.dst.0, e as usize, true)
                } else {
                    debug_assert_eq!(ed.dst.0, v);
                    self.branch_min(ed.src.0, e as usize, false)
                }
            }
        }
    }

    /// Canonical form with the full bookkeeping of the reordering.
    ///
    /// Slots at each vertex are sorted by the smallest label across them;
    /// vertices are numbered in depth-first preorder from the vertex carrying
    /// root 1, visiting output slots and then input slots in order; edges are
    /// numbered in discovery order.
    pub fn canonicalize_full(&self) -> Canonical {
        let nv = self.vertices.len();
        if nv == 0 {
            return Canonical {
                tree: self.clone(),
                vertex_map: Vec::new(),
                out_perm: Vec::new(),
                in_perm: Vec::new(),
                edge_map: Vec::new(),
                edge_sign: 1,
            };
        }
        let mut out_order: Vec<Vec<usize>> = Vec::with_capacity(nv);
        let mut in_order: Vec<Vec<usize>> = Vec::with_capacity(nv);
        for (vi, v) in self.vertices.iter().enumerate() {
            let mut o: Vec<(u16, usize)> =
                v.outs.iter().enumerate().map(|(k, s)| (self.slot_key(vi, *s, true), k)).collect();
            o.sort();
            out_order.push(o.into_iter().map(|x| x.1).collect());
            let mut i: Vec<(u16, usize)> =
                v.ins.iter().enumerate().map(|(k, s)| (self.slot_key(vi, *s, false), k)).collect();
            i.sort();
            in_order.push(i.into_iter().map(|x| x.1).collect());
        }
        let start = self.root_position(1).expect("root 1").0;
        let mut vertex_map = vec![usize::MAX; nv];
        let mut edge_map = vec![usize::MAX; self.edges.len()];
        let mut order = Vec::with_capacity(nv);
        let mut next_edge = 0;
        // explicit stack of (vertex, position in its slot sequence)
        vertex_map[start] = 0;
        order.push(start);
        let mut stack = vec![(start, 0usize)];
        while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
            let no = out_order[v].len();
            let total = no + in_order[v].len();
            if *pos == total {
                stack.pop();
                continue;
            }
            let k = *pos;
            *pos += 1;
            let s =
                if k < no { self.vertices[v].outs[out_order[v][k]] } else { self.vertices[v].ins[in_order[v][k - no]] };
            if let Slot::Edge(e) = s {
                let e = e as usize;
                if edge_map[e] == usize::MAX {
                    edge_map[e] = next_edge;
                    next_edge += 1;
                    let ed = self.edges[e];
                    let w = if ed.src.0 == v { ed.dst.0 } else { ed.src.0 };
                    vertex_map[w] = order.len();
                    order.push(w);
                    stack.push((w, 0));
                }
            }
        }
        let mut vertices = Vec::with_capacity(nv);
        for &v in &order {
            let vx = &self.vertices[v];
            let remap = |s: Slot| match s {
                Slot::Edge(e) => Slot::Edge(edge_map[e as usize] as u16),
                x => x,
            };
            vertices.push(Vertex {
                outs: out_order[v].iter().map(|&k| remap(vx.outs[k])).collect(),
                ins: in_order[v].iter().map(|&k| remap(vx.ins[k])).collect(),
            });
        }
        let inv_slots = |ord: &Vec<usize>| {
            let mut p = vec![0; ord.len()];
            for (new, &old) in ord.iter().enumerate() {
                p[old] = new;
            }
            Perm::from_images(p).expect("slot order is a permutation")
        };
        let out_perm: Vec<Perm> = out_order.iter().map(inv_slots).collect();
        let in_perm: Vec<Perm> = in_order.iter().map(inv_slots).collect();
        let mut edges = vec![Edge { src: (0, 0), dst: (0, 0) }; self.edges.len()];
        for (e, ed) in self.edges.iter().enumerate() {
            edges[edge_map[e]] = Edge {
                src: (vertex_map[ed.src.0], out_perm[ed.src.0].apply(ed.src.1)),
                dst: (vertex_map[ed.dst.0], in_perm[ed.dst.0].apply(ed.dst.1)),
            };
        }
        let edge_sign = parity_sign(&edge_map);
        Canonical {
            tree: DiTree { m: self.m, n: self.n, vertices, edges },
            vertex_map,
            out_perm,
            in_perm,
            edge_map,
            edge_sign,
        }
    }

    /// Canonical form and the parity of the induced edge reordering.
    pub fn canonicalize(&self) -> (DiTree, i64) {
        let c = self.canonicalize_full();
        (c.tree, c.edge_sign)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize().0 == *self
    }

    /// Joins output `j` of `t2` to input `i` of `t1` (both 1-based).
    ///
    /// Leaves of the result are `[t1: 1..i-1][t2: 1..n2][t1: i+1..n1]` and
    /// roots are `[t2: 1..j-1][t1: 1..m1][t2: j+1..m2]`. Vertices of `t1`
    /// come first, then those of `t2`; edges likewise, and the new edge is
    /// last. The result is not canonicalized.
    pub fn graft(t1: &DiTree, i: usize, j: usize, t2: &DiTree) -> Result<DiTree> {
        let (m1, n1) = t1.arity();
        let (m2, n2) = t2.arity();
        if i == 0 || i > n1 || j == 0 || j > m2 {
            return Err(Error::IndexOutOfRange(alloc::format!("graft at ({i},{j}) of ({m1},{n1}) and ({m2},{n2})")));
        }
        if t1.is_unit() {
            return Ok(t2.clone());
        }
        if t2.is_unit() {
            return Ok(t1.clone());
        }
        let new_e = (t1.edges.len() + t2.edges.len()) as u16;
        let off_e = t1.edges.len() as u16;
        let off_v = t1.vertices.len();
        let map1 = |s: &Slot| match *s {
            Slot::Leaf(l) if l as usize == i => Slot::Edge(new_e),
            Slot::Leaf(l) if (l as usize) < i => Slot::Leaf(l),
            Slot::Leaf(l) => Slot::Leaf(l + n2 as u16 - 1),
            Slot::Root(r) => Slot::Root(r + j as u16 - 1),
            e => e,
        };
        let map2 = |s: &Slot| match *s {
            Slot::Root(r) if r as usize == j => Slot::Edge(new_e),
            Slot::Root(r) if (r as usize) < j => Slot::Root(r),
            Slot::Root(r) => Slot::Root(r + m1 as u16 - 1),
            Slot::Leaf(l) => Slot::Leaf(l + i as u16 - 1),
            Slot::Edge(e) => Slot::Edge(e + off_e),
        };
        let mut vertices: Vec<Vertex> = t1
            .vertices
            .iter()
            .map(|v| Vertex { outs: v.outs.iter().map(map1).collect(), ins: v.ins.iter().map(map1).collect() })
            .collect();
        vertices.extend(
            t2.vertices
                .iter()
                .map(|v| Vertex { outs: v.outs.iter().map(map2).collect(), ins: v.ins.iter().map(map2).collect() }),
        );
        let mut edges = t1.edges.clone();
        edges
            .extend(t2.edges.iter().map(|e| Edge { src: (e.src.0 + off_v, e.src.1), dst: (e.dst.0 + off_v, e.dst.1) }));
        let (v1, s1) = t1.leaf_position(i).expect("leaf i");
        let (v2, s2) = t2.root_position(j).expect("root j");
        edges.push(Edge { src: (v2 + off_v, s2), dst: (v1, s1) });
        Ok(DiTree { m: m1 + m2 - 1, n: n1 + n2 - 1, vertices, edges })
    }

    /// Contracts internal edge `e` without canonicalizing.
    ///
    /// The merged vertex replaces the root-side endpoint; its slots follow
    /// the composition convention of [`DiTree::graft`]: inputs
    /// `[dst ins before e][src ins][dst ins after e]`, outputs
    /// `[src outs before e][dst outs][src outs after e]`. Remaining edges keep
    /// their relative order. Returns the tree and the merged vertex index.
    pub fn contract_raw(&self, e: usize) -> Result<(DiTree, usize)> {
        if e >= self.edges.len() {
            return Err(Error::IndexOutOfRange(alloc::format!("edge {e} of {}", self.edges.len())));
        }
        let Edge { src: (w, j), dst: (v, i) } = self.edges[e];
        let renum = |s: Slot| match s {
            Slot::Edge(x) if (x as usize) > e => Slot::Edge(x - 1),
            x => x,
        };
        let vv = &self.vertices[v];
        let ww = &self.vertices[w];
        let mut ins: Vec<Slot> = vv.ins[..i].to_vec();
        ins.extend(ww.ins.iter().copied());
        ins.extend(vv.ins[i + 1..].iter().copied());
        let mut outs: Vec<Slot> = ww.outs[..j].to_vec();
        outs.extend(vv.outs.iter().copied());
        outs.extend(ww.outs[j + 1..].iter().copied());
        let merged = Vertex { outs: outs.into_iter().map(renum).collect(), ins: ins.into_iter().map(renum).collect() };
        let mut vertices = Vec::with_capacity(self.vertices.len() - 1);
        let mut merged_id = 0;
        for (k, x) in self.vertices.iter().enumerate() {
            if k == w {
                continue;
            }
            if k == v {
                merged_id = vertices.len();
                vertices.push(merged.clone());
            } else {
                vertices.push(Vertex {
                    outs: x.outs.iter().map(|s| renum(*s)).collect(),
                    ins: x.ins.iter().map(|s| renum(*s)).collect(),
                });
            }
        }
        let t = DiTree::new(self.m, self.n, vertices)?;
        Ok((t, merged_id))
    }

    /// Contracts `e` and canonicalizes. The sign is `(-1)^{position of e}`
    /// times the parity of the reordering of the remaining edges.
    pub fn contract_edge(&self, e: usize) -> Result<(DiTree, usize, i64)> {
        let (t, merged) = self.contract_raw(e)?;
        let c = t.canonicalize_full();
        let sign = if e % 2 == 0 { 1 } else { -1 } * c.edge_sign;
        Ok((c.tree, c.vertex_map[merged], sign))
    }

    /// Replaces vertex `v` by `inner`, whose leaves and roots are matched with
    /// the input and output slots of `v` in order. Vertices of `inner` take
    /// the place of `v`; the edges of `inner` are appended after the outer
    /// edges. Not canonicalized.
    pub fn substitute(&self, v: usize, inner: &DiTree) -> Result<DiTree> {
        let (a, b) = self.shape(v);
        if inner.arity() != (a, b) {
            return Err(Error::SizeMismatch(alloc::format!(
                "substituting ({},{}) into a ({a},{b}) vertex",
                inner.m,
                inner.n
            )));
        }
        if inner.is_unit() {
            return Err(Error::MalformedTree("cannot substitute the unit strand".into()));
        }
        let vx = &self.vertices[v];
        let ne = self.edges.len() as u16;
        let k = inner.vertices.len();
        let mut vertices: Vec<Vertex> = Vec::with_capacity(self.vertices.len() + k - 1);
        for (vi, x) in self.vertices.iter().enumerate() {
            if vi == v {
                for iv in &inner.vertices {
                    let map = |s: &Slot| match *s {
                        Slot::Edge(e) => Slot::Edge(e + ne),
                        Slot::Leaf(l) => vx.ins[l as usize - 1],
                        Slot::Root(r) => vx.outs[r as usize - 1],
                    };
                    vertices.push(Vertex {
                        outs: iv.outs.iter().map(map).collect(),
                        ins: iv.ins.iter().map(map).collect(),
                    });
                }
            } else {
                vertices.push(x.clone());
            }
        }
        DiTree::new(self.m, self.n, vertices)
    }

    /// Deterministic text form, e.g. `(1,3)[r1|e0,l3][e0|l1,l2]`.
    pub fn to_text(&self) -> String {
        let mut s = alloc::format!("({},{})", self.m, self.n);
        let put = |s: &mut String, x: &Slot| match *x {
            Slot::Edge(e) => s.push_str(&alloc::format!("e{e}")),
            Slot::Leaf(l) => s.push_str(&alloc::format!("l{l}")),
            Slot::Root(r) => s.push_str(&alloc::format!("r{r}")),
        };
        for v in &self.vertices {
            s.push('[');
            for (k, x) in v.outs.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                put(&mut s, x);
            }
            s.push('|');
            for (k, x) in v.ins.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                put(&mut s, x);
            }
            s.push(']');
        }
        s
    }

    /// Parses [`DiTree::to_text`] output. Edge ids fix the edge order.
    pub fn from_text(text: &str) -> Result<DiTree> {
        let err = || Error::Parse(alloc::format!("bad tree text `{text}`"));
        let text = text.trim();
        let close = text.find(')').ok_or_else(err)?;
        let head = text.get(1..close).ok_or_else(err)?;
        let (m, n) = head.split_once(',').ok_or_else(err)?;
        let m: usize = m.trim().parse().map_err(|_| err())?;
        let n: usize = n.trim().parse().map_err(|_| err())?;
        let mut vertices = Vec::new();
        let mut rest = &text[close + 1..];
        while !rest.is_empty() {
            if !rest.starts_with('[') {
                return Err(err());
            }
            let end = rest.find(']').ok_or_else(err)?;
            let body = &rest[1..end];
            let (o, i) = body.split_once('|').ok_or_else(err)?;
            let parse_list = |l: &str| -> Result<Vec<Slot>> {
                l.split(',')
                    .map(|tok| {
                        let tok = tok.trim();
                        let num: u16 = tok.get(1..).and_then(|x| x.parse().ok()).ok_or_else(err)?;
                        match tok.as_bytes().first() {
                            Some(b'e') => Ok(Slot::Edge(num)),
                            Some(b'l') => Ok(Slot::Leaf(num)),
                            Some(b'r') => Ok(Slot::Root(num)),
                            _ => Err(err()),
                        }
                    })
                    .collect()
            };
            vertices.push(Vertex { outs: parse_list(o)?, ins: parse_list(i)? });
            rest = &rest[end + 1..];
        }
        DiTree::new(m, n, vertices)
    }
}

impl fmt::Debug for DiTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for DiTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
