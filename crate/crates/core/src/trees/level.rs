use alloc::vec;
use alloc::vec::Vec;

use super::ditree::{DiTree, Slot};

/// How levels must change along an edge from its leaf-side vertex `w` to its
/// root-side vertex `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    /// `level(v) < level(w)`.
    Strict,
    /// `level(v) <= level(w)`.
    Weak,
}

/// Surjective map from vertices to levels `1..=n_levels`; level 1 is on the
/// root side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelFn {
    pub tree: DiTree,
    pub levels: Vec<usize>,
    pub n_levels: usize,
}

impl LevelFn {
    /// Every directed leaf-to-root path meets a vertex at `level`.
    pub fn is_saturated_at(&self, level: usize) -> bool {
        directed_paths(&self.tree).iter().all(|p| p.iter().any(|&v| self.levels[v] == level))
    }

    pub fn is_saturated(&self) -> bool {
        (1..=self.n_levels).all(|l| self.is_saturated_at(l))
    }
}

/// Vertex sequences of all directed paths from a leaf to a root.
pub fn directed_paths(t: &DiTree) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for (vi, v) in t.vertices().iter().enumerate() {
        if v.ins.iter().any(|s| matches!(s, Slot::Leaf(_))) {
            let n_leaves = v.ins.iter().filter(|s| matches!(s, Slot::Leaf(_))).count();
            for _ in 0..n_leaves {
                walk(t, vi, &mut vec![vi], &mut out);
            }
        }
    }
    out
}

fn walk(t: &DiTree, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for s in &t.vertices()[v].outs {
        match *s {
            Slot::Root(_) => out.push(path.clone()),
            Slot::Edge(e) => {
                let w = t.edges()[e as usize].dst.0;
                path.push(w);
                walk(t, w, path, out);
                path.pop();
            }
            Slot::Leaf(_) => {}
        }
    }
}

/// All surjective monotone level functions with `n_levels` levels, keeping
/// only those saturated at every level `l` with `saturated[l-1] == true`.
pub fn level_functions(t: &DiTree, n_levels: usize, saturated: &[bool], rule: Monotonicity) -> Vec<LevelFn> {
    let nv = t.num_vertices();
    let mut out = Vec::new();
    if n_levels == 0 || nv < n_levels {
        return out;
    }
    let mut levels = vec![0usize; nv];
    fn ok(t: &DiTree, levels: &[usize], upto: usize, rule: Monotonicity) -> bool {
        t.edges().iter().all(|e| {
            let (w, v) = (e.src.0, e.dst.0);
            if w > upto || v > upto {
                return true;
            }
            match rule {
                Monotonicity::Strict => levels[v] < levels[w],
                Monotonicity::Weak => levels[v] <= levels[w],
            }
        })
    }
    fn rec(
        t: &DiTree,
        k: usize,
        n_levels: usize,
        levels: &mut Vec<usize>,
        rule: Monotonicity,
        saturated: &[bool],
        out: &mut Vec<LevelFn>,
    ) {
        if k == levels.len() {
            let mut hit = vec![false; n_levels];
            for &l in levels.iter() {
                hit[l - 1] = true;
            }
            if !hit.iter().all(|&x| x) {
                return;
            }
            let f = LevelFn { tree: t.clone(), levels: levels.clone(), n_levels };
            if saturated.iter().enumerate().all(|(i, &req)| !req || f.is_saturated_at(i + 1)) {
                out.push(f);
            }
            return;
        }
        for l in 1..=n_levels {
            levels[k] = l;
            if ok(t, levels, k, rule) {
                rec(t, k + 1, n_levels, levels, rule, saturated, out);
            }
        }
        levels[k] = 0;
    }
    rec(t, 0, n_levels, &mut levels, rule, saturated, &mut out);
    out
}
