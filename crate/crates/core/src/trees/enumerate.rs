use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::ditree::{DiTree, Slot, Vertex};

/// Which vertex shapes `(outputs, inputs)` a tree may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Profile {
    /// Every vertex has total valency at least 3.
    Reduced,
    /// Exactly the listed shapes.
    Shapes(Vec<(usize, usize)>),
    /// Vertices of weight `1..=w`.
    AllUpToWeight(usize),
}

impl Profile {
    pub fn trivalent() -> Self {
        Profile::Shapes(alloc::vec![(1, 2), (2, 1)])
    }

    pub fn allows(&self, (a, b): (usize, usize)) -> bool {
        if a == 0 || b == 0 {
            return false;
        }
        match self {
            Profile::Reduced => a + b >= 3,
            Profile::Shapes(s) => s.contains(&(a, b)),
            Profile::AllUpToWeight(w) => a + b >= 3 && a + b - 2 <= *w,
        }
    }
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x as u16);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

fn complement(n: usize, s: &[u16]) -> Vec<u16> {
    (1..=n as u16).filter(|x| !s.contains(x)).collect()
}

struct Enumerator<'a> {
    profile: &'a Profile,
    memo: HashMap<(usize, usize), Vec<DiTree>>,
}

impl Enumerator<'_> {
    fn get(&mut self, m: usize, n: usize) -> Vec<DiTree> {
        if let Some(v) = self.memo.get(&(m, n)) {
            return v.clone();
        }
        let mut set = BTreeSet::new();
        if (m, n) == (1, 1) {
            set.insert(DiTree::unit());
        } else {
            if self.profile.allows((m, n)) {
                set.insert(DiTree::corolla(m, n));
            }
            for a in 1..=m {
                for b in 1..=n {
                    if !self.profile.allows((a, b)) || a + b >= m + n {
                        continue;
                    }
                    let (mp, np) = (m + 1 - a, n + 1 - b);
                    if mp + np < 3 {
                        continue;
                    }
                    let smaller = self.get(mp, np);
                    // the new vertex hangs below a leaf of the smaller tree
                    for ls in subsets(n, b) {
                        let lrest = complement(n, &ls);
                        for rs in subsets(m, a - 1) {
                            let rrest = complement(m, &rs);
                            for t in &smaller {
                                for k in 1..=np {
                                    set.insert(attach(t, true, k, &ls, &rs, &lrest, &rrest, m, n));
                                }
                            }
                        }
                    }
                    // the new vertex sits above a root of the smaller tree
                    for ls in subsets(n, b - 1) {
                        let lrest = complement(n, &ls);
                        for rs in subsets(m, a) {
                            let rrest = complement(m, &rs);
                            for t in &smaller {
                                for k in 1..=mp {
                                    set.insert(attach(t, false, k, &ls, &rs, &lrest, &rrest, m, n));
                                }
                            }
                        }
                    }
                }
            }
        }
        let v: Vec<DiTree> = set.into_iter().collect();
        self.memo.insert((m, n), v.clone());
        v
    }
}

#[allow(clippy::too_many_arguments)]
fn attach(
    t: &DiTree,
    at_leaf: bool,
    k: usize,
    ls: &[u16],
    rs: &[u16],
    lrest: &[u16],
    rrest: &[u16],
    m: usize,
    n: usize,
) -> DiTree {
    let e = t.edges().len() as u16;
    let mut vertices: Vec<Vertex> = Vec::with_capacity(t.num_vertices() + 1);
    for v in t.vertices() {
        let map_in = |s: &Slot| match *s {
            Slot::Leaf(l) if at_leaf && l as usize == k => Slot::Edge(e),
            Slot::Leaf(l) => {
                let idx = if at_leaf && l as usize > k { l as usize - 2 } else { l as usize - 1 };
                Slot::Leaf(lrest[idx])
            }
            x => x,
        };
        let map_out = |s: &Slot| match *s {
            Slot::Root(r) if !at_leaf && r as usize == k => Slot::Edge(e),
            Slot::Root(r) => {
                let idx = if !at_leaf && r as usize > k { r as usize - 2 } else { r as usize - 1 };
                Slot::Root(rrest[idx])
            }
            x => x,
        };
        vertices.push(Vertex { outs: v.outs.iter().map(map_out).collect(), ins: v.ins.iter().map(map_in).collect() });
    }
    let mut outs: Vec<Slot> = Vec::new();
    let mut ins: Vec<Slot> = Vec::new();
    if at_leaf {
        outs.push(Slot::Edge(e));
    } else {
        ins.push(Slot::Edge(e));
    }
    outs.extend(rs.iter().map(|&r| Slot::Root(r)));
    ins.extend(ls.iter().map(|&l| Slot::Leaf(l)));
    vertices.push(Vertex { outs, ins });
    DiTree::new(m, n, vertices).expect("attachment yields a tree").canonicalize().0
}

/// Every canonical `(m,n)`-tree whose vertex shapes are allowed by `profile`,
/// sorted. For `(1,1)` this is the unit strand.
pub fn enumerate_trees(m: usize, n: usize, profile: &Profile) -> Vec<DiTree> {
    if m == 0 || n == 0 {
        return Vec::new();
    }
    let mut en = Enumerator { profile, memo: HashMap::new() };
    en.get(m, n)
}
