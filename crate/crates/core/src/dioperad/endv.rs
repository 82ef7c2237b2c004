use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::free::FreeElement;
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::ratlin::{Mat, Rat};
use crate::trees::{DiTree, Slot};

/// Structure maps of a candidate algebra on `V = k^dim`.
///
/// `maps[(m,n)][k]` is the image of generator `k` of shape `(m,n)`: a
/// `dim^m x dim^n` matrix from `V^{⊗n}` to `V^{⊗m}`. Tensor indices are
/// flattened with the first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    pub maps: BTreeMap<(usize, usize), Vec<Mat>>,
}

/// Outcome of [`check_algebra`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    /// Generators whose maps do not intertwine the symmetric group actions.
    pub symmetry_violations: Vec<String>,
    /// Declared relations that do not evaluate to zero.
    pub violated: Vec<String>,
}

impl AlgebraReport {
    pub fn is_morphism(&self) -> bool {
        self.symmetry_violations.is_empty() && self.violated.is_empty()
    }
}

fn digits(mut x: usize, d: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for i in (0..k).rev() {
        out[i] = x % d;
        x /= d;
    }
    out
}

fn undigits(ds: &[usize], d: usize) -> usize {
    ds.iter().fold(0, |a, &x| a * d + x)
}

/// Matrix on `V^{⊗k}` exchanging factors `a` and `a+1`.
pub fn swap_factors(d: usize, k: usize, a: usize) -> Mat {
    let size = d.pow(k as u32);
    let mut rows = Vec::with_capacity(size);
    for r in 0..size {
        let mut ds = digits(r, d, k);
        ds.swap(a, a + 1);
        rows.push(vec![(undigits(&ds, d), Rat::one())]);
    }
    Mat::from_rows(size, rows).expect("permutation matrix")
}

impl Algebra {
    fn map(&self, shape: (usize, usize), k: u32) -> Result<&Mat> {
        self.maps
            .get(&shape)
            .and_then(|v| v.get(k as usize))
            .ok_or_else(|| Error::SizeMismatch(alloc::format!("no map for generator {k} of shape {shape:?}")))
    }

    /// Evaluates one decorated tree by contracting over edge indices.
    fn eval_term(&self, t: &DiTree, deco: &[u32]) -> Result<Mat> {
        let d = self.dim;
        let (m, n) = t.arity();
        let ne = t.edges().len();
        let mut out = Mat::zeros(d.pow(m as u32), d.pow(n as u32));
        if t.is_unit() {
            return Ok(Mat::identity(d));
        }
        let mats: Vec<&Mat> = (0..t.num_vertices()).map(|v| self.map(t.shape(v), deco[v])).collect::<Result<_>>()?;
        let total = m + n + ne;
        let mut acc: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for x in 0..d.pow(total as u32) {
            let ds = digits(x, d, total);
            let value = |s: &Slot| match *s {
                Slot::Root(r) => ds[r as usize - 1],
                Slot::Leaf(l) => ds[m + l as usize - 1],
                Slot::Edge(e) => ds[m + n + e as usize],
            };
            let mut prod = Rat::one();
            for (v, vx) in t.vertices().iter().enumerate() {
                let r = undigits(&vx.outs.iter().map(value).collect::<Vec<_>>(), d);
                let c = undigits(&vx.ins.iter().map(value).collect::<Vec<_>>(), d);
                prod = &prod * &mats[v].get(r, c);
                if prod.is_zero() {
                    break;
                }
            }
            if !prod.is_zero() {
                let key = (undigits(&ds[..m], d), undigits(&ds[m..m + n], d));
                let s = acc.entry(key).or_insert_with(Rat::zero);
                *s = &*s + &prod;
            }
        }
        for ((r, c), v) in acc {
            out.set(r, c, v);
        }
        Ok(out)
    }

    /// The image of `x` in `End_V`.
    pub fn evaluate(&self, x: &FreeElement) -> Result<Mat> {
        let (m, n) = x.arity();
        let mut out = Mat::zeros(self.dim.pow(m as u32), self.dim.pow(n as u32));
        for ((t, d), c) in x.terms() {
            out = out.add(&self.eval_term(t, d)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Decides whether the maps define a `p`-algebra: each generator map must be
/// equivariant and every declared relation must evaluate to zero.
pub fn check_algebra(p: &Presentation, alg: &Algebra) -> Result<AlgebraReport> {
    let d = alg.dim;
    let mut report = AlgebraReport::default();
    for space in p.generators().iter() {
        let (m, n) = space.arity();
        let maps: Vec<&Mat> = (0..space.dim() as u32).map(|k| alg.map((m, n), k)).collect::<Result<_>>()?;
        for mt in &maps {
            if mt.nrows() != d.pow(m as u32) || mt.ncols() != d.pow(n as u32) {
                return Err(Error::SizeMismatch(alloc::format!(
                    "map of shape ({m},{n}) must be {}x{}",
                    d.pow(m as u32),
                    d.pow(n as u32)
                )));
            }
        }
        let combo = |act: &Mat, k: usize| -> Result<Mat> {
            let mut acc = Mat::zeros(d.pow(m as u32), d.pow(n as u32));
            for (j, mj) in maps.iter().enumerate() {
                let c = act.get(j, k);
                if !c.is_zero() {
                    acc = acc.add(&mj.scale(&c))?;
                }
            }
            Ok(acc)
        };
        for k in 0..space.dim() {
            for (a, r) in space.right().iter().enumerate() {
                if combo(r, k)? != maps[k].mul(&swap_factors(d, n, a))? {
                    report.symmetry_violations.push(alloc::format!("generator {k} of ({m},{n}), input swap {}", a + 1));
                }
            }
            for (a, l) in space.left().iter().enumerate() {
                if combo(l, k)? != swap_factors(d, m, a).mul(maps[k])? {
                    report
                        .symmetry_violations
                        .push(alloc::format!("generator {k} of ({m},{n}), output swap {}", a + 1));
                }
            }
        }
    }
    for r in p.declared() {
        if !alg.evaluate(&r.element)?.is_zero() {
            report.violated.push(r.name.clone());
        }
    }
    Ok(report)
}
