use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ratlin::{Mat, Rat};

/// Twists of a bimodule by duals, sign characters and (sheared) suspensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistKind {
    DualStar,
    Vee,
    Sigma,
    SigmaInv,
    Lambda,
    LambdaInv,
}

/// Finite-dimensional `(S_m, S_n)`-bimodule given by the matrices of the
/// adjacent transpositions on both sides.
///
/// `left[i]` is the action of `s_i` on outputs, `right[i]` the action of
/// `s_i` on inputs (`x -> x . s_i`). Matrices act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SBimoduleSpace {
    m: usize,
    n: usize,
    dim: usize,
    left: Vec<Mat>,
    right: Vec<Mat>,
    degree: i32,
}

fn check_group(mats: &[Mat], dim: usize, side: &str) -> Result<()> {
    let id = Mat::identity(dim);
    let bad = |what: &str| Err(Error::InvalidAction(alloc::format!("{side} action: {what}")));
    for m in mats {
        if m.nrows() != dim || m.ncols() != dim {
            return bad("matrix of the wrong size");
        }
        if m.mul(m)? != id {
            return bad("transposition matrix is not an involution");
        }
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let (a, b) = (&mats[i], &mats[j]);
            if j == i + 1 {
                if a.mul(b)?.mul(a)? != b.mul(a)?.mul(b)? {
                    return bad("braid relation fails");
                }
            } else if a.mul(b)? != b.mul(a)? {
                return bad("distant transpositions do not commute");
            }
        }
    }
    Ok(())
}

impl SBimoduleSpace {
    pub fn new(m: usize, n: usize, dim: usize, left: Vec<Mat>, right: Vec<Mat>, degree: i32) -> Result<Self> {
        if left.len() != m.saturating_sub(1) || right.len() != n.saturating_sub(1) {
            return Err(Error::InvalidAction(alloc::format!(
                "({m},{n}) needs {} left and {} right transposition matrices",
                m.saturating_sub(1),
                n.saturating_sub(1)
            )));
        }
        check_group(&left, dim, "left")?;
        check_group(&right, dim, "right")?;
        for a in &left {
            for b in &right {
                if a.mul(b)? != b.mul(a)? {
                    return Err(Error::InvalidAction("left and right actions do not commute".into()));
                }
            }
        }
        Ok(SBimoduleSpace { m, n, dim, left, right, degree })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        SBimoduleSpace {
            m,
            n,
            dim: 0,
            left: alloc::vec![Mat::zeros(0, 0); m.saturating_sub(1)],
            right: alloc::vec![Mat::zeros(0, 0); n.saturating_sub(1)],
            degree: 0,
        }
    }

    /// One-dimensional space with trivial or sign action on each side.
    pub fn one_dim(m: usize, n: usize, left_sign: bool, right_sign: bool) -> Self {
        let s = |neg: bool| Mat::identity(1).scale(&Rat::from_int(if neg { -1 } else { 1 }));
        SBimoduleSpace {
            m,
            n,
            dim: 1,
            left: alloc::vec![s(left_sign); m.saturating_sub(1)],
            right: alloc::vec![s(right_sign); n.saturating_sub(1)],
            degree: 0,
        }
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn left(&self) -> &[Mat] {
        &self.left
    }

    pub fn right(&self) -> &[Mat] {
        &self.right
    }

    /// Matrix of `x -> pi . x . sigma^{-1}`; a homomorphism of `S_m x S_n`.
    pub fn action(&self, pi: &Perm, sigma: &Perm) -> Result<Mat> {
        if pi.len() != self.m || sigma.len() != self.n {
            return Err(Error::SizeMismatch(alloc::format!(
                "permutations of sizes ({},{}) on a ({},{}) space",
                pi.len(),
                sigma.len(),
                self.m,
                self.n
            )));
        }
        let mut out = Mat::identity(self.dim);
        for a in pi.adjacent_factorization() {
            out = out.mul(&self.left[a])?;
        }
        for a in sigma.adjacent_factorization() {
            out = out.mul(&self.right[a])?;
        }
        Ok(out)
    }

    pub fn is_identity_action(&self, pi: &Perm, sigma: &Perm) -> bool {
        pi.adjacent_factorization().is_empty() && sigma.adjacent_factorization().is_empty()
    }

    pub fn twist(&self, k: TwistKind) -> SBimoduleSpace {
        let neg = Rat::from_int(-1);
        let (m, n) = (self.m as i32, self.n as i32);
        let dual = |ms: &[Mat], sign: bool| -> Vec<Mat> {
            ms.iter().map(|x| if sign { x.transpose().scale(&neg) } else { x.transpose() }).collect()
        };
        let signed = |ms: &[Mat]| -> Vec<Mat> { ms.iter().map(|x| x.scale(&neg)).collect() };
        let (left, right, degree) = match k {
            TwistKind::DualStar => (dual(&self.left, false), dual(&self.right, false), -self.degree),
            TwistKind::Vee => (dual(&self.left, true), dual(&self.right, true), -self.degree),
            TwistKind::Sigma => (signed(&self.left), signed(&self.right), self.degree + n - m),
            TwistKind::SigmaInv => (signed(&self.left), signed(&self.right), self.degree + m - n),
            TwistKind::Lambda => (signed(&self.left), signed(&self.right), self.degree + m + n - 2),
            TwistKind::LambdaInv => (signed(&self.left), signed(&self.right), self.degree + 2 - m - n),
        };
        SBimoduleSpace { m: self.m, n: self.n, dim: self.dim, left, right, degree }
    }

    /// Block-diagonal sum of spaces of the same arity.
    pub fn direct_sum(parts: &[SBimoduleSpace]) -> Result<SBimoduleSpace> {
        let first = parts.first().ok_or_else(|| Error::SizeMismatch("empty direct sum".into()))?;
        let (m, n) = first.arity();
        if parts.iter().any(|p| p.arity() != (m, n)) {
            return Err(Error::SizeMismatch("direct sum of different arities".into()));
        }
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let block = |pick: &dyn Fn(&SBimoduleSpace) -> &Mat| -> Mat {
            let mut rows = Vec::with_capacity(dim);
            let mut off = 0;
            for p in parts {
                let x = pick(p);
                for r in 0..p.dim {
                    rows.push(x.row(r).iter().map(|(c, v)| (c + off, v.clone())).collect());
                }
                off += p.dim;
            }
            Mat::from_rows(dim, rows).expect("block rows in range")
        };
        let left = (0..m.saturating_sub(1)).map(|i| block(&|p| &p.left[i])).collect();
        let right = (0..n.saturating_sub(1)).map(|i| block(&|p| &p.right[i])).collect();
        Ok(SBimoduleSpace { m, n, dim, left, right, degree: first.degree })
    }

    /// The same space viewed at `(n,m)` with the two actions exchanged.
    pub fn opposite(&self) -> SBimoduleSpace {
        SBimoduleSpace {
            m: self.n,
            n: self.m,
            dim: self.dim,
            left: self.right.clone(),
            right: self.left.clone(),
            degree: self.degree,
        }
    }

    /// Tensor product with the diagonal actions.
    pub fn tensor(&self, o: &SBimoduleSpace) -> Result<SBimoduleSpace> {
        if self.arity() != o.arity() {
            return Err(Error::SizeMismatch("tensor of different arities".into()));
        }
        let left = self.left.iter().zip(&o.left).map(|(a, b)| a.kron(b)).collect();
        let right = self.right.iter().zip(&o.right).map(|(a, b)| a.kron(b)).collect();
        Ok(SBimoduleSpace { m: self.m, n: self.n, dim: self.dim * o.dim, left, right, degree: self.degree + o.degree })
    }
}
