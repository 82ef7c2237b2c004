//! Permutations of `{0, .., n-1}` (displayed 1-based).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation stored by images: `p.apply(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidAction(alloc::format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of `n` points from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Perm::identity(n);
        for c in cycles.iter().rev() {
            if c.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::InvalidAction(alloc::format!("cycle {c:?} out of range for S_{n}")));
            }
            let mut img: Vec<usize> = (0..n).collect();
            for k in 0..c.len() {
                img[c[k] - 1] = c[(k + 1) % c.len()] - 1;
            }
            let cyc = Perm::from_images(img)?;
            p = cyc.compose(&p);
        }
        Ok(p)
    }

    /// Adjacent transposition swapping `i` and `i + 1`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, i + 1);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ o`: apply `o` first.
    pub fn compose(&self, o: &Perm) -> Perm {
        assert_eq!(self.len(), o.len(), "permutation sizes differ");
        Perm(o.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = alloc::vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i64 {
        parity_sign(&self.0)
    }

    /// Adjacent transpositions `a_1, .., a_k` with `self = s_{a_1} ∘ .. ∘ s_{a_k}`.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) else { break };
            p.swap(i, i + 1);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Block permutation: the points are cut into consecutive blocks of the
    /// given sizes and the blocks are moved as `sigma` moves `{1..k}`.
    pub fn block(sigma: &Perm, sizes: &[usize]) -> Perm {
        assert_eq!(sigma.len(), sizes.len(), "one size per block");
        let k = sizes.len();
        let mut start = alloc::vec![0; k];
        for b in 1..k {
            start[b] = start[b - 1] + sizes[b - 1];
        }
        // block b lands at position sigma(b)
        let inv = sigma.inverse();
        let mut new_start = alloc::vec![0; k];
        let mut acc = 0;
        for q in 0..k {
            let b = inv.apply(q);
            new_start[b] = acc;
            acc += sizes[b];
        }
        let mut img = alloc::vec![0; acc];
        for b in 0..k {
            for t in 0..sizes[b] {
                img[start[b] + t] = new_start[b] + t;
            }
        }
        Perm(img)
    }

    /// Places `self` on the block `offset..offset+len` of `n` points.
    pub fn shifted(&self, offset: usize, n: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        for (i, &j) in self.0.iter().enumerate() {
            v[offset + i] = offset + j;
        }
        Perm(v)
    }

    pub fn cycle_string(&self) -> String {
        let mut out = String::new();
        let mut seen = alloc::vec![false; self.len()];
        for s in 0..self.len() {
            if seen[s] || self.0[s] == s {
                continue;
            }
            out.push('(');
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&alloc::format!("{}", i + 1));
                i = self.0[i];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// Sign of the permutation `i -> v[i]` of `{0..n-1}`.
pub fn parity_sign(v: &[usize]) -> i64 {
    let mut seen = alloc::vec![false; v.len()];
    let mut s = 1;
    for i in 0..v.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = v[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Sign of the permutation sorting a sequence of distinct keys.
pub fn sort_sign<T: Ord>(keys: &[T]) -> i64 {
    let mut inv = 0usize;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn cycles_and_sign() {
        let p = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
        assert_eq!(p.sign(), 1);
        assert_eq!(Perm::transposition(3, 1).sign(), -1);
        assert_eq!(p.cycle_string(), "(1 2 3)");
    }

    #[test]
    fn factorization_reconstructs() {
        let p = Perm::from_images(vec![2, 0, 3, 1]).unwrap();
        let mut q = Perm::identity(4);
        for a in p.adjacent_factorization() {
            q = q.compose(&Perm::transposition(4, a));
        }
        assert_eq!(p, q);
    }

    #[test]
    fn block_swap() {
        let s = Perm::from_cycles(2, &[vec![1, 2]]).unwrap();
        let b = Perm::block(&s, &[1, 2]);
        assert_eq!(b.images(), &[2, 0, 1]);
    }

    #[test]
    fn sort_sign_matches_parity() {
        assert_eq!(sort_sign(&[3, 1, 2]), 1);
        assert_eq!(sort_sign(&[2, 1, 3]), -1);
    }
}
