use alloc::format;
use alloc::string::String;
use alloc::vec;

use super::free::FreeElement;
use crate::error::Result;
use crate::perm::Perm;
use crate::sbimod::Generators;

/// `((12)(45))` with the given block sizes.
fn swap_blocks(sizes: [usize; 5]) -> Perm {
    let s = Perm::from_cycles(5, &[vec![1, 2], vec![4, 5]]).expect("fixed cycles");
    Perm::block(&s, &sizes)
}

/// `s1 ∘_i s2`: `s2` acts inside the `i`-th slot, which then moves with `s1`.
pub fn perm_comp(s1: &Perm, i: usize, s2: &Perm) -> Perm {
    let (n1, n2) = (s1.len(), s2.len());
    let mut sizes = vec![1; n1];
    sizes[i - 1] = n2;
    Perm::block(s1, &sizes).compose(&s2.shifted(i - 1, n1 + n2 - 1))
}

/// The right action: `pi` on outputs, `sigma` on the right of inputs.
pub fn right_act(e: &Generators, x: &FreeElement, pi: &Perm, sigma: &Perm) -> Result<FreeElement> {
    x.act(pi, &sigma.inverse(), e)
}

/// Associativity for a lower composite `(f ∘ g) ∘ h`, all positions.
/// Returns the first failing position.
pub fn associativity_a(e: &Generators, f: &FreeElement, g: &FreeElement, h: &FreeElement) -> Result<Option<String>> {
    let ((m1, n1), (m2, n2), (m3, n3)) = (f.arity(), g.arity(), h.arity());
    for k in 1..=n1 {
        for l in 1..=m2 {
            let fg = f.compose(k, l, g, e)?;
            for i in 1..=n1 + n2 - 1 {
                for j in 1..=m3 {
                    let lhs = fg.compose(i, j, h, e)?;
                    let sigma = swap_blocks([l - 1, j - 1, m1, m3 - j, m2 - l]);
                    let nn = lhs.arity().1;
                    let rhs = if i < k {
                        f.compose(i, j, h, e)?.compose(k + n3 - 1, l, g, e)?.act(&sigma, &Perm::identity(nn), e)?
                    } else if i < k + n2 {
                        f.compose(k, j + l - 1, &g.compose(i - k + 1, j, h, e)?, e)?
                    } else {
                        f.compose(i - n2 + 1, j, h, e)?.compose(k, l, g, e)?.act(&sigma, &Perm::identity(nn), e)?
                    };
                    if lhs != rhs {
                        return Ok(Some(format!("(a) at i={i} j={j} k={k} l={l}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Associativity for an upper composite `f ∘ (g ∘ h)`, all positions.
pub fn associativity_b(e: &Generators, f: &FreeElement, g: &FreeElement, h: &FreeElement) -> Result<Option<String>> {
    let ((m1, n1), (m2, n2), (m3, n3)) = (f.arity(), g.arity(), h.arity());
    for k in 1..=n2 {
        for l in 1..=m3 {
            let gh = g.compose(k, l, h, e)?;
            for i in 1..=n1 {
                for j in 1..=m2 + m3 - 1 {
                    let lhs = f.compose(i, j, &gh, e)?;
                    let sigma = swap_blocks([i - 1, k - 1, n3, n2 - k, n1 - i]).inverse();
                    let mm = lhs.arity().0;
                    let rhs = if j < l {
                        g.compose(k, l + m1 - 1, &f.compose(i, j, h, e)?, e)?.act(&Perm::identity(mm), &sigma, e)?
                    } else if j < l + m2 {
                        f.compose(i, j - l + 1, g, e)?.compose(k + i - 1, l, h, e)?
                    } else {
                        g.compose(k, l, &f.compose(i, j - m2 + 1, h, e)?, e)?.act(&Perm::identity(mm), &sigma, e)?
                    };
                    if lhs != rhs {
                        return Ok(Some(format!("(b) at i={i} j={j} k={k} l={l}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Equivariance of `i∘j` under `(p1,s1)` on `f` and `(p2,s2)` on `g`.
pub fn equivariance_c(
    e: &Generators,
    f: &FreeElement,
    g: &FreeElement,
    (p1, s1): (&Perm, &Perm),
    (p2, s2): (&Perm, &Perm),
    i: usize,
    j: usize,
) -> Result<bool> {
    let lhs = right_act(e, f, p1, s1)?.compose(i, j, &right_act(e, g, p2, s2)?, e)?;
    let jj = p2.inverse().apply(j - 1) + 1;
    let ii = s1.apply(i - 1) + 1;
    let rhs = right_act(e, &f.compose(ii, jj, g, e)?, &perm_comp(p2, jj, p1), &perm_comp(s1, i, s2))?;
    Ok(lhs == rhs)
}
