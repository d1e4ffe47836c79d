use crate::error::{Error, Result};
use crate::monomial::{BasisMonomial, TensorMonomial};

/// Whether some pair of increasing index maps (one on even, one on odd
/// generators) carries `m` to a divisor of `n`, factor by factor.
///
/// The two monomials may come from different signatures. Indices past the end
/// of `n` are allowed as targets and carry exponent zero.
pub fn weight_preceq(m: &BasisMonomial, n: &BasisMonomial) -> Result<bool> {
    let (Some(m), Some(n)) = (m.as_tensor(), n.as_tensor()) else {
        return Err(Error::NotTensor);
    };
    Ok(embeds(&even_pairs(m), &even_pairs(n)) && embeds(&odd_pairs(m), &odd_pairs(n)))
}

fn even_pairs(t: &TensorMonomial) -> alloc::vec::Vec<(u32, u32)> {
    t.left.y.iter().copied().zip(t.right.y.iter().copied()).collect()
}

fn odd_pairs(t: &TensorMonomial) -> alloc::vec::Vec<(u32, u32)> {
    let q = t.left.z.iter().chain(&t.right.z).copied().max().unwrap_or(0);
    (1..=q)
        .map(|j| (u32::from(t.left.z.contains(&j)), u32::from(t.right.z.contains(&j))))
        .collect()
}

/// Greedy earliest matching: each source index takes the first later target
/// that dominates it. Zero pairs can always go past the end of `target`.
fn embeds(source: &[(u32, u32)], target: &[(u32, u32)]) -> bool {
    let mut k = 0;
    for &(a, b) in source {
        while k < target.len() && !(a <= target[k].0 && b <= target[k].1) {
            k += 1;
        }
        if k == target.len() {
            if a == 0 && b == 0 {
                // Everything from here on maps past the end; only zeros may remain.
                continue;
            }
            return false;
        }
        k += 1;
    }
    true
}
