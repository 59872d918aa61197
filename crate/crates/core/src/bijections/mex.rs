use super::{BijectionError, BijectionRecord, Intermediates, Payload};
use crate::partition::Partition;

/// Sends a partition with a `-1`-fixed hook at position `s`, part `k`, to a
/// partition of `|λ| + binom(k, 2)` with mex `k`, `s - 1` parts above `k` and
/// at most `s - 2` below it.
pub fn mex_map(lam: &Partition) -> Result<Partition, BijectionError> {
    mex_map_traced(lam).map(|r| r.single_output())
}

pub fn mex_map_traced(lam: &Partition) -> Result<BijectionRecord, BijectionError> {
    let hook = lam.find_h_fixed_hook(-1).ok_or(BijectionError::NoFixedHook(-1))?;
    let (s, k) = (hook.position, hook.part);
    let parts = lam.parts();
    let mut mu: Vec<u32> = parts[..s - 1].iter().map(|&p| p + 1).collect();
    mu.extend(parts[s..].iter().filter(|&&p| p > 1).map(|&p| p - 1));
    mu.extend(1..k);
    mu.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BijectionRecord {
        map: "mex".into(),
        input: Payload::Single(lam.clone()),
        i_or_k: Some(k),
        intermediates: Intermediates { k: Some(k), s: Some(s), ..Default::default() },
        output: Payload::Single(Partition::new(mu)?),
    })
}

/// Inverse of [`mex_map`] for a partition `μ` with `mex(μ) = k`.
pub fn mex_map_inverse(mu: &Partition, k: u32) -> Result<Partition, BijectionError> {
    mex_map_inverse_traced(mu, k).map(|r| r.single_output())
}

pub fn mex_map_inverse_traced(mu: &Partition, k: u32) -> Result<BijectionRecord, BijectionError> {
    let found = mu.mex();
    if found != k {
        return Err(BijectionError::MexMismatch { expected: k, found });
    }
    let larger = mu.count_larger_than(k);
    let smaller = mu.count_smaller_than(k);
    if smaller + 1 > larger {
        return Err(BijectionError::PartCountInequality { k, larger, smaller });
    }
    let s = larger + 1;
    let parts = mu.parts();
    let mut rest: Vec<u32> = Vec::with_capacity(smaller);
    let mut next = k - 1;
    for &p in &parts[larger..] {
        if p == next && next > 0 {
            next -= 1;
        } else {
            rest.push(p);
        }
    }
    let below = s - k as usize - 1;
    let mut lam: Vec<u32> = parts[..larger].iter().map(|&p| p - 1).collect();
    lam.push(k);
    lam.extend(rest.iter().map(|&p| p + 1));
    lam.resize(s + below, 1);
    Ok(BijectionRecord {
        map: "mex-inverse".into(),
        input: Payload::Single(mu.clone()),
        i_or_k: Some(k),
        intermediates: Intermediates { k: Some(k), s: Some(s), ..Default::default() },
        output: Payload::Single(Partition::new(lam)?),
    })
}
