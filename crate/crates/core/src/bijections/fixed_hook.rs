use super::insertion::{f_bijection, f_inverse};
use super::{BijectionError, BijectionRecord, Intermediates, Payload};
use crate::partition::Partition;

fn fits_square(p: &Partition, m: usize) -> bool {
    p.len() <= m && p.largest_part() as usize <= m
}

/// Places `ρ` in the leg under the fixed hook. When `ρ` fits the
/// `m × m` square with `m = min(k-1, i-1)` it is used as is, otherwise it is
/// transposed; both shapes fit the `(k-1) × (i-1)` leg and the rule is an
/// involution on `R_{i-1,k-1} ∪ R_{k-1,i-1}`.
fn leg_shape(rho: &Partition, m: usize) -> Partition {
    if fits_square(rho, m) {
        rho.clone()
    } else {
        rho.conjugate()
    }
}

/// `B(λ, i)` for `i` occurring exactly `i` times in `λ`; the result has a
/// 0-fixed first-column hook at position `k+i-1`, where `k - 1` parts of `λ`
/// exceed `i`, and that part equals `i`.
pub fn b_bijection(lam: &Partition, i: u32) -> Result<Partition, BijectionError> {
    b_bijection_traced(lam, i).map(|r| r.single_output())
}

pub fn b_bijection_traced(lam: &Partition, i: u32) -> Result<BijectionRecord, BijectionError> {
    let found = lam.multiplicity(i);
    if i == 0 || found != i as usize {
        return Err(BijectionError::MultiplicityMismatch { part: i, found });
    }
    let iu = i as usize;
    let k = 1 + lam.count_larger_than(i);
    let parts = lam.parts();
    let tau = Partition::from_padded(parts[..k - 1].iter().map(|&p| p - i - 1).collect())?;
    let epsilon = Partition::new(parts[k - 1 + iu..].to_vec())?;
    let epsilon_prime = epsilon.conjugate();
    let (gamma, rho) = f_bijection(k - 1, iu - 1, &tau, &epsilon_prime)?;
    let leg = leg_shape(&rho, (k - 1).min(iu - 1));

    let mut mu: Vec<u32> = (0..k + iu - 2).map(|j| i + gamma.part(j + 1).unwrap_or(0)).collect();
    mu.push(i);
    mu.extend((1..k).map(|r| 1 + leg.part(r).unwrap_or(0)));
    let mu = Partition::new(mu)?;

    Ok(BijectionRecord {
        map: "B".into(),
        input: Payload::Single(lam.clone()),
        i_or_k: Some(i),
        intermediates: Intermediates {
            tau: Some(tau),
            epsilon_prime: Some(epsilon_prime),
            gamma: Some(gamma),
            rho: Some(rho),
            k: Some(k as u32),
            s: Some(k + iu - 1),
        },
        output: Payload::Single(mu),
    })
}

/// Inverse of [`b_bijection`]: recovers `(λ, i)` from the 0-fixed hook of `μ`.
pub fn b_inverse(mu: &Partition) -> Result<(Partition, u32), BijectionError> {
    let record = b_inverse_traced(mu)?;
    let lam = record.single_output();
    Ok((lam, record.i_or_k.expect("b_inverse records i")))
}

pub fn b_inverse_traced(mu: &Partition) -> Result<BijectionRecord, BijectionError> {
    let hook = mu.find_h_fixed_hook(0).ok_or(BijectionError::NoFixedHook(0))?;
    let s = hook.position;
    let i = hook.part;
    let iu = i as usize;
    if s < iu {
        return Err(BijectionError::InconsistentTrace(format!("fixed hook at {s} with part {i} > {s}")));
    }
    let k = s + 1 - iu;
    let expected = iu + 2 * k - 2;
    if mu.len() != expected {
        return Err(BijectionError::PartCount { expected, found: mu.len() });
    }
    let parts = mu.parts();
    let gamma = Partition::from_padded(parts[..s - 1].iter().map(|&p| p - i).collect())?;
    let leg = Partition::from_padded(parts[s..].iter().map(|&p| p - 1).collect())?;
    let rho = leg_shape(&leg, (k - 1).min(iu - 1));
    let (tau, epsilon_prime) = f_inverse(k - 1, iu - 1, &gamma, &rho)?;

    let mut lam: Vec<u32> = (1..k).map(|j| tau.part(j).unwrap_or(0) + i + 1).collect();
    lam.extend(std::iter::repeat_n(i, iu));
    lam.extend_from_slice(epsilon_prime.conjugate().parts());
    let lam = Partition::new(lam)?;

    Ok(BijectionRecord {
        map: "B-inverse".into(),
        input: Payload::Single(mu.clone()),
        i_or_k: Some(i),
        intermediates: Intermediates {
            tau: Some(tau),
            epsilon_prime: Some(epsilon_prime),
            gamma: Some(gamma),
            rho: Some(rho),
            k: Some(k as u32),
            s: Some(s),
        },
        output: Payload::Single(lam),
    })
}
