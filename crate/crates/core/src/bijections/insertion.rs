use super::{BijectionError, BijectionRecord, Intermediates, Payload};
use crate::partition::Partition;

/// Result of inserting one part by sliding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideTrace {
    pub result: Partition,
    /// Number of parts the new value slid past; the inserted value is
    /// `R - slides` and `|before| + R = |result| + slides`.
    pub slides: usize,
    pub inserted: u32,
}

/// Inserts `value` at the bottom of the nonincreasing `row` (which may hold
/// trailing zeros) and lets it climb, losing one per step, until
/// `value - s <= row[t-s]`. Returns the slide count `s`.
fn slide_insert(row: &mut Vec<u32>, value: u32) -> usize {
    let t = row.len();
    let mut s = 0;
    while s < t && value as usize - s > row[t - 1 - s] as usize {
        s += 1;
    }
    row.insert(t - s, value - s as u32);
    s
}

/// Inserts `r` into `p` by sliding it past smaller parts.
pub fn insert_part(p: &Partition, r: i64) -> Result<SlideTrace, BijectionError> {
    if r <= 0 {
        return Err(BijectionError::NonPositiveInsert(r));
    }
    let value = u32::try_from(r).map_err(|_| BijectionError::NonPositiveInsert(r))?;
    let mut row = p.parts().to_vec();
    let slides = slide_insert(&mut row, value);
    let inserted = value - slides as u32;
    if inserted == 0 {
        return Err(BijectionError::InconsistentTrace(format!("{r} slid down to zero")));
    }
    Ok(SlideTrace { result: Partition::new(row)?, slides, inserted })
}

fn check_len(name: &'static str, p: &Partition, max: usize) -> Result<(), BijectionError> {
    if p.len() > max {
        return Err(BijectionError::TooManyParts { name, len: p.len(), max });
    }
    Ok(())
}

fn padded(p: &Partition, len: usize) -> Vec<u32> {
    let mut v = p.parts().to_vec();
    v.resize(len, 0);
    v
}

/// `F_{a,b}(λ, μ) = (ν, ρ)`: inserts `μ_1, …, μ_b` (largest first) into `λ`,
/// both zero-padded to `a` and `b` entries; `ρ` collects the slide counts.
pub fn f_bijection(
    a: usize,
    b: usize,
    lam: &Partition,
    mu: &Partition,
) -> Result<(Partition, Partition), BijectionError> {
    f_bijection_traced(a, b, lam, mu).map(|r| r.pair_output())
}

pub fn f_bijection_traced(
    a: usize,
    b: usize,
    lam: &Partition,
    mu: &Partition,
) -> Result<BijectionRecord, BijectionError> {
    check_len("lambda", lam, a)?;
    check_len("mu", mu, b)?;
    let mut row = padded(lam, a);
    let slides: Vec<usize> = padded(mu, b).into_iter().map(|r| slide_insert(&mut row, r)).collect();
    if slides.windows(2).any(|w| w[0] < w[1]) {
        return Err(BijectionError::SlidesNotPartition(slides));
    }
    let nu = Partition::from_padded(row)?;
    let rho = Partition::from_padded(slides.iter().map(|&s| s as u32).collect())?;
    Ok(BijectionRecord {
        map: "F".into(),
        input: Payload::Pair(lam.clone(), mu.clone()),
        i_or_k: None,
        intermediates: Intermediates { rho: Some(rho.clone()), ..Default::default() },
        output: Payload::Pair(nu, rho),
    })
}

/// Inverse of [`f_bijection`] for the same `a` and `b`: `ρ` is zero-padded
/// to `b` entries and the insertions are undone last to first.
pub fn f_inverse(
    a: usize,
    b: usize,
    nu: &Partition,
    rho: &Partition,
) -> Result<(Partition, Partition), BijectionError> {
    f_inverse_traced(a, b, nu, rho).map(|r| r.pair_output())
}

pub fn f_inverse_traced(
    a: usize,
    b: usize,
    nu: &Partition,
    rho: &Partition,
) -> Result<BijectionRecord, BijectionError> {
    check_len("nu", nu, a + b)?;
    check_len("rho", rho, b)?;
    if rho.largest_part() as usize > a {
        return Err(BijectionError::PartTooLarge { name: "rho", part: rho.largest_part(), max: a as u32 });
    }
    let mut row = padded(nu, a + b);
    let slides = padded(rho, b);
    let mut removed = Vec::with_capacity(b);
    for (j, &s) in slides.iter().enumerate().rev() {
        let len = a + j + 1;
        let at = len - 1 - s as usize;
        let value = row.remove(at);
        removed.push(value + s);
    }
    removed.reverse();
    let lam = Partition::from_padded(row)?;
    let mu = Partition::from_padded(removed).map_err(|e| BijectionError::InconsistentTrace(e.to_string()))?;
    let (nu_again, rho_again) =
        f_bijection(a, b, &lam, &mu).map_err(|e| BijectionError::InconsistentTrace(e.to_string()))?;
    if &nu_again != nu || &rho_again != rho {
        return Err(BijectionError::InconsistentTrace(format!("({nu},{rho}) is not in the image of F_{{{a},{b}}}")));
    }
    Ok(BijectionRecord {
        map: "F-inverse".into(),
        input: Payload::Pair(nu.clone(), rho.clone()),
        i_or_k: None,
        intermediates: Intermediates { rho: Some(rho.clone()), ..Default::default() },
        output: Payload::Pair(lam, mu),
    })
}
