use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient of q^{exponent} requested but the series is only exact up to q^{order}")]
    BeyondOrder { exponent: i64, order: i64 },
    #[error("cannot extend a series known up to q^{have} to order {want}")]
    TruncationLoss { have: i64, want: i64 },
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error("malformed series: {0}")]
    Malformed(String),
}

/// A truncated formal Laurent series in `q` with exact integer coefficients.
///
/// Coefficients are stored for exponents `offset..=order`; everything below
/// `offset` is zero and nothing above `order` is known.
#[derive(Debug, Clone)]
pub struct Series {
    offset: i64,
    order: i64,
    coeffs: Vec<BigInt>,
}

fn span(offset: i64, order: i64) -> usize {
    if order < offset {
        0
    } else {
        (order - offset + 1) as usize
    }
}

impl Series {
    pub fn zero(order: i64) -> Self {
        Self { offset: 0, order, coeffs: vec![BigInt::zero(); span(0, order)] }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, order)
    }

    /// `q^exponent`, exact up to `order`.
    pub fn monomial(exponent: i64, order: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); span(exponent, order)];
        if let Some(c) = coeffs.first_mut() {
            *c = BigInt::one();
        }
        Self { offset: exponent, order, coeffs }
    }

    /// Builds a series from coefficients of `q^offset, q^(offset+1), …`;
    /// missing coefficients up to `order` are zero and extra ones are dropped.
    pub fn from_coeffs<I, T>(offset: i64, order: i64, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let len = span(offset, order);
        let mut v: Vec<BigInt> = coeffs.into_iter().take(len).map(Into::into).collect();
        v.resize(len, BigInt::zero());
        Self { offset, order, coeffs: v }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Largest exponent whose coefficient is exact.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn try_coeff(&self, exponent: i64) -> Result<BigInt, SeriesError> {
        if exponent > self.order {
            return Err(SeriesError::BeyondOrder { exponent, order: self.order });
        }
        if exponent < self.offset {
            return Ok(BigInt::zero());
        }
        Ok(self.coeffs[(exponent - self.offset) as usize].clone())
    }

    /// Coefficient of `q^exponent`.
    ///
    /// Panics if `exponent` exceeds the truncation order.
    pub fn coeff(&self, exponent: i64) -> BigInt {
        match self.try_coeff(exponent) {
            Ok(c) => c,
            Err(e) => panic!("{e}"),
        }
    }

    /// Coefficients of `q^from ..= q^to`.
    pub fn coeff_range(&self, from: i64, to: i64) -> Result<Vec<BigInt>, SeriesError> {
        (from..=to).map(|e| self.try_coeff(e)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every known coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplication by `q^m`. The known range moves with the shift, so a
    /// negative `m` lowers the order.
    pub fn shift(&self, m: i64) -> Self {
        Self { offset: self.offset + m, order: self.order + m, coeffs: self.coeffs.clone() }
    }

    /// Forgets coefficients above `order`.
    pub fn truncate(&self, order: i64) -> Result<Self, SeriesError> {
        self.require_order(order)?;
        let mut out = self.clone();
        out.order = order;
        out.coeffs.truncate(span(out.offset, order));
        Ok(out)
    }

    pub fn require_order(&self, order: i64) -> Result<(), SeriesError> {
        if order > self.order {
            Err(SeriesError::TruncationLoss { have: self.order, want: order })
        } else {
            Ok(())
        }
    }

    /// Same series with leading zero coefficients dropped.
    pub fn normalized(&self) -> Self {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return Self { offset: self.order + 1, order: self.order, coeffs: Vec::new() };
        }
        Self { offset: self.offset + lead as i64, order: self.order, coeffs: self.coeffs[lead..].to_vec() }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self { offset: self.offset, order: self.order, coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// In-place multiplication by `1 - q^j`.
    pub fn mul_one_minus_q_pow(&mut self, j: usize) {
        assert!(j > 0, "1 - q^0 is not invertible");
        for e in (j..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(e);
            hi[0] -= &lo[e - j];
        }
    }

    /// In-place multiplication by `1 / (1 - q^j)`.
    pub fn div_one_minus_q_pow(&mut self, j: usize) {
        assert!(j > 0, "1 - q^0 is not invertible");
        for e in j..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(e);
            hi[0] += &lo[e - j];
        }
    }

    /// In-place multiplication by `1 / (q)_m`; by convention `1 / (q)_m = 0`
    /// when `m < 0`.
    pub fn div_finite_pochhammer(&mut self, m: i64) {
        if m < 0 {
            self.coeffs.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        let reach = self.coeffs.len().saturating_sub(1);
        for j in 1..=(m as usize).min(reach) {
            self.div_one_minus_q_pow(j);
        }
    }

    /// First exponent (within the common known range) where `self` and
    /// `other` disagree, with both coefficients.
    pub fn first_divergence(&self, other: &Series) -> Option<(i64, BigInt, BigInt)> {
        let order = self.order.min(other.order);
        let start = self.offset.min(other.offset);
        (start..=order).find_map(|e| {
            let (a, b) = (self.coeff(e), other.coeff(e));
            (a != b).then_some((e, a, b))
        })
    }

    /// Coefficientwise equality up to `order`; both series must reach it.
    pub fn agrees_up_to(&self, other: &Series, order: i64) -> Result<bool, SeriesError> {
        self.require_order(order)?;
        other.require_order(order)?;
        Ok(self.truncate(order)?.first_divergence(&other.truncate(order)?).is_none())
    }

    fn binary<F: Fn(&mut BigInt, &BigInt)>(&self, other: &Series, op: F) -> Series {
        let order = self.order.min(other.order);
        let offset = self.offset.min(other.offset);
        let mut coeffs = vec![BigInt::zero(); span(offset, order)];
        for (idx, c) in coeffs.iter_mut().enumerate() {
            let e = offset + idx as i64;
            if e >= self.offset {
                *c += &self.coeffs[(e - self.offset) as usize];
            }
            if e >= other.offset {
                op(c, &other.coeffs[(e - other.offset) as usize]);
            }
        }
        Series { offset, order, coeffs }
    }

    fn product(&self, other: &Series) -> Series {
        let offset = self.offset + other.offset;
        let order = (self.order + other.offset).min(other.order + self.offset);
        let len = span(offset, order);
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { offset, order, coeffs }
    }
}

/// Equal when both are known to the same order and agree on every exponent.
impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.first_divergence(other).is_none()
    }
}

impl Eq for Series {}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.binary(rhs, |c, x| *c += x)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.binary(rhs, |c, x| *c -= x)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.product(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { offset: self.offset, order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $m(self, rhs: &Series) -> Series {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for Series {
    /// Panics on an empty iterator, since the truncation order is unknown.
    fn sum<I: Iterator<Item = Series>>(mut iter: I) -> Series {
        let first = iter.next().expect("sum of an empty sequence of series");
        iter.fold(first, |acc, s| &acc + &s)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.offset + idx as i64;
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    offset: i64,
    order: i64,
    coeffs: Vec<String>,
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            offset: self.offset,
            order: self.order,
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != span(repr.offset, repr.order) {
            return Err(serde::de::Error::custom(SeriesError::Malformed(format!(
                "{} coefficients for exponents {}..={}",
                repr.coeffs.len(),
                repr.offset,
                repr.order
            ))));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| serde::de::Error::custom(SeriesError::Malformed(e.to_string()))))
            .collect::<Result<_, _>>()?;
        Ok(Series { offset: repr.offset, order: repr.order, coeffs })
    }
}
