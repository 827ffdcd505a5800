//! Ordered pairs `⟨a, b⟩` with matrix-style cross products, and an
//! experimental transform over pairs.
//!
//! A cross product `A ∗ B` multiplies the 2×2 matrix of `A` (one of five
//! variants) by the column `B`. Powers are `M_s^m·⟨1,0⟩`.
//!
//! The pair transform reduces components modulo the scalar `X² + Y²` of the
//! modulus pair `M̈ = ⟨X, Y⟩`. Under that reduction the weight sums do not
//! vanish and the transform does not invert; [`pair_diagnostic`] reports the
//! details instead of promising a round trip.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bigring::{mod_inverse, reduce_signed, RingModulus};
use crate::error::{Error, Result};
use crate::plan::is_prime;

/// `⟨first, second⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PairElement {
    pub first: BigInt,
    pub second: BigInt,
}

impl PairElement {
    pub fn new(first: impl Into<BigInt>, second: impl Into<BigInt>) -> Self {
        PairElement { first: first.into(), second: second.into() }
    }

    pub fn zero() -> Self {
        PairElement::new(0, 0)
    }

    pub fn unit() -> Self {
        PairElement::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }
}

impl fmt::Display for PairElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.first, self.second)
    }
}

/// Cross-product variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `[[a, b], [b, a]]`, singular when `a = ±b`.
    Degenerate,
    /// `[[a, −b], [b, a]]`, complex multiplication.
    V1,
    /// `[[a, b], [b, −a]]`.
    V2,
    /// `[[−a, b], [b, a]]`.
    V3,
    /// `[[a, b], [−b, a]]`.
    V4,
}

impl Variant {
    pub const ALL: [Variant; 5] = [Variant::Degenerate, Variant::V1, Variant::V2, Variant::V3, Variant::V4];

    pub fn from_index(index: u8) -> Result<Variant> {
        match index {
            0 => Ok(Variant::Degenerate),
            1 => Ok(Variant::V1),
            2 => Ok(Variant::V2),
            3 => Ok(Variant::V3),
            4 => Ok(Variant::V4),
            _ => Err(Error::InvalidArgument(format!("variant must be 0..=4, got {index}"))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Variant::Degenerate => 0,
            Variant::V1 => 1,
            Variant::V2 => 2,
            Variant::V3 => 3,
            Variant::V4 => 4,
        }
    }

    /// Matrix of `⟨a, b⟩` under this variant, row-major.
    pub fn matrix(self, a: &BigInt, b: &BigInt) -> [[BigInt; 2]; 2] {
        let (a, b) = (a.clone(), b.clone());
        match self {
            Variant::Degenerate => [[a.clone(), b.clone()], [b, a]],
            Variant::V1 => [[a.clone(), -b.clone()], [b, a]],
            Variant::V2 => [[a.clone(), b.clone()], [b, -a]],
            Variant::V3 => [[-a.clone(), b.clone()], [b, a]],
            Variant::V4 => [[a.clone(), b.clone()], [-b, a]],
        }
    }
}

pub fn pair_add(a: &PairElement, b: &PairElement) -> PairElement {
    PairElement { first: &a.first + &b.first, second: &a.second + &b.second }
}

pub fn pair_sub(a: &PairElement, b: &PairElement) -> PairElement {
    PairElement { first: &a.first - &b.first, second: &a.second - &b.second }
}

pub fn pair_mul_componentwise(a: &PairElement, b: &PairElement) -> PairElement {
    PairElement { first: &a.first * &b.first, second: &a.second * &b.second }
}

/// `matrix(A)·B`.
pub fn pair_cross(a: &PairElement, b: &PairElement, variant: Variant) -> PairElement {
    let m = variant.matrix(&a.first, &a.second);
    PairElement {
        first: &m[0][0] * &b.first + &m[0][1] * &b.second,
        second: &m[1][0] * &b.first + &m[1][1] * &b.second,
    }
}

/// `M_s^m·⟨1, 0⟩`.
pub fn pair_pow(s: &PairElement, m: u64, variant: Variant) -> PairElement {
    (0..m).fold(PairElement::unit(), |acc, _| pair_cross(s, &acc, variant))
}

/// Determinant of the variant matrix of `⟨a, b⟩`.
pub fn determinant(a: &PairElement, variant: Variant) -> BigInt {
    let m = variant.matrix(&a.first, &a.second);
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

/// Plan for the experimental pair transform.
#[derive(Clone, Debug)]
pub struct PairPlan {
    s: PairElement,
    variant: Variant,
    len: usize,
    modulus_pair: PairElement,
    scalar_modulus: RingModulus,
    inv_n: Option<BigUint>,
    powers: Vec<PairElement>,
}

impl PairPlan {
    pub fn s(&self) -> &PairElement {
        &self.s
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `M̈ = Σ_{m<N} s̈^m`, unreduced.
    pub fn modulus_pair(&self) -> &PairElement {
        &self.modulus_pair
    }

    /// `X² + Y²` for `M̈ = ⟨X, Y⟩`.
    pub fn scalar_modulus(&self) -> &RingModulus {
        &self.scalar_modulus
    }

    /// `N⁻¹` modulo the scalar modulus, when it exists.
    pub fn inv_n(&self) -> Option<&BigUint> {
        self.inv_n.as_ref()
    }

    /// Reduced `s̈^{e mod N}`.
    pub fn power(&self, e: usize) -> &PairElement {
        &self.powers[e % self.len]
    }

    /// Both components reduced into `[0, scalar)`.
    pub fn reduce(&self, p: &PairElement) -> PairElement {
        let m = self.scalar_modulus.value();
        PairElement {
            first: BigInt::from(reduce_signed(&p.first, m)),
            second: BigInt::from(reduce_signed(&p.second, m)),
        }
    }
}

/// Builds a pair plan. `N` must be prime and the variant one of 2, 3, 4.
pub fn pair_plan(s: PairElement, len: usize, variant: Variant) -> Result<PairPlan> {
    if !is_prime(len as u64) {
        return Err(Error::InvalidArgument(format!("transform length must be prime, got {len}")));
    }
    if !matches!(variant, Variant::V2 | Variant::V3 | Variant::V4) {
        return Err(Error::InvalidArgument(format!("pair transform uses variants 2, 3 or 4, got {}", variant.index())));
    }
    let raw: Vec<PairElement> = (0..len as u64).map(|m| pair_pow(&s, m, variant)).collect();
    let modulus_pair = raw.iter().fold(PairElement::zero(), |acc, p| pair_add(&acc, p));
    let self_product = pair_cross(&modulus_pair, &modulus_pair, Variant::V2);
    let scalar = self_product.first.to_biguint().expect("sum of squares is nonnegative");
    let scalar_modulus = RingModulus::new(scalar)?;
    let inv_n = mod_inverse(&BigUint::from(len), scalar_modulus.value());
    let mut plan = PairPlan { s, variant, len, modulus_pair, scalar_modulus, inv_n, powers: Vec::new() };
    plan.powers = raw.iter().map(|p| plan.reduce(p)).collect();
    Ok(plan)
}

fn weighted_sum(plan: &PairPlan, seq: &[PairElement], out: usize, negate: bool) -> PairElement {
    let n = plan.len;
    let sum = seq.iter().enumerate().fold(PairElement::zero(), |acc, (j, x)| {
        let e = out * j % n;
        let e = if negate { (n - e) % n } else { e };
        pair_add(&acc, &pair_cross(x, &plan.powers[e], plan.variant))
    });
    plan.reduce(&sum)
}

fn check_len(plan: &PairPlan, seq: &[PairElement]) -> Result<()> {
    if seq.len() != plan.len {
        return Err(Error::LengthMismatch { expected: plan.len, actual: seq.len() });
    }
    Ok(())
}

/// `X̋(k) = Σ_i x̋(i) ∗ s̈^{−(k·i) mod N}`.
pub fn pair_forward(plan: &PairPlan, x: &[PairElement]) -> Result<Vec<PairElement>> {
    check_len(plan, x)?;
    Ok((0..plan.len).map(|k| weighted_sum(plan, x, k, true)).collect())
}

/// `x̋(i) = [N⁻¹·] Σ_k X̋(k) ∗ s̈^{(k·i) mod N}`; `normalize` selects the
/// `N⁻¹` factor.
pub fn pair_inverse(plan: &PairPlan, image: &[PairElement], normalize: bool) -> Result<Vec<PairElement>> {
    check_len(plan, image)?;
    let scale = if normalize {
        let inv = plan.inv_n.clone().ok_or_else(|| Error::NotInvertible {
            value: BigUint::from(plan.len),
            modulus: plan.scalar_modulus.value().clone(),
        })?;
        Some(BigInt::from(inv))
    } else {
        None
    };
    Ok((0..plan.len)
        .map(|i| {
            let sum = weighted_sum(plan, image, i, false);
            match &scale {
                Some(c) => plan.reduce(&PairElement { first: &sum.first * c, second: &sum.second * c }),
                None => sum,
            }
        })
        .collect())
}

/// Self-check of a pair plan on one probe sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDiagnostic {
    /// `(d, Σ_k s̈^{(d·k) mod N})`, reduced.
    pub weight_sums: Vec<(usize, PairElement)>,
    /// Offsets `d ≥ 1` whose weight sum is not zero.
    pub nonvanishing: Vec<usize>,
    pub round_trip_plain: bool,
    /// `None` when `N` is not invertible modulo the scalar modulus.
    pub round_trip_normalized: Option<bool>,
}

impl PairDiagnostic {
    pub fn invertible(&self) -> bool {
        self.round_trip_plain || self.round_trip_normalized == Some(true)
    }
}

pub fn pair_diagnostic(plan: &PairPlan, probe: &[PairElement]) -> Result<PairDiagnostic> {
    check_len(plan, probe)?;
    let n = plan.len;
    let weight_sums: Vec<(usize, PairElement)> = (0..n)
        .map(|d| {
            let sum = (0..n).fold(PairElement::zero(), |acc, k| pair_add(&acc, &plan.powers[d * k % n]));
            (d, plan.reduce(&sum))
        })
        .collect();
    let nonvanishing = weight_sums.iter().filter(|(d, s)| *d > 0 && !s.is_zero()).map(|(d, _)| *d).collect();
    let reduced: Vec<PairElement> = probe.iter().map(|p| plan.reduce(p)).collect();
    let image = pair_forward(plan, probe)?;
    let round_trip_plain = pair_inverse(plan, &image, false)? == reduced;
    let round_trip_normalized = match plan.inv_n {
        Some(_) => Some(pair_inverse(plan, &image, true)? == reduced),
        None => None,
    };
    Ok(PairDiagnostic { weight_sums, nonvanishing, round_trip_plain, round_trip_normalized })
}
