//! The forward/inverse transform pair and its weight function.
//!
//! Forward: `X(k) = Σ_i x(i) · s^{−(k·i) mod N}`.
//! Inverse: `x(i) = N⁻¹ · Σ_k X(k) · s^{(k·i) mod N}`.
//!
//! Negative exponents are taken as the complement `N − e` in the power
//! cycle, which is valid because `s^N ≡ 1 (mod M)` for every plan. Both
//! directions are the direct `O(N²)` sums.

use std::io::Write;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bigring::{RingElement, RingModulus};
use crate::error::{Error, Result};
use crate::parallel::map_indices;
use crate::plan::{Regime, TransformPlan};

/// A length-`N` vector of canonical residues under one modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence {
    modulus: RingModulus,
    values: Vec<BigUint>,
}

impl Sequence {
    /// Rejects any value that is not already below the modulus.
    pub fn new(modulus: RingModulus, values: Vec<BigUint>) -> Result<Self> {
        if let Some((index, value)) = values.iter().enumerate().find(|(_, v)| *v >= modulus.value()) {
            return Err(Error::ValueOutOfRange { index, value: value.clone(), modulus: modulus.value().clone() });
        }
        Ok(Sequence { modulus, values })
    }

    pub fn from_u64s(modulus: &RingModulus, values: &[u64]) -> Result<Self> {
        Sequence::new(modulus.clone(), values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// Reduces every value instead of rejecting large ones.
    pub fn reduced(modulus: &RingModulus, values: &[BigUint]) -> Self {
        let values = values.iter().map(|v| v % modulus.value()).collect();
        Sequence { modulus: modulus.clone(), values }
    }

    pub fn zeros(modulus: &RingModulus, len: usize) -> Self {
        Sequence { modulus: modulus.clone(), values: vec![BigUint::zero(); len] }
    }

    /// Unit impulse at `at`.
    pub fn delta(modulus: &RingModulus, len: usize, at: usize) -> Self {
        let mut seq = Sequence::zeros(modulus, len);
        seq.values[at % len] = BigUint::from(1u32) % modulus.value();
        seq
    }

    pub fn modulus(&self) -> &RingModulus {
        &self.modulus
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> RingElement {
        self.modulus.reduce(&self.values[i])
    }

    /// Value at a cyclic (possibly negative) index.
    pub fn at(&self, i: i64) -> &BigUint {
        &self.values[i.rem_euclid(self.len() as i64) as usize]
    }

    fn zip_with(&self, other: &Sequence, f: impl Fn(&BigUint, &BigUint) -> BigUint) -> Result<Sequence> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.value().clone(),
                right: other.modulus.value().clone(),
            });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), actual: other.len() });
        }
        let m = self.modulus.value();
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b) % m).collect();
        Ok(Sequence { modulus: self.modulus.clone(), values })
    }

    pub fn add(&self, other: &Sequence) -> Result<Sequence> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Sequence) -> Result<Sequence> {
        let m = self.modulus.value().clone();
        self.zip_with(other, move |a, b| a + &m - b)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Sequence) -> Result<Sequence> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, factor: &RingElement) -> Result<Sequence> {
        if factor.modulus() != &self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.value().clone(),
                right: factor.modulus().value().clone(),
            });
        }
        let m = self.modulus.value();
        let values = self.values.iter().map(|v| v * factor.residue() % m).collect();
        Ok(Sequence { modulus: self.modulus.clone(), values })
    }

    /// Cyclic rotation: `out[k] = self[(k − c) mod N]`.
    pub fn rotate(&self, c: i64) -> Sequence {
        let n = self.len() as i64;
        let values = (0..n).map(|k| self.values[(k - c).rem_euclid(n) as usize].clone()).collect();
        Sequence { modulus: self.modulus.clone(), values }
    }

    /// Sum of all values mod `M`.
    pub fn sum(&self) -> RingElement {
        let total = self.values.iter().fold(BigUint::zero(), |acc, v| acc + v);
        self.modulus.reduce(&total)
    }
}

/// Sign of the weight exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

fn exponent(plan: &TransformPlan, i: i64, k: i64, sign: Sign) -> usize {
    let n = plan.len() as i128;
    let e = (i as i128 * k as i128).rem_euclid(n);
    match sign {
        Sign::Plus => e as usize,
        Sign::Minus => ((n - e) % n) as usize,
    }
}

/// `s^{±(i·k) mod N}`; indices are taken modulo `N`.
pub fn weight(plan: &TransformPlan, i: i64, k: i64, sign: Sign) -> RingElement {
    plan.modulus().reduce(plan.power(exponent(plan, i, k, sign)))
}

fn check_input(plan: &TransformPlan, seq: &Sequence) -> Result<()> {
    if seq.modulus() != plan.modulus() {
        return Err(Error::ModulusMismatch {
            left: plan.modulus().value().clone(),
            right: seq.modulus().value().clone(),
        });
    }
    if seq.len() != plan.len() {
        return Err(Error::LengthMismatch { expected: plan.len(), actual: seq.len() });
    }
    Ok(())
}

fn weighted_sum(plan: &TransformPlan, seq: &Sequence, out: usize, sign: Sign) -> BigUint {
    let n = plan.len();
    let m = plan.modulus().value();
    let mut acc = BigUint::zero();
    for (j, v) in seq.values().iter().enumerate() {
        let e = (out * j) % n;
        let e = match sign {
            Sign::Plus => e,
            Sign::Minus => (n - e) % n,
        };
        acc = (acc + v * plan.power(e)) % m;
    }
    acc
}

/// Forward transform (original → image).
pub fn forward(plan: &TransformPlan, original: &Sequence) -> Result<Sequence> {
    forward_threaded(plan, original, 1)
}

/// Inverse transform (image → original).
pub fn inverse(plan: &TransformPlan, image: &Sequence) -> Result<Sequence> {
    inverse_threaded(plan, image, 1)
}

/// [`forward`] with output indices spread over `threads` workers.
pub fn forward_threaded(plan: &TransformPlan, original: &Sequence, threads: usize) -> Result<Sequence> {
    check_input(plan, original)?;
    let values = map_indices(plan.len(), threads, |k| weighted_sum(plan, original, k, Sign::Minus));
    Ok(Sequence { modulus: plan.modulus().clone(), values })
}

/// [`inverse`] with output indices spread over `threads` workers.
pub fn inverse_threaded(plan: &TransformPlan, image: &Sequence, threads: usize) -> Result<Sequence> {
    check_input(plan, image)?;
    let m = plan.modulus().value();
    let inv_n = plan.inv_n().residue();
    let values = map_indices(plan.len(), threads, |i| weighted_sum(plan, image, i, Sign::Plus) * inv_n % m);
    Ok(Sequence { modulus: plan.modulus().clone(), values })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// An `N×N` table of weights. Forward entry `(k, i)` is `s^{−(k·i) mod N}`,
/// inverse entry `(i, k)` is `s^{(k·i) mod N}`; the `N⁻¹` factor is not
/// folded in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    pub direction: Direction,
    modulus: RingModulus,
    entries: Vec<Vec<BigUint>>,
}

impl WeightMatrix {
    pub fn entries(&self) -> &[Vec<BigUint>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row][col]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|r| (0..r).all(|c| self.entries[r][c] == self.entries[c][r]))
    }

    /// Ring matrix product `self × other`.
    pub fn product(&self, other: &WeightMatrix) -> Vec<Vec<BigUint>> {
        let n = self.entries.len();
        let m = self.modulus.value();
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (0..n).fold(BigUint::zero(), |acc, j| acc + &self.entries[r][j] * &other.entries[j][c]) % m
                    })
                    .collect()
            })
            .collect()
    }
}

/// Forward and inverse weight matrices; their product is `N·I (mod M)`.
pub fn matrices(plan: &TransformPlan) -> (WeightMatrix, WeightMatrix) {
    let n = plan.len();
    let table = |sign: Sign| -> Vec<Vec<BigUint>> {
        (0..n).map(|r| (0..n).map(|c| plan.power(exponent(plan, r as i64, c as i64, sign)).clone()).collect()).collect()
    };
    (
        WeightMatrix { direction: Direction::Forward, modulus: plan.modulus().clone(), entries: table(Sign::Minus) },
        WeightMatrix { direction: Direction::Inverse, modulus: plan.modulus().clone(), entries: table(Sign::Plus) },
    )
}

/// `s^i` recovered as the inverse of `s^{N−i}`; errors if the two disagree.
pub fn negative_index_view(plan: &TransformPlan, i: usize) -> Result<RingElement> {
    if i >= plan.len() {
        return Err(Error::InvalidArgument(format!("index {i} must be below N = {}", plan.len())));
    }
    let complement = plan.modulus().reduce(plan.power(plan.len() - i));
    let via_inverse = complement.inv()?;
    let direct = plan.modulus().reduce(plan.power(i));
    if via_inverse != direct {
        return Err(Error::TheoremViolation(format!(
            "(s^{})^-1 = {} but s^{} = {}",
            plan.len() - i,
            via_inverse.residue(),
            i,
            direct.residue()
        )));
    }
    Ok(direct)
}

/// Column order that turns forward row `k = 1` into `1, 2, …, N`.
///
/// Only pseudo-Fermat plans (`M = N + 1`) have weights that are exactly the
/// integers `1..=N`. Entry `j` of the result is the original column placed
/// at position `j`.
pub fn sawtooth_permutation(plan: &TransformPlan) -> Result<Vec<usize>> {
    if plan.regime() != Regime::PseudoFermat {
        return Err(Error::WrongRegime { expected: "pseudo-fermat", actual: plan.regime().to_string() });
    }
    let n = plan.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&i| plan.power(exponent(plan, 1, i as i64, Sign::Minus)).clone());
    Ok(perm)
}

/// One row of the weight dump: `S(i, k) = s^{(i·k) mod N}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRow {
    pub i: i64,
    pub k: usize,
    pub value: BigUint,
}

pub fn dump_weights(plan: &TransformPlan, i_values: &[i64]) -> Vec<WeightRow> {
    i_values
        .iter()
        .flat_map(|&i| {
            (0..plan.len()).map(move |k| WeightRow {
                i,
                k,
                value: weight(plan, i, k as i64, Sign::Plus).into_residue(),
            })
        })
        .collect()
}

pub fn write_weights_csv<W: Write>(rows: &[WeightRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "i,k,weight")?;
    for row in rows {
        writeln!(out, "{},{},{}", row.i, row.k, row.value)?;
    }
    Ok(())
}
