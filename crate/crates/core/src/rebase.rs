//! Basis change between two plans of the same length.
//!
//! Two plans with bases `s₁` (modulus `M₁`) and `s₂` (modulus `M₂`) are tied
//! together in the composite ring modulo `M = M₁·M₂` through the kernel
//! `Φ(k,n) = Σ_i (s₂^k · s₁^{−n})^i`. Negative exponents are taken as
//! complements in the cycle of length `N`.
//!
//! The kernel route reinterprets mod-`M₂` residues as integers in the
//! composite ring. That lift is not a ring homomorphism into `Z/M₁`, so the
//! kernel route agrees with the direct base-`s₁` transform only for special
//! inputs (zero, constants). The checked operations report the
//! first disagreeing index; [`reference_image`] and [`reference_original`]
//! give the route through the original that always agrees.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bigring::{mod_inverse, pow_mod, RingElement, RingModulus};
use crate::error::{Error, Result};
use crate::parallel::map_indices;
use crate::plan::TransformPlan;
use crate::transform::{forward, inverse, Sequence};

/// Two plans of equal length and their composite ring.
#[derive(Clone, Debug)]
pub struct RebasePair {
    plan1: TransformPlan,
    plan2: TransformPlan,
    composite: RingModulus,
    inv_n: RingElement,
}

impl RebasePair {
    pub fn new(plan1: TransformPlan, plan2: TransformPlan) -> Result<Self> {
        if plan1.len() != plan2.len() {
            return Err(Error::LengthMismatch { expected: plan1.len(), actual: plan2.len() });
        }
        let composite = RingModulus::new(plan1.modulus().value() * plan2.modulus().value())?;
        let n = BigUint::from(plan1.len());
        let inv = mod_inverse(&n, composite.value())
            .ok_or_else(|| Error::NotInvertible { value: n.clone(), modulus: composite.value().clone() })?;
        let inv_n = composite.element(inv)?;
        Ok(RebasePair { plan1, plan2, composite, inv_n })
    }

    pub fn plan1(&self) -> &TransformPlan {
        &self.plan1
    }

    pub fn plan2(&self) -> &TransformPlan {
        &self.plan2
    }

    pub fn composite_modulus(&self) -> &RingModulus {
        &self.composite
    }

    /// `N⁻¹ mod M₁·M₂`.
    pub fn inv_n(&self) -> &RingElement {
        &self.inv_n
    }

    pub fn len(&self) -> usize {
        self.plan1.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn min_modulus(&self) -> &BigUint {
        self.plan1.modulus().value().min(self.plan2.modulus().value())
    }

    /// `s^{e mod N}` computed in the composite ring.
    fn composite_power(&self, s: &BigUint, e: usize) -> BigUint {
        pow_mod(s, &BigUint::from(e % self.len()), self.composite.value())
    }

    fn complement(&self, e: usize) -> usize {
        let n = self.len();
        (n - e % n) % n
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelDirection {
    /// `Φ(k,n) = Σ_i (s₂^k·s₁^{−n})^i`, maps base-`s₂` images to base-`s₁` images.
    Image,
    /// `Φ(n,i) = Σ_k (s₂^{−n}·s₁^i)^k`, maps base-`s₂` originals to base-`s₁` originals.
    Original,
}

/// `N×N` kernel table modulo `M₁·M₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    direction: KernelDirection,
    modulus: RingModulus,
    values: Vec<Vec<BigUint>>,
}

impl Kernel {
    pub fn direction(&self) -> KernelDirection {
        self.direction
    }

    pub fn modulus(&self) -> &RingModulus {
        &self.modulus
    }

    pub fn values(&self) -> &[Vec<BigUint>] {
        &self.values
    }

    pub fn entry(&self, row: usize, col: usize) -> RingElement {
        self.modulus.reduce(&self.values[row][col])
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|r| (0..n).all(|c| self.values[r][c] == self.values[c][r]))
    }
}

/// `Σ_{i<N} r^i mod M` by direct summation.
fn geometric_series(r: &BigUint, len: usize, m: &BigUint) -> BigUint {
    let mut term = BigUint::one() % m;
    let mut sum = BigUint::zero();
    for _ in 0..len {
        sum = (sum + &term) % m;
        term = term * r % m;
    }
    sum
}

fn ratio(pair: &RebasePair, direction: KernelDirection, row: usize, col: usize) -> BigUint {
    let (s1, s2) = (pair.plan1.s(), pair.plan2.s());
    let m = pair.composite.value();
    match direction {
        KernelDirection::Image => pair.composite_power(s2, row) * pair.composite_power(s1, pair.complement(col)) % m,
        KernelDirection::Original => pair.composite_power(s2, pair.complement(row)) * pair.composite_power(s1, col) % m,
    }
}

/// Builds the kernel table.
pub fn build_kernel(pair: &RebasePair, direction: KernelDirection) -> Kernel {
    build_kernel_threaded(pair, direction, 1)
}

/// [`build_kernel`] with rows spread over `threads` workers.
pub fn build_kernel_threaded(pair: &RebasePair, direction: KernelDirection, threads: usize) -> Kernel {
    let n = pair.len();
    let m = pair.composite.value();
    let values = map_indices(n, threads, |row| {
        (0..n).map(|col| geometric_series(&ratio(pair, direction, row, col), n, m)).collect()
    });
    Kernel { direction, modulus: pair.composite.clone(), values }
}

/// Closed form `(r^N − 1)/(r − 1)` of a kernel entry, or `N` when `r ≡ 1`.
/// `None` when `r − 1` is not invertible modulo `M₁·M₂`.
pub fn kernel_entry_closed_form(
    pair: &RebasePair,
    direction: KernelDirection,
    row: usize,
    col: usize,
) -> Option<BigUint> {
    let m = pair.composite.value();
    let r = ratio(pair, direction, row, col);
    if r.is_one() {
        return Some(BigUint::from(pair.len()) % m);
    }
    let denom = (&r + m - 1u32) % m;
    let inv = mod_inverse(&denom, m)?;
    let numer = (pow_mod(&r, &BigUint::from(pair.len()), m) + m - 1u32) % m;
    Some(numer * inv % m)
}

fn lift(seq: &Sequence, target: &RingModulus) -> Result<Sequence> {
    Sequence::new(target.clone(), seq.values().to_vec())
}

fn check_input(pair: &RebasePair, seq: &Sequence, plan: &TransformPlan) -> Result<()> {
    if seq.modulus() != plan.modulus() {
        return Err(Error::ModulusMismatch {
            left: plan.modulus().value().clone(),
            right: seq.modulus().value().clone(),
        });
    }
    if seq.len() != pair.len() {
        return Err(Error::LengthMismatch { expected: pair.len(), actual: seq.len() });
    }
    Ok(())
}

fn check_small(pair: &RebasePair, original: &Sequence) -> Result<()> {
    let bound = pair.min_modulus();
    match original.values().iter().position(|v| v >= bound) {
        Some(index) => {
            Err(Error::ValueOutOfRange { index, value: original.values()[index].clone(), modulus: bound.clone() })
        }
        None => Ok(()),
    }
}

fn apply_kernel(pair: &RebasePair, kernel: &Kernel, input: &Sequence) -> Result<Sequence> {
    let lifted = lift(input, &pair.composite)?;
    let n = pair.len();
    let m = pair.composite.value();
    let values = (0..n)
        .map(|out| {
            let acc = (0..n).fold(BigUint::zero(), |acc, j| acc + &lifted.values()[j] * &kernel.values[j][out]);
            acc % m * pair.inv_n.residue() % m
        })
        .collect();
    Sequence::new(pair.composite.clone(), values)
}

fn compare_mod(kernel: &Sequence, direct: &Sequence, m: &BigUint) -> Result<()> {
    for (index, (k, d)) in kernel.values().iter().zip(direct.values()).enumerate() {
        if k % m != *d {
            return Err(Error::ConsistencyViolation { index, kernel: k % m, direct: d.clone() });
        }
    }
    Ok(())
}

/// Kernel route `X₁(n) = N⁻¹·Σ_k X₂(k)·Φ(k,n) mod M₁·M₂` without any check.
pub fn rebase_image_unchecked(pair: &RebasePair, image2: &Sequence) -> Result<Sequence> {
    check_input(pair, image2, &pair.plan2)?;
    apply_kernel(pair, &build_kernel(pair, KernelDirection::Image), image2)
}

/// Kernel route for images, checked against `forward(plan1, original)` modulo `M₁`.
///
/// The original `inverse(plan2, image2)` must have entries below
/// `min(M₁, M₂)`.
pub fn rebase_image(pair: &RebasePair, image2: &Sequence) -> Result<Sequence> {
    check_input(pair, image2, &pair.plan2)?;
    let original = inverse(&pair.plan2, image2)?;
    check_small(pair, &original)?;
    let result = rebase_image_unchecked(pair, image2)?;
    let direct = forward(&pair.plan1, &lift(&original, pair.plan1.modulus())?)?;
    compare_mod(&result, &direct, pair.plan1.modulus().value())?;
    Ok(result)
}

/// Base-`s₁` image of the original behind `image2`, through the original.
pub fn reference_image(pair: &RebasePair, image2: &Sequence) -> Result<Sequence> {
    check_input(pair, image2, &pair.plan2)?;
    let original = inverse(&pair.plan2, image2)?;
    check_small(pair, &original)?;
    forward(&pair.plan1, &lift(&original, pair.plan1.modulus())?)
}

/// Kernel route `x₁(i) = N⁻¹·Σ_n x₂(n)·Φ(n,i) mod M₁·M₂` without any check.
pub fn rebase_original_unchecked(pair: &RebasePair, original2: &Sequence) -> Result<Sequence> {
    check_input(pair, original2, &pair.plan2)?;
    apply_kernel(pair, &build_kernel(pair, KernelDirection::Original), original2)
}

/// Kernel route for originals: the base-`s₁` original sharing the base-`s₂`
/// image of `original2`. Checked against [`reference_original`] modulo `M₁`.
pub fn rebase_original(pair: &RebasePair, original2: &Sequence) -> Result<Sequence> {
    let direct = reference_original(pair, original2)?;
    let result = rebase_original_unchecked(pair, original2)?;
    compare_mod(&result, &direct, pair.plan1.modulus().value())?;
    Ok(result)
}

/// `inverse(plan1, forward(plan2, original2))` with the image carried over
/// by value.
pub fn reference_original(pair: &RebasePair, original2: &Sequence) -> Result<Sequence> {
    check_input(pair, original2, &pair.plan2)?;
    check_small(pair, original2)?;
    let image = forward(&pair.plan2, original2)?;
    let carried = Sequence::reduced(pair.plan1.modulus(), image.values());
    inverse(&pair.plan1, &carried)
}
