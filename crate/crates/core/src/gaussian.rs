//! Transform over Gaussian integers with a Gaussian-integer modulus.
//!
//! The base is `ṡ = a + jb` with `gcd(a, b) = 1`, the length `N` is prime and
//! the modulus is `M̂ = Σ_{m<N} ṡ^m`. Residues are canonicalised by
//! nearest-integer division by `M̂` with ties rounded toward zero.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bigring::{mod_inverse, RingModulus};
use crate::error::{Error, Result};
use crate::parallel::map_indices;
use crate::plan::is_prime;
use crate::transform::Sign;

/// `re + j·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianElement {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianElement {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianElement { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussianElement::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianElement::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &GaussianElement) -> GaussianElement {
        GaussianElement { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn sub(&self, other: &GaussianElement) -> GaussianElement {
        GaussianElement { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    pub fn mul(&self, other: &GaussianElement) -> GaussianElement {
        gauss_mul(self, other)
    }

    pub fn conj(&self) -> GaussianElement {
        GaussianElement { re: self.re.clone(), im: -&self.im }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.re, self.im)
    }
}

/// Unreduced product.
pub fn gauss_mul(a: &GaussianElement, b: &GaussianElement) -> GaussianElement {
    GaussianElement { re: &a.re * &b.re - &a.im * &b.im, im: &a.re * &b.im + &a.im * &b.re }
}

/// Unreduced power.
pub fn gauss_pow(base: &GaussianElement, exp: u64) -> GaussianElement {
    let mut result = GaussianElement::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = gauss_mul(&result, &b);
        }
        e >>= 1;
        if e > 0 {
            b = gauss_mul(&b, &b);
        }
    }
    result
}

/// Nearest integer to `t / n` for `n > 0`, ties toward zero.
fn round_nearest(t: &BigInt, n: &BigInt) -> BigInt {
    let (f, r) = t.div_mod_floor(n);
    let twice: BigInt = r * 2;
    match twice.cmp(n) {
        std::cmp::Ordering::Less => f,
        std::cmp::Ordering::Greater => f + 1,
        std::cmp::Ordering::Equal if f.is_negative() => f + 1,
        std::cmp::Ordering::Equal => f,
    }
}

/// Canonical residue of `z` modulo `modulus`.
pub fn gauss_reduce(z: &GaussianElement, modulus: &GaussianElement) -> Result<GaussianElement> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let norm = modulus.norm();
    let t = gauss_mul(z, &modulus.conj());
    let q = GaussianElement { re: round_nearest(&t.re, &norm), im: round_nearest(&t.im, &norm) };
    Ok(z.sub(&gauss_mul(modulus, &q)))
}

/// `true` when `modulus` divides `z` exactly.
pub fn is_divisible(z: &GaussianElement, modulus: &GaussianElement) -> Result<bool> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let norm = modulus.norm();
    let t = gauss_mul(z, &modulus.conj());
    Ok((&t.re % &norm).is_zero() && (&t.im % &norm).is_zero())
}

/// Residue-class equality `a ≡ b (mod modulus)`.
pub fn congruent(a: &GaussianElement, b: &GaussianElement, modulus: &GaussianElement) -> Result<bool> {
    is_divisible(&a.sub(b), modulus)
}

/// Validated Gaussian plan.
#[derive(Clone, Debug)]
pub struct GaussianPlan {
    s: GaussianElement,
    len: usize,
    modulus: GaussianElement,
    norm: RingModulus,
    inv_n: GaussianElement,
    powers: Vec<GaussianElement>,
}

impl GaussianPlan {
    pub fn s(&self) -> &GaussianElement {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `M̂`.
    pub fn modulus(&self) -> &GaussianElement {
        &self.modulus
    }

    /// `‖M̂‖ = Re² + Im²`.
    pub fn norm(&self) -> &RingModulus {
        &self.norm
    }

    pub fn inv_n(&self) -> &GaussianElement {
        &self.inv_n
    }

    /// Reduced `ṡ^{e mod N}`.
    pub fn power(&self, e: usize) -> &GaussianElement {
        &self.powers[e % self.len]
    }

    pub fn reduce(&self, z: &GaussianElement) -> GaussianElement {
        gauss_reduce(z, &self.modulus).expect("plan modulus is nonzero")
    }

    pub fn congruent(&self, a: &GaussianElement, b: &GaussianElement) -> bool {
        congruent(a, b, &self.modulus).expect("plan modulus is nonzero")
    }
}

/// Builds and validates a Gaussian plan.
pub fn make_gaussian_plan(s: GaussianElement, len: usize) -> Result<GaussianPlan> {
    if !s.re.gcd(&s.im).is_one() {
        return Err(Error::InvalidArgument(format!("base components must be coprime, got ({s})")));
    }
    if !is_prime(len as u64) {
        return Err(Error::InvalidArgument(format!("transform length must be prime, got {len}")));
    }
    let mut modulus = GaussianElement::zero();
    let mut term = GaussianElement::one();
    for _ in 0..len {
        modulus = modulus.add(&term);
        term = gauss_mul(&term, &s);
    }
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let norm_value = modulus.norm().to_biguint().expect("norm is nonnegative");
    let norm = RingModulus::new(norm_value)?;

    let mut powers = Vec::with_capacity(len);
    let mut acc = gauss_reduce(&GaussianElement::one(), &modulus)?;
    for _ in 0..len {
        powers.push(acc.clone());
        acc = gauss_reduce(&gauss_mul(&acc, &s), &modulus)?;
    }
    let one = GaussianElement::one();
    let order_error = |found: String| Error::OrderMismatch {
        s: format!("({s})"),
        modulus: format!("({modulus})"),
        expected: len,
        found,
    };
    if !congruent(&acc, &one, &modulus)? {
        return Err(order_error(format!("not a divisor of N (s^{len} = ({acc}))")));
    }
    // N is prime, so 1 is the only proper divisor
    if congruent(&powers[1], &one, &modulus)? {
        return Err(order_error("1".into()));
    }
    for d in 1..len {
        let sum = (0..len).fold(GaussianElement::zero(), |sum, k| sum.add(&powers[d * k % len]));
        if !is_divisible(&sum, &modulus)? {
            return Err(Error::ExistenceConditionFailed(d));
        }
    }

    let n_big = num_bigint::BigUint::from(len);
    let u = mod_inverse(&n_big, norm.value())
        .ok_or_else(|| Error::NotInvertible { value: n_big.clone(), modulus: norm.value().clone() })?;
    let inv_n = gauss_reduce(&GaussianElement::new(BigInt::from(u), 0), &modulus)?;
    debug_assert!(congruent(&gauss_mul(&inv_n, &GaussianElement::new(len, 0)), &one, &modulus)?);

    Ok(GaussianPlan { s, len, modulus, norm, inv_n, powers })
}

fn check_input(plan: &GaussianPlan, seq: &[GaussianElement]) -> Result<()> {
    if seq.len() != plan.len {
        return Err(Error::LengthMismatch { expected: plan.len, actual: seq.len() });
    }
    let bound = BigInt::from(plan.norm.value().clone());
    for (index, z) in seq.iter().enumerate() {
        if z.re.abs() >= bound || z.im.abs() >= bound {
            return Err(Error::ComponentOutOfRange {
                index,
                value: format!("({z})"),
                bound: plan.norm.value().clone(),
            });
        }
    }
    Ok(())
}

fn weighted_sum(plan: &GaussianPlan, seq: &[GaussianElement], out: usize, sign: Sign) -> GaussianElement {
    let n = plan.len;
    let sum = seq.iter().enumerate().fold(GaussianElement::zero(), |acc, (j, z)| {
        let e = out * j % n;
        let e = if sign == Sign::Minus { (n - e) % n } else { e };
        acc.add(&gauss_mul(z, &plan.powers[e]))
    });
    plan.reduce(&sum)
}

/// `Ż(k) = Σ_i ż(i)·ṡ^{−(k·i) mod N}`, reduced.
pub fn gauss_forward(plan: &GaussianPlan, z: &[GaussianElement]) -> Result<Vec<GaussianElement>> {
    gauss_forward_threaded(plan, z, 1)
}

/// `ż(i) = N⁻¹·Σ_k Ż(k)·ṡ^{(k·i) mod N}`, reduced.
pub fn gauss_inverse(plan: &GaussianPlan, image: &[GaussianElement]) -> Result<Vec<GaussianElement>> {
    gauss_inverse_threaded(plan, image, 1)
}

pub fn gauss_forward_threaded(
    plan: &GaussianPlan,
    z: &[GaussianElement],
    threads: usize,
) -> Result<Vec<GaussianElement>> {
    check_input(plan, z)?;
    Ok(map_indices(plan.len, threads, |k| weighted_sum(plan, z, k, Sign::Minus)))
}

pub fn gauss_inverse_threaded(
    plan: &GaussianPlan,
    image: &[GaussianElement],
    threads: usize,
) -> Result<Vec<GaussianElement>> {
    check_input(plan, image)?;
    Ok(map_indices(plan.len, threads, |i| {
        let sum = weighted_sum(plan, image, i, Sign::Plus);
        plan.reduce(&gauss_mul(&sum, &plan.inv_n))
    }))
}
