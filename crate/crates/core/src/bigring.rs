//! Residue-ring arithmetic over arbitrary-precision integers.
//!
//! Every [`RingElement`] holds its canonical least nonnegative residue, so two
//! elements are equal exactly when their residues and moduli are equal.
//! Exponents are plain integers; reducing an exponent modulo the transform
//! length is the caller's business (see [`exponent_reduce`]).

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A ring modulus `M ≥ 2`. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingModulus(Arc<BigUint>);

impl RingModulus {
    pub fn new(value: impl Into<BigUint>) -> Result<Self> {
        let value = value.into();
        if value < BigUint::from(2u32) {
            return Err(Error::InvalidModulus(value));
        }
        Ok(RingModulus(Arc::new(value)))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    /// Wraps `value` as an element, rejecting values that are not already
    /// canonical residues.
    pub fn element(&self, value: impl Into<BigUint>) -> Result<RingElement> {
        let value = value.into();
        if &value >= self.value() {
            return Err(Error::ValueOutOfRange { index: 0, value, modulus: self.value().clone() });
        }
        Ok(RingElement { residue: value, modulus: self.clone() })
    }

    /// Reduces an arbitrary nonnegative integer into the ring.
    pub fn reduce(&self, value: &BigUint) -> RingElement {
        RingElement { residue: value % self.value(), modulus: self.clone() }
    }

    /// Reduces a signed integer, adding a multiple of `M` to negative values.
    pub fn reduce_signed(&self, value: &BigInt) -> RingElement {
        RingElement { residue: reduce_signed(value, self.value()), modulus: self.clone() }
    }

    pub fn zero(&self) -> RingElement {
        RingElement { residue: BigUint::zero(), modulus: self.clone() }
    }

    pub fn one(&self) -> RingElement {
        RingElement { residue: BigUint::one(), modulus: self.clone() }
    }
}

impl fmt::Display for RingModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue `0 ≤ r < M` together with its modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    residue: BigUint,
    modulus: RingModulus,
}

impl RingElement {
    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> &RingModulus {
        &self.modulus
    }

    pub fn into_residue(self) -> BigUint {
        self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    fn same_ring(&self, other: &RingElement) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.value().clone(),
                right: other.modulus.value().clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(self.modulus.reduce(&(&self.residue + &other.residue)))
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        let m = self.modulus.value();
        Ok(self.modulus.reduce(&(&self.residue + m - &other.residue)))
    }

    pub fn neg(&self) -> RingElement {
        let m = self.modulus.value();
        self.modulus.reduce(&(m - &self.residue))
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(self.modulus.reduce(&(&self.residue * &other.residue)))
    }

    pub fn pow(&self, exp: &BigUint) -> RingElement {
        RingElement { residue: pow_mod(&self.residue, exp, self.modulus.value()), modulus: self.modulus.clone() }
    }

    pub fn pow_u64(&self, exp: u64) -> RingElement {
        self.pow(&BigUint::from(exp))
    }

    pub fn inv(&self) -> Result<RingElement> {
        let m = self.modulus.value();
        match mod_inverse(&self.residue, m) {
            Some(r) => Ok(RingElement { residue: r, modulus: self.modulus.clone() }),
            None => Err(Error::NotInvertible { value: self.residue.clone(), modulus: m.clone() }),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

pub fn ring_add(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.add(b)
}

pub fn ring_mul(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.mul(b)
}

pub fn ring_pow(base: &RingElement, exp: &BigUint) -> RingElement {
    base.pow(exp)
}

pub fn ring_inv(a: &RingElement) -> Result<RingElement> {
    a.inv()
}

/// Left-to-right square-and-multiply.
pub fn pow_mod(base: &BigUint, exp: &BigUint, modulus: &BigUint) -> BigUint {
    let mut acc = BigUint::one() % modulus;
    let base = base % modulus;
    for bit in (0..exp.bits()).rev() {
        acc = &acc * &acc % modulus;
        if exp.bit(bit) {
            acc = &acc * &base % modulus;
        }
    }
    acc
}

/// Extended Euclid: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b)`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_x, mut x) = (BigInt::one(), BigInt::zero());
    let (mut old_y, mut y) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_x = &old_x - &q * &x;
        old_x = std::mem::replace(&mut x, next_x);
        let next_y = &old_y - &q * &y;
        old_y = std::mem::replace(&mut y, next_y);
    }
    if old_r.sign() == Sign::Minus {
        (-old_r, -old_x, -old_y)
    } else {
        (old_r, old_x, old_y)
    }
}

/// Inverse of `a` modulo `m`, or `None` when `gcd(a, m) ≠ 1`.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return None;
    }
    let a = BigInt::from(a % m);
    let mi = BigInt::from(m.clone());
    let (g, x, _) = extended_gcd(&a, &mi);
    if !g.is_one() {
        return None;
    }
    Some(reduce_signed(&x, m))
}

/// Canonical residue of a signed integer.
pub fn reduce_signed(value: &BigInt, modulus: &BigUint) -> BigUint {
    let m = BigInt::from(modulus.clone());
    let r = value.mod_floor(&m);
    r.to_biguint().expect("mod_floor with positive modulus is nonnegative")
}

/// Exact `Σ_{m=0}^{count-1} s^m`, computed as `(s^count − 1)/(s − 1)`.
pub fn geometric_sum(s: &BigUint, count: u64) -> BigUint {
    if count == 0 {
        return BigUint::zero();
    }
    if s.is_one() {
        return BigUint::from(count);
    }
    let power = num_traits::pow::pow(s.clone(), count as usize);
    let (q, r) = (power - 1u32).div_rem(&(s - 1u32));
    debug_assert!(r.is_zero());
    q
}

/// The geometric-sum modulus `Σ_{m<count} s^m`; fails for `count = 1`
/// because the sum is then 1.
pub fn geometric_modulus(s: &BigUint, count: u64) -> Result<RingModulus> {
    RingModulus::new(geometric_sum(s, count))
}

/// Computes `s^(x mod p) mod M` and checks it against `s^x mod M`.
///
/// `M` must be `s^p − 1` or `Σ_{m<p} s^m`; for either the congruence is a
/// theorem, so a mismatch means the triple itself is wrong.
pub fn exponent_reduce(s: &BigUint, x: &BigUint, p: u64, modulus: &RingModulus) -> Result<RingElement> {
    if p == 0 {
        return Err(Error::InvalidArgument("period p must be at least 1".into()));
    }
    let full = num_traits::pow::pow(s.clone(), p as usize) - 1u32;
    let m = modulus.value();
    if *m != full && *m != geometric_sum(s, p) {
        return Err(Error::InvalidArgument(format!(
            "modulus {m} is neither s^p - 1 nor the geometric sum for s={s}, p={p}"
        )));
    }
    let reduced = x % BigUint::from(p);
    let lhs = pow_mod(s, &reduced, m);
    let rhs = pow_mod(s, x, m);
    if lhs != rhs {
        return Err(Error::TheoremViolation(format!("{s}^({x} mod {p}) = {lhs} but {s}^{x} = {rhs} (mod {m})")));
    }
    Ok(RingElement { residue: lhs, modulus: modulus.clone() })
}
