//! Transform theorems as executable operations.
//!
//! Each operation computes its result through the transform and, under
//! [`Check::Assert`], also evaluates the other side of the corresponding
//! identity directly and reports a [`Error::TheoremViolation`] on mismatch.
//!
//! [`convolve_exact_integers`] is the consumer-facing piece: exact integer
//! polynomial multiplication built on the original-convolution theorem.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bigring::RingElement;
use crate::error::{Error, Result};
use crate::plan::{smallest_plan, SearchConstraints, TransformPlan};
use crate::transform::{forward, inverse, weight, Sequence, Sign};

/// Whether theorem operations evaluate both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Assert,
    Skip,
}

impl Default for Check {
    fn default() -> Self {
        if cfg!(debug_assertions) {
            Check::Assert
        } else {
            Check::Skip
        }
    }
}

fn expect_equal(check: Check, what: &str, lhs: &Sequence, rhs: &Sequence) -> Result<()> {
    if check == Check::Assert && lhs != rhs {
        return Err(Error::TheoremViolation(format!("{what}: {:?} != {:?}", lhs.values(), rhs.values())));
    }
    Ok(())
}

fn same_shape(a: &Sequence, b: &Sequence) -> Result<()> {
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch { left: a.modulus().value().clone(), right: b.modulus().value().clone() });
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), actual: b.len() });
    }
    Ok(())
}

/// Direct cyclic convolution `Σ_i a(i)·b((n − i) mod N)`.
pub fn cyclic_convolution_direct(a: &Sequence, b: &Sequence) -> Result<Sequence> {
    same_shape(a, b)?;
    let n = a.len() as i64;
    let m = a.modulus().value();
    let values = (0..n)
        .map(|out| (0..n).fold(BigUint::zero(), |acc, i| acc + &a.values()[i as usize] * b.at(out - i)) % m)
        .collect();
    Sequence::new(a.modulus().clone(), values)
}

/// Multiplies `x(i)` by `s^{±c·i}`.
///
/// The image of the result is the image of `x` rotated: `X((k − c) mod N)`
/// for `+`, `X((k + c) mod N)` for `−`.
pub fn shift_image(plan: &TransformPlan, original: &Sequence, c: i64, sign: Sign, check: Check) -> Result<Sequence> {
    let image = forward(plan, original)?;
    let m = plan.modulus().value();
    let values =
        (0..plan.len()).map(|i| &original.values()[i] * weight(plan, c, i as i64, sign).residue() % m).collect();
    let weighted = Sequence::new(plan.modulus().clone(), values)?;
    if check == Check::Assert {
        let shift = if sign == Sign::Plus { c } else { -c };
        expect_equal(check, "shift theorem", &forward(plan, &weighted)?, &image.rotate(shift))?;
    }
    Ok(weighted)
}

/// Multiplies `X(k)` by `s^{±c·k}`; the original becomes `x((i ± c) mod N)`.
pub fn shift_original(plan: &TransformPlan, image: &Sequence, c: i64, sign: Sign, check: Check) -> Result<Sequence> {
    let original = inverse(plan, image)?;
    let m = plan.modulus().value();
    let values = (0..plan.len()).map(|k| &image.values()[k] * weight(plan, c, k as i64, sign).residue() % m).collect();
    let weighted = Sequence::new(plan.modulus().clone(), values)?;
    if check == Check::Assert {
        let shift = if sign == Sign::Plus { -c } else { c };
        expect_equal(check, "converse shift theorem", &inverse(plan, &weighted)?, &original.rotate(shift))?;
    }
    Ok(weighted)
}

/// Cyclic convolution of two originals via the product of their images.
pub fn cyclic_convolve(plan: &TransformPlan, x: &Sequence, y: &Sequence, check: Check) -> Result<Sequence> {
    let product = forward(plan, x)?.mul(&forward(plan, y)?)?;
    let result = inverse(plan, &product)?;
    if check == Check::Assert {
        expect_equal(check, "original convolution theorem", &result, &cyclic_convolution_direct(x, y)?)?;
    }
    Ok(result)
}

/// Image of the pointwise product `x ⊙ y`, equal to
/// `N⁻¹ · Σ_k X(k)·Y((n − k) mod N)`.
pub fn image_convolution_of_product(
    plan: &TransformPlan,
    x: &Sequence,
    y: &Sequence,
    check: Check,
) -> Result<Sequence> {
    let result = forward(plan, &x.mul(y)?)?;
    if check == Check::Assert {
        let images = cyclic_convolution_direct(&forward(plan, x)?, &forward(plan, y)?)?;
        expect_equal(check, "image convolution theorem", &result, &images.scale(plan.inv_n())?)?;
    }
    Ok(result)
}

/// `Σ_i y(i)·y((n − i) mod N)`, the cyclic self-convolution of the original.
///
/// Checked against `N⁻¹ · Σ_k Y(k)²·s^{(k·n) mod N}`.
pub fn autocorrelation(plan: &TransformPlan, y: &Sequence, check: Check) -> Result<Sequence> {
    let result = cyclic_convolution_direct(y, y)?;
    if check == Check::Assert {
        let image = forward(plan, y)?;
        let energy = image.mul(&image)?;
        expect_equal(check, "Wiener-Khinchin identity", &result, &inverse(plan, &energy)?)?;
    }
    Ok(result)
}

/// Image of the squared original, `Σ_i y(i)²·s^{−(n·i) mod N}`.
pub fn energy_image(plan: &TransformPlan, y: &Sequence) -> Result<Sequence> {
    forward(plan, &y.mul(y)?)
}

/// `Σ_k Y(k)·Y((n − k) mod N)`, the cyclic self-convolution of the image.
///
/// Checked against `N · Σ_i y(i)²·s^{−(n·i) mod N}` where `y` is the
/// original of `image`.
pub fn image_autocorrelation(plan: &TransformPlan, image: &Sequence, check: Check) -> Result<Sequence> {
    let result = cyclic_convolution_direct(image, image)?;
    if check == Check::Assert {
        let y = inverse(plan, image)?;
        let rhs = energy_image(plan, &y)?.scale(&plan.n_element())?;
        expect_equal(check, "converse Wiener-Khinchin identity", &result, &rhs)?;
    }
    Ok(result)
}

fn sum_of_squares(seq: &Sequence) -> RingElement {
    let total = seq.values().iter().fold(BigUint::zero(), |acc, v| acc + v * v);
    seq.modulus().reduce(&total)
}

/// `(Σ_i y(i)², Σ_k Y(k)²)` with `Y` the image of `y`.
///
/// The two sides are returned as-is for the caller to compare. In general
/// they differ: the identity that holds is [`parseval_reflected`].
pub fn parseval_check(plan: &TransformPlan, y: &Sequence) -> Result<(RingElement, RingElement)> {
    let image = forward(plan, y)?;
    Ok((sum_of_squares(y), sum_of_squares(&image)))
}

/// `(N·Σ_i y(i)², Σ_k Y(k)·Y((−k) mod N))`. Always equal.
pub fn parseval_reflected(plan: &TransformPlan, y: &Sequence) -> Result<(RingElement, RingElement)> {
    let image = forward(plan, y)?;
    let n = image.len() as i64;
    let rhs = (0..n).fold(BigUint::zero(), |acc, k| acc + image.at(k) * image.at(-k));
    let lhs = sum_of_squares(y).mul(&plan.n_element())?;
    Ok((lhs, plan.modulus().reduce(&rhs)))
}

/// Upper bound on every coefficient of the linear convolution of `a` and `b`:
/// `min(Σa·max b, Σb·max a)`.
pub fn exact_bound(a: &[BigUint], b: &[BigUint]) -> BigUint {
    let sum = |v: &[BigUint]| v.iter().fold(BigUint::zero(), |acc, x| acc + x);
    let max = |v: &[BigUint]| v.iter().max().cloned().unwrap_or_default();
    let left = sum(a) * max(b);
    let right = sum(b) * max(a);
    left.min(right)
}

const WINDOW: usize = 64;
const MAX_SEARCH_LEN: usize = 4096;

/// Selects the smallest-modulus plan able to hold the exact product of `a`
/// and `b`.
pub fn plan_for_product(a: &[BigUint], b: &[BigUint]) -> Result<TransformPlan> {
    let out_len = (a.len() + b.len()).saturating_sub(1).max(2);
    let min_m = (exact_bound(a, b) + 1u32).max(BigUint::from(2u32));
    let mut max_n = out_len + WINDOW - 1;
    loop {
        let constraints = SearchConstraints::new(out_len, min_m.clone()).with_max_n(max_n);
        match smallest_plan(&constraints) {
            Ok(plan) => return Ok(plan),
            Err(Error::NoPlanFound(_)) if max_n < MAX_SEARCH_LEN => max_n = (max_n * 2).min(MAX_SEARCH_LEN),
            Err(e) => return Err(e),
        }
    }
}

/// Exact linear convolution (polynomial product) of nonnegative integers.
pub fn convolve_exact_integers(a: &[BigUint], b: &[BigUint]) -> Result<Vec<BigUint>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let plan = plan_for_product(a, b)?;
    convolve_exact_with_plan(&plan, a, b)
}

/// [`convolve_exact_integers`] under a caller-chosen plan. Fails if the plan
/// is too short or its modulus does not exceed the coefficient bound.
pub fn convolve_exact_with_plan(plan: &TransformPlan, a: &[BigUint], b: &[BigUint]) -> Result<Vec<BigUint>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let out_len = a.len() + b.len() - 1;
    if out_len > plan.len() {
        return Err(Error::LengthMismatch { expected: plan.len(), actual: out_len });
    }
    let bound = exact_bound(a, b);
    if &bound >= plan.modulus().value() {
        return Err(Error::InvalidArgument(format!(
            "modulus {} does not exceed the coefficient bound {bound}",
            plan.modulus()
        )));
    }
    let pad = |v: &[BigUint]| {
        let mut values = v.to_vec();
        values.resize(plan.len(), BigUint::zero());
        Sequence::new(plan.modulus().clone(), values)
    };
    let result = cyclic_convolve(plan, &pad(a)?, &pad(b)?, Check::Skip)?;
    Ok(result.into_values().into_iter().take(out_len).collect())
}

/// `μ·x` checked against `μ·X` on the image side.
pub fn scale_original(plan: &TransformPlan, x: &Sequence, mu: &RingElement, check: Check) -> Result<Sequence> {
    let scaled = x.scale(mu)?;
    if check == Check::Assert {
        expect_equal(check, "linearity", &forward(plan, &scaled)?, &forward(plan, x)?.scale(mu)?)?;
    }
    Ok(scaled)
}

/// `x + y` checked against `X + Y`.
pub fn add_originals(plan: &TransformPlan, x: &Sequence, y: &Sequence, check: Check) -> Result<Sequence> {
    let sum = x.add(y)?;
    if check == Check::Assert {
        expect_equal(check, "sum theorem", &forward(plan, &sum)?, &forward(plan, x)?.add(&forward(plan, y)?)?)?;
    }
    Ok(sum)
}
