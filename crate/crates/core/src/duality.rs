//! Complement duality.
//!
//! Identifying the additive and multiplicative neutral elements gives the
//! complement `a′ = (1 − a) mod M`. Sum and product then become expressible
//! through each other, `a·b = a + b − (a′·b′)′`, and every transform theorem
//! that uses a sum or a product gets dual forms. [`dual_theorem_suite`]
//! evaluates those forms on concrete sequences.
//!
//! The energy identities in their printed form all reduce to
//! `Σ y(i)² = Σ Y(k)²`, which is false in general (see
//! [`crate::theorems::parseval_check`]). The suite reports them as
//! [`IdentityKind::Stated`] and adds the reflected-pairing forms that hold as
//! [`IdentityKind::Corrected`].

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bigring::RingElement;
use crate::error::{Error, Result};
use crate::plan::TransformPlan;
use crate::theorems::{cyclic_convolution_direct, Check};
use crate::transform::{forward, Sequence};

/// `a` together with its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub of: RingElement,
    pub value: RingElement,
}

impl Complement {
    pub fn of(a: &RingElement) -> Self {
        Complement { of: a.clone(), value: complement(a) }
    }
}

/// `(1 − a) mod M`.
pub fn complement(a: &RingElement) -> RingElement {
    a.modulus().one().sub(a).expect("same modulus")
}

/// Elementwise complement.
pub fn complement_seq(seq: &Sequence) -> Sequence {
    let m = seq.modulus();
    let values: Vec<BigUint> = (0..seq.len()).map(|i| complement(&seq.get(i)).into_residue()).collect();
    Sequence::new(m.clone(), values).expect("residues are reduced")
}

fn expect(check: Check, what: &str, got: &RingElement, want: &RingElement) -> Result<()> {
    if check == Check::Assert && got != want {
        return Err(Error::TheoremViolation(format!("{what}: {} != {}", got.residue(), want.residue())));
    }
    Ok(())
}

/// `(a′·b′)′`, checked against `a + b − a·b`.
pub fn de_morgan_product(a: &RingElement, b: &RingElement, check: Check) -> Result<RingElement> {
    let result = complement(&complement(a).mul(&complement(b))?);
    let direct = a.add(b)?.sub(&a.mul(b)?)?;
    expect(check, "de Morgan product", &result, &direct)?;
    Ok(result)
}

/// `a + b − (a′·b′)′`, checked against `a·b`.
pub fn dual_product(a: &RingElement, b: &RingElement, check: Check) -> Result<RingElement> {
    let result = a.add(b)?.sub(&de_morgan_product(a, b, Check::Skip)?)?;
    expect(check, "dual product", &result, &a.mul(b)?)?;
    Ok(result)
}

/// `a·b + (a′·b′)′`, checked against `a + b`.
pub fn dual_sum(a: &RingElement, b: &RingElement, check: Check) -> Result<RingElement> {
    let result = a.mul(b)?.add(&de_morgan_product(a, b, Check::Skip)?)?;
    expect(check, "dual sum", &result, &a.add(b)?)?;
    Ok(result)
}

fn seq_map2(
    a: &Sequence,
    b: &Sequence,
    f: impl Fn(&RingElement, &RingElement) -> Result<RingElement>,
) -> Result<Sequence> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), actual: b.len() });
    }
    let values =
        (0..a.len()).map(|i| f(&a.get(i), &b.get(i)).map(RingElement::into_residue)).collect::<Result<Vec<_>>>()?;
    Sequence::new(a.modulus().clone(), values)
}

/// Elementwise `a·b + (a′·b′)′`.
pub fn dual_sum_seq(a: &Sequence, b: &Sequence) -> Result<Sequence> {
    seq_map2(a, b, |x, y| dual_sum(x, y, Check::Skip))
}

/// Elementwise `a + b − (a′·b′)′`.
pub fn dual_product_seq(a: &Sequence, b: &Sequence) -> Result<Sequence> {
    seq_map2(a, b, |x, y| dual_product(x, y, Check::Skip))
}

fn dual_scale_seq(mu: &RingElement, a: &Sequence) -> Result<Sequence> {
    let values = (0..a.len())
        .map(|i| dual_product(mu, &a.get(i), Check::Skip).map(RingElement::into_residue))
        .collect::<Result<Vec<_>>>()?;
    Sequence::new(a.modulus().clone(), values)
}

/// Whether a row checks an identity as stated or a corrected form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    Stated,
    Corrected,
}

/// One evaluated identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRow {
    pub name: &'static str,
    pub kind: IdentityKind,
    pub lhs: Vec<BigUint>,
    pub rhs: Vec<BigUint>,
}

impl IdentityRow {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualityReport {
    pub rows: Vec<IdentityRow>,
}

impl DualityReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(IdentityRow::holds)
    }

    pub fn failing(&self) -> impl Iterator<Item = &IdentityRow> {
        self.rows.iter().filter(|r| !r.holds())
    }

    pub fn row(&self, name: &str) -> Option<&IdentityRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

/// `N⁻¹·(Σ_k A(k) + Σ_k B(n−k) − Σ_k (A′(k)·B′(n−k))′)` for every `n`.
fn dual_image_convolution(plan: &TransformPlan, a: &Sequence, b: &Sequence) -> Result<Sequence> {
    let n = a.len() as i64;
    let m = plan.modulus();
    let values = (0..n)
        .map(|out| {
            let mut acc = m.zero();
            for k in 0..n {
                let bk = m.reduce(b.at(out - k));
                acc = acc.add(&a.get(k as usize))?.add(&bk)?.sub(&de_morgan_product(
                    &a.get(k as usize),
                    &bk,
                    Check::Skip,
                )?)?;
            }
            Ok(acc.mul(plan.inv_n())?.into_residue())
        })
        .collect::<Result<Vec<_>>>()?;
    Sequence::new(m.clone(), values)
}

/// `Σ [(a′)²]′ = Σ (2a − a²)`, the dual of the energy.
fn complement_square_sum(seq: &Sequence) -> Result<RingElement> {
    let m = seq.modulus();
    (0..seq.len()).try_fold(m.zero(), |acc, i| {
        let c = complement(&seq.get(i));
        acc.add(&complement(&c.mul(&c)?))
    })
}

/// `2·Σ a − Σ [(a′)²]′`.
fn dual_energy(seq: &Sequence) -> Result<RingElement> {
    let two = seq.modulus().reduce(&BigUint::from(2u32));
    two.mul(&seq.sum())?.sub(&complement_square_sum(seq)?)
}

fn energy(seq: &Sequence) -> RingElement {
    let total = seq.values().iter().fold(BigUint::zero(), |acc, v| acc + v * v);
    seq.modulus().reduce(&total)
}

/// `Σ_k A(k)·A(−k)` and its dual `Σ_k [A(k) + A(−k) − (A′(k)·A′(−k))′]`.
fn reflected(seq: &Sequence) -> Result<(RingElement, RingElement)> {
    let m = seq.modulus();
    let n = seq.len() as i64;
    let mut plain = m.zero();
    let mut dual = m.zero();
    for k in 0..n {
        let (a, b) = (m.reduce(seq.at(k)), m.reduce(seq.at(-k)));
        plain = plain.add(&a.mul(&b)?)?;
        dual = dual.add(&dual_product(&a, &b, Check::Skip)?)?;
    }
    Ok((plain, dual))
}

fn row(name: &'static str, kind: IdentityKind, lhs: &Sequence, rhs: &Sequence) -> IdentityRow {
    IdentityRow { name, kind, lhs: lhs.values().to_vec(), rhs: rhs.values().to_vec() }
}

fn scalar_row(name: &'static str, kind: IdentityKind, lhs: &RingElement, rhs: &RingElement) -> IdentityRow {
    IdentityRow { name, kind, lhs: vec![lhs.residue().clone()], rhs: vec![rhs.residue().clone()] }
}

/// Evaluates every dual theorem form on `x`, `y` and the scalar `mu`.
///
/// Energy rows use `y` alone.
pub fn dual_theorem_suite(plan: &TransformPlan, x: &Sequence, y: &Sequence, mu: &RingElement) -> Result<DualityReport> {
    use IdentityKind::{Corrected, Stated};
    let big_x = forward(plan, x)?;
    let big_y = forward(plan, y)?;
    let mut rows = Vec::new();

    let sum_orig = forward(plan, &x.add(y)?)?;
    let dual_sum_orig = forward(plan, &dual_sum_seq(x, y)?)?;
    let dual_sum_img = dual_sum_seq(&big_x, &big_y)?;
    rows.push(row("sum, dual image side", Stated, &sum_orig, &dual_sum_img));
    rows.push(row("sum, dual original side", Stated, &dual_sum_orig, &big_x.add(&big_y)?));
    rows.push(row("sum, dual on both sides", Stated, &dual_sum_orig, &dual_sum_img));

    let scaled_orig = forward(plan, &x.scale(mu)?)?;
    let dual_scaled_orig = forward(plan, &dual_scale_seq(mu, x)?)?;
    let dual_scaled_img = dual_scale_seq(mu, &big_x)?;
    rows.push(row("linearity, dual image side", Stated, &scaled_orig, &dual_scaled_img));
    rows.push(row("linearity, dual original side", Stated, &dual_scaled_orig, &big_x.scale(mu)?));
    rows.push(row("linearity, dual on both sides", Stated, &dual_scaled_orig, &dual_scaled_img));

    let product_img = forward(plan, &x.mul(y)?)?;
    let dual_product_img = forward(plan, &dual_product_seq(x, y)?)?;
    let conv_img = cyclic_convolution_direct(&big_x, &big_y)?.scale(plan.inv_n())?;
    let dual_conv_img = dual_image_convolution(plan, &big_x, &big_y)?;
    rows.push(row("convolution, dual image side", Stated, &product_img, &dual_conv_img));
    rows.push(row("convolution, dual original side", Stated, &dual_product_img, &conv_img));
    rows.push(row("convolution, dual on both sides", Stated, &dual_product_img, &dual_conv_img));

    let y_energy = energy(y);
    let big_y_energy = energy(&big_y);
    let y_dual = dual_energy(y)?;
    let big_y_dual = dual_energy(&big_y)?;
    let two = plan.modulus().reduce(&BigUint::from(2u32));
    // printed with the original's complements on the image side
    let mixed = two.mul(&big_y.sum())?.sub(&complement_square_sum(y)?)?;
    rows.push(scalar_row("energy, dual original side", Stated, &y_dual, &big_y_energy));
    rows.push(scalar_row("energy, dual image side", Stated, &y_energy, &mixed));
    rows.push(scalar_row("energy, dual image side with image complements", Stated, &y_energy, &big_y_dual));
    rows.push(scalar_row("energy, dual on both sides", Stated, &y_dual, &big_y_dual));
    let balance_lhs = two.mul(&y.sum().sub(&big_y.sum())?)?;
    let balance_rhs = complement_square_sum(y)?.sub(&complement_square_sum(&big_y)?)?;
    rows.push(scalar_row("energy, complement-square balance", Stated, &balance_lhs, &balance_rhs));

    let n = plan.n_element();
    let (pairing, dual_pairing) = reflected(&big_y)?;
    rows.push(scalar_row("reflected energy, dual original side", Corrected, &y_dual.mul(&n)?, &pairing));
    rows.push(scalar_row("reflected energy, dual image side", Corrected, &y_energy.mul(&n)?, &dual_pairing));
    rows.push(scalar_row("reflected energy, dual on both sides", Corrected, &y_dual.mul(&n)?, &dual_pairing));

    Ok(DualityReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigring::RingModulus;
    use crate::plan::{make_plan, Regime};

    fn ring(m: u32) -> RingModulus {
        RingModulus::new(m).unwrap()
    }

    #[test]
    fn complement_examples() {
        let m = ring(31);
        let a = m.element(5u32).unwrap();
        assert_eq!(complement(&a).residue(), &BigUint::from(27u32));
        assert!(complement(&m.one()).is_zero());
        assert_eq!(complement(&complement(&a)), a);
        let c = Complement::of(&a);
        assert_eq!(c.of.add(&c.value).unwrap(), m.one());
    }

    #[test]
    fn de_morgan_examples() {
        let m = ring(31);
        let e = |v: u32| m.element(v).unwrap();
        assert_eq!(de_morgan_product(&e(3), &e(4), Check::Assert).unwrap(), e(26));
        assert_eq!(de_morgan_product(&e(1), &e(17), Check::Assert).unwrap(), e(1));
        assert_eq!(de_morgan_product(&e(0), &e(17), Check::Assert).unwrap(), e(17));
    }

    #[test]
    fn exhaustive_small_ring() {
        let m = ring(13);
        for a in 0..13u32 {
            for b in 0..13u32 {
                let (a, b) = (m.element(a).unwrap(), m.element(b).unwrap());
                de_morgan_product(&a, &b, Check::Assert).unwrap();
                assert_eq!(dual_product(&a, &b, Check::Assert).unwrap(), a.mul(&b).unwrap());
                assert_eq!(dual_sum(&a, &b, Check::Assert).unwrap(), a.add(&b).unwrap());
            }
        }
    }

    #[test]
    fn printed_self_sum_reading_needs_equal_arguments() {
        let m = ring(13);
        let e = |v: u32| m.element(v).unwrap();
        // a + a = a·b + (a′·b′)′ only when a = b
        let rhs = dual_sum(&e(3), &e(5), Check::Skip).unwrap();
        assert_ne!(e(3).add(&e(3)).unwrap(), rhs);
        assert_eq!(e(3).add(&e(3)).unwrap(), dual_sum(&e(3), &e(3), Check::Skip).unwrap());
    }

    #[test]
    fn suite_on_mersenne_plan() {
        let plan = make_plan(2u32, 5, Regime::PrimeN).unwrap();
        let m = plan.modulus();
        let x = Sequence::from_u64s(m, &[3, 1, 4, 1, 5]).unwrap();
        let y = Sequence::from_u64s(m, &[1, 2, 3, 4, 5]).unwrap();
        let mu = m.element(7u32).unwrap();
        let report = dual_theorem_suite(&plan, &x, &y, &mu).unwrap();
        let failing: Vec<_> = report.failing().map(|r| r.name).collect();
        assert_eq!(
            failing,
            vec![
                "energy, dual original side",
                "energy, dual image side",
                "energy, dual image side with image complements",
                "energy, dual on both sides",
                "energy, complement-square balance",
            ]
        );
        assert!(report.rows.iter().filter(|r| r.kind == IdentityKind::Corrected).all(IdentityRow::holds));
    }

    #[test]
    fn suite_on_zero_sequences() {
        let plan = make_plan(2u32, 5, Regime::PrimeN).unwrap();
        let zero = Sequence::zeros(plan.modulus(), 5);
        let report = dual_theorem_suite(&plan, &zero, &zero, &plan.modulus().zero()).unwrap();
        assert!(report.all_hold());
    }

    #[test]
    fn all_ones_balance() {
        let plan = make_plan(2u32, 5, Regime::PrimeN).unwrap();
        let ones = Sequence::from_u64s(plan.modulus(), &[1; 5]).unwrap();
        let report = dual_theorem_suite(&plan, &ones, &ones, &plan.modulus().one()).unwrap();
        let balance = report.row("energy, complement-square balance").unwrap();
        // lhs 2(5 − 5) = 0; rhs 5 − (10 − 25) = 20
        assert_eq!(balance.lhs, vec![BigUint::from(0u32)]);
        assert_eq!(balance.rhs, vec![BigUint::from(20u32)]);
    }
}
