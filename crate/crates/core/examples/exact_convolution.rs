//! Multiplies two integer polynomials exactly, with the plan picked
//! automatically from the coefficient bound.

use num_bigint::BigUint;
use sntt::theorems::{convolve_exact_integers, exact_bound, plan_for_product};

fn main() -> sntt::Result<()> {
    let a: Vec<BigUint> = [123_456_789u64, 0, 42, 7].iter().map(|&v| v.into()).collect();
    let b: Vec<BigUint> = [987_654_321u64, 5, 1].iter().map(|&v| v.into()).collect();

    let plan = plan_for_product(&a, &b)?;
    println!(
        "bound {} -> plan s={} N={} M={} ({})",
        exact_bound(&a, &b),
        plan.s(),
        plan.len(),
        plan.modulus(),
        plan.regime()
    );

    let product = convolve_exact_integers(&a, &b)?;
    for (i, c) in product.iter().enumerate() {
        println!("x^{i}: {c}");
    }
    Ok(())
}
