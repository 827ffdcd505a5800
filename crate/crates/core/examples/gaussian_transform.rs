//! Transform over Gaussian integers with base 2 + i.

use sntt::gaussian::{gauss_forward, gauss_inverse, make_gaussian_plan, GaussianElement};

fn main() -> sntt::Result<()> {
    let plan = make_gaussian_plan(GaussianElement::new(2, 1), 3)?;
    println!("modulus ({}), norm {}, N^-1 ({})", plan.modulus(), plan.norm(), plan.inv_n());

    let z = vec![GaussianElement::new(1, 2), GaussianElement::new(-3, 4), GaussianElement::new(5, 0)];
    let image = gauss_forward(&plan, &z)?;
    let back = gauss_inverse(&plan, &image)?;
    for ((a, b), c) in z.iter().zip(&image).zip(&back) {
        println!("({a}) -> ({b}) -> ({c}), congruent: {}", plan.congruent(a, c));
    }
    Ok(())
}
