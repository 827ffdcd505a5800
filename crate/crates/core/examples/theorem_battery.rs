//! Runs the checked theorem operations on one plan. The literal energy
//! identity is printed next to the reflected one that actually holds.

use sntt::plan::{make_plan, Regime};
use sntt::theorems::{
    autocorrelation, cyclic_convolve, image_autocorrelation, image_convolution_of_product, parseval_check,
    parseval_reflected, shift_image, Check,
};
use sntt::transform::{forward, Sign};
use sntt::Sequence;

fn main() -> sntt::Result<()> {
    let plan = make_plan(2u32, 5, Regime::Mersenne)?;
    let x = Sequence::from_u64s(plan.modulus(), &[1, 2, 3, 4, 5])?;
    let y = Sequence::from_u64s(plan.modulus(), &[1, 1, 0, 0, 0])?;

    println!("x * y          = {:?}", cyclic_convolve(&plan, &x, &y, Check::Assert)?.values());
    println!("F(x . y)       = {:?}", image_convolution_of_product(&plan, &x, &y, Check::Assert)?.values());
    println!("x s^(2i)       = {:?}", shift_image(&plan, &x, 2, Sign::Plus, Check::Assert)?.values());
    println!("y * y          = {:?}", autocorrelation(&plan, &y, Check::Assert)?.values());
    let image = forward(&plan, &x)?;
    println!("X * X          = {:?}", image_autocorrelation(&plan, &image, Check::Assert)?.values());

    let (lhs, rhs) = parseval_check(&plan, &x)?;
    println!("sum x^2 vs sum X^2:            {} vs {}", lhs.residue(), rhs.residue());
    let (lhs, rhs) = parseval_reflected(&plan, &x)?;
    println!("N sum x^2 vs sum X(k) X(-k):   {} vs {}", lhs.residue(), rhs.residue());
    Ok(())
}
