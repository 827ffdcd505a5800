//! Forward and inverse transform of one sequence, plus the weight matrices.

use sntt::plan::{make_plan, Regime};
use sntt::transform::{forward_threaded, inverse, matrices};
use sntt::Sequence;

fn main() -> sntt::Result<()> {
    let plan = make_plan(3u32, 3, Regime::PrimeN)?;
    let (fwd, inv) = matrices(&plan);
    println!("M = {}", plan.modulus());
    println!("forward weights {:?}", fwd.entries());
    println!("inverse weights {:?}", inv.entries());
    println!("inverse x forward = {:?}", inv.product(&fwd));

    let plan = make_plan(2u32, 8, Regime::Fermat)?;
    let x = Sequence::from_u64s(plan.modulus(), &[1, 2, 3, 4, 0, 0, 0, 16])?;
    let image = forward_threaded(&plan, &x, 2)?;
    let back = inverse(&plan, &image)?;
    println!("\nx    = {:?}", x.values());
    println!("X    = {:?}", image.values());
    println!("back = {:?}", back.values());
    assert_eq!(back, x);
    Ok(())
}
