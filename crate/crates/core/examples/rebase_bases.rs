//! Moves an image between bases 3 and 2 at N = 3, through the kernel and
//! through the original.

use sntt::plan::{make_plan, Regime};
use sntt::rebase::{build_kernel, rebase_image, reference_image, KernelDirection, RebasePair};
use sntt::transform::forward;
use sntt::Sequence;

fn main() -> sntt::Result<()> {
    let plan1 = make_plan(2u32, 3, Regime::PrimeN)?;
    let plan2 = make_plan(3u32, 3, Regime::PrimeN)?;
    let pair = RebasePair::new(plan1, plan2.clone())?;
    let kernel = build_kernel(&pair, KernelDirection::Image);
    println!("kernel mod {}: {:?}", kernel.modulus(), kernel.values());

    for original in [[1u64, 1, 1], [2, 0, 5]] {
        let image2 = forward(&plan2, &Sequence::from_u64s(plan2.modulus(), &original)?)?;
        let reference = reference_image(&pair, &image2)?;
        print!("x={original:?}: reference {:?}, kernel ", reference.values());
        match rebase_image(&pair, &image2) {
            Ok(image) => println!("{:?}", image.values()),
            Err(e) => println!("rejected: {e}"),
        }
    }
    Ok(())
}
