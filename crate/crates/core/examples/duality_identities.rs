//! Evaluates the complement-dual forms of the transform theorems.

use sntt::duality::{complement, dual_sum, dual_theorem_suite};
use sntt::plan::{make_plan, Regime};
use sntt::theorems::Check;
use sntt::Sequence;

fn main() -> sntt::Result<()> {
    let plan = make_plan(3u32, 3, Regime::PrimeN)?;
    let m = plan.modulus();
    let (a, b) = (m.element(5u32)?, m.element(9u32)?);
    println!("5' = {}, 5 + 9 via products = {}", complement(&a).residue(), dual_sum(&a, &b, Check::Assert)?.residue());

    let x = Sequence::from_u64s(m, &[4, 7, 1])?;
    let y = Sequence::from_u64s(m, &[2, 0, 11])?;
    let report = dual_theorem_suite(&plan, &x, &y, &m.element(6u32)?)?;
    for row in &report.rows {
        println!("{:<5} {:?} {}", if row.holds() { "ok" } else { "FAIL" }, row.kind, row.name);
    }
    Ok(())
}
