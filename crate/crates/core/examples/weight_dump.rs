//! Writes the weight table of a plan as CSV on stdout.

use std::io::stdout;

use sntt::plan::{make_plan, Regime};
use sntt::transform::{dump_weights, sawtooth_permutation, write_weights_csv};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // weights of a pseudo-Fermat plan are a permutation of 1..=N
    let sawtooth = make_plan(3u32, 6, Regime::PseudoFermat)?;
    eprintln!("s=3, N=6, M=7: columns giving forward row 1 as 1..=N: {:?}", sawtooth_permutation(&sawtooth)?);

    let plan = make_plan(2u32, 5, Regime::Mersenne)?;
    let rows = dump_weights(&plan, &[0, 1, 2, -1]);
    write_weights_csv(&rows, stdout().lock())?;
    Ok(())
}
