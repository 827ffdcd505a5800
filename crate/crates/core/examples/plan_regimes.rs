//! Builds one plan per regime and shows what the validator rejects.

use sntt::plan::{make_plan, plan_search, Regime, SearchConstraints};

fn main() {
    let cases = [
        (2u32, 5, Regime::Mersenne),
        (2, 8, Regime::Fermat),
        (3, 5, Regime::PrimeN),
        (2, 9, Regime::PrimePower { p: 3, n: 2 }),
        (6, 4, Regime::TwoP { p: 2 }),
        (2, 4, Regime::PseudoFermat),
        (3, 4, Regime::PrimeN),
        (2, 7, Regime::Fermat),
    ];
    for (s, n, regime) in cases {
        match make_plan(s, n, regime) {
            Ok(plan) => println!("{regime:>14} s={s} N={n}: M={} N^-1={}", plan.modulus(), plan.inv_n().residue()),
            Err(e) => println!("{regime:>14} s={s} N={n}: rejected ({e})"),
        }
    }

    let found = plan_search(&SearchConstraints::new(5, 100u32).with_max_n(8)).unwrap_or_default();
    println!("\nplans with N >= 5, M >= 100, N <= 8:");
    for plan in found.iter().take(8) {
        println!("  s={} N={} M={} ({})", plan.s(), plan.len(), plan.modulus(), plan.regime());
    }
}
