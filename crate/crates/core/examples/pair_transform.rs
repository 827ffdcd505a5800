//! Ordered-pair arithmetic and the experimental pair transform.

use sntt::pairs::{determinant, pair_cross, pair_diagnostic, pair_plan, pair_pow, PairElement, Variant};

fn main() -> sntt::Result<()> {
    let (a, b) = (PairElement::new(2, 1), PairElement::new(3, 4));
    for v in Variant::ALL {
        println!(
            "variant {}: <2,1> x <3,4> = <{}>, det <2,1> = {}",
            v.index(),
            pair_cross(&a, &b, v),
            determinant(&a, v)
        );
    }
    let powers: Vec<String> = (0..6).map(|m| format!("<{}>", pair_pow(&a, m, Variant::V2))).collect();
    println!("variant 2 powers of <2,1>: {}", powers.join("  "));

    let plan = pair_plan(a, 3, Variant::V2)?;
    let probe = vec![PairElement::new(1, 0), PairElement::new(2, 3), PairElement::new(0, 5)];
    let report = pair_diagnostic(&plan, &probe)?;
    println!("modulus pair <{}>, scalar {}", plan.modulus_pair(), plan.scalar_modulus());
    for (d, sum) in &report.weight_sums {
        println!("weight sum d={d}: <{sum}>");
    }
    println!("invertible: {}", report.invertible());
    Ok(())
}
