//! The floating-point oracles: each one samples the defining norm identity
//! of an exact decider and reports the worst violation seen. Oracles gate
//! regressions; certificates always win.
//!
//! ```bash
//! cargo run --example fuzz_reports
//! ```

use spearlab::operators::{fixture_operator, LinOp};
use spearlab::oracle::{fuzz_lush_slices, fuzz_spear_equation, fuzz_spear_vector};
use spearlab::rational::RatVector;
use spearlab::spaces::fixture;

fn main() -> spearlab::Result<()> {
    let seed = 2017;

    let l1 = fixture("l1:3")?;
    let report = fuzz_spear_vector(&l1, &RatVector::unit(3, 0), 500, 1e-9, seed);
    println!("spear vector e1 in l1:3:\n{}\n", serde_json::to_string_pretty(&report).unwrap());

    let x1 = fixture("example52_X1")?;
    let report = fuzz_spear_vector(&x1, &RatVector::from_ints(&[1, 1, -1, -1]), 500, 1e-9, seed);
    println!(
        "non-spear (1,1,-1,-1) in X1: passed={} worst violation {:.6}\n",
        report.passed, report.max_violation
    );

    let g = fixture_operator("example52_G")?;
    let report = fuzz_spear_equation(&g, 1000, 1e-9, seed);
    println!("spear equation for the lush block operator: passed={}", report.passed);

    let bad = LinOp::identity(fixture("example52_X1")?);
    let report = fuzz_spear_equation(&bad, 1000, 1e-9, seed);
    println!("spear equation for id on X1: passed={} (violation {:.6})", report.passed, report.max_violation);

    let report = fuzz_lush_slices(&g, 200, 0.1, seed);
    println!("slice lushness of the block operator at eps=1/10: passed={}", report.passed);
    let report = fuzz_lush_slices(&bad, 200, 0.1, seed);
    println!(
        "slice lushness of id on X1 at eps=1/10: passed={} (worst distance {:.3})",
        report.passed, report.max_violation
    );
    Ok(())
}
