//! Sampled upper bounds for the numerical index of an operator.
//!
//! n_G = inf{v_G(T) : ‖T‖ = 1} is a nonconvex global minimum, so only an
//! upper bound is computed: random rational matrices are normalized to
//! exact norm one and v_G is evaluated exactly on each. G is a spear
//! operator exactly when n_G = 1, so lush fixtures report bound 1 for
//! every sample, while the hexagon identity dips strictly below 1.
//!
//! ```bash
//! cargo run --example ng_bound
//! ```

use spearlab::analysis::{ng_upper_bound, vg_radius};
use spearlab::operators::{fixture_operator, LinOp};
use spearlab::rational::format_scalar;
use spearlab::spaces::fixture;

fn main() -> spearlab::Result<()> {
    let g = fixture_operator("example52_G1")?;
    let (bound, _) = ng_upper_bound(&g, 200, 2017)?;
    println!("lush G1, 200 samples: bound = {}", format_scalar(&bound));

    let hex = LinOp::identity(fixture("hexagon")?);
    for samples in [50, 500, 2000] {
        let (bound, argmin) = ng_upper_bound(&hex, samples, 2017)?;
        println!(
            "id on hexagon, {samples:4} samples: bound = {} (argmin norm {})",
            format_scalar(&bound),
            format_scalar(&argmin.operator_norm())
        );
        assert_eq!(vg_radius(&hex, &argmin)?, bound);
    }
    println!("(bounds only ever tighten: the infimum itself is out of reach by sampling)");
    Ok(())
}
