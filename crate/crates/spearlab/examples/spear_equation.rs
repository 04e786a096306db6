//! The defining norm equality ‖G + 𝕋T‖ = 1 + ‖T‖, evaluated exactly.
//!
//! For a lush G it holds for every T. For the identity on the crushed-cube
//! space X1 it fails, but only at carefully placed rank-one operators:
//! both factors have to be normed away from the face pairs.
//!
//! ```bash
//! cargo run --example spear_equation
//! ```

use spearlab::analysis::{spear_equation, vg_radius};
use spearlab::operators::{fixture_operator, LinOp};
use spearlab::rational::{format_scalar, rat, RatVector};
use spearlab::spaces::fixture;
use std::sync::Arc;

fn main() -> spearlab::Result<()> {
    // A lush fixture satisfies the equation for every rank-one vertex pair.
    let g1 = fixture_operator("example52_G1")?;
    let mut checked = 0;
    for f in g1.domain().dual_vertices() {
        for w in g1.codomain().vertices() {
            let t = LinOp::rank_one("t", f, w, g1.domain().clone(), g1.codomain().clone())?;
            assert!(spear_equation(&g1, &t)?.holds);
            checked += 1;
        }
    }
    println!("G1: spear equation holds on all {checked} rank-one vertex pairs");

    // The identity on X1 fails the equation at a hand-built rank-one T:
    // x* is normed only at ±(1,1,-1,-1) and y only by the corner
    // functional, so every face pair misses the full product of norms.
    let x1 = Arc::new(fixture("example52_X1")?);
    let id = LinOp::identity(x1.as_ref().clone());
    let x_star = RatVector::new(vec![rat(1, 4), rat(1, 4), rat(-1, 4), rat(-1, 4)]);
    let y = RatVector::new(vec![rat(3, 4), rat(3, 4), rat(1, 4), rat(1, 4)]);
    let t = LinOp::rank_one("t", &x_star, &y, x1.clone(), x1.clone())?;
    let eq = spear_equation(&id, &t)?;
    println!(
        "id_X1 with the crafted rank-one T: lhs = {}, rhs = {}, holds = {}",
        format_scalar(&eq.lhs),
        format_scalar(&eq.rhs),
        eq.holds
    );
    println!(
        "v_G(T) for the same pair: {} < ‖T‖ = {}",
        format_scalar(&vg_radius(&id, &t)?),
        format_scalar(&t.operator_norm())
    );

    // T = 0 always satisfies the equation trivially.
    let zero = id.scale(&rat(0, 1));
    let eq = spear_equation(&id, &zero)?;
    println!("T = 0: lhs = {} = 1 + 0, holds = {}", format_scalar(&eq.lhs), eq.holds);
    Ok(())
}
