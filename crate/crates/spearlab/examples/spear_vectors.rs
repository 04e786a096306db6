//! Spear vectors and spear sets with certificates.
//!
//! A unit vector z is a spear when ‖z + 𝕋x‖ = 1 + ‖x‖ for every x, which on
//! a polyhedral ball reduces to |f·z| = 1 at every extreme dual point f.
//!
//! ```bash
//! cargo run --example spear_vectors
//! ```

use spearlab::rational::RatVector;
use spearlab::spaces::fixture;
use spearlab::speartest::{face_generates_ball, is_spear_set, is_spear_vector, spear_vectors};
use spearlab::wire;

fn main() -> spearlab::Result<()> {
    // In l1:n exactly the signed basis vectors are spears; in linf:n all
    // sign vectors are.
    for name in ["l1:3", "linf:3"] {
        let s = fixture(name)?;
        let spears = spear_vectors(&s);
        println!("Spear({name}) has {} elements: {spears:?}", spears.len());
    }

    // The four-dimensional crushed-cube space keeps only 8 of its 14
    // vertices as spears: the corner functional (1/2,...,1/2) kills the
    // rest. The certificate carries the witness.
    let x1 = fixture("example52_X1")?;
    let spears = spear_vectors(&x1);
    println!("\nSpear(example52_X1) has {} of {} vertices", spears.len(), x1.vertices().len());
    let z = RatVector::from_ints(&[1, 1, -1, -1]);
    let cert = is_spear_vector(&x1, &z)?;
    println!(
        "is_spear_vector(X1, (1,1,-1,-1)):\n{}",
        serde_json::to_string_pretty(&wire::certificate_to_value(&cert)).unwrap()
    );

    // Spear sets: the basis of l1:n norms every dual sign vector jointly.
    let l1 = fixture("l1:4")?;
    let basis: Vec<RatVector> = (0..4).map(|i| RatVector::unit(4, i)).collect();
    println!("\nbasis of l1:4 is a spear set: {}", is_spear_set(&l1, &basis)?.decision);
    let cert = is_spear_set(&fixture("linf:2")?, &[RatVector::unit(2, 0)])?;
    println!("{{e1}} in linf:2 is a spear set: {} (witness {:?})", cert.decision, cert.witnesses[0].vector);

    // Dual-side view: z* is a spear of X* exactly when its face generates
    // the whole ball absolutely convexly.
    let l1 = fixture("l1:2")?;
    for z_star in [RatVector::from_ints(&[1, 1]), RatVector::from_ints(&[1, 0])] {
        let cert = face_generates_ball(&l1, &z_star)?;
        println!("aconv Face(S_l1:2, {z_star}) = ball: {}", cert.decision);
    }
    Ok(())
}
