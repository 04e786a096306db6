//! Numerical ranges, radii and indices, exact and by brute force.
//!
//! V(X,u,z) is the interval of values f·z over the dual face at u; its
//! largest modulus is the radius v(X,u,z); the index N(X,u) minimizes the
//! radius over the unit sphere, here by one exact LP per ball facet.
//! N(X,u) = 1 exactly when u is a spear vector.
//!
//! ```bash
//! cargo run --example numerical_index
//! ```

use spearlab::analysis::{numerical_index, numerical_radius, numerical_range};
use spearlab::oracle::brute_numerical_index;
use spearlab::rational::{format_scalar, RatVector};
use spearlab::spaces::fixture;

fn main() -> spearlab::Result<()> {
    let l1 = fixture("l1:2")?;
    let u = RatVector::unit(2, 0);
    let z = RatVector::from_ints(&[0, 1]);
    let r = numerical_range(&l1, &u, &z)?;
    println!(
        "V(l1:2, e1, (0,1)) = [{}, {}], radius {}",
        format_scalar(&r.lo),
        format_scalar(&r.hi),
        format_scalar(&numerical_radius(&l1, &u, &z)?)
    );

    for (name, u) in [
        ("l1:2", RatVector::unit(2, 0)),
        ("linf:2", RatVector::from_ints(&[1, 0])),
        ("hexagon", RatVector::from_ints(&[1, 0])),
    ] {
        let space = fixture(name)?;
        let (value, witness) = numerical_index(&space, &u)?;
        let brute = brute_numerical_index(&space, &u, 200);
        println!(
            "N({name}, {u}) = {} (minimizer {witness}), brute-force oracle {brute:.9}",
            format_scalar(&value),
        );
    }

    // Over the vertices of the crushed cube the index is 1 exactly on the
    // spear vectors.
    let x1 = fixture("example52_X1")?;
    let mut ones = 0;
    for v in x1.vertices() {
        let (value, _) = numerical_index(&x1, v)?;
        if format_scalar(&value) == "1" {
            ones += 1;
        }
    }
    println!("index 1 at {ones} of {} X1 vertices", x1.vertices().len());
    Ok(())
}
