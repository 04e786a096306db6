//! The bijective lush operator whose domain and codomain both fail to have
//! numerical index one.
//!
//! X1 is the four-dimensional space whose ball is the cube with the two
//! corners ±(1,1,1,1) sliced off. The inclusion G1 : X1 → linf:4 maps every
//! ball vertex to a sign vector, hence to a spear of linf:4, so G1 is lush;
//! so is its adjoint G2, and so is the sup-sum G = G1 ⊞ G2. Yet the
//! identity on the domain X1 ⊕inf l1:4 is not lush: the vertex
//! (1,1,-1,-1) of X1 is annihilated by the extreme dual functional
//! (1/2,1/2,1/2,1/2).
//!
//! ```bash
//! cargo run --example lush_block_operator
//! ```

use spearlab::analysis::decide_operator;
use spearlab::operators::{fixture_operator, LinOp};
use spearlab::spaces::{direct_sum, fixture, SumKind};

fn main() -> spearlab::Result<()> {
    let g1 = fixture_operator("example52_G1")?;
    let g2 = fixture_operator("example52_G2")?;
    let g = fixture_operator("example52_G")?;

    for (name, op) in [("G1 : X1 -> linf:4", &g1), ("G2 = G1* : l1:4 -> X1*", &g2), ("G = G1 ⊞ G2 (sup-sum)", &g)] {
        let v = decide_operator(op)?;
        println!("{name:28} lush={} spear={} adp={}", v.lush, v.spear, v.adp);
    }

    let x = direct_sum(&[&fixture("example52_X1")?, &fixture("example52_X2")?], SumKind::SumInf)?;
    let id = LinOp::identity(x);
    let v = decide_operator(&id)?;
    println!("\nid on X1 ⊕inf l1:4          lush={} spear={} adp={}", v.lush, v.spear, v.adp);
    let w = v.witness.expect("failing identity carries a witness");
    println!("witness: x = {}, y* = {}, |y*(x)| = {}", w.x, w.y_star, w.value);

    // The witness re-verifies by direct evaluation.
    let image = id.apply(&w.x)?;
    assert_eq!(w.y_star.dot(&image), w.value);
    println!("witness re-verified by direct evaluation");
    Ok(())
}
