//! Tour of polyhedral normed spaces: fixtures, construction from vertices
//! or facet normals, exact norms, duality, faces and slice vertices.
//!
//! ```bash
//! cargo run --example space_tour
//! ```

use spearlab::rational::{rat, RatVector};
use spearlab::spaces::{direct_sum, fixture, PolyhedralSpace, SumKind};

fn main() -> spearlab::Result<()> {
    // Built-in fixtures.
    for name in ["l1:3", "linf:2", "example52_X1", "hexagon"] {
        let s = fixture(name)?;
        println!(
            "{:14} dim {}  {:3} vertices  {:3} dual vertices",
            s.label(),
            s.dim(),
            s.vertices().len(),
            s.dual_vertices().len()
        );
    }

    // Any symmetric polytope works: give half the vertices, the rest is
    // symmetrized in.
    let diamond = PolyhedralSpace::from_vertices(
        "diamond",
        2,
        &[RatVector::from_ints(&[2, 0]), RatVector::from_ints(&[0, 1])],
    )?;
    println!("\ndiamond vertices: {:?}", diamond.vertices());
    println!("diamond facets:   {:?}", diamond.ball().facet_normals());

    let x = RatVector::from_ints(&[1, 1]);
    println!("‖(1,1)‖_diamond = {}", diamond.norm(&x)?);

    // Duality is a pure polar swap and an exact involution.
    let dual = diamond.dual_space();
    println!("dual vertices:    {:?}", dual.vertices());
    assert!(dual.dual_space().same_space(&diamond));

    // Faces: where a unit functional attains its supremum on the ball.
    let l1 = fixture("l1:2")?;
    let face = l1.face_of_ball(&RatVector::from_ints(&[1, 1]))?;
    println!("\nFace(B_l1:2, (1,1)) = {:?}", face.vertex_subset);

    // Slice vertices: ball vertices strictly inside a slice.
    let slice = l1.gslice_vertices(&RatVector::new(vec![rat(1, 1), rat(1, 2)]), &rat(1, 4))?;
    println!("gSlice(B_l1:2, (1,1/2), 1/4) vertices = {slice:?}");

    // Absolute sums: the sup-sum of two lines is the square.
    let line = fixture("l1:1")?;
    let square = direct_sum(&[&line, &line], SumKind::SumInf)?;
    println!("\nl1:1 ⊕inf l1:1 has vertices {:?}", square.vertices());
    Ok(())
}
