//! The exact geometry kernel on its own: vertex/facet conversion, polar
//! involution, membership, and the rational simplex.
//!
//! ```bash
//! cargo run --example polar_duality
//! ```

use spearlab::exactgeom::{
    facets_from_vertices, solve_lp, vertices_from_facets, DdLimits, LpLimits, Polytope, Relation,
    Sense,
};
use spearlab::rational::{format_scalar, rat, rat_int, RatVector};

fn main() -> spearlab::Result<()> {
    let limits = DdLimits::default();

    // Octahedron -> cube facets and back.
    let octa: Vec<RatVector> = (0..3)
        .flat_map(|i| [RatVector::unit(3, i), RatVector::unit(3, i).neg()])
        .collect();
    let facets = facets_from_vertices(3, &octa, &limits)?;
    println!("octahedron has {} facets, all sign-vector normals", facets.len());
    let verts = vertices_from_facets(3, &facets, &limits)?;
    assert_eq!(verts.len(), 6);
    println!("round trip recovers the {} vertices exactly", verts.len());

    // Polar involution as a pure swap on offset-1 bodies.
    let body = Polytope::from_vertices(
        2,
        &[
            RatVector::from_ints(&[2, 0]),
            RatVector::from_ints(&[-2, 0]),
            RatVector::from_ints(&[1, 1]),
            RatVector::from_ints(&[-1, -1]),
            RatVector::from_ints(&[1, -1]),
            RatVector::from_ints(&[-1, 1]),
        ],
        &limits,
    )?;
    println!("\nhexagonal body: {} vertices / {} facets", body.vertices().len(), body.facet_normals().len());
    assert_eq!(body.polar().polar(), body);
    println!("polar(polar(body)) == body exactly");

    for x in [RatVector::new(vec![rat(3, 2), rat(1, 2)]), RatVector::from_ints(&[2, 1])] {
        println!("contains({x}) = {}, gauge = {}", body.contains(&x)?, format_scalar(&body.gauge(&x)?));
    }

    // The simplex, exactly: maximize x+y over the diamond |x| + |y| <= 1.
    let constraints = [
        (RatVector::from_ints(&[1, 1]), Relation::Le, rat_int(1)),
        (RatVector::from_ints(&[1, -1]), Relation::Le, rat_int(1)),
        (RatVector::from_ints(&[-1, 1]), Relation::Le, rat_int(1)),
        (RatVector::from_ints(&[-1, -1]), Relation::Le, rat_int(1)),
    ];
    let out = solve_lp(
        &RatVector::from_ints(&[1, 1]),
        &constraints,
        Sense::Max,
        &LpLimits::default(),
    )?;
    println!(
        "\nLP max x+y over the diamond: status {:?}, value {}, point {}",
        out.status,
        format_scalar(&out.value.unwrap()),
        out.point.unwrap()
    );
    Ok(())
}
