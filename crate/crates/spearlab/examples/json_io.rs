//! The JSON wire formats: spaces and operators in, certificates out.
//! Scalars are integers or "p/q" strings; floats are rejected on the exact
//! path.
//!
//! ```bash
//! cargo run --example json_io
//! ```

use serde_json::json;
use spearlab::rational::RatVector;
use spearlab::speartest::is_spear_vector;
use spearlab::wire;

fn main() -> spearlab::Result<()> {
    let space_doc = json!({
        "label": "squished",
        "dim": 2,
        "ball_vertices": [["1/2", 0], [0, 2], ["1/2", 1]],
    });
    let space = wire::space_from_value(&space_doc)?;
    println!(
        "loaded `{}`: {} vertices after symmetrization",
        space.label(),
        space.vertices().len()
    );
    println!("{}\n", serde_json::to_string_pretty(&wire::space_to_value(&space)).unwrap());

    let op_doc = json!({
        "label": "shear",
        "domain": {"label": "sq", "dim": 2, "facet_normals": [[1, 0], [0, 1]]},
        "codomain": {"label": "sq", "dim": 2, "facet_normals": [[1, 0], [0, 1]]},
        "matrix": [[1, "1/2"], [0, 1]],
    });
    let op = wire::operator_from_value(&op_doc, &|name| {
        Err(spearlab::Error::UnknownFixture(name.to_string()))
    })?;
    println!("loaded `{}` with norm {}", op.label(), op.operator_norm());

    // Certificates serialize with the same scalar conventions.
    let z = space.normalize(&RatVector::from_ints(&[1, 0]))?;
    let cert = is_spear_vector(&space, &z)?;
    println!(
        "\ncertificate for {z}:\n{}",
        serde_json::to_string_pretty(&wire::certificate_to_value(&cert)).unwrap()
    );

    // Floats are rejected.
    let bad = json!({"label": "bad", "dim": 2, "ball_vertices": [[0.5, 0], [0, 1]]});
    println!("\nfloat input rejected: {:?}", wire::space_from_value(&bad).unwrap_err());
    Ok(())
}
