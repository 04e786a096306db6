//! Exact rational convex-geometry kernel: linear programming, conversion
//! between vertex and facet descriptions, polarity and membership.

pub mod dd;
pub mod lp;
pub mod polytope;

pub use dd::{facets_from_vertices, set_default_vertex_cap, vertices_from_facets, DdLimits, Facet};
pub use lp::{set_default_pivot_cap, solve_lp, Constraint, LpLimits, LpOutcome, LpStatus, Relation, Sense};
pub use polytope::Polytope;
