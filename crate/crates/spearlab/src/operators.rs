//! Matrix operators between polyhedral spaces.
//!
//! The operator norm is computed by enumerating the domain ball vertices:
//! a convex function on a polytope attains its maximum at a vertex, so
//! `‖G‖ = max ‖Gv‖` over `v ∈ ext B_X`, exactly.

use crate::error::{Error, Result};
use crate::rational::{RatMatrix, RatVector, Rational};
use crate::spaces::{direct_sum, PolyhedralSpace, SpaceRef, SumKind};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct LinOp {
    label: String,
    domain: SpaceRef,
    codomain: SpaceRef,
    matrix: RatMatrix,
}

impl LinOp {
    pub fn new(
        label: impl Into<String>,
        domain: PolyhedralSpace,
        codomain: PolyhedralSpace,
        matrix: RatMatrix,
    ) -> Result<Self> {
        Self::new_shared(label, Arc::new(domain), Arc::new(codomain), matrix)
    }

    pub fn new_shared(
        label: impl Into<String>,
        domain: SpaceRef,
        codomain: SpaceRef,
        matrix: RatMatrix,
    ) -> Result<Self> {
        if matrix.rows() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                expected: codomain.dim(),
                got: matrix.rows(),
            });
        }
        if matrix.cols() != domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim(),
                got: matrix.cols(),
            });
        }
        Ok(LinOp {
            label: label.into(),
            domain,
            codomain,
            matrix,
        })
    }

    /// The identity operator on a space.
    pub fn identity(space: PolyhedralSpace) -> Self {
        let shared = Arc::new(space);
        let n = shared.dim();
        LinOp {
            label: format!("id({})", shared.label()),
            domain: shared.clone(),
            codomain: shared,
            matrix: RatMatrix::identity(n),
        }
    }

    /// The rank-one operator `x ↦ (x_star · x) y`.
    pub fn rank_one(
        label: impl Into<String>,
        x_star: &RatVector,
        y: &RatVector,
        domain: SpaceRef,
        codomain: SpaceRef,
    ) -> Result<Self> {
        x_star.check_dim(domain.dim())?;
        y.check_dim(codomain.dim())?;
        Self::new_shared(label, domain, codomain, RatMatrix::outer(y, x_star))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn domain(&self) -> &SpaceRef {
        &self.domain
    }

    pub fn codomain(&self) -> &SpaceRef {
        &self.codomain
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &RatVector) -> Result<RatVector> {
        self.matrix.mul_vec(x)
    }

    /// Exact operator norm `max ‖Gv‖` over the domain ball vertices.
    pub fn operator_norm(&self) -> Rational {
        self.domain
            .vertices()
            .iter()
            .map(|v| {
                let image = self.matrix.mul_vec(v).expect("shapes checked at construction");
                self.codomain.norm(&image).expect("shapes checked at construction")
            })
            .max()
            .expect("domain ball has vertices")
    }

    /// The adjoint: the transposed matrix between the dual spaces.
    pub fn adjoint(&self) -> LinOp {
        LinOp {
            label: format!("{}*", self.label),
            domain: Arc::new(self.codomain.dual_space()),
            codomain: Arc::new(self.domain.dual_space()),
            matrix: self.matrix.transpose(),
        }
    }

    /// `self ∘ inner`; the inner codomain must equal this domain.
    pub fn compose(&self, inner: &LinOp) -> Result<LinOp> {
        if !inner.codomain.same_space(&self.domain) {
            return Err(Error::SpaceMismatch);
        }
        Ok(LinOp {
            label: format!("{}.{}", self.label, inner.label),
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul_mat(&inner.matrix)?,
        })
    }

    pub fn add(&self, other: &LinOp) -> Result<LinOp> {
        self.check_same_spaces(other)?;
        Ok(LinOp {
            label: format!("{}+{}", self.label, other.label),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.add(&other.matrix),
        })
    }

    pub fn sub(&self, other: &LinOp) -> Result<LinOp> {
        self.check_same_spaces(other)?;
        Ok(LinOp {
            label: format!("{}-{}", self.label, other.label),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.sub(&other.matrix),
        })
    }

    pub fn scale(&self, by: &Rational) -> LinOp {
        LinOp {
            label: self.label.clone(),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.scale(by),
        }
    }

    /// Both operators act between the same pair of spaces.
    pub fn check_same_spaces(&self, other: &LinOp) -> Result<()> {
        if self.domain.same_space(&other.domain) && self.codomain.same_space(&other.codomain) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }
}

/// Block-diagonal sum of two or more operators between the matching direct
/// sums of their domains and codomains.
pub fn block_sum(ops: &[&LinOp], kind: SumKind) -> Result<LinOp> {
    if ops.len() < 2 {
        return Err(Error::EmptyOperatorList);
    }
    let domains: Vec<&PolyhedralSpace> = ops.iter().map(|g| g.domain.as_ref()).collect();
    let codomains: Vec<&PolyhedralSpace> = ops.iter().map(|g| g.codomain.as_ref()).collect();
    let domain = direct_sum(&domains, kind)?;
    let codomain = direct_sum(&codomains, kind)?;
    let blocks: Vec<&RatMatrix> = ops.iter().map(|g| &g.matrix).collect();
    let label = ops
        .iter()
        .map(|g| g.label.clone())
        .collect::<Vec<_>>()
        .join("#");
    LinOp::new(label, domain, codomain, RatMatrix::block_diag(&blocks))
}

/// Built-in operator fixtures: `example52_G1`, `example52_G2`, `example52_G`,
/// and `id:<space fixture>` for any space fixture.
pub fn fixture_operator(name: &str) -> Result<LinOp> {
    match name {
        "example52_G1" => {
            let mut g = LinOp::new(
                "example52_G1",
                crate::spaces::fixture("example52_X1")?,
                crate::spaces::fixture("example52_Y1")?,
                RatMatrix::identity(4),
            )?;
            g.label = "example52_G1".into();
            Ok(g)
        }
        "example52_G2" => {
            let mut g = fixture_operator("example52_G1")?.adjoint();
            g.label = "example52_G2".into();
            Ok(g)
        }
        "example52_G" => {
            let g1 = fixture_operator("example52_G1")?;
            let g2 = fixture_operator("example52_G2")?;
            let mut g = block_sum(&[&g1, &g2], SumKind::SumInf)?;
            g.label = "example52_G".into();
            Ok(g)
        }
        _ => {
            if let Some(space) = name.strip_prefix("id:") {
                let mut g = LinOp::identity(crate::spaces::fixture(space)?);
                g.label = name.to_string();
                return Ok(g);
            }
            Err(Error::UnknownFixture(name.to_string()))
        }
    }
}

pub fn fixture_operator_names() -> Vec<&'static str> {
    vec!["example52_G1", "example52_G2", "example52_G", "id:<space>"]
}
