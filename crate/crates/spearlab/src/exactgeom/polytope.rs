//! Bounded full-dimensional polytopes with the origin interior.
//!
//! Both representations are stored: the irredundant vertex list and the
//! irredundant facet list with every offset normalized to 1 (possible exactly
//! because the origin is interior). Under that normalization polarity is a
//! pure swap of the two lists.

use crate::error::{Error, Result};
use crate::exactgeom::dd::{self, DdLimits, Facet};
use crate::rational::{RatVector, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polytope {
    dim: usize,
    /// Irredundant, lexicographically sorted vertex list.
    vertices: Vec<RatVector>,
    /// Facet normals; every facet is `normal · x <= 1`.
    facet_normals: Vec<RatVector>,
}

impl Polytope {
    /// Builds the convex hull of `points`. The hull must be full-dimensional
    /// and contain the origin strictly inside.
    pub fn from_vertices(dim: usize, points: &[RatVector], limits: &DdLimits) -> Result<Polytope> {
        let facets = dd::facets_from_vertices(dim, points, limits)?;
        let normals = normalize_offsets(facets)?;

        // A point of the hull is a vertex exactly when its tight facet
        // normals span the space.
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let mut vertices: Vec<RatVector> = pts
            .into_iter()
            .filter(|p| {
                let tight: Vec<RatVector> = normals
                    .iter()
                    .filter(|f| f.dot(p).is_one())
                    .cloned()
                    .collect();
                dd::rank(&tight) == dim
            })
            .collect();
        vertices.sort();
        Ok(Polytope {
            dim,
            vertices,
            facet_normals: normals,
        })
    }

    /// Builds `{x : normal · x <= 1 for every normal}`. The body must be
    /// bounded and full-dimensional; redundant halfspaces are dropped.
    pub fn from_facet_normals(
        dim: usize,
        normals: &[RatVector],
        limits: &DdLimits,
    ) -> Result<Polytope> {
        let facets: Vec<Facet> = normals
            .iter()
            .map(|n| Facet::new(n.clone(), Rational::one()))
            .collect();
        let vertices = dd::vertices_from_facets(dim, &facets, limits)?;
        // Re-derive the facet list so that it is irredundant.
        Polytope::from_vertices(dim, &vertices, limits)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn facet_normals(&self) -> &[RatVector] {
        &self.facet_normals
    }

    pub fn is_vertex(&self, x: &RatVector) -> bool {
        self.vertices.binary_search(x).is_ok()
    }

    /// `v in vertices  <=>  -v in vertices`.
    pub fn is_symmetric(&self) -> bool {
        self.vertices.iter().all(|v| self.is_vertex(&v.neg()))
    }

    /// Exact membership by facet evaluation.
    pub fn contains(&self, x: &RatVector) -> Result<bool> {
        x.check_dim(self.dim)?;
        Ok(self.facet_normals.iter().all(|n| n.dot(x) <= Rational::one()))
    }

    /// Minkowski gauge `min{t > 0 : x/t in body}`; equals
    /// `max(normal · x)` over the facets, and `0` exactly at `x = 0`.
    pub fn gauge(&self, x: &RatVector) -> Result<Rational> {
        x.check_dim(self.dim)?;
        Ok(self
            .facet_normals
            .iter()
            .map(|n| n.dot(x))
            .max()
            .unwrap()
            .max(Rational::zero()))
    }

    /// The polar body `{f : f · x <= 1 on the body}`: vertices and facet
    /// normals swap roles.
    pub fn polar(&self) -> Polytope {
        debug_assert!(self.contains(&RatVector::zero(self.dim)).unwrap());
        Polytope {
            dim: self.dim,
            vertices: self.facet_normals.clone(),
            facet_normals: self.vertices.clone(),
        }
    }
}

/// Rescales facets to offset 1, rejecting bodies without the origin strictly
/// inside.
fn normalize_offsets(facets: Vec<Facet>) -> Result<Vec<RatVector>> {
    let mut normals = Vec::with_capacity(facets.len());
    for f in facets {
        if !f.offset.is_positive() {
            return Err(Error::OriginNotInterior);
        }
        normals.push(f.normal.scale(&f.offset.recip()));
    }
    normals.sort();
    Ok(normals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn cross(dim: usize) -> Polytope {
        let pts: Vec<RatVector> = (0..dim)
            .flat_map(|i| [RatVector::unit(dim, i), RatVector::unit(dim, i).neg()])
            .collect();
        Polytope::from_vertices(dim, &pts, &DdLimits::default()).unwrap()
    }

    #[test]
    fn cross_cube_polarity() {
        let b1 = cross(3);
        assert_eq!(b1.vertices().len(), 6);
        assert_eq!(b1.facet_normals().len(), 8);
        let binf = b1.polar();
        assert_eq!(binf.vertices().len(), 8);
        assert_eq!(binf.polar(), b1);
        assert!(b1.is_symmetric() && binf.is_symmetric());
    }

    #[test]
    fn polar_involution_recomputed() {
        // Recompute the double polar from scratch rather than by swapping.
        let b = cross(3);
        let p = Polytope::from_vertices(3, b.polar().vertices(), &DdLimits::default()).unwrap();
        assert_eq!(p.polar().vertices(), b.vertices());
    }

    #[test]
    fn membership_and_gauge() {
        let b = cross(2);
        assert!(b.contains(&RatVector::new(vec![rat(1, 2), rat(1, 2)])).unwrap());
        assert!(!b.contains(&RatVector::from_ints(&[1, 1])).unwrap());
        assert_eq!(b.gauge(&RatVector::from_ints(&[1, -2])).unwrap(), rat_int(3));
        assert_eq!(b.gauge(&RatVector::zero(2)).unwrap(), rat_int(0));
        // Vertices sit exactly on the boundary; a hair outside fails.
        for v in b.vertices() {
            assert!(b.contains(v).unwrap());
            assert!(!b.contains(&v.scale(&rat(1_000_001, 1_000_000))).unwrap());
        }
    }

    #[test]
    fn redundant_inputs_are_dropped() {
        let mut pts: Vec<RatVector> = vec![
            RatVector::from_ints(&[1, 0]),
            RatVector::from_ints(&[-1, 0]),
            RatVector::from_ints(&[0, 1]),
            RatVector::from_ints(&[0, -1]),
        ];
        pts.push(RatVector::new(vec![rat(1, 2), rat(1, 4)]));
        pts.push(RatVector::zero(2));
        let b = Polytope::from_vertices(2, &pts, &DdLimits::default()).unwrap();
        assert_eq!(b.vertices().len(), 4);

        let normals = vec![
            RatVector::from_ints(&[1, 0]),
            RatVector::from_ints(&[-1, 0]),
            RatVector::from_ints(&[0, 1]),
            RatVector::from_ints(&[0, -1]),
            RatVector::from_ints(&[1, 1]).scale(&rat(1, 2)),
        ];
        let b = Polytope::from_facet_normals(2, &normals, &DdLimits::default()).unwrap();
        assert_eq!(b.facet_normals().len(), 4, "the diagonal halfspace is redundant");
    }

    #[test]
    fn origin_must_be_interior() {
        let pts = vec![
            RatVector::from_ints(&[0, 0]),
            RatVector::from_ints(&[1, 0]),
            RatVector::from_ints(&[0, 1]),
        ];
        let err = Polytope::from_vertices(2, &pts, &DdLimits::default()).unwrap_err();
        assert_eq!(err, Error::OriginNotInterior);
    }
}
