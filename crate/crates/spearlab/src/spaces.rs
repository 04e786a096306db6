//! Finite-dimensional real normed spaces whose unit ball is a symmetric
//! polytope.
//!
//! A space keeps its ball in both representations plus the vertex list of
//! the polar ball, which realizes the extreme points of the dual unit ball.
//! The norm of `x` is `max |f·x|` over those dual vertices; by polarity this
//! agrees with the Minkowski gauge of the ball.

use crate::error::{Error, Result};
use crate::exactgeom::{DdLimits, Polytope};
use crate::rational::{rat, RatVector, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyhedralSpace {
    label: String,
    ball: Polytope,
    /// Vertices of `polar(ball)`, i.e. the extreme points of the dual ball.
    dual_vertices: Vec<RatVector>,
}

impl fmt::Debug for PolyhedralSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PolyhedralSpace({}, dim {}, {} vertices, {} dual vertices)",
            self.label,
            self.dim(),
            self.ball.vertices().len(),
            self.dual_vertices.len()
        )
    }
}

/// A face of the unit ball: the subset where a unit dual functional attains
/// its supremum 1, recorded through the ball vertices lying on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    pub functional: RatVector,
    pub vertex_subset: Vec<RatVector>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SumKind {
    SumInf,
    SumOne,
}

impl PolyhedralSpace {
    /// Builds a space from ball vertices. The input is symmetrized
    /// (`V ∪ -V`), canonicalized and made irredundant; it must span the
    /// full dimension.
    pub fn from_vertices(label: impl Into<String>, dim: usize, vertices: &[RatVector]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyBody);
        }
        let mut pts = Vec::with_capacity(2 * vertices.len());
        for v in vertices {
            v.check_dim(dim)?;
            pts.push(v.clone());
            pts.push(v.neg());
        }
        let ball = Polytope::from_vertices(dim, &pts, &DdLimits::default())?;
        Self::from_ball(label, ball)
    }

    /// Builds a space from facet normals (`normal · x <= 1` each); the
    /// normal set is symmetrized first.
    pub fn from_facet_normals(
        label: impl Into<String>,
        dim: usize,
        normals: &[RatVector],
    ) -> Result<Self> {
        if normals.is_empty() {
            return Err(Error::EmptyBody);
        }
        let mut ns = Vec::with_capacity(2 * normals.len());
        for n in normals {
            n.check_dim(dim)?;
            ns.push(n.clone());
            ns.push(n.neg());
        }
        let ball = Polytope::from_facet_normals(dim, &ns, &DdLimits::default())?;
        Self::from_ball(label, ball)
    }

    fn from_ball(label: impl Into<String>, ball: Polytope) -> Result<Self> {
        assert!(ball.is_symmetric(), "symmetrization must yield a symmetric ball");
        let dual_vertices = ball.polar().vertices().to_vec();
        Ok(PolyhedralSpace {
            label: label.into(),
            ball,
            dual_vertices,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.ball.dim()
    }

    pub fn ball(&self) -> &Polytope {
        &self.ball
    }

    /// Extreme points of the unit ball.
    pub fn vertices(&self) -> &[RatVector] {
        self.ball.vertices()
    }

    /// Extreme points of the dual unit ball.
    pub fn dual_vertices(&self) -> &[RatVector] {
        &self.dual_vertices
    }

    /// Same normed space, ignoring labels.
    pub fn same_space(&self, other: &PolyhedralSpace) -> bool {
        self.ball == *other.ball()
    }

    /// The exact norm `max |f·x|` over the extreme dual points.
    pub fn norm(&self, x: &RatVector) -> Result<Rational> {
        x.check_dim(self.dim())?;
        Ok(self
            .dual_vertices
            .iter()
            .map(|f| f.dot(x).abs())
            .max()
            .unwrap())
    }

    /// Norm in the dual space: `max |f·v|` over the ball vertices.
    pub fn dual_norm(&self, f: &RatVector) -> Result<Rational> {
        f.check_dim(self.dim())?;
        Ok(self
            .ball
            .vertices()
            .iter()
            .map(|v| f.dot(v).abs())
            .max()
            .unwrap())
    }

    /// Divides by the (always rational) norm; errors on the zero vector.
    pub fn normalize(&self, x: &RatVector) -> Result<RatVector> {
        let n = self.norm(x)?;
        if n.is_zero() {
            return Err(Error::NotUnitNorm { norm: n });
        }
        Ok(x.scale(&n.recip()))
    }

    /// The dual space: its ball is the polar of this ball.
    pub fn dual_space(&self) -> PolyhedralSpace {
        PolyhedralSpace {
            label: format!("{}*", self.label),
            ball: self.ball.polar(),
            dual_vertices: self.ball.vertices().to_vec(),
        }
    }

    /// Face of the unit ball defined by a functional of dual norm exactly 1.
    pub fn face_of_ball(&self, functional: &RatVector) -> Result<Face> {
        let n = self.dual_norm(functional)?;
        if !n.is_one() {
            return Err(Error::NotUnitDualNorm { norm: n });
        }
        let vertex_subset: Vec<RatVector> = self
            .ball
            .vertices()
            .iter()
            .filter(|v| functional.dot(v).is_one())
            .cloned()
            .collect();
        debug_assert!(!vertex_subset.is_empty());
        Ok(Face {
            functional: functional.clone(),
            vertex_subset,
        })
    }

    /// Ball vertices strictly inside the slice `{x : functional·x > 1 - eps}`.
    /// Only vertices are reported; the slice itself is an infinite region.
    pub fn gslice_vertices(&self, functional: &RatVector, eps: &Rational) -> Result<Vec<RatVector>> {
        functional.check_dim(self.dim())?;
        if !eps.is_positive() {
            return Err(Error::NonpositiveEpsilon);
        }
        let threshold = Rational::one() - eps;
        Ok(self
            .ball
            .vertices()
            .iter()
            .filter(|v| functional.dot(v) > threshold)
            .cloned()
            .collect())
    }
}

/// Absolute sum of two or more spaces. With `SumInf` the ball is the product
/// of the balls (vertices: all tuples of summand vertices); with `SumOne` it
/// is the convex hull of the embedded summand balls (vertices: summand
/// vertices padded with zeros).
pub fn direct_sum(spaces: &[&PolyhedralSpace], kind: SumKind) -> Result<PolyhedralSpace> {
    if spaces.len() < 2 {
        return Err(Error::TooFewSummands);
    }
    let dim: usize = spaces.iter().map(|s| s.dim()).sum();
    let mut vertices: Vec<RatVector> = Vec::new();
    match kind {
        SumKind::SumInf => {
            let mut tuples: Vec<Vec<Rational>> = vec![Vec::new()];
            for s in spaces {
                let mut next = Vec::with_capacity(tuples.len() * s.vertices().len());
                for prefix in &tuples {
                    for v in s.vertices() {
                        let mut t = prefix.clone();
                        t.extend(v.iter().cloned());
                        next.push(t);
                    }
                }
                tuples = next;
            }
            vertices.extend(tuples.into_iter().map(RatVector::new));
        }
        SumKind::SumOne => {
            let mut offset = 0;
            for s in spaces {
                for v in s.vertices() {
                    let mut t = vec![Rational::zero(); dim];
                    for (i, c) in v.iter().enumerate() {
                        t[offset + i] = c.clone();
                    }
                    vertices.push(RatVector::new(t));
                }
                offset += s.dim();
            }
        }
    }
    let symbol = match kind {
        SumKind::SumInf => "+inf+",
        SumKind::SumOne => "+1+",
    };
    let label = spaces
        .iter()
        .map(|s| s.label().to_string())
        .collect::<Vec<_>>()
        .join(symbol);
    PolyhedralSpace::from_vertices(label, dim, &vertices)
}

/// `ℓ1ⁿ`: ball vertices are the signed standard basis vectors.
pub fn l1_space(n: usize) -> Result<PolyhedralSpace> {
    if n == 0 {
        return Err(Error::InvalidInput("dimension must be at least 1".into()));
    }
    let verts: Vec<RatVector> = (0..n).map(|i| RatVector::unit(n, i)).collect();
    PolyhedralSpace::from_vertices(format!("l1:{n}"), n, &verts)
}

/// `ℓ∞ⁿ`: ball vertices are all sign vectors.
pub fn linf_space(n: usize) -> Result<PolyhedralSpace> {
    if n == 0 {
        return Err(Error::InvalidInput("dimension must be at least 1".into()));
    }
    let verts: Vec<RatVector> = (0..n).map(|i| RatVector::unit(n, i)).collect();
    PolyhedralSpace::from_facet_normals(format!("linf:{n}"), n, &verts)
}

/// The four-dimensional space whose ball is the convex hull of all sign
/// vectors except `±(1,1,1,1)`.
pub fn example52_x1() -> PolyhedralSpace {
    let verts: Vec<RatVector> = (0..16u32)
        .map(|bits| {
            RatVector::new(
                (0..4)
                    .map(|i| {
                        if bits >> i & 1 == 1 {
                            Rational::one()
                        } else {
                            -Rational::one()
                        }
                    })
                    .collect(),
            )
        })
        .filter(|v| v.iter().sum::<Rational>().abs() != rat(4, 1))
        .collect();
    PolyhedralSpace::from_vertices("example52_X1", 4, &verts).expect("fixture is valid")
}

/// A hexagon-shaped two-dimensional fixture with exact rational vertices
/// `(±1, 0), (±1/2, ±1)`. It is not metrically regular; its numerical index
/// is a regression constant, not a literature value.
pub fn hexagon_space() -> PolyhedralSpace {
    let verts = vec![
        RatVector::from_ints(&[1, 0]),
        RatVector::new(vec![rat(1, 2), rat(1, 1)]),
        RatVector::new(vec![rat(-1, 2), rat(1, 1)]),
    ];
    PolyhedralSpace::from_vertices("hexagon", 2, &verts).expect("fixture is valid")
}

/// Largest `n` accepted for the `l1:n` / `linf:n` fixtures.
pub const MAX_FIXTURE_DIM: usize = 8;

/// Built-in space fixtures: `l1:n`, `linf:n` (n ≤ 8), `example52_X1`,
/// `example52_X2`, `example52_Y1`, `example52_Y2`, `hexagon`.
pub fn fixture(name: &str) -> Result<PolyhedralSpace> {
    let parse_n = |s: &str| -> Result<usize> {
        let n: usize = s
            .parse()
            .map_err(|_| Error::UnknownFixture(name.to_string()))?;
        if n == 0 || n > MAX_FIXTURE_DIM {
            return Err(Error::InvalidInput(format!(
                "fixture dimension must be between 1 and {MAX_FIXTURE_DIM}"
            )));
        }
        Ok(n)
    };
    if let Some(s) = name.strip_prefix("l1:") {
        return l1_space(parse_n(s)?);
    }
    if let Some(s) = name.strip_prefix("linf:") {
        return linf_space(parse_n(s)?);
    }
    match name {
        "example52_X1" => Ok(example52_x1()),
        "example52_X2" => {
            let mut s = l1_space(4)?;
            s.label = "example52_X2".into();
            Ok(s)
        }
        "example52_Y1" => {
            let mut s = linf_space(4)?;
            s.label = "example52_Y1".into();
            Ok(s)
        }
        "example52_Y2" => {
            let mut s = example52_x1().dual_space();
            s.label = "example52_Y2".into();
            Ok(s)
        }
        "hexagon" => Ok(hexagon_space()),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// Names of all built-in space fixtures, with `n` standing for 1..=8.
pub fn fixture_names() -> Vec<&'static str> {
    vec![
        "l1:n",
        "linf:n",
        "example52_X1",
        "example52_X2",
        "example52_Y1",
        "example52_Y2",
        "hexagon",
    ]
}

pub type SpaceRef = Arc<PolyhedralSpace>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn symmetrization_of_half_basis() {
        let s = PolyhedralSpace::from_vertices(
            "t",
            2,
            &[RatVector::unit(2, 0), RatVector::unit(2, 1)],
        )
        .unwrap();
        assert_eq!(s.vertices().len(), 4);
        assert!(s.same_space(&l1_space(2).unwrap()));
    }

    #[test]
    fn from_facets_square() {
        let s = PolyhedralSpace::from_facet_normals(
            "t",
            2,
            &[RatVector::unit(2, 0), RatVector::unit(2, 1)],
        )
        .unwrap();
        assert!(s.same_space(&linf_space(2).unwrap()));
    }

    #[test]
    fn x1_ball_and_dual() {
        let x1 = example52_x1();
        assert_eq!(x1.vertices().len(), 14);
        assert_eq!(x1.dual_vertices().len(), 10);
        let corner = RatVector::new(vec![rat(1, 2); 4]);
        assert!(x1.dual_vertices().contains(&corner));
        // Norm checks: a retained sign vector is on the sphere; the deleted
        // corner has norm 2, witnessed by the dual corner functional plus the
        // membership of (1/2,1/2,1/2,1/2) in the ball (it is the average of
        // the four one-negative-entry vertices).
        assert_eq!(x1.norm(&RatVector::from_ints(&[1, 1, -1, -1])).unwrap(), rat_int(1));
        assert_eq!(x1.norm(&RatVector::from_ints(&[1, 1, 1, 1])).unwrap(), rat_int(2));
        let ones: Vec<RatVector> = vec![
            RatVector::from_ints(&[-1, 1, 1, 1]),
            RatVector::from_ints(&[1, -1, 1, 1]),
            RatVector::from_ints(&[1, 1, -1, 1]),
            RatVector::from_ints(&[1, 1, 1, -1]),
        ];
        let avg = ones
            .iter()
            .fold(RatVector::zero(4), |a, v| a.add(v))
            .scale(&rat(1, 4));
        assert_eq!(avg, corner);
        assert!(x1.ball().contains(&avg).unwrap());
        assert!(!x1.ball().contains(&RatVector::from_ints(&[1, 1, 1, 1])).unwrap());
    }

    #[test]
    fn l1_norm_is_sum_of_absolute_values() {
        let s = l1_space(3).unwrap();
        assert_eq!(s.norm(&RatVector::from_ints(&[1, -2, 3])).unwrap(), rat_int(6));
        assert_eq!(s.norm(&RatVector::zero(3)).unwrap(), rat_int(0));
    }

    #[test]
    fn duality_is_an_involution() {
        for s in [l1_space(3).unwrap(), linf_space(2).unwrap(), example52_x1(), hexagon_space()] {
            let dd = s.dual_space().dual_space();
            assert!(dd.same_space(&s));
        }
        assert!(l1_space(3).unwrap().dual_space().same_space(&linf_space(3).unwrap()));
        assert!(linf_space(4).unwrap().dual_space().same_space(&l1_space(4).unwrap()));
    }

    #[test]
    fn faces() {
        let l1 = l1_space(2).unwrap();
        let f = l1.face_of_ball(&RatVector::from_ints(&[1, 1])).unwrap();
        assert_eq!(
            f.vertex_subset,
            vec![RatVector::from_ints(&[0, 1]), RatVector::from_ints(&[1, 0])]
        );
        let linf = linf_space(2).unwrap();
        let f = linf.face_of_ball(&RatVector::from_ints(&[1, 0])).unwrap();
        assert_eq!(
            f.vertex_subset,
            vec![RatVector::from_ints(&[1, -1]), RatVector::from_ints(&[1, 1])]
        );
        // X1, functional (1/2,...,1/2): exactly the one-negative-entry
        // vertices, since (1/2)·(sum of entries) = 1 forces sum = 2.
        let x1 = example52_x1();
        let f = x1.face_of_ball(&RatVector::new(vec![rat(1, 2); 4])).unwrap();
        assert_eq!(f.vertex_subset.len(), 4);
        for v in &f.vertex_subset {
            assert_eq!(v.iter().sum::<Rational>(), rat_int(2));
        }
        assert!(matches!(
            l1.face_of_ball(&RatVector::from_ints(&[2, 0])),
            Err(Error::NotUnitDualNorm { .. })
        ));
    }

    #[test]
    fn gslice_examples() {
        let l1 = l1_space(2).unwrap();
        assert_eq!(
            l1.gslice_vertices(&RatVector::from_ints(&[1, 0]), &rat(1, 2)).unwrap(),
            vec![RatVector::from_ints(&[1, 0])]
        );
        assert_eq!(
            l1.gslice_vertices(&RatVector::new(vec![rat_int(1), rat(1, 2)]), &rat(1, 4))
                .unwrap(),
            vec![RatVector::from_ints(&[1, 0])]
        );
        let linf = linf_space(2).unwrap();
        assert_eq!(
            linf.gslice_vertices(&RatVector::new(vec![rat(1, 2), rat(1, 2)]), &rat(1, 10))
                .unwrap(),
            vec![RatVector::from_ints(&[1, 1])]
        );
        assert!(matches!(
            l1.gslice_vertices(&RatVector::from_ints(&[1, 0]), &rat_int(0)),
            Err(Error::NonpositiveEpsilon)
        ));
    }

    #[test]
    fn sums() {
        let one = l1_space(1).unwrap();
        let s = direct_sum(&[&one, &one], SumKind::SumInf).unwrap();
        assert!(s.same_space(&linf_space(2).unwrap()));

        let linf2 = linf_space(2).unwrap();
        let s = direct_sum(&[&linf2, &linf2], SumKind::SumOne).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.vertices().len(), 8);
        for v in linf2.vertices() {
            let embedded = RatVector::concat(&[v, &RatVector::zero(2)]);
            assert!(s.vertices().contains(&embedded));
        }

        assert!(matches!(
            direct_sum(&[&one], SumKind::SumInf),
            Err(Error::TooFewSummands)
        ));
    }

    #[test]
    fn degenerate_inputs_error() {
        // A segment does not span the plane.
        assert!(matches!(
            PolyhedralSpace::from_vertices("t", 2, &[RatVector::unit(2, 0)]),
            Err(Error::NotFullDimensional)
        ));
        // A slab is unbounded.
        assert!(matches!(
            PolyhedralSpace::from_facet_normals("t", 2, &[RatVector::unit(2, 0)]),
            Err(Error::UnboundedBody)
        ));
        assert!(matches!(
            PolyhedralSpace::from_vertices("t", 2, &[]),
            Err(Error::EmptyBody)
        ));
    }

    #[test]
    fn fixtures_resolve() {
        assert_eq!(fixture("l1:3").unwrap().vertices().len(), 6);
        assert_eq!(fixture("linf:2").unwrap().vertices().len(), 4);
        assert_eq!(fixture("hexagon").unwrap().vertices().len(), 6);
        assert!(fixture("example52_Y2")
            .unwrap()
            .same_space(&example52_x1().dual_space()));
        assert!(matches!(fixture("l2:2"), Err(Error::UnknownFixture(_))));
        assert!(fixture("l1:9").is_err());
    }
}
