//! Exact conversion between vertex and facet descriptions of polytopes.
//!
//! The facet-to-vertex direction runs the double description method on the
//! homogenization cone `{(x,t) : a·x - b t <= 0, t >= 0}`: start from a
//! simplicial subcone picked from the constraint rows, then insert the
//! remaining constraints one at a time, combining adjacent feasible and
//! violating rays on each cutting hyperplane. Adjacency is the standard
//! combinatorial test on tight sets, which is valid because every
//! intermediate cone here is pointed.
//!
//! The vertex-to-facet direction reduces to the first one by polarity:
//! translate the barycenter of the input to the origin (it is interior for a
//! full-dimensional hull) and enumerate the vertices of the polar body.

use crate::error::{Error, Result};
use crate::rational::{RatVector, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// One halfspace `normal · x <= offset`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub normal: RatVector,
    pub offset: Rational,
}

impl Facet {
    pub fn new(normal: RatVector, offset: Rational) -> Self {
        Facet { normal, offset }
    }

    /// Primitive integer representative of the same halfspace.
    fn canonical(&self) -> Facet {
        let mut coords: Vec<Rational> = self.normal.iter().cloned().collect();
        coords.push(self.offset.clone());
        let prim = RatVector::new(coords).primitive();
        let offset = prim[prim.dim() - 1].clone();
        let normal = RatVector::new(prim.as_slice()[..prim.dim() - 1].to_vec());
        Facet { normal, offset }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DdLimits {
    /// Cap on the number of rays alive at any point of the enumeration.
    pub vertex_cap: usize,
}

static DEFAULT_VERTEX_CAP: std::sync::atomic::AtomicUsize =
    std::sync::atomic::AtomicUsize::new(50_000);

/// Overrides the process-wide default vertex cap (50,000).
pub fn set_default_vertex_cap(cap: usize) {
    DEFAULT_VERTEX_CAP.store(cap, std::sync::atomic::Ordering::Relaxed);
}

impl Default for DdLimits {
    fn default() -> Self {
        DdLimits {
            vertex_cap: DEFAULT_VERTEX_CAP.load(std::sync::atomic::Ordering::Relaxed),
        }
    }
}

/// Fixed-width bitmask over constraint rows.
#[derive(Clone, PartialEq, Eq)]
struct Mask {
    words: Vec<u64>,
}

impl Mask {
    fn empty(bits: usize) -> Self {
        Mask {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn contains(&self, other: &Mask) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == *b)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Primitive integer vector: the content (gcd of entries) divided out.
type IntVec = Vec<BigInt>;

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn int_primitive(mut v: IntVec) -> IntVec {
    let mut gcd = BigInt::zero();
    for c in &v {
        gcd = gcd.gcd(c);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &gcd;
        }
    }
    v
}

/// Scales a rational vector to the primitive integer vector with the same
/// direction.
fn to_int_vec(v: &RatVector) -> IntVec {
    let prim = v.primitive();
    prim.iter().map(|c| c.numer().clone()).collect()
}

struct Ray {
    dir: IntVec,
    /// Rows (over the full row list) on which this ray is tight.
    zero: Mask,
}

/// Reduces `v` against the echelon rows in `basis`; returns the reduced
/// vector if it is nonzero.
fn reduce(v: &RatVector, basis: &[(usize, RatVector)]) -> Option<RatVector> {
    let mut v = v.clone();
    for (lead, row) in basis {
        if !v[*lead].is_zero() {
            let f = &v[*lead] / &row[*lead];
            v = v.sub(&row.scale(&f));
        }
    }
    v.iter().position(|c| !c.is_zero()).map(|_| v)
}

/// Rank of a set of rational vectors.
pub(crate) fn rank(rows: &[RatVector]) -> usize {
    let mut basis: Vec<(usize, RatVector)> = Vec::new();
    for r in rows {
        if let Some(red) = reduce(r, &basis) {
            let lead = red.iter().position(|c| !c.is_zero()).unwrap();
            basis.push((lead, red));
        }
    }
    basis.len()
}

/// Exact inverse of a square matrix given as rows; `None` if singular.
#[allow(clippy::needless_range_loop)]
fn invert(rows: &[RatVector]) -> Option<Vec<RatVector>> {
    let n = rows.len();
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Rational> = r.iter().cloned().collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut a[r][col], Rational::zero());
            for c in 0..2 * n {
                if c == col {
                    continue;
                }
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    Some(
        (0..n)
            .map(|i| RatVector::new(a[i][n..].to_vec()))
            .collect(),
    )
}

fn zero_mask(dir: &[BigInt], rows: &[IntVec]) -> Mask {
    let mut m = Mask::empty(rows.len());
    for (i, r) in rows.iter().enumerate() {
        if int_dot(r, dir).is_zero() {
            m.set(i);
        }
    }
    m
}

/// Enumerates the vertices of `{x : facets}` exactly. The body must be
/// bounded; the result is irredundant and sorted.
pub fn vertices_from_facets(
    dim: usize,
    facets: &[Facet],
    limits: &DdLimits,
) -> Result<Vec<RatVector>> {
    for f in facets {
        f.normal.check_dim(dim)?;
    }
    let d1 = dim + 1;

    // Homogenized primitive integer rows m·z <= 0; the t >= 0 closure row
    // comes first, the facet rows follow in lexicographic order.
    let mut rows: Vec<IntVec> = Vec::with_capacity(facets.len() + 1);
    let mut closure = vec![BigInt::zero(); d1];
    closure[dim] = -BigInt::one();
    rows.push(closure);
    let mut frows: Vec<IntVec> = facets
        .iter()
        .map(|f| {
            let c = f.canonical();
            let mut v: Vec<Rational> = c.normal.iter().cloned().collect();
            v.push(-c.offset);
            to_int_vec(&RatVector::new(v))
        })
        .collect();
    frows.sort();
    frows.dedup();
    rows.extend(frows);

    // Initial simplicial subcone from a maximal independent row subset.
    let rat_rows: Vec<RatVector> = rows
        .iter()
        .map(|r| RatVector::new(r.iter().map(|c| Rational::from_integer(c.clone())).collect()))
        .collect();
    let mut echelon: Vec<(usize, RatVector)> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    for (i, r) in rat_rows.iter().enumerate() {
        if echelon.len() == d1 {
            break;
        }
        if let Some(red) = reduce(r, &echelon) {
            let lead = red.iter().position(|c| !c.is_zero()).unwrap();
            echelon.push((lead, red));
            chosen.push(i);
        }
    }
    if chosen.len() < d1 {
        // The homogenization cone has a lineality direction, i.e. the body
        // contains a line.
        return Err(Error::UnboundedBody);
    }
    let b: Vec<RatVector> = chosen.iter().map(|&i| rat_rows[i].clone()).collect();
    let binv = invert(&b).expect("chosen rows are independent");
    let mut processed = Mask::empty(rows.len());
    for &i in &chosen {
        processed.set(i);
    }
    let mut rays: Vec<Ray> = (0..d1)
        .map(|j| {
            let col = to_int_vec(&RatVector::new((0..d1).map(|i| -&binv[i][j]).collect()));
            let zero = zero_mask(&col, &rows);
            Ray { dir: col, zero }
        })
        .collect();

    for k in 0..rows.len() {
        if chosen.contains(&k) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| int_dot(&rows[k], &r.dir)).collect();
        if vals.iter().any(|v| v.is_positive()) {
            let mut next: Vec<Ray> = Vec::new();
            let mut fresh: Vec<IntVec> = Vec::new();
            for (i, ray) in rays.iter().enumerate() {
                if !vals[i].is_positive() {
                    next.push(Ray {
                        dir: ray.dir.clone(),
                        zero: ray.zero.clone(),
                    });
                }
            }
            for (i, ri) in rays.iter().enumerate() {
                if !vals[i].is_negative() {
                    continue;
                }
                for (j, rj) in rays.iter().enumerate() {
                    if !vals[j].is_positive() {
                        continue;
                    }
                    let common = ri.zero.and(&rj.zero).and(&processed);
                    if common.count() + 2 < d1 {
                        continue;
                    }
                    let adjacent = rays.iter().enumerate().all(|(q, rq)| {
                        q == i || q == j || !rq.zero.and(&processed).contains(&common)
                    });
                    if adjacent {
                        // Positive combination tight on row k.
                        let dir: IntVec = ri
                            .dir
                            .iter()
                            .zip(&rj.dir)
                            .map(|(a, b)| a * &vals[j] - b * &vals[i])
                            .collect();
                        fresh.push(int_primitive(dir));
                    }
                }
            }
            fresh.sort();
            fresh.dedup();
            for dir in fresh {
                let zero = zero_mask(&dir, &rows);
                next.push(Ray { dir, zero });
            }
            rays = next;
            if rays.len() > limits.vertex_cap {
                return Err(Error::VertexCapExceeded {
                    limit: limits.vertex_cap,
                });
            }
        }
        processed.set(k);
    }

    let mut vertices: Vec<RatVector> = Vec::with_capacity(rays.len());
    for ray in &rays {
        let t = &ray.dir[dim];
        if t.is_zero() {
            return Err(Error::UnboundedBody);
        }
        debug_assert!(t.is_positive());
        vertices.push(RatVector::new(
            (0..dim)
                .map(|i| Rational::new(ray.dir[i].clone(), t.clone()))
                .collect(),
        ));
    }
    if vertices.is_empty() {
        return Err(Error::EmptyBody);
    }
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

/// Computes the irredundant facet list of `conv(points)` exactly. The input
/// must affinely span the whole space; the result is sorted.
pub fn facets_from_vertices(
    dim: usize,
    points: &[RatVector],
    limits: &DdLimits,
) -> Result<Vec<Facet>> {
    if points.is_empty() {
        return Err(Error::EmptyBody);
    }
    for p in points {
        p.check_dim(dim)?;
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    let shifted: Vec<RatVector> = pts.iter().map(|p| p.sub(&pts[0])).collect();
    if rank(&shifted) < dim {
        return Err(Error::NotFullDimensional);
    }

    // The vertex barycenter is interior, so the polar of the translated hull
    // is a bounded H-polytope whose vertices are exactly our facet normals.
    let n = Rational::from_integer(pts.len().into());
    let barycenter = pts
        .iter()
        .fold(RatVector::zero(dim), |acc, p| acc.add(p))
        .scale(&n.recip());
    let polar: Vec<Facet> = pts
        .iter()
        .map(|p| Facet::new(p.sub(&barycenter), Rational::one()))
        .collect();
    let normals = vertices_from_facets(dim, &polar, limits)?;

    let mut facets: Vec<Facet> = normals
        .into_iter()
        .map(|u| {
            let offset = Rational::one() + u.dot(&barycenter);
            Facet::new(u, offset).canonical()
        })
        .collect();
    facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
    Ok(facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, RatVector};

    fn unit_facets(dim: usize) -> Vec<Facet> {
        // The cube [-1,1]^dim.
        let mut fs = Vec::new();
        for i in 0..dim {
            fs.push(Facet::new(RatVector::unit(dim, i), rat_int(1)));
            fs.push(Facet::new(RatVector::unit(dim, i).neg(), rat_int(1)));
        }
        fs
    }

    fn sign_vectors(dim: usize) -> Vec<RatVector> {
        (0..1usize << dim)
            .map(|bits| {
                RatVector::new(
                    (0..dim)
                        .map(|i| if bits >> i & 1 == 1 { rat_int(1) } else { rat_int(-1) })
                        .collect(),
                )
            })
            .collect()
    }

    #[test]
    fn cube_vertices() {
        for dim in 1..=4 {
            let verts = vertices_from_facets(dim, &unit_facets(dim), &DdLimits::default()).unwrap();
            let mut expect = sign_vectors(dim);
            expect.sort();
            assert_eq!(verts, expect);
        }
    }

    #[test]
    fn cross_polytope_facets_are_sign_vectors() {
        for dim in 2..=4 {
            let points: Vec<RatVector> = (0..dim)
                .flat_map(|i| [RatVector::unit(dim, i), RatVector::unit(dim, i).neg()])
                .collect();
            let facets = facets_from_vertices(dim, &points, &DdLimits::default()).unwrap();
            assert_eq!(facets.len(), 1 << dim);
            for f in &facets {
                assert_eq!(f.offset, rat_int(1));
                assert!(f.normal.iter().all(|c| c == &rat_int(1) || c == &rat_int(-1)));
            }
        }
    }

    #[test]
    fn square_from_corners() {
        let facets =
            facets_from_vertices(2, &sign_vectors(2), &DdLimits::default()).unwrap();
        let mut normals: Vec<RatVector> = facets.iter().map(|f| f.normal.clone()).collect();
        normals.sort();
        let mut expect = vec![
            RatVector::from_ints(&[1, 0]),
            RatVector::from_ints(&[-1, 0]),
            RatVector::from_ints(&[0, 1]),
            RatVector::from_ints(&[0, -1]),
        ];
        expect.sort();
        assert_eq!(normals, expect);
        assert!(facets.iter().all(|f| f.offset == rat_int(1)));
    }

    #[test]
    fn unbounded_and_lower_dimensional_inputs_error() {
        // Single halfspace in the plane: unbounded.
        let err = vertices_from_facets(
            2,
            &[Facet::new(RatVector::from_ints(&[1, 0]), rat_int(1))],
            &DdLimits::default(),
        )
        .unwrap_err();
        assert_eq!(err, Error::UnboundedBody);

        // A segment does not span the plane.
        let err = facets_from_vertices(
            2,
            &[RatVector::from_ints(&[1, 0]), RatVector::from_ints(&[-1, 0])],
            &DdLimits::default(),
        )
        .unwrap_err();
        assert_eq!(err, Error::NotFullDimensional);
    }

    #[test]
    fn vertex_cap_trips() {
        let err = vertices_from_facets(4, &unit_facets(4), &DdLimits { vertex_cap: 3 }).unwrap_err();
        assert!(err.is_resource_cap());
    }

    #[test]
    fn simplex_with_vertex_at_origin() {
        // Facets of conv{0, e1, e2}: offsets are not all 1 here.
        let pts = vec![
            RatVector::from_ints(&[0, 0]),
            RatVector::from_ints(&[1, 0]),
            RatVector::from_ints(&[0, 1]),
        ];
        let facets = facets_from_vertices(2, &pts, &DdLimits::default()).unwrap();
        assert_eq!(facets.len(), 3);
        for p in &pts {
            for f in &facets {
                assert!(f.normal.dot(p) <= f.offset);
            }
        }
        let back = vertices_from_facets(2, &facets, &DdLimits::default()).unwrap();
        let mut expect = pts.clone();
        expect.sort();
        assert_eq!(back, expect);
    }
}
