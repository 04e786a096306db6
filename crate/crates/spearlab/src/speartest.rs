//! Certified deciders for spear vectors and spear sets.
//!
//! On a polyhedral ball a unit vector `z` is a spear exactly when every
//! extreme point `f` of the dual ball satisfies `|f·z| = 1`; a finite set
//! `F ⊆ B_X` is a spear set exactly when every such `f` attains
//! `max_{z∈F} |f·z| = 1`. Each decision carries a witness that re-verifies
//! by direct evaluation.

use crate::error::{Error, Result};
use crate::rational::{format_scalar, RatVector, Rational};
use crate::spaces::PolyhedralSpace;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// An extreme dual point on which the modulus condition fails.
    DualVertex,
    /// A ball vertex involved in a failing pair or outside a generating set.
    BallVertex,
    /// An extreme dual point of the codomain in a failing operator pair.
    CodomainDualVertex,
    /// A point of the unit sphere minimizing a numerical radius.
    Minimizer,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vector: RatVector,
    pub value: Rational,
}

impl Witness {
    pub fn new(kind: WitnessKind, vector: RatVector, value: Rational) -> Self {
        Witness { kind, vector, value }
    }
}

/// A decision plus exact witnesses, tagged with the criterion that produced
/// it so an independent verifier knows what to re-check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub decision: bool,
    pub criterion: String,
    pub witnesses: Vec<Witness>,
}

impl Certificate {
    fn yes(criterion: &str) -> Self {
        Certificate {
            decision: true,
            criterion: criterion.into(),
            witnesses: Vec::new(),
        }
    }

    fn no(criterion: &str, witnesses: Vec<Witness>) -> Self {
        Certificate {
            decision: false,
            criterion: criterion.into(),
            witnesses,
        }
    }
}

/// Criterion tag for [`is_spear_vector`].
pub const CRITERION_SPEAR_VECTOR: &str = "ext-dual-modulus";
/// Criterion tag for [`is_spear_set`].
pub const CRITERION_SPEAR_SET: &str = "gface-ext-dual";
/// Criterion tag for [`face_generates_ball`].
pub const CRITERION_FACE_GENERATES: &str = "aconv-face";

/// Decides whether the unit vector `z` is a spear vector of the space:
/// `|f·z| = 1` for every extreme dual point `f`. The input must have norm
/// exactly 1 (use [`PolyhedralSpace::normalize`] first if needed). A false
/// decision carries the first failing dual vertex in canonical order,
/// reported with its leading sign positive.
pub fn is_spear_vector(space: &PolyhedralSpace, z: &RatVector) -> Result<Certificate> {
    let norm = space.norm(z)?;
    if !norm.is_one() {
        return Err(Error::NotUnitNorm { norm });
    }
    for f in space.dual_vertices() {
        let value = f.dot(z).abs();
        if !value.is_one() {
            return Ok(Certificate::no(
                CRITERION_SPEAR_VECTOR,
                vec![Witness::new(WitnessKind::DualVertex, f.sign_canonical(), value)],
            ));
        }
    }
    // Spear vectors are extreme points of the ball.
    assert!(
        space.ball().is_vertex(z),
        "spear vector {z} must be a ball vertex"
    );
    Ok(Certificate::yes(CRITERION_SPEAR_VECTOR))
}

/// All spear vectors of the space. Spear vectors are extreme points, so
/// scanning the ball vertices enumerates them completely.
pub fn spear_vectors(space: &PolyhedralSpace) -> Vec<RatVector> {
    space
        .vertices()
        .iter()
        .filter(|v| {
            is_spear_vector(space, v)
                .expect("ball vertices are unit vectors")
                .decision
        })
        .cloned()
        .collect()
}

/// Decides whether the finite set `f_set ⊆ B_X` is a spear set: every
/// extreme dual point must attain modulus-one supremum on the set. In
/// finite dimensions the extreme dual points are finitely many and
/// discrete, so the dense-G-delta form of the criterion collapses to "all
/// of them".
pub fn is_spear_set(space: &PolyhedralSpace, f_set: &[RatVector]) -> Result<Certificate> {
    if f_set.is_empty() {
        return Err(Error::EmptySet);
    }
    for (index, z) in f_set.iter().enumerate() {
        if space.norm(z)? > Rational::one() {
            return Err(Error::ElementOutsideBall { index });
        }
    }
    for f in space.dual_vertices() {
        let best = f_set.iter().map(|z| f.dot(z).abs()).max().unwrap();
        if !best.is_one() {
            debug_assert!(best < Rational::one());
            return Ok(Certificate::no(
                CRITERION_SPEAR_SET,
                vec![Witness::new(WitnessKind::DualVertex, f.sign_canonical(), best)],
            ));
        }
    }
    Ok(Certificate::yes(CRITERION_SPEAR_SET))
}

/// Decides whether `B_X = aconv Face(S_X, z_star)` for a unit dual
/// functional: every ball vertex must be `±w` for some face vertex `w`.
/// This happens exactly when `z_star` is a spear vector of the dual space;
/// both routes are computed and must agree.
pub fn face_generates_ball(space: &PolyhedralSpace, z_star: &RatVector) -> Result<Certificate> {
    let face = space.face_of_ball(z_star)?;
    let mut failing: Option<&RatVector> = None;
    for v in space.vertices() {
        let hit = face.vertex_subset.binary_search(v).is_ok()
            || face.vertex_subset.binary_search(&v.neg()).is_ok();
        if !hit {
            failing = Some(v);
            break;
        }
    }

    let dual_route = is_spear_vector(&space.dual_space(), z_star)?;
    assert_eq!(
        failing.is_none(),
        dual_route.decision,
        "face generation and dual spearness must agree for {z_star}"
    );

    Ok(match failing {
        None => Certificate::yes(CRITERION_FACE_GENERATES),
        Some(v) => Certificate::no(
            CRITERION_FACE_GENERATES,
            vec![Witness::new(
                WitnessKind::BallVertex,
                v.clone(),
                z_star.dot(v).abs(),
            )],
        ),
    })
}

/// Re-checks a certificate produced by one of the deciders in this module
/// by direct evaluation; returns a description of the first mismatch.
pub fn verify_certificate(
    space: &PolyhedralSpace,
    subject: &[RatVector],
    cert: &Certificate,
) -> std::result::Result<(), String> {
    if cert.decision {
        if !cert.witnesses.is_empty() {
            return Err("positive decision should carry no witnesses".into());
        }
        return Ok(());
    }
    for w in &cert.witnesses {
        match cert.criterion.as_str() {
            c if c == CRITERION_SPEAR_VECTOR || c == CRITERION_SPEAR_SET => {
                let recomputed = subject
                    .iter()
                    .map(|z| w.vector.dot(z).abs())
                    .max()
                    .ok_or("empty subject")?;
                if recomputed != w.value {
                    return Err(format!(
                        "witness value {} does not re-evaluate ({})",
                        format_scalar(&w.value),
                        format_scalar(&recomputed)
                    ));
                }
                if w.value.is_one() {
                    return Err("failure witness evaluates to modulus one".into());
                }
                if !space
                    .dual_vertices()
                    .iter()
                    .any(|f| *f == w.vector || *f == w.vector.neg())
                {
                    return Err("witness is not an extreme dual point".into());
                }
            }
            c if c == CRITERION_FACE_GENERATES => {
                if !space.ball().is_vertex(&w.vector) {
                    return Err("witness is not a ball vertex".into());
                }
                let z_star = subject.first().ok_or("missing functional")?;
                if z_star.dot(&w.vector).abs().is_one() {
                    return Err("witness vertex lies on the face after all".into());
                }
            }
            other => return Err(format!("unknown criterion `{other}`")),
        }
    }
    Ok(())
}
