//! Exact rational polyhedral cones in the cocharacter lattice and its dual:
//! canonical dual descriptions, extremal rays, strong convexity,
//! intersections, images under lattice automorphisms, and Hilbert bases of
//! the associated monoids.
//!
//! A cone is stored with four canonical pieces: the extremal rays of the
//! pointed quotient, a Hermite-form basis of the lineality lattice, and the
//! same two pieces for the dual cone (facet normals and span equations).
//! Dualization is then literally a field swap, which makes the duality
//! involution exact by construction.

mod dd;
mod hilbert;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lattice::{coords_dot, coords_primitive, Coords};
use crate::linalg;
use crate::{Error, Result};

pub use hilbert::{EnumCaps, HilbertBasis, MonoidBasis};

/// A rational polyhedral cone, canonical after construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    ambient_rank: usize,
    /// Extremal rays of the pointed quotient (canonical coset lifts, sorted).
    rays: Vec<Coords>,
    /// HNF basis of the lineality lattice; empty iff the cone is pointed.
    lineality: Vec<Coords>,
    /// Extremal rays of the dual cone modulo its lineality: the irredundant
    /// facet normals.
    normals: Vec<Coords>,
    /// HNF basis of the annihilator of the cone's span; together with
    /// `normals` these cut out the cone exactly.
    span_equations: Vec<Coords>,
}

impl Cone {
    /// Builds the canonical cone generated by `vectors`. Zero vectors are
    /// discarded, non-primitive inputs are primitivized, redundant
    /// generators are removed. An empty input gives the zero cone.
    pub fn from_generators(ambient_rank: usize, vectors: &[Coords]) -> Result<Cone> {
        check_ranks(ambient_rank, vectors)?;
        let gens: Vec<Coords> = vectors
            .iter()
            .filter_map(|v| coords_primitive(v))
            .collect();
        // The dual cone of the generated cone has the generators as its
        // inequality description.
        let dual = dd::double_description(ambient_rank, &gens);
        let ineqs = with_line_pairs(&dual.rays, &dual.lineality);
        let primal = dd::double_description(ambient_rank, &ineqs);
        Ok(Cone {
            ambient_rank,
            rays: primal.rays,
            lineality: primal.lineality,
            normals: dual.rays,
            span_equations: dual.lineality,
        })
    }

    /// Builds the canonical cone `{γ : ⟨a, γ⟩ ≥ 0 for every inequality a}`.
    /// An empty input gives the full space.
    pub fn from_inequalities(ambient_rank: usize, inequalities: &[Coords]) -> Result<Cone> {
        check_ranks(ambient_rank, inequalities)?;
        let ineqs: Vec<Coords> = inequalities
            .iter()
            .filter_map(|v| coords_primitive(v))
            .collect();
        let primal = dd::double_description(ambient_rank, &ineqs);
        let gens = with_line_pairs(&primal.rays, &primal.lineality);
        let dual = dd::double_description(ambient_rank, &gens);
        Ok(Cone {
            ambient_rank,
            rays: primal.rays,
            lineality: primal.lineality,
            normals: dual.rays,
            span_equations: dual.lineality,
        })
    }

    /// The zero cone `{0}`.
    pub fn zero(ambient_rank: usize) -> Cone {
        Cone::from_generators(ambient_rank, &[]).expect("zero cone is always valid")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Extremal rays of the pointed quotient. Equals the one-skeleton when
    /// the cone is pointed.
    pub fn rays(&self) -> &[Coords] {
        &self.rays
    }

    /// HNF basis of the lineality lattice; empty iff pointed.
    pub fn lineality(&self) -> &[Coords] {
        &self.lineality
    }

    /// Irredundant facet normals (modulo the span equations).
    pub fn normals(&self) -> &[Coords] {
        &self.normals
    }

    /// HNF basis of the integral annihilator of the cone's span.
    pub fn span_equations(&self) -> &[Coords] {
        &self.span_equations
    }

    /// Full generator list: quotient rays plus ± each lineality basis
    /// vector. Sorted; generates the cone exactly.
    pub fn generators(&self) -> Vec<Coords> {
        with_line_pairs(&self.rays, &self.lineality)
    }

    /// Full inequality list: facet normals plus ± each span equation.
    /// Sorted; cuts out the cone exactly.
    pub fn inequality_list(&self) -> Vec<Coords> {
        with_line_pairs(&self.normals, &self.span_equations)
    }

    /// The dual cone `{χ : ⟨χ, γ⟩ ≥ 0 for all γ in the cone}`, an exact
    /// involution on canonical cones.
    pub fn dual(&self) -> Cone {
        Cone {
            ambient_rank: self.ambient_rank,
            rays: self.normals.clone(),
            lineality: self.span_equations.clone(),
            normals: self.rays.clone(),
            span_equations: self.lineality.clone(),
        }
    }

    /// Membership: every facet pairing nonnegative and every span equation
    /// exactly zero.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: v.len(),
            });
        }
        Ok(self.normals.iter().all(|a| !coords_dot(a, v).is_negative())
            && self.span_equations.iter().all(|a| coords_dot(a, v).is_zero()))
    }

    /// True iff the cone contains no line: `σ ∩ −σ = {0}`.
    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Alias used in polyhedral contexts.
    pub fn is_pointed(&self) -> bool {
        self.is_strongly_convex()
    }

    pub fn is_zero_cone(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.ambient_rank - self.span_equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Intersection: the union of the inequality systems, re-canonicalized.
    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        let mut ineqs = self.inequality_list();
        ineqs.extend(other.inequality_list());
        Cone::from_inequalities(self.ambient_rank, &ineqs)
    }

    /// Image under an integer lattice automorphism (rows act on the left).
    pub fn apply_matrix(&self, matrix: &[Vec<BigInt>]) -> Result<Cone> {
        if matrix.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: matrix.len(),
            });
        }
        let gens: Vec<Coords> = self
            .generators()
            .iter()
            .map(|g| linalg::mat_apply(matrix, g))
            .collect();
        Cone::from_generators(self.ambient_rank, &gens)
    }

    /// Containment of cones: every generator of `other` lies in `self`.
    pub fn contains_cone(&self, other: &Cone) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The unique minimal generating set of the monoid `σ ∩ Z^n`; the cone
    /// must be pointed.
    pub fn hilbert_basis(&self, caps: &EnumCaps) -> Result<HilbertBasis> {
        hilbert::hilbert_basis(self, caps)
    }

    /// Minimal generators of the (possibly non-pointed) lattice-point
    /// monoid: a basis of the unit group plus irreducibles modulo units.
    pub fn monoid_basis(&self, caps: &EnumCaps) -> Result<MonoidBasis> {
        hilbert::monoid_basis(self, caps)
    }
}

/// Rays plus ± every lineality basis vector, sorted and deduplicated.
fn with_line_pairs(rays: &[Coords], lines: &[Coords]) -> Vec<Coords> {
    let mut out: Vec<Coords> = rays.to_vec();
    for l in lines {
        let rep = dd::line_rep(l);
        out.push(rep.iter().map(|x| -x).collect());
        out.push(rep);
    }
    out.sort();
    out.dedup();
    out
}

fn check_ranks(ambient_rank: usize, vectors: &[Coords]) -> Result<()> {
    for v in vectors {
        if v.len() != ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: ambient_rank,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// Report form of the one-skeleton: rays only for pointed cones, otherwise
/// the quotient rays together with the lineality marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaysReport {
    pub pointed: bool,
    pub rays: Vec<Coords>,
    pub lineality: Vec<Coords>,
}

/// The extremal-ray listing of a canonical cone.
pub fn rays_report(cone: &Cone) -> RaysReport {
    RaysReport {
        pointed: cone.is_pointed(),
        rays: cone.rays().to_vec(),
        lineality: cone.lineality().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::coords_from_i64;

    fn vs(rows: &[&[i64]]) -> Vec<Coords> {
        rows.iter().map(|r| coords_from_i64(r)).collect()
    }

    fn cone_of(rows: &[&[i64]]) -> Cone {
        let rank = rows.first().map_or(2, |r| r.len());
        Cone::from_generators(rank, &vs(rows)).unwrap()
    }

    #[test]
    fn orthant_after_primitivization() {
        let c = Cone::from_generators(2, &vs(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(c.rays(), &vs(&[&[0, 1], &[1, 0]])[..]);
        assert_eq!(c.normals(), &vs(&[&[0, 1], &[1, 0]])[..]);
        assert!(c.is_strongly_convex());
    }

    #[test]
    fn interior_generator_removed() {
        let c = cone_of(&[&[1, 0], &[1, 1], &[1, 2]]);
        assert_eq!(c.rays(), &vs(&[&[1, 0], &[1, 2]])[..]);
    }

    #[test]
    fn zero_cone_canonical_form() {
        let c = Cone::zero(2);
        assert!(c.rays().is_empty());
        assert!(c.is_zero_cone());
        // Inequality set marking {0}: ± the entire dual basis.
        assert_eq!(
            c.inequality_list(),
            vs(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]])
        );
    }

    #[test]
    fn dual_examples() {
        let orthant = cone_of(&[&[1, 0], &[0, 1]]);
        assert_eq!(orthant.dual(), orthant);

        let wedge = cone_of(&[&[1, 0], &[1, 2]]);
        assert_eq!(wedge.dual().rays(), &vs(&[&[0, 1], &[2, -1]])[..]);

        let zero = Cone::zero(2);
        let full = zero.dual();
        assert!(full.rays().is_empty());
        assert_eq!(full.lineality(), &vs(&[&[1, 0], &[0, 1]])[..]);
        assert_eq!(full.generators(), vs(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]));
    }

    #[test]
    fn dual_is_involution_on_examples() {
        for c in [
            cone_of(&[&[1, 0], &[0, 1]]),
            cone_of(&[&[1, 0], &[1, 2]]),
            cone_of(&[&[1, 1], &[1, -1]]),
            cone_of(&[&[1, 0], &[-1, 0], &[0, 1]]),
            Cone::zero(2),
            cone_of(&[&[1, 2]]),
        ] {
            assert_eq!(c.dual().dual(), c);
        }
    }

    #[test]
    fn rays_flag_lineality() {
        let half = cone_of(&[&[1, 0], &[-1, 0], &[0, 1]]);
        let report = rays_report(&half);
        assert!(!report.pointed);
        assert_eq!(report.lineality, vs(&[&[1, 0]]));
        assert_eq!(report.rays, vs(&[&[0, 1]]));

        let single = cone_of(&[&[1, 2]]);
        let report = rays_report(&single);
        assert!(report.pointed);
        assert_eq!(report.rays, vs(&[&[1, 2]]));
    }

    #[test]
    fn strong_convexity() {
        assert!(cone_of(&[&[1, 0], &[0, 1]]).is_strongly_convex());
        assert!(!cone_of(&[&[1, 0], &[-1, 0]]).is_strongly_convex());
        assert!(cone_of(&[&[1, 1], &[1, -1]]).is_strongly_convex());
    }

    #[test]
    fn intersection_examples() {
        let orthant = cone_of(&[&[1, 0], &[0, 1]]);
        let half = Cone::from_inequalities(2, &vs(&[&[1, -1]])).unwrap();
        let c = orthant.intersect(&half).unwrap();
        assert_eq!(c.rays(), &vs(&[&[1, 0], &[1, 1]])[..]);

        assert_eq!(orthant.intersect(&orthant).unwrap(), orthant);

        let a = cone_of(&[&[1, 0]]);
        let b = cone_of(&[&[0, 1]]);
        assert!(a.intersect(&b).unwrap().is_zero_cone());
    }

    #[test]
    fn apply_swap() {
        let swap = vs(&[&[0, 1], &[1, 0]]);
        let c = cone_of(&[&[1, 0], &[1, 1]]);
        let image = c.apply_matrix(&swap).unwrap();
        assert_eq!(image.rays(), &vs(&[&[0, 1], &[1, 1]])[..]);

        let orthant = cone_of(&[&[1, 0], &[0, 1]]);
        assert_eq!(orthant.apply_matrix(&swap).unwrap(), orthant);
    }

    #[test]
    fn membership_examples() {
        let orthant = cone_of(&[&[1, 0], &[0, 1]]);
        assert!(orthant.contains(&coords_from_i64(&[2, 3])).unwrap());
        assert!(!orthant.contains(&coords_from_i64(&[-1, 3])).unwrap());

        let ray = cone_of(&[&[1, 2]]);
        assert!(ray.contains(&coords_from_i64(&[2, 4])).unwrap());
        assert!(!ray.contains(&coords_from_i64(&[1, 1])).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let orthant = cone_of(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            orthant.contains(&coords_from_i64(&[1, 2, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
        let c3 = cone_of(&[&[1, 0, 0]]);
        assert!(matches!(
            orthant.intersect(&c3),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
