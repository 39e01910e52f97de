//! The classification layer for affine embeddings of the group.
//!
//! An embedding is recorded by its torus-slice cone: a strongly convex cone
//! of one-parameter subgroups in the cocharacter lattice, optionally backed
//! by a torus state whose dual set it is. On top of validation this module
//! computes weight monoids, biequivariance, the biequivariant resolution
//! with its universal property, morphism witnesses, one-skeleton classes
//! and the parabolic slice complex of the torus closure.
//!
//! Conjugation by arbitrary group elements is realized by the Weyl group on
//! the fixed torus; the intersection over the group defining the resolution
//! becomes the finite Weyl intersection of the slice. The search for
//! morphism conjugators ranges over the Weyl group only, which is a
//! sufficient (documented, possibly incomplete) realization of conjugation.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cones::{Cone, EnumCaps, MonoidBasis};
use crate::lattice::{pair, CharVec, CocharVec, Coords};
use crate::rootdata::{ParabolicType, RootDatum, WeylElement};
use crate::states::TorusState;
use crate::{Error, Result};

/// Classification datum of an affine embedding: the root datum, the
/// torus-slice cone, and the flags computed at validation time.
#[derive(Debug, Clone)]
pub struct GEmbedding {
    rd: Arc<RootDatum>,
    sigma: Cone,
    state: Option<TorusState>,
    biequivariant: bool,
}

impl PartialEq for GEmbedding {
    fn eq(&self, other: &Self) -> bool {
        self.rd == other.rd && self.sigma == other.sigma && self.state == other.state
    }
}
impl Eq for GEmbedding {}

/// Witness for a morphism: the source cone is contained in the conjugate of
/// the target cone, certified generator by generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismWitness {
    pub conjugator: WeylElement,
    pub certificates: Vec<InclusionCertificate>,
}

/// Membership evidence for one generator of the source cone: its pairings
/// against the full inequality list of the conjugated target cone, all
/// nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionCertificate {
    pub generator: Coords,
    pub pairings: Vec<BigInt>,
}

/// Outcome of the universal-property verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalityReport {
    pub y_in_x: bool,
    pub y_in_resolution: bool,
    pub resolution_in_x: bool,
    pub resolution_sigma: Cone,
    /// Set when the factorization fails; none is expected.
    pub counterexample: Option<String>,
}

/// One Weyl-orbit class of extremal rays, its dominant representative
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayOrbitClass {
    pub representative: Coords,
    /// The rays of the torus slice lying in this orbit.
    pub slice_rays: Vec<Coords>,
}

/// The two candidate divisor-class counts, reported side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneSkeletonReport {
    /// Within-torus classes: the extremal rays themselves (ray equality is
    /// the within-torus equivalence).
    pub torus_ray_classes: Vec<Coords>,
    pub weyl_orbit_classes: Vec<RayOrbitClass>,
    /// Rays sharing a Weyl orbit with another ray of the slice. For these
    /// the generic orbit-dimension step behind the divisor bijection is not
    /// verified, so the two counts may legitimately differ.
    pub genericity_flags: Vec<Coords>,
}

/// One parabolic cell of the slice complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceCell {
    pub parabolic: ParabolicType,
    pub cone: Cone,
    /// True when the cell has empty interior in the slice (its dimension
    /// drops).
    pub interior_empty: bool,
}

/// The finite parabolic decomposition of the torus slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceComplex {
    pub cells: Vec<SliceCell>,
}

impl GEmbedding {
    /// Validates a classification datum: the cone must be strongly convex,
    /// and a supplied state must have the cone as its dual set. The
    /// biequivariance flag is computed here.
    pub fn validate(
        rd: Arc<RootDatum>,
        sigma: Cone,
        state: Option<TorusState>,
    ) -> Result<GEmbedding> {
        if sigma.ambient_rank() != rd.rank() {
            return Err(Error::DimensionMismatch {
                expected: rd.rank(),
                found: sigma.ambient_rank(),
            });
        }
        if !sigma.is_strongly_convex() {
            return Err(Error::Classification(
                "strong convexity violated: contains γ and γ⁻¹".into(),
            ));
        }
        if let Some(xi) = &state {
            let dual = xi.dual_set()?;
            if dual != sigma {
                return Err(Error::Validation(
                    "the dual set of the supplied state does not equal the cone".into(),
                ));
            }
        }
        let biequivariant = weyl_stable(&rd, &sigma)?;
        let zero = vec![BigInt::from(0); sigma.ambient_rank()];
        debug_assert!(sigma.contains(&zero)?);
        Ok(GEmbedding {
            rd,
            sigma,
            state,
            biequivariant,
        })
    }

    pub fn root_datum(&self) -> &Arc<RootDatum> {
        &self.rd
    }

    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn state(&self) -> Option<&TorusState> {
        self.state.as_ref()
    }

    /// True iff the slice cone is stable under every Weyl element, the
    /// torus criterion for carrying compatible left and right actions.
    pub fn is_biequivariant(&self) -> bool {
        self.biequivariant
    }

    /// Generators of the torus-restricted coordinate algebra: the minimal
    /// monoid basis of the dual cone. When the slice is not
    /// full-dimensional the dual has units; they are reported as such.
    pub fn weight_monoid(&self, caps: &EnumCaps) -> Result<MonoidBasis> {
        self.sigma.dual().monoid_basis(caps)
    }

    /// Whether a character lies in the weight monoid's cone, i.e. whether
    /// the corresponding eigenfunction extends to the embedding: every
    /// generator of the slice pairs nonnegatively against it.
    pub fn membership(&self, chi: &CharVec) -> Result<bool> {
        for g in self.sigma.generators() {
            let gamma = CocharVec::new(g);
            if pair(chi, &gamma)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The embedding seen from a conjugated base point: the slice cone and
    /// any backing state move by `w`.
    pub fn conjugate(&self, w: &WeylElement) -> Result<GEmbedding> {
        let sigma = w.act_cone(&self.sigma)?;
        let state = self.state.as_ref().map(|xi| xi.conjugate(w));
        GEmbedding::validate(Arc::clone(&self.rd), sigma, state)
    }

    /// The biequivariant resolution: the Weyl intersection of the slice,
    /// together with the witness for the morphism from the resolution into
    /// this embedding. Idempotent on biequivariant inputs.
    pub fn biequivariant_resolution(&self) -> Result<(GEmbedding, MorphismWitness)> {
        let group = self.rd.weyl_group()?;
        let mut intersection = self.sigma.clone();
        for w in group.iter() {
            intersection = intersection.intersect(&w.act_cone(&self.sigma)?)?;
        }
        // Strong convexity is inherited from the slice; validate recomputes
        // and enforces it.
        let state = match &self.state {
            Some(xi) => Some(xi.saturate(&self.rd)?),
            None => None,
        };
        let resolution = GEmbedding::validate(Arc::clone(&self.rd), intersection, state)?;
        debug_assert!(resolution.is_biequivariant());
        let witness = inclusion_witness(
            &resolution.sigma,
            &self.sigma,
            WeylElement::identity(self.rd.rank()),
        )?
        .expect("the resolution is contained in its source");
        Ok((resolution, witness))
    }

    /// Searches the Weyl group in canonical order for a conjugator with
    /// `self.sigma ⊆ w(other.sigma)`; the first hit is returned.
    pub fn morphism_to(&self, other: &GEmbedding) -> Result<Option<MorphismWitness>> {
        if self.rd != other.rd {
            return Err(Error::Precondition(
                "morphisms are decided between embeddings of the same group".into(),
            ));
        }
        let group = self.rd.weyl_group()?;
        for w in group.iter() {
            if let Some(witness) = inclusion_witness(&self.sigma, &other.sigma, w.clone())? {
                return Ok(Some(witness));
            }
        }
        Ok(None)
    }

    /// Verifies the factorization of a morphism from a biequivariant
    /// embedding `self = y` through the resolution of `x`: the chain
    /// `y ⊆ x_G ⊆ x` must hold whenever `y ⊆ x`.
    pub fn universal_property_check(&self, x: &GEmbedding) -> Result<UniversalityReport> {
        if self.rd != x.rd {
            return Err(Error::Precondition(
                "the embeddings must share a group".into(),
            ));
        }
        if !self.biequivariant {
            return Err(Error::Precondition(
                "the source of the factorization must be biequivariant".into(),
            ));
        }
        let y_in_x = x.sigma.contains_cone(&self.sigma)?;
        if !y_in_x {
            return Err(Error::Precondition(
                "no base-point-aligned morphism: the source cone is not contained in the target"
                    .into(),
            ));
        }
        let (resolution, _) = x.biequivariant_resolution()?;
        let y_in_resolution = resolution.sigma.contains_cone(&self.sigma)?;
        let resolution_in_x = x.sigma.contains_cone(&resolution.sigma)?;
        let counterexample = if !y_in_resolution {
            Some(format!(
                "biequivariant subcone {:?} of the target is not contained in the Weyl intersection",
                self.sigma.rays()
            ))
        } else if !resolution_in_x {
            Some("the Weyl intersection escaped the target cone".into())
        } else {
            None
        };
        Ok(UniversalityReport {
            y_in_x,
            y_in_resolution,
            resolution_in_x,
            resolution_sigma: resolution.sigma.clone(),
            counterexample,
        })
    }

    /// The two candidate divisor-class counts: within-torus ray classes and
    /// Weyl-orbit classes of all conjugate rays, with dominant
    /// representatives. Rays whose orbit meets the slice more than once are
    /// flagged: for those the dimension argument identifying ray classes
    /// with boundary divisors is not verified.
    pub fn one_skeleton_classes(&self) -> Result<OneSkeletonReport> {
        let torus_rays: Vec<Coords> = self.sigma.rays().to_vec();
        let group = self.rd.weyl_group()?;
        let mut orbit_members: BTreeMap<CocharVec, Vec<Coords>> = BTreeMap::new();
        let mut all_conjugate_rays: Vec<CocharVec> = Vec::new();
        for w in group.iter() {
            let image = w.act_cone(&self.sigma)?;
            for r in image.rays() {
                all_conjugate_rays.push(CocharVec::new(r.clone()));
            }
        }
        all_conjugate_rays.sort();
        all_conjugate_rays.dedup();
        for ray in &all_conjugate_rays {
            let (dominant, _) = self.rd.dominant_representative(ray)?;
            orbit_members.entry(dominant).or_default();
        }
        for r in &torus_rays {
            let gamma = CocharVec::new(r.clone());
            let (dominant, _) = self.rd.dominant_representative(&gamma)?;
            orbit_members
                .entry(dominant)
                .or_default()
                .push(r.clone());
        }
        let weyl_orbit_classes: Vec<RayOrbitClass> = orbit_members
            .into_iter()
            .map(|(rep, slice_rays)| RayOrbitClass {
                representative: rep.into_coords(),
                slice_rays,
            })
            .collect();
        let genericity_flags: Vec<Coords> = weyl_orbit_classes
            .iter()
            .filter(|class| class.slice_rays.len() > 1)
            .flat_map(|class| class.slice_rays.iter().cloned())
            .collect();
        Ok(OneSkeletonReport {
            torus_ray_classes: torus_rays,
            weyl_orbit_classes,
            genericity_flags,
        })
    }

    /// Intersects the slice with the parabolic cone of every parabolic type
    /// containing the torus. The cells cover the slice; empty-interior
    /// cells are kept and flagged.
    pub fn toric_slice_complex(&self) -> Result<SliceComplex> {
        let sigma_dim = self.sigma.dim();
        let mut cells = Vec::new();
        for parabolic in self.rd.parabolic_types_containing_torus()? {
            let delta = self.rd.delta_cone(&parabolic)?;
            let cone = self.sigma.intersect(&delta)?;
            let interior_empty = cone.dim() < sigma_dim;
            cells.push(SliceCell {
                parabolic,
                cone,
                interior_empty,
            });
        }
        cells.sort_by(|a, b| a.parabolic.cmp(&b.parabolic));
        Ok(SliceComplex { cells })
    }
}

/// Certified inclusion `source ⊆ w(target)`, or `None` when it fails.
fn inclusion_witness(
    source: &Cone,
    target: &Cone,
    w: WeylElement,
) -> Result<Option<MorphismWitness>> {
    let image = w.act_cone(target)?;
    let ineqs = image.inequality_list();
    let mut certificates = Vec::new();
    for g in source.generators() {
        let mut pairings = Vec::with_capacity(ineqs.len());
        for a in &ineqs {
            let value = crate::lattice::coords_dot(a, &g);
            if value.is_negative() {
                return Ok(None);
            }
            pairings.push(value);
        }
        certificates.push(InclusionCertificate {
            generator: g,
            pairings,
        });
    }
    Ok(Some(MorphismWitness {
        conjugator: w,
        certificates,
    }))
}

fn weyl_stable(rd: &RootDatum, sigma: &Cone) -> Result<bool> {
    for w in rd.weyl_group()?.iter() {
        if &w.act_cone(sigma)? != sigma {
            return Ok(false);
        }
    }
    Ok(true)
}
