//! States on the fixed maximal torus and their numerical functions.
//!
//! A state is stored through its torus slice only: a nonempty finite set of
//! characters. Values on subtori are restrictions and values on other
//! maximal tori are Weyl conjugates, so this is the minimal faithful datum
//! for everything the crate computes. A state may carry a representation
//! backing (the weight multiset of a representation together with the
//! weights supporting the base vector), which certifies admissibility by
//! provenance.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cones::Cone;
use crate::lattice::{pair, CharVec, CocharVec, Coords};
use crate::rootdata::{RootDatum, WeylElement};
use crate::{Error, Result};

/// Weight data of a torus representation backing a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSupport {
    /// Weight multiset of the representation; the underlying set must be
    /// stable under the Weyl group.
    pub weights: Vec<CharVec>,
    /// The weights with nonzero projection of the base vector.
    pub support: Vec<CharVec>,
}

/// The torus slice of a state: a nonempty finite set of characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusState {
    chars: Vec<CharVec>,
    rep: Option<RepSupport>,
}

/// Verdicts of [`TorusState::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateReport {
    pub bounded: bool,
    pub bounded_note: String,
    pub weyl_necessary_admissibility: bool,
    pub weyl_note: String,
    /// True iff the state is representation-backed; admissibility of raw
    /// states is certified only by provenance, never inferred.
    pub certified_admissible: bool,
}

impl TorusState {
    /// A raw state from its character set. The set must be nonempty; it is
    /// sorted and deduplicated.
    pub fn new(chars: Vec<CharVec>) -> Result<TorusState> {
        if chars.is_empty() {
            return Err(Error::Validation("a state must be nonempty".into()));
        }
        let rank = chars[0].rank();
        for c in &chars {
            if c.rank() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: c.rank(),
                });
            }
        }
        let mut chars = chars;
        chars.sort();
        chars.dedup();
        Ok(TorusState { chars, rep: None })
    }

    /// A representation-backed state: the characters are the support of the
    /// base vector inside a Weyl-stable weight multiset.
    pub fn from_representation(rd: &RootDatum, rep: RepSupport) -> Result<TorusState> {
        if rep.support.is_empty() {
            return Err(Error::Validation("the support must be nonempty".into()));
        }
        let mut weights = rep.weights.clone();
        weights.sort();
        let mut support = rep.support.clone();
        support.sort();
        support.dedup();
        for s in &support {
            if !weights.contains(s) {
                return Err(Error::Validation(format!(
                    "support weight {s} is not a weight of the representation"
                )));
            }
        }
        let mut weight_set = weights.clone();
        weight_set.dedup();
        for w in rd.weyl_group()?.iter() {
            let mut image: Vec<CharVec> = weight_set.iter().map(|c| w.act_char(c)).collect();
            image.sort();
            if image != weight_set {
                return Err(Error::Validation(
                    "the weight set is not stable under the Weyl group".into(),
                ));
            }
        }
        Ok(TorusState {
            chars: support.clone(),
            rep: Some(RepSupport { weights, support }),
        })
    }

    pub fn chars(&self) -> &[CharVec] {
        &self.chars
    }

    pub fn rep(&self) -> Option<&RepSupport> {
        self.rep.as_ref()
    }

    pub fn is_rep_backed(&self) -> bool {
        self.rep.is_some()
    }

    pub fn rank(&self) -> usize {
        self.chars[0].rank()
    }

    /// The numerical function `μ(Ξ, γ) = min ⟨χ, γ⟩` over the characters.
    ///
    /// Restriction to the image torus of γ does not change pairings, so the
    /// minimum over the torus slice computes the numerical function at γ.
    pub fn mu(&self, gamma: &CocharVec) -> Result<BigInt> {
        let mut min: Option<BigInt> = None;
        for chi in &self.chars {
            let value = pair(chi, gamma)?;
            min = Some(match min {
                None => value,
                Some(current) => current.min(value),
            });
        }
        Ok(min.expect("states are nonempty"))
    }

    /// The cone `{γ : μ(Ξ, γ) ≥ 0}`, cut out by the characters.
    pub fn dual_set(&self) -> Result<Cone> {
        let ineqs: Vec<Coords> = self.chars.iter().map(|c| c.coords().to_vec()).collect();
        Cone::from_inequalities(self.rank(), &ineqs)
    }

    /// Membership predicate for `{γ : μ(Ξ, γ) > 0}`. The set is not closed,
    /// so it is a predicate rather than a cone.
    pub fn dual_set_strict(&self) -> StrictDualSet<'_> {
        StrictDualSet { state: self }
    }

    /// The conjugate state: characters (and any representation backing)
    /// transported by the dual action of `w`.
    pub fn conjugate(&self, w: &WeylElement) -> TorusState {
        let map = |cs: &[CharVec]| -> Vec<CharVec> {
            let mut out: Vec<CharVec> = cs.iter().map(|c| w.act_char(c)).collect();
            out.sort();
            out
        };
        let mut chars = map(&self.chars);
        chars.dedup();
        TorusState {
            chars,
            rep: self.rep.as_ref().map(|r| {
                let mut support = map(&r.support);
                support.dedup();
                RepSupport {
                    weights: map(&r.weights),
                    support,
                }
            }),
        }
    }

    /// The Weyl saturation: the union of all conjugate character sets.
    /// Idempotent; the result is Weyl-stable. For representation-backed
    /// states the support saturates inside the (already stable) weight set.
    pub fn saturate(&self, rd: &RootDatum) -> Result<TorusState> {
        let group = rd.weyl_group()?;
        let mut chars: Vec<CharVec> = Vec::new();
        for w in group.iter() {
            chars.extend(self.chars.iter().map(|c| w.act_char(c)));
        }
        chars.sort();
        chars.dedup();
        let rep = match &self.rep {
            None => None,
            Some(r) => {
                let mut support: Vec<CharVec> = Vec::new();
                for w in group.iter() {
                    support.extend(r.support.iter().map(|c| w.act_char(c)));
                }
                support.sort();
                support.dedup();
                Some(RepSupport {
                    weights: r.weights.clone(),
                    support,
                })
            }
        };
        Ok(TorusState { chars, rep })
    }

    /// Boundedness and admissibility report.
    ///
    /// Boundedness always holds at torus level (the Weyl orbit of a finite
    /// character set is finite). The necessary admissibility check over the
    /// Levi stabilizer is vacuous, because every stabilizer element fixes
    /// the sampled γ; it is run and reported as such rather than silently
    /// passing. Full admissibility is certified only by representation
    /// provenance.
    pub fn check(&self, rd: &RootDatum) -> Result<StateReport> {
        let order = rd.weyl_order()?;
        let bounded_note = format!(
            "the union of the {order} Weyl conjugates of a finite character set is finite"
        );

        let mut samples: Vec<CocharVec> = Vec::new();
        let rank = self.rank();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            samples.push(CocharVec::from_i64(&v));
            v[i] = -2;
            samples.push(CocharVec::from_i64(&v));
        }
        let mut mixed = vec![0i64; rank];
        for (i, entry) in mixed.iter_mut().enumerate() {
            *entry = i as i64 + 1;
        }
        samples.push(CocharVec::from_i64(&mixed));

        let mut weyl_ok = true;
        for gamma in &samples {
            let reference = self.mu(gamma)?;
            for w in rd.levi_stabilizer(gamma)? {
                if self.mu(&w.act_cochar(gamma))? != reference {
                    weyl_ok = false;
                }
            }
        }
        Ok(StateReport {
            bounded: true,
            bounded_note,
            weyl_necessary_admissibility: weyl_ok,
            weyl_note: "vacuously true: every sampled stabilizer element fixes its γ".into(),
            certified_admissible: self.is_rep_backed(),
        })
    }
}

/// Membership test for the strict dual set `{γ : μ(Ξ, γ) > 0}`.
pub struct StrictDualSet<'a> {
    state: &'a TorusState,
}

impl StrictDualSet<'_> {
    pub fn contains(&self, gamma: &CocharVec) -> Result<bool> {
        Ok(self.state.mu(gamma)?.is_positive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootDatum;

    fn state(chars: &[&[i64]]) -> TorusState {
        TorusState::new(chars.iter().map(|c| CharVec::from_i64(c)).collect()).unwrap()
    }

    #[test]
    fn mu_examples() {
        let xi = state(&[&[1, 0], &[0, 1]]);
        assert_eq!(xi.mu(&CocharVec::from_i64(&[1, 3])).unwrap(), BigInt::from(1));
        assert_eq!(xi.mu(&CocharVec::zero(2)).unwrap(), BigInt::from(0));
        let xi = state(&[&[2, -1], &[0, 1]]);
        assert_eq!(xi.mu(&CocharVec::from_i64(&[1, 1])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn empty_state_is_rejected() {
        assert!(TorusState::new(vec![]).is_err());
    }

    #[test]
    fn dual_set_examples() {
        let orthant = state(&[&[1, 0], &[0, 1]]).dual_set().unwrap();
        assert!(orthant.is_strongly_convex());
        assert_eq!(orthant.rays().len(), 2);

        let half = state(&[&[1, -1]]).dual_set().unwrap();
        assert!(!half.is_strongly_convex());
        assert_eq!(half.lineality_dim(), 1);

        let pinched = state(&[&[1, 0], &[-1, 0], &[0, 1]]).dual_set().unwrap();
        assert_eq!(pinched.rays(), &[crate::lattice::coords_from_i64(&[0, 1])]);
        assert_eq!(pinched.dim(), 1);
    }

    #[test]
    fn strict_dual_set_examples() {
        let xi = state(&[&[1, 0], &[0, 1]]);
        let strict = xi.dual_set_strict();
        assert!(strict.contains(&CocharVec::from_i64(&[1, 1])).unwrap());
        assert!(!strict.contains(&CocharVec::from_i64(&[1, 0])).unwrap());
        let xi = state(&[&[2, -1]]);
        assert!(xi
            .dual_set_strict()
            .contains(&CocharVec::from_i64(&[1, 1]))
            .unwrap());
    }

    #[test]
    fn strict_implies_weak() {
        let xi = state(&[&[2, -1], &[0, 1], &[1, 1]]);
        let cone = xi.dual_set().unwrap();
        let strict = xi.dual_set_strict();
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                let gamma = CocharVec::from_i64(&[a, b]);
                if strict.contains(&gamma).unwrap() {
                    assert!(cone.contains(gamma.coords()).unwrap());
                }
            }
        }
    }

    #[test]
    fn conjugation_examples() {
        let rd = RootDatum::gl(2).unwrap();
        let swap = rd.simple_reflection(0);
        let xi = state(&[&[1, 0]]);
        assert_eq!(xi.conjugate(&swap), state(&[&[0, 1]]));
        let id = crate::rootdata::WeylElement::identity(2);
        assert_eq!(xi.conjugate(&id), xi);
        let xi = state(&[&[2, -1], &[0, 1]]);
        assert_eq!(xi.conjugate(&swap), state(&[&[-1, 2], &[1, 0]]));
    }

    #[test]
    fn saturation_examples() {
        let rd = RootDatum::gl(2).unwrap();
        let xi = state(&[&[1, 0]]);
        let sat = xi.saturate(&rd).unwrap();
        assert_eq!(sat, state(&[&[1, 0], &[0, 1]]));
        // Idempotent on stable input.
        assert_eq!(sat.saturate(&rd).unwrap(), sat);

        let rd3 = RootDatum::gl(3).unwrap();
        let xi = state(&[&[1, 0, 0], &[1, 1, 0]]);
        assert_eq!(xi.saturate(&rd3).unwrap().chars().len(), 6);
    }

    #[test]
    fn mu_is_positively_homogeneous_and_equivariant() {
        let rd = RootDatum::gl(3).unwrap();
        let xi = state(&[&[1, 0, 0], &[0, 2, -1], &[1, 1, 1]]);
        let group = rd.weyl_group().unwrap();
        for v in [[1i64, -2, 3], [0, 1, 0], [-1, -1, 4]] {
            let gamma = CocharVec::from_i64(&v);
            let mu = xi.mu(&gamma).unwrap();
            for k in 1i64..=4 {
                assert_eq!(
                    xi.mu(&gamma.scaled(&BigInt::from(k))).unwrap(),
                    BigInt::from(k) * &mu
                );
            }
            for w in group.iter() {
                assert_eq!(xi.conjugate(w).mu(&w.act_cochar(&gamma)).unwrap(), mu);
            }
        }
    }

    #[test]
    fn saturated_mu_is_the_min_over_conjugates() {
        let rd = RootDatum::gl(3).unwrap();
        let xi = state(&[&[2, 0, -1], &[1, 1, 0]]);
        let sat = xi.saturate(&rd).unwrap();
        let group = rd.weyl_group().unwrap();
        for v in [[1i64, 2, 3], [-1, 0, 2], [3, -3, 1]] {
            let gamma = CocharVec::from_i64(&v);
            let lhs = sat.mu(&gamma).unwrap();
            let rhs = group
                .iter()
                .map(|w| xi.conjugate(w).mu(&gamma).unwrap())
                .min()
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dual_set_of_saturation_is_weyl_intersection() {
        let rd = RootDatum::gl(2).unwrap();
        let xi = state(&[&[1, 0], &[2, -1]]);
        let lhs = xi.saturate(&rd).unwrap().dual_set().unwrap();
        let group = rd.weyl_group().unwrap();
        let mut rhs: Option<Cone> = None;
        for w in group.iter() {
            let image = xi.conjugate(w).dual_set().unwrap();
            rhs = Some(match rhs {
                None => image,
                Some(acc) => acc.intersect(&image).unwrap(),
            });
        }
        assert_eq!(lhs, rhs.unwrap());
    }

    #[test]
    fn rep_backed_states() {
        let rd = RootDatum::gl(2).unwrap();
        let rep = RepSupport {
            weights: vec![CharVec::from_i64(&[1, 0]), CharVec::from_i64(&[0, 1])],
            support: vec![CharVec::from_i64(&[1, 0]), CharVec::from_i64(&[0, 1])],
        };
        let xi = TorusState::from_representation(&rd, rep).unwrap();
        assert!(xi.is_rep_backed());
        let dual = xi.dual_set().unwrap();
        assert_eq!(dual.rays().len(), 2);
        assert!(dual.is_strongly_convex());

        // Singleton support inside a Weyl orbit is allowed.
        let rd3 = RootDatum::gl(3).unwrap();
        let orbit: Vec<CharVec> = [[1i64, 1, 0], [1, 0, 1], [0, 1, 1]]
            .iter()
            .map(|v| CharVec::from_i64(v))
            .collect();
        let xi = TorusState::from_representation(
            &rd3,
            RepSupport {
                weights: orbit.clone(),
                support: vec![orbit[0].clone()],
            },
        )
        .unwrap();
        assert_eq!(xi.chars().len(), 1);

        // Support outside the weights is rejected.
        assert!(TorusState::from_representation(
            &rd3,
            RepSupport {
                weights: orbit.clone(),
                support: vec![CharVec::from_i64(&[5, 0, 0])],
            }
        )
        .is_err());

        // Non-stable weight sets are rejected.
        assert!(TorusState::from_representation(
            &rd3,
            RepSupport {
                weights: vec![CharVec::from_i64(&[1, 0, 0])],
                support: vec![CharVec::from_i64(&[1, 0, 0])],
            }
        )
        .is_err());
    }

    #[test]
    fn check_reports() {
        let rd = RootDatum::gl(2).unwrap();
        let raw = state(&[&[1, 0]]);
        let report = raw.check(&rd).unwrap();
        assert!(report.bounded);
        assert!(report.weyl_necessary_admissibility);
        assert!(!report.certified_admissible);

        let rep = RepSupport {
            weights: vec![CharVec::from_i64(&[1, 0]), CharVec::from_i64(&[0, 1])],
            support: vec![CharVec::from_i64(&[1, 0])],
        };
        let backed = TorusState::from_representation(&rd, rep).unwrap();
        assert!(backed.check(&rd).unwrap().certified_admissible);
    }
}
