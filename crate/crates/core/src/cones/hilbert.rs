//! Hilbert bases of cone monoids.
//!
//! Every irreducible element of the monoid `σ ∩ Z^n` of a pointed cone lies
//! in the half-open zonotope spanned by the extremal rays (subtracting a ray
//! from any point with a coordinate ≥ 1 in the ray expansion stays in the
//! monoid). Candidates are therefore enumerated over the integer bounding
//! box of that zonotope and sieved down to irreducibles in increasing order
//! of a strictly positive grading.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::lattice::{coords_dot, coords_is_zero, Coords};
use crate::linalg;
use crate::{Error, Result};

use super::Cone;

/// Caps for the lattice-point enumeration.
#[derive(Debug, Clone)]
pub struct EnumCaps {
    /// Maximum admissible width of any coordinate range of the enumeration
    /// box.
    pub coord_extent: u64,
    /// Maximum admissible number of enumerated box points.
    pub max_points: u64,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            coord_extent: 1_000,
            max_points: 10_000_000,
        }
    }
}

/// The minimal generating set of a pointed cone monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    pub elements: Vec<Coords>,
}

/// Minimal generators of a possibly non-pointed cone monoid: the unit group
/// basis plus irreducibles modulo units. `units` is empty iff the cone is
/// pointed, in which case `generators` is the Hilbert basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidBasis {
    pub units: Vec<Coords>,
    pub generators: Vec<Coords>,
}

pub(super) fn hilbert_basis(cone: &Cone, caps: &EnumCaps) -> Result<HilbertBasis> {
    if !cone.is_pointed() {
        return Err(Error::Unsupported(
            "Hilbert basis requires a strongly convex cone; this cone contains a line".into(),
        ));
    }
    let n = cone.ambient_rank();
    let rays = cone.rays();
    if rays.is_empty() {
        return Ok(HilbertBasis { elements: vec![] });
    }

    // Bounding box of the zonotope { Σ t_i r_i : 0 ≤ t_i ≤ 1 }.
    let mut lo = vec![BigInt::zero(); n];
    let mut hi = vec![BigInt::zero(); n];
    for r in rays {
        for j in 0..n {
            if r[j].is_negative() {
                lo[j] += &r[j];
            } else {
                hi[j] += &r[j];
            }
        }
    }
    let (lo, hi) = box_to_i64(&lo, &hi, caps)?;

    let mut candidates: Vec<Coords> = Vec::new();
    let mut point = lo.clone();
    'outer: loop {
        let v: Coords = point.iter().map(|&x| BigInt::from(x)).collect();
        if !coords_is_zero(&v) && cone.contains(&v)? {
            candidates.push(v);
        }
        // Odometer increment.
        for j in 0..n {
            if point[j] < hi[j] {
                point[j] += 1;
                continue 'outer;
            }
            point[j] = lo[j];
        }
        break;
    }

    // Strictly positive grading: the sum of the facet normals lies in the
    // relative interior of the dual, so it vanishes on no nonzero cone point.
    let grading: Coords = sum_vectors(cone.normals(), n);
    candidates.sort_by(|a, b| {
        coords_dot(&grading, a)
            .cmp(&coords_dot(&grading, b))
            .then_with(|| a.cmp(b))
    });

    let mut basis: Vec<Coords> = Vec::new();
    'cand: for x in candidates {
        for b in &basis {
            let diff: Coords = x.iter().zip(b).map(|(a, c)| a - c).collect();
            if !coords_is_zero(&diff) && cone.contains(&diff)? {
                continue 'cand;
            }
        }
        basis.push(x);
    }
    basis.sort();
    Ok(HilbertBasis { elements: basis })
}

pub(super) fn monoid_basis(cone: &Cone, caps: &EnumCaps) -> Result<MonoidBasis> {
    if cone.is_pointed() {
        return Ok(MonoidBasis {
            units: vec![],
            generators: hilbert_basis(cone, caps)?.elements,
        });
    }
    let n = cone.ambient_rank();
    let units = cone.lineality().to_vec();
    let d = units.len();

    // Project along the (saturated) unit lattice: the rows of the integer
    // kernel of the unit basis give a surjection Z^n → Z^(n−d) whose kernel
    // is exactly the unit lattice.
    let proj = linalg::integer_kernel(&units, n);
    debug_assert_eq!(proj.len(), n - d);
    let images: Vec<Coords> = cone
        .rays()
        .iter()
        .map(|r| linalg::mat_apply(&proj, r))
        .collect();
    let quotient = Cone::from_generators(n - d, &images)?;
    debug_assert!(quotient.is_pointed());
    let quotient_basis = hilbert_basis(&quotient, caps)?;

    let mut generators: Vec<Coords> = Vec::new();
    for h in &quotient_basis.elements {
        let lift = linalg::integer_solve(&proj, h)
            .expect("the projection is surjective on lattices");
        generators.push(reduce_mod_units(&lift, &units));
    }
    generators.sort();
    Ok(MonoidBasis { units, generators })
}

/// Canonical coset representative modulo the unit lattice: reduce the entry
/// over each HNF pivot into `[0, pivot)`.
fn reduce_mod_units(v: &[BigInt], units: &[Coords]) -> Coords {
    let mut out = v.to_vec();
    for basis in units {
        let pivot_col = basis
            .iter()
            .position(|x| !x.is_zero())
            .expect("unit basis rows are nonzero");
        let q = num_integer::Integer::div_floor(&out[pivot_col], &basis[pivot_col]);
        if q.is_zero() {
            continue;
        }
        for j in 0..out.len() {
            let sub = &q * &basis[j];
            out[j] -= sub;
        }
    }
    out
}

fn sum_vectors(vectors: &[Coords], n: usize) -> Coords {
    let mut acc = vec![BigInt::zero(); n];
    for v in vectors {
        for j in 0..n {
            acc[j] += &v[j];
        }
    }
    acc
}

fn box_to_i64(lo: &[BigInt], hi: &[BigInt], caps: &EnumCaps) -> Result<(Vec<i64>, Vec<i64>)> {
    let mut lo_i = Vec::with_capacity(lo.len());
    let mut hi_i = Vec::with_capacity(hi.len());
    let mut points: u128 = 1;
    for (a, b) in lo.iter().zip(hi) {
        let width = b - a;
        let width = width.to_u64().ok_or_else(|| {
            Error::ResourceLimit("enumeration box width exceeds machine range".into())
        })?;
        if width + 1 > caps.coord_extent {
            return Err(Error::ResourceLimit(format!(
                "enumeration box width {} exceeds the cap {}",
                width + 1,
                caps.coord_extent
            )));
        }
        points = points.saturating_mul(u128::from(width) + 1);
        if points > u128::from(caps.max_points) {
            return Err(Error::ResourceLimit(format!(
                "enumeration box holds more than {} points",
                caps.max_points
            )));
        }
        lo_i.push(a.to_i64().ok_or_else(|| {
            Error::ResourceLimit("enumeration box bound exceeds machine range".into())
        })?);
        hi_i.push(b.to_i64().ok_or_else(|| {
            Error::ResourceLimit("enumeration box bound exceeds machine range".into())
        })?);
    }
    Ok((lo_i, hi_i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::coords_from_i64;

    fn vs(rows: &[&[i64]]) -> Vec<Coords> {
        rows.iter().map(|r| coords_from_i64(r)).collect()
    }

    fn hb(rows: &[&[i64]]) -> Vec<Coords> {
        let rank = rows[0].len();
        let cone = Cone::from_generators(rank, &vs(rows)).unwrap();
        cone.hilbert_basis(&EnumCaps::default()).unwrap().elements
    }

    #[test]
    fn orthant_basis() {
        assert_eq!(hb(&[&[1, 0], &[0, 1]]), vs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn skew_cone_needs_interior_generator() {
        assert_eq!(
            hb(&[&[0, 1], &[2, -1]]),
            vs(&[&[0, 1], &[1, 0], &[2, -1]])
        );
    }

    #[test]
    fn single_ray() {
        assert_eq!(hb(&[&[1, 1]]), vs(&[&[1, 1]]));
    }

    #[test]
    fn zero_cone_has_empty_basis() {
        let cone = Cone::zero(2);
        assert!(cone.hilbert_basis(&EnumCaps::default()).unwrap().elements.is_empty());
    }

    #[test]
    fn non_pointed_is_unsupported() {
        let cone = Cone::from_generators(2, &vs(&[&[1, 0], &[-1, 0]])).unwrap();
        assert!(matches!(
            cone.hilbert_basis(&EnumCaps::default()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let cone = Cone::from_generators(2, &vs(&[&[1, 0], &[0, 1]])).unwrap();
        let caps = EnumCaps {
            coord_extent: 1,
            max_points: 10,
        };
        assert!(matches!(
            cone.hilbert_basis(&caps),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn monoid_basis_of_halfplane() {
        // Dual of the single ray (1,0): units along (0,1), generator (1,0).
        let cone = Cone::from_inequalities(2, &vs(&[&[1, 0]])).unwrap();
        let basis = cone.monoid_basis(&EnumCaps::default()).unwrap();
        assert_eq!(basis.units, vs(&[&[0, 1]]));
        assert_eq!(basis.generators, vs(&[&[1, 0]]));
    }

    #[test]
    fn monoid_basis_of_full_space() {
        let full = Cone::zero(2).dual();
        let basis = full.monoid_basis(&EnumCaps::default()).unwrap();
        assert_eq!(basis.units, vs(&[&[1, 0], &[0, 1]]));
        assert!(basis.generators.is_empty());
    }

    #[test]
    fn second_quadrant_wedge() {
        // cone{(0,1),(-1,0)} is pointed; basis should be the two rays.
        assert_eq!(hb(&[&[0, 1], &[-1, 0]]), vs(&[&[-1, 0], &[0, 1]]));
    }

    #[test]
    fn classic_quadric_cone() {
        // cone{(1,0),(1,2)}: lattice points (1,1) are irreducible.
        assert_eq!(hb(&[&[1, 0], &[1, 2]]), vs(&[&[1, 0], &[1, 1], &[1, 2]]));
    }
}
