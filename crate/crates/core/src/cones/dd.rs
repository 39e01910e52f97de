//! Incremental double description: from a finite list of inequality normals
//! to the lineality space and extremal rays of the cone they cut out.
//!
//! The cone is maintained as `span(L) + cone(R)`. Inserting a halfspace
//! either pivots a lineality vector into a ray (when some line leaves the
//! halfspace) or splits the rays by sign and combines adjacent
//! positive/negative pairs. Adjacency uses the standard zero-set criterion;
//! a final rank test over the tight normals filters anything non-extremal,
//! so the output does not depend on the combinatorial test being sharp.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lattice::{coords_dot, coords_is_zero, coords_line_canonical, coords_primitive, Coords};
use crate::linalg::{self, Matrix};

/// Generator description of a cone: a saturated lineality lattice basis in
/// Hermite normal form, and the extremal rays of the pointed quotient with
/// canonical lifts, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct DdOutput {
    pub lineality: Vec<Coords>,
    pub rays: Vec<Coords>,
}

pub(crate) fn double_description(rank: usize, normals: &[Coords]) -> DdOutput {
    // Deterministic insertion order: primitive, deduplicated, sorted.
    let mut ineqs: Vec<Coords> = normals
        .iter()
        .filter_map(|a| coords_primitive(a))
        .collect();
    ineqs.sort();
    ineqs.dedup();

    let mut lines: Vec<Coords> = linalg::identity(rank);
    let mut rays: Vec<Coords> = Vec::new();

    for (step, a) in ineqs.iter().enumerate() {
        let line_vals: Vec<BigInt> = lines.iter().map(|l| coords_dot(a, l)).collect();
        if let Some(pivot) = line_vals.iter().position(|v| !v.is_zero()) {
            // A line leaves the halfspace: it becomes a ray, every other
            // generator is shifted along it into the hyperplane of `a`.
            let mut l0 = lines.remove(pivot);
            let mut v0 = line_vals[pivot].clone();
            if v0.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                v0 = -v0;
            }
            lines = lines
                .into_iter()
                .map(|l| {
                    let vl = coords_dot(a, &l);
                    let combined = combine(&v0, &l, &vl, &l0);
                    coords_primitive(&combined).expect("line combination is nonzero")
                })
                .collect();
            rays = rays
                .into_iter()
                .map(|r| {
                    let vr = coords_dot(a, &r);
                    let combined = combine(&v0, &r, &vr, &l0);
                    coords_primitive(&combined).expect("ray combination is nonzero")
                })
                .collect();
            rays.push(l0);
            continue;
        }

        // All lines are inside the hyperplane; split rays by sign.
        let vals: Vec<BigInt> = rays.iter().map(|r| coords_dot(a, r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            continue;
        }
        let processed = &ineqs[..step];
        let zero_sets: Vec<Vec<usize>> = rays
            .iter()
            .map(|r| tight_set(processed, r))
            .collect();
        let mut new_rays: Vec<Coords> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if !vals[i].is_negative() {
                new_rays.push(r.clone());
            }
        }
        for (i, p) in rays.iter().enumerate() {
            if !vals[i].is_positive() {
                continue;
            }
            for (j, n) in rays.iter().enumerate() {
                if !vals[j].is_negative() {
                    continue;
                }
                if !adjacent(&zero_sets, i, j, rays.len()) {
                    continue;
                }
                // λ·n + μ·p with λ = ⟨a,p⟩ > 0 and μ = −⟨a,n⟩ > 0 lands on
                // the hyperplane of `a`.
                let combined = combine(&vals[i], n, &vals[j], p);
                if let Some(prim) = coords_primitive(&combined) {
                    new_rays.push(prim);
                }
            }
        }
        new_rays.sort();
        new_rays.dedup();
        rays = new_rays;
    }

    canonicalize(rank, &ineqs, lines, rays)
}

/// `v0 * x - vx * base`, the combination of `x` and `base` lying on the
/// hyperplane when `⟨a,x⟩ = vx` and `⟨a,base⟩ = v0`.
fn combine(v0: &BigInt, x: &[BigInt], vx: &BigInt, base: &[BigInt]) -> Coords {
    x.iter()
        .zip(base)
        .map(|(xi, bi)| v0 * xi - vx * bi)
        .collect()
}

fn tight_set(processed: &[Coords], r: &[BigInt]) -> Vec<usize> {
    processed
        .iter()
        .enumerate()
        .filter(|(_, a)| coords_dot(a, r).is_zero())
        .map(|(k, _)| k)
        .collect()
}

/// Combinatorial adjacency: no third ray's tight set contains the common
/// tight set of the pair.
fn adjacent(zero_sets: &[Vec<usize>], i: usize, j: usize, count: usize) -> bool {
    let common: Vec<usize> = zero_sets[i]
        .iter()
        .filter(|k| zero_sets[j].binary_search(k).is_ok())
        .copied()
        .collect();
    for t in 0..count {
        if t == i || t == j {
            continue;
        }
        if common.iter().all(|k| zero_sets[t].binary_search(k).is_ok()) {
            return false;
        }
    }
    true
}

/// Canonical form: saturated HNF lineality, rays filtered by the exact
/// tight-rank extremality test, reduced to canonical coset lifts, sorted.
fn canonicalize(
    rank: usize,
    ineqs: &[Coords],
    _lines: Vec<Coords>,
    rays: Vec<Coords>,
) -> DdOutput {
    // The lineality space is the common kernel of every inequality; taking
    // the integer kernel directly yields the canonical saturated basis.
    let normal_matrix: Matrix = ineqs.to_vec();
    let lineality = linalg::integer_kernel(&normal_matrix, rank);
    let normal_rank = linalg::rank(&normal_matrix);

    let mut out: Vec<Coords> = Vec::new();
    for r in rays {
        let tight: Matrix = ineqs
            .iter()
            .filter(|a| coords_dot(a, &r).is_zero())
            .cloned()
            .collect();
        // r spans an extremal ray of the quotient iff its minimal face has
        // dimension dim(lineality) + 1.
        if normal_rank == 0 || linalg::rank(&tight) != normal_rank - 1 {
            continue;
        }
        let reduced = reduce_mod_lineality(&r, &lineality);
        if let Some(prim) = coords_primitive(&reduced) {
            out.push(prim);
        }
    }
    out.sort();
    out.dedup();
    DdOutput {
        lineality,
        rays: out,
    }
}

/// Canonical representative of `r + span(lineality)`: zero the coordinates
/// at the HNF pivot columns over the rationals, then clear denominators.
/// Positive scalings of `r` map to the same representative.
pub(crate) fn reduce_mod_lineality(r: &[BigInt], lineality: &[Coords]) -> Coords {
    if lineality.is_empty() {
        return r.to_vec();
    }
    // Work projectively with an explicit positive denominator.
    let mut num: Coords = r.to_vec();
    let mut den = BigInt::from(1);
    for basis in lineality {
        let pivot_col = basis
            .iter()
            .position(|x| !x.is_zero())
            .expect("lineality basis rows are nonzero");
        let pivot = &basis[pivot_col];
        // num/den - (num[pivot_col]/(den*pivot)) * basis
        let coeff = num[pivot_col].clone();
        num = num
            .iter()
            .zip(basis.iter().map(|b| b * &coeff))
            .map(|(n, sub)| n * pivot - sub)
            .collect();
        den *= pivot;
        debug_assert!(num[pivot_col].is_zero());
    }
    debug_assert!(den.is_positive());
    if coords_is_zero(&num) {
        return vec![BigInt::zero(); r.len()];
    }
    coords_primitive(&num).expect("nonzero by the check above")
}

/// The canonical line representative used when listing ± generators.
pub(crate) fn line_rep(v: &[BigInt]) -> Coords {
    coords_line_canonical(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::coords_from_i64;

    fn vs(rows: &[&[i64]]) -> Vec<Coords> {
        rows.iter().map(|r| coords_from_i64(r)).collect()
    }

    #[test]
    fn orthant_from_inequalities() {
        let out = double_description(2, &vs(&[&[1, 0], &[0, 1]]));
        assert!(out.lineality.is_empty());
        assert_eq!(out.rays, vs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn empty_inequalities_is_full_space() {
        let out = double_description(2, &[]);
        assert_eq!(out.lineality, vs(&[&[1, 0], &[0, 1]]));
        assert!(out.rays.is_empty());
    }

    #[test]
    fn opposite_normals_force_equality() {
        // x = 0, y >= 0.
        let out = double_description(2, &vs(&[&[1, 0], &[-1, 0], &[0, 1]]));
        assert!(out.lineality.is_empty());
        assert_eq!(out.rays, vs(&[&[0, 1]]));
    }

    #[test]
    fn halfplane_has_lineality() {
        let out = double_description(2, &vs(&[&[1, 0]]));
        assert_eq!(out.lineality, vs(&[&[0, 1]]));
        assert_eq!(out.rays, vs(&[&[1, 0]]));
    }

    #[test]
    fn zero_cone_from_all_signs() {
        let out = double_description(2, &vs(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]));
        assert!(out.lineality.is_empty());
        assert!(out.rays.is_empty());
    }

    #[test]
    fn skewed_wedge() {
        // ⟨(0,1),·⟩ ≥ 0 and ⟨(2,-1),·⟩ ≥ 0 bounds cone{(1,0),(1,2)}.
        let out = double_description(2, &vs(&[&[0, 1], &[2, -1]]));
        assert!(out.lineality.is_empty());
        assert_eq!(out.rays, vs(&[&[1, 0], &[1, 2]]));
    }

    #[test]
    fn reduction_mod_lineality_is_scale_invariant() {
        let lineality = vs(&[&[1, 1]]);
        let a = reduce_mod_lineality(&coords_from_i64(&[3, 1]), &lineality);
        let b = reduce_mod_lineality(&coords_from_i64(&[6, 2]), &lineality);
        assert_eq!(a, b);
        assert_eq!(a, coords_from_i64(&[0, -1]));
    }
}
