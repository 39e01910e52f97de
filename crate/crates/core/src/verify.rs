//! Brute-force oracles, independent of the double-description path, used by
//! the self-test command and the acceptance suite.
//!
//! Membership in a generated cone is decided by Carathéodory search: a
//! vector lies in the cone iff it is a nonnegative rational combination of
//! some linearly independent subset of the generators, and each candidate
//! subset is solved exactly over the rationals. Everything else is built on
//! that predicate plus exhaustive enumeration over small boxes.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::cones::Cone;
use crate::lattice::{coords_is_zero, Coords};

/// Brute-force membership of `target` in the cone generated by `vectors`
/// (lines must be passed as ± pairs).
pub fn in_cone_of(vectors: &[Coords], target: &[BigInt]) -> bool {
    if coords_is_zero(target) {
        return true;
    }
    let n = target.len();
    let k = vectors.len();
    let max_size = n.min(k);
    let mut subset: Vec<usize> = Vec::new();
    subsets_up_to(k, max_size, &mut subset, &mut |subset| {
        solve_nonnegative(vectors, subset, target)
    })
}

fn subsets_up_to(
    k: usize,
    max_size: usize,
    subset: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if !subset.is_empty() && found(subset) {
        return true;
    }
    if subset.len() == max_size {
        return false;
    }
    let start = subset.last().map_or(0, |&i| i + 1);
    for i in start..k {
        subset.push(i);
        if subsets_up_to(k, max_size, subset, found) {
            subset.pop();
            return true;
        }
        subset.pop();
    }
    false
}

/// Solves `Σ λ_i v_i = target` over the chosen subset exactly; true iff the
/// subset is linearly independent and the unique solution is nonnegative.
fn solve_nonnegative(vectors: &[Coords], subset: &[usize], target: &[BigInt]) -> bool {
    let n = target.len();
    let m = subset.len();
    // Augmented n×(m+1) rational system.
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|row| {
            let mut r: Vec<BigRational> = subset
                .iter()
                .map(|&j| BigRational::from(vectors[j][row].clone()))
                .collect();
            r.push(BigRational::from(target[row].clone()));
            r
        })
        .collect();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..m {
        let Some(p) = (r..n).find(|&i| !rows[i][col].is_zero()) else {
            // Dependent subset; a smaller subset already covers this case.
            return false;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        for i in 0..n {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &pivot;
            for j in col..=m {
                let sub = &factor * &rows[r][j];
                rows[i][j] -= sub;
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    // Consistency below the pivots.
    for row in rows.iter().skip(r) {
        if !row[m].is_zero() {
            return false;
        }
    }
    for (col, &pr) in pivot_rows.iter().enumerate() {
        let lambda = &rows[pr][m] / &rows[pr][col];
        if lambda.is_negative() {
            return false;
        }
    }
    true
}

/// Strong-convexity oracle on a generator list: the cone contains a line
/// iff the negative of some generator lies back in the cone.
pub fn strongly_convex_oracle(vectors: &[Coords]) -> bool {
    for g in vectors {
        if coords_is_zero(g) {
            continue;
        }
        let neg: Coords = g.iter().map(|x| -x).collect();
        if in_cone_of(vectors, &neg) {
            return false;
        }
    }
    true
}

/// Decides whether `target` is a nonnegative integer combination of
/// `basis`, with cone membership decided by the generator oracle. The
/// search is a memoized walk down the cone; it is finite because the cone
/// is pointed.
pub fn decomposes(generators: &[Coords], basis: &[Coords], target: &[BigInt]) -> bool {
    let mut visited: HashSet<Coords> = HashSet::new();
    decompose_rec(generators, basis, target, &mut visited)
}

fn decompose_rec(
    generators: &[Coords],
    basis: &[Coords],
    target: &[BigInt],
    visited: &mut HashSet<Coords>,
) -> bool {
    if coords_is_zero(target) {
        return true;
    }
    if !visited.insert(target.to_vec()) {
        return false;
    }
    for b in basis {
        let rest: Coords = target.iter().zip(b).map(|(t, x)| t - x).collect();
        if in_cone_of(generators, &rest) && decompose_rec(generators, basis, &rest, visited) {
            return true;
        }
    }
    false
}

/// All integer points of the box `[-bound, bound]^rank`.
pub fn box_points(rank: usize, bound: i64) -> Vec<Coords> {
    let mut out = Vec::new();
    let mut point = vec![-bound; rank];
    'outer: loop {
        out.push(point.iter().map(|&x| BigInt::from(x)).collect());
        for j in 0..rank {
            if point[j] < bound {
                point[j] += 1;
                continue 'outer;
            }
            point[j] = -bound;
        }
        break;
    }
    out
}

/// A random nonzero vector with entries in `[-bound, bound]`.
pub fn random_vector(rng: &mut impl Rng, rank: usize, bound: i64) -> Coords {
    loop {
        let v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().any(|&x| x != 0) {
            return v.into_iter().map(BigInt::from).collect();
        }
    }
}

/// Random generator lists; the cone they span may or may not be pointed.
pub fn random_generators(
    rng: &mut impl Rng,
    rank: usize,
    bound: i64,
    max_count: usize,
) -> Vec<Coords> {
    let count = rng.gen_range(1..=max_count);
    (0..count).map(|_| random_vector(rng, rank, bound)).collect()
}

/// Random generator lists resampled until they span a pointed, nonzero
/// cone.
pub fn random_pointed_generators(
    rng: &mut impl Rng,
    rank: usize,
    bound: i64,
    max_count: usize,
) -> Vec<Coords> {
    loop {
        let gens = random_generators(rng, rank, bound, max_count);
        if strongly_convex_oracle(&gens) {
            return gens;
        }
    }
}

/// A random subcone of `cone`: the cone on a few random nonnegative integer
/// combinations of its generators.
pub fn random_subcone(rng: &mut impl Rng, cone: &Cone) -> Cone {
    let gens = cone.generators();
    let rank = cone.ambient_rank();
    if gens.is_empty() {
        return Cone::zero(rank);
    }
    let count = rng.gen_range(1..=gens.len());
    let mut picks: Vec<Coords> = Vec::new();
    for _ in 0..count {
        let mut acc = vec![BigInt::zero(); rank];
        for g in &gens {
            let c = rng.gen_range(0..=2);
            if c == 0 {
                continue;
            }
            for j in 0..rank {
                acc[j] += &g[j] * BigInt::from(c);
            }
        }
        if !coords_is_zero(&acc) {
            picks.push(acc);
        }
    }
    Cone::from_generators(rank, &picks).expect("combinations stay in the ambient lattice")
}
