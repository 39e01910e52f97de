//! Root data on a fixed maximal torus: the reductive group as
//! combinatorics.
//!
//! The supported families are A, B, C, D and G2, each realized by standard
//! integer simple roots and coroots in the first coordinates of the lattice,
//! plus any number of central torus directions. `gl(n)` gets its own
//! constructor with the familiar `ε_i − ε_j` realization on `Z^n`.
//!
//! Every maximal torus of the group is conjugate to the fixed one, so all
//! cone data is recorded on its cocharacter lattice with Weyl translates
//! standing in for conjugation by arbitrary group elements.

use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cones::Cone;
use crate::lattice::{pair, CharVec, CocharVec, Coords};
use crate::linalg::{self, Matrix};
use crate::{Error, Result};

/// Default cap on the Weyl group order.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// Classical family tag for the semisimple part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
        }
    }
}

/// How the root datum was requested; kept for serialization and equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Classical {
        family: Family,
        semisimple_rank: usize,
        central_rank: usize,
    },
    Gl(usize),
}

/// A root datum on the fixed maximal torus.
#[derive(Debug)]
pub struct RootDatum {
    descriptor: GroupDescriptor,
    rank: usize,
    central_rank: usize,
    simple_roots: Vec<CharVec>,
    simple_coroots: Vec<CocharVec>,
    positive_roots: Vec<CharVec>,
    /// Coefficients of each positive root in the simple-root basis, aligned
    /// with `positive_roots`.
    positive_coeffs: Vec<Vec<i64>>,
    weyl_cap: usize,
    weyl_cache: OnceLock<std::result::Result<Arc<Vec<WeylElement>>, Error>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
    }
}
impl Eq for RootDatum {}

/// A Weyl group element: its action on the cocharacter lattice together
/// with one reduced word in the simple reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: Matrix,
    inverse: Matrix,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        WeylElement {
            matrix: linalg::identity(rank),
            inverse: linalg::identity(rank),
            word: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity(self.matrix.len())
    }

    /// Action on the cocharacter lattice.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// One reduced expression in simple reflections.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
            inverse: linalg::mat_mul(&other.inverse, &self.inverse),
            word,
        }
    }

    /// `w(γ)`, the conjugation action restricted to the torus.
    pub fn act_cochar(&self, gamma: &CocharVec) -> CocharVec {
        CocharVec::new(linalg::mat_apply(&self.matrix, gamma.coords()))
    }

    /// The dual action `χ ↦ χ ∘ w⁻¹` on characters.
    pub fn act_char(&self, chi: &CharVec) -> CharVec {
        CharVec::new(linalg::mat_apply(
            &linalg::transpose(&self.inverse),
            chi.coords(),
        ))
    }

    /// The matrix of the dual action, for mapping dual-side cones.
    pub fn char_matrix(&self) -> Matrix {
        linalg::transpose(&self.inverse)
    }

    /// Image of a cone in the cocharacter lattice.
    pub fn act_cone(&self, cone: &Cone) -> Result<Cone> {
        cone.apply_matrix(&self.matrix)
    }
}

/// The combinatorial shadow of a parabolic subgroup containing the torus:
/// the set of roots on its nonnegative side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicType {
    root_subset: Vec<CharVec>,
    standard: bool,
}

impl ParabolicType {
    pub fn root_subset(&self) -> &[CharVec] {
        &self.root_subset
    }

    /// Whether the subset contains every positive root of the chosen
    /// chamber (i.e. the parabolic contains the standard Borel).
    pub fn is_standard(&self) -> bool {
        self.standard
    }

    fn new(rd: &RootDatum, mut roots: Vec<CharVec>) -> ParabolicType {
        roots.sort();
        roots.dedup();
        let root_set: BTreeSet<&CharVec> = roots.iter().collect();
        let standard = rd.positive_roots.iter().all(|a| root_set.contains(a));
        ParabolicType {
            root_subset: roots,
            standard,
        }
    }

    /// Checks the defining closure and parabolic properties.
    pub fn validate(&self, rd: &RootDatum) -> Result<()> {
        let subset: BTreeSet<&CharVec> = self.root_subset.iter().collect();
        let all: BTreeSet<CharVec> = rd.all_roots().into_iter().collect();
        for a in &self.root_subset {
            if !all.contains(a) {
                return Err(Error::Validation(format!(
                    "parabolic type contains {a}, which is not a root"
                )));
            }
        }
        for a in &self.root_subset {
            for b in &self.root_subset {
                let sum = CharVec::new(
                    a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect(),
                );
                if all.contains(&sum) && !subset.contains(&sum) {
                    return Err(Error::Validation(format!(
                        "parabolic type is not closed: {a} + {b} = {sum} is missing"
                    )));
                }
            }
        }
        for a in &all {
            let neg = a.negated();
            if !subset.contains(a) && !subset.contains(&neg) {
                return Err(Error::Validation(format!(
                    "parabolic type misses both {a} and its negative"
                )));
            }
        }
        Ok(())
    }
}

impl RootDatum {
    /// Standard root datum of the given family with `central_rank` extra
    /// torus directions, on `Z^(semisimple_rank + central_rank)`.
    pub fn build(family: Family, semisimple_rank: usize, central_rank: usize) -> Result<RootDatum> {
        let min_rank = match family {
            Family::A => 0,
            Family::B | Family::C | Family::D => 2,
            Family::G2 => 2,
        };
        if semisimple_rank < min_rank {
            return Err(Error::Configuration(format!(
                "family {} requires semisimple rank at least {min_rank}",
                family.name()
            )));
        }
        if family == Family::G2 && semisimple_rank != 2 {
            return Err(Error::Configuration(
                "family G2 forces semisimple rank 2".into(),
            ));
        }
        let r = semisimple_rank;
        let rank = r + central_rank;
        let e = |i: usize| -> Coords {
            let mut v = vec![BigInt::zero(); rank];
            v[i] = BigInt::one();
            v
        };
        let diff = |i: usize, j: usize| -> Coords {
            let mut v = vec![BigInt::zero(); rank];
            v[i] = BigInt::one();
            v[j] = -BigInt::one();
            v
        };
        let mut simple_roots: Vec<Coords> = Vec::new();
        let mut simple_coroots: Vec<Coords> = Vec::new();
        match family {
            Family::A => {
                // Coroots are the first r basis vectors; roots are the rows
                // of the Cartan matrix in the dual basis.
                for i in 0..r {
                    let mut root = vec![BigInt::zero(); rank];
                    root[i] = BigInt::from(2);
                    if i > 0 {
                        root[i - 1] = -BigInt::one();
                    }
                    if i + 1 < r {
                        root[i + 1] = -BigInt::one();
                    }
                    simple_roots.push(root);
                    simple_coroots.push(e(i));
                }
            }
            Family::B => {
                for i in 0..r - 1 {
                    simple_roots.push(diff(i, i + 1));
                    simple_coroots.push(diff(i, i + 1));
                }
                simple_roots.push(e(r - 1));
                let mut v = vec![BigInt::zero(); rank];
                v[r - 1] = BigInt::from(2);
                simple_coroots.push(v);
            }
            Family::C => {
                for i in 0..r - 1 {
                    simple_roots.push(diff(i, i + 1));
                    simple_coroots.push(diff(i, i + 1));
                }
                let mut v = vec![BigInt::zero(); rank];
                v[r - 1] = BigInt::from(2);
                simple_roots.push(v);
                simple_coroots.push(e(r - 1));
            }
            Family::D => {
                for i in 0..r - 1 {
                    simple_roots.push(diff(i, i + 1));
                    simple_coroots.push(diff(i, i + 1));
                }
                let mut v = vec![BigInt::zero(); rank];
                v[r - 2] = BigInt::one();
                v[r - 1] = BigInt::one();
                simple_roots.push(v.clone());
                simple_coroots.push(v);
            }
            Family::G2 => {
                simple_roots.push({
                    let mut v = vec![BigInt::zero(); rank];
                    v[0] = BigInt::from(2);
                    v[1] = -BigInt::one();
                    v
                });
                simple_roots.push({
                    let mut v = vec![BigInt::zero(); rank];
                    v[0] = -BigInt::from(3);
                    v[1] = BigInt::from(2);
                    v
                });
                simple_coroots.push(e(0));
                simple_coroots.push(e(1));
            }
        }
        RootDatum::from_parts(
            GroupDescriptor::Classical {
                family,
                semisimple_rank,
                central_rank,
            },
            rank,
            central_rank,
            simple_roots,
            simple_coroots,
        )
    }

    /// The general linear group `gl(n)`: family A of semisimple rank
    /// `n − 1` with a one-dimensional center, realized on `Z^n` with roots
    /// `ε_i − ε_j`.
    pub fn gl(n: usize) -> Result<RootDatum> {
        if n == 0 {
            return Err(Error::Configuration("gl(0) has no torus".into()));
        }
        let mut simple_roots: Vec<Coords> = Vec::new();
        let mut simple_coroots: Vec<Coords> = Vec::new();
        for i in 0..n - 1 {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::one();
            v[i + 1] = -BigInt::one();
            simple_roots.push(v.clone());
            simple_coroots.push(v);
        }
        RootDatum::from_parts(GroupDescriptor::Gl(n), n, 1, simple_roots, simple_coroots)
    }

    fn from_parts(
        descriptor: GroupDescriptor,
        rank: usize,
        central_rank: usize,
        simple_roots: Vec<Coords>,
        simple_coroots: Vec<Coords>,
    ) -> Result<RootDatum> {
        let count = simple_roots.len();
        debug_assert_eq!(count, simple_coroots.len());
        // Cartan integers ⟨α_i, α_j^∨⟩ must form a finite-type matrix.
        let mut cartan = vec![vec![0i64; count]; count];
        for i in 0..count {
            for j in 0..count {
                let c = crate::lattice::coords_dot(&simple_roots[i], &simple_coroots[j]);
                cartan[i][j] = i64::try_from(&c)
                    .map_err(|_| Error::Configuration("Cartan integer out of range".into()))?;
            }
        }
        for i in 0..count {
            if cartan[i][i] != 2 {
                return Err(Error::Configuration(format!(
                    "Cartan diagonal entry {} is not 2",
                    cartan[i][i]
                )));
            }
            for j in 0..count {
                if i == j {
                    continue;
                }
                if cartan[i][j] > 0 {
                    return Err(Error::Configuration(
                        "off-diagonal Cartan entries must be nonpositive".into(),
                    ));
                }
                let product = cartan[i][j] * cartan[j][i];
                if !(0..=3).contains(&product) {
                    return Err(Error::Configuration(format!(
                        "Cartan product {product} outside finite type"
                    )));
                }
            }
        }
        let root_matrix: Matrix = simple_roots.clone();
        if linalg::rank(&root_matrix) != count {
            return Err(Error::Configuration(
                "simple roots are not linearly independent".into(),
            ));
        }

        let mut rd = RootDatum {
            descriptor,
            rank,
            central_rank,
            simple_roots: simple_roots.into_iter().map(CharVec::new).collect(),
            simple_coroots: simple_coroots.into_iter().map(CocharVec::new).collect(),
            positive_roots: Vec::new(),
            positive_coeffs: Vec::new(),
            weyl_cap: DEFAULT_WEYL_CAP,
            weyl_cache: OnceLock::new(),
        };
        rd.generate_roots()?;
        Ok(rd)
    }

    /// Closes the simple roots under the simple reflections, tracking
    /// simple-root coefficients; positives are the nonnegative ones.
    fn generate_roots(&mut self) -> Result<()> {
        let count = self.simple_roots.len();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: Vec<(Vec<i64>, CharVec)> = Vec::new();
        for i in 0..count {
            let mut coeff = vec![0i64; count];
            coeff[i] = 1;
            seen.insert(coeff.clone());
            queue.push((coeff, self.simple_roots[i].clone()));
        }
        let mut idx = 0;
        while idx < queue.len() {
            let (coeff, root) = queue[idx].clone();
            idx += 1;
            for i in 0..count {
                let c = pair(&root, &self.simple_coroots[i])?;
                let c = i64::try_from(&c)
                    .map_err(|_| Error::Configuration("root pairing overflow".into()))?;
                let mut new_coeff = coeff.clone();
                new_coeff[i] -= c;
                if seen.contains(&new_coeff) {
                    continue;
                }
                let new_root = CharVec::new(
                    root.coords()
                        .iter()
                        .zip(self.simple_roots[i].coords())
                        .map(|(x, a)| x - BigInt::from(c) * a)
                        .collect(),
                );
                seen.insert(new_coeff.clone());
                queue.push((new_coeff, new_root));
                if queue.len() > 10_000 {
                    return Err(Error::Configuration(
                        "root system closure did not stay finite".into(),
                    ));
                }
            }
        }
        let mut positives: Vec<(Vec<i64>, CharVec)> = queue
            .into_iter()
            .filter(|(coeff, _)| coeff.iter().all(|&c| c >= 0))
            .collect();
        positives.sort_by(|a, b| a.1.cmp(&b.1));
        self.positive_coeffs = positives.iter().map(|(c, _)| c.clone()).collect();
        self.positive_roots = positives.into_iter().map(|(_, r)| r).collect();
        Ok(())
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    /// Rank of the torus, i.e. of the cocharacter lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn central_rank(&self) -> usize {
        self.central_rank
    }

    pub fn simple_roots(&self) -> &[CharVec] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[CocharVec] {
        &self.simple_coroots
    }

    pub fn positive_roots(&self) -> &[CharVec] {
        &self.positive_roots
    }

    /// All roots, positives and their negatives.
    pub fn all_roots(&self) -> Vec<CharVec> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(CharVec::negated));
        out
    }

    /// Overrides the Weyl group order cap (default 10^6). Clears the cache.
    pub fn with_weyl_cap(mut self, cap: usize) -> RootDatum {
        self.weyl_cap = cap;
        self.weyl_cache = OnceLock::new();
        self
    }

    /// The simple reflection `s_i` as a Weyl element.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let matrix = self.reflection_matrix(i);
        WeylElement {
            inverse: matrix.clone(),
            matrix,
            word: vec![i],
        }
    }

    fn reflection_matrix(&self, i: usize) -> Matrix {
        // γ ↦ γ − ⟨α_i, γ⟩ α_i^∨
        let alpha = self.simple_roots[i].coords();
        let coroot = self.simple_coroots[i].coords();
        let mut m = linalg::identity(self.rank);
        for row in 0..self.rank {
            for col in 0..self.rank {
                let sub = &coroot[row] * &alpha[col];
                m[row][col] -= sub;
            }
        }
        m
    }

    /// The Weyl element of a word in simple reflections.
    pub fn weyl_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = WeylElement::identity(self.rank);
        for &i in word {
            if i >= self.semisimple_rank() {
                return Err(Error::Configuration(format!(
                    "reflection index {i} out of range"
                )));
            }
            w = w.compose(&self.simple_reflection(i));
        }
        Ok(w)
    }

    /// The full Weyl group, generated breadth-first from the identity.
    ///
    /// Elements are listed in canonical Weyl order: by word length, then
    /// lexicographically by reduced word; every element carries the least
    /// such word. The result is cached; the first computation wins.
    pub fn weyl_group(&self) -> Result<Arc<Vec<WeylElement>>> {
        self.weyl_cache.get_or_init(|| self.generate_weyl()).clone()
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> Result<usize> {
        Ok(self.weyl_group()?.len())
    }

    fn generate_weyl(&self) -> std::result::Result<Arc<Vec<WeylElement>>, Error> {
        let count = self.semisimple_rank();
        let reflections: Vec<WeylElement> =
            (0..count).map(|i| self.simple_reflection(i)).collect();
        let identity = WeylElement::identity(self.rank);
        let mut seen: HashSet<Matrix> = HashSet::new();
        seen.insert(identity.matrix.clone());
        let mut elements = vec![identity];
        let mut idx = 0;
        while idx < elements.len() {
            let current = elements[idx].clone();
            idx += 1;
            for s in &reflections {
                let next = current.compose(s);
                if seen.insert(next.matrix.clone()) {
                    elements.push(next);
                    if elements.len() > self.weyl_cap {
                        return Err(Error::ResourceLimit(format!(
                            "Weyl group order exceeds the cap {}",
                            self.weyl_cap
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(elements))
    }

    /// The parabolic type of a one-parameter subgroup: the roots pairing
    /// nonnegatively with it. The trivial subgroup yields every root.
    pub fn parabolic_type(&self, gamma: &CocharVec) -> Result<ParabolicType> {
        if gamma.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: gamma.rank(),
            });
        }
        let mut roots = Vec::new();
        for alpha in self.all_roots() {
            if !pair(&alpha, gamma)?.is_negative() {
                roots.push(alpha);
            }
        }
        Ok(ParabolicType::new(self, roots))
    }

    /// The cone `{γ : ⟨α, γ⟩ ≥ 0 for every α in the parabolic type}`.
    /// Membership is equivalent to the parabolic type of γ containing P.
    pub fn delta_cone(&self, parabolic: &ParabolicType) -> Result<Cone> {
        let ineqs: Vec<Coords> = parabolic
            .root_subset
            .iter()
            .map(|a| a.coords().to_vec())
            .collect();
        Cone::from_inequalities(self.rank, &ineqs)
    }

    /// The unique dominant Weyl translate of γ, together with an element
    /// carrying γ onto it.
    pub fn dominant_representative(&self, gamma: &CocharVec) -> Result<(CocharVec, WeylElement)> {
        if gamma.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: gamma.rank(),
            });
        }
        let mut current = gamma.clone();
        let mut w = WeylElement::identity(self.rank);
        loop {
            let mut moved = false;
            for i in 0..self.semisimple_rank() {
                if pair(&self.simple_roots[i], &current)?.is_negative() {
                    let s = self.simple_reflection(i);
                    current = s.act_cochar(&current);
                    w = s.compose(&w);
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        Ok((current, w))
    }

    /// True iff every simple root pairs nonnegatively with γ.
    pub fn is_dominant(&self, gamma: &CocharVec) -> Result<bool> {
        for alpha in &self.simple_roots {
            if pair(alpha, gamma)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The Weyl elements fixing γ (the Weyl group of the Levi of its
    /// parabolic).
    pub fn levi_stabilizer(&self, gamma: &CocharVec) -> Result<Vec<WeylElement>> {
        let group = self.weyl_group()?;
        Ok(group
            .iter()
            .filter(|w| &w.act_cochar(gamma) == gamma)
            .cloned()
            .collect())
    }

    /// Equivalence of nontrivial one-parameter subgroups of the fixed
    /// torus. Inside one torus the relation collapses to ray equality: a
    /// conjugator normalizing the comparison fixes the source, so only
    /// positive rescalings remain.
    pub fn equivalent_in_torus(&self, g1: &CocharVec, g2: &CocharVec) -> Result<bool> {
        if g1.is_zero() || g2.is_zero() {
            return Err(Error::DegenerateInput(
                "equivalence is defined for nontrivial one-parameter subgroups".into(),
            ));
        }
        Ok(g1.primitive()? == g2.primitive()?)
    }

    /// The standard parabolic types: one for each subset of the simple
    /// roots, consisting of all positive roots plus the negatives supported
    /// on the subset.
    pub fn standard_parabolic_types(&self) -> Vec<ParabolicType> {
        let count = self.semisimple_rank();
        let mut out = Vec::new();
        for mask in 0..(1usize << count) {
            let mut roots = self.positive_roots.clone();
            for (idx, coeff) in self.positive_coeffs.iter().enumerate() {
                let supported = coeff
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || mask & (1 << i) != 0);
                if supported {
                    roots.push(self.positive_roots[idx].negated());
                }
            }
            out.push(ParabolicType::new(self, roots));
        }
        out.sort();
        out.dedup();
        out
    }

    /// All parabolic types containing the fixed torus: the Weyl translates
    /// of the standard ones.
    pub fn parabolic_types_containing_torus(&self) -> Result<Vec<ParabolicType>> {
        let group = self.weyl_group()?;
        let mut out: Vec<ParabolicType> = Vec::new();
        for p in self.standard_parabolic_types() {
            for w in group.iter() {
                let roots: Vec<CharVec> = p.root_subset.iter().map(|a| w.act_char(a)).collect();
                out.push(ParabolicType::new(self, roots));
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::coords_from_i64;

    fn gl(n: usize) -> RootDatum {
        RootDatum::gl(n).unwrap()
    }

    #[test]
    fn gl2_tables() {
        let rd = gl(2);
        assert_eq!(rd.rank(), 2);
        assert_eq!(rd.positive_roots(), &[CharVec::from_i64(&[1, -1])]);
        assert_eq!(rd.simple_coroots(), &[CocharVec::from_i64(&[1, -1])]);
        assert_eq!(rd.weyl_order().unwrap(), 2);
    }

    #[test]
    fn weyl_orders_match_tables() {
        let order = |family, r| {
            RootDatum::build(family, r, 0)
                .unwrap()
                .weyl_order()
                .unwrap()
        };
        assert_eq!(order(Family::A, 2), 6);
        assert_eq!(order(Family::B, 2), 8);
        assert_eq!(order(Family::G2, 2), 12);
        assert_eq!(order(Family::A, 3), 24);
        assert_eq!(order(Family::C, 3), 48);
        assert_eq!(order(Family::D, 4), 192);
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(
            RootDatum::build(Family::A, 2, 0).unwrap().positive_roots().len(),
            3
        );
        assert_eq!(
            RootDatum::build(Family::G2, 2, 0).unwrap().positive_roots().len(),
            6
        );
        assert_eq!(
            RootDatum::build(Family::B, 2, 0).unwrap().positive_roots().len(),
            4
        );
        assert_eq!(gl(3).positive_roots().len(), 3);
    }

    #[test]
    fn invalid_configurations_are_rejected() {
        assert!(RootDatum::build(Family::G2, 3, 0).is_err());
        assert!(RootDatum::build(Family::B, 1, 0).is_err());
        assert!(RootDatum::gl(0).is_err());
    }

    #[test]
    fn torus_is_allowed() {
        let rd = RootDatum::build(Family::A, 0, 2).unwrap();
        assert_eq!(rd.rank(), 2);
        assert!(rd.positive_roots().is_empty());
        assert_eq!(rd.weyl_order().unwrap(), 1);
    }

    #[test]
    fn weyl_cap_is_enforced() {
        let rd = RootDatum::build(Family::A, 3, 0).unwrap().with_weyl_cap(10);
        assert!(matches!(rd.weyl_group(), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn weyl_elements_permute_roots() {
        for rd in [
            RootDatum::build(Family::B, 2, 0).unwrap(),
            RootDatum::build(Family::G2, 2, 0).unwrap(),
            gl(3),
        ] {
            let all: BTreeSet<CharVec> = rd.all_roots().into_iter().collect();
            for w in rd.weyl_group().unwrap().iter() {
                let image: BTreeSet<CharVec> = all.iter().map(|a| w.act_char(a)).collect();
                assert_eq!(image, all);
            }
        }
    }

    #[test]
    fn parabolic_type_examples() {
        let rd = gl(3);
        let p = rd.parabolic_type(&CocharVec::from_i64(&[1, 1, 0])).unwrap();
        let mut expected: Vec<CharVec> = [
            [1i64, -1, 0],
            [-1, 1, 0],
            [1, 0, -1],
            [0, 1, -1],
        ]
        .iter()
        .map(|v| CharVec::from_i64(v))
        .collect();
        expected.sort();
        assert_eq!(p.root_subset(), &expected[..]);
        p.validate(&rd).unwrap();

        // γ = 0 yields every root.
        let p0 = rd.parabolic_type(&CocharVec::zero(3)).unwrap();
        assert_eq!(p0.root_subset().len(), 6);
        assert!(p0.is_standard());

        // Borel type for a regular dominant γ.
        let rd2 = gl(2);
        let borel = rd2.parabolic_type(&CocharVec::from_i64(&[2, 1])).unwrap();
        assert_eq!(borel.root_subset(), &[CharVec::from_i64(&[1, -1])]);
        assert!(borel.is_standard());
    }

    #[test]
    fn delta_cone_examples() {
        let rd = gl(2);
        let borel = rd.parabolic_type(&CocharVec::from_i64(&[2, 1])).unwrap();
        let cone = rd.delta_cone(&borel).unwrap();
        // Half-plane a1 >= a2.
        assert!(cone.contains(&coords_from_i64(&[3, 1])).unwrap());
        assert!(!cone.contains(&coords_from_i64(&[1, 3])).unwrap());
        assert_eq!(cone.lineality_dim(), 1);

        let all = rd.parabolic_type(&CocharVec::zero(2)).unwrap();
        let central = rd.delta_cone(&all).unwrap();
        // Opposite inequalities force the central line a1 = a2.
        assert_eq!(central.dim(), 1);
        assert!(central.contains(&coords_from_i64(&[1, 1])).unwrap());
        assert!(!central.contains(&coords_from_i64(&[1, 0])).unwrap());
    }

    #[test]
    fn delta_cone_membership_matches_parabolic_inclusion() {
        let rd = gl(3);
        let p = rd.parabolic_type(&CocharVec::from_i64(&[1, 1, 0])).unwrap();
        let cone = rd.delta_cone(&p).unwrap();
        let subset: BTreeSet<&CharVec> = p.root_subset().iter().collect();
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    let v = [a, b, c];
                    let gamma = CocharVec::from_i64(&v);
                    let inside = cone.contains(&coords_from_i64(&v)).unwrap();
                    let q = rd.parabolic_type(&gamma).unwrap();
                    let qset: BTreeSet<&CharVec> = q.root_subset().iter().collect();
                    let includes = subset.iter().all(|r| qset.contains(*r));
                    assert_eq!(inside, includes, "mismatch at {gamma}");
                }
            }
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let rd = gl(3);
        let (dom, w) = rd
            .dominant_representative(&CocharVec::from_i64(&[0, 2, 1]))
            .unwrap();
        assert_eq!(dom, CocharVec::from_i64(&[2, 1, 0]));
        assert_eq!(w.act_cochar(&CocharVec::from_i64(&[0, 2, 1])), dom);

        let (zero, w) = rd.dominant_representative(&CocharVec::zero(3)).unwrap();
        assert_eq!(zero, CocharVec::zero(3));
        assert!(w.is_identity());

        let rd2 = gl(2);
        let (central, w) = rd2
            .dominant_representative(&CocharVec::from_i64(&[1, 1]))
            .unwrap();
        assert_eq!(central, CocharVec::from_i64(&[1, 1]));
        assert!(w.is_identity());
    }

    #[test]
    fn dominant_representative_is_idempotent_and_unique() {
        let rd = gl(3);
        let group = rd.weyl_group().unwrap();
        for v in [[3i64, -1, 2], [0, 0, 5], [-2, -2, 4]] {
            let gamma = CocharVec::from_i64(&v);
            let (dom, _) = rd.dominant_representative(&gamma).unwrap();
            let (again, w) = rd.dominant_representative(&dom).unwrap();
            assert_eq!(again, dom);
            assert!(w.is_identity());
            // Exactly one dominant element in the orbit.
            let dominants: BTreeSet<CocharVec> = group
                .iter()
                .map(|w| w.act_cochar(&gamma))
                .filter(|g| rd.is_dominant(g).unwrap())
                .collect();
            assert_eq!(dominants.len(), 1);
            assert!(dominants.contains(&dom));
        }
    }

    #[test]
    fn levi_stabilizer_examples() {
        let rd = gl(3);
        assert_eq!(
            rd.levi_stabilizer(&CocharVec::from_i64(&[1, 1, 0]))
                .unwrap()
                .len(),
            2
        );
        assert_eq!(rd.levi_stabilizer(&CocharVec::zero(3)).unwrap().len(), 6);
        let rd2 = gl(2);
        let stab = rd2.levi_stabilizer(&CocharVec::from_i64(&[2, 1])).unwrap();
        assert_eq!(stab.len(), 1);
        assert!(stab[0].is_identity());
    }

    #[test]
    fn torus_equivalence_examples() {
        let rd = gl(2);
        let eq = |a: &[i64], b: &[i64]| {
            rd.equivalent_in_torus(&CocharVec::from_i64(a), &CocharVec::from_i64(b))
                .unwrap()
        };
        assert!(eq(&[2, 4], &[1, 2]));
        assert!(!eq(&[1, 2], &[2, 1]));
        assert!(!eq(&[1, 0], &[-1, 0]));
        assert!(rd
            .equivalent_in_torus(&CocharVec::zero(2), &CocharVec::from_i64(&[1, 0]))
            .is_err());
    }

    #[test]
    fn parabolic_type_is_weyl_equivariant() {
        let rd = RootDatum::build(Family::B, 2, 0).unwrap();
        let gamma = CocharVec::from_i64(&[2, 1]);
        for w in rd.weyl_group().unwrap().iter() {
            let lhs = rd.parabolic_type(&w.act_cochar(&gamma)).unwrap();
            let image: BTreeSet<CharVec> = rd
                .parabolic_type(&gamma)
                .unwrap()
                .root_subset()
                .iter()
                .map(|a| w.act_char(a))
                .collect();
            let lhs_set: BTreeSet<CharVec> = lhs.root_subset().iter().cloned().collect();
            assert_eq!(lhs_set, image);
        }
    }

    #[test]
    fn standard_parabolics_of_gl2() {
        let rd = gl(2);
        let standard = rd.standard_parabolic_types();
        assert_eq!(standard.len(), 2); // Borel and G.
        let all = rd.parabolic_types_containing_torus().unwrap();
        assert_eq!(all.len(), 3); // Borel±, G.
    }

    #[test]
    fn reduced_words_compose_to_their_matrices() {
        let rd = RootDatum::build(Family::G2, 2, 0).unwrap();
        for w in rd.weyl_group().unwrap().iter() {
            let rebuilt = rd.weyl_from_word(w.word()).unwrap();
            assert_eq!(rebuilt.matrix(), w.matrix());
            let composed = w.compose(&w.inverse());
            assert!(composed.is_identity());
        }
    }
}
