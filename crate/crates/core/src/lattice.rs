//! Exact integer linear algebra on the cocharacter lattice and its dual
//! character lattice.
//!
//! A one-parameter subgroup of the fixed maximal torus is a vector of
//! integers in a fixed basis of the cocharacter lattice; a character lives in
//! the dual basis. The integral pairing between the two underlies every
//! numerical function in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Integer coordinates shared by both lattice sides.
pub type Coords = Vec<BigInt>;

pub(crate) fn coords_from_i64(v: &[i64]) -> Coords {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn coords_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn coords_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Divides by the gcd of the entries; returns `None` for the zero vector.
/// The direction (sign) of the vector is preserved.
pub(crate) fn coords_primitive(v: &[BigInt]) -> Option<Coords> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// Negates the vector if its first nonzero entry is negative, so that each
/// line through the origin has a unique representative.
pub(crate) fn coords_line_canonical(v: &[BigInt]) -> Coords {
    for x in v {
        if x.is_positive() {
            return v.to_vec();
        }
        if x.is_negative() {
            return v.iter().map(|x| -x).collect();
        }
    }
    v.to_vec()
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

macro_rules! lattice_vector {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name {
            coords: Coords,
        }

        impl $name {
            pub fn new(coords: Coords) -> Self {
                Self { coords }
            }

            /// Convenience constructor from machine integers.
            pub fn from_i64(coords: &[i64]) -> Self {
                Self::new(coords_from_i64(coords))
            }

            pub fn zero(rank: usize) -> Self {
                Self::new(vec![BigInt::zero(); rank])
            }

            pub fn rank(&self) -> usize {
                self.coords.len()
            }

            pub fn coords(&self) -> &[BigInt] {
                &self.coords
            }

            pub fn into_coords(self) -> Coords {
                self.coords
            }

            pub fn is_zero(&self) -> bool {
                coords_is_zero(&self.coords)
            }

            /// The primitive generator of the same ray.
            ///
            /// Errors on the zero vector, which spans no ray.
            pub fn primitive(&self) -> Result<Self> {
                coords_primitive(&self.coords).map(Self::new).ok_or_else(|| {
                    Error::DegenerateInput(
                        "the zero vector has no primitive generator".into(),
                    )
                })
            }

            pub fn negated(&self) -> Self {
                Self::new(self.coords.iter().map(|x| -x).collect())
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                check_len(self.rank(), other.rank())?;
                Ok(Self::new(
                    self.coords
                        .iter()
                        .zip(&other.coords)
                        .map(|(a, b)| a + b)
                        .collect(),
                ))
            }

            pub fn scaled(&self, k: &BigInt) -> Self {
                Self::new(self.coords.iter().map(|x| x * k).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    };
}

lattice_vector! {
    /// A one-parameter subgroup of the fixed maximal torus: an element of
    /// the cocharacter lattice. The zero vector is the trivial one-parameter
    /// subgroup.
    CocharVec
}

lattice_vector! {
    /// A character of the fixed maximal torus: an element of the dual
    /// lattice.
    CharVec
}

/// The integral pairing `⟨χ, γ⟩ = Σ χ_i γ_i`, bilinear in both arguments.
pub fn pair(chi: &CharVec, gamma: &CocharVec) -> Result<BigInt> {
    check_len(chi.rank(), gamma.rank())?;
    Ok(coords_dot(chi.coords(), gamma.coords()))
}
