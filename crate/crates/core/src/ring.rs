//! The abstract finite unital ring interface and the canonical
//! index <-> coordinate encoding shared by every concrete construction.
//!
//! Elements are addressed by an integer index in `0..|R|`. The index is the
//! little-endian positional encoding of the element's coordinate vector
//! (first coordinate least significant), which makes every listing in the
//! crate byte-reproducible.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::field::FiniteField;

/// Hard default cap on |R| for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 1 << 20;

/// Largest |R| for which dense operation tables and exhaustive
/// (all-elements / all-pairs / all-triples) verification are used.
pub const EXHAUSTIVE_BOUND: usize = 4096;

/// Coordinate view of a ring element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Coords {
    /// Residue in Z/n.
    Residue(u64),
    /// Coordinate vector over F_q of a structure-constant algebra.
    Vector(Vec<u64>),
    /// Matrix of residues in M_k(Z/n), row major.
    Matrix(Vec<Vec<u64>>),
    /// One entry per factor of a product ring.
    Tuple(Vec<Coords>),
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coords::Residue(r) => write!(f, "{r}"),
            Coords::Vector(v) => {
                write!(f, "(")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            Coords::Matrix(rows) => {
                write!(f, "[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[")?;
                    for (j, c) in row.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{c}")?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
            Coords::Tuple(parts) => {
                write!(f, "(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An element paired with its coordinate view, for display and reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingElement {
    pub index: usize,
    pub coords: Coords,
}

/// Matrix layout of a structure-constant algebra, used for display.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixShape {
    /// Basis = all matrix units E_ab, row major.
    Full { k: usize },
    /// Basis = matrix units E_ab with a <= b, ordered by (a, b).
    UpperTriangular { k: usize },
}

/// View of a ring as a finite-dimensional algebra over F_q. Available when
/// element indices are exactly the little-endian base-q encodings of
/// coordinate vectors of length `dim`.
pub struct FqView<'a> {
    pub field: &'a FiniteField,
    pub dim: usize,
}

impl FqView<'_> {
    pub fn q(&self) -> usize {
        self.field.order()
    }

    /// Base-q digits of an index, little endian, length `dim`.
    pub fn coords_of(&self, x: usize) -> Vec<u8> {
        let q = self.field.order();
        let mut digits = vec![0u8; self.dim];
        let mut rest = x;
        for d in digits.iter_mut() {
            *d = (rest % q) as u8;
            rest /= q;
        }
        digits
    }

    pub fn index_of(&self, digits: &[u8]) -> usize {
        let q = self.field.order();
        let mut x = 0usize;
        for &d in digits.iter().rev() {
            x = x * q + d as usize;
        }
        x
    }

    /// Scalar action of c in F_q on an element, coordinatewise.
    pub fn scalar_mul(&self, c: u8, x: usize) -> usize {
        let digits = self.coords_of(x);
        let scaled: Vec<u8> = digits.iter().map(|&d| self.field.mul(c, d)).collect();
        self.index_of(&scaled)
    }
}

/// A finite associative unital ring with indexed elements.
///
/// Implementations are immutable once constructed; every method is safe to
/// call concurrently.
pub trait Ring: Send + Sync {
    fn size(&self) -> usize;

    /// Index of the multiplicative identity.
    fn one(&self) -> usize;

    fn add(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;

    /// Human-readable name of the construction, e.g. `M_2(F_3)`.
    fn descriptor(&self) -> String;

    fn coords(&self, x: usize) -> Coords;

    /// Index of a coordinate view; `None` if it does not denote an element.
    fn decode(&self, coords: &Coords) -> Option<usize>;

    fn enumeration_bound(&self) -> usize;

    /// Index of zero. All canonical encodings place it at 0.
    fn zero(&self) -> usize {
        0
    }

    fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    fn element(&self, x: usize) -> RingElement {
        RingElement {
            index: x,
            coords: self.coords(x),
        }
    }

    /// A set S such that x is central iff x commutes with S. `None` means
    /// no shortcut is known and centrality needs a full scan.
    fn commute_generators(&self) -> Option<Vec<usize>> {
        None
    }

    /// F_q-algebra view, when the ring is one.
    fn fq_view(&self) -> Option<FqView<'_>> {
        None
    }

    /// Matrix layout for display, when the basis consists of matrix units.
    fn matrix_shape(&self) -> Option<MatrixShape> {
        None
    }

    /// Concrete-type hook used by axiom verification to run basis-level
    /// checks instead of exhaustive scans.
    fn as_structure_constants(&self) -> Option<&crate::algebra::StructureConstantAlgebra> {
        None
    }
}

/// Little-endian digits of `x` in the given base.
pub(crate) fn radix_digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut digits = vec![0usize; len];
    for d in digits.iter_mut() {
        *d = x % base;
        x /= base;
    }
    digits
}

/// Inverse of [`radix_digits`].
pub(crate) fn radix_index(digits: &[usize], base: usize) -> usize {
    let mut x = 0usize;
    for &d in digits.iter().rev() {
        x = x * base + d;
    }
    x
}

/// Dense operation tables for rings with |R| <= [`EXHAUSTIVE_BOUND`].
/// Indices fit in u16 because the bound is 4096.
#[derive(Debug, Clone)]
pub(crate) struct DenseCache {
    pub n: usize,
    pub add: Vec<u16>,
    pub mul: Vec<u16>,
    pub neg: Vec<u16>,
}

impl DenseCache {
    /// Build by evaluating the supplied operations on every pair. Rows are
    /// computed in parallel; the result does not depend on thread count.
    pub fn build(
        n: usize,
        add: impl Fn(usize, usize) -> usize + Sync,
        mul: impl Fn(usize, usize) -> usize + Sync,
        neg: impl Fn(usize) -> usize + Sync,
    ) -> Self {
        let add_tab: Vec<u16> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| (0..n).map(move |b| add(a, b) as u16))
            .collect();
        let mul_tab: Vec<u16> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| (0..n).map(move |b| mul(a, b) as u16))
            .collect();
        let neg_tab: Vec<u16> = (0..n).map(|a| neg(a) as u16).collect();
        DenseCache {
            n,
            add: add_tab,
            mul: mul_tab,
            neg: neg_tab,
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radix_round_trip() {
        for x in 0..81 {
            let d = radix_digits(x, 3, 4);
            assert_eq!(radix_index(&d, 3), x);
        }
    }

    #[test]
    fn coords_display() {
        assert_eq!(Coords::Residue(5).to_string(), "5");
        assert_eq!(Coords::Vector(vec![1, 0, 2]).to_string(), "(1,0,2)");
        assert_eq!(
            Coords::Matrix(vec![vec![1, 0], vec![0, 1]]).to_string(),
            "[[1,0],[0,1]]"
        );
        assert_eq!(
            Coords::Tuple(vec![Coords::Residue(1), Coords::Residue(2)]).to_string(),
            "(1; 2)"
        );
    }

    #[test]
    fn coords_serialize_shapes() {
        assert_eq!(serde_json::to_string(&Coords::Residue(3)).unwrap(), "3");
        assert_eq!(
            serde_json::to_string(&Coords::Vector(vec![1, 2])).unwrap(),
            "[1,2]"
        );
        assert_eq!(
            serde_json::to_string(&Coords::Matrix(vec![vec![1], vec![0]])).unwrap(),
            "[[1],[0]]"
        );
    }
}
