//! Finite-dimensional vector lattices over the rationals.
//!
//! Two order kinds are representable: the coordinatewise order (the
//! Archimedean workhorse) and the lexicographic order (total, and
//! non-Archimedean from dimension two upward). Every lattice operation is
//! exact and pure.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_vector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Coordinatewise,
    Lexicographic,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::Coordinatewise => write!(f, "coordinatewise"),
            OrderKind::Lexicographic => write!(f, "lexicographic"),
        }
    }
}

/// A finite-dimensional ordered vector space; `dim` plus an order kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeSpace {
    dim: usize,
    order: OrderKind,
}

impl LatticeSpace {
    pub fn coordinatewise(dim: usize) -> Self {
        LatticeSpace {
            dim,
            order: OrderKind::Coordinatewise,
        }
    }

    pub fn lexicographic(dim: usize) -> Self {
        LatticeSpace {
            dim,
            order: OrderKind::Lexicographic,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    /// Coordinatewise spaces are Archimedean; a lexicographic space is
    /// Archimedean only in dimension at most one.
    pub fn is_archimedean(&self) -> bool {
        self.order == OrderKind::Coordinatewise || self.dim <= 1
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "element coordinates",
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(Element {
            space: *self,
            coords,
        })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<Element> {
        self.element(
            coords
                .iter()
                .map(|&n| Rational::from_integer(n.into()))
                .collect(),
        )
    }

    pub fn zero(&self) -> Element {
        Element {
            space: *self,
            coords: vec![Rational::zero(); self.dim],
        }
    }

    pub fn basis_vector(&self, i: usize) -> Element {
        assert!(i < self.dim, "basis index out of range");
        let mut z = self.zero();
        z.coords[i] = Rational::from_integer(1.into());
        z
    }
}

impl fmt::Display for LatticeSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q^{} ({})", self.dim, self.order)
    }
}

/// A vector of a [`LatticeSpace`]; carries its space so that lattice
/// operations can check compatibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    space: LatticeSpace,
    coords: Vec<Rational>,
}

impl Element {
    pub fn space(&self) -> LatticeSpace {
        self.space
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    fn check_same_space(&self, other: &Element, context: &'static str) -> Result<()> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.space.dim,
                found: other.space.dim,
            });
        }
        Ok(())
    }

    /// Order decision: coordinatewise compares every coordinate; the
    /// lexicographic order compares the first nonzero coordinate of the
    /// difference, so it is total.
    pub fn leq(&self, other: &Element) -> Result<bool> {
        self.check_same_space(other, "order comparison")?;
        match self.space.order {
            OrderKind::Coordinatewise => {
                Ok(self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b))
            }
            OrderKind::Lexicographic => {
                for (a, b) in self.coords.iter().zip(&other.coords) {
                    if a != b {
                        return Ok(a < b);
                    }
                }
                Ok(true)
            }
        }
    }

    /// `0 <= self` in the space order.
    pub fn is_positive(&self) -> bool {
        match self.space.order {
            OrderKind::Coordinatewise => self.coords.iter().all(|c| !c.is_negative()),
            OrderKind::Lexicographic => match self.coords.iter().find(|c| !c.is_zero()) {
                Some(first) => first.is_positive(),
                None => true,
            },
        }
    }

    /// Least upper bound.
    pub fn sup(&self, other: &Element) -> Result<Element> {
        self.check_same_space(other, "supremum")?;
        match self.space.order {
            OrderKind::Coordinatewise => {
                let coords = self
                    .coords
                    .iter()
                    .zip(&other.coords)
                    .map(|(a, b)| if a >= b { a.clone() } else { b.clone() })
                    .collect();
                Ok(Element {
                    space: self.space,
                    coords,
                })
            }
            // total order: the larger of the two
            OrderKind::Lexicographic => {
                if self.leq(other)? {
                    Ok(other.clone())
                } else {
                    Ok(self.clone())
                }
            }
        }
    }

    /// Greatest lower bound.
    pub fn inf(&self, other: &Element) -> Result<Element> {
        self.check_same_space(other, "infimum")?;
        match self.space.order {
            OrderKind::Coordinatewise => {
                let coords = self
                    .coords
                    .iter()
                    .zip(&other.coords)
                    .map(|(a, b)| if a <= b { a.clone() } else { b.clone() })
                    .collect();
                Ok(Element {
                    space: self.space,
                    coords,
                })
            }
            OrderKind::Lexicographic => {
                if self.leq(other)? {
                    Ok(self.clone())
                } else {
                    Ok(other.clone())
                }
            }
        }
    }

    pub fn pos_part(&self) -> Element {
        self.sup(&self.space.zero()).expect("same space")
    }

    pub fn neg_part(&self) -> Element {
        (-self).sup(&self.space.zero()).expect("same space")
    }

    pub fn abs(&self) -> Element {
        &self.pos_part() + &self.neg_part()
    }

    /// `(f⁺, f⁻, |f|)` with `f = f⁺ − f⁻`, `|f| = f⁺ + f⁻`, `f⁺ ∧ f⁻ = 0`.
    pub fn abs_parts(&self) -> (Element, Element, Element) {
        let pos = self.pos_part();
        let neg = self.neg_part();
        let abs = &pos + &neg;
        (pos, neg, abs)
    }

    /// `f ∧ g = 0`; forces both elements to be positive.
    pub fn is_disjoint(&self, other: &Element) -> Result<bool> {
        Ok(self.inf(other)?.is_zero())
    }

    pub fn scale(&self, factor: &Rational) -> Element {
        Element {
            space: self.space,
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_vector(&self.coords))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.space, rhs.space, "element addition across spaces");
        Element {
            space: self.space,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.space, rhs.space, "element subtraction across spaces");
        Element {
            space: self.space,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            space: self.space,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// Searches for a pair `f, g` with `0 <= n*f <= g` for every `n` up to
/// `max_n`, i.e. a finite witness of non-Archimedean behaviour.
///
/// Coordinatewise (and one-dimensional) spaces admit no such pair, so the
/// function returns `None` for them. In a lexicographic space the second
/// basis vector is infinitely small against the first; the candidate pair
/// is checked against every bound before it is returned.
pub fn non_archimedean_witness(space: LatticeSpace, max_n: u32) -> Option<(Element, Element)> {
    if space.is_archimedean() {
        return None;
    }
    let f = space.basis_vector(1);
    let g = space.basis_vector(0);
    let zero = space.zero();
    for n in 1..=i64::from(max_n) {
        let nf = f.scale(&Rational::from_integer(n.into()));
        let ok = zero.leq(&nf).unwrap_or(false) && nf.leq(&g).unwrap_or(false);
        if !ok {
            return None;
        }
    }
    Some((f, g))
}
