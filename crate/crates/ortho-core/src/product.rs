//! Orthosymmetric products on finite-dimensional lattice spaces.
//!
//! A product is stored as its tensor on basis pairs: `B[i][j]` is the
//! codomain vector `<e_i, e_j>`, so `<f, g> = Σ f_i g_j B[i][j]`. The two
//! defining axioms (positivity on the positive cone, vanishing on disjoint
//! pairs) have exact finite criteria per domain order kind, and every
//! downstream computation (neutral part, definiteness, quotient) is gated
//! on a successful verification.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Element, LatticeSpace, OrderKind};
use crate::matrix::{solve_linear, LinearSolution, RatMatrix};
use crate::rational::Rational;

/// A bilinear product `L × L → V` given by its rational 3-tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoProduct {
    domain: LatticeSpace,
    codomain: LatticeSpace,
    /// `tensor[i][j] = <e_i, e_j>`, an element of the codomain.
    tensor: Vec<Vec<Element>>,
    verified: bool,
}

/// Which axiom a counterexample violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Positivity,
    Orthosymmetry,
    Symmetry,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axiom::Positivity => write!(f, "positivity"),
            Axiom::Orthosymmetry => write!(f, "orthosymmetry"),
            Axiom::Symmetry => write!(f, "symmetry"),
        }
    }
}

/// A concrete violating pair together with the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub axiom: Axiom,
    pub left: Element,
    pub right: Element,
    pub value: Element,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} violated at ({}, {}) -> {}",
            self.axiom, self.left, self.right, self.value
        )
    }
}

/// Outcome of the axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub positivity_ok: bool,
    pub orthosymmetry_ok: bool,
    pub symmetry_ok: bool,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.positivity_ok && self.orthosymmetry_ok && self.symmetry_ok
    }

    /// An asymmetric tensor whose axioms nevertheless hold would contradict
    /// the symmetry theorem for orthosymmetric products; within the
    /// representable class this is impossible, and it is surfaced loudly if
    /// a tensor ever reaches that state.
    pub fn symmetry_inconsistency(&self) -> bool {
        self.positivity_ok && self.orthosymmetry_ok && !self.symmetry_ok
    }
}

/// Canonical basis of the neutral part `{f : <f, f> = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutralPart {
    pub basis: Vec<Element>,
}

impl NeutralPart {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Exact span membership test.
    pub fn contains(&self, f: &Element) -> Result<bool> {
        if self.basis.is_empty() {
            return Ok(f.is_zero());
        }
        let dim = f.space().dim();
        let mut cols = Vec::with_capacity(dim);
        for i in 0..dim {
            let row: Vec<Rational> = self.basis.iter().map(|b| b.coords()[i].clone()).collect();
            cols.push(row);
        }
        let m = RatMatrix::from_rows(cols)?;
        Ok(!matches!(
            solve_linear(&m, f.coords())?,
            LinearSolution::NoSolution
        ))
    }
}

/// The quotient of a product by its neutral part, realized on the standard
/// basis vectors outside the neutral support.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    pub parent: OrthoProduct,
    pub complement_indices: Vec<usize>,
    pub complement_basis: Vec<Element>,
    pub induced: OrthoProduct,
}

impl OrthoProduct {
    /// Builds an unverified product; shapes are checked, axioms are not.
    pub fn new(
        domain: LatticeSpace,
        codomain: LatticeSpace,
        tensor: Vec<Vec<Element>>,
    ) -> Result<Self> {
        let n = domain.dim();
        if tensor.len() != n {
            return Err(Error::DimensionMismatch {
                context: "product tensor rows",
                expected: n,
                found: tensor.len(),
            });
        }
        for row in &tensor {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "product tensor columns",
                    expected: n,
                    found: row.len(),
                });
            }
            for entry in row {
                if entry.space() != codomain {
                    return Err(Error::DimensionMismatch {
                        context: "tensor entry space",
                        expected: codomain.dim(),
                        found: entry.space().dim(),
                    });
                }
            }
        }
        Ok(OrthoProduct {
            domain,
            codomain,
            tensor,
            verified: false,
        })
    }

    /// Diagonal product from a list of codomain values: `B[i][i] = weights[i]`.
    pub fn diagonal(
        domain: LatticeSpace,
        codomain: LatticeSpace,
        weights: Vec<Element>,
    ) -> Result<Self> {
        if weights.len() != domain.dim() {
            return Err(Error::DimensionMismatch {
                context: "diagonal weights",
                expected: domain.dim(),
                found: weights.len(),
            });
        }
        let n = domain.dim();
        let mut tensor = vec![vec![codomain.zero(); n]; n];
        for (i, w) in weights.into_iter().enumerate() {
            tensor[i][i] = w;
        }
        Self::new(domain, codomain, tensor)
    }

    pub fn domain(&self) -> LatticeSpace {
        self.domain
    }

    pub fn codomain(&self) -> LatticeSpace {
        self.codomain
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn tensor_entry(&self, i: usize, j: usize) -> &Element {
        &self.tensor[i][j]
    }

    /// Bilinear contraction `Σ f_i g_j B[i][j]`, exact.
    pub fn eval(&self, f: &Element, g: &Element) -> Result<Element> {
        for (name, e) in [("left factor", f), ("right factor", g)] {
            if e.space() != self.domain {
                let _ = name;
                return Err(Error::DimensionMismatch {
                    context: "product evaluation",
                    expected: self.domain.dim(),
                    found: e.space().dim(),
                });
            }
        }
        let mut acc = self.codomain.zero();
        for (i, fi) in f.coords().iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in g.coords().iter().enumerate() {
                if gj.is_zero() {
                    continue;
                }
                let entry = &self.tensor[i][j];
                if entry.is_zero() {
                    continue;
                }
                acc = &acc + &entry.scale(&(fi * gj));
            }
        }
        Ok(acc)
    }

    /// Checks the product axioms and marks the product verified when all
    /// hold. The codomain must be coordinatewise; other codomains are
    /// outside the representable class.
    ///
    /// Coordinatewise domain: positivity holds iff every `B[i][j] >= 0`
    /// (the positive cone is generated by the standard basis), and
    /// orthosymmetry holds iff `B[i][j] = 0` off the diagonal (disjoint
    /// pairs are exactly nonnegative pairs with disjoint supports).
    ///
    /// Lexicographic domain of dimension two or more: the positive cone is
    /// dense in the half-space `f_0 >= 0`, and the coordinatewise codomain
    /// cone is closed, so positivity holds iff `B[i][j] = 0` for
    /// `(i, j) != (0, 0)` and `B[0][0] >= 0`; orthosymmetry is automatic in
    /// a total order.
    ///
    /// Tensor symmetry is reported separately.
    pub fn verify(&mut self) -> Result<VerificationReport> {
        if self.codomain.order() != OrderKind::Coordinatewise {
            return Err(Error::Unsupported(format!(
                "product codomain must be coordinatewise, got {}",
                self.codomain
            )));
        }
        let n = self.domain.dim();
        let mut witnesses = Vec::new();

        let mut symmetry_ok = true;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.tensor[i][j] != self.tensor[j][i] {
                    symmetry_ok = false;
                    witnesses.push(Witness {
                        axiom: Axiom::Symmetry,
                        left: self.domain.basis_vector(i),
                        right: self.domain.basis_vector(j),
                        value: &self.tensor[i][j] - &self.tensor[j][i],
                    });
                }
            }
        }

        let lexicographic = self.domain.order() == OrderKind::Lexicographic && n >= 2;
        let mut positivity_ok = true;
        let mut orthosymmetry_ok = true;
        if lexicographic {
            for i in 0..n {
                for j in 0..n {
                    if i == 0 && j == 0 {
                        if self.tensor[0][0].coords().iter().any(Signed::is_negative) {
                            positivity_ok = false;
                            witnesses.push(Witness {
                                axiom: Axiom::Positivity,
                                left: self.domain.basis_vector(0),
                                right: self.domain.basis_vector(0),
                                value: self.tensor[0][0].clone(),
                            });
                        }
                    } else if !self.tensor[i][j].is_zero() {
                        positivity_ok = false;
                        let (f, g) = self.lex_positivity_witness(i, j);
                        let value = self.eval(&f, &g)?;
                        witnesses.push(Witness {
                            axiom: Axiom::Positivity,
                            left: f,
                            right: g,
                            value,
                        });
                    }
                }
            }
        } else {
            for i in 0..n {
                for j in 0..n {
                    let entry = &self.tensor[i][j];
                    if entry.coords().iter().any(Signed::is_negative) {
                        positivity_ok = false;
                        witnesses.push(Witness {
                            axiom: Axiom::Positivity,
                            left: self.domain.basis_vector(i),
                            right: self.domain.basis_vector(j),
                            value: entry.clone(),
                        });
                    }
                    if i != j && !entry.is_zero() {
                        orthosymmetry_ok = false;
                        witnesses.push(Witness {
                            axiom: Axiom::Orthosymmetry,
                            left: self.domain.basis_vector(i),
                            right: self.domain.basis_vector(j),
                            value: entry.clone(),
                        });
                    }
                }
            }
        }

        let report = VerificationReport {
            positivity_ok,
            orthosymmetry_ok,
            symmetry_ok,
            witnesses,
        };
        self.verified = report.all_ok();
        Ok(report)
    }

    /// Verifies and returns the product, failing on any axiom violation.
    pub fn into_verified(mut self) -> Result<Self> {
        let report = self.verify()?;
        if !report.all_ok() {
            let first = report
                .witnesses
                .first()
                .map(|w| w.to_string())
                .unwrap_or_default();
            return Err(Error::Unsupported(format!(
                "product fails the axioms: {first}"
            )));
        }
        Ok(self)
    }

    /// A positive pair of the lexicographic cone on which the nonzero entry
    /// `B[i][j]` with `(i, j) != (0, 0)` forces a negative coordinate: the
    /// free coordinate is scaled far enough against the fixed offset.
    fn lex_positivity_witness(&self, i: usize, j: usize) -> (Element, Element) {
        let e0 = self.domain.basis_vector(0);
        let (offset, slope, free_into_left, free_index) = if i >= 1 {
            (&self.tensor[0][j], &self.tensor[i][j], true, i)
        } else {
            (&self.tensor[0][0], &self.tensor[0][j], false, j)
        };
        let c = slope
            .coords()
            .iter()
            .position(|v| !v.is_zero())
            .expect("offending entry is nonzero");
        let slope_c = &slope.coords()[c];
        let offset_c = &offset.coords()[c];
        let magnitude = (Rational::one() + offset_c.abs()) / slope_c.abs();
        let t = if slope_c.is_positive() {
            -magnitude
        } else {
            magnitude
        };
        let shifted = &e0 + &self.domain.basis_vector(free_index).scale(&t);
        if free_into_left {
            (shifted, self.domain.basis_vector(j))
        } else {
            (e0, shifted)
        }
    }

    /// Stacked matrix of the map `f -> (<f, e_j>)_j`; its kernel is the
    /// radical, which equals the neutral part.
    fn radical_matrix(&self) -> RatMatrix {
        let n = self.domain.dim();
        let m = self.codomain.dim();
        let mut rows = Vec::with_capacity(n * m);
        for j in 0..n {
            for c in 0..m {
                let row: Vec<Rational> = (0..n)
                    .map(|i| self.tensor[i][j].coords()[c].clone())
                    .collect();
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return RatMatrix::zero(0, n);
        }
        RatMatrix::from_rows(rows).expect("stacked rows share length")
    }

    /// Canonical basis of the neutral part, computed exactly as the kernel
    /// of the stacked radical map. Requires a verified product: the
    /// identity `{f : <f,f> = 0} = {f : <f,g> = 0 for all g}` depends on
    /// the axioms.
    pub fn neutral_basis(&self) -> Result<NeutralPart> {
        if !self.verified {
            return Err(Error::UnverifiedProduct);
        }
        let basis = self
            .radical_matrix()
            .kernel_basis()
            .into_iter()
            .map(|coords| self.domain.element(coords).expect("kernel vector length"))
            .collect();
        Ok(NeutralPart { basis })
    }

    pub fn is_definite(&self) -> Result<bool> {
        Ok(self.neutral_basis()?.dim() == 0)
    }

    /// Quotient by the neutral part: representatives are the standard basis
    /// vectors outside the neutral support, in index order, and the induced
    /// tensor is the restriction of `B` to those indices. The induced
    /// product always verifies and is definite.
    pub fn quotient(&self) -> Result<QuotientSpace> {
        let neutral = self.neutral_basis()?;
        let n = self.domain.dim();
        let mut in_support = vec![false; n];
        for b in &neutral.basis {
            for (i, c) in b.coords().iter().enumerate() {
                if !c.is_zero() {
                    in_support[i] = true;
                }
            }
        }
        let complement_indices: Vec<usize> = (0..n).filter(|&i| !in_support[i]).collect();
        let q_space = match self.domain.order() {
            OrderKind::Coordinatewise => LatticeSpace::coordinatewise(complement_indices.len()),
            OrderKind::Lexicographic => LatticeSpace::lexicographic(complement_indices.len()),
        };
        let tensor: Vec<Vec<Element>> = complement_indices
            .iter()
            .map(|&i| {
                complement_indices
                    .iter()
                    .map(|&j| self.tensor[i][j].clone())
                    .collect()
            })
            .collect();
        let mut induced = OrthoProduct::new(q_space, self.codomain, tensor)?;
        let report = induced.verify()?;
        assert!(
            report.all_ok() && induced.is_definite()?,
            "quotient by the neutral part must be a definite orthosymmetric space"
        );
        let complement_basis = complement_indices
            .iter()
            .map(|&i| self.domain.basis_vector(i))
            .collect();
        Ok(QuotientSpace {
            parent: self.clone(),
            complement_indices,
            complement_basis,
            induced,
        })
    }
}
