//! Regular operators between coordinatewise lattice spaces: positivity,
//! multiplication operators, Riesz–Kantorovich absolute values, adjoints,
//! and the classifier predicates (lattice homomorphism, orthomorphism,
//! interval preserving, normal).
//!
//! Every decision here is exact. The two enumerative procedures
//! (sign-vertex suprema and box-section feasibility) carry explicit bounds
//! and refuse oversized instances instead of truncating them.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::feasibility::box_section_feasible;
use crate::lattice::{Element, LatticeSpace, OrderKind};
use crate::matrix::{solve_linear, LinearSolution, RatMatrix};
use crate::product::{OrthoProduct, QuotientSpace};
use crate::rational::Rational;

/// Default cap on the sign-vertex enumerations behind absolute values.
pub const DEFAULT_ABS_BOUND: usize = 16;
/// Default cap on the feasibility checks behind interval preservation.
pub const DEFAULT_LP_BOUND: usize = 8;

/// A rational matrix acting between coordinatewise lattice spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularOperator {
    domain: LatticeSpace,
    codomain: LatticeSpace,
    matrix: RatMatrix,
}

impl RegularOperator {
    pub fn new(domain: LatticeSpace, codomain: LatticeSpace, matrix: RatMatrix) -> Result<Self> {
        if domain.order() != OrderKind::Coordinatewise
            || codomain.order() != OrderKind::Coordinatewise
        {
            return Err(Error::Unsupported(
                "regular operators are supported between coordinatewise spaces only".into(),
            ));
        }
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(Error::DimensionMismatch {
                context: "operator matrix shape",
                expected: codomain.dim() * domain.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(RegularOperator {
            domain,
            codomain,
            matrix,
        })
    }

    /// Coordinatewise spaces inferred from the matrix shape.
    pub fn from_matrix(matrix: RatMatrix) -> Self {
        let domain = LatticeSpace::coordinatewise(matrix.cols());
        let codomain = LatticeSpace::coordinatewise(matrix.rows());
        RegularOperator {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn domain(&self) -> LatticeSpace {
        self.domain
    }

    pub fn codomain(&self) -> LatticeSpace {
        self.codomain
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn is_square(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn apply(&self, f: &Element) -> Result<Element> {
        if f.space() != self.domain {
            return Err(Error::DimensionMismatch {
                context: "operator application",
                expected: self.domain.dim(),
                found: f.space().dim(),
            });
        }
        self.codomain.element(self.matrix.mul_vec(f.coords())?)
    }

    /// Positive means entrywise nonnegative: the coordinatewise cones are
    /// generated by the standard bases.
    pub fn is_positive(&self) -> bool {
        self.matrix.is_nonnegative()
    }

    pub fn transpose(&self) -> Self {
        RegularOperator {
            domain: self.codomain,
            codomain: self.domain,
            matrix: self.matrix.transpose(),
        }
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.codomain != self.domain {
            return Err(Error::DimensionMismatch {
                context: "operator composition",
                expected: self.domain.dim(),
                found: inner.codomain.dim(),
            });
        }
        Ok(RegularOperator {
            domain: inner.domain,
            codomain: self.codomain,
            matrix: self.matrix.matmul(&inner.matrix)?,
        })
    }

    /// Riesz–Kantorovich absolute value `|T|` with the default bound.
    pub fn rk_abs(&self) -> Result<Self> {
        self.rk_abs_bounded(DEFAULT_ABS_BOUND)
    }

    /// `|T|` by brute force: for each generator `e_j` the supremum of
    /// `{|Th| : |h| <= e_j}` over the sign vertices of the order interval,
    /// assembled column by column. The result must equal the entrywise
    /// absolute matrix; both are computed and cross-asserted.
    pub fn rk_abs_bounded(&self, bound: usize) -> Result<Self> {
        if self.domain.dim() > bound {
            return Err(Error::BoundExceeded {
                what: "rk_abs sign-vertex enumeration",
                dim: self.domain.dim(),
                bound,
            });
        }
        let n = self.domain.dim();
        let m = self.codomain.dim();
        let mut abs = RatMatrix::zero(m, n);
        for j in 0..n {
            let generator = self.domain.basis_vector(j);
            let column = interval_abs_sup(self, &generator)?;
            for (r, v) in column.coords().iter().enumerate() {
                abs.set(r, j, v.clone());
            }
        }
        assert_eq!(
            abs,
            self.matrix.abs_entries(),
            "sign-vertex supremum must agree with the entrywise absolute value"
        );
        Ok(RegularOperator {
            domain: self.domain,
            codomain: self.codomain,
            matrix: abs,
        })
    }

    /// Structural lattice-homomorphism test: entrywise nonnegative with at
    /// most one nonzero entry per row. Cross-checked against the
    /// definitional oracle `|Tf| = T|f|` on a deterministic family of sign
    /// patterns that is exhaustive for the criterion's failure modes.
    pub fn is_lattice_hom(&self) -> bool {
        let structural = self.is_positive()
            && (0..self.matrix.rows())
                .all(|r| self.matrix.row(r).iter().filter(|e| !e.is_zero()).count() <= 1);
        let oracle = self
            .sign_pattern_family()
            .iter()
            .all(|f| self.preserves_abs(f));
        assert_eq!(
            structural, oracle,
            "row criterion must match the |Tf| = T|f| oracle"
        );
        structural
    }

    /// `|Tf| = T|f|` for one vector.
    fn preserves_abs(&self, f: &Element) -> bool {
        let tf = self.apply(f).expect("family vector lives in the domain");
        let t_abs_f = self
            .apply(&f.abs())
            .expect("family vector lives in the domain");
        tf.abs() == t_abs_f
    }

    /// Basis vectors plus all signed pairs `e_j - e_k`: enough to expose a
    /// negative entry or a row with two nonzero entries.
    fn sign_pattern_family(&self) -> Vec<Element> {
        let n = self.domain.dim();
        let mut family = Vec::new();
        for j in 0..n {
            family.push(self.domain.basis_vector(j));
        }
        for j in 0..n {
            for k in (j + 1)..n {
                family.push(&self.domain.basis_vector(j) - &self.domain.basis_vector(k));
            }
        }
        family
    }

    /// Orthomorphisms of a coordinatewise space are exactly the diagonal
    /// matrices. Cross-checked definitionally: both entrywise parts of the
    /// decomposition must send standard disjoint pairs to disjoint pairs.
    pub fn is_orthomorphism(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.domain.dim();
        let structural = (0..n).all(|r| (0..n).all(|c| r == c || self.matrix.get(r, c).is_zero()));
        let mut definitional = true;
        'outer: for j in 0..n {
            let col_pos: Vec<Rational> = (0..n)
                .map(|r| {
                    let e = self.matrix.get(r, j);
                    if e.is_positive() {
                        e.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            let col_neg: Vec<Rational> = (0..n)
                .map(|r| {
                    let e = self.matrix.get(r, j);
                    if e.is_negative() {
                        -e.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            for i in 0..n {
                if i == j {
                    continue;
                }
                // e_i ∧ T± e_j must vanish for the disjoint pair (e_i, e_j)
                if !col_pos[i].is_zero() || !col_neg[i].is_zero() {
                    definitional = false;
                    break 'outer;
                }
            }
        }
        assert_eq!(
            structural, definitional,
            "diagonal criterion must match the disjointness oracle"
        );
        structural
    }

    /// A band of a coordinatewise space is the span of a set of standard
    /// basis vectors, so the kernel is a band iff it is spanned by the zero
    /// columns.
    pub fn is_normal(&self) -> bool {
        let kernel_dim = self.matrix.kernel_basis().len();
        let zero_columns = (0..self.matrix.cols())
            .filter(|&c| (0..self.matrix.rows()).all(|r| self.matrix.get(r, c).is_zero()))
            .count();
        kernel_dim == zero_columns
    }

    /// Interval preservation `T[0, f] = [0, Tf]` with the default bound.
    pub fn is_interval_preserving(&self) -> Result<bool> {
        self.is_interval_preserving_bounded(DEFAULT_LP_BOUND)
    }

    /// Decided by an exact feasibility oracle. For each generator `f` from
    /// a deterministic positive family (standard basis vectors and the
    /// all-ones vector) and each vertex `g` of the box `[0, Tf]`, checks
    /// whether some `h` in `[0, f]` has `Th = g`. Since `T[0, f]` is convex
    /// and contains the vertices iff it contains the box, vertex checking
    /// is exact.
    pub fn is_interval_preserving_bounded(&self, bound: usize) -> Result<bool> {
        if !self.is_positive() {
            return Err(Error::Unsupported(
                "interval preservation is defined for positive operators".into(),
            ));
        }
        let dim = self.domain.dim().max(self.codomain.dim());
        if dim > bound {
            return Err(Error::BoundExceeded {
                what: "interval-preservation feasibility check",
                dim,
                bound,
            });
        }
        let n = self.domain.dim();
        let mut generators: Vec<Element> = (0..n).map(|j| self.domain.basis_vector(j)).collect();
        generators.push(
            self.domain
                .element(vec![Rational::from_integer(1.into()); n])?,
        );
        for f in &generators {
            let tf = self.apply(f)?;
            let support: Vec<usize> = tf
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, _)| i)
                .collect();
            for mask in 0u64..(1u64 << support.len()) {
                let mut g = vec![Rational::zero(); self.codomain.dim()];
                for (bit, &idx) in support.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        g[idx] = tf.coords()[idx].clone();
                    }
                }
                if !box_section_feasible(&self.matrix, &g, f.coords())? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl std::fmt::Display for RegularOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// Supremum in the codomain of `{|Th| : h a sign vertex of [-g, g]}` for a
/// positive `g`; `2^k` vertices for a support of size `k`.
pub fn interval_abs_sup(t: &RegularOperator, g: &Element) -> Result<Element> {
    if g.space() != t.domain() {
        return Err(Error::DimensionMismatch {
            context: "interval generator",
            expected: t.domain().dim(),
            found: g.space().dim(),
        });
    }
    if !g.is_positive() {
        return Err(Error::Unsupported(
            "order-interval supremum needs a positive generator".into(),
        ));
    }
    let support: Vec<usize> = g
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, _)| i)
        .collect();
    if support.len() > DEFAULT_ABS_BOUND {
        return Err(Error::BoundExceeded {
            what: "sign-vertex enumeration",
            dim: support.len(),
            bound: DEFAULT_ABS_BOUND,
        });
    }
    let mut sup = t.apply(&t.domain().zero())?.abs();
    for mask in 0u64..(1u64 << support.len()) {
        let mut h = g.clone().into_coords();
        for (bit, &idx) in support.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                h[idx] = -h[idx].clone();
            }
        }
        let image = t.apply(&t.domain().element(h)?)?.abs();
        sup = sup.sup(&image)?;
    }
    Ok(sup)
}

/// The multiplication operator `Φ_f : g -> <f, g>`; its matrix column `j`
/// is `<f, e_j>`. Requires a verified product on a coordinatewise domain.
pub fn phi(p: &OrthoProduct, f: &Element) -> Result<RegularOperator> {
    if !p.is_verified() {
        return Err(Error::UnverifiedProduct);
    }
    if p.domain().order() != OrderKind::Coordinatewise {
        return Err(Error::Unsupported(
            "multiplication operators are realized on coordinatewise domains only".into(),
        ));
    }
    let n = p.domain().dim();
    let m = p.codomain().dim();
    let mut matrix = RatMatrix::zero(m, n);
    for j in 0..n {
        let column = p.eval(f, &p.domain().basis_vector(j))?;
        for (r, v) in column.coords().iter().enumerate() {
            matrix.set(r, j, v.clone());
        }
    }
    RegularOperator::new(p.domain(), p.codomain(), matrix)
}

/// `|Φ_f| = Φ_|f|`: the Riesz–Kantorovich absolute value of a
/// multiplication operator is the multiplication operator of the absolute
/// value. Both sides are computed independently and compared exactly.
pub fn abs_mult_check(p: &OrthoProduct, f: &Element) -> Result<bool> {
    let lhs = phi(p, f)?.rk_abs()?;
    let rhs = phi(p, &f.abs())?;
    Ok(lhs.matrix() == rhs.matrix())
}

/// Solution set of the adjoint equation `<Tf, g> = <f, Sg>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdjointResult {
    NoAdjoint,
    Unique(RegularOperator),
    Family {
        particular: RegularOperator,
        homogeneous_basis: Vec<RegularOperator>,
    },
}

impl AdjointResult {
    pub fn kind(&self) -> &'static str {
        match self {
            AdjointResult::NoAdjoint => "no-adjoint",
            AdjointResult::Unique(_) => "unique",
            AdjointResult::Family { .. } => "family",
        }
    }
}

/// Solves for every `S : M -> L` with `<Tf, g>_M = <f, Sg>_L`, set up as an
/// exact linear system over the entries of `S` from all basis pairs and all
/// codomain coordinates. When the product on `L` is definite the solution
/// set cannot be a family: the homogeneous solutions are exactly the
/// operators mapping into the neutral part of `L`.
pub fn adjoint(pl: &OrthoProduct, pm: &OrthoProduct, t: &RegularOperator) -> Result<AdjointResult> {
    if !pl.is_verified() || !pm.is_verified() {
        return Err(Error::UnverifiedProduct);
    }
    if t.domain() != pl.domain() {
        return Err(Error::DimensionMismatch {
            context: "operator domain vs product on L",
            expected: pl.domain().dim(),
            found: t.domain().dim(),
        });
    }
    if t.codomain() != pm.domain() {
        return Err(Error::DimensionMismatch {
            context: "operator codomain vs product on M",
            expected: pm.domain().dim(),
            found: t.codomain().dim(),
        });
    }
    if pl.codomain() != pm.codomain() {
        return Err(Error::Unsupported(
            "both products must take values in the same codomain lattice".into(),
        ));
    }
    let n = pl.domain().dim();
    let m = pm.domain().dim();
    let q = pl.codomain().dim();

    // unknown S[a][b] at index a*m + b; one equation per (i, j, c)
    let mut rows = Vec::with_capacity(n * m * q);
    let mut rhs = Vec::with_capacity(n * m * q);
    for i in 0..n {
        for j in 0..m {
            // <T e_i, e_j>_M
            let te_i = t.apply(&pl.domain().basis_vector(i))?;
            let lhs_value = pm.eval(&te_i, &pm.domain().basis_vector(j))?;
            for c in 0..q {
                let mut row = vec![Rational::zero(); n * m];
                for a in 0..n {
                    // coefficient of S[a][j] in <e_i, S e_j>_L coordinate c
                    row[a * m + j] = pl.tensor_entry(i, a).coords()[c].clone();
                }
                rows.push(row);
                rhs.push(lhs_value.coords()[c].clone());
            }
        }
    }
    let system = RatMatrix::from_rows(rows)?;
    let to_operator = |flat: Vec<Rational>| -> Result<RegularOperator> {
        let matrix = RatMatrix::new(n, m, flat)?;
        RegularOperator::new(pm.domain(), pl.domain(), matrix)
    };
    match solve_linear(&system, &rhs)? {
        LinearSolution::NoSolution => Ok(AdjointResult::NoAdjoint),
        LinearSolution::Unique(x) => Ok(AdjointResult::Unique(to_operator(x)?)),
        LinearSolution::Affine { particular, basis } => {
            let homogeneous_basis = basis
                .into_iter()
                .map(to_operator)
                .collect::<Result<Vec<_>>>()?;
            Ok(AdjointResult::Family {
                particular: to_operator(particular)?,
                homogeneous_basis,
            })
        }
    }
}

/// Both sides of the lattice-homomorphism characterization: whether `T` is
/// a lattice homomorphism and whether `T*T` is an orthomorphism. The
/// characterization says the flags agree; this reports, the suites assert.
pub fn check_riesz(
    pl: &OrthoProduct,
    pm: &OrthoProduct,
    t: &RegularOperator,
) -> Result<(bool, bool)> {
    let star = match adjoint(pl, pm, t)? {
        AdjointResult::Unique(s) => s,
        AdjointResult::NoAdjoint => {
            return Err(Error::Unsupported("operator has no adjoint".into()))
        }
        AdjointResult::Family { .. } => {
            return Err(Error::Unsupported("adjoint is not unique".into()))
        }
    };
    let star_t = star.compose(t)?;
    Ok((t.is_lattice_hom(), star_t.is_orthomorphism()))
}

/// Classifier flags for one operator. Flags whose definition does not apply
/// are reported as `false` (orthomorphism for non-square operators,
/// interval preservation for non-positive ones); `selfadjoint` is set only
/// when products were supplied and the adjoint equation has a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub positive: bool,
    pub lattice_hom: bool,
    pub orthomorphism: bool,
    pub interval_preserving: bool,
    pub normal: bool,
    pub selfadjoint: Option<bool>,
}

/// Runs every classifier against one operator; products, when supplied,
/// enable the adjoint-based flags.
pub fn classify(
    t: &RegularOperator,
    products: Option<(&OrthoProduct, &OrthoProduct)>,
) -> Result<ClassificationReport> {
    let positive = t.is_positive();
    let interval_preserving = if positive {
        t.is_interval_preserving()?
    } else {
        false
    };
    let selfadjoint = match products {
        Some((pl, pm)) if t.is_square() => match adjoint(pl, pm, t)? {
            AdjointResult::NoAdjoint => None,
            _ => {
                // T is its own adjoint iff <T e_i, e_j> = <e_i, T e_j>
                let n = t.domain().dim();
                let mut ok = true;
                'outer: for i in 0..n {
                    for j in 0..n {
                        let ei = t.domain().basis_vector(i);
                        let ej = t.domain().basis_vector(j);
                        let lhs = pm.eval(&t.apply(&ei)?, &ej)?;
                        let rhs = pl.eval(&ei, &t.apply(&ej)?)?;
                        if lhs != rhs {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
                Some(ok)
            }
        },
        _ => None,
    };
    Ok(ClassificationReport {
        positive,
        lattice_hom: t.is_lattice_hom(),
        orthomorphism: t.is_orthomorphism(),
        interval_preserving,
        normal: t.is_normal(),
        selfadjoint,
    })
}

/// Restriction of a square operator to a subset of coordinates, used to
/// push operators down to the quotient by the neutral part. The caller is
/// responsible for the operator leaving the neutral span invariant.
pub fn restrict_to_indices(t: &RegularOperator, indices: &[usize]) -> Result<RegularOperator> {
    if !t.is_square() {
        return Err(Error::Unsupported(
            "only square operators can be restricted to quotient coordinates".into(),
        ));
    }
    let rows = indices
        .iter()
        .map(|&r| {
            indices
                .iter()
                .map(|&c| t.matrix().get(r, c).clone())
                .collect()
        })
        .collect();
    let space = LatticeSpace::coordinatewise(indices.len());
    RegularOperator::new(space, space, RatMatrix::from_rows(rows)?)
}

/// Convenience wrapper: restriction along a computed quotient.
pub fn restrict_to_quotient(q: &QuotientSpace, t: &RegularOperator) -> Result<RegularOperator> {
    restrict_to_indices(t, &q.complement_indices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn euclidean(n: usize) -> OrthoProduct {
        let domain = LatticeSpace::coordinatewise(n);
        let codomain = LatticeSpace::coordinatewise(1);
        let weights = (0..n)
            .map(|_| codomain.element(vec![rat_int(1)]).unwrap())
            .collect();
        OrthoProduct::diagonal(domain, codomain, weights)
            .unwrap()
            .into_verified()
            .unwrap()
    }

    fn op(rows: &[&[i64]]) -> RegularOperator {
        RegularOperator::from_matrix(RatMatrix::from_i64_rows(rows))
    }

    #[test]
    fn apply_and_positivity() {
        let t = op(&[&[1, -1], &[2, 3]]);
        let f = t.domain().element_i64(&[1, 1]).unwrap();
        assert_eq!(
            t.apply(&f).unwrap(),
            t.codomain().element_i64(&[0, 5]).unwrap()
        );
        assert!(!t.is_positive());
        assert!(op(&[&[0, 2], &[1, 0]]).is_positive());
    }

    #[test]
    fn operators_refuse_lexicographic_spaces() {
        let lex = LatticeSpace::lexicographic(2);
        let coord = LatticeSpace::coordinatewise(2);
        let m = RatMatrix::identity(2);
        assert!(RegularOperator::new(lex, coord, m.clone()).is_err());
        assert!(RegularOperator::new(coord, coord, m).is_ok());
    }

    #[test]
    fn phi_is_the_row_functional_for_dot_products() {
        let p = euclidean(2);
        let f = p.domain().element_i64(&[1, 2]).unwrap();
        let t = phi(&p, &f).unwrap();
        assert_eq!(t.matrix(), &RatMatrix::from_i64_rows(&[&[1, 2]]));
    }

    #[test]
    fn phi_of_zero_is_the_zero_operator() {
        let p = euclidean(3);
        let t = phi(&p, &p.domain().zero()).unwrap();
        assert!(t.matrix().is_zero());
    }

    #[test]
    fn rk_abs_matches_entrywise_absolute() {
        let t = op(&[&[1, -1], &[2, 3]]);
        let a = t.rk_abs().unwrap();
        assert_eq!(a.matrix(), &RatMatrix::from_i64_rows(&[&[1, 1], &[2, 3]]));

        let z = op(&[&[0, 0], &[0, 0]]);
        assert!(z.rk_abs().unwrap().matrix().is_zero());
    }

    #[test]
    fn rk_abs_refuses_oversized_domains() {
        let t = RegularOperator::from_matrix(RatMatrix::zero(1, 20));
        assert!(matches!(t.rk_abs(), Err(Error::BoundExceeded { .. })));
        assert!(t.rk_abs_bounded(20).is_ok());
    }

    #[test]
    fn interval_abs_sup_over_full_interval() {
        // |T| g = sup {|Th| : |h| <= g} at a non-basis generator
        let t = op(&[&[1, -1], &[2, 3]]);
        let g = t.domain().element_i64(&[1, 1]).unwrap();
        let sup = interval_abs_sup(&t, &g).unwrap();
        assert_eq!(sup, t.rk_abs().unwrap().apply(&g).unwrap());
        assert_eq!(sup, t.codomain().element_i64(&[2, 5]).unwrap());
    }

    #[test]
    fn abs_mult_check_on_dot_products() {
        let p = euclidean(3);
        let f = p.domain().element_i64(&[1, -2, 3]).unwrap();
        assert!(abs_mult_check(&p, &f).unwrap());
        assert!(abs_mult_check(&p, &p.domain().zero()).unwrap());
    }

    #[test]
    fn abs_mult_check_on_a_neutral_element_is_trivially_true() {
        let domain = LatticeSpace::coordinatewise(2);
        let codomain = LatticeSpace::coordinatewise(1);
        let p = OrthoProduct::diagonal(
            domain,
            codomain,
            vec![codomain.element(vec![rat_int(1)]).unwrap(), codomain.zero()],
        )
        .unwrap()
        .into_verified()
        .unwrap();
        let f = domain.basis_vector(1).scale(&crate::rational::rat(-7, 3));
        assert!(abs_mult_check(&p, &f).unwrap());
        assert!(phi(&p, &f).unwrap().matrix().is_zero());
        assert!(phi(&p, &f.abs()).unwrap().matrix().is_zero());
    }

    #[test]
    fn adjoint_under_dot_products_is_the_transpose() {
        let p2 = euclidean(2);
        let t = op(&[&[1, 2], &[3, 4]]);
        match adjoint(&p2, &p2, &t).unwrap() {
            AdjointResult::Unique(s) => {
                assert_eq!(s.matrix(), &t.matrix().transpose());
            }
            other => panic!("expected a unique adjoint, got {}", other.kind()),
        }
    }

    #[test]
    fn selfadjoint_matrix_that_is_no_orthomorphism() {
        let p2 = euclidean(2);
        let t = op(&[&[1, 2], &[2, 0]]);
        match adjoint(&p2, &p2, &t).unwrap() {
            AdjointResult::Unique(s) => assert_eq!(s.matrix(), t.matrix()),
            other => panic!("expected a unique adjoint, got {}", other.kind()),
        }
        assert!(!t.is_orthomorphism());
        let report = classify(&t, Some((&p2, &p2))).unwrap();
        assert_eq!(report.selfadjoint, Some(true));
        assert!(!report.orthomorphism);
    }

    #[test]
    fn lattice_hom_examples() {
        assert!(op(&[&[1, 0], &[0, 1]]).is_lattice_hom());
        let fanout = op(&[&[0, 0, 0], &[0, 1, 0], &[0, 1, 0]]);
        assert!(fanout.is_lattice_hom());
        let star = op(&[&[0, 0, 0], &[0, 1, 1], &[0, 0, 0]]);
        assert!(!star.is_lattice_hom());
        assert!(!op(&[&[1, -1]]).is_lattice_hom());
    }

    #[test]
    fn orthomorphism_examples() {
        assert!(op(&[&[1, 0], &[0, 2]]).is_orthomorphism());
        assert!(!op(&[&[1, 2], &[2, 0]]).is_orthomorphism());
        assert!(op(&[&[0, 0], &[0, 0]]).is_orthomorphism());
        assert!(!op(&[&[1, 0, 0], &[0, 1, 0]]).is_orthomorphism());
    }

    #[test]
    fn interval_preserving_examples() {
        assert!(op(&[&[1, 0], &[0, 1]]).is_interval_preserving().unwrap());
        assert!(op(&[&[1, 0], &[0, 2]]).is_interval_preserving().unwrap());
        // (1, 0) lies in [0, T(1,1)] = [0, (1,1)] but Th = (h1, h1)
        assert!(!op(&[&[1, 0], &[1, 0]]).is_interval_preserving().unwrap());
        // a row functional spreads mass and stays interval preserving
        assert!(op(&[&[1, 1]]).is_interval_preserving().unwrap());
        assert!(op(&[&[1, -1], &[0, 1]]).is_interval_preserving().is_err());
    }

    #[test]
    fn normality_examples() {
        assert!(op(&[&[1, 0], &[0, 0]]).is_normal());
        assert!(!op(&[&[1, -1]]).is_normal());
        assert!(op(&[&[2, 1], &[1, 1]]).is_normal());
    }

    #[test]
    fn check_riesz_examples() {
        let p2 = euclidean(2);
        let t = op(&[&[1, 2], &[2, 0]]);
        assert_eq!(check_riesz(&p2, &p2, &t).unwrap(), (false, false));

        let perm = op(&[&[0, 1], &[1, 0]]);
        assert_eq!(check_riesz(&p2, &p2, &perm).unwrap(), (true, true));

        let p3 = euclidean(3);
        let fanout = op(&[&[0, 0, 0], &[0, 1, 0], &[0, 1, 0]]);
        assert_eq!(check_riesz(&p3, &p3, &fanout).unwrap(), (true, true));
        // T*T = diag(0, 2, 0)
        let star = fanout.transpose();
        assert_eq!(
            star.compose(&fanout).unwrap().matrix(),
            &RatMatrix::from_i64_rows(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, 0]])
        );
    }

    #[test]
    fn classification_report_for_a_diagonal_operator() {
        let p2 = euclidean(2);
        let d = op(&[&[1, 0], &[0, 2]]);
        let report = classify(&d, Some((&p2, &p2))).unwrap();
        assert!(report.positive);
        assert!(report.lattice_hom);
        assert!(report.orthomorphism);
        assert!(report.interval_preserving);
        assert!(report.normal);
        assert_eq!(report.selfadjoint, Some(true));
    }

    #[test]
    fn restriction_to_indices() {
        let t = op(&[&[1, 0, 5], &[0, 7, 0], &[3, 0, 9]]);
        let r = restrict_to_indices(&t, &[0, 2]).unwrap();
        assert_eq!(r.matrix(), &RatMatrix::from_i64_rows(&[&[1, 5], &[3, 9]]));
    }

    mod properties {
        use super::*;
        use crate::rational::{rat, Rational};
        use proptest::prelude::*;

        fn small_operator() -> impl Strategy<Value = RegularOperator> {
            (1usize..4, 1usize..4).prop_flat_map(|(m, n)| {
                proptest::collection::vec((-4i64..=4, 1i64..=3), m * n).prop_map(move |xs| {
                    let entries = xs.into_iter().map(|(a, b)| rat(a, b)).collect();
                    RegularOperator::from_matrix(RatMatrix::new(m, n, entries).unwrap())
                })
            })
        }

        fn diag_weights() -> impl Strategy<Value = Vec<Rational>> {
            proptest::collection::vec(0i64..=4, 1..4)
                .prop_map(|ws| ws.into_iter().map(rat_int).collect())
        }

        fn diag(weights: &[Rational]) -> OrthoProduct {
            let domain = LatticeSpace::coordinatewise(weights.len());
            let codomain = LatticeSpace::coordinatewise(1);
            let ws = weights
                .iter()
                .map(|w| codomain.element(vec![w.clone()]).unwrap())
                .collect();
            OrthoProduct::diagonal(domain, codomain, ws)
                .unwrap()
                .into_verified()
                .unwrap()
        }

        proptest! {
            // the absolute value really is the interval supremum, at
            // arbitrary positive generators rather than basis vectors
            #[test]
            fn interval_supremum_is_the_absolute_value(
                t in small_operator(),
                raw in proptest::collection::vec(0i64..=3, 1..4),
            ) {
                let n = t.domain().dim();
                let coords = (0..n)
                    .map(|i| rat_int(raw.get(i).copied().unwrap_or(1)))
                    .collect();
                let g = t.domain().element(coords).unwrap();
                let sup = interval_abs_sup(&t, &g).unwrap();
                prop_assert_eq!(sup, t.rk_abs().unwrap().apply(&g).unwrap());
            }

            // every reported adjoint satisfies the defining equations on
            // all basis pairs, and definite products never yield families
            #[test]
            fn adjoint_solutions_satisfy_the_equations(
                wl in diag_weights(),
                wm in diag_weights(),
                raw in proptest::collection::vec(-3i64..=3, 1..10),
            ) {
                let pl = diag(&wl);
                let pm = diag(&wm);
                let n = pl.domain().dim();
                let m = pm.domain().dim();
                let entries = (0..m * n)
                    .map(|i| rat_int(raw.get(i % raw.len()).copied().unwrap_or(0)))
                    .collect();
                let t = RegularOperator::new(
                    pl.domain(),
                    pm.domain(),
                    RatMatrix::new(m, n, entries).unwrap(),
                )
                .unwrap();
                let check_equations = |s: &RegularOperator| -> bool {
                    (0..n).all(|i| {
                        (0..m).all(|j| {
                            let ei = pl.domain().basis_vector(i);
                            let ej = pm.domain().basis_vector(j);
                            let lhs = pm.eval(&t.apply(&ei).unwrap(), &ej).unwrap();
                            let rhs = pl.eval(&ei, &s.apply(&ej).unwrap()).unwrap();
                            lhs == rhs
                        })
                    })
                };
                let definite = pl.is_definite().unwrap();
                match adjoint(&pl, &pm, &t).unwrap() {
                    AdjointResult::NoAdjoint => {}
                    AdjointResult::Unique(s) => prop_assert!(check_equations(&s)),
                    AdjointResult::Family { particular, homogeneous_basis } => {
                        prop_assert!(!definite, "definite products admit no families");
                        prop_assert!(check_equations(&particular));
                        let mut member = particular.matrix().clone();
                        for (idx, h) in homogeneous_basis.iter().enumerate() {
                            let coeff = rat_int(idx as i64 + 2);
                            let scaled: Vec<Rational> =
                                h.matrix().entries().map(|e| e * &coeff).collect();
                            member = member
                                .add(&RatMatrix::new(n, m, scaled).unwrap())
                                .unwrap();
                        }
                        let combo = RegularOperator::new(
                            pm.domain(),
                            pl.domain(),
                            member,
                        )
                        .unwrap();
                        prop_assert!(check_equations(&combo));
                    }
                }
            }
        }
    }
}
