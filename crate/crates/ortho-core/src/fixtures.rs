//! Canonical instances — the worked examples behind the golden tests —
//! plus the deterministic random generator feeding the property suites.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{InstanceFile, OperatorDef, ProductDef, SpaceDef};
use crate::lattice::{Element, LatticeSpace};
use crate::matrix::RatMatrix;
use crate::operator::{phi, RegularOperator};
use crate::product::OrthoProduct;
use crate::rational::{parse_rational, rat, rat_int, Rational};

fn scalar_codomain() -> LatticeSpace {
    LatticeSpace::coordinatewise(1)
}

fn scalar(v: Rational) -> Element {
    scalar_codomain().element(vec![v]).expect("scalar element")
}

/// The dot product on coordinatewise `Q^n`.
pub fn euclidean(n: usize) -> OrthoProduct {
    let domain = LatticeSpace::coordinatewise(n);
    let weights = (0..n).map(|_| scalar(rat_int(1))).collect();
    OrthoProduct::diagonal(domain, scalar_codomain(), weights)
        .and_then(OrthoProduct::into_verified)
        .expect("dot product satisfies the axioms")
}

/// `<f, g> = f_0 g_0` on the lexicographic plane; non-Archimedean domain,
/// neutral part of dimension one.
pub fn lex2() -> OrthoProduct {
    let domain = LatticeSpace::lexicographic(2);
    let weights = vec![scalar(rat_int(1)), scalar(Rational::zero())];
    OrthoProduct::diagonal(domain, scalar_codomain(), weights)
        .and_then(OrthoProduct::into_verified)
        .expect("lexicographic corner product satisfies the axioms")
}

/// Scalar-valued weighted pointwise product `<f, g> = Σ w_i f_i g_i` on
/// coordinatewise `Q^n`; zero weights create a nontrivial neutral part.
pub fn diag_product(weights: &[Rational]) -> Result<OrthoProduct> {
    for w in weights {
        if w < &Rational::zero() {
            return Err(Error::Unsupported(
                "diagonal weights must be nonnegative".into(),
            ));
        }
    }
    let domain = LatticeSpace::coordinatewise(weights.len());
    let ws = weights.iter().cloned().map(scalar).collect();
    OrthoProduct::diagonal(domain, scalar_codomain(), ws)?.into_verified()
}

/// The pairing-by-position product and its difference operator on `Q^n`,
/// `n` even. With `u` the indicator of odd positions and `v` of even ones
/// (1-based), the product is `<f, g> = u f g + S(v f g)` for the forward
/// shift `(S x)(k) = x(k+1)` truncated at `n`, which lands both `f_k g_k`
/// and `f_{k+1} g_{k+1}` on each odd coordinate `k`. The operator
/// `T = Φ_{u-v}` then acts as `(Tf)(k) = f(k) - f(k+1)` on odd `k` and `0`
/// on even `k`, and its absolute value is `Φ_{u+v}`.
pub struct KaplanFixture {
    pub product: OrthoProduct,
    pub t: RegularOperator,
    pub u: Element,
    pub v: Element,
}

pub fn kaplan(n: usize) -> Result<KaplanFixture> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "the pairing fixture needs a positive even dimension, got {n}"
        )));
    }
    let domain = LatticeSpace::coordinatewise(n);
    let codomain = LatticeSpace::coordinatewise(n);
    let weights: Vec<Element> = (0..n)
        .map(|i| codomain.basis_vector(if i % 2 == 0 { i } else { i - 1 }))
        .collect();
    let product = OrthoProduct::diagonal(domain, codomain, weights)?.into_verified()?;
    let u = domain.element(
        (0..n)
            .map(|i| {
                if i % 2 == 0 {
                    rat_int(1)
                } else {
                    Rational::zero()
                }
            })
            .collect(),
    )?;
    let v = domain.element(
        (0..n)
            .map(|i| {
                if i % 2 == 1 {
                    rat_int(1)
                } else {
                    Rational::zero()
                }
            })
            .collect(),
    )?;
    let t = phi(&product, &(&u - &v))?;
    Ok(KaplanFixture { product, t, u, v })
}

/// A product pair and operator for the adjoint solver.
pub struct AdjointFixture {
    pub pl: OrthoProduct,
    pub pm: OrthoProduct,
    pub t: RegularOperator,
}

/// Rank-one operator `Tf = w · (Σ_k f_k)` against the pointwise product
/// `<f, g> = f ∘ g` on `Q^n`. The weight vector holds distinct nonzero
/// rationals of both signs, and the adjoint equation is inconsistent for
/// every `n >= 2`.
pub fn no_adjoint(n: usize) -> Result<AdjointFixture> {
    if n < 2 {
        return Err(Error::Unsupported(
            "the no-adjoint fixture needs dimension at least two".into(),
        ));
    }
    let space = LatticeSpace::coordinatewise(n);
    let weights: Vec<Element> = (0..n).map(|i| space.basis_vector(i)).collect();
    let pointwise = OrthoProduct::diagonal(space, space, weights)?.into_verified()?;
    let w: Vec<Rational> = (0..n)
        .map(|i| {
            if i == 0 {
                rat_int(-1)
            } else {
                rat(i as i64, (n - 1) as i64)
            }
        })
        .collect();
    let rows: Vec<Vec<Rational>> = w.iter().map(|wi| vec![wi.clone(); n]).collect();
    let t = RegularOperator::new(space, space, RatMatrix::from_rows(rows)?)?;
    Ok(AdjointFixture {
        pl: pointwise.clone(),
        pm: pointwise,
        t,
    })
}

/// A degenerate product supported on the first half of the coordinates
/// (the neutral part is the span of the last half) together with the
/// projector onto the first half. Whole families solve the adjoint
/// equation: operators into the neutral span are unconstrained.
pub fn multi_adjoint(n: usize) -> Result<AdjointFixture> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "the multi-adjoint fixture needs a positive even dimension, got {n}"
        )));
    }
    let half = n / 2;
    let weights: Vec<Rational> = (0..n)
        .map(|i| {
            if i < half {
                rat_int(1)
            } else {
                Rational::zero()
            }
        })
        .collect();
    let p = diag_product(&weights)?;
    let space = p.domain();
    let mut m = RatMatrix::zero(n, n);
    for i in 0..half {
        m.set(i, i, rat_int(1));
    }
    let t = RegularOperator::new(space, space, m)?;
    Ok(AdjointFixture {
        pl: p.clone(),
        pm: p,
        t,
    })
}

/// `[[1, 2], [2, 0]]`: selfadjoint under the dot product but not an
/// orthomorphism.
pub fn selfadjoint_2x2() -> RegularOperator {
    RegularOperator::from_matrix(RatMatrix::from_i64_rows(&[&[1, 2], &[2, 0]]))
}

/// Rows `(0,0,0), (0,1,0), (0,1,0)`: a lattice homomorphism whose adjoint
/// (the transpose) is not one.
pub fn latticehom_3x3() -> RegularOperator {
    RegularOperator::from_matrix(RatMatrix::from_i64_rows(&[
        &[0, 0, 0],
        &[0, 1, 0],
        &[0, 1, 0],
    ]))
}

/// Renders a named fixture as an instance file for the CLI.
///
/// Names: `euclidean <n>`, `lex2`, `diag <w1> <w2> ...`, `kaplan <n>`,
/// `no-adjoint <n>`, `multi-adjoint <n>`, `selfadjoint-2x2`,
/// `latticehom-3x3`.
pub fn export_instance(name: &str, args: &[String]) -> Result<InstanceFile> {
    let mut file = InstanceFile::default();
    let dim_arg = |default: usize| -> Result<usize> {
        match args.first() {
            None => Ok(default),
            Some(s) => s
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid dimension {s:?}"))),
        }
    };
    match name {
        "euclidean" => {
            let p = euclidean(dim_arg(3)?);
            file.spaces.insert("L".into(), SpaceDef::of(p.domain()));
            file.spaces.insert("V".into(), SpaceDef::of(p.codomain()));
            file.products.insert("euclidean".into(), ProductDef::of(&p));
        }
        "lex2" => {
            let p = lex2();
            file.spaces.insert("L".into(), SpaceDef::of(p.domain()));
            file.spaces.insert("V".into(), SpaceDef::of(p.codomain()));
            file.products.insert("lex2".into(), ProductDef::of(&p));
        }
        "diag" => {
            if args.is_empty() {
                return Err(Error::Parse(
                    "diag needs at least one weight argument".into(),
                ));
            }
            let weights: Result<Vec<Rational>> = args.iter().map(|s| parse_rational(s)).collect();
            let p = diag_product(&weights?)?;
            file.spaces.insert("L".into(), SpaceDef::of(p.domain()));
            file.products.insert("diag".into(), ProductDef::of(&p));
        }
        "kaplan" => {
            let fx = kaplan(dim_arg(4)?)?;
            file.spaces
                .insert("L".into(), SpaceDef::of(fx.product.domain()));
            file.spaces
                .insert("V".into(), SpaceDef::of(fx.product.codomain()));
            file.products
                .insert("kaplan".into(), ProductDef::of(&fx.product));
            file.operators.insert("T".into(), OperatorDef::of(&fx.t));
        }
        "no-adjoint" => {
            let fx = no_adjoint(dim_arg(2)?)?;
            file.spaces.insert("L".into(), SpaceDef::of(fx.pl.domain()));
            file.products.insert("pL".into(), ProductDef::of(&fx.pl));
            file.products.insert("pM".into(), ProductDef::of(&fx.pm));
            file.operators.insert("T".into(), OperatorDef::of(&fx.t));
        }
        "multi-adjoint" => {
            let fx = multi_adjoint(dim_arg(2)?)?;
            file.spaces.insert("L".into(), SpaceDef::of(fx.pl.domain()));
            file.products.insert("pL".into(), ProductDef::of(&fx.pl));
            file.products.insert("pM".into(), ProductDef::of(&fx.pm));
            file.operators.insert("T".into(), OperatorDef::of(&fx.t));
        }
        "selfadjoint-2x2" => {
            let t = selfadjoint_2x2();
            let p = euclidean(2);
            file.spaces.insert("L".into(), SpaceDef::of(t.domain()));
            file.products.insert("pL".into(), ProductDef::of(&p));
            file.products.insert("pM".into(), ProductDef::of(&p));
            file.operators.insert("T".into(), OperatorDef::of(&t));
        }
        "latticehom-3x3" => {
            let t = latticehom_3x3();
            let p = euclidean(3);
            file.spaces.insert("L".into(), SpaceDef::of(t.domain()));
            file.products.insert("pL".into(), ProductDef::of(&p));
            file.products.insert("pM".into(), ProductDef::of(&p));
            file.operators.insert("T".into(), OperatorDef::of(&t));
        }
        _ => {
            return Err(Error::Parse(format!(
                "unknown fixture {name:?}; known: euclidean, lex2, diag, kaplan, \
                 no-adjoint, multi-adjoint, selfadjoint-2x2, latticehom-3x3"
            )))
        }
    }
    Ok(file)
}

/// Deterministic instance generator for the property suites.
///
/// The distribution is fixed so that failures replay from the reported
/// seed: diagonal product weights are zero with probability 1/4 and
/// otherwise `a/b` with `a` uniform in `1..=9` and `b` uniform in `1..=4`;
/// element coordinates draw numerators from `-9..=9` (or `0..=9` for
/// positive elements) over the same denominators; matrix entries are zero
/// with probability 1/2 (positive matrices) or 1/4 (signed matrices).
pub struct InstanceGen {
    rng: ChaCha8Rng,
}

impl InstanceGen {
    pub fn new(seed: u64) -> Self {
        InstanceGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn dim(&mut self, max_dim: usize) -> usize {
        self.rng.random_range(1..=max_dim.max(1))
    }

    pub fn dim_between(&mut self, min: usize, max: usize) -> usize {
        self.rng.random_range(min..=max.max(min))
    }

    fn denominator(&mut self) -> i64 {
        self.rng.random_range(1..=4)
    }

    /// Zero with probability 1/4, otherwise uniform `1..=9 / 1..=4`.
    pub fn weight(&mut self) -> Rational {
        if self.rng.random_range(0..4) == 0 {
            Rational::zero()
        } else {
            rat(self.rng.random_range(1..=9), self.denominator())
        }
    }

    /// Random verified diagonal product on coordinatewise `Q^d`,
    /// `d` uniform in `1..=max_dim`.
    pub fn diag_product(&mut self, max_dim: usize) -> OrthoProduct {
        let d = self.dim(max_dim);
        let weights: Vec<Rational> = (0..d).map(|_| self.weight()).collect();
        diag_product(&weights).expect("generated weights are nonnegative")
    }

    /// Like [`InstanceGen::diag_product`] but with all weights nonzero, so
    /// the product is definite.
    pub fn definite_diag_product(&mut self, dim: usize) -> OrthoProduct {
        let weights: Vec<Rational> = (0..dim)
            .map(|_| rat(self.rng.random_range(1..=9), self.denominator()))
            .collect();
        diag_product(&weights).expect("generated weights are positive")
    }

    pub fn element(&mut self, space: LatticeSpace) -> Element {
        let coords = (0..space.dim())
            .map(|_| rat(self.rng.random_range(-9..=9), self.denominator()))
            .collect();
        space.element(coords).expect("generated coordinate count")
    }

    pub fn positive_element(&mut self, space: LatticeSpace) -> Element {
        let coords = (0..space.dim())
            .map(|_| rat(self.rng.random_range(0..=9), self.denominator()))
            .collect();
        space.element(coords).expect("generated coordinate count")
    }

    /// Random combination of the neutral basis of a verified product.
    pub fn neutral_element(&mut self, p: &OrthoProduct) -> Element {
        let basis = p
            .neutral_basis()
            .expect("generator products are verified")
            .basis;
        let mut acc = p.domain().zero();
        for b in &basis {
            let coeff = rat(self.rng.random_range(-9..=9), self.denominator());
            acc = &acc + &b.scale(&coeff);
        }
        acc
    }

    /// A random point of the order interval `[0, g]` for positive `g`:
    /// each coordinate is scaled by a quarter-step fraction in `[0, 1]`.
    pub fn point_below(&mut self, g: &Element) -> Element {
        let coords = g
            .coords()
            .iter()
            .map(|c| c * rat(self.rng.random_range(0..=4), 4))
            .collect();
        g.space().element(coords).expect("same dimension")
    }

    /// Entries zero with probability 1/2, otherwise uniform `1..=9 / 1..=4`.
    pub fn positive_matrix(&mut self, rows: usize, cols: usize) -> RatMatrix {
        let entries = (0..rows * cols)
            .map(|_| {
                if self.rng.random_range(0..2) == 0 {
                    Rational::zero()
                } else {
                    rat(self.rng.random_range(1..=9), self.denominator())
                }
            })
            .collect();
        RatMatrix::new(rows, cols, entries).expect("generated entry count")
    }

    /// Entries zero with probability 1/4, otherwise signed `-9..=9 / 1..=4`.
    pub fn signed_matrix(&mut self, rows: usize, cols: usize) -> RatMatrix {
        let entries = (0..rows * cols)
            .map(|_| {
                if self.rng.random_range(0..4) == 0 {
                    Rational::zero()
                } else {
                    rat(self.rng.random_range(-9..=9), self.denominator())
                }
            })
            .collect();
        RatMatrix::new(rows, cols, entries).expect("generated entry count")
    }

    /// Random lattice homomorphism: each row is zero with probability 1/4,
    /// otherwise it has a single positive entry in a uniform column.
    pub fn lattice_hom(&mut self, dim: usize) -> RegularOperator {
        let mut m = RatMatrix::zero(dim, dim);
        for r in 0..dim {
            if self.rng.random_range(0..4) == 0 {
                continue;
            }
            let c = self.rng.random_range(0..dim);
            m.set(r, c, rat(self.rng.random_range(1..=9), self.denominator()));
        }
        RegularOperator::from_matrix(m)
    }

    /// Permutation times a positive diagonal with nonzero weights: a
    /// surjective lattice homomorphism.
    pub fn surjective_lattice_hom(&mut self, dim: usize) -> RegularOperator {
        let mut perm: Vec<usize> = (0..dim).collect();
        perm.shuffle(&mut self.rng);
        let mut m = RatMatrix::zero(dim, dim);
        for (j, &target) in perm.iter().enumerate() {
            m.set(
                target,
                j,
                rat(self.rng.random_range(1..=9), self.denominator()),
            );
        }
        RegularOperator::from_matrix(m)
    }

    /// Random diagonal operator with signed entries (an orthomorphism).
    pub fn diagonal_operator(&mut self, dim: usize) -> RegularOperator {
        let mut m = RatMatrix::zero(dim, dim);
        for i in 0..dim {
            m.set(i, i, rat(self.rng.random_range(-9..=9), self.denominator()));
        }
        RegularOperator::from_matrix(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{adjoint, restrict_to_quotient, AdjointResult};

    #[test]
    fn every_exact_fixture_verifies() {
        assert!(euclidean(1).is_verified());
        assert!(euclidean(6).is_verified());
        assert!(lex2().is_verified());
        assert!(diag_product(&[rat_int(1), Rational::zero(), rat_int(2)])
            .unwrap()
            .is_verified());
        assert!(kaplan(4).unwrap().product.is_verified());
        assert!(no_adjoint(3).unwrap().pl.is_verified());
        assert!(multi_adjoint(4).unwrap().pl.is_verified());
    }

    #[test]
    fn fixture_definiteness() {
        for n in 1..=6 {
            assert!(euclidean(n).is_definite().unwrap());
        }
        assert_eq!(lex2().neutral_basis().unwrap().dim(), 1);
        for n in [2, 4, 6, 8] {
            assert!(kaplan(n).unwrap().product.is_definite().unwrap());
        }
    }

    #[test]
    fn kaplan_operator_and_absolute_value() {
        let fx = kaplan(4).unwrap();
        assert_eq!(
            fx.t.matrix(),
            &RatMatrix::from_i64_rows(&[
                &[1, -1, 0, 0],
                &[0, 0, 0, 0],
                &[0, 0, 1, -1],
                &[0, 0, 0, 0],
            ])
        );
        let abs = fx.t.rk_abs().unwrap();
        assert_eq!(
            abs.matrix(),
            &RatMatrix::from_i64_rows(&[
                &[1, 1, 0, 0],
                &[0, 0, 0, 0],
                &[0, 0, 1, 1],
                &[0, 0, 0, 0],
            ])
        );
        // |Φ_{u-v}| = Φ_{u+v}
        let phi_sum = phi(&fx.product, &(&fx.u + &fx.v)).unwrap();
        assert_eq!(abs.matrix(), phi_sum.matrix());
    }

    /// Independent oracle for the pairing product: evaluate the defining
    /// formula `u f g + S(v f g)` directly, with the forward shift
    /// truncated at the last coordinate.
    fn pairing_formula(fx: &KaplanFixture, f: &Element, g: &Element) -> Element {
        let n = f.space().dim();
        let fg: Vec<Rational> = (0..n).map(|k| &f.coords()[k] * &g.coords()[k]).collect();
        let coords: Vec<Rational> = (0..n)
            .map(|k| {
                let direct = &fx.u.coords()[k] * &fg[k];
                let shifted = if k + 1 < n {
                    &fx.v.coords()[k + 1] * &fg[k + 1]
                } else {
                    Rational::zero()
                };
                direct + shifted
            })
            .collect();
        fx.product.codomain().element(coords).unwrap()
    }

    #[test]
    fn kaplan_eval_matches_the_defining_formula() {
        let fx = kaplan(2).unwrap();
        let ones = fx.product.domain().element_i64(&[1, 1]).unwrap();
        let direct = pairing_formula(&fx, &ones, &ones);
        assert_eq!(direct, fx.product.codomain().element_i64(&[2, 0]).unwrap());
        assert_eq!(fx.product.eval(&ones, &ones).unwrap(), direct);

        let fx4 = kaplan(4).unwrap();
        let mut gen = InstanceGen::new(11);
        for _ in 0..25 {
            let f = gen.element(fx4.product.domain());
            let g = gen.element(fx4.product.domain());
            assert_eq!(
                fx4.product.eval(&f, &g).unwrap(),
                pairing_formula(&fx4, &f, &g)
            );
        }
    }

    #[test]
    fn no_adjoint_fixture_has_no_adjoint() {
        for n in [2, 3] {
            let fx = no_adjoint(n).unwrap();
            assert_eq!(
                adjoint(&fx.pl, &fx.pm, &fx.t).unwrap(),
                AdjointResult::NoAdjoint
            );
        }
    }

    #[test]
    fn zero_operator_against_the_pointwise_product_is_selfadjoint() {
        let fx = no_adjoint(2).unwrap();
        let zero =
            RegularOperator::new(fx.pl.domain(), fx.pl.domain(), RatMatrix::zero(2, 2)).unwrap();
        match adjoint(&fx.pl, &fx.pm, &zero).unwrap() {
            AdjointResult::Unique(s) => assert!(s.matrix().is_zero()),
            other => panic!("expected a unique adjoint, got {}", other.kind()),
        }
    }

    #[test]
    fn multi_adjoint_fixture_has_a_family_then_a_unique_quotient_adjoint() {
        for n in [2, 4] {
            let fx = multi_adjoint(n).unwrap();
            match adjoint(&fx.pl, &fx.pm, &fx.t).unwrap() {
                AdjointResult::Family {
                    particular,
                    homogeneous_basis,
                } => {
                    assert!(!homogeneous_basis.is_empty());
                    // every member of the family satisfies the equations
                    for extra in &homogeneous_basis {
                        let s = RegularOperator::from_matrix(
                            particular.matrix().add(extra.matrix()).unwrap(),
                        );
                        for i in 0..n {
                            for j in 0..n {
                                let ei = fx.pl.domain().basis_vector(i);
                                let ej = fx.pl.domain().basis_vector(j);
                                let lhs = fx.pm.eval(&fx.t.apply(&ei).unwrap(), &ej).unwrap();
                                let rhs = fx.pl.eval(&ei, &s.apply(&ej).unwrap()).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
                other => panic!("expected a family of adjoints, got {}", other.kind()),
            }
            // after quotienting out the neutral part the adjoint is unique
            let q = fx.pl.quotient().unwrap();
            let restricted = restrict_to_quotient(&q, &fx.t).unwrap();
            match adjoint(&q.induced, &q.induced, &restricted).unwrap() {
                AdjointResult::Unique(s) => {
                    assert_eq!(s.matrix(), &RatMatrix::identity(n / 2))
                }
                other => panic!("expected a unique adjoint, got {}", other.kind()),
            }
        }
    }

    #[test]
    fn named_matrices() {
        assert!(latticehom_3x3().is_lattice_hom());
        assert!(!latticehom_3x3().transpose().is_lattice_hom());
        assert!(!selfadjoint_2x2().is_orthomorphism());
    }

    #[test]
    fn generator_is_deterministic() {
        let mut a = InstanceGen::new(42);
        let mut b = InstanceGen::new(42);
        for _ in 0..10 {
            let pa = a.diag_product(8);
            let pb = b.diag_product(8);
            assert_eq!(pa, pb);
            assert_eq!(a.element(pa.domain()), b.element(pb.domain()));
        }
    }

    #[test]
    fn generated_products_always_verify() {
        let mut gen = InstanceGen::new(7);
        for _ in 0..50 {
            let p = gen.diag_product(8);
            assert!(p.is_verified());
        }
    }

    #[test]
    fn export_round_trips_through_the_instance_format() {
        for (name, args) in [
            ("euclidean", vec!["3".to_string()]),
            ("lex2", vec![]),
            ("diag", vec!["1".into(), "0".into(), "2".into()]),
            ("kaplan", vec!["4".into()]),
            ("no-adjoint", vec!["2".into()]),
            ("multi-adjoint", vec!["4".into()]),
            ("selfadjoint-2x2", vec![]),
            ("latticehom-3x3", vec![]),
        ] {
            let file = export_instance(name, &args).unwrap();
            let text = file.to_json();
            let reparsed = InstanceFile::from_json(&text).unwrap();
            assert_eq!(reparsed, file, "round trip failed for {name}");
            for def in reparsed.products.values() {
                let mut p = def.to_product().unwrap();
                assert!(p.verify().unwrap().all_ok());
            }
            for def in reparsed.operators.values() {
                def.to_operator().unwrap();
            }
        }
        assert!(export_instance("bogus", &[]).is_err());
        assert!(export_instance("kaplan", &["3".into()]).is_err());
    }
}
