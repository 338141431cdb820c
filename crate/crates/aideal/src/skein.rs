//! The Kauffman bracket skein algebra of the thickened torus, realized
//! inside the quantum torus: the `(p,q)`-curve maps to `e_{p,q} + e_{-p,-q}`
//! and the algebra is the Θ-invariant subalgebra.
//!
//! Stacking-order convention: the skein product composes the underlying
//! torus elements in reverse, `a · b ↦ b * a`. With the determinant twist
//! `t^{ps-qr}` this is the unique order for which the Bullock–Przytycki
//! relators vanish as printed, with `z = L(1,1)`; [`bp_relators`] is the
//! executable pin, and [`bp_relator_flipped`] witnesses that the other order
//! fails. Product-to-sum consequently reads
//! `L(p-1,q) · L(1,0) = t^q L(p,q) + t^{-q} L(p-2,q)`.

use crate::coeff::TPoly;
use crate::torus::QTElement;
use std::fmt;

/// An isotopy class of essential simple closed curves on the torus (or, for
/// non-coprime pairs, the corresponding basis element of the skein algebra).
/// `(p,q)` and `(-p,-q)` name the same curve; the canonical representative
/// has `p > 0`, or `p = 0` and `q > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurveIndex {
    p: i64,
    q: i64,
}

impl CurveIndex {
    pub fn new(p: i64, q: i64) -> crate::Result<Self> {
        if p == 0 && q == 0 {
            return Err(crate::Error::ZeroCurve);
        }
        if p > 0 || (p == 0 && q > 0) {
            Ok(CurveIndex { p, q })
        } else {
            Ok(CurveIndex { p: -p, q: -q })
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The curve with the two torus directions exchanged.
    pub fn swapped(&self) -> Self {
        CurveIndex::new(self.q, self.p).expect("swap of a nonzero curve is nonzero")
    }
}

impl fmt::Display for CurveIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// A skein of the thickened torus: a Θ-invariant element of the quantum
/// torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinElement {
    value: QTElement,
}

/// The image of the `(p,q)`-curve: `e_{p,q} + e_{-p,-q}`.
pub fn phat_curve(c: CurveIndex) -> SkeinElement {
    SkeinElement {
        value: QTElement::basis(c.p, c.q).add(&QTElement::basis(-c.p, -c.q)),
    }
}

/// Skein product with the pinned stacking order (see module docs).
pub fn skein_mul(a: &SkeinElement, b: &SkeinElement) -> SkeinElement {
    SkeinElement {
        value: b.value.mul(&a.value),
    }
}

impl SkeinElement {
    pub fn zero() -> Self {
        SkeinElement {
            value: QTElement::zero(),
        }
    }

    /// The empty skein.
    pub fn one() -> Self {
        SkeinElement {
            value: QTElement::one(),
        }
    }

    pub fn scalar(c: TPoly) -> Self {
        SkeinElement {
            value: QTElement::term(0, 0, c),
        }
    }

    /// Wraps a torus element, insisting on Θ-invariance.
    pub fn from_qt(value: QTElement) -> crate::Result<Self> {
        if !value.is_theta_invariant() {
            return Err(crate::Error::ZeroElement("Θ-invariant part of a skein"));
        }
        Ok(SkeinElement { value })
    }

    pub fn value(&self) -> &QTElement {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        SkeinElement {
            value: self.value.add(&rhs.value),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        SkeinElement {
            value: self.value.sub(&rhs.value),
        }
    }

    pub fn neg(&self) -> Self {
        SkeinElement {
            value: self.value.neg(),
        }
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        SkeinElement {
            value: self.value.scale(c),
        }
    }

    pub fn scale_t_pow(&self, k: i64) -> Self {
        SkeinElement {
            value: self.value.scale_t_pow(k),
        }
    }

    /// Exchanges the two torus directions (conjugation by the mapping torus
    /// swap); used to translate bounding-curve conventions.
    pub fn swap_directions(&self) -> Self {
        SkeinElement {
            value: self.value.swap_directions(),
        }
    }

    /// Splits into the scalar part and the curve components:
    /// `value = c_0 e_{0,0} + Σ c_i (e_{p_i,q_i} + e_{-p_i,-q_i})`.
    pub fn decompose(&self) -> (TPoly, Vec<(CurveIndex, TPoly)>) {
        let constant = self.value.coeff(0, 0);
        let mut curves = Vec::new();
        for ((p, q), c) in self.value.terms() {
            if (p, q) == (0, 0) {
                continue;
            }
            if p > 0 || (p == 0 && q > 0) {
                curves.push((CurveIndex { p, q }, c.clone()));
            }
        }
        (constant, curves)
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (constant, curves) = self.decompose();
        let mut parts: Vec<String> = Vec::new();
        for (c, coeff) in &curves {
            if coeff.is_one() {
                parts.push(format!("{c}"));
            } else if coeff.is_unit() {
                parts.push(format!("{coeff} * {c}"));
            } else {
                parts.push(format!("({coeff}) * {c}"));
            }
        }
        if !constant.is_zero() {
            if constant.is_unit() {
                parts.push(format!("{constant}"));
            } else {
                parts.push(format!("({constant})"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn curve(p: i64, q: i64) -> SkeinElement {
    phat_curve(CurveIndex::new(p, q).unwrap())
}

/// The four relators of the Bullock–Przytycki presentation with
/// `x = L(0,1)`, `y = L(1,0)`, `z = L(1,1)`, evaluated through the torus
/// embedding. All four are identically zero.
pub fn bp_relators() -> [SkeinElement; 4] {
    let x = curve(0, 1);
    let y = curve(1, 0);
    let z = curve(1, 1);
    let two = |k: i64| TPoly::from_terms([(k, crate::coeff::rat_int(2))]);

    // t^2 x^2 + t^-2 y^2 + t^2 z^2 - t xyz - 2(t^2 + t^-2)
    let xyz = skein_mul(&skein_mul(&x, &y), &z);
    let cubic = skein_mul(&x, &x)
        .scale_t_pow(2)
        .add(&skein_mul(&y, &y).scale_t_pow(-2))
        .add(&skein_mul(&z, &z).scale_t_pow(2))
        .sub(&xyz.scale_t_pow(1))
        .sub(&SkeinElement::scalar(&two(2) + &two(-2)));

    let commutator = |a: &SkeinElement, b: &SkeinElement, c: &SkeinElement| {
        skein_mul(a, b)
            .scale_t_pow(1)
            .sub(&skein_mul(b, a).scale_t_pow(-1))
            .sub(&c.scale(&(&TPoly::t_pow(2) - &TPoly::t_pow(-2))))
    };

    [
        cubic,
        commutator(&x, &y, &z), // t xy - t^-1 yx - (t^2 - t^-2) z
        commutator(&z, &x, &y), // t zx - t^-1 xz - (t^2 - t^-2) y
        commutator(&y, &z, &x), // t yz - t^-1 zy - (t^2 - t^-2) x
    ]
}

/// Negative control: the second relator evaluated with the stacking order
/// flipped. Equals `(t^2 - t^-2)(L(1,-1) - L(1,1))`, which is nonzero; this
/// pins the convention.
pub fn bp_relator_flipped() -> SkeinElement {
    let x = curve(0, 1);
    let y = curve(1, 0);
    let z = curve(1, 1);
    let flipped_mul = |a: &SkeinElement, b: &SkeinElement| SkeinElement {
        value: a.value.mul(&b.value),
    };
    flipped_mul(&x, &y)
        .scale_t_pow(1)
        .sub(&flipped_mul(&y, &x).scale_t_pow(-1))
        .sub(&z.scale(&(&TPoly::t_pow(2) - &TPoly::t_pow(-2))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;
    use proptest::prelude::*;

    #[test]
    fn phat_basics() {
        let a = curve(1, 0);
        assert_eq!(
            a.value(),
            &QTElement::basis(1, 0).add(&QTElement::basis(-1, 0))
        );
        assert_eq!(curve(-1, 0), a);
        // (0,1) is m + m^-1 in the monomial dictionary
        let m = QTElement::monomial(0, 1).add(&QTElement::monomial(0, -1));
        assert_eq!(curve(0, 1).value(), &m);
        assert!(CurveIndex::new(0, 0).is_err());
    }

    #[test]
    fn skein_mul_unit_and_theta() {
        let a = curve(2, 3);
        assert_eq!(skein_mul(&a, &SkeinElement::one()), a);
        let prod = skein_mul(&a, &curve(1, -2));
        assert!(prod.value().is_theta_invariant());
    }

    #[test]
    fn product_of_transverse_curves() {
        // L(1,0) · L(0,1) lands on {t, t^-1} against L(1,1), L(1,-1); the
        // pinned stacking order puts t^-1 on L(1,1).
        let prod = skein_mul(&curve(1, 0), &curve(0, 1));
        let expected = curve(1, 1)
            .scale_t_pow(-1)
            .add(&curve(1, -1).scale_t_pow(1));
        assert_eq!(prod, expected);
        // and the transposed product puts t on L(1,1)
        let prod = skein_mul(&curve(0, 1), &curve(1, 0));
        let expected = curve(1, 1)
            .scale_t_pow(1)
            .add(&curve(1, -1).scale_t_pow(-1));
        assert_eq!(prod, expected);
    }

    #[test]
    fn product_to_sum_family() {
        // L(p-1,q) · L(1,0) = t^q L(p,q) + t^-q L(p-2,q), exact for a grid
        // of indices. For p = 1 the (p-2,q) term reads through the curve
        // identification L(-1,q) = L(1,-q); p = 2, q = 0 degenerates to the
        // doubled empty skein.
        for p in 1..=8i64 {
            for q in -8..=8i64 {
                if (p - 1, q) == (0, 0) {
                    continue;
                }
                let lhs = skein_mul(&curve(p - 1, q), &curve(1, 0));
                let low = if (p - 2, q) == (0, 0) {
                    SkeinElement::scalar(TPoly::int(2))
                } else {
                    curve(p - 2, q)
                };
                let rhs = curve(p, q).scale_t_pow(q).add(&low.scale_t_pow(-q));
                assert_eq!(lhs, rhs, "p={p} q={q}");
            }
        }
    }

    #[test]
    fn bp_relators_vanish() {
        for (i, r) in bp_relators().iter().enumerate() {
            assert!(r.is_zero(), "relator {i} = {r}");
        }
    }

    #[test]
    fn flipped_stacking_order_breaks_relator() {
        let r = bp_relator_flipped();
        let expected = curve(1, -1)
            .sub(&curve(1, 1))
            .scale(&(&TPoly::t_pow(2) - &TPoly::t_pow(-2)));
        assert_eq!(r, expected);
        assert!(!r.is_zero());
    }

    #[test]
    fn decompose_splits_scalar_and_curves() {
        let s = curve(1, 1)
            .scale_t_pow(-3)
            .add(&SkeinElement::scalar(TPoly::int(5)));
        let (constant, curves) = s.decompose();
        assert_eq!(constant, TPoly::int(5));
        assert_eq!(
            curves,
            vec![(CurveIndex::new(1, 1).unwrap(), TPoly::t_pow(-3))]
        );
    }

    fn arb_skein() -> impl Strategy<Value = SkeinElement> {
        proptest::collection::vec(((-3i64..=3, -3i64..=3), -3i64..=3, -4i64..=4), 0..3).prop_map(
            |v| {
                v.into_iter()
                    .fold(SkeinElement::zero(), |acc, ((p, q), k, c)| {
                        let part = if (p, q) == (0, 0) {
                            SkeinElement::one()
                        } else {
                            curve(p, q)
                        };
                        acc.add(&part.scale(&TPoly::from_terms([(k, rat_int(c))])))
                    })
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn theta_invariance_closed_under_mul(a in arb_skein(), b in arb_skein()) {
            prop_assert!(skein_mul(&a, &b).value().is_theta_invariant());
        }

        #[test]
        fn commutative_at_minus_one(a in arb_skein(), b in arb_skein()) {
            let m1 = rat_int(-1);
            let ab = skein_mul(&a, &b).value().specialize(&m1).unwrap();
            let ba = skein_mul(&b, &a).value().specialize(&m1).unwrap();
            prop_assert_eq!(ab, ba);
        }
    }
}
