//! The quantum torus `C_t[l,l^-1,m,m^-1]`: the Laurent skew ring in the
//! Rieffel basis `e_{p,q} = t^{-pq} l^p m^q`, with product
//! `e_{p,q} * e_{r,s} = t^{ps-qr} e_{p+r,q+s}`, the involutive automorphism
//! `Θ(e_{p,q}) = e_{-p,-q}`, and the clearing map into the quantum plane.
//!
//! The exponent of the product twist is the 2×2 determinant of the rows
//! `(p,q)`, `(r,s)`; this sign convention is pinned by `lm = t^2 ml` and
//! checked in the tests.

use crate::coeff::{Rat, TPoly, TRat};
use crate::plane::PlanePoly;
use std::collections::BTreeMap;
use std::fmt;

/// An element `Σ α_{p,q} e_{p,q}` of the quantum torus, with nonzero
/// Laurent-polynomial coefficients over integer exponent pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QTElement {
    terms: BTreeMap<(i64, i64), TPoly>,
}

/// The left monomial `l^a m^b` used to clear an element into the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shift {
    pub a: i64,
    pub b: i64,
}

impl QTElement {
    pub fn zero() -> Self {
        QTElement {
            terms: BTreeMap::new(),
        }
    }

    /// The unit `e_{0,0}`.
    pub fn one() -> Self {
        Self::basis(0, 0)
    }

    /// The basis element `e_{p,q}`.
    pub fn basis(p: i64, q: i64) -> Self {
        Self::term(p, q, TPoly::one())
    }

    pub fn term(p: i64, q: i64, c: TPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        QTElement { terms }
    }

    /// The plain monomial `l^p m^q = t^{pq} e_{p,q}`.
    pub fn monomial(p: i64, q: i64) -> Self {
        Self::term(p, q, TPoly::t_pow(p * q))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64, TPoly)>>(raw: I) -> Self {
        let mut terms: BTreeMap<(i64, i64), TPoly> = BTreeMap::new();
        for (p, q, c) in raw {
            let entry = terms.entry((p, q)).or_insert_with(TPoly::zero);
            *entry = &*entry + &c;
        }
        terms.retain(|_, c| !c.is_zero());
        QTElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &TPoly)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, p: i64, q: i64) -> TPoly {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            let entry = terms.entry(*k).or_insert_with(TPoly::zero);
            *entry = &*entry + c;
        }
        terms.retain(|_, c| !c.is_zero());
        QTElement { terms }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        QTElement {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTElement {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn scale_t_pow(&self, k: i64) -> Self {
        self.scale(&TPoly::t_pow(k))
    }

    /// The Rieffel product, extended bilinearly from
    /// `e_{p,q} * e_{r,s} = t^{ps-qr} e_{p+r,q+s}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<(i64, i64), TPoly> = BTreeMap::new();
        for (&(p, q), ca) in &self.terms {
            for (&(r, s), cb) in &rhs.terms {
                let c = (ca * cb).mul_t_pow(p * s - q * r);
                let entry = terms.entry((p + r, q + s)).or_insert_with(TPoly::zero);
                *entry = &*entry + &c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        QTElement { terms }
    }

    /// The automorphism `Θ`: the coefficient at `(p,q)` moves to `(-p,-q)`.
    pub fn theta(&self) -> Self {
        QTElement {
            terms: self
                .terms
                .iter()
                .map(|(&(p, q), c)| ((-p, -q), c.clone()))
                .collect(),
        }
    }

    pub fn is_theta_invariant(&self) -> bool {
        self.theta() == *self
    }

    /// Exchanges the two torus directions, `e_{p,q} → e_{q,p}`. Used to
    /// translate between the two bounding-curve conventions.
    pub fn swap_directions(&self) -> Self {
        QTElement {
            terms: self
                .terms
                .iter()
                .map(|(&(p, q), c)| ((q, p), c.clone()))
                .collect(),
        }
    }

    /// Conversion to plane monomial coordinates; all exponents must be
    /// nonnegative. `α e_{p,q} = α t^{-pq} l^p m^q`.
    pub fn to_plane(&self) -> crate::Result<PlanePoly<TRat>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (&(p, q), c) in &self.terms {
            if p < 0 || q < 0 {
                return Err(crate::Error::NegativeExponent { p, q });
            }
            out.push((p, q, TRat::from_poly(c.mul_t_pow(-p * q))));
        }
        PlanePoly::try_from_terms(out)
    }

    /// Reads a plane element back into the torus (monomial dictionary).
    pub fn from_plane(f: &PlanePoly<TRat>) -> Self {
        Self::from_terms(f.terms().map(|((p, q), c)| {
            let poly = c
                .as_poly()
                .expect("plane element with polynomial coefficients")
                .clone();
            (p, q, poly.mul_t_pow(p * q))
        }))
    }

    /// Clears negative exponents by the minimal left monomial `l^a m^b`
    /// (`a = max(0, -min p)`, `b = max(0, -min q)`) and lands in the plane.
    /// Monomials are units in the Laurent ring, so the extension of the left
    /// ideal is unchanged.
    pub fn clear_to_plane(&self) -> crate::Result<(PlanePoly<TRat>, Shift)> {
        if self.is_zero() {
            return Err(crate::Error::ZeroElement("element to clear"));
        }
        let min_p = self.terms.keys().map(|&(p, _)| p).min().unwrap();
        let min_q = self.terms.keys().map(|&(_, q)| q).min().unwrap();
        let a = (-min_p).max(0);
        let b = (-min_q).max(0);
        let cleared = Self::monomial(a, b).mul(self);
        Ok((cleared.to_plane()?, Shift { a, b }))
    }

    /// Evaluates all coefficients at `t = t0`.
    pub fn specialize(&self, t0: &Rat) -> crate::Result<BTreeMap<(i64, i64), Rat>> {
        let mut out = BTreeMap::new();
        for (&k, c) in &self.terms {
            let v = c.specialize(t0)?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(k, v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for QTElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(p, q), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "e({p},{q})")?;
            } else if c.is_unit() {
                write!(f, "{c}*e({p},{q})")?;
            } else {
                write!(f, "({c})*e({p},{q})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;
    use proptest::prelude::*;

    fn tp(terms: &[(i64, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(k, c)| (k, rat_int(c))))
    }

    #[test]
    fn rieffel_product_determinant() {
        // e_{1,0} * e_{0,1} = t e_{1,1}
        let prod = QTElement::basis(1, 0).mul(&QTElement::basis(0, 1));
        assert_eq!(prod, QTElement::term(1, 1, TPoly::t_pow(1)));
        // lm = t^2 ml
        let l = QTElement::monomial(1, 0);
        let m = QTElement::monomial(0, 1);
        let lm = l.mul(&m);
        let ml = m.mul(&l);
        assert_eq!(lm.sub(&ml.scale_t_pow(2)), QTElement::zero());
        // unit
        let x = QTElement::from_terms([(2, -1, tp(&[(3, 1)])), (0, 4, tp(&[(0, 2)]))]);
        assert_eq!(x.mul(&QTElement::one()), x);
    }

    #[test]
    fn rieffel_product_four_terms() {
        // (e_{1,0}+e_{-1,0})(e_{0,1}+e_{0,-1})
        //   = t(e_{1,1}+e_{-1,-1}) + t^-1(e_{1,-1}+e_{-1,1})
        let a = QTElement::basis(1, 0).add(&QTElement::basis(-1, 0));
        let b = QTElement::basis(0, 1).add(&QTElement::basis(0, -1));
        let expected = QTElement::from_terms([
            (1, 1, TPoly::t_pow(1)),
            (-1, -1, TPoly::t_pow(1)),
            (1, -1, TPoly::t_pow(-1)),
            (-1, 1, TPoly::t_pow(-1)),
        ]);
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn theta_involution() {
        let x = QTElement::basis(2, 3);
        assert_eq!(x.theta(), QTElement::basis(-2, -3));
        let y = QTElement::from_terms([(1, -2, tp(&[(0, 3), (2, 1)])), (0, 0, tp(&[(1, 5)]))]);
        assert_eq!(y.theta().theta(), y);
    }

    #[test]
    fn clear_unknot_first_generator() {
        // m + m^-1 + (t^2+t^-2)  ->  m^2 + (t^2+t^-2) m + 1, shift (0,1)
        let x = QTElement::from_terms([
            (0, 1, TPoly::one()),
            (0, -1, TPoly::one()),
            (0, 0, tp(&[(2, 1), (-2, 1)])),
        ]);
        let (g, shift) = x.clear_to_plane().unwrap();
        let expected = PlanePoly::from_terms([
            (0, 2, TRat::one()),
            (0, 1, TRat::from_poly(tp(&[(2, 1), (-2, 1)]))),
            (0, 0, TRat::one()),
        ]);
        assert_eq!(g, expected);
        assert_eq!(shift, Shift { a: 0, b: 1 });
    }

    #[test]
    fn clear_unknot_second_generator() {
        // e_{1,1}+e_{-1,-1} + t^-3 (e_{1,0}+e_{-1,0})
        //   ->  t^-3 l^2 m^2 + t^-5 l^2 m + t^-1 m + t, shift (1,1)
        let x = QTElement::from_terms([
            (1, 1, TPoly::one()),
            (-1, -1, TPoly::one()),
            (1, 0, TPoly::t_pow(-3)),
            (-1, 0, TPoly::t_pow(-3)),
        ]);
        let (g, shift) = x.clear_to_plane().unwrap();
        let expected = PlanePoly::from_terms([
            (2, 2, TRat::t_pow(-3)),
            (2, 1, TRat::t_pow(-5)),
            (0, 1, TRat::t_pow(-1)),
            (0, 0, TRat::t_pow(1)),
        ]);
        assert_eq!(g, expected);
        assert_eq!(shift, Shift { a: 1, b: 1 });
    }

    #[test]
    fn clear_already_in_plane() {
        let x = QTElement::monomial(2, 1);
        let (g, shift) = x.clear_to_plane().unwrap();
        assert_eq!(g, PlanePoly::monomial(2, 1, TRat::one()));
        assert_eq!(shift, Shift { a: 0, b: 0 });
        assert!(QTElement::zero().clear_to_plane().is_err());
    }

    #[test]
    fn clear_shift_is_minimal() {
        let x = QTElement::from_terms([
            (-2, 1, TPoly::one()),
            (0, -3, tp(&[(1, 4)])),
            (1, 1, TPoly::t_pow(2)),
        ]);
        let (g, shift) = x.clear_to_plane().unwrap();
        assert_eq!((shift.a, shift.b), (2, 3));
        // minimality: some exponent hits zero in each direction
        assert!(g.terms().any(|((p, _), _)| p == 0));
        assert!(g.terms().any(|((_, q), _)| q == 0));
    }

    #[test]
    fn monomial_dictionary_round_trip() {
        let x = QTElement::from_terms([(2, 3, tp(&[(0, 1), (4, -2)])), (0, 1, tp(&[(-1, 7)]))]);
        let plane = x.to_plane().unwrap();
        assert_eq!(QTElement::from_plane(&plane), x);
    }

    fn arb_qt() -> impl Strategy<Value = QTElement> {
        proptest::collection::vec(((-3i64..=3, -3i64..=3), -4i64..=4, -5i64..=5), 0..4).prop_map(
            |v| {
                QTElement::from_terms(
                    v.into_iter()
                        .map(|((p, q), k, c)| (p, q, TPoly::from_terms([(k, rat_int(c))]))),
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn mul_is_associative(a in arb_qt(), b in arb_qt(), c in arb_qt()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn theta_is_an_automorphism(a in arb_qt(), b in arb_qt()) {
            prop_assert_eq!(a.mul(&b).theta(), a.theta().mul(&b.theta()));
        }
    }
}
