//! The quantum plane `C_t[l,m]` (`lm = t^2 ml`) and its left-ideal Gröbner
//! engine: lex order, left division, S-polynomials, Buchberger completion to
//! the unique minimal reduced monic basis, and monomial saturation.
//!
//! Elements are stored in monomial coordinates: a finite map from power
//! products `l^p m^q` (`p, q ≥ 0`) to nonzero coefficients. The engine is
//! generic over the coefficient field through [`Coeff`]; the symbolic
//! instance is `Q(t)` via [`TRat`], and the [`Rat`] instance sets `t = -1`,
//! which makes the twist trivial and the very same code compute commutative
//! Gröbner bases.

use crate::coeff::{Rat, TPoly, TRat};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Exponent pair of a power product `l^p m^q`.
pub type PowerProduct = (i64, i64);

/// Strict lex order with `l > m`: `l^p m^q < l^r m^s` iff `p < r`, or `p = r`
/// and `q < s`.
pub fn lex_less(a: PowerProduct, b: PowerProduct) -> bool {
    a < b
}

fn pp_divides(d: PowerProduct, pp: PowerProduct) -> bool {
    d.0 <= pp.0 && d.1 <= pp.1
}

/// Coefficient field of the plane engine. `t_pow` is the image of the
/// central unit `t^k`; it is the only place the quantum parameter enters the
/// division algorithm.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn t_pow(k: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Field division; the divisor must be nonzero.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Rendering of this coefficient as a multiplicative factor, split into
    /// a sign and a factor string (empty for 1), parenthesized as needed.
    fn fmt_factor(&self) -> (bool, String);
}

impl Coeff for TRat {
    fn zero() -> Self {
        TRat::zero()
    }
    fn one() -> Self {
        TRat::one()
    }
    fn is_zero(&self) -> bool {
        TRat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        TRat::is_one(self)
    }
    fn t_pow(k: i64) -> Self {
        TRat::t_pow(k)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        TRat::div(self, rhs).expect("division by zero coefficient")
    }
    fn neg(&self) -> Self {
        -self
    }
    fn fmt_factor(&self) -> (bool, String) {
        let negative = self.num().leading_coeff().is_negative();
        let mag = if negative { -self } else { self.clone() };
        if mag.is_one() {
            return (negative, String::new());
        }
        let s = match mag.as_poly() {
            Some(p) if p.is_unit() => format!("{p}"),
            _ => format!("({mag})"),
        };
        (negative, s)
    }
}

/// The `t = -1` instance: `t^k` evaluates to `(-1)^k`, so the twist
/// `t^{-2bp}` is identically 1 and the ring degenerates to `Q[l,m]`.
impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn t_pow(k: i64) -> Self {
        if k % 2 == 0 {
            One::one()
        } else {
            -<Rat as One>::one()
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn fmt_factor(&self) -> (bool, String) {
        let negative = self.is_negative();
        let mag = self.abs();
        if One::is_one(&mag) {
            (negative, String::new())
        } else if mag.is_integer() {
            (negative, format!("{}", mag.numer()))
        } else {
            (negative, format!("{}/{}", mag.numer(), mag.denom()))
        }
    }
}

/// An element of the quantum plane in monomial coordinates,
/// `Σ α_{p,q} l^p m^q` with `p, q ≥ 0` and no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePoly<C: Coeff> {
    terms: BTreeMap<PowerProduct, C>,
}

impl<C: Coeff> Default for PlanePoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> PlanePoly<C> {
    pub fn zero() -> Self {
        PlanePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, C::one())
    }

    pub fn monomial(p: i64, q: i64, c: C) -> Self {
        assert!(p >= 0 && q >= 0, "plane exponents must be nonnegative");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        PlanePoly { terms }
    }

    /// Canonical form from arbitrary terms; rejects negative exponents.
    pub fn try_from_terms<I: IntoIterator<Item = (i64, i64, C)>>(raw: I) -> crate::Result<Self> {
        let mut terms: BTreeMap<PowerProduct, C> = BTreeMap::new();
        for (p, q, c) in raw {
            if p < 0 || q < 0 {
                return Err(crate::Error::NegativeExponent { p, q });
            }
            let entry = terms.entry((p, q)).or_insert_with(C::zero);
            *entry = entry.add(&c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(PlanePoly { terms })
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64, C)>>(raw: I) -> Self {
        Self::try_from_terms(raw).expect("negative exponent in plane polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (PowerProduct, &C)> {
        self.terms.iter().map(|(pp, c)| (*pp, c))
    }

    pub fn coeff(&self, p: i64, q: i64) -> C {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(C::zero)
    }

    /// Leading term under lex: the lex-greatest power product present.
    pub fn leading(&self) -> Option<(PowerProduct, &C)> {
        self.terms.iter().next_back().map(|(pp, c)| (*pp, c))
    }

    pub fn leading_pp(&self) -> Option<PowerProduct> {
        self.leading().map(|(pp, _)| pp)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (pp, c) in &rhs.terms {
            let entry = terms.entry(*pp).or_insert_with(C::zero);
            *entry = entry.add(c);
        }
        terms.retain(|_, c| !c.is_zero());
        PlanePoly { terms }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        PlanePoly {
            terms: self.terms.iter().map(|(pp, c)| (*pp, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PlanePoly {
            terms: self.terms.iter().map(|(pp, v)| (*pp, v.mul(c))).collect(),
        }
    }

    /// Left multiplication by the monomial `l^a m^b`: each term `l^p m^q`
    /// picks up the twist `t^{-2bp}` from `m^b l^p = t^{-2bp} l^p m^b`.
    pub fn mono_left_mul(&self, a: i64, b: i64) -> Self {
        assert!(a >= 0 && b >= 0);
        PlanePoly {
            terms: self
                .terms
                .iter()
                .map(|(&(p, q), c)| ((a + p, b + q), c.mul(&C::t_pow(-2 * b * p))))
                .collect(),
        }
    }

    /// Full skew product: `(l^a m^b)(l^p m^q) = t^{-2bp} l^{a+p} m^{b+q}`,
    /// extended bilinearly.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<PowerProduct, C> = BTreeMap::new();
        for (&(a, b), ca) in &self.terms {
            for (&(p, q), cb) in &rhs.terms {
                let c = ca.mul(cb).mul(&C::t_pow(-2 * b * p));
                let entry = terms.entry((a + p, b + q)).or_insert_with(C::zero);
                *entry = entry.add(&c);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        PlanePoly { terms }
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    let lc = lc.clone();
                    PlanePoly {
                        terms: self.terms.iter().map(|(pp, c)| (*pp, c.div(&lc))).collect(),
                    }
                }
            }
        }
    }

    /// Full normal form of `self` modulo `basis`: no power product of the
    /// result is divisible by the leading power product of any basis element.
    pub fn reduce(&self, basis: &[PlanePoly<C>]) -> Self {
        let mut remainder: BTreeMap<PowerProduct, C> = BTreeMap::new();
        let mut work = self.clone();
        'outer: while let Some((pp, c)) = work.leading().map(|(pp, c)| (pp, c.clone())) {
            for g in basis {
                let Some((gpp, gc)) = g.leading() else {
                    continue;
                };
                if pp_divides(gpp, pp) {
                    let a = pp.0 - gpp.0;
                    let b = pp.1 - gpp.1;
                    // leading coefficient of l^a m^b * g
                    let lift_lc = C::t_pow(-2 * b * gpp.0).mul(gc);
                    let factor = c.div(&lift_lc);
                    work = work.sub(&g.mono_left_mul(a, b).scale(&factor));
                    continue 'outer;
                }
            }
            remainder.insert(pp, c);
            work.terms.remove(&pp);
        }
        PlanePoly { terms: remainder }
    }

    /// Evaluate all coefficients at `t = t0` (for [`PlanePoly<TRat>`]).
    pub fn specialize(&self, t0: &Rat) -> crate::Result<PlanePoly<Rat>>
    where
        C: SpecializeT,
    {
        let mut out: Vec<(i64, i64, Rat)> = Vec::with_capacity(self.terms.len());
        for (&(p, q), c) in &self.terms {
            out.push((p, q, c.specialize_t(t0)?));
        }
        PlanePoly::try_from_terms(out)
    }
}

/// Coefficients that can be exactly evaluated at a scalar value of `t`.
pub trait SpecializeT {
    fn specialize_t(&self, t0: &Rat) -> crate::Result<Rat>;
}

impl SpecializeT for TRat {
    fn specialize_t(&self, t0: &Rat) -> crate::Result<Rat> {
        self.specialize(t0)
    }
}

impl SpecializeT for TPoly {
    fn specialize_t(&self, t0: &Rat) -> crate::Result<Rat> {
        self.specialize(t0)
    }
}

/// S-polynomial of two nonzero elements: both are lifted by left monomials
/// to the lcm of their leading power products, scaled monic there, and
/// subtracted; the leading terms cancel exactly.
pub fn s_polynomial<C: Coeff>(f: &PlanePoly<C>, g: &PlanePoly<C>) -> PlanePoly<C> {
    let (fpp, _) = f.leading().expect("s_polynomial of zero");
    let (gpp, _) = g.leading().expect("s_polynomial of zero");
    let lcm = (fpp.0.max(gpp.0), fpp.1.max(gpp.1));
    let lift = |h: &PlanePoly<C>, hpp: PowerProduct| {
        let u = h.mono_left_mul(lcm.0 - hpp.0, lcm.1 - hpp.1);
        let (_, lc) = u.leading().unwrap();
        let lc = lc.clone();
        u.scale(&C::one().div(&lc))
    };
    lift(f, fpp).sub(&lift(g, gpp))
}

/// The unique minimal reduced monic Gröbner basis of a left ideal, sorted
/// ascending by leading power product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<C: Coeff> {
    polys: Vec<PlanePoly<C>>,
}

impl<C: Coeff> GroebnerBasis<C> {
    pub fn polys(&self) -> &[PlanePoly<C>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Normal form modulo this basis.
    pub fn reduce(&self, f: &PlanePoly<C>) -> PlanePoly<C> {
        f.reduce(&self.polys)
    }

    /// Left-ideal membership via reduction to zero.
    pub fn contains(&self, f: &PlanePoly<C>) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn into_polys(self) -> Vec<PlanePoly<C>> {
        self.polys
    }
}

/// Buchberger completion for left ideals of the quantum plane, followed by
/// minimalization and autoreduction. S-pairs are processed smallest lcm
/// first; the result is independent of that order by uniqueness of the
/// reduced basis.
pub fn buchberger<C: Coeff>(gens: &[PlanePoly<C>]) -> crate::Result<GroebnerBasis<C>> {
    let mut basis: Vec<PlanePoly<C>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.make_monic())
        .collect();
    if basis.is_empty() {
        return Err(crate::Error::EmptyIdeal);
    }

    let lcm_of = |f: &PlanePoly<C>, g: &PlanePoly<C>| {
        let a = f.leading_pp().unwrap();
        let b = g.leading_pp().unwrap();
        (a.0.max(b.0), a.1.max(b.1))
    };

    let mut pairs: BTreeSet<(PowerProduct, usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert((lcm_of(&basis[i], &basis[j]), i, j));
        }
    }

    while let Some(&(_, i, j)) = pairs.iter().next() {
        pairs.remove(&(lcm_of(&basis[i], &basis[j]), i, j));
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = s.reduce(&basis);
        if !r.is_zero() {
            let r = r.make_monic();
            let idx = basis.len();
            for (k, b) in basis.iter().enumerate() {
                pairs.insert((lcm_of(b, &r), k, idx));
            }
            basis.push(r);
        }
    }

    // Minimalize: keep only elements whose leading power product is not
    // divisible by another kept one. Ascending order guarantees divisors are
    // seen first.
    basis.sort_by_key(|f| f.leading_pp().unwrap());
    let mut kept: Vec<PlanePoly<C>> = Vec::new();
    for f in basis {
        let fpp = f.leading_pp().unwrap();
        if !kept
            .iter()
            .any(|g| pp_divides(g.leading_pp().unwrap(), fpp))
        {
            kept.push(f);
        }
    }

    // Autoreduce each element against the others; leading terms survive.
    for i in 0..kept.len() {
        let others: Vec<PlanePoly<C>> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        kept[i] = kept[i].reduce(&others).make_monic();
    }

    Ok(GroebnerBasis { polys: kept })
}

/// Saturation by the monomial units: computes the basis, then strips a left
/// factor `l` (no twist) or `m` (twist `t^{2p}` per term) from any element
/// all of whose power products allow it, and repeats to a fixpoint. The
/// output generates an ideal between the input ideal and its extension's
/// contraction.
pub fn saturate_monomials<C: Coeff>(gens: &[PlanePoly<C>]) -> crate::Result<GroebnerBasis<C>> {
    let mut gb = buchberger(gens)?;
    loop {
        let mut changed = false;
        let mut polys = gb.polys.clone();
        for f in polys.iter_mut() {
            loop {
                if !f.is_zero() && f.terms.keys().all(|&(p, _)| p >= 1) {
                    *f = PlanePoly {
                        terms: f
                            .terms
                            .iter()
                            .map(|(&(p, q), c)| ((p - 1, q), c.clone()))
                            .collect(),
                    };
                    changed = true;
                } else if !f.is_zero() && f.terms.keys().all(|&(_, q)| q >= 1) {
                    *f = PlanePoly {
                        terms: f
                            .terms
                            .iter()
                            .map(|(&(p, q), c)| ((p, q - 1), c.mul(&C::t_pow(2 * p))))
                            .collect(),
                    };
                    changed = true;
                } else {
                    break;
                }
            }
        }
        if !changed {
            return Ok(gb);
        }
        gb = buchberger(&polys)?;
    }
}

fn fmt_pp(pp: PowerProduct) -> String {
    let var = |name: &str, e: i64| match e {
        0 => String::new(),
        1 => name.to_string(),
        e => format!("{name}^{e}"),
    };
    let ls = var("l", pp.0);
    let ms = var("m", pp.1);
    match (ls.is_empty(), ms.is_empty()) {
        (true, true) => "1".to_string(),
        (false, true) => ls,
        (true, false) => ms,
        (false, false) => format!("{ls}*{ms}"),
    }
}

impl<C: Coeff> fmt::Display for PlanePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (pp, c) in self.terms.iter().rev() {
            let (neg, factor) = c.fmt_factor();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let pps = fmt_pp(*pp);
            match (factor.is_empty(), pps == "1") {
                (true, _) => write!(f, "{pps}")?,
                (false, true) => write!(f, "{factor}")?,
                (false, false) => write!(f, "{factor}*{pps}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Display for GroebnerBasis<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.polys.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
