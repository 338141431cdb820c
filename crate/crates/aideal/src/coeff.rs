//! The coefficient ring: Laurent polynomials in the quantum parameter `t`
//! with exact rational coefficients, and their field of fractions.
//!
//! Every computation downstream demands identity-to-zero checks, so all
//! arithmetic here is exact. `t` is a formal variable throughout; nothing is
//! ever evaluated numerically except through [`TPoly::specialize`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// A Laurent polynomial `Σ c_k t^k` over `Q`, stored canonically: no zero
/// coefficient is ever kept, so equal values compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct TPoly {
    terms: BTreeMap<i64, Rat>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::t_pow(0)
    }

    /// The monomial `t^k`.
    pub fn t_pow(k: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, Rat::one());
        TPoly { terms }
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        TPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// Builds the canonical form of `Σ c_k t^k` from an arbitrary term list:
    /// like exponents are combined and zero coefficients dropped.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(raw: I) -> Self {
        let mut terms: BTreeMap<i64, Rat> = BTreeMap::new();
        for (k, c) in raw {
            let entry = terms.entry(k).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        TPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// True exactly for the units of the Laurent ring: `c t^k`, `c ≠ 0`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, k: i64) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `t`; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rat {
        self.max_exp()
            .map(|k| self.coeff(k))
            .unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul_t_pow(&self, k: i64) -> Self {
        TPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Exact evaluation at `t = t0`. Rejects `t0 = 0`, where negative powers
    /// are undefined.
    pub fn specialize(&self, t0: &Rat) -> crate::Result<Rat> {
        if t0.is_zero() {
            return Err(crate::Error::ZeroEvaluationPoint);
        }
        let inv = t0.recip();
        let mut acc = Rat::zero();
        for (k, c) in &self.terms {
            acc += c * &pow_rat(if *k >= 0 { t0 } else { &inv }, k.unsigned_abs());
        }
        Ok(acc)
    }

    /// Quotient `self / d` when the division is exact in the Laurent ring.
    pub fn div_exact(&self, d: &TPoly) -> Option<TPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(TPoly::zero());
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = d.to_dense();
        let (q, r) = dense_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(TPoly::from_dense(sa - sb, &q))
    }

    /// Canonical gcd in the Laurent ring: the monic ordinary polynomial with
    /// nonzero constant term dividing both arguments maximally (so the result
    /// carries no `t`-power factor and no rational scale).
    pub fn gcd(a: &TPoly, b: &TPoly) -> TPoly {
        if a.is_zero() {
            return b.ordinary_monic();
        }
        if b.is_zero() {
            return a.ordinary_monic();
        }
        let (_, da) = a.to_dense();
        let (_, db) = b.to_dense();
        let g = dense_gcd_monic(&da, &db);
        TPoly::from_dense(0, &g)
    }

    /// This polynomial shifted to have minimal exponent 0 and scaled monic.
    fn ordinary_monic(&self) -> TPoly {
        if self.is_zero() {
            return TPoly::zero();
        }
        let (_, d) = self.to_dense();
        let lead = d.last().unwrap().clone();
        TPoly::from_dense(0, &d.iter().map(|c| c / &lead).collect::<Vec<_>>())
    }

    /// Splits into `t^shift * (dense ordinary polynomial)` with nonzero
    /// constant term. Zero input yields an empty vector.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rat>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (k, c) in &self.terms {
            v[(k - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(shift: i64, v: &[Rat]) -> TPoly {
        TPoly::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }
}

fn pow_rat(base: &Rat, n: u64) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        n >>= 1;
    }
    acc
}

/// Division with remainder of dense polynomials over `Q`, `b` nonzero.
fn dense_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let mut q = vec![Rat::zero(); a.len() - db];
    let lead = &b[db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let f = &r[i] / lead;
        for (j, bc) in b.iter().enumerate() {
            let idx = i - db + j;
            r[idx] = &r[idx] - &(&f * bc);
        }
        q[i - db] = f;
    }
    r.truncate(db);
    (q, r)
}

/// Monic gcd by the Euclidean algorithm over `Q[t]`.
fn dense_gcd_monic(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let trim = |mut v: Vec<Rat>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    };
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = trim(r);
    }
    let lead = x.last().expect("gcd of nonzero polynomials").clone();
    x.iter().map(|c| c / &lead).collect()
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            let entry = terms.entry(*k).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        TPoly { terms }
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self + &(-rhs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut terms: BTreeMap<i64, Rat> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let entry = terms.entry(ka + kb).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        TPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $trait:ident, $method:ident) => {
        impl $trait<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                (&self).$method(rhs)
            }
        }
        impl $trait<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(TPoly, Add, add);
forward_owned_binop!(TPoly, Sub, sub);
forward_owned_binop!(TPoly, Mul, mul);

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.is_integer() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
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
            let coeff_part = if mag.is_one() && *k != 0 {
                None
            } else {
                Some(fmt_rat(&mag))
            };
            match (*k, coeff_part) {
                (0, Some(c)) => write!(f, "{c}")?,
                (0, None) => write!(f, "1")?,
                (1, Some(c)) => write!(f, "{c}*t")?,
                (1, None) => write!(f, "t")?,
                (k, Some(c)) => write!(f, "{c}*t^{k}")?,
                (k, None) => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// An element of `Q(t)`, kept reduced with the denominator an ordinary monic
/// polynomial in `t` with nonzero constant term. Any `t`-power and rational
/// scale live in the numerator, making the representation unique.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TRat {
    num: TPoly,
    den: TPoly,
}

impl TRat {
    pub fn new(num: TPoly, den: TPoly) -> crate::Result<Self> {
        if den.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return TRat {
                num: TPoly::zero(),
                den: TPoly::one(),
            };
        }
        let (sn, mut dn) = num.to_dense();
        let (sd, mut dd) = den.to_dense();
        let g = dense_gcd_monic(&dn, &dd);
        if g.len() > 1 {
            dn = dense_divrem(&dn, &g).0;
            dd = dense_divrem(&dd, &g).0;
        }
        let lead = dd.last().unwrap().clone();
        if !lead.is_one() {
            for c in dn.iter_mut() {
                *c /= &lead;
            }
            for c in dd.iter_mut() {
                *c /= &lead;
            }
        }
        TRat {
            num: TPoly::from_dense(sn - sd, &dn),
            den: TPoly::from_dense(0, &dd),
        }
    }

    pub fn zero() -> Self {
        TRat {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        TRat {
            num: TPoly::one(),
            den: TPoly::one(),
        }
    }

    pub fn t_pow(k: i64) -> Self {
        TRat {
            num: TPoly::t_pow(k),
            den: TPoly::one(),
        }
    }

    pub fn from_poly(p: TPoly) -> Self {
        TRat {
            num: p,
            den: TPoly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(TPoly::constant(c))
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&TPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> crate::Result<TRat> {
        if self.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &TRat) -> crate::Result<TRat> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact evaluation at `t = t0`; rejects `t0 = 0` and poles.
    pub fn specialize(&self, t0: &Rat) -> crate::Result<Rat> {
        let d = self.den.specialize(t0)?;
        if d.is_zero() {
            return Err(crate::Error::PoleAtEvaluationPoint);
        }
        Ok(self.num.specialize(t0)? / d)
    }
}

impl Add for &TRat {
    type Output = TRat;
    fn add(self, rhs: &TRat) -> TRat {
        TRat::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &TRat {
    type Output = TRat;
    fn sub(self, rhs: &TRat) -> TRat {
        self + &(-rhs)
    }
}

impl Mul for &TRat {
    type Output = TRat;
    fn mul(self, rhs: &TRat) -> TRat {
        TRat::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &TRat {
    type Output = TRat;
    fn neg(self) -> TRat {
        TRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned_binop!(TRat, Add, add);
forward_owned_binop!(TRat, Sub, sub);
forward_owned_binop!(TRat, Mul, mul);

impl Neg for TRat {
    type Output = TRat;
    fn neg(self) -> TRat {
        -&self
    }
}

impl fmt::Display for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
