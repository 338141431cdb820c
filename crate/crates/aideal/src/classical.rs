//! Commutative bivariate polynomials over `Q`, used by the `t = -1` layer:
//! gcd extraction, removal of `l - 1` factors, and the character-relation
//! expansion. Exponents may be negative (Laurent) for evaluation-style
//! checks; the gcd machinery requires ordinary polynomials.

use crate::coeff::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A commutative polynomial `Σ c_{p,q} l^p m^q` with exact rational
/// coefficients, canonical (no zero terms, sorted).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassicalPoly {
    terms: BTreeMap<(i64, i64), Rat>,
}

impl ClassicalPoly {
    pub fn zero() -> Self {
        ClassicalPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rat::one())
    }

    pub fn monomial(p: i64, q: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        ClassicalPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64, Rat)>>(raw: I) -> Self {
        let mut terms: BTreeMap<(i64, i64), Rat> = BTreeMap::new();
        for (p, q, c) in raw {
            let entry = terms.entry((p, q)).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        ClassicalPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(One::is_one) == Some(true)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &Rat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            let entry = terms.entry(*k).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        ClassicalPoly { terms }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        ClassicalPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<(i64, i64), Rat> = BTreeMap::new();
        for (&(a, b), ca) in &self.terms {
            for (&(p, q), cb) in &rhs.terms {
                let entry = terms.entry((a + p, b + q)).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        ClassicalPoly { terms }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ClassicalPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exact evaluation; nonzero arguments are required when negative
    /// exponents occur.
    pub fn eval(&self, l: &Rat, m: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(p, q), c) in &self.terms {
            acc += c * &rat_pow(l, p) * &rat_pow(m, q);
        }
        acc
    }

    /// Leading term in lex order with `l > m`.
    pub fn leading(&self) -> Option<((i64, i64), &Rat)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// Canonical normalization: integer-coprime coefficients with a positive
    /// leading (lex) coefficient.
    pub fn normalized_primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        for c in self.terms.values() {
            let scaled = c * Rat::from(den_lcm.clone());
            num_gcd = num_gcd.gcd(scaled.numer());
        }
        let factor = Rat::new(den_lcm, num_gcd);
        let mut out = self.scale(&factor);
        if out.leading().unwrap().1.is_negative() {
            out = out.neg();
        }
        out
    }

    fn is_laurent(&self) -> bool {
        self.terms.keys().any(|&(p, q)| p < 0 || q < 0)
    }
}

fn rat_pow(base: &Rat, k: i64) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    let b = if k < 0 { base.recip() } else { base.clone() };
    let mut acc = Rat::one();
    for _ in 0..k.unsigned_abs() {
        acc *= &b;
    }
    acc
}

// ---- gcd machinery: view Q[l,m] as (Q[m])[l] ----

/// Dense univariate polynomial in `m` over `Q`.
type UniM = Vec<Rat>;

fn uni_trim(mut v: UniM) -> UniM {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn uni_mul(a: &[Rat], b: &[Rat]) -> UniM {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    uni_trim(out)
}

fn uni_divrem(a: &[Rat], b: &[Rat]) -> (UniM, UniM) {
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
    (uni_trim(q), uni_trim(r))
}

fn uni_gcd_monic(a: &[Rat], b: &[Rat]) -> UniM {
    let mut x = uni_trim(a.to_vec());
    let mut y = uni_trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = uni_divrem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return x;
    }
    let lead = x.last().unwrap().clone();
    x.iter().map(|c| c / &lead).collect()
}

/// Coefficient vectors in `l`, each entry a polynomial in `m`.
fn to_l_coeffs(f: &ClassicalPoly) -> Vec<UniM> {
    assert!(!f.is_laurent(), "gcd requires ordinary polynomials");
    let ldeg = f.terms.keys().map(|&(p, _)| p).max().unwrap_or(0);
    let mut out: Vec<UniM> = vec![Vec::new(); (ldeg + 1) as usize];
    for (&(p, q), c) in &f.terms {
        let row = &mut out[p as usize];
        if row.len() <= q as usize {
            row.resize(q as usize + 1, Rat::zero());
        }
        row[q as usize] = c.clone();
    }
    out.iter().map(|v| uni_trim(v.clone())).collect()
}

fn from_l_coeffs(v: &[UniM]) -> ClassicalPoly {
    ClassicalPoly::from_terms(v.iter().enumerate().flat_map(|(p, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(q, c)| (p as i64, q as i64, c.clone()))
            .collect::<Vec<_>>()
    }))
}

fn l_trim(mut v: Vec<UniM>) -> Vec<UniM> {
    while v.last().is_some_and(|c| c.is_empty()) {
        v.pop();
    }
    v
}

/// Content in `Q[m]` of an element of `(Q[m])[l]`.
fn content_m(v: &[UniM]) -> UniM {
    let mut g: UniM = Vec::new();
    for row in v {
        if row.is_empty() {
            continue;
        }
        g = if g.is_empty() {
            row.clone()
        } else {
            uni_gcd_monic(&g, row)
        };
    }
    g
}

fn divide_content(v: &[UniM], content: &UniM) -> Vec<UniM> {
    v.iter()
        .map(|row| {
            if row.is_empty() {
                Vec::new()
            } else {
                let (q, r) = uni_divrem(row, content);
                debug_assert!(r.is_empty(), "content divides");
                q
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` in `(Q[m])[l]`.
fn pseudo_rem(a: &[UniM], b: &[UniM]) -> Vec<UniM> {
    let mut r = l_trim(a.to_vec());
    let b = l_trim(b.to_vec());
    let db = b.len() - 1;
    let lead_b = b.last().unwrap().clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lead_r = r.last().unwrap().clone();
        // r := lead_b * r - lead_r * l^{dr-db} * b
        let mut next: Vec<UniM> = r.iter().map(|row| uni_mul(row, &lead_b)).collect();
        for (i, brow) in b.iter().enumerate() {
            let idx = dr - db + i;
            let sub = uni_mul(brow, &lead_r);
            let mut row = next[idx].clone();
            let len = row.len().max(sub.len());
            row.resize(len, Rat::zero());
            for (j, s) in sub.iter().enumerate() {
                row[j] = &row[j] - s;
            }
            next[idx] = uni_trim(row);
        }
        r = l_trim(next);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Gcd in `Q[l,m]` by the primitive Euclidean remainder sequence in
/// `(Q[m])[l]` (Gauss: gcd = gcd of contents times gcd of primitive parts).
pub fn gcd(f: &ClassicalPoly, g: &ClassicalPoly) -> ClassicalPoly {
    if f.is_zero() {
        return g.normalized_primitive();
    }
    if g.is_zero() {
        return f.normalized_primitive();
    }
    let fv = l_trim(to_l_coeffs(f));
    let gv = l_trim(to_l_coeffs(g));
    let cf = content_m(&fv);
    let cg = content_m(&gv);
    let content_gcd = uni_gcd_monic(&cf, &cg);

    let mut a = divide_content(&fv, &cf);
    let mut b = divide_content(&gv, &cg);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() {
            r
        } else {
            let c = content_m(&r);
            divide_content(&r, &c)
        };
    }
    let pp_gcd = a;

    let combined: Vec<UniM> = pp_gcd
        .iter()
        .map(|row| uni_mul(row, &content_gcd))
        .collect();
    from_l_coeffs(&combined).normalized_primitive()
}

/// Exact division by `l - 1` when possible (remainder is `f` at `l = 1`).
pub fn div_l_minus_one(f: &ClassicalPoly) -> Option<ClassicalPoly> {
    if f.is_laurent() {
        return None;
    }
    let v = l_trim(to_l_coeffs(f));
    if v.is_empty() {
        return None;
    }
    // synthetic division by (l - 1): q_{k} = v_{k+1} + q_{k+1}, remainder v_0 + q_0
    let mut q: Vec<UniM> = vec![Vec::new(); v.len().saturating_sub(1)];
    let mut carry: UniM = Vec::new();
    for k in (0..v.len() - 1).rev() {
        let mut row = v[k + 1].clone();
        let len = row.len().max(carry.len());
        row.resize(len, Rat::zero());
        for (j, c) in carry.iter().enumerate() {
            row[j] = &row[j] + c;
        }
        let row = uni_trim(row);
        q[k] = row.clone();
        carry = row;
    }
    let mut rem = v[0].clone();
    let len = rem.len().max(carry.len());
    rem.resize(len, Rat::zero());
    for (j, c) in carry.iter().enumerate() {
        rem[j] = &rem[j] + c;
    }
    if uni_trim(rem).is_empty() {
        Some(from_l_coeffs(&q))
    } else {
        None
    }
}

impl fmt::Display for ClassicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(p, q), c) in self.terms.iter().rev() {
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
            let var = |name: &str, e: i64| match e {
                0 => String::new(),
                1 => name.to_string(),
                e => format!("{name}^{e}"),
            };
            let pps = [var("l", p), var("m", q)]
                .iter()
                .filter(|s| !s.is_empty())
                .cloned()
                .collect::<Vec<_>>()
                .join("*");
            let coeff = if mag.is_one() && !pps.is_empty() {
                String::new()
            } else if mag.is_integer() {
                format!("{}", mag.numer())
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            match (coeff.is_empty(), pps.is_empty()) {
                (true, _) => write!(f, "{pps}")?,
                (false, true) => write!(f, "{coeff}")?,
                (false, false) => write!(f, "{coeff}*{pps}")?,
            }
        }
        Ok(())
    }
}
