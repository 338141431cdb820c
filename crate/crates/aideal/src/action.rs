//! The action of the torus skein algebra on the (completed) skein module of
//! the solid torus, in the basis `{S_c}` of Jones–Wenzl colored cores.
//!
//! Operators are matrices of bounded width over `Q(t)`, truncated to colors
//! `0..=trunc`. The assignment is a homomorphism with respect to the torus
//! product: `M(u * v) = M(u) M(v)` for Θ-invariant `u, v` (equivalently an
//! antihomomorphism for the skein stacking product). Base cases: the curve
//! `(0,q)` acts diagonally with eigenvalue `(-1)^q (t^{2q(c+1)} +
//! t^{-2q(c+1)})` on `S_c`, and `(1,0)` maps `S_c` to `S_{c+1} + S_{c-1}`.
//! Everything else is assembled from the product-to-sum recursion; the
//! closed forms are certified by the kernel-generator and relator identities
//! in the tests rather than assumed.
//!
//! Truncation policy: a product of truncated matrices corrupts entries near
//! the truncation edge. Each operator tracks a `pad` of untrusted top
//! rows/columns alongside its band `width`; every comparison and pairing
//! stays below `trunc - width - pad`.

use crate::coeff::{rat_int, TPoly, TRat};
use crate::linalg;
use crate::skein::{phat_curve, CurveIndex, SkeinElement};
use std::collections::BTreeMap;
use std::fmt;

/// A band matrix over `Q(t)` acting on colors `0..=trunc`, stored by
/// columns: `cols[c]` maps a row index to the coefficient of `S_row` in the
/// image of `S_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandOperator {
    trunc: usize,
    width: usize,
    pad: usize,
    cols: Vec<BTreeMap<usize, TRat>>,
}

impl BandOperator {
    fn empty(trunc: usize, width: usize, pad: usize) -> Self {
        BandOperator {
            trunc,
            width,
            pad,
            cols: vec![BTreeMap::new(); trunc + 1],
        }
    }

    pub fn identity(trunc: usize) -> Self {
        let mut op = Self::empty(trunc, 0, 0);
        for c in 0..=trunc {
            op.cols[c].insert(c, TRat::one());
        }
        op
    }

    pub fn zero(trunc: usize) -> Self {
        Self::empty(trunc, 0, 0)
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pad(&self) -> usize {
        self.pad
    }

    /// Depth below which entries are guaranteed exact.
    pub fn reliable_depth(&self) -> usize {
        self.trunc.saturating_sub(self.width + self.pad)
    }

    pub fn entry(&self, row: usize, col: usize) -> TRat {
        self.cols
            .get(col)
            .and_then(|c| c.get(&row))
            .cloned()
            .unwrap_or_else(TRat::zero)
    }

    fn set(&mut self, row: usize, col: usize, v: TRat) {
        if !v.is_zero() {
            self.cols[col].insert(row, v);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc, rhs.trunc, "operator truncations must agree");
        let mut out = Self::empty(self.trunc, self.width.max(rhs.width), self.pad.max(rhs.pad));
        for c in 0..=self.trunc {
            let mut col = self.cols[c].clone();
            for (r, v) in &rhs.cols[c] {
                let entry = col.entry(*r).or_insert_with(TRat::zero);
                *entry = &*entry + v;
            }
            col.retain(|_, v| !v.is_zero());
            out.cols[c] = col;
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-TRat::one()))
    }

    pub fn scale(&self, f: &TRat) -> Self {
        let mut out = Self::empty(self.trunc, self.width, self.pad);
        if f.is_zero() {
            return out;
        }
        for c in 0..=self.trunc {
            out.cols[c] = self.cols[c].iter().map(|(r, v)| (*r, v * f)).collect();
        }
        out
    }

    /// Matrix product. Widths add; the untrusted pad grows by the combined
    /// width, since edge columns lose contributions beyond the truncation.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc, rhs.trunc, "operator truncations must agree");
        let trunc = self.trunc;
        let width = (self.width + rhs.width).min(trunc);
        let pad = (self.pad.max(rhs.pad) + self.width + rhs.width).min(trunc);
        let mut out = Self::empty(trunc, width, pad);
        for c in 0..=trunc {
            let mut col: BTreeMap<usize, TRat> = BTreeMap::new();
            for (k, bv) in &rhs.cols[c] {
                for (r, av) in &self.cols[*k] {
                    let term = av * bv;
                    let entry = col.entry(*r).or_insert_with(TRat::zero);
                    *entry = &*entry + &term;
                }
            }
            col.retain(|_, v| !v.is_zero());
            out.cols[c] = col;
        }
        out
    }

    /// Equality of all entries with both indices at most `depth`.
    pub fn agrees_with(&self, rhs: &Self, depth: usize) -> bool {
        for c in 0..=depth.min(self.trunc).min(rhs.trunc) {
            let rows: std::collections::BTreeSet<usize> = self.cols[c]
                .keys()
                .chain(rhs.cols[c].keys())
                .copied()
                .filter(|r| *r <= depth)
                .collect();
            for r in rows {
                if self.entry(r, c) != rhs.entry(r, c) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every entry with both indices at most `depth` vanishes.
    pub fn is_zero_to(&self, depth: usize) -> bool {
        self.agrees_with(&Self::zero(self.trunc), depth)
    }
}

impl fmt::Display for BandOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "band operator, trunc {}, width {}, pad {}",
            self.trunc, self.width, self.pad
        )?;
        for c in 0..=self.trunc.min(5) {
            write!(f, "  S_{c} -> ")?;
            let mut first = true;
            for (r, v) in &self.cols[c] {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({v}) S_{r}")?;
            }
            if first {
                write!(f, "0")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Diagonal operator of the curve `(0,q)`, `q ≥ 1`: eigenvalue
/// `(-1)^q (t^{2q(c+1)} + t^{-2q(c+1)})` on `S_c`. At `q = 1, c = 0` this is
/// `-(t^2 + t^-2)`, as the kernel generator `L(0,1) + t^2 + t^-2` of the
/// solid-torus map demands.
pub fn op_diag_power(q: i64, trunc: usize) -> BandOperator {
    assert!(q >= 1, "diagonal curve power must be positive");
    let mut op = BandOperator::empty(trunc, 0, 0);
    let sign = if q % 2 == 0 { 1 } else { -1 };
    for c in 0..=trunc {
        let e = 2 * q * (c as i64 + 1);
        let v = TPoly::from_terms([(e, rat_int(sign)), (-e, rat_int(sign))]);
        op.set(c, c, TRat::from_poly(v));
    }
    op
}

/// The core-parallel curve `(1,0)`: `S_c ↦ S_{c+1} + S_{c-1}`, `S_{-1} = 0`.
pub fn op_core(trunc: usize) -> BandOperator {
    let mut op = BandOperator::empty(trunc, 1, 0);
    for c in 0..=trunc {
        if c < trunc {
            op.set(c + 1, c, TRat::one());
        }
        if c >= 1 {
            op.set(c - 1, c, TRat::one());
        }
    }
    op
}

/// The operator `2·I` standing in for the degenerate index `(0,0)` in the
/// product-to-sum recursion.
fn op_two(trunc: usize) -> BandOperator {
    BandOperator::identity(trunc).scale(&TRat::from_rat(rat_int(2)))
}

/// Operator of `e_{p,q} + e_{-p,-q}` for an arbitrary index, reading `(0,0)`
/// as the doubled unit.
fn op_pair(p: i64, q: i64, trunc: usize) -> BandOperator {
    if (p, q) == (0, 0) {
        op_two(trunc)
    } else {
        op_curve(CurveIndex::new(p, q).expect("nonzero index"), trunc)
    }
}

/// Operator of a curve, assembled by the product-to-sum recursion
/// `M(L(p,q)) = t^{-q} [ M(L(1,0)) M(L(p-1,q)) - t^{-q} M(L(p-2,q)) ]`
/// over the diagonal and core base cases. The `(1,q)` column is solved from
/// the two orderings of `L(0,1)` against `L(1,q∓1)`, which differ by the
/// determinant twist.
pub fn op_curve(c: CurveIndex, trunc: usize) -> BandOperator {
    let (p, q) = (c.p(), c.q());
    if p == 0 {
        return op_diag_power(q, trunc);
    }
    if (p, q) == (1, 0) {
        return op_core(trunc);
    }

    let d1 = op_diag_power(1, trunc);
    let gap = TRat::from_poly(&TPoly::t_pow(2) - &TPoly::t_pow(-2));

    // climb |q| in the p = 1 column
    let mut x = op_core(trunc);
    let mut k: i64 = 0;
    while k != q {
        x = if q > 0 {
            // (t^2 - t^-2) L(1,k+1) = t L(1,k)*L(0,1) - t^-1 L(0,1)*L(1,k)
            x.mul(&d1)
                .scale(&TRat::t_pow(1))
                .sub(&d1.mul(&x).scale(&TRat::t_pow(-1)))
        } else {
            // (t^2 - t^-2) L(1,k-1) = t L(0,1)*L(1,k) - t^-1 L(1,k)*L(0,1)
            d1.mul(&x)
                .scale(&TRat::t_pow(1))
                .sub(&x.mul(&d1).scale(&TRat::t_pow(-1)))
        };
        x = x.scale(&TRat::one().div(&gap).unwrap());
        k += if q > 0 { 1 } else { -1 };
    }
    if p == 1 {
        return x;
    }

    let core = op_core(trunc);
    let mut prev = op_pair(0, q, trunc); // p-2 level start
    let mut cur = x; // p-1 level start
    for _ in 2..=p {
        let next = core
            .mul(&cur)
            .sub(&prev.scale(&TRat::t_pow(-q)))
            .scale(&TRat::t_pow(-q));
        prev = cur;
        cur = next;
    }
    cur
}

/// Linear extension of the curve operators over the Θ-invariant basis:
/// `M(c_0 + Σ c_i (e_{p_i,q_i} + e_{-p_i,-q_i})) = c_0 I + Σ c_i M(L_i)`.
pub fn op_of_skein(s: &SkeinElement, trunc: usize) -> BandOperator {
    let (constant, curves) = s.decompose();
    let mut acc = BandOperator::identity(trunc).scale(&TRat::from_poly(constant));
    for (c, coeff) in curves {
        let op = op_curve(c, trunc).scale(&TRat::from_poly(coeff));
        acc = acc.add(&op);
    }
    acc
}

/// Provenance of a colored bracket sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZSource {
    Builtin(String),
    File(String),
}

/// A colored Kauffman bracket sequence `c ↦ κ(c)`, `c = 0..len-1`. The
/// color-0 value is the bracket of the empty link, which is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeq {
    kappa: Vec<TRat>,
    source: ZSource,
}

impl ZSeq {
    pub fn from_values(kappa: Vec<TRat>, source: ZSource) -> crate::Result<Self> {
        if kappa.first().map(|k| k.is_one()) != Some(true) {
            return Err(crate::Error::BadKappaHead);
        }
        Ok(ZSeq { kappa, source })
    }

    /// Escape hatch for sequences that deliberately violate the head
    /// invariant (corruption experiments and error-path tests).
    pub fn from_values_unchecked(kappa: Vec<TRat>, source: ZSource) -> Self {
        ZSeq { kappa, source }
    }

    pub fn values(&self) -> &[TRat] {
        &self.kappa
    }

    pub fn get(&self, c: usize) -> Option<&TRat> {
        self.kappa.get(c)
    }

    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }

    pub fn source(&self) -> &ZSource {
        &self.source
    }
}

/// Colored Kauffman brackets of the 0-framed unknot through color `n`,
/// by the three-term recursion `κ(c+1) = -(t^2+t^-2) κ(c) - κ(c-1)` from
/// `κ(0) = 1`. Closed form: `(-1)^c (t^{2(c+1)} - t^{-2(c+1)}) / (t^2 - t^-2)`.
pub fn z_unknot(n: usize) -> ZSeq {
    let ring = TPoly::from_terms([(2, rat_int(-1)), (-2, rat_int(-1))]); // -(t^2+t^-2)
    let mut kappa: Vec<TRat> = Vec::with_capacity(n + 1);
    let mut prev = TPoly::zero();
    let mut cur = TPoly::one();
    for _ in 0..=n {
        kappa.push(TRat::from_poly(cur.clone()));
        let next = &(&ring * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    ZSeq {
        kappa,
        source: ZSource::Builtin("unknot".to_string()),
    }
}

/// Evaluates the functional `α·Z` on `S_c` for `c = 0..=n`:
/// `(α·Z)(S_c) = Σ_{c'} κ(c') · entry(c', c)`. The operator must be
/// truncated at least `n + width + pad` deep so every contribution is exact,
/// and the sequence must cover `n + width` colors.
pub fn pair_apply(op: &BandOperator, z: &ZSeq, n: usize) -> crate::Result<Vec<TRat>> {
    let needed = n + op.width + op.pad;
    if op.trunc < needed {
        return Err(crate::Error::InsufficientTruncation {
            needed,
            have: op.trunc,
        });
    }
    if z.len() < n + op.width + 1 {
        return Err(crate::Error::InsufficientTruncation {
            needed: n + op.width,
            have: z.len().saturating_sub(1),
        });
    }
    let mut out = Vec::with_capacity(n + 1);
    for c in 0..=n {
        let mut acc = TRat::zero();
        for (r, v) in &op.cols[c] {
            let k = z.get(*r).expect("sequence length checked");
            if !k.is_zero() {
                acc = &acc + &(k * v);
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Exact nullspace probe of the annihilator of a bracket sequence: finds all
/// `a_0 + Σ a_{p,q} L(p,q)` (canonical indices, `|p| ≤ pmax`, `|q| ≤ qmax`)
/// whose pairing against `z` vanishes for every color `c ≤ n`. Solutions are
/// certified only to depth `n`; callers must treat them as candidates.
pub fn annihilator_search(
    z: &ZSeq,
    pmax: i64,
    qmax: i64,
    n: usize,
) -> crate::Result<Vec<SkeinElement>> {
    if z.values().iter().all(|k| k.is_zero()) {
        return Err(crate::Error::DegenerateSequence);
    }
    let mut curves: Vec<CurveIndex> = Vec::new();
    for q in 1..=qmax {
        curves.push(CurveIndex::new(0, q)?);
    }
    for p in 1..=pmax {
        for q in -qmax..=qmax {
            curves.push(CurveIndex::new(p, q)?);
        }
    }
    curves.sort();
    let unknowns = curves.len() + 1;
    if n < unknowns {
        return Err(crate::Error::InsufficientTruncation {
            needed: unknowns,
            have: n,
        });
    }

    // probe construction at a shallow truncation to learn each margin
    let probe = 2 * (pmax.unsigned_abs() as usize + qmax.unsigned_abs() as usize) + 2;
    let margin = curves
        .iter()
        .map(|c| {
            let op = op_curve(*c, probe);
            op.width() + op.pad()
        })
        .max()
        .unwrap_or(0);

    let trunc = n + margin;
    let mut columns: Vec<Vec<TRat>> = Vec::with_capacity(unknowns);
    columns.push(pair_apply(&BandOperator::identity(trunc), z, n)?);
    for c in &curves {
        columns.push(pair_apply(&op_curve(*c, trunc), z, n)?);
    }

    let rows: Vec<Vec<TRat>> = (0..=n)
        .map(|c| columns.iter().map(|col| col[c].clone()).collect())
        .collect();
    let kernel = linalg::nullspace(&rows, unknowns);

    let mut out = Vec::with_capacity(kernel.len());
    for v in kernel {
        let prim = linalg::primitive_vector(&v);
        let mut s = SkeinElement::scalar(prim[0].clone());
        for (i, c) in curves.iter().enumerate() {
            s = s.add(&phat_curve(*c).scale(&prim[i + 1]));
        }
        out.push(s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::skein_mul;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn curve(p: i64, q: i64) -> CurveIndex {
        CurveIndex::new(p, q).unwrap()
    }

    fn tp(terms: &[(i64, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(k, c)| (k, rat_int(c))))
    }

    #[test]
    fn diagonal_eigenvalues() {
        let d1 = op_diag_power(1, 8);
        // q=1, c=0: the kernel generator forces -(t^2 + t^-2)
        assert_eq!(d1.entry(0, 0), TRat::from_poly(tp(&[(2, -1), (-2, -1)])));
        // general c
        for c in 0..=6i64 {
            let e = 2 * (c + 1);
            assert_eq!(
                d1.entry(c as usize, c as usize),
                TRat::from_poly(tp(&[(e, -1), (-e, -1)]))
            );
        }
        // q=2, c=0
        let d2 = op_diag_power(2, 8);
        assert_eq!(d2.entry(0, 0), TRat::from_poly(tp(&[(4, 1), (-4, 1)])));
        // cross-check: L(0,1)*L(0,1) = L(0,2) + 2  =>  D2 = D1^2 - 2I
        let rhs = d1.mul(&d1).sub(&op_two(8));
        assert!(d2.agrees_with(&rhs, rhs.reliable_depth()));
    }

    #[test]
    fn core_shifts() {
        let c = op_core(6);
        // S_0 -> S_1
        assert_eq!(c.entry(1, 0), TRat::one());
        assert_eq!(c.entry(0, 0), TRat::zero());
        // S_3 -> S_4 + S_2
        assert_eq!(c.entry(4, 3), TRat::one());
        assert_eq!(c.entry(2, 3), TRat::one());
        assert_eq!(c.entry(3, 3), TRat::zero());
        // band arithmetic
        assert!(c.mul(&c).width() <= 2);
    }

    #[test]
    fn curve_base_cases() {
        assert_eq!(op_curve(curve(0, 1), 10), op_diag_power(1, 10));
        assert_eq!(op_curve(curve(1, 0), 10), op_core(10));
    }

    /// Frozen closed form of the (1,1) operator, derived by solving the two
    /// orderings of the transverse product: column c carries -t^{-2c-3} at
    /// row c+1 and -t^{2c+1} at row c-1.
    #[test]
    fn curve_one_one_matrix() {
        let z = op_curve(curve(1, 1), 12);
        assert_eq!(z.width(), 1);
        for c in 0..=(z.reliable_depth() - 1) as i64 {
            assert_eq!(
                z.entry(c as usize + 1, c as usize),
                -TRat::t_pow(-2 * c - 3)
            );
            if c >= 1 {
                assert_eq!(z.entry(c as usize - 1, c as usize), -TRat::t_pow(2 * c + 1));
            }
            assert_eq!(z.entry(c as usize, c as usize), TRat::zero());
        }
    }

    #[test]
    fn product_to_sum_as_operators() {
        // M(L(1,0)) M(L(0,1)) = t M(L(1,1)) + t^-1 M(L(1,-1))
        let trunc = 16;
        let lhs = op_core(trunc).mul(&op_diag_power(1, trunc));
        let rhs = op_curve(curve(1, 1), trunc)
            .scale(&TRat::t_pow(1))
            .add(&op_curve(curve(1, -1), trunc).scale(&TRat::t_pow(-1)));
        let depth = lhs.reliable_depth().min(rhs.reliable_depth());
        assert!(lhs.agrees_with(&rhs, depth));
    }

    #[test]
    fn kernel_generators_kill_the_empty_skein() {
        // the solid-torus kernel generators annihilate S_0 (column 0)
        let trunc = 10;
        let g1 = op_of_skein(
            &phat_curve(curve(0, 1)).add(&SkeinElement::scalar(tp(&[(2, 1), (-2, 1)]))),
            trunc,
        );
        assert!(g1.cols[0].is_empty());
        let g2 = op_of_skein(
            &phat_curve(curve(1, 1)).add(&phat_curve(curve(1, 0)).scale_t_pow(-3)),
            trunc,
        );
        assert!(g2.cols[0].is_empty());
    }

    #[test]
    fn op_of_skein_is_multiplicative_on_torus_products() {
        let trunc = 36;
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..12 {
            let mut draw = || loop {
                let (p, q) = (rng.gen_range(0..=2), rng.gen_range(-2..=2i64));
                if (p, q) != (0, 0) {
                    return curve(p, q);
                }
            };
            let a = draw();
            let b = draw();
            let sa = phat_curve(a);
            let sb = phat_curve(b);
            // torus-order product: qt_mul(a, b) maps to M(a) M(b);
            // the skein stacking product reverses, so feed skein_mul(b, a).
            let prod = skein_mul(&sb, &sa);
            let lhs = op_of_skein(&prod, trunc);
            let rhs = op_of_skein(&sa, trunc).mul(&op_of_skein(&sb, trunc));
            let depth = lhs.reliable_depth().min(rhs.reliable_depth());
            assert!(depth >= 8, "want a usable window, got {depth}");
            assert!(lhs.agrees_with(&rhs, depth), "failed for {a} * {b}");
        }
    }

    #[test]
    fn relators_hold_as_operator_identities() {
        let trunc = 24;
        let mx = op_diag_power(1, trunc);
        let my = op_core(trunc);
        let mz = op_curve(curve(1, 1), trunc);
        let gap = TRat::from_poly(&TPoly::t_pow(2) - &TPoly::t_pow(-2));
        // skein xy maps to M(y) M(x)
        let r2 = my
            .mul(&mx)
            .scale(&TRat::t_pow(1))
            .sub(&mx.mul(&my).scale(&TRat::t_pow(-1)))
            .sub(&mz.scale(&gap));
        assert!(r2.is_zero_to(r2.reliable_depth()));

        let two = TRat::from_rat(rat_int(2));
        let cubic = mx
            .mul(&mx)
            .scale(&TRat::t_pow(2))
            .add(&my.mul(&my).scale(&TRat::t_pow(-2)))
            .add(&mz.mul(&mz).scale(&TRat::t_pow(2)))
            .sub(&mz.mul(&my).mul(&mx).scale(&TRat::t_pow(1)))
            .sub(
                &BandOperator::identity(trunc)
                    .scale(&(&two * &TRat::from_poly(tp(&[(2, 1), (-2, 1)])))),
            );
        assert!(cubic.is_zero_to(cubic.reliable_depth()));
    }

    #[test]
    fn unknot_brackets() {
        let z = z_unknot(8);
        assert!(z.get(0).unwrap().is_one());
        assert_eq!(
            z.get(1).unwrap(),
            &TRat::from_poly(tp(&[(2, -1), (-2, -1)]))
        );
        assert_eq!(
            z.get(2).unwrap(),
            &TRat::from_poly(tp(&[(4, 1), (0, 1), (-4, 1)]))
        );
        // closed form (-1)^c (t^{2(c+1)} - t^{-2(c+1)}) / (t^2 - t^-2)
        for c in 0..=8i64 {
            let sign = if c % 2 == 0 { 1 } else { -1 };
            let num = tp(&[(2 * (c + 1), sign), (-2 * (c + 1), -sign)]);
            let den = tp(&[(2, 1), (-2, 1), (0, 0)]);
            let den = &den - &tp(&[(-2, 2)]); // t^2 - t^-2
            let expected = TRat::new(num, den).unwrap();
            assert_eq!(z.get(c as usize).unwrap(), &expected);
        }
    }

    #[test]
    fn pair_apply_identity_and_truncation_guard() {
        let z = z_unknot(12);
        let id = BandOperator::identity(12);
        let vals = pair_apply(&id, &z, 12).unwrap();
        assert_eq!(vals.as_slice(), z.values());
        let c = op_core(12);
        assert!(matches!(
            pair_apply(&c, &z, 12),
            Err(crate::Error::InsufficientTruncation { .. })
        ));
    }

    #[test]
    fn translated_generators_annihilate_unknot() {
        let n = 40;
        let g1 = phat_curve(curve(1, 0)).add(&SkeinElement::scalar(tp(&[(2, 1), (-2, 1)])));
        let g2 = phat_curve(curve(1, 1)).add(&phat_curve(curve(0, 1)).scale_t_pow(-3));
        for g in [g1, g2] {
            let op = op_of_skein(&g, n + 8);
            let z = z_unknot(n + 8);
            let vals = pair_apply(&op, &z, n).unwrap();
            assert!(vals.iter().all(|v| v.is_zero()), "generator {g}");
        }
        // the untranslated generator fails at c = 1 but passes at c = 0
        let bad = phat_curve(curve(0, 1)).add(&SkeinElement::scalar(tp(&[(2, 1), (-2, 1)])));
        let op = op_of_skein(&bad, 20);
        let vals = pair_apply(&op, &z_unknot(20), 10).unwrap();
        assert!(vals[0].is_zero());
        assert!(!vals[1].is_zero());
    }

    #[test]
    fn annihilator_search_unknot() {
        let z = z_unknot(40);
        let found = annihilator_search(&z, 1, 1, 20).unwrap();
        assert!(!found.is_empty());
        // verify candidates annihilate to depth 20 again through pair_apply
        for s in &found {
            let op = op_of_skein(s, 32);
            let vals = pair_apply(&op, &z_unknot(32), 20).unwrap();
            assert!(vals.iter().all(|v| v.is_zero()), "candidate {s}");
        }
        // depth must cover the unknown count
        assert_eq!(
            annihilator_search(&z, 1, 1, 3),
            Err(crate::Error::InsufficientTruncation { needed: 5, have: 3 })
        );
        // P = Q = 0 leaves only the constant, which cannot annihilate
        let found = annihilator_search(&z, 0, 0, 5).unwrap();
        assert!(found.is_empty());
        let zero =
            ZSeq::from_values_unchecked(vec![TRat::zero(); 10], ZSource::Builtin("zero".into()));
        assert_eq!(
            annihilator_search(&zero, 1, 1, 20),
            Err(crate::Error::DegenerateSequence)
        );
    }

    #[test]
    fn zseq_head_validation() {
        assert!(ZSeq::from_values(
            vec![TRat::one(), TRat::zero()],
            ZSource::Builtin("x".into())
        )
        .is_ok());
        assert_eq!(
            ZSeq::from_values(vec![TRat::zero()], ZSource::Builtin("x".into())),
            Err(crate::Error::BadKappaHead)
        );
        assert_eq!(
            ZSeq::from_values(vec![], ZSource::Builtin("x".into())),
            Err(crate::Error::BadKappaHead)
        );
    }
}
