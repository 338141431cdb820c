//! End-to-end workflows: peripheral generators → A-basis, the `t = -1`
//! specialization down to A-polynomial data, and the orthogonality check of
//! peripheral generators against colored bracket sequences.

use crate::action::{op_of_skein, pair_apply, z_unknot, ZSeq};
use crate::classical::{self, ClassicalPoly};
use crate::coeff::{rat_int, Rat, TRat};
use crate::plane::{saturate_monomials, GroebnerBasis, PlanePoly};
use crate::skein::{CurveIndex, SkeinElement};
use crate::torus::Shift;
use std::fmt;

/// Where a knot's colored bracket sequence comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KappaHandle {
    /// A sequence the library can generate to any depth, by name.
    /// `"unknot"` is the only shipped builtin.
    Builtin(String),
    /// An externally supplied sequence of fixed length.
    Data(ZSeq),
}

/// Peripheral-ideal input data for one knot.
#[derive(Clone, Debug)]
pub struct KnotData {
    pub name: String,
    pub generator_exprs: Vec<String>,
    pub peripheral_gens: Vec<SkeinElement>,
    /// Which curve bounds in the solid torus the generators were computed
    /// against; must be `(1,0)` or `(0,1)`.
    pub bounding_curve: CurveIndex,
    pub kappa: Option<KappaHandle>,
}

impl KnotData {
    pub fn new(
        name: String,
        generator_exprs: Vec<String>,
        bounding_curve: CurveIndex,
        kappa: Option<KappaHandle>,
    ) -> crate::Result<Self> {
        let valid = (bounding_curve.p(), bounding_curve.q()) == (1, 0)
            || (bounding_curve.p(), bounding_curve.q()) == (0, 1);
        if !valid {
            return Err(crate::Error::Format(format!(
                "bounding_curve must be (1,0) or (0,1), got ({},{})",
                bounding_curve.p(),
                bounding_curve.q()
            )));
        }
        if generator_exprs.is_empty() {
            return Err(crate::Error::EmptyIdeal);
        }
        let mut peripheral_gens = Vec::with_capacity(generator_exprs.len());
        for expr in &generator_exprs {
            peripheral_gens.push(crate::parse::parse_skein(expr)?);
        }
        Ok(KnotData {
            name,
            generator_exprs,
            peripheral_gens,
            bounding_curve,
            kappa,
        })
    }

    /// The unknot, with the peripheral generators in the convention where
    /// the `(0,1)` curve bounds in the complement-side solid torus.
    pub fn unknot() -> Self {
        KnotData::new(
            "unknot".to_string(),
            vec![
                "L(0,1) + t^2 + t^-2".to_string(),
                "L(1,1) + t^-3 * L(1,0)".to_string(),
            ],
            CurveIndex::new(0, 1).expect("curve"),
            Some(KappaHandle::Builtin("unknot".to_string())),
        )
        .expect("builtin unknot data is well formed")
    }
}

/// The computed A-basis together with the clearing data and conventions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABasisResult {
    pub basis: GroebnerBasis<TRat>,
    pub shifts: Vec<Shift>,
    pub convention: CurveIndex,
    pub t_symbolic: bool,
}

/// Peripheral generators → torus images → cleared plane generators →
/// monomial-saturated minimal reduced Gröbner basis.
pub fn peripheral_to_abasis(k: &KnotData) -> crate::Result<ABasisResult> {
    if k.peripheral_gens.is_empty() {
        return Err(crate::Error::EmptyIdeal);
    }
    let mut cleared = Vec::with_capacity(k.peripheral_gens.len());
    let mut shifts = Vec::with_capacity(k.peripheral_gens.len());
    for g in &k.peripheral_gens {
        let (plane, shift) = g.value().clear_to_plane()?;
        cleared.push(plane);
        shifts.push(shift);
    }
    let basis = saturate_monomials(&cleared)?;
    Ok(ABasisResult {
        basis,
        shifts,
        convention: k.bounding_curve,
        t_symbolic: true,
    })
}

/// The sign-corrected variable exchange `σ(l) = -m`, `σ(m) = -l` on a
/// commutative polynomial: `l^p m^q ↦ (-1)^{p+q} l^q m^p`. An involution.
pub fn swap_classical(f: &ClassicalPoly) -> ClassicalPoly {
    ClassicalPoly::from_terms(f.terms().map(|((p, q), c)| {
        let sign = if (p + q) % 2 == 0 {
            Rat::from_integer(1.into())
        } else {
            Rat::from_integer((-1).into())
        };
        (q, p, c * &sign)
    }))
}

/// Specializes every basis coefficient at `t = -1` (the plane is then
/// commutative) and applies the `l ↔ -m` exchange.
pub fn specialize_and_swap(b: &ABasisResult) -> crate::Result<Vec<ClassicalPoly>> {
    specialize_and_swap_polys(b.basis.polys())
}

/// As [`specialize_and_swap`], for a bare list of plane polynomials.
pub fn specialize_and_swap_polys(polys: &[PlanePoly<TRat>]) -> crate::Result<Vec<ClassicalPoly>> {
    let minus_one = rat_int(-1);
    let mut out = Vec::with_capacity(polys.len());
    for f in polys {
        let specialized = f.specialize(&minus_one)?;
        let classical =
            ClassicalPoly::from_terms(specialized.terms().map(|((p, q), c)| (p, q, c.clone())));
        out.push(swap_classical(&classical));
    }
    Ok(out)
}

/// Generator of the smallest principal ideal containing the specialized
/// ideal: the gcd of the inputs, normalized to integer-coprime coefficients
/// with a positive leading coefficient. This is the principal closure, not a
/// radical.
pub fn b_polynomial(ps: &[ClassicalPoly]) -> crate::Result<ClassicalPoly> {
    let nonzero: Vec<&ClassicalPoly> = ps.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(crate::Error::EmptyIdeal);
    }
    let mut acc = nonzero[0].normalized_primitive();
    for f in &nonzero[1..] {
        acc = classical::gcd(&acc, f);
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}

/// Removes every `l - 1` factor from `B`.
pub fn a_polynomial(b_poly: &ClassicalPoly) -> crate::Result<ClassicalPoly> {
    if b_poly.is_zero() {
        return Err(crate::Error::ZeroElement("B polynomial"));
    }
    let mut acc = b_poly.clone();
    while let Some(quot) = classical::div_l_minus_one(&acc) {
        acc = quot;
    }
    Ok(acc.normalized_primitive())
}

/// Symbolic witness that the branched-cover trace triple
/// `x = l + l^-1, y = m + m^-1, z = lm + l^-1 m^-1` satisfies
/// `x^2 + y^2 + z^2 - xyz - 4 = 0` in the commutative Laurent ring.
pub fn character_cover_check() -> bool {
    character_cover_residual(rat_int(4)).is_zero()
}

/// The expansion `x^2 + y^2 + z^2 - xyz - constant` for the triple above;
/// zero exactly when `constant = 4`.
pub fn character_cover_residual(constant: Rat) -> ClassicalPoly {
    let one = Rat::from_integer(1.into());
    let x = ClassicalPoly::from_terms([(1, 0, one.clone()), (-1, 0, one.clone())]);
    let y = ClassicalPoly::from_terms([(0, 1, one.clone()), (0, -1, one.clone())]);
    let z = ClassicalPoly::from_terms([(1, 1, one.clone()), (-1, -1, one)]);
    x.mul(&x)
        .add(&y.mul(&y))
        .add(&z.mul(&z))
        .sub(&x.mul(&y).mul(&z))
        .sub(&ClassicalPoly::monomial(0, 0, constant))
}

/// Result of pairing one translated generator against the bracket sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub expression: String,
    pub translated: SkeinElement,
    /// Colors `c ≤ depth` where the pairing is nonzero; empty means PASS.
    pub failures: Vec<usize>,
}

impl GeneratorCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.failures.first().copied()
    }
}

/// Orthogonality report for all generators of a knot, through a given depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub knot: String,
    pub depth: usize,
    pub checks: Vec<GeneratorCheck>,
}

impl OrthogonalityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

impl fmt::Display for OrthogonalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "orthogonality check: knot {}, depth {}",
            self.knot, self.depth
        )?;
        for check in &self.checks {
            match check.first_failure() {
                None => writeln!(f, "  PASS  {}", check.expression)?,
                Some(c) => writeln!(
                    f,
                    "  FAIL  {} (first nonzero pairing at color {c})",
                    check.expression
                )?,
            }
        }
        Ok(())
    }
}

fn resolve_kappa(handle: &KappaHandle, len: usize) -> crate::Result<ZSeq> {
    match handle {
        KappaHandle::Builtin(name) if name == "unknot" => Ok(z_unknot(len)),
        KappaHandle::Builtin(name) => Err(crate::Error::Format(format!(
            "unknown builtin kappa sequence '{name}'"
        ))),
        KappaHandle::Data(z) => Ok(z.clone()),
    }
}

/// Translates each peripheral generator to the action convention (the
/// bounding curve of the acting solid torus is `(0,1)`, so generators stated
/// with `(0,1)` bounding on the complement side are direction-swapped),
/// builds its band operator, and pairs it against the bracket sequence for
/// every color `c ≤ depth`.
pub fn verify_orthogonality(k: &KnotData, depth: usize) -> crate::Result<OrthogonalityReport> {
    let handle = k.kappa.as_ref().ok_or(crate::Error::MissingKappa)?;
    let swap = (k.bounding_curve.p(), k.bounding_curve.q()) == (0, 1);
    let mut checks = Vec::with_capacity(k.peripheral_gens.len());
    for (expr, gen) in k.generator_exprs.iter().zip(&k.peripheral_gens) {
        let translated = if swap {
            gen.swap_directions()
        } else {
            gen.clone()
        };
        // probe construction to learn the truncation margin
        let probe = op_of_skein(&translated, 8);
        let margin = probe.width() + probe.pad();
        let op = op_of_skein(&translated, depth + margin);
        let z = resolve_kappa(handle, depth + op.width())?;
        let vals = pair_apply(&op, &z, depth)?;
        let failures: Vec<usize> = vals
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, _)| c)
            .collect();
        checks.push(GeneratorCheck {
            expression: expr.clone(),
            translated,
            failures,
        });
    }
    Ok(OrthogonalityReport {
        knot: k.name.clone(),
        depth,
        checks,
    })
}
