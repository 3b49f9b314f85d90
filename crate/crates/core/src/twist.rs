//! Group 2-cocycles on `G = (Z/ell)^2`, the twisted multiplication on
//! `H_{r,s}`, and the induced correspondence of simple Yetter-Drinfeld
//! modules.
//!
//! Every cohomology class of `G` has a representative
//!
//! ```text
//! σ(w_1^{i_1} w_2^{i_2}, w_1^{j_1} w_2^{j_2}) = q^(a12 * i_1 * j_2),
//! ```
//!
//! one for each `a12` in `Z/ell` (strictly upper triangular exponent
//! matrices; for two group generators that is a single entry). Such a
//! cocycle extends to the whole algebra through the grouplike projection,
//! and the twisted product of PBW monomials is
//! `x ·_σ y = σ(λ(x), λ(y)) σ^{-1}(ρ(x), ρ(y)) (x y)` where `λ, ρ` are the
//! left and right G-weights.
//!
//! Twisting `H_{r,s}` by `σ` with `q^{a12} = r (r')^{-1}` lands in
//! `H_{r',s'}` whenever `lcm(|r|,|s|) = lcm(|r'|,|s'|)` and `r' (s')^{-1} =
//! r s^{-1}`; simple modules correspond via `(H ⊳_β g)^σ ≅ H^σ ⊳_{β_{g,σ}}
//! g` with `β_{g,σ}(h) = β(h) σ(g,h) σ^{-1}(h,g)`.

use crate::borel::{BorelAlgebra, BorelParams, Element, Gen, GroupLike, Monomial};
use crate::cyclotomic::{CycField, CycScalar};
use crate::radford::{self, Character, ConsistencyError};
use std::fmt;

/// Errors from twist construction and verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistError {
    /// No cocycle can relate the two parameter pairs.
    IncompatibleParameters { reason: String },
    /// A sweep hit an internal consistency failure.
    Consistency(ConsistencyError),
}

impl fmt::Display for TwistError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistError::IncompatibleParameters { reason } => {
                write!(f, "incompatible parameters: {reason}")
            }
            TwistError::Consistency(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TwistError {}

impl From<ConsistencyError> for TwistError {
    fn from(e: ConsistencyError) -> Self {
        TwistError::Consistency(e)
    }
}

/// A normalized group 2-cocycle `σ(g, h) = q^(a12 * d1(g) * d2(h))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cocycle {
    ell: u32,
    a12: u32,
}

impl Cocycle {
    pub fn new(ell: u32, a12: i64) -> Cocycle {
        Cocycle {
            ell,
            a12: a12.rem_euclid(ell as i64) as u32,
        }
    }

    pub fn trivial(ell: u32) -> Cocycle {
        Cocycle { ell, a12: 0 }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn a12(&self) -> u32 {
        self.a12
    }

    pub fn is_trivial(&self) -> bool {
        self.a12 == 0
    }

    /// Exponent of `σ(g, h)` as a power of `q`.
    pub fn exponent(&self, g: &GroupLike, h: &GroupLike) -> i64 {
        self.a12 as i64 * g.d1 as i64 * h.d2 as i64
    }

    /// `σ(g, h)` as a scalar in the given field.
    pub fn eval(&self, field: &CycField, g: &GroupLike, h: &GroupLike) -> CycScalar {
        debug_assert_eq!(field.ell(), self.ell);
        field.root_power(self.exponent(g, h))
    }

    /// Pointwise product of cocycles within the representative family:
    /// exponents add mod `ell`.
    pub fn compose(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.ell, other.ell);
        Cocycle::new(self.ell, self.a12 as i64 + other.a12 as i64)
    }
}

/// The cocycle `σ` with `q^{a12} = r (r')^{-1}` relating `H_{r,s}` to
/// `H_{r',s'}`, i.e. `a12 = y - y' (mod ell)`.
///
/// Requires the twist-compatibility conditions: equal moduli (so equal
/// lcm of orders, both being `ell`) and `r'(s')^{-1} = r s^{-1}`.
pub fn sigma_for_pair(p: &BorelParams, p2: &BorelParams) -> Result<Cocycle, TwistError> {
    if p.ell() != p2.ell() {
        return Err(TwistError::IncompatibleParameters {
            reason: format!(
                "lcm of parameter orders differ: {} vs {}",
                p.ell(),
                p2.ell()
            ),
        });
    }
    let ell = p.ell() as i64;
    let diff = (p.y() as i64 - p.z() as i64).rem_euclid(ell);
    let diff2 = (p2.y() as i64 - p2.z() as i64).rem_euclid(ell);
    if diff != diff2 {
        return Err(TwistError::IncompatibleParameters {
            reason: format!(
                "r s^-1 != r' s'^-1: y - z = {diff} but y' - z' = {diff2} (mod {ell})"
            ),
        });
    }
    Ok(Cocycle::new(p.ell(), p.y() as i64 - p2.y() as i64))
}

/// The twisted character `β_{g,σ}`: `b1 -> b1 - d2 a12`, `b2 -> b2 + d1
/// a12` (mod `ell`).
pub fn beta_twisted(beta: &Character, g: &GroupLike, sigma: &Cocycle) -> Character {
    let ell = sigma.ell;
    let a = sigma.a12 as i64;
    Character::new(
        ell,
        beta.b1 as i64 - g.d2 as i64 * a,
        beta.b2 as i64 + g.d1 as i64 * a,
    )
}

/// The twisted product `x ·_σ y` inside `H_{r,s}`: for basis monomials,
/// `σ(λ(x), λ(y)) σ^{-1}(ρ(x), ρ(y)) (x y)`, extended bilinearly.
pub fn twisted_product(
    algebra: &BorelAlgebra,
    sigma: &Cocycle,
    x: &Element,
    y: &Element,
) -> Element {
    let mut out = algebra.zero_element();
    for (wx, cx) in x.terms() {
        let (lx, rx) = algebra.weights(wx);
        for (wy, cy) in y.terms() {
            let (ly, ry) = algebra.weights(wy);
            let e = sigma.exponent(&lx, &ly) - sigma.exponent(&rx, &ry);
            let coeff = algebra
                .field()
                .mul(cx, cy)
                .and_then(|c| algebra.field().mul(&c, algebra.q(e)))
                .expect("twisted product coefficients share the algebra field");
            let prod = algebra.mul(&algebra.monomial(*wx), &algebra.monomial(*wy));
            out = algebra.add(&out, &algebra.scale(&coeff, &prod));
        }
    }
    out
}

/// `x ·_σ x ·_σ ... ·_σ x` (`n` factors).
pub fn twisted_power(algebra: &BorelAlgebra, sigma: &Cocycle, x: &Element, n: u32) -> Element {
    let mut acc = algebra.one_element();
    for _ in 0..n {
        acc = twisted_product(algebra, sigma, &acc, x);
    }
    acc
}

/// One named identity checked inside the twisted algebra.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
}

/// Outcome of verifying that `(H_{r,s}, ·_σ)` satisfies the defining
/// relations of `H_{r',s'}`.
#[derive(Debug, Clone)]
pub struct PresentationReport {
    pub sigma: Cocycle,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Verifies, inside `(H_{r,s}, ·_σ)` with `σ = sigma_for_pair(p, p2)`:
/// both Serre relations of `H_{r',s'}`; the commutation scalars `c_{i,j}`
/// between `w_i'` and `f_j`; that `F_21` rebuilt with `s'` under `·_σ`
/// equals `F_21`; and that `ell`-th twisted powers of the PBW generators
/// vanish exactly when the ordinary ones do.
pub fn check_twisted_presentation(
    p: &BorelParams,
    p2: &BorelParams,
) -> Result<PresentationReport, TwistError> {
    let sigma = sigma_for_pair(p, p2)?;
    let h = BorelAlgebra::new(*p);
    let field = h.field();
    let ell = h.ell();
    let yp = p2.y() as i64;
    let zp = p2.z() as i64;
    // primed parameter scalars, as elements of the untwisted field
    let rp_inv = h.q(-yp);
    let sp_inv = h.q(-zp);
    let sp = h.q(zp);

    let f1 = h.generator(Gen::F1);
    let f2 = h.generator(Gen::F2);
    let tp = |x: &Element, y: &Element| twisted_product(&h, &sigma, x, y);

    let mut checks = Vec::new();

    // (R7) Serre relations of H_{r',s'} under the twisted product:
    // f_i^2 f_(i+1) - ((r')^-1 + (s')^-1) f_i f_(i+1) f_i
    //               + (r')^-1 (s')^-1 f_(i+1) f_i^2 = 0, and its mirror.
    let mid_coeff = field.add(rp_inv, sp_inv).expect("same field");
    let last_coeff = field.mul(rp_inv, sp_inv).expect("same field");
    {
        let t1 = tp(&tp(&f1, &f1), &f2);
        let t2 = tp(&tp(&f1, &f2), &f1);
        let t3 = tp(&tp(&f2, &f1), &f1);
        let serre1 = h.add(
            &h.sub(&t1, &h.scale(&mid_coeff, &t2)),
            &h.scale(&last_coeff, &t3),
        );
        checks.push(RelationCheck {
            name: "serre f1 f1 f2".into(),
            passed: serre1.is_zero(),
        });
    }
    {
        let t1 = tp(&tp(&f1, &f2), &f2);
        let t2 = tp(&tp(&f2, &f1), &f2);
        let t3 = tp(&tp(&f2, &f2), &f1);
        let serre2 = h.add(
            &h.sub(&t1, &h.scale(&mid_coeff, &t2)),
            &h.scale(&last_coeff, &t3),
        );
        checks.push(RelationCheck {
            name: "serre f1 f2 f2".into(),
            passed: serre2.is_zero(),
        });
    }

    // w_i' ·_σ f_j = c_ij f_j ·_σ w_i' with the primed scalar table:
    // s' for j = i-1, r'(s')^-1 for j = i, (r')^-1 for j = i+1.
    for i in [1u8, 2] {
        for j in [1u8, 2] {
            let cij = match (i, j) {
                (1, 1) | (2, 2) => h.q(yp - zp),
                (1, 2) => rp_inv,
                (2, 1) => sp,
                _ => unreachable!(),
            };
            let wi = h.generator(if i == 1 { Gen::W1 } else { Gen::W2 });
            let fj = if j == 1 { f1.clone() } else { f2.clone() };
            let lhs = tp(&wi, &fj);
            let rhs = h.scale(cij, &tp(&fj, &wi));
            checks.push(RelationCheck {
                name: format!("commutation w{i}' f{j}"),
                passed: lhs == rhs,
            });
        }
    }

    // F_21 rebuilt with s' under the twisted product equals F_21 itself.
    {
        let rebuilt = h.sub(&tp(&f2, &f1), &h.scale(sp, &tp(&f1, &f2)));
        checks.push(RelationCheck {
            name: "twisted F21 equals F21".into(),
            passed: rebuilt.is_monomial(&Monomial::f21()),
        });
    }

    // Twisted powers of a PBW generator x with left weight w satisfy
    // x^(σ,n) = σ(w, w)^C(n,2) x^n, so in particular they vanish exactly
    // when ordinary powers do (nonzero below ell, zero at ell).
    for (name, gen) in [("f1", Gen::F1), ("F21", Gen::F21), ("f2", Gen::F2)] {
        let x = h.generator(gen);
        let (w, _) = h.weights(&gen.monomial());
        let mut ok = true;
        for n in 1..=ell {
            let tw = twisted_power(&h, &sigma, &x, n);
            let plain = h.pow(&x, n);
            let binom = (n as i64) * (n as i64 - 1) / 2;
            let expected = h.scale(h.q(sigma.exponent(&w, &w) * binom), &plain);
            if tw != expected || (n < ell) == plain.is_zero() {
                ok = false;
                break;
            }
        }
        checks.push(RelationCheck {
            name: format!("nilpotency degree of {name} preserved"),
            passed: ok,
        });
    }

    Ok(PresentationReport { sigma, checks })
}

/// One row of the correspondence table: dimensions on both sides of the
/// twist for a single `(g, β)`.
#[derive(Debug, Clone, Copy)]
pub struct PairComparison {
    pub g: GroupLike,
    pub beta: Character,
    pub beta_twisted: Character,
    pub dim_source: usize,
    pub dim_target: usize,
}

impl PairComparison {
    pub fn matches(&self) -> bool {
        self.dim_source == self.dim_target
    }
}

/// Result of comparing all `ell^4` simple-module dimensions across a twist.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub sigma: Cocycle,
    pub comparisons: Vec<PairComparison>,
}

impl CorrespondenceReport {
    pub fn all_match(&self) -> bool {
        self.comparisons.iter().all(|c| c.matches())
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &PairComparison> {
        self.comparisons.iter().filter(|c| !c.matches())
    }
}

/// Checks `dim(H_{r,s} ⊳_β g) = dim(H_{r',s'} ⊳_{β_{g,σ}} g)` for every
/// pair `(g, β)`, sweeping each algebra once.
pub fn twist_correspondence_check(
    p: &BorelParams,
    p2: &BorelParams,
) -> Result<CorrespondenceReport, TwistError> {
    let sigma = sigma_for_pair(p, p2)?;
    let source = BorelAlgebra::new(*p);
    let target = BorelAlgebra::new(*p2);
    let sweep_source = radford::sweep(&source)?;
    let sweep_target = radford::sweep(&target)?;
    let ell = p.ell() as usize;
    let index = |g: &GroupLike, beta: &Character| {
        ((g.d1 as usize * ell + g.d2 as usize) * ell + beta.b1 as usize) * ell + beta.b2 as usize
    };
    let comparisons = sweep_source
        .reports
        .iter()
        .map(|rep| {
            let bt = beta_twisted(&rep.beta, &rep.g, &sigma);
            let dim_target = sweep_target.reports[index(&rep.g, &bt)].dimension;
            PairComparison {
                g: rep.g,
                beta: rep.beta,
                beta_twisted: bt,
                dim_source: rep.dimension,
                dim_target,
            }
        })
        .collect();
    Ok(CorrespondenceReport { sigma, comparisons })
}
