//! The restricted two-parameter quantum Borel algebra `H_{r,s}` of type
//! sl_3, presented on its PBW basis with canonical normal forms.
//!
//! Generators, in the canonical order `x_1 < x_2 < x_3 < x_4 < x_5`:
//!
//! ```text
//! x_1 = f_1,  x_2 = F_21 = f_2 f_1 - s f_1 f_2,  x_3 = f_2,
//! x_4 = w_1' (grouplike),  x_5 = w_2' (grouplike)
//! ```
//!
//! subject to `x_j x_i = C_ij x_i x_j + D_ij` for `i < j`, where the `C_ij`
//! are the scalars returned by [`BorelAlgebra::relation_table`], `D_13 =
//! F_21`, and all other `D_ij = 0`; and to the quotient relations `f_1^ell =
//! F_21^ell = f_2^ell = 0`, `(w_i')^ell = 1`. The PBW basis is
//!
//! ```text
//! f_1^k F_21^t f_2^m (w_1')^a (w_2')^b,   0 <= k,t,m,a,b < ell,
//! ```
//!
//! so `dim H_{r,s} = ell^5`. Here `r = q^y` and `s = q^z` for a fixed
//! primitive `ell`-th root of unity `q`.
//!
//! Products are normalized by rewriting out-of-order adjacent pairs; each
//! swap strictly decreases the number of order inversions of the word, and
//! the one nontrivial `D`-term replaces the pair `f_2 f_1` by the single
//! letter `F_21`, decreasing word length, so rewriting terminates.

use crate::cyclotomic::{CycError, CycField, CycScalar};
use num_integer::Integer;
use std::collections::{btree_map, BTreeMap};
use std::fmt;

const SAME_FIELD: &str = "element coefficients live in the algebra's field";

/// Parameter validation errors for `H_{r,s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamError {
    /// `ell` must be a positive modulus.
    NonpositiveModulus,
    /// The presentation requires `r != s`, i.e. `y != z (mod ell)`.
    EqualParameters { ell: u32, y: u32 },
    /// `ell` must be the least common multiple of the orders of `r` and `s`.
    OrderLcmMismatch { ell: u32, lcm: u32 },
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::NonpositiveModulus => write!(f, "ell must be >= 1"),
            ParamError::EqualParameters { ell, y } => {
                write!(f, "r = s is not allowed: y = z = {y} (mod {ell})")
            }
            ParamError::OrderLcmMismatch { ell, lcm } => write!(
                f,
                "lcm of the orders of r and s is {lcm}, but ell = {ell}"
            ),
        }
    }
}

impl std::error::Error for ParamError {}

/// Validated parameters `(ell, y, z)` encoding `r = q^y`, `s = q^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BorelParams {
    ell: u32,
    y: u32,
    z: u32,
}

impl BorelParams {
    /// Validates `r != s` and `lcm(|r|, |s|) = ell`; `y` and `z` are reduced
    /// mod `ell` first.
    pub fn new(ell: i64, y: i64, z: i64) -> Result<BorelParams, ParamError> {
        if ell < 1 {
            return Err(ParamError::NonpositiveModulus);
        }
        let ell = ell as u32;
        let y = y.rem_euclid(ell as i64) as u32;
        let z = z.rem_euclid(ell as i64) as u32;
        if y == z {
            return Err(ParamError::EqualParameters { ell, y });
        }
        let order = |e: u32| ell / e.gcd(&ell);
        let lcm = order(y).lcm(&order(z));
        if lcm != ell {
            return Err(ParamError::OrderLcmMismatch { ell, lcm });
        }
        Ok(BorelParams { ell, y, z })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Exponent of `r = q^y`.
    pub fn y(&self) -> u32 {
        self.y
    }

    /// Exponent of `s = q^z`.
    pub fn z(&self) -> u32 {
        self.z
    }

    /// All `ell^2` grouplike elements, exponent-lexicographic, identity
    /// first.
    pub fn group_elements(&self) -> impl Iterator<Item = GroupLike> {
        let ell = self.ell;
        (0..ell).flat_map(move |d1| (0..ell).map(move |d2| GroupLike { d1, d2 }))
    }
}

/// A PBW basis monomial `f_1^k F_21^t f_2^m (w_1')^a (w_2')^b`.
///
/// All exponents lie in `[0, ell)`; out-of-range nilpotent exponents denote
/// zero and are never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub k: u32,
    pub t: u32,
    pub m: u32,
    pub a: u32,
    pub b: u32,
}

impl Monomial {
    pub fn new(k: u32, t: u32, m: u32, a: u32, b: u32) -> Monomial {
        Monomial { k, t, m, a, b }
    }

    pub fn one() -> Monomial {
        Monomial::new(0, 0, 0, 0, 0)
    }

    pub fn f1() -> Monomial {
        Monomial::new(1, 0, 0, 0, 0)
    }

    pub fn f21() -> Monomial {
        Monomial::new(0, 1, 0, 0, 0)
    }

    pub fn f2() -> Monomial {
        Monomial::new(0, 0, 1, 0, 0)
    }

    pub fn w1() -> Monomial {
        Monomial::new(0, 0, 0, 1, 0)
    }

    pub fn w2() -> Monomial {
        Monomial::new(0, 0, 0, 0, 1)
    }

    /// `deg_1 = k + t`, additive on products.
    pub fn deg1(&self) -> u32 {
        self.k + self.t
    }

    /// `deg_2 = t + m`, additive on products.
    pub fn deg2(&self) -> u32 {
        self.t + self.m
    }

    /// True if the monomial has no group part.
    pub fn is_group_free(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True if the monomial is purely grouplike.
    pub fn is_grouplike(&self) -> bool {
        self.k == 0 && self.t == 0 && self.m == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: [(&str, u32); 5] = [
            ("f1", self.k),
            ("F21", self.t),
            ("f2", self.m),
            ("w1", self.a),
            ("w2", self.b),
        ];
        let mut wrote = false;
        for (name, e) in parts {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A grouplike element `(w_1')^{d_1} (w_2')^{d_2}`, exponents mod `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupLike {
    pub d1: u32,
    pub d2: u32,
}

impl GroupLike {
    pub fn new(ell: u32, d1: i64, d2: i64) -> GroupLike {
        GroupLike {
            d1: d1.rem_euclid(ell as i64) as u32,
            d2: d2.rem_euclid(ell as i64) as u32,
        }
    }

    pub fn identity() -> GroupLike {
        GroupLike { d1: 0, d2: 0 }
    }

    pub fn is_identity(&self) -> bool {
        self.d1 == 0 && self.d2 == 0
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(0, 0, 0, self.d1, self.d2)
    }

    pub fn mul(&self, other: &GroupLike, ell: u32) -> GroupLike {
        GroupLike {
            d1: (self.d1 + other.d1) % ell,
            d2: (self.d2 + other.d2) % ell,
        }
    }

    pub fn inverse(&self, ell: u32) -> GroupLike {
        GroupLike {
            d1: (ell - self.d1 % ell) % ell,
            d2: (ell - self.d2 % ell) % ell,
        }
    }
}

impl fmt::Display for GroupLike {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// The five presentation generators in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    F1,
    F21,
    F2,
    W1,
    W2,
}

impl Gen {
    /// Position in the canonical order, 1 through 5.
    pub fn index(self) -> u8 {
        match self {
            Gen::F1 => 1,
            Gen::F21 => 2,
            Gen::F2 => 3,
            Gen::W1 => 4,
            Gen::W2 => 5,
        }
    }

    pub fn monomial(self) -> Monomial {
        match self {
            Gen::F1 => Monomial::f1(),
            Gen::F21 => Monomial::f21(),
            Gen::F2 => Monomial::f2(),
            Gen::W1 => Monomial::w1(),
            Gen::W2 => Monomial::w2(),
        }
    }
}

/// A finite linear combination of PBW monomials with cyclotomic
/// coefficients. No stored term has a zero coefficient, so equality is
/// structural and iteration order is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, CycScalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Option<&CycScalar> {
        self.terms.get(mono)
    }

    /// True if the element is a single monomial with coefficient 1.
    pub fn is_monomial(&self, mono: &Monomial) -> bool {
        self.terms.len() == 1 && self.terms.get(mono).map(|c| c.is_one()).unwrap_or(false)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({coeff})*{mono}")?;
        }
        Ok(())
    }
}

/// The algebra `H_{r,s}` itself: owns the scalar field and the relation
/// data, and provides canonical normal forms for all products.
#[derive(Debug, Clone)]
pub struct BorelAlgebra {
    params: BorelParams,
    field: CycField,
    /// `q^0, ..., q^(ell-1)`.
    qpow: Vec<CycScalar>,
    /// `cm[m]` is the coefficient of the `F_21` branch when a single `f_1`
    /// letter crosses `f_2^m`: `sum_{i=0}^{m-1} s^i r^(m-1-i)`.
    cm: Vec<CycScalar>,
}

/// The presentation coefficients `C_ij` (and the one nonzero `D_ij`).
#[derive(Debug, Clone)]
pub struct RelationTable {
    coeffs: BTreeMap<(u8, u8), CycScalar>,
}

impl RelationTable {
    /// The scalar `C_ij` in `x_j x_i = C_ij x_i x_j + D_ij`, `1 <= i < j <= 5`.
    pub fn c(&self, i: u8, j: u8) -> &CycScalar {
        self.coeffs
            .get(&(i, j))
            .unwrap_or_else(|| panic!("C_{i}{j} requires 1 <= i < j <= 5"))
    }

    /// The element `D_ij`: the basis monomial `F_21` for `(i,j) = (1,3)`,
    /// `None` (zero) otherwise.
    pub fn d(&self, i: u8, j: u8) -> Option<Monomial> {
        assert!(1 <= i && i < j && j <= 5);
        ((i, j) == (1, 3)).then(Monomial::f21)
    }
}

impl BorelAlgebra {
    pub fn new(params: BorelParams) -> BorelAlgebra {
        let field = CycField::new(params.ell);
        let ell = params.ell;
        let qpow: Vec<CycScalar> = (0..ell).map(|e| field.root_power(e as i64)).collect();
        let y = params.y as i64;
        let z = params.z as i64;
        let mut cm = Vec::with_capacity(ell as usize);
        cm.push(field.zero());
        for m in 1..ell as i64 {
            let mut acc = field.zero();
            for i in 0..m {
                let e = (i * z + (m - 1 - i) * y).rem_euclid(ell as i64) as usize;
                acc = field.add(&acc, &qpow[e]).expect(SAME_FIELD);
            }
            cm.push(acc);
        }
        BorelAlgebra {
            params,
            field,
            qpow,
            cm,
        }
    }

    pub fn params(&self) -> &BorelParams {
        &self.params
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn ell(&self) -> u32 {
        self.params.ell
    }

    /// `q^e` for any integer exponent.
    pub fn q(&self, e: i64) -> &CycScalar {
        &self.qpow[e.rem_euclid(self.params.ell as i64) as usize]
    }

    /// `r = q^y`.
    pub fn r(&self) -> &CycScalar {
        &self.qpow[self.params.y as usize]
    }

    /// `s = q^z`.
    pub fn s(&self) -> &CycScalar {
        &self.qpow[self.params.z as usize]
    }

    /// Vector-space dimension `ell^5`.
    pub fn dimension(&self) -> u64 {
        (self.params.ell as u64).pow(5)
    }

    /// All `ell^5` basis monomials, lexicographic in `(k, t, m, a, b)`.
    pub fn basis_monomials(&self) -> impl Iterator<Item = Monomial> {
        let ell = self.params.ell;
        (0..ell).flat_map(move |k| {
            (0..ell).flat_map(move |t| {
                (0..ell).flat_map(move |m| {
                    (0..ell)
                        .flat_map(move |a| (0..ell).map(move |b| Monomial::new(k, t, m, a, b)))
                })
            })
        })
    }

    /// Exponent `e` with `C_ij = q^e`.
    fn c_exponent(&self, i: u8, j: u8) -> i64 {
        let y = self.params.y as i64;
        let z = self.params.z as i64;
        match (i, j) {
            (1, 2) | (2, 3) | (2, 5) => y,
            (1, 3) | (1, 5) => z,
            (2, 4) => -z,
            (3, 4) => -y,
            (1, 4) | (3, 5) => y - z,
            (4, 5) => 0,
            _ => panic!("C_{i}{j} requires 1 <= i < j <= 5"),
        }
    }

    /// The presentation coefficients as concrete scalars.
    pub fn relation_table(&self) -> RelationTable {
        let mut coeffs = BTreeMap::new();
        for i in 1..=5u8 {
            for j in i + 1..=5u8 {
                coeffs.insert((i, j), self.q(self.c_exponent(i, j)).clone());
            }
        }
        RelationTable { coeffs }
    }

    /// The scalar `lambda` with `g f_i = lambda f_i g`:
    /// `lambda = r^(d_i - d_(i-1)) s^(d_(i+1) - d_i)` with `d_0 = d_3 = 0`.
    pub fn group_conjugation_scalar(&self, i: u8, g: &GroupLike) -> CycScalar {
        self.q(self.conjugation_exponent(i, g)).clone()
    }

    /// Exponent form of [`Self::group_conjugation_scalar`].
    pub fn conjugation_exponent(&self, i: u8, g: &GroupLike) -> i64 {
        let y = self.params.y as i64;
        let z = self.params.z as i64;
        let d = [0i64, g.d1 as i64, g.d2 as i64, 0];
        let i = i as usize;
        assert!(i == 1 || i == 2, "generator index must be 1 or 2");
        y * (d[i] - d[i - 1]) + z * (d[i + 1] - d[i])
    }

    /// Left and right G-weights of a basis monomial: the grouplike legs
    /// under the two outer coproduct projections. For `f_1^k F_21^t f_2^m
    /// w_1^a w_2^b` the left weight is `(k+t+a, t+m+b)` and the right
    /// weight is `(a, b)`, mod `ell`.
    pub fn weights(&self, mono: &Monomial) -> (GroupLike, GroupLike) {
        let ell = self.params.ell;
        let left = GroupLike {
            d1: (mono.k + mono.t + mono.a) % ell,
            d2: (mono.t + mono.m + mono.b) % ell,
        };
        let right = GroupLike {
            d1: mono.a,
            d2: mono.b,
        };
        (left, right)
    }

    // ---- element construction ----

    pub fn zero_element(&self) -> Element {
        Element::zero()
    }

    pub fn one_element(&self) -> Element {
        self.monomial(Monomial::one())
    }

    /// The basis monomial as an element; out-of-range nilpotent exponents
    /// give zero, group exponents wrap mod `ell`.
    pub fn monomial(&self, mono: Monomial) -> Element {
        match self.normalize_monomial(mono) {
            Some(m) => {
                let mut terms = BTreeMap::new();
                terms.insert(m, self.field.one());
                Element { terms }
            }
            None => Element::zero(),
        }
    }

    pub fn generator(&self, gen: Gen) -> Element {
        self.monomial(gen.monomial())
    }

    pub fn grouplike(&self, g: &GroupLike) -> Element {
        self.monomial(g.monomial())
    }

    /// Builds an element from monomial/coefficient pairs, checking the
    /// scalar context and dropping zero coefficients.
    pub fn element_from_terms<I>(&self, terms: I) -> Result<Element, CycError>
    where
        I: IntoIterator<Item = (Monomial, CycScalar)>,
    {
        let mut acc = BTreeMap::new();
        for (mono, coeff) in terms {
            if coeff.ell() != self.field.ell() {
                return Err(CycError::ContextMismatch {
                    expected: self.field.ell(),
                    found: coeff.ell(),
                });
            }
            if let Some(m) = self.normalize_monomial(mono) {
                self.accumulate(&mut acc, m, coeff);
            }
        }
        Ok(Element { terms: acc })
    }

    fn normalize_monomial(&self, mono: Monomial) -> Option<Monomial> {
        let ell = self.params.ell;
        if mono.k >= ell || mono.t >= ell || mono.m >= ell {
            return None;
        }
        Some(Monomial::new(
            mono.k,
            mono.t,
            mono.m,
            mono.a % ell,
            mono.b % ell,
        ))
    }

    fn accumulate(&self, acc: &mut BTreeMap<Monomial, CycScalar>, mono: Monomial, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match acc.entry(mono) {
            btree_map::Entry::Occupied(mut e) => {
                let sum = self.field.add(e.get(), &c).expect(SAME_FIELD);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    // ---- linear operations ----

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        let mut terms = x.terms.clone();
        for (mono, c) in &y.terms {
            self.accumulate(&mut terms, *mono, c.clone());
        }
        Element { terms }
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &Element) -> Element {
        let terms = x
            .terms
            .iter()
            .map(|(m, c)| (*m, self.field.neg(c).expect(SAME_FIELD)))
            .collect();
        Element { terms }
    }

    pub fn scale(&self, c: &CycScalar, x: &Element) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        let terms = x
            .terms
            .iter()
            .map(|(m, v)| (*m, self.field.mul(c, v).expect(SAME_FIELD)))
            .collect();
        Element { terms }
    }

    // ---- multiplication ----

    /// The product `x * y` in `H_{r,s}`, canonically normalized onto the
    /// PBW basis.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = BTreeMap::new();
        for (wy, cy) in &y.terms {
            // multiply all of x by the letters of wy, one letter at a time
            let mut acc = x.clone();
            for _ in 0..wy.k {
                acc = self.mul_element_gen(&acc, Gen::F1);
            }
            for _ in 0..wy.t {
                acc = self.mul_element_gen(&acc, Gen::F21);
            }
            for _ in 0..wy.m {
                acc = self.mul_element_gen(&acc, Gen::F2);
            }
            let acc = self.mul_element_group(&acc, wy.a as i64, wy.b as i64);
            for (mono, cx) in acc.terms {
                let c = self.field.mul(&cx, cy).expect(SAME_FIELD);
                self.accumulate(&mut out, mono, c);
            }
        }
        Element { terms: out }
    }

    /// `x^n` by repeated multiplication.
    pub fn pow(&self, x: &Element, n: u32) -> Element {
        let mut acc = self.one_element();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Right-multiplication of an element by a single generator letter.
    fn mul_element_gen(&self, x: &Element, gen: Gen) -> Element {
        let mut out = BTreeMap::new();
        for (mono, c) in &x.terms {
            for (m2, c2) in self.mul_monomial_gen(mono, gen) {
                let c = self.field.mul(c, &c2).expect(SAME_FIELD);
                self.accumulate(&mut out, m2, c);
            }
        }
        Element { terms: out }
    }

    /// Right-multiplication of an element by `w_1^e1 w_2^e2` (any integer
    /// exponents). The group part simply shifts: nothing stands to the
    /// right of the group generators in the canonical order.
    pub fn mul_element_group(&self, x: &Element, e1: i64, e2: i64) -> Element {
        if e1 == 0 && e2 == 0 {
            return x.clone();
        }
        let ell = self.params.ell as i64;
        let terms = x
            .terms
            .iter()
            .map(|(m, c)| {
                let a = (m.a as i64 + e1).rem_euclid(ell) as u32;
                let b = (m.b as i64 + e2).rem_euclid(ell) as u32;
                (Monomial::new(m.k, m.t, m.m, a, b), c.clone())
            })
            .collect();
        Element { terms }
    }

    /// `P * x_gen` for a basis monomial `P`, as at most two normalized
    /// terms. The scalars collect one relation coefficient per adjacent
    /// swap as the new letter moves left into position; only `f_1` crossing
    /// `f_2^m` branches, via `f_2 f_1 = s f_1 f_2 + F_21`.
    fn mul_monomial_gen(&self, p: &Monomial, gen: Gen) -> Vec<(Monomial, CycScalar)> {
        let ell = self.params.ell;
        let y = self.params.y as i64;
        let z = self.params.z as i64;
        let (k, t, m) = (p.k, p.t, p.m);
        let (a, b) = (p.a as i64, p.b as i64);
        match gen {
            Gen::W1 => vec![(
                Monomial::new(k, t, m, (p.a + 1) % ell, p.b),
                self.field.one(),
            )],
            Gen::W2 => vec![(
                Monomial::new(k, t, m, p.a, (p.b + 1) % ell),
                self.field.one(),
            )],
            Gen::F2 => {
                if m + 1 >= ell {
                    return vec![];
                }
                // past w_2^b: C_35 = r s^{-1}; past w_1^a: C_34 = r^{-1}
                let e = (y - z) * b - y * a;
                vec![(Monomial::new(k, t, m + 1, p.a, p.b), self.q(e).clone())]
            }
            Gen::F21 => {
                if t + 1 >= ell {
                    return vec![];
                }
                // past w_2^b: C_25 = r; past w_1^a: C_24 = s^{-1};
                // past f_2^m: C_23 = r
                let e = y * b - z * a + y * m as i64;
                vec![(Monomial::new(k, t + 1, m, p.a, p.b), self.q(e).clone())]
            }
            Gen::F1 => {
                // past w_2^b: C_15 = s; past w_1^a: C_14 = r s^{-1}
                let outer = z * b + (y - z) * a;
                let mut out = Vec::with_capacity(2);
                if k + 1 < ell {
                    // straight-through branch: past f_2^m costs s^m, then
                    // past F_21^t costs C_12 = r per swap
                    let e = outer + z * m as i64 + y * t as i64;
                    out.push((Monomial::new(k + 1, t, m, p.a, p.b), self.q(e).clone()));
                }
                if m >= 1 && t + 1 < ell {
                    let c = self
                        .field
                        .mul(self.q(outer), &self.cm[m as usize])
                        .expect(SAME_FIELD);
                    if !c.is_zero() {
                        out.push((Monomial::new(k, t + 1, m - 1, p.a, p.b), c));
                    }
                }
                out
            }
        }
    }
}
