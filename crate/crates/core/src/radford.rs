//! Radford's Yetter-Drinfeld action and the simple modules `H ⊳_β g`.
//!
//! For a character `β` of the grouplike group `G` and `g ∈ G`, the algebra
//! `H = H_{r,s}` acts on itself by `x ⊳_β a = Σ β(x_2) x_3 a S^op(x_1)`,
//! and `H ⊳_β g` is a simple Yetter-Drinfeld module; the pairs `(β, g)`
//! classify all simple modules up to isomorphism. On generators the action
//! reduces to
//!
//! ```text
//! f_i ⊳_β x   = -x f_i (w_i')^{-1} + β(w_i') f_i x (w_i')^{-1}
//! w_i' ⊳_β x  = β(w_i') w_i' x (w_i')^{-1}
//! ```
//!
//! extended to all of `H` through the left-module axiom `(xy) ⊳ a = x ⊳
//! (y ⊳ a)`.
//!
//! The action matrix over the full PBW basis is `ell^5 x ell^3`, but it is
//! block diagonal across the degree blocks `A_(u,v) = { f in F_ell :
//! deg_1 f = u, deg_2 f = v }`: the image of `A_(u,v)` under `⊳_β g` lies in
//! the span of `B_(u,v) = { f (w_1')^{-u} (w_2')^{-v} g : f in A_(u,v) }`.
//! Each block contributes the rank of a square matrix of size at most
//! `ell`, computed by exact column reduction.

use crate::borel::{BorelAlgebra, Element, Gen, GroupLike, Monomial};
use crate::linalg::CycMatrix;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

/// A character `β` of `G`, determined by `β(w_i') = q^{b_i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    pub b1: u32,
    pub b2: u32,
}

impl Character {
    pub fn new(ell: u32, b1: i64, b2: i64) -> Character {
        Character {
            b1: b1.rem_euclid(ell as i64) as u32,
            b2: b2.rem_euclid(ell as i64) as u32,
        }
    }

    /// The counit, `β = ε`.
    pub fn trivial() -> Character {
        Character { b1: 0, b2: 0 }
    }

    /// Exponent of `β(w_i')` as a power of `q`.
    pub fn exponent(&self, i: u8) -> i64 {
        match i {
            1 => self.b1 as i64,
            2 => self.b2 as i64,
            _ => panic!("generator index must be 1 or 2"),
        }
    }

    /// All `ell^2` characters, exponent-lexicographic, counit first.
    pub fn all(ell: u32) -> impl Iterator<Item = Character> {
        (0..ell).flat_map(move |b1| (0..ell).map(move |b2| Character { b1, b2 }))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b1, self.b2)
    }
}

/// Index of a degree block: `u = deg_1`, `v = deg_2`, with
/// `0 <= u, v <= 2(ell-1)` and `|u - v| <= ell - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockIndex {
    pub u: u32,
    pub v: u32,
}

/// Everything computed for one simple module `H ⊳_β g`.
#[derive(Debug, Clone)]
pub struct SimpleModuleReport {
    pub params: crate::borel::BorelParams,
    pub g: GroupLike,
    pub beta: Character,
    pub dimension: usize,
    /// Rank contributed by each nonempty degree block, in `(u,v)`
    /// lexicographic order.
    pub blocks: Vec<(BlockIndex, usize)>,
    /// A basis of the module, ordered by block and then by pivot position;
    /// each element has pivot coefficient 1.
    pub basis: Vec<Element>,
}

/// Internal consistency failure: an image escaped its degree block. This
/// indicates a bug, never a valid computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyError {
    pub block: BlockIndex,
    pub monomial: Monomial,
}

impl fmt::Display for ConsistencyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "internal consistency failure: image monomial {} escapes block ({},{})",
            self.monomial, self.block.u, self.block.v
        )
    }
}

impl std::error::Error for ConsistencyError {}

/// The action `⊳_β` of `H` on itself for one fixed character.
#[derive(Debug, Clone, Copy)]
pub struct RadfordAction<'a> {
    algebra: &'a BorelAlgebra,
    beta: Character,
}

impl<'a> RadfordAction<'a> {
    pub fn new(algebra: &'a BorelAlgebra, beta: Character) -> Self {
        RadfordAction { algebra, beta }
    }

    pub fn beta(&self) -> Character {
        self.beta
    }

    /// `β(w_i')` as a scalar.
    fn beta_scalar(&self, i: u8) -> &crate::cyclotomic::CycScalar {
        self.algebra.q(self.beta.exponent(i))
    }

    /// `w_i' ⊳_β x = β(w_i') w_i' x (w_i')^{-1}`.
    pub fn act_omega(&self, i: u8, x: &Element) -> Element {
        let h = self.algebra;
        let w = match i {
            1 => Gen::W1,
            2 => Gen::W2,
            _ => panic!("generator index must be 1 or 2"),
        };
        let conj = h.mul(&h.generator(w), x);
        let conj = match i {
            1 => h.mul_element_group(&conj, -1, 0),
            _ => h.mul_element_group(&conj, 0, -1),
        };
        h.scale(self.beta_scalar(i), &conj)
    }

    /// `f_i ⊳_β x = -x f_i (w_i')^{-1} + β(w_i') f_i x (w_i')^{-1}`.
    pub fn act_f(&self, i: u8, x: &Element) -> Element {
        let h = self.algebra;
        let fi = match i {
            1 => Gen::F1,
            2 => Gen::F2,
            _ => panic!("generator index must be 1 or 2"),
        };
        let (e1, e2) = match i {
            1 => (-1i64, 0i64),
            _ => (0, -1),
        };
        let xf = h.mul_element_group(&h.mul(x, &h.generator(fi)), e1, e2);
        let fx = h.mul_element_group(&h.mul(&h.generator(fi), x), e1, e2);
        h.sub(&h.scale(self.beta_scalar(i), &fx), &xf)
    }

    /// `F_21 ⊳_β x`, through `F_21 = f_2 f_1 - s f_1 f_2` and the
    /// left-module axiom.
    pub fn act_f21(&self, x: &Element) -> Element {
        let h = self.algebra;
        let lhs = self.act_f(2, &self.act_f(1, x));
        let rhs = h.scale(h.s(), &self.act_f(1, &self.act_f(2, x)));
        h.sub(&lhs, &rhs)
    }

    /// `(f_1^k F_21^t f_2^m) ⊳_β g`: the rightmost factor acts first.
    ///
    /// The monomial must have no group part.
    pub fn act_monomial(&self, w: &Monomial, g: &GroupLike) -> Element {
        assert!(w.is_group_free(), "act_monomial needs a group-free monomial");
        let mut acc = self.algebra.grouplike(g);
        for _ in 0..w.m {
            acc = self.act_f(2, &acc);
        }
        for _ in 0..w.t {
            acc = self.act_f21(&acc);
        }
        for _ in 0..w.k {
            acc = self.act_f(1, &acc);
        }
        acc
    }

    /// `x ⊳_β a` for arbitrary elements, by acting letter by letter
    /// (rightmost letter first) and extending linearly.
    pub fn act_element(&self, x: &Element, a: &Element) -> Element {
        let h = self.algebra;
        let mut out = h.zero_element();
        for (mono, coeff) in x.terms() {
            let mut acc = a.clone();
            for _ in 0..mono.b {
                acc = self.act_omega(2, &acc);
            }
            for _ in 0..mono.a {
                acc = self.act_omega(1, &acc);
            }
            for _ in 0..mono.m {
                acc = self.act_f(2, &acc);
            }
            for _ in 0..mono.t {
                acc = self.act_f21(&acc);
            }
            for _ in 0..mono.k {
                acc = self.act_f(1, &acc);
            }
            out = h.add(&out, &h.scale(coeff, &acc));
        }
        out
    }
}

/// The degree blocks `A_(u,v)` partitioning the group-free monomials
/// `F_ell`, in `(u,v)` lexicographic order. Within a block, monomials are
/// `f_1^(u-i) F_21^i f_2^(v-i)` ordered by increasing `i`.
pub fn block_partition(ell: u32) -> Vec<(BlockIndex, Vec<Monomial>)> {
    let mut blocks = Vec::new();
    let top = 2 * (ell - 1);
    for u in 0..=top {
        for v in 0..=top {
            if u.abs_diff(v) > ell - 1 {
                continue;
            }
            let lo = (u as i64 - (ell as i64 - 1))
                .max(v as i64 - (ell as i64 - 1))
                .max(0) as u32;
            let hi = u.min(v).min(ell - 1);
            let monos: Vec<Monomial> = (lo..=hi)
                .map(|i| Monomial::new(u - i, i, v - i, 0, 0))
                .collect();
            debug_assert!(!monos.is_empty());
            blocks.push((BlockIndex { u, v }, monos));
        }
    }
    blocks
}

/// Computes the simple module `H ⊳_β g`: per-block ranks, total dimension,
/// and an explicit basis.
pub fn simple_module(
    algebra: &BorelAlgebra,
    beta: Character,
    g: GroupLike,
) -> Result<SimpleModuleReport, ConsistencyError> {
    let action = RadfordAction::new(algebra, beta);
    let images = all_images(&action, &g);
    simple_module_from_images(algebra, beta, g, &images)
}

/// Images of every group-free monomial under `⊳_β g`, computed
/// incrementally through the left-module axiom: `ell + ell^2 + ell^3`
/// generator applications instead of one full recursion per monomial.
fn all_images(action: &RadfordAction, g: &GroupLike) -> BTreeMap<(u32, u32, u32), Element> {
    let ell = action.algebra.ell();
    let mut images = BTreeMap::new();
    let mut by_m = Vec::with_capacity(ell as usize);
    by_m.push(action.algebra.grouplike(g));
    for m in 1..ell {
        let next = action.act_f(2, &by_m[m as usize - 1]);
        by_m.push(next);
    }
    for (m, base) in by_m.iter().enumerate() {
        let mut by_t = base.clone();
        for t in 0..ell {
            if t > 0 {
                by_t = action.act_f21(&by_t);
            }
            let mut by_k = by_t.clone();
            for k in 0..ell {
                if k > 0 {
                    by_k = action.act_f(1, &by_k);
                }
                images.insert((k, t, m as u32), by_k.clone());
            }
        }
    }
    images
}

fn simple_module_from_images(
    algebra: &BorelAlgebra,
    beta: Character,
    g: GroupLike,
    images: &BTreeMap<(u32, u32, u32), Element>,
) -> Result<SimpleModuleReport, ConsistencyError> {
    let ell = algebra.ell();
    let field = algebra.field();
    let mut blocks = Vec::new();
    let mut basis = Vec::new();
    let mut dimension = 0usize;

    for (idx, monos) in block_partition(ell) {
        // B_(u,v): the same monomials shifted by the group factor
        // (w_1')^{-u} (w_2')^{-v} g, in the same order.
        let ga = (g.d1 as i64 - idx.u as i64).rem_euclid(ell as i64) as u32;
        let gb = (g.d2 as i64 - idx.v as i64).rem_euclid(ell as i64) as u32;
        let n = monos.len();
        let row_of: BTreeMap<Monomial, usize> = monos
            .iter()
            .enumerate()
            .map(|(row, w)| (Monomial::new(w.k, w.t, w.m, ga, gb), row))
            .collect();

        let mut matrix = CycMatrix::zero(field, n, n);
        for (col, w) in monos.iter().enumerate() {
            let image = &images[&(w.k, w.t, w.m)];
            for (mono, coeff) in image.terms() {
                let Some(&row) = row_of.get(mono) else {
                    return Err(ConsistencyError {
                        block: idx,
                        monomial: *mono,
                    });
                };
                matrix.set(row, col, coeff.clone());
            }
        }
        let red = matrix
            .column_reduce(field)
            .expect("block matrix entries share the algebra field");
        if red.rank > 0 {
            blocks.push((idx, red.rank));
            dimension += red.rank;
            for col in 0..red.rank {
                let terms = (0..n).map(|row| {
                    let w = &monos[row];
                    (
                        Monomial::new(w.k, w.t, w.m, ga, gb),
                        red.reduced.entry(row, col).clone(),
                    )
                });
                let elem = algebra
                    .element_from_terms(terms)
                    .expect("basis coefficients share the algebra field");
                basis.push(elem);
            }
        }
    }

    Ok(SimpleModuleReport {
        params: *algebra.params(),
        g,
        beta,
        dimension,
        blocks,
        basis,
    })
}

/// The result of sweeping all `ell^4` pairs `(g, β)`.
#[derive(Debug, Clone)]
pub struct Sweep {
    /// All reports, ordered by `g` then `β`, exponent-lexicographic.
    pub reports: Vec<SimpleModuleReport>,
    /// dimension -> number of pairs attaining it.
    pub multiset: BTreeMap<usize, usize>,
}

impl Sweep {
    /// Renders the multiset as `"d1^c1 d2^c2 ..."`, dimensions ascending.
    pub fn multiset_summary(&self) -> String {
        multiset_summary(&self.multiset)
    }
}

pub fn multiset_summary(multiset: &BTreeMap<usize, usize>) -> String {
    multiset
        .iter()
        .map(|(dim, count)| format!("{dim}^{count}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Computes `H ⊳_β g` for every pair, in deterministic order. The pairs
/// are evaluated in parallel; the collected output is identical to
/// sequential evaluation.
pub fn sweep(algebra: &BorelAlgebra) -> Result<Sweep, ConsistencyError> {
    let ell = algebra.ell();
    let pairs: Vec<(GroupLike, Character)> = algebra
        .params()
        .group_elements()
        .flat_map(|g| Character::all(ell).map(move |beta| (g, beta)))
        .collect();
    let reports: Result<Vec<_>, _> = pairs
        .par_iter()
        .map(|&(g, beta)| simple_module(algebra, beta, g))
        .collect();
    let reports = reports?;
    let mut multiset = BTreeMap::new();
    for r in &reports {
        *multiset.entry(r.dimension).or_insert(0) += 1;
    }
    Ok(Sweep { reports, multiset })
}
