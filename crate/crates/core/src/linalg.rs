//! Dense exact linear algebra over `Q(zeta_ell)`: column reduction, rank,
//! and basis extraction.
//!
//! The matrices that arise downstream are small (at most `ell x ell` per
//! block), so a plain dense representation with exact field elimination is
//! the right tool; no fraction-free or modular shortcuts.

use crate::cyclotomic::{CycError, CycField, CycScalar};

/// A dense row-major matrix over one cyclotomic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<CycScalar>,
}

/// Result of [`CycMatrix::column_reduce`].
#[derive(Debug, Clone)]
pub struct ColumnReduction {
    /// Column-reduced Gauss normal form: pivot entries are 1, each pivot is
    /// the first nonzero entry of its column scanning top to bottom, and the
    /// pivot row is zero in every other column. Nonzero columns come first.
    pub reduced: CycMatrix,
    /// Number of nonzero columns of `reduced`.
    pub rank: usize,
    /// Row index of the pivot of each nonzero column, strictly increasing.
    pub pivot_rows: Vec<usize>,
}

impl CycMatrix {
    /// Builds a matrix from row-major entries, checking that all entries
    /// live in the same field context.
    pub fn new(rows: usize, cols: usize, entries: Vec<CycScalar>) -> Result<CycMatrix, CycError> {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        if let Some(first) = entries.first() {
            for e in &entries[1..] {
                if e.ell() != first.ell() {
                    return Err(CycError::ContextMismatch {
                        expected: first.ell(),
                        found: e.ell(),
                    });
                }
            }
        }
        Ok(CycMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(field: &CycField, rows: usize, cols: usize) -> CycMatrix {
        CycMatrix {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &CycField, n: usize) -> CycMatrix {
        let mut m = CycMatrix::zero(field, n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &CycScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut CycScalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycScalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn transpose(&self, field: &CycField) -> CycMatrix {
        let mut out = CycMatrix::zero(field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.entry(r, c).clone());
            }
        }
        out
    }

    /// One column as a vector of scalars.
    pub fn column(&self, c: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    fn check_field(&self, field: &CycField) -> Result<(), CycError> {
        for e in &self.entries {
            if e.ell() != field.ell() {
                return Err(CycError::ContextMismatch {
                    expected: field.ell(),
                    found: e.ell(),
                });
            }
        }
        Ok(())
    }

    /// Column-reduced Gauss normal form by exact field operations.
    ///
    /// Pivot choice is deterministic: scan rows top to bottom, and for each
    /// row take the leftmost not-yet-reduced column with a nonzero entry.
    pub fn column_reduce(&self, field: &CycField) -> Result<ColumnReduction, CycError> {
        self.check_field(field)?;
        let mut m = self.clone();
        let mut next = 0usize; // columns [0, next) hold pivots already
        let mut pivot_rows = Vec::new();
        for row in 0..m.rows {
            if next == m.cols {
                break;
            }
            let Some(pc) = (next..m.cols).find(|&c| !m.entry(row, c).is_zero()) else {
                continue;
            };
            m.swap_columns(next, pc);
            // scale the pivot column so the pivot entry becomes 1
            let inv = field.inv(m.entry(row, next))?;
            for r in row..m.rows {
                let v = field.mul(m.entry(r, next), &inv)?;
                m.set(r, next, v);
            }
            // clear the pivot row in every other column
            for c in 0..m.cols {
                if c == next || m.entry(row, c).is_zero() {
                    continue;
                }
                let factor = m.entry(row, c).clone();
                for r in row..m.rows {
                    let t = field.mul(m.entry(r, next), &factor)?;
                    let v = field.sub(m.entry(r, c), &t)?;
                    m.set(r, c, v);
                }
            }
            pivot_rows.push(row);
            next += 1;
        }
        Ok(ColumnReduction {
            reduced: m,
            rank: next,
            pivot_rows,
        })
    }

    /// Rank, i.e. the number of nonzero columns of the reduced form.
    pub fn rank(&self, field: &CycField) -> Result<usize, CycError> {
        Ok(self.column_reduce(field)?.rank)
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(field: &CycField, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> CycMatrix {
        let ell = field.ell() as i64;
        let entries = (0..rows * cols)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    field.zero()
                } else {
                    let e = rng.gen_range(0..ell);
                    let c = rng.gen_range(-3i64..=3);
                    field
                        .mul(&field.from_integer(c), &field.root_power(e))
                        .unwrap()
                }
            })
            .collect();
        CycMatrix::new(rows, cols, entries).unwrap()
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let f = CycField::new(5);
        for (r, c) in [(1, 1), (3, 2), (4, 7)] {
            assert_eq!(CycMatrix::zero(&f, r, c).rank(&f).unwrap(), 0);
        }
    }

    #[test]
    fn identity_has_full_rank() {
        let f = CycField::new(4);
        for n in 1..=5 {
            let red = CycMatrix::identity(&f, n).column_reduce(&f).unwrap();
            assert_eq!(red.rank, n);
            assert_eq!(red.pivot_rows, (0..n).collect::<Vec<_>>());
            assert_eq!(red.reduced, CycMatrix::identity(&f, n));
        }
    }

    #[test]
    fn proportional_columns_have_rank_one() {
        // [[1, z], [z, -1]] over Q(zeta_4): column 2 = z * column 1,
        // verified here by exact multiplication before asserting the rank.
        let f = CycField::new(4);
        let z = f.root_power(1);
        let m = CycMatrix::new(
            2,
            2,
            vec![
                f.one(),
                z.clone(),
                z.clone(),
                f.from_integer(-1),
            ],
        )
        .unwrap();
        for r in 0..2 {
            let scaled = f.mul(m.entry(r, 0), &z).unwrap();
            assert_eq!(&scaled, m.entry(r, 1));
        }
        assert_eq!(m.rank(&f).unwrap(), 1);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let f = CycField::new(5);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = random_matrix(&f, &mut rng, rows, cols);
            let t = m.transpose(&f);
            assert_eq!(m.rank(&f).unwrap(), t.rank(&f).unwrap());
        }
    }

    #[test]
    fn duplicated_column_drops_rank() {
        let f = CycField::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let n = rng.gen_range(2..=5);
            let mut m = random_matrix(&f, &mut rng, n, n);
            let src = rng.gen_range(0..n);
            let mut dst = rng.gen_range(0..n);
            if dst == src {
                dst = (dst + 1) % n;
            }
            for r in 0..n {
                m.set(r, dst, m.entry(r, src).clone());
            }
            assert!(m.rank(&f).unwrap() < n);
        }
    }

    /// Test oracle: determinant by cofactor expansion, fully exact.
    fn det(field: &CycField, m: &CycMatrix) -> CycScalar {
        let n = m.rows();
        assert_eq!(n, m.cols());
        if n == 1 {
            return m.entry(0, 0).clone();
        }
        let mut acc = field.zero();
        for c in 0..n {
            if m.entry(0, c).is_zero() {
                continue;
            }
            let mut sub = CycMatrix::zero(field, n - 1, n - 1);
            for r in 1..n {
                let mut cc = 0;
                for k in 0..n {
                    if k == c {
                        continue;
                    }
                    sub.set(r - 1, cc, m.entry(r, k).clone());
                    cc += 1;
                }
            }
            let minor = det(field, &sub);
            let signed = if c % 2 == 0 {
                field.mul(m.entry(0, c), &minor).unwrap()
            } else {
                field
                    .neg(&field.mul(m.entry(0, c), &minor).unwrap())
                    .unwrap()
            };
            acc = field.add(&acc, &signed).unwrap();
        }
        acc
    }

    #[test]
    fn vandermonde_at_distinct_roots_has_full_rank() {
        // 3x3 Vandermonde at 1, zeta_5, zeta_5^2: nonzero determinant by
        // exact cofactor expansion, hence rank 3.
        let f = CycField::new(5);
        let pts = [f.root_power(0), f.root_power(1), f.root_power(2)];
        let mut m = CycMatrix::zero(&f, 3, 3);
        for (r, p) in pts.iter().enumerate() {
            for c in 0..3 {
                m.set(r, c, f.pow(p, c as i64).unwrap());
            }
        }
        assert!(!det(&f, &m).is_zero());
        assert_eq!(m.rank(&f).unwrap(), 3);
    }

    #[test]
    fn rank_invariant_under_column_scaling_and_permutation() {
        let f = CycField::new(4);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let m = random_matrix(&f, &mut rng, rows, cols);
            let base = m.rank(&f).unwrap();
            assert!(base <= rows.min(cols));
            let mut scaled = m.clone();
            for c in 0..cols {
                let s = f.root_power(rng.gen_range(0..4));
                for r in 0..rows {
                    let v = f.mul(scaled.entry(r, c), &s).unwrap();
                    scaled.set(r, c, v);
                }
            }
            assert_eq!(scaled.rank(&f).unwrap(), base);
            let mut permuted = m.clone();
            if cols >= 2 {
                permuted.swap_columns(0, cols - 1);
            }
            assert_eq!(permuted.rank(&f).unwrap(), base);
        }
    }

    /// Test oracle: solve R x = v for x by forward substitution against the
    /// reduced form's pivot structure, then confirm the combination exactly.
    fn reproduce_column(
        field: &CycField,
        red: &ColumnReduction,
        target: &[CycScalar],
    ) -> bool {
        // Coefficients are read off at the pivot rows; correctness is then
        // checked by multiplying out.
        let coeffs: Vec<CycScalar> = red
            .pivot_rows
            .iter()
            .map(|&r| target[r].clone())
            .collect();
        let mut recon = vec![field.zero(); target.len()];
        for (j, coeff) in coeffs.iter().enumerate() {
            for (r, slot) in recon.iter_mut().enumerate() {
                let t = field.mul(red.reduced.entry(r, j), coeff).unwrap();
                *slot = field.add(slot, &t).unwrap();
            }
        }
        recon == target.to_vec()
    }

    #[test]
    fn reduced_columns_span_the_original_column_space() {
        let f = CycField::new(5);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = random_matrix(&f, &mut rng, rows, cols);
            let red = m.column_reduce(&f).unwrap();
            assert_eq!(red.rank, red.pivot_rows.len());
            for c in 0..cols {
                assert!(
                    reproduce_column(&f, &red, &m.column(c)),
                    "column {c} not reproducible"
                );
            }
            // columns beyond the rank are zero
            for c in red.rank..cols {
                assert!(red.reduced.column(c).iter().all(|e| e.is_zero()));
            }
        }
    }

    #[test]
    fn mixed_contexts_are_rejected() {
        let f4 = CycField::new(4);
        let f5 = CycField::new(5);
        let bad = CycMatrix::new(1, 2, vec![f4.one(), f5.one()]);
        assert!(matches!(bad, Err(CycError::ContextMismatch { .. })));
        let ok = CycMatrix::new(1, 1, vec![f4.one()]).unwrap();
        assert!(ok.rank(&f5).is_err());
    }
}
