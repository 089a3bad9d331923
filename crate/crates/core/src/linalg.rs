//! Exact linear algebra: reduced row-echelon form, kernels, and canonical
//! subspace bases.
//!
//! Everything here runs over exact rationals, so row reduction needs no
//! pivoting heuristics: the pivot is always the first nonzero entry in
//! column order. The reduced row-echelon form is canonical, which makes
//! subspace equality a representation equality.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rat::Rat;

/// Returns the reduced row-echelon form of `m`. Row space is preserved and
/// the result is canonical.
pub fn rref(m: &RatMatrix) -> RatMatrix {
    let mut reducer = RowReducer::new(m.cols());
    for i in 0..m.rows() {
        let row: Vec<Rat> = (0..m.cols()).map(|j| m[(i, j)].clone()).collect();
        reducer.insert(row);
    }
    let rank = reducer.rank();
    let mut out = RatMatrix::zero(m.rows(), m.cols());
    for (i, row) in reducer.rows.into_iter().enumerate().take(rank) {
        for (j, v) in row.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    out
}

/// Rank of `m`.
pub fn rank(m: &RatMatrix) -> usize {
    let mut reducer = RowReducer::new(m.cols());
    for i in 0..m.rows() {
        reducer.insert((0..m.cols()).map(|j| m[(i, j)].clone()).collect());
    }
    reducer.rank()
}

/// Canonical basis of `{ v : m v = 0 }`.
pub fn kernel_basis(m: &RatMatrix) -> SubspaceBasis {
    let mut reducer = RowReducer::new(m.cols());
    for i in 0..m.rows() {
        reducer.insert((0..m.cols()).map(|j| m[(i, j)].clone()).collect());
    }
    reducer.kernel_basis()
}

/// True iff every vector of `inner` lies in the span of `outer`.
pub fn subspace_contains(outer: &SubspaceBasis, inner: &SubspaceBasis) -> Result<bool> {
    if outer.ambient_dim != inner.ambient_dim {
        return Err(Error::AmbientMismatch {
            left: outer.ambient_dim,
            right: inner.ambient_dim,
        });
    }
    Ok(inner.vectors.iter().all(|v| outer.reduce(v).iter().all(Zero::is_zero)))
}

/// A linear subspace of `Q^ambient_dim`, stored as the canonical reduced
/// row-echelon basis: leading entries are 1, leading columns strictly
/// increase, and each leading column is zero in every other vector. Two
/// equal subspaces always produce identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rat>>,
}

impl SubspaceBasis {
    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(ambient_dim: usize, spanning: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let mut reducer = RowReducer::new(ambient_dim);
        for v in spanning {
            assert_eq!(v.len(), ambient_dim, "vector length must match ambient dim");
            reducer.insert(v);
        }
        reducer.into_subspace()
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, vectors: Vec::new() }
    }

    /// The full space `Q^ambient_dim`.
    pub fn full(ambient_dim: usize) -> Self {
        let vectors = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Rat::zero(); ambient_dim];
                v[i] = Rat::one();
                v
            })
            .collect();
        SubspaceBasis { ambient_dim, vectors }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Remainder of `v` after elimination against the basis; zero iff
    /// `v` is in the span.
    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for row in &self.vectors {
            let lead = leading_col(row).expect("basis rows are nonzero");
            if v[lead].is_zero() {
                continue;
            }
            let c = v[lead].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        v
    }
}

/// Incremental row-space accumulator kept in reduced row-echelon form.
///
/// Streaming rows through this is how large evaluation matrices are reduced
/// without materializing them: rank is bounded by the column count, so the
/// accumulator stays small no matter how many rows are inserted.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    leads: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new(), leads: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True once the row space is all of `Q^cols`; inserting more rows can
    /// change nothing.
    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `row` against the accumulated basis and inserts what is left.
    /// Returns true iff the rank grew.
    pub fn insert(&mut self, mut row: Vec<Rat>) -> bool {
        assert_eq!(row.len(), self.cols, "row length must match cols");
        for (r, &lead) in self.rows.iter().zip(&self.leads) {
            if !row[lead].is_zero() {
                let c = row[lead].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let Some(lead) = leading_col(&row) else {
            return false;
        };
        // Normalize the leading entry to 1, then clear that column above.
        let inv = row[lead].clone();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x /= &inv;
            }
        }
        for (r, &l) in self.rows.iter_mut().zip(&self.leads) {
            debug_assert_ne!(l, lead);
            if !r[lead].is_zero() {
                let c = r[lead].clone();
                for (x, y) in r.iter_mut().zip(&row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let pos = self.leads.partition_point(|&l| l < lead);
        self.rows.insert(pos, row);
        self.leads.insert(pos, lead);
        true
    }

    /// Merges another reducer's row space into this one.
    pub fn absorb(&mut self, other: RowReducer) {
        assert_eq!(self.cols, other.cols);
        for row in other.rows {
            self.insert(row);
        }
    }

    /// Canonical basis of the accumulated row space.
    pub fn into_subspace(self) -> SubspaceBasis {
        SubspaceBasis { ambient_dim: self.cols, vectors: self.rows }
    }

    /// Canonical basis of the joint kernel `{ v : r v = 0 for all rows r }`.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let n = self.cols;
        let pivot_of_col: Vec<Option<usize>> = {
            let mut map = vec![None; n];
            for (i, &lead) in self.leads.iter().enumerate() {
                map[lead] = Some(i);
            }
            map
        };
        let mut vectors = Vec::with_capacity(n - self.rows.len());
        for free in 0..n {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for (row, &lead) in self.rows.iter().zip(&self.leads) {
                v[lead] = -row[free].clone();
            }
            vectors.push(v);
        }
        SubspaceBasis::from_spanning(n, vectors)
    }
}

fn leading_col(row: &[Rat]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use num_bigint::BigInt;
    use proptest::prelude::*;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Naive Gauss-Jordan elimination, coded independently of `RowReducer`:
    /// forward sweep with explicit row swaps, then full back-substitution.
    /// Oracle only; kept deliberately simple.
    #[allow(clippy::needless_range_loop)]
    fn naive_rref(m: &RatMatrix) -> RatMatrix {
        let (rows, cols) = (m.rows(), m.cols());
        let mut a: Vec<Vec<Rat>> = (0..rows)
            .map(|i| (0..cols).map(|j| m[(i, j)].clone()).collect())
            .collect();
        let mut pivot_row = 0;
        for col in 0..cols {
            let Some(src) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pivot_row, src);
            let p = a[pivot_row][col].clone();
            for x in a[pivot_row].iter_mut() {
                *x /= &p;
            }
            for r in 0..rows {
                if r != pivot_row && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..cols {
                        let t = &f * &a[pivot_row][c];
                        a[r][c] -= t;
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        RatMatrix::new(rows, cols, a.into_iter().flatten().collect())
    }

    fn random_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: u64) -> RatMatrix {
        RatMatrix::from_fn(rows, cols, |_, _| {
            let span = 2 * bound + 1;
            rat_int((rng.next_u64() % span) as i64 - bound as i64)
        })
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = RatMatrix::identity(2);
        assert_eq!(rref(&id), id);
    }

    #[test]
    fn rref_rank_one() {
        let m = RatMatrix::from_int_rows(&[&[2, 4], &[1, 2]]);
        assert_eq!(rref(&m), RatMatrix::from_int_rows(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_matches_naive_oracle_on_seeded_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let m = random_int_matrix(&mut rng, 5, 8, 6);
            assert_eq!(rref(&m), naive_rref(&m));
        }
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(kernel_basis(&RatMatrix::zero(3, 3)), SubspaceBasis::full(3));
        assert_eq!(kernel_basis(&RatMatrix::identity(3)).dim(), 0);
    }

    #[test]
    fn kernel_of_single_equation() {
        let m = RatMatrix::from_int_rows(&[&[1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.vectors(), &[vec![rat_int(1), rat_int(-1)]]);
    }

    #[test]
    fn containment_basics() {
        let full = SubspaceBasis::full(2);
        let ex = SubspaceBasis::from_spanning(2, vec![vec![rat_int(1), rat_int(0)]]);
        let ey = SubspaceBasis::from_spanning(2, vec![vec![rat_int(0), rat_int(1)]]);
        assert!(subspace_contains(&full, &ex).unwrap());
        assert!(subspace_contains(&full, &ey).unwrap());
        assert!(!subspace_contains(&ex, &ey).unwrap());
        assert!(subspace_contains(&ex, &ex).unwrap());
        assert!(subspace_contains(&full, &SubspaceBasis::zero(2)).unwrap());
        assert!(subspace_contains(&ex, &SubspaceBasis::full(3)).is_err());
    }

    #[test]
    fn kernel_vectors_annihilate_and_rank_nullity_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_int_matrix(&mut rng, 4, 6, 4);
            let k = kernel_basis(&m);
            assert_eq!(rank(&m) + k.dim(), m.cols());
            for v in k.vectors() {
                assert!(m.apply_vec(v).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn mutual_containment_means_identical_bases() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let m = random_int_matrix(&mut rng, 3, 5, 3);
            let scaled = m.scale(&rat(3, 2));
            let a = SubspaceBasis::from_spanning(
                5,
                (0..m.rows()).map(|i| (0..5).map(|j| m[(i, j)].clone()).collect::<Vec<_>>()),
            );
            let b = SubspaceBasis::from_spanning(
                5,
                (0..3).map(|i| (0..5).map(|j| scaled[(i, j)].clone()).collect::<Vec<_>>()),
            );
            assert!(subspace_contains(&a, &b).unwrap());
            assert!(subspace_contains(&b, &a).unwrap());
            assert_eq!(a, b);
        }
    }

    fn arb_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..=6, r * c).prop_map(move |ints| {
                RatMatrix::new(r, c, ints.into_iter().map(rat_int).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let r = rref(&m);
            prop_assert_eq!(rref(&r), r);
        }

        #[test]
        fn rref_leading_entries_are_one(m in arb_matrix()) {
            let r = rref(&m);
            let mut last_lead = None;
            for i in 0..r.rows() {
                let lead = (0..r.cols()).find(|&j| !r[(i, j)].is_zero());
                if let Some(j) = lead {
                    prop_assert_eq!(&r[(i, j)], &Rat::from_integer(BigInt::from(1)));
                    prop_assert!(last_lead.is_none_or(|l| j > l));
                    last_lead = Some(j);
                }
            }
        }
    }
}
