//! Multi-site operators: Kronecker products, twists, embeddings and iterated coproducts.

use crate::error::{Error, Result};
use crate::fock::occupations;
use crate::hopf::{HopfTables, Word};
use crate::linalg::{identity, zeros, Mat};

/// An operator on `sites` copies of a `dim`-dimensional Fock space.
#[derive(Debug, Clone)]
pub struct TensorOperator {
    pub dim: usize,
    pub sites: usize,
    pub matrix: Mat,
}

impl TensorOperator {
    pub fn new(dim: usize, sites: usize, matrix: Mat) -> Result<Self> {
        let n = dim.pow(sites as u32);
        if matrix.dim() != (n, n) {
            return Err(Error::Dimension(format!(
                "expected {n}×{n} for {sites} sites of dimension {dim}, got {:?}",
                matrix.dim()
            )));
        }
        Ok(TensorOperator { dim, sites, matrix })
    }

    pub fn identity(dim: usize, sites: usize) -> Self {
        TensorOperator { dim, sites, matrix: identity(dim.pow(sites as u32)) }
    }
}

pub fn kron(a: &TensorOperator, b: &TensorOperator) -> Result<TensorOperator> {
    if a.dim != b.dim {
        return Err(Error::Dimension(format!("site dimensions {} and {} differ", a.dim, b.dim)));
    }
    Ok(TensorOperator {
        dim: a.dim,
        sites: a.sites + b.sites,
        matrix: crate::linalg::kron(&a.matrix, &b.matrix),
    })
}

/// Relabel sites: input site `k` becomes output site `perm[k]`.
pub fn permute_sites(op: &TensorOperator, perm: &[usize]) -> Result<TensorOperator> {
    let (d, n) = (op.dim, op.sites);
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::Dimension(format!("{perm:?} is not a permutation of {n} sites")));
    }
    let total = d.pow(n as u32);
    let map: Vec<usize> = (0..total)
        .map(|idx| {
            let occ = occupations(idx, d, n);
            let mut out = vec![0; n];
            for (k, &o) in occ.iter().enumerate() {
                out[perm[k]] = o;
            }
            out.iter().fold(0, |acc, &o| acc * d + o)
        })
        .collect();
    let mut m = zeros(total);
    for ((i, j), v) in op.matrix.indexed_iter() {
        if v.norm_sqr() != 0.0 {
            m[[map[i], map[j]]] = *v;
        }
    }
    Ok(TensorOperator { dim: d, sites: n, matrix: m })
}

/// Swap the two factors of a two-site operator.
pub fn twist(op: &TensorOperator) -> Result<TensorOperator> {
    if op.sites != 2 {
        return Err(Error::Dimension(format!("twist needs 2 sites, got {}", op.sites)));
    }
    permute_sites(op, &[1, 0])
}

/// Place a `k`-site operator on the given (distinct) sites of an `n`-site space.
pub fn embed(op: &TensorOperator, positions: &[usize], n: usize) -> Result<TensorOperator> {
    let k = op.sites;
    if positions.len() != k || k > n {
        return Err(Error::Dimension(format!("cannot place {k} sites at {positions:?} in {n}")));
    }
    let padded = kron(op, &TensorOperator::identity(op.dim, n - k))?;
    let mut perm: Vec<usize> = positions.to_vec();
    perm.extend((0..n).filter(|p| !positions.contains(p)));
    permute_sites(&padded, &perm)
}

/// `Δ^{(n)}(word)` on `n + 1` sites; `n = 0` gives the single-site image.
pub fn coproduct_n(tables: &HopfTables, word: &Word, n: usize) -> TensorOperator {
    let dim = tables.rep.dim;
    if n == 0 {
        return TensorOperator { dim, sites: 1, matrix: tables.word_matrix(word) };
    }
    let mut acc = zeros(dim.pow(n as u32 + 1));
    for term in tables.delta_word(word).0 {
        let left = coproduct_n(tables, &term.left, n - 1);
        let right = tables.word_matrix(&term.right);
        acc = acc + crate::linalg::kron(&left.matrix, &right).mapv(|z| z * term.coef);
    }
    TensorOperator { dim, sites: n + 1, matrix: acc }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, frobenius, C64};
    use ndarray::Array2;
    use proptest::prelude::*;

    fn op(dim: usize, sites: usize, seed: &[f64]) -> TensorOperator {
        let n = dim.pow(sites as u32);
        let m = Array2::from_shape_fn((n, n), |(i, j)| {
            C64::new(seed[(i * n + j) % seed.len()], seed[(i + 2 * j) % seed.len()])
        });
        TensorOperator::new(dim, sites, m).unwrap()
    }

    #[test]
    fn twist_swaps_factors() {
        let a = op(2, 1, &[1.0, 2.0, 3.0]);
        let b = op(2, 1, &[-1.0, 0.5]);
        let ab = kron(&a, &b).unwrap();
        let ba = kron(&b, &a).unwrap();
        assert!(frobenius(&(twist(&ab).unwrap().matrix - ba.matrix)) < 1e-14);
    }

    #[test]
    fn embed_places_sites() {
        let a = op(2, 1, &[1.0, 2.0, 3.0]);
        let b = op(2, 1, &[-1.0, 0.5, 0.25]);
        let ab = kron(&a, &b).unwrap();
        let id = TensorOperator::identity(2, 1);
        let expect = kron(&kron(&a, &id).unwrap(), &b).unwrap();
        let got = embed(&ab, &[0, 2], 3).unwrap();
        assert!(frobenius(&(got.matrix - expect.matrix)) < 1e-14);
        assert!(embed(&ab, &[0], 3).is_err());
        assert!(permute_sites(&ab, &[0, 0]).is_err());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        assert!(TensorOperator::new(2, 2, identity(3)).is_err());
        let a = TensorOperator::identity(2, 1);
        let b = TensorOperator::identity(3, 1);
        assert!(kron(&a, &b).is_err());
        assert!(twist(&a).is_err());
        let _ = c(0.0);
    }

    proptest! {
        #[test]
        fn kron_is_associative(s in proptest::collection::vec(-2.0f64..2.0, 5..9)) {
            let a = op(2, 1, &s);
            let b = op(2, 1, &s[1..]);
            let d = op(2, 1, &s[2..]);
            let l = kron(&kron(&a, &b).unwrap(), &d).unwrap();
            let r = kron(&a, &kron(&b, &d).unwrap()).unwrap();
            prop_assert!(frobenius(&(l.matrix - r.matrix)) < 1e-12);
        }

        #[test]
        fn twist_is_involution(s in proptest::collection::vec(-2.0f64..2.0, 3..20)) {
            let x = op(3, 2, &s);
            let back = twist(&twist(&x).unwrap()).unwrap();
            prop_assert!(frobenius(&(back.matrix - x.matrix)) == 0.0);
        }
    }
}
