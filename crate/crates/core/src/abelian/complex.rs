use num_bigint::BigInt;
use num_traits::One;

use super::group::FGAbelian;
use super::matrix::IntMatrix;
use super::AbelianError;

/// A finite chain complex of free abelian groups `C_0, …, C_m`.
///
/// `boundaries[k]` is the matrix of `∂_{k+1}: C_{k+1} → C_k`, with
/// `dims[k]` rows and `dims[k+1]` columns; `∂_0` is implicitly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, AbelianError> {
        if dims.is_empty() {
            if boundaries.is_empty() {
                return Ok(ChainComplex { dims, boundaries });
            }
            return Err(AbelianError::Shape("boundaries given for an empty complex".into()));
        }
        if boundaries.len() != dims.len() - 1 {
            return Err(AbelianError::Shape(format!(
                "{} chain groups need {} boundary matrices, got {}",
                dims.len(),
                dims.len() - 1,
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.rows() != dims[k] || b.cols() != dims[k + 1] {
                return Err(AbelianError::Shape(format!(
                    "boundary of degree {} is {}x{}, expected {}x{}",
                    k + 1,
                    b.rows(),
                    b.cols(),
                    dims[k],
                    dims[k + 1]
                )));
            }
        }
        for k in 1..boundaries.len() {
            if !boundaries[k - 1].mul(&boundaries[k])?.is_zero() {
                return Err(AbelianError::NotAComplex { degree: k + 1 });
            }
        }
        Ok(ChainComplex { dims, boundaries })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// `∂_k`, or `None` outside `1..=m`.
    pub fn boundary(&self, k: usize) -> Option<&IntMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// `H_k = ker ∂_k / im ∂_{k+1}` for every degree.
    pub fn homology(&self) -> Vec<FGAbelian> {
        let factors: Vec<Vec<BigInt>> = self.boundaries.iter().map(IntMatrix::invariant_factors).collect();
        (0..self.dims.len())
            .map(|k| {
                let rank_out = if k == 0 { 0 } else { factors[k - 1].len() };
                let incoming: &[BigInt] = factors.get(k).map_or(&[], Vec::as_slice);
                let rank = self.dims[k] - rank_out - incoming.len();
                let torsion: Vec<BigInt> = incoming.iter().filter(|d| !d.is_one()).cloned().collect();
                FGAbelian::new(rank, torsion).expect("Smith invariant factors")
            })
            .collect()
    }

    /// Degree-wise direct sum with another complex.
    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        let len = self.dims.len().max(other.dims.len());
        let dim = |c: &ChainComplex, k: usize| c.dims.get(k).copied().unwrap_or(0);
        let dims: Vec<usize> = (0..len).map(|k| dim(self, k) + dim(other, k)).collect();
        let boundaries = (1..len)
            .map(|k| {
                let mut m = IntMatrix::zeros(dims[k - 1], dims[k]);
                for (c, r0, c0) in [(self, 0, 0), (other, dim(self, k - 1), dim(self, k))] {
                    if let Some(b) = c.boundary(k) {
                        for r in 0..b.rows() {
                            for col in 0..b.cols() {
                                m.set(r0 + r, c0 + col, b.get(r, col).clone());
                            }
                        }
                    }
                }
                m
            })
            .collect();
        ChainComplex { dims, boundaries }
    }
}
