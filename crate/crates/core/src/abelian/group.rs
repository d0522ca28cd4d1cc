use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::matrix::IntMatrix;
use super::AbelianError;

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` in
/// invariant-factor form: every `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FGAbelian {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FGAbelian {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FGAbelian {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_cyclic_orders(0, &[BigInt::from(order)])
    }

    /// Checked constructor for data already in invariant-factor form.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self, AbelianError> {
        let two = BigInt::from(2);
        if torsion.iter().any(|d| *d < two) {
            return Err(AbelianError::InvalidGroup("torsion coefficients must be at least 2".into()));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(AbelianError::InvalidGroup("torsion coefficients must divide each other".into()));
        }
        Ok(FGAbelian { rank, torsion })
    }

    /// `ℤ^rank ⊕ ⊕ ℤ/nᵢ` for arbitrary orders `nᵢ` (0 means ℤ, 1 is dropped).
    pub fn from_cyclic_orders(rank: usize, orders: &[BigInt]) -> Self {
        let m = IntMatrix::diagonal(orders.len(), orders.len(), orders);
        let mut g = FGAbelian::free(rank);
        let mut factors = m.invariant_factors();
        g.rank += orders.len() - factors.len();
        factors.retain(|d| !d.is_one());
        g.torsion = factors;
        g
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn free_part(&self) -> FGAbelian {
        FGAbelian::free(self.rank)
    }

    pub fn torsion_part(&self) -> FGAbelian {
        FGAbelian {
            rank: 0,
            torsion: self.torsion.clone(),
        }
    }

    pub fn direct_sum(&self, other: &FGAbelian) -> FGAbelian {
        let orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        Self::from_cyclic_orders(self.rank + other.rank, &orders)
    }

    /// The `X` with `X ⊕ free ≅ self`, for free `free`.
    pub fn cancel_free(&self, free: &FGAbelian) -> Result<FGAbelian, AbelianError> {
        if !free.is_free() {
            return Err(AbelianError::Cancellation(format!("{free} is not free")));
        }
        if free.rank > self.rank {
            return Err(AbelianError::Cancellation(format!("cannot cancel {free} from {self}")));
        }
        Ok(FGAbelian {
            rank: self.rank - free.rank,
            torsion: self.torsion.clone(),
        })
    }

    /// The unique `X` with `X ⊕ other ≅ self` (finitely generated abelian
    /// groups cancel), or an error when `other` is not a summand.
    pub fn cancel(&self, other: &FGAbelian) -> Result<FGAbelian, AbelianError> {
        let err = || AbelianError::Cancellation(format!("{other} is not a direct summand of {self}"));
        if other.rank > self.rank {
            return Err(err());
        }
        let basis = coprime_basis(self.torsion.iter().chain(&other.torsion));
        let mine = components(&self.torsion, &basis);
        let theirs = components(&other.torsion, &basis);
        let mut rest: Vec<BigInt> = Vec::new();
        for (b, exps) in &mine {
            let mut exps = exps.clone();
            for e in theirs.get(b).into_iter().flatten() {
                let pos = exps.iter().position(|x| x == e).ok_or_else(err)?;
                exps.remove(pos);
            }
            rest.extend(exps.iter().map(|&e| num_traits::pow(b.clone(), e as usize)));
        }
        if theirs.keys().any(|b| !mine.contains_key(b)) {
            return Err(err());
        }
        Ok(Self::from_cyclic_orders(self.rank - other.rank, &rest))
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Pairwise coprime integers `> 1` such that every input is a product of
/// their powers.
fn coprime_basis<'a>(nums: impl Iterator<Item = &'a BigInt>) -> Vec<BigInt> {
    let mut basis: Vec<BigInt> = Vec::new();
    for n in nums {
        let mut pending = vec![n.clone()];
        while let Some(mut x) = pending.pop() {
            if x.is_one() {
                continue;
            }
            let mut i = 0;
            while i < basis.len() {
                let g = x.gcd(&basis[i]);
                if g.is_one() {
                    i += 1;
                    continue;
                }
                // split both x and basis[i] along their common factor
                let b = basis.swap_remove(i);
                pending.push(g.clone());
                pending.push(&b / &g);
                x = &x / &g;
                if x.is_one() {
                    break;
                }
                i = 0;
            }
            if !x.is_one() {
                // x may still share factors with pending pieces; they get
                // reconciled when those pieces are processed
                basis.push(x);
            }
        }
    }
    basis.sort();
    basis.dedup();
    basis
}

/// Exponent multisets of each basis element across the cyclic orders.
fn components(orders: &[BigInt], basis: &[BigInt]) -> BTreeMap<BigInt, Vec<u32>> {
    let mut out: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
    for n in orders {
        let mut n = n.clone();
        for b in basis {
            let mut e = 0;
            while (&n % b).is_zero() {
                n /= b;
                e += 1;
            }
            if e > 0 {
                out.entry(b.clone()).or_default().push(e);
            }
        }
        debug_assert!(n.is_one(), "order does not factor over the coprime basis");
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

impl fmt::Display for FGAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for FGAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for FGAbelian {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}
