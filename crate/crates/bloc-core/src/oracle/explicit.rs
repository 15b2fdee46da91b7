//! Concrete weight-basis realizations of small modules: a weight for each
//! basis vector plus one raising and one lowering matrix per simple root.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{RootSystem, TypeLabel, Weight, WeightMultiset};
use crate::ratmat::RatMat;

/// A module given by explicit Chevalley-generator action matrices on a
/// weight basis.  `raising[i]`/`lowering[i]` are the matrices of
/// `x_{i+1}^+`/`x_{i+1}^-` acting on column vectors.
#[derive(Debug, Clone)]
pub struct ExplicitModule {
    rs: RootSystem,
    basis_weights: Vec<Weight>,
    raising: Vec<RatMat>,
    lowering: Vec<RatMat>,
}

impl ExplicitModule {
    pub fn new(
        rs: RootSystem,
        basis_weights: Vec<Weight>,
        raising: Vec<RatMat>,
        lowering: Vec<RatMat>,
    ) -> Self {
        Self {
            rs,
            basis_weights,
            raising,
            lowering,
        }
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dimension(&self) -> usize {
        self.basis_weights.len()
    }

    pub fn basis_weights(&self) -> &[Weight] {
        &self.basis_weights
    }

    pub fn raising(&self, i: usize) -> &RatMat {
        &self.raising[i]
    }

    pub fn lowering(&self, i: usize) -> &RatMat {
        &self.lowering[i]
    }

    /// The character as a weight multiset.
    pub fn character(&self) -> WeightMultiset {
        let mut ch = WeightMultiset::new();
        for w in &self.basis_weights {
            ch.insert(w.clone(), BigInt::from(1));
        }
        ch
    }

    /// The dual module on the dual basis: weights negate, every generator
    /// matrix becomes its negated transpose (`x·f = -f∘x`).
    pub fn dual(&self) -> Self {
        let neg_t =
            |m: &RatMat| m.transpose().scale(&-BigRational::from(BigInt::from(1)));
        Self {
            rs: self.rs.clone(),
            basis_weights: self.basis_weights.iter().map(|w| -w).collect(),
            raising: self.raising.iter().map(neg_t).collect(),
            lowering: self.lowering.iter().map(neg_t).collect(),
        }
    }

    /// Check the structural invariants:
    /// - `x_i^±` maps the `λ` weight space into the `λ ± α_i` space,
    /// - `[x_i^+, x_i^-]` acts diagonally by `⟨λ, α_i∨⟩`,
    /// - `[x_i^+, x_j^-] = 0` for `i ≠ j`.
    pub fn verify(&self) -> Result<()> {
        let n = self.rs.rank();
        let d = self.dimension();
        for i in 0..n {
            let alpha = self.rs.simple_root(i);
            for (mat, sign) in [(&self.raising[i], 1i64), (&self.lowering[i], -1i64)] {
                for row in 0..d {
                    for col in 0..d {
                        if mat[(row, col)].is_zero() {
                            continue;
                        }
                        let expected = &self.basis_weights[col] + &alpha.dilate(sign);
                        if self.basis_weights[row] != expected {
                            return Err(Error::Consistency(alloc::format!(
                                "x_{}^{} maps weight {} outside the {} space",
                                i + 1,
                                if sign > 0 { "+" } else { "-" },
                                self.basis_weights[col],
                                expected
                            )));
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let comm = self.raising[i]
                    .mul(&self.lowering[j])
                    .sub(&self.lowering[j].mul(&self.raising[i]));
                for row in 0..d {
                    for col in 0..d {
                        let want = if i == j && row == col {
                            BigRational::from(BigInt::from(self.basis_weights[row].coords()[i]))
                        } else {
                            BigRational::zero()
                        };
                        if comm[(row, col)] != want {
                            return Err(Error::Consistency(alloc::format!(
                                "[x_{}^+, x_{}^-] fails at entry ({row},{col})",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The natural `(n+1)`-dimensional module of `sl_{n+1}`: basis
/// `v_0, …, v_n` with `wt(v_i) = -ω_i + ω_{i+1}` (`ω_0 = ω_{n+1} = 0`),
/// `x_i^- v_{i-1} = v_i` and `x_i^+ v_i = v_{i-1}` with unit coefficients.
pub fn build_natural_module(n: usize) -> Result<ExplicitModule> {
    let rs = RootSystem::new(TypeLabel::A, n)?;
    let dim = n + 1;
    let weights: Vec<Weight> = (0..dim)
        .map(|i| {
            let coords = (1..=n)
                .map(|k| i64::from(k == i + 1) - i64::from(k == i))
                .collect();
            Weight::new(coords)
        })
        .collect();
    let mut raising = Vec::with_capacity(n);
    let mut lowering = Vec::with_capacity(n);
    for i in 0..n {
        let mut lower = RatMat::zero(dim, dim);
        lower[(i + 1, i)] = BigRational::from(BigInt::from(1));
        let mut raise = RatMat::zero(dim, dim);
        raise[(i, i + 1)] = BigRational::from(BigInt::from(1));
        lowering.push(lower);
        raising.push(raise);
    }
    Ok(ExplicitModule::new(rs, weights, raising, lowering))
}

/// The `(k+1)`-dimensional simple `sl_2` module with integer structure
/// constants: weights `k, k-2, …, -k`, `x^- v_j = (j+1) v_{j+1}`,
/// `x^+ v_j = (k-j+1) v_{j-1}`.
pub fn build_sl2_module(k: usize) -> Result<ExplicitModule> {
    let rs = RootSystem::new(TypeLabel::A, 1)?;
    let dim = k + 1;
    let weights: Vec<Weight> = (0..dim)
        .map(|j| Weight::new(alloc::vec![k as i64 - 2 * j as i64]))
        .collect();
    let mut lower = RatMat::zero(dim, dim);
    let mut raise = RatMat::zero(dim, dim);
    for j in 0..dim {
        if j + 1 < dim {
            lower[(j + 1, j)] = BigRational::from(BigInt::from(j as i64 + 1));
        }
        if j > 0 {
            raise[(j - 1, j)] = BigRational::from(BigInt::from(k as i64 - j as i64 + 1));
        }
    }
    Ok(ExplicitModule::new(
        rs,
        weights,
        alloc::vec![raise],
        alloc::vec![lower],
    ))
}
