//! Integral weights in fundamental coordinates and finite weight multisets
//! (characters of finite-dimensional modules).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::rootsystem::RootSystem;

/// An integral weight `λ = Σ coords[i] · ω_{i+1}`.  Ordered
/// lexicographically on coordinates, which fixes every serialization order
/// in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: alloc::vec![0; rank],
        }
    }

    /// The fundamental weight `ω_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = alloc::vec![0; rank];
        coords[i - 1] = 1;
        Self { coords }
    }

    /// `ρ = Σ ω_i`, the half-sum of positive roots.
    pub fn rho(rank: usize) -> Self {
        Self {
            coords: alloc::vec![1; rank],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `self - α_i` (0-based) where `α_i` is a simple root of `rs`.
    pub(crate) fn sub_root(&self, rs: &RootSystem, i: usize) -> Weight {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(k, &x)| x - rs.cartan()[k][i])
            .collect();
        Weight::new(coords)
    }

    /// Scale every coordinate by `k`.
    pub fn dilate(&self, k: i64) -> Weight {
        Weight::new(self.coords.iter().map(|&c| c * k).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.coords.len(), rhs.coords.len());
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.coords.len(), rhs.coords.len());
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.coords.iter().map(|&c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A finite multiset of weights with positive arbitrary-precision
/// multiplicities; the character `Σ mult(ν) e(ν)` of a weight module.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, BigInt>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// The multiset `{0: 1}`: the character of the trivial module, the
    /// unit for [`Self::mul`].
    pub fn unit(rank: usize) -> Self {
        let mut s = Self::new();
        s.insert(Weight::zero(rank), BigInt::from(1));
        s
    }

    /// Add `mult` copies of `w`; zero contributions are dropped.
    pub fn insert(&mut self, w: Weight, mult: BigInt) {
        if mult.is_zero() {
            return;
        }
        match self.entries.get_mut(&w) {
            Some(e) => {
                *e += mult;
                if e.is_zero() {
                    self.entries.remove(&w);
                }
            }
            None => {
                self.entries.insert(w, mult);
            }
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.entries.iter()
    }

    pub fn coefficient(&self, w: &Weight) -> BigInt {
        self.entries.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    /// Total size `Σ mult(ν)`: the dimension of the module.
    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }

    pub fn rank(&self) -> usize {
        self.entries
            .keys()
            .next()
            .map(Weight::rank)
            .unwrap_or_default()
    }

    /// Product of characters: the convolution `(f·g)(ν) = Σ f(ν₁)g(ν₂)`
    /// over `ν₁ + ν₂ = ν`; the character of the tensor product.
    pub fn mul(&self, rhs: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w1, m1) in &self.entries {
            for (w2, m2) in &rhs.entries {
                out.insert(w1 + w2, m1 * m2);
            }
        }
        out
    }

    /// `m`-th tensor power of the character.
    pub fn pow(&self, m: usize, rank: usize) -> WeightMultiset {
        let mut out = WeightMultiset::unit(rank);
        for _ in 0..m {
            out = out.mul(self);
        }
        out
    }

    /// Scale every weight by `k` (the character of the Adams-style
    /// dilation used for cycle traces).
    pub fn dilate(&self, k: i64) -> WeightMultiset {
        WeightMultiset {
            entries: self
                .entries
                .iter()
                .map(|(w, m)| (w.dilate(k), m.clone()))
                .collect(),
        }
    }

    /// Negate every weight: the character of the dual module.
    pub fn dual(&self) -> WeightMultiset {
        WeightMultiset {
            entries: self.entries.iter().map(|(w, m)| (-w, m.clone())).collect(),
        }
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, m) in &self.entries {
            if !first {
                write!(f, " + ")?;
            }
            if m == &BigInt::from(1) {
                write!(f, "e({w})")?;
            } else {
                write!(f, "{m}*e({w})")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
