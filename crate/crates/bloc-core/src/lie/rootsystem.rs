//! Cartan data for the simple types A–G: Cartan matrix, exact rational
//! inverse, symmetrizer, positive roots, Weyl group order.
//!
//! Convention: `cartan[i][j] = ⟨α_j, α_i∨⟩ = 2(α_i,α_j)/(α_i,α_i)`, so
//! column `j` holds the fundamental coordinates of the simple root `α_j`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::weights::Weight;
use crate::error::{Error, Result};
use crate::ratmat::RatMat;

/// Cartan type of a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(Self::A),
            'B' => Some(Self::B),
            'C' => Some(Self::C),
            'D' => Some(Self::D),
            'E' => Some(Self::E),
            'F' => Some(Self::F),
            'G' => Some(Self::G),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A simple root system of fixed type and rank, with all derived data
/// precomputed exactly.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    inverse_cartan: RatMat,
    /// `d_i = (α_i, α_i)/2`, normalized so long roots have `d = 1`.
    symmetrizer: Vec<BigRational>,
    positive_roots: Vec<Weight>,
    weyl_order: u64,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.rank == other.rank
    }
}
impl Eq for RootSystem {}

impl RootSystem {
    pub fn new(label: TypeLabel, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(label, rank)?;
        let cmat = RatMat::from_int_rows(&cartan);
        let inverse_cartan = cmat
            .inverse()
            .ok_or(Error::BadRootSystem(label.as_char(), rank))?;
        let symmetrizer = symmetrizer(label, rank);
        let weyl_order = weyl_group_order(label, rank);
        let mut rs = Self {
            label,
            rank,
            cartan,
            inverse_cartan,
            symmetrizer,
            positive_roots: Vec::new(),
            weyl_order,
        };
        rs.positive_roots = rs.compute_positive_roots()?;
        Ok(rs)
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &RatMat {
        &self.inverse_cartan
    }

    /// `d_i = (α_i, α_i)/2`, long roots normalized to `d = 1`.
    pub fn symmetrizer(&self) -> &[BigRational] {
        &self.symmetrizer
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    /// The positive roots in fundamental coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// The simple root `α_i` (0-based) in fundamental coordinates: column
    /// `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new((0..self.rank).map(|k| self.cartan[k][i]).collect())
    }

    /// Root-lattice coordinates of `w` if `w ∈ Q⁺` (all coordinates
    /// non-negative integers), else `None`.
    pub fn root_cone_coords(&self, w: &Weight) -> Option<Vec<BigInt>> {
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut acc = BigRational::zero();
            for j in 0..self.rank {
                acc += &self.inverse_cartan[(i, j)] * BigRational::from(BigInt::from(w.coords()[j]));
            }
            if !acc.is_integer() || acc.is_negative() {
                return None;
            }
            out.push(acc.to_integer());
        }
        Some(out)
    }

    /// The invariant inner product `(λ, μ)`, normalized so long roots have
    /// squared length 2: `(λ, μ) = Σ_k d_k · λ_k · r_k(μ)` where `r(μ)` are
    /// the root coordinates of `μ`.
    pub fn inner(&self, lambda: &Weight, mu: &Weight) -> BigRational {
        let mut acc = BigRational::zero();
        for k in 0..self.rank {
            let mut rk = BigRational::zero();
            for j in 0..self.rank {
                rk += &self.inverse_cartan[(k, j)] * BigRational::from(BigInt::from(mu.coords()[j]));
            }
            acc += &self.symmetrizer[k] * BigRational::from(BigInt::from(lambda.coords()[k])) * rk;
        }
        acc
    }

    /// `dim V(λ) = Π_{α>0} (λ+ρ, α)/(ρ, α)` for dominant `λ`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigInt> {
        super::require_dominant(lambda)?;
        let rho = Weight::rho(self.rank);
        let lam_rho = lambda + &rho;
        let mut dim = BigRational::one();
        for alpha in &self.positive_roots {
            dim *= self.inner(&lam_rho, alpha) / self.inner(&rho, alpha);
        }
        if !dim.is_integer() {
            return Err(Error::Consistency(alloc::format!(
                "Weyl dimension of V({lambda}) is not an integer"
            )));
        }
        Ok(dim.to_integer())
    }

    /// All roots by reflection closure of the simple roots; keep those in
    /// the positive cone.
    fn compute_positive_roots(&self) -> Result<Vec<Weight>> {
        let mut all = alloc::collections::BTreeSet::new();
        let mut queue: Vec<Weight> = (0..self.rank).map(|i| self.simple_root(i)).collect();
        for r in &queue {
            all.insert(r.clone());
        }
        while let Some(w) = queue.pop() {
            for i in 0..self.rank {
                let r = super::reflect(self, i, &w);
                if all.insert(r.clone()) {
                    queue.push(r);
                }
            }
        }
        let positive: Vec<Weight> = all
            .into_iter()
            .filter(|r| {
                // positivity: integer root coordinates, all ≥ 0
                (0..self.rank).all(|i| {
                    let mut acc = BigRational::zero();
                    for j in 0..self.rank {
                        acc += &self.inverse_cartan[(i, j)]
                            * BigRational::from(BigInt::from(r.coords()[j]));
                    }
                    !acc.is_negative()
                })
            })
            .collect();
        Ok(positive)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.rank)
    }
}

fn chain_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn cartan_matrix(label: TypeLabel, n: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::BadRootSystem(label.as_char(), n);
    match label {
        TypeLabel::A => {
            if n < 1 {
                return Err(bad());
            }
            Ok(chain_matrix(n))
        }
        TypeLabel::B => {
            // α_n short: a[n-1][n-2] = -2 (0-based)
            if n < 2 {
                return Err(bad());
            }
            let mut m = chain_matrix(n);
            m[n - 1][n - 2] = -2;
            Ok(m)
        }
        TypeLabel::C => {
            // α_n long: a[n-2][n-1] = -2
            if n < 2 {
                return Err(bad());
            }
            let mut m = chain_matrix(n);
            m[n - 2][n - 1] = -2;
            Ok(m)
        }
        TypeLabel::D => {
            if n < 3 {
                return Err(bad());
            }
            let mut m = chain_matrix(n);
            // detach node n-1 from the chain, fork it onto node n-3
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            Ok(m)
        }
        TypeLabel::E => {
            if !(6..=8).contains(&n) {
                return Err(bad());
            }
            // Bourbaki: chain 1-3-4-5-…-n with node 2 attached to node 4
            let mut m = vec![vec![0i64; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut link = |a: usize, b: usize| {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(2, 4);
            for v in 3..n {
                link(v, v + 1);
            }
            Ok(m)
        }
        TypeLabel::F => {
            if n != 4 {
                return Err(bad());
            }
            // α_1, α_2 long; α_3, α_4 short
            Ok(vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ])
        }
        TypeLabel::G => {
            if n != 2 {
                return Err(bad());
            }
            // α_1 short, α_2 long
            Ok(vec![vec![2, -3], vec![-1, 2]])
        }
    }
}

fn symmetrizer(label: TypeLabel, n: usize) -> Vec<BigRational> {
    let one = BigRational::one;
    let half = || BigRational::new(BigInt::from(1), BigInt::from(2));
    let third = || BigRational::new(BigInt::from(1), BigInt::from(3));
    match label {
        TypeLabel::A | TypeLabel::D | TypeLabel::E => vec![one(); n],
        TypeLabel::B => {
            let mut d = vec![one(); n];
            d[n - 1] = half();
            d
        }
        TypeLabel::C => {
            let mut d = vec![half(); n];
            d[n - 1] = one();
            d
        }
        TypeLabel::F => vec![one(), one(), half(), half()],
        TypeLabel::G => vec![third(), one()],
    }
}

fn weyl_group_order(label: TypeLabel, n: usize) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    match label {
        TypeLabel::A => fact(n + 1),
        TypeLabel::B | TypeLabel::C => (1u64 << n) * fact(n),
        TypeLabel::D => (1u64 << (n - 1)) * fact(n),
        TypeLabel::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!("rank checked at construction"),
        },
        TypeLabel::F => 1_152,
        TypeLabel::G => 12,
    }
}
