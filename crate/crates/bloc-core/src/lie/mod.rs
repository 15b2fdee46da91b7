//! Root-system data, Weyl orbits, dual weights, irreducible characters,
//! and `S_m`-equivariant traces on weight spaces of tensor powers.
//!
//! Weights live in fundamental-weight coordinates (`coords[i] = ⟨λ, α_i∨⟩`),
//! so dominance is coordinate non-negativity and simple reflections are
//! integer operations through the Cartan matrix.  Conversion to root
//! coordinates uses the exact rational inverse Cartan matrix and only
//! happens transiently (dominance cones, inner products).

mod rootsystem;
mod weights;

pub use rootsystem::{RootSystem, TypeLabel};
pub use weights::{Weight, WeightMultiset};

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symgroup::{class_size, factorial, CharacterTable};

/// Apply the simple reflection `s_i` (1-based node index) to `mu`:
/// `s_i(μ) = μ - ⟨μ, α_i∨⟩ α_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize, mu: &Weight) -> Result<Weight> {
    if i == 0 || i > rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rs.rank(),
        });
    }
    Ok(reflect(rs, i - 1, mu))
}

/// `s_i` with a 0-based node index; no bounds check.
fn reflect(rs: &RootSystem, i: usize, mu: &Weight) -> Weight {
    let c = mu.coords()[i];
    let coords = mu
        .coords()
        .iter()
        .enumerate()
        .map(|(k, &x)| x - c * rs.cartan()[k][i])
        .collect();
    Weight::new(coords)
}

/// The unique dominant weight in the Weyl orbit of `mu`, found by
/// reflecting at a negative coordinate until none remains.
pub fn dominant_representative(rs: &RootSystem, mu: &Weight) -> Weight {
    let mut w = mu.clone();
    loop {
        match w.coords().iter().position(|&c| c < 0) {
            Some(i) => w = reflect(rs, i, &w),
            None => return w,
        }
    }
}

/// The full Weyl orbit `O(λ)` of a dominant weight, by breadth-first
/// closure under simple reflections.  Sorted, so the order is canonical.
pub fn weyl_orbit(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    require_dominant(lambda)?;
    let mut seen = alloc::collections::BTreeSet::new();
    let mut queue = alloc::vec![lambda.clone()];
    seen.insert(lambda.clone());
    while let Some(w) = queue.pop() {
        for i in 0..rs.rank() {
            let r = reflect(rs, i, &w);
            if seen.insert(r.clone()) {
                queue.push(r);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `λ∨ = -w₀·λ`, the highest weight of `V(λ)*`.
pub fn dual_weight(rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
    require_dominant(lambda)?;
    Ok(dominant_representative(rs, &-lambda))
}

pub(crate) fn require_dominant(w: &Weight) -> Result<()> {
    if w.is_dominant() {
        Ok(())
    } else {
        Err(Error::NonDominant(w.to_string()))
    }
}

/// The character of the simple module `V(λ)` as a Weyl-invariant weight
/// multiset, computed by the Freudenthal recursion on dominant weights and
/// expanded over orbits.  The total size is checked against the Weyl
/// dimension formula.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<WeightMultiset> {
    require_dominant(lambda)?;
    let dominant = freudenthal_dominant_multiplicities(rs, lambda)?;
    let mut out = WeightMultiset::new();
    let mut total = BigInt::zero();
    for (mu, mult) in &dominant {
        let orbit = weyl_orbit(rs, mu)?;
        total += mult * BigInt::from(orbit.len());
        for w in orbit {
            out.insert(w, mult.clone());
        }
    }
    let dim = rs.weyl_dimension(lambda)?;
    if total != dim {
        return Err(Error::Consistency(alloc::format!(
            "character of V({lambda}) has size {total}, Weyl dimension formula gives {dim}"
        )));
    }
    Ok(out)
}

/// Dominant weight multiplicities of `V(λ)` by Freudenthal's formula:
/// `(‖λ+ρ‖² - ‖μ+ρ‖²)·m_μ = 2 Σ_{α>0} Σ_{k≥1} m_{μ+kα} (μ+kα, α)`.
fn freudenthal_dominant_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<BTreeMap<Weight, BigInt>> {
    // weight support = all μ whose dominant representative is ≤ λ,
    // found by BFS subtracting simple roots
    let mut support = alloc::collections::BTreeSet::new();
    let mut queue = alloc::vec![lambda.clone()];
    support.insert(lambda.clone());
    while let Some(w) = queue.pop() {
        for i in 0..rs.rank() {
            let lower = w.sub_root(rs, i);
            if support.contains(&lower) {
                continue;
            }
            let dom = dominant_representative(rs, &lower);
            if rs.root_cone_coords(&(lambda - &dom)).is_some() {
                support.insert(lower.clone());
                queue.push(lower);
            }
        }
    }
    let in_support = |w: &Weight| support.contains(w);

    // dominant weights sorted by height of λ - μ, ascending (λ itself first)
    let mut dominants: Vec<(BigInt, Weight)> = Vec::new();
    for w in support.iter().filter(|w| w.is_dominant()) {
        let coords = rs
            .root_cone_coords(&(lambda - w))
            .ok_or_else(|| Error::Consistency("support weight not under lambda".to_string()))?;
        dominants.push((coords.iter().sum(), w.clone()));
    }
    dominants.sort();

    let rho = Weight::rho(rs.rank());
    let lam_rho = lambda + &rho;
    let norm_lam = rs.inner(&lam_rho, &lam_rho);

    let mut mults: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (height, mu) in dominants {
        if height.is_zero() {
            mults.insert(mu, BigInt::from(1));
            continue;
        }
        let mut rhs = BigRational::zero();
        for alpha in rs.positive_roots() {
            let mut nu = &mu + alpha;
            while in_support(&nu) {
                // ν + kα sits strictly above μ, so its dominant
                // representative was already processed
                let m = mults
                    .get(&dominant_representative(rs, &nu))
                    .ok_or_else(|| {
                        Error::Consistency(alloc::format!(
                            "Freudenthal visited {nu} before its dominant representative"
                        ))
                    })?;
                rhs += BigRational::from(m.clone()) * rs.inner(&nu, alpha);
                nu = &nu + alpha;
            }
        }
        let mu_rho = &mu + &rho;
        let denom = &norm_lam - rs.inner(&mu_rho, &mu_rho);
        if !denom.is_positive() {
            return Err(Error::Consistency(alloc::format!(
                "Freudenthal denominator not positive at {mu}"
            )));
        }
        let m = rhs * BigRational::from(BigInt::from(2)) / denom;
        if !m.is_integer() {
            return Err(Error::Consistency(alloc::format!(
                "Freudenthal multiplicity at {mu} is not an integer: {m}"
            )));
        }
        let m = m.to_integer();
        if m.is_negative() {
            return Err(Error::Consistency(alloc::format!(
                "Freudenthal multiplicity at {mu} is negative"
            )));
        }
        mults.insert(mu, m);
    }
    mults.retain(|_, m| m.is_positive());
    Ok(mults)
}

/// Character of a direct sum: the multiplicity-weighted sum of the
/// irreducible characters of the listed dominant highest weights.
pub fn module_character(
    rs: &RootSystem,
    highest_weights: &[(Weight, u64)],
) -> Result<WeightMultiset> {
    let mut out = WeightMultiset::new();
    for (hw, mult) in highest_weights {
        let ch = irreducible_character(rs, hw)?;
        for (w, m) in ch.entries() {
            out.insert(w.clone(), m * BigInt::from(*mult));
        }
    }
    Ok(out)
}

/// Trace of any permutation with the given cycle type on the `μ` weight
/// space of `V^⊗m`, where `chV` is the character of `V` and `m` is the sum
/// of the cycle lengths.
///
/// A basis tuple is fixed by a permutation exactly when it is constant on
/// each cycle, so the trace generating function is the product over cycles
/// of the `ℓ`-dilated character `Σ_ν mult(ν) e(ℓν)`; the trace is the
/// coefficient of `μ`.  It is always non-negative.
pub fn tensor_power_class_trace(
    ch_v: &WeightMultiset,
    cycle_type: &Partition,
    mu: &Weight,
) -> BigInt {
    cycle_trace_multiset(ch_v, cycle_type).coefficient(mu)
}

/// The full trace generating multiset for one cycle type (shared by all μ).
pub(crate) fn cycle_trace_multiset(
    ch_v: &WeightMultiset,
    cycle_type: &Partition,
) -> WeightMultiset {
    let mut factors: Vec<WeightMultiset> = cycle_type
        .parts()
        .iter()
        .map(|&l| ch_v.dilate(l as i64))
        .collect();
    // accumulate smallest supports first to bound intermediate products
    factors.sort_by_key(WeightMultiset::support_size);
    let mut product = WeightMultiset::unit(ch_v.rank());
    for f in factors {
        product = product.mul(&f);
    }
    product
}

/// `s_μ(τ, V)`: the multiplicity of `S(τ)` in the `μ` weight space of
/// `V^⊗m` under place permutation, with `m = |τ|`, by character projection
/// `(1/m!) Σ_c |c| χ^τ(c) tr(c on (V^⊗m)_μ)`.
pub fn s_mu(
    ch_v: &WeightMultiset,
    tau: &Partition,
    mu: &Weight,
    table: &CharacterTable,
) -> Result<u64> {
    let m = tau.size();
    if table.m() != m {
        return Err(Error::SizeMismatch(alloc::format!(
            "character table is for S_{}, tau {tau} partitions {m}",
            table.m()
        )));
    }
    let mut total = BigInt::zero();
    for class in enumerate_partitions(m) {
        let trace = tensor_power_class_trace(ch_v, &class, mu);
        total += class_size(&class) * table.chi(tau, &class)? * trace;
    }
    let (q, r) = total.div_rem(&factorial(m));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Consistency(alloc::format!(
            "s_mu({tau}, {mu}) projection is not a non-negative integer"
        )));
    }
    u64::try_from(&q).map_err(|_| Error::Consistency("s_mu overflow".to_string()))
}
