//! Independent brute-force construction of
//! `M_loc = V^⊗m ⊗ A_m^coin` with explicit commuting `g[t]`- and
//! `S_m`-actions, used to verify the character formulas at desk scale.
//!
//! The basis of the grade-`k` slice is (tensor word in the `V`-basis) ×
//! (coinvariant coset of degree `k`); `S_m` acts by simultaneous place
//! permutation of words and the induced action on cosets, `g` acts on
//! words alone, and `x ⊗ t` acts by `Σ_p x_p ⊗ (t_p ·)`.  Everything is a
//! finite exact-rational matrix, so every structural claim (commuting
//! actions, weight stability, multiplicity counts) becomes a finite check
//! that shares nothing with the closed character formula it validates.

mod coinvariant;
mod explicit;

pub use coinvariant::{
    build_coinvariant_ring, coinvariant_isotypic_series, CoinvariantRing, DegreeSlice, Monomial,
};
pub use explicit::{build_natural_module, build_sl2_module, ExplicitModule};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bchar::GradedCharacter;
use crate::error::{Error, Result};
use crate::lie::Weight;
use crate::partitions::{enumerate_partitions, Partition};
use crate::poly::LaurentPolynomial;
use crate::ratmat::RatMat;
use crate::symgroup::{class_size, factorial, CharacterTable};

/// Size caps for oracle constructions.  Configuration, not hard-coded: the
/// CLI reads overrides from the environment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest `m` for which the coinvariant ring may be built.
    pub max_m: usize,
    /// Largest total dimension `dim(V)^m · m!` of the localized bimodule.
    pub max_dim: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_m: 5,
            max_dim: 20_000,
        }
    }
}

/// Adjacent-transposition word (0-based generator indices) for the
/// canonical representative of a conjugacy class: the cycle
/// `(a, a+1, …, b)` contributes `s_a s_{a+1} ⋯ s_{b-1}`.
pub(crate) fn class_word(cycle_type: &Partition) -> Vec<usize> {
    let mut word = Vec::new();
    let mut offset = 0usize;
    for &len in cycle_type.parts() {
        for i in 0..len.saturating_sub(1) {
            word.push(offset + i);
        }
        offset += len;
    }
    word
}

/// The localized graded bimodule `M_loc = V^⊗m ⊗ A_m^coin` with explicit
/// action matrices.
#[derive(Debug, Clone)]
pub struct MLoc {
    v: ExplicitModule,
    m: usize,
    ring: CoinvariantRing,
    /// all `dim(V)^m` tensor words, lexicographic
    words: Vec<Vec<usize>>,
    word_weights: Vec<Weight>,
    /// `transpositions[k][i]`: matrix of `s_{i+1}` on the grade-`k` slice
    transpositions: Vec<Vec<RatMat>>,
}

impl MLoc {
    pub fn v(&self) -> &ExplicitModule {
        &self.v
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> &CoinvariantRing {
        &self.ring
    }

    /// Top grade `C(m,2)`.
    pub fn top_grade(&self) -> usize {
        self.ring.top_degree()
    }

    /// Dimension of the grade-`k` slice: `dim(V)^m · dim R[k]`.
    pub fn grade_dimension(&self, k: usize) -> usize {
        self.words.len() * self.ring.dimension(k)
    }

    pub fn total_dimension(&self) -> usize {
        (0..=self.top_grade()).map(|k| self.grade_dimension(k)).sum()
    }

    /// Weight of the joint basis vector with the given flat index in the
    /// grade-`k` slice (word-major layout).
    fn weight_of_index(&self, k: usize, idx: usize) -> &Weight {
        let dim_k = self.ring.dimension(k);
        &self.word_weights[idx / dim_k]
    }

    /// Dimension of the `μ` weight space of the grade-`k` slice.
    pub fn weight_space_dimension(&self, k: usize, mu: &Weight) -> usize {
        let dim_k = self.ring.dimension(k);
        self.word_weights.iter().filter(|w| *w == mu).count() * dim_k
    }

    /// Matrix of the generator `x ⊗ t^r` (given by its matrix `gen` on
    /// `V` and `r ∈ {0, 1}`) from the grade-`k` slice to grade `k + r`.
    /// `Σ_p (x acting in position p) ⊗ (t_p^r ·)`.
    pub fn generator_action(&self, gen: &RatMat, t_degree: usize, k: usize) -> RatMat {
        debug_assert!(t_degree <= 1);
        let target = k + t_degree;
        let dim_from = self.grade_dimension(k);
        let dim_to = if target <= self.top_grade() {
            self.grade_dimension(target)
        } else {
            0
        };
        let mut out = RatMat::zero(dim_to, dim_from);
        if dim_to == 0 || dim_from == 0 {
            return out;
        }
        let slice_from = self.ring.slice(k).expect("grade in range");
        let slice_to = self.ring.slice(target).expect("grade in range");
        let dim_rk_from = slice_from.dimension();
        let dim_rk_to = slice_to.dimension();
        let dim_v = self.v.dimension();
        for (w_idx, word) in self.words.iter().enumerate() {
            for p in 0..self.m {
                // x acting on position p: word letter word[p] ↦ Σ_a gen[a, word[p]] a
                for a in 0..dim_v {
                    let coeff = &gen[(a, word[p])];
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut new_word = word.clone();
                    new_word[p] = a;
                    let new_w_idx = word_index(&new_word, dim_v);
                    for (c_pos, basis_mono) in slice_from.basis_monomials().enumerate() {
                        let col = w_idx * dim_rk_from + c_pos;
                        if t_degree == 0 {
                            let row = new_w_idx * dim_rk_to + c_pos;
                            let v = &out[(row, col)] + coeff;
                            out[(row, col)] = v;
                        } else {
                            // multiply the coset representative by t_{p+1}
                            let mut mono = basis_mono.clone();
                            mono[p] += 1;
                            let nf = slice_to
                                .normal_form(&mono)
                                .expect("degree k+1 monomial");
                            for (r_pos, nf_c) in nf.iter().enumerate() {
                                if nf_c.is_zero() {
                                    continue;
                                }
                                let row = new_w_idx * dim_rk_to + r_pos;
                                let v = &out[(row, col)] + coeff * nf_c;
                                out[(row, col)] = v;
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Matrix of the adjacent transposition `s_{i+1}` on the grade-`k`
    /// slice.
    pub fn transposition(&self, k: usize, i: usize) -> &RatMat {
        &self.transpositions[k][i]
    }

    /// Matrix of the canonical class representative on the grade-`k`
    /// slice: product of transposition matrices along the class word.
    pub fn class_matrix(&self, k: usize, cycle_type: &Partition) -> RatMat {
        let dim = self.grade_dimension(k);
        let mut out = RatMat::identity(dim);
        for i in class_word(cycle_type) {
            out = out.mul(&self.transpositions[k][i]);
        }
        out
    }

    /// Per-weight traces of the class representative on the grade-`k`
    /// slice: weight spaces are `S_m`-stable, so the restricted trace is
    /// the diagonal sum over basis vectors of that word weight.
    pub fn class_traces_by_weight(
        &self,
        k: usize,
        cycle_type: &Partition,
    ) -> BTreeMap<Weight, BigRational> {
        let mat = self.class_matrix(k, cycle_type);
        let mut out: BTreeMap<Weight, BigRational> = BTreeMap::new();
        for idx in 0..self.grade_dimension(k) {
            let w = self.weight_of_index(k, idx).clone();
            *out.entry(w).or_insert_with(BigRational::zero) += &mat[(idx, idx)];
        }
        out
    }
}

fn word_index(word: &[usize], dim_v: usize) -> usize {
    word.iter().fold(0, |acc, &l| acc * dim_v + l)
}

fn all_words(dim_v: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(dim_v.pow(m as u32));
    let mut cur = alloc::vec![0usize; m];
    loop {
        out.push(cur.clone());
        let mut p = m;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            cur[p] += 1;
            if cur[p] < dim_v {
                break;
            }
            cur[p] = 0;
        }
    }
}

/// Build the localized bimodule model, enforcing the dimension budget.
pub fn build_m_loc(v: &ExplicitModule, m: usize, budget: &OracleBudget) -> Result<MLoc> {
    if m == 0 {
        return Err(Error::SizeMismatch(alloc::string::String::from(
            "tensor power needs m >= 1",
        )));
    }
    let total = v
        .dimension()
        .checked_pow(m as u32)
        .and_then(|p| p.checked_mul((1..=m).product::<usize>()))
        .ok_or(Error::BudgetExceeded {
            what: "localized bimodule dimension",
            requested: usize::MAX,
            budget: budget.max_dim,
        })?;
    if total > budget.max_dim {
        return Err(Error::BudgetExceeded {
            what: "localized bimodule dimension",
            requested: total,
            budget: budget.max_dim,
        });
    }
    let ring = build_coinvariant_ring(m, budget)?;
    let words = all_words(v.dimension(), m);
    let word_weights: Vec<Weight> = words
        .iter()
        .map(|w| {
            let mut acc = Weight::zero(v.rs().rank());
            for &l in w {
                acc = &acc + &v.basis_weights()[l];
            }
            acc
        })
        .collect();

    // joint transposition matrices: permute the word, act on the coset
    let mut transpositions = Vec::with_capacity(ring.top_degree() + 1);
    for k in 0..=ring.top_degree() {
        let dim_k = ring.dimension(k);
        let dim = words.len() * dim_k;
        let mut per_gen = Vec::with_capacity(m.saturating_sub(1));
        for i in 0..m.saturating_sub(1) {
            let coset = ring.transposition(k, i);
            let mut mat = RatMat::zero(dim, dim);
            for (w_idx, word) in words.iter().enumerate() {
                let mut permuted = word.clone();
                permuted.swap(i, i + 1);
                let new_w_idx = word_index(&permuted, v.dimension());
                for c_col in 0..dim_k {
                    for c_row in 0..dim_k {
                        let entry = &coset[(c_row, c_col)];
                        if !entry.is_zero() {
                            mat[(new_w_idx * dim_k + c_row, w_idx * dim_k + c_col)] =
                                entry.clone();
                        }
                    }
                }
            }
            per_gen.push(mat);
        }
        transpositions.push(per_gen);
    }
    Ok(MLoc {
        v: v.clone(),
        m,
        ring,
        words,
        word_weights,
        transpositions,
    })
}

/// Result of the structural verification of an [`MLoc`] model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingReport {
    /// Commutator checks `[generator ⊗ t^r, s_i] = 0` that were run.
    pub commutator_checks: usize,
    /// Weight-stability checks of transposition matrices.
    pub weight_checks: usize,
}

/// Assert that every Chevalley generator action (`x_i^± ⊗ 1` and
/// `x_i^± ⊗ t`) commutes with every adjacent transposition on the model,
/// and that the transpositions preserve the weight decomposition.
pub fn verify_commuting_actions(mloc: &MLoc) -> Result<CommutingReport> {
    mloc.v().verify()?;
    let m = mloc.m();
    let rank = mloc.v().rs().rank();
    let top = mloc.top_grade();
    let mut commutator_checks = 0;
    let mut weight_checks = 0;

    // weight stability of the S_m action
    for k in 0..=top {
        for i in 0..m.saturating_sub(1) {
            let s = mloc.transposition(k, i);
            for row in 0..s.rows() {
                for col in 0..s.cols() {
                    if !s[(row, col)].is_zero()
                        && mloc.weight_of_index(k, row) != mloc.weight_of_index(k, col)
                    {
                        return Err(Error::Consistency(alloc::format!(
                            "transposition s_{} mixes weights at grade {k}",
                            i + 1
                        )));
                    }
                }
            }
            weight_checks += 1;
        }
    }

    // commutators with g ⊗ 1 and g ⊗ t
    for k in 0..=top {
        for gen_idx in 0..rank {
            for (label, gen) in [
                ("raising", mloc.v().raising(gen_idx).clone()),
                ("lowering", mloc.v().lowering(gen_idx).clone()),
            ] {
                for t_degree in 0..=1usize {
                    if k + t_degree > top && t_degree == 1 {
                        // target grade is zero-dimensional; nothing to check
                        continue;
                    }
                    let action = mloc.generator_action(&gen, t_degree, k);
                    for i in 0..m.saturating_sub(1) {
                        let s_from = mloc.transposition(k, i);
                        let s_to = mloc.transposition(k + t_degree, i);
                        let lhs = s_to.mul(&action);
                        let rhs = action.mul(s_from);
                        if lhs != rhs {
                            return Err(Error::Consistency(alloc::format!(
                                "[x_{}^{label} ⊗ t^{t_degree}, s_{}] ≠ 0 at grade {k}",
                                gen_idx + 1,
                                i + 1
                            )));
                        }
                        commutator_checks += 1;
                    }
                }
            }
        }
    }
    Ok(CommutingReport {
        commutator_checks,
        weight_checks,
    })
}

/// The graded character of `B_loc(γ, V)` read off the explicit model: for
/// each grade `k` and dominant weight `μ`, the multiplicity of `S(γ)` in
/// `(M_loc[k])_μ` by character projection.  Uses only the character table
/// and explicit traces, independent of the closed-formula path.
pub fn oracle_graded_char_b_loc(
    mloc: &MLoc,
    gamma: &Partition,
    table: &CharacterTable,
) -> Result<GradedCharacter> {
    let m = mloc.m();
    if gamma.size() != m || table.m() != m {
        return Err(Error::SizeMismatch(alloc::format!(
            "gamma {gamma} and table m={} must match model m={m}",
            table.m()
        )));
    }
    let classes = enumerate_partitions(m);
    let m_fact = factorial(m);
    let mut out = GradedCharacter::new(mloc.v().rs().clone());
    for k in 0..=mloc.top_grade() {
        let per_class: Vec<BTreeMap<Weight, BigRational>> = classes
            .iter()
            .map(|c| mloc.class_traces_by_weight(k, c))
            .collect();
        let mut weights: Vec<Weight> = per_class
            .iter()
            .flat_map(|m| m.keys().cloned())
            .collect();
        weights.sort();
        weights.dedup();
        for mu in weights.into_iter().filter(Weight::is_dominant) {
            let mut total = BigRational::zero();
            for (class, traces) in classes.iter().zip(&per_class) {
                let tr = traces.get(&mu).cloned().unwrap_or_else(BigRational::zero);
                total += BigRational::from(class_size(class) * table.chi(gamma, class)?) * tr;
            }
            if !total.is_integer() {
                return Err(Error::Consistency(alloc::format!(
                    "projection of S({gamma}) at grade {k}, weight {mu} is not integral"
                )));
            }
            let (q, r) = num_integer::Integer::div_rem(&total.to_integer(), &m_fact);
            if !r.is_zero() || q < BigInt::zero() {
                return Err(Error::Consistency(alloc::format!(
                    "multiplicity of S({gamma}) at grade {k}, weight {mu} is not a non-negative integer"
                )));
            }
            if !q.is_zero() {
                out.add_term(mu, &LaurentPolynomial::monomial(k as i64, q));
            }
        }
    }
    Ok(out)
}
