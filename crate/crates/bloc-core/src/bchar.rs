//! Graded characters of the multiplicity spaces `B_loc(γ, V)` and
//! `B(γ, V)`, their graded duals, the conjugate/dual duality, and the
//! type-A natural-representation specialization through Kostka numbers.
//!
//! The central formula is
//!
//! ```text
//! ch_gr B_loc(γ, V) = Σ_{μ ∈ P⁺} Σ_{σ,τ ⊢ m} s_μ(τ, V) · c^γ_{τσ} · f_σ(u) · e(O(μ))
//! ```
//!
//! where `s_μ(τ, V)` is the multiplicity of `S(τ)` in `(V^⊗m)_μ`,
//! `c^γ_{τσ}` a Kronecker coefficient and `f_σ(u)` a fake degree.  The
//! `μ`-sum runs over the dominant representatives of the support of
//! `chV^m`, which is finite.  Multiplying by the truncated Hilbert series
//! `H(A_m) = Π (1-u^i)^{-1}` turns `B_loc` into `B`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{cycle_trace_multiset, dual_weight, RootSystem, Weight, WeightMultiset};
use crate::partitions::{enumerate_partitions, fake_degree, Partition};
use crate::poly::{symmetric_hilbert_truncated, LaurentPolynomial};
use crate::symgroup::{class_size, factorial, TableStore};

/// A finite-dimensional module presented by its dominant highest weights
/// with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    rs: RootSystem,
    highest_weights: Vec<(Weight, u64)>,
}

impl ModuleSpec {
    pub fn new(rs: RootSystem, highest_weights: Vec<(Weight, u64)>) -> Result<Self> {
        for (w, mult) in &highest_weights {
            crate::lie::require_dominant(w)?;
            if w.rank() != rs.rank() {
                return Err(Error::SizeMismatch(alloc::format!(
                    "weight {w} has wrong rank for {rs}"
                )));
            }
            if *mult == 0 {
                return Err(Error::SizeMismatch(alloc::format!(
                    "zero multiplicity for weight {w}"
                )));
            }
        }
        Ok(Self {
            rs,
            highest_weights,
        })
    }

    /// The simple module `V(λ)`.
    pub fn simple(rs: RootSystem, highest_weight: Weight) -> Result<Self> {
        Self::new(rs, alloc::vec![(highest_weight, 1)])
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn highest_weights(&self) -> &[(Weight, u64)] {
        &self.highest_weights
    }

    /// The dual module: every highest weight replaced by `λ∨`.
    pub fn dual(&self) -> Result<Self> {
        let highest_weights = self
            .highest_weights
            .iter()
            .map(|(w, m)| Ok((dual_weight(&self.rs, w)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rs: self.rs.clone(),
            highest_weights,
        })
    }

    /// The character of the module.
    pub fn character(&self) -> Result<WeightMultiset> {
        crate::lie::module_character(&self.rs, &self.highest_weights)
    }
}

/// A graded character `Σ_{λ ∈ P⁺} g_λ(u) · e(O(λ))`: a map from dominant
/// weights to Laurent polynomials.  `truncated_at` records the degree
/// ceiling when the character is a truncation of a power series (the
/// `B(γ,V)` case); exact characters carry `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    rs: RootSystem,
    terms: BTreeMap<Weight, LaurentPolynomial>,
    truncated_at: Option<i64>,
}

impl GradedCharacter {
    pub fn new(rs: RootSystem) -> Self {
        Self {
            rs,
            terms: BTreeMap::new(),
            truncated_at: None,
        }
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn truncated_at(&self) -> Option<i64> {
        self.truncated_at
    }

    /// Terms in lexicographic weight order; every key is dominant and no
    /// polynomial is zero.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &LaurentPolynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Weight) -> LaurentPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `poly · e(O(lambda))`; zero results are dropped.
    pub fn add_term(&mut self, lambda: Weight, poly: &LaurentPolynomial) {
        debug_assert!(lambda.is_dominant());
        if poly.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(lambda.clone())
            .or_insert_with(LaurentPolynomial::zero);
        *entry += poly;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, rhs: &GradedCharacter) -> GradedCharacter {
        let mut out = self.clone();
        for (w, p) in rhs.terms() {
            out.add_term(w.clone(), p);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> GradedCharacter {
        let mut out = GradedCharacter::new(self.rs.clone());
        out.truncated_at = self.truncated_at;
        for (w, p) in self.terms() {
            out.add_term(w.clone(), &p.scale(c));
        }
        out
    }

    /// The graded dual: `Σ g_λ(u) e(O(λ)) ↦ Σ g_λ(u⁻¹) e(O(λ∨))`.
    /// An involution.
    pub fn dual(&self) -> Result<GradedCharacter> {
        let mut out = GradedCharacter::new(self.rs.clone());
        out.truncated_at = self.truncated_at;
        for (w, p) in self.terms() {
            out.add_term(dual_weight(&self.rs, w)?, &p.reverse());
        }
        Ok(out)
    }

    /// Multiply every coefficient polynomial by `u^k`.
    pub fn shift(&self, k: i64) -> GradedCharacter {
        let mut out = GradedCharacter::new(self.rs.clone());
        out.truncated_at = self.truncated_at;
        for (w, p) in self.terms() {
            out.add_term(w.clone(), &p.shift(k));
        }
        out
    }

    /// Evaluate every coefficient at `u = 1`: the plain `g`-character as a
    /// map from dominant weights to orbit multiplicities.
    pub fn forget_grading(&self) -> BTreeMap<Weight, BigInt> {
        self.terms
            .iter()
            .map(|(w, p)| (w.clone(), p.eval_at_one()))
            .collect()
    }
}

/// Precomputed per-`(V, m)` data: the `s_μ(τ, V)` table over the dominant
/// support of `chV^m`, plus fake degrees, shared by all `γ`.
struct FormulaContext {
    taus: Vec<Partition>,
    fakes: Vec<LaurentPolynomial>,
    /// dominant μ → `s_μ(τ, V)` indexed like `taus`
    s_table: BTreeMap<Weight, Vec<u64>>,
}

fn formula_context(
    v: &ModuleSpec,
    m: usize,
    tables: &mut TableStore,
) -> Result<FormulaContext> {
    let rs = v.rs();
    let ch_v = v.character()?;
    let power = ch_v.pow(m, rs.rank());
    let taus = enumerate_partitions(m);
    let fakes: Vec<LaurentPolynomial> = taus.iter().map(fake_degree).collect();

    // dominant support of chV^m
    let mut dominants: Vec<Weight> = Vec::new();
    for (w, _) in power.entries() {
        if w.is_dominant() {
            dominants.push(w.clone());
        }
    }

    // trace multisets per cycle type, then project all (μ, τ) at once
    let classes = enumerate_partitions(m);
    let traces: Vec<(BigInt, WeightMultiset)> = classes
        .iter()
        .map(|c| (class_size(c), cycle_trace_multiset(&ch_v, c)))
        .collect();
    let table = tables.table(m)?;
    let m_fact = factorial(m);

    let mut s_table = BTreeMap::new();
    for mu in dominants {
        let class_traces: Vec<BigInt> = traces
            .iter()
            .map(|(_, ms)| ms.coefficient(&mu))
            .collect();
        let mut row = Vec::with_capacity(taus.len());
        for tau in &taus {
            let mut total = BigInt::zero();
            for ((class, (size, _)), trace) in classes.iter().zip(&traces).zip(&class_traces) {
                total += size * table.chi(tau, class)? * trace;
            }
            let (q, r) = num_integer::Integer::div_rem(&total, &m_fact);
            if !r.is_zero() || q < BigInt::zero() {
                return Err(Error::Consistency(alloc::format!(
                    "s_mu({tau}, {mu}) projection is not a non-negative integer"
                )));
            }
            row.push(u64::try_from(&q).map_err(|_| {
                Error::Consistency(alloc::string::String::from("s_mu overflow"))
            })?);
        }
        s_table.insert(mu, row);
    }
    Ok(FormulaContext {
        taus,
        fakes,
        s_table,
    })
}

/// The graded character of `B_loc(γ, V)` inside `(V ⊗ C[t])^⊗m`:
/// `Σ_μ Σ_{σ,τ} s_μ(τ,V) c^γ_{τσ} f_σ(u) e(O(μ))`.  Exact; every
/// coefficient polynomial has non-negative coefficients and degree at most
/// `C(m,2)`.
pub fn graded_char_b_loc(
    gamma: &Partition,
    v: &ModuleSpec,
    m: usize,
    tables: &mut TableStore,
) -> Result<GradedCharacter> {
    if gamma.size() != m {
        return Err(Error::SizeMismatch(alloc::format!(
            "gamma {gamma} does not partition m = {m}"
        )));
    }
    let ctx = formula_context(v, m, tables)?;
    assemble_from_context(gamma, v, m, &ctx, tables)
}

fn assemble_from_context(
    gamma: &Partition,
    v: &ModuleSpec,
    m: usize,
    ctx: &FormulaContext,
    tables: &mut TableStore,
) -> Result<GradedCharacter> {
    let table = tables.table(m)?;
    let n_tau = ctx.taus.len();
    // Kronecker row c^γ_{τσ} for this γ
    let mut kron = alloc::vec![alloc::vec![0u64; n_tau]; n_tau];
    for (i, tau) in ctx.taus.iter().enumerate() {
        for (j, sigma) in ctx.taus.iter().enumerate() {
            kron[i][j] = table.kronecker(tau, sigma, gamma)?;
        }
    }
    let mut out = GradedCharacter::new(v.rs().clone());
    for (mu, s_row) in &ctx.s_table {
        let mut poly = LaurentPolynomial::zero();
        for (i, &s) in s_row.iter().enumerate() {
            if s == 0 {
                continue;
            }
            for (j, fake) in ctx.fakes.iter().enumerate() {
                let c = kron[i][j];
                if c == 0 {
                    continue;
                }
                poly += &fake.scale(&(BigInt::from(s) * BigInt::from(c)));
            }
        }
        out.add_term(mu.clone(), &poly);
    }
    Ok(out)
}

/// The graded character of `B(γ, V)`: `H(A_m) · ch B_loc(γ, V)` with the
/// Hilbert series `Π_{i=1}^m (1-u^i)^{-1}` truncated above
/// `u^max_degree`.  The result is marked truncated.
pub fn graded_char_b(
    gamma: &Partition,
    v: &ModuleSpec,
    m: usize,
    max_degree: i64,
    tables: &mut TableStore,
) -> Result<GradedCharacter> {
    if max_degree < 0 {
        return Err(Error::SizeMismatch(alloc::format!(
            "max_degree must be non-negative, got {max_degree}"
        )));
    }
    let loc = graded_char_b_loc(gamma, v, m, tables)?;
    let hilbert = symmetric_hilbert_truncated(m, max_degree);
    let mut out = GradedCharacter::new(v.rs().clone());
    out.truncated_at = Some(max_degree);
    for (w, p) in loc.terms() {
        out.add_term(w.clone(), &(p * &hilbert).truncate_above(max_degree));
    }
    Ok(out)
}

/// Outcome of checking `ch B_loc(γ, V) = u^C(m,2) · (ch B_loc(γ∨, V*))*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub holds: bool,
    /// The grade shift `C(m,2)`.
    pub shift: i64,
    pub lhs: GradedCharacter,
    /// `u^shift · dual(ch B_loc(γ∨, V*))`, already shifted.
    pub rhs: GradedCharacter,
    /// Weights where the two sides differ (empty iff `holds`).
    pub differences: Vec<(Weight, LaurentPolynomial, LaurentPolynomial)>,
}

/// Check the duality between conjugate partitions and dual modules.
/// A failed equality is a report, not an error.
pub fn check_duality(
    gamma: &Partition,
    v: &ModuleSpec,
    m: usize,
    tables: &mut TableStore,
) -> Result<DualityReport> {
    let shift = (m * (m.saturating_sub(1)) / 2) as i64;
    let lhs = graded_char_b_loc(gamma, v, m, tables)?;
    let dual_side = graded_char_b_loc(&gamma.conjugate(), &v.dual()?, m, tables)?;
    let rhs = dual_side.dual()?.shift(shift);
    let mut differences = Vec::new();
    let mut weights: Vec<Weight> = lhs.terms.keys().cloned().collect();
    for w in rhs.terms.keys() {
        if !lhs.terms.contains_key(w) {
            weights.push(w.clone());
        }
    }
    weights.sort();
    weights.dedup();
    for w in weights {
        let a = lhs.coefficient(&w);
        let b = rhs.coefficient(&w);
        if a != b {
            differences.push((w, a, b));
        }
    }
    Ok(DualityReport {
        holds: differences.is_empty(),
        shift,
        lhs,
        rhs,
        differences,
    })
}

/// The weight of the standard basis vector `v^a = ⊗ v_i^{a_i}` of
/// `V(ω₁)^⊗m` for `sl_{n+1}`: `Σ_{i=1}^n (a_{i-1} - a_i) ω_i` where `a`
/// has `n+1` non-negative entries summing to `m`.  Dominant exactly when
/// `a` is weakly decreasing.
pub fn natural_rep_weight(n: usize, a: &[usize]) -> Result<Weight> {
    if a.len() != n + 1 {
        return Err(Error::SizeMismatch(alloc::format!(
            "composition has {} entries, expected rank+1 = {}",
            a.len(),
            n + 1
        )));
    }
    Ok(Weight::new(
        (1..=n).map(|i| a[i - 1] as i64 - a[i] as i64).collect(),
    ))
}

/// The `V = V(ω₁)` specialization for `sl_{n+1}`: the same character with
/// `s_μ(τ, V)` replaced by the Kostka number `K_{τ, a}`, summing over
/// partitions `a` of `m` with at most `n+1` parts:
///
/// ```text
/// ch_gr B_loc(γ) = Σ_{a} Σ_{σ, τ ≥ a} K_{τ,a} c^γ_{τσ} f_σ(u) e(O(μ_a))
/// ```
pub fn graded_char_natural(
    gamma: &Partition,
    n: usize,
    m: usize,
    tables: &mut TableStore,
) -> Result<GradedCharacter> {
    if gamma.size() != m {
        return Err(Error::SizeMismatch(alloc::format!(
            "gamma {gamma} does not partition m = {m}"
        )));
    }
    let rs = RootSystem::new(crate::lie::TypeLabel::A, n)?;
    let taus = enumerate_partitions(m);
    let fakes: Vec<LaurentPolynomial> = taus.iter().map(fake_degree).collect();
    let table = tables.table(m)?;
    let mut out = GradedCharacter::new(rs);
    for a in taus.iter().filter(|a| a.len() <= n + 1) {
        let mut padded = a.parts().to_vec();
        padded.resize(n + 1, 0);
        let mu = natural_rep_weight(n, &padded)?;
        let mut poly = LaurentPolynomial::zero();
        for tau in &taus {
            let k = crate::symgroup::kostka(tau, a.parts())?;
            if k == 0 {
                continue;
            }
            for (j, sigma) in taus.iter().enumerate() {
                let c = table.kronecker(tau, sigma, gamma)?;
                if c == 0 {
                    continue;
                }
                poly += &fakes[j].scale(&(BigInt::from(k) * BigInt::from(c)));
            }
        }
        out.add_term(mu, &poly);
    }
    Ok(out)
}

/// `chV^m · [m]_u!` as a graded character over dominant representatives:
/// the aggregate `Σ_γ dim S(γ) · ch B_loc(γ, V)` must equal this.
pub fn total_space_character(v: &ModuleSpec, m: usize) -> Result<GradedCharacter> {
    let ch_v = v.character()?;
    let power = ch_v.pow(m, v.rs().rank());
    let qfact = crate::poly::q_factorial(m);
    let mut out = GradedCharacter::new(v.rs().clone());
    for (w, mult) in power.entries() {
        if w.is_dominant() {
            out.add_term(w.clone(), &qfact.scale(mult));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::TypeLabel;
    use crate::partitions::parse_partition;
    use crate::poly::q_int;

    fn a_n(n: usize) -> RootSystem {
        RootSystem::new(TypeLabel::A, n).unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    fn pt(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    fn upoly(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn v_a1(k: i64) -> ModuleSpec {
        ModuleSpec::simple(a_n(1), w(&[k])).unwrap()
    }

    #[test]
    fn b_loc_a1_m2_both_gammas() {
        let mut tables = TableStore::new();
        let v = v_a1(1);
        let triv = graded_char_b_loc(&pt("2"), &v, 2, &mut tables).unwrap();
        assert_eq!(triv.len(), 2);
        assert_eq!(triv.coefficient(&w(&[2])), upoly(&[(0, 1)]));
        assert_eq!(triv.coefficient(&w(&[0])), upoly(&[(0, 1), (1, 1)]));
        assert_eq!(triv.truncated_at(), None);

        let sign = graded_char_b_loc(&pt("1,1"), &v, 2, &mut tables).unwrap();
        assert_eq!(sign.coefficient(&w(&[2])), upoly(&[(1, 1)]));
        assert_eq!(sign.coefficient(&w(&[0])), upoly(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn b_loc_m1_is_module_character() {
        // A_1^coin is one-dimensional, so m = 1 gives chV in grade 0
        let mut tables = TableStore::new();
        for v in [v_a1(1), v_a1(2), ModuleSpec::simple(a_n(2), w(&[1, 0])).unwrap()] {
            let ch = graded_char_b_loc(&pt("1"), &v, 1, &mut tables).unwrap();
            let full = v.character().unwrap();
            for (mu, poly) in ch.terms() {
                assert!(mu.is_dominant());
                assert_eq!(poly, &upoly(&[(0, 1)]).scale(&full.coefficient(mu)));
            }
        }
    }

    #[test]
    fn b_loc_size_mismatch() {
        let mut tables = TableStore::new();
        assert!(matches!(
            graded_char_b_loc(&pt("2,1"), &v_a1(1), 2, &mut tables),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn b_global_m1_is_current_module_character() {
        // chg V[t] = Σ_{r≥0} chV u^r, truncated at D
        let mut tables = TableStore::new();
        let ch = graded_char_b(&pt("1"), &v_a1(1), 1, 3, &mut tables).unwrap();
        assert_eq!(ch.truncated_at(), Some(3));
        assert_eq!(
            ch.coefficient(&w(&[1])),
            upoly(&[(0, 1), (1, 1), (2, 1), (3, 1)])
        );
    }

    #[test]
    fn b_global_a1_m2_truncated() {
        let mut tables = TableStore::new();
        let ch = graded_char_b(&pt("2"), &v_a1(1), 2, 2, &mut tables).unwrap();
        assert_eq!(ch.coefficient(&w(&[2])), upoly(&[(0, 1), (1, 1), (2, 2)]));
        assert_eq!(ch.coefficient(&w(&[0])), upoly(&[(0, 1), (1, 2), (2, 3)]));
        // degree-0 part of B equals degree-0 part of B_loc
        let loc = graded_char_b_loc(&pt("2"), &v_a1(1), 2, &mut tables).unwrap();
        let trunc0 = graded_char_b(&pt("2"), &v_a1(1), 2, 0, &mut tables).unwrap();
        for (mu, poly) in trunc0.terms() {
            assert_eq!(poly.coeff(0), loc.coefficient(mu).coeff(0));
        }
        assert!(graded_char_b(&pt("2"), &v_a1(1), 2, -1, &mut tables).is_err());
    }

    #[test]
    fn dual_character_examples() {
        let a1 = a_n(1);
        let mut chi = GradedCharacter::new(a1);
        chi.add_term(w(&[2]), &upoly(&[(1, 1)]));
        let dual = chi.dual().unwrap();
        assert_eq!(dual.coefficient(&w(&[2])), upoly(&[(-1, 1)]));
        assert_eq!(dual.dual().unwrap(), chi, "involution");

        let a2 = a_n(2);
        let mut chi = GradedCharacter::new(a2);
        chi.add_term(w(&[1, 0]), &upoly(&[(0, 1)]));
        let dual = chi.dual().unwrap();
        assert_eq!(dual.coefficient(&w(&[0, 1])), upoly(&[(0, 1)]));
        assert!(dual.coefficient(&w(&[1, 0])).is_zero());
    }

    #[test]
    fn duality_check_a1_m2() {
        let mut tables = TableStore::new();
        let report = check_duality(&pt("2"), &v_a1(1), 2, &mut tables).unwrap();
        assert!(report.holds, "differences: {:?}", report.differences);
        assert_eq!(report.shift, 1);
        let report = check_duality(&pt("1,1"), &v_a1(1), 2, &mut tables).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn duality_check_a2_m3_all_gammas() {
        let mut tables = TableStore::new();
        let v = ModuleSpec::simple(a_n(2), w(&[1, 0])).unwrap();
        for gamma in enumerate_partitions(3) {
            let report = check_duality(&gamma, &v, 3, &mut tables).unwrap();
            assert!(report.holds, "gamma = {gamma}");
            assert_eq!(report.shift, 3);
        }
    }

    #[test]
    fn natural_rep_weight_examples() {
        assert_eq!(natural_rep_weight(2, &[3, 0, 0]).unwrap(), w(&[3, 0]));
        assert_eq!(natural_rep_weight(1, &[1, 1]).unwrap(), w(&[0]));
        assert_eq!(natural_rep_weight(2, &[2, 1, 0]).unwrap(), w(&[1, 1]));
        assert!(natural_rep_weight(2, &[1, 1]).is_err());
        // dominant iff weakly decreasing
        assert!(!natural_rep_weight(2, &[1, 2, 0]).unwrap().is_dominant());
    }

    #[test]
    fn natural_specialization_matches_trace_path() {
        let mut tables = TableStore::new();
        for n in 1..=2usize {
            let rs = a_n(n);
            let v = ModuleSpec::simple(rs, Weight::fundamental(n, 1)).unwrap();
            for m in 1..=3usize {
                for gamma in enumerate_partitions(m) {
                    let kostka_path = graded_char_natural(&gamma, n, m, &mut tables).unwrap();
                    let trace_path = graded_char_b_loc(&gamma, &v, m, &mut tables).unwrap();
                    assert_eq!(kostka_path, trace_path, "n={n} m={m} gamma={gamma}");
                }
            }
        }
    }

    #[test]
    fn natural_char_m2_column_coefficient() {
        // for n ≥ m = 2, the coefficient of e(O(μ_(1,1))) in ch B_loc((2))
        // is f_(2) + f_(1,1) = 1 + u
        let mut tables = TableStore::new();
        let ch = graded_char_natural(&pt("2"), 3, 2, &mut tables).unwrap();
        let mu = natural_rep_weight(3, &[1, 1, 0, 0]).unwrap();
        assert_eq!(ch.coefficient(&mu), upoly(&[(0, 1), (1, 1)]));
        // m = 1 reduces to e(O(ω₁))
        let ch1 = graded_char_natural(&pt("1"), 3, 1, &mut tables).unwrap();
        assert_eq!(ch1.coefficient(&Weight::fundamental(3, 1)), upoly(&[(0, 1)]));
        assert_eq!(ch1.len(), 1);
    }

    #[test]
    fn aggregation_identity_small() {
        // Σ_γ dim S(γ) · ch B_loc(γ,V) = chV^m · [m]_u!
        let mut tables = TableStore::new();
        for (v, m) in [(v_a1(1), 2usize), (v_a1(1), 3), (v_a1(2), 2)] {
            let mut total = GradedCharacter::new(v.rs().clone());
            for gamma in enumerate_partitions(m) {
                let ch = graded_char_b_loc(&gamma, &v, m, &mut tables).unwrap();
                total = total.add(&ch.scale(&BigInt::from(gamma.dim_irrep())));
            }
            let expected = total_space_character(&v, m).unwrap();
            assert_eq!(total, expected, "m = {m}");
        }
    }

    #[test]
    fn coefficients_nonnegative_and_bounded() {
        let mut tables = TableStore::new();
        let v = ModuleSpec::simple(a_n(2), w(&[1, 0])).unwrap();
        for m in 1..=4usize {
            let top = (m * (m - 1) / 2) as i64;
            for gamma in enumerate_partitions(m) {
                let ch = graded_char_b_loc(&gamma, &v, m, &mut tables).unwrap();
                for (mu, poly) in ch.terms() {
                    assert!(poly.is_nonnegative(), "m={m} gamma={gamma} mu={mu}");
                    assert!(poly.min_degree().unwrap() >= 0);
                    assert!(poly.max_degree().unwrap() <= top);
                }
            }
        }
    }

    #[test]
    fn b_equals_b_loc_times_hilbert() {
        let mut tables = TableStore::new();
        let v = v_a1(2);
        let m = 3;
        let d = 5i64;
        let hilbert = symmetric_hilbert_truncated(m, d);
        for gamma in enumerate_partitions(m) {
            let loc = graded_char_b_loc(&gamma, &v, m, &mut tables).unwrap();
            let global = graded_char_b(&gamma, &v, m, d, &mut tables).unwrap();
            for (mu, poly) in loc.terms() {
                let expect = (poly * &hilbert).truncate_above(d);
                assert_eq!(global.coefficient(mu), expect, "gamma={gamma} mu={mu}");
            }
        }
    }

    #[test]
    fn total_space_character_is_qfactorial_weighted() {
        let v = v_a1(1);
        let total = total_space_character(&v, 2).unwrap();
        assert_eq!(total.coefficient(&w(&[2])), q_int(2).scale(&BigInt::from(1)));
        assert_eq!(total.coefficient(&w(&[0])), q_int(2).scale(&BigInt::from(2)));
    }
}
