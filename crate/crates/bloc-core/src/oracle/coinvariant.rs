//! The coinvariant ring `A_m^coin = C[t_1..t_m]/(e_1, …, e_m)` built
//! degree by degree from scratch: the degree-`d` slice of the ideal is
//! spanned by `e_j · x^β` over `1 ≤ j ≤ m` and monomials `β` of degree
//! `d - j`, and the quotient is read off from a sparse reduced row echelon
//! form of that span.  No monomial-basis theorem is assumed, so the model
//! is independent of any closed-form shortcut it is used to verify.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::OracleBudget;
use crate::partitions::{enumerate_partitions, Partition};
use crate::poly::LaurentPolynomial;
use crate::ratmat::RatMat;
use crate::symgroup::{class_size, factorial, CharacterTable};

/// Exponent vector of a monomial in `t_1..t_m`.
pub type Monomial = Vec<u32>;

/// One graded piece of the quotient: the monomials of that degree, which
/// of them represent the coset basis, and the normal form of every
/// monomial in coset coordinates.
#[derive(Debug, Clone)]
pub struct DegreeSlice {
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    /// monomial indices whose cosets form the basis, ascending
    basis: Vec<usize>,
    /// for each monomial index, its class in coset coordinates
    normal_forms: Vec<Vec<BigRational>>,
}

impl DegreeSlice {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|&i| &self.monomials[i])
    }

    /// Normal form of an arbitrary monomial of this degree.
    pub fn normal_form(&self, mono: &Monomial) -> Option<&[BigRational]> {
        self.index.get(mono).map(|&i| &self.normal_forms[i][..])
    }
}

/// The coinvariant ring with its grading, coset reduction maps, and the
/// matrices of the adjacent transpositions per degree.
#[derive(Debug, Clone)]
pub struct CoinvariantRing {
    m: usize,
    slices: Vec<DegreeSlice>,
    /// `transpositions[d][i]`: matrix of `s_{i+1}` on the degree-`d` basis
    transpositions: Vec<Vec<RatMat>>,
}

impl CoinvariantRing {
    pub fn m(&self) -> usize {
        self.m
    }

    /// Top nonzero degree, found during construction (not assumed): the
    /// build keeps quotienting until a slice comes out zero.
    pub fn top_degree(&self) -> usize {
        self.slices.len() - 1
    }

    pub fn slice(&self, d: usize) -> Option<&DegreeSlice> {
        self.slices.get(d)
    }

    pub fn dimension(&self, d: usize) -> usize {
        self.slices.get(d).map_or(0, DegreeSlice::dimension)
    }

    pub fn total_dimension(&self) -> usize {
        self.slices.iter().map(DegreeSlice::dimension).sum()
    }

    /// Hilbert series `Σ_d dim(R[d]) u^d`.
    pub fn hilbert_series(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.slices
                .iter()
                .enumerate()
                .map(|(d, s)| (d as i64, BigInt::from(s.dimension()))),
        )
    }

    pub fn transposition(&self, d: usize, i: usize) -> &RatMat {
        &self.transpositions[d][i]
    }

    /// Matrix of the canonical representative of a conjugacy class on the
    /// degree-`d` slice: the product of adjacent-transposition matrices
    /// along the class word.
    pub fn class_matrix(&self, d: usize, cycle_type: &Partition) -> RatMat {
        let dim = self.dimension(d);
        let mut out = RatMat::identity(dim);
        for i in super::class_word(cycle_type) {
            out = out.mul(&self.transpositions[d][i]);
        }
        out
    }
}

/// Build the coinvariant ring for `S_m` by exact linear algebra.
pub fn build_coinvariant_ring(m: usize, budget: &OracleBudget) -> Result<CoinvariantRing> {
    if m == 0 {
        return Err(Error::SizeMismatch(alloc::string::String::from(
            "coinvariant ring needs m >= 1",
        )));
    }
    if m > budget.max_m {
        return Err(Error::BudgetExceeded {
            what: "coinvariant ring degree",
            requested: m,
            budget: budget.max_m,
        });
    }
    // quotient degree by degree until a slice vanishes; the polynomial
    // ring is generated in degree one, so every later slice is zero too
    let mut slices = Vec::new();
    for d in 0.. {
        let slice = build_slice(m, d);
        if slice.dimension() == 0 {
            break;
        }
        if d > m * m {
            return Err(Error::Consistency(alloc::format!(
                "coinvariant ring of S_{m} did not terminate by degree {d}"
            )));
        }
        slices.push(slice);
    }
    let transpositions = slices
        .iter()
        .map(|slice| {
            (0..m.saturating_sub(1))
                .map(|i| transposition_matrix(slice, i))
                .collect()
        })
        .collect();
    Ok(CoinvariantRing {
        m,
        slices,
        transpositions,
    })
}

/// All monomials of degree `d` in `m` variables, lexicographically
/// descending on exponent vectors.
fn monomials(m: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u32; m];
    fn rec(m: usize, var: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if var + 1 == m {
            cur[var] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e;
            rec(m, var + 1, left - e, cur, out);
        }
        cur[var] = 0;
    }
    rec(m, 0, d, &mut cur, &mut out);
    out
}

/// The `j`-th elementary symmetric polynomial as a list of 0/1 exponent
/// vectors.
fn elementary_monomials(m: usize, j: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(m: usize, j: usize, from: usize, pick: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if pick.len() == j {
            let mut mono = alloc::vec![0u32; m];
            for &i in pick.iter() {
                mono[i] = 1;
            }
            out.push(mono);
            return;
        }
        for i in from..m {
            pick.push(i);
            rec(m, j, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(m, j, 0, &mut pick, &mut out);
    out
}

/// Sparse row: column index → coefficient, columns in the monomial order.
type Row = BTreeMap<usize, BigRational>;

fn build_slice(m: usize, d: usize) -> DegreeSlice {
    let monomials_d = monomials(m, d as u32);
    let index: BTreeMap<Monomial, usize> = monomials_d
        .iter()
        .enumerate()
        .map(|(i, mo)| (mo.clone(), i))
        .collect();

    // Reduced echelon set: pivot column → row with unit pivot whose other
    // support lies only at currently non-pivot columns.
    let mut pivot_rows: BTreeMap<usize, Row> = BTreeMap::new();

    let mut generators: Vec<Row> = Vec::new();
    for j in 1..=m.min(d) {
        let e_j = elementary_monomials(m, j);
        for beta in monomials(m, (d - j) as u32) {
            // generator row e_j · x^beta
            let mut row = Row::new();
            for term in &e_j {
                let mono: Monomial = beta.iter().zip(term).map(|(a, b)| a + b).collect();
                *row.entry(index[&mono]).or_insert_with(BigRational::zero) += BigRational::one();
            }
            generators.push(row);
        }
    }
    // inserting in leading-column order keeps the echelon close to
    // triangular and the transient fill-in small
    generators.sort_by_key(|r| r.keys().next().copied());
    for row in generators {
        insert_reduced(&mut pivot_rows, row);
    }

    let pivots: BTreeSet<usize> = pivot_rows.keys().copied().collect();
    let basis: Vec<usize> = (0..monomials_d.len())
        .filter(|i| !pivots.contains(i))
        .collect();
    let basis_pos: BTreeMap<usize, usize> =
        basis.iter().enumerate().map(|(p, &c)| (c, p)).collect();

    let normal_forms: Vec<Vec<BigRational>> = (0..monomials_d.len())
        .map(|col| {
            let mut nf = alloc::vec![BigRational::zero(); basis.len()];
            if let Some(&p) = basis_pos.get(&col) {
                nf[p] = BigRational::one();
            } else {
                // col ≡ -Σ (pivot row entries at basis columns)
                for (&c, coeff) in &pivot_rows[&col] {
                    if c != col {
                        nf[basis_pos[&c]] = -coeff.clone();
                    }
                }
            }
            nf
        })
        .collect();

    DegreeSlice {
        monomials: monomials_d,
        index,
        basis,
        normal_forms,
    }
}

/// Insert a row into a fully reduced echelon set, maintaining the
/// invariant that every stored row is zero at every other pivot column.
fn insert_reduced(pivot_rows: &mut BTreeMap<usize, Row>, mut row: Row) {
    // eliminate existing pivots from the row; the subtractions only add
    // support at non-pivot columns, so one pass suffices
    let present: Vec<usize> = row
        .keys()
        .copied()
        .filter(|c| pivot_rows.contains_key(c))
        .collect();
    for p in present {
        let factor = row.remove(&p).expect("pivot entry present");
        if factor.is_zero() {
            continue;
        }
        let pivot_row = &pivot_rows[&p];
        for (&c, v) in pivot_row {
            if c == p {
                continue;
            }
            let entry = row.entry(c).or_insert_with(BigRational::zero);
            *entry -= &factor * v;
            if entry.is_zero() {
                row.remove(&c);
            }
        }
    }
    // first nonzero column is the new pivot
    let Some((&p, _)) = row.iter().next() else {
        return; // dependent generator
    };
    let lead = row[&p].clone();
    for v in row.values_mut() {
        *v /= &lead;
    }
    // clear the new pivot column from every stored row
    let touched: Vec<usize> = pivot_rows
        .iter()
        .filter(|(_, r)| r.contains_key(&p))
        .map(|(&q, _)| q)
        .collect();
    for q in touched {
        let factor = pivot_rows.get_mut(&q).unwrap().remove(&p).unwrap();
        if factor.is_zero() {
            continue;
        }
        let stored = pivot_rows.get_mut(&q).unwrap();
        for (&c, v) in &row {
            if c == p {
                continue;
            }
            let entry = stored.entry(c).or_insert_with(BigRational::zero);
            *entry -= &factor * v;
            if entry.is_zero() {
                stored.remove(&c);
            }
        }
    }
    pivot_rows.insert(p, row);
}

/// Matrix of the adjacent transposition `s_{i+1}` (swapping `t_{i+1}` and
/// `t_{i+2}`) on the degree slice, in coset coordinates.
fn transposition_matrix(slice: &DegreeSlice, i: usize) -> RatMat {
    let dim = slice.basis.len();
    let mut mat = RatMat::zero(dim, dim);
    for (col_pos, &mono_idx) in slice.basis.iter().enumerate() {
        let mut permuted = slice.monomials[mono_idx].clone();
        permuted.swap(i, i + 1);
        let nf = slice
            .normal_form(&permuted)
            .expect("permuted monomial has the same degree");
        for (row_pos, v) in nf.iter().enumerate() {
            if !v.is_zero() {
                mat[(row_pos, col_pos)] = v.clone();
            }
        }
    }
    mat
}

/// Graded multiplicity of `S(σ)` in the coinvariant ring by character
/// projection per degree: `Σ_d mult(S(σ), R[d]) u^d`.  This is an
/// independent computation of the fake degree `f_σ(u)`.
pub fn coinvariant_isotypic_series(
    ring: &CoinvariantRing,
    sigma: &Partition,
    table: &CharacterTable,
) -> Result<LaurentPolynomial> {
    let m = ring.m();
    if sigma.size() != m || table.m() != m {
        return Err(Error::SizeMismatch(alloc::format!(
            "sigma {sigma} and table m={} must match ring m={m}",
            table.m()
        )));
    }
    let classes = enumerate_partitions(m);
    let m_fact = factorial(m);
    let mut series = LaurentPolynomial::zero();
    for d in 0..=ring.top_degree() {
        let mut total = BigRational::zero();
        for class in &classes {
            let tr = ring.class_matrix(d, class).trace();
            total += BigRational::from(class_size(class) * table.chi(sigma, class)?) * tr;
        }
        if !total.is_integer() {
            return Err(Error::Consistency(alloc::format!(
                "isotypic projection of {sigma} at degree {d} is not integral"
            )));
        }
        let (q, r) = num_integer::Integer::div_rem(&total.to_integer(), &m_fact);
        if !r.is_zero() {
            return Err(Error::Consistency(alloc::format!(
                "isotypic projection of {sigma} at degree {d} is not divisible by m!"
            )));
        }
        series.add_term(d as i64, q);
    }
    Ok(series)
}
