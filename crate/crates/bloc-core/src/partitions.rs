//! Partitions, standard Young tableaux, the major index, and the
//! fake-degree polynomials of the coinvariant ring.
//!
//! The fake degree of a partition `σ ⊢ m` is
//! `f_σ(u) = Σ_{T ∈ SYT(σ)} u^{maj(T)}`, the graded multiplicity of the
//! simple `S_m`-module `S(σ)` inside the coinvariant ring
//! `A_m^coin = C[t_1..t_m]/(symmetric polynomials of positive degree)`.
//! It satisfies `f_σ(u) = u^C(m,2) · f_σ∨(u⁻¹)` because conjugating a
//! standard tableau complements its descent set in `{1, …, m-1}`.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;

/// A partition: a weakly decreasing list of positive integers.
///
/// Trailing zeros are stripped on construction; the empty partition is the
/// unique partition of 0.  The derived `Ord` is lexicographic on parts,
/// which for equal sizes refines dominance order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Build a partition from a weakly decreasing sequence; trailing zeros
    /// are allowed and dropped.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(alloc::format!(
                    "parts {parts:?} are not weakly decreasing"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(alloc::format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        let size = parts.iter().sum();
        Ok(Self { parts, size })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Self {
        let rows = self.parts.len();
        let cols = self.parts.first().copied().unwrap_or(0);
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            parts.push(self.parts.iter().take_while(|&&p| p > c).count().min(rows));
        }
        let size = self.size;
        Self { parts, size }
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula `m! / Π hooks`.
    pub fn dim_irrep(&self) -> u64 {
        let m = self.size as u128;
        let mut numerator: u128 = 1;
        for k in 1..=m {
            numerator *= k;
        }
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &row) in self.parts.iter().enumerate() {
            for c in 0..row {
                let arm = row - c - 1;
                let leg = conj.parts[c] - r - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        (numerator / hooks) as u64
    }

    /// True if `self` dominates `other` (both must partition the same m):
    /// every prefix sum of `self` is at least the matching prefix sum.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size, other.size);
        let mut a = 0usize;
        let mut b = 0usize;
        let n = self.parts.len().max(other.parts.len());
        for i in 0..n {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `m` in lexicographic descending order (largest part
/// first), which is compatible with dominance: a partition is listed before
/// everything it dominates.
pub fn enumerate_partitions(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(m, m, &mut stack, &mut out);
    out
}

fn descend(remaining: usize, cap: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let parts = stack.clone();
        let size = parts.iter().sum();
        out.push(Partition { parts, size });
        return;
    }
    for first in (1..=remaining.min(cap)).rev() {
        stack.push(first);
        descend(remaining - first, first, stack, out);
        stack.pop();
    }
}

/// A standard Young tableau: rows strictly increase left to right, columns
/// strictly increase top to bottom, entries are exactly `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        let parts: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// The conjugated tableau: transpose of the filling.
    pub fn conjugate(&self) -> Self {
        let cols = self.rows.first().map_or(0, Vec::len);
        let rows = (0..cols)
            .map(|c| {
                self.rows
                    .iter()
                    .filter_map(|row| row.get(c).copied())
                    .collect()
            })
            .collect();
        Self { rows }
    }

    /// Row-reading word: rows concatenated top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Descent set: the entries `a` such that `a+1` sits in a strictly
    /// lower row.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let m = self.size();
        let mut row_of = vec![0usize; m + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        (1..m).filter(|&a| row_of[a + 1] > row_of[a]).collect()
    }

    /// Major index: the sum of the descent set.
    pub fn major_index(&self) -> usize {
        self.descent_set().into_iter().sum()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// All standard Young tableaux of the given shape, sorted lexicographically
/// by row-reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let m = shape.size();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fill(shape, m, 1, &mut rows, &mut out);
    out.sort_by_key(StandardTableau::reading_word);
    out
}

fn fill(
    shape: &Partition,
    m: usize,
    next: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if next > m {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        // entry `next` may extend row r if the row has room and the cell
        // above (same column, previous row) is already filled
        if len < shape.parts()[r] && (r == 0 || rows[r - 1].len() > len) {
            rows[r].push(next);
            fill(shape, m, next + 1, rows, out);
            rows[r].pop();
        }
    }
}

/// The fake degree `f_σ(u) = Σ_{T ∈ SYT(σ)} u^{maj(T)}`: the graded
/// multiplicity of `S(σ)` in the coinvariant ring.
pub fn fake_degree(shape: &Partition) -> LaurentPolynomial {
    let mut poly = LaurentPolynomial::zero();
    for t in standard_tableaux(shape) {
        poly.add_term(t.major_index() as i64, BigInt::from(1));
    }
    poly
}

/// Parse a partition from comma-separated descending integers, e.g. "3,1".
/// An empty string is the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in s.split(',') {
        let v: usize = piece
            .trim()
            .parse()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        parts.push(v);
    }
    Partition::new(parts)
}
