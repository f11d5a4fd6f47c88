//! Symmetric functions in the Schur basis with exact integer coefficients.
//!
//! - [`SchurPolynomial`]: sparse integer combination of Schur functions
//! - [`multiply`]: products s_λ·s_μ by recording-tableau search over a
//!   two-block skew shape (the straight-shape block is preseeded)
//! - [`skew_expand`]: Schur expansion of a skew Schur function s_{λ/μ}
//! - [`RimHook`], [`add_rim_hooks`], [`remove_rim_hooks`], [`mn_multiply`]:
//!   border-strip combinatorics and p_k-multiplication
//! - [`inner_product`]: Hall inner product (Schur functions orthonormal)
//! - [`syt_count`], [`dim_rep`]: standard-tableau counts and representation
//!   dimensions via the hook length formula

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::partition::{factorial, Partition};

/// Render a big integer as a JSON number when it fits in i64, otherwise as a
/// decimal string, so machine output stays exact and deterministic.
pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

/// A sparse integer-linear combination of Schur functions s_λ.
///
/// Zero coefficients are never stored. Terms iterate in the deterministic
/// partition order (weight ascending, then reverse-lexicographic).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurPolynomial {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurPolynomial {
    pub fn zero() -> Self {
        SchurPolynomial { terms: BTreeMap::new() }
    }

    /// The unit: s_∅ = 1.
    pub fn one() -> Self {
        Self::single(Partition::empty())
    }

    /// A single Schur function with coefficient 1.
    pub fn single(lam: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lam, BigInt::one());
        SchurPolynomial { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (lam, c) in it {
            out.add_assign_term(lam, c);
        }
        out
    }

    /// Add `c·s_λ`, dropping the term if the total cancels.
    pub fn add_assign_term(&mut self, lam: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.terms.get(lam).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SchurPolynomial {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Degree if every term has the same weight; `None` for mixed degrees.
    /// The zero polynomial reports degree 0.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(lam) => lam.weight(),
            None => return Some(0),
        };
        it.all(|lam| lam.weight() == first).then_some(first)
    }

    /// The involution ω, which sends s_λ to s_{λ′}.
    pub fn omega(&self) -> Self {
        SchurPolynomial {
            terms: self.terms.iter().map(|(l, c)| (l.conjugate(), c.clone())).collect(),
        }
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `{"basis":"schur","terms":[{"partition":[…],"coeff":…},…]}` with terms
    /// in the deterministic partition order.
    pub fn to_json(&self) -> Value {
        json!({
            "basis": "schur",
            "terms": self
                .terms
                .iter()
                .map(|(lam, c)| json!({ "partition": lam.parts(), "coeff": int_json(c) }))
                .collect::<Vec<_>>(),
        })
    }
}

impl Add for &SchurPolynomial {
    type Output = SchurPolynomial;
    fn add(self, rhs: &SchurPolynomial) -> SchurPolynomial {
        let mut out = self.clone();
        for (lam, c) in rhs.terms() {
            out.add_assign_term(lam.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SchurPolynomial {
    type Output = SchurPolynomial;
    fn sub(self, rhs: &SchurPolynomial) -> SchurPolynomial {
        let mut out = self.clone();
        for (lam, c) in rhs.terms() {
            out.add_assign_term(lam.clone(), -c);
        }
        out
    }
}

impl Neg for &SchurPolynomial {
    type Output = SchurPolynomial;
    fn neg(self) -> SchurPolynomial {
        SchurPolynomial {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SchurPolynomial {
    type Output = SchurPolynomial;
    fn mul(self, rhs: &SchurPolynomial) -> SchurPolynomial {
        multiply(self, rhs)
    }
}

impl fmt::Display for SchurPolynomial {
    /// Human-readable sum like `s[4,2] - 2*s[3,1,1]`; the s_∅ term prints as
    /// a bare integer; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if lam.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "s[{lam}]")?;
            } else {
                write!(f, "{mag}*s[{lam}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cells of the skew diagram λ/μ in content-reading order: row by row
/// starting from the longest row, each row right to left. Rows and columns
/// are 0-indexed; row 0 holds λ₁.
fn reading_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for r in 0..outer.len() {
        for c in (inner.part(r) as usize..outer.part(r) as usize).rev() {
            cells.push((r, c));
        }
    }
    cells
}

/// Per-cell constraint data for the recording-tableau search: `same_row[i]`
/// is true when cell i sits immediately left of cell i−1 in the diagram, and
/// `above[i]` is the index of the cell directly above cell i, if present.
fn cell_constraints(cells: &[(usize, usize)]) -> (Vec<bool>, Vec<Option<usize>>) {
    let index: HashMap<(usize, usize), usize> =
        cells.iter().copied().enumerate().map(|(i, cell)| (cell, i)).collect();
    let same_row = cells
        .iter()
        .enumerate()
        .map(|(i, &(r, c))| i > 0 && cells[i - 1] == (r, c + 1))
        .collect();
    let above = cells
        .iter()
        .map(|&(r, c)| if r == 0 { None } else { index.get(&(r - 1, c)).copied() })
        .collect();
    (same_row, above)
}

/// Depth-first search over recording tableaux. Cell i must be placed at an
/// addable corner (row, col) of the growing shape subject to:
///
/// - if cell i lies immediately left of cell i−1 in the diagram, then
///   row ≤ row(i−1) and col > col(i−1);
/// - if cell j lies directly above cell i, then row > row(j) and col ≤ col(j).
///
/// Each completed placement contributes its final shape once.
fn recording_search(
    cells: &[(usize, usize)],
    same_row: &[bool],
    above: &[Option<usize>],
    shape: &mut Vec<usize>,
    pos: &mut Vec<(usize, usize)>,
    i: usize,
    out: &mut SchurPolynomial,
) {
    if i == cells.len() {
        let parts: Vec<u32> = shape.iter().map(|&l| l as u32).collect();
        let lam = if parts.is_empty() { Partition::empty() } else { Partition::new(parts) };
        out.add_assign_term(lam, BigInt::one());
        return;
    }
    let row_limit = if same_row[i] { pos[i - 1].0 } else { usize::MAX };
    for row in 0..=shape.len() {
        if row > row_limit {
            break;
        }
        let col = if row < shape.len() { shape[row] } else { 0 };
        // Addable corner: the new cell must keep row lengths weakly decreasing.
        if row > 0 && row < shape.len() && shape[row - 1] == shape[row] {
            continue;
        }
        if same_row[i] && col <= pos[i - 1].1 {
            continue;
        }
        if let Some(j) = above[i] {
            let (jr, jc) = pos[j];
            if row <= jr || col > jc {
                continue;
            }
        }
        let new_row = row == shape.len();
        if new_row {
            shape.push(1);
        } else {
            shape[row] += 1;
        }
        pos[i] = (row, col);
        recording_search(cells, same_row, above, shape, pos, i + 1, out);
        if new_row {
            shape.pop();
        } else {
            shape[row] -= 1;
        }
    }
}

fn run_recording(cells: Vec<(usize, usize)>, initial_shape: Vec<usize>) -> SchurPolynomial {
    let (same_row, above) = cell_constraints(&cells);
    let mut shape = initial_shape;
    let mut pos = vec![(0, 0); cells.len()];
    let mut out = SchurPolynomial::zero();
    recording_search(&cells, &same_row, &above, &mut shape, &mut pos, 0, &mut out);
    out
}

/// Littlewood–Richardson product of two single Schur functions.
///
/// Realizes s_λ·s_μ as the skew Schur function of the disconnected shape
/// (translated μ above λ). The μ-block admits exactly one recording tableau
/// (the row-reading filling of μ), so it is preseeded and only the |λ| cells
/// of the λ-block are searched.
fn multiply_single(lam: &Partition, mu: &Partition) -> SchurPolynomial {
    if lam.is_empty() {
        return SchurPolynomial::single(mu.clone());
    }
    let offset = mu.len();
    let mut cells = Vec::new();
    for r in 0..lam.len() {
        for c in (0..lam.part(r) as usize).rev() {
            cells.push((offset + r, c));
        }
    }
    // Cells above the first λ-row belong to the translated μ-block, which
    // shares no column with the λ-block, so lookups for them correctly fail.
    let initial: Vec<usize> = mu.parts().iter().map(|&p| p as usize).collect();
    run_recording(cells, initial)
}

/// Product of two Schur-basis polynomials via the Littlewood–Richardson rule.
pub fn multiply(f: &SchurPolynomial, g: &SchurPolynomial) -> SchurPolynomial {
    let mut out = SchurPolynomial::zero();
    for (lam, a) in f.terms() {
        for (mu, b) in g.terms() {
            let ab = a * b;
            for (nu, m) in multiply_single(lam, mu).terms {
                out.add_assign_term(nu, m * &ab);
            }
        }
    }
    out
}

/// Schur expansion of the skew Schur function s_{λ/μ} by the full
/// recording-tableau search (no preseeding — an independent code path from
/// [`multiply`]).
///
/// # Edge cases
/// - s_{λ/∅} = s_λ and s_{λ/λ} = s_∅ (= 1).
///
/// # Panics
/// Panics unless μ ⊆ λ.
pub fn skew_expand(outer: &Partition, inner: &Partition) -> SchurPolynomial {
    assert!(
        outer.contains(inner),
        "inner shape {inner} is not contained in outer shape {outer}"
    );
    run_recording(reading_cells(outer, inner), Vec::new())
}

/// A border strip (rim hook): an edgewise-connected skew shape with no 2×2
/// block. Cells are 1-indexed (row, column) with row 1 holding the longest
/// part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    cells: Vec<(u32, u32)>,
}

impl RimHook {
    fn new(cells: Vec<(u32, u32)>) -> Self {
        assert!(!cells.is_empty(), "a rim hook has at least one cell");
        RimHook { cells }
    }

    pub fn cells(&self) -> &[(u32, u32)] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// First and last row occupied (1-indexed, inclusive).
    pub fn rows_spanned(&self) -> (u32, u32) {
        let rows: Vec<u32> = self.cells.iter().map(|&(r, _)| r).collect();
        (*rows.iter().min().unwrap(), *rows.iter().max().unwrap())
    }

    /// First and last column occupied (1-indexed, inclusive).
    pub fn cols_spanned(&self) -> (u32, u32) {
        let cols: Vec<u32> = self.cells.iter().map(|&(_, c)| c).collect();
        (*cols.iter().min().unwrap(), *cols.iter().max().unwrap())
    }

    /// (−1)^(number of rows spanned − 1).
    pub fn sign(&self) -> i32 {
        let (lo, hi) = self.rows_spanned();
        if (hi - lo) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// True iff the strip has a cell in the first column.
    pub fn is_special(&self) -> bool {
        self.cells.iter().any(|&(_, c)| c == 1)
    }

    /// True iff the strip has a cell in the first row (the row of the
    /// longest part) — the transposed-special condition.
    pub fn is_t_special(&self) -> bool {
        self.cells.iter().any(|&(r, _)| r == 1)
    }
}

/// All ways to grow μ by a border strip of k cells. Returns (resulting
/// shape, the strip) pairs; the enumeration is deterministic (top row of the
/// strip ascending, then bottom row ascending).
///
/// A strip occupying rows r..r′ of the result λ forces λ_i = μ_{i−1}+1 for
/// r < i ≤ r′, with the remaining cells in row r; such a skew shape is
/// automatically connected with no 2×2 block.
pub fn add_rim_hooks(mu: &Partition, k: u32) -> Vec<(Partition, RimHook)> {
    assert!(k >= 1, "rim hooks are nonempty");
    let len = mu.len();
    let mut out = Vec::new();
    for r in 0..=len {
        let mut below: u32 = 0; // cells the strip adds in rows r+1..=r2
        let mut r2 = r;
        while below < k {
            let top = mu.part(r) + (k - below);
            if r == 0 || mu.part(r - 1) >= top {
                let nrows = len.max(r2 + 1);
                let mut parts = Vec::with_capacity(nrows);
                let mut cells = Vec::new();
                for i in 0..nrows {
                    let v = if i < r {
                        mu.part(i)
                    } else if i == r {
                        top
                    } else if i <= r2 {
                        mu.part(i - 1) + 1
                    } else {
                        mu.part(i)
                    };
                    if v > 0 {
                        parts.push(v);
                    }
                    if (r..=r2).contains(&i) {
                        for col in mu.part(i) + 1..=v {
                            cells.push((i as u32 + 1, col));
                        }
                    }
                }
                out.push((Partition::new(parts), RimHook::new(cells)));
            }
            below += mu.part(r2) + 1 - mu.part(r2 + 1);
            r2 += 1;
        }
    }
    out
}

/// All ways to remove a border strip of k cells from λ. Returns (remaining
/// shape, the removed strip) pairs.
pub fn remove_rim_hooks(lam: &Partition, k: u32) -> Vec<(Partition, RimHook)> {
    assert!(k >= 1, "rim hooks are nonempty");
    let len = lam.len();
    let mut out = Vec::new();
    for r in 0..len {
        for r2 in r..len {
            // Rows r..r2−1 of the remainder are forced: μ_i = λ_{i+1} − 1.
            let above: u64 = (r..r2)
                .map(|i| (lam.part(i) - (lam.part(i + 1) - 1)) as u64)
                .sum();
            if above >= k as u64 {
                break;
            }
            let in_last = k as u64 - above; // cells removed from row r2
            if in_last > lam.part(r2) as u64 {
                continue;
            }
            let last = lam.part(r2) - in_last as u32;
            if last < lam.part(r2 + 1) {
                continue;
            }
            let mut parts = Vec::with_capacity(len);
            let mut cells = Vec::new();
            for i in 0..len {
                let v = if i < r || i > r2 {
                    lam.part(i)
                } else if i < r2 {
                    lam.part(i + 1) - 1
                } else {
                    last
                };
                if v > 0 {
                    parts.push(v);
                }
                if (r..=r2).contains(&i) {
                    for col in v + 1..=lam.part(i) {
                        cells.push((i as u32 + 1, col));
                    }
                }
            }
            let mu = if parts.is_empty() { Partition::empty() } else { Partition::new(parts) };
            out.push((mu, RimHook::new(cells)));
        }
    }
    out
}

/// Multiplication by a power sum: p_k·f via the signed border-strip rule
/// p_k·s_μ = Σ (−1)^(rows−1) s_λ over all strips λ/μ of size k.
pub fn mn_multiply(k: u32, f: &SchurPolynomial) -> SchurPolynomial {
    let mut out = SchurPolynomial::zero();
    for (mu, c) in f.terms() {
        for (lam, hook) in add_rim_hooks(mu, k) {
            out.add_assign_term(lam, c * BigInt::from(hook.sign()));
        }
    }
    out
}

/// Hall inner product; Schur functions are orthonormal.
pub fn inner_product(f: &SchurPolynomial, g: &SchurPolynomial) -> BigInt {
    let (small, large) = if f.num_terms() <= g.num_terms() { (f, g) } else { (g, f) };
    let mut sum = BigInt::zero();
    for (lam, c) in small.terms() {
        sum += c * large.coeff(lam);
    }
    sum
}

/// Number of standard Young tableaux of shape λ, by the hook length formula
/// f^λ = n!/∏ h(c).
pub fn syt_count(lam: &Partition) -> BigInt {
    let conj = lam.conjugate();
    let mut denom = BigInt::one();
    for i in 0..lam.len() {
        for j in 0..lam.part(i) as usize {
            let hook =
                (lam.part(i) as u64 - j as u64) + (conj.part(j) as u64 - i as u64) - 1;
            denom *= BigInt::from(hook);
        }
    }
    factorial(lam.weight()) / denom
}

/// Dimension of the S_n module with Frobenius characteristic f: Σ_λ c_λ·f^λ.
///
/// # Panics
/// Panics if f mixes degrees (the dimension of an inhomogeneous
/// characteristic is not well-defined), is not of degree n, or has a
/// negative coefficient (virtual characters carry no dimension).
pub fn dim_rep(f: &SchurPolynomial, n: u64) -> BigInt {
    if f.is_zero() {
        return BigInt::zero();
    }
    let degree = f
        .homogeneous_degree()
        .expect("dim_rep requires a homogeneous polynomial");
    assert_eq!(degree, n, "dim_rep degree mismatch: polynomial has degree {degree}, not {n}");
    assert!(f.is_nonnegative(), "dim_rep requires nonnegative coefficients");
    let mut sum = BigInt::zero();
    for (lam, c) in f.terms() {
        sum += c * syt_count(lam);
    }
    sum
}
