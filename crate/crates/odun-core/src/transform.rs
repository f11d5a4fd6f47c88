//! Partial transformations on [n]: composition, nilpotent/idempotent
//! classification, the forest correspondence, block decomposition, the
//! idempotent standardization algorithm, and stabilizer structure.
//!
//! A partial transformation is stored as its image sequence with 0 for
//! "undefined"; as a matrix it has entry (i, j) = 1 exactly when f(j) = i,
//! so matrix products realize composition and the CLI input `--map 1,1,0`
//! is literally the matrix with ones at (1,1) and (1,2).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::forest::{canonicalize, RootedForest, RootedTree};
use crate::partition::{factorial, Partition};

/// A partial function [n] → [n]; `images[i]` is f(i+1), with 0 = undefined.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialTransformation {
    images: Vec<u32>,
}

impl PartialTransformation {
    /// # Panics
    /// Panics if an image exceeds n.
    pub fn new(images: Vec<u32>) -> Self {
        let n = images.len() as u32;
        for (i, &v) in images.iter().enumerate() {
            assert!(v <= n, "image {v} of point {} exceeds n = {n}", i + 1);
        }
        PartialTransformation { images }
    }

    pub fn identity(n: usize) -> Self {
        PartialTransformation { images: (1..=n as u32).collect() }
    }

    /// The everywhere-undefined map 0_n.
    pub fn zero(n: usize) -> Self {
        PartialTransformation { images: vec![0; n] }
    }

    /// The constant idempotent c^(r): every point maps to r.
    pub fn constant(n: usize, r: u32) -> Self {
        assert!(r >= 1 && r as usize <= n);
        PartialTransformation { images: vec![r; n] }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// f(i) for 1-indexed i; `None` when undefined.
    pub fn apply(&self, i: u32) -> Option<u32> {
        match self.images[(i - 1) as usize] {
            0 => None,
            j => Some(j),
        }
    }

    /// (f∘g)(i) = f(g(i)), defined iff both steps are.
    ///
    /// # Panics
    /// Panics on ground-set size mismatch.
    pub fn compose(&self, g: &PartialTransformation) -> PartialTransformation {
        assert_eq!(self.n(), g.n(), "size mismatch in composition");
        let images = g
            .images
            .iter()
            .map(|&gi| if gi == 0 { 0 } else { self.images[(gi - 1) as usize] })
            .collect();
        PartialTransformation { images }
    }

    /// f^m by iterated composition; f^0 = id.
    pub fn power(&self, m: u32) -> PartialTransformation {
        let mut out = PartialTransformation::identity(self.n());
        for _ in 0..m {
            out = self.compose(&out);
        }
        out
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    pub fn is_everywhere_undefined(&self) -> bool {
        self.images.iter().all(|&v| v == 0)
    }

    /// πfπ⁻¹ under the relabeling i ↦ π(i); `pi` is a 1-indexed permutation
    /// image sequence.
    pub fn conjugate(&self, pi: &[u32]) -> PartialTransformation {
        assert_eq!(pi.len(), self.n());
        let mut images = vec![0; self.n()];
        for i in 1..=self.n() as u32 {
            let fi = self.images[(i - 1) as usize];
            images[(pi[(i - 1) as usize] - 1) as usize] =
                if fi == 0 { 0 } else { pi[(fi - 1) as usize] };
        }
        PartialTransformation { images }
    }
}

impl fmt::Display for PartialTransformation {
    /// Comma-separated image list with 0 for undefined, e.g. `3,0,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for PartialTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Error from parsing a `--map`-style image list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapParseError(pub String);

impl fmt::Display for MapParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for MapParseError {}

impl FromStr for PartialTransformation {
    type Err = MapParseError;

    fn from_str(s: &str) -> Result<Self, MapParseError> {
        let images: Vec<u32> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| MapParseError(format!("bad image entry {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        let n = images.len() as u32;
        if let Some(&v) = images.iter().find(|&&v| v > n) {
            return Err(MapParseError(format!("image {v} exceeds ground set size {n}")));
        }
        Ok(PartialTransformation { images })
    }
}

/// Structural classification of a partial transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub n: usize,
    /// Some power is everywhere undefined (equivalently, in N(n,0)).
    pub nilpotent: bool,
    pub idempotent: bool,
    /// Diagonal matrix, i.e. a partial identity: f(i) ∈ {i, undefined}.
    pub diagonal: bool,
    /// Some(k) iff some power is conjugate to the rank-k diagonal idempotent
    /// diag(id_k, 0); k is the number of cyclic points.
    pub in_n: Option<u32>,
}

impl Classification {
    pub fn label(&self) -> String {
        match self.in_n {
            Some(0) => "nilpotent".to_string(),
            Some(k) => format!("in-N({},{})", self.n, k),
            None if self.idempotent && self.diagonal => "idempotent-diagonal".to_string(),
            None if self.idempotent => "idempotent-general".to_string(),
            None => "other".to_string(),
        }
    }
}

/// Cyclic points of f: those i with f^j(i) = i for some j ≥ 1.
fn cyclic_points(f: &PartialTransformation) -> Vec<u32> {
    let n = f.n() as u32;
    let mut cyclic = Vec::new();
    for i in 1..=n {
        let mut v = i;
        for _ in 0..n {
            match f.apply(v) {
                None => break,
                Some(w) => {
                    v = w;
                    if v == i {
                        cyclic.push(i);
                        break;
                    }
                }
            }
        }
    }
    cyclic
}

/// Classifies f. f lies in N(n,k) exactly when no non-cyclic point ever
/// reaches a cyclic point, with k the number of cyclic points; then a high
/// enough power of f is the partial identity on the cyclic set, which is
/// conjugate to diag(id_k, 0).
pub fn classify(f: &PartialTransformation) -> Classification {
    let n = f.n();
    let cyclic = cyclic_points(f);
    let is_cyclic = {
        let mut flags = vec![false; n + 1];
        for &c in &cyclic {
            flags[c as usize] = true;
        }
        flags
    };
    let mut in_n = Some(cyclic.len() as u32);
    for i in 1..=n as u32 {
        if is_cyclic[i as usize] {
            continue;
        }
        let mut v = i;
        for _ in 0..n {
            match f.apply(v) {
                None => break,
                Some(w) => {
                    v = w;
                    if is_cyclic[v as usize] {
                        in_n = None;
                        break;
                    }
                }
            }
        }
        if in_n.is_none() {
            break;
        }
    }
    let idempotent = f.is_idempotent();
    Classification {
        n,
        nilpotent: in_n == Some(0),
        idempotent,
        diagonal: f
            .images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == 0 || v as usize == i + 1),
        in_n,
    }
}

/// The forest of a nilpotent transformation: f(i) = j makes i a child of j,
/// undefined points are roots.
///
/// # Panics
/// Panics if f is not nilpotent.
pub fn forest_from_nilpotent(f: &PartialTransformation) -> RootedForest {
    assert!(
        classify(f).nilpotent,
        "forest correspondence requires a nilpotent transformation"
    );
    canonicalize(f.images()).expect("nilpotent maps are acyclic")
}

/// A labeled nilpotent representative of a forest: vertices are numbered in
/// preorder (each root before its subtree) and each child maps to its parent.
pub fn nilpotent_from_forest(tau: &RootedForest) -> PartialTransformation {
    fn assign(t: &RootedTree, parent: u32, next: &mut u32, images: &mut Vec<u32>) {
        let label = *next;
        *next += 1;
        images.push(parent);
        for c in t.children() {
            assign(c, label, next, images);
        }
    }
    let mut images = Vec::with_capacity(tau.size() as usize);
    let mut next = 1;
    for t in tau.trees() {
        assign(t, 0, &mut next, &mut images);
    }
    PartialTransformation::new(images)
}

/// Block decomposition of f ∈ N(n,k): the cycle type ν ⊢ k of the
/// permutation block and the canonical forest of the nilpotent block.
///
/// # Panics
/// Panics if f is not in any N(n,k).
pub fn split_block(f: &PartialTransformation) -> (Partition, RootedForest) {
    let cls = classify(f);
    let k = cls
        .in_n
        .unwrap_or_else(|| panic!("split_block requires membership in some N(n,k)"));
    let cyclic = cyclic_points(f);
    assert_eq!(cyclic.len() as u32, k);
    let mut on_cycle = vec![false; f.n() + 1];
    for &c in &cyclic {
        on_cycle[c as usize] = true;
    }
    // Cycle type of f restricted to its cyclic points.
    let mut seen = vec![false; f.n() + 1];
    let mut cycle_lengths = Vec::new();
    for &c in &cyclic {
        if seen[c as usize] {
            continue;
        }
        let mut len = 0;
        let mut v = c;
        loop {
            seen[v as usize] = true;
            len += 1;
            v = f.apply(v).expect("cyclic points have defined images");
            if v == c {
                break;
            }
        }
        cycle_lengths.push(len);
    }
    let nu = if cycle_lengths.is_empty() {
        Partition::empty()
    } else {
        Partition::new(cycle_lengths)
    };
    // Relabel the non-cyclic points 1..n−k, preserving order, and read off
    // their parent sequence.
    let mut relabel = vec![0u32; f.n() + 1];
    let mut next = 0;
    for i in 1..=f.n() as u32 {
        if !on_cycle[i as usize] {
            next += 1;
            relabel[i as usize] = next;
        }
    }
    let mut parents = Vec::new();
    for i in 1..=f.n() as u32 {
        if on_cycle[i as usize] {
            continue;
        }
        parents.push(match f.apply(i) {
            None => 0,
            Some(j) => relabel[j as usize],
        });
    }
    let tau = canonicalize(&parents).expect("tail points are acyclic");
    (nu, tau)
}

/// A block-diagonal representative of (ν, τ): a permutation with cycle type
/// ν on the first |ν| points, then a nilpotent preorder labeling of τ.
pub fn from_block(nu: &Partition, tau: &RootedForest) -> PartialTransformation {
    let k = nu.weight() as u32;
    let mut images: Vec<u32> = Vec::new();
    let mut start = 1u32;
    for &part in nu.parts() {
        for offset in 0..part {
            let i = start + offset;
            images.push(if offset + 1 == part { start } else { i + 1 });
        }
        start += part;
    }
    let tail = nilpotent_from_forest(tau);
    for &v in tail.images() {
        images.push(if v == 0 { 0 } else { v + k });
    }
    PartialTransformation::new(images)
}

/// Writes a permutation (1-indexed image sequence) in cycle notation with
/// fixed points omitted; the identity prints as `()`.
pub fn cycle_string(pi: &[u32]) -> String {
    let n = pi.len();
    let mut seen = vec![false; n + 1];
    let mut out = String::new();
    for start in 1..=n as u32 {
        if seen[start as usize] || pi[(start - 1) as usize] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize] = true;
        let mut v = pi[(start - 1) as usize];
        while v != start {
            seen[v as usize] = true;
            cycle.push(v);
            v = pi[(v - 1) as usize];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn perm_compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&bi| a[(bi - 1) as usize]).collect()
}

fn perm_inverse(a: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; a.len()];
    for (i, &ai) in a.iter().enumerate() {
        inv[(ai - 1) as usize] = i as u32 + 1;
    }
    inv
}

/// Result of standardizing an idempotent: the conjugating witness (with its
/// literal transposition factorization), the standard form
/// c^(β₁)⊕…⊕c^(β_r)⊕0_m with β₁ ≥ … ≥ β_r, and a compact descriptor like
/// `c3+c2+c1+z1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Standardization {
    /// Composed witness permutation σ with standard = σeσ⁻¹.
    pub witness: Vec<u32>,
    /// The factors of σ as applied, last first, e.g. `(2,3)(1,3)`.
    pub witness_factors: String,
    pub standard: PartialTransformation,
    /// Block sizes β₁ ≥ … ≥ β_r.
    pub blocks: Vec<u32>,
    /// Number of undefined points m in the zero block.
    pub zero_rank: u32,
    pub descriptor: String,
}

/// Standardizes an idempotent by the row-sweep procedure: bring the smallest
/// remaining fixed point to the front of the unprocessed range, then pull its
/// preimages into consecutive positions with transpositions (always choosing
/// the smallest available source), repeat, and finally sort the constant
/// blocks by size with one permutation.
///
/// The 3×3 idempotent `3,0,3` standardizes to `1,1,0` (c²⊕0₁) with witness
/// (2,3)(1,3).
///
/// # Panics
/// Panics if e is not idempotent.
pub fn standardize_idempotent(e: &PartialTransformation) -> Standardization {
    assert!(e.is_idempotent(), "standardization requires an idempotent");
    let n = e.n();
    let mut current = e.clone();
    let mut factors: Vec<Vec<u32>> = Vec::new();
    let mut blocks_in_order: Vec<u32> = Vec::new();
    let mut offset = 0u32;

    let transposition = |a: u32, b: u32| -> Vec<u32> {
        let mut pi: Vec<u32> = (1..=n as u32).collect();
        pi.swap((a - 1) as usize, (b - 1) as usize);
        pi
    };

    loop {
        // Smallest fixed point past the processed prefix becomes the next
        // block root.
        let root_src = (offset + 1..=n as u32).find(|&i| current.apply(i) == Some(i));
        let Some(j) = root_src else { break };
        if j != offset + 1 {
            let t = transposition(offset + 1, j);
            current = current.conjugate(&t);
            factors.push(t);
        }
        let root = offset + 1;
        // Pull the remaining preimages of the root into consecutive slots.
        let mut t_pos = root + 1;
        loop {
            let c = (t_pos..=n as u32).find(|&i| current.apply(i) == Some(root));
            match c {
                None => break,
                Some(c) => {
                    if c != t_pos {
                        let t = transposition(t_pos, c);
                        current = current.conjugate(&t);
                        factors.push(t);
                    }
                    t_pos += 1;
                }
            }
        }
        blocks_in_order.push(t_pos - root);
        offset = t_pos - 1;
    }
    let zero_rank = n as u32 - offset;
    debug_assert!((offset + 1..=n as u32).all(|i| current.apply(i).is_none()));

    // Stable-sort the blocks by size descending with one final permutation.
    let mut order: Vec<usize> = (0..blocks_in_order.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(blocks_in_order[i]));
    let mut starts = Vec::with_capacity(blocks_in_order.len());
    let mut acc = 1u32;
    for &b in &blocks_in_order {
        starts.push(acc);
        acc += b;
    }
    let mut sort_perm: Vec<u32> = (1..=n as u32).collect();
    let mut dest = 1u32;
    for &i in &order {
        for off in 0..blocks_in_order[i] {
            sort_perm[(starts[i] + off - 1) as usize] = dest + off;
        }
        dest += blocks_in_order[i];
    }
    let is_identity = sort_perm.iter().enumerate().all(|(i, &v)| v == i as u32 + 1);
    if !is_identity {
        current = current.conjugate(&sort_perm);
        factors.push(sort_perm);
    }

    let mut witness: Vec<u32> = (1..=n as u32).collect();
    for f in &factors {
        witness = perm_compose(f, &witness);
    }
    let witness_factors = if factors.is_empty() {
        "()".to_string()
    } else {
        factors.iter().rev().map(|f| cycle_string(f)).collect()
    };

    let mut blocks: Vec<u32> = order.iter().map(|&i| blocks_in_order[i]).collect();
    blocks.sort_by_key(|&b| std::cmp::Reverse(b));
    let mut descriptor: Vec<String> = blocks.iter().map(|b| format!("c{b}")).collect();
    if zero_rank > 0 {
        descriptor.push(format!("z{zero_rank}"));
    }
    Standardization {
        witness,
        witness_factors,
        standard: current,
        blocks,
        zero_rank,
        descriptor: descriptor.join("+"),
    }
}

/// The stabilizer structure ∏(S_{m_i} ≀ S_{β_i−1}) × S_m of an idempotent
/// with standard form blocks β_i of multiplicity m_i and zero rank m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathDecomposition {
    /// Distinct block sizes with multiplicities, β strictly decreasing.
    pub blocks: Vec<(u32, u32)>,
    pub zero_rank: u32,
}

impl WreathDecomposition {
    /// ∏(m_i!·((β_i−1)!)^{m_i})·m!.
    pub fn order(&self) -> BigInt {
        let mut order = BigInt::one();
        for &(beta, m) in &self.blocks {
            order *= factorial(m as u64);
            for _ in 0..m {
                order *= factorial((beta - 1) as u64);
            }
        }
        order * factorial(self.zero_rank as u64)
    }
}

/// The stabilizer decomposition of an idempotent under conjugation:
/// standardize, then group equal block sizes.
///
/// # Panics
/// Panics if e is not idempotent.
pub fn stabilizer_of_idempotent(e: &PartialTransformation) -> WreathDecomposition {
    let st = standardize_idempotent(e);
    let mut blocks: Vec<(u32, u32)> = Vec::new();
    for &b in &st.blocks {
        match blocks.last_mut() {
            Some((beta, m)) if *beta == b => *m += 1,
            _ => blocks.push((b, 1)),
        }
    }
    WreathDecomposition { blocks, zero_rank: st.zero_rank }
}

/// The full stabilizer subgroup {π : πeπ⁻¹ = e} as a sorted list of
/// permutations, generated from the theorem's wreath structure: satellite
/// permutations inside each block, swaps of equal-size blocks, and
/// permutations of the zero block, all conjugated back through the witness.
///
/// Intended for small n (the group has order [`WreathDecomposition::order`]).
pub fn stabilizer_subgroup(e: &PartialTransformation) -> Vec<Vec<u32>> {
    let n = e.n();
    let st = standardize_idempotent(e);
    let mut generators: Vec<Vec<u32>> = Vec::new();
    let transposition = |a: u32, b: u32| -> Vec<u32> {
        let mut pi: Vec<u32> = (1..=n as u32).collect();
        pi.swap((a - 1) as usize, (b - 1) as usize);
        pi
    };
    let mut starts = Vec::new();
    let mut acc = 1u32;
    for &b in &st.blocks {
        starts.push(acc);
        acc += b;
    }
    for (i, &b) in st.blocks.iter().enumerate() {
        // Satellites of one block: adjacent transpositions generate S_{β−1}.
        for s in starts[i] + 1..starts[i] + b - 1 {
            generators.push(transposition(s, s + 1));
        }
        // Adjacent equal-size blocks swap pointwise.
        if i + 1 < st.blocks.len() && st.blocks[i + 1] == b {
            let mut pi: Vec<u32> = (1..=n as u32).collect();
            for off in 0..b {
                pi[(starts[i] + off - 1) as usize] = starts[i + 1] + off;
                pi[(starts[i + 1] + off - 1) as usize] = starts[i] + off;
            }
            generators.push(pi);
        }
    }
    if st.zero_rank >= 2 {
        for z in acc..acc + st.zero_rank - 1 {
            generators.push(transposition(z, z + 1));
        }
    }
    // Move the generators from the standard form back to e.
    let w_inv = perm_inverse(&st.witness);
    let conj: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| perm_compose(&w_inv, &perm_compose(g, &st.witness)))
        .collect();
    // Closure.
    let identity: Vec<u32> = (1..=n as u32).collect();
    let mut group = std::collections::BTreeSet::new();
    group.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for gen in &conj {
            let h = perm_compose(gen, &g);
            if group.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    group.into_iter().collect()
}

/// Which idempotent count: the partial transformation monoid P_n or the full
/// transformation monoid on [n].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentFamily {
    Partial,
    Full,
}

/// Closed-form idempotent counts: Σ_k C(n,k)·(k+1)^(n−k) for P_n and
/// Σ_{k≥1} C(n,k)·k^(n−k) for the full monoid. P_1 = 2, P_2 = 6.
pub fn idempotent_count(n: u32, family: IdempotentFamily) -> BigInt {
    assert!(n >= 1);
    let mut total = BigInt::from(0);
    match family {
        IdempotentFamily::Partial => {
            for k in 0..=n {
                total += crate::partition::binomial(n as u64, k as u64)
                    * BigInt::from(k + 1).pow(n - k);
            }
        }
        IdempotentFamily::Full => {
            for k in 1..=n {
                total +=
                    crate::partition::binomial(n as u64, k as u64) * BigInt::from(k).pow(n - k);
            }
        }
    }
    total
}

/// Visits every partial transformation on [n] ((n+1)^n of them).
pub fn for_each_partial_map(n: usize, mut visit: impl FnMut(&PartialTransformation)) {
    let mut images = vec![0u32; n];
    loop {
        visit(&PartialTransformation { images: images.clone() });
        let mut pos = 0;
        loop {
            if pos == n {
                return;
            }
            if images[pos] < n as u32 {
                images[pos] += 1;
                break;
            }
            images[pos] = 0;
            pos += 1;
        }
    }
}

/// Counts idempotents by exhaustive enumeration; the `Full` family restricts
/// to everywhere-defined maps.
pub fn idempotent_count_bruteforce(n: usize, family: IdempotentFamily) -> BigInt {
    let mut count = 0u64;
    for_each_partial_map(n, |f| {
        if family == IdempotentFamily::Full && f.images.iter().any(|&v| v == 0) {
            return;
        }
        if f.is_idempotent() {
            count += 1;
        }
    });
    BigInt::from(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[u32]) -> PartialTransformation {
        PartialTransformation::new(images.to_vec())
    }

    #[test]
    fn composition_examples() {
        let f = t(&[2, 0]);
        assert_eq!(f.compose(&PartialTransformation::identity(2)), f);
        assert_eq!(PartialTransformation::identity(2).compose(&f), f);
        assert_eq!(f.power(2), PartialTransformation::zero(2));
        let c3 = PartialTransformation::constant(4, 3);
        assert_eq!(c3.compose(&c3), c3);
        assert!(c3.is_idempotent());
    }

    #[test]
    fn composition_order() {
        // (f∘g)(i) = f(g(i)).
        let f = t(&[2, 3, 1]);
        let g = t(&[1, 1, 0]);
        let fg = f.compose(&g);
        assert_eq!(fg, t(&[2, 2, 0]));
    }

    #[test]
    #[should_panic(expected = "size mismatch")]
    fn composition_rejects_size_mismatch() {
        t(&[1]).compose(&t(&[1, 2]));
    }

    #[test]
    fn classify_examples() {
        let nil = classify(&t(&[2, 0]));
        assert!(nil.nilpotent);
        assert_eq!(nil.in_n, Some(0));
        assert_eq!(nil.label(), "nilpotent");

        let diag = classify(&t(&[1, 0]));
        assert!(diag.idempotent && diag.diagonal);
        assert_eq!(diag.in_n, Some(1));
        assert_eq!(diag.label(), "in-N(2,1)");

        let e2 = classify(&t(&[1, 1]));
        assert!(e2.idempotent && !e2.diagonal);
        assert_eq!(e2.in_n, None);
        assert_eq!(e2.label(), "idempotent-general");

        let swap = classify(&t(&[2, 1, 0]));
        assert_eq!(swap.in_n, Some(2));
        assert_eq!(swap.label(), "in-N(3,2)");

        let other = classify(&t(&[1, 1, 2]));
        assert!(!other.idempotent && other.in_n.is_none());
        assert_eq!(other.label(), "other");
    }

    #[test]
    fn forest_correspondence() {
        assert_eq!(forest_from_nilpotent(&t(&[2, 0])).encoding(), "(())");
        assert_eq!(forest_from_nilpotent(&t(&[3, 3, 0])).encoding(), "(()())");
        assert_eq!(forest_from_nilpotent(&t(&[0, 0, 0])).encoding(), "()()()");
    }

    #[test]
    #[should_panic(expected = "nilpotent")]
    fn forest_rejects_non_nilpotent() {
        forest_from_nilpotent(&t(&[1, 1]));
    }

    #[test]
    fn forest_round_trip() {
        for n in 1..=6u32 {
            for tau in crate::forest::enumerate_forests(n) {
                let f = nilpotent_from_forest(&tau);
                assert!(classify(&f).nilpotent);
                assert_eq!(forest_from_nilpotent(&f), tau, "round trip at {tau:?}");
            }
        }
    }

    #[test]
    fn split_block_examples() {
        let (nu, tau) = split_block(&t(&[1]));
        assert_eq!(nu, Partition::new(vec![1]));
        assert!(tau.is_empty());

        let (nu, tau) = split_block(&t(&[2, 1, 0]));
        assert_eq!(nu, Partition::new(vec![2]));
        assert_eq!(tau.encoding(), "()");

        // Loops correspond to fixed points: ν = (1^k).
        let (nu, tau) = split_block(&t(&[1, 2, 0, 3]));
        assert_eq!(nu, Partition::new(vec![1, 1]));
        assert_eq!(tau.encoding(), "(())");
    }

    #[test]
    fn from_block_round_trips() {
        for nu_weight in 0..=3u32 {
            for nu in crate::partition::partitions_of(nu_weight) {
                for tau_size in 1..=3u32 {
                    for tau in crate::forest::enumerate_forests(tau_size) {
                        let f = from_block(&nu, &tau);
                        let (nu2, tau2) = split_block(&f);
                        assert_eq!(nu2, nu);
                        assert_eq!(tau2, tau);
                    }
                }
            }
        }
    }

    #[test]
    fn standardize_three_by_three() {
        let st = standardize_idempotent(&t(&[3, 0, 3]));
        assert_eq!(st.standard, t(&[1, 1, 0]));
        assert_eq!(st.descriptor, "c2+z1");
        assert_eq!(st.witness_factors, "(2,3)(1,3)");
        assert_eq!(st.blocks, vec![2]);
        assert_eq!(st.zero_rank, 1);
        assert_eq!(t(&[3, 0, 3]).conjugate(&st.witness), st.standard);
    }

    #[test]
    fn standardize_seven_by_seven() {
        let e = t(&[7, 2, 0, 2, 5, 2, 7]);
        let st = standardize_idempotent(&e);
        assert_eq!(st.standard, t(&[1, 1, 1, 4, 4, 6, 0]));
        assert_eq!(st.descriptor, "c3+c2+c1+z1");
        assert_eq!(
            st.witness_factors,
            "(4,6,5)(6,7)(5,7)(4,5)(3,6)(2,4)(1,2)"
        );
        assert_eq!(e.conjugate(&st.witness), st.standard);
    }

    #[test]
    fn standardize_edge_cases() {
        let st = standardize_idempotent(&t(&[1, 2, 0, 0]));
        assert_eq!(st.standard, t(&[1, 2, 0, 0]));
        assert_eq!(st.descriptor, "c1+c1+z2");
        assert_eq!(st.witness_factors, "()");

        let st = standardize_idempotent(&PartialTransformation::zero(2));
        assert_eq!(st.descriptor, "z2");

        let st = standardize_idempotent(&PartialTransformation::identity(3));
        assert_eq!(st.descriptor, "c1+c1+c1");

        let st = standardize_idempotent(&PartialTransformation::constant(3, 3));
        assert_eq!(st.standard, t(&[1, 1, 1]));
        assert_eq!(st.descriptor, "c3");
    }

    #[test]
    #[should_panic(expected = "idempotent")]
    fn standardize_rejects_non_idempotent() {
        standardize_idempotent(&t(&[2, 0]));
    }

    #[test]
    fn standardization_is_conjugation_invariant() {
        let e = t(&[1, 1, 4, 4]);
        assert!(e.is_idempotent());
        let base = standardize_idempotent(&e);
        for pi in crate::oracle::all_permutations(4) {
            let st = standardize_idempotent(&e.conjugate(&pi));
            assert_eq!(st.standard, base.standard);
            assert_eq!(st.descriptor, base.descriptor);
        }
    }

    #[test]
    fn stabilizer_orders() {
        for n in 2..=5 {
            let dec = stabilizer_of_idempotent(&PartialTransformation::constant(n, 1));
            assert_eq!(dec.order(), factorial(n as u64 - 1), "c^(1) on [{n}]");
        }
        let dec = stabilizer_of_idempotent(&t(&[1, 1, 3, 3]));
        assert_eq!(dec.blocks, vec![(2, 2)]);
        assert_eq!(dec.order(), BigInt::from(2));
        let dec = stabilizer_of_idempotent(&t(&[1, 1, 0]));
        assert_eq!(dec.order(), BigInt::one());
        let dec = stabilizer_of_idempotent(&PartialTransformation::identity(4));
        assert_eq!(dec.blocks, vec![(1, 4)]);
        assert_eq!(dec.order(), BigInt::from(24));
    }

    #[test]
    fn stabilizer_subgroup_matches_bruteforce() {
        let cases = [
            t(&[1, 1, 3, 3]),
            t(&[1, 1, 1, 0]),
            t(&[3, 0, 3]),
            PartialTransformation::identity(3),
            PartialTransformation::zero(3),
            t(&[2, 2, 2, 5, 5]),
        ];
        for e in cases {
            let theory = stabilizer_subgroup(&e);
            let mut brute: Vec<Vec<u32>> = crate::oracle::all_permutations(e.n())
                .into_iter()
                .filter(|pi| e.conjugate(pi) == e)
                .collect();
            brute.sort();
            assert_eq!(theory, brute, "stabilizer of {e:?}");
            assert_eq!(
                BigInt::from(theory.len() as u64),
                stabilizer_of_idempotent(&e).order()
            );
        }
    }

    #[test]
    fn idempotent_counts() {
        assert_eq!(
            idempotent_count(1, IdempotentFamily::Partial),
            BigInt::from(2)
        );
        assert_eq!(
            idempotent_count(2, IdempotentFamily::Partial),
            BigInt::from(6)
        );
        assert_eq!(idempotent_count(3, IdempotentFamily::Full), BigInt::from(10));
        for n in 1..=5 {
            for family in [IdempotentFamily::Partial, IdempotentFamily::Full] {
                assert_eq!(
                    idempotent_count(n as u32, family),
                    idempotent_count_bruteforce(n, family),
                    "count for n={n} {family:?}"
                );
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let f: PartialTransformation = "3,0,3".parse().unwrap();
        assert_eq!(f, t(&[3, 0, 3]));
        assert_eq!(f.to_string(), "3,0,3");
        assert!("1,5".parse::<PartialTransformation>().is_err());
        assert!("1,x".parse::<PartialTransformation>().is_err());
    }

    #[test]
    fn cycle_strings() {
        assert_eq!(cycle_string(&[1, 2, 3]), "()");
        assert_eq!(cycle_string(&[2, 1, 3]), "(1,2)");
        assert_eq!(cycle_string(&[1, 2, 3, 6, 4, 5]), "(4,6,5)");
    }
}
