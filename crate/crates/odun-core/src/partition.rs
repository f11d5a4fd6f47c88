//! Integer partitions: the index set for Schur functions, power sums,
//! conjugacy classes of S_n, and Young-diagram shapes.
//!
//! - [`Partition`]: weakly decreasing positive parts, cached weight
//! - [`Partition::conjugate`]: transpose of the Young diagram
//! - [`partitions_of`]: all partitions of n in reverse-lexicographic order
//! - [`Partition::centralizer_order`]: z_ν = ∏_j j^{m_j} · m_j!

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

/// A partition of a nonnegative integer: weakly decreasing positive parts.
///
/// The empty partition is the unique partition of 0 and acts as the unit
/// index (s_∅ = 1). Parts are stored in decreasing order; parsers accept
/// either order and normalize.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u64,
}

impl Partition {
    /// Build from parts in any order; zeros are rejected.
    ///
    /// # Panics
    /// Panics if any part is 0.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().map(|&p| p as u64).sum();
        Partition { parts, weight }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), weight: 0 }
    }

    /// The one-row partition (n), or the empty partition when n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 { Self::empty() } else { Self::new(vec![n]) }
    }

    /// The one-column partition (1^n).
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize], weight: n as u64 }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i` (0-based), or 0 past the end — convenient for shape
    /// arithmetic where trailing zero rows are implicit.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition λ′ with λ′_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut j = 1u32;
        loop {
            let count = self.parts.iter().filter(|&&p| p >= j).count() as u32;
            if count == 0 {
                break;
            }
            parts.push(count);
            j += 1;
        }
        Partition { parts, weight: self.weight }
    }

    /// True iff every part is even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    /// Multiplicity of the part `j`.
    pub fn multiplicity(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == j).count() as u32
    }

    /// Multiplicities as (part, multiplicity) pairs, parts decreasing.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centralizer order z_ν = ∏_j j^{m_j} · m_j! of a permutation of cycle
    /// type ν in S_{|ν|}; equals n!/(class size).
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for _ in 0..mult {
                z *= BigInt::from(part);
            }
            for i in 1..=mult {
                z *= BigInt::from(i);
            }
        }
        z
    }

    /// Shape containment: true iff μ_i ≤ λ_i for all i.
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Append a part that must not exceed the current smallest part.
    /// Used by enumeration; keeps the decreasing invariant without a sort.
    fn push_part(&mut self, p: u32) {
        debug_assert!(p > 0 && self.parts.last().map_or(true, |&l| l >= p));
        self.parts.push(p);
        self.weight += p as u64;
    }

    fn pop_part(&mut self) {
        if let Some(p) = self.parts.pop() {
            self.weight -= p as u64;
        }
    }
}

/// Ordering used everywhere for deterministic iteration and serialization:
/// by weight first, then reverse-lexicographic on the decreasing part
/// sequences — so for fixed n: (n) < (n−1,1) < … < (1^n).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Comma-separated decreasing parts; the empty partition prints as "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Errors from parsing partitions and skew shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// A token was not a positive integer (0 is only allowed standalone).
    BadPart(String),
    /// A skew shape "λ/μ" whose inner shape is not contained in the outer.
    NotContained,
    /// More than one '/' in a skew shape.
    BadSkew(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::BadPart(tok) => write!(f, "invalid partition part {tok:?}"),
            ParseError::NotContained => write!(f, "inner shape not contained in outer shape"),
            ParseError::BadSkew(s) => write!(f, "invalid skew shape {s:?}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl FromStr for Partition {
    type Err = ParseError;

    /// Accepts comma-separated parts in any order; "" and "0" both denote
    /// the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            match tok.parse::<u32>() {
                Ok(p) if p > 0 => parts.push(p),
                _ => return Err(ParseError::BadPart(tok.to_string())),
            }
        }
        Ok(Partition::new(parts))
    }
}

/// Parse a skew shape "λ/μ" (or a plain "λ", read as λ/∅).
pub fn parse_skew(s: &str) -> Result<(Partition, Partition), ParseError> {
    let mut it = s.split('/');
    let outer: Partition = it.next().unwrap_or("").parse()?;
    let inner: Partition = match it.next() {
        Some(part) => part.parse()?,
        None => Partition::empty(),
    };
    if it.next().is_some() {
        return Err(ParseError::BadSkew(s.to_string()));
    }
    if !outer.contains(&inner) {
        return Err(ParseError::NotContained);
    }
    Ok((outer, inner))
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order:
/// (n), (n−1,1), …, (1^n). This is the iteration order of [`Partition`]'s
/// `Ord` restricted to fixed weight.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Partition::empty();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Partition, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    let hi = remaining.min(max_part);
    for p in (1..=hi).rev() {
        current.push_part(p);
        descend(remaining - p, p, current, out);
        current.pop_part();
    }
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// Binomial coefficient C(n, k) as a big integer; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle for p(n): the pentagonal-number recurrence
    /// p(n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)].
    fn partition_count_pentagonal(n: usize) -> i64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * table[i - g2];
                }
                k += 1;
            }
            table[i] = sum;
        }
        table[n]
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
        assert_eq!(Partition::new(vec![2, 2]).conjugate(), Partition::new(vec![2, 2]));
        assert_eq!(
            Partition::new(vec![4, 2, 2]).conjugate(),
            Partition::new(vec![3, 3, 1, 1])
        );
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=20u32 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn is_even_examples() {
        assert!(Partition::new(vec![4, 2]).is_even());
        assert!(!Partition::new(vec![3, 3]).is_even());
        assert!(Partition::empty().is_even());
    }

    #[test]
    fn partitions_of_counts_match_pentagonal_oracle() {
        for n in 0..=30u32 {
            assert_eq!(
                partitions_of(n).len() as i64,
                partition_count_pentagonal(n as usize),
                "p({n}) mismatch"
            );
        }
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        // Reverse-lexicographic order, and sorted under Ord.
        let p4 = partitions_of(4);
        assert_eq!(
            p4,
            vec![
                Partition::new(vec![4]),
                Partition::new(vec![3, 1]),
                Partition::new(vec![2, 2]),
                Partition::new(vec![2, 1, 1]),
                Partition::new(vec![1, 1, 1, 1]),
            ]
        );
        let mut sorted = p4.clone();
        sorted.sort();
        assert_eq!(sorted, p4);
    }

    #[test]
    fn partitions_are_distinct() {
        for n in 0..=15u32 {
            let all = partitions_of(n);
            let set: std::collections::BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
        }
    }

    #[test]
    fn centralizer_order_examples() {
        assert_eq!(Partition::new(vec![1, 1, 1]).centralizer_order(), BigInt::from(6));
        assert_eq!(Partition::new(vec![2, 1]).centralizer_order(), BigInt::from(2));
        assert_eq!(Partition::new(vec![3]).centralizer_order(), BigInt::from(3));
        assert_eq!(Partition::empty().centralizer_order(), BigInt::from(1));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        // Σ_{λ⊢n} n!/z_λ = n!: conjugacy classes partition S_n.
        for n in 0..=10u64 {
            let nf = factorial(n);
            let mut sum = BigInt::from(0);
            for lam in partitions_of(n as u32) {
                sum += &nf / lam.centralizer_order();
            }
            assert_eq!(sum, nf, "class equation fails at n={n}");
        }
    }

    #[test]
    fn parse_and_display() {
        let lam: Partition = "4,2,2".parse().unwrap();
        assert_eq!(lam, Partition::new(vec![4, 2, 2]));
        assert_eq!(lam.to_string(), "4,2,2");
        // Increasing-order input normalizes.
        let lam2: Partition = "2,2,4".parse().unwrap();
        assert_eq!(lam2, lam);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "0");
        assert!("4,x".parse::<Partition>().is_err());
        assert!("4,0,2".parse::<Partition>().is_err());
    }

    #[test]
    fn parse_skew_shapes() {
        let (outer, inner) = parse_skew("4,3,2,2/2,2,1").unwrap();
        assert_eq!(outer, Partition::new(vec![4, 3, 2, 2]));
        assert_eq!(inner, Partition::new(vec![2, 2, 1]));
        let (outer, inner) = parse_skew("3,1").unwrap();
        assert_eq!(outer, Partition::new(vec![3, 1]));
        assert_eq!(inner, Partition::empty());
        assert_eq!(parse_skew("2,1/3"), Err(ParseError::NotContained));
        assert!(parse_skew("2/1/1").is_err());
    }

    #[test]
    fn containment() {
        let lam = Partition::new(vec![4, 3, 2, 2]);
        assert!(lam.contains(&Partition::new(vec![2, 2, 1])));
        assert!(lam.contains(&Partition::empty()));
        assert!(!lam.contains(&Partition::new(vec![5])));
        assert!(!lam.contains(&Partition::new(vec![2, 2, 2, 2, 1])));
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(10, 0), BigInt::from(1));
    }
}
