//! The power-sum basis with exact rational coefficients, symmetric-group
//! character values, basis conversions, and plethysm.
//!
//! - [`PowerSumPolynomial`]: sparse rational combination of power sums p_μ
//! - [`char_value`]: irreducible character values χ^λ(μ) by the
//!   Murnaghan–Nakayama recursion, memoized
//! - [`schur_to_power`] / [`power_to_schur`]: change of basis; conversion
//!   back to Schur enforces integrality and aborts loudly on failure
//! - [`plethysm`]: f[g] by power-basis substitution (p_m is the algebra
//!   endomorphism fixing scalars and sending p_n ↦ p_{mn})
//! - [`littlewood_hn_h2`], [`littlewood_hn_e2`], [`chen_pk_hn`], [`p2_hn`]:
//!   closed-form plethysm families
//!
//! Rational arithmetic is confined to this basis: every public result that
//! claims to be an integral Schur polynomial passes a hard integrality check.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::partition::{partitions_of, Partition};
use crate::schur::{int_json, remove_rim_hooks, SchurPolynomial};

/// A sparse rational-linear combination of power-sum symmetric functions p_μ.
///
/// Zero coefficients are never stored; terms iterate in the deterministic
/// partition order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PowerSumPolynomial {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumPolynomial {
    pub fn zero() -> Self {
        PowerSumPolynomial { terms: BTreeMap::new() }
    }

    /// The unit: p_∅ = 1.
    pub fn one() -> Self {
        Self::single(Partition::empty())
    }

    pub fn single(mu: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mu, BigRational::one());
        PowerSumPolynomial { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (mu, c) in it {
            out.add_assign_term(mu, c);
        }
        out
    }

    pub fn add_assign_term(&mut self, mu: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
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

    pub fn coeff(&self, mu: &Partition) -> BigRational {
        self.terms.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PowerSumPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Degree if every term has the same weight; `None` for mixed degrees.
    /// The zero polynomial reports degree 0.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(mu) => mu.weight(),
            None => return Some(0),
        };
        it.all(|mu| mu.weight() == first).then_some(first)
    }

    /// The involution ω: p_μ ↦ (−1)^(|μ|−ℓ(μ)) p_μ.
    pub fn omega(&self) -> Self {
        PowerSumPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| {
                    let sign = (mu.weight() - mu.len() as u64) % 2;
                    let v = if sign == 0 { c.clone() } else { -c.clone() };
                    (mu.clone(), v)
                })
                .collect(),
        }
    }

    /// `{"basis":"power","terms":[{"partition":[…],"coeff":{"num":…,"den":…}},…]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "basis": "power",
            "terms": self
                .terms
                .iter()
                .map(|(mu, c)| {
                    json!({
                        "partition": mu.parts(),
                        "coeff": { "num": int_json(c.numer()), "den": int_json(c.denom()) },
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

impl Add for &PowerSumPolynomial {
    type Output = PowerSumPolynomial;
    fn add(self, rhs: &PowerSumPolynomial) -> PowerSumPolynomial {
        let mut out = self.clone();
        for (mu, c) in rhs.terms() {
            out.add_assign_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PowerSumPolynomial {
    type Output = PowerSumPolynomial;
    fn sub(self, rhs: &PowerSumPolynomial) -> PowerSumPolynomial {
        let mut out = self.clone();
        for (mu, c) in rhs.terms() {
            out.add_assign_term(mu.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &PowerSumPolynomial {
    /// p_α·p_β = p_{α∪β} (concatenate the part multisets).
    type Output = PowerSumPolynomial;
    fn mul(self, rhs: &PowerSumPolynomial) -> PowerSumPolynomial {
        let mut out = PowerSumPolynomial::zero();
        for (mu, a) in self.terms() {
            for (nu, b) in rhs.terms() {
                let mut parts: Vec<u32> = mu.parts().to_vec();
                parts.extend_from_slice(nu.parts());
                let joined = if parts.is_empty() {
                    Partition::empty()
                } else {
                    Partition::new(parts)
                };
                out.add_assign_term(joined, a * b);
            }
        }
        out
    }
}

impl fmt::Display for PowerSumPolynomial {
    /// Human-readable sum like `1/2*p[1,1] + 1/2*p[2]`; the p_∅ term prints
    /// as a bare rational.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
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
            let mag_str = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if mu.is_empty() {
                write!(f, "{mag_str}")?;
            } else if mag.is_one() {
                write!(f, "p[{mu}]")?;
            } else {
                write!(f, "{mag_str}*p[{mu}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSumPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

thread_local! {
    static CHAR_MEMO: RefCell<HashMap<(Partition, Partition), BigInt>> =
        RefCell::new(HashMap::new());
}

/// Irreducible character value χ^λ(μ) of S_n, by the Murnaghan–Nakayama
/// recursion: peel a rim hook of size equal to the smallest part of μ from λ
/// in all possible ways, with signs. Memoized per thread.
///
/// # Panics
/// Panics unless |λ| = |μ|.
pub fn char_value(lam: &Partition, mu: &Partition) -> BigInt {
    assert_eq!(
        lam.weight(),
        mu.weight(),
        "character value requires |λ| = |μ| (got {lam} and {mu})"
    );
    if lam.is_empty() {
        return BigInt::one();
    }
    let key = (lam.clone(), mu.clone());
    if let Some(v) = CHAR_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let k = *mu.parts().last().unwrap();
    let rest_parts = &mu.parts()[..mu.len() - 1];
    let rest = if rest_parts.is_empty() {
        Partition::empty()
    } else {
        Partition::new(rest_parts.to_vec())
    };
    let mut sum = BigInt::zero();
    for (nu, hook) in remove_rim_hooks(lam, k) {
        sum += BigInt::from(hook.sign()) * char_value(&nu, &rest);
    }
    CHAR_MEMO.with(|m| m.borrow_mut().insert(key, sum.clone()));
    sum
}

/// Expand into the power basis: s_λ = Σ_{μ⊢|λ|} (χ^λ(μ)/z_μ)·p_μ.
pub fn schur_to_power(f: &SchurPolynomial) -> PowerSumPolynomial {
    let mut out = PowerSumPolynomial::zero();
    for (lam, c) in f.terms() {
        let weight = u32::try_from(lam.weight()).expect("weight fits in u32");
        for mu in partitions_of(weight) {
            let chi = char_value(lam, &mu);
            if chi.is_zero() {
                continue;
            }
            let coeff = BigRational::new(chi * c, mu.centralizer_order());
            out.add_assign_term(mu, coeff);
        }
    }
    out
}

/// Convert back to the Schur basis: p_μ = Σ_λ χ^λ(μ)·s_λ.
///
/// # Panics
/// Panics if any resulting coefficient is non-integral — inputs are required
/// to be images of integral Schur elements, so a fractional coefficient
/// signals an internal arithmetic bug and must not be silenced.
pub fn power_to_schur(g: &PowerSumPolynomial) -> SchurPolynomial {
    let mut by_weight: BTreeMap<u64, Vec<(&Partition, &BigRational)>> = BTreeMap::new();
    for (mu, c) in g.terms() {
        by_weight.entry(mu.weight()).or_default().push((mu, c));
    }
    let mut out = SchurPolynomial::zero();
    for (weight, group) in by_weight {
        let weight = u32::try_from(weight).expect("weight fits in u32");
        for lam in partitions_of(weight) {
            let mut acc = BigRational::zero();
            for &(mu, c) in &group {
                acc += c * BigRational::from(char_value(&lam, mu));
            }
            if acc.is_zero() {
                continue;
            }
            assert!(
                acc.is_integer(),
                "non-integral Schur coefficient {acc} at {lam}: input was not an integral Schur element"
            );
            out.add_assign_term(lam, acc.to_integer());
        }
    }
    out
}

/// The single power sum p_k as a polynomial (k ≥ 1); p_0 is excluded.
pub fn p_single(k: u32) -> PowerSumPolynomial {
    assert!(k >= 1, "p_0 is not defined");
    PowerSumPolynomial::single(Partition::new(vec![k]))
}

/// Complete homogeneous h_n = Σ_{μ⊢n} p_μ/z_μ.
pub fn h_in_power(n: u32) -> PowerSumPolynomial {
    let mut out = PowerSumPolynomial::zero();
    for mu in partitions_of(n) {
        let z = mu.centralizer_order();
        out.add_assign_term(mu, BigRational::new(BigInt::one(), z));
    }
    out
}

/// Elementary e_n = Σ_{μ⊢n} (−1)^(n−ℓ(μ)) p_μ/z_μ.
pub fn e_in_power(n: u32) -> PowerSumPolynomial {
    let mut out = PowerSumPolynomial::zero();
    for mu in partitions_of(n) {
        let z = mu.centralizer_order();
        let sign = if (n as u64 - mu.len() as u64) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        out.add_assign_term(mu, BigRational::new(sign, z));
    }
    out
}

/// Plethysm by a single power sum: p_m[g]. This is the algebra endomorphism
/// fixing rational scalars and sending each p_n to p_{mn}, so on the power
/// basis it multiplies every part of every indexing partition by m.
pub fn plethysm_pk(m: u32, g: &PowerSumPolynomial) -> PowerSumPolynomial {
    assert!(m >= 1, "p_0 plethysm is not defined");
    PowerSumPolynomial {
        terms: g
            .terms
            .iter()
            .map(|(nu, c)| {
                let scaled = if nu.is_empty() {
                    Partition::empty()
                } else {
                    Partition::new(nu.parts().iter().map(|&q| q * m).collect::<Vec<_>>())
                };
                (scaled, c.clone())
            })
            .collect(),
    }
}

/// Plethysm f[g] on the power basis: for f = Σ c_μ p_μ,
/// f[g] = Σ c_μ ∏_i p_{μ_i}[g].
///
/// # Panics
/// Panics when g = 0 (plethysm into zero is excluded by contract).
pub fn plethysm_power(f: &PowerSumPolynomial, g: &PowerSumPolynomial) -> PowerSumPolynomial {
    assert!(!g.is_zero(), "plethysm requires a nonzero inner argument");
    let mut substituted: HashMap<u32, PowerSumPolynomial> = HashMap::new();
    for (mu, _) in f.terms() {
        for &part in mu.parts() {
            substituted
                .entry(part)
                .or_insert_with(|| plethysm_pk(part, g));
        }
    }
    let mut out = PowerSumPolynomial::zero();
    for (mu, c) in f.terms() {
        let mut prod = PowerSumPolynomial::one();
        for &part in mu.parts() {
            prod = &prod * &substituted[&part];
        }
        for (nu, v) in prod.terms {
            out.add_assign_term(nu, v * c);
        }
    }
    out
}

/// Plethysm of Schur-basis inputs with an integral Schur-basis result.
pub fn plethysm(f: &SchurPolynomial, g: &SchurPolynomial) -> SchurPolynomial {
    let fp = schur_to_power(f);
    let gp = schur_to_power(g);
    power_to_schur(&plethysm_power(&fp, &gp))
}

/// Closed form h_n[h_2] = Σ s_λ over partitions λ ⊢ 2n with all parts even.
pub fn littlewood_hn_h2(n: u32) -> SchurPolynomial {
    let mut out = SchurPolynomial::zero();
    for lam in partitions_of(2 * n) {
        if lam.is_even() {
            out.add_assign_term(lam, BigInt::one());
        }
    }
    out
}

/// Closed form h_n[e_2] = Σ s_λ over partitions λ ⊢ 2n with λ′ even.
pub fn littlewood_hn_e2(n: u32) -> SchurPolynomial {
    let mut out = SchurPolynomial::zero();
    for lam in partitions_of(2 * n) {
        if lam.conjugate().is_even() {
            out.add_assign_term(lam, BigInt::one());
        }
    }
    out
}

/// Closed form p_2[h_n] = Σ_{0 ≤ a ≤ n} (−1)^a s_{(2n−a, a)}.
pub fn p2_hn(n: u32) -> SchurPolynomial {
    let mut out = SchurPolynomial::zero();
    for a in 0..=n {
        let mut parts = Vec::new();
        if 2 * n - a > 0 {
            parts.push(2 * n - a);
        }
        if a > 0 {
            parts.push(a);
        }
        let lam = if parts.is_empty() { Partition::empty() } else { Partition::new(parts) };
        let sign = if a % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_assign_term(lam, sign);
    }
    out
}

/// p_k[h_n] by the signed tabloid rule: sum of sgn(T)·s_λ over shapes λ ⊢ kn
/// that can be tiled by n successively added rim hooks of size k, each
/// touching the first row.
///
/// Because every such hook extends the first row, the hooks of a tiling can
/// be added in exactly one order (left to right along row 1), so the search
/// visits each tabloid once. Each shape admits at most one such tabloid;
/// a second tabloid for the same shape aborts loudly.
pub fn chen_pk_hn(k: u32, n: u32) -> SchurPolynomial {
    assert!(k >= 1, "p_0 is not defined");
    let mut found: BTreeMap<Partition, BigInt> = BTreeMap::new();
    fn search(
        current: &Partition,
        sign: i32,
        remaining: u32,
        k: u32,
        found: &mut BTreeMap<Partition, BigInt>,
    ) {
        if remaining == 0 {
            let prev = found.insert(current.clone(), BigInt::from(sign));
            assert!(
                prev.is_none(),
                "shape {current} admits two first-row rim hook tabloids of type {k}^n"
            );
            return;
        }
        for (next, hook) in crate::schur::add_rim_hooks(current, k) {
            if hook.is_t_special() {
                search(&next, sign * hook.sign(), remaining - 1, k, found);
            }
        }
    }
    search(&Partition::empty(), 1, n, k, &mut found);
    SchurPolynomial::from_terms(found)
}
