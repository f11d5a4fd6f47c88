//! Characters and dimensions of the symmetric-group modules attached to
//! rooted forests and loop-augmented forests: the plethystic Frobenius
//! character of a forest, the induced character of a permutation-centralizer,
//! the combined character of a loop-augmented forest in two evaluation
//! modes, and sign-representation multiplicities with per-degree censuses.
//!
//! The two modes differ only in the factor contributed by the looped part
//! with cycle type ν: `Paper` uses the irreducible s_ν, while `Exact` uses
//! the cycle index of the centralizer Z(σ) of a permutation σ of type ν,
//! which is the genuine permutation character of the conjugation orbit and
//! is what the brute-force oracle reproduces.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::forest::{enumerate_forests, is_blossoming, LoopAugmentedForest, RootedForest, RootedTree};
use crate::partition::{factorial, Partition};
use crate::power::{
    h_in_power, p_single, plethysm_power, power_to_schur, schur_to_power, PowerSumPolynomial,
};
use crate::schur::{dim_rep, inner_product, SchurPolynomial};

/// Evaluation mode for loop-augmented characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Paper,
    Exact,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Paper => "paper",
            Mode::Exact => "exact",
        })
    }
}

/// What a character was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharSource {
    Forest(RootedForest),
    LoopAugmented(LoopAugmentedForest),
}

/// A computed character with its provenance, evaluation mode, and dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdunCharacter {
    pub source: CharSource,
    pub character: SchurPolynomial,
    pub mode: Mode,
    /// Always dim_rep(character, n) for the ground-set size n.
    pub dim: BigInt,
}

/// Frobenius character of a forest in the power-sum basis: a single vertex
/// contributes p₁, a tree contributes p₁·(character of its branch forest),
/// and a forest with distinct components t_i of multiplicity m_i contributes
/// ∏ h_{m_i}[F_{t_i}]. The empty forest gives 1.
fn forest_power(tau: &RootedForest) -> PowerSumPolynomial {
    let mut out = PowerSumPolynomial::one();
    for (rep, mult) in tau.component_multiplicities() {
        let ft = tree_power(rep);
        out = &out * &plethysm_power(&h_in_power(mult), &ft);
    }
    out
}

fn tree_power(t: &RootedTree) -> PowerSumPolynomial {
    let branches = RootedForest::new(t.children().to_vec());
    &p_single(1) * &forest_power(&branches)
}

/// Frobenius character F_τ of a rooted forest, expanded in the Schur basis.
///
/// F of m isolated vertices is h_m = s_(m); F of the star with n−1 leaves is
/// s₁·s_(n−1); F is multiplicative over distinct components via plethysm
/// with h of the multiplicity.
pub fn frobenius_forest(tau: &RootedForest) -> SchurPolynomial {
    power_to_schur(&forest_power(tau))
}

/// Dimension n!/|Aut τ| of the module attached to τ: the automorphism order
/// is the product over all vertices (and the component level) of the
/// factorials of equal-branch multiplicities.
///
/// The star on 4 vertices gives 4, a chain on n vertices gives n!.
pub fn dim_odun(tau: &RootedForest) -> BigInt {
    let aut = tau.automorphism_order();
    let total = factorial(tau.size() as u64);
    let (q, r) = num_integer::Integer::div_rem(&total, &aut);
    assert!(r.is_zero(), "automorphism order divides n!");
    q
}

fn totient(j: u32) -> u32 {
    (1..=j).filter(|a| num_integer::gcd(*a, j) == 1).count() as u32
}

/// Cycle index of the centralizer of a permutation of cycle type ν, in the
/// power-sum basis: ∏_j h_{m_j}[(1/j)·Σ_{d|j} φ(d)·p_d^(j/d)] where ν has
/// m_j parts equal to j and φ is Euler's totient.
fn centralizer_cycle_index(nu: &Partition) -> PowerSumPolynomial {
    let mut out = PowerSumPolynomial::one();
    for (j, m) in nu.multiplicities() {
        let mut inner = PowerSumPolynomial::zero();
        for d in (1..=j).filter(|d| j % d == 0) {
            inner.add_assign_term(
                Partition::new(vec![d; (j / d) as usize]),
                BigRational::new(BigInt::from(totient(d)), BigInt::from(j)),
            );
        }
        out = &out * &plethysm_power(&h_in_power(m), &inner);
    }
    out
}

/// Frobenius characteristic of the trivial character induced from the
/// centralizer Z(σ) of a permutation of cycle type ν up to S_|ν|, in the
/// integral Schur basis.
///
/// ν = (1^k) gives s_(k); ν = (2) gives s_(2); ν = (3) gives s_(3)+s_(1,1,1).
///
/// # Panics
/// Panics if the expansion is not integral (it always is for genuine cycle
/// indices).
pub fn centralizer_induced_char(nu: &Partition) -> SchurPolynomial {
    power_to_schur(&centralizer_cycle_index(nu))
}

/// Character of the module of a loop-augmented forest (or general block form)
/// with cycle type ν on the looped part and forest τ.
///
/// Paper mode multiplies F_τ by the irreducible s_ν; exact mode multiplies by
/// the induced character of the centralizer of ν, which matches the
/// conjugation-orbit oracle. The two coincide whenever ν = (1^k) up to k = 1
/// and for k = 0, and differ already at ν = (1,1): s_(1,1) versus s_(2).
pub fn frobenius_loop(f: &LoopAugmentedForest, mode: Mode) -> OdunCharacter {
    let factor = match mode {
        Mode::Paper => schur_to_power(&SchurPolynomial::single(f.sigma_type().clone())),
        Mode::Exact => centralizer_cycle_index(f.sigma_type()),
    };
    let character = power_to_schur(&(&factor * &forest_power(f.forest())));
    let dim = dim_rep(&character, f.total_size() as u64);
    OdunCharacter {
        source: CharSource::LoopAugmented(f.clone()),
        character,
        mode,
        dim,
    }
}

/// Orbit dimension of a block form (ν, τ) on n = |ν| + |τ| points: the
/// stabilizer of a block representative is the centralizer of the cycle part
/// times the automorphism group of the forest part, so the dimension is
/// n!/(z_ν·|Aut τ|) with z_ν = ∏_j j^{m_j}·m_j!.
///
/// ν = (1^n) gives 1; k = 0 reduces to [`dim_odun`]; ν = (2) with a single
/// extra vertex on n = 3 gives 3.
pub fn dim_loop(f: &LoopAugmentedForest) -> BigInt {
    let n = f.total_size() as u64;
    let stab = f.sigma_type().centralizer_order() * f.forest().automorphism_order();
    let (q, r) = num_integer::Integer::div_rem(&factorial(n), &stab);
    assert!(r.is_zero(), "stabilizer order divides n!");
    q
}

/// ⟨character of f, s_(1^n)⟩ in the requested mode. In paper mode this is 1
/// exactly when ν = (1^k) and τ is blossoming, else 0.
pub fn sign_multiplicity(f: &LoopAugmentedForest, mode: Mode) -> BigInt {
    let n = f.total_size();
    let chi = frobenius_loop(f, mode);
    let sign = SchurPolynomial::single(if n == 0 {
        Partition::empty()
    } else {
        Partition::column(n)
    });
    inner_product(&chi.character, &sign)
}

/// One row of a sign census: how many loop-augmented forests with k loops
/// afford the sign representation. Rows with `in_total = false` are boundary
/// cases reported alongside but not folded into the total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub k: u32,
    pub count: u64,
    pub in_total: bool,
}

/// A per-item disagreement between the paper-mode prediction and the exact
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusDiscrepancy {
    pub k: u32,
    /// Canonical encoding of the forest part.
    pub forest: String,
    pub paper: u64,
    pub exact: u64,
}

/// Census of sign-representation multiplicities over loop-augmented forests
/// of total size n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCensus {
    pub n: u32,
    pub mode: Mode,
    pub per_k: Vec<CensusEntry>,
    pub total: u64,
    /// Empty in paper mode; in exact mode, all items whose exact multiplicity
    /// differs from the paper-mode prediction.
    pub discrepancies: Vec<CensusDiscrepancy>,
}

impl SignCensus {
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("n".into(), self.n.into());
        map.insert("mode".into(), self.mode.to_string().into());
        let per_k: Vec<serde_json::Value> = self
            .per_k
            .iter()
            .map(|e| {
                let mut m = serde_json::Map::new();
                m.insert("k".into(), e.k.into());
                m.insert("count".into(), e.count.into());
                m.insert("in_total".into(), e.in_total.into());
                serde_json::Value::Object(m)
            })
            .collect();
        map.insert("per_k".into(), per_k.into());
        map.insert("total".into(), self.total.into());
        let discrepancies: Vec<serde_json::Value> = self
            .discrepancies
            .iter()
            .map(|d| {
                let mut m = serde_json::Map::new();
                m.insert("k".into(), d.k.into());
                m.insert("forest".into(), d.forest.clone().into());
                m.insert("paper".into(), d.paper.into());
                m.insert("exact".into(), d.exact.into());
                serde_json::Value::Object(m)
            })
            .collect();
        map.insert("discrepancies".into(), discrepancies.into());
        serde_json::Value::Object(map)
    }
}

fn forests_of_size(m: u32) -> Vec<RootedForest> {
    if m == 0 {
        vec![RootedForest::empty()]
    } else {
        enumerate_forests(m)
    }
}

/// Census of sign multiplicities for loop-augmented forests of total size n.
///
/// Paper mode reports the closed-form count 2^(n−k−2) for 0 ≤ k ≤ n−2 (total
/// 2^(n−1)−1 by construction) and the two boundary rows k = n−1, n with one
/// item each, excluded from the total. Exact mode (n ≤ 8) counts actual
/// multiplicities item by item and lists every disagreement with the
/// paper-mode prediction.
///
/// # Panics
/// Panics if n < 2, or in exact mode if n > 8.
pub fn sign_census(n: u32, mode: Mode) -> SignCensus {
    assert!(n >= 2, "census requires n >= 2");
    let mut per_k = Vec::new();
    let mut total = 0u64;
    let mut discrepancies = Vec::new();
    match mode {
        Mode::Paper => {
            for k in 0..=n {
                let (count, in_total) = if k + 2 <= n {
                    (1u64 << (n - k - 2), true)
                } else {
                    (1, false)
                };
                if in_total {
                    total += count;
                }
                per_k.push(CensusEntry { k, count, in_total });
            }
        }
        Mode::Exact => {
            assert!(n <= 8, "exact census is capped at n = 8, got {n}");
            for k in 0..=n {
                let mut count = 0u64;
                for tau in forests_of_size(n - k) {
                    let predicted = u64::from(is_blossoming(&tau));
                    let f = LoopAugmentedForest::new(k, tau.clone());
                    let exact = &sign_multiplicity(&f, Mode::Exact);
                    let exact = u64::try_from(exact).expect("small nonnegative multiplicity");
                    if exact > 0 {
                        count += exact;
                    }
                    if exact != predicted {
                        discrepancies.push(CensusDiscrepancy {
                            k,
                            forest: tau.encoding(),
                            paper: predicted,
                            exact,
                        });
                    }
                }
                let in_total = k + 2 <= n;
                if in_total {
                    total += count;
                }
                per_k.push(CensusEntry { k, count, in_total });
            }
        }
    }
    SignCensus { n, mode, per_k, total, discrepancies }
}
