//! Brute-force conjugation oracles: orbits and stabilizers of partial
//! transformations under the symmetric group, and the Schur expansion of an
//! orbit's permutation character computed from fixed-point counts alone.
//!
//! Everything here is written for independence rather than speed, so results
//! can cross-check the structural formulas elsewhere in the crate. Orbit
//! character extraction is capped at n = 8.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::partition::{partitions_of, Partition};
use crate::power::{power_to_schur, PowerSumPolynomial};
use crate::schur::SchurPolynomial;
use crate::transform::PartialTransformation;

/// All n! permutations of [n] as 1-indexed image sequences, in lexicographic
/// order.
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    fn extend(n: usize, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n as u32 {
            if !used[v as usize] {
                used[v as usize] = true;
                cur.push(v);
                extend(n, cur, used, out);
                cur.pop();
                used[v as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// A permutation of [n] with cycle type μ: consecutive blocks, each cycled.
///
/// # Panics
/// Panics unless |μ| = n.
pub fn permutation_of_cycle_type(mu: &Partition, n: usize) -> Vec<u32> {
    assert_eq!(mu.weight(), n as u64, "cycle type must have weight n");
    let mut pi: Vec<u32> = (1..=n as u32).collect();
    let mut start = 1u32;
    for &part in mu.parts() {
        for offset in 0..part {
            let i = start + offset;
            pi[(i - 1) as usize] = if offset + 1 == part { start } else { i + 1 };
        }
        start += part;
    }
    pi
}

/// Cycle type of a permutation given as a 1-indexed image sequence.
pub fn cycle_type_of(pi: &[u32]) -> Partition {
    let n = pi.len();
    let mut seen = vec![false; n + 1];
    let mut lengths = Vec::new();
    for start in 1..=n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut len = 0u32;
        let mut v = start;
        loop {
            seen[v as usize] = true;
            len += 1;
            v = pi[(v - 1) as usize];
            if v == start {
                break;
            }
        }
        lengths.push(len);
    }
    if lengths.is_empty() {
        Partition::empty()
    } else {
        Partition::new(lengths)
    }
}

/// The conjugation orbit {πfπ⁻¹ : π ∈ S_n}, sorted and deduplicated.
pub fn orbit(f: &PartialTransformation) -> Vec<PartialTransformation> {
    let mut set = BTreeSet::new();
    for pi in all_permutations(f.n()) {
        set.insert(f.conjugate(&pi));
    }
    set.into_iter().collect()
}

/// The stabilizer {π : πfπ⁻¹ = f} of a transformation, as a sorted list.
pub fn stabilizer_bruteforce(f: &PartialTransformation) -> Vec<Vec<u32>> {
    all_permutations(f.n())
        .into_iter()
        .filter(|pi| &f.conjugate(pi) == f)
        .collect()
}

/// Schur expansion of the permutation character of S_n acting on the
/// conjugation orbit of f, computed from first principles: for one
/// representative σ_μ of each cycle type μ, count the orbit elements fixed
/// by σ_μ, then expand Σ_μ (fixed(μ)/z_μ)·p_μ into Schur functions.
///
/// The expansion is integral and nonnegative by construction (it is a
/// character); both properties are asserted.
///
/// # Panics
/// Panics for n > 8.
pub fn orbit_character(f: &PartialTransformation) -> SchurPolynomial {
    let n = f.n();
    assert!(n <= 8, "orbit character oracle is capped at n = 8, got {n}");
    let orb = orbit(f);
    let mut char_p = PowerSumPolynomial::zero();
    for mu in partitions_of(n as u32) {
        let sigma = permutation_of_cycle_type(&mu, n);
        let fixed = orb.iter().filter(|g| &g.conjugate(&sigma) == *g).count();
        let z = mu.centralizer_order();
        char_p.add_assign_term(mu, BigRational::new(BigInt::from(fixed), z));
    }
    let s = power_to_schur(&char_p);
    assert!(
        s.is_nonnegative(),
        "permutation character must decompose nonnegatively"
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;

    fn t(images: &[u32]) -> PartialTransformation {
        PartialTransformation::new(images.to_vec())
    }

    fn s(parts: &[u32]) -> Partition {
        if parts.is_empty() {
            Partition::empty()
        } else {
            Partition::new(parts.to_vec())
        }
    }

    #[test]
    fn permutation_generation() {
        assert_eq!(all_permutations(0), vec![Vec::<u32>::new()]);
        assert_eq!(all_permutations(3).len(), 6);
        assert_eq!(all_permutations(3)[0], vec![1, 2, 3]);
        assert_eq!(all_permutations(3)[5], vec![3, 2, 1]);
        for n in 1..=5 {
            let perms = all_permutations(n);
            assert_eq!(perms.len() as u64, {
                let f: BigInt = factorial(n as u64);
                u64::try_from(f).unwrap()
            });
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type_of(&[1, 2, 3]), s(&[1, 1, 1]));
        assert_eq!(cycle_type_of(&[2, 1, 3]), s(&[2, 1]));
        assert_eq!(cycle_type_of(&[2, 3, 1]), s(&[3]));
        for n in 1..=5 {
            for mu in partitions_of(n) {
                let pi = permutation_of_cycle_type(&mu, n as usize);
                assert_eq!(cycle_type_of(&pi), mu);
            }
        }
    }

    #[test]
    fn orbit_examples() {
        // 1 → 2 on [2]: the two injections with one undefined point.
        let orb = orbit(&t(&[2, 0]));
        assert_eq!(orb.len(), 2);
        assert!(orb.contains(&t(&[2, 0])) && orb.contains(&t(&[0, 1])));
        // Constants form one orbit of size n.
        assert_eq!(orbit(&PartialTransformation::constant(3, 3)).len(), 3);
        // The identity is central.
        assert_eq!(orbit(&PartialTransformation::identity(4)).len(), 1);
    }

    #[test]
    fn orbit_stabilizer_product() {
        for f in [
            t(&[2, 0]),
            t(&[1, 1]),
            PartialTransformation::constant(4, 2),
            t(&[3, 3, 0, 2]),
            t(&[2, 1, 0, 0]),
        ] {
            let orbit_len = orbit(&f).len() as u64;
            let stab_len = stabilizer_bruteforce(&f).len() as u64;
            assert_eq!(
                BigInt::from(orbit_len * stab_len),
                factorial(f.n() as u64),
                "orbit-stabilizer for {f:?}"
            );
        }
    }

    #[test]
    fn character_goldens() {
        let two = orbit_character(&t(&[2, 0]));
        let mut expected = SchurPolynomial::zero();
        expected.add_assign_term(s(&[2]), 1.into());
        expected.add_assign_term(s(&[1, 1]), 1.into());
        assert_eq!(two, expected);

        let constants = orbit_character(&PartialTransformation::constant(3, 1));
        let mut expected = SchurPolynomial::zero();
        expected.add_assign_term(s(&[3]), 1.into());
        expected.add_assign_term(s(&[2, 1]), 1.into());
        assert_eq!(constants, expected);

        for n in [1, 3, 5] {
            let trivial = orbit_character(&PartialTransformation::identity(n));
            let mut expected = SchurPolynomial::zero();
            expected.add_assign_term(s(&[n as u32]), 1.into());
            assert_eq!(trivial, expected, "identity on [{n}]");
            assert_eq!(
                orbit_character(&PartialTransformation::zero(n)),
                expected,
                "zero map on [{n}]"
            );
        }
    }

    #[test]
    fn character_dimension_matches_orbit_size() {
        for f in [
            t(&[2, 0]),
            t(&[1, 1]),
            t(&[1, 1, 0]),
            t(&[3, 3, 0, 2]),
            PartialTransformation::constant(5, 5),
        ] {
            let chi = orbit_character(&f);
            assert_eq!(
                crate::schur::dim_rep(&chi, f.n() as u64),
                BigInt::from(orbit(&f).len() as u64),
                "dimension of orbit character of {f:?}"
            );
        }
    }
}
