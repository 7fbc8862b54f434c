//! Exact subgroup counting for abelian p-groups, plus the small
//! number-theoretic helpers the verification suite needs.
//!
//! The central function is [`count_subgroups_of_type`]: the number of
//! subgroups of type `nu` in an abelian p-group of type `mu` is
//!
//! ```text
//!   prod_{i>=1}  p^( nu'_{i+1} * (mu'_i - nu'_i) )
//!                * gauss(mu'_i - nu'_{i+1}, nu'_i - nu'_{i+1}; p)
//! ```
//!
//! where `mu'`, `nu'` are conjugate partitions (`nu'` zero-padded to the
//! length of `mu'`) and `gauss(n, k; p)` is the Gaussian binomial, the
//! number of k-dimensional subspaces of an n-dimensional vector space over
//! the p-element field. Everything is computed in arbitrary precision;
//! counts overflow machine words long before the constructions do.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Deterministic primality test by trial division. Inputs stay far below
/// the range where this would matter.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::invalid(format!("{p} is not prime")))
    }
}

/// Gaussian binomial `[n k]_p`: the number of k-dimensional subspaces of an
/// n-dimensional vector space over the p-element field. Zero when `k > n`.
///
/// Computed by the product formula with an exact division at every step:
/// after step i the accumulator equals `[n-k+i  i]_p`, an integer.
pub fn gaussian_binomial(n: u32, k: u32, p: u64) -> Result<BigUint> {
    require_prime(p)?;
    if k > n {
        return Ok(BigUint::zero());
    }
    let p = BigUint::from(p);
    let mut acc = BigUint::one();
    for i in 1..=k {
        let num = p.pow(n - k + i) - BigUint::one();
        let den = p.pow(i) - BigUint::one();
        acc *= num;
        debug_assert!((&acc % &den).is_zero());
        acc /= den;
    }
    Ok(acc)
}

/// Number of subgroups of type `nu` in an abelian p-group of type `mu`.
/// Returns zero unless `nu` is contained in `mu`.
pub fn count_subgroups_of_type(mu: &Partition, nu: &Partition, p: u64) -> Result<BigUint> {
    require_prime(p)?;
    if !mu.contains(nu) {
        return Ok(BigUint::zero());
    }
    let mu_c = mu.conjugate();
    let nu_c = nu.conjugate();
    let big_p = BigUint::from(p);

    let mut acc = BigUint::one();
    for i in 0..mu_c.len() {
        let mu_i = mu_c.part(i);
        let nu_i = nu_c.part(i);
        let nu_next = nu_c.part(i + 1);
        // nu contained in mu gives nu'_i <= mu'_i, and conjugates are
        // weakly decreasing, so none of these differences underflow.
        let exponent = nu_next * (mu_i - nu_i);
        acc *= big_p.pow(exponent);
        acc *= gaussian_binomial(mu_i - nu_next, nu_i - nu_next, p)?;
    }
    Ok(acc)
}

/// Number of subgroups of order `p^k` in an abelian p-group of type `mu`:
/// the sum of [`count_subgroups_of_type`] over all types of weight `k`
/// contained in `mu`. Returns zero when `k` exceeds the weight of `mu`.
pub fn count_subgroups_of_order(mu: &Partition, k: u32, p: u64) -> Result<BigUint> {
    require_prime(p)?;
    let mut total = BigUint::zero();
    for nu in Partition::bounded_of_weight(k, mu) {
        total += count_subgroups_of_type(mu, &nu, p)?;
    }
    Ok(total)
}

/// Number of divisors and sum of divisors of `m`.
pub fn tau_sigma(m: u64) -> Result<(BigUint, BigUint)> {
    if m == 0 {
        return Err(Error::invalid("tau/sigma are undefined at 0"));
    }
    let mut tau = BigUint::one();
    let mut sigma = BigUint::one();
    let mut rest = m;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0u32;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            tau *= BigUint::from(e + 1);
            let q = BigUint::from(d);
            sigma *= (q.pow(e + 1) - BigUint::one()) / (q - BigUint::one());
        }
        d += 1;
    }
    if rest > 1 {
        tau *= BigUint::from(2u32);
        sigma *= BigUint::from(rest + 1);
    }
    Ok((tau, sigma))
}
