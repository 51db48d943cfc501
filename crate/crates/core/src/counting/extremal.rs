//! Exact `p(G)` for the extremal family without enumeration.
//!
//! A subset `S` meets part A in `T` and part B in `b` vertices. With
//! `b ≥ 1` the subgraph is Hamiltonian iff `R(T) ≤ b ≤ |T|` and `|S| ≥ 3`,
//! where `R(T)` is the number of runs of `T` along the 2-factor (a whole
//! cycle is one run). With `b = 0` it is Hamiltonian iff `T` is one whole
//! cycle. So `p(G)` only needs the joint law of `(|T|, R(T))`, which
//! factorises over the cycles.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::constructions::validate_cycle_type;
use crate::error::{precondition, Result};

/// Largest `n` accepted by [`p_exact_extremal`].
pub const P_EXACT_MAX_N: usize = 1000;

fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 1..=n {
        let next = &row[k - 1] * BigUint::from(n - k + 1) / BigUint::from(k);
        row.push(next);
    }
    row
}

/// `profile[t][r]` is the number of subsets of an `len`-cycle with `t`
/// vertices forming `r` runs.
///
/// For `0 < t < len` the count is `(len/r)·C(t−1, r−1)·C(len−t−1, r−1)`:
/// choose the run lengths and gap lengths as compositions, then place the
/// pattern in `len` rotations, each subset arising `r` times.
pub fn cycle_run_profile(len: usize) -> Vec<Vec<BigUint>> {
    let half = len / 2;
    let mut profile = vec![vec![BigUint::zero(); half + 2]; len + 1];
    profile[0][0] = BigUint::one();
    profile[len][1] = BigUint::one();
    let rows: Vec<Vec<BigUint>> = (0..len).map(binomial_row).collect();
    for t in 1..len {
        for r in 1..=t.min(len - t) {
            let ways = BigUint::from(len) * &rows[t - 1][r - 1] * &rows[len - t - 1][r - 1] / BigUint::from(r);
            profile[t][r] = ways;
        }
    }
    profile
}

fn convolve(acc: &[Vec<BigUint>], cyc: &[Vec<BigUint>]) -> Vec<Vec<BigUint>> {
    let (ta, tc) = (acc.len() - 1, cyc.len() - 1);
    let (ra, rc) = (acc[0].len() - 1, cyc[0].len() - 1);
    let mut out = vec![vec![BigUint::zero(); ra + rc + 1]; ta + tc + 1];
    for (t1, row1) in acc.iter().enumerate() {
        for (r1, x) in row1.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (t2, row2) in cyc.iter().enumerate() {
                for (r2, y) in row2.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                    out[t1 + t2][r1 + r2] += x * y;
                }
            }
        }
    }
    out
}

/// Exact `p(G)` for the extremal family member with the given cycle type.
pub fn p_exact_extremal(n: usize, cycle_lengths: &[usize]) -> Result<BigRational> {
    validate_cycle_type(n, cycle_lengths)?;
    if n > P_EXACT_MAX_N {
        return precondition(format!("n = {n} exceeds {P_EXACT_MAX_N}"));
    }
    let mut joint = vec![vec![BigUint::one()]];
    for &l in cycle_lengths {
        joint = convolve(&joint, &cycle_run_profile(l));
    }
    // prefix[b] = Σ_{j<b} C(n−1, j)
    let binom = binomial_row(n - 1);
    let mut prefix = vec![BigUint::zero()];
    for c in &binom {
        let next = prefix.last().unwrap() + c;
        prefix.push(next);
    }
    let mut valid = BigUint::from(cycle_lengths.len());
    for (t, row) in joint.iter().enumerate().skip(2) {
        let hi = t.min(n - 1);
        for (r, count) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let lo = r.max(1);
            if lo <= hi {
                valid += count * (&prefix[hi + 1] - &prefix[lo]);
            }
        }
    }
    Ok(BigRational::new(BigInt::from(valid), BigInt::from(BigUint::one() << (2 * n))))
}

/// Exact `p(K_{n,n}) = (C(2n, n) − 1 − n²)/4ⁿ`: a subset is cyclic iff it
/// meets both sides in the same number `s ≥ 2` of vertices.
pub fn p_exact_knn(n: usize) -> BigRational {
    let c = binomial_row(2 * n).swap_remove(n);
    let num = BigInt::from(c) - 1 - BigInt::from(n * n);
    BigRational::new(num, BigInt::from(BigUint::one() << (2 * n)))
}
