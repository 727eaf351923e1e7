//! Test-only oracles, written independently of the library's code paths.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::Ratio;

pub type Big = Ratio<BigInt>;

/// All jump vectors with `r_1 = 1`, every `r_i >= 1`, and `sum r_i <= max_sum`.
pub fn jump_vectors(max_sum: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, remaining: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        for next in 1..=remaining {
            prefix.push(next);
            extend(prefix, remaining - next, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if max_sum >= 1 {
        extend(&mut vec![1], max_sum - 1, &mut out);
    }
    out
}

/// Krcatovich inequality evaluated by plain summation over 1-based indices.
pub fn krcatovich_ok(r: &[u64]) -> bool {
    let k = r.len();
    (2..=k).all(|j| {
        let lhs: u64 = (2..=j).map(|i| r[i - 1]).sum();
        let rhs: u64 = (k - j + 2..=k).map(|i| r[i - 1]).sum();
        lhs <= rhs
    })
}

/// Even-`k` admissible vectors with `sum r_i <= max_sum`.
pub fn admissible_even(max_sum: u64) -> Vec<Vec<u64>> {
    jump_vectors(max_sum).into_iter().filter(|r| r.len() % 2 == 0 && krcatovich_ok(r)).collect()
}

/// Dense coefficients `c_0..=c_g` of the staircase polynomial encoded by `r`,
/// built by walking the exponents `n_k, n_{k-1}, ..., n_0` from the top.
/// The gap below `n_{k+1-2i}` comes from `r_i`; the gap above it from the
/// mirror image `r_{k+1-i}`.
pub fn dense_coefficients(r: &[u64]) -> Vec<i64> {
    let k = r.len();
    let g: u64 = r.iter().sum();
    let mut exps = vec![g as i64];
    let mut pos = g as i64;
    for i in 1..=k {
        let gap = if i % 2 == 1 { r[i.div_ceil(2) - 1] } else { r[k - i / 2] };
        pos -= gap as i64;
        exps.push(pos);
    }
    assert_eq!(pos, 0);
    let mut c = vec![0i64; g as usize + 1];
    for (idx, e) in exps.iter().enumerate() {
        c[*e as usize] = if idx % 2 == 0 { 1 } else { -1 };
    }
    c
}

/// Torsion coefficients from the recursion `t_{j-1} - t_j = sum_{i >= j} c_i`,
/// with `t_g = 0`.
pub fn torsion_by_recursion(c: &[i64]) -> Vec<u64> {
    let g = c.len() - 1;
    let mut t = vec![0i64; g + 1];
    for j in (1..=g).rev() {
        let tail: i64 = c[j..].iter().sum();
        t[j - 1] = t[j] + tail;
    }
    t.into_iter().map(|v| u64::try_from(v).expect("nonnegative")).collect()
}

/// `(n - 2i)^2 / (4n) - 1/4 - 2 t` term by term in big rationals.
pub fn d_oracle(n: u64, i: u64, t: u64) -> Big {
    let big = |v: i64| Big::from_integer(BigInt::from(v));
    let (n, i, t) = (n as i64, i as i64, t as i64);
    big((n - 2 * i).pow(2)) / big(4 * n) - big(1) / big(4) - big(2) * big(t)
}

pub fn big_from(q: &Ratio<i64>) -> Big {
    Big::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// Weak threshold from the 4d bound, compared in big rationals.
pub fn is_weak(d: &Big, n: u64) -> bool {
    let four_d = d * Big::from_integer(BigInt::from(4));
    let bound = if n % 2 == 1 {
        Big::from_integer(BigInt::from(1)) - Big::new(BigInt::from(1), BigInt::from(n))
    } else {
        Big::from_integer(BigInt::from(1))
    };
    four_d >= bound
}

#[test]
fn enumerator_counts() {
    // Compositions of s with first part 1: 2^(s-2) for s >= 2, plus (1).
    let all = jump_vectors(6);
    assert_eq!(all.len(), 1 + 1 + 2 + 4 + 8 + 16);
    assert!(all.iter().all(|r| r[0] == 1 && r.iter().sum::<u64>() <= 6));
}

#[test]
fn dense_coefficients_of_known_knots() {
    assert_eq!(dense_coefficients(&[1, 1, 1, 1, 1, 2]), [1, -1, 1, -1, 1, 0, -1, 1]);
    assert_eq!(torsion_by_recursion(&dense_coefficients(&[1, 1, 1, 1, 1, 2])), [3, 3, 2, 2, 1, 1, 1, 0]);
    assert_eq!(dense_coefficients(&[1]), [-1, 1]);
}
