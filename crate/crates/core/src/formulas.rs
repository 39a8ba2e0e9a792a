//! Exact counting formulas and recurrences for alternating words.
//!
//! Everything returns arbitrary-precision integers. Closed forms built from
//! binomial products divide at the end and assert the division is exact: an
//! inexact division can only mean a broken implementation, so it panics
//! rather than returning a silently wrong count.
//!
//! Notation used in the doc comments below: `N(k, len)` counts alternating
//! words of the given length over `{1, .., k}` (up-down and down-up are
//! equinumerous); `A`, `B` and `C` count up-down words avoiding 123, 132 and
//! 312 respectively; `binom` is the binomial coefficient.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::poly::{self, PolySeries};
use crate::words::{Direction, Pattern3};

/// Binomial coefficient `binom(n, r)`, zero whenever `r < 0`, `n < 0` or
/// `r > n`.
pub fn binomial(n: i64, r: i64) -> BigUint {
    if r < 0 || n < 0 || r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 1..=r {
        // exact at every step: acc holds binom(n, i-1) * i! / i! pattern
        acc = acc * BigUint::from(n - r + i) / BigUint::from(i);
    }
    acc
}

/// Fibonacci number with `F(1) = F(2) = 1`. Panics for `n = 0`.
pub fn fibonacci(n: u64) -> BigUint {
    assert!(n >= 1, "fibonacci is indexed from 1");
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 2..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    if n == 1 {
        a
    } else {
        b
    }
}

/// Divides and asserts exactness; an inexact division is an internal
/// consistency fault.
pub(crate) fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    assert!(!den.is_zero(), "internal fault: division by zero");
    let rem = &num % den;
    assert!(
        rem.is_zero(),
        "internal fault: inexact division ({num} is not a multiple of {den})"
    );
    num / den
}

/// `N(k, len)`: alternating words of length `len` over `{1, .., k}`, by the
/// peeling recurrence
///
/// ```text
/// N(k, len) = N(k-1, len)
///           + sum_{i=0}^{floor((len-1)/2)} N(k-1, 2i) * N(k, len-2i-1)
///           - [len even] * N(k-1, len-2)
/// ```
///
/// with `N(k, 0) = 1`, `N(k, 1) = k`, `N(2, len) = 1` for `len >= 2`, and the
/// one-letter alphabet contributing `1, 1, 0, 0, ...`.
pub fn count_alternating_rec(k: u32, len: usize) -> BigUint {
    assert!(k >= 1, "alphabet size must be at least 1");
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(k as usize);
    for kk in 1..=k as usize {
        let mut row: Vec<BigUint> = Vec::with_capacity(len + 1);
        for l in 0..=len {
            let value = if l == 0 {
                BigUint::one()
            } else if l == 1 {
                BigUint::from(kk)
            } else if kk == 1 {
                BigUint::zero()
            } else if kk == 2 {
                BigUint::one()
            } else {
                let prev = &rows[kk - 2];
                let mut v = prev[l].clone();
                for i in 0..=(l - 1) / 2 {
                    v += &prev[2 * i] * &row[l - 2 * i - 1];
                }
                if l % 2 == 0 {
                    v -= &prev[l - 2];
                }
                v
            };
            row.push(value);
        }
        rows.push(row);
    }
    rows.pop().expect("k >= 1").swap_remove(len)
}

/// `M(n, m)`: order ideals of the zigzag poset on `m` points times a chain of
/// `n` points, by the recurrence
///
/// ```text
/// M(n, m) = M(n-1, m) + sum_{i=0}^{floor((m-1)/2)} M(n-1, 2i) * M(n, m-2i-1)
/// ```
///
/// with `M(n, 0) = 1` and `M(0, m) = 1`. Satisfies
/// `N(k, len) = M(k-2, len)` for `k >= 2`, `len >= 2`.
pub fn count_ideals_zigzag_chain(m: usize, n: u32) -> BigUint {
    let mut prev: Vec<BigUint> = vec![BigUint::one(); m + 1];
    for _ in 1..=n {
        let mut row: Vec<BigUint> = Vec::with_capacity(m + 1);
        row.push(BigUint::one());
        for c in 1..=m {
            let mut v = prev[c].clone();
            for i in 0..=(c - 1) / 2 {
                v += &prev[2 * i] * &row[c - 2 * i - 1];
            }
            row.push(v);
        }
        prev = row;
    }
    prev.swap_remove(m)
}

/// `A(k, len)`: 123-avoiding up-down words. `A(k, 0) = 1`, `A(k, 1) = k`, and
/// for `len >= 2`:
///
/// ```text
/// A(k, 2i)   = binom(i+k-2, i) * binom(i+k-1, i) / (i+1)
/// A(k, 2i+1) = (i+2k-2) * binom(i+k-2, i) * binom(i+k-1, i) / ((i+1)(i+2))
/// ```
///
/// The even case is a Narayana number read along a diagonal.
pub fn count_123_updown(k: u32, len: usize) -> BigUint {
    assert!(k >= 1, "alphabet size must be at least 1");
    if len == 0 {
        return BigUint::one();
    }
    if len == 1 {
        return BigUint::from(k);
    }
    let k = k as i64;
    let i = (len / 2) as i64;
    let pair = binomial(i + k - 2, i) * binomial(i + k - 1, i);
    if len.is_multiple_of(2) {
        exact_div(pair, &BigUint::from(i as u64 + 1))
    } else {
        let num = BigUint::from((i + 2 * k - 2) as u64) * pair;
        exact_div(
            num,
            &(BigUint::from(i as u64 + 1) * BigUint::from(i as u64 + 2)),
        )
    }
}

/// `A_j(k, 2i)`: 123-avoiding up-down words of even length `2i` whose last
/// letter is `j`, by the closed form
///
/// ```text
/// A_j(k, 2i) = (j-1) * binom(i+k-2, i) * binom(i+k-j-1, i-1) / (k-1)
/// ```
///
/// which at the boundary `j = k` collapses to `binom(i+k-2, i)`. Panics
/// unless `2 <= j <= k` and `i >= 1`.
pub fn count_123_updown_ending(k: u32, i: usize, j: u32) -> BigUint {
    assert!(
        k >= 2,
        "need at least two letters for an even-length up-down word"
    );
    assert!(i >= 1, "the empty word has no last letter");
    assert!(2 <= j && j <= k, "last letter {j} outside 2..={k}");
    let (k, j, i) = (k as i64, j as i64, i as i64);
    let num =
        BigUint::from((j - 1) as u64) * binomial(i + k - 2, i) * binomial(i + k - j - 1, i - 1);
    exact_div(num, &BigUint::from((k - 1) as u64))
}

/// Same count as [`count_123_updown_ending`] but along the case-split
/// recurrence
///
/// ```text
/// A_j(k, 2i) = 1 + sum_{i'=1}^{i} A_{j-1}(k-1, 2i')
///                + sum_{i'=1}^{i-1} sum_{j'=j+1}^{k} A_{j'}(k, 2i')
/// ```
///
/// taking `A_j = 0` when `j < 2` or `j > k`. An independent route used to
/// cross-check the closed form.
pub fn count_123_updown_ending_rec(k: u32, i: usize, j: u32) -> BigUint {
    assert!(
        k >= 2 && i >= 1 && 2 <= j && j <= k,
        "arguments outside the counted family"
    );
    fn rec(
        k: u32,
        i: usize,
        j: u32,
        memo: &mut std::collections::HashMap<(u32, usize, u32), BigUint>,
    ) -> BigUint {
        if j < 2 || j > k {
            return BigUint::zero();
        }
        if let Some(v) = memo.get(&(k, i, j)) {
            return v.clone();
        }
        let mut acc = BigUint::one();
        for ip in 1..=i {
            acc += rec(k - 1, ip, j - 1, memo);
        }
        for ip in 1..i {
            for jp in (j + 1)..=k {
                acc += rec(k, ip, jp, memo);
            }
        }
        memo.insert((k, i, j), acc.clone());
        acc
    }
    rec(k, i, j, &mut std::collections::HashMap::new())
}

/// `B(k, len)`: 132-avoiding up-down words. Even lengths coincide with the
/// 123 count; odd lengths `2i+1` extend every even word by one of its last
/// letter's choices:
///
/// ```text
/// B(k, 2i+1) = sum_{j=1}^{k-1} j * B_j(k, 2i)
/// ```
///
/// There is no product closed form for the odd case (see
/// [`explicit_132_odd_polynomial`] for the fixed-`k` polynomials).
pub fn count_132_updown(k: u32, len: usize) -> BigUint {
    assert!(k >= 1, "alphabet size must be at least 1");
    if len == 0 {
        return BigUint::one();
    }
    if len == 1 {
        return BigUint::from(k);
    }
    if len.is_multiple_of(2) {
        return count_123_updown(k, len);
    }
    let i = len / 2;
    let mut acc = BigUint::zero();
    for j in 1..k {
        acc += BigUint::from(j) * count_132_secondlast(k, i, j);
    }
    acc
}

/// `B_j(k, 2i)`: 132-avoiding up-down words of even length `2i` whose
/// next-to-last letter is `j`. Shift-invariant in `j`:
/// `B_j(k, 2i) = B_1(k-j+1, 2i)` with
///
/// ```text
/// B_1(k, 2i) = (i+2k-3) * binom(i+k-3, i-1) * binom(i+k-2, i) / ((i+1)(k-1))
/// ```
///
/// (equivalently `B(k, 2i) - B(k-1, 2i)`). Panics unless `1 <= j <= k-1` and
/// `i >= 1`.
pub fn count_132_secondlast(k: u32, i: usize, j: u32) -> BigUint {
    assert!(
        k >= 2,
        "need at least two letters for an even-length up-down word"
    );
    assert!(i >= 1, "the empty word has no next-to-last letter");
    assert!(
        1 <= j && j < k,
        "next-to-last letter {j} outside 1..={}",
        k - 1
    );
    let m = (k - j + 1) as i64;
    let i = i as i64;
    let num =
        BigUint::from((i + 2 * m - 3) as u64) * binomial(i + m - 3, i - 1) * binomial(i + m - 2, i);
    exact_div(
        num,
        &(BigUint::from(i as u64 + 1) * BigUint::from((m - 1) as u64)),
    )
}

/// The polynomial form of the odd 132 count for small fixed alphabets:
/// `B(k, 2i+1)` as a polynomial in `i`, available for `k = 3, 4, 5, 6`.
/// Returns `None` for other `k`.
pub fn explicit_132_odd_polynomial(k: u32, i: u64) -> Option<BigUint> {
    let i = BigInt::from(i);
    let eval = |coeffs: &[i64], den: u64| -> BigUint {
        // Horner evaluation; the numerator is provably nonnegative
        let mut acc = BigInt::zero();
        for &c in coeffs {
            acc = acc * &i + BigInt::from(c);
        }
        let num = acc.to_biguint().expect("polynomial value is nonnegative");
        exact_div(num, &BigUint::from(den))
    };
    match k {
        3 => Some(eval(&[1, 3, 4], 2)),
        4 => Some(eval(&[1, 8, 29, 46, 36], 12)),
        5 => Some(eval(&[1, 15, 103, 381, 832, 972, 576], 144)),
        6 => Some(eval(
            &[1, 24, 266, 1704, 6929, 18096, 30244, 29136, 14400],
            2880,
        )),
        _ => None,
    }
}

/// `C(k, len)`: 312-avoiding up-down words — equal to the 123 count for every
/// length.
pub fn count_312_updown(k: u32, len: usize) -> BigUint {
    count_123_updown(k, len)
}

/// The last-letter summation route to the even 312 count:
///
/// ```text
/// C(k, 2i) = sum_{j=2}^{k} (i-3+2j) * binom(i+j-3, i-1) * binom(i+j-2, i-1)
///                          / (i(i+1))
/// ```
///
/// where the `j`-th term is the count of words ending with `j` (for `i >= 2`
/// it equals `C(j, 2i-1)`). An independent route used to cross-check
/// [`count_312_updown`].
pub fn count_312_updown_even_sum(k: u32, i: usize) -> BigUint {
    assert!(k >= 1 && i >= 1, "even sum defined for i >= 1");
    let i = i as i64;
    let den = BigUint::from(i as u64) * BigUint::from(i as u64 + 1);
    let mut acc = BigUint::zero();
    for j in 2..=k as i64 {
        let num = BigUint::from((i - 3 + 2 * j) as u64)
            * binomial(i + j - 3, i - 1)
            * binomial(i + j - 2, i - 1);
        acc += exact_div(num, &den);
    }
    acc
}

/// 321-avoiding up-down words. `1, k, binom(k, 2)` for lengths 0, 1, 2; odd
/// lengths coincide with the 123 count; even lengths `2i >= 4` obey
///
/// ```text
/// (i(i+2k-3)(i+2k-2) + 2(k-2)(k-1)) * binom(i+k-2, i) * binom(i+k-3, i)
///   / ((i+1)(i+2)(k-2)(k-1))
/// ```
///
/// Alphabets with fewer than three letters cannot contain 321 at all, so they
/// fall back to the unrestricted count.
pub fn count_321_updown(k: u32, len: usize) -> BigUint {
    assert!(k >= 1, "alphabet size must be at least 1");
    match len {
        0 => return BigUint::one(),
        1 => return BigUint::from(k),
        2 => return binomial(k as i64, 2),
        _ => {}
    }
    if k == 1 {
        return BigUint::zero();
    }
    if k == 2 {
        return BigUint::one();
    }
    if len % 2 == 1 {
        return count_123_updown(k, len);
    }
    let (k, i) = (k as i64, (len / 2) as i64);
    let head = i * (i + 2 * k - 3) * (i + 2 * k - 2) + 2 * (k - 2) * (k - 1);
    let num = BigUint::from(head as u64) * binomial(i + k - 2, i) * binomial(i + k - 3, i);
    let den = BigUint::from(((i + 1) * (i + 2)) as u64) * BigUint::from(((k - 2) * (k - 1)) as u64);
    exact_div(num, &den)
}

/// Pattern-avoiding alternating word count for any of the six length-3
/// patterns and either direction.
///
/// Down-up counting goes through complementation (which maps down-up words to
/// up-down words and the pattern to its complement). For up-down words the
/// Wilf classes are: odd lengths `123 = 312 = 213 = 321` and `132 = 231`;
/// even lengths `123 = 132 = 312 = 213 = 231` with `321` on its own.
pub fn count_avoiding(k: u32, len: usize, pattern: Pattern3, dir: Direction) -> BigUint {
    if dir == Direction::DownUp {
        return count_avoiding(k, len, pattern.complement(), Direction::UpDown);
    }
    if len <= 1 {
        return count_123_updown(k, len);
    }
    if len % 2 == 1 {
        match pattern {
            Pattern3::P123 | Pattern3::P312 | Pattern3::P213 | Pattern3::P321 => {
                count_123_updown(k, len)
            }
            Pattern3::P132 | Pattern3::P231 => count_132_updown(k, len),
        }
    } else {
        match pattern {
            Pattern3::P321 => count_321_updown(k, len),
            _ => count_123_updown(k, len),
        }
    }
}

/// The `n`-th Narayana polynomial
/// `N_n(x) = sum_{i=0}^{n-1} binom(n, i) binom(n-1, i) x^i / (i+1)` with
/// `N_0 = 1`.
pub fn narayana_poly(n: usize) -> PolySeries {
    if n == 0 {
        return PolySeries::polynomial(vec![BigInt::one()]);
    }
    let n = n as i64;
    let coeffs = (0..n)
        .map(|i| {
            let c = exact_div(
                binomial(n, i) * binomial(n - 1, i),
                &BigUint::from(i as u64 + 1),
            );
            BigInt::from(c)
        })
        .collect();
    PolySeries::polynomial(coeffs)
}

/// Coefficients of `x^{2j}` in `(1-x^2)^{-r}`, i.e. `binom(j+r-1, r-1)`.
fn reciprocal_pow_coeff(r: i64, j: i64) -> BigUint {
    binomial(j + r - 1, r - 1)
}

/// First `terms` coefficients of the even-length generating function
///
/// ```text
/// sum_{i>=0} A(k, 2i) x^i = N_{k-2}(x) / (1-x)^{2k-3}
/// ```
///
/// returned as a series truncated at `x^terms`. Requires `k >= 2`.
pub fn gf_even_series(k: u32, terms: usize) -> PolySeries {
    assert!(k >= 2, "the even-length series needs k >= 2");
    assert!(terms >= 1, "request at least one coefficient");
    let nara = narayana_poly(k as usize - 2);
    let r = 2 * k as i64 - 3;
    let coeffs = (0..terms as i64)
        .map(|t| {
            let mut acc = BigInt::zero();
            for (d, c) in nara.coeffs().iter().enumerate() {
                let d = d as i64;
                if d > t {
                    break;
                }
                acc += c * BigInt::from(reciprocal_pow_coeff(r, t - d));
            }
            acc
        })
        .collect();
    PolySeries::series(coeffs, 0, terms)
}

/// First `terms` coefficients of the all-lengths generating function
///
/// ```text
/// sum_{len>=0} A(k, len) x^len
///   = x + ((1+x) N_{k-2}(x^2) - (1-x^2)^2 N_{k-3}(x^2)) / (x (1-x^2)^{2k-3})
/// ```
///
/// returned as a series truncated at `x^terms`. Requires `k >= 3`.
pub fn gf_full_series(k: u32, terms: usize) -> PolySeries {
    assert!(k >= 3, "the combined series needs k >= 3");
    assert!(terms >= 1, "request at least one coefficient");
    let one_plus_x = [BigInt::one(), BigInt::one()];
    let sq = {
        // (1 - x^2)^2 = 1 - 2x^2 + x^4
        let mut v = vec![BigInt::zero(); 5];
        v[0] = BigInt::one();
        v[2] = BigInt::from(-2);
        v[4] = BigInt::one();
        v
    };
    let n2 = poly::spread_square(narayana_poly(k as usize - 2).coeffs());
    let n3 = poly::spread_square(narayana_poly(k as usize - 3).coeffs());
    let numerator = poly::sub(&poly::mul(&one_plus_x, &n2), &poly::mul(&sq, &n3));
    assert!(
        numerator.first().is_none_or(Zero::is_zero),
        "internal fault: the combined numerator must vanish at x = 0"
    );
    // divide by x, then expand against (1-x^2)^{-(2k-3)}
    let shifted: Vec<BigInt> = numerator.into_iter().skip(1).collect();
    let r = 2 * k as i64 - 3;
    let mut coeffs: Vec<BigInt> = (0..terms)
        .map(|t| {
            let mut acc = BigInt::zero();
            for (d, c) in shifted.iter().enumerate() {
                if d > t || c.is_zero() {
                    continue;
                }
                let rest = t - d;
                if rest % 2 == 0 {
                    acc += c * BigInt::from(reciprocal_pow_coeff(r, (rest / 2) as i64));
                }
            }
            acc
        })
        .collect();
    if terms > 1 {
        coeffs[1] += BigInt::one(); // the isolated x term
    }
    PolySeries::series(coeffs, 0, terms)
}

/// Checks the odd-from-even identity `A(k, 2i-1) = A(k, 2i) - A(k-1, 2i)` on
/// exactly computed values (`k >= 2`, `i >= 2`; it fails at `i = 1`, where
/// the left side counts single letters).
pub fn gf_odd_identity_check(k: u32, i: usize) -> bool {
    assert!(k >= 2 && i >= 2, "identity range is k >= 2, i >= 2");
    let lhs = count_123_updown(k, 2 * i - 1);
    let rhs = count_123_updown(k, 2 * i) - count_123_updown(k - 1, 2 * i);
    lhs == rhs
}
