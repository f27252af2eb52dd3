//! Exact integer sequences used by every closed form in the crate.
//!
//! * [`stirling2`]: Stirling numbers of the second kind `{n brace k}`.
//! * [`eulerian_b`]: Eulerian numbers of type B, written `S(n, k)` here.
//! * [`binomial`] and [`factorial`].
//!
//! `S(n, k)` is indexed with `k` running over `1..=n+1`, the same range used
//! by the numerator sum of the Legendre chi closed form
//! `chi_{-n}(z) = sum_k S(n, k) z^(2k-1) / (1 - z^2)^(n+1)`.
//! OEIS A060187 lists the same triangle with rows starting at 1, so OEIS row
//! `n + 1` is row `n` here.
//!
//! Full rows are memoized on first use and never evicted. The caches are
//! behind `RwLock`s: two threads racing to extend a cache may both compute the
//! missing rows, and whichever writes last wins with identical data.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

type Row = Arc<[BigInt]>;

static STIRLING2_ROWS: RwLock<Vec<Row>> = RwLock::new(Vec::new());
static EULERIAN_B_ROWS: RwLock<Vec<Row>> = RwLock::new(Vec::new());

/// Row `n` of the Stirling numbers of the second kind, indexed `k = 0..=n`.
pub fn stirling2_row(n: usize) -> Row {
    if let Some(row) = STIRLING2_ROWS.read().unwrap().get(n) {
        return row.clone();
    }

    let mut rows: Vec<Row> = STIRLING2_ROWS.read().unwrap().clone();
    if rows.is_empty() {
        rows.push(Arc::from(vec![BigInt::one()]));
    }
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let m = prev.len(); // next row index
        let mut next = vec![BigInt::zero(); m + 1];
        // {m brace k} = k {m-1 brace k} + {m-1 brace k-1}
        for k in 1..=m {
            let mut v = if k < prev.len() {
                &prev[k] * BigInt::from(k)
            } else {
                BigInt::zero()
            };
            v += &prev[k - 1];
            next[k] = v;
        }
        rows.push(Arc::from(next));
    }
    let row = rows[n].clone();

    let mut cache = STIRLING2_ROWS.write().unwrap();
    if cache.len() < rows.len() {
        *cache = rows;
    }
    row
}

/// Stirling number of the second kind `{n brace k}`; zero when `k > n`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_row(n)[k].clone()
}

/// Row `n` of the type-B Eulerian numbers: element `k - 1` holds `S(n, k)`
/// for `k = 1..=n+1`.
pub fn eulerian_b_row(n: usize) -> Row {
    if let Some(row) = EULERIAN_B_ROWS.read().unwrap().get(n) {
        return row.clone();
    }

    let mut rows: Vec<Row> = EULERIAN_B_ROWS.read().unwrap().clone();
    while rows.len() <= n {
        let m = rows.len();
        let row: Vec<BigInt> = (1..=m + 1).map(|k| eulerian_b_sum(m, k)).collect();
        rows.push(Arc::from(row));
    }
    let row = rows[n].clone();

    let mut cache = EULERIAN_B_ROWS.write().unwrap();
    if cache.len() < rows.len() {
        *cache = rows;
    }
    row
}

/// `S(n, k) = sum_{j=1..k} (-1)^(k-j) C(n+1, k-j) (2j-1)^n`
fn eulerian_b_sum(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 1..=k {
        let term = binomial(n as u64 + 1, (k - j) as i64) * num_traits::pow(BigInt::from(2 * j - 1), n);
        if (k - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Eulerian number of type B `S(n, k)` for `1 <= k <= n + 1`.
///
/// # Panics
///
/// Panics if `k` is outside `1..=n+1`.
pub fn eulerian_b(n: usize, k: usize) -> BigInt {
    assert!(
        (1..=n + 1).contains(&k),
        "eulerian_b: k = {k} outside 1..={}",
        n + 1
    );
    eulerian_b_row(n)[k - 1].clone()
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i + 1) afterwards
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts set partitions of `{0..n}` into exactly `k` blocks by enumerating
    /// restricted growth strings.
    fn brute_force_partitions(n: usize, k: usize) -> u64 {
        fn go(pos: usize, n: usize, max_block: usize, k: usize) -> u64 {
            if pos == n {
                return u64::from(max_block == k);
            }
            let mut total = 0;
            // element `pos` joins an existing block or opens block `max_block`
            for b in 0..=max_block {
                let next_max = if b == max_block { max_block + 1 } else { max_block };
                if next_max <= k {
                    total += go(pos + 1, n, next_max, k);
                }
            }
            total
        }
        go(0, n, 0, k)
    }

    #[test]
    fn stirling2_small_values() {
        assert_eq!(stirling2(3, 3), BigInt::from(1));
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(5, 0), BigInt::from(0));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(4, 7), BigInt::from(0));
    }

    #[test]
    fn stirling2_matches_partition_enumeration() {
        for n in 0..=8 {
            for k in 0..=n + 1 {
                assert_eq!(
                    stirling2(n, k),
                    BigInt::from(brute_force_partitions(n, k)),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn stirling2_recurrence_holds() {
        for n in 0..30 {
            for k in 1..=n + 1 {
                let lhs = stirling2(n + 1, k);
                let rhs = BigInt::from(k) * stirling2(n, k) + stirling2(n, k - 1);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn eulerian_b_table_rows() {
        let expected: [&[i64]; 5] = [
            &[1],
            &[1, 1],
            &[1, 6, 1],
            &[1, 23, 23, 1],
            &[1, 76, 230, 76, 1],
        ];
        for (n, row) in expected.iter().enumerate() {
            let got: Vec<BigInt> = eulerian_b_row(n).to_vec();
            let want: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(got, want, "row {n}");
        }
        assert_eq!(eulerian_b(2, 2), BigInt::from(6));
        assert_eq!(eulerian_b(4, 3), BigInt::from(230));
        assert_eq!(eulerian_b(5, 1), BigInt::from(1));
    }

    /// Coefficients of `(1 - t)^(n+1) * sum_j (2j+1)^n t^j`, truncated to
    /// degree `n`: the generating-function definition of the same triangle.
    fn eulerian_b_generating(n: usize) -> Vec<BigInt> {
        let series: Vec<BigInt> = (0..=n)
            .map(|j| num_traits::pow(BigInt::from(2 * j + 1), n))
            .collect();
        (0..=n)
            .map(|d| {
                (0..=d)
                    .map(|i| {
                        let c = binomial(n as u64 + 1, i as i64);
                        let c = if i % 2 == 0 { c } else { -c };
                        c * &series[d - i]
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn eulerian_b_matches_generating_function() {
        for n in 0..=20 {
            assert_eq!(eulerian_b_row(n).to_vec(), eulerian_b_generating(n), "n={n}");
        }
    }

    #[test]
    fn eulerian_b_row_sum_and_symmetry() {
        for n in 0..=20 {
            let row = eulerian_b_row(n);
            let sum: BigInt = row.iter().sum();
            assert_eq!(sum, num_traits::pow(BigInt::from(2), n) * factorial(n as u64));
            for k in 1..=n + 1 {
                assert_eq!(eulerian_b(n, k), eulerian_b(n, n + 2 - k));
            }
        }
    }

    #[test]
    #[should_panic]
    fn eulerian_b_rejects_zero_index() {
        eulerian_b(3, 0);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(9, 0), BigInt::from(1));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(binomial(4, -1), BigInt::from(0));
        for n in 1..40u64 {
            for k in 1..n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn large_orders_do_not_overflow() {
        let s = stirling2(64, 32);
        assert!(s > BigInt::from(u128::MAX));
        let row = eulerian_b_row(64);
        assert_eq!(row.len(), 65);
        assert_eq!(
            row.iter().sum::<BigInt>(),
            num_traits::pow(BigInt::from(2), 64) * factorial(64)
        );
    }

    #[test]
    fn concurrent_first_use_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || (stirling2_row(40 + t).to_vec(), eulerian_b_row(30 + t).to_vec())))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let (s, e) = h.join().unwrap();
            assert_eq!(s, stirling2_row(40 + t).to_vec());
            assert_eq!(e, eulerian_b_row(30 + t).to_vec());
        }
    }
}
