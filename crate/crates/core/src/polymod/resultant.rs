//! Exact resultants and discriminants of integer polynomials, by fraction-free
//! elimination on the Sylvester matrix. This route stays independent of the
//! closed-form discriminant so the two can check each other.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Resultant of f and g, coefficients lowest degree first, leading
/// coefficients nonzero.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = degree_of(f);
    let n = degree_of(g);
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (i, c) in f.iter().enumerate() {
            row[shift + (m - i)] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (i, c) in g.iter().enumerate() {
            row[shift + (n - i)] = c.clone();
        }
        rows.push(row);
    }
    bareiss_determinant(rows)
}

fn degree_of(f: &[BigInt]) -> usize {
    assert!(
        f.last().map(|c| !c.is_zero()).unwrap_or(false),
        "leading coefficient must be nonzero"
    );
    f.len() - 1
}

/// Bareiss fraction-free determinant; every division below is exact.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Discriminant of a monic integer polynomial of degree >= 1:
/// (-1)^(n(n-1)/2) Res(f, f').
pub fn discriminant_oracle(f: &[BigInt]) -> BigInt {
    let n = degree_of(f);
    assert!(n >= 1, "degree must be at least 1");
    assert!(f[n].is_one(), "polynomial must be monic");
    let deriv: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let res = resultant(f, &deriv);
    if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    }
}
