//! Invariant factors of an integer matrix via determinantal divisors.
//!
//! The gcd D_k of all k-by-k minors is an isomorphism invariant of the
//! cokernel, and the k-th invariant factor equals D_k / D_{k-1}. Enumerating
//! every minor is exponential in the matrix size, which is exactly what makes
//! this an independent check on a reduction-based normal form; keep inputs
//! below roughly eight rows and columns.

fn det_bareiss(k: usize, m: &mut [i128]) -> i128 {
    // Fraction-free Gaussian elimination; exact for integer matrices.
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k {
        if m[p * k + p] == 0 {
            let Some(swap) = (p + 1..k).find(|&r| m[r * k + p] != 0) else {
                return 0;
            };
            for c in 0..k {
                m.swap(p * k + c, swap * k + c);
            }
            sign = -sign;
        }
        for r in p + 1..k {
            for c in p + 1..k {
                m[r * k + c] = (m[r * k + c] * m[p * k + p] - m[r * k + p] * m[p * k + c]) / prev;
            }
            m[r * k + p] = 0;
        }
        prev = m[p * k + p];
    }
    sign * m[(k - 1) * k + (k - 1)]
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Iterate over k-subsets of 0..n in place; returns false when exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Nontrivial invariant factors d_1 | d_2 | ... of the cokernel of the row
/// span, including any 1s; the list length is the rank of the matrix.
pub fn invariant_factors(mat: &[Vec<i64>]) -> Vec<i64> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut factors = Vec::new();
    let mut d_prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        let mut rsel: Vec<usize> = (0..k).collect();
        'outer: loop {
            let mut csel: Vec<usize> = (0..k).collect();
            loop {
                let mut sub = vec![0i128; k * k];
                for (ri, &r) in rsel.iter().enumerate() {
                    for (ci, &c) in csel.iter().enumerate() {
                        sub[ri * k + ci] = mat[r][c] as i128;
                    }
                }
                g = gcd(g, det_bareiss(k, &mut sub));
                if g == 1 {
                    break 'outer;
                }
                if !next_combination(&mut csel, cols) {
                    break;
                }
            }
            if !next_combination(&mut rsel, rows) {
                break;
            }
        }
        if g == 0 {
            break;
        }
        factors.push((g / d_prev) as i64);
        d_prev = g;
    }
    factors
}
