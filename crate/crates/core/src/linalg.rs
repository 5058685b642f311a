//! Exact rank computations: fraction-free (Bareiss) elimination over ℚ and
//! plain Gaussian elimination over `GF(p)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{mul_mod, Field, FieldElement};

/// A sparse row: `(column, entry)` pairs.
pub type SparseRow = Vec<(usize, FieldElement)>;

/// Rank of a matrix given as sparse rows with `ncols` columns.
pub fn rank(field: Field, rows: &[SparseRow], ncols: usize) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    match field {
        Field::Rational => {
            let dense: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r, ncols)).collect();
            bareiss_rank(dense)
        }
        Field::Prime(p) => {
            let dense: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| {
                    let mut v = vec![0u64; ncols];
                    for (c, x) in r {
                        if let FieldElement::Modular { value, .. } = x {
                            v[*c] = *value;
                        }
                    }
                    v
                })
                .collect();
            modular_rank(dense, p)
        }
    }
}

/// Rank of a dense matrix of field elements.
pub fn rank_dense(field: Field, rows: &[Vec<FieldElement>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let sparse: Vec<SparseRow> = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect())
        .collect();
    rank(field, &sparse, ncols)
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &SparseRow, ncols: usize) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for (_, x) in row {
        let (_, d) = x.to_fraction();
        den = den.lcm(&d);
    }
    let mut v = vec![BigInt::zero(); ncols];
    for (c, x) in row {
        let (n, d) = x.to_fraction();
        v[*c] = n * (&den / d);
    }
    v
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let pivot = a[r][c].clone();
        for i in r + 1..nrows {
            let factor = a[i][c].clone();
            for j in c + 1..ncols {
                let v = &pivot * &a[i][j] - &factor * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

fn modular_rank(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let nrows = a.len();
    let ncols = a[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = Field::Prime(p).from_i64(a[r][c] as i64).inv().expect("nonzero pivot");
        let FieldElement::Modular { value: inv, .. } = inv else { unreachable!() };
        for i in r + 1..nrows {
            if a[i][c] == 0 {
                continue;
            }
            let f = mul_mod(a[i][c], inv, p);
            for j in c..ncols {
                let sub = mul_mod(f, a[r][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<FieldElement>> {
        rows.iter().map(|r| r.iter().map(|&x| Field::Rational.from_i64(x)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_dense(Field::Rational, &q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_dense(Field::Rational, &q(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank_dense(Field::Rational, &q(&[&[0, 0, 1], &[0, 0, 2], &[0, 1, 0]])), 2);
        assert_eq!(rank_dense(Field::Rational, &q(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn rational_entries() {
        let h = Field::Rational.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        let one = Field::Rational.one();
        let rows = vec![vec![h.clone(), one.clone()], vec![one.clone(), Field::Rational.from_i64(2)]];
        assert_eq!(rank_dense(Field::Rational, &rows), 1);
    }

    #[test]
    fn characteristic_dependence() {
        // det = 2: full rank over ℚ, rank 1 over GF(2)
        let m: &[&[i64]] = &[&[1, 1], &[1, -1]];
        assert_eq!(rank_dense(Field::Rational, &q(m)), 2);
        let f2: Vec<Vec<FieldElement>> = m.iter().map(|r| r.iter().map(|&x| Field::Prime(2).from_i64(x)).collect()).collect();
        assert_eq!(rank_dense(Field::Prime(2), &f2), 1);
    }

    #[test]
    fn bareiss_with_skipped_columns() {
        // third column is a combination; second column zero below the first pivot
        let m = q(&[&[2, 0, 4, 1], &[4, 0, 8, 3], &[1, 0, 2, 5], &[0, 0, 0, 7]]);
        assert_eq!(rank_dense(Field::Rational, &m), 2);
    }
}
