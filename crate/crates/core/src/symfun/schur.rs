use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::multipoly::MPoly;
use crate::partitions::Partition;
use crate::symfun::generalized::GenTable;

type Poly = MPoly<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurBasis {
    H,
    E,
}

/// `det(H_{lambda_i - i + j})` or `det(E_{lambda'_i - i + j})` over
/// `1 <= i, j <= n`, with `lambda` (or its conjugate) padded by zeros.
pub fn schur_det(lambda: &Partition, s: u32, n: usize, basis: SchurBasis) -> Result<Poly> {
    let rows = match basis {
        SchurBasis::H => lambda.clone(),
        SchurBasis::E => lambda.conjugate(),
    };
    if rows.len() > n {
        return Err(Error::InvalidParams {
            id: "schur".into(),
            reason: format!("{basis:?} determinant of {lambda} needs n >= {}", rows.len()),
        });
    }
    let kmax = rows.largest() as usize + n;
    let table = GenTable::new(n, s, kmax);
    let mut parts = rows.parts().to_vec();
    parts.resize(n, 0);
    let entry = |i: usize, j: usize| {
        let idx = parts[i] as i64 - i as i64 + j as i64;
        match basis {
            SchurBasis::H => table.h(idx),
            SchurBasis::E => table.e(idx),
        }
    };
    let matrix: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();
    Ok(determinant(&matrix, n))
}

/// Cofactor expansion along rows, memoized on the set of used columns.
pub fn determinant(matrix: &[Vec<Poly>], nvars: usize) -> Poly {
    let size = matrix.len();
    assert!(size < 64, "determinant too large for cofactor expansion");
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    minor(matrix, nvars, 0, &mut memo)
}

fn minor(matrix: &[Vec<Poly>], nvars: usize, used: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
    let row = used.count_ones() as usize;
    if row == matrix.len() {
        return MPoly::one(nvars);
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = MPoly::zero(nvars);
    let mut position = 0;
    for col in 0..matrix.len() {
        if used & (1 << col) != 0 {
            continue;
        }
        let a = &matrix[row][col];
        if !a.is_zero() {
            let sub = minor(matrix, nvars, used | (1 << col), memo);
            let term = a * &sub;
            acc.add_assign_poly(&if position % 2 == 1 { -&term } else { term });
        }
        position += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Both determinants and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurPair {
    pub via_h: Poly,
    pub via_e: Poly,
    pub equal: bool,
}

pub fn schur_pair(lambda: &Partition, s: u32, n: usize) -> Result<SchurPair> {
    let via_h = schur_det(lambda, s, n, SchurBasis::H)?;
    let via_e = schur_det(lambda, s, n, SchurBasis::E)?;
    let equal = via_h == via_e;
    Ok(SchurPair { via_h, via_e, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enum_partitions;
    use crate::symfun::classical::{classical, Classical};
    use crate::symfun::generalized::gen_complete;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn one_by_one() {
        for k in 1..=5 {
            assert_eq!(schur_det(&part(&[k]), 2, 1, SchurBasis::H).unwrap(), gen_complete(k, 2, 1));
        }
    }

    #[test]
    fn classical_jacobi_trudi() {
        let e2 = classical(Classical::Elementary, 2, 2);
        assert_eq!(schur_det(&part(&[1, 1]), 1, 2, SchurBasis::H).unwrap(), e2);
        // at s = 1 both determinants are the Schur polynomial
        for k in 1..=4 {
            for lambda in enum_partitions(k, &[]) {
                let n = lambda.len().max(lambda.conjugate().len());
                let pair = schur_pair(&lambda, 1, n).unwrap();
                assert!(pair.equal, "{lambda}");
            }
        }
    }

    #[test]
    fn too_few_variables() {
        assert!(schur_det(&part(&[1, 1, 1]), 2, 2, SchurBasis::H).is_err());
        assert!(schur_det(&part(&[3]), 2, 2, SchurBasis::E).is_err());
        assert!(schur_det(&part(&[3]), 2, 2, SchurBasis::H).is_ok());
    }

    #[test]
    fn s2_pair_is_computed() {
        let pair = schur_pair(&part(&[2, 1]), 2, 3).unwrap();
        assert!(pair.via_h.is_symmetric());
        assert!(pair.via_e.is_symmetric());
        assert!(pair.via_h.is_homogeneous_of(3));
    }
}
