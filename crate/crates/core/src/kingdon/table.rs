//! Structure constants of Kingdon algebras on the standard monomial basis.

use crate::exact::Scalar;

pub const BASIS_3: [&str; 8] = ["1", "i", "j", "k", "ij", "jk", "ki", "ω"];
const GENERATORS: [&str; 3] = ["i", "j", "k"];

const QI: u8 = 1;
const QJ: u8 = 2;
const QK: u8 = 4;

/// `(sign, mask of Q factors, target basis index)` for each product of two
/// non-unit basis elements, rows and columns in the order i..ω.
#[rustfmt::skip]
const SIGNS: [[(i8, u8, usize); 7]; 7] = [
    // i
    [(1, QI, 0), (1, 0, 4), (-1, 0, 6), (1, QI, 2), (-1, 0, 7), (-1, QI, 3), (-1, QI, 5)],
    // j
    [(-1, 0, 4), (1, QJ, 0), (1, 0, 5), (-1, QJ, 1), (1, QJ, 3), (-1, 0, 7), (-1, QJ, 6)],
    // k
    [(1, 0, 6), (-1, 0, 5), (1, QK, 0), (-1, 0, 7), (-1, QK, 2), (1, QK, 1), (-1, QK, 4)],
    // ij
    [(-1, QI, 2), (1, QJ, 1), (1, 0, 7), (-1, QI | QJ, 0), (1, QJ, 6), (-1, QI, 5), (-1, QI | QJ, 3)],
    // jk
    [(1, 0, 7), (-1, QJ, 3), (1, QK, 2), (-1, QJ, 6), (-1, QJ | QK, 0), (1, QK, 4), (-1, QJ | QK, 1)],
    // ki
    [(1, QI, 3), (1, 0, 7), (-1, QK, 1), (1, QI, 5), (-1, QK, 4), (-1, QK | QI, 0), (-1, QK | QI, 2)],
    // ω
    [(1, QI, 5), (1, QJ, 6), (1, QK, 4), (1, QI | QJ, 3), (1, QJ | QK, 1), (1, QK | QI, 2), (1, QI | QJ | QK, 0)],
];

/// The eight-dimensional table with `Q(i), Q(j), Q(k)` substituted.
pub fn table_3(q: &[Scalar; 3]) -> Vec<Vec<Vec<Scalar>>> {
    let mut table = vec![vec![vec![Scalar::zero(); 8]; 8]; 8];
    for (a, row) in table.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            if a == 0 || b == 0 {
                entry[a.max(b)] = Scalar::one();
                continue;
            }
            let (sign, mask, target) = SIGNS[a - 1][b - 1];
            let mut c = Scalar::from_int(sign as i64);
            for (h, bit) in [QI, QJ, QK].into_iter().enumerate() {
                if mask & bit != 0 {
                    c *= &q[h];
                }
            }
            entry[target] = c;
        }
    }
    table
}

/// Basis names of the Clifford algebra on `n <= 2` generators, indexed by
/// the bitmask of generators present.
pub fn clifford_basis(n: usize) -> Vec<String> {
    (0..1usize << n)
        .map(|mask| {
            if mask == 0 {
                "1".to_string()
            } else {
                (0..n).filter(|h| mask >> h & 1 == 1).map(|h| GENERATORS[h]).collect()
            }
        })
        .collect()
}

/// Clifford algebra on orthogonal generators with `e_h² = q[h]`, in the
/// blade basis indexed by bitmask.
pub fn clifford_table(q: &[Scalar]) -> Vec<Vec<Vec<Scalar>>> {
    let n = q.len();
    let dim = 1usize << n;
    let mut table = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            // sign from moving each generator of b left past the higher ones of a
            let swaps: u32 = (0..n)
                .filter(|h| b >> h & 1 == 1)
                .map(|h| (a >> (h + 1)).count_ones())
                .sum();
            let mut c = if swaps.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
            for (h, qh) in q.iter().enumerate() {
                if (a & b) >> h & 1 == 1 {
                    c *= qh;
                }
            }
            table[a][b][a ^ b] = c;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_quaternions() {
        let m1 = -Scalar::one();
        let t = clifford_table(&[m1.clone(), m1.clone()]);
        assert_eq!(clifford_basis(2), ["1", "i", "j", "ij"]);
        // ij·ij = -1, j·i = -ij, (ij)·j = -i
        assert_eq!(t[3][3][0], m1);
        assert_eq!(t[2][1][3], m1);
        assert_eq!(t[3][2][1], m1);
    }

    #[test]
    fn table_3_is_unital() {
        let t = table_3(&[Scalar::from_int(2), Scalar::zero(), -Scalar::one()]);
        for b in 0..8 {
            for c in 0..8 {
                let e = if b == c { Scalar::one() } else { Scalar::zero() };
                assert_eq!(t[0][b][c], e);
                assert_eq!(t[b][0][c], e);
            }
        }
    }
}
