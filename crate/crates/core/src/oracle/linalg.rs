//! Sparse Gaussian elimination over `F_p`.

use std::collections::{BTreeMap, HashMap};

use crate::field::PrimeField;

/// A sparse vector: `(index, nonzero coefficient)` sorted by index.
pub type SparseVec = Vec<(usize, u32)>;

/// Rank of the span of `rows`.
pub fn rank(field: PrimeField, rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut echelon = Echelon::new(field);
    rows.into_iter().filter(|r| echelon.insert(r.clone())).count()
}

/// Row echelon form keyed by pivot column; pivots are normalized to 1.
pub struct Echelon {
    field: PrimeField,
    pivots: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon {
            field,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let f = self.field;
        let mut acc: BTreeMap<usize, u32> = row.into_iter().filter(|(_, c)| *c != 0).collect();
        loop {
            let Some((&col, &c)) = acc.iter().next() else {
                return false;
            };
            match self.pivots.get(&col) {
                Some(p) => {
                    let factor = f.neg(c);
                    for &(j, v) in p {
                        let e = acc.entry(j).or_insert(0);
                        *e = f.add(*e, f.mul(factor, v));
                        if *e == 0 {
                            acc.remove(&j);
                        }
                    }
                }
                None => {
                    let inv = f.inv(c);
                    let row: SparseVec = acc.into_iter().map(|(j, v)| (j, f.mul(v, inv))).collect();
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_rank(p: u64, mut m: Vec<Vec<i64>>) -> usize {
        let p = p as i64;
        let mut rank = 0;
        let cols = m.first().map_or(0, |r| r.len());
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][c].rem_euclid(p) != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = (1..p).find(|x| (x * m[rank][c]).rem_euclid(p) == 1).unwrap();
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank {
                    let k = (row[c] * inv).rem_euclid(p);
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = (*x - k * y).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn agrees_with_dense_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in [2u64, 3, 5, 101] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..50 {
                let (r, c) = (rng.gen_range(1..8), rng.gen_range(1..8));
                let m: Vec<Vec<i64>> = (0..r)
                    .map(|_| {
                        (0..c)
                            .map(|_| {
                                if rng.gen_bool(0.4) {
                                    rng.gen_range(0..p as i64)
                                } else {
                                    0
                                }
                            })
                            .collect()
                    })
                    .collect();
                let sparse = m.iter().map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, v)| **v != 0)
                        .map(|(j, v)| (j, *v as u32))
                        .collect::<SparseVec>()
                });
                assert_eq!(rank(f, sparse), dense_rank(p, m.clone()), "{m:?}");
            }
        }
    }
}
