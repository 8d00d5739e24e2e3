//! Dense linear algebra over F_p: just enough Gaussian elimination to take
//! ranks of degreewise slices. This path deliberately avoids the Groebner
//! engine so it can serve as an independent cross-check.

use crate::field::PrimeField;

pub struct MatFp {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl MatFp {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-echelon rank; consumes the matrix contents.
    pub fn rank(mut self) -> usize {
        let f = self.field;
        let mut rank = 0;
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot = (row..self.rows).find(|&r| self.get(r, col) != 0);
            let Some(pr) = pivot else { continue };
            self.swap_rows(row, pr);
            let inv = f.inv(self.get(row, col));
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row {
                    let factor = self.get(r, col);
                    if factor != 0 {
                        for c in col..self.cols {
                            let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                            self.set(r, c, v);
                        }
                    }
                }
            }
            row += 1;
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let f = PrimeField::new(7).unwrap();
        let mut m = MatFp::zeros(f, 3, 3);
        m.set(0, 0, 1);
        m.set(1, 1, 2);
        m.set(2, 0, 3);
        m.set(2, 1, 6); // row2 = 3*row0 + 3*row1
        assert_eq!(m.rank(), 2);
        let empty = MatFp::zeros(f, 0, 5);
        assert_eq!(empty.rank(), 0);
    }
}
