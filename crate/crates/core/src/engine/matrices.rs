use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;

const U: [&str; 3] = ["011", "001", "100"];
const V: [&str; 3] = ["111", "011", "101"];
const S: [&str; 4] = ["1011", "0101", "1010", "0101"];
const T: [&str; 4] = ["0011", "0001", "1000", "0100"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixReport {
    pub n: usize,
    pub sum_is_identity: bool,
    pub rank_a: usize,
    pub rank_b: usize,
    pub product_is_identity: bool,
}

impl MatrixReport {
    pub fn passed(&self) -> bool {
        self.sum_is_identity && self.rank_a == self.n && self.rank_b == self.n && !self.product_is_identity
    }
}

/// `A` and `B` for size `n`: `[[I, I, 0], [I, 0, 0], [0, 0, X]]` and
/// `[[0, I, 0], [I, I, 0], [0, 0, Y]]` with `(X, Y) = (U, V)` for odd `n` and
/// `(S, T)` for even `n`.
pub fn decomposition_matrices(n: usize) -> Result<(Gf2Matrix, Gf2Matrix)> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("matrix size {n} is below 3")));
    }
    let (x, y, k) = if n % 2 == 1 {
        (Gf2Matrix::from_bit_rows(&U)?, Gf2Matrix::from_bit_rows(&V)?, 3)
    } else {
        (Gf2Matrix::from_bit_rows(&S)?, Gf2Matrix::from_bit_rows(&T)?, 4)
    };
    let r = (n - k) / 2;
    let id = Gf2Matrix::identity(r);
    let mut a = Gf2Matrix::zeros(n, n);
    let mut b = Gf2Matrix::zeros(n, n);
    if r > 0 {
        a.set_block(0, 0, &id);
        a.set_block(0, r, &id);
        a.set_block(r, 0, &id);
        b.set_block(0, r, &id);
        b.set_block(r, 0, &id);
        b.set_block(r, r, &id);
    }
    a.set_block(2 * r, 2 * r, &x);
    b.set_block(2 * r, 2 * r, &y);
    Ok((a, b))
}

/// Checks `A + B = I`, both invertible, and `AB != I`.
pub fn verify_matrix_decomposition(n: usize) -> Result<MatrixReport> {
    let (a, b) = decomposition_matrices(n)?;
    Ok(MatrixReport {
        n,
        sum_is_identity: a.add(&b)?.is_identity(),
        rank_a: a.rank(),
        rank_b: b.rank(),
        product_is_identity: a.mul(&b)?.is_identity(),
    })
}
