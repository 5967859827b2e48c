//! Well-known diffusion-layer matrices used by tests, examples and docs.

use std::sync::Arc;

use crate::field::Field;
use crate::matrix::FqMatrix;

/// GF(2^8) defined by x^8 + x^4 + x^3 + x^2 + 1 (0x11D).
pub fn khazad_field() -> Arc<Field> {
    Arc::new(Field::from_encoded_poly(2, 8, 0x11D).expect("0x11D is irreducible"))
}

/// GF(2^8) defined by x^8 + x^4 + x^3 + x + 1 (0x11B), as used by AES.
pub fn aes_field() -> Arc<Field> {
    Arc::new(Field::from_encoded_poly(2, 8, 0x11B).expect("0x11B is irreducible"))
}

/// The 8x8 involutory MDS matrix of the Khazad block cipher over
/// GF(2^8)/0x11D. Its branch number is the maximum, 9.
pub fn khazad() -> FqMatrix {
    let rows = vec![
        vec![0x01, 0x03, 0x04, 0x05, 0x06, 0x08, 0x0B, 0x07],
        vec![0x03, 0x01, 0x05, 0x04, 0x08, 0x06, 0x07, 0x0B],
        vec![0x04, 0x05, 0x01, 0x03, 0x0B, 0x07, 0x06, 0x08],
        vec![0x05, 0x04, 0x03, 0x01, 0x07, 0x0B, 0x08, 0x06],
        vec![0x06, 0x08, 0x0B, 0x07, 0x01, 0x03, 0x04, 0x05],
        vec![0x08, 0x06, 0x07, 0x0B, 0x03, 0x01, 0x05, 0x04],
        vec![0x0B, 0x07, 0x06, 0x08, 0x04, 0x05, 0x01, 0x03],
        vec![0x07, 0x0B, 0x08, 0x06, 0x05, 0x04, 0x03, 0x01],
    ];
    FqMatrix::from_rows(khazad_field(), &rows).expect("entries fit GF(2^8)")
}

/// An 8x8 non-singular matrix over GF(2^8)/0x11D whose branch number is
/// only 3. A weight-1 input already exposes a weight-2 output through the
/// inverse, which makes it a good demonstration of class filtering.
pub fn low_branch_8x8() -> FqMatrix {
    let rows = vec![
        vec![0x01, 0x02, 0x03, 0x04, 0x01, 0x02, 0x03, 0x07],
        vec![0x02, 0x01, 0x04, 0x03, 0x02, 0x01, 0x07, 0x03],
        vec![0x03, 0x04, 0x01, 0x02, 0x03, 0x07, 0x01, 0x02],
        vec![0x04, 0x03, 0x02, 0x01, 0x07, 0x03, 0x02, 0x01],
        vec![0x01, 0x02, 0x03, 0x07, 0x01, 0x02, 0x03, 0x04],
        vec![0x02, 0x01, 0x07, 0x03, 0x02, 0x01, 0x04, 0x03],
        vec![0x03, 0x07, 0x01, 0x02, 0x03, 0x04, 0x01, 0x02],
        vec![0x07, 0x03, 0x02, 0x01, 0x07, 0x03, 0x02, 0x01],
    ];
    FqMatrix::from_rows(khazad_field(), &rows).expect("entries fit GF(2^8)")
}

/// The 4x4 MDS circulant of the AES MixColumns step over GF(2^8)/0x11B.
/// Branch number 5; not involutory.
pub fn aes_mixcolumns() -> FqMatrix {
    let rows = vec![
        vec![0x02, 0x03, 0x01, 0x01],
        vec![0x01, 0x02, 0x03, 0x01],
        vec![0x01, 0x01, 0x02, 0x03],
        vec![0x03, 0x01, 0x01, 0x02],
    ];
    FqMatrix::from_rows(aes_field(), &rows).expect("entries fit GF(2^8)")
}

/// A 4x4 involutory MDS Hadamard matrix over GF(2^8)/0x11B. The first row
/// sums to 1, so M^2 = I and the search needs only one product per vector.
pub fn involutory_mds_4x4() -> FqMatrix {
    FqMatrix::hadamard(aes_field(), &[0x01, 0x02, 0x04, 0x06]).expect("power-of-two order")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn khazad_shape() {
        let m = khazad();
        assert_eq!(m.order(), 8);
        assert_eq!(m.field().order(), 256);
    }

    #[test]
    fn involutory_sample_is_involutory() {
        let m = involutory_mds_4x4();
        assert!(m.is_involutory());
        assert!(m.is_hadamard_char2());
        assert_eq!(m.first_row_sum().encoding(), 1);
    }

    #[test]
    fn aes_mixcolumns_not_involutory() {
        assert!(!aes_mixcolumns().is_involutory());
    }
}
