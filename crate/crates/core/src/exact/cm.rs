use thiserror::Error;

use super::rat::Rat;
use crate::model::QuadDistances;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("squared distance must be non-negative, got {0}")]
    NegativeSquaredDistance(Rat),
}

/// Sixteen times the squared area of a triangle, from its three squared
/// distances. This is the 3-point Cayley-Menger form
/// `2xy + 2yz + 2zx - x^2 - y^2 - z^2`.
///
/// The arguments are the squared distances d01^2, d02^2, d12^2. The result is
/// non-negative exactly when the three distances satisfy the (non-strict)
/// triangle inequality, and zero exactly for a collinear (degenerate) triple.
pub fn cm3(d01sq: &Rat, d02sq: &Rat, d12sq: &Rat) -> Result<Rat, ExactError> {
    for v in [d01sq, d02sq, d12sq] {
        if v.is_negative() {
            return Err(ExactError::NegativeSquaredDistance(v.clone()));
        }
    }
    let two = Rat::from_int(2);
    let cross = &(&(d01sq * d02sq) + &(d02sq * d12sq)) + &(d12sq * d01sq);
    let squares = &(&d01sq.square() + &d02sq.square()) + &d12sq.square();
    Ok(&(two * cross) - &squares)
}

/// Integer kernel of [`cm3`] for squared distances that fit in `i128`.
pub fn cm3_int(d01sq: i128, d02sq: i128, d12sq: i128) -> i128 {
    debug_assert!(d01sq >= 0 && d02sq >= 0 && d12sq >= 0);
    2 * (d01sq * d02sq + d02sq * d12sq + d12sq * d01sq)
        - d01sq * d01sq
        - d02sq * d02sq
        - d12sq * d12sq
}

/// The 4-point Cayley-Menger determinant of a labeled quadrilateral, with the
/// sign convention that the value equals `288 * volume^2` for inputs that are
/// realizable as a tetrahedron. Zero is the planarity criterion.
///
/// Computed as the Gram-form 3x3 determinant with entries
/// `g(i,j) = d(A,i)^2 + d(A,j)^2 - d(i,j)^2`, which equals the bordered 5x5
/// determinant and is invariant under all 24 relabelings of the four points.
pub fn cm4(q: &QuadDistances) -> Rat {
    Rat::from_bigint(cm4_int(q).into())
}

/// Integer kernel of [`cm4`].
pub fn cm4_int(q: &QuadDistances) -> i128 {
    let ab = (q.ab as i128) * (q.ab as i128);
    let ac = (q.ac as i128) * (q.ac as i128);
    let ad = (q.da as i128) * (q.da as i128);
    let bc = (q.bc as i128) * (q.bc as i128);
    let bd = (q.bd as i128) * (q.bd as i128);
    let cd = (q.cd as i128) * (q.cd as i128);

    let g11 = 2 * ab;
    let g22 = 2 * ac;
    let g33 = 2 * ad;
    let g12 = ab + ac - bc;
    let g13 = ab + ad - bd;
    let g23 = ac + ad - cd;

    g11 * (g22 * g33 - g23 * g23) - g12 * (g12 * g33 - g23 * g13)
        + g13 * (g12 * g23 - g22 * g13)
}
