//! Regularity, adjoints and pseudo inverses.
//!
//! Over this semiring nothing has a genuine multiplicative inverse, but
//! regular matrices (those whose determinant is an untagged real) admit a
//! *pseudo* inverse `A^∇ = Adj(A) ⊘ |A|`: both products `A·A^∇` and
//! `A^∇·A` land in the set of pseudo units — regular matrices with real
//! zero diagonal and ghost off-diagonal — and that containment
//! characterizes regularity. The two products need not coincide, pseudo
//! inverses are not unique, and `(AB)^∇ = B^∇ A^∇` fails; the tests below
//! pin each of these facts on concrete witnesses.

use serde::{Deserialize, Serialize};

use crate::matrix::{det, DetResult, MatrixError, TropMatrix};
use crate::scalar::TropScalar;

/// Why a matrix fails pseudo-unit membership (first failed check wins).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PseudoUnitFailure {
    /// Some diagonal entry is not the real zero.
    BadDiagonal,
    /// Some off-diagonal entry is an untagged real.
    RealOffDiagonal,
    /// Diagonal and tags are right but the matrix is singular.
    Singular,
}

/// Outcome of a pseudo-unit membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoUnitVerdict {
    pub is_pseudo_unit: bool,
    pub is_idempotent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<PseudoUnitFailure>,
}

/// Pseudo inverse together with both one-sided products and their
/// pseudo-unit verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseReport {
    pub inverse: TropMatrix,
    pub right_unit: TropMatrix,
    pub left_unit: TropMatrix,
    pub right_ok: bool,
    pub left_ok: bool,
}

/// Determinant used by this module; small sizes go through the
/// enumeration oracle, larger ones through the assignment evaluator.
pub fn det_for_linalg(a: &TropMatrix) -> Result<DetResult, MatrixError> {
    det(a)
}

/// A square matrix is regular when its determinant is an untagged real:
/// one permutation attains the maximum, through real entries only.
pub fn is_regular(a: &TropMatrix) -> Result<bool, MatrixError> {
    Ok(!det(a)?.is_singular())
}

/// Tropical adjoint: `Adj(A)_{ij} = |A_{ji}|`, the determinant of the
/// minor that deletes row `j` and column `i`. Needs `n ≥ 2`; the 1×1 case
/// has no minors.
pub fn adjoint(a: &TropMatrix) -> Result<TropMatrix, MatrixError> {
    let n = square(a)?;
    if n < 2 {
        return Err(MatrixError::TooSmall { n });
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(det(&a.minor(j, i)?)?.value);
        }
        rows.push(row);
    }
    TropMatrix::from_rows(rows)
}

/// `A^∇ = Adj(A) ⊘ |A|`, defined whenever `|A| ≠ -inf`.
///
/// For a ν-singular matrix the division by a ghost determinant tags every
/// entry, which is what makes the pseudo-unit test downstream fail — the
/// computation itself is total away from `-inf`.
pub fn pseudo_inverse(a: &TropMatrix) -> Result<TropMatrix, MatrixError> {
    let n = square(a)?;
    if n == 1 {
        return match a.get(0, 0) {
            TropScalar::NegInf => Err(MatrixError::SingularNegInf),
            x => Ok(TropMatrix::from_fn(1, 1, |_, _| {
                TropScalar::unit().div(x).expect("nonzero scalar")
            })),
        };
    }
    let d = det(a)?.value;
    if d.is_neg_inf() {
        return Err(MatrixError::SingularNegInf);
    }
    let inv_det = TropScalar::unit().div(&d).expect("nonzero determinant");
    Ok(adjoint(a)?.scalar_mul(&inv_det))
}

/// `A·A = A`, entrywise and exact.
pub fn is_idempotent(a: &TropMatrix) -> Result<bool, MatrixError> {
    square(a)?;
    Ok(a.mat_mul(a)? == *a)
}

/// Membership in the pseudo units: real zero diagonal, ghost (ν-tagged or
/// `-inf`) off-diagonal, and regular. Idempotency is reported alongside
/// because the idempotent pseudo units form the distinguished subset that
/// one-sided inverse products actually reach.
pub fn is_pseudo_unit(a: &TropMatrix) -> Result<PseudoUnitVerdict, MatrixError> {
    let n = square(a)?;
    let idm = is_idempotent(a)?;
    let verdict = |failure: Option<PseudoUnitFailure>| PseudoUnitVerdict {
        is_pseudo_unit: failure.is_none(),
        is_idempotent: idm,
        failure_reason: failure,
    };
    for i in 0..n {
        if *a.get(i, i) != TropScalar::unit() {
            return Ok(verdict(Some(PseudoUnitFailure::BadDiagonal)));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && a.get(i, j).is_real() {
                return Ok(verdict(Some(PseudoUnitFailure::RealOffDiagonal)));
            }
        }
    }
    if det(a)?.is_singular() {
        return Ok(verdict(Some(PseudoUnitFailure::Singular)));
    }
    Ok(verdict(None))
}

/// Compute `A^∇` and test both products for pseudo-unit membership.
pub fn invert(a: &TropMatrix) -> Result<InverseReport, MatrixError> {
    let inverse = pseudo_inverse(a)?;
    let right_unit = a.mat_mul(&inverse)?;
    let left_unit = inverse.mat_mul(a)?;
    let right_ok = is_pseudo_unit(&right_unit)?.is_pseudo_unit;
    let left_ok = is_pseudo_unit(&left_unit)?.is_pseudo_unit;
    Ok(InverseReport {
        inverse,
        right_unit,
        left_unit,
        right_ok,
        left_ok,
    })
}

/// Do `A` and `B` witness each other as pseudo inverses, i.e. are both
/// `A·B` and `B·A` pseudo units?
pub fn check_inverse_pair(a: &TropMatrix, b: &TropMatrix) -> Result<bool, MatrixError> {
    let n = square(a)?;
    let m = square(b)?;
    if n != m {
        return Err(MatrixError::ShapeMismatch(n, n, m, m));
    }
    Ok(is_pseudo_unit(&a.mat_mul(b)?)?.is_pseudo_unit
        && is_pseudo_unit(&b.mat_mul(a)?)?.is_pseudo_unit)
}

fn square(a: &TropMatrix) -> Result<usize, MatrixError> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(MatrixError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}
