//! Dense matrices over the extended tropical semiring.
//!
//! The tropical determinant is the permanent: `|A| = ⊕_σ ⊙_i a_{i,σ(i)}`,
//! a maximization over all permutations. Its tag carries the structural
//! information: the result is real exactly when a single permutation
//! attains the maximum and every entry on it is real; it is ν-tagged when
//! the maximum is attained twice or passes through a ghost entry; it is
//! `-inf` when every permutation hits a `-inf` entry.
//!
//! Two evaluators are provided. [`det_naive`] enumerates permutations and
//! is the ground-truth oracle (capped, since `n!` explodes);
//! [`det_fast`] reduces to a maximum-weight assignment problem and
//! certifies uniqueness of the optimal permutation by re-solving with each
//! edge of the optimum excluded, which keeps it polynomial.

use std::fmt;

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::assignment::{LexWeight, Solver};
use crate::scalar::{Tag, TropScalar};

/// Default size cap for the factorial-time determinant.
pub const DEFAULT_NAIVE_CAP: usize = 10;

/// Size at or below which [`det`] prefers the naive evaluator.
const SMALL_DET: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for dimension of size {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("operation needs a matrix of size at least 2, got {n}x{n}")]
    TooSmall { n: usize },
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("naive determinant of a {n}x{n} matrix exceeds the cap of {cap}")]
    NaiveCapExceeded { n: usize, cap: usize },
    #[error("matrix has determinant -inf; no pseudo inverse exists")]
    SingularNegInf,
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self, MatrixError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MatrixError::Empty);
        }
        let cols = rows[0].len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(MatrixError::ShapeMismatch(1, bad.len(), 1, cols));
        }
        let nrows = rows.len();
        Ok(TropMatrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from scalar literals; convenient in tests and examples.
    pub fn from_literals(rows: &[&[&str]]) -> Result<Self, String> {
        let parsed: Result<Vec<Vec<TropScalar>>, _> = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<TropScalar>()).collect())
            .collect();
        Self::from_rows(parsed.map_err(|e| e.to_string())?).map_err(|e| e.to_string())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> TropScalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        assert!(rows > 0 && cols > 0, "matrices must be nonempty");
        TropMatrix { rows, cols, entries }
    }

    /// The multiplicative identity: real `0` on the diagonal, `-inf` off it.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                TropScalar::unit()
            } else {
                TropScalar::NegInf
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> impl Iterator<Item = &TropScalar> {
        self.entries.iter()
    }

    pub fn row(&self, i: usize) -> &[TropScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Entrywise ⊕.
    pub fn mat_add(&self, other: &TropMatrix) -> Result<TropMatrix, MatrixError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    /// Tropical matrix product: `(AB)_{ij} = ⊕_k a_{ik} ⊙ b_{kj}`.
    pub fn mat_mul(&self, other: &TropMatrix) -> Result<TropMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        Ok(TropMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = TropScalar::NegInf;
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        }))
    }

    /// Entrywise scalar product `c ⊙ A`.
    pub fn scalar_mul(&self, c: &TropScalar) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| c.mul(a)).collect(),
        }
    }

    pub fn transpose(&self) -> TropMatrix {
        TropMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Delete row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Result<TropMatrix, MatrixError> {
        if self.rows < 2 || self.cols < 2 {
            return Err(MatrixError::TooSmall { n: self.rows });
        }
        if i >= self.rows {
            return Err(MatrixError::IndexOutOfRange {
                index: i,
                bound: self.rows,
            });
        }
        if j >= self.cols {
            return Err(MatrixError::IndexOutOfRange {
                index: j,
                bound: self.cols,
            });
        }
        let mut rows = Vec::with_capacity(self.rows - 1);
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            let mut row = Vec::with_capacity(self.cols - 1);
            for c in 0..self.cols {
                if c != j {
                    row.push(self.get(r, c).clone());
                }
            }
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    /// Copy with row `i` scaled by `c`.
    pub fn scale_row(&self, i: usize, c: &TropScalar) -> Result<TropMatrix, MatrixError> {
        if i >= self.rows {
            return Err(MatrixError::IndexOutOfRange {
                index: i,
                bound: self.rows,
            });
        }
        Ok(TropMatrix::from_fn(self.rows, self.cols, |r, j| {
            if r == i {
                c.mul(self.get(r, j))
            } else {
                self.get(r, j).clone()
            }
        }))
    }

    /// Copy with column `j` scaled by `c`.
    pub fn scale_col(&self, j: usize, c: &TropScalar) -> Result<TropMatrix, MatrixError> {
        if j >= self.cols {
            return Err(MatrixError::IndexOutOfRange {
                index: j,
                bound: self.cols,
            });
        }
        Ok(TropMatrix::from_fn(self.rows, self.cols, |i, cj| {
            if cj == j {
                c.mul(self.get(i, cj))
            } else {
                self.get(i, cj).clone()
            }
        }))
    }

    /// Copy with rows reordered so row `i` of the result is row `perm[i]`.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<TropMatrix, MatrixError> {
        if perm.len() != self.rows {
            return Err(MatrixError::ShapeMismatch(perm.len(), 1, self.rows, 1));
        }
        Ok(TropMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(perm[i], j).clone()
        }))
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Result<TropMatrix, MatrixError> {
        if perm.len() != self.cols {
            return Err(MatrixError::ShapeMismatch(perm.len(), 1, self.cols, 1));
        }
        Ok(TropMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, perm[j]).clone()
        }))
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: Vec<Vec<TropScalar>>,
}

impl Serialize for TropMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        MatrixRepr { rows }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TropMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        TropMatrix::from_rows(repr.rows).map_err(D::Error::custom)
    }
}

/// How many permutations attain the maximal ν-value of the determinant.
///
/// Only "one", "two" and "two or more" are distinguished: singularity needs
/// nothing finer, and the assignment-based evaluator certifies uniqueness
/// rather than counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimalCount {
    Exactly(u8),
    AtLeastTwo,
}

impl OptimalCount {
    pub fn is_unique(self) -> bool {
        self == OptimalCount::Exactly(1)
    }
}

impl fmt::Display for OptimalCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OptimalCount::Exactly(k) => write!(f, "{k}"),
            OptimalCount::AtLeastTwo => write!(f, ">=2"),
        }
    }
}

/// Determinant value plus the structural facts behind its tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetResult {
    pub value: TropScalar,
    pub optimal_count: OptimalCount,
    pub uses_nu_entry: bool,
}

impl DetResult {
    /// Singular means the determinant lies in the ghost part.
    pub fn is_singular(&self) -> bool {
        self.value.is_ghost()
    }
}

impl Serialize for DetResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("DetResult", 4)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.serialize_field(
            "tag",
            match self.value.tag() {
                Tag::NegInf => "neginf",
                Tag::Real => "real",
                Tag::Nu => "nu",
            },
        )?;
        match self.optimal_count {
            OptimalCount::Exactly(k) => st.serialize_field("optimal_count", &k)?,
            OptimalCount::AtLeastTwo => st.serialize_field("optimal_count", ">=2")?,
        }
        st.serialize_field("uses_nu_entry", &self.uses_nu_entry)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for DetResult {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum CountRepr {
            Num(u8),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Repr {
            value: TropScalar,
            tag: Tag,
            optimal_count: CountRepr,
            uses_nu_entry: bool,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.value.tag() != repr.tag {
            return Err(D::Error::custom("tag field disagrees with value literal"));
        }
        let optimal_count = match repr.optimal_count {
            CountRepr::Num(k @ 1..=2) => OptimalCount::Exactly(k),
            CountRepr::Num(k) => return Err(D::Error::custom(format!("bad optimal_count {k}"))),
            CountRepr::Text(s) if s == ">=2" => OptimalCount::AtLeastTwo,
            CountRepr::Text(s) => return Err(D::Error::custom(format!("bad optimal_count {s:?}"))),
        };
        Ok(DetResult {
            value: repr.value,
            optimal_count,
            uses_nu_entry: repr.uses_nu_entry,
        })
    }
}

/// Result for a matrix in which every permutation product is `-inf`.
/// All `n!` permutations tie at the bottom, and each passes through a
/// `-inf` entry.
fn all_neg_inf_result(n: usize) -> DetResult {
    DetResult {
        value: TropScalar::NegInf,
        optimal_count: match n {
            1 => OptimalCount::Exactly(1),
            2 => OptimalCount::Exactly(2),
            _ => OptimalCount::AtLeastTwo,
        },
        uses_nu_entry: true,
    }
}

fn finite_result(best: BigRational, count: u8, ghost_on_best: bool) -> DetResult {
    let singular = count >= 2 || ghost_on_best;
    DetResult {
        value: if singular {
            TropScalar::Nu(best)
        } else {
            TropScalar::Real(best)
        },
        optimal_count: match count {
            1 => OptimalCount::Exactly(1),
            2 => OptimalCount::Exactly(2),
            _ => OptimalCount::AtLeastTwo,
        },
        uses_nu_entry: ghost_on_best,
    }
}

/// Ground-truth determinant by permutation enumeration, with the default
/// size cap.
pub fn det_naive(a: &TropMatrix) -> Result<DetResult, MatrixError> {
    det_naive_with_cap(a, DEFAULT_NAIVE_CAP)
}

/// Permutation enumeration with an explicit size cap.
///
/// Branches through `-inf` entries are pruned: they can only produce `-inf`
/// products, which matter only when *every* product is `-inf`, a case
/// recognized by never having seen a finite product.
pub fn det_naive_with_cap(a: &TropMatrix, cap: usize) -> Result<DetResult, MatrixError> {
    let n = a.require_square()?;
    if n > cap {
        return Err(MatrixError::NaiveCapExceeded { n, cap });
    }

    struct Acc {
        best: Option<BigRational>,
        count: u8, // saturating at 3
        nu_on_best: bool,
    }

    fn rec(a: &TropMatrix, row: usize, used: &mut [bool], sum: &BigRational, nu: bool, acc: &mut Acc) {
        let n = a.rows();
        if row == n {
            match &acc.best {
                Some(b) => match sum.cmp(b) {
                    std::cmp::Ordering::Greater => {
                        acc.best = Some(sum.clone());
                        acc.count = 1;
                        acc.nu_on_best = nu;
                    }
                    std::cmp::Ordering::Equal => {
                        acc.count = acc.count.saturating_add(1).min(3);
                        acc.nu_on_best |= nu;
                    }
                    std::cmp::Ordering::Less => {}
                },
                None => {
                    acc.best = Some(sum.clone());
                    acc.count = 1;
                    acc.nu_on_best = nu;
                }
            }
            return;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            match a.get(row, j) {
                TropScalar::NegInf => continue,
                entry => {
                    used[j] = true;
                    let next = sum + entry.value().unwrap();
                    rec(a, row + 1, used, &next, nu || entry.is_nu(), acc);
                    used[j] = false;
                }
            }
        }
    }

    let mut acc = Acc {
        best: None,
        count: 0,
        nu_on_best: false,
    };
    let mut used = vec![false; n];
    rec(a, 0, &mut used, &BigRational::default(), false, &mut acc);

    Ok(match acc.best {
        None => all_neg_inf_result(n),
        Some(best) => finite_result(best, acc.count, acc.nu_on_best),
    })
}

/// Polynomial-time determinant via maximum-weight assignment.
///
/// One lexicographic solve finds the maximal ν-value and, among the
/// permutations attaining it, the one passing through the most ghost
/// entries (so `uses_nu_entry` is exact). Uniqueness of the optimal
/// permutation is then certified by re-solving once per matched edge with
/// that edge excluded, warm-started from the first solve's dual potentials.
pub fn det_fast(a: &TropMatrix) -> Result<DetResult, MatrixError> {
    let n = a.require_square()?;

    // Maximization problem: weight = (ν-value, ghost count); -inf entries
    // are forbidden edges. The solver minimizes, so store negated weights.
    let cost: Vec<Vec<Option<LexWeight>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match a.get(i, j) {
                    TropScalar::NegInf => None,
                    e => Some(LexWeight::new(-e.value().unwrap(), -i64::from(e.is_nu()))),
                })
                .collect()
        })
        .collect();

    let mut solver = Solver::new(n, &cost);
    if !solver.solve() {
        return Ok(all_neg_inf_result(n));
    }
    let sigma = solver.matching();
    let weight_of = |assignment: &[usize]| -> LexWeight {
        let mut total = LexWeight::zero();
        for (i, &j) in assignment.iter().enumerate() {
            total = total.sub(cost[i][j].as_ref().expect("matched edge is finite"));
        }
        total
    };
    let best = weight_of(&sigma);
    let ghost_on_best = best.tie_break() > 0;

    let mut unique = true;
    for (i, &j) in sigma.iter().enumerate() {
        let mut retry = solver.reoptimize_without(i, j);
        if retry.solve() {
            let other = weight_of(&retry.matching());
            debug_assert!(other.primary() <= best.primary());
            if other.primary() == best.primary() {
                unique = false;
                break;
            }
        }
    }

    Ok(finite_result(
        best.primary().clone(),
        if unique { 1 } else { 3 },
        ghost_on_best,
    ))
}

/// Determinant through whichever evaluator suits the size: permutation
/// enumeration for small matrices, assignment otherwise. Both satisfy the
/// same contract.
pub fn det(a: &TropMatrix) -> Result<DetResult, MatrixError> {
    let n = a.require_square()?;
    if n <= SMALL_DET {
        det_naive_with_cap(a, SMALL_DET)
    } else {
        det_fast(a)
    }
}
