//! Exact minimum-cost perfect assignment.
//!
//! A small Hungarian solver (shortest augmenting paths with dual
//! potentials, the O(n³) formulation) specialized to the determinant's
//! needs: costs are exact rationals paired with an integer tie-break
//! channel, compared lexicographically, and edges may be forbidden
//! entirely (`None`), which is how `-inf` entries enter.
//!
//! The determinant evaluator maximizes, so it hands us negated weights;
//! negation reverses the lexicographic order, hence minimizing here picks
//! the permutation with the greatest ν-value and, among those, the most
//! ghost entries.
//!
//! [`Solver::reoptimize_without`] supports the uniqueness certificate: it
//! reuses the optimal dual potentials, discards one matched edge, and
//! re-augments just the freed row. Removing an edge cannot break dual
//! feasibility or the tightness of the remaining matched edges, so a single
//! augmentation restores an optimal matching of the reduced problem.

use num_rational::BigRational;

/// Rational weight with a secondary integer channel, ordered
/// lexicographically (field order does it for the derives).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct LexWeight {
    primary: BigRational,
    tie: i64,
}

impl LexWeight {
    pub fn new(primary: BigRational, tie: i64) -> Self {
        LexWeight { primary, tie }
    }

    pub fn zero() -> Self {
        LexWeight {
            primary: BigRational::default(),
            tie: 0,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        LexWeight {
            primary: &self.primary + &other.primary,
            tie: self.tie + other.tie,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        LexWeight {
            primary: &self.primary - &other.primary,
            tie: self.tie - other.tie,
        }
    }

    pub fn primary(&self) -> &BigRational {
        &self.primary
    }

    pub fn tie_break(&self) -> i64 {
        self.tie
    }
}

#[derive(Clone)]
pub(crate) struct Solver<'a> {
    n: usize,
    cost: &'a [Vec<Option<LexWeight>>],
    excluded: Option<(usize, usize)>,
    /// Dual potentials for rows and columns, 1-based with a scratch slot 0.
    u: Vec<LexWeight>,
    v: Vec<LexWeight>,
    /// `p[j]` = row matched to column `j` (1-based; 0 = unmatched).
    p: Vec<usize>,
    /// Rows still waiting for an augmentation.
    pending: Vec<usize>,
}

impl<'a> Solver<'a> {
    /// `cost[i][j] = None` marks a forbidden edge.
    pub fn new(n: usize, cost: &'a [Vec<Option<LexWeight>>]) -> Self {
        Solver {
            n,
            cost,
            excluded: None,
            u: vec![LexWeight::zero(); n + 1],
            v: vec![LexWeight::zero(); n + 1],
            p: vec![0; n + 1],
            pending: (1..=n).collect(),
        }
    }

    fn edge(&self, i: usize, j: usize) -> Option<&LexWeight> {
        // i, j are 1-based here
        if self.excluded == Some((i - 1, j - 1)) {
            return None;
        }
        self.cost[i - 1][j - 1].as_ref()
    }

    /// Augment all pending rows. Returns false — and leaves the solver in
    /// an unusable state — when some row cannot be matched along finite
    /// edges, i.e. no perfect matching exists.
    pub fn solve(&mut self) -> bool {
        let rows = std::mem::take(&mut self.pending);
        for i in rows {
            if !self.augment(i) {
                return false;
            }
        }
        true
    }

    /// One round of Dijkstra over reduced costs, then unwind the
    /// augmenting path. Straight from the standard potentials formulation.
    fn augment(&mut self, start_row: usize) -> bool {
        let n = self.n;
        self.p[0] = start_row;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<LexWeight>> = vec![None; n + 1];
        let mut way = vec![0usize; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = self.p[j0];
            let mut delta: Option<LexWeight> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if let Some(c) = self.edge(i0, j) {
                    let cur = c.sub(&self.u[i0]).sub(&self.v[j]);
                    if minv[j].as_ref().is_none_or(|m| cur < *m) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(m) = &minv[j] {
                    if delta.as_ref().is_none_or(|d| m < d) {
                        delta = Some(m.clone());
                        j1 = j;
                    }
                }
            }
            let Some(delta) = delta else {
                // every reachable column exhausted without a free one
                return false;
            };
            for j in 0..=n {
                if used[j] {
                    self.u[self.p[j]] = self.u[self.p[j]].add(&delta);
                    self.v[j] = self.v[j].sub(&delta);
                } else if let Some(m) = &minv[j] {
                    minv[j] = Some(m.sub(&delta));
                }
            }
            j0 = j1;
            if self.p[j0] == 0 {
                break;
            }
        }
        while j0 != 0 {
            let j1 = way[j0];
            self.p[j0] = self.p[j1];
            j0 = j1;
        }
        true
    }

    /// Matched column per row, 0-based. Valid after a successful solve.
    pub fn matching(&self) -> Vec<usize> {
        let mut row_to_col = vec![usize::MAX; self.n];
        for j in 1..=self.n {
            if self.p[j] != 0 {
                row_to_col[self.p[j] - 1] = j - 1;
            }
        }
        debug_assert!(row_to_col.iter().all(|&j| j != usize::MAX));
        row_to_col
    }

    /// A copy of this solved state with the matched edge `(row, col)`
    /// (0-based) forbidden and its row freed, ready for one re-augmentation.
    pub fn reoptimize_without(&self, row: usize, col: usize) -> Solver<'a> {
        debug_assert!(self.excluded.is_none() && self.pending.is_empty());
        debug_assert_eq!(self.p[col + 1], row + 1, "edge must be in the matching");
        let mut next = self.clone();
        next.excluded = Some((row, col));
        next.p[col + 1] = 0;
        next.pending = vec![row + 1];
        next
    }
}
