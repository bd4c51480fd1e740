//! General 0/1 matrices arising as contraction minors.

use crate::set::IndexSet;

/// A 0/1 matrix given by its row supports, kept clean of dominating rows and
/// zero columns. Column and row labels remember where entries came from in
/// the parent matrix.
#[derive(Debug, Clone)]
pub struct BinaryMatrix {
    col_labels: Vec<u32>,
    row_labels: Vec<u32>,
    rows: Vec<IndexSet>,
    dropped_cols: Vec<u32>,
}

impl BinaryMatrix {
    /// Builds the matrix from labeled rows over `col_labels.len()` columns,
    /// removing dominating rows first (a duplicate keeps the representative
    /// with the smallest original row label) and then any column that ends up
    /// in no surviving row.
    pub(crate) fn from_labeled_rows(col_labels: Vec<u32>, rows: Vec<(u32, IndexSet)>) -> Self {
        let mut kept: Vec<(u32, IndexSet)> = Vec::new();
        'outer: for (i, r) in &rows {
            for (j, q) in &rows {
                let strict = q.is_subset_of(r) && q != r;
                let duplicate = q == r && j < i;
                if strict || duplicate {
                    continue 'outer;
                }
            }
            kept.push((*i, *r));
        }
        kept.sort_by_key(|(i, _)| *i);

        let ncols = col_labels.len() as u32;
        let mut used = IndexSet::empty(ncols.max(1)).expect("valid universe");
        if ncols > 0 {
            for (_, r) in &kept {
                used = used.union(r);
            }
        }
        if ncols > 0 && used.len() == ncols {
            let (row_labels, rows) = kept.into_iter().unzip();
            return BinaryMatrix {
                col_labels,
                row_labels,
                rows,
                dropped_cols: Vec::new(),
            };
        }

        // Some columns are in no surviving row: drop and relabel.
        let surviving: Vec<u32> = used.members();
        let dropped_cols: Vec<u32> = (0..ncols)
            .filter(|p| !used.contains(*p))
            .map(|p| col_labels[p as usize])
            .collect();
        let new_ncols = surviving.len() as u32;
        let mut position = vec![u32::MAX; ncols as usize];
        for (newp, &oldp) in surviving.iter().enumerate() {
            position[oldp as usize] = newp as u32;
        }
        let mut row_labels = Vec::with_capacity(kept.len());
        let mut rows = Vec::with_capacity(kept.len());
        for (i, r) in kept {
            let mut nr = IndexSet::empty(new_ncols.max(1)).expect("valid universe");
            for p in r.iter() {
                nr.insert(position[p as usize]).expect("remapped in range");
            }
            row_labels.push(i);
            rows.push(nr);
        }
        BinaryMatrix {
            col_labels: surviving.iter().map(|&p| col_labels[p as usize]).collect(),
            row_labels,
            rows,
            dropped_cols,
        }
    }

    pub fn ncols(&self) -> u32 {
        self.col_labels.len() as u32
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Row supports over the relabeled columns `0..ncols()`.
    pub fn rows(&self) -> &[IndexSet] {
        &self.rows
    }

    /// Original column index of each surviving column, in ascending order.
    pub fn col_labels(&self) -> &[u32] {
        &self.col_labels
    }

    /// Original row index of each surviving row.
    pub fn row_labels(&self) -> &[u32] {
        &self.row_labels
    }

    /// Original labels of columns removed because no surviving row used them.
    pub fn dropped_zero_cols(&self) -> &[u32] {
        &self.dropped_cols
    }

    /// True iff some surviving row's support contains another's.
    pub fn has_dominating_rows(&self) -> bool {
        self.rows.iter().enumerate().any(|(i, r)| {
            self.rows
                .iter()
                .enumerate()
                .any(|(j, q)| i != j && q.is_subset_of(r) && q != r)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, members: &[u32]) -> IndexSet {
        IndexSet::from_members(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn duplicate_rows_keep_smallest_label() {
        let rows = vec![
            (0, set(3, &[0, 1])),
            (1, set(3, &[0, 1])),
            (2, set(3, &[2])),
        ];
        let m = BinaryMatrix::from_labeled_rows(vec![10, 11, 12], rows);
        assert_eq!(m.row_labels(), &[0, 2]);
        assert!(!m.has_dominating_rows());
    }

    #[test]
    fn strict_supersets_removed() {
        let rows = vec![
            (0, set(3, &[0, 1, 2])),
            (1, set(3, &[0, 1])),
            (2, set(3, &[1, 2])),
        ];
        let m = BinaryMatrix::from_labeled_rows(vec![0, 1, 2], rows);
        assert_eq!(m.row_labels(), &[1, 2]);
    }

    #[test]
    fn zero_columns_dropped_and_recorded() {
        let rows = vec![(0, set(3, &[0])), (1, set(3, &[0, 1, 2]))];
        // row 1 dominates row 0, leaving columns 1 and 2 unused
        let m = BinaryMatrix::from_labeled_rows(vec![5, 6, 7], rows);
        assert_eq!(m.dropped_zero_cols(), &[6, 7]);
        assert_eq!(m.col_labels(), &[5]);
        assert_eq!(m.rows(), &[set(1, &[0])]);
    }
}
