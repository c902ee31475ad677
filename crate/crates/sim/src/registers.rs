//! Register array of `H` rows by `N` cells with per-row circular shifters.

/// Rows form a vertical FIFO: [`push`](Self::push) enters at the bottom and
/// the top row falls out. Every row owns a barrel shifter used at most once
/// per cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftRegisterArray {
    n: usize,
    width: u32,
    rows: Vec<Vec<u64>>,
    shifted: Vec<bool>,
    pushed: bool,
}

impl ShiftRegisterArray {
    pub fn new(rows: usize, n: usize, width: u32) -> Self {
        assert!(rows > 0 && n > 0);
        ShiftRegisterArray {
            n,
            width,
            rows: vec![vec![0; n]; rows],
            shifted: vec![false; rows],
            pushed: false,
        }
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, a: usize) -> &[u64] {
        &self.rows[a]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Operands of column tree `j`, top row first.
    pub fn column(&self, j: usize) -> Vec<u64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.n).map(|j| self.column(j)).collect()
    }

    pub fn push(&mut self, row: Vec<u64>) -> Vec<u64> {
        assert_eq!(row.len(), self.n);
        assert!(!self.pushed, "second push in one cycle");
        assert!(row.iter().all(|&v| v >> self.width == 0), "cell wider than {} bits", self.width);
        self.pushed = true;
        let top = self.rows.remove(0);
        self.rows.push(row);
        top
    }

    /// CLS: `row'[j] = row[<j + s>]`.
    pub fn rotate_left(&mut self, a: usize, s: usize) {
        self.mark(a);
        let s = s % self.n;
        self.rows[a].rotate_left(s);
    }

    /// CRS: `row'[j] = row[<j - s>]`.
    pub fn rotate_right(&mut self, a: usize, s: usize) {
        self.mark(a);
        let s = s % self.n;
        self.rows[a].rotate_right(s);
    }

    /// Square arrays only: `reg'[i][j] = reg[j][i]`.
    pub fn transpose(&mut self) {
        assert_eq!(self.rows.len(), self.n);
        let n = self.n;
        let t: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| self.rows[j][i]).collect()).collect();
        self.rows = t;
    }

    fn mark(&mut self, a: usize) {
        assert!(!self.shifted[a], "row {a} shifted twice in one cycle");
        self.shifted[a] = true;
    }

    /// Clears the per-cycle usage flags.
    pub fn clock(&mut self) {
        self.shifted.fill(false);
        self.pushed = false;
    }
}

/// `v'[j] = v[<-j>]`.
pub fn flip(v: &[u64]) -> Vec<u64> {
    let n = v.len();
    (0..n).map(|j| v[(n - j) % n]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifo_order() {
        let mut r = ShiftRegisterArray::new(2, 3, 8);
        r.push(vec![1, 2, 3]);
        r.clock();
        r.push(vec![4, 5, 6]);
        r.clock();
        assert_eq!(r.rows(), &[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(r.column(1), vec![2, 5]);
        assert_eq!(r.push(vec![0; 3]), vec![1, 2, 3]);
    }

    #[test]
    fn shifts() {
        let mut r = ShiftRegisterArray::new(2, 3, 8);
        r.push(vec![1, 2, 3]);
        r.clock();
        r.push(vec![1, 2, 3]);
        r.rotate_left(0, 1);
        r.rotate_right(1, 4);
        assert_eq!(r.rows(), &[vec![2, 3, 1], vec![3, 1, 2]]);
        assert_eq!(flip(&[1, 2, 3]), vec![1, 3, 2]);
    }

    #[test]
    #[should_panic(expected = "shifted twice")]
    fn one_shift_per_cycle() {
        let mut r = ShiftRegisterArray::new(1, 3, 8);
        r.rotate_left(0, 1);
        r.rotate_left(0, 1);
    }

    #[test]
    fn transpose_square() {
        let mut r = ShiftRegisterArray::new(2, 2, 8);
        r.push(vec![1, 2]);
        r.clock();
        r.push(vec![3, 4]);
        r.transpose();
        assert_eq!(r.rows(), &[vec![1, 3], vec![2, 4]]);
    }
}
