//! Banked dual-port RAM with row and column (diagonal) addressing.

use std::fmt;

/// Address applied to all `N` banks in one access.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Access {
    /// Word `addr` of every bank.
    Row(usize),
    /// Bank `i` at word `<base + i>`.
    Column(usize),
}

/// One completed port operation, as recorded in the trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MemOp {
    pub write: bool,
    pub access: Access,
}

impl fmt::Display for MemOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.write, self.access) {
            (false, Access::Row(a)) => write!(f, "r{a}"),
            (true, Access::Row(a)) => write!(f, "w{a}"),
            (false, Access::Column(a)) => write!(f, "c{a}"),
            (true, Access::Column(a)) => write!(f, "x{a}"),
        }
    }
}

/// `N` banks of `depth` words, `width` bits each. Column access needs
/// `depth == N`.
///
/// Dual-port: at most one read and one write per cycle. Reads return the
/// contents from before any write of the same cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemModel {
    n: usize,
    depth: usize,
    width: u32,
    /// `words[addr * n + bank]`
    words: Vec<u64>,
    pending: Option<(Access, Vec<u64>)>,
    ops: Vec<MemOp>,
}

impl MemModel {
    pub fn new(n: usize, width: u32) -> Self {
        Self::with_depth(n, n, width)
    }

    pub fn with_depth(n: usize, depth: usize, width: u32) -> Self {
        assert!(n > 0 && depth > 0 && width > 0 && width < 64);
        MemModel {
            n,
            depth,
            width,
            words: vec![0; n * depth],
            pending: None,
            ops: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Word `addr` of bank `bank`.
    pub fn word(&self, bank: usize, addr: usize) -> u64 {
        self.words[addr * self.n + bank]
    }

    fn address(&self, access: Access, bank: usize) -> usize {
        match access {
            Access::Row(a) => a,
            Access::Column(base) => (base + bank) % self.n,
        }
    }

    fn check(&self, access: Access) {
        match access {
            Access::Row(a) => assert!(a < self.depth, "address {a} out of range for {} words", self.depth),
            Access::Column(b) => assert!(b < self.n && self.depth == self.n, "bad column base {b}"),
        }
    }

    pub fn read(&mut self, access: Access) -> Vec<u64> {
        self.check(access);
        assert!(
            !self.ops.iter().any(|op| !op.write),
            "second read in one cycle"
        );
        self.ops.push(MemOp { write: false, access });
        (0..self.n).map(|b| self.word(b, self.address(access, b))).collect()
    }

    /// Schedules a write that lands at the end of the cycle.
    pub fn write(&mut self, access: Access, data: Vec<u64>) {
        self.check(access);
        assert_eq!(data.len(), self.n);
        assert!(self.pending.is_none(), "second write in one cycle");
        let limit = 1u64 << self.width;
        assert!(data.iter().all(|&v| v < limit), "word wider than {} bits", self.width);
        self.ops.push(MemOp { write: true, access });
        self.pending = Some((access, data));
    }

    /// Commits the pending write and returns the operations of the cycle.
    pub fn clock(&mut self) -> Vec<MemOp> {
        if let Some((access, data)) = self.pending.take() {
            for (b, v) in data.into_iter().enumerate() {
                let a = self.address(access, b);
                self.words[a * self.n + b] = v;
            }
        }
        std::mem::take(&mut self.ops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_access_walks_the_diagonal() {
        let mut m = MemModel::new(3, 8);
        for a in 0..3 {
            m.write(Access::Row(a), vec![10 * a as u64, 10 * a as u64 + 1, 10 * a as u64 + 2]);
            m.clock();
        }
        assert_eq!(m.read(Access::Column(1)), vec![10, 21, 2]);
        m.clock();
        m.write(Access::Column(2), vec![7, 8, 9]);
        m.clock();
        assert_eq!((m.word(0, 2), m.word(1, 0), m.word(2, 1)), (7, 8, 9));
    }

    #[test]
    fn read_sees_old_data_during_write() {
        let mut m = MemModel::new(2, 4);
        m.write(Access::Row(0), vec![1, 2]);
        assert_eq!(m.read(Access::Row(0)), vec![0, 0]);
        let ops = m.clock();
        assert_eq!(ops.len(), 2);
        assert_eq!(m.read(Access::Row(0)), vec![1, 2]);
    }

    #[test]
    #[should_panic(expected = "second read")]
    fn single_read_port() {
        let mut m = MemModel::new(2, 4);
        m.read(Access::Row(0));
        m.read(Access::Row(1));
    }

    #[test]
    #[should_panic(expected = "wider")]
    fn width_is_enforced() {
        let mut m = MemModel::new(2, 4);
        m.write(Access::Row(0), vec![16, 0]);
    }
}
