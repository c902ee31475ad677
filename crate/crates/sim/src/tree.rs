//! Fully pipelined adder trees, one per column.

use std::collections::VecDeque;

use dprt_core::ceil_log2;

/// `columns` trees of `operands` inputs each, `width`-bit operands.
///
/// Each tree level pairs adjacent values and carries an odd one through,
/// followed by a register. An input captured in cycle `t` is visible at the
/// output in cycle `t + latency`.
#[derive(Debug, Clone)]
pub struct AdderTreeArray<T> {
    columns: usize,
    operands: usize,
    width: u32,
    latency: usize,
    /// `stages[z]` holds the values registered after level `z + 1`.
    stages: Vec<Option<(T, Vec<Vec<u64>>)>>,
}

impl<T> AdderTreeArray<T> {
    pub fn new(columns: usize, operands: usize, width: u32) -> Self {
        assert!(columns > 0 && operands > 0);
        let latency = ceil_log2(operands as u64) as usize;
        AdderTreeArray {
            columns,
            operands,
            width,
            latency,
            stages: (0..latency).map(|_| None).collect(),
        }
    }

    pub fn latency(&self) -> usize {
        self.latency
    }

    pub fn is_empty(&self) -> bool {
        self.stages.iter().all(Option::is_none)
    }

    /// Width of the tree output.
    pub fn output_width(&self) -> u32 {
        self.width + self.latency as u32
    }

    /// Advances one cycle. `input` holds one operand vector per column.
    pub fn step(&mut self, input: Option<(T, Vec<Vec<u64>>)>) -> Option<(T, Vec<u64>)> {
        let mut carry = input.map(|(tag, cols)| {
            assert_eq!(cols.len(), self.columns);
            for c in &cols {
                assert_eq!(c.len(), self.operands);
                self.check(c, 0);
            }
            (tag, cols)
        });
        for z in 0..self.latency {
            let next = carry.map(|(tag, cols)| {
                let reduced: Vec<Vec<u64>> = cols.iter().map(|c| reduce_level(c)).collect();
                for c in &reduced {
                    self.check(c, z as u32 + 1);
                }
                (tag, reduced)
            });
            carry = std::mem::replace(&mut self.stages[z], next);
        }
        carry.map(|(tag, cols)| {
            let sums = cols
                .into_iter()
                .map(|c| {
                    debug_assert_eq!(c.len(), 1);
                    c[0]
                })
                .collect();
            (tag, sums)
        })
    }

    fn check(&self, values: &[u64], level: u32) {
        let w = self.width + level;
        assert!(
            values.iter().all(|&v| w >= 64 || v >> w == 0),
            "tree level {level} value exceeds {w} bits"
        );
    }
}

fn reduce_level(values: &[u64]) -> Vec<u64> {
    values.chunks(2).map(|p| p.iter().sum()).collect()
}

/// Fixed-latency pipeline register chain with no arithmetic.
#[derive(Debug, Clone)]
pub struct DelayLine<T> {
    slots: VecDeque<Option<T>>,
}

impl<T> DelayLine<T> {
    pub fn new(latency: usize) -> Self {
        DelayLine {
            slots: (0..latency).map(|_| None).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.slots.iter().all(Option::is_none)
    }

    pub fn step(&mut self, input: Option<T>) -> Option<T> {
        if self.slots.is_empty() {
            return input;
        }
        self.slots.push_back(input);
        self.slots.pop_front().flatten()
    }
}
