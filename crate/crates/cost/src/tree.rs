use serde::{Deserialize, Serialize};

use dprt_core::ceil_log2;

/// Resources of one pipelined adder tree reducing `X` operands of `B` bits.
///
/// Flip-flops count the register after every level including the output,
/// but not the operand registers feeding the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeResources {
    /// 1-bit full adders.
    pub a_fa: u64,
    /// Pipeline flip-flops.
    pub a_ff: u64,
    /// 2-to-1 multiplexers.
    pub a_mux: u64,
}

/// Walks the tree level by level. At level `z` the `a` live operands are
/// paired into `floor(a / 2)` adders of width `B + z - 1`; an odd operand is
/// carried to the next level. Every surviving value is registered at width
/// `B + z`.
pub fn tree_resources(x: u64, b: u64) -> TreeResources {
    assert!(x >= 1 && b >= 1, "tree_resources needs x >= 1 and b >= 1");
    let levels = u64::from(ceil_log2(x));
    let (mut a_fa, mut a_ff, mut a_mux) = (0, 0, 0);
    let mut a = x;
    for z in 1..=levels {
        let carry = a % 2;
        a /= 2;
        a_fa += a * (b + z - 1);
        a_mux += a * b;
        a += carry;
        a_ff += a * (b + z);
    }
    TreeResources { a_fa, a_ff, a_mux }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hand_traced_values() {
        assert_eq!(tree_resources(2, 8), TreeResources { a_fa: 8, a_ff: 9, a_mux: 8 });
        assert_eq!(tree_resources(4, 8), TreeResources { a_fa: 25, a_ff: 28, a_mux: 24 });
        assert_eq!(tree_resources(3, 8), TreeResources { a_fa: 17, a_ff: 28, a_mux: 16 });
        assert_eq!(tree_resources(1, 8), TreeResources { a_fa: 0, a_ff: 0, a_mux: 0 });
    }

    #[test]
    fn two_operand_anchors() {
        for b in 1..=16 {
            let t = tree_resources(2, b);
            assert_eq!((t.a_fa, t.a_ff, t.a_mux), (b, b + 1, b));
        }
    }

    proptest! {
        #[test]
        fn growth_in_operand_count(x in 1u64..600, b in 1u64..24) {
            let t = tree_resources(x, b);
            let next = tree_resources(x + 1, b);
            prop_assert!(t.a_fa >= (x - 1) * b);
            prop_assert_eq!(t.a_mux, (x - 1) * b);
            prop_assert!(next.a_fa > t.a_fa);
            prop_assert!(next.a_mux > t.a_mux);
            // flip-flops are only non-decreasing: a 3-operand tree registers
            // its carried operand and needs as many as a 4-operand one
            prop_assert!(next.a_ff >= t.a_ff);
        }
    }
}
