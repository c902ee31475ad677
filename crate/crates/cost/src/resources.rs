use serde::{Deserialize, Serialize};

use dprt_core::{ceil_log2, is_prime};

use crate::{tree_resources, CostError, Method, Result};

/// Hardware resources for one architecture instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResourceReport {
    pub method: Method,
    pub n: usize,
    pub bits: u32,
    pub h: Option<usize>,
    pub register_array_bits: u64,
    pub adder_tree_flipflops: u64,
    pub one_bit_additions: u64,
    pub ram_bits: u64,
    /// 2-to-1 multiplexer equivalents; `None` where no count is available.
    pub mux_count: Option<u64>,
    pub divider_count: u64,
    pub divider_flipflops: u64,
    pub total_flipflops: u64,
}

/// Resource counts for `method` on an `n x n` image of `b`-bit pixels.
///
/// Divider costs are folded into the flip-flop, adder and MUX totals.
pub fn resource_model(method: Method, n: usize, b: u32, h: Option<usize>) -> Result<ResourceReport> {
    if !is_prime(n as u64) {
        return Err(CostError::NotPrime(n));
    }
    if b == 0 {
        return Err(CostError::InvalidArgument("bits must be at least 1".into()));
    }
    let h = if method.is_scalable() {
        let h = h.ok_or(CostError::MissingStripHeight(method.name()))?;
        if h < 2 || h > n {
            return Err(CostError::InvalidArgument(format!(
                "strip height must be in 2..={n}, got {h}"
            )));
        }
        Some(h)
    } else {
        None
    };

    let nn = n as u64;
    let bb = u64::from(b);
    let log_n = u64::from(ceil_log2(nn));
    let coef = bb + log_n;
    let wide = bb + 2 * log_n;
    let hh = h.map(|h| h as u64).unwrap_or(0);
    let k = if hh > 0 { nn.div_ceil(hh) } else { 0 };

    let (reg, tree_ff, adds, ram, mux, dividers) = match method {
        Method::Serial => (nn * coef, 3 * bb + 2 * log_n, coef, nn * nn * bb, None, 0),
        Method::Systolic => (
            nn * (nn + 1) * log_n,
            (nn + 1) * (3 * bb + 2 * log_n),
            (nn + 1) * coef,
            nn * (nn + 1) * coef,
            None,
            0,
        ),
        Method::Sfdprt => {
            let t = tree_resources(hh, bb);
            let sel = tree_resources(k + 1, bb);
            (
                nn * hh * bb,
                nn * t.a_ff,
                nn * t.a_fa + nn * coef,
                nn * nn * bb + nn * (nn + 1) * coef,
                Some(nn * hh * sel.a_mux),
                0,
            )
        }
        Method::Fdprt => {
            let t = tree_resources(nn, bb);
            (nn * nn * bb, nn * t.a_ff, nn * t.a_fa, 0, Some(2 * nn * nn * bb), 0)
        }
        Method::Isfdprt => {
            let t = tree_resources(hh, coef);
            let sel = tree_resources(k + 1, coef);
            (
                nn * hh * coef,
                (nn + 1) * t.a_ff + 3 * nn * wide,
                (nn + 1) * t.a_fa + 2 * nn * wide,
                nn * nn * wide,
                Some(nn * hh * sel.a_mux),
                nn,
            )
        }
        Method::Ifdprt => {
            let t = tree_resources(nn, coef);
            (
                nn * nn * coef,
                (nn + 1) * t.a_ff + nn * wide,
                (nn + 1) * t.a_fa + nn * wide,
                0,
                Some(nn * nn * coef),
                nn,
            )
        }
    };

    let per_divider = wide * wide;
    let divider_flipflops = dividers * 3 * per_divider;
    Ok(ResourceReport {
        method,
        n,
        bits: b,
        h,
        register_array_bits: reg,
        adder_tree_flipflops: tree_ff,
        one_bit_additions: adds + dividers * per_divider,
        ram_bits: ram,
        mux_count: mux.map(|m| m + dividers * per_divider),
        divider_count: dividers,
        divider_flipflops,
        total_flipflops: reg + tree_ff + divider_flipflops,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(method: Method, h: Option<usize>) -> ResourceReport {
        resource_model(method, 251, 8, h).unwrap()
    }

    #[test]
    fn systolic_flipflops() {
        let r = model(Method::Systolic, None);
        assert_eq!(r.register_array_bits, 251 * 252 * 8);
        assert_eq!(r.adder_tree_flipflops, 252 * (3 * 8 + 2 * 8));
        assert_eq!(r.total_flipflops, 516_096);
        assert_eq!(r.mux_count, None);
    }

    #[test]
    fn memory_and_mux_totals() {
        assert_eq!(model(Method::Serial, None).ram_bits, 504_008);
        assert_eq!(model(Method::Systolic, None).ram_bits, 1_012_032);
        for h in [2, 17, 84, 126, 251] {
            assert_eq!(model(Method::Sfdprt, Some(h)).ram_bits, 1_516_040);
        }
        assert_eq!(model(Method::Fdprt, None).mux_count, Some(1_008_016));
        assert_eq!(model(Method::Sfdprt, Some(84)).mux_count, Some(506_016));
        assert_eq!(model(Method::Fdprt, None).ram_bits, 0);
        assert_eq!(model(Method::Ifdprt, None).ram_bits, 0);
    }

    #[test]
    fn two_row_strips_use_minimal_trees() {
        let r = resource_model(Method::Sfdprt, 7, 8, Some(2)).unwrap();
        assert_eq!(r.adder_tree_flipflops, 7 * 9);
        assert_eq!(r.one_bit_additions, 7 * 8 + 7 * 11);
        assert_eq!(r.register_array_bits, 7 * 2 * 8);
    }

    #[test]
    fn divider_costs_are_folded_in() {
        let n = 7u64;
        let wide = 8 + 2 * 3;
        let r = resource_model(Method::Ifdprt, 7, 8, None).unwrap();
        assert_eq!(r.divider_count, 7);
        assert_eq!(r.divider_flipflops, n * 3 * wide * wide);
        assert_eq!(
            r.total_flipflops,
            r.register_array_bits + r.adder_tree_flipflops + r.divider_flipflops
        );
        let t = tree_resources(7, 11);
        assert_eq!(r.one_bit_additions, 8 * t.a_fa + n * wide + n * wide * wide);
        assert_eq!(r.mux_count, Some(n * n * 11 + n * wide * wide));
    }

    #[test]
    fn scalable_inverse_rows() {
        let r = resource_model(Method::Isfdprt, 7, 8, Some(3)).unwrap();
        let t = tree_resources(3, 11);
        let sel = tree_resources(4, 11);
        let wide = 14u64;
        assert_eq!(r.register_array_bits, 7 * 3 * 11);
        assert_eq!(r.adder_tree_flipflops, 8 * t.a_ff + 3 * 7 * wide);
        assert_eq!(r.ram_bits, 49 * wide);
        assert_eq!(r.mux_count, Some(7 * 3 * sel.a_mux + 7 * wide * wide));
    }

    #[test]
    fn argument_errors() {
        assert_eq!(
            resource_model(Method::Isfdprt, 7, 8, None),
            Err(CostError::MissingStripHeight("isfdprt"))
        );
        assert_eq!(resource_model(Method::Fdprt, 8, 8, None), Err(CostError::NotPrime(8)));
        assert!(resource_model(Method::Fdprt, 7, 0, None).is_err());
    }
}
