use serde::{Deserialize, Serialize};

use dprt_core::is_prime;

use crate::{cycle_model, resource_model, CostError, Method, ResourceReport, Result};

/// Which scalable architecture the front points are costed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Costing {
    #[default]
    Forward,
    Inverse,
}

impl Costing {
    pub fn method(self) -> Method {
        match self {
            Costing::Forward => Method::Sfdprt,
            Costing::Inverse => Method::Isfdprt,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParetoPoint {
    pub h: usize,
    pub strips: usize,
    pub cycles: u64,
    pub resources: ResourceReport,
}

/// True when strips of height `h` need fewer passes than strips of `h - 1`.
pub fn reduces_strips(n: usize, h: usize) -> bool {
    h >= 2 && n.div_ceil(h) < n.div_ceil(h - 1)
}

/// Strip heights in `2..=(N-1)/2` that reduce the strip count, costed for
/// the forward scalable architecture.
pub fn pareto_front(n: usize, b: u32) -> Result<Vec<ParetoPoint>> {
    pareto_front_with(n, b, Costing::Forward)
}

pub fn pareto_front_with(n: usize, b: u32, costing: Costing) -> Result<Vec<ParetoPoint>> {
    if !is_prime(n as u64) {
        return Err(CostError::NotPrime(n));
    }
    let method = costing.method();
    (2..=(n - 1) / 2)
        .filter(|&h| reduces_strips(n, h))
        .map(|h| {
            Ok(ParetoPoint {
                h,
                strips: n.div_ceil(h),
                cycles: cycle_model(method, n, b, Some(h), false)?,
                resources: resource_model(method, n, b, Some(h))?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn heights(n: usize) -> Vec<usize> {
        pareto_front(n, 8).unwrap().iter().map(|p| p.h).collect()
    }

    #[test]
    fn small_fronts() {
        assert_eq!(heights(7), vec![2, 3]);
        assert_eq!(heights(5), vec![2]);
        assert!(heights(3).is_empty());
        assert_eq!(heights(31), vec![2, 3, 4, 5, 6, 7, 8, 11]);
    }

    #[test]
    fn large_front_contains_discussed_point() {
        let front = pareto_front(251, 8).unwrap();
        let p = front.iter().find(|p| p.h == 84).expect("84 on the front");
        assert_eq!(p.strips, 3);
        assert_eq!(p.cycles, 1_777);
        assert_eq!(p.resources.mux_count, Some(506_016));
        assert!(!front.iter().any(|p| p.h == 85));
    }

    #[test]
    fn inverse_costing() {
        let front = pareto_front_with(7, 8, Costing::Inverse).unwrap();
        assert_eq!(front[0].cycles, 54);
        assert_eq!(front[0].resources.method, Method::Isfdprt);
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(pareto_front(9, 8), Err(CostError::NotPrime(9)));
    }

    proptest! {
        #[test]
        fn front_cycles_strictly_decrease(
            n in prop::sample::select(vec![5usize, 7, 11, 13, 31, 61, 127, 251, 509]),
            b in 1u32..16,
        ) {
            for costing in [Costing::Forward, Costing::Inverse] {
                let front = pareto_front_with(n, b, costing).unwrap();
                for w in front.windows(2) {
                    prop_assert!(w[0].h < w[1].h);
                    prop_assert!(w[1].strips < w[0].strips);
                    prop_assert!(w[1].cycles < w[0].cycles);
                }
            }
        }
    }
}
