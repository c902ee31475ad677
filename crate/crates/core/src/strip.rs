//! Strip decomposition of the forward and inverse transforms.
//!
//! The image (or, for the inverse, the first `N` projections) is cut into
//! `K = ceil(N / H)` strips of `H` consecutive rows, the last one holding the
//! remaining `N - (K - 1) H` rows. Each strip yields a partial transform and
//! the partials add up to the full result.

use crate::error::{DprtError, Result};
use crate::image::{check_side, Image};
use crate::modular::{ceil_log2, wrap, wrap_sub};
use crate::radon::RadonArray;
use crate::transform::{normalize_pixel, total_sum};

/// How `N` rows are split into strips of height `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StripPlan {
    n: usize,
    h: usize,
    k: usize,
    lengths: Vec<usize>,
    h_lat: u32,
}

impl StripPlan {
    /// Plan for side `n` with strips of height `h`, `2 <= h <= n`.
    ///
    /// `h == n` degenerates to a single full strip.
    pub fn new(n: usize, h: usize) -> Result<Self> {
        check_side(n)?;
        if h < 2 || h > n {
            return Err(DprtError::InvalidArgument(format!(
                "strip height must be in 2..={n}, got {h}"
            )));
        }
        let k = n.div_ceil(h);
        let mut lengths = vec![h; k];
        lengths[k - 1] = n - (k - 1) * h;
        Ok(StripPlan {
            n,
            h,
            k,
            lengths,
            h_lat: ceil_log2(h as u64),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Strip height `H`.
    pub fn height(&self) -> usize {
        self.h
    }

    /// Number of strips `K`.
    pub fn strips(&self) -> usize {
        self.k
    }

    /// Rows in strip `r`, `L(r)`.
    pub fn len(&self, r: usize) -> usize {
        self.lengths[r]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Latency of an `H`-operand pipelined adder tree, `ceil(log2 H)`.
    pub fn tree_latency(&self) -> u32 {
        self.h_lat
    }

    /// First row covered by strip `r`.
    pub fn start(&self, r: usize) -> usize {
        r * self.h
    }

    fn check_strip(&self, r: usize) -> Result<()> {
        if r >= self.k {
            return Err(DprtError::InvalidArgument(format!(
                "strip index {r} out of range 0..{}",
                self.k
            )));
        }
        Ok(())
    }
}

/// Contribution of strip `r` to every coefficient of the forward transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialRadon {
    pub r: usize,
    n: usize,
    bits: u32,
    h: usize,
    values: Vec<u64>,
}

impl PartialRadon {
    #[inline]
    pub fn get(&self, m: usize, d: usize) -> u64 {
        self.values[m * self.n + d]
    }

    pub fn projection(&self, m: usize) -> &[u64] {
        &self.values[m * self.n..(m + 1) * self.n]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// Partial DPRT of strip `r`:
///
/// * `R'(r, m, d) = sum_{i < L(r)} f(i + rH, <d + m (i + rH)>_N)` for `m < N`
/// * `R'(r, N, d) = sum_{j < L(r)} f(d, j + rH)`
pub fn partial_dprt(img: &Image, plan: &StripPlan, r: usize) -> Result<PartialRadon> {
    same_side(img.n(), plan)?;
    plan.check_strip(r)?;
    let n = plan.n;
    let rows = plan.start(r)..plan.start(r) + plan.len(r);
    let mut values = vec![0u64; (n + 1) * n];
    for m in 0..n {
        for d in 0..n {
            values[m * n + d] = rows.clone().map(|q| img.get(q, wrap(d, m, q, n))).sum();
        }
    }
    for d in 0..n {
        values[n * n + d] = img.row(d)[rows.clone()].iter().sum();
    }
    Ok(PartialRadon {
        r,
        n,
        bits: img.bits(),
        h: plan.h,
        values,
    })
}

/// Sums a full set of partials (each strip exactly once) into the transform.
pub fn accumulate_partials(parts: &[PartialRadon]) -> Result<RadonArray> {
    let first = parts
        .first()
        .ok_or_else(|| DprtError::InvalidArgument("no partial transforms given".into()))?;
    let (n, bits, h) = (first.n, first.bits, first.h);
    let k = n.div_ceil(h);
    check_cover(parts.iter().map(|p| p.r), k)?;
    if parts.iter().any(|p| p.n != n || p.bits != bits || p.h != h) {
        return Err(DprtError::InvalidArgument(
            "partial transforms come from different plans".into(),
        ));
    }
    let mut values = vec![0u64; (n + 1) * n];
    for p in parts {
        for (acc, v) in values.iter_mut().zip(&p.values) {
            *acc += v;
        }
    }
    RadonArray::new(n, bits, values)
}

/// Partial backprojection of strip `r` of the first `N` projections:
/// `f'(r, i, j) = sum_{m < L(r)} R(m + rH, <j - i (m + rH)>_N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialBackprojection {
    pub r: usize,
    n: usize,
    h: usize,
    values: Vec<u64>,
}

impl PartialBackprojection {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.values[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

pub fn partial_idprt(r_arr: &RadonArray, plan: &StripPlan, r: usize) -> Result<PartialBackprojection> {
    same_side(r_arr.n(), plan)?;
    plan.check_strip(r)?;
    let n = plan.n;
    let dirs = plan.start(r)..plan.start(r) + plan.len(r);
    let mut values = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            values[i * n + j] = dirs.clone().map(|m| r_arr.get(m, wrap_sub(j, i, m, n))).sum();
        }
    }
    Ok(PartialBackprojection {
        r,
        n,
        h: plan.h,
        values,
    })
}

/// Recombines all partial backprojections with `S` and `R(N, .)` from
/// `r_arr`: `f(i, j) = (sum_r f'(r, i, j) - S + R(N, i)) / N`.
///
/// Fails exactly where [`crate::inverse_dprt`] fails.
pub fn combine_partial_idprt(parts: &[PartialBackprojection], r_arr: &RadonArray) -> Result<Image> {
    let first = parts
        .first()
        .ok_or_else(|| DprtError::InvalidArgument("no partial backprojections given".into()))?;
    let (n, h) = (first.n, first.h);
    if n != r_arr.n() || parts.iter().any(|p| p.n != n || p.h != h) {
        return Err(DprtError::InvalidArgument(
            "partial backprojections come from different plans".into(),
        ));
    }
    check_cover(parts.iter().map(|p| p.r), n.div_ceil(h))?;
    r_arr.check_projection_mass()?;
    let s = total_sum(r_arr, 0)?;
    let mut pixels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let back: u64 = parts.iter().map(|p| p.get(i, j)).sum();
            pixels.push(normalize_pixel(back + r_arr.get(n, i), s, n, r_arr.bits(), i, j)?);
        }
    }
    Image::new(n, r_arr.bits(), pixels)
}

fn same_side(n: usize, plan: &StripPlan) -> Result<()> {
    if n != plan.n {
        return Err(DprtError::InvalidArgument(format!(
            "plan is for N = {}, input has N = {n}",
            plan.n
        )));
    }
    Ok(())
}

fn check_cover(indices: impl Iterator<Item = usize>, k: usize) -> Result<()> {
    let mut seen = vec![false; k];
    for r in indices {
        match seen.get_mut(r) {
            None => {
                return Err(DprtError::InvalidArgument(format!(
                    "strip index {r} out of range 0..{k}"
                )))
            }
            Some(true) => {
                return Err(DprtError::InvalidArgument(format!("strip {r} given twice")))
            }
            Some(s) => *s = true,
        }
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(DprtError::InvalidArgument(format!("strip {missing} missing")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{forward_dprt, inverse_dprt};
    use proptest::prelude::*;

    fn running_example() -> Image {
        Image::new(3, 4, vec![1, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap()
    }

    #[test]
    fn plan_examples() {
        let p = StripPlan::new(7, 2).unwrap();
        assert_eq!((p.strips(), p.lengths()), (4, &[2, 2, 2, 1][..]));
        assert_eq!(p.tree_latency(), 1);

        let p = StripPlan::new(7, 7).unwrap();
        assert_eq!((p.strips(), p.lengths()), (1, &[7][..]));

        let p = StripPlan::new(251, 84).unwrap();
        assert_eq!((p.strips(), p.lengths()), (3, &[84, 84, 83][..]));
        assert_eq!(p.tree_latency(), 7);
    }

    #[test]
    fn plan_rejects_bad_heights() {
        assert!(StripPlan::new(7, 1).is_err());
        assert!(StripPlan::new(7, 8).is_err());
        assert!(StripPlan::new(8, 2).is_err());
    }

    #[test]
    fn plan_lengths_cover_n() {
        for n in [2usize, 3, 5, 7, 11, 13, 31, 61, 251] {
            for h in 2..=n {
                let p = StripPlan::new(n, h).unwrap();
                assert_eq!(p.lengths().iter().sum::<usize>(), n);
                if h < n {
                    assert_eq!(p.len(p.strips() - 1), n % h);
                }
            }
        }
    }

    #[test]
    fn partial_examples() {
        let img = running_example();
        let plan = StripPlan::new(3, 2).unwrap();
        let p0 = partial_dprt(&img, &plan, 0).unwrap();
        let p1 = partial_dprt(&img, &plan, 1).unwrap();
        assert_eq!(p0.projection(0), &[5, 7, 9]);
        assert_eq!(p1.projection(0), &[7, 8, 9]);
        assert_eq!(p0.projection(3), &[3, 9, 15]);
        assert_eq!(p1.projection(3), &[3, 6, 9]);
        assert!(partial_dprt(&img, &plan, 2).is_err());

        let full = accumulate_partials(&[p1, p0]).unwrap();
        assert_eq!(full, forward_dprt(&img));
    }

    #[test]
    fn single_strip_is_the_full_transform() {
        let img = running_example();
        let plan = StripPlan::new(3, 3).unwrap();
        let p = partial_dprt(&img, &plan, 0).unwrap();
        let r = forward_dprt(&img);
        assert_eq!(p.values(), r.values());
        assert_eq!(accumulate_partials(&[p]).unwrap(), r);

        let b = partial_idprt(&r, &plan, 0).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let direct: u64 = (0..3).map(|m| r.get(m, (j + 3 * 3 - m * i) % 3)).sum();
                assert_eq!(b.get(i, j), direct);
            }
        }
        assert_eq!(combine_partial_idprt(&[b], &r).unwrap(), inverse_dprt(&r).unwrap());
    }

    #[test]
    fn accumulate_rejects_bad_cover() {
        let img = running_example();
        let plan = StripPlan::new(3, 2).unwrap();
        let p0 = partial_dprt(&img, &plan, 0).unwrap();
        let p1 = partial_dprt(&img, &plan, 1).unwrap();
        assert!(accumulate_partials(std::slice::from_ref(&p0)).is_err());
        assert!(accumulate_partials(&[p0.clone(), p0.clone(), p1.clone()]).is_err());
        assert!(accumulate_partials(&[]).is_err());
        let other = partial_dprt(&img, &StripPlan::new(3, 3).unwrap(), 0).unwrap();
        assert!(accumulate_partials(&[p0, other]).is_err());
    }

    #[test]
    fn zero_partials_accumulate_to_zero() {
        let img = Image::zeros(7, 8).unwrap();
        let plan = StripPlan::new(7, 3).unwrap();
        let parts: Vec<_> = (0..plan.strips()).map(|r| partial_dprt(&img, &plan, r).unwrap()).collect();
        assert_eq!(accumulate_partials(&parts).unwrap(), RadonArray::zeros(7, 8).unwrap());

        let zero = RadonArray::zeros(7, 8).unwrap();
        let b = partial_idprt(&zero, &plan, 1).unwrap();
        assert!(b.values().iter().all(|&v| v == 0));
    }

    #[test]
    fn partial_backprojection_example() {
        let r = forward_dprt(&running_example());
        let plan = StripPlan::new(3, 2).unwrap();
        let b0 = partial_idprt(&r, &plan, 0).unwrap();
        assert_eq!(b0.get(0, 0), 12 + 15);
        let b1 = partial_idprt(&r, &plan, 1).unwrap();
        assert_eq!(combine_partial_idprt(&[b0, b1], &r).unwrap(), running_example());
    }

    #[test]
    fn combine_constant_sinogram() {
        let r = RadonArray::new(5, 8, vec![5 * 3; 30]).unwrap();
        let plan = StripPlan::new(5, 2).unwrap();
        let parts: Vec<_> = (0..plan.strips()).map(|k| partial_idprt(&r, &plan, k).unwrap()).collect();
        assert_eq!(combine_partial_idprt(&parts, &r).unwrap(), Image::constant(5, 8, 3).unwrap());
    }

    #[test]
    fn combine_rejects_invalid_sinogram() {
        let mut v = vec![1; 12];
        v[0] = 2;
        let r = RadonArray::new(3, 8, v).unwrap();
        let plan = StripPlan::new(3, 2).unwrap();
        let parts: Vec<_> = (0..2).map(|k| partial_idprt(&r, &plan, k).unwrap()).collect();
        assert!(matches!(
            combine_partial_idprt(&parts, &r),
            Err(DprtError::InvalidRadonArray(_))
        ));
    }

    #[test]
    fn all_max_partials_reach_their_bound() {
        let img = Image::constant(11, 8, 255).unwrap();
        let plan = StripPlan::new(11, 4).unwrap();
        for r in 0..plan.strips() {
            let p = partial_dprt(&img, &plan, r).unwrap();
            let bound = plan.len(r) as u64 * 255;
            assert_eq!(p.values().iter().copied().max(), Some(bound));
        }
    }

    fn arb_case() -> impl Strategy<Value = (Image, usize)> {
        (prop::sample::select(vec![3usize, 5, 7, 11, 13]), prop::sample::select(vec![1u32, 4, 8]))
            .prop_flat_map(|(n, b)| {
                (
                    prop::collection::vec(0..(1u64 << b), n * n)
                        .prop_map(move |px| Image::new(n, b, px).unwrap()),
                    2..=n,
                )
            })
    }

    proptest! {
        #[test]
        fn strips_recombine_exactly((img, h) in arb_case()) {
            let plan = StripPlan::new(img.n(), h).unwrap();
            let parts: Vec<_> = (0..plan.strips()).map(|r| partial_dprt(&img, &plan, r).unwrap()).collect();
            for p in &parts {
                let bound = plan.len(p.r) as u64 * img.max_value();
                prop_assert!(p.values().iter().all(|&v| v <= bound));
            }
            let r = forward_dprt(&img);
            prop_assert_eq!(&accumulate_partials(&parts).unwrap(), &r);

            let back: Vec<_> = (0..plan.strips()).map(|k| partial_idprt(&r, &plan, k).unwrap()).collect();
            prop_assert_eq!(combine_partial_idprt(&back, &r).unwrap(), img);
        }
    }
}
