#![allow(dead_code)]

use dprt_core::Image;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn random_image(rng: &mut StdRng, n: usize, bits: u32) -> Image {
    let max = (1u64 << bits) - 1;
    Image::from_fn(n, bits, |_, _| rng.gen_range(0..=max)).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn log2c(x: u64) -> u64 {
    let mut l = 0;
    while (1u64 << l) < x {
        l += 1;
    }
    l
}

pub fn sfdprt_cycles(n: u64, h: u64) -> u64 {
    let k = n.div_ceil(h);
    k * (n + 3 * h + 3) + n + log2c(h) + 1
}

pub fn fdprt_cycles(n: u64) -> u64 {
    2 * n + log2c(n) + 1
}

pub fn isfdprt_cycles(n: u64, h: u64, b: u64, mem_in: bool) -> u64 {
    let k = n.div_ceil(h);
    k * (n + h) + log2c(h) + 3 + b + 2 * log2c(n) + if mem_in { n } else { 0 }
}

pub fn ifdprt_cycles(n: u64, b: u64) -> u64 {
    2 * n + 3 * log2c(n) + b + 2
}

pub fn example3() -> Image {
    Image::new(3, 4, (1..=9).collect()).unwrap()
}
