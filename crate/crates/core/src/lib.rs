//! Exact integer Discrete Periodic Radon Transform (DPRT) for prime-sized images.
//!
//! The forward transform maps an `N x N` image of `B`-bit pixels onto `N + 1`
//! periodic projections of `N` sums each. With `N` prime the transform is
//! invertible using only integer additions, one subtraction and an exact
//! division by `N`.
//!
//! [`transform`] holds the reference forward/inverse pair that every other
//! part of the workspace is checked against. [`strip`] decomposes both
//! transforms into partial transforms over horizontal strips of rows, which
//! is the basis of the scalable hardware architectures.
//!
//! ```
//! use dprt_core::{forward_dprt, inverse_dprt, Image};
//!
//! let img = Image::new(3, 4, vec![1, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap();
//! let sinogram = forward_dprt(&img);
//! assert_eq!(sinogram.projection(3), &[6, 15, 24]);
//! assert_eq!(inverse_dprt(&sinogram).unwrap(), img);
//! ```

pub mod error;
pub mod image;
pub mod modular;
pub mod radon;
pub mod strip;
pub mod transform;

pub use error::{DprtError, InvalidReason, Result};
pub use image::Image;
pub use modular::{ceil_log2, is_prime, mod_index, output_width};
pub use radon::RadonArray;
pub use strip::{
    accumulate_partials, combine_partial_idprt, partial_dprt, partial_idprt, PartialBackprojection,
    PartialRadon, StripPlan,
};
pub use transform::{forward_dprt, inverse_dprt, normalize_pixel, total_sum};

/// Largest pixel width accepted by [`Image`] and [`RadonArray`].
///
/// Keeps every intermediate of the inverse (at most `(N + 1) * N * 2^B`) well
/// inside `u64` for any side length that fits in memory.
pub const MAX_BITS: u32 = 32;
