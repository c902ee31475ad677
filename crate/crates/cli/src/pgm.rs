//! Portable graymap reading and writing, plain (`P2`) and raw (`P5`).

use dprt_core::{ceil_log2, Image};
use thiserror::Error;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PgmError {
    #[error("not a PGM file (expected P2 or P5)")]
    BadMagic,
    #[error("truncated header")]
    TruncatedHeader,
    #[error("invalid header field {0:?}")]
    BadField(String),
    #[error("maxval must be in 1..=65535, got {0}")]
    BadMaxval(u32),
    #[error("expected {expected} pixels, found {found}")]
    TooFewPixels { expected: usize, found: usize },
    #[error("pixel {index} = {value} exceeds maxval {maxval}")]
    PixelAboveMaxval { index: usize, value: u32, maxval: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmFormat {
    Plain,
    Raw,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pgm {
    pub width: usize,
    pub height: usize,
    pub maxval: u32,
    pub pixels: Vec<u32>,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

fn parse_number(tok: &[u8]) -> Result<u32, PgmError> {
    std::str::from_utf8(tok)
        .ok()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| PgmError::BadField(String::from_utf8_lossy(tok).into_owned()))
}

impl<'a> Cursor<'a> {
    fn skip_space(&mut self) {
        while let Some(&c) = self.bytes.get(self.pos) {
            if c == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.pos += 1;
                }
            } else if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_space();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|c| !c.is_ascii_whitespace() && *c != b'#')
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }

    fn number(&mut self) -> Result<u32, PgmError> {
        parse_number(self.token().ok_or(PgmError::TruncatedHeader)?)
    }
}

pub fn parse(bytes: &[u8]) -> Result<Pgm, PgmError> {
    let format = match bytes.get(..2) {
        Some(b"P2") => PgmFormat::Plain,
        Some(b"P5") => PgmFormat::Raw,
        _ => return Err(PgmError::BadMagic),
    };
    let mut cur = Cursor { bytes, pos: 2 };
    let width = cur.number()? as usize;
    let height = cur.number()? as usize;
    let maxval = cur.number()?;
    if maxval == 0 || maxval > 65535 {
        return Err(PgmError::BadMaxval(maxval));
    }
    let count = width * height;
    let pixels: Vec<u32> = match format {
        PgmFormat::Plain => {
            let mut v = Vec::with_capacity(count);
            for _ in 0..count {
                let tok = cur.token().ok_or(PgmError::TooFewPixels {
                    expected: count,
                    found: v.len(),
                })?;
                v.push(parse_number(tok)?);
            }
            v
        }
        PgmFormat::Raw => {
            // exactly one whitespace byte separates the header from the raster
            let data = bytes.get(cur.pos + 1..).unwrap_or(&[]);
            let wide = maxval > 255;
            let per = if wide { 2 } else { 1 };
            if data.len() < count * per {
                return Err(PgmError::TooFewPixels {
                    expected: count,
                    found: data.len() / per,
                });
            }
            if wide {
                data[..count * 2]
                    .chunks_exact(2)
                    .map(|c| u32::from(u16::from_be_bytes([c[0], c[1]])))
                    .collect()
            } else {
                data[..count].iter().map(|&b| u32::from(b)).collect()
            }
        }
    };
    if let Some((index, &value)) = pixels.iter().enumerate().find(|(_, &v)| v > maxval) {
        return Err(PgmError::PixelAboveMaxval { index, value, maxval });
    }
    Ok(Pgm {
        width,
        height,
        maxval,
        pixels,
    })
}

pub fn write(pgm: &Pgm, format: PgmFormat) -> Vec<u8> {
    let magic = match format {
        PgmFormat::Plain => "P2",
        PgmFormat::Raw => "P5",
    };
    let mut out = format!("{magic}\n{} {}\n{}\n", pgm.width, pgm.height, pgm.maxval).into_bytes();
    match format {
        PgmFormat::Plain => {
            for row in pgm.pixels.chunks(pgm.width.max(1)) {
                let line: Vec<String> = row.iter().map(u32::to_string).collect();
                out.extend_from_slice(line.join(" ").as_bytes());
                out.push(b'\n');
            }
        }
        PgmFormat::Raw if pgm.maxval > 255 => {
            for &p in &pgm.pixels {
                out.extend_from_slice(&(p as u16).to_be_bytes());
            }
        }
        PgmFormat::Raw => out.extend(pgm.pixels.iter().map(|&p| p as u8)),
    }
    out
}

impl Pgm {
    /// Converts to an image of `bits`-bit pixels, by default the narrowest
    /// width that holds `maxval`.
    pub fn to_image(&self, bits: Option<u32>) -> Result<Image, CliError> {
        if self.width != self.height {
            return Err(CliError::Config(format!(
                "image must be square, got {}x{}",
                self.width, self.height
            )));
        }
        let bits = bits.unwrap_or_else(|| ceil_log2(u64::from(self.maxval) + 1));
        if bits < 32 && u64::from(self.maxval) > (1u64 << bits) - 1 {
            return Err(CliError::Config(format!(
                "maxval {} does not fit in {bits} bits",
                self.maxval
            )));
        }
        let pixels = self.pixels.iter().map(|&p| u64::from(p)).collect();
        Ok(Image::new(self.width, bits, pixels)?)
    }

    pub fn from_image(img: &Image) -> Result<Pgm, CliError> {
        if img.bits() > 16 {
            return Err(CliError::Config(format!(
                "PGM holds at most 16 bits per pixel, image has {}",
                img.bits()
            )));
        }
        Ok(Pgm {
            width: img.n(),
            height: img.n(),
            maxval: (1u32 << img.bits()) - 1,
            pixels: img.pixels().iter().map(|&p| p as u32).collect(),
        })
    }
}
