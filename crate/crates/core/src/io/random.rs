//! Seeded random contexts.
//!
//! The generator is SplitMix64: the state advances by `0x9E3779B97F4A7C15`
//! and each output is the state passed through the SplitMix64 finaliser.
//! Cells are visited in row-major order (last dimension fastest); a cell is
//! crossed when `(next() >> 11) · 2^-53 < density`. Dimension `i` (1-based)
//! is named `dim<i>` and its elements are the `i`-th lowercase letter
//! followed by a 1-based index (`a1 a2 …`, `b1 b2 …`), or `d<i>_<k>` past
//! the 26th dimension.

use crate::context::{Dimension, NContext};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

pub fn generate_random(sizes: &[usize], density: f64, seed: u64) -> Result<NContext> {
    if sizes.is_empty() {
        return Err(Error::InvalidSizes(
            "at least one dimension is required".into(),
        ));
    }
    if let Some(pos) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidSizes(format!(
            "dimension {} has size 0",
            pos + 1
        )));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidProbability(density));
    }
    let dims = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let labels = (1..=s).map(|k| match u8::try_from(i).ok().filter(|&i| i < 26) {
                Some(i) => format!("{}{k}", char::from(b'a' + i)),
                None => format!("d{}_{k}", i + 1),
            });
            Dimension::new(format!("dim{}", i + 1), labels)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rng = SplitMix64::new(seed);
    let mut tuples = Vec::new();
    let mut cell = vec![0usize; sizes.len()];
    loop {
        if rng.next_f64() < density {
            tuples.push(cell.clone());
        }
        // odometer increment, last dimension fastest
        let mut d = sizes.len();
        loop {
            if d == 0 {
                return NContext::new(dims, tuples);
            }
            d -= 1;
            cell[d] += 1;
            if cell[d] < sizes[d] {
                break;
            }
            cell[d] = 0;
        }
    }
}
