//! Reproducible random-number streams.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// A (seed, stream) pair addressing one of 2⁶⁴ independent ChaCha12 streams.
///
/// The same pair always produces the same byte stream; distinct stream
/// indices under one seed are statistically independent, which is how
/// parallel Monte Carlo stays independent of thread count: derive one
/// substream per sample index and aggregate in index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    stream: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream { seed, stream: 0 }
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        RngStream { seed, stream }
    }

    /// Stream for a derived index (sample number, coordinate block, …).
    pub fn substream(&self, index: u64) -> Self {
        RngStream { seed: self.seed, stream: self.stream.wrapping_add(index) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Instantiates the generator for this stream.
    pub fn rng(&self) -> ChaCha12Rng {
        let mut rng = ChaCha12Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}
