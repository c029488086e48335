use std::time::Instant;

use closest_core::Control;

/// Monotonic clock measured from construction.
#[derive(Debug, Clone, Copy)]
pub struct Stopwatch(Instant);

impl Stopwatch {
    pub fn start() -> Self {
        Stopwatch(Instant::now())
    }

    pub fn elapsed_us(&self) -> u64 {
        self.0.elapsed().as_micros() as u64
    }
}

impl Default for Stopwatch {
    fn default() -> Self {
        Self::start()
    }
}

impl Control for Stopwatch {
    fn elapsed_us(&mut self) -> u64 {
        Stopwatch::elapsed_us(self)
    }
}

pub fn us_to_ms(us: u64) -> f64 {
    us as f64 / 1000.0
}
