use std::collections::VecDeque;

use rand::{Rng, RngCore};

/// One unit of measurement randomness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Draw {
    /// Uniform sample in `[0, 1)` resolved against cumulative probabilities.
    Uniform(f64),
    /// Deterministic choice of outcome index.
    Forced(usize),
}

/// Source of measurement randomness.
///
/// Every seeded generator is a sampler. [`ForcedOutcomes`] replaces the
/// randomness with a scripted list of outcomes so that each branch of a
/// protocol can be driven on purpose.
pub trait OutcomeSampler {
    fn next_draw(&mut self) -> Draw;
}

impl<R: RngCore + ?Sized> OutcomeSampler for R {
    fn next_draw(&mut self) -> Draw {
        Draw::Uniform(self.gen::<f64>())
    }
}

/// Scripted outcomes, consumed in order.
///
/// # Panics
///
/// Drawing from an exhausted script panics.
#[derive(Debug, Clone, Default)]
pub struct ForcedOutcomes {
    queue: VecDeque<usize>,
}

impl ForcedOutcomes {
    pub fn new(outcomes: impl IntoIterator<Item = usize>) -> Self {
        Self { queue: outcomes.into_iter().collect() }
    }

    pub fn remaining(&self) -> usize {
        self.queue.len()
    }
}

impl OutcomeSampler for ForcedOutcomes {
    fn next_draw(&mut self) -> Draw {
        let outcome = self.queue.pop_front().expect("forced outcome script exhausted");
        Draw::Forced(outcome)
    }
}
