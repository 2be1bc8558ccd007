use nbracket_core::expand::{BlockRunner, ClassCounts, OraclePlan};
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

use crate::config::Threads;

/// Rank blocks per run. Fixed so the partition does not depend on the
/// thread count; merging is exact either way.
const BLOCKS: u64 = 1024;

/// Oracle runner that spreads permutation ranks over a rayon pool.
pub struct Parallel {
    pool: ThreadPool,
}

impl Parallel {
    pub fn new(threads: Threads) -> Result<Self, ThreadPoolBuildError> {
        let mut builder = ThreadPoolBuilder::new();
        if let Threads::Fixed(n) = threads {
            builder = builder.num_threads(n.get());
        }
        Ok(Parallel { pool: builder.build()? })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl BlockRunner for Parallel {
    fn run(&self, plan: &OraclePlan) -> ClassCounts {
        let total = plan.permutation_count();
        let blocks = BLOCKS.min(total).max(1);
        let chunk = total.div_ceil(blocks);
        self.pool.install(|| {
            (0..blocks)
                .into_par_iter()
                .map(|b| plan.run_block((b * chunk).min(total)..((b + 1) * chunk).min(total)))
                .reduce(ClassCounts::default, |mut a, b| {
                    a.merge(b);
                    a
                })
        })
    }
}
