use serde::{Deserialize, Serialize};

/// How gate kernels partition the amplitude array across worker threads.
///
/// `threads == 1` bypasses the thread pool entirely and runs the sequential
/// kernels; this is also the only mode available when the crate is built
/// without the `parallel` feature. Outputs are bit-identical for every
/// thread count because each amplitude pair is updated independently and
/// reductions always use fixed chunk boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreadPlan {
    /// Worker thread count, >= 1.
    pub threads: usize,
    /// Minimum number of amplitudes per parallel work item.
    pub chunk: usize,
}

pub const DEFAULT_CHUNK: usize = 1 << 14;

impl ThreadPlan {
    pub fn sequential() -> Self {
        Self {
            threads: 1,
            chunk: DEFAULT_CHUNK,
        }
    }

    pub fn with_threads(threads: usize) -> Self {
        Self {
            threads: threads.max(1),
            chunk: DEFAULT_CHUNK,
        }
    }

    pub fn is_sequential(&self) -> bool {
        self.threads <= 1 || !cfg!(feature = "parallel")
    }
}

impl Default for ThreadPlan {
    fn default() -> Self {
        let threads = if cfg!(feature = "parallel") {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        } else {
            1
        };
        Self {
            threads,
            chunk: DEFAULT_CHUNK,
        }
    }
}
