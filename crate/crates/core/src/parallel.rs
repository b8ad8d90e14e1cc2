//! A dedicated thread pool with deep stacks for recursive rewriting.

use std::sync::OnceLock;

use rayon::{ThreadPool, ThreadPoolBuilder};

/// Stack size of pool workers; recursive normal forms can nest deeply.
pub const STACK_BYTES: usize = 512 << 20;

pub fn pool() -> &'static ThreadPool {
    static POOL: OnceLock<ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        ThreadPoolBuilder::new()
            .stack_size(STACK_BYTES)
            .thread_name(|i| format!("qtwist-{i}"))
            .build()
            .expect("thread pool")
    })
}

/// Runs `f` on the pool unless already on one of its workers.
pub fn in_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    if pool().current_thread_index().is_some() {
        f()
    } else {
        pool().install(f)
    }
}
