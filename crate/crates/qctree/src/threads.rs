//! Shared rayon pool sized by the `QCTREE_THREADS` environment variable.

use std::sync::OnceLock;

static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();

/// Pool for internal enumeration parallelism. `QCTREE_THREADS` caps the
/// worker count; unset or unparsable values fall back to the rayon default.
pub(crate) fn pool() -> &'static rayon::ThreadPool {
    POOL.get_or_init(|| {
        let threads = std::env::var("QCTREE_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool builds")
    })
}
