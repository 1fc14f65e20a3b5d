//! Deterministic fan-out over threads.
//!
//! `DISKMETRICS_THREADS` caps the worker count (0 or unset = all available
//! cores). Results are positioned by input index, so the output is
//! identical for every thread count.

pub fn thread_count() -> usize {
    let configured = std::env::var("DISKMETRICS_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    match configured {
        Some(0) | None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        Some(n) => n,
    }
}

/// Order-preserving parallel map.
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let threads = thread_count().clamp(1, items.len().max(1));
    if threads <= 1 {
        return items.iter().map(&f).collect();
    }
    let mut out: Vec<Option<U>> = Vec::new();
    out.resize_with(items.len(), || None);
    let chunk = items.len().div_ceil(threads);
    let f = &f;
    std::thread::scope(|scope| {
        for (slots, inputs) in out.chunks_mut(chunk).zip(items.chunks(chunk)) {
            scope.spawn(move || {
                for (slot, item) in slots.iter_mut().zip(inputs) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    out.into_iter().map(|x| x.expect("all slots filled")).collect()
}
