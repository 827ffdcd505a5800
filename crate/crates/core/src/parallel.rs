use std::thread;

/// Evaluates `f(0..n)` on up to `threads` scoped threads. Output order is
/// index order regardless of the thread count.
pub(crate) fn map_indices<T, F>(n: usize, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let threads = threads.clamp(1, n.max(1));
    if threads == 1 {
        return (0..n).map(f).collect();
    }
    let chunk = n.div_ceil(threads);
    let f = &f;
    thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let range = (t * chunk).min(n)..((t + 1) * chunk).min(n);
                scope.spawn(move || range.map(f).collect::<Vec<T>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_independent_of_threads() {
        let serial = map_indices(37, 1, |i| i * i);
        for t in [2, 3, 8, 64] {
            assert_eq!(map_indices(37, t, |i| i * i), serial);
        }
        assert!(map_indices(0, 4, |i| i).is_empty());
    }
}
