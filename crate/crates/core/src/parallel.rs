//! Deterministic chunked parallelism over index ranges.
//!
//! Enumerations in this crate are indexed 0..total (mixed-radix tuples,
//! combination ranks). Workers take contiguous chunks and results merge in
//! chunk order, so every outcome is byte-identical for any worker count.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::thread;

/// Returns the lowest index in `0..total` where `probe` yields `Some`,
/// together with the probe result.
///
/// A worker aborts only when a lower-indexed chunk has already found a
/// hit; its own result could never win, so the returned minimum does not
/// depend on the worker count.
pub fn find_first<T: Send>(
    total: u64,
    workers: usize,
    probe: impl Fn(u64) -> Option<T> + Sync,
) -> Option<(u64, T)> {
    let workers = effective_workers(total, workers);
    if workers <= 1 {
        return (0..total).find_map(|i| probe(i).map(|t| (i, t)));
    }
    let winning_chunk = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<(u64, T)>> = thread::scope(|scope| {
        let probe = &probe;
        let winning_chunk = &winning_chunk;
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let lo = total * w as u64 / workers as u64;
                    let hi = total * (w as u64 + 1) / workers as u64;
                    for i in lo..hi {
                        if winning_chunk.load(Ordering::Relaxed) < w {
                            return None;
                        }
                        if let Some(t) = probe(i) {
                            winning_chunk.fetch_min(w, Ordering::Relaxed);
                            return Some((i, t));
                        }
                    }
                    None
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    results.into_iter().flatten().next()
}

/// Folds `0..total` into per-chunk accumulators and merges them in chunk
/// order. `step` returning true signals saturation: the computation's
/// outcome can no longer change, and all workers may stop.
///
/// Callers must pick `merge` and the saturation condition so that the
/// merged value is the same whether or not other chunks cut off early
/// (row-space accumulation saturating at full rank has this property).
pub fn fold_chunks<A: Send>(
    total: u64,
    workers: usize,
    make: impl Fn() -> A + Sync,
    step: impl Fn(&mut A, u64) -> bool + Sync,
    merge: impl FnMut(A, A) -> A,
) -> A {
    let workers = effective_workers(total, workers);
    if workers <= 1 {
        let mut acc = make();
        for i in 0..total {
            if step(&mut acc, i) {
                break;
            }
        }
        return acc;
    }
    let saturated = AtomicBool::new(false);
    let parts: Vec<A> = thread::scope(|scope| {
        let make = &make;
        let step = &step;
        let saturated = &saturated;
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let lo = total * w as u64 / workers as u64;
                    let hi = total * (w as u64 + 1) / workers as u64;
                    let mut acc = make();
                    for i in lo..hi {
                        if saturated.load(Ordering::Relaxed) {
                            break;
                        }
                        if step(&mut acc, i) {
                            saturated.store(true, Ordering::Relaxed);
                            break;
                        }
                    }
                    acc
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut parts = parts.into_iter();
    let first = parts.next().expect("at least one chunk");
    parts.fold(first, merge)
}

fn effective_workers(total: u64, workers: usize) -> usize {
    workers.max(1).min(total.max(1).min(usize::MAX as u64) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_first_minimal_hit_is_worker_independent() {
        let probe = |i: u64| if i % 37 == 5 { Some(i * 2) } else { None };
        let expected = Some((5, 10));
        for workers in [1, 2, 3, 8, 64] {
            assert_eq!(find_first(10_000, workers, probe), expected, "workers {workers}");
        }
        assert_eq!(find_first::<u64>(4, 3, |_| None), None);
        assert_eq!(find_first::<u64>(0, 3, |_| Some(1)), None);
    }

    #[test]
    fn fold_chunks_merges_in_order() {
        for workers in [1, 2, 5, 16] {
            let sum = fold_chunks(
                1000,
                workers,
                || 0u64,
                |acc, i| {
                    *acc += i;
                    false
                },
                |a, b| a + b,
            );
            assert_eq!(sum, 999 * 1000 / 2, "workers {workers}");
        }
    }
}
