//! Allocation-free permutation enumeration (Heap's algorithm, iterative).

/// Calls `visit` once for every permutation of `0..n`, reusing one buffer.
/// The order is Heap's order; callers must not rely on it beyond "each
/// permutation exactly once".
pub(crate) fn for_each_permutation<F>(n: usize, mut visit: F)
where
    F: FnMut(&[usize]),
{
    let mut items: Vec<usize> = (0..n).collect();
    visit(&items);
    if n < 2 {
        return;
    }
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            visit(&items);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}
