//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the `parallel` flag selects rayon; without it
//! the flag is ignored and everything runs on the calling thread. Results
//! are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// First `Some` in index order.
pub fn find_map_first<T, R, F>(items: &[T], parallel: bool, f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().find_map_first(f);
    }
    let _ = parallel;
    items.iter().find_map(f)
}

/// Order-preserving map.
pub fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Whether this build can run anything in parallel.
pub const fn available() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_map_first_respects_order() {
        let items: Vec<u32> = (0..1000).collect();
        for parallel in [false, true] {
            let hit = find_map_first(&items, parallel, |&x| (x % 97 == 3 && x > 10).then_some(x));
            assert_eq!(hit, Some(100));
        }
    }

    #[test]
    fn map_preserves_order() {
        let items: Vec<u64> = (0..500).collect();
        assert_eq!(map(&items, true, |x| x * x), map(&items, false, |x| x * x));
    }
}
