//! Data-parallel execution helpers.
//!
//! With the default `parallel` feature the mapped variants fan out over
//! rayon; without it they fall back to the sequential implementations. Both
//! always produce results in input order, so callers stay deterministic
//! either way. The `_seq` twins are public so benches and tests can compare
//! the two paths directly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_range_seq<U, F>(len: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..len).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync,
{
    map_range_seq(len, f)
}

pub fn map_slice_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    map_slice_seq(items, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree_in_order() {
        let sq = |i: usize| i * i;
        assert_eq!(map_range(100, sq), map_range_seq(100, sq));
        let v: Vec<usize> = (0..50).collect();
        assert_eq!(map_slice(&v, |x| x + 1), map_slice_seq(&v, |x| x + 1));
    }
}
