//! Thin switch between rayon and sequential iteration.
//!
//! Per-block solves are independent, so the data-parallel map is safe; the
//! sequential fallback keeps the crate usable without the `parallel`
//! feature and produces identical output.

#[cfg(feature = "parallel")]
pub(crate) fn try_map<T, U, E, F>(items: &[T], f: F) -> Result<Vec<U>, E>
where
    T: Sync,
    U: Send,
    E: Send,
    F: Fn(&T) -> Result<U, E> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map<T, U, E, F>(items: &[T], f: F) -> Result<Vec<U>, E>
where
    T: Sync,
    U: Send,
    E: Send,
    F: Fn(&T) -> Result<U, E> + Sync + Send,
{
    items.iter().map(f).collect()
}
