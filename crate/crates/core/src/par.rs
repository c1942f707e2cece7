//! Execution mode for the data-parallel loops (Ass enumeration, per-index
//! checks, step verification, oracle scans).

/// How independent work items are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Rayon work stealing when the `parallel` feature is on; sequential
    /// otherwise.
    #[default]
    Parallel,
}

impl Exec {
    /// Maps `f` over `items`, keeping input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            Exec::Parallel => par_map(items, f),
        }
    }

    /// Whether `f` holds for every item. Stops early in sequential mode.
    pub fn all<T, F>(self, items: &[T], f: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().all(f),
            Exec::Parallel => par_all(items, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn par_map<T: Sync, R: Send, F: Fn(&T) -> R + Sync + Send>(items: &[T], f: F) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Sync, R: Send, F: Fn(&T) -> R + Sync + Send>(items: &[T], f: F) -> Vec<R> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
fn par_all<T: Sync, F: Fn(&T) -> bool + Sync + Send>(items: &[T], f: F) -> bool {
    use rayon::prelude::*;
    items.par_iter().all(f)
}

#[cfg(not(feature = "parallel"))]
fn par_all<T: Sync, F: Fn(&T) -> bool + Sync + Send>(items: &[T], f: F) -> bool {
    items.iter().all(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..100).collect();
        let a = Exec::Sequential.map(&xs, |x| x * x);
        let b = Exec::Parallel.map(&xs, |x| x * x);
        assert_eq!(a, b);
        assert!(Exec::Parallel.all(&xs, |x| *x < 100));
    }
}
