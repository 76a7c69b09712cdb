//! Data-parallel driver for the embarrassingly parallel inner loops (RHom
//! tables, the check registry, corpus sweeps). With the default `parallel`
//! feature the work runs on rayon; without it, or with
//! [`ExecMode::Sequential`], everything runs on the calling thread. Output
//! order always matches input order.

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

/// Applies `f` to `0..n`, preserving index order in the result.
pub fn map_indexed<T, F>(mode: ExecMode, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = mode;
    (0..n).map(f).collect()
}

pub fn map_slice<'a, S, T, F>(mode: ExecMode, items: &'a [S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&'a S) -> T + Sync + Send,
{
    map_indexed(mode, items.len(), |i| f(&items[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let seq = map_indexed(ExecMode::Sequential, 100, |i| i * i);
        let par = map_indexed(ExecMode::Parallel, 100, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}
