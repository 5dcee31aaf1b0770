//! Dirichlet convolution powers of the constant function: `d_m(N)` counts
//! ordered factorisations `N = a_1 a_2 ... a_m`.

/// `d_m(N)` for `N = 0..=max` (index 0 is unused and zero).
pub fn divisor_counts(m: u32, max: usize) -> Vec<u64> {
    let mut current = vec![0u64; max + 1];
    current.iter_mut().skip(1).for_each(|v| *v = 1);
    for _ in 1..m {
        let mut next = vec![0u64; max + 1];
        for (d, &v) in current.iter().enumerate().skip(1) {
            if v == 0 {
                continue;
            }
            for multiple in (d..=max).step_by(d) {
                next[multiple] += v;
            }
        }
        current = next;
    }
    if m == 0 {
        current.iter_mut().for_each(|v| *v = 0);
        if max >= 1 {
            current[1] = 1;
        }
    }
    current
}
