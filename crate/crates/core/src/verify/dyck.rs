use crate::error::{invalid, Result};

/// Number of Dyck words of length `2·half` whose height (maximum prefix
/// excess of ones over zeros) is at most `max_height`, by dynamic
/// programming over (position, height).
pub fn dyck_count_exact(half: usize, max_height: Option<usize>) -> Result<u128> {
    if half > 32 {
        return Err(invalid(format!("half length {half} exceeds 32")));
    }
    let cap = max_height.unwrap_or(half).min(half);
    let mut ways = vec![0u128; cap + 1];
    ways[0] = 1;
    for _ in 0..2 * half {
        let mut next = vec![0u128; cap + 1];
        for (h, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            if h < cap {
                next[h + 1] += w;
            }
            if h > 0 {
                next[h - 1] += w;
            }
        }
        ways = next;
    }
    Ok(ways[0])
}

/// The Catalan number `binom(2m, m)/(m+1)`.
pub fn catalan(m: usize) -> u128 {
    let mut c = 1u128;
    for i in 0..m as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
