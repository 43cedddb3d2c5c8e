use std::collections::HashSet;
use std::sync::RwLock;

// Append-only; every reader sees a prefix of the same sequence.
static MIAN_CHOWLA: RwLock<Vec<u64>> = RwLock::new(Vec::new());

/// First `len` terms of the Mian–Chowla sequence `1, 2, 4, 8, 13, 21, ...`:
/// each term is the smallest integer keeping all sums `a_i + a_j` (`i <= j`)
/// distinct.
pub fn mian_chowla(len: usize) -> Vec<u64> {
    {
        let cached = MIAN_CHOWLA.read().unwrap();
        if cached.len() >= len {
            return cached[..len].to_vec();
        }
    }
    let mut cached = MIAN_CHOWLA.write().unwrap();
    let mut sums: HashSet<u64> = HashSet::new();
    for (k, &a) in cached.iter().enumerate() {
        for &b in &cached[..=k] {
            sums.insert(a + b);
        }
    }
    let mut candidate = cached.last().copied().unwrap_or(0);
    while cached.len() < len {
        candidate += 1;
        let fits = cached
            .iter()
            .chain(std::iter::once(&candidate))
            .all(|&a| !sums.contains(&(a + candidate)));
        if fits {
            for &a in cached.iter() {
                sums.insert(a + candidate);
            }
            sums.insert(2 * candidate);
            cached.push(candidate);
        }
    }
    cached[..len].to_vec()
}
