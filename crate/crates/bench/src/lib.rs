//! Fixed workloads shared by the criterion benches.

use gsym_core::partitions::Partition;

/// `(n, s, kmax)` triples used for table construction.
pub const TABLE_SIZES: &[(usize, u32, usize)] = &[(3, 2, 6), (4, 2, 8), (4, 4, 8)];

/// Partitions whose root-of-unity values are benchmarked, paired with `s`.
pub fn root_cases() -> Vec<(Partition, u32)> {
    vec![
        (Partition::new(vec![3, 2, 1]).unwrap(), 5),
        (Partition::new(vec![2, 2, 1, 1, 1]).unwrap(), 7),
        (Partition::new(vec![1; 8]).unwrap(), 8),
    ]
}
