/// Size caps for every enumeration the crate performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest Apéry table (equivalently `R(b, n)` enumeration) built.
    pub apery: u64,
    /// Largest membership sieve, in bits.
    pub sieve_bits: u64,
    /// Largest value whose factorizations are enumerated.
    pub factorization: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            apery: 1_000_000,
            sieve_bits: 100_000_000,
            factorization: 10_000,
        }
    }
}
