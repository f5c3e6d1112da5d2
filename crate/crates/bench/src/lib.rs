//! Fixtures shared by the criterion benches.

use morley_core::verify::sample_angle_triples;
use morley_core::AngleTriple;

/// Deterministic angle triples for throughput benches.
pub fn fixture_triples(n: usize) -> Vec<AngleTriple> {
    sample_angle_triples(n, 42)
}
