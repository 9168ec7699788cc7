//! Fixture inputs shared by the benchmarks.

/// The three worked examples, as `(text, n)`.
pub const EXAMPLES: [(&str, usize); 3] = [
    ("x1^2 + x1*x2^4 + x2^3*x3 + x3^3", 3),
    ("x1^2 + x2*x3", 3),
    ("x2*x3 + x1^2*x2^2 + x1^2*x3^2", 3),
];

/// A denser four-variable input.
pub const WIDE: (&str, usize) = ("x1^3 + x2^4 + x3^5 + x4^2*x1 + x1*x2*x3 + x2^2*x4^3", 4);
