use std::fmt;
use std::ops::Add;

/// A totally ordered value with an additive identity.
///
/// Only `min`, `max` and `+` are ever applied to weights. Floating point
/// types are admissible as long as the values are finite and nonnegative,
/// which keeps the order total.
pub trait Weight: Copy + PartialOrd + Add<Output = Self> + fmt::Debug + fmt::Display {
    const ZERO: Self;

    /// Whether the value may appear in a weighting.
    fn is_admissible(self) -> bool {
        self >= Self::ZERO
    }

    #[inline]
    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    #[inline]
    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

macro_rules! int_weight {
    ($($t:ty),*) => {$(
        impl Weight for $t {
            const ZERO: Self = 0;
        }
    )*};
}

int_weight!(u8, u16, u32, u64, u128, usize, i8, i16, i32, i64, i128, isize);

impl Weight for f64 {
    const ZERO: Self = 0.0;

    fn is_admissible(self) -> bool {
        self.is_finite() && self >= 0.0
    }
}

impl Weight for f32 {
    const ZERO: Self = 0.0;

    fn is_admissible(self) -> bool {
        self.is_finite() && self >= 0.0
    }
}
