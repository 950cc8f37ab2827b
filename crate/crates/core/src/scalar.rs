//! Scalar traits shared by the exact arithmetic modules.
//!
//! Integer linear algebra is written against [`IntScalar`] and cyclotomic
//! arithmetic against [`FieldScalar`]. The pipeline instantiates them with
//! arbitrary-precision types (see the aliases at the crate root); machine
//! integers and `Ratio<i64>` also satisfy the bounds and are handy in tests,
//! but their arithmetic is unchecked.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact signed integer type.
pub trait IntScalar:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive
{
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive
{
}

/// An exact field of characteristic zero, in practice the rationals.
pub trait FieldScalar: Num + Clone + Debug + Neg<Output = Self> + FromPrimitive {}

impl<T> FieldScalar for T where T: Num + Clone + Debug + Neg<Output = T> + FromPrimitive {}
