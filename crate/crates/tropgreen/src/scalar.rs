//! Exact scalars for the three tropical semirings.
//!
//! A [`TropScalar`] is an arbitrary-precision rational or one of the symbolic
//! infinities. Tropical addition is maximum, tropical multiplication is
//! ordinary addition, with the one completed-semiring convention
//! `(-inf) ⊗ (+inf) = (+inf) ⊗ (-inf) = -inf`. Scalars themselves are
//! flavor-agnostic; containers validate their entries against a
//! [`SemiringFlavor`] on construction.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Which of the three semirings a container lives in.
///
/// `FT` has only finite elements, `T` adds `-inf` (a zero element) and
/// `TBar` additionally adds `+inf` (a top element).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum SemiringFlavor {
    #[serde(rename = "FT")]
    FT,
    #[serde(rename = "T")]
    T,
    #[serde(rename = "TBar")]
    TBar,
}

impl SemiringFlavor {
    pub fn name(self) -> &'static str {
        match self {
            SemiringFlavor::FT => "FT",
            SemiringFlavor::T => "T",
            SemiringFlavor::TBar => "TBar",
        }
    }

    /// True when `value` belongs to this semiring.
    pub fn admits(self, value: &TropScalar) -> bool {
        match (self, value) {
            (SemiringFlavor::FT, TropScalar::Finite(_)) => true,
            (SemiringFlavor::FT, _) => false,
            (SemiringFlavor::T, TropScalar::PosInf) => false,
            (SemiringFlavor::T, _) => true,
            (SemiringFlavor::TBar, _) => true,
        }
    }

    /// The join in the containment chain `FT ⊆ T ⊆ TBar`: mixed-flavor
    /// operations land in the smallest semiring containing both inputs.
    pub fn unify(self, other: SemiringFlavor) -> SemiringFlavor {
        use SemiringFlavor::*;
        match (self, other) {
            (TBar, _) | (_, TBar) => TBar,
            (T, _) | (_, T) => T,
            (FT, FT) => FT,
        }
    }

    /// Whether the involution `x -> -x` is total on this semiring.
    pub fn involution_total(self) -> bool {
        !matches!(self, SemiringFlavor::T)
    }
}

impl fmt::Display for SemiringFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact extended rational: `-inf < q < +inf` for every rational `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropScalar {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl TropScalar {
    pub fn int(n: i64) -> Self {
        TropScalar::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        TropScalar::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropScalar::Finite(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            TropScalar::Finite(q) => Some(q),
            _ => None,
        }
    }

    /// Tropical addition: the maximum under the total order.
    pub fn t_add(&self, rhs: &TropScalar) -> TropScalar {
        if self >= rhs {
            self.clone()
        } else {
            rhs.clone()
        }
    }

    /// Tropical multiplication: ordinary addition, with
    /// `(-inf) ⊗ (+inf) = -inf` and infinities absorbing rationals.
    pub fn t_mul(&self, rhs: &TropScalar) -> TropScalar {
        use TropScalar::*;
        match (self, rhs) {
            (NegInf, _) | (_, NegInf) => NegInf,
            (PosInf, _) | (_, PosInf) => PosInf,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }

    /// The order-reversing involution, total on `FT` and `TBar`, undefined
    /// at `-inf` over `T`.
    pub fn t_neg(&self, flavor: SemiringFlavor) -> Result<TropScalar> {
        if flavor == SemiringFlavor::T && matches!(self, TropScalar::NegInf) {
            return Err(Error::UndefinedInvolution);
        }
        Ok(self.neg_unchecked())
    }

    /// The involution with `TBar` conventions, ignoring flavor legality.
    pub fn neg_unchecked(&self) -> TropScalar {
        match self {
            TropScalar::NegInf => TropScalar::PosInf,
            TropScalar::PosInf => TropScalar::NegInf,
            TropScalar::Finite(q) => TropScalar::Finite(-q),
        }
    }

    /// Per-coordinate residual: the greatest `λ` with `λ ⊗ self ≤ rhs`.
    pub fn residual(&self, rhs: &TropScalar) -> TropScalar {
        use TropScalar::*;
        match (self, rhs) {
            // λ ⊗ -inf = -inf ≤ anything, even for λ = +inf.
            (NegInf, _) => PosInf,
            (PosInf, PosInf) => PosInf,
            (PosInf, _) => NegInf,
            (Finite(_), PosInf) => PosInf,
            (Finite(_), NegInf) => NegInf,
            (Finite(a), Finite(b)) => Finite(b - a),
        }
    }

    /// Absolute value of the finite part, zero for infinities. Used for
    /// search thresholds only.
    pub fn finite_abs(&self) -> BigRational {
        match self {
            TropScalar::Finite(q) => q.abs(),
            _ => BigRational::zero(),
        }
    }

    /// Canonical text form: `p`, `p/q`, `-inf` or `+inf`.
    pub fn to_text(&self) -> String {
        format!("{self}")
    }

    /// Parse the canonical text form.
    pub fn parse(text: &str) -> Result<TropScalar> {
        let t = text.trim();
        match t {
            "-inf" => return Ok(TropScalar::NegInf),
            "+inf" => return Ok(TropScalar::PosInf),
            _ => {}
        }
        let bad = |msg: &str| Error::Parse {
            place: format!("scalar {t:?}"),
            msg: msg.to_string(),
        };
        if let Some((p, q)) = t.split_once('/') {
            let num = BigInt::from_str(p.trim()).map_err(|e| bad(&e.to_string()))?;
            let den = BigInt::from_str(q.trim()).map_err(|e| bad(&e.to_string()))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(TropScalar::Finite(BigRational::new(num, den)))
        } else {
            let num = BigInt::from_str(t)
                .map_err(|_| bad("expected a decimal integer, p/q, -inf or +inf"))?;
            Ok(TropScalar::Finite(BigRational::from_integer(num)))
        }
    }
}

impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        use TropScalar::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => f.write_str("-inf"),
            TropScalar::PosInf => f.write_str("+inf"),
            TropScalar::Finite(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl serde::Serialize for TropScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> serde::Deserialize<'de> for TropScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        TropScalar::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Tropical sum of an iterator, `-inf` when empty.
pub fn t_sum<'a, I: IntoIterator<Item = &'a TropScalar>>(items: I) -> TropScalar {
    items
        .into_iter()
        .fold(TropScalar::NegInf, |acc, x| acc.t_add(x))
}
