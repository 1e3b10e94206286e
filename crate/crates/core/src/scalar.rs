//! Scalars of the extended tropical semiring.
//!
//! The carrier set is `T = R ∪ {-inf} ∪ R^ν`: every real number appears
//! twice, once as an ordinary *real* element `a` and once as a *ν-tagged*
//! ghost `a^ν`, plus a single bottom element `-inf`. Addition is maximum
//! with respect to the order below, except that a tie produces the ν copy
//! (`a ⊕ a = a^ν`); multiplication is ordinary addition of values, with the
//! ν tag contagious. `-inf` is the additive neutral and multiplicative
//! absorbing element, `0` (real) the multiplicative unit.
//!
//! Values are exact rationals ([`BigRational`]) kept in lowest terms, so
//! equality is structural and decidable: `3` and `3^ν` are distinct
//! elements with the same magnitude.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Errors from the partial scalar operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    /// Division by the bottom element is undefined.
    #[error("division by -inf is undefined")]
    DivisionByNegInf,
    /// θ embeds the ordinary max-plus semiring; ν-tagged inputs are not in it.
    #[error("theta embedding expects a max-plus element, got a ν-tagged value")]
    InvalidMaxPlusElement,
    /// `pow(x, 0)` is the unit for every `x` except `-inf`.
    #[error("-inf raised to the zeroth power is undefined")]
    NegInfZeroPower,
}

/// Failure to read a scalar literal such as `3`, `-1/2`, `2.5v` or `-inf`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid tropical scalar literal {literal:?}: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: String,
}

/// Tag telling which copy of the reals (or the bottom) a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    NegInf,
    Real,
    Nu,
}

/// An element of the extended tropical semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropScalar {
    /// The bottom element `-inf`: neutral for ⊕, absorbing for ⊙.
    NegInf,
    /// An ordinary real element.
    Real(BigRational),
    /// A ν-tagged element `a^ν`.
    Nu(BigRational),
}

pub use TropScalar::NegInf;

impl TropScalar {
    /// Real element from an integer value.
    pub fn real(n: i64) -> Self {
        TropScalar::Real(BigRational::from_integer(BigInt::from(n)))
    }

    /// ν-tagged element from an integer value.
    pub fn nu(n: i64) -> Self {
        TropScalar::Nu(BigRational::from_integer(BigInt::from(n)))
    }

    /// Real element from an exact fraction.
    pub fn ratio(num: i64, den: i64) -> Self {
        TropScalar::Real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The multiplicative unit `0` (real zero).
    pub fn unit() -> Self {
        TropScalar::Real(BigRational::zero())
    }

    pub fn tag(&self) -> Tag {
        match self {
            TropScalar::NegInf => Tag::NegInf,
            TropScalar::Real(_) => Tag::Real,
            TropScalar::Nu(_) => Tag::Nu,
        }
    }

    /// The rational magnitude, absent only for `-inf`.
    pub fn value(&self) -> Option<&BigRational> {
        match self {
            TropScalar::NegInf => None,
            TropScalar::Real(q) | TropScalar::Nu(q) => Some(q),
        }
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }

    pub fn is_real(&self) -> bool {
        matches!(self, TropScalar::Real(_))
    }

    pub fn is_nu(&self) -> bool {
        matches!(self, TropScalar::Nu(_))
    }

    /// True for elements of the ghost part `R^ν ∪ {-inf}` — exactly the
    /// elements that count as "zeros" of polynomials and determinants.
    pub fn is_ghost(&self) -> bool {
        !self.is_real()
    }

    /// Total order of the semiring.
    ///
    /// `-inf` is least; otherwise magnitudes compare as rationals, and on a
    /// tie the real copy precedes the ν copy (`a ≺ a^ν`).
    pub fn compare(&self, other: &TropScalar) -> Ordering {
        match (self, other) {
            (TropScalar::NegInf, TropScalar::NegInf) => Ordering::Equal,
            (TropScalar::NegInf, _) => Ordering::Less,
            (_, TropScalar::NegInf) => Ordering::Greater,
            (x, y) => {
                let (a, b) = (x.value().unwrap(), y.value().unwrap());
                a.cmp(b).then_with(|| match (x.tag(), y.tag()) {
                    (Tag::Real, Tag::Nu) => Ordering::Less,
                    (Tag::Nu, Tag::Real) => Ordering::Greater,
                    _ => Ordering::Equal,
                })
            }
        }
    }

    /// Tropical sum `x ⊕ y`: the ≺-maximum of the two, except that equal
    /// magnitudes collapse into the ν copy (`a ⊕ a = a ⊕ a^ν = a^ν ⊕ a^ν = a^ν`).
    pub fn add(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::NegInf, y) => y.clone(),
            (x, TropScalar::NegInf) => x.clone(),
            (x, y) => {
                let (a, b) = (x.value().unwrap(), y.value().unwrap());
                match a.cmp(b) {
                    Ordering::Greater => x.clone(),
                    Ordering::Less => y.clone(),
                    Ordering::Equal => TropScalar::Nu(a.clone()),
                }
            }
        }
    }

    /// Tropical product `x ⊙ y`: magnitudes add, the ν tag is contagious,
    /// and `-inf` absorbs.
    pub fn mul(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::NegInf, _) | (_, TropScalar::NegInf) => TropScalar::NegInf,
            (x, y) => {
                let q = x.value().unwrap() + y.value().unwrap();
                if x.is_nu() || y.is_nu() {
                    TropScalar::Nu(q)
                } else {
                    TropScalar::Real(q)
                }
            }
        }
    }

    /// Tropical quotient `x ⊘ y = x ⊙ y^{-1}`, undefined for `y = -inf`.
    ///
    /// The inverse negates the magnitude and keeps the tag: `(a^ν)^{-1} = (-a)^ν`.
    pub fn div(&self, other: &TropScalar) -> Result<TropScalar, ScalarError> {
        let inv = match other {
            TropScalar::NegInf => return Err(ScalarError::DivisionByNegInf),
            TropScalar::Real(q) => TropScalar::Real(-q),
            TropScalar::Nu(q) => TropScalar::Nu(-q),
        };
        Ok(self.mul(&inv))
    }

    /// Tropical power `x^n` (iterated ⊙): the magnitude scales by `n`, tags
    /// are preserved. `x^0` is the unit except at `-inf`, where it is
    /// undefined.
    pub fn pow(&self, n: u32) -> Result<TropScalar, ScalarError> {
        if n == 0 {
            return match self {
                TropScalar::NegInf => Err(ScalarError::NegInfZeroPower),
                _ => Ok(TropScalar::unit()),
            };
        }
        let n = BigRational::from_integer(BigInt::from(n));
        Ok(match self {
            TropScalar::NegInf => TropScalar::NegInf,
            TropScalar::Real(q) => TropScalar::Real(q * &n),
            TropScalar::Nu(q) => TropScalar::Nu(q * &n),
        })
    }

    /// The ghost map ν: `a ↦ a^ν`, fixing `-inf`. Idempotent, and a semiring
    /// homomorphism onto the ghost part.
    pub fn nu_project(&self) -> TropScalar {
        match self {
            TropScalar::NegInf => TropScalar::NegInf,
            TropScalar::Real(q) | TropScalar::Nu(q) => TropScalar::Nu(q.clone()),
        }
    }

    /// The forgetful map π: drops the ν tag, landing in ordinary max-plus.
    pub fn pi_project(&self) -> TropScalar {
        match self {
            TropScalar::NegInf => TropScalar::NegInf,
            TropScalar::Real(q) | TropScalar::Nu(q) => TropScalar::Real(q.clone()),
        }
    }

    /// The embedding θ of max-plus into the ghost part: `a ↦ a^ν`.
    /// Only untagged (real or `-inf`) inputs are in its domain.
    pub fn theta_embed(&self) -> Result<TropScalar, ScalarError> {
        match self {
            TropScalar::NegInf => Ok(TropScalar::NegInf),
            TropScalar::Real(q) => Ok(TropScalar::Nu(q.clone())),
            TropScalar::Nu(_) => Err(ScalarError::InvalidMaxPlusElement),
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
        self.compare(other)
    }
}

impl std::ops::Add for &TropScalar {
    type Output = TropScalar;
    fn add(self, rhs: &TropScalar) -> TropScalar {
        TropScalar::add(self, rhs)
    }
}

impl std::ops::Add for TropScalar {
    type Output = TropScalar;
    fn add(self, rhs: TropScalar) -> TropScalar {
        TropScalar::add(&self, &rhs)
    }
}

impl std::ops::Mul for &TropScalar {
    type Output = TropScalar;
    fn mul(self, rhs: &TropScalar) -> TropScalar {
        TropScalar::mul(self, rhs)
    }
}

impl std::ops::Mul for TropScalar {
    type Output = TropScalar;
    fn mul(self, rhs: TropScalar) -> TropScalar {
        TropScalar::mul(&self, &rhs)
    }
}

/// Parse a rational literal: `-?digits`, `-?digits/digits` or
/// `-?digits.digits`. Decimal forms are exact (`2.5` is `5/2`).
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    if body.is_empty() {
        return Err("empty number".into());
    }
    let digits = |part: &str, what: &str| -> Result<BigInt, String> {
        if part.is_empty() {
            return Err(format!("missing {what}"));
        }
        if !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("non-digit character in {what}"));
        }
        BigInt::from_str(part).map_err(|e| e.to_string())
    };
    let q = if let Some((num, den)) = body.split_once('/') {
        let num = digits(num, "numerator")?;
        let den = digits(den, "denominator")?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        BigRational::new(num, den)
    } else if let Some((int, frac)) = body.split_once('.') {
        let int = digits(int, "integer part")?;
        let frac_digits = frac.len() as u32;
        let frac = digits(frac, "fractional part")?;
        let scale = BigInt::from(10u8).pow(frac_digits);
        BigRational::new(int * &scale + frac, scale)
    } else {
        BigRational::from_integer(digits(body, "number")?)
    };
    Ok(if neg { -q } else { q })
}

impl FromStr for TropScalar {
    type Err = ParseScalarError;

    /// Grammar: `-inf`, a rational, or a rational with a trailing `v` for
    /// the ν copy (`2.5v`, `-1/2v`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseScalarError {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t == "-inf" {
            return Ok(TropScalar::NegInf);
        }
        let (body, nu) = match t.strip_suffix('v') {
            Some(rest) => (rest, true),
            None => (t, false),
        };
        let q = parse_rational(body).map_err(|reason| err(&reason))?;
        Ok(if nu {
            TropScalar::Nu(q)
        } else {
            TropScalar::Real(q)
        })
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    // BigRational is stored reduced with a positive denominator, so this is
    // already the canonical lowest-terms form.
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => write!(f, "-inf"),
            TropScalar::Real(q) => write_rational(f, q),
            TropScalar::Nu(q) => {
                write_rational(f, q)?;
                write!(f, "v")
            }
        }
    }
}

impl Serialize for TropScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TropScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Render a bare rational in the same lowest-terms style scalars use.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Convenience used by generators and tests.
pub fn big_rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn abs_rational(q: &BigRational) -> BigRational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> TropScalar {
        lit.parse().unwrap()
    }

    #[test]
    fn order_axiom() {
        // -inf below everything, reals below their own ghost, magnitudes rule.
        let cases = [
            ("-inf", "0", Ordering::Less),
            ("-inf", "-100v", Ordering::Less),
            ("1", "2", Ordering::Less),
            ("1", "2v", Ordering::Less),
            ("1v", "2", Ordering::Less),
            ("1v", "2v", Ordering::Less),
            ("3", "3v", Ordering::Less),
            ("3", "3", Ordering::Equal),
            ("3v", "3v", Ordering::Equal),
            ("-1/2", "-0.5", Ordering::Equal),
            ("5", "4v", Ordering::Greater),
        ];
        for (a, b, ord) in cases {
            assert_eq!(s(a).compare(&s(b)), ord, "{a} vs {b}");
            assert_eq!(s(b).compare(&s(a)), ord.reverse(), "{b} vs {a}");
        }
    }

    #[test]
    fn addition_axiom() {
        assert_eq!(s("-inf").add(&s("7")), s("7"));
        assert_eq!(s("7v").add(&s("-inf")), s("7v"));
        assert_eq!(s("-inf").add(&s("-inf")), s("-inf"));
        assert_eq!(s("1").add(&s("2")), s("2"));
        assert_eq!(s("2v").add(&s("1")), s("2v"));
        assert_eq!(s("2").add(&s("1v")), s("2"));
        // ties collapse into the ghost copy
        assert_eq!(s("3").add(&s("3")), s("3v"));
        assert_eq!(s("3").add(&s("3v")), s("3v"));
        assert_eq!(s("3v").add(&s("3v")), s("3v"));
    }

    #[test]
    fn multiplication_axiom() {
        assert_eq!(s("2").mul(&s("3")), s("5"));
        assert_eq!(s("2v").mul(&s("3")), s("5v"));
        assert_eq!(s("2").mul(&s("3v")), s("5v"));
        assert_eq!(s("2v").mul(&s("3v")), s("5v"));
        assert_eq!(s("2v").mul(&s("-inf")), s("-inf"));
        assert_eq!(s("-inf").mul(&s("-inf")), s("-inf"));
        assert_eq!(s("1/2").mul(&s("1/3")), s("5/6"));
        // unit and absorbing element
        assert_eq!(s("9v").mul(&TropScalar::unit()), s("9v"));
        assert_eq!(TropScalar::unit().mul(&s("-4")), s("-4"));
    }

    #[test]
    fn division() {
        assert_eq!(s("4").div(&s("1v")).unwrap(), s("3v"));
        assert_eq!(s("4").div(&s("1")).unwrap(), s("3"));
        assert_eq!(s("4v").div(&s("1")).unwrap(), s("3v"));
        assert_eq!(s("-inf").div(&s("5")).unwrap(), s("-inf"));
        assert_eq!(s("3").div(&s("-inf")), Err(ScalarError::DivisionByNegInf));
        // x ⊘ x is the unit only for real x; ghosts stay ghosts
        assert_eq!(s("5").div(&s("5")).unwrap(), TropScalar::unit());
        assert_eq!(s("5v").div(&s("5v")).unwrap(), s("0v"));
    }

    #[test]
    fn powers() {
        assert_eq!(s("2").pow(3).unwrap(), s("6"));
        assert_eq!(s("2v").pow(3).unwrap(), s("6v"));
        assert_eq!(s("-1/2").pow(2).unwrap(), s("-1"));
        assert_eq!(s("-inf").pow(5).unwrap(), s("-inf"));
        assert_eq!(s("-inf").pow(0), Err(ScalarError::NegInfZeroPower));
        assert_eq!(s("7v").pow(0).unwrap(), TropScalar::unit());
    }

    #[test]
    fn structure_maps_commute() {
        // ν = θ ∘ π on all three kinds of element.
        for lit in ["-inf", "4", "4v", "-2/3", "-2/3v"] {
            let x = s(lit);
            assert_eq!(
                x.pi_project().theta_embed().unwrap(),
                x.nu_project(),
                "diagram at {lit}"
            );
        }
        assert_eq!(s("4v").theta_embed(), Err(ScalarError::InvalidMaxPlusElement));
        // ν is idempotent
        assert_eq!(s("4").nu_project().nu_project(), s("4v"));
    }

    #[test]
    fn cancellation_fails_on_ghosts() {
        // a^ν ⊙ b = a^ν ⊙ b^ν even though b ≠ b^ν: ⊙ does not cancel.
        let (a, b) = (s("0v"), s("1"));
        assert_eq!(a.mul(&b), a.mul(&b.nu_project()));
        assert_ne!(b, b.nu_project());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for lit in ["-inf", "3", "-1/2", "5v", "-1/2v", "0", "0v", "17/3"] {
            assert_eq!(s(lit).to_string(), lit, "round trip {lit}");
        }
        // decimals normalize to lowest-terms fractions
        assert_eq!(s("2.5").to_string(), "5/2");
        assert_eq!(s("2.5v").to_string(), "5/2v");
        assert_eq!(s("-0.25").to_string(), "-1/4");
        assert_eq!(s("4.0"), s("4"));
        assert_eq!(s("2/4"), s("1/2"));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "v", "-infv", "1/0", "2.5.1", "1//2", "--3", "a", "3 4", "1.v", "/2"] {
            assert!(bad.parse::<TropScalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn json_uses_literal_strings() {
        let x = s("-1/2v");
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"-1/2v\"");
        assert_eq!(serde_json::from_str::<TropScalar>("\"-1/2v\"").unwrap(), x);
    }
}
