//! Finite Puiseux polynomials and the valuation bridge into the semiring.
//!
//! The model field is spanned by monomials `c·t^a` with exact rational
//! coefficients and rational exponents; the valuation of a nonzero element
//! is `-min` of its support, and `Val(0) = -inf`. Products behave exactly
//! (`val(fg) = val(f) ⊙ val(g)`), but sums may cancel arbitrarily deep, so
//! `val(f+g)` is only *contained in a ray*: the singleton of the maximum
//! when the two valuations differ, the whole interval `[-inf, a]` when
//! they agree at `a`. Tagging that second case `a^ν` is precisely what the
//! ghost copy of the reals is for, and [`check_homomorphic_relation`]
//! verifies the containments on concrete pairs.
//!
//! Coefficients here are rationals rather than the complex numbers of the
//! classical construction; the valuation only ever needs exact zero tests.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::laws::LawReport;
use crate::scalar::{parse_rational, rational_to_string, TropScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValError {
    #[error("valuations live in max-plus; a ν-tagged value cannot be one")]
    NuValuation,
}

/// Finite formal sum `Σ c_a t^a`, exponents and coefficients exact
/// rationals. The zero polynomial is the empty sum.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PuiseuxPoly {
    terms: BTreeMap<BigRational, BigRational>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(terms: impl IntoIterator<Item = (BigRational, BigRational)>) -> Self {
        let mut map = BTreeMap::new();
        for (exp, coef) in terms {
            let entry = map.entry(exp).or_insert_with(BigRational::zero);
            *entry += coef;
        }
        map.retain(|_, c| !c.is_zero());
        PuiseuxPoly { terms: map }
    }

    /// Single term `c·t^a`.
    pub fn monomial(exp: BigRational, coef: BigRational) -> Self {
        Self::new([(exp, coef)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &BigRational)> {
        self.terms.iter()
    }

    /// `Val(f) = -min{a : c_a ≠ 0}`, `-inf` for the zero polynomial.
    /// Always lands in max-plus — never a ν tag.
    pub fn val(&self) -> TropScalar {
        match self.terms.keys().next() {
            None => TropScalar::NegInf,
            Some(min_exp) => TropScalar::Real(-min_exp),
        }
    }

    pub fn series_add(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        Self::new(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn series_mul(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        let mut terms = Vec::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                terms.push((e1 + e2, c1 * c2));
            }
        }
        Self::new(terms)
    }

    pub fn neg(&self) -> PuiseuxPoly {
        PuiseuxPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coef) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})t^({})", rational_to_string(coef), rational_to_string(exp))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: String,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for PuiseuxPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: rational_to_string(e),
                    coef: rational_to_string(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PuiseuxPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let exp = parse_rational(&t.exp).map_err(D::Error::custom)?;
            let coef = parse_rational(&t.coef).map_err(D::Error::custom)?;
            terms.push((exp, coef));
        }
        Ok(PuiseuxPoly::new(terms))
    }
}

/// The target set `P_x` of the valuation relation: a singleton for real or
/// `-inf` anchors, the whole interval `[-inf, a]` for a ghost anchor `a^ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    pub anchor: TropScalar,
}

impl Ray {
    pub fn new(anchor: TropScalar) -> Self {
        Ray { anchor }
    }

    /// Membership of a valuation value `v` (never ν-tagged) in this ray.
    pub fn contains(&self, v: &TropScalar) -> Result<bool, ValError> {
        if v.is_nu() {
            return Err(ValError::NuValuation);
        }
        Ok(match &self.anchor {
            TropScalar::NegInf => v.is_neg_inf(),
            TropScalar::Real(a) => matches!(v, TropScalar::Real(b) if b == a),
            TropScalar::Nu(a) => match v {
                TropScalar::NegInf => true,
                TropScalar::Real(b) => b <= a,
                TropScalar::Nu(_) => unreachable!("rejected above"),
            },
        })
    }
}

/// Free-function form of [`Ray::contains`].
pub fn ray_contains(anchor: &TropScalar, v: &TropScalar) -> Result<bool, ValError> {
    Ray::new(anchor.clone()).contains(v)
}

/// Verify the homomorphic relation on one pair: with `x = val(f)` and
/// `y = val(g)`, both `val(f·g) ∈ P_{x⊙y}` and `val(f+g) ∈ P_{x⊕y}` must
/// hold. Equal valuations make `x ⊕ y` a ghost anchor, whose ray absorbs
/// any cancellation depth in the sum.
pub fn check_homomorphic_relation(f: &PuiseuxPoly, g: &PuiseuxPoly) -> LawReport {
    check_homomorphic_relation_seeded(f, g, 0)
}

/// Same check, tagged with the generator seed that produced the pair.
pub fn check_homomorphic_relation_seeded(f: &PuiseuxPoly, g: &PuiseuxPoly, seed: u64) -> LawReport {
    let x = f.val();
    let y = g.val();
    let prod_val = f.series_mul(g).val();
    let sum_val = f.series_add(g).val();
    let prod_anchor = x.mul(&y);
    let sum_anchor = x.add(&y);
    let prod_ok = ray_contains(&prod_anchor, &prod_val).expect("val is never ν-tagged");
    let sum_ok = ray_contains(&sum_anchor, &sum_val).expect("val is never ν-tagged");
    let instance = format!("f = {f}, g = {g}");
    if prod_ok && sum_ok {
        LawReport::pass("val-homomorphism", instance, seed)
    } else {
        LawReport::fail(
            "val-homomorphism",
            instance,
            format!(
                "val(fg) = {prod_val} vs ray at {prod_anchor}; val(f+g) = {sum_val} vs ray at {sum_anchor}"
            ),
            seed,
        )
    }
}
