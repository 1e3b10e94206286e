//! Multivariate tropical polynomials and their zero sets.
//!
//! A tropical polynomial is a finite maximum of affine pieces,
//! `f(p) = ⊕_m coef_m ⊙ p_1^{e_1} ⊙ … ⊙ p_n^{e_n}`. Its *zero set* is not
//! where the value vanishes but where it lands in the ghost part of the
//! semiring — which, on real points, means the maximum is attained by at
//! least two monomials (or through a ghost coefficient). Restricted to
//! real coordinates this is the familiar corner locus of the piecewise
//! linear function.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{parse_rational, rational_to_string, TropScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("expected {expected} variables/coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("a polynomial needs at least one monomial with coefficient ≠ -inf")]
    NoFiniteMonomial,
    #[error("grid classification supports 1 or 2 variables, not {vars}")]
    UnsupportedArity { vars: usize },
    #[error("empty box: lower bound exceeds upper bound on axis {axis}")]
    EmptyBox { axis: usize },
    #[error("grid step must be positive")]
    InvalidStep,
}

/// Tropical polynomial in `num_vars` variables with exact coefficients.
///
/// Monomials are keyed by exponent vector; duplicate keys merge by ⊕ at
/// construction and `-inf` coefficients are dropped (they contribute
/// nothing to a maximum).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropPoly {
    num_vars: usize,
    monomials: BTreeMap<Vec<u32>, TropScalar>,
}

impl TropPoly {
    pub fn new(
        num_vars: usize,
        monomials: impl IntoIterator<Item = (Vec<u32>, TropScalar)>,
    ) -> Result<Self, PolyError> {
        let mut map: BTreeMap<Vec<u32>, TropScalar> = BTreeMap::new();
        for (exp, coef) in monomials {
            if exp.len() != num_vars {
                return Err(PolyError::ArityMismatch {
                    expected: num_vars,
                    got: exp.len(),
                });
            }
            if coef.is_neg_inf() {
                continue;
            }
            map.entry(exp)
                .and_modify(|c| *c = c.add(&coef))
                .or_insert(coef);
        }
        if map.is_empty() {
            return Err(PolyError::NoFiniteMonomial);
        }
        Ok(TropPoly {
            num_vars,
            monomials: map,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Vec<u32>, &TropScalar)> {
        self.monomials.iter()
    }

    /// Evaluate at a point of 𝕋ⁿ. Zero exponents contribute the empty
    /// product (the unit), so variables a monomial does not mention are
    /// ignored even at `-inf` coordinates.
    pub fn eval(&self, point: &[TropScalar]) -> Result<TropScalar, PolyError> {
        if point.len() != self.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let mut acc = TropScalar::NegInf;
        for (exp, coef) in &self.monomials {
            let mut term = coef.clone();
            for (k, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = point[k].pow(e).expect("positive power is total");
                term = term.mul(&factor);
                if term.is_neg_inf() {
                    break;
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Zero-set membership: the value lies in the ghost part `R̄^ν`.
    pub fn in_zero_set(&self, point: &[TropScalar]) -> Result<bool, PolyError> {
        Ok(self.eval(point)?.is_ghost())
    }

    /// Classify the real grid points of a closed box against the zero set.
    ///
    /// `bounds` gives per-axis `[lo, hi]`; the grid walks `lo, lo+step, …`
    /// up to `hi` inclusive, axis 0 outermost. Supports one- and
    /// two-variable polynomials (the plot-friendly cases).
    pub fn corner_locus_grid(
        &self,
        bounds: &[(BigRational, BigRational)],
        step: &BigRational,
    ) -> Result<Vec<GridPoint>, PolyError> {
        if self.num_vars > 2 {
            return Err(PolyError::UnsupportedArity {
                vars: self.num_vars,
            });
        }
        if bounds.len() != self.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: bounds.len(),
            });
        }
        if *step <= BigRational::zero() {
            return Err(PolyError::InvalidStep);
        }
        let mut axes: Vec<Vec<BigRational>> = Vec::with_capacity(bounds.len());
        for (axis, (lo, hi)) in bounds.iter().enumerate() {
            if lo > hi {
                return Err(PolyError::EmptyBox { axis });
            }
            let mut ticks = Vec::new();
            let mut x = lo.clone();
            while x <= *hi {
                ticks.push(x.clone());
                x += step;
            }
            axes.push(ticks);
        }
        let mut out = Vec::new();
        match axes.as_slice() {
            [xs] => {
                for x in xs {
                    let p = vec![TropScalar::Real(x.clone())];
                    out.push(GridPoint {
                        in_locus: self.in_zero_set(&p)?,
                        point: vec![x.clone()],
                    });
                }
            }
            [xs, ys] => {
                for x in xs {
                    for y in ys {
                        let p = vec![TropScalar::Real(x.clone()), TropScalar::Real(y.clone())];
                        out.push(GridPoint {
                            in_locus: self.in_zero_set(&p)?,
                            point: vec![x.clone(), y.clone()],
                        });
                    }
                }
            }
            _ => unreachable!("arity checked above"),
        }
        Ok(out)
    }

    /// ⊕ of polynomials: union of monomials, coefficients merged by ⊕.
    pub fn poly_add(&self, other: &TropPoly) -> Result<TropPoly, PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        TropPoly::new(
            self.num_vars,
            self.monomials
                .iter()
                .chain(other.monomials.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// ⊙ of polynomials: convolution, exponents add, coefficients multiply,
    /// collisions merge by ⊕.
    pub fn poly_mul(&self, other: &TropPoly) -> Result<TropPoly, PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        let mut terms = Vec::new();
        for (e1, c1) in &self.monomials {
            for (e2, c2) in &other.monomials {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                terms.push((exp, c1.mul(c2)));
            }
        }
        TropPoly::new(self.num_vars, terms)
    }
}

impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z", "w"];
        let mut first = true;
        for (exp, coef) in self.monomials.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{coef}")?;
            for (k, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let var = names.get(k).copied().unwrap_or("v");
                if e == 1 {
                    write!(f, "*{var}")?;
                } else {
                    write!(f, "*{var}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// One classified grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoint {
    pub point: Vec<BigRational>,
    pub in_locus: bool,
}

impl Serialize for GridPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("GridPoint", 2)?;
        let coords: Vec<String> = self.point.iter().map(rational_to_string).collect();
        st.serialize_field("point", &coords)?;
        st.serialize_field("in_locus", &self.in_locus)?;
        st.end()
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr {
    exp: Vec<u32>,
    coef: TropScalar,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: usize,
    monomials: Vec<MonomialRepr>,
}

impl Serialize for TropPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            vars: self.num_vars,
            monomials: self
                .monomials
                .iter()
                .map(|(e, c)| MonomialRepr {
                    exp: e.clone(),
                    coef: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TropPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        TropPoly::new(repr.vars, repr.monomials.into_iter().map(|m| (m.exp, m.coef)))
            .map_err(D::Error::custom)
    }
}

/// Parse a per-axis box such as `-2:2` or `-2:2,-1:1` (rational endpoints).
pub fn parse_box(s: &str) -> Result<Vec<(BigRational, BigRational)>, String> {
    s.split(',')
        .map(|axis| {
            let (lo, hi) = axis
                .split_once(':')
                .ok_or_else(|| format!("axis {axis:?} is not lo:hi"))?;
            Ok((
                parse_rational(lo.trim()).map_err(|e| format!("bad bound {lo:?}: {e}"))?,
                parse_rational(hi.trim()).map_err(|e| format!("bad bound {hi:?}: {e}"))?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::big_rational;

    fn s(lit: &str) -> TropScalar {
        lit.parse().unwrap()
    }

    fn poly(json: &str) -> TropPoly {
        serde_json::from_str(json).unwrap()
    }

    /// x ⊕ y ⊕ 0, the tropical line.
    fn line() -> TropPoly {
        poly(
            r#"{"vars":2,"monomials":[
                {"exp":[1,0],"coef":"0"},
                {"exp":[0,1],"coef":"0"},
                {"exp":[0,0],"coef":"0"}]}"#,
        )
    }

    #[test]
    fn eval_tracks_ties() {
        let f = line();
        assert_eq!(f.eval(&[s("0"), s("0")]).unwrap(), s("0v"));
        assert_eq!(f.eval(&[s("2"), s("1")]).unwrap(), s("2"));
        assert_eq!(f.eval(&[s("1"), s("1")]).unwrap(), s("1v"));
        assert_eq!(f.eval(&[s("-3"), s("-5")]).unwrap(), s("0"));
        // ghost coordinate dominating makes the value ghost
        assert_eq!(f.eval(&[s("4v"), s("0")]).unwrap(), s("4v"));
        // but a dominated ghost leaves a clean real value
        assert_eq!(f.eval(&[s("-5v"), s("3")]).unwrap(), s("3"));
    }

    #[test]
    fn eval_at_neg_inf_coordinates() {
        let f = line();
        // monomials not mentioning a variable ignore its -inf coordinate
        assert_eq!(f.eval(&[TropScalar::NegInf, s("5")]).unwrap(), s("5"));
        assert_eq!(
            f.eval(&[TropScalar::NegInf, TropScalar::NegInf]).unwrap(),
            s("0")
        );
        // a pure monomial genuinely vanishes there
        let g = poly(r#"{"vars":1,"monomials":[{"exp":[2],"coef":"1"}]}"#);
        assert_eq!(g.eval(&[TropScalar::NegInf]).unwrap(), TropScalar::NegInf);
        assert!(g.in_zero_set(&[TropScalar::NegInf]).unwrap());
    }

    #[test]
    fn arity_checked() {
        let f = line();
        assert!(matches!(
            f.eval(&[s("0")]),
            Err(PolyError::ArityMismatch { expected: 2, got: 1 })
        ));
        assert!(TropPoly::new(1, [(vec![1, 2], s("0"))]).is_err());
        // all -inf coefficients: no polynomial at all
        assert!(matches!(
            TropPoly::new(1, [(vec![1], TropScalar::NegInf)]),
            Err(PolyError::NoFiniteMonomial)
        ));
    }

    #[test]
    fn duplicate_monomials_merge() {
        let f = TropPoly::new(1, [(vec![1], s("2")), (vec![1], s("2"))]).unwrap();
        let (_, c) = f.monomials().next().unwrap();
        assert_eq!(*c, s("2v"));
        // merged ghost coefficient makes every finite point a zero
        assert!(f.in_zero_set(&[s("10")]).unwrap());
    }

    #[test]
    fn factored_quadratic_has_its_roots() {
        // (x ⊕ 1)(x ⊕ -1) = x² ⊕ 1x ⊕ 0, corners exactly at 1 and -1
        let x_plus_1 = poly(r#"{"vars":1,"monomials":[{"exp":[1],"coef":"0"},{"exp":[0],"coef":"1"}]}"#);
        let x_minus_1 = poly(r#"{"vars":1,"monomials":[{"exp":[1],"coef":"0"},{"exp":[0],"coef":"-1"}]}"#);
        let q = x_plus_1.poly_mul(&x_minus_1).unwrap();
        let expected = poly(
            r#"{"vars":1,"monomials":[
                {"exp":[2],"coef":"0"},
                {"exp":[1],"coef":"1"},
                {"exp":[0],"coef":"0"}]}"#,
        );
        assert_eq!(q, expected);
        let grid = q
            .corner_locus_grid(&[(big_rational(-3, 1), big_rational(3, 1))], &big_rational(1, 1))
            .unwrap();
        let in_points: Vec<i64> = grid
            .iter()
            .filter(|g| g.in_locus)
            .map(|g| g.point[0].to_integer().try_into().unwrap())
            .collect();
        assert_eq!(in_points, vec![-1, 1]);
    }

    #[test]
    fn line_locus_grid() {
        let f = line();
        let b = (big_rational(-1, 1), big_rational(1, 1));
        let grid = f
            .corner_locus_grid(&[b.clone(), b], &big_rational(1, 1))
            .unwrap();
        assert_eq!(grid.len(), 9);
        let hits: Vec<(i64, i64)> = grid
            .iter()
            .filter(|g| g.in_locus)
            .map(|g| {
                (
                    g.point[0].to_integer().try_into().unwrap(),
                    g.point[1].to_integer().try_into().unwrap(),
                )
            })
            .collect();
        assert_eq!(hits, vec![(-1, 0), (0, -1), (0, 0), (1, 1)]);
    }

    #[test]
    fn fractional_steps() {
        // x ⊕ 1/2: corner at 1/2, only reachable with a fractional step
        let f = poly(r#"{"vars":1,"monomials":[{"exp":[1],"coef":"0"},{"exp":[0],"coef":"1/2"}]}"#);
        let grid = f
            .corner_locus_grid(&[(big_rational(0, 1), big_rational(1, 1))], &big_rational(1, 4))
            .unwrap();
        assert_eq!(grid.len(), 5);
        let hits: Vec<BigRational> = grid
            .iter()
            .filter(|g| g.in_locus)
            .map(|g| g.point[0].clone())
            .collect();
        assert_eq!(hits, vec![big_rational(1, 2)]);
    }

    #[test]
    fn grid_errors() {
        let f = line();
        assert!(matches!(
            f.corner_locus_grid(
                &std::array::from_fn::<_, 2, _>(|_| (big_rational(1, 1), big_rational(0, 1))),
                &big_rational(1, 1)
            ),
            Err(PolyError::EmptyBox { axis: 0 })
        ));
        assert!(matches!(
            f.corner_locus_grid(&[(big_rational(0, 1), big_rational(1, 1))], &big_rational(1, 1)),
            Err(PolyError::ArityMismatch { .. })
        ));
        assert!(matches!(
            f.corner_locus_grid(
                &std::array::from_fn::<_, 2, _>(|_| (big_rational(0, 1), big_rational(1, 1))),
                &big_rational(0, 1)
            ),
            Err(PolyError::InvalidStep)
        ));
        let cubic = TropPoly::new(3, [(vec![1, 1, 1], s("0"))]).unwrap();
        assert!(matches!(
            cubic.corner_locus_grid(&[], &big_rational(1, 1)),
            Err(PolyError::UnsupportedArity { vars: 3 })
        ));
    }

    #[test]
    fn add_is_pointwise_max() {
        let f = poly(r#"{"vars":1,"monomials":[{"exp":[1],"coef":"0"},{"exp":[0],"coef":"3"}]}"#);
        let g = poly(r#"{"vars":1,"monomials":[{"exp":[1],"coef":"1v"},{"exp":[2],"coef":"-2"}]}"#);
        let sum = f.poly_add(&g).unwrap();
        for v in [-4i64, -1, 0, 2, 5] {
            let p = [TropScalar::real(v)];
            assert_eq!(
                sum.eval(&p).unwrap(),
                f.eval(&p).unwrap().add(&g.eval(&p).unwrap()),
                "at {v}"
            );
        }
    }

    #[test]
    fn mul_is_pointwise_product() {
        let f = poly(r#"{"vars":2,"monomials":[{"exp":[1,0],"coef":"0"},{"exp":[0,0],"coef":"1"}]}"#);
        let g = poly(r#"{"vars":2,"monomials":[{"exp":[0,1],"coef":"-1"},{"exp":[1,1],"coef":"2v"}]}"#);
        let prod = f.poly_mul(&g).unwrap();
        for (a, b) in [(0i64, 0i64), (1, -2), (-3, 4), (2, 2)] {
            let p = [TropScalar::real(a), TropScalar::real(b)];
            assert_eq!(
                prod.eval(&p).unwrap(),
                f.eval(&p).unwrap().mul(&g.eval(&p).unwrap()),
                "at ({a},{b})"
            );
        }
    }

    #[test]
    fn json_format() {
        let f = line();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<TropPoly>(&json).unwrap(), f);
        // grid points serialize with rational strings
        let g = f
            .corner_locus_grid(
                &std::array::from_fn::<_, 2, _>(|_| (big_rational(0, 1), big_rational(0, 1))),
                &big_rational(1, 1),
            )
            .unwrap();
        assert_eq!(
            serde_json::to_string(&g[0]).unwrap(),
            r#"{"point":["0","0"],"in_locus":true}"#
        );
    }

    #[test]
    fn parse_box_syntax() {
        let b = parse_box("-2:2,-1/2:1").unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[1].0, big_rational(-1, 2));
        assert!(parse_box("1,2").is_err());
        assert!(parse_box("a:b").is_err());
    }
}
