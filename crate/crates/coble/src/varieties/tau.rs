//! The double cover `tau -> t = (tau^2 + 1)/4` and the map
//! `tau -> s = (tau^3 - tau)/(5 tau^2 + 3)` to the Wiman-Edge pencil.

use serde::Serialize;

use crate::algebra::{Scalar, UPoly};

use super::VarietyError;

/// A point of P1: a finite value or infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Finite(Scalar),
    Infinity,
}

impl Value {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            Value::Finite(x) => Some(x),
            Value::Infinity => None,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Finite(x) => write!(f, "{x}"),
            Value::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn t_of_tau(tau: &Value) -> Value {
    match tau {
        Value::Finite(x) => Value::Finite((&(x * x) + &Scalar::one()) / Scalar::int(4)),
        Value::Infinity => Value::Infinity,
    }
}

/// `s(tau)`, which is infinite at `tau = inf` and at the zeros of `5 tau^2 + 3`.
pub fn s_of_tau(tau: &Value) -> Value {
    let Value::Finite(x) = tau else { return Value::Infinity };
    let den = &(&(x * x) * &Scalar::int(5)) + &Scalar::int(3);
    if den.is_zero() {
        return Value::Infinity;
    }
    Value::Finite((&(&(x * x) * x) - x) / den)
}

/// Numerator of `s'(tau)`: `(3 tau^2 - 1)(5 tau^2 + 3) - 10 tau (tau^3 - tau)`.
pub fn ds_numerator() -> UPoly {
    let num = UPoly::from_ints(&[0, -1, 0, 1]);
    let den = UPoly::from_ints(&[3, 0, 5]);
    num.derivative().mul(&den).sub(&num.mul(&den.derivative()))
}

/// A ramification point of `s` with its simplicity certificate.
#[derive(Clone, Debug, Serialize)]
pub struct Ramification {
    pub tau: Value,
    pub s: Value,
    /// Value of the derivative of `ds_numerator` at `tau`; nonzero for a simple zero.
    pub second_derivative_numerator: String,
}

/// The zeros of `s'`: roots of the biquadratic `ds_numerator`, each checked
/// to be a simple zero away from the poles of `s`.
pub fn ramification_points() -> Result<Vec<Ramification>, VarietyError> {
    let n = ds_numerator();
    let c = &n.0;
    if n.degree() != Some(4) || !c[1].is_zero() || !c[3].is_zero() {
        return Err(VarietyError::Elimination(format!("unexpected numerator {}", n.display("tau"))));
    }
    // a T^2 + b T + c with T = tau^2
    let (a, b, cc) = (&c[4], &c[2], &c[0]);
    let disc = &(b * b) - &(&(a * &cc.clone()) * &Scalar::int(4));
    let root = disc
        .as_rational()
        .and_then(crate::algebra::rational_sqrt)
        .map(Scalar::rational)
        .ok_or_else(|| VarietyError::Elimination("irrational tau^2".into()))?;
    let dn = n.derivative();
    let den = UPoly::from_ints(&[3, 0, 5]);
    let mut out = Vec::new();
    for sign in [1, -1] {
        let t2 = (&(-b) + &(&root * &Scalar::int(sign))) / (a * &Scalar::int(2));
        let r = Scalar::sqrt_rational(t2.as_rational().expect("rational"));
        for tau in [r.clone(), -r] {
            if !n.eval(&tau).is_zero() || den.eval(&tau).is_zero() {
                return Err(VarietyError::Elimination(format!("bad root {tau}")));
            }
            let d2 = dn.eval(&tau);
            if d2.is_zero() {
                return Err(VarietyError::Elimination(format!("multiple root {tau}")));
            }
            let v = Value::Finite(tau);
            out.push(Ramification { s: s_of_tau(&v), tau: v, second_derivative_numerator: d2.to_string() });
        }
    }
    Ok(out)
}

/// The finite discriminant set of the pencil `X_t`.
pub fn discriminant_t() -> Vec<Scalar> {
    vec![Scalar::ratio(1, 4), Scalar::ratio(1, 2), Scalar::ratio(1, 6), Scalar::ratio(7, 10)]
}

/// Its preimage under `t(tau)`: `0, +-1, +-1/sqrt(-3), +-3/sqrt(5)`.
pub fn discriminant_tau() -> Vec<Scalar> {
    let i3 = Scalar::sqrt_of(-3).inv().expect("nonzero");
    let f5 = &Scalar::int(3) / &Scalar::sqrt_of(5);
    vec![Scalar::zero(), Scalar::one(), Scalar::int(-1), i3.clone(), -i3, f5.clone(), -f5]
}

/// One column of the special-value table: a pair `+-tau` (or a single value).
#[derive(Clone, Debug, Serialize)]
pub struct TauColumn {
    pub label: &'static str,
    pub tau: Vec<Value>,
    pub s: Vec<Value>,
    pub t: Vec<Value>,
}

/// The eight columns of special `tau` values, each with the images under
/// `s` and `t` computed exactly.
pub fn tau_table() -> Vec<TauColumn> {
    let sq = Scalar::sqrt_of;
    let inv = |x: Scalar| x.inv().expect("nonzero");
    let pm = |x: Scalar| vec![Value::Finite(x.clone()), Value::Finite(-x)];
    let cols: Vec<(&'static str, Vec<Value>)> = vec![
        ("0", vec![Value::Finite(Scalar::zero())]),
        ("+-1", pm(Scalar::one())),
        ("+-1/sqrt(-3)", pm(inv(sq(-3)))),
        ("+-sqrt(-3)", pm(sq(-3))),
        ("-+3/sqrt(5)", vec![Value::Finite(-(&Scalar::int(3) / &sq(5))), Value::Finite(&Scalar::int(3) / &sq(5))]),
        ("+-1/sqrt(5)", pm(inv(sq(5)))),
        ("inf", vec![Value::Infinity]),
        ("+-sqrt(-3/5)", pm(Scalar::sqrt_rational(&crate::algebra::rat(-3, 5)))),
    ];
    cols.into_iter()
        .map(|(label, tau)| TauColumn {
            label,
            s: tau.iter().map(s_of_tau).collect(),
            t: tau.iter().map(t_of_tau).collect(),
            tau,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_values() {
        let one = Value::Finite(Scalar::one());
        assert_eq!(s_of_tau(&one), Value::Finite(Scalar::zero()));
        assert_eq!(t_of_tau(&one), Value::Finite(Scalar::ratio(1, 2)));
        let f = Value::Finite(&Scalar::int(3) / &Scalar::sqrt_of(5));
        assert_eq!(t_of_tau(&f), Value::Finite(Scalar::ratio(7, 10)));
        // (3/sqrt5) gives +1/(5 sqrt5); the sign pairs with -3/sqrt5 as -1/(5 sqrt5).
        let expect = (&Scalar::int(5) * &Scalar::sqrt_of(5)).inv().unwrap();
        assert_eq!(s_of_tau(&f), Value::Finite(expect));
    }

    #[test]
    fn ramification_at_four_points() {
        let r = ramification_points().unwrap();
        let taus: Vec<Scalar> = r.iter().map(|x| x.tau.finite().unwrap().clone()).collect();
        assert_eq!(taus.len(), 4);
        for want in [Scalar::sqrt_of(-3), -Scalar::sqrt_of(-3), Scalar::sqrt_of(5).inv().unwrap(), -Scalar::sqrt_of(5).inv().unwrap()] {
            assert!(taus.contains(&want), "{want}");
        }
    }
}
