//! Dense univariate polynomials over [`Scalar`], used for elimination
//! bookkeeping: gcds, Euclidean resultants and interpolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{CtxRef, Mono, Poly};
use super::{AlgebraError, Scalar};

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly(pub Vec<Scalar>);

impl UPoly {
    pub fn new(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: Scalar) -> Self {
        Self::new(vec![-r, Scalar::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Scalar::int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> Scalar {
        self.0.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        Self::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        Self::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * &Scalar::int(i as i64)).collect())
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let mut r = self.0.clone();
        let inv = d.lc().inv()?;
        let mut q = vec![Scalar::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() * &inv;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * dc);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn exact_div(&self, d: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::NotDivisible)
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv().unwrap())
    }

    /// For rational polynomials: the primitive integer polynomial with positive
    /// leading coefficient proportional to `self`.
    pub fn primitive(&self) -> Self {
        if self.is_zero() || self.0.iter().any(|c| !c.is_rational()) {
            return self.monic();
        }
        let mut den = BigInt::one();
        for c in &self.0 {
            den = den.lcm(c.as_rational().unwrap().denom());
        }
        let ints: Vec<BigInt> =
            self.0.iter().map(|c| (c.as_rational().unwrap() * BigRational::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        Self::new(ints.into_iter().map(|x| Scalar::from(x / &g)).collect())
    }

    /// Monic gcd (primitive, for rational inputs). Uses a primitive remainder
    /// sequence to keep coefficients small.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = o.primitive();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let Some(da) = self.degree() else { return Self::zero() };
        if da < dd {
            return self.clone();
        }
        let lc = d.lc();
        let mut r = self.0.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap().clone();
            for x in r.iter_mut() {
                *x = &*x * &lc;
            }
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * dc);
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Squarefree part (monic, primitive for rational input).
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return UPoly::constant(Scalar::one());
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").primitive()
    }

    /// Largest `k` with `f^k | self`, and the cofactor.
    pub fn strip_factor(&self, f: &Self) -> (u32, Self) {
        let mut k = 0;
        let mut cur = self.clone();
        if cur.is_zero() || f.degree().unwrap_or(0) == 0 {
            return (0, cur);
        }
        while let Ok(q) = cur.exact_div(f) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    /// Resultant by the Euclidean algorithm over the coefficient field.
    pub fn resultant(&self, o: &Self) -> Scalar {
        let (Some(m), Some(n)) = (self.degree(), o.degree()) else {
            return Scalar::zero();
        };
        if n == 0 {
            return o.lc().pow(m as u32);
        }
        if m == 0 {
            return self.lc().pow(n as u32);
        }
        // Res(A,B) = (-1)^{mn} Res(B,A); Res(B,A) = lc(B)^{m - deg R} Res(B,R)
        let (_, r) = self.divrem(o).expect("nonzero divisor");
        let sign = if (m * n) % 2 == 1 { Scalar::int(-1) } else { Scalar::one() };
        match r.degree() {
            None => Scalar::zero(),
            Some(dr) => {
                let rest = o.resultant(&r);
                &(&sign * &o.lc().pow((m - dr) as u32)) * &rest
            }
        }
    }

    /// Converts to a polynomial in variable `var` of `ctx`.
    pub fn to_poly(&self, ctx: &CtxRef, var: usize) -> Poly {
        let terms = self
            .0
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let mut e = vec![0; ctx.len()];
                e[var] = k as u32;
                (Mono(e), c.clone())
            })
            .collect();
        Poly::from_terms(ctx, terms)
    }

    /// Reads a polynomial that involves only `var`.
    pub fn from_poly(p: &Poly, var: usize) -> Result<Self, AlgebraError> {
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut c = vec![Scalar::zero(); deg + 1];
        for (m, x) in p.terms() {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return Err(AlgebraError::Degenerate(format!("{p} is not univariate")));
            }
            c[m.0[var] as usize] = x.clone();
        }
        Ok(Self::new(c))
    }

    pub fn display(&self, var: &str) -> String {
        let ctx = super::poly::Ctx::new(&[var]);
        self.to_poly(&ctx, 0).to_string()
    }
}

/// Newton interpolation through `(x_i, y_i)` with distinct nodes.
pub fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> UPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<Scalar> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - j];
            dd[i] = num / den;
        }
    }
    // Horner in Newton form.
    let mut acc = UPoly::zero();
    for i in (0..n).rev() {
        acc = acc.mul(&UPoly::linear_root(xs[i].clone())).add(&UPoly::constant(dd[i].clone()));
    }
    acc
}

/// Integer interpolation nodes 0, 1, -1, 2, -2, ...
pub fn node(k: usize) -> Scalar {
    let v = k.div_ceil(2) as i64;
    if k % 2 == 1 {
        Scalar::int(v)
    } else {
        Scalar::int(-v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resultant_of_small_polys() {
        let a = UPoly::from_ints(&[1, 0, 1]);
        let b = UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(a.resultant(&b), Scalar::int(9));
        let c = UPoly::from_ints(&[-1, 0, 1]);
        let d = UPoly::from_ints(&[-1, 1]);
        assert!(c.resultant(&d).is_zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = UPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = UPoly::from_ints(&[1, 2, 1]); // (x+1)^2
        assert_eq!(a.gcd(&b), UPoly::from_ints(&[1, 1]));
        assert_eq!(b.squarefree(), UPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UPoly::from_ints(&[3, -1, 0, 7, 2]);
        let xs: Vec<Scalar> = (0..5).map(node).collect();
        let ys: Vec<Scalar> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }
}
