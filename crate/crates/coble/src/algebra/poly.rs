//! Sparse multivariate polynomials over [`Scalar`] in a named variable context.
//!
//! Terms are kept sorted in decreasing graded reverse lexicographic order,
//! with no zero coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{AlgebraError, Scalar};

/// An ordered list of variable names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ctx {
    names: Vec<String>,
}

pub type CtxRef = Arc<Ctx>;

impl Ctx {
    pub fn new<S: AsRef<str>>(names: &[S]) -> CtxRef {
        Arc::new(Ctx { names: names.iter().map(|s| s.as_ref().to_string()).collect() })
    }

    /// `prefix1, ..., prefixN` style names.
    pub fn indexed(prefix: &str, range: std::ops::RangeInclusive<usize>) -> CtxRef {
        let names: Vec<String> = range.map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Generators of a context as polynomials.
pub fn gens(ctx: &CtxRef) -> Vec<Poly> {
    (0..ctx.len()).map(|i| Poly::var(ctx, i)).collect()
}

/// Exponent vector with graded reverse lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(n: usize) -> Self {
        Mono(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&o.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        match self.degree().cmp(&o.degree()) {
            Ordering::Equal => {}
            c => return c,
        }
        for (a, b) in self.0.iter().zip(&o.0).rev() {
            if a != b {
                // smaller exponent in the last differing variable is larger
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone)]
pub struct Poly {
    ctx: CtxRef,
    terms: Vec<(Mono, Scalar)>,
}

impl PartialEq for Poly {
    fn eq(&self, o: &Self) -> bool {
        same_ctx(&self.ctx, &o.ctx) && self.terms == o.terms
    }
}

impl Eq for Poly {}

fn same_ctx(a: &CtxRef, b: &CtxRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Poly {
    pub fn zero(ctx: &CtxRef) -> Self {
        Poly { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn constant(ctx: &CtxRef, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(ctx);
        }
        Poly { ctx: ctx.clone(), terms: vec![(Mono::one(ctx.len()), c)] }
    }

    pub fn int(ctx: &CtxRef, n: i64) -> Self {
        Self::constant(ctx, Scalar::int(n))
    }

    pub fn one(ctx: &CtxRef) -> Self {
        Self::int(ctx, 1)
    }

    pub fn var(ctx: &CtxRef, i: usize) -> Self {
        assert!(i < ctx.len(), "variable index out of range");
        let mut e = vec![0; ctx.len()];
        e[i] = 1;
        Poly { ctx: ctx.clone(), terms: vec![(Mono(e), Scalar::one())] }
    }

    pub fn var_named(ctx: &CtxRef, name: &str) -> Result<Self, AlgebraError> {
        let i = ctx.index_of(name).ok_or_else(|| AlgebraError::UnknownVariable(name.into()))?;
        Ok(Self::var(ctx, i))
    }

    pub fn monomial(ctx: &CtxRef, exps: Vec<u32>, c: Scalar) -> Self {
        assert_eq!(exps.len(), ctx.len());
        Self::from_terms(ctx, vec![(Mono(exps), c)])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ctx: &CtxRef, terms: Vec<(Mono, Scalar)>) -> Self {
        let mut acc: HashMap<Mono, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.0.len(), ctx.len(), "exponent vector length");
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: &CtxRef, acc: HashMap<Mono, Scalar>) -> Self {
        let mut terms: Vec<(Mono, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { ctx: ctx.clone(), terms }
    }

    pub fn ctx(&self) -> &CtxRef {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            Some(Scalar::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Leading term under grevlex.
    pub fn leading(&self) -> Option<&(Mono, Scalar)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.0[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degree_if_homogeneous(&vec![1; self.ctx.len()]).is_some() || self.is_zero()
    }

    /// Common weighted degree of all terms, if the polynomial is weighted homogeneous.
    pub fn weighted_degree_if_homogeneous(&self, weights: &[u32]) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.0.iter().zip(weights).map(|(e, w)| e * w).sum::<u32>());
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// The quadratic field the coefficients live in (0 for Q).
    pub fn field(&self) -> i64 {
        self.terms.iter().map(|(_, c)| c.field()).find(|&d| d != 0).unwrap_or(0)
    }

    fn check_ctx(&self, o: &Poly) -> Result<(), AlgebraError> {
        if same_ctx(&self.ctx, &o.ctx) {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch(self.ctx.names().join(","), o.ctx.names().join(",")))
        }
    }

    fn merge(&self, o: &Poly, negate: bool) -> Result<Poly, AlgebraError> {
        self.check_ctx(o)?;
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let ord = if i == self.terms.len() {
                Ordering::Less
            } else if j == o.terms.len() {
                Ordering::Greater
            } else {
                self.terms[i].0.cmp(&o.terms[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &o.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        self.terms[i].1.try_sub(&o.terms[j].1)?
                    } else {
                        self.terms[i].1.try_add(&o.terms[j].1)?
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(Poly { ctx: self.ctx.clone(), terms: out })
    }

    pub fn try_add(&self, o: &Poly) -> Result<Poly, AlgebraError> {
        self.merge(o, false)
    }

    pub fn try_sub(&self, o: &Poly) -> Result<Poly, AlgebraError> {
        self.merge(o, true)
    }

    pub fn try_mul(&self, o: &Poly) -> Result<Poly, AlgebraError> {
        self.check_ctx(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Poly::zero(&self.ctx));
        }
        let mut acc: HashMap<Mono, Scalar> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let c = c1.try_mul(c2)?;
                match acc.get_mut(&m) {
                    Some(v) => *v = v.try_add(&c)?,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(&self.ctx, acc))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coeff().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, AlgebraError> {
        if point.len() != self.ctx.len() {
            return Err(AlgebraError::Arity { expected: self.ctx.len(), got: point.len() });
        }
        let mut powers: Vec<Vec<Scalar>> = point.iter().map(|x| vec![Scalar::one(), x.clone()]).collect();
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().try_mul(&pw[1])?;
                    pw.push(next);
                }
                t = t.try_mul(&pw[e as usize])?;
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Composition: replaces variable `i` by `images[i]`; all images share a target context.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly, AlgebraError> {
        if images.len() != self.ctx.len() {
            return Err(AlgebraError::Arity { expected: self.ctx.len(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ctx.clone(),
            None => return Ok(self.clone()),
        };
        for im in images {
            if !same_ctx(&im.ctx, &target) {
                return Err(AlgebraError::ContextMismatch(
                    target.names().join(","),
                    im.ctx.names().join(","),
                ));
            }
        }
        let mut powers: Vec<Vec<Poly>> =
            images.iter().map(|x| vec![Poly::one(&target), x.clone()]).collect();
        let mut acc: HashMap<Mono, Scalar> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().try_mul(&pw[1])?;
                    pw.push(next);
                }
                t = t.try_mul(&pw[e as usize])?;
            }
            for (tm, tc) in t.terms {
                match acc.get_mut(&tm) {
                    Some(v) => *v = v.try_add(&tc)?,
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        Ok(Self::from_map(&target, acc))
    }

    /// Replaces selected variables by scalars, keeping the context.
    pub fn specialize(&self, values: &[(usize, Scalar)]) -> Poly {
        let images: Vec<Poly> = (0..self.ctx.len())
            .map(|i| match values.iter().find(|(j, _)| *j == i) {
                Some((_, v)) => Poly::constant(&self.ctx, v.clone()),
                None => Poly::var(&self.ctx, i),
            })
            .collect();
        self.substitute(&images).expect("specialization within one context")
    }

    /// Moves the polynomial to another context by renaming variables: variable
    /// `i` of `self` becomes variable `map[i]` of `target`.
    pub fn embed(&self, target: &CtxRef, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.ctx.len());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; target.len()];
                for (i, &x) in m.0.iter().enumerate() {
                    e[map[i]] += x;
                }
                (Mono(e), c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    pub fn partial(&self, var: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[var];
                e[var] -= 1;
                (Mono(e), c * &Scalar::int(k as i64))
            })
            .collect();
        Poly::from_terms(&self.ctx, terms)
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.ctx.len()).map(|i| self.partial(i)).collect()
    }

    /// Coefficients with respect to `var`: `result[k]` multiplies `var^k`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Mono, Scalar)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var] as usize;
            e[var] = 0;
            buckets[k].push((Mono(e), c.clone()));
        }
        buckets.into_iter().map(|t| Poly::from_terms(&self.ctx, t)).collect()
    }

    /// Exact division. Returns `NotDivisible` if `q` does not divide `self`.
    ///
    /// With a single divisor the grevlex remainder is unique, so a nonzero
    /// remainder proves non-divisibility.
    pub fn exact_divide(&self, q: &Poly) -> Result<Poly, AlgebraError> {
        self.check_ctx(q)?;
        if q.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(c) = q.constant_value() {
            return Ok(self.scale(&c.inv()?));
        }
        let (lm, lc) = q.terms[0].clone();
        let lc_inv = lc.inv()?;
        let mut rem: BTreeMap<Mono, Scalar> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Scalar)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let Some(qm) = m.div(&lm) else {
                return Err(AlgebraError::NotDivisible);
            };
            let qc = c.try_mul(&lc_inv)?;
            for (tm, tc) in q.terms.iter().skip(1) {
                let mm = tm.mul(&qm);
                let delta = tc.try_mul(&qc)?;
                match rem.get_mut(&mm) {
                    Some(v) => {
                        let nv = v.try_sub(&delta)?;
                        if nv.is_zero() {
                            rem.remove(&mm);
                        } else {
                            *v = nv;
                        }
                    }
                    None => {
                        rem.insert(mm, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Ok(Poly { ctx: self.ctx.clone(), terms: quot })
    }

    /// `Some(c)` with `self = c * other`, when the two are proportional by a
    /// scalar. Zero is proportional to zero with `c = 1`.
    pub fn ratio_to(&self, other: &Poly) -> Option<Scalar> {
        if self.is_zero() && other.is_zero() {
            return Some(Scalar::one());
        }
        if self.terms.len() != other.terms.len() || self.is_zero() || other.is_zero() {
            return None;
        }
        let c = self.terms[0].1.try_div(&other.terms[0].1).ok()?;
        for ((m1, c1), (m2, c2)) in self.terms.iter().zip(&other.terms) {
            if m1 != m2 || c1 != &(c2 * &c) {
                return None;
            }
        }
        Some(c)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect();
        Poly::from_terms(&self.ctx, terms)
    }

    /// Galois conjugation of all coefficients.
    pub fn conj(&self) -> Poly {
        self.map_coeffs(|c| c.conj())
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0)).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a> $tr<&'a Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, o: &'a Poly) -> Poly {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, o: Poly) -> Poly {
                (&self).$try(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, o: &'a Poly) -> Poly {
                (&self).$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, o: Poly) -> Poly {
                self.$try(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Scalar::int(-1))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Scalar::int(-1))
    }
}

impl<'a> Mul<&'a Scalar> for &'a Poly {
    type Output = Poly;
    fn mul(self, c: &'a Scalar) -> Poly {
        self.scale(c)
    }
}

impl Mul<Scalar> for Poly {
    type Output = Poly;
    fn mul(self, c: Scalar) -> Poly {
        self.scale(&c)
    }
}

/// Sum of an iterator of polynomials in `ctx`.
pub fn sum<'a>(ctx: &CtxRef, it: impl IntoIterator<Item = &'a Poly>) -> Poly {
    it.into_iter().fold(Poly::zero(ctx), |a, b| &a + b)
}

/// Product of an iterator of polynomials in `ctx`.
pub fn product<'a>(ctx: &CtxRef, it: impl IntoIterator<Item = &'a Poly>) -> Poly {
    it.into_iter().fold(Poly::one(ctx), |a, b| &a * b)
}

/// Elementary symmetric polynomial of degree `k` in the given polynomials.
pub fn elementary(ctx: &CtxRef, xs: &[Poly], k: usize) -> Poly {
    // e_k via the recursion over prefixes.
    let mut e = vec![Poly::zero(ctx); k + 1];
    e[0] = Poly::one(ctx);
    for x in xs {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * x;
            e[j] = &e[j] + &add;
        }
    }
    e[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_order() {
        // x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2 in grevlex
        let m = |e: [u32; 3]| Mono(e.to_vec());
        let seq = [m([2, 0, 0]), m([1, 1, 0]), m([0, 2, 0]), m([1, 0, 1]), m([0, 1, 1]), m([0, 0, 2])];
        for w in seq.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
        assert!(m([0, 0, 3]) > m([1, 1, 0]));
    }

    #[test]
    fn elementary_symmetric() {
        let ctx = Ctx::indexed("x", 1..=3);
        let g = gens(&ctx);
        let e2 = elementary(&ctx, &g, 2);
        assert_eq!(e2, &(&g[0] * &g[1]) + &(&(&g[0] * &g[2]) + &(&g[1] * &g[2])));
    }

    #[test]
    fn division_reports_remainder() {
        let ctx = Ctx::new(&["x", "y"]);
        let g = gens(&ctx);
        let p = &(&g[0] * &g[0]) - &(&g[1] * &g[1]);
        let q = &g[0] - &g[1];
        assert_eq!(p.exact_divide(&q).unwrap(), &g[0] + &g[1]);
        assert!(matches!((&p + &Poly::one(&ctx)).exact_divide(&q), Err(AlgebraError::NotDivisible)));
    }
}
