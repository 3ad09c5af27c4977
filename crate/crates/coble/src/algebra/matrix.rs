//! Scalar and polynomial matrices: exact rank, kernel and determinants.

use super::poly::{CtxRef, Poly};
use super::{AlgebraError, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        ScalarMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * o.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Scalar::zero(), |acc, j| &acc + &(self.get(i, j) * &v[j])))
            .collect()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ScalarMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space; `rank + basis.len() == cols`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<Scalar, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv()?;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    ctx: CtxRef,
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_rows(ctx: &CtxRef, rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        PolyMatrix { ctx: ctx.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(ctx: &CtxRef, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Poly::one(ctx) } else { Poly::zero(ctx) }).collect())
            .collect();
        Self::from_rows(ctx, rows)
    }

    pub fn ctx(&self) -> &CtxRef {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        let data: Vec<Poly> = self.data.iter().map(f).collect();
        let ctx = data.first().map_or(self.ctx.clone(), |p| p.ctx().clone());
        PolyMatrix { ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        PolyMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Poly) -> Self {
        self.map(|p| p * c)
    }

    pub fn substitute(&self, images: &[Poly]) -> Result<Self, AlgebraError> {
        let data = self.data.iter().map(|p| p.substitute(images)).collect::<Result<Vec<_>, _>>()?;
        let ctx = images.first().map_or(self.ctx.clone(), |p| p.ctx().clone());
        Ok(PolyMatrix { ctx, rows: self.rows, cols: self.cols, data })
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<ScalarMatrix, AlgebraError> {
        let rows = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).eval(point)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ScalarMatrix::from_rows(rows))
    }

    /// `v^T M v` for a column of polynomials.
    pub fn quadratic_form(&self, v: &[Poly]) -> Poly {
        assert_eq!(v.len(), self.rows);
        let ctx = v[0].ctx().clone();
        let mut acc = Poly::zero(&ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc = &acc + &(&(&v[i] * self.get(i, j)) * &v[j]);
            }
        }
        acc
    }

    /// Cofactor expansion up to 4x4, fraction-free Bareiss elimination beyond.
    pub fn det(&self) -> Result<Poly, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows <= 4 {
            let idx: Vec<usize> = (0..self.rows).collect();
            Ok(self.cofactor_det(&idx, &idx))
        } else {
            self.bareiss_det()
        }
    }

    fn cofactor_det(&self, rows: &[usize], cols: &[usize]) -> Poly {
        match rows.len() {
            0 => Poly::one(&self.ctx),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = Poly::zero(&self.ctx);
                let r0 = rows[0];
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(r0, c);
                    if e.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = self.cofactor_det(&rows[1..], &sub_cols);
                    let t = e * &minor;
                    acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
                }
                acc
            }
        }
    }

    /// Bareiss elimination; every division is exact.
    pub fn bareiss_det(&self) -> Result<Poly, AlgebraError> {
        let n = self.rows;
        let mut m: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut prev = Poly::one(&self.ctx);
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                // prefer the sparsest nonzero pivot
                let Some(p) = (k + 1..n).filter(|&i| !m[i][k].is_zero()).min_by_key(|&i| m[i][k].nterms()) else {
                    return Ok(Poly::zero(&self.ctx));
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_divide(&prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::Ctx;
    use super::*;

    #[test]
    fn kernel_of_row() {
        let m = ScalarMatrix::from_ints(&[&[1, -1]]);
        let k = m.kernel();
        assert_eq!(k, vec![vec![Scalar::one(), Scalar::one()]]);
        assert!(ScalarMatrix::identity(3).kernel().is_empty());
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let ctx = Ctx::new(&["a", "b"]);
        let p = |s: &str| Poly::parse(&ctx, s).unwrap();
        let rows = vec![
            vec![p("a"), p("b"), p("1"), p("0")],
            vec![p("b"), p("a^2"), p("0"), p("2")],
            vec![p("1"), p("0"), p("a*b"), p("b")],
            vec![p("0"), p("3"), p("b"), p("a")],
        ];
        let m = PolyMatrix::from_rows(&ctx, rows);
        assert_eq!(m.det().unwrap(), m.bareiss_det().unwrap());
    }
}
