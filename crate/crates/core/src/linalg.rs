//! Dense exact linear algebra over the rationals, plus a sparse rank
//! routine for the large truncated Koszul matrices.

use num_traits::{One, Zero};

use crate::poly::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    a: Vec<Vec<Rat>>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            a: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    pub fn from_rows(a: Vec<Vec<Rat>>) -> Self {
        let rows = a.len();
        let cols = a.first().map_or(0, |r| r.len());
        assert!(a.iter().all(|r| r.len() == cols));
        QMat { rows, cols, a }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.a[i][i] = Rat::one();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.a[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.a[i]
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.a[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.a[k][j].is_zero() {
                        let prod = &self.a[i][k] * &other.a[k][j];
                        out.a[i][j] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.a[i][c].is_zero()) else {
                continue;
            };
            self.a.swap(r, p);
            let inv = self.a[r][c].recip();
            for j in c..self.cols {
                let v = &self.a[r][j] * &inv;
                self.a[r][j] = v;
            }
            for i in 0..self.rows {
                if i != r && !self.a[i][c].is_zero() {
                    let f = self.a[i][c].clone();
                    for j in c..self.cols {
                        let sub = &f * &self.a[r][j];
                        self.a[i][j] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, one vector per non-pivot column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.a[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial, coefficients from constant to leading
    /// (monic, degree = n). Hessenberg reduction followed by the standard
    /// recurrence; exact over the rationals.
    pub fn charpoly(&self) -> Vec<Rat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return vec![Rat::one()];
        }
        let mut h = self.a.clone();
        // Hessenberg form via similarity transformations.
        for m in 1..n.saturating_sub(1) {
            // find pivot in column m-1, rows m..n
            let pivot = (m..n).find(|&i| !h[i][m - 1].is_zero());
            let Some(p) = pivot else { continue };
            if p != m {
                h.swap(p, m);
                for row in h.iter_mut() {
                    row.swap(p, m);
                }
            }
            let d = h[m][m - 1].clone();
            for i in m + 1..n {
                if h[i][m - 1].is_zero() {
                    continue;
                }
                let u = &h[i][m - 1] / &d;
                for j in 0..n {
                    let sub = &u * &h[m][j];
                    h[i][j] -= sub;
                }
                for r in 0..n {
                    let add = &u * &h[r][i];
                    h[r][m] += add;
                }
            }
        }
        // p_0 = 1, p_m built up from the Hessenberg matrix.
        let mut polys: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
        for m in 1..=n {
            // (t - h[m-1][m-1]) * p_{m-1}
            let prev = &polys[m - 1];
            let mut cur = vec![Rat::zero(); prev.len() + 1];
            for (i, c) in prev.iter().enumerate() {
                cur[i + 1] += c;
                let sub = c * &h[m - 1][m - 1];
                cur[i] -= sub;
            }
            let mut prod = Rat::one();
            for i in 1..m {
                // product of subdiagonal entries h[m-j][m-j-1], j = 1..i
                prod *= &h[m - i][m - i - 1];
                if prod.is_zero() {
                    break;
                }
                let coef = &h[m - 1 - i][m - 1] * &prod;
                if coef.is_zero() {
                    continue;
                }
                for (k, c) in polys[m - 1 - i].iter().enumerate() {
                    let sub = c * &coef;
                    cur[k] -= sub;
                }
            }
            polys.push(cur);
        }
        polys.pop().unwrap()
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let mut m = self.a.clone();
        let n = self.rows;
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            let inv = m[c][c].recip();
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = &m[i][c] * &inv;
                for j in c..n {
                    let sub = &f * &m[c][j];
                    m[i][j] -= sub;
                }
            }
        }
        det
    }
}

/// Rank of a sparse matrix given by columns of `(row, value)` pairs.
pub fn sparse_rank(cols: impl IntoIterator<Item = Vec<(usize, Rat)>>) -> usize {
    use std::collections::BTreeMap;
    // pivot row -> reduced column owning that pivot
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
    for col in cols {
        let mut v: BTreeMap<usize, Rat> = col.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        loop {
            let Some((&lead, _)) = v.iter().next() else {
                break;
            };
            match pivots.get(&lead) {
                None => {
                    pivots.insert(lead, v);
                    break;
                }
                Some(p) => {
                    let f = &v[&lead] / &p[&lead];
                    for (r, x) in p.iter() {
                        let sub = &f * x;
                        match v.get_mut(r) {
                            Some(e) => {
                                *e -= sub;
                                if e.is_zero() {
                                    v.remove(r);
                                }
                            }
                            None => {
                                v.insert(*r, -sub);
                            }
                        }
                    }
                }
            }
        }
    }
    pivots.len()
}

/// Feasible point of `A w = 0`, `w_i >= 1`, if one exists.
///
/// Used to search for positive weight vectors: any strictly positive solution
/// can be scaled so that every coordinate is at least one.
pub fn positive_kernel_point(constraints: &QMat) -> Option<Vec<Rat>> {
    let n = constraints.cols;
    let kernel = if constraints.rows == 0 {
        QMat::identity(n).a
    } else {
        constraints.kernel()
    };
    if kernel.is_empty() {
        return None;
    }
    // w = K^T lambda, need each coordinate >= 1.
    let k = kernel.len();
    let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for i in 0..n {
        let coefs: Vec<Rat> = kernel.iter().map(|b| b[i].clone()).collect();
        ineqs.push((coefs, Rat::one()));
    }
    let lambda = fourier_motzkin(ineqs, k)?;
    let mut w = vec![Rat::zero(); n];
    for (b, l) in kernel.iter().zip(&lambda) {
        for i in 0..n {
            let add = &b[i] * l;
            w[i] += add;
        }
    }
    Some(w)
}

/// Solve `sum_j c_j x_j >= d` systems by Fourier-Motzkin elimination.
/// Returns one feasible point. Exponential in the variable count, which is
/// tiny here (weight vectors of desk-scale rings).
fn fourier_motzkin(ineqs: Vec<(Vec<Rat>, Rat)>, nvars: usize) -> Option<Vec<Rat>> {
    if nvars == 0 {
        return ineqs
            .iter()
            .all(|(_, d)| *d <= Rat::zero())
            .then(Vec::new);
    }
    let v = nvars - 1;
    let mut lower: Vec<(Vec<Rat>, Rat)> = Vec::new(); // x_v >= expr
    let mut upper: Vec<(Vec<Rat>, Rat)> = Vec::new(); // x_v <= expr
    let mut rest: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (c, d) in ineqs {
        let cv = c[v].clone();
        if cv.is_zero() {
            rest.push((c, d));
        } else if cv > Rat::zero() {
            // x_v >= (d - sum_{j<v} c_j x_j) / cv
            let coefs = c[..v].iter().map(|x| -(x / &cv)).collect();
            lower.push((coefs, &d / &cv));
        } else {
            let coefs = c[..v].iter().map(|x| -(x / &cv)).collect();
            upper.push((coefs, &d / &cv));
        }
    }
    // every lower bound must be <= every upper bound
    for (lc, ld) in &lower {
        for (uc, ud) in &upper {
            let coefs: Vec<Rat> = uc.iter().zip(lc).map(|(u, l)| u - l).collect();
            // uc.x + ud >= lc.x + ld  <=>  (uc-lc).x >= ld - ud
            rest.push((coefs, ld - ud));
        }
    }
    for (c, _) in rest.iter_mut() {
        c.truncate(v);
    }
    let partial = fourier_motzkin(rest, v)?;
    let eval = |bound: &(Vec<Rat>, Rat)| -> Rat {
        let mut acc = bound.1.clone();
        for (c, x) in bound.0.iter().zip(&partial) {
            acc += c * x;
        }
        acc
    };
    let lo = lower.iter().map(&eval).max();
    let hi = upper.iter().map(&eval).min();
    let x = match (lo, hi) {
        (Some(l), Some(h)) => {
            if l > h {
                return None;
            }
            l
        }
        (Some(l), None) => l,
        (None, Some(h)) => h,
        (None, None) => Rat::zero(),
    };
    let mut out = partial;
    out.push(x);
    Some(out)
}
