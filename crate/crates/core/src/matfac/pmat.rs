//! Small dense matrices of polynomials.

use crate::error::Error;
use crate::poly::{PolyRing, Polynomial, Rat};
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct PMat {
    pub ring: PolyRing,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Vec<Polynomial>>,
}

impl PMat {
    pub fn new(ring: PolyRing, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        for row in &entries {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged matrix".into()));
            }
            for p in row {
                if !p.ring().same_ring(&ring) {
                    return Err(Error::RingMismatch);
                }
            }
        }
        Ok(PMat {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ring: PolyRing, rows: usize, cols: usize) -> Self {
        let entries = vec![vec![ring.zero(); cols]; rows];
        PMat {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: PolyRing, n: usize) -> Self {
        let mut m = PMat::zero(ring.clone(), n, n);
        for i in 0..n {
            m.entries[i][i] = ring.one();
        }
        m
    }

    pub fn scalar(ring: PolyRing, n: usize, p: &Polynomial) -> Self {
        let mut m = PMat::zero(ring, n, n);
        for i in 0..n {
            m.entries[i][i] = p.clone();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i][j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i]
    }

    pub fn rows_vec(&self) -> &Vec<Vec<Polynomial>> {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.entries[i][j].clone()).collect()
    }

    pub fn transpose(&self) -> PMat {
        let mut out = PMat::zero(self.ring.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j][i] = self.entries[i][j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|p| p.is_zero()))
    }

    pub fn neg(&self) -> PMat {
        PMat {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|p| p.neg()).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &PMat) -> Result<PMat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[i][j] = self.entries[i][j].add(&other.entries[i][j])?;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PMat) -> Result<PMat> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PMat) -> Result<PMat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PMat::zero(self.ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.entries[k][j].is_zero() {
                        continue;
                    }
                    let prod = self.entries[i][k].mul(&other.entries[k][j])?;
                    out.entries[i][j] = out.entries[i][j].add(&prod)?;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> PMat {
        PMat {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|p| p.scale(c)).collect())
                .collect(),
        }
    }

    pub fn map<F: Fn(&Polynomial) -> Polynomial>(&self, f: F) -> PMat {
        PMat {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Determinant by cofactor expansion; sizes here are tiny.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of non-square".into()));
        }
        Ok(det_rec(&self.entries, &self.ring))
    }

    /// Adjugate matrix (transpose of cofactors): `self * adj = det * I`.
    pub fn adjugate(&self) -> Result<PMat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("adjugate of non-square".into()));
        }
        let n = self.rows;
        let mut out = PMat::zero(self.ring.clone(), n, n);
        if n == 0 {
            return Ok(out);
        }
        if n == 1 {
            out.entries[0][0] = self.ring.one();
            return Ok(out);
        }
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<Polynomial>> = (0..n)
                    .filter(|&r| r != i)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| self.entries[r][c].clone())
                            .collect()
                    })
                    .collect();
                let d = det_rec(&minor, &self.ring);
                let signed = if (i + j) % 2 == 0 { d } else { d.neg() };
                out.entries[j][i] = signed;
            }
        }
        Ok(out)
    }

    /// Delete one row and one column.
    pub fn delete_row_col(&self, row: usize, col: usize) -> PMat {
        let entries: Vec<Vec<Polynomial>> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != row)
            .map(|(_, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let rows = self.rows - 1;
        let cols = self.cols - 1;
        PMat {
            ring: self.ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn delete_col(&self, col: usize) -> PMat {
        let entries: Vec<Vec<Polynomial>> = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        PMat {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols - 1,
            entries,
        }
    }
}

fn det_rec(m: &[Vec<Polynomial>], ring: &PolyRing) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = ring.zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _p)| c != j).map(|(_c, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&det_rec(&minor, ring)).expect("same ring");
        acc = if j % 2 == 0 {
            acc.add(&term).expect("same ring")
        } else {
            acc.sub(&term).expect("same ring")
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_adjugate() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let m = PMat::new(
            r.clone(),
            vec![
                vec![r.parse("x").unwrap(), r.parse("y").unwrap()],
                vec![r.parse("y^2").unwrap(), r.parse("-x").unwrap()],
            ],
        )
        .unwrap();
        let d = m.det().unwrap();
        assert_eq!(d, r.parse("-x^2 - y^3").unwrap());
        let adj = m.adjugate().unwrap();
        let prod = m.mul(&adj).unwrap();
        assert_eq!(prod, PMat::scalar(r.clone(), 2, &d));
    }

    #[test]
    fn identity_multiplication() {
        let r = PolyRing::with_vars(&["x"]);
        let id = PMat::identity(r.clone(), 3);
        let m = PMat::scalar(r.clone(), 3, &r.parse("x^2 + 1").unwrap());
        assert_eq!(id.mul(&m).unwrap(), m);
    }
}
