use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::ring::Ring;
use crate::error::{Error, Result};

/// A square operator on `(C^n)^{⊗r}` with sparse entries.
///
/// Flat indices encode tuples with the first tensor factor most significant;
/// tuple entries are 1-based in the public API.
#[derive(Clone, PartialEq)]
pub struct OperatorMatrix<E> {
    n: usize,
    r: usize,
    entries: BTreeMap<(usize, usize), E>,
}

pub fn tuple_to_index(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &a| acc * n + (a - 1))
}

pub fn index_to_tuple(n: usize, r: usize, mut k: usize) -> Vec<usize> {
    let mut t = vec![0; r];
    for slot in t.iter_mut().rev() {
        *slot = k % n + 1;
        k /= n;
    }
    t
}

impl<E: Clone + Send + Sync + PartialEq> OperatorMatrix<E> {
    pub fn zero(n: usize, r: usize) -> Self {
        OperatorMatrix { n, r, entries: BTreeMap::new() }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize, r: usize) -> Self {
        let mut m = Self::zero(n, r);
        for k in 0..n.pow(r as u32) {
            m.entries.insert((k, k), ring.one());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.r as u32)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), E> {
        &self.entries
    }

    /// Stores `v` at flat position `(row, col)`, dropping zeros.
    pub fn set<R: Ring<Elem = E>>(&mut self, ring: &R, row: usize, col: usize, v: E) {
        if ring.is_zero(&v) {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), v);
        }
    }

    pub fn add_at<R: Ring<Elem = E>>(&mut self, ring: &R, row: usize, col: usize, v: &E) {
        let cur = self.entries.get(&(row, col));
        let s = match cur {
            Some(c) => ring.add(c, v),
            None => v.clone(),
        };
        self.set(ring, row, col, s);
    }

    pub fn get<R: Ring<Elem = E>>(&self, ring: &R, row: usize, col: usize) -> E {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(|| ring.zero())
    }

    /// Entry at 1-based index tuples.
    pub fn at<R: Ring<Elem = E>>(&self, ring: &R, row: &[usize], col: &[usize]) -> E {
        self.get(ring, tuple_to_index(self.n, row), tuple_to_index(self.n, col))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.r != other.r {
            return Err(Error::Dimension(format!(
                "({}, {}) vs ({}, {})",
                self.n, self.r, other.n, other.r
            )));
        }
        Ok(())
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.add_at(ring, i, j, v);
        }
        Ok(out)
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self> {
        self.add(ring, &other.neg(ring))
    }

    pub fn neg<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        let entries = self.entries.iter().map(|(&k, v)| (k, ring.neg(v))).collect();
        OperatorMatrix { n: self.n, r: self.r, entries }
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &crate::scalars::LaurentPoly) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (&(i, j), v) in &self.entries {
            out.set(ring, i, j, ring.scale(v, c));
        }
        out
    }

    /// Matrix product; entries multiply left factor first. Rows run in parallel.
    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut by_row: BTreeMap<usize, Vec<(usize, &E)>> = BTreeMap::new();
        for (&(i, k), v) in &self.entries {
            by_row.entry(i).or_default().push((k, v));
        }
        let mut by_row_other: BTreeMap<usize, Vec<(usize, &E)>> = BTreeMap::new();
        for (&(k, j), v) in &other.entries {
            by_row_other.entry(k).or_default().push((j, v));
        }
        let rows: Vec<(usize, Vec<(usize, &E)>)> = by_row.into_iter().collect();
        let computed: Result<Vec<Vec<((usize, usize), E)>>> = rows
            .par_iter()
            .map(|(i, row)| {
                let mut acc: BTreeMap<usize, E> = BTreeMap::new();
                for (k, a) in row {
                    if let Some(orow) = by_row_other.get(k) {
                        for (j, b) in orow {
                            let p = ring.mul(a, b)?;
                            match acc.get_mut(j) {
                                Some(cur) => *cur = ring.add(cur, &p),
                                None => {
                                    acc.insert(*j, p);
                                }
                            }
                        }
                    }
                }
                Ok(acc.into_iter().filter(|(_, v)| !ring.is_zero(v)).map(|(j, v)| ((*i, j), v)).collect())
            })
            .collect();
        let mut out = Self::zero(self.n, self.r);
        for row in computed? {
            out.entries.extend(row);
        }
        Ok(out)
    }

    /// Product of a chain of matrices, left to right.
    pub fn product<R: Ring<Elem = E>>(ring: &R, chain: &[&Self]) -> Result<Self> {
        let mut it = chain.iter();
        let first = it.next().ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
        let mut acc = (*first).clone();
        for m in it {
            acc = acc.mul(ring, m)?;
        }
        Ok(acc)
    }

    /// Swaps row and column index of tensor factor `factor` (1-based).
    pub fn partial_transpose(&self, factor: usize) -> Result<Self> {
        if factor == 0 || factor > self.r {
            return Err(Error::InvalidArgument(format!("factor {factor} out of range 1..={}", self.r)));
        }
        let stride = self.n.pow((self.r - factor) as u32);
        let digit = |k: usize| (k / stride) % self.n;
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j), v)| {
                let (a, b) = (digit(i), digit(j));
                ((i - a * stride + b * stride, j - b * stride + a * stride), v.clone())
            })
            .collect();
        Ok(OperatorMatrix { n: self.n, r: self.r, entries })
    }

    /// Full transpose.
    pub fn transpose(&self) -> Self {
        let entries = self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect();
        OperatorMatrix { n: self.n, r: self.r, entries }
    }

    /// Places an operator on `m.factors()` factors at the listed positions of an
    /// `r`-fold tensor product, acting as the identity elsewhere.
    pub fn embed(&self, positions: &[usize], r: usize) -> Result<Self> {
        if positions.len() != self.r {
            return Err(Error::InvalidArgument(format!("need {} positions", self.r)));
        }
        let mut seen = vec![false; r + 1];
        for &p in positions {
            if p == 0 || p > r || seen[p] {
                return Err(Error::InvalidArgument(format!("bad positions {positions:?} for r = {r}")));
            }
            seen[p] = true;
        }
        let rest: Vec<usize> = (1..=r).filter(|p| !seen[*p]).collect();
        let n = self.n;
        let mut out = Self::zero(n, r);
        let n_rest = n.pow(rest.len() as u32);
        for (&(i, j), v) in &self.entries {
            let ti = index_to_tuple(n, self.r, i);
            let tj = index_to_tuple(n, self.r, j);
            for k in 0..n_rest {
                let tk = index_to_tuple(n, rest.len(), k);
                let mut row = vec![0; r];
                let mut col = vec![0; r];
                for (slot, &p) in positions.iter().enumerate() {
                    row[p - 1] = ti[slot];
                    col[p - 1] = tj[slot];
                }
                for (slot, &p) in rest.iter().enumerate() {
                    row[p - 1] = tk[slot];
                    col[p - 1] = tk[slot];
                }
                out.entries.insert((tuple_to_index(n, &row), tuple_to_index(n, &col)), v.clone());
            }
        }
        Ok(out)
    }

    /// Converts entries into another ring.
    pub fn map<F: Clone + Send + Sync + PartialEq>(
        &self,
        f: impl Fn(&E) -> Result<F> + Sync,
        is_zero: impl Fn(&F) -> bool,
    ) -> Result<OperatorMatrix<F>> {
        let mut entries = BTreeMap::new();
        for (&k, v) in &self.entries {
            let w = f(v)?;
            if !is_zero(&w) {
                entries.insert(k, w);
            }
        }
        Ok(OperatorMatrix { n: self.n, r: self.r, entries })
    }

    /// Applies `f` to every entry in parallel, keeping the shape.
    pub fn par_map<R: Ring<Elem = E>>(&self, ring: &R, f: impl Fn(&E) -> Result<E> + Sync) -> Result<Self> {
        let items: Vec<(&(usize, usize), &E)> = self.entries.iter().collect();
        let mapped: Result<Vec<((usize, usize), E)>> = items.par_iter().map(|(k, v)| Ok((**k, f(v)?))).collect();
        let mut out = Self::zero(self.n, self.r);
        for (k, v) in mapped? {
            out.set(ring, k.0, k.1, v);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// First entry where the two matrices differ, as 1-based tuples.
    pub fn first_difference<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Option<(Vec<usize>, Vec<usize>, E, E)> {
        let keys: std::collections::BTreeSet<&(usize, usize)> =
            self.entries.keys().chain(other.entries.keys()).collect();
        for &&(i, j) in &keys {
            let a = self.get(ring, i, j);
            let b = other.get(ring, i, j);
            if a != b {
                return Some((index_to_tuple(self.n, self.r, i), index_to_tuple(self.n, self.r, j), a, b));
            }
        }
        None
    }
}

impl<E: fmt::Display> fmt::Display for OperatorMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(i, j), v) in &self.entries {
            let ti = index_to_tuple(self.n, self.r, i);
            let tj = index_to_tuple(self.n, self.r, j);
            writeln!(f, "{ti:?} {tj:?}: {v}")?;
        }
        Ok(())
    }
}

impl<E: fmt::Display> fmt::Debug for OperatorMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
