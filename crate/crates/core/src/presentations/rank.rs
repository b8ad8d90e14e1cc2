use std::collections::BTreeMap;

use super::Presentation;
use crate::error::{Error, Result};
use crate::freealg::{GenSym, NcPoly, Word};
use crate::scalars::LaurentPoly;

/// Rank of a matrix over ℚ[q^±] by fraction-free (Bareiss) elimination.
pub fn rank_of_rows(rows: &[Vec<LaurentPoly>]) -> Result<usize> {
    let mut a: Vec<Vec<LaurentPoly>> = rows.to_vec();
    let m = a.len();
    if m == 0 {
        return Ok(0);
    }
    let ncols = a[0].len();
    let vars = a[0].first().map(|c| c.vars().clone()).unwrap_or_else(crate::scalars::VarTable::q);
    let mut prev = LaurentPoly::one(&vars);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..m {
            let factor = a[i][col].clone();
            for j in col..ncols {
                let num = &(&pivot * &a[i][j]) - &(&factor * &a[rank][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::InvalidArgument(format!("inexact Bareiss step by {prev}")))?;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m {
            break;
        }
    }
    Ok(rank)
}

/// Rank of the images of `monomials` under `embed`, reduced in `host`.
pub fn independence_rank(
    monomials: &[Word],
    embed: &dyn Fn(GenSym) -> Result<NcPoly>,
    host: &Presentation,
) -> Result<usize> {
    let mut images = Vec::with_capacity(monomials.len());
    for w in monomials {
        let mut acc = NcPoly::one(&host.vars);
        for &g in w.iter() {
            acc = host.mul(&acc, &embed(g)?)?;
        }
        images.push(acc);
    }
    let mut cols: BTreeMap<Word, usize> = BTreeMap::new();
    for p in &images {
        for w in p.terms().keys() {
            let k = cols.len();
            cols.entry(w.clone()).or_insert(k);
        }
    }
    let rows: Vec<Vec<LaurentPoly>> = images
        .iter()
        .map(|p| {
            let mut row = vec![LaurentPoly::zero(&host.vars); cols.len()];
            for (w, c) in p.terms() {
                row[cols[w]] = c.clone();
            }
            row
        })
        .collect();
    rank_of_rows(&rows)
}
