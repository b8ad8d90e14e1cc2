use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::tensorcalc::permutations;

/// A permutation `p` of `1..N` together with `p′ = π_N(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermImage {
    pub p: Vec<usize>,
    pub p_prime: Vec<usize>,
}

impl fmt::Display for PermImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word(&self.p_prime))
    }
}

/// `1, 2, 3` as `"123"`; entries above 9 are comma separated.
pub fn word(p: &[usize]) -> String {
    if p.iter().all(|&x| x < 10) {
        p.iter().map(|x| x.to_string()).collect()
    } else {
        p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// The map `π_N` on permutations of `1..N`, `N ≥ 2`.
pub fn pi_map(p: &[usize]) -> Result<PermImage> {
    let n = p.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("pi_map needs N >= 2, got {n}")));
    }
    let mut seen = vec![false; n + 1];
    for &x in p {
        if x == 0 || x > n || seen[x] {
            return Err(Error::InvalidArgument(format!("{p:?} is not a permutation of 1..{n}")));
        }
        seen[x] = true;
    }
    let omega: Vec<usize> = (1..=n).collect();
    Ok(PermImage { p: p.to_vec(), p_prime: on_symbols(p, &omega) })
}

/// `π` on a permutation of the increasing symbol list `omega`.
fn on_symbols(p: &[usize], omega: &[usize]) -> Vec<usize> {
    let m = omega.len();
    if m <= 2 {
        return omega.to_vec();
    }
    let (x, y) = pair(p[0], p[m - 1], omega);
    let rest: Vec<usize> = omega.iter().copied().filter(|s| *s != p[0] && *s != p[m - 1]).collect();
    let inner = on_symbols(&p[1..m - 1], &rest);
    let mut out = Vec::with_capacity(m);
    out.push(x);
    out.extend_from_slice(&inner[..inner.len().saturating_sub(1)]);
    out.push(y);
    out.push(omega[m - 1]);
    out
}

/// The pair map on `(p₁, p_M)` relative to `ω₁ < … < ω_M`.
fn pair(first: usize, last: usize, omega: &[usize]) -> (usize, usize) {
    let m = omega.len();
    let (top, next, third) = (omega[m - 1], omega[m - 2], omega[m - 3]);
    match (first == top, last == top) {
        (false, false) => (last, first),
        (false, true) if first == next => (next, third),
        (false, true) => (next, first),
        (true, _) if last == next => (next, third),
        (true, _) => (last, next),
    }
}

/// All `p` with `π_N(p) = p`.
pub fn fixed_points(n: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for p in permutations(n) {
        if pi_map(&p)?.p_prime == p {
            out.push(p);
        }
    }
    Ok(out)
}

/// Structural checks on `π_N`: images are permutations ending in `N`, exactly
/// one fixed point, and every fiber has power-of-two size.
pub fn verify_pi(n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("pi").param("n", n);
    let images = (|| -> Result<Vec<PermImage>> { permutations(n).iter().map(|p| pi_map(p)).collect() })();
    let images = match images {
        Ok(v) => v,
        Err(e) => {
            rep.fail("setup", format!("error: {e}"));
            return rep;
        }
    };
    rep.check("images are permutations ending in N", || {
        Ok(images.iter().find_map(|im| {
            let mut s = im.p_prime.clone();
            s.sort_unstable();
            let ok = s.iter().copied().eq(1..=n) && im.p_prime.last() == Some(&n);
            (!ok).then(|| format!("{} -> {im}", word(&im.p)))
        }))
    });
    rep.check("exactly one fixed point", || {
        let fixed: Vec<String> = images.iter().filter(|im| im.p == im.p_prime).map(|im| word(&im.p)).collect();
        Ok((fixed.len() != 1).then(|| format!("fixed points {fixed:?}")))
    });
    rep.check("fiber sizes are powers of two", || {
        let mut fibers: BTreeMap<&[usize], usize> = BTreeMap::new();
        for im in &images {
            *fibers.entry(&im.p_prime).or_default() += 1;
        }
        Ok(fibers.iter().find(|(_, k)| !k.is_power_of_two()).map(|(w, k)| format!("fiber of {} has {k}", word(w))))
    });
    rep
}
