use super::matrix::{tuple_to_index, OperatorMatrix};
use super::ring::Scalars;
use crate::error::{Error, Result};
use crate::scalars::{LaurentPoly, VarTable};

/// Named constant operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstVariant {
    R,
    Rtilde,
    P,
    Q,
    Pq,
    G,
}

pub type ScalarMatrix = OperatorMatrix<LaurentPoly>;

fn put(m: &mut ScalarMatrix, ring: &Scalars, n: usize, row: &[usize], col: &[usize], v: LaurentPoly) {
    m.add_at(ring, tuple_to_index(n, row), tuple_to_index(n, col), &v);
}

/// The operators R, R̃, P, Q = Pᵗ, the q-permutation P^q on two factors and
/// the one-factor symplectic form G.
pub fn r_const(vars: &VarTable, n: usize, variant: ConstVariant) -> Result<ScalarMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let ring = Scalars(vars.clone());
    let one = LaurentPoly::one(vars);
    let q = LaurentPoly::q_pow(vars, 1);
    let qi = LaurentPoly::q_pow(vars, -1);
    if variant == ConstVariant::G {
        if n % 2 != 0 {
            return Err(Error::InvalidArgument(format!("G needs even N, got {n}")));
        }
        let mut g = OperatorMatrix::zero(n, 1);
        for k in 1..=n / 2 {
            put(&mut g, &ring, n, &[2 * k - 1], &[2 * k], q.clone());
            put(&mut g, &ring, n, &[2 * k], &[2 * k - 1], -&one);
        }
        return Ok(g);
    }
    let mut m = OperatorMatrix::zero(n, 2);
    for i in 1..=n {
        for j in 1..=n {
            match variant {
                ConstVariant::R | ConstVariant::Rtilde => {
                    let diag = if variant == ConstVariant::R { &q } else { &qi };
                    let w = if i == j { diag.clone() } else { one.clone() };
                    put(&mut m, &ring, n, &[i, j], &[i, j], w);
                    let cross = match variant {
                        ConstVariant::R if i < j => Some(&q - &qi),
                        ConstVariant::Rtilde if i > j => Some(&qi - &q),
                        _ => None,
                    };
                    if let Some(c) = cross {
                        // E_ij ⊗ E_ji
                        put(&mut m, &ring, n, &[i, j], &[j, i], c);
                    }
                }
                ConstVariant::P => put(&mut m, &ring, n, &[i, j], &[j, i], one.clone()),
                ConstVariant::Q => put(&mut m, &ring, n, &[i, i], &[j, j], one.clone()),
                ConstVariant::Pq => {
                    let w = match i.cmp(&j) {
                        std::cmp::Ordering::Equal => one.clone(),
                        std::cmp::Ordering::Greater => q.clone(),
                        std::cmp::Ordering::Less => qi.clone(),
                    };
                    put(&mut m, &ring, n, &[i, j], &[j, i], w);
                }
                ConstVariant::G => unreachable!(),
            }
        }
    }
    Ok(m)
}

/// `R(x, y) = x·R̃ − y·R` for scalar arguments.
pub fn r_spectral_at(vars: &VarTable, n: usize, x: &LaurentPoly, y: &LaurentPoly) -> Result<ScalarMatrix> {
    let table = vars.join(x.vars())?.join(y.vars())?;
    let ring = Scalars(table.clone());
    let rt = r_const(&table, n, ConstVariant::Rtilde)?;
    let r = r_const(&table, n, ConstVariant::R)?;
    rt.scale(&ring, x).sub(&ring, &r.scale(&ring, y))
}

/// The trigonometric matrix `R(u, v)` with `u`, `v` taken from `vars`.
pub fn r_spectral(vars: &VarTable, n: usize) -> Result<ScalarMatrix> {
    let u = LaurentPoly::var(vars, "u")?;
    let v = LaurentPoly::var(vars, "v")?;
    r_spectral_at(vars, n, &u, &v)
}

/// Canonical reduced word of a permutation given in one-line notation
/// (values 1..=r): adjacent transpositions `s_i` (1-based) found by bubble sort.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    let r = p.len();
    for pass in 0..r {
        for i in 0..r.saturating_sub(1 + pass) {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i + 1);
            }
        }
    }
    word.reverse();
    word
}

/// Number of inversions.
pub fn perm_length(perm: &[usize]) -> usize {
    let mut l = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                l += 1;
            }
        }
    }
    l
}

/// All permutations of 1..=r in lexicographic order.
pub fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let r = used.len();
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in 1..=r {
            if !used[v - 1] {
                used[v - 1] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; r], &mut out);
    out
}

/// Composes simple transpositions into the operator `P^q_{s_{i1}} ⋯ P^q_{s_{il}}`.
pub fn pq_word(vars: &VarTable, n: usize, r: usize, word: &[usize]) -> Result<ScalarMatrix> {
    let ring = Scalars(vars.clone());
    let pq = r_const(vars, n, ConstVariant::Pq)?;
    let mut acc = OperatorMatrix::identity(&ring, n, r);
    for &i in word {
        acc = acc.mul(&ring, &pq.embed(&[i, i + 1], r)?)?;
    }
    Ok(acc)
}

/// The q-antisymmetrizer `Σ_σ sgn σ · P^q_σ` on `r` factors.
pub fn q_antisymmetrizer(vars: &VarTable, n: usize, r: usize) -> Result<ScalarMatrix> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let ring = Scalars(vars.clone());
    let mut acc = OperatorMatrix::zero(n, r);
    for perm in permutations(r) {
        let word = reduced_word(&perm);
        let term = pq_word(vars, n, r, &word)?;
        let term = if word.len() % 2 == 1 { term.neg(&ring) } else { term };
        acc = acc.add(&ring, &term)?;
    }
    Ok(acc)
}

/// `Π_{i<j} R_ij(u_i, u_j)` in lexicographic order of the pairs.
pub fn r_long(vars: &VarTable, n: usize, args: &[LaurentPoly]) -> Result<ScalarMatrix> {
    let r = args.len();
    let mut table = vars.clone();
    for a in args {
        table = table.join(a.vars())?;
    }
    let ring = Scalars(table.clone());
    let mut acc = OperatorMatrix::identity(&ring, n, r);
    for i in 0..r {
        for j in i + 1..r {
            let rij = r_spectral_at(&table, n, &args[i], &args[j])?.embed(&[i + 1, j + 1], r)?;
            acc = acc.mul(&ring, &rij)?;
        }
    }
    Ok(acc)
}

/// `Π_{0≤i<j≤r−1} (q^{−2i} − q^{−2j})`.
pub fn antisymmetrizer_factor(vars: &VarTable, r: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one(vars);
    for i in 0..r as i32 {
        for j in i + 1..r as i32 {
            acc = &acc * &(&LaurentPoly::q_pow(vars, -2 * i) - &LaurentPoly::q_pow(vars, -2 * j));
        }
    }
    acc
}

/// Scalar multiple of the identity.
pub fn scalar_identity(vars: &VarTable, n: usize, r: usize, c: &LaurentPoly) -> ScalarMatrix {
    let ring = Scalars(vars.clone());
    OperatorMatrix::identity(&ring, n, r).scale(&ring, c)
}
