use super::{independence_rank, lift_scalars, shared, t_matrix, tb_matrix, AlgMatrix, Kind, Presentation};
use crate::error::Result;
use crate::freealg::{GenSym, NcPoly, Word};
use crate::report::{CheckResult, VerificationReport};
use crate::scalars::LaurentPoly;
use crate::tensorcalc::{r_const, ConstVariant, OperatorMatrix};

/// Presentations probed for strategy independence.
pub const PROBED: [&str; 5] = ["uqgl:2", "uqgl:3", "tworth:3", "twsympl:2", "uqglhat:2:1"];

/// Ordered monomials of length `≤ max_len` in `gens`, nondecreasing in list position.
pub fn ordered_monomials(gens: &[GenSym], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier: Vec<(Word, usize)> = vec![(Word::empty(), 0)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, start) in &frontier {
            for (k, &g) in gens.iter().enumerate().skip(*start) {
                let mut x = w.clone();
                x.push(g);
                out.push(x.clone());
                next.push((x, k));
            }
        }
        frontier = next;
    }
    out
}

/// `T T̄ᵗ` or `T G T̄ᵗ` in the host `U_q(gl_N)`.
fn host_s(host: &Presentation, sympl: bool) -> Result<AlgMatrix> {
    let v = &host.vars;
    let t = t_matrix(host.n, v);
    let tbt = tb_matrix(host.n, v).transpose();
    if sympl {
        let g = lift_scalars(&r_const(v, host.n, ConstVariant::G)?)?;
        OperatorMatrix::product(host, &[&t, &g, &tbt])
    } else {
        OperatorMatrix::product(host, &[&t, &tbt])
    }
}

fn rank_check(monos: &[Word], embed: &dyn Fn(GenSym) -> Result<NcPoly>, host: &Presentation) -> CheckResult {
    let r = independence_rank(monos, embed, host)?;
    Ok((r != monos.len()).then(|| format!("rank {r} of {} monomials", monos.len())))
}

/// Strategy independence of normal forms on random words, and full rank of the
/// degree-≤2 ordered monomials of the orthogonal (`N = 3`) and symplectic
/// (`N = 2`) algebras inside `U_q(gl_N)`.
pub fn verify_pbw(trials: usize, max_len: usize, seed: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("presentations").param("trials", trials).param("max_len", max_len).param("seed", seed);
    for name in PROBED {
        match Presentation::parse_name(name).and_then(|(k, n, w)| shared(k, n, w)) {
            Ok(p) => {
                let sub = super::confluence_probe(&p, max_len, trials, seed);
                rep.absorb(&format!("{name}: "), sub);
            }
            Err(e) => rep.fail(format!("{name}: setup"), format!("error: {e}")),
        }
    }
    rep.check("tworth:3 ordered monomials of degree <= 2 are independent (rank 10)", || {
        let abs = shared(Kind::TwOrth, 3, None)?;
        let host = shared(Kind::UqglN, 3, None)?;
        let s = host_s(&host, false)?;
        let monos = ordered_monomials(abs.alphabet(), 2);
        let embed = |g: GenSym| Ok(s.get(&*host, g.row() - 1, g.col() - 1));
        if monos.len() != 10 {
            return Ok(Some(format!("{} monomials", monos.len())));
        }
        rank_check(&monos, &embed, &host)
    });
    rep.check("twsympl:2 ordered monomials of degree <= 2 are independent (rank 14)", || {
        let abs = shared(Kind::TwSympl, 2, None)?;
        let host = shared(Kind::UqglN, 2, None)?;
        let s = host_s(&host, true)?;
        let v = &host.vars;
        let sinv = GenSym::sinv(1)?;
        // s_12 = q t_11 t̄_22, inverted by q⁻¹ t_22 t̄_11
        let inv = host.normal_form(&NcPoly::term(
            Word::from_slice(&[GenSym::t(2, 2)?, GenSym::tb(1, 1)?]),
            LaurentPoly::q_pow(v, -1),
        ))?;
        let eliminated = GenSym::s_sympl(2, 1)?;
        let gens: Vec<GenSym> = abs.alphabet().iter().copied().filter(|g| *g != eliminated).collect();
        let monos: Vec<Word> = ordered_monomials(&gens, 2)
            .into_iter()
            .filter(|w| abs.is_normal(&NcPoly::term(w.clone(), LaurentPoly::one(&abs.vars))))
            .collect();
        let embed = |g: GenSym| Ok(if g == sinv { inv.clone() } else { s.get(&*host, g.row() - 1, g.col() - 1) });
        if monos.len() != 14 {
            return Ok(Some(format!("{} monomials", monos.len())));
        }
        rank_check(&monos, &embed, &host)
    });
    rep
}
