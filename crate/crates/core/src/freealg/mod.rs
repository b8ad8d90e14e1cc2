//! Words, noncommutative polynomials and the tensor square.

mod gensym;
mod ncpoly;
mod tensor2;
mod word;

pub use gensym::{prime, Family, GenSym, FINITE};
pub(crate) use ncpoly::write_term;
pub use ncpoly::NcPoly;
pub use tensor2::{tensor2_apply_delta, NcPoly2};
pub use word::Word;

/// The coproduct of `t_ij` (or `t̄_ij`) on the finite host: `Σ_k x_ik ⊗ x_kj`,
/// omitting the vanishing generators.
pub fn delta_finite(g: GenSym, vars: &crate::scalars::VarTable) -> Option<NcPoly2> {
    let (i, j) = (g.row(), g.col());
    let mk = |a: usize, b: usize| -> Option<GenSym> {
        match g.family {
            Family::T => GenSym::t(a, b).ok(),
            Family::Tbar => GenSym::tb(a, b).ok(),
            _ => None,
        }
    };
    if !matches!(g.family, Family::T | Family::Tbar) || g.is_affine() {
        return None;
    }
    let mut out = NcPoly2::zero(vars);
    let n = i.max(j);
    for k in 1..=n {
        if let (Some(a), Some(b)) = (mk(i, k), mk(k, j)) {
            out.add_assign(&NcPoly2::tensor(&NcPoly::gen(a, vars), &NcPoly::gen(b, vars)));
        }
    }
    Some(out)
}

/// The coproduct of `t^(r)_ij` (or `t̄^(r)_ij`) in `U_q(ĝl_n)`, read off from
/// the series coproduct: `Σ_{a+b=r} Σ_k x^(a)_ik ⊗ x^(b)_kj`.
pub fn delta_affine(g: GenSym, n: usize, vars: &crate::scalars::VarTable) -> Option<NcPoly2> {
    let mk = |r: usize, a: usize, b: usize| -> Option<GenSym> {
        match g.family {
            Family::T => GenSym::t_deg(r, a, b).ok(),
            Family::Tbar => GenSym::tb_deg(r, a, b).ok(),
            _ => None,
        }
    };
    if !matches!(g.family, Family::T | Family::Tbar) || !g.is_affine() {
        return None;
    }
    let (i, j, r) = (g.row(), g.col(), g.degree());
    let mut out = NcPoly2::zero(vars);
    for a in 0..=r {
        for k in 1..=n {
            if let (Some(x), Some(y)) = (mk(a, i, k), mk(r - a, k, j)) {
                out.add_assign(&NcPoly2::tensor(&NcPoly::gen(x, vars), &NcPoly::gen(y, vars)));
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{LaurentPoly, VarTable};

    fn v() -> VarTable {
        VarTable::quvw()
    }
    fn t(i: usize, j: usize) -> NcPoly {
        NcPoly::gen(GenSym::t(i, j).unwrap(), &v())
    }

    #[test]
    fn constructors_reject_zero_generators() {
        assert!(GenSym::t(1, 2).is_err());
        assert!(GenSym::tb(2, 1).is_err());
        assert!(GenSym::s_orth(1, 1).is_err());
        assert!(GenSym::s_orth(1, 2).is_err());
        assert!(GenSym::s_sympl(1, 2).is_ok());
        assert!(GenSym::s_sympl(2, 3).is_err());
        assert!(GenSym::s_sympl(1, 3).is_err());
        assert!(GenSym::sinv(2).is_err());
        assert!(GenSym::t_deg(0, 1, 2).is_err());
        assert!(GenSym::t_deg(1, 1, 2).is_ok());
        assert_eq!(prime(3), 4);
        assert_eq!(prime(4), 3);
    }

    #[test]
    fn product_examples() {
        let one = NcPoly::one(&v());
        assert_eq!(one.nc_mul(&t(2, 1)), t(2, 1));
        let lhs = t(1, 1).add(&t(2, 1)).nc_mul(&t(2, 2));
        assert_eq!(lhs, t(1, 1).nc_mul(&t(2, 2)).add(&t(2, 1).nc_mul(&t(2, 2))));
        let q = LaurentPoly::var(&v(), "q").unwrap();
        let qi = LaurentPoly::var_pow(&v(), "q", -1).unwrap();
        assert_eq!(t(2, 1).scale(&q).nc_mul(&t(1, 1).scale(&qi)), t(2, 1).nc_mul(&t(1, 1)));
        assert!(t(1, 1).nc_commutator(&t(1, 1)).is_zero());
        assert_eq!(t(1, 1).nc_commutator(&t(2, 2)).to_string(), "t[1,1]*t[2,2] - t[2,2]*t[1,1]");
    }

    #[test]
    fn text_round_trip() {
        let vars = v();
        for s in [
            "t[1,1] - tb[1,1]*u^-1",
            "-q^-1*t[2,1]*tb[1,2] + 3/2*t[1,1]*q^2",
            "s3[2,1]*sinv[1,2] + t[2,1]*(q - q^-1)",
            "u^-1 - q^-2*u",
            "(q + 1) + t[1,1]",
        ] {
            let p = NcPoly::parse(s, &vars).unwrap();
            let printed = p.to_string();
            assert_eq!(NcPoly::parse(&printed, &vars).unwrap(), p, "{s} -> {printed}");
        }
        assert_eq!(NcPoly::parse("t[1,1] - tb[1,1]*u^-1", &vars).unwrap().to_string(), "t[1,1] - tb[1,1]*u^-1");
    }

    #[test]
    fn delta_examples() {
        let vars = v();
        let rule = |g: GenSym| delta_finite(g, &vars);
        assert_eq!(tensor2_apply_delta(&NcPoly::one(&vars), &rule).unwrap(), NcPoly2::one(&vars));
        let d21 = tensor2_apply_delta(&t(2, 1), &rule).unwrap();
        let mut expect = NcPoly2::tensor(&t(2, 1), &t(1, 1));
        expect.add_assign(&NcPoly2::tensor(&t(2, 2), &t(2, 1)));
        assert_eq!(d21, expect);
        let prod = tensor2_apply_delta(&t(2, 1).nc_mul(&t(1, 1)), &rule).unwrap();
        let d11 = tensor2_apply_delta(&t(1, 1), &rule).unwrap();
        assert_eq!(prod, d21.mul(&d11));
        let bad = NcPoly::gen(GenSym::s_orth(2, 1).unwrap(), &vars);
        assert!(tensor2_apply_delta(&bad, &rule).is_err());
    }
}
