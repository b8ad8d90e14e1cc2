//! Rewrite systems for the presented algebras, built from their matrix relations.

mod engine;
mod order;
mod pbw;
mod probe;
mod rank;
mod relations;
mod rules;

use std::fmt;
use std::sync::Arc;

pub use engine::{InsertCache, InsertEngine};
pub use order::{GeneratorOrder, WordKey};
pub use pbw::{ordered_monomials, verify_pbw, PROBED};
pub use probe::{confluence_probe, corrupt_one_rule, random_word};
pub use rank::{independence_rank, rank_of_rows};
pub use relations::{
    derive_relations, gen_matrix, lift_scalars, qds_element, reflection_relations, rtt_relations, s_orth_matrix, s_sympl_matrix,
    series_matrix, split_spectral, t_matrix, tb_matrix, unit_relations, AlgMatrix,
};
pub use rules::{leading, orient, rule_is_valid, Builder, RewriteRule, RuleSet, Strategy};

use crate::error::{Error, Result};
use crate::freealg::{prime, GenSym, NcPoly, Word};
use crate::parallel::in_pool;
use crate::scalars::{LaurentPoly, VarTable};
use crate::tensorcalc::{r_const, r_spectral_at, ConstVariant, FreeAlgebra, OperatorMatrix, Ring};

/// Caps on rewriting work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Terms allowed in any intermediate polynomial.
    pub max_terms: usize,
    /// Nesting depth of the insertion engine.
    pub max_depth: usize,
    /// Rule applications per worklist reduction.
    pub max_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_terms: 1_000_000, max_depth: 100_000, max_steps: 50_000_000 }
    }
}

impl Limits {
    /// Defaults overridden by `QTWIST_MAX_TERMS`, `QTWIST_MAX_DEPTH` and `QTWIST_MAX_STEPS`.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        let get = |k: &str| std::env::var(k).ok().and_then(|v| v.parse::<usize>().ok());
        if let Some(v) = get("QTWIST_MAX_TERMS") {
            l.max_terms = v;
        }
        if let Some(v) = get("QTWIST_MAX_DEPTH") {
            l.max_depth = v;
        }
        if let Some(v) = get("QTWIST_MAX_STEPS") {
            l.max_steps = v;
        }
        l
    }
}

/// The algebras with a built-in presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `U_q(gl_N)`.
    UqglN,
    /// The orthogonal twisted algebra.
    TwOrth,
    /// The symplectic twisted algebra.
    TwSympl,
    /// `U_q(ĝl_N)` cut to words of total series degree at most `window`.
    UqglHatWindow,
}

/// An oriented rewrite system with a normal-form engine.
pub struct Presentation {
    pub name: String,
    pub kind: Kind,
    pub n: usize,
    pub window: Option<usize>,
    pub vars: VarTable,
    pub order: GeneratorOrder,
    pub rules: RuleSet,
    pub unit_pairs: Vec<(GenSym, GenSym)>,
    pub limits: Limits,
    /// Messages recorded while building, e.g. dropped window relations.
    pub log: Vec<String>,
    cache: InsertCache,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({}, {} generators, {} rules)", self.name, self.order.alphabet().len(), self.rules.len())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "presentation {}", self.name)?;
        let alpha: Vec<String> = self.order.alphabet().iter().map(|g| g.to_string()).collect();
        writeln!(f, "order: {}", alpha.join(" < "))?;
        for rule in self.rules.sorted(&self.order) {
            writeln!(f, "{} -> {}", rule.lhs, rule.rhs)?;
        }
        Ok(())
    }
}

impl Presentation {
    fn from_builder(name: String, kind: Kind, n: usize, window: Option<usize>, b: Builder, units: Vec<(GenSym, GenSym)>) -> Self {
        Presentation {
            name,
            kind,
            n,
            window,
            vars: b.vars,
            order: b.order,
            rules: b.rules,
            unit_pairs: units,
            limits: b.limits,
            log: b.log,
            cache: InsertCache::default(),
        }
    }

    /// A presentation with explicitly supplied rules; the cache starts empty.
    pub fn with_rules(&self, rules: RuleSet, name: &str) -> Presentation {
        Presentation {
            name: name.to_string(),
            kind: self.kind,
            n: self.n,
            window: self.window,
            vars: self.vars.clone(),
            order: self.order.clone(),
            rules,
            unit_pairs: self.unit_pairs.clone(),
            limits: self.limits.clone(),
            log: Vec::new(),
            cache: InsertCache::default(),
        }
    }

    pub fn set_limits(&mut self, limits: Limits) {
        self.limits = limits;
        self.cache.clear();
    }

    pub fn alphabet(&self) -> &[GenSym] {
        self.order.alphabet()
    }

    pub fn engine(&self) -> InsertEngine<'_> {
        InsertEngine { rules: &self.rules, cache: &self.cache, limits: &self.limits, vars: &self.vars }
    }

    fn check_input(&self, p: &NcPoly) -> Result<()> {
        for w in p.terms().keys() {
            for &g in w.iter() {
                if !self.order.contains(g) {
                    if let Some(d) = self.window {
                        if g.degree() > d {
                            return Err(Error::WindowInsufficient(format!("generator {g} exceeds window {d}")));
                        }
                    }
                    return Err(Error::InvalidGenerator(format!("{g} is not a generator of {}", self.name)));
                }
            }
            if let Some(d) = self.window {
                let wt = GeneratorOrder::weight(w);
                if wt > d {
                    return Err(Error::WindowInsufficient(format!("word {w} has degree {wt} > window {d}")));
                }
            }
        }
        Ok(())
    }

    /// Normal form via the memoized insertion engine.
    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly> {
        self.check_input(p)?;
        in_pool(|| self.engine().normal_form(p))
    }

    /// Normal form by worklist reduction under a chosen strategy.
    pub fn reduce_with(&self, p: &NcPoly, strategy: Strategy, rng: Option<&mut rand_chacha::ChaCha8Rng>) -> Result<NcPoly> {
        self.check_input(p)?;
        self.rules.reduce(p, &self.order, strategy, rng, &self.limits)
    }

    /// True when every word of `p` avoids all rule left-hand sides.
    pub fn is_normal(&self, p: &NcPoly) -> bool {
        p.terms().keys().all(|w| self.rules.is_irreducible(w))
    }

    /// `NF(a·b)` for normal `a`.
    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        self.check_input(b)?;
        if let Some(d) = self.window {
            let heaviest = |p: &NcPoly| p.terms().keys().map(GeneratorOrder::weight).max().unwrap_or(0);
            let wt = heaviest(a) + heaviest(b);
            if wt > d {
                return Err(Error::WindowInsufficient(format!("product of degree {wt} exceeds window {d}")));
            }
        }
        in_pool(|| self.engine().mul_normal(a, b))
    }

    pub fn gen(&self, g: GenSym) -> NcPoly {
        NcPoly::gen(g, &self.vars)
    }

    /// Entries of the memo cache.
    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    /// Every rule has all right-hand words below its left-hand side.
    pub fn orientation_valid(&self) -> bool {
        self.rules.iter().all(|(l, r)| rule_is_valid(&RewriteRule { lhs: l.clone(), rhs: r.clone() }, &self.order))
    }

    /// Parses a presentation name such as `uqgl:3`, `tworth:3`, `twsympl:4`, `uqglhat:2:2`.
    pub fn parse_name(name: &str) -> Result<(Kind, usize, Option<usize>)> {
        let parts: Vec<&str> = name.split(':').collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad number {s:?} in {name:?}")));
        match parts.as_slice() {
            ["uqgl", n] => Ok((Kind::UqglN, num(n)?, None)),
            ["tworth", n] => Ok((Kind::TwOrth, num(n)?, None)),
            ["twsympl", n] => Ok((Kind::TwSympl, num(n)?, None)),
            ["uqglhat", n, d] => Ok((Kind::UqglHatWindow, num(n)?, Some(num(d)?))),
            _ => Err(Error::Parse(format!("unknown presentation {name:?}"))),
        }
    }

    pub fn by_name(name: &str) -> Result<Presentation> {
        let (kind, n, d) = Self::parse_name(name)?;
        build_presentation(kind, n, d)
    }
}

impl Ring for Presentation {
    type Elem = NcPoly;
    fn zero(&self) -> NcPoly {
        NcPoly::zero(&self.vars)
    }
    fn one(&self) -> NcPoly {
        NcPoly::one(&self.vars)
    }
    fn is_zero(&self, a: &NcPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        a.add(b)
    }
    fn neg(&self, a: &NcPoly) -> NcPoly {
        a.neg()
    }
    fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        Presentation::mul(self, a, b)
    }
    fn from_scalar(&self, c: &LaurentPoly) -> NcPoly {
        NcPoly::scalar(c.clone())
    }
    fn scale(&self, a: &NcPoly, c: &LaurentPoly) -> NcPoly {
        a.scale(c)
    }
}

/// Host generator order: the `t` family by `(i, j)` with each `t̄_ii` placed
/// right after `t_ii`, then the strictly upper `t̄_ij` by `(i, j)`.
fn host_alphabet(n: usize) -> Vec<GenSym> {
    let mut a = Vec::new();
    for i in 1..=n {
        for j in 1..=i {
            a.push(GenSym::t(i, j).expect("lower"));
        }
        a.push(GenSym::tb(i, i).expect("diag"));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            a.push(GenSym::tb(i, j).expect("upper"));
        }
    }
    a
}

fn host_units(n: usize) -> Vec<(GenSym, GenSym)> {
    let mut u = Vec::new();
    for i in 1..=n {
        let (t, tb) = (GenSym::t(i, i).expect("diag"), GenSym::tb(i, i).expect("diag"));
        u.push((t, tb));
        u.push((tb, t));
    }
    u
}

fn affine_alphabet(n: usize, d: usize) -> Result<Vec<GenSym>> {
    let mut a: Vec<GenSym> = Vec::new();
    for g in host_alphabet(n) {
        let deg0 = match g.family {
            crate::freealg::Family::T => GenSym::t_deg(0, g.row(), g.col())?,
            _ => GenSym::tb_deg(0, g.row(), g.col())?,
        };
        a.push(deg0);
    }
    for r in 1..=d {
        for i in 1..=n {
            for j in 1..=n {
                a.push(GenSym::t_deg(r, i, j)?);
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                a.push(GenSym::tb_deg(r, i, j)?);
            }
        }
    }
    Ok(a)
}

/// Symplectic order: block by block, `s_i1 … s_ii' < s_ii'⁻¹ < s_i'i' < s_i'1 … s_i',i'-2`,
/// with the eliminated `s_i'i` ranked above everything.
fn sympl_alphabet(n2: usize) -> Result<Vec<GenSym>> {
    let mut a = Vec::new();
    let mut last = Vec::new();
    for i in (1..=n2).step_by(2) {
        let ip = prime(i);
        for j in 1..=ip {
            a.push(GenSym::s_sympl(i, j)?);
        }
        a.push(GenSym::sinv(i)?);
        a.push(GenSym::s_sympl(ip, ip)?);
        for j in 1..i {
            a.push(GenSym::s_sympl(ip, j)?);
        }
        last.push(GenSym::s_sympl(ip, i)?);
    }
    a.extend(last);
    Ok(a)
}

/// Builds the presentation of `kind` for size `n` (and affine window).
pub fn build_presentation(kind: Kind, n: usize, window: Option<usize>) -> Result<Presentation> {
    build_presentation_with(kind, n, window, Limits::from_env())
}

pub fn build_presentation_with(kind: Kind, n: usize, window: Option<usize>, limits: Limits) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    in_pool(|| match kind {
        Kind::UqglN => build_uqgl(n, limits),
        Kind::TwOrth => build_orth(n, limits),
        Kind::TwSympl => build_sympl(n, limits),
        Kind::UqglHatWindow => {
            let d = window.ok_or_else(|| Error::InvalidArgument("affine presentation needs a window".into()))?;
            build_affine(n, d, limits)
        }
    })
}

fn build_uqgl(n: usize, limits: Limits) -> Result<Presentation> {
    let vars = VarTable::q();
    let mut b = Builder::new(GeneratorOrder::new(host_alphabet(n)), vars.clone(), limits);
    let units = host_units(n);
    let r = lift_scalars(&r_const(&vars, n, ConstVariant::R)?)?;
    let (t, tb) = (t_matrix(n, &vars), tb_matrix(n, &vars));
    b.add(unit_relations(&units, &vars))?;
    for (x, y) in [(&t, &t), (&tb, &tb), (&tb, &t)] {
        b.add(rtt_relations(&r, x, y, &vars)?)?;
    }
    b.finish()?;
    Ok(Presentation::from_builder(format!("uqgl:{n}"), Kind::UqglN, n, None, b, units))
}

fn build_orth(n: usize, limits: Limits) -> Result<Presentation> {
    let vars = VarTable::q();
    let mut alpha = Vec::new();
    for i in 1..=n {
        for j in 1..i {
            alpha.push(GenSym::s_orth(i, j)?);
        }
    }
    let mut b = Builder::new(GeneratorOrder::new(alpha), vars.clone(), limits);
    b.add(reflection_relations(&s_orth_matrix(n, &vars), &vars)?)?;
    b.finish()?;
    Ok(Presentation::from_builder(format!("tworth:{n}"), Kind::TwOrth, n, None, b, Vec::new()))
}

fn build_sympl(n2: usize, limits: Limits) -> Result<Presentation> {
    if n2 % 2 != 0 {
        return Err(Error::InvalidArgument(format!("the symplectic algebra needs even N, got {n2}")));
    }
    let vars = VarTable::q();
    // s_ii'⁻¹ has grade −1, so eliminating s_i'i preserves the grade.
    let mut order = GeneratorOrder::new(sympl_alphabet(n2)?);
    for i in (1..=n2).step_by(2) {
        order = order.with_grade(GenSym::sinv(i)?, -1);
    }
    let mut b = Builder::new(order, vars.clone(), limits.clone());
    let mut units = Vec::new();
    for i in (1..=n2).step_by(2) {
        let (s, si) = (GenSym::s_sympl(i, prime(i))?, GenSym::sinv(i)?);
        units.push((s, si));
        units.push((si, s));
    }
    let mut unit_rules = RuleSet::new();
    for &(a, c) in &units {
        unit_rules.insert(Word::from_slice(&[a, c]), NcPoly::one(&vars));
    }
    let unit_order = b.order.clone();
    let cancel = |p: &NcPoly| unit_rules.reduce(p, &unit_order, Strategy::Leftmost, None, &limits);

    b.add(unit_relations(&units, &vars))?;
    let mut central = Vec::new();
    for i in (1..=n2).step_by(2) {
        central.push((qds_element(i, &vars)?, NcPoly::gen(GenSym::sinv(i)?, &vars)));
    }
    b.add(central.iter().map(|(c, _)| c.clone()))?;
    b.add(reflection_relations(&s_sympl_matrix(n2, &vars), &vars)?)?;

    // Conjugating the commutation relations of s_ii' by its inverse.
    loop {
        let mut rels = Vec::new();
        for i in (1..=n2).step_by(2) {
            let (s, si) = (GenSym::s_sympl(i, prime(i))?, GenSym::sinv(i)?);
            let (ps, psi) = (NcPoly::gen(s, &vars), NcPoly::gen(si, &vars));
            for &g in b.order.alphabet() {
                if g == s || g == si {
                    continue;
                }
                let pg = NcPoly::gen(g, &vars);
                for prod in [ps.nc_mul(&pg), pg.nc_mul(&ps)] {
                    let x = prod.sub(&b.reduce(&prod)?);
                    if !x.is_zero() {
                        rels.push(cancel(&psi.nc_mul(&x).nc_mul(&psi))?);
                    }
                }
            }
        }
        if b.add(rels)? == 0 {
            break;
        }
    }

    // Elimination of s_i'i: the central relation times s_ii'⁻¹.
    for (c, si) in &central {
        b.add([cancel(&c.nc_mul(si))?])?;
    }
    b.finish()?;
    Ok(Presentation::from_builder(format!("twsympl:{n2}"), Kind::TwSympl, n2, None, b, units))
}

fn build_affine(n: usize, d: usize, limits: Limits) -> Result<Presentation> {
    let vars = VarTable::quvw();
    let qv = VarTable::q();
    let alphabet = affine_alphabet(n, d)?;
    let mut b = Builder::new(GeneratorOrder::new(alphabet), qv.clone(), limits);
    let mut units = Vec::new();
    for i in 1..=n {
        let (t, tb) = (GenSym::t_deg(0, i, i)?, GenSym::tb_deg(0, i, i)?);
        units.push((t, tb));
        units.push((tb, t));
    }
    b.add(unit_relations(&units, &qv))?;
    let ring = FreeAlgebra(vars.clone());
    let ruv = lift_scalars(&r_spectral_at(&vars, n, &LaurentPoly::var(&vars, "u")?, &LaurentPoly::var(&vars, "v")?)?)?;
    let series = |bar: bool, z: &str| series_matrix(n, d + 1, &vars, bar, z, if bar { 1 } else { -1 });
    let pairs = [
        (series(false, "u")?, series(false, "v")?),
        (series(true, "u")?, series(true, "v")?),
        (series(true, "u")?, series(false, "v")?),
    ];
    let mut kept = Vec::new();
    let mut dropped = 0usize;
    for (x, y) in &pairs {
        let (x1, y2) = (x.embed(&[1], 2)?, y.embed(&[2], 2)?);
        let lhs = OperatorMatrix::product(&ring, &[&ruv, &x1, &y2])?;
        let rhs = OperatorMatrix::product(&ring, &[&y2, &x1, &ruv])?;
        for p in derive_relations(&lhs, &rhs)? {
            for (_, rel) in split_spectral(&p, &qv)? {
                if rel.terms().keys().all(|w| GeneratorOrder::weight(w) <= d) {
                    kept.push(rel);
                } else {
                    dropped += 1;
                }
            }
        }
    }
    b.log.push(format!("{} relations kept, {dropped} outside the window dropped", kept.len()));
    b.add(kept)?;
    b.finish()?;
    Ok(Presentation::from_builder(format!("uqglhat:{n}:{d}"), Kind::UqglHatWindow, n, Some(d), b, units))
}

/// Cached presentations shared across suites.
pub fn shared(kind: Kind, n: usize, window: Option<usize>) -> Result<Arc<Presentation>> {
    use parking_lot::Mutex;
    use std::collections::HashMap;
    use std::sync::OnceLock;
    type Key = (Kind, usize, Option<usize>);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Presentation>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().get(&(kind, n, window)) {
        return Ok(p.clone());
    }
    let p = Arc::new(build_presentation(kind, n, window)?);
    cache.lock().insert((kind, n, window), p.clone());
    Ok(p)
}

#[cfg(test)]
mod tests;
