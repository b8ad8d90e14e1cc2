use std::fmt;

use crate::error::{Error, Result};

/// Generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    T,
    Tbar,
    S,
    Sbar,
    Sinv,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::T => "t",
            Family::Tbar => "tb",
            Family::S => "s",
            Family::Sbar => "sb",
            Family::Sinv => "sinv",
        }
    }

    fn from_prefix(p: &str) -> Option<Family> {
        Some(match p {
            "t" => Family::T,
            "tb" => Family::Tbar,
            "s" => Family::S,
            "sb" => Family::Sbar,
            "sinv" => Family::Sinv,
            _ => return None,
        })
    }
}

/// Marker for generators without a series degree.
pub const FINITE: u8 = u8::MAX;

/// One algebra generator, e.g. `t[2,1]`, `tb1[1,2]` or `sinv[1,2]`.
///
/// Field order gives the derived `Ord`: family, degree, row, column.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSym {
    pub family: Family,
    pub deg: u8,
    pub i: u8,
    pub j: u8,
}

/// The involution `2k-1 ↔ 2k` on indices.
pub fn prime(i: usize) -> usize {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

fn idx(i: usize) -> Result<u8> {
    if (1..=64).contains(&i) {
        Ok(i as u8)
    } else {
        Err(Error::InvalidGenerator(format!("index {i} out of range")))
    }
}

impl GenSym {
    /// Unchecked construction; prefer the family constructors.
    pub fn raw(family: Family, deg: u8, i: usize, j: usize) -> Self {
        GenSym { family, deg, i: i as u8, j: j as u8 }
    }

    /// `t_ij`, which vanishes above the diagonal.
    pub fn t(i: usize, j: usize) -> Result<Self> {
        if i < j {
            return Err(Error::InvalidGenerator(format!("t[{i},{j}] is zero")));
        }
        Ok(GenSym { family: Family::T, deg: FINITE, i: idx(i)?, j: idx(j)? })
    }

    /// `t̄_ij`, which vanishes below the diagonal.
    pub fn tb(i: usize, j: usize) -> Result<Self> {
        if i > j {
            return Err(Error::InvalidGenerator(format!("tb[{i},{j}] is zero")));
        }
        Ok(GenSym { family: Family::Tbar, deg: FINITE, i: idx(i)?, j: idx(j)? })
    }

    /// Series coefficient `t_ij^(r)`; at `r = 0` the finite constraint applies.
    pub fn t_deg(r: usize, i: usize, j: usize) -> Result<Self> {
        if r == 0 && i < j {
            return Err(Error::InvalidGenerator(format!("t0[{i},{j}] is zero")));
        }
        Ok(GenSym { family: Family::T, deg: deg8(r)?, i: idx(i)?, j: idx(j)? })
    }

    pub fn tb_deg(r: usize, i: usize, j: usize) -> Result<Self> {
        if r == 0 && i > j {
            return Err(Error::InvalidGenerator(format!("tb0[{i},{j}] is zero")));
        }
        Ok(GenSym { family: Family::Tbar, deg: deg8(r)?, i: idx(i)?, j: idx(j)? })
    }

    /// Generator `s_ij` of the orthogonal algebra: strictly lower triangular.
    pub fn s_orth(i: usize, j: usize) -> Result<Self> {
        if i <= j {
            return Err(Error::InvalidGenerator(format!("s[{i},{j}] is not a generator of the orthogonal algebra")));
        }
        Ok(GenSym { family: Family::S, deg: FINITE, i: idx(i)?, j: idx(j)? })
    }

    /// Series coefficient `s_ij^(r)` of the orthogonal twisted q-Yangian.
    pub fn s_orth_deg(r: usize, i: usize, j: usize) -> Result<Self> {
        if r == 0 && i <= j {
            return Err(Error::InvalidGenerator(format!("s0[{i},{j}] is not a generator")));
        }
        Ok(GenSym { family: Family::S, deg: deg8(r)?, i: idx(i)?, j: idx(j)? })
    }

    /// Generator `s_ij` of the symplectic algebra: lower block triangular.
    pub fn s_sympl(i: usize, j: usize) -> Result<Self> {
        if !(i >= j || (i % 2 == 1 && j == i + 1)) {
            return Err(Error::InvalidGenerator(format!("s[{i},{j}] is zero in the symplectic algebra")));
        }
        Ok(GenSym { family: Family::S, deg: FINITE, i: idx(i)?, j: idx(j)? })
    }

    pub fn s_sympl_deg(r: usize, i: usize, j: usize) -> Result<Self> {
        if r == 0 {
            return Self::s_sympl(i, j).map(|g| GenSym { deg: 0, ..g });
        }
        Ok(GenSym { family: Family::S, deg: deg8(r)?, i: idx(i)?, j: idx(j)? })
    }

    /// `s_{ii'}^{-1}` for odd `i`.
    pub fn sinv(i: usize) -> Result<Self> {
        if i % 2 == 0 {
            return Err(Error::InvalidGenerator(format!("sinv needs an odd row, got {i}")));
        }
        Ok(GenSym { family: Family::Sinv, deg: FINITE, i: idx(i)?, j: idx(i + 1)? })
    }

    pub fn is_affine(&self) -> bool {
        self.deg != FINITE
    }

    /// Series degree, zero for finite generators.
    pub fn degree(&self) -> usize {
        if self.deg == FINITE {
            0
        } else {
            self.deg as usize
        }
    }

    pub fn row(&self) -> usize {
        self.i as usize
    }

    pub fn col(&self) -> usize {
        self.j as usize
    }

    /// Parses `name[i,j]` as produced by `Display`.
    pub fn parse_parts(name: &str, idx: &[u32]) -> Result<Self> {
        let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
        let (p, d) = name.split_at(split);
        let family = Family::from_prefix(p).ok_or_else(|| Error::Parse(format!("unknown generator family {p:?}")))?;
        let deg = if d.is_empty() {
            FINITE
        } else {
            deg8(d.parse::<usize>().map_err(|_| Error::Parse(format!("bad degree in {name}")))?)?
        };
        if idx.len() != 2 {
            return Err(Error::Parse(format!("generator {name} needs two indices")));
        }
        let (i, j) = (idx[0] as usize, idx[1] as usize);
        Ok(GenSym { family, deg, i: self::idx(i)?, j: self::idx(j)? })
    }
}

fn deg8(r: usize) -> Result<u8> {
    if r < FINITE as usize {
        Ok(r as u8)
    } else {
        Err(Error::InvalidGenerator(format!("degree {r} too large")))
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.prefix())?;
        if self.deg != FINITE {
            write!(f, "{}", self.deg)?;
        }
        write!(f, "[{},{}]", self.i, self.j)
    }
}

impl fmt::Debug for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
