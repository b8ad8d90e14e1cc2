use std::cmp::Ordering;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::freealg::{GenSym, Word};

/// A strict total order on an alphabet plus the grading used by the monomial order.
#[derive(Clone, Debug)]
pub struct GeneratorOrder {
    alphabet: Vec<GenSym>,
    rank: FxHashMap<GenSym, u16>,
    grades: FxHashMap<GenSym, i32>,
}

/// Sort key of a word: grade, then ranks position by position with a proper
/// prefix counting as smaller.
pub type WordKey = (i32, SmallVec<[u16; 8]>);

impl GeneratorOrder {
    /// Builds the order from the alphabet listed smallest first.
    pub fn new(alphabet: Vec<GenSym>) -> Self {
        let rank = alphabet.iter().enumerate().map(|(k, g)| (*g, k as u16)).collect();
        GeneratorOrder { alphabet, rank, grades: FxHashMap::default() }
    }

    /// Overrides the grade of one generator.
    pub fn with_grade(mut self, g: GenSym, grade: i32) -> Self {
        self.grades.insert(g, grade);
        self
    }

    pub fn alphabet(&self) -> &[GenSym] {
        &self.alphabet
    }

    pub fn contains(&self, g: GenSym) -> bool {
        self.rank.contains_key(&g)
    }

    pub fn rank(&self, g: GenSym) -> Option<u16> {
        self.rank.get(&g).copied()
    }

    /// Grade of a generator: one plus the series degree unless overridden.
    pub fn grade(&self, g: GenSym) -> i32 {
        self.grades.get(&g).copied().unwrap_or(1 + g.degree() as i32)
    }

    /// Sum of series degrees; the quantity bounded by an affine window.
    pub fn weight(w: &Word) -> usize {
        w.iter().map(|g| g.degree()).sum()
    }

    pub fn key(&self, w: &Word) -> WordKey {
        let grade = w.iter().map(|&g| self.grade(g)).sum();
        let ranks = w.iter().map(|g| self.rank.get(g).copied().unwrap_or(u16::MAX)).collect();
        (grade, ranks)
    }

    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// True iff consecutive letters never decrease in rank.
    pub fn is_ordered(&self, w: &Word) -> bool {
        w.windows(2).all(|p| self.rank(p[0]) <= self.rank(p[1]))
    }
}
