//! Generator spaces and the double grading.
//!
//! A space is determined by a base dimension `n` and a fibre rank `r`. It
//! carries four generator families:
//!
//! | family   | symbol | range  | bidegree | parity |
//! |----------|--------|--------|----------|--------|
//! | base     | `x_i`  | 1..=n  | (0,0)    | even   |
//! | fibre    | `xi_a` | 1..=r  | (0,1)    | odd    |
//! | cofibre  | `th_a` | 1..=r  | (1,0)    | odd    |
//! | momentum | `p_i`  | 1..=n  | (1,1)    | even   |
//!
//! The parity of every generator equals the sum of its bidegree components
//! mod 2, so parity is determined by the total weight throughout the algebra.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::Add;

/// The four generator families, in canonical order.
///
/// The derived `Ord` gives the canonical order used to sort odd factors:
/// all `xi` before all `th`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Base,
    Fibre,
    Cofibre,
    Momentum,
}

impl Family {
    pub fn bidegree(self) -> Bidegree {
        match self {
            Family::Base => Bidegree::new(0, 0),
            Family::Fibre => Bidegree::new(0, 1),
            Family::Cofibre => Bidegree::new(1, 0),
            Family::Momentum => Bidegree::new(1, 1),
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Family::Fibre | Family::Cofibre)
    }

    /// Symbol used by the expression grammar.
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Base => "x",
            Family::Fibre => "xi",
            Family::Cofibre => "th",
            Family::Momentum => "p",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Family> {
        match s {
            "x" => Some(Family::Base),
            "xi" => Some(Family::Fibre),
            "th" => Some(Family::Cofibre),
            "p" => Some(Family::Momentum),
            _ => None,
        }
    }
}

/// A single generator, identified by family and 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub family: Family,
    pub index: usize,
}

impl Generator {
    pub fn new(family: Family, index: usize) -> Self {
        Generator { family, index }
    }

    pub fn base(index: usize) -> Self {
        Generator::new(Family::Base, index)
    }

    pub fn fibre(index: usize) -> Self {
        Generator::new(Family::Fibre, index)
    }

    pub fn cofibre(index: usize) -> Self {
        Generator::new(Family::Cofibre, index)
    }

    pub fn momentum(index: usize) -> Self {
        Generator::new(Family::Momentum, index)
    }

    pub fn bidegree(self) -> Bidegree {
        self.family.bidegree()
    }

    pub fn is_odd(self) -> bool {
        self.family.is_odd()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.index)
    }
}

/// A point of the double grading: horizontal degree counts `th` and `p`,
/// vertical degree counts `xi` and `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bidegree {
    pub horizontal: usize,
    pub vertical: usize,
}

impl Bidegree {
    pub const fn new(horizontal: usize, vertical: usize) -> Self {
        Bidegree {
            horizontal,
            vertical,
        }
    }

    pub fn total_weight(self) -> usize {
        self.horizontal + self.vertical
    }
}

impl Add for Bidegree {
    type Output = Bidegree;

    fn add(self, other: Bidegree) -> Bidegree {
        Bidegree::new(
            self.horizontal + other.horizontal,
            self.vertical + other.vertical,
        )
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.horizontal, self.vertical)
    }
}

/// Declaration of base dimension and fibre rank, fixing the generator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorSpace {
    pub base_dim: usize,
    pub fibre_rank: usize,
}

impl GeneratorSpace {
    pub fn new(base_dim: usize, fibre_rank: usize) -> Self {
        GeneratorSpace {
            base_dim,
            fibre_rank,
        }
    }

    pub fn contains(&self, g: Generator) -> bool {
        let limit = match g.family {
            Family::Base | Family::Momentum => self.base_dim,
            Family::Fibre | Family::Cofibre => self.fibre_rank,
        };
        g.index >= 1 && g.index <= limit
    }

    pub fn check(&self, g: Generator) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                gen: g.to_string(),
                n: self.base_dim,
                r: self.fibre_rank,
            })
        }
    }

    pub fn base_gens(&self) -> impl Iterator<Item = Generator> {
        (1..=self.base_dim).map(Generator::base)
    }

    pub fn fibre_gens(&self) -> impl Iterator<Item = Generator> {
        (1..=self.fibre_rank).map(Generator::fibre)
    }

    pub fn cofibre_gens(&self) -> impl Iterator<Item = Generator> {
        (1..=self.fibre_rank).map(Generator::cofibre)
    }

    pub fn momentum_gens(&self) -> impl Iterator<Item = Generator> {
        (1..=self.base_dim).map(Generator::momentum)
    }

    pub fn all_gens(&self) -> impl Iterator<Item = Generator> {
        self.base_gens()
            .chain(self.fibre_gens())
            .chain(self.cofibre_gens())
            .chain(self.momentum_gens())
    }
}

impl fmt::Display for GeneratorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "space(n={}, r={})", self.base_dim, self.fibre_rank)
    }
}
