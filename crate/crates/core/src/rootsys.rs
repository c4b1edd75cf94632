//! Finite root systems of types A–G and products thereof.
//!
//! The central object is [`RootSystem`], an exact integer model of a
//! semisimple root system: Cartan matrix, Dynkin-diagram adjacency and
//! fundamental (co)weights. Simple roots are Bourbaki-numbered within
//! each factor and factors are concatenated in input order.
//!
//! Coordinate conventions used throughout the crate:
//!
//! * roots (and anything expanded in simple roots, e.g. spherical roots)
//!   are integer vectors in **simple-root coordinates**;
//! * weights are integer vectors in **fundamental-weight coordinates**;
//! * coweights are integer vectors in **fundamental-coweight coordinates**,
//!   so pairing a coweight against a root is a plain dot product.
//!
//! The Cartan matrix is stored with rows indexed by coroots:
//! `cartan[i][j] = αᵢ∨(αⱼ)`. Every pairing in the crate reduces to this
//! convention; the `oracle` module cross-checks it against hand-entered
//! fixture tables.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Simple Lie series (Cartan–Killing classification).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }

    /// Admissible ranks: A≥1, B≥2, C≥2, D≥3, E∈{6,7,8}, F=4, G=2.
    pub fn rank_valid(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A semisimple Dynkin type: an ordered product of simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DynkinType {
    factors: Vec<(Series, usize)>,
}

impl DynkinType {
    /// Validates rank bounds for every factor.
    pub fn new(factors: Vec<(Series, usize)>) -> Result<Self> {
        for &(series, rank) in &factors {
            if !series.rank_valid(rank) {
                return Err(Error::InvalidRank {
                    series: series.letter(),
                    rank,
                });
            }
        }
        Ok(DynkinType { factors })
    }

    pub fn simple(series: Series, rank: usize) -> Result<Self> {
        DynkinType::new(vec![(series, rank)])
    }

    pub fn factors(&self) -> &[(Series, usize)] {
        &self.factors
    }

    /// Total rank (sum over factors).
    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(_, r)| r).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// The type of `G × G`: the same factor list repeated.
    pub fn doubled(&self) -> DynkinType {
        let mut factors = self.factors.clone();
        factors.extend(self.factors.iter().cloned());
        DynkinType { factors }
    }

    /// Parses `"A3"`, `"G2xA1"`, `"A3 x A3"` (case-insensitive, `x` separated).
    pub fn parse(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let mut chars = part.chars();
            let letter = chars
                .next()
                .and_then(Series::from_letter)
                .ok_or_else(|| Error::Parse(format!("bad Dynkin factor `{part}`")))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank in Dynkin factor `{part}`")))?;
            factors.push((letter, rank));
        }
        if factors.is_empty() {
            return Err(Error::Parse("empty Dynkin type".into()));
        }
        DynkinType::new(factors)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(series, rank)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{series}{rank}")?;
        }
        Ok(())
    }
}

/// Exact root-system data for a semisimple Dynkin type.
///
/// Immutable after construction; cheap to clone and safe to share.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSystem {
    dynkin: DynkinType,
    /// `cartan[i][j] = αᵢ∨(αⱼ)`; block-diagonal for products.
    cartan: Vec<Vec<i64>>,
    /// Dynkin diagram: `adjacency[i][j]` iff `i ≠ j` and `cartan[i][j] ≠ 0`.
    adjacency: Vec<Vec<bool>>,
}

/// Cartan block of a single simple factor, Bourbaki numbering, 0-based
/// indices, rows indexed by coroots.
fn simple_cartan(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match series {
        Series::A => {
            for i in 0..n.saturating_sub(1) {
                link(&mut c, i, i + 1);
            }
        }
        Series::B => {
            // α_n short: the coroot of the short root pairs -2 with α_{n-1}.
            for i in 0..n - 1 {
                link(&mut c, i, i + 1);
            }
            c[n - 1][n - 2] = -2;
        }
        Series::C => {
            // α_n long.
            for i in 0..n - 1 {
                link(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -2;
        }
        Series::D => {
            // Path on 1..n-2 with both n-1 and n attached to n-2.
            for i in 0..n - 3 {
                link(&mut c, i, i + 1);
            }
            link(&mut c, n - 3, n - 2);
            link(&mut c, n - 3, n - 1);
        }
        Series::E => {
            // Bourbaki: node 2 hangs off node 4; path 1-3-4-5-...-n.
            link(&mut c, 0, 2);
            link(&mut c, 1, 3);
            for i in 2..n - 1 {
                link(&mut c, i, i + 1);
            }
        }
        Series::F => {
            // α₁, α₂ long; α₃, α₄ short.
            link(&mut c, 0, 1);
            link(&mut c, 1, 2);
            link(&mut c, 2, 3);
            c[2][1] = -2;
        }
        Series::G => {
            // α₁ short, α₂ long.
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    c
}

/// Builds the root system of a validated Dynkin type.
///
/// Deterministic: factors in input order, Bourbaki numbering within each
/// factor, so two calls produce identical matrices.
pub fn build_root_system(dynkin: DynkinType) -> RootSystem {
    let rank = dynkin.rank();
    let mut cartan = vec![vec![0i64; rank]; rank];
    let mut offset = 0;
    for &(series, n) in dynkin.factors() {
        let block = simple_cartan(series, n);
        for i in 0..n {
            for j in 0..n {
                cartan[offset + i][offset + j] = block[i][j];
            }
        }
        offset += n;
    }
    let adjacency = (0..rank)
        .map(|i| (0..rank).map(|j| i != j && cartan[i][j] != 0).collect())
        .collect();
    RootSystem {
        dynkin,
        cartan,
        adjacency,
    }
}

impl RootSystem {
    pub fn simple(series: Series, rank: usize) -> Result<RootSystem> {
        Ok(build_root_system(DynkinType::simple(series, rank)?))
    }

    pub fn dynkin(&self) -> &DynkinType {
        &self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn adjacency(&self) -> &[Vec<bool>] {
        &self.adjacency
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                limit: self.rank(),
            })
        }
    }

    /// `αᵢ∨(αⱼ)`.
    pub fn pairing(&self, coroot: usize, root: usize) -> Result<i64> {
        self.check_index(coroot)?;
        self.check_index(root)?;
        Ok(self.cartan[coroot][root])
    }

    /// `αᵢ∨(v)` for a vector `v` in simple-root coordinates.
    pub fn pairing_with_weight(&self, coroot: usize, v: &[i64]) -> Result<i64> {
        self.check_index(coroot)?;
        if v.len() != self.rank() {
            return Err(Error::ArityMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(self.cartan[coroot].iter().zip(v).map(|(c, x)| c * x).sum())
    }

    /// Dynkin-diagram degree of the node `i`.
    pub fn degree(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(self.adjacency[i].iter().filter(|&&b| b).count())
    }

    /// A simple root is nonextremal if it has at least two neighbours in
    /// the Dynkin diagram. Meaningful per simple factor; products have
    /// block-diagonal adjacency, so the degree is the in-factor degree.
    pub fn is_nonextremal(&self, i: usize) -> Result<bool> {
        Ok(self.degree(i)? >= 2)
    }

    /// Simple root `αᵢ` in simple-root coordinates (a unit vector).
    pub fn simple_root(&self, i: usize) -> Result<Vec<i64>> {
        self.check_index(i)?;
        Ok(unit(self.rank(), i))
    }

    /// Coroot `αᵢ∨` in fundamental-coweight coordinates (a Cartan row).
    pub fn coroot(&self, i: usize) -> Result<Vec<i64>> {
        self.check_index(i)?;
        Ok(self.cartan[i].clone())
    }

    /// Fundamental weight `ωᵢ` in fundamental-weight coordinates.
    pub fn fundamental_weight(&self, i: usize) -> Result<Vec<i64>> {
        self.check_index(i)?;
        Ok(unit(self.rank(), i))
    }

    /// Fundamental coweight `ωᵢ∨` in fundamental-coweight coordinates.
    pub fn fundamental_coweight(&self, i: usize) -> Result<Vec<i64>> {
        self.check_index(i)?;
        Ok(unit(self.rank(), i))
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates
    /// (multiplication by the Cartan matrix).
    pub fn root_to_weight_coords(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.rank() {
            return Err(Error::ArityMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok((0..self.rank())
            .map(|i| self.cartan[i].iter().zip(v).map(|(c, x)| c * x).sum())
            .collect())
    }

    /// Pairing of a coweight (fundamental-coweight coordinates) against a
    /// root vector (simple-root coordinates): a dot product.
    pub fn coweight_root_pairing(&self, coweight: &[i64], root: &[i64]) -> Result<i64> {
        if coweight.len() != self.rank() || root.len() != self.rank() {
            return Err(Error::ArityMismatch {
                expected: self.rank(),
                got: coweight.len().max(root.len()),
            });
        }
        Ok(coweight.iter().zip(root).map(|(a, b)| a * b).sum())
    }

    /// Which factor a simple-root index belongs to, and the offset of that
    /// factor's first root.
    pub fn factor_of(&self, i: usize) -> Result<(usize, usize)> {
        self.check_index(i)?;
        let mut offset = 0;
        for (k, &(_, n)) in self.dynkin.factors().iter().enumerate() {
            if i < offset + n {
                return Ok((k, offset));
            }
            offset += n;
        }
        unreachable!("index checked against rank")
    }

    /// Index ranges of the simple factors, in order.
    pub fn factor_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut ranges = Vec::with_capacity(self.dynkin.factors().len());
        let mut offset = 0;
        for &(_, n) in self.dynkin.factors() {
            ranges.push(offset..offset + n);
            offset += n;
        }
        ranges
    }
}

fn unit(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}
