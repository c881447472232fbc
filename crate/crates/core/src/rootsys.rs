//! Positive root systems of the simple Lie algebras.
//!
//! Simple roots are numbered as in the Vinberg–Onishchik tables. For the
//! classical series this is the usual chain numbering (`α_n` is the short
//! root of `B_n` and the long root of `C_n`, `α_{n-1}, α_n` are the two
//! tail roots of `D_n`). For `E_n` the roots `α_1..α_{n-1}` form the long
//! chain and `α_n` hangs off `α_3`, `α_4` or `α_5` for `E_6`, `E_7`, `E_8`.
//! For `F_4` the roots `α_1, α_2` are short; for `G_2` the root `α_1` is
//! short.
//!
//! Inside the crate simple roots are 0-based indices; everything that faces
//! a user (records, CLI) converts to the 1-based labels.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a positive root in [`RootSystem::roots`].
pub type RootId = usize;

/// Sets of positive roots, ordered by the canonical root order.
pub type RootSet = BTreeSet<RootId>;

/// Sets of simple roots, 0-based.
pub type SimpleSet = BTreeSet<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// A Cartan type `X_n` whose rank satisfies the bounds of its family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the classical closed forms.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B, _) | (Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Every constructible type with rank at most `max_rank`, classical
    /// series first, then the exceptional ones.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses labels such as `A6`, `e8` or `D_5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| Error::UnknownFamily(String::new()))?
            .to_string()
            .parse()?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad rank in type label {s:?}")))?;
        SimpleType::new(family, rank)
    }
}

/// A positive root as its coordinate vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coeffs: Vec<i32>,
}

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    /// Coefficient `[γ : α_i]`, 0-based `i`.
    pub fn coeff(&self, i: usize) -> i32 {
        self.coeffs[i]
    }

    pub fn support(&self) -> SimpleSet {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Compact digit string, e.g. `0111110`. Coefficients of roots of simple
    /// Lie algebras never exceed 6, so the string is unambiguous.
    pub fn digits(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_digits(s: &str) -> Result<Root> {
        s.chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as i32)
                    .ok_or_else(|| Error::Parse(format!("bad root digit string {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Root::new)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.digits())
    }
}

/// The positive roots of a simple Lie algebra together with the Cartan data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    stype: SimpleType,
    /// `cartan[i][j] = <α_j, α_i^∨> = 2(α_i, α_j)/(α_i, α_i)`.
    cartan: Vec<Vec<i32>>,
    symmetrizer: Vec<i32>,
    /// `gram[i][j] = (α_i, α_j) = d_i a_ij`.
    gram: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index_of: HashMap<Vec<i32>, RootId>,
    highest: RootId,
}

impl RootSystem {
    pub fn new(stype: SimpleType) -> RootSystem {
        let gram = gram_matrix(stype);
        let n = stype.rank();
        let symmetrizer: Vec<i32> = (0..n).map(|i| gram[i][i] / 2).collect();
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| gram[i][j] / symmetrizer[i]).collect())
            .collect();

        // Grow the root list height by height using α-strings.
        let mut known: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut layer: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut all: Vec<Vec<i32>> = Vec::new();
        while !layer.is_empty() {
            for v in &layer {
                known.insert(v.clone(), ());
            }
            let mut next: Vec<Vec<i32>> = Vec::new();
            for v in &layer {
                for i in 0..n {
                    let mut q = 0;
                    let mut w = v.clone();
                    loop {
                        w[i] -= 1;
                        if known.contains_key(&w) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i32 = (0..n).map(|j| v[j] * cartan[i][j]).sum();
                    if q - pairing > 0 {
                        let mut up = v.clone();
                        up[i] += 1;
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }

        all.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let index_of = all.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
        let roots: Vec<Root> = all.into_iter().map(Root::new).collect();
        let highest = roots.len() - 1;
        RootSystem {
            stype,
            cartan,
            symmetrizer,
            gram,
            roots,
            index_of,
            highest,
        }
    }

    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i32] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn highest_root(&self) -> RootId {
        self.highest
    }

    /// Id of the simple root `α_i` (0-based).
    pub fn simple(&self, i: usize) -> RootId {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        self.index_of[&v]
    }

    pub fn find(&self, coeffs: &[i32]) -> Option<RootId> {
        self.index_of.get(coeffs).copied()
    }

    /// True iff `coeffs` or `-coeffs` is a positive root. Zero is not a root.
    pub fn is_root(&self, coeffs: &[i32]) -> bool {
        if coeffs.len() != self.rank() {
            return false;
        }
        if self.index_of.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i32> = coeffs.iter().map(|c| -c).collect();
        self.index_of.contains_key(&neg)
    }

    /// Root order: componentwise comparison of coefficients.
    pub fn leq(&self, g: RootId, h: RootId) -> bool {
        self.roots[g]
            .coeffs
            .iter()
            .zip(&self.roots[h].coeffs)
            .all(|(a, b)| a <= b)
    }

    pub fn support(&self, g: RootId) -> SimpleSet {
        self.roots[g].support()
    }

    /// `g + h` if it is a positive root.
    pub fn sum(&self, g: RootId, h: RootId) -> Option<RootId> {
        let v: Vec<i32> = self.roots[g]
            .coeffs
            .iter()
            .zip(&self.roots[h].coeffs)
            .map(|(a, b)| a + b)
            .collect();
        self.find(&v)
    }

    /// `g - h` if it is a positive root.
    pub fn difference(&self, g: RootId, h: RootId) -> Option<RootId> {
        let v: Vec<i32> = self.roots[g]
            .coeffs
            .iter()
            .zip(&self.roots[h].coeffs)
            .map(|(a, b)| a - b)
            .collect();
        self.find(&v)
    }

    /// Symmetrized form on coefficient vectors.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn inner_roots(&self, g: RootId, h: RootId) -> i32 {
        self.inner(&self.roots[g].coeffs, &self.roots[h].coeffs)
    }

    /// Squared length of the root.
    pub fn norm(&self, g: RootId) -> i32 {
        self.inner_roots(g, g)
    }

    /// Dynkin neighbours of the simple root `i`.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.gram[i][j] != 0)
    }

    /// Splits a set of simple roots into connected components of the
    /// Dynkin diagram, ordered lexicographically as sorted index lists.
    pub fn components(&self, set: &SimpleSet) -> Vec<SimpleSet> {
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = SimpleSet::new();
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.neighbours(v) {
                    if remaining.remove(&w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out.sort();
        out
    }

    pub fn is_connected(&self, set: &SimpleSet) -> bool {
        !set.is_empty() && self.components(set).len() == 1
    }

    /// Vertices on the Dynkin path from `a` to `b` inside `within`
    /// (endpoints included), or `None` when they are not connected there.
    pub fn diagram_path(&self, a: usize, b: usize, within: &SimpleSet) -> Option<Vec<usize>> {
        let mut prev: HashMap<usize, usize> = HashMap::new();
        let mut queue = std::collections::VecDeque::from([a]);
        let mut seen = SimpleSet::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbours(v) {
                if within.contains(&w) && seen.insert(w) {
                    prev.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Positive roots whose support lies in `simples`, in canonical order.
    pub fn roots_supported_in(&self, simples: &SimpleSet) -> Vec<RootId> {
        (0..self.len())
            .filter(|&g| self.roots[g].support().is_subset(simples))
            .collect()
    }

    /// Converts a coefficient vector to the standard ε-notation of the
    /// classical series. Display only; returns `None` for exceptional types.
    pub fn epsilon_string(&self, coeffs: &[i32]) -> Option<String> {
        let eps = self.epsilon_coords(coeffs)?;
        let mut s = String::new();
        for (i, &c) in eps.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                s.push_str(&format!("{sign}e{}", i + 1));
            } else {
                s.push_str(&format!("{sign}{mag}e{}", i + 1));
            }
        }
        Some(s)
    }

    fn epsilon_coords(&self, coeffs: &[i32]) -> Option<Vec<i32>> {
        let n = self.rank();
        match self.stype.family() {
            Family::A => {
                let mut e = vec![0; n + 1];
                for (i, &c) in coeffs.iter().enumerate() {
                    e[i] += c;
                    e[i + 1] -= c;
                }
                Some(e)
            }
            Family::B | Family::C | Family::D => {
                let mut e = vec![0; n];
                for (i, &c) in coeffs.iter().enumerate() {
                    if i + 1 < n {
                        e[i] += c;
                        e[i + 1] -= c;
                    } else {
                        match self.stype.family() {
                            Family::B => e[n - 1] += c,
                            Family::C => e[n - 1] += 2 * c,
                            _ => {
                                e[n - 2] += c;
                                e[n - 1] += c;
                            }
                        }
                    }
                }
                Some(e)
            }
            _ => None,
        }
    }
}

fn gram_matrix(stype: SimpleType) -> Vec<Vec<i32>> {
    let n = stype.rank();
    let mut lengths = vec![2; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match stype.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 1..n {
                edges.push((i - 1, i));
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                edges.push((i - 1, i));
            }
            edges.push((n - 3, n - 1));
        }
        Family::E => {
            for i in 1..n - 1 {
                edges.push((i - 1, i));
            }
            let branch = match n {
                6 => 2,
                7 => 3,
                _ => 4,
            };
            edges.push((branch, n - 1));
        }
    }
    match stype.family() {
        Family::B => {
            lengths = vec![4; n];
            lengths[n - 1] = 2;
        }
        Family::C if n > 1 => {
            lengths[n - 1] = 4;
        }
        Family::F => lengths = vec![2, 2, 4, 4],
        Family::G => lengths = vec![2, 6],
        _ => {}
    }
    let mut gram = vec![vec![0; n]; n];
    for i in 0..n {
        gram[i][i] = lengths[i];
    }
    for &(i, j) in &edges {
        let v = -lengths[i].max(lengths[j]) / 2;
        gram[i][j] = v;
        gram[j][i] = v;
    }
    gram
}
