//! The zigzag-times-chain poset and its order ideals.
//!
//! `ZigzagChainPoset { m, n }` is the product of the fence (zigzag) poset on
//! `m` points — `1 < 2 > 3 < 4 > ...`, odd positions minimal — with a chain
//! of `n` points. Its order ideals are in bijection with down-up alternating
//! words: an ideal is determined by the number of chain levels it keeps at
//! each fence position, and those height profiles are exactly the sequences
//! where every even position stays at or below both neighbours.
//!
//! Elements are `(position, level)` pairs, both 1-indexed.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// A height profile describing an order ideal of a zigzag-times-chain poset:
/// `heights[p]` is how many chain levels the ideal keeps at fence position
/// `p + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealProfile {
    heights: Vec<u32>,
    max_height: u32,
}

/// Ways a height profile can fail to describe an order ideal.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("height {height} at position {position} exceeds the chain height {max_height}")]
    HeightOutOfRange {
        position: usize,
        height: u32,
        max_height: u32,
    },
    #[error("even position {position} is taller than its neighbour at {neighbor}")]
    NotDownwardClosed { position: usize, neighbor: usize },
    #[error("cannot parse profile: {0}")]
    Parse(String),
}

impl IdealProfile {
    /// Validates the heights against the chain bound and the downward-closure
    /// rule (1-indexed even positions must not exceed either neighbour).
    pub fn new(heights: Vec<u32>, max_height: u32) -> Result<Self, ProfileError> {
        for (idx, &h) in heights.iter().enumerate() {
            if h > max_height {
                return Err(ProfileError::HeightOutOfRange {
                    position: idx + 1,
                    height: h,
                    max_height,
                });
            }
            // idx is 0-indexed, so odd idx = even position = local minimum
            if idx % 2 == 1 {
                if h > heights[idx - 1] {
                    return Err(ProfileError::NotDownwardClosed {
                        position: idx + 1,
                        neighbor: idx,
                    });
                }
                if idx + 1 < heights.len() && h > heights[idx + 1] {
                    return Err(ProfileError::NotDownwardClosed {
                        position: idx + 1,
                        neighbor: idx + 2,
                    });
                }
            }
        }
        Ok(IdealProfile {
            heights,
            max_height,
        })
    }

    pub(crate) fn from_valid(heights: Vec<u32>, max_height: u32) -> Self {
        debug_assert!(IdealProfile::new(heights.clone(), max_height).is_ok());
        IdealProfile {
            heights,
            max_height,
        }
    }

    /// Parses either a digit string (`"1120211"`, heights up to 9) or a
    /// comma-separated list (`"11,2,0"`). The empty string is the empty
    /// profile.
    pub fn parse(s: &str, max_height: u32) -> Result<Self, ProfileError> {
        let s = s.trim();
        if s.is_empty() {
            return IdealProfile::new(Vec::new(), max_height);
        }
        // Heights can exceed one digit when the chain is tall, so tall chains
        // always read the comma form (mirrors the word parser).
        let heights = if s.contains(',') || max_height > 9 {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| ProfileError::Parse(format!("bad height {part:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| ProfileError::Parse(format!("bad height digit {c:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        IdealProfile::new(heights, max_height)
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn max_height(&self) -> u32 {
        self.max_height
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }
}

impl fmt::Display for IdealProfile {
    /// Digit string when every height fits one digit, comma-separated
    /// otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.max_height <= 9 {
            for &h in &self.heights {
                write!(f, "{h}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.heights.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// The product of the fence poset on `m` points with a chain of `n` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZigzagChainPoset {
    m: usize,
    n: u32,
}

impl ZigzagChainPoset {
    pub fn new(m: usize, n: u32) -> Self {
        ZigzagChainPoset { m, n }
    }

    pub fn positions(&self) -> usize {
        self.m
    }

    pub fn chain_height(&self) -> u32 {
        self.n
    }

    /// Whether `(position, level)` names an element of this poset.
    pub fn contains_element(&self, e: (usize, u32)) -> bool {
        (1..=self.m).contains(&e.0) && (1..=self.n).contains(&e.1)
    }

    /// The product order: positions compare along the fence (`odd < even`
    /// when adjacent), levels along the chain.
    pub fn leq(&self, a: (usize, u32), b: (usize, u32)) -> bool {
        debug_assert!(self.contains_element(a) && self.contains_element(b));
        let fence = a.0 == b.0 || (a.0 % 2 == 1 && b.0.is_multiple_of(2) && a.0.abs_diff(b.0) == 1);
        fence && a.1 <= b.1
    }

    /// All elements, position-major.
    pub fn elements(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        (1..=self.m).flat_map(move |p| (1..=self.n).map(move |l| (p, l)))
    }

    /// Whether the set is downward closed.
    pub fn is_ideal(&self, set: &[(usize, u32)]) -> bool {
        self.profile_of(set).is_some()
    }

    /// The height profile of an ideal, or `None` if the set is not an order
    /// ideal of this poset (contains foreign elements, has level gaps, or
    /// breaks downward closure across the fence).
    pub fn profile_of(&self, set: &[(usize, u32)]) -> Option<IdealProfile> {
        let members: HashSet<(usize, u32)> = set.iter().copied().collect();
        if !members.iter().all(|&e| self.contains_element(e)) {
            return None;
        }
        let mut heights = vec![0u32; self.m];
        for &(p, l) in &members {
            heights[p - 1] = heights[p - 1].max(l);
        }
        // levels below a member must all be members (chain closure)
        let prefix_closed =
            (1..=self.m).all(|p| (1..=heights[p - 1]).all(|l| members.contains(&(p, l))));
        if !prefix_closed || members.len() != heights.iter().map(|&h| h as usize).sum::<usize>() {
            return None;
        }
        IdealProfile::new(heights, self.n).ok()
    }

    /// The elements of the ideal a profile describes, sorted position-major.
    /// Panics if the profile belongs to a different poset shape.
    pub fn ideal_of(&self, profile: &IdealProfile) -> Vec<(usize, u32)> {
        assert_eq!(
            profile.len(),
            self.m,
            "profile length differs from the fence size"
        );
        assert_eq!(
            profile.max_height(),
            self.n,
            "profile chain height differs from the poset"
        );
        let mut out = Vec::with_capacity(profile.heights().iter().map(|&h| h as usize).sum());
        for (idx, &h) in profile.heights().iter().enumerate() {
            for l in 1..=h {
                out.push((idx + 1, l));
            }
        }
        out
    }

    pub fn enumerate_ideals(&self) -> IdealProfiles {
        enumerate_ideals(self.m, self.n)
    }

    pub fn count_ideals(&self) -> BigUint {
        count_ideals(self.m, self.n)
    }
}

/// Lexicographic stream of all ideal profiles of the `m`-point fence times an
/// `n`-point chain.
pub fn enumerate_ideals(m: usize, n: u32) -> IdealProfiles {
    IdealProfiles {
        m,
        n,
        stack: Vec::with_capacity(m),
        primed: false,
        done: false,
    }
}

/// Iterator behind [`enumerate_ideals`].
#[derive(Debug)]
pub struct IdealProfiles {
    m: usize,
    n: u32,
    stack: Vec<u32>,
    primed: bool,
    done: bool,
}

impl IdealProfiles {
    // 0-indexed odd slots sit at even fence positions: capped by the left
    // neighbour here, and capping the right neighbour via lower_bound
    fn upper_bound(&self, pos: usize) -> u32 {
        if pos % 2 == 1 {
            self.stack[pos - 1]
        } else {
            self.n
        }
    }

    fn lower_bound(&self, pos: usize) -> u32 {
        if pos.is_multiple_of(2) && pos > 0 {
            self.stack[pos - 1]
        } else {
            0
        }
    }

    // extend the current prefix with the smallest legal suffix; always
    // possible, because lower bounds are themselves legal choices
    fn fill_minimal(&mut self) {
        while self.stack.len() < self.m {
            let lo = self.lower_bound(self.stack.len());
            self.stack.push(lo);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(&top) = self.stack.last() {
            let pos = self.stack.len() - 1;
            if top < self.upper_bound(pos) {
                *self.stack.last_mut().expect("nonempty") += 1;
                self.fill_minimal();
                return true;
            }
            self.stack.pop();
        }
        false
    }
}

impl Iterator for IdealProfiles {
    type Item = IdealProfile;

    fn next(&mut self) -> Option<IdealProfile> {
        if self.done {
            return None;
        }
        if !self.primed {
            self.primed = true;
            self.fill_minimal();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(IdealProfile::from_valid(self.stack.clone(), self.n))
    }
}

/// Number of ideal profiles, by a prefix/suffix-sum sweep over heights:
/// walking the fence left to right, an even position may keep any height up
/// to its predecessor, an odd one any height from its predecessor up.
pub fn count_ideals(m: usize, n: u32) -> BigUint {
    if m == 0 {
        return BigUint::one();
    }
    let width = n as usize + 1;
    let mut by_height: Vec<BigUint> = vec![BigUint::one(); width];
    for pos in 1..m {
        let mut next: Vec<BigUint> = Vec::with_capacity(width);
        if pos % 2 == 1 {
            // suffix sums: height h allowed under any predecessor >= h
            let mut acc = BigUint::zero();
            for v in by_height.iter().rev() {
                acc += v;
                next.push(acc.clone());
            }
            next.reverse();
        } else {
            // prefix sums: height h allowed over any predecessor <= h
            let mut acc = BigUint::zero();
            for v in &by_height {
                acc += v;
                next.push(acc.clone());
            }
        }
        by_height = next;
    }
    by_height.into_iter().sum()
}
