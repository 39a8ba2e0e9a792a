//! Words over a finite alphabet `[k] = {1, .., k}`, the up-down/down-up
//! alternation predicates, letterwise symmetries, containment of length-3
//! permutation patterns, and an exhaustive generator used as the brute-force
//! oracle by everything else in the crate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

/// Alternation direction of a word.
///
/// An up-down word satisfies `w1 < w2 > w3 < w4 > ...`, a down-up word
/// satisfies `w1 > w2 < w3 > w4 < ...` (all inequalities strict). Words of
/// length 0 and 1 vacuously alternate in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    UpDown,
    DownUp,
}

impl Direction {
    /// The direction obtained after complementing every letter.
    pub fn flipped(self) -> Direction {
        match self {
            Direction::UpDown => Direction::DownUp,
            Direction::DownUp => Direction::UpDown,
        }
    }

    /// Is the step into 0-based position `pos` (from `pos - 1`) an ascent?
    fn is_ascent_into(self, pos: usize) -> bool {
        match self {
            Direction::UpDown => pos % 2 == 1,
            Direction::DownUp => pos.is_multiple_of(2),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::UpDown => write!(f, "up-down"),
            Direction::DownUp => write!(f, "down-up"),
        }
    }
}

/// One of the six permutation patterns of length 3.
///
/// A word `w` contains pattern `p` if some subsequence `w[i] w[j] w[l]`
/// (`i < j < l`) is strictly order-isomorphic to `p`; equal letters never
/// participate in an occurrence. `w` avoids `p` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern3 {
    P123,
    P132,
    P213,
    P231,
    P312,
    P321,
}

impl Pattern3 {
    /// All six patterns, in lexicographic order.
    pub const ALL: [Pattern3; 6] = [
        Pattern3::P123,
        Pattern3::P132,
        Pattern3::P213,
        Pattern3::P231,
        Pattern3::P312,
        Pattern3::P321,
    ];

    /// The pattern letters as digits, e.g. `[1, 3, 2]` for `P132`.
    pub fn digits(self) -> [u32; 3] {
        match self {
            Pattern3::P123 => [1, 2, 3],
            Pattern3::P132 => [1, 3, 2],
            Pattern3::P213 => [2, 1, 3],
            Pattern3::P231 => [2, 3, 1],
            Pattern3::P312 => [3, 1, 2],
            Pattern3::P321 => [3, 2, 1],
        }
    }

    /// Complement within `S_3`: each digit `d` becomes `4 - d`.
    pub fn complement(self) -> Pattern3 {
        match self {
            Pattern3::P123 => Pattern3::P321,
            Pattern3::P132 => Pattern3::P312,
            Pattern3::P213 => Pattern3::P231,
            Pattern3::P231 => Pattern3::P213,
            Pattern3::P312 => Pattern3::P132,
            Pattern3::P321 => Pattern3::P123,
        }
    }

    /// Left-right reversal of the pattern.
    pub fn reverse(self) -> Pattern3 {
        match self {
            Pattern3::P123 => Pattern3::P321,
            Pattern3::P132 => Pattern3::P231,
            Pattern3::P213 => Pattern3::P312,
            Pattern3::P231 => Pattern3::P132,
            Pattern3::P312 => Pattern3::P213,
            Pattern3::P321 => Pattern3::P123,
        }
    }
}

impl fmt::Display for Pattern3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.digits();
        write!(f, "{}{}{}", d[0], d[1], d[2])
    }
}

impl FromStr for Pattern3 {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "123" => Ok(Pattern3::P123),
            "132" => Ok(Pattern3::P132),
            "213" => Ok(Pattern3::P213),
            "231" => Ok(Pattern3::P231),
            "312" => Ok(Pattern3::P312),
            "321" => Ok(Pattern3::P321),
            other => Err(WordError::Parse(format!(
                "unknown pattern {other:?}; expected one of 123, 132, 213, 231, 312, 321"
            ))),
        }
    }
}

/// Errors for word construction and parsing.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("letter {letter} out of range 1..={k}")]
    LetterOutOfRange { letter: u32, k: u32 },
    #[error("cannot parse word: {0}")]
    Parse(String),
}

/// A word over the alphabet `[k] = {1, .., k}`.
///
/// The alphabet size is part of the value: complementation and pattern
/// queries that rely on it need no extra context.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
    k: u32,
}

impl Word {
    /// Builds a word after checking every letter lies in `1..=k`.
    pub fn new(letters: Vec<u32>, k: u32) -> Result<Word, WordError> {
        if k == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        for &letter in &letters {
            if letter == 0 || letter > k {
                return Err(WordError::LetterOutOfRange { letter, k });
            }
        }
        Ok(Word { letters, k })
    }

    /// The empty word over `[k]`.
    pub fn empty(k: u32) -> Word {
        Word {
            letters: Vec::new(),
            k,
        }
    }

    /// Internal constructor for letters already known to be in range.
    pub(crate) fn from_valid(letters: Vec<u32>, k: u32) -> Word {
        debug_assert!(letters.iter().all(|&x| 1 <= x && x <= k));
        Word { letters, k }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Does the word alternate in direction `dir`? Lengths 0 and 1 alternate
    /// in both directions.
    pub fn is_alternating(&self, dir: Direction) -> bool {
        self.letters.windows(2).enumerate().all(|(i, pair)| {
            if dir.is_ascent_into(i + 1) {
                pair[0] < pair[1]
            } else {
                pair[0] > pair[1]
            }
        })
    }

    /// The letterwise complement `c_i = k + 1 - w_i`. An involution that
    /// exchanges up-down and down-up words.
    pub fn complement(&self) -> Word {
        let letters = self.letters.iter().map(|&x| self.k + 1 - x).collect();
        Word { letters, k: self.k }
    }

    /// The left-right reversal. Preserves the direction of odd-length
    /// alternating words and swaps it for even lengths.
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters, k: self.k }
    }

    /// Does the word contain `pattern`? Single pass per pattern: ascents are
    /// found by a running-minimum scan and the remaining shapes reduce to a
    /// 132 scan of the reversed and/or complemented letter stream.
    pub fn contains_pattern(&self, pattern: Pattern3) -> bool {
        let xs = &self.letters;
        let c = |x: &u32| self.k + 1 - *x;
        match pattern {
            Pattern3::P123 => has_ascending_triple(xs.iter().copied()),
            Pattern3::P321 => has_ascending_triple(xs.iter().rev().copied()),
            Pattern3::P132 => has_132_scanning_right(xs.iter().rev().copied()),
            Pattern3::P231 => has_132_scanning_right(xs.iter().copied()),
            Pattern3::P312 => has_132_scanning_right(xs.iter().rev().map(c)),
            Pattern3::P213 => has_132_scanning_right(xs.iter().map(c)),
        }
    }

    /// Renders as a digit string when `k <= 9`, otherwise as comma-separated
    /// integers (e.g. `10,3,12`).
    pub fn to_display_string(&self) -> String {
        if self.k <= 9 {
            self.letters.iter().map(|x| x.to_string()).collect()
        } else {
            let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
            parts.join(",")
        }
    }

    /// Parses either serialization form: a digit string (one letter per
    /// digit) or comma-separated integers. The empty string is the empty
    /// word.
    pub fn parse(s: &str, k: u32) -> Result<Word, WordError> {
        if k == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        if s.is_empty() {
            return Ok(Word::empty(k));
        }
        // A wide alphabet always reads the comma form: a lone "10" is the
        // letter ten, not the digits 1 and 0.
        let letters: Vec<u32> = if s.contains(',') || k > 9 {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| WordError::Parse(format!("bad letter {part:?} in {s:?}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .ok_or_else(|| WordError::Parse(format!("bad digit {ch:?} in {s:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        Word::new(letters, k)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_display_string())
    }
}

/// Is there a strictly increasing triple in the stream?
fn has_ascending_triple<I: Iterator<Item = u32>>(letters: I) -> bool {
    // smallest letter seen, and the smallest letter that has a strictly
    // smaller letter somewhere before it
    let mut lowest = u32::MAX;
    let mut mid = u32::MAX;
    for x in letters {
        if mid != u32::MAX && x > mid {
            return true;
        }
        if x > lowest {
            mid = mid.min(x);
        } else {
            lowest = x;
        }
    }
    false
}

/// Is there an occurrence of 132 in the word whose letters the iterator
/// yields from LAST to FIRST?
///
/// Scanning right to left, the stack holds letters in decreasing order from
/// bottom to top; `middle` is the largest letter known to have a strictly
/// larger letter on its left. Any current letter below `middle` completes an
/// occurrence as its "1".
fn has_132_scanning_right<I: Iterator<Item = u32>>(letters_rev: I) -> bool {
    let mut stack: Vec<u32> = Vec::new();
    let mut middle: Option<u32> = None;
    for x in letters_rev {
        if let Some(m) = middle {
            if x < m {
                return true;
            }
        }
        while let Some(&top) = stack.last() {
            if top < x {
                stack.pop();
                middle = Some(middle.map_or(top, |m| m.max(top)));
            } else {
                break;
            }
        }
        stack.push(x);
    }
    false
}

/// Reference pattern check by scanning all `O(len^3)` position triples.
/// Kept as the slow test oracle for [`Word::contains_pattern`].
pub fn contains_pattern_naive(w: &Word, pattern: Pattern3) -> bool {
    let xs = w.letters();
    let p = pattern.digits();
    let n = xs.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for l in (j + 1)..n {
                let same =
                    |a: u32, b: u32, pa: u32, pb: u32| (a < b && pa < pb) || (a > b && pa > pb);
                if same(xs[i], xs[j], p[0], p[1])
                    && same(xs[i], xs[l], p[0], p[2])
                    && same(xs[j], xs[l], p[1], p[2])
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Streams every alternating word of the given length over `[k]` in
/// lexicographic order. Produced by [`generate`].
///
/// The search walks letters left to right and never extends a prefix that
/// already violates alternation, so the work is proportional to the tree of
/// valid prefixes rather than to `k^len`.
pub struct AlternatingWords {
    k: u32,
    len: usize,
    dir: Direction,
    stack: Vec<u32>,
    primed: bool,
    done: bool,
}

impl AlternatingWords {
    fn lower_bound(&self, pos: usize) -> u32 {
        if pos == 0 {
            1
        } else if self.dir.is_ascent_into(pos) {
            self.stack[pos - 1] + 1
        } else {
            1
        }
    }

    fn upper_bound(&self, pos: usize) -> u32 {
        if pos == 0 || self.dir.is_ascent_into(pos) {
            self.k
        } else {
            self.stack[pos - 1] - 1
        }
    }

    /// Extends the current prefix with minimal letters as far as possible.
    /// Returns true when the word is complete.
    fn fill_minimal(&mut self) -> bool {
        while self.stack.len() < self.len {
            let pos = self.stack.len();
            let lo = self.lower_bound(pos);
            if lo <= self.upper_bound(pos) {
                self.stack.push(lo);
            } else {
                return false;
            }
        }
        true
    }
}

impl Iterator for AlternatingWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if self.len == 0 {
            self.done = true;
            return Some(Word::empty(self.k));
        }
        if !self.primed {
            self.primed = true;
            self.stack.push(1);
            if self.fill_minimal() {
                return Some(Word::from_valid(self.stack.clone(), self.k));
            }
        }
        // Backtrack: bump the deepest position that still has headroom, then
        // refill minimally behind it.
        loop {
            let pos = match self.stack.len().checked_sub(1) {
                Some(p) => p,
                None => {
                    self.done = true;
                    return None;
                }
            };
            let candidate = self.stack[pos] + 1;
            if candidate <= self.upper_bound(pos) {
                self.stack[pos] = candidate;
                if self.fill_minimal() {
                    return Some(Word::from_valid(self.stack.clone(), self.k));
                }
            } else {
                self.stack.pop();
            }
        }
    }
}

/// All alternating words of length `len` over `[k]` in direction `dir`,
/// lexicographically. Lengths 0 and 1 are alternating by convention.
pub fn generate(k: u32, len: usize, dir: Direction) -> AlternatingWords {
    assert!(k >= 1, "alphabet size must be at least 1");
    AlternatingWords {
        k,
        len,
        dir,
        stack: Vec::with_capacity(len),
        primed: false,
        done: false,
    }
}

/// Counts alternating words by exhaustive generation, optionally keeping only
/// those avoiding `avoid`. This is the crate's independent oracle: slow but
/// with no shared machinery beyond the generator and the pattern scan.
pub fn brute_count(k: u32, len: usize, dir: Direction, avoid: Option<Pattern3>) -> BigUint {
    let mut n: u64 = 0;
    for w in generate(k, len, dir) {
        let keep = match avoid {
            Some(p) => !w.contains_pattern(p),
            None => true,
        };
        if keep {
            n = n.checked_add(1).expect("count exceeds u64");
        }
    }
    BigUint::from(n)
}
