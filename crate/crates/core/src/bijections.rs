//! Constructive correspondences between alternating-word families.
//!
//! * [`word_to_ideal`] / [`ideal_to_word`] — down-up words of length other
//!   than one over `{1, .., k}` correspond to order ideals of the length-`l`
//!   fence times a chain of `k - 2` points.
//! * [`phi_132_to_123`] / [`phi_inverse`] — even-length up-down words
//!   avoiding 132 correspond to those avoiding 123, by rewiring each
//!   irreducible factor.
//! * [`psi_odd`] and [`map_312_to_123_odd`] — the odd-length companions,
//!   built by holding the first letter and mapping the tail.
//! * [`map_123_to_321`] / [`map_321_to_123`] — up-down words of length
//!   `l >= 4` avoiding 123 and using the top letter correspond to up-down
//!   words of length `l - 1` avoiding 321.
//!
//! Every map validates its input eagerly and reports how the word falls
//! outside the domain instead of producing garbage.

use thiserror::Error;

use crate::posets::IdealProfile;
use crate::words::{Direction, Pattern3, Word};

/// Why a word is outside the domain of one of the correspondences.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("word is not {expected}-alternating")]
    NotAlternating { expected: Direction },
    #[error("word length {len} is outside the domain ({requirement})")]
    UnsupportedLength {
        len: usize,
        requirement: &'static str,
    },
    #[error("alphabet size {k} is outside the domain ({requirement})")]
    UnsupportedAlphabet { k: u32, requirement: &'static str },
    #[error("word contains the pattern {0}")]
    ContainsPattern(Pattern3),
    #[error("word never uses the maximal letter {k}")]
    MissingMaximalLetter { k: u32 },
}

fn require_alternating(w: &Word, dir: Direction) -> Result<(), BijectionError> {
    if w.is_alternating(dir) {
        Ok(())
    } else {
        Err(BijectionError::NotAlternating { expected: dir })
    }
}

fn require_avoids(w: &Word, pattern: Pattern3) -> Result<(), BijectionError> {
    if w.contains_pattern(pattern) {
        Err(BijectionError::ContainsPattern(pattern))
    } else {
        Ok(())
    }
}

/// The height profile of the order ideal corresponding to a down-up word:
/// peaks (odd positions) drop by two, valleys (even positions) drop by one.
///
/// `3241423` over `{1, .., 4}` becomes the profile `1120211` of the 7-point
/// fence times a 2-point chain. Defined for every length except one, where
/// the letter `1` has no room to drop.
pub fn word_to_ideal(w: &Word) -> Result<IdealProfile, BijectionError> {
    if w.k() < 2 {
        return Err(BijectionError::UnsupportedAlphabet {
            k: w.k(),
            requirement: "the ideal correspondence needs at least two letters",
        });
    }
    require_alternating(w, Direction::DownUp)?;
    if w.len() == 1 {
        return Err(BijectionError::UnsupportedLength {
            len: 1,
            requirement: "single letters have no ideal counterpart",
        });
    }
    let heights = w
        .letters()
        .iter()
        .enumerate()
        .map(|(idx, &c)| if idx % 2 == 0 { c - 2 } else { c - 1 })
        .collect();
    Ok(IdealProfile::from_valid(heights, w.k() - 2))
}

/// Inverse of [`word_to_ideal`]: peaks rise by two, valleys by one, giving a
/// down-up word over `{1, .., max_height + 2}`.
pub fn ideal_to_word(profile: &IdealProfile) -> Result<Word, BijectionError> {
    if profile.len() == 1 {
        return Err(BijectionError::UnsupportedLength {
            len: 1,
            requirement: "single positions have no word counterpart",
        });
    }
    let k = profile.max_height() + 2;
    let letters = profile
        .heights()
        .iter()
        .enumerate()
        .map(|(idx, &h)| if idx % 2 == 0 { h + 2 } else { h + 1 })
        .collect();
    let w = Word::new(letters, k).expect("heights stay within the alphabet");
    debug_assert!(w.is_alternating(Direction::DownUp));
    Ok(w)
}

fn cut_places_slice(letters: &[u32]) -> Vec<usize> {
    let n = letters.len();
    if n < 2 {
        return Vec::new();
    }
    // suffix_max[p] = max of letters[p..]
    let mut suffix_max = vec![0u32; n + 1];
    for p in (0..n).rev() {
        suffix_max[p] = letters[p].max(suffix_max[p + 1]);
    }
    let mut prefix_min = u32::MAX;
    let mut out = Vec::new();
    for p in 1..n {
        prefix_min = prefix_min.min(letters[p - 1]);
        if prefix_min >= suffix_max[p] {
            out.push(p);
        }
    }
    out
}

/// The places `p` where the word splits as `prefix | suffix` with every
/// prefix letter at least every suffix letter (`1 <= p < len`, counting the
/// prefix length). `341312` cuts only at `2`.
pub fn cut_places(w: &Word) -> Vec<usize> {
    cut_places_slice(w.letters())
}

/// A nonempty word with no cut place.
pub fn is_irreducible(w: &Word) -> bool {
    !w.is_empty() && cut_places(w).is_empty()
}

/// A word split at every cut place. The factors are irreducible, and
/// concatenating them restores the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleDecomposition {
    blocks: Vec<Word>,
    k: u32,
}

impl IrreducibleDecomposition {
    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    pub fn reassemble(&self) -> Word {
        let letters: Vec<u32> = self
            .blocks
            .iter()
            .flat_map(|b| b.letters().iter().copied())
            .collect();
        Word::new(letters, self.k).expect("blocks hold validated letters")
    }
}

/// Factor a word into its irreducible blocks by splitting at every cut
/// place. The empty word has no blocks.
pub fn decompose(w: &Word) -> IrreducibleDecomposition {
    let cuts = cut_places(w);
    let mut blocks = Vec::with_capacity(cuts.len() + 1);
    let mut start = 0usize;
    for &end in cuts.iter().chain(std::iter::once(&w.len())) {
        if end > start {
            let block = Word::new(w.letters()[start..end].to_vec(), w.k())
                .expect("slices of validated letters stay valid");
            blocks.push(block);
        }
        start = end;
    }
    IrreducibleDecomposition { blocks, k: w.k() }
}

// The irreducible step of the 132 -> 123 rewiring. An irreducible up-down
// 132-avoider of length >= 4 ends with its minimum letter x followed by some
// y; the image maps the rest, then threads y in as the new second letter and
// x as the new second-to-last.
fn phi_block(letters: &[u32]) -> Vec<u32> {
    let n = letters.len();
    if n <= 2 {
        return letters.to_vec();
    }
    let x = letters[n - 2];
    let y = letters[n - 1];
    let u = phi_letters(&letters[..n - 2]);
    let i = u.len() / 2;
    let mut out = Vec::with_capacity(n);
    out.push(u[0]);
    out.push(y);
    for r in 1..i {
        out.push(u[2 * r]);
        out.push(u[2 * r - 1]);
    }
    out.push(x);
    out.push(u[2 * i - 1]);
    out
}

fn phi_letters(letters: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(letters.len());
    let mut start = 0usize;
    for end in cut_places_slice(letters)
        .into_iter()
        .chain(std::iter::once(letters.len()))
    {
        if end > start {
            out.extend(phi_block(&letters[start..end]));
        }
        start = end;
    }
    out
}

// Inverse of phi_block: read off the threaded letters and unweave the rest.
fn phi_inv_block(letters: &[u32]) -> Vec<u32> {
    let n = letters.len();
    if n <= 2 {
        return letters.to_vec();
    }
    let i = n / 2 - 1;
    let y = letters[1];
    let x = letters[n - 2];
    let mut u = vec![0u32; n - 2];
    u[0] = letters[0];
    for r in 1..i {
        u[2 * r] = letters[2 * r];
        u[2 * r - 1] = letters[2 * r + 1];
    }
    u[2 * i - 1] = letters[n - 1];
    let mut out = phi_inv_letters(&u);
    out.push(x);
    out.push(y);
    out
}

fn phi_inv_letters(letters: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(letters.len());
    let mut start = 0usize;
    for end in cut_places_slice(letters)
        .into_iter()
        .chain(std::iter::once(letters.len()))
    {
        if end > start {
            out.extend(phi_inv_block(&letters[start..end]));
        }
        start = end;
    }
    out
}

/// The even-length rewiring: maps up-down 132-avoiding words of even length
/// to up-down 123-avoiding words of the same length, letter multiset and
/// first letter, factor by factor. `3435121213` maps to `3534131212`.
pub fn phi_132_to_123(w: &Word) -> Result<Word, BijectionError> {
    require_alternating(w, Direction::UpDown)?;
    if !w.len().is_multiple_of(2) {
        return Err(BijectionError::UnsupportedLength {
            len: w.len(),
            requirement: "the rewiring acts on even lengths",
        });
    }
    require_avoids(w, Pattern3::P132)?;
    let out = Word::new(phi_letters(w.letters()), w.k()).expect("rewiring permutes the letters");
    debug_assert!(out.is_alternating(Direction::UpDown));
    Ok(out)
}

/// Inverse of [`phi_132_to_123`]: defined on up-down 123-avoiding words of
/// even length.
pub fn phi_inverse(w: &Word) -> Result<Word, BijectionError> {
    require_alternating(w, Direction::UpDown)?;
    if !w.len().is_multiple_of(2) {
        return Err(BijectionError::UnsupportedLength {
            len: w.len(),
            requirement: "the rewiring acts on even lengths",
        });
    }
    require_avoids(w, Pattern3::P123)?;
    let out =
        Word::new(phi_inv_letters(w.letters()), w.k()).expect("rewiring permutes the letters");
    debug_assert!(out.is_alternating(Direction::UpDown));
    Ok(out)
}

/// The odd-length companion of the rewiring: holds the first letter of a
/// down-up 132-avoiding word of odd length and rewires the even-length tail.
/// Length one is the identity.
pub fn psi_odd(w: &Word) -> Result<Word, BijectionError> {
    require_alternating(w, Direction::DownUp)?;
    if w.len().is_multiple_of(2) {
        return Err(BijectionError::UnsupportedLength {
            len: w.len(),
            requirement: "the seam map acts on odd lengths",
        });
    }
    require_avoids(w, Pattern3::P132)?;
    if w.len() == 1 {
        return Ok(w.clone());
    }
    let mut letters = Vec::with_capacity(w.len());
    letters.push(w.letters()[0]);
    letters.extend(phi_letters(&w.letters()[1..]));
    let out = Word::new(letters, w.k()).expect("rewiring permutes the letters");
    debug_assert!(out.is_alternating(Direction::DownUp));
    Ok(out)
}

/// Odd-length correspondence from 312-avoiding to 123-avoiding up-down
/// words: complement into the domain of [`psi_odd`], rewire, complement
/// back, and reverse. Length one is the identity.
pub fn map_312_to_123_odd(w: &Word) -> Result<Word, BijectionError> {
    require_alternating(w, Direction::UpDown)?;
    if w.len().is_multiple_of(2) {
        return Err(BijectionError::UnsupportedLength {
            len: w.len(),
            requirement: "this correspondence acts on odd lengths",
        });
    }
    require_avoids(w, Pattern3::P312)?;
    if w.len() == 1 {
        return Ok(w.clone());
    }
    let rewired = psi_odd(&w.complement())?;
    Ok(rewired.complement().reversed())
}

/// Correspondence from up-down 123-avoiding words of length `l >= 4` that
/// use the top letter to up-down 321-avoiding words of length `l - 1`: drop
/// the first letter when it matches the third (otherwise the second, which
/// is forced to be the top letter), then complement. `1312` over `{1, 2, 3}`
/// maps to `132`, and `2312` to `232`.
pub fn map_123_to_321(w: &Word) -> Result<Word, BijectionError> {
    require_alternating(w, Direction::UpDown)?;
    if w.len() < 4 {
        return Err(BijectionError::UnsupportedLength {
            len: w.len(),
            requirement: "this correspondence acts on lengths of at least four",
        });
    }
    require_avoids(w, Pattern3::P123)?;
    let k = w.k();
    if !w.letters().contains(&k) {
        return Err(BijectionError::MissingMaximalLetter { k });
    }
    let letters = w.letters();
    let dropped: Vec<u32> = if letters[0] == letters[2] {
        letters[1..].to_vec()
    } else {
        // avoiding 123 forces the first letter above the third here, and the
        // second letter to be the top one
        debug_assert!(letters[0] > letters[2] && letters[1] == k);
        let mut v = Vec::with_capacity(letters.len() - 1);
        v.push(letters[0]);
        v.extend_from_slice(&letters[2..]);
        v
    };
    let out = Word::new(dropped, k).expect("dropping a letter keeps the rest valid");
    debug_assert!(out.is_alternating(Direction::DownUp));
    Ok(out.complement())
}

/// Inverse of [`map_123_to_321`]: complement an up-down 321-avoiding word of
/// length `l >= 3`, then reinsert the top letter in second place (doubling
/// the new first letter when the complement already starts at the top).
pub fn map_321_to_123(u: &Word) -> Result<Word, BijectionError> {
    require_alternating(u, Direction::UpDown)?;
    if u.len() < 3 {
        return Err(BijectionError::UnsupportedLength {
            len: u.len(),
            requirement: "this correspondence acts on lengths of at least three",
        });
    }
    require_avoids(u, Pattern3::P321)?;
    let k = u.k();
    let v = u.complement();
    let vl = v.letters();
    let mut letters = Vec::with_capacity(u.len() + 1);
    if vl[0] == k {
        letters.push(vl[1]);
        letters.extend_from_slice(vl);
    } else {
        letters.push(vl[0]);
        letters.push(k);
        letters.extend_from_slice(&vl[1..]);
    }
    let out = Word::new(letters, k).expect("reinserting the top letter keeps letters valid");
    debug_assert!(out.is_alternating(Direction::UpDown));
    Ok(out)
}
