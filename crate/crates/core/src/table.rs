//! Rectangular count tables and the method dispatch behind them.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::formulas::{count_alternating_rec, count_avoiding, count_ideals_zigzag_chain};
use crate::words::{brute_count, Direction, Pattern3};

/// How to compute a count.
///
/// * `Formula` — the pattern-specific closed forms; needs a pattern.
/// * `Recurrence` — the alphabet-peeling recurrence; unrestricted words only.
/// * `Ideal` — order-ideal counting in the fence-times-chain poset;
///   unrestricted words only, and undefined for a one-letter alphabet or
///   length-one words.
/// * `Brute` — direct enumeration; always applicable, exponentially slow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountMethod {
    Formula,
    Recurrence,
    Brute,
    Ideal,
}

impl CountMethod {
    pub const ALL: [CountMethod; 4] = [
        CountMethod::Formula,
        CountMethod::Recurrence,
        CountMethod::Brute,
        CountMethod::Ideal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CountMethod::Formula => "formula",
            CountMethod::Recurrence => "recurrence",
            CountMethod::Brute => "brute",
            CountMethod::Ideal => "ideal",
        }
    }

    /// Whether the method can count this kind of family at all: `Formula`
    /// needs a pattern, `Recurrence` and `Ideal` count unrestricted words
    /// only, `Brute` takes anything.
    pub fn supports(self, pattern: Option<Pattern3>) -> bool {
        match self {
            CountMethod::Formula => pattern.is_some(),
            CountMethod::Recurrence | CountMethod::Ideal => pattern.is_none(),
            CountMethod::Brute => true,
        }
    }

    /// Whether the method is defined at this cell (only `Ideal` carries
    /// restrictions: `k >= 2` and `len != 1`).
    pub fn defined_at(self, k: u32, len: usize) -> bool {
        match self {
            CountMethod::Ideal => k >= 2 && len != 1,
            _ => true,
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<CountMethod, String> {
        match s {
            "formula" => Ok(CountMethod::Formula),
            "recurrence" => Ok(CountMethod::Recurrence),
            "brute" => Ok(CountMethod::Brute),
            "ideal" => Ok(CountMethod::Ideal),
            other => Err(format!(
                "unknown method {other:?} (expected formula, recurrence, brute or ideal)"
            )),
        }
    }
}

/// One count, by the requested method. Panics when the method does not
/// support the family or the cell (see [`CountMethod::supports`] and
/// [`CountMethod::defined_at`]); callers present those as domain errors
/// before getting here.
///
/// Up-down and down-up words are equinumerous when no pattern is forbidden
/// (complementing is a direction-swapping involution), so `Recurrence` and
/// `Ideal` ignore the direction.
pub fn compute_count(
    k: u32,
    len: usize,
    dir: Direction,
    pattern: Option<Pattern3>,
    method: CountMethod,
) -> BigUint {
    assert!(
        method.supports(pattern),
        "method {method} does not apply to this family"
    );
    assert!(
        method.defined_at(k, len),
        "method {method} is not defined at k={k}, len={len}"
    );
    match method {
        CountMethod::Formula => count_avoiding(k, len, pattern.expect("supports() checked"), dir),
        CountMethod::Recurrence => count_alternating_rec(k, len),
        CountMethod::Ideal => count_ideals_zigzag_chain(len, k - 2),
        CountMethod::Brute => brute_count(k, len, dir, pattern),
    }
}

/// A rectangle of counts, one row per alphabet size and one column per
/// length, all computed by the same method.
#[derive(Clone, Debug)]
pub struct CountTable {
    ks: Vec<u32>,
    lens: Vec<usize>,
    dir: Direction,
    pattern: Option<Pattern3>,
    method: CountMethod,
    rows: Vec<Vec<BigUint>>,
}

#[derive(Serialize)]
struct JsonEntry {
    k: u32,
    len: usize,
    value: String,
    method: &'static str,
}

#[derive(Serialize)]
struct JsonTable {
    direction: String,
    pattern: Option<String>,
    entries: Vec<JsonEntry>,
}

impl CountTable {
    /// Computes every cell of the rectangle. Panics on an empty range, a
    /// `k` range starting at zero, or a method outside its domain.
    pub fn build(
        ks: RangeInclusive<u32>,
        lens: RangeInclusive<usize>,
        dir: Direction,
        pattern: Option<Pattern3>,
        method: CountMethod,
    ) -> CountTable {
        assert!(!ks.is_empty() && !lens.is_empty(), "empty table range");
        assert!(*ks.start() >= 1, "alphabet size must be at least 1");
        let ks: Vec<u32> = ks.collect();
        let lens: Vec<usize> = lens.collect();
        let rows = ks
            .iter()
            .map(|&k| {
                lens.iter()
                    .map(|&len| compute_count(k, len, dir, pattern, method))
                    .collect()
            })
            .collect();
        CountTable {
            ks,
            lens,
            dir,
            pattern,
            method,
            rows,
        }
    }

    pub fn ks(&self) -> &[u32] {
        &self.ks
    }

    pub fn lens(&self) -> &[usize] {
        &self.lens
    }

    pub fn direction(&self) -> Direction {
        self.dir
    }

    pub fn pattern(&self) -> Option<Pattern3> {
        self.pattern
    }

    pub fn method(&self) -> CountMethod {
        self.method
    }

    /// The count at a cell; panics when the cell is outside the rectangle.
    pub fn get(&self, k: u32, len: usize) -> &BigUint {
        let row = self
            .ks
            .iter()
            .position(|&kk| kk == k)
            .unwrap_or_else(|| panic!("k={k} outside the table"));
        let col = self
            .lens
            .iter()
            .position(|&ll| ll == len)
            .unwrap_or_else(|| panic!("len={len} outside the table"));
        &self.rows[row][col]
    }

    /// CSV rendering: corner cell `k`, then one column per length and one
    /// row per alphabet size. Ends with a newline.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k");
        for len in &self.lens {
            out.push(',');
            out.push_str(&len.to_string());
        }
        out.push('\n');
        for (row, k) in self.rows.iter().zip(&self.ks) {
            out.push_str(&k.to_string());
            for value in row {
                out.push(',');
                out.push_str(&value.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Pretty-printed JSON with one record per cell; values are decimal
    /// strings so arbitrarily large counts survive any JSON reader.
    pub fn to_json(&self) -> String {
        let entries = self
            .ks
            .iter()
            .zip(&self.rows)
            .flat_map(|(&k, row)| {
                self.lens
                    .iter()
                    .zip(row)
                    .map(move |(&len, value)| JsonEntry {
                        k,
                        len,
                        value: value.to_string(),
                        method: self.method.as_str(),
                    })
            })
            .collect();
        let table = JsonTable {
            direction: self.dir.to_string(),
            pattern: self.pattern.map(|p| p.to_string()),
            entries,
        };
        serde_json::to_string_pretty(&table).expect("plain data serializes")
    }
}
