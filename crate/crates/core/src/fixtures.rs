//! Reference data bundled with the crate.
//!
//! `TABLE1_CSV` is the grid of alternating-word counts for alphabets of two
//! through seven letters and lengths zero through ten. `TABLE2_CSV` lists
//! the twenty even-length up-down words over four letters that avoid 132,
//! each paired with its 123-avoiding image under the rewiring map.
//!
//! The parsers take the text as an argument so that verification code can be
//! exercised against deliberately damaged copies. They panic on malformed
//! text: the bundled fixtures are static, so a parse failure is an internal
//! fault rather than a runtime condition.

use num_bigint::BigUint;

pub const TABLE1_CSV: &str = include_str!("../../../fixtures/table1.csv");
pub const TABLE2_CSV: &str = include_str!("../../../fixtures/table2.csv");

/// Parses a count grid in the [`TABLE1_CSV`] layout (corner `k`, lengths
/// across, alphabet sizes down) into `(k, len, count)` cells, row-major.
pub fn parse_table1(csv: &str) -> Vec<(u32, usize, BigUint)> {
    let mut lines = csv.lines();
    let header = lines.next().expect("fixture has a header line");
    let mut cols = header.split(',');
    assert_eq!(
        cols.next(),
        Some("k"),
        "fixture header must start with the corner cell"
    );
    let lens: Vec<usize> = cols
        .map(|c| c.parse().expect("length column headers are numbers"))
        .collect();
    let mut cells = Vec::new();
    for line in lines {
        let mut fields = line.split(',');
        let k: u32 = fields
            .next()
            .expect("row has a leading alphabet size")
            .parse()
            .expect("alphabet size is a number");
        let values: Vec<BigUint> = fields
            .map(|f| f.parse().expect("counts are numbers"))
            .collect();
        assert_eq!(values.len(), lens.len(), "row width matches the header");
        for (&len, value) in lens.iter().zip(values) {
            cells.push((k, len, value));
        }
    }
    cells
}

/// Parses a word-pair list in the [`TABLE2_CSV`] layout (header `w132,w123`)
/// into `(avoider_of_132, avoider_of_123)` pairs in file order.
pub fn parse_table2(csv: &str) -> Vec<(String, String)> {
    let mut lines = csv.lines();
    let header = lines.next().expect("fixture has a header line");
    assert_eq!(header, "w132,w123", "unexpected pair-list header");
    lines
        .map(|line| {
            let (a, b) = line.split_once(',').expect("pair rows have two fields");
            (a.to_string(), b.to_string())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn bundled_grid_parses() {
        let cells = parse_table1(TABLE1_CSV);
        assert_eq!(cells.len(), 66);
        let lookup = |k: u32, len: usize| {
            cells
                .iter()
                .find(|&&(ck, cl, _)| ck == k && cl == len)
                .map(|(_, _, v)| v.clone())
                .unwrap()
        };
        assert_eq!(lookup(2, 0), BigUint::from(1u32));
        assert_eq!(lookup(4, 4), BigUint::from(31u32));
        assert_eq!(lookup(3, 10), BigUint::from(144u32));
        assert_eq!(lookup(7, 10), BigUint::from(1897214u32));
    }

    #[test]
    fn bundled_pairs_parse() {
        let pairs = parse_table2(TABLE2_CSV);
        assert_eq!(pairs.len(), 20);
        assert_eq!(pairs[0], ("1212".to_string(), "1212".to_string()));
        assert!(pairs.contains(&("1213".to_string(), "1312".to_string())));
        let lefts: HashSet<&str> = pairs.iter().map(|(a, _)| a.as_str()).collect();
        let rights: HashSet<&str> = pairs.iter().map(|(_, b)| b.as_str()).collect();
        assert_eq!(lefts.len(), 20, "each source word appears once");
        assert_eq!(rights.len(), 20, "each image word appears once");
    }

    #[test]
    #[should_panic(expected = "header")]
    fn damaged_header_is_an_internal_fault() {
        parse_table2("nonsense\n1212,1212\n");
    }
}
