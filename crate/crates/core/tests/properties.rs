//! Randomized invariants and exhaustively checked structural lemmas that the
//! counting formulas lean on.

use altwords::{bijections, formulas};
use altwords::{
    brute_count, compute_count, contains_pattern_naive, generate, CountMethod, Direction, Pattern3,
    Word,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_word() -> impl Strategy<Value = Word> {
    (1u32..=8).prop_flat_map(|k| {
        proptest::collection::vec(1..=k, 0..=12)
            .prop_map(move |letters| Word::new(letters, k).expect("letters drawn in range"))
    })
}

fn arb_wide_word() -> impl Strategy<Value = Word> {
    (10u32..=40).prop_flat_map(|k| {
        proptest::collection::vec(1..=k, 0..=10)
            .prop_map(move |letters| Word::new(letters, k).expect("letters drawn in range"))
    })
}

fn arb_pattern() -> impl Strategy<Value = Pattern3> {
    proptest::sample::select(Pattern3::ALL.to_vec())
}

fn arb_direction() -> impl Strategy<Value = Direction> {
    prop_oneof![Just(Direction::UpDown), Just(Direction::DownUp)]
}

proptest! {
    #[test]
    fn complement_is_an_involution_and_mirrors_alternation(w in arb_word()) {
        let c = w.complement();
        prop_assert_eq!(c.complement(), w.clone());
        for dir in [Direction::UpDown, Direction::DownUp] {
            prop_assert_eq!(c.is_alternating(dir), w.is_alternating(dir.flipped()));
        }
    }

    #[test]
    fn reversal_is_an_involution_and_respects_parity(w in arb_word()) {
        let r = w.reversed();
        prop_assert_eq!(r.reversed(), w.clone());
        // Odd length keeps the direction, even length (>= 2) trades it.
        for dir in [Direction::UpDown, Direction::DownUp] {
            let expected = if w.len() % 2 == 1 {
                w.is_alternating(dir)
            } else {
                w.is_alternating(dir.flipped())
            };
            prop_assert_eq!(r.is_alternating(dir), expected);
        }
        prop_assert_eq!(
            w.complement().reversed(),
            w.reversed().complement()
        );
    }

    #[test]
    fn linear_scans_match_the_cubic_oracle(w in arb_word()) {
        for p in Pattern3::ALL {
            prop_assert_eq!(w.contains_pattern(p), contains_pattern_naive(&w, p));
        }
    }

    #[test]
    fn pattern_containment_respects_the_symmetries(w in arb_word(), p in arb_pattern()) {
        prop_assert_eq!(
            w.complement().contains_pattern(p.complement()),
            w.contains_pattern(p)
        );
        prop_assert_eq!(
            w.reversed().contains_pattern(p.reverse()),
            w.contains_pattern(p)
        );
    }

    #[test]
    fn rendering_round_trips(w in arb_word()) {
        // Alphabets up to nine letters render as digit strings.
        let text = w.to_display_string();
        prop_assert_eq!(text.clone(), w.to_string());
        prop_assert_eq!(Word::parse(&text, w.k()).unwrap(), w);
    }

    #[test]
    fn rendering_round_trips_on_wide_alphabets(w in arb_wide_word()) {
        // Wider alphabets switch to comma-separated letters.
        let text = w.to_display_string();
        if !w.is_empty() {
            prop_assert!(w.letters().len() < 2 || text.contains(','));
        }
        prop_assert_eq!(Word::parse(&text, w.k()).unwrap(), w);
    }

    #[test]
    fn counting_methods_agree_on_random_cells(
        k in 1u32..=5,
        len in 0usize..=7,
        dir in arb_direction(),
        avoid in proptest::option::of(arb_pattern()),
    ) {
        let oracle = brute_count(k, len, dir, avoid);
        for method in CountMethod::ALL {
            if method.supports(avoid) && method.defined_at(k, len) {
                prop_assert_eq!(
                    compute_count(k, len, dir, avoid, method),
                    oracle.clone(),
                    "method {} at k={} len={}", method, k, len
                );
            }
        }
    }

    #[test]
    fn binomials_are_symmetric_and_pascal(n in 0i64..=40, r in 0i64..=40) {
        let r = r.min(n);
        prop_assert_eq!(formulas::binomial(n, r), formulas::binomial(n, n - r));
        prop_assert_eq!(
            formulas::binomial(n, r) + formulas::binomial(n, r + 1),
            formulas::binomial(n + 1, r + 1)
        );
    }

    #[test]
    fn fibonacci_satisfies_its_recurrence(n in 1u64..=60) {
        prop_assert_eq!(
            formulas::fibonacci(n) + formulas::fibonacci(n + 1),
            formulas::fibonacci(n + 2)
        );
    }
}

/// An even-length up-down word avoids 123 exactly when both the valley
/// letters and the peak letters read weakly decreasing left to right. (The
/// last valley of an odd-length word escapes this characterization.)
#[test]
fn even_123_avoidance_is_double_monotonicity() {
    for k in 1..=5u32 {
        for len in (0..=8usize).step_by(2) {
            for w in generate(k, len, Direction::UpDown) {
                let valleys: Vec<u32> = w.letters().iter().step_by(2).copied().collect();
                let peaks: Vec<u32> = w.letters().iter().skip(1).step_by(2).copied().collect();
                let monotone = valleys.windows(2).all(|p| p[0] >= p[1])
                    && peaks.windows(2).all(|p| p[0] >= p[1]);
                assert_eq!(
                    !w.contains_pattern(Pattern3::P123),
                    monotone,
                    "characterization fails on {w}"
                );
            }
        }
    }
}

/// Every cut place of an up-down word sits at an even offset: an odd cut
/// would split an ascent, putting a larger letter into the suffix.
#[test]
fn cut_places_sit_at_even_offsets() {
    for k in 1..=4u32 {
        for len in 0..=8usize {
            for w in generate(k, len, Direction::UpDown) {
                for p in bijections::cut_places(&w) {
                    assert!(p % 2 == 0, "odd cut {p} in {w}");
                }
            }
        }
    }
}

/// The even rewiring and its odd seam extension both keep the first letter —
/// the seam extension by construction, the rewiring because every
/// irreducible block starts with its own first letter's weave fixed point.
#[test]
fn rewiring_and_seam_keep_the_first_letter() {
    for k in 2..=4u32 {
        for len in (2..=8usize).step_by(2) {
            for w in
                generate(k, len, Direction::UpDown).filter(|w| !w.contains_pattern(Pattern3::P132))
            {
                let v = bijections::phi_132_to_123(&w).unwrap();
                assert_eq!(v.letters()[0], w.letters()[0], "first letter of {w}");
            }
        }
        for len in (1..=7usize).step_by(2) {
            for w in
                generate(k, len, Direction::DownUp).filter(|w| !w.contains_pattern(Pattern3::P132))
            {
                let v = bijections::psi_odd(&w).unwrap();
                assert_eq!(v.letters()[0], w.letters()[0], "first letter of {w}");
            }
        }
    }
}

/// In an up-down word of length at least 2 the top letter of the alphabet
/// can only stand at even positions — every odd position is a valley with a
/// strictly larger neighbor.
#[test]
fn the_top_letter_occupies_even_positions() {
    for k in 2..=5u32 {
        for len in 2..=9usize {
            for w in generate(k, len, Direction::UpDown) {
                for (idx, &letter) in w.letters().iter().enumerate() {
                    if letter == k {
                        assert!(
                            idx % 2 == 1,
                            "top letter at odd position {} in {w}",
                            idx + 1
                        );
                    }
                }
            }
        }
    }
}

/// A 132-avoiding up-down word of even length with next-to-last letter `j`
/// extends to an odd 132-avoiding word in exactly `j` ways: appending any of
/// `1..=j` works, anything larger completes an occurrence or breaks the
/// descent. This is the bijective core of the odd-length summation.
#[test]
fn valid_extensions_form_an_initial_segment() {
    for k in 2..=4u32 {
        for i in 1..=3usize {
            for w in generate(k, 2 * i, Direction::UpDown)
                .filter(|w| !w.contains_pattern(Pattern3::P132))
            {
                let j = w.letters()[2 * i - 2];
                let mut extensions = Vec::new();
                for x in 1..=k {
                    let mut letters = w.letters().to_vec();
                    letters.push(x);
                    let longer = Word::new(letters, k).unwrap();
                    if longer.is_alternating(Direction::UpDown)
                        && !longer.contains_pattern(Pattern3::P132)
                    {
                        extensions.push(x);
                    }
                }
                let expected: Vec<u32> = (1..=j).collect();
                assert_eq!(extensions, expected, "extensions of {w}");
            }
        }
    }
}

/// Adding a letter to the alphabet never loses words, restricted or not.
#[test]
fn counts_never_shrink_with_more_letters() {
    for k in 1..=5u32 {
        for len in 0..=8usize {
            assert!(
                formulas::count_alternating_rec(k + 1, len)
                    >= formulas::count_alternating_rec(k, len)
            );
            for p in Pattern3::ALL {
                for dir in [Direction::UpDown, Direction::DownUp] {
                    assert!(
                        formulas::count_avoiding(k + 1, len, p, dir)
                            >= formulas::count_avoiding(k, len, p, dir),
                        "k={k} len={len} pattern={p} {dir}"
                    );
                }
            }
        }
    }
}

/// The two-letter alphabet pins the boundary behavior: one alternating word
/// of every length past 1, none of which can contain any pattern.
#[test]
fn two_letter_boundary_rows() {
    for len in 2..=10usize {
        assert_eq!(formulas::count_alternating_rec(2, len), BigUint::from(1u32));
        for p in Pattern3::ALL {
            assert_eq!(
                formulas::count_avoiding(2, len, p, Direction::UpDown),
                BigUint::from(1u32),
                "len={len} pattern={p}"
            );
        }
    }
    assert_eq!(
        brute_count(1, 2, Direction::UpDown, None),
        BigUint::from(0u32)
    );
    assert_eq!(
        brute_count(1, 1, Direction::UpDown, None),
        BigUint::from(1u32)
    );
}
