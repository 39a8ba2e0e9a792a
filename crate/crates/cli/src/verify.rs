//! The `verify` subcommand: re-derives the bundled reference data and
//! cross-checks every computation route against independent ones.
//!
//! Checks are small named units so a failure points at one cell or one
//! property. They run on a worker pool (capped by the `ALTWORDS_THREADS`
//! environment variable) and report in a fixed order regardless of
//! scheduling.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Mutex;

use altwords::bijections::ideal_to_word;
use altwords::bijections::{
    map_123_to_321, map_312_to_123_odd, map_321_to_123, phi_132_to_123, phi_inverse, psi_odd,
    word_to_ideal,
};
use altwords::fixtures::{parse_table1, parse_table2, TABLE1_CSV, TABLE2_CSV};
use altwords::formulas::{
    count_123_updown, count_123_updown_ending, count_123_updown_ending_rec, count_132_secondlast,
    count_132_updown, count_312_updown, count_312_updown_even_sum, count_alternating_rec,
    count_avoiding, count_ideals_zigzag_chain, explicit_132_odd_polynomial, fibonacci,
    gf_even_series, gf_full_series, gf_odd_identity_check,
};
use altwords::posets::count_ideals;
use altwords::{brute_count, generate, CountMethod, Direction, Pattern3, Word};
use num_bigint::BigUint;

use crate::args::Suite;

/// The reference text the checks compare against. Injectable so the
/// verification machinery itself can be tested against damaged data.
#[derive(Clone, Copy, Debug)]
pub struct Fixtures<'a> {
    pub table1_csv: &'a str,
    pub table2_csv: &'a str,
}

impl Default for Fixtures<'static> {
    fn default() -> Self {
        Fixtures {
            table1_csv: TABLE1_CSV,
            table2_csv: TABLE2_CSV,
        }
    }
}

/// One named verification unit.
pub struct Check {
    id: String,
    run: Box<dyn FnOnce() -> Result<(), String> + Send>,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        run: impl FnOnce() -> Result<(), String> + Send + 'static,
    ) -> Check {
        Check {
            id: id.into(),
            run: Box::new(run),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }
}

/// Outcome of one check; `error` is `None` on success.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub error: Option<String>,
}

/// All outcomes of a verification run, ordered by check id.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    results: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn results(&self) -> &[CheckResult] {
        &self.results
    }

    pub fn total(&self) -> usize {
        self.results.len()
    }

    pub fn failed(&self) -> usize {
        self.results.iter().filter(|r| r.error.is_some()).count()
    }

    pub fn passed(&self) -> usize {
        self.total() - self.failed()
    }

    /// Process exit status the report maps to: 0 clean, 4 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failed() == 0 {
            0
        } else {
            4
        }
    }

    /// One line per check plus a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            match &r.error {
                None => writeln!(out, "ok   {}", r.id).expect("writing to a string"),
                Some(e) => writeln!(out, "FAIL {}: {}", r.id, e).expect("writing to a string"),
            }
        }
        writeln!(
            out,
            "{} passed, {} failed, {} total",
            self.passed(),
            self.failed(),
            self.total()
        )
        .expect("writing to a string");
        out
    }
}

/// Worker count: all available cores, capped by `ALTWORDS_THREADS` when that
/// parses to a positive number.
pub fn thread_cap() -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    effective_thread_count(std::env::var("ALTWORDS_THREADS").ok().as_deref(), available)
}

pub fn effective_thread_count(env: Option<&str>, available: usize) -> usize {
    let available = available.max(1);
    match env.and_then(|v| v.trim().parse::<usize>().ok()) {
        Some(n) if n >= 1 => n.min(available),
        _ => available,
    }
}

/// Runs every check on `threads` workers and collects the outcomes sorted
/// by id.
pub fn run_checks(checks: Vec<Check>, threads: usize) -> VerifyReport {
    let queue = Mutex::new(checks);
    let results = Mutex::new(Vec::new());
    let threads = threads.max(1);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let check = queue.lock().expect("queue lock").pop();
                let Some(check) = check else { break };
                let error = (check.run)().err();
                results.lock().expect("results lock").push(CheckResult {
                    id: check.id,
                    error,
                });
            });
        }
    });
    let mut results = results.into_inner().expect("all workers joined");
    results.sort_by(|a, b| a.id.cmp(&b.id));
    VerifyReport { results }
}

/// The checks belonging to a suite.
pub fn suite_checks(suite: Suite, fixtures: &Fixtures) -> Vec<Check> {
    match suite {
        Suite::Table1 => table1_checks(fixtures),
        Suite::Table2 => table2_checks(fixtures),
        Suite::Formulas => formulas_checks(),
        Suite::Bijections => bijections_checks(),
        Suite::All => {
            let mut all = table1_checks(fixtures);
            all.extend(table2_checks(fixtures));
            all.extend(formulas_checks());
            all.extend(bijections_checks());
            all
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_count(label: &str, got: BigUint, want: &BigUint) -> Result<(), String> {
    ensure(got == *want, || format!("{label}: got {got}, want {want}"))
}

// Every cell of the bundled count grid, re-derived three independent ways.
fn table1_checks(fixtures: &Fixtures) -> Vec<Check> {
    let cells = parse_table1(fixtures.table1_csv);
    let mut checks = Vec::with_capacity(cells.len() * 3);
    for (k, len, want) in cells {
        let w = want.clone();
        checks.push(Check::new(
            format!("table1/k{k}/len{len:02}/recurrence"),
            move || expect_count("count", count_alternating_rec(k, len), &w),
        ));
        if CountMethod::Ideal.defined_at(k, len) {
            let w = want.clone();
            checks.push(Check::new(
                format!("table1/k{k}/len{len:02}/ideal"),
                move || expect_count("ideal count", count_ideals_zigzag_chain(len, k - 2), &w),
            ));
        }
        let w = want.clone();
        checks.push(Check::new(
            format!("table1/k{k}/len{len:02}/brute"),
            move || {
                expect_count(
                    "enumeration",
                    brute_count(k, len, Direction::DownUp, None),
                    &w,
                )
            },
        ));
    }
    checks
}

// The bundled word pairs: the rewiring must map each source to its listed
// image and back, and the columns must be exactly the two families.
fn table2_checks(fixtures: &Fixtures) -> Vec<Check> {
    let pairs = parse_table2(fixtures.table2_csv);
    let mut checks = Vec::with_capacity(pairs.len() + 2);
    for (idx, (src, img)) in pairs.iter().enumerate() {
        let (src, img) = (src.clone(), img.clone());
        checks.push(Check::new(
            format!("table2/pair{:02}-{src}", idx + 1),
            move || {
                let w = Word::parse(&src, 4).map_err(|e| e.to_string())?;
                let v = Word::parse(&img, 4).map_err(|e| e.to_string())?;
                let forward = phi_132_to_123(&w).map_err(|e| e.to_string())?;
                ensure(forward == v, || {
                    format!("maps to {forward}, fixture says {v}")
                })?;
                let backward = phi_inverse(&v).map_err(|e| e.to_string())?;
                ensure(backward == w, || {
                    format!("inverse gives {backward}, fixture says {w}")
                })
            },
        ));
    }
    let sources: BTreeSet<String> = pairs.iter().map(|(a, _)| a.clone()).collect();
    checks.push(Check::new("table2/sources-complete", move || {
        let expected: BTreeSet<String> = generate(4, 4, Direction::UpDown)
            .filter(|w| !w.contains_pattern(Pattern3::P132))
            .map(|w| w.to_display_string())
            .collect();
        ensure(sources == expected, || {
            format!(
                "fixture lists {} source words, enumeration finds {}",
                sources.len(),
                expected.len()
            )
        })
    }));
    let images: BTreeSet<String> = pairs.iter().map(|(_, b)| b.clone()).collect();
    checks.push(Check::new("table2/images-complete", move || {
        let expected: BTreeSet<String> = generate(4, 4, Direction::UpDown)
            .filter(|w| !w.contains_pattern(Pattern3::P123))
            .map(|w| w.to_display_string())
            .collect();
        ensure(images == expected, || {
            format!(
                "fixture lists {} image words, enumeration finds {}",
                images.len(),
                expected.len()
            )
        })
    }));
    checks
}

fn formulas_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 1..=7u32 {
        checks.push(Check::new(
            format!("formulas/unrestricted/k{k}"),
            move || {
                for len in 0..=9usize {
                    let rec = count_alternating_rec(k, len);
                    for dir in [Direction::UpDown, Direction::DownUp] {
                        expect_count(
                            &format!("len {len} {dir}"),
                            brute_count(k, len, dir, None),
                            &rec,
                        )?;
                    }
                }
                Ok(())
            },
        ));
    }
    for pattern in Pattern3::ALL {
        for k in 1..=6u32 {
            checks.push(Check::new(
                format!("formulas/avoid-{pattern}/k{k}"),
                move || {
                    for len in 0..=8usize {
                        for dir in [Direction::UpDown, Direction::DownUp] {
                            expect_count(
                                &format!("len {len} {dir}"),
                                count_avoiding(k, len, pattern, dir),
                                &brute_count(k, len, dir, Some(pattern)),
                            )?;
                        }
                    }
                    Ok(())
                },
            ));
        }
    }
    checks.push(Check::new("formulas/fibonacci-row", || {
        for len in 2..=20usize {
            expect_count(
                &format!("len {len}"),
                count_alternating_rec(3, len),
                &fibonacci(len as u64 + 2),
            )?;
        }
        for m in 0..=20usize {
            expect_count(
                &format!("ideals on {m} positions"),
                count_ideals_zigzag_chain(m, 1),
                &fibonacci(m as u64 + 2),
            )?;
        }
        Ok(())
    }));
    for k in 2..=6u32 {
        checks.push(Check::new(
            format!("formulas/ending-letter/k{k}"),
            move || {
                for i in 1..=4usize {
                    let mut total = BigUint::from(0u32);
                    for j in 2..=k {
                        let closed = count_123_updown_ending(k, i, j);
                        expect_count(
                            &format!("recurrence route at i={i} j={j}"),
                            count_123_updown_ending_rec(k, i, j),
                            &closed,
                        )?;
                        total += closed;
                    }
                    expect_count(
                        &format!("sum over last letters at i={i}"),
                        total,
                        &count_123_updown(k, 2 * i),
                    )?;
                }
                Ok(())
            },
        ));
    }
    for k in 2..=6u32 {
        checks.push(Check::new(format!("formulas/secondlast/k{k}"), move || {
            for i in 1..=4usize {
                let mut total = BigUint::from(0u32);
                for j in 1..k {
                    let b = count_132_secondlast(k, i, j);
                    expect_count(
                        &format!("shift property at i={i} j={j}"),
                        count_132_secondlast(k - j + 1, i, 1),
                        &b,
                    )?;
                    total += b;
                }
                expect_count(
                    &format!("sum over second-to-last letters at i={i}"),
                    total,
                    &count_132_updown(k, 2 * i),
                )?;
            }
            Ok(())
        }));
    }
    checks.push(Check::new("formulas/odd-polynomials", || {
        for k in 3..=6u32 {
            for i in 1..=6u64 {
                let poly = explicit_132_odd_polynomial(k, i)
                    .ok_or_else(|| format!("polynomial missing for k={k}"))?;
                expect_count(
                    &format!("k={k} i={i}"),
                    poly,
                    &count_132_updown(k, 2 * i as usize + 1),
                )?;
            }
        }
        Ok(())
    }));
    for k in 1..=6u32 {
        checks.push(Check::new(
            format!("formulas/even-sum-route/k{k}"),
            move || {
                for i in 1..=5usize {
                    expect_count(
                        &format!("i={i}"),
                        count_312_updown_even_sum(k, i),
                        &count_312_updown(k, 2 * i),
                    )?;
                }
                Ok(())
            },
        ));
    }
    for k in 2..=6u32 {
        checks.push(Check::new(
            format!("formulas/even-series/k{k}"),
            move || {
                let series = gf_even_series(k, 9);
                for i in 0..9usize {
                    let coeff = series.coeff(i);
                    let want = count_123_updown(k, 2 * i);
                    ensure(coeff == want.clone().into(), || {
                        format!("coefficient {i}: got {coeff}, want {want}")
                    })?;
                }
                Ok(())
            },
        ));
    }
    for k in 3..=6u32 {
        checks.push(Check::new(
            format!("formulas/full-series/k{k}"),
            move || {
                let series = gf_full_series(k, 12);
                for len in 0..12usize {
                    let coeff = series.coeff(len);
                    let want = count_123_updown(k, len);
                    ensure(coeff == want.clone().into(), || {
                        format!("coefficient {len}: got {coeff}, want {want}")
                    })?;
                }
                Ok(())
            },
        ));
    }
    for k in 2..=7u32 {
        checks.push(Check::new(
            format!("formulas/odd-identity/k{k}"),
            move || {
                for i in 2..=8usize {
                    ensure(gf_odd_identity_check(k, i), || {
                        format!("difference identity fails at i={i}")
                    })?;
                }
                Ok(())
            },
        ));
    }
    checks
}

fn bijections_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 2..=5u32 {
        checks.push(Check::new(
            format!("bijections/word-ideal/k{k}"),
            move || {
                for len in [0usize, 2, 3, 4, 5, 6, 7] {
                    let mut profiles = BTreeSet::new();
                    for w in generate(k, len, Direction::DownUp) {
                        let profile = word_to_ideal(&w).map_err(|e| e.to_string())?;
                        let back = ideal_to_word(&profile).map_err(|e| e.to_string())?;
                        ensure(back == w, || format!("{w} -> {profile} -> {back}"))?;
                        profiles.insert(profile.to_string());
                    }
                    let ideals = count_ideals(len, k - 2);
                    expect_count(
                        &format!("distinct profiles at len {len}"),
                        BigUint::from(profiles.len()),
                        &ideals,
                    )?;
                }
                Ok(())
            },
        ));
    }
    for k in 2..=4u32 {
        checks.push(Check::new(format!("bijections/rewiring/k{k}"), move || {
            for len in [0usize, 2, 4, 6] {
                let mut images = BTreeSet::new();
                for w in generate(k, len, Direction::UpDown) {
                    if w.contains_pattern(Pattern3::P132) {
                        continue;
                    }
                    let img = phi_132_to_123(&w).map_err(|e| e.to_string())?;
                    ensure(!img.contains_pattern(Pattern3::P123), || {
                        format!("{w} maps to {img}, which contains 123")
                    })?;
                    let back = phi_inverse(&img).map_err(|e| e.to_string())?;
                    ensure(back == w, || format!("{w} -> {img} -> {back}"))?;
                    images.insert(img.to_display_string());
                }
                let targets = generate(k, len, Direction::UpDown)
                    .filter(|v| !v.contains_pattern(Pattern3::P123))
                    .count();
                ensure(images.len() == targets, || {
                    format!("len {len}: {} images for {} targets", images.len(), targets)
                })?;
            }
            Ok(())
        }));
    }
    for k in 2..=4u32 {
        checks.push(Check::new(format!("bijections/seam/k{k}"), move || {
            for len in [1usize, 3, 5, 7] {
                let mut seam_images = BTreeSet::new();
                let mut odd_images = BTreeSet::new();
                let mut domain = 0usize;
                for w in generate(k, len, Direction::DownUp) {
                    if w.contains_pattern(Pattern3::P132) {
                        continue;
                    }
                    domain += 1;
                    let img = psi_odd(&w).map_err(|e| e.to_string())?;
                    ensure(img.letters()[0] == w.letters()[0], || {
                        format!("seam moved the first letter of {w}")
                    })?;
                    seam_images.insert(img.to_display_string());
                }
                ensure(seam_images.len() == domain, || {
                    format!("seam map collides at len {len}")
                })?;
                for w in generate(k, len, Direction::UpDown) {
                    if w.contains_pattern(Pattern3::P312) {
                        continue;
                    }
                    let img = map_312_to_123_odd(&w).map_err(|e| e.to_string())?;
                    ensure(!img.contains_pattern(Pattern3::P123), || {
                        format!("{w} maps to {img}, which contains 123")
                    })?;
                    odd_images.insert(img.to_display_string());
                }
                let targets = generate(k, len, Direction::UpDown)
                    .filter(|v| !v.contains_pattern(Pattern3::P123))
                    .count();
                ensure(odd_images.len() == targets, || {
                    format!(
                        "len {len}: {} images for {} targets",
                        odd_images.len(),
                        targets
                    )
                })?;
            }
            Ok(())
        }));
    }
    for k in 2..=5u32 {
        checks.push(Check::new(
            format!("bijections/top-letter/k{k}"),
            move || {
                for len in 4..=7usize {
                    let mut images = BTreeSet::new();
                    for w in generate(k, len, Direction::UpDown) {
                        if w.contains_pattern(Pattern3::P123) || !w.letters().contains(&k) {
                            continue;
                        }
                        let img = map_123_to_321(&w).map_err(|e| e.to_string())?;
                        ensure(!img.contains_pattern(Pattern3::P321), || {
                            format!("{w} maps to {img}, which contains 321")
                        })?;
                        let back = map_321_to_123(&img).map_err(|e| e.to_string())?;
                        ensure(back == w, || format!("{w} -> {img} -> {back}"))?;
                        images.insert(img.to_display_string());
                    }
                    let targets = generate(k, len - 1, Direction::UpDown)
                        .filter(|v| !v.contains_pattern(Pattern3::P321))
                        .count();
                    ensure(images.len() == targets, || {
                        format!("len {len}: {} images for {} targets", images.len(), targets)
                    })?;
                }
                Ok(())
            },
        ));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_resolution() {
        assert_eq!(effective_thread_count(None, 8), 8);
        assert_eq!(effective_thread_count(Some("3"), 8), 3);
        assert_eq!(effective_thread_count(Some("16"), 8), 8);
        assert_eq!(effective_thread_count(Some("0"), 8), 8);
        assert_eq!(effective_thread_count(Some("many"), 8), 8);
        assert_eq!(effective_thread_count(Some(" 2 "), 8), 2);
        assert_eq!(effective_thread_count(None, 0), 1);
    }

    #[test]
    fn reports_render_sorted_and_summarized() {
        let checks = vec![
            Check::new("b/second", || Err("broken".to_string())),
            Check::new("a/first", || Ok(())),
        ];
        let report = run_checks(checks, 4);
        assert_eq!(report.total(), 2);
        assert_eq!(report.failed(), 1);
        assert_eq!(report.exit_code(), 4);
        let rendered = report.render();
        let lines: Vec<&str> = rendered.lines().collect();
        assert_eq!(lines[0], "ok   a/first");
        assert_eq!(lines[1], "FAIL b/second: broken");
        assert_eq!(lines[2], "1 passed, 1 failed, 2 total");
    }

    #[test]
    fn bundled_fixtures_pass_their_suites() {
        let fixtures = Fixtures::default();
        for suite in [Suite::Table1, Suite::Table2] {
            let report = run_checks(suite_checks(suite, &fixtures), thread_cap());
            assert_eq!(report.failed(), 0, "{:?}: {}", suite, report.render());
        }
    }

    #[test]
    fn damaged_fixture_values_are_caught() {
        let damaged_table1 = TABLE1_CSV.replacen("31", "32", 1);
        let fixtures = Fixtures {
            table1_csv: &damaged_table1,
            table2_csv: TABLE2_CSV,
        };
        let report = run_checks(suite_checks(Suite::Table1, &fixtures), 2);
        assert!(report.failed() >= 1);
        assert_eq!(report.exit_code(), 4);
        assert!(report.render().contains("FAIL"));

        let damaged_table2 = TABLE2_CSV.replacen("1213,1312", "1213,2413", 1);
        let fixtures = Fixtures {
            table1_csv: TABLE1_CSV,
            table2_csv: &damaged_table2,
        };
        let report = run_checks(suite_checks(Suite::Table2, &fixtures), 2);
        // the altered pair fails, and 2413 now appears twice in the image
        // column, so completeness breaks too
        assert!(report.failed() >= 2);
        assert_eq!(report.exit_code(), 4);
    }
}
