//! Acceptance suite: one test per shipping criterion, each printing a
//! pass/fail line (visible with `--nocapture`). These tests exercise the
//! public API and the installed binary only; oracles needed for
//! cross-checking are reimplemented here from scratch so nothing is compared
//! against itself.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::Command;
use std::time::Instant;

use num_integer::Integer as _;
use num_traits::Zero;

use gencat::exactmath::{binomial, c_gen, q_catalan_normalized, GridShape};
use gencat::necklaces::{
    canonical_rotation, enumerate_marked, enumerate_necklaces, enumerate_necklaces_fast,
};
use gencat::paths::{enumerate_dyck, BinaryWord, Letter};
use gencat::verify::{check_lemma, check_orbits, check_theorem1, check_theorem2, check_theorem3};
use gencat::Int;

fn criterion<F>(number: u32, summary: &str, body: F)
where
    F: FnOnce() + UnwindSafe,
{
    match catch_unwind(body) {
        Ok(()) => println!("criterion {number}: PASS  {summary}"),
        Err(panic) => {
            println!("criterion {number}: FAIL  {summary}");
            resume_unwind(panic);
        }
    }
}

fn shape(m: u64, n: u64) -> GridShape {
    GridShape::new(m, n).unwrap()
}

fn shapes_with_sum_up_to(max_sum: u64) -> Vec<GridShape> {
    let mut out = Vec::new();
    for total in 2..=max_sum {
        for m in 1..total {
            out.push(shape(m, total - m));
        }
    }
    out
}

#[test]
fn criterion_01_figure_reproduction() {
    criterion(1, "(3,3) counts and weight multisets, under one second", || {
        let start = Instant::now();
        let s = shape(3, 3);
        assert_eq!(c_gen::<Int>(s).unwrap(), Int::from(10));

        let necklaces: Vec<_> = enumerate_necklaces(s).collect();
        let canonical: Vec<String> = necklaces
            .iter()
            .map(|x| x.canonical().to_string())
            .collect();
        assert_eq!(canonical, ["UUURRR", "UURURR", "UURRUR", "URURUR"]);
        let mut necklace_weights: Vec<String> = necklaces
            .iter()
            .map(|x| x.weight().unwrap().to_string())
            .collect();
        necklace_weights.sort();
        assert_eq!(necklace_weights, ["1", "3", "3", "3"]);

        let paths: Vec<_> = enumerate_dyck(s).collect();
        assert_eq!(paths.len(), 5);
        let mut path_weights: Vec<String> = paths
            .iter()
            .map(|p| p.anchored_weight().to_string())
            .collect();
        path_weights.sort();
        assert_eq!(path_weights, ["1", "3", "3", "3/2", "3/2"]);

        let marks_per_necklace: Vec<(String, usize)> = necklaces
            .iter()
            .map(|x| {
                (
                    x.canonical().to_string(),
                    x.distinguishable_blocks().len(),
                )
            })
            .collect();
        for (word, marks) in &marks_per_necklace {
            let expected = if word == "URURUR" { 1 } else { 3 };
            assert_eq!(*marks, expected, "{word}");
        }
        assert_eq!(enumerate_marked(s).count(), 10);

        let elapsed = start.elapsed();
        assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    });
}

#[test]
fn criterion_02_weighted_path_sums() {
    criterion(2, "sum of anchored path weights = c_gen, m+n <= 18", || {
        for s in shapes_with_sum_up_to(18) {
            let report = check_theorem1(s).unwrap();
            assert!(report.pass, "{}", report.to_json(false));
        }
    });
}

#[test]
fn criterion_03_weighted_necklace_sums() {
    criterion(3, "sum of necklace weights = c_gen, m+n <= 18", || {
        for s in shapes_with_sum_up_to(18) {
            let report = check_theorem2(s).unwrap();
            assert!(report.pass, "{}", report.to_json(false));
        }
    });
}

#[test]
fn criterion_04_marked_necklace_counts() {
    criterion(
        4,
        "marked count = c_gen and marks per necklace = weight, m+n <= 18",
        || {
            for s in shapes_with_sum_up_to(18) {
                let report = check_theorem3(s).unwrap();
                assert!(report.pass, "{}", report.to_json(false));
                assert_eq!(report.counterexample, None);
            }
        },
    );
}

#[test]
fn criterion_05_rotation_shift_counts() {
    criterion(5, "Dyck shifts of each Dyck word = anchor count, m+n <= 14", || {
        for s in shapes_with_sum_up_to(14) {
            let report = check_lemma(s).unwrap();
            assert!(report.pass, "{}", report.to_json(false));
            assert_eq!(report.counterexample, None);
        }
    });
}

#[test]
fn criterion_06_orbit_identity() {
    criterion(
        6,
        "orbit sizes sum to binomial(m+n, n) by explicit rotation, m+n <= 16",
        || {
            for s in shapes_with_sum_up_to(16) {
                let report = check_orbits(s).unwrap();
                assert!(report.pass, "{}", report.to_json(false));
                // The per-necklace comparison against (m+n)/r is also done
                // explicitly here rather than trusting the check's bookkeeping.
                for necklace in enumerate_necklaces(s) {
                    let word = necklace.canonical();
                    let mut rotations: Vec<BinaryWord> = (0..word.len())
                        .map(|d| word.rotate(d).unwrap())
                        .collect();
                    rotations.sort();
                    rotations.dedup();
                    assert_eq!(
                        rotations.len() as u64,
                        s.total() / necklace.symmetry_order(),
                        "{word}"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_07_coprime_path_counts() {
    criterion(
        7,
        "coprime shapes have binomial(m+n, n)/(m+n) Dyck paths, m+n <= 16",
        || {
            for s in shapes_with_sum_up_to(16) {
                if s.gcd() != 1 {
                    continue;
                }
                let words = binomial::<Int>(s.total(), s.n()).unwrap();
                let (expected, rem) = words.div_rem(&Int::from(s.total()));
                assert!(rem.is_zero(), "{s}");
                let observed = enumerate_dyck(s).count() as u64;
                assert_eq!(Int::from(observed), expected, "{s}");
            }
        },
    );
}

mod q_oracle {
    //! Independent polynomial arithmetic: Pascal-style recursion for the
    //! Gaussian binomial and constant-term-first synthetic division, sharing
    //! no code with the library's multiply-then-divide construction.

    use gencat::Int;
    use num_traits::Zero;

    pub fn poly_add(a: &[Int], b: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::from(0); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += c;
        }
        out
    }

    pub fn poly_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::from(0); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// `1 + q + ... + q^(k-1)`.
    pub fn q_int(k: u64) -> Vec<Int> {
        vec![Int::from(1); k as usize]
    }

    /// Gaussian binomial by the recursion
    /// `[i, j] = [i-1, j-1] + q^j [i-1, j]`.
    pub fn q_binomial(t: usize, k: usize) -> Vec<Int> {
        let one = vec![Int::from(1)];
        let mut row: Vec<Vec<Int>> = vec![one.clone()];
        for i in 1..=t {
            let mut next = Vec::with_capacity(i + 1);
            for j in 0..=i {
                if j == 0 || j == i {
                    next.push(one.clone());
                    continue;
                }
                let mut shifted = vec![Int::from(0); j];
                shifted.extend_from_slice(&row[j]);
                next.push(poly_add(&row[j - 1], &shifted));
            }
            row = next;
        }
        row[k].clone()
    }

    /// Divides starting from the constant term; returns None unless the
    /// division is exact. The divisor's constant term must be 1, which holds
    /// for every q-integer.
    pub fn divide_ascending(num: &[Int], den: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(den[0], Int::from(1));
        if num.len() < den.len() {
            return None;
        }
        let mut rem = num.to_vec();
        let quot_len = num.len() + 1 - den.len();
        let mut quot = Vec::with_capacity(quot_len);
        for i in 0..quot_len {
            let c = rem[i].clone();
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot.push(c);
        }
        rem.iter().all(Zero::is_zero).then_some(quot)
    }

    pub fn q_catalan(m: u64, n: u64, gcd: u64) -> Option<Vec<Int>> {
        let total = (m + n) as usize;
        let numerator = poly_mul(&q_int(gcd), &q_binomial(total, n as usize));
        divide_ascending(&numerator, &q_int(m + n))
    }
}

#[test]
fn criterion_08_q_analogue() {
    criterion(
        8,
        "q-analogue divides exactly and matches the division oracle",
        || {
            for s in shapes_with_sum_up_to(16) {
                let poly = q_catalan_normalized::<Int>(s).unwrap();
                assert_eq!(poly.eval_one(), c_gen::<Int>(s).unwrap(), "{s}");
            }
            for s in shapes_with_sum_up_to(12) {
                let poly = q_catalan_normalized::<Int>(s).unwrap();
                let oracle = q_oracle::q_catalan(s.m(), s.n(), s.gcd())
                    .unwrap_or_else(|| panic!("oracle division not exact for {s}"));
                assert_eq!(poly.coeffs(), &oracle[..], "{s}");
            }
            let two_two = q_catalan_normalized::<Int>(shape(2, 2)).unwrap();
            let ones = [Int::from(1), Int::from(1), Int::from(1)];
            assert_eq!(two_two.coeffs(), &ones);
            assert_eq!(q_oracle::q_catalan(2, 2, 2).unwrap(), &ones);
        },
    );
}

#[test]
fn criterion_09_enumeration_oracles() {
    criterion(
        9,
        "Booth = naive minimum on all words to length 14; generator = filter to m+n <= 14",
        || {
            for len in 1..=14usize {
                for mask in 0u32..(1 << len) {
                    let letters: Vec<Letter> = (0..len)
                        .map(|i| {
                            if mask >> i & 1 == 0 {
                                Letter::U
                            } else {
                                Letter::R
                            }
                        })
                        .collect();
                    let word = BinaryWord::new(letters);
                    let naive = (0..word.len())
                        .map(|d| word.rotate(d).unwrap())
                        .min()
                        .unwrap();
                    assert_eq!(canonical_rotation(&word).unwrap(), naive, "{word}");
                }
            }
            for s in shapes_with_sum_up_to(14) {
                let baseline: Vec<_> = enumerate_necklaces(s).collect();
                assert_eq!(enumerate_necklaces_fast(s), baseline, "{s}");
            }
        },
    );
}

fn run_binary(args: &[&str]) -> (Vec<u8>, bool) {
    let output = Command::new(env!("CARGO_BIN_EXE_gencat"))
        .args(args)
        .output()
        .expect("binary runs");
    (output.stdout, output.status.success())
}

#[test]
fn criterion_10_byte_determinism() {
    criterion(
        10,
        "verify and render commands are byte-identical across runs",
        || {
            let verify_args = ["verify", "--max-sum", "8"];
            let (first, ok1) = run_binary(&verify_args);
            let (second, ok2) = run_binary(&verify_args);
            assert!(ok1 && ok2);
            assert!(!first.is_empty());
            assert_eq!(first, second, "verify output drifted between runs");

            let render_cases: [&[&str]; 4] = [
                &["render", "path", "URUURR", "3", "3"],
                &["render", "path", "UR"],
                &["render", "necklace", "UURRUR", "--mark", "2"],
                &["render", "gallery", "3", "3"],
            ];
            for args in render_cases {
                let (first, ok1) = run_binary(args);
                let (second, ok2) = run_binary(args);
                assert!(ok1 && ok2, "{args:?}");
                assert!(first.starts_with(b"<svg"), "{args:?}");
                assert_eq!(first, second, "{args:?} output drifted between runs");
            }
        },
    );
}
