//! Binary necklaces: rotation classes of words over {U, R}, their canonical
//! representatives, symmetry orders, block decompositions, and marks.
//!
//! A necklace of shape `(m, n)` is an equivalence class of words with `m`
//! up-steps and `n` right-steps under rotation. The canonical representative
//! is the lexicographically least rotation (with `U < R`). The canonical word
//! splits into `gcd(m, n)` contiguous blocks of length `(m + n) / gcd(m, n)`;
//! rotational symmetry permutes the blocks, and the marked-necklace count
//! uses one mark per orbit of blocks.

use crate::error::{Error, Result};
use crate::exactmath::GridShape;
use crate::paths::{enumerate_words, BinaryWord, Letter};
use crate::Int;

/// Index of the lexicographically least rotation, by Booth's algorithm.
/// Linear time over a conceptually doubled word; `f` is the failure function
/// of the best rotation found so far.
pub(crate) fn least_rotation_index(s: &[Letter]) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    let at = |i: usize| s[i % n];
    let mut f = vec![-1i64; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

/// The lexicographically least rotation of a nonempty word.
pub fn canonical_rotation(word: &BinaryWord) -> Result<BinaryWord> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    word.rotate(least_rotation_index(word.letters()))
}

/// Smallest `p` with `w[i] == w[i mod p]` for all `i`. Always divides the
/// length for a full rotation period; checked over divisors in ascending
/// order.
pub fn minimal_period(word: &BinaryWord) -> Result<usize> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let letters = word.letters();
    let len = letters.len();
    for p in 1..=len {
        if !len.is_multiple_of(p) {
            continue;
        }
        if letters.iter().enumerate().all(|(i, &l)| l == letters[i % p]) {
            return Ok(p);
        }
    }
    unreachable!("p = len always works");
}

/// A rotation class of words, stored by its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Necklace {
    canonical: BinaryWord,
    shape: GridShape,
    period: usize,
    symmetry_order: u64,
}

impl Necklace {
    /// Builds the necklace containing `word`, which may be any rotation.
    pub fn new(word: &BinaryWord, shape: GridShape) -> Result<Self> {
        word.check_shape(shape)?;
        Self::from_canonical(canonical_rotation(word)?, shape)
    }

    fn from_canonical(canonical: BinaryWord, shape: GridShape) -> Result<Self> {
        debug_assert_eq!(canonical_rotation(&canonical).as_ref(), Ok(&canonical));
        let period = minimal_period(&canonical)?;
        let symmetry_order = shape.total() / period as u64;
        Ok(Necklace {
            canonical,
            shape,
            period,
            symmetry_order,
        })
    }

    pub fn canonical(&self) -> &BinaryWord {
        &self.canonical
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    /// Minimal rotation period; also the number of distinct rotations.
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn orbit_size(&self) -> u64 {
        self.period as u64
    }

    /// `r`, the order of the rotational symmetry group: `(m + n) / period`.
    pub fn symmetry_order(&self) -> u64 {
        self.symmetry_order
    }

    /// The necklace weight `gcd(m, n) / r`. Integral because the period is a
    /// multiple of the block length; the division is still checked.
    pub fn weight(&self) -> Result<Int> {
        let gcd = self.shape.gcd();
        let r = self.symmetry_order;
        if !gcd.is_multiple_of(r) {
            return Err(Error::NotDivisible {
                context: "necklace weight",
                numerator: gcd.to_string(),
                denominator: r.to_string(),
            });
        }
        Ok(Int::from(gcd / r))
    }

    /// The `gcd(m, n)` contiguous blocks of length `(m + n) / gcd(m, n)` of
    /// the canonical word, in order.
    pub fn blocks(&self) -> Vec<BinaryWord> {
        let g = self.shape.block_len() as usize;
        self.canonical
            .letters()
            .chunks(g)
            .map(|chunk| BinaryWord::new(chunk.to_vec()))
            .collect()
    }

    /// Block indices that are least in their orbit under the symmetry action,
    /// which shifts block indices by `period / block_len` modulo `gcd`. Marks
    /// are placed on these and only these. The count always equals the
    /// necklace weight.
    pub fn distinguishable_blocks(&self) -> Vec<usize> {
        let gcd = self.shape.gcd() as usize;
        let step = (self.period as u64 / self.shape.block_len()) as usize % gcd;
        let mut out = Vec::new();
        'blocks: for j in 0..gcd {
            let mut k = (j + step) % gcd;
            while k != j {
                if k < j {
                    continue 'blocks;
                }
                k = (k + step) % gcd;
            }
            out.push(j);
        }
        out
    }
}

/// A necklace with one distinguishable block marked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedNecklace {
    necklace: Necklace,
    mark: usize,
}

impl MarkedNecklace {
    /// `mark` is an index into [`Necklace::blocks`] and must be one of the
    /// distinguishable blocks.
    pub fn new(necklace: Necklace, mark: usize) -> Result<Self> {
        if !necklace.distinguishable_blocks().contains(&mark) {
            return Err(Error::MarkNotDistinguishable { index: mark });
        }
        Ok(MarkedNecklace { necklace, mark })
    }

    pub fn necklace(&self) -> &Necklace {
        &self.necklace
    }

    pub fn mark(&self) -> usize {
        self.mark
    }
}

/// All necklaces of the shape in lexicographic order of their canonical
/// words: the filter of [`enumerate_words`] down to words equal to their own
/// canonical rotation. Reference enumerator; see
/// [`enumerate_necklaces_fast`] for the recursive generator.
pub fn enumerate_necklaces(shape: GridShape) -> impl Iterator<Item = Necklace> {
    enumerate_words(shape).filter_map(move |word| {
        let canonical = canonical_rotation(&word).expect("nonempty word");
        if canonical == word {
            Some(Necklace::from_canonical(word, shape).expect("shape checked by enumeration"))
        } else {
            None
        }
    })
}

/// Same sequence as [`enumerate_necklaces`], produced directly by the
/// fixed-content successor recursion (Fredricksen-Kessler-Maiorana as
/// extended by Sawada): position `t` may hold any letter at least
/// `a[t - p]`, where `p` is the current candidate period, and a finished
/// word is emitted when `p` divides the length. Visits canonical words only,
/// in lexicographic order, without generating the full word list.
pub fn enumerate_necklaces_fast(shape: GridShape) -> Vec<Necklace> {
    let total = usize::try_from(shape.total()).expect("enumeration shape fits in memory");
    let m = usize::try_from(shape.m()).expect("enumeration shape fits in memory");
    let n = usize::try_from(shape.n()).expect("enumeration shape fits in memory");
    let mut a = vec![Letter::U; total];
    let mut remaining = [m - 1, n];
    let mut out = Vec::new();
    fixed_content(&mut a, &mut remaining, 1, 1, shape, &mut out);
    out
}

fn fixed_content(
    a: &mut [Letter],
    remaining: &mut [usize; 2],
    t: usize,
    p: usize,
    shape: GridShape,
    out: &mut Vec<Necklace>,
) {
    let total = a.len();
    if t == total {
        if total.is_multiple_of(p) {
            let word = BinaryWord::new(a.to_vec());
            out.push(
                Necklace::from_canonical(word, shape).expect("recursion emits canonical words"),
            );
        }
        return;
    }
    let floor = a[t - p];
    for (idx, letter) in [Letter::U, Letter::R].into_iter().enumerate() {
        if letter < floor || remaining[idx] == 0 {
            continue;
        }
        a[t] = letter;
        remaining[idx] -= 1;
        let next_p = if letter == floor { p } else { t + 1 };
        fixed_content(a, remaining, t + 1, next_p, shape, out);
        remaining[idx] += 1;
    }
}

/// All marked necklaces of the shape: each necklace paired with each of its
/// distinguishable block indices, necklaces in lexicographic order and marks
/// ascending within a necklace.
pub fn enumerate_marked(shape: GridShape) -> impl Iterator<Item = MarkedNecklace> {
    enumerate_necklaces(shape).flat_map(|necklace| {
        necklace
            .distinguishable_blocks()
            .into_iter()
            .map(move |mark| MarkedNecklace {
                necklace: necklace.clone(),
                mark,
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn shape(m: u64, n: u64) -> GridShape {
        GridShape::new(m, n).unwrap()
    }

    fn naive_least_rotation(word: &BinaryWord) -> BinaryWord {
        (0..word.len())
            .map(|d| word.rotate(d).unwrap())
            .min()
            .unwrap()
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(canonical_rotation(&w("URURUR")).unwrap(), w("URURUR"));
        assert_eq!(canonical_rotation(&w("URUURR")).unwrap(), w("UURRUR"));
        assert_eq!(canonical_rotation(&w("RRRUUU")).unwrap(), w("UUURRR"));
        assert_eq!(canonical_rotation(&w("RRRR")).unwrap(), w("RRRR"));
        assert_eq!(canonical_rotation(&w("R")).unwrap(), w("R"));
        assert!(matches!(
            canonical_rotation(&BinaryWord::new(vec![])),
            Err(Error::EmptyWord)
        ));
    }

    #[test]
    fn booth_matches_naive_minimum_exhaustively() {
        for len in 1..=10usize {
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
                assert_eq!(
                    canonical_rotation(&word).unwrap(),
                    naive_least_rotation(&word),
                    "{word}"
                );
            }
        }
    }

    #[test]
    fn minimal_period_examples() {
        assert_eq!(minimal_period(&w("URURUR")).unwrap(), 2);
        assert_eq!(minimal_period(&w("UURRUR")).unwrap(), 6);
        assert_eq!(minimal_period(&w("UURR")).unwrap(), 4);
        assert_eq!(minimal_period(&w("URUR")).unwrap(), 2);
        assert_eq!(minimal_period(&w("U")).unwrap(), 1);
        assert_eq!(minimal_period(&w("UUU")).unwrap(), 1);
    }

    #[test]
    fn necklace_canonicalizes_any_rotation() {
        let a = Necklace::new(&w("URUURR"), shape(3, 3)).unwrap();
        let b = Necklace::new(&w("UURRUR"), shape(3, 3)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.canonical(), &w("UURRUR"));
        assert!(matches!(
            Necklace::new(&w("UURR"), shape(3, 3)),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn symmetry_and_weight_examples() {
        let cases = [
            ("UUURRR", 3, 3, 6, 1, 3),
            ("UURRUR", 3, 3, 6, 1, 3),
            ("URURUR", 3, 3, 2, 3, 1),
            ("UURR", 2, 2, 4, 1, 2),
            ("URUR", 2, 2, 2, 2, 1),
            ("UR", 1, 1, 2, 1, 1),
        ];
        for (word, m, n, period, r, weight) in cases {
            let neck = Necklace::new(&w(word), shape(m, n)).unwrap();
            assert_eq!(neck.period(), period, "{word}");
            assert_eq!(neck.orbit_size(), period as u64, "{word}");
            assert_eq!(neck.symmetry_order(), r, "{word}");
            assert_eq!(neck.weight().unwrap(), Int::from(weight), "{word}");
        }
    }

    #[test]
    fn blocks_examples() {
        let neck = Necklace::new(&w("UURRUR"), shape(3, 3)).unwrap();
        assert_eq!(neck.blocks(), vec![w("UU"), w("RR"), w("UR")]);
        let neck = Necklace::new(&w("URURUR"), shape(3, 3)).unwrap();
        assert_eq!(neck.blocks(), vec![w("UR"), w("UR"), w("UR")]);
        let neck = Necklace::new(&w("UURRR"), shape(2, 3)).unwrap();
        assert_eq!(neck.blocks(), vec![w("UURRR")]);
    }

    #[test]
    fn distinguishable_blocks_examples() {
        let dist = |word: &str, m, n| {
            Necklace::new(&w(word), shape(m, n))
                .unwrap()
                .distinguishable_blocks()
        };
        assert_eq!(dist("UUURRR", 3, 3), vec![0, 1, 2]);
        assert_eq!(dist("UURRUR", 3, 3), vec![0, 1, 2]);
        assert_eq!(dist("URURUR", 3, 3), vec![0]);
        assert_eq!(dist("UURR", 2, 2), vec![0, 1]);
        assert_eq!(dist("URUR", 2, 2), vec![0]);
        assert_eq!(dist("UURRR", 2, 3), vec![0]);
    }

    #[test]
    fn distinguishable_block_count_equals_weight() {
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                let s = shape(m, n);
                for neck in enumerate_necklaces(s) {
                    assert_eq!(
                        Int::from(neck.distinguishable_blocks().len() as u64),
                        neck.weight().unwrap(),
                        "{} on {s}",
                        neck.canonical()
                    );
                }
            }
        }
    }

    #[test]
    fn mark_must_be_distinguishable() {
        let neck = Necklace::new(&w("URURUR"), shape(3, 3)).unwrap();
        assert!(MarkedNecklace::new(neck.clone(), 0).is_ok());
        assert!(matches!(
            MarkedNecklace::new(neck, 1),
            Err(Error::MarkNotDistinguishable { index: 1 })
        ));
    }

    #[test]
    fn enumerate_necklaces_examples() {
        let canon: Vec<String> = enumerate_necklaces(shape(3, 3))
            .map(|x| x.canonical().to_string())
            .collect();
        assert_eq!(canon, ["UUURRR", "UURURR", "UURRUR", "URURUR"]);

        let canon: Vec<String> = enumerate_necklaces(shape(1, 1))
            .map(|x| x.canonical().to_string())
            .collect();
        assert_eq!(canon, ["UR"]);

        let canon: Vec<String> = enumerate_necklaces(shape(2, 2))
            .map(|x| x.canonical().to_string())
            .collect();
        assert_eq!(canon, ["UURR", "URUR"]);
    }

    #[test]
    fn orbit_sizes_sum_to_word_count() {
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                let s = shape(m, n);
                let total: u64 = enumerate_necklaces(s).map(|x| x.orbit_size()).sum();
                let words = enumerate_words(s).count() as u64;
                assert_eq!(total, words, "{s}");
            }
        }
    }

    #[test]
    fn fast_enumerator_matches_filter_enumerator() {
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                let s = shape(m, n);
                let baseline: Vec<Necklace> = enumerate_necklaces(s).collect();
                let fast = enumerate_necklaces_fast(s);
                assert_eq!(fast, baseline, "{s}");
            }
        }
    }

    #[test]
    fn marked_enumeration_examples() {
        assert_eq!(enumerate_marked(shape(3, 3)).count(), 10);
        assert_eq!(enumerate_marked(shape(1, 1)).count(), 1);
        assert_eq!(enumerate_marked(shape(2, 2)).count(), 3);
        for marked in enumerate_marked(shape(4, 2)) {
            assert!(marked
                .necklace()
                .distinguishable_blocks()
                .contains(&marked.mark()));
        }
    }

    fn arb_word() -> impl Strategy<Value = BinaryWord> {
        proptest::collection::vec(prop_oneof![Just(Letter::U), Just(Letter::R)], 1..32)
            .prop_map(BinaryWord::new)
    }

    proptest! {
        #[test]
        fn canonical_is_idempotent(word in arb_word()) {
            let once = canonical_rotation(&word).unwrap();
            let twice = canonical_rotation(&once).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn canonical_is_rotation_invariant(word in arb_word(), d in 0usize..64) {
            let rotated = word.rotate(d).unwrap();
            prop_assert_eq!(
                canonical_rotation(&word).unwrap(),
                canonical_rotation(&rotated).unwrap()
            );
        }

        #[test]
        fn minimal_period_divides_length(word in arb_word()) {
            let p = minimal_period(&word).unwrap();
            prop_assert_eq!(word.len() % p, 0);
        }
    }
}
