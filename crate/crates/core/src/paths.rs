//! Binary words over {U, R}, rational Dyck path recognition, anchors, and
//! deterministic enumeration.
//!
//! Coordinate convention, used consistently by this module and by
//! [`crate::render`]: after a prefix of the word the current vertex is
//! `(x, y)` with `x` = number of R steps (column) and `y` = number of U steps
//! (row). The diagonal of an `(m, n)` grid runs from `(0, 0)` to `(n, m)`;
//! a word is Dyck when every prefix satisfies `n * y >= m * x`, and a vertex
//! lies on the diagonal exactly when `m * x == n * y`.

use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exactmath::GridShape;
use crate::{Int, Rational};

/// One step of a path. The derived order `U < R` is the lexicographic
/// convention for every enumeration and canonical form in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    U,
    R,
}

impl Letter {
    fn to_char(self) -> char {
        match self {
            Letter::U => 'U',
            Letter::R => 'R',
        }
    }

    /// Accepts the step alphabet plus the parenthesis and bead notations:
    /// `U ( ∘ ○` are up-steps, `R ) • ●` are right-steps.
    fn from_char(c: char) -> Result<Self> {
        match c {
            'U' | 'u' | '(' | '\u{2218}' | '\u{25CB}' => Ok(Letter::U),
            'R' | 'r' | ')' | '\u{2022}' | '\u{25CF}' => Ok(Letter::R),
            other => Err(Error::BadLetter(other)),
        }
    }
}

/// A finite word over {U, R}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    letters: Vec<Letter>,
}

impl BinaryWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BinaryWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count_u(&self) -> u64 {
        self.letters.iter().filter(|&&l| l == Letter::U).count() as u64
    }

    pub fn count_r(&self) -> u64 {
        self.len() as u64 - self.count_u()
    }

    /// The shape this word spells, when both letters occur.
    pub fn shape(&self) -> Result<GridShape> {
        GridShape::new(self.count_u(), self.count_r())
    }

    /// Left rotation by `d` (taken modulo the length): `w[d..] ++ w[..d]`.
    pub fn rotate(&self, d: usize) -> Result<BinaryWord> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let d = d % self.len();
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[d..]);
        letters.extend_from_slice(&self.letters[..d]);
        Ok(BinaryWord { letters })
    }

    /// Errors unless the word has exactly the shape's letter counts.
    pub fn check_shape(&self, shape: GridShape) -> Result<()> {
        let (u, r) = (self.count_u(), self.count_r());
        if u != shape.m() || r != shape.n() {
            return Err(Error::ShapeMismatch {
                u,
                r,
                m: shape.m(),
                n: shape.n(),
            });
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '|')
            .map(Letter::from_char)
            .collect::<Result<Vec<_>>>()?;
        Ok(BinaryWord { letters })
    }
}

impl std::fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// True iff every prefix of the word stays weakly above the diagonal:
/// `n * (#U so far) >= m * (#R so far)`. Errors when the letter counts do not
/// match the shape.
pub fn is_dyck(word: &BinaryWord, shape: GridShape) -> Result<bool> {
    word.check_shape(shape)?;
    Ok(is_dyck_unchecked(word.letters(), shape))
}

/// Prefix condition alone; the caller guarantees the letter counts.
pub(crate) fn is_dyck_unchecked(letters: &[Letter], shape: GridShape) -> bool {
    let (m, n) = (shape.m(), shape.n());
    let mut x = 0u64;
    let mut y = 0u64;
    for &l in letters {
        match l {
            Letter::U => y += 1,
            Letter::R => x += 1,
        }
        if n * y < m * x {
            return false;
        }
    }
    true
}

/// A word of shape `(m, n)` whose every prefix stays weakly above the
/// diagonal, together with its diagonal anchors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    word: BinaryWord,
    shape: GridShape,
    anchors: Vec<(u64, u64)>,
}

impl DyckPath {
    pub fn new(word: BinaryWord, shape: GridShape) -> Result<Self> {
        if !is_dyck(&word, shape)? {
            return Err(Error::NotDyck {
                word: word.to_string(),
                m: shape.m(),
                n: shape.n(),
            });
        }
        let anchors = compute_anchors(&word, shape);
        debug_assert_eq!(anchors.last(), Some(&(shape.n(), shape.m())));
        Ok(DyckPath {
            word,
            shape,
            anchors,
        })
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    /// Diagonal vertices in path order, origin excluded. The endpoint
    /// `(n, m)` is always present.
    pub fn anchors(&self) -> &[(u64, u64)] {
        &self.anchors
    }

    /// `a(p)`, the number of anchors away from the origin.
    pub fn anchor_count(&self) -> u64 {
        self.anchors.len() as u64
    }

    /// The anchored weight `gcd(m, n) / a(p)`, exact and in general not an
    /// integer.
    pub fn anchored_weight(&self) -> Rational {
        Ratio::new(
            Int::from(self.shape.gcd()),
            Int::from(self.anchor_count()),
        )
    }

    /// All `m + n + 1` vertices including the origin.
    pub fn vertices(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::with_capacity(self.word.len() + 1);
        let (mut x, mut y) = (0u64, 0u64);
        out.push((x, y));
        for &l in self.word.letters() {
            match l {
                Letter::U => y += 1,
                Letter::R => x += 1,
            }
            out.push((x, y));
        }
        out
    }
}

fn compute_anchors(word: &BinaryWord, shape: GridShape) -> Vec<(u64, u64)> {
    let (m, n) = (shape.m(), shape.n());
    let (mut x, mut y) = (0u64, 0u64);
    let mut anchors = Vec::new();
    for &l in word.letters() {
        match l {
            Letter::U => y += 1,
            Letter::R => x += 1,
        }
        if m * x == n * y {
            anchors.push((x, y));
        }
    }
    anchors
}

/// All shift amounts `d` in `[0, m + n)` whose left rotation is again a Dyck
/// word. The input must itself be Dyck.
pub fn dyck_rotation_shifts(word: &BinaryWord, shape: GridShape) -> Result<Vec<usize>> {
    if !is_dyck(word, shape)? {
        return Err(Error::NotDyck {
            word: word.to_string(),
            m: shape.m(),
            n: shape.n(),
        });
    }
    let mut shifts = Vec::new();
    for d in 0..word.len() {
        let rotated = word.rotate(d)?;
        if is_dyck_unchecked(rotated.letters(), shape) {
            shifts.push(d);
        }
    }
    Ok(shifts)
}

/// Lexicographic stream of all `binomial(m + n, n)` words of the shape,
/// starting at `U^m R^n`.
pub fn enumerate_words(shape: GridShape) -> Words {
    let m = usize::try_from(shape.m()).expect("enumeration shape fits in memory");
    let n = usize::try_from(shape.n()).expect("enumeration shape fits in memory");
    let mut letters = vec![Letter::U; m];
    letters.extend(std::iter::repeat_n(Letter::R, n));
    Words {
        next: Some(letters),
    }
}

pub struct Words {
    next: Option<Vec<Letter>>,
}

impl Iterator for Words {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(BinaryWord::new(current))
    }
}

/// In-place successor in lexicographic order over equal-content words.
/// Returns false when the input is already the last permutation.
fn next_permutation<T: Ord>(s: &mut [T]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let mut i = s.len() - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let pivot = i - 1;
    let mut j = s.len() - 1;
    while s[j] <= s[pivot] {
        j -= 1;
    }
    s.swap(pivot, j);
    s[i..].reverse();
    true
}

/// Lexicographic stream of the Dyck words of the shape, generated by
/// prefix-pruned depth-first search: a prefix is extended with R only while
/// the above-diagonal condition still holds (any valid prefix can be
/// completed by emitting the remaining U steps first).
pub fn enumerate_dyck(shape: GridShape) -> DyckPaths {
    let m = usize::try_from(shape.m()).expect("enumeration shape fits in memory");
    let n = usize::try_from(shape.n()).expect("enumeration shape fits in memory");
    let mut iter = DyckPaths {
        shape,
        m,
        n,
        current: Vec::with_capacity(m + n),
        stack: Vec::new(),
    };
    iter.push_extensions(0, 0, 0);
    iter
}

pub struct DyckPaths {
    shape: GridShape,
    m: usize,
    n: usize,
    current: Vec<Letter>,
    stack: Vec<(usize, Letter)>,
}

impl DyckPaths {
    fn push_extensions(&mut self, depth: usize, u_used: usize, r_used: usize) {
        // R pushed first so the U branch pops first: lexicographic order.
        if r_used < self.n {
            let y = u_used as u64;
            let x = (r_used + 1) as u64;
            if self.shape.n() * y >= self.shape.m() * x {
                self.stack.push((depth, Letter::R));
            }
        }
        if u_used < self.m {
            self.stack.push((depth, Letter::U));
        }
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        while let Some((depth, letter)) = self.stack.pop() {
            self.current.truncate(depth);
            self.current.push(letter);
            let len = self.current.len();
            if len == self.m + self.n {
                let word = BinaryWord::new(self.current.clone());
                let path = DyckPath::new(word, self.shape).expect("pruned prefix is Dyck");
                return Some(path);
            }
            let u_used = self.current.iter().filter(|&&l| l == Letter::U).count();
            self.push_extensions(len, u_used, len - u_used);
        }
        None
    }
}
