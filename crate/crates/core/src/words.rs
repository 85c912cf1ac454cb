//! Words over the ordered alphabet `a1 < a2 < ... < as`.
//!
//! Letters are 1-based indices. Alphabets of at most 26 letters are written
//! as lowercase strings (`"abba"`); larger ones as comma separated indices
//! (`"3,1,27"`).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A 1-based letter index into an ordered alphabet.
pub type Letter = usize;

/// Largest alphabet still rendered with the letters `a..z`.
pub const MAX_CHAR_ALPHABET: usize = 26;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: usize, letters: Vec<Letter>) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > alphabet) {
            return Err(Error::LetterOutOfRange { letter, size: alphabet });
        }
        Ok(Word { alphabet, letters })
    }

    /// The empty word over `Σ_alphabet`.
    pub fn empty(alphabet: usize) -> Result<Self> {
        Word::new(alphabet, Vec::new())
    }

    /// Parses the textual word format. When `alphabet` is `None` the size is
    /// the largest letter used (1 for the empty word).
    pub fn parse(text: &str, alphabet: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let syntax = |reason: &str| Error::WordSyntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let letters: Vec<Letter> = if text.is_empty() {
            Vec::new()
        } else if text.contains(',') || text.chars().all(|c| c.is_ascii_digit()) {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<Letter>()
                        .map_err(|_| syntax("expected comma separated letter indices"))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    if c.is_ascii_lowercase() {
                        Ok(c as Letter - 'a' as Letter + 1)
                    } else {
                        Err(syntax("expected lowercase letters a-z"))
                    }
                })
                .collect::<Result<_>>()?
        };
        let size = alphabet.unwrap_or_else(|| letters.iter().copied().max().unwrap_or(1));
        Word::new(size, letters)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
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

    /// `|w|_a`, the number of occurrences of a single letter.
    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Occurrence counts indexed by letter (index 0 unused).
    pub fn letter_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet + 1];
        for &l in &self.letters {
            counts[l] += 1;
        }
        counts
    }

    /// 1-based position of the `k`-th occurrence of `letter`.
    pub fn position_of(&self, letter: Letter, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(Error::NoSuchOccurrence { letter, k });
        }
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == letter)
            .nth(k - 1)
            .map(|(i, _)| i + 1)
            .ok_or(Error::NoSuchOccurrence { letter, k })
    }

    /// `|w|_u`: how many times `pattern` occurs as a scattered subword.
    pub fn subword_count(&self, pattern: &Word) -> BigUint {
        subword_count(&self.letters, pattern.letters())
    }

    /// Keeps only the letters in `keep`; the alphabet is unchanged.
    pub fn project(&self, keep: &[Letter]) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: self.letters.iter().copied().filter(|l| keep.contains(l)).collect(),
        }
    }

    /// 1-based positions taking part in at least one occurrence of `pattern`.
    pub fn core_positions(&self, pattern: &Word) -> Result<Vec<usize>> {
        let v = pattern.letters();
        if v.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let n = self.letters.len();
        let m = v.len();
        // prefix[p]: longest prefix of v embedded in w[..p]; suffix[p]: longest
        // suffix of v embedded in w[p..]. Greedy matching is optimal for both.
        let mut prefix = vec![0; n + 1];
        for p in 0..n {
            let done = prefix[p];
            prefix[p + 1] = done + usize::from(done < m && self.letters[p] == v[done]);
        }
        let mut suffix = vec![0; n + 1];
        for p in (0..n).rev() {
            let done = suffix[p + 1];
            suffix[p] = done + usize::from(done < m && self.letters[p] == v[m - 1 - done]);
        }
        let positions = (0..n)
            .filter(|&p| (0..m).any(|j| v[j] == self.letters[p] && prefix[p] >= j && suffix[p + 1] >= m - 1 - j))
            .map(|p| p + 1)
            .collect();
        Ok(positions)
    }

    /// `core_v(w)`: the subword made of the letters contributing to `|w|_v`.
    /// Empty when `v` does not occur.
    pub fn core(&self, pattern: &Word) -> Result<Word> {
        let positions = self.core_positions(pattern)?;
        Ok(self.subword_at(&positions))
    }

    /// The subword formed by the given 1-based positions, in increasing order.
    pub fn subword_at(&self, positions: &[usize]) -> Word {
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Word {
            alphabet: self.alphabet,
            letters: sorted.iter().map(|&p| self.letters[p - 1]).collect(),
        }
    }

    pub fn support(&self) -> BTreeSet<Letter> {
        self.letters.iter().copied().collect()
    }

    /// `supp(w) = Σ_s`.
    pub fn has_full_support(&self) -> bool {
        self.support().len() == self.alphabet
    }

    /// True if `self` is a (scattered) subword of `other`.
    pub fn is_subword_of(&self, other: &Word) -> bool {
        let mut rest = other.letters.iter();
        self.letters.iter().all(|l| rest.any(|m| m == l))
    }

    /// The word `a_i a_{i+1} ... a_j`.
    pub fn run(alphabet: usize, from: Letter, to: Letter) -> Result<Word> {
        Word::new(alphabet, (from..=to).collect())
    }

    /// Same letters regarded over a different alphabet size.
    pub fn with_alphabet(&self, alphabet: usize) -> Result<Word> {
        Word::new(alphabet, self.letters.clone())
    }

    /// Shifts every letter by `offset` within an alphabet of size `alphabet`.
    pub fn shifted(&self, offset: usize, alphabet: usize) -> Result<Word> {
        Word::new(alphabet, self.letters.iter().map(|l| l + offset).collect())
    }
}

/// Serialized as its text form.
impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Prefix dynamic program over the pattern; `counts[j]` is the number of
/// embeddings of `pattern[..j]` into the text read so far.
fn subword_count(text: &[Letter], pattern: &[Letter]) -> BigUint {
    let mut counts = vec![BigUint::from(0u32); pattern.len() + 1];
    counts[0] = BigUint::from(1u32);
    for &letter in text {
        for j in (1..=pattern.len()).rev() {
            if pattern[j - 1] == letter {
                let add = counts[j - 1].clone();
                counts[j] += add;
            }
        }
    }
    counts.pop().unwrap_or_default()
}

/// Renders a letter: `a..z` for small alphabets, the index otherwise.
pub fn letter_name(letter: Letter, alphabet: usize) -> String {
    if alphabet <= MAX_CHAR_ALPHABET && (1..=26).contains(&letter) {
        char::from(b'a' + (letter - 1) as u8).to_string()
    } else {
        letter.to_string()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet <= MAX_CHAR_ALPHABET {
            for &l in &self.letters {
                write!(f, "{}", letter_name(l, self.alphabet))?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?} over {})", self.to_string(), self.alphabet)
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn over(text: &str, s: usize) -> Word {
        Word::parse(text, Some(s)).unwrap()
    }

    /// Counts occurrences by trying every increasing index tuple.
    fn naive_count(text: &[Letter], pattern: &[Letter]) -> u64 {
        fn go(text: &[Letter], pattern: &[Letter], from: usize) -> u64 {
            match pattern.split_first() {
                None => 1,
                Some((&head, tail)) => (from..text.len())
                    .filter(|&i| text[i] == head)
                    .map(|i| go(text, tail, i + 1))
                    .sum(),
            }
        }
        go(text, pattern, 0)
    }

    #[test]
    fn positions() {
        assert_eq!(w("abbaba").position_of(2, 2).unwrap(), 3);
        assert_eq!(w("caabcaba").position_of(1, 3).unwrap(), 6);
        assert_eq!(w("a").position_of(1, 1).unwrap(), 1);
        assert!(matches!(
            w("abbaba").position_of(1, 4),
            Err(Error::NoSuchOccurrence { letter: 1, k: 4 })
        ));
        assert!(w("abb").position_of(3, 1).is_err());
        assert!(w("abb").position_of(1, 0).is_err());
    }

    #[test]
    fn subword_counts() {
        let empty = Word::empty(3).unwrap();
        assert_eq!(w("abc").subword_count(&empty), BigUint::from(1u32));
        assert_eq!(empty.subword_count(&empty), BigUint::from(1u32));
        assert_eq!(empty.subword_count(&w("a")), BigUint::from(0u32));
        assert_eq!(w("abbaba").subword_count(&w("ab")), BigUint::from(4u32));
        assert_eq!(w("bbccabdc").subword_count(&w("abcd")), BigUint::from(0u32));
    }

    #[test]
    fn subword_count_does_not_overflow() {
        // |a^200 b^200|_{ab} = 40000, |(ab)^40|_{abab...} grows fast.
        let long = Word::new(2, [vec![1; 200], vec![2; 200]].concat()).unwrap();
        assert_eq!(long.subword_count(&w("ab")), BigUint::from(40_000u32));
        let pattern = over("aaaaaaaaaaaaaaaaaaaaaaaaaaaaaa", 2);
        let text = Word::new(2, vec![1; 120]).unwrap();
        // C(120, 30) exceeds u64.
        let count = text.subword_count(&pattern);
        assert!(count > BigUint::from(u64::MAX));
    }

    #[test]
    fn projections() {
        let x = w("babcb");
        assert_eq!(x.project(&[1, 2]), over("babb", 3));
        assert_eq!(x.project(&[1, 2, 3]), x);
        assert!(x.project(&[]).is_empty());
    }

    #[test]
    fn cores_of_worked_example() {
        let x = w("bacbbabcccbac");
        assert_eq!(x.core(&w("b")).unwrap().to_string(), "bbbbb");
        assert_eq!(x.core(&w("ab")).unwrap().to_string(), "abbabb");
        assert_eq!(x.core(&w("bc")).unwrap().to_string(), "bcbbbcccbc");
        assert_eq!(x.core(&w("abc")).unwrap().to_string(), "abbabcccbc");
        assert_eq!(x.core(&w("cab")).unwrap().to_string(), "cabb");
        assert_eq!(x.core(&w("cca")).unwrap().to_string(), "cccca");
    }

    #[test]
    fn core_edge_cases() {
        assert!(matches!(
            w("ab").core(&Word::empty(2).unwrap()),
            Err(Error::EmptyPattern)
        ));
        assert!(w("ba").core(&w("ab")).unwrap().is_empty());
        assert_eq!(w("abab").core(&w("ab")).unwrap(), w("abab"));
    }

    #[test]
    fn supports() {
        assert!(Word::empty(4).unwrap().support().is_empty());
        assert_eq!(w("bbccabdc").support(), BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(w("aaa").support(), BTreeSet::from([1]));
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(w("abc").alphabet_size(), 3);
        assert_eq!(over("ab", 5).alphabet_size(), 5);
        assert_eq!(w("3,1,2").letters(), &[3, 1, 2]);
        assert_eq!(w("3,1,2").to_string(), "cab");
        let big = Word::parse("27,1", None).unwrap();
        assert_eq!(big.alphabet_size(), 27);
        assert_eq!(big.to_string(), "27,1");
        assert!(Word::parse("aB", None).is_err());
        assert!(Word::parse("1,x", None).is_err());
        assert!(Word::parse("c", Some(2)).is_err());
        assert!(Word::new(0, vec![]).is_err());
        assert!(Word::parse("", None).unwrap().is_empty());
    }

    #[test]
    fn subword_relation() {
        assert!(w("aab").is_subword_of(&w("abab")));
        assert!(!w("bba").is_subword_of(&w("abab")));
    }

    fn small_word(max_alphabet: usize, max_len: usize) -> impl Strategy<Value = Word> {
        (1..=max_alphabet).prop_flat_map(move |s| {
            prop::collection::vec(1..=s, 0..=max_len).prop_map(move |l| Word::new(s, l).unwrap())
        })
    }

    fn word_and_pattern() -> impl Strategy<Value = (Word, Word)> {
        (1..=4usize).prop_flat_map(|s| {
            (
                prop::collection::vec(1..=s, 0..=10),
                prop::collection::vec(1..=s, 1..=4),
            )
                .prop_map(move |(a, b)| (Word::new(s, a).unwrap(), Word::new(s, b).unwrap()))
        })
    }

    proptest! {
        #[test]
        fn count_matches_enumeration((text, pattern) in word_and_pattern()) {
            let expected = naive_count(text.letters(), pattern.letters());
            prop_assert_eq!(text.subword_count(&pattern), BigUint::from(expected));
        }

        #[test]
        fn core_preserves_count_and_is_idempotent((text, pattern) in word_and_pattern()) {
            let core = text.core(&pattern).unwrap();
            prop_assert_eq!(core.subword_count(&pattern), text.subword_count(&pattern));
            prop_assert_eq!(core.core(&pattern).unwrap(), core.clone());
            prop_assert!(core.is_subword_of(&text));
        }

        #[test]
        fn projection_is_a_morphism(u in small_word(4, 6), v in small_word(4, 6)) {
            let s = u.alphabet_size().max(v.alphabet_size());
            let u = u.with_alphabet(s).unwrap();
            let v = v.with_alphabet(s).unwrap();
            let uv = Word::new(s, [u.letters(), v.letters()].concat()).unwrap();
            for keep in [vec![1], vec![1, 3], vec![2, 3, 4]] {
                let joined = [u.project(&keep).letters(), v.project(&keep).letters()].concat();
                let projected = uv.project(&keep);
                prop_assert_eq!(projected.letters(), &joined[..]);
            }
        }

        #[test]
        fn display_round_trips(x in small_word(5, 8)) {
            let again = Word::parse(&x.to_string(), Some(x.alphabet_size())).unwrap();
            prop_assert_eq!(again, x);
        }
    }
}
