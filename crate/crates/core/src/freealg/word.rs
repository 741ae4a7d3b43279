use std::cmp::Ordering;
use std::fmt;

/// One of the two free generators. `A < B` in the letter order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Generator {
    A = 0,
    B = 1,
}

impl Generator {
    pub fn swapped(self) -> Self {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }
}

/// Display names for the two generators.
///
/// The BCH expansions reuse the same algebra with `A` read as `X` and `B`
/// read as `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    pub first: char,
    pub second: char,
}

impl Alphabet {
    pub const AB: Alphabet = Alphabet {
        first: 'A',
        second: 'B',
    };
    pub const XY: Alphabet = Alphabet {
        first: 'X',
        second: 'Y',
    };

    pub fn name(&self, g: Generator) -> char {
        match g {
            Generator::A => self.first,
            Generator::B => self.second,
        }
    }

    pub fn parse(&self, c: char) -> Option<Generator> {
        if c == self.first {
            Some(Generator::A)
        } else if c == self.second {
            Some(Generator::B)
        } else {
            None
        }
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::AB
    }
}

/// A monomial of the free algebra. The empty word is the unit.
///
/// Words are ordered degree-first, then lexicographically on letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn letter(g: Generator) -> Self {
        Word(vec![g])
    }

    pub fn power(g: Generator, n: usize) -> Self {
        Word(vec![g; n])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Number of `B` letters.
    pub fn b_degree(&self) -> usize {
        self.0.iter().filter(|&&g| g == Generator::B).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|g| g.swapped()).collect())
    }

    pub fn render(&self, alphabet: Alphabet) -> String {
        self.0.iter().map(|&g| alphabet.name(g)).collect()
    }

    pub fn parse(s: &str, alphabet: Alphabet) -> Option<Word> {
        s.chars()
            .map(|c| alphabet.parse(c))
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.render(Alphabet::AB))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{A, B};

    #[test]
    fn deglex_order() {
        let mut words = [
            Word::new(vec![B, A]),
            Word::new(vec![A]),
            Word::empty(),
            Word::new(vec![A, B]),
            Word::new(vec![B]),
            Word::new(vec![A, A, A]),
        ];
        words.sort();
        let rendered: Vec<_> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(rendered, ["1", "A", "B", "AB", "BA", "AAA"]);
    }

    #[test]
    fn degrees() {
        let w = Word::new(vec![A, B, B, A]);
        assert_eq!(w.degree(), 4);
        assert_eq!(w.b_degree(), 2);
        assert_eq!(Word::empty().degree(), 0);
    }

    #[test]
    fn parse_and_render() {
        let w = Word::parse("XYY", Alphabet::XY).unwrap();
        assert_eq!(w, Word::new(vec![A, B, B]));
        assert_eq!(w.render(Alphabet::XY), "XYY");
        assert!(Word::parse("AC", Alphabet::AB).is_none());
        assert_eq!(Word::parse("", Alphabet::AB), Some(Word::empty()));
    }

    #[test]
    fn reverse_and_swap() {
        let w = Word::new(vec![A, A, B]);
        assert_eq!(w.reversed(), Word::new(vec![B, A, A]));
        assert_eq!(w.swapped(), Word::new(vec![B, B, A]));
    }
}
