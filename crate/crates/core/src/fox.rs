//! Words in the generators of an admissible presentation and the
//! abelianized, involuted Fox derivative.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{ExponentVector, LaurentPolynomial};
use crate::error::{Error, Result};
use crate::homology::HomologyAssignment;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorClass {
    /// `i₋(γ_j)`, token `m<j>`.
    Minus,
    /// `z_k`, token `z<k>`.
    Internal,
    /// `i₊(γ_j)`, token `p<j>`.
    Plus,
}

/// A generator of an admissible presentation; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorRef {
    pub class: GeneratorClass,
    pub index: usize,
}

impl GeneratorRef {
    pub fn minus(index: usize) -> Self {
        GeneratorRef {
            class: GeneratorClass::Minus,
            index,
        }
    }

    pub fn internal(index: usize) -> Self {
        GeneratorRef {
            class: GeneratorClass::Internal,
            index,
        }
    }

    pub fn plus(index: usize) -> Self {
        GeneratorRef {
            class: GeneratorClass::Plus,
            index,
        }
    }

    /// Position in the ordered generator list `m1..m2g, z1..zl, p1..p2g`.
    pub fn position(&self, genus: usize, internal_count: usize) -> usize {
        match self.class {
            GeneratorClass::Minus => self.index - 1,
            GeneratorClass::Internal => 2 * genus + self.index - 1,
            GeneratorClass::Plus => 2 * genus + internal_count + self.index - 1,
        }
    }

    /// Inverse of [`GeneratorRef::position`].
    pub fn at_position(pos: usize, genus: usize, internal_count: usize) -> Self {
        let n = 2 * genus;
        if pos < n {
            Self::minus(pos + 1)
        } else if pos < n + internal_count {
            Self::internal(pos - n + 1)
        } else {
            Self::plus(pos - n - internal_count + 1)
        }
    }

    fn in_range(&self, genus: usize, internal_count: usize) -> bool {
        let bound = match self.class {
            GeneratorClass::Minus | GeneratorClass::Plus => 2 * genus,
            GeneratorClass::Internal => internal_count,
        };
        (1..=bound).contains(&self.index)
    }
}

impl fmt::Display for GeneratorRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.class {
            GeneratorClass::Minus => 'm',
            GeneratorClass::Internal => 'z',
            GeneratorClass::Plus => 'p',
        };
        write!(f, "{prefix}{}", self.index)
    }
}

/// One letter `x` or `x⁻¹` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: GeneratorRef,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: GeneratorRef, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn sign(&self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "-")?;
        }
        write!(f, "{}", self.generator)
    }
}

impl FromStr for Letter {
    type Err = Error;

    /// Token syntax `m<k>`, `z<k>`, `p<k>` with optional `-` prefix; `k >= 1`.
    fn from_str(token: &str) -> Result<Self> {
        let bad = || Error::Token(token.to_string());
        let (inverse, rest) = match token.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, token),
        };
        let mut chars = rest.chars();
        let class = match chars.next() {
            Some('m') => GeneratorClass::Minus,
            Some('z') => GeneratorClass::Internal,
            Some('p') => GeneratorClass::Plus,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Letter::new(GeneratorRef { class, index }, inverse))
    }
}

/// A word in the free group, stored verbatim (no free reduction).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `w · self · w⁻¹`.
    pub fn conjugate_by(&self, w: &Word) -> Word {
        w.concat(self).concat(&w.inverse())
    }

    pub fn map_generators(&self, mut f: impl FnMut(GeneratorRef) -> GeneratorRef) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter::new(f(l.generator), l.inverse))
                .collect(),
        )
    }

    /// Parse whitespace-separated tokens.
    pub fn parse_tokens<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Result<Word> {
        tokens
            .into_iter()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn tokens(&self) -> Vec<String> {
        self.0.iter().map(|l| l.to_string()).collect()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse_tokens(s.split_whitespace())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tokens().join(" "))
    }
}

/// A deficiency-`2g` presentation with generators ordered
/// `i₋(γ_1..γ_2g), z_1..z_l, i₊(γ_1..γ_2g)` and `2g + l` relators.
///
/// Construction validates the relator count and every generator index, so
/// values of this type are always structurally admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePresentation {
    genus: usize,
    internal_count: usize,
    relations: Vec<Word>,
    name: Option<String>,
}

impl AdmissiblePresentation {
    pub fn new(
        genus: usize,
        internal_count: usize,
        relations: Vec<Word>,
        name: Option<String>,
    ) -> Result<Self> {
        let p = AdmissiblePresentation {
            genus,
            internal_count,
            relations,
            name,
        };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        if self.genus == 0 {
            return Err(Error::Admissibility("genus must be positive".into()));
        }
        let want = 2 * self.genus + self.internal_count;
        if self.relations.len() != want {
            return Err(Error::Admissibility(format!(
                "{} relations for g = {}, l = {}; expected 2g + l = {}",
                self.relations.len(),
                self.genus,
                self.internal_count,
                want
            )));
        }
        for (j, r) in self.relations.iter().enumerate() {
            for l in r.letters() {
                if !l.generator.in_range(self.genus, self.internal_count) {
                    return Err(Error::GeneratorIndex(format!(
                        "{} in relation {} (g = {}, l = {})",
                        l.generator,
                        j + 1,
                        self.genus,
                        self.internal_count
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn internal_count(&self) -> usize {
        self.internal_count
    }

    /// `2g`: the rank of `H₁` and the number of Laurent variables.
    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn generator_count(&self) -> usize {
        4 * self.genus + self.internal_count
    }

    pub fn relations(&self) -> &[Word] {
        &self.relations
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// All generators in presentation order.
    pub fn generators(&self) -> impl Iterator<Item = GeneratorRef> + '_ {
        (0..self.generator_count())
            .map(|p| GeneratorRef::at_position(p, self.genus, self.internal_count))
    }

    pub fn with_relations(&self, relations: Vec<Word>) -> Result<Self> {
        Self::new(
            self.genus,
            self.internal_count,
            relations,
            self.name.clone(),
        )
    }
}

/// Check the structural admissibility rules; returns the presentation.
pub fn validate(
    genus: usize,
    internal_count: usize,
    relations: Vec<Word>,
) -> Result<AdmissiblePresentation> {
    AdmissiblePresentation::new(genus, internal_count, relations, None)
}

/// Homology class of a word: the sum of its signed letter classes.
pub fn abelianize(w: &Word, h: &HomologyAssignment) -> ExponentVector {
    let mut acc = ExponentVector::zero(h.rank());
    for l in w.letters() {
        let c = h.class(l.generator);
        if l.inverse {
            acc = &acc - c;
        } else {
            acc += c;
        }
    }
    acc
}

/// Involution of the abelianized Fox derivative `∂w/∂x`.
///
/// An occurrence of `x` at position `i` contributes `+inv(ab(w[..i-1]))`; an
/// occurrence of `x⁻¹` contributes `-inv(ab(w[..i]))`, where `inv` negates the
/// exponent vector.
pub fn fox_derivative(w: &Word, x: GeneratorRef, h: &HomologyAssignment) -> LaurentPolynomial {
    let n = h.rank();
    let mut out = LaurentPolynomial::zero(n);
    let one = BigRational::one();
    let minus_one = -BigRational::one();
    let mut prefix = ExponentVector::zero(n);
    for l in w.letters() {
        let c = h.class(l.generator);
        if l.generator == x && !l.inverse {
            out.add_term(-&prefix, &one);
        }
        if l.inverse {
            prefix = &prefix - c;
        } else {
            prefix += c;
        }
        if l.generator == x && l.inverse {
            out.add_term(-&prefix, &minus_one);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_syntax() {
        let l: Letter = "-m3".parse().unwrap();
        assert_eq!(l, Letter::new(GeneratorRef::minus(3), true));
        assert_eq!(l.to_string(), "-m3");
        assert_eq!(
            "z10".parse::<Letter>().unwrap().generator,
            GeneratorRef::internal(10)
        );
        for bad in ["q3", "-m0", "m", "p-1", "z1x", "", "--m1", "M1"] {
            assert!(
                matches!(bad.parse::<Letter>(), Err(Error::Token(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn relation_count_rule() {
        let rels: Vec<Word> = (0..7).map(|_| "m1".parse().unwrap()).collect();
        assert!(matches!(validate(2, 4, rels), Err(Error::Admissibility(_))));
    }

    #[test]
    fn index_range_rule() {
        let mut rels: Vec<Word> = (0..8).map(|_| "m1 z1".parse().unwrap()).collect();
        rels[3] = "m4 z5".parse().unwrap();
        assert!(matches!(
            validate(2, 4, rels.clone()),
            Err(Error::GeneratorIndex(_))
        ));
        rels[3] = "m5".parse().unwrap();
        assert!(matches!(
            validate(2, 4, rels),
            Err(Error::GeneratorIndex(_))
        ));
    }

    #[test]
    fn positions_round_trip() {
        let (g, l) = (2, 3);
        for p in 0..(4 * g + l) {
            assert_eq!(GeneratorRef::at_position(p, g, l).position(g, l), p);
        }
        assert_eq!(GeneratorRef::plus(1).position(g, l), 7);
    }

    #[test]
    fn word_inverse_and_conjugate() {
        let w: Word = "m1 -z2 p1".parse().unwrap();
        assert_eq!(w.inverse().to_string(), "-p1 z2 -m1");
        let c = w.conjugate_by(&"z1".parse().unwrap());
        assert_eq!(c.to_string(), "z1 m1 -z2 p1 -z1");
    }
}
