use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::scalars::QScalar;

/// Index of a generator inside its presentation; the index is also its rank
/// in the generator order.
pub type GenId = u16;

/// A monomial in noncommuting generators. The empty word is the unit.
///
/// Ordered by length first, then lexicographically by generator rank.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
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

impl From<&[GenId]> for Word {
    fn from(v: &[GenId]) -> Self {
        Word(v.to_vec())
    }
}

/// Finite linear combination of words with [`QScalar`] coefficients.
///
/// No zero coefficient is ever stored. Products here are free
/// (concatenation); reduction modulo relations lives on
/// [`Presentation`](super::Presentation).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, QScalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(QScalar::one())
    }

    pub fn constant(c: QScalar) -> Self {
        Self::monomial(Word::unit(), c)
    }

    pub fn monomial(w: Word, c: QScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn word(letters: &[GenId]) -> Self {
        Self::monomial(Word(letters.to_vec()), QScalar::one())
    }

    pub fn gen(g: GenId) -> Self {
        Self::word(&[g])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, QScalar)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &QScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> QScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Coefficient of the unit word.
    pub fn constant_term(&self) -> QScalar {
        self.coefficient(&Word::unit())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Word::is_empty)
    }

    pub fn max_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn pop_last(&mut self) -> Option<(Word, QScalar)> {
        self.terms.pop_last()
    }

    pub(crate) fn insert_normal(&mut self, w: Word, c: QScalar) {
        self.terms.insert(w, c);
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&QScalar::from_int(-1))
    }

    pub fn scale(&self, c: &QScalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Free (unreduced) product: bilinear extension of word concatenation.
    pub fn mul_free(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    /// Renames every letter with `f`.
    pub fn map_letters(&self, f: impl Fn(GenId) -> GenId) -> NCPoly {
        NCPoly::from_terms(
            self.terms
                .iter()
                .map(|(w, c)| (Word(w.0.iter().map(|&g| f(g)).collect()), c.clone())),
        )
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&QScalar) -> QScalar) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

impl From<QScalar> for NCPoly {
    fn from(c: QScalar) -> Self {
        NCPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order_is_degree_then_lex() {
        let a = Word(vec![2]);
        let b = Word(vec![0, 0]);
        let c = Word(vec![0, 1]);
        assert!(a < b);
        assert!(b < c);
        assert!(Word::unit() < a);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = NCPoly::gen(0);
        assert!(x.sub(&x).is_zero());
        let mut p = NCPoly::zero();
        p.add_term(Word(vec![1]), &QScalar::one());
        p.add_term(Word(vec![1]), &QScalar::from_int(-1));
        assert!(p.is_zero());
    }

    #[test]
    fn free_product_concatenates() {
        let x = NCPoly::gen(0);
        let y = NCPoly::gen(1);
        let xy = x.mul_free(&y);
        assert_eq!(xy, NCPoly::word(&[0, 1]));
        assert_ne!(xy, y.mul_free(&x));
        assert_eq!(x.mul_free(&NCPoly::one()), x);
    }
}
