use std::collections::BTreeMap;
use std::fmt;

use super::poly::{GenId, NCPoly, Word};
use crate::error::{Error, Result};
use crate::scalars::QScalar;

/// A generator of a presented algebra. `slot` is the tensor position
/// (0 for an untensored algebra, 1.. for tensor factors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: GenId,
    pub name: String,
    pub slot: u16,
}

impl Generator {
    pub fn label(&self) -> String {
        if self.slot > 0 {
            format!("{}@{}", self.name, self.slot)
        } else {
            self.name.clone()
        }
    }
}

/// A rewrite rule `lhs.0 · lhs.1 → rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: (GenId, GenId),
    pub rhs: NCPoly,
}

/// An algebra given by generators and two-letter rewrite rules.
///
/// Generator ids double as their rank in the normal-word order. Every
/// rule strictly decreases words in the degree-lexicographic order, so
/// rewriting always terminates. Confluence is checked separately by
/// [`check_confluence`](super::check_confluence).
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    gens: Vec<Generator>,
    rules: Vec<Rule>,
    inverse_pairs: Vec<(GenId, GenId)>,
    // first rule index per ordered letter pair, row-major
    table: Vec<Option<usize>>,
    // generator offset of each tensor factor; empty when untensored
    factors: Vec<GenId>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.gens == other.gens && self.rules == other.rules
    }
}

/// Builds a [`Presentation`] by generator name.
#[derive(Debug)]
pub struct PresentationBuilder {
    name: String,
    gens: Vec<Generator>,
    rules: Vec<Rule>,
    inverse_pairs: Vec<(GenId, GenId)>,
    errors: Vec<String>,
}

impl PresentationBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        PresentationBuilder {
            name: name.into(),
            gens: Vec::new(),
            rules: Vec::new(),
            inverse_pairs: Vec::new(),
            errors: Vec::new(),
        }
    }

    /// Appends generators in increasing order.
    pub fn gens(mut self, names: &[&str]) -> Self {
        for n in names {
            self.push_gen(n, 0);
        }
        self
    }

    fn push_gen(&mut self, name: &str, slot: u16) -> GenId {
        let id = self.gens.len() as GenId;
        if self.gens.iter().any(|g| g.name == name && g.slot == slot) {
            self.errors.push(format!("duplicate generator {name}"));
        }
        self.gens.push(Generator {
            id,
            name: name.to_string(),
            slot,
        });
        id
    }

    fn id(&mut self, name: &str) -> GenId {
        match self.gens.iter().position(|g| g.name == name) {
            Some(i) => i as GenId,
            None => {
                self.errors.push(format!("unknown generator {name}"));
                0
            }
        }
    }

    /// Builds an element from `(coefficient, word)` pairs.
    pub fn poly(&mut self, terms: &[(QScalar, &[&str])]) -> NCPoly {
        let mut p = NCPoly::zero();
        for (c, w) in terms {
            let word = Word(w.iter().map(|n| self.id(n)).collect());
            p.add_term(word, c);
        }
        p
    }

    /// Adds the rule `a · b → rhs`.
    pub fn rule(mut self, a: &str, b: &str, rhs: &[(QScalar, &[&str])]) -> Self {
        let lhs = (self.id(a), self.id(b));
        let rhs = self.poly(rhs);
        self.rules.push(Rule { lhs, rhs });
        self
    }

    pub fn rule_poly(mut self, lhs: (GenId, GenId), rhs: NCPoly) -> Self {
        self.rules.push(Rule { lhs, rhs });
        self
    }

    /// Declares `g · h = h · g = 1`.
    pub fn inverse_pair(mut self, g: &str, h: &str) -> Self {
        let (g, h) = (self.id(g), self.id(h));
        self.inverse_pairs.push((g, h));
        self
    }

    pub fn build(self) -> Result<Presentation> {
        if let Some(e) = self.errors.first() {
            return Err(Error::Presentation(e.clone()));
        }
        Presentation::from_parts(self.name, self.gens, self.rules, self.inverse_pairs, vec![])
    }
}

impl Presentation {
    fn from_parts(
        name: String,
        gens: Vec<Generator>,
        mut rules: Vec<Rule>,
        inverse_pairs: Vec<(GenId, GenId)>,
        factors: Vec<GenId>,
    ) -> Result<Self> {
        let n = gens.len();
        for &(g, h) in &inverse_pairs {
            for lhs in [(g, h), (h, g)] {
                if !rules.iter().any(|r| r.lhs == lhs) {
                    rules.push(Rule {
                        lhs,
                        rhs: NCPoly::one(),
                    });
                }
            }
        }
        let mut table = vec![None; n * n];
        for (i, r) in rules.iter().enumerate() {
            let (a, b) = r.lhs;
            if a as usize >= n || b as usize >= n {
                return Err(Error::Presentation(format!(
                    "rule {i} uses an unknown generator"
                )));
            }
            let lhs = Word(vec![a, b]);
            for (w, c) in r.rhs.terms() {
                if w.letters().iter().any(|&g| g as usize >= n) {
                    return Err(Error::Presentation(format!(
                        "rule {i} replacement uses an unknown generator"
                    )));
                }
                if *w >= lhs {
                    return Err(Error::Presentation(format!(
                        "rule {}.{} does not decrease the word order",
                        gens[a as usize].label(),
                        gens[b as usize].label()
                    )));
                }
                if !c.is_rho_free() {
                    return Err(Error::Presentation(format!(
                        "rule {}.{} has a coefficient involving r",
                        gens[a as usize].label(),
                        gens[b as usize].label()
                    )));
                }
            }
            let slot = &mut table[a as usize * n + b as usize];
            if slot.is_none() {
                *slot = Some(i);
            }
        }
        Ok(Presentation {
            name,
            gens,
            rules,
            inverse_pairs,
            table,
            factors,
        })
    }

    pub fn builder(name: impl Into<String>) -> PresentationBuilder {
        PresentationBuilder::new(name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn inverse_pairs(&self) -> &[(GenId, GenId)] {
        &self.inverse_pairs
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// Looks up a generator by `name` or `name@slot`.
    pub fn gen_id(&self, label: &str) -> Option<GenId> {
        self.gens
            .iter()
            .position(|g| g.label() == label)
            .map(|i| i as GenId)
    }

    /// The generator `label` as an element; panics if absent.
    pub fn g(&self, label: &str) -> NCPoly {
        let id = self
            .gen_id(label)
            .unwrap_or_else(|| panic!("no generator {label} in {}", self.name));
        NCPoly::gen(id)
    }

    /// Product of named generators, e.g. `word(&["A", "D"])`, normal-formed.
    pub fn word(&self, labels: &[&str]) -> NCPoly {
        labels
            .iter()
            .fold(NCPoly::one(), |acc, l| self.mul(&acc, &self.g(l)))
    }

    pub(crate) fn rule_for(&self, a: GenId, b: GenId) -> Option<&Rule> {
        let n = self.gens.len();
        self.table[a as usize * n + b as usize].map(|i| &self.rules[i])
    }

    fn reducible_positions(&self, w: &Word, out: &mut Vec<usize>) {
        out.clear();
        for (i, pair) in w.letters().windows(2).enumerate() {
            if self.rule_for(pair[0], pair[1]).is_some() {
                out.push(i);
            }
        }
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        w.letters()
            .windows(2)
            .all(|p| self.rule_for(p[0], p[1]).is_none())
    }

    /// Reduces `p` to normal form, rewriting the leftmost reducible pair of
    /// the largest pending word first.
    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        self.normal_form_with(p, |_| 0).0
    }

    /// Normal form with a caller-chosen redex: `choose` receives the
    /// reducible positions of the current word and returns an index into
    /// that list. Also returns the number of rewrite steps taken.
    pub fn normal_form_with(
        &self,
        p: &NCPoly,
        mut choose: impl FnMut(&[usize]) -> usize,
    ) -> (NCPoly, usize) {
        let mut pending = p.clone();
        let mut done = NCPoly::zero();
        let mut positions = Vec::new();
        let mut steps = 0;
        while let Some((w, c)) = pending.pop_last() {
            self.reducible_positions(&w, &mut positions);
            if positions.is_empty() {
                // rewrites only produce smaller words, so w is final
                done.insert_normal(w, c);
                continue;
            }
            let i = positions[choose(&positions).min(positions.len() - 1)];
            let letters = w.letters();
            let rule = self
                .rule_for(letters[i], letters[i + 1])
                .expect("reducible position");
            steps += 1;
            for (rw, rc) in rule.rhs.terms() {
                let mut v = Vec::with_capacity(letters.len() + rw.len());
                v.extend_from_slice(&letters[..i]);
                v.extend_from_slice(rw.letters());
                v.extend_from_slice(&letters[i + 2..]);
                pending.add_term(Word(v), &(&c * rc));
            }
        }
        (done, steps)
    }

    /// Product in the algebra.
    pub fn mul(&self, p: &NCPoly, r: &NCPoly) -> NCPoly {
        self.normal_form(&p.mul_free(r))
    }

    pub fn commutator(&self, p: &NCPoly, r: &NCPoly) -> NCPoly {
        self.normal_form(&p.mul_free(r).sub(&r.mul_free(p)))
    }

    pub fn pow(&self, p: &NCPoly, n: u32) -> NCPoly {
        (0..n).fold(NCPoly::one(), |acc, _| self.mul(&acc, p))
    }

    /// Number of tensor factors (0 if this is not a tensor presentation).
    pub fn tensor_factors(&self) -> usize {
        self.factors.len()
    }

    /// Carries an element of the `k`-th tensor factor (0-based) into this
    /// tensor presentation.
    pub fn inject(&self, k: usize, p: &NCPoly) -> NCPoly {
        let off = self.factors[k];
        p.map_letters(|g| g + off)
    }

    /// `a ⊗ b` for a two-factor tensor presentation.
    pub fn tensor_elem(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.mul(&self.inject(0, a), &self.inject(1, b))
    }

    /// The flip `a ⊗ b ↦ b ⊗ a` on a tensor square.
    pub fn flip(&self, p: &NCPoly) -> Result<NCPoly> {
        if self.factors.len() != 2 {
            return Err(Error::Presentation("flip needs two tensor factors".into()));
        }
        let off = self.factors[1];
        let n = self.gens.len() as GenId;
        if 2 * off != n {
            return Err(Error::Presentation(
                "flip needs equal tensor factors".into(),
            ));
        }
        Ok(self.normal_form(&p.map_letters(|g| if g < off { g + off } else { g - off })))
    }

    /// Specializes every rule coefficient at `s = 1`.
    pub fn specialize_at_one(&self) -> Result<Presentation> {
        let rules = self
            .rules
            .iter()
            .map(|r| {
                Ok(Rule {
                    lhs: r.lhs,
                    rhs: specialize_poly_at_one(&r.rhs)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Presentation::from_parts(
            format!("{}@s=1", self.name),
            self.gens.clone(),
            rules,
            self.inverse_pairs.clone(),
            self.factors.clone(),
        )
    }

    /// Canonical text: terms in increasing word order joined by " + ",
    /// each `coeff * g1.g2`; a unit coefficient or the empty word is omitted.
    pub fn render(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(p.len());
        for (w, c) in p.terms() {
            let word = w
                .letters()
                .iter()
                .map(|&g| self.gens[g as usize].label())
                .collect::<Vec<_>>()
                .join(".");
            let coeff = if c.is_compound() {
                format!("({c})")
            } else {
                c.to_string()
            };
            parts.push(if w.is_empty() {
                coeff
            } else if c.is_one() {
                word
            } else {
                format!("{coeff} * {word}")
            });
        }
        parts.join(" + ")
    }

    pub fn display<'a>(&'a self, p: &'a NCPoly) -> impl fmt::Display + 'a {
        Rendered { pres: self, p }
    }
}

struct Rendered<'a> {
    pres: &'a Presentation,
    p: &'a NCPoly,
}

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pres.render(self.p))
    }
}

/// Coefficients of `p` evaluated at `s = 1`.
pub fn specialize_poly_at_one(p: &NCPoly) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(w.clone(), &QScalar::from_rational(&c.eval_at_one()?));
    }
    Ok(out)
}

/// Tensor product of presentations: generators retagged with slots 1, 2, …
/// in factor order, slot-local rules kept, generators in different slots
/// commuting.
pub fn tensor_presentation(p1: &Presentation, p2: &Presentation) -> Presentation {
    tensor_power(&[p1, p2])
}

pub fn tensor_power(factors: &[&Presentation]) -> Presentation {
    let mut gens = Vec::new();
    let mut rules = Vec::new();
    let mut inverse_pairs = Vec::new();
    let mut offsets = Vec::new();
    for (k, p) in factors.iter().enumerate() {
        let off = gens.len() as GenId;
        offsets.push(off);
        for g in &p.gens {
            gens.push(Generator {
                id: g.id + off,
                name: g.name.clone(),
                slot: (k + 1) as u16,
            });
        }
        for r in &p.rules {
            rules.push(Rule {
                lhs: (r.lhs.0 + off, r.lhs.1 + off),
                rhs: r.rhs.map_letters(|g| g + off),
            });
        }
        inverse_pairs.extend(p.inverse_pairs.iter().map(|&(a, b)| (a + off, b + off)));
    }
    let n = gens.len() as GenId;
    let slot_of = |g: GenId| offsets.iter().rposition(|&o| o <= g).unwrap_or(0);
    for a in 0..n {
        for b in 0..a {
            if slot_of(a) != slot_of(b) {
                rules.push(Rule {
                    lhs: (a, b),
                    rhs: NCPoly::word(&[b, a]),
                });
            }
        }
    }
    let name = factors
        .iter()
        .map(|p| p.name.as_str())
        .collect::<Vec<_>>()
        .join("⊗");
    Presentation::from_parts(name, gens, rules, inverse_pairs, offsets)
        .expect("tensor of valid presentations is valid")
}

/// Applies the algebra map determined by `images` (indexed by the source
/// generator id) to `p`, reducing in `target`.
pub fn apply_morphism(
    source: &Presentation,
    images: &BTreeMap<GenId, NCPoly>,
    p: &NCPoly,
    target: &Presentation,
) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NCPoly::constant(c.clone());
        for &g in w.letters() {
            let img = images.get(&g).ok_or_else(|| {
                Error::MissingImage(
                    source
                        .gens
                        .get(g as usize)
                        .map(Generator::label)
                        .unwrap_or_else(|| g.to_string()),
                )
            })?;
            acc = target.mul(&acc, img);
            if acc.is_zero() {
                break;
            }
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Free-function forms of the reduction operations.
pub fn normal_form(p: &NCPoly, pres: &Presentation) -> NCPoly {
    pres.normal_form(p)
}

pub fn nc_mul(p: &NCPoly, r: &NCPoly, pres: &Presentation) -> NCPoly {
    pres.mul(p, r)
}

pub fn commutator(p: &NCPoly, r: &NCPoly, pres: &Presentation) -> NCPoly {
    pres.commutator(p, r)
}

/// First defining relation of `source` whose image under `images` does not
/// vanish in `target`, i.e. a reason the assignment is not an algebra map.
pub fn morphism_violation(
    source: &Presentation,
    images: &BTreeMap<GenId, NCPoly>,
    target: &Presentation,
) -> Result<Option<String>> {
    for rule in source.rules() {
        let lhs = NCPoly::word(&[rule.lhs.0, rule.lhs.1]);
        let diff = apply_morphism(source, images, &lhs.sub(&rule.rhs), target)?;
        if !diff.is_zero() {
            return Ok(Some(format!(
                "relation {} = {} maps to {}",
                source.render(&lhs),
                source.render(&rule.rhs),
                target.render(&diff)
            )));
        }
    }
    Ok(None)
}
