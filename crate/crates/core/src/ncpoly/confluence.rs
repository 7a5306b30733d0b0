use super::poly::{NCPoly, Word};
use super::presentation::Presentation;
use crate::report::CheckReport;

/// One ambiguity of the rewrite system: a word with two distinct one-step
/// reductions.
#[derive(Debug, Clone)]
pub struct Ambiguity {
    pub word: Word,
    pub left: NCPoly,
    pub right: NCPoly,
}

/// All overlap (`ab·c` vs `a·bc`) and inclusion (two rules on the same
/// pair) ambiguities, each with its two one-step reducts.
pub fn ambiguities(pres: &Presentation) -> Vec<Ambiguity> {
    let rules = pres.rules();
    let mut out = Vec::new();
    for (i, r1) in rules.iter().enumerate() {
        for r2 in &rules[i + 1..] {
            if r1.lhs == r2.lhs {
                out.push(Ambiguity {
                    word: Word(vec![r1.lhs.0, r1.lhs.1]),
                    left: r1.rhs.clone(),
                    right: r2.rhs.clone(),
                });
            }
        }
    }
    for r1 in rules {
        for r2 in rules {
            if r1.lhs.1 != r2.lhs.0 {
                continue;
            }
            let (a, b, c) = (r1.lhs.0, r1.lhs.1, r2.lhs.1);
            out.push(Ambiguity {
                word: Word(vec![a, b, c]),
                left: r1.rhs.mul_free(&NCPoly::gen(c)),
                right: NCPoly::gen(a).mul_free(&r2.rhs),
            });
        }
    }
    out
}

/// Diamond-lemma check: every ambiguity must reduce to one normal form.
pub fn check_confluence(pres: &Presentation) -> CheckReport {
    let all = ambiguities(pres);
    let mut witness = None;
    for amb in &all {
        let l = pres.normal_form(&amb.left);
        let r = pres.normal_form(&amb.right);
        if l != r {
            let word = NCPoly::monomial(amb.word.clone(), crate::scalars::QScalar::one());
            witness = Some(format!(
                "ambiguity {} resolves to {} and {}",
                pres.render(&word),
                pres.render(&l),
                pres.render(&r)
            ));
            break;
        }
    }
    CheckReport::exact(format!("confluence-{}", pres.name()), witness)
        .with_notes(format!("{} ambiguities resolved", all.len()))
}
