//! Machine construction of the F-tilde presentation of a QFA-form entry:
//! new generators r_g = (g - eps(g))/(q-1), relations and Hopf data obtained
//! by substituting g = eps(g) + (q-1) r_g into the hat presentation and
//! dividing by the exact power of (q-1). Relations that admit no monic
//! orientation (the determinant expansions, grouplike-pair products) become
//! declared identities of the tilde presentation.

use crate::drinfeld::{AmbientImage, TildeData};
use crate::hopf::HopfData;
use crate::ncalg::{
    build_presentation, Classification, GenId, Generator, LatticeKind, LatticeSpec, NcElement,
    Presentation, RewriteRule, RuleKind, Word,
};
use crate::qcoeff::LaurentPoly;
use crate::tensor::TensorElement;
use std::collections::BTreeMap;

/// The straightening-only view of the hat presentation used to derive the
/// tilde rules: completion rules are dropped and each grouplike pair's
/// cancellation rules are replaced by the orientation-compatible swap
/// ginv g -> g ginv (both sides equal 1, so the swap holds in the algebra).
fn restricted(hat: &Presentation) -> Presentation {
    let mut rules: Vec<RewriteRule> = Vec::new();
    for r in &hat.rules {
        if r.kind == RuleKind::Completion {
            continue;
        }
        if r.lhs.len() == 2 {
            let (x, y) = (r.lhs.0[0], r.lhs.0[1]);
            if hat.gens[x].grouplike_inverse == Some(y) {
                // cancellation rule; replace the descending one by a swap
                if x > y {
                    rules.push(RewriteRule {
                        lhs: r.lhs.clone(),
                        rhs: NcElement::from_word(Word(vec![y, x])),
                        kind: RuleKind::Straightening,
                    });
                }
                continue;
            }
        }
        rules.push(r.clone());
    }
    build_presentation(
        format!("{}_restricted", hat.name),
        hat.gens.clone(),
        rules,
        HopfData::empty(),
        hat.lattice.clone(),
        None,
        Vec::new(),
        None,
        BTreeMap::new(),
        hat.classification,
    )
}

/// Rewrite a hat element as a k[q,q^-1]-combination of shifted monomials
/// prod (g - eps(g)), read as words in the tilde variables with an explicit
/// (q-1)-power per letter. Exact: each word expands through the binomial
/// g = eps(g) + (q-1) r_g position by position.
fn to_r(hat: &Presentation, x: &NcElement) -> NcElement {
    let mut out = NcElement::zero();
    for (w, c) in &x.terms {
        // iterate over subsets implicitly: letters with eps = 0 must be kept
        let mut partial: Vec<(Vec<GenId>, LaurentPoly)> = vec![(Vec::new(), c.clone())];
        for &g in &w.0 {
            let eps = &hat.hopf.counit[g];
            let mut next = Vec::new();
            for (word, coeff) in &partial {
                // keep the letter: contributes (q-1) r_g
                let mut kw = word.clone();
                kw.push(g);
                next.push((kw, coeff * &LaurentPoly::q_minus_1()));
                // drop the letter: contributes eps(g)
                if !eps.is_zero() {
                    next.push((word.clone(), coeff * eps));
                }
            }
            partial = next;
        }
        for (word, coeff) in partial {
            out.add_term(Word(word), coeff);
        }
    }
    out
}

fn shift_exact(hat_name: &str, what: &str, x: &NcElement, k: i64) -> NcElement {
    x.shift_q1(k)
        .unwrap_or_else(|_| panic!("{}: {} is not (q-1)^{} divisible", hat_name, what, -k))
}

/// Construct the full tilde data of a QFA entry. `tilde_names[g]` names the
/// tilde generator attached to hat generator g.
pub fn derive_f_tilde(hat: &Presentation, tilde_name: &str, tilde_names: &[&str]) -> TildeData {
    assert_eq!(tilde_names.len(), hat.gens.len());
    let restr = restricted(hat);
    let n = hat.gens.len();
    let gens: Vec<Generator> = (0..n)
        .map(|g| Generator {
            name: tilde_names[g].to_string(),
            pbw_index: g,
            weight: 1,
            grouplike_inverse: None,
            cartan: false,
        })
        .collect();

    // Straightening rules from the descending pairs.
    let mut rules = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let shifted = |g: GenId| {
                NcElement::gen(g).sub(&NcElement::scalar(hat.hopf.counit[g].clone()))
            };
            let prod = shifted(j).mul_raw(&shifted(i));
            let nf = restr.normal_form(&prod).expect("restricted NF");
            let expanded = to_r(hat, &nf);
            let rhs = shift_exact(&hat.name, &format!("pair ({}, {})", j, i), &expanded, -2);
            rules.push(RewriteRule {
                lhs: Word(vec![j, i]),
                rhs,
                kind: RuleKind::Straightening,
            });
        }
    }

    let mut tilde = build_presentation(
        tilde_name.to_string(),
        gens.clone(),
        rules.clone(),
        HopfData::empty(),
        LatticeSpec {
            kind: LatticeKind::Free,
            family: tilde_names.join(" "),
            grading: hat.lattice.grading.clone(),
        },
        None,
        Vec::new(),
        None,
        BTreeMap::new(),
        Classification::Quea,
    );

    // Residual identities from relations whose tilde image does not orient
    // (determinant expansions, grouplike cancellations).
    let mut identities: Vec<NcElement> = Vec::new();
    let mut relation_sources: Vec<NcElement> = hat
        .rules
        .iter()
        .map(|r| NcElement::from_word(r.lhs.clone()).sub(&r.rhs))
        .collect();
    if let Some(c) = &hat.central_quotient {
        relation_sources.push(c.clone());
    }
    for rel in &relation_sources {
        let expanded = to_r(hat, rel);
        if expanded.is_zero() {
            continue;
        }
        let v = expanded.min_coeff_valuation().unwrap() as i64;
        let reduced = shift_exact(&hat.name, "relation image", &expanded, -v);
        let nf = tilde.normal_form(&reduced).expect("tilde NF");
        if !nf.is_zero() && !identities.contains(&nf) {
            identities.push(nf);
        }
    }

    // Hopf data: Delta(r_g) = (expand(Delta(g)) - eps(g) 1(x)1)/(q-1), etc.
    let mut coproduct = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    for g in 0..n {
        let eps = hat.hopf.counit[g].clone();
        // coproduct
        let d = &hat.hopf.coproduct[g];
        let mut expanded = TensorElement::zero(2);
        for (slots, c) in &d.terms {
            let left = to_r(hat, &NcElement::from_word(slots[0].clone()));
            let right = to_r(hat, &NcElement::from_word(slots[1].clone()));
            for (lw, lc) in &left.terms {
                for (rw, rc) in &right.terms {
                    expanded.add_term(vec![lw.clone(), rw.clone()], &(lc * rc) * c);
                }
            }
        }
        let expanded = expanded.sub(&TensorElement::scalar(2, eps.clone()));
        let dt = expanded
            .shift_q1(-1)
            .unwrap_or_else(|_| panic!("{}: coproduct of {} not divisible", hat.name, tilde_names[g]));
        coproduct.push(crate::tensor::normalize(&tilde, &dt).expect("tilde NF"));
        // counit: (eps(g) - eps(g))/(q-1) = 0
        counit.push(LaurentPoly::zero());
        // antipode
        let s = hat.normal_form(&hat.hopf.antipode[g]).expect("hat NF");
        let expanded = to_r(hat, &s).sub(&NcElement::scalar(eps));
        let st = shift_exact(&hat.name, "antipode image", &expanded, -1);
        antipode.push(tilde.normal_form(&st).expect("tilde NF"));
    }

    tilde = build_presentation(
        tilde.name.clone(),
        gens,
        rules,
        HopfData { coproduct, counit, antipode },
        tilde.lattice.clone(),
        None,
        identities,
        None,
        BTreeMap::new(),
        Classification::Quea,
    );
    tilde.validate();

    let recipe = (0..n)
        .map(|g| AmbientImage {
            num: NcElement::gen(g).sub(&NcElement::scalar(hat.hopf.counit[g].clone())),
            den: 1,
        })
        .collect();
    TildeData { presentation: tilde, recipe }
}

/// The double-tilde expressions of a QFA entry: every hat generator is
/// eps(g) + dt(r_g) where dt(r_g) = (q-1) r_g = g - eps(g).
pub fn f_tilde_dt_exprs(hat: &Presentation) -> Vec<(GenId, NcElement)> {
    (0..hat.gens.len())
        .map(|g| {
            let mut e = NcElement::scalar(hat.hopf.counit[g].clone());
            e.add_term(Word(vec![g]), LaurentPoly::one());
            (g, e)
        })
        .collect()
}
