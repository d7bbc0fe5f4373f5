//! Hopf structure maps extended from generator data: counit, coproduct,
//! antipode, iterated coproducts, and Drinfeld's delta maps
//! delta_n = (id - eps)^(x)n o Delta^n, plus the axiom checker.

use crate::ncalg::{NcElement, NcError, Presentation, Word};
use crate::qcoeff::LaurentPoly;
use crate::tensor::{self, TensorElement};

/// Per-generator structure maps; indexed by generator id.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfData {
    pub coproduct: Vec<TensorElement>,
    pub counit: Vec<LaurentPoly>,
    pub antipode: Vec<NcElement>,
}

impl HopfData {
    pub fn empty() -> Self {
        HopfData { coproduct: Vec::new(), counit: Vec::new(), antipode: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.coproduct.is_empty()
    }
}

/// Multiplicative-linear extension of the counit.
pub fn apply_counit(p: &Presentation, x: &NcElement) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (w, c) in &x.terms {
        let mut t = c.clone();
        for &g in &w.0 {
            if t.is_zero() {
                break;
            }
            t = &t * &p.hopf.counit[g];
        }
        out += &t;
    }
    out
}

fn counit_of_word(p: &Presentation, w: &Word) -> LaurentPoly {
    let mut t = LaurentPoly::one();
    for &g in &w.0 {
        if t.is_zero() {
            break;
        }
        t = &t * &p.hopf.counit[g];
    }
    t
}

/// Algebra-map extension of the coproduct; output normalized.
pub fn apply_coproduct(p: &Presentation, x: &NcElement) -> Result<TensorElement, NcError> {
    let mut out = TensorElement::zero(2);
    for (w, c) in &x.terms {
        let mut t = TensorElement::unit(2);
        for &g in &w.0 {
            t = tensor::tensor_multiply(p, &t, &p.hopf.coproduct[g])?;
        }
        out = out.add(&t.scale(c));
    }
    Ok(out)
}

/// Anti-multiplicative-linear extension of the antipode; output normalized.
pub fn apply_antipode(p: &Presentation, x: &NcElement) -> Result<NcElement, NcError> {
    let mut out = NcElement::zero();
    for (w, c) in &x.terms {
        let mut t = NcElement::one();
        for &g in w.0.iter().rev() {
            t = p.multiply(&t, &p.hopf.antipode[g])?;
        }
        out = out.add(&t.scale(c));
    }
    p.normal_form(&out)
}

/// Delta^0 = counit (arity 0), Delta^1 = id, Delta^2 = Delta, and
/// Delta^n = (Delta (x) id^(n-2)) o Delta^{n-1} for n > 2.
pub fn iterated_coproduct(
    p: &Presentation,
    x: &NcElement,
    n: usize,
) -> Result<TensorElement, NcError> {
    match n {
        0 => Ok(TensorElement::term(Vec::new(), apply_counit(p, x))),
        1 => {
            let nf = p.normal_form(x)?;
            let mut t = TensorElement::zero(1);
            for (w, c) in &nf.terms {
                t.add_term(vec![w.clone()], c.clone());
            }
            Ok(t)
        }
        _ => {
            let prev = iterated_coproduct(p, x, n - 1)?;
            // Apply Delta to slot 0 of every term.
            let mut out = TensorElement::zero(n);
            for (slots, c) in &prev.terms {
                let d0 = apply_coproduct(p, &NcElement::from_word(slots[0].clone()))?;
                for (d_slots, dc) in &d0.terms {
                    let mut s = Vec::with_capacity(n);
                    s.push(d_slots[0].clone());
                    s.push(d_slots[1].clone());
                    s.extend_from_slice(&slots[1..]);
                    out.add_term(s, c * dc);
                }
            }
            Ok(out)
        }
    }
}

/// delta_n = (id - eps)^(x)n o Delta^n; delta_0 = eps, delta_1 = id - eps(.)1.
pub fn delta_n(p: &Presentation, x: &NcElement, n: usize) -> Result<TensorElement, NcError> {
    let mut t = iterated_coproduct(p, x, n)?;
    // Apply (id - eps) slotwise: replace slot s word w by w - eps(w) 1.
    for s in 0..n {
        let mut next = TensorElement::zero(n);
        for (slots, c) in &t.terms {
            next.add_term(slots.clone(), c.clone());
            let e = counit_of_word(p, &slots[s]);
            if !e.is_zero() {
                let mut s2 = slots.clone();
                s2[s] = Word::empty();
                next.add_term(s2, -&(&e * c));
            }
        }
        t = next;
    }
    Ok(t)
}

/// Slot embedding j_S: H^(x)k -> H^(x)n for an ordered subset S of {0..n-1};
/// slots outside S are filled with 1.
pub fn slot_embed(t: &TensorElement, subset: &[usize], n: usize) -> TensorElement {
    assert_eq!(t.arity, subset.len());
    let mut out = TensorElement::zero(n);
    for (slots, c) in &t.terms {
        let mut s = vec![Word::empty(); n];
        for (i, &pos) in subset.iter().enumerate() {
            s[pos] = slots[i].clone();
        }
        out.add_term(s, c.clone());
    }
    out
}

/// delta_n computed by inclusion-exclusion over subsets:
/// delta_Sigma = sum over Psi subset of Sigma of (-1)^(n-|Psi|) Delta_Psi,
/// with Delta_Psi = j_Psi o Delta^|Psi|.
pub fn delta_via_subsets(
    p: &Presentation,
    x: &NcElement,
    n: usize,
) -> Result<TensorElement, NcError> {
    if n == 0 {
        return Ok(TensorElement::term(Vec::new(), apply_counit(p, x)));
    }
    let mut out = TensorElement::zero(n);
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let k = subset.len();
        let dk = iterated_coproduct(p, x, k)?;
        let emb = if k == 0 {
            // Delta_empty = Delta^0 = eps, embedded as eps(x) * 1^(x)n
            TensorElement::scalar(n, apply_counit(p, x))
        } else {
            slot_embed(&dk, &subset, n)
        };
        let sign = if (n - k) % 2 == 0 {
            LaurentPoly::one()
        } else {
            -&LaurentPoly::one()
        };
        out = out.add(&emb.scale(&sign));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct HopfReport {
    pub items: Vec<CheckItem>,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    fn push(&mut self, name: String, pass: bool, detail: String) {
        self.items.push(CheckItem { name, pass, detail });
    }
}

/// Verify the presentation's Hopf data: (i) Delta, eps, S respect every
/// relation; (ii) coassociativity on generators; (iii) counit laws;
/// (iv) antipode convolution laws. Failures are report entries.
pub fn check_hopf(p: &Presentation, sample_budget: usize) -> HopfReport {
    let mut rep = HopfReport::default();
    let mut budget = sample_budget;

    let mut relations: Vec<(String, NcElement)> = Vec::new();
    for r in &p.rules {
        let rel = NcElement::from_word(r.lhs.clone()).sub(&r.rhs);
        relations.push((format!("relation {}", p.render_word(&r.lhs)), rel));
    }
    for (i, id) in p.identities.iter().enumerate() {
        relations.push((format!("identity #{}", i + 1), id.clone()));
    }
    if let Some(c) = &p.central_quotient {
        relations.push(("central quotient".to_string(), c.clone()));
    }

    for (name, rel) in &relations {
        if budget == 0 {
            break;
        }
        budget -= 1;
        // counit respects the relation
        let e = apply_counit(p, rel);
        rep.push(format!("counit respects {}", name), e.is_zero(), e.to_string());
        // coproduct respects the relation
        match apply_coproduct(p, rel) {
            Ok(d) => match tensor::is_true_zero(p, &d) {
                Ok(z) => rep.push(
                    format!("coproduct respects {}", name),
                    z,
                    if z { String::new() } else { tensor::render(p, &d) },
                ),
                Err(err) => rep.push(format!("coproduct respects {}", name), false, err.to_string()),
            },
            Err(err) => rep.push(format!("coproduct respects {}", name), false, err.to_string()),
        }
        // antipode respects the relation (S is an anti-homomorphism, so the
        // image of the relation must vanish)
        match apply_antipode(p, rel) {
            Ok(s) => match p.is_true_zero(&s) {
                Ok(z) => rep.push(
                    format!("antipode respects {}", name),
                    z,
                    if z { String::new() } else { p.render(&s) },
                ),
                Err(err) => rep.push(format!("antipode respects {}", name), false, err.to_string()),
            },
            Err(err) => rep.push(format!("antipode respects {}", name), false, err.to_string()),
        }
    }

    for g in 0..p.gens.len() {
        let gname = p.gens[g].name.clone();
        let x = NcElement::gen(g);
        // (ii) coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
        let check = (|| -> Result<(bool, String), NcError> {
            let d = apply_coproduct(p, &x)?;
            let mut lhs = TensorElement::zero(3);
            let mut rhs = TensorElement::zero(3);
            for (slots, c) in &d.terms {
                let d0 = apply_coproduct(p, &NcElement::from_word(slots[0].clone()))?;
                for (ds, dc) in &d0.terms {
                    lhs.add_term(vec![ds[0].clone(), ds[1].clone(), slots[1].clone()], c * dc);
                }
                let d1 = apply_coproduct(p, &NcElement::from_word(slots[1].clone()))?;
                for (ds, dc) in &d1.terms {
                    rhs.add_term(vec![slots[0].clone(), ds[0].clone(), ds[1].clone()], c * dc);
                }
            }
            let diff = lhs.sub(&rhs);
            let z = tensor::is_true_zero(p, &diff)?;
            Ok((z, if z { String::new() } else { tensor::render(p, &diff) }))
        })();
        match check {
            Ok((z, d)) => rep.push(format!("coassociativity on {}", gname), z, d),
            Err(e) => rep.push(format!("coassociativity on {}", gname), false, e.to_string()),
        }
        // (iii) counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
        let check = (|| -> Result<(bool, String), NcError> {
            let d = apply_coproduct(p, &x)?;
            let mut left = NcElement::zero();
            let mut right = NcElement::zero();
            for (slots, c) in &d.terms {
                left.add_term(slots[1].clone(), &counit_of_word(p, &slots[0]) * c);
                right.add_term(slots[0].clone(), &counit_of_word(p, &slots[1]) * c);
            }
            let dl = p.normal_form(&left.sub(&x))?;
            let dr = p.normal_form(&right.sub(&x))?;
            let zl = p.is_true_zero(&dl)?;
            let zr = p.is_true_zero(&dr)?;
            Ok((
                zl && zr,
                if zl && zr {
                    String::new()
                } else {
                    format!("left: {}, right: {}", p.render(&dl), p.render(&dr))
                },
            ))
        })();
        match check {
            Ok((z, d)) => rep.push(format!("counit laws on {}", gname), z, d),
            Err(e) => rep.push(format!("counit laws on {}", gname), false, e.to_string()),
        }
        // (iv) antipode convolution: m(S (x) id)Delta = eps(.)1 = m(id (x) S)Delta
        let check = (|| -> Result<(bool, String), NcError> {
            let d = apply_coproduct(p, &x)?;
            let target = NcElement::scalar(p.hopf.counit[g].clone());
            let mut left = NcElement::zero();
            let mut right = NcElement::zero();
            for (slots, c) in &d.terms {
                let s0 = apply_antipode(p, &NcElement::from_word(slots[0].clone()))?;
                let prod = p.multiply(&s0, &NcElement::from_word(slots[1].clone()))?;
                left = left.add(&prod.scale(c));
                let s1 = apply_antipode(p, &NcElement::from_word(slots[1].clone()))?;
                let prod = p.multiply(&NcElement::from_word(slots[0].clone()), &s1)?;
                right = right.add(&prod.scale(c));
            }
            let dl = p.normal_form(&left.sub(&target))?;
            let dr = p.normal_form(&right.sub(&target))?;
            let zl = p.is_true_zero(&dl)?;
            let zr = p.is_true_zero(&dr)?;
            Ok((
                zl && zr,
                if zl && zr {
                    String::new()
                } else {
                    format!("left: {}, right: {}", p.render(&dl), p.render(&dr))
                },
            ))
        })();
        match check {
            Ok((z, d)) => rep.push(format!("antipode laws on {}", gname), z, d),
            Err(e) => rep.push(format!("antipode laws on {}", gname), false, e.to_string()),
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ncalg::lin;

    #[test]
    fn counit_examples() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let p = &entry.presentation;
        assert!(apply_counit(p, &NcElement::one()).is_one());
        assert!(apply_counit(p, &p.resolve("E").unwrap()).is_zero());
        // K = 1 + (q-1)H has counit 1
        let k = p.resolve("K").unwrap();
        assert!(apply_counit(p, &k).is_one());
    }

    #[test]
    fn coproduct_of_unit_and_e() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let p = &entry.presentation;
        assert_eq!(
            apply_coproduct(p, &NcElement::one()).unwrap(),
            TensorElement::unit(2)
        );
        // Delta(E) = E (x) 1 + K (x) E with K = 1 + (q-1)H expanded
        let de = apply_coproduct(p, &p.resolve("E").unwrap()).unwrap();
        let e = p.gen_id("E").unwrap();
        let h = p.gen_id("H").unwrap();
        let mut expected = TensorElement::zero(2);
        expected.add_term(vec![Word::single(e), Word::empty()], LaurentPoly::one());
        expected.add_term(vec![Word::empty(), Word::single(e)], LaurentPoly::one());
        expected.add_term(
            vec![Word::single(h), Word::single(e)],
            LaurentPoly::q_minus_1(),
        );
        assert_eq!(de, expected);
    }

    #[test]
    fn antipode_examples() {
        let entry = catalog::get("Fq_SL2_hat").unwrap();
        let p = &entry.presentation;
        assert_eq!(apply_antipode(p, &NcElement::one()).unwrap(), NcElement::one());
        // Axiom-consistent antipode: S(b) = -q^-1 b (see decisions ledger on
        // the printed table), and S is an anti-homomorphism.
        let b = p.resolve("b").unwrap();
        let sb = apply_antipode(p, &b).unwrap();
        assert_eq!(sb, b.scale(&-&crate::ncalg::qp(-1)));
        let c = p.resolve("c").unwrap();
        let bc = p.multiply(&b, &c).unwrap();
        let s_bc = apply_antipode(p, &bc).unwrap();
        let sc = apply_antipode(p, &c).unwrap();
        let scb = p.multiply(&sc, &sb).unwrap();
        assert_eq!(s_bc, scb);
    }

    #[test]
    fn iterated_coproduct_grouplike_and_h() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let p = &entry.presentation;
        // Delta^3(K) = K (x) K (x) K, K = 1 + (q-1)H expanded
        let k = p.resolve("K").unwrap();
        let d3 = iterated_coproduct(p, &k, 3).unwrap();
        let expected = tensor::normalize(p, &tensor::tensor_of(&[k.clone(), k.clone(), k.clone()])).unwrap();
        assert_eq!(d3, expected);
        // Delta^2(1) = 1 (x) 1
        assert_eq!(
            iterated_coproduct(p, &NcElement::one(), 2).unwrap(),
            TensorElement::unit(2)
        );
        // Delta^3(H) = sum_s K^(s-1) (x) H (x) 1^(3-s)
        let h = p.resolve("H").unwrap();
        let d3h = iterated_coproduct(p, &h, 3).unwrap();
        let one = NcElement::one();
        let mut expected = TensorElement::zero(3);
        for s in 0..3 {
            let mut slots = Vec::new();
            for i in 0..3 {
                slots.push(if i < s {
                    k.clone()
                } else if i == s {
                    h.clone()
                } else {
                    one.clone()
                });
            }
            expected = expected.add(&tensor::tensor_of(&slots));
        }
        let expected = tensor::normalize(p, &expected).unwrap();
        assert_eq!(d3h, expected);
    }

    #[test]
    fn delta_n_paper_values() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let p = &entry.presentation;
        let e = p.gen_id("E").unwrap();
        let h = p.gen_id("H").unwrap();
        // delta_2(E) = (q-1) H (x) E
        let d2 = delta_n(p, &p.resolve("E").unwrap(), 2).unwrap();
        assert_eq!(
            d2,
            TensorElement::term(
                vec![Word::single(h), Word::single(e)],
                LaurentPoly::q_minus_1()
            )
        );
        // delta_3(H) = (q-1)^2 H (x) H (x) H
        let d3 = delta_n(p, &p.resolve("H").unwrap(), 3).unwrap();
        assert_eq!(
            d3,
            TensorElement::term(
                vec![Word::single(h); 3],
                LaurentPoly::q_minus_1().pow(2)
            )
        );
    }

    #[test]
    fn delta_via_subsets_agrees() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let p = &entry.presentation;
        for gname in ["E", "H", "F"] {
            let x = p.resolve(gname).unwrap();
            for n in 0..=4 {
                let a = delta_n(p, &x, n).unwrap();
                let b = delta_via_subsets(p, &x, n).unwrap();
                assert_eq!(a, b, "delta_{} mismatch on {}", n, gname);
            }
        }
    }

    #[test]
    fn delta0_is_counit() {
        let entry = catalog::get("Fq_Hn_hat(1)").unwrap();
        let p = &entry.presentation;
        let c = p.resolve("c").unwrap();
        let d0 = delta_via_subsets(p, &c, 0).unwrap();
        assert_eq!(d0, TensorElement::term(Vec::new(), apply_counit(p, &c)));
        for n in 0..=3 {
            let a = delta_n(p, &c, n).unwrap();
            let b = delta_via_subsets(p, &c, n).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn grouplike_delta_power_law() {
        // For grouplike g: delta_n(g) = (g-1)^((x)n); K gives (q-1)^n H^(x)n.
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let p = &entry.presentation;
        let k = p.resolve("K").unwrap();
        let h = p.gen_id("H").unwrap();
        for n in 1..=4usize {
            let d = delta_n(p, &k, n).unwrap();
            let expected = TensorElement::term(
                vec![Word::single(h); n],
                LaurentPoly::q_minus_1().pow(n as u32),
            );
            assert_eq!(d, expected);
        }
    }

    #[test]
    fn check_hopf_passes_sl2_and_fails_mutant() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let rep = check_hopf(&entry.presentation, 10_000);
        assert!(rep.all_pass(), "{:?}", rep.items.iter().filter(|i| !i.pass).collect::<Vec<_>>());

        // Negative control: mutate S(b) to -b in Fq_SL2_hat.
        let entry = catalog::get("Fq_SL2_hat").unwrap();
        let mut p = entry.presentation.clone();
        let b = p.gen_id("b").unwrap();
        p.hopf.antipode[b] = NcElement::gen(b).neg();
        let rep = check_hopf(&p, 10_000);
        assert!(!rep.all_pass());
    }

    #[test]
    fn delta_slots_in_kernel_of_counit() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let p = &entry.presentation;
        for gname in ["E", "F", "H", "G"] {
            let d = delta_n(p, &p.resolve(gname).unwrap(), 3).unwrap();
            // contracting any slot with the counit gives zero
            for s in 0..3 {
                let mut contracted = TensorElement::zero(2);
                for (slots, c) in &d.terms {
                    let e = apply_counit(p, &NcElement::from_word(slots[s].clone()));
                    if !e.is_zero() {
                        let rest: Vec<Word> = slots
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| *i != s)
                            .map(|(_, w)| w.clone())
                            .collect();
                        contracted.add_term(rest, &e * c);
                    }
                }
                assert!(contracted.is_zero(), "slot {} of delta_3({})", s, gname);
            }
        }
    }

    #[test]
    fn eff_counit_multiplicativity() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let p = &entry.presentation;
        let e = p.resolve("E").unwrap();
        let f = p.resolve("F").unwrap();
        let x = p.multiply(&e, &f).unwrap();
        let prod = &apply_counit(p, &e) * &apply_counit(p, &f);
        assert_eq!(apply_counit(p, &x), prod);
        let _ = lin(&[]);
    }
}
