//! Specialization at q = 1: the induced Poisson bracket and co-Poisson
//! cobracket, and generator-level verification of the specialization
//! isomorphisms onto the classical catalog targets.

use crate::drinfeld::{self, DrinfeldError};
use crate::hopf::{self, CheckItem};
use crate::ncalg::{Classification, GenId, NcElement, NcError, Presentation, Word};
use crate::qcoeff::{LaurentPoly, NotDivisible};
use crate::tensor::{self, TensorElement};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassicalError {
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Drinfeld(#[from] DrinfeldError),
    #[error("commutator is not divisible by (q-1): {0}")]
    NotDivisible(String),
    #[error("limit is not commutative: {0}")]
    NotCommutativeAtLimit(String),
    #[error("limit is not cocommutative: {0}")]
    NotCocommutativeAtLimit(String),
}

impl From<NotDivisible> for ClassicalError {
    fn from(e: NotDivisible) -> Self {
        ClassicalError::NotDivisible(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitMarker {
    /// Function-algebra limit: commutative with a Poisson bracket.
    Poisson,
    /// Enveloping-algebra limit: cocommutative with a co-Poisson cobracket.
    CoPoisson,
}

/// The q = 1 limit of a presentation, carrying the semiclassical structure
/// tables. Classical elements reuse the same term machinery with constant
/// coefficients.
#[derive(Debug, Clone)]
pub struct PoissonPresentation {
    pub pres: Presentation,
    pub marker: LimitMarker,
    /// Bracket table on generator pairs (i, j) with i < j (POISSON marker).
    pub bracket: BTreeMap<(GenId, GenId), NcElement>,
    /// Cobracket table per generator (CO-POISSON marker).
    pub cobracket: BTreeMap<GenId, TensorElement>,
}

impl PoissonPresentation {
    /// Table lookup extended by antisymmetry; zero on the diagonal.
    pub fn bracket_of_gens(&self, i: GenId, j: GenId) -> NcElement {
        if i == j {
            return NcElement::zero();
        }
        if i < j {
            self.bracket.get(&(i, j)).cloned().unwrap_or_else(NcElement::zero)
        } else {
            self.bracket
                .get(&(j, i))
                .map(|e| e.neg())
                .unwrap_or_else(NcElement::zero)
        }
    }

    /// Biderivation (Leibniz) extension of the generator bracket table to
    /// arbitrary elements of the commutative limit.
    pub fn bracket_ext(&self, x: &NcElement, y: &NcElement) -> Result<NcElement, ClassicalError> {
        let mut out = NcElement::zero();
        for (u, cu) in &x.terms {
            for (v, cv) in &y.terms {
                let b = self.bracket_words(u, v)?;
                out = out.add(&b.scale(&(cu * cv)));
            }
        }
        Ok(self.pres.normal_form(&out)?)
    }

    fn bracket_words(&self, u: &Word, v: &Word) -> Result<NcElement, ClassicalError> {
        if u.is_empty() || v.is_empty() {
            return Ok(NcElement::zero());
        }
        if u.len() == 1 && v.len() == 1 {
            return Ok(self.bracket_of_gens(u.0[0], v.0[0]));
        }
        if u.len() > 1 {
            // {a b, c} = a {b, c} + {a, c} b
            let a = Word::single(u.0[0]);
            let b = Word(u.0[1..].to_vec());
            let t1 = self
                .pres
                .multiply(&NcElement::from_word(a.clone()), &self.bracket_words(&b, v)?)?;
            let t2 = self
                .pres
                .multiply(&self.bracket_words(&a, v)?, &NcElement::from_word(b))?;
            return Ok(t1.add(&t2));
        }
        // {a, b c} = {a, b} c + b {a, c}
        let b = Word::single(v.0[0]);
        let c = Word(v.0[1..].to_vec());
        let t1 = self
            .pres
            .multiply(&self.bracket_words(u, &b)?, &NcElement::from_word(c.clone()))?;
        let t2 = self
            .pres
            .multiply(&NcElement::from_word(b), &self.bracket_words(u, &c)?)?;
        Ok(t1.add(&t2))
    }

    /// Co-Leibniz extension of the cobracket table:
    /// delta(xy) = delta(x) Delta(y) + Delta(x) delta(y).
    pub fn cobracket_ext(&self, x: &NcElement) -> Result<TensorElement, ClassicalError> {
        let mut out = TensorElement::zero(2);
        for (w, c) in &x.terms {
            out = out.add(&self.cobracket_word(w)?.scale(c));
        }
        Ok(out)
    }

    fn cobracket_word(&self, w: &Word) -> Result<TensorElement, ClassicalError> {
        if w.is_empty() {
            return Ok(TensorElement::zero(2));
        }
        let g = w.0[0];
        let dg = self
            .cobracket
            .get(&g)
            .cloned()
            .unwrap_or_else(|| TensorElement::zero(2));
        if w.len() == 1 {
            return Ok(dg);
        }
        let rest = Word(w.0[1..].to_vec());
        let d_rest = self.cobracket_word(&rest)?;
        let cop_g = &self.pres.hopf.coproduct[g];
        let cop_rest = hopf::apply_coproduct(&self.pres, &NcElement::from_word(rest.clone()))?;
        let t1 = tensor::tensor_multiply(&self.pres, &dg, &cop_rest)?;
        let t2 = tensor::tensor_multiply(&self.pres, cop_g, &d_rest)?;
        Ok(t1.add(&t2))
    }
}

/// Semiclassical Poisson bracket {x, y} = ((xy - yx)/(q-1)) at q = 1,
/// computed in the quantum presentation and expressed in the limit's
/// normal form.
pub fn poisson_bracket(
    p: &Presentation,
    x: &NcElement,
    y: &NcElement,
) -> Result<NcElement, ClassicalError> {
    let comm = p.multiply(x, y)?.sub(&p.multiply(y, x)?);
    let comm = p.normal_form(&comm)?;
    let shifted = comm
        .shift_q1(-1)
        .map_err(|_| ClassicalError::NotDivisible(p.render(&comm)))?;
    Ok(shifted.eval1())
}

/// Semiclassical cobracket ((Delta - Delta^op)(x)/(q-1)) at q = 1.
pub fn co_poisson_cobracket(
    p: &Presentation,
    x: &NcElement,
) -> Result<TensorElement, ClassicalError> {
    let d = hopf::apply_coproduct(p, x)?;
    let diff = d.sub(&d.reversed());
    let shifted = diff
        .shift_q1(-1)
        .map_err(|_| ClassicalError::NotDivisible(tensor::render(p, &diff)))?;
    Ok(shifted.eval1())
}

/// Quotient by (q-1): relations and Hopf data evaluated at q = 1, plus the
/// induced bracket (POISSON marker) or cobracket (CO-POISSON marker) tables.
pub fn specialize(p: &Presentation) -> Result<PoissonPresentation, ClassicalError> {
    let marker = match p.classification {
        Classification::Qfa => LimitMarker::Poisson,
        Classification::Quea => LimitMarker::CoPoisson,
        Classification::Classical => {
            // Already classical: commutative iff not an enveloping algebra.
            LimitMarker::Poisson
        }
    };
    match marker {
        LimitMarker::Poisson => {
            for i in 0..p.gens.len() {
                for j in 0..i {
                    let gi = NcElement::gen(i);
                    let gj = NcElement::gen(j);
                    let comm = p.multiply(&gi, &gj)?.sub(&p.multiply(&gj, &gi)?);
                    // coefficient valuation >= 1 already certifies lattice
                    // valuation >= 1; fall back to the full membership solver
                    // only on coefficient valuation 0
                    if comm.min_coeff_valuation().map(|v| v >= 1).unwrap_or(true) {
                        continue;
                    }
                    let v = drinfeld::lattice_valuation_nc(p, &comm)?;
                    if let Some(0) = v {
                        return Err(ClassicalError::NotCommutativeAtLimit(format!(
                            "[{}, {}] has valuation 0",
                            p.gens[i].name, p.gens[j].name
                        )));
                    }
                }
            }
        }
        LimitMarker::CoPoisson => {
            for (g, gen) in p.gens.iter().enumerate() {
                let d = hopf::apply_coproduct(p, &NcElement::gen(g))?;
                let diff = d.sub(&d.reversed());
                if diff.coeff_valuation().map(|v| v >= 1).unwrap_or(true) {
                    continue;
                }
                let v = drinfeld::lattice_valuation(p, &diff)?;
                if let Some(0) = v {
                    return Err(ClassicalError::NotCocommutativeAtLimit(format!(
                        "(Delta - Delta^op)({}) has valuation 0",
                        gen.name
                    )));
                }
            }
        }
    }

    // Evaluate the presentation at q = 1.
    let rules = p
        .rules
        .iter()
        .map(|r| crate::ncalg::RewriteRule {
            lhs: r.lhs.clone(),
            rhs: r.rhs.eval1(),
            kind: r.kind,
        })
        .collect();
    let hopf_data = hopf::HopfData {
        coproduct: p.hopf.coproduct.iter().map(|t| t.eval1()).collect(),
        counit: p
            .hopf
            .counit
            .iter()
            .map(|c| LaurentPoly::from_rat(c.eval1()))
            .collect(),
        antipode: p.hopf.antipode.iter().map(|e| e.eval1()).collect(),
    };
    let identities = p
        .identities
        .iter()
        .map(|e| e.eval1())
        .filter(|e| !e.is_zero())
        .collect();
    let aliases = p
        .aliases
        .iter()
        .map(|(k, v)| (format!("{}", k), v.eval1()))
        .collect();
    let central = p.central_quotient.as_ref().map(|c| c.eval1());
    let limit = crate::ncalg::build_presentation(
        format!("{}_at_q1", p.name),
        p.gens.clone(),
        rules,
        hopf_data,
        p.lattice.clone(),
        None,
        identities,
        central,
        aliases,
        Classification::Classical,
    );

    let mut bracket = BTreeMap::new();
    let mut cobracket = BTreeMap::new();
    match marker {
        LimitMarker::Poisson => {
            for j in 0..p.gens.len() {
                for i in 0..j {
                    let b = poisson_bracket(p, &NcElement::gen(i), &NcElement::gen(j))?;
                    let b = limit.normal_form(&b)?;
                    if !b.is_zero() {
                        bracket.insert((i, j), b);
                    }
                }
            }
        }
        LimitMarker::CoPoisson => {
            for g in 0..p.gens.len() {
                let d = co_poisson_cobracket(p, &NcElement::gen(g))?;
                let d = tensor::normalize(&limit, &d)?;
                if !d.is_zero() {
                    cobracket.insert(g, d);
                }
            }
        }
    }
    Ok(PoissonPresentation { pres: limit, marker, bracket, cobracket })
}

/// A generator-level specialization map from a (tilde) presentation to a
/// classical target: images of the source generators in the target.
#[derive(Debug, Clone)]
pub struct GeneratorMap {
    pub source: Presentation,
    pub target: PoissonPresentation,
    /// Indexed by source generator id; elements in target variables.
    pub images: Vec<NcElement>,
}

impl GeneratorMap {
    /// Map an element of the source: coefficients evaluated at q = 1,
    /// words sent to products of images.
    pub fn map(&self, x: &NcElement) -> Result<NcElement, ClassicalError> {
        let mut out = NcElement::zero();
        for (w, c) in &x.terms {
            let mut t = NcElement::one();
            for &g in &w.0 {
                t = self.target.pres.multiply(&t, &self.images[g])?;
            }
            out = out.add(&t.scale(&LaurentPoly::from_rat(c.eval1())));
        }
        Ok(self.target.pres.normal_form(&out)?)
    }

    pub fn map_tensor(&self, x: &TensorElement) -> Result<TensorElement, ClassicalError> {
        let mut out = TensorElement::zero(x.arity);
        for (slots, c) in &x.terms {
            let mut imgs = Vec::with_capacity(slots.len());
            for w in slots {
                self_map_word(self, w, &mut imgs)?;
            }
            let t = tensor::tensor_of(&imgs);
            out = out.add(&t.scale(&LaurentPoly::from_rat(c.eval1())));
        }
        Ok(tensor::normalize(&self.target.pres, &out)?)
    }
}

fn self_map_word(
    m: &GeneratorMap,
    w: &Word,
    imgs: &mut Vec<NcElement>,
) -> Result<(), ClassicalError> {
    let mut t = NcElement::one();
    for &g in &w.0 {
        t = m.target.pres.multiply(&t, &m.images[g])?;
    }
    imgs.push(t);
    Ok(())
}

#[derive(Debug, Clone, Default)]
pub struct MapReport {
    pub items: Vec<CheckItem>,
}

impl MapReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }
    fn push(&mut self, name: String, pass: bool, detail: String) {
        self.items.push(CheckItem { name, pass, detail });
    }
}

/// Verify at generator level that (i) the images satisfy the target
/// relations; (ii) the map intertwines Delta, eps, S at q = 1; (iii) the
/// semiclassical bracket (or cobracket) of each generator pair maps onto
/// the target's declared table.
pub fn check_generator_map(m: &GeneratorMap) -> Result<MapReport, ClassicalError> {
    let mut rep = MapReport::default();
    let src = &m.source;
    let tgt = &m.target;

    // (i) relations
    let mut rels: Vec<(String, NcElement)> = src
        .rules
        .iter()
        .map(|r| {
            (
                format!("rule {}", src.render_word(&r.lhs)),
                NcElement::from_word(r.lhs.clone()).sub(&r.rhs),
            )
        })
        .collect();
    for (i, id) in src.identities.iter().enumerate() {
        rels.push((format!("identity #{}", i + 1), id.clone()));
    }
    for (name, rel) in rels {
        let img = m.map(&rel)?;
        let pass = tgt.pres.is_true_zero(&img)?;
        rep.push(
            format!("target satisfies image of {}", name),
            pass,
            if pass { String::new() } else { tgt.pres.render(&img) },
        );
    }

    // (ii) Hopf intertwining at q = 1
    for g in 0..src.gens.len() {
        let gname = &src.gens[g].name;
        let phi_g = m.map(&NcElement::gen(g))?;
        // counit
        let lhs = hopf::apply_counit(&tgt.pres, &phi_g);
        let rhs = LaurentPoly::from_rat(src.hopf.counit[g].eval1());
        let pass = lhs == rhs;
        rep.push(
            format!("counit intertwines on {}", gname),
            pass,
            if pass { String::new() } else { format!("{} vs {}", lhs, rhs) },
        );
        // coproduct
        let lhs = hopf::apply_coproduct(&tgt.pres, &phi_g)?;
        let rhs = m.map_tensor(&src.hopf.coproduct[g])?;
        let diff = lhs.sub(&rhs);
        let pass = tensor::is_true_zero(&tgt.pres, &diff)?;
        rep.push(
            format!("coproduct intertwines on {}", gname),
            pass,
            if pass { String::new() } else { tensor::render(&tgt.pres, &diff) },
        );
        // antipode
        let lhs = hopf::apply_antipode(&tgt.pres, &phi_g)?;
        let rhs = m.map(&src.hopf.antipode[g])?;
        let diff = lhs.sub(&rhs);
        let pass = tgt.pres.is_true_zero(&diff)?;
        rep.push(
            format!("antipode intertwines on {}", gname),
            pass,
            if pass { String::new() } else { tgt.pres.render(&diff) },
        );
    }

    // (iii) bracket / cobracket intertwining
    match tgt.marker {
        LimitMarker::Poisson => {
            for j in 0..src.gens.len() {
                for i in 0..j {
                    let b_src = poisson_bracket(src, &NcElement::gen(i), &NcElement::gen(j))?;
                    let lhs = m.map(&b_src)?;
                    let rhs = tgt.bracket_ext(
                        &m.map(&NcElement::gen(i))?,
                        &m.map(&NcElement::gen(j))?,
                    )?;
                    let diff = lhs.sub(&rhs);
                    let pass = tgt.pres.is_true_zero(&diff)?;
                    rep.push(
                        format!(
                            "bracket {{{}, {}}} maps to target bracket",
                            src.gens[i].name, src.gens[j].name
                        ),
                        pass,
                        if pass { String::new() } else { tgt.pres.render(&diff) },
                    );
                }
            }
        }
        LimitMarker::CoPoisson => {
            for g in 0..src.gens.len() {
                let d_src = co_poisson_cobracket(src, &NcElement::gen(g))?;
                let lhs = m.map_tensor(&d_src)?;
                let rhs = tgt.cobracket_ext(&m.map(&NcElement::gen(g))?)?;
                let diff = lhs.sub(&rhs);
                let pass = tensor::is_true_zero(&tgt.pres, &diff)?;
                rep.push(
                    format!("cobracket of {} maps to target cobracket", src.gens[g].name),
                    pass,
                    if pass { String::new() } else { tensor::render(&tgt.pres, &diff) },
                );
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn bracket_of_tilde_sl2_generators() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let tilde = &entry.tilde.as_ref().unwrap().presentation;
        // {Edot, Fdot} = Gammadot at q = 1
        let e = tilde.resolve("Edot").unwrap();
        let f = tilde.resolve("Fdot").unwrap();
        let g = tilde.resolve("Gdot").unwrap();
        let b = poisson_bracket(tilde, &e, &f).unwrap();
        assert_eq!(b, g);
        // {x, x} = 0
        let b = poisson_bracket(tilde, &e, &e).unwrap();
        assert!(b.is_zero());
        // {K, Edot} = 2 Edot K at q = 1 (from K E = q^2 E K)
        let k = tilde.resolve("K").unwrap();
        let b = poisson_bracket(tilde, &k, &e).unwrap();
        let ek = tilde.multiply(&e, &k).unwrap().eval1();
        assert_eq!(b, ek.scale(&LaurentPoly::from_int(2)));
    }

    #[test]
    fn specialize_markers() {
        // Tilde of a QUEA is a QFA-form: Poisson (commutative) limit.
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let tilde = &entry.tilde.as_ref().unwrap().presentation;
        let sp = specialize(tilde).unwrap();
        assert_eq!(sp.marker, LimitMarker::Poisson);
        assert!(!sp.bracket.is_empty());
        // F-tilde of a QFA is a QUEA-form: co-Poisson limit.
        let entry = catalog::get("Fq_SL2_hat").unwrap();
        let ft = &entry.tilde.as_ref().unwrap().presentation;
        let sp = specialize(ft).unwrap();
        assert_eq!(sp.marker, LimitMarker::CoPoisson);
        assert!(!sp.cobracket.is_empty());
    }

    #[test]
    fn cobracket_of_hplus_in_ftilde_sl2() {
        // delta(H+) = E (x) F - F (x) E at q = 1.
        let entry = catalog::get("Fq_SL2_hat").unwrap();
        let ft = &entry.tilde.as_ref().unwrap().presentation;
        let hp = ft.resolve("Hp").unwrap();
        let d = co_poisson_cobracket(ft, &hp).unwrap();
        let e = Word::single(ft.gen_id("E").unwrap());
        let f = Word::single(ft.gen_id("F").unwrap());
        let mut expected = TensorElement::zero(2);
        expected.add_term(vec![e.clone(), f.clone()], LaurentPoly::one());
        expected.add_term(vec![f, e], -&LaurentPoly::one());
        assert_eq!(d, expected);
    }

    #[test]
    fn cobracket_of_e_in_ftilde_hn_vanishes() {
        let entry = catalog::get("Fq_Hn_hat(2)").unwrap();
        let ft = &entry.tilde.as_ref().unwrap().presentation;
        let e1 = ft.resolve("E1").unwrap();
        let d = co_poisson_cobracket(ft, &e1).unwrap();
        assert!(d.is_zero());
        let one = NcElement::one();
        assert!(co_poisson_cobracket(ft, &one).unwrap().is_zero());
    }

    #[test]
    fn fq_hn_hat_is_already_commutative_poisson() {
        let entry = catalog::get("Fq_Hn_hat(1)").unwrap();
        let sp = specialize(&entry.presentation).unwrap();
        assert_eq!(sp.marker, LimitMarker::Poisson);
    }

    #[test]
    fn generator_map_sl2_tilde_passes() {
        let entry = catalog::get("Uq_sl2_hat").unwrap();
        let m = catalog::generator_map(&entry).unwrap().unwrap();
        let rep = check_generator_map(&m).unwrap();
        assert!(
            rep.all_pass(),
            "{:?}",
            rep.items.iter().filter(|i| !i.pass).collect::<Vec<_>>()
        );
    }
}
