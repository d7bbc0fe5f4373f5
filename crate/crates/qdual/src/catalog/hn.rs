//! The Heisenberg groups H_n (1 <= n <= 4): simply connected and adjoint
//! quantized enveloping forms and the quantized function algebra, with
//! tilde data and specialization maps.

use super::{cop, el, ftilde, CatalogEntry};
use crate::drinfeld::{AmbientImage, TildeData};
use crate::hopf::HopfData;
use crate::ncalg::{
    int, lin, Classification, GenId, LatticeKind, LatticeSpec, NcElement, PresentationBuilder,
    TExpr,
};
use crate::qcoeff::{rat_frac, LaurentPoly};
use crate::tensor::TensorElement;
use std::collections::BTreeMap;

fn qm1() -> LaurentPoly {
    LaurentPoly::q_minus_1()
}

/// (T - 1)/(q - 1).
fn root_var() -> TExpr {
    let mut num = BTreeMap::new();
    num.insert(1, LaurentPoly::one());
    num.insert(0, -&LaurentPoly::one());
    TExpr { num, den1: 1, den2: 0 }
}

/// (T^k - T^-k)/(q - q^-1).
fn gamma_var(k: i64) -> TExpr {
    let mut num = BTreeMap::new();
    num.insert(k, LaurentPoly::one());
    num.insert(-k, -&LaurentPoly::one());
    TExpr { num, den1: 0, den2: 1 }
}

/// Everything commutes except E_i F_i - F_i E_i = Gamma: add all swap rules
/// for the descending pairs, with the central correction on matched pairs.
fn central_rules(
    b: &mut PresentationBuilder,
    fs: &[GenId],
    cartan: &[GenId],
    es: &[GenId],
    gamma: GenId,
    gamma_scale: &LaurentPoly,
) {
    let n = fs.len();
    // F_j F_i, cartan/cartan, E_j E_i swaps
    for j in 0..n {
        for i in 0..j {
            b.commutes(fs[j], fs[i], LaurentPoly::one());
            b.commutes(es[j], es[i], LaurentPoly::one());
        }
    }
    for (ci, &cg) in cartan.iter().enumerate() {
        for &f in fs {
            b.commutes(cg, f, LaurentPoly::one());
        }
        for &prev in cartan.iter().take(ci) {
            b.commutes(cg, prev, LaurentPoly::one());
        }
    }
    for (i, &e) in es.iter().enumerate() {
        for (j, &f) in fs.iter().enumerate() {
            if i == j {
                b.rule(
                    &[e, f],
                    lin(&[(int(1), &[f, e]), (gamma_scale.clone(), &[gamma])]),
                );
            } else {
                b.commutes(e, f, LaurentPoly::one());
            }
        }
        for &cg in cartan {
            b.commutes(e, cg, LaurentPoly::one());
        }
    }
}

pub(super) fn uq_hn_s_hat(n: usize) -> CatalogEntry {
    let mut b = PresentationBuilder::new(&format!("Uq_hn_s_hat({})", n), Classification::Quea);
    let fs: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("F{}", i))).collect();
    let d = b.add_gen("D");
    let g = b.add_gen("G");
    let es: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("E{}", i))).collect();
    central_rules(&mut b, &fs, &[d, g], &es, g, &LaurentPoly::one());

    b.cartan_var(d, root_var());
    b.cartan_var(g, gamma_var(2));

    let l_el = lin(&[(int(1), &[]), (qm1(), &[d])]);
    let pp0 = b.partial();
    let l2_el = pp0.multiply(&l_el, &l_el).unwrap();
    let l2inv_el = pp0
        .normal_form(&l2_el.sub(&el(&[g]).scale(&LaurentPoly::q_minus_qinv())))
        .unwrap();
    let l3 = pp0.multiply(&l2_el, &l_el).unwrap();
    let lg = pp0.multiply(&l_el, &el(&[g])).unwrap();
    let linv_el = pp0
        .normal_form(&l3.sub(&lg.scale(&LaurentPoly::q_minus_qinv())))
        .unwrap();
    b.alias("L", l_el.clone());
    b.alias("Linv", linv_el.clone());
    b.alias("L2", l2_el.clone());
    b.alias("L2inv", l2inv_el.clone());

    let pp = b.partial();
    let one = NcElement::one();
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for &f in &fs {
        let fe = el(&[f]);
        coproduct.push(cop(&pp, &[(int(1), &fe, &one), (int(1), &l2inv_el, &fe)]));
        antipode.push(pp.multiply(&l2_el, &fe).unwrap().neg());
    }
    let de = el(&[d]);
    coproduct.push(cop(&pp, &[(int(1), &de, &one), (int(1), &l_el, &de)]));
    antipode.push(pp.multiply(&linv_el, &de).unwrap().neg());
    let ge = el(&[g]);
    coproduct.push(cop(&pp, &[(int(1), &ge, &l2_el), (int(1), &l2inv_el, &ge)]));
    antipode.push(ge.neg());
    for &e in &es {
        let ee = el(&[e]);
        coproduct.push(cop(&pp, &[(int(1), &ee, &l2_el), (int(1), &one, &ee)]));
        antipode.push(pp.multiply(&ee, &l2inv_el).unwrap().neg());
    }
    let counit = vec![LaurentPoly::zero(); 2 * n + 2];
    let mut grading: BTreeMap<GenId, i64> = BTreeMap::new();
    for &f in &fs {
        grading.insert(f, -1);
    }
    for &e in &es {
        grading.insert(e, 1);
    }
    let lattice = LatticeSpec {
        kind: LatticeKind::Spanning,
        family: "F1^a1 ... D^b G^c E1^d1 ...".into(),
        grading: grading.clone(),
    };
    let presentation = b.finish(HopfData { coproduct, counit, antipode }, lattice);

    // --- tilde on Fdot_i, Gdot, Ddot, Edot_i (Gdot before Ddot) ---
    let mut tb = PresentationBuilder::new(&format!("Uq_hn_s_tilde({})", n), Classification::Qfa);
    let tfs: Vec<GenId> = (1..=n).map(|i| tb.add_gen(&format!("Fdot{}", i))).collect();
    let tg = tb.add_gen("Gdot");
    let td = tb.add_gen("Ddot");
    let tes: Vec<GenId> = (1..=n).map(|i| tb.add_gen(&format!("Edot{}", i))).collect();
    central_rules(&mut tb, &tfs, &[tg, td], &tes, tg, &qm1());
    // L^2 L^-2 = 1 with L = 1 + Ddot, L^-2 = L^2 - (1+q^-1) Gdot:
    // Ddot^4 + 4 Ddot^3 + 6 Ddot^2 + 4 Ddot = (1+q^-1)(1 + Ddot)^2 Gdot.
    let e1q = LaurentPoly::one_plus_qinv();
    tb.completion_rule(
        &[td, td, td, td],
        lin(&[
            (e1q.clone(), &[tg]),
            (&int(2) * &e1q, &[tg, td]),
            (e1q.clone(), &[tg, td, td]),
            (int(-4), &[td]),
            (int(-6), &[td, td]),
            (int(-4), &[td, td, td]),
        ]),
    );
    let tl_el = lin(&[(int(1), &[]), (int(1), &[td])]);
    let tp0 = tb.partial();
    let tl2_el = tp0.multiply(&tl_el, &tl_el).unwrap();
    let tl2inv_el = tp0
        .normal_form(&tl2_el.sub(&el(&[tg]).scale(&e1q)))
        .unwrap();
    let tl3 = tp0.multiply(&tl2_el, &tl_el).unwrap();
    let tlg = tp0.multiply(&tl_el, &el(&[tg])).unwrap();
    let tlinv_el = tp0.normal_form(&tl3.sub(&tlg.scale(&e1q))).unwrap();
    tb.alias("L", tl_el.clone());
    tb.alias("Linv", tlinv_el.clone());
    tb.alias("L2", tl2_el.clone());
    tb.alias("L2inv", tl2inv_el.clone());

    let tp = tb.partial();
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for &f in &tfs {
        let fe = el(&[f]);
        coproduct.push(cop(&tp, &[(int(1), &fe, &one), (int(1), &tl2inv_el, &fe)]));
        antipode.push(tp.multiply(&tl2_el, &fe).unwrap().neg());
    }
    let tge = el(&[tg]);
    coproduct.push(cop(&tp, &[(int(1), &tge, &tl2_el), (int(1), &tl2inv_el, &tge)]));
    antipode.push(tge.neg());
    let tde = el(&[td]);
    coproduct.push(cop(&tp, &[(int(1), &tde, &one), (int(1), &tl_el, &tde)]));
    antipode.push(tp.multiply(&tlinv_el, &tde).unwrap().neg());
    for &e in &tes {
        let ee = el(&[e]);
        coproduct.push(cop(&tp, &[(int(1), &ee, &tl2_el), (int(1), &one, &ee)]));
        antipode.push(tp.multiply(&ee, &tl2inv_el).unwrap().neg());
    }
    let counit = vec![LaurentPoly::zero(); 2 * n + 2];
    let mut tgrading: BTreeMap<GenId, i64> = BTreeMap::new();
    for &f in &tfs {
        tgrading.insert(f, -1);
    }
    for &e in &tes {
        tgrading.insert(e, 1);
    }
    let tlattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "Fdot_i^a Gdot^b Ddot^e Edot_i^d (e < 4)".into(),
        grading: tgrading,
    };
    let tilde_pres = tb.finish(HopfData { coproduct, counit, antipode }, tlattice);
    let mut recipe = Vec::new();
    for &f in &fs {
        recipe.push(AmbientImage::plain(el(&[f]).scale(&qm1())));
    }
    recipe.push(AmbientImage::plain(el(&[g]).scale(&qm1())));
    recipe.push(AmbientImage::plain(el(&[d]).scale(&qm1())));
    for &e in &es {
        recipe.push(AmbientImage::plain(el(&[e]).scale(&qm1())));
    }
    let tilde = TildeData { presentation: tilde_pres, recipe };

    let mut dt_exprs = Vec::new();
    for i in 0..n {
        dt_exprs.push((fs[i], NcElement::gen(tfs[i])));
        dt_exprs.push((es[i], NcElement::gen(tes[i])));
    }
    dt_exprs.push((d, NcElement::gen(td)));
    dt_exprs.push((g, NcElement::gen(tg)));

    // Map onto F[sHn*]: Edot_i -> alpha_i gamma, Ddot -> gamma - 1,
    // Gdot -> (gamma^2 - gamma^-2)/2, Fdot_i -> gamma^-1 beta_i.
    // Target layout: alpha_1..alpha_n, gamma, gammainv, beta_1..beta_n.
    let half = LaurentPoly::from_rat(rat_frac(1, 2));
    let tgt_gamma = n;
    let tgt_gammainv = n + 1;
    let mut map_images = Vec::new();
    for i in 0..n {
        map_images.push(lin(&[(int(1), &[tgt_gammainv, n + 2 + i])]));
    }
    map_images.push(lin(&[
        (half.clone(), &[tgt_gamma, tgt_gamma]),
        (-&half, &[tgt_gammainv, tgt_gammainv]),
    ]));
    map_images.push(lin(&[(int(1), &[tgt_gamma]), (int(-1), &[])]));
    for i in 0..n {
        map_images.push(lin(&[(int(1), &[i, tgt_gamma])]));
    }

    let mut excluded = fs.clone();
    excluded.extend(&es);
    CatalogEntry {
        name: format!("Uq_hn_s_hat({})", n),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: excluded,
        classical_target: Some(format!("F_sHnstar({})", n)),
        map_images: Some(map_images),
        notes: "simply connected quantized enveloping form of the Heisenberg algebra".into(),
    }
}

pub(super) fn uq_hn_a_hat(n: usize) -> CatalogEntry {
    let mut b = PresentationBuilder::new(&format!("Uq_hn_a_hat({})", n), Classification::Quea);
    let fs: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("F{}", i))).collect();
    let h = b.add_gen("H");
    let g = b.add_gen("G");
    let es: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("E{}", i))).collect();
    central_rules(&mut b, &fs, &[h, g], &es, g, &LaurentPoly::one());

    b.cartan_var(h, root_var());
    b.cartan_var(g, gamma_var(1));

    let k_el = lin(&[(int(1), &[]), (qm1(), &[h])]);
    let kinv_el = lin(&[
        (int(1), &[]),
        (qm1(), &[h]),
        (-&LaurentPoly::q_minus_qinv(), &[g]),
    ]);
    b.alias("K", k_el.clone());
    b.alias("Kinv", kinv_el.clone());

    let pp = b.partial();
    let one = NcElement::one();
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for &f in &fs {
        let fe = el(&[f]);
        coproduct.push(cop(&pp, &[(int(1), &fe, &one), (int(1), &kinv_el, &fe)]));
        antipode.push(pp.multiply(&k_el, &fe).unwrap().neg());
    }
    let he = el(&[h]);
    coproduct.push(cop(&pp, &[(int(1), &he, &one), (int(1), &k_el, &he)]));
    antipode.push(pp.multiply(&kinv_el, &he).unwrap().neg());
    let ge = el(&[g]);
    coproduct.push(cop(&pp, &[(int(1), &ge, &kinv_el), (int(1), &k_el, &ge)]));
    antipode.push(ge.neg());
    for &e in &es {
        let ee = el(&[e]);
        coproduct.push(cop(&pp, &[(int(1), &ee, &k_el), (int(1), &one, &ee)]));
        antipode.push(pp.multiply(&ee, &kinv_el).unwrap().neg());
    }
    let counit = vec![LaurentPoly::zero(); 2 * n + 2];
    let mut grading: BTreeMap<GenId, i64> = BTreeMap::new();
    for &f in &fs {
        grading.insert(f, -1);
    }
    for &e in &es {
        grading.insert(e, 1);
    }
    let lattice = LatticeSpec {
        kind: LatticeKind::Spanning,
        family: "F1^a1 ... H^b G^c E1^d1 ...".into(),
        grading,
    };
    let presentation = b.finish(HopfData { coproduct, counit, antipode }, lattice);

    // --- tilde on Fdot_i, Gdot, Hdot, Edot_i ---
    let mut tb = PresentationBuilder::new(&format!("Uq_hn_a_tilde({})", n), Classification::Qfa);
    let tfs: Vec<GenId> = (1..=n).map(|i| tb.add_gen(&format!("Fdot{}", i))).collect();
    let tg = tb.add_gen("Gdot");
    let th = tb.add_gen("Hdot");
    let tes: Vec<GenId> = (1..=n).map(|i| tb.add_gen(&format!("Edot{}", i))).collect();
    central_rules(&mut tb, &tfs, &[tg, th], &tes, tg, &qm1());
    // K K^-1 = 1 with K = 1 + Hdot, K^-1 = K - (1+q^-1) Gdot:
    // Hdot^2 = (1+q^-1)(Gdot + Gdot Hdot) - 2 Hdot.
    let e1q = LaurentPoly::one_plus_qinv();
    tb.completion_rule(
        &[th, th],
        lin(&[
            (e1q.clone(), &[tg]),
            (e1q.clone(), &[tg, th]),
            (int(-2), &[th]),
        ]),
    );
    let tk_el = lin(&[(int(1), &[]), (int(1), &[th])]);
    let tkinv_el = {
        let t = tk_el.sub(&el(&[tg]).scale(&e1q));
        tb.partial().normal_form(&t).unwrap()
    };
    tb.alias("K", tk_el.clone());
    tb.alias("Kinv", tkinv_el.clone());

    let tp = tb.partial();
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for &f in &tfs {
        let fe = el(&[f]);
        coproduct.push(cop(&tp, &[(int(1), &fe, &one), (int(1), &tkinv_el, &fe)]));
        antipode.push(tp.multiply(&tk_el, &fe).unwrap().neg());
    }
    let tge = el(&[tg]);
    coproduct.push(cop(&tp, &[(int(1), &tge, &tkinv_el), (int(1), &tk_el, &tge)]));
    antipode.push(tge.neg());
    let the = el(&[th]);
    coproduct.push(cop(&tp, &[(int(1), &the, &one), (int(1), &tk_el, &the)]));
    antipode.push(tp.multiply(&tkinv_el, &the).unwrap().neg());
    for &e in &tes {
        let ee = el(&[e]);
        coproduct.push(cop(&tp, &[(int(1), &ee, &tk_el), (int(1), &one, &ee)]));
        antipode.push(tp.multiply(&ee, &tkinv_el).unwrap().neg());
    }
    let counit = vec![LaurentPoly::zero(); 2 * n + 2];
    let tlattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "Fdot_i^a Gdot^b Hdot^e Edot_i^d (e < 2)".into(),
        grading: BTreeMap::new(),
    };
    let tilde_pres = tb.finish(HopfData { coproduct, counit, antipode }, tlattice);
    let mut recipe = Vec::new();
    for &f in &fs {
        recipe.push(AmbientImage::plain(el(&[f]).scale(&qm1())));
    }
    recipe.push(AmbientImage::plain(el(&[g]).scale(&qm1())));
    recipe.push(AmbientImage::plain(el(&[h]).scale(&qm1())));
    for &e in &es {
        recipe.push(AmbientImage::plain(el(&[e]).scale(&qm1())));
    }
    let tilde = TildeData { presentation: tilde_pres, recipe };

    let mut dt_exprs = Vec::new();
    for i in 0..n {
        dt_exprs.push((fs[i], NcElement::gen(tfs[i])));
        dt_exprs.push((es[i], NcElement::gen(tes[i])));
    }
    dt_exprs.push((h, NcElement::gen(th)));
    dt_exprs.push((g, NcElement::gen(tg)));

    // Map onto F[aHn*]: Edot_i -> alphagamma_i, Hdot -> gamma2 - 1,
    // Gdot -> (gamma2 - gamma2inv)/2, Fdot_i -> gammainvbeta_i.
    let half = LaurentPoly::from_rat(rat_frac(1, 2));
    let z2 = n;
    let z2inv = n + 1;
    let mut map_images = Vec::new();
    for i in 0..n {
        map_images.push(lin(&[(int(1), &[n + 2 + i])]));
    }
    map_images.push(lin(&[(half.clone(), &[z2]), (-&half, &[z2inv])]));
    map_images.push(lin(&[(int(1), &[z2]), (int(-1), &[])]));
    for i in 0..n {
        map_images.push(lin(&[(int(1), &[i])]));
    }

    let mut excluded = fs.clone();
    excluded.extend(&es);
    CatalogEntry {
        name: format!("Uq_hn_a_hat({})", n),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: excluded,
        classical_target: Some(format!("F_aHnstar({})", n)),
        map_images: Some(map_images),
        notes: "adjoint quantized enveloping form of the Heisenberg algebra".into(),
    }
}

pub(super) fn fq_hn_hat(n: usize) -> CatalogEntry {
    let mut b = PresentationBuilder::new(&format!("Fq_Hn_hat({})", n), Classification::Qfa);
    let avs: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("a{}", i))).collect();
    let c = b.add_gen("c");
    let bvs: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("b{}", i))).collect();
    for j in 0..n {
        for i in 0..j {
            b.commutes(avs[j], avs[i], LaurentPoly::one());
            b.commutes(bvs[j], bvs[i], LaurentPoly::one());
        }
    }
    for &a in &avs {
        // c a_i = a_i c - (q-1) a_i
        b.rule(&[c, a], lin(&[(int(1), &[a, c]), (-&qm1(), &[a])]));
    }
    for &bb in &bvs {
        // b_j c = c b_j + (q-1) b_j
        b.rule(&[bb, c], lin(&[(int(1), &[c, bb]), (qm1(), &[bb])]));
        for &a in &avs {
            b.commutes(bb, a, LaurentPoly::one());
        }
    }

    let pp = b.partial();
    let one = NcElement::one();
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for &a in &avs {
        let ae = el(&[a]);
        coproduct.push(cop(&pp, &[(int(1), &ae, &one), (int(1), &one, &ae)]));
        antipode.push(ae.neg());
    }
    // Delta(c) = c (x) 1 + 1 (x) c + sum a_l (x) b_l
    let mut dc = TensorElement::zero(2);
    dc = dc.add(&cop(&pp, &[(int(1), &el(&[c]), &one), (int(1), &one, &el(&[c]))]));
    let mut sc = el(&[c]).neg();
    for i in 0..n {
        dc = dc.add(&cop(&pp, &[(int(1), &el(&[avs[i]]), &el(&[bvs[i]]))]));
        sc = sc.add(&el(&[avs[i], bvs[i]]));
    }
    coproduct.push(dc);
    antipode.push(pp.normal_form(&sc).unwrap());
    for &bb in &bvs {
        let be = el(&[bb]);
        coproduct.push(cop(&pp, &[(int(1), &be, &one), (int(1), &one, &be)]));
        antipode.push(be.neg());
    }
    let counit = vec![LaurentPoly::zero(); 2 * n + 1];
    let mut grading: BTreeMap<GenId, i64> = BTreeMap::new();
    for &a in &avs {
        grading.insert(a, 1);
    }
    for &bb in &bvs {
        grading.insert(bb, -1);
    }
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "a1^i1 ... c^k b1^j1 ...".into(),
        grading,
    };
    let presentation = b.finish(HopfData { coproduct, counit, antipode }, lattice);

    let mut tnames: Vec<String> = Vec::new();
    for i in 1..=n {
        tnames.push(format!("E{}", i));
    }
    tnames.push("H".into());
    for i in 1..=n {
        tnames.push(format!("F{}", i));
    }
    let tname_refs: Vec<&str> = tnames.iter().map(|s| s.as_str()).collect();
    let tilde = ftilde::derive_f_tilde(
        &presentation,
        &format!("Fq_Hn_tilde({})", n),
        &tname_refs,
    );
    let dt_exprs = ftilde::f_tilde_dt_exprs(&presentation);
    // Map onto U(hn*): E_i -> e_i, H -> h, F_i -> f_i.
    // Target layout: f1..fn (0..n-1), h (n), e1..en (n+1..2n).
    let mut map_images = Vec::new();
    for i in 0..n {
        map_images.push(lin(&[(int(1), &[n + 1 + i])]));
    }
    map_images.push(lin(&[(int(1), &[n])]));
    for i in 0..n {
        map_images.push(lin(&[(int(1), &[i])]));
    }

    CatalogEntry {
        name: format!("Fq_Hn_hat({})", n),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: vec![],
        classical_target: Some(format!("U_hnstar({})", n)),
        map_images: Some(map_images),
        notes: "quantized function algebra of the Heisenberg group".into(),
    }
}
