//! The quantized enveloping algebra of sl2 over k[q,q^-1]: the adjoint
//! integral form on F, H, Gamma, E (with K^?1 as aliases) and the simply
//! connected variant with the square root L of K, plus their verified tilde
//! presentations, rescaling recipes and specialization maps.

use super::{cop, el, CatalogEntry};
use crate::drinfeld::{AmbientImage, TildeData};
use crate::hopf::HopfData;
use crate::ncalg::{
    int, lin, qp, Classification, LatticeKind, LatticeSpec, NcElement, PresentationBuilder, TExpr,
};
use crate::qcoeff::{rat_frac, LaurentPoly};
use std::collections::BTreeMap;

fn c1() -> LaurentPoly {
    LaurentPoly::q_plus_qinv()
}

fn qm1() -> LaurentPoly {
    LaurentPoly::q_minus_1()
}

/// H = (T - 1)/(q - 1).
fn h_var() -> TExpr {
    let mut num = BTreeMap::new();
    num.insert(1, LaurentPoly::one());
    num.insert(0, -&LaurentPoly::one());
    TExpr { num, den1: 1, den2: 0 }
}

/// Gamma = (T - T^-1)/(q - q^-1).
fn gamma_var() -> TExpr {
    let mut num = BTreeMap::new();
    num.insert(1, LaurentPoly::one());
    num.insert(-1, -&LaurentPoly::one());
    TExpr { num, den1: 0, den2: 1 }
}

/// D = (T - 1)/(q - 1) (simply connected Cartan root).
fn d_var() -> TExpr {
    h_var()
}

/// Gamma = (T^2 - T^-2)/(q - q^-1) over the square root variable.
fn gamma_sc_var() -> TExpr {
    let mut num = BTreeMap::new();
    num.insert(2, LaurentPoly::one());
    num.insert(-2, -&LaurentPoly::one());
    TExpr { num, den1: 0, den2: 1 }
}

pub(super) fn uq_sl2_hat() -> CatalogEntry {
    let mut b = PresentationBuilder::new("Uq_sl2_hat", Classification::Quea);
    let f = b.add_gen("F");
    let h = b.add_gen("H");
    let g = b.add_gen("G");
    let e = b.add_gen("E");

    // Straightening rules derived from K F = q^-2 F K, K E = q^2 E K,
    // E F - F E = Gamma, with K = 1 + (q-1)H and K^-1 = K - (q-q^-1)Gamma.
    b.commutes(g, h, LaurentPoly::one());
    b.rule(
        &[h, f],
        lin(&[
            (qp(-2), &[f, h]),
            (-&(&qp(-2) * &(&LaurentPoly::q() + &int(1))), &[f]),
        ]),
    );
    b.rule(
        &[g, f],
        lin(&[
            (qp(2), &[f, g]),
            (-&(&c1() * &qm1()), &[f, h]),
            (-&c1(), &[f]),
        ]),
    );
    b.rule(&[e, f], lin(&[(int(1), &[f, e]), (int(1), &[g])]));
    b.rule(
        &[e, h],
        lin(&[
            (qp(-2), &[h, e]),
            (-&(&qp(-2) * &(&LaurentPoly::q() + &int(1))), &[e]),
        ]),
    );
    b.rule(
        &[e, g],
        lin(&[
            (qp(2), &[g, e]),
            (-&(&c1() * &qm1()), &[h, e]),
            (-&c1(), &[e]),
        ]),
    );

    b.cartan_var(h, h_var());
    b.cartan_var(g, gamma_var());

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
    let fe = el(&[f]);
    let he = el(&[h]);
    let ge = el(&[g]);
    let ee = el(&[e]);
    let hopf = HopfData {
        coproduct: vec![
            cop(&pp, &[(int(1), &fe, &kinv_el), (int(1), &one, &fe)]),
            cop(&pp, &[(int(1), &he, &one), (int(1), &k_el, &he)]),
            cop(&pp, &[(int(1), &ge, &k_el), (int(1), &kinv_el, &ge)]),
            cop(&pp, &[(int(1), &ee, &one), (int(1), &k_el, &ee)]),
        ],
        counit: vec![LaurentPoly::zero(); 4],
        antipode: vec![
            pp.multiply(&fe, &k_el).unwrap().neg(),
            pp.multiply(&kinv_el, &he).unwrap().neg(),
            ge.neg(),
            pp.multiply(&kinv_el, &ee).unwrap().neg(),
        ],
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Spanning,
        family: "F^a H^b G^c E^d".into(),
        grading: BTreeMap::from([(f, -1), (h, 0), (g, 0), (e, 1)]),
    };
    let presentation = b.finish(hopf, lattice);

    // --- tilde presentation on Fdot, Gdot, K, Edot ---
    let mut tb = PresentationBuilder::new("Uq_sl2_tilde", Classification::Qfa);
    let tf = tb.add_gen("Fdot");
    let tg = tb.add_gen("Gdot");
    let tk = tb.add_gen("K");
    let te = tb.add_gen("Edot");
    let tkinv = lin(&[(int(1), &[tk]), (-&LaurentPoly::one_plus_qinv(), &[tg])]);
    tb.alias("Kinv", tkinv.clone());
    tb.rule(&[tk, tf], lin(&[(qp(-2), &[tf, tk])]));
    tb.rule(
        &[tg, tf],
        lin(&[(qp(2), &[tf, tg]), (-&(&c1() * &qm1()), &[tf, tk])]),
    );
    tb.commutes(tk, tg, LaurentPoly::one());
    tb.rule(&[te, tf], lin(&[(int(1), &[tf, te]), (qm1(), &[tg])]));
    tb.rule(
        &[te, tg],
        lin(&[(qp(2), &[tg, te]), (-&(&c1() * &qm1()), &[tk, te])]),
    );
    tb.rule(&[te, tk], lin(&[(qp(-2), &[tk, te])]));
    tb.completion_rule(
        &[tk, tk],
        lin(&[(LaurentPoly::one_plus_qinv(), &[tg, tk]), (int(1), &[])]),
    );

    let tp = tb.partial();
    let tone = NcElement::one();
    let tfe = el(&[tf]);
    let tge = el(&[tg]);
    let tke = el(&[tk]);
    let tee = el(&[te]);
    let thopf = HopfData {
        coproduct: vec![
            cop(&tp, &[(int(1), &tfe, &tkinv), (int(1), &tone, &tfe)]),
            cop(&tp, &[(int(1), &tge, &tke), (int(1), &tkinv, &tge)]),
            cop(&tp, &[(int(1), &tke, &tke)]),
            cop(&tp, &[(int(1), &tee, &tone), (int(1), &tke, &tee)]),
        ],
        counit: vec![
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        ],
        antipode: vec![
            tp.multiply(&tfe, &tke).unwrap().neg(),
            tge.neg(),
            tkinv.clone(),
            tp.multiply(&tkinv, &tee).unwrap().neg(),
        ],
    };
    let tlattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "Fdot^a Gdot^b K^e Edot^d (e < 2)".into(),
        grading: BTreeMap::from([(tf, -1), (tg, 0), (tk, 0), (te, 1)]),
    };
    let tilde_pres = tb.finish(thopf, tlattice);
    let tilde = TildeData {
        presentation: tilde_pres,
        recipe: vec![
            AmbientImage::plain(fe.scale(&qm1())),
            AmbientImage::plain(ge.scale(&qm1())),
            AmbientImage::plain(k_el.clone()),
            AmbientImage::plain(ee.scale(&qm1())),
        ],
    };

    // Double-tilde: (Fdot - 0)/(q-1) = F, (K - 1)/(q-1) = H, etc.
    let dt_exprs = vec![
        (f, NcElement::gen(tf)),
        (h, NcElement::gen(tk)),
        (g, NcElement::gen(tg)),
        (e, NcElement::gen(te)),
    ];

    // Specialization map onto F[aSL2*]: Edot -> xz, K -> z^2, Gdot ->
    // (z^2 - z^-2)/2, Fdot -> z^-1 y.
    let half = LaurentPoly::from_rat(rat_frac(1, 2));
    let map_images = vec![
        lin(&[(int(1), &[3usize])]),                     // Fdot -> zinvy
        lin(&[(half.clone(), &[1]), (-&half, &[2])]),    // Gdot -> (z2 - z2inv)/2
        lin(&[(int(1), &[1])]),                          // K -> z2
        lin(&[(int(1), &[0])]),                          // Edot -> xz
    ];

    CatalogEntry {
        name: "Uq_sl2_hat".into(),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: vec![f, e],
        classical_target: Some("F_aSL2star".into()),
        map_images: Some(map_images),
        notes: "adjoint integral form of the quantized enveloping algebra of sl2".into(),
    }
}

pub(super) fn uq_sl2_hat_sc() -> CatalogEntry {
    let mut b = PresentationBuilder::new("Uq_sl2_hat_sc", Classification::Quea);
    let f = b.add_gen("F");
    let d = b.add_gen("D");
    let g = b.add_gen_weighted("G", 2);
    let e = b.add_gen("E");

    // Derived from L F = q^-1 F L, L E = q E L, E F - F E = Gamma,
    // L = 1 + (q-1) D, K = L^2, Gamma = (L^2 - L^-2)/(q - q^-1).
    b.commutes(g, d, LaurentPoly::one());
    b.rule(
        &[d, f],
        lin(&[(qp(-1), &[f, d]), (-&qp(-1), &[f])]),
    );
    b.rule(
        &[g, f],
        lin(&[
            (qp(2), &[f, g]),
            (-&(&(&int(2) * &c1()) * &qm1()), &[f, d]),
            (-&(&c1() * &qm1().pow(2)), &[f, d, d]),
            (-&c1(), &[f]),
        ]),
    );
    b.rule(&[e, f], lin(&[(int(1), &[f, e]), (int(1), &[g])]));
    b.rule(&[e, d], lin(&[(qp(-1), &[d, e]), (-&qp(-1), &[e])]));
    b.rule(
        &[e, g],
        lin(&[
            (qp(2), &[g, e]),
            (-&(&(&int(2) * &c1()) * &qm1()), &[d, e]),
            (-&(&c1() * &qm1().pow(2)), &[d, d, e]),
            (-&c1(), &[e]),
        ]),
    );

    b.cartan_var(d, d_var());
    b.cartan_var(g, gamma_sc_var());

    let l_el = lin(&[(int(1), &[]), (qm1(), &[d])]);
    let pp0 = b.partial();
    let k_el = pp0.multiply(&l_el, &l_el).unwrap();
    let kinv_el = k_el.sub(&NcElement::scalar(LaurentPoly::q_minus_qinv()).mul_raw(&el(&[g])));
    let kinv_el = pp0.normal_form(&kinv_el).unwrap();
    // L^-1 = L^3 - (q - q^-1) L Gamma
    let l3 = pp0.multiply(&k_el, &l_el).unwrap();
    let lg = pp0.multiply(&l_el, &el(&[g])).unwrap();
    let linv_el = pp0
        .normal_form(&l3.sub(&lg.scale(&LaurentPoly::q_minus_qinv())))
        .unwrap();
    b.alias("L", l_el.clone());
    b.alias("Linv", linv_el.clone());
    b.alias("K", k_el.clone());
    b.alias("Kinv", kinv_el.clone());

    let pp = b.partial();
    let one = NcElement::one();
    let fe = el(&[f]);
    let de = el(&[d]);
    let ge = el(&[g]);
    let ee = el(&[e]);
    let hopf = HopfData {
        coproduct: vec![
            cop(&pp, &[(int(1), &fe, &kinv_el), (int(1), &one, &fe)]),
            cop(&pp, &[(int(1), &de, &one), (int(1), &l_el, &de)]),
            cop(&pp, &[(int(1), &ge, &k_el), (int(1), &kinv_el, &ge)]),
            cop(&pp, &[(int(1), &ee, &one), (int(1), &k_el, &ee)]),
        ],
        counit: vec![LaurentPoly::zero(); 4],
        antipode: vec![
            pp.multiply(&fe, &k_el).unwrap().neg(),
            pp.multiply(&linv_el, &de).unwrap().neg(),
            ge.neg(),
            pp.multiply(&kinv_el, &ee).unwrap().neg(),
        ],
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Spanning,
        family: "F^a D^b G^c E^d".into(),
        grading: BTreeMap::from([(f, -1), (d, 0), (g, 0), (e, 1)]),
    };
    let presentation = b.finish(hopf, lattice);

    // --- tilde presentation on Fdot, Gdot, L, Edot ---
    let mut tb = PresentationBuilder::new("Uq_sl2_sc_tilde", Classification::Qfa);
    let tf = tb.add_gen("Fdot");
    let tg = tb.add_gen_weighted("Gdot", 2);
    let tl = tb.add_gen("L");
    let te = tb.add_gen("Edot");
    let tkinv = lin(&[(int(1), &[tl, tl]), (-&LaurentPoly::one_plus_qinv(), &[tg])]);
    tb.alias("Kinv", tkinv.clone());
    tb.rule(&[tl, tf], lin(&[(qp(-1), &[tf, tl])]));
    tb.rule(
        &[tg, tf],
        lin(&[
            (qp(2), &[tf, tg]),
            (-&(&c1() * &qm1()), &[tf, tl, tl]),
        ]),
    );
    tb.commutes(tl, tg, LaurentPoly::one());
    tb.rule(&[te, tf], lin(&[(int(1), &[tf, te]), (qm1(), &[tg])]));
    tb.rule(
        &[te, tg],
        lin(&[
            (qp(2), &[tg, te]),
            (-&(&c1() * &qm1()), &[tl, tl, te]),
        ]),
    );
    tb.rule(&[te, tl], lin(&[(qp(-1), &[tl, te])]));
    tb.completion_rule(
        &[tl, tl, tl, tl],
        lin(&[
            (LaurentPoly::one_plus_qinv(), &[tg, tl, tl]),
            (int(1), &[]),
        ]),
    );
    let tlinv = {
        let tp0 = tb.partial();
        let l3 = el(&[tl, tl, tl]);
        let lg = tp0.multiply(&el(&[tl]), &el(&[tg])).unwrap();
        tp0.normal_form(&l3.sub(&lg.scale(&LaurentPoly::one_plus_qinv())))
            .unwrap()
    };
    tb.alias("Linv", tlinv.clone());

    let tp = tb.partial();
    let tone = NcElement::one();
    let tfe = el(&[tf]);
    let tge = el(&[tg]);
    let tle = el(&[tl]);
    let tke = el(&[tl, tl]);
    let tee = el(&[te]);
    let thopf = HopfData {
        coproduct: vec![
            cop(&tp, &[(int(1), &tfe, &tkinv), (int(1), &tone, &tfe)]),
            cop(&tp, &[(int(1), &tge, &tke), (int(1), &tkinv, &tge)]),
            cop(&tp, &[(int(1), &tle, &tle)]),
            cop(&tp, &[(int(1), &tee, &tone), (int(1), &tke, &tee)]),
        ],
        counit: vec![
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        ],
        antipode: vec![
            tp.multiply(&tfe, &tke).unwrap().neg(),
            tge.neg(),
            tlinv.clone(),
            tp.multiply(&tkinv, &tee).unwrap().neg(),
        ],
    };
    let tlattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "Fdot^a Gdot^b L^e Edot^d (e < 4)".into(),
        grading: BTreeMap::from([(tf, -1), (tg, 0), (tl, 0), (te, 1)]),
    };
    let tilde_pres = tb.finish(thopf, tlattice);
    let tilde = TildeData {
        presentation: tilde_pres,
        recipe: vec![
            AmbientImage::plain(fe.scale(&qm1())),
            AmbientImage::plain(ge.scale(&qm1())),
            AmbientImage::plain(l_el.clone()),
            AmbientImage::plain(ee.scale(&qm1())),
        ],
    };
    let dt_exprs = vec![
        (f, NcElement::gen(tf)),
        (d, NcElement::gen(tl)),
        (g, NcElement::gen(tg)),
        (e, NcElement::gen(te)),
    ];
    // Map onto F[sSL2*] with generators x(0), z(1), zinv(2), y(3).
    let half = LaurentPoly::from_rat(rat_frac(1, 2));
    let map_images = vec![
        lin(&[(int(1), &[2usize, 3])]),                         // Fdot -> zinv*y
        lin(&[(half.clone(), &[1, 1]), (-&half, &[2, 2])]),     // Gdot -> (z^2 - z^-2)/2
        lin(&[(int(1), &[1])]),                                 // L -> z
        lin(&[(int(1), &[0, 1])]),                              // Edot -> x*z
    ];

    CatalogEntry {
        name: "Uq_sl2_hat_sc".into(),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: vec![f, e],
        classical_target: Some("F_sSL2star".into()),
        map_images: Some(map_images),
        notes: "simply connected variant with the square root L of K; table inferred from the rank-one pattern".into(),
    }
}
