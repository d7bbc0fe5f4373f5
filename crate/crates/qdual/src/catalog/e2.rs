//! The three-dimensional Euclidean group: simply connected and adjoint
//! quantized enveloping forms, and the two quantized function algebras,
//! with tilde data and specialization maps.

use super::{cop, el, ftilde, CatalogEntry};
use crate::drinfeld::{AmbientImage, TildeData};
use crate::hopf::HopfData;
use crate::ncalg::{
    int, lin, qp, Classification, LatticeKind, LatticeSpec, NcElement, PresentationBuilder, TExpr,
};
use crate::qcoeff::{rat_frac, LaurentPoly};
use std::collections::BTreeMap;

fn qm1() -> LaurentPoly {
    LaurentPoly::q_minus_1()
}

/// (T - 1)/(q - 1).
fn plus_var() -> TExpr {
    let mut num = BTreeMap::new();
    num.insert(1, LaurentPoly::one());
    num.insert(0, -&LaurentPoly::one());
    TExpr { num, den1: 1, den2: 0 }
}

/// (T^-1 - 1)/(q - 1).
fn minus_var() -> TExpr {
    let mut num = BTreeMap::new();
    num.insert(-1, LaurentPoly::one());
    num.insert(0, -&LaurentPoly::one());
    TExpr { num, den1: 1, den2: 0 }
}

pub(super) fn uq_e2_s_hat() -> CatalogEntry {
    let mut b = PresentationBuilder::new("Uq_e2_s_hat", Classification::Quea);
    let f = b.add_gen("F");
    let dp = b.add_gen("Dp");
    let dm = b.add_gen("Dm");
    let e = b.add_gen("E");

    b.rule(&[dp, f], lin(&[(qp(-1), &[f, dp]), (-&qp(-1), &[f])]));
    b.rule(&[dm, f], lin(&[(LaurentPoly::q(), &[f, dm]), (LaurentPoly::one(), &[f])]));
    b.commutes(dm, dp, LaurentPoly::one());
    b.rule(&[e, f], el(&[f, e]));
    b.rule(&[e, dp], lin(&[(qp(-1), &[dp, e]), (-&qp(-1), &[e])]));
    b.rule(&[e, dm], lin(&[(LaurentPoly::q(), &[dm, e]), (LaurentPoly::one(), &[e])]));

    b.cartan_var(dp, plus_var());
    b.cartan_var(dm, minus_var());

    let l_el = lin(&[(int(1), &[]), (qm1(), &[dp])]);
    let linv_el = lin(&[(int(1), &[]), (qm1(), &[dm])]);
    let pp0 = b.partial();
    let l2_el = pp0.multiply(&l_el, &l_el).unwrap();
    let l2inv_el = pp0.multiply(&linv_el, &linv_el).unwrap();
    b.alias("L", l_el.clone());
    b.alias("Linv", linv_el.clone());
    b.alias("K", l2_el.clone());
    b.alias("Kinv", l2inv_el.clone());

    let pp = b.partial();
    let one = NcElement::one();
    let fe = el(&[f]);
    let dpe = el(&[dp]);
    let dme = el(&[dm]);
    let ee = el(&[e]);
    let hopf = HopfData {
        coproduct: vec![
            cop(&pp, &[(int(1), &fe, &l2inv_el), (int(1), &one, &fe)]),
            cop(&pp, &[(int(1), &dpe, &one), (int(1), &one, &dpe), (qm1(), &dpe, &dpe)]),
            cop(&pp, &[(int(1), &dme, &one), (int(1), &one, &dme), (qm1(), &dme, &dme)]),
            cop(&pp, &[(int(1), &ee, &one), (int(1), &l2_el, &ee)]),
        ],
        counit: vec![LaurentPoly::zero(); 4],
        antipode: vec![
            pp.multiply(&fe, &l2_el).unwrap().neg(),
            dme.clone(),
            dpe.clone(),
            pp.multiply(&l2inv_el, &ee).unwrap().neg(),
        ],
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Spanning,
        family: "F^a Dp^b Dm^c E^d".into(),
        grading: BTreeMap::from([(f, -1), (dp, 0), (dm, 0), (e, 1)]),
    };
    let presentation = b.finish(hopf, lattice);

    // --- tilde: script generators Fc = L Fdot, L^{\pm 1}, Ec = Edot L^-1 ---
    let mut tb = PresentationBuilder::new("Uq_e2_s_tilde", Classification::Qfa);
    let tf = tb.add_gen("Fc");
    let tl = tb.add_gen("L");
    let tli = tb.add_gen("Linv");
    let te = tb.add_gen("Ec");
    tb.mark_inverse_pair(tl, tli);
    tb.rule(&[tl, tf], lin(&[(qp(-1), &[tf, tl])]));
    tb.rule(&[tli, tf], lin(&[(LaurentPoly::q(), &[tf, tli])]));
    tb.rule(&[te, tf], el(&[tf, te]));
    tb.rule(&[te, tl], lin(&[(qp(-1), &[tl, te])]));
    tb.rule(&[te, tli], lin(&[(LaurentPoly::q(), &[tli, te])]));

    let tp = tb.partial();
    let tfe = el(&[tf]);
    let tle = el(&[tl]);
    let tlie = el(&[tli]);
    let tee = el(&[te]);
    let thopf = HopfData {
        coproduct: vec![
            cop(&tp, &[(int(1), &tfe, &tlie), (int(1), &tle, &tfe)]),
            cop(&tp, &[(int(1), &tle, &tle)]),
            cop(&tp, &[(int(1), &tlie, &tlie)]),
            cop(&tp, &[(int(1), &tee, &tlie), (int(1), &tle, &tee)]),
        ],
        counit: vec![
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        ],
        // S(Fc) = -q Fc and S(Ec) = -q^-1 Ec; forced by the antipode axiom
        // against L Fc = q^-1 Fc L (and verified through the ambient recipe).
        antipode: vec![
            tfe.scale(&-&LaurentPoly::q()),
            tlie.clone(),
            tle.clone(),
            tee.scale(&-&qp(-1)),
        ],
    };
    let tlattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "Fc^a L^z Ec^c".into(),
        grading: BTreeMap::from([(tf, -1), (tl, 0), (tli, 0), (te, 1)]),
    };
    let tilde_pres = tb.finish(thopf, tlattice);
    let fdot = fe.scale(&qm1());
    let edot = ee.scale(&qm1());
    let tilde = TildeData {
        presentation: tilde_pres,
        recipe: vec![
            AmbientImage::plain(pp.multiply(&l_el, &fdot).unwrap()),
            AmbientImage::plain(l_el.clone()),
            AmbientImage::plain(linv_el.clone()),
            AmbientImage::plain(pp.multiply(&edot, &linv_el).unwrap()),
        ],
    };

    // F = Linv (L F), Dp = (L-1)/(q-1), Dm = (Linv-1)/(q-1), E = (E Linv) L.
    let dt_exprs = vec![
        (
            f,
            lin(&[(int(1), &[tf]), (qm1(), &[tli, tf])]),
        ),
        (dp, NcElement::gen(tl)),
        (dm, NcElement::gen(tli)),
        (
            e,
            lin(&[(int(1), &[te]), (qm1(), &[te, tl])]),
        ),
    ];
    // Map onto F[sE2*]: Ec -> x, L -> z, Fc -> y.
    let map_images = vec![
        lin(&[(int(1), &[3usize])]), // Fc -> y
        lin(&[(int(1), &[1])]),      // L -> z
        lin(&[(int(1), &[2])]),      // Linv -> zinv
        lin(&[(int(1), &[0])]),      // Ec -> x
    ];

    CatalogEntry {
        name: "Uq_e2_s_hat".into(),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: vec![f, e],
        classical_target: Some("F_sE2star".into()),
        map_images: Some(map_images),
        notes: "simply connected quantized enveloping form of the Euclidean algebra".into(),
    }
}

pub(super) fn uq_e2_a_hat() -> CatalogEntry {
    let mut b = PresentationBuilder::new("Uq_e2_a_hat", Classification::Quea);
    let f = b.add_gen("F");
    let hp = b.add_gen("Hp");
    let hm = b.add_gen("Hm");
    let e = b.add_gen("E");

    let qp1 = &LaurentPoly::q() + &int(1);
    b.rule(
        &[hp, f],
        lin(&[(qp(-2), &[f, hp]), (-&(&qp(-2) * &qp1), &[f])]),
    );
    b.rule(
        &[hm, f],
        lin(&[(qp(2), &[f, hm]), (qp1.clone(), &[f])]),
    );
    b.commutes(hm, hp, LaurentPoly::one());
    b.rule(&[e, f], el(&[f, e]));
    b.rule(
        &[e, hp],
        lin(&[(qp(-2), &[hp, e]), (-&(&qp(-2) * &qp1), &[e])]),
    );
    b.rule(
        &[e, hm],
        lin(&[(qp(2), &[hm, e]), (qp1.clone(), &[e])]),
    );

    b.cartan_var(hp, plus_var());
    b.cartan_var(hm, minus_var());

    let k_el = lin(&[(int(1), &[]), (qm1(), &[hp])]);
    let kinv_el = lin(&[(int(1), &[]), (qm1(), &[hm])]);
    b.alias("K", k_el.clone());
    b.alias("Kinv", kinv_el.clone());

    let pp = b.partial();
    let one = NcElement::one();
    let fe = el(&[f]);
    let hpe = el(&[hp]);
    let hme = el(&[hm]);
    let ee = el(&[e]);
    let hopf = HopfData {
        coproduct: vec![
            cop(&pp, &[(int(1), &fe, &kinv_el), (int(1), &one, &fe)]),
            cop(&pp, &[(int(1), &hpe, &one), (int(1), &one, &hpe), (qm1(), &hpe, &hpe)]),
            cop(&pp, &[(int(1), &hme, &one), (int(1), &one, &hme), (qm1(), &hme, &hme)]),
            cop(&pp, &[(int(1), &ee, &one), (int(1), &k_el, &ee)]),
        ],
        counit: vec![LaurentPoly::zero(); 4],
        antipode: vec![
            pp.multiply(&fe, &k_el).unwrap().neg(),
            hme.clone(),
            hpe.clone(),
            pp.multiply(&kinv_el, &ee).unwrap().neg(),
        ],
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Spanning,
        family: "F^a Hp^b Hm^c E^d".into(),
        grading: BTreeMap::from([(f, -1), (hp, 0), (hm, 0), (e, 1)]),
    };
    let presentation = b.finish(hopf, lattice);

    // --- tilde on Fdot, K^{\pm 1}, Edot ---
    let mut tb = PresentationBuilder::new("Uq_e2_a_tilde", Classification::Qfa);
    let tf = tb.add_gen("Fdot");
    let tk = tb.add_gen("K");
    let tki = tb.add_gen("Kinv");
    let te = tb.add_gen("Edot");
    tb.mark_inverse_pair(tk, tki);
    tb.rule(&[tk, tf], lin(&[(qp(-2), &[tf, tk])]));
    tb.rule(&[tki, tf], lin(&[(qp(2), &[tf, tki])]));
    tb.rule(&[te, tf], el(&[tf, te]));
    tb.rule(&[te, tk], lin(&[(qp(-2), &[tk, te])]));
    tb.rule(&[te, tki], lin(&[(qp(2), &[tki, te])]));

    let tp = tb.partial();
    let tone = NcElement::one();
    let tfe = el(&[tf]);
    let tke = el(&[tk]);
    let tkie = el(&[tki]);
    let tee = el(&[te]);
    let thopf = HopfData {
        coproduct: vec![
            cop(&tp, &[(int(1), &tfe, &tkie), (int(1), &tone, &tfe)]),
            cop(&tp, &[(int(1), &tke, &tke)]),
            cop(&tp, &[(int(1), &tkie, &tkie)]),
            cop(&tp, &[(int(1), &tee, &tone), (int(1), &tke, &tee)]),
        ],
        counit: vec![
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        ],
        antipode: vec![
            tp.multiply(&tfe, &tke).unwrap().neg(),
            tkie.clone(),
            tke.clone(),
            tp.multiply(&tkie, &tee).unwrap().neg(),
        ],
    };
    let tlattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "Fdot^a K^z Edot^c".into(),
        grading: BTreeMap::from([(tf, -1), (tk, 0), (tki, 0), (te, 1)]),
    };
    let tilde_pres = tb.finish(thopf, tlattice);
    let tilde = TildeData {
        presentation: tilde_pres,
        recipe: vec![
            AmbientImage::plain(fe.scale(&qm1())),
            AmbientImage::plain(k_el.clone()),
            AmbientImage::plain(kinv_el.clone()),
            AmbientImage::plain(ee.scale(&qm1())),
        ],
    };
    let dt_exprs = vec![
        (f, NcElement::gen(tf)),
        (hp, NcElement::gen(tk)),
        (hm, NcElement::gen(tki)),
        (e, NcElement::gen(te)),
    ];
    // Map onto F[aE2*]: Edot -> xz, K -> z^2, Fdot -> z^-1 y.
    let map_images = vec![
        lin(&[(int(1), &[3usize])]), // Fdot -> zinvy
        lin(&[(int(1), &[1])]),      // K -> z2
        lin(&[(int(1), &[2])]),      // Kinv -> z2inv
        lin(&[(int(1), &[0])]),      // Edot -> xz
    ];

    CatalogEntry {
        name: "Uq_e2_a_hat".into(),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: vec![f, e],
        classical_target: Some("F_aE2star".into()),
        map_images: Some(map_images),
        notes: "adjoint quantized enveloping form of the Euclidean algebra".into(),
    }
}

pub(super) fn fq_e2_hat() -> CatalogEntry {
    let mut b = PresentationBuilder::new("Fq_E2_hat", Classification::Qfa);
    let bb = b.add_gen("b");
    let a = b.add_gen("a");
    let ai = b.add_gen("ainv");
    let c = b.add_gen("c");
    b.mark_inverse_pair(a, ai);
    b.rule(&[a, bb], lin(&[(LaurentPoly::q(), &[bb, a])]));
    b.rule(&[ai, bb], lin(&[(qp(-1), &[bb, ai])]));
    b.rule(&[c, bb], el(&[bb, c]));
    b.rule(&[c, a], lin(&[(qp(-1), &[a, c])]));
    b.rule(&[c, ai], lin(&[(LaurentPoly::q(), &[ai, c])]));

    let pp = b.partial();
    let be = el(&[bb]);
    let ae = el(&[a]);
    let aie = el(&[ai]);
    let ce = el(&[c]);
    let hopf = HopfData {
        coproduct: vec![
            cop(&pp, &[(int(1), &be, &aie), (int(1), &ae, &be)]),
            cop(&pp, &[(int(1), &ae, &ae)]),
            cop(&pp, &[(int(1), &aie, &aie)]),
            cop(&pp, &[(int(1), &ce, &ae), (int(1), &aie, &ce)]),
        ],
        counit: vec![
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        ],
        antipode: vec![
            be.scale(&-&qp(-1)),
            aie.clone(),
            ae.clone(),
            ce.scale(&-&LaurentPoly::q()),
        ],
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "b^i a^z c^j".into(),
        grading: BTreeMap::from([(bb, 1), (a, 0), (ai, 0), (c, -1)]),
    };
    let presentation = b.finish(hopf, lattice);
    let tilde = ftilde::derive_f_tilde(
        &presentation,
        "Fq_E2_tilde",
        &["E", "Dp", "Dm", "F"],
    );
    let dt_exprs = ftilde::f_tilde_dt_exprs(&presentation);
    // Map onto U(e2*): Dp -> h/2, Dm -> -h/2, E -> e, F -> f.
    let half = LaurentPoly::from_rat(rat_frac(1, 2));
    let map_images = vec![
        lin(&[(int(1), &[2usize])]), // E -> e
        lin(&[(half.clone(), &[1])]),
        lin(&[(-&half, &[1])]),
        lin(&[(int(1), &[0])]), // F -> f
    ];

    CatalogEntry {
        name: "Fq_E2_hat".into(),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: vec![],
        classical_target: Some("U_e2star".into()),
        map_images: Some(map_images),
        notes: "quantized function algebra of the Euclidean group".into(),
    }
}

pub(super) fn fq_ae2_hat() -> CatalogEntry {
    let mut b = PresentationBuilder::new("Fq_aE2_hat", Classification::Qfa);
    let be = b.add_gen("beta");
    let al = b.add_gen("alpha");
    let ali = b.add_gen("alphainv");
    let ga = b.add_gen("gamma");
    b.mark_inverse_pair(al, ali);
    b.rule(&[al, be], lin(&[(qp(2), &[be, al])]));
    b.rule(&[ali, be], lin(&[(qp(-2), &[be, ali])]));
    // beta gamma = (ba)(a^-1 c) = bc, gamma beta = q^-2 bc
    b.rule(&[ga, be], lin(&[(qp(-2), &[be, ga])]));
    b.rule(&[ga, al], lin(&[(qp(-2), &[al, ga])]));
    b.rule(&[ga, ali], lin(&[(qp(2), &[ali, ga])]));

    let pp = b.partial();
    let bee = el(&[be]);
    let ale = el(&[al]);
    let alie = el(&[ali]);
    let gae = el(&[ga]);
    let hopf = HopfData {
        coproduct: vec![
            cop(&pp, &[(int(1), &bee, &NcElement::one()), (int(1), &ale, &bee)]),
            cop(&pp, &[(int(1), &ale, &ale)]),
            cop(&pp, &[(int(1), &alie, &alie)]),
            cop(&pp, &[(int(1), &gae, &NcElement::one()), (int(1), &alie, &gae)]),
        ],
        counit: vec![
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        ],
        antipode: vec![
            pp.multiply(&bee, &alie).unwrap().scale(&-&qp(-2)),
            alie.clone(),
            ale.clone(),
            pp.multiply(&ale, &gae).unwrap().neg(),
        ],
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "beta^i alpha^z gamma^j".into(),
        grading: BTreeMap::from([(be, 1), (al, 0), (ali, 0), (ga, -1)]),
    };
    let presentation = b.finish(hopf, lattice);
    let tilde = ftilde::derive_f_tilde(
        &presentation,
        "Fq_aE2_tilde",
        &["E", "Hp", "Hm", "F"],
    );
    let dt_exprs = ftilde::f_tilde_dt_exprs(&presentation);
    // Map onto U(e2*): Hp -> h, Hm -> -h, E -> e, F -> f.
    let map_images = vec![
        lin(&[(int(1), &[2usize])]),
        lin(&[(int(1), &[1])]),
        lin(&[(-&int(1), &[1])]),
        lin(&[(int(1), &[0])]),
    ];

    CatalogEntry {
        name: "Fq_aE2_hat".into(),
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: vec![],
        classical_target: Some("U_e2star".into()),
        map_images: Some(map_images),
        notes: "even-degree subalgebra form of the Euclidean quantized function algebra".into(),
    }
}
