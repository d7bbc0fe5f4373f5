//! Classical targets of the specialization maps: coordinate rings of the
//! dual Poisson groups (with bracket tables) and enveloping algebras of the
//! dual Lie bialgebras (with cobracket tables).

use super::{cop, el};
use crate::classical::{LimitMarker, PoissonPresentation};
use crate::hopf::HopfData;
use crate::ncalg::{
    int, lin, Classification, GenId, LatticeKind, LatticeSpec, NcElement, PresentationBuilder,
};
use crate::qcoeff::{rat_frac, LaurentPoly};
use crate::tensor::TensorElement;
use std::collections::BTreeMap;

fn half() -> LaurentPoly {
    LaurentPoly::from_rat(rat_frac(1, 2))
}

fn t2(slots: &[(LaurentPoly, GenId, GenId)]) -> TensorElement {
    let mut out = TensorElement::zero(2);
    for (c, x, y) in slots {
        out.add_term(
            vec![crate::ncalg::Word(vec![*x]), crate::ncalg::Word(vec![*y])],
            c.clone(),
        );
    }
    out
}

/// Laurent-monomial coordinate ring on x, z^{\pm1}, y with the rank-one
/// bracket pattern {z, x} = s xz, {z, y} = -s zy, {x, y} = w.
fn xz_y_ring(
    name: &str,
    s: i64,
    w_bracket: NcElement,
) -> PoissonPresentation {
    let mut b = PresentationBuilder::new(name, Classification::Classical);
    let x = b.add_gen("x");
    let z = b.add_gen("z");
    let zi = b.add_gen("zinv");
    let y = b.add_gen("y");
    b.mark_inverse_pair(z, zi);
    b.commutes(z, x, LaurentPoly::one());
    b.commutes(zi, x, LaurentPoly::one());
    b.commutes(y, x, LaurentPoly::one());
    b.commutes(y, z, LaurentPoly::one());
    b.commutes(y, zi, LaurentPoly::one());
    let pp = b.partial();
    let xe = el(&[x]);
    let ze = el(&[z]);
    let zie = el(&[zi]);
    let ye = el(&[y]);
    let hopf = HopfData {
        coproduct: vec![
            cop(&pp, &[(int(1), &xe, &zie), (int(1), &ze, &xe)]),
            cop(&pp, &[(int(1), &ze, &ze)]),
            cop(&pp, &[(int(1), &zie, &zie)]),
            cop(&pp, &[(int(1), &ye, &zie), (int(1), &ze, &ye)]),
        ],
        counit: vec![
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        ],
        antipode: vec![xe.neg(), zie.clone(), ze.clone(), ye.neg()],
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "x^a z^k y^b".into(),
        grading: BTreeMap::new(),
    };
    let pres = b.finish(hopf, lattice);
    let mut bracket = BTreeMap::new();
    // {x, z} = -s x z, {x, zinv} = s x zinv, {z, y} = -s z y, {zinv, y} = s zinv y
    bracket.insert((x, z), el(&[x, z]).scale(&int(-s)));
    bracket.insert((x, zi), el(&[x, zi]).scale(&int(s)));
    bracket.insert((z, y), el(&[z, y]).scale(&int(-s)));
    bracket.insert((zi, y), el(&[zi, y]).scale(&int(s)));
    if !w_bracket.is_zero() {
        bracket.insert((x, y), w_bracket);
    }
    PoissonPresentation {
        pres,
        marker: LimitMarker::Poisson,
        bracket,
        cobracket: BTreeMap::new(),
    }
}

/// Even-degree subring generated by xz, z^{\pm2}, z^-1 y.
fn even_xz_y_ring(name: &str, w_bracket: NcElement) -> PoissonPresentation {
    let mut b = PresentationBuilder::new(name, Classification::Classical);
    let xz = b.add_gen("xz");
    let z2 = b.add_gen("z2");
    let z2i = b.add_gen("z2inv");
    let yy = b.add_gen("zinvy");
    b.mark_inverse_pair(z2, z2i);
    b.commutes(z2, xz, LaurentPoly::one());
    b.commutes(z2i, xz, LaurentPoly::one());
    b.commutes(yy, xz, LaurentPoly::one());
    b.commutes(yy, z2, LaurentPoly::one());
    b.commutes(yy, z2i, LaurentPoly::one());
    let pp = b.partial();
    let one = NcElement::one();
    let xe = el(&[xz]);
    let ze = el(&[z2]);
    let zie = el(&[z2i]);
    let ye = el(&[yy]);
    let hopf = HopfData {
        coproduct: vec![
            cop(&pp, &[(int(1), &xe, &one), (int(1), &ze, &xe)]),
            cop(&pp, &[(int(1), &ze, &ze)]),
            cop(&pp, &[(int(1), &zie, &zie)]),
            cop(&pp, &[(int(1), &ye, &zie), (int(1), &one, &ye)]),
        ],
        counit: vec![
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        ],
        antipode: vec![
            pp.multiply(&xe, &zie).unwrap().neg(),
            zie.clone(),
            ze.clone(),
            pp.multiply(&ze, &ye).unwrap().neg(),
        ],
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "(xz)^a (z2)^k (zinvy)^b".into(),
        grading: BTreeMap::new(),
    };
    let pres = b.finish(hopf, lattice);
    let mut bracket = BTreeMap::new();
    bracket.insert((xz, z2), el(&[xz, z2]).scale(&int(-2)));
    bracket.insert((xz, z2i), el(&[xz, z2i]).scale(&int(2)));
    bracket.insert((z2, yy), el(&[z2, yy]).scale(&int(-2)));
    bracket.insert((z2i, yy), el(&[z2i, yy]).scale(&int(2)));
    if !w_bracket.is_zero() {
        bracket.insert((xz, yy), w_bracket);
    }
    PoissonPresentation {
        pres,
        marker: LimitMarker::Poisson,
        bracket,
        cobracket: BTreeMap::new(),
    }
}

pub(super) fn f_s_sl2_star() -> PoissonPresentation {
    // {x, y} = (z^2 - z^-2)/2
    let w = lin(&[(half(), &[1usize, 1]), (-&half(), &[2, 2])]);
    xz_y_ring("F_sSL2star", 1, w)
}

pub(super) fn f_a_sl2_star() -> PoissonPresentation {
    let w = lin(&[(half(), &[1usize]), (-&half(), &[2])]);
    even_xz_y_ring("F_aSL2star", w)
}

pub(super) fn f_s_e2_star() -> PoissonPresentation {
    xz_y_ring("F_sE2star", 1, NcElement::zero())
}

pub(super) fn f_a_e2_star() -> PoissonPresentation {
    even_xz_y_ring("F_aE2star", NcElement::zero())
}

/// Enveloping algebra on f, h, e with [h,e] = ce e, [h,f] = cf f, [e,f] = 0,
/// primitive coproduct, and a declared cobracket table.
fn dual_enveloping(
    name: &str,
    ce: i64,
    cf: i64,
    cobracket: BTreeMap<GenId, TensorElement>,
) -> PoissonPresentation {
    let mut b = PresentationBuilder::new(name, Classification::Classical);
    let f = b.add_gen("f");
    let h = b.add_gen("h");
    let e = b.add_gen("e");
    // h f = f h + cf f ; e h = h e - ce e ; e f = f e
    b.rule(&[h, f], lin(&[(int(1), &[f, h]), (int(cf), &[f])]));
    b.rule(&[e, f], el(&[f, e]));
    b.rule(&[e, h], lin(&[(int(1), &[h, e]), (int(-ce), &[e])]));
    let pp = b.partial();
    let one = NcElement::one();
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for g in [f, h, e] {
        let ge = el(&[g]);
        coproduct.push(cop(&pp, &[(int(1), &ge, &one), (int(1), &one, &ge)]));
        antipode.push(ge.neg());
    }
    let hopf = HopfData {
        coproduct,
        counit: vec![LaurentPoly::zero(); 3],
        antipode,
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "f^a h^b e^c".into(),
        grading: BTreeMap::new(),
    };
    let pres = b.finish(hopf, lattice);
    PoissonPresentation {
        pres,
        marker: LimitMarker::CoPoisson,
        bracket: BTreeMap::new(),
        cobracket,
    }
}

pub(super) fn u_sl2_star() -> PoissonPresentation {
    // delta(f) = 2(f (x) h - h (x) f), delta(h) = e (x) f - f (x) e,
    // delta(e) = 2(h (x) e - e (x) h); generators f(0), h(1), e(2).
    let two = int(2);
    let cob = BTreeMap::from([
        (0, t2(&[(two.clone(), 0, 1), (-&two, 1, 0)])),
        (1, t2(&[(int(1), 2, 0), (int(-1), 0, 2)])),
        (2, t2(&[(two.clone(), 1, 2), (-&two, 2, 1)])),
    ]);
    dual_enveloping("U_sl2star", 1, 1, cob)
}

pub(super) fn u_e2_star() -> PoissonPresentation {
    // delta(f) = f (x) h - h (x) f, delta(h) = 0, delta(e) = h (x) e - e (x) h
    let cob = BTreeMap::from([
        (0, t2(&[(int(1), 0, 1), (int(-1), 1, 0)])),
        (2, t2(&[(int(1), 1, 2), (int(-1), 2, 1)])),
    ]);
    dual_enveloping("U_e2star", 2, 2, cob)
}

pub(super) fn u_hn_star(n: usize) -> PoissonPresentation {
    let mut b = PresentationBuilder::new(&format!("U_hnstar({})", n), Classification::Classical);
    let fs: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("f{}", i))).collect();
    let h = b.add_gen("h");
    let es: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("e{}", i))).collect();
    for j in 0..n {
        for i in 0..j {
            b.commutes(fs[j], fs[i], LaurentPoly::one());
            b.commutes(es[j], es[i], LaurentPoly::one());
        }
    }
    for &f in &fs {
        // [f_i, h] = f_i: h f_i = f_i h - f_i
        b.rule(&[h, f], lin(&[(int(1), &[f, h]), (int(-1), &[f])]));
    }
    for &e in &es {
        // [e_i, h] = e_i: e_i h = h e_i + e_i
        b.rule(&[e, h], lin(&[(int(1), &[h, e]), (int(1), &[e])]));
        for &f in &fs {
            b.commutes(e, f, LaurentPoly::one());
        }
    }
    let pp = b.partial();
    let one = NcElement::one();
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for g in 0..(2 * n + 1) {
        let ge = el(&[g]);
        coproduct.push(cop(&pp, &[(int(1), &ge, &one), (int(1), &one, &ge)]));
        antipode.push(ge.neg());
    }
    let hopf = HopfData {
        coproduct,
        counit: vec![LaurentPoly::zero(); 2 * n + 1],
        antipode,
    };
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "f^a h^b e^c".into(),
        grading: BTreeMap::new(),
    };
    let pres = b.finish(hopf, lattice);
    // delta(h) = sum e_j (x) f_j - f_j (x) e_j
    let mut dh = TensorElement::zero(2);
    for i in 0..n {
        dh = dh.add(&t2(&[(int(1), es[i], fs[i]), (int(-1), fs[i], es[i])]));
    }
    PoissonPresentation {
        pres,
        marker: LimitMarker::CoPoisson,
        bracket: BTreeMap::new(),
        cobracket: BTreeMap::from([(h, dh)]),
    }
}

pub(super) fn f_s_hn_star(n: usize) -> PoissonPresentation {
    let mut b = PresentationBuilder::new(&format!("F_sHnstar({})", n), Classification::Classical);
    let als: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("alpha{}", i))).collect();
    let ga = b.add_gen("gamma");
    let gi = b.add_gen("gammainv");
    let bes: Vec<GenId> = (1..=n).map(|i| b.add_gen(&format!("beta{}", i))).collect();
    b.mark_inverse_pair(ga, gi);
    for j in 0..n {
        for i in 0..j {
            b.commutes(als[j], als[i], LaurentPoly::one());
            b.commutes(bes[j], bes[i], LaurentPoly::one());
        }
    }
    for &al in &als {
        b.commutes(ga, al, LaurentPoly::one());
        b.commutes(gi, al, LaurentPoly::one());
    }
    for &bee in &bes {
        for &al in &als {
            b.commutes(bee, al, LaurentPoly::one());
        }
        b.commutes(bee, ga, LaurentPoly::one());
        b.commutes(bee, gi, LaurentPoly::one());
    }
    let pp = b.partial();
    let gae = el(&[ga]);
    let gie = el(&[gi]);
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for &al in &als {
        let ae = el(&[al]);
        coproduct.push(cop(&pp, &[(int(1), &ae, &gae), (int(1), &gie, &ae)]));
        antipode.push(ae.neg());
    }
    coproduct.push(cop(&pp, &[(int(1), &gae, &gae)]));
    antipode.push(gie.clone());
    coproduct.push(cop(&pp, &[(int(1), &gie, &gie)]));
    antipode.push(gae.clone());
    for &bee in &bes {
        let be = el(&[bee]);
        coproduct.push(cop(&pp, &[(int(1), &be, &gae), (int(1), &gie, &be)]));
        antipode.push(be.neg());
    }
    let mut counit = vec![LaurentPoly::zero(); 2 * n + 2];
    counit[n] = LaurentPoly::one();
    counit[n + 1] = LaurentPoly::one();
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "alpha^a gamma^k beta^b".into(),
        grading: BTreeMap::new(),
    };
    let pres = b.finish(HopfData { coproduct, counit, antipode }, lattice);
    let mut bracket = BTreeMap::new();
    for i in 0..n {
        // {alpha_i, beta_i} = (gamma^2 - gamma^-2)/2
        bracket.insert(
            (als[i], bes[i]),
            lin(&[(half(), &[ga, ga]), (-&half(), &[gi, gi])]),
        );
    }
    PoissonPresentation {
        pres,
        marker: LimitMarker::Poisson,
        bracket,
        cobracket: BTreeMap::new(),
    }
}

pub(super) fn f_a_hn_star(n: usize) -> PoissonPresentation {
    let mut b = PresentationBuilder::new(&format!("F_aHnstar({})", n), Classification::Classical);
    let als: Vec<GenId> = (1..=n)
        .map(|i| b.add_gen(&format!("alphagamma{}", i)))
        .collect();
    let z2 = b.add_gen("gamma2");
    let z2i = b.add_gen("gamma2inv");
    let bes: Vec<GenId> = (1..=n)
        .map(|i| b.add_gen(&format!("gammainvbeta{}", i)))
        .collect();
    b.mark_inverse_pair(z2, z2i);
    for j in 0..n {
        for i in 0..j {
            b.commutes(als[j], als[i], LaurentPoly::one());
            b.commutes(bes[j], bes[i], LaurentPoly::one());
        }
    }
    for &al in &als {
        b.commutes(z2, al, LaurentPoly::one());
        b.commutes(z2i, al, LaurentPoly::one());
    }
    for &bee in &bes {
        for &al in &als {
            b.commutes(bee, al, LaurentPoly::one());
        }
        b.commutes(bee, z2, LaurentPoly::one());
        b.commutes(bee, z2i, LaurentPoly::one());
    }
    let pp = b.partial();
    let one = NcElement::one();
    let ze = el(&[z2]);
    let zie = el(&[z2i]);
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for &al in &als {
        let ae = el(&[al]);
        coproduct.push(cop(&pp, &[(int(1), &ae, &ze), (int(1), &one, &ae)]));
        antipode.push(pp.multiply(&ae, &zie).unwrap().neg());
    }
    coproduct.push(cop(&pp, &[(int(1), &ze, &ze)]));
    antipode.push(zie.clone());
    coproduct.push(cop(&pp, &[(int(1), &zie, &zie)]));
    antipode.push(ze.clone());
    for &bee in &bes {
        let be = el(&[bee]);
        coproduct.push(cop(&pp, &[(int(1), &be, &one), (int(1), &zie, &be)]));
        antipode.push(pp.multiply(&be, &ze).unwrap().neg());
    }
    let mut counit = vec![LaurentPoly::zero(); 2 * n + 2];
    counit[n] = LaurentPoly::one();
    counit[n + 1] = LaurentPoly::one();
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: "(alphagamma)^a (gamma2)^k (gammainvbeta)^b".into(),
        grading: BTreeMap::new(),
    };
    let pres = b.finish(HopfData { coproduct, counit, antipode }, lattice);
    let mut bracket = BTreeMap::new();
    for i in 0..n {
        bracket.insert(
            (als[i], bes[i]),
            lin(&[(half(), &[z2]), (-&half(), &[z2i])]),
        );
    }
    PoissonPresentation {
        pres,
        marker: LimitMarker::Poisson,
        bracket,
        cobracket: BTreeMap::new(),
    }
}
