//! Quantized function algebras of SL2 and SL3 (FRT-style generators with the
//! quantum determinant set to 1), with machine-derived tilde presentations.
//!
//! The PBW order lists subdiagonal entries first, then the diagonal, then
//! the superdiagonal; this makes the diagonal of the determinant rule a
//! contiguous block inside sorted words, so the normal monomials satisfy
//! min(N_11, ..., N_nn) = 0.

use super::{cop, el, ftilde, CatalogEntry};
use crate::hopf::HopfData;
use crate::ncalg::{
    int, lin, Classification, GenId, LatticeKind, LatticeSpec, NcElement, PresentationBuilder,
    Word,
};
use crate::qcoeff::LaurentPoly;
use std::collections::BTreeMap;

/// Positions (row, col) in the PBW listing order. For SL2 the order is
/// b < a < d < c (keeps the classical rendering b*c, q*b*a); for SL3 the
/// subdiagonal block comes first, then the diagonal, then the superdiagonal.
/// Either way the diagonal is a contiguous block.
fn positions(n: usize) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(1, 2), (1, 1), (2, 2), (2, 1)];
    }
    let mut ps = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i > j {
                ps.push((i, j));
            }
        }
    }
    for i in 1..=n {
        ps.push((i, i));
    }
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                ps.push((i, j));
            }
        }
    }
    ps
}

fn sl2_names() -> Vec<&'static str> {
    // (1,2) = b, (1,1) = a, (2,2) = d, (2,1) = c
    vec!["b", "a", "d", "c"]
}

fn sl3_names(ps: &[(usize, usize)]) -> Vec<String> {
    ps.iter().map(|(i, j)| format!("p{}{}", i, j)).collect()
}

/// Signed permutation expansion of the quantum determinant minor on the
/// given rows and columns: sum over bijections sigma of (-q)^{l(sigma)}
/// prod_k rho_{rows[k], cols[sigma(k)]} (rows and cols ascending).
fn quantum_minor(
    idx: &dyn Fn(usize, usize) -> GenId,
    rows: &[usize],
    cols: &[usize],
) -> NcElement {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..=p.len() {
                let mut np = p.clone();
                np.insert(pos, k - 1);
                out.push(np);
            }
        }
        out
    }
    fn inversions(p: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
    let k = rows.len();
    let mut out = NcElement::zero();
    for p in perms(k) {
        let l = inversions(&p);
        let mut word = Vec::with_capacity(k);
        for (r, &pi) in p.iter().enumerate() {
            word.push(idx(rows[r], cols[pi]));
        }
        let mut c = LaurentPoly::monomial(crate::qcoeff::rat(1), l as i64);
        if l % 2 == 1 {
            c = -&c;
        }
        out.add_term(Word(word), c);
    }
    out
}

pub(super) fn fq_sln_hat(n: usize) -> CatalogEntry {
    assert!(n == 2 || n == 3);
    let name = format!("Fq_SL{}_hat", n);
    let mut b = PresentationBuilder::new(&name, Classification::Qfa);
    let ps = positions(n);
    let names: Vec<String> = if n == 2 {
        sl2_names().into_iter().map(String::from).collect()
    } else {
        sl3_names(&ps)
    };
    for nm in &names {
        b.add_gen(nm);
    }
    let id_of: BTreeMap<(usize, usize), GenId> =
        ps.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let idx = |i: usize, j: usize| id_of[&(i, j)];

    // FRT 2x2 block relations for every pair of distinct entries, oriented
    // along the PBW order. Stage one: pure q-commutations (same row, same
    // column, antidiagonal pairs).
    let qq = LaurentPoly::q();
    let mut commutator_pairs = Vec::new();
    for x in 0..ps.len() {
        for y in 0..x {
            let (i1, j1) = ps[x];
            let (i2, j2) = ps[y];
            // relation between gen x (later in PBW order) and gen y (earlier)
            if i1 == i2 {
                // XY = qYX with X the smaller column
                if j1 < j2 {
                    // x is rho_{i,j1} with smaller column: x y = q y x
                    b.rule(&[x, y], lin(&[(qq.clone(), &[y, x])]));
                } else {
                    // y x-form: y is smaller column: y x = q x y -> rule x y = q^-1 y x
                    b.rule(&[x, y], lin(&[(LaurentPoly::q_inv(), &[y, x])]));
                }
            } else if j1 == j2 {
                if i1 < i2 {
                    b.rule(&[x, y], lin(&[(qq.clone(), &[y, x])]));
                } else {
                    b.rule(&[x, y], lin(&[(LaurentPoly::q_inv(), &[y, x])]));
                }
            } else if (i1 < i2) == (j1 < j2) {
                // diagonal pair of a 2x2 block: commutator relation, stage two
                commutator_pairs.push((x, y));
            } else {
                // antidiagonal pair: commute
                b.commutes(x, y, LaurentPoly::one());
            }
        }
    }
    // Stage two: diagonal-pair commutators
    //   rho_{ik} rho_{jl} - rho_{jl} rho_{ik} = (q - q^-1) rho_{il} rho_{jk}
    // for i < j, k < l; oriented along the PBW order.
    for (x, y) in commutator_pairs {
        let (i1, _) = ps[x];
        let (i2, _) = ps[y];
        let (top, bot) = if i1 < i2 { (x, y) } else { (y, x) };
        let (ti, tj) = ps[top];
        let (bi, bj) = ps[bot];
        // top = rho_{ti,tj} with ti < bi and tj < bj
        let corr = el(&[idx(ti, bj), idx(bi, tj)]);
        if top == y {
            // later generator x = rho_{jl}: x y = y x - (q - q^-1) corr
            let rhs = lin(&[(int(1), &[y, x])])
                .sub(&corr.scale(&LaurentPoly::q_minus_qinv()));
            b.rule(&[x, y], rhs);
        } else {
            // later generator x = rho_{ik}: x y = y x + (q - q^-1) corr
            let rhs = lin(&[(int(1), &[y, x])])
                .add(&corr.scale(&LaurentPoly::q_minus_qinv()));
            b.rule(&[x, y], rhs);
        }
        let _ = (ti, tj, bi, bj);
    }
    // Stage three: the determinant condition det_q = 1. For n = 2 it is a
    // two-letter rule a d -> 1 + q b c, and the normal monomials satisfy
    // min(N_11, N_22) = 0. For n = 3 the three-letter diagonal cannot be
    // rewritten confluently by contiguous matching (p11 p22^2 p33 hides the
    // diagonal), so the presentation is the FRT bialgebra with det_q - 1
    // declared as a central quotient; the zero test divides by it exactly.
    let diag: Vec<GenId> = (1..=n).map(|i| idx(i, i)).collect();
    let all: Vec<usize> = (1..=n).collect();
    let det = quantum_minor(&idx, &all, &all);
    if n == 2 {
        let mut rest = det.clone();
        rest.terms.remove(&Word(diag.clone()));
        let rhs = NcElement::one().sub(&rest);
        b.completion_rule(&diag, rhs);
    } else {
        let pp = b.partial();
        let c = pp
            .normal_form(&det.sub(&NcElement::one()))
            .expect("determinant normalizes");
        b.central(c);
    }

    let pp = b.partial();
    let mut coproduct = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    for &(i, j) in &ps {
        let mut d = crate::tensor::TensorElement::zero(2);
        for k in 1..=n {
            d = d.add(&cop(&pp, &[(int(1), &el(&[idx(i, k)]), &el(&[idx(k, j)]))]));
        }
        coproduct.push(d);
        counit.push(if i == j {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        });
        // S(rho_ij) = (-q)^{i-j} * quantum minor over rows != j, cols != i
        let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
        let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
        let minor = quantum_minor(&idx, &rows, &cols);
        let mut s = pp.normal_form(&minor).unwrap();
        let sign = i as i64 - j as i64;
        let mut c = LaurentPoly::monomial(crate::qcoeff::rat(1), sign);
        if sign.rem_euclid(2) == 1 {
            c = -&c;
        }
        s = s.scale(&c);
        antipode.push(s);
    }
    let mut grading: BTreeMap<GenId, i64> = BTreeMap::new();
    for (k, &(i, j)) in ps.iter().enumerate() {
        grading.insert(k, j as i64 - i as i64);
    }
    let lattice = LatticeSpec {
        kind: LatticeKind::Free,
        family: format!("sorted rho monomials with min(N_11..N_{}{}) = 0", n, n),
        grading,
    };
    let presentation = b.finish(HopfData { coproduct, counit, antipode }, lattice);

    // Tilde generators: r_ij = (rho_ij - delta_ij)/(q-1); for SL2 the
    // classical naming F = r_21, Hp = r_11, Hm = r_22, E = r_12.
    let tnames: Vec<String> = if n == 2 {
        // b -> E, a -> Hp, d -> Hm, c -> F
        vec!["E".into(), "Hp".into(), "Hm".into(), "F".into()]
    } else {
        ps.iter().map(|(i, j)| format!("r{}{}", i, j)).collect()
    };
    let tname_refs: Vec<&str> = tnames.iter().map(|s| s.as_str()).collect();
    let tilde = ftilde::derive_f_tilde(&presentation, &format!("Fq_SL{}_tilde", n), &tname_refs);
    let dt_exprs = ftilde::f_tilde_dt_exprs(&presentation);

    // Specialization map (SL2 only): Hp -> h, Hm -> -h, E -> e, F -> f
    // onto U(sl2*) with generators f(0), h(1), e(2).
    let (classical_target, map_images) = if n == 2 {
        // tilde generators in PBW order: E(0), Hp(1), Hm(2), F(3)
        (
            Some("U_sl2star".to_string()),
            Some(vec![
                lin(&[(int(1), &[2usize])]),  // E -> e
                lin(&[(int(1), &[1])]),       // Hp -> h
                lin(&[(-&int(1), &[1])]),     // Hm -> -h
                lin(&[(int(1), &[0])]),       // F -> f
            ]),
        )
    } else {
        (None, None)
    };

    CatalogEntry {
        name,
        presentation,
        tilde: Some(tilde),
        dt_exprs,
        excluded_unscaled: vec![],
        classical_target,
        map_images,
        notes: format!("FRT quantized function algebra of SL{} with det_q = 1", n),
    }
}
