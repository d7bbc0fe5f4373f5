//! Built-in, machine-verified presentations: the quantized enveloping and
//! function algebras of SL2, SL3, the Euclidean group E2 and the Heisenberg
//! groups H_n, together with their tilde counterparts, rescaling recipes,
//! classical targets and specialization maps.

mod classical_targets;
mod e2;
mod ftilde;
mod hn;
mod sl2;
mod sln;

use crate::classical::{GeneratorMap, PoissonPresentation};
use crate::drinfeld::TildeData;
use crate::ncalg::{GenId, NcElement, Presentation};
use crate::qcoeff::LaurentPoly;
use crate::tensor::{self, TensorElement};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Word element with unit coefficient (catalog construction helper).
pub(crate) fn el(ids: &[GenId]) -> NcElement {
    NcElement::from_word(crate::ncalg::Word(ids.to_vec()))
}

/// Normalized sum of c * (x (x) y) arity-2 tensors.
pub(crate) fn cop(
    p: &Presentation,
    parts: &[(LaurentPoly, &NcElement, &NcElement)],
) -> TensorElement {
    let mut out = TensorElement::zero(2);
    for (c, x, y) in parts {
        out = out.add(&tensor::tensor_of(&[(*x).clone(), (*y).clone()]).scale(c));
    }
    tensor::normalize(p, &out).expect("catalog coproduct normalizes")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("bad parameter in `{0}`: {1}")]
    BadParameter(String, String),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub presentation: Presentation,
    /// Declared tilde presentation with its rescaling recipe.
    pub tilde: Option<TildeData>,
    /// Expression of each hat generator in the double-tilde generators
    /// (elements written in the tilde presentation's variables).
    pub dt_exprs: Vec<(GenId, NcElement)>,
    /// Hat generators excluded from the tilde algebra (expected NOT-MEMBER).
    pub excluded_unscaled: Vec<GenId>,
    /// Name of the classical catalog target of the tilde presentation.
    pub classical_target: Option<String>,
    /// Images of the tilde generators in the classical target's variables.
    pub map_images: Option<Vec<NcElement>>,
    /// Short description of where the presentation comes from.
    pub notes: String,
}

type EntryCache = Mutex<HashMap<String, Arc<CatalogEntry>>>;

fn cache() -> &'static EntryCache {
    static CACHE: OnceLock<EntryCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All quantum entry base names (parameterized families listed once).
pub fn quantum_names() -> Vec<&'static str> {
    vec![
        "Uq_sl2_hat",
        "Uq_sl2_hat_sc",
        "Fq_SL2_hat",
        "Fq_SL3_hat",
        "Uq_e2_s_hat",
        "Uq_e2_a_hat",
        "Fq_E2_hat",
        "Fq_aE2_hat",
        "Uq_hn_s_hat",
        "Uq_hn_a_hat",
        "Fq_Hn_hat",
    ]
}

pub fn classical_names() -> Vec<&'static str> {
    vec![
        "F_aSL2star",
        "F_sSL2star",
        "U_sl2star",
        "F_sE2star",
        "F_aE2star",
        "U_e2star",
        "F_sHnstar",
        "F_aHnstar",
        "U_hnstar",
    ]
}

fn parse_param(name: &str) -> Result<(String, Option<usize>), CatalogError> {
    if let Some(open) = name.find('(') {
        if !name.ends_with(')') {
            return Err(CatalogError::BadParameter(
                name.to_string(),
                "missing closing parenthesis".into(),
            ));
        }
        let base = name[..open].to_string();
        let inner = &name[open + 1..name.len() - 1];
        let n: usize = inner.parse().map_err(|_| {
            CatalogError::BadParameter(name.to_string(), format!("`{}` is not a number", inner))
        })?;
        if !(1..=4).contains(&n) {
            return Err(CatalogError::BadParameter(
                name.to_string(),
                format!("n = {} out of range 1..=4", n),
            ));
        }
        Ok((base, Some(n)))
    } else {
        Ok((name.to_string(), None))
    }
}

/// Fetch a quantum catalog entry by name; n-parameterized families accept
/// `Name(n)` with 1 <= n <= 4 and default to n = 1.
pub fn get(name: &str) -> Result<Arc<CatalogEntry>, CatalogError> {
    let key = name.to_string();
    if let Some(e) = cache().lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let (base, param) = parse_param(name)?;
    let n = param.unwrap_or(1);
    let entry = match base.as_str() {
        "Uq_sl2_hat" => sl2::uq_sl2_hat(),
        "Uq_sl2_hat_sc" => sl2::uq_sl2_hat_sc(),
        "Fq_SL2_hat" => sln::fq_sln_hat(2),
        "Fq_SL3_hat" => sln::fq_sln_hat(3),
        "Uq_e2_s_hat" => e2::uq_e2_s_hat(),
        "Uq_e2_a_hat" => e2::uq_e2_a_hat(),
        "Fq_E2_hat" => e2::fq_e2_hat(),
        "Fq_aE2_hat" => e2::fq_ae2_hat(),
        "Uq_hn_s_hat" => hn::uq_hn_s_hat(n),
        "Uq_hn_a_hat" => hn::uq_hn_a_hat(n),
        "Fq_Hn_hat" => hn::fq_hn_hat(n),
        _ => return Err(CatalogError::UnknownEntry(name.to_string())),
    };
    // Families embed n in the entry name; reject stray parameters elsewhere.
    if param.is_some() && !entry.name.contains('(') {
        return Err(CatalogError::BadParameter(
            name.to_string(),
            "entry is not parameterized".into(),
        ));
    }
    let entry = Arc::new(entry);
    cache().lock().unwrap().insert(key, entry.clone());
    Ok(entry)
}

type ClassicalCache = Mutex<HashMap<String, Arc<PoissonPresentation>>>;

fn classical_cache() -> &'static ClassicalCache {
    static CACHE: OnceLock<ClassicalCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Fetch a classical target by name (same `Name(n)` convention).
pub fn classical_get(name: &str) -> Result<Arc<PoissonPresentation>, CatalogError> {
    let key = name.to_string();
    if let Some(e) = classical_cache().lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let (base, param) = parse_param(name)?;
    let n = param.unwrap_or(1);
    let t = match base.as_str() {
        "F_aSL2star" => classical_targets::f_a_sl2_star(),
        "F_sSL2star" => classical_targets::f_s_sl2_star(),
        "U_sl2star" => classical_targets::u_sl2_star(),
        "F_sE2star" => classical_targets::f_s_e2_star(),
        "F_aE2star" => classical_targets::f_a_e2_star(),
        "U_e2star" => classical_targets::u_e2_star(),
        "F_sHnstar" => classical_targets::f_s_hn_star(n),
        "F_aHnstar" => classical_targets::f_a_hn_star(n),
        "U_hnstar" => classical_targets::u_hn_star(n),
        _ => return Err(CatalogError::UnknownEntry(name.to_string())),
    };
    let t = Arc::new(t);
    classical_cache().lock().unwrap().insert(key, t.clone());
    Ok(t)
}

/// Resolve the declared specialization map of an entry, if any.
pub fn generator_map(entry: &CatalogEntry) -> Result<Option<GeneratorMap>, CatalogError> {
    let (Some(tilde), Some(target), Some(images)) = (
        entry.tilde.as_ref(),
        entry.classical_target.as_ref(),
        entry.map_images.as_ref(),
    ) else {
        return Ok(None);
    };
    let target = classical_get(target)?;
    Ok(Some(GeneratorMap {
        source: tilde.presentation.clone(),
        target: (*target).clone(),
        images: images.clone(),
    }))
}

/// `catalog list` data: every quantum entry name (families instantiated for
/// n = 1..4) followed by the classical targets.
pub fn list() -> Vec<String> {
    let mut out = Vec::new();
    for n in quantum_names() {
        if n.starts_with("Uq_hn") || n.starts_with("Fq_Hn") {
            for k in 1..=4 {
                out.push(format!("{}({})", n, k));
            }
        } else {
            out.push(n.to_string());
        }
    }
    for n in classical_names() {
        if n.contains("Hn") || n.contains("hn") {
            for k in 1..=4 {
                out.push(format!("{}({})", n, k));
            }
        } else {
            out.push(n.to_string());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_and_bad_parameter() {
        assert!(matches!(get("nope"), Err(CatalogError::UnknownEntry(_))));
        assert!(matches!(
            get("Uq_hn_s_hat(9)"),
            Err(CatalogError::BadParameter(_, _))
        ));
        assert!(matches!(
            get("Uq_hn_s_hat(x)"),
            Err(CatalogError::BadParameter(_, _))
        ));
    }

    #[test]
    fn all_entries_build() {
        for name in quantum_names() {
            let full = if name.contains("hn") || name.contains("Hn") {
                format!("{}(2)", name)
            } else {
                name.to_string()
            };
            let e = get(&full).unwrap();
            e.presentation.validate();
            if let Some(t) = &e.tilde {
                t.presentation.validate();
            }
        }
        for name in classical_names() {
            let full = if name.contains("Hn") || name.contains("hn") {
                format!("{}(2)", name)
            } else {
                name.to_string()
            };
            let t = classical_get(&full).unwrap();
            t.pres.validate();
        }
    }

    #[test]
    fn det_relation_in_fq_sl3() {
        // The quantum determinant has the six signed permutation terms with
        // coefficients (-q)^(length); it is carried as the central quotient.
        let e = get("Fq_SL3_hat").unwrap();
        let p = &e.presentation;
        let det = p.central_quotient.as_ref().expect("central quotient");
        // det - 1: the six permutation monomials plus the constant -1
        assert_eq!(det.terms.len(), 7);
        let coeffs: Vec<String> = det.terms.values().map(|c| c.to_string()).collect();
        assert!(coeffs.contains(&"-q".to_string()));
        assert!(coeffs.contains(&"q^2".to_string()));
        assert!(coeffs.contains(&"-q^3".to_string()));
        // the diagonal monomial is zero in the quotient exactly when reduced
        // against the remaining det terms
        let diag: Vec<_> = ["p11", "p22", "p33"]
            .iter()
            .map(|n| p.gen_id(n).unwrap())
            .collect();
        let diag_el = NcElement::from_word(crate::ncalg::Word(diag));
        let mut rest = det.clone();
        rest.terms.remove(&crate::ncalg::Word(
            ["p11", "p22", "p33"].iter().map(|n| p.gen_id(n).unwrap()).collect(),
        ));
        let reduced = diag_el.add(&rest); // diag + (det - diag) = det == 0 in quotient... 
        let candidate = reduced.sub(&det.clone());
        // sanity: diag - (1 - rest') differs from det by the constant
        let _ = candidate;
        assert!(p.is_true_zero(det).unwrap());
        assert!(!p.is_true_zero(&diag_el).unwrap());
    }

    #[test]
    fn fq_sl2_centrality_identity() {
        // ad - da = (q - q^-1) bc by normalization.
        let e = get("Fq_SL2_hat").unwrap();
        let p = &e.presentation;
        let a = p.resolve("a").unwrap();
        let d = p.resolve("d").unwrap();
        let lhs = p.multiply(&a, &d).unwrap().sub(&p.multiply(&d, &a).unwrap());
        let b = p.resolve("b").unwrap();
        let c = p.resolve("c").unwrap();
        let rhs = p
            .multiply(&b, &c)
            .unwrap()
            .scale(&crate::qcoeff::LaurentPoly::q_minus_qinv());
        assert_eq!(p.normal_form(&lhs.sub(&rhs)).unwrap(), NcElement::zero());
    }

    #[test]
    fn uq_e2_s_has_ef_commuting() {
        let e = get("Uq_e2_s_hat").unwrap();
        let p = &e.presentation;
        let ee = p.resolve("E").unwrap();
        let f = p.resolve("F").unwrap();
        let d = p.multiply(&ee, &f).unwrap().sub(&p.multiply(&f, &ee).unwrap());
        assert!(d.is_zero());
    }

    #[test]
    fn catalog_list_contains_expected() {
        let l = list();
        assert!(l.contains(&"Uq_sl2_hat".to_string()));
        assert!(l.contains(&"Fq_Hn_hat(3)".to_string()));
        assert!(l.contains(&"F_aSL2star".to_string()));
    }
}
