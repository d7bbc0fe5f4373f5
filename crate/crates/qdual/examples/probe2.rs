use qdual::*;
use qdual::ncalg::NcElement;
fn main() {
    let e = catalog::get("Uq_sl2_hat").unwrap();
    let p = &e.presentation;
    // lattice_valuation of a simple spanning element
    let t0 = std::time::Instant::now();
    let h = p.resolve("H").unwrap();
    let v = drinfeld::lattice_valuation_nc(p, &h).unwrap();
    eprintln!("val(H) = {:?} in {:?}", v, t0.elapsed());
    // tensor case: Delta(F) - op
    let t0 = std::time::Instant::now();
    let d = hopf::apply_coproduct(p, &p.resolve("F").unwrap()).unwrap();
    let diff = d.sub(&d.reversed());
    eprintln!("diff terms {}", diff.terms.len());
    let v = drinfeld::lattice_valuation(p, &diff).unwrap();
    eprintln!("val(Delta F - op) = {:?} in {:?}", v, t0.elapsed());
    let t0 = std::time::Instant::now();
    let sp = classical::specialize(p);
    eprintln!("specialize: {} in {:?}", sp.is_ok(), t0.elapsed());
    let _ = NcElement::one();
}
