use qdual::*;

fn names() -> Vec<String> {
    let mut v: Vec<String> = vec![
        "Uq_sl2_hat", "Uq_sl2_hat_sc", "Fq_SL2_hat", "Fq_SL3_hat",
        "Uq_e2_s_hat", "Uq_e2_a_hat", "Fq_E2_hat", "Fq_aE2_hat",
    ].into_iter().map(String::from).collect();
    for n in 1..=2 {
        v.push(format!("Uq_hn_s_hat({})", n));
        v.push(format!("Uq_hn_a_hat({})", n));
        v.push(format!("Fq_Hn_hat({})", n));
    }
    v
}

fn main() {
    for name in names() {
        let t0 = std::time::Instant::now();
        let e = match std::panic::catch_unwind(|| catalog::get(&name)) {
            Ok(Ok(e)) => e,
            Ok(Err(err)) => { eprintln!("{}: catalog error {}", name, err); continue }
            Err(_) => { eprintln!("{}: PANIC during build", name); continue }
        };
        let p = &e.presentation;
        eprintln!("  [{}] built", name);
        let rep = hopf::check_hopf(p, 100_000);
        eprintln!("  [{}] hopf done", name);
        let hopf_ok = rep.all_pass();
        if !hopf_ok {
            for i in rep.items.iter().filter(|i| !i.pass).take(3) {
                eprintln!("  {} HOPF-FAIL {} [{}]", name, i.name, &i.detail.chars().take(160).collect::<String>());
            }
        }
        let orep = ncalg::overlap_check(p, 100_000);
        eprintln!("  [{}] ovl done", name);
        if !orep.all_resolve() {
            for f in orep.failures.iter().take(2) { eprintln!("  {} OVL-FAIL {}", name, &f.chars().take(200).collect::<String>()); }
        }
        let mut tilde_ok = true;
        let mut trep_hopf = true;
        let mut t_ovl = true;
        if let Some(t) = &e.tilde {
            if let Err(err) = drinfeld::verify_tilde(p, t) {
                tilde_ok = false;
                eprintln!("  {} TILDE-FAIL {}", name, &err.to_string().chars().take(250).collect::<String>());
            }
            let tr = hopf::check_hopf(&t.presentation, 100_000);
            trep_hopf = tr.all_pass();
            if !trep_hopf {
                for i in tr.items.iter().filter(|i| !i.pass).take(3) {
                    eprintln!("  {} TILDE-HOPF-FAIL {} [{}]", name, i.name, &i.detail.chars().take(160).collect::<String>());
                }
            }
            let to = ncalg::overlap_check(&t.presentation, 100_000);
            t_ovl = to.all_resolve();
            if !t_ovl {
                for f in to.failures.iter().take(2) { eprintln!("  {} TILDE-OVL-FAIL {}", name, &f.chars().take(200).collect::<String>()); }
            }
        }
        eprintln!("  [{}] tilde checks done", name);
        let dt = match drinfeld::double_tilde_check(&e, 3) {
            Ok(r) => {
                for i in r.items.iter().filter(|i| !i.pass).take(3) {
                    eprintln!("  {} DT-FAIL {} [{}]", name, i.name, &i.detail.chars().take(160).collect::<String>());
                }
                r.all_pass()
            }
            Err(err) => { eprintln!("  {} DT-ERR {}", name, err); false }
        };
        eprintln!("  [{}] dt done", name);
        let map_ok = match catalog::generator_map(&e) {
            Ok(Some(m)) => match classical::check_generator_map(&m) {
                Ok(r) => {
                    for i in r.items.iter().filter(|i| !i.pass).take(3) {
                        eprintln!("  {} MAP-FAIL {} [{}]", name, i.name, &i.detail.chars().take(160).collect::<String>());
                    }
                    r.all_pass()
                }
                Err(err) => { eprintln!("  {} MAP-ERR {}", name, err); false }
            },
            Ok(None) => true,
            Err(err) => { eprintln!("  {} MAP-RESOLVE-ERR {}", name, err); false }
        };
        eprintln!("  [{}] map done", name);
        let spec_ok = classical::specialize(p).is_ok();
        eprintln!("  [{}] spec done", name);
        let tspec_ok = e.tilde.as_ref().map(|t| classical::specialize(&t.presentation).is_ok()).unwrap_or(true);
        eprintln!(
            "{:18} hopf={} ovl={} tilde={} t-hopf={} t-ovl={} dt={} map={} spec={}/{}  ({:?})",
            name, hopf_ok, orep.all_resolve(), tilde_ok, trep_hopf, t_ovl, dt, map_ok, spec_ok, tspec_ok, t0.elapsed()
        );
    }
}
