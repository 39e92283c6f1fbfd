mod common;

use leonard::realize::{realize, Basis};
use leonard::{
    beta_plus_one, check_tridiag_diag, d4_orbit, make_family, recognize_bidiagonal, solve_askey_wilson, verify_identities, Elem,
    ParameterArray, CHECK_NAMES,
};

use common::samples;

fn sample_arrays() -> Vec<ParameterArray> {
    samples().into_iter().map(|(fp, field)| make_family(&fp, field).unwrap()).collect()
}

/// Each entry of `pa` moved by one.
fn unit_mutants(pa: &ParameterArray) -> Vec<ParameterArray> {
    let one = pa.field.one();
    let mut out = Vec::new();
    for which in 0..4 {
        let len = if which < 2 { pa.d + 1 } else { pa.d };
        for idx in 0..len {
            let mut p = pa.clone();
            let seq = match which {
                0 => &mut p.theta,
                1 => &mut p.theta_star,
                2 => &mut p.varphi,
                _ => &mut p.phi,
            };
            seq[idx] = &seq[idx] + &one;
            out.push(p);
        }
    }
    out
}

#[test]
fn every_check_runs_and_passes_on_samples() {
    for pa in sample_arrays().into_iter().filter(|pa| pa.d <= 3) {
        for img in d4_orbit(&pa).unwrap() {
            let r = verify_identities(&img).unwrap();
            let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
            assert_eq!(names, CHECK_NAMES, "over {}", img.field);
            let bad: Vec<String> = r.failures().map(|c| format!("{}: {:?} {:?}", c.name, c.witness, c.error)).collect();
            assert!(bad.is_empty(), "over {}: {bad:?}", img.field);
        }
    }
}

#[test]
fn unit_mutants_fail_with_genuine_witnesses() {
    for pa in sample_arrays().into_iter().filter(|pa| pa.d == 3) {
        for m in unit_mutants(&pa) {
            let r = verify_identities(&m).unwrap();
            assert!(!r.all_passed(), "mutant over {} passes: {m:?}", m.field);
            for c in r.failures() {
                assert!(c.witness.is_some() || c.error.is_some(), "{} failed without evidence", c.name);
                if let Some(w) = &c.witness {
                    if c.name.starts_with("pa.") {
                        assert!(w.is_genuine(), "{}: {w}", c.name);
                    }
                }
            }
        }
    }
}

#[test]
fn askey_wilson_is_unique_for_d_at_least_three() {
    for pa in sample_arrays().into_iter().filter(|pa| pa.d >= 3) {
        let std = solve_askey_wilson(&realize(&pa, Basis::Standard).unwrap()).unwrap();
        assert_eq!(std.rank, 8, "over {}: {pa:?}", pa.field);
        assert!(std.unique);
        let monic = solve_askey_wilson(&realize(&pa, Basis::Monic).unwrap()).unwrap();
        assert_eq!(monic.params, std.params, "basis dependence over {}", pa.field);
        let expected: Elem = beta_plus_one(&pa).unwrap();
        assert_eq!(&std.params.beta + &pa.field.one(), expected, "over {}", pa.field);
    }
}

#[test]
fn recognition_inverts_split_realization() {
    for pa in sample_arrays() {
        for img in d4_orbit(&pa).unwrap() {
            let r = realize(&img, Basis::Split).unwrap();
            let back = recognize_bidiagonal(&r.a, &r.astar, img.field).unwrap();
            assert_eq!(back.as_ref(), Some(&img), "over {}", img.field);
        }
    }
}

#[test]
fn standard_realization_passes_tridiagonal_checks() {
    for pa in sample_arrays() {
        let r = realize(&pa, Basis::Standard).unwrap();
        let rep = check_tridiag_diag(&r.a, &r.astar, &pa).unwrap();
        assert!(rep.all_passed(), "over {}: {:?}", pa.field, rep.failures().collect::<Vec<_>>());
    }
}
