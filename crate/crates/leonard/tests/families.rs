mod common;

use std::collections::{BTreeMap, BTreeSet};

use leonard::{
    classify, d4_orbit, family_conditions, make_family, make_family_unchecked, u_hypergeometric, u_table, validate, Elem, Error,
    FamilyParams, FamilyTag, FieldSpec,
};

use common::{params, samples};

#[test]
fn every_family_round_trips_through_classify() {
    let mut per_family: BTreeMap<FamilyTag, usize> = BTreeMap::new();
    for (fp, field) in samples() {
        let pa = make_family(&fp, field).unwrap();
        let c = classify(&pa).unwrap();
        assert!(c.matches.iter().any(|m| m.family == fp.family), "{} d={} over {field}: {:?}", fp.family, fp.d, c.matches);
        for m in &c.matches {
            assert_eq!(make_family(m, field).unwrap(), pa);
        }
        assert_eq!(c.case, Some(fp.family.case()));
        *per_family.entry(fp.family).or_default() += 1;
    }
    assert_eq!(per_family.len(), 13);
    assert!(per_family.values().all(|&n| n >= 3));
}

#[test]
fn d4_images_classify() {
    for (fp, field) in samples() {
        let pa = make_family(&fp, field).unwrap();
        for img in d4_orbit(&pa).unwrap() {
            let c = classify(&img).unwrap();
            assert!(!c.matches.is_empty(), "image of {} d={} over {field} unclassified", fp.family, fp.d);
        }
    }
}

#[test]
fn u_table_matches_hypergeometric_series() {
    for (fp, field) in samples() {
        let pa = make_family(&fp, field).unwrap();
        let u = u_table(&pa).unwrap();
        for i in 0..=fp.d {
            for j in 0..=fp.d {
                match u_hypergeometric(&fp, field, i, j).unwrap() {
                    Some(h) => assert_eq!(u[(i, j)], h, "{} d={} over {field} at ({i},{j})", fp.family, fp.d),
                    None => assert!(matches!(fp.family, FamilyTag::BannaiIto | FamilyTag::Orphan)),
                }
            }
        }
    }
}

#[test]
fn ordinary_families_refuse_small_characteristic() {
    let f3 = FieldSpec::prime(3).unwrap();
    let cases = [
        params(FamilyTag::Racah, 3, f3, &[("theta0", "0"), ("thetastar0", "0"), ("h", "1"), ("hstar", "1"), ("s", "0"), ("sstar", "0"), ("r1", "0"), ("r2", "1")]),
        params(FamilyTag::Hahn, 3, f3, &[("theta0", "0"), ("thetastar0", "0"), ("hstar", "1"), ("s", "1"), ("sstar", "0"), ("r", "0")]),
        params(FamilyTag::DualHahn, 3, f3, &[("theta0", "0"), ("thetastar0", "0"), ("h", "1"), ("s", "0"), ("sstar", "1"), ("r", "0")]),
        params(FamilyTag::Krawtchouk, 3, f3, &[("theta0", "0"), ("thetastar0", "0"), ("s", "1"), ("sstar", "1"), ("r", "2")]),
        params(FamilyTag::BannaiIto, 6, f3, &[("theta0", "0"), ("thetastar0", "0"), ("h", "1"), ("hstar", "1"), ("s", "0"), ("sstar", "0"), ("r1", "0"), ("r2", "1")]),
    ];
    for fp in cases {
        let err = make_family(&fp, f3).unwrap_err();
        assert!(matches!(&err, Error::Precondition(m) if m.contains("characteristic 3")), "{}: {err}", fp.family);
        let raw = make_family_unchecked(&fp, f3).unwrap();
        assert!(!validate(&raw).unwrap().is_empty(), "{} over GF(3) should degenerate", fp.family);
    }
    let orphan_q = params(FamilyTag::Orphan, 3, FieldSpec::Rationals, &[("theta0", "0"), ("thetastar0", "0"), ("h", "1"), ("hstar", "1"), ("s", "2"), ("sstar", "2"), ("r", "2")]);
    assert!(matches!(make_family(&orphan_q, FieldSpec::Rationals), Err(Error::Precondition(m)) if m.contains("characteristic 0")));
}

/// Candidate replacement values for one parameter of `fp`.
fn pool(fp: &FamilyParams, field: FieldSpec) -> Vec<Elem> {
    let d = fp.d as i64;
    let span = 2 * d + 2;
    let mut out = vec![field.zero()];
    for k in -span..=span {
        out.push(field.from_i64(k));
        if let Ok(h) = field.ratio(k, 2) {
            out.push(h);
        }
    }
    let base: Vec<Elem> = ["s", "sstar", "r", "r1", "r2"].iter().filter_map(|n| fp.params.get(*n).cloned()).collect();
    match fp.params.get("q") {
        Some(q) => {
            for k in -span..=span {
                let qk = q.pow(k).unwrap();
                out.push(qk.clone());
                for x in &base {
                    out.push(x * &qk);
                }
            }
        }
        None => {
            for k in -span..=span {
                let kk = field.from_i64(k);
                for x in &base {
                    out.push(x + &kk);
                    out.push(&kk - x);
                }
            }
        }
    }
    if let Some(all) = field.elements().filter(|_| field.order().is_some_and(|n| n <= 16)) {
        out.extend(all);
    }
    let mut dedup: Vec<Elem> = Vec::new();
    for x in out {
        if !dedup.contains(&x) {
            dedup.push(x);
        }
    }
    dedup
}

/// Restores the linking equation between r1 and r2 after a change.
fn relink(fp: &FamilyParams) -> Option<FamilyParams> {
    let g = |n: &str| fp.params.get(n).cloned();
    let f = g("theta0")?.field();
    let d = fp.d as i64;
    let r2 = match fp.family {
        FamilyTag::QRacah => (&(&g("s")? * &g("sstar")?) * &g("q")?.pow(d + 1).ok()?).try_div(&g("r1")?).ok()?,
        FamilyTag::Racah => &(&(&g("s")? + &g("sstar")?) + &f.from_i64(d + 1)) - &g("r1")?,
        FamilyTag::BannaiIto => &(&(&f.from_i64(d + 1) - &g("s")?) - &g("sstar")?) - &g("r1")?,
        _ => return None,
    };
    Some(fp.clone().with("r2", r2))
}

#[derive(Default)]
struct Sweep {
    /// rule → some isolated violation produced an invalid array (or no array)
    degenerate: BTreeSet<String>,
    /// rule → an isolated violation that still gives a valid array
    valid: BTreeMap<String, FamilyParams>,
}

fn sweep(fp: &FamilyParams, field: FieldSpec, out: &mut Sweep) {
    for name in fp.family.param_names() {
        if matches!(*name, "theta0" | "thetastar0") {
            continue;
        }
        for v in pool(fp, field) {
            let changed = fp.clone().with(name, v);
            let mut variants = vec![changed.clone()];
            if *name != "r2" {
                variants.extend(relink(&changed));
            }
            for cand in variants {
                let Ok(conds) = family_conditions(&cand, field) else { continue };
                let failing: BTreeSet<&String> = conds.iter().filter(|c| !c.holds).map(|c| &c.rule).collect();
                if failing.len() != 1 {
                    continue;
                }
                let rule = failing.into_iter().next().cloned().unwrap_or_default();
                let still_valid = match make_family_unchecked(&cand, field) {
                    Ok(arr) => validate(&arr).map(|v| v.is_empty()).unwrap_or(false),
                    Err(_) => false,
                };
                if still_valid {
                    out.valid.entry(rule).or_insert(cand);
                } else {
                    out.degenerate.insert(rule);
                }
            }
        }
    }
}

/// Rules that cannot be broken on their own: changing any single parameter
/// to break them also breaks a second listed condition.
fn not_isolatable(fam: FamilyTag) -> &'static [&'static str] {
    match fam {
        FamilyTag::QRacah => &["q != 0", "s != 0", "sstar != 0", "r1 != 0", "r2 != 0"],
        _ => &[],
    }
}

/// Rules whose isolated violation still yields a valid array, namely one
/// belonging to a neighbouring family.
fn family_boundaries(fam: FamilyTag) -> &'static [&'static str] {
    match fam {
        FamilyTag::QHahn => &["sstar != 0", "r != 0"],
        FamilyTag::DualQHahn => &["s != 0", "r != 0"],
        _ => &[],
    }
}

#[test]
fn each_listed_condition_is_needed() {
    let mut sweeps: BTreeMap<FamilyTag, Sweep> = BTreeMap::new();
    let mut rules: BTreeMap<FamilyTag, BTreeSet<String>> = BTreeMap::new();
    for (fp, field) in samples().into_iter().filter(|(fp, _)| fp.d <= 4) {
        let sw = sweeps.entry(fp.family).or_default();
        sweep(&fp, field, sw);
        let listed = family_conditions(&fp, field).unwrap().into_iter().map(|c| c.rule);
        rules.entry(fp.family).or_default().extend(listed.filter(|r| !r.starts_with("char") && r != "d = 3"));
    }
    let mut report = Vec::new();
    for (fam, sw) in &sweeps {
        for rule in &rules[fam] {
            let isolated = sw.degenerate.contains(rule) || sw.valid.contains_key(rule);
            if !isolated && !not_isolatable(*fam).contains(&rule.as_str()) {
                report.push(format!("{fam}: no isolated violation of {rule}"));
            }
        }
        for (rule, cand) in &sw.valid {
            if sw.degenerate.contains(rule) {
                report.push(format!("{fam}: violating {rule} alone is sometimes valid and sometimes not"));
                continue;
            }
            if !family_boundaries(*fam).contains(&rule.as_str()) {
                report.push(format!("{fam}: violating {rule} alone still gives a valid array"));
                continue;
            }
            let field = cand.params["theta0"].field();
            let arr = make_family_unchecked(cand, field).unwrap();
            let c = classify(&arr).unwrap();
            assert!(c.matches.iter().all(|m| m.family != *fam), "{rule} boundary of {fam} stays in the family");
            assert!(!c.matches.is_empty());
        }
        for rule in not_isolatable(*fam) {
            assert!(rules[fam].contains(*rule), "{fam} lists no rule {rule}");
            let seen = sw.degenerate.contains(*rule) || sw.valid.contains_key(*rule);
            assert!(!seen, "{fam}: {rule} was isolated after all");
        }
        for rule in family_boundaries(*fam) {
            assert!(sw.valid.contains_key(*rule), "{fam}: boundary {rule} not observed");
        }
    }
    assert_eq!(sweeps.len(), 13);
    assert!(report.is_empty(), "{}", report.join("\n"));
}

#[test]
fn dual_q_hahn_at_s_zero_is_affine_q_krawtchouk() {
    let f = FieldSpec::Rationals;
    let th = [("theta0", "0"), ("thetastar0", "0"), ("q", "2"), ("h", "1"), ("hstar", "1"), ("r", "5")];
    let mut dual: Vec<(&str, &str)> = th.to_vec();
    dual.push(("s", "0"));
    let dual = params(FamilyTag::DualQHahn, 3, f, &dual);
    let affine = params(FamilyTag::AffineQKrawtchouk, 3, f, &th);
    assert!(make_family(&dual, f).is_err());
    assert_eq!(make_family_unchecked(&dual, f).unwrap(), make_family(&affine, f).unwrap());
}
