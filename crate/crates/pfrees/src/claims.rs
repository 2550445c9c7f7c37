//! Registry of executable checks, one per verified statement.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use pfrees_core::covergraph::{build_g, cover_ideal, cover_sizes, is_unmixed, minimal_vertex_covers};
use pfrees_core::diagonal::{diagonal_dimension_check, diagonal_kernel_oracle, diagonal_presentation_11, diagonal_reduce};
use pfrees_core::groebner::{ideal_equal, IdealHandle};
use pfrees_core::koszulcheck::{
    antidiagonal_order, koszul_certify, koszul_refute_via_powers, quadratic_generation_check, replay_certificate,
    KoszulStatus,
};
use pfrees_core::matalg::{
    determinant, minors, pfaffian, skew_generic, skew_sparse7, skew_tridiagonal, skew_tridiagonal_any, PolyMatrix,
    SkewMatrix,
};
use pfrees_core::pfideal::{pf_ideal_general, pf_ideal_maximal, tridiagonal_generators_closed_form, blockx4_generators};
use pfrees_core::polyring::{t_name, x_name};
use pfrees_core::rees::{
    colon_identities_check, default_order_pool, explicit_generic_relations, linear_type_verdict, rees_by_elimination,
    regular_subsequences_report, taylor_rees, LinearType, ReesPresentation,
};
use pfrees_core::resolution::{be_complex, be_conventions, be_verify, betti_table, has_linear_resolution, Verdict};
use pfrees_core::{ring_make, Budget, MonomialOrder, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::properties;

/// What a claim run produced.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub pass: bool,
    pub witness: Value,
}

type Check = fn(&dyn Budget) -> Result<Outcome, CliError>;

#[derive(Clone)]
pub struct ClaimRecord {
    pub id: &'static str,
    pub description: &'static str,
    pub modules: &'static [&'static str],
    /// Default budget in seconds.
    pub budget_s: f64,
    pub expected: &'static str,
    /// `published` when the expected value is quoted, `oracle` when it
    /// comes from an independent computation.
    pub reference: &'static str,
    pub tags: &'static [&'static str],
    pub check: Check,
}

impl ClaimRecord {
    pub fn has_tag(&self, t: &str) -> bool {
        self.tags.contains(&t)
    }
}

impl std::fmt::Debug for ClaimRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClaimRecord").field("id", &self.id).finish()
    }
}

fn outcome(pass: bool, witness: Value) -> Result<Outcome, CliError> {
    Ok(Outcome { pass, witness })
}

fn strs(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn census_json(c: &BTreeMap<(u32, u32), usize>) -> Value {
    Value::Object(c.iter().map(|(&(a, b), &k)| (format!("({a},{b})"), json!(k))).collect())
}

fn grevlex_equal(a: &IdealHandle, b: &IdealHandle, budget: &dyn Budget) -> Result<bool, CliError> {
    Ok(ideal_equal(a, b, &MonomialOrder::grevlex(a.ring().nvars()), budget)?)
}

fn pf_det_random(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let ring = ring_make(&["z"], 1, 0, 0)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5F5F);
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 0..300 {
        if budget.exhausted() {
            return Err(CliError::Budget);
        }
        let n = 2 + k % 7;
        let x = SkewMatrix::from_upper(&ring, n, |_, _| {
            Polynomial::constant(&ring, BigRational::from_integer(BigInt::from(rng.gen_range(-20i64..=20))))
        });
        let pf = pfaffian(&x);
        let det = determinant(x.as_matrix())?;
        if &pf * &pf != det {
            bad.push(k);
        }
        checked += 1;
    }
    outcome(bad.is_empty(), json!({"matrices": checked, "orders": "2..8", "seed": 0x5F5Fu64, "mismatches": bad}))
}

fn tridiagonal_det(_: &dyn Budget) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut ok = true;
    for n in (2..=10).step_by(2) {
        let x = skew_tridiagonal_any(n);
        let ring = x.ring().clone();
        let want = (1..n)
            .step_by(2)
            .map(|i| Polynomial::var_named(&ring, &x_name(i, i + 1)).unwrap().pow(2))
            .fold(Polynomial::one(&ring), |a, b| &a * &b);
        let det = determinant(x.as_matrix())?;
        ok &= det == want;
        rows.push(json!({"order": n, "det": det.to_string()}));
    }
    outcome(ok, json!({"orders": rows}))
}

fn two_row_minors(r: &ReesPresentation) -> Result<IdealHandle, CliError> {
    let s = r.ring();
    let top: Vec<Polynomial> = r.base_gens().iter().map(|g| r.lift(g)).collect::<Result<_, _>>()?;
    let bottom: Vec<Polynomial> = (0..r.base_gens().len()).map(|k| r.y(k)).collect();
    let m = PolyMatrix::from_rows(s, vec![top, bottom])?;
    Ok(IdealHandle::new(s, minors(&m, 2, None, None)?)?)
}

fn rees_n3(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let explicit = explicit_generic_relations(3)?;
    let ideal = IdealHandle::new(explicit.base_ring(), explicit.base_gens().to_vec())?;
    let elim = rees_by_elimination(&ideal, budget)?;
    let same = grevlex_equal(&elim.ideal()?, &two_row_minors(&elim)?, budget)?;
    outcome(same, json!({"relations": strs(elim.defining_gens()), "census": census_json(&elim.census())}))
}

fn rees_n5(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let explicit = explicit_generic_relations(5)?;
    let ideal = IdealHandle::new(explicit.base_ring(), explicit.base_gens().to_vec())?;
    let elim = rees_by_elimination(&ideal, budget)?;
    let same = grevlex_equal(&elim.ideal()?, &explicit.ideal()?, budget)?;
    outcome(
        same && explicit.substitution_check()?,
        json!({"census": census_json(&elim.census()), "explicit_relations": strs(explicit.defining_gens())}),
    )
}

fn betti_n5(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let pf = pf_ideal_maximal(&skew_generic(5)?)?;
    let ideal = pf.ideal()?;
    let table = betti_table(&ideal, 4, budget)?;
    let want: BTreeMap<(usize, u32), usize> = [((0, 0), 1), ((1, 2), 5), ((2, 3), 5), ((3, 5), 1)].into_iter().collect();
    let linear = has_linear_resolution(&ideal, budget)?;
    let refute = koszul_refute_via_powers(pf.gens(), 1, budget)?;
    let pass = table.entries == want && !linear && refute.status == KoszulStatus::CertifiedNotKoszul;
    outcome(
        pass,
        json!({
            "betti": table.to_string(),
            "linear_resolution": linear,
            "rees_koszul": refute.status.name(),
        }),
    )
}

fn koszul_certificates(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut pass = true;
    let mut record = |label: String, r: &ReesPresentation, pool: Vec<MonomialOrder>, want: &str| -> Result<(), CliError> {
        let v = koszul_certify(r.defining_gens(), &pool, budget)?;
        let kind = v.certificate.as_ref().map(|c| c.kind()).unwrap_or("NONE");
        let replay = match &v.certificate {
            Some(c) => replay_certificate(r.defining_gens(), c, budget)?,
            None => false,
        };
        pass &= v.status == KoszulStatus::CertifiedKoszul && kind == want && replay;
        rows.push(json!({"algebra": label, "status": v.status.name(), "certificate": kind, "replayed": replay, "log": v.log}));
        Ok(())
    };
    let generic = explicit_generic_relations(3)?;
    let o = MonomialOrder::grevlex(generic.ring().nvars());
    record(String::from("generic 3"), &generic, vec![o], "G_QUADRATIC")?;
    for r in 2..=3 {
        let t = taylor_rees(&tridiagonal_generators_closed_form(r)?, 1, budget)?;
        let o = MonomialOrder::grevlex(t.ring().nvars());
        record(format!("tridiagonal {}", 2 * r + 1), &t, vec![o], "CI_OF_QUADRICS")?;
    }
    for r in 2..=3 {
        let gens = blockx4_generators(r)?;
        let ring = gens[0].ring().clone();
        let e = rees_by_elimination(&IdealHandle::new(&ring, gens)?, budget)?;
        let o = antidiagonal_order(e.ring(), r)?;
        record(format!("blockx4 {r}"), &e, vec![o], "CI_OF_QUADRICS")?;
    }
    outcome(pass, json!({"algebras": rows}))
}

fn colon(n: usize, budget: &dyn Budget) -> Result<Outcome, CliError> {
    let checks = colon_identities_check(n, budget)?;
    let pass = checks.iter().all(|c| c.holds);
    let rows: Vec<Value> = checks.iter().map(|c| json!({"identity": c.label, "holds": c.holds})).collect();
    outcome(pass, json!({"n": n, "identities": rows}))
}

fn colon_n3(b: &dyn Budget) -> Result<Outcome, CliError> {
    colon(3, b)
}

fn colon_n5(b: &dyn Budget) -> Result<Outcome, CliError> {
    colon(5, b)
}

fn subsequences_n5(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let report = regular_subsequences_report(5, budget)?;
    let rows: Vec<Value> = report
        .iter()
        .map(|r| json!({"omitted": r.omitted, "coprime_shifts": r.coprime_shifts, "regular": r.regular}))
        .collect();
    outcome(report.iter().all(|r| r.regular), json!({"subsequences": rows}))
}

fn be(n: usize, budget: &dyn Budget) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut verifying = Vec::new();
    for conv in be_conventions() {
        let c = be_complex(n, conv)?;
        let r = be_verify(&c, budget)?;
        let ok = r.acyclic == Verdict::Pass && r.is_minimal && r.codims[2] == Some(3);
        if ok {
            verifying.push(conv.name());
        }
        rows.push(json!({
            "convention": conv.name(),
            "complex": r.is_complex,
            "minimal": r.is_minimal,
            "codims": r.codims,
            "acyclic": r.acyclic.name(),
        }));
    }
    outcome(!verifying.is_empty(), json!({"n": n, "verifying": verifying, "conventions": rows}))
}

fn be_n3(b: &dyn Budget) -> Result<Outcome, CliError> {
    be(3, b)
}

fn be_n5(b: &dyn Budget) -> Result<Outcome, CliError> {
    be(5, b)
}

fn be_n7(b: &dyn Budget) -> Result<Outcome, CliError> {
    be(7, b)
}

fn tridiagonal_family(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut pass = true;
    for n in [5usize, 7, 9, 11] {
        let r = (n - 1) / 2;
        let x = skew_tridiagonal(n)?;
        let ring = x.ring().clone();
        let pf = pf_ideal_maximal(&x)?.ideal()?;
        let closed = IdealHandle::new(&ring, tridiagonal_generators_closed_form(r)?)?;
        let closed_ok = grevlex_equal(&pf, &closed, budget)?;
        let taylor = taylor_rees(closed.gens(), 1, budget)?;
        let elim = rees_by_elimination(&closed, budget)?;
        let elim_ok = grevlex_equal(&elim.ideal()?, &taylor.ideal()?, budget)?;
        let verdict = linear_type_verdict(&taylor, &default_order_pool(taylor.ring()), budget)?;
        let cover = cover_ideal(&build_g(n)?)?;
        let cover = IdealHandle::new(&ring, cover.gens().iter().map(|g| g.map_by_name(&ring)).collect::<Result<_, _>>()?)?;
        let cover_ok = grevlex_equal(&cover, &pf, budget)?;
        let ok = closed_ok && elim_ok && verdict.verdict == LinearType::GroebnerLinearType && cover_ok;
        pass &= ok;
        rows.push(json!({
            "n": n,
            "closed_form_equals_pfaffians": closed_ok,
            "taylor_equals_elimination": elim_ok,
            "verdict": verdict.verdict.name(),
            "order": verdict.order.as_ref().map(|o| o.describe(taylor.ring())),
            "cover_ideal_equals_pfaffians": cover_ok,
        }));
    }
    outcome(pass, json!({"orders": rows}))
}

fn census_7x7(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let pf = pf_ideal_general(&skew_sparse7(), 4)?;
    let r = rees_by_elimination(&pf.ideal()?, budget)?;
    let census = r.census();
    let want: BTreeMap<(u32, u32), usize> = [((1, 1), 52), ((0, 2), 14), ((0, 3), 3)].into_iter().collect();
    let quadratic = quadratic_generation_check(&r);
    outcome(
        census == want && !quadratic,
        json!({"generators": pf.gens().len(), "census": census_json(&census), "quadratic": quadratic}),
    )
}

fn diagonal_generic3(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let pf = pf_ideal_maximal(&skew_generic(3)?)?;
    let r = rees_by_elimination(&pf.ideal()?, budget)?;
    let d = diagonal_presentation_11(&r)?;
    let t = d.t_ring();
    let want_linear: Vec<Polynomial> = ["t1_2 - t2_3", "t2_1 - t3_2", "t1_1 - t3_3"]
        .iter()
        .map(|s| Polynomial::parse(t, s))
        .collect::<Result<_, _>>()?;
    let linear_ok = d.extra_gens().len() == 3 && want_linear.iter().all(|w| d.extra_gens().iter().any(|g| g.is_associate(w)));
    let red = diagonal_reduce(&d)?;
    let s = red.ideal.ring().clone();
    let want_quadrics: Vec<Polynomial> = [
        "t1_1*t2_2 - t1_2*t2_1",
        "t1_1*t2_1 - t1_2*t3_1",
        "t2_1^2 - t2_2*t3_1",
        "t1_1*t1_2 - t1_3*t2_1",
        "t1_1^2 - t1_3*t3_1",
        "t1_2^2 - t1_3*t2_2",
    ]
    .iter()
    .map(|q| Polynomial::parse(&s, q))
    .collect::<Result<_, _>>()?;
    let gens = red.ideal.gens();
    let set_ok = gens.len() == want_quadrics.len() && want_quadrics.iter().all(|w| gens.iter().any(|g| g.is_associate(w)));
    let oracle = diagonal_kernel_oracle(&r, budget)?;
    let oracle_ok = grevlex_equal(&d.ideal()?, &oracle, budget)?;
    outcome(
        linear_ok && set_ok && oracle_ok && red.cycles.is_empty(),
        json!({
            "linear": strs(d.extra_gens()),
            "surviving": s.names(),
            "quadrics": strs(gens),
            "kernel_agrees": oracle_ok,
        }),
    )
}

fn diagonal_tridiagonal(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut pass = true;
    for r in 2..=3 {
        let n = 2 * r + 1;
        let rp = rees_by_elimination(&pf_ideal_maximal(&skew_tridiagonal(n)?)?.ideal()?, budget)?;
        let d = diagonal_presentation_11(&rp)?;
        let t = d.t_ring();
        let want: Vec<Polynomial> = (0..r)
            .map(|k| Polynomial::parse(t, &format!("{} - {}", t_name(2 * k + 1, k + 1), t_name(2 * k + 2, k + 2))))
            .collect::<Result<_, _>>()?;
        let ok = d.extra_gens().len() == r && want.iter().all(|w| d.extra_gens().iter().any(|g| g.is_associate(w)));
        let oracle_ok = grevlex_equal(&d.ideal()?, &diagonal_kernel_oracle(&rp, budget)?, budget)?;
        pass &= ok && oracle_ok;
        rows.push(json!({"n": n, "relations": strs(d.extra_gens()), "kernel_agrees": oracle_ok}));
    }
    outcome(pass, json!({"orders": rows}))
}

fn diagonal_dimension(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut pass = true;
    let cases: [(&str, SkewMatrix, usize); 3] = [
        ("generic 3", skew_generic(3)?, 3),
        ("tridiagonal 5", skew_tridiagonal(5)?, 4),
        ("tridiagonal 7", skew_tridiagonal(7)?, 6),
    ];
    for (label, x, expected) in cases {
        let r = rees_by_elimination(&pf_ideal_maximal(&x)?.ideal()?, budget)?;
        let c = diagonal_dimension_check(&r, expected, budget)?;
        pass &= c.holds();
        rows.push(json!({"matrix": label, "dimension": c.dimension, "expected": c.expected}));
    }
    outcome(pass, json!({"diagonals": rows}))
}

fn cover_census(_: &dyn Budget) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut pass = true;
    for n in (3..=11).step_by(2) {
        let g = build_g(n)?;
        let covers = minimal_vertex_covers(&g)?;
        let r = (n - 1) / 2;
        let ok = is_unmixed(&covers) && cover_sizes(&covers) == vec![r; r + 1];
        pass &= ok;
        rows.push(json!({"n": n, "covers": covers, "sizes": cover_sizes(&covers), "unmixed": is_unmixed(&covers)}));
    }
    outcome(pass, json!({"graphs": rows}))
}

fn property_suites(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let suites = properties::run_all(1, budget)?;
    let cases: usize = suites.iter().map(|s| s.cases).sum();
    let pass = suites.iter().all(|s| s.passed()) && cases >= 1000;
    outcome(pass, json!({"cases": cases, "suites": suites}))
}

fn check_generic_rees_quadratic(budget: &dyn Budget) -> Result<Outcome, CliError> {
    let r = explicit_generic_relations(5)?;
    let quadratic = quadratic_generation_check(&r);
    let v = linear_type_verdict(&explicit_generic_relations(3)?, &[], budget)?;
    outcome(quadratic && v.verdict == LinearType::LinearType, json!({"n5_quadratic": quadratic, "n3_verdict": v.verdict.name()}))
}

const LIGHT: &[&str] = &[];
const HEAVY: &[&str] = &["heavy"];

pub fn registry() -> Vec<ClaimRecord> {
    vec![
        ClaimRecord {
            id: "pf-squared-det",
            description: "Pf(M)^2 = det(M) on 300 random integer skew matrices of orders 2 to 8",
            modules: &["matalg"],
            budget_s: 30.0,
            expected: "no mismatches",
            reference: "published",
            tags: LIGHT,
            check: pf_det_random,
        },
        ClaimRecord {
            id: "tridiagonal-det",
            description: "tridiagonal even orders 2 to 10 have det = product of odd superdiagonal squares",
            modules: &["matalg"],
            budget_s: 5.0,
            expected: "exact product",
            reference: "published",
            tags: LIGHT,
            check: tridiagonal_det,
        },
        ClaimRecord {
            id: "rees-generic-3",
            description: "Rees ideal of the generic order-3 Pfaffians equals the 2-minors of [f; y]",
            modules: &["rees", "groebner"],
            budget_s: 5.0,
            expected: "ideal equality",
            reference: "published",
            tags: LIGHT,
            check: rees_n3,
        },
        ClaimRecord {
            id: "rees-generic-5",
            description: "Rees ideal of the generic order-5 Pfaffians equals the ideal of [y]*d2",
            modules: &["rees", "groebner"],
            budget_s: 600.0,
            expected: "ideal equality",
            reference: "published",
            tags: HEAVY,
            check: rees_n5,
        },
        ClaimRecord {
            id: "betti-generic-5",
            description: "Betti table of B/I for generic order 5 is 1; 5 5; 1 and not linear",
            modules: &["resolution", "koszulcheck"],
            budget_s: 300.0,
            expected: "b00=1 b12=5 b23=5 b35=1, NOT linear, CERTIFIED_NOT_KOSZUL",
            reference: "published",
            tags: HEAVY,
            check: betti_n5,
        },
        ClaimRecord {
            id: "koszul-certificates",
            description: "Koszul certificates for the generic order-3, tridiagonal and block Rees algebras",
            modules: &["koszulcheck", "rees"],
            budget_s: 60.0,
            expected: "G_QUADRATIC for generic 3, CI_OF_QUADRICS for the sparse families",
            reference: "published",
            tags: LIGHT,
            check: koszul_certificates,
        },
        ClaimRecord {
            id: "colon-generic-3",
            description: "colon identities of the generic relations, order 3",
            modules: &["rees", "groebner"],
            budget_s: 30.0,
            expected: "all five identities hold",
            reference: "published",
            tags: LIGHT,
            check: colon_n3,
        },
        ClaimRecord {
            id: "colon-generic-5",
            description: "colon identities of the generic relations, order 5",
            modules: &["rees", "groebner"],
            budget_s: 900.0,
            expected: "all five identities hold",
            reference: "published",
            tags: HEAVY,
            check: colon_n5,
        },
        ClaimRecord {
            id: "subsequences-generic-5",
            description: "every n-1 of the generic order-5 relations is regular under a cyclic relabeling",
            modules: &["rees"],
            budget_s: 60.0,
            expected: "all five subsequences regular",
            reference: "published",
            tags: LIGHT,
            check: subsequences_n5,
        },
        ClaimRecord {
            id: "complex-generic-3",
            description: "the length-three Pfaffian complex is a minimal acyclic complex, order 3",
            modules: &["resolution"],
            budget_s: 30.0,
            expected: "some sign convention passes",
            reference: "oracle",
            tags: LIGHT,
            check: be_n3,
        },
        ClaimRecord {
            id: "complex-generic-5",
            description: "the length-three Pfaffian complex is a minimal acyclic complex, order 5",
            modules: &["resolution"],
            budget_s: 60.0,
            expected: "some sign convention passes",
            reference: "oracle",
            tags: LIGHT,
            check: be_n5,
        },
        ClaimRecord {
            id: "complex-generic-7",
            description: "the length-three Pfaffian complex is a minimal acyclic complex, order 7",
            modules: &["resolution"],
            budget_s: 120.0,
            expected: "some sign convention passes",
            reference: "oracle",
            tags: LIGHT,
            check: be_n7,
        },
        ClaimRecord {
            id: "tridiagonal-family",
            description: "tridiagonal orders 5 to 11: closed form, Taylor relations, Groebner linear type, cover ideal",
            modules: &["pfideal", "rees", "covergraph"],
            budget_s: 120.0,
            expected: "all equalities and GROEBNER_LINEAR_TYPE",
            reference: "published",
            tags: LIGHT,
            check: tridiagonal_family,
        },
        ClaimRecord {
            id: "cover-census",
            description: "minimal vertex covers of the tridiagonal graph, orders 3 to 11",
            modules: &["covergraph"],
            budget_s: 10.0,
            expected: "r+1 covers of size r, unmixed",
            reference: "oracle",
            tags: LIGHT,
            check: cover_census,
        },
        ClaimRecord {
            id: "census-sparse7",
            description: "minimal bigraded generators of the Rees ideal of Pf4 of the sparse order-7 matrix",
            modules: &["pfideal", "rees"],
            budget_s: 1800.0,
            expected: "{(1,1):52, (0,2):14, (0,3):3}, not quadratic",
            reference: "published",
            tags: HEAVY,
            check: census_7x7,
        },
        ClaimRecord {
            id: "generic-quadratic",
            description: "generic order-5 relations are quadrics; generic order 3 is of linear type",
            modules: &["rees", "koszulcheck"],
            budget_s: 10.0,
            expected: "true, LINEAR_TYPE",
            reference: "published",
            tags: LIGHT,
            check: check_generic_rees_quadratic,
        },
        ClaimRecord {
            id: "diagonal-generic-3",
            description: "(1,1)-diagonal of the generic order-3 Rees algebra: relations and identified quadrics",
            modules: &["diagonal"],
            budget_s: 30.0,
            expected: "three linear relations, six quadrics",
            reference: "published",
            tags: LIGHT,
            check: diagonal_generic3,
        },
        ClaimRecord {
            id: "diagonal-tridiagonal",
            description: "(1,1)-diagonal of the tridiagonal Rees algebras: t_ij - t_i+1,j+1 relations",
            modules: &["diagonal"],
            budget_s: 30.0,
            expected: "r relations of the stated form",
            reference: "published",
            tags: LIGHT,
            check: diagonal_tridiagonal,
        },
        ClaimRecord {
            id: "diagonal-dimension",
            description: "the (d+1,1) diagonal has dimension equal to the number of base variables",
            modules: &["diagonal"],
            budget_s: 60.0,
            expected: "dimensions 3, 4, 6",
            reference: "published",
            tags: LIGHT,
            check: diagonal_dimension,
        },
        ClaimRecord {
            id: "property-suites",
            description: "randomized property suites for bases, normal forms, resolutions and dimension",
            modules: &["groebner", "resolution"],
            budget_s: 120.0,
            expected: "1000+ cases, no failures",
            reference: "oracle",
            tags: LIGHT,
            check: property_suites,
        },
    ]
}

pub fn find(id: &str) -> Option<ClaimRecord> {
    registry().into_iter().find(|c| c.id == id)
}
