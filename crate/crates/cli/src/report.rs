//! The reproduction report: recomputes every tabled value and construction
//! claim and prints one row per check. Output is deterministic and
//! byte-identical across runs and worker counts.

use zforce::construct::{
    grid_construction, prism_construction, strong_grid_construction, strong_torus_construction,
    torus_construction,
};
use zforce::{
    build_family, cartesian_product, corona, corona_construction, failed_zero_forcing_number,
    known_failed_forcing_number, lexicographic_construction, lexicographic_product, strong_product,
    structural_upper_bound, verify_sharpness, BoundBasis, ExactOptions, FamilySpec, Graph,
    SharpnessVerdict,
};

pub struct Row {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub route: &'static str,
    pub pass: bool,
}

fn fam(spec: FamilySpec) -> Graph {
    build_family(&spec).unwrap()
}

fn exact_f(g: &Graph, opts: &ExactOptions) -> usize {
    failed_zero_forcing_number(g, opts).unwrap().value
}

fn family_rows(rows: &mut Vec<Row>, opts: &ExactOptions) {
    let mut specs = Vec::new();
    for n in 2..=12 {
        specs.push(FamilySpec::Path { n });
    }
    for n in 3..=12 {
        specs.push(FamilySpec::Cycle { n });
    }
    for n in 2..=12 {
        specs.push(FamilySpec::Complete { n });
    }
    for m in 1..=11usize {
        for n in 1..=m {
            if (3..=12).contains(&(m + n)) {
                specs.push(FamilySpec::CompleteBipartite { m, n });
            }
        }
    }
    specs.push(FamilySpec::MaryTree { arity: 2, depth: 1 });
    specs.push(FamilySpec::MaryTree { arity: 2, depth: 2 });
    specs.push(FamilySpec::MaryTree { arity: 3, depth: 1 });
    specs.push(FamilySpec::MaryTree { arity: 3, depth: 2 });
    for n in 4..=10 {
        specs.push(FamilySpec::Wheel { n });
    }
    specs.push(FamilySpec::Petersen);

    for spec in specs {
        let table = known_failed_forcing_number(&spec).unwrap();
        let computed = exact_f(&fam(spec), opts);
        rows.push(Row {
            claim: format!("F({spec})"),
            expected: table.to_string(),
            computed: computed.to_string(),
            route: "exhaustive",
            pass: computed == table,
        });
    }
}

fn product_value_rows(rows: &mut Vec<Row>, opts: &ExactOptions) {
    use zforce::{product_closed_form, ProductOp};

    for n in 2..=4usize {
        let spec = FamilySpec::Path { n };
        let want = product_closed_form(ProductOp::Cartesian, &spec, &spec).unwrap();
        let p = fam(spec);
        let g = cartesian_product(&p, &p).unwrap();
        let computed = exact_f(&g, opts);
        rows.push(Row {
            claim: format!("F(path:{n} box path:{n})"),
            expected: want.to_string(),
            computed: computed.to_string(),
            route: "exhaustive",
            pass: computed == want,
        });
    }

    let k4 = fam(FamilySpec::Complete { n: 4 });
    for m in [2usize, 3] {
        let want = product_closed_form(
            ProductOp::Cartesian,
            &FamilySpec::Complete { n: 4 },
            &FamilySpec::Complete { n: m },
        )
        .unwrap();
        let km = fam(FamilySpec::Complete { n: m });
        let computed = exact_f(&cartesian_product(&k4, &km).unwrap(), opts);
        rows.push(Row {
            claim: format!("F(complete:4 box complete:{m})"),
            expected: want.to_string(),
            computed: computed.to_string(),
            route: "exhaustive",
            pass: computed == want,
        });
    }

    let p2 = fam(FamilySpec::Path { n: 2 });
    for (n, want) in [(4usize, 5usize), (5, 6)] {
        let cn = fam(FamilySpec::Cycle { n });
        let computed = exact_f(&cartesian_product(&p2, &cn).unwrap(), opts);
        rows.push(Row {
            claim: format!("F(path:2 box cycle:{n})"),
            expected: want.to_string(),
            computed: computed.to_string(),
            route: "exhaustive",
            pass: computed == want,
        });
    }
    let prism4 = cartesian_product(&p2, &fam(FamilySpec::Cycle { n: 4 })).unwrap();
    let (bound, basis) = structural_upper_bound(&prism4);
    rows.push(Row {
        claim: "bound(path:2 box cycle:4)".to_string(),
        expected: "5 connected-no-module-of-order-2".to_string(),
        computed: format!("{bound} {basis}"),
        route: "structural",
        pass: bound == 5 && basis == BoundBasis::ConnectedNoModule,
    });

    let mut all_complete = true;
    for n in 2..=6usize {
        for m in 2..=6usize {
            let kn = fam(FamilySpec::Complete { n });
            let km = fam(FamilySpec::Complete { n: m });
            all_complete &= strong_product(&kn, &km).unwrap().is_complete();
        }
    }
    rows.push(Row {
        claim: "complete(complete:n strong complete:m) for 2<=n,m<=6".to_string(),
        expected: "true".to_string(),
        computed: all_complete.to_string(),
        route: "structural",
        pass: all_complete,
    });

    let k2 = fam(FamilySpec::Complete { n: 2 });
    let k3 = fam(FamilySpec::Complete { n: 3 });
    let spec2 = FamilySpec::Complete { n: 2 };
    let spec3 = FamilySpec::Complete { n: 3 };
    for (claim, graph, op, right) in [
        (
            "F(complete:2 strong complete:3)",
            strong_product(&k2, &k3).unwrap(),
            ProductOp::Strong,
            &spec3,
        ),
        (
            "F(complete:2 lex complete:3)",
            lexicographic_product(&k2, &k3).unwrap(),
            ProductOp::Lexicographic,
            &spec3,
        ),
        (
            "F(complete:2 corona complete:2)",
            corona(&k2, &k2).unwrap(),
            ProductOp::Corona,
            &spec2,
        ),
    ] {
        let want = product_closed_form(op, &spec2, right).unwrap();
        let computed = exact_f(&graph, opts);
        rows.push(Row {
            claim: claim.to_string(),
            expected: want.to_string(),
            computed: computed.to_string(),
            route: "exhaustive",
            pass: computed == want,
        });
    }
}

fn construction_row(
    rows: &mut Vec<Row>,
    claim: String,
    graph: &Graph,
    result: &zforce::ConstructionResult,
) {
    let verdicts = result.verify(graph);
    let mut computed = format!("size {}", result.set.len());
    let mut pass = result.set.len() == result.predicted_size;
    for (claim_kind, ok) in &verdicts {
        computed.push_str(&format!(
            " {claim_kind}={}",
            if *ok { "PASS" } else { "FAIL" }
        ));
        pass &= ok;
    }
    rows.push(Row {
        claim,
        expected: format!("size {}", result.predicted_size),
        computed,
        route: "construction",
        pass,
    });
}

fn construction_rows(rows: &mut Vec<Row>) {
    for m in 2..=8usize {
        for n in m..=8usize {
            let (graph, result) = grid_construction(n, m).unwrap();
            construction_row(rows, format!("grid {n} {m}"), &graph, &result);
        }
    }
    for m in 3..=7usize {
        for n in 3..=7usize {
            let (graph, result) = torus_construction(m, n).unwrap();
            construction_row(rows, format!("torus {m} {n}"), &graph, &result);
        }
    }
    for n in 3..=12usize {
        let (graph, result) = prism_construction(n).unwrap();
        construction_row(rows, format!("prism {n}"), &graph, &result);
    }
    for m in 2..=7usize {
        for n in m..=7usize {
            let (graph, result) = strong_grid_construction(n, m).unwrap();
            construction_row(rows, format!("strong-grid {n} {m}"), &graph, &result);
        }
    }
    for m in 3..=7usize {
        for n in 3..=7usize {
            let (graph, result) = strong_torus_construction(m, n).unwrap();
            construction_row(rows, format!("strong-torus {m} {n}"), &graph, &result);
        }
    }
}

fn sharpness_rows(rows: &mut Vec<Row>, opts: &ExactOptions) {
    let mut push = |claim: &str, graph: Graph, set, want: usize| {
        let (computed, pass) = match verify_sharpness(&graph, &set) {
            SharpnessVerdict::Exact(cert) => (
                format!(
                    "F = {} ({})",
                    cert.value,
                    cert.basis.as_deref().unwrap_or("-")
                ),
                cert.value == want,
            ),
            SharpnessVerdict::LowerBoundOnly { size, bound, .. } => {
                (format!("lower bound {size} < {bound}"), false)
            }
            SharpnessVerdict::NotFailed => ("not failed".to_string(), false),
        };
        rows.push(Row {
            claim: claim.to_string(),
            expected: format!("F = {want}"),
            computed,
            route: "structural",
            pass,
        });
    };

    let p10 = fam(FamilySpec::Path { n: 10 });
    let p4 = fam(FamilySpec::Path { n: 4 });
    let inner = failed_zero_forcing_number(&p4, opts).unwrap();
    let (graph, result) = lexicographic_construction(&p10, &p4, &inner).unwrap();
    push("F(path:10 lex path:4)", graph, result.set, 37);

    let c3 = fam(FamilySpec::Cycle { n: 3 });
    let c4 = fam(FamilySpec::Cycle { n: 4 });
    let inner = failed_zero_forcing_number(&c4, opts).unwrap();
    let (graph, result) = lexicographic_construction(&c3, &c4, &inner).unwrap();
    push("F(cycle:3 lex cycle:4)", graph, result.set, 10);

    let p3 = fam(FamilySpec::Path { n: 3 });
    let inner = failed_zero_forcing_number(&p4, opts).unwrap();
    let (graph, result) = corona_construction(&p3, &p4, Some(&inner)).unwrap();
    push("F(path:3 corona path:4)", graph, result.set, 12);

    let inner = failed_zero_forcing_number(&c3, opts).unwrap();
    let (graph, result) = corona_construction(&c4, &c3, Some(&inner)).unwrap();
    push("F(cycle:4 corona cycle:3)", graph, result.set, 14);
}

/// Builds every report row, in fixed order.
pub fn build_rows(workers: usize) -> Vec<Row> {
    let opts = ExactOptions {
        workers,
        ..ExactOptions::default()
    };
    let mut rows = Vec::new();
    family_rows(&mut rows, &opts);
    product_value_rows(&mut rows, &opts);
    construction_rows(&mut rows);
    sharpness_rows(&mut rows, &opts);
    rows
}
