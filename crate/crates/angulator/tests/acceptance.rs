//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use angulator::oracle::{crossing_oracle, default_window, face_count_oracle};
use angulator::{
    all_diagonals, bound_quiver, chained_type1_triples, check_component_shift, coloured_quiver,
    crosses, delta_p, endpoints, is_gentle, iso_check, realize, realize_with, recognize,
    recognize_with, Angulation, AnnulusConfig, BoundQuiver, MDiagonal, RealizeOptions,
    RecognizeOptions,
};
use common::{all_angulations, config, counting_example, eight_vertex_quiver, SWEEP};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

struct Sweep {
    config: AnnulusConfig,
    angulations: Vec<Angulation>,
    elapsed: Duration,
}

fn sweeps() -> Vec<Sweep> {
    SWEEP
        .iter()
        .map(|&(p, q, m)| {
            let c = config(p, q, m);
            let started = Instant::now();
            let angulations = all_angulations(&c);
            Sweep {
                config: c,
                angulations,
                elapsed: started.elapsed(),
            }
        })
        .collect()
}

fn all<'a>(sweeps: &'a [Sweep]) -> impl Iterator<Item = &'a Angulation> + 'a {
    sweeps.iter().flat_map(|s| s.angulations.iter())
}

fn diagonal_count(sweeps: &[Sweep]) -> Outcome {
    let mut details = Vec::new();
    for s in sweeps {
        let c = &s.config;
        let wrong = s
            .angulations
            .iter()
            .filter(|a| a.diagonals().len() != c.p() + c.q())
            .count();
        if s.angulations.is_empty() || wrong > 0 || s.elapsed > Duration::from_secs(60) {
            return fail(format!(
                "{c}: {} angulations, {wrong} with the wrong count, {:?}",
                s.angulations.len(),
                s.elapsed
            ));
        }
        details.push(format!("{c}: {} in {:.2?}", s.angulations.len(), s.elapsed));
    }
    pass(details.join(", "))
}

fn face_shape(sweeps: &[Sweep]) -> Outcome {
    let mut faces = 0;
    for a in all(sweeps) {
        let m = a.config().m();
        if let Some(f) = a.faces().iter().find(|f| f.sides.len() != m + 2) {
            return fail(format!("{a}: face with {} sides", f.sides.len()));
        }
        if face_count_oracle(a) != a.faces().len() {
            return fail(format!(
                "{a}: {} traced faces, oracle {}",
                a.faces().len(),
                face_count_oracle(a)
            ));
        }
        faces += a.faces().len();
    }
    pass(format!(
        "{faces} faces, all (m+2)-gons, counts match the Euler oracle"
    ))
}

fn gentleness(sweeps: &[Sweep]) -> Outcome {
    let mut count = 0;
    for a in all(sweeps) {
        let report = is_gentle(&bound_quiver(a));
        if !report.gentle {
            return fail(format!("{a}: {:?}", report.violations));
        }
        count += 1;
    }
    pass(format!("{count} bound quivers gentle"))
}

fn forward_theorem(sweeps: &[Sweep]) -> Outcome {
    let mut components = 0;
    for a in all(sweeps) {
        let m = a.config().m();
        for part in bound_quiver(a).components() {
            match recognize(&part, m) {
                Ok(r) if r.verdict.is_accepted() => components += 1,
                Ok(r) => return fail(format!("{a}: {:?}", r.verdict)),
                Err(e) => return fail(format!("{a}: {e}")),
            }
        }
    }
    pass(format!("{components} connected components accepted"))
}

fn congruence(sweeps: &[Sweep]) -> Outcome {
    let mut checked = 0;
    for a in all(sweeps) {
        let m = a.config().m();
        for part in bound_quiver(a).components() {
            let Ok(r) = recognize(&part, m) else {
                return fail(format!("{a}: recognition failed"));
            };
            if r.root_cycle.is_some() && r.internal_relations > 0 {
                if r.r_h % m != r.r_a % m {
                    return fail(format!("{a}: r_h = {}, r_a = {}", r.r_h, r.r_a));
                }
                checked += 1;
            }
        }
    }
    pass(format!(
        "r_h ≡ r_a (mod m) on {checked} roots with internal relations"
    ))
}

fn counting_numbers() -> Outcome {
    let options = RecognizeOptions {
        clockwise_arrow: Some("a2".into()),
    };
    let r = match recognize_with(&counting_example(), 3, &options) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let beta = r
        .saturated_cycles
        .iter()
        .find_map(|c| c.beta_h.zip(c.beta_a))
        .unwrap_or((usize::MAX, usize::MAX));
    let got = (r.alpha_h, r.alpha_a, beta.0, beta.1, r.r_h, r.r_a);
    let detail = format!(
        "α_h={} α_a={} β_h={} β_a={} r_h={} r_a={}",
        got.0, got.1, got.2, got.3, got.4, got.5
    );
    if got == (3, 1, 1, 2, 3, 3) {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn type_ambiguity(sweeps: &[Sweep]) -> Outcome {
    let Some(s) = sweeps.iter().find(|s| s.config == config(2, 2, 2)) else {
        return fail("P(2,2,2) not swept");
    };
    // A connected quiver on p + q vertices whose underlying graph is a tree
    // (type A) and which recognition accepts without a root.
    let rootless = s.angulations.iter().find(|a| {
        let q = bound_quiver(a);
        q.components().len() == 1
            && q.arrows.len() + 1 == q.vertices.len()
            && recognize(&q, 2).is_ok_and(|r| r.verdict.is_accepted() && r.root_cycle.is_none())
    });
    match rootless {
        Some(a) => pass(format!("{a} has a connected tree quiver of type A_4")),
        None => fail("every P(2,2,2) quiver has a root"),
    }
}

/// `x → u_1 → … → u_{p-1} → y` and `x → v_1 → … → v_{q-1} → y`.
fn hereditary(p: usize, q: usize) -> BoundQuiver {
    let mut out = BoundQuiver::new();
    for (name, len) in [("u", p), ("v", q)] {
        let stop = |k: usize| match k {
            0 => "x".to_string(),
            k if k == len => "y".to_string(),
            k => format!("{name}{k}"),
        };
        for k in 0..len {
            out.add_arrow(&format!("{name}a{k}"), &stop(k), &stop(k + 1))
                .unwrap();
        }
    }
    out
}

fn delta_contract() -> Outcome {
    for &(p, q, m) in &SWEEP {
        let bq = bound_quiver(&delta_p(&config(p, q, m)));
        if !iso_check(&bq, &hereditary(p, q)) {
            return fail(format!(
                "P({p},{q},{m}): bound quiver of Δ_P is not Ã_{{{p},{q}}}"
            ));
        }
    }
    pass("Δ_P gives the hereditary Ã_{p,q} on all four configs")
}

fn colour_complement(sweeps: &[Sweep]) -> Outcome {
    let mut pairs = 0;
    for a in all(sweeps) {
        let m = a.config().m();
        let cq = coloured_quiver(a);
        for x in &cq.arrows {
            let paired = cq.arrows.iter().any(|y| {
                y.face == x.face && y.src == x.dst && y.dst == x.src && x.colour + y.colour == m
            });
            if !paired {
                return fail(format!(
                    "{a}: arrow {} → {} of colour {}",
                    x.src, x.dst, x.colour
                ));
            }
            pairs += 1;
        }
    }
    pass(format!("{pairs} coloured arrows, all complemented"))
}

fn crossing_agreement() -> Outcome {
    let mut pairs = 0;
    for (p, q, m) in [(2, 2, 2), (3, 2, 1)] {
        let c = config(p, q, m);
        let ds = all_diagonals(&c, -2..=2);
        for a in &ds {
            for b in &ds {
                let fast = crosses(&c, a, b).expect("diagonals of this config");
                let slow = crossing_oracle(&c, a, b, default_window(&c, a, b));
                if fast != slow {
                    return fail(format!("{c}: {a} vs {b}: fast {fast}, oracle {slow}"));
                }
                pairs += 1;
            }
        }
    }
    pass(format!("{pairs} ordered pairs agree"))
}

fn round_trip(sweeps: &[Sweep]) -> Outcome {
    let example = eight_vertex_quiver();
    match realize(&example, 3) {
        Ok(r) if iso_check(&bound_quiver(&r.angulation), &example) => {}
        Ok(r) => {
            return fail(format!(
                "eight-vertex quiver realized as {} with a different quiver",
                r.angulation
            ))
        }
        Err(e) => return fail(format!("eight-vertex quiver: {e}")),
    }
    let mut count = 1;
    for s in sweeps {
        let options = RealizeOptions {
            shape: Some((s.config.p(), s.config.q())),
            ..RealizeOptions::default()
        };
        for a in &s.angulations {
            let bq = bound_quiver(a);
            match realize_with(&bq, s.config.m(), &options) {
                Ok(r)
                    if r.config() == &s.config && iso_check(&bound_quiver(&r.angulation), &bq) =>
                {
                    count += 1
                }
                Ok(r) => return fail(format!("{a}: realized as {}", r.angulation)),
                Err(e) => return fail(format!("{a}: {e}")),
            }
        }
    }
    pass(format!(
        "{count} quivers realized in their own annulus and round-tripped"
    ))
}

fn component_shift() -> Outcome {
    let mut pairs = 0;
    for (p, q, m) in [(2, 2, 2), (2, 2, 3)] {
        let c = config(p, q, m);
        let arcs: Vec<MDiagonal> = all_diagonals(&c, 0..=0)
            .into_iter()
            .filter(|d| !d.is_type1())
            .collect();
        for d in &arcs {
            for e in &arcs {
                if d.type_number() != e.type_number() || endpoints(&c, d).1 != endpoints(&c, e).0 {
                    continue;
                }
                match check_component_shift(&c, d, e) {
                    Ok(true) => pairs += 1,
                    other => return fail(format!("{c}: {d}, {e}: {other:?}")),
                }
            }
        }
    }
    pass(format!("{pairs} chained pairs drop one degree"))
}

fn type1_triples(sweeps: &[Sweep]) -> Outcome {
    for a in all(sweeps) {
        if let Some((face, t)) = chained_type1_triples(a).first() {
            return fail(format!(
                "{a}: face {face} has chained type-1 diagonals {t:?}"
            ));
        }
    }
    pass(format!(
        "no chained type-1 triple in {} angulations",
        all(sweeps).count()
    ))
}

fn main() -> ExitCode {
    let sweeps = sweeps();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("diagonal count", diagonal_count(&sweeps)),
        ("face shape", face_shape(&sweeps)),
        ("gentleness", gentleness(&sweeps)),
        ("forward theorem", forward_theorem(&sweeps)),
        ("congruence r_h ≡ r_a", congruence(&sweeps)),
        ("counting example", counting_numbers()),
        ("type ambiguity", type_ambiguity(&sweeps)),
        ("Δ_P contract", delta_contract()),
        ("colour complement", colour_complement(&sweeps)),
        ("crossing vs oracle", crossing_agreement()),
        ("round trip", round_trip(&sweeps)),
        ("component shift", component_shift()),
        ("type-1 triples", type1_triples(&sweeps)),
    ];
    let mut failed = 0;
    for (k, (name, outcome)) in criteria.iter().enumerate() {
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} ({name}): {verdict} — {}",
            k + 1,
            outcome.detail
        );
        failed += usize::from(!outcome.passed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
