use std::fmt::Write;

use davis_core::coxeter::{ball_csv, NerveGraph, TorsionScope};
use davis_core::davis::{CertificateStatus, ConeChamber, QuotientComplex, TileComplex, TruncationGuards};
use davis_core::homology_model::z2_in_factor_property;
use davis_core::obstruction::{
    adjunction_genus_bound, boundary_sum_genus_bound, chern_evaluation, family_claim, AdjunctionInput, GenusProfile,
    LegendrianCurve, Orientation,
};
use davis_core::{HomologyProfile, SimplicialComplex};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::report::{load_complex, read_file, CliError, Outcome};
use crate::{AdjunctionArgs, Cli, Command, DavisArgs, Format, GroupArgs, InputArgs, QuotientArgs, SubdivideArgs};

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check(a) => check(a, cli.seed),
        Command::Subdivide(a) => subdivide(a, cli.seed),
        Command::Group(a) => group(a, cli.seed),
        Command::Davis(a) => davis(a, cli.seed),
        Command::Quotient(a) => quotient(a, cli.seed),
        Command::Homology(a) => homology(a, cli.seed),
        Command::Adjunction(a) => adjunction(a, cli.seed),
    }
}

fn config<T: serde::Serialize>(args: &T) -> Value {
    serde_json::to_value(args).expect("serializable")
}

fn labels(k: &SimplicialComplex, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| k.label(v).to_string()).collect()
}

fn check(args: &InputArgs, seed: u64) -> Result<Outcome, CliError> {
    let input = load_complex(args)?;
    let k = &input.value;
    let nerve = NerveGraph::from_complex(k);
    let squares: Vec<Vec<String>> = k.empty_squares().iter().map(|s| labels(k, &s.vertices())).collect();
    let witness = nerve.z2_witness().map(|w| {
        json!({
            "square": labels(k, &w.square.vertices()),
            "first": nerve.format(&w.first),
            "second": nerve.format(&w.second),
        })
    });
    let result = json!({
        "vertices": k.vertex_count(),
        "dimension": k.dimension(),
        "f_vector": k.f_vector(),
        "flag": k.is_flag(),
        "empty_squares": squares,
        "flag_no_square": k.is_flag_no_square(),
        "hyperbolic": nerve.is_hyperbolic(),
        "z2_witness": witness,
    });
    Ok(Outcome::report("check", config(args), seed, input.source, result, true))
}

fn subdivide(args: &SubdivideArgs, seed: u64) -> Result<Outcome, CliError> {
    let input = load_complex(&args.input)?;
    let k = &input.value;
    let sd = k.barycentric_subdivision();
    let before = k.homology();
    let barycentric = json!({
        "f_vector": sd.f_vector(),
        "flag": sd.is_flag(),
        "empty_squares": sd.empty_squares().len(),
        "euler_characteristic": sd.euler_characteristic(),
    });
    let (refined, certified) = match k.make_flag_no_square(args.rounds) {
        Ok(s) => {
            let after = s.complex.homology();
            let preserved = after == before;
            let mut r = json!({
                "found": true,
                "f_vector": s.complex.f_vector(),
                "flag_no_square": s.complex.is_flag_no_square(),
                "homology": after,
                "homology_preserved": preserved,
            });
            if args.emit_complex {
                r["complex"] = serde_json::to_value(s.complex.to_raw()).expect("serializable");
            }
            (r, preserved)
        }
        Err(f) => (
            json!({
                "found": false,
                "rounds": f.rounds,
                "flag": f.flag,
                "empty_squares": f.empty_squares,
                "vertices": f.last.complex.vertex_count(),
                "message": f.to_string(),
            }),
            false,
        ),
    };
    let result = json!({ "homology": before, "barycentric": barycentric, "flag_no_square_subdivision": refined });
    Ok(Outcome::report("subdivide", config(args), seed, input.source, result, certified))
}

fn group(args: &GroupArgs, seed: u64) -> Result<Outcome, CliError> {
    let input = load_complex(&args.input)?;
    let nerve = NerveGraph::from_complex(&input.value);

    if args.format == Format::Csv {
        if args.ball {
            let ball = nerve.enumerate_ball(args.radius, args.max_elements)?;
            return Ok(Outcome::text(ball_csv(&nerve, &ball), true));
        }
        let growth = nerve.growth_series(args.radius, args.max_elements as u64)?;
        let mut out = String::from("radius,sphere,ball\n");
        let mut total = 0;
        for (r, s) in growth.iter().enumerate() {
            total += s;
            writeln!(out, "{r},{s},{total}").unwrap();
        }
        return Ok(Outcome::text(out, true));
    }
    if args.format == Format::Dot {
        return Err(CliError::Input("group supports --format json or csv".into()));
    }

    let growth = nerve.growth_series(args.radius, args.max_elements as u64)?;
    let scan = nerve.torsion_scan(args.radius, TorsionScope::Commutator, args.max_elements)?;
    let ball = nerve.enumerate_ball(args.radius, args.max_elements)?;
    let mut descents_are_cliques = true;
    for w in &ball {
        let d: Vec<usize> = nerve.descent_set(w)?.iter().map(|v| v as usize).collect();
        descents_are_cliques &= d.iter().enumerate().all(|(i, &a)| d[i + 1..].iter().all(|&b| nerve.commute(a as u32, b as u32)));
    }
    let factors = nerve.chamber_order(8);
    let law = if factors.len() >= 2 {
        serde_json::to_value(z2_in_factor_property(args.samples, seed, &factors).expect("at least two factors")).expect("serializable")
    } else {
        Value::Null
    };
    let witness = nerve.z2_witness().map(|w| json!([nerve.format(&w.first), nerve.format(&w.second)]));
    let certified = scan.is_clean() && (law.is_null() || law_clean(&law));
    let result = json!({
        "generators": nerve.generator_count(),
        "commuting_pairs": nerve.edges().len(),
        "hyperbolic": nerve.is_hyperbolic(),
        "z2_witness": witness,
        "growth": growth,
        "ball_size": ball.len(),
        "descent_sets_are_cliques": descents_are_cliques,
        "commutator_index_log2": nerve.commutator_index_log2(),
        "torsion_scan": {
            "scope": "commutator",
            "radius": scan.radius,
            "elements_checked": scan.elements_checked,
            "violations": scan.violations.iter().map(|w| nerve.format(w)).collect::<Vec<_>>(),
        },
        "free_product_law": law,
    });
    Ok(Outcome::report("group", config(args), seed, input.source, result, certified))
}

fn law_clean(law: &Value) -> bool {
    ["commuting_violations", "cross_violations", "kurosh_violations"].iter().all(|k| law[k] == 0)
}

fn davis(args: &DavisArgs, seed: u64) -> Result<Outcome, CliError> {
    let input = load_complex(&args.input)?;
    let chamber = ConeChamber::new(&input.value);
    let guards = TruncationGuards { max_tiles: args.max_tiles, max_cells: args.max_cells };
    let p = TileComplex::build(&chamber, args.tiles, guards)?;
    if args.format == Format::Dot {
        return Ok(Outcome::text(p.to_dot(), true));
    }
    if args.format == Format::Csv {
        return Err(CliError::Input("davis supports --format json or dot".into()));
    }
    let nerve = chamber.nerve();
    let chamber_chi = chamber.cone().euler_characteristic();
    let mut steps = Vec::new();
    let mut certified = p.adjacency_connected() && p.signs_alternate();
    let mut previous_chi = 0;
    for k in 1..=p.tile_count() {
        let chi = p.euler_characteristic(k);
        let h = p.homology(k);
        let mut step = json!({ "tiles": k, "word": nerve.format(&p.tiles()[k - 1].word), "euler_characteristic": chi, "homology": h });
        if k >= 2 {
            let region = p.attach_region(k - 1)?;
            let cert = region.disk_certificate();
            let matches = region.simplices() == p.observed_attach(k - 1);
            // Gluing along a disk adds χ(chamber) - 1.
            let chi_ok = chi == previous_chi + chamber_chi - cert.euler_characteristic;
            certified &= cert.status != CertificateStatus::Failed && matches && chi_ok;
            step["attach"] = json!({
                "mirrors": region.mirrors().iter().map(|&v| nerve.label(v)).collect::<Vec<_>>(),
                "certificate": cert,
                "matches_gluing": matches,
            });
        }
        previous_chi = chi;
        steps.push(step);
    }
    let injective = p.h1_injectivity_steps();
    certified &= injective.iter().all(|&b| b);
    let quotient_euler = match chamber.quotient_euler() {
        Ok(chi) => json!(chi),
        Err(e) => {
            certified = false;
            json!(e.to_string())
        }
    };
    let mut result = json!({
        "chamber": {
            "f_vector": chamber.cone().f_vector(),
            "mirrors": chamber.mirror_count(),
            "orbifold_euler": chamber.orbifold_euler().to_string(),
            "quotient_euler": quotient_euler,
        },
        "tiles": p.tile_count(),
        "cells": p.chain_complex().counts(),
        "adjacency_edges": p.adjacency().len(),
        "adjacency_connected": p.adjacency_connected(),
        "signs_alternate": p.signs_alternate(),
        "h1_injective": injective,
        "steps": steps,
    });
    if args.dump {
        result["adjacency"] = p.adjacency_json();
        result["boundary"] = p.boundary_json();
    }
    Ok(Outcome::report("davis", config(args), seed, input.source, result, certified))
}

fn quotient(args: &QuotientArgs, seed: u64) -> Result<Outcome, CliError> {
    let input = load_complex(&args.input)?;
    let chamber = ConeChamber::new(&input.value);
    let q = QuotientComplex::build(&chamber, args.max_cells)?;
    let expected = chamber.quotient_euler()?;
    let chi = q.euler_characteristic();
    let h = q.homology();
    let certified = chi == expected && h.euler_characteristic() == chi;
    let mut result = json!({
        "chambers": q.chamber_count(),
        "orbifold_euler": chamber.orbifold_euler().to_string(),
        "expected_euler_characteristic": expected,
        "euler_characteristic": chi,
        "cells": q.chain_complex().counts(),
        "homology": h,
        "ranks": h.ranks(),
    });
    if args.dump {
        result["boundary"] = q.boundary_json();
    }
    Ok(Outcome::report("quotient", config(args), seed, input.source, result, certified))
}

fn homology(args: &InputArgs, seed: u64) -> Result<Outcome, CliError> {
    let input = load_complex(args)?;
    let k = &input.value;
    let h: HomologyProfile = k.homology();
    let certified = h.euler_characteristic() == k.euler_characteristic();
    let result = json!({
        "f_vector": k.f_vector(),
        "euler_characteristic": k.euler_characteristic(),
        "homology": h,
        "ranks": h.ranks(),
        "components": k.components().len(),
    });
    Ok(Outcome::report("homology", config(args), seed, input.source, result, certified))
}

#[derive(Deserialize)]
struct CurveInput {
    tb: i64,
    r: i64,
    framing: Option<i64>,
}

impl CurveInput {
    fn curve(&self) -> LegendrianCurve {
        LegendrianCurve { tb: self.tb, r: self.r, framing: self.framing.unwrap_or(self.tb - 1) }
    }
}

#[derive(Deserialize)]
struct CurvePair {
    #[serde(rename = "B")]
    b: CurveInput,
    #[serde(rename = "G")]
    g: CurveInput,
}

fn adjunction(args: &AdjunctionArgs, seed: u64) -> Result<Outcome, CliError> {
    let (b, g, source) = match &args.input {
        Some(path) => {
            let (bytes, source) = read_file(path)?;
            let pair: CurvePair = serde_json::from_slice(&bytes).map_err(|e| CliError::Input(format!("bad curve JSON: {e}")))?;
            (pair.b.curve(), pair.g.curve(), source)
        }
        None => (LegendrianCurve::stein(1, 3), LegendrianCurve::stein(1, 1), json!({ "builtin": "stein-chamber" })),
    };
    let bad = |e: davis_core::obstruction::ObstructionError| CliError::Input(e.to_string());
    let c1 = chern_evaluation(&b, &g, Orientation::Standard).map_err(bad)?;
    let mut bounds = Vec::new();
    for &k in &args.multiples {
        let bound = adjunction_genus_bound(&AdjunctionInput { c1_eval: c1, self_int: 0, k, applicable: true }).map_err(bad)?;
        bounds.push(json!({ "k": k, "genus_bound": bound }));
    }
    let x = GenusProfile::stein_chamber();
    let xp = GenusProfile::torus_chamber();
    let sum = [x.summand(false), xp.summand(false)];
    let comparison = json!({
        "X": { "profile": x, "genus_bound": x.genus_bound(1).map_err(bad)? },
        "X'": { "profile": xp, "genus_bound": xp.genus_bound(1).map_err(bad)? },
        "boundary_sum_X_only": boundary_sum_genus_bound(&sum, &[true, false]).map_err(bad)?,
        "boundary_sum_X'_only": boundary_sum_genus_bound(&sum, &[false, true]).map_err(bad)?,
    });
    let family: Vec<Value> = (0..=args.family)
        .map(|m| family_claim(m).map(|f| serde_json::to_value(f).expect("serializable")))
        .collect::<Result<_, _>>()
        .map_err(bad)?;
    let result = json!({
        "curves": { "B": b, "G": g },
        "c1_eval": c1,
        "bounds": bounds,
        "profiles": comparison,
        "family": family,
    });
    Ok(Outcome::report("adjunction", config(args), seed, source, result, true))
}
