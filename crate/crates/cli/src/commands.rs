use std::fmt::Write;
use std::path::Path;
use std::sync::Arc;

use repring::catalog;
use repring::chartab::{character_table_seeded, CharacterTable};
use repring::criteria;
use repring::groups::Group;
use repring::io::{matrix_json, GroupFile, TableJson, TwistSpec};
use repring::lambdaring::{
    adams, based_ring_isomorphisms, commutes_with_adams, exponent_from_ring, fs_indicator, order_from_ring,
    twisted_adams_abelian, RepRingElement,
};
use repring::twist::{compare_adams, d8_basis, d8_example, is_invariant_class, is_nondegenerate, klein_example, skew, TwistData};
use serde_json::{json, Value};

use crate::render;
use crate::{Cli, Command};

pub struct Outcome {
    pub results: Value,
    pub pretty: String,
    pub verified: bool,
}

pub enum Failure {
    Input(String),
}

impl From<repring::Error> for Failure {
    fn from(e: repring::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn report(results: Value, pretty: String) -> Res<Outcome> {
    Ok(Outcome {
        results,
        pretty,
        verified: true,
    })
}

struct Ctx {
    seed: u64,
    limit: usize,
}

impl Ctx {
    fn group(&self, name: &str) -> Res<Arc<Group>> {
        Ok(Group::new(catalog::load(name, self.limit)?))
    }

    fn table(&self, g: Arc<Group>) -> Res<Arc<CharacterTable>> {
        Ok(Arc::new(character_table_seeded(g, self.seed)?))
    }

    fn twist(&self, path: &Path) -> Res<(TwistSpec, TwistData)> {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let spec: TwistSpec =
            serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let td = spec.build(self.group(&spec.group)?)?;
        Ok((spec, td))
    }
}

fn chi_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("χ{i}")).collect()
}

pub fn dispatch(cli: &Cli) -> Res<Outcome> {
    let ctx = Ctx {
        seed: cli.seed,
        limit: cli.limit_order,
    };
    match &cli.command {
        Command::Chartable { group } => {
            let t = ctx.table(ctx.group(group)?)?;
            report(json!(TableJson::from(t.as_ref())), render::character_table(&t))
        }
        Command::Adams { group, k } => {
            let t = ctx.table(ctx.group(group)?)?;
            let m = adams(&t, *k)?;
            let pretty = format!("Ψ^{k} on {}\n{}", t.group().name(), render::int_matrix(m.matrix()));
            report(json!({"group": t.group().name(), "k": k, "matrix": matrix_json(m.matrix())}), pretty)
        }
        Command::Lambda { group, irr, n } => {
            let t = ctx.table(ctx.group(group)?)?;
            if *irr >= t.rank() {
                return Err(Failure::Input(format!("irreducible index {irr} out of range (rank {})", t.rank())));
            }
            let x = RepRingElement::basis(t.clone(), *irr).lambda(*n)?;
            let pretty = format!("λ^{n}(χ{irr}) = {}\n", render::combination(x.coeffs(), &chi_names(t.rank())));
            report(
                json!({"group": t.group().name(), "irreducible": irr, "n": n, "coefficients": x.coeffs()}),
                pretty,
            )
        }
        Command::Fs { group, k } => {
            let t = ctx.table(ctx.group(group)?)?;
            let ind = (0..t.rank()).map(|j| fs_indicator(&t, *k, j)).collect::<repring::Result<Vec<_>>>()?;
            let mut pretty = String::new();
            for (j, v) in ind.iter().enumerate() {
                let _ = writeln!(pretty, "ν_{k}(χ{j}) = {v}");
            }
            report(json!({"group": t.group().name(), "k": k, "indicators": ind}), pretty)
        }
        Command::RingOrder { group } => {
            let g = ctx.group(group)?;
            let t = ctx.table(g.clone())?;
            let n = order_from_ring(&t);
            let ok = n == g.order() as u64;
            Ok(Outcome {
                results: json!({"group": g.name(), "order_from_ring": n, "order": g.order()}),
                pretty: format!("{n}\n"),
                verified: ok,
            })
        }
        Command::RingExponent { group } => {
            let g = ctx.group(group)?;
            let t = ctx.table(g.clone())?;
            let e = exponent_from_ring(&t)?;
            let ok = e == g.exponent() as u64;
            Ok(Outcome {
                results: json!({"group": g.name(), "exponent_from_ring": e, "exponent": g.exponent()}),
                pretty: format!("{e}\n"),
                verified: ok,
            })
        }
        Command::RingIso { group1, group2, check_adams } => ring_iso(&ctx, group1, group2, *check_adams),
        Command::Twist { spec, emit_group } => twist(&ctx, spec, emit_group.as_deref()),
        Command::VerifyOddAdams { spec, kmax } => verify_odd(&ctx, spec, *kmax),
        Command::CompareAdams { spec, k } => {
            let (_, td) = ctx.twist(spec)?;
            let (t, tb) = (ctx.table(td.group().clone())?, ctx.table(td.twisted().clone())?);
            let c = compare_adams(&t, &tb, *k)?;
            let pretty = format!(
                "k = {k}: {}\nmatching G → G_b: {:?}\ndifference Ψ_Gb − Ψ_G:\n{}",
                if c.equal { "equal" } else { "different" },
                c.matching,
                render::int_matrix(&c.diff)
            );
            report(
                json!({"k": k, "equal": c.equal, "matching": c.matching, "diff": matrix_json(&c.diff)}),
                pretty,
            )
        }
        Command::Example { name } if name == "d8" => example_d8(&ctx),
        Command::Example { .. } => example_klein(),
        Command::Selftest => {
            let results = criteria::run_all();
            let mut pretty = String::new();
            for r in &results {
                let _ = writeln!(pretty, "{}", r.line());
            }
            let all = results.iter().all(|r| r.passed);
            let json: Vec<Value> = results
                .iter()
                .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail}))
                .collect();
            Ok(Outcome {
                results: json!(json),
                pretty,
                verified: all,
            })
        }
    }
}

fn ring_iso(ctx: &Ctx, a: &str, b: &str, k: Option<i64>) -> Res<Outcome> {
    let (t1, t2) = (ctx.table(ctx.group(a)?)?, ctx.table(ctx.group(b)?)?);
    let isos = based_ring_isomorphisms(&t1, &t2)?;
    let mut pretty = format!(
        "{} based ring isomorphism(s) {} → {}\n",
        isos.len(),
        t1.group().name(),
        t2.group().name()
    );
    let mut commuting = Vec::new();
    for iso in &isos {
        let c = match k {
            Some(k) => Some(commutes_with_adams(&t1, &t2, iso, k)?),
            None => None,
        };
        let _ = write!(pretty, "  {iso:?}");
        if let (Some(c), Some(k)) = (c, k) {
            let _ = write!(pretty, "  commutes with Ψ^{k}: {c}");
        }
        pretty.push('\n');
        commuting.push(c);
    }
    let mut results = json!({"group1": t1.group().name(), "group2": t2.group().name(), "isomorphisms": isos});
    if let Some(k) = k {
        results["check_adams"] = json!(k);
        results["commutes"] = json!(commuting);
    }
    report(results, pretty)
}

fn twist_summary(td: &TwistData) -> (Value, String) {
    let g = td.group();
    let gb = td.twisted();
    let a = td.extension().abelian();
    let quo = td.extension().quotient();
    let s = skew(td.alpha());
    let nondeg = is_nondegenerate(&s);
    let invariant = is_invariant_class(td.alpha(), td.action(), quo.order());
    let b: Vec<Vec<String>> = td
        .b()
        .table()
        .iter()
        .map(|row| row.iter().map(|&x| g.label(x).to_string()).collect())
        .collect();
    let z: Vec<Value> = td
        .cochains()
        .iter()
        .map(|c| json!({"q": quo.label(c.q), "values": c.values}))
        .collect();
    let results = json!({
        "group": g.name(),
        "subgroup": a.elements(),
        "invariant_factors": a.invariant_factors(),
        "alpha": td.alpha().values(),
        "skew": s,
        "nondegenerate": nondeg,
        "invariant": invariant,
        "z": z,
        "b": b,
        "twisted": {
            "order": gb.order(),
            "exponent": gb.exponent(),
            "classes": gb.conjugacy().num_classes(),
            "mul": gb.rows(),
        },
    });
    let mut pretty = format!(
        "G = {} (order {}), A = {:?} with factors {:?}\nα nondegenerate: {nondeg}, invariant: {invariant}\n",
        g.name(),
        g.order(),
        a.elements(),
        a.invariant_factors()
    );
    let mut rows = vec![std::iter::once("b".to_string()).chain(quo.labels().iter().cloned()).collect::<Vec<_>>()];
    for (p, row) in b.iter().enumerate() {
        rows.push(std::iter::once(quo.label(p).to_string()).chain(row.iter().cloned()).collect());
    }
    pretty.push_str(&render::grid(&rows));
    let _ = writeln!(
        pretty,
        "G_b: exponent {} ({} for G), {} classes ({} for G)",
        gb.exponent(),
        g.exponent(),
        gb.conjugacy().num_classes(),
        g.conjugacy().num_classes()
    );
    (results, pretty)
}

fn twist(ctx: &Ctx, spec: &Path, emit: Option<&Path>) -> Res<Outcome> {
    let (_, td) = ctx.twist(spec)?;
    let (results, pretty) = twist_summary(&td);
    if let Some(path) = emit {
        let file = GroupFile::from_table(td.twisted().table());
        let text = serde_json::to_string_pretty(&file).expect("group file serializes") + "\n";
        std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    report(results, pretty)
}

fn odd_verdicts(ctx: &Ctx, td: &TwistData, kmax: i64) -> Res<Vec<(i64, bool)>> {
    let (t, tb) = (ctx.table(td.group().clone())?, ctx.table(td.twisted().clone())?);
    (1..=kmax)
        .step_by(2)
        .map(|k| Ok((k, compare_adams(&t, &tb, k)?.equal)))
        .collect()
}

fn verify_odd(ctx: &Ctx, spec: &Path, kmax: Option<i64>) -> Res<Outcome> {
    let (_, td) = ctx.twist(spec)?;
    let kmax = kmax.unwrap_or(td.group().exponent() as i64 - 1);
    let verdicts = odd_verdicts(ctx, &td, kmax)?;
    let mut pretty = String::new();
    for (k, eq) in &verdicts {
        let _ = writeln!(pretty, "Ψ^{k}: {}", if *eq { "preserved" } else { "NOT preserved" });
    }
    let ok = verdicts.iter().all(|v| v.1);
    let json: Vec<Value> = verdicts.iter().map(|(k, e)| json!({"k": k, "equal": e})).collect();
    Ok(Outcome {
        results: json!({"group": td.group().name(), "kmax": kmax, "verdicts": json}),
        pretty,
        verified: ok,
    })
}

fn example_d8(ctx: &Ctx) -> Res<Outcome> {
    let td = d8_example()?;
    let (mut results, mut pretty) = twist_summary(&td);
    let (t, tb) = (ctx.table(td.group().clone())?, ctx.table(td.twisted().clone())?);
    let basis = d8_basis(&t).ok_or_else(|| Failure::Input("D8 characters not identified".into()))?;
    let names: Vec<String> = ["V00", "V10", "V01", "V11", "W"].map(String::from).to_vec();
    let w = basis[4];
    let psi = adams(&t, 2)?;
    let c2 = compare_adams(&t, &tb, 2)?;
    let before: Vec<i64> = basis.iter().map(|&j| psi.entry(w, j)).collect();
    let after: Vec<i64> = basis.iter().map(|&j| psi.entry(w, j) + c2.diff[(w, j)]).collect();
    let odd = odd_verdicts(ctx, &td, 7)?;
    let _ = writeln!(pretty, "b(q,q) = {}", td.group().label(td.b().value(1, 1)));
    let _ = writeln!(pretty, "Ψ²(W) in Rep(G):   {}", render::combination(&before, &names));
    let _ = writeln!(pretty, "Ψ²(W) in Rep(G_b): {}", render::combination(&after, &names));
    for (k, eq) in &odd {
        let _ = writeln!(pretty, "Ψ^{k}: {}", if *eq { "preserved" } else { "NOT preserved" });
    }
    results["basis"] = json!(names);
    results["psi2_w"] = json!({"G": before, "G_b": after});
    results["odd"] = json!(odd.iter().map(|(k, e)| json!({"k": k, "equal": e})).collect::<Vec<_>>());
    let verified = odd.iter().all(|v| v.1) && before != after;
    Ok(Outcome {
        results,
        pretty,
        verified,
    })
}

fn example_klein() -> Res<Outcome> {
    let (t, pairing) = klein_example()?;
    let names: Vec<String> = t.exponents.iter().map(|e| format!("V{}{}", e[0], e[1])).collect();
    let mut pretty = String::from("s(V_ij, V_kl) = (il + jk)/2\n");
    let mut ks = Vec::new();
    let mut ok = true;
    for k in 0..=3i64 {
        let tw = twisted_adams_abelian(&t, &pairing, k)?;
        let equal = tw.matrix() == adams(&t.table, k)?.matrix();
        ok &= equal;
        let _ = writeln!(pretty, "k = {k}: twisted Ψ^k equals Ψ^k: {equal}");
        for (i, name) in names.iter().enumerate() {
            let _ = writeln!(pretty, "  Ψ^{k}({name}) = {}", render::combination(tw.row(i), &names));
        }
        ks.push(json!({"k": k, "matrix": matrix_json(tw.matrix()), "equal": equal}));
    }
    Ok(Outcome {
        results: json!({"basis": names, "pairing": pairing, "adams": ks}),
        pretty,
        verified: ok,
    })
}
