use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use attainset::attraction::{
    attraction_set_direct, attraction_set_via_ultrafilters, condition_check,
    generalized_solution_pipeline, partial_attraction,
};
use attainset::json::{family_json, parse_family, parse_problem, subset_json};
use attainset::ultraspace::{build_space, stone_report, wallman_embedding};
use attainset::universe::{generate_algebra, MAX_FAMILY, MAX_UNIVERSE};
use attainset::verify::{run_verify, VerifyConfig};
use attainset::{AttractionProblem, Checks, Error, SetFamily, Topology, UltraSpace, Universe};

/// Largest instance size the verification suite accepts.
const VERIFY_MAX_UNIVERSE: usize = 8;

#[derive(Parser)]
#[command(name = "attainset", version, about = "Finite set families, ultrafilter spaces and attraction sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Largest universe accepted in input, or drawn by `verify`.
    #[arg(long, global = true)]
    max_universe: Option<usize>,
    /// Largest family accepted in input.
    #[arg(long, global = true, default_value_t = MAX_FAMILY)]
    max_family: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a family of subsets.
    Classify { input: String },
    /// Smallest algebra containing a semialgebra.
    GenerateAlgebra { input: String },
    /// Ultrafilter space of a pi-system.
    Ultra { input: String },
    /// Wallman embedding of a T1 topology.
    Wallman { input: String },
    /// Stone checks for an algebra.
    Stone { input: String },
    /// Attraction sets of a problem.
    Attract { input: String },
    /// Run the verification suite on seeded random instances.
    Verify {
        /// Instances drawn per entry.
        #[arg(long, default_value_t = 100)]
        instances: usize,
    },
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

struct Output {
    body: String,
    ok: bool,
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input.trim_start().starts_with('{') {
        Ok(input.to_string())
    } else {
        fs::read_to_string(input).map_err(|e| Failure::Input(format!("cannot read {input}: {e}")))
    }
}

struct Caps {
    universe: usize,
    family: usize,
}

impl Caps {
    fn universe(&self, u: &Universe) -> Result<(), Failure> {
        if u.size() > self.universe {
            return Err(Failure::Input(format!(
                "max-universe exceeded: {} points, cap {}",
                u.size(),
                self.universe
            )));
        }
        Ok(())
    }

    fn family(&self, f: &SetFamily) -> Result<(), Failure> {
        self.universe(f.universe())?;
        if f.len() > self.family {
            return Err(Failure::Input(format!(
                "max-family exceeded: {} members, cap {}",
                f.len(),
                self.family
            )));
        }
        Ok(())
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn checks_text(checks: &Checks) -> String {
    checks
        .iter()
        .map(|c| match &c.witness {
            Some(w) => format!("FAIL {}: {w}\n", c.check),
            None => format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.check),
        })
        .collect()
}

fn no_dot(cmd: &str) -> Failure {
    Failure::Input(format!("dot output is not available for {cmd}"))
}

fn classify(text: &str, caps: &Caps, format: Format) -> Result<Output, Failure> {
    let f = parse_family(text)?;
    caps.family(&f)?;
    let rep = f.classify();
    let body = match format {
        Format::Json => pretty(&serde_json::to_value(rep).unwrap()),
        Format::Dot => {
            if !rep.topology {
                return Err(Failure::Input("dot output needs a topology".into()));
            }
            Topology::new(f)?.specialization_dot()
        }
        Format::Text => {
            let v = serde_json::to_value(rep).unwrap();
            let mut s = String::new();
            for (k, val) in v.as_object().unwrap() {
                if let Some(b) = val.as_bool() {
                    s.push_str(&format!("{k:<24} {b}\n"));
                }
            }
            for (p, w) in &rep.witnesses {
                s.push_str(&format!("not {p}: {w}\n"));
            }
            s
        }
    };
    Ok(Output { body, ok: true })
}

fn gen_algebra(text: &str, caps: &Caps, format: Format) -> Result<Output, Failure> {
    let f = parse_family(text)?;
    caps.family(&f)?;
    let a = generate_algebra(&f)?;
    let body = match format {
        Format::Json => pretty(&family_json(&a)),
        Format::Text => a.show() + "\n",
        Format::Dot => return Err(no_dot("generate-algebra")),
    };
    Ok(Output { body, ok: true })
}

fn space_json(space: &UltraSpace) -> Value {
    let base = space.ambient().universe();
    let pts = space.universe();
    let points: Vec<Value> = space
        .points()
        .iter()
        .enumerate()
        .map(|(i, u)| json!({ "label": pts.label(i), "min": subset_json(base, u.min()) }))
        .collect();
    let phi: Vec<Value> = space
        .ambient()
        .iter()
        .map(|l| json!({ "member": subset_json(base, l), "points": subset_json(pts, space.phi(l).unwrap()) }))
        .collect();
    json!({
        "points": points,
        "phi": phi,
        "uf": family_json(space.uf()),
        "star": family_json(space.star().opens()),
        "wallman": space.wallman().map(|t| family_json(t.opens())),
    })
}

fn ultra(text: &str, caps: &Caps, format: Format) -> Result<Output, Failure> {
    let f = parse_family(text)?;
    caps.family(&f)?;
    let space = build_space(&f)?;
    let body = match format {
        Format::Json => pretty(&space_json(&space)),
        Format::Dot => space.phi_dot(),
        Format::Text => {
            let base = f.universe();
            let mut s = String::new();
            for (i, u) in space.points().iter().enumerate() {
                s.push_str(&format!("{} = sets above {}\n", space.universe().label(i), base.show(u.min())));
            }
            s.push_str(&format!("UF      {}\n", space.uf().show()));
            s.push_str(&format!("star    {}\n", space.star().opens().show()));
            if let Some(w) = space.wallman() {
                s.push_str(&format!("wallman {}\n", w.opens().show()));
            }
            s
        }
    };
    Ok(Output { body, ok: true })
}

fn wallman(text: &str, caps: &Caps, format: Format) -> Result<Output, Failure> {
    let f = parse_family(text)?;
    caps.family(&f)?;
    let tau = Topology::new(f)?;
    let e = wallman_embedding(&tau)?;
    let ok = e.checks.all_passed();
    let body = match format {
        Format::Json => {
            let pts = e.space.universe();
            let map: Vec<String> = e.map.images().iter().map(|&i| pts.label(i)).collect();
            pretty(&json!({ "space": space_json(&e.space), "map": map, "checks": e.checks, "passed": ok }))
        }
        Format::Text => checks_text(&e.checks),
        Format::Dot => return Err(no_dot("wallman")),
    };
    Ok(Output { body, ok })
}

fn stone(text: &str, caps: &Caps, format: Format) -> Result<Output, Failure> {
    let f = parse_family(text)?;
    caps.family(&f)?;
    let rep = stone_report(&f)?;
    let ok = rep.passed();
    let body = match format {
        Format::Json => pretty(&json!({ "space": space_json(&rep.space), "checks": rep.checks, "passed": ok })),
        Format::Text => checks_text(&rep.checks),
        Format::Dot => return Err(no_dot("stone")),
    };
    Ok(Output { body, ok })
}

fn attract_json(p: &AttractionProblem) -> Result<(Value, bool), Failure> {
    let hu = p.tau().universe();
    let direct = attraction_set_direct(p)?;
    let via = attraction_set_via_ultrafilters(p)?;
    let mut ok = direct == via;
    let mut out = json!({
        "direct": subset_json(hu, direct),
        "via_ultrafilters": subset_json(hu, via),
        "direct_equals_via_ultrafilters": direct == via,
        "partial": Value::Null,
        "pipeline": Value::Null,
    });
    if p.algebra().is_some() {
        let pa = partial_attraction(p)?;
        let cond = condition_check(p)?;
        let within = pa.ultrafilter_form.is_subset_of(direct);
        ok &= pa.forms_agree() && within && (!cond.holds || pa.ultrafilter_form == direct);
        out["partial"] = json!({
            "ultrafilter_form": subset_json(hu, pa.ultrafilter_form),
            "filter_form": subset_json(hu, pa.filter_form),
            "forms_agree": pa.forms_agree(),
            "within_direct": within,
            "equals_direct": pa.ultrafilter_form == direct,
            "condition_holds": cond.holds,
            "condition_per_point": cond.per_point,
        });
        let sep = p.tau().separation();
        if sep.hausdorff && sep.compact {
            let rep = generalized_solution_pipeline(p)?;
            ok &= rep.passed();
            let space = build_space(p.algebra().unwrap())?;
            let pts = space.universe();
            let values: Vec<Value> = rep
                .limit_values
                .iter()
                .map(|v| v.map_or(Value::Null, |z| json!(hu.label(z))))
                .collect();
            out["pipeline"] = json!({
                "admissible": subset_json(pts, rep.admissible),
                "inner": subset_json(pts, rep.inner),
                "image": rep.image.map(|s| subset_json(hu, s)),
                "limit_values": values,
                "condition_holds": rep.condition_holds,
                "checks": rep.checks,
                "passed": rep.passed(),
            });
        }
    }
    out["agree"] = json!(ok);
    Ok((out, ok))
}

fn attract(text: &str, caps: &Caps, format: Format) -> Result<Output, Failure> {
    let p = parse_problem(text)?;
    caps.family(p.constraint())?;
    caps.universe(p.tau().universe())?;
    let (v, ok) = attract_json(&p)?;
    let body = match format {
        Format::Json => pretty(&v),
        Format::Text => {
            let mut s = format!("direct           {}\nvia ultrafilters {}\n", v["direct"], v["via_ultrafilters"]);
            if !v["partial"].is_null() {
                s.push_str(&format!("partial          {}\n", v["partial"]["ultrafilter_form"]));
            }
            if !v["pipeline"].is_null() {
                s.push_str(&format!("pipeline image   {}\n", v["pipeline"]["image"]));
            }
            s.push_str(&format!("agree            {ok}\n"));
            s
        }
        Format::Dot => return Err(no_dot("attract")),
    };
    Ok(Output { body, ok })
}

fn verify(cli: &Cli, instances: usize) -> Result<Output, Failure> {
    let max_universe = cli.max_universe.unwrap_or(VerifyConfig::default().max_universe);
    if max_universe == 0 || max_universe > VERIFY_MAX_UNIVERSE {
        return Err(Failure::Input(format!(
            "max-universe must be between 1 and {VERIFY_MAX_UNIVERSE} for verify, got {max_universe}"
        )));
    }
    let rep = run_verify(&VerifyConfig {
        seed: cli.seed,
        max_universe,
        instances,
    });
    let body = match cli.format {
        Format::Json => pretty(&serde_json::to_value(&rep).unwrap()),
        Format::Text => rep.text(),
        Format::Dot => return Err(no_dot("verify")),
    };
    Ok(Output { body, ok: rep.passed() })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let caps = Caps {
        universe: cli.max_universe.unwrap_or(MAX_UNIVERSE),
        family: cli.max_family,
    };
    let f = cli.format;
    match &cli.command {
        Command::Classify { input } => classify(&read_input(input)?, &caps, f),
        Command::GenerateAlgebra { input } => gen_algebra(&read_input(input)?, &caps, f),
        Command::Ultra { input } => ultra(&read_input(input)?, &caps, f),
        Command::Wallman { input } => wallman(&read_input(input)?, &caps, f),
        Command::Stone { input } => stone(&read_input(input)?, &caps, f),
        Command::Attract { input } => attract(&read_input(input)?, &caps, f),
        Command::Verify { instances } => verify(cli, *instances),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.body),
                None => {
                    print!("{}", out.body);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
