//! Command-line front end. Exit codes: 0 ok, 1 diffs or failed checks,
//! 2 parse error, 3 domain error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use satake_levi::bits::NodeSet;
use satake_levi::classify::validate::run_checks;
use satake_levi::classify::{
    analyze, compare_form, golden_tables, to_csv, verify_tables_with, Reading, Seeds,
};
use satake_levi::error::Error;
use satake_levi::fibration::{
    fiber_totally_complex, is_cr_fibration, is_cr_fibration_diagram, lattice,
};
use satake_levi::satake::{
    build_form, catalogue, default_instances, render_diagram, FormSpec, RealForm,
};

#[derive(Parser)]
#[command(
    name = "satake-levi",
    version,
    about = "CR invariants and Levi order of closed orbits from cross-marked Satake diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Form specifier, e.g. "AIIIa p=2 l=5", "EIV", "SPLIT:D l=5".
    #[arg(long, global = true)]
    form: Option<String>,
    /// Crossed nodes as 1-based labels: "2", "1,3", "α1,α3".
    #[arg(long, global = true)]
    phi: Option<String>,
    /// Target marking of a fibration φ → ψ, same syntax as --phi.
    #[arg(long, global = true)]
    psi: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Instances to use instead of the defaults, separated by ';'.
    #[arg(long, global = true)]
    instances: Option<String>,
    /// Count open-question discrepancies as failures.
    #[arg(long, global = true)]
    strict: bool,
    /// Golden-table reading: verbatim, alternate or text.
    #[arg(long, global = true, default_value = "text")]
    reading: String,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Print the catalogue of real forms.
    List,
    /// Analyse one marking.
    Analyze,
    /// Analyse every marking of one or more forms.
    Classify,
    /// Compare enumeration with the golden tables.
    Tables,
    /// Fibrations out of φ.
    Fibrations,
    /// Run every internal cross-check.
    Validate,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Output {
    Text,
    Json,
    Csv,
    Dot,
}

struct Outcome {
    doc: String,
    failed: bool,
}

fn ok(doc: String) -> Outcome {
    Outcome { doc, failed: false }
}

fn parse_nodes(s: &str, form: &RealForm) -> Result<NodeSet, Error> {
    let mut set = NodeSet::EMPTY;
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let digits = tok.trim_start_matches(['α', 'a', 'A']);
        let k: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad node `{tok}`")))?;
        if k == 0 || k > form.rank() {
            return Err(Error::BadParams {
                form: form.to_string(),
                reason: format!("node {k} outside 1..={}", form.rank()),
            });
        }
        set = set.with(k - 1);
    }
    Ok(set)
}

fn parse_spec(s: &str) -> Result<FormSpec, Error> {
    s.parse()
}

/// `--instances` if given; otherwise `--form` (expanded to its catalogue
/// defaults when it has no parameters); otherwise every default.
fn instances(cli: &Cli) -> Result<Vec<FormSpec>, Error> {
    if let Some(list) = &cli.instances {
        return list
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(parse_spec)
            .collect();
    }
    match &cli.form {
        None => Ok(default_instances()),
        Some(f) => {
            let spec = parse_spec(f)?;
            if spec.p.is_none() && spec.l.is_none() {
                if let Some(e) = catalogue().into_iter().find(|e| e.name == spec.name) {
                    return Ok(e.defaults);
                }
            }
            Ok(vec![spec])
        }
    }
}

fn single_form(cli: &Cli) -> Result<RealForm, Error> {
    let f = cli
        .form
        .as_deref()
        .ok_or_else(|| Error::Parse("--form is required".into()))?;
    build_form(&parse_spec(f)?)
}

fn json_doc(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    if cli.output == Output::Dot && cli.command != Command::Fibrations {
        return Err(Error::Parse(
            "--output dot is only available for fibrations".into(),
        ));
    }
    let reading: Reading = cli.reading.parse()?;
    match cli.command {
        Command::List => list(cli),
        Command::Analyze => analyze_cmd(cli),
        Command::Classify => classify_cmd(cli, reading),
        Command::Tables => tables_cmd(cli, reading),
        Command::Fibrations => fibrations_cmd(cli),
        Command::Validate => validate_cmd(cli),
    }
}

fn list(cli: &Cli) -> Result<Outcome, Error> {
    let cat = catalogue();
    Ok(ok(match cli.output {
        Output::Json => json_doc(&serde_json::to_value(&cat).expect("catalogue serializes")),
        Output::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut push =
                |r: [String; 3]| w.write_record(r).map_err(|e| Error::Parse(e.to_string()));
            push(["name".into(), "params".into(), "defaults".into()])?;
            for e in &cat {
                let d: Vec<String> = e.defaults.iter().map(|s| s.to_string()).collect();
                push([e.name.clone(), e.params.clone(), d.join("; ")])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?)
                .expect("utf-8")
        }
        _ => {
            let mut s = String::new();
            for e in &cat {
                let d: Vec<String> = e.defaults.iter().map(|s| s.to_string()).collect();
                let _ = writeln!(s, "{:<10} {:<26} {}", e.name, e.params, d.join("; "));
            }
            s
        }
    }))
}

fn analyze_cmd(cli: &Cli) -> Result<Outcome, Error> {
    let form = single_form(cli)?;
    let phi = parse_nodes(cli.phi.as_deref().unwrap_or(""), &form)?;
    let r = analyze(&form, phi)?;
    let psi = cli
        .psi
        .as_deref()
        .map(|s| parse_nodes(s, &form))
        .transpose()?;
    let fib = match psi {
        Some(psi) => Some((
            psi,
            is_cr_fibration(&form, phi, psi)?,
            fiber_totally_complex(&form, phi, psi)?,
        )),
        None => None,
    };
    let failed = cli.strict && !r.verdict.discrepancies.is_empty();
    let doc = match cli.output {
        Output::Json => {
            let mut v = r.to_json(None);
            if let Some((psi, cr, tc)) = fib {
                v["fibration"] = json!({ "psi": psi, "is_cr": cr, "fiber_totally_complex": tc });
            }
            json_doc(&v)
        }
        Output::Csv => to_csv(&[(r, None)])?,
        _ => {
            let mut s = render_diagram(&form, phi);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s.push('\n');
            s.push_str(&r.to_text());
            if let Some((psi, cr, tc)) = fib {
                let _ = writeln!(
                    s,
                    "fibration to ψ={psi:?}: cr {cr}, fiber totally complex {tc}"
                );
            }
            s
        }
    };
    Ok(Outcome { doc, failed })
}

fn classify_cmd(cli: &Cli, reading: Reading) -> Result<Outcome, Error> {
    let rows = golden_tables();
    let seeds = Seeds::from_env()?;
    let mut all = Vec::new();
    for spec in instances(cli)? {
        let form = build_form(&spec)?;
        for (r, d) in compare_form(&form, &rows, &seeds, reading)? {
            all.push((r, Some(d.expected)));
        }
    }
    let failed = cli.strict && all.iter().any(|(r, _)| !r.verdict.discrepancies.is_empty());
    let doc = match cli.output {
        Output::Json => json_doc(&serde_json::Value::Array(
            all.iter().map(|(r, e)| r.to_json(*e)).collect(),
        )),
        Output::Csv => to_csv(&all)?,
        _ => {
            let mut s = String::new();
            let mut current = String::new();
            for (r, e) in &all {
                let name = r.spec.to_string();
                if name != current {
                    let _ = writeln!(s, "{name}");
                    current = name;
                }
                let _ = writeln!(
                    s,
                    "  {:<22} n={:<3} d={:<3} {:<16} {:<15} table {}",
                    format!("{:?}", r.phi),
                    r.summary.n,
                    r.summary.d,
                    r.trichotomy.to_string(),
                    r.bucket.to_string(),
                    e.map(|e| e.to_string()).unwrap_or_default()
                );
            }
            s
        }
    };
    Ok(Outcome { doc, failed })
}

fn tables_cmd(cli: &Cli, reading: Reading) -> Result<Outcome, Error> {
    let seeds = Seeds::from_env()?;
    let inst = instances(cli)?;
    let diffs = verify_tables_with(&inst, reading, &seeds)?;
    let doc = match cli.output {
        Output::Json => json_doc(
            &json!({ "reading": reading.to_string(), "instances": inst.len(), "diffs": diffs }),
        ),
        Output::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(["form", "phi", "expected", "computed"])
                .map_err(io)?;
            for d in &diffs {
                let labels: Vec<String> = d.phi.labels().iter().map(|l| l.to_string()).collect();
                w.write_record([
                    d.form.clone(),
                    labels.join(" "),
                    d.expected.to_string(),
                    d.computed.to_string(),
                ])
                .map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?)
                .expect("utf-8")
        }
        _ => {
            let mut s = format!(
                "reading: {reading}\ninstances: {}\ndiffs: {}\n",
                inst.len(),
                diffs.len()
            );
            for d in &diffs {
                let _ = writeln!(
                    s,
                    "  {} {:?}: table {}, computed {}",
                    d.form, d.phi, d.expected, d.computed
                );
            }
            s
        }
    };
    Ok(Outcome {
        doc,
        failed: !diffs.is_empty(),
    })
}

fn fibrations_cmd(cli: &Cli) -> Result<Outcome, Error> {
    let form = single_form(cli)?;
    let phi = match &cli.phi {
        Some(s) => parse_nodes(s, &form)?,
        None => NodeSet::all(form.rank()),
    };
    if let Some(psi) = cli.psi.as_deref() {
        let psi = parse_nodes(psi, &form)?;
        let cr = is_cr_fibration(&form, phi, psi)?;
        let diagram = is_cr_fibration_diagram(&form, phi, psi)?;
        let tc = fiber_totally_complex(&form, phi, psi)?;
        let v = json!({ "phi": phi, "psi": psi, "is_cr": cr, "is_cr_diagram": diagram, "fiber_totally_complex": tc });
        let doc = match cli.output {
            Output::Json => json_doc(&v),
            _ => format!(
                "{phi:?} -> {psi:?}: cr {cr} (diagram {diagram}), fiber totally complex {tc}\n"
            ),
        };
        return Ok(Outcome {
            doc,
            failed: cr != diagram,
        });
    }
    let lat = lattice(&form, phi)?;
    Ok(ok(match cli.output {
        Output::Dot => lat.to_dot(),
        Output::Json => json_doc(&serde_json::to_value(&lat).expect("lattice serializes")),
        Output::Csv => {
            let mut s = String::from("from,to,is_cr,fiber_totally_complex\n");
            for e in &lat.edges {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    e.from, e.to, e.is_cr, e.fiber_totally_complex
                );
            }
            s
        }
        Output::Text => {
            let mut s = format!("{} from {:?}\n", lat.form, phi);
            for e in &lat.edges {
                let _ = writeln!(
                    s,
                    "  {} -> {}  cr {}  fiber tc {}",
                    e.from, e.to, e.is_cr, e.fiber_totally_complex
                );
            }
            s
        }
    }))
}

fn validate_cmd(cli: &Cli) -> Result<Outcome, Error> {
    let report = run_checks(&instances(cli)?)?;
    let failed = !report.passed(cli.strict);
    let doc = match cli.output {
        Output::Json => json_doc(&serde_json::to_value(&report).expect("report serializes")),
        _ => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(s, "{c}");
                if !c.passed(cli.strict) {
                    for e in &c.examples {
                        let _ = writeln!(s, "    {e}");
                    }
                }
            }
            s
        }
    };
    Ok(Outcome { doc, failed })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            print!("{}", o.doc);
            ExitCode::from(u8::from(o.failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) => 2,
                _ => 3,
            })
        }
    }
}
