//! `bloc` — graded characters of symmetric-group multiplicity spaces in
//! current-algebra tensor powers, with a brute-force verification mode.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource budget exceeded.

mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bloc_core::bchar::{
    check_duality, graded_char_b, graded_char_b_loc, graded_char_natural, ModuleSpec,
};
use bloc_core::lie::{dominant_representative, weyl_orbit, RootSystem, TypeLabel, Weight};
use bloc_core::oracle::{
    build_coinvariant_ring, build_m_loc, build_natural_module, build_sl2_module,
    coinvariant_isotypic_series, oracle_graded_char_b_loc, verify_commuting_actions,
    ExplicitModule, OracleBudget,
};
use bloc_core::partitions::{enumerate_partitions, fake_degree, parse_partition, Partition};
use bloc_core::symgroup::{kostka, CharacterTable, TableStore};
use bloc_core::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "bloc",
    version,
    about = "Exact graded characters of the S_m-multiplicity spaces B(gamma, V) and B_loc(gamma, V)",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print elapsed milliseconds to stderr
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SystemArgs {
    /// Cartan type (A-G)
    #[arg(long = "type", value_name = "LETTER")]
    type_label: char,
    /// Rank of the root system
    #[arg(long)]
    rank: usize,
}

impl SystemArgs {
    fn build(&self) -> Result<RootSystem, CliError> {
        let label = TypeLabel::from_char(self.type_label)
            .ok_or_else(|| CliError::usage(format!("unknown Cartan type {:?}", self.type_label)))?;
        Ok(RootSystem::new(label, self.rank)?)
    }
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Dominant highest weight in fundamental coordinates, e.g. "1,0";
    /// repeat for direct sums
    #[arg(long = "hw", value_name = "COORDS", required = true, allow_hyphen_values = true)]
    highest_weights: Vec<String>,
}

impl ModuleArgs {
    fn build(&self) -> Result<ModuleSpec, CliError> {
        let rs = self.system.build()?;
        let mut hws = Vec::new();
        for s in &self.highest_weights {
            hws.push((parse_weight(s, rs.rank())?, 1));
        }
        Ok(ModuleSpec::new(rs, hws)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Fake-degree polynomials f_sigma(u) of the coinvariant ring
    FakeDegree {
        /// Size of the symmetric group
        #[arg(long)]
        m: usize,
        /// Restrict to one partition, e.g. "2,1"
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Graded character of B_loc(gamma, V) or B(gamma, V)
    #[command(group = ArgGroup::new("variant").required(true).args(["local", "global"]))]
    Bchar {
        #[command(flatten)]
        module: ModuleArgs,
        /// Tensor power
        #[arg(long)]
        m: usize,
        /// Partition of m labelling the S_m-isotype, e.g. "1,1"
        #[arg(long)]
        gamma: String,
        /// The localized module B_loc(gamma, V)
        #[arg(long)]
        local: bool,
        /// The full module B(gamma, V); requires --max-degree
        #[arg(long)]
        global: bool,
        /// Truncation degree for --global
        #[arg(long)]
        max_degree: Option<i64>,
    },
    /// Verify ch B_loc(gamma, V) = u^C(m,2) · dual ch B_loc(gamma', V*)
    DualityCheck {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        gamma: String,
    },
    /// Verify the closed character formula against the brute-force model
    OracleVerify {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        m: usize,
    },
    /// Kronecker coefficient c^gamma_{tau,sigma}
    Kronecker {
        #[arg(long)]
        tau: String,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        gamma: String,
    },
    /// Kostka number K_{shape,content}
    Kostka {
        #[arg(long)]
        shape: String,
        /// Comma-separated non-negative content, e.g. "1,1,2"
        #[arg(long)]
        content: String,
    },
    /// Integer character table of S_m
    CharTable {
        #[arg(long)]
        m: usize,
    },
    /// Weyl orbit of a weight (via its dominant representative)
    Orbit {
        #[command(flatten)]
        system: SystemArgs,
        /// Weight in fundamental coordinates
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Type-A natural-representation character via the Kostka formula
    NaturalChar {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        gamma: String,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::LimitExceeded { .. } | CoreError::BudgetExceeded { .. } => 3,
            CoreError::Consistency(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_weight(s: &str, rank: usize) -> Result<Weight, CliError> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let coords =
        coords.map_err(|_| CliError::usage(format!("cannot parse weight coordinates {s:?}")))?;
    if coords.len() != rank {
        return Err(CliError::usage(format!(
            "weight {s:?} has {} coordinates, rank is {rank}",
            coords.len()
        )));
    }
    Ok(Weight::new(coords))
}

fn parse_content(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::usage(format!("cannot parse content {s:?}")))
}

fn parse_gamma(s: &str, m: usize) -> Result<Partition, CliError> {
    let gamma = parse_partition(s)?;
    if gamma.size() != m {
        return Err(CliError::usage(format!(
            "gamma {gamma} does not partition m = {m}"
        )));
    }
    Ok(gamma)
}

/// Payload plus verification verdict; `ok = false` exits 1.
struct Outcome {
    payload: Value,
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(payload: Value, text: String) -> Self {
        Self {
            payload,
            text,
            ok: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli.command);
    let elapsed_ms = start.elapsed().as_millis();
    if cli.timing {
        eprintln!("timing_ms={elapsed_ms}");
    }
    match result {
        Ok(outcome) => {
            let status = if outcome.ok { "ok" } else { "error" };
            match cli.format {
                Format::Json => {
                    let doc = json!({ "status": status, "payload": outcome.payload });
                    println!("{doc}");
                }
                Format::Text => println!("{}", outcome.text),
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => {
                    let doc = json!({ "status": "error", "payload": { "message": e.message } });
                    println!("{doc}");
                }
                Format::Text => eprintln!("error: {}", e.message),
            }
            ExitCode::from(e.code)
        }
    }
}

fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::FakeDegree { m, sigma } => cmd_fake_degree(*m, sigma.as_deref()),
        Command::Bchar {
            module,
            m,
            gamma,
            local,
            global,
            max_degree,
        } => cmd_bchar(module, *m, gamma, *local, *global, *max_degree),
        Command::DualityCheck { module, m, gamma } => cmd_duality_check(module, *m, gamma),
        Command::OracleVerify { module, m } => cmd_oracle_verify(module, *m),
        Command::Kronecker { tau, sigma, gamma } => cmd_kronecker(tau, sigma, gamma),
        Command::Kostka { shape, content } => cmd_kostka(shape, content),
        Command::CharTable { m } => cmd_char_table(*m),
        Command::Orbit { system, weight } => cmd_orbit(system, weight),
        Command::NaturalChar { rank, m, gamma } => cmd_natural_char(*rank, *m, gamma),
    }
}

fn cmd_fake_degree(m: usize, sigma: Option<&str>) -> Result<Outcome, CliError> {
    let shapes = match sigma {
        Some(s) => vec![parse_gamma(s, m)?],
        None => enumerate_partitions(m),
    };
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for shape in &shapes {
        let f = fake_degree(shape);
        lines.push(format!("f_{shape}(u) = {f}"));
        rows.push(json!({
            "sigma": output::partition_value(shape),
            "poly": output::poly_value(&f),
        }));
    }
    Ok(Outcome::ok(
        json!({ "m": m, "rows": rows }),
        lines.join("\n"),
    ))
}

fn cmd_bchar(
    module: &ModuleArgs,
    m: usize,
    gamma: &str,
    local: bool,
    global: bool,
    max_degree: Option<i64>,
) -> Result<Outcome, CliError> {
    let spec = module.build()?;
    let gamma = parse_gamma(gamma, m)?;
    let mut tables = TableStore::new();
    let (ch, header) = if local {
        let ch = graded_char_b_loc(&gamma, &spec, m, &mut tables)?;
        (ch, format!("ch_gr B_loc({gamma}, V) over {}:", spec.rs()))
    } else {
        debug_assert!(global);
        let d = max_degree.ok_or_else(|| CliError::usage("--global requires --max-degree"))?;
        if d < 0 {
            return Err(CliError::usage("--max-degree must be non-negative"));
        }
        let ch = graded_char_b(&gamma, &spec, m, d, &mut tables)?;
        (
            ch,
            format!("ch_gr B({gamma}, V) over {} (truncated at u^{d}):", spec.rs()),
        )
    };
    let text = format!("{header}\n{}", output::character_text(&ch));
    Ok(Outcome::ok(output::character_value(&ch, m, &gamma), text))
}

fn cmd_duality_check(module: &ModuleArgs, m: usize, gamma: &str) -> Result<Outcome, CliError> {
    let spec = module.build()?;
    let gamma = parse_gamma(gamma, m)?;
    let mut tables = TableStore::new();
    let report = check_duality(&gamma, &spec, m, &mut tables)?;
    let verdict = if report.holds { "holds" } else { "FAILS" };
    let mut text = format!(
        "duality for gamma = {gamma}, gamma' = {} over {} with shift u^{}: {verdict}\n\
         ch_gr B_loc({gamma}, V):\n{}\nu^{} * dual ch_gr B_loc({}, V*):\n{}",
        gamma.conjugate(),
        spec.rs(),
        report.shift,
        output::character_text(&report.lhs),
        report.shift,
        gamma.conjugate(),
        output::character_text(&report.rhs),
    );
    if !report.holds {
        text.push_str(&format!("\ndiffering weights: {}", report.differences.len()));
    }
    let ok = report.holds;
    Ok(Outcome {
        payload: output::duality_value(&report, m, &gamma),
        text,
        ok,
    })
}

fn oracle_budget_from_env() -> OracleBudget {
    let mut budget = OracleBudget::default();
    if let Some(v) = std::env::var("BLOC_ORACLE_MAX_M")
        .ok()
        .and_then(|s| s.parse().ok())
    {
        budget.max_m = v;
    }
    if let Some(v) = std::env::var("BLOC_ORACLE_MAX_DIM")
        .ok()
        .and_then(|s| s.parse().ok())
    {
        budget.max_dim = v;
    }
    budget
}

/// The explicit models the oracle can build: any simple sl2 module
/// V(k·omega_1), or the natural module V(omega_1) of sl_{n+1}.
fn explicit_module(module: &ModuleArgs) -> Result<ExplicitModule, CliError> {
    let spec = module.build()?;
    let rs = spec.rs();
    let hws = spec.highest_weights();
    if rs.label() != TypeLabel::A || hws.len() != 1 || hws[0].1 != 1 {
        return Err(CliError::usage(
            "oracle-verify supports a single highest weight of type A: \
             any k*omega_1 at rank 1, or omega_1 at rank >= 2",
        ));
    }
    let hw = &hws[0].0;
    if rs.rank() == 1 {
        Ok(build_sl2_module(hw.coords()[0] as usize)?)
    } else if hw == &Weight::fundamental(rs.rank(), 1) {
        Ok(build_natural_module(rs.rank())?)
    } else {
        Err(CliError::usage(
            "oracle-verify at rank >= 2 supports only the natural module (--hw 1,0,...)",
        ))
    }
}

fn cmd_oracle_verify(module: &ModuleArgs, m: usize) -> Result<Outcome, CliError> {
    let spec = module.build()?;
    let explicit = explicit_module(module)?;
    let budget = oracle_budget_from_env();
    let mloc = build_m_loc(&explicit, m, &budget)?;

    let report = verify_commuting_actions(&mloc)?;

    // coinvariant cross-check: isotypic series vs. fake degrees
    let table = CharacterTable::new(m)?;
    let ring = build_coinvariant_ring(m, &budget)?;
    let mut coinvariant_ok = true;
    for sigma in enumerate_partitions(m) {
        if coinvariant_isotypic_series(&ring, &sigma, &table)? != fake_degree(&sigma) {
            coinvariant_ok = false;
        }
    }

    // formula vs oracle for every gamma
    let mut tables = TableStore::new();
    let mut gamma_rows = Vec::new();
    let mut all_match = true;
    let mut lines = vec![format!(
        "oracle model for {} V with m = {m}: dim M_loc = {}, {} commutator checks passed",
        spec.rs(),
        mloc.total_dimension(),
        report.commutator_checks,
    )];
    lines.push(format!(
        "coinvariant isotypic series match fake degrees: {coinvariant_ok}"
    ));
    for gamma in enumerate_partitions(m) {
        let oracle = oracle_graded_char_b_loc(&mloc, &gamma, &table)?;
        let formula = graded_char_b_loc(&gamma, &spec, m, &mut tables)?;
        let matches = oracle == formula;
        all_match &= matches;
        lines.push(format!(
            "gamma = {gamma}: formula {} oracle",
            if matches { "matches" } else { "DIFFERS FROM" }
        ));
        gamma_rows.push(json!({
            "gamma": output::partition_value(&gamma),
            "match": matches,
        }));
    }
    let ok = coinvariant_ok && all_match;
    lines.push(format!("verdict: {}", if ok { "PASS" } else { "FAIL" }));
    let payload = json!({
        "type": spec.rs().label().as_char().to_string(),
        "rank": spec.rs().rank(),
        "m": m,
        "dim_m_loc": mloc.total_dimension(),
        "commutator_checks": report.commutator_checks,
        "weight_checks": report.weight_checks,
        "coinvariant_ok": coinvariant_ok,
        "gammas": gamma_rows,
        "all_match": all_match,
    });
    Ok(Outcome {
        payload,
        text: lines.join("\n"),
        ok,
    })
}

fn cmd_kronecker(tau: &str, sigma: &str, gamma: &str) -> Result<Outcome, CliError> {
    let tau = parse_partition(tau)?;
    let sigma = parse_partition(sigma)?;
    let gamma = parse_partition(gamma)?;
    let table = CharacterTable::new(tau.size())?;
    let value = table.kronecker(&tau, &sigma, &gamma)?;
    Ok(Outcome::ok(
        json!({
            "tau": output::partition_value(&tau),
            "sigma": output::partition_value(&sigma),
            "gamma": output::partition_value(&gamma),
            "value": value,
        }),
        format!("c^{gamma}_{{{tau},{sigma}}} = {value}"),
    ))
}

fn cmd_kostka(shape: &str, content: &str) -> Result<Outcome, CliError> {
    let shape = parse_partition(shape)?;
    let content = parse_content(content)?;
    let value = kostka(&shape, &content)?;
    Ok(Outcome::ok(
        json!({
            "shape": output::partition_value(&shape),
            "content": content,
            "value": value,
        }),
        format!("K_{{{shape},{content:?}}} = {value}"),
    ))
}

fn cmd_char_table(m: usize) -> Result<Outcome, CliError> {
    let table = CharacterTable::new(m)?;
    Ok(Outcome::ok(
        output::table_value(&table),
        output::table_text(&table),
    ))
}

fn cmd_orbit(system: &SystemArgs, weight: &str) -> Result<Outcome, CliError> {
    let rs = system.build()?;
    let mu = parse_weight(weight, rs.rank())?;
    let dom = dominant_representative(&rs, &mu);
    let orbit = weyl_orbit(&rs, &dom)?;
    let orbit_values: Vec<Value> = orbit.iter().map(output::weight_value).collect();
    let mut lines = vec![format!(
        "O({dom}) in {} (dominant representative of {mu}), {} weights:",
        rs,
        orbit.len()
    )];
    for w in &orbit {
        lines.push(format!("  {w}"));
    }
    Ok(Outcome::ok(
        json!({
            "type": rs.label().as_char().to_string(),
            "rank": rs.rank(),
            "weight": output::weight_value(&mu),
            "dominant": output::weight_value(&dom),
            "orbit": orbit_values,
        }),
        lines.join("\n"),
    ))
}

fn cmd_natural_char(rank: usize, m: usize, gamma: &str) -> Result<Outcome, CliError> {
    let gamma = parse_gamma(gamma, m)?;
    let mut tables = TableStore::new();
    let ch = graded_char_natural(&gamma, rank, m, &mut tables)?;
    let text = format!(
        "ch_gr B_loc({gamma}, V(omega_1)) over A{rank} by the Kostka formula:\n{}",
        output::character_text(&ch)
    );
    Ok(Outcome::ok(output::character_value(&ch, m, &gamma), text))
}
