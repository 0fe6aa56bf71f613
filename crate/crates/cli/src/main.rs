use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gassmann::equivalence::check_equivalence_with_timeout;
use gassmann::permgroup::psl27_on_7_points;
use gassmann::search::{ingest, run_search, verify_reference_results, SearchConfig};
use gassmann::splitting::{psl27_realizable_types, type_report};
use gassmann::{
    compare_ramification_sums, compositum_degrees, field_from_poly, gassmann_certificate_psl27, IntPolynomial,
    NumberField, RamificationMode,
};

#[derive(Parser)]
#[command(name = "gassmann", version, about = "Septic number fields, arithmetic equivalence and PSL(2,7)")]
struct Cli {
    /// Output format: a human table or one JSON document.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Factorization-type combinatorics.
    #[command(subcommand)]
    Types(TypesCmd),
    /// Single number fields.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Arithmetic equivalence of two fields.
    #[command(subcommand)]
    Equiv(EquivCmd),
    /// Search over field tables.
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Subcommand)]
enum GroupCmd {
    /// PSL(2,7) acting on 7 points.
    Psl27 {
        /// Print classes, the subgroup lattice and the S4 certificate.
        #[arg(long)]
        report: bool,
    },
}

#[derive(Subcommand)]
enum TypesCmd {
    /// Ramified factorization types grouped by number of primes.
    Enumerate {
        #[arg(long, default_value_t = 7)]
        degree: usize,
        /// Keep only types realizable in a septic PSL(2,7) field.
        #[arg(long, value_enum)]
        group: Option<GroupFilter>,
        /// With --group: require cyclic inertia.
        #[arg(long, requires = "group")]
        tame: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupFilter {
    Psl27,
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Discriminants, signature, index and integral basis.
    Info {
        #[arg(long)]
        poly: String,
    },
    /// Decomposition of a rational prime.
    Split {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        prime: u64,
    },
    /// Degrees of the composita of two fields.
    Compositum {
        #[arg(long)]
        poly_a: String,
        #[arg(long)]
        poly_b: String,
    },
}

#[derive(Subcommand)]
enum EquivCmd {
    /// Equivalence certificate.
    Check {
        #[arg(long)]
        poly_a: String,
        #[arg(long)]
        poly_b: String,
        /// Prime bound for the a_l comparison.
        #[arg(long, default_value_t = 1000)]
        bound: u64,
        #[arg(long, default_value_t = 120)]
        timeout: u64,
    },
    /// Ramification sums at the ramified primes of an equivalent pair.
    Ramsum {
        #[arg(long)]
        poly_a: String,
        #[arg(long)]
        poly_b: String,
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Class intersection table of the two S4 classes of PSL(2,7).
    GassmannPsl27,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Run the search over a field table.
    Run {
        #[arg(long)]
        input: PathBuf,
        /// Prime bound for the a_l comparison and the Galois sieve.
        #[arg(long, default_value_t = 1000)]
        bound: u64,
        /// Allowed exponents a in disc = 2^(2a) p^(2b).
        #[arg(long, value_delimiter = ',', default_values_t = [3, 4])]
        a: Vec<u32>,
        /// Allowed exponents b.
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
        b: Vec<u32>,
        /// Apply the b window also for p = 3 and 7.
        #[arg(long)]
        strict_b: bool,
        /// Skip fields with |disc| above this value.
        #[arg(long)]
        max_disc: Option<String>,
        #[arg(long, default_value_t = 120)]
        timeout: u64,
    },
    /// Check the reference pairs and the facts behind them.
    VerifyPaper,
}

enum Failure {
    Verify,
    Io(String),
    Input(String),
}

type Outcome = Result<(String, Value), Failure>;

fn parse_poly(s: &str) -> Result<IntPolynomial, Failure> {
    IntPolynomial::parse_list(s.trim()).map_err(|e| Failure::Input(format!("{s}: {e}")))
}

fn field(s: &str) -> Result<NumberField, Failure> {
    field_from_poly(&parse_poly(s)?).map_err(|e| Failure::Input(format!("{s}: {e}")))
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serialisable report")
}

fn group_psl27(report: bool) -> Outcome {
    let g = psl27_on_7_points();
    let mut text = format!("PSL(2,7) on 7 points: order {}, degree {}\n", g.order(), g.degree());
    let gens: Vec<Value> = g.generators().iter().map(to_value).collect();
    let mut out = json!({ "order": g.order(), "degree": g.degree(), "generators": gens });
    for p in g.generators() {
        text += &format!("  generator {p}  {}\n", to_value(p));
    }
    if !report {
        return Ok((text, out));
    }
    text += "conjugacy classes\n  size  cycle type  representative\n";
    let mut classes = Vec::new();
    for c in g.conjugacy_classes() {
        text += &format!("  {:>4}  {:<10}  {}\n", c.size, c.cycle_type.to_string(), c.representative);
        classes.push(json!({
            "size": c.size,
            "cycle_type": c.cycle_type,
            "representative": c.representative,
        }));
    }
    text += "subgroup classes\n  order  conjugates  normalizer  generators\n";
    let mut lattice = Vec::new();
    for c in g.subgroup_classes() {
        let gens: Vec<String> = c.representative.generators().iter().map(|p| p.to_string()).collect();
        text += &format!(
            "  {:>5}  {:>10}  {:>10}  {}\n",
            c.order,
            c.conjugate_count,
            c.normalizer_order(g.order()),
            gens.join(" ")
        );
        lattice.push(json!({
            "order": c.order,
            "conjugate_count": c.conjugate_count,
            "normalizer_order": c.normalizer_order(g.order()),
            "generators": c.representative.generators(),
        }));
    }
    let (t, cert) = gassmann_psl27();
    text += &t;
    out["classes"] = Value::Array(classes);
    out["subgroup_classes"] = Value::Array(lattice);
    out["gassmann_s4"] = cert;
    Ok((text, out))
}

fn gassmann_psl27() -> (String, Value) {
    let c = gassmann_certificate_psl27();
    let mut text = format!("S4 classes of orders {} and {}\n  class  size  cycle type  |C∩H|  |C∩H1|\n", c.order_h, c.order_h1);
    for r in &c.rows {
        text += &format!(
            "  {:>5}  {:>4}  {:<10}  {:>5}  {:>6}\n",
            r.class,
            r.class_size,
            r.cycle_type.to_string(),
            r.in_h,
            r.in_h1
        );
    }
    text += &format!("quasi-conjugate: {}\nconjugate: {}\n", c.quasi_conjugate, c.conjugate);
    (text, to_value(&c))
}

fn types_enumerate(degree: usize, group: Option<GroupFilter>, tame: bool) -> Outcome {
    let filter = match group {
        Some(GroupFilter::Psl27) => {
            if degree != 7 {
                return Err(Failure::Input("--group psl27 needs --degree 7".into()));
            }
            let mode = if tame { RamificationMode::Tame } else { RamificationMode::Any };
            Some(psl27_realizable_types(mode).map_err(input)?)
        }
        None => None,
    };
    let r = type_report(degree, filter.as_ref()).map_err(input)?;
    let mut text = String::new();
    if group.is_some() {
        text += &format!("filter: PSL(2,7), {} inertia\n", if tame { "tame" } else { "tame or wild" });
    }
    text += &r.to_string();
    Ok((text, to_value(&r)))
}

fn field_info(poly: &str) -> Outcome {
    let k = field(poly)?;
    let (basis, den) = k.integral_basis_parts();
    let ramified: Vec<String> = k.ramified_primes().iter().map(|p| p.to_string()).collect();
    let mut text = format!(
        "polynomial {}\ndegree {}\npolynomial discriminant {}\nfield discriminant {}\nindex {}\nsignature {:?}\nramified primes {{{}}}\nintegral basis (numerators over {den}, power basis coordinates)\n",
        k.defining_poly().to_list_string(),
        k.degree(),
        k.poly_disc(),
        k.field_disc(),
        k.index(),
        k.signature(),
        ramified.join(", ")
    );
    let rows: Vec<Vec<String>> = basis.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
    for r in &rows {
        text += &format!("  [{}]\n", r.join(","));
    }
    let out = json!({
        "polynomial": k.defining_poly().to_list_string(),
        "degree": k.degree(),
        "poly_disc": k.poly_disc().to_string(),
        "field_disc": k.field_disc().to_string(),
        "index": k.index().to_string(),
        "signature": k.signature(),
        "ramified_primes": ramified,
        "basis_denominator": den.to_string(),
        "integral_basis": rows,
    });
    Ok((text, out))
}

fn field_split(poly: &str, prime: u64) -> Outcome {
    let k = field(poly)?;
    let d = k.prime_decomposition(prime).map_err(input)?;
    let t = &d.factorization_type;
    let text = format!(
        "l = {prime}: {t}\n  g = {}, residue degrees {}, ramification sum {}, {}\n",
        t.g(),
        t.arithmetic_type(),
        t.ramification_sum(),
        if d.wild { "wild" } else if t.is_ramified() { "tame" } else { "unramified" }
    );
    Ok((text, to_value(&d)))
}

fn field_compositum(a: &str, b: &str) -> Outcome {
    let (k, k1) = (field(a)?, field(b)?);
    let c = compositum_degrees(&k, &k1).map_err(input)?;
    let degs: Vec<String> = c.degrees.iter().map(usize::to_string).collect();
    let text = format!("composita degrees [{}] (shift k = {})\n", degs.join(", "), c.shift);
    Ok((text, to_value(&c)))
}

fn certificate_text(c: &gassmann::EquivalenceCertificate) -> String {
    let mut t = format!("verdict: {}\n", c.verdict);
    if let Some(m) = c.method {
        t += &format!("method: {m}\n");
    }
    if let Some(d) = &c.compositum_degrees {
        t += &format!("compositum degrees: {d:?} (shift {})\n", c.compositum_shift.unwrap_or(0));
    }
    t += &format!("a_l compared at {} unramified primes <= {}\n", c.a_ell_primes_checked, c.a_ell_checked_bound);
    if let Some(p) = c.first_mismatch_prime {
        t += &format!("first a_l mismatch at l = {p}\n");
    }
    if let Some(m) = &c.invariant_mismatch {
        t += &format!("invariant mismatch: {m}\n");
    }
    if c.isomorphic {
        t += "the fields are isomorphic\n";
    }
    for n in &c.notes {
        t += &format!("note: {n}\n");
    }
    t
}

fn equiv_check(a: &str, b: &str, bound: u64, timeout: u64) -> Outcome {
    let (k, k1) = (field(a)?, field(b)?);
    let c = check_equivalence_with_timeout(&k, &k1, bound, Duration::from_secs(timeout)).map_err(input)?;
    Ok((certificate_text(&c), to_value(&c)))
}

fn equiv_ramsum(a: &str, b: &str, bound: u64) -> Outcome {
    let (k, k1) = (field(a)?, field(b)?);
    let c = gassmann::check_equivalence(&k, &k1, bound).map_err(input)?;
    let rows = compare_ramification_sums(&k, &k1, &c).map_err(input)?;
    let mut text = certificate_text(&c);
    text += "  l        type (a)                sum  type (b)                sum  v_l(disc)\n";
    for r in &rows {
        text += &format!(
            "  {:<7}  {:<22}  {:>3}  {:<22}  {:>3}  {:>3}{}{}\n",
            r.prime,
            r.type_k.to_string(),
            r.sum_k,
            r.type_k1.to_string(),
            r.sum_k1,
            r.disc_valuation,
            if r.wild { " wild" } else { "" },
            if r.differs { "  differs" } else { "" }
        );
    }
    Ok((text, json!({ "certificate": c, "comparisons": rows })))
}

fn search_run(cmd: SearchCmd) -> Outcome {
    let SearchCmd::Run { input: path, bound, a, b, strict_b, max_disc, timeout } = cmd else {
        unreachable!()
    };
    let ingested = ingest(&path).map_err(|e| Failure::Io(e.to_string()))?;
    let config = SearchConfig {
        a_values: a,
        b_values: b,
        exempt_wild_b: !strict_b,
        a_ell_bound: bound,
        galois_bound: bound,
        timeout_secs: timeout,
        max_abs_disc: max_disc,
        ..SearchConfig::default()
    };
    let report = run_search(&ingested.records, &config);
    let mut text = format!(
        "ingested {} records ({} duplicates, {} rejected lines)\n",
        ingested.records.len(),
        ingested.duplicates,
        ingested.warnings.len()
    );
    for w in &ingested.warnings {
        text += &format!("  line {}: {}\n", w.line, w.reason);
    }
    text += &report.to_string();
    Ok((text, json!({ "ingest": ingested, "report": report })))
}

fn verify_paper() -> Result<(String, Value, bool), Failure> {
    let r = verify_reference_results();
    Ok((r.to_string(), to_value(&r), r.all_passed()))
}

fn run(cli: Cli) -> Result<(String, Value), Failure> {
    match cli.command {
        Command::Group(GroupCmd::Psl27 { report }) => group_psl27(report),
        Command::Types(TypesCmd::Enumerate { degree, group, tame }) => types_enumerate(degree, group, tame),
        Command::Field(FieldCmd::Info { poly }) => field_info(&poly),
        Command::Field(FieldCmd::Split { poly, prime }) => field_split(&poly, prime),
        Command::Field(FieldCmd::Compositum { poly_a, poly_b }) => field_compositum(&poly_a, &poly_b),
        Command::Equiv(EquivCmd::Check { poly_a, poly_b, bound, timeout }) => {
            equiv_check(&poly_a, &poly_b, bound, timeout)
        }
        Command::Equiv(EquivCmd::Ramsum { poly_a, poly_b, bound }) => equiv_ramsum(&poly_a, &poly_b, bound),
        Command::Equiv(EquivCmd::GassmannPsl27) => {
            let (t, v) = gassmann_psl27();
            Ok((t, v))
        }
        Command::Search(cmd @ SearchCmd::Run { .. }) => search_run(cmd),
        Command::Search(SearchCmd::VerifyPaper) => unreachable!("handled in main"),
    }
}

fn emit(format: Format, text: &str, value: &Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Machine => println!("{}", serde_json::to_string_pretty(value).expect("JSON")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = if matches!(cli.command, Command::Search(SearchCmd::VerifyPaper)) {
        verify_paper().and_then(|(t, v, ok)| {
            emit(format, &t, &v);
            if ok {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        })
    } else {
        run(cli).map(|(t, v)| emit(format, &t, &v))
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
