use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use chain_complex::{build_complex, ChainError, Variant};
use cli::output::{
    verification_to_json, verification_to_text, Format, HomologyReport,
};
use cli::suites::{chain_maps_suite, homotopy_suite};
use cli::table1::{compute_row, golden_rows, RowResult};
use cli::parallel_map;
use homology_engine::{
    homology, mod_p_homology_dim, verify_main_theorem, verify_splitting, VerificationReport,
};
use rack_core::{
    find_isomorphism, orbit_partition, parse_rack_spec, prop41_map, prop42_map, FiniteRack,
    RackError, RackMorphism,
};

/// CLI default; the axiom check is cubic but homology cost explodes earlier.
const MAX_RACK_SIZE: usize = 64;
const DEFAULT_MAX_BASIS: usize = 10_000;

#[derive(Parser)]
#[command(name = "rackh", version, about = "Finite rack and quandle homology calculator")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Integral homology and mod-p dimensions of one rack
    Homology {
        /// Rack spec: dihedral:n, alexander:n:<poly>, cyclic:n, trivial:n,
        /// fr4, conj:<group-file>, table:<rack-file>
        spec: String,
        /// Complex variants, comma separated: R, D, Q, L
        #[arg(short = 'W', long = "variants", value_delimiter = ',', default_value = "Q")]
        variants: Vec<String>,
        /// Compute H_1 .. H_n
        #[arg(short = 'n', long = "max-degree", default_value_t = 3)]
        max_degree: usize,
        /// Primes for mod-p dimensions, comma separated
        #[arg(short = 'p', long = "primes", value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Largest allowed basis in any degree
        #[arg(long = "max-basis", default_value_t = DEFAULT_MAX_BASIS)]
        max_basis: usize,
        /// Worker threads for independent computations
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Recompute the golden table of quandle homology groups
    Table1 {
        /// Restrict to the row with this label or spec
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long = "max-basis", default_value_t = DEFAULT_MAX_BASIS)]
        max_basis: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the theorem-verification suites on one rack
    Verify {
        spec: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(short = 'n', long = "max-degree", default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long = "max-basis", default_value_t = DEFAULT_MAX_BASIS)]
        max_basis: usize,
    },
    /// Search for an isomorphism between two racks, or verify an explicit map
    Iso {
        /// Two rack specs (omit when using --prop41/--prop42)
        specs: Vec<String>,
        /// Verify the map Z_{n^2} with t = kn+1 -> Z_n[t]/((t-1)^2)
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        prop41: Option<Vec<u64>>,
        /// Verify the dihedral involution R_{2n} -> Z_{2n}[t]/(t-(n-1)), 4 | n
        #[arg(long, value_name = "N")]
        prop42: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Orbit decomposition and homogeneity report
    Orbits {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    MainTheorem,
    Splitting,
    Homotopy,
    ChainMaps,
    All,
}

enum Failure {
    /// exit 2
    Usage(String),
    /// exit 3
    Cap(String),
    /// exit 1
    Verification,
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Cap(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
            Failure::Verification => ExitCode::from(1),
        }
    }
}

fn chain_failure(e: ChainError, rack_size: usize) -> Failure {
    match e {
        ChainError::DegreeTooLarge { degree, cap } => Failure::Cap(format!(
            "basis of {} tuples at degree {degree} exceeds --max-basis {cap}",
            (rack_size as u128).pow(degree as u32)
        )),
        other => Failure::Usage(other.to_string()),
    }
}

fn load_rack(spec: &str) -> Result<FiniteRack, Failure> {
    let rack = parse_rack_spec(spec).map_err(|e| Failure::Usage(e.to_string()))?;
    if rack.size() > MAX_RACK_SIZE {
        return Err(Failure::Usage(format!(
            "rack size {} exceeds the supported maximum {MAX_RACK_SIZE}",
            rack.size()
        )));
    }
    Ok(rack)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn emit(value: &Value) {
    println!("{value}");
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = match args.cmd {
        Cmd::Homology {
            spec,
            variants,
            max_degree,
            primes,
            format,
            max_basis,
            jobs,
        } => cmd_homology(&spec, &variants, max_degree, &primes, format, max_basis, jobs),
        Cmd::Table1 {
            only,
            format,
            max_basis,
            jobs,
        } => cmd_table1(only.as_deref(), format, max_basis, jobs),
        Cmd::Verify {
            spec,
            suite,
            max_degree,
            format,
            max_basis,
        } => cmd_verify(&spec, suite, max_degree, format, max_basis),
        Cmd::Iso {
            specs,
            prop41,
            prop42,
            format,
        } => cmd_iso(&specs, prop41.as_deref(), prop42, format),
        Cmd::Orbits { spec, format } => cmd_orbits(&spec, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}

fn cmd_homology(
    spec: &str,
    variant_names: &[String],
    max_degree: usize,
    primes: &[u64],
    format: Format,
    max_basis: usize,
    jobs: usize,
) -> Result<(), Failure> {
    if max_degree < 1 {
        return Err(Failure::Usage("max degree must be at least 1".into()));
    }
    for &p in primes {
        if !is_prime(p) {
            return Err(Failure::Usage(format!("{p} is not prime")));
        }
    }
    let mut variants = Vec::new();
    for name in variant_names {
        let v: Variant = name.parse().map_err(Failure::Usage)?;
        if !variants.contains(&v) {
            variants.push(v);
        }
    }
    let rack = load_rack(spec)?;
    let part = orbit_partition(&rack);

    type VariantResult = Result<(Vec<(char, usize, homology_engine::AbelianGroupInvariants)>,
                                 Vec<(char, usize, u64, usize)>), ChainError>;
    let per_variant: Vec<VariantResult> = parallel_map(jobs, &variants, |&variant| {
        let complex = build_complex(&rack, variant, max_degree + 1, Some(max_basis))?;
        let mut groups = Vec::new();
        let mut modp = Vec::new();
        for n in 1..=max_degree {
            let h = homology(&complex, n).unwrap();
            groups.push((variant.letter(), n, h));
            for &p in primes {
                let dim = mod_p_homology_dim(&complex, n, p).unwrap();
                modp.push((variant.letter(), n, p, dim));
            }
        }
        Ok((groups, modp))
    });

    let mut report = HomologyReport {
        rack: rack.label().to_string(),
        size: rack.size(),
        m: part.orbit_count(),
        homogeneous: part.homogeneous,
        groups: Vec::new(),
        modp: Vec::new(),
        verdicts: Vec::new(),
    };
    for r in per_variant {
        let (groups, modp) = r.map_err(|e| chain_failure(e, rack.size()))?;
        report.groups.extend(groups);
        report.modp.extend(modp);
    }
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => emit(&report.to_json()),
    }
    Ok(())
}

fn cmd_table1(
    only: Option<&str>,
    format: Format,
    max_basis: usize,
    jobs: usize,
) -> Result<(), Failure> {
    let mut rows = golden_rows();
    if let Some(only) = only {
        rows.retain(|r| r.label == only || r.spec == only);
        if rows.is_empty() {
            return Err(Failure::Usage(format!("no golden row matches `{only}`")));
        }
    }
    let results: Vec<Result<RowResult, ChainError>> =
        parallel_map(jobs, &rows, |row| compute_row(row, Some(max_basis)));
    let mut computed = Vec::new();
    for (row, result) in rows.iter().zip(results) {
        let size = parse_rack_spec(&row.spec).expect("fixture specs are valid").size();
        computed.push(result.map_err(|e| chain_failure(e, size))?);
    }
    let all_pass = computed.iter().all(RowResult::pass);
    match format {
        Format::Text => {
            for r in &computed {
                for (name, got, want) in [
                    ("H^Q_2", &r.got_h2, &r.row.h2),
                    ("H^Q_3", &r.got_h3, &r.row.h3),
                ] {
                    let verdict = if got == want { "PASS" } else { "FAIL" };
                    println!(
                        "{:<22} {name}  computed {:<28} expected {:<28} {verdict}",
                        r.row.label,
                        got.to_string(),
                        want.to_string()
                    );
                }
            }
            let cells = 2 * computed.len();
            let passed = computed
                .iter()
                .map(|r| usize::from(r.h2_pass()) + usize::from(r.h3_pass()))
                .sum::<usize>();
            println!("{passed}/{cells} cells PASS");
        }
        Format::Json => {
            let rows_json: Vec<Value> = computed
                .iter()
                .map(|r| {
                    json!({
                        "rack": r.row.label,
                        "spec": r.row.spec,
                        "H2": {
                            "computed": r.got_h2.to_string(),
                            "expected": r.row.h2.to_string(),
                            "pass": r.h2_pass(),
                        },
                        "H3": {
                            "computed": r.got_h3.to_string(),
                            "expected": r.row.h3.to_string(),
                            "pass": r.h3_pass(),
                        },
                    })
                })
                .collect();
            emit(&json!({ "rows": rows_json, "pass": all_pass }));
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_verify(
    spec: &str,
    suite: Suite,
    max_degree: usize,
    format: Format,
    max_basis: usize,
) -> Result<(), Failure> {
    if max_degree < 1 {
        return Err(Failure::Usage("max degree must be at least 1".into()));
    }
    let rack = load_rack(spec)?;
    let cap = Some(max_basis);
    let fail = |e| chain_failure(e, rack.size());

    let mut reports: Vec<(&str, VerificationReport)> = Vec::new();
    if matches!(suite, Suite::MainTheorem | Suite::All) {
        reports.push((
            "main-theorem",
            verify_main_theorem(&rack, max_degree, cap).map_err(fail)?,
        ));
    }
    if matches!(suite, Suite::Splitting | Suite::All) {
        if rack.is_quandle() {
            reports.push((
                "splitting",
                verify_splitting(&rack, max_degree.max(2), cap).map_err(fail)?,
            ));
        } else if suite == Suite::Splitting {
            return Err(Failure::Usage(format!(
                "the splitting suite needs a quandle, `{}` is not one",
                rack.label()
            )));
        }
    }
    if matches!(suite, Suite::Homotopy | Suite::All) {
        reports.push(("homotopy", homotopy_suite(&rack, max_degree)));
    }
    if matches!(suite, Suite::ChainMaps | Suite::All) {
        reports.push((
            "chain-maps",
            chain_maps_suite(&rack, max_degree, cap).map_err(fail)?,
        ));
    }

    let pass = reports.iter().all(|(_, r)| r.all_passed());
    match format {
        Format::Text => {
            for (name, report) in &reports {
                println!("suite {name}:");
                print!("{}", verification_to_text(report));
            }
            println!("{}", if pass { "PASS" } else { "FAIL" });
        }
        Format::Json => {
            let mut suites = Map::new();
            for (name, report) in &reports {
                suites.insert(name.to_string(), verification_to_json(report));
            }
            emit(&json!({
                "rack": rack.label(),
                "suites": suites,
                "pass": pass,
            }));
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn morphism_json(m: &RackMorphism, verified: bool) -> Value {
    json!({
        "source": m.source().label(),
        "target": m.target().label(),
        "map": m.map(),
        "verified": verified,
    })
}

fn print_map(m: &RackMorphism) {
    let pairs: Vec<String> = m
        .map()
        .iter()
        .enumerate()
        .map(|(a, &b)| format!("{a}->{b}"))
        .collect();
    println!(
        "f: {} -> {}  [{}]",
        m.source().label(),
        m.target().label(),
        pairs.join(", ")
    );
}

fn explicit_map(
    result: Result<RackMorphism, RackError>,
    format: Format,
) -> Result<(), Failure> {
    match result {
        Ok(m) => {
            match format {
                Format::Text => {
                    print_map(&m);
                    println!("VERIFIED");
                }
                Format::Json => emit(&morphism_json(&m, true)),
            }
            Ok(())
        }
        Err(RackError::NotAHomomorphism { .. }) => {
            eprintln!("map failed verification");
            Err(Failure::Verification)
        }
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn cmd_iso(
    specs: &[String],
    prop41: Option<&[u64]>,
    prop42: Option<u64>,
    format: Format,
) -> Result<(), Failure> {
    if let Some(args) = prop41 {
        if !specs.is_empty() {
            return Err(Failure::Usage("--prop41 takes no rack specs".into()));
        }
        return explicit_map(prop41_map(args[0], args[1]), format);
    }
    if let Some(n) = prop42 {
        if !specs.is_empty() {
            return Err(Failure::Usage("--prop42 takes no rack specs".into()));
        }
        return explicit_map(prop42_map(n), format);
    }
    let [a, b] = specs else {
        return Err(Failure::Usage(
            "iso needs exactly two rack specs (or --prop41/--prop42)".into(),
        ));
    };
    let x = load_rack(a)?;
    let y = load_rack(b)?;
    match find_isomorphism(&x, &y) {
        Some(m) => match format {
            Format::Text => {
                println!("ISOMORPHIC");
                print_map(&m);
            }
            Format::Json => emit(&json!({
                "source": x.label(),
                "target": y.label(),
                "isomorphic": true,
                "map": m.map(),
            })),
        },
        None => match format {
            Format::Text => println!("NOT-ISOMORPHIC"),
            Format::Json => emit(&json!({
                "source": x.label(),
                "target": y.label(),
                "isomorphic": false,
                "map": Value::Null,
            })),
        },
    }
    Ok(())
}

fn cmd_orbits(spec: &str, format: Format) -> Result<(), Failure> {
    let rack = load_rack(spec)?;
    let part = orbit_partition(&rack);
    match format {
        Format::Text => {
            println!("rack {} (size {})", rack.label(), rack.size());
            println!("orbits: {}", part.orbit_count());
            for (i, members) in part.orbit_members.iter().enumerate() {
                println!("orbit {i}: {members:?}");
            }
            println!("homogeneous: {}", part.homogeneous);
            if let Some(n_values) = &part.n_values {
                println!("N per orbit: {n_values:?}");
            }
        }
        Format::Json => {
            emit(&json!({
                "rack": rack.label(),
                "m": part.orbit_count(),
                "homogeneous": part.homogeneous,
                "orbits": part.orbit_members,
                "n_values": part.n_values,
            }));
        }
    }
    Ok(())
}
