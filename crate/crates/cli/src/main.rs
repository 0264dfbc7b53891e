//! `scrim` — count, enumerate, classify, and cross-validate SCRIM
//! (self-conjugate-reciprocal irreducible monic) polynomials over F_{q^2}.
//!
//! Exit codes: 0 success (for `check`: input is SCRIM), 1 valid-but-not-SCRIM
//! (`check` only), 2 invalid input, 3 cap exceeded, 4 oracle mismatch.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use scrim_core::cosets;
use scrim_core::field::{BaseField, FieldSpec};
use scrim_core::numutil;
use scrim_core::poly::{self, Polynomial};
use scrim_core::scrim::{self, Config, ScrimError, ScrimRecord};

const SCHEMA_VERSION: &str = "1";

// Two entries of the published reference tables are typos; we always print
// the mathematically consistent value and attach a warning.
const COUNT_CORRECTIONS: &[(u64, u32, &str)] = &[(
    5,
    7,
    "published reference table prints 1160 for q = 5, n = 7; the consistent value is 11160",
)];
const ORDER_CORRECTIONS: &[(u64, u32, &str)] = &[(
    2,
    15,
    "published reference table prints order 10928 for q = 2, n = 15; the consistent order is 10923",
)];

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "scrim", version, about = "SCRIM polynomials over F_{q^2}")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Override the enumeration/oracle work caps
    #[arg(long, global = true)]
    work_cap: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Number of SCRIM polynomials of degree n over F_{q^2}
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        /// Also break the count down by polynomial order
        #[arg(long)]
        per_order: bool,
    },
    /// Cross-product count table over lists of q and n
    Table {
        #[arg(long = "q-list", value_delimiter = ',', default_value = "2,3,5")]
        q_list: Vec<u64>,
        #[arg(
            long = "n-list",
            value_delimiter = ',',
            default_value = "1,3,5,7,9,11,13,15"
        )]
        n_list: Vec<u32>,
    },
    /// List every SCRIM polynomial of degree n over F_{q^2}
    Enumerate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        /// Restrict to polynomials of this order
        #[arg(long)]
        order: Option<u64>,
        /// Stop after this many records (allows otherwise over-cap runs)
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Classify one polynomial (text grammar, e.g. "x^3 + g^3*x^2 + g^5*x + 2")
    Check {
        #[arg(long)]
        q: u64,
        poly: String,
    },
    /// Order-indexed SCRIM counts for odd degree n >= 3
    Orders {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
    },
    /// Cross-validate the construction against a brute-force scan
    Oracle {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
    },
    /// Cyclotomic coset of i modulo m and its minimal polynomial over F_{q^2}
    Minpoly {
        #[arg(long)]
        q: u64,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        i: u64,
    },
}

enum Failure {
    Invalid(String),
    Cap(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }
    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Cap(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<ScrimError> for Failure {
    fn from(e: ScrimError) -> Failure {
        match e {
            ScrimError::CountCapExceeded { .. } | ScrimError::WorkCapExceeded { .. } => {
                Failure::Cap(e.to_string())
            }
            other => Failure::Invalid(other.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        // ignore the error if a pool already exists (repeated in-process use)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let mut cfg = Config::default();
    if let Some(cap) = cli.work_cap {
        cfg.work_cap = cap;
        cfg.count_cap = cap;
    }
    let code = match run(&cli, &cfg) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli, cfg: &Config) -> Result<i32, Failure> {
    match &cli.cmd {
        Cmd::Count { q, n, per_order } => cmd_count(*q, *n, *per_order, cli.format),
        Cmd::Table { q_list, n_list } => cmd_table(q_list, n_list, cli.format),
        Cmd::Enumerate { q, n, order, limit } => {
            cmd_enumerate(*q, *n, *order, *limit, cfg, cli.format)
        }
        Cmd::Check { q, poly } => cmd_check(*q, poly, cli.format),
        Cmd::Orders { q, n } => cmd_orders(*q, *n, cli.format),
        Cmd::Oracle { q, n } => cmd_oracle(*q, *n, cfg, cli.format),
        Cmd::Minpoly { q, modulus, i } => cmd_minpoly(*q, *modulus, *i, cli.format),
    }
}

/// Emit the common envelope. Warnings go into the JSON object, or to stderr
/// for text/csv so that stdout stays machine-golden.
fn emit(command: &str, q: u64, n: Option<u32>, payload: Value, warnings: &[String], format: Format) {
    match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
            obj.insert("command".into(), json!(command));
            obj.insert("q".into(), json!(q));
            if let Some(n) = n {
                obj.insert("n".into(), json!(n));
            }
            if let Value::Object(map) = payload {
                for (k, v) in map {
                    obj.insert(k, v);
                }
            }
            obj.insert("warnings".into(), json!(warnings));
            println!("{}", Value::Object(obj));
        }
        _ => {
            for w in warnings {
                eprintln!("warning: {w}");
            }
        }
    }
}

fn validate_q(q: u64) -> Result<(), Failure> {
    scrim_core::field::prime_power(q)
        .map(|_| ())
        .map_err(|e| Failure::Invalid(e.to_string()))
}

fn count_warnings(q: u64, n: u32, even: bool) -> Vec<String> {
    let mut w = Vec::new();
    if even {
        w.push(format!(
            "degree {n} is even: SCRIM polynomials of even degree do not exist; count is 0"
        ));
    }
    for &(cq, cn, msg) in COUNT_CORRECTIONS {
        if cq == q && cn == n {
            w.push(msg.to_string());
        }
    }
    w
}

fn cmd_count(q: u64, n: u32, per_order: bool, format: Format) -> Result<i32, Failure> {
    validate_q(q)?;
    if n == 0 {
        return Err(Failure::Invalid("n must be at least 1".into()));
    }
    let result = scrim::count_scrim(q, n)?;
    let warnings = count_warnings(q, n, result.even_degree);
    let by_order = if per_order && n >= 3 && !result.even_degree {
        Some(scrim::count_scrim_by_order(q, n)?)
    } else {
        None
    };

    let mut payload = serde_json::Map::new();
    payload.insert("count".into(), json!(result.count.to_string()));
    if let Some(rows) = &by_order {
        let map: serde_json::Map<String, Value> = rows
            .iter()
            .map(|(d, c)| (d.to_string(), json!(c.to_string())))
            .collect();
        payload.insert("per_order".into(), Value::Object(map));
    }
    emit("count", q, Some(n), Value::Object(payload), &warnings, format);

    match format {
        Format::Text => {
            println!("total {}", result.count);
            if let Some(rows) = &by_order {
                for (d, c) in rows {
                    println!("{d} {c}");
                }
            }
        }
        Format::Csv => {
            println!("order,count");
            if let Some(rows) = &by_order {
                for (d, c) in rows {
                    println!("{d},{c}");
                }
            }
            println!("total,{}", result.count);
        }
        Format::Json => {}
    }
    Ok(0)
}

fn cmd_table(q_list: &[u64], n_list: &[u32], format: Format) -> Result<i32, Failure> {
    if q_list.is_empty() || n_list.is_empty() {
        return Err(Failure::Invalid("q-list and n-list must be nonempty".into()));
    }
    for &q in q_list {
        validate_q(q)?;
    }
    if n_list.contains(&0) {
        return Err(Failure::Invalid("n must be at least 1".into()));
    }
    let mut rows: Vec<(u64, u32, BigUint)> = Vec::new();
    let mut warnings = Vec::new();
    for &q in q_list {
        for &n in n_list {
            let r = scrim::count_scrim(q, n)?;
            warnings.extend(count_warnings(q, n, r.even_degree));
            rows.push((q, n, r.count));
        }
    }

    let payload = json!({
        "table": rows
            .iter()
            .map(|(q, n, c)| json!({"q": q, "n": n, "count": c.to_string()}))
            .collect::<Vec<_>>(),
    });
    emit("table", q_list[0], None, payload, &warnings, format);

    match format {
        Format::Text => {
            println!("q n count");
            for (q, n, c) in &rows {
                println!("{q} {n} {c}");
            }
        }
        Format::Csv => {
            println!("q,n,count");
            for (q, n, c) in &rows {
                println!("{q},{n},{c}");
            }
        }
        Format::Json => {}
    }
    Ok(0)
}

fn coeff_vectors(f: &Polynomial, fld: &BaseField) -> Vec<Vec<u8>> {
    f.coeffs().iter().map(|&c| fld.coords(c)).collect()
}

fn record_rows(records: &[ScrimRecord], fld: &BaseField) -> Vec<Value> {
    records
        .iter()
        .map(|r| {
            json!({
                "order": r.order.to_string(),
                "root_exponent": r.root_exponent.to_string(),
                "coeffs": coeff_vectors(&r.poly, fld),
            })
        })
        .collect()
}

fn print_records(records: &[ScrimRecord], fld: &BaseField, format: Format) {
    match format {
        Format::Text => {
            // bare polynomial lines: each re-parses under `check`
            for r in records {
                println!("{}", poly::format_poly(&r.poly, fld));
            }
        }
        Format::Csv => {
            println!("order,root_exponent,poly");
            for r in records {
                println!(
                    "{},{},\"{}\"",
                    r.order,
                    r.root_exponent,
                    poly::format_poly(&r.poly, fld)
                );
            }
        }
        Format::Json => {}
    }
}

fn cmd_enumerate(
    q: u64,
    n: u32,
    order: Option<u64>,
    limit: Option<u64>,
    cfg: &Config,
    format: Format,
) -> Result<i32, Failure> {
    validate_q(q)?;
    if n == 0 || n.is_multiple_of(2) {
        return Err(Failure::Invalid(format!(
            "n must be odd (got {n}): SCRIM polynomials of even degree do not exist"
        )));
    }
    let order_big = order.map(BigUint::from);
    let enumeration = if n == 1 {
        if order.is_some() {
            return Err(Failure::Invalid(
                "--order is not supported for degree 1".into(),
            ));
        }
        scrim::enumerate_degree1(q)?
    } else if let Some(limit) = limit {
        enumerate_limited(q, n, order_big.as_ref(), limit, cfg)?
    } else {
        scrim::enumerate_scrim(q, n, order_big.as_ref(), cfg)?
    };
    let mut records = enumeration.records;
    if let Some(limit) = limit {
        records.truncate(limit as usize);
    }
    let fld = enumeration.spec.base();

    let payload = json!({ "records": record_rows(&records, fld) });
    emit("enumerate", q, Some(n), payload, &[], format);
    print_records(&records, fld, format);
    Ok(0)
}

/// With an explicit limit, walk the orders of D_n in ascending order and stop
/// as soon as enough records are collected, so over-cap degrees still yield a
/// prefix of the canonical listing.
fn enumerate_limited(
    q: u64,
    n: u32,
    order: Option<&BigUint>,
    limit: u64,
    cfg: &Config,
) -> Result<scrim_core::Enumeration, ScrimError> {
    let dn = scrim::compute_dn(q, n)?;
    let selected: Vec<BigUint> = match order {
        Some(d) => {
            if !dn.members.contains(d) {
                return Err(ScrimError::NotInDn(d.clone()));
            }
            vec![d.clone()]
        }
        None => dn.members,
    };
    let mut spec = None;
    let mut records = Vec::new();
    for d in &selected {
        if records.len() as u64 >= limit {
            break;
        }
        let one = scrim::enumerate_scrim(q, n, Some(d), cfg)?;
        records.extend(one.records);
        spec = Some(one.spec);
    }
    records.truncate(limit as usize);
    Ok(scrim_core::Enumeration {
        spec: spec.expect("D_n is nonempty"),
        records,
    })
}

fn cmd_check(q: u64, input: &str, format: Format) -> Result<i32, Failure> {
    validate_q(q)?;
    let fld = BaseField::for_q(q).map_err(|e| Failure::Invalid(e.to_string()))?;
    let f = poly::parse_poly(input, &fld)
        .map_err(|e| Failure::Invalid(format!("parse error at byte {}: {}", e.position, e.message)))?;
    let report = scrim::classify(&f, &fld).map_err(|e| Failure::Invalid(e.to_string()))?;

    let payload = json!({
        "report": {
            "poly": poly::format_poly(&f, &fld),
            "degree": report.degree,
            "irreducible": report.is_irreducible,
            "self_conjugate_reciprocal": report.is_self_conjugate_reciprocal,
            "order": report.order.as_ref().map(|o| o.to_string()),
            "order_in_dn": report.order_in_dn,
            "scrim": report.is_scrim,
            "consistent": report.consistent,
        }
    });
    emit("check", q, None, payload, &[], format);

    let order_str = report
        .order
        .as_ref()
        .map_or_else(|| "-".into(), |o| o.to_string());
    let dn_str = report
        .order_in_dn
        .map_or_else(|| "-".into(), |b| b.to_string());
    match format {
        Format::Text => {
            println!("poly: {}", poly::format_poly(&f, &fld));
            println!("degree: {}", report.degree);
            println!("irreducible: {}", report.is_irreducible);
            println!(
                "self_conjugate_reciprocal: {}",
                report.is_self_conjugate_reciprocal
            );
            println!("order: {order_str}");
            println!("order_in_dn: {dn_str}");
            println!("scrim: {}", report.is_scrim);
            println!("consistent: {}", report.consistent);
        }
        Format::Csv => {
            println!("poly,degree,irreducible,self_conjugate_reciprocal,order,order_in_dn,scrim,consistent");
            println!(
                "\"{}\",{},{},{},{},{},{},{}",
                poly::format_poly(&f, &fld),
                report.degree,
                report.is_irreducible,
                report.is_self_conjugate_reciprocal,
                order_str,
                dn_str,
                report.is_scrim,
                report.consistent
            );
        }
        Format::Json => {}
    }
    Ok(if report.is_scrim { 0 } else { 1 })
}

fn cmd_orders(q: u64, n: u32, format: Format) -> Result<i32, Failure> {
    validate_q(q)?;
    let rows = scrim::count_scrim_by_order(q, n)?;
    let total: BigUint = rows.iter().map(|(_, c)| c.clone()).sum();
    let mut warnings = Vec::new();
    for &(cq, cn, msg) in ORDER_CORRECTIONS {
        if cq == q && cn == n {
            warnings.push(msg.to_string());
        }
    }

    let map: serde_json::Map<String, Value> = rows
        .iter()
        .map(|(d, c)| (d.to_string(), json!(c.to_string())))
        .collect();
    let payload = json!({ "per_order": Value::Object(map), "total": total.to_string() });
    emit("orders", q, Some(n), payload, &warnings, format);

    match format {
        Format::Text => {
            for (d, c) in &rows {
                println!("{d} {c}");
            }
            println!("total {total}");
        }
        Format::Csv => {
            println!("order,count");
            for (d, c) in &rows {
                println!("{d},{c}");
            }
            println!("total,{total}");
        }
        Format::Json => {}
    }
    Ok(0)
}

fn cmd_oracle(q: u64, n: u32, cfg: &Config, format: Format) -> Result<i32, Failure> {
    validate_q(q)?;
    if n == 0 {
        return Err(Failure::Invalid("n must be at least 1".into()));
    }
    let (fld, oracle) = scrim::oracle_enumerate(q, n, cfg)?;
    let constructed: Vec<Polynomial> = if n.is_multiple_of(2) {
        Vec::new() // no construction exists for even degree; oracle must agree
    } else if n == 1 {
        scrim::enumerate_degree1(q)?
            .records
            .into_iter()
            .map(|r| r.poly)
            .collect()
    } else {
        scrim::enumerate_scrim(q, n, None, cfg)?
            .records
            .into_iter()
            .map(|r| r.poly)
            .collect()
    };
    let mut sorted = constructed;
    sorted.sort_by(|a, b| a.cmp_canonical(b));

    let only_constructed: Vec<&Polynomial> =
        sorted.iter().filter(|f| !oracle.contains(f)).collect();
    let only_oracle: Vec<&Polynomial> = oracle.iter().filter(|f| !sorted.contains(f)).collect();
    let matched = only_constructed.is_empty() && only_oracle.is_empty();

    let payload = json!({
        "match": matched,
        "count": oracle.len(),
        "only_constructed": only_constructed
            .iter()
            .map(|f| poly::format_poly(f, &fld))
            .collect::<Vec<_>>(),
        "only_oracle": only_oracle
            .iter()
            .map(|f| poly::format_poly(f, &fld))
            .collect::<Vec<_>>(),
    });
    emit("oracle", q, Some(n), payload, &[], format);

    match format {
        Format::Text => {
            if matched {
                println!("match: {} polynomials", oracle.len());
            } else {
                println!("mismatch");
                for f in &only_constructed {
                    println!("only_constructed: {}", poly::format_poly(f, &fld));
                }
                for f in &only_oracle {
                    println!("only_oracle: {}", poly::format_poly(f, &fld));
                }
            }
        }
        Format::Csv => {
            println!("match,count");
            println!("{matched},{}", oracle.len());
        }
        Format::Json => {}
    }
    if matched {
        Ok(0)
    } else {
        Err(Failure::Mismatch(
            "constructed enumeration differs from brute-force oracle".into(),
        ))
    }
}

fn cmd_minpoly(q: u64, modulus: u64, i: u64, format: Format) -> Result<i32, Failure> {
    validate_q(q)?;
    if modulus == 0 || num_bigint::BigUint::from(modulus) <= BigUint::from(1u8) {
        return Err(Failure::Invalid("modulus must be at least 2".into()));
    }
    let coset = cosets::coset(i, modulus, q).map_err(|e| Failure::Invalid(e.to_string()))?;
    let scrim_coset =
        cosets::is_scrim_coset(i, modulus, q).map_err(|e| Failure::Invalid(e.to_string()))?;

    // smallest tower F_{q^{2t}} containing the modulus-th roots of unity
    let q2 = BigUint::from(q) * BigUint::from(q);
    let t = numutil::multiplicative_order(&q2, &BigUint::from(modulus))
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let t = u32::try_from(&t)
        .map_err(|_| Failure::Invalid("required extension degree is out of range".into()))?;
    let spec =
        FieldSpec::for_q(q, t as usize).map_err(|e| Failure::Invalid(e.to_string()))?;
    let mp = cosets::minimal_polynomial(i, modulus, &spec)
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let fld = spec.base();

    let payload = json!({
        "modulus": modulus,
        "i": i,
        "coset": coset.members,
        "scrim_coset": scrim_coset,
        "minpoly": poly::format_poly(&mp, fld),
        "coeffs": coeff_vectors(&mp, fld),
    });
    emit("minpoly", q, None, payload, &[], format);

    match format {
        Format::Text => {
            let members: Vec<String> = coset.members.iter().map(|m| m.to_string()).collect();
            println!("coset: {{{}}}", members.join(", "));
            println!("scrim_coset: {scrim_coset}");
            println!("minpoly: {}", poly::format_poly(&mp, fld));
        }
        Format::Csv => {
            let members: Vec<String> = coset.members.iter().map(|m| m.to_string()).collect();
            println!("i,coset,scrim_coset,minpoly");
            println!(
                "{i},\"{}\",{scrim_coset},\"{}\"",
                members.join(" "),
                poly::format_poly(&mp, fld)
            );
        }
        Format::Json => {}
    }
    Ok(0)
}
