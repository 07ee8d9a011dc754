//! `catpark`: enumeration, bijections, polynomials and the identity checker
//! on the command line.

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use catpark::gf::{multi_stat_u_poly_brute, multi_stat_u_series_closed, render_h_expansion};
use catpark::verify::{self, Mutation, Scope};
use catpark::{
    count_u_pk, decompose, enumerate_caterpillar_pk, enumerate_u_pk_with_cap, eta, eta_inv, f_stat,
    fixed_points, from_lattice_path, fuss_catalan, g_stat, gamma_poly_brute, gamma_series_closed,
    h_decompose, multi_stat_poly_brute, multi_stat_series_closed, r_poly_brute, r_series_closed,
    tau, theta, theta_inv, to_lattice_path, u_luck, u_omega, BoundFamily, GammaForm,
    JointCountTensor, LatticePath, LuckSeriesForm, MultiPoly, ParkingSeq, ProductForm,
    VerifyConfig, DEFAULT_CAP,
};

const DEFAULT_MAX_ORDER: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "catpark",
    version,
    about = "Parking distributions on m-regular caterpillar trees"
)]
struct Cli {
    /// Refuse to enumerate more than this many objects.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    max_objects: u64,

    /// Refuse series truncation orders or lengths above this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every parking distribution of a given length.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::U)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count parking distributions without listing them.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Luck, value frequencies and first fixed points of one sequence.
    Stats {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// First-return decomposition of one sequence.
    Decompose {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply one of the bijections.
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        #[arg(long)]
        m: u32,
        /// Input sequence, e.g. `1,1,4`.
        #[arg(long, conflicts_with = "path")]
        seq: Option<String>,
        /// Input lattice path for `from-lattice`, e.g. `NNEENEE`.
        #[arg(long)]
        path: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// A generating polynomial, from enumeration or from its closed form.
    Poly {
        #[arg(long, value_enum)]
        name: PolyName,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Enumerate)]
        method: Method,
        /// Also print the expansion in complete homogeneous polynomials.
        #[arg(long)]
        h_expansion: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Joint distribution of luck and the value frequencies.
    Tensor {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute a reference table; lists the ids when none is given.
    Tables {
        #[arg(long)]
        id: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every identity against brute-force enumeration.
    Verify {
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long)]
        order: Option<usize>,
        /// Comma-separated values of m.
        #[arg(long, value_delimiter = ',')]
        m: Option<Vec<u32>>,
        /// Largest length used by the enumeration checks.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the JSON report here as well.
        #[arg(long)]
        json_out: Option<PathBuf>,
        /// Zero all timings so repeated runs are byte-identical.
        #[arg(long)]
        deterministic: bool,
        #[arg(long, hide = true)]
        inject_mutation: Option<String>,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    m: u32,
    /// Bound offset k in `u_i = m(i + k - 1) - r`.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Bound shift r; defaults to m - 1.
    #[arg(long)]
    r: Option<u32>,
}

impl FamilyArgs {
    fn family(&self) -> Result<BoundFamily, Failure> {
        let r = self.r.unwrap_or(self.m.saturating_sub(1));
        BoundFamily::new(self.m, self.k, r).map_err(|e| Failure::usage(format!("--m/--k/--r: {e}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// u-parking distributions
    U,
    /// parking distributions on Cat_m(n)
    Tree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapName {
    Tau,
    Eta,
    EtaInv,
    Theta,
    ThetaInv,
    Lattice,
    FromLattice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyName {
    /// luck polynomial R_n(q)
    #[value(name = "R")]
    R,
    /// coefficient of the literal luck series
    #[value(name = "R-literal")]
    RLiteral,
    /// joint luck / ones polynomial in q, t, u, v
    Gamma,
    GammaLiteral,
    /// luck and the first m + 1 frequencies on Cat_m(n)
    Multi,
    MultiUniform,
    /// the same statistics read directly on u-parking distributions
    MultiU,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Enumerate,
    Closed,
}

/// A diagnostic with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn cap(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<catpark::Error> for Failure {
    fn from(e: catpark::Error) -> Self {
        match e {
            catpark::Error::CapExceeded { .. } => Failure::cap(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

/// What a command produced: text for stdout and whether verification failed.
struct Output {
    stdout: String,
    failed: bool,
}

impl From<String> for Output {
    fn from(stdout: String) -> Self {
        Output {
            stdout,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let limits = Limits {
        objects: cli.max_objects,
        order: cli.max_order,
    };
    match &cli.command {
        Command::Enumerate {
            family,
            n,
            kind,
            format,
        } => enumerate(&family.family()?, *n, *kind, *format, limits).map(Output::from),
        Command::Count { family, n, format } => {
            count(&family.family()?, *n, *format).map(Output::from)
        }
        Command::Stats { m, seq, format } => stats(*m, seq, *format).map(Output::from),
        Command::Decompose { m, seq, format } => decomposition(*m, seq, *format).map(Output::from),
        Command::Map {
            name,
            m,
            seq,
            path,
            format,
        } => map(*name, *m, seq.as_deref(), path.as_deref(), *format).map(Output::from),
        Command::Poly {
            name,
            m,
            n,
            method,
            h_expansion,
            format,
        } => poly(*name, *m, *n, *method, *h_expansion, *format, limits).map(Output::from),
        Command::Tensor { m, n, format } => tensor(*m, *n, *format, limits).map(Output::from),
        Command::Tables { id, format } => tables(id.as_deref(), *format).map(Output::from),
        Command::Verify {
            scope,
            order,
            m,
            n,
            format,
            json_out,
            deterministic,
            inject_mutation,
        } => {
            let scope: Scope = scope
                .parse()
                .map_err(|e| Failure::usage(format!("--scope: {e}")))?;
            let mut config = VerifyConfig::new(scope);
            config.order = *order;
            config.m_values = m.clone();
            config.n_max = *n;
            config.deterministic = *deterministic;
            if let Some(name) = inject_mutation {
                let mutation: Mutation = name
                    .parse()
                    .map_err(|e| Failure::usage(format!("--inject-mutation: {e}")))?;
                config.mutation = Some(mutation);
            }
            run_verify(&config, *format, json_out.as_ref(), limits)
        }
    }
}

#[derive(Clone, Copy)]
struct Limits {
    objects: u64,
    order: usize,
}

impl Limits {
    fn check_order(&self, flag: &str, order: usize) -> Result<(), Failure> {
        if order > self.order {
            return Err(Failure::cap(format!(
                "{flag} {order} is above --max-order {}",
                self.order
            )));
        }
        Ok(())
    }

    fn check_objects(&self, projected: &BigUint) -> Result<(), Failure> {
        if *projected > BigUint::from(self.objects) {
            return Err(Failure::cap(format!(
                "this would enumerate {projected} objects, above --max-objects {}",
                self.objects
            )));
        }
        Ok(())
    }
}

fn parse_seq(flag: &str, text: &str) -> Result<ParkingSeq, Failure> {
    text.parse()
        .map_err(|e: catpark::Error| Failure::usage(format!("{flag}: {e}")))
}

fn require_m(m: u32) -> Result<(), Failure> {
    if m == 0 {
        return Err(Failure::usage("--m must be at least 1"));
    }
    Ok(())
}

fn json_line(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_text(
    header: &[String],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<String, Failure> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::usage(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(&row).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of ascii fields"))
}

fn enumerate(
    family: &BoundFamily,
    n: usize,
    kind: Kind,
    format: Format,
    limits: Limits,
) -> Result<String, Failure> {
    let seqs: Vec<ParkingSeq> = match kind {
        Kind::U => enumerate_u_pk_with_cap(n, family, limits.objects)?.collect(),
        Kind::Tree => {
            if family.k() != 1 || family.r() + 1 != family.m() {
                return Err(Failure::usage("--kind tree takes only --m (no --k or --r)"));
            }
            if n == 0 {
                return Err(Failure::usage("--kind tree needs --n >= 1"));
            }
            limits.check_objects(&fuss_catalan(family.m(), n))?;
            enumerate_caterpillar_pk(family.m(), n as u32)?.collect()
        }
    };
    match format {
        Format::Text => Ok(seqs.iter().map(|s| format!("{s}\n")).collect()),
        Format::Csv => {
            let width = seqs.first().map_or(0, ParkingSeq::len);
            let header: Vec<String> = (1..=width).map(|i| format!("p{i}")).collect();
            csv_text(
                &header,
                seqs.iter()
                    .map(|s| s.values().iter().map(u32::to_string).collect()),
            )
        }
        Format::Json => Ok(json_line(&json!(seqs))),
    }
}

fn count(family: &BoundFamily, n: usize, format: Format) -> Result<String, Failure> {
    let c = count_u_pk(n, family);
    Ok(match format {
        Format::Text => format!("{c}\n"),
        Format::Csv => csv_text(
            &["m", "k", "r", "n", "count"].map(String::from),
            [vec![
                family.m().to_string(),
                family.k().to_string(),
                family.r().to_string(),
                n.to_string(),
                c.to_string(),
            ]],
        )?,
        Format::Json => json_line(&json!({
            "m": family.m(),
            "k": family.k(),
            "r": family.r(),
            "n": n,
            "count": c.to_string(),
        })),
    })
}

fn stats(m: u32, seq: &str, format: Format) -> Result<String, Failure> {
    require_m(m)?;
    let p = parse_seq("--seq", seq)?;
    let f = f_stat(&p, m)?;
    let g = g_stat(&p, m)?;
    let luck = u_luck(&p, m);
    let tree = theta(&p, m)?;
    let omegas: Vec<usize> = (1..=m + 1).map(|j| u_omega(&p, j)).collect();
    let mut fields: Vec<(String, String)> = vec![
        ("sequence".into(), p.to_csv()),
        ("luck".into(), luck.to_string()),
    ];
    for (j, w) in omegas.iter().enumerate() {
        fields.push((format!("omega_{}", j + 1), w.to_string()));
    }
    fields.push(("first_type_1_fixed_point".into(), f.to_string()));
    fields.push((format!("first_type_{m}_fixed_point"), g.to_string()));
    fields.push(("caterpillar_image".into(), tree.to_csv()));
    Ok(match format {
        Format::Text => fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
        Format::Csv => csv_text(
            &fields.iter().map(|(k, _)| k.clone()).collect::<Vec<_>>(),
            [fields.iter().map(|(_, v)| v.clone()).collect()],
        )?,
        Format::Json => json_line(&json!({
            "sequence": p,
            "luck": luck,
            "omega": omegas,
            "first_fixed_point": { "type_1": f, format!("type_{m}"): g },
            "caterpillar_image": tree,
        })),
    })
}

fn decomposition(m: u32, seq: &str, format: Format) -> Result<String, Failure> {
    require_m(m)?;
    let p = parse_seq("--seq", seq)?;
    let points = fixed_points(&p, m)?;
    let d = decompose(&p, m)?;
    let components: Vec<&ParkingSeq> = (1..=m as usize + 1).map(|j| d.component(j)).collect();
    Ok(match format {
        Format::Text => {
            let mut out = format!("p: {p}\n");
            let idx: Vec<String> = points
                .as_slice()
                .iter()
                .enumerate()
                .map(|(l, i)| format!("i_{}={i}", l + 1))
                .collect();
            let _ = writeln!(out, "fixed points: {}", idx.join(" "));
            for (j, c) in components.iter().enumerate() {
                let _ = writeln!(out, "p_{}: {c}", j + 1);
            }
            out
        }
        Format::Csv => {
            let mut header = vec!["p".to_string()];
            header.extend((1..=m + 1).map(|j| format!("p_{j}")));
            let mut row = vec![p.to_csv()];
            row.extend(components.iter().map(|c| c.to_csv()));
            csv_text(&header, [row])?
        }
        Format::Json => json_line(&json!({
            "sequence": p,
            "fixed_points": points.as_slice(),
            "components": components,
        })),
    })
}

fn map(
    name: MapName,
    m: u32,
    seq: Option<&str>,
    path: Option<&str>,
    format: Format,
) -> Result<String, Failure> {
    require_m(m)?;
    let input = || -> Result<ParkingSeq, Failure> {
        let text = seq.ok_or_else(|| Failure::usage("--seq is required for this map"))?;
        parse_seq("--seq", text)
    };
    let render_seq = |s: &ParkingSeq| match format {
        Format::Json => json_line(&json!(s)),
        _ => format!("{}\n", s.to_csv()),
    };
    Ok(match name {
        MapName::Tau => render_seq(&tau(&input()?, m)?),
        MapName::Eta => render_seq(&eta(&input()?, m)?),
        MapName::EtaInv => render_seq(&eta_inv(&input()?, m)?),
        MapName::Theta => render_seq(&theta(&input()?, m)?),
        MapName::ThetaInv => render_seq(&theta_inv(&input()?, m)?),
        MapName::Lattice => {
            let lp = to_lattice_path(&input()?, m)?;
            match format {
                Format::Json => json_line(&json!({
                    "path": lp.to_string(),
                    "runs": lp.run_notation(),
                })),
                _ => format!("{lp}\n"),
            }
        }
        MapName::FromLattice => {
            let text = path.ok_or_else(|| Failure::usage("--path is required for from-lattice"))?;
            let lp: LatticePath = text
                .parse()
                .map_err(|e: catpark::Error| Failure::usage(format!("--path: {e}")))?;
            render_seq(&from_lattice_path(&lp, m)?)
        }
    })
}

fn poly(
    name: PolyName,
    m: u32,
    n: usize,
    method: Method,
    h_expansion: bool,
    format: Format,
    limits: Limits,
) -> Result<String, Failure> {
    require_m(m)?;
    limits.check_order("--n", n)?;
    let literal = matches!(
        name,
        PolyName::RLiteral | PolyName::GammaLiteral | PolyName::MultiUniform
    );
    if literal && method == Method::Enumerate {
        return Err(Failure::usage(
            "--name selects a closed form; pass --method closed",
        ));
    }
    if method == Method::Enumerate {
        limits.check_objects(&fuss_catalan(m, n))?;
    }
    let tree_side = matches!(name, PolyName::Multi | PolyName::MultiUniform);
    if tree_side && method == Method::Enumerate && n == 0 {
        return Err(Failure::usage("--name multi needs --n >= 1"));
    }
    let p: MultiPoly = match (name, method) {
        (PolyName::R, Method::Enumerate) => r_poly_brute(m, n)?,
        (PolyName::R, Method::Closed) => r_series_closed(m, n, LuckSeriesForm::Corrected).coeff(n),
        (PolyName::RLiteral, _) => r_series_closed(m, n, LuckSeriesForm::Literal).coeff(n),
        (PolyName::Gamma, Method::Enumerate) => gamma_poly_brute(m, n)?,
        (PolyName::Gamma, Method::Closed) => {
            gamma_series_closed(m, n, GammaForm::Corrected).coeff(n)
        }
        (PolyName::GammaLiteral, _) => gamma_series_closed(m, n, GammaForm::Literal).coeff(n),
        (PolyName::Multi, Method::Enumerate) => multi_stat_poly_brute(m, n)?,
        (PolyName::Multi, Method::Closed) => {
            multi_stat_series_closed(m, n, ProductForm::Corrected).coeff(n)
        }
        (PolyName::MultiUniform, _) => {
            multi_stat_series_closed(m, n, ProductForm::Uniform).coeff(n)
        }
        (PolyName::MultiU, Method::Enumerate) => multi_stat_u_poly_brute(m, n)?,
        (PolyName::MultiU, Method::Closed) => multi_stat_u_series_closed(m, n).coeff(n),
    };
    let h = if h_expansion {
        let target = match name {
            PolyName::Gamma | PolyName::GammaLiteral => p.specialize(&[("u", 1), ("v", 1)])?,
            _ => p.clone(),
        };
        Some(render_h_expansion(
            &h_decompose(&target)?,
            target.variables(),
        ))
    } else {
        None
    };
    Ok(match format {
        Format::Text => {
            let mut out = format!("{p}\n");
            if let Some(h) = &h {
                let _ = writeln!(out, "{h}");
            }
            out
        }
        Format::Csv => {
            let mut header: Vec<String> = p.variables().to_vec();
            header.push("coefficient".into());
            csv_text(
                &header,
                p.terms().map(|(mono, c)| {
                    let mut row: Vec<String> =
                        mono.exponents().iter().map(u32::to_string).collect();
                    row.push(c.to_string());
                    row
                }),
            )?
        }
        Format::Json => {
            let mut value = json!({ "name": name_of(name), "m": m, "n": n, "polynomial": p });
            if let Some(h) = h {
                value["h_expansion"] = json!(h);
            }
            json_line(&value)
        }
    })
}

fn name_of(name: PolyName) -> String {
    name.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn tensor(m: u32, n: usize, format: Format, limits: Limits) -> Result<String, Failure> {
    require_m(m)?;
    limits.check_order("--n", n)?;
    limits.check_objects(&fuss_catalan(m, n))?;
    let t = JointCountTensor::new(m, n)?;
    let labels: Vec<String> = (0..=m).map(|i| format!("k_{i}")).collect();
    let nonzero = t.entries.iter().filter(|(_, c)| **c != BigUint::ZERO);
    Ok(match format {
        Format::Text => {
            let mut out = format!("# B_{m}({n}, {})\n", labels.join(", "));
            for (index, c) in nonzero {
                let coords: Vec<String> = index.iter().map(u32::to_string).collect();
                let _ = writeln!(out, "({}) | {c}", coords.join(", "));
            }
            let symmetric = t.symmetry_violation().is_none();
            let _ = writeln!(
                out,
                "# equal on equal coordinate sums over [1, {n}]^{}: {}",
                m + 1,
                if symmetric { "yes" } else { "no" }
            );
            out
        }
        Format::Csv => {
            let mut header = labels;
            header.push("count".into());
            csv_text(
                &header,
                nonzero.map(|(index, c)| {
                    let mut row: Vec<String> = index.iter().map(u32::to_string).collect();
                    row.push(c.to_string());
                    row
                }),
            )?
        }
        Format::Json => {
            let entries: Vec<_> = nonzero
                .map(|(index, c)| json!({ "index": index, "count": c.to_string() }))
                .collect();
            json_line(&json!({
                "m": m,
                "n": n,
                "total": t.total().to_string(),
                "symmetric_on_positive_grid": t.symmetry_violation().is_none(),
                "entries": entries,
            }))
        }
    })
}

fn tables(id: Option<&str>, format: Format) -> Result<String, Failure> {
    let Some(id) = id else {
        return Ok(catpark::tables::TABLE_IDS
            .iter()
            .map(|id| format!("{id}\n"))
            .collect());
    };
    let t = catpark::table(id).map_err(|e| Failure::usage(format!("--id: {e}")))?;
    Ok(match format {
        Format::Text => t.render_text(),
        Format::Csv => csv_text(&t.header, t.rows.iter().cloned())?,
        Format::Json => json_line(&json!(t)),
    })
}

fn run_verify(
    config: &VerifyConfig,
    format: Format,
    json_out: Option<&PathBuf>,
    limits: Limits,
) -> Result<Output, Failure> {
    if let Some(order) = config.order {
        limits.check_order("--order", order)?;
    }
    if let Some(n) = config.n_max {
        limits.check_order("--n", n)?;
        let largest_m = config.m_values.iter().flatten().copied().max().unwrap_or(4);
        limits.check_objects(&fuss_catalan(largest_m, n))?;
    }
    if config.m_values.iter().flatten().any(|&m| m == 0) {
        return Err(Failure::usage("--m values must be at least 1"));
    }
    let report = verify::run(config);
    let json = format!("{}\n", report.to_json());
    if let Some(path) = json_out {
        std::fs::write(path, &json)
            .map_err(|e| Failure::usage(format!("--json-out {}: {e}", path.display())))?;
    }
    let stdout = match format {
        Format::Json => json,
        Format::Text => report.summary(),
        Format::Csv => csv_text(
            &["identity", "status", "params", "millis"].map(String::from),
            report.identities.iter().map(|r| {
                vec![
                    r.identity.clone(),
                    r.status.to_string(),
                    r.params.to_string(),
                    r.millis.to_string(),
                ]
            }),
        )?,
    };
    Ok(Output {
        stdout,
        failed: !report.passed(),
    })
}
