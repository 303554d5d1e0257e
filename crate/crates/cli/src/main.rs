//! `bgg`: highest weight axioms, Kazhdan-Lusztig polynomials, BGG
//! resolutions and their spectral sequences from the command line.
//!
//! Exit codes: 0 on success, 1 for a mathematical negative (an axiom fails,
//! an object is not in the heart, an identity does not hold), 2 for bad
//! input.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bggkit::bgg::{
    bgg_spectral_sequence, classify_all, delorme_check, ext_table, heart_shift, heart_witness,
    is_coconnective, is_connective, kl_delorme_check, kl_ext_table, kl_spectral_sequence,
    ordinary_resolution, render_bgg_terms, render_grids, BggError, DelormeReport, ExtTable,
    SsReport,
};
use bggkit::coxeter::{Elem, WeylGroup};
use bggkit::homology::{ChainComplex, ComplexData};
use bggkit::klpoly::KLTable;
use bggkit::linalg::{Field, Fp, Rational};
use bggkit::qha::{field_spec, load_algebra, FieldSpec, HwAxiom, QhaError, QuiverAlgebra};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "bgg",
    version,
    about = "BGG resolutions in highest weight categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args, Clone, Debug)]
struct Source {
    /// Algebra file; same as --algebra.
    path: Option<PathBuf>,
    /// Algebra file (algebra backend).
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Weyl group type such as A3 (KL backend).
    #[arg(long = "type")]
    group: Option<String>,
    /// `simple:w`, `standard:w`, `costandard:w`, `mI:w:y1,y2` or `complex:@file`.
    #[arg(long)]
    object: String,
    /// Replace the object N by N[m].
    #[arg(long, allow_hyphen_values = true)]
    shift: Option<i64>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Check the highest weight axioms of an algebra file.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Kazhdan-Lusztig polynomials: one `P_{y,w}`, or all nontrivial ones.
    Kl {
        #[arg(long = "type")]
        group: String,
        y: Option<String>,
        w: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Count highest weight modules admitting ordinary resolutions.
    Classify {
        #[arg(long = "type")]
        group: String,
        /// List the verdict for every weight and divisor set.
        #[arg(long)]
        records: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Ordinary BGG resolution of an object in the heart.
    Resolve(Source),
    /// Pages of the BGG spectral sequence.
    Ss {
        #[command(flatten)]
        source: Source,
        /// Show pages up to E_r (E_inf is always shown).
        #[arg(long)]
        pages: Option<usize>,
    },
    /// Check `[N] = sum_w chi RHom(N, A_w) [M_w]`.
    Delorme(Source),
    /// Ext into costandards and membership in the heart.
    Heart(Source),
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Negative(String),
}

impl From<QhaError> for CliError {
    fn from(e: QhaError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<BggError> for CliError {
    fn from(e: BggError) -> Self {
        match e {
            BggError::NotInHeart(w) => {
                CliError::Negative(format!("not in any shift of the heart: {w}"))
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Text to print and whether the answer was negative.
struct Output {
    text: String,
    negative: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            negative: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(u8::from(out.negative))
        }
        Err(CliError::Negative(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Verify { path, format } => dispatch_field(&read(&path)?, VerifyJob(format)),
        Command::Kl {
            group,
            y,
            w,
            format,
        } => kl(&group, y.as_deref(), w.as_deref(), format),
        Command::Classify {
            group,
            records,
            format,
        } => classify(&group, records, format),
        Command::Resolve(src) => object_command(&src, Task::Resolve),
        Command::Ss { source, pages } => object_command(&source, Task::Ss(pages)),
        Command::Delorme(src) => object_command(&src, Task::Delorme),
        Command::Heart(src) => object_command(&src, Task::Heart),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

/// Work on an algebra whose field is only known at run time.
trait AlgebraJob {
    fn run<F: Field>(self, alg: QuiverAlgebra<F>) -> Result<Output, CliError>;
}

/// Load the algebra in `text` over the field it declares and run `job`.
fn dispatch_field(text: &str, job: impl AlgebraJob) -> Result<Output, CliError> {
    macro_rules! primes {
        ($p:expr, $($q:literal),*) => {
            match $p {
                $($q => job.run::<Fp<$q>>(load_algebra(text)?),)*
                p => Err(CliError::Input(format!("unsupported field F_{p}"))),
            }
        };
    }
    match field_spec(text)? {
        FieldSpec::Rational => job.run::<Rational>(load_algebra(text)?),
        FieldSpec::Prime(p) => primes!(p, 2, 3, 5, 7, 11, 13, 101, 32003, 65521),
    }
}

struct VerifyJob(Format);

impl AlgebraJob for VerifyJob {
    fn run<F: Field>(self, alg: QuiverAlgebra<F>) -> Result<Output, CliError> {
        verify(alg, self.0)
    }
}

struct ObjectJob<'a> {
    src: &'a Source,
    dir: PathBuf,
    task: Task,
}

impl AlgebraJob for ObjectJob<'_> {
    fn run<F: Field>(self, alg: QuiverAlgebra<F>) -> Result<Output, CliError> {
        algebra_task(&alg, self.src, &self.dir, self.task)
    }
}

fn axiom_number(a: HwAxiom) -> &'static str {
    match a {
        HwAxiom::LengthCompatible => "(0)",
        HwAxiom::EndomorphismsScalar => "(1)",
        HwAxiom::HomsRespectOrder => "(2)",
        HwAxiom::KernelStandardFiltered => "(3)",
    }
}

fn verify<F: Field>(alg: QuiverAlgebra<F>, format: Format) -> Result<Output, CliError> {
    let report = alg.verify_hw_axioms();
    let negative = !report.all_pass();
    let text = match format {
        Format::Json => to_json(&report),
        Format::Table => {
            let mut out = format!(
                "algebra: {} weights, dimension {}\n",
                alg.n_vertices(),
                alg.dimension()
            );
            for c in &report.checks {
                out.push_str(&format!(
                    "  {} axiom {} {} at {}{}\n",
                    if c.pass { "ok  " } else { "FAIL" },
                    axiom_number(c.axiom),
                    c.axiom,
                    c.weight,
                    if c.detail.is_empty() {
                        String::new()
                    } else {
                        format!(": {}", c.detail)
                    }
                ));
            }
            match report.failures().first() {
                None => out.push_str("all highest weight axioms hold\n"),
                Some(c) => out.push_str(&format!(
                    "axiom {} fails at weight {}: {}\n",
                    axiom_number(c.axiom),
                    c.weight,
                    c.axiom
                )),
            }
            out
        }
    };
    Ok(Output { text, negative })
}

fn group(name: &str) -> Result<WeylGroup, CliError> {
    WeylGroup::from_type(name).map_err(|e| CliError::Input(e.to_string()))
}

fn element(g: &WeylGroup, word: &str) -> Result<Elem, CliError> {
    g.parse(word).map_err(|e| CliError::Input(e.to_string()))
}

fn kl(ty: &str, y: Option<&str>, w: Option<&str>, format: Format) -> Result<Output, CliError> {
    let g = group(ty)?;
    let t = KLTable::new(&g);
    if let (Some(y), Some(w)) = (y, w) {
        let (ey, ew) = (element(&g, y)?, element(&g, w)?);
        let p = t.kl(ey, ew);
        let text = match format {
            Format::Json => to_json(&json!({
                "y": g.name(ey), "w": g.name(ew), "coeffs": p.coeffs(), "polynomial": p.to_string()
            })),
            Format::Table => format!("{p}\n"),
        };
        return Ok(Output::ok(text));
    }
    if y.is_some() {
        return Err(CliError::Input("give both y and w, or neither".into()));
    }
    let mut nontrivial = Vec::new();
    let mut trivial = 0;
    for w in g.elements() {
        for y in g.lower_interval(w) {
            let p = t.kl(y, w);
            if p.is_one() {
                trivial += 1;
            } else {
                nontrivial.push((g.name(y), g.name(w), p));
            }
        }
    }
    let singular: Vec<String> = g
        .elements()
        .filter(|&w| !t.rationally_smooth(w))
        .map(|w| g.name(w))
        .collect();
    let text = match format {
        Format::Json => to_json(&json!({
            "group": ty,
            "order": g.order(),
            "nontrivial": nontrivial.iter().map(|(y, w, p)| json!({
                "y": y, "w": w, "coeffs": p.coeffs(), "polynomial": p.to_string()
            })).collect::<Vec<_>>(),
            "trivial_pairs": trivial,
            "not_rationally_smooth": singular,
        })),
        Format::Table => {
            let mut out = format!(
                "Kazhdan-Lusztig polynomials of {ty} ({} elements)\n",
                g.order()
            );
            for (y, w, p) in &nontrivial {
                out.push_str(&format!("P_{{{y},{w}}} = {p}\n"));
            }
            out.push_str(&format!(
                "P_{{y,w}} = 1 for the other {trivial} pairs y <= w\n"
            ));
            out.push_str(&format!(
                "not rationally smooth: {} of {}: {}\n",
                singular.len(),
                g.order(),
                if singular.is_empty() {
                    "none".to_string()
                } else {
                    singular.join(", ")
                }
            ));
            out
        }
    };
    Ok(Output::ok(text))
}

fn classify(ty: &str, records: bool, format: Format) -> Result<Output, CliError> {
    let g = group(ty)?;
    let t = KLTable::new(&g);
    let s = classify_all(&t, ty);
    let text = match format {
        Format::Json => to_json(&s),
        Format::Table => {
            let mut out =
                format!("highest weight modules admitting ordinary resolutions in {ty}\n");
            out.push_str(&format!("total admitting: {}\n", s.total));
            out.push_str(&format!("undetermined: {}\n", s.undetermined));
            out.push_str(&format!("sum over w of 2^|D_w|: {}\n", s.modules));
            out.push_str(&format!("parabolic Verma: {}\n", s.parabolic));
            out.push_str(&format!(
                "rationally smooth simples: {}\n",
                s.rationally_smooth_simples
            ));
            out.push_str(&format!("overlap: {}\n", s.overlap));
            out.push_str(&format!(
                "previously known: {} (= {} + {} - {})\n",
                s.prior_known, s.parabolic, s.rationally_smooth_simples, s.overlap
            ));
            if records {
                for r in &s.records {
                    out.push_str(&format!(
                        "\n{} (D = {{{}}}, {})\n",
                        r.weight,
                        r.divisors.join(","),
                        if r.rationally_smooth {
                            "rationally smooth"
                        } else {
                            "singular"
                        }
                    ));
                    for v in &r.subsets {
                        out.push_str(&format!(
                            "  I = {{{}}}: {}{}\n",
                            v.divisors.join(","),
                            v.verdict,
                            v.justification
                                .map(|j| format!(" [{j}]"))
                                .unwrap_or_default()
                        ));
                    }
                }
            }
            out
        }
    };
    Ok(Output::ok(text))
}

#[derive(Clone, Copy)]
enum Task {
    Resolve,
    Ss(Option<usize>),
    Delorme,
    Heart,
}

fn object_command(src: &Source, task: Task) -> Result<Output, CliError> {
    let path = match (&src.path, &src.algebra) {
        (Some(_), Some(_)) => return Err(CliError::Input("give the algebra file once".into())),
        (p, a) => p.as_ref().or(a.as_ref()),
    };
    match (path, &src.group) {
        (Some(path), None) => {
            let text = read(path)?;
            let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
            dispatch_field(&text, ObjectJob { src, dir, task })
        }
        (None, Some(ty)) => kl_task(ty, src, task),
        _ => Err(CliError::Input(
            "select exactly one of an algebra file or --type".into(),
        )),
    }
}

fn limit_pages(report: &mut SsReport, pages: Option<usize>) {
    if let Some(r) = pages {
        report
            .pages
            .retain(|g| g.page == "inf" || g.page.parse::<usize>().map_or(false, |p| p <= r));
    }
}

fn render_ext(names: &[String], ext: &ExtTable) -> String {
    let mut out = String::from("Ext^n(N, A_w):\n");
    for (w, e) in ext.iter().enumerate() {
        let degs: Vec<String> = e.iter().map(|(n, d)| format!("n={n}: {d}")).collect();
        out.push_str(&format!(
            "  A_{}: {}\n",
            names[w],
            if degs.is_empty() {
                "0".to_string()
            } else {
                degs.join(", ")
            }
        ));
    }
    out
}

/// `-[M_e] + [M_s]` with weights in `order`.
fn class_expression(names: &[String], coeffs: &[i64], order: &[usize]) -> String {
    let mut out = String::new();
    for &w in order.iter().filter(|&&w| coeffs[w] != 0) {
        let c = coeffs[w];
        match (out.is_empty(), c < 0) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("[M_{}]", names[w]));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn delorme_output(
    label: &str,
    names: &[String],
    order: &[usize],
    r: &DelormeReport,
    format: Format,
) -> Output {
    let text = match format {
        Format::Json => to_json(&json!({
            "object": label,
            "class": names.iter().cloned().zip(r.class.iter().copied()).collect::<BTreeMap<_, _>>(),
            "chi": names.iter().cloned().zip(r.chi.iter().copied()).collect::<BTreeMap<_, _>>(),
            "pass": r.pass,
        })),
        Format::Table => format!(
            "[{label}] = {}\nsum_w chi RHom(N, A_w) [M_w] = {}\nidentity {}\n",
            class_expression(names, &r.class, order),
            class_expression(names, &r.chi, order),
            if r.pass { "holds" } else { "FAILS" }
        ),
    };
    Output {
        text,
        negative: !r.pass,
    }
}

fn heart_output(
    label: &str,
    names: &[String],
    lengths: &[i64],
    ext: &ExtTable,
    format: Format,
) -> Output {
    let m = heart_shift(lengths, ext);
    let co = is_coconnective(lengths, ext);
    let con = is_connective(lengths, ext);
    let text = match format {
        Format::Json => to_json(&json!({
            "object": label,
            "ext": names.iter().cloned().zip(ext.iter().cloned()).collect::<BTreeMap<_, _>>(),
            "coconnective": co,
            "connective": con,
            "heart_shift": m,
            "witness": heart_witness(names, lengths, ext),
        })),
        Format::Table => {
            let mut out = format!("object: {label}\n");
            out.push_str(&render_ext(names, ext));
            out.push_str(&format!("coconnective: {co}\nconnective: {con}\n"));
            match m {
                Some(m) => out.push_str(&format!("in the heart after shift m = {m}\n")),
                None => out.push_str(&format!(
                    "not in any shift of the heart: {}\n",
                    heart_witness(names, lengths, ext).unwrap_or_default()
                )),
            }
            out
        }
    };
    Output {
        text,
        negative: m.is_none(),
    }
}

/// Look a weight up by name, accepting any reduced word for it when the
/// poset is a Weyl group of type A.
fn weight<F: Field>(alg: &QuiverAlgebra<F>, name: &str) -> Result<usize, CliError> {
    if let Ok(w) = alg.weight(name) {
        return Ok(w);
    }
    let names = alg.poset().names();
    for rank in 1..4 {
        let Ok(g) = WeylGroup::from_type(&format!("A{rank}")) else {
            continue;
        };
        if g.order() != names.len() {
            continue;
        }
        if let Ok(target) = g.parse(name) {
            if let Some(w) = names.iter().position(|n| g.parse(n).ok() == Some(target)) {
                return Ok(w);
            }
        }
    }
    Err(CliError::Input(format!("unknown weight `{name}`")))
}

fn build_object<F: Field>(
    alg: &QuiverAlgebra<F>,
    spec: &str,
    dir: &Path,
) -> Result<(String, ChainComplex<F>), CliError> {
    let stalk = |m| ChainComplex::stalk(alg.zero_module(), m, 0);
    let names = alg.poset().names();
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Input(format!("bad object `{spec}`")))?;
    match kind {
        "simple" => {
            let w = weight(alg, rest)?;
            Ok((format!("L_{}", names[w]), stalk(alg.simple(w))))
        }
        "standard" => {
            let w = weight(alg, rest)?;
            Ok((format!("M_{}", names[w]), stalk(alg.standard(w))))
        }
        "costandard" => {
            let w = weight(alg, rest)?;
            Ok((format!("A_{}", names[w]), stalk(alg.costandard(w))))
        }
        "mI" => {
            let (w, ys) = rest.split_once(':').unwrap_or((rest, ""));
            let w = weight(alg, w)?;
            let ys = ys
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|y| weight(alg, y))
                .collect::<Result<Vec<_>, _>>()?;
            let label = format!(
                "M_{}/({})",
                names[w],
                ys.iter()
                    .map(|&y| format!("M_{}", names[y]))
                    .collect::<Vec<_>>()
                    .join("+")
            );
            Ok((label, stalk(alg.m_i(w, &ys)?)))
        }
        "complex" => {
            let file = rest.strip_prefix('@').unwrap_or(rest);
            let path = if Path::new(file).is_absolute() || Path::new(file).exists() {
                PathBuf::from(file)
            } else {
                dir.join(file)
            };
            let data: ComplexData = serde_json::from_str(&read(&path)?)
                .map_err(|e| CliError::Input(format!("bad complex file: {e}")))?;
            let c = ChainComplex::from_data(alg.zero_module(), alg.ends(), &data)
                .map_err(|e| CliError::Input(e.to_string()))?;
            Ok(("N".to_string(), c))
        }
        _ => Err(CliError::Input(format!("unknown object kind `{kind}`"))),
    }
}

fn algebra_task<F: Field>(
    alg: &QuiverAlgebra<F>,
    src: &Source,
    dir: &Path,
    task: Task,
) -> Result<Output, CliError> {
    let (mut label, mut n) = build_object(alg, &src.object, dir)?;
    if let Some(m) = src.shift {
        n = n.shift(m);
        label = format!("{label}[{m}]");
    }
    let names = alg.poset().names().to_vec();
    match task {
        Task::Resolve => {
            let b = ordinary_resolution(alg, &n)?;
            let text = match src.format {
                Format::Json => to_json(&json!({
                    "object": label,
                    "shift": b.shift,
                    "terms": b.named_terms(&names),
                    "complex": b.complex.to_data(),
                })),
                Format::Table => b.render(&names) + "\n",
            };
            Ok(Output::ok(text))
        }
        Task::Ss(pages) => {
            let ss = bgg_spectral_sequence(alg, &n)?;
            let mut report = ss.report(alg, &label);
            limit_pages(&mut report, pages);
            Ok(Output::ok(match src.format {
                Format::Json => to_json(&report),
                Format::Table => render_grids(&report),
            }))
        }
        Task::Delorme => {
            let r = delorme_check(alg, &n)?;
            Ok(delorme_output(
                &label,
                &names,
                &alg.poset().by_length(),
                &r,
                src.format,
            ))
        }
        Task::Heart => {
            let ext = ext_table(alg, &n)?;
            Ok(heart_output(
                &label,
                &names,
                alg.poset().lengths(),
                &ext,
                src.format,
            ))
        }
    }
}

fn kl_task(ty: &str, src: &Source, task: Task) -> Result<Output, CliError> {
    let g = group(ty)?;
    let t = KLTable::new(&g);
    let word = src
        .object
        .strip_prefix("simple:")
        .ok_or_else(|| CliError::Input("the KL backend only handles simple:w objects".into()))?;
    let w = element(&g, word)?;
    let names: Vec<String> = g.elements().map(|x| g.name(x)).collect();
    let lengths: Vec<i64> = g.elements().map(|x| g.length(x) as i64).collect();
    let mut order: Vec<usize> = g.elements().collect();
    order.sort_by_key(|&x| (lengths[x], x));
    let mut label = format!("L_{}", g.name(w));
    let m = src.shift.unwrap_or(0);
    if m != 0 {
        label = format!("{label}[{m}]");
    }
    // Ext^n(N[m], A) = Ext^{n-m}(N, A).
    let ext: ExtTable = kl_ext_table(&t, w)
        .into_iter()
        .map(|e| e.into_iter().map(|(n, d)| (n + m, d)).collect())
        .collect();
    match task {
        Task::Heart => Ok(heart_output(&label, &names, &lengths, &ext, src.format)),
        Task::Delorme => {
            let mut r = kl_delorme_check(&t, w);
            if m.rem_euclid(2) == 1 {
                r.class.iter_mut().for_each(|c| *c = -*c);
                r.chi.iter_mut().for_each(|c| *c = -*c);
            }
            Ok(delorme_output(&label, &names, &order, &r, src.format))
        }
        Task::Resolve => {
            let shift = heart_shift(&lengths, &ext).ok_or_else(|| {
                CliError::Negative(format!(
                    "not in any shift of the heart: {}",
                    heart_witness(&names, &lengths, &ext).unwrap_or_default()
                ))
            })?;
            let mut terms: BTreeMap<i64, Vec<(String, usize)>> = BTreeMap::new();
            for &y in &order {
                let d: usize = ext[y].values().sum();
                if d > 0 {
                    terms
                        .entry(lengths[y])
                        .or_default()
                        .push((names[y].clone(), d));
                }
            }
            let text = match src.format {
                Format::Json => {
                    to_json(&json!({ "object": label, "shift": shift, "terms": terms }))
                }
                Format::Table => render_bgg_terms(&terms, shift) + "\n",
            };
            Ok(Output::ok(text))
        }
        Task::Ss(pages) => {
            if m != 0 {
                return Err(CliError::Input(
                    "--shift is not supported for ss on the KL backend".into(),
                ));
            }
            let mut report = kl_spectral_sequence(&t, w, None).report;
            limit_pages(&mut report, pages);
            Ok(Output::ok(match src.format {
                Format::Json => to_json(&report),
                Format::Table => render_grids(&report),
            }))
        }
    }
}
