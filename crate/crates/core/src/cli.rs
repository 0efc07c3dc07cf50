//! The `invforge` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage
//! errors (including malformed words), 3 when the request is unsupported
//! for the chosen ring or the computation is inconclusive.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks::{run_suite, SuiteReport, SUITES};
use crate::coeff::Domain;
use crate::error::Error;
use crate::groebner::{buchberger_with, tau, tau_formula, GroebnerOptions, MonomialOrder};
use crate::hilbert::{generating_function, hilbert_count, hironaka_numerator, molien, HilbertTable, MultiSeries};
use crate::invariants::{basis_transition, bracket, product_expand, GroupContext, ProductMode};
use crate::poly::Poly;
use crate::presentation::{
    finite_presentation, minimize_presentation, primary_generators, secondary_generators, verify_presentation,
};
use crate::relations::{evaluate, fundamental_relation, kernel_membership, normal_form, reduce_generator};
use crate::sigma::{amitsur_component, amitsur_relation};
use crate::trace::TracePoly;
use crate::word::{max_series_index, multisets_with_product, parse_word_list, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "invforge", version, about = "Exact invariants, relations and presentations for G(n,q) acting on m vectors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Orbit basis of one multidegree and the product-to-orbit transition.
    Basis(BasisArgs),
    /// Dimensions of the multihomogeneous invariant components.
    Dims(DimsArgs),
    /// The fundamental relation of n+1 words.
    Psi(WordsArgs),
    /// Normal form of a trace polynomial, or expansion of long generators.
    Reduce(ReduceArgs),
    /// Decide whether a trace polynomial evaluates to zero.
    Kernel(PolyArgs),
    /// A finite presentation, optionally minimized and verified.
    Present(PresentArgs),
    /// Hilbert series by counting, by Molien's formula, or both.
    Hilbert(HilbertArgs),
    /// Amitsur's formula for a characteristic coefficient of a sum.
    Sigma(SigmaArgs),
    /// Gröbner checks: top coinvariant degree and primary-ideal membership.
    GroebnerCheck(GroebnerArgs),
    /// Run named check suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Count,
    Molien,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Bracket,
    Sigma,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Number of points (matrix size).
    #[arg(long)]
    pub n: Option<usize>,
    /// Root-of-unity order of the diagonal entries.
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    /// Number of series of variables; inferred from words when omitted.
    #[arg(long)]
    pub m: Option<usize>,
    /// Coefficient ring: Q, Z or Fp:<p>.
    #[arg(long, default_value = "Q")]
    pub ring: String,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub out: OutFormat,
    /// Total degree bound.
    #[arg(long)]
    pub truncate: Option<u32>,
}

#[derive(Args, Debug)]
pub struct BasisArgs {
    #[command(flatten)]
    pub common: Common,
    /// Multidegree, comma separated, e.g. 2,1.
    #[arg(long)]
    pub alpha: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Bracket)]
    pub mode: ModeArg,
}

#[derive(Args, Debug)]
pub struct DimsArgs {
    #[command(flatten)]
    pub common: Common,
    /// A single multidegree instead of a table.
    #[arg(long)]
    pub alpha: Option<String>,
}

#[derive(Args, Debug)]
pub struct WordsArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated words, e.g. x1,x2,x1*x2.
    #[arg(long)]
    pub words: String,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[command(flatten)]
    pub common: Common,
    /// A trace polynomial, e.g. "t(x1)*t(x2) - t(x1*x2)".
    #[arg(long)]
    pub poly: String,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, conflicts_with = "words", required_unless_present = "words")]
    pub poly: Option<String>,
    /// Words of degree above nq to express through lower-degree generators.
    #[arg(long)]
    pub words: Option<String>,
}

#[derive(Args, Debug)]
pub struct PresentArgs {
    #[command(flatten)]
    pub common: Common,
    /// Keep only generators of degree at most nq and a minimal relation set.
    #[arg(long)]
    pub minimal: bool,
}

#[derive(Args, Debug)]
pub struct HilbertArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = MethodArg::Count)]
    pub method: MethodArg,
}

#[derive(Args, Debug)]
pub struct SigmaArgs {
    #[command(flatten)]
    pub common: Common,
    /// Multidegree of the component, e.g. 2,1.
    #[arg(long)]
    pub alpha: String,
    /// Words substituted for x1..xs; the result must evaluate to zero.
    #[arg(long)]
    pub words: Option<String>,
}

#[derive(Args, Debug)]
pub struct GroebnerArgs {
    #[command(flatten)]
    pub common: Common,
    /// Trace polynomials separated by `;`, tested modulo the ideal of the
    /// primary invariants.
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// One of section6, trace-identity, basis, multilinear, sigma,
    /// presentation; all suites when omitted.
    #[arg(long)]
    pub suite: Option<String>,
}

/// Output produced by a command: text and JSON renderings plus the exit
/// code.
struct Outcome {
    text: String,
    json: Value,
    code: i32,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome { text, json, code: EXIT_OK }
    }
}

enum Failure {
    Usage(String),
    Algebra(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Algebra(e)
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

fn error_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedCharacteristic(_) | Error::Unsupported(_) | Error::Inconclusive(_) | Error::NotAField(_) => {
            EXIT_UNSUPPORTED
        }
        Error::Parse { .. }
        | Error::InvalidArgument(_)
        | Error::Arity { .. }
        | Error::NotInM { .. }
        | Error::NotReducible { .. }
        | Error::CompositeModulus(_)
        | Error::HeightOverflow { .. }
        | Error::DimensionMismatch(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

/// Parses `argv` (including the program name), runs the command and
/// writes its output; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let threads = match std::env::var("INVFORGE_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Some(k),
            _ => {
                let _ = writeln!(err, "error: INVFORGE_THREADS must be a positive integer, got `{v}`");
                return EXIT_USAGE;
            }
        },
        Err(_) => None,
    };
    let format = common_of(&cli.command).out;
    let result = match threads {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command)),
            Err(e) => Err(Failure::Usage(format!("cannot build thread pool: {e}"))),
        },
        None => dispatch(&cli.command),
    };
    match result {
        Ok(o) => {
            let body = match format {
                OutFormat::Text => o.text,
                OutFormat::Json => serde_json::to_string_pretty(&o.json).expect("serializable") + "\n",
            };
            let _ = out.write_all(body.as_bytes());
            o.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Algebra(e)) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn common_of(c: &Command) -> &Common {
    match c {
        Command::Basis(a) => &a.common,
        Command::Dims(a) => &a.common,
        Command::Psi(a) => &a.common,
        Command::Reduce(a) => &a.common,
        Command::Kernel(a) => &a.common,
        Command::Present(a) => &a.common,
        Command::Hilbert(a) => &a.common,
        Command::Sigma(a) => &a.common,
        Command::GroebnerCheck(a) => &a.common,
        Command::Verify(a) => &a.common,
    }
}

fn dispatch(c: &Command) -> CmdResult {
    match c {
        Command::Basis(a) => basis_cmd(a),
        Command::Dims(a) => dims_cmd(a),
        Command::Psi(a) => psi_cmd(a),
        Command::Reduce(a) => reduce_cmd(a),
        Command::Kernel(a) => kernel_cmd(a),
        Command::Present(a) => present_cmd(a),
        Command::Hilbert(a) => hilbert_cmd(a),
        Command::Sigma(a) => sigma_cmd(a),
        Command::GroebnerCheck(a) => groebner_cmd(a),
        Command::Verify(a) => verify_cmd(a),
    }
}

impl Common {
    fn n(&self, cmd: &str) -> std::result::Result<usize, Failure> {
        match self.n {
            Some(0) => Err(Failure::Usage("--n must be at least 1".into())),
            Some(n) => Ok(n),
            None => Err(Failure::Usage(format!("`{cmd}` needs --n"))),
        }
    }

    fn q(&self) -> std::result::Result<u32, Failure> {
        if self.q == 0 {
            return Err(Failure::Usage("--q must be at least 1".into()));
        }
        Ok(self.q)
    }

    fn ring(&self) -> std::result::Result<Domain, Failure> {
        self.ring.parse::<Domain>().map_err(|e| Failure::Usage(format!("--ring: {e}")))
    }

    /// `--m`, or the largest series index used in `texts` (at least 1).
    fn m_for(&self, texts: &[&str]) -> std::result::Result<usize, Failure> {
        let used = texts.iter().map(|t| max_series_index(t)).max().unwrap_or(0).max(1);
        match self.m {
            Some(0) => Err(Failure::Usage("--m must be at least 1".into())),
            Some(m) if m < used => Err(Failure::Usage(format!("--m {m} is smaller than the series index x{used} in use"))),
            Some(m) => Ok(m),
            None => Ok(used),
        }
    }

    fn m_required(&self, cmd: &str) -> std::result::Result<usize, Failure> {
        match self.m {
            Some(0) => Err(Failure::Usage("--m must be at least 1".into())),
            Some(m) => Ok(m),
            None => Err(Failure::Usage(format!("`{cmd}` needs --m"))),
        }
    }

    fn require_rational(&self, cmd: &str) -> std::result::Result<(), Failure> {
        match self.ring()? {
            Domain::Rational => Ok(()),
            d => Err(Failure::Algebra(Error::Unsupported(format!("`{cmd}` works over Q only, got {d}")))),
        }
    }
}

fn parse_multidegree(text: &str) -> std::result::Result<Vec<u32>, Failure> {
    let parts: std::result::Result<Vec<u32>, _> = text.split(',').map(|p| p.trim().parse::<u32>()).collect();
    match parts {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(Failure::Usage(format!("bad multidegree `{text}`; expected e.g. 2,1"))),
    }
}

fn context_json(n: usize, q: u32, m: usize) -> Value {
    json!({"n": n, "q": q, "m": m})
}

fn words_json(ws: &[Word]) -> Value {
    json!(ws.iter().map(Word::to_string).collect::<Vec<_>>())
}

fn basis_cmd(a: &BasisArgs) -> CmdResult {
    let c = &a.common;
    let (n, q, domain) = (c.n("basis")?, c.q()?, c.ring()?);
    let alpha = parse_multidegree(&a.alpha)?;
    if let Some(m) = c.m {
        if m != alpha.len() {
            return Err(Failure::Usage(format!("--m {m} does not match the multidegree length {}", alpha.len())));
        }
    }
    let m = alpha.len();
    let mode = match a.mode {
        ModeArg::Bracket => ProductMode::Bracket,
        ModeArg::Sigma => ProductMode::Sigma,
    };
    let ctx = GroupContext::new(n, q, m);
    let products = multisets_with_product(&alpha, q, n);
    let report = basis_transition(n, q, &alpha, mode)?;
    let mode_name = match mode {
        ProductMode::Bracket => "bracket",
        ProductMode::Sigma => "sigma",
    };
    let mut text = format!(
        "basis n={n} q={q} m={m} alpha={alpha:?} mode={mode_name} ring={domain} dimension={}\n",
        report.dimension
    );
    let mut rows = Vec::new();
    for ms in &products {
        let e = product_expand(ms, ctx, mode, domain)?;
        text.push_str(&format!("  {} = {e}\n", product_label(ms, mode)));
        let expansion: Vec<Value> = e.terms().map(|(o, k)| json!({"coeff": k, "orbit": o})).collect();
        rows.push(json!({"product": ms, "expansion": expansion}));
    }
    text.push_str(&format!(
        "transition: size={} triangular={} diagonal={} determinant={} unimodular={}\n",
        report.size,
        report.triangular,
        report.diagonal_ok,
        report.determinant,
        report.unimodular()
    ));
    let json = json!({
        "context": context_json(n, q, m),
        "alpha": alpha,
        "mode": mode_name,
        "ring": domain.to_string(),
        "dimension": report.dimension,
        "products": rows,
        "transition": {
            "size": report.size,
            "triangular": report.triangular,
            "diagonal": report.diagonal_ok,
            "determinant": report.determinant.to_string(),
            "unimodular": report.unimodular(),
        },
    });
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome { text, json, code })
}

fn product_label(ms: &crate::word::WordMultiset, mode: ProductMode) -> String {
    if ms.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = ms
        .distinct()
        .iter()
        .map(|(w, r)| match mode {
            ProductMode::Bracket if *r == 1 => format!("[{w}]"),
            ProductMode::Bracket => format!("[{w}]^{r}"),
            ProductMode::Sigma => format!("s{r}({w})"),
        })
        .collect();
    parts.join("*")
}

fn dims_cmd(a: &DimsArgs) -> CmdResult {
    let c = &a.common;
    let (n, q) = (c.n("dims")?, c.q()?);
    if let Some(text) = &a.alpha {
        let alpha = parse_multidegree(text)?;
        let d = crate::invariants::invariant_dimension(n, q, &alpha);
        return Ok(Outcome::ok(
            format!("dimension n={n} q={q} alpha={alpha:?}: {d}\n"),
            json!({"context": context_json(n, q, alpha.len()), "alpha": alpha, "dimension": d}),
        ));
    }
    let m = c.m_required("dims")?;
    let table = hilbert_count(n, q, m, c.truncate.unwrap_or(4));
    Ok(Outcome::ok(table.to_text(), serde_json::to_value(&table).expect("serializable")))
}

fn psi_cmd(a: &WordsArgs) -> CmdResult {
    let c = &a.common;
    let (n, q, domain) = (c.n("psi")?, c.q()?, c.ring()?);
    let m = c.m_for(&[&a.words])?;
    let ws = parse_word_list(&a.words, m)?;
    let tp = fundamental_relation(&ws, n, q, domain)?;
    let zero = evaluate(&tp, n).is_zero();
    let text = format!("{tp}\nterms: {}\nevaluates to zero: {zero}\n", tp.len());
    let json = json!({
        "context": context_json(n, q, m),
        "tuple": words_json(&ws),
        "terms": tp,
        "evaluates_to_zero": zero,
    });
    Ok(Outcome::ok(text, json))
}

fn certificate_text(cert: &crate::relations::Certificate) -> String {
    let mut s = format!("certificate ({} steps):\n", cert.len());
    for step in &cert.steps {
        let ws: Vec<String> = step.words.iter().map(Word::to_string).collect();
        s.push_str(&format!("  {} * t-monomial {} * relation({})\n", step.coefficient, step.multiplier, ws.join(", ")));
    }
    s
}

fn reduce_cmd(a: &ReduceArgs) -> CmdResult {
    let c = &a.common;
    let (n, q, domain) = (c.n("reduce")?, c.q()?, c.ring()?);
    if let Some(words) = &a.words {
        let m = c.m_for(&[words])?;
        let ws = parse_word_list(words, m)?;
        let mut text = String::new();
        let mut items = Vec::new();
        for w in &ws {
            let e = reduce_generator(w, n, q, domain)?;
            text.push_str(&format!("t({w}) = {e}\n"));
            items.push(json!({"word": w, "expansion": e}));
        }
        return Ok(Outcome::ok(text, json!({"context": context_json(n, q, m), "reductions": items})));
    }
    let poly = a.poly.as_deref().expect("clap requires --poly or --words");
    let m = c.m_for(&[poly])?;
    let tp = TracePoly::parse(poly, q, m, domain)?;
    let (nf, cert) = normal_form(&tp, n);
    let text = format!("normal form: {nf}\n{}", certificate_text(&cert));
    let json = json!({
        "context": context_json(n, q, m),
        "input": tp,
        "normal_form": nf,
        "certificate": cert,
    });
    Ok(Outcome::ok(text, json))
}

fn kernel_cmd(a: &PolyArgs) -> CmdResult {
    let c = &a.common;
    let (n, q, domain) = (c.n("kernel")?, c.q()?, c.ring()?);
    let m = c.m_for(&[&a.poly])?;
    let tp = TracePoly::parse(&a.poly, q, m, domain)?;
    let (member, cert) = kernel_membership(&tp, n)?;
    let mut text = format!("in kernel: {member}\n");
    if member {
        text.push_str(&certificate_text(&cert));
    }
    let json = json!({
        "context": context_json(n, q, m),
        "input": tp,
        "member": member,
        "certificate": if member { serde_json::to_value(&cert).expect("serializable") } else { Value::Null },
    });
    Ok(Outcome::ok(text, json))
}

fn present_cmd(a: &PresentArgs) -> CmdResult {
    let c = &a.common;
    let (n, q) = (c.n("present")?, c.q()?);
    let m = c.m_required("present")?;
    c.require_rational("present")?;
    let mut p = finite_presentation(n, q, m)?;
    if a.minimal {
        p = minimize_presentation(&p)?;
    }
    let mut text = p.to_string();
    let mut json = p.to_json();
    let mut code = EXIT_OK;
    if let Some(d) = c.truncate {
        let r = verify_presentation(&p, d)?;
        text.push_str(&format!(
            "verification to degree {d}: sound={} components={} mismatches={:?} passed={}\n",
            r.sound,
            r.components.len(),
            r.mismatches,
            r.passed()
        ));
        for w in &r.warnings {
            text.push_str(&format!("warning: {w}\n"));
        }
        if !r.passed() {
            code = EXIT_FAILED;
        }
        json["verification"] = serde_json::to_value(&r).expect("serializable");
    }
    Ok(Outcome { text, json, code })
}

fn series_text(s: &MultiSeries) -> String {
    let mut items: Vec<(&Vec<u32>, &num_bigint::BigInt)> = s.terms().filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign).collect();
    items.sort_by(|a, b| {
        let (da, db) = (a.0.iter().sum::<u32>(), b.0.iter().sum::<u32>());
        da.cmp(&db).then_with(|| b.0.cmp(a.0))
    });
    if items.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in items.iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let abs = if neg { -(*c).clone() } else { (*c).clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(j, &k)| if k == 1 { format!("t{}", j + 1) } else { format!("t{}^{k}", j + 1) })
            .collect();
        let one = abs == num_bigint::BigInt::from(1);
        match (vars.is_empty(), one) {
            (true, _) => out.push_str(&abs.to_string()),
            (false, true) => out.push_str(&vars.join("*")),
            (false, false) => out.push_str(&format!("{abs}*{}", vars.join("*"))),
        }
    }
    out
}

fn hilbert_cmd(a: &HilbertArgs) -> CmdResult {
    let c = &a.common;
    let (n, q) = (c.n("hilbert")?, c.q()?);
    let m = c.m_required("hilbert")?;
    let d = c.truncate.unwrap_or(6);
    let mut tables: Vec<HilbertTable> = Vec::new();
    if matches!(a.method, MethodArg::Count | MethodArg::Both) {
        tables.push(hilbert_count(n, q, m, d));
    }
    if matches!(a.method, MethodArg::Molien | MethodArg::Both) {
        tables.push(molien(n, q, m, d)?);
    }
    let mut text: String = tables.iter().map(HilbertTable::to_text).collect();
    let mut json = json!({"context": context_json(n, q, m), "tables": tables});
    let mut code = EXIT_OK;
    if a.method == MethodArg::Both {
        let agree = tables[0].agrees_with(&tables[1]);
        let primary = primary_generators(n, q, m);
        let numerator = hironaka_numerator(&tables[1], &primary.multidegrees());
        text.push_str(&format!("methods agree: {agree}\n"));
        text.push_str(&format!(
            "numerator over primary degrees {:?}: {}\n",
            primary.multidegrees(),
            series_text(&numerator)
        ));
        json["agree"] = json!(agree);
        json["numerator"] = json!(numerator
            .terms()
            .filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign)
            .map(|(e, c)| json!({"multidegree": e, "coeff": c.to_string()}))
            .collect::<Vec<_>>());
        match secondary_generators(n, q, m) {
            Ok(s) => {
                let free = numerator == generating_function(m, d, &s.multidegrees(m));
                text.push_str(&format!("secondary generators: {}\n", s.display().join(", ")));
                text.push_str(&format!("numerator equals secondary degrees: {free}\n"));
                json["secondary"] = json!(s.display());
                json["free_module_identity"] = json!(free);
                if !free {
                    code = EXIT_FAILED;
                }
            }
            Err(e) => {
                text.push_str(&format!("secondary generators: unavailable ({e})\n"));
                json["secondary"] = Value::Null;
            }
        }
        if !agree {
            code = EXIT_FAILED;
        }
    }
    Ok(Outcome { text, json, code })
}

fn sigma_cmd(a: &SigmaArgs) -> CmdResult {
    let c = &a.common;
    let n = c.n("sigma")?;
    let alpha = parse_multidegree(&a.alpha)?;
    let l: u32 = alpha.iter().sum();
    let component = amitsur_component(l as usize, &alpha, n)?;
    let mut text = format!("component of s{l}(x1+…+x{}) at {alpha:?}, n={n}:\n{component}\n", alpha.len());
    let mut json = json!({"n": n, "alpha": alpha, "component": component.to_string()});
    let mut code = EXIT_OK;
    if let Some(words) = &a.words {
        let m = c.m_for(&[words])?;
        let ws = parse_word_list(words, m)?;
        let rel = amitsur_relation(&alpha, &ws, n)?;
        let zero = rel.evaluate().is_zero();
        text.push_str(&format!("substituted: {rel}\nevaluates to zero: {zero}\n"));
        json["words"] = words_json(&ws);
        json["relation"] = json!(rel.to_string());
        json["evaluates_to_zero"] = json!(zero);
        if !zero {
            code = EXIT_FAILED;
        }
    }
    Ok(Outcome { text, json, code })
}

fn groebner_cmd(a: &GroebnerArgs) -> CmdResult {
    let c = &a.common;
    let (n, q) = (c.n("groebner-check")?, c.q()?);
    let m = match &a.poly {
        Some(p) => c.m_for(&[p])?,
        None => c.m_required("groebner-check")?,
    };
    c.require_rational("groebner-check")?;
    let t = tau(n, q, m)?;
    let formula = tau_formula(n, q);
    let mut text = format!("top coinvariant degree + 1: {t}\nformula 1+Σ(qj−1): {formula}\nmatch: {}\n", t == formula);
    let mut json = json!({"context": context_json(n, q, m), "tau": t, "formula": formula, "match": t == formula});
    let code = if t == formula { EXIT_OK } else { EXIT_FAILED };
    if let Some(list) = &a.poly {
        let domain = Domain::Rational;
        let primary = primary_generators(n, q, m);
        let gens: Vec<Poly> = primary.words.iter().map(|w| bracket(w, n, domain)).collect();
        let opts = GroebnerOptions {
            degree_cap: None,
            num_vars: Some(n * m),
            verify: false,
        };
        let gb = buchberger_with(&gens, &MonomialOrder::grevlex(), &opts)?;
        let mut rows = Vec::new();
        for piece in list.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let tp = TracePoly::parse(piece, q, m, domain)?;
            let member = gb.contains(&evaluate(&tp, n))?;
            text.push_str(&format!("in primary ideal: {member}  {tp}\n"));
            rows.push(json!({"poly": tp.to_string(), "member": member}));
        }
        json["primary_ideal_membership"] = json!(rows);
    }
    Ok(Outcome { text, json, code })
}

fn verify_cmd(a: &VerifyArgs) -> CmdResult {
    let names: Vec<&str> = match &a.suite {
        Some(s) if SUITES.contains(&s.as_str()) => vec![s.as_str()],
        Some(s) => {
            return Err(Failure::Usage(format!("unknown suite `{s}`; expected one of {}", SUITES.join(", "))));
        }
        None => SUITES.to_vec(),
    };
    let reports: Vec<SuiteReport> = names.iter().map(|s| run_suite(s).expect("known suite")).collect();
    let passed = reports.iter().all(SuiteReport::passed);
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    let json = json!({"suites": reports, "passed": passed});
    Ok(Outcome {
        text,
        json,
        code: if passed { EXIT_OK } else { EXIT_FAILED },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["invforge"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn psi_json_has_five_terms() {
        let (code, out, _) = call(&["psi", "--n", "2", "--q", "1", "--words", "x1,x2,x1*x2", "--out", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["terms"].as_array().unwrap().len(), 5);
        assert_eq!(v["evaluates_to_zero"], json!(true));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["psi", "--n", "2", "--words", "x1,y2,x3"]).0, 2);
        let (code, _, err) = call(&["psi", "--n", "2", "--words", "x1,x2^,x3"]);
        assert_eq!(code, 2);
        assert!(err.contains("position"), "{err}");
        assert_eq!(call(&["psi", "--words", "x1,x2"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["verify", "--suite", "nope"]).0, 2);
        assert_eq!(call(&["psi", "--n", "1", "--ring", "Fp:4", "--words", "x1,x2"]).0, 2);
    }

    #[test]
    fn unsupported_requests() {
        assert_eq!(call(&["hilbert", "--n", "2", "--q", "3", "--m", "1", "--method", "molien"]).0, 3);
        assert_eq!(call(&["kernel", "--n", "2", "--ring", "Fp:2", "--poly", "t(x1)"]).0, 3);
        assert_eq!(call(&["present", "--n", "1", "--m", "1", "--ring", "Z"]).0, 3);
    }

    #[test]
    fn deterministic_output() {
        let args = ["present", "--n", "2", "--m", "2", "--minimal", "--out", "json"];
        assert_eq!(call(&args), call(&args));
    }
}
