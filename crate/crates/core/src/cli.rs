//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven from tests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::clebsch::threej;
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};
use crate::ofun::{specialize_q1, structure_constants, verify_hopf, OqAlgebra};
use crate::schurweyl::{
    frt_relations, hecke_generators, pi_from_involution, schur_weyl_decompose, tensor_power_rep, FrtReport,
};
use crate::uqrep::{AlgebraSpec, Family, Generator, IrrepLabel};

pub const OUT_DIR_ENV: &str = "PETERWEYL_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "peterweyl", version, about = "Exact Peter-Weyl computations in O_q(G) over Q(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Algebra {
    /// `sl2`, `gl` (with --k) or `glK`.
    #[arg(long, default_value = "sl2")]
    algebra: String,
    #[arg(long)]
    k: Option<usize>,
}

impl Algebra {
    fn spec(&self) -> Result<AlgebraSpec> {
        match (self.algebra.as_str(), self.k) {
            ("sl2", None | Some(2)) => Ok(AlgebraSpec::sl2()),
            ("sl2", Some(k)) => Err(Error::InvalidArgument(format!("sl2 has k = 2, got --k {k}"))),
            ("gl", Some(k)) => AlgebraSpec::gl(k),
            ("gl", None) => Err(Error::InvalidArgument("--algebra gl needs --k".into())),
            (s, k) => {
                let spec: AlgebraSpec = s.parse()?;
                match k {
                    Some(k) if k != spec.k => Err(Error::InvalidArgument(format!("--k {k} contradicts {s}"))),
                    _ => Ok(spec),
                }
            }
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// 3j and dual 3j symbols of irrep(λ) ⊗ irrep(μ).
    Threej {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[command(flatten)]
        output: Output,
    },
    /// Multiplication table f^λ_{i₁j₁} f^μ_{i₂j₂} in the Peter-Weyl basis.
    StructureConstants {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Specialize the table at q = 1.
        #[arg(long)]
        q1: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Exact bialgebra axiom checks.
    HopfCheck {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, default_value_t = 2)]
        max_weight: usize,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Isotypic decomposition of V^{⊗n} with Hecke checks.
    SchurWeyl {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Quadratic relations of O_q(M_k) from the structure constants.
    Frt {
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Show the relations specialized at q = 1.
        #[arg(long)]
        q1: bool,
        #[command(flatten)]
        output: Output,
    },
    /// The projection π on (V*)^{⊗n} ⊗ V^{⊗n}.
    Pi {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Normalizes an element of Q(q) and evaluates it at q = 1.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        output: Output,
    },
    /// Writes the golden artifact set to a directory.
    ExportGoldens {
        #[arg(long, env = OUT_DIR_ENV)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a command: rendered text and whether its checks passed.
struct Emitted {
    json: String,
    text: String,
    ok: bool,
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn parse_label(spec: AlgebraSpec, s: &str) -> Result<IrrepLabel> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight {s:?}"))))
        .collect::<Result<_>>()?;
    match spec.family {
        Family::Sl2 => {
            if parts.len() != 1 {
                return Err(Error::InvalidLabel(format!("sl2 weights are single integers, got {s:?}")));
            }
            IrrepLabel::sl2(parts[0])
        }
        Family::Gl => {
            if parts.len() > spec.k {
                return Err(Error::InvalidLabel(format!("{s:?} has more than {} parts", spec.k)));
            }
            IrrepLabel::gl(spec.k, &parts)
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct PiDoc {
    pub k: usize,
    pub n: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub idempotent: bool,
    /// Only computed for n = 2.
    pub equals_half_one_plus_q: Option<bool>,
    pub matrix: QMatrix,
}

#[derive(Serialize, Deserialize)]
pub struct EvalDoc {
    pub input: String,
    pub canonical: QScalar,
    pub at_one: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct SchurWeylDoc {
    pub summary: crate::schurweyl::SWSummary,
    pub hecke_quadratic: bool,
    pub braid: bool,
    pub commutant: bool,
}

#[derive(Serialize, Deserialize)]
pub struct StExpansion {
    pub product: String,
    pub s_star_s: QScalar,
    pub t_star_t: QScalar,
}

#[derive(Serialize, Deserialize)]
pub struct StGolden {
    pub basis: String,
    pub products: Vec<StExpansion>,
}

fn schur_weyl_checks(k: usize, n: usize) -> Result<SchurWeylDoc> {
    let summary = schur_weyl_decompose(k, n)?.summary();
    let (mut quad, mut braid, mut comm) = (true, true, true);
    if n >= 2 {
        let t = hecke_generators(k, n)?;
        let id = QMatrix::identity(k.pow(n as u32));
        let (q, qi) = (QScalar::q(), QScalar::q_pow(-1));
        for ti in &t {
            quad &= ti.sub(&id.scale(&q))?.mul(&ti.add(&id.scale(&qi))?)?.is_zero();
        }
        for w in t.windows(2) {
            braid &= w[0].mul(&w[1])?.mul(&w[0])? == w[1].mul(&w[0])?.mul(&w[1])?;
        }
        for a in 0..t.len() {
            for b in a + 2..t.len() {
                braid &= t[a].mul(&t[b])? == t[b].mul(&t[a])?;
            }
        }
        let rep = tensor_power_rep(k, n)?;
        for ti in &t {
            for g in Generator::all(rep.algebra) {
                let m = rep.generator(g);
                comm &= ti.mul(m)? == m.mul(ti)?;
            }
        }
    }
    Ok(SchurWeylDoc { summary, hecke_quadratic: quad, braid, commutant: comm })
}

fn frt_text(report: &FrtReport, q1: bool) -> Result<String> {
    let mut s = String::new();
    for r in &report.relations {
        if q1 {
            let terms: Vec<(String, QScalar)> = r
                .at_q1()?
                .into_iter()
                .map(|(w, v)| (crate::ofun::pbw::word_to_string(report.k, &w), QScalar::from_rational(&v)))
                .collect();
            s.push_str(&format!("{} = 0\n", crate::ofun::pbw::join_signed(&terms)));
        } else {
            s.push_str(&r.text());
            s.push('\n');
        }
    }
    for res in &report.residuals {
        s.push_str(&format!("nonzero entry ({},{}): {}\n", res.row, res.col, res.value));
    }
    Ok(s)
}

fn st_golden() -> Result<StGolden> {
    let spec = AlgebraSpec::gl(2)?;
    let alg = OqAlgebra::shared(spec);
    let w = crate::ofun::PWSymbol::new(IrrepLabel::gl(2, &[2])?, 1, 1)?;
    let t = crate::ofun::PWSymbol::new(IrrepLabel::gl(2, &[1, 1])?, 0, 0)?;
    let g = |i, j| crate::ofun::pbw::generator(&alg, i, j);
    let (a, b, c, d) = (g(0, 0)?, g(0, 1)?, g(1, 0)?, g(1, 1)?);
    let mut products = Vec::new();
    for (name, x, y) in [("a*d", &a, &d), ("d*a", &d, &a), ("b*c", &b, &c), ("c*b", &c, &b)] {
        let p = alg.multiply(x, y)?;
        products.push(StExpansion { product: name.into(), s_star_s: p.coeff(&w), t_star_t: p.coeff(&t) });
    }
    Ok(StGolden { basis: "s = e2⊗e1 + q e1⊗e2, t = e2⊗e1 - q^-1 e1⊗e2".into(), products })
}

fn export_goldens(dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::InvalidArgument(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<(String, String)> = Vec::new();
    let gl2 = AlgebraSpec::gl(2)?;
    let v = IrrepLabel::vector(gl2);
    files.push(("oq_m2_structure_constants.json".into(), to_json(&structure_constants(&v, &v)?)?));
    files.push(("st_expansions.json".into(), to_json(&st_golden()?)?));
    files.push(("threej_gl2_vector.json".into(), to_json(&threej(&v, &v)?)?));
    let frt = frt_relations(2)?;
    files.push(("frt_k2.json".into(), to_json(&frt.to_doc())?));
    files.push(("frt_k2.txt".into(), frt_text(&frt, false)?));
    files.push(("frt_k2_q1.txt".into(), frt_text(&frt, true)?));
    for (k, n) in [(2, 2), (2, 3), (3, 3)] {
        files.push((format!("sw_dims_{k}_{n}.json"), to_json(&schur_weyl_decompose(k, n)?.summary())?));
    }
    let mut written = Vec::new();
    for (name, body) in files {
        let path = dir.join(name);
        fs::write(&path, body).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}

fn execute(cmd: &Command) -> Result<Emitted> {
    match cmd {
        Command::Threej { alg, lambda, mu, .. } => {
            let spec = alg.spec()?;
            let (l, m) = (parse_label(spec, lambda)?, parse_label(spec, mu)?);
            let t = threej(&l, &m)?;
            let mut text = String::new();
            for (title, list) in [("3j", &t.entries), ("dual 3j", &t.dual_entries)] {
                for e in list {
                    text.push_str(&format!(
                        "{title} nu={:?} k={} b1={} b2={} b3={}: {}\n",
                        e.nu, e.k, e.b1, e.b2, e.b3, e.value
                    ));
                }
            }
            Ok(Emitted { json: to_json(&t)?, text, ok: true })
        }
        Command::StructureConstants { alg, lambda, mu, q1, .. } => {
            let spec = alg.spec()?;
            let (l, m) = (parse_label(spec, lambda)?, parse_label(spec, mu)?);
            let table = structure_constants(&l, &m)?;
            if *q1 {
                let c = specialize_q1(&table)?;
                let mut text = String::new();
                for e in &c.entries {
                    let terms: Vec<String> =
                        e.product.iter().map(|t| format!("({})*f{:?}_{{{},{}}}", t.value, t.nu, t.a, t.b)).collect();
                    text.push_str(&format!("({},{})x({},{}) = {}\n", e.i1, e.j1, e.i2, e.j2, terms.join(" + ")));
                }
                return Ok(Emitted { json: to_json(&c)?, text, ok: true });
            }
            let mut text = String::new();
            for e in &table.entries {
                let terms: Vec<String> =
                    e.product.iter().map(|t| format!("({})*f{:?}_{{{},{}}}", t.coeff, t.nu, t.a, t.b)).collect();
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                text.push_str(&format!("({},{})x({},{}) = {}\n", e.i1, e.j1, e.i2, e.j2, rhs));
            }
            Ok(Emitted { json: to_json(&table)?, text, ok: true })
        }
        Command::HopfCheck { alg, max_weight, samples, seed, .. } => {
            let spec = alg.spec()?;
            let report = verify_hopf(&OqAlgebra::shared(spec), *max_weight, *samples, *seed)?;
            let total: usize = report.checked.values().sum();
            let mut text = String::new();
            for f in &report.failures {
                text.push_str(&format!("FAILED {}: {}\n", f.axiom, f.witness));
            }
            if report.passed() {
                text.push_str(&format!("all checks passed ({total} identities)\n"));
            }
            Ok(Emitted { json: to_json(&report)?, text, ok: report.passed() })
        }
        Command::SchurWeyl { k, n, .. } => {
            AlgebraSpec::gl(*k)?;
            let doc = schur_weyl_checks(*k, *n)?;
            let ok = doc.hecke_quadratic && doc.braid && doc.commutant && doc.summary.total == k.pow(*n as u32);
            let mut text = String::new();
            for c in &doc.summary.isotypic {
                text.push_str(&format!("{:?}: dim V = {}, dim W = {}\n", c.lambda, c.dim_v, c.dim_w));
            }
            text.push_str(&format!("{}\n", doc.summary.identity));
            text.push_str(&format!(
                "hecke quadratic: {}, braid: {}, commutant: {}\n",
                doc.hecke_quadratic, doc.braid, doc.commutant
            ));
            Ok(Emitted { json: to_json(&doc)?, text, ok })
        }
        Command::Frt { k, q1, .. } => {
            let report = frt_relations(*k)?;
            Ok(Emitted { json: to_json(&report.to_doc())?, text: frt_text(&report, *q1)?, ok: report.passed() })
        }
        Command::Pi { k, n, .. } => {
            AlgebraSpec::gl(*k)?;
            if *n > 4 {
                return Err(Error::InvalidArgument(format!("--n {n} exceeds the supported bound 4")));
            }
            let d = schur_weyl_decompose(*k, *n)?;
            let pi = d.pi_matrix()?;
            let rank = pi.rank();
            let idempotent = pi.mul(&pi)? == pi;
            let equals = if *n == 2 { Some(pi == pi_from_involution(*k)?) } else { None };
            let expected: usize = d.isotypic.iter().map(|c| c.dim_v * c.dim_v).sum();
            let ok = idempotent && rank == expected && equals.unwrap_or(true);
            let doc = PiDoc { k: *k, n: *n, rank, kernel_dim: pi.cols() - rank, idempotent, equals_half_one_plus_q: equals, matrix: pi };
            let mut text = format!("k={} n={}: rank {} (expected {expected}), kernel {}, idempotent: {}\n", k, n, rank, doc.kernel_dim, idempotent);
            if let Some(e) = equals {
                text.push_str(&format!("pi = (1+Q)/2: {e}\n"));
            }
            Ok(Emitted { json: to_json(&doc)?, text, ok })
        }
        Command::Eval { expr, .. } => {
            let x: QScalar = expr.parse().map_err(|e: Error| match e {
                Error::DivisionByZero => Error::Parse(format!("{expr:?} divides by zero")),
                other => other,
            })?;
            let at_one = x.eval_at_one().ok().map(|r| r.to_string());
            let text = format!("{x}\nat q=1: {}\n", at_one.as_deref().unwrap_or("not regular at q=1"));
            Ok(Emitted { json: to_json(&EvalDoc { input: expr.clone(), canonical: x, at_one })?, text, ok: true })
        }
        Command::ExportGoldens { out } => {
            let dir = out.clone().unwrap_or_else(|| PathBuf::from("goldens"));
            let files = export_goldens(&dir)?;
            let text: String = files.iter().map(|p| format!("{}\n", p.display())).collect();
            let json = to_json(&files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>())?;
            Ok(Emitted { json, text, ok: true })
        }
    }
}

fn output_of(cmd: &Command) -> Option<&Output> {
    match cmd {
        Command::Threej { output, .. }
        | Command::StructureConstants { output, .. }
        | Command::HopfCheck { output, .. }
        | Command::SchurWeyl { output, .. }
        | Command::Frt { output, .. }
        | Command::Pi { output, .. }
        | Command::Eval { output, .. } => Some(output),
        Command::ExportGoldens { .. } => None,
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(e, Error::InvalidLabel(_) | Error::InvalidArgument(_) | Error::Parse(_) | Error::AlgebraMismatch(..))
}

/// Runs one invocation and returns the process exit status. Usage errors
/// give 2 and failed checks give 1.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let emitted = match execute(&cli.command) {
        Ok(e) => e,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return if is_usage_error(&e) { 2 } else { 1 };
        }
    };
    let (body, target) = match output_of(&cli.command) {
        Some(o) => (if o.format == Format::Json { &emitted.json } else { &emitted.text }, o.out.as_ref()),
        None => (&emitted.text, None),
    };
    let written = match target {
        Some(path) => fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 1;
    }
    if !emitted.ok {
        let _ = writeln!(stderr, "verification failed");
        if target.is_some() || output_of(&cli.command).map(|o| o.format) == Some(Format::Json) {
            let _ = stderr.write_all(emitted.text.as_bytes());
        }
        return 1;
    }
    0
}
