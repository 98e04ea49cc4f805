//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | bad arguments or unparsable input |
//! | 2 | a generator is not orthogonal |
//! | 3 | the surface relation is violated |
//! | 4 | invalid invariant class |
//! | 5 | a closed formula failed to evaluate exactly |

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{self, ClassifyError, FinAbGroup, GroupAction, LiftTarget};
use crate::construct::{self, ConstructError};
use crate::linalg::RatMatrix;
use crate::poincare::{self, IntPolynomial, PolyError};
use crate::surfrep::{generator_name, InvariantClass, Mu1, Mu2Value, SurfRepError, SurfaceRep};
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_ORTHOGONAL: i32 = 2;
pub const EXIT_RELATION: i32 = 3;
pub const EXIT_INVALID_CLASS: i32 = 4;
pub const EXIT_FORMULA: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "pglrep",
    version,
    about = "Topological invariants of surface group representations in PGL(n,R)"
)]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute delta1, delta2, tilde-delta and (mu1, mu2) of a representation file
    Invariants { path: PathBuf },
    /// Build a representation with prescribed invariants
    Construct {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu1: String,
        #[arg(long)]
        mu2: String,
        /// Output file; the representation is printed when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List all (mu1, mu2) classes
    Classify {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        n: usize,
    },
    /// Connected components of the PGL(n,R) representation space
    Components {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        n: usize,
    },
    /// Connected components of the EGL(n,R)-Higgs moduli space in degree 0 or 1
    EglComponents {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: i64,
    },
    /// Poincare polynomials of the SO(3) and SL(3,R) representation spaces
    Poincare {
        #[arg(long)]
        w2: u8,
        #[arg(long)]
        genus: usize,
    },
    /// Which of SO(n), Spin(n), Pin(n), O(n) a class lifts to
    LiftCheck {
        #[arg(long)]
        mu1: String,
        #[arg(long)]
        mu2: String,
    },
    /// Classify bundles via (pi1 / Gamma) / pi0, for PO(n) or a group file
    BundleClassify {
        /// Use the PO(n) data for this even n
        #[arg(long, conflicts_with = "group")]
        n: Option<usize>,
        /// Any non-zero bit puts the non-identity component in the image of mu1
        #[arg(long, conflicts_with = "group")]
        mu1: Option<String>,
        /// JSON file with pi0, pi1, action and mu1_image
        #[arg(long)]
        group: Option<PathBuf>,
    },
}

/// A single matrix entry: an integer or a string `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Str(String),
}

/// On-disk representation: `n`, `genus` and `2 genus` matrices as row lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub n: usize,
    pub genus: usize,
    pub generators: Vec<Vec<Vec<Entry>>>,
}

/// Failure with an exit code and a one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self::new(EXIT_USAGE, message)
    }
}

impl From<SurfRepError> for CliError {
    fn from(e: SurfRepError) -> Self {
        let code = match e {
            SurfRepError::NotOrthogonal { .. } => EXIT_NOT_ORTHOGONAL,
            SurfRepError::RelationViolated => EXIT_RELATION,
            SurfRepError::InvalidClass => EXIT_INVALID_CLASS,
            _ => EXIT_USAGE,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::SurfRep(inner) => inner.into(),
            ConstructError::InvalidClass(_) => CliError::new(EXIT_INVALID_CLASS, e.to_string()),
            ConstructError::Mismatch { .. } => CliError::new(EXIT_FORMULA, e.to_string()),
            ConstructError::BadDimension { .. } => CliError::usage(e.to_string()),
        }
    }
}

fn parse_entry(entry: &Entry) -> Result<Rational, String> {
    match entry {
        Entry::Int(x) => Ok(Rational::from_integer((*x).into())),
        Entry::Str(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|_| format!("invalid rational {s:?}")),
    }
}

impl RepFile {
    pub fn from_rep(rep: &SurfaceRep) -> Self {
        RepFile {
            n: rep.dim(),
            genus: rep.genus(),
            generators: rep
                .generators()
                .iter()
                .map(|m| {
                    m.rows()
                        .map(|row| row.iter().map(|x| Entry::Str(x.to_string())).collect())
                        .collect()
                })
                .collect(),
        }
    }

    /// Parses entries and checks shapes (exit 1), then builds the
    /// representation (exit 2 or 3 on failure).
    pub fn to_rep(&self) -> Result<SurfaceRep, CliError> {
        if self.generators.len() != 2 * self.genus {
            return Err(CliError::usage(format!(
                "expected {} generators for genus {}, found {}",
                2 * self.genus,
                self.genus,
                self.generators.len()
            )));
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for (k, rows) in self.generators.iter().enumerate() {
            let name = generator_name(k);
            if rows.len() != self.n {
                return Err(CliError::usage(format!(
                    "generator {name} has {} rows, expected {}",
                    rows.len(),
                    self.n
                )));
            }
            let mut parsed = Vec::with_capacity(self.n);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != self.n {
                    return Err(CliError::usage(format!(
                        "generator {name}, row {}: {} entries, expected {}",
                        i + 1,
                        row.len(),
                        self.n
                    )));
                }
                let values = row
                    .iter()
                    .enumerate()
                    .map(|(j, e)| {
                        parse_entry(e).map_err(|msg| {
                            CliError::usage(format!(
                                "generator {name}, row {}, column {}: {msg}",
                                i + 1,
                                j + 1
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                parsed.push(values);
            }
            gens.push(RatMatrix::from_rows(parsed).map_err(|e| CliError::usage(e.to_string()))?);
        }
        Ok(SurfaceRep::new(self.genus, self.n, gens)?)
    }
}

pub fn read_rep_file(path: &std::path::Path) -> Result<SurfaceRep, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let file: RepFile = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("cannot parse {}: {e}", path.display())))?;
    file.to_rep()
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn emit(out: &mut dyn Write, text: String) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::usage(format!("write failed: {e}")))
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("json values serialize");
    emit(out, format!("{text}\n"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Invariants { path } => cmd_invariants(path, format, out),
        Command::Construct {
            genus,
            n,
            mu1,
            mu2,
            out: path,
        } => cmd_construct(*genus, *n, mu1, mu2, path.as_deref(), format, out),
        Command::Classify { genus, n } => cmd_classify(*genus, *n, format, out),
        Command::Components { genus, n } => cmd_components(*genus, *n, format, out),
        Command::EglComponents { genus, n, deg } => {
            cmd_egl_components(*genus, *n, *deg, format, out)
        }
        Command::Poincare { w2, genus } => cmd_poincare(*w2, *genus, format, out),
        Command::LiftCheck { mu1, mu2 } => cmd_lift_check(mu1, mu2, format, out),
        Command::BundleClassify { n, mu1, group } => {
            cmd_bundle_classify(*n, mu1.as_deref(), group.as_deref(), format, out)
        }
    }
}

fn cmd_invariants(
    path: &std::path::Path,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let rep = read_rep_file(path)?;
    let delta1 = rep.delta1();
    let delta2 = rep.delta2()?;
    let tilde = if delta1.is_zero() {
        Some(rep.tilde_delta()?)
    } else {
        None
    };
    let class = rep.invariants()?;
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "delta1": delta1.to_string(),
                "delta2": delta2.to_string(),
                "tilde_delta": tilde.map(|t| t.to_string()),
                "mu1": class.mu1().to_string(),
                "mu2": class.mu2().to_string(),
            }),
        ),
        Format::Text => {
            let mut s = format!("delta1: {delta1}\ndelta2: {delta2}\n");
            if let Some(t) = tilde {
                s += &format!("tilde_delta: {t}\n");
            }
            s += &format!("mu1: {}\nmu2: {}\n", class.mu1(), class.mu2());
            emit(out, s)
        }
    }
}

fn parse_class(genus: usize, mu1: &str, mu2: &str) -> Result<InvariantClass, CliError> {
    let mu1: Mu1 = mu1.parse().map_err(|e| CliError::usage(format!("{e}")))?;
    let mu2: Mu2Value = mu2.parse().map_err(|e| CliError::usage(format!("{e}")))?;
    if mu1.len() != 2 * genus {
        return Err(CliError::new(
            EXIT_INVALID_CLASS,
            format!("mu1 has {} bits, expected {}", mu1.len(), 2 * genus),
        ));
    }
    InvariantClass::new(mu1, mu2).map_err(CliError::from)
}

fn cmd_construct(
    genus: usize,
    n: usize,
    mu1: &str,
    mu2: &str,
    path: Option<&std::path::Path>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let target = parse_class(genus, mu1, mu2)?;
    let rep = construct::build_representation(genus, n, &target)?;
    let file = serde_json::to_string_pretty(&RepFile::from_rep(&rep)).expect("serializable");
    match path {
        None => emit(out, format!("{file}\n")),
        Some(p) => {
            fs::write(p, format!("{file}\n"))
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", p.display())))?;
            match format {
                Format::Json => emit_json(
                    out,
                    &json!({
                        "path": p.display().to_string(),
                        "mu1": target.mu1().to_string(),
                        "mu2": target.mu2().to_string(),
                    }),
                ),
                Format::Text => emit(out, format!("wrote {}: {}\n", p.display(), target)),
            }
        }
    }
}

fn cmd_classify(
    genus: usize,
    n: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let classes = classify::invariant_classes(genus, n)?;
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "genus": genus,
                "n": n,
                "count": classes.len(),
                "classes": classes
                    .iter()
                    .map(|c| json!({"mu1": c.mu1().to_string(), "mu2": c.mu2().to_string()}))
                    .collect::<Vec<_>>(),
            }),
        ),
        Format::Text => {
            let mut s = format!("# genus={genus} n={n} classes={}\n", classes.len());
            for c in &classes {
                s += &format!("{} {}\n", c.mu1(), c.mu2());
            }
            emit(out, s)
        }
    }
}

fn cmd_components(
    genus: usize,
    n: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let total = classify::component_count(n, genus)?;
    // Per-class multiplicities are only available for even n >= 4.
    let report = if n >= 4 && n.is_multiple_of(2) {
        let r = classify::pgl_component_report(n, genus)?;
        if r.total as u128 != total {
            return Err(CliError::new(
                EXIT_FORMULA,
                format!(
                    "per-class sum {} differs from the closed formula {total}",
                    r.total
                ),
            ));
        }
        Some(r)
    } else {
        None
    };
    match format {
        Format::Json => {
            let rows = report.as_ref().map(|r| {
                r.rows
                    .iter()
                    .map(|(c, m)| {
                        json!({"mu1": c.mu1().to_string(), "mu2": c.mu2().to_string(), "components": m})
                    })
                    .collect::<Vec<_>>()
            });
            emit_json(
                out,
                &json!({"genus": genus, "n": n, "classes": rows, "total": total.to_string()}),
            )
        }
        Format::Text => {
            let mut s = format!("# genus={genus} n={n}\n");
            if let Some(r) = &report {
                for (c, m) in &r.rows {
                    s += &format!("{} {} {m}\n", c.mu1(), c.mu2());
                }
            }
            s += &format!("total {total}\n");
            emit(out, s)
        }
    }
}

fn cmd_egl_components(
    genus: usize,
    n: usize,
    deg: i64,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let r = classify::egl_component_counts(deg, genus, n)?;
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "genus": genus,
                "n": n,
                "deg": deg,
                "classes": r.rows.iter().map(|row| json!({
                    "class": row.class.to_string(),
                    "components": row.components,
                    "fibre_components": row.fibre_components,
                })).collect::<Vec<_>>(),
                "total": r.total,
                "fibre_total": r.fibre_total,
            }),
        ),
        Format::Text => {
            let mut s =
                format!("# genus={genus} n={n} deg={deg}: class components fibre_components\n");
            for row in &r.rows {
                s += &format!(
                    "{} {} {}\n",
                    row.class, row.components, row.fibre_components
                );
            }
            s += &format!("total {}\nfibre_total {}\n", r.total, r.fibre_total);
            emit(out, s)
        }
    }
}

fn coeff_json(p: &IntPolynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| match c.to_i64() {
                Some(x) => json!(x),
                None => json!(c.to_string()),
            })
            .collect(),
    )
}

fn coeff_text(p: &IntPolynomial) -> String {
    p.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_poincare(w2: u8, genus: usize, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let w2 = match w2 {
        0 => false,
        1 => true,
        other => return Err(CliError::usage(format!("w2 must be 0 or 1, got {other}"))),
    };
    let fail = |e: PolyError| match e {
        PolyError::BadGenus(_) => CliError::usage(e.to_string()),
        _ => {
            let remainder = poincare::so3_numerator(w2, genus)
                .and_then(|num| num.div_rem(&poincare::so3_denominator()))
                .map(|(_, r)| r.to_string())
                .unwrap_or_default();
            CliError::new(
                EXIT_FORMULA,
                format!("SO(3) numerator for w2={} is not divisible by (1-t^2)(1-t^4); remainder {remainder}", w2 as u8),
            )
        }
    };
    let so3 = poincare::pt_so3(w2, genus).map_err(fail)?;
    let sl3 = poincare::pt_sl3(w2, genus).map_err(fail)?;
    match format {
        Format::Json => emit_json(
            out,
            &json!({"w2": w2 as u8, "genus": genus, "so3": coeff_json(&so3), "sl3": coeff_json(&sl3)}),
        ),
        Format::Text => emit(
            out,
            format!(
                "so3: {}\nsl3: {}\n# so3 = {so3}\n# sl3 = {sl3}\n",
                coeff_text(&so3),
                coeff_text(&sl3)
            ),
        ),
    }
}

fn cmd_lift_check(
    mu1: &str,
    mu2: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let parsed: Mu1 = mu1.parse().map_err(|e| CliError::usage(format!("{e}")))?;
    if !parsed.len().is_multiple_of(2) || parsed.len() < 4 {
        return Err(CliError::new(
            EXIT_INVALID_CLASS,
            format!("mu1 must have 2g >= 4 bits, got {}", parsed.len()),
        ));
    }
    let class = parse_class(parsed.len() / 2, mu1, mu2)?;
    let answers: Vec<(LiftTarget, Option<bool>)> = LiftTarget::ALL
        .iter()
        .map(|&t| {
            let a = match classify::lifts_to(&class, t) {
                Ok(b) => Some(b),
                Err(ClassifyError::TargetInvalidForClass { .. }) => None,
                Err(e) => return Err(CliError::from(e)),
            };
            Ok((t, a))
        })
        .collect::<Result<_, _>>()?;
    match format {
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("class".into(), json!(class.to_string()));
            for (t, a) in &answers {
                map.insert(t.to_string(), json!(a));
            }
            emit_json(out, &Value::Object(map))
        }
        Format::Text => {
            let mut s = format!("class {class}\n");
            for (t, a) in &answers {
                let word = match a {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "n/a",
                };
                s += &format!("{t}: {word}\n");
            }
            emit(out, s)
        }
    }
}

/// Input for `bundle-classify --group`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub pi0: Vec<u64>,
    pub pi1: Vec<u64>,
    /// `action[k][j]`: image of the `j`-th generator of pi1 under the `k`-th
    /// generator of pi0.
    pub action: Vec<Vec<Vec<u64>>>,
    pub mu1_image: Vec<Vec<u64>>,
}

fn cmd_bundle_classify(
    n: Option<usize>,
    mu1: Option<&str>,
    group: Option<&std::path::Path>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (action, image, po_dim) = match (n, group) {
        (Some(n), None) => {
            let nonzero = match mu1 {
                Some(bits) => !bits
                    .parse::<Mu1>()
                    .map_err(|e| CliError::usage(format!("{e}")))?
                    .is_zero(),
                None => false,
            };
            let image = if nonzero {
                vec![vec![0], vec![1]]
            } else {
                vec![vec![0]]
            };
            (classify::po_action(n)?, image, Some(n))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            let g: GroupFile = serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("cannot parse {}: {e}", path.display())))?;
            let pi0 = FinAbGroup::new(g.pi0)?;
            let pi1 = FinAbGroup::new(g.pi1)?;
            (GroupAction::new(&pi0, &pi1, g.action)?, g.mu1_image, None)
        }
        _ => return Err(CliError::usage("give exactly one of --n or --group")),
    };
    let gamma = classify::gamma_subgroup(&action, &image)?;
    let reps = classify::classify_bundles(&action, &image)?;
    let label = |x: &Vec<u64>| po_dim.map(|n| classify::po_kernel_label(n, x).to_string());
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "gamma": gamma,
                "classes": reps.iter().map(|x| json!({"element": x, "label": label(x)})).collect::<Vec<_>>(),
                "count": reps.len(),
            }),
        ),
        Format::Text => {
            let fmt_elem = |x: &Vec<u64>| {
                let coords = x
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                match label(x) {
                    Some(l) => format!("({coords}) {l}"),
                    None => format!("({coords})"),
                }
            };
            let mut s = format!(
                "gamma: {}\n",
                gamma.iter().map(&fmt_elem).collect::<Vec<_>>().join(" ")
            );
            s += &format!("classes {}\n", reps.len());
            for x in &reps {
                s += &format!("{}\n", fmt_elem(x));
            }
            emit(out, s)
        }
    }
}
