use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qtangent::calculus::Check;
use qtangent::field::parse_rational;
use qtangent::group::{group_from_spec, FiniteGroup, GroupSpec, DEFAULT_CAP};
use qtangent::hopf::{HopfElement, Side};
use qtangent::uq::QCheck;
use qtangent::Rational;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "qtangent", version, about = "Bicovariant differential calculi on finite groups and U_q(sl2), in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify the coirreducible calculi of a group on one side.
    Classify(GroupArgs),
    /// Run the verification suite on every classified calculus, plus the
    /// inner/central/mirror cross-checks, or on a tangent space from a file.
    Verify(GroupArgs),
    /// Run the U_q(sl2) spin-1/2 checks.
    Qsuite(QsuiteArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideArg {
    #[value(name = "functions")]
    Functions,
    #[value(name = "group_algebra")]
    GroupAlgebra,
    #[value(name = "both")]
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Report file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Reserved. Every algorithm is deterministic, so setting it is an error.
    #[arg(long)]
    pub seed_free: bool,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// `preset:<name>` (Z4, S3, A4, D5, Q8, V4, ...) or a JSON group spec file.
    #[arg(long)]
    pub group: String,
    /// Defaults to functions for classify and both for verify.
    #[arg(long, value_enum)]
    pub side: Option<SideArg>,
    /// Comma-separated subset of stability,leibniz,bracket,jacobi,ybe,bimodule,surjectivity,inner.
    #[arg(long)]
    pub checks: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// JSON tangent space to verify instead of the classified calculi.
    #[arg(long)]
    pub tangent_file: Option<PathBuf>,
    /// Group-side lambda-hat, e.g. "()=1;(1,2)=1".
    #[arg(long)]
    pub lambda: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct QsuiteArgs {
    /// Comma-separated subset of consistency,dual_route,qlier,lc,qtrace,classical_limit.
    #[arg(long, alias = "checks")]
    pub check: Option<String>,
    /// Largest word length in the q-trace check.
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Preset(String),
    File(PathBuf),
}

/// Validated settings for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub group: Option<GroupSource>,
    pub side: SideArg,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub checks: Vec<Check>,
    pub qchecks: Vec<QCheck>,
    pub max_degree: usize,
    pub cap: usize,
    pub tangent_file: Option<PathBuf>,
    pub lambda: Option<String>,
}

fn reject_seed(o: &OutputArgs) -> Result<()> {
    if o.seed_free {
        bail!("--seed-free is reserved: all algorithms are deterministic and take no seed");
    }
    Ok(())
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

impl RunConfig {
    pub fn from_group_args(a: &GroupArgs, default_side: SideArg) -> Result<Self> {
        reject_seed(&a.output)?;
        let group = match a.group.strip_prefix("preset:") {
            Some(name) => GroupSource::Preset(name.to_string()),
            None => GroupSource::File(PathBuf::from(&a.group)),
        };
        let checks = match &a.checks {
            None => Check::ALL.to_vec(),
            Some(s) => {
                let v = split_list(s)
                    .map(|t| Check::parse(t).ok_or_else(|| anyhow!("unknown check {t:?}")))
                    .collect::<Result<Vec<_>>>()?;
                if v.is_empty() {
                    bail!("--checks selects nothing");
                }
                v
            }
        };
        if a.cap == 0 {
            bail!("--cap must be positive");
        }
        Ok(RunConfig {
            group: Some(group),
            side: a.side.unwrap_or(default_side),
            out: a.output.out.clone(),
            format: a.output.format,
            checks,
            qchecks: Vec::new(),
            max_degree: 1,
            cap: a.cap,
            tangent_file: a.tangent_file.clone(),
            lambda: a.lambda.clone(),
        })
    }

    pub fn from_qsuite_args(a: &QsuiteArgs) -> Result<Self> {
        reject_seed(&a.output)?;
        if a.max_degree < 1 {
            bail!("--max-degree must be at least 1");
        }
        let qchecks = match &a.check {
            None => QCheck::ALL.to_vec(),
            Some(s) => {
                let mut v = split_list(s)
                    .map(|t| QCheck::parse(t).ok_or_else(|| anyhow!("unknown q-check {t:?}")))
                    .collect::<Result<Vec<_>>>()?;
                v.sort();
                v.dedup();
                if v.is_empty() {
                    bail!("--check selects nothing");
                }
                v
            }
        };
        Ok(RunConfig {
            group: None,
            side: SideArg::Both,
            out: a.output.out.clone(),
            format: a.output.format,
            checks: Vec::new(),
            qchecks,
            max_degree: a.max_degree,
            cap: DEFAULT_CAP,
            tangent_file: None,
            lambda: None,
        })
    }

    pub fn load_group(&self) -> Result<FiniteGroup> {
        let spec = match self.group.as_ref().expect("group commands carry a source") {
            GroupSource::Preset(name) => GroupSpec::from_short(name)?,
            GroupSource::File(path) => read_json::<GroupSpec>(path, "group spec")?,
        };
        Ok(group_from_spec(&spec, self.cap)?)
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {what} {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("malformed {what} {}", path.display()))
}

/// Parses "elem=coef;elem=coef" with cycle-notation elements and rational
/// coefficients into an element of the given side.
pub fn parse_combination(g: &FiniteGroup, side: Side, s: &str) -> Result<HopfElement<Rational>> {
    let mut out = HopfElement::zero(side);
    for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (elem, coef) = item.split_once('=').ok_or_else(|| anyhow!("expected element=coefficient, got {item:?}"))?;
        let idx = g.parse_element(elem.trim())?;
        let c = parse_rational(coef.trim()).ok_or_else(|| anyhow!("bad coefficient {coef:?}"))?;
        out.add_term(idx, c);
    }
    if out.is_zero() {
        bail!("empty combination {s:?}");
    }
    Ok(out)
}

/// Tangent space file: `{"side": "functions", "elements": ["(1,2)=1;()=-1", ...]}`.
/// Elements live in H: group elements for the functions side, delta
/// functions (named by their group element) for the group_algebra side.
#[derive(serde::Deserialize, Debug)]
pub struct TangentFile {
    pub side: String,
    pub elements: Vec<String>,
}
