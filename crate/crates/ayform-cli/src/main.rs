//! Command-line front end: family enumeration, matrix and character
//! emission, homotopy character curves, and the verification suites.
//!
//! Exit codes: 0 success, 1 a verification item failed, 2 usage error.
//! Reports go to stdout; diagnostics to stderr.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use ayform::cells::{cell_via_tableaux, Cell};
use ayform::homotopy::{verify_decomposition, verify_decomposition_b, HomotopyFamily};
use ayform::rep::{
    build_representation, characters_equal, induce_classical, specht_yof, Normalization,
    Representation,
};
use ayform::scalar::{Rat, Scalar};
use ayform::shapes::partitions;
use ayform::tableaux::enumerate_family;
use ayform::{
    FamilySpec, GroupFamily, GroupKind, Parabolic, Sign, SignedPermutation, SkewShape, Variant,
};

#[derive(Parser)]
#[command(name = "ayform", version, about = "Signed Young tableaux and their representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a tableau family.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit the generator matrices of a family representation.
    Matrices {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        norm: NormArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit the character of a family representation.
    Character {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        norm: NormArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sample homotopy character curves as CSV (element,x,trace).
    Curves {
        /// Outer partition of λ, comma-separated.
        #[arg(long)]
        shape: String,
        /// Inner partition for skew λ.
        #[arg(long)]
        inner: Option<String>,
        /// Family sign: + or -.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
        /// Sample points, comma-separated reals ≥ -1.
        #[arg(long, default_value = "-1,-0.5,0,0.7,1,2.5", allow_hyphen_values = true)]
        xs: String,
        /// Restrict to one element (window notation); default all of D_n.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Run a verification suite and report pass/fail per item.
    Verify {
        #[command(flatten)]
        args: VerifyArgs,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Group family: B or D.
    #[arg(long)]
    group: String,
    /// Rank; must match the box count of the shape.
    #[arg(long)]
    n: Option<usize>,
    /// Outer partition, comma-separated weakly decreasing integers.
    #[arg(long)]
    shape: String,
    /// Inner partition for skew shapes.
    #[arg(long)]
    inner: Option<String>,
    /// Family variant: m, vbar, hbar, box, zero.
    #[arg(long)]
    variant: String,
    /// Lower-left content for the m variant.
    #[arg(long)]
    m: Option<u32>,
    /// Sign + or - (type D, all variants except box).
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
}

#[derive(Args)]
struct NormArgs {
    /// orthogonal (float) or stochastic (exact by default).
    #[arg(long, default_value = "stochastic")]
    normalization: String,
    /// Scalar backend: rational or float.
    #[arg(long)]
    backend: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// json or pretty.
    #[arg(long, default_value = "json")]
    format: Format,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Args)]
struct VerifyArgs {
    /// relations, induction, decomposition, cells, counts, or homotopy.
    suite: Suite,
    /// Restrict to one group family.
    #[arg(long)]
    group: Option<String>,
    /// Restrict to one rank.
    #[arg(long)]
    n: Option<usize>,
    /// Rank sweep bound when --n is absent.
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Restrict to one shape.
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    inner: Option<String>,
    /// Restrict to one variant.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    #[arg(long)]
    m: Option<u32>,
    /// Homotopy sample grid.
    #[arg(long, default_value = "-1,-0.5,0,0.7,1,2.5", allow_hyphen_values = true)]
    grid: String,
    /// RNG seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample count for the rank-4 cell check.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Suite {
    Relations,
    Induction,
    Decomposition,
    Cells,
    Counts,
    Homotopy,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Induction => "induction",
            Suite::Decomposition => "decomposition",
            Suite::Cells => "cells",
            Suite::Counts => "counts",
            Suite::Homotopy => "homotopy",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate { family, out } => {
            let spec = family.to_spec()?;
            let tableaux = enumerate_family(&spec)?;
            let text = match out.format {
                Format::Json => {
                    let items: Vec<serde_json::Value> =
                        tableaux.iter().map(|t| t.to_json()).collect();
                    serde_json::to_string_pretty(&json!({
                        "family": spec.to_string(),
                        "count": tableaux.len(),
                        "tableaux": items,
                    }))?
                }
                Format::Pretty => {
                    let mut s = format!("{spec}: {} tableaux\n", tableaux.len());
                    for t in &tableaux {
                        s.push('\n');
                        s.push_str(&t.render());
                    }
                    s
                }
            };
            write_out(&out.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrices { family, norm, out } => {
            let spec = family.to_spec()?;
            let (normalization, backend) = norm.resolve()?;
            let value = match backend {
                Backend::Rational => {
                    matrices_json::<Rat>(&spec, normalization, backend)?
                }
                Backend::Float => matrices_json::<f64>(&spec, normalization, backend)?,
            };
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&value)?,
                Format::Pretty => pretty_matrices(&value),
            };
            write_out(&out.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Character { family, norm, out } => {
            let spec = family.to_spec()?;
            let (normalization, backend) = norm.resolve()?;
            let value = match backend {
                Backend::Rational => character_json::<Rat>(&spec, normalization)?,
                Backend::Float => character_json::<f64>(&spec, normalization)?,
            };
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&value)?,
                Format::Pretty => pretty_character(&value),
            };
            write_out(&out.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Curves {
            shape,
            inner,
            sign,
            xs,
            element,
            output,
        } => {
            let shape = parse_shape(&shape, inner.as_deref())?;
            let sign = parse_sign(&sign)?;
            let xs = parse_grid(&xs)?;
            let fam = HomotopyFamily::new(shape, sign)?;
            let group = fam.group();
            let elements: Vec<SignedPermutation> = match element {
                Some(w) => vec![SignedPermutation::parse(&w)?],
                None => group.enumerate()?,
            };
            let mut csv = String::from("element,x,trace\n");
            for w in &elements {
                let curve = fam.character_curve(w, &xs)?;
                for (x, tr) in xs.iter().zip(curve) {
                    csv.push_str(&format!("\"{w}\",{x},{tr}\n"));
                }
            }
            write_out(&output, &csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { args } => {
            let items = run_suite(&args)?;
            let ok = items.iter().all(|i| i.ok);
            let value = json!({
                "suite": args.suite.name(),
                "ok": ok,
                "items": items.iter().map(Item::to_json).collect::<Vec<_>>(),
            });
            write_out(&args.output, &serde_json::to_string_pretty(&value)?)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Backend {
    Rational,
    Float,
}

impl Backend {
    fn name(self) -> &'static str {
        match self {
            Backend::Rational => "rational",
            Backend::Float => "float",
        }
    }
}

impl NormArgs {
    fn resolve(&self) -> Result<(Normalization, Backend)> {
        let normalization = match self.normalization.as_str() {
            "orthogonal" => Normalization::Orthogonal,
            "stochastic" => Normalization::Stochastic,
            other => bail!("unknown normalization {other:?}"),
        };
        let backend = match self.backend.as_deref() {
            None => match normalization {
                Normalization::Orthogonal => Backend::Float,
                Normalization::Stochastic => Backend::Rational,
            },
            Some("rational") => Backend::Rational,
            Some("float") => Backend::Float,
            Some(other) => bail!("unknown backend {other:?}"),
        };
        if normalization == Normalization::Orthogonal && backend == Backend::Rational {
            bail!("the orthogonal normalization needs the float backend");
        }
        Ok((normalization, backend))
    }
}

impl FamilyArgs {
    fn to_spec(&self) -> Result<FamilySpec> {
        let shape = parse_shape(&self.shape, self.inner.as_deref())?;
        if let Some(n) = self.n {
            if n != shape.size() {
                bail!("--n {} does not match the {}-box shape", n, shape.size());
            }
        }
        let kind = parse_group(&self.group)?;
        let variant = match self.variant.as_str() {
            "m" => Variant::M(self.m.ok_or_else(|| anyhow!("--variant m needs --m"))?),
            "vbar" => Variant::VBar,
            "hbar" => Variant::HBar,
            "box" => Variant::Boxed,
            "zero" => Variant::Zero,
            other => bail!("unknown variant {other:?}"),
        };
        let sign = self.sign.as_deref().map(parse_sign).transpose()?;
        Ok(FamilySpec::new(kind, shape, variant, sign)?)
    }
}

fn parse_group(s: &str) -> Result<GroupKind> {
    match s {
        "B" | "b" => Ok(GroupKind::B),
        "D" | "d" => Ok(GroupKind::D),
        other => bail!("unknown group {other:?} (expected B or D)"),
    }
}

fn parse_sign(s: &str) -> Result<Sign> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        other => bail!("unknown sign {other:?} (expected + or -)"),
    }
}

fn parse_shape(outer: &str, inner: Option<&str>) -> Result<SkewShape> {
    let parse_parts = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .map(|p| p.trim().parse::<usize>().context("bad partition part"))
            .collect()
    };
    let outer = parse_parts(outer)?;
    let inner = inner.map(parse_parts).transpose()?.unwrap_or_default();
    Ok(SkewShape::new(outer, inner)?)
}

fn parse_grid(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|p| p.trim().parse::<f64>().context("bad grid point"))
        .collect()
}

fn write_out(path: &Option<std::path::PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

fn matrices_json<S: Scalar>(
    spec: &FamilySpec,
    norm: Normalization,
    backend: Backend,
) -> Result<serde_json::Value> {
    let rep: Representation<S> = build_representation(spec, norm)?;
    let gens: Vec<serde_json::Value> = rep
        .gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let rows: Vec<Vec<serde_json::Value>> = g
                .dense()
                .to_rows()
                .into_iter()
                .map(|row| row.into_iter().map(|v| scalar_json(&v)).collect())
                .collect();
            json!({ "generator": format!("s{i}"), "matrix": rows })
        })
        .collect();
    Ok(json!({
        "family": spec.to_string(),
        "normalization": norm.to_string(),
        "backend": backend.name(),
        "dim": rep.dim(),
        "generators": gens,
    }))
}

fn character_json<S: Scalar>(
    spec: &FamilySpec,
    norm: Normalization,
) -> Result<serde_json::Value> {
    let rep: Representation<S> = build_representation(spec, norm)?;
    let chi = rep.character()?;
    let values: Vec<serde_json::Value> = chi
        .values
        .iter()
        .map(|(w, v)| json!({ "element": w.to_string(), "value": scalar_json(v) }))
        .collect();
    Ok(json!({
        "family": spec.to_string(),
        "normalization": norm.to_string(),
        "dim": rep.dim(),
        "values": values,
    }))
}

fn scalar_json<S: Scalar>(v: &S) -> serde_json::Value {
    if S::EXACT {
        json!(v.render())
    } else {
        json!(v.to_f64())
    }
}

fn pretty_matrices(value: &serde_json::Value) -> String {
    let mut s = format!(
        "{} ({}, dim {})\n",
        value["family"].as_str().unwrap_or(""),
        value["normalization"].as_str().unwrap_or(""),
        value["dim"]
    );
    for g in value["generators"].as_array().into_iter().flatten() {
        s.push_str(&format!("\n{}:\n", g["generator"].as_str().unwrap_or("")));
        for row in g["matrix"].as_array().into_iter().flatten() {
            let cells: Vec<String> = row
                .as_array()
                .into_iter()
                .flatten()
                .map(render_json_scalar)
                .collect();
            s.push_str(&format!("  [{}]\n", cells.join(", ")));
        }
    }
    s
}

fn pretty_character(value: &serde_json::Value) -> String {
    let mut s = format!("character of {}\n", value["family"].as_str().unwrap_or(""));
    for item in value["values"].as_array().into_iter().flatten() {
        s.push_str(&format!(
            "  {:<16} {}\n",
            item["element"].as_str().unwrap_or(""),
            render_json_scalar(&item["value"])
        ));
    }
    s
}

fn render_json_scalar(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One verification item of a suite report.
struct Item {
    key: String,
    ok: bool,
    residual: Option<f64>,
    expected: Option<String>,
    got: Option<String>,
}

impl Item {
    fn check(key: String, ok: bool) -> Item {
        Item {
            key,
            ok,
            residual: None,
            expected: None,
            got: None,
        }
    }

    fn with_residual(mut self, r: f64) -> Item {
        self.residual = Some(r);
        self
    }

    fn with_values(mut self, expected: String, got: String) -> Item {
        self.expected = Some(expected);
        self.got = Some(got);
        self
    }

    fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("key".into(), json!(self.key));
        map.insert("ok".into(), json!(self.ok));
        if let Some(r) = self.residual {
            map.insert("residual".into(), json!(r));
        }
        if let Some(e) = &self.expected {
            map.insert("expected".into(), json!(e));
        }
        if let Some(g) = &self.got {
            map.insert("got".into(), json!(g));
        }
        serde_json::Value::Object(map)
    }
}

struct Scope {
    groups: Vec<GroupKind>,
    ns: Vec<usize>,
    shape: Option<SkewShape>,
    variant: Option<Variant>,
    sign: Option<Sign>,
    m: Option<u32>,
}

impl Scope {
    fn from_args(args: &VerifyArgs, default_max: usize) -> Result<Scope> {
        let groups = match &args.group {
            Some(g) => vec![parse_group(g)?],
            None => vec![GroupKind::B, GroupKind::D],
        };
        let max_n = args.max_n.min(default_max.max(args.max_n));
        let ns = match args.n {
            Some(n) => vec![n],
            None => (2..=max_n).collect(),
        };
        let shape = args
            .shape
            .as_deref()
            .map(|s| parse_shape(s, args.inner.as_deref()))
            .transpose()?;
        let variant = args
            .variant
            .as_deref()
            .map(|v| -> Result<Variant> {
                Ok(match v {
                    "m" => Variant::M(args.m.unwrap_or(1)),
                    "vbar" => Variant::VBar,
                    "hbar" => Variant::HBar,
                    "box" => Variant::Boxed,
                    "zero" => Variant::Zero,
                    other => bail!("unknown variant {other:?}"),
                })
            })
            .transpose()?;
        let sign = args.sign.as_deref().map(parse_sign).transpose()?;
        Ok(Scope {
            groups,
            ns,
            shape,
            variant,
            sign,
            m: args.m,
        })
    }

    fn shapes(&self, n: usize) -> Vec<SkewShape> {
        match &self.shape {
            Some(s) if s.size() == n => vec![s.clone()],
            Some(_) => vec![],
            None => partitions(n)
                .into_iter()
                .map(|p| SkewShape::straight(p).expect("valid partition"))
                .collect(),
        }
    }

    /// Families to check for one group and rank, honoring the narrowing
    /// flags.
    fn family_specs(&self, kind: GroupKind, n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for shape in self.shapes(n) {
            if kind == GroupKind::D && shape.size() < 2 {
                continue;
            }
            let variants: Vec<Variant> = match self.variant {
                Some(v) => vec![v],
                None => {
                    let ms = match self.m {
                        Some(m) => vec![Variant::M(m)],
                        None => vec![Variant::M(1), Variant::M(2)],
                    };
                    let mut v = ms;
                    v.extend([Variant::VBar, Variant::HBar]);
                    if kind == GroupKind::D {
                        v.push(Variant::Boxed);
                    }
                    v
                }
            };
            for variant in variants {
                let signs: Vec<Option<Sign>> = match (kind, variant) {
                    (GroupKind::B, _) | (GroupKind::D, Variant::Boxed) => vec![None],
                    (GroupKind::D, _) => match self.sign {
                        Some(s) => vec![Some(s)],
                        None => vec![Some(Sign::Plus), Some(Sign::Minus)],
                    },
                };
                for sign in signs {
                    if let Ok(spec) = FamilySpec::new(kind, shape.clone(), variant, sign) {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }
}

fn run_suite(args: &VerifyArgs) -> Result<Vec<Item>> {
    let mut items = match args.suite {
        Suite::Relations => suite_relations(args)?,
        Suite::Induction => suite_induction(args)?,
        Suite::Decomposition => suite_decomposition(args)?,
        Suite::Cells => suite_cells(args)?,
        Suite::Counts => suite_counts(args)?,
        Suite::Homotopy => suite_homotopy(args)?,
    };
    items.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(items)
}

fn suite_relations(args: &VerifyArgs) -> Result<Vec<Item>> {
    let scope = Scope::from_args(args, 4)?;
    let mut items = Vec::new();
    for &kind in &scope.groups {
        for &n in &scope.ns {
            for spec in scope.family_specs(kind, n) {
                let size = enumerate_family(&spec)?.len();
                if size == 0 || size > 200 {
                    continue;
                }
                let stoch: Representation<Rat> =
                    build_representation(&spec, Normalization::Stochastic)?;
                let report = stoch.verify_coxeter_relations();
                items.push(
                    Item::check(format!("{spec} stochastic"), report.ok)
                        .with_residual(report.worst_residual),
                );
                let orth: Representation<f64> =
                    build_representation(&spec, Normalization::Orthogonal)?;
                let report = orth.verify_coxeter_relations();
                items.push(
                    Item::check(format!("{spec} orthogonal"), report.ok)
                        .with_residual(report.worst_residual),
                );
            }
        }
    }
    Ok(items)
}

fn suite_counts(args: &VerifyArgs) -> Result<Vec<Item>> {
    let scope = Scope::from_args(args, 4)?;
    let mut items = Vec::new();
    for &kind in &scope.groups {
        for &n in &scope.ns {
            for shape in scope.shapes(n) {
                if kind == GroupKind::D && n < 2 {
                    continue;
                }
                let f = shape.count_standard();
                match kind {
                    GroupKind::D => {
                        let expected = (1u64 << (n - 1)) * f;
                        for m in [1u32, 2] {
                            for sign in [Sign::Plus, Sign::Minus] {
                                let spec =
                                    FamilySpec::new(kind, shape.clone(), Variant::M(m), Some(sign))?;
                                let got = enumerate_family(&spec)?.len() as u64;
                                items.push(
                                    Item::check(format!("{spec} = 2^(n-1)·f"), got == expected)
                                        .with_values(expected.to_string(), got.to_string()),
                                );
                            }
                        }
                    }
                    GroupKind::B => {
                        let expected = (1u64 << n) * f;
                        let m_spec = FamilySpec::new(kind, shape.clone(), Variant::M(1), None)?;
                        let got = enumerate_family(&m_spec)?.len() as u64;
                        items.push(
                            Item::check(format!("{m_spec} = 2^n·f"), got == expected)
                                .with_values(expected.to_string(), got.to_string()),
                        );
                        let v = enumerate_family(&FamilySpec::new(
                            kind,
                            shape.clone(),
                            Variant::VBar,
                            None,
                        )?)?
                        .len() as u64;
                        let h = enumerate_family(&FamilySpec::new(
                            kind,
                            shape.clone(),
                            Variant::HBar,
                            None,
                        )?)?
                        .len() as u64;
                        items.push(
                            Item::check(
                                format!("B: #T[{shape},·|·] + #T[{shape},÷] = 2^n·f"),
                                v + h == expected,
                            )
                            .with_values(expected.to_string(), (v + h).to_string()),
                        );
                    }
                }
            }
        }
    }
    Ok(items)
}

fn suite_induction(args: &VerifyArgs) -> Result<Vec<Item>> {
    let scope = Scope::from_args(args, 4)?;
    let ms = match scope.m {
        Some(m) => vec![m],
        None => vec![1, 2],
    };
    let mut items = Vec::new();
    for &kind in &scope.groups {
        for &n in &scope.ns {
            if kind == GroupKind::D && n < 2 {
                continue;
            }
            let family = GroupFamily::new(kind, n)?;
            for shape in scope.shapes(n) {
                let inner = specht_yof::<Rat>(&shape, Normalization::Stochastic)?;
                match kind {
                    GroupKind::D => {
                        for &(sign, parabolic) in
                            &[(Sign::Plus, Parabolic::S1), (Sign::Minus, Parabolic::S0)]
                        {
                            if scope.sign.is_some_and(|s| s != sign) {
                                continue;
                            }
                            let induced = induce_classical(&inner, parabolic, family)?;
                            for &m in &ms {
                                let spec = FamilySpec::new(
                                    kind,
                                    shape.clone(),
                                    Variant::M(m),
                                    Some(sign),
                                )?;
                                let rep: Representation<Rat> =
                                    build_representation(&spec, Normalization::Stochastic)?;
                                let ok = characters_equal(&rep, &induced)?;
                                items.push(Item::check(format!("{spec} ≅ induced"), ok));
                            }
                        }
                    }
                    GroupKind::B => {
                        let induced = induce_classical(&inner, Parabolic::S1, family)?;
                        for &m in &ms {
                            let spec = FamilySpec::new(kind, shape.clone(), Variant::M(m), None)?;
                            let rep: Representation<Rat> =
                                build_representation(&spec, Normalization::Stochastic)?;
                            let ok = characters_equal(&rep, &induced)?;
                            items.push(Item::check(format!("{spec} ≅ induced"), ok));
                        }
                    }
                }
            }
        }
    }
    Ok(items)
}

fn suite_decomposition(args: &VerifyArgs) -> Result<Vec<Item>> {
    let scope = Scope::from_args(args, 4)?;
    let m = scope.m.unwrap_or(1);
    let mut items = Vec::new();
    for &kind in &scope.groups {
        for &n in &scope.ns {
            if kind == GroupKind::D && n < 2 {
                continue;
            }
            for shape in scope.shapes(n) {
                match kind {
                    GroupKind::D => {
                        let signs = match scope.sign {
                            Some(s) => vec![s],
                            None => vec![Sign::Plus, Sign::Minus],
                        };
                        for sign in signs {
                            let ok = verify_decomposition(&shape, sign, m)?;
                            items.push(Item::check(
                                format!("D: ⊠⊕·|·⊕÷ ≅ T[{shape},m={m},{sign}]"),
                                ok,
                            ));
                        }
                    }
                    GroupKind::B => {
                        let ok = verify_decomposition_b(&shape, m)?;
                        items.push(Item::check(format!("B: ·|·⊕÷ ≅ T[{shape},m={m}]"), ok));
                    }
                }
            }
        }
    }
    Ok(items)
}

fn suite_cells(args: &VerifyArgs) -> Result<Vec<Item>> {
    let scope = Scope::from_args(args, 3)?;
    let mut items = Vec::new();
    let check_tableau = |t: &ayform::SignedTableau| -> Result<bool> {
        let family = GroupFamily::new(t.kind(), t.rank())?;
        let via = cell_via_tableaux(t)?;
        let cell = Cell::from_content2(family, t.content2_vector())?;
        Ok(cell.elements == via && cell.is_generic() && cell.is_convex()?)
    };
    // Exhaustive over the small corpus.
    for &n in &scope.ns {
        if n > 3 {
            continue;
        }
        for spec in scope.family_specs(GroupKind::D, n) {
            let tableaux = enumerate_family(&spec)?;
            if tableaux.is_empty() {
                continue;
            }
            let mut ok = true;
            for t in &tableaux {
                ok &= check_tableau(t)?;
            }
            items.push(Item::check(format!("{spec}: cells match tableaux"), ok));
        }
    }
    // Seeded samples at rank 4.
    if scope.ns.contains(&4) || args.n == Some(4) {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let scope4 = Scope {
            groups: vec![GroupKind::D],
            ns: vec![4],
            shape: scope.shape.clone(),
            variant: scope.variant,
            sign: scope.sign,
            m: scope.m,
        };
        let specs = scope4.family_specs(GroupKind::D, 4);
        let pool: Vec<(FamilySpec, Vec<ayform::SignedTableau>)> = specs
            .into_iter()
            .map(|s| enumerate_family(&s).map(|t| (s, t)))
            .collect::<Result<_, _>>()?;
        let pool: Vec<_> = pool.into_iter().filter(|(_, t)| !t.is_empty()).collect();
        let mut ok = true;
        let mut checked = 0usize;
        for _ in 0..args.samples {
            let (_, tableaux) = pool.choose(&mut rng).expect("nonempty pool");
            let t = &tableaux[rng.gen_range(0..tableaux.len())];
            ok &= check_tableau(t)?;
            checked += 1;
        }
        items.push(
            Item::check(format!("rank-4 samples (seed {})", args.seed), ok)
                .with_values(args.samples.to_string(), checked.to_string()),
        );
    }
    Ok(items)
}

fn suite_homotopy(args: &VerifyArgs) -> Result<Vec<Item>> {
    let scope = Scope::from_args(args, 3)?;
    let grid = parse_grid(&args.grid)?;
    let mut items = Vec::new();
    for &n in &scope.ns {
        if n < 2 {
            continue;
        }
        for shape in scope.shapes(n) {
            let signs = match scope.sign {
                Some(s) => vec![s],
                None => vec![Sign::Plus, Sign::Minus],
            };
            for sign in signs {
                let fam = HomotopyFamily::new(shape.clone(), sign)?;
                let report = fam.verify_relations_on_grid(&grid)?;
                items.push(
                    Item::check(format!("relations λ={shape} {sign}"), report.ok)
                        .with_residual(report.worst_residual),
                );
                let group = fam.group();
                let mut spread = 0.0f64;
                for w in group.enumerate()? {
                    let curve = fam.character_curve(&w, &grid)?;
                    let (lo, hi) = curve
                        .iter()
                        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                            (lo.min(v), hi.max(v))
                        });
                    spread = spread.max(hi - lo);
                }
                items.push(
                    Item::check(format!("character curves λ={shape} {sign}"), spread <= 1e-8)
                        .with_residual(spread),
                );
            }
        }
    }
    Ok(items)
}
