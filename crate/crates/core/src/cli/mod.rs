//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 mathematical disagreement,
//! 3 resource cap. Every global flag can also be set through an environment
//! variable with the `QTENUM_` prefix (`QTENUM_CAP`, `QTENUM_JOBS`, ...).

pub mod cache;
pub mod render;
pub mod suites;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumerators::{
    enumerate, qt_brute, EnumError, EnumKey, EnumObject, Family, Recursions, DEFAULT_CAP,
};
use crate::labelled_objects::{
    eta, eta_inv, psi, psi_inv, LabelledPolyomino, ParkingFunction, PartiallyLabelledDyckPath,
    TwoCarPF,
};
use crate::macdonald_oracle::{check_conjecture, ConjectureKind, OracleError};
use crate::polyomino_core::{
    rp_zeta, rp_zeta_inv, zeta, zeta_inv, Decorated, DecorationKind, Polyomino, ReducedPolyomino,
};
use crate::qt_algebra::QtPoly;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Disagreement(String),
    #[error("{0}")]
    Cap(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Disagreement(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<EnumError> for CliError {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Cap(_) => CliError::Cap(e.to_string()),
            OracleError::Bound { .. } => CliError::Disagreement(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "qtenum",
    version,
    about = "Exact q,t-enumeration of polyomino and parking-function families"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand.
#[derive(Args, Clone, Debug)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, env = "QTENUM_FORMAT", value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest m + n enumerated by brute force.
    #[arg(long, global = true, env = "QTENUM_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Degree bound per variable for grid certification (default: automatic).
    #[arg(long, global = true, env = "QTENUM_GRID")]
    pub grid: Option<u32>,
    /// Directory for cached q,t-polynomials.
    #[arg(long, global = true, env = "QTENUM_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "QTENUM_JOBS")]
    pub jobs: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, env = "QTENUM_SEED", default_value_t = 0)]
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            format: Format::Json,
            cap: DEFAULT_CAP,
            grid: None,
            cache_dir: None,
            jobs: None,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Recursion,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjType {
    Polyomino,
    Reduced,
    Pf,
    Pdp,
    Lp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Zeta,
    ZetaInv,
    RpZeta,
    RpZetaInv,
    Phi,
    PhiInv,
    Psi,
    PsiInv,
    Eta,
    EtaInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Zeta,
    Psi,
    Eta,
    Pmaj,
    Recursions,
    MainIdentity,
    HhDelta,
    Symmetry,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConjectureArg {
    LpPmaj,
    LpPmajShifted,
    PdpPmaj,
    PdpDinv,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CacheAction {
    Gc,
    Verify,
}

/// Family, size and class selection.
#[derive(Args, Clone, Debug)]
pub struct FamilyArgs {
    /// pp-star, pp-bullet, rp-star, rp-bullet or pf2-star.
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Class index r (or s); all classes when omitted.
    #[arg(long)]
    pub class: Option<usize>,
    /// Number of decorations.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
}

impl FamilyArgs {
    /// Keys for the selected class, or for every class.
    pub fn keys(&self) -> CliResult<Vec<EnumKey>> {
        let probe = EnumKey {
            family: self.family,
            m: self.m,
            n: self.n,
            class: 1,
            k: self.k,
        };
        if !self.family.is_reduced() && (self.m == 0 || self.n == 0) {
            return Err(EnumError::EmptyStandard.into());
        }
        let (lo, hi) = probe.class_range();
        let classes: Vec<usize> = match self.class {
            Some(c) => vec![c],
            None => (lo..=hi).collect(),
        };
        classes
            .into_iter()
            .map(|c| EnumKey::new(self.family, self.m, self.n, c, self.k).map_err(CliError::from))
            .collect()
    }
}

/// Object input: inline JSON, `@path`, or `-` for stdin.
#[derive(Args, Clone, Debug)]
pub struct ObjectArgs {
    #[arg(long = "type", value_enum)]
    pub obj_type: ObjType,
    #[arg(long)]
    pub object: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stream every object of a family class as JSON lines.
    Enumerate(FamilyArgs),
    /// Statistics of a single object.
    Stats(ObjectArgs),
    /// Apply a bijection to a single object.
    Map {
        #[arg(long, value_enum)]
        map: MapName,
        #[arg(long)]
        object: String,
    },
    /// q,t-polynomial of a family class.
    Qtpoly {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Run a verification suite; exit 0 iff every case passes.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest m + n checked (default: the suite's own range).
        #[arg(long)]
        size: Option<usize>,
    },
    /// Check a conjectured identity monomial by monomial.
    Conjecture {
        #[arg(long, value_enum, default_value_t = ConjectureArg::All)]
        kind: ConjectureArg,
        /// Number of variables.
        #[arg(long, default_value_t = 2)]
        vars: usize,
        /// Largest m + n checked.
        #[arg(long, default_value_t = 4)]
        size: u32,
    },
    /// Cache maintenance.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
    /// Render an object as a standalone SVG document.
    Render(ObjectArgs),
}

/// Parse arguments, run, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    if let Some(j) = cli.config.jobs {
        // a pool built earlier in the process wins; that is fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }
    let cfg = &cli.config;
    match &cli.command {
        Command::Enumerate(f) => run_enumerate(cfg, f, out),
        Command::Stats(o) => {
            let v = stats(o.obj_type, &read_json(&o.object)?)?;
            emit_value(cfg, &v, out)
        }
        Command::Map { map, object } => {
            let v = apply_map(*map, &read_json(object)?)?;
            emit_value(cfg, &v, out)
        }
        Command::Qtpoly { family, method } => run_qtpoly(cfg, family, *method, out),
        Command::Verify { suite, size } => suites::run_suite(cfg, *suite, *size, out),
        Command::Conjecture { kind, vars, size } => run_conjecture(cfg, *kind, *vars, *size, out),
        Command::Cache { action } => cache::run_cache(cfg, *action, out),
        Command::Render(o) => {
            let svg = render::render(o.obj_type, &read_json(&o.object)?)?;
            out.write_all(svg.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_value(cfg: &RunConfig, v: &Value, out: &mut dyn Write) -> CliResult<()> {
    match cfg.format {
        Format::Text => writeln!(out, "{}", serde_json::to_string_pretty(v).map_err(usage)?)?,
        _ => writeln!(out, "{v}")?,
    }
    Ok(())
}

/// Inline JSON, `@file`, or `-` for stdin.
pub fn read_json(arg: &str) -> CliResult<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path)?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("bad object JSON: {e}")))
}

fn with_decorations(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.entry("decorations").or_insert_with(|| json!([]));
    }
    v
}

fn decoration_kind(decos: &[crate::polyomino_core::Decoration]) -> CliResult<DecorationKind> {
    let kind = decos
        .first()
        .map(|d| d.kind)
        .unwrap_or(DecorationKind::Rise);
    if decos.iter().any(|d| d.kind != kind) {
        return Err(usage("decorations must all be of one kind"));
    }
    Ok(kind)
}

pub fn parse_polyomino(v: &Value) -> CliResult<Decorated<Polyomino>> {
    let d: Decorated<Polyomino> =
        serde_json::from_value(with_decorations(v.clone())).map_err(usage)?;
    let kind = decoration_kind(&d.decorations)?;
    let pos = d.positions();
    Decorated::<Polyomino>::new(d.obj, kind, pos).map_err(usage)
}

pub fn parse_reduced(v: &Value) -> CliResult<Decorated<ReducedPolyomino>> {
    let d: Decorated<ReducedPolyomino> =
        serde_json::from_value(with_decorations(v.clone())).map_err(usage)?;
    let kind = decoration_kind(&d.decorations)?;
    let pos = d.positions();
    Decorated::<ReducedPolyomino>::new(d.obj, kind, pos).map_err(usage)
}

/// A parking function; with `allow_zero` it must be a valid partially
/// labelled Dyck path.
pub fn parse_pf(v: &Value, allow_zero: bool) -> CliResult<Decorated<ParkingFunction>> {
    let d: Decorated<ParkingFunction> =
        serde_json::from_value(with_decorations(v.clone())).map_err(usage)?;
    let pf = if allow_zero {
        PartiallyLabelledDyckPath::new(d.obj.path().to_vec(), d.obj.labels().to_vec())
            .map_err(usage)?
            .pf()
            .clone()
    } else {
        ParkingFunction::new(d.obj.path().to_vec(), d.obj.labels().to_vec()).map_err(usage)?
    };
    if d.decorations.iter().any(|x| x.kind != DecorationKind::Rise) {
        return Err(usage("parking functions decorate rises only"));
    }
    Decorated::<ParkingFunction>::new(pf, d.positions()).map_err(usage)
}

pub fn parse_lp(v: &Value) -> CliResult<LabelledPolyomino> {
    let lp: LabelledPolyomino = serde_json::from_value(v.clone()).map_err(usage)?;
    LabelledPolyomino::new(lp.poly().clone(), lp.labels().to_vec()).map_err(usage)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Statistics of one object as a JSON map.
pub fn stats(t: ObjType, v: &Value) -> CliResult<Value> {
    Ok(match t {
        ObjType::Polyomino => {
            let d = parse_polyomino(v)?;
            let p = &d.obj;
            let kind = decoration_kind(&d.decorations)?;
            let aw = p.area_word();
            let bw = p.bounce_word();
            let mut s = json!({
                "m": p.m(), "n": p.n(),
                "area": p.area(), "dinv": p.dinv(), "bounce": p.bounce(),
                "area_word": aw.render(&if kind == DecorationKind::Rise { d.positions() } else { vec![] }),
                "bounce_word": bw.word.to_string(),
                "rises": p.rises(), "red_peaks": p.red_peaks(),
                "class_star": aw.count_value(1, false),
                "class_bullet": bw.word.count_value(1, false),
            });
            match kind {
                DecorationKind::Rise => s["uarea"] = json!(d.uarea().map_err(usage)?),
                _ => s["ubounce"] = json!(d.ubounce().map_err(usage)?),
            }
            s
        }
        ObjType::Reduced => {
            let d = parse_reduced(v)?;
            let p = &d.obj;
            let kind = decoration_kind(&d.decorations)?;
            let aw = p.area_word();
            let bw = p.bounce_word();
            let mut s = json!({
                "m": p.m(), "n": p.n(),
                "area": p.area(), "dinv": p.dinv(), "bounce": p.bounce(),
                "area_word": aw.render(&if kind == DecorationKind::Rise { d.positions() } else { vec![] }),
                "bounce_word": bw.word.to_string(),
                "rises": p.rises(), "green_peaks": p.green_peaks(),
                "class_star": aw.count_value(0, false),
                "class_bullet": bw.word.count_value(0, false) + 1,
            });
            match kind {
                DecorationKind::Rise => s["uarea"] = json!(d.uarea().map_err(usage)?),
                _ => s["ubounce"] = json!(d.ubounce().map_err(usage)?),
            }
            s
        }
        ObjType::Pf | ObjType::Pdp => {
            let d = parse_pf(v, t == ObjType::Pdp)?;
            let pf = &d.obj;
            let tr = pf.pmaj_trace();
            let mut s = json!({
                "size": pf.size(),
                "area": pf.area(), "dinv": pf.dinv(),
                "uarea": d.uarea().map_err(usage)?,
                "area_word": pf.area_word(),
                "rises": pf.rises(), "valleys": pf.valleys(),
                "pmaj": tr.pmaj, "pmaj_word": tr.word_string(),
            });
            if t == ObjType::Pdp {
                let pdp = PartiallyLabelledDyckPath::new(pf.path().to_vec(), pf.labels().to_vec())
                    .map_err(usage)?;
                let (b, steps) = pdp.bounce_trace();
                let (m, n) = pdp.mn();
                s["m"] = json!(m);
                s["n"] = json!(n);
                s["bounce"] = json!(b);
                s["bounce_path"] = json!(String::from_utf8(steps).expect("ascii"));
            } else if let Ok(tc) = TwoCarPF::try_from(pf.clone()) {
                let (m, n) = tc.mn();
                s["two_car"] = json!({ "m": m, "n": n, "class": tc.class_r() });
            }
            s
        }
        ObjType::Lp => {
            let lp = parse_lp(v)?;
            let tr = lp.pmaj_trace();
            json!({
                "m": lp.poly().m(), "n": lp.poly().n(),
                "area": lp.poly().area(), "bounce": lp.poly().bounce(),
                "dinv": lp.dinv(),
                "pmaj": tr.pmaj, "pmaj_word": tr.word_string(),
            })
        }
    })
}

/// Image of an object under a bijection. Input types: `zeta` takes a
/// red-peak decorated polyomino, `zeta-inv` a rise decorated one; `rp-zeta`
/// and `rp-zeta-inv` likewise with green peaks on reduced polyominoes;
/// `phi` a rise decorated polyomino; `phi-inv` a reduced polyomino; `psi` a
/// rise decorated reduced polyomino; `psi-inv` a two-car parking function;
/// `eta` a partially labelled Dyck path; `eta-inv` a labelled polyomino.
pub fn apply_map(map: MapName, v: &Value) -> CliResult<Value> {
    Ok(match map {
        MapName::Zeta => to_value(&zeta(&parse_polyomino(v)?).map_err(usage)?),
        MapName::ZetaInv => to_value(&zeta_inv(&parse_polyomino(v)?).map_err(usage)?),
        MapName::RpZeta => to_value(&rp_zeta(&parse_reduced(v)?).map_err(usage)?),
        MapName::RpZetaInv => to_value(&rp_zeta_inv(&parse_reduced(v)?).map_err(usage)?),
        MapName::Phi => to_value(&parse_polyomino(v)?.phi_rises().map_err(usage)?),
        MapName::PhiInv => {
            let d = parse_reduced(v)?;
            if !d.decorations.is_empty() {
                return Err(usage("phi-inv takes an undecorated reduced polyomino"));
            }
            to_value(&Decorated::<Polyomino>::plain(d.obj.unphi()))
        }
        MapName::Psi => to_value(&psi(&parse_reduced(v)?).map_err(usage)?),
        MapName::PsiInv => to_value(&psi_inv(&parse_pf(v, false)?).map_err(usage)?),
        MapName::Eta => to_value(&eta(&parse_pf(v, true)?).map_err(usage)?),
        MapName::EtaInv => to_value(&eta_inv(&parse_lp(v)?).map_err(usage)?),
    })
}

fn run_enumerate(cfg: &RunConfig, f: &FamilyArgs, out: &mut dyn Write) -> CliResult<()> {
    let size = f.m + f.n;
    if size > cfg.cap {
        return Err(CliError::Cap(format!(
            "m + n = {size} exceeds the cap {}",
            cfg.cap
        )));
    }
    if cfg.format == Format::Csv {
        writeln!(out, "family,m,n,class,k,object,stat_q,stat_t")?;
    }
    for key in f.keys()? {
        for obj in enumerate(&key)? {
            let (a, b) = obj.bistat(key.family);
            match cfg.format {
                Format::Csv => {
                    let o = serde_json::to_string(&obj)
                        .map_err(usage)?
                        .replace('"', "\"\"");
                    writeln!(
                        out,
                        "{},{},{},{},{},\"{o}\",{a},{b}",
                        key.family, key.m, key.n, key.class, key.k
                    )?;
                }
                Format::Text => writeln!(out, "{key}\t{}\tq^{a} t^{b}", describe(&obj))?,
                _ => {
                    let line = json!({ "key": key, "object": obj, "bistat": [a, b] });
                    writeln!(out, "{line}")?;
                }
            }
        }
    }
    Ok(())
}

fn describe(obj: &EnumObject) -> String {
    match obj {
        EnumObject::Polyomino(d) => d.obj.area_word().render(&rise_positions(&d.decorations)),
        EnumObject::Reduced(d) => d.obj.area_word().render(&rise_positions(&d.decorations)),
        EnumObject::TwoCar(d) => d.obj.dominoes(),
    }
}

fn rise_positions(decos: &[crate::polyomino_core::Decoration]) -> Vec<usize> {
    decos
        .iter()
        .filter(|d| d.kind == DecorationKind::Rise)
        .map(|d| d.pos)
        .collect()
}

/// q,t-polynomial of one key by the requested method, consulting the cache
/// directory when configured.
pub fn qtpoly_for_key(cfg: &RunConfig, key: &EnumKey, method: Method) -> CliResult<QtPoly> {
    let rec = || -> CliResult<QtPoly> {
        if let Some(dir) = &cfg.cache_dir {
            if let Some(p) = cache::load_entry(dir, key)? {
                return Ok(p);
            }
        }
        let p = Recursions::new().for_key(key)?;
        if let Some(dir) = &cfg.cache_dir {
            cache::store_entry(dir, key, &p)?;
        }
        Ok(p)
    };
    match method {
        Method::Brute => Ok(qt_brute(key, cfg.cap)?),
        Method::Recursion => rec(),
        Method::Both => {
            let b = qt_brute(key, cfg.cap)?;
            let r = rec()?;
            if b != r {
                return Err(CliError::Disagreement(format!(
                    "{key}: brute force {b} but recursion {r} (difference {})",
                    &b - &r
                )));
            }
            Ok(b)
        }
    }
}

fn run_qtpoly(
    cfg: &RunConfig,
    f: &FamilyArgs,
    method: Method,
    out: &mut dyn Write,
) -> CliResult<()> {
    let mut total = QtPoly::zero();
    for key in f.keys()? {
        total += &qtpoly_for_key(cfg, &key, method)?;
    }
    match cfg.format {
        Format::Text => writeln!(out, "{total}")?,
        Format::Csv => {
            writeln!(out, "deg_q,deg_t,coeff")?;
            for ((a, b), c) in total.terms() {
                writeln!(out, "{a},{b},{c}")?;
            }
        }
        _ => writeln!(out, "{}", serde_json::to_string(&total).map_err(usage)?)?,
    }
    Ok(())
}

fn run_conjecture(
    cfg: &RunConfig,
    kind: ConjectureArg,
    vars: usize,
    size: u32,
    out: &mut dyn Write,
) -> CliResult<()> {
    let kinds: Vec<ConjectureKind> = match kind {
        ConjectureArg::All => ConjectureKind::ALL.to_vec(),
        ConjectureArg::LpPmaj => vec![ConjectureKind::LpPmaj],
        ConjectureArg::LpPmajShifted => vec![ConjectureKind::LpPmajShifted],
        ConjectureArg::PdpPmaj => vec![ConjectureKind::PdpPmaj],
        ConjectureArg::PdpDinv => vec![ConjectureKind::PdpDinv],
    };
    if size as usize > cfg.cap {
        return Err(CliError::Cap(format!(
            "size {size} exceeds the cap {}",
            cfg.cap
        )));
    }
    let mut failures = 0usize;
    for kind in kinds {
        for (m, n, k) in conjecture_params(kind, size) {
            for v in check_conjecture(kind, m, n, k, vars)? {
                failures += usize::from(!v.pass);
                match cfg.format {
                    Format::Text => writeln!(
                        out,
                        "{} m={m} n={n} k={k} x^{:?}: {}",
                        kind.name(),
                        v.monomial,
                        if v.pass { "PASS" } else { "FAIL" }
                    )?,
                    _ => writeln!(out, "{}", serde_json::to_string(&v).map_err(usage)?)?,
                }
            }
        }
    }
    if failures > 0 {
        return Err(CliError::Disagreement(format!(
            "{failures} monomial checks failed"
        )));
    }
    Ok(())
}

/// Parameter tuples checked for a conjecture up to `m + n <= size`.
pub fn conjecture_params(kind: ConjectureKind, size: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for m in 0..=size {
        for n in 0..=size - m {
            match kind {
                ConjectureKind::LpPmaj | ConjectureKind::LpPmajShifted => {
                    if m >= 1 && n >= 1 {
                        out.push((m, n, 0));
                    }
                }
                _ => out.extend((0..=n).map(|k| (m, n, k))),
            }
        }
    }
    out
}
