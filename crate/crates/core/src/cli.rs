//! The `desargues` command line.
//!
//! Exit codes: 0 on success, 1 on a mathematical error or a failed check,
//! 2 on a usage error. Mathematical errors are reported on stderr as
//! `{"error": kind, "message": text}`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::construct::{default_aux, geo_add, geo_left_div, geo_mul, geo_sub, ConstructionTrace, LineCoordinate};
use crate::dyck::DyckPolygon;
use crate::error::Error;
use crate::plane::PlanePoint;
use crate::ratio::{line_equation_coeffs, midpoint_solve, ratio2, ratio3};
use crate::report::Status;
use crate::skewfield::FieldSpec;
use crate::suite::{run_suite, Suite, SuiteConfig};
use crate::svg::render_svg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TraceFormat {
    Json,
    Svg,
    None,
}

/// Exact arithmetic and ratio theorems in Desargues affine planes.
#[derive(Debug, Parser)]
#[command(name = "desargues", version)]
pub struct CliConfig {
    /// Q, F:<p>, F:<p>^<k> or HQ
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,

    /// Auxiliary point "x,y" off the line OI (default 0,1)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub aux: Option<String>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub trace: TraceFormat,

    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    /// Write the trace or report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// A + B by construction
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// A · B by construction
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// C − A by construction
    Sub {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// B⁻¹ · A by construction
    Ldiv {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// r(A:B) = B⁻¹·A
    Ratio2 {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// r(A,B;C) = (B−C)⁻¹·(A−C)
    Ratio3 {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// M and N with r(X,B;C) = M·X + N
    Lineq {
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// C with C + C = A + B
    Midpoint {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Run a check suite and print its JSON report
    Check {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
    /// Dyck polygon files
    Dyck {
        #[command(subcommand)]
        command: DyckCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum DyckCommand {
    /// Validate a polygon and print the report
    Validate { file: PathBuf },
    /// Present a vertex as a word over the generators
    Present { file: PathBuf, vertex: String },
    /// Shortest path from a generator to a vertex
    Reach { file: PathBuf, from: String, to: String },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Math(Error),
    /// A check ran and reported failures; its output is already written.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Math(e)
        }
    }
}

/// Splits on commas outside brackets.
fn split_pair(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut cut = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                if cut.is_some() {
                    return None;
                }
                cut = Some(i);
            }
            _ => {}
        }
    }
    cut.map(|i| (&s[..i], &s[i + 1..]))
}

struct Ctx<'a> {
    cfg: &'a CliConfig,
    spec: FieldSpec,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn coord(&self, s: &str) -> Result<LineCoordinate, Failure> {
        Ok(LineCoordinate::new(self.spec.parse_scalar(s)?))
    }

    fn aux(&self) -> Result<PlanePoint, Failure> {
        match &self.cfg.aux {
            None => Ok(default_aux(self.spec)),
            Some(s) => {
                let (x, y) = split_pair(s).ok_or_else(|| Failure::Usage(format!("--aux expects \"x,y\", got `{s}`")))?;
                Ok(PlanePoint::new(self.spec.parse_scalar(x)?, self.spec.parse_scalar(y)?)?)
            }
        }
    }

    fn println(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }

    fn warn(&mut self, s: &str) {
        let _ = writeln!(self.err, "warning: {s}");
    }

    /// Writes a document to `--out` if given, otherwise to stdout.
    fn emit(&mut self, doc: &str) -> Result<bool, Failure> {
        match &self.cfg.out {
            Some(path) => {
                std::fs::write(path, doc).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                Ok(true)
            }
            None => {
                let _ = write!(self.out, "{doc}");
                if !doc.ends_with('\n') {
                    let _ = writeln!(self.out);
                }
                Ok(false)
            }
        }
    }

    fn construction(&mut self, result: LineCoordinate, trace: ConstructionTrace) -> Result<(), Failure> {
        let doc = match self.cfg.trace {
            TraceFormat::None => {
                self.println(&result.value().to_string());
                return Ok(());
            }
            TraceFormat::Json => trace.to_json(),
            TraceFormat::Svg => match render_svg(&trace) {
                Some(svg) => svg,
                None => {
                    self.warn(&format!("SVG output needs rational coordinates; emitting JSON for {}", self.spec));
                    trace.to_json()
                }
            },
        };
        if self.emit(&doc)? {
            self.println(&result.value().to_string());
        }
        Ok(())
    }

    fn read_polygon(&self, file: &PathBuf) -> Result<DyckPolygon, Failure> {
        let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
        Ok(DyckPolygon::from_json(&text, self.spec)?)
    }

    fn dispatch(&mut self) -> Result<(), Failure> {
        let cfg = self.cfg;
        match &cfg.command {
            Command::Add { a, b } => {
                let (r, t) = geo_add(&self.coord(a)?, &self.coord(b)?, &self.aux()?)?;
                self.construction(r, t)
            }
            Command::Mul { a, b } => {
                let (r, t) = geo_mul(&self.coord(a)?, &self.coord(b)?, &self.aux()?)?;
                self.construction(r, t)
            }
            Command::Sub { c, a } => {
                let (r, t) = geo_sub(&self.coord(c)?, &self.coord(a)?, &self.aux()?)?;
                self.construction(r, t)
            }
            Command::Ldiv { a, b } => {
                let (r, t) = geo_left_div(&self.coord(a)?, &self.coord(b)?, &self.aux()?)?;
                self.construction(r, t)
            }
            Command::Ratio2 { a, b } => {
                let r = ratio2(&self.coord(a)?, &self.coord(b)?)?;
                self.println(&r.to_string());
                Ok(())
            }
            Command::Ratio3 { a, b, c } => {
                let r = ratio3(&self.coord(a)?, &self.coord(b)?, &self.coord(c)?)?;
                self.println(&r.to_string());
                Ok(())
            }
            Command::Lineq { b, c } => {
                let e = line_equation_coeffs(&self.coord(b)?, &self.coord(c)?)?;
                self.println(&json!({"M": e.m.to_string(), "N": e.n.to_string()}).to_string());
                Ok(())
            }
            Command::Midpoint { a, b } => {
                let m = midpoint_solve(&self.coord(a)?, &self.coord(b)?)?;
                self.println(&m.to_string());
                Ok(())
            }
            Command::Check { suite } => {
                let samples = usize::try_from(cfg.samples).unwrap_or(usize::MAX);
                let rep = run_suite(*suite, self.spec, SuiteConfig { seed: cfg.seed, samples })?;
                let _ = writeln!(
                    self.err,
                    "{suite} over {}: {} pass, {} fail, {} skipped",
                    self.spec,
                    rep.count(Status::Pass),
                    rep.count(Status::Fail),
                    rep.count(Status::Skipped)
                );
                self.emit(&rep.to_json())?;
                if rep.has_failures() {
                    return Err(Failure::Check);
                }
                Ok(())
            }
            Command::Dyck { command } => match command {
                DyckCommand::Validate { file } => {
                    let rep = self.read_polygon(file)?.validate();
                    self.emit(&rep.to_json())?;
                    if rep.has_failures() {
                        return Err(Failure::Check);
                    }
                    Ok(())
                }
                DyckCommand::Present { file, vertex } => {
                    let w = self.read_polygon(file)?.present(vertex)?;
                    let doc = json!({"vertex": vertex, "word": w.coefficients(), "measure": w.measure()});
                    self.println(&doc.to_string());
                    Ok(())
                }
                DyckCommand::Reach { file, from, to } => {
                    let path = self.read_polygon(file)?.reach(from, to)?;
                    let doc = json!({"from": from, "to": to, "path": path, "length": path.len() - 1});
                    self.println(&doc.to_string());
                    Ok(())
                }
            },
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let spec = match cfg.field.parse::<FieldSpec>() {
        Ok(spec) => spec,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut ctx = Ctx {
        cfg: &cfg,
        spec,
        out,
        err,
    };
    match ctx.dispatch() {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            2
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(ctx.err, "{}", json!({"error": e.kind(), "message": e.to_string()}));
            1
        }
        Err(Failure::Check) => 1,
    }
}
