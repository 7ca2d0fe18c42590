//! `cxbase`: command-line access to the numeral-system library.
//!
//! Exit codes: 0 success, 1 invalid input or domain error, 2 I/O error.

use std::f64::consts::PI;
use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cxbase::boundary::{boundary_dimension_with_tol, boundary_polyline};
use cxbase::cubic::{cubic_system, CubicClass};
use cxbase::hull::{hull_metrics, HullModel, DEFAULT_DIRECTIONS};
use cxbase::integer::{add, classify, decode, encode};
use cxbase::render::*;
use cxbase::{DigitString, LatticePoint, System};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "cxbase", version, about = "Complex-base numeral systems z^2 = D z - n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SystemArgs {
    /// Digit count, |z|^2
    #[arg(long)]
    n: i64,
    /// Trace of z; needs D^2 < 4n
    #[arg(long)]
    d: i64,
}

impl SystemArgs {
    fn system(self) -> Result<System, Failure> {
        System::new(self.n, self.d).map_err(domain)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Properness class and fixed points of the reduction map
    #[command(allow_negative_numbers = true)]
    Classify {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        json: bool,
    },
    /// Digits (least significant first) of a lattice point a + b z
    #[command(allow_negative_numbers = true)]
    Encode {
        #[command(flatten)]
        sys: SystemArgs,
        /// Lattice point as A,B
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Lattice point of a digit string (least significant first)
    #[command(allow_negative_numbers = true)]
    Decode {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        digits: String,
        #[arg(long)]
        json: bool,
    },
    /// Sum of two digit strings with carries
    #[command(allow_negative_numbers = true)]
    Add {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        json: bool,
    },
    /// Convex hull of the fractional tile
    #[command(allow_negative_numbers = true)]
    Hull {
        #[command(flatten)]
        sys: SystemArgs,
        /// Number of support directions
        #[arg(long, default_value_t = DEFAULT_DIRECTIONS)]
        dirs: usize,
        /// Write the hull polygon as SVG
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Boundary dimension
    #[command(allow_negative_numbers = true)]
    Dim {
        #[command(flatten)]
        sys: SystemArgs,
        /// Power iteration tolerance
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Boundary dimensions for n = 2..max-n, one column per |D|
    DimTable {
        #[arg(long, default_value_t = 9)]
        max_n: i64,
        /// Output file; standard output when absent
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Boundary polyline of the tile at refinement level k
    #[command(allow_negative_numbers = true)]
    Boundary {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 8)]
        k: u32,
        #[arg(long)]
        svg: PathBuf,
        /// Image size in pixels
        #[arg(long, default_value_t = 800)]
        size: usize,
    },
    /// Raster images as binary PPM
    Render {
        #[command(subcommand)]
        what: RenderCommand,
    },
    /// Tiling coverage diagnostic
    #[command(allow_negative_numbers = true)]
    Coverage {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 12)]
        k: u32,
        #[arg(long, default_value_t = 512)]
        res: usize,
        /// X0,Y0,X1,Y1
        #[arg(long, allow_hyphen_values = true, default_value = "-2,-2,2,2")]
        window: String,
        #[arg(long, value_enum, default_value_t = TranslateArg::All)]
        translates: TranslateArg,
        #[arg(long)]
        json: bool,
    },
    /// Box-counting dimension of z = sqrt(n) e^{i phi} over a range of angles
    Sweep {
        #[arg(long, default_value_t = 2)]
        n: i64,
        #[arg(long, default_value_t = PI / 2.0)]
        phi_min: f64,
        #[arg(long, default_value_t = PI)]
        phi_max: f64,
        #[arg(long, default_value_t = 64)]
        steps: usize,
        #[arg(long, default_value_t = 20)]
        depth: u32,
        /// Boxes per axis at the coarsest scale
        #[arg(long, default_value_t = 8)]
        grid: usize,
        /// Output file; standard output when absent
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Attractors of a cubic system
    #[command(allow_negative_numbers = true)]
    Cubic {
        /// m for the r = -m family, r itself with --positive-r
        #[arg(long)]
        m: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        positive_r: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RenderCommand {
    /// Fractional tile coloured by its two leading digits
    #[command(allow_negative_numbers = true)]
    Frac {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 12)]
        k: u32,
        #[arg(long, default_value_t = 512)]
        res: usize,
        #[arg(long)]
        out: PathBuf,
        /// Draw this many random points instead of all n^k
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Integer points with up to k digits, coloured by attractor
    #[command(allow_negative_numbers = true)]
    Int {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 8)]
        k: u32,
        #[arg(long, default_value_t = 512)]
        res: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TranslateArg {
    All,
    Integer,
}

enum Failure {
    Domain(String),
    Io(String),
}

fn domain(e: impl Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure::Domain(format!("bad {what} entry {x:?}"))))
        .collect()
}

fn parse_point(s: &str) -> Result<LatticePoint, Failure> {
    match parse_list::<i64>(s, "point")?[..] {
        [a, b] => Ok(LatticePoint::new(a, b)),
        _ => Err(Failure::Domain(format!("point needs A,B, got {s:?}"))),
    }
}

fn parse_window(s: &str) -> Result<Window, Failure> {
    match parse_list::<f64>(s, "window")?[..] {
        [x0, y0, x1, y1] => Window::new(x0, y0, x1, y1).map_err(domain),
        _ => Err(Failure::Domain(format!("window needs X0,Y0,X1,Y1, got {s:?}"))),
    }
}

fn point_json(p: LatticePoint) -> Value {
    json!([p.a, p.b])
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

/// Emits either the JSON object (with the schema version) or the text lines.
fn emit(out: &mut impl Write, as_json: bool, mut value: Value, text: &[String]) -> Result<(), Failure> {
    let res = if as_json {
        value["schema_version"] = json!(SCHEMA_VERSION);
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json value"))
    } else {
        text.iter().try_for_each(|l| writeln!(out, "{l}"))
    };
    res.map_err(|e| Failure::Io(e.to_string()))
}

fn digit_result(s: &System, digits: &DigitString, terminal: LatticePoint) -> (Value, Vec<String>) {
    let value = json!({
        "n": s.n(),
        "d": s.d(),
        "digits": digits.digits(),
        "terminal": point_json(terminal),
    });
    let text = vec![format!("digits {}", join(digits.digits())), format!("terminal {},{}", terminal.a, terminal.b)];
    (value, text)
}

fn csv_bytes(header: &[String], rows: &[Vec<String>]) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| Failure::Io(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| Failure::Io(e.to_string()))?;
    }
    w.into_inner().map_err(|e| Failure::Io(e.to_string()))
}

fn write_or_print(out: &mut impl Write, path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, bytes),
        None => out.write_all(bytes).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn dim_table(max_n: i64) -> Result<(Vec<String>, Vec<Vec<String>>), Failure> {
    if !(2..=64).contains(&max_n) {
        return Err(Failure::Domain(format!("max-n must be in 2..=64, got {max_n}")));
    }
    let widest = (2..=max_n).map(|n| (2.0 * (n as f64).sqrt()).ceil() as i64 - 1).max().unwrap();
    let mut header = vec!["n".to_string()];
    header.extend((0..=widest).map(|d| format!("|D|={d}")));
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let mut row = vec![n.to_string()];
        for d in 0..=widest {
            row.push(if d * d < 4 * n {
                sig9(boundary_dimension_with_tol(&System::new(n, -d).map_err(domain)?, 1e-13).map_err(domain)?)
            } else {
                String::new()
            });
        }
        rows.push(row);
    }
    Ok((header, rows))
}

fn cubic_json(c: &cxbase::cubic::CubicSystem, k: &CubicClass) -> Value {
    json!({
        "r": c.r(),
        "a": c.a(),
        "n": c.n(),
        "phi": c.phi(),
        "proper": k.proper,
        "attractors": k.attractors,
    })
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { sys, json } => {
            let s = sys.system()?;
            let c = classify(&s);
            let points: Vec<Value> = c.fixed_points.iter().map(|&p| point_json(p)).collect();
            let value = json!({"n": s.n(), "d": s.d(), "tag": c.tag, "proper": c.is_proper(), "fixed_points": points});
            let fixed: Vec<String> = c.fixed_points.iter().map(|p| format!("{},{}", p.a, p.b)).collect();
            emit(out, json, value, &[format!("tag {:?}", c.tag), format!("fixed points {}", fixed.join(" "))])
        }
        Command::Encode { sys, point, json } => {
            let s = sys.system()?;
            let r = encode(&s, parse_point(&point)?).map_err(domain)?;
            let (value, text) = digit_result(&s, &r.digits, r.terminal);
            emit(out, json, value, &text)
        }
        Command::Decode { sys, digits, json } => {
            let s = sys.system()?;
            let ds = DigitString::integer(s.n(), parse_list(&digits, "digit")?).map_err(domain)?;
            let p = decode(&s, &ds).map_err(domain)?;
            emit(out, json, json!({"n": s.n(), "d": s.d(), "point": point_json(p)}), &[format!("{},{}", p.a, p.b)])
        }
        Command::Add { sys, x, y, json } => {
            let s = sys.system()?;
            let x = DigitString::integer(s.n(), parse_list(&x, "digit")?).map_err(domain)?;
            let y = DigitString::integer(s.n(), parse_list(&y, "digit")?).map_err(domain)?;
            let r = add(&s, &x, &y).map_err(domain)?;
            let (value, text) = digit_result(&s, &r.digits, r.terminal);
            emit(out, json, value, &text)
        }
        Command::Hull { sys, dirs, svg, json } => {
            let s = sys.system()?;
            let model = HullModel::new(s);
            let poly = model.hull_polygon(dirs).map_err(domain)?;
            let m = hull_metrics(&s);
            if let Some(path) = svg {
                let window = Window::from_bbox(poly.bounding_box(), 0.05).map_err(domain)?;
                write_file(&path, svg_paths(&[(poly.vertices(), "black")], window, 800).as_bytes())?;
            }
            let value = json!({
                "n": s.n(),
                "d": s.d(),
                "directions": dirs,
                "center": m.center,
                "perimeter": m.perimeter,
                "hull_area": m.hull_area,
                "tile_area": m.tile_area,
                "polygon_vertices": poly.vertices().len(),
                "polygon_perimeter": poly.perimeter(),
                "polygon_area": poly.signed_area(),
            });
            let text = [
                format!("center {},{}", sig9(m.center[0]), sig9(m.center[1])),
                format!("perimeter {} (polygon {})", sig9(m.perimeter), sig9(poly.perimeter())),
                format!("hull area {} (polygon {})", sig9(m.hull_area), sig9(poly.signed_area())),
                format!("tile area {}", sig9(m.tile_area)),
            ];
            emit(out, json, value, &text)
        }
        Command::Dim { sys, tol, json } => {
            let s = sys.system()?;
            let h = boundary_dimension_with_tol(&s, tol).map_err(domain)?;
            emit(out, json, json!({"n": s.n(), "d": s.d(), "dimension": h}), &[sig9(h)])
        }
        Command::DimTable { max_n, csv } => {
            let (header, rows) = dim_table(max_n)?;
            write_or_print(out, csv.as_deref(), &csv_bytes(&header, &rows)?)?;
            eprintln!("columns are |D|; D and -D give the same dimension");
            Ok(())
        }
        Command::Boundary { sys, k, svg, size } => {
            let s = sys.system()?;
            let line = boundary_polyline(&s, k).map_err(domain)?;
            let hull = HullModel::new(s).hull_polygon(DEFAULT_DIRECTIONS).map_err(domain)?;
            let window = Window::from_bbox(hull.bounding_box(), 0.05).map_err(domain)?;
            write_file(&svg, svg_paths(&[(&line, "black")], window, size).as_bytes())?;
            emit(out, false, Value::Null, &[format!("{} points", line.len())])
        }
        Command::Render { what } => {
            let (img, out_path) = match what {
                RenderCommand::Frac { sys, k, res, out: path, sample, seed } => {
                    let mode = match sample {
                        Some(points) => CloudMode::Sampled { points, seed },
                        None => CloudMode::Exhaustive,
                    };
                    (raster_fractional(&sys.system()?, k, res, mode).map_err(domain)?, path)
                }
                RenderCommand::Int { sys, k, res, out: path } => (raster_integer(&sys.system()?, k, res).map_err(domain)?, path),
            };
            write_file(&out_path, &img.to_ppm())?;
            emit(out, false, Value::Null, &[format!("{}x{} pixels, {} set", img.width, img.height, img.nonempty_count())])
        }
        Command::Coverage { sys, k, res, window, translates, json } => {
            let s = sys.system()?;
            let which = match translates {
                TranslateArg::All => Translates::All,
                TranslateArg::Integer => Translates::EncodeReachable,
            };
            let r = coverage_report(&s, k, res, parse_window(&window)?, which).map_err(domain)?;
            let mut value = serde_json::to_value(&r).expect("report");
            value["n"] = json!(s.n());
            value["d"] = json!(s.d());
            let text = [
                format!("covered {}", sig9(r.covered_fraction)),
                format!("overlap {}", sig9(r.overlap_fraction)),
                format!("uncovered {}", sig9(r.uncovered_fraction)),
                format!("translates {}", r.translates),
            ];
            emit(out, json, value, &text)
        }
        Command::Sweep { n, phi_min, phi_max, steps, depth, grid, csv } => {
            let rows = dimension_sweep(n, phi_min, phi_max, steps, depth, grid).map_err(domain)?;
            let body: Vec<Vec<String>> = rows.iter().map(|r| vec![sig9(r.phi), sig9(r.estimate)]).collect();
            write_or_print(out, csv.as_deref(), &csv_bytes(&["phi".into(), "estimate".into()], &body)?)
        }
        Command::Cubic { m, a, positive_r, json } => {
            let c = cubic_system(m, a, if positive_r { 1 } else { -1 }).map_err(domain)?;
            let k = cxbase::cubic::classify3(&c).map_err(domain)?;
            let mut text = vec![format!("{c}"), format!("proper {}", k.proper)];
            for at in &k.attractors {
                let pts: Vec<String> = at.points.iter().map(|p| p.to_string()).collect();
                text.push(format!("{:?} {}", at.kind, pts.join(" ")));
            }
            emit(out, json, cubic_json(&c, &k), &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
