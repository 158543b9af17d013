//! The `polar` command line: JSON in, JSON out.
//!
//! Exit codes: 0 success, 1 invalid data or malformed JSON, 2 usage error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, CircleChamberData, Query};
use crate::cycle4;
use crate::data::{quotient, Data, KINDS};
use crate::enumerate::{enumerate_so3, enumerate_t2_forests};
use crate::error::Error;
use crate::forest5::{self, EdgeRef, ForestData, SectionDescriptor};
use crate::lattice::Slope3;
use crate::polygon5;

#[derive(Debug, Parser)]
#[command(name = "polar", version, about = "Coxeter polar data for low-dimensional polar actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Input file, `-` for standard input.
    #[arg(long, short, default_value = "-")]
    input: String,
    /// Output file, `-` for standard output.
    #[arg(long, short, default_value = "-")]
    output: String,
    /// Overrides the `kind` field of the input.
    #[arg(long)]
    kind: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the data and list every violation.
    Validate(Io),
    /// Print the invariants of the data.
    Invariants(Io),
    /// Print the canonical representative of the data.
    Canonicalize(Io),
    /// Equivariant connected sum of two inputs.
    Sum {
        /// Glue at a fixed point.
        #[arg(long, conflicts_with = "regular", required_unless_present = "regular")]
        fixed: bool,
        /// Glue along a principal orbit (forests only).
        #[arg(long)]
        regular: bool,
        /// Gluing sites: edges `c:e` or `e` of forests, vertex indices of polygons.
        #[arg(long, num_args = 2, value_names = ["SITE1", "SITE2"])]
        at: Option<Vec<String>>,
        #[arg(long, short, default_value = "-")]
        output: String,
        #[arg(long)]
        kind: Option<String>,
        /// The two operands; at most one may be `-`.
        #[arg(num_args = 2, required = true, value_names = ["LEFT", "RIGHT"])]
        inputs: Vec<String>,
    },
    /// Divide a T³-marked forest by a circle.
    Quotient {
        /// Slope of the circle, `a,b,c`.
        #[arg(long, allow_hyphen_values = true)]
        circle: String,
        #[command(flatten)]
        io: Io,
    },
    /// Emit a classification table as JSON lines.
    Enumerate {
        /// Edges, components and height bound `E,c,h` of a forest table.
        #[arg(long, conflicts_with = "sides", required_unless_present = "sides")]
        bounds: Option<String>,
        /// Side count of an SO(3) polygon table.
        #[arg(long)]
        sides: Option<usize>,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Query the table of known actions.
    Catalog {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        dimension: Option<u32>,
        #[arg(long)]
        nonneg: Option<bool>,
        /// Manifold of a polar circle action from its chamber, `b2,spin,p`.
        #[arg(long)]
        chamber: Option<String>,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Whether the action admits invariant non-negative curvature.
    NonnegCheck(Io),
}

enum Failure {
    Usage(String),
    Data(Value),
}

impl Failure {
    fn error(kind: &str, message: impl Into<String>) -> Self {
        Failure::Data(json!({"error": {"kind": kind, "message": message.into()}}))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::InvalidData(_) => "invalid_data",
            Error::SliceMismatch(_) => "slice_mismatch",
            Error::InvalidSite(_) => return Failure::Usage(e.to_string()),
            Error::EmptyForest => "empty_forest",
            Error::NotSimplyConnected(_) => "not_simply_connected",
            Error::InvalidChamber(_) => "invalid_chamber",
            Error::NonPrimitiveImage { .. } | Error::ParallelInput { .. } => "invalid_projection",
            _ => "invalid_data",
        };
        let mut obj = json!({"kind": kind, "message": e.to_string()});
        if let Error::InvalidData(vs) = &e {
            obj["violations"] = json!(vs);
        }
        Failure::Data(json!({ "error": obj }))
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

struct Env<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Env<'_> {
    fn read(&mut self, path: &str) -> Outcome<String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
        }
    }

    fn write_lines(&mut self, path: &str, lines: &[String]) -> Outcome<()> {
        let mut text = lines.join("\n");
        text.push('\n');
        if path == "-" {
            self.stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
        } else {
            fs::write(PathBuf::from(path), text)
                .map_err(|e| Failure::Usage(format!("cannot write {path}: {e}")))
        }
    }

    fn emit<T: Serialize>(&mut self, path: &str, value: &T) -> Outcome<()> {
        self.write_lines(path, &[to_json(value)])
    }

    fn load(&mut self, path: &str, kind: Option<&str>) -> Outcome<Data> {
        let text = self.read(path)?;
        parse_data(&text, kind)
    }
}

/// Parses tagged data, checking the kind before the payload.
fn parse_data(text: &str, kind: Option<&str>) -> Outcome<Data> {
    let mut value: Value = serde_json::from_str(text)
        .map_err(|e| Failure::error("malformed_json", e.to_string()))?;
    let obj = value
        .as_object_mut()
        .ok_or_else(|| Failure::error("malformed_json", "expected a JSON object"))?;
    if let Some(k) = kind {
        obj.insert("kind".into(), Value::String(k.into()));
    }
    match obj.get("kind").and_then(Value::as_str) {
        Some(k) if KINDS.contains(&k) => {}
        Some(k) => return Err(Failure::Usage(format!("unknown kind {k:?}; expected one of {KINDS:?}"))),
        None => return Err(Failure::Usage("missing kind; pass --kind".into())),
    }
    serde_json::from_value(value).map_err(|e| Failure::error("invalid_data", e.to_string()))
}

#[derive(Serialize)]
struct ForestReport {
    pi1: String,
    h2_rank: Option<u64>,
    spin: Option<bool>,
    #[serde(rename = "type")]
    diffeo: String,
    orientable_section: bool,
    polar_group_order: u32,
    section: SectionDescriptor,
    nonneg: Option<bool>,
}

#[derive(Serialize)]
struct PolygonReport {
    canonical: polygon5::PolygonWord,
    #[serde(rename = "type")]
    so3_type: polygon5::SO3Type,
    genus: u64,
    orbifold_euler: String,
    nonneg: bool,
    trace: Vec<polygon5::Deletion>,
}

#[derive(Serialize)]
struct CycleReport {
    b2: u64,
    spin: bool,
    #[serde(rename = "type")]
    basic: cycle4::Basic4,
}

fn invariants(d: &Data) -> Outcome<String> {
    Ok(match d {
        Data::Forest(f) => {
            let inv = forest5::invariants(f)?;
            to_json(&ForestReport {
                pi1: inv.pi1.to_string(),
                h2_rank: inv.h2_rank,
                spin: inv.spin,
                diffeo: inv.diffeo.to_string(),
                orientable_section: inv.orientable_section,
                polar_group_order: inv.polar_group_order,
                section: forest5::section_descriptor(f)?,
                nonneg: inv.nonneg_admissible,
            })
        }
        Data::Polygon(w) => {
            let dec = polygon5::decompose(w)?;
            to_json(&PolygonReport {
                canonical: polygon5::canonicalize(w)?,
                so3_type: dec.so3_type,
                genus: polygon5::section_genus(w)?,
                orbifold_euler: polygon5::orbifold_euler(w)?.to_string(),
                nonneg: polygon5::nonneg_curvature_admissible(w)?,
                trace: dec.trace,
            })
        }
        Data::Cycle(c) => to_json(&CycleReport {
            b2: cycle4::b2(c)?,
            spin: cycle4::is_spin(c)?,
            basic: cycle4::recognize_basic(c)?,
        }),
        Data::Forest3(_) => {
            return Err(Failure::Usage(
                "t3_forest has no invariants here; run quotient first".into(),
            ))
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn canonicalize(d: &Data) -> Outcome<Data> {
    Ok(match d {
        Data::Forest(f) => Data::Forest(forest5::canonicalize(f)?),
        Data::Polygon(w) => Data::Polygon(polygon5::canonicalize(w)?),
        Data::Cycle(c) => Data::Cycle(cycle4::canonicalize(c)?),
        Data::Forest3(_) => return Err(Failure::Usage("t3_forest has no canonical form".into())),
    })
}

fn parse_edge_site(s: &str) -> Outcome<EdgeRef> {
    let bad = || Failure::Usage(format!("bad edge site {s:?}; expected c:e or e"));
    match s.split_once(':') {
        Some((c, e)) => Ok(EdgeRef::new(
            c.trim().parse().map_err(|_| bad())?,
            e.trim().parse().map_err(|_| bad())?,
        )),
        None => Ok(EdgeRef::new(0, s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_vertex(s: &str) -> Outcome<usize> {
    s.trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("bad vertex site {s:?}")))
}

fn edge_refs(f: &ForestData) -> Vec<EdgeRef> {
    f.components
        .iter()
        .enumerate()
        .flat_map(|(c, t)| (0..t.edges.len()).map(move |e| EdgeRef::new(c, e)))
        .collect()
}

/// First pair of sites, in index order, at which a fixed point sum succeeds.
fn first_match<S: Copy, T>(
    left: &[S],
    right: &[S],
    mut glue: impl FnMut(S, S) -> crate::Result<T>,
) -> Outcome<T> {
    for &a in left {
        for &b in right {
            match glue(a, b) {
                Ok(t) => return Ok(t),
                Err(Error::SliceMismatch(_)) => continue,
                Err(e) => return Err(e.into()),
            }
        }
    }
    Err(Error::SliceMismatch("no pair of sites with matching slice representations".into()).into())
}

fn fixed_sum(a: &Data, b: &Data, at: Option<&[String]>) -> Outcome<Data> {
    Ok(match (a, b) {
        (Data::Forest(f1), Data::Forest(f2)) => Data::Forest(match at {
            Some([s1, s2]) => {
                forest5::fixed_point_sum(f1, parse_edge_site(s1)?, f2, parse_edge_site(s2)?)?
            }
            _ => {
                forest5::validate(f1).map_err(Error::InvalidData)?;
                forest5::validate(f2).map_err(Error::InvalidData)?;
                first_match(&edge_refs(f1), &edge_refs(f2), |x, y| {
                    forest5::fixed_point_sum(f1, x, f2, y)
                })?
            }
        }),
        (Data::Polygon(w1), Data::Polygon(w2)) => Data::Polygon(match at {
            Some([s1, s2]) => polygon5::fixed_point_sum(w1, parse_vertex(s1)?, w2, parse_vertex(s2)?)?,
            _ => {
                let (l, r): (Vec<usize>, Vec<usize>) = ((0..w1.len()).collect(), (0..w2.len()).collect());
                first_match(&l, &r, |x, y| polygon5::fixed_point_sum(w1, x, w2, y))?
            }
        }),
        (Data::Cycle(c1), Data::Cycle(c2)) => Data::Cycle(match at {
            Some([s1, s2]) => cycle4::fixed_point_sum(c1, parse_vertex(s1)?, c2, parse_vertex(s2)?)?,
            _ => {
                let (l, r): (Vec<usize>, Vec<usize>) = ((0..c1.len()).collect(), (0..c2.len()).collect());
                first_match(&l, &r, |x, y| cycle4::fixed_point_sum(c1, x, c2, y))?
            }
        }),
        (Data::Forest3(_), _) | (_, Data::Forest3(_)) => {
            return Err(Failure::Usage("sums of t3_forest data are not supported".into()))
        }
        _ => {
            return Err(Failure::Usage(format!(
                "cannot sum {} with {}",
                a.kind(),
                b.kind()
            )))
        }
    })
}

fn parse_triple(s: &str) -> Outcome<[i64; 3]> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("expected three integers a,b,c, got {s:?}")))?;
    parts
        .try_into()
        .map_err(|_| Failure::Usage(format!("expected three integers a,b,c, got {s:?}")))
}

fn parse_chamber(s: &str) -> Outcome<CircleChamberData> {
    let bad = || Failure::Usage(format!("expected b2,spin,p, got {s:?}"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [b2, spin, p] = parts[..] else {
        return Err(bad());
    };
    Ok(CircleChamberData {
        b2: b2.parse().map_err(|_| bad())?,
        spin: spin.parse().map_err(|_| bad())?,
        boundary_components: p.parse().map_err(|_| bad())?,
        simply_connected: true,
    })
}

fn execute(cmd: Command, env: &mut Env<'_>) -> Outcome<i32> {
    match cmd {
        Command::Validate(io) => {
            let d = env.load(&io.input, io.kind.as_deref())?;
            match d.validate() {
                Ok(()) => {
                    env.emit(&io.output, &json!({"ok": true}))?;
                    Ok(0)
                }
                Err(vs) => {
                    env.emit(&io.output, &json!({"ok": false, "violations": vs}))?;
                    Ok(1)
                }
            }
        }
        Command::Invariants(io) => {
            let d = env.load(&io.input, io.kind.as_deref())?;
            let report = invariants(&d)?;
            env.write_lines(&io.output, &[report])?;
            Ok(0)
        }
        Command::Canonicalize(io) => {
            let d = env.load(&io.input, io.kind.as_deref())?;
            let c = canonicalize(&d)?;
            env.emit(&io.output, &c)?;
            Ok(0)
        }
        Command::Sum {
            fixed,
            regular: _,
            at,
            output,
            kind,
            inputs,
        } => {
            if inputs.iter().filter(|p| *p == "-").count() > 1 {
                return Err(Failure::Usage("standard input can feed only one operand".into()));
            }
            let a = env.load(&inputs[0], kind.as_deref())?;
            let b = env.load(&inputs[1], kind.as_deref())?;
            let out = if fixed {
                fixed_sum(&a, &b, at.as_deref())?
            } else {
                if at.is_some() {
                    return Err(Failure::Usage("--at only applies to --fixed".into()));
                }
                match (&a, &b) {
                    (Data::Forest(f1), Data::Forest(f2)) => {
                        Data::Forest(forest5::regular_orbit_sum(f1, f2)?)
                    }
                    _ => {
                        return Err(Failure::Usage(
                            "regular orbit sums apply to t2_forest_dim5 data".into(),
                        ))
                    }
                }
            };
            env.emit(&output, &out)?;
            Ok(0)
        }
        Command::Quotient { circle, io } => {
            let w = Slope3::from_vec(parse_triple(&circle)?)?;
            let d = env.load(&io.input, io.kind.as_deref())?;
            let Data::Forest3(f) = d else {
                return Err(Failure::Usage(format!(
                    "quotient expects t3_forest, got {}",
                    d.kind()
                )));
            };
            env.emit(&io.output, &Data::Forest(quotient(&f, w)?))?;
            Ok(0)
        }
        Command::Enumerate {
            bounds,
            sides,
            output,
        } => {
            let mut lines = Vec::new();
            if let Some(b) = bounds {
                let [e, c, h] = parse_triple(&b)?;
                if e < 0 || c < 0 || h < 0 {
                    return Err(Failure::Usage("bounds must be non-negative".into()));
                }
                let table = enumerate_t2_forests(e as usize, c as usize, h as u64);
                lines.push(
                    json!({
                        "table": "t2_forest_dim5",
                        "edges": table.bounds.edges,
                        "components": table.bounds.components,
                        "max_height": table.bounds.max_height,
                        "height": "largest absolute slope entry of the canonical form",
                        "rows": table.rows.len(),
                    })
                    .to_string(),
                );
                lines.extend(table.rows.iter().map(to_json));
                let simply = table.rows.iter().filter(|r| r.pi1 == "trivial").count();
                let nonneg = table.rows.iter().filter(|r| r.nonneg).count();
                let _ = writeln!(
                    env.stderr,
                    "{} classes with E={e}, c={c}, height<={h}: {simply} simply connected, {nonneg} with non-negative curvature",
                    table.rows.len()
                );
            } else if let Some(n) = sides {
                if n < 2 {
                    return Err(Failure::Usage("a polygon has at least 2 sides".into()));
                }
                let rows = enumerate_so3(n);
                lines.push(json!({"table": "so3_polygon_dim5", "sides": n, "rows": rows.len()}).to_string());
                lines.extend(rows.iter().map(to_json));
                let types: Vec<String> = rows.iter().map(|r| r.so3_type.to_string()).collect();
                let _ = writeln!(env.stderr, "{} classes with {n} sides: {}", rows.len(), types.join(", "));
            }
            env.write_lines(&output, &lines)?;
            Ok(0)
        }
        Command::Catalog {
            group,
            dimension,
            nonneg,
            chamber,
            output,
        } => {
            if let Some(ch) = chamber {
                let t = catalog::circle_action_type(&parse_chamber(&ch)?)?;
                env.emit(&output, &json!({"type": t.to_string()}))?;
                return Ok(0);
            }
            let q = Query {
                group,
                dimension,
                nonneg,
            };
            env.emit(&output, &catalog::query(&q))?;
            Ok(0)
        }
        Command::NonnegCheck(io) => {
            let d = env.load(&io.input, io.kind.as_deref())?;
            let flag = match &d {
                Data::Forest(f) => forest5::nonneg_curvature_admissible(f)?,
                Data::Polygon(w) => polygon5::nonneg_curvature_admissible(w)?,
                _ => {
                    return Err(Failure::Usage(format!(
                        "nonneg-check is defined for 5-manifold data, not {}",
                        d.kind()
                    )))
                }
            };
            env.emit(&io.output, &json!({"nonneg": flag}))?;
            Ok(0)
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut env = Env {
        stdin,
        stdout,
        stderr,
    };
    match execute(cli.command, &mut env) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(env.stderr, "error: {msg}");
            2
        }
        Err(Failure::Data(v)) => {
            let _ = writeln!(env.stdout, "{v}");
            1
        }
    }
}
