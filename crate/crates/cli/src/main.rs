//! `gallai`: build, verify and certify connected edge-colourings.
//!
//! Exit status: 0 when every requested check passes, 1 when some check
//! fails (the certificate is still written), 2 for an invalid request and 3
//! when a search runs out of budget.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use gallai::certificate::{Certificate, CertifyRequest, ColourVerdict, EXIT_INVALID};
use gallai::format::{self, COLOURING_MAGIC, HYPERGRAPH_MAGIC};
use gallai::graph_constructions as gc;
use gallai::hypergraph_constructions as hc;
use gallai::search::{self, SearchWitness, TriangleSearchOptions};
use gallai::verify::{default_notion, is_connected, ConnectivityNotion, ScanMode};
use gallai::{EdgeColouring, Error, Hypergraph};

/// Environment variable giving the default worker count.
const WORKERS_ENV: &str = "GALLAI_WORKERS";

#[derive(Parser)]
#[command(name = "gallai", version, about = "Connected edge-colourings: constructions, checks and searches")]
struct Cli {
    /// Worker threads for enumeration and search [default: $GALLAI_WORKERS,
    /// else all cores]
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a colouring (or a 3-graph) and write it in the text format
    Construct {
        construction: Construction,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
        /// Same as --path-d
        #[arg(long, conflicts_with = "path_d")]
        d: Option<usize>,
        /// Connectivity notion for the optional certificate
        #[arg(long)]
        notion: Option<ConnectivityNotion>,
    },
    /// Check connectivity of every colour class of a file
    Verify {
        input: PathBuf,
        /// graph, pointwise, strong or covering [default: graph for r=2,
        /// strong otherwise]
        #[arg(long)]
        notion: Option<ConnectivityNotion>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Count multicoloured and tricoloured sets in a colouring file
    Count {
        input: PathBuf,
        #[command(flatten)]
        counts: Counts,
        /// Seed for --sample
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Construct or read a colouring, then verify and count in one run
    Certify {
        /// Colouring file; omit when using --construction
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        construction: Option<Construction>,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        notion: Option<ConnectivityNotion>,
        #[command(flatten)]
        counts: Counts,
        #[command(flatten)]
        out: Output,
    },
    /// Run an exhaustive or budgeted search
    Search {
        task: Task,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Node budget; accepts `1e9` style
        #[arg(long, default_value_t = 1_000_000_000, value_parser = parse_budget)]
        budget: u64,
        /// Independent runs for the tricoloured hunt
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        /// Disable symmetry breaking and pruning (triangle search)
        #[arg(long)]
        unreduced: bool,
        /// Known colouring whose family size seeds the triangle search
        #[arg(long)]
        incumbent: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Prime base colouring followed by repeated doubling
    Pipeline {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Construction {
    /// Circular-distance colouring of K_{2k+1} (--k)
    Cyclic,
    /// One colour on K_n^(r) (--n, --r)
    Monochromatic,
    /// Remove --vertex from --input
    DeleteVertex,
    /// Replace vertex i of --input by --sizes[i] vertices
    BlowUp,
    /// Doubling extension of --input with special colour --special
    Double,
    /// k-1 Hamiltonian paths plus a background class (--k, --n, --path-d, --seed)
    Paths,
    /// Step cycles on Z_n for 3-graphs (--k, --n)
    PointwiseCycles,
    /// Distance-type 4-colouring of K_17^(3)
    K17,
    /// Strong blow-up of --input, applied --times times
    StrongBlowup,
    /// Covering blow-up of --input, applied --times times
    CoveringBlowup,
    /// Parity 2-colouring of K_n^(4) (--n)
    Parity,
    /// 3-colouring of K_{n^2}^(4) from two parity bases (--n)
    Covering4graph,
    /// Sparse strongly connected 3-graph (--n); writes a hypergraph file
    Minimal3graph,
}

impl Construction {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Task {
    /// Fewest multicoloured-triangle colour sets (--k, --n)
    Triangles,
    /// Smallest family meeting every 3-partition (--k)
    PartitionFamily,
    /// Fewest edges of a strongly connected 3-graph (--n)
    Minimal3graph,
    /// Local search for a strongly connected 3-colouring without tricoloured
    /// 4-sets (--n, --seeds)
    TricolouredHunt,
}

#[derive(Args, Default)]
struct Params {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Excluded cycle length bound for the paths colouring (`--d` also works
    /// with `construct`)
    #[arg(long)]
    path_d: Option<usize>,
    /// Random seed for randomised constructions and sampling
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated class sizes for blow-up
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Base colouring file for derived constructions
    #[arg(long = "input")]
    base: Option<PathBuf>,
    #[arg(long)]
    special: Option<u8>,
    #[arg(long)]
    vertex: Option<usize>,
    #[arg(long, default_value_t = 1)]
    times: usize,
}

#[derive(Args, Default)]
struct Counts {
    /// Scan d-sets for multicoloured members [default: r+1 unless
    /// --tricoloured is given]
    #[arg(long)]
    d: Option<usize>,
    /// Count (r+1)-sets using at least this many colours
    #[arg(long)]
    tricoloured: Option<usize>,
    /// Sample this many random sets instead of a full scan
    #[arg(long, conflicts_with = "early_exit")]
    sample: Option<u64>,
    /// Stop at the first multicoloured set
    #[arg(long)]
    early_exit: bool,
}

impl Counts {
    fn mode(&self, seed: u64) -> ScanMode {
        match (self.sample, self.early_exit) {
            (Some(samples), _) => ScanMode::Sampled { samples, seed },
            (None, true) => ScanMode::EarlyExit,
            (None, false) => ScanMode::Full,
        }
    }
}

#[derive(Args, Default)]
struct Output {
    /// Where to write the colouring, hypergraph or witness
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Where to write the certificate [default: stdout]
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn parse_budget(s: &str) -> std::result::Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
        _ => Err(format!("`{s}` is not a whole number of nodes")),
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Run<T> {
    value.ok_or_else(|| Failure::Invalid(format!("missing --{flag}")))
}

enum Built {
    Colouring(EdgeColouring),
    Hypergraph(Hypergraph),
}

fn read_colouring(path: &Path) -> Run<EdgeColouring> {
    let file = File::open(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    format::decode(BufReader::new(file)).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn build(construction: Construction, p: &Params) -> Run<(Built, BTreeMap<String, Value>)> {
    let mut params = BTreeMap::new();
    let mut record = |key: &str, v: Value| {
        params.insert(key.to_string(), v);
    };
    let base = || read_colouring(&need(p.base.clone(), "input")?);
    let built = match construction {
        Construction::Cyclic => {
            let k = need(p.k, "k")?;
            record("k", k.into());
            Built::Colouring(gc::cyclic_prime_colouring(k)?)
        }
        Construction::Monochromatic => {
            let (n, r) = (need(p.n, "n")?, p.r.unwrap_or(2));
            record("n", n.into());
            record("r", r.into());
            Built::Colouring(EdgeColouring::monochromatic(n, r)?)
        }
        Construction::DeleteVertex => {
            let v = need(p.vertex, "vertex")?;
            record("vertex", v.into());
            Built::Colouring(gc::delete_vertex(&base()?, v)?)
        }
        Construction::BlowUp => {
            record("sizes", p.sizes.clone().into());
            Built::Colouring(gc::blow_up(&base()?, &p.sizes)?)
        }
        Construction::Double => {
            // later steps use the newest colour, as in the pipeline
            let mut c = base()?;
            let mut special = p.special.unwrap_or(c.k() as u8);
            record("special", special.into());
            for _ in 0..p.times {
                let hyp = gc::check_doubling_hypotheses(&c, special)?;
                c = gc::double_extension(&c, &hyp)?;
                special = c.k() as u8;
            }
            record("times", p.times.into());
            Built::Colouring(c)
        }
        Construction::Paths => {
            let (k, n, d) = (need(p.k, "k")?, need(p.n, "n")?, p.path_d.unwrap_or(3));
            record("k", k.into());
            record("n", n.into());
            record("d", d.into());
            record("seed", p.seed.into());
            Built::Colouring(gc::paths_colouring(k, n, p.seed, d)?)
        }
        Construction::PointwiseCycles => {
            let (k, n) = (need(p.k, "k")?, need(p.n, "n")?);
            record("k", k.into());
            record("n", n.into());
            Built::Colouring(hc::pointwise_cycles_colouring(k, n)?)
        }
        Construction::K17 => Built::Colouring(hc::k17_colouring()?),
        Construction::StrongBlowup | Construction::CoveringBlowup => {
            let mut c = base()?;
            for _ in 0..p.times {
                c = match construction {
                    Construction::StrongBlowup => hc::strong_blowup(&c)?,
                    _ => hc::covering_blowup(&c)?,
                };
            }
            record("times", p.times.into());
            Built::Colouring(c)
        }
        Construction::Parity => {
            let n = need(p.n, "n")?;
            record("n", n.into());
            Built::Colouring(hc::parity_covering_2colouring(n, (1, 2))?)
        }
        Construction::Covering4graph => {
            let n = need(p.n, "n")?;
            record("n", n.into());
            let base = hc::parity_covering_2colouring(n, (1, 2))?;
            Built::Colouring(hc::covering_4graph_colouring(&base, &base)?)
        }
        Construction::Minimal3graph => {
            let n = need(p.n, "n")?;
            record("n", n.into());
            Built::Hypergraph(hc::minimal_connected_3graph(n)?)
        }
    };
    if let Some(path) = &p.base {
        params.insert("input".into(), path.display().to_string().into());
    }
    Ok((built, params))
}

/// The notion each construction is meant to satisfy.
fn natural_notion(construction: Construction, r: usize) -> ConnectivityNotion {
    match construction {
        Construction::PointwiseCycles => ConnectivityNotion::Pointwise,
        Construction::CoveringBlowup | Construction::Parity | Construction::Covering4graph => {
            ConnectivityNotion::Covering
        }
        _ => default_notion(r),
    }
}

fn write_to(path: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Run<()> {
    match path {
        Some(p) => {
            let mut f = io::BufWriter::new(File::create(p)?);
            write(&mut f)?;
            f.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
        }
    }
    Ok(())
}

fn write_built(built: &Built, path: Option<&Path>) -> Run<()> {
    write_to(path, |w| match built {
        Built::Colouring(c) => format::encode(c, w),
        Built::Hypergraph(h) => format::encode_hypergraph(h, w),
    })
}

fn emit(cert: &Certificate, path: Option<&Path>) -> Run<i32> {
    let text = cert.to_json();
    write_to(path, |w| w.write_all(text.as_bytes()))?;
    Ok(cert.exit_status())
}

fn hypergraph_certificate(h: &Hypergraph, notion: ConnectivityNotion, params: BTreeMap<String, Value>) -> Run<Certificate> {
    let start = std::time::Instant::now();
    let report = is_connected(h, notion)?;
    Ok(Certificate {
        construction: "hypergraph".into(),
        params,
        n: h.n(),
        r: h.r(),
        k: 1,
        connectivity: vec![ColourVerdict {
            colour: 1,
            notion,
            ok: report.ok(),
            verdict: report.verdict,
            witness: report.witness,
        }],
        multicoloured: None,
        tricoloured: None,
        search: None,
        sampled: false,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn first_line(path: &Path) -> Run<String> {
    let mut line = String::new();
    BufReader::new(File::open(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?)
        .read_line(&mut line)?;
    Ok(line.trim_end().to_string())
}

fn file_params(path: &Path) -> BTreeMap<String, Value> {
    BTreeMap::from([("input".to_string(), Value::from(path.display().to_string()))])
}

fn run(cli: Cli) -> Run<i32> {
    let workers = cli.workers.unwrap_or(0);
    match cli.command {
        Command::Construct {
            construction,
            mut params,
            out,
            d,
            notion,
        } => {
            params.path_d = params.path_d.or(d);
            let (built, record) = build(construction, &params)?;
            write_built(&built, out.output.as_deref())?;
            let Some(cert_path) = out.cert.as_deref() else {
                return Ok(0);
            };
            let cert = match &built {
                Built::Colouring(c) => {
                    let req = CertifyRequest {
                        notion: Some(notion.unwrap_or_else(|| natural_notion(construction, c.r()))),
                        ..Default::default()
                    };
                    Certificate::for_colouring(&construction.name(), record, c, &req)?
                }
                Built::Hypergraph(h) => {
                    let mut cert = hypergraph_certificate(h, notion.unwrap_or(ConnectivityNotion::Strong), record)?;
                    cert.construction = construction.name();
                    cert
                }
            };
            emit(&cert, Some(cert_path))
        }
        Command::Verify { input, notion, cert } => {
            let params = file_params(&input);
            let certificate = if first_line(&input)? == HYPERGRAPH_MAGIC {
                let file = BufReader::new(File::open(&input)?);
                let h = format::decode_hypergraph(file)?;
                hypergraph_certificate(&h, notion.unwrap_or_else(|| default_notion(h.r())), params)?
            } else {
                let c = read_colouring(&input)?;
                let req = CertifyRequest {
                    notion: Some(notion.unwrap_or_else(|| default_notion(c.r()))),
                    ..Default::default()
                };
                Certificate::for_colouring("file", params, &c, &req)?
            };
            emit(&certificate, cert.as_deref())
        }
        Command::Count {
            input,
            counts,
            seed,
            cert,
        } => {
            let c = read_colouring(&input)?;
            let req = count_request(&c, &counts, seed, None);
            let certificate = Certificate::for_colouring("file", file_params(&input), &c, &req)?;
            emit(&certificate, cert.as_deref())
        }
        Command::Certify {
            input,
            construction,
            params,
            notion,
            counts,
            out,
        } => {
            let (c, name, record, natural) = match (input, construction) {
                (Some(path), _) => {
                    if first_line(&path)? != COLOURING_MAGIC {
                        return Err(Failure::Invalid(format!("{}: not a colouring file", path.display())));
                    }
                    let c = read_colouring(&path)?;
                    let r = c.r();
                    (c, "file".to_string(), file_params(&path), default_notion(r))
                }
                (None, Some(construction)) => match build(construction, &params)? {
                    (Built::Colouring(c), record) => {
                        let natural = natural_notion(construction, c.r());
                        (c, construction.name(), record, natural)
                    }
                    (Built::Hypergraph(h), record) => {
                        write_built(&Built::Hypergraph(h.clone()), out.output.as_deref())?;
                        let cert = hypergraph_certificate(&h, notion.unwrap_or(ConnectivityNotion::Strong), record)?;
                        return emit(&cert, out.cert.as_deref());
                    }
                },
                (None, None) => return Err(Failure::Invalid("give a colouring file or --construction".into())),
            };
            if out.output.is_some() {
                write_built(&Built::Colouring(c.clone()), out.output.as_deref())?;
            }
            let req = count_request(&c, &counts, params.seed, Some(notion.unwrap_or(natural)));
            let cert = Certificate::for_colouring(&name, record, &c, &req)?;
            emit(&cert, out.cert.as_deref())
        }
        Command::Search {
            task,
            k,
            n,
            budget,
            seeds,
            unreduced,
            incumbent,
            out,
        } => {
            let report = match task {
                Task::Triangles => {
                    let mut opts = TriangleSearchOptions::new(budget);
                    opts.workers = workers.max(1);
                    opts.symmetry_breaking = !unreduced;
                    opts.pruning = !unreduced;
                    opts.incumbent = incumbent.as_deref().map(read_colouring).transpose()?;
                    search::min_multicoloured_triangles_with(need(k, "k")?, need(n, "n")?, &opts)?
                }
                Task::PartitionFamily => search::min_partition_family(need(k, "k")?, budget)?,
                Task::Minimal3graph => search::min_connected_3graph_edges(need(n, "n")?, budget)?,
                Task::TricolouredHunt => {
                    search::tricoloured_counterexample_hunt(need(n, "n")?, k.unwrap_or(3), seeds, budget)?
                }
            };
            if let Some(path) = out.output.as_deref() {
                match &report.witness {
                    Some(SearchWitness::Colouring(c)) => write_built(&Built::Colouring(c.clone()), Some(path))?,
                    Some(SearchWitness::Hypergraph(h)) => write_built(&Built::Hypergraph(h.clone()), Some(path))?,
                    Some(SearchWitness::Family(f)) => {
                        let text = serde_json::to_string_pretty(f).expect("family serialises") + "\n";
                        write_to(Some(path), |w| w.write_all(text.as_bytes()))?;
                    }
                    None => {}
                }
            }
            emit(&Certificate::for_search(report), out.cert.as_deref())
        }
        Command::Pipeline { k, out } => {
            let result = gc::upper_bound_pipeline(k)?;
            let record = BTreeMap::from([
                ("k".to_string(), Value::from(k)),
                ("k0".to_string(), Value::from(result.k0)),
                ("predicted".to_string(), Value::from(result.predicted_count)),
            ]);
            if out.output.is_some() {
                write_built(&Built::Colouring(result.colouring.clone()), out.output.as_deref())?;
            }
            let req = CertifyRequest {
                notion: Some(ConnectivityNotion::Graph),
                multicoloured: Some((3, ScanMode::Full)),
                tricoloured: None,
            };
            let cert = Certificate::for_colouring("pipeline", record, &result.colouring, &req)?;
            emit(&cert, out.cert.as_deref())
        }
    }
}

fn count_request(c: &EdgeColouring, counts: &Counts, seed: u64, notion: Option<ConnectivityNotion>) -> CertifyRequest {
    let mode = counts.mode(seed);
    let d = counts.d.or(if counts.tricoloured.is_none() { Some(c.r() + 1) } else { None });
    CertifyRequest {
        notion,
        multicoloured: d.map(|d| (d, mode)),
        tricoloured: counts.tricoloured.map(|t| (t, mode)),
    }
}

fn configure_workers(flag: Option<usize>) -> Run<Option<usize>> {
    let from_env = match std::env::var(WORKERS_ENV) {
        Ok(v) => Some(
            v.parse::<usize>()
                .map_err(|_| Failure::Invalid(format!("{WORKERS_ENV}={v} is not a number")))?,
        ),
        Err(_) => None,
    };
    let workers = flag.or(from_env).filter(|&w| w > 0);
    if let Some(w) = workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| Failure::Invalid(e.to_string()))?;
    }
    Ok(workers)
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    let status = configure_workers(cli.workers).and_then(|w| {
        cli.workers = w;
        run(cli)
    });
    match status {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Invalid(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INVALID as u8)
        }
    }
}
