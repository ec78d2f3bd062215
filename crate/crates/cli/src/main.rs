//! `plumbline`: command line front end for the resolution-graph invariant
//! library.
//!
//! Graphs are given as `corpus:<name>`, a file path, or `-` for stdin, in
//! the line-oriented format `vertex <id> <euler>` / `edge <id> <id>` with
//! `#` comments.  Cycles are written `id=value,id=value` with rational
//! values `p/q` (missing ids are zero).  Seifert data reads
//! `b0=<int> legs=<alpha>,<omega>[x<count>][;...]`.
//!
//! Every subcommand accepts `--json` for machine output; rationals are
//! serialized as `p/q` strings and cycles as vertex-keyed objects with a
//! deterministic key order.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use plumbline_core::chart::{self, ChartForm, Cut};
use plumbline_core::corpus;
use plumbline_core::graph::{parse_graph, GraphError, IntCycle, RatCycle, ResolutionGraph};
use plumbline_core::lattice;
use plumbline_core::mpoly::MRat;
use plumbline_core::rat::{parse_rat, rat_str, Rat};
use plumbline_core::seifert::{self, SeifertData};
use plumbline_core::si::{self, CurveModel, SiInstance};
use plumbline_core::zeta;

#[derive(Parser)]
#[command(
    name = "plumbline",
    version,
    about = "exact invariants of resolution graphs"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized genericity draws (printed when used).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// `corpus:<name>`, a graph file path, or `-` for stdin.
    graph: String,
}

#[derive(Subcommand)]
enum Command {
    /// Summary invariants of a graph.
    Invariants(GraphArg),
    /// The minimal (fundamental) cycle.
    Zmin(GraphArg),
    /// The canonical cycle.
    Zk(GraphArg),
    /// Riemann-Roch chi of a cycle.
    Chi {
        #[command(flatten)]
        graph: GraphArg,
        /// cycle, `id=p/q,...`
        #[arg(long)]
        cycle: String,
    },
    /// Is the Abel map dominant for the Chern class l' on the cycle Z?
    Dominant {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        lp: String,
        #[arg(long)]
        z: String,
    },
    /// Generic h1 and h0 on Pic^{l'}(Z).
    GenericH1 {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        lp: String,
        #[arg(long)]
        z: String,
    },
    /// Membership in the dominant semigroup.
    Sdom {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        cycle: String,
    },
    /// Membership in the vanishing set Van'.
    Van {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        cycle: String,
    },
    /// Minimal l with -l' + l in the dominant semigroup.
    Ldom {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        lp: String,
    },
    /// Cohomology cycle and box minimization data.
    Zcoh {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        lp: String,
        #[arg(long)]
        z: String,
    },
    /// Truncated Poincare series terms.
    Series {
        #[command(flatten)]
        graph: GraphArg,
        /// per-vertex exponent caps, comma separated in vertex order
        #[arg(long)]
        bound: String,
    },
    /// Counting function of the class-zero coefficients.
    Counting {
        #[command(flatten)]
        graph: GraphArg,
        /// target cycle in S' and L, `id=n,...`
        #[arg(long)]
        target: String,
    },
    /// sigma(n*l) - chi(n*l) table and its stabilized value.
    PeriodicConstant {
        #[command(flatten)]
        graph: GraphArg,
        /// base cycle l in L with E*-support I, `id=n,...`
        #[arg(long)]
        l: String,
        #[arg(long, default_value_t = 1)]
        n0: i64,
        #[arg(long, default_value_t = 9)]
        n1: i64,
    },
    /// Weighted-homogeneous (Seifert) computations.
    Wh {
        #[command(subcommand)]
        cmd: WhCmd,
    },
    /// Local-chart Abel map computations.
    Abel {
        #[command(subcommand)]
        cmd: AbelCmd,
    },
    /// Superisolated germs.
    Si {
        #[command(subcommand)]
        cmd: SiCmd,
    },
    /// List corpus graph names, or print one graph file.
    Corpus { name: Option<String> },
}

#[derive(Args)]
struct SeifertArg {
    /// `b0=<int> legs=<a>,<w>[x<count>][;...]`
    #[arg(long)]
    seifert: String,
}

#[derive(Subcommand)]
enum WhCmd {
    /// Pinkham's geometric genus.
    Pg(SeifertArg),
    /// n_ell table, W, p_g, omega', tau.
    Invariants(SeifertArg),
    /// The s(ell) recursion and s(0).
    S(SeifertArg),
    /// h1(Z, O(-k E*_center)).
    H1Central {
        #[command(flatten)]
        sd: SeifertArg,
        #[arg(long)]
        k: i64,
    },
    /// h1(Z, O(-E*_end)) of a leg, residue-matrix ground truth.
    H1End {
        #[command(flatten)]
        sd: SeifertArg,
        /// leg index, 1-based
        #[arg(long)]
        leg: usize,
    },
    /// The p_g basis forms (ell, n, m_j, pole order).
    Forms(SeifertArg),
    /// dim im(c^{-E*_center}) = p_g - s(0).
    DimIm(SeifertArg),
    /// dim V(I) for a vertex subset of the star graph.
    DimV {
        #[command(flatten)]
        sd: SeifertArg,
        /// comma separated vertex ids (of the graph built from the data)
        #[arg(long)]
        i: String,
    },
    /// The star-shaped graph of the Seifert data, as a graph file.
    Graph(SeifertArg),
}

#[derive(Subcommand)]
enum AbelCmd {
    /// Abel-map coordinates of a jet cut against the form basis.
    Map {
        #[command(flatten)]
        sd: SeifertArg,
        /// rational jet coefficients `c0,c1,...`; with --symbolic, the jet
        /// length (coefficients become variables)
        #[arg(long)]
        jet: String,
        #[arg(long)]
        symbolic: bool,
    },
    /// Rank and h1 of the residue constraint system.
    Rank {
        #[command(flatten)]
        sd: SeifertArg,
        /// rational jet `c0,c1,...` for a jet cut
        #[arg(long)]
        jet: Option<String>,
        /// comma separated points for transversal point cuts
        #[arg(long)]
        points: Option<String>,
    },
    /// Pairing of one basis form against a jet cut.
    Pair {
        #[command(flatten)]
        sd: SeifertArg,
        /// form selector `ell,n`
        #[arg(long)]
        form: String,
        #[arg(long)]
        jet: String,
    },
}

#[derive(Subcommand)]
enum SiCmd {
    /// p_g = d(d-1)(d-2)/6.
    Pg {
        #[arg(long)]
        d: i64,
    },
    /// Generic dim im(c^{-k E0*}) by the min-sum formula.
    Dimim {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
    },
    /// First dominant k.
    FirstDominant {
        #[arg(long)]
        d: i64,
    },
    /// Full order-of-vanishing constraint rank.
    Rank {
        #[arg(long)]
        d: i64,
        /// number of generic cuts (parameters shifted by --seed)
        #[arg(long)]
        k: Option<usize>,
        /// curve model: `standard` (u^d = v^{d-1}) or `graph` (v = u^d)
        #[arg(long, default_value = "standard")]
        model: String,
        /// CSV file of points `u,v` on the chosen curve model
        #[arg(long)]
        points_file: Option<String>,
    },
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. `plumbline ... | head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn load_graph(arg: &GraphArg) -> Result<ResolutionGraph, GraphError> {
    let text = if let Some(name) = arg.graph.strip_prefix("corpus:") {
        corpus::source(name)
            .ok_or_else(|| GraphError::Parse(format!("unknown corpus graph `{name}`")))?
    } else if arg.graph == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| GraphError::Parse(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(&arg.graph).map_err(|e| GraphError::Parse(e.to_string()))?
    };
    parse_graph(&text)
}

fn parse_cycle(g: &ResolutionGraph, s: &str) -> Result<RatCycle, GraphError> {
    let mut m = BTreeMap::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (id, val) = part
            .split_once('=')
            .ok_or_else(|| GraphError::Parse(format!("bad cycle entry `{part}`")))?;
        let v = parse_rat(val).ok_or_else(|| GraphError::Parse(format!("bad rational `{val}`")))?;
        m.insert(id.trim().to_string(), v);
    }
    g.cycle_from_map(&m)
}

fn parse_int_cycle(g: &ResolutionGraph, s: &str) -> Result<IntCycle, GraphError> {
    parse_cycle(g, s)?
        .to_int()
        .ok_or_else(|| GraphError::Parse("cycle must be integral".into()))
}

fn parse_seifert(s: &str) -> Result<SeifertData, GraphError> {
    seifert::parse_inline(s)
}

fn parse_rat_list(s: &str) -> Result<Vec<Rat>, GraphError> {
    s.split(',')
        .map(|p| parse_rat(p).ok_or_else(|| GraphError::Parse(format!("bad rational `{p}`"))))
        .collect()
}

fn cycle_json(g: &ResolutionGraph, x: &RatCycle) -> Value {
    json!(g.cycle_map(x))
}

fn cycle_str(g: &ResolutionGraph, x: &RatCycle) -> String {
    g.ids()
        .iter()
        .zip(&x.0)
        .map(|(id, v)| format!("{id}={}", rat_str(v)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn emit(json_mode: bool, value: Value, human: impl FnOnce()) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        human();
    }
}

fn run(cli: &Cli) -> Result<(), GraphError> {
    match &cli.command {
        Command::Invariants(garg) => {
            let g = load_graph(garg)?;
            let zmin = lattice::laufer_zmin(&g);
            let zk = g.canonical_cycle();
            let h1 = lattice::h1_zmin(&g);
            let chi_zmin = g.chi(&zmin.to_rat());
            let rational = lattice::is_rational(&g);
            let rat_or_ell = lattice::is_rational_or_elliptic(&g);
            let v = json!({
                "graph": g.to_json(),
                "vertices": g.n(),
                "discriminant": g.discriminant().to_string(),
                "z_min": cycle_json(&g, &zmin.to_rat()),
                "z_k": cycle_json(&g, &zk),
                "chi_z_min": rat_str(&chi_zmin),
                "h1_o_zmin": h1.to_string(),
                "rational": rational,
                "rational_or_elliptic": rat_or_ell,
            });
            emit(cli.json, v, || {
                println!("vertices:             {}", g.n());
                println!("discriminant det(-M): {}", g.discriminant());
                println!("Z_min:                {}", cycle_str(&g, &zmin.to_rat()));
                println!("Z_K:                  {}", cycle_str(&g, &zk));
                println!("chi(Z_min):           {}", rat_str(&chi_zmin));
                println!("h1(O_Zmin):           {h1}");
                println!("rational:             {rational}");
                println!("rational or elliptic: {rat_or_ell}");
            });
        }
        Command::Zmin(garg) => {
            let g = load_graph(garg)?;
            let zmin = lattice::laufer_zmin(&g).to_rat();
            emit(cli.json, cycle_json(&g, &zmin), || {
                println!("{}", cycle_str(&g, &zmin))
            });
        }
        Command::Zk(garg) => {
            let g = load_graph(garg)?;
            let zk = g.canonical_cycle();
            emit(cli.json, cycle_json(&g, &zk), || {
                println!("{}", cycle_str(&g, &zk))
            });
        }
        Command::Chi { graph, cycle } => {
            let g = load_graph(graph)?;
            let x = parse_cycle(&g, cycle)?;
            let chi = g.chi(&x);
            emit(cli.json, json!({ "chi": rat_str(&chi) }), || {
                println!("{}", rat_str(&chi))
            });
        }
        Command::Dominant { graph, lp, z } => {
            let g = load_graph(graph)?;
            let lp = parse_cycle(&g, lp)?;
            let z = parse_int_cycle(&g, z)?;
            let dom = lattice::is_dominant(&g, &lp, &z)?;
            emit(cli.json, json!({ "dominant": dom }), || println!("{dom}"));
        }
        Command::GenericH1 { graph, lp, z } => {
            let g = load_graph(graph)?;
            let lp = parse_cycle(&g, lp)?;
            let z = parse_int_cycle(&g, z)?;
            let h1 = lattice::generic_h1(&g, &lp, &z)?;
            let h0 = lattice::generic_h0(&g, &lp, &z)?;
            emit(
                cli.json,
                json!({ "h1": h1.to_string(), "h0": h0.to_string() }),
                || println!("h1 = {h1}, h0 = {h0}"),
            );
        }
        Command::Sdom { graph, cycle } => {
            let g = load_graph(graph)?;
            let x = parse_cycle(&g, cycle)?;
            let m = lattice::in_sdom(&g, &x);
            emit(cli.json, json!({ "in_sdom": m }), || println!("{m}"));
        }
        Command::Van { graph, cycle } => {
            let g = load_graph(graph)?;
            let x = parse_cycle(&g, cycle)?;
            let m = lattice::in_van(&g, &x);
            emit(cli.json, json!({ "in_van": m }), || println!("{m}"));
        }
        Command::Ldom { graph, lp } => {
            let g = load_graph(graph)?;
            let lp = parse_cycle(&g, lp)?;
            let ld = lattice::l_dom(&g, &lp).to_rat();
            emit(cli.json, cycle_json(&g, &ld), || {
                println!("{}", cycle_str(&g, &ld))
            });
        }
        Command::Zcoh { graph, lp, z } => {
            let g = load_graph(graph)?;
            let lp = parse_cycle(&g, lp)?;
            let z = parse_int_cycle(&g, z)?;
            let r = lattice::min_chi_box(&g, &lp, &z)?;
            let v = json!({
                "value": rat_str(&r.min_value),
                "minimizer": cycle_json(&g, &r.minimal_minimizer.to_rat()),
                "count": r.minimizer_count,
                "bound": cycle_json(&g, &r.search_bound.to_rat()),
            });
            emit(cli.json, v, || {
                println!("min chi(-l'+l): {}", rat_str(&r.min_value));
                println!(
                    "Z_coh:          {}",
                    cycle_str(&g, &r.minimal_minimizer.to_rat())
                );
                println!("minimizers:     {}", r.minimizer_count);
                println!(
                    "box:            {}",
                    cycle_str(&g, &r.search_bound.to_rat())
                );
            });
        }
        Command::Series { graph, bound } => {
            let g = load_graph(graph)?;
            let bound: Vec<i64> = bound
                .split(',')
                .map(|b| {
                    b.trim()
                        .parse::<i64>()
                        .map_err(|_| GraphError::Parse(format!("bad bound `{b}`")))
                })
                .collect::<Result<_, _>>()?;
            if bound.len() != g.n() {
                return Err(GraphError::Parse(format!(
                    "expected {} bounds, got {}",
                    g.n(),
                    bound.len()
                )));
            }
            let series = zeta::expand_z(&g, &bound);
            let terms: Vec<Value> = series
                .terms
                .iter()
                .map(|(e, c)| json!({ "exponent": e, "coefficient": c.to_string() }))
                .collect();
            emit(cli.json, json!(terms), || {
                for (e, c) in &series.terms {
                    println!("{e:?}  {c}");
                }
            });
        }
        Command::Counting { graph, target } => {
            let g = load_graph(graph)?;
            let target = parse_int_cycle(&g, target)?;
            let sigma = zeta::counting_sigma_direct(&g, &target);
            emit(cli.json, json!({ "sigma": sigma.to_string() }), || {
                println!("{sigma}")
            });
        }
        Command::PeriodicConstant { graph, l, n0, n1 } => {
            let g = load_graph(graph)?;
            let l = parse_int_cycle(&g, l)?;
            let mut table = Vec::new();
            for n in *n0..=*n1 {
                let nl = IntCycle(l.0.iter().map(|x| x * n).collect());
                let sigma = zeta::counting_sigma_direct(&g, &nl);
                let chi = g.chi(&nl.to_rat());
                let diff = &sigma - chi.to_integer();
                table.push((n, sigma, diff));
            }
            let pc = zeta::periodic_constant(&g, &l, *n0, *n1)?;
            let rows: Vec<Value> = table
                .iter()
                .map(|(n, s, d)| {
                    json!({ "n": n, "sigma": s.to_string(), "sigma_minus_chi": d.to_string() })
                })
                .collect();
            let v = json!({
                "table": rows,
                "constant": pc.0.to_string(),
                "stabilizes_at": pc.1,
            });
            emit(cli.json, v, || {
                println!("{:>4} {:>12} {:>16}", "n", "sigma", "sigma - chi");
                for (n, s, d) in &table {
                    println!("{n:>4} {s:>12} {d:>16}");
                }
                println!("constant = {} (from n = {})", pc.0, pc.1);
            });
        }
        Command::Wh { cmd } => run_wh(cli, cmd)?,
        Command::Abel { cmd } => run_abel(cli, cmd)?,
        Command::Si { cmd } => run_si(cli, cmd)?,
        Command::Corpus { name } => match name {
            None => {
                emit(cli.json, json!(corpus::NAMES), || {
                    for n in corpus::NAMES {
                        println!("{n}");
                    }
                });
            }
            Some(n) => {
                let src = corpus::source(n)
                    .ok_or_else(|| GraphError::Parse(format!("unknown corpus graph `{n}`")))?;
                emit(cli.json, json!({ "name": n, "source": src }), || {
                    print!("{src}")
                });
            }
        },
    }
    Ok(())
}

fn run_wh(cli: &Cli, cmd: &WhCmd) -> Result<(), GraphError> {
    match cmd {
        WhCmd::Pg(sd) => {
            let sd = parse_seifert(&sd.seifert)?;
            let pg = seifert::wh_invariants(&sd)?.pg;
            emit(cli.json, json!({ "pg": pg.to_string() }), || {
                println!("{pg}")
            });
        }
        WhCmd::Invariants(sd) => {
            let sd = parse_seifert(&sd.seifert)?;
            let inv = seifert::wh_invariants(&sd)?;
            let v = json!({
                "e": rat_str(&sd.euler_number()),
                "ell_max": inv.ell_max,
                "n": inv.n,
                "w": inv.w,
                "pg": inv.pg.to_string(),
                "omega_prime": inv.omega_prime,
                "tau": inv.tau,
            });
            emit(cli.json, v, || {
                println!("e       = {}", rat_str(&sd.euler_number()));
                println!("ell_max = {}", inv.ell_max);
                println!("W       = {:?}", inv.w);
                for &l in &inv.w {
                    println!("  n_{l} = {}", inv.n[l as usize]);
                }
                println!("p_g     = {}", inv.pg);
                println!("omega'  = {:?}", inv.omega_prime);
                println!("tau     = {:?}", inv.tau);
            });
        }
        WhCmd::S(sd) => {
            let sd = parse_seifert(&sd.seifert)?;
            let (s, s0) = seifert::s_recursion(&sd)?;
            emit(cli.json, json!({ "s": s, "s0": s0 }), || {
                for (l, v) in s.iter().enumerate() {
                    println!("s({l}) = {v}");
                }
                println!("s(0) = {s0}");
            });
        }
        WhCmd::H1Central { sd, k } => {
            let sd = parse_seifert(&sd.seifert)?;
            let h1 = seifert::h1_central(&sd, *k)?;
            emit(cli.json, json!({ "h1": h1.to_string() }), || {
                println!("{h1}")
            });
        }
        WhCmd::H1End { sd, leg } => {
            let sd = parse_seifert(&sd.seifert)?;
            if *leg == 0 || *leg > sd.nu() {
                return Err(GraphError::BadRange);
            }
            let pts = seifert::default_leg_points(sd.nu());
            let r = seifert::h1_end(&sd, leg - 1, &pts)?;
            let v = json!({
                "h1": r.h1.to_string(),
                "printed_formula_h1": r.printed_formula_h1.to_string(),
                "agrees": r.agrees,
            });
            emit(cli.json, v, || {
                println!("h1 (residue matrix)  = {}", r.h1);
                println!("h1 (printed formula) = {}", r.printed_formula_h1);
                if !r.agrees {
                    println!("note: the printed closed formula disagrees with the matrix rank");
                }
            });
        }
        WhCmd::Forms(sd) => {
            let sd = parse_seifert(&sd.seifert)?;
            let forms = seifert::wh_form_basis(&sd)?;
            let rows: Vec<Value> = forms
                .iter()
                .map(|f| json!({ "ell": f.ell, "n": f.n, "m": f.m, "pole": f.pole }))
                .collect();
            emit(cli.json, json!(rows), || {
                for f in &forms {
                    println!(
                        "ell = {}, n = {}, m = {:?}, pole = {}",
                        f.ell, f.n, f.m, f.pole
                    );
                }
            });
        }
        WhCmd::DimIm(sd) => {
            let sd = parse_seifert(&sd.seifert)?;
            let dim = seifert::dim_im_central(&sd)?;
            let s0 = seifert::h1_generic_central(&sd)?;
            let v = json!({ "dim_im": dim.to_string(), "s0": s0, "dominant": s0 == 0 });
            emit(cli.json, v, || {
                println!("dim im = {dim} (h1 generic = {s0}, dominant: {})", s0 == 0)
            });
        }
        WhCmd::DimV { sd, i } => {
            let sd = parse_seifert(&sd.seifert)?;
            let g = seifert::graph_from_seifert(&sd)?;
            let iset: Vec<usize> = i
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|id| {
                    g.vertex(id.trim())
                        .ok_or_else(|| GraphError::UnknownVertex(id.trim().into()))
                })
                .collect::<Result<_, _>>()?;
            let dim = seifert::dim_v_wh(&g, &iset)?;
            emit(cli.json, json!({ "dim_v": dim.to_string() }), || {
                println!("{dim}")
            });
        }
        WhCmd::Graph(sd) => {
            let sd = parse_seifert(&sd.seifert)?;
            let g = seifert::graph_from_seifert(&sd)?;
            let v = json!(g.to_json());
            emit(cli.json, v, || {
                for v in 0..g.n() {
                    println!("vertex {} {}", g.id(v), g.euler[v]);
                }
                for &(a, b) in &g.edges {
                    println!("edge {} {}", g.id(a), g.id(b));
                }
            });
        }
    }
    Ok(())
}

fn run_abel(cli: &Cli, cmd: &AbelCmd) -> Result<(), GraphError> {
    match cmd {
        AbelCmd::Map { sd, jet, symbolic } => {
            let sd = parse_seifert(&sd.seifert)?;
            let pts = seifert::default_leg_points(sd.nu());
            let basis = seifert::wh_form_basis(&sd)?;
            if *symbolic {
                let len: usize = jet
                    .parse()
                    .map_err(|_| GraphError::Parse("--symbolic expects the jet length".into()))?;
                // symbolic mode is kept to few parameters to bound
                // expression swell
                if len == 0 || len > 4 {
                    return Err(GraphError::BadRange);
                }
                let forms: Vec<ChartForm<MRat>> = chart::wh_chart_forms(&sd, &pts)?;
                let jet: Vec<MRat> = (0..len).map(MRat::var).collect();
                let coords = chart::abel_map_chart(&forms, &[Cut::jet(jet)])?;
                let rows: Vec<Value> = basis
                    .iter()
                    .zip(&coords)
                    .map(|(f, c)| json!({ "ell": f.ell, "n": f.n, "coord": c.to_string() }))
                    .collect();
                emit(cli.json, json!(rows), || {
                    for (f, c) in basis.iter().zip(&coords) {
                        println!("(ell={}, n={}): {}", f.ell, f.n, c);
                    }
                });
            } else {
                let jet = parse_rat_list(jet)?;
                let forms: Vec<ChartForm<Rat>> = chart::wh_chart_forms(&sd, &pts)?;
                let coords = chart::abel_map_chart(&forms, &[Cut::jet(jet)])?;
                let rows: Vec<Value> = basis
                    .iter()
                    .zip(&coords)
                    .map(|(f, c)| json!({ "ell": f.ell, "n": f.n, "coord": rat_str(c) }))
                    .collect();
                emit(cli.json, json!(rows), || {
                    for (f, c) in basis.iter().zip(&coords) {
                        println!("(ell={}, n={}): {}", f.ell, f.n, rat_str(c));
                    }
                });
            }
        }
        AbelCmd::Rank { sd, jet, points } => {
            let sd = parse_seifert(&sd.seifert)?;
            let pts = seifert::default_leg_points(sd.nu());
            let forms: Vec<ChartForm<Rat>> = chart::wh_chart_forms(&sd, &pts)?;
            let mut cuts: Vec<Cut<Rat>> = Vec::new();
            if let Some(j) = jet {
                cuts.push(Cut::jet(parse_rat_list(j)?));
            }
            if let Some(ps) = points {
                for q in parse_rat_list(ps)? {
                    cuts.push(Cut::point(q));
                }
            }
            if cuts.is_empty() {
                return Err(GraphError::Parse("need --jet and/or --points".into()));
            }
            let (rank, h1) = chart::residue_constraint_rank(&forms, &cuts)?;
            emit(cli.json, json!({ "rank": rank, "h1": h1 }), || {
                println!("rank = {rank}, h1 = {h1}")
            });
        }
        AbelCmd::Pair { sd, form, jet } => {
            let sd = parse_seifert(&sd.seifert)?;
            let pts = seifert::default_leg_points(sd.nu());
            let (ell, n) = form
                .split_once(',')
                .ok_or_else(|| GraphError::Parse("form selector is `ell,n`".into()))?;
            let ell: i64 = ell
                .trim()
                .parse()
                .map_err(|_| GraphError::Parse("bad ell".into()))?;
            let n: i64 = n
                .trim()
                .parse()
                .map_err(|_| GraphError::Parse("bad n".into()))?;
            let basis = seifert::wh_form_basis(&sd)?;
            let w = basis
                .iter()
                .find(|f| f.ell == ell && f.n == n)
                .ok_or_else(|| GraphError::Parse(format!("no basis form ell={ell}, n={n}")))?;
            let form: ChartForm<Rat> = chart::wh_chart_form(w, &pts);
            let jet = parse_rat_list(jet)?;
            let val = chart::pairing_coord(&form, &Cut::jet(jet))?;
            emit(cli.json, json!({ "pairing": rat_str(&val) }), || {
                println!("{}", rat_str(&val))
            });
        }
    }
    Ok(())
}

fn run_si(cli: &Cli, cmd: &SiCmd) -> Result<(), GraphError> {
    match cmd {
        SiCmd::Pg { d } => {
            let pg = si::si_pg(*d);
            emit(cli.json, json!({ "pg": pg.to_string() }), || {
                println!("{pg}")
            });
        }
        SiCmd::Dimim { d, k } => {
            let dim = si::si_dim_im_generic(*d, *k);
            let dom = dim == si::si_pg(*d);
            emit(
                cli.json,
                json!({ "dim_im": dim.to_string(), "dominant": dom }),
                || println!("{dim}"),
            );
        }
        SiCmd::FirstDominant { d } => {
            let k = si::si_first_dominant(*d);
            emit(cli.json, json!({ "k": k }), || println!("{k}"));
        }
        SiCmd::Rank {
            d,
            k,
            model,
            points_file,
        } => {
            let model = match model.as_str() {
                "standard" => CurveModel::Standard,
                "graph" => CurveModel::Graph,
                other => {
                    return Err(GraphError::Parse(format!(
                        "unknown model `{other}` (use standard|graph)"
                    )))
                }
            };
            let inst = if let Some(path) = points_file {
                let text =
                    std::fs::read_to_string(path).map_err(|e| GraphError::Parse(e.to_string()))?;
                let mut points = Vec::new();
                for line in text.lines() {
                    let line = line.split('#').next().unwrap_or("").trim();
                    if line.is_empty() {
                        continue;
                    }
                    let (u, v) = line
                        .split_once(',')
                        .ok_or_else(|| GraphError::Parse(format!("bad point `{line}`")))?;
                    let u = parse_rat(u)
                        .ok_or_else(|| GraphError::Parse(format!("bad rational `{u}`")))?;
                    let v = parse_rat(v)
                        .ok_or_else(|| GraphError::Parse(format!("bad rational `{v}`")))?;
                    points.push((u, v));
                }
                SiInstance::new(*d, model, points)?
            } else {
                let k = k.ok_or_else(|| GraphError::Parse("need --k or --points-file".into()))?;
                // the seed shifts the deterministic generic parameters
                let shift = (cli.seed % 97) as i64;
                let ts: Vec<Rat> = (1..=k as i64)
                    .map(|t| plumbline_core::rat::rat_i(t + shift))
                    .collect();
                if !cli.json {
                    println!(
                        "# generic parameters t = 1+{shift}..{}+{shift} (seed {})",
                        k, cli.seed
                    );
                }
                SiInstance::from_params(*d, model, &ts)?
            };
            let (rank, h1) = si::si_constraint_rank(&inst)?;
            let closed = si::si_dim_im_points(&inst);
            let v = json!({
                "rank": rank,
                "h1": h1,
                "closed_form": closed.as_ref().map(|b| b.to_string()).ok(),
                "pg": si::si_pg(*d).to_string(),
            });
            emit(cli.json, v, || {
                println!("rank = {rank}, h1 = {h1}, p_g = {}", si::si_pg(*d));
                match closed {
                    Ok(b) => println!("block closed form: {b}"),
                    Err(e) => println!("block closed form: not applicable ({e})"),
                }
            });
        }
    }
    Ok(())
}
