//! The acceptance suite: seeded graph corpora and the seven checks run by
//! the `corpus` command and the `acceptance` test target.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Coloring, ListAssignment};
use crate::error::Error;
use crate::generators::{self, connected_girth5_graphs, cycle, path, random_girth5, random_tree, star};
use crate::graph::Graph;
use crate::greedy::{check_color_bounds, color_delta_plus_2, greedy_extend, list_color_delta_plus_2, Overrides};
use crate::solver::{self, Branch};
use crate::symmetry;
use crate::tree::{BfsTree, TreeDirectives};
use crate::Color;

pub const DEFAULT_SEED: u64 = 2024;
/// Random runs for the greedy-bound and propagation checks.
pub const DEFAULT_COUNT: usize = 10_000;
pub const RANDOM_TREES: usize = 100;
pub const RANDOM_GIRTH5: usize = 200;
pub const LISTS_PER_GRAPH: usize = 100;
/// Largest graph that gets random list assignments.
pub const LIST_MAX_VERTICES: usize = 20;
/// Largest graph in the exhaustive small-graph check.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 7;
pub const SOLVER_TIME_LIMIT: Duration = Duration::from_secs(120);
pub const MOORE_TIME_LIMIT: Duration = Duration::from_secs(300);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub seed: u64,
    pub count: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            seed: DEFAULT_SEED,
            count: DEFAULT_COUNT,
        }
    }
}

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> NamedGraph {
    NamedGraph {
        name: name.into(),
        graph,
    }
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "[{}] {} {}: {} ({:.2?})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed
        )
    }
}

pub fn render_table(reports: &[CriterionReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}", r.line());
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} criteria passed", reports.len());
    out
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn is_six_cycle(g: &Graph) -> bool {
    g.n() == 6 && g.is_regular() && g.max_degree() == 2 && g.is_connected()
}

/// Every graph of the main suite: paths and cycles up to 30 vertices
/// (cycles from 5, since shorter ones have girth below 5), random trees,
/// stars, the named cubic and quartic graphs and random girth-5 graphs.
pub fn solver_corpus(seed: u64) -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for n in 3..=30 {
        out.push(named(format!("path_{n}"), path(n).expect("n >= 1")));
    }
    for n in 5..=30 {
        out.push(named(format!("cycle_{n}"), cycle(n).expect("n >= 3")));
    }
    let mut rng = rng_for(seed, 1);
    for i in 0..RANDOM_TREES {
        let n = rng.gen_range(1..=40);
        let d = rng.gen_range(2..=8);
        out.push(named(
            format!("random_tree_{i}_n{n}_d{d}"),
            random_tree(n, d, &mut rng).expect("valid parameters"),
        ));
    }
    for d in 1..=8 {
        out.push(named(format!("star_{d}"), star(d + 1).expect("n >= 1")));
    }
    out.extend([
        named("petersen", generators::petersen()),
        named("heawood", generators::heawood()),
        named("dodecahedron", generators::dodecahedron()),
        named("pappus", generators::pappus()),
        named("desargues", generators::desargues()),
        named("mcgee", generators::mcgee()),
        named("tutte_coxeter", generators::tutte_coxeter()),
        named("robertson", generators::robertson()),
    ]);
    let mut rng = rng_for(seed, 2);
    for i in 0..RANDOM_GIRTH5 {
        let n = rng.gen_range(2..=40);
        let d = rng.gen_range(2..=6);
        let s: u64 = rng.gen();
        let g = random_girth5(n, d, s).expect("valid parameters");
        out.push(named(format!("random_girth5_{i}_n{n}_d{d}_s{s}"), g));
    }
    out
}

/// Solves `g` (the 6-cycle through its own entry point) and checks the
/// result independently. Returns the branch or a failure message.
pub fn check_solution(g: &Graph) -> Result<Branch, String> {
    let (result, bound) = if is_six_cycle(g) {
        (solver::solve_c6_extension(g), 4)
    } else {
        (solver::solve(g), g.max_degree() as Color + 1)
    };
    let r = result.map_err(|e| format!("solve failed: {e}"))?;
    r.coloring.check_total_proper(g).map_err(|e| format!("improper: {e}"))?;
    if r.coloring.max_color().unwrap_or(0) > bound || r.colors_used > bound as usize {
        return Err(format!("uses more than {bound} colors"));
    }
    let verdict = symmetry::is_distinguishing(g, &r.coloring).map_err(|e| e.to_string())?;
    if !verdict.distinguishing {
        return Err("not distinguishing".into());
    }
    Ok(r.branch)
}

fn summarize_failures(failures: &[String]) -> String {
    let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
    format!("{} failures, e.g. {}", failures.len(), shown.join("; "))
}

fn report(id: u8, title: &'static str, started: Instant, outcome: Result<String, String>) -> CriterionReport {
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionReport {
        id,
        title,
        passed,
        detail,
        elapsed: started.elapsed(),
    }
}

pub fn solver_suite(cfg: &CorpusConfig) -> CriterionReport {
    let started = Instant::now();
    let corpus = solver_corpus(cfg.seed);
    let mut failures = Vec::new();
    let mut branches = std::collections::BTreeMap::new();
    for entry in &corpus {
        match check_solution(&entry.graph) {
            Ok(b) => *branches.entry(b.name()).or_insert(0usize) += 1,
            Err(e) => failures.push(format!("{}: {e}", entry.name)),
        }
    }
    for n in [3, 4] {
        let g = cycle(n).expect("n >= 3");
        if !matches!(solver::solve(&g), Err(Error::GirthTooSmall { .. })) {
            failures.push(format!("cycle_{n} was not rejected"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed > SOLVER_TIME_LIMIT {
        failures.push(format!("took {elapsed:.1?}, limit {SOLVER_TIME_LIMIT:?}"));
    }
    let outcome = if failures.is_empty() {
        let counts: Vec<String> = branches.iter().map(|(b, k)| format!("{b}={k}")).collect();
        Ok(format!("{} graphs certified [{}]", corpus.len(), counts.join(" ")))
    } else {
        Err(summarize_failures(&failures))
    };
    report(1, "solver suite", started, outcome)
}

pub fn moore_recursion() -> CriterionReport {
    let started = Instant::now();
    let g = generators::hoffman_singleton();
    let outcome = (|| {
        let r = solver::solve(&g).map_err(|e| format!("solve failed: {e}"))?;
        if r.branch != Branch::MooreRecursive {
            return Err(format!("branch {} instead of moore_recursive", r.branch));
        }
        if r.colors_used > 8 || r.coloring.max_color().unwrap_or(0) > 8 {
            return Err(format!("{} colors", r.colors_used));
        }
        r.coloring.check_total_proper(&g).map_err(|e| e.to_string())?;
        if !symmetry::is_distinguishing(&g, &r.coloring)
            .map_err(|e| e.to_string())?
            .distinguishing
        {
            return Err("not distinguishing".into());
        }
        if started.elapsed() > MOORE_TIME_LIMIT {
            return Err(format!("took {:.1?}", started.elapsed()));
        }
        Ok(format!("Hoffman-Singleton: {} colors, certified", r.colors_used))
    })();
    report(2, "moore recursion", started, outcome)
}

pub fn stored_colorings() -> CriterionReport {
    let started = Instant::now();
    let outcome = (|| {
        for (name, (g, c)) in [
            ("petersen", solver::stored_petersen()),
            ("heawood", solver::stored_heawood()),
        ] {
            c.check_total_proper(&g).map_err(|e| format!("{name}: {e}"))?;
            if c.distinct_colors() != 4 {
                return Err(format!("{name}: {} colors", c.distinct_colors()));
            }
            if !symmetry::is_distinguishing(&g, &c)
                .map_err(|e| e.to_string())?
                .distinguishing
            {
                return Err(format!("{name}: not distinguishing"));
            }
        }
        let (g, c) = solver::stored_petersen();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if c.get(u) == c.get(v) && c.neighborhood_multiset(&g, u) == c.neighborhood_multiset(&g, v) {
                    return Err(format!(
                        "petersen: vertices {u} and {v} share color and neighborhood colors"
                    ));
                }
            }
        }
        Ok("petersen and heawood: proper, 4 colors, distinguishing; petersen color classes separated".into())
    })();
    report(3, "stored colorings", started, outcome)
}

pub fn exhaustive_small_graphs() -> CriterionReport {
    let started = Instant::now();
    let outcome = (|| {
        let mut total = 0;
        let mut six_cycles = 0;
        for n in 1..=EXHAUSTIVE_MAX_VERTICES {
            for g in connected_girth5_graphs(n) {
                total += 1;
                let chi = symmetry::exact_chi_d(&g).map_err(|e| e.to_string())?;
                let bound = g.max_degree() as Color + 1;
                if is_six_cycle(&g) {
                    six_cycles += 1;
                    if chi != 4 {
                        return Err(format!("six-cycle has value {chi}"));
                    }
                } else if chi > bound {
                    return Err(format!(
                        "graph {:?} has value {chi} > {bound}",
                        g.edges().collect::<Vec<_>>()
                    ));
                }
            }
        }
        if six_cycles != 1 {
            return Err(format!("six-cycle seen {six_cycles} times"));
        }
        let k13 = symmetry::exact_chi_d(&star(4).expect("n >= 1")).map_err(|e| e.to_string())?;
        let c5 = symmetry::exact_chi_d(&cycle(5).expect("n >= 3")).map_err(|e| e.to_string())?;
        if (k13, c5) != (4, 3) {
            return Err(format!("star K1,3 -> {k13}, cycle C5 -> {c5}"));
        }
        Ok(format!(
            "{total} graphs within max degree + 1, six-cycle at 4, K1,3 = 4, C5 = 3"
        ))
    })();
    report(4, "exhaustive small graphs", started, outcome)
}

/// `size` distinct colors drawn from `1..=3 * size`.
fn random_list(rng: &mut impl Rng, size: usize) -> Vec<Color> {
    index::sample(rng, 3 * size, size)
        .into_iter()
        .map(|i| i as Color + 1)
        .collect()
}

pub fn random_lists(g: &Graph, rng: &mut impl Rng) -> ListAssignment {
    let size = g.max_degree() + 2;
    ListAssignment::new((0..g.n()).map(|_| random_list(rng, size)).collect()).expect("lists are non-empty")
}

fn check_delta_plus_2(g: &Graph, coloring: &Coloring, lists: Option<&ListAssignment>) -> Result<(), String> {
    coloring.check_total_proper(g).map_err(|e| e.to_string())?;
    match lists {
        None => {
            let bound = g.max_degree() as Color + 2;
            if coloring.max_color().unwrap_or(0) > bound {
                return Err(format!("color above {bound}"));
            }
        }
        Some(lists) => {
            if let Some(v) = (0..g.n()).find(|&v| !lists.list(v).contains(&coloring.get(v).unwrap_or(0))) {
                return Err(format!("vertex {v} off its list"));
            }
        }
    }
    if !symmetry::is_distinguishing(g, coloring)
        .map_err(|e| e.to_string())?
        .distinguishing
    {
        return Err("not distinguishing".into());
    }
    Ok(())
}

pub fn delta_plus_two_suite(cfg: &CorpusConfig) -> CriterionReport {
    let started = Instant::now();
    let corpus = solver_corpus(cfg.seed);
    let mut rng = rng_for(cfg.seed, 5);
    let mut failures = Vec::new();
    let mut list_runs = 0;
    for entry in &corpus {
        let g = &entry.graph;
        let plain = color_delta_plus_2(g, 0)
            .map_err(|e| e.to_string())
            .and_then(|c| check_delta_plus_2(g, &c, None));
        if let Err(e) = plain {
            failures.push(format!("{}: {e}", entry.name));
        }
        if g.n() > LIST_MAX_VERTICES {
            continue;
        }
        for k in 0..LISTS_PER_GRAPH {
            let lists = random_lists(g, &mut rng);
            list_runs += 1;
            let listed = list_color_delta_plus_2(g, &lists)
                .map_err(|e| e.to_string())
                .and_then(|c| check_delta_plus_2(g, &c, Some(&lists)));
            if let Err(e) = listed {
                failures.push(format!("{} lists #{k}: {e}", entry.name));
            }
        }
    }
    let outcome = if failures.is_empty() {
        Ok(format!(
            "{} graphs with max degree + 2, {list_runs} list assignments",
            corpus.len()
        ))
    } else {
        Err(summarize_failures(&failures))
    };
    report(5, "max degree + 2 and list suite", started, outcome)
}

/// Graphs for the random greedy runs: random girth-5 graphs and trees of
/// up to 30 vertices plus the small named graphs.
pub fn random_pool(seed: u64) -> Vec<Graph> {
    let mut rng = rng_for(seed, 6);
    let mut pool = vec![
        generators::petersen(),
        generators::heawood(),
        generators::dodecahedron(),
        generators::pappus(),
        generators::desargues(),
        generators::robertson(),
    ];
    for _ in 0..60 {
        let n = rng.gen_range(4..=30);
        let d = rng.gen_range(3..=6);
        pool.push(random_girth5(n, d, rng.gen()).expect("valid parameters"));
    }
    for _ in 0..20 {
        let n = rng.gen_range(4..=30);
        let d = rng.gen_range(2..=5);
        pool.push(random_tree(n, d, &mut rng).expect("valid parameters"));
    }
    pool
}

/// Breadth-first tree at a random root with the root's children shuffled
/// and every vertex given a random parent among its neighbors one level up.
pub fn random_tree_at(g: &Graph, rng: &mut impl Rng) -> (usize, BfsTree) {
    let w = rng.gen_range(0..g.n());
    let dist: Vec<usize> = g.distances(w).into_iter().map(|d| d.expect("connected")).collect();
    let mut directives = TreeDirectives::new();
    let mut children = g.neighbors(w).to_vec();
    children.shuffle(rng);
    for (i, &c) in children.iter().enumerate() {
        directives = directives.position(c, i);
    }
    for v in (0..g.n()).filter(|&v| dist[v] >= 2) {
        let up: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| dist[u] + 1 == dist[v])
            .collect();
        if up.len() > 1 {
            directives = directives.parent(v, *up.choose(rng).expect("non-empty"));
        }
    }
    let tree = BfsTree::new(g, w, &directives).expect("directives are consistent");
    (w, tree)
}

fn random_greedy(g: &Graph, rng: &mut impl Rng) -> (BfsTree, crate::greedy::GreedyColoring) {
    let (w, tree) = random_tree_at(g, rng);
    let top = g.max_degree() as Color + 2;
    let mut prefix = Coloring::uncolored(g.n());
    prefix.set(w, rng.gen_range(1..=top));
    let run = greedy_extend(g, &tree, &prefix, &Overrides::new(), top).expect("palette suffices");
    (tree, run)
}

/// Proper coloring giving each vertex, in tree order, a uniform color of
/// `1..=max_degree + 2` unused on its colored neighbors.
fn random_proper(g: &Graph, tree: &BfsTree, rng: &mut impl Rng) -> Coloring {
    let top = g.max_degree() as Color + 2;
    let mut coloring = Coloring::uncolored(g.n());
    for &v in tree.order() {
        let free: Vec<Color> = (1..=top)
            .filter(|&c| g.neighbors(v).iter().all(|&u| coloring.get(u) != Some(c)))
            .collect();
        coloring.set(v, *free.choose(rng).expect("more colors than neighbors"));
    }
    coloring
}

pub fn greedy_bounds(cfg: &CorpusConfig) -> CriterionReport {
    let started = Instant::now();
    let pool = random_pool(cfg.seed);
    let mut rng = rng_for(cfg.seed, 7);
    let mut failures = Vec::new();
    for i in 0..cfg.count {
        let g = pool.choose(&mut rng).expect("non-empty pool");
        let (tree, run) = random_greedy(g, &mut rng);
        if let Err(e) = check_color_bounds(g, &tree, &run) {
            failures.push(format!("run {i}: {e}"));
        }
    }
    let outcome = if failures.is_empty() {
        Ok(format!("{} random greedy runs within bounds", cfg.count))
    } else {
        Err(summarize_failures(&failures))
    };
    report(6, "greedy color bounds", started, outcome)
}

pub fn propagation_soundness(cfg: &CorpusConfig) -> CriterionReport {
    let started = Instant::now();
    let pool = random_pool(cfg.seed);
    let mut rng = rng_for(cfg.seed, 8);
    let mut failures = Vec::new();
    let mut instances = 0;
    let mut attempts = 0;
    let budget = 50 * cfg.count.max(1);
    while instances < cfg.count && attempts < budget {
        attempts += 1;
        let g = pool.choose(&mut rng).expect("non-empty pool");
        let (tree, coloring) = if rng.gen_bool(0.5) {
            let (tree, run) = random_greedy(g, &mut rng);
            (tree, run.coloring)
        } else {
            let (_, tree) = random_tree_at(g, &mut rng);
            let coloring = random_proper(g, &tree, &mut rng);
            (tree, coloring)
        };
        let fixed = match symmetry::fixed_vertices(g, &coloring) {
            Ok(f) => f,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        let order = tree.order();
        let longest = order.iter().take_while(|&&v| fixed[v]).count();
        if longest == 0 {
            continue;
        }
        let len = rng.gen_range(1..=longest.min(1 + g.degree(tree.root())));
        let certified = match symmetry::fixed_propagation(g, &tree, &coloring, &order[..len]) {
            Ok(c) => c,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        if !certified.iter().all(|&c| c) {
            continue;
        }
        instances += 1;
        match symmetry::is_distinguishing(g, &coloring) {
            Ok(v) if v.distinguishing => {}
            Ok(_) => failures.push(format!("attempt {attempts}: certified but not distinguishing")),
            Err(e) => failures.push(e.to_string()),
        }
    }
    if instances < cfg.count {
        failures.push(format!(
            "only {instances} fully certified instances in {attempts} attempts"
        ));
    }
    let outcome = if failures.is_empty() {
        Ok(format!(
            "{instances} fully certified instances distinguishing ({attempts} attempts)"
        ))
    } else {
        Err(summarize_failures(&failures))
    };
    report(7, "propagation soundness", started, outcome)
}

pub fn run_all(cfg: &CorpusConfig) -> Vec<CriterionReport> {
    vec![
        solver_suite(cfg),
        moore_recursion(),
        stored_colorings(),
        exhaustive_small_graphs(),
        delta_plus_two_suite(cfg),
        greedy_bounds(cfg),
        propagation_soundness(cfg),
    ]
}
