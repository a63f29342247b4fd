//! Exhaustive parameter-space sweeps: enumeration with reductions, the
//! edge-transitivity search, the vertex-transitivity census, and persistence.
//!
//! Every sweep maps a deterministic, lexicographically sorted tuple stream
//! through a pure per-tuple function and merges results in input order, so
//! output bytes are identical across runs and worker counts. A single writer
//! owns all files; workers never touch shared mutable state.

use crate::aut::{automorphism_generators, canonical_form};
use crate::classify::{classify, Clause};
use crate::graph::WhGraph;
use crate::group::PermGroup;
use crate::params::{gcd, WhParams};
use crate::symmetry::{
    lr_candidate_check_with, transitivity_report_with, LrReport, TransitivityReport,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

/// Map a slice through `f`, preserving input order in the output.
///
/// With the `parallel` feature this fans out over the current rayon pool;
/// without it, it is exactly [`map_sequential`]. Callers control the worker
/// count by installing a scoped pool around the sweep.
pub fn map_tuples<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

/// The sequential fallback, always available (used by the benchmarks as the
/// baseline).
pub fn map_sequential<T, R>(items: &[T], f: impl Fn(&T) -> R) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Runs `f` inside a rayon pool of the requested size (`None` = default).
/// Without the `parallel` feature the worker count is ignored.
#[cfg(feature = "parallel")]
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        None => f(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<T>(_workers: Option<usize>, f: impl FnOnce() -> T) -> T {
    f()
}

/// Enumeration reductions.
///
/// * `None`: every valid tuple.
/// * `Iso`: one representative per class under multipliers, negation of `a`
///   and role permutations of `(b, c, d)`; representatives have `a` a divisor
///   of `n` and `b < c < d`.
/// * `Et`: `Iso` with `0 not in {b, c, d}` (edges on triangles rule those
///   tuples out of the edge-transitive search).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    None,
    Iso,
    Et,
}

/// All tuples for one `n` at the requested reduction level, sorted
/// lexicographically by `(a, b, c, d)`.
pub fn enumerate_params(n: usize, reduction: Reduction) -> Vec<WhParams> {
    assert!(n >= 3, "n must be at least 3");
    match reduction {
        Reduction::None => {
            let mut out = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            if let Ok(p) =
                                WhParams::new(n as i64, a as i64, b as i64, c as i64, d as i64)
                            {
                                out.push(p);
                            }
                        }
                    }
                }
            }
            out
        }
        Reduction::Iso => enumerate_representatives(n, false),
        Reduction::Et => enumerate_representatives(n, true),
    }
}

fn divisors(n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=n).filter(|k| n.is_multiple_of(*k)).collect();
    out.sort_unstable();
    out
}

fn enumerate_representatives(n: usize, exclude_zero_offsets: bool) -> Vec<WhParams> {
    let mut out = Vec::new();
    for a in divisors(n) {
        if (2 * a) % n == 0 {
            continue;
        }
        // Multipliers that keep the first coordinate at `a` (up to the
        // explicit negation generator).
        let stabilizing_q: Vec<usize> = (1..n)
            .filter(|&q| gcd(q, n) == 1)
            .filter(|&q| {
                let qa = (q * a) % n;
                qa == a || qa == (n - a) % n
            })
            .collect();
        let b_start = usize::from(exclude_zero_offsets);
        for b in b_start..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    if gcd(gcd(gcd(gcd(n, a), b), c), d) != 1 {
                        continue;
                    }
                    let canonical = stabilizing_q.iter().all(|&q| {
                        let mut image = [(q * b) % n, (q * c) % n, (q * d) % n];
                        image.sort_unstable();
                        image >= [b, c, d]
                    });
                    if canonical {
                        out.push(WhParams::from_reduced(n, a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

/// Representative edge of each of the six `<rho>` edge classes.
fn class_representatives(g: &WhGraph) -> [(usize, usize); 6] {
    let n = g.n();
    let p = g.params();
    [
        (0, p.a()),         // a-edge A_0 A_a
        (0, n),             // left  A_0 B_0
        (0, 2 * n),         // right A_0 C_0
        (n, 2 * n + p.b()), // b-edge B_0 C_b
        (n, 2 * n + p.c()), // c-edge B_0 C_c
        (n, 2 * n + p.d()), // d-edge B_0 C_d
    ]
}

/// For each edge class, the number of cycles of length 3, 4, 5 and 6 through
/// its representative edge. Automorphisms preserve these counts, so an
/// edge-transitive graph must show six identical rows.
pub fn edge_class_cycle_counts(g: &WhGraph) -> [[usize; 4]; 6] {
    let mut table = [[0usize; 4]; 6];
    for (row, &(u, v)) in class_representatives(g).iter().enumerate() {
        for (col, len) in (3..=6).enumerate() {
            table[row][col] = g.count_cycles_through_edge(u, v, len);
        }
    }
    table
}

/// The cheap edge-transitivity filter: true when the graph survives (all six
/// edge classes carry identical short-cycle counts). Never rejects a graph
/// the full orbit check would accept.
pub fn passes_cheap_et_filter(g: &WhGraph) -> bool {
    let table = edge_class_cycle_counts(g);
    table.iter().all(|row| *row == table[0])
}

/// The definitive check: one automorphism orbit on edges.
pub fn confirm_edge_transitive(g: &WhGraph) -> bool {
    let group = PermGroup::from_generators(g.order(), automorphism_generators(g));
    group
        .orbits(g, crate::group::Action::Edges)
        .expect("degree matches")
        .is_transitive()
}

#[derive(Debug, Clone, Default)]
pub struct EtSearchOutcome {
    /// Edge-transitive tuples found (none exist for any `n`).
    pub hits: Vec<WhParams>,
    pub tuples_examined: u64,
    pub cheap_survivors: u64,
}

/// Progress/persistence options for the long sweeps.
#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Checkpoint file, updated after every chunk of 1000 tuples.
    pub checkpoint: Option<PathBuf>,
    /// Per-`n` progress lines on stderr.
    pub progress: bool,
}

const CHUNK: usize = 1000;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
struct Checkpoint {
    op: String,
    n_max: usize,
    /// Largest `n` whose sweep is complete.
    done_up_to: usize,
    /// Last completed lexicographic tuple within `current_n`, if mid-sweep.
    current_n: Option<usize>,
    last_tuple: Option<(usize, usize, usize, usize)>,
}

impl Checkpoint {
    fn load(path: &Path, op: &str, n_max: usize) -> Option<Checkpoint> {
        let text = fs::read_to_string(path).ok()?;
        let cp: Checkpoint = serde_json::from_str(&text).ok()?;
        (cp.op == op && cp.n_max == n_max).then_some(cp)
    }

    fn store(&self, path: &Path) -> io::Result<()> {
        fs::write(path, serde_json::to_string(self).expect("serializable"))
    }

    fn skip(&self, n: usize, p: &WhParams) -> bool {
        if n <= self.done_up_to {
            return true;
        }
        match (self.current_n, self.last_tuple) {
            (Some(cn), Some(last)) if cn == n => (p.a(), p.b(), p.c(), p.d()) <= last,
            _ => false,
        }
    }
}

/// Reproduces the exhaustive edge-transitivity search: enumerate at the `Et`
/// level, drop everything failing the cheap cycle-count filter, and run the
/// full edge-orbit check on the survivors. The expected result is no hits at
/// any `n`.
pub fn search_edge_transitive(n_max: usize) -> EtSearchOutcome {
    search_edge_transitive_with(n_max, &SweepOptions::default())
}

pub fn search_edge_transitive_with(n_max: usize, opts: &SweepOptions) -> EtSearchOutcome {
    let mut outcome = EtSearchOutcome::default();
    let checkpoint = opts
        .checkpoint
        .as_deref()
        .and_then(|p| Checkpoint::load(p, "search-et", n_max));
    for n in 3..=n_max {
        if let Some(cp) = &checkpoint {
            if n <= cp.done_up_to {
                continue;
            }
        }
        let start = Instant::now();
        let mut tuples = enumerate_params(n, Reduction::Et);
        if let Some(cp) = &checkpoint {
            tuples.retain(|p| !cp.skip(n, p));
        }
        let mut survivors_n = 0u64;
        for chunk in tuples.chunks(CHUNK) {
            outcome.tuples_examined += chunk.len() as u64;
            let flags = map_tuples(chunk, |p| {
                let g = WhGraph::build(*p);
                passes_cheap_et_filter(&g)
            });
            let survivors: Vec<WhParams> = chunk
                .iter()
                .zip(&flags)
                .filter_map(|(p, &keep)| keep.then_some(*p))
                .collect();
            survivors_n += survivors.len() as u64;
            outcome.cheap_survivors += survivors.len() as u64;
            let confirmed =
                map_tuples(&survivors, |p| confirm_edge_transitive(&WhGraph::build(*p)));
            for (p, &hit) in survivors.iter().zip(&confirmed) {
                if hit {
                    outcome.hits.push(*p);
                }
            }
            if let Some(path) = opts.checkpoint.as_deref() {
                let last = chunk.last().expect("non-empty chunk");
                let cp = Checkpoint {
                    op: "search-et".into(),
                    n_max,
                    done_up_to: n - 1,
                    current_n: Some(n),
                    last_tuple: Some((last.a(), last.b(), last.c(), last.d())),
                };
                let _ = cp.store(path);
            }
        }
        if let Some(path) = opts.checkpoint.as_deref() {
            let cp = Checkpoint {
                op: "search-et".into(),
                n_max,
                done_up_to: n,
                current_n: None,
                last_tuple: None,
            };
            let _ = cp.store(path);
        }
        if opts.progress {
            eprintln!(
                "n = {n}: {} tuples, {} past cheap filter, {} edge-transitive ({:?})",
                tuples.len(),
                survivors_n,
                outcome.hits.len(),
                start.elapsed()
            );
        }
    }
    outcome
}

/// One census row. `elapsed` is measurement-only and never persisted, so
/// census files stay byte-identical across runs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusRecord {
    #[serde(flatten)]
    pub params: WhParams,
    pub digest: String,
    #[serde(flatten)]
    pub report: TransitivityReport,
    pub verdict: Vec<Clause>,
    pub vt_ground_truth: bool,
    pub lr: Option<LrReport>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub graph6: String,
}

/// A disagreement between the decision procedure and the computed group; any
/// entry signals an implementation bug, never new mathematics.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Discrepancy {
    #[serde(flatten)]
    pub params: WhParams,
    pub classified_vt: bool,
    pub ground_truth_vt: bool,
}

/// Computes one census record from scratch.
pub fn census_record(p: &WhParams) -> CensusRecord {
    let start = Instant::now();
    let g = WhGraph::build(*p);
    let group = PermGroup::from_generators(g.order(), automorphism_generators(&g));
    let report = transitivity_report_with(&g, &group);
    let canon = canonical_form(&g);
    let verdict = classify(p).verdict;
    let lr = if report.is_vertex_transitive {
        lr_candidate_check_with(&g, &group).ok()
    } else {
        None
    };
    CensusRecord {
        params: *p,
        digest: canon.digest.clone(),
        vt_ground_truth: report.is_vertex_transitive,
        report,
        verdict,
        lr,
        elapsed: start.elapsed(),
        graph6: canon.to_graph6(),
    }
}

impl CensusRecord {
    pub fn classified_vt(&self) -> bool {
        !self.verdict.is_empty()
    }
}

#[derive(Debug, Default)]
pub struct VtCensusOutcome {
    pub records: Vec<CensusRecord>,
    pub discrepancies: Vec<Discrepancy>,
}

impl VtCensusOutcome {
    /// Canonical-digest collision table: digests shared by more than one
    /// enumerated representative, i.e. residual cross-class isomorphisms the
    /// parameter-level reduction could not see.
    pub fn digest_collisions(&self) -> std::collections::BTreeMap<String, Vec<WhParams>> {
        let mut by_digest: std::collections::BTreeMap<String, Vec<WhParams>> =
            std::collections::BTreeMap::new();
        for r in &self.records {
            by_digest
                .entry(r.digest.clone())
                .or_default()
                .push(r.params);
        }
        by_digest.retain(|_, members| members.len() > 1);
        by_digest
    }
}

/// The vertex-transitivity census over all iso-level representatives with
/// `3 <= n <= n_max`: per tuple, the decision procedure is compared against
/// the computed group; the discrepancy list of a correct build is empty.
pub fn vt_census(n_max: usize) -> VtCensusOutcome {
    let mut writer = CensusWriter::Memory;
    vt_census_with(n_max, &SweepOptions::default(), &mut writer)
        .expect("in-memory census cannot fail on io")
}

/// Census variant with persistence: `census.jsonl` (one record per line, lex
/// order), `graphs.g6` (digest-keyed canonical graph6 sidecar, first
/// occurrence order) and `checkpoint.json` under `dir`. Resuming from an
/// existing checkpoint appends exactly the missing suffix, leaving the same
/// bytes a fresh run would produce.
pub fn vt_census_to_dir(
    n_max: usize,
    dir: &Path,
    opts: &SweepOptions,
) -> io::Result<VtCensusOutcome> {
    fs::create_dir_all(dir)?;
    let mut effective = opts.clone();
    if effective.checkpoint.is_none() {
        effective.checkpoint = Some(dir.join("checkpoint.json"));
    }
    // Appending to an existing census is only sound when its checkpoint
    // matches this run; anything else would interleave two censuses.
    let jsonl = dir.join("census.jsonl");
    if jsonl.exists() && fs::metadata(&jsonl)?.len() > 0 {
        let resumable = effective
            .checkpoint
            .as_deref()
            .and_then(|p| Checkpoint::load(p, "census-vt", n_max))
            .is_some();
        if !resumable {
            return Err(io::Error::new(
                io::ErrorKind::InvalidData,
                format!(
                    "{} already holds census data without a matching checkpoint for n_max = {n_max}; \
                     remove the directory or resume with the original n_max",
                    dir.display()
                ),
            ));
        }
    }
    let mut writer = CensusWriter::open(dir)?;
    vt_census_with(n_max, &effective, &mut writer)
}

fn vt_census_with(
    n_max: usize,
    opts: &SweepOptions,
    writer: &mut CensusWriter,
) -> io::Result<VtCensusOutcome> {
    let mut outcome = VtCensusOutcome::default();
    let checkpoint = opts
        .checkpoint
        .as_deref()
        .and_then(|p| Checkpoint::load(p, "census-vt", n_max));
    for n in 3..=n_max {
        if let Some(cp) = &checkpoint {
            if n <= cp.done_up_to {
                continue;
            }
        }
        let start = Instant::now();
        let mut tuples = enumerate_params(n, Reduction::Iso);
        if let Some(cp) = &checkpoint {
            tuples.retain(|p| !cp.skip(n, p));
        }
        for chunk in tuples.chunks(CHUNK) {
            let records = map_tuples(chunk, census_record);
            for record in records {
                if record.classified_vt() != record.vt_ground_truth {
                    outcome.discrepancies.push(Discrepancy {
                        params: record.params,
                        classified_vt: record.classified_vt(),
                        ground_truth_vt: record.vt_ground_truth,
                    });
                }
                writer.write_record(&record)?;
                outcome.records.push(record);
            }
            if let Some(path) = opts.checkpoint.as_deref() {
                let last = chunk.last().expect("non-empty chunk");
                let cp = Checkpoint {
                    op: "census-vt".into(),
                    n_max,
                    done_up_to: n - 1,
                    current_n: Some(n),
                    last_tuple: Some((last.a(), last.b(), last.c(), last.d())),
                };
                cp.store(path)?;
            }
        }
        if let Some(path) = opts.checkpoint.as_deref() {
            let cp = Checkpoint {
                op: "census-vt".into(),
                n_max,
                done_up_to: n,
                current_n: None,
                last_tuple: None,
            };
            cp.store(path)?;
        }
        if opts.progress {
            eprintln!(
                "n = {n}: {} representatives, {} vertex-transitive so far ({:?})",
                tuples.len(),
                outcome.records.iter().filter(|r| r.vt_ground_truth).count(),
                start.elapsed()
            );
        }
    }
    writer.flush()?;
    Ok(outcome)
}

enum CensusWriter {
    Memory,
    Files {
        jsonl: fs::File,
        sidecar: fs::File,
        seen_digests: BTreeSet<String>,
    },
}

impl CensusWriter {
    fn open(dir: &Path) -> io::Result<Self> {
        let jsonl_path = dir.join("census.jsonl");
        let sidecar_path = dir.join("graphs.g6");
        let mut seen_digests = BTreeSet::new();
        if sidecar_path.exists() {
            for line in fs::read_to_string(&sidecar_path)?.lines() {
                if let Some((digest, _)) = line.split_once(' ') {
                    seen_digests.insert(digest.to_string());
                }
            }
        }
        let jsonl = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(jsonl_path)?;
        let sidecar = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(sidecar_path)?;
        Ok(CensusWriter::Files {
            jsonl,
            sidecar,
            seen_digests,
        })
    }

    fn write_record(&mut self, record: &CensusRecord) -> io::Result<()> {
        match self {
            CensusWriter::Memory => Ok(()),
            CensusWriter::Files {
                jsonl,
                sidecar,
                seen_digests,
            } => {
                let line = serde_json::to_string(record).expect("record serializes");
                writeln!(jsonl, "{line}")?;
                if seen_digests.insert(record.digest.clone()) {
                    writeln!(sidecar, "{} {}", record.digest, record.graph6)?;
                }
                Ok(())
            }
        }
    }

    fn flush(&mut self) -> io::Result<()> {
        match self {
            CensusWriter::Memory => Ok(()),
            CensusWriter::Files { jsonl, sidecar, .. } => {
                jsonl.flush()?;
                sidecar.flush()
            }
        }
    }
}
