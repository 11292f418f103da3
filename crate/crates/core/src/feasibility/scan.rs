use std::cmp::Ordering;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::system::{ConstraintSystem, Domain, FloatSystem};
use crate::algebra::{ExactScalar, Rational};
use crate::error::{Error, Result};
use crate::par::{self, Execution};

/// Refinement works on a lattice `2^REFINE_BITS` times finer than the scan.
pub const REFINE_BITS: u32 = 20;
/// Lattice points whose float slack is at least `-NEAR_ZERO` are re-evaluated
/// exactly, so float rounding cannot hide a feasible lattice point.
pub const NEAR_ZERO: f64 = 1e-9;
const NEAR_CAP: usize = 10_000;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub resolution: usize,
    /// Number of best points refined.
    pub refine_starts: usize,
    /// Pattern-search iterations per refined point.
    pub refine_steps: usize,
    /// Random starting points for orthant scans.
    pub random_starts: usize,
    pub seed: u64,
    pub execution: Execution,
}

impl ScanConfig {
    pub fn new(resolution: usize) -> Self {
        ScanConfig {
            resolution,
            refine_starts: 10,
            refine_steps: 100,
            random_starts: 200,
            seed: 0,
            execution: Execution::default(),
        }
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Outcome of a slack scan. `best_slack` is the exact minimum slack at
/// `best_point`, the best of every point that was re-evaluated exactly.
#[derive(Clone, Debug)]
pub struct SlackScan {
    pub resolution: usize,
    /// Points evaluated in the coarse phase (lattice points or starts).
    pub coarse_points: u64,
    /// Points whose slack was recomputed in exact arithmetic.
    pub exact_rechecks: usize,
    /// Whether the near-zero recheck list hit its cap.
    pub truncated: bool,
    pub best_point: Vec<Rational>,
    pub best_slack: ExactScalar,
    pub best_slack_f64: f64,
    /// Float min-slack after each refinement step of the winning start.
    pub refinement_trace: Vec<f64>,
}

impl SlackScan {
    /// True when no evaluated point satisfies every constraint.
    pub fn no_feasible_point(&self) -> bool {
        self.best_slack.sign() <= 0
    }

    /// A point of the open domain satisfying every constraint strictly.
    ///
    /// A best point on the boundary is pulled toward the barycenter by
    /// `t = 2^-k` until the exact slack stays positive in the interior.
    pub fn interior_witness(&self, sys: &ConstraintSystem) -> Option<Vec<Rational>> {
        if self.best_slack.sign() <= 0 {
            return None;
        }
        if sys.in_open_domain(&self.best_point) {
            return Some(self.best_point.clone());
        }
        let n = self.best_point.len() as i64;
        let center = Rational::new(1.into(), n.into());
        (1..=64).find_map(|k| {
            let t = Rational::new(1.into(), BigInt::from(1u8) << k);
            let one_minus = Rational::from_integer(1.into()) - &t;
            let x: Vec<Rational> = self
                .best_point
                .iter()
                .map(|v| v * &one_minus + &center * &t)
                .collect();
            let ok = sys.in_open_domain(&x) && sys.min_slack(&x).is_ok_and(|s| s.sign() > 0);
            ok.then_some(x)
        })
    }

    pub fn strictly_feasible(&self, sys: &ConstraintSystem) -> bool {
        self.interior_witness(sys).is_some()
    }
}

/// Integer point `k / den`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct LatticePoint {
    k: Vec<i64>,
}

impl LatticePoint {
    fn to_f64(&self, den: i64) -> Vec<f64> {
        let d = den as f64;
        self.k.iter().map(|&k| k as f64 / d).collect()
    }

    fn to_rational(&self, den: i64) -> Vec<Rational> {
        self.k
            .iter()
            .map(|&k| Rational::new(BigInt::from(k), BigInt::from(den)))
            .collect()
    }

    fn scaled(&self, factor: i64) -> Self {
        LatticePoint { k: self.k.iter().map(|&k| k * factor).collect() }
    }
}

#[derive(Default)]
struct Shard {
    top: Vec<(f64, LatticePoint)>,
    near: Vec<LatticePoint>,
    truncated: bool,
    count: u64,
}

fn by_slack_desc(a: &(f64, LatticePoint), b: &(f64, LatticePoint)) -> Ordering {
    b.0.partial_cmp(&a.0).unwrap_or(Ordering::Equal).then_with(|| a.1.cmp(&b.1))
}

impl Shard {
    fn offer(&mut self, slack: f64, k: &[i64], keep: usize) {
        self.count += 1;
        if slack >= -NEAR_ZERO {
            if self.near.len() < NEAR_CAP {
                self.near.push(LatticePoint { k: k.to_vec() });
            } else {
                self.truncated = true;
            }
        }
        if self.top.len() < keep || slack > self.top.last().map_or(f64::NEG_INFINITY, |t| t.0) {
            self.top.push((slack, LatticePoint { k: k.to_vec() }));
            self.top.sort_by(by_slack_desc);
            self.top.truncate(keep);
        }
    }

    fn merge(shards: Vec<Shard>, keep: usize) -> Shard {
        let mut out = Shard::default();
        for s in shards {
            out.count += s.count;
            out.truncated |= s.truncated;
            out.top.extend(s.top);
            for p in s.near {
                if out.near.len() < NEAR_CAP {
                    out.near.push(p);
                } else {
                    out.truncated = true;
                }
            }
        }
        out.top.sort_by(by_slack_desc);
        out.top.truncate(keep);
        out
    }
}

/// Visits every composition of `total` into `k.len() - pos` parts placed at
/// `k[pos..]`.
fn compositions(k: &mut [i64], pos: usize, total: i64, visit: &mut impl FnMut(&[i64])) {
    if pos + 1 == k.len() {
        k[pos] = total;
        visit(k);
        return;
    }
    for v in 0..=total {
        k[pos] = v;
        compositions(k, pos + 1, total - v, visit);
    }
}

/// Scans the closed simplex lattice `{k / R : Σk = R}` and refines the best
/// points.
pub fn scan_simplex(sys: &ConstraintSystem, cfg: &ScanConfig) -> Result<SlackScan> {
    if sys.domain() != Domain::Simplex {
        return Err(Error::PreconditionViolated("scan_simplex needs a simplex system".into()));
    }
    let n = sys.vars();
    if n == 0 || cfg.resolution == 0 {
        return Err(Error::PreconditionViolated("empty lattice".into()));
    }
    let fs = sys.compile();
    let r = cfg.resolution as i64;
    let keep = cfg.refine_starts.max(1);
    let shards = par::map_range(cfg.execution, 0..cfg.resolution + 1, |first| {
        let mut shard = Shard::default();
        let mut k = vec![0i64; n];
        let mut x = vec![0f64; n];
        k[0] = first as i64;
        let mut visit = |k: &[i64]| {
            for (xi, &ki) in x.iter_mut().zip(k) {
                *xi = ki as f64 / r as f64;
            }
            shard.offer(fs.min_slack(&x), k, keep);
        };
        if n == 1 {
            if first as i64 == r {
                visit(&k);
            }
        } else {
            compositions(&mut k, 1, r - first as i64, &mut visit);
        }
        shard
    });
    let merged = Shard::merge(shards, keep);
    finish(sys, &fs, cfg, merged, r)
}

/// Multistart scan over the closed orthant: evaluates `starts` plus
/// `cfg.random_starts` seeded random points with coordinate sum below
/// `random_total`, then refines the best.
pub fn scan_orthant(
    sys: &ConstraintSystem,
    cfg: &ScanConfig,
    starts: &[Vec<f64>],
    random_total: f64,
) -> Result<SlackScan> {
    if sys.domain() != Domain::Orthant {
        return Err(Error::PreconditionViolated("scan_orthant needs an orthant system".into()));
    }
    if cfg.resolution == 0 {
        return Err(Error::PreconditionViolated("resolution must be positive".into()));
    }
    let n = sys.vars();
    let fs = sys.compile();
    let fine_den = (cfg.resolution as i64) << REFINE_BITS;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut candidates: Vec<Vec<f64>> = starts.to_vec();
    for _ in 0..cfg.random_starts {
        let w: Vec<f64> = (0..n).map(|_| -rng.gen_range(f64::EPSILON..1.0f64).ln()).collect();
        let total: f64 = rng.gen_range(0.5..1.0) * random_total;
        let sum: f64 = w.iter().sum();
        candidates.push(w.iter().map(|wi| wi * total / sum).collect());
    }
    let keep = cfg.refine_starts.max(1);
    let mut shard = Shard::default();
    for c in &candidates {
        if c.len() != n {
            return Err(Error::PreconditionViolated("start of wrong dimension".into()));
        }
        // snap to the refinement lattice, rounding down to stay below the total
        let k: Vec<i64> = c.iter().map(|&v| (v.max(0.0) * fine_den as f64).floor() as i64).collect();
        let x = LatticePoint { k: k.clone() }.to_f64(fine_den);
        shard.offer(fs.min_slack(&x), &k, keep);
    }
    finish(sys, &fs, cfg, shard, fine_den)
}

/// `coarse_den` is the denominator of the coarse points; it must divide the
/// refinement denominator `R·2^REFINE_BITS`.
fn finish(
    sys: &ConstraintSystem,
    fs: &FloatSystem,
    cfg: &ScanConfig,
    coarse: Shard,
    coarse_den: i64,
) -> Result<SlackScan> {
    let r = coarse_den;
    let fine_den = (cfg.resolution as i64) << REFINE_BITS;
    let simplex = sys.domain() == Domain::Simplex;

    let refined = par::map_slice(cfg.execution, &coarse.top, |(_, p)| {
        refine(fs, simplex, p.scaled(fine_den / coarse_den), fine_den, cfg.refine_steps)
    });

    // exact re-evaluation: near-zero lattice points, coarse tops, refined points
    let mut exact_pts: Vec<Vec<Rational>> = coarse.near.iter().map(|p| p.to_rational(r)).collect();
    exact_pts.extend(coarse.top.iter().map(|(_, p)| p.to_rational(r)));
    let refined_start = exact_pts.len();
    exact_pts.extend(refined.iter().map(|(p, _)| p.to_rational(fine_den)));
    let slacks = par::map_slice(cfg.execution, &exact_pts, |x| sys.min_slack(x));
    let mut best: Option<(usize, ExactScalar)> = None;
    for (i, s) in slacks.into_iter().enumerate() {
        let s = s?;
        if best.as_ref().is_none_or(|(_, b)| s > *b) {
            best = Some((i, s));
        }
    }
    let (idx, best_slack) = best.ok_or_else(|| Error::PreconditionViolated("no points scanned".into()))?;
    let best_point = exact_pts[idx].clone();
    let best_f64: Vec<f64> = best_point.iter().map(crate::algebra::rational_to_f64).collect();
    let trace = if idx >= refined_start {
        refined[idx - refined_start].1.clone()
    } else {
        refined.first().map(|r| r.1.clone()).unwrap_or_default()
    };
    Ok(SlackScan {
        resolution: cfg.resolution,
        coarse_points: coarse.count,
        exact_rechecks: exact_pts.len(),
        truncated: coarse.truncated,
        best_slack_f64: fs.min_slack(&best_f64),
        best_point,
        best_slack,
        refinement_trace: trace,
    })
}

/// Best-improvement pattern search on the lattice `k / den`. Moves shift
/// `h` units from one coordinate to another (keeping the sum, hence the
/// simplex) and, on the orthant, also add or remove `h` units. `h` starts
/// at one coarse lattice unit and halves whenever no move improves.
fn refine(fs: &FloatSystem, simplex: bool, start: LatticePoint, den: i64, steps: usize) -> (LatticePoint, Vec<f64>) {
    let n = start.k.len();
    let mut cur = start;
    let mut x = cur.to_f64(den);
    let mut val = fs.min_slack(&x);
    let mut h: i64 = 1 << REFINE_BITS;
    let mut trace = Vec::with_capacity(steps);
    let df = den as f64;
    for _ in 0..steps {
        let mut best: Option<(f64, usize, usize)> = None;
        let consider = |val_new: f64, from: usize, to: usize, best: &mut Option<(f64, usize, usize)>| {
            if val_new > best.map_or(val, |b| b.0) {
                *best = Some((val_new, from, to));
            }
        };
        // `from == n` means "no source" and `to == n` "no target"
        for from in 0..=n {
            if from < n && cur.k[from] < h {
                continue;
            }
            for to in 0..=n {
                if from == to || (simplex && (from == n || to == n)) {
                    continue;
                }
                if from < n {
                    x[from] = (cur.k[from] - h) as f64 / df;
                }
                if to < n {
                    x[to] = (cur.k[to] + h) as f64 / df;
                }
                consider(fs.min_slack(&x), from, to, &mut best);
                if from < n {
                    x[from] = cur.k[from] as f64 / df;
                }
                if to < n {
                    x[to] = cur.k[to] as f64 / df;
                }
            }
        }
        match best {
            Some((v, from, to)) => {
                if from < n {
                    cur.k[from] -= h;
                    x[from] = cur.k[from] as f64 / df;
                }
                if to < n {
                    cur.k[to] += h;
                    x[to] = cur.k[to] as f64 / df;
                }
                val = v;
            }
            None if h == 1 => {
                trace.push(val);
                break;
            }
            None => h /= 2,
        }
        trace.push(val);
    }
    (cur, trace)
}
