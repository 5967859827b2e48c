//! Branch-number engines.
//!
//! [`branch_new`] is the representative scan: it walks the weight-k class
//! representatives for k up to floor((n+1)/2), takes the smaller of the
//! weights of Mz and M^-1 z per representative, and keeps the running
//! minimum of w + k. Class filtering shrinks the largest weight still worth
//! scanning whenever the bound drops, budget-bounded weight evaluation
//! abandons a product as soon as it can no longer improve the bound, and
//! involutory or Hadamard inputs need only one product per vector because
//! w(Mx) = w(M^-1 x) for them. All three devices are contract-invisible:
//! they never change the returned branch number.
//!
//! [`branch_exhaustive`] is the definition-based oracle over all q^n - 1
//! non-zero inputs, and [`min_distance_code`] is the coding-theoretic one:
//! the minimum weight of the code generated by the rows of [I | M]. The two
//! oracles deliberately share nothing with the representative scan.

use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use crate::field::{Field, FieldElement};
use crate::matrix::{weight, FqMatrix};
use crate::reps::{rep_split, RepError, RepIter};

/// Default cap on q^n for the exhaustive engines.
pub const DEFAULT_EXHAUSTIVE_LIMIT: u128 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Mds,
    NearMds,
    Other,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Mds => "MDS",
            Classification::NearMds => "NearMDS",
            Classification::Other => "Other",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    NewAlgorithm,
    NewAlgorithmInvolutoryPath,
    Exhaustive,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::NewAlgorithm => "NewAlgorithm",
            Algorithm::NewAlgorithmInvolutoryPath => "NewAlgorithmInvolutoryPath",
            Algorithm::Exhaustive => "Exhaustive",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which engine to run where a choice exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchAlgo {
    New,
    Exhaustive,
}

/// Tuning knobs for the representative scan. Every knob is result-neutral;
/// disabling them only changes how much work gets counted.
#[derive(Debug, Clone)]
pub struct BranchOptions {
    /// Shrink the maximum scanned weight when the bound drops.
    pub filter: bool,
    /// Abandon weight evaluations that can no longer improve the bound.
    pub budget: bool,
    /// Detect involutory / Hadamard inputs and skip the inverse product.
    pub fast_path: bool,
    /// Shard count; 1 means single-threaded with deterministic counters.
    pub threads: usize,
    /// Stop outright once the bound reaches 2, the minimum for any
    /// non-singular matrix.
    pub early_exit: bool,
}

impl Default for BranchOptions {
    fn default() -> Self {
        BranchOptions { filter: true, budget: true, fast_path: true, threads: 1, early_exit: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// The representative scan requires an invertible matrix.
    Singular,
    /// q^n exceeds the exhaustive-engine guard.
    TooLarge { n: usize, q: u64, limit: u128 },
    /// A Near-MDS decision was requested without a linear branch number.
    MissingLinear,
    /// The enumeration space could not be set up.
    Enumeration(RepError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Singular => write!(f, "matrix is singular"),
            EngineError::TooLarge { n, q, limit } => {
                write!(f, "search space {q}^{n} exceeds the exhaustive guard {limit}")
            }
            EngineError::MissingLinear => {
                write!(f, "Near-MDS decision requires the linear branch number")
            }
            EngineError::Enumeration(e) => write!(f, "enumeration error: {e}"),
        }
    }
}

impl std::error::Error for EngineError {}

impl From<RepError> for EngineError {
    fn from(e: RepError) -> Self {
        EngineError::Enumeration(e)
    }
}

/// Result record of one engine run.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchReport {
    pub n: usize,
    pub q: u64,
    /// Differential branch number of the scanned matrix.
    pub branch_diff: usize,
    /// Linear branch number, when a transpose run contributed one.
    pub branch_lin: Option<usize>,
    /// None when the matrix sits at branch_diff = n and no linear branch
    /// number is available to separate Near-MDS from Other.
    pub classification: Option<Classification>,
    pub algorithm: Algorithm,
    pub vectors_evaluated: u64,
    /// Field multiplications actually performed.
    pub field_mults: u64,
    /// Field multiplications a full-product scan would have performed;
    /// equal to `field_mults` when budgeting is disabled. This is the
    /// number comparable with the analytic cost model.
    pub field_mults_full: u64,
    /// False when sharded execution makes the work counters depend on
    /// thread interleaving. The branch numbers are deterministic either way.
    pub counters_deterministic: bool,
    pub elapsed: Duration,
}

/// MDS iff branch_diff = n+1; Near-MDS iff both branch numbers equal n.
pub fn classify(
    n: usize,
    branch_diff: usize,
    branch_lin: Option<usize>,
) -> Result<Classification, EngineError> {
    if branch_diff == n + 1 {
        return Ok(Classification::Mds);
    }
    if branch_diff == n {
        return match branch_lin {
            Some(l) if l == n => Ok(Classification::NearMds),
            Some(_) => Ok(Classification::Other),
            None => Err(EngineError::MissingLinear),
        };
    }
    Ok(Classification::Other)
}

/// Representative scan with default options.
pub fn branch_new(m: &FqMatrix) -> Result<BranchReport, EngineError> {
    branch_new_with(m, &BranchOptions::default())
}

/// Representative scan with explicit options.
pub fn branch_new_with(m: &FqMatrix, opts: &BranchOptions) -> Result<BranchReport, EngineError> {
    let start = Instant::now();
    let n = m.order();
    let field = m.field().as_ref();
    let q = field.order();
    let inverse = m.inverse().map_err(|_| EngineError::Singular)?;

    let fast = opts.fast_path
        && (m.is_involutory()
            || (field.is_binary() && m.is_hadamard_char2() && !m.first_row_sum().is_zero()));
    let inverse = if fast { None } else { Some(&inverse) };

    let r0 = (n + 1) / 2;
    let threads = opts.threads.max(1);
    let scan = if threads == 1 {
        scan_single(m, inverse, field, r0, opts)?
    } else {
        scan_sharded(m, inverse, field, r0, opts, threads)?
    };

    let branch_diff = scan.bound;
    debug_assert!((2..=n + 1).contains(&branch_diff));
    Ok(BranchReport {
        n,
        q,
        branch_diff,
        branch_lin: None,
        classification: classify(n, branch_diff, None).ok(),
        algorithm: if fast {
            Algorithm::NewAlgorithmInvolutoryPath
        } else {
            Algorithm::NewAlgorithm
        },
        vectors_evaluated: scan.vectors,
        field_mults: scan.mults,
        field_mults_full: scan.mults_full,
        counters_deterministic: threads == 1,
        elapsed: start.elapsed(),
    })
}

struct ScanTotals {
    bound: usize,
    vectors: u64,
    mults: u64,
    mults_full: u64,
}

/// Largest weight still worth scanning under the current bound.
#[inline]
fn weight_cap(bound: usize, r0: usize, filter: bool) -> usize {
    if filter {
        r0.min(bound - 1)
    } else {
        r0
    }
}

/// Weight of the product of `mat` with the sparse vector given by
/// (support, values), abandoned once it exceeds `budget`. The pinned
/// leading 1 costs no multiplication, so each completed row adds k-1
/// to the multiplication counter.
#[inline]
fn sparse_weight_bounded(
    mat: &FqMatrix,
    field: &Field,
    support: &[usize],
    values: &[FieldElement],
    budget: usize,
    mults: &mut u64,
) -> Option<usize> {
    let n = mat.order();
    let k = support.len();
    let mut count = 0usize;
    for i in 0..n {
        let row = mat.row(i);
        let mut acc = row[support[0]];
        for j in 1..k {
            acc = field.add(acc, field.mul(row[support[j]], values[j]));
        }
        *mults += (k - 1) as u64;
        if !acc.is_zero() {
            count += 1;
            if count > budget {
                return None;
            }
        }
    }
    Some(count)
}

fn scan_single(
    m: &FqMatrix,
    inverse: Option<&FqMatrix>,
    field: &Field,
    r0: usize,
    opts: &BranchOptions,
) -> Result<ScanTotals, EngineError> {
    let n = m.order();
    let mut bound = n + 1;
    let mut vectors = 0u64;
    let mut mults = 0u64;
    let mut mults_full = 0u64;

    let mut k = 1usize;
    'outer: while k <= weight_cap(bound, r0, opts.filter) {
        let full_per_vector = ((n * (k - 1)) * if inverse.is_some() { 2 } else { 1 }) as u64;
        let mut it = RepIter::new(field, n, k)?;
        while it.advance() {
            vectors += 1;
            mults_full += full_per_vector;
            let budget = if opts.budget { bound.saturating_sub(k + 1) } else { n };
            let w1 =
                sparse_weight_bounded(m, field, it.support(), it.values(), budget, &mut mults);
            let w = match inverse {
                None => w1,
                Some(inv) => {
                    let w2 = sparse_weight_bounded(
                        inv,
                        field,
                        it.support(),
                        it.values(),
                        budget,
                        &mut mults,
                    );
                    match (w1, w2) {
                        (Some(a), Some(b)) => Some(a.min(b)),
                        (Some(a), None) => Some(a),
                        (None, some) => some,
                    }
                }
            };
            if let Some(w) = w {
                if w + k < bound {
                    bound = w + k;
                    if opts.early_exit && bound == 2 {
                        break 'outer;
                    }
                }
            }
        }
        k += 1;
    }
    Ok(ScanTotals { bound, vectors, mults, mults_full })
}

fn scan_sharded(
    m: &FqMatrix,
    inverse: Option<&FqMatrix>,
    field: &Field,
    r0: usize,
    opts: &BranchOptions,
    threads: usize,
) -> Result<ScanTotals, EngineError> {
    let n = m.order();
    let bound = AtomicUsize::new(n + 1);
    let vectors = AtomicU64::new(0);
    let mults = AtomicU64::new(0);
    let mults_full = AtomicU64::new(0);

    let mut k = 1usize;
    while k <= weight_cap(bound.load(Ordering::Relaxed), r0, opts.filter) {
        let shards = rep_split(field, n, k, threads)?;
        let full_per_vector = ((n * (k - 1)) * if inverse.is_some() { 2 } else { 1 }) as u64;
        std::thread::scope(|scope| {
            for mut shard in shards {
                let bound = &bound;
                let vectors = &vectors;
                let mults = &mults;
                let mults_full = &mults_full;
                scope.spawn(move || {
                    let mut local_vectors = 0u64;
                    let mut local_mults = 0u64;
                    let mut local_full = 0u64;
                    while shard.advance() {
                        // Stale reads of the shared bound only cost extra
                        // work; the bound itself only ever tightens.
                        let b_now = bound.load(Ordering::Relaxed);
                        if opts.early_exit && b_now == 2 {
                            break;
                        }
                        local_vectors += 1;
                        local_full += full_per_vector;
                        let budget =
                            if opts.budget { b_now.saturating_sub(k + 1) } else { n };
                        let w1 = sparse_weight_bounded(
                            m,
                            field,
                            shard.support(),
                            shard.values(),
                            budget,
                            &mut local_mults,
                        );
                        let w = match inverse {
                            None => w1,
                            Some(inv) => {
                                let w2 = sparse_weight_bounded(
                                    inv,
                                    field,
                                    shard.support(),
                                    shard.values(),
                                    budget,
                                    &mut local_mults,
                                );
                                match (w1, w2) {
                                    (Some(a), Some(b)) => Some(a.min(b)),
                                    (Some(a), None) => Some(a),
                                    (None, some) => some,
                                }
                            }
                        };
                        if let Some(w) = w {
                            if w + k < b_now {
                                bound.fetch_min(w + k, Ordering::Relaxed);
                            }
                        }
                    }
                    vectors.fetch_add(local_vectors, Ordering::Relaxed);
                    mults.fetch_add(local_mults, Ordering::Relaxed);
                    mults_full.fetch_add(local_full, Ordering::Relaxed);
                });
            }
        });
        k += 1;
    }

    Ok(ScanTotals {
        bound: bound.into_inner(),
        vectors: vectors.into_inner(),
        mults: mults.into_inner(),
        mults_full: mults_full.into_inner(),
    })
}

/// Definition-based oracle with the default q^n guard.
pub fn branch_exhaustive(m: &FqMatrix) -> Result<BranchReport, EngineError> {
    branch_exhaustive_with(m, DEFAULT_EXHAUSTIVE_LIMIT)
}

/// Scans every non-zero input vector and minimizes w(x) + w(Mx) directly.
/// Accepts singular matrices, for which the result may be as low as 1.
pub fn branch_exhaustive_with(m: &FqMatrix, limit: u128) -> Result<BranchReport, EngineError> {
    let start = Instant::now();
    let n = m.order();
    let field = m.field().as_ref();
    let q = field.order();
    check_space(n, q, limit)?;

    let mut best = usize::MAX;
    let mut x = vec![FieldElement::ZERO; n];
    let mut product = vec![FieldElement::ZERO; n];
    let mut vectors = 0u64;
    let mut mults = 0u64;
    while odometer_step(&mut x, q) {
        vectors += 1;
        let wx = weight(&x);
        for (i, slot) in product.iter_mut().enumerate() {
            let row = m.row(i);
            let mut acc = FieldElement::ZERO;
            for (mij, &xj) in row.iter().zip(&x) {
                acc = field.add(acc, field.mul(*mij, xj));
            }
            *slot = acc;
        }
        mults += (n * n) as u64;
        let h = wx + weight(&product);
        if h < best {
            best = h;
        }
    }

    Ok(BranchReport {
        n,
        q,
        branch_diff: best,
        branch_lin: None,
        classification: classify(n, best, None).ok(),
        algorithm: Algorithm::Exhaustive,
        vectors_evaluated: vectors,
        field_mults: mults,
        field_mults_full: mults,
        counters_deterministic: true,
        elapsed: start.elapsed(),
    })
}

/// Linear branch number: the chosen engine applied to the transpose. The
/// returned report describes M^T, whose differential branch number is the
/// linear branch number of M; the value is mirrored into `branch_lin`.
pub fn branch_linear(
    m: &FqMatrix,
    algo: BranchAlgo,
    opts: &BranchOptions,
) -> Result<BranchReport, EngineError> {
    let t = m.transpose();
    let mut report = match algo {
        BranchAlgo::New => branch_new_with(&t, opts)?,
        BranchAlgo::Exhaustive => branch_exhaustive_with(&t, DEFAULT_EXHAUSTIVE_LIMIT)?,
    };
    report.branch_lin = Some(report.branch_diff);
    Ok(report)
}

/// Both branch numbers of M in one merged report: a differential run on M
/// plus a linear run on M^T, with work counters summed.
pub fn branch_both(
    m: &FqMatrix,
    algo: BranchAlgo,
    opts: &BranchOptions,
) -> Result<BranchReport, EngineError> {
    let mut report = match algo {
        BranchAlgo::New => branch_new_with(m, opts)?,
        BranchAlgo::Exhaustive => branch_exhaustive_with(m, DEFAULT_EXHAUSTIVE_LIMIT)?,
    };
    let lin = branch_linear(m, algo, opts)?;
    report.branch_lin = Some(lin.branch_diff);
    report.vectors_evaluated += lin.vectors_evaluated;
    report.field_mults += lin.field_mults;
    report.field_mults_full += lin.field_mults_full;
    report.elapsed += lin.elapsed;
    report.counters_deterministic &= lin.counters_deterministic;
    report.classification = classify(report.n, report.branch_diff, report.branch_lin).ok();
    Ok(report)
}

/// Minimum distance of the linear code generated by the rows of [I | M]:
/// the least w(x) + w(xM) over non-zero row vectors x. Serves as an
/// independent coding-theoretic oracle; under the column-vector convention
/// used elsewhere it equals the differential branch number of M^T.
pub fn min_distance_code(m: &FqMatrix) -> Result<usize, EngineError> {
    min_distance_code_with(m, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn min_distance_code_with(m: &FqMatrix, limit: u128) -> Result<usize, EngineError> {
    let n = m.order();
    let field = m.field().as_ref();
    let q = field.order();
    check_space(n, q, limit)?;

    let mut best = usize::MAX;
    let mut x = vec![FieldElement::ZERO; n];
    while odometer_step(&mut x, q) {
        let mut running = weight(&x);
        if running >= best {
            continue;
        }
        for j in 0..n {
            // Column j of the message-side product x * M.
            let mut acc = FieldElement::ZERO;
            for (i, &xi) in x.iter().enumerate() {
                acc = field.add(acc, field.mul(xi, m.entry(i, j)));
            }
            if !acc.is_zero() {
                running += 1;
                if running >= best {
                    break;
                }
            }
        }
        if running < best {
            best = running;
        }
    }
    Ok(best)
}

fn check_space(n: usize, q: u64, limit: u128) -> Result<(), EngineError> {
    let mut space: u128 = 1;
    for _ in 0..n {
        space = match space.checked_mul(q as u128) {
            Some(s) if s <= limit => s,
            _ => return Err(EngineError::TooLarge { n, q, limit }),
        };
    }
    Ok(())
}

/// Advances a base-q odometer over encodings, first coordinate fastest.
/// Returns false after wrapping past the all-zero vector.
fn odometer_step(x: &mut [FieldElement], q: u64) -> bool {
    for slot in x.iter_mut() {
        if slot.0 + 1 < q {
            *slot = FieldElement(slot.0 + 1);
            return true;
        }
        *slot = FieldElement(0);
    }
    false
}
