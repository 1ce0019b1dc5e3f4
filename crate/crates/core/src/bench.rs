//! Scaling measurements for addition and multiplication on random operands.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, Digit, DigitSeq};
use crate::tree::HFSeq;

pub const DEFAULT_SEED: u64 = 2011;
pub const MIN_BITS: u64 = 256;

/// Addition is repeated until one sample covers at least this long.
const MIN_ADD_SAMPLE: Duration = Duration::from_millis(2);

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub max_bits: u64,
    pub trials: usize,
    pub seed: u64,
    /// Largest digit count at which multiplication is timed.
    pub mul_max_bits: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            max_bits: 4096,
            trials: 3,
            seed: DEFAULT_SEED,
            mul_max_bits: u64::MAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub digits: u64,
    /// Median node counts of the two operands.
    pub nodes_x: u64,
    pub nodes_y: u64,
    pub add_ns: f64,
    pub mul_ns: Option<f64>,
}

impl BenchRow {
    pub const HEADER: &'static str = "digits\tnodes_x\tnodes_y\tadd_ns\tmul_ns";

    pub fn to_tsv(&self) -> String {
        let mul = self
            .mul_ns
            .map_or_else(|| "-".to_string(), |v| format!("{v:.0}"));
        format!(
            "{}\t{}\t{}\t{:.0}\t{}",
            self.digits, self.nodes_x, self.nodes_y, self.add_ns, mul
        )
    }
}

/// A uniformly random `len`-digit bijective base-2 numeral.
pub fn random_operand(rng: &mut impl Rng, len: u64) -> HFSeq {
    let ds = (0..len)
        .map(|_| {
            if rng.gen::<bool>() {
                Digit::Two
            } else {
                Digit::One
            }
        })
        .collect();
    arith::from_digits(&DigitSeq(ds))
}

/// Digit counts `256, 512, ...` up to `max_bits`.
pub fn sizes(max_bits: u64) -> Vec<u64> {
    std::iter::successors(Some(MIN_BITS), |d| d.checked_mul(2))
        .take_while(|&d| d <= max_bits)
        .collect()
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}

fn median_u64(mut xs: Vec<u64>) -> u64 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

fn time_add(x: &HFSeq, y: &HFSeq) -> f64 {
    let mut reps: u32 = 0;
    let start = Instant::now();
    loop {
        std::hint::black_box(arith::add(std::hint::black_box(x), std::hint::black_box(y)));
        reps += 1;
        let elapsed = start.elapsed();
        if elapsed >= MIN_ADD_SAMPLE {
            return elapsed.as_nanos() as f64 / f64::from(reps);
        }
    }
}

pub fn run(cfg: &BenchConfig) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let trials = cfg.trials.max(1);
    sizes(cfg.max_bits)
        .into_iter()
        .map(|d| {
            let mut adds = Vec::with_capacity(trials);
            let mut muls = Vec::with_capacity(trials);
            let mut nx = Vec::with_capacity(trials);
            let mut ny = Vec::with_capacity(trials);
            for _ in 0..trials {
                let x = random_operand(&mut rng, d);
                let y = random_operand(&mut rng, d);
                nx.push(x.node_count().unwrap_or(u64::MAX));
                ny.push(y.node_count().unwrap_or(u64::MAX));
                adds.push(time_add(&x, &y));
                if d <= cfg.mul_max_bits {
                    let start = Instant::now();
                    std::hint::black_box(arith::mul(&x, &y));
                    muls.push(start.elapsed().as_nanos() as f64);
                }
            }
            BenchRow {
                digits: d,
                nodes_x: median_u64(nx),
                nodes_y: median_u64(ny),
                add_ns: median(adds),
                mul_ns: (!muls.is_empty()).then(|| median(muls)),
            }
        })
        .collect()
}

/// Times `pred(succ(T_depth))` and reports whether it returned `T_depth`.
pub fn tower_round_trip(depth: usize) -> (bool, Duration) {
    let tower = HFSeq::tower(depth);
    let start = Instant::now();
    let next = arith::succ(&tower);
    let back = arith::pred(&next);
    let elapsed = start.elapsed();
    (back.as_ref() == Ok(&tower) && next != tower, elapsed)
}
