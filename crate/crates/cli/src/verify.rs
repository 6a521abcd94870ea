use std::path::PathBuf;

use clap::{Args, ValueEnum};
use tmatch::constructions::GFamilySpec;
use tmatch::verify::{
    check_est1, check_est2, check_extremal_nontrivial, check_extremal_nu, check_g1_g2, check_gfree,
    check_lemma_star, check_shift_monotonicity, CheckReport, Mode, DEFAULT_MAX_INSTANCES,
};
use tmatch::{Error, KSet, SearchBudget};

use crate::construct::load_pattern;
use crate::{parse, write_output, BudgetArgs, EXIT_BUDGET, EXIT_USAGE, EXIT_VIOLATION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    LemmaStar,
    Est1,
    Est2,
    ExtremalNu,
    ExtremalNontrivial,
    ShiftMono,
    G1VsG2,
    Gfree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sample,
}

/// Grid axes accept single values, comma lists and inclusive ranges
/// ("7", "7,9", "6..9"). Without any axis the check runs its default grid.
#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub check: Check,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
    /// Number of star centres for lemma-star.
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: ModeArg,
    /// Systems drawn per grid point in sample mode.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Pattern graphs for gfree (repeatable): builtin names or JSON files.
    #[arg(long)]
    pub pattern: Vec<String>,
    /// Refuse exhaustive runs visiting more instances than this.
    #[arg(long, default_value_t = DEFAULT_MAX_INSTANCES)]
    pub max_instances: u128,
    /// JSON report file (an array of reports); stdout when omitted.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// CSV summary file, one row per report.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Leave `seconds` null so reports are byte-identical across runs.
    #[arg(long)]
    pub no_timing: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Clone, Copy, Debug)]
struct Point {
    n: u32,
    k: u32,
    t: u32,
    s: u32,
    m: u32,
}

const fn p(n: u32, k: u32, t: u32, s: u32, m: u32) -> Point {
    Point { n, k, t, s, m }
}

fn default_grid(check: Check, mode: ModeArg) -> Vec<Point> {
    match check {
        Check::LemmaStar if mode == ModeArg::Sample => vec![p(10, 4, 2, 0, 3)],
        Check::LemmaStar => vec![p(7, 3, 2, 0, 2)],
        Check::Est1 | Check::Est2 => vec![p(8, 3, 2, 0, 0), p(8, 3, 1, 0, 0)],
        Check::ExtremalNu => vec![p(7, 3, 1, 1, 0), p(8, 3, 1, 1, 0)],
        Check::ExtremalNontrivial => vec![p(7, 3, 2, 0, 0)],
        Check::ShiftMono => vec![p(12, 4, 2, 3, 0)],
        Check::G1VsG2 => [(4, 1), (6, 2), (3, 1), (5, 2), (4, 2)].iter().map(|&(k, t)| p(10_000, k, t, 2, 0)).collect(),
        Check::Gfree => vec![p(10, 3, 1, 0, 0), p(12, 4, 2, 0, 0)],
    }
}

fn axes(check: Check) -> &'static [&'static str] {
    match check {
        Check::LemmaStar => &["n", "k", "t", "m"],
        Check::Est1 | Check::Est2 | Check::ExtremalNontrivial | Check::Gfree => &["n", "k", "t"],
        Check::ExtremalNu | Check::ShiftMono | Check::G1VsG2 => &["n", "k", "t", "s"],
    }
}

fn grid(a: &VerifyArgs) -> tmatch::Result<Vec<Point>> {
    let given = [("n", &a.n), ("k", &a.k), ("t", &a.t), ("s", &a.s), ("m", &a.m)];
    if given.iter().all(|(_, v)| v.is_none()) {
        return Ok(default_grid(a.check, a.mode));
    }
    let mut values = Vec::new();
    for (name, v) in given {
        let needed = axes(a.check).contains(&name);
        match (v, needed) {
            (Some(text), true) => values.push(parse::grid(text)?),
            (None, true) => return Err(Error::InvalidParameters(format!("--{name} is required when a grid is given"))),
            (Some(_), false) => return Err(Error::InvalidParameters(format!("--{name} does not apply to this check"))),
            (None, false) => values.push(vec![0]),
        }
    }
    let mut points = Vec::new();
    for &n in &values[0] {
        for &k in &values[1] {
            for &t in &values[2] {
                for &s in &values[3] {
                    for &m in &values[4] {
                        points.push(p(n, k, t, s, m));
                    }
                }
            }
        }
    }
    Ok(points)
}

/// Both shapes with the first centre moved onto the tail support, checked
/// against the canonical disjoint centre.
fn shift_mono(pt: Point) -> tmatch::Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for h1_tail in [true, false] {
        let spec = GFamilySpec::canonical(pt.n, pt.k, pt.t, pt.s, h1_tail)?;
        let disjoint = *spec.centers.first().ok_or_else(|| Error::InvalidParameters("shift-mono needs s >= 2".into()))?;
        let onto = spec.tail.support().min_element().expect("nonempty support");
        let overlapping = KSet::interval(1, pt.t - 1).with(onto);
        out.push(check_shift_monotonicity(&spec.with_first_center(overlapping)?, disjoint)?);
    }
    Ok(out)
}

fn run_point(a: &VerifyArgs, pt: Point, budget: SearchBudget) -> anyhow::Result<Vec<CheckReport>> {
    let Point { n, k, t, s, m } = pt;
    let mode = match a.mode {
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Sample => Mode::Sample { count: a.samples, seed: a.seed },
    };
    Ok(match a.check {
        Check::LemmaStar => vec![check_lemma_star(n, k, t, m, mode, a.max_instances)?],
        Check::Est1 => vec![check_est1(n, k, t, a.max_instances)?],
        Check::Est2 => vec![check_est2(n, k, t, a.max_instances)?],
        Check::ExtremalNu => vec![check_extremal_nu(n, k, t, s, budget)?],
        Check::ExtremalNontrivial => vec![check_extremal_nontrivial(n, k, t, budget)?],
        Check::ShiftMono => shift_mono(pt)?,
        Check::G1VsG2 => vec![check_g1_g2(n, k, t, s)?],
        Check::Gfree => {
            let names: Vec<&str> =
                if a.pattern.is_empty() { vec!["K2", "K3", "K1,2", "K2,2"] } else { a.pattern.iter().map(String::as_str).collect() };
            let mut out = Vec::new();
            for name in names {
                out.push(check_gfree(n, k, t, &load_pattern(name)?, budget)?);
            }
            out
        }
    })
}

pub fn run(a: &VerifyArgs) -> anyhow::Result<u8> {
    let budget = a.budget.budget()?;
    let mut reports = Vec::new();
    for pt in grid(a)? {
        match run_point(a, pt, budget) {
            Ok(mut r) => reports.append(&mut r),
            Err(e) if matches!(e.downcast_ref::<Error>(), Some(Error::InvalidParameters(_))) => {
                eprintln!("skipped n={} k={} t={} s={} m={}: {e}", pt.n, pt.k, pt.t, pt.s, pt.m);
            }
            Err(e) => return Err(e),
        }
    }
    if reports.is_empty() {
        eprintln!("error: no grid point had valid parameters");
        return Ok(EXIT_USAGE);
    }
    if a.no_timing {
        reports = reports.into_iter().map(CheckReport::without_timing).collect();
    }
    let mut json = serde_json::to_string_pretty(&reports)?;
    json.push('\n');
    write_output(a.json.as_deref(), &json)?;
    if let Some(path) = &a.csv {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(CheckReport::CSV_HEADER)?;
        for r in &reports {
            w.write_record(r.csv_record())?;
        }
        w.flush()?;
    }
    for r in &reports {
        let [check, params, tested, violations, certified, _] = r.csv_record();
        eprintln!("{check} {params}: tested={tested} violations={violations} certified={certified}");
    }
    Ok(if reports.iter().any(|r| !r.violations.is_empty()) {
        EXIT_VIOLATION
    } else if reports.iter().any(|r| !r.certified) {
        EXIT_BUDGET
    } else {
        0
    })
}
