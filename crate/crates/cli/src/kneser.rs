use std::path::PathBuf;

use clap::{Args, Subcommand};
use serde_json::json;
use tmatch::kneser::{contains_pattern, eta, gfree_bound, special_subgraphs};
use tmatch::setcore::{parse_family, Format};
use tmatch::{bigjson, Error};

use crate::construct::load_pattern;
use crate::{pretty, read_input, write_output, BudgetArgs};

#[derive(Args, Debug)]
pub struct KneserArgs {
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub t: Option<u32>,
    /// Report file; stdout when omitted.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(subcommand)]
    pub command: KneserCommand,
}

#[derive(Subcommand, Debug)]
pub enum KneserCommand {
    /// Chromatic number, eta, and the special subgraphs of a pattern.
    Analyze { pattern: String },
    /// The largest size of a family avoiding the pattern (needs --n --k --t).
    Bound { pattern: String },
    /// Whether the family's Kneser graph contains the pattern (needs --t).
    GfreeCheck { pattern: String, family: PathBuf },
}

fn need(value: Option<u32>, flag: &str) -> tmatch::Result<u32> {
    value.ok_or_else(|| Error::InvalidParameters(format!("--{flag} is required for this subcommand")))
}

fn one_based(vertices: &[usize]) -> Vec<usize> {
    vertices.iter().map(|v| v + 1).collect()
}

pub fn run(a: &KneserArgs) -> anyhow::Result<u8> {
    let budget = a.budget.budget()?;
    let report = match &a.command {
        KneserCommand::Analyze { pattern } => {
            let g = load_pattern(pattern)?;
            let analysis = eta(&g, budget)?;
            let specials: Vec<Vec<usize>> = special_subgraphs(&g, budget)?.iter().map(|u| one_based(u)).collect();
            let classes: Vec<Vec<usize>> = analysis.classes().iter().map(|c| one_based(c)).collect();
            json!({"chi": analysis.chi, "eta": analysis.eta, "color_classes": classes, "special_subgraphs": specials})
        }
        KneserCommand::Bound { pattern } => {
            let (n, k, t) = (need(a.n, "n")?, need(a.k, "k")?, need(a.t, "t")?);
            let g = load_pattern(pattern)?;
            let analysis = eta(&g, budget)?;
            let bound = gfree_bound(n, k, t, &g, budget)?;
            json!({"n": n, "k": k, "t": t, "chi": analysis.chi, "eta": analysis.eta, "bound": bigjson::count(&bound)})
        }
        KneserCommand::GfreeCheck { pattern, family } => {
            let t = need(a.t, "t")?;
            let g = load_pattern(pattern)?;
            let text = read_input(family)?;
            let family = parse_family(&text, Format::sniff(&text))?;
            serde_json::to_value(contains_pattern(&family, t, &g, budget)?)?
        }
    };
    write_output(a.output.as_deref(), &pretty(&report))?;
    Ok(0)
}
