use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use tmatch::setcore::{parse_family, Format};
use tmatch::{is_t_intersecting, nu_t, removal_number, tau_t, trivial_center, Error, Outcome};

use crate::{pretty, read_input, write_output, BudgetArgs, FormatArg, EXIT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Nu,
    Tau,
    Removal,
    Intersecting,
    Center,
}

#[derive(Args, Debug)]
pub struct MeasureArgs {
    /// Family file (JSON or lines; detected from the content unless --format is given).
    pub file: PathBuf,
    #[arg(long)]
    pub t: u32,
    #[arg(long, value_enum)]
    pub what: What,
    /// Matching size for `removal`.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Report file; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

fn outcome<T: serde::Serialize>(o: Outcome<T>) -> (Value, bool) {
    let certified = o.certified();
    (serde_json::to_value(o.into_inner()).expect("serializes"), certified)
}

pub fn run(a: &MeasureArgs) -> anyhow::Result<u8> {
    let text = read_input(&a.file)?;
    let format = a.format.map_or_else(|| Format::sniff(&text), Format::from);
    let family = parse_family(&text, format)?;
    let budget = a.budget.budget()?;
    let t = a.t;
    let (value, witness, certified) = match a.what {
        What::Nu => {
            let (w, c) = outcome(nu_t(&family, t, budget)?);
            (w["sets"].as_array().map_or(0, Vec::len).into(), w["sets"].clone(), c)
        }
        What::Tau => {
            let (w, c) = outcome(tau_t(&family, t, budget)?);
            (w["value"].clone(), w["cover"].clone(), c)
        }
        What::Removal => {
            let s = a.s.ok_or_else(|| Error::InvalidParameters("--s is required for removal".into()))?;
            let (w, c) = outcome(removal_number(&family, s, t, budget)?);
            (w["value"].clone(), w["deleted"].clone(), c)
        }
        What::Intersecting => (is_t_intersecting(&family, t)?.into(), Value::Null, true),
        What::Center => {
            let center = trivial_center(&family, t)?;
            (serde_json::to_value(center)?, Value::Null, true)
        }
    };
    let report = json!({
        "what": a.what.to_possible_value().expect("named").get_name(),
        "t": t,
        "n": family.n(),
        "k": family.k(),
        "size": family.len(),
        "value": value,
        "witness": witness,
        "certified": certified,
    });
    write_output(a.output.as_deref(), &pretty(&report))?;
    Ok(if certified { 0 } else { EXIT_BUDGET })
}
