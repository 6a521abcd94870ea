use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};
use tmatch::bigjson;
use tmatch::constructions::{
    emc_family, emc_size, family_i, family_ii, g1_family, g1_size, g2_family, g2_size, h1_family, h1_size, h2_family,
    h2_size, h_size, hm1_family, hm1_size, hm_t_family, FamilyISpec, GFamilySpec, HmTypeSpec,
};
use tmatch::kneser::{extremal_gfree_family, parse_pattern};
use tmatch::setcore::serialize_family;
use tmatch::{binomial, ell, star, star_union, BigCount, Error, Family, KSet, Result, TSetSystem};

use crate::{parse, pretty, write_output, BudgetArgs, FormatArg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Star,
    StarUnion,
    Emc,
    H1,
    H2,
    FamilyI,
    FamilyIi,
    HmT,
    Hm1,
    G1,
    G2,
    GfreeExtremal,
}

/// Sets are written as space- or comma-separated elements ("1 2 3"); lists of
/// sets separate the sets with semicolons ("1 2;3 4").
#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub name: FamilyName,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub t: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    /// Index of the matching-conjecture family.
    #[arg(long)]
    pub i: Option<u32>,
    /// Star centre, e.g. "1 2".
    #[arg(long)]
    pub center: Option<String>,
    /// Star centres, e.g. "1 2;3 4".
    #[arg(long)]
    pub centers: Option<String>,
    #[arg(long)]
    pub x: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long)]
    pub z: Option<String>,
    /// Pattern graph: a builtin name (K3, K2x3, K1,2,3) or a JSON file path.
    #[arg(long)]
    pub pattern: Option<String>,
    /// Extra sets for gfree-extremal, e.g. "2 3 4;5 6 7".
    #[arg(long)]
    pub extras: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

fn need<T: Copy>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidParameters(format!("--{flag} is required for this family")))
}

fn need_set(value: &Option<String>, flag: &str) -> Result<KSet> {
    parse::set(value.as_deref().ok_or_else(|| Error::InvalidParameters(format!("--{flag} is required for this family")))?)
}

/// Builtin name, inline JSON, or a path to a JSON file.
pub fn load_pattern(text: &str) -> anyhow::Result<tmatch::PatternGraph> {
    let t = text.trim();
    if t.starts_with('{') || t.starts_with('K') {
        return Ok(parse_pattern(t)?);
    }
    Ok(parse_pattern(&crate::read_input(&PathBuf::from(t))?)?)
}

struct Built {
    family: Family,
    closed_form: Option<BigCount>,
    extra: Map<String, Value>,
}

fn build(a: &ConstructArgs) -> anyhow::Result<Built> {
    let (n, k) = (a.n, a.k);
    let mut extra = Map::new();
    let (family, closed_form) = match a.name {
        FamilyName::Star => {
            let center = need_set(&a.center, "center")?;
            let size = binomial(u64::from(n.saturating_sub(center.len() as u32)), i64::from(k) - center.len() as i64);
            (star(n, k, center)?, Some(size))
        }
        FamilyName::StarUnion => {
            let sets = parse::set_list(a.centers.as_deref().ok_or_else(|| Error::InvalidParameters("--centers is required".into()))?)?;
            let t = sets.first().map_or(0, |c| c.len() as u32);
            if sets.iter().any(|c| c.len() != t as usize) {
                return Err(Error::InvalidParameters("centres must all have the same size".into()).into());
            }
            let system = TSetSystem::new(n, t, sets.iter().copied())?;
            let disjoint = sets.iter().enumerate().all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(*b)));
            let closed = if disjoint { Some(ell(n, k, t, sets.len() as u32)?) } else { None };
            (star_union(n, k, &system)?, closed)
        }
        FamilyName::Emc => {
            let (s, i) = (need(a.s, "s")?, need(a.i, "i")?);
            (emc_family(n, k, s, i)?, Some(emc_size(n, k, s, i)?))
        }
        FamilyName::H1 => {
            let t = need(a.t, "t")?;
            (h1_family(n, k, t)?, Some(h1_size(n, k, t)?))
        }
        FamilyName::H2 => {
            let t = need(a.t, "t")?;
            (h2_family(n, k, t)?, Some(h2_size(n, k, t)?))
        }
        FamilyName::FamilyI => {
            let t = need(a.t, "t")?;
            let spec = FamilyISpec::new(n, k, t, need_set(&a.x, "x")?, need_set(&a.m, "m")?, need_set(&a.c, "c")?)?;
            (family_i(&spec), None)
        }
        FamilyName::FamilyIi => {
            let t = need(a.t, "t")?;
            (family_ii(n, k, t, need_set(&a.z, "z")?)?, Some(h2_size(n, k, t)?))
        }
        FamilyName::HmT => {
            let (t, s) = (need(a.t, "t")?, need(a.s, "s")?);
            let spec = HmTypeSpec::new(n, k, t, s)?;
            extra.insert("case".into(), serde_json::to_value(spec.case())?);
            (hm_t_family(&spec)?, Some(h_size(n, k, t, s)?))
        }
        FamilyName::Hm1 => {
            let s = need(a.s, "s")?;
            let report = hm1_size(n, k, s)?;
            extra.insert("quoted_formula".into(), bigjson::signed(&report.quoted_formula));
            extra.insert("quoted_formula_agrees".into(), report.quoted_formula_agrees.into());
            (hm1_family(n, k, s)?, Some(report.closed_form))
        }
        FamilyName::G1 | FamilyName::G2 => {
            let (t, s) = (need(a.t, "t")?, need(a.s, "s")?);
            let h1_tail = a.name == FamilyName::G1;
            let spec = GFamilySpec::canonical(n, k, t, s, h1_tail)?;
            extra.insert("spec".into(), serde_json::to_value(&spec)?);
            if h1_tail {
                (g1_family(&spec)?, Some(g1_size(n, k, t, s)?))
            } else {
                (g2_family(&spec)?, Some(g2_size(n, k, t, s)?))
            }
        }
        FamilyName::GfreeExtremal => {
            let t = need(a.t, "t")?;
            let pattern = load_pattern(a.pattern.as_deref().ok_or_else(|| Error::InvalidParameters("--pattern is required".into()))?)?;
            let extras = a.extras.as_deref().map(parse::set_list).transpose()?;
            let x = extremal_gfree_family(n, k, t, &pattern, extras.as_deref(), a.budget.budget()?)?;
            extra.insert("chi".into(), x.chi.into());
            extra.insert("eta".into(), x.eta.into());
            extra.insert("extras".into(), serde_json::to_value(&x.extras)?);
            extra.insert("conditions".into(), serde_json::to_value(&x.conditions)?);
            (x.family, Some(x.bound))
        }
    };
    Ok(Built { family, closed_form, extra })
}

pub fn run(a: &ConstructArgs) -> anyhow::Result<u8> {
    let built = build(a)?;
    let size = built.family.len();
    let mut summary = json!({
        "family": a.name.to_possible_value().expect("named").get_name(),
        "n": a.n,
        "k": a.k,
        "size": size,
        "closed_form": built.closed_form.as_ref().map_or(Value::Null, bigjson::count),
        "agrees": built.closed_form.as_ref().map_or(Value::Null, |c| (*c == BigCount::from(size)).into()),
    });
    summary.as_object_mut().expect("object").extend(built.extra);
    write_output(a.output.as_deref(), &serialize_family(&built.family, a.format.into()))?;
    let summary = pretty(&summary);
    if a.output.as_deref().is_some_and(|p| p != std::path::Path::new("-")) {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    Ok(0)
}
