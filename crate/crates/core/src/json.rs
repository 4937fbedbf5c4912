//! JSON documents for families, filters and attraction problems.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::attraction::AttractionProblem;
use crate::error::{Error, Result};
use crate::filters::{Ambient, Filter};
use crate::topo::Topology;
use crate::universe::{PointMap, SetFamily, Subset, Universe};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub universe: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub members: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AmbientDoc {
    PowerSet { powerset: usize },
    Family(FamilyDoc),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterDoc {
    pub ambient: AmbientDoc,
    pub min: Vec<usize>,
}

/// A point given by index or by label.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PointRef {
    Index(usize),
    Label(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDoc {
    #[serde(rename = "E")]
    pub e: usize,
    #[serde(rename = "H")]
    pub h_size: usize,
    pub tau: FamilyDoc,
    pub h: Vec<PointRef>,
    pub constraint: FamilyDoc,
    #[serde(default)]
    pub algebra: Option<FamilyDoc>,
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
}

fn points_of(u: &Universe, list: &[usize]) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for &p in list {
        u.check_point(p)?;
        if s.contains(p) {
            return Err(Error::Input(format!("duplicate point id {p} in a member")));
        }
        s = s.with(p);
    }
    Ok(s)
}

impl FamilyDoc {
    pub fn into_family(self) -> Result<SetFamily> {
        let u = Universe::new(self.universe)?.with_labels(self.labels)?;
        let members = self
            .members
            .iter()
            .map(|m| points_of(&u, m))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(u, members)
    }

    pub fn from_family(f: &SetFamily) -> FamilyDoc {
        FamilyDoc {
            universe: f.universe().size(),
            labels: f.universe().labels().map(<[String]>::to_vec),
            members: f.iter().map(|s| s.points().collect()).collect(),
        }
    }
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    parse::<FamilyDoc>(text)?.into_family()
}

pub fn family_json(f: &SetFamily) -> Value {
    serde_json::to_value(FamilyDoc::from_family(f)).unwrap()
}

/// A subset as labels when the universe has them, else as indices.
pub fn subset_json(u: &Universe, s: Subset) -> Value {
    match u.labels() {
        Some(l) => json!(s.points().map(|p| l[p].clone()).collect::<Vec<_>>()),
        None => json!(s.points().collect::<Vec<_>>()),
    }
}

pub fn parse_filter(text: &str) -> Result<Filter> {
    let doc: FilterDoc = parse(text)?;
    let ambient = match doc.ambient {
        AmbientDoc::PowerSet { powerset } => Ambient::power_set(&Universe::new(powerset)?),
        AmbientDoc::Family(f) => Ambient::family(f.into_family()?)?,
    };
    let min = points_of(ambient.universe(), &doc.min)?;
    Filter::principal(ambient, min)
}

pub fn filter_json(f: &Filter) -> Value {
    let ambient = match f.ambient() {
        Ambient::PowerSet(u) => json!({ "powerset": u.size() }),
        Ambient::Family(fam) => family_json(fam),
    };
    json!({ "ambient": ambient, "min": f.min().points().collect::<Vec<_>>() })
}

fn check_size(doc: &FamilyDoc, expected: usize, name: &str) -> Result<()> {
    if doc.universe != expected {
        return Err(Error::Input(format!(
            "{name} lives on {} points, expected {expected}",
            doc.universe
        )));
    }
    Ok(())
}

pub fn parse_problem(text: &str) -> Result<AttractionProblem> {
    let doc: ProblemDoc = parse(text)?;
    check_size(&doc.tau, doc.h_size, "tau")?;
    check_size(&doc.constraint, doc.e, "constraint")?;
    if let Some(a) = &doc.algebra {
        check_size(a, doc.e, "algebra")?;
    }
    let tau = Topology::new(doc.tau.into_family()?)?;
    let constraint = doc.constraint.into_family()?;
    let e = constraint.universe().clone();
    let hu = tau.universe();
    let images = doc
        .h
        .iter()
        .map(|r| match r {
            PointRef::Index(i) => Ok(*i),
            PointRef::Label(l) => hu
                .point(l)
                .ok_or_else(|| Error::Input(format!("unknown point label {l:?} in h"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let h = PointMap::new(e.clone(), hu.clone(), images)?;
    let algebra = match doc.algebra {
        Some(a) => Some(a.into_family()?.relabel(e)?),
        None => None,
    };
    AttractionProblem::new(tau, h, constraint, algebra)
}
