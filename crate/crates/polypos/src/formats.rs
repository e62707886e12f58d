//! JSON file formats. Rationals travel as strings, `"3"` or `"-7/2"`.

use serde::{Deserialize, Serialize};

use polypos_core::graphs::Graph;
use polypos_core::linalg::Matrix;
use polypos_core::measures::SEPModel;
use polypos_core::positivity::GammaVector;
use polypos_core::posets::LabeledPoset;
use polypos_core::rat;
use polypos_core::subdivision::SimplicialComplex;
use polypos_core::{ExactPoly, Rat};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot parse {0:?} as a rational")]
    Rational(String),
    #[error(transparent)]
    Core(#[from] polypos_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub fn rat_string(q: &Rat) -> String {
    q.to_string()
}

pub fn parse_rat(s: &str) -> Result<Rat, FormatError> {
    rat::parse(s.trim()).ok_or_else(|| FormatError::Rational(s.to_string()))
}

pub fn parse_rats(xs: &[String]) -> Result<Vec<Rat>, FormatError> {
    xs.iter().map(|s| parse_rat(s)).collect()
}

fn strings(qs: &[Rat]) -> Vec<String> {
    qs.iter().map(rat_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl From<&ExactPoly> for PolyJson {
    fn from(p: &ExactPoly) -> Self {
        PolyJson { coeffs: strings(p.coeffs()) }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<ExactPoly, FormatError> {
        Ok(ExactPoly::new(parse_rats(&self.coeffs)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaJson {
    pub d: usize,
    pub gammas: Vec<String>,
}

impl From<&GammaVector> for GammaJson {
    fn from(g: &GammaVector) -> Self {
        GammaJson { d: g.d, gammas: strings(&g.gammas) }
    }
}

/// `covers` lists `[i, j]` when `j` covers `i`; labels are `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<(u32, u32)>,
}

impl PosetJson {
    pub fn to_poset(&self) -> Result<LabeledPoset, FormatError> {
        Ok(LabeledPoset::new(self.n, self.covers.clone())?)
    }
}

impl From<&LabeledPoset> for PosetJson {
    fn from(p: &LabeledPoset) -> Self {
        PosetJson { n: p.n(), covers: p.covers().to_vec() }
    }
}

/// Vertices are `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        Ok(Graph::new(self.n, self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))))?)
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub facets: Vec<Vec<u32>>,
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<SimplicialComplex, FormatError> {
        Ok(SimplicialComplex::new(self.facets.clone())?)
    }
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson { facets: c.facets().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SepJson {
    pub n: usize,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<String>>,
    pub b: Vec<String>,
    pub d: Vec<String>,
}

impl SepJson {
    pub fn to_model(&self) -> Result<SEPModel, FormatError> {
        let rows = self.q.iter().map(|r| parse_rats(r)).collect::<Result<Vec<_>, _>>()?;
        let q = Matrix::from_rows(rows)?;
        let m = SEPModel::new(q, parse_rats(&self.b)?, parse_rats(&self.d)?)?;
        if m.n != self.n {
            return Err(polypos_core::Error::Shape(format!("model has {} sites, n = {}", m.n, self.n)).into());
        }
        Ok(m)
    }
}

impl From<&SEPModel> for SepJson {
    fn from(m: &SEPModel) -> Self {
        SepJson {
            n: m.n,
            q: m.q.to_rows().iter().map(|r| strings(r)).collect(),
            b: strings(&m.b),
            d: strings(&m.d),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T, FormatError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_round_trip() {
        for s in ["0", "3", "-7/2", "5/9"] {
            assert_eq!(rat_string(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(rat_string(&parse_rat("4/2").unwrap()), "2");
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn sep_round_trip() {
        let text = r#"{"n":2,"Q":[["0","1"],["1","0"]],"b":["1/2","0"],"d":["0","3"]}"#;
        let j: SepJson = serde_json::from_str(text).unwrap();
        let m = j.to_model().unwrap();
        assert_eq!(serde_json::to_string(&SepJson::from(&m)).unwrap(), text);
    }

    #[test]
    fn graph_and_poset_files() {
        let g: GraphJson = serde_json::from_str(r#"{"n":4,"edges":[[0,1],[0,2],[0,3]]}"#).unwrap();
        assert_eq!(g.to_graph().unwrap(), Graph::star(3));
        let p: PosetJson = serde_json::from_str(r#"{"n":3,"covers":[[1,3],[3,2]]}"#).unwrap();
        assert!(!p.to_poset().unwrap().is_naturally_labeled());
        let c: ComplexJson = serde_json::from_str(r#"{"facets":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(c.to_complex().unwrap().facets().len(), 2);
    }
}
