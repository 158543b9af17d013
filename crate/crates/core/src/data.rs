//! The JSON data kinds, tagged by a `"kind"` field.

use serde::{Deserialize, Serialize};

use crate::cycle4::CycleData;
use crate::error::{Error, Result, Violation};
use crate::forest5::{self, ForestData, Tree};
use crate::lattice::{project_along, Slope3, Vec3};
use crate::polygon5::PolygonWord;

pub const KINDS: [&str; 4] = ["t2_forest_dim5", "so3_polygon_dim5", "t2_cycle_dim4", "t3_forest"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Data {
    #[serde(rename = "t2_forest_dim5")]
    Forest(ForestData),
    #[serde(rename = "so3_polygon_dim5")]
    Polygon(PolygonWord),
    #[serde(rename = "t2_cycle_dim4")]
    Cycle(CycleData),
    #[serde(rename = "t3_forest")]
    Forest3(Forest3),
}

impl Data {
    pub fn kind(&self) -> &'static str {
        match self {
            Data::Forest(_) => KINDS[0],
            Data::Polygon(_) => KINDS[1],
            Data::Cycle(_) => KINDS[2],
            Data::Forest3(_) => KINDS[3],
        }
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        match self {
            Data::Forest(f) => forest5::validate(f),
            Data::Polygon(w) => crate::polygon5::validate(w),
            Data::Cycle(c) => crate::cycle4::validate(c),
            Data::Forest3(f) => f.validate(),
        }
    }
}

/// A tree whose faces carry circle subgroups of T³.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tree3 {
    pub slopes: Vec<Vec3>,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

/// Boundary forest marked in T³, before dividing out a free circle.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Forest3 {
    pub components: Vec<Tree3>,
}

impl Forest3 {
    pub fn path(slopes: &[Vec3]) -> Self {
        Self {
            components: vec![Tree3 {
                slopes: slopes.to_vec(),
                edges: (1..slopes.len()).map(|i| [i - 1, i]).collect(),
            }],
        }
    }

    /// Structural checks plus primitivity; adjacency is only meaningful after
    /// projection.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        // reuse the tree checks on a stand-in with trivially adjacent slopes
        let shape = ForestData::new(
            self.components
                .iter()
                .map(|t| Tree {
                    slopes: (0..t.slopes.len())
                        .map(|i| if i % 2 == 0 { [1, 0] } else { [0, 1] })
                        .collect(),
                    edges: t.edges.clone(),
                })
                .collect(),
        );
        if let Err(vs) = forest5::validate(&shape) {
            out.extend(vs.into_iter().filter(|v| !v.message.starts_with("determinant")));
        }
        for (c, t) in self.components.iter().enumerate() {
            for (i, v) in t.slopes.iter().enumerate() {
                if Slope3::from_vec(*v).is_err() {
                    out.push(Violation::new(
                        format!("component {c} vertex {i} {v:?}"),
                        "not primitive",
                    ));
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }
}

/// Projects every slope of `f` to `Z³/⟨circle⟩` and checks the result.
pub fn quotient(f: &Forest3, circle: Slope3) -> Result<ForestData> {
    f.validate().map_err(Error::InvalidData)?;
    let components = f
        .components
        .iter()
        .map(|t| {
            Ok(Tree {
                slopes: t
                    .slopes
                    .iter()
                    .map(|&v| Ok(project_along(circle, Slope3::from_vec(v)?)?.entries()))
                    .collect::<Result<_>>()?,
                edges: t.edges.clone(),
            })
        })
        .collect::<Result<_>>()?;
    let g = ForestData::new(components);
    forest5::validate(&g).map_err(Error::InvalidData)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tagged_round_trip() {
        let text = r#"{"kind":"t2_forest_dim5","components":[{"slopes":[[1,0],[0,1],[1,3]],"edges":[[0,1],[1,2]]}]}"#;
        let d: Data = serde_json::from_str(text).unwrap();
        assert_eq!(d, Data::Forest(ForestData::path(&[[1, 0], [0, 1], [1, 3]])));
        assert_eq!(serde_json::to_string(&d).unwrap(), text);
        let w: Data = serde_json::from_str(r#"{"kind":"so3_polygon_dim5","word":["12","23","13"]}"#).unwrap();
        assert_eq!(w.kind(), "so3_polygon_dim5");
        let c: Data = serde_json::from_str(r#"{"kind":"t2_cycle_dim4","slopes":[[1,0],[0,1]]}"#).unwrap();
        assert!(c.validate().is_ok());
    }

    #[test]
    fn induced_path() {
        let f = Forest3::path(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        for k in 0..5 {
            let g = quotient(&f, Slope3::new(1, -1, k).unwrap()).unwrap();
            let expect = ForestData::path(&[[1, 0], [0, 1], [1, k]]);
            assert!(forest5::equivalent(&g, &expect).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn forest3_checks() {
        let bad = Forest3::path(&[[0, 2, 0], [0, 0, 1]]);
        assert_eq!(bad.validate().unwrap_err()[0].message, "not primitive");
        assert!(Forest3::path(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]).validate().is_ok());
    }
}
