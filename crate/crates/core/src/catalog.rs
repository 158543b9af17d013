//! Known polar actions in dimensions 3 to 5, and polar circle actions.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::diffeo::DiffeoType5;
use crate::error::{Error, Result};

const CATALOG_JSON: &str = include_str!("../resources/catalog.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub group: String,
    pub dimension: u32,
    pub cohomogeneity: u32,
    pub manifold: String,
    pub chamber: String,
    pub principal_isotropy: String,
    pub polar_group: String,
    /// `None` where no curvature statement applies.
    pub nonneg_admissible: Option<bool>,
    pub source: String,
}

#[derive(Debug, Deserialize)]
struct Catalog {
    version: u32,
    entries: Vec<CatalogEntry>,
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| serde_json::from_str(CATALOG_JSON).expect("bundled catalog parses"))
}

pub fn version() -> u32 {
    catalog().version
}

pub fn entries() -> &'static [CatalogEntry] {
    &catalog().entries
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Query {
    pub group: Option<String>,
    pub dimension: Option<u32>,
    pub nonneg: Option<bool>,
}

impl Query {
    pub fn group(mut self, g: impl Into<String>) -> Self {
        self.group = Some(g.into());
        self
    }

    pub fn dimension(mut self, d: u32) -> Self {
        self.dimension = Some(d);
        self
    }

    pub fn nonneg(mut self, flag: bool) -> Self {
        self.nonneg = Some(flag);
        self
    }

    fn matches(&self, e: &CatalogEntry) -> bool {
        self.group.as_ref().is_none_or(|g| e.group.eq_ignore_ascii_case(g))
            && self.dimension.is_none_or(|d| e.dimension == d)
            && self.nonneg.is_none_or(|n| e.nonneg_admissible == Some(n))
    }
}

pub fn query(q: &Query) -> Vec<&'static CatalogEntry> {
    entries().iter().filter(|e| q.matches(e)).collect()
}

/// Chamber of a polar circle action, reduced to what determines the manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleChamberData {
    pub b2: u64,
    pub spin: bool,
    pub boundary_components: u64,
    pub simply_connected: bool,
}

/// `H₂(M) = H₂(N) ⊕ Z^{p-1}`, and `M` is spin exactly when `N` is.
pub fn circle_action_type(d: &CircleChamberData) -> Result<DiffeoType5> {
    if d.boundary_components == 0 {
        return Err(Error::InvalidChamber(
            "chamber without boundary gives a product with S1".into(),
        ));
    }
    if !d.simply_connected {
        return Err(Error::InvalidChamber("chamber is not simply connected".into()));
    }
    Ok(DiffeoType5::from_rank(d.b2 + d.boundary_components - 1, d.spin))
}
