//! Verification records written as JSON.
//!
//! The schema is documented in the guide (`book/src/certificates.md`).
//! Field order is fixed by the struct definitions, so two runs of the same
//! request produce identical text apart from `elapsed_ms`.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::colouring::{Colour, EdgeColouring};
use crate::error::Result;
use crate::family::mask_colours;
use crate::search::SearchReport;
use crate::verify::{
    colouring_connectivity, multicoloured_family, tricoloured_count, ConnectivityNotion, ScanMode, Verdict, Witness,
};

/// Exit status for a certificate with no failures.
pub const EXIT_OK: i32 = 0;
/// Some requested check failed.
pub const EXIT_FAIL: i32 = 1;
/// The request itself was invalid.
pub const EXIT_INVALID: i32 = 2;
/// A search ran out of budget.
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColourVerdict {
    pub colour: Colour,
    pub notion: ConnectivityNotion,
    pub ok: bool,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MulticolouredSection {
    pub d: usize,
    pub mode: ScanMode,
    /// Number of distinct colour sets, equal to `families.len()`.
    pub count: usize,
    /// Number of `d`-sets seeing every colour of their edges distinct.
    pub sets: u64,
    pub visited: u64,
    pub families: Vec<Vec<Colour>>,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TricolouredSection {
    pub mode: ScanMode,
    pub threshold: usize,
    /// `(r+1)`-sets using at least `threshold` colours.
    pub count: u64,
    pub exactly_three: u64,
    pub visited: u64,
    pub witnesses: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub construction: String,
    pub params: BTreeMap<String, Value>,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub connectivity: Vec<ColourVerdict>,
    pub multicoloured: Option<MulticolouredSection>,
    pub tricoloured: Option<TricolouredSection>,
    pub search: Option<SearchReport>,
    /// Set when any count comes from sampling rather than a full scan.
    pub sampled: bool,
    pub elapsed_ms: u64,
}

/// What to check when certifying a colouring.
#[derive(Clone, Debug, Default)]
pub struct CertifyRequest {
    /// Connectivity notion for every class; `None` skips the check.
    pub notion: Option<ConnectivityNotion>,
    /// Size of the sets to scan for multicoloured members.
    pub multicoloured: Option<(usize, ScanMode)>,
    /// Colour threshold for `(r+1)`-sets.
    pub tricoloured: Option<(usize, ScanMode)>,
}

impl Certificate {
    /// Runs the requested checks on `c`.
    pub fn for_colouring(
        construction: &str,
        params: BTreeMap<String, Value>,
        c: &EdgeColouring,
        request: &CertifyRequest,
    ) -> Result<Self> {
        let start = Instant::now();
        let mut cert = Certificate {
            construction: construction.to_string(),
            params,
            n: c.n(),
            r: c.r(),
            k: c.k(),
            connectivity: Vec::new(),
            multicoloured: None,
            tricoloured: None,
            search: None,
            sampled: false,
            elapsed_ms: 0,
        };
        if let Some(notion) = request.notion {
            cert.connectivity = colouring_connectivity(c, notion)?
                .into_iter()
                .map(|(colour, report)| ColourVerdict {
                    colour,
                    notion,
                    ok: report.ok(),
                    verdict: report.verdict,
                    witness: report.witness,
                })
                .collect();
        }
        if let Some((d, mode)) = request.multicoloured {
            let rep = multicoloured_family(c, d, mode)?;
            cert.sampled |= matches!(mode, ScanMode::Sampled { .. });
            let families: Vec<Vec<Colour>> = rep.family.masks().into_iter().map(mask_colours).collect();
            cert.multicoloured = Some(MulticolouredSection {
                d,
                mode,
                count: families.len(),
                sets: rep.count,
                visited: rep.visited,
                families,
                witness: rep.witness,
            });
        }
        if let Some((threshold, mode)) = request.tricoloured {
            let rep = tricoloured_count(c, threshold, mode)?;
            cert.sampled |= matches!(mode, ScanMode::Sampled { .. });
            cert.tricoloured = Some(TricolouredSection {
                mode,
                threshold,
                count: rep.at_least,
                exactly_three: rep.exactly_three,
                visited: rep.visited,
                witnesses: rep.witnesses,
            });
        }
        cert.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(cert)
    }

    /// Certificate wrapping a search report; shape fields come from the
    /// witness when there is one.
    pub fn for_search(report: SearchReport) -> Self {
        let (n, r, k) = match &report.witness {
            Some(crate::search::SearchWitness::Colouring(c)) => (c.n(), c.r(), c.k()),
            Some(crate::search::SearchWitness::Hypergraph(h)) => (h.n(), h.r(), 0),
            Some(crate::search::SearchWitness::Family(f)) => (0, 0, f.k()),
            None => (0, 0, 0),
        };
        Certificate {
            construction: format!("search:{}", report.task),
            params: report.params.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect(),
            n,
            r,
            k,
            connectivity: Vec::new(),
            multicoloured: None,
            tricoloured: None,
            elapsed_ms: report.elapsed_ms,
            search: Some(report),
            sampled: false,
        }
    }

    /// Whether every connectivity verdict is ok.
    pub fn all_connected(&self) -> bool {
        self.connectivity.iter().all(|v| v.ok)
    }

    /// 1 if any verdict failed, else 3 if a search was truncated, else 0.
    pub fn exit_status(&self) -> i32 {
        if !self.all_connected() {
            EXIT_FAIL
        } else if self.search.as_ref().is_some_and(|s| !s.complete) {
            EXIT_BUDGET
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serialises");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_constructions::cyclic_prime_colouring;
    use crate::hypergraph_constructions::pointwise_cycles_colouring;

    #[test]
    fn cyclic_certificate() {
        let c = cyclic_prime_colouring(5).unwrap();
        let req = CertifyRequest {
            notion: Some(ConnectivityNotion::Graph),
            multicoloured: Some((3, ScanMode::Full)),
            tricoloured: None,
        };
        let cert = Certificate::for_colouring("cyclic", BTreeMap::new(), &c, &req).unwrap();
        let multi = cert.multicoloured.as_ref().unwrap();
        assert_eq!(multi.count, 5);
        assert_eq!(multi.families.len(), multi.count);
        assert_eq!(cert.exit_status(), EXIT_OK);
        let json: Value = serde_json::from_str(&cert.to_json()).unwrap();
        assert_eq!(json["connectivity"][0]["verdict"], "pass");
        assert_eq!(json["multicoloured"]["mode"]["mode"], "full");
    }

    #[test]
    fn failure_carries_witness() {
        let c = pointwise_cycles_colouring(2, 7).unwrap();
        let req = CertifyRequest {
            notion: Some(ConnectivityNotion::Strong),
            ..Default::default()
        };
        let cert = Certificate::for_colouring("pointwise-cycles", BTreeMap::new(), &c, &req).unwrap();
        assert_eq!(cert.exit_status(), EXIT_FAIL);
        assert!(cert.connectivity.iter().filter(|v| !v.ok).all(|v| v.witness.is_some()));
    }
}
