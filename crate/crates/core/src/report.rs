//! JSON reports. Exact values (polynomial coefficients, intersection
//! arrays) are strings of integers; numeric eigenvalues are decimal strings
//! with 17 significant digits.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::gain::GainGraph;
use crate::graph::Graph;
use crate::hermitian::{hermitian_spectrum, CMatrix, Spectrum};
use crate::poly::IntPolynomial;
use crate::regularity::{
    drackn_of_graph, drackn_parameters, is_antipodal, is_distance_regular, is_walk_regular,
    srg_parameters, DracknParams, RegularityCertificate, SrgParams,
};
use crate::spectral::{char_poly, characters, classify_two_ev, rep_matrix, NewEigenvalues, TwoEvCertificate};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn format_real(x: f64) -> String {
    // avoid "-0"
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolyJson {
    /// Ascending coefficients.
    pub coefficients: Vec<String>,
    pub text: String,
}

impl From<&IntPolynomial> for PolyJson {
    fn from(p: &IntPolynomial) -> Self {
        PolyJson {
            coefficients: p.coeffs().iter().map(ToString::to_string).collect(),
            text: p.to_string(),
        }
    }
}

/// `[[value, multiplicity], ...]`, descending.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumJson(pub Vec<(String, usize)>);

impl From<&Spectrum> for SpectrumJson {
    fn from(s: &Spectrum) -> Self {
        SpectrumJson(s.pairs().iter().map(|&(x, m)| (format_real(x), m)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputDescriptor {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
}

impl InputDescriptor {
    pub fn for_gain(source: &str, f: &GainGraph) -> Self {
        InputDescriptor {
            source: source.to_string(),
            vertices: f.base().n(),
            edges: f.base().edge_count(),
            group: Some(f.group().to_string()),
        }
    }

    pub fn for_graph(source: &str, g: &Graph) -> Self {
        InputDescriptor {
            source: source.to_string(),
            vertices: g.n(),
            edges: g.edge_count(),
            group: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphSpectra {
    pub vertices: usize,
    pub char_poly: PolyJson,
    pub spectrum: SpectrumJson,
}

impl GraphSpectra {
    pub fn of(g: &Graph, tol: f64) -> Result<Self> {
        let spectrum = hermitian_spectrum(&CMatrix::from_real(&g.adjacency_matrix()), tol)?;
        Ok(GraphSpectra {
            vertices: g.n(),
            char_poly: (&char_poly(g)).into(),
            spectrum: (&spectrum).into(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NewEigenvaluesJson {
    pub theta: String,
    pub tau: String,
    pub mult_theta: usize,
    pub mult_tau: usize,
    pub lambda: i64,
    pub mu: i64,
}

impl From<&NewEigenvalues> for NewEigenvaluesJson {
    fn from(e: &NewEigenvalues) -> Self {
        NewEigenvaluesJson {
            theta: format_real(e.theta),
            tau: format_real(e.tau),
            mult_theta: e.mult_theta,
            mult_tau: e.mult_tau,
            lambda: e.lambda,
            mu: e.mu,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwoEvJson {
    pub is_two_ev: bool,
    pub distinct_new: usize,
    pub cover_connected: bool,
    pub quotient: PolyJson,
    pub new_eigenvalues: Option<NewEigenvaluesJson>,
}

impl From<&TwoEvCertificate> for TwoEvJson {
    fn from(c: &TwoEvCertificate) -> Self {
        TwoEvJson {
            is_two_ev: c.is_two_ev,
            distinct_new: c.distinct_new,
            cover_connected: c.cover_connected,
            quotient: (&c.quotient).into(),
            new_eigenvalues: c.new_eigenvalues.as_ref().map(Into::into),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepSpectrumJson {
    pub character: Vec<usize>,
    pub spectrum: SpectrumJson,
}

/// Full analysis of one gain graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub input: InputDescriptor,
    pub tolerance: f64,
    pub base: GraphSpectra,
    pub cover: GraphSpectra,
    pub two_ev: TwoEvJson,
    pub regularity: RegularityCertificate,
    /// Spectrum of each representation matrix; abelian groups only.
    pub rep_spectra: Vec<RepSpectrumJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Builds a [`Report`]; wall-clock time is included only when `timing`
/// is set, since it is the one non-reproducible field.
pub fn analyze(f: &GainGraph, source: &str, tol: f64, timing: bool) -> Result<Report> {
    let start = Instant::now();
    let cert = classify_two_ev(f)?;
    let cover = f.lift();
    let mut regularity = RegularityCertificate::of_graph(cover.graph())?;
    let n = f.base().n();
    if cert.is_two_ev && f.base().edge_count() == n * (n - 1) / 2 {
        regularity.drackn = drackn_parameters(&cover, f.base(), &cert)?;
    }
    let rep_spectra = if f.group().is_abelian() {
        characters(f.group())
            .into_iter()
            .map(|j| {
                let s = rep_matrix(f, &j)?;
                Ok(RepSpectrumJson {
                    spectrum: (&hermitian_spectrum(&s.matrix, tol)?).into(),
                    character: j,
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    Ok(Report {
        tool_version: TOOL_VERSION.to_string(),
        input: InputDescriptor::for_gain(source, f),
        tolerance: tol,
        base: GraphSpectra::of(f.base(), tol)?,
        cover: GraphSpectra::of(cover.graph(), tol)?,
        two_ev: (&cert).into(),
        regularity,
        rep_spectra,
        timing_ms: timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

/// Checks requested from `certify`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CertifyChecks {
    pub walk: bool,
    pub drg: bool,
    pub srg: bool,
    pub antipodal: bool,
    pub drackn: bool,
}

impl CertifyChecks {
    pub fn all() -> Self {
        CertifyChecks {
            walk: true,
            drg: true,
            srg: true,
            antipodal: true,
            drackn: true,
        }
    }

    pub fn any(&self) -> bool {
        self.walk || self.drg || self.srg || self.antipodal || self.drackn
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertifyReport {
    pub tool_version: String,
    pub input: InputDescriptor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk_regular: Option<bool>,
    /// Intersection array; `null` when not distance-regular.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub drg: Option<Option<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub srg: Option<Option<SrgParams>>,
    /// Class sizes; `null` when not antipodal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipodal: Option<Option<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub drackn: Option<Option<DracknParams>>,
}

impl CertifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the selected checks on a plain graph (for a gain file, pass its
/// lift).
pub fn certify(g: &Graph, input: InputDescriptor, checks: CertifyChecks) -> Result<CertifyReport> {
    let connected = g.is_connected();
    let drg = if checks.drg && connected {
        Some(is_distance_regular(g)?.map(|a| a.to_string()))
    } else {
        checks.drg.then_some(None)
    };
    let srg = if checks.srg && connected {
        Some(srg_parameters(g)?)
    } else {
        checks.srg.then_some(None)
    };
    let antipodal = if checks.antipodal && connected {
        Some(is_antipodal(g)?.map(|c| c.iter().map(Vec::len).collect()))
    } else {
        checks.antipodal.then_some(None)
    };
    let drackn = if checks.drackn {
        Some(drackn_of_graph(g)?)
    } else {
        None
    };
    Ok(CertifyReport {
        tool_version: TOOL_VERSION.to_string(),
        input,
        walk_regular: checks.walk.then(|| is_walk_regular(g)),
        drg,
        srg,
        antipodal,
        drackn,
    })
}
