//! Report documents and deterministic serialization helpers.
//!
//! Data files (reports, CSV grids) carry no timestamps, so identical runs
//! produce byte-identical bytes; run metadata goes in a separate manifest.

/// FNV-1a, used for stable instantiation hashes.
pub struct Fnv(u64);

impl Default for Fnv {
    fn default() -> Self {
        Fnv::new()
    }
}

impl Fnv {
    pub fn new() -> Fnv {
        Fnv(0xcbf29ce484222325)
    }

    pub fn byte(&mut self, b: u8) {
        self.0 ^= b as u64;
        self.0 = self.0.wrapping_mul(0x100000001b3);
    }

    pub fn bits(&mut self, v: u64) {
        for b in v.to_le_bytes() {
            self.byte(b);
        }
    }

    pub fn finish(&self) -> u64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct ResidualSummary {
    pub max_abs: f64,
    pub rms: f64,
    pub argmax_x: f64,
    pub argmax_t: f64,
}

impl ResidualSummary {
    pub fn empty() -> ResidualSummary {
        ResidualSummary {
            max_abs: 0.0,
            rms: 0.0,
            argmax_x: f64::NAN,
            argmax_t: f64::NAN,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct NamedResidual {
    pub name: String,
    pub max_abs: f64,
}

#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    /// Analytic path (theta-level residual), scale-normalized.
    pub analytic: f64,
    /// Finite-difference path (u-level residual) at the base grid.
    pub fd: f64,
    /// Bilinear identity and splitting relations.
    pub identity: f64,
    /// Defining-constraint residuals (self check).
    pub self_check: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            analytic: 1e-9,
            fd: 1e-4,
            identity: 1e-10,
            self_check: 1e-10,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct InstanceReport {
    pub label: String,
    pub entry: String,
    pub instantiation_hash: String,
    pub variant: String,
    pub grid_nx: usize,
    pub grid_nt: usize,
    pub self_check: Vec<NamedResidual>,
    pub residual_theta_level: ResidualSummary,
    pub residual_u_level: ResidualSummary,
    pub bilinear_identity: ResidualSummary,
    pub relation_residuals: Vec<NamedResidual>,
    pub tolerances: Tolerances,
    pub pass: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct EntryReport {
    pub entry: String,
    pub pass: bool,
    pub instances: Vec<InstanceReport>,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct SummaryRow {
    pub entry: String,
    pub instances: usize,
    pub pass: bool,
    pub worst_theta: f64,
    pub worst_u: f64,
    pub worst_bilinear: f64,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct VerifySummary {
    pub rows: Vec<SummaryRow>,
    pub all_pass: bool,
}

impl VerifySummary {
    pub fn from_reports(reports: &[EntryReport]) -> VerifySummary {
        let rows = reports
            .iter()
            .map(|r| SummaryRow {
                entry: r.entry.clone(),
                instances: r.instances.len(),
                pass: r.pass,
                worst_theta: r
                    .instances
                    .iter()
                    .map(|i| i.residual_theta_level.max_abs)
                    .fold(0.0, f64::max),
                worst_u: r
                    .instances
                    .iter()
                    .map(|i| i.residual_u_level.max_abs)
                    .fold(0.0, f64::max),
                worst_bilinear: r
                    .instances
                    .iter()
                    .map(|i| i.bilinear_identity.max_abs)
                    .fold(0.0, f64::max),
            })
            .collect::<Vec<_>>();
        let all_pass = reports.iter().all(|r| r.pass);
        VerifySummary { rows, all_pass }
    }
}

/// Pretty JSON with a trailing newline; serde_json's canonical float
/// rendering keeps re-runs byte-identical.
pub fn to_json_doc<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
