//! Output documents: serde shapes with a fixed field order, rendered as
//! pretty JSON with shortest-round-trip floats and negative zeros scrubbed.

use bloch_geodesic::algebra::{BlochVector, Matrix2, PauliOperator, QubitState};
use serde::Serialize;
use serde_json::Value;

/// `[re, im]` pair.
pub type ComplexDoc = [f64; 2];
/// Row-major 2×2 complex matrix.
pub type MatrixDoc = [[ComplexDoc; 2]; 2];

pub fn complex_doc(z: bloch_geodesic::Complex64) -> ComplexDoc {
    [z.re, z.im]
}

pub fn matrix_doc(m: &Matrix2) -> MatrixDoc {
    [
        [complex_doc(m.m00), complex_doc(m.m01)],
        [complex_doc(m.m10), complex_doc(m.m11)],
    ]
}

pub fn vector_doc(v: &BlochVector) -> [f64; 3] {
    [v.x, v.y, v.z]
}

#[derive(Serialize)]
pub struct StateDoc {
    pub amplitudes: [ComplexDoc; 2],
    pub bloch: [f64; 3],
}

impl StateDoc {
    pub fn new(psi: &QubitState) -> StateDoc {
        StateDoc {
            amplitudes: [complex_doc(psi.c0), complex_doc(psi.c1)],
            bloch: vector_doc(&bloch_geodesic::algebra::state_to_bloch(psi)),
        }
    }
}

#[derive(Serialize)]
pub struct PauliDoc {
    pub eps0: f64,
    pub eps: [f64; 3],
}

impl PauliDoc {
    pub fn new(p: &PauliOperator) -> PauliDoc {
        PauliDoc { eps0: p.eps0, eps: vector_doc(&p.eps) }
    }
}

#[derive(Serialize)]
pub struct MostafazadehDoc {
    pub hamiltonian: MatrixDoc,
    pub pauli: PauliDoc,
    pub field: [f64; 3],
    pub axis: [f64; 3],
    pub theta: f64,
    pub energy: f64,
    pub tau_min: f64,
}

#[derive(Serialize)]
pub struct BenderDoc {
    pub hamiltonian: MatrixDoc,
    pub pauli: PauliDoc,
    pub omega: f64,
    pub theta_param: f64,
    pub axis: [f64; 3],
    pub tau_min: f64,
    pub rotated_frame: bool,
}

#[derive(Serialize)]
pub struct EquivalenceDoc {
    pub trace_sum: f64,
    pub hamiltonian_residual: f64,
    pub time_residual: f64,
    pub phase_residual: f64,
}

#[derive(Serialize)]
pub struct PlanDoc {
    pub command: &'static str,
    pub method: &'static str,
    pub hbar: f64,
    pub energy_budget: f64,
    pub initial: StateDoc,
    #[serde(rename = "final")]
    pub final_state: StateDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mostafazadeh: Option<MostafazadehDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bender: Option<BenderDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceDoc>,
}

#[derive(Serialize)]
pub struct TraceSummaryDoc {
    pub command: &'static str,
    pub method: &'static str,
    pub hbar: f64,
    pub samples: u32,
    pub steps: u32,
    pub tau_min: f64,
    pub path_length: f64,
    pub fs_length: f64,
    pub geodesic_efficiency: f64,
    pub great_circle_residual: f64,
    pub measured_arrival_time: Option<f64>,
    pub arrival_infidelity: Option<f64>,
    pub max_norm_drift: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv_path: Option<String>,
}

#[derive(Serialize)]
pub struct ThresholdsDoc {
    pub hamiltonian_residual: f64,
    pub time_residual: f64,
    pub phase_residual: f64,
}

#[derive(Serialize)]
pub struct ComparePointDoc {
    pub b_mod: f64,
    pub omega: f64,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_sum: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase_residual: Option<f64>,
}

#[derive(Serialize)]
pub struct CompareWorstDoc {
    pub hamiltonian_residual: f64,
    pub time_residual: f64,
    pub phase_residual: f64,
}

#[derive(Serialize)]
pub struct CompareDoc {
    pub command: &'static str,
    pub b_values: Vec<f64>,
    pub omega_values: Vec<f64>,
    pub thresholds: ThresholdsDoc,
    pub points: Vec<ComparePointDoc>,
    pub checked: usize,
    pub skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst: Option<CompareWorstDoc>,
    pub all_within_contract: bool,
}

#[derive(Serialize)]
pub struct ErrorBodyDoc {
    pub code: &'static str,
    pub message: String,
}

#[derive(Serialize)]
pub struct ErrorDoc {
    pub error: ErrorBodyDoc,
}

/// Replaces every `-0.0` in the tree with `0.0`, so the rendered document
/// never distinguishes signed zeros.
fn scrub_negative_zero(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if f == 0.0 && f.is_sign_negative() {
                    *value = Value::from(0.0);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(scrub_negative_zero),
        Value::Object(map) => map.values_mut().for_each(scrub_negative_zero),
        _ => {}
    }
}

/// Renders a document as pretty JSON with a trailing newline.
pub fn render<T: Serialize>(doc: &T) -> String {
    let mut value = serde_json::to_value(doc).expect("documents contain only finite numbers");
    scrub_negative_zero(&mut value);
    let mut text = serde_json::to_string_pretty(&value).expect("value renders");
    text.push('\n');
    text
}

/// Shortest-round-trip rendering of one CSV number, with `-0` scrubbed.
pub fn csv_number(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v}")
}
