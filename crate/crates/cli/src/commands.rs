//! Subcommand implementations: argument interpretation, library calls, and
//! document assembly.  Exit-code policy: 0 success, 1 usage (handled by the
//! argument parser), 2 domain error, 3 I/O error.

use std::path::Path;

use bloch_geodesic::algebra::{
    bloch_to_state, pauli_decompose, BlochVector, Matrix2, QubitState,
};
use bloch_geodesic::mostafazadeh::MostafazadehPlan;
use bloch_geodesic::{bender, equivalence, mostafazadeh, oracle, Complex64, Error};

use crate::document::{
    self, matrix_doc, vector_doc, BenderDoc, CompareDoc, ComparePointDoc, CompareWorstDoc,
    EquivalenceDoc, ErrorBodyDoc, ErrorDoc, MostafazadehDoc, PauliDoc, PlanDoc, StateDoc,
    ThresholdsDoc, TraceSummaryDoc,
};
use crate::{CompareArgs, Method, PlanArgs, TraceArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_IO: i32 = 3;

const HAMILTONIAN_THRESHOLD: f64 = 1e-10;
const TIME_THRESHOLD: f64 = 1e-12;
const PHASE_THRESHOLD: f64 = 1e-10;

/// Prints the machine-readable error document to stderr and returns the
/// domain exit code.
fn domain_error(err: &Error) -> i32 {
    let doc = ErrorDoc {
        error: ErrorBodyDoc { code: err.code(), message: err.to_string() },
    };
    eprint!("{}", document::render(&doc));
    EXIT_DOMAIN
}

fn io_error(err: &std::io::Error, path: &Path) -> i32 {
    let doc = ErrorDoc {
        error: ErrorBodyDoc {
            code: "IO_ERROR",
            message: format!("cannot write {}: {err}", path.display()),
        },
    };
    eprint!("{}", document::render(&doc));
    EXIT_IO
}

// -------------------------------------------------------------- parsing

/// Parses exactly `n` comma-separated finite floats.
fn parse_floats(text: &str, n: usize, what: &str) -> Result<Vec<f64>, Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{what} needs {n} comma-separated numbers, got {}",
            parts.len()
        )));
    }
    let mut values = Vec::with_capacity(n);
    for part in parts {
        let v: f64 = part.parse().map_err(|_| {
            Error::InvalidArgument(format!("{what}: cannot parse `{part}` as a number"))
        })?;
        if !v.is_finite() {
            return Err(Error::InvalidArgument(format!("{what}: values must be finite")));
        }
        values.push(v);
    }
    Ok(values)
}

/// Builds a state from either a `θ,φ` angle pair (canonical representative)
/// or a `re,im,re,im` amplitude quadruple (representative kept as given, up
/// to normalization).
fn parse_state(
    angles: &Option<String>,
    amplitudes: &Option<String>,
    degrees: bool,
    what: &str,
) -> Result<QubitState, Error> {
    if let Some(text) = angles {
        let v = parse_floats(text, 2, what)?;
        let (theta, phi) = if degrees {
            (v[0].to_radians(), v[1].to_radians())
        } else {
            (v[0], v[1])
        };
        let direction = BlochVector::new(
            theta.sin() * phi.cos(),
            theta.sin() * phi.sin(),
            theta.cos(),
        );
        bloch_to_state(&direction)
    } else {
        let text = amplitudes
            .as_ref()
            .expect("the argument parser requires one representation");
        let v = parse_floats(text, 4, what)?;
        QubitState::new(Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3]))
    }
}

/// Parses a `lo,hi,n` grid specification into its value list.
fn parse_grid(text: &str, what: &str) -> Result<Vec<f64>, Error> {
    let parts = parse_floats(text, 3, what)?;
    let (lo, hi, n_raw) = (parts[0], parts[1], parts[2]);
    if n_raw.fract() != 0.0 || !(1.0..=100_000.0).contains(&n_raw) {
        return Err(Error::InvalidArgument(format!(
            "{what}: point count must be an integer in [1, 100000], got {n_raw}"
        )));
    }
    let n = n_raw as usize;
    if n == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect())
}

fn validate_hbar(hbar: f64) -> Result<(), Error> {
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "--hbar must be positive and finite, got {hbar}"
        )));
    }
    Ok(())
}

// ------------------------------------------------------- shared builders

fn mostafazadeh_doc(plan: &MostafazadehPlan, hbar: f64) -> MostafazadehDoc {
    MostafazadehDoc {
        hamiltonian: matrix_doc(&plan.hamiltonian.matrix()),
        pauli: PauliDoc::new(&plan.hamiltonian),
        field: vector_doc(&plan.field),
        axis: vector_doc(&plan.axis),
        theta: plan.theta,
        energy: plan.energy,
        tau_min: hbar * plan.tau_min,
    }
}

/// The unique determinant-one unitary with `R|0⟩ = |A⟩` and second column
/// orthogonal to the first.
fn rotation_from_north_to(a: &QubitState) -> Matrix2 {
    Matrix2::new(a.c0, -a.c1.conj(), a.c1, a.c0.conj())
}

/// A fixed-gap plan posed in the frame where the initial state sits at the
/// north pole, together with its expression in the original (lab) frame.
struct BenderOutcome {
    doc: BenderDoc,
    lab_hamiltonian: Matrix2,
    lab_axis: BlochVector,
    /// Unscaled (ħ = 1) minimal time.
    tau_min: f64,
    /// The target as seen from the north-pole frame.
    north_target: QubitState,
    /// Sum of the Hamiltonian's diagonal entries, frame-invariant.
    trace_sum: f64,
}

fn build_bender(
    initial: &QubitState,
    target: &QubitState,
    omega: f64,
    rotate_frame: bool,
    hbar: f64,
) -> Result<BenderOutcome, Error> {
    let north = QubitState::basis_zero();
    let (frame, north_target) = if rotate_frame {
        let r = rotation_from_north_to(initial);
        let (c0, c1) = r.adjoint().apply(target.c0, target.c1);
        (Some(r), QubitState::new(c0, c1)?)
    } else {
        if initial.fidelity(&north) < 1.0 - 1e-9 {
            return Err(Error::InvalidArgument(
                "the fixed-gap construction starts at |0⟩; pass --rotate-frame to \
                 conjugate it onto another initial state"
                    .into(),
            ));
        }
        (None, *target)
    };

    let plan = bender::optimal_plan(&north_target, omega)?;
    let trace_sum = 2.0 * plan.hamiltonian.m00.re;
    let (lab_hamiltonian, lab_axis) = match &frame {
        Some(r) => {
            let h = *r * plan.hamiltonian * r.adjoint();
            let axis = pauli_decompose(&h)?.eps.normalized()?;
            (h, axis)
        }
        None => (plan.hamiltonian, plan.axis),
    };

    let doc = BenderDoc {
        hamiltonian: matrix_doc(&lab_hamiltonian),
        pauli: PauliDoc::new(&pauli_decompose(&lab_hamiltonian)?),
        omega: plan.omega,
        theta_param: plan.theta_param,
        axis: vector_doc(&lab_axis),
        tau_min: hbar * plan.tau_min,
        rotated_frame: frame.is_some(),
    };
    Ok(BenderOutcome {
        doc,
        lab_hamiltonian,
        lab_axis,
        tau_min: plan.tau_min,
        north_target,
        trace_sum,
    })
}

// ------------------------------------------------------------------ plan

pub fn run_plan(args: &PlanArgs) -> i32 {
    match plan_document(args) {
        Ok(doc) => {
            print!("{}", document::render(&doc));
            EXIT_OK
        }
        Err(e) => domain_error(&e),
    }
}

fn plan_document(args: &PlanArgs) -> Result<PlanDoc, Error> {
    validate_hbar(args.hbar)?;
    if args.rotate_frame && args.method == Method::Mostafazadeh {
        return Err(Error::InvalidArgument(
            "--rotate-frame only applies to the fixed-gap construction \
             (--method bender or both)"
                .into(),
        ));
    }
    let initial = parse_state(&args.from, &args.from_amplitudes, args.degrees, "--from")?;
    let final_state = parse_state(&args.to, &args.to_amplitudes, args.degrees, "--to")?;

    let mut doc = PlanDoc {
        command: "plan",
        method: args.method.name(),
        hbar: args.hbar,
        energy_budget: args.energy,
        initial: StateDoc::new(&initial),
        final_state: StateDoc::new(&final_state),
        mostafazadeh: None,
        bender: None,
        equivalence: None,
    };

    match args.method {
        Method::Mostafazadeh => {
            let plan = mostafazadeh::optimal_plan_between(&initial, &final_state, args.energy)?;
            doc.mostafazadeh = Some(mostafazadeh_doc(&plan, args.hbar));
        }
        Method::Bender => {
            let outcome = build_bender(
                &initial,
                &final_state,
                args.energy,
                args.rotate_frame,
                args.hbar,
            )?;
            doc.bender = Some(outcome.doc);
        }
        Method::Both => {
            // The budget is the gap ω; the maximal-uncertainty side runs at
            // the matching half-gap E = ω/2.
            let omega = args.energy;
            let m_plan =
                mostafazadeh::optimal_plan_between(&initial, &final_state, omega / 2.0)?;
            let outcome =
                build_bender(&initial, &final_state, omega, args.rotate_frame, args.hbar)?;
            let report = equivalence::verify_hamiltonian_equality(
                &outcome.north_target,
                omega,
                outcome.trace_sum,
            )?;
            doc.mostafazadeh = Some(mostafazadeh_doc(&m_plan, args.hbar));
            doc.bender = Some(outcome.doc);
            doc.equivalence = Some(EquivalenceDoc {
                trace_sum: outcome.trace_sum,
                hamiltonian_residual: report.hamiltonian_residual,
                time_residual: args.hbar * report.time_residual,
                phase_residual: report.phase_residual,
            });
        }
    }
    Ok(doc)
}

// ----------------------------------------------------------------- trace

pub fn run_trace(args: &TraceArgs) -> i32 {
    let (csv, mut summary) = match trace_build(args) {
        Ok(parts) => parts,
        Err(e) => return domain_error(&e),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, csv) {
                return io_error(&e, path);
            }
            summary.csv_path = Some(path.display().to_string());
            print!("{}", document::render(&summary));
        }
        None => {
            // Keep stdout pure CSV; the summary document goes to stderr.
            print!("{csv}");
            eprint!("{}", document::render(&summary));
        }
    }
    EXIT_OK
}

fn trace_build(args: &TraceArgs) -> Result<(String, TraceSummaryDoc), Error> {
    validate_hbar(args.hbar)?;
    if args.method == Method::Both {
        return Err(Error::InvalidArgument(
            "trace integrates one Hamiltonian; pass --method mostafazadeh or bender".into(),
        ));
    }
    if args.rotate_frame && args.method == Method::Mostafazadeh {
        return Err(Error::InvalidArgument(
            "--rotate-frame only applies to the fixed-gap construction \
             (--method bender or both)"
                .into(),
        ));
    }
    let initial = parse_state(&args.from, &args.from_amplitudes, args.degrees, "--from")?;
    let final_state = parse_state(&args.to, &args.to_amplitudes, args.degrees, "--to")?;

    let (hamiltonian, axis, tau_min) = match args.method {
        Method::Mostafazadeh => {
            let plan = mostafazadeh::optimal_plan_between(&initial, &final_state, args.energy)?;
            (plan.hamiltonian.matrix(), plan.axis, plan.tau_min)
        }
        Method::Bender => {
            let outcome = build_bender(
                &initial,
                &final_state,
                args.energy,
                args.rotate_frame,
                args.hbar,
            )?;
            (outcome.lab_hamiltonian, outcome.lab_axis, outcome.tau_min)
        }
        Method::Both => unreachable!("rejected above"),
    };

    let steps = args.steps as usize;
    let traj = oracle::integrate_schrodinger(&hamiltonian, &initial, tau_min, steps)?;

    let mut csv = String::from("t,re_c0,im_c0,re_c1,im_c1,x,y,z,fidelity_to_target\n");
    let rows = args.samples as usize;
    for j in 0..rows {
        let index =
            ((j as f64) * (steps as f64) / ((rows - 1) as f64)).round() as usize;
        let state = &traj.states[index];
        let point = &traj.bloch_points[index];
        let fields = [
            args.hbar * traj.times[index],
            state.c0.re,
            state.c0.im,
            state.c1.re,
            state.c1.im,
            point.x,
            point.y,
            point.z,
            state.fidelity(&final_state),
        ];
        let row: Vec<String> = fields.iter().map(|&v| document::csv_number(v)).collect();
        csv.push_str(&row.join(","));
        csv.push('\n');
    }

    let eta = oracle::geodesic_efficiency(&initial, &traj)?;
    let residual = oracle::great_circle_residual(&traj, &axis)?;
    let arrival =
        oracle::first_arrival(&hamiltonian, &initial, &final_state, 1.5 * tau_min, steps)?;

    let summary = TraceSummaryDoc {
        command: "trace",
        method: args.method.name(),
        hbar: args.hbar,
        samples: args.samples,
        steps: args.steps,
        tau_min: args.hbar * tau_min,
        path_length: traj.path_length,
        fs_length: traj.fs_length,
        geodesic_efficiency: eta,
        great_circle_residual: residual,
        measured_arrival_time: arrival.map(|a| args.hbar * a.time),
        arrival_infidelity: arrival.map(|a| a.infidelity),
        max_norm_drift: traj.max_norm_drift,
        csv_path: None,
    };
    Ok((csv, summary))
}

// --------------------------------------------------------------- compare

pub fn run_compare(args: &CompareArgs) -> i32 {
    match compare_document(args) {
        Ok(doc) => {
            print!("{}", document::render(&doc));
            if doc.all_within_contract {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            }
        }
        Err(e) => domain_error(&e),
    }
}

fn compare_document(args: &CompareArgs) -> Result<CompareDoc, Error> {
    let b_values = parse_grid(&args.b_grid, "--b-grid")?;
    let omega_values = parse_grid(&args.omega_grid, "--omega-grid")?;
    if b_values.iter().any(|&b| !(0.0..=1.0).contains(&b)) {
        return Err(Error::InvalidArgument(
            "--b-grid values must lie in [0, 1]".into(),
        ));
    }
    if omega_values.iter().any(|&w| w <= 0.0) {
        return Err(Error::InvalidArgument(
            "--omega-grid values must be positive".into(),
        ));
    }

    // Deterministic nonzero component phases, so the trace offset of the
    // fixed-gap construction is exercised at every grid point.
    let arg_a = std::f64::consts::FRAC_PI_4;
    let arg_b = std::f64::consts::FRAC_PI_3;

    let mut points = Vec::with_capacity(b_values.len() * omega_values.len());
    let mut worst: Option<CompareWorstDoc> = None;
    let mut all_within = true;
    let mut checked = 0usize;
    let mut skipped = 0usize;

    for &b_mod in &b_values {
        for &omega in &omega_values {
            if b_mod <= 1e-9 || b_mod >= 1.0 - 1e-9 {
                skipped += 1;
                points.push(ComparePointDoc {
                    b_mod,
                    omega,
                    status: "SKIPPED_DEGENERATE",
                    trace_sum: None,
                    hamiltonian_residual: None,
                    time_residual: None,
                    phase_residual: None,
                });
                continue;
            }
            let a_mod = (1.0 - b_mod * b_mod).max(0.0).sqrt();
            let target = QubitState::new(
                Complex64::from_polar(a_mod, arg_a),
                Complex64::from_polar(b_mod, arg_b),
            )?;
            let plan = bender::optimal_plan(&target, omega)?;
            let trace_sum = 2.0 * plan.hamiltonian.m00.re;
            let report =
                equivalence::verify_hamiltonian_equality(&target, omega, trace_sum)?;

            checked += 1;
            all_within &= report.hamiltonian_residual < HAMILTONIAN_THRESHOLD
                && report.time_residual < TIME_THRESHOLD
                && report.phase_residual < PHASE_THRESHOLD;
            let w = worst.get_or_insert(CompareWorstDoc {
                hamiltonian_residual: 0.0,
                time_residual: 0.0,
                phase_residual: 0.0,
            });
            w.hamiltonian_residual = w.hamiltonian_residual.max(report.hamiltonian_residual);
            w.time_residual = w.time_residual.max(report.time_residual);
            w.phase_residual = w.phase_residual.max(report.phase_residual);

            points.push(ComparePointDoc {
                b_mod,
                omega,
                status: "OK",
                trace_sum: Some(trace_sum),
                hamiltonian_residual: Some(report.hamiltonian_residual),
                time_residual: Some(report.time_residual),
                phase_residual: Some(report.phase_residual),
            });
        }
    }

    Ok(CompareDoc {
        command: "compare",
        b_values,
        omega_values,
        thresholds: ThresholdsDoc {
            hamiltonian_residual: HAMILTONIAN_THRESHOLD,
            time_residual: TIME_THRESHOLD,
            phase_residual: PHASE_THRESHOLD,
        },
        points,
        checked,
        skipped,
        worst,
        all_within_contract: all_within,
    })
}
