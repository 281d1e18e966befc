//! Subcommand implementations. Each returns an [`Outcome`]; nothing here
//! touches stdout or the filesystem.

use std::f64::consts::PI;

use anomalab::classical::{
    angular_momentum_for_angle, quantum_cross_section, validity_threshold, ClassicalScatter,
    DEFAULT_TAPER,
};
use anomalab::delta2d::Delta2DSystem;
use anomalab::dipole::{
    critical_coupling, critical_moment, CRITICAL_GAMMA, EA0_IN_DEBYE, EA0_IN_DEBYE_ROUNDED,
    EXPERIMENTAL_P_CRIT_EA0,
};
use anomalab::invsq::{self, RegulatedSystem};
use anomalab::numerov::{oracle_bound_state, oracle_phase_shift, reduce_phase, RadialGrid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::args::{
    BoundStatesArgs, ClassicalArgs, Command, CriticalDipoleArgs, CrossSectionArgs, FlowArgs,
    Format, OracleArgs, PhaseShiftArgs, Regime, Suite,
};
use crate::report::{Metadata, RunReport};
use crate::svg::{line_plot, Axis};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

/// Default tolerances of the oracle suites.
pub const REPULSIVE_TOLERANCE: f64 = 1e-3;
pub const BOUND_TOLERANCE: f64 = 1e-3;
pub const FLOW_TOLERANCE: f64 = 0.02;

/// Hard-wall cutoff for the non-anomalous comparisons; the wall error
/// scales as (ka)^{2ν} and is invisible at this depth.
const REPULSIVE_WALL: f64 = 1e-30;
const FLOW_CUTOFFS: [f64; 4] = [1e-6, 1e-5, 1e-4, 1e-3];
const BOUND_XI: [f64; 3] = [0.1, 0.5, 1.0];

/// A finished command.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    /// False only when an oracle suite misses its tolerance.
    pub passed: bool,
    pub default_format: Format,
    plot: (&'static str, &'static str, &'static str),
}

impl Outcome {
    fn table(report: RunReport, plot: (&'static str, &'static str, &'static str)) -> Self {
        Self {
            report,
            passed: true,
            default_format: Format::Csv,
            plot,
        }
    }

    /// Plot of the main column, read back from the finished table.
    pub fn svg(&self) -> String {
        let (title, x, y) = self.plot;
        let xs = self.report.column(x).expect("plot column");
        let ys = self.report.column(y).expect("plot column");
        line_plot(title, x, y, &xs, &ys, Axis::auto(&xs), Axis::auto(&ys))
    }
}

pub fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::PhaseShift(a) => phase_shift(a),
        Command::CrossSection(a) => cross_section(a),
        Command::BoundStates(a) => bound_states(a),
        Command::Flow(a) => flow(a),
        Command::CriticalDipole(a) => critical_dipole(a),
        Command::Classical(a) => classical(a),
        Command::OracleCompare(a) => oracle_compare(a),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// `steps` points from min to max, evenly spaced in ln; endpoints exact.
pub fn log_space(name: &str, min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(min.is_finite() && max.is_finite() && min > 0.0 && max >= min) {
        return Err(usage(format!(
            "--{name}-min/--{name}-max need 0 < min <= max"
        )));
    }
    spaced(name, steps, |t| min * (max / min).powf(t), max)
}

/// `steps` points from min to max, evenly spaced; endpoints exact.
pub fn lin_space(name: &str, min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(min.is_finite() && max.is_finite() && max >= min) {
        return Err(usage(format!("--{name}-min/--{name}-max need min <= max")));
    }
    spaced(name, steps, |t| min + (max - min) * t, max)
}

fn spaced(name: &str, steps: usize, at: impl Fn(f64) -> f64, max: f64) -> Result<Vec<f64>> {
    match steps {
        0 => Err(usage(format!("--{name}-steps must be >= 1"))),
        1 => Ok(vec![at(0.0)]),
        _ => Ok((0..steps)
            .map(|i| {
                if i + 1 == steps {
                    max
                } else {
                    at(i as f64 / (steps - 1) as f64)
                }
            })
            .collect()),
    }
}

fn par_eval<T: Sync, R: Send>(
    items: &[T],
    f: impl Fn(&T) -> anomalab::Result<R> + Sync + Send,
) -> Result<Vec<R>> {
    Ok(items
        .par_iter()
        .map(f)
        .collect::<anomalab::Result<Vec<R>>>()?)
}

/// Log grid from the wall to 60 wavelengths, k·Δr ≤ 0.05 at the far end.
pub fn scattering_grid(a: f64, k: f64) -> anomalab::Result<RadialGrid> {
    let r_max = 60.0 / k;
    let steps = ((r_max / a).ln() * 60.0 / 0.05).ceil() as usize;
    RadialGrid::logarithmic(a, r_max, steps)
}

/// Log grid from the wall to 100/μ with 800 steps per e-fold.
pub fn bound_grid(a: f64, mu: f64) -> anomalab::Result<RadialGrid> {
    let r_max = 100.0 / mu;
    let steps = ((r_max / a).ln() * 800.0).ceil() as usize;
    RadialGrid::logarithmic(a, r_max, steps)
}

pub fn phase_shift(args: &PhaseShiftArgs) -> Result<Outcome> {
    let ks = log_space("k", args.k.k_min, args.k.k_max, args.k.k_steps)?;
    let (g, l) = (args.g, args.l);
    let d = invsq::discriminant(l, g);
    let anomalous = invsq::is_anomalous(l, g);
    let deltas = if !anomalous {
        vec![invsq::repulsive_phase_shift(l, g)?; ks.len()]
    } else if l > 0 {
        return Err(usage(format!(
            "channel l = {l} is anomalous (D = {d} < 0); only the anomalous s-wave is solved"
        )));
    } else {
        let mu = args
            .mu
            .ok_or_else(|| usage(format!("anomalous s-wave (D_0 = {d} < 0) needs --mu")))?;
        let sys = RegulatedSystem::new(g, mu)?;
        par_eval(&ks, |&k| sys.swave_phase_shift(k))?
    };
    let mut report = RunReport::new(
        Metadata::new("phase-shift", args.mu),
        json!({"g": g, "l": l, "mu": args.mu, "k_min": args.k.k_min, "k_max": args.k.k_max, "k_steps": args.k.k_steps}),
        vec!["k", "delta_rad", "channel", "anomalous"],
    );
    for (&k, &delta) in ks.iter().zip(&deltas) {
        report.push_row(vec![k.into(), delta.into(), l.into(), anomalous.into()]);
    }
    report.set_summary("discriminant", d);
    Ok(Outcome::table(report, ("phase shift", "k", "delta_rad")))
}

fn reject_flags(regime: &str, flags: &[(&str, bool)]) -> Result<()> {
    match flags.iter().find(|(_, present)| *present) {
        Some((name, _)) => Err(usage(format!(
            "--{name} does not apply to --regime {regime}"
        ))),
        None => Ok(()),
    }
}

fn required(value: Option<f64>, name: &str, regime: &str) -> Result<f64> {
    value.ok_or_else(|| usage(format!("--regime {regime} needs --{name}")))
}

pub fn cross_section(args: &CrossSectionArgs) -> Result<Outcome> {
    let mut parameters = json!({
        "regime": format!("{:?}", args.regime).to_lowercase(),
        "kappa": args.kappa, "g": args.g, "mu": args.mu, "k": args.k,
        "energy": args.energy, "l_max": args.l_max, "taper": args.taper,
    });
    match args.regime {
        Regime::Delta2d => {
            reject_flags(
                "delta2d",
                &[
                    ("g", args.g.is_some()),
                    ("mu", args.mu.is_some()),
                    ("k", args.k.is_some()),
                    ("energy", args.energy.is_some()),
                    ("l-max", args.l_max.is_some()),
                    ("taper", args.taper.is_some()),
                ],
            )?;
            let sys = Delta2DSystem::new(required(args.kappa, "kappa", "delta2d")?)?;
            let r = &args.k_range;
            let ks = log_space("k", r.k_min, r.k_max, r.k_steps)?;
            parameters["k_min"] = json!(r.k_min);
            parameters["k_max"] = json!(r.k_max);
            parameters["k_steps"] = json!(r.k_steps);
            let mut report = RunReport::new(
                Metadata::new("cross-section", None),
                parameters,
                vec!["k", "dsigma", "delta_rad"],
            );
            for &k in &ks {
                report.push_row(vec![
                    k.into(),
                    sys.cross_section(k)?.into(),
                    sys.phase_shift(k)?.into(),
                ]);
            }
            report.set_summary("binding_energy", sys.binding_energy());
            Ok(Outcome::table(
                report,
                ("2D delta cross section", "k", "dsigma"),
            ))
        }
        Regime::Invsq => {
            reject_flags(
                "invsq",
                &[
                    ("kappa", args.kappa.is_some()),
                    ("energy", args.energy.is_some()),
                    ("taper", args.taper.is_some()),
                ],
            )?;
            let g = required(args.g, "g", "invsq")?;
            let mu = required(args.mu, "mu", "invsq")?;
            let k = required(args.k, "k", "invsq")?;
            let sys = RegulatedSystem::new(g, mu)?;
            let thetas = theta_grid(&args.theta, &mut parameters)?;
            let sums = par_eval(&thetas, |&t| sys.scattering_amplitude(k, t, args.l_max))?;
            let mut report = RunReport::new(
                Metadata::new("cross-section", Some(mu)),
                parameters,
                vec![
                    "theta",
                    "dsigma",
                    "l_max",
                    "tail_bound",
                    "slowly_convergent",
                ],
            );
            for (&t, s) in thetas.iter().zip(&sums) {
                report.push_row(vec![
                    t.into(),
                    s.value.norm_sqr().into(),
                    s.l_max.into(),
                    s.tail_bound.into(),
                    s.slowly_convergent.into(),
                ]);
            }
            report.set_summary("xi", sys.xi());
            report.set_summary("swave_phase_shift", sys.swave_phase_shift(k)?);
            Ok(Outcome::table(
                report,
                ("1/r^2 cross section", "theta", "dsigma"),
            ))
        }
        Regime::Classical => {
            reject_flags(
                "classical",
                &[
                    ("kappa", args.kappa.is_some()),
                    ("mu", args.mu.is_some()),
                    ("k", args.k.is_some()),
                ],
            )?;
            let g = required(args.g, "g", "classical")?;
            let energy = args.energy.unwrap_or(1.0);
            let l_max = args.l_max.unwrap_or(4000);
            let taper = args.taper.unwrap_or(DEFAULT_TAPER);
            parameters["energy"] = json!(energy);
            parameters["l_max"] = json!(l_max);
            parameters["taper"] = json!(taper);
            let sc = ClassicalScatter::new(g, energy)?;
            let thetas = theta_grid(&args.theta, &mut parameters)?;
            let k = energy.sqrt();
            let quantum = par_eval(&thetas, |&t| quantum_cross_section(g, k, t, l_max, taper))?;
            let mut report = RunReport::new(
                Metadata::new("cross-section", None),
                parameters,
                vec![
                    "theta",
                    "dsigma",
                    "dsigma_quantum",
                    "ratio",
                    "validity_threshold",
                ],
            );
            for (&t, &q) in thetas.iter().zip(&quantum) {
                let c = sc.cross_section(t)?;
                report.push_row(vec![
                    t.into(),
                    c.into(),
                    q.into(),
                    (q / c).into(),
                    validity_threshold(t)?.into(),
                ]);
            }
            Ok(Outcome::table(
                report,
                ("classical cross section", "theta", "dsigma"),
            ))
        }
    }
}

fn theta_grid(r: &crate::args::ThetaRange, parameters: &mut serde_json::Value) -> Result<Vec<f64>> {
    parameters["theta_min"] = json!(r.theta_min);
    parameters["theta_max"] = json!(r.theta_max);
    parameters["theta_steps"] = json!(r.theta_steps);
    lin_space("theta", r.theta_min, r.theta_max, r.theta_steps)
}

pub fn bound_states(args: &BoundStatesArgs) -> Result<Outcome> {
    if args.levels == 0 {
        return Err(usage("--levels must be >= 1"));
    }
    let xi = invsq::xi(0, args.g)?;
    let ground = invsq::level_energy(args.a, xi, 1)?;
    let mut report = RunReport::new(
        Metadata::new("bound-states", None),
        json!({"g": args.g, "a": args.a, "levels": args.levels}),
        vec![
            "n",
            "energy",
            "momentum",
            "momentum_zero_locator",
            "energy_ratio",
        ],
    );
    for n in 1..=args.levels {
        let e = invsq::level_energy(args.a, xi, n)?;
        report.push_row(vec![
            n.into(),
            e.into(),
            (-e).sqrt().into(),
            invsq::level_momentum(args.a, xi, n)?.into(),
            (e / ground).into(),
        ]);
    }
    report.set_summary("xi", xi);
    report.set_summary("level_ratio", (-2.0 * PI / xi).exp());
    Ok(Outcome::table(
        report,
        ("bound-state tower", "n", "momentum"),
    ))
}

/// |ln(last/first)| per decade of a; `None` for a single cutoff.
fn drift_per_decade(a: &[f64], values: &[f64]) -> Option<f64> {
    let decades = (a[a.len() - 1] / a[0]).log10();
    (decades > 0.0).then(|| (values[values.len() - 1] / values[0]).ln().abs() / decades)
}

pub fn flow(args: &FlowArgs) -> Result<Outcome> {
    let mu = args.mu;
    if !(mu.is_finite() && mu > 0.0) {
        return Err(usage("--mu must be > 0"));
    }
    let cutoffs = log_space("a", args.a_min, args.a_max, args.a_steps)?;
    if let Some(&a) = cutoffs.iter().find(|&&a| !invsq::in_scaling_regime(mu, a)) {
        let detail = invsq::xi_flow(mu, a).map_or("undefined".to_string(), |x| x.to_string());
        return Err(usage(format!(
            "a = {a} is outside the scaling regime (Xi(a) = {detail}, need <= {}); use a finer cutoff",
            invsq::MAX_FLOW_XI
        )));
    }
    let xis = par_eval(&cutoffs, |&a| invsq::xi_flow(mu, a))?;
    let target = -mu * mu;
    let mut columns = vec!["a", "xi", "E_gs_recovered", "drift_fraction"];
    let shot = if args.shoot {
        columns.extend(["mu_shooting", "shooting_drift_fraction"]);
        let jobs: Vec<(f64, f64)> = cutoffs.iter().copied().zip(xis.iter().copied()).collect();
        Some(par_eval(&jobs, |&(a, xi)| {
            oracle_bound_state(-0.25 - xi * xi, &bound_grid(a, mu)?)
        })?)
    } else {
        None
    };
    let mut report = RunReport::new(
        Metadata::new("flow", Some(mu)),
        json!({"mu": mu, "a_min": args.a_min, "a_max": args.a_max, "a_steps": args.a_steps, "shoot": args.shoot}),
        columns,
    );
    let mut energies = Vec::with_capacity(cutoffs.len());
    for (i, (&a, &xi)) in cutoffs.iter().zip(&xis).enumerate() {
        let e = invsq::level_energy(a, xi, 1)?;
        energies.push(e);
        let mut row = vec![
            a.into(),
            xi.into(),
            e.into(),
            (e / target - 1.0).abs().into(),
        ];
        if let Some(s) = &shot {
            row.push(s[i].into());
            row.push((s[i] / mu - 1.0).abs().into());
        }
        report.push_row(row);
    }
    report.set_summary(
        "energy_drift_per_decade",
        drift_per_decade(&cutoffs, &energies),
    );
    if let Some(s) = &shot {
        report.set_summary(
            "shooting_mu_drift_per_decade",
            drift_per_decade(&cutoffs, s),
        );
    }
    Ok(Outcome::table(report, ("coupling flow", "a", "xi")))
}

pub fn critical_dipole(args: &CriticalDipoleArgs) -> Result<Outcome> {
    if args.n_max < 2 {
        return Err(usage("--n-max must be >= 2"));
    }
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(usage("--tol must be > 0"));
    }
    let ns: Vec<u32> = (2..=args.n_max).collect();
    let s = par_eval(&ns, |&n| critical_coupling(n, args.tol))?;
    let result = critical_moment(args.n_max, args.tol)?;
    let mut report = RunReport::new(
        Metadata::new("critical-dipole", None),
        json!({"n_max": args.n_max, "tol": args.tol}),
        vec!["n", "s_star", "p_star_ea0", "change"],
    );
    for (i, (&n, &s_n)) in ns.iter().zip(&s).enumerate() {
        let change = (i > 0).then(|| (s_n - s[i - 1]).abs());
        report.push_row(vec![
            n.into(),
            s_n.into(),
            (0.5 * s_n).into(),
            change.into(),
        ]);
    }
    report.set_summary("s_star", result.s_star);
    report.set_summary("p_star_ea0", result.p_star_ea0);
    report.set_summary("p_star_debye", result.p_star_debye);
    report.set_summary("p_star_debye_rounded", result.p_star_debye_rounded);
    report.set_summary("ea0_in_debye", EA0_IN_DEBYE);
    report.set_summary("ea0_in_debye_rounded", EA0_IN_DEBYE_ROUNDED);
    report.set_summary("experimental_p_crit_ea0", EXPERIMENTAL_P_CRIT_EA0);
    report.set_summary("critical_gamma", CRITICAL_GAMMA);
    report.set_summary("converged", result.converged);
    report.set_summary("n_used", result.n_used);
    let mut outcome = Outcome::table(report, ("critical coupling by truncation", "n", "s_star"));
    outcome.default_format = Format::Json;
    Ok(outcome)
}

pub fn classical(args: &ClassicalArgs) -> Result<Outcome> {
    let sc = ClassicalScatter::new(args.g, args.energy)?;
    let mut parameters = json!({"g": args.g, "energy": args.energy});
    let thetas = theta_grid(&args.theta, &mut parameters)?;
    let mut report = RunReport::new(
        Metadata::new("classical", None),
        parameters,
        vec![
            "theta",
            "angular_momentum",
            "dsigma",
            "validity_threshold",
            "coupling_over_threshold",
        ],
    );
    for &t in &thetas {
        let threshold = validity_threshold(t)?;
        report.push_row(vec![
            t.into(),
            angular_momentum_for_angle(args.g, t)?.into(),
            sc.cross_section(t)?.into(),
            threshold.into(),
            (args.g / threshold).into(),
        ]);
    }
    Ok(Outcome::table(
        report,
        ("classical cross section", "theta", "dsigma"),
    ))
}

pub fn oracle_compare(args: &OracleArgs) -> Result<Outcome> {
    if let Some(t) = args.tolerance {
        if !(t.is_finite() && t > 0.0) {
            return Err(usage("--tolerance must be > 0"));
        }
    }
    match args.suite {
        Suite::Repulsive => repulsive_suite(args),
        Suite::Bound => bound_suite(args),
        Suite::Flow => flow_suite(args),
    }
}

/// Random non-anomalous channels, three momenta each: the Numerov phase
/// must match the closed form and not depend on k.
fn repulsive_suite(args: &OracleArgs) -> Result<Outcome> {
    if args.cases == 0 {
        return Err(usage("--cases must be >= 1"));
    }
    let tolerance = args.tolerance.unwrap_or(REPULSIVE_TOLERANCE);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let jobs: Vec<(usize, f64, u32, f64)> = (0..args.cases)
        .flat_map(|case| {
            let g = rng.gen_range(-0.24..=5.0);
            let l = rng.gen_range(0..=4u32);
            let ks: Vec<f64> = (0..3).map(|_| rng.gen_range(0.3..3.0)).collect();
            ks.into_iter().map(move |k| (case, g, l, k))
        })
        .collect();
    let fits = par_eval(&jobs, |&(_, g, l, k)| {
        oracle_phase_shift(g, l, k, &scattering_grid(REPULSIVE_WALL, k)?)
    })?;
    let mut report = RunReport::new(
        Metadata::new("oracle-compare", None),
        json!({"suite": "repulsive", "seed": args.seed, "cases": args.cases, "tolerance": tolerance, "wall": REPULSIVE_WALL}),
        vec![
            "case",
            "g",
            "l",
            "k",
            "delta_closed",
            "delta_oracle",
            "abs_error",
            "k_spread",
            "fit_residual",
        ],
    );
    let (mut max_error, mut max_spread) = (0.0f64, 0.0f64);
    for (chunk_jobs, chunk_fits) in jobs.chunks(3).zip(fits.chunks(3)) {
        let (case, g, l, _) = chunk_jobs[0];
        let closed = invsq::repulsive_phase_shift(l, g)?;
        let spread = chunk_fits
            .iter()
            .map(|m| reduce_phase(m.delta - chunk_fits[0].delta).abs())
            .fold(0.0, f64::max);
        max_spread = max_spread.max(spread);
        for (&(_, _, _, k), m) in chunk_jobs.iter().zip(chunk_fits) {
            let error = reduce_phase(m.delta - closed).abs();
            max_error = max_error.max(error);
            report.push_row(vec![
                (case as i64).into(),
                g.into(),
                l.into(),
                k.into(),
                closed.into(),
                m.delta.into(),
                error.into(),
                spread.into(),
                m.fit_residual.into(),
            ]);
        }
    }
    let passed = max_error < tolerance && max_spread < tolerance;
    report.set_summary("max_abs_error", max_error);
    report.set_summary("max_k_spread", max_spread);
    report.set_summary("passed", passed);
    let mut outcome = Outcome::table(report, ("phase shift oracle error", "k", "abs_error"));
    outcome.passed = passed;
    Ok(outcome)
}

/// Ground level at μ = 1 for cutoffs placed by the zero locator.
fn bound_suite(args: &OracleArgs) -> Result<Outcome> {
    let tolerance = args.tolerance.unwrap_or(BOUND_TOLERANCE);
    let cutoffs = par_eval(&BOUND_XI, |&xi| invsq::cutoff_for_level(1.0, xi, 1))?;
    let jobs: Vec<(f64, f64)> = BOUND_XI.iter().copied().zip(cutoffs).collect();
    let mus = par_eval(&jobs, |&(xi, a)| {
        oracle_bound_state(-0.25 - xi * xi, &bound_grid(a, 1.0)?)
    })?;
    let mut report = RunReport::new(
        Metadata::new("oracle-compare", Some(1.0)),
        json!({"suite": "bound", "tolerance": tolerance}),
        vec!["xi", "g", "a", "mu_closed", "mu_oracle", "rel_error"],
    );
    let mut max_error = 0.0f64;
    for (&(xi, a), &mu) in jobs.iter().zip(&mus) {
        let error = (mu - 1.0).abs();
        max_error = max_error.max(error);
        report.push_row(vec![
            xi.into(),
            (-0.25 - xi * xi).into(),
            a.into(),
            1.0.into(),
            mu.into(),
            error.into(),
        ]);
    }
    let passed = max_error < tolerance;
    report.set_summary("max_rel_error", max_error);
    report.set_summary("passed", passed);
    let mut outcome = Outcome::table(report, ("shooting vs zero locator", "xi", "mu_oracle"));
    outcome.passed = passed;
    Ok(outcome)
}

/// Shooting μ with Ξ(a) from the scaling law over three decades of a.
fn flow_suite(args: &OracleArgs) -> Result<Outcome> {
    let tolerance = args.tolerance.unwrap_or(FLOW_TOLERANCE);
    let xis = par_eval(&FLOW_CUTOFFS, |&a| invsq::xi_flow(1.0, a))?;
    let jobs: Vec<(f64, f64)> = FLOW_CUTOFFS.iter().copied().zip(xis).collect();
    let mus = par_eval(&jobs, |&(a, xi)| {
        oracle_bound_state(-0.25 - xi * xi, &bound_grid(a, 1.0)?)
    })?;
    let mut report = RunReport::new(
        Metadata::new("oracle-compare", Some(1.0)),
        json!({"suite": "flow", "tolerance": tolerance}),
        vec!["a", "xi", "mu_closed", "mu_oracle", "rel_error"],
    );
    for (&(a, xi), &mu) in jobs.iter().zip(&mus) {
        report.push_row(vec![
            a.into(),
            xi.into(),
            1.0.into(),
            mu.into(),
            (mu - 1.0).abs().into(),
        ]);
    }
    let drift = drift_per_decade(&FLOW_CUTOFFS, &mus).expect("three decades");
    let passed = drift < tolerance;
    report.set_summary("mu_drift_per_decade", drift);
    report.set_summary("passed", passed);
    let mut outcome = Outcome::table(report, ("shooting scale along the flow", "a", "mu_oracle"));
    outcome.passed = passed;
    Ok(outcome)
}
