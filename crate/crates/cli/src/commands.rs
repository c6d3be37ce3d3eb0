use nalgebra::{Matrix4, Vector3, Vector4};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relkin::boost_link::{
    link_boost, link_gamma, link_velocity, min_symmetric_gamma, tilt_scan, StateTriple,
    TiltParametrization,
};
use relkin::galilei::{decompose, galilei_boost, polar_probe, project, GalileiMatrix, GalileiState};
use relkin::linalg::max_abs;
use relkin::loops::{check_loop_axioms, Axiom};
use relkin::lorentz::{boost, embed_rotation, polar_decompose, polar_decompose_sqrt, validate_blocks};
use relkin::sample::VelocitySampler;
use relkin::velocity::{
    einstein_add, gamma_compose, max_thomas_angle, right_angle_threshold, scan_max_thomas_angle,
    thomas_rotation,
};
use relkin::{FourVector, LorentzMatrix, StateOfMotion, Velocity3};

use crate::error::CliError;
use crate::record::OutputRecord;

/// Result of a command: a record, an optional data series, and whether the
/// internal consistency checks passed.
pub struct Report {
    pub record: OutputRecord,
    pub series: Option<Series>,
    pub consistent: bool,
}

impl Report {
    fn record(record: OutputRecord) -> Self {
        Self {
            record,
            series: None,
            consistent: true,
        }
    }
}

pub struct Series {
    pub header: [&'static str; 2],
    pub rows: Vec<(f64, f64)>,
}

/// Turns `-0.0` into `0.0` so printed angles read naturally.
fn unsigned_zero(x: f64) -> f64 {
    x + 0.0
}

fn velocity(v: &[f64]) -> Result<Velocity3, CliError> {
    Ok(Velocity3::new(v[0], v[1], v[2])?)
}

fn state(v: &[f64]) -> Result<StateOfMotion, CliError> {
    Ok(StateOfMotion::new(FourVector::try_new(v[0], v[1], v[2], v[3])?)?)
}

fn matrix(entries: &[f64]) -> Matrix4<f64> {
    Matrix4::from_row_slice(entries)
}

pub fn add(values: &[f64]) -> Result<Report, CliError> {
    let (b1, b2) = (velocity(&values[..3])?, velocity(&values[3..])?);
    let mut r = OutputRecord::new("add");
    r.input("beta1", b1.vec()).input("beta2", b2.vec());

    let sum = einstein_add(&b1, &b2)?;
    let reverse = einstein_add(&b2, &b1)?;
    let t = thomas_rotation(&b1, &b2);
    let g = gamma_compose(&b1, &b2);
    r.output("sum", sum.vec())
        .output("reverse_sum", reverse.vec())
        .output("gamma", g)
        .angle("thomas_angle", unsigned_zero(t.angle))
        .output("cos_thomas_angle", t.angle.cos())
        .output("thomas_axis", &t.axis.unwrap_or_else(Vector3::zeros))
        .output("thomas_rotation", t.rotation.matrix());

    let mocanu = {
        let rhs = einstein_add(&-b2, &-b1)?.rotated(&t.rotation);
        (-*sum.vec() - rhs.vec()).amax()
    };
    let gyrocommutative = (sum.vec() - reverse.rotated(&t.rotation).vec()).amax();
    let polar = polar_decompose(&(boost(&b1) * boost(&b2)))?;
    r.residual("mocanu", mocanu)
        .residual("gyrocommutative", gyrocommutative)
        .residual("gamma", (sum.gamma() - g).abs() / g)
        .residual("polar_velocity", (polar.beta.vec() - sum.vec()).amax())
        .residual(
            "polar_rotation",
            max_abs(&(polar.rotation.matrix() - t.rotation.matrix())),
        );
    Ok(Report::record(r))
}

pub fn thomas_max(gamma1: f64, gamma2: f64) -> Result<Report, CliError> {
    let mut r = OutputRecord::new("thomas-max");
    r.input("gamma1", gamma1).input("gamma2", gamma2);
    let m = max_thomas_angle(gamma1, gamma2)?;
    let (g_star, b_star) = right_angle_threshold();
    r.output("gamma_max", m.gamma)
        .angle("phi_max", m.phi)
        .output("cos_phi_max", m.cos_phi)
        .angle("theta_max", unsigned_zero(m.theta))
        .output("cos_theta_max", m.cos_theta)
        .output("exceeds_right_angle", m.exceeds_right_angle)
        .output("right_angle_gamma", g_star)
        .output("right_angle_beta", b_star);
    let (phi, cos) = scan_max_thomas_angle(gamma1, gamma2, 1e-10)?;
    r.residual("scan_phi", (phi - m.phi).abs())
        .residual("scan_cos_theta", (cos - m.cos_theta).abs());
    Ok(Report::record(r))
}

pub fn boost_link(s: &[f64], s1: &[f64], s2: &[f64]) -> Result<Report, CliError> {
    let mut r = OutputRecord::new("boost-link");
    r.input("s", s.to_vec()).input("s1", s1.to_vec()).input("s2", s2.to_vec());
    let t = StateTriple::new(state(s)?, state(s1)?, state(s2)?);
    let b = link_boost(&t);
    let beta = link_velocity(&t);
    let g = link_gamma(&t);
    r.output("s_normalized", t.s.vector().vec())
        .output("s1_normalized", t.s1.vector().vec())
        .output("s2_normalized", t.s2.vector().vec())
        .output("gamma1", t.gamma1)
        .output("gamma2", t.gamma2)
        .output("gamma12", t.gamma12)
        .output("link_gamma", g)
        .output("link_velocity", beta.vec())
        .output("link_boost", b.matrix());
    let speed_sq = beta.norm_sq();
    r.residual("maps_s1_to_s2", (b.apply(&t.s1.vector()) - t.s2.vector()).max_abs())
        .residual("tangent", beta.dot(&t.s.vector()).abs())
        .residual("gamma_of_velocity", (1.0 / (1.0 - speed_sq).sqrt() - g).abs() / g)
        .residual("metric", b.metric_residual());
    Ok(Report::record(r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TiltMode {
    /// Angle φ ∈ [0, π] between the relative velocities.
    Phi,
    /// Common gamma of the reference state against both endpoints.
    #[value(name = "gamma_star", alias = "gamma-star")]
    GammaStar,
}

pub fn tilt(gamma12: f64, mode: TiltMode, n: usize, upper: Option<f64>) -> Result<Report, CliError> {
    if !(gamma12 > 1.0) {
        return Err(CliError::Input("gamma12 must exceed 1".into()));
    }
    if n < 2 {
        return Err(CliError::Input("a scan needs n >= 2".into()));
    }
    let mut r = OutputRecord::new("tilt-scan");
    r.input("gamma12", gamma12);
    let param = match mode {
        TiltMode::Phi => {
            r.input("mode", "phi");
            TiltParametrization::Angle
        }
        TiltMode::GammaStar => {
            let lo = min_symmetric_gamma(gamma12);
            let upper = upper.unwrap_or(10.0 * lo);
            r.input("mode", "gamma_star").input("upper", upper);
            r.output("gamma_star_min", lo);
            TiltParametrization::GammaStar { upper }
        }
    };
    r.input("n", n);
    let rows = tilt_scan(gamma12, param, n)?;
    let monotone = rows.windows(2).all(|w| match mode {
        TiltMode::Phi => w[1].1 >= w[0].1,
        TiltMode::GammaStar => w[1].1 <= w[0].1,
    });
    r.output("param", rows.iter().map(|p| p.0).collect::<Vec<_>>())
        .output("gamma", rows.iter().map(|p| p.1).collect::<Vec<_>>())
        .output("monotone", monotone);
    Ok(Report {
        record: r,
        series: Some(Series {
            header: ["param", "gamma"],
            rows,
        }),
        consistent: monotone,
    })
}

pub fn axioms(n: usize, seed: u64, collinear: bool, gamma_max: f64) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    if !(1.0..=relkin::tolerance::gamma_limit()).contains(&gamma_max) {
        return Err(CliError::Input("gamma-max must lie in [1, guard limit]".into()));
    }
    let mut r = OutputRecord::new("axioms");
    r.input("n", n)
        .input("seed", seed)
        .input("collinear", collinear)
        .input("gamma_max", gamma_max);
    let rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sampler = VelocitySampler::with_gamma_max(rng, gamma_max);
    if collinear {
        sampler = sampler.collinear(Vector3::x());
    }
    let report = check_loop_axioms(&mut sampler, n)?;
    for o in &report.outcomes {
        let name = o.axiom.name();
        r.output(&format!("{name}_holds"), o.holds)
            .output(&format!("{name}_worst_residual"), o.worst_residual);
        if !o.holds {
            for (i, w) in o.witness.iter().enumerate() {
                r.output(&format!("{name}_witness_{}", i + 1), w.vec());
            }
        }
    }
    let (expected, matches) = if collinear {
        ("group", report.matches_group_signature())
    } else {
        ("loop", report.matches_loop_signature())
    };
    r.output("expected_signature", expected)
        .output("signature_matches", matches);
    let holding_worst = report
        .outcomes
        .iter()
        .filter(|o| o.axiom.holds_in_loop())
        .map(|o| o.worst_residual)
        .fold(0.0, f64::max);
    r.residual("worst_loop_axiom", holding_worst);
    debug_assert_eq!(report.outcomes.len(), Axiom::ALL.len());
    Ok(Report {
        record: r,
        series: None,
        consistent: matches,
    })
}

pub fn polar(entries: &[f64]) -> Result<Report, CliError> {
    let m = matrix(entries);
    let mut r = OutputRecord::new("polar");
    r.input("matrix", &m);
    let l = LorentzMatrix::new(m)?;
    let f = polar_decompose(&l)?;
    let sq = polar_decompose_sqrt(&m)
        .map_err(|e| CliError::Consistency(format!("square-root route failed: {e}")))?;
    let rotation = embed_rotation(&f.rotation);
    r.output("beta", f.beta.vec())
        .output("gamma", f.gamma())
        .output("rotation", f.rotation.matrix())
        .angle("rotation_angle", f.rotation.angle())
        .output("beta_reversed", f.beta_reversed.vec())
        .output("boost", boost(&f.beta).matrix())
        .output("sqrt_boost", &sq.boost)
        .output("sqrt_rotation", &sq.rotation);
    r.residual(
        "reconstruction",
        max_abs(&((boost(&f.beta) * rotation).matrix() - m)),
    )
    .residual("sqrt_boost", max_abs(&(boost(&f.beta).matrix() - sq.boost)))
    .residual("sqrt_rotation", max_abs(&(rotation.matrix() - sq.rotation)))
    .residual("block_conditions", validate_blocks(&m).max())
    .residual("metric", l.metric_residual());
    Ok(Report::record(r))
}

pub fn galilei_decompose(entries: &[f64], at: &[f64]) -> Result<Report, CliError> {
    let m = matrix(entries);
    let mut r = OutputRecord::new("galilei-decompose");
    r.input("matrix", &m).input("state", at.to_vec());
    let g = GalileiMatrix::new(m)?;
    let s = GalileiState::new(Vector3::new(at[0], at[1], at[2]))?;
    let d = decompose(&g, &s);
    let probe = polar_probe(&g, &s);
    r.output("velocity", &d.velocity)
        .output("rotation", project(&g).matrix())
        .output("boost_factor", galilei_boost(&d.velocity).matrix())
        .output("rotation_factor", d.rotation.matrix())
        .output("polar_boost_asymmetry", probe.boost_asymmetry)
        .output("polar_rotation_non_isometry", probe.rotation_non_isometry);
    let image = Vector4::from(g.apply(&s).components());
    let carried = Vector4::from(galilei_boost(&d.velocity).apply(&s).components());
    r.residual("round_trip", max_abs(&(d.matrix().matrix() - m)))
        .residual("boost_carries_state", (image - carried).amax());
    Ok(Report::record(r))
}
