use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use chsh_core::bell::{square_identity_residual, TSIRELSON};
use chsh_core::numerics::hermitian_eigen;
use chsh_core::optimize::{maximize_chsh, OptimizerConfig};
use chsh_core::{
    analytic_max_violation, bell_operator, bell_spectrum, chsh_value, concurrence, entanglement_entropy, horodecki_m,
    landau_bound, max_violation_pure, optimal_settings_for, purity, random_density, random_pure, schmidt_decompose,
    BlochVector, MeasurementScheme, SeededRng,
};

use crate::format::{complex, exact, num, vector};
use crate::{read_state, CliError};

type CmdResult = Result<(), CliError>;

// Writing into a String cannot fail.
macro_rules! out {
    ($dst:expr, $($arg:tt)*) => { writeln!($dst, $($arg)*).expect("write to String") };
}

pub fn analytic(theta: f64, stdout: &mut String) -> CmdResult {
    let bound = analytic_max_violation(theta)?;
    let entropy = entanglement_entropy(theta)?;
    out!(
        stdout,
        "theta {}, bound {}, entropy {}",
        num(theta),
        num(bound),
        num(entropy)
    );
    Ok(())
}

pub fn schmidt(input: &Path, stdout: &mut String) -> CmdResult {
    let psi = read_state(input)?.pure()?;
    let form = schmidt_decompose(&psi);
    out!(stdout, "theta {}", num(form.theta));
    for (name, u) in [("u_a", &form.u_a), ("u_b", &form.u_b)] {
        for (i, row) in u.matrix().rows().iter().enumerate() {
            out!(stdout, "{name}[{i}] {} {}", complex(row[0]), complex(row[1]));
        }
    }
    Ok(())
}

fn print_scheme(stdout: &mut String, s: &MeasurementScheme) {
    for (name, v) in ["a", "a'", "b", "b'"].iter().zip(s.vectors()) {
        out!(stdout, "{name} {}", vector(v.to_array()));
    }
}

pub fn maximize(input: &Path, restarts: usize, seed: u64, max_iters: usize, stdout: &mut String) -> CmdResult {
    let rho = read_state(input)?.density();
    let cfg = OptimizerConfig {
        restarts,
        max_iters,
        seed,
        ..Default::default()
    };
    let r = maximize_chsh(&rho, &cfg)?;
    out!(stdout, "value {}", num(r.best_value));
    out!(stdout, "converged {}", r.converged);
    out!(stdout, "restarts {}", r.restarts_used);
    print_scheme(stdout, &r.scheme);
    if r.converged {
        Ok(())
    } else {
        Err(CliError::NoConvergence)
    }
}

pub fn optimal(input: &Path, stdout: &mut String) -> CmdResult {
    let psi = read_state(input)?.pure()?;
    let o = optimal_settings_for(&psi);
    let bound = max_violation_pure(&psi);
    out!(stdout, "lambda {}", num(o.lambda));
    out!(stdout, "achieved {}", num(o.achieved_value));
    out!(stdout, "bound {}", num(bound));
    out!(stdout, "residual {:.3e}", (o.achieved_value - bound).abs());
    print_scheme(stdout, &o.scheme);
    Ok(())
}

pub fn horodecki(input: &Path, stdout: &mut String) -> CmdResult {
    let rho = read_state(input)?.density();
    let m = horodecki_m(&rho);
    out!(
        stdout,
        "M {}, max {}, purity {}",
        num(m),
        num(2.0 * m.sqrt()),
        num(purity(&rho))
    );
    Ok(())
}

fn write_file(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })
}

/// `θ_i = π·i/N` for `i = 0..=N`; the last point is exactly `π`.
pub fn sweep_thetas(steps: usize) -> impl Iterator<Item = f64> {
    (0..=steps).map(move |i| {
        if i == steps {
            std::f64::consts::PI
        } else {
            std::f64::consts::PI * i as f64 / steps as f64
        }
    })
}

pub fn sweep(steps: usize, out: &Path, stdout: &mut String) -> CmdResult {
    if steps == 0 {
        return Err(CliError::Validation("--steps must be at least 1".into()));
    }
    let mut csv = String::from("theta,bound,entropy\n");
    for theta in sweep_thetas(steps) {
        let bound = analytic_max_violation(theta)?;
        let entropy = entanglement_entropy(theta)?;
        out!(csv, "{},{},{}", exact(theta), exact(bound), exact(entropy));
    }
    write_file(out, &csv)?;
    out!(stdout, "wrote {} rows to {}", steps + 1, out.display());
    Ok(())
}

pub fn scan_mixed(count: usize, seed: u64, rank: Option<usize>, out: &Path, stdout: &mut String) -> CmdResult {
    if let Some(r) = rank {
        if !(1..=4).contains(&r) {
            return Err(CliError::Validation(format!("--rank must be in 1..=4, got {r}")));
        }
    }
    let mut csv = String::from("index,rank,purity,max_violation\n");
    let mut best: Option<(usize, f64, f64)> = None;
    for i in 0..count {
        let mut rng = SeededRng::substream(seed, i as u64);
        let r = rank.unwrap_or_else(|| 1 + rng.below(4) as usize);
        let rho = random_density(&mut rng, r)?;
        let p = purity(&rho);
        let v = 2.0 * horodecki_m(&rho).sqrt();
        out!(csv, "{i},{r},{},{}", exact(p), exact(v));
        if best.map_or(true, |(_, bv, _)| v > bv) {
            best = Some((i, v, p));
        }
    }
    let summary = match best {
        Some((i, v, p)) => format!("max_violation {} purity {} index {i}", exact(v), exact(p)),
        None => "max_violation none".to_owned(),
    };
    out!(csv, "# {summary}");
    write_file(out, &csv)?;
    out!(stdout, "samples {count}");
    out!(stdout, "{summary}");
    Ok(())
}

fn random_scheme(rng: &mut SeededRng) -> MeasurementScheme {
    let mut v = || {
        let (x, y, z) = (rng.gaussian(), rng.gaussian(), rng.gaussian());
        BlochVector::normalized(x, y, z).expect("Gaussian draws are almost surely nonzero")
    };
    MeasurementScheme::new(v(), v(), v(), v())
}

struct Check {
    name: &'static str,
    worst: f64,
    tol: f64,
}

pub fn verify(seed: u64, trials: usize, stdout: &mut String) -> CmdResult {
    if trials == 0 {
        return Err(CliError::Validation("--trials must be at least 1".into()));
    }
    let mut rng = SeededRng::new(seed);
    let mut checks = Vec::new();
    let max_over = |it: &mut dyn Iterator<Item = f64>| it.fold(0.0f64, f64::max);

    let schemes: Vec<_> = (0..trials).map(|_| random_scheme(&mut rng)).collect();
    checks.push(Check {
        name: "square identity B^2 = 4I - [A,A']x[B,B']",
        worst: max_over(&mut schemes.iter().map(square_identity_residual)),
        tol: 1e-12,
    });
    checks.push(Check {
        name: "spectrum closed form +-2sqrt(1+-sin x)",
        worst: max_over(&mut schemes.iter().map(|s| {
            let numeric = hermitian_eigen(&bell_operator(s)).expect("4x4 Jacobi converges").values;
            let closed = bell_spectrum(s).eigenvalues;
            (0..4).map(|k| (numeric[3 - k] - closed[k]).abs()).fold(0.0, f64::max)
        })),
        tol: 1e-10,
    });
    checks.push(Check {
        name: "Tsirelson chain |<B>| <= Landau <= 2sqrt2",
        worst: max_over(&mut schemes.iter().enumerate().map(|(n, s)| {
            let rho = random_density(&mut rng, 1 + n % 4).expect("rank in range");
            let (v, l) = (chsh_value(s, &rho).abs(), landau_bound(s, &rho));
            f64::max(v - l, l - TSIRELSON).max(0.0)
        })),
        tol: 1e-9,
    });

    let states: Vec<_> = (0..trials).map(|_| random_pure(&mut rng)).collect();
    checks.push(Check {
        name: "Schmidt round trip fidelity",
        worst: max_over(&mut states.iter().map(|psi| {
            let f = schmidt_decompose(psi);
            1.0 - f.transform(psi).fidelity(&f.canonical())
        })),
        tol: 1e-12,
    });
    checks.push(Check {
        name: "concurrence = sin(theta)",
        worst: max_over(
            &mut states
                .iter()
                .map(|psi| (concurrence(psi) - schmidt_decompose(psi).theta.sin()).abs()),
        ),
        tol: 1e-10,
    });
    checks.push(Check {
        name: "2sqrt(M) of pure state = 2sqrt(1+sin^2 theta)",
        worst: max_over(
            &mut states
                .iter()
                .map(|psi| (2.0 * horodecki_m(&psi.projector()).sqrt() - max_violation_pure(psi)).abs()),
        ),
        tol: 1e-10,
    });
    checks.push(Check {
        name: "optimal settings attain 2sqrt(1+sin^2 theta)",
        worst: max_over(
            &mut states
                .iter()
                .map(|psi| (optimal_settings_for(psi).achieved_value - max_violation_pure(psi)).abs()),
        ),
        tol: 1e-9,
    });

    let oracle_n = trials.min(10);
    let cfg = OptimizerConfig::with_seed(seed);
    checks.push(Check {
        name: "oracle vs closed form (pure)",
        worst: max_over(&mut states.iter().take(oracle_n).map(|psi| {
            let r = maximize_chsh(&psi.projector(), &cfg).expect("default config is valid");
            (r.best_value - max_violation_pure(psi)).abs()
        })),
        tol: 1e-4,
    });
    checks.push(Check {
        name: "oracle vs Horodecki (mixed)",
        worst: max_over(&mut (0..oracle_n).map(|n| {
            let rho = random_density(&mut rng, 1 + n % 4).expect("rank in range");
            let r = maximize_chsh(&rho, &cfg).expect("default config is valid");
            (r.best_value - 2.0 * horodecki_m(&rho).sqrt()).abs()
        })),
        tol: 1e-3,
    });

    let mut failed = 0;
    for c in &checks {
        let ok = c.worst <= c.tol;
        failed += usize::from(!ok);
        out!(
            stdout,
            "{} {} (worst {:.3e}, tol {:.0e})",
            if ok { "PASS" } else { "FAIL" },
            c.name,
            c.worst,
            c.tol
        );
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::VerificationFailed(failed))
    }
}
