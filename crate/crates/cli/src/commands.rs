use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use mubcoh::coherence::{coherence_report, l1_coherence, CoherenceReport};
use mubcoh::io::{basis_from_json, basis_to_json, matrix_from_json, matrix_to_json};
use mubcoh::linalg::{validate_density, ComplexMatrix, STATE_TOL};
use mubcoh::mub::{builtin_set, check_amub, check_unbiased, OrthonormalBasis, BUILTIN_SETS};
use mubcoh::states::{
    bell_diagonal, bloch_state, isotropic, werner, x3_state, BlochVector, CorrelationTriple,
    StateMatrix, XStateParams,
};
use mubcoh::surface::{coherence_field, coherence_field_physical, fig1_heightmap, isosurface};
use mubcoh::verify::{ClaimRegistry, RunParams};
use mubcoh::Error;
use serde::Serialize;
use serde_json::json;

use crate::{BasisCommand, CoherenceArgs, Command, StateCommand, SurfaceCommand, VerifyArgs};

/// How a command that ran to completion ended.
pub enum Status {
    Success,
    CheckFailed,
}

impl Status {
    fn from_passed(passed: bool) -> Self {
        if passed {
            Status::Success
        } else {
            Status::CheckFailed
        }
    }
}

/// Errors are input or usage problems; failed checks are reported through
/// [`Status`].
pub fn run(command: Command) -> Result<Status> {
    match command {
        Command::Basis(cmd) => basis(cmd),
        Command::State(cmd) => state(cmd),
        Command::Coherence(args) => coherence(args),
        Command::Verify(args) => verify(args),
        Command::Surface(cmd) => surface(cmd),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize + ?Sized>(out: Option<&Path>, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(out, &text)
}

fn load_basis(path: &Path, renormalize: bool) -> Result<OrthonormalBasis> {
    basis_from_json(&read(path)?, renormalize)
        .with_context(|| format!("invalid basis file {}", path.display()))
}

fn named_set(name: &str) -> Result<mubcoh::mub::MubSet> {
    builtin_set(name).with_context(|| {
        format!(
            "unknown basis set {name:?}; expected one of {}",
            BUILTIN_SETS.join(", ")
        )
    })
}

fn basis(cmd: BasisCommand) -> Result<Status> {
    match cmd {
        BasisCommand::Gen { set, index, out } => {
            let set = named_set(&set)?;
            let text = match index {
                Some(k) => {
                    ensure!(
                        (1..=set.len()).contains(&k),
                        "--index must be between 1 and {}",
                        set.len()
                    );
                    basis_to_json(&set.bases()[k - 1])
                }
                None => {
                    let items: Vec<String> = set
                        .bases()
                        .iter()
                        .map(|b| basis_to_json(b).trim_end().to_owned())
                        .collect();
                    format!("[\n{}\n]\n", items.join(",\n"))
                }
            };
            emit(out.as_deref(), &text)?;
            Ok(Status::Success)
        }
        BasisCommand::Check {
            first,
            second,
            amub,
            tol,
            renormalize,
        } => {
            ensure!(tol >= 0.0, "--tol must be nonnegative");
            let b1 = load_basis(&first, renormalize)?;
            let b2 = load_basis(&second, renormalize)?;
            let report = match amub {
                Some(d) => check_amub(&b1, &b2, d, tol)?,
                None => check_unbiased(&b1, &b2, tol)?,
            };
            emit_json(
                None,
                &json!({ "first": b1.label(), "second": b2.label(), "report": report }),
            )?;
            Ok(Status::from_passed(report.passed))
        }
    }
}

fn write_state(state: StateMatrix, out: Option<&Path>) -> Result<Status> {
    if !state.physical {
        eprintln!("note: the matrix is not positive semidefinite");
    }
    emit(out, &matrix_to_json(&state.matrix))?;
    Ok(Status::Success)
}

fn state(cmd: StateCommand) -> Result<Status> {
    match cmd {
        StateCommand::Bloch { x, y, z, out } => {
            let rho = bloch_state(BlochVector::new(x, y, z)?);
            emit(out.as_deref(), &matrix_to_json(rho.matrix()))?;
        }
        StateCommand::X3 {
            variant,
            x,
            y,
            z,
            require_physical,
            out,
        } => {
            let state = x3_state(XStateParams { variant, x, y, z }, require_physical)?;
            return write_state(state, out.as_deref());
        }
        StateCommand::Bell {
            c1,
            c2,
            c3,
            require_physical,
            out,
        } => {
            let state = bell_diagonal(CorrelationTriple::new(c1, c2, c3)?, require_physical)?;
            return write_state(state, out.as_deref());
        }
        StateCommand::Werner { p, out } => {
            emit(out.as_deref(), &matrix_to_json(werner(p)?.matrix()))?;
        }
        StateCommand::Iso { f, out } => {
            emit(out.as_deref(), &matrix_to_json(isotropic(f)?.matrix()))?;
        }
    }
    Ok(Status::Success)
}

/// Reports for a valid density matrix, or l1 only (relative entropy `null`)
/// for a Hermitian unit-trace matrix that is not positive.
fn coherence_of(m: &ComplexMatrix, bases: &[OrthonormalBasis]) -> Result<Vec<CoherenceReport>> {
    let rho = match validate_density(m.clone(), STATE_TOL) {
        Ok(rho) => Some(rho),
        Err(Error::NotPositive { min_eigenvalue }) => {
            eprintln!(
                "note: the state has eigenvalue {min_eigenvalue:.3e}; relative entropy is not reported"
            );
            None
        }
        Err(e) => return Err(e).context("invalid state"),
    };
    bases
        .iter()
        .map(|b| {
            let report = match &rho {
                Some(rho) => coherence_report(rho, b),
                None => l1_coherence(m, b).map(|l1| CoherenceReport {
                    basis: b.label().to_owned(),
                    l1,
                    relative_entropy: None,
                }),
            };
            report.with_context(|| format!("basis {}", b.label()))
        })
        .collect()
}

fn coherence(args: CoherenceArgs) -> Result<Status> {
    let mut bases = args
        .bases
        .iter()
        .map(|p| load_basis(p, args.renormalize))
        .collect::<Result<Vec<_>>>()?;
    if let Some(name) = &args.set {
        bases.extend(named_set(name)?.bases().iter().cloned());
    }
    ensure!(!bases.is_empty(), "no bases given; use --basis or --set");

    let m = matrix_from_json(&read(&args.state)?)
        .with_context(|| format!("invalid state file {}", args.state.display()))?;
    let reports = coherence_of(&m, &bases)?;
    emit_json(args.out.as_deref(), &reports)?;
    Ok(Status::Success)
}

fn verify(args: VerifyArgs) -> Result<Status> {
    ensure!(args.tol >= 0.0, "--tol must be nonnegative");
    ensure!(args.grid >= 2, "--grid must be at least 2");
    let registry = ClaimRegistry::builtin();
    let ids: Vec<String> = if args.claim == "all" {
        registry.ids().into_iter().map(str::to_owned).collect()
    } else if registry.get(&args.claim).is_some() {
        vec![args.claim.clone()]
    } else {
        bail!(
            "unknown claim {:?}; expected all or one of {}",
            args.claim,
            registry.ids().join(", ")
        );
    };
    let params = RunParams {
        samples: args.samples,
        seed: args.seed,
        tolerance: args.tol,
        grid_points: args.grid,
        ..RunParams::default()
    };
    let single = args.claim != "all";
    let out = args.out.as_deref();
    let claims = ids.iter().filter_map(|id| registry.get(id));

    let ok = if args.self_test {
        let outcomes: Vec<_> = claims.map(|c| c.self_test(&params)).collect();
        write_one_or_all(out, &outcomes, single)?;
        outcomes.iter().all(|o| o.detected)
    } else {
        let reports: Vec<_> = claims.map(|c| c.run(&params)).collect();
        write_one_or_all(out, &reports, single)?;
        reports.iter().all(|r| r.passed)
    };
    Ok(Status::from_passed(ok))
}

fn write_one_or_all<T: Serialize>(out: Option<&Path>, items: &[T], single: bool) -> Result<()> {
    if single {
        emit_json(out, &items[0])
    } else {
        emit_json(out, items)
    }
}

fn surface(cmd: SurfaceCommand) -> Result<Status> {
    match cmd {
        SurfaceCommand::Fig1 { grid, out } => {
            emit(out.as_deref(), &fig1_heightmap(grid)?.to_csv())?;
        }
        SurfaceCommand::Fig2 {
            grid,
            levels,
            physical,
            field_csv,
            out,
        } => {
            ensure!(!levels.is_empty(), "--levels must name at least one level");
            let field = if physical {
                coherence_field_physical(grid)?
            } else {
                coherence_field(grid)?
            };
            fs::create_dir_all(&out).with_context(|| format!("cannot create {}", out.display()))?;
            let mut written = Vec::new();
            for level in levels {
                let mesh = isosurface(&field, level)?;
                let path: PathBuf = out.join(format!("level_{level}.obj"));
                emit(Some(&path), &mesh.to_obj())?;
                written.push(json!({
                    "level": level,
                    "vertices": mesh.vertices.len(),
                    "triangles": mesh.triangles.len(),
                    "path": path.display().to_string(),
                }));
            }
            if field_csv {
                emit(Some(&out.join("field.csv")), &field.to_csv())?;
            }
            emit_json(None, &written)?;
        }
    }
    Ok(Status::Success)
}
