//! Command-line front end for the exact pseudoinversion library.
//!
//! Verbs: `pinv`, `apply`, `solve`, `check`, `verify`, `potent`. Input
//! files are JSON with exact rational scalars; see the library's text
//! format module for the schemas. Exit codes: 0 on success (including
//! negative findings such as a non-invariant split), 1 when well-formed
//! input describes an impossible request, 2 on parse or I/O failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mpinv::textio::{
    build_decomposition, parse_decomposition_parts, parse_file_object, parse_vector,
    rational_to_string, serialize_matrix_file, serialize_operator_file, serialize_solve_report,
    serialize_vector, FileObject,
};
use mpinv::{
    blockwise_rgi, char_conditions, check_invariance, mp_inverse, solve, verify_penrose,
    verify_reflexive, BlockDescription, BlockOperator, GramForm, Matrix, SparseVector,
};

#[derive(Parser)]
#[command(
    name = "mpinv",
    version,
    about = "Exact Moore-Penrose inverses of matrices and periodic block operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output style: human-readable text or the same JSON schema used
    /// for input files.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Moore-Penrose inverse of a matrix file or block-operator file.
    Pinv {
        /// Matrix or block-operator file.
        input: PathBuf,
    },
    /// Apply a block operator to a finitely supported vector.
    Apply {
        /// Block-operator file.
        operator: PathBuf,
        /// Vector file.
        vector: PathBuf,
    },
    /// Solve operator(x) = rhs: consistency, minimal solution, exact
    /// residual, and the kernel pattern.
    Solve {
        /// Block-operator file.
        operator: PathBuf,
        /// Right-hand-side vector file.
        rhs: PathBuf,
    },
    /// Check an invariant direct-sum split of a square matrix:
    /// invariance, the two orthogonality conditions, and whether the
    /// blockwise inverse is the Moore-Penrose inverse.
    Check {
        /// Square matrix file.
        matrix: PathBuf,
        /// Decomposition file listing the parts.
        split: PathBuf,
    },
    /// Verify the four Penrose identities and reflexivity of a
    /// candidate inverse.
    Verify {
        /// Matrix file for the map.
        matrix: PathBuf,
        /// Matrix file for the candidate inverse.
        candidate: PathBuf,
    },
    /// Decide whether high powers of a block operator have
    /// finite-dimensional range.
    Potent {
        /// Block-operator file.
        operator: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

/// Failures carry their exit class: parse and I/O problems exit with 2,
/// semantically impossible requests with 1.
enum Failure {
    Parse(String),
    Semantic(String),
}

impl From<mpinv::ParseError> for Failure {
    fn from(e: mpinv::ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<mpinv::Error> for Failure {
    fn from(e: mpinv::Error) -> Self {
        match e {
            mpinv::Error::Parse(p) => Failure::Parse(p.to_string()),
            other => Failure::Semantic(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format.unwrap_or(Format::Text);
    match &cli.command {
        Command::Pinv { input } => cmd_pinv(&read(input)?),
        Command::Apply { operator, vector } => {
            cmd_apply(&read(operator)?, &read(vector)?, format)
        }
        Command::Solve { operator, rhs } => cmd_solve(&read(operator)?, &read(rhs)?, format),
        Command::Check { matrix, split } => cmd_check(&read(matrix)?, &read(split)?, format),
        Command::Verify { matrix, candidate } => {
            cmd_verify(&read(matrix)?, &read(candidate)?, format)
        }
        Command::Potent { operator } => cmd_potent(&read(operator)?, format),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

fn require_operator(text: &str, verb: &str) -> Result<BlockOperator, Failure> {
    match parse_file_object(text)? {
        FileObject::Operator(op) => Ok(op),
        FileObject::Matrix(_) => Err(Failure::Semantic(format!(
            "{verb} works on block-operator files; for a dense matrix, wrap it as a single \
             head block over a zero tail block"
        ))),
    }
}

fn require_matrix(text: &str, verb: &str) -> Result<Matrix, Failure> {
    match parse_file_object(text)? {
        FileObject::Matrix(m) => Ok(m),
        FileObject::Operator(_) => Err(Failure::Semantic(format!(
            "{verb} works on finite-dimensional inputs only; got a block-operator file"
        ))),
    }
}

fn cmd_pinv(input: &str) -> Result<String, Failure> {
    Ok(match parse_file_object(input)? {
        FileObject::Matrix(m) => serialize_matrix_file(&mp_inverse(&m)),
        FileObject::Operator(op) => serialize_operator_file(&op.mp_inverse()),
    })
}

fn cmd_apply(op_text: &str, vec_text: &str, _format: Format) -> Result<String, Failure> {
    let op = require_operator(op_text, "apply")?;
    let x = parse_vector(vec_text)?;
    let mut out = serialize_vector(&op.apply(&x));
    out.push('\n');
    Ok(out)
}

fn cmd_solve(op_text: &str, rhs_text: &str, format: Format) -> Result<String, Failure> {
    let op = require_operator(op_text, "solve")?;
    let w = parse_vector(rhs_text)?;
    let report = solve(&op, &w);
    Ok(match format {
        Format::Machine => serialize_solve_report(&report),
        Format::Text => {
            let mut out = String::new();
            out += &format!("consistent: {}\n", yes_no(report.consistent));
            out += &format!(
                "minimal solution: {}\n",
                serialize_vector(&report.min_solution)
            );
            out += &format!(
                "residual norm squared: {}\n",
                rational_to_string(&report.residual_norm_sq)
            );
            out += &kernel_lines(&report.kernel);
            out
        }
    })
}

fn kernel_lines(d: &BlockDescription) -> String {
    let mut out = String::new();
    for (j, part) in d.heads.iter().enumerate() {
        out += &format!(
            "kernel head block {} (offset {}): {}\n",
            j + 1,
            part.offset,
            basis_text(part.space.basis())
        );
    }
    out += &format!(
        "kernel tail pattern (period {} after coordinate {}): {}\n",
        d.tail_period,
        d.head_len,
        basis_text(d.tail.basis())
    );
    out
}

fn basis_text(basis: &[SparseVector]) -> String {
    if basis.is_empty() {
        "trivial".to_string()
    } else {
        basis
            .iter()
            .map(serialize_vector)
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn cmd_check(matrix_text: &str, split_text: &str, format: Format) -> Result<String, Failure> {
    let m = require_matrix(matrix_text, "check")?;
    if !m.is_square() {
        return Err(Failure::Semantic(format!(
            "check needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let parts = parse_decomposition_parts(split_text)?;
    let d = build_decomposition(m.rows(), parts)?;
    let invariant = check_invariance(&m, &d)?;
    if !invariant {
        // A split the map does not preserve is a finding, not a crash.
        return Ok(match format {
            Format::Machine => machine_json(&serde_json::json!({ "invariant": false })),
            Format::Text => "invariant: no\n".to_string(),
        });
    }
    let g = GramForm::identity(m.rows());
    let (image_condition, kernel_condition) = char_conditions(&m, &d, &g)?;
    let equal = blockwise_rgi(&m, &d, &g)? == mp_inverse(&m);
    Ok(match format {
        Format::Machine => machine_json(&serde_json::json!({
            "invariant": true,
            "image_condition": image_condition,
            "kernel_condition": kernel_condition,
            "blockwise_equals_moore_penrose": equal,
        })),
        Format::Text => {
            let mut out = String::new();
            out += "invariant: yes\n";
            out += &format!("image condition: {}\n", yes_no(image_condition));
            out += &format!("kernel condition: {}\n", yes_no(kernel_condition));
            out += &format!(
                "blockwise inverse equals Moore-Penrose inverse: {}\n",
                yes_no(equal)
            );
            out
        }
    })
}

fn cmd_verify(a_text: &str, x_text: &str, format: Format) -> Result<String, Failure> {
    let a = require_matrix(a_text, "verify")?;
    let x = require_matrix(x_text, "verify")?;
    let g_v = GramForm::identity(a.cols());
    let g_w = GramForm::identity(a.rows());
    let checks = verify_penrose(&a, &x, &g_v, &g_w)?;
    let reflexive = verify_reflexive(&a, &x)?;
    let (p1, p2, p3, p4) = checks.as_tuple();
    Ok(match format {
        Format::Machine => machine_json(&serde_json::json!({
            "penrose": [p1, p2, p3, p4],
            "moore_penrose": checks.all(),
            "reflexive": reflexive,
        })),
        Format::Text => {
            let mut out = String::new();
            out += &format!("A X A = A: {}\n", yes_no(p1));
            out += &format!("X A X = X: {}\n", yes_no(p2));
            out += &format!("A X self-adjoint: {}\n", yes_no(p3));
            out += &format!("X A self-adjoint: {}\n", yes_no(p4));
            out += &format!("Moore-Penrose inverse: {}\n", yes_no(checks.all()));
            out += &format!("reflexive generalized inverse: {}\n", yes_no(reflexive));
            out
        }
    })
}

fn cmd_potent(op_text: &str, format: Format) -> Result<String, Failure> {
    let op = require_operator(op_text, "potent")?;
    let potent = op.is_finite_potent();
    Ok(match format {
        Format::Machine => machine_json(&serde_json::json!({ "finite_potent": potent })),
        Format::Text => format!("finite potent: {}\n", yes_no(potent)),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn machine_json(v: &serde_json::Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("report values serialize");
    out.push('\n');
    out
}
