//! File formats for matrices, block operators, vectors, decompositions,
//! and solve reports.
//!
//! Everything is JSON with exact scalar strings; decimals never appear.
//! Dense-matrix files and block-operator files are both objects with a
//! `"kind"` field so one command can accept either. Vectors and
//! decompositions are bare arrays. Serialization is deterministic:
//! object keys are emitted in sorted order and scalars in canonical
//! form, so equal values produce byte-identical files.
//!
//! Schemas:
//!
//! * matrix file: `{"kind": "matrix", "entries": [["1", "0"], ["0", "1/2"]]}`
//! * operator file: `{"kind": "block_operator", "head_blocks": [rows, ...],
//!   "tail_block": rows}` where `rows` is the same array-of-rows form as
//!   a matrix file's `"entries"`
//! * vector: `[[1, "1"], [4, "-2/3"]]`, indices 1-based, repeated indices
//!   summed
//! * decomposition: array of parts, each part an array of vectors

use serde_json::{Map, Value};

use crate::blockop::{BlockDescription, BlockOperator};
use crate::decomp::InvariantDecomposition;
use crate::error::{Error, ParseError};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};
use crate::solve::SolveReport;
use crate::subspace::Subspace;
use crate::vector::SparseVector;

/// Contents of a file that may hold either a dense matrix or a block
/// operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FileObject {
    Matrix(Matrix),
    Operator(BlockOperator),
}

fn json_root(text: &str) -> Result<Value, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Json {
        message: e.to_string(),
        line: e.line(),
        column: e.column(),
    })
}

fn parse_scalar(context: &str, v: &Value) -> Result<Scalar, ParseError> {
    let Some(text) = v.as_str() else {
        return Err(ParseError::value(
            context,
            "scalar must be a string like \"3/4\" or \"1-1/2*i\"",
        ));
    };
    text.parse()
        .map_err(|e: ParseError| match e {
            ParseError::Scalar { text, reason, .. } => ParseError::Scalar {
                context: context.to_string(),
                text,
                reason,
            },
            other => other,
        })
}

fn parse_rows(context: &str, v: &Value) -> Result<Matrix, ParseError> {
    let Some(rows) = v.as_array() else {
        return Err(ParseError::value(context, "expected an array of rows"));
    };
    if rows.is_empty() {
        return Err(ParseError::value(context, "matrix needs at least one row"));
    }
    let mut parsed: Vec<Vec<Scalar>> = Vec::with_capacity(rows.len());
    let mut width = None;
    for (i, row) in rows.iter().enumerate() {
        let Some(cells) = row.as_array() else {
            return Err(ParseError::value(
                format!("{context}, row {}", i + 1),
                "expected an array of scalar strings",
            ));
        };
        if cells.is_empty() {
            return Err(ParseError::value(
                format!("{context}, row {}", i + 1),
                "row has no entries",
            ));
        }
        match width {
            None => width = Some(cells.len()),
            Some(w) if w != cells.len() => {
                return Err(ParseError::value(
                    format!("{context}, row {}", i + 1),
                    format!("row has {} entries but row 1 has {w}", cells.len()),
                ));
            }
            Some(_) => {}
        }
        let mut out_row = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            out_row.push(parse_scalar(
                &format!("{context}, entry ({}, {})", i + 1, j + 1),
                cell,
            )?);
        }
        parsed.push(out_row);
    }
    Matrix::from_rows(parsed).map_err(|e| ParseError::value(context, e.to_string()))
}

fn parse_vector_value(context: &str, v: &Value) -> Result<SparseVector, ParseError> {
    let Some(pairs) = v.as_array() else {
        return Err(ParseError::value(
            context,
            "expected an array of [index, scalar] pairs",
        ));
    };
    let mut entries = Vec::with_capacity(pairs.len());
    for (n, pair) in pairs.iter().enumerate() {
        let entry_ctx = format!("{context}, entry {}", n + 1);
        let Some(parts) = pair.as_array() else {
            return Err(ParseError::value(entry_ctx, "expected an [index, scalar] pair"));
        };
        if parts.len() != 2 {
            return Err(ParseError::value(
                entry_ctx,
                format!("expected 2 elements, found {}", parts.len()),
            ));
        }
        let Some(raw_index) = parts[0].as_u64() else {
            return Err(ParseError::value(entry_ctx, "index must be a positive integer"));
        };
        let index = usize::try_from(raw_index)
            .ok()
            .filter(|i| *i >= 1)
            .ok_or_else(|| ParseError::value(&entry_ctx, "index must be a positive integer"))?;
        entries.push((index, parse_scalar(&entry_ctx, &parts[1])?));
    }
    Ok(SparseVector::from_entries(entries).expect("indices checked positive"))
}

fn object_with_kind<'v>(
    v: &'v Value,
    allowed: &[&str],
) -> Result<(&'v str, &'v Map<String, Value>), ParseError> {
    let Some(obj) = v.as_object() else {
        return Err(ParseError::value(
            "file root",
            "expected an object with a \"kind\" field",
        ));
    };
    let Some(kind) = obj.get("kind").and_then(Value::as_str) else {
        return Err(ParseError::value(
            "file root",
            format!("missing \"kind\" field; expected one of {allowed:?}"),
        ));
    };
    if !allowed.contains(&kind) {
        return Err(ParseError::value(
            "file root",
            format!("unknown kind {kind:?}; expected one of {allowed:?}"),
        ));
    }
    Ok((kind, obj))
}

fn reject_unknown_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), ParseError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(ParseError::value(
                "file root",
                format!("unexpected field {key:?}"),
            ));
        }
    }
    Ok(())
}

fn matrix_from_object(obj: &Map<String, Value>) -> Result<Matrix, ParseError> {
    reject_unknown_keys(obj, &["kind", "entries"])?;
    let entries = obj
        .get("entries")
        .ok_or_else(|| ParseError::value("matrix file", "missing \"entries\" field"))?;
    parse_rows("matrix entries", entries)
}

fn operator_from_object(obj: &Map<String, Value>) -> Result<BlockOperator, ParseError> {
    reject_unknown_keys(obj, &["kind", "head_blocks", "tail_block"])?;
    let heads_value = obj
        .get("head_blocks")
        .ok_or_else(|| ParseError::value("operator file", "missing \"head_blocks\" field"))?;
    let Some(heads) = heads_value.as_array() else {
        return Err(ParseError::value(
            "operator file",
            "\"head_blocks\" must be an array of matrices",
        ));
    };
    let mut head_blocks = Vec::with_capacity(heads.len());
    for (j, h) in heads.iter().enumerate() {
        head_blocks.push(parse_rows(&format!("head block {}", j + 1), h)?);
    }
    let tail_value = obj
        .get("tail_block")
        .ok_or_else(|| ParseError::value("operator file", "missing \"tail_block\" field"))?;
    let tail_block = parse_rows("tail block", tail_value)?;
    BlockOperator::new(head_blocks, tail_block)
        .map_err(|e| ParseError::value("operator file", e.to_string()))
}

/// Parses a file that may hold either kind of linear map, dispatching on
/// the `"kind"` field.
pub fn parse_file_object(text: &str) -> Result<FileObject, ParseError> {
    let root = json_root(text)?;
    let (kind, obj) = object_with_kind(&root, &["matrix", "block_operator"])?;
    match kind {
        "matrix" => Ok(FileObject::Matrix(matrix_from_object(obj)?)),
        _ => Ok(FileObject::Operator(operator_from_object(obj)?)),
    }
}

/// Parses a file that must hold a dense matrix.
pub fn parse_matrix_file(text: &str) -> Result<Matrix, ParseError> {
    let root = json_root(text)?;
    let (_, obj) = object_with_kind(&root, &["matrix"])?;
    matrix_from_object(obj)
}

/// Parses a file that must hold a block operator.
pub fn parse_operator_file(text: &str) -> Result<BlockOperator, ParseError> {
    let root = json_root(text)?;
    let (_, obj) = object_with_kind(&root, &["block_operator"])?;
    operator_from_object(obj)
}

/// Parses a finitely supported vector: a bare array of
/// `[index, scalar-string]` pairs with 1-based indices. Repeated indices
/// are summed.
pub fn parse_vector(text: &str) -> Result<SparseVector, ParseError> {
    let root = json_root(text)?;
    parse_vector_value("vector", &root)
}

/// Parses the raw parts of a decomposition file: a bare array of parts,
/// each part an array of vectors. Only syntax is checked here; whether
/// the parts form a direct sum is a semantic question answered by
/// [`build_decomposition`].
pub fn parse_decomposition_parts(text: &str) -> Result<Vec<Vec<SparseVector>>, ParseError> {
    let root = json_root(text)?;
    let Some(parts) = root.as_array() else {
        return Err(ParseError::value(
            "decomposition",
            "expected an array of parts",
        ));
    };
    let mut out = Vec::with_capacity(parts.len());
    for (p, part) in parts.iter().enumerate() {
        let ctx = format!("decomposition part {}", p + 1);
        let Some(vectors) = part.as_array() else {
            return Err(ParseError::value(ctx, "expected an array of vectors"));
        };
        let mut basis = Vec::with_capacity(vectors.len());
        for (n, v) in vectors.iter().enumerate() {
            basis.push(parse_vector_value(&format!("{ctx}, vector {}", n + 1), v)?);
        }
        out.push(basis);
    }
    Ok(out)
}

/// Assembles parsed decomposition parts into a validated direct-sum
/// decomposition of a space of the given dimension.
pub fn build_decomposition(
    ambient_dim: usize,
    parts: Vec<Vec<SparseVector>>,
) -> Result<InvariantDecomposition, Error> {
    let subspaces = parts
        .into_iter()
        .map(|basis| Subspace::new(ambient_dim, basis))
        .collect::<Result<Vec<_>, _>>()?;
    InvariantDecomposition::new(ambient_dim, subspaces)
}

fn rows_to_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| Value::String(m.get(i, j).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// JSON value of a vector in the bare-array form.
pub fn vector_to_value(v: &SparseVector) -> Value {
    Value::Array(
        v.iter()
            .map(|(i, s)| {
                Value::Array(vec![
                    Value::Number((*i as u64).into()),
                    Value::String(s.to_string()),
                ])
            })
            .collect(),
    )
}

/// Exact decimal-free text of a rational number.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Matrix file content for a dense matrix.
pub fn serialize_matrix_file(m: &Matrix) -> String {
    let mut obj = Map::new();
    obj.insert("kind".to_string(), Value::String("matrix".to_string()));
    obj.insert("entries".to_string(), rows_to_value(m));
    pretty(&Value::Object(obj))
}

/// Operator file content for a block operator.
pub fn serialize_operator_file(op: &BlockOperator) -> String {
    let mut obj = Map::new();
    obj.insert(
        "kind".to_string(),
        Value::String("block_operator".to_string()),
    );
    obj.insert(
        "head_blocks".to_string(),
        Value::Array(op.head_blocks().iter().map(rows_to_value).collect()),
    );
    obj.insert("tail_block".to_string(), rows_to_value(op.tail_block()));
    pretty(&Value::Object(obj))
}

/// One-line vector text in the same form `parse_vector` reads.
pub fn serialize_vector(v: &SparseVector) -> String {
    vector_to_value(v).to_string()
}

fn description_to_value(d: &BlockDescription) -> Value {
    let heads = d
        .heads
        .iter()
        .map(|part| {
            let mut obj = Map::new();
            obj.insert("offset".to_string(), Value::Number((part.offset as u64).into()));
            obj.insert(
                "basis".to_string(),
                Value::Array(part.space.basis().iter().map(vector_to_value).collect()),
            );
            Value::Object(obj)
        })
        .collect();
    let mut obj = Map::new();
    obj.insert(
        "head_len".to_string(),
        Value::Number((d.head_len as u64).into()),
    );
    obj.insert(
        "tail_period".to_string(),
        Value::Number((d.tail_period as u64).into()),
    );
    obj.insert("heads".to_string(), Value::Array(heads));
    obj.insert(
        "tail_basis".to_string(),
        Value::Array(d.tail.basis().iter().map(vector_to_value).collect()),
    );
    Value::Object(obj)
}

/// JSON value of a solve report: consistency flag, minimal solution,
/// exact residual, and per-block kernel description. The tail kernel
/// basis is given in local coordinates; copy `k` of the tail lives at
/// offset `head_len + k * tail_period`.
pub fn report_to_value(r: &SolveReport) -> Value {
    let mut obj = Map::new();
    obj.insert("consistent".to_string(), Value::Bool(r.consistent));
    obj.insert("min_solution".to_string(), vector_to_value(&r.min_solution));
    obj.insert(
        "residual_norm_sq".to_string(),
        Value::String(rational_to_string(&r.residual_norm_sq)),
    );
    obj.insert("kernel".to_string(), description_to_value(&r.kernel));
    Value::Object(obj)
}

/// Machine-readable solve report text.
pub fn serialize_solve_report(r: &SolveReport) -> String {
    pretty(&report_to_value(r))
}

fn pretty(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("value trees serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn v(pairs: &[(usize, &str)]) -> SparseVector {
        SparseVector::from_entries(pairs.iter().map(|(i, t)| (*i, s(t))).collect()).unwrap()
    }

    #[test]
    fn matrix_file_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![s("1"), s("-1/2")],
            vec![s("i"), s("2/3-1/5*i")],
        ])
        .unwrap();
        let text = serialize_matrix_file(&m);
        assert_eq!(parse_matrix_file(&text).unwrap(), m);
        match parse_file_object(&text).unwrap() {
            FileObject::Matrix(back) => assert_eq!(back, m),
            FileObject::Operator(_) => panic!("matrix file parsed as operator"),
        }
    }

    #[test]
    fn operator_file_round_trip() {
        let op = BlockOperator::new(
            vec![Matrix::from_int_rows(&[&[0, 1], &[1, 3]])],
            Matrix::from_int_rows(&[&[0]]),
        )
        .unwrap();
        let text = serialize_operator_file(&op);
        assert_eq!(parse_operator_file(&text).unwrap(), op);
        // A headless operator keeps its empty head list through the
        // round trip.
        let headless = BlockOperator::new(vec![], Matrix::identity(2)).unwrap();
        let text = serialize_operator_file(&headless);
        assert_eq!(parse_operator_file(&text).unwrap(), headless);
    }

    #[test]
    fn vector_round_trip_and_empty_vector() {
        let x = v(&[(1, "1"), (4, "-2/3"), (9, "5*i")]);
        assert_eq!(parse_vector(&serialize_vector(&x)).unwrap(), x);
        assert_eq!(parse_vector("[]").unwrap(), SparseVector::zero());
        assert_eq!(serialize_vector(&SparseVector::zero()), "[]");
        // Repeated indices accumulate.
        assert_eq!(
            parse_vector("[[2, \"1\"], [2, \"-1\"]]").unwrap(),
            SparseVector::zero()
        );
    }

    #[test]
    fn decomposition_parses_and_validates() {
        let text = "[[[[1, \"1\"]], [[2, \"1\"]]], [[[3, \"1\"]]]]";
        let parts = parse_decomposition_parts(text).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].len(), 2);
        let d = build_decomposition(3, parts.clone()).unwrap();
        assert_eq!(d.parts().len(), 2);
        // Same parts cannot decompose a 4-dimensional space.
        assert!(build_decomposition(4, parts).is_err());
    }

    #[test]
    fn json_errors_carry_position() {
        match parse_vector("[[1, \"1\"],") {
            Err(ParseError::Json { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected a JSON error, got {other:?}"),
        }
    }

    #[test]
    fn schema_violations_name_the_context() {
        let err = parse_matrix_file("{\"kind\": \"matrix\", \"entries\": [[\"1\"], [\"1\", \"2\"]]}")
            .unwrap_err();
        assert!(err.to_string().contains("row 2"));
        let err = parse_matrix_file("{\"kind\": \"matrix\", \"entries\": [[\"1.5\"]]}").unwrap_err();
        assert!(err.to_string().contains("entry (1, 1)"));
        let err = parse_vector("[[0, \"1\"]]").unwrap_err();
        assert!(err.to_string().contains("positive"));
        let err = parse_vector("[[1, 2]]").unwrap_err();
        assert!(err.to_string().contains("string"));
        let err = parse_matrix_file("{\"kind\": \"block_operator\"}").unwrap_err();
        assert!(err.to_string().contains("matrix"));
        let err = parse_file_object("{\"kind\": \"sparse\"}").unwrap_err();
        assert!(err.to_string().contains("sparse"));
        let err = parse_matrix_file("{\"kind\": \"matrix\", \"entries\": [[\"1\"]], \"extra\": 0}")
            .unwrap_err();
        assert!(err.to_string().contains("extra"));
        let err =
            parse_operator_file("{\"kind\": \"block_operator\", \"head_blocks\": [], \"tail_block\": [[\"1\", \"0\"]]}")
                .unwrap_err();
        assert!(err.to_string().contains("square"));
    }

    #[test]
    fn solve_report_serialization_is_exact_and_deterministic() {
        let op = BlockOperator::new(
            vec![Matrix::from_int_rows(&[&[1, 0], &[1, 0]])],
            Matrix::from_int_rows(&[&[0, 1], &[0, 0]]),
        )
        .unwrap();
        let w = v(&[(1, "1"), (2, "-1")]);
        let report = crate::solve::solve(&op, &w);
        let text = serialize_solve_report(&report);
        assert_eq!(text, serialize_solve_report(&crate::solve::solve(&op, &w)));
        assert!(text.contains("\"consistent\": false"));
        assert!(text.contains("\"residual_norm_sq\": \"2\""));
        assert!(!text.contains('.'));
        let val: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(val["kernel"]["tail_period"], 2);
    }
}
