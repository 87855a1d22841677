//! JSON encodings of instances.
//!
//! Complex matrices: `{"rows":R,"cols":C,"entries":[[[re,im],...],...]}`.
//! Block matrices: `{"m":M,"n":N,"matrix":{...}}`. Integer matrices use plain
//! numbers as entries. Pairs: `{"left":{...},"right":{...}}`. Dimensions
//! alone: `{"m":M,"n":N}`. Floats use shortest round-trip decimals, so
//! encoding then decoding reproduces every entry bit for bit.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::instance::{Instance, IntMatrix};
use crate::linalg::Matrix;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntMatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockJson {
    m: usize,
    n: usize,
    matrix: MatrixJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairJson {
    left: MatrixJson,
    right: MatrixJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DimsJson {
    m: usize,
    n: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum InstanceJson {
    Block(BlockJson),
    Pair(PairJson),
    Matrix(MatrixJson),
    Int(IntMatrixJson),
    Dims(DimsJson),
}

fn check_shape<T>(rows: usize, cols: usize, entries: &[Vec<T>]) -> Result<()> {
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!(
            "entries do not form a {rows}x{cols} array"
        )));
    }
    Ok(())
}

impl From<&Matrix> for MatrixJson {
    fn from(x: &Matrix) -> Self {
        MatrixJson {
            rows: x.rows(),
            cols: x.cols(),
            entries: (0..x.rows())
                .map(|i| {
                    (0..x.cols())
                        .map(|j| [x[(i, j)].re, x[(i, j)].im])
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<MatrixJson> for Matrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Matrix> {
        check_shape(j.rows, j.cols, &j.entries)?;
        let data = j
            .entries
            .into_iter()
            .flatten()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        Matrix::from_vec(j.rows, j.cols, data)
    }
}

fn to_json(inst: &Instance) -> InstanceJson {
    match inst {
        Instance::Block(b) => InstanceJson::Block(BlockJson {
            m: b.m(),
            n: b.n(),
            matrix: b.dense().into(),
        }),
        Instance::Matrix(x) => InstanceJson::Matrix(x.into()),
        Instance::Pair { left, right } => InstanceJson::Pair(PairJson {
            left: left.into(),
            right: right.into(),
        }),
        Instance::Int(x) => InstanceJson::Int(IntMatrixJson {
            rows: x.rows(),
            cols: x.cols(),
            entries: (0..x.rows())
                .map(|i| (0..x.cols()).map(|j| x.get(i, j)).collect())
                .collect(),
        }),
        Instance::Dims { m, n } => InstanceJson::Dims(DimsJson { m: *m, n: *n }),
    }
}

fn from_json(j: InstanceJson) -> Result<Instance> {
    Ok(match j {
        InstanceJson::Block(b) => {
            Instance::Block(BlockMatrix::new(b.m, b.n, b.matrix.try_into()?)?)
        }
        InstanceJson::Matrix(x) => Instance::Matrix(x.try_into()?),
        InstanceJson::Pair(p) => {
            let left: Matrix = p.left.try_into()?;
            let right: Matrix = p.right.try_into()?;
            if left.dims() != right.dims() {
                return Err(Error::DimensionMismatch {
                    op: "matrix pair",
                    left: left.dims(),
                    right: right.dims(),
                });
            }
            Instance::Pair { left, right }
        }
        InstanceJson::Int(x) => {
            check_shape(x.rows, x.cols, &x.entries)?;
            Instance::Int(IntMatrix::new(
                x.rows,
                x.cols,
                x.entries.into_iter().flatten().collect(),
            )?)
        }
        InstanceJson::Dims(d) => Instance::Dims { m: d.m, n: d.n },
    })
}

pub fn instance_to_json(inst: &Instance) -> String {
    serde_json::to_string(&to_json(inst)).expect("instance encoding cannot fail")
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    let j: InstanceJson = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("not a recognised instance encoding: {e}")))?;
    from_json(j)
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    instance_from_json(&fs::read_to_string(path)?)
}

pub fn write_instance(path: &Path, inst: &Instance) -> Result<()> {
    fs::write(path, instance_to_json(inst) + "\n")?;
    Ok(())
}
