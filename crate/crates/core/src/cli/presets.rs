//! Built-in table presets with their reference error values.

use super::{CellKind, CellSpec, ErrorMetric, ReferenceValue};
use crate::asymptotic::Variant;

/// An exact rational parameter, converted to `f64` once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub const fn new(num: i64, den: i64) -> Self {
        Self { num, den }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

struct Column {
    k: f64,
    x: Ratio,
    t: Ratio,
    /// Reference errors for M = 0, 1, 2.
    errors: [f64; 3],
}

// table1: reference values are absolute errors |approx - S|.
const TABLE1: [Column; 8] = [
    Column {
        k: 100.0,
        x: Ratio::new(1, 2),
        t: Ratio::new(3, 4),
        errors: [5.723e-3, 9.925e-5, 1.223e-6],
    },
    Column {
        k: 100.0,
        x: Ratio::new(1, 2),
        t: Ratio::new(1, 1),
        errors: [9.481e-3, 3.288e-4, 1.315e-5],
    },
    Column {
        k: 200.0,
        x: Ratio::new(3, 4),
        t: Ratio::new(1, 2),
        errors: [1.357e-1, 6.171e-4, 2.380e-4],
    },
    Column {
        k: 200.0,
        x: Ratio::new(1, 2),
        t: Ratio::new(1, 2),
        errors: [9.638e-4, 1.286e-4, 4.238e-6],
    },
    Column {
        k: 200.0,
        x: Ratio::new(1, 2),
        t: Ratio::new(3, 4),
        errors: [2.919e-3, 2.458e-5, 1.897e-7],
    },
    Column {
        k: 200.0,
        x: Ratio::new(1, 2),
        t: Ratio::new(1, 1),
        errors: [4.866e-3, 8.476e-5, 1.710e-6],
    },
    Column {
        k: 300.0,
        x: Ratio::new(3, 4),
        t: Ratio::new(1, 2),
        errors: [1.073e-1, 1.150e-3, 6.018e-5],
    },
    Column {
        k: 300.0,
        x: Ratio::new(1, 2),
        t: Ratio::new(1, 2),
        errors: [7.293e-4, 5.973e-5, 1.285e-6],
    },
];

/// table2 (M = 0 only): relative errors of the d_0 uniform approximation of F_0
/// at t = 1/3, k = 150.
const TABLE2_T: Ratio = Ratio::new(1, 3);
const TABLE2_K: f64 = 150.0;
const TABLE2: [(Ratio, f64); 5] = [
    (Ratio::new(45, 100), 6.025e-5),
    (Ratio::new(72, 100), 1.353e-6),
    (Ratio::new(78, 100), 7.122e-7),
    (Ratio::new(90, 100), 3.455e-7),
    (Ratio::new(1, 1), 1.270e-8),
];

/// table1 cells, column-major: for each (k, x, t) column, M = 0, 1, 2.
pub fn table1_cells() -> Vec<CellSpec> {
    TABLE1
        .iter()
        .flat_map(|col| {
            let t = col.t.value();
            (0..3u32).map(move |m| CellSpec {
                k: col.k,
                x: col.x.value(),
                t,
                order: m,
                kind: CellKind::Asym(Variant::default_for(t)),
                reference: Some(ReferenceValue {
                    value: col.errors[m as usize],
                    metric: ErrorMetric::Absolute,
                }),
            })
        })
        .collect()
}

pub fn table2_cells() -> Vec<CellSpec> {
    TABLE2
        .iter()
        .map(|&(x, err)| CellSpec {
            k: TABLE2_K,
            x: x.value(),
            t: TABLE2_T.value(),
            order: 0,
            kind: CellKind::UniformD0,
            reference: Some(ReferenceValue {
                value: err,
                metric: ErrorMetric::Relative,
            }),
        })
        .collect()
}
