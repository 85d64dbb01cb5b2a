//! Indicator tables of the subdivision embeddings along a single path, and
//! the star lists of the example 10-cycles.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::c10::{classify_10cycle, cycle_from_star_edges, C10Error, TenCycleKind, H4_TABLE_ROWS};
use crate::cube::StarEdge;
use crate::subdivision::{
    embed_even_subdivision_bipartite, embed_odd_subdivision_complete, EvenLayout, OddLayout,
    SubdivisionError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("no table {0}; tables are 1, 2 and 3")]
    UnknownTable(u8),
    #[error("row count {found}, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} ({label}), column {column} ({header}): expected {expected}, found {found}")]
    Mismatch {
        row: usize,
        label: String,
        column: usize,
        header: String,
        expected: u8,
        found: u8,
    },
    #[error(transparent)]
    Subdivision(#[from] SubdivisionError),
    #[error(transparent)]
    C10(#[from] C10Error),
}

/// Rows of a path's images restricted to a few coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorBlock {
    pub k: usize,
    pub headers: Vec<String>,
    pub labels: Vec<String>,
    pub rows: Vec<Vec<u8>>,
}

impl IndicatorBlock {
    /// Compares against expected rows; reports the first differing cell.
    pub fn check(&self, expected: &[&[u8]]) -> Result<(), TableError> {
        if expected.len() != self.rows.len() {
            return Err(TableError::RowCount {
                expected: expected.len(),
                found: self.rows.len(),
            });
        }
        for (r, (want, got)) in expected.iter().zip(&self.rows).enumerate() {
            if want.len() != got.len() {
                return Err(TableError::RowCount {
                    expected: want.len(),
                    found: got.len(),
                });
            }
            for (c, (&w, &g)) in want.iter().zip(got).enumerate() {
                if w != g {
                    return Err(TableError::Mismatch {
                        row: r,
                        label: self.labels[r].clone(),
                        column: c,
                        header: self.headers[c].clone(),
                        expected: w,
                        found: g,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let label_w = self
            .labels
            .iter()
            .map(|l| l.chars().count())
            .max()
            .unwrap_or(0);
        let col_w: Vec<usize> = self
            .headers
            .iter()
            .map(|h| h.chars().count().max(1))
            .collect();
        let mut out = format!("k = {}\n", self.k);
        out.push_str(&format!("{:label_w$}", ""));
        for (h, w) in self.headers.iter().zip(&col_w) {
            out.push_str(&format!(" {h:>w$}"));
        }
        out.push('\n');
        for (label, row) in self.labels.iter().zip(&self.rows) {
            out.push_str(&format!("{label:label_w$}"));
            for (v, w) in row.iter().zip(&col_w) {
                out.push_str(&format!(" {v:>w$}"));
            }
            out.push('\n');
        }
        out
    }
}

fn path_labels(first: &str, inner: usize, last: &str) -> Vec<String> {
    let mut labels = Vec::with_capacity(inner + 2);
    labels.push(format!("f({first})"));
    labels.extend((1..=inner).map(|i| format!("f(z{i})")));
    labels.push(format!("f({last})"));
    labels
}

fn restrict(bits: u128, coords: &[usize]) -> Vec<u8> {
    coords
        .iter()
        .map(|&c| (bits >> (c - 1) & 1) as u8)
        .collect()
}

/// The path `x, z_1, ..., z_{2k+1}, y` of `T_{2k+1}(K_2)` restricted to
/// `b_e, x_1..x_k, y_1..y_k`.
pub fn odd_indicator_block(k: usize) -> Result<IndicatorBlock, TableError> {
    let emb = embed_odd_subdivision_complete(2, k)?;
    let lay = OddLayout { t: 2, k };
    let mut coords = Vec::new();
    let mut headers = Vec::new();
    if k >= 1 {
        coords.push(lay.b(0));
        headers.push(String::from("b_e"));
    }
    for (v, name) in [(0, 'x'), (1, 'y')] {
        for j in 1..=k.max(1) {
            coords.push(lay.x(v, j));
            headers.push(format!("{name}_{j}"));
        }
    }
    let mut path = Vec::new();
    path.push(0);
    path.extend((1..=2 * k + 1).map(|i| emb.subdivision.inner(2, 0, i)));
    path.push(1);
    let rows = path
        .iter()
        .map(|&v| restrict(emb.embedding.image(v).bits(), &coords))
        .collect();
    Ok(IndicatorBlock {
        k,
        headers,
        labels: path_labels("x", 2 * k + 1, "y"),
        rows,
    })
}

/// The path `a, z_1, ..., z_{2k}, b` of `T_{2k}(K_{1,1})` restricted to
/// `a, b, c, s_e^1..s_e^{k-1}`; needs `k >= 3`.
pub fn even_indicator_block(k: usize) -> Result<IndicatorBlock, TableError> {
    if k < 3 {
        return Err(TableError::RowCount {
            expected: 3,
            found: k,
        });
    }
    let emb = embed_even_subdivision_bipartite(1, k)?;
    let lay = EvenLayout { t: 1, k };
    let mut coords = vec![lay.a(0), lay.b(0), lay.c()];
    let mut headers = vec![String::from("a"), String::from("b"), String::from("c")];
    for m in 1..k {
        coords.push(lay.s(0, m));
        headers.push(format!("s_e^{m}"));
    }
    let mut path = Vec::new();
    path.push(0);
    path.extend((1..=2 * k).map(|i| emb.subdivision.inner(2, 0, i)));
    path.push(1);
    let rows = path
        .iter()
        .map(|&v| restrict(emb.embedding.image(v).bits(), &coords))
        .collect();
    Ok(IndicatorBlock {
        k,
        headers,
        labels: path_labels("a", 2 * k, "b"),
        rows,
    })
}

/// Star lists of one example 10-cycle for each of `H1..H4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarList {
    pub kind: TenCycleKind,
    /// Names of the five columns.
    pub columns: [char; 5],
    pub rows: [&'static str; 10],
}

pub const STAR_LISTS: [StarList; 4] = [
    StarList {
        kind: TenCycleKind::H1,
        columns: ['a', 'b', 'c', 'd', 'e'],
        rows: [
            "1*000", "*1000", "01*00", "0*100", "001*0", "00*10", "0001*", "000*1", "*0001",
            "1000*",
        ],
    },
    StarList {
        kind: TenCycleKind::H2,
        columns: ['a', 'b', 'c', 'd', 'e'],
        rows: [
            "11*00", "*1100", "011*0", "0*110", "0011*", "00*11", "*0011", "100*1", "1*001",
            "1100*",
        ],
    },
    StarList {
        kind: TenCycleKind::H3,
        columns: ['a', 'b', 'c', 'd', 'e'],
        rows: [
            "0011*", "00*11", "*0011", "100*1", "1*001", "*1001", "01*01", "0110*", "011*0",
            "0*110",
        ],
    },
    StarList {
        kind: TenCycleKind::H4,
        columns: ['a', 'e', 'c', 'd', 'b'],
        rows: H4_TABLE_ROWS,
    },
];

impl StarList {
    pub fn edges(&self) -> Vec<StarEdge> {
        self.rows
            .iter()
            .map(|r| StarEdge::parse(r).expect("valid star row"))
            .collect()
    }

    /// Classification of the listed cycle.
    pub fn classify(&self) -> Result<TenCycleKind, TableError> {
        let cycle = cycle_from_star_edges(&self.edges())?;
        Ok(classify_10cycle(&cycle)?.kind)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.kind.name());
        let header: Vec<String> = self.columns.iter().map(|c| format!("{c}")).collect();
        out.push_str(&header.join(" "));
        out.push('\n');
        for row in self.rows {
            let cells: Vec<String> = row.chars().map(|c| format!("{c}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The `k` values shown for each indicator table.
pub fn table_ks(table: u8) -> Result<[usize; 3], TableError> {
    match table {
        1 => Ok([1, 2, 3]),
        2 => Ok([3, 4, 5]),
        3 => Ok([0, 0, 0]),
        other => Err(TableError::UnknownTable(other)),
    }
}

/// Text of table 1 (odd family), 2 (even family) or 3 (star lists).
pub fn render_table(table: u8) -> Result<String, TableError> {
    let ks = table_ks(table)?;
    let mut parts = Vec::new();
    match table {
        1 => {
            for k in ks {
                parts.push(odd_indicator_block(k)?.render());
            }
        }
        2 => {
            for k in ks {
                parts.push(even_indicator_block(k)?.render());
            }
        }
        _ => {
            for list in &STAR_LISTS {
                parts.push(list.render());
            }
        }
    }
    Ok(parts.join("\n"))
}
