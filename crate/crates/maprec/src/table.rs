//! Count tables: families, their rows, and how rows are computed.

use std::fmt;

use maprec_core::exactnum::{format_rational, BigRational, RationalFunc};
use maprec_core::extract::{amplitude_residue, cylinder_coeffs, disk_coeffs, reduced_to_counts, ExtractError, Extractor, Family};
use maprec_core::spectral::{exchanged_reduced, ordinary_reduced, Mode};
use rayon::prelude::*;

use crate::cache::Cache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableFamily {
    Disk,
    FsDisk,
    Cylinder,
    MixedCylinder,
    SimpleCylinder,
    FsCylinder,
    Torus1,
    FsTorus1,
    Pants,
    FsPants,
}

impl TableFamily {
    pub const ALL: [TableFamily; 10] = [
        TableFamily::Disk,
        TableFamily::FsDisk,
        TableFamily::Cylinder,
        TableFamily::MixedCylinder,
        TableFamily::SimpleCylinder,
        TableFamily::FsCylinder,
        TableFamily::Torus1,
        TableFamily::FsTorus1,
        TableFamily::Pants,
        TableFamily::FsPants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableFamily::Disk => "disk",
            TableFamily::FsDisk => "fs-disk",
            TableFamily::Cylinder => "cylinder",
            TableFamily::MixedCylinder => "mixed-cylinder",
            TableFamily::SimpleCylinder => "simple-cylinder",
            TableFamily::FsCylinder => "fs-cylinder",
            TableFamily::Torus1 => "torus1",
            TableFamily::FsTorus1 => "fs-torus1",
            TableFamily::Pants => "pants",
            TableFamily::FsPants => "fs-pants",
        }
    }

    pub fn parse(s: &str) -> Option<TableFamily> {
        TableFamily::ALL.iter().copied().find(|f| f.name() == s)
    }

    pub fn genus(self) -> usize {
        match self {
            TableFamily::Torus1 | TableFamily::FsTorus1 => 1,
            _ => 0,
        }
    }

    pub fn boundaries(self) -> usize {
        match self {
            TableFamily::Disk | TableFamily::FsDisk | TableFamily::Torus1 | TableFamily::FsTorus1 => 1,
            TableFamily::Pants | TableFamily::FsPants => 3,
            _ => 2,
        }
    }

    /// Curve the counts come from.
    pub fn mode(self) -> Mode {
        match self {
            TableFamily::FsDisk | TableFamily::FsCylinder | TableFamily::FsTorus1 | TableFamily::FsPants => Mode::Exchanged,
            _ => Mode::Ordinary,
        }
    }

    /// Header of the first column.
    pub fn row_label(self) -> &'static str {
        match self {
            TableFamily::Disk | TableFamily::Torus1 => "ℓ",
            TableFamily::FsDisk | TableFamily::FsTorus1 => "k",
            TableFamily::Cylinder => "(ℓ1,ℓ2)",
            TableFamily::MixedCylinder => "(k1,ℓ1)",
            TableFamily::SimpleCylinder | TableFamily::FsCylinder => "(k1,k2)",
            TableFamily::Pants => "(ℓ1,ℓ2,ℓ3)",
            TableFamily::FsPants => "(k1,k2,k3)",
        }
    }

    /// Rows of the published table, or a small even range for the pants.
    pub fn default_lengths(self) -> Vec<Vec<usize>> {
        let pairs = |v: &[[usize; 2]]| v.iter().map(|p| p.to_vec()).collect();
        match self {
            TableFamily::Disk | TableFamily::FsDisk => (1..=4).map(|i| vec![2 * i]).collect(),
            TableFamily::Torus1 | TableFamily::FsTorus1 => (1..=7).map(|i| vec![2 * i]).collect(),
            TableFamily::Cylinder => pairs(&[
                [1, 1], [3, 1], [5, 1], [7, 1], [9, 1], [2, 2], [4, 2], [6, 2], [8, 2],
                [3, 3], [5, 3], [7, 3], [9, 3], [4, 4], [6, 4], [8, 4],
            ]),
            TableFamily::MixedCylinder => pairs(&[
                [1, 1], [3, 1], [5, 1], [7, 1], [9, 1], [2, 2], [4, 2], [6, 2], [8, 2],
                [1, 3], [3, 3], [5, 3], [7, 3], [9, 3], [2, 4], [4, 4], [6, 4], [8, 4],
            ]),
            TableFamily::SimpleCylinder | TableFamily::FsCylinder => pairs(&[
                [1, 1], [1, 3], [1, 5], [1, 7], [1, 9], [2, 2], [2, 4], [2, 6], [2, 8],
                [3, 3], [3, 5], [3, 7], [3, 9], [4, 4], [4, 6], [4, 8],
            ]),
            TableFamily::Pants | TableFamily::FsPants => {
                let mut v = Vec::new();
                for a in (2..=6).step_by(2) {
                    for b in (a..=6).step_by(2) {
                        for c in (b..=6).step_by(2) {
                            v.push(vec![a, b, c]);
                        }
                    }
                }
                v
            }
        }
    }
}

impl fmt::Display for TableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub lengths: Vec<usize>,
    pub coefficients: Vec<BigRational>,
}

impl Row {
    /// `2` or `(1,1)`.
    pub fn label(&self) -> String {
        if self.lengths.len() == 1 {
            self.lengths[0].to_string()
        } else {
            let parts: Vec<String> = self.lengths.iter().map(|l| l.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    pub fn values(&self) -> impl Iterator<Item = String> + '_ {
        self.coefficients.iter().map(format_rational)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub family: TableFamily,
    pub genus: usize,
    pub q_max: usize,
    pub rows: Vec<Row>,
}

#[derive(Debug)]
pub enum TableError {
    Lengths(String),
    Extract { lengths: Vec<usize>, error: ExtractError },
    Cache(std::io::Error),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Lengths(s) => write!(f, "invalid lengths: {}", s),
            TableError::Extract { lengths, error } => write!(f, "{:?}: {}", lengths, error),
            TableError::Cache(e) => write!(f, "cache: {}", e),
        }
    }
}

impl std::error::Error for TableError {}

/// The reduced curve a family is computed from; its text is what the cache hashes.
pub fn curve_fingerprint(mode: Mode) -> String {
    let curve = match mode {
        Mode::Ordinary => ordinary_reduced(),
        Mode::Exchanged => exchanged_reduced(),
    };
    format!("{:?}|{:?}|{:?}|{:?}", mode, curve.x, curve.y, curve.branch_points)
}

fn integral(lengths: &[usize], coeffs: Vec<BigRational>) -> Result<Vec<BigRational>, TableError> {
    for (q, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            let error = ExtractError::NotInteger { q, value: format_rational(c) };
            return Err(TableError::Extract { lengths: lengths.to_vec(), error });
        }
    }
    Ok(coeffs)
}

fn extract_err(lengths: &[usize]) -> impl Fn(ExtractError) -> TableError + '_ {
    move |error| TableError::Extract { lengths: lengths.to_vec(), error }
}

fn direct_row(family: TableFamily, lengths: &[usize], q_max: usize) -> Result<Vec<BigRational>, TableError> {
    let t = match family {
        TableFamily::Disk => disk_coeffs(Family::Ordinary, lengths[0], q_max),
        TableFamily::FsDisk => disk_coeffs(Family::FullySimple, lengths[0], q_max),
        TableFamily::Cylinder => cylinder_coeffs(Family::Ordinary, lengths[0], lengths[1], q_max),
        TableFamily::MixedCylinder => cylinder_coeffs(Family::Mixed, lengths[0], lengths[1], q_max),
        TableFamily::SimpleCylinder => cylinder_coeffs(Family::Simple, lengths[0], lengths[1], q_max),
        TableFamily::FsCylinder => cylinder_coeffs(Family::FullySimple, lengths[0], lengths[1], q_max),
        _ => unreachable!("amplitude families are computed from TR"),
    };
    t.map(|t| t.coefficients).map_err(extract_err(lengths))
}

fn amplitude_rows(family: TableFamily, rows: &[Vec<usize>], q_max: usize) -> Vec<Result<Vec<BigRational>, TableError>> {
    let (g, n) = (family.genus(), family.boundaries());
    let mode = family.mode();
    let mut ext = Extractor::new(2 * g + n - 2);
    let engine = ext.engine(mode);
    let points: Vec<RationalFunc> = engine.context().curve.branch_points.clone();
    let amp = engine.amplitude(g, n).clone();
    rows.par_iter()
        .map(|lengths| {
            let val = amplitude_residue(&amp, mode, &points, lengths);
            let total = lengths.iter().sum();
            let c = reduced_to_counts(&val, mode, total, q_max).map_err(extract_err(lengths))?;
            integral(lengths, c)
        })
        .collect()
}

fn validate(family: TableFamily, rows: &[Vec<usize>]) -> Result<(), TableError> {
    if rows.is_empty() {
        return Err(TableError::Lengths("no rows requested".into()));
    }
    for r in rows {
        if r.len() != family.boundaries() {
            return Err(TableError::Lengths(format!(
                "{} needs {} length(s) per row, got {:?}",
                family,
                family.boundaries(),
                r
            )));
        }
        if r.contains(&0) {
            return Err(TableError::Lengths(format!("boundary lengths must be positive, got {:?}", r)));
        }
    }
    Ok(())
}

/// Computes `[t^q]` for `q <= q_max` on every row, in parallel, reusing cached rows.
/// Row order follows `rows` whatever the schedule.
pub fn compute_table(family: TableFamily, rows: &[Vec<usize>], q_max: usize, cache: Option<&Cache>) -> Result<Table, TableError> {
    validate(family, rows)?;
    let genus = family.genus();
    let mut out: Vec<Option<Vec<BigRational>>> =
        rows.iter().map(|l| cache.and_then(|c| c.load(family, genus, l, q_max))).collect();
    let missing: Vec<usize> = (0..rows.len()).filter(|&i| out[i].is_none()).collect();
    let wanted: Vec<Vec<usize>> = missing.iter().map(|&i| rows[i].clone()).collect();
    let computed: Vec<Result<Vec<BigRational>, TableError>> = if wanted.is_empty() {
        Vec::new()
    } else if genus == 0 && family.boundaries() <= 2 {
        wanted.par_iter().map(|l| direct_row(family, l, q_max)).collect()
    } else {
        amplitude_rows(family, &wanted, q_max)
    };
    for (i, c) in missing.into_iter().zip(computed) {
        let c = c?;
        if let Some(cache) = cache {
            cache.store(family, genus, &rows[i], &c).map_err(TableError::Cache)?;
        }
        out[i] = Some(c);
    }
    let rows = rows
        .iter()
        .zip(out)
        .map(|(l, c)| Row { lengths: l.clone(), coefficients: c.expect("every row filled") })
        .collect();
    Ok(Table { family, genus, q_max, rows })
}
