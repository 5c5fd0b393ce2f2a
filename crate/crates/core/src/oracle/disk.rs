use alloc::vec;
use alloc::vec::Vec;

use super::{assemble, split_boundaries, CombMap, OracleError};

/// A simple disk of length `l'` and one ordinary disk hanging at each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskParts {
    pub simple: CombMap,
    /// `pieces[i]` sits at the end of the `i`-th boundary edge of `simple`;
    /// the single-vertex map stands for "nothing attached".
    pub pieces: Vec<CombMap>,
}

fn check_disk(m: &CombMap) -> Result<(), OracleError> {
    if m.boundary_count() != 1 || !m.is_connected() || m.genus() != 0 {
        return Err(OracleError::Domain("expected a connected planar map with one boundary".into()));
    }
    Ok(())
}

/// Walks the boundary from the root and cuts the map at every vertex the
/// boundary returns to.
pub fn disk_decompose(m: &CombMap) -> Result<DiskParts, OracleError> {
    if m.lengths == [0] {
        return Ok(DiskParts { simple: CombMap::vertex(), pieces: Vec::new() });
    }
    check_disk(m)?;
    let l = m.lengths[0];
    let b = m.boundary(0);
    let (vert, nv) = m.vertices();
    let corner = |p: usize| vert[b[(p + l - 1) % l]];
    let mut last = vec![0; nv];
    for p in 1..=l {
        last[corner(p)] = p;
    }
    let mut simple = Vec::new();
    let mut cuts = Vec::new();
    let mut p = 0;
    loop {
        simple.push(b[p]);
        let q = last[corner(p + 1)];
        if q <= p {
            return Err(OracleError::Domain("boundary revisits a vertex out of order".into()));
        }
        cuts.push(b[p + 1..q].to_vec());
        if q == l {
            break;
        }
        p = q;
    }
    let mut bounds = vec![simple];
    let nonempty: Vec<usize> = (0..cuts.len()).filter(|&i| !cuts[i].is_empty()).collect();
    for &i in &nonempty {
        bounds.push(cuts[i].clone());
    }
    let mut parts = split_boundaries(m, &bounds)?.into_iter();
    let simple = parts.next().unwrap();
    let mut pieces = vec![CombMap::vertex(); cuts.len()];
    for (i, piece) in nonempty.into_iter().zip(parts) {
        pieces[i] = piece;
    }
    Ok(DiskParts { simple, pieces })
}

/// Inverse of [`disk_decompose`]: inserts each piece's boundary after the
/// corresponding edge of the simple disk.
pub fn disk_compose(parts: &DiskParts) -> Result<CombMap, OracleError> {
    let s = &parts.simple;
    if s.lengths == [0] {
        return if parts.pieces.is_empty() {
            Ok(CombMap::vertex())
        } else {
            Err(OracleError::Domain("pieces attached to the single-vertex map".into()))
        };
    }
    if s.boundary_count() != 1 || parts.pieces.len() != s.lengths[0] {
        return Err(OracleError::Domain("one piece per boundary edge is required".into()));
    }
    let mut alpha = Vec::new();
    let mut internal = Vec::new();
    let push_map = |m: &CombMap, alpha: &mut Vec<usize>, internal: &mut Vec<Vec<usize>>| {
        let off = alpha.len();
        alpha.extend(m.alpha.iter().map(|&a| a + off));
        let mut start = off + m.lengths.iter().sum::<usize>();
        for &d in &m.faces {
            internal.push((start..start + d).collect());
            start += d;
        }
        off
    };
    let so = push_map(s, &mut alpha, &mut internal);
    let mut boundary = Vec::new();
    let mut offs = Vec::new();
    for p in &parts.pieces {
        if p.boundary_count() != 1 {
            return Err(OracleError::Domain("pieces must be disks".into()));
        }
        offs.push(push_map(p, &mut alpha, &mut internal));
    }
    for (i, p) in parts.pieces.iter().enumerate() {
        boundary.push(so + i);
        boundary.extend(offs[i]..offs[i] + p.lengths[0]);
    }
    assemble(&alpha, &[boundary], &internal)
}
