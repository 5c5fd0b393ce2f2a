use alloc::vec;
use alloc::vec::Vec;

use super::{assemble, split_boundaries, CombMap, OracleError};

/// A run of edges shared by both boundaries (or a single shared vertex when
/// `length` is 0), followed along the first boundary by the disk `disk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedPiece {
    pub length: usize,
    /// Simple disk; its first `first_len` boundary edges came from the first boundary.
    pub disk: CombMap,
    pub first_len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CylinderParts {
    /// No shared vertex: the map itself.
    FullySimple(CombMap),
    /// The two boundaries glued along their whole length; the first root is
    /// paired with edge `shift` of the second boundary.
    Glued { length: usize, shift: usize },
    /// Shared pieces in the cyclic order of the first boundary, starting with
    /// the first one met from its root. The first root sits `root1` edges
    /// before the start of `pieces[0]`; the second root sits `root2` edges
    /// after the second boundary leaves that vertex.
    Pieces { pieces: Vec<SharedPiece>, root1: usize, root2: usize },
}

/// Cuts a planar map with two simple boundaries along everything they share.
pub fn cylinder_decompose(m: &CombMap) -> Result<CylinderParts, OracleError> {
    if m.boundary_count() != 2 || !m.is_connected() || m.genus() != 0 {
        return Err(OracleError::Domain("expected a connected planar map with two boundaries".into()));
    }
    if !m.classify().is_simple() {
        return Err(OracleError::Domain("both boundaries must be simple".into()));
    }
    let (l1, l2) = (m.lengths[0], m.lengths[1]);
    let b = m.boundary(0);
    let c = m.boundary(1);
    let in_b2 = |x: usize| x >= l1 && x < l1 + l2;
    let shared_edge: Vec<bool> = b.iter().map(|&x| in_b2(m.alpha[x])).collect();
    if shared_edge.iter().all(|&s| s) {
        return Ok(CylinderParts::Glued { length: l1, shift: m.alpha[b[0]] - l1 });
    }
    let (vert, nv) = m.vertices();
    let mut pos2 = vec![usize::MAX; nv];
    for (k, &x) in c.iter().enumerate() {
        pos2[vert[x]] = (k + 1) % l2;
    }
    let start = |j: usize| vert[b[(j + l1 - 1) % l1]];
    let shared = |j: usize| pos2[start(j)] != usize::MAX;
    let starts: Vec<usize> = (0..l1).filter(|&j| shared(j) && !shared_edge[(j + l1 - 1) % l1]).collect();
    if starts.is_empty() {
        return Ok(CylinderParts::FullySimple(m.canonical()));
    }
    let r = starts.len();
    let mut lens = Vec::new();
    for &s in &starts {
        let mut k = 0;
        while shared_edge[(s + k) % l1] {
            k += 1;
        }
        lens.push(k);
    }
    let mut bounds = Vec::new();
    let mut first = Vec::new();
    for i in 0..r {
        let e = starts[i] + lens[i];
        let next = starts[(i + 1) % r];
        let mut n1 = (next + l1 - e % l1) % l1;
        if n1 == 0 {
            n1 = l1;
        }
        let k = pos2[start(next)];
        let k_end = pos2[start(e)];
        let mut n2 = (k_end + l2 - k) % l2;
        if n2 == 0 {
            n2 = l2;
        }
        let mut bd: Vec<usize> = (0..n1).map(|t| b[(e + t) % l1]).collect();
        bd.extend((0..n2).map(|t| c[(k + t) % l2]));
        bounds.push(bd);
        first.push(n1);
    }
    let disks = split_boundaries(m, &bounds)?;
    let pieces = disks
        .into_iter()
        .zip(lens)
        .zip(first)
        .map(|((disk, length), first_len)| SharedPiece { length, disk, first_len })
        .collect();
    let k0 = pos2[start(starts[0])];
    Ok(CylinderParts::Pieces { pieces, root1: starts[0], root2: (l2 - k0) % l2 })
}

/// Inverse of [`cylinder_decompose`].
pub fn cylinder_compose(parts: &CylinderParts) -> Result<CombMap, OracleError> {
    match parts {
        CylinderParts::FullySimple(m) => Ok(m.canonical()),
        CylinderParts::Glued { length, shift } => {
            let l = *length;
            if l == 0 || *shift >= l {
                return Err(OracleError::Domain("invalid glued cylinder".into()));
            }
            let mut alpha = vec![0; 2 * l];
            for i in 0..l {
                let j = l + (shift + l - i) % l;
                alpha[i] = j;
                alpha[j] = i;
            }
            CombMap::new(vec![l, l], Vec::new(), alpha)
        }
        CylinderParts::Pieces { pieces, root1, root2 } => {
            let mut alpha: Vec<usize> = Vec::new();
            let mut internal = Vec::new();
            let mut b1 = Vec::new();
            let mut b2_parts = Vec::new();
            for p in pieces {
                let d = &p.disk;
                if d.boundary_count() != 1 || p.first_len == 0 || p.first_len >= d.lengths[0] {
                    return Err(OracleError::Domain("each disk needs edges from both boundaries".into()));
                }
                let off = alpha.len();
                let m = p.length;
                alpha.extend((0..m).map(|j| off + m + j));
                alpha.extend((0..m).map(|j| off + j));
                b1.extend(off..off + m);
                let shared2: Vec<usize> = (0..m).rev().map(|j| off + m + j).collect();
                let doff = alpha.len();
                alpha.extend(d.alpha.iter().map(|&a| a + doff));
                let l = d.lengths[0];
                b1.extend(doff..doff + p.first_len);
                let c_part: Vec<usize> = (doff + p.first_len..doff + l).collect();
                let mut start = doff + l;
                for &f in &d.faces {
                    internal.push((start..start + f).collect());
                    start += f;
                }
                b2_parts.push((c_part, shared2));
            }
            let mut b2 = Vec::new();
            for (c_part, shared2) in b2_parts.into_iter().rev() {
                b2.extend(c_part);
                b2.extend(shared2);
            }
            let (l1, l2) = (b1.len(), b2.len());
            if *root1 >= l1 || *root2 >= l2 {
                return Err(OracleError::Domain("root offset out of range".into()));
            }
            b1.rotate_left((l1 - root1) % l1);
            b2.rotate_left(*root2);
            assemble(&alpha, &[b1, b2], &internal)
        }
    }
}
