//! Brute-force enumeration of maps in the permutational model.
//!
//! Half-edges are laid out face by face: the rooted boundaries first (root
//! first, then in face order), then the internal faces. The face permutation
//! `φ` is therefore fixed and only the edge involution `α` varies; vertices are
//! the cycles of `σ = φ⁻¹ ∘ α`, and the cycle of `h` is the vertex where `h`
//! ends and `φ(h)` starts.

mod cylinder;
mod disk;

use alloc::collections::VecDeque;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use crate::extract::Family;
pub use cylinder::{cylinder_compose, cylinder_decompose, CylinderParts, SharedPiece};
pub use disk::{disk_compose, disk_decompose, DiskParts};

pub const DEFAULT_H_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The requested maps have more half-edges than the cap allows.
    TooLarge { required: usize, cap: usize },
    /// The input map is not of the kind the operation needs.
    Domain(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { required, cap } => {
                write!(f, "{} half-edges required, cap is {}", required, cap)
            }
            OracleError::Domain(s) => f.write_str(s),
        }
    }
}

/// A map with rooted boundaries, encoded by `(φ, α)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CombMap {
    /// Boundary lengths; a length-0 boundary is the single-vertex map.
    pub lengths: Vec<usize>,
    /// Degrees of the internal faces.
    pub faces: Vec<usize>,
    pub phi: Vec<usize>,
    pub alpha: Vec<usize>,
}

fn block_phi(lengths: &[usize], faces: &[usize]) -> Vec<usize> {
    let mut phi = Vec::new();
    let mut start = 0;
    for &d in lengths.iter().chain(faces) {
        for i in 0..d {
            phi.push(start + (i + 1) % d);
        }
        start += d;
    }
    phi
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Labels each half-edge by the cycle of `p` containing it; returns the labels and the cycle count.
fn cycle_labels(p: &[usize]) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; p.len()];
    let mut count = 0;
    for s in 0..p.len() {
        if label[s] != usize::MAX {
            continue;
        }
        let mut h = s;
        while label[h] == usize::MAX {
            label[h] = count;
            h = p[h];
        }
        count += 1;
    }
    (label, count)
}

impl CombMap {
    pub fn new(lengths: Vec<usize>, faces: Vec<usize>, alpha: Vec<usize>) -> Result<Self, OracleError> {
        let h: usize = lengths.iter().chain(&faces).sum();
        if alpha.len() != h {
            return Err(OracleError::Domain(alloc::format!("α has {} entries, faces need {}", alpha.len(), h)));
        }
        for (i, &j) in alpha.iter().enumerate() {
            if j >= h || j == i || alpha[j] != i {
                return Err(OracleError::Domain(alloc::format!("α is not a fixed-point-free involution at {}", i)));
            }
        }
        if lengths.contains(&0) && h > 0 {
            return Err(OracleError::Domain("a length-0 boundary must be the single-vertex map".into()));
        }
        let phi = block_phi(&lengths, &faces);
        Ok(CombMap { lengths, faces, phi, alpha })
    }

    /// The single-vertex map, the disk of length 0.
    pub fn vertex() -> Self {
        CombMap { lengths: vec![0], faces: Vec::new(), phi: Vec::new(), alpha: Vec::new() }
    }

    pub fn half_edges(&self) -> usize {
        self.alpha.len()
    }

    pub fn boundary_count(&self) -> usize {
        self.lengths.len()
    }

    /// First half-edge of boundary `i` (its root).
    pub fn root(&self, i: usize) -> usize {
        self.lengths[..i].iter().sum()
    }

    /// Half-edges of boundary `i` in face order, starting at the root.
    pub fn boundary(&self, i: usize) -> Vec<usize> {
        let r = self.root(i);
        (r..r + self.lengths[i]).collect()
    }

    pub fn sigma(&self) -> Vec<usize> {
        let inv = inverse(&self.phi);
        self.alpha.iter().map(|&a| inv[a]).collect()
    }

    /// Vertex label of every half-edge and the number of vertices.
    pub fn vertices(&self) -> (Vec<usize>, usize) {
        if self.alpha.is_empty() {
            return (Vec::new(), 1);
        }
        cycle_labels(&self.sigma())
    }

    pub fn is_connected(&self) -> bool {
        components(&self.phi, &self.alpha).1 <= 1
    }

    /// `V - E + F`, boundaries counted as faces.
    pub fn euler(&self) -> i64 {
        let v = self.vertices().1 as i64;
        let e = (self.half_edges() / 2) as i64;
        let f = (self.lengths.len() + self.faces.len()) as i64;
        v - e + f
    }

    /// Genus of a connected map.
    pub fn genus(&self) -> usize {
        ((2 - self.euler()) / 2) as usize
    }

    pub fn classify(&self) -> Classification {
        let (vert, nv) = self.vertices();
        let n = self.lengths.len();
        let mut simple = vec![true; n];
        let mut seen = vec![usize::MAX; nv];
        let mut fully = vec![true; n];
        for i in 0..n {
            for h in self.boundary(i) {
                let v = vert[h];
                if seen[v] == i {
                    simple[i] = false;
                } else if seen[v] != usize::MAX {
                    fully[i] = false;
                    fully[seen[v]] = false;
                }
                seen[v] = i;
            }
        }
        for i in 0..n {
            fully[i] &= simple[i];
        }
        Classification { simple, fully_simple: fully }
    }

    /// Relabels internal half-edges by breadth-first discovery from the first root.
    pub fn canonical(&self) -> CombMap {
        let h = self.half_edges();
        let nb: usize = self.lengths.iter().sum();
        let mut face_of = vec![0; h];
        let mut start = 0;
        for (f, &d) in self.lengths.iter().chain(&self.faces).enumerate() {
            for x in start..start + d {
                face_of[x] = f;
            }
            start += d;
        }
        let mut new = vec![usize::MAX; h];
        let mut order: Vec<usize> = (0..nb).collect();
        for x in 0..nb {
            new[x] = x;
        }
        let mut faces = Vec::new();
        let mut next = nb;
        let mut i = 0;
        while i < order.len() {
            let a = self.alpha[order[i]];
            i += 1;
            if new[a] != usize::MAX {
                continue;
            }
            let f = face_of[a];
            let d = self.faces[f - self.lengths.len()];
            faces.push(d);
            let mut x = a;
            for _ in 0..d {
                new[x] = next;
                order.push(x);
                next += 1;
                x = self.phi[x];
            }
        }
        debug_assert!(next == h, "every component must contain a boundary");
        let mut alpha = vec![0; h];
        for x in 0..h {
            alpha[new[x]] = new[self.alpha[x]];
        }
        let phi = block_phi(&self.lengths, &faces);
        CombMap { lengths: self.lengths.clone(), faces, phi, alpha }
    }

    /// One line: the cycles of `φ` then the pairs of `α`, labels from 1.
    pub fn to_line(&self) -> String {
        let mut s = String::new();
        let mut start = 0;
        for &d in self.lengths.iter().chain(&self.faces) {
            let cyc: Vec<String> = (start + 1..=start + d).map(|x| alloc::format!("{}", x)).collect();
            s.push_str(&alloc::format!("({})", cyc.join(" ")));
            start += d;
        }
        s.push_str(" |");
        for (x, &y) in self.alpha.iter().enumerate() {
            if x < y {
                s.push_str(&alloc::format!(" ({} {})", x + 1, y + 1));
            }
        }
        s
    }
}

/// Connected-component label of every half-edge under `⟨φ, α⟩`.
fn components(phi: &[usize], alpha: &[usize]) -> (Vec<usize>, usize) {
    let h = phi.len();
    let mut comp = vec![usize::MAX; h];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..h {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for y in [phi[x], alpha[x]] {
                if comp[y] == usize::MAX {
                    comp[y] = count;
                    queue.push_back(y);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub simple: Vec<bool>,
    pub fully_simple: Vec<bool>,
}

impl Classification {
    pub fn is_simple(&self) -> bool {
        self.simple.iter().all(|&b| b)
    }

    pub fn is_fully_simple(&self) -> bool {
        self.fully_simple.iter().all(|&b| b)
    }

    pub fn matches(&self, family: Family) -> bool {
        match family {
            Family::Ordinary => true,
            Family::Mixed => self.simple.first().copied().unwrap_or(true),
            Family::Simple => self.is_simple(),
            Family::FullySimple => self.is_fully_simple(),
        }
    }
}

/// What to count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub genus: usize,
    pub lengths: Vec<usize>,
    /// Degrees of the internal faces.
    pub faces: Vec<usize>,
    /// When false, every component only needs to contain a boundary and `genus`
    /// constrains the total Euler characteristic `2 - 2g`.
    pub connected: bool,
    pub class: Family,
    pub cap: usize,
}

impl EnumSpec {
    pub fn quadrangulation(genus: usize, lengths: &[usize], quads: usize, class: Family) -> Self {
        EnumSpec { genus, lengths: lengths.to_vec(), faces: vec![4; quads], connected: true, class, cap: DEFAULT_H_CAP }
    }

    pub fn half_edges(&self) -> usize {
        self.lengths.iter().chain(&self.faces).sum()
    }

    /// Number of labelings of the internal faces that fix the face permutation.
    pub fn relabelings(&self) -> u64 {
        let mut degs = self.faces.clone();
        degs.sort_unstable();
        let mut out: u64 = 1;
        let mut i = 0;
        while i < degs.len() {
            let mut j = i;
            while j < degs.len() && degs[j] == degs[i] {
                j += 1;
            }
            for k in 1..=(j - i) as u64 {
                out *= k * degs[i] as u64;
            }
            i = j;
        }
        out
    }

    fn check(&self) -> Result<(), OracleError> {
        let h = self.half_edges();
        if h > self.cap {
            return Err(OracleError::TooLarge { required: h, cap: self.cap });
        }
        if self.lengths.is_empty() {
            return Err(OracleError::Domain("closed maps are not enumerated".into()));
        }
        if self.lengths.contains(&0) {
            return Err(OracleError::Domain("boundaries must have positive length".into()));
        }
        Ok(())
    }

    /// Partners that half-edge 0 can be paired with; each starts an independent branch.
    pub fn first_choices(&self) -> Vec<usize> {
        (1..self.half_edges()).collect()
    }
}

/// Calls `f` on every fixed-point-free involution of `0..h`, pairing the
/// smallest free half-edge first; `first` fixes the partner of 0.
pub fn for_each_involution(h: usize, first: Option<usize>, mut f: impl FnMut(&[usize])) {
    fn go(alpha: &mut [usize], from: usize, f: &mut impl FnMut(&[usize])) {
        let h = alpha.len();
        let mut x = from;
        while x < h && alpha[x] != usize::MAX {
            x += 1;
        }
        if x == h {
            f(alpha);
            return;
        }
        for y in x + 1..h {
            if alpha[y] == usize::MAX {
                alpha[x] = y;
                alpha[y] = x;
                go(alpha, x + 1, f);
                alpha[y] = usize::MAX;
            }
        }
        alpha[x] = usize::MAX;
    }
    if h % 2 == 1 {
        return;
    }
    let mut alpha = vec![usize::MAX; h];
    match first {
        None => go(&mut alpha, 0, &mut f),
        Some(y) if y > 0 && y < h => {
            alpha[0] = y;
            alpha[y] = 0;
            go(&mut alpha, 1, &mut f);
        }
        Some(_) => {}
    }
}

/// Face layout shared by all leaves of one search.
struct Layout {
    lengths: Vec<usize>,
    faces: Vec<usize>,
    phi: Vec<usize>,
    phi_inv: Vec<usize>,
}

/// What a leaf looks like: components, Euler characteristic and boundary classes.
struct Leaf {
    connected: bool,
    boundary_components: bool,
    euler: i64,
    simple: Vec<bool>,
    fully_simple: bool,
}

impl Layout {
    fn new(lengths: &[usize], faces: &[usize]) -> Self {
        let phi = block_phi(lengths, faces);
        Layout { lengths: lengths.to_vec(), faces: faces.to_vec(), phi_inv: inverse(&phi), phi }
    }

    fn analyze(&self, alpha: &[usize]) -> Leaf {
        let h = alpha.len();
        let (comp, nc) = components(&self.phi, alpha);
        let mut has = vec![false; nc];
        let mut r = 0;
        for &l in &self.lengths {
            has[comp[r]] = true;
            r += l;
        }
        let sigma: Vec<usize> = alpha.iter().map(|&a| self.phi_inv[a]).collect();
        let (vert, nv) = cycle_labels(&sigma);
        let euler = nv as i64 - (h / 2) as i64 + (self.lengths.len() + self.faces.len()) as i64;
        let mut seen = vec![usize::MAX; nv];
        let mut simple = vec![true; self.lengths.len()];
        let mut fully_simple = true;
        let mut start = 0;
        for (i, &l) in self.lengths.iter().enumerate() {
            for x in start..start + l {
                let v = vert[x];
                if seen[v] == i {
                    simple[i] = false;
                } else if seen[v] != usize::MAX {
                    fully_simple = false;
                }
                seen[v] = i;
            }
            start += l;
        }
        fully_simple &= simple.iter().all(|&b| b);
        Leaf { connected: nc == 1, boundary_components: has.iter().all(|&b| b), euler, simple, fully_simple }
    }

    fn map(&self, alpha: &[usize]) -> CombMap {
        CombMap { lengths: self.lengths.clone(), faces: self.faces.clone(), phi: self.phi.clone(), alpha: alpha.to_vec() }
    }
}

impl Leaf {
    fn matches(&self, class: Family) -> bool {
        match class {
            Family::Ordinary => true,
            Family::Mixed => self.simple[0],
            Family::Simple => self.simple.iter().all(|&b| b),
            Family::FullySimple => self.fully_simple,
        }
    }
}

/// Number of labeled `α` in the branch where half-edge 0 is paired with `first`
/// (all branches when `first` is `None`), calling `visit` on each.
pub fn enumerate_branch(spec: &EnumSpec, first: Option<usize>, mut visit: impl FnMut(&CombMap)) -> Result<u64, OracleError> {
    spec.check()?;
    let lay = Layout::new(&spec.lengths, &spec.faces);
    let chi = 2 - 2 * spec.genus as i64;
    let mut count = 0;
    for_each_involution(spec.half_edges(), first, |alpha| {
        let leaf = lay.analyze(alpha);
        let ok = if spec.connected { leaf.connected } else { leaf.boundary_components };
        if ok && leaf.euler == chi && leaf.matches(spec.class) {
            count += 1;
            visit(&lay.map(alpha));
        }
    });
    Ok(count)
}

/// Divides a labeled count by the internal relabelings.
pub fn normalize(spec: &EnumSpec, labeled: u64) -> u64 {
    let rel = spec.relabelings();
    assert!(labeled % rel == 0, "labeled count {} not divisible by {}", labeled, rel);
    labeled / rel
}

/// Number of unlabeled maps matching `spec`.
pub fn enumerate(spec: &EnumSpec) -> Result<u64, OracleError> {
    Ok(normalize(spec, enumerate_branch(spec, None, |_| {})?))
}

/// As [`enumerate`], calling `visit` on one representative labeling per map
/// (the canonical form).
pub fn enumerate_with(spec: &EnumSpec, mut visit: impl FnMut(&CombMap)) -> Result<u64, OracleError> {
    let rel = spec.relabelings();
    if rel == 1 {
        return enumerate_branch(spec, None, |m| visit(m));
    }
    let mut reps = alloc::collections::BTreeSet::new();
    let n = enumerate_branch(spec, None, |m| {
        let c = m.canonical();
        if !reps.contains(&c.alpha) {
            visit(&c);
            reps.insert(c.alpha);
        }
    })?;
    Ok(normalize(spec, n))
}

/// Builds a map from cycles of old half-edge labels: `boundaries` in order, then `internal`.
fn assemble(alpha: &[usize], boundaries: &[Vec<usize>], internal: &[Vec<usize>]) -> Result<CombMap, OracleError> {
    let mut new = alloc::collections::BTreeMap::new();
    for x in boundaries.iter().chain(internal).flatten() {
        let k = new.len();
        new.insert(*x, k);
    }
    let mut a = vec![0; new.len()];
    for (&x, &i) in &new {
        match new.get(&alpha[x]) {
            Some(&j) => a[i] = j,
            None => return Err(OracleError::Domain("edge leaves the piece".into())),
        }
    }
    let lengths = boundaries.iter().map(|b| b.len()).collect();
    let faces = internal.iter().map(|f| f.len()).collect();
    if boundaries.len() == 1 && boundaries[0].is_empty() && internal.is_empty() {
        return Ok(CombMap::vertex());
    }
    Ok(CombMap::new(lengths, faces, a)?.canonical())
}

/// Replaces the boundaries of `m` by `boundaries` (cycles of old labels, some
/// half-edges possibly dropped) and returns, for every new boundary, its
/// connected component as a one-boundary map. Fails unless the new boundaries
/// lie in distinct components covering everything retained.
fn split_boundaries(m: &CombMap, boundaries: &[Vec<usize>]) -> Result<Vec<CombMap>, OracleError> {
    let h = m.half_edges();
    let nb: usize = m.lengths.iter().sum();
    let mut phi: Vec<usize> = (0..h).collect();
    let mut kept = vec![false; h];
    for x in nb..h {
        phi[x] = m.phi[x];
        kept[x] = true;
    }
    for b in boundaries {
        for (i, &x) in b.iter().enumerate() {
            phi[x] = b[(i + 1) % b.len()];
            kept[x] = true;
        }
    }
    let alpha: Vec<usize> = (0..h).map(|x| if kept[x] { m.alpha[x] } else { x }).collect();
    for x in 0..h {
        if kept[x] && !kept[alpha[x]] {
            return Err(OracleError::Domain("dropped half-edge has a retained partner".into()));
        }
    }
    let (comp, _) = components(&phi, &alpha);
    let mut faces_of: Vec<Vec<Vec<usize>>> = vec![Vec::new(); boundaries.len()];
    let mut owner = alloc::collections::BTreeMap::new();
    for (i, b) in boundaries.iter().enumerate() {
        if let Some(&x) = b.first() {
            if owner.insert(comp[x], i).is_some() {
                return Err(OracleError::Domain("two boundaries in one component".into()));
            }
        }
    }
    let mut start = nb;
    for &d in &m.faces {
        match owner.get(&comp[start]) {
            Some(&i) => faces_of[i].push((start..start + d).collect()),
            None => return Err(OracleError::Domain("component without a boundary".into())),
        }
        start += d;
    }
    boundaries
        .iter()
        .zip(&faces_of)
        .map(|(b, f)| assemble(&m.alpha, core::slice::from_ref(b), f))
        .collect()
}

const CLASSES: [Family; 4] = [Family::Ordinary, Family::Mixed, Family::Simple, Family::FullySimple];

/// Labeled counts of connected maps with given faces, by genus and boundary class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub lengths: Vec<usize>,
    pub faces: Vec<usize>,
    labeled: alloc::collections::BTreeMap<usize, [u64; 4]>,
}

impl Census {
    pub fn merge(&mut self, other: &Census) {
        for (g, c) in &other.labeled {
            let e = self.labeled.entry(*g).or_insert([0; 4]);
            for i in 0..4 {
                e[i] += c[i];
            }
        }
    }

    /// Number of unlabeled maps of genus `g` in `class`.
    pub fn count(&self, g: usize, class: Family) -> u64 {
        let i = CLASSES.iter().position(|&c| c == class).unwrap();
        let spec = EnumSpec { genus: g, lengths: self.lengths.clone(), faces: self.faces.clone(), connected: true, class, cap: usize::MAX };
        normalize(&spec, self.labeled.get(&g).map_or(0, |c| c[i]))
    }

    pub fn genera(&self) -> Vec<usize> {
        self.labeled.keys().copied().collect()
    }
}

/// One branch of [`census`]; branches are independent and merge by summation.
pub fn census_branch(lengths: &[usize], faces: &[usize], cap: usize, first: Option<usize>) -> Result<Census, OracleError> {
    let spec = EnumSpec { genus: 0, lengths: lengths.to_vec(), faces: faces.to_vec(), connected: true, class: Family::Ordinary, cap };
    spec.check()?;
    let lay = Layout::new(lengths, faces);
    let mut out = Census { lengths: lengths.to_vec(), faces: faces.to_vec(), labeled: Default::default() };
    for_each_involution(spec.half_edges(), first, |alpha| {
        let leaf = lay.analyze(alpha);
        if !leaf.connected {
            return;
        }
        let g = ((2 - leaf.euler) / 2) as usize;
        let e = out.labeled.entry(g).or_insert([0; 4]);
        for (i, &c) in CLASSES.iter().enumerate() {
            if leaf.matches(c) {
                e[i] += 1;
            }
        }
    });
    Ok(out)
}

pub fn census(lengths: &[usize], faces: &[usize], cap: usize) -> Result<Census, OracleError> {
    census_branch(lengths, faces, cap, None)
}
