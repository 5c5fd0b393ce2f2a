/// Cells where the printed table disagrees with the exact computation:
/// (table, lengths, q, printed, computed). Each one is re-derived by an
/// independent oracle in `errata_are_confirmed_independently`.
pub const ERRATA: &[(&str, &[usize], usize, u64, u64)] = &[
    ("DISKS", &[6], 8, 130489290, 130498290),
    ("CYL_ORDINARY", &[8, 2], 8, 335602610400, 35602610400),
    ("TORI_ORDINARY", &[8], 5, 34286480, 34286490),
];

/// Compares a computed row with a printed one. Disagreements are allowed only at
/// listed cells, and only if the computed value is the listed one.
pub fn check_row(table: &str, lengths: &[usize], got: &[maprec_core::exactnum::BigRational], printed: &[u64; 9]) -> Result<usize, String> {
    let mut errata_used = 0;
    for (q, want) in printed.iter().enumerate() {
        let g = got[q].to_string();
        if g == want.to_string() {
            continue;
        }
        let listed = ERRATA.iter().find(|e| e.0 == table && e.1 == lengths && e.2 == q && e.3 == *want);
        match listed {
            Some(e) if g == e.4.to_string() => errata_used += 1,
            _ => return Err(format!("{} {:?} Q={}: computed {}, printed {}", table, lengths, q, g, want)),
        }
    }
    Ok(errata_used)
}
