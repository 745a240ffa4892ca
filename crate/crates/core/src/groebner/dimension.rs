use crate::poly::Monomial;

/// Krull dimension of `K[x_1..x_n] / (lt)` for a monomial ideal: the size of
/// the largest set of variables containing the support of no generator.
/// `None` for the unit ideal.
pub fn monomial_ideal_dimension(lt: &[Monomial], nvars: usize) -> Option<usize> {
    assert!(nvars <= 128, "at most 128 variables supported");
    let mut supports: Vec<u128> = Vec::with_capacity(lt.len());
    for m in lt {
        let s = m.support().fold(0u128, |acc, i| acc | (1 << i));
        if s == 0 {
            return None;
        }
        supports.push(s);
    }
    let sets = minimal_sets(supports);
    // complement of an independent set is a hitting set of the supports
    Some(nvars - min_hitting_set(&sets))
}

fn minimal_sets(mut sets: Vec<u128>) -> Vec<u128> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut out: Vec<u128> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&t| t & !s == 0) {
            out.push(s);
        }
    }
    out
}

fn min_hitting_set(sets: &[u128]) -> usize {
    let mut best = sets.iter().fold(0u128, |a, s| a | s).count_ones() as usize;
    search(sets, 0, 0, &mut best);
    best
}

fn search(sets: &[u128], chosen: u128, size: usize, best: &mut usize) {
    let unhit: Vec<u128> = sets.iter().copied().filter(|s| s & chosen == 0).collect();
    if unhit.is_empty() {
        *best = (*best).min(size);
        return;
    }
    // pairwise disjoint unhit sets each need their own element
    let mut used = 0u128;
    let mut packing = 0;
    for s in &unhit {
        if s & used == 0 {
            used |= s;
            packing += 1;
        }
    }
    if size + packing >= *best {
        return;
    }
    let branch = *unhit.iter().min_by_key(|s| s.count_ones()).unwrap();
    let mut bits = branch;
    let mut excluded = 0u128;
    while bits != 0 {
        let v = bits & bits.wrapping_neg();
        bits &= bits - 1;
        // earlier branches already covered hitting sets that use those elements
        let rest: Vec<u128> = sets.iter().map(|s| s & !excluded).collect();
        if rest.contains(&0) {
            break;
        }
        search(&rest, chosen | v, size + 1, best);
        excluded |= v;
    }
}
