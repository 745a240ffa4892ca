use crate::instance::ProblemInstance;
use crate::matrix::MatrixKind;

/// What is known about the Rees algebra of the generic ideal `J`.
///
/// Each flag is `true` when the property is known to hold. Linear type
/// implies fiber type and `td(A_k(J)) = -inf` for all `k`, so both of those
/// flags are set along with it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenericStatus {
    pub linear_type: bool,
    pub fiber_type: bool,
    pub td_finite_all_k: bool,
    pub td_infinite_some_k: bool,
}

impl GenericStatus {
    fn linear() -> Self {
        GenericStatus { linear_type: true, fiber_type: true, td_finite_all_k: true, td_infinite_some_k: false }
    }
}

pub fn generic_status(inst: &ProblemInstance) -> GenericStatus {
    let (m, n, t) = (inst.m, inst.n, inst.t);
    let mut s = GenericStatus::default();
    match inst.kind {
        MatrixKind::Ordinary => {
            if t == 1 || (t == m && n <= m + 1) || (n == m && t + 1 == n) {
                return GenericStatus::linear();
            }
            if t == m {
                s.fiber_type = true;
                s.td_infinite_some_k = true;
            }
            if inst.characteristic == 0 && m == 3 && t == 2 {
                s.fiber_type = true;
            }
            if t == 2 && t < m {
                s.td_finite_all_k = true;
            }
            if 2 < t && t < m && !(t + 1 == m && m == n) {
                s.td_infinite_some_k = true;
            }
        }
        MatrixKind::Symmetric => {
            if t == 1 || t == n || t + 1 == n {
                return GenericStatus::linear();
            }
            if t == 2 {
                s.td_finite_all_k = true;
            }
            if 2 < t && t + 1 < n {
                s.td_infinite_some_k = true;
            }
        }
        MatrixKind::Alternating => {
            let two_t = 2 * t;
            if two_t == 2 || two_t == n || two_t + 1 == n || (two_t + 2 == n && inst.characteristic != 2) {
                return GenericStatus::linear();
            }
            if two_t == 4 {
                s.td_finite_all_k = true;
            }
            if 4 < two_t && two_t + 2 < n {
                s.td_infinite_some_k = true;
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn status(kind: MatrixKind, m: u32, n: u32, t: u32, ch: u64) -> GenericStatus {
        generic_status(&ProblemInstance::new(kind, m, n, t, 1, 1, ch).unwrap())
    }

    #[test]
    fn examples() {
        assert!(status(MatrixKind::Ordinary, 3, 5, 1, 0).linear_type);
        let s = status(MatrixKind::Ordinary, 2, 4, 2, 0);
        assert!(s.fiber_type && s.td_infinite_some_k && !s.linear_type);
        assert!(status(MatrixKind::Alternating, 10, 10, 4, 0).linear_type);
        assert!(!status(MatrixKind::Alternating, 10, 10, 4, 2).linear_type);
        assert!(status(MatrixKind::Ordinary, 4, 4, 3, 5).linear_type);
        assert!(status(MatrixKind::Ordinary, 3, 7, 2, 0).fiber_type);
        assert!(!status(MatrixKind::Ordinary, 3, 7, 2, 7).fiber_type);
        assert!(status(MatrixKind::Ordinary, 3, 7, 2, 7).td_finite_all_k);
        assert!(status(MatrixKind::Ordinary, 4, 5, 3, 0).td_infinite_some_k);
        assert!(!status(MatrixKind::Ordinary, 4, 4, 3, 0).td_infinite_some_k);
        assert!(status(MatrixKind::Symmetric, 5, 5, 3, 0).td_infinite_some_k);
        assert!(status(MatrixKind::Symmetric, 5, 5, 4, 0).linear_type);
        assert!(status(MatrixKind::Alternating, 9, 9, 2, 0).td_finite_all_k);
        assert!(status(MatrixKind::Alternating, 9, 9, 3, 0).td_infinite_some_k);
    }

    #[test]
    fn flags_never_contradict() {
        for n in 1..=9u32 {
            for ch in [0, 2, 3] {
                let mut all = Vec::new();
                for m in 1..=n {
                    for t in 1..=m {
                        all.push(status(MatrixKind::Ordinary, m, n, t, ch));
                    }
                }
                for t in 1..=n {
                    all.push(status(MatrixKind::Symmetric, n, n, t, ch));
                }
                for t in 1..=n / 2 {
                    all.push(status(MatrixKind::Alternating, n, n, t, ch));
                }
                for s in all {
                    assert!(!(s.td_finite_all_k && s.td_infinite_some_k));
                    assert!(!(s.linear_type && s.td_infinite_some_k));
                }
            }
        }
    }
}
