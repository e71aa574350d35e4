//! Closed-form answers and explicit codes for named graph families.
//!
//! Vertex `v_j` in the comments is index `j - 1`.

use crate::error::{Error, Result};
use crate::graph::CodeSet;

/// P_n (n >= 2) has a code iff n mod 4 != 1.
pub fn path_decider(n: usize) -> bool {
    n % 4 != 1
}

/// The code built from alternating edge pairs:
/// n = 0 mod 4: v2 v3, v6 v7, ..; n = 2, 3 mod 4: v1 v2, v5 v6, ..
pub fn path_code(n: usize) -> Result<CodeSet> {
    if n < 2 || !path_decider(n) {
        return Err(Error::Precondition(format!("P_{n} has no total perfect code")));
    }
    let keep: &[usize] = if n % 4 == 0 { &[2, 3] } else { &[1, 2] };
    Ok((1..=n).filter(|j| keep.contains(&(j % 4))).map(|j| j - 1).collect())
}

/// C_n (n >= 3) has a code iff n = 0 mod 4.
pub fn cycle_decider(n: usize) -> bool {
    n % 4 == 0
}

/// v1 v2, v5 v6, .., v_{n-3} v_{n-2}.
pub fn cycle_code(n: usize) -> Result<CodeSet> {
    if n < 3 || !cycle_decider(n) {
        return Err(Error::Precondition(format!("C_{n} has no total perfect code")));
    }
    Ok((1..=n).filter(|j| matches!(j % 4, 1 | 2)).map(|j| j - 1).collect())
}

/// K_n (n >= 2) has a code iff n = 2.
pub fn complete_decider(n: usize) -> bool {
    n == 2
}

/// First vertex of each side of K_{m,n}.
pub fn complete_bipartite_code(m: usize, n: usize) -> Result<CodeSet> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("K_{m,n} needs m, n >= 1".into()));
    }
    Ok(CodeSet::new(vec![0, m]))
}
