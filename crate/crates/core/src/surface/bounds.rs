//! Closed-form crosscap facts: Euler-formula bounds, complete-graph formulas and
//! the composition rule for disjoint unions.

use super::SurfaceError;
use crate::graph::Graph;

/// `⌈q/3⌉ - p + n + 1`, or `⌈q/2⌉ - p + n + 1` for triangle-free graphs, floored at 0.
pub fn crosscap_lower_bound_edges(p: usize, q: usize, n: usize, triangle_free: bool) -> Result<usize, SurfaceError> {
    if p < 3 {
        return Err(SurfaceError::TooFewVertices(p));
    }
    let share = if triangle_free { q.div_ceil(2) } else { q.div_ceil(3) };
    Ok((share + n + 1).saturating_sub(p))
}

/// The edge bound evaluated on `g`.
pub fn edge_bound(g: &Graph) -> Result<usize, SurfaceError> {
    let g = g.simple();
    crosscap_lower_bound_edges(g.p(), g.q(), g.components().len(), g.is_triangle_free())
}

/// Whether `δ(G) ≤ 6 + (6k - 6(n+1))/p`, a necessary condition for `γ̃(G) ≤ k`.
pub fn min_degree_consistency(g: &Graph, k: usize) -> Result<bool, SurfaceError> {
    let p = g.p();
    if p < 3 {
        return Err(SurfaceError::TooFewVertices(p));
    }
    let n = g.components().len() as i64;
    let (p, k, delta) = (p as i64, k as i64, g.min_degree() as i64);
    Ok(p * delta <= 6 * p + 6 * k - 6 * (n + 1))
}

/// `γ̃(K_n)`: `⌈(n-3)(n-4)/6⌉`, except 3 for `n = 7`.
pub fn kn_crosscap(n: usize) -> Result<usize, SurfaceError> {
    if n < 3 {
        return Err(SurfaceError::OutOfRange(format!("K_{n}: need n >= 3")));
    }
    if n == 7 {
        return Ok(3);
    }
    Ok(((n - 3) * (n - 4)).div_ceil(6))
}

/// `γ̃(K_{m,n})`: `⌈(m-2)(n-2)/2⌉`.
pub fn kmn_crosscap(m: usize, n: usize) -> Result<usize, SurfaceError> {
    if m < 2 || n < 2 {
        return Err(SurfaceError::OutOfRange(format!("K_{m},{n}: need m, n >= 2")));
    }
    Ok(((m - 2) * (n - 2)).div_ceil(2))
}

/// Crosscap number of a disjoint union from exact `(γ̃ᵢ, γᵢ)` per component.
///
/// If `γ̃ᵢ > 2γᵢ` for every component the value is `1 - n + Σγ̃ᵢ`; otherwise it
/// is `2n - Σμᵢ` with `μᵢ = max(2 - 2γᵢ, 2 - γ̃ᵢ)`.
pub fn stahl_compose(parts: &[(Option<usize>, Option<usize>)]) -> Result<usize, SurfaceError> {
    let exact: Vec<(i64, i64)> = parts
        .iter()
        .map(|&(c, g)| match (c, g) {
            (Some(c), Some(g)) => Ok((c as i64, g as i64)),
            _ => Err(SurfaceError::InexactInput),
        })
        .collect::<Result<_, _>>()?;
    if exact.is_empty() {
        return Err(SurfaceError::OutOfRange("no components".into()));
    }
    let n = exact.len() as i64;
    let value = if exact.iter().all(|&(c, g)| c > 2 * g) {
        1 - n + exact.iter().map(|&(c, _)| c).sum::<i64>()
    } else {
        2 * n - exact.iter().map(|&(c, g)| (2 - 2 * g).max(2 - c)).sum::<i64>()
    };
    Ok(value as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn edge_bounds() {
        assert_eq!(crosscap_lower_bound_edges(10, 20, 1, true).unwrap(), 2);
        assert_eq!(crosscap_lower_bound_edges(7, 21, 1, false).unwrap(), 2);
        assert_eq!(crosscap_lower_bound_edges(16, 48, 1, true).unwrap(), 10);
        assert_eq!(crosscap_lower_bound_edges(8, 16, 1, true).unwrap(), 2);
        assert_eq!(crosscap_lower_bound_edges(4, 3, 1, true).unwrap(), 0);
        assert!(crosscap_lower_bound_edges(2, 1, 1, true).is_err());
    }

    #[test]
    fn min_degree_checks() {
        assert!(min_degree_consistency(&complete_graph(5), 1).unwrap());
        assert!(min_degree_consistency(&complete_graph(7), 3).unwrap());
        assert!(!min_degree_consistency(&complete_graph(7), 1).unwrap());
    }

    #[test]
    fn formulas() {
        assert_eq!(kn_crosscap(7).unwrap(), 3);
        assert_eq!(kn_crosscap(5).unwrap(), 1);
        assert_eq!(kn_crosscap(6).unwrap(), 1);
        assert_eq!(kn_crosscap(4).unwrap(), 0);
        assert_eq!(kn_crosscap(8).unwrap(), 4);
        assert_eq!(kmn_crosscap(4, 4).unwrap(), 2);
        assert_eq!(kmn_crosscap(3, 3).unwrap(), 1);
        assert_eq!(kmn_crosscap(3, 4).unwrap(), 1);
        assert_eq!(kmn_crosscap(3, 6).unwrap(), 2);
    }

    #[test]
    fn composition() {
        assert_eq!(stahl_compose(&[(Some(1), Some(1)), (Some(1), Some(1))]).unwrap(), 2);
        assert_eq!(stahl_compose(&[(Some(0), Some(0)); 3]).unwrap(), 0);
        // both components with γ̃ = t > 2γ
        assert_eq!(stahl_compose(&[(Some(3), Some(1)), (Some(3), Some(1))]).unwrap(), 5);
        assert_eq!(stahl_compose(&[(Some(1), None)]), Err(SurfaceError::InexactInput));
    }
}
