//! Feasibility of difference-constraint systems `x_u - x_v ≤ w` over exact
//! rationals, by Bellman-Ford negative-cycle detection on the constraint
//! graph. Used by the D-class isomorphism search and the Gondran-Minoux
//! solvers.

use num_rational::BigRational;
use num_traits::Zero;

/// A conjunction of constraints `x_u - x_v ≤ w` over variables `0..n_vars`.
#[derive(Debug, Clone)]
pub struct DiffSystem {
    n_vars: usize,
    // (u, v, w) encodes x_u - x_v ≤ w, i.e. edge v -> u of weight w
    constraints: Vec<(usize, usize, BigRational)>,
}

impl DiffSystem {
    pub fn new(n_vars: usize) -> Self {
        DiffSystem {
            n_vars,
            constraints: Vec::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Add `x_u - x_v ≤ w`.
    pub fn add(&mut self, u: usize, v: usize, w: BigRational) {
        debug_assert!(u < self.n_vars && v < self.n_vars);
        self.constraints.push((u, v, w));
    }

    /// Remove the most recently added constraints down to `len`; supports
    /// backtracking searches.
    pub fn truncate(&mut self, len: usize) {
        self.constraints.truncate(len);
    }

    /// Bellman-Ford with a virtual source. Returns a satisfying assignment,
    /// or `None` when the constraint graph has a negative cycle.
    pub fn solve(&self) -> Option<Vec<BigRational>> {
        let n = self.n_vars;
        let mut dist = vec![BigRational::zero(); n];
        // relax n times; a change on the n-th pass means a negative cycle
        for pass in 0..=n {
            let mut changed = false;
            for (u, v, w) in &self.constraints {
                let candidate = &dist[*v] + w;
                if candidate < dist[*u] {
                    dist[*u] = candidate;
                    changed = true;
                }
            }
            if !changed {
                return Some(dist);
            }
            if pass == n {
                return None;
            }
        }
        None
    }

    pub fn feasible(&self) -> bool {
        self.solve().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn simple_feasible() {
        let mut s = DiffSystem::new(3);
        s.add(0, 1, q(2)); // x0 - x1 ≤ 2
        s.add(1, 2, q(-1)); // x1 - x2 ≤ -1
        s.add(2, 0, q(0)); // x2 - x0 ≤ 0
        let sol = s.solve().expect("feasible");
        assert!(&sol[0] - &sol[1] <= q(2));
        assert!(&sol[1] - &sol[2] <= q(-1));
        assert!(&sol[2] - &sol[0] <= q(0));
    }

    #[test]
    fn negative_cycle_detected() {
        let mut s = DiffSystem::new(2);
        s.add(0, 1, q(1)); // x0 - x1 ≤ 1
        s.add(1, 0, q(-2)); // x1 - x0 ≤ -2
        assert!(!s.feasible());
    }

    #[test]
    fn tight_zero_cycle_is_feasible() {
        let mut s = DiffSystem::new(2);
        s.add(0, 1, q(3));
        s.add(1, 0, q(-3));
        let sol = s.solve().expect("zero cycle binds but is satisfiable");
        assert_eq!(&sol[0] - &sol[1], q(3));
    }

    #[test]
    fn truncate_backtracks() {
        let mut s = DiffSystem::new(2);
        s.add(0, 1, q(1));
        let mark = s.len();
        s.add(1, 0, q(-2));
        assert!(!s.feasible());
        s.truncate(mark);
        assert!(s.feasible());
    }
}
