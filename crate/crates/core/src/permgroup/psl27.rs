//! PSL(2,7) from Möbius maps on the projective line over F_7.

use std::sync::OnceLock;

use super::group::{group_closure, PermGroup};
use super::lattice::coset_action;
use super::perm::Perm;

/// Point 7 stands for infinity.
const INF: usize = 7;

/// PSL(2,7) acting on the 8 points of P^1(F_7), generated by
/// `x -> x + 1` and `x -> -1/x`.
pub fn psl27_on_projective_line() -> PermGroup {
    let t: Vec<usize> = (0..8).map(|x| if x == INF { INF } else { (x + 1) % 7 }).collect();
    let s: Vec<usize> = (0..8)
        .map(|x| match x {
            INF => 0,
            0 => INF,
            // -1/x = -(x^5) mod 7
            _ => (7 - (1..7).find(|y| (x * y) % 7 == 1).expect("unit")) % 7,
        })
        .collect();
    let gens = [Perm::new(t).expect("translation"), Perm::new(s).expect("inversion")];
    group_closure(&gens, 8).expect("order 168")
}

/// The degree-7 action of PSL(2,7) on the cosets of the first (in
/// canonical subgroup order) class of subgroups isomorphic to S4. Cached.
pub fn psl27_on_7_points() -> &'static PermGroup {
    static G: OnceLock<PermGroup> = OnceLock::new();
    G.get_or_init(|| {
        let g8 = psl27_on_projective_line();
        let s4 = g8
            .subgroup_classes()
            .iter()
            .find(|c| c.order == 24)
            .expect("index-7 subgroup");
        let act = coset_action(&g8, &s4.representative).expect("subgroup of g8");
        assert_eq!(act.kernel_size, 1);
        act.group
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_line_action() {
        let g = psl27_on_projective_line();
        assert_eq!(g.order(), 168);
        assert!(g.is_transitive());
    }

    #[test]
    fn seven_point_action() {
        let g = psl27_on_7_points();
        assert_eq!(g.order(), 168);
        assert_eq!(g.degree(), 7);
        assert!(g.is_transitive());
        let types: Vec<String> = g.cycle_types().iter().map(|c| c.to_string()).collect();
        assert_eq!(types, vec!["1^7", "1^3 2^2", "1 2 4", "1 3^2", "7"]);
    }
}
