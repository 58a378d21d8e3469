//! Binomials of the edge ring: pairs of monomials in the edge variables,
//! stored in reduced form (disjoint supports).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Graph, Walk, WalkError};

/// `plus − minus` as exponent maps over edge indices. Always reduced:
/// the two supports are disjoint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Binomial {
    plus: BTreeMap<usize, u32>,
    minus: BTreeMap<usize, u32>,
}

impl Binomial {
    /// Reduce the two exponent maps against each other and drop zeros.
    pub fn new(plus: BTreeMap<usize, u32>, minus: BTreeMap<usize, u32>) -> Binomial {
        let mut p = BTreeMap::new();
        let mut m = BTreeMap::new();
        let keys: Vec<usize> = plus.keys().chain(minus.keys()).copied().collect();
        for k in keys {
            let a = plus.get(&k).copied().unwrap_or(0);
            let b = minus.get(&k).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Greater => {
                    p.insert(k, a - b);
                }
                Ordering::Less => {
                    m.insert(k, b - a);
                }
                Ordering::Equal => {}
            }
        }
        Binomial { plus: p, minus: m }
    }

    /// Build from a signed integer exponent vector: positive entries go to
    /// the plus side.
    pub fn from_vector(v: &[i64]) -> Binomial {
        let mut plus = BTreeMap::new();
        let mut minus = BTreeMap::new();
        for (i, &x) in v.iter().enumerate() {
            match x.cmp(&0) {
                Ordering::Greater => {
                    plus.insert(i, x as u32);
                }
                Ordering::Less => {
                    minus.insert(i, (-x) as u32);
                }
                Ordering::Equal => {}
            }
        }
        Binomial { plus, minus }
    }

    pub fn zero() -> Binomial {
        Binomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    pub fn plus(&self) -> &BTreeMap<usize, u32> {
        &self.plus
    }

    pub fn minus(&self) -> &BTreeMap<usize, u32> {
        &self.minus
    }

    /// `plus − minus` as a dense vector over `m` edges.
    pub fn to_vector(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0i64; m];
        for (&e, &k) in &self.plus {
            v[e] = k as i64;
        }
        for (&e, &k) in &self.minus {
            v[e] = -(k as i64);
        }
        v
    }

    /// Union of the two monomial supports, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.plus.keys().chain(self.minus.keys()).copied().collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Total degree of the plus monomial.
    pub fn degree(&self) -> u32 {
        self.plus.values().sum()
    }

    /// True iff every exponent on both sides is at most 1.
    pub fn is_square_free(&self) -> bool {
        self.plus.values().chain(self.minus.values()).all(|&k| k <= 1)
    }

    pub fn swapped(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Canonical sign: the lexicographically larger monomial (as an exponent
    /// vector over ascending edge indices) becomes the plus side.
    pub fn sign_normalized(&self) -> Binomial {
        if monomial_lex_cmp(&self.plus, &self.minus) == Ordering::Less {
            self.swapped()
        } else {
            self.clone()
        }
    }

    /// True iff `other`'s plus divides our plus and `other`'s minus divides
    /// our minus, componentwise.
    pub fn divides_sidewise(&self, other: &Binomial) -> bool {
        monomial_divides(&other.plus, &self.plus) && monomial_divides(&other.minus, &self.minus)
    }

    /// True iff the exponent vector lies in the kernel of the incidence
    /// matrix of `g` (A-homogeneity).
    pub fn is_homogeneous(&self, g: &Graph) -> bool {
        let v = self.to_vector(g.edge_count());
        g.incidence_matrix().apply(&v).iter().all(|&x| x == 0)
    }

    /// Render as e.g. `e1*e3 - e2*e4^2` with 1-based edge labels. The zero
    /// binomial renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        format!(
            "{} - {}",
            render_monomial(&self.plus),
            render_monomial(&self.minus)
        )
    }
}

fn render_monomial(m: &BTreeMap<usize, u32>) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    m.iter()
        .map(|(&e, &k)| {
            if k == 1 {
                format!("e{}", e + 1)
            } else {
                format!("e{}^{}", e + 1, k)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn monomial_divides(a: &BTreeMap<usize, u32>, b: &BTreeMap<usize, u32>) -> bool {
    a.iter().all(|(k, &ka)| b.get(k).copied().unwrap_or(0) >= ka)
}

fn monomial_lex_cmp(a: &BTreeMap<usize, u32>, b: &BTreeMap<usize, u32>) -> Ordering {
    let mut keys: Vec<usize> = a.keys().chain(b.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    for k in keys {
        let ka = a.get(&k).copied().unwrap_or(0);
        let kb = b.get(&k).copied().unwrap_or(0);
        match ka.cmp(&kb) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The binomial of an even closed walk: odd-position edges on the plus side,
/// even-position edges on the minus side, reduced.
pub fn walk_binomial(w: &Walk) -> Result<Binomial, WalkError> {
    if !w.is_closed() {
        return Err(WalkError::NotClosed);
    }
    if !w.is_even() || w.is_empty() {
        return Err(WalkError::OddLength);
    }
    let mut plus: BTreeMap<usize, u32> = BTreeMap::new();
    let mut minus: BTreeMap<usize, u32> = BTreeMap::new();
    for (j, &e) in w.edges().iter().enumerate() {
        let side = if j % 2 == 0 { &mut plus } else { &mut minus };
        *side.entry(e).or_insert(0) += 1;
    }
    Ok(Binomial::new(plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use std::collections::BTreeMap;

    fn bn(plus: &[(usize, u32)], minus: &[(usize, u32)]) -> Binomial {
        Binomial::new(
            plus.iter().copied().collect::<BTreeMap<_, _>>(),
            minus.iter().copied().collect::<BTreeMap<_, _>>(),
        )
    }

    #[test]
    fn four_cycle_walk_binomial() {
        let g = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = Walk::from_vertices(&g, vec![0, 1, 2, 3, 0]).unwrap();
        let b = walk_binomial(&w).unwrap();
        assert_eq!(b, bn(&[(0, 1), (2, 1)], &[(1, 1), (3, 1)]));
        assert!(b.is_square_free());
        assert!(b.is_homogeneous(&g));
    }

    // Bowtie: triangles {0,1,2} and {0,3,4} sharing vertex 0.
    // Walk through both triangles, length 6: a1*a3*b2 - a2*b1*b3.
    #[test]
    fn bowtie_walk_binomial() {
        let g = Graph::from_indices(
            5,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
        )
        .unwrap();
        let w = Walk::from_vertices(&g, vec![0, 1, 2, 0, 3, 4, 0]).unwrap();
        let b = walk_binomial(&w).unwrap();
        // positions: e0,e1,e2,e3,e4,e5 -> plus {e0,e2,e4}, minus {e1,e3,e5}
        assert_eq!(b, bn(&[(0, 1), (2, 1), (4, 1)], &[(1, 1), (3, 1), (5, 1)]));
        assert!(b.is_square_free());
        assert_eq!(b.degree(), 3);
        assert!(b.is_homogeneous(&g));
    }

    // Dumbbell: triangles {0,1,2}, {4,5,6} joined by bridge 2-4 (edge 3).
    // The length-8 walk gives a1*a3*b1*b3 - a2*b2*eps^2.
    #[test]
    fn dumbbell_walk_binomial_not_square_free() {
        let g = Graph::from_indices(
            7,
            &[
                (0, 1), // a1
                (1, 2), // a2
                (2, 0), // a3
                (2, 4), // eps
                (4, 5), // b1
                (5, 6), // b2
                (6, 4), // b3
            ],
        )
        .unwrap();
        let w = Walk::from_vertices(&g, vec![0, 1, 2, 4, 5, 6, 4, 2, 0]).unwrap();
        let b = walk_binomial(&w).unwrap();
        // plus positions 0,2,4,6: e0,e3? -> edges: e0,e3,e5,e3?? trace:
        // edges in order: a1(0), a2(1), eps(3), b1(4), b2(5), b3(6), eps(3), a3(2)
        // plus: a1, eps, b2, eps -> a1 * b2 * eps^2 ; minus: a2, b1, b3, a3
        assert_eq!(
            b,
            bn(&[(0, 1), (3, 2), (5, 1)], &[(1, 1), (2, 1), (4, 1), (6, 1)])
        );
        assert!(!b.is_square_free());
        assert!(b.is_homogeneous(&g));
    }

    #[test]
    fn zero_binomial_is_square_free() {
        assert!(Binomial::zero().is_square_free());
    }

    #[test]
    fn reversal_swaps_sides() {
        let g = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = Walk::from_vertices(&g, vec![0, 1, 2, 3, 0]).unwrap();
        let b = walk_binomial(&w).unwrap();
        let br = walk_binomial(&w.reversed()).unwrap();
        assert_eq!(br, b.swapped());
    }

    #[test]
    fn odd_or_open_walks_rejected() {
        let g = Graph::from_indices(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let tri = Walk::from_vertices(&g, vec![0, 1, 2, 0]).unwrap();
        assert_eq!(walk_binomial(&tri).unwrap_err(), WalkError::OddLength);
        let open = Walk::from_vertices(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(walk_binomial(&open).unwrap_err(), WalkError::NotClosed);
    }

    #[test]
    fn sign_normalization_is_idempotent_and_flips() {
        let b = bn(&[(1, 1)], &[(0, 1)]);
        let n = b.sign_normalized();
        // lexicographically larger monomial (higher exponent at edge 0) wins
        assert_eq!(n, bn(&[(0, 1)], &[(1, 1)]).sign_normalized());
        assert_eq!(n.sign_normalized(), n);
    }

    #[test]
    fn rendering() {
        let b = bn(&[(0, 1), (3, 2)], &[(1, 1)]);
        assert_eq!(b.render(), "e1*e4^2 - e2");
        assert_eq!(Binomial::zero().render(), "0");
    }
}
