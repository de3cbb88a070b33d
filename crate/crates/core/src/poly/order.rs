use std::cmp::Ordering;

use super::Monomial;

/// Total orders on monomials of a fixed ring.
///
/// `Elimination { block }` compares the first `block` exponents by grevlex
/// and breaks ties by grevlex on the rest; a reduced basis under it contains
/// a basis of the elimination ideal in the trailing variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Weighted degree with positive integer weights, grevlex tie-break.
    Weighted(Vec<u64>),
    /// Block order eliminating the first `block` variables.
    Elimination { block: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // Same degree: the last variable with differing exponent decides,
    // smaller exponent wins.
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Weighted(w) => {
                let da: u64 = a.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum();
                let db: u64 = b.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum();
                match da.cmp(&db) {
                    Ordering::Equal => grevlex(a, b),
                    o => o,
                }
            }
            MonomialOrder::Elimination { block } => {
                let k = (*block).min(a.len());
                match grevlex(&a[..k], &b[..k]) {
                    Ordering::Equal => grevlex(&a[k..], &b[k..]),
                    o => o,
                }
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }
}

/// Orders on terms of a free module, layered over a monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Position over term: lower component index wins, then the base order.
    Pot(MonomialOrder),
    /// Term over position: base order first, lower component breaks ties.
    Top(MonomialOrder),
}

impl ModuleOrder {
    pub fn base(&self) -> &MonomialOrder {
        match self {
            ModuleOrder::Pot(o) | ModuleOrder::Top(o) => o,
        }
    }

    pub fn cmp(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        match self {
            ModuleOrder::Pot(o) => match b.0.cmp(&a.0) {
                Ordering::Equal => o.cmp(a.1, b.1),
                ord => ord,
            },
            ModuleOrder::Top(o) => match o.cmp(a.1, b.1) {
                Ordering::Equal => b.0.cmp(&a.0),
                ord => ord,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        // x1*x2 > x3*x4 in 5 variables
        assert_eq!(
            o.cmp(&m(&[1, 1, 0, 0, 0]), &m(&[0, 0, 1, 1, 0])),
            Ordering::Greater
        );
        // degree dominates
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[1, 1])), Ordering::Greater);
        // x*z < y^2 under grevlex (x>y>z): deg equal, last diff is z
        assert_eq!(
            o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_blocks() {
        let o = MonomialOrder::Elimination { block: 1 };
        // any positive power of the first variable beats none
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        // ties in the first block fall through
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn weighted_order() {
        let o = MonomialOrder::Weighted(vec![2, 3]);
        // x^3 and y^2 both have weight 6: grevlex breaks the tie
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[0, 2])), Ordering::Greater);
        // weight dominates plain degree
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn pot_puts_early_components_first(){
        let o = ModuleOrder::Pot(MonomialOrder::GrevLex);
        let a = m(&[0, 1]);
        let b = m(&[5, 5]);
        assert_eq!(o.cmp((0, &a), (1, &b)), Ordering::Greater);
        assert_eq!(o.cmp((1, &a), (1, &b)), Ordering::Less);
    }
}
