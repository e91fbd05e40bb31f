//! Exponent-vector monomials and monomial orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A monomial as a vector of nonnegative exponents, one per ring variable.
///
/// The derived `Ord` is the plain lexicographic order on exponent vectors and
/// is used only for canonical storage inside term maps; order-sensitive
/// comparisons go through [`MonomialOrder::cmp`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        debug_assert!(idx < nvars);
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn pow(&self, n: u64) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                let v = (a as u64).checked_mul(n).ok_or(Error::ExponentOverflow)?;
                u32::try_from(v).map_err(|_| Error::ExponentOverflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, or `None` if `self` does not divide `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(&b, &a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    /// True when the supports are disjoint, i.e. lcm = product.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Total orders on monomials compatible with multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: total degree first, ties broken by the
    /// last differing exponent being smaller.
    GrevLex,
    /// Pure lexicographic in the declared variable order.
    Lex,
    /// Block order eliminating the first `k` variables: any monomial meeting
    /// the first block outranks any monomial contained in the rest; grevlex
    /// within each block.
    Elimination(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing position means greater
            return if a[i] < b[i] { Ordering::Greater } else { Ordering::Less };
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
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::GrevLex => grevlex(a.exps(), b.exps()),
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.nvars());
                match grevlex(&a.exps()[..k], &b.exps()[..k]) {
                    Ordering::Equal => grevlex(&a.exps()[k..], &b.exps()[k..]),
                    o => o,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::GrevLex;
        // x > w in four variables
        assert_eq!(o.cmp(&m(&[1, 0, 0, 0]), &m(&[0, 0, 0, 1])), Ordering::Greater);
        // degree dominates: x*w > y
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[0, 1, 0, 0])), Ordering::Greater);
        // classic grevlex tie-break: x*z < y^2 is false, x*z vs y^2 in 3 vars:
        // deg equal, last diff index 2 (z exp 1 vs 0) -> x*z smaller
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn elimination_ranks_block_first() {
        let o = MonomialOrder::Elimination(1);
        // t^1 beats anything t-free of any degree
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        // within t-free monomials falls back to grevlex
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn multiplicative_compatibility() {
        // a > b implies a*c > b*c for each order, on a small sweep
        let orders = [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Elimination(1)];
        let sample = [
            m(&[0, 0, 0]),
            m(&[1, 0, 0]),
            m(&[0, 1, 0]),
            m(&[0, 0, 1]),
            m(&[2, 1, 0]),
            m(&[0, 1, 3]),
        ];
        for o in orders {
            for a in &sample {
                for b in &sample {
                    for c in &sample {
                        let ab = o.cmp(a, b);
                        let acbc = o.cmp(&a.mul(c).unwrap(), &b.mul(c).unwrap());
                        assert_eq!(ab, acbc);
                    }
                }
            }
        }
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.div(&a).unwrap(), m(&[1, 1]));
        assert!(a.div(&b).is_none());
        assert_eq!(a.lcm(&m(&[0, 3])), m(&[2, 3]));
        assert!(m(&[1, 0]).coprime(&m(&[0, 2])));
        assert!(!m(&[1, 1]).coprime(&m(&[0, 2])));
    }
}
