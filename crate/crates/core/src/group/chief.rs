use super::lattice::{complements, minimal_above, normal_subgroups, quotient};
use super::{FiniteGroup, Subgroup};
use crate::error::Result;
use num_rational::BigRational;

/// Which minimal normal subgroup to take when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Lexicographically smallest member list (the default).
    Smallest,
    /// Lexicographically largest member list.
    Largest,
}

/// One factor `upper / lower` of a chief series.
#[derive(Clone, Debug)]
pub struct ChiefSeriesFactor {
    pub upper: Subgroup,
    pub lower: Subgroup,
    pub factor_order: usize,
    pub is_abelian: bool,
    /// `(p, a)` with `factor_order = p^a`, for abelian factors.
    pub prime_power: Option<(u64, u32)>,
    /// Complements of `upper/lower` in `G/lower`, for abelian factors.
    pub complement_count: Option<usize>,
    /// `α(G/lower, upper/lower, d)`, filled in by the counting module.
    pub alpha_rel: Option<BigRational>,
}

/// `(p, a)` with `n = p^a`, if `n` is a prime power.
pub fn prime_power(n: usize) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|p| n.is_multiple_of(*p))?;
    let mut m = n;
    let mut a = 0;
    while m.is_multiple_of(p) {
        m /= p;
        a += 1;
    }
    (m == 1).then_some((p as u64, a))
}

/// A chief series of `g`, listed from the top (`X_1 = G`) down to the trivial
/// subgroup. Built bottom-up: at each step a minimal normal subgroup of `G`
/// strictly above the current term is chosen by `tie`.
pub fn chief_series(g: &FiniteGroup, cap: usize, tie: TieBreak) -> Result<Vec<ChiefSeriesFactor>> {
    let normals = normal_subgroups(g, cap)?;
    let mut chain = vec![Subgroup::trivial(g)];
    while !chain.last().unwrap().is_whole() {
        let current = chain.last().unwrap();
        let mut candidates = minimal_above(&normals, current);
        candidates.sort_by(|a, b| a.lex_cmp(b));
        let next = match tie {
            TieBreak::Smallest => candidates.remove(0),
            TieBreak::Largest => candidates.pop().unwrap(),
        };
        chain.push(next);
    }
    chain.reverse();
    let mut factors = Vec::with_capacity(chain.len().saturating_sub(1));
    for pair in chain.windows(2) {
        let (upper, lower) = (&pair[0], &pair[1]);
        let factor_order = upper.order() / lower.order();
        let is_abelian = upper
            .iter()
            .all(|x| upper.iter().all(|y| lower.contains(g.commutator(x, y))));
        let (pp, complement_count) = if is_abelian {
            let q = quotient(g, lower)?;
            let image = q.image(upper);
            let c = complements(&q.group, &image, cap)?.len();
            (prime_power(factor_order), Some(c))
        } else {
            (None, None)
        };
        factors.push(ChiefSeriesFactor {
            upper: upper.clone(),
            lower: lower.clone(),
            factor_order,
            is_abelian,
            prime_power: pp,
            complement_count,
            alpha_rel: None,
        });
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_normal, make_cyclic, make_symmetric};

    fn orders(f: &[ChiefSeriesFactor]) -> Vec<usize> {
        f.iter().map(|x| x.factor_order).collect()
    }

    #[test]
    fn series_examples() {
        let c6 = make_cyclic(6).unwrap();
        let f = chief_series(&c6, 48, TieBreak::Smallest).unwrap();
        let mut o = orders(&f);
        o.sort();
        assert_eq!(o, vec![2, 3]);

        let s4 = make_symmetric(4).unwrap();
        let f = chief_series(&s4, 48, TieBreak::Smallest).unwrap();
        assert_eq!(orders(&f), vec![2, 3, 4]);
        assert_eq!(f[2].prime_power, Some((2, 2)));
        assert!(f.iter().all(|x| x.is_abelian));

        let s3 = make_symmetric(3).unwrap();
        let f = chief_series(&s3, 48, TieBreak::Largest).unwrap();
        assert_eq!(orders(&f), vec![2, 3]);
        assert_eq!(f[1].complement_count, Some(3));
        assert_eq!(f[0].complement_count, Some(1));
    }

    #[test]
    fn factors_are_normal_and_multiply_to_order() {
        let s4 = make_symmetric(4).unwrap();
        for tie in [TieBreak::Smallest, TieBreak::Largest] {
            let f = chief_series(&s4, 48, tie).unwrap();
            assert_eq!(f.iter().map(|x| x.factor_order).product::<usize>(), 24);
            for x in &f {
                assert!(is_normal(&s4, &x.lower));
                assert!(is_normal(&s4, &x.upper));
                assert!(x.lower.is_subgroup_of(&x.upper));
            }
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(60), None);
    }
}
