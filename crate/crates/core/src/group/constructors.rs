use super::FiniteGroup;
use crate::config::Budgets;
use crate::error::{Error, Result};
use std::collections::HashMap;

fn check_cap(what: &'static str, order: usize, cap: usize) -> Result<()> {
    if order > cap {
        return Err(Error::OrderCap { what, order, cap });
    }
    Ok(())
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// The cyclic group `Z/nZ`; element `k` is `g^k`.
pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Precondition("cyclic group needs n >= 1".into()));
    }
    check_cap("make_cyclic", n, Budgets::default().order_cap)?;
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u32;
        }
    }
    let labels = (0..n).map(|k| power_label("g", k)).collect();
    Ok(FiniteGroup::from_flat(format!("C{n}"), n, table, labels))
}

/// The dihedral group `D_n` of order `2n`: `r^n = s^2 = 1`, `srs = r^-1`.
///
/// Element `k + n*e` is `r^k s^e`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::Precondition("dihedral group needs n >= 2".into()));
    }
    let order = 2 * n;
    check_cap("make_dihedral", order, Budgets::default().order_cap)?;
    let idx = |k: usize, e: usize| k + n * e;
    let mut table = vec![0u32; order * order];
    for a in 0..n {
        for e in 0..2 {
            for b in 0..n {
                for f in 0..2 {
                    // r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e+f)
                    let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                    table[idx(a, e) * order + idx(b, f)] = idx(k, (e + f) % 2) as u32;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|i| {
            let (k, e) = (i % n, i / n);
            match (k, e) {
                (0, 0) => "1".to_string(),
                (_, 0) => power_label("r", k),
                (0, _) => "s".to_string(),
                _ => format!("{}s", power_label("r", k)),
            }
        })
        .collect();
    Ok(FiniteGroup::from_flat(format!("D{n}"), order, table, labels))
}

/// The quaternion group `{±1, ±i, ±j, ±k}`.
pub fn make_quaternion8() -> Result<FiniteGroup> {
    // unit u in {1,i,j,k} = {0,1,2,3}; element index = 2u + (negative as usize)
    fn unit_mul(a: usize, b: usize) -> (bool, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let mut table = vec![0u32; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (neg, u) = unit_mul(x / 2, y / 2);
            let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
            table[x * 8 + y] = (2 * u + sign as usize) as u32;
        }
    }
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| {
            let base = names[x / 2];
            if x % 2 == 1 {
                format!("-{base}")
            } else {
                base.to_string()
            }
        })
        .collect();
    Ok(FiniteGroup::from_flat("Q8".into(), 8, table, labels))
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn cycle_label(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Group of the given permutations under composition `(p·q)(x) = p(q(x))`.
/// The list must be closed and start with the identity.
fn permutation_group(name: String, perms: Vec<Vec<u8>>) -> FiniteGroup {
    let n = perms.len();
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = vec![0u32; n * n];
    let mut buf = vec![0u8; perms.first().map_or(0, |p| p.len())];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            for (x, slot) in buf.iter_mut().enumerate() {
                *slot = p[q[x] as usize];
            }
            table[i * n + j] = index[buf.as_slice()] as u32;
        }
    }
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    FiniteGroup::from_flat(name, n, table, labels)
}

/// The symmetric group on `n ≤ 6` points.
pub fn make_symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 6 {
        return Err(Error::Precondition(format!("S{n}: need 1 <= n <= 6")));
    }
    Ok(permutation_group(format!("S{n}"), permutations(n)))
}

/// The alternating group on `n ≤ 6` points.
pub fn make_alternating(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 6 {
        return Err(Error::Precondition(format!("A{n}: need 1 <= n <= 6")));
    }
    let perms = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    Ok(permutation_group(format!("A{n}"), perms))
}

/// `A × B` with componentwise multiplication; element `(i, j)` is `i·|B| + j`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na.saturating_mul(nb);
    check_cap("direct_product", n, Budgets::default().order_cap)?;
    let mut table = vec![0u32; n * n];
    for i1 in 0..na {
        for j1 in 0..nb {
            let x = i1 * nb + j1;
            for i2 in 0..na {
                let ai = a.mul(i1, i2) * nb;
                for j2 in 0..nb {
                    table[x * n + i2 * nb + j2] = (ai + b.mul(j1, j2)) as u32;
                }
            }
        }
    }
    let labels = (0..n)
        .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
        .collect();
    Ok(FiniteGroup::from_flat(format!("{}x{}", a.name(), b.name()), n, table, labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_satisfy_group_axioms() {
        let groups = vec![
            make_cyclic(1).unwrap(),
            make_cyclic(6).unwrap(),
            make_dihedral(2).unwrap(),
            make_dihedral(3).unwrap(),
            make_dihedral(6).unwrap(),
            make_quaternion8().unwrap(),
            make_symmetric(4).unwrap(),
            make_alternating(4).unwrap(),
            make_alternating(5).unwrap(),
            direct_product(&make_cyclic(4).unwrap(), &make_cyclic(2).unwrap()).unwrap(),
        ];
        for g in groups {
            g.validate().unwrap_or_else(|e| panic!("{}: {e}", g.name()));
        }
    }

    #[test]
    fn cyclic_examples() {
        let c1 = make_cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        let c6 = make_cyclic(6).unwrap();
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.label(1), "g");
        assert!(make_cyclic(10_001).unwrap_err().is_budget());
    }

    #[test]
    fn dihedral_examples() {
        let d3 = make_dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(d3.fingerprint(), s3.fingerprint());

        let d4 = make_dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.center().order(), 2);

        let d2 = make_dihedral(2).unwrap();
        assert!(d2.is_abelian());
        assert_eq!(d2.fingerprint(), direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap().fingerprint());
        assert!(make_dihedral(1).is_err());
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q = make_quaternion8().unwrap();
        let involutions: Vec<_> = q.elements().filter(|&g| q.element_order(g) == 2).collect();
        assert_eq!(involutions.len(), 1);
        assert_eq!(q.label(involutions[0]), "-1");
        assert!(!q.is_abelian());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(make_symmetric(4).unwrap().order(), 24);
        assert_eq!(make_alternating(5).unwrap().order(), 60);
        assert_eq!(make_symmetric(6).unwrap().order(), 720);
        assert!(make_symmetric(7).is_err());
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(s3.label(0), "()");
    }

    #[test]
    fn product_of_c4_and_c2() {
        let g = direct_product(&make_cyclic(4).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(g.name(), "C4xC2");
        assert!(!g.is_cyclic());
    }
}
