//! Named groups and rings used as fixtures and from the command line.
//!
//! Names use a `kind:params` syntax, e.g. `heisenberg:3`, `ut3:2`,
//! `null:2,2,2`, `symmetric:4`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::FiniteRing;
use crate::structure::is_prime;

/// Largest order any catalog entry may have.
pub const CATALOG_ORDER_CAP: u128 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CatalogName {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion8,
    Symmetric(u64),
    Heisenberg(u64),
    Klein4,
    NullRing(Vec<u64>),
    Zn(u64),
    /// strictly upper-triangular 3x3 matrices over F_p
    Ut3(u64),
    /// full 2x2 matrices over F_p
    Matrix2(u64),
}

/// Either kind of structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Group(FiniteGroup),
    Ring(FiniteRing),
}

impl Structure {
    pub fn order(&self) -> usize {
        match self {
            Structure::Group(g) => g.order(),
            Structure::Ring(r) => r.order(),
        }
    }
}

impl CatalogName {
    pub fn is_group(&self) -> bool {
        matches!(
            self,
            CatalogName::Cyclic(_)
                | CatalogName::Dihedral(_)
                | CatalogName::Quaternion8
                | CatalogName::Symmetric(_)
                | CatalogName::Heisenberg(_)
                | CatalogName::Klein4
        )
    }

    fn order(&self) -> u128 {
        match self {
            CatalogName::Cyclic(n) | CatalogName::Zn(n) => *n as u128,
            CatalogName::Dihedral(n) => 2 * *n as u128,
            CatalogName::Quaternion8 => 8,
            CatalogName::Klein4 => 4,
            CatalogName::Symmetric(n) => (1..=*n as u128).product(),
            CatalogName::Heisenberg(p) | CatalogName::Ut3(p) => (*p as u128).pow(3),
            CatalogName::Matrix2(p) => (*p as u128).pow(4),
            CatalogName::NullRing(inv) => inv.iter().map(|&d| d as u128).product(),
        }
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ParamOutOfRange(msg));
        match self {
            CatalogName::Cyclic(0) | CatalogName::Dihedral(0) => {
                return bad(format!("{self}: parameter must be positive"))
            }
            CatalogName::Zn(n) if *n < 2 => {
                return bad(format!("{self}: modulus must be at least 2"))
            }
            CatalogName::Symmetric(n) if !(1..=5).contains(n) => {
                return bad(format!("{self}: degree must be in 1..=5"))
            }
            CatalogName::Heisenberg(p) | CatalogName::Ut3(p) | CatalogName::Matrix2(p)
                if !is_prime(*p) =>
            {
                return bad(format!("{self}: {p} is not prime"))
            }
            CatalogName::Heisenberg(p) if *p > 13 => {
                return bad(format!("{self}: prime must be at most 13"))
            }
            CatalogName::NullRing(inv) if inv.is_empty() || inv.iter().any(|&d| d < 2) => {
                return bad(format!("{self}: invariant factors must be at least 2"))
            }
            _ => {}
        }
        if self.order() > CATALOG_ORDER_CAP {
            return bad(format!(
                "{self}: order {} exceeds {CATALOG_ORDER_CAP}",
                self.order()
            ));
        }
        Ok(())
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::Cyclic(n) => write!(f, "cyclic:{n}"),
            CatalogName::Dihedral(n) => write!(f, "dihedral:{n}"),
            CatalogName::Quaternion8 => write!(f, "quaternion8"),
            CatalogName::Symmetric(n) => write!(f, "symmetric:{n}"),
            CatalogName::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            CatalogName::Klein4 => write!(f, "klein4"),
            CatalogName::NullRing(inv) => {
                let parts: Vec<String> = inv.iter().map(u64::to_string).collect();
                write!(f, "null:{}", parts.join(","))
            }
            CatalogName::Zn(n) => write!(f, "zn:{n}"),
            CatalogName::Ut3(p) => write!(f, "ut3:{p}"),
            CatalogName::Matrix2(p) => write!(f, "matrix2:{p}"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        let (kind, param) = match s.split_once(':') {
            Some((k, p)) => (k.trim(), Some(p.trim())),
            None => (s.trim(), None),
        };
        let int = |p: Option<&str>| -> Result<u64> {
            p.ok_or_else(unknown)?
                .parse()
                .map_err(|_| Error::ParamOutOfRange(format!("`{s}`: bad parameter")))
        };
        let name = match kind {
            "cyclic" => CatalogName::Cyclic(int(param)?),
            "dihedral" => CatalogName::Dihedral(int(param)?),
            "quaternion8" | "q8" => CatalogName::Quaternion8,
            "symmetric" => CatalogName::Symmetric(int(param)?),
            "heisenberg" => CatalogName::Heisenberg(int(param)?),
            "klein4" => CatalogName::Klein4,
            "null" => {
                let inv = param
                    .ok_or_else(unknown)?
                    .split(',')
                    .map(|d| d.trim().parse())
                    .collect::<std::result::Result<Vec<u64>, _>>()
                    .map_err(|_| Error::ParamOutOfRange(format!("`{s}`: bad invariants")))?;
                CatalogName::NullRing(inv)
            }
            "zn" => CatalogName::Zn(int(param)?),
            "ut3" => CatalogName::Ut3(int(param)?),
            "matrix2" => CatalogName::Matrix2(int(param)?),
            _ => return Err(unknown()),
        };
        name.check()?;
        Ok(name)
    }
}

/// Builds the named structure.
pub fn catalog(name: &CatalogName) -> Result<Structure> {
    name.check()?;
    Ok(match *name {
        CatalogName::Cyclic(n) => Structure::Group(cyclic(n as usize)),
        CatalogName::Dihedral(n) => Structure::Group(dihedral(n as usize)),
        CatalogName::Quaternion8 => Structure::Group(quaternion8()),
        CatalogName::Symmetric(n) => Structure::Group(symmetric(n as usize)),
        CatalogName::Heisenberg(p) => Structure::Group(heisenberg(p as usize)),
        CatalogName::Klein4 => Structure::Group(klein4()),
        CatalogName::NullRing(ref inv) => Structure::Ring(FiniteRing::null(inv.clone())?),
        CatalogName::Zn(n) => Structure::Ring(FiniteRing::validate(vec![n], vec![vec![vec![1]]])?),
        CatalogName::Ut3(p) => Structure::Ring(ut3(p)?),
        CatalogName::Matrix2(p) => Structure::Ring(matrix2(p)?),
    })
}

/// Builds a catalog group; errors if the name denotes a ring.
pub fn group(name: &CatalogName) -> Result<FiniteGroup> {
    match catalog(name)? {
        Structure::Group(g) => Ok(g),
        Structure::Ring(_) => Err(Error::UnknownName(format!("{name} is a ring, not a group"))),
    }
}

/// Builds a catalog ring; errors if the name denotes a group.
pub fn ring(name: &CatalogName) -> Result<FiniteRing> {
    match catalog(name)? {
        Structure::Ring(r) => Ok(r),
        Structure::Group(_) => Err(Error::UnknownName(format!("{name} is a group, not a ring"))),
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn(n, 0, |a, b| (a + b) % n)
}

fn klein4() -> FiniteGroup {
    FiniteGroup::from_fn(4, 0, |a, b| a ^ b)
}

/// `r^i s^j` at index `i + n j`.
fn dihedral(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn(2 * n, 0, |x, y| {
        let (i, a) = (x % n, x / n);
        let (k, b) = (y % n, y / n);
        let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((a + b) % 2)
    })
}

/// Units `1, i, j, k` at indices 0..4, their negatives at 4..8.
fn quaternion8() -> FiniteGroup {
    // UNIT[u][v] = (negate?, unit) for the product of units u and v
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    FiniteGroup::from_fn(8, 0, |x, y| {
        let (neg, u) = UNIT[x % 4][y % 4];
        let sign = (x / 4 + y / 4 + neg as usize) % 2;
        u + 4 * sign
    })
}

/// Permutations of `0..n` in lexicographic order; `(p q)(x) = p(q(x))`.
fn symmetric(n: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    let index: HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, q)| (q.clone(), i))
        .collect();
    FiniteGroup::from_fn(perms.len(), 0, |a, b| {
        let composed: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
        index[&composed]
    })
}

/// `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')` over `Z_p`,
/// with `(a, b, c)` at index `a + p b + p^2 c`.
fn heisenberg(p: usize) -> FiniteGroup {
    let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
    FiniteGroup::from_fn(p * p * p, 0, |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
    })
}

/// Basis `e12, e23, e13`; the only nonzero product is `e12 e23 = e13`.
fn ut3(p: u64) -> Result<FiniteRing> {
    let mut sc = vec![vec![vec![0u64; 3]; 3]; 3];
    sc[0][1] = vec![0, 0, 1];
    FiniteRing::validate(vec![p; 3], sc)
}

/// Basis `E11, E12, E21, E22` with `E_ij E_kl = [j = k] E_il`.
fn matrix2(p: u64) -> Result<FiniteRing> {
    let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut sc = vec![vec![vec![0u64; 4]; 4]; 4];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                let c = units.iter().position(|&u| u == (i, l)).unwrap();
                sc[a][b][c] = 1;
            }
        }
    }
    FiniteRing::validate(vec![p; 4], sc)
}

/// A spread of small catalog rings used by the verification suites.
pub fn small_rings() -> Vec<CatalogName> {
    use CatalogName::*;
    vec![
        Zn(2),
        Zn(3),
        Zn(4),
        Zn(5),
        Zn(6),
        Zn(7),
        Zn(8),
        Zn(9),
        NullRing(vec![2]),
        NullRing(vec![3]),
        NullRing(vec![2, 2]),
        NullRing(vec![2, 4]),
        NullRing(vec![3, 3]),
        Ut3(2),
        Ut3(3),
        Matrix2(2),
    ]
}

/// Catalog groups of class at most 2.
pub fn class_two_groups() -> Vec<CatalogName> {
    use CatalogName::*;
    vec![
        Cyclic(1),
        Cyclic(2),
        Cyclic(5),
        Cyclic(12),
        Klein4,
        Dihedral(4),
        Quaternion8,
        Heisenberg(2),
        Heisenberg(3),
        Heisenberg(5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probability::pr_c_group;
    use crate::rational::Rational;

    #[test]
    fn all_catalog_groups_validate() {
        let names = [
            "cyclic:1",
            "cyclic:7",
            "dihedral:3",
            "dihedral:4",
            "dihedral:5",
            "quaternion8",
            "symmetric:1",
            "symmetric:3",
            "symmetric:4",
            "heisenberg:2",
            "heisenberg:3",
            "klein4",
        ];
        for s in names {
            let name: CatalogName = s.parse().unwrap();
            assert_eq!(name.to_string(), s);
            let g = group(&name).unwrap();
            assert_eq!(g.order() as u128, name.order());
            FiniteGroup::validate(g.order(), &g.table_rows(), g.identity())
                .unwrap_or_else(|e| panic!("{s}: {e}"));
        }
    }

    #[test]
    fn s3_matches_permutation_composition() {
        let g = group(&CatalogName::Symmetric(3)).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(pr_c_group(&g).value, Rational::new(1, 2));
        // a transposition composed with itself is the identity
        for t in g.elements().filter(|&x| g.element_order(x) == 2) {
            assert_eq!(g.op(t, t), g.identity());
        }
    }

    #[test]
    fn ring_catalog() {
        for s in ["zn:4", "null:2,2,2", "ut3:2", "ut3:3", "matrix2:2"] {
            let name: CatalogName = s.parse().unwrap();
            assert_eq!(name.to_string(), s);
            assert_eq!(ring(&name).unwrap().order() as u128, name.order());
        }
    }

    #[test]
    fn rejects_bad_names() {
        assert!(matches!(
            "frobenius:5".parse::<CatalogName>(),
            Err(Error::UnknownName(_))
        ));
        assert!(matches!(
            "heisenberg:4".parse::<CatalogName>(),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            "heisenberg:17".parse::<CatalogName>(),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            "symmetric:6".parse::<CatalogName>(),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            "matrix2:11".parse::<CatalogName>(),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            "zn:1".parse::<CatalogName>(),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            "cyclic:x".parse::<CatalogName>(),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(group(&CatalogName::Zn(3)).is_err());
        assert!(ring(&CatalogName::Klein4).is_err());
    }

    #[test]
    fn cyclic_five_is_abelian() {
        let g = group(&CatalogName::Cyclic(5)).unwrap();
        assert!(g.is_abelian());
        assert_eq!(pr_c_group(&g).value, Rational::ONE);
    }
}
