use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::Group;

/// Cap on the order of any builtin group; tables are stored densely, so this
/// keeps memory at a few hundred KB worst case.
pub const MAX_BUILTIN_ORDER: usize = 256;

/// A builtin group family expression, e.g. `cyclic:6` or
/// `product:cyclic:2,cyclic:4`.
///
/// Canonical element orderings (these fix the meaning of element indices in
/// every interface that takes them):
/// - `cyclic:m`: residues 0..m-1 under addition mod m.
/// - `dihedral:m`: order 2m; rotations r^0..r^{m-1} first, then reflections
///   s·r^0..s·r^{m-1}.
/// - `symmetric:m` (m <= 5): permutations of {0..m-1} in lexicographic
///   one-line order.
/// - `alternating:m` (m <= 5): even permutations in lexicographic one-line
///   order.
/// - `quaternion`: the eight units 1, -1, i, -i, j, -j, k, -k.
/// - `elemab:p:k`: vectors of F_p^k ordered lexicographically (most
///   significant coordinate first).
/// - `product:a,b,...`: lexicographic on component indices, leftmost
///   component most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupFamily {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    ElementaryAbelian(usize, usize),
    Product(Vec<GroupFamily>),
}

impl GroupFamily {
    /// Constructs the group with canonical ordering and labels.
    pub fn build(&self) -> Result<Group> {
        let order = self.order()?;
        if order > MAX_BUILTIN_ORDER {
            return Err(Error::ParamOutOfRange {
                family: self.family_name(),
                reason: format!("order {order} exceeds the builtin cap {MAX_BUILTIN_ORDER}"),
            });
        }
        match self {
            GroupFamily::Cyclic(m) => Ok(cyclic(*m)),
            GroupFamily::Dihedral(m) => Ok(dihedral(*m)),
            GroupFamily::Symmetric(m) => Ok(symmetric(*m)),
            GroupFamily::Alternating(m) => Ok(alternating(*m)),
            GroupFamily::Quaternion => Ok(quaternion()),
            GroupFamily::ElementaryAbelian(p, k) => Ok(elementary_abelian(*p, *k)),
            GroupFamily::Product(parts) => {
                let groups: Vec<Group> = parts
                    .iter()
                    .map(|part| part.build())
                    .collect::<Result<_>>()?;
                Ok(direct_product(&groups))
            }
        }
    }

    /// Order of the group this expression describes, validating parameters.
    pub fn order(&self) -> Result<usize> {
        match *self {
            GroupFamily::Cyclic(m) => {
                if m == 0 {
                    return Err(Error::ParamOutOfRange {
                        family: "cyclic",
                        reason: "modulus must be at least 1".into(),
                    });
                }
                Ok(m)
            }
            GroupFamily::Dihedral(m) => {
                if m == 0 {
                    return Err(Error::ParamOutOfRange {
                        family: "dihedral",
                        reason: "rotation count must be at least 1".into(),
                    });
                }
                Ok(2 * m)
            }
            GroupFamily::Symmetric(m) => {
                if m == 0 || m > 5 {
                    return Err(Error::ParamOutOfRange {
                        family: "symmetric",
                        reason: format!("degree {m} not in 1..=5"),
                    });
                }
                Ok(factorial(m))
            }
            GroupFamily::Alternating(m) => {
                if m == 0 || m > 5 {
                    return Err(Error::ParamOutOfRange {
                        family: "alternating",
                        reason: format!("degree {m} not in 1..=5"),
                    });
                }
                Ok(if m == 1 { 1 } else { factorial(m) / 2 })
            }
            GroupFamily::Quaternion => Ok(8),
            GroupFamily::ElementaryAbelian(p, k) => {
                if !is_prime(p) {
                    return Err(Error::ParamOutOfRange {
                        family: "elemab",
                        reason: format!("{p} is not prime"),
                    });
                }
                if k == 0 {
                    return Err(Error::ParamOutOfRange {
                        family: "elemab",
                        reason: "exponent must be at least 1".into(),
                    });
                }
                let mut order = 1usize;
                for _ in 0..k {
                    order = order
                        .checked_mul(p)
                        .filter(|&o| o <= MAX_BUILTIN_ORDER)
                        .ok_or(Error::ParamOutOfRange {
                            family: "elemab",
                            reason: format!("p^k overflows the builtin cap {MAX_BUILTIN_ORDER}"),
                        })?;
                }
                Ok(order)
            }
            GroupFamily::Product(ref parts) => {
                if parts.len() < 2 {
                    return Err(Error::ParamOutOfRange {
                        family: "product",
                        reason: "a direct product needs at least two components".into(),
                    });
                }
                let mut order = 1usize;
                for part in parts {
                    order = order
                        .checked_mul(part.order()?)
                        .filter(|&o| o <= MAX_BUILTIN_ORDER)
                        .ok_or(Error::ParamOutOfRange {
                            family: "product",
                            reason: format!("order overflows the builtin cap {MAX_BUILTIN_ORDER}"),
                        })?;
                }
                Ok(order)
            }
        }
    }

    fn family_name(&self) -> &'static str {
        match self {
            GroupFamily::Cyclic(_) => "cyclic",
            GroupFamily::Dihedral(_) => "dihedral",
            GroupFamily::Symmetric(_) => "symmetric",
            GroupFamily::Alternating(_) => "alternating",
            GroupFamily::Quaternion => "quaternion",
            GroupFamily::ElementaryAbelian(..) => "elemab",
            GroupFamily::Product(_) => "product",
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::Cyclic(m) => write!(f, "cyclic:{m}"),
            GroupFamily::Dihedral(m) => write!(f, "dihedral:{m}"),
            GroupFamily::Symmetric(m) => write!(f, "symmetric:{m}"),
            GroupFamily::Alternating(m) => write!(f, "alternating:{m}"),
            GroupFamily::Quaternion => write!(f, "quaternion"),
            GroupFamily::ElementaryAbelian(p, k) => write!(f, "elemab:{p}:{k}"),
            GroupFamily::Product(parts) => {
                write!(f, "product:")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        let (name, rest) = match trimmed.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (trimmed, None),
        };
        let params = || -> Result<Vec<usize>> {
            rest.unwrap_or("")
                .split(':')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse().map_err(|_| Error::ParseSpec {
                        input: input.to_string(),
                        reason: format!("{s:?} is not a valid integer parameter"),
                    })
                })
                .collect()
        };
        let one_param = |family: &'static str| -> Result<usize> {
            let p = params()?;
            if p.len() != 1 {
                return Err(Error::ParseSpec {
                    input: input.to_string(),
                    reason: format!("{family} takes exactly one integer parameter"),
                });
            }
            Ok(p[0])
        };
        match name.to_ascii_lowercase().as_str() {
            "cyclic" | "c" | "z" => Ok(GroupFamily::Cyclic(one_param("cyclic")?)),
            "dihedral" | "dih" | "d" => Ok(GroupFamily::Dihedral(one_param("dihedral")?)),
            "symmetric" | "sym" | "s" => Ok(GroupFamily::Symmetric(one_param("symmetric")?)),
            "alternating" | "alt" | "a" => Ok(GroupFamily::Alternating(one_param("alternating")?)),
            "quaternion" | "q8" | "q" => {
                if rest.is_some() {
                    return Err(Error::ParseSpec {
                        input: input.to_string(),
                        reason: "quaternion takes no parameters".into(),
                    });
                }
                Ok(GroupFamily::Quaternion)
            }
            "elemab" | "elementary_abelian" | "ea" => {
                let p = params()?;
                if p.len() != 2 {
                    return Err(Error::ParseSpec {
                        input: input.to_string(),
                        reason: "elemab takes two integer parameters p:k".into(),
                    });
                }
                Ok(GroupFamily::ElementaryAbelian(p[0], p[1]))
            }
            "product" | "prod" | "x" => {
                let body = rest.unwrap_or("");
                let parts: Vec<GroupFamily> = body
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.parse())
                    .collect::<Result<_>>()?;
                if parts.len() < 2 {
                    return Err(Error::ParseSpec {
                        input: input.to_string(),
                        reason: "product takes at least two comma-separated components".into(),
                    });
                }
                Ok(GroupFamily::Product(parts))
            }
            other => Err(Error::UnknownFamily {
                name: other.to_string(),
            }),
        }
    }
}

fn factorial(m: usize) -> usize {
    (1..=m).product()
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn cyclic(m: usize) -> Group {
    let rows = (0..m)
        .map(|a| (0..m).map(|b| (a + b) % m).collect())
        .collect();
    let labels = (0..m).map(|i| i.to_string()).collect();
    Group::from_table(rows, false)
        .expect("cyclic table is a group")
        .with_labels(labels)
}

fn dihedral(m: usize) -> Group {
    // Index i < m is the rotation r^i; index m + i is the reflection s*r^i.
    // Relations: r^m = s^2 = 1 and r*s = s*r^-1.
    let n = 2 * m;
    let rows = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (fa, ia) = (a >= m, a % m);
                    let (fb, ib) = (b >= m, b % m);
                    match (fa, fb) {
                        (false, false) => (ia + ib) % m,
                        (false, true) => m + (m + ib - ia) % m,
                        (true, false) => m + (ia + ib) % m,
                        (true, true) => (m + ib - ia) % m,
                    }
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|i| match (i >= m, i % m) {
            (false, 0) => "e".to_string(),
            (false, 1) => "r".to_string(),
            (false, k) => format!("r{k}"),
            (true, 0) => "s".to_string(),
            (true, 1) => "sr".to_string(),
            (true, k) => format!("sr{k}"),
        })
        .collect();
    Group::from_table(rows, false)
        .expect("dihedral table is a group")
        .with_labels(labels)
}

/// All permutations of 0..m in lexicographic one-line order.
fn lexicographic_permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(factorial(m));
    let mut current: Vec<usize> = (0..m).collect();
    let mut chosen = vec![false; m];
    fn recurse(
        m: usize,
        depth: usize,
        current: &mut Vec<usize>,
        chosen: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == m {
            out.push(current[..m].to_vec());
            return;
        }
        for value in 0..m {
            if !chosen[value] {
                chosen[value] = true;
                current[depth] = value;
                recurse(m, depth + 1, current, chosen, out);
                chosen[value] = false;
            }
        }
    }
    recurse(m, 0, &mut current, &mut chosen, &mut out);
    out
}

fn permutation_is_even(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Cycle-notation label on 1-based points, e.g. "(12)(345)"; "e" for the
/// identity.
fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut label = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        label.push('(');
        let mut point = start;
        loop {
            seen[point] = true;
            label.push_str(&(point + 1).to_string());
            point = perm[point];
            if point == start {
                break;
            }
        }
        label.push(')');
    }
    if label.is_empty() {
        label.push('e');
    }
    label
}

fn permutation_group(perms: Vec<Vec<usize>>) -> Group {
    let index_of = |perm: &[usize]| -> usize {
        perms
            .iter()
            .position(|p| p == perm)
            .expect("closed permutation set")
    };
    let n = perms.len();
    let rows = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    // (p*q)(x) = p(q(x)): apply q first, then p.
                    let product: Vec<usize> = perms[b].iter().map(|&x| perms[a][x]).collect();
                    index_of(&product)
                })
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    Group::from_table(rows, false)
        .expect("permutation composition table is a group")
        .with_labels(labels)
}

fn symmetric(m: usize) -> Group {
    permutation_group(lexicographic_permutations(m))
}

fn alternating(m: usize) -> Group {
    let perms = lexicographic_permutations(m)
        .into_iter()
        .filter(|p| permutation_is_even(p))
        .collect();
    permutation_group(perms)
}

fn quaternion() -> Group {
    // Element 2b + s encodes (-1)^s * basis[b] with basis 1, i, j, k.
    // base_mul[b1][b2] = (sign, basis) of basis[b1] * basis[b2].
    const BASE_MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let rows = (0..8)
        .map(|a: usize| {
            (0..8)
                .map(|b: usize| {
                    let (sa, ba) = (a % 2, a / 2);
                    let (sb, bb) = (b % 2, b / 2);
                    let (sm, bm) = BASE_MUL[ba][bb];
                    2 * bm + (sa + sb + sm) % 2
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Group::from_table(rows, false)
        .expect("quaternion table is a group")
        .with_labels(labels)
}

fn elementary_abelian(p: usize, k: usize) -> Group {
    let n = p.pow(k as u32);
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; k];
        for slot in (0..k).rev() {
            d[slot] = x % p;
            x /= p;
        }
        d
    };
    let rows = (0..n)
        .map(|a| {
            let da = digits(a);
            (0..n)
                .map(|b| {
                    let db = digits(b);
                    da.iter()
                        .zip(&db)
                        .fold(0, |acc, (&x, &y)| acc * p + (x + y) % p)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|a| {
            let d: Vec<String> = digits(a).iter().map(|x| x.to_string()).collect();
            format!("({})", d.join(","))
        })
        .collect();
    Group::from_table(rows, false)
        .expect("elementary abelian table is a group")
        .with_labels(labels)
}

/// Direct product with lexicographic index ordering: the leftmost component
/// is the most significant.
pub fn direct_product(components: &[Group]) -> Group {
    assert!(!components.is_empty());
    let n: usize = components.iter().map(|g| g.order()).product();
    let split = |mut index: usize| -> Vec<usize> {
        let mut parts = vec![0; components.len()];
        for (slot, g) in components.iter().enumerate().rev() {
            parts[slot] = index % g.order();
            index /= g.order();
        }
        parts
    };
    let join = |parts: &[usize]| -> usize {
        parts
            .iter()
            .zip(components)
            .fold(0, |acc, (&i, g)| acc * g.order() + i)
    };
    let rows = (0..n)
        .map(|a| {
            let pa = split(a);
            (0..n)
                .map(|b| {
                    let pb = split(b);
                    let product: Vec<usize> = pa
                        .iter()
                        .zip(&pb)
                        .zip(components)
                        .map(|((&x, &y), g)| g.mul(x, y))
                        .collect();
                    join(&product)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|a| {
            let parts: Vec<String> = split(a)
                .iter()
                .zip(components)
                .map(|(&i, g)| g.label(i))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Group::from_table(rows, false)
        .expect("direct product table is a group")
        .with_labels(labels)
}
