//! Named groups: symmetric and alternating groups, the projective line groups
//! over small fields, the small Mathieu groups and permutation images of the
//! classical groups over GF(2) and GF(4).
//!
//! Every constructor checks the computed order against the documented one and
//! fails with [`Error::OrderMismatch`] otherwise.

use super::io::GroupSpec;
use super::{cap_from_env, GroupHandle};
use crate::error::{Error, Result};
use crate::gfq::classical::{self, ClassicalKind};
use crate::perm::Permutation;

fn finish(name: String, gens: Vec<Permutation>, degree: usize, expected: u128) -> Result<GroupHandle> {
    let g = GroupHandle::with_degree(degree, gens, cap_from_env())?;
    if g.order() != expected {
        return Err(Error::OrderMismatch {
            name,
            computed: g.order(),
            expected,
        });
    }
    Ok(g.named(name))
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn cyclic(n: usize) -> Result<GroupHandle> {
    let cyc: Vec<u32> = (0..n as u32).collect();
    let gens = if n > 1 {
        vec![Permutation::from_cycles(n, &[&cyc])?]
    } else {
        vec![]
    };
    finish(format!("C{n}"), gens, n, n as u128)
}

/// Dihedral group of order `2n` acting on an `n`-gon.
pub fn dihedral(n: usize) -> Result<GroupHandle> {
    if n < 3 {
        return Err(Error::Precondition("dihedral(n) needs n >= 3".into()));
    }
    let rot = Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())?;
    let refl = Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    finish(format!("D{}", 2 * n), vec![rot, refl], n, 2 * n as u128)
}

pub fn symmetric(n: usize) -> Result<GroupHandle> {
    if n == 0 || n > 12 {
        return Err(Error::Precondition("symmetric(n) needs 1 <= n <= 12".into()));
    }
    let mut gens = Vec::new();
    if n > 1 {
        let cyc: Vec<u32> = (0..n as u32).collect();
        gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
        gens.push(Permutation::from_cycles(n, &[&cyc])?);
    }
    finish(format!("S{n}"), gens, n, factorial(n))
}

pub fn alternating(n: usize) -> Result<GroupHandle> {
    if !(3..=12).contains(&n) {
        return Err(Error::Precondition("alternating(n) needs 3 <= n <= 12".into()));
    }
    let gens = (2..n as u32)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    finish(format!("A{n}"), gens, n, factorial(n) / 2)
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &GroupHandle, b: &GroupHandle) -> Result<GroupHandle> {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(g.extend(da + db));
    }
    for g in b.generators() {
        let mut images: Vec<u32> = (0..da as u32).collect();
        images.extend(g.images().iter().map(|&x| x + da as u32));
        gens.push(Permutation::from_images(images)?);
    }
    finish(
        format!("{}x{}", a.name(), b.name()),
        gens,
        da + db,
        a.order() * b.order(),
    )
}

/// GF(q) for a prime power `q ≤ 32`. Elements are integers whose base-`p`
/// digits are polynomial coefficients.
#[derive(Clone, Debug)]
pub struct SmallField {
    pub q: u32,
    pub p: u32,
    pub e: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    pub primitive: u32,
}

impl SmallField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) = match crate::arith::factorize(q as u128).as_slice() {
            [(p, e)] => (*p as u32, *e),
            _ => return Err(Error::Precondition(format!("{q} is not a prime power"))),
        };
        if q > 256 {
            return Err(Error::Precondition(format!("field of order {q} not supported")));
        }
        let modulus = primitive_modulus(p, e);
        let digits = |mut x: u32| -> Vec<u32> {
            let mut d = vec![0; e as usize];
            for di in d.iter_mut() {
                *di = x % p;
                x /= p;
            }
            d
        };
        let undigits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s);
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                if e > 1 {
                    for k in (e as usize..prod.len()).rev() {
                        let c = prod[k];
                        if c == 0 {
                            continue;
                        }
                        for (t, &m) in modulus.iter().enumerate() {
                            let idx = k - e as usize + t;
                            prod[idx] = (prod[idx] + (p - c) * m) % p;
                        }
                    }
                } else {
                    prod[0] %= p;
                }
                mul[(a * q + b) as usize] = undigits(&prod[..e as usize]);
            }
        }
        let mut f = SmallField {
            q,
            p,
            e,
            add,
            mul,
            primitive: 0,
        };
        f.primitive = (1..q)
            .find(|&g| f.mult_order(g) == q - 1)
            .ok_or_else(|| Error::Precondition(format!("modulus for GF({q}) is not irreducible")))?;
        Ok(f)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    pub fn pow(&self, a: u32, k: u32) -> u32 {
        (0..k).fold(1, |acc, _| self.mul(acc, a))
    }

    fn mult_order(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || (0..self.q).any(|b| self.mul(b, b) == a)
    }
}

/// The first monic polynomial of degree `e` over GF(p), in the order of its
/// coefficient digits, for which `x` has multiplicative order `p^e − 1`.
/// Coefficients are low first.
fn primitive_modulus(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1];
    }
    let e = e as usize;
    let order = p.pow(e as u32) - 1;
    let mulx = |v: &[u32], m: &[u32]| -> Vec<u32> {
        // v·x mod m, with m monic of degree e
        let top = v[e - 1];
        let mut out = vec![0; e];
        for i in (1..e).rev() {
            out[i] = v[i - 1];
        }
        for i in 0..e {
            out[i] = (out[i] + (p - top) * m[i]) % p;
        }
        out
    };
    for code in 0..p.pow(e as u32) {
        let mut m: Vec<u32> = (0..e).map(|i| code / p.pow(i as u32) % p).collect();
        if m[0] == 0 {
            continue;
        }
        let mut v = vec![0; e];
        v[0] = 1;
        let mut k = 0;
        loop {
            v = mulx(&v, &m);
            k += 1;
            if v[0] == 1 && v[1..].iter().all(|&c| c == 0) {
                break;
            }
            if k > order {
                break;
            }
        }
        if k == order {
            m.push(1);
            return m;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

/// Point set of the projective line: field elements `0..q`, with `q` for ∞.
fn mobius(f: &SmallField, a: u32, b: u32, c: u32, d: u32) -> Result<Permutation> {
    // x ↦ (ax + b) / (cx + d)
    let q = f.q;
    let images = (0..=q)
        .map(|x| {
            if x == q {
                if c == 0 {
                    q
                } else {
                    f.mul(a, f.inv(c).unwrap())
                }
            } else {
                let num = f.add(f.mul(a, x), b);
                let den = f.add(f.mul(c, x), d);
                if den == 0 {
                    q
                } else {
                    f.mul(num, f.inv(den).unwrap())
                }
            }
        })
        .collect();
    Permutation::from_images(images)
}

fn frobenius(f: &SmallField) -> Result<Permutation> {
    let mut images: Vec<u32> = (0..f.q).map(|x| f.pow(x, f.p)).collect();
    images.push(f.q);
    Permutation::from_images(images)
}

fn psl2_gens(f: &SmallField) -> Result<Vec<Permutation>> {
    let one = 1;
    let zero = 0;
    let minus_one = f.neg(1);
    let g2 = f.mul(f.primitive, f.primitive);
    Ok(vec![
        mobius(f, one, one, zero, one)?,
        mobius(f, g2, zero, zero, one)?,
        mobius(f, zero, minus_one, one, zero)?,
    ])
}

fn pl_order(q: u32) -> u128 {
    let q = q as u128;
    q * (q * q - 1)
}

fn check_q(q: u32) -> Result<SmallField> {
    if !(2..=256).contains(&q) {
        return Err(Error::Precondition(format!("projective line over GF({q}) not supported")));
    }
    SmallField::new(q)
}

pub fn psl2(q: u32) -> Result<GroupHandle> {
    let f = check_q(q)?;
    let d = if q % 2 == 1 { 2 } else { 1 };
    finish(format!("PSL2({q})"), psl2_gens(&f)?, q as usize + 1, pl_order(q) / d)
}

pub fn pgl2(q: u32) -> Result<GroupHandle> {
    let f = check_q(q)?;
    let mut gens = psl2_gens(&f)?;
    gens.push(mobius(&f, f.primitive, 0, 0, 1)?);
    finish(format!("PGL2({q})"), gens, q as usize + 1, pl_order(q))
}

pub fn psigmal2(q: u32) -> Result<GroupHandle> {
    let f = check_q(q)?;
    let d = if q % 2 == 1 { 2 } else { 1 };
    let mut gens = psl2_gens(&f)?;
    gens.push(frobenius(&f)?);
    finish(
        format!("PSigmaL2({q})"),
        gens,
        q as usize + 1,
        pl_order(q) / d * f.e as u128,
    )
}

pub fn pgammal2(q: u32) -> Result<GroupHandle> {
    let f = check_q(q)?;
    let mut gens = psl2_gens(&f)?;
    gens.push(mobius(&f, f.primitive, 0, 0, 1)?);
    gens.push(frobenius(&f)?);
    finish(
        format!("PGammaL2({q})"),
        gens,
        q as usize + 1,
        pl_order(q) * f.e as u128,
    )
}

const M11_JSON: &str = include_str!("../../data/groups/M11.json");
const M12_JSON: &str = include_str!("../../data/groups/M12.json");
const M12_2_JSON: &str = include_str!("../../data/groups/M12.2.json");
const M22_JSON: &str = include_str!("../../data/groups/M22.json");
const M22_2_JSON: &str = include_str!("../../data/groups/M22.2.json");
const M24_JSON: &str = include_str!("../../data/groups/M24.json");

fn from_shipped(json: &str) -> Result<GroupHandle> {
    let spec: GroupSpec = serde_json::from_str(json)?;
    spec.build(cap_from_env())
}

/// `mathieu(n)` for n ∈ {11, 12, 22, 24}.
pub fn mathieu(n: u32) -> Result<GroupHandle> {
    match n {
        11 => from_shipped(M11_JSON),
        12 => from_shipped(M12_JSON),
        22 => from_shipped(M22_JSON),
        24 => from_shipped(M24_JSON),
        _ => Err(Error::UnknownGroup(format!("mathieu({n})"))),
    }
}

/// `M12.2` on 24 points and `M22.2` on 22 points.
pub fn mathieu_extension(n: u32) -> Result<GroupHandle> {
    match n {
        12 => from_shipped(M12_2_JSON),
        22 => from_shipped(M22_2_JSON),
        _ => Err(Error::UnknownGroup(format!("mathieu({n}).2"))),
    }
}

/// Permutation image of a classical group on the nonzero vectors of its
/// natural module.
pub fn classical_group(kind: ClassicalKind, n: usize) -> Result<GroupHandle> {
    let space = classical::standard_space(kind, n)?;
    let mats = classical::classical_generators(kind, &space)?;
    let (degree, gens) = classical::permutation_image(&space, &mats)?;
    let expected = classical::group_order(kind, n)?;
    finish(kind.label(n), gens, degree, expected)
}

/// `PSU4(2).2 ≅ GO6⁻(2)`, acting on 63 nonzero vectors.
pub fn psu4_2_2() -> Result<GroupHandle> {
    Ok(classical_group(ClassicalKind::OrthogonalMinus, 6)?.named("PSU4(2).2"))
}

/// Names accepted by [`by_name`].
pub fn registry() -> Vec<&'static str> {
    vec![
        "C<n>", "D<2n>", "S<n>", "A<n>", "PSL2(q)", "PGL2(q)", "PSigmaL2(q)", "PGammaL2(q)", "M11",
        "M12", "M12.2", "M22", "M22.2", "M24", "GL(n,2)", "Sp(n,2)", "GU(n,2)", "GO+(n,2)",
        "GO-(n,2)", "Omega+(n,2)", "Omega-(n,2)", "PSU4(2).2", "<G>x<H>",
    ]
}

/// Resolves a catalog name such as `A5`, `PSL2(9)`, `M22.2`, `Sp(6,2)` or `A5xC3`.
pub fn by_name(name: &str) -> Result<GroupHandle> {
    let s = name.trim();
    if let Some((a, b)) = split_product(s) {
        return direct_product(&by_name(a)?, &by_name(b)?);
    }
    let lower = s.to_ascii_lowercase();
    let num = |t: &str| -> Result<u32> { t.trim().parse().map_err(|_| Error::UnknownGroup(s.to_string())) };
    let arg = |prefix: &str| -> Option<&str> {
        lower
            .strip_prefix(prefix)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
    };
    let two_args = |prefix: &str| -> Option<(String, String)> {
        arg(prefix).and_then(|a| a.split_once(',').map(|(x, y)| (x.trim().to_string(), y.trim().to_string())))
    };
    match lower.as_str() {
        "m11" => return mathieu(11),
        "m12" => return mathieu(12),
        "m22" => return mathieu(22),
        "m24" => return mathieu(24),
        "m12.2" => return mathieu_extension(12),
        "m22.2" => return mathieu_extension(22),
        "psu4(2).2" | "u4(2).2" => return psu4_2_2(),
        _ => {}
    }
    for (prefix, f) in [
        ("psl2", psl2 as fn(u32) -> Result<GroupHandle>),
        ("pgl2", pgl2),
        ("psigmal2", psigmal2),
        ("pgammal2", pgammal2),
    ] {
        if let Some(a) = arg(prefix) {
            return f(num(a)?);
        }
    }
    for (prefix, f) in [
        ("alternating", alternating as fn(usize) -> Result<GroupHandle>),
        ("symmetric", symmetric),
        ("cyclic", cyclic),
        ("dihedral", dihedral),
    ] {
        if let Some(a) = arg(prefix) {
            return f(num(a)? as usize);
        }
    }
    for (prefix, kind) in [
        ("gl", ClassicalKind::Linear),
        ("sp", ClassicalKind::Symplectic),
        ("gu", ClassicalKind::Unitary),
        ("go+", ClassicalKind::OrthogonalPlus),
        ("go-", ClassicalKind::OrthogonalMinus),
        ("omega+", ClassicalKind::OmegaPlus),
        ("omega-", ClassicalKind::OmegaMinus),
    ] {
        if let Some((n, q)) = two_args(prefix) {
            if q != "2" {
                return Err(Error::UnknownGroup(s.to_string()));
            }
            return classical_group(kind, num(&n)? as usize);
        }
    }
    let (head, rest) = lower.split_at(1);
    if let Ok(n) = rest.parse::<usize>() {
        return match head {
            "a" => alternating(n),
            "s" => symmetric(n),
            "c" => cyclic(n),
            "d" if n % 2 == 0 => dihedral(n / 2),
            _ => Err(Error::UnknownGroup(s.to_string())),
        };
    }
    Err(Error::UnknownGroup(s.to_string()))
}

fn split_product(s: &str) -> Option<(&str, &str)> {
    // split on an 'x' outside parentheses that is not part of a name
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' | '×' if depth == 0 && i > 0 => {
                let (a, b) = (&s[..i], &s[i + c.len_utf8()..]);
                if !a.is_empty() && !b.is_empty() {
                    return Some((a.trim(), b.trim()));
                }
            }
            _ => {}
        }
    }
    None
}
