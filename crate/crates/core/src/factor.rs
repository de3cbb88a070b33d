//! Factorization of univariate rational polynomials: Yun square-free
//! decomposition, rational-root extraction, and a Zassenhaus lift
//! (factor mod p, Hensel lifting, subset recombination) for the residual
//! factors at desk-scale degrees.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Rat;
use crate::unipoly::UniPoly;

/// Monic irreducible factor with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniFactor {
    pub poly: UniPoly,
    pub multiplicity: usize,
}

/// Yun's square-free decomposition of a nonzero polynomial.
/// Returns monic square-free parts with their multiplicities.
pub fn squarefree_decomposition(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    assert!(!p.is_zero());
    let f = p.monic();
    if f.degree() == Some(0) {
        return vec![];
    }
    let fd = f.derivative();
    let a = f.gcd(&fd);
    let mut b = f.div_exact(&a).unwrap();
    let mut d = fd.div_exact(&a).unwrap().sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1usize;
    while b.degree() != Some(0) {
        let ai = b.gcd(&d);
        if ai.degree().unwrap_or(0) > 0 {
            out.push((ai.monic(), i));
        }
        b = b.div_exact(&ai).unwrap();
        d = d.div_exact(&ai).unwrap().sub(&b.derivative());
        i += 1;
    }
    out
}

/// Full factorization into monic irreducibles over the rationals.
/// The scalar unit is not returned; multiplicities are exact.
pub fn factor(p: &UniPoly) -> Vec<UniFactor> {
    assert!(!p.is_zero());
    let mut out: Vec<UniFactor> = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        for f in factor_squarefree(&part) {
            out.push(UniFactor {
                poly: f,
                multiplicity: mult,
            });
        }
    }
    sort_factors(&mut out);
    out
}

/// Rational roots of a nonzero polynomial, with multiplicities, sorted.
pub fn rational_roots(p: &UniPoly) -> Vec<(Rat, usize)> {
    let mut roots: Vec<(Rat, usize)> = factor(p)
        .into_iter()
        .filter(|f| f.poly.degree() == Some(1))
        .map(|f| (-f.poly.coeffs[0].clone() / &f.poly.coeffs[1], f.multiplicity))
        .collect();
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    roots
}

fn sort_factors(fs: &mut [UniFactor]) {
    fs.sort_by(|a, b| {
        a.poly
            .coeffs
            .len()
            .cmp(&b.poly.coeffs.len())
            .then_with(|| {
                for (x, y) in a.poly.coeffs.iter().zip(&b.poly.coeffs) {
                    match x.cmp(y) {
                        std::cmp::Ordering::Equal => {}
                        o => return o,
                    }
                }
                std::cmp::Ordering::Equal
            })
    });
}

/// Factor a monic square-free polynomial into monic irreducibles.
fn factor_squarefree(p: &UniPoly) -> Vec<UniPoly> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        return vec![p.monic()];
    }
    let mut remaining = p.monic();
    let mut out = Vec::new();
    // Cheap pre-pass: rational roots via divisor candidates.
    for root in rational_root_candidates(&remaining) {
        while remaining.degree().unwrap_or(0) >= 1 && remaining.eval(&root).is_zero() {
            let lin = UniPoly::new(vec![-root.clone(), Rat::one()]);
            remaining = remaining.div_exact(&lin).unwrap();
            out.push(lin);
        }
    }
    match remaining.degree().unwrap_or(0) {
        0 => {}
        1 => out.push(remaining.monic()),
        _ => out.extend(zassenhaus(&remaining)),
    }
    for f in out.iter_mut() {
        *f = f.monic();
    }
    out
}

/// Candidate rational roots p/q with p | a_0, q | a_n, from the primitive
/// integer form. Skipped when the constant or leading coefficient is too
/// large to trial-divide; the Zassenhaus path still finds linear factors.
fn rational_root_candidates(p: &UniPoly) -> Vec<Rat> {
    let ints = p.primitive_int();
    if ints.is_empty() {
        return vec![];
    }
    let mut cands = vec![Rat::zero()];
    let a0 = ints.iter().find(|c| !c.is_zero()).unwrap().magnitude().clone();
    let an = ints.last().unwrap().magnitude().clone();
    let limit = BigUint::from(1_000_000_000_000u64);
    if a0 > limit || an > limit {
        return vec![];
    }
    let (Some(num), Some(den)) = (a0.to_u64(), an.to_u64()) else {
        return vec![];
    };
    for p in divisors(num) {
        for q in divisors(den) {
            let r = Rat::new(BigInt::from(p), BigInt::from(q));
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort();
    cands.dedup();
    cands
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
        if d > 1_000_000 {
            // incomplete enumeration is useless for completeness; bail
            return vec![];
        }
    }
    small.extend(large.into_iter().rev());
    small
}

// ---------------------------------------------------------------------------
// arithmetic mod a small prime
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct Fp {
    p: u64,
}

impl Fp {
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

type FpPoly = Vec<u64>; // constant to leading, trimmed

fn fp_trim(v: &mut FpPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_deg(v: &FpPoly) -> isize {
    v.len() as isize - 1
}

fn fp_mul(f: Fp, a: &FpPoly, b: &FpPoly) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_rem(f: Fp, a: &FpPoly, m: &FpPoly) -> FpPoly {
    let mut r = a.clone();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = f.inv(*m.last().unwrap());
    while r.len() > dm {
        let c = f.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = f.mul(c, mi);
            r[shift + i] = f.sub(r[shift + i], sub);
        }
        fp_trim(&mut r);
        if r.len() <= dm {
            break;
        }
    }
    r
}

fn fp_gcd(f: Fp, a: &FpPoly, b: &FpPoly) -> FpPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    fp_trim(&mut x);
    fp_trim(&mut y);
    while !y.is_empty() {
        let r = fp_rem(f, &x, &y);
        x = y;
        y = r;
    }
    fp_monic(f, &x)
}

fn fp_monic(f: Fp, a: &FpPoly) -> FpPoly {
    match a.last() {
        None => vec![],
        Some(&l) => {
            let inv = f.inv(l);
            a.iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

fn fp_derivative(f: Fp, a: &FpPoly) -> FpPoly {
    if a.len() <= 1 {
        return vec![];
    }
    let mut out: FpPoly = a[1..]
        .iter()
        .enumerate()
        .map(|(i, &c)| f.mul(c, (i as u64 + 1) % f.p))
        .collect();
    fp_trim(&mut out);
    out
}

fn fp_powmod(f: Fp, base: &FpPoly, e: &BigUint, m: &FpPoly) -> FpPoly {
    let mut result = vec![1u64];
    let mut b = fp_rem(f, base, m);
    for i in 0..e.bits() {
        if e.bit(i) {
            result = fp_rem(f, &fp_mul(f, &result, &b), m);
        }
        if i + 1 < e.bits() {
            b = fp_rem(f, &fp_mul(f, &b, &b), m);
        }
    }
    result
}

/// Distinct-degree then equal-degree factorization of a monic square-free
/// polynomial mod p. Returns monic irreducible factors.
fn fp_factor_squarefree(f: Fp, a: &FpPoly) -> Vec<FpPoly> {
    let mut out = Vec::new();
    let mut rest = fp_monic(f, a);
    let mut h: FpPoly = vec![0, 1]; // x
    let mut d = 0usize;
    while fp_deg(&rest) > 0 {
        d += 1;
        if 2 * d > fp_deg(&rest) as usize {
            out.push(rest.clone());
            break;
        }
        h = fp_powmod(f, &h, &BigUint::from(f.p), &rest);
        // gcd(h - x, rest)
        let mut hx = h.clone();
        while hx.len() < 2 {
            hx.push(0);
        }
        hx[1] = f.sub(hx[1], 1);
        fp_trim(&mut hx);
        let g = fp_gcd(f, &hx, &rest);
        if fp_deg(&g) > 0 {
            equal_degree_split(f, &g, d, &mut out);
            rest = fp_divide_exact(f, &rest, &g);
            h = fp_rem(f, &h, &rest);
        }
    }
    out
}

fn fp_divide_exact(f: Fp, a: &FpPoly, b: &FpPoly) -> FpPoly {
    // monic b
    let mut r = a.clone();
    let db = b.len() - 1;
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    let lead_inv = f.inv(*b.last().unwrap());
    while r.len() > db {
        let c = f.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - 1 - db;
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            let sub = f.mul(c, bi);
            r[shift + i] = f.sub(r[shift + i], sub);
        }
        fp_trim(&mut r);
    }
    debug_assert!(r.is_empty());
    fp_trim(&mut q);
    q
}

/// Cantor-Zassenhaus split of a product of degree-`d` irreducibles (p odd).
fn equal_degree_split(f: Fp, a: &FpPoly, d: usize, out: &mut Vec<FpPoly>) {
    if fp_deg(&a.to_vec()) as usize == d {
        out.push(fp_monic(f, a));
        return;
    }
    let exp = (BigUint::from(f.p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    // deterministic sweep of witnesses x + c, then higher-degree probes
    let mut attempt = 0u64;
    loop {
        attempt += 1;
        let base: FpPoly = if attempt <= f.p {
            vec![attempt % f.p, 1]
        } else {
            // quadratic probes once linear ones are exhausted
            vec![attempt % f.p, (attempt / f.p) % f.p, 1]
        };
        let w = fp_powmod(f, &base, &exp, a);
        let mut w1 = w.clone();
        if w1.is_empty() {
            w1 = vec![0];
        }
        w1[0] = f.sub(w1[0], 1);
        fp_trim(&mut w1);
        if w1.is_empty() {
            continue;
        }
        let g = fp_gcd(f, &w1, a);
        let dg = fp_deg(&g);
        if dg > 0 && dg < fp_deg(&a.to_vec()) {
            let other = fp_divide_exact(f, a, &g);
            equal_degree_split(f, &g, d, out);
            equal_degree_split(f, &other, d, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z/p^k
// ---------------------------------------------------------------------------

type ZPoly = Vec<BigInt>;

fn z_trim(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn z_mod(a: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    z_trim(&mut out);
    out
}

fn z_mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_mod(&out, m)
}

fn z_add_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    z_mod(&out, m)
}

fn z_sub_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    z_mod(&out, m)
}

/// Division with remainder by a monic polynomial, coefficients mod m.
fn z_divrem_monic(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    let mut r = z_mod(a, m);
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let c = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        q[shift] = c.clone();
        for (i, bi) in b.iter().enumerate() {
            let v = (&r[shift + i] - &c * bi).mod_floor(m);
            r[shift + i] = v;
        }
        z_trim(&mut r);
    }
    z_trim(&mut q);
    (z_mod(&q, m), r)
}

/// One quadratic Hensel step: factorization and Bezout data go from mod m
/// to mod m^2. All inputs monic except the Bezout cofactors.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    fpoly: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = z_sub_mod(fpoly, &z_mul_mod(g, h, &m2), &m2);
    let se = z_mul_mod(s, &e, &m2);
    let (q, r) = z_divrem_monic(&se, h, &m2);
    let g_star = z_add_mod(&z_add_mod(g, &z_mul_mod(t, &e, &m2), &m2), &z_mul_mod(&q, g, &m2), &m2);
    let h_star = z_add_mod(h, &r, &m2);
    let b = z_sub_mod(
        &z_add_mod(
            &z_mul_mod(s, &g_star, &m2),
            &z_mul_mod(t, &h_star, &m2),
            &m2,
        ),
        &vec![BigInt::one()],
        &m2,
    );
    let sb = z_mul_mod(s, &b, &m2);
    let (c, d) = z_divrem_monic(&sb, &h_star, &m2);
    let s_star = z_sub_mod(s, &d, &m2);
    let t_star = z_sub_mod(
        t,
        &z_add_mod(&z_mul_mod(t, &b, &m2), &z_mul_mod(&c, &g_star, &m2), &m2),
        &m2,
    );
    (g_star, h_star, s_star, t_star)
}

/// Extended Euclid mod p for coprime polynomials: s*a + t*b = 1.
fn fp_bezout(f: Fp, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
    // iterative extended euclid over Fp[x]
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (FpPoly, FpPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        // divide r0 by r1
        let mut r = r0.clone();
        let d1 = r1.len() - 1;
        let lead_inv = f.inv(*r1.last().unwrap());
        let mut q: FpPoly = vec![0; r.len().saturating_sub(d1).max(1)];
        while r.len() > d1 {
            let c = f.mul(*r.last().unwrap(), lead_inv);
            let shift = r.len() - 1 - d1;
            if q.len() <= shift {
                q.resize(shift + 1, 0);
            }
            q[shift] = f.add(q[shift], c);
            for (i, &bi) in r1.iter().enumerate() {
                let sub = f.mul(c, bi);
                r[shift + i] = f.sub(r[shift + i], sub);
            }
            fp_trim(&mut r);
        }
        fp_trim(&mut q);
        let new_s = {
            let qs = fp_mul(f, &q, &s1);
            let mut v = s0.clone();
            v.resize(v.len().max(qs.len()), 0);
            for (i, &x) in qs.iter().enumerate() {
                v[i] = f.sub(v[i], x);
            }
            fp_trim(&mut v);
            v
        };
        let new_t = {
            let qt = fp_mul(f, &q, &t1);
            let mut v = t0.clone();
            v.resize(v.len().max(qt.len()), 0);
            for (i, &x) in qt.iter().enumerate() {
                v[i] = f.sub(v[i], x);
            }
            fp_trim(&mut v);
            v
        };
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = new_s;
        t0 = t1;
        t1 = new_t;
    }
    // r0 = gcd (a unit); normalize to 1
    let unit = *r0.last().unwrap();
    let inv = f.inv(unit);
    let s: FpPoly = s0.iter().map(|&c| f.mul(c, inv)).collect();
    let t: FpPoly = t0.iter().map(|&c| f.mul(c, inv)).collect();
    (s, t)
}

/// Lift a coprime factorization `fpoly = prod(factors) mod p` to mod `target`.
fn hensel_lift_tree(fpoly: &ZPoly, factors: &[FpPoly], f: Fp, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![z_mod(fpoly, target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut g0: FpPoly = vec![1];
    for fac in left {
        g0 = fp_mul(f, &g0, fac);
    }
    let mut h0: FpPoly = vec![1];
    for fac in right {
        h0 = fp_mul(f, &h0, fac);
    }
    let (s0, t0) = fp_bezout(f, &g0, &h0);
    let to_z = |v: &FpPoly| -> ZPoly { v.iter().map(|&c| BigInt::from(c)).collect() };
    let mut g = to_z(&g0);
    let mut h = to_z(&h0);
    let mut s = to_z(&s0);
    let mut t = to_z(&t0);
    let mut m = BigInt::from(f.p);
    while &m < target {
        let (gs, hs, ss, ts) = hensel_step(&z_mod(fpoly, &(&m * &m)), &g, &h, &s, &t, &m);
        g = gs;
        h = hs;
        s = ss;
        t = ts;
        m = &m * &m;
    }
    let mut out = hensel_lift_tree(&z_mod(&g, target), left, f, target);
    out.extend(hensel_lift_tree(&z_mod(&h, target), right, f, target));
    out
}

fn balance(v: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    v.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

/// Zassenhaus factorization of a monic square-free rational polynomial of
/// degree >= 2 with no rational roots required. Returns monic irreducibles.
fn zassenhaus(p: &UniPoly) -> Vec<UniPoly> {
    // monicize over Z: F(y) = b^(n-1) p(y/b) with b the leading coefficient
    // of the primitive integer form.
    let ints = p.primitive_int();
    let n = ints.len() - 1;
    let b = ints.last().unwrap().clone();
    let mut fz: ZPoly = Vec::with_capacity(n + 1);
    // coefficient of y^i in F is a_i * b^(n-1-i)
    for (i, a) in ints.iter().enumerate() {
        if i == n {
            fz.push(BigInt::one());
        } else {
            fz.push(a * b.pow((n - 1 - i) as u32));
        }
    }
    let factors_z = zassenhaus_monic(&fz);
    // map back: g(x) = primitive part of G(b x)
    let mut out = Vec::new();
    for gz in factors_z {
        let coeffs: Vec<Rat> = gz
            .iter()
            .enumerate()
            .map(|(i, c)| Rat::from_integer(c * b.pow(i as u32)))
            .collect();
        out.push(UniPoly::new(coeffs).monic());
    }
    out
}

/// Core Zassenhaus on a monic square-free integer polynomial.
fn zassenhaus_monic(fz: &ZPoly) -> Vec<ZPoly> {
    let n = fz.len() - 1;
    if n == 1 {
        return vec![fz.clone()];
    }
    // pick a prime where f stays square-free
    let primes = [
        3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
    ];
    let mut chosen = None;
    for &p in &primes {
        let f = Fp { p };
        let fp: FpPoly = {
            let mut v: FpPoly = fz
                .iter()
                .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
                .collect();
            fp_trim(&mut v);
            v
        };
        if fp.len() != fz.len() {
            continue; // leading coefficient vanished (cannot happen: monic)
        }
        let g = fp_gcd(f, &fp, &fp_derivative(f, &fp));
        if fp_deg(&g) == 0 {
            chosen = Some((f, fp));
            break;
        }
    }
    let (f, fp) = chosen.expect("square-free polynomial has a good small prime");
    let modular = fp_factor_squarefree(f, &fp);
    if modular.len() == 1 {
        return vec![fz.clone()];
    }
    // lift to p^k beyond twice the coefficient bound for any monic divisor
    let norm1: BigInt = fz.iter().map(|c| c.abs()).sum();
    let bound: BigInt = (BigInt::from(2).pow((n + 2) as u32)) * (norm1 + BigInt::one());
    let mut target = BigInt::from(f.p);
    while target < bound {
        target = &target * &target;
    }
    let lifted = hensel_lift_tree(&z_mod(fz, &target), &modular, f, &target);

    // subset recombination
    let mut pool: Vec<ZPoly> = lifted;
    let mut rest = fz.clone();
    let mut out: Vec<ZPoly> = Vec::new();
    let mut card = 1usize;
    'outer: while 2 * card <= pool.len() {
        let idxs: Vec<usize> = (0..pool.len()).collect();
        for subset in combinations(&idxs, card) {
            let mut prod: ZPoly = vec![BigInt::one()];
            for &i in &subset {
                prod = z_mul_mod(&prod, &pool[i], &target);
            }
            let cand = balance(&prod, &target);
            let cand_poly = UniPoly::from_ints_big(cand.clone());
            let rest_poly = UniPoly::from_ints_big(rest.clone());
            if let Some(q) = rest_poly.div_exact(&cand_poly) {
                out.push(cand);
                let qi: ZPoly = q
                    .coeffs
                    .iter()
                    .map(|c| {
                        debug_assert!(c.denom().is_one());
                        c.numer().clone()
                    })
                    .collect();
                rest = qi;
                let mut keep = Vec::new();
                for (i, f) in pool.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(f);
                    }
                }
                pool = keep;
                continue 'outer;
            }
        }
        card += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
