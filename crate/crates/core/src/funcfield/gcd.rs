//! Bivariate polynomial gcd over a coefficient field, via subresultant
//! pseudo-remainder sequences with content extraction. No interpolation, no
//! modular reconstruction; everything stays exact.
//!
//! Internals work on a nested dense form: a polynomial in beta whose
//! coefficients are dense univariate polynomials in alpha.

use crate::ring::Field;
use std::collections::BTreeMap;

/// Dense univariate polynomial in alpha, ascending degree, trimmed.
type APoly<C> = Vec<C>;
/// Polynomial in beta with APoly coefficients, ascending degree, trimmed.
type BForm<C> = Vec<APoly<C>>;

fn atrim<C: Field>(v: &mut APoly<C>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn a_is_zero<C: Field>(v: &APoly<C>) -> bool {
    v.is_empty()
}

fn a_mul<C: Field>(x: &APoly<C>, y: &APoly<C>) -> APoly<C> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let zero = x[0].zero_like();
    let mut out = vec![zero; x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    let mut out = out;
    atrim(&mut out);
    out
}

fn a_sub<C: Field>(x: &APoly<C>, y: &APoly<C>) -> APoly<C> {
    if x.is_empty() && y.is_empty() {
        return Vec::new();
    }
    let zero = x.first().or_else(|| y.first()).unwrap().zero_like();
    let n = x.len().max(y.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = x.get(i).cloned().unwrap_or_else(|| zero.clone());
        let b = y.get(i).cloned().unwrap_or_else(|| zero.clone());
        out.push(a.sub(&b));
    }
    atrim(&mut out);
    out
}

/// Long division over the coefficient field; returns (quotient, remainder).
fn a_divrem<C: Field>(num: &APoly<C>, den: &APoly<C>) -> (APoly<C>, APoly<C>) {
    assert!(!den.is_empty(), "univariate division by zero");
    let mut rem = num.clone();
    atrim(&mut rem);
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let zero = den[0].zero_like();
    let lead_inv = den.last().unwrap().inv();
    let mut quo = vec![zero; rem.len() - den.len() + 1];
    while rem.len() >= den.len() && !rem.is_empty() {
        let shift = rem.len() - den.len();
        let c = rem.last().unwrap().mul(&lead_inv);
        quo[shift] = c.clone();
        for (k, d) in den.iter().enumerate() {
            let t = rem[shift + k].sub(&d.mul(&c));
            rem[shift + k] = t;
        }
        atrim(&mut rem);
    }
    (quo, rem)
}

fn a_exact_div<C: Field>(num: &APoly<C>, den: &APoly<C>) -> APoly<C> {
    let (q, r) = a_divrem(num, den);
    assert!(a_is_zero(&r), "inexact univariate division in gcd internals");
    q
}

/// Monic gcd by the Euclidean algorithm.
fn a_gcd<C: Field>(x: &APoly<C>, y: &APoly<C>) -> APoly<C> {
    let mut r0 = x.clone();
    atrim(&mut r0);
    let mut r1 = y.clone();
    atrim(&mut r1);
    while !r1.is_empty() {
        let (_, r) = a_divrem(&r0, &r1);
        r0 = std::mem::replace(&mut r1, r);
    }
    if let Some(lead) = r0.last().cloned() {
        let s = lead.inv();
        for c in r0.iter_mut() {
            *c = c.mul(&s);
        }
    }
    r0
}

fn a_pow<C: Field>(x: &APoly<C>, e: u32) -> APoly<C> {
    assert!(!x.is_empty(), "zero to a power in gcd internals");
    let mut acc = vec![x[0].one_like()];
    for _ in 0..e {
        acc = a_mul(&acc, x);
    }
    acc
}

fn bp_trim<C: Field>(f: &mut BForm<C>) {
    while f.last().map_or(false, |c| a_is_zero(c)) {
        f.pop();
    }
}

fn bp_is_zero<C: Field>(f: &BForm<C>) -> bool {
    f.is_empty()
}

fn bp_deg<C: Field>(f: &BForm<C>) -> usize {
    f.len() - 1
}

fn bp_mul_apoly<C: Field>(f: &BForm<C>, s: &APoly<C>) -> BForm<C> {
    let mut out: BForm<C> = f.iter().map(|c| a_mul(c, s)).collect();
    bp_trim(&mut out);
    out
}

fn bp_exact_div_apoly<C: Field>(f: &BForm<C>, s: &APoly<C>) -> BForm<C> {
    let mut out: BForm<C> = f.iter().map(|c| a_exact_div(c, s)).collect();
    bp_trim(&mut out);
    out
}

fn bp_sub<C: Field>(f: &BForm<C>, g: &BForm<C>) -> BForm<C> {
    let n = f.len().max(g.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = f.get(i).cloned().unwrap_or_default();
        let b = g.get(i).cloned().unwrap_or_default();
        out.push(a_sub(&a, &b));
    }
    bp_trim(&mut out);
    out
}

/// Pseudo-remainder: returns r with lc(g)^(deg f - deg g + 1) * f = q*g + r.
fn bp_pseudo_rem<C: Field>(f: &BForm<C>, g: &BForm<C>) -> BForm<C> {
    assert!(!bp_is_zero(g));
    let dg = bp_deg(g);
    let lg = g.last().unwrap().clone();
    let mut r = f.clone();
    bp_trim(&mut r);
    if bp_is_zero(&r) || bp_deg(&r) < dg {
        return r;
    }
    let delta = bp_deg(&r) - dg;
    let mut steps = 0u32;
    while !bp_is_zero(&r) && bp_deg(&r) >= dg {
        let dr = bp_deg(&r);
        let lr = r.last().unwrap().clone();
        // r <- lg*r - lr * beta^(dr-dg) * g
        let scaled = bp_mul_apoly(&r, &lg);
        let mut shifted: BForm<C> = vec![Vec::new(); dr - dg];
        shifted.extend(g.iter().map(|c| a_mul(c, &lr)));
        r = bp_sub(&scaled, &shifted);
        steps += 1;
    }
    for _ in steps..=(delta as u32) {
        r = bp_mul_apoly(&r, &lg);
    }
    r
}

/// Content: gcd of all beta-coefficients, monic.
fn bp_content<C: Field>(f: &BForm<C>) -> APoly<C> {
    let mut g: APoly<C> = Vec::new();
    for c in f {
        if a_is_zero(c) {
            continue;
        }
        g = a_gcd(&g, c);
        if g.len() == 1 {
            break;
        }
    }
    g
}

/// Subresultant PRS gcd of primitive inputs; returns the primitive gcd.
fn bp_primitive_gcd<C: Field>(pf: BForm<C>, pg: BForm<C>) -> BForm<C> {
    let (mut f, mut g) = if bp_deg(&pf) >= bp_deg(&pg) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    let witness = f
        .iter()
        .flat_map(|c| c.iter())
        .find(|c| !c.is_zero())
        .expect("primitive gcd of zero polynomial");
    let one = vec![witness.one_like()];
    let mut gv: APoly<C> = one.clone();
    let mut h: APoly<C> = one;
    loop {
        let delta = (bp_deg(&f) - bp_deg(&g)) as u32;
        let r = bp_pseudo_rem(&f, &g);
        if bp_is_zero(&r) {
            break;
        }
        let divisor = a_mul(&gv, &a_pow(&h, delta));
        f = std::mem::replace(&mut g, bp_exact_div_apoly(&r, &divisor));
        gv = f.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            a_exact_div(&a_pow(&gv, delta), &a_pow(&h, delta - 1))
        };
    }
    let cont = bp_content(&g);
    bp_exact_div_apoly(&g, &cont)
}

fn to_bform<C: Field>(terms: &BTreeMap<(u32, u32), C>) -> BForm<C> {
    if terms.is_empty() {
        return Vec::new();
    }
    let zero = terms.values().next().unwrap().zero_like();
    let max_b = terms.keys().map(|&(_, n)| n).max().unwrap() as usize;
    let mut out: BForm<C> = vec![Vec::new(); max_b + 1];
    for (&(m, n), c) in terms {
        let row = &mut out[n as usize];
        if row.len() <= m as usize {
            row.resize(m as usize + 1, zero.clone());
        }
        row[m as usize] = c.clone();
    }
    for row in out.iter_mut() {
        atrim(row);
    }
    out
}

fn from_bform<C: Field>(f: &BForm<C>) -> BTreeMap<(u32, u32), C> {
    let mut terms = BTreeMap::new();
    for (n, row) in f.iter().enumerate() {
        for (m, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.insert((m as u32, n as u32), c.clone());
            }
        }
    }
    terms
}

/// Gcd of two term maps; result is un-normalized (callers make it monic
/// under their monomial order). Zero inputs behave as usual:
/// gcd(f, 0) = f, gcd(0, 0) = 0.
pub(crate) fn bipoly_gcd_terms<C: Field>(
    a: &BTreeMap<(u32, u32), C>,
    b: &BTreeMap<(u32, u32), C>,
) -> BTreeMap<(u32, u32), C> {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    // Constant fast path: gcd is a unit.
    let constant = |t: &BTreeMap<(u32, u32), C>| t.len() == 1 && t.contains_key(&(0, 0));
    if constant(a) || constant(b) {
        let one = a.values().next().unwrap().one_like();
        let mut t = BTreeMap::new();
        t.insert((0, 0), one);
        return t;
    }
    let fa = to_bform(a);
    let fb = to_bform(b);
    let ca = bp_content(&fa);
    let cb = bp_content(&fb);
    let cont = a_gcd(&ca, &cb);
    let pa = bp_exact_div_apoly(&fa, &ca);
    let pb = bp_exact_div_apoly(&fb, &cb);
    let pp = if bp_deg(&pa) == 0 && bp_deg(&pb) == 0 {
        // Both primitive parts are alpha-polynomials: their gcd as
        // primitive beta-polynomials of degree zero is a unit.
        vec![vec![cont[0].one_like()]]
    } else {
        bp_primitive_gcd(pa, pb)
    };
    let g = bp_mul_apoly(&pp, &cont);
    from_bform(&g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{FpScalar, PrimeParam};

    fn terms(p: PrimeParam, list: &[(u32, u32, i64)]) -> BTreeMap<(u32, u32), FpScalar> {
        let mut t = BTreeMap::new();
        for &(m, n, c) in list {
            let c = FpScalar::new(c, p);
            if !crate::ring::Domain::is_zero(&c) {
                t.insert((m, n), c);
            }
        }
        t
    }

    fn mul(
        a: &BTreeMap<(u32, u32), FpScalar>,
        b: &BTreeMap<(u32, u32), FpScalar>,
    ) -> BTreeMap<(u32, u32), FpScalar> {
        use crate::ring::Domain;
        let mut out: BTreeMap<(u32, u32), FpScalar> = BTreeMap::new();
        for (&(m1, n1), c1) in a {
            for (&(m2, n2), c2) in b {
                let k = (m1 + m2, n1 + n2);
                let add = c1.mul(c2);
                let v = match out.remove(&k) {
                    Some(prev) => prev.add(&add),
                    None => add,
                };
                if !v.is_zero() {
                    out.insert(k, v);
                }
            }
        }
        out
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let p = PrimeParam::new(5).unwrap();
        // f = (a + b) common factor
        let f = terms(p, &[(1, 0, 1), (0, 1, 1)]);
        let g = terms(p, &[(1, 1, 1), (0, 0, 2)]); // a*b + 2
        let h = terms(p, &[(2, 0, 1), (0, 1, 3)]); // a^2 + 3b
        let fg = mul(&f, &g);
        let fh = mul(&f, &h);
        let d = bipoly_gcd_terms(&fg, &fh);
        // d must be an FpScalar multiple of f (g, h share no factor).
        assert_eq!(d.len(), f.len());
        let scale = d.values().next().unwrap().exact_div(f.values().next().unwrap());
        for (k, c) in &f {
            assert_eq!(d.get(k).copied(), Some(c.mul(&scale)));
        }
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let p = PrimeParam::new(3).unwrap();
        let f = terms(p, &[(1, 0, 1), (0, 0, 1)]); // a + 1
        let g = terms(p, &[(0, 1, 1), (0, 0, 1)]); // b + 1
        let d = bipoly_gcd_terms(&f, &g);
        assert_eq!(d.len(), 1);
        assert!(d.contains_key(&(0, 0)));
    }

    #[test]
    fn gcd_univariate_inputs() {
        let p = PrimeParam::new(3).unwrap();
        // (a+1)^2 and (a+1)(a+2): gcd = a+1 (up to scale)
        let a1 = terms(p, &[(1, 0, 1), (0, 0, 1)]);
        let a2 = terms(p, &[(1, 0, 1), (0, 0, 2)]);
        let f = mul(&a1, &a1);
        let g = mul(&a1, &a2);
        let d = bipoly_gcd_terms(&f, &g);
        assert_eq!(d.len(), 2);
        let scale = d.get(&(1, 0)).unwrap().clone();
        assert_eq!(d.get(&(0, 0)).map(|c| c.exact_div(&scale)), Some(FpScalar::new(1, p)));
    }
}
