//! Unsigned magnitudes stored as little-endian limbs of `LB` decimal digits.
//!
//! A magnitude is a `Vec<u32>` whose limb `i` carries digits
//! `[i * LB, (i + 1) * LB)` counted from the least significant end. The
//! most significant limb is never zero; zero is the empty vector.

use std::cmp::Ordering;

use crate::error::{Error, Result};

pub(crate) type Mag = Vec<u32>;

pub(crate) const fn pow10_u64(k: usize) -> u64 {
    let mut v = 1u64;
    let mut i = 0;
    while i < k {
        v *= 10;
        i += 1;
    }
    v
}

/// Compile-time properties of a limb width.
pub(crate) struct Radix<const LB: usize>;

impl<const LB: usize> Radix<LB> {
    pub(crate) const VALID: () = assert!(LB >= 1 && LB <= 9, "limb width must be 1..=9 digits");
    pub(crate) const BASE: u64 = pow10_u64(LB);
}

pub(crate) fn trim(v: &mut Mag) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn decimal_len(mut x: u32) -> usize {
    let mut n = 0;
    while x > 0 {
        n += 1;
        x /= 10;
    }
    n
}

pub(crate) fn digit_count<const LB: usize>(v: &[u32]) -> usize {
    match v.last() {
        None => 0,
        Some(&top) => (v.len() - 1) * LB + decimal_len(top),
    }
}

/// Decimal digit at position `i` (0 = units).
pub(crate) fn digit_at<const LB: usize>(v: &[u32], i: usize) -> u8 {
    let limb = i / LB;
    if limb >= v.len() {
        return 0;
    }
    ((u64::from(v[limb]) / pow10_u64(i % LB)) % 10) as u8
}

/// True if any digit at a position strictly below `i` is nonzero.
pub(crate) fn any_nonzero_below<const LB: usize>(v: &[u32], i: usize) -> bool {
    let limb = i / LB;
    let within = i % LB;
    if v[..limb.min(v.len())].iter().any(|&l| l != 0) {
        return true;
    }
    limb < v.len() && within > 0 && u64::from(v[limb]) % pow10_u64(within) != 0
}

pub(crate) fn trailing_zeros<const LB: usize>(v: &[u32]) -> usize {
    let mut n = 0;
    for &limb in v {
        if limb == 0 {
            n += LB;
            continue;
        }
        let mut l = limb;
        while l % 10 == 0 {
            l /= 10;
            n += 1;
        }
        return n;
    }
    n
}

pub(crate) fn from_u64<const LB: usize>(mut x: u64) -> Mag {
    let base = Radix::<LB>::BASE;
    let mut v = Vec::new();
    while x > 0 {
        v.push((x % base) as u32);
        x /= base;
    }
    v
}

/// Value of a magnitude if it fits in a `u64`.
pub(crate) fn to_u64<const LB: usize>(v: &[u32]) -> Option<u64> {
    let mut acc = 0u64;
    for &limb in v.iter().rev() {
        acc = acc
            .checked_mul(Radix::<LB>::BASE)?
            .checked_add(u64::from(limb))?;
    }
    Some(acc)
}

/// Builds a magnitude from decimal digits given most significant first.
pub(crate) fn from_digits<const LB: usize>(digits: &[u8]) -> Mag {
    let mut v = Vec::with_capacity(digits.len() / LB + 1);
    let mut end = digits.len();
    while end > 0 {
        let start = end.saturating_sub(LB);
        let limb = digits[start..end]
            .iter()
            .fold(0u32, |acc, &d| acc * 10 + u32::from(d));
        v.push(limb);
        end = start;
    }
    trim(&mut v);
    v
}

/// Decimal digits, most significant first. Zero yields an empty vector.
pub(crate) fn to_digits<const LB: usize>(v: &[u32]) -> Vec<u8> {
    let n = digit_count::<LB>(v);
    (0..n).rev().map(|i| digit_at::<LB>(v, i)).collect()
}

pub(crate) fn cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

pub(crate) fn add<const LB: usize>(a: &[u32], b: &[u32]) -> Mag {
    let base = Radix::<LB>::BASE;
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = Vec::with_capacity(long.len() + 1);
    let mut carry = 0u64;
    for (i, &l) in long.iter().enumerate() {
        let s = u64::from(l) + u64::from(short.get(i).copied().unwrap_or(0)) + carry;
        out.push((s % base) as u32);
        carry = s / base;
    }
    if carry > 0 {
        out.push(carry as u32);
    }
    out
}

/// `a - b`; requires `a >= b`.
pub(crate) fn sub<const LB: usize>(a: &[u32], b: &[u32]) -> Mag {
    debug_assert!(cmp(a, b) != Ordering::Less);
    let base = Radix::<LB>::BASE as i64;
    let mut out = Vec::with_capacity(a.len());
    let mut borrow = 0i64;
    for (i, &l) in a.iter().enumerate() {
        let mut d = i64::from(l) - i64::from(b.get(i).copied().unwrap_or(0)) - borrow;
        if d < 0 {
            d += base;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push(d as u32);
    }
    debug_assert_eq!(borrow, 0);
    trim(&mut out);
    out
}

pub(crate) fn add_small<const LB: usize>(a: &[u32], m: u32) -> Mag {
    add::<LB>(a, &from_u64::<LB>(u64::from(m)))
}

pub(crate) fn mul_small<const LB: usize>(a: &[u32], m: u32) -> Mag {
    if m == 0 || a.is_empty() {
        return Vec::new();
    }
    let base = Radix::<LB>::BASE;
    let mut out = Vec::with_capacity(a.len() + 2);
    let mut carry = 0u64;
    for &l in a {
        let t = u64::from(l) * u64::from(m) + carry;
        out.push((t % base) as u32);
        carry = t / base;
    }
    while carry > 0 {
        out.push((carry % base) as u32);
        carry /= base;
    }
    out
}

/// Schoolbook product.
pub(crate) fn mul<const LB: usize>(a: &[u32], b: &[u32]) -> Mag {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let base = Radix::<LB>::BASE;
    let mut out = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = u64::from(x);
        let mut carry = 0u64;
        for (j, &y) in b.iter().enumerate() {
            // < base^2 + 2 * base, fits comfortably for base <= 10^9
            let t = u64::from(out[i + j]) + x * u64::from(y) + carry;
            out[i + j] = (t % base) as u32;
            carry = t / base;
        }
        let mut k = i + b.len();
        while carry > 0 {
            let t = u64::from(out[k]) + carry;
            out[k] = (t % base) as u32;
            carry = t / base;
            k += 1;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn divrem_small<const LB: usize>(a: &[u32], d: u32) -> (Mag, u32) {
    assert!(d != 0);
    let base = Radix::<LB>::BASE;
    let d = u64::from(d);
    let mut q = vec![0u32; a.len()];
    let mut rem = 0u64;
    for i in (0..a.len()).rev() {
        let cur = rem * base + u64::from(a[i]);
        q[i] = (cur / d) as u32;
        rem = cur % d;
    }
    trim(&mut q);
    (q, rem as u32)
}

/// Quotient and remainder of `u / v` (Knuth, algorithm D).
pub(crate) fn divrem<const LB: usize>(u: &[u32], v: &[u32]) -> (Mag, Mag) {
    assert!(!v.is_empty(), "division by zero magnitude");
    if cmp(u, v) == Ordering::Less {
        return (Vec::new(), u.to_vec());
    }
    if v.len() == 1 {
        let (q, r) = divrem_small::<LB>(u, v[0]);
        let r = if r == 0 { Vec::new() } else { vec![r] };
        return (q, r);
    }
    let base = Radix::<LB>::BASE;
    let n = v.len();
    let m = u.len() - n;

    let d = (base / (u64::from(v[n - 1]) + 1)) as u32;
    let vn = mul_small::<LB>(v, d);
    debug_assert_eq!(vn.len(), n);
    let mut un = mul_small::<LB>(u, d);
    un.resize(u.len() + 1, 0);

    let vtop = u64::from(vn[n - 1]);
    let vnext = u64::from(vn[n - 2]);
    let mut q = vec![0u32; m + 1];

    for j in (0..=m).rev() {
        let num = u64::from(un[j + n]) * base + u64::from(un[j + n - 1]);
        let mut qhat = num / vtop;
        let mut rhat = num % vtop;
        while qhat >= base || qhat * vnext > rhat * base + u64::from(un[j + n - 2]) {
            qhat -= 1;
            rhat += vtop;
            if rhat >= base {
                break;
            }
        }

        let mut borrow = 0i64;
        let mut carry = 0u64;
        for i in 0..n {
            let p = qhat * u64::from(vn[i]) + carry;
            carry = p / base;
            let mut t = i64::from(un[i + j]) - (p % base) as i64 - borrow;
            if t < 0 {
                t += base as i64;
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = t as u32;
        }
        let t = i64::from(un[j + n]) - carry as i64 - borrow;
        if t < 0 {
            // qhat was one too large: add the divisor back
            un[j + n] = (t + base as i64) as u32;
            qhat -= 1;
            let mut c = 0u64;
            for i in 0..n {
                let s = u64::from(un[i + j]) + u64::from(vn[i]) + c;
                un[i + j] = (s % base) as u32;
                c = s / base;
            }
            un[j + n] = ((u64::from(un[j + n]) + c) % base) as u32;
        } else {
            un[j + n] = t as u32;
        }
        q[j] = qhat as u32;
    }

    trim(&mut q);
    un.truncate(n);
    trim(&mut un);
    let (r, rest) = divrem_small::<LB>(&un, d);
    debug_assert_eq!(rest, 0);
    (q, r)
}

/// `a * 10^k`. Fails with a resource error instead of aborting when the
/// result cannot be allocated.
pub(crate) fn shl_digits<const LB: usize>(a: &[u32], k: usize) -> Result<Mag> {
    if a.is_empty() {
        return Ok(Vec::new());
    }
    if k == 0 {
        return Ok(a.to_vec());
    }
    let whole = k / LB;
    let part = mul_small::<LB>(a, pow10_u64(k % LB) as u32);
    let mut out = Vec::new();
    out.try_reserve_exact(whole + part.len())
        .map_err(|_| Error::Resource(format!("cannot allocate a {}-digit significand", k)))?;
    out.resize(whole, 0);
    out.extend_from_slice(&part);
    Ok(out)
}

/// `floor(a / 10^k)`.
pub(crate) fn shr_digits<const LB: usize>(a: &[u32], k: usize) -> Mag {
    let whole = k / LB;
    if whole >= a.len() {
        return Vec::new();
    }
    let rest = &a[whole..];
    let r = k % LB;
    if r == 0 {
        rest.to_vec()
    } else {
        divrem_small::<LB>(rest, pow10_u64(r) as u32).0
    }
}
