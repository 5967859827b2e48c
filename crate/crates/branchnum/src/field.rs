//! Exact arithmetic in GF(p^m).
//!
//! A [`Field`] is built from a prime characteristic `p`, an extension degree
//! `m` and a monic defining polynomial of degree `m`, which is checked for
//! irreducibility by exact trial division. Elements are kept in a canonical
//! packed encoding: the integer whose base-p digit `i` is the coefficient of
//! `x^i`. Encodings therefore range over `0..q` with `q = p^m`, and their
//! numeric order is the canonical element order used everywhere else.
//!
//! Binary fields with `m <= 16` get a log/antilog table pair keyed to a
//! generator of the multiplicative group; other fields go through generic
//! modular polynomial arithmetic. The two multiplication backends are
//! observationally identical (see the cross-backend tests below).

use std::fmt;

/// Largest supported field order. Fields with q > 2^32 are out of scope.
const MAX_ORDER: u128 = 1 << 32;

/// Binary fields up to this extension degree carry log/antilog tables.
const TABLE_DEGREE_LIMIT: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// The requested characteristic is not a prime number.
    NotPrime(u64),
    /// The defining polynomial has a non-trivial factor over GF(p).
    Reducible(Vec<u64>),
    /// The defining polynomial is not monic of degree m.
    DegreeMismatch { expected: u32, got: usize },
    /// A polynomial coefficient lies outside [0, p).
    CoefficientOutOfRange { index: usize, value: u64 },
    /// p^m exceeds the supported maximum order 2^32.
    TooLarge { p: u64, m: u32 },
    /// An encoding does not name an element of this field.
    NotInField { value: u64, q: u64 },
    /// Multiplicative inverse of zero requested.
    InvOfZero,
    /// A token could not be parsed as a hexadecimal element.
    InvalidHex(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::Reducible(poly) => {
                write!(f, "defining polynomial {poly:?} is reducible over GF(p)")
            }
            FieldError::DegreeMismatch { expected, got } => write!(
                f,
                "defining polynomial must be monic of degree {expected} ({} coefficients), got {got}",
                expected + 1
            ),
            FieldError::CoefficientOutOfRange { index, value } => {
                write!(f, "polynomial coefficient {value} at index {index} is not in [0, p)")
            }
            FieldError::TooLarge { p, m } => {
                write!(f, "field order {p}^{m} exceeds the supported maximum 2^32")
            }
            FieldError::NotInField { value, q } => {
                write!(f, "encoding {value} is not an element of a field of order {q}")
            }
            FieldError::InvOfZero => write!(f, "zero has no multiplicative inverse"),
            FieldError::InvalidHex(s) => write!(f, "invalid hex element {s:?}"),
        }
    }
}

impl std::error::Error for FieldError {}

/// One element of GF(p^m) in canonical packed encoding.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub(crate) u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    pub fn encoding(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct LogTables {
    /// log[enc] = discrete log of `enc` base the generator; log[0] unused.
    log: Vec<u32>,
    /// exp[i] = generator^i, doubled in length so `exp[log a + log b]`
    /// needs no reduction mod q-1.
    exp: Vec<u32>,
}

/// A concrete finite field GF(p^m), immutable once constructed.
pub struct Field {
    p: u64,
    m: u32,
    q: u64,
    /// Little-endian coefficients of the defining polynomial; length m+1, monic.
    poly: Vec<u64>,
    /// Bit-packed defining polynomial, only meaningful for p = 2.
    poly_bits: u64,
    tables: Option<LogTables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("poly", &self.poly)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.poly == other.poly
    }
}

impl Eq for Field {}

impl Field {
    /// Constructs GF(p^m) from a little-endian coefficient list of the
    /// defining polynomial (length m+1, leading coefficient 1).
    pub fn new(p: u64, m: u32, poly: &[u64]) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m < 1 || poly.len() != m as usize + 1 || poly[m as usize] != 1 {
            return Err(FieldError::DegreeMismatch { expected: m.max(1), got: poly.len() });
        }
        for (i, &c) in poly.iter().enumerate() {
            if c >= p {
                return Err(FieldError::CoefficientOutOfRange { index: i, value: c });
            }
        }
        let q = checked_order(p, m).ok_or(FieldError::TooLarge { p, m })?;
        if !is_irreducible(poly, p) {
            return Err(FieldError::Reducible(poly.to_vec()));
        }

        let poly_bits = if p == 2 {
            poly.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };

        let mut field = Field { p, m, q, poly: poly.to_vec(), poly_bits, tables: None };
        if p == 2 && m <= TABLE_DEGREE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// Constructs GF(p^m) from the integer-encoded polynomial whose base-p
    /// digit i is the coefficient of x^i (for p = 2 this is the usual bit
    /// packing, e.g. 0x11D for x^8+x^4+x^3+x^2+1).
    pub fn from_encoded_poly(p: u64, m: u32, code: u64) -> Result<Field, FieldError> {
        if p < 2 {
            return Err(FieldError::NotPrime(p));
        }
        let mut digits = Vec::with_capacity(m as usize + 1);
        let mut rest = code;
        while rest > 0 {
            digits.push(rest % p);
            rest /= p;
        }
        if digits.is_empty() {
            digits.push(0);
        }
        Field::new(p, m, &digits)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Field order q = p^m.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn is_binary(&self) -> bool {
        self.p == 2
    }

    /// Little-endian coefficients of the defining polynomial.
    pub fn poly(&self) -> &[u64] {
        &self.poly
    }

    /// Integer encoding of the defining polynomial (base-p digit packing).
    pub fn poly_encoded(&self) -> u64 {
        let mut code = 0u64;
        for &c in self.poly.iter().rev() {
            code = code * self.p + c;
        }
        code
    }

    /// True when multiplication is table-driven rather than generic.
    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Validates an encoding and wraps it as an element.
    pub fn element(&self, enc: u64) -> Result<FieldElement, FieldError> {
        if enc < self.q {
            Ok(FieldElement(enc))
        } else {
            Err(FieldError::NotInField { value: enc, q: self.q })
        }
    }

    /// All q elements in ascending canonical-encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    /// Parses "03_x", "0x03" or bare-hex "03" into an element of this field.
    pub fn element_from_hex(&self, s: &str) -> Result<FieldElement, FieldError> {
        self.element(parse_hex(s)?)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        self.digitwise(a, b, |da, db, p| (da + db) % p)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m == 1 {
            return FieldElement((a.0 + self.p - b.0) % self.p);
        }
        self.digitwise(a, b, |da, db, p| (da + p - db) % p)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(FieldElement(0), a)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        match &self.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    FieldElement(0)
                } else {
                    let idx = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                    FieldElement(t.exp[idx] as u64)
                }
            }
            None => self.mul_generic(a, b),
        }
    }

    /// Schoolbook multiply-and-reduce, independent of the table backend.
    pub fn mul_generic(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            // Carry-less product of the bit vectors, then reduce by the
            // defining polynomial. Degrees stay below 2m-1 <= 63 bits.
            let mut acc = 0u64;
            let mut bb = b.0;
            let mut shifted = a.0;
            while bb != 0 {
                if bb & 1 == 1 {
                    acc ^= shifted;
                }
                shifted <<= 1;
                bb >>= 1;
            }
            let m = self.m;
            let mut bit = 2 * m as u64;
            while bit > m as u64 {
                bit -= 1;
                if (acc >> bit) & 1 == 1 {
                    acc ^= self.poly_bits << (bit - m as u64);
                }
            }
            return FieldElement(acc);
        }
        if self.m == 1 {
            let prod = (a.0 as u128 * b.0 as u128) % self.p as u128;
            return FieldElement(prod as u64);
        }

        // Digits are < p <= 2^16 whenever m >= 2, so u64 accumulation is safe.
        let m = self.m as usize;
        let p = self.p;
        let mut da = [0u64; 64];
        let mut db = [0u64; 64];
        unpack_digits(a.0, p, &mut da[..m]);
        unpack_digits(b.0, p, &mut db[..m]);
        let mut prod = [0u64; 127];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] += da[i] * db[j];
            }
        }
        for c in prod[..2 * m - 1].iter_mut() {
            *c %= p;
        }
        // x^m = -(poly[0] + poly[1] x + ... + poly[m-1] x^(m-1))
        for d in (m..=2 * m - 2).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for j in 0..m {
                if self.poly[j] != 0 {
                    prod[d - m + j] = (prod[d - m + j] + c * (p - self.poly[j])) % p;
                }
            }
        }
        FieldElement(pack_digits(&prod[..m], p))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::InvOfZero);
        }
        match &self.tables {
            Some(t) => {
                let span = (self.q - 1) as usize;
                let idx = span - t.log[a.0 as usize] as usize;
                Ok(FieldElement(t.exp[idx] as u64))
            }
            None => Ok(self.pow(a, self.q - 2)),
        }
    }

    /// `a` raised to a non-negative integer power by square-and-multiply.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    fn digitwise(
        &self,
        a: FieldElement,
        b: FieldElement,
        op: impl Fn(u64, u64, u64) -> u64,
    ) -> FieldElement {
        let p = self.p;
        let mut out = 0u64;
        let mut scale = 1u64;
        let (mut ra, mut rb) = (a.0, b.0);
        for _ in 0..self.m {
            let digit = op(ra % p, rb % p, p);
            out += digit * scale;
            ra /= p;
            rb /= p;
            scale = scale.wrapping_mul(p);
        }
        FieldElement(out)
    }

    fn build_tables(&self) -> LogTables {
        let span = (self.q - 1) as usize;
        if span == 1 {
            // GF(2): trivial multiplicative group.
            return LogTables { log: vec![0, 0], exp: vec![1] };
        }
        let generator = self
            .find_generator()
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * span - 1];
        let mut log = vec![0u32; self.q as usize];
        let mut x = self.one();
        for (i, slot) in exp.iter_mut().enumerate().take(span) {
            *slot = x.0 as u32;
            log[x.0 as usize] = i as u32;
            x = self.mul_generic(x, generator);
        }
        for i in span..2 * span - 1 {
            exp[i] = exp[i - span];
        }
        LogTables { log, exp }
    }

    /// Exhaustive order test over candidate encodings. The defining
    /// polynomial need not be primitive; any generator will do.
    fn find_generator(&self) -> Option<FieldElement> {
        let span = self.q - 1;
        for cand in 2..self.q {
            let g = FieldElement(cand);
            let mut x = g;
            let mut order = 1u64;
            while x.0 != 1 {
                x = self.mul_generic(x, g);
                order += 1;
                if order > span {
                    break;
                }
            }
            if order == span {
                return Some(g);
            }
        }
        None
    }
}

/// Raw hex parser for the notations "03_x", "0x03" and bare "03".
pub fn parse_hex(s: &str) -> Result<u64, FieldError> {
    let t = s.trim();
    let digits = if let Some(rest) = t.strip_suffix("_x").or_else(|| t.strip_suffix("_X")) {
        rest
    } else if let Some(rest) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        rest
    } else {
        t
    };
    if digits.is_empty() {
        return Err(FieldError::InvalidHex(s.to_string()));
    }
    u64::from_str_radix(digits, 16).map_err(|_| FieldError::InvalidHex(s.to_string()))
}

fn checked_order(p: u64, m: u32) -> Option<u64> {
    let mut q: u128 = 1;
    for _ in 0..m {
        q = q.checked_mul(p as u128)?;
        if q > MAX_ORDER {
            return None;
        }
    }
    Some(q as u64)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn unpack_digits(mut enc: u64, p: u64, out: &mut [u64]) {
    for slot in out.iter_mut() {
        *slot = enc % p;
        enc /= p;
    }
}

fn pack_digits(digits: &[u64], p: u64) -> u64 {
    let mut out = 0u64;
    for &d in digits.iter().rev() {
        out = out * p + d;
    }
    out
}

/// Exact irreducibility test: trial division by every monic polynomial of
/// degree 1..=m/2 over GF(p). Degree-1 divisors subsume the root check.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let m = poly.len() - 1;
    if m == 1 {
        return true;
    }
    for d in 1..=m / 2 {
        // p^d monic divisors of degree d, enumerated by their lower digits.
        let count = (p as u128).pow(d as u32);
        let mut code = 0u128;
        while code < count {
            let mut divisor = vec![0u64; d + 1];
            let mut rest = code;
            for slot in divisor.iter_mut().take(d) {
                *slot = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            divisor[d] = 1;
            if poly_rem_is_zero(poly, &divisor, p) {
                return false;
            }
            code += 1;
        }
    }
    true
}

/// True when `den` (monic) divides `num` over GF(p).
fn poly_rem_is_zero(num: &[u64], den: &[u64], p: u64) -> bool {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    for d in (dd..rem.len()).rev() {
        let c = rem[d];
        if c == 0 {
            continue;
        }
        rem[d] = 0;
        for j in 0..dd {
            let sub = (c as u128 * den[j] as u128 % p as u128) as u64;
            rem[d - dd + j] = (rem[d - dd + j] + p - sub % p) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    pub(crate) fn gf(q: u64) -> Field {
        match q {
            2 => Field::from_encoded_poly(2, 1, 0b11).unwrap(),
            3 => Field::from_encoded_poly(3, 1, 4).unwrap(), // x + 1
            4 => Field::from_encoded_poly(2, 2, 0b111).unwrap(),
            5 => Field::from_encoded_poly(5, 1, 6).unwrap(), // x + 1
            8 => Field::from_encoded_poly(2, 3, 0b1011).unwrap(),
            9 => Field::new(3, 2, &[1, 0, 1]).unwrap(), // x^2 + 1
            16 => Field::from_encoded_poly(2, 4, 0b10011).unwrap(),
            256 => Field::from_encoded_poly(2, 8, 0x11D).unwrap(),
            _ => panic!("no default polynomial for q = {q}"),
        }
    }

    #[test]
    fn constructs_khazad_field() {
        let f = gf(256);
        assert_eq!(f.order(), 256);
        assert_eq!(f.poly_encoded(), 0x11D);
        assert!(f.has_tables());
    }

    #[test]
    fn constructs_aes_field() {
        // Irreducibility is established by the constructor's trial division.
        let f = Field::from_encoded_poly(2, 8, 0x11B).unwrap();
        assert_eq!(f.order(), 256);
    }

    #[test]
    fn constructs_prime_field() {
        let f = Field::from_encoded_poly(2, 1, 0b11).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.add(f.one(), f.one()), f.zero());
    }

    #[test]
    fn rejects_non_prime_characteristic() {
        assert_eq!(Field::new(4, 1, &[1, 1]).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(1, 1, &[1, 1]).unwrap_err(), FieldError::NotPrime(1));
    }

    #[test]
    fn rejects_reducible_polynomial() {
        // x^2 + 1 = (x + 1)^2 over GF(2).
        let err = Field::from_encoded_poly(2, 2, 0b101).unwrap_err();
        assert!(matches!(err, FieldError::Reducible(_)));
        // x^8 alone is divisible by x.
        let err = Field::from_encoded_poly(2, 8, 0x100).unwrap_err();
        assert!(matches!(err, FieldError::Reducible(_)));
    }

    #[test]
    fn rejects_degree_mismatch() {
        assert!(matches!(
            Field::new(2, 8, &[1, 1, 1]).unwrap_err(),
            FieldError::DegreeMismatch { .. }
        ));
        // Not monic.
        assert!(matches!(
            Field::new(3, 2, &[1, 0, 2]).unwrap_err(),
            FieldError::DegreeMismatch { .. }
        ));
    }

    #[test]
    fn rejects_oversized_order() {
        let mut poly = vec![0u64; 34];
        poly[0] = 1;
        poly[1] = 1;
        poly[33] = 1;
        assert!(matches!(
            Field::new(2, 33, &poly).unwrap_err(),
            FieldError::TooLarge { .. }
        ));
    }

    #[test]
    fn khazad_field_products() {
        let f = gf(256);
        let e = |v: u64| f.element(v).unwrap();
        // (x+1)^2 = x^2 + 1 in characteristic 2, no reduction needed.
        assert_eq!(f.mul(e(0x03), e(0x03)), e(0x05));
        // x * x^7 = x^8 = x^4 + x^3 + x^2 + 1 mod the defining polynomial.
        assert_eq!(f.mul(e(0x02), e(0x80)), e(0x1D));
    }

    #[test]
    fn zero_absorbs() {
        let f = gf(256);
        for a in f.elements() {
            assert_eq!(f.mul(a, f.zero()), f.zero());
            assert_eq!(f.mul(f.zero(), a), f.zero());
        }
    }

    #[test]
    fn tables_agree_with_schoolbook_gf256() {
        for poly in [0x11Du64, 0x11B] {
            let f = Field::from_encoded_poly(2, 8, poly).unwrap();
            assert!(f.has_tables());
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_generic(a, b), "poly {poly:#x} {a} * {b}");
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for q in [2u64, 3, 4, 5, 8, 9, 16] {
            let f = gf(q);
            let elems: Vec<_> = f.elements().collect();
            for &a in &elems {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    let ai = f.inv(a).unwrap();
                    assert!(ai.encoding() < q);
                    assert_eq!(f.mul(a, ai), f.one());
                }
                for &b in &elems {
                    let s = f.add(a, b);
                    let m = f.mul(a, b);
                    assert!(s.encoding() < q && m.encoding() < q, "canonical closure");
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &elems {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_gf256() {
        let f = gf(256);
        let elems: Vec<_> = f.elements().collect();
        for &a in &elems {
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
            for &b in &elems {
                for &c in &elems {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_sampled_gf65536() {
        let f = Field::from_encoded_poly(2, 16, 0x1002D).unwrap(); // x^16+x^5+x^3+x^2+1
        assert!(f.has_tables());
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..5000 {
            let a = FieldElement(rng.gen_range(0..f.order()));
            let b = FieldElement(rng.gen_range(0..f.order()));
            let c = FieldElement(rng.gen_range(0..f.order()));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.mul(a, b), f.mul_generic(a, b));
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        }
    }

    #[test]
    fn gf9_extension_arithmetic() {
        let f = gf(9);
        assert!(!f.has_tables());
        // (x+1)^2 = x^2 + 2x + 1 = 2x over x^2 + 1 (x^2 = -1 = 2).
        let x_plus_1 = f.element(4).unwrap();
        assert_eq!(f.mul(x_plus_1, x_plus_1), f.element(6).unwrap());
    }

    #[test]
    fn inverse_of_zero_errors() {
        let f = gf(16);
        assert_eq!(f.inv(f.zero()).unwrap_err(), FieldError::InvOfZero);
    }

    #[test]
    fn element_range_checked() {
        let f = gf(8);
        assert!(f.element(7).is_ok());
        assert!(matches!(f.element(8), Err(FieldError::NotInField { .. })));
        assert_eq!(f.elements().count(), 8);
    }

    #[test]
    fn hex_parsing_notations() {
        assert_eq!(parse_hex("03_x").unwrap(), 3);
        assert_eq!(parse_hex("0x03").unwrap(), 3);
        assert_eq!(parse_hex("03").unwrap(), 3);
        assert_eq!(parse_hex("1FF_x").unwrap(), 0x1FF);
        assert_eq!(parse_hex("f4_X").unwrap(), 0xF4);
        assert!(parse_hex("zz").is_err());
        assert!(parse_hex("").is_err());

        let f = gf(256);
        assert_eq!(f.element_from_hex("0b_x").unwrap().encoding(), 0x0B);
        assert!(matches!(
            f.element_from_hex("1FF_x"),
            Err(FieldError::NotInField { .. })
        ));
    }
}
