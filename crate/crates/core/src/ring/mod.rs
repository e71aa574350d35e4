//! Finite commutative rings with identity.
//!
//! Elements are dense indices `0..order`; index 0 is always the zero element.
//! Arithmetic tables are materialized for small rings and evaluated from the
//! construction otherwise.

pub mod catalog;
pub mod decompose;
pub mod poly;
pub mod table;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::limits::DEFAULT_RING_ORDER_CAP;
use crate::par::{self, Exec};

pub use table::TableRingSpec;

/// Rings are shared immutably between graphs, verdicts and products.
pub type Ring = Arc<FiniteRing>;

/// Rings at or below this order get precomputed `add`/`mul` tables.
pub const TABLE_THRESHOLD: usize = 256;

/// How a ring was built.
#[derive(Debug, Clone)]
pub enum Construction {
    /// Z_n.
    Integers { n: u64 },
    /// F_{p^k} as Z_p[x]/(f) with `f` the smallest monic irreducible.
    Galois { p: u64, k: usize, modulus: Vec<u64> },
    /// Z_m[x]/(f) with `f` monic.
    Quotient { m: u64, modulus: Vec<u64> },
    /// Structure-constant ring.
    Table(TableRingSpec),
    /// Direct product; the first factor is the most significant digit.
    Product(Vec<Ring>),
    /// A ring given only by its tables, e.g. a summand `eR` of a larger ring.
    Explicit { names: Vec<String> },
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

struct Structure {
    unit: Vec<bool>,
    zero_divisor: Vec<bool>,
}

pub struct FiniteRing {
    name: String,
    order: usize,
    one: usize,
    construction: Construction,
    tables: Option<Tables>,
    structure: OnceLock<Structure>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Ring constructors sharing one order cap.
#[derive(Debug, Clone, Copy)]
pub struct RingBuilder {
    cap: usize,
}

impl Default for RingBuilder {
    fn default() -> Self {
        RingBuilder {
            cap: DEFAULT_RING_ORDER_CAP,
        }
    }
}

impl RingBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        RingBuilder { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_order(&self, order: u128) -> Result<usize> {
        if order > self.cap as u128 {
            return Err(Error::OrderCap {
                order,
                cap: self.cap,
            });
        }
        Ok(order as usize)
    }

    pub fn zn(&self, n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::Construction(format!("Z_n needs n >= 2, got {n}")));
        }
        let order = self.check_order(n as u128)?;
        Ok(FiniteRing::assemble(
            format!("Z{n}"),
            order,
            1,
            Construction::Integers { n },
        ))
    }

    pub fn gf(&self, p: u64, k: usize) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::Construction(format!("GF(p^k) needs p prime, got {p}")));
        }
        if k == 0 {
            return Err(Error::Construction("GF(p^k) needs k >= 1".into()));
        }
        let order = self.check_order((p as u128).checked_pow(k as u32).unwrap_or(u128::MAX))?;
        if k == 1 {
            return self.zn(p);
        }
        let modulus = poly::smallest_irreducible(p, k);
        Ok(FiniteRing::assemble(
            format!("F{order}"),
            order,
            1,
            Construction::Galois { p, k, modulus },
        ))
    }

    /// Z_m[x]/(f) for monic `f` of degree >= 1 (coefficients constant first).
    pub fn quotient(&self, m: u64, f: &[u64]) -> Result<Ring> {
        if m < 2 {
            return Err(Error::Construction(format!("Z_m[x]/(f) needs m >= 2, got {m}")));
        }
        let f = poly::reduce_coeffs(f, m);
        let Some(d) = poly::degree(&f) else {
            return Err(Error::Construction("quotient by the zero polynomial".into()));
        };
        if d == 0 {
            return Err(Error::Construction(
                "modulus must have degree >= 1".into(),
            ));
        }
        if f[d] != 1 {
            return Err(Error::Construction(format!(
                "modulus {} is not monic; normal forms would be ambiguous",
                poly::render(&f, "x")
            )));
        }
        let order = self.check_order((m as u128).checked_pow(d as u32).unwrap_or(u128::MAX))?;
        let name = format!("Z{m}[x]/({})", poly::render(&f, "x"));
        Ok(FiniteRing::assemble(
            name,
            order,
            1,
            Construction::Quotient { m, modulus: f },
        ))
    }

    /// Structure-constant ring; validated exhaustively against the ring axioms.
    pub fn table(&self, spec: TableRingSpec) -> Result<Ring> {
        spec.check()?;
        let order = self.check_order(spec.order())?;
        let one = spec.index(&spec.reduce(&spec.one)) as usize;
        let ring = FiniteRing::assemble(spec.name.clone(), order, one, Construction::Table(spec));
        ring.validate_axioms()?;
        Ok(ring)
    }

    pub fn product(&self, factors: &[Ring]) -> Result<Ring> {
        if factors.is_empty() {
            return Err(Error::Construction("product of zero rings".into()));
        }
        let order = factors
            .iter()
            .try_fold(1u128, |acc, f| acc.checked_mul(f.order() as u128))
            .unwrap_or(u128::MAX);
        let order = self.check_order(order)?;
        if factors.len() == 1 {
            return Ok(factors[0].clone());
        }
        let one = factors
            .iter()
            .fold(0usize, |acc, f| acc * f.order() + f.one());
        let name = factors
            .iter()
            .map(|f| {
                if matches!(f.construction, Construction::Product(_)) {
                    format!("({})", f.name)
                } else {
                    f.name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" x ");
        Ok(FiniteRing::assemble(
            name,
            order,
            one,
            Construction::Product(factors.to_vec()),
        ))
    }
}

impl FiniteRing {
    pub fn zn(n: u64) -> Result<Ring> {
        RingBuilder::default().zn(n)
    }

    pub fn gf(p: u64, k: usize) -> Result<Ring> {
        RingBuilder::default().gf(p, k)
    }

    pub fn quotient(m: u64, f: &[u64]) -> Result<Ring> {
        RingBuilder::default().quotient(m, f)
    }

    pub fn table(spec: TableRingSpec) -> Result<Ring> {
        RingBuilder::default().table(spec)
    }

    pub fn product(factors: &[Ring]) -> Result<Ring> {
        RingBuilder::default().product(factors)
    }

    /// Builds a ring from explicit `add`/`mul` tables over `0..order`.
    pub(crate) fn from_tables(
        name: String,
        one: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        names: Vec<String>,
    ) -> Ring {
        let order = names.len();
        Arc::new(FiniteRing {
            name,
            order,
            one,
            construction: Construction::Explicit { names },
            tables: Some(Tables { add, mul }),
            structure: OnceLock::new(),
        })
    }

    fn assemble(name: String, order: usize, one: usize, construction: Construction) -> Ring {
        let mut ring = FiniteRing {
            name,
            order,
            one,
            construction,
            tables: None,
            structure: OnceLock::new(),
        };
        if order <= TABLE_THRESHOLD {
            let n = order;
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    add.push(ring.add_raw(a, b) as u32);
                    mul.push(ring.mul_raw(a, b) as u32);
                }
            }
            ring.tables = Some(Tables { add, mul });
        }
        Arc::new(ring)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.add[a * self.order + b] as usize,
            None => self.add_raw(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.mul[a * self.order + b] as usize,
            None => self.mul_raw(a, b),
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        self.elements()
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse exists in a validated ring")
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn add_raw(&self, a: usize, b: usize) -> usize {
        match &self.construction {
            Construction::Integers { n } => ((a as u64 + b as u64) % n) as usize,
            Construction::Galois { p: m, modulus, .. } | Construction::Quotient { m, modulus } => {
                let d = modulus.len() - 1;
                let x = poly::digits(a as u64, *m, d);
                let y = poly::digits(b as u64, *m, d);
                let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % m).collect();
                poly::from_digits(&s, *m) as usize
            }
            Construction::Table(spec) => {
                let s = spec.add_coords(&spec.coords(a as u64), &spec.coords(b as u64));
                spec.index(&s) as usize
            }
            Construction::Product(fs) => self.componentwise(fs, a, b, |f, x, y| f.add(x, y)),
            Construction::Explicit { .. } => unreachable!("explicit rings always carry tables"),
        }
    }

    fn mul_raw(&self, a: usize, b: usize) -> usize {
        match &self.construction {
            Construction::Integers { n } => ((a as u64 * b as u64) % n) as usize,
            Construction::Galois { p: m, modulus, .. } | Construction::Quotient { m, modulus } => {
                let d = modulus.len() - 1;
                let x = poly::digits(a as u64, *m, d);
                let y = poly::digits(b as u64, *m, d);
                let r = poly::rem_monic(&poly::mul(&x, &y, *m), modulus, *m);
                poly::from_digits(&r, *m) as usize
            }
            Construction::Table(spec) => {
                let s = spec.mul_coords(&spec.coords(a as u64), &spec.coords(b as u64));
                spec.index(&s) as usize
            }
            Construction::Product(fs) => self.componentwise(fs, a, b, |f, x, y| f.mul(x, y)),
            Construction::Explicit { .. } => unreachable!("explicit rings always carry tables"),
        }
    }

    fn componentwise(
        &self,
        fs: &[Ring],
        mut a: usize,
        mut b: usize,
        op: impl Fn(&FiniteRing, usize, usize) -> usize,
    ) -> usize {
        let mut out = 0usize;
        let mut scale = 1usize;
        for f in fs.iter().rev() {
            let n = f.order();
            out += op(f, a % n, b % n) * scale;
            scale *= n;
            a /= n;
            b /= n;
        }
        out
    }

    /// Splits a product-ring index into factor indices.
    pub fn components(&self, mut x: usize) -> Option<Vec<usize>> {
        let Construction::Product(fs) = &self.construction else {
            return None;
        };
        let mut out = vec![0; fs.len()];
        for (slot, f) in out.iter_mut().zip(fs).rev() {
            *slot = x % f.order();
            x /= f.order();
        }
        Some(out)
    }

    /// Inverse of [`components`](Self::components).
    pub fn from_components(&self, parts: &[usize]) -> Option<usize> {
        let fs = self.factors()?;
        if parts.len() != fs.len() || parts.iter().zip(fs).any(|(&p, f)| p >= f.order()) {
            return None;
        }
        Some(parts.iter().zip(fs).fold(0, |acc, (&p, f)| acc * f.order() + p))
    }

    pub fn factors(&self) -> Option<&[Ring]> {
        match &self.construction {
            Construction::Product(fs) => Some(fs),
            _ => None,
        }
    }

    pub fn element_name(&self, x: usize) -> String {
        match &self.construction {
            Construction::Integers { .. } => x.to_string(),
            Construction::Galois { p: m, modulus, .. } | Construction::Quotient { m, modulus } => {
                poly::render(&poly::digits(x as u64, *m, modulus.len() - 1), "x")
            }
            Construction::Table(spec) => spec.render(&spec.coords(x as u64)),
            Construction::Product(fs) => {
                let parts: Vec<String> = self
                    .components(x)
                    .unwrap_or_default()
                    .iter()
                    .zip(fs)
                    .map(|(&c, f)| f.element_name(c))
                    .collect();
                format!("({})", parts.join(","))
            }
            Construction::Explicit { names } => names[x].clone(),
        }
    }

    fn structure(&self) -> &Structure {
        self.structure.get_or_init(|| {
            let n = self.order;
            let mut unit = vec![false; n];
            let mut zero_divisor = vec![false; n];
            for x in 1..n {
                for y in 0..n {
                    let p = self.mul(x, y);
                    if p == self.one {
                        unit[x] = true;
                    }
                    if y != 0 && p == 0 {
                        zero_divisor[x] = true;
                    }
                }
            }
            Structure { unit, zero_divisor }
        })
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.structure().unit[x]
    }

    /// Nonzero `x` with `xy = 0` for some nonzero `y`.
    pub fn is_zero_divisor(&self, x: usize) -> bool {
        self.structure().zero_divisor[x]
    }

    pub fn units(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_unit(x)).collect()
    }

    /// Z*(R): the nonzero zero-divisors, ascending.
    pub fn zero_divisors_nonzero(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_zero_divisor(x)).collect()
    }

    pub fn unit_count(&self) -> usize {
        self.structure().unit.iter().filter(|&&u| u).count()
    }

    pub fn zero_divisor_count(&self) -> usize {
        self.structure().zero_divisor.iter().filter(|&&z| z).count()
    }

    /// Count of nonzero elements, the other reading of `|R*|`.
    pub fn nonzero_count(&self) -> usize {
        self.order - 1
    }

    /// `ann(x)`, including 0 and possibly `x` itself.
    pub fn annihilator(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&y| self.mul(x, y) == 0).collect()
    }

    pub fn annihilator_size(&self, x: usize) -> usize {
        self.elements().filter(|&y| self.mul(x, y) == 0).count()
    }

    pub fn is_field(&self) -> bool {
        (1..self.order).all(|x| self.is_unit(x))
    }

    /// Local iff Z(R), zero included, is closed under addition.
    pub fn is_local(&self) -> bool {
        let mut z = self.zero_divisors_nonzero();
        z.push(0);
        let in_z = |x: usize| x == 0 || self.is_zero_divisor(x);
        z.iter().all(|&a| z.iter().all(|&b| in_z(self.add(a, b))))
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        if x == 0 {
            return true;
        }
        // x^(2^t) with 2^t >= |R| exceeds any nilpotency index
        let mut y = x;
        let mut reach = 1usize;
        while reach < self.order {
            y = self.mul(y, y);
            if y == 0 {
                return true;
            }
            reach *= 2;
        }
        y == 0
    }

    pub fn is_reduced(&self) -> bool {
        (1..self.order).all(|x| !self.is_nilpotent(x))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Exhaustive check of the commutative-ring-with-identity axioms.
    /// Reports the first failing triple.
    pub fn validate_axioms(&self) -> Result<()> {
        let n = self.order;
        if n < 2 || self.one == 0 {
            return Err(Error::Axiom(format!("{}: zero equals one", self.name)));
        }
        let failures = par::map_range(Exec::Parallel, 0..n, |a| self.axiom_failure_at(a));
        match failures.into_iter().flatten().next() {
            Some(msg) => Err(Error::Axiom(format!("{}: {msg}", self.name))),
            None => Ok(()),
        }
    }

    fn axiom_failure_at(&self, a: usize) -> Option<String> {
        let n = self.order;
        let name = |x: usize| self.element_name(x);
        if self.mul(self.one, a) != a {
            return Some(format!("1*{} != {}", name(a), name(a)));
        }
        if self.add(0, a) != a {
            return Some(format!("0+{} != {}", name(a), name(a)));
        }
        if self.mul(0, a) != 0 {
            return Some(format!("0*{} != 0", name(a)));
        }
        if !(0..n).any(|b| self.add(a, b) == 0) {
            return Some(format!("{} has no additive inverse", name(a)));
        }
        for b in 0..n {
            if self.add(a, b) != self.add(b, a) {
                return Some(format!("{}+{} is not commutative", name(a), name(b)));
            }
            if self.mul(a, b) != self.mul(b, a) {
                return Some(format!("{}*{} is not commutative", name(a), name(b)));
            }
            let ab_sum = self.add(a, b);
            let ab_prod = self.mul(a, b);
            for c in 0..n {
                if self.add(ab_sum, c) != self.add(a, self.add(b, c)) {
                    return Some(format!(
                        "addition not associative on ({}, {}, {})",
                        name(a),
                        name(b),
                        name(c)
                    ));
                }
                if self.mul(ab_prod, c) != self.mul(a, self.mul(b, c)) {
                    return Some(format!(
                        "multiplication not associative on ({}, {}, {})",
                        name(a),
                        name(b),
                        name(c)
                    ));
                }
                if self.mul(a, self.add(b, c)) != self.add(ab_prod, self.mul(a, c)) {
                    return Some(format!(
                        "distributivity fails on ({}, {}, {})",
                        name(a),
                        name(b),
                        name(c)
                    ));
                }
            }
        }
        None
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, k))` when `q = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
