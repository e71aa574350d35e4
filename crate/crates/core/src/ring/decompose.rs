//! Splitting a finite commutative ring into local factors.
//!
//! Every finite commutative ring is the product of the rings `eR` over its
//! primitive idempotents `e`. Products are split factor by factor so the
//! caller's factor order is kept; other rings are split through idempotents.

use super::{Construction, FiniteRing, Ring};

/// Local factors of a ring, split into non-field locals and fields.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub locals: Vec<Ring>,
    pub fields: Vec<Ring>,
}

impl Decomposition {
    pub fn local_count(&self) -> usize {
        self.locals.len()
    }

    pub fn field_count(&self) -> usize {
        self.fields.len()
    }
}

/// Local factors in order (fields included).
pub fn local_factors(ring: &Ring) -> Vec<Ring> {
    if let Construction::Product(fs) = ring.construction() {
        return fs.iter().flat_map(local_factors).collect();
    }
    let prims = primitive_idempotents(ring);
    if prims.len() <= 1 {
        return vec![ring.clone()];
    }
    prims
        .iter()
        .enumerate()
        .map(|(i, &e)| summand(ring, e, i))
        .collect()
}

pub fn decompose(ring: &Ring) -> Decomposition {
    let (fields, locals) = local_factors(ring).into_iter().partition(|f| f.is_field());
    Decomposition { locals, fields }
}

/// Nonzero idempotents with no nonzero idempotent strictly below them.
pub fn primitive_idempotents(ring: &FiniteRing) -> Vec<usize> {
    let idem: Vec<usize> = ring.idempotents().into_iter().filter(|&e| e != 0).collect();
    idem.iter()
        .copied()
        .filter(|&e| {
            !idem
                .iter()
                .any(|&f| f != e && ring.mul(e, f) == f)
        })
        .collect()
}

/// The ring `eR` with identity `e`, re-indexed densely with zero first.
fn summand(ring: &Ring, e: usize, i: usize) -> Ring {
    let mut elems: Vec<usize> = ring.elements().map(|x| ring.mul(e, x)).collect();
    elems.sort_unstable();
    elems.dedup();
    let pos = |x: usize| elems.binary_search(&x).expect("eR is closed");
    let n = elems.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in &elems {
        for &b in &elems {
            add.push(pos(ring.add(a, b)) as u32);
            mul.push(pos(ring.mul(a, b)) as u32);
        }
    }
    let names = elems.iter().map(|&x| ring.element_name(x)).collect();
    FiniteRing::from_tables(
        format!("{}[e{}]", ring.name(), i + 1),
        pos(e),
        add,
        mul,
        names,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z12_splits_into_z4_and_z3() {
        let d = decompose(&FiniteRing::zn(12).unwrap());
        assert_eq!(d.local_count(), 1);
        assert_eq!(d.field_count(), 1);
        assert_eq!(d.locals[0].order(), 4);
        assert_eq!(d.fields[0].order(), 3);
        d.locals[0].validate_axioms().unwrap();
        assert_eq!(d.locals[0].zero_divisor_count(), 1);
    }

    #[test]
    fn local_rings_do_not_split() {
        for r in [FiniteRing::zn(16).unwrap(), FiniteRing::gf(2, 3).unwrap()] {
            let f = local_factors(&r);
            assert_eq!(f.len(), 1);
            assert_eq!(f[0].name(), r.name());
        }
    }

    #[test]
    fn products_split_per_factor() {
        let z2 = FiniteRing::zn(2).unwrap();
        let z8 = FiniteRing::zn(8).unwrap();
        let z6 = FiniteRing::zn(6).unwrap();
        let r = FiniteRing::product(&[z2, z8, z6]).unwrap();
        let orders: Vec<usize> = local_factors(&r).iter().map(|f| f.order()).collect();
        assert_eq!(orders, vec![2, 8, 2, 3]);
        let d = decompose(&r);
        assert_eq!((d.local_count(), d.field_count()), (1, 3));
    }

    #[test]
    fn factor_orders_multiply_back() {
        for n in 2..=120u64 {
            let r = FiniteRing::zn(n).unwrap();
            let f = local_factors(&r);
            assert_eq!(f.iter().map(|x| x.order()).product::<usize>(), n as usize);
            assert!(f.iter().all(|x| x.is_local()));
        }
    }
}
