//! Counting nonzero zero-divisors of a product ring.
//!
//! The count is `∏|R_i| - ∏|U(R_i)| - 1`: an element of the product is a unit
//! iff every coordinate is. Alongside it, per-shape sum formulas are
//! evaluated with `|X*|` read two ways (nonzero elements, or units) so the
//! report shows which reading, if either, agrees with the count.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingBuilder};

/// Product shapes with a dedicated sum formula, locals `R` and fields `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductForm {
    #[serde(rename = "R1 x F")]
    LocalField,
    #[serde(rename = "R1 x R2")]
    LocalLocal,
    #[serde(rename = "R1 x F1 x F2")]
    LocalFieldField,
    #[serde(rename = "R1 x R2 x F")]
    LocalLocalField,
    #[serde(rename = "R1 x F1 x F2 x F3")]
    LocalFieldFieldField,
    #[serde(rename = "R1 x R2 x R3")]
    LocalLocalLocal,
}

impl ProductForm {
    pub const ALL: [ProductForm; 6] = [
        ProductForm::LocalField,
        ProductForm::LocalLocal,
        ProductForm::LocalFieldField,
        ProductForm::LocalLocalField,
        ProductForm::LocalFieldFieldField,
        ProductForm::LocalLocalLocal,
    ];

    /// Shape for `locals` non-field local factors and `fields` fields.
    pub fn of(locals: usize, fields: usize) -> Option<ProductForm> {
        Some(match (locals, fields) {
            (1, 1) => ProductForm::LocalField,
            (2, 0) => ProductForm::LocalLocal,
            (1, 2) => ProductForm::LocalFieldField,
            (2, 1) => ProductForm::LocalLocalField,
            (1, 3) => ProductForm::LocalFieldFieldField,
            (3, 0) => ProductForm::LocalLocalLocal,
            _ => return None,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            ProductForm::LocalField => "R1 x F",
            ProductForm::LocalLocal => "R1 x R2",
            ProductForm::LocalFieldField => "R1 x F1 x F2",
            ProductForm::LocalLocalField => "R1 x R2 x F",
            ProductForm::LocalFieldFieldField => "R1 x F1 x F2 x F3",
            ProductForm::LocalLocalLocal => "R1 x R2 x R3",
        }
    }

    /// The sum formula, given `|X*|` per factor (`s`) and `|Z*(R_i)|` per
    /// local factor (`z`), locals first in both.
    pub fn formula(self, s: &[i128], z: &[i128]) -> i128 {
        match self {
            ProductForm::LocalField => s[0] + s[1] + z[0] * s[1],
            ProductForm::LocalLocal => s[0] + s[1] + z[0] * z[1],
            ProductForm::LocalFieldField => {
                let (r, f1, f2) = (s[0], s[1], s[2]);
                r + f1 + f2 + r * f1 + r * f2 + f1 * f2 + z[0] * f1 * f2
            }
            ProductForm::LocalLocalField => {
                // the lone field term is taken as |F*| like the others
                let (r1, r2, f) = (s[0], s[1], s[2]);
                r1 + r2 + f + r1 * r2 + r1 * f + r2 * f + z[0] * f * r2 + z[1] * f * r1
                    - z[0] * z[1] * f
            }
            ProductForm::LocalFieldFieldField => {
                let (r, f1, f2, f3) = (s[0], s[1], s[2], s[3]);
                let pairs = f1 * f2 + f1 * f3 + f2 * f3;
                r + f1 + f2 + f3
                    + r * (f1 + f2 + f3)
                    + pairs
                    + r * pairs
                    + f1 * f2 * f3
                    + z[0] * f1 * f2 * f3
            }
            ProductForm::LocalLocalLocal => {
                let (r1, r2, r3) = (s[0], s[1], s[2]);
                let (z1, z2, z3) = (z[0], z[1], z[2]);
                r1 + r2 + r3 + r1 * r2 + r1 * r3 + r2 * r3 + z1 * r1 * r2 + z2 * r3 * r1
                    + z3 * r3 * r2
                    - (z1 * z2 * r3 + z1 * z3 * r2 + z2 * z3 * r1 + z1 * z2 * z3)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarReading {
    /// `|X*| = |X| - 1`.
    Nonzero,
    /// `|X*| = |U(X)|`.
    Units,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub reading: StarReading,
    pub value: i128,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub factors: Vec<String>,
    pub closed_form: u128,
    /// Direct count on the built product, when it fits under the cap.
    pub enumerated: Option<usize>,
    pub form: Option<ProductForm>,
    pub formulas: Vec<FormulaValue>,
}

impl CountReport {
    pub fn agrees(&self) -> bool {
        self.enumerated.is_none_or(|e| e as u128 == self.closed_form)
    }

    /// Readings under which the sum formula reproduces the count.
    pub fn matching_readings(&self) -> Vec<StarReading> {
        self.formulas.iter().filter(|f| f.matches).map(|f| f.reading).collect()
    }
}

pub fn count_zero_divisors(factors: &[Ring], builder: &RingBuilder) -> Result<CountReport> {
    if factors.is_empty() {
        return Err(Error::Precondition("need at least one factor".into()));
    }
    let order: u128 = factors.iter().map(|f| f.order() as u128).product();
    let units: u128 = factors.iter().map(|f| f.unit_count() as u128).product();
    let closed_form = order - units - 1;
    let enumerated = if order <= builder.cap() as u128 {
        Some(builder.product(factors)?.zero_divisor_count())
    } else {
        None
    };

    let (locals, fields): (Vec<&Ring>, Vec<&Ring>) = factors.iter().partition(|f| !f.is_field());
    let all_local = locals.iter().all(|r| r.is_local());
    let form = ProductForm::of(locals.len(), fields.len()).filter(|_| all_local);
    let mut formulas = Vec::new();
    if let Some(form) = form {
        let ordered: Vec<&Ring> = locals.iter().chain(&fields).copied().collect();
        let z: Vec<i128> = locals.iter().map(|r| r.zero_divisor_count() as i128).collect();
        for reading in [StarReading::Nonzero, StarReading::Units] {
            let s: Vec<i128> = ordered
                .iter()
                .map(|r| match reading {
                    StarReading::Nonzero => r.nonzero_count() as i128,
                    StarReading::Units => r.unit_count() as i128,
                })
                .collect();
            let value = form.formula(&s, &z);
            formulas.push(FormulaValue {
                reading,
                value,
                matches: value == closed_form as i128,
            });
        }
    }
    Ok(CountReport {
        factors: factors.iter().map(|f| f.name().to_string()).collect(),
        closed_form,
        enumerated,
        form,
        formulas,
    })
}
