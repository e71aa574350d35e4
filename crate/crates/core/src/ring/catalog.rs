//! Named structure-constant rings shipped with the crate, addressed as `@slug`.
//!
//! The seven order-16 local rings whose zero-divisor graphs have cut vertices
//! but no total perfect code are in [`EXCEPTIONAL`]. `Z2XY-X2-XY-Y2` is the
//! order-8 ring Z2[x,y]/(x,y)^2.

use super::{Ring, RingBuilder, TableRingSpec};
use crate::error::{Error, Result};

struct Entry {
    slug: &'static str,
    presentation: &'static str,
    json: &'static str,
}

macro_rules! entry {
    ($slug:literal, $presentation:literal) => {
        Entry {
            slug: $slug,
            presentation: $presentation,
            json: include_str!(concat!("../../data/rings/", $slug, ".json")),
        }
    };
}

const ENTRIES: &[Entry] = &[
    entry!("Z4XY-X2-Y2-XYm2-2X-2Y", "Z4[X,Y]/(X^2, Y^2, XY-2, 2X, 2Y)"),
    entry!("Z2XY-X2-Y2", "Z2[X,Y]/(X^2, Y^2)"),
    entry!("Z4X-X2", "Z4[X]/(X^2)"),
    entry!("Z4X-X2p2X", "Z4[X]/(X^2+2X)"),
    entry!("Z8X-2X-X2p4", "Z8[X]/(2X, X^2+4)"),
    entry!("Z2XY-X2-Y2mXY", "Z2[X,Y]/(X^2, Y^2-XY)"),
    entry!("Z4XY-X2-Y2mXY-XYm2-2X-2Y", "Z4[X,Y]/(X^2, Y^2-XY, XY-2, 2X, 2Y)"),
    entry!("Z2XY-X2-XY-Y2", "Z2[X,Y]/(X^2, XY, Y^2)"),
];

/// Slugs of the seven order-16 local rings with cut vertices and no code.
pub const EXCEPTIONAL: [&str; 7] = [
    "Z4XY-X2-Y2-XYm2-2X-2Y",
    "Z2XY-X2-Y2",
    "Z4X-X2",
    "Z4X-X2p2X",
    "Z8X-2X-X2p4",
    "Z2XY-X2-Y2mXY",
    "Z4XY-X2-Y2mXY-XYm2-2X-2Y",
];

pub fn names() -> Vec<String> {
    ENTRIES.iter().map(|e| e.slug.to_string()).collect()
}

/// `(slug, presentation)` pairs for help text and docs.
pub fn presentations() -> Vec<(&'static str, &'static str)> {
    ENTRIES.iter().map(|e| (e.slug, e.presentation)).collect()
}

pub fn spec(name: &str) -> Result<TableRingSpec> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.slug == name)
        .ok_or_else(|| Error::UnknownCatalog {
            name: name.to_string(),
            known: names(),
        })?;
    Ok(serde_json::from_str(entry.json)?)
}

pub fn load(name: &str) -> Result<Ring> {
    load_with(&RingBuilder::default(), name)
}

pub fn load_with(builder: &RingBuilder, name: &str) -> Result<Ring> {
    builder.table(spec(name)?)
}

pub fn exceptional() -> Result<Vec<Ring>> {
    EXCEPTIONAL.iter().map(|s| load(s)).collect()
}

/// Reads a structure-constant ring from a JSON file.
pub fn load_file(builder: &RingBuilder, path: &std::path::Path) -> Result<Ring> {
    let text = std::fs::read_to_string(path)?;
    let spec: TableRingSpec = serde_json::from_str(&text)?;
    builder.table(spec)
}
