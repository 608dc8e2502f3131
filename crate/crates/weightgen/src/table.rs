//! Machine-readable weight-multiplicity tables.
//!
//! A `TableDocument` lists every dominant weight of one representation with
//! its multiplicity, Weyl orbit size, and Cartesian coordinates
//! [x, y] = [m, m + 2n], optionally adorned with the +1/0/-1 domain of the
//! second recurrence. CSV columns are fixed as m,n,x,y,mult,orbit_size
//! (plus a trailing `domain` column when the overlay is requested); JSON
//! carries a top-level `schema: 1` marker.

use serde::Serialize;

use crate::error::Result;
use crate::lie::{Algebra, Method, MultTable, RepLabel, RootSystem};
use crate::recurrence::{rec2_domain, CartesianWeight};

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub m: i64,
    pub n: i64,
    pub x: i64,
    pub y: i64,
    pub mult: u64,
    pub orbit_size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableDocument {
    pub schema: u32,
    pub algebra: String,
    pub p: i64,
    pub q: i64,
    pub dimension: i64,
    pub entries: Vec<TableEntry>,
}

/// Builds the full dominant-weight table of R_{p,q} by the requested
/// route, sorted by (m, n). The orbit-weighted multiplicity sum is checked
/// against the Weyl dimension before the document is returned.
pub fn build_table(
    rs: &RootSystem,
    r: RepLabel,
    method: Method,
    overlay_epsilon: bool,
) -> Result<TableDocument> {
    let table: MultTable = crate::lie::mult_table(rs, r, method)?;
    let dimension = rs.weyl_dim(r);
    let entries: Vec<TableEntry> = table
        .entries
        .iter()
        .map(|(&w, &mult)| {
            let cart = CartesianWeight::from_weight(w);
            TableEntry {
                m: w.m,
                n: w.n,
                x: cart.x,
                y: cart.y,
                mult,
                orbit_size: rs.weyl_orbit(w).len() as u64,
                domain: (overlay_epsilon && rs.algebra == Algebra::C2)
                    .then(|| rec2_domain(r.p, r.q, w.m, w.n)),
            }
        })
        .collect();
    let orbit_sum: i64 = entries
        .iter()
        .map(|e| e.mult as i64 * e.orbit_size as i64)
        .sum();
    assert_eq!(orbit_sum, dimension, "orbit-weighted sum must equal the dimension");
    Ok(TableDocument {
        schema: 1,
        algebra: rs.algebra.name().to_string(),
        p: r.p,
        q: r.q,
        dimension,
        entries,
    })
}

impl TableDocument {
    pub fn to_csv(&self) -> String {
        let overlay = self.entries.iter().any(|e| e.domain.is_some());
        let mut out = String::new();
        out.push_str(if overlay {
            "m,n,x,y,mult,orbit_size,domain\n"
        } else {
            "m,n,x,y,mult,orbit_size\n"
        });
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{},{}",
                e.m, e.n, e.x, e.y, e.mult, e.orbit_size
            ));
            if let Some(d) = e.domain {
                out.push_str(&format!(",{d}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_representation_table() {
        let rs = RootSystem::c2();
        let doc = build_table(&rs, RepLabel::new(0, 0), Method::Freudenthal, false).unwrap();
        assert_eq!(doc.dimension, 1);
        assert_eq!(doc.entries.len(), 1);
        assert_eq!((doc.entries[0].m, doc.entries[0].n, doc.entries[0].mult), (0, 0, 1));
    }

    #[test]
    fn csv_and_json_carry_the_same_entries() {
        let rs = RootSystem::c2();
        let doc = build_table(&rs, RepLabel::new(3, 2), Method::Freudenthal, false).unwrap();
        let csv = doc.to_csv();
        let json: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(json["schema"], 1);
        let json_rows: Vec<(i64, i64, u64)> = json["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                (
                    e["m"].as_i64().unwrap(),
                    e["n"].as_i64().unwrap(),
                    e["mult"].as_u64().unwrap(),
                )
            })
            .collect();
        let csv_rows: Vec<(i64, i64, u64)> = csv
            .lines()
            .skip(1)
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                (
                    f[0].parse().unwrap(),
                    f[1].parse().unwrap(),
                    f[4].parse().unwrap(),
                )
            })
            .collect();
        assert_eq!(json_rows, csv_rows);
    }

    #[test]
    fn cartesian_columns_and_dimension_invariant() {
        let rs = RootSystem::c2();
        let doc = build_table(&rs, RepLabel::new(4, 3), Method::Freudenthal, true).unwrap();
        for e in &doc.entries {
            assert_eq!(e.x, e.m);
            assert_eq!(e.y, e.m + 2 * e.n);
            assert!(e.domain.is_some());
        }
        let total: i64 = doc.entries.iter().map(|e| e.mult as i64 * e.orbit_size as i64).sum();
        assert_eq!(total, doc.dimension);
    }
}
