//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use std::sync::OnceLock;

use fujiki::catalog::{builtin_catalog, Catalog};
use fujiki::fixedpoints::FujikiInput;

pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(builtin_catalog)
}

/// One `(G, θ)` pair of the catalog, in its displayed embedding.
pub struct CatalogInput {
    pub group: String,
    pub class_label: String,
    pub input: FujikiInput,
}

/// Every `(G, θ)` pair stored in the catalog, including rows left out of the table.
pub fn all_inputs() -> &'static [CatalogInput] {
    static INPUTS: OnceLock<Vec<CatalogInput>> = OnceLock::new();
    INPUTS.get_or_init(|| {
        let mut out = Vec::new();
        for entry in &catalog().groups {
            let group = entry.group().unwrap();
            for d in &entry.involution_classes {
                let theta = d.build(&group).unwrap();
                out.push(CatalogInput {
                    group: entry.name.clone(),
                    class_label: d.label.clone(),
                    input: FujikiInput::new(theta, 2).unwrap(),
                });
            }
        }
        out
    })
}
