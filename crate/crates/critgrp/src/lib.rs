//! IO companion to `critgrp-core`: text file formats, the JSON report
//! schema, and a small thread fan-out for the classification sweeps.

pub mod exec;
pub mod formats;
pub mod report;

use critgrp_core::Caps;

/// Parses the `CRITGRP_CAP_OVERRIDE` environment value: a comma-separated
/// list of `key=value` pairs with keys `canonical-vertices`, `group-order`,
/// `tu-dim`, `circuit-elements`. Raising these enables unsupported-scale
/// runs; values must be positive integers.
pub fn caps_from_override(value: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    for pair in value.split(',') {
        let pair = pair.trim();
        if pair.is_empty() {
            continue;
        }
        let Some((key, raw)) = pair.split_once('=') else {
            return Err(format!("expected key=value, got {pair:?}"));
        };
        let parsed: usize = raw
            .trim()
            .parse()
            .map_err(|_| format!("invalid cap value {raw:?} for {key:?}"))?;
        if parsed == 0 {
            return Err(format!("cap {key:?} must be positive"));
        }
        match key.trim() {
            "canonical-vertices" => caps.canonical_vertices = parsed,
            "group-order" => caps.group_order = parsed,
            "tu-dim" => caps.tu_dimension = parsed,
            "circuit-elements" => caps.circuit_elements = parsed,
            other => return Err(format!("unknown cap key {other:?}")),
        }
    }
    Ok(caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_override_parsing() {
        let caps = caps_from_override("group-order=1024, tu-dim=7").unwrap();
        assert_eq!(caps.group_order, 1024);
        assert_eq!(caps.tu_dimension, 7);
        assert_eq!(caps.canonical_vertices, Caps::default().canonical_vertices);

        assert!(caps_from_override("group-order=zero").is_err());
        assert!(caps_from_override("bogus=3").is_err());
        assert!(caps_from_override("group-order=0").is_err());
        assert_eq!(caps_from_override("").unwrap(), Caps::default());
    }
}
