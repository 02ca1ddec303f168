//! The JSON network file: sorted keys, arrays sorted by id.

use std::path::Path;

use crate::error::{Error, Result};
use crate::network::Network;

/// Parses and validates a network document.
pub fn parse_network(text: &str) -> Result<Network> {
    let net: Network = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    net.check()?;
    Ok(net)
}

pub fn read_network(path: &Path) -> Result<Network> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_network(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Canonical text: arrays sorted by id, keys sorted, two-space indentation, final newline.
pub fn to_canonical_json(net: &Network) -> String {
    let mut n = net.clone();
    n.canonicalize();
    let mut s = serde_json::to_string_pretty(&n).expect("network serializes");
    s.push('\n');
    s
}
