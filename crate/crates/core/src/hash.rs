//! 32-byte hash identifiers shared by all record types.
//!
//! Every identifier in the system is a SHA-256 digest rendered externally as
//! 64 lowercase hex characters. The newtypes below keep the different id
//! namespaces (companies, products, actions, raw digests) from mixing up.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest as _, Sha256};

/// Computes the SHA-256 digest of `data`.
pub fn sha256(data: &[u8]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(data);
    hasher.finalize().into()
}

/// Computes the SHA-256 digest of the concatenation of the given slices.
pub fn sha256_concat(parts: &[&[u8]]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    for part in parts {
        hasher.update(part);
    }
    hasher.finalize().into()
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HexIdError {
    #[error("expected {expected} hex characters, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("invalid hex: {0}")]
    BadHex(String),
}

macro_rules! id32 {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub [u8; 32]);

        impl $name {
            pub const ZERO: $name = $name([0u8; 32]);

            pub fn as_bytes(&self) -> &[u8; 32] {
                &self.0
            }

            pub fn to_hex(&self) -> String {
                hex::encode(self.0)
            }

            pub fn from_hex(s: &str) -> Result<Self, HexIdError> {
                if s.len() != 64 {
                    return Err(HexIdError::BadLength { expected: 64, got: s.len() });
                }
                let bytes = hex::decode(s).map_err(|e| HexIdError::BadHex(e.to_string()))?;
                let mut out = [0u8; 32];
                out.copy_from_slice(&bytes);
                Ok($name(out))
            }
        }

        impl From<[u8; 32]> for $name {
            fn from(b: [u8; 32]) -> Self {
                $name(b)
            }
        }

        impl AsRef<[u8]> for $name {
            fn as_ref(&self) -> &[u8] {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.to_hex())
            }
        }

        impl fmt::Debug for $name {
            // Abbreviated; the full hex is one Display away.
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!(stringify!($name), "({}..)"), &self.to_hex()[..8])
            }
        }

        impl FromStr for $name {
            type Err = HexIdError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                Self::from_hex(s)
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.serialize_str(&self.to_hex())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                Self::from_hex(&s).map_err(de::Error::custom)
            }
        }
    };
}

id32! {
    /// A raw 32-byte digest (Merkle nodes, roots, blinded identifiers).
    Hash32
}
id32! {
    /// Identifies a company: the hash of its registration public key.
    CompanyId
}
id32! {
    /// Identifies a product record by its content hash.
    ProductId
}
id32! {
    /// Identifies an action (or internal retract record) by its content hash.
    ActionId
}

impl From<ActionId> for Hash32 {
    fn from(id: ActionId) -> Self {
        Hash32(id.0)
    }
}

impl From<ProductId> for Hash32 {
    fn from(id: ProductId) -> Self {
        Hash32(id.0)
    }
}

/// A 16-byte nonce, hex-encoded in JSON.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nonce16(pub [u8; 16]);

impl Nonce16 {
    pub const ZERO: Nonce16 = Nonce16([0u8; 16]);

    pub fn as_bytes(&self) -> &[u8; 16] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, HexIdError> {
        if s.len() != 32 {
            return Err(HexIdError::BadLength { expected: 32, got: s.len() });
        }
        let bytes = hex::decode(s).map_err(|e| HexIdError::BadHex(e.to_string()))?;
        let mut out = [0u8; 16];
        out.copy_from_slice(&bytes);
        Ok(Nonce16(out))
    }
}

impl fmt::Display for Nonce16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for Nonce16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Nonce16({})", self.to_hex())
    }
}

impl Serialize for Nonce16 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Nonce16 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Self::from_hex(&s).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_round_trip() {
        let id = ProductId(sha256(b"x"));
        let parsed = ProductId::from_hex(&id.to_hex()).unwrap();
        assert_eq!(id, parsed);
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(matches!(
            ProductId::from_hex("abcd"),
            Err(HexIdError::BadLength { expected: 64, got: 4 })
        ));
        assert!(Nonce16::from_hex("00").is_err());
    }

    #[test]
    fn json_form_is_lowercase_hex() {
        let id = ActionId([0xAB; 32]);
        let json = serde_json::to_string(&id).unwrap();
        assert_eq!(json, format!("\"{}\"", "ab".repeat(32)));
    }
}
