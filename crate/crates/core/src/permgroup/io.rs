//! Group spec files: `{ "name", "degree", "generators", "expected_order" }`
//! with 0-based image arrays.

use serde::{Deserialize, Serialize};

use super::GroupHandle;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<u64>,
}

impl GroupSpec {
    pub fn from_group(g: &GroupHandle) -> Self {
        GroupSpec {
            name: g.name().to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
            expected_order: u64::try_from(g.order()).ok(),
        }
    }

    pub fn build(&self, cap: u128) -> Result<GroupHandle> {
        let gens = self
            .generators
            .iter()
            .map(|imgs| {
                if imgs.len() != self.degree {
                    return Err(Error::DegreeMismatch(self.degree, imgs.len()));
                }
                Permutation::from_images(imgs.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        let g = GroupHandle::with_degree(self.degree, gens, cap)?;
        if let Some(expected) = self.expected_order {
            if g.order() != expected as u128 {
                return Err(Error::OrderMismatch {
                    name: self.name.clone(),
                    computed: g.order(),
                    expected: expected as u128,
                });
            }
        }
        Ok(g.named(self.name.clone()))
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group spec serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let spec = GroupSpec {
            name: "S3".into(),
            degree: 3,
            generators: vec![vec![1, 0, 2], vec![1, 2, 0]],
            expected_order: Some(6),
        };
        let g = spec.build(100).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(GroupSpec::parse(&GroupSpec::from_group(&g).to_json()).unwrap(), spec);
    }

    #[test]
    fn wrong_expected_order_fails() {
        let spec = GroupSpec {
            name: "S3".into(),
            degree: 3,
            generators: vec![vec![1, 0, 2], vec![1, 2, 0]],
            expected_order: Some(5),
        };
        assert!(matches!(spec.build(100), Err(Error::OrderMismatch { .. })));
    }
}
