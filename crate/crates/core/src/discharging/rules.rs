use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, Charge};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
}

/// What a 4-vertex sends to incident 3- and 4-faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct FourVertexSchedule {
    /// 3-face on which the vertex is good, bad or worse.
    #[serde(with = "rational")]
    pub three_face: Charge,
    #[serde(with = "rational")]
    pub three_face_worst: Charge,
    #[serde(with = "rational")]
    pub four_face: Charge,
}

impl Default for FourVertexSchedule {
    fn default() -> Self {
        FourVertexSchedule {
            three_face: Charge::one(),
            three_face_worst: Charge::new(2, 3),
            four_face: Charge::new(1, 3),
        }
    }
}

/// What a 5-vertex (R3) or 6+-vertex (R4) sends to incident 3- and 4-faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct HighVertexSchedule {
    #[serde(with = "rational")]
    pub three_face_good_or_worst: Charge,
    #[serde(with = "rational")]
    pub three_face_bad: Charge,
    #[serde(with = "rational")]
    pub three_face_worse: Charge,
    /// 4-face whose vertex degrees are 4, 4, 4, 5.
    #[serde(with = "rational")]
    pub four_face_4445: Charge,
    #[serde(with = "rational")]
    pub four_face_other: Charge,
}

impl Default for HighVertexSchedule {
    fn default() -> Self {
        HighVertexSchedule {
            three_face_good_or_worst: Charge::one(),
            three_face_bad: Charge::new(3, 2),
            three_face_worse: Charge::new(5, 4),
            four_face_4445: Charge::one(),
            four_face_other: Charge::new(2, 3),
        }
    }
}

/// How trio equalization treats a 3-face shared by several trios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverlapPolicy {
    /// Equalize over each connected cluster of overlapping trios.
    Merge,
    /// Refuse with `OverlappingTrios`.
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RuleSet {
    /// Every vertex to each incident 5-face.
    #[serde(with = "rational")]
    pub r1_five_face: Charge,
    pub r2: FourVertexSchedule,
    pub r3: HighVertexSchedule,
    pub r4: HighVertexSchedule,
    pub r5_equalize: bool,
    pub r5_overlap: OverlapPolicy,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet {
            r1_five_face: Charge::new(1, 5),
            r2: FourVertexSchedule::default(),
            r3: HighVertexSchedule::default(),
            r4: HighVertexSchedule::default(),
            r5_equalize: true,
            r5_overlap: OverlapPolicy::Merge,
        }
    }
}

impl RuleSet {
    /// Parses overrides; fields left out keep their default values.
    pub fn from_json(text: &str) -> Result<Self> {
        let rs: RuleSet = serde_json::from_str(text)?;
        rs.validate()?;
        Ok(rs)
    }

    pub fn validate(&self) -> Result<()> {
        let high = |h: &HighVertexSchedule| {
            [
                h.three_face_good_or_worst,
                h.three_face_bad,
                h.three_face_worse,
                h.four_face_4445,
                h.four_face_other,
            ]
        };
        let all = [self.r1_five_face, self.r2.three_face, self.r2.three_face_worst, self.r2.four_face]
            .into_iter()
            .chain(high(&self.r3))
            .chain(high(&self.r4));
        for q in all {
            if q < Charge::zero() {
                return Err(Error::InvalidInput(format!("negative rule parameter {q}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_override() {
        let rs = RuleSet::from_json(r#"{"r1_five_face":{"num":1,"den":4},"r5_overlap":"error"}"#).unwrap();
        assert_eq!(rs.r1_five_face, Charge::new(1, 4));
        assert_eq!(rs.r5_overlap, OverlapPolicy::Error);
        assert_eq!(rs.r3, HighVertexSchedule::default());
    }

    #[test]
    fn negative_rejected() {
        assert!(RuleSet::from_json(r#"{"r2":{"four_face":{"num":-1,"den":3}}}"#).is_err());
    }

    #[test]
    fn malformed_overrides_rejected() {
        assert!(RuleSet::from_json(r#"{"r5_equalize":"yes"}"#).is_err());
        assert!(RuleSet::from_json(r#"{"r6":true}"#).is_err());
    }
}
