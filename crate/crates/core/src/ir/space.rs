use std::fmt;

use thiserror::Error;

/// Domain type kinds a space can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    JointAngles,
    JointVelocities,
    JointTorques,
    JointImpedance,
    CartesianPosition,
    CartesianOrientation,
    CartesianPose,
    CartesianWrench,
    ForceTorque,
    Phase,
    Scalar,
    EventFlag,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 12] = [
        SpaceKind::JointAngles,
        SpaceKind::JointVelocities,
        SpaceKind::JointTorques,
        SpaceKind::JointImpedance,
        SpaceKind::CartesianPosition,
        SpaceKind::CartesianOrientation,
        SpaceKind::CartesianPose,
        SpaceKind::CartesianWrench,
        SpaceKind::ForceTorque,
        SpaceKind::Phase,
        SpaceKind::Scalar,
        SpaceKind::EventFlag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::JointAngles => "JointAngles",
            SpaceKind::JointVelocities => "JointVelocities",
            SpaceKind::JointTorques => "JointTorques",
            SpaceKind::JointImpedance => "JointImpedance",
            SpaceKind::CartesianPosition => "CartesianPosition",
            SpaceKind::CartesianOrientation => "CartesianOrientation",
            SpaceKind::CartesianPose => "CartesianPose",
            SpaceKind::CartesianWrench => "CartesianWrench",
            SpaceKind::ForceTorque => "ForceTorque",
            SpaceKind::Phase => "Phase",
            SpaceKind::Scalar => "Scalar",
            SpaceKind::EventFlag => "EventFlag",
        }
    }

    pub fn from_name(name: &str) -> Option<SpaceKind> {
        SpaceKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Kinds whose spaces always hold exactly one variable.
    pub fn is_unary(self) -> bool {
        matches!(self, SpaceKind::Phase | SpaceKind::EventFlag)
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceTypeError {
    #[error("invalid dimension {dimension} for {kind}: {reason}")]
    InvalidDimension {
        kind: SpaceKind,
        dimension: u64,
        reason: &'static str,
    },
    #[error("invalid frame tag `{0}`")]
    InvalidFrame(String),
}

/// The domain type of a space: a kind, the number of scalar variables, and an
/// optional opaque coordinate-frame tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceType {
    kind: SpaceKind,
    dimension: u32,
    frame: Option<String>,
}

impl SpaceType {
    pub fn new(
        kind: SpaceKind,
        dimension: u64,
        frame: Option<&str>,
    ) -> Result<SpaceType, SpaceTypeError> {
        if dimension < 1 {
            return Err(SpaceTypeError::InvalidDimension {
                kind,
                dimension,
                reason: "dimension must be at least 1",
            });
        }
        if kind.is_unary() && dimension != 1 {
            return Err(SpaceTypeError::InvalidDimension {
                kind,
                dimension,
                reason: "this kind always has dimension 1",
            });
        }
        let dimension = u32::try_from(dimension).map_err(|_| SpaceTypeError::InvalidDimension {
            kind,
            dimension,
            reason: "dimension too large",
        })?;
        if let Some(frame) = frame {
            if !super::is_identifier(frame) {
                return Err(SpaceTypeError::InvalidFrame(frame.to_string()));
            }
        }
        Ok(SpaceType {
            kind,
            dimension,
            frame: frame.map(str::to_string),
        })
    }

    pub fn event() -> SpaceType {
        SpaceType {
            kind: SpaceKind::EventFlag,
            dimension: 1,
            frame: None,
        }
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn frame(&self) -> Option<&str> {
        self.frame.as_deref()
    }

    /// Kind and dimension agree. Frames are tags and do not take part.
    pub fn compatible(&self, other: &SpaceType) -> bool {
        self.kind == other.kind && self.dimension == other.dimension
    }
}

impl fmt::Display for SpaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.dimension)?;
        if let Some(frame) = &self.frame {
            write!(f, "@{frame}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn joint_angles_seven() {
        let t = SpaceType::new(SpaceKind::JointAngles, 7, None).unwrap();
        assert_eq!(t.kind(), SpaceKind::JointAngles);
        assert_eq!(t.dimension(), 7);
        assert_eq!(t.frame(), None);
        assert_eq!(t.to_string(), "JointAngles(7)");
    }

    #[test]
    fn phase_is_unary() {
        let t = SpaceType::new(SpaceKind::Phase, 1, None).unwrap();
        assert_eq!(t.dimension(), 1);
        assert!(matches!(
            SpaceType::new(SpaceKind::Phase, 2, None),
            Err(SpaceTypeError::InvalidDimension { .. })
        ));
        assert!(matches!(
            SpaceType::new(SpaceKind::EventFlag, 3, None),
            Err(SpaceTypeError::InvalidDimension { .. })
        ));
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(matches!(
            SpaceType::new(SpaceKind::JointAngles, 0, None),
            Err(SpaceTypeError::InvalidDimension { dimension: 0, .. })
        ));
    }

    #[test]
    fn frame_tags() {
        let world = SpaceType::new(SpaceKind::CartesianPose, 6, Some("world")).unwrap();
        let base = SpaceType::new(SpaceKind::CartesianPose, 6, Some("base")).unwrap();
        assert_ne!(world, base);
        assert!(world.compatible(&base));
        assert_eq!(world.to_string(), "CartesianPose(6)@world");
        assert!(SpaceType::new(SpaceKind::CartesianPose, 6, Some("9x")).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in SpaceKind::ALL {
            assert_eq!(SpaceKind::from_name(kind.name()), Some(kind));
        }
        assert_eq!(SpaceKind::from_name("Impedance"), None);
    }
}
