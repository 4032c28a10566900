//! Instances, solutions, and their JSON documents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{cover_radius, Ball, ConvexObject, Interval, Point};

/// A set of neighborhoods together with the center budget.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub dimension: usize,
    pub k: usize,
    pub objects: Vec<ConvexObject>,
}

impl Instance {
    pub fn new(dimension: usize, k: usize, objects: Vec<ConvexObject>) -> Result<Self> {
        let inst = Instance { dimension, k, objects };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        for obj in &self.objects {
            obj.validate()?;
            if obj.dim() != self.dimension {
                return Err(Error::DimensionMismatch { expected: self.dimension, got: obj.dim() });
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let inst: Instance = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        inst.validate()?;
        Ok(inst)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    /// The round objects of the instance; fails on any other kind.
    pub fn balls(&self) -> Result<Vec<Ball>> {
        self.objects
            .iter()
            .map(|o| {
                o.as_ball()
                    .cloned()
                    .ok_or_else(|| Error::UnsupportedObject(format!("expected disks or balls, got {o:?}")))
            })
            .collect()
    }

    pub fn intervals(&self) -> Result<Vec<Interval>> {
        self.objects
            .iter()
            .map(|o| o.as_interval().ok_or_else(|| Error::UnsupportedObject(format!("expected intervals, got {o:?}"))))
            .collect()
    }
}

pub fn disks_to_objects(balls: &[Ball]) -> Vec<ConvexObject> {
    balls
        .iter()
        .map(|b| if b.dim() == 2 { ConvexObject::Disk(b.clone()) } else { ConvexObject::Ball(b.clone()) })
        .collect()
}

/// A center set with its radius and provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub centers: Vec<Point>,
    pub radius: f64,
    pub algorithm: String,
    pub decider_calls: usize,
}

impl Solution {
    /// Builds a solution whose radius is measured from the centers.
    pub fn evaluate(
        objects: &[ConvexObject],
        centers: Vec<Point>,
        algorithm: &str,
        decider_calls: usize,
    ) -> Result<Self> {
        let radius = if objects.is_empty() { 0.0 } else { cover_radius(objects, &centers)? };
        Ok(Solution { centers, radius, algorithm: algorithm.to_string(), decider_calls })
    }

    pub fn for_balls(balls: &[Ball], centers: Vec<Point>, algorithm: &str, decider_calls: usize) -> Result<Self> {
        Self::evaluate(&disks_to_objects(balls), centers, algorithm, decider_calls)
    }

    /// One center inside every object: radius zero with `n` centers.
    pub fn one_per_object(objects: &[ConvexObject], algorithm: &str) -> Result<Self> {
        let centers = objects
            .iter()
            .map(|o| match o {
                ConvexObject::Disk(b) | ConvexObject::Ball(b) => b.center.clone(),
                ConvexObject::Segment(s) => s.p.midpoint(&s.q),
                ConvexObject::Interval(i) => Point::on_line(0.5 * (i.lo + i.hi)),
            })
            .collect();
        Self::evaluate(objects, centers, algorithm, 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("solution serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }
}
