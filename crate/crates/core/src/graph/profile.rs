use super::{DistanceMatrix, Hops, Vertex, VertexSet};

/// Per-vertex eccentricities and the summary statistics derived from them.
///
/// In a disconnected graph every eccentricity is `Unreachable`, the radius and
/// diameter are `Unreachable`, and center and periphery are empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<Hops>,
    pub radius: Hops,
    pub diameter: Hops,
    pub center: VertexSet,
    pub periphery: VertexSet,
    pub connected: bool,
}

pub fn eccentricity_profile(dm: &DistanceMatrix) -> EccentricityProfile {
    let n = dm.n();
    let ecc: Vec<Hops> = (0..n)
        .map(|v| dm.row(v).max().unwrap_or(Hops::Finite(0)))
        .collect();
    let connected = n > 0 && ecc.iter().all(|e| e.is_finite());
    if !connected {
        return EccentricityProfile {
            ecc,
            radius: Hops::Unreachable,
            diameter: Hops::Unreachable,
            center: VertexSet::new(),
            periphery: VertexSet::new(),
            connected,
        };
    }
    let radius = *ecc.iter().min().unwrap();
    let diameter = *ecc.iter().max().unwrap();
    let with = |target: Hops| -> VertexSet {
        (0..n).filter(|&v: &Vertex| ecc[v] == target).collect()
    };
    EccentricityProfile {
        center: with(radius),
        periphery: with(diameter),
        ecc,
        radius,
        diameter,
        connected,
    }
}
