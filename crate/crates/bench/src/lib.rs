//! Shared fixtures for the benchmark targets.

use zforce::{build_family, cartesian_product, FamilySpec, Graph};

/// The largest square grid that fits the vertex capacity.
pub fn big_grid() -> Graph {
    let p11 = build_family(&FamilySpec::Path { n: 11 }).unwrap();
    cartesian_product(&p11, &p11).unwrap()
}

pub fn torus(m: usize, n: usize) -> Graph {
    let cm = build_family(&FamilySpec::Cycle { n: m }).unwrap();
    let cn = build_family(&FamilySpec::Cycle { n }).unwrap();
    cartesian_product(&cm, &cn).unwrap()
}

pub fn complete_box(n: usize, m: usize) -> Graph {
    let kn = build_family(&FamilySpec::Complete { n }).unwrap();
    let km = build_family(&FamilySpec::Complete { n: m }).unwrap();
    cartesian_product(&kn, &km).unwrap()
}
