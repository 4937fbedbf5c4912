#![allow(dead_code)]

use attainset::{AttractionProblem, PointMap, SetFamily, Subset, Topology, Universe};

/// Digit-string subset: "01" is {0,1}, "" is empty.
pub fn s(digits: &str) -> Subset {
    Subset::from_points(digits.chars().map(|c| c.to_digit(10).unwrap() as usize))
}

pub fn fam(n: usize, members: &[&str]) -> SetFamily {
    SetFamily::new(Universe::new(n).unwrap(), members.iter().map(|m| s(m))).unwrap()
}

pub fn a4() -> SetFamily {
    fam(4, &["", "01", "23", "0123"])
}

pub fn l3() -> SetFamily {
    fam(3, &["", "0", "1", "01", "012"])
}

pub fn h_universe() -> Universe {
    Universe::labelled(vec!["a", "b", "c"]).unwrap()
}

/// {∅, {a}, {a,b}, H} on {a,b,c}.
pub fn tau_h() -> Topology {
    let u = h_universe();
    Topology::new(SetFamily::new(u, [s(""), s("0"), s("01"), s("012")]).unwrap()).unwrap()
}

pub fn fixture_d(constraint: &[&str]) -> AttractionProblem {
    let e = Universe::new(4).unwrap();
    let h = PointMap::new(e.clone(), h_universe(), vec![0, 1, 1, 2]).unwrap();
    let c = SetFamily::new(e, constraint.iter().map(|m| s(m))).unwrap();
    AttractionProblem::new(tau_h(), h, c, None).unwrap()
}

/// Fixture A4 with a discrete two-point target {p,q}.
pub fn a4_problem(images: [usize; 4], constraint: &[&str]) -> AttractionProblem {
    let e = Universe::new(4).unwrap();
    let hu = Universe::labelled(vec!["p", "q"]).unwrap();
    let h = PointMap::new(e.clone(), hu.clone(), images.to_vec()).unwrap();
    let c = SetFamily::new(e, constraint.iter().map(|m| s(m))).unwrap();
    AttractionProblem::new(Topology::discrete(&hu).unwrap(), h, c, Some(a4())).unwrap()
}
