//! Bundled corpus of small groups used by the property suites: JSON fixtures
//! under `corpus/`, compiled into the library. Orders range from 6 to 120.

use crate::error::{Error, Result};
use crate::groups::Group;
use crate::io;

/// (name, expected order, JSON source)
const FIXTURES: &[(&str, u64, &str)] = &[
    ("s3", 6, include_str!("../corpus/s3.json")),
    ("c6", 6, include_str!("../corpus/c6.json")),
    ("d8", 8, include_str!("../corpus/d8.json")),
    ("q8", 8, include_str!("../corpus/q8.json")),
    ("d10", 10, include_str!("../corpus/d10.json")),
    ("a4", 12, include_str!("../corpus/a4.json")),
    ("c12", 12, include_str!("../corpus/c12.json")),
    ("d12", 12, include_str!("../corpus/d12.json")),
    ("f20", 20, include_str!("../corpus/f20.json")),
    ("sl23", 24, include_str!("../corpus/sl23.json")),
    ("s4", 24, include_str!("../corpus/s4.json")),
    ("s5", 120, include_str!("../corpus/s5.json")),
];

pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _, _)| *n).collect()
}

/// Load one fixture by name; the closure order is verified against the
/// fixture's declared order.
pub fn load(name: &str) -> Result<Group> {
    let (_, expected, src) = FIXTURES
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::usage(format!("unknown corpus group {name:?}")))?;
    let g = io::parse_group_str(src, 10_000)?;
    if g.order() != *expected {
        return Err(Error::internal(format!(
            "corpus fixture {name} closed to order {}, expected {expected}",
            g.order()
        )));
    }
    Ok(g)
}

/// All corpus groups with order at most `max_order`, in fixture order.
pub fn groups_up_to(max_order: u64) -> Vec<(&'static str, Group)> {
    FIXTURES
        .iter()
        .filter(|(_, o, _)| *o <= max_order)
        .map(|(n, _, _)| (*n, load(n).expect("bundled fixture is valid")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_close_to_their_orders() {
        for (name, expected, _) in FIXTURES {
            let g = load(name).unwrap();
            assert_eq!(g.order(), *expected, "{name}");
        }
    }

    #[test]
    fn fixture_shapes() {
        // Spot checks that the fixtures are the groups they claim to be.
        let q8 = load("q8").unwrap();
        assert_eq!(q8.classes().count(), 5);
        // Q8 has a unique involution
        let cc = q8.classes();
        let inv_count: u64 = cc
            .sizes
            .iter()
            .zip(cc.element_orders.iter())
            .filter(|(_, &o)| o == 2)
            .map(|(&s, _)| s)
            .sum();
        assert_eq!(inv_count, 1);

        let sl23 = load("sl23").unwrap();
        assert_eq!(sl23.classes().count(), 7);
        assert!(!sl23.is_abelian());

        let s5 = load("s5").unwrap();
        assert_eq!(s5.classes().count(), 7);
    }
}
