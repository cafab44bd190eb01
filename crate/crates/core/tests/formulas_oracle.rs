use svcp::covers::alpha_s;
use svcp::formulas::*;
use svcp::graph::*;
use svcp::solver::{compute_f_svcp, compute_gamma, compute_sigma, SolverConfig};

fn oracle(spec: &FamilySpec) -> u64 {
    compute_f_svcp(&spec.build().unwrap(), &SolverConfig::default())
        .unwrap()
        .value
}

fn specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((1..=6).map(|n| FamilySpec::Path { n }));
    specs.extend((2..=6).map(|n| FamilySpec::Complete { n }));
    specs.extend((2..=4).map(|leaves| FamilySpec::Star { leaves }));
    for parts in [
        vec![2, 2],
        vec![3, 1],
        vec![2, 1, 1],
        vec![2, 2, 1],
        vec![3, 2],
        vec![2, 2, 2],
        vec![1, 1, 1],
    ] {
        specs.push(FamilySpec::CompleteMultipartite { parts });
    }
    specs.extend((1..=3).map(|n| FamilySpec::Friendship { n }));
    specs.extend((3..=6).map(|rim| FamilySpec::Wheel { rim }));
    specs.push(FamilySpec::join(
        FamilySpec::Complete { n: 2 },
        FamilySpec::Complete { n: 3 },
    ));
    specs
}

#[test]
fn every_formula_against_the_oracle() {
    let mut mismatches = Vec::new();
    for spec in specs() {
        let formula = f_svcp_formula(&spec);
        assert!(formula.applicable, "{spec}");
        let o = oracle(&spec);
        if formula.value_u64() != Some(o) {
            mismatches.push(format!(
                "{spec}: formula {:?}, oracle {o}",
                formula.value_u64()
            ));
        }
    }
    // The wheel case formula is the only one that disagrees with brute force.
    assert_eq!(
        mismatches,
        [
            "W_3: formula Some(7), oracle 5",
            "W_4: formula Some(11), oracle 7",
            "W_5: formula Some(11), oracle 9",
            "W_6: formula Some(15), oracle 11",
        ]
    );
}

#[test]
fn rim_three_adjudication() {
    let oracle = oracle(&FamilySpec::Wheel { rim: 3 });
    assert_eq!(f_svcp_complete(4).value_u64(), Some(oracle));
    assert_ne!(f_svcp_wheel(3).value_u64(), Some(oracle));
}

#[test]
fn alpha_s_formulas_against_enumeration() {
    let mut specs: Vec<FamilySpec> = [
        vec![1, 1],
        vec![2, 2],
        vec![3, 1],
        vec![2, 1, 1],
        vec![3, 3, 2],
    ]
    .into_iter()
    .map(|parts| FamilySpec::CompleteMultipartite { parts })
    .collect();
    specs.extend((1..=4).map(|n| FamilySpec::Friendship { n }));
    for spec in specs {
        let g = spec.build().unwrap();
        assert_eq!(
            alpha_s_formula(&spec).value_u64(),
            Some(alpha_s(&g).unwrap() as u64),
            "{spec}"
        );
    }
}

#[test]
fn join_identities() {
    let cfg = SolverConfig::default();
    for (m, n) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let spec = FamilySpec::join(FamilySpec::Complete { n: m }, FamilySpec::Complete { n });
        assert_eq!(f_svcp_join_complete(m, n).value_u64(), Some(oracle(&spec)));
    }
    // K_{2,2} is the join of two edgeless pairs.
    let pair = FamilySpec::union(FamilySpec::Complete { n: 1 }, FamilySpec::Complete { n: 1 });
    let k22 = FamilySpec::join(pair.clone(), pair.clone())
        .build()
        .unwrap();
    assert_eq!(k22, make_complete_multipartite(&[2, 2]).unwrap());
    let gamma = compute_gamma(&k22, &cfg).unwrap().value;
    let bound = f_svcp_join_bound(&pair, &pair, gamma);
    assert!(bound.value_u64().unwrap() >= compute_f_svcp(&k22, &cfg).unwrap().value);

    // On K_m + K_n the upper bound falls below the exact value.
    let k4 = make_complete(4).unwrap();
    let gamma = compute_gamma(&k4, &cfg).unwrap().value;
    let k2 = FamilySpec::Complete { n: 2 };
    let bound = f_svcp_join_bound(&k2, &k2, gamma).value_u64().unwrap();
    assert!(bound < compute_f_svcp(&k4, &cfg).unwrap().value);
}

#[test]
fn friendship_sides_and_sigma() {
    let cfg = SolverConfig::default();
    for n in 1..=3 {
        let sides = friendship_alpha_claim(n);
        let g = make_friendship(n).unwrap();
        assert_ne!(sides.alpha_s.value, sides.f_svcp.value);
        assert_eq!(
            compute_sigma(&g, &cfg).unwrap().value,
            sides.f_svcp.value_u64().unwrap()
        );
    }
}
