//! Closed-form values beside exhaustive search for every family that has one.

use svcp::formulas::{f_svcp_formula, rows_to_csv, FamilyRow};
use svcp::graph::FamilySpec;
use svcp::solver::{compute_f_svcp, SolverConfig};

fn main() -> svcp::Result<()> {
    let mut specs: Vec<FamilySpec> = (1..=6).map(|n| FamilySpec::Path { n }).collect();
    specs.extend((2..=5).map(|n| FamilySpec::Complete { n }));
    specs.extend(
        [vec![2, 2], vec![3, 1], vec![2, 1, 1], vec![2, 2, 1]]
            .map(|parts| FamilySpec::CompleteMultipartite { parts }),
    );
    specs.extend((1..=3).map(|n| FamilySpec::Friendship { n }));
    specs.extend((3..=6).map(|rim| FamilySpec::Wheel { rim }));
    specs.push(FamilySpec::join(
        FamilySpec::Complete { n: 2 },
        FamilySpec::Complete { n: 2 },
    ));

    let cfg = SolverConfig::default();
    let rows = specs
        .iter()
        .map(|spec| {
            let oracle = compute_f_svcp(&spec.build()?, &cfg)?.value;
            Ok(FamilyRow::new(&f_svcp_formula(spec), Some(oracle)))
        })
        .collect::<svcp::Result<Vec<_>>>()?;
    print!("{}", rows_to_csv(&rows)?);
    Ok(())
}
