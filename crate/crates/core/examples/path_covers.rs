//! Secure vertex covers of paths: the minimal covers of P_6 and the
//! canonical minimum-weight cover S_n with its weight.

use svcp::covers::path::{path_canonical_cover, weight};
use svcp::covers::{alpha_s, enumerate_secure_covers};
use svcp::formulas::wn;
use svcp::graph::make_path;

fn main() -> svcp::Result<()> {
    let p6 = make_path(6)?;
    let minimal = enumerate_secure_covers(&p6, true)?;
    let labels: Vec<&str> = minimal.iter().map(|c| c.label.as_str()).collect();
    println!("minimal secure covers of P_6: {}", labels.join(" "));
    println!("alpha_s(P_6) = {}", alpha_s(&p6)?);

    println!("\n n  S_n                              weight  w_n");
    for n in [2, 4, 6, 11, 18, 25] {
        let s = path_canonical_cover(n)?;
        let members: Vec<String> = s.to_one_based().iter().map(|v| format!("v{v}")).collect();
        println!(
            "{n:>2}  {:<32} {:>7}  {}",
            members.join(","),
            weight(s),
            wn(n)
        );
    }
    Ok(())
}
