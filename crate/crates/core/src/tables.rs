//! The reference tables, recomputed from scratch.

use serde::{Deserialize, Serialize};

use crate::bijections::eta;
use crate::caterpillar::theta;
use crate::decomposition::decompose;
use crate::enumerate::canonical_iter;
use crate::error::{Error, Result};
use crate::gf::{
    gamma_poly_brute, h_decompose, multi_stat_poly_brute, multi_stat_vars, r_poly_brute,
    render_h_expansion, JointCountTensor,
};
use crate::poly::{var_list, Monomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub id: String,
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Table {
    fn new(id: &str, title: &str, header: &[&str]) -> Self {
        Table {
            id: id.into(),
            title: title.into(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Title and notes as `#` lines; header and rows with cells joined by `" | "`.
    pub fn render_text(&self) -> String {
        let mut out = format!("# {}\n", self.title);
        for line in std::iter::once(&self.header).chain(&self.rows) {
            out.push_str(&line.join(" | "));
            out.push('\n');
        }
        for note in &self.notes {
            out.push_str(&format!("# note: {note}\n"));
        }
        out
    }
}

pub const TABLE_IDS: [&str; 11] = [
    "caterpillar-distributions",
    "theta",
    "decomposition-m2",
    "decomposition-m3",
    "luck-polynomials",
    "gamma-m2",
    "gamma-m3",
    "gamma-m4",
    "eta",
    "multi-stat-m2",
    "joint-counts",
];

pub fn table(id: &str) -> Result<Table> {
    match id {
        "caterpillar-distributions" => caterpillar_distributions(),
        "theta" => theta_table(),
        "decomposition-m2" => decomposition_table(id, 2),
        "decomposition-m3" => decomposition_table(id, 3),
        "luck-polynomials" => luck_polynomials(),
        "gamma-m2" => gamma_table(id, 2),
        "gamma-m3" => gamma_table(id, 3),
        "gamma-m4" => gamma_table(id, 4),
        "eta" => eta_table(),
        "multi-stat-m2" => multi_stat_table(),
        "joint-counts" => joint_counts(),
        _ => Err(Error::Parse(format!(
            "unknown table {id:?}; expected one of {}",
            TABLE_IDS.join(", ")
        ))),
    }
}

fn caterpillar_distributions() -> Result<Table> {
    let mut t = Table::new(
        "caterpillar-distributions",
        "Parking distributions on Cat_2(3)",
        &["distribution"],
    );
    for p in canonical_iter(2, 3)? {
        t.rows.push(vec![theta(&p, 2)?.to_string()]);
    }
    t.notes.push(
        "a widely copied listing of this set shows (1, 2, 3, 4, 4) twice and omits (1, 2, 2, 4, 4)"
            .into(),
    );
    Ok(t)
}

fn theta_table() -> Result<Table> {
    let mut t = Table::new(
        "theta",
        "theta: PK(3; (1, 3, 5, ...)) -> PK_2(3)",
        &["p", "theta(p)"],
    );
    for p in canonical_iter(2, 3)? {
        let image = theta(&p, 2)?;
        t.rows.push(vec![p.to_string(), image.to_string()]);
    }
    Ok(t)
}

fn component_header(m: u32) -> Vec<String> {
    (1..=m + 1).map(|j| format!("p_{j}")).collect()
}

fn decomposition_table(id: &str, m: u32) -> Result<Table> {
    let mut t = Table::new(
        id,
        &format!("First-return decompositions of PK(3; (1, {}, ...))", m + 1),
        &["p"],
    );
    t.header.extend(component_header(m));
    for p in canonical_iter(m, 3)? {
        let d = decompose(&p, m)?;
        let mut row = vec![p.to_string()];
        row.extend(d.components.iter().map(ToString::to_string));
        t.rows.push(row);
    }
    Ok(t)
}

fn luck_polynomials() -> Result<Table> {
    let mut t = Table::new(
        "luck-polynomials",
        "Luck polynomials R_n^(m)(q)",
        &["n", "m=2", "m=3", "m=4"],
    );
    for n in 0..=4 {
        let mut row = vec![n.to_string()];
        for m in 2..=4 {
            row.push(r_poly_brute(m, n)?.to_string());
        }
        t.rows.push(row);
    }
    Ok(t)
}

fn gamma_table(id: &str, m: u32) -> Result<Table> {
    let mut t = Table::new(
        id,
        &format!("gamma_n^({m})(q, t, 1, 1) / qt"),
        &["n", "polynomial", "h-expansion"],
    );
    let qt = Monomial::new(vec![1, 1]);
    for n in 1..=4 {
        let g = gamma_poly_brute(m, n)?.specialize(&[("u", 1), ("v", 1)])?;
        let reduced = g.div_monomial(&qt).ok_or(Error::NotDivisible)?;
        let h = h_decompose(&g)?;
        t.rows.push(vec![
            n.to_string(),
            reduced.to_string(),
            render_h_expansion(&h, &var_list(&["q", "t"])),
        ]);
    }
    Ok(t)
}

fn eta_table() -> Result<Table> {
    let mut t = Table::new("eta", "eta on PK(3; (1, 3, 5, ...))", &["p"]);
    t.header.extend(component_header(2));
    t.header.push("eta(p)".into());
    for p in canonical_iter(2, 3)? {
        let d = decompose(&p, 2)?;
        let mut row = vec![p.to_string()];
        row.extend(d.components.iter().map(ToString::to_string));
        row.push(eta(&p, 2)?.to_string());
        t.rows.push(row);
    }
    Ok(t)
}

fn multi_stat_table() -> Result<Table> {
    let mut t = Table::new(
        "multi-stat-m2",
        "Sum of q_0^luck q_1^omega_1 q_2^omega_2 over PK_2(n)",
        &["n", "polynomial", "h-expansion of polynomial / q_0*q_1*q_2"],
    );
    let vars = multi_stat_vars(2);
    for n in 1..=4 {
        let p = multi_stat_poly_brute(2, n)?;
        let h = match h_decompose(&p) {
            Ok(h) => render_h_expansion(&h, &vars),
            Err(_) => "-".into(),
        };
        t.rows.push(vec![n.to_string(), p.to_string(), h]);
    }
    Ok(t)
}

fn joint_counts() -> Result<Table> {
    let n = 4u32;
    let mut t = Table::new("joint-counts", "B_2(4, k_0, k_1, k_2)", &["k_0", "k_1"]);
    t.header.extend((1..=n).map(|k2| format!("k_2={k2}")));
    let tensor = JointCountTensor::new(2, n as usize)?;
    for k0 in 1..=n {
        for k1 in 1..=n {
            let mut row = vec![k0.to_string(), k1.to_string()];
            row.extend((1..=n).map(|k2| tensor.get(&[k0, k1, k2]).to_string()));
            t.rows.push(row);
        }
    }
    Ok(t)
}
