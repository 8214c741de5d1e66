//! Reproduction report: published genus-2 values and the structural constants of `g_k`.

use gammainv::output::{fmt17, json_real};
use gammainv::pickrep::pick_parameters;
use gammainv::{ClassGMember, Error};
use serde_json::{json, Value};

pub struct Selection {
    pub genus2: bool,
    pub structural: bool,
}

pub struct Item {
    pub name: String,
    pub published: Option<f64>,
    pub computed: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Item {
    fn new(name: impl Into<String>, published: Option<f64>, computed: f64, tolerance: f64) -> Self {
        let pass = match published {
            Some(p) => (computed - p).abs() <= tolerance,
            None => computed.is_finite(),
        };
        Item { name: name.into(), published, computed, tolerance, pass }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}\n",
            self.name,
            self.published.map(fmt17).unwrap_or_default(),
            fmt17(self.computed),
            fmt17(self.tolerance),
            self.pass
        )
    }
}

pub struct Report {
    pub items: Vec<Item>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn rows(&self) -> Vec<Value> {
        self.items
            .iter()
            .map(|i| {
                json!({
                    "name": i.name,
                    "paper_value": i.published.map(json_real).unwrap_or(Value::Null),
                    "computed": json_real(i.computed),
                    "tolerance": json_real(i.tolerance),
                    "pass": i.pass,
                })
            })
            .collect()
    }
}

pub fn build(sel: Selection) -> Result<Report, Error> {
    let mut items = Vec::new();
    if sel.genus2 {
        let g = ClassGMember::barnes_g();
        let h = ClassGMember::inv_gamma2();
        items.push(Item::new("beta_G", Some(2.568), g.beta, 1e-3));
        items.push(Item::new("G(beta_G)", Some(0.945), g.f_beta, 1e-3));
        items.push(Item::new("beta_2", Some(3.763), h.beta, 1e-3));
        items.push(Item::new("1/Gamma_2(beta_2)", Some(0.048), h.f_beta, 1e-3));
    }
    if sel.structural {
        for k in 1..=4 {
            let p = pick_parameters(k)?;
            items.push(Item::new(format!("a_{k}"), Some(0.0), p.a_fit, 1e-6));
            items.push(Item::new(format!("b_{k}"), Some(-(k as f64)), p.b, 1e-3));
            items.push(Item::new(format!("c_{k}"), Some(0.0), p.c_fit, 1e-4));
        }
    }
    Ok(Report { items })
}
