//! Browser demo: three interactive operations over the core library,
//! exchanging JSON strings with a static page.
//!
//! Build with `wasm-pack build --target web crates/wasm-demo` (or
//! `cargo build --target wasm32-unknown-unknown` plus `wasm-bindgen`); the
//! page in `www/` loads the generated module.  The exported functions are
//! ordinary Rust functions on native targets, which is how the tests below
//! exercise them.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use plumbline_core::corpus;
use plumbline_core::graph::{parse_graph, RatCycle};
use plumbline_core::lattice;
use plumbline_core::rat::rat_str;
use plumbline_core::seifert;
use plumbline_core::si;

fn err_json(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

/// Lattice invariants of a graph given in the `vertex`/`edge` file format.
#[wasm_bindgen]
pub fn graph_invariants(text: &str) -> String {
    let g = match parse_graph(text) {
        Ok(g) => g,
        Err(e) => return err_json(e),
    };
    let zmin = lattice::laufer_zmin(&g);
    let zk = g.canonical_cycle();
    let chi_zmin = g.chi(&zmin.to_rat());
    let h1 = lattice::h1_zmin(&g);
    let ldom = lattice::l_dom(&g, &RatCycle::zero(g.n()));
    json!({
        "ids": g.ids(),
        "discriminant": g.discriminant().to_string(),
        "z_min": g.cycle_map(&zmin.to_rat()),
        "z_k": g.cycle_map(&zk),
        "chi_z_min": rat_str(&chi_zmin),
        "h1_o_zmin": h1.to_string(),
        "rational": lattice::is_rational(&g),
        "rational_or_elliptic": lattice::is_rational_or_elliptic(&g),
        "l_dom_of_zero": g.cycle_map(&ldom.to_rat()),
    })
    .to_string()
}

/// Weighted-homogeneous explorer: invariants, the s-recursion, and the
/// `h^1(-k E*_c)` curve for `k = 1..=kmax`.
#[wasm_bindgen]
pub fn seifert_explore(text: &str, kmax: u32) -> String {
    let sd = match seifert::parse_inline(text) {
        Ok(sd) => sd,
        Err(e) => return err_json(e),
    };
    let inv = match seifert::wh_invariants(&sd) {
        Ok(v) => v,
        Err(e) => return err_json(e),
    };
    let (s, s0) = seifert::s_recursion(&sd).expect("invariants computed above");
    let dim_im = seifert::dim_im_central(&sd).expect("invariants computed above");
    let h1_curve: Vec<Value> = (1..=kmax.max(1) as i64)
        .map(|k| {
            let h1 = seifert::h1_central(&sd, k).expect("invariants computed above");
            json!({ "k": k, "h1": h1.to_string() })
        })
        .collect();
    let forms: Vec<Value> = seifert::wh_form_basis(&sd)
        .expect("invariants computed above")
        .iter()
        .map(|f| json!({ "ell": f.ell, "n": f.n, "pole": f.pole, "m": f.m }))
        .collect();
    json!({
        "e": rat_str(&sd.euler_number()),
        "ell_max": inv.ell_max,
        "w": inv.w,
        "n_on_w": inv.w.iter().map(|&l| inv.n[l as usize]).collect::<Vec<_>>(),
        "pg": inv.pg.to_string(),
        "s": s,
        "s0": s0,
        "dim_im": dim_im.to_string(),
        "dominant": s0 == 0,
        "h1_central": h1_curve,
        "forms": forms,
    })
    .to_string()
}

/// Superisolated explorer: the generic image-dimension staircase for
/// `k = 0..=kmax` and the dominance threshold.
#[wasm_bindgen]
pub fn superisolated_explore(d: u32, kmax: u32) -> String {
    let d = d as i64;
    if !(3..=12).contains(&d) {
        return err_json("d must be between 3 and 12");
    }
    let rows: Vec<Value> = (0..=kmax as i64)
        .map(|k| {
            json!({
                "k": k,
                "dim_im": si::si_dim_im_generic(d, k).to_string(),
                "dominant": si::si_dim_im_generic(d, k) == si::si_pg(d),
            })
        })
        .collect();
    json!({
        "pg": si::si_pg(d).to_string(),
        "first_dominant_k": si::si_first_dominant(d),
        "staircase": rows,
    })
    .to_string()
}

/// Names of the bundled corpus graphs.
#[wasm_bindgen]
pub fn corpus_names() -> String {
    json!(corpus::NAMES).to_string()
}

/// Graph file contents of a corpus graph.
#[wasm_bindgen]
pub fn corpus_source(name: &str) -> String {
    match corpus::source(name) {
        Some(s) => json!({ "source": s }).to_string(),
        None => err_json(format!("unknown corpus graph `{name}`")),
    }
}
