//! Browser bindings. Every export takes and returns plain strings; the
//! `*_json` functions are the native entry points the bindings wrap.

use cliquedyn::covers::universal_cover_ball;
use cliquedyn::dynamics::{iterate_collect, Budget, Status};
use cliquedyn::format::parse_edge_list;
use cliquedyn::oracle::triangulation;
use cliquedyn::Graph;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page will draw or iterate into.
pub const MAX_VERTICES: usize = 5000;

fn edges_json(g: &Graph) -> Value {
    g.edges().map(|(u, v)| json!([u, v])).collect()
}

fn parse(text: &str) -> Result<Graph, String> {
    parse_edge_list(text).map_err(|e| e.to_string())
}

/// Iterates the clique operator and reports sizes, plus the last iterate
/// for drawing when it is small enough.
pub fn iterate_json(
    edge_list: &str,
    max_steps: usize,
    max_vertices: usize,
) -> Result<String, String> {
    let g = parse(edge_list)?;
    let budget =
        Budget::new(max_steps, max_vertices.min(MAX_VERTICES)).map_err(|e| e.to_string())?;
    let (r, graphs) = iterate_collect(&g, budget);
    let last = graphs.last().expect("input is always kept");
    let doc = json!({
        "status": if r.status == Status::Converged { "converged" } else { "budget exceeded" },
        "sizes": r.size_sequence,
        "preperiod": r.preperiod,
        "period": r.period,
        "last": {
            "names": last.names(),
            "edges": edges_json(last),
        },
    });
    Ok(doc.to_string())
}

/// Ball of the layered triangulation with `degree` triangles at each
/// vertex.
pub fn triangulation_json(degree: usize, radius: usize) -> Result<String, String> {
    // Layers grow exponentially, so stop at the first radius over the limit.
    let mut t = triangulation(degree, 0).map_err(|e| e.to_string())?;
    for r in 1..=radius {
        t = triangulation(degree, r).map_err(|e| e.to_string())?;
        if t.graph.vertex_count() > MAX_VERTICES {
            return Err(format!(
                "radius {r} already has {} vertices, limit is {MAX_VERTICES}",
                t.graph.vertex_count()
            ));
        }
    }
    let doc = json!({
        "names": t.graph.names(),
        "layers": t.layers,
        "edges": edges_json(&t.graph),
    });
    Ok(doc.to_string())
}

/// Ball of the universal triangular cover of an edge list around `base`.
pub fn universal_cover_json(edge_list: &str, base: &str, radius: usize) -> Result<String, String> {
    let g = parse(edge_list)?;
    let u = universal_cover_ball(&g, base, radius).map_err(|e| e.to_string())?;
    if u.cover.vertex_count() > MAX_VERTICES {
        return Err(format!(
            "ball has {} vertices, limit is {MAX_VERTICES}",
            u.cover.vertex_count()
        ));
    }
    let images: Vec<&str> = u
        .cover
        .vertices()
        .map(|v| u.projection.image_name(v))
        .collect();
    let doc = json!({
        "names": u.cover.names(),
        "images": images,
        "layers": u.depths,
        "boundary": u.boundary,
        "edges": edges_json(&u.cover),
    });
    Ok(doc.to_string())
}

#[wasm_bindgen]
pub fn iterate(edge_list: &str, max_steps: usize, max_vertices: usize) -> Result<String, JsValue> {
    iterate_json(edge_list, max_steps, max_vertices).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = triangulationBall)]
pub fn triangulation_ball(degree: usize, radius: usize) -> Result<String, JsValue> {
    triangulation_json(degree, radius).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = universalCover)]
pub fn universal_cover(edge_list: &str, base: &str, radius: usize) -> Result<String, JsValue> {
    universal_cover_json(edge_list, base, radius).map_err(|e| JsValue::from_str(&e))
}
