//! Browser bindings for the static demo page in `www/`.
//!
//! Every export returns display text; failures come back as a line starting
//! with `error:` so the page can show them as-is.

use socle_lab::render::render_side_by_side;
use socle_lab::{decompose_tensor, render_structure, render_tower, schur_product_expand, socle_layers, AlgebraKind, BoxStyle, Partition};
use wasm_bindgen::prelude::wasm_bindgen;

fn style(unicode: bool) -> BoxStyle {
    if unicode {
        BoxStyle::Unicode
    } else {
        BoxStyle::Ascii
    }
}

fn or_error(r: socle_lab::Result<String>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}"))
}

/// Boxed socle tower of `Γ_λ ⊗ Γ_μ`; `mu` must be empty or `0` for sp
/// and so.
#[wasm_bindgen]
pub fn socle_tower(algebra: &str, lambda: &str, mu: &str, unicode: bool) -> String {
    or_error((|| {
        let algebra: AlgebraKind = algebra.parse()?;
        let lambda: Partition = lambda.parse()?;
        let mu: Partition = mu.parse()?;
        let diagram = socle_layers(algebra, &lambda, &mu)?;
        Ok(render_side_by_side(&[render_tower(&diagram, 1, style(unicode))]))
    })())
}

/// All towers of the tensor space with `p` covariant and `q` contravariant
/// factors.
#[wasm_bindgen]
pub fn decompose(algebra: &str, p: usize, q: usize, unicode: bool) -> String {
    or_error((|| {
        let algebra: AlgebraKind = algebra.parse()?;
        if p + q > 6 {
            return Err(socle_lab::Error::Capacity(format!("{} factors; the demo stops at 6", p + q)));
        }
        Ok(render_structure(&decompose_tensor(algebra, p, q)?.structure(), style(unicode)))
    })())
}

/// `s_λ s_μ` as `ν:N` terms.
#[wasm_bindgen]
pub fn lr_expand(lambda: &str, mu: &str) -> String {
    or_error((|| {
        let lambda: Partition = lambda.parse()?;
        let mu: Partition = mu.parse()?;
        if lambda.weight() + mu.weight() > 16 {
            return Err(socle_lab::Error::Capacity("the demo stops at 16 boxes".into()));
        }
        Ok(schur_product_expand(&lambda, &mu).to_string())
    })())
}
