//! Text rendering of socle diagrams as boxed towers, top layer first and
//! socle last, the way the layers stack in a module.

use crate::socle::{SocleDiagram, TensorStructure};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BoxStyle {
    #[default]
    Ascii,
    Unicode,
}

struct Glyphs {
    top: (char, char, char),
    mid: (char, char, char),
    bottom: (char, char, char),
    vertical: char,
}

impl BoxStyle {
    fn glyphs(self) -> Glyphs {
        match self {
            BoxStyle::Ascii => Glyphs {
                top: ('+', '-', '+'),
                mid: ('+', '-', '+'),
                bottom: ('+', '-', '+'),
                vertical: '|',
            },
            BoxStyle::Unicode => Glyphs {
                top: ('┌', '─', '┐'),
                mid: ('├', '─', '┤'),
                bottom: ('└', '─', '┘'),
                vertical: '│',
            },
        }
    }
}

/// One indecomposable drawn as a column of boxes, plus the JSON it was
/// drawn from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderedTower {
    pub lines: Vec<String>,
    pub json: String,
}

impl RenderedTower {
    pub fn width(&self) -> usize {
        self.lines.iter().map(|l| l.chars().count()).max().unwrap_or(0)
    }

    pub fn parse_diagram(&self) -> serde_json::Result<SocleDiagram> {
        serde_json::from_str(&self.json)
    }
}

fn layer_text(layer: &crate::socle::Layer) -> String {
    layer
        .iter()
        .map(|(label, m)| {
            if m == 1 {
                label.to_string()
            } else {
                format!("{m} {label}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

fn center(text: &str, width: usize) -> String {
    let len = text.chars().count();
    let left = (width - len) / 2;
    let right = width - len - left;
    format!("{}{}{}", " ".repeat(left), text, " ".repeat(right))
}

pub fn render_tower(diagram: &SocleDiagram, mult: u64, style: BoxStyle) -> RenderedTower {
    let g = style.glyphs();
    let texts: Vec<String> = diagram.layers().iter().rev().map(layer_text).collect();
    let inner = texts.iter().map(|t| t.chars().count()).max().unwrap_or(0) + 2;
    let rule = |(l, h, r): (char, char, char)| {
        format!("{l}{}{r}", h.to_string().repeat(inner))
    };

    let mut lines = Vec::with_capacity(2 * texts.len() + 2);
    if mult > 1 {
        lines.push(format!("{mult} ×"));
    }
    lines.push(rule(g.top));
    for (i, t) in texts.iter().enumerate() {
        lines.push(format!("{}{}{}", g.vertical, center(t, inner), g.vertical));
        let edge = if i + 1 == texts.len() { g.bottom } else { g.mid };
        lines.push(rule(edge));
    }
    RenderedTower {
        lines,
        json: serde_json::to_string(diagram).expect("diagram serializes"),
    }
}

/// Towers side by side, aligned on their socles, separated by `⊕`.
pub fn render_side_by_side(towers: &[RenderedTower]) -> String {
    let height = towers.iter().map(|t| t.lines.len()).max().unwrap_or(0);
    let sep_row = height.saturating_sub(2);
    let mut rows = vec![String::new(); height];
    for (k, t) in towers.iter().enumerate() {
        let w = t.width();
        let pad = height - t.lines.len();
        for (row, out) in rows.iter_mut().enumerate() {
            if k > 0 {
                out.push_str(if row == sep_row { "  ⊕  " } else { "     " });
            }
            let cell = row.checked_sub(pad).map(|i| t.lines[i].as_str()).unwrap_or("");
            out.push_str(cell);
            out.push_str(&" ".repeat(w - cell.chars().count()));
        }
    }
    let mut text = rows
        .iter()
        .map(|r| r.trim_end())
        .collect::<Vec<_>>()
        .join("\n");
    text.push('\n');
    text
}

pub fn render_structure(structure: &TensorStructure, style: BoxStyle) -> String {
    let towers: Vec<RenderedTower> = structure
        .towers
        .iter()
        .map(|t| render_tower(&t.diagram, t.mult, style))
        .collect();
    let header = if structure.algebra.is_mixed() {
        format!("{} V^({},{})", structure.algebra, structure.p, structure.q)
    } else {
        format!("{} V^{}", structure.algebra, structure.p)
    };
    format!("{header}\n{}", render_side_by_side(&towers))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::socle::{decompose_tensor, gl_socle_layers, so_socle_layers, AlgebraKind};

    #[test]
    fn single_tower() {
        let t = render_tower(&so_socle_layers(&part![2]), 1, BoxStyle::Ascii);
        assert_eq!(
            t.lines,
            vec![
                "+--------+",
                "| Γ[(0)] |",
                "+--------+",
                "| Γ[(2)] |",
                "+--------+",
            ]
        );
        assert_eq!(t.parse_diagram().unwrap(), so_socle_layers(&part![2]));
    }

    #[test]
    fn multiplicity_header_and_unicode() {
        let d = gl_socle_layers(&part![2, 1], &part![1]);
        let t = render_tower(&d, 2, BoxStyle::Unicode);
        assert_eq!(t.lines[0], "2 ×");
        assert!(t.lines[1].starts_with('┌'));
        assert!(t.lines.last().unwrap().starts_with('└'));
        assert!(t.lines[2].contains("Γ{(2);(0)} ⊕ Γ{(1,1);(0)}"));
    }

    #[test]
    fn structure_is_bottom_aligned() {
        let s = decompose_tensor(AlgebraKind::Sp, 2, 0).unwrap().structure();
        let text = render_structure(&s, BoxStyle::Ascii);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "sp V^2");
        assert!(lines.last().unwrap().contains('+'));
        assert!(lines.iter().any(|l| l.contains('⊕')));
    }
}
