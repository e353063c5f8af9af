use crate::facelet::FaceletState;

/// Draws the sticker field as an unfolded net, one letter per sticker:
///
/// ```text
///       U U U
///       U U U
///       U U U
/// L L L F F F R R R B B B
/// L L L F F F R R R B B B
/// L L L F F F R R R B B B
///       D D D
///       D D D
///       D D D
/// ```
pub fn render_net(state: &FaceletState) -> String {
    let s = state.stickers();
    let mut out = String::new();
    let row = |base: usize, r: usize| {
        let mut cells = String::new();
        for c in 0..3 {
            if c > 0 {
                cells.push(' ');
            }
            cells.push(s[base + 3 * r + c].letter());
        }
        cells
    };
    for r in 0..3 {
        out.push_str("      ");
        out.push_str(&row(0, r));
        out.push('\n');
    }
    for r in 0..3 {
        // Middle band: L, F, R, B faces share each row.
        for (i, base) in [36, 18, 9, 45].into_iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&row(base, r));
        }
        out.push('\n');
    }
    for r in 0..3 {
        out.push_str("      ");
        out.push_str(&row(27, r));
        out.push('\n');
    }
    out
}
