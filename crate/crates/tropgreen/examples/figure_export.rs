//! Export projective row/column spaces as CSV and SVG scatters: the
//! weak-basis vertices plus sampled hull points, in chart coordinates.
//!
//! Writes the three bundled-example figures into `target/figures/`.
//!
//! ```bash
//! cargo run -p tropgreen --example figure_export
//! ```

use std::path::PathBuf;

use tropgreen::figure::{export_figure, Space};
use tropgreen::fixtures;

fn main() {
    let out_dir = PathBuf::from("target/figures");
    std::fs::create_dir_all(&out_dir).expect("create output directory");

    let jobs = [
        ("pc_a61", fixtures::a61(), Space::Cols, None),
        ("pc_b61", fixtures::b61(), Space::Cols, None),
        ("pr_a63", fixtures::a63(), Space::Rows, None),
        // the T-flavored spaces chart on their third coordinate
        ("pc_a62", fixtures::a62(), Space::Cols, Some(2)),
        ("pc_b62", fixtures::b62(), Space::Cols, Some(2)),
    ];

    for (name, matrix, space, pivot) in jobs {
        let csv = out_dir.join(format!("{name}.csv"));
        let svg = out_dir.join(format!("{name}.svg"));
        let data = export_figure(&matrix, space, Some(&csv), Some(&svg), 160, 17, pivot)
            .expect("export succeeds");
        let vertices: Vec<String> = data
            .plot_vertices
            .iter()
            .map(|(x, y)| format!("({}, {})", x.to_text(), y.to_text()))
            .collect();
        println!(
            "{name}: {} vertices {} + {} samples → {} / {}",
            data.vertices.len(),
            vertices.join(" "),
            data.samples.len(),
            csv.display(),
            svg.display()
        );
    }
}
