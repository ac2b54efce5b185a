//! Text formats and reports.

mod parse;
mod render;

pub use parse::{
    parse_af, parse_classical_labeling, parse_extension, parse_fas, parse_labeling, FasDocument, LabelingDocument,
    Position,
};
pub use render::{
    render_af, render_extension, render_fas, render_labeling, render_report, CheckReport, ExtensionSetReport,
    LabelingSetReport, Report, ValuesReport, GRID_DOMAIN,
};
