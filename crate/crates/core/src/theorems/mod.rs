//! Registry of the verifiable block-matrix inequalities and the machinery to
//! check them on single instances, over seeded random suites, and in the
//! residual scan.

mod cases;
mod maps;
mod registry;
mod scan;
mod suite;

pub use cases::{
    build_slack, check_case, eq18_slack, instance_dims, require_input_class, residual, Part,
    PartCheck, PartReport, SlackReport,
};
pub use maps::{apply_map, apply_map_blockwise, MapKind};
pub use registry::{lookup, registry, CheckKind, InputClass, TheoremCase, REGISTRY};
pub use scan::{open_question_scan, ScanDimsReport, ScanReport, HISTOGRAM_BINS};
pub use suite::{
    generate_instance, run_suite, suite_dims, CaseAggregate, DimsAggregate, SuiteConfig,
    SuiteReport,
};
