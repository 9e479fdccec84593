//! Instance files, point files and result serialisation.

mod emit;
mod instance_file;
mod points;

pub use emit::{emit_decomposition, emit_points, emit_result, parse_result_json, triple_fields, Format};
pub use instance_file::{parse_instance, write_instance};
pub use points::{parse_count_vectors, parse_points, parse_vector};
