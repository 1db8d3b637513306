mod bimodule;
mod quiver;
mod structure;
mod subalgebra;

pub use bimodule::{act, act_by, ActionTable, Bimodule, Module, Side};
pub use quiver::{from_quiver, Arrow};
pub use structure::{enveloping, format_combination, ground_field, make_algebra, FiniteDimAlgebra};
pub use subalgebra::{make_subalgebra, transported_s, Adapted, SubalgebraEmbedding};
