//! Exact q,t-enumeration of decorated parallelogram polyominoes, two-car
//! parking functions, labelled polyominoes and partially labelled Dyck
//! paths, with a Macdonald-polynomial oracle for the matching symmetric
//! function identities.

pub mod cli;
pub mod enumerators;
pub mod labelled_objects;
pub mod macdonald_oracle;
pub mod partition_core;
pub mod polyomino_core;
pub mod qt_algebra;
