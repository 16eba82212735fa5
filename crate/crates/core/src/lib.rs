//! An exact-arithmetic engine for para-cocyclic towers: braided monoidal
//! backends (group-graded spaces with a bi-character, and modules over a
//! quasitriangular Hopf algebra), algebras and bimodules given by structure
//! constants, relative tensor products realized as explicit quotient spaces,
//! the induced outer/inner monads with their distributive laws, and the
//! cosimplex with its para-cocyclic operator — every law machine-checked.

pub mod adjoint;
pub mod algebra;
pub mod backend;
pub mod cosimplex;
pub mod error;
pub mod field;
pub mod graded;
pub mod group;
pub mod hopf;
pub mod instance;
pub mod matrix;
pub mod quotient;
pub mod report;
pub mod run;
pub mod tensor;
pub mod tower;
