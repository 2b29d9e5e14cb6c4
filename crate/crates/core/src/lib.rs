//! A logic workbench: propositional and first-order syntax and semantics,
//! normal forms, DPLL, resolution, natural deduction, BDDs and Datalog, plus
//! a few classic puzzles encoded on top of them.

pub mod syntax;
pub mod semantics;
pub mod normalform;
pub mod registry;
pub mod sat;
pub mod resolution;
pub mod bdd;
pub mod natded;
pub mod datalog;
pub mod applications;
pub mod generate;
