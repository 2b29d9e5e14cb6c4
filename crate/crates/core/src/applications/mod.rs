//! Worked problems built on the core: the two-sentence equivalence example,
//! categorical syllogisms and grid puzzles of the Einstein kind.

mod paper;
mod syllogism;
mod zebra;

pub use paper::{
    paper_fixtures, verify_paper_example, PaperFixtures, PaperReport, ReportEntry, CHAIN_DOMAIN_BOUND,
    CHAIN_ONE, CHAIN_TWO, F1, F2, G1, G2,
};
pub use syllogism::{
    certify_syllogism, check_syllogism, check_syllogism_with, count_valid_syllogisms,
    count_valid_syllogisms_with, syllogism_to_fol, syllogism_to_fol_with, Import, Mood, Syllogism,
    SyllogismError, SyllogismVerdict, SYLLOGISM_DOMAIN_BOUND,
};
pub use zebra::{
    encode_zebra, parse_zebra, solve_zebra, Clue, ZebraError, ZebraOutcome, ZebraSolution, ZebraSpec,
};

/// The classic five-house puzzle with the question of who keeps the fish.
pub const EINSTEIN_SPEC: &str = include_str!("../../data/einstein.zebra");
