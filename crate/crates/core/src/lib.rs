pub mod algebra;
pub mod exactla;
pub mod exec;
pub mod group;
pub mod partial_action;
pub mod report;
pub mod skew;
pub mod smash;
pub mod duality;
pub mod hopf;
pub mod scenario;
