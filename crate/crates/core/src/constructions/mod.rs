//! Parametrised graphs: Turán graphs, edge blow-ups, vertex splits, the
//! apex-plus-Turán constructions and the bounded-degree/matching witnesses.

mod blowup;
mod extremal;
mod turan;

pub use blowup::{edge_blowup, k_st_split, split_family, vertex_split, BlowupSpec, SPLIT_FAMILY_CAP};
pub use extremal::{
    e_nu_delta_witness, h_construction, h_family_member, h_odd_gadget, Apex, HFamilySpec,
};
pub use turan::{turan_graph, turan_parts};
