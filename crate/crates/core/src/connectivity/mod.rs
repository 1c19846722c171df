//! Blocks, articulation vertices and unit-capacity flow machinery.

pub(crate) mod bcc;
mod blocks;
mod flow;

pub use blocks::{
    find_blocks, is_biconnected, pep_chain_reduction, reduce_to_common_block, Block, BlockTree,
};
pub use flow::{
    is_k_connected, local_connectivity, vertex_disjoint_paths, ArcOrigin, FlowMode, FlowNetwork,
};
