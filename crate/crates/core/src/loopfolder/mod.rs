//! Loop folders, the loops they induce, and searches for transversals with
//! prescribed loop identities.

mod folder;
mod search;
mod table;

pub use folder::{
    check_folder, check_table, inversion_pairs, loop_from_folder, subfolder_restrict, FolderFlags, FolderReport, FolderSpec,
    LoopFolder,
};
pub use search::{search_folder_objects, search_folders, Requirements, SearchOptions};
pub use table::{ExponentProfile, LoopTable, Witness};
