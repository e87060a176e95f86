//! Box scans, table verification, Galois sweeps and modification
//! experiments over the generalized Laguerre family, plus report output.

pub mod modexp;
pub mod output;
pub mod scan;
pub mod sweep;
pub mod tables;

pub use modexp::{modification_experiment, ModexpReport};
pub use scan::{scan_box, ScanRecord, ScanReport};
pub use sweep::{galois_sweep, GaloisSweep};
pub use tables::{verify_table1, verify_table2, TableReport, TABLE1, TABLE2};
