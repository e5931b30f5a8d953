//! Record types and scan drivers behind the `ctuples` binary, exposed as a
//! library so integration tests can parse what the binary prints.

pub mod records;
pub mod scans;
