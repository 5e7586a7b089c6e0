//! Placeholder; filled in alongside the CLI.
