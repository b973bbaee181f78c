// SPDX-License-Identifier: Apache-2.0

//! IO companion to `klen-core`: file formats and the pieces of the CLI
//! that are worth testing as a library.

pub mod formats;
