//! Core algorithms for a retrieval / re-ranking / RAG evaluation engine.
//!
//! This crate is `no_std` (with `alloc`) and holds everything that is pure
//! computation: the dataset model, passage chunking, a BM25 inverted index,
//! exact dense and late-interaction (MaxSim) scoring, the three re-ranking
//! orchestrators, prompt assembly, and the QA evaluation metrics.
//!
//! File formats, index persistence, HTTP clients, and the command-line
//! interface live in the companion `ragkit` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bm25;
pub mod chunk;
pub mod dense;
pub mod metrics;
pub mod porter;
pub mod prompt;
pub mod rerank;
pub mod types;

pub use types::{AnswerSet, Context, Dataset, Document, Question};
