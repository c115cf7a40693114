//! Dataset model shared by every stage: questions, gold answers, retrieved
//! contexts, and whole QA datasets.
//!
//! Values are immutable after construction; stages that change a document
//! (e.g. re-ranking) build a new one rather than mutating in place.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// The query side of one QA example.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Question {
    pub text: String,
}

impl Question {
    pub fn new(text: impl Into<String>) -> Self {
        Self { text: text.into() }
    }
}

/// Gold answers for one question, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnswerSet {
    pub answers: Vec<String>,
}

impl AnswerSet {
    pub fn new(answers: Vec<String>) -> Self {
        Self { answers }
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.answers.iter().map(String::as_str)
    }
}

/// One retrieved passage attached to a question.
///
/// `score` is whatever the producing stage assigned: a retriever similarity
/// or a re-ranker score. `has_answer` is a cache; metrics recompute it from
/// the text.
#[derive(Debug, Clone, PartialEq)]
pub struct Context {
    pub id: String,
    pub title: String,
    pub text: String,
    pub score: f64,
    pub has_answer: bool,
}

/// One QA example: question, gold answers, and ranked candidate passages.
///
/// `contexts` is the retriever output, best first. `reordered_contexts`,
/// when present, is a re-ranker's permutation of the same passages.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub question: Question,
    pub answers: AnswerSet,
    pub contexts: Vec<Context>,
    pub reordered_contexts: Option<Vec<Context>>,
}

impl Document {
    pub fn new(question: Question, answers: AnswerSet, contexts: Vec<Context>) -> Self {
        Self {
            question,
            answers,
            contexts,
            reordered_contexts: None,
        }
    }

    /// The list consumers should rank by: the re-ranked order when present,
    /// the retriever order otherwise.
    pub fn ranked_contexts(&self) -> &[Context] {
        match &self.reordered_contexts {
            Some(reordered) => reordered,
            None => &self.contexts,
        }
    }
}

/// A named collection of documents produced by one retriever.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub retriever_tag: String,
    pub documents: Vec<Document>,
}

impl Dataset {
    pub fn new(name: impl Into<String>, retriever_tag: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            retriever_tag: retriever_tag.into(),
            documents: Vec::new(),
        }
    }
}

/// One invariant breach found by [`validate_document`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyQuestion,
    EmptyAnswer { index: usize },
    EmptyContextText { id: String },
    NonFiniteScore { id: String },
    DuplicateContextId { id: String },
    ContextsOutOfOrder { position: usize },
    /// An id whose multiplicity differs between `contexts` and
    /// `reordered_contexts`.
    ReorderedIdMismatch { id: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyQuestion => write!(f, "question is empty"),
            Violation::EmptyAnswer { index } => write!(f, "answer {index} is empty"),
            Violation::EmptyContextText { id } => write!(f, "context {id:?} has empty text"),
            Violation::NonFiniteScore { id } => {
                write!(f, "context {id:?} has a non-finite score")
            }
            Violation::DuplicateContextId { id } => write!(f, "duplicate context id {id:?}"),
            Violation::ContextsOutOfOrder { position } => {
                write!(f, "contexts not sorted by score at position {position}")
            }
            Violation::ReorderedIdMismatch { id } => write!(
                f,
                "reordered_contexts is not a permutation of contexts: id {id:?} mismatched"
            ),
        }
    }
}

/// Checks every document-level invariant and reports each breach.
///
/// Returns an empty list iff the document is valid. Loaders reject any
/// record for which this is non-empty, so a loaded dataset is valid
/// throughout.
pub fn validate_document(doc: &Document) -> Vec<Violation> {
    let mut violations = Vec::new();

    if doc.question.text.trim().is_empty() {
        violations.push(Violation::EmptyQuestion);
    }
    for (index, answer) in doc.answers.answers.iter().enumerate() {
        if answer.is_empty() {
            violations.push(Violation::EmptyAnswer { index });
        }
    }

    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for ctx in &doc.contexts {
        if ctx.text.is_empty() {
            violations.push(Violation::EmptyContextText { id: ctx.id.clone() });
        }
        if !ctx.score.is_finite() {
            violations.push(Violation::NonFiniteScore { id: ctx.id.clone() });
        }
        let count = seen.entry(ctx.id.as_str()).or_insert(0);
        *count += 1;
        if *count == 2 {
            violations.push(Violation::DuplicateContextId { id: ctx.id.clone() });
        }
    }

    for (position, pair) in doc.contexts.windows(2).enumerate() {
        if pair[0].score < pair[1].score {
            violations.push(Violation::ContextsOutOfOrder {
                position: position + 1,
            });
        }
    }

    if let Some(reordered) = &doc.reordered_contexts {
        let mut counts: BTreeMap<&str, i64> = BTreeMap::new();
        for ctx in &doc.contexts {
            *counts.entry(ctx.id.as_str()).or_insert(0) += 1;
        }
        for ctx in reordered {
            *counts.entry(ctx.id.as_str()).or_insert(0) -= 1;
        }
        for (id, count) in counts {
            if count != 0 {
                violations.push(Violation::ReorderedIdMismatch {
                    id: String::from(id),
                });
            }
        }
    }

    violations
}
