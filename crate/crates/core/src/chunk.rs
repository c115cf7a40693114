//! Splitting raw documents into fixed-size passages.
//!
//! A "word" is a maximal run of non-whitespace characters (Unicode
//! whitespace). Passage text is the words re-joined with single spaces, so
//! chunking is a pure function of the word sequence.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// An unchunked source document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDoc {
    pub doc_id: String,
    pub title: String,
    pub body: String,
}

/// One fixed-size chunk of a source document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Passage {
    /// `doc_id` + `#` + zero-based chunk ordinal.
    pub passage_id: String,
    pub title: String,
    pub text: String,
    pub word_count: usize,
}

/// An ordered collection of passages with unique ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub passages: Vec<Passage>,
    pub source_tag: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusError {
    DuplicatePassageId { id: String },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::DuplicatePassageId { id } => {
                write!(f, "duplicate passage id {id:?}")
            }
        }
    }
}

impl core::error::Error for CorpusError {}

impl Corpus {
    /// Builds a corpus, rejecting duplicate passage ids.
    pub fn new(passages: Vec<Passage>, source_tag: impl Into<String>) -> Result<Self, CorpusError> {
        let mut ids: Vec<&str> = passages.iter().map(|p| p.passage_id.as_str()).collect();
        ids.sort_unstable();
        for pair in ids.windows(2) {
            if pair[0] == pair[1] {
                return Err(CorpusError::DuplicatePassageId {
                    id: String::from(pair[0]),
                });
            }
        }
        Ok(Self {
            passages,
            source_tag: source_tag.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.passages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passages.is_empty()
    }
}

/// Splits a document body into non-overlapping passages of
/// `words_per_passage` words; the final passage keeps the remainder.
///
/// The passage word sequences partition the body word sequence, so
/// concatenating them reproduces it exactly. An empty body yields no
/// passages.
///
/// # Panics
///
/// Panics if `words_per_passage` is zero.
pub fn chunk_document(doc: &RawDoc, words_per_passage: usize) -> Vec<Passage> {
    assert!(words_per_passage >= 1, "words_per_passage must be >= 1");
    let words: Vec<&str> = doc.body.split_whitespace().collect();
    words
        .chunks(words_per_passage)
        .enumerate()
        .map(|(ordinal, chunk)| Passage {
            passage_id: format!("{}#{}", doc.doc_id, ordinal),
            title: doc.title.clone(),
            text: chunk.join(" "),
            word_count: chunk.len(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn raw(body: &str) -> RawDoc {
        RawDoc {
            doc_id: "doc".to_string(),
            title: "Title".to_string(),
            body: body.to_string(),
        }
    }

    fn body_of(n: usize) -> String {
        (0..n).map(|i| format!("w{i}")).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn splits_250_words_into_100_100_50() {
        let passages = chunk_document(&raw(&body_of(250)), 100);
        let counts: Vec<usize> = passages.iter().map(|p| p.word_count).collect();
        assert_eq!(counts, vec![100, 100, 50]);
        assert_eq!(passages[0].passage_id, "doc#0");
        assert_eq!(passages[2].passage_id, "doc#2");
    }

    #[test]
    fn exactly_one_chunk_for_exact_fit() {
        let passages = chunk_document(&raw(&body_of(100)), 100);
        assert_eq!(passages.len(), 1);
        assert_eq!(passages[0].word_count, 100);
    }

    #[test]
    fn empty_body_yields_no_passages() {
        assert!(chunk_document(&raw(""), 100).is_empty());
        assert!(chunk_document(&raw(" \t\n"), 100).is_empty());
    }

    #[test]
    fn passages_partition_the_word_sequence() {
        let doc = raw("one  two\tthree\nfour five six seven");
        let passages = chunk_document(&doc, 3);
        let rejoined: Vec<&str> = passages
            .iter()
            .flat_map(|p| p.text.split_whitespace())
            .collect();
        let original: Vec<&str> = doc.body.split_whitespace().collect();
        assert_eq!(rejoined, original);
        assert_eq!(passages.len(), 3);
        assert_eq!(passages[2].word_count, 1);
    }

    #[test]
    fn corpus_rejects_duplicate_ids() {
        let p = Passage {
            passage_id: "a#0".to_string(),
            title: String::new(),
            text: "x".to_string(),
            word_count: 1,
        };
        let err = Corpus::new(vec![p.clone(), p], "t").unwrap_err();
        assert_eq!(
            err,
            CorpusError::DuplicatePassageId {
                id: "a#0".to_string()
            }
        );
    }
}
