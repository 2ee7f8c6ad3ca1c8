use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::tokenize::tokenize;
use super::IrError;

/// One indexed document: its length in words and the positions of each term.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub length: u64,
    pub postings: BTreeMap<String, Vec<u64>>,
}

impl Document {
    pub fn from_text(text: &str) -> Self {
        let mut doc = Document::default();
        for (term, pos) in tokenize(text) {
            doc.postings.entry(term).or_default().push(pos as u64);
            doc.length = pos as u64 + 1;
        }
        doc
    }

    pub fn positions(&self, term: &str) -> &[u64] {
        self.postings.get(term).map_or(&[], Vec::as_slice)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PositionalIndex {
    docs: BTreeMap<String, Document>,
}

#[derive(Serialize, Deserialize)]
struct Record {
    doc: String,
    length: u64,
    postings: BTreeMap<String, Vec<u64>>,
}

pub fn build_index<I, S, T>(docs: I) -> Result<PositionalIndex, IrError>
where
    I: IntoIterator<Item = (S, T)>,
    S: Into<String>,
    T: AsRef<str>,
{
    let mut index = PositionalIndex::default();
    for (id, text) in docs {
        index.insert(id.into(), Document::from_text(text.as_ref()))?;
    }
    Ok(index)
}

impl PositionalIndex {
    pub fn insert(&mut self, id: String, doc: Document) -> Result<(), IrError> {
        if self.docs.contains_key(&id) {
            return Err(IrError::DuplicateDoc(id));
        }
        self.docs.insert(id, doc);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&Document> {
        self.docs.get(id)
    }

    /// Documents in id order.
    pub fn docs(&self) -> impl Iterator<Item = (&str, &Document)> {
        self.docs.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    /// Writes one JSON object per document, in id order.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<(), IrError> {
        for (id, doc) in &self.docs {
            let rec = Record { doc: id.clone(), length: doc.length, postings: doc.postings.clone() };
            serde_json::to_writer(&mut out, &rec).map_err(std::io::Error::from)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Reads the format produced by [`write_jsonl`](Self::write_jsonl); blank
    /// lines are skipped and postings are validated.
    pub fn read_jsonl<R: BufRead>(input: R) -> Result<Self, IrError> {
        let mut index = PositionalIndex::default();
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |msg: String| IrError::InvalidIndex { line: i + 1, msg };
            let rec: Record = serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
            for (term, positions) in &rec.postings {
                if positions.is_empty() {
                    return Err(bad(format!("empty posting list for {term:?}")));
                }
                if positions.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(bad(format!("positions of {term:?} are not strictly increasing")));
                }
                if positions.last().is_some_and(|&p| p >= rec.length) {
                    return Err(bad(format!("position of {term:?} beyond document length {}", rec.length)));
                }
            }
            index
                .insert(rec.doc, Document { length: rec.length, postings: rec.postings })
                .map_err(|e| bad(e.to_string()))?;
        }
        Ok(index)
    }
}
