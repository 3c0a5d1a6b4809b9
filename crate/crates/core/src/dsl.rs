//! Plain-text format for fronts.
//!
//! ```text
//! # name: plat trefoil
//! L1 L3        # two stacked eyes
//! X2 X2 X2
//! R1 R1
//! ```
//!
//! Tokens are `L<k>`, `X<k>` and `R<k>` with `k` a positive decimal integer,
//! separated by whitespace. `#` starts a comment running to the end of the
//! line. A comment of the form `# name: <text>` sets the document name.

use std::fmt::Write as _;

use thiserror::Error;

use crate::front::{Event, EventKind, Front, FrontError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{line}:{col}: unexpected character {found:?}")]
    Lex {
        line: usize,
        col: usize,
        found: char,
    },
    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] FrontError),
}

/// A parsed front together with its source text and comment metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontDocument {
    pub source: String,
    pub front: Front,
    pub name: Option<String>,
    /// Text of every comment, without the leading `#`, in source order.
    pub comments: Vec<String>,
}

struct Token {
    kind: EventKind,
    digits: String,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<(Vec<Token>, Vec<String>), DslError> {
    let mut tokens = Vec::new();
    let mut comments = Vec::new();
    for (l, raw) in text.lines().enumerate() {
        let line = l + 1;
        let (body, comment) = match raw.find('#') {
            Some(at) => (&raw[..at], Some(&raw[at + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            comments.push(c.trim().to_string());
        }
        let mut chars = body.char_indices().peekable();
        while let Some((at, ch)) = chars.next() {
            let col = body[..at].chars().count() + 1;
            if ch.is_whitespace() {
                continue;
            }
            let kind = match ch {
                'L' => EventKind::LeftCusp,
                'X' => EventKind::Crossing,
                'R' => EventKind::RightCusp,
                _ => {
                    return Err(DslError::Lex {
                        line,
                        col,
                        found: ch,
                    })
                }
            };
            let mut digits = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                if !c.is_ascii_digit() {
                    return Err(DslError::Parse {
                        line,
                        col,
                        message: format!("malformed token starting with {ch:?}"),
                    });
                }
                digits.push(c);
                chars.next();
            }
            tokens.push(Token {
                kind,
                digits,
                line,
                col,
            });
        }
    }
    Ok((tokens, comments))
}

/// Parses and validates a front.
pub fn parse(text: &str) -> Result<FrontDocument, DslError> {
    let (tokens, comments) = tokenize(text)?;
    let mut events = Vec::with_capacity(tokens.len());
    for t in tokens {
        let bad = |message: &str| DslError::Parse {
            line: t.line,
            col: t.col,
            message: message.to_string(),
        };
        if t.digits.is_empty() {
            return Err(bad("missing level after event letter"));
        }
        let level: usize = t.digits.parse().map_err(|_| bad("level is too large"))?;
        if level == 0 {
            return Err(bad("levels start at 1"));
        }
        events.push(Event {
            kind: t.kind,
            level,
        });
    }
    let front = Front::new(events)?;
    let name = comments
        .iter()
        .find_map(|c| c.strip_prefix("name:"))
        .map(|n| n.trim().to_string());
    Ok(FrontDocument {
        source: text.to_string(),
        front,
        name,
        comments,
    })
}

/// Serializes a front as a single line of tokens.
pub fn serialize(front: &Front) -> String {
    let mut s = front.to_string();
    s.push('\n');
    s
}

/// Serializes a front with a name header. A new row starts at each left cusp
/// that follows another kind of event, and rows hold at most 16 tokens.
pub fn serialize_named(front: &Front, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "# name: {name}").unwrap();
    let mut row = Vec::new();
    for (i, e) in front.events().iter().enumerate() {
        row.push(e.to_string());
        let next = front.events().get(i + 1);
        let boundary = match next {
            None => true,
            Some(n) => {
                (n.kind == EventKind::LeftCusp && e.kind != EventKind::LeftCusp) || row.len() >= 16
            }
        };
        if boundary {
            writeln!(s, "{}", row.join(" ")).unwrap();
            row.clear();
        }
    }
    s
}
