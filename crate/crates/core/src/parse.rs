//! Small whitespace-insensitive cursor shared by the text formats.

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.rest().as_bytes();
        let mut len = 0;
        if matches!(bytes.first(), Some(b'-') | Some(b'+')) {
            len += 1;
        }
        let digits_start = len;
        while bytes.get(len).is_some_and(|b| b.is_ascii_digit()) {
            len += 1;
        }
        if len == digits_start {
            return Err(self.error("expected an integer"));
        }
        let text = &self.src[start..start + len];
        self.pos += len;
        text.parse::<BigInt>().map_err(|e| Error::parse(start, e.to_string()))
    }

    /// The next `n` characters, without skipping whitespace.
    pub(crate) fn raw(&mut self, n: usize) -> Option<&'a str> {
        let rest = self.rest();
        let end = rest.char_indices().nth(n).map_or(rest.len(), |(i, _)| i);
        if rest[..end].chars().count() < n {
            return None;
        }
        self.pos += end;
        Some(&rest[..end])
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.pos, message)
    }
}
