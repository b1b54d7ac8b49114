use std::fmt;

use crate::diag::{codes, Diagnostic};
use crate::ir::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Keyword {
    System,
    Space,
    Mapping,
    Transformation,
    Adaptive,
    Module,
    Component,
    DynamicalSystem,
    Learner,
    Mode,
    In,
    Learning,
    Param,
    Out,
    Criterion,
    Children,
    Via,
}

impl Keyword {
    const ALL: [Keyword; 17] = [
        Keyword::System,
        Keyword::Space,
        Keyword::Mapping,
        Keyword::Transformation,
        Keyword::Adaptive,
        Keyword::Module,
        Keyword::Component,
        Keyword::DynamicalSystem,
        Keyword::Learner,
        Keyword::Mode,
        Keyword::In,
        Keyword::Learning,
        Keyword::Param,
        Keyword::Out,
        Keyword::Criterion,
        Keyword::Children,
        Keyword::Via,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Keyword::System => "system",
            Keyword::Space => "space",
            Keyword::Mapping => "mapping",
            Keyword::Transformation => "transformation",
            Keyword::Adaptive => "adaptive",
            Keyword::Module => "module",
            Keyword::Component => "component",
            Keyword::DynamicalSystem => "dynamical_system",
            Keyword::Learner => "learner",
            Keyword::Mode => "mode",
            Keyword::In => "in",
            Keyword::Learning => "learning",
            Keyword::Param => "param",
            Keyword::Out => "out",
            Keyword::Criterion => "criterion",
            Keyword::Children => "children",
            Keyword::Via => "via",
        }
    }

    pub fn lookup(s: &str) -> Option<Keyword> {
        Keyword::ALL.into_iter().find(|k| k.as_str() == s)
    }

    /// Keywords that begin a top-level declaration.
    pub fn starts_declaration(self) -> bool {
        matches!(
            self,
            Keyword::Space | Keyword::Mapping | Keyword::Transformation | Keyword::Adaptive
        )
    }
}

/// Reserved words may not be used as names.
pub fn is_keyword(s: &str) -> bool {
    Keyword::lookup(s).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Keyword(Keyword),
    Ident(String),
    Int(u64),
    Str(String),
    Colon,
    Comma,
    At,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Keyword(k) => write!(f, "`{}`", k.as_str()),
            TokenKind::Ident(s) => write!(f, "identifier `{s}`"),
            TokenKind::Int(n) => write!(f, "integer `{n}`"),
            TokenKind::Str(_) => f.write_str("string literal"),
            TokenKind::Colon => f.write_str("`:`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::At => f.write_str("`@`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::LBrace => f.write_str("`{`"),
            TokenKind::RBrace => f.write_str("`}`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn pos(&self) -> (u32, u32) {
        (self.line, self.col)
    }

    fn span_from(&self, start: (u32, u32)) -> Span {
        Span::new(start.0, start.1, self.line, self.col)
    }
}

/// Splits source text into tokens. Never fails: bad characters and malformed
/// literals are reported and skipped.
pub fn tokenize(text: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let mut cur = Cursor {
        chars: text.chars().peekable(),
        line: 1,
        col: 1,
    };
    let mut tokens = Vec::new();
    let mut diags = Vec::new();

    while let Some(c) = cur.peek() {
        let start = cur.pos();
        let single = |kind| Some(kind);
        let punct = match c {
            ':' => single(TokenKind::Colon),
            ',' => single(TokenKind::Comma),
            '@' => single(TokenKind::At),
            '(' => single(TokenKind::LParen),
            ')' => single(TokenKind::RParen),
            '{' => single(TokenKind::LBrace),
            '}' => single(TokenKind::RBrace),
            _ => None,
        };
        if let Some(kind) = punct {
            cur.bump();
            tokens.push(Token {
                kind,
                span: cur.span_from(start),
            });
            continue;
        }

        if c.is_whitespace() {
            cur.bump();
        } else if c == '/' {
            cur.bump();
            if cur.peek() == Some('/') {
                while cur.peek().is_some_and(|c| c != '\n') {
                    cur.bump();
                }
            } else {
                diags.push(Diagnostic::error(
                    codes::UNKNOWN_CHAR,
                    cur.span_from(start),
                    "unexpected character `/`",
                ));
            }
        } else if c.is_ascii_alphabetic() {
            let mut word = String::new();
            while let Some(c) = cur
                .peek()
                .filter(|c| c.is_ascii_alphanumeric() || *c == '_')
            {
                word.push(c);
                cur.bump();
            }
            let kind = match Keyword::lookup(&word) {
                Some(k) => TokenKind::Keyword(k),
                None => TokenKind::Ident(word),
            };
            tokens.push(Token {
                kind,
                span: cur.span_from(start),
            });
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(c) = cur.peek().filter(char::is_ascii_digit) {
                digits.push(c);
                cur.bump();
            }
            let span = cur.span_from(start);
            match digits.parse::<u64>() {
                Ok(n) => tokens.push(Token {
                    kind: TokenKind::Int(n),
                    span,
                }),
                Err(_) => diags.push(Diagnostic::error(
                    codes::INT_TOO_LARGE,
                    span,
                    format!("integer literal `{digits}` is too large"),
                )),
            }
        } else if c == '"' {
            cur.bump();
            let mut value = String::new();
            let mut closed = false;
            while let Some(c) = cur.peek() {
                if c == '\n' {
                    break;
                }
                let at = cur.pos();
                cur.bump();
                match c {
                    '"' => {
                        closed = true;
                        break;
                    }
                    '\\' => match cur.peek() {
                        Some(e @ ('"' | '\\')) => {
                            cur.bump();
                            value.push(e);
                        }
                        Some('\n') | None => {}
                        Some(e) => {
                            cur.bump();
                            diags.push(Diagnostic::error(
                                codes::BAD_ESCAPE,
                                cur.span_from(at),
                                format!("unknown escape `\\{e}`"),
                            ));
                        }
                    },
                    c => value.push(c),
                }
            }
            let span = cur.span_from(start);
            if closed {
                tokens.push(Token {
                    kind: TokenKind::Str(value),
                    span,
                });
            } else {
                diags.push(Diagnostic::error(
                    codes::UNTERMINATED_STRING,
                    span,
                    "unterminated string literal",
                ));
            }
        } else {
            cur.bump();
            diags.push(Diagnostic::error(
                codes::UNKNOWN_CHAR,
                cur.span_from(start),
                format!("unexpected character `{c}`"),
            ));
        }
    }
    (tokens, diags)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        let (tokens, diags) = tokenize(text);
        assert!(diags.is_empty(), "{diags:?}");
        tokens.into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn space_declaration() {
        assert_eq!(
            kinds("space q : JointAngles(7)"),
            vec![
                TokenKind::Keyword(Keyword::Space),
                TokenKind::Ident("q".into()),
                TokenKind::Colon,
                TokenKind::Ident("JointAngles".into()),
                TokenKind::LParen,
                TokenKind::Int(7),
                TokenKind::RParen,
            ]
        );
    }

    #[test]
    fn empty_input() {
        assert_eq!(tokenize(""), (vec![], vec![]));
    }

    #[test]
    fn unknown_character_is_skipped() {
        // s p a c e _ ¤ _ x
        // 1 2 3 4 5 6 7 8 9
        let (tokens, diags) = tokenize("space ¤ x");
        assert_eq!(tokens.len(), 2);
        assert_eq!(tokens[0].span, Span::new(1, 1, 1, 6));
        assert_eq!(tokens[1].kind, TokenKind::Ident("x".into()));
        assert_eq!(tokens[1].span, Span::new(1, 9, 1, 10));
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, "E001");
        assert_eq!(diags[0].span, Span::new(1, 7, 1, 8));
    }

    #[test]
    fn comments_and_lines() {
        let (tokens, _) = tokenize("// header\n  space // trailing\n}");
        assert_eq!(tokens.len(), 2);
        assert_eq!(tokens[0].span, Span::new(2, 3, 2, 8));
        assert_eq!(tokens[1].span, Span::new(3, 1, 3, 2));
    }

    #[test]
    fn strings_and_escapes() {
        assert_eq!(
            kinds(r#""a \"b\" \\ c""#),
            vec![TokenKind::Str(r#"a "b" \ c"#.into())]
        );
        let (tokens, diags) = tokenize("\"open\nspace");
        assert_eq!(diags[0].code, "E002");
        assert_eq!(tokens.len(), 1);
        let (_, diags) = tokenize(r#""\n""#);
        assert_eq!(diags[0].code, "E004");
    }

    #[test]
    fn oversized_integer() {
        let (tokens, diags) = tokenize("99999999999999999999999");
        assert!(tokens.is_empty());
        assert_eq!(diags[0].code, "E003");
    }

    #[test]
    fn contextual_words_are_identifiers() {
        assert_eq!(
            kinds("from to execution speed"),
            ["from", "to", "execution", "speed"]
                .map(|s| TokenKind::Ident(s.into()))
                .to_vec()
        );
    }
}
