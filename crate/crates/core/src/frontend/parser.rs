use super::lexer::{tokenize, Keyword, Token, TokenKind};
use crate::diag::{codes, has_errors, Diagnostic};
use crate::ir::{
    AdaptiveComponentDecl, AdaptiveModuleDecl, ComponentSubtype, CriterionDecl, CriterionKind,
    DynamicalSystem, Ident, Learner, LearningMode, LoopMode, MappingDecl, MappingKind,
    ShapingParam, SpaceDecl, SpaceKind, SpaceType, Span, SystemModel, TransformKind,
    TransformationDecl,
};

/// The error has already been recorded; the caller should resynchronize.
struct Abort;

type PResult<T> = Result<T, Abort>;

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    depth: u32,
    diags: Vec<Diagnostic>,
    eof: Span,
}

/// Parses one `system` from source text. Returns `None` when any error was
/// reported; syntax errors are recovered from at declaration boundaries so
/// that one run reports as many as possible.
pub fn parse_system(text: &str) -> (Option<SystemModel>, Vec<Diagnostic>) {
    let (tokens, lex_diags) = tokenize(text);
    let eof = end_of_text(text);
    let mut p = Parser {
        tokens,
        pos: 0,
        depth: 0,
        diags: lex_diags,
        eof,
    };
    let model = p.system().ok();
    let diags = p.diags;
    if has_errors(&diags) {
        (None, diags)
    } else {
        (model, diags)
    }
}

fn end_of_text(text: &str) -> Span {
    let mut line = 1;
    let mut col = 1;
    for c in text.chars() {
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    Span::new(line, col, line, col)
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn prev_span(&self) -> Span {
        self.pos
            .checked_sub(1)
            .and_then(|i| self.tokens.get(i))
            .map_or(self.eof, |t| t.span)
    }

    fn error(&mut self, code: &'static str, span: Span, message: String) -> Abort {
        self.diags.push(Diagnostic::error(code, span, message));
        Abort
    }

    /// Reports that something else was expected at the current token.
    fn unexpected(&mut self, code: &'static str, what: &str) -> Abort {
        match self.peek() {
            Some(t) => {
                let msg = format!("expected {what}, found {}", t.kind);
                let span = t.span;
                self.error(code, span, msg)
            }
            None => {
                let span = self.eof;
                self.error(
                    codes::UNEXPECTED_EOF,
                    span,
                    format!("expected {what}, found end of input"),
                )
            }
        }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek_kind() == Some(kind) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> PResult<Span> {
        if self.eat(&kind) {
            Ok(self.prev_span())
        } else {
            Err(self.unexpected(codes::EXPECTED_TOKEN, &kind.to_string()))
        }
    }

    fn eat_keyword(&mut self, kw: Keyword) -> bool {
        self.eat(&TokenKind::Keyword(kw))
    }

    fn expect_keyword(&mut self, kw: Keyword) -> PResult<Span> {
        self.expect(TokenKind::Keyword(kw))
    }

    fn ident(&mut self) -> PResult<Ident> {
        match self.peek() {
            Some(Token {
                kind: TokenKind::Ident(name),
                span,
            }) => {
                let id = Ident::spanned(name.clone(), *span);
                self.bump();
                Ok(id)
            }
            _ => Err(self.unexpected(codes::EXPECTED_IDENT, "identifier")),
        }
    }

    /// A contextual word such as `from` that is lexed as an identifier.
    fn expect_word(&mut self, word: &str) -> PResult<Span> {
        match self.peek_kind() {
            Some(TokenKind::Ident(w)) if w == word => {
                self.bump();
                Ok(self.prev_span())
            }
            _ => Err(self.unexpected(codes::EXPECTED_TOKEN, &format!("`{word}`"))),
        }
    }

    fn at_ident(&self) -> bool {
        matches!(self.peek_kind(), Some(TokenKind::Ident(_)))
    }

    fn string(&mut self) -> Option<String> {
        match self.peek_kind() {
            Some(TokenKind::Str(s)) => {
                let s = s.clone();
                self.bump();
                Some(s)
            }
            _ => None,
        }
    }

    fn open_block(&mut self) -> PResult<()> {
        self.expect(TokenKind::LBrace)?;
        self.depth += 1;
        Ok(())
    }

    fn close_block(&mut self) {
        self.bump();
        self.depth -= 1;
    }

    /// Skips ahead to the next declaration keyword, or to the `}` that closes
    /// the system body.
    fn recover(&mut self) {
        let mut depth = self.depth;
        while let Some(t) = self.peek() {
            match &t.kind {
                TokenKind::Keyword(k) if k.starts_declaration() => break,
                TokenKind::RBrace if depth == 0 => break,
                TokenKind::RBrace => depth -= 1,
                TokenKind::LBrace => depth += 1,
                _ => {}
            }
            self.bump();
        }
        self.depth = 0;
    }

    fn duplicate(&mut self, span: Span, what: &str) {
        self.diags.push(Diagnostic::error(
            codes::DUPLICATE_STATEMENT,
            span,
            format!("duplicate `{what}` statement"),
        ));
    }

    fn system(&mut self) -> PResult<SystemModel> {
        self.expect_keyword(Keyword::System)?;
        let name = self.ident()?;
        self.expect(TokenKind::LBrace)?;
        let mut model = SystemModel {
            name,
            ..SystemModel::new("")
        };

        loop {
            let Some(tok) = self.peek() else {
                let span = self.eof;
                return Err(self.error(
                    codes::UNEXPECTED_EOF,
                    span,
                    "expected `}` to close the system, found end of input".into(),
                ));
            };
            let res = match tok.kind {
                TokenKind::RBrace => {
                    self.bump();
                    break;
                }
                TokenKind::Keyword(Keyword::Space) => self.space().map(|d| model.spaces.push(d)),
                TokenKind::Keyword(Keyword::Mapping) => {
                    self.mapping().map(|d| model.mappings.push(d))
                }
                TokenKind::Keyword(Keyword::Transformation) => {
                    self.transformation().map(|d| model.transformations.push(d))
                }
                TokenKind::Keyword(Keyword::Adaptive) => self.adaptive(&mut model),
                _ => {
                    let a = self.unexpected(codes::EXPECTED_DECL, "declaration");
                    self.bump();
                    Err(a)
                }
            };
            if res.is_err() {
                self.recover();
            }
        }

        if let Some(t) = self.peek() {
            let span = t.span;
            self.diags.push(Diagnostic::error(
                codes::TRAILING_INPUT,
                span,
                "unexpected input after the end of the system".to_string(),
            ));
        }
        Ok(model)
    }

    fn space(&mut self) -> PResult<SpaceDecl> {
        let start = self.expect_keyword(Keyword::Space)?;
        let name = self.ident()?;
        self.expect(TokenKind::Colon)?;
        let kind_id = self.ident()?;
        let Some(kind) = SpaceKind::from_name(&kind_id.name) else {
            return Err(self.error(
                codes::UNKNOWN_SPACE_KIND,
                kind_id.span,
                format!("unknown space type kind `{}`", kind_id.name),
            ));
        };
        self.expect(TokenKind::LParen)?;
        let (dimension, dim_span) = match self.peek() {
            Some(Token {
                kind: TokenKind::Int(n),
                span,
            }) => (*n, *span),
            _ => return Err(self.unexpected(codes::EXPECTED_TOKEN, "dimension")),
        };
        self.bump();
        self.expect(TokenKind::RParen)?;
        let frame = if self.eat(&TokenKind::At) {
            Some(self.ident()?)
        } else {
            None
        };
        let ty = SpaceType::new(kind, dimension, frame.as_ref().map(Ident::as_str))
            .map_err(|e| self.error(codes::BAD_DIMENSION, dim_span, e.to_string()))?;
        let description = self.string();
        Ok(SpaceDecl {
            name,
            ty,
            description,
            span: start.to(self.prev_span()),
        })
    }

    fn endpoints(&mut self) -> PResult<(Ident, String, Ident, Ident)> {
        let name = self.ident()?;
        self.expect(TokenKind::Colon)?;
        let kind = self.ident()?.name;
        self.expect_word("from")?;
        let from = self.ident()?;
        self.expect_word("to")?;
        let to = self.ident()?;
        Ok((name, kind, from, to))
    }

    fn mapping(&mut self) -> PResult<MappingDecl> {
        let start = self.expect_keyword(Keyword::Mapping)?;
        let (name, kind, from, to) = self.endpoints()?;
        Ok(MappingDecl {
            name,
            kind: MappingKind::from_name(&kind),
            from,
            to,
            span: start.to(self.prev_span()),
        })
    }

    fn transformation(&mut self) -> PResult<TransformationDecl> {
        let start = self.expect_keyword(Keyword::Transformation)?;
        let (name, kind, from, to) = self.endpoints()?;
        Ok(TransformationDecl {
            name,
            kind: TransformKind::from_name(&kind),
            from,
            to,
            span: start.to(self.prev_span()),
        })
    }

    fn adaptive(&mut self, model: &mut SystemModel) -> PResult<()> {
        let start = self.expect_keyword(Keyword::Adaptive)?;
        if self.eat_keyword(Keyword::Module) {
            let m = self.module(start)?;
            model.modules.push(m);
            Ok(())
        } else if self.eat_keyword(Keyword::Component) {
            let c = self.component(start)?;
            model.components.push(c);
            Ok(())
        } else {
            Err(self.unexpected(codes::EXPECTED_TOKEN, "`module` or `component`"))
        }
    }

    fn idents_plus(&mut self) -> PResult<Vec<Ident>> {
        let mut out = vec![self.ident()?];
        while self.at_ident() {
            out.push(self.ident()?);
        }
        Ok(out)
    }

    fn module(&mut self, start: Span) -> PResult<AdaptiveModuleDecl> {
        let name = self.ident()?;
        self.open_block()?;
        let mut m = AdaptiveModuleDecl::new("");
        m.name = name;
        let mut seen_mode = false;

        loop {
            let Some(tok) = self.peek().cloned() else {
                return Err(self.unexpected(codes::EXPECTED_TOKEN, "`}`"));
            };
            match tok.kind {
                TokenKind::RBrace => {
                    self.close_block();
                    break;
                }
                TokenKind::Keyword(Keyword::DynamicalSystem) => {
                    self.bump();
                    let ds = self.ident()?;
                    if m.dynamical_system.is_some() {
                        self.duplicate(tok.span, "dynamical_system");
                    }
                    m.dynamical_system = Some(DynamicalSystem::from_name(&ds.name));
                }
                TokenKind::Keyword(Keyword::Learner) => {
                    self.bump();
                    let l = self.ident()?;
                    if m.learner.is_some() {
                        self.duplicate(tok.span, "learner");
                    }
                    m.learner = Some(Learner::from_name(&l.name));
                }
                TokenKind::Keyword(Keyword::Mode) => {
                    self.bump();
                    let loop_id = self.ident()?;
                    let Some(loop_mode) = LoopMode::from_keyword(&loop_id.name) else {
                        return Err(self.error(
                            codes::BAD_KEYWORD_VALUE,
                            loop_id.span,
                            format!(
                                "expected `closed_loop` or `open_loop`, found `{}`",
                                loop_id.name
                            ),
                        ));
                    };
                    let learning = if self.eat(&TokenKind::Comma) {
                        let l = self.ident()?;
                        match LearningMode::from_keyword(&l.name) {
                            Some(mode) => Some(mode),
                            None => {
                                return Err(self.error(
                                    codes::BAD_KEYWORD_VALUE,
                                    l.span,
                                    format!(
                                        "expected `online`, `offline` or `both`, found `{}`",
                                        l.name
                                    ),
                                ))
                            }
                        }
                    } else {
                        None
                    };
                    if seen_mode {
                        self.duplicate(tok.span, "mode");
                    }
                    seen_mode = true;
                    m.loop_mode = loop_mode;
                    m.learning_mode = learning;
                }
                TokenKind::Keyword(Keyword::In) => {
                    self.bump();
                    if self.eat_keyword(Keyword::Learning) {
                        let refs = self.idents_plus()?;
                        m.learning_inputs.extend(refs);
                    } else {
                        self.expect_word("execution")?;
                        let refs = self.idents_plus()?;
                        m.execution_inputs.extend(refs);
                    }
                }
                TokenKind::Keyword(Keyword::Param) => {
                    self.bump();
                    let p = self.ident()?;
                    let Some(param) = ShapingParam::from_keyword(&p.name) else {
                        return Err(self.error(
                            codes::BAD_KEYWORD_VALUE,
                            p.span,
                            format!("expected `shape`, `speed` or `goal`, found `{}`", p.name),
                        ));
                    };
                    let space = self.ident()?;
                    if m.shaping.insert(param, space).is_some() {
                        self.duplicate(tok.span, &format!("param {}", param.keyword()));
                    }
                }
                TokenKind::Keyword(Keyword::Out) => {
                    self.bump();
                    let o = self.ident()?;
                    if m.output.is_some() {
                        self.duplicate(tok.span, "out");
                    }
                    m.output = Some(o);
                }
                _ => return Err(self.unexpected(codes::EXPECTED_TOKEN, "module statement")),
            }
        }
        m.span = start.to(self.prev_span());
        Ok(m)
    }

    fn component(&mut self, start: Span) -> PResult<AdaptiveComponentDecl> {
        let name = self.ident()?;
        self.expect(TokenKind::Colon)?;
        let sub = self.ident()?;
        let Some(subtype) = ComponentSubtype::from_keyword(&sub.name) else {
            return Err(self.error(
                codes::UNKNOWN_SUBTYPE,
                sub.span,
                format!("unknown component subtype `{}`", sub.name),
            ));
        };
        self.open_block()?;
        let mut c = AdaptiveComponentDecl::new("", subtype);
        c.name = name;
        let mut seen_children = false;

        loop {
            let Some(tok) = self.peek().cloned() else {
                return Err(self.unexpected(codes::EXPECTED_TOKEN, "`}`"));
            };
            match tok.kind {
                TokenKind::RBrace => {
                    self.close_block();
                    break;
                }
                TokenKind::Keyword(Keyword::Module) => {
                    self.bump();
                    let m = self.ident()?;
                    if c.module.is_some() {
                        self.duplicate(tok.span, "module");
                    }
                    c.module = Some(m);
                }
                TokenKind::Keyword(Keyword::In) => {
                    self.bump();
                    self.expect_keyword(Keyword::Via)?;
                    let m = self.ident()?;
                    c.input_mappings.push(m);
                }
                TokenKind::Keyword(Keyword::Out) => {
                    self.bump();
                    self.expect_keyword(Keyword::Via)?;
                    let m = self.ident()?;
                    if c.output_mapping.is_some() {
                        self.duplicate(tok.span, "out via");
                    }
                    c.output_mapping = Some(m);
                }
                TokenKind::Keyword(Keyword::Criterion) => {
                    self.bump();
                    let k = self.ident()?;
                    let description = self.string();
                    if c.criterion.is_some() {
                        self.duplicate(tok.span, "criterion");
                    }
                    c.criterion = Some(CriterionDecl {
                        kind: CriterionKind::from_name(&k.name),
                        description,
                        span: tok.span.to(self.prev_span()),
                    });
                }
                TokenKind::Keyword(Keyword::Children) => {
                    self.bump();
                    let mut children = vec![self.ident()?];
                    while self.eat(&TokenKind::Comma) {
                        children.push(self.ident()?);
                    }
                    if seen_children {
                        self.duplicate(tok.span, "children");
                    }
                    seen_children = true;
                    c.children = children;
                }
                _ => return Err(self.unexpected(codes::EXPECTED_TOKEN, "component statement")),
            }
        }
        c.span = start.to(self.prev_span());
        Ok(c)
    }
}
