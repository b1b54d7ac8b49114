//! Located diagnostics and the code table.

use std::fmt;

use crate::ir::Span;

/// Diagnostic codes. The letter gives the severity, the first digit the
/// stage that raises it.
pub mod codes {
    // lexer
    pub const UNKNOWN_CHAR: &str = "E001";
    pub const UNTERMINATED_STRING: &str = "E002";
    pub const INT_TOO_LARGE: &str = "E003";
    pub const BAD_ESCAPE: &str = "E004";

    // parser
    pub const EXPECTED_IDENT: &str = "E101";
    pub const EXPECTED_TOKEN: &str = "E102";
    pub const EXPECTED_DECL: &str = "E103";
    pub const UNEXPECTED_EOF: &str = "E104";
    pub const UNKNOWN_SUBTYPE: &str = "E105";
    pub const UNKNOWN_SPACE_KIND: &str = "E106";
    pub const BAD_DIMENSION: &str = "E107";
    pub const TRAILING_INPUT: &str = "E108";
    pub const DUPLICATE_STATEMENT: &str = "E109";
    pub const BAD_KEYWORD_VALUE: &str = "E110";

    // name resolution
    pub const DUPLICATE_NAME: &str = "E201";
    pub const UNRESOLVED: &str = "E202";
    pub const CHILD_CYCLE: &str = "E203";
    pub const MISSING_STATEMENT: &str = "E204";
    pub const DUPLICATE_REFERENCE: &str = "E205";

    // types
    pub const MAPPING_SAME_KIND: &str = "E301";
    pub const TRANSFORM_MISMATCH: &str = "E302";
    pub const OUTPUT_MAPPING_TYPE: &str = "E303";
    pub const DIMENSION_MISMATCH: &str = "E304";
    pub const INPUT_MAPPING_TARGET: &str = "E305";

    // wiring
    pub const TRACKING_OPEN_LOOP: &str = "E401";
    pub const EMPTY_SEQUENCER: &str = "E402";
    pub const SHARED_MODULE: &str = "E403";
    pub const CHILDREN_NOT_SEQUENCER: &str = "E404";
    pub const TRACKING_NO_FEEDBACK: &str = "E405";
    pub const CLOSED_LOOP_NO_INPUT: &str = "E406";
    pub const ONLINE_NO_LEARNING_INPUT: &str = "E407";
    pub const UNUSED_LEARNING_INPUTS: &str = "W408";
    pub const INCOMPLETE_LEARNING: &str = "W409";

    // component text format
    pub const PORT_TYPE_MISMATCH: &str = "E501";
    pub const CCA_SYNTAX: &str = "E502";
    pub const CCA_UNKNOWN_ENDPOINT: &str = "E503";
    pub const CCA_DUPLICATE: &str = "E504";
    pub const CCA_BAD_VALUE: &str = "E505";
    pub const CCA_HEADER: &str = "E506";
    pub const STALE_REFINEMENT: &str = "W510";

    // graph text format
    pub const DANGLING_EDGE: &str = "E601";
    pub const GRAPH_SYNTAX: &str = "E602";
    pub const GRAPH_DUPLICATE: &str = "E603";
    pub const GRAPH_MEMBER: &str = "E604";
    pub const GRAPH_BAD_VALUE: &str = "E605";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl Severity {
    pub fn label(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub message: String,
    pub span: Span,
}

impl Diagnostic {
    pub fn error(code: &'static str, span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            code,
            message: message.into(),
            span,
        }
    }

    pub fn warning(code: &'static str, span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            code,
            message: message.into(),
            span,
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    /// `file:line:col: error[E301]: message`, or `file: ...` when the
    /// diagnostic has no source position.
    pub fn render(&self, file: &str) -> String {
        if self.span.is_synthetic() {
            return format!(
                "{file}: {}[{}]: {}",
                self.severity.label(),
                self.code,
                self.message
            );
        }
        format!(
            "{file}:{}:{}: {}[{}]: {}",
            self.span.start_line,
            self.span.start_col,
            self.severity.label(),
            self.code,
            self.message
        )
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {}[{}]: {}",
            self.span.start_line,
            self.span.start_col,
            self.severity.label(),
            self.code,
            self.message
        )
    }
}

pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(Diagnostic::is_error)
}

/// Stable sort by start position.
pub fn sort_by_position(diags: &mut [Diagnostic]) {
    diags.sort_by_key(|d| (d.span.start_line, d.span.start_col));
}
