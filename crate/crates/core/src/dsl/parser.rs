//! Two-stage parser: a generic call tree is read first (syntax errors),
//! then typed against the grammar (unknown names, arity, misplaced
//! products).

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ast::{ConstructionExpr, Span, SurfaceExpr};
use super::{family_arity, DslError, DslErrorKind};
use crate::catalog::SurfaceFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Int(u64),
    LParen,
    RParen,
    Comma,
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next_token(&mut self) -> Result<(Tok<'a>, Span), DslError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = bytes.get(start) else {
            return Ok((Tok::End, Span::new(start, start)));
        };
        let single = |tok| (tok, Span::new(start, start + 1));
        let out = match c {
            b'(' => single(Tok::LParen),
            b')' => single(Tok::RParen),
            b',' => single(Tok::Comma),
            b'0'..=b'9' => {
                let end = scan(bytes, start, |b| b.is_ascii_digit());
                let span = Span::new(start, end);
                let value = self.src[start..end]
                    .parse::<u64>()
                    .map_err(|_| DslError::new(DslErrorKind::Syntax("integer literal out of range".into()), span))?;
                (Tok::Int(value), span)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let end = scan(bytes, start, |b| b.is_ascii_alphanumeric() || b == b'_');
                (Tok::Ident(&self.src[start..end]), Span::new(start, end))
            }
            _ => {
                let ch = self.src[start..].chars().next().unwrap_or('?');
                let span = Span::new(start, start + ch.len_utf8());
                return Err(DslError::new(DslErrorKind::Syntax(format!("unexpected character {ch:?}")), span));
            }
        };
        self.pos = out.1.end;
        Ok(out)
    }
}

fn scan(bytes: &[u8], start: usize, pred: impl Fn(u8) -> bool) -> usize {
    let mut end = start;
    while end < bytes.len() && pred(bytes[end]) {
        end += 1;
    }
    end
}

/// `INT` or `IDENT [ "(" raw { "," raw } ")" ]`.
#[derive(Debug)]
enum Raw<'a> {
    Int(u64, Span),
    Call { name: &'a str, name_span: Span, args: Option<Vec<Raw<'a>>>, span: Span },
}

impl Raw<'_> {
    fn span(&self) -> Span {
        match self {
            Raw::Int(_, span) | Raw::Call { span, .. } => *span,
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: (Tok<'a>, Span),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, DslError> {
        let mut lexer = Lexer { src, pos: 0 };
        let peeked = lexer.next_token()?;
        Ok(Parser { lexer, peeked })
    }

    fn bump(&mut self) -> Result<(Tok<'a>, Span), DslError> {
        let next = self.lexer.next_token()?;
        Ok(core::mem::replace(&mut self.peeked, next))
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        let (tok, span) = self.peeked;
        let found = match tok {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(v) => format!("`{v}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        };
        DslError::new(DslErrorKind::Syntax(format!("expected {wanted}, found {found}")), span)
    }

    fn raw(&mut self) -> Result<Raw<'a>, DslError> {
        match self.peeked {
            (Tok::Int(v), span) => {
                self.bump()?;
                Ok(Raw::Int(v, span))
            }
            (Tok::Ident(name), name_span) => {
                self.bump()?;
                if self.peeked.0 != Tok::LParen {
                    return Ok(Raw::Call { name, name_span, args: None, span: name_span });
                }
                self.bump()?;
                let mut args = Vec::new();
                loop {
                    args.push(self.raw()?);
                    match self.peeked.0 {
                        Tok::Comma => {
                            self.bump()?;
                        }
                        Tok::RParen => {
                            let (_, close) = self.bump()?;
                            return Ok(Raw::Call { name, name_span, args: Some(args), span: name_span.to(close) });
                        }
                        _ => return Err(self.unexpected("`,` or `)`")),
                    }
                }
            }
            _ => Err(self.unexpected("a name or an integer")),
        }
    }
}

/// Parses a construction expression.
pub fn parse(text: &str) -> Result<ConstructionExpr, DslError> {
    let mut parser = Parser::new(text)?;
    let raw = parser.raw()?;
    if parser.peeked.0 != Tok::End {
        return Err(parser.unexpected("end of input"));
    }
    expr(&raw)
}

fn type_error(msg: impl Into<String>, span: Span) -> DslError {
    DslError::new(DslErrorKind::Type(msg.into()), span)
}

fn arity(name: &str, expected: usize, found: usize, span: Span) -> DslError {
    DslError::new(DslErrorKind::Arity { name: name.to_owned(), expected, found }, span)
}

fn args_of<'r, 'a>(
    name: &str,
    args: &'r Option<Vec<Raw<'a>>>,
    expected: usize,
    span: Span,
) -> Result<&'r [Raw<'a>], DslError> {
    let found = args.as_ref().map_or(0, Vec::len);
    if found != expected {
        return Err(arity(name, expected, found, span));
    }
    Ok(args.as_deref().unwrap_or(&[]))
}

fn int(raw: &Raw<'_>) -> Result<u64, DslError> {
    match raw {
        Raw::Int(v, _) => Ok(*v),
        Raw::Call { span, .. } => Err(type_error("expected an integer", *span)),
    }
}

fn expr(raw: &Raw<'_>) -> Result<ConstructionExpr, DslError> {
    match raw {
        Raw::Call { name: "product", args, span, .. } => {
            let args = args_of("product", args, 2, *span)?;
            let surface = surface(&args[0])?;
            let genus = match &args[1] {
                Raw::Call { name: "curve", args: curve_args, span: curve_span, .. } => {
                    int(&args_of("curve", curve_args, 1, *curve_span)?[0])?
                }
                other => return Err(type_error("second argument of product must be curve(g)", other.span())),
            };
            Ok(ConstructionExpr::Product { surface, genus, span: *span })
        }
        other => surface(other).map(ConstructionExpr::Surface),
    }
}

fn surface(raw: &Raw<'_>) -> Result<SurfaceExpr, DslError> {
    let (name, name_span, args, span) = match raw {
        Raw::Int(_, span) => return Err(type_error("expected a surface, found an integer", *span)),
        Raw::Call { name, name_span, args, span } => (*name, *name_span, args, *span),
    };
    match name {
        "product" => Err(type_error("product must be the outermost construction", span)),
        "curve" => Err(type_error("curve(g) is only valid as the second argument of product", span)),
        "blowup" => {
            let a = args_of(name, args, 2, span)?;
            Ok(SurfaceExpr::BlowUp { child: Box::new(surface(&a[0])?), k: int(&a[1])?, span })
        }
        "logtransform" => {
            let a = args_of(name, args, 3, span)?;
            Ok(SurfaceExpr::LogTransform { child: Box::new(surface(&a[0])?), p: int(&a[1])?, q: int(&a[2])?, span })
        }
        _ => {
            let Some(expected) = family_arity(name) else {
                return Err(DslError::new(DslErrorKind::UnknownFamily(name.to_owned()), name_span));
            };
            let params = args_of(name, args, expected, span)?.iter().map(int).collect::<Result<Vec<_>, _>>()?;
            let family =
                SurfaceFamily::from_name(name, &params).ok_or_else(|| arity(name, expected, params.len(), span))?;
            Ok(SurfaceExpr::Family { family, span })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> DslErrorKind {
        parse(text).unwrap_err().kind
    }

    #[test]
    fn grammar_examples() {
        let e = parse("product(blowup(barlow, 3), curve(2))").unwrap();
        let want = ConstructionExpr::product(SurfaceExpr::blow_up(SurfaceExpr::family(SurfaceFamily::Barlow), 3), 2);
        assert!(e.same_structure(&want));
        assert_eq!(e.span(), Span::new(0, 36));

        let e = parse("logtransform(rational_elliptic, 2, 3)").unwrap();
        let want: ConstructionExpr =
            SurfaceExpr::log_transform(SurfaceExpr::family(SurfaceFamily::RationalElliptic), 2, 3).into();
        assert!(e.same_structure(&want));

        let e = parse("dolgachev(2,4)").unwrap();
        assert!(e.same_structure(&SurfaceExpr::family(SurfaceFamily::Dolgachev { p: 2, q: 4 }).into()));
    }

    #[test]
    fn product_must_be_outermost() {
        let err = parse("blowup(product(k3, curve(1)), 2)").unwrap_err();
        assert!(matches!(err.kind, DslErrorKind::Type(_)));
        assert_eq!(err.span, Span::new(7, 28));
    }

    #[test]
    fn spans_of_nested_nodes() {
        let ConstructionExpr::Surface(SurfaceExpr::BlowUp { child, span, .. }) = parse("blowup( cp2 , 8 )").unwrap()
        else {
            panic!()
        };
        assert_eq!(span, Span::new(0, 17));
        assert_eq!(child.span(), Span::new(8, 11));
    }

    #[test]
    fn error_kinds() {
        assert_eq!(kind("enriques"), DslErrorKind::UnknownFamily("enriques".into()));
        assert!(matches!(kind("dolgachev(2)"), DslErrorKind::Arity { expected: 2, found: 1, .. }));
        assert!(matches!(kind("dolgachev"), DslErrorKind::Arity { expected: 2, found: 0, .. }));
        assert!(matches!(kind("k3(1)"), DslErrorKind::Arity { expected: 0, found: 1, .. }));
        assert!(matches!(kind("blowup(k3)"), DslErrorKind::Arity { expected: 2, found: 1, .. }));
        assert!(matches!(kind("blowup(k3, 1, 2)"), DslErrorKind::Arity { expected: 2, found: 3, .. }));
        assert!(matches!(kind("blowup(3, k3)"), DslErrorKind::Type(_)));
        assert!(matches!(kind("curve(2)"), DslErrorKind::Type(_)));
        assert!(matches!(kind("product(k3, 2)"), DslErrorKind::Type(_)));
        assert!(matches!(kind("product(k3, curve(1, 2))"), DslErrorKind::Arity { .. }));
        assert!(matches!(kind("7"), DslErrorKind::Type(_)));
        assert!(matches!(kind("k3()"), DslErrorKind::Syntax(_)));
        assert!(matches!(kind("blowup(k3, 1"), DslErrorKind::Syntax(_)));
        assert!(matches!(kind("k3 k3"), DslErrorKind::Syntax(_)));
        assert!(matches!(kind(""), DslErrorKind::Syntax(_)));
        assert!(matches!(kind("blowup(k3, -1)"), DslErrorKind::Syntax(_)));
        assert!(matches!(kind("blowup(k3, 1_000)"), DslErrorKind::Syntax(_)));
        assert!(matches!(kind("blowup(k3, 99999999999999999999999)"), DslErrorKind::Syntax(_)));
        assert_eq!(kind("CP2"), DslErrorKind::UnknownFamily("CP2".into()));
    }

    #[test]
    fn non_ascii_error_span_is_a_char_boundary() {
        let text = "blowup(k3, é)";
        let err = parse(text).unwrap_err();
        assert_eq!(err.span, Span::new(11, 13));
        assert!(text.is_char_boundary(err.span.end));
    }
}
