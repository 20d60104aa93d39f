use super::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Number(String),
    Caret,
    Bang,
    Amp,
    Pipe,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    At,
    Dot,
    Lt,
    Semi,
    Eq,
    Plus,
    Minus,
    EmptyClause,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::Caret => "`^`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DoubleArrow => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::At => "`@`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::EmptyClause => "`□`".into(),
        }
    }
}

/// A token with its 1-based column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub column: usize,
}

fn ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '⊥' || c == '⊤'
}

/// Tokenizes one line. `offset` is the column of the first character of
/// `text` within its line, minus one.
pub(crate) fn lex(text: &str, line: usize, offset: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let column = offset + k + 1;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let (tok, len) = match c {
            '^' => (Tok::Caret, 1),
            '!' => (Tok::Bang, 1),
            '&' => (Tok::Amp, 1),
            '|' => (Tok::Pipe, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '@' => (Tok::At, 1),
            '.' => (Tok::Dot, 1),
            ';' => (Tok::Semi, 1),
            '=' => (Tok::Eq, 1),
            '+' => (Tok::Plus, 1),
            '□' => (Tok::EmptyClause, 1),
            '-' if chars.get(k + 1) == Some(&'>') => (Tok::Arrow, 2),
            '-' => (Tok::Minus, 1),
            '<' if chars.get(k + 1) == Some(&'-') && chars.get(k + 2) == Some(&'>') => (Tok::DoubleArrow, 3),
            '<' => (Tok::Lt, 1),
            c if c.is_ascii_digit() => {
                let len = chars[k..].iter().take_while(|c| c.is_ascii_digit()).count();
                (Tok::Number(chars[k..k + len].iter().collect()), len)
            }
            c if ident_char(c) => {
                let len = chars[k..].iter().take_while(|&&c| ident_char(c)).count();
                (Tok::Ident(chars[k..k + len].iter().collect()), len)
            }
            other => {
                return Err(ParseError::new(
                    line,
                    column,
                    ParseErrorKind::Syntax,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        out.push(Spanned { tok, column });
        k += len;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s, 1, 0).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn operators() {
        assert_eq!(
            toks("A^VTrue <-> !B^⊤ -> (C^W)"),
            vec![
                Tok::Ident("A".into()),
                Tok::Caret,
                Tok::Ident("VTrue".into()),
                Tok::DoubleArrow,
                Tok::Bang,
                Tok::Ident("B".into()),
                Tok::Caret,
                Tok::Ident("⊤".into()),
                Tok::Arrow,
                Tok::LParen,
                Tok::Ident("C".into()),
                Tok::Caret,
                Tok::Ident("W".into()),
                Tok::RParen,
            ]
        );
        assert_eq!(
            toks("H- = P < L"),
            vec![
                Tok::Ident("H".into()),
                Tok::Minus,
                Tok::Eq,
                Tok::Ident("P".into()),
                Tok::Lt,
                Tok::Ident("L".into()),
            ]
        );
    }

    #[test]
    fn columns() {
        let t = lex("  A ^ B", 3, 10).unwrap();
        assert_eq!(t.iter().map(|s| s.column).collect::<Vec<_>>(), vec![13, 15, 17]);
        let e = lex("A $", 3, 0).unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
    }
}
