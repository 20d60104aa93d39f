use super::lexer::{lex, Spanned, Tok};
use super::{Directives, Input, ParseError, ParseErrorKind, Problem};
use crate::algebra::{AlgebraError, Signature, Term};
use crate::engine::{MergeMode, ReliableClause, Strategy};
use crate::logic::{Atom, Clause, Formula, Literal};

struct Parser<'a> {
    sig: &'a Signature,
    toks: Vec<Spanned>,
    pos: usize,
    line: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn new(sig: &'a Signature, text: &str, line: usize, offset: usize) -> Result<Parser<'a>, ParseError> {
        Ok(Parser {
            sig,
            toks: lex(text, line, offset)?,
            pos: 0,
            line,
            end: offset + text.chars().count() + 1,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.column)
    }

    fn error(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column(), kind, message)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let found = self.peek().map_or("end of line".to_owned(), Tok::describe);
        self.error(ParseErrorKind::Syntax, format!("expected {expected}, found {found}"))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of line")),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let column = self.column();
        let text = self.ident("a truth term")?;
        self.sig.parse_term(&text).map_err(|e| term_error(self.line, column, e))
    }

    fn atom(name: &str, sig: &Signature) -> Atom {
        match sig.parse_term(name) {
            Ok(t) => Atom::Const(t),
            Err(_) => Atom::var(name),
        }
    }

    fn literal(&mut self) -> Result<Literal, ParseError> {
        let name = self.ident("an atom")?;
        self.expect(Tok::Caret)?;
        let label = self.term()?;
        Ok(Literal::new(Parser::atom(&name, self.sig), label))
    }

    /// `□`, nothing, or `lit | lit | ...`, up to (not including) `@` or `.`.
    fn clause_literals(&mut self) -> Result<Clause, ParseError> {
        if self.eat(&Tok::EmptyClause) {
            return Ok(Clause::empty());
        }
        if matches!(self.peek(), None | Some(Tok::Dot) | Some(Tok::At)) {
            return Ok(Clause::empty());
        }
        let mut lits = vec![self.literal()?];
        while self.eat(&Tok::Pipe) {
            lits.push(self.literal()?);
        }
        Ok(Clause::new(lits))
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.implication()?;
        while self.eat(&Tok::DoubleArrow) {
            f = Formula::iff(f, self.implication()?);
        }
        Ok(f)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let f = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            return Ok(Formula::implies(f, self.implication()?));
        }
        Ok(f)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunction()?;
        while self.eat(&Tok::Pipe) {
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.eat(&Tok::Amp) {
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::Bang) {
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::LParen) {
            let f = self.formula()?;
            self.expect(Tok::RParen)?;
            return Ok(f);
        }
        let column = self.column();
        let name = self.ident("a literal, a constant, `!` or `(`")?;
        if self.eat(&Tok::Caret) {
            let label = self.term()?;
            return Ok(Formula::Literal(Literal::new(Parser::atom(&name, self.sig), label)));
        }
        match self.sig.parse_term(&name) {
            Ok(t) => Ok(Formula::Constant(t)),
            Err(_) => Err(ParseError::new(
                self.line,
                self.column(),
                ParseErrorKind::Syntax,
                format!("expected `^` after atom `{name}` at column {column}"),
            )),
        }
    }
}

fn term_error(line: usize, column: usize, e: AlgebraError) -> ParseError {
    let kind = match e {
        AlgebraError::UnknownToken(_) => ParseErrorKind::UnknownHedge,
        AlgebraError::DepthExceeded { .. } => ParseErrorKind::DepthExceeded,
        AlgebraError::HedgedFixedPoint(_) => ParseErrorKind::HedgedFixedPoint,
        _ => ParseErrorKind::Syntax,
    };
    ParseError::new(line, column, kind, e.to_string())
}

/// Parses a formula in the problem-file syntax, e.g. `A^True -> !B^MFalse`.
pub fn parse_formula(sig: &Signature, text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(sig, text, 1, 0)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a clause such as `A^MFalse | B^False`, `□`, or the empty string.
/// A trailing `.` is accepted.
pub fn parse_clause(sig: &Signature, text: &str) -> Result<Clause, ParseError> {
    let mut p = Parser::new(sig, text, 1, 0)?;
    let c = p.clause_literals()?;
    p.eat(&Tok::Dot);
    p.finish()?;
    Ok(c)
}

struct Line<'t> {
    number: usize,
    keyword: &'t str,
    keyword_column: usize,
    body: &'t str,
    /// Column of the first body character, minus one.
    offset: usize,
}

fn split_lines(text: &str) -> Result<Vec<Line<'_>>, ParseError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let number = k + 1;
        let content = raw.split('%').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.chars().take_while(|c| c.is_whitespace()).count();
        let Some(colon) = content.find(':') else {
            return Err(ParseError::new(
                number,
                lead + 1,
                ParseErrorKind::Syntax,
                "expected `keyword:` at the start of the line",
            ));
        };
        out.push(Line {
            number,
            keyword: content[..colon].trim(),
            keyword_column: lead + 1,
            body: &content[colon + 1..],
            offset: content[..=colon].chars().count(),
        });
    }
    Ok(out)
}

fn parse_hedges(line: &Line) -> Result<(Vec<String>, Vec<String>), ParseError> {
    let sig = Signature::default();
    let mut p = Parser::new(&sig, line.body, line.number, line.offset)?;
    let mut positive: Option<Vec<String>> = None;
    let mut negative: Option<Vec<String>> = None;
    loop {
        let column = p.column();
        let head = p.ident("`H+` or `H-`")?;
        if head != "H" {
            return Err(ParseError::new(
                line.number,
                column,
                ParseErrorKind::Syntax,
                format!("expected `H+` or `H-`, found `{head}`"),
            ));
        }
        let slot = match p.bump() {
            Some(Tok::Plus) => &mut positive,
            Some(Tok::Minus) => &mut negative,
            _ => {
                p.pos -= 1;
                return Err(p.unexpected("`+` or `-`"));
            }
        };
        if slot.is_some() {
            return Err(ParseError::new(
                line.number,
                column,
                ParseErrorKind::Syntax,
                "hedge class declared twice",
            ));
        }
        p.expect(Tok::Eq)?;
        let mut names = Vec::new();
        if let Some(Tok::Ident(_)) = p.peek() {
            names.push(p.ident("a hedge name")?);
            while p.eat(&Tok::Lt) {
                names.push(p.ident("a hedge name")?);
            }
        }
        *slot = Some(names);
        if !p.eat(&Tok::Semi) {
            break;
        }
    }
    p.finish()?;
    Ok((positive.unwrap_or_default(), negative.unwrap_or_default()))
}

fn parse_maxdepth(line: &Line) -> Result<i64, ParseError> {
    let sig = Signature::default();
    let mut p = Parser::new(&sig, line.body, line.number, line.offset)?;
    let negative = p.eat(&Tok::Minus);
    let column = p.column();
    let Some(Tok::Number(n)) = p.bump() else {
        p.pos -= 1;
        return Err(p.unexpected("a number"));
    };
    p.finish()?;
    let n: i64 = n
        .parse()
        .map_err(|_| ParseError::new(line.number, column, ParseErrorKind::Syntax, "depth is too large"))?;
    Ok(if negative { -n } else { n })
}

fn parse_option(p: &mut Parser, directives: &mut Directives) -> Result<(), ParseError> {
    let key_column = p.column();
    let key = p.ident("an option name")?;
    p.expect(Tok::Eq)?;
    let value_column = p.column();
    let value = match p.bump() {
        Some(Tok::Ident(s)) | Some(Tok::Number(s)) => s,
        _ => {
            p.pos -= 1;
            return Err(p.unexpected("an option value"));
        }
    };
    p.eat(&Tok::Dot);
    p.finish()?;
    let bad = |msg: String| ParseError::new(p.line, value_column, ParseErrorKind::Syntax, msg);
    match key.as_str() {
        "merge_duplicates" => directives.merge = Some(value.parse::<MergeMode>().map_err(bad)?),
        "strategy" => directives.strategy = Some(value.parse::<Strategy>().map_err(bad)?),
        "max_steps" => match value.parse::<usize>() {
            Ok(n) if n > 0 => directives.max_steps = Some(n),
            _ => return Err(bad(format!("max_steps must be a positive integer, got `{value}`"))),
        },
        other => {
            return Err(ParseError::new(
                p.line,
                key_column,
                ParseErrorKind::Syntax,
                format!("unknown option `{other}`"),
            ))
        }
    }
    Ok(())
}

/// Parses a problem file.
///
/// The signature lines (`hedges:`, `maxdepth:`) may appear anywhere; they are
/// read before any term. Without a `hedges:` line the standard signature is
/// used.
pub fn parse_problem(text: &str) -> Result<Problem, ParseError> {
    let lines = split_lines(text)?;

    let mut hedges: Option<(Vec<String>, Vec<String>)> = None;
    let mut depth: Option<i64> = None;
    let mut signature_line = None;
    for line in &lines {
        let duplicate = || {
            ParseError::new(
                line.number,
                line.keyword_column,
                ParseErrorKind::Syntax,
                format!("duplicate `{}:` line", line.keyword),
            )
        };
        match line.keyword {
            "hedges" => {
                if hedges.is_some() {
                    return Err(duplicate());
                }
                hedges = Some(parse_hedges(line)?);
                signature_line.get_or_insert(line);
            }
            "maxdepth" => {
                if depth.is_some() {
                    return Err(duplicate());
                }
                depth = Some(parse_maxdepth(line)?);
                signature_line.get_or_insert(line);
            }
            _ => {}
        }
    }
    let signature = match (&hedges, depth) {
        (None, None) => Signature::standard(),
        (None, Some(d)) => {
            let standard = Signature::standard();
            Signature::new(standard.positive_names(), standard.negative_names(), d)
                .map_err(|e| signature_error(signature_line.unwrap(), e))?
        }
        (Some((pos, neg)), d) => {
            Signature::new(pos, neg, d.unwrap_or(2)).map_err(|e| signature_error(signature_line.unwrap(), e))?
        }
    };

    let mut inputs = Vec::new();
    let mut directives = Directives::default();
    for line in &lines {
        if matches!(line.keyword, "hedges" | "maxdepth") {
            continue;
        }
        let mut p = Parser::new(&signature, line.body, line.number, line.offset)?;
        match line.keyword {
            "clause" => {
                let clause = p.clause_literals()?;
                let reliability = if p.eat(&Tok::At) {
                    let column = p.column();
                    let r = p.term()?;
                    if !r.is_true() {
                        return Err(ParseError::new(
                            line.number,
                            column,
                            ParseErrorKind::BadReliability,
                            format!("reliability {} is not above W", signature.show(&r)),
                        ));
                    }
                    r
                } else {
                    Term::top()
                };
                p.expect(Tok::Dot)?;
                p.finish()?;
                let rc = ReliableClause::new(clause, reliability).expect("checked above W");
                inputs.push(Input::Clause(rc));
            }
            "formula" => {
                let f = p.formula()?;
                p.expect(Tok::Dot)?;
                p.finish()?;
                inputs.push(Input::Formula(f));
            }
            "option" => parse_option(&mut p, &mut directives)?,
            other => {
                return Err(ParseError::new(
                    line.number,
                    line.keyword_column,
                    ParseErrorKind::Syntax,
                    format!("unknown line kind `{other}:`"),
                ))
            }
        }
    }

    Ok(Problem {
        signature,
        inputs,
        directives,
    })
}

fn signature_error(line: &Line, e: AlgebraError) -> ParseError {
    ParseError::new(
        line.number,
        line.keyword_column,
        ParseErrorKind::InvalidSignature,
        e.to_string(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::standard()
    }

    fn t(s: &str) -> Term {
        sig().parse_term(s).unwrap()
    }

    #[test]
    fn precedence() {
        let f = parse_formula(&sig(), "A^True -> B^MTrue | C^True").unwrap();
        assert_eq!(
            f,
            Formula::implies(
                Formula::lit("A", t("True")),
                Formula::or(Formula::lit("B", t("MTrue")), Formula::lit("C", t("True")))
            )
        );
        let f = parse_formula(&sig(), "!A^True & B^True | C^True <-> D^True -> E^True -> F^True").unwrap();
        let [a, b, c, d, e, g] = ["A", "B", "C", "D", "E", "F"].map(|n| Formula::lit(n, t("True")));
        assert_eq!(
            f,
            Formula::iff(
                Formula::or(Formula::and(Formula::not(a), b), c),
                Formula::implies(d, Formula::implies(e, g))
            )
        );
    }

    #[test]
    fn double_negation_and_constants() {
        assert_eq!(
            parse_formula(&sig(), "!!A^VTrue").unwrap(),
            Formula::not(Formula::not(Formula::lit("A", t("VTrue"))))
        );
        assert_eq!(
            parse_formula(&sig(), "LTrue & (W^⊤)").unwrap(),
            Formula::and(
                Formula::Constant(t("LTrue")),
                Formula::Literal(Literal::new(Atom::Const(Term::w()), Term::top()))
            )
        );
    }

    #[test]
    fn unknown_hedge() {
        let flat = Signature::new::<&str>(&[], &[], 0).unwrap();
        let e = parse_formula(&flat, "A^MissingHedgeTrue").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownHedge);
        assert_eq!((e.line, e.column), (1, 3));
        let e = parse_formula(&sig(), "A^VVVTrue").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DepthExceeded);
        let e = parse_formula(&sig(), "A^VW").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::HedgedFixedPoint);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        for (text, column) in [("A^True &", 9), ("(A^True", 8), ("A & B^True", 3), ("A^True B^True", 8)] {
            let e = parse_formula(&sig(), text).unwrap_err();
            assert_eq!(e.kind, ParseErrorKind::Syntax, "{text}");
            assert_eq!(e.column, column, "{text}: {e}");
        }
    }

    #[test]
    fn worked_example_file() {
        let text = "% five clauses\n\
                    hedges: H+ = V < M ; H- = P < L\n\
                    maxdepth: 2\n\
                    clause: A^MFalse | B^False | C^VMTrue.\n\
                    clause: B^LTrue | C^PTrue.\n\
                    clause: A^PTrue.\n\
                    clause: B^VTrue.\n\
                    clause: C^VFalse.   % last\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.signature, Signature::standard());
        let seed = p.seed();
        assert_eq!(seed.len(), 5);
        assert!(seed.iter().all(|c| c.reliability() == &Term::top()));
        assert_eq!(seed[0].clause().len(), 3);
    }

    #[test]
    fn empty_clause_and_reliability() {
        let p = parse_problem("clause: .\nclause: □.\nclause: A^True @ VTrue.").unwrap();
        let seed = p.seed();
        assert!(seed[0].clause().is_empty() && seed[1].clause().is_empty());
        assert_eq!(seed[2].reliability(), &t("VTrue"));

        let e = parse_problem("clause: A^W @ W.").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadReliability);
        assert_eq!((e.line, e.column), (1, 15));
        let e = parse_problem("\n\nclause: A^True @ LFalse.").unwrap_err();
        assert_eq!((e.kind, e.line), (ParseErrorKind::BadReliability, 3));
    }

    #[test]
    fn signature_lines() {
        let p = parse_problem("clause: A^MoreTrue.\nhedges: H+ = More ; H- = Less\nmaxdepth: 1").unwrap();
        assert_eq!(p.signature.positive_names(), ["More"]);
        assert_eq!(p.signature.max_depth(), 1);

        let p = parse_problem("hedges: H- = Less").unwrap();
        assert!(p.signature.positive_names().is_empty());

        let e = parse_problem("hedges: H+ = V < V").unwrap_err();
        assert_eq!((e.kind, e.line), (ParseErrorKind::InvalidSignature, 1));
        let e = parse_problem("maxdepth: -1").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::InvalidSignature);
        let e = parse_problem("clause: A^True.\nhedges: H+ = V <").unwrap_err();
        assert_eq!((e.kind, e.line, e.column), (ParseErrorKind::Syntax, 2, 17));
        let e = parse_problem("hedges: H* = V").unwrap_err();
        assert_eq!((e.kind, e.line, e.column), (ParseErrorKind::Syntax, 1, 10));
        let e = parse_problem("hedges: H+ = V\nhedges: H- = P").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn options() {
        let p = parse_problem("option: merge_duplicates = max_label\noption: strategy = naive\noption: max_steps = 10")
            .unwrap();
        assert_eq!(p.directives.merge, Some(MergeMode::MaxLabel));
        assert_eq!(p.directives.strategy, Some(Strategy::Naive));
        assert_eq!(p.directives.max_steps, Some(10));
        assert!(parse_problem("option: max_steps = 0").is_err());
        assert!(parse_problem("option: colour = red").is_err());
    }

    #[test]
    fn formulas_are_converted() {
        let p = parse_problem("formula: A^True -> B^True.").unwrap();
        assert!(matches!(p.inputs[0], Input::Formula(_)));
        let seed = p.seed();
        assert_eq!(seed.len(), 1);
        assert_eq!(seed[0].clause(), &parse_clause(&sig(), "A^False | B^True").unwrap());
    }

    #[test]
    fn missing_terminator_and_unknown_lines() {
        let e = parse_problem("clause: A^True").unwrap_err();
        assert_eq!((e.line, e.column), (1, 15));
        let e = parse_problem("axiom: A^True.").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_problem("  A^True.").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
    }
}
