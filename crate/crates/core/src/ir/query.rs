use std::fmt;

use super::tokenize::tokenize;
use super::IrError;
use crate::ops::{ContainmentMode, StrictMode};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QueryAst {
    Term(String),
    Or(Vec<QueryAst>),
    And(Vec<QueryAst>),
    OrderedMeet(Box<QueryAst>, Box<QueryAst>),
    Block(Box<QueryAst>, Box<QueryAst>),
    Containment(Box<QueryAst>, Box<QueryAst>, ContainmentMode),
    StrictContainment(Box<QueryAst>, Box<QueryAst>, StrictMode),
    Minus(Box<QueryAst>, Box<QueryAst>),
    Within(Box<QueryAst>, u64),
}

fn containment_symbol(mode: ContainmentMode) -> &'static str {
    match mode {
        ContainmentMode::Containing => ">>",
        ContainmentMode::NotContaining => "!>>",
        ContainmentMode::ContainedIn => "<<",
        ContainmentMode::NotContainedIn => "!<<",
    }
}

fn strict_symbol(mode: StrictMode) -> &'static str {
    match mode {
        StrictMode::StrictlyContaining => ">>>",
        StrictMode::NotStrictlyContaining => "!>>>",
    }
}

/// Fully parenthesized; parses back to the same tree.
impl fmt::Display for QueryAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, xs: &[QueryAst], op: &str| {
            write!(f, "(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, " {op} ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        };
        match self {
            QueryAst::Term(t) => write!(f, "{t}"),
            QueryAst::Or(xs) => list(f, xs, "OR"),
            QueryAst::And(xs) => list(f, xs, "AND"),
            QueryAst::OrderedMeet(a, b) => write!(f, "({a} < {b})"),
            QueryAst::Block(a, b) => write!(f, "({a} ++ {b})"),
            QueryAst::Containment(a, b, m) => write!(f, "({a} {} {b})", containment_symbol(*m)),
            QueryAst::StrictContainment(a, b, m) => write!(f, "({a} {} {b})", strict_symbol(*m)),
            QueryAst::Minus(a, b) => write!(f, "({a} MINUS {b})"),
            QueryAst::Within(a, k) => write!(f, "({a} WITHIN {k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Phrase(String),
    LParen,
    RParen,
    Or,
    And,
    Minus,
    Within,
    Contain(ContainmentMode),
    Strict(StrictMode),
    Ordered,
    Block,
}

const SYMBOLS: [(&str, Tok); 8] = [
    ("!>>>", Tok::Strict(StrictMode::NotStrictlyContaining)),
    (">>>", Tok::Strict(StrictMode::StrictlyContaining)),
    ("!>>", Tok::Contain(ContainmentMode::NotContaining)),
    ("!<<", Tok::Contain(ContainmentMode::NotContainedIn)),
    (">>", Tok::Contain(ContainmentMode::Containing)),
    ("<<", Tok::Contain(ContainmentMode::ContainedIn)),
    ("++", Tok::Block),
    ("<", Tok::Ordered),
];

fn syntax(pos: usize, msg: impl Into<String>) -> IrError {
    IrError::Syntax { pos, msg: msg.into() }
}

// Positions are character offsets into the query.
fn lex(q: &str) -> Result<Vec<(Tok, usize)>, IrError> {
    let chars: Vec<char> = q.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match c {
            '(' => out.push((Tok::LParen, i)),
            ')' => out.push((Tok::RParen, i)),
            '"' => {
                let Some(len) = chars[i + 1..].iter().position(|&c| c == '"') else {
                    return Err(syntax(i, "unterminated phrase"));
                };
                out.push((Tok::Phrase(chars[i + 1..i + 1 + len].iter().collect()), i));
                i += len + 2;
                continue;
            }
            _ if c.is_alphanumeric() => {
                let len = chars[i..].iter().take_while(|c| c.is_alphanumeric()).count();
                let word: String = chars[i..i + len].iter().collect();
                let tok = match word.as_str() {
                    "OR" => Tok::Or,
                    "AND" => Tok::And,
                    "MINUS" => Tok::Minus,
                    "WITHIN" => Tok::Within,
                    _ => Tok::Word(word),
                };
                out.push((tok, i));
                i += len;
                continue;
            }
            _ => {
                for (sym, tok) in &SYMBOLS {
                    if chars[i..].starts_with(&sym.chars().collect::<Vec<_>>()) {
                        out.push((tok.clone(), i));
                        i += sym.len();
                        continue 'outer;
                    }
                }
                return Err(syntax(i, format!("unexpected character {c:?}")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(_, p)| p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn nary(
        &mut self,
        op: &Tok,
        next: fn(&mut Self) -> Result<QueryAst, IrError>,
        build: fn(Vec<QueryAst>) -> QueryAst,
    ) -> Result<QueryAst, IrError> {
        let mut items = vec![next(self)?];
        while self.eat(op) {
            items.push(next(self)?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { build(items) })
    }

    fn or(&mut self) -> Result<QueryAst, IrError> {
        self.nary(&Tok::Or, Self::minus, QueryAst::Or)
    }

    fn minus(&mut self) -> Result<QueryAst, IrError> {
        let mut acc = self.and()?;
        while self.eat(&Tok::Minus) {
            acc = QueryAst::Minus(Box::new(acc), Box::new(self.and()?));
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<QueryAst, IrError> {
        self.nary(&Tok::And, Self::within, QueryAst::And)
    }

    fn within(&mut self) -> Result<QueryAst, IrError> {
        let mut acc = self.containment()?;
        while self.eat(&Tok::Within) {
            let pos = self.pos();
            let k = match self.bump() {
                Some(Tok::Word(w)) => w.parse::<u64>().ok().filter(|&k| k >= 1),
                _ => None,
            };
            let k = k.ok_or_else(|| syntax(pos, "WITHIN expects a positive integer"))?;
            acc = QueryAst::Within(Box::new(acc), k);
        }
        Ok(acc)
    }

    fn containment(&mut self) -> Result<QueryAst, IrError> {
        let mut acc = self.ordered()?;
        loop {
            match self.peek() {
                Some(&Tok::Contain(m)) => {
                    self.at += 1;
                    acc = QueryAst::Containment(Box::new(acc), Box::new(self.ordered()?), m);
                }
                Some(&Tok::Strict(m)) => {
                    self.at += 1;
                    acc = QueryAst::StrictContainment(Box::new(acc), Box::new(self.ordered()?), m);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn ordered(&mut self) -> Result<QueryAst, IrError> {
        let mut acc = self.block()?;
        while self.eat(&Tok::Ordered) {
            acc = QueryAst::OrderedMeet(Box::new(acc), Box::new(self.block()?));
        }
        Ok(acc)
    }

    fn block(&mut self) -> Result<QueryAst, IrError> {
        let mut acc = self.primary()?;
        while self.eat(&Tok::Block) {
            acc = QueryAst::Block(Box::new(acc), Box::new(self.primary()?));
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<QueryAst, IrError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Word(w)) => Ok(QueryAst::Term(w.to_lowercase())),
            Some(Tok::Phrase(p)) => {
                let mut words = tokenize(&p).into_iter().map(|(w, _)| QueryAst::Term(w));
                let first = words.next().ok_or_else(|| syntax(pos, "empty phrase"))?;
                Ok(words.fold(first, |acc, w| QueryAst::Block(Box::new(acc), Box::new(w))))
            }
            Some(Tok::LParen) => {
                let inner = self.or()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.pos(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(_) => Err(syntax(pos, "expected a term, phrase or '('")),
            None => Err(syntax(pos, "unexpected end of query")),
        }
    }
}

/// Parses a structured query. From tightest to loosest binding: `++`, `<`,
/// the containment operators `>> !>> << !<< >>> !>>>`, postfix `WITHIN k`,
/// `AND`, `MINUS`, `OR`. Keywords are uppercase; terms are lowercased, and a
/// quoted phrase is a chain of `++`.
pub fn parse_query(q: &str) -> Result<QueryAst, IrError> {
    let mut p = Parser { toks: lex(q)?, at: 0, end: q.chars().count() };
    let ast = p.or()?;
    if p.at < p.toks.len() {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(ast)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> QueryAst {
        QueryAst::Term(s.into())
    }

    fn b(q: QueryAst) -> Box<QueryAst> {
        Box::new(q)
    }

    #[test]
    fn or_of_and() {
        assert_eq!(
            parse_query("(pease AND porridge) OR hot").unwrap(),
            QueryAst::Or(vec![QueryAst::And(vec![t("pease"), t("porridge")]), t("hot")])
        );
    }

    #[test]
    fn and_chain_is_flat() {
        let q = parse_query("pease AND porridge AND (hot OR cold)").unwrap();
        assert_eq!(q, QueryAst::And(vec![t("pease"), t("porridge"), QueryAst::Or(vec![t("hot"), t("cold")])]));
    }

    #[test]
    fn containment_binds_tighter_than_or() {
        assert_eq!(
            parse_query("a >> b OR c").unwrap(),
            QueryAst::Or(vec![QueryAst::Containment(b(t("a")), b(t("b")), ContainmentMode::Containing), t("c")])
        );
    }

    #[test]
    fn precedence_ladder() {
        let q = parse_query("a ++ b < c !<< d WITHIN 4 AND e MINUS f OR g").unwrap();
        let blk = QueryAst::Block(b(t("a")), b(t("b")));
        let ord = QueryAst::OrderedMeet(b(blk), b(t("c")));
        let cont = QueryAst::Containment(b(ord), b(t("d")), ContainmentMode::NotContainedIn);
        let and = QueryAst::And(vec![QueryAst::Within(b(cont), 4), t("e")]);
        assert_eq!(q, QueryAst::Or(vec![QueryAst::Minus(b(and), b(t("f"))), t("g")]));
    }

    #[test]
    fn longest_symbol_wins() {
        let q = parse_query("a !>>> b >>> c").unwrap();
        let inner = QueryAst::StrictContainment(b(t("a")), b(t("b")), StrictMode::NotStrictlyContaining);
        assert_eq!(q, QueryAst::StrictContainment(b(inner), b(t("c")), StrictMode::StrictlyContaining));
        assert_eq!(parse_query("a << b").unwrap(), QueryAst::Containment(b(t("a")), b(t("b")), ContainmentMode::ContainedIn));
    }

    #[test]
    fn left_associative_minus() {
        let q = parse_query("a MINUS b MINUS c").unwrap();
        assert_eq!(q, QueryAst::Minus(b(QueryAst::Minus(b(t("a")), b(t("b")))), b(t("c"))));
    }

    #[test]
    fn phrase_desugars_to_block() {
        let q = parse_query("\"Pease porridge, hot\"").unwrap();
        assert_eq!(q, QueryAst::Block(b(QueryAst::Block(b(t("pease")), b(t("porridge")))), b(t("hot"))));
        assert_eq!(parse_query("\"Hot\"").unwrap(), t("hot"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let pos = |q: &str| match parse_query(q) {
            Err(IrError::Syntax { pos, .. }) => pos,
            other => panic!("{q}: {other:?}"),
        };
        assert_eq!(pos("a AND"), 5);
        assert_eq!(pos("(a OR b"), 7);
        assert_eq!(pos("a b"), 2);
        assert_eq!(pos("a & b"), 2);
        assert_eq!(pos("a WITHIN 0"), 9);
        assert_eq!(pos("\"\""), 0);
        assert_eq!(pos("x \"open"), 2);
        assert_eq!(pos(""), 0);
    }

    #[test]
    fn display_round_trips() {
        for q in ["(a OR b) AND c", "a ++ b < c", "x >>> y MINUS z WITHIN 3", "p !>> q OR r << s"] {
            let ast = parse_query(q).unwrap();
            assert_eq!(parse_query(&ast.to_string()).unwrap(), ast);
        }
    }
}
