use super::{AtomName, Expr, Func, Param, ParseError};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64, bool),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(v, _) => format!("number `{v}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut out = Vec::new();
    while i < chars.len() {
        let ch = chars[i];
        if ch == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let (l0, c0) = (line, col);
        if ch.is_ascii_digit() || (ch == '.' && chars.get(i + 1).is_some_and(|c| c.is_ascii_digit())) {
            let start = i;
            let mut integral = true;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                integral = false;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    integral = false;
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            let v: f64 = text.parse().map_err(|_| ParseError {
                line: l0,
                col: c0,
                message: format!("malformed number `{text}`"),
                expected: vec![],
            })?;
            col += i - start;
            out.push(Token { tok: Tok::Num(v, integral), line: l0, col: c0 });
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, col: c0 });
            continue;
        }
        if "+-*/^(),".contains(ch) {
            out.push(Token { tok: Tok::Sym(ch), line: l0, col: c0 });
            i += 1;
            col += 1;
            continue;
        }
        return Err(ParseError { line: l0, col: c0, message: format!("unexpected character `{ch}`"), expected: vec![] });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

const OPERAND: [&str; 4] = ["number", "identifier", "`(`", "`-`"];

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, t: &Token, message: String, expected: &[&str]) -> ParseError {
        ParseError { line: t.line, col: t.col, message, expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.bump();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            Err(self.err(&t, format!("unexpected {}", describe(&t.tok)), &[&format!("`{c}`")]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.primary()?;
        while self.peek().tok == Tok::Sym('^') {
            self.bump();
            let t = self.bump();
            match t.tok {
                Tok::Num(v, true) if v <= u32::MAX as f64 => base = Expr::Pow(Box::new(base), v as u32),
                Tok::Num(..) => return Err(self.err(&t, "exponent must be a non-negative integer".into(), &["integer"])),
                Tok::Sym('-') => return Err(self.err(&t, "negative exponent".into(), &["integer"])),
                ref other => return Err(self.err(&t, format!("unexpected {}", describe(other)), &["integer"])),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Num(v, _) => Ok(Expr::Num(v)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(ref name) => {
                if self.peek().tok == Tok::Sym('(') {
                    let func = Func::from_name(name).ok_or_else(|| {
                        let names: Vec<&str> = Func::ALL.iter().map(|f| f.name()).collect();
                        self.err(&t, format!("unknown function `{name}`"), &names)
                    })?;
                    self.bump();
                    let mut args = vec![self.expr()?];
                    while self.peek().tok == Tok::Sym(',') {
                        self.bump();
                        args.push(self.expr()?);
                    }
                    self.expect(')')?;
                    if args.len() != func.arity() {
                        return Err(self.err(
                            &t,
                            format!("`{name}` takes {} argument(s), got {}", func.arity(), args.len()),
                            &[],
                        ));
                    }
                    return Ok(Expr::Call(func, args));
                }
                if name == "i" {
                    Ok(Expr::Imag)
                } else if let Some(a) = AtomName::from_name(name) {
                    Ok(Expr::Atom(a))
                } else if let Some(p) = Param::from_name(name) {
                    Ok(Expr::Param(p))
                } else {
                    let mut names: Vec<&str> = AtomName::ALL.iter().map(|a| a.name()).collect();
                    names.extend(Param::ALL.iter().map(|p| p.name()));
                    names.push("i");
                    Err(self.err(&t, format!("unknown identifier `{name}`"), &names))
                }
            }
            ref other => Err(self.err(&t, format!("unexpected {}", describe(other)), &OPERAND)),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return Err(p.err(&t, format!("unexpected {}", describe(&t.tok)), &["operator", "end of input"]));
    }
    Ok(e)
}
