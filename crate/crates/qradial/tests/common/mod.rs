//! Shared helpers for the integration tests: a tiny arithmetic-expression
//! evaluator for the fixture files (which store printed values like
//! `52/(15*sqrt(pi))` verbatim) and a fixture parser.

#![allow(dead_code)]

use std::collections::HashMap;

/// Evaluates an arithmetic expression over numbers, `pi`, `sqrt(..)`,
/// `+ - * /`, and parentheses.
pub fn eval_expr(text: &str) -> f64 {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let value = parser.expr();
    parser.skip_ws();
    assert!(
        parser.pos == parser.chars.len(),
        "trailing input in expression '{text}' at {}",
        parser.pos
    );
    value
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, expected: char) {
        self.skip_ws();
        assert_eq!(
            self.peek(),
            Some(expected),
            "expected '{expected}' at {} in {:?}",
            self.pos,
            self.chars.iter().collect::<String>()
        );
        self.pos += 1;
    }

    fn expr(&mut self) -> f64 {
        let mut value = self.term();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    value += self.term();
                }
                Some('-') => {
                    self.pos += 1;
                    value -= self.term();
                }
                _ => return value,
            }
        }
    }

    fn term(&mut self) -> f64 {
        let mut value = self.factor();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    value *= self.factor();
                }
                Some('/') => {
                    self.pos += 1;
                    value /= self.factor();
                }
                _ => return value,
            }
        }
    }

    fn factor(&mut self) -> f64 {
        self.skip_ws();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.factor()
            }
            Some('(') => {
                self.eat('(');
                let value = self.expr();
                self.eat(')');
                value
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.word(),
            other => panic!("unexpected {other:?} in expression"),
        }
    }

    fn number(&mut self) -> f64 {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_digit() || c == '.' || c == 'e' || c == 'E')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .expect("malformed number in expression")
    }

    fn word(&mut self) -> f64 {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let word: String = self.chars[start..self.pos].iter().collect();
        match word.as_str() {
            "pi" => std::f64::consts::PI,
            "sqrt" => {
                self.eat('(');
                let inner = self.expr();
                self.eat(')');
                inner.sqrt()
            }
            other => panic!("unknown symbol '{other}' in expression"),
        }
    }
}

/// One fixture row: named cells plus the per-cell typo corrections.
#[derive(Debug, Clone)]
pub struct FixtureRow {
    pub cells: HashMap<String, String>,
    pub corrections: HashMap<String, String>,
}

impl FixtureRow {
    /// The printed value of a column, evaluated.
    pub fn printed(&self, column: &str) -> f64 {
        eval_expr(
            self.cells
                .get(column)
                .unwrap_or_else(|| panic!("fixture column {column} missing")),
        )
    }

    /// The corrected value when the cell is flagged, else the printed one.
    pub fn canonical(&self, column: &str) -> f64 {
        match self.corrections.get(column) {
            Some(expr) => eval_expr(expr),
            None => self.printed(column),
        }
    }

    pub fn is_flagged(&self, column: &str) -> bool {
        self.corrections.contains_key(column)
    }

    pub fn text(&self, column: &str) -> &str {
        self.cells
            .get(column)
            .unwrap_or_else(|| panic!("fixture column {column} missing"))
    }

    pub fn n(&self) -> u32 {
        self.text("n").parse().expect("fixture n")
    }

    pub fn l(&self) -> u32 {
        self.text("l").parse().expect("fixture l")
    }
}

/// Parses a fixture file: `#` comments, a header row, then data rows.
/// A trailing `typos` column may carry `field=expr` pairs joined by `;`.
pub fn parse_fixture(text: &str) -> Vec<FixtureRow> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'));
    let header: Vec<String> = lines
        .next()
        .expect("fixture header")
        .split(',')
        .map(|cell| cell.trim().to_string())
        .collect();
    let mut rows = Vec::new();
    for line in lines {
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        assert_eq!(
            cells.len(),
            header.len(),
            "fixture row width mismatch: {line}"
        );
        let mut named = HashMap::new();
        let mut corrections = HashMap::new();
        for (name, cell) in header.iter().zip(&cells) {
            if name == "typos" {
                for pair in cell.split(';').filter(|p| !p.is_empty()) {
                    let (field, expr) = pair
                        .split_once('=')
                        .unwrap_or_else(|| panic!("malformed typo entry '{pair}'"));
                    corrections.insert(field.to_string(), expr.to_string());
                }
            } else {
                named.insert(name.clone(), cell.to_string());
            }
        }
        rows.push(FixtureRow {
            cells: named,
            corrections,
        });
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_evaluator_handles_fixture_grammar() {
        assert_eq!(eval_expr("3/2"), 1.5);
        assert!((eval_expr("pi") - std::f64::consts::PI).abs() < 1e-15);
        assert!((eval_expr("2/sqrt(pi)") - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-15);
        assert!((eval_expr("sqrt(11/10)") - 1.0488088481701516).abs() < 1e-15);
        let value = eval_expr("13/2-1048576/(53361*pi)");
        assert!((value - (6.5 - 1048576.0 / (53361.0 * std::f64::consts::PI))).abs() < 1e-12);
        assert_eq!(eval_expr("-6/8"), -0.75);
        assert!((eval_expr("3*sqrt(pi)/4") - 1.3293403881791368).abs() < 1e-14);
    }
}
