//! Ideal files:
//!
//! ```text
//! ring: x1 x2 x3
//! char: 0
//! I: (2*x1+x2)^3, x2^3,
//!    x1*x3^2
//! ```
//!
//! `char:` defaults to 0. The `I:` list may continue over several lines.
//! `#` starts a comment.

use borel_core::{parse_polynomial_list, Error, Field, MonomialIdeal, Polynomial, Result, Ring, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub names: Vec<String>,
    pub field: Field,
    pub gens: Vec<Polynomial>,
}

impl IdealFile {
    pub fn ring(&self) -> Ring {
        Ring::new(self.names.len(), self.field)
    }

    /// `Some` when every generator is a single term.
    pub fn monomial_ideal(&self) -> Option<MonomialIdeal> {
        self.gens.iter().all(Polynomial::is_monomial).then(|| {
            MonomialIdeal::new(self.names.len(), self.gens.iter().map(|g| g.leading_monomial().unwrap().clone()))
        })
    }

    /// Canonical text form; parsing it again gives the same file.
    pub fn render(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|g| g.display_with(&self.names)).collect();
        format!("ring: {}\nchar: {}\nI: {}\n", self.names.join(" "), self.field.characteristic(), gens.join(", "))
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Blanks out `#` comments so columns stay put.
fn strip_comment(line: &str) -> String {
    match line.find('#') {
        Some(k) => format!("{}{}", &line[..k], " ".repeat(line[k..].chars().count())),
        None => line.to_string(),
    }
}

pub fn parse_ideal(src: &str) -> Result<IdealFile> {
    let mut names: Option<Vec<String>> = None;
    let mut field = Field::Rational;
    let mut body: Option<(String, (usize, usize))> = None;
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if trimmed.is_empty() {
            if let Some((text, _)) = body.as_mut() {
                text.push('\n');
            }
            continue;
        }
        let key = trimmed.split_once(':').map(|(k, v)| (k.trim(), v));
        match key {
            Some(("ring", rest)) => {
                let list: Vec<String> =
                    rest.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).map(String::from).collect();
                if list.is_empty() {
                    return Err(syntax(line_no, indent + 1, "the ring declares no variables"));
                }
                for (k, v) in list.iter().enumerate() {
                    let ok = v.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                        && v.chars().all(|c| c.is_alphanumeric() || c == '_');
                    if !ok {
                        return Err(syntax(line_no, indent + 1, format!("invalid variable name '{v}'")));
                    }
                    if list[..k].contains(v) {
                        return Err(syntax(line_no, indent + 1, format!("variable '{v}' declared twice")));
                    }
                }
                names = Some(list);
            }
            Some(("char", rest)) => {
                let p: u64 = rest
                    .trim()
                    .parse()
                    .map_err(|_| syntax(line_no, indent + 1, format!("invalid characteristic '{}'", rest.trim())))?;
                field = Field::with_characteristic(p)?;
            }
            Some(("I", rest)) => {
                if body.is_some() {
                    return Err(syntax(line_no, indent + 1, "the ideal is given twice"));
                }
                let column = line.len() - rest.len() + 1;
                body = Some((rest.to_string(), (line_no, column)));
            }
            _ => match body.as_mut() {
                Some((text, _)) => {
                    text.push('\n');
                    text.push_str(&line);
                }
                None => return Err(syntax(line_no, indent + 1, "expected 'ring:', 'char:' or 'I:'")),
            },
        }
    }
    let names = names.ok_or_else(|| syntax(1, 1, "missing 'ring:' line"))?;
    let (text, start) = body.ok_or_else(|| syntax(1, 1, "missing 'I:' line"))?;
    let ring = Ring::new(names.len(), field);
    let gens = parse_polynomial_list(&text, start, &names, ring, TermOrder::RevLex)?;
    let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if let Some(index) = gens.iter().position(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous { index });
    }
    Ok(IdealFile { names, field, gens })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_two_square() {
        let f = parse_ideal("ring: x y\nchar: 2\nI: (x+y)^2\n").unwrap();
        assert_eq!(f.gens[0].display_with(&f.names), "x^2 + y^2");
    }

    #[test]
    fn zero_ideal_rejected() {
        assert!(matches!(parse_ideal("ring: x y\nI: 0"), Err(Error::ZeroIdeal)));
    }

    #[test]
    fn multiline_with_comments() {
        let f = parse_ideal("# cubes\nring: a, b\nI: a^3, # first\n   b^3\n").unwrap();
        assert_eq!(f.gens.len(), 2);
        assert!(f.monomial_ideal().is_some());
    }

    #[test]
    fn error_positions() {
        match parse_ideal("ring: x y\nI: x^2,\n  y^2 + z^2") {
            Err(Error::UnknownVariable { name, line, column }) => assert_eq!((name.as_str(), line, column), ("z", 3, 9)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ideal("ring: x y\nI: x^2 + y"), Err(Error::NotHomogeneous { index: 0 })));
        assert!(matches!(parse_ideal("ring: x\nI: x + )"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ideal("ring: x\nchar: 4\nI: x"), Err(_)));
    }

    #[test]
    fn round_trip() {
        let f = parse_ideal("ring: x1 x2 x3\nI: (2x1+x2)^3, (x2 - 3/2 x3)^2\n").unwrap();
        assert_eq!(parse_ideal(&f.render()).unwrap(), f);
    }
}
