//! Certificate text format.
//!
//! Fields appear one per line, in this order, each as a keyword followed by
//! space-separated values:
//!
//! ```text
//! type fan            type clique         type book
//! color R|B|none      color R|B|none      color R|B|none
//! center <v>          members <v>...      spine <u> <v>
//! blades <a> <b>...                       pages <p>...
//! ```
//!
//! `blades` lists the blade pairs flattened (`a1 b1 a2 b2 ...`). Lines starting
//! with `#` and blank lines are ignored. The writer emits exactly this layout
//! with single spaces and a trailing newline.

use std::fmt::Write as _;

use super::{BookCertificate, Certificate, CliqueCertificate, FanCertificate};
use crate::error::{ParseError, ParseErrorKind};
use crate::graph::{Color, Vertex, VertexSet};

fn color_token(c: Option<Color>) -> &'static str {
    match c {
        Some(Color::Red) => "R",
        Some(Color::Blue) => "B",
        None => "none",
    }
}

fn join(vs: impl IntoIterator<Item = Vertex>) -> String {
    vs.into_iter().fold(String::new(), |mut s, v| {
        let _ = write!(s, " {v}");
        s
    })
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    match cert {
        Certificate::Fan(f) => {
            let _ = writeln!(out, "type fan");
            let _ = writeln!(out, "color {}", color_token(f.color));
            let _ = writeln!(out, "center {}", f.center);
            let _ = writeln!(out, "blades{}", join(f.blades.iter().flat_map(|&(a, b)| [a, b])));
        }
        Certificate::Clique(k) => {
            let _ = writeln!(out, "type clique");
            let _ = writeln!(out, "color {}", color_token(k.color));
            let _ = writeln!(out, "members{}", join(k.members.iter().copied()));
        }
        Certificate::Book(b) => {
            let _ = writeln!(out, "type book");
            let _ = writeln!(out, "color {}", color_token(b.color));
            let _ = writeln!(out, "spine {} {}", b.spine.0, b.spine.1);
            let _ = writeln!(out, "pages{}", join(b.pages.iter().copied()));
        }
    }
    out
}

struct Fields<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Fields<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Fields {
            lines,
            pos: 0,
            last_line: text.lines().count().max(1),
        }
    }

    /// Tokens after `keyword` on the next line.
    fn take(&mut self, keyword: &'static str) -> Result<(usize, Vec<&'a str>), ParseError> {
        let Some(&(line, body)) = self.lines.get(self.pos) else {
            return Err(ParseError {
                line: self.last_line,
                kind: ParseErrorKind::UnexpectedEof,
            });
        };
        self.pos += 1;
        let mut toks = body.split_whitespace();
        if toks.next() != Some(keyword) {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::UnexpectedField { expected: keyword },
            });
        }
        Ok((line, toks.collect()))
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.lines.get(self.pos) {
            Some(&(line, _)) => Err(malformed(line)),
            None => Ok(()),
        }
    }
}

fn malformed(line: usize) -> ParseError {
    ParseError {
        line,
        kind: ParseErrorKind::MalformedLine,
    }
}

fn numbers(line: usize, toks: &[&str]) -> Result<Vec<Vertex>, ParseError> {
    toks.iter()
        .map(|t| t.parse::<Vertex>().map_err(|_| malformed(line)))
        .collect()
}

fn single(line: usize, toks: &[&str]) -> Result<Vertex, ParseError> {
    match numbers(line, toks)?.as_slice() {
        [v] => Ok(*v),
        _ => Err(malformed(line)),
    }
}

pub fn read_certificate(text: &str) -> Result<Certificate, ParseError> {
    let mut fields = Fields::new(text);
    let (line, kind) = fields.take("type")?;
    let (cline, ctoks) = fields.take("color")?;
    let color = match ctoks.as_slice() {
        ["R"] => Some(Color::Red),
        ["B"] => Some(Color::Blue),
        ["none"] => None,
        _ => return Err(malformed(cline)),
    };
    let cert = match kind.as_slice() {
        ["fan"] => {
            let (l, t) = fields.take("center")?;
            let center = single(l, &t)?;
            let (l, t) = fields.take("blades")?;
            let flat = numbers(l, &t)?;
            if flat.len() % 2 != 0 {
                return Err(malformed(l));
            }
            let blades = flat.chunks(2).map(|p| (p[0], p[1])).collect();
            Certificate::Fan(FanCertificate {
                center,
                blades,
                color,
            })
        }
        ["clique"] => {
            let (l, t) = fields.take("members")?;
            let members = numbers(l, &t)?;
            let set = VertexSet::from(members.clone());
            if set.len() != members.len() {
                return Err(malformed(l));
            }
            Certificate::Clique(CliqueCertificate {
                members: set,
                color,
            })
        }
        ["book"] => {
            let (l, t) = fields.take("spine")?;
            let spine = match numbers(l, &t)?.as_slice() {
                [u, v] => (*u, *v),
                _ => return Err(malformed(l)),
            };
            let (l, t) = fields.take("pages")?;
            Certificate::Book(BookCertificate {
                spine,
                pages: numbers(l, &t)?,
                color,
            })
        }
        _ => return Err(malformed(line)),
    };
    fields.finish()?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fan_layout_is_exact() {
        let f = FanCertificate {
            center: 4,
            blades: vec![(0, 1), (2, 3)],
            color: Some(Color::Blue),
        };
        assert_eq!(
            write_certificate(&f.into()),
            "type fan\ncolor B\ncenter 4\nblades 0 1 2 3\n"
        );
    }

    #[test]
    fn empty_lists_are_bare_keywords() {
        let k = CliqueCertificate {
            members: VertexSet::new(),
            color: None,
        };
        let text = write_certificate(&k.clone().into());
        assert_eq!(text, "type clique\ncolor none\nmembers\n");
        assert_eq!(read_certificate(&text).unwrap(), Certificate::Clique(k));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(read_certificate("type fan\ncolor R\ncenter 1\nblades 1 2 3\n").is_err());
        assert!(read_certificate("type star\ncolor R\n").is_err());
        assert!(read_certificate("type clique\ncolor X\nmembers 1\n").is_err());
        assert!(read_certificate("type clique\ncolor R\nmembers 1 1\n").is_err());
        assert!(read_certificate("type clique\ncolor R\nmembers 1\nextra\n").is_err());
        let e = read_certificate("type book\ncolor R\nspine 0 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEof);
    }

    fn color_strategy() -> impl Strategy<Value = Option<Color>> {
        prop_oneof![Just(None), Just(Some(Color::Red)), Just(Some(Color::Blue))]
    }

    proptest! {
        #[test]
        fn round_trip(
            kind in 0u8..3,
            color in color_strategy(),
            a in 0usize..50,
            b in 0usize..50,
            list in proptest::collection::vec(0usize..100, 0..12),
        ) {
            let cert = match kind {
                0 => Certificate::Fan(FanCertificate {
                    center: a,
                    blades: list.chunks(2).filter(|p| p.len() == 2).map(|p| (p[0], p[1])).collect(),
                    color,
                }),
                1 => Certificate::Clique(CliqueCertificate { members: VertexSet::from(list), color }),
                _ => Certificate::Book(BookCertificate { spine: (a, b), pages: list, color }),
            };
            prop_assert_eq!(read_certificate(&write_certificate(&cert)).unwrap(), cert);
        }
    }
}
