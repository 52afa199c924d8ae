//! Textual notation for the graphs that appear in the catalogue.
//!
//! ```text
//! expr  := term (('|' | '+') term)*      '|' disjoint union, '+' join (left-assoc)
//! term  := [INT '*'] atom ['^' INT]      k copies; '^r' edge blow-up into K_r (r >= 3)
//! atom  := 'K' INT [',' INT]             complete / complete bipartite
//!        | 'P' INT | 'C' INT | 'S' INT | 'M' INT | 'E' INT
//!        | 'T' INT '(' INT ')'           Turán graph T_p(n)
//!        | 'petersen' | 'bowtie'
//!        | 'g6:' GRAPH6                  raw graph6 up to the next space, ')' or '+'
//!        | '(' expr ')'
//! ```
//!
//! `S_n` is the star on `n` vertices, `M_n` the matching on `n` vertices and
//! `E_n` the edgeless graph, so `S4^3` is three triangles sharing a vertex.

use super::{compose, graph6, ComposeMode, Graph, MAX_ORDER};
use crate::constructions::{edge_blowup, turan_graph};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        depth: 0,
    };
    p.skip_ws();
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

const MAX_DEPTH: usize = 32;

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let mut v: usize = 0;
        while let Some(d @ b'0'..=b'9') = self.peek() {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((d - b'0') as usize))
                .filter(|&v| v <= 4096)
                .ok_or_else(|| Error::parse(start, "integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected an integer"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Graph> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::parse(self.pos, "nesting too deep"));
        }
        let mut g = self.term()?;
        loop {
            self.skip_ws();
            let mode = match self.peek() {
                Some(b'|') => ComposeMode::DisjointUnion,
                Some(b'+') => ComposeMode::Join,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            g = compose(&g, &rhs, mode)?;
        }
        self.depth -= 1;
        Ok(g)
    }

    fn term(&mut self) -> Result<Graph> {
        self.skip_ws();
        let mut copies = 1;
        if matches!(self.peek(), Some(b'0'..=b'9')) {
            copies = self.int()?;
            self.expect(b'*')?;
        }
        let mut g = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let r = self.int()?;
            if r < 3 {
                return Err(Error::parse(at, "blow-up clique order must be at least 3"));
            }
            g = edge_blowup(&g, r - 1)?;
        }
        if copies * g.order() > MAX_ORDER {
            return Err(Error::OrderCap {
                order: copies * g.order(),
                cap: MAX_ORDER,
            });
        }
        g.copies(copies)
    }

    fn atom(&mut self) -> Result<Graph> {
        self.skip_ws();
        let at = self.pos;
        if self.eat(b'(') {
            let g = self.expr()?;
            self.expect(b')')?;
            return Ok(g);
        }
        let rest = &self.src[self.pos..];
        for (word, make) in [("petersen", petersen as fn() -> Result<Graph>), ("bowtie", bowtie)] {
            if rest.starts_with(word.as_bytes()) {
                self.pos += word.len();
                return make();
            }
        }
        if rest.starts_with(b"g6:") {
            self.pos += 3;
            let start = self.pos;
            while let Some(b) = self.peek() {
                if matches!(b, b' ' | b'\t' | b')' | b'+') {
                    break;
                }
                self.pos += 1;
            }
            let s = std::str::from_utf8(&self.src[start..self.pos])
                .map_err(|_| Error::parse(start, "graph6 must be ASCII"))?;
            return graph6::decode(s).map_err(|e| shift(e, start));
        }
        let Some(kind) = self.peek() else {
            return Err(Error::parse(at, "expected a graph"));
        };
        self.pos += 1;
        let n = self.int()?;
        if n > MAX_ORDER && kind != b'T' {
            return Err(Error::OrderCap {
                order: n,
                cap: MAX_ORDER,
            });
        }
        let g = match kind {
            b'K' => {
                if self.eat(b',') {
                    let b = self.int()?;
                    super::complete_bipartite(n, b)
                } else {
                    super::complete(n)
                }
            }
            b'P' => super::path(n),
            b'C' => super::cycle(n),
            b'S' => super::star(n),
            b'M' => super::matching(n),
            b'E' => Graph::empty(n),
            b'T' => {
                self.expect(b'(')?;
                let order = self.int()?;
                self.expect(b')')?;
                if n == 0 {
                    return Err(Error::parse(at, "Turán graph needs p >= 1"));
                }
                turan_graph(order, n)
            }
            _ => return Err(Error::parse(at, format!("unknown graph name '{}'", kind as char))),
        };
        g.map_err(|e| match e {
            Error::Parameter(reason) => Error::Parse { offset: at, reason },
            other => other,
        })
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, reason } => Error::Parse {
            offset: offset + by,
            reason,
        },
        other => other,
    }
}

fn petersen() -> Result<Graph> {
    Ok(super::petersen())
}

fn bowtie() -> Result<Graph> {
    edge_blowup(&super::star(3)?, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::is_isomorphic;
    use crate::graph::{complete, complete_bipartite, cycle};

    #[test]
    fn atoms() {
        assert_eq!(parse("K4").unwrap(), complete(4).unwrap());
        assert_eq!(parse("K2,3").unwrap(), complete_bipartite(2, 3).unwrap());
        assert_eq!(parse(" C5 ").unwrap(), cycle(5).unwrap());
        assert_eq!(parse("T3(7)").unwrap().size(), 16);
        assert_eq!(parse("g6:DQc").unwrap().size(), 4);
    }

    #[test]
    fn operators() {
        let two_k3 = parse("2*K3").unwrap();
        assert_eq!((two_k3.order(), two_k3.size()), (6, 6));
        assert!(is_isomorphic(&parse("M4^3").unwrap(), &two_k3));
        assert!(is_isomorphic(&parse("S3^3").unwrap(), &parse("bowtie").unwrap()));
        let wheel = parse("K1 + C4").unwrap();
        assert_eq!((wheel.order(), wheel.size()), (5, 8));
        assert_eq!(parse("(K3 | K2) + E1").unwrap().size(), 4 + 5);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("Q3"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse("K3 x"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse("M3"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse("K65"), Err(Error::OrderCap { .. })));
        assert!(matches!(parse("K3^2"), Err(Error::Parse { .. })));
        assert!(matches!(parse("g6:D?"), Err(Error::Parse { offset: 5, .. })));
        assert!(parse("((((((((((((((((((((((((((((((((((K1))))))))))))))))))))))))))))))))))").is_err());
        assert!(parse("").is_err());
    }
}
