//! Group expressions and their canonical text form.

use std::fmt;

/// How the top group of a semidirect product acts on the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionSpec {
    /// Every top generator acts by inversion.
    Inv,
    Triv,
    /// One permutation of base element indices per top generator, each a list
    /// of cycles.
    Perm(Vec<Vec<Vec<usize>>>),
}

/// Names a quotient generator: an element label, or `#i` for index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Label(String),
    Index(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Direct(Box<GroupExpr>, Box<GroupExpr>),
    Semidirect {
        base: Box<GroupExpr>,
        top: Box<GroupExpr>,
        action: ActionSpec,
    },
    Wreath(Box<GroupExpr>, Box<GroupExpr>),
    Quotient(Box<GroupExpr>, Vec<Word>),
    Named(String),
}

// binding strength: expr < term < factor < atom
const EXPR: u8 = 0;
const TERM: u8 = 1;
const FACTOR: u8 = 2;
const ATOM: u8 = 3;

impl GroupExpr {
    fn level(&self) -> u8 {
        match self {
            GroupExpr::Direct(..) => EXPR,
            GroupExpr::Semidirect { .. } => TERM,
            GroupExpr::Wreath(..) => FACTOR,
            _ => ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            write!(f, "(")?;
            self.write_at(f, EXPR)?;
            return write!(f, ")");
        }
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::Abelian(xs) => {
                let xs: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "Ab({})", xs.join(","))
            }
            GroupExpr::Named(name) => write!(f, "{name}"),
            GroupExpr::Direct(l, r) => {
                l.write_at(f, EXPR)?;
                write!(f, " x ")?;
                r.write_at(f, TERM)
            }
            GroupExpr::Semidirect { base, top, action } => {
                base.write_at(f, FACTOR)?;
                write!(f, " : ")?;
                top.write_at(f, FACTOR)?;
                write!(f, " [{action}]")
            }
            GroupExpr::Wreath(l, r) => {
                l.write_at(f, ATOM)?;
                write!(f, " wr ")?;
                r.write_at(f, FACTOR)
            }
            GroupExpr::Quotient(g, words) => {
                g.write_at(f, ATOM)?;
                let words: Vec<String> = words.iter().map(Word::to_string).collect();
                write!(f, "/<{}>", words.join(", "))
            }
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, EXPR)
    }
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionSpec::Inv => write!(f, "inv"),
            ActionSpec::Triv => write!(f, "triv"),
            ActionSpec::Perm(perms) => {
                write!(f, "perm:")?;
                for (i, cycles) in perms.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    if cycles.is_empty() {
                        write!(f, "()")?;
                    }
                    for c in cycles {
                        let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                        write!(f, "({})", c.join(" "))?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Label(s) => write!(f, "{s}"),
            Word::Index(i) => write!(f, "#{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> Box<GroupExpr> {
        Box::new(GroupExpr::Cyclic(n))
    }

    #[test]
    fn minimal_parentheses() {
        let e = GroupExpr::Direct(Box::new(GroupExpr::Wreath(c(2), c(2))), c(2));
        assert_eq!(e.to_string(), "C2 wr C2 x C2");
        let e = GroupExpr::Direct(c(2), Box::new(GroupExpr::Direct(c(3), c(4))));
        assert_eq!(e.to_string(), "C2 x (C3 x C4)");
        let e = GroupExpr::Wreath(Box::new(GroupExpr::Wreath(c(2), c(2))), c(2));
        assert_eq!(e.to_string(), "(C2 wr C2) wr C2");
        let e = GroupExpr::Semidirect {
            base: c(4),
            top: c(2),
            action: ActionSpec::Inv,
        };
        assert_eq!(e.to_string(), "C4 : C2 [inv]");
        let e = GroupExpr::Quotient(
            Box::new(GroupExpr::Direct(c(4), c(2))),
            vec![Word::Label("(g^2, g^0)".into()), Word::Index(3)],
        );
        assert_eq!(e.to_string(), "(C4 x C2)/<(g^2, g^0), #3>");
    }

    #[test]
    fn perm_actions() {
        let a = ActionSpec::Perm(vec![vec![vec![1, 4, 7], vec![2, 8, 5]], vec![]]);
        assert_eq!(a.to_string(), "perm:(1 4 7)(2 8 5);()");
    }
}
