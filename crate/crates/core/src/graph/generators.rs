use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `K_{1,order-1}` with the center at id 0.
    Star,
    Null,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Null,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Null => "null",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidGenerator(format!("unknown graph family `{s}`")))
    }
}

/// Standard member of `family` on `order` vertices.
pub fn generator(family: Family, order: usize) -> Result<Graph> {
    if order == 0 {
        return Err(Error::InvalidGenerator(format!(
            "{family} graph needs at least one vertex"
        )));
    }
    let mut b = GraphBuilder::new(order);
    match family {
        Family::Path => {
            for v in 1..order {
                b.add_edge(v - 1, v)?;
            }
        }
        Family::Cycle => {
            if order < 3 {
                return Err(Error::InvalidGenerator(format!(
                    "cycle needs at least 3 vertices, got {order}"
                )));
            }
            for v in 0..order {
                b.add_edge(v, (v + 1) % order)?;
            }
        }
        Family::Complete => {
            for u in 0..order {
                for v in u + 1..order {
                    b.add_edge(u, v)?;
                }
            }
        }
        Family::Star => {
            for v in 1..order {
                b.add_edge(0, v)?;
            }
        }
        Family::Null => {}
    }
    Ok(b.build())
}
