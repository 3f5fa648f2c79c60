//! Group spec strings: `zn:<n>`, `qn:<n>`, `gq:<alpha>`,
//! `prod:<atom>x<atom>[x...]` and `table:<path>`.

use crate::error::{Error, Result};
use crate::group::{
    cyclic_group, dicyclic_group, direct_product, generalized_quaternion, read_table_file,
    FiniteGroup,
};

/// Largest group order a spec may describe.
pub const MAX_SPEC_ORDER: usize = 1 << 16;

pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let fail = |reason: String| Error::GroupSpec {
        spec: spec.to_string(),
        reason,
    };
    if let Some(path) = spec.strip_prefix("table:") {
        if path.is_empty() {
            return Err(fail("missing table path".into()));
        }
        return read_table_file(path);
    }
    if let Some(rest) = spec.strip_prefix("prod:") {
        let mut order = 1usize;
        let mut groups = Vec::new();
        for atom in rest.split('x') {
            let g = parse_atom(atom).map_err(&fail)?;
            order = order.saturating_mul(g.order());
            if order > MAX_SPEC_ORDER {
                return Err(fail(format!("order exceeds {MAX_SPEC_ORDER}")));
            }
            groups.push(g);
        }
        if groups.len() < 2 {
            return Err(fail("a product needs at least two factors".into()));
        }
        let mut it = groups.into_iter();
        let first = it.next().expect("nonempty");
        return Ok(it.fold(first, |acc, g| direct_product(&acc, &g)));
    }
    parse_atom(spec).map_err(fail)
}

fn parse_atom(atom: &str) -> std::result::Result<FiniteGroup, String> {
    let (kind, arg) = atom
        .split_once(':')
        .ok_or_else(|| format!("expected <kind>:<number>, got `{atom}`"))?;
    let value: usize = arg
        .parse()
        .map_err(|_| format!("`{arg}` is not a non-negative integer"))?;
    let group = match kind {
        "zn" => {
            if value > MAX_SPEC_ORDER {
                return Err(format!("order exceeds {MAX_SPEC_ORDER}"));
            }
            cyclic_group(value)
        }
        "qn" => {
            if value > MAX_SPEC_ORDER / 4 {
                return Err(format!("order exceeds {MAX_SPEC_ORDER}"));
            }
            dicyclic_group(value)
        }
        "gq" => {
            if value > 15 {
                return Err(format!("order exceeds {MAX_SPEC_ORDER}"));
            }
            generalized_quaternion(value as u32)
        }
        other => return Err(format!("unknown group kind `{other}`")),
    };
    group.map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms() {
        assert_eq!(parse_group_spec("zn:8").unwrap().order(), 8);
        assert_eq!(parse_group_spec("qn:3").unwrap().order(), 12);
        assert_eq!(parse_group_spec("gq:3").unwrap().order(), 16);
    }

    #[test]
    fn products() {
        let g = parse_group_spec("prod:zn:9xzn:3").unwrap();
        assert_eq!((g.order(), g.label()), (27, "Z_9 x Z_3"));
        assert_eq!(parse_group_spec("prod:zn:2xzn:2xzn:2").unwrap().order(), 8);
        assert_eq!(parse_group_spec("prod:gq:2xzn:2").unwrap().order(), 16);
    }

    #[test]
    fn rejects() {
        for bad in [
            "",
            "zn",
            "zn:",
            "zn:0",
            "zn:x",
            "qn:1",
            "gq:1",
            "foo:3",
            "prod:zn:3",
            "table:",
            "zn:100000",
        ] {
            assert!(parse_group_spec(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn table_spec() {
        let dir = std::env::temp_dir().join(format!("pg-spec-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("z3.txt");
        std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        let g = parse_group_spec(&format!("table:{}", path.display())).unwrap();
        assert_eq!(g.order(), 3);
        assert!(parse_group_spec(&format!("table:{}", dir.join("missing").display())).is_err());
        std::fs::remove_dir_all(dir).unwrap();
    }
}
