//! Parsers for the compact list syntaxes accepted on the command line.

use lefschetz_core::enumeration::{Filter, FilterSet};
use lefschetz_core::{CheckId, Error, FibrationNumerics, HypothesisFlags};

fn items(list: &str) -> impl Iterator<Item = &str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty())
}

/// `h:count` pairs, e.g. `1:3,2:0`. Unlisted types count zero.
pub fn parse_sep(list: &str) -> Result<Vec<(u64, u64)>, String> {
    items(list)
        .map(|item| {
            let (h, c) = item
                .split_once(':')
                .ok_or_else(|| format!("separating entry {item:?} must have the form h:count"))?;
            let h = h
                .trim()
                .parse::<u64>()
                .map_err(|_| format!("separating type in {item:?} must be a positive integer"))?;
            let c = c.trim().parse::<u64>().map_err(|_| {
                format!("separating count in {item:?} must be a non-negative integer")
            })?;
            Ok((h, c))
        })
        .collect()
}

pub fn parse_census(g: u64, n: u64, sep: &str) -> Result<FibrationNumerics, String> {
    let pairs = parse_sep(sep)?;
    FibrationNumerics::from_sparse(g, n, &pairs).map_err(|e| e.to_string())
}

/// Comma-separated check codes or names; `all` selects the whole registry.
pub fn parse_checks(list: &str) -> Result<Vec<CheckId>, Error> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut ids = items(list)
        .map(str::parse)
        .collect::<Result<Vec<CheckId>, _>>()?;
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

pub fn parse_filters(list: &str) -> Result<FilterSet, Error> {
    let filters = items(list)
        .map(str::parse)
        .collect::<Result<Vec<Filter>, _>>()?;
    Ok(FilterSet::from_filters(filters))
}

/// `treat_as_realizable`, `simply_connected` and `b2plus=K`.
pub fn parse_flags(list: &str) -> Result<HypothesisFlags, String> {
    let mut flags = HypothesisFlags::default();
    for item in items(list) {
        match item.split_once('=') {
            None if item == "treat_as_realizable" => flags.treat_as_realizable = true,
            None if item == "simply_connected" => flags.simply_connected = true,
            Some(("b2plus", k)) => {
                flags.b2plus =
                    Some(k.trim().parse().map_err(|_| {
                        format!("b2plus value {k:?} must be a non-negative integer")
                    })?)
            }
            _ => return Err(format!(
                "unknown flag {item:?}; expected treat_as_realizable, simply_connected or b2plus=K"
            )),
        }
    }
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sep_lists() {
        assert_eq!(parse_sep("1:3"), Ok(vec![(1, 3)]));
        assert_eq!(parse_sep(" 1:3 , 2:0 "), Ok(vec![(1, 3), (2, 0)]));
        assert_eq!(parse_sep(""), Ok(vec![]));
        assert!(parse_sep("1:-3").unwrap_err().contains("non-negative"));
        assert!(parse_sep("13").is_err());
    }

    #[test]
    fn census_errors_name_the_invariant() {
        assert_eq!(
            parse_census(2, 4, "1:3").unwrap(),
            FibrationNumerics::new(2, 4, vec![3]).unwrap()
        );
        assert!(parse_census(1, 4, "").unwrap_err().contains("genus"));
        assert!(parse_census(2, 4, "2:1").unwrap_err().contains("outside"));
        assert!(parse_census(2, 0, "").unwrap_err().contains("n >= 1"));
    }

    #[test]
    fn check_lists() {
        assert_eq!(parse_checks("all").unwrap().len(), 22);
        assert_eq!(
            parse_checks("C09,c01,C09").unwrap(),
            vec![CheckId::C01, CheckId::C09]
        );
        assert!(parse_checks("C99").is_err());
    }

    #[test]
    fn flag_lists() {
        let f = parse_flags("simply_connected,b2plus=3").unwrap();
        assert!(f.simply_connected && !f.treat_as_realizable);
        assert_eq!(f.b2plus, Some(3));
        assert!(parse_flags("fast").is_err());
        assert!(parse_flags("b2plus=x").is_err());
    }

    #[test]
    fn filter_lists() {
        assert_eq!(
            parse_filters("basic,integral_chi_h,signature_bound_c05").unwrap(),
            FilterSet::admissible()
        );
        assert_eq!(parse_filters("basic").unwrap(), FilterSet::basic());
        assert!(parse_filters("basic,nope").is_err());
    }
}
