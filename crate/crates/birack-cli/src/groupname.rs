//! Parser for catalog group names: `Z<n>`, `E<2^k>`, `D<2m>`, `Q8`, and
//! direct products joined with `x`, e.g. `Z4xZ2` or `Q8xZ2`.

use biracks::construct::{self, FiniteGroup};

pub fn parse_group(name: &str) -> Result<FiniteGroup, String> {
    let mut parts = name.split('x');
    let first = parts.next().ok_or_else(|| "empty group name".to_string())?;
    let mut group = parse_atom(first)?;
    for part in parts {
        let next = parse_atom(part)?;
        group = construct::direct_product(&group, &next).map_err(|e| e.to_string())?;
    }
    Ok(group)
}

fn parse_atom(token: &str) -> Result<FiniteGroup, String> {
    if token == "Q8" {
        return Ok(construct::quaternion8());
    }
    let (kind, digits) = token.split_at(1);
    let order: usize = digits
        .parse()
        .map_err(|_| format!("unrecognized group name `{token}`"))?;
    match kind {
        "Z" => construct::cyclic(order).map_err(|e| e.to_string()),
        "E" => {
            if !order.is_power_of_two() {
                return Err(format!(
                    "`{token}`: order of an elementary abelian 2-group must be a power of two"
                ));
            }
            construct::elementary_abelian(order.trailing_zeros()).map_err(|e| e.to_string())
        }
        "D" => construct::dihedral(order).map_err(|e| e.to_string()),
        _ => Err(format!("unrecognized group name `{token}`")),
    }
}
