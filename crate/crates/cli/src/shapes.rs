use brokentoric::Shape;

/// Parses generator tokens such as `cube 3`, `skeleton cube 3` or
/// `product polygon 3 simplex 1`. `k` feeds every `skeleton`.
pub fn parse_shape(tokens: &[String], k: Option<usize>) -> Result<Shape, String> {
    let mut pos = 0;
    let shape = parse(tokens, &mut pos, k)?;
    if pos != tokens.len() {
        return Err(format!("unexpected trailing input `{}`", tokens[pos..].join(" ")));
    }
    Ok(shape)
}

fn next<'a>(tokens: &'a [String], pos: &mut usize) -> Result<&'a str, String> {
    let t = tokens.get(*pos).ok_or("generator description ended early")?;
    *pos += 1;
    Ok(t)
}

fn number(tokens: &[String], pos: &mut usize, what: &str) -> Result<usize, String> {
    let t = next(tokens, pos).map_err(|_| format!("{what} needs a size"))?;
    t.parse().map_err(|_| format!("`{t}` is not a size for {what}"))
}

fn parse(tokens: &[String], pos: &mut usize, k: Option<usize>) -> Result<Shape, String> {
    let head = next(tokens, pos)?;
    Ok(match head {
        "cube" => Shape::Cube(number(tokens, pos, "cube")?),
        "simplex" => Shape::Simplex(number(tokens, pos, "simplex")?),
        "cross" | "cross-polytope" => Shape::CrossPolytope(number(tokens, pos, "cross-polytope")?),
        "polygon" => Shape::Polygon(number(tokens, pos, "polygon")?),
        "triangle" => Shape::Polygon(3),
        "square" => Shape::Cube(2),
        "pyramid" => Shape::SquarePyramid,
        "necklace" => Shape::Necklace,
        "example" => match next(tokens, pos)? {
            "2.6" => Shape::Necklace,
            "2.7" => Shape::TwoTriangles,
            other => return Err(format!("unknown example `{other}` (expected 2.6 or 2.7)")),
        },
        "skeleton" => {
            let inner = parse(tokens, pos, k)?;
            let k = k.ok_or("skeleton needs --k")?;
            Shape::Skeleton(Box::new(inner), k)
        }
        "boundary" => Shape::Boundary(Box::new(parse(tokens, pos, k)?)),
        "product" => {
            let a = parse(tokens, pos, k)?;
            let b = parse(tokens, pos, k)?;
            Shape::Product(Box::new(a), Box::new(b))
        }
        other => return Err(format!("unknown generator `{other}`")),
    })
}
