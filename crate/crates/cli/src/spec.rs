//! Group files, G-set specifications and element expressions.

use std::fmt;
use std::path::Path;

use relfrob::gln::{build_gl_flag, GlGroup};
use relfrob::group::{
    alternating, cyclic, dihedral, group_from_perm_generators, quaternion, symmetric, Element, FiniteGroup, GSet,
    Permutation, PermutationGroup,
};
use relfrob::Error;

/// A syntax or resolution problem in user input; always exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError { line: None, message: message.into() }
    }

    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError { line: Some(line), message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {}: {}", l, self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Perm { degree: usize, generators: Vec<String> },
    Cayley { table: Vec<Vec<usize>> },
    Builtin { name: String, n: Option<usize>, q: Option<usize> },
}

fn parse_builtin(rest: &str, line: usize) -> Result<GroupSpec, ParseError> {
    let mut words = rest.split_whitespace();
    let name = words.next().ok_or_else(|| ParseError::at(line, "builtin needs a name"))?.to_string();
    let (mut n, mut q) = (None, None);
    for w in words {
        let (key, value) = w
            .split_once('=')
            .ok_or_else(|| ParseError::at(line, format!("expected key=value, found {:?}", w)))?;
        let v: usize = value
            .parse()
            .map_err(|_| ParseError::at(line, format!("{} must be a positive integer", key)))?;
        match key {
            "n" => n = Some(v),
            "q" => q = Some(v),
            _ => return Err(ParseError::at(line, format!("unknown builtin parameter {:?}", key))),
        }
    }
    Ok(GroupSpec::Builtin { name, n, q })
}

/// Parses the text of a group file. `base` resolves relative `cayley:` paths.
pub fn parse_group_text(text: &str, base: &Path) -> Result<GroupSpec, ParseError> {
    let mut degree = None;
    let mut gens: Vec<(usize, String)> = Vec::new();
    let mut other: Option<(usize, GroupSpec)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| ParseError::at(line, format!("expected 'key: value', found {:?}", content)))?;
        let value = value.trim();
        match key.trim() {
            "degree" => {
                let d: usize = value
                    .parse()
                    .map_err(|_| ParseError::at(line, format!("degree must be a positive integer, found {:?}", value)))?;
                if d == 0 || degree.is_some() {
                    return Err(ParseError::at(line, "degree must be positive and given once"));
                }
                degree = Some(d);
            }
            "gen" => gens.push((line, value.to_string())),
            "cayley" => {
                let path = base.join(value);
                let data = std::fs::read_to_string(&path)
                    .map_err(|e| ParseError::at(line, format!("cannot read {}: {}", path.display(), e)))?;
                let json: serde_json::Value = serde_json::from_str(&data)
                    .map_err(|e| ParseError::at(line, format!("{}: {}", path.display(), e)))?;
                let table: Vec<Vec<usize>> = serde_json::from_value(json["table"].clone())
                    .map_err(|e| ParseError::at(line, format!("{}: table must be a square array of indices: {}", path.display(), e)))?;
                set_once(&mut other, line, GroupSpec::Cayley { table })?;
            }
            "builtin" => {
                let spec = parse_builtin(value, line)?;
                set_once(&mut other, line, spec)?;
            }
            k => return Err(ParseError::at(line, format!("unknown key {:?}", k))),
        }
    }
    match (degree, other) {
        (Some(d), None) => {
            for (line, g) in &gens {
                Permutation::parse_cycles(g, d).map_err(|e| ParseError::at(*line, e.to_string()))?;
            }
            Ok(GroupSpec::Perm { degree: d, generators: gens.into_iter().map(|(_, g)| g).collect() })
        }
        (None, Some((line, spec))) => {
            if let Some((gl, _)) = gens.first() {
                return Err(ParseError::at(*gl, format!("'gen' cannot be combined with the source on line {}", line)));
            }
            Ok(spec)
        }
        (None, None) if !gens.is_empty() => Err(ParseError::at(gens[0].0, "'gen' lines need a 'degree' line")),
        (None, None) => Err(ParseError::new("group file defines no group")),
        (Some(_), Some((line, _))) => Err(ParseError::at(line, "a permutation group cannot also have another source")),
    }
}

fn set_once(slot: &mut Option<(usize, GroupSpec)>, line: usize, spec: GroupSpec) -> Result<(), ParseError> {
    if let Some((prev, _)) = slot {
        return Err(ParseError::at(line, format!("group source already given on line {}", prev)));
    }
    *slot = Some((line, spec));
    Ok(())
}

/// Reads a group file; an argument starting with `builtin:` is parsed inline.
pub fn parse_group_file(path: &str) -> Result<GroupSpec, ParseError> {
    if path.starts_with("builtin:") {
        return parse_group_text(path, Path::new("."));
    }
    let p = Path::new(path);
    let text = std::fs::read_to_string(p).map_err(|e| ParseError::new(format!("cannot read {}: {}", path, e)))?;
    parse_group_text(&text, p.parent().unwrap_or(Path::new(".")))
}

/// A concrete group with whatever extra structure its source provides.
pub struct Resolved {
    pub group: FiniteGroup,
    pub perm: Option<PermutationGroup>,
    pub gl: Option<GlGroup>,
    /// Elements named `g0, g1, …` in words.
    pub generators: Vec<Element>,
    pub description: String,
}

/// Errors from building the group: parse problems or size limits.
pub enum ResolveError {
    Parse(ParseError),
    Lib(Error),
}

impl From<ParseError> for ResolveError {
    fn from(e: ParseError) -> Self {
        ResolveError::Parse(e)
    }
}

impl From<Error> for ResolveError {
    fn from(e: Error) -> Self {
        ResolveError::Lib(e)
    }
}

fn too_large(what: &str, size: u128, cap: usize) -> ResolveError {
    ResolveError::Lib(Error::TooLarge { what: what.to_string(), size, bound: cap as u128 })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |a, k| a.saturating_mul(k))
}

fn from_perm(pg: PermutationGroup, description: String) -> Resolved {
    Resolved {
        group: pg.group.clone(),
        generators: pg.generators.clone(),
        perm: Some(pg),
        gl: None,
        description,
    }
}

pub fn resolve(spec: &GroupSpec, cap: usize) -> Result<Resolved, ResolveError> {
    match spec {
        GroupSpec::Perm { degree, generators } => {
            let perms = generators
                .iter()
                .map(|g| Permutation::parse_cycles(g, *degree))
                .collect::<relfrob::Result<Vec<_>>>()?;
            let pg = group_from_perm_generators(*degree, &perms, cap)?;
            let description = format!("permutation group of degree {}", degree);
            Ok(from_perm(pg, description))
        }
        GroupSpec::Cayley { table } => {
            if table.len() > cap {
                return Err(too_large("Cayley table", table.len() as u128, cap));
            }
            let group = FiniteGroup::from_cayley(table).map_err(|e| ParseError::new(e.to_string()))?;
            // g<i> names the element written as i in the file
            let generators = (0..group.order())
                .map(|i| group.labels().iter().position(|l| *l == i.to_string()).unwrap())
                .collect();
            Ok(Resolved { group, perm: None, gl: None, generators, description: "Cayley table".into() })
        }
        GroupSpec::Builtin { name, n, q } => resolve_builtin(name, *n, *q, cap),
    }
}

fn resolve_builtin(name: &str, n: Option<usize>, q: Option<usize>, cap: usize) -> Result<Resolved, ResolveError> {
    let upper = name.to_ascii_uppercase();
    if upper == "GL" {
        let (n, q) = match (n, q) {
            (Some(n), Some(q)) => (n, q),
            _ => return Err(ParseError::new("builtin GL needs n=<n> and q=<q>").into()),
        };
        if n == 0 {
            return Err(ParseError::new("GL needs n ≥ 1").into());
        }
        let gl = build_gl_flag(n, q, cap).map_err(|e| match e {
            Error::InvalidInput(m) => ResolveError::Parse(ParseError::new(m)),
            e => ResolveError::Lib(e),
        })?;
        return Ok(Resolved {
            group: gl.group.clone(),
            generators: gl.generators.clone(),
            perm: None,
            description: format!("GL_{}(F_{})", n, q),
            gl: Some(gl),
        });
    }
    if upper == "Q8" {
        return Ok(from_perm(quaternion(), "Q8".into()));
    }
    let (family, digits) = upper.split_at(1);
    let size: usize = match (digits, n) {
        ("", Some(n)) => n,
        (d, None) if !d.is_empty() => d.parse().map_err(|_| ParseError::new(format!("unknown builtin {:?}", name)))?,
        _ => return Err(ParseError::new(format!("unknown builtin {:?}", name)).into()),
    };
    if size == 0 {
        return Err(ParseError::new("builtin size must be positive").into());
    }
    let (order, build): (u128, fn(usize) -> PermutationGroup) = match family {
        "S" => (factorial(size), symmetric),
        "A" => (if size < 2 { 1 } else { factorial(size) / 2 }, alternating),
        "C" => (size as u128, cyclic),
        "D" if size >= 3 => (2 * size as u128, dihedral),
        _ => return Err(ParseError::new(format!("unknown builtin {:?}", name)).into()),
    };
    if order > cap as u128 {
        return Err(too_large(&format!("{}{}", family, size), order, cap));
    }
    Ok(from_perm(build(size), format!("{}{}", family, size)))
}

impl Resolved {
    /// Parses `e`, a word `g0*g1^-1`, cycle notation, an element label, or a
    /// plain table index.
    pub fn element(&self, expr: &str) -> Result<Element, ParseError> {
        let s = expr.trim();
        if s == "e" {
            return Ok(0);
        }
        if s.starts_with('(') {
            if let Some(pg) = &self.perm {
                return pg.element(s).map_err(|e| ParseError::new(e.to_string()));
            }
        }
        if s.starts_with('g') {
            return self.word(s);
        }
        if let Some(i) = self.group.labels().iter().position(|l| l == s) {
            return Ok(i);
        }
        if let Ok(i) = s.parse::<usize>() {
            if i < self.group.order() {
                return Ok(i);
            }
        }
        Err(ParseError::new(format!("cannot parse element {:?}", expr)))
    }

    fn word(&self, s: &str) -> Result<Element, ParseError> {
        let g = &self.group;
        let mut acc = 0;
        for factor in s.split('*') {
            let factor = factor.trim();
            if factor == "e" {
                continue;
            }
            let body = factor
                .strip_prefix('g')
                .ok_or_else(|| ParseError::new(format!("bad word factor {:?}", factor)))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.trim().parse::<i64>().map_err(|_| ParseError::new(format!("bad exponent in {:?}", factor)))?),
                None => (body, 1),
            };
            let i: usize = idx.trim().parse().map_err(|_| ParseError::new(format!("bad generator in {:?}", factor)))?;
            let gen = *self
                .generators
                .get(i)
                .ok_or_else(|| ParseError::new(format!("g{} does not exist; there are {} generators", i, self.generators.len())))?;
            acc = g.mul(acc, g.pow(gen, exp));
        }
        Ok(acc)
    }

    /// `natural`, `regular`, `point`, `flags`, or `cosets:<expr>;<expr>…`.
    pub fn gset(&self, spec: &str) -> Result<GSet, ParseError> {
        let spec = spec.trim();
        match spec {
            "natural" => match (&self.perm, &self.gl) {
                (Some(pg), _) => Ok(pg.natural.clone()),
                (_, Some(gl)) => Ok(gl.natural.clone()),
                _ => Err(ParseError::new("a Cayley-table group has no natural action")),
            },
            "regular" => Ok(GSet::regular(&self.group)),
            "point" => Ok(GSet::point(&self.group)),
            "flags" => self
                .gl
                .as_ref()
                .map(|gl| gl.flags.clone())
                .ok_or_else(|| ParseError::new("flags need a builtin GL group")),
            _ => {
                let gens = spec
                    .strip_prefix("cosets:")
                    .ok_or_else(|| ParseError::new(format!("unknown G-set {:?}", spec)))?;
                let elems = self.elements(gens)?;
                Ok(GSet::cosets(&self.group, &elems))
            }
        }
    }

    /// `;`-separated element expressions; empty means none.
    pub fn elements(&self, list: &str) -> Result<Vec<Element>, ParseError> {
        list.split(';').map(str::trim).filter(|s| !s.is_empty()).map(|s| self.element(s)).collect()
    }
}
