"""Line-delimited registry serialization.

One identity per line:

    id <TAB> paper_location <TAB> tolerance <TAB> trust <TAB> lhs <TAB> rhs <TAB> description

where lhs/rhs are s-expressions over the closed plan variant set.  Floats are
rendered with repr() (shortest round-trip), so write -> read -> write is
bit-exact.  The grammar is documented in docs/registry_format.md.
"""

from __future__ import annotations

from .errors import ParseError
from .model import (ConstPlan, CubeIntegrandSpec, CubePlan, FactorProduct,
                    GeometricFactor, HalflinePlan, IdentityRecord,
                    ImagPartPlan, LinearFactor, LogMonomial, Plan,
                    RealPartPlan, ScalePlan, SeriesPlan, SeriesSpec, SumPlan)

# ---------------------------------------------------------------------------
# tokenizer / reader
# ---------------------------------------------------------------------------


def _tokenize(text: str):
    tokens = []  # (kind, value, position)
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch == '"':
            j = i + 1
            out = []
            while j < n and text[j] != '"':
                if text[j] == "\\" and j + 1 < n:
                    out.append(text[j + 1])
                    j += 2
                else:
                    out.append(text[j])
                    j += 1
            if j >= n:
                raise ParseError("unterminated string", i)
            tokens.append(("string", "".join(out), i))
            i = j + 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in '()"':
            j += 1
        tokens.append(("atom", text[i:j], i))
        i = j
    return tokens


def _parse_atom(raw: str, pos: int):
    if raw.lstrip("+-").isdigit():
        return int(raw)
    try:
        return float(raw)
    except ValueError:
        pass
    if raw and (raw[0].isalpha() or raw[0] in "_"):
        return raw  # symbol
    raise ParseError(f"unreadable atom {raw!r}", pos)


def parse_sexpr(text: str):
    """Parse one s-expression; returns nested lists / atoms."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    node, rest = _read(tokens, 0)
    if rest != len(tokens):
        raise ParseError("trailing tokens after expression", tokens[rest][2])
    return node


def _read(tokens, i):
    kind, value, pos = tokens[i]
    if kind == "(":
        out = []
        i += 1
        while i < len(tokens) and tokens[i][0] != ")":
            node, i = _read(tokens, i)
            out.append(node)
        if i >= len(tokens):
            raise ParseError("missing closing parenthesis", pos)
        return out, i + 1
    if kind == ")":
        raise ParseError("unexpected )", pos)
    if kind == "string":
        return ("#str", value), i + 1
    return _parse_atom(value, pos), i + 1


# ---------------------------------------------------------------------------
# writers
# ---------------------------------------------------------------------------

def _fmt_num(x) -> str:
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    return f"(c {_fmt_num(z.real)} {_fmt_num(z.imag)})"


def _fmt_string(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _product_to_sexpr(fp: FactorProduct) -> str:
    num = " ".join(_fmt_num(c) for c in fp.numerator)
    factors = " ".join(
        f"(factor {_fmt_num(f.slope)} {_fmt_num(complex(f.offset).real)} "
        f"{_fmt_num(complex(f.offset).imag)} {f.multiplicity})"
        for f in fp.factors
    )
    return f"(product (num {num}) {factors})"


def _spec_to_sexpr(spec: CubeIntegrandSpec) -> str:
    mu = " ".join(f"{_fmt_num(complex(m).real)} {_fmt_num(complex(m).imag)}"
                  for m in spec.exponents)
    parts = [f"(dim {spec.dim})", f"(mu {mu})",
             "(logw " + " ".join(_fmt_num(w) for w in spec.log_weights) + ")",
             f"(j {spec.log_power})", f"(m {_fmt_num(spec.log_shift)})",
             f"(part {spec.part})"]
    if spec.geometric is not None:
        g = spec.geometric
        parts.append(
            f"(geo {_fmt_num(complex(g.z).real)} {_fmt_num(complex(g.z).imag)} "
            + " ".join(_fmt_num(e) for e in g.exps) + ")")
    if spec.poly_log:
        monos = []
        for mono in spec.poly_log:
            pw = " ".join(f"(pw {v} {p})" for v, p in mono.powers)
            monos.append(f"(mono {_fmt_num(mono.coeff)} {pw})")
        parts.append("(poly " + " ".join(monos) + ")")
    return "(spec " + " ".join(parts) + ")"


def plan_to_sexpr(plan: Plan) -> str:
    if isinstance(plan, ConstPlan):
        return f"(const {_fmt_string(plan.expr)})"
    if isinstance(plan, HalflinePlan):
        if plan.weight:
            return (f"(halfline {_product_to_sexpr(plan.product)} "
                    f"(weight {_fmt_num(plan.weight)}))")
        return f"(halfline {_product_to_sexpr(plan.product)})"
    if isinstance(plan, CubePlan):
        return f"(cube {_spec_to_sexpr(plan.spec)})"
    if isinstance(plan, SeriesPlan):
        s = plan.spec
        parts = [f"(series {s.family} {s.acceleration}"]
        parts.extend(f"(param {name} {_fmt_param(value)})" for name, value in s.params)
        return " ".join(parts) + ")"
    if isinstance(plan, ScalePlan):
        return f"(scale {_fmt_complex(plan.factor)} {plan_to_sexpr(plan.inner)})"
    if isinstance(plan, RealPartPlan):
        return f"(re {plan_to_sexpr(plan.inner)})"
    if isinstance(plan, ImagPartPlan):
        return f"(im {plan_to_sexpr(plan.inner)})"
    if isinstance(plan, SumPlan):
        return "(sum " + " ".join(plan_to_sexpr(p) for p in plan.terms) + ")"
    raise TypeError(f"cannot serialize plan {type(plan).__name__}")


def _fmt_param(value) -> str:
    if isinstance(value, str):
        return _fmt_string(value)
    if isinstance(value, complex):
        return _fmt_complex(value)
    return _fmt_num(value)


# ---------------------------------------------------------------------------
# readers (node -> model)
# ---------------------------------------------------------------------------

def _expect_head(node, name: str):
    if not isinstance(node, list) or not node or node[0] != name:
        raise ParseError(f"expected ({name} ...) form", 0)
    return node[1:]


def _node_complex(node) -> complex:
    body = _expect_head(node, "c")
    return complex(float(body[0]), float(body[1]))


def _node_product(node) -> FactorProduct:
    body = _expect_head(node, "product")
    numerator = (1.0,)
    factors = []
    for item in body:
        if isinstance(item, list) and item and item[0] == "num":
            numerator = tuple(float(v) for v in item[1:])
        elif isinstance(item, list) and item and item[0] == "factor":
            _, slope, ore, oim, mult = item
            factors.append(LinearFactor(float(slope), complex(float(ore), float(oim)),
                                        int(mult)))
        else:
            raise ParseError("unexpected item in product", 0)
    return FactorProduct(factors=tuple(factors), numerator=numerator)


def _node_spec(node) -> CubeIntegrandSpec:
    body = _expect_head(node, "spec")
    fields = {}
    for item in body:
        if not isinstance(item, list) or not item:
            raise ParseError("unexpected item in spec", 0)
        fields[item[0]] = item[1:]
    dim = int(fields["dim"][0])
    raw_mu = fields["mu"]
    exponents = tuple(complex(float(raw_mu[2 * i]), float(raw_mu[2 * i + 1]))
                      for i in range(len(raw_mu) // 2))
    geo = None
    if "geo" in fields:
        g = fields["geo"]
        geo = GeometricFactor(z=complex(float(g[0]), float(g[1])),
                              exps=tuple(float(e) for e in g[2:]))
    poly = ()
    if "poly" in fields:
        monos = []
        for m in fields["poly"]:
            mb = _expect_head(m, "mono")
            coeff = float(mb[0])
            powers = tuple((int(p[1]), int(p[2])) for p in mb[1:])
            monos.append(LogMonomial(coeff=coeff, powers=powers))
        poly = tuple(monos)
    return CubeIntegrandSpec(
        dim=dim,
        exponents=exponents,
        log_weights=tuple(float(w) for w in fields["logw"]),
        log_power=int(fields["j"][0]),
        log_shift=float(fields["m"][0]),
        geometric=geo,
        poly_log=poly,
        part=str(fields["part"][0]),
    )


def sexpr_to_plan(node) -> Plan:
    if isinstance(node, str):
        node = parse_sexpr(node)
    if not isinstance(node, list) or not node:
        raise ParseError("plan must be a list form", 0)
    head = node[0]
    if head == "const":
        return ConstPlan(expr=node[1][1])
    if head == "halfline":
        product = _node_product(node[1])
        weight = 0.0
        for extra in node[2:]:
            if isinstance(extra, list) and extra and extra[0] == "weight":
                weight = float(extra[1])
        return HalflinePlan(product=product, weight=weight)
    if head == "cube":
        return CubePlan(spec=_node_spec(node[1]))
    if head == "series":
        family = str(node[1])
        acceleration = str(node[2])
        params = []
        for item in node[3:]:
            body = _expect_head(item, "param")
            name = str(body[0])
            raw = body[1]
            if isinstance(raw, tuple) and raw and raw[0] == "#str":
                value = raw[1]
            elif isinstance(raw, list):
                value = _node_complex(raw)
            else:
                value = raw
            params.append((name, value))
        return SeriesPlan(spec=SeriesSpec(family=family, params=tuple(params),
                                          acceleration=acceleration))
    if head == "scale":
        return ScalePlan(factor=_node_complex(node[1]), inner=sexpr_to_plan(node[2]))
    if head == "re":
        return RealPartPlan(inner=sexpr_to_plan(node[1]))
    if head == "im":
        return ImagPartPlan(inner=sexpr_to_plan(node[1]))
    if head == "sum":
        return SumPlan(terms=tuple(sexpr_to_plan(p) for p in node[1:]))
    raise ParseError(f"unknown plan head {head!r}", 0)


# ---------------------------------------------------------------------------
# records and registry files
# ---------------------------------------------------------------------------

def record_to_line(rec: IdentityRecord) -> str:
    fields = (rec.id, rec.paper_location, repr(float(rec.tolerance)), rec.trust,
              plan_to_sexpr(rec.lhs), plan_to_sexpr(rec.rhs), rec.description)
    for f in fields:
        if "\t" in f or "\n" in f:
            raise ValueError("registry fields must not contain tabs or newlines")
    return "\t".join(fields)


def line_to_record(line: str) -> IdentityRecord:
    parts = line.rstrip("\n").split("\t")
    if len(parts) != 7:
        raise ParseError(f"expected 7 tab-separated fields, got {len(parts)}", 0)
    rec_id, location, tol, trust, lhs, rhs, description = parts
    return IdentityRecord(
        id=rec_id,
        description=description,
        lhs=sexpr_to_plan(lhs),
        rhs=sexpr_to_plan(rhs),
        tolerance=float(tol),
        paper_location=location,
        trust=trust,
    )


def dump_records(records) -> str:
    return "".join(record_to_line(r) + "\n" for r in records)


def load_records(text: str):
    out = []
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        out.append(line_to_record(line))
    return out
