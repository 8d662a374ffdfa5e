"""JSON model files and canonical report encoding.

Every rational is written as an integer string ("3", "-2") or "num/den"
in lowest terms, so files round-trip exactly.  Model files carry a
``kind`` field naming one of ``polynomial``, ``forms``, ``pencil``,
``realization`` or ``rank``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import InputError
from .matroid import RankFunction
from .poly import LinearForm, Point, Polynomial
from .realroots import UnivariatePolynomial
from .spectra import RealizationMatrix, SymmetricMatrix, SymmetricPencil

KINDS = ("polynomial", "forms", "pencil", "realization", "rank")

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


def parse_rational(value: Any, where: str = "value") -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RATIONAL.match(value):
        raise InputError(f"{where}: {value!r} is not an integer or 'num/den' string")
    num, _, den = value.partition("/")
    if den and int(den) == 0:
        raise InputError(f"{where}: zero denominator in {value!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _int(value: Any, where: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputError(f"{where}: expected an integer >= {minimum}, got {value!r}")
    return value


def _list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list")
    return value


def encode_point(x) -> list[str]:
    return [format_rational(c) for c in x]


def decode_point(values: Any, where: str = "point") -> Point:
    return tuple(parse_rational(v, f"{where}[{i}]") for i, v in enumerate(_list(values, where)))


def encode_polynomial(p: Polynomial) -> list[dict]:
    return [
        {"exponents": list(exp), "coeff": format_rational(c)} for exp, c in p.sorted_terms()
    ]


def decode_polynomial(nvars: int, terms: Any, where: str = "terms") -> Polynomial:
    out: dict[tuple[int, ...], Fraction] = {}
    for t, term in enumerate(_list(terms, where)):
        loc = f"{where}[{t}]"
        if not isinstance(term, dict):
            raise InputError(f"{loc}: expected an object with 'exponents' and 'coeff'")
        exps = _list(term.get("exponents"), f"{loc}.exponents")
        if len(exps) != nvars:
            raise InputError(f"{loc}.exponents: length {len(exps)} != nvars {nvars}")
        exp = tuple(_int(a, f"{loc}.exponents[{i}]") for i, a in enumerate(exps))
        if exp in out:
            raise InputError(f"{loc}: duplicate monomial {list(exp)}")
        out[exp] = parse_rational(term.get("coeff"), f"{loc}.coeff")
    return Polynomial(nvars, out)


def encode_univariate(u: UnivariatePolynomial) -> list[str]:
    return [format_rational(c) for c in u.coeffs]


def encode_matrix(rows) -> list[list[str]]:
    return [[format_rational(a) for a in r] for r in rows]


def encode_pencil(a: SymmetricPencil) -> dict:
    return {
        "nvars": a.nvars,
        "size": a.size,
        "mats": [[format_rational(v) for row in m.entries for v in row] for m in a.mats],
    }


def decode_pencil(d: dict, where: str = "pencil") -> SymmetricPencil:
    nvars = _int(d.get("nvars"), f"{where}.nvars", 1)
    size = _int(d.get("size"), f"{where}.size")
    mats_in = _list(d.get("mats"), f"{where}.mats")
    if len(mats_in) != nvars:
        raise InputError(f"{where}.mats: expected {nvars} matrices, got {len(mats_in)}")
    mats = []
    for k, flat in enumerate(mats_in):
        loc = f"{where}.mats[{k}]"
        flat = _list(flat, loc)
        if len(flat) != size * size:
            raise InputError(f"{loc}: expected {size * size} row-major entries, got {len(flat)}")
        vals = [parse_rational(v, f"{loc}[{i}]") for i, v in enumerate(flat)]
        rows = [vals[i * size:(i + 1) * size] for i in range(size)]
        for i in range(size):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InputError(
                        f"{loc}: not symmetric at entry ({i},{j}): "
                        f"{format_rational(rows[i][j])} != {format_rational(rows[j][i])}"
                    )
        mats.append(SymmetricMatrix(rows))
    return SymmetricPencil(nvars, size, tuple(mats))


def encode_realization(l: RealizationMatrix) -> dict:
    return {"rows": l.rows, "cols": l.cols, "entries": encode_matrix(l.entries)}


def encode_forms(forms) -> list[list[str]]:
    return [encode_point(f.coeffs) for f in forms]


def encode_rank(rk: RankFunction) -> dict:
    return {"n": rk.n, "ranks": list(rk.ranks)}


@dataclass(frozen=True)
class ModelFile:
    kind: str
    payload: Any
    variables: tuple[str, ...] | None = None

    @property
    def nvars(self) -> int:
        if self.kind == "forms":
            return self.payload[0].nvars
        if self.kind == "realization":
            return self.payload.cols
        if self.kind == "rank":
            return self.payload.n
        return self.payload.nvars


def model_from_dict(d: Any) -> ModelFile:
    if not isinstance(d, dict):
        raise InputError("model file must contain a JSON object")
    kind = d.get("kind")
    if kind not in KINDS:
        raise InputError(f"kind: expected one of {', '.join(KINDS)}, got {kind!r}")
    if kind == "polynomial":
        nvars = _int(d.get("nvars"), "nvars", 1)
        payload = decode_polynomial(nvars, d.get("terms"))
    elif kind == "forms":
        nvars = _int(d.get("nvars"), "nvars", 1)
        rows = _list(d.get("forms"), "forms")
        if not rows:
            raise InputError("forms: empty list of linear forms")
        forms = []
        for i, r in enumerate(rows):
            coeffs = decode_point(r, f"forms[{i}]")
            if len(coeffs) != nvars:
                raise InputError(f"forms[{i}]: length {len(coeffs)} != nvars {nvars}")
            forms.append(LinearForm(coeffs))
        payload = tuple(forms)
    elif kind == "pencil":
        payload = decode_pencil(d, "pencil")
        nvars = payload.nvars
    elif kind == "realization":
        k = _int(d.get("rows"), "rows", 1)
        n = _int(d.get("cols"), "cols", 1)
        rows = _list(d.get("entries"), "entries")
        if len(rows) != k:
            raise InputError(f"entries: expected {k} rows, got {len(rows)}")
        mat = []
        for i, r in enumerate(rows):
            row = decode_point(r, f"entries[{i}]")
            if len(row) != n:
                raise InputError(f"entries[{i}]: length {len(row)} != cols {n}")
            mat.append(row)
        payload = RealizationMatrix(mat)
        nvars = n
    else:
        n = _int(d.get("n"), "n")
        ranks = _list(d.get("ranks"), "ranks")
        if len(ranks) != 1 << n:
            raise InputError(f"ranks: expected {1 << n} entries, got {len(ranks)}")
        payload = RankFunction(n, tuple(_int(r, f"ranks[{i}]") for i, r in enumerate(ranks)))
        nvars = n
    variables = d.get("variables")
    if variables is not None:
        variables = _list(variables, "variables")
        if len(variables) != nvars or not all(isinstance(v, str) for v in variables):
            raise InputError(f"variables: expected {nvars} names")
        variables = tuple(variables)
    return ModelFile(kind, payload, variables)


def model_to_dict(m: ModelFile) -> dict:
    out: dict[str, Any] = {"kind": m.kind}
    if m.kind == "polynomial":
        out.update(nvars=m.payload.nvars, terms=encode_polynomial(m.payload))
    elif m.kind == "forms":
        out.update(nvars=m.nvars, forms=encode_forms(m.payload))
    elif m.kind == "pencil":
        out.update(encode_pencil(m.payload))
    elif m.kind == "realization":
        out.update(encode_realization(m.payload))
    else:
        out.update(encode_rank(m.payload))
    if m.variables is not None:
        out["variables"] = list(m.variables)
    return out


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}") from exc


def parse_model(path: str | Path) -> ModelFile:
    try:
        return model_from_dict(load_json(path))
    except InputError as exc:
        if str(exc).startswith(str(path)):
            raise
        raise InputError(f"{path}: {exc}") from exc


def save_model(m: ModelFile, path: str | Path) -> None:
    Path(path).write_text(dumps(model_to_dict(m)))


def parse_point(spec: str) -> Point:
    """A point given as a JSON file (list or {"coords": [...]}) or inline "(1,-2,1/2)"."""
    path = Path(spec)
    if path.is_file():
        data = load_json(path)
        if isinstance(data, dict):
            data = data.get("coords")
        return decode_point(data, str(path))
    text = spec.strip()
    if text.startswith(("(", "[")) and text.endswith((")", "]")):
        text = text[1:-1]
    parts = [s for s in (t.strip() for t in text.split(",")) if s]
    if not parts:
        raise InputError(f"cannot parse point {spec!r}")
    return tuple(parse_rational(s, f"point {spec!r}") for s in parts)
