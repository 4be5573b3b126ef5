"""JSON documents for every object kind, with 1-based indices and rational strings.

Serialization is canonical: keys sorted, two-space indent, zero entries
dropped, entries ordered by index, trailing newline.  ``parse(serialize(x))``
reproduces ``x`` and ``serialize(parse(t)) == t`` for canonical ``t``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .algebra import HomLieAlgebra
from .bialgebra import BilinearForm, HomLieBialgebra
from .cohomology import Cochain
from .errors import InputError
from .multilinear import PRIMAL, Multivector
from .operators import HomLeftSymmetricAlgebra
from .representations import Representation
from .scalar import Matrix, format_rational, parse_rational

KINDS = ("hom_lie_algebra", "representation", "bivector", "cochain", "bialgebra", "manin_triple", "linear_map", "hlsa")


@dataclass(frozen=True)
class ManinTriple:
    algebra: HomLieAlgebra
    basis_g: tuple
    basis_g2: tuple
    form: BilinearForm


@dataclass(frozen=True)
class Document:
    kind: str
    value: Any


# -- reading ------------------------------------------------------------------

class _Reader:
    """Schema helpers that carry a JSON path for error messages."""

    def __init__(self, path: str = "$"):
        self.path = path

    def at(self, key) -> "_Reader":
        return _Reader(f"{self.path}[{key}]" if isinstance(key, int) else f"{self.path}.{key}")

    def fail(self, msg: str):
        raise InputError(f"{self.path}: {msg}")

    def obj(self, data, required: set, optional: set = frozenset()) -> dict:
        if not isinstance(data, dict):
            self.fail("expected an object")
        missing = required - set(data)
        if missing:
            self.fail(f"missing field(s) {sorted(missing)}")
        extra = set(data) - required - set(optional)
        if extra:
            self.fail(f"unknown field(s) {sorted(extra)}")
        return data

    def list(self, data, length=None) -> list:
        if not isinstance(data, list):
            self.fail("expected an array")
        if length is not None and len(data) != length:
            self.fail(f"expected {length} entries, got {len(data)}")
        return data

    def count(self, data, lo: int = 0) -> int:
        if not isinstance(data, int) or isinstance(data, bool) or data < lo:
            self.fail(f"expected an integer >= {lo}")
        return data

    def index(self, data, dim: int) -> int:
        """1-based index in the document, 0-based on return."""
        if not isinstance(data, int) or isinstance(data, bool) or not 1 <= data <= dim:
            self.fail(f"index must be an integer in 1..{dim}")
        return data - 1

    def scalar(self, data):
        if not isinstance(data, str):
            self.fail('rationals are written as strings such as "3" or "-1/2"')
        try:
            return parse_rational(data)
        except InputError as exc:
            self.fail(str(exc))

    def vector(self, data, length: int) -> tuple:
        return tuple(self.at(k).scalar(c) for k, c in enumerate(self.list(data, length)))

    def matrix(self, data, nrows: int, ncols: int) -> Matrix:
        rows = self.list(data, nrows)
        return Matrix([self.at(a).vector(r, ncols) for a, r in enumerate(rows)], ncols)


def _read_pairs(rd: _Reader, data, dim: int, field: str, strict_order: bool) -> dict:
    out = {}
    for t, entry in enumerate(rd.list(data)):
        er = rd.at(t)
        er.obj(entry, {"i", "j", field})
        i = er.at("i").index(entry["i"], dim)
        j = er.at("j").index(entry["j"], dim)
        if strict_order and i >= j:
            er.fail("entries need i < j (the other order follows by antisymmetry)")
        if (i, j) in out:
            er.fail(f"duplicate entry ({i + 1}, {j + 1})")
        out[(i, j)] = er.at(field).vector(entry[field], dim)
    return out


def _read_algebra(rd: _Reader, data) -> HomLieAlgebra:
    rd.obj(data, {"kind", "dim", "bracket", "phi"})
    if data["kind"] != "hom_lie_algebra":
        rd.at("kind").fail("expected kind hom_lie_algebra")
    n = rd.at("dim").count(data["dim"])
    consts = _read_pairs(rd.at("bracket"), data["bracket"], n, "coeffs", True)
    return HomLieAlgebra(n, consts, rd.at("phi").matrix(data["phi"], n, n))


def _read_representation(rd: _Reader, data) -> Representation:
    rd.obj(data, {"kind", "algebra", "dim_v", "A", "rho"})
    g = _read_algebra(rd.at("algebra"), data["algebra"])
    m = rd.at("dim_v").count(data["dim_v"])
    A = rd.at("A").matrix(data["A"], m, m)
    rho = tuple(rd.at("rho").at(i).matrix(M, m, m) for i, M in enumerate(rd.at("rho").list(data["rho"], g.dim)))
    return Representation(g, A, rho)


def _read_bivector(rd: _Reader, data) -> Multivector:
    rd.obj(data, {"kind", "dim", "terms"})
    n = rd.at("dim").count(data["dim"])
    out = Multivector.zero(n, 2)
    seen = set()
    for t, entry in enumerate(rd.at("terms").list(data["terms"])):
        er = rd.at("terms").at(t)
        er.obj(entry, {"i", "j", "coeff"})
        i = er.at("i").index(entry["i"], n)
        j = er.at("j").index(entry["j"], n)
        if i == j:
            er.fail("e_i ∧ e_i vanishes; use distinct indices")
        key = (min(i, j), max(i, j))
        if key in seen:
            er.fail(f"duplicate term ({key[0] + 1}, {key[1] + 1})")
        seen.add(key)
        out = out + Multivector.basis(n, (i, j)).scale(er.at("coeff").scalar(entry["coeff"]))
    return out


def _read_cochain(rd: _Reader, data) -> Cochain:
    rd.obj(data, {"kind", "k", "source", "target", "values"})
    k = rd.at("k").count(data["k"])
    n = rd.at("source").count(data["source"])
    m = rd.at("target").count(data["target"])
    values = {}
    for t, entry in enumerate(rd.at("values").list(data["values"])):
        er = rd.at("values").at(t)
        er.obj(entry, {"args", "value"})
        args = tuple(er.at("args").at(a).index(x, n) for a, x in enumerate(er.at("args").list(entry["args"], k)))
        if any(args[a] >= args[a + 1] for a in range(k - 1)):
            er.at("args").fail("arguments must be strictly increasing")
        if args in values:
            er.fail("duplicate arguments")
        values[args] = er.at("value").vector(entry["value"], m)
    return Cochain(k, n, m, values)


def _read_bialgebra(rd: _Reader, data) -> HomLieBialgebra:
    rd.obj(data, {"kind", "algebra", "dual_bracket"})
    g = _read_algebra(rd.at("algebra"), data["algebra"])
    dual = _read_pairs(rd.at("dual_bracket"), data["dual_bracket"], g.dim, "coeffs", True)
    return HomLieBialgebra(g, dual)


def _read_manin(rd: _Reader, data) -> ManinTriple:
    rd.obj(data, {"kind", "algebra", "basis_g", "basis_g2", "form"})
    k = _read_algebra(rd.at("algebra"), data["algebra"])
    N = k.dim
    bg = tuple(rd.at("basis_g").at(a).vector(v, N) for a, v in enumerate(rd.at("basis_g").list(data["basis_g"])))
    bh = tuple(rd.at("basis_g2").at(a).vector(v, N) for a, v in enumerate(rd.at("basis_g2").list(data["basis_g2"])))
    S = rd.at("form").matrix(data["form"], N, N)
    return ManinTriple(k, bg, bh, BilinearForm(S, S.T == S))


def _read_linear_map(rd: _Reader, data) -> Matrix:
    rd.obj(data, {"kind", "rows", "cols", "matrix"})
    r = rd.at("rows").count(data["rows"])
    c = rd.at("cols").count(data["cols"])
    return rd.at("matrix").matrix(data["matrix"], r, c)


def _read_hlsa(rd: _Reader, data) -> HomLeftSymmetricAlgebra:
    rd.obj(data, {"kind", "dim", "product", "psi"})
    m = rd.at("dim").count(data["dim"])
    prod = _read_pairs(rd.at("product"), data["product"], m, "coeffs", False)
    return HomLeftSymmetricAlgebra(m, prod, rd.at("psi").matrix(data["psi"], m, m))


_READERS = {
    "hom_lie_algebra": _read_algebra,
    "representation": _read_representation,
    "bivector": _read_bivector,
    "cochain": _read_cochain,
    "bialgebra": _read_bialgebra,
    "manin_triple": _read_manin,
    "linear_map": _read_linear_map,
    "hlsa": _read_hlsa,
}


def from_data(data) -> Document:
    rd = _Reader()
    if not isinstance(data, dict) or "kind" not in data:
        rd.fail("a document is an object with a 'kind' field")
    kind = data["kind"]
    if kind not in _READERS:
        rd.at("kind").fail(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return Document(kind, _READERS[kind](rd, data))


def parse(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_data(data)


def load(path) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def expect_kind(doc: Document, *kinds: str):
    if doc.kind not in kinds:
        raise InputError(f"expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc.value


# -- writing ------------------------------------------------------------------

def _vec(v) -> list:
    return [format_rational(c) for c in v]


def _mat(M: Matrix) -> list:
    return [_vec(r) for r in M.rows]


def _pairs(table, field: str) -> list:
    return [{"i": i + 1, "j": j + 1, field: _vec(v)} for (i, j), v in sorted(table.items()) if any(v)]


def _algebra_data(g: HomLieAlgebra) -> dict:
    return {"kind": "hom_lie_algebra", "dim": g.dim, "bracket": _pairs(g.constants, "coeffs"), "phi": _mat(g.twist)}


def to_data(value) -> dict:
    if isinstance(value, Document):
        value = value.value
    if isinstance(value, HomLieAlgebra):
        return _algebra_data(value)
    if isinstance(value, Representation):
        return {
            "kind": "representation",
            "algebra": _algebra_data(value.algebra),
            "dim_v": value.dim_v,
            "A": _mat(value.A),
            "rho": [_mat(M) for M in value.rho],
        }
    if isinstance(value, Multivector):
        if value.grade != 2 or value.side != PRIMAL:
            raise InputError("only primal bivectors have a document form")
        terms = [{"i": i + 1, "j": j + 1, "coeff": format_rational(c)} for (i, j), c in value.coeffs.items()]
        return {"kind": "bivector", "dim": value.dim, "terms": terms}
    if isinstance(value, Cochain):
        return {
            "kind": "cochain",
            "k": value.k,
            "source": value.source,
            "target": value.target,
            "values": [{"args": [i + 1 for i in I], "value": _vec(v)} for I, v in value.values.items()],
        }
    if isinstance(value, HomLieBialgebra):
        return {"kind": "bialgebra", "algebra": _algebra_data(value.g), "dual_bracket": _pairs(value.dual_bracket, "coeffs")}
    if isinstance(value, ManinTriple):
        return {
            "kind": "manin_triple",
            "algebra": _algebra_data(value.algebra),
            "basis_g": [_vec(v) for v in value.basis_g],
            "basis_g2": [_vec(v) for v in value.basis_g2],
            "form": _mat(value.form.matrix),
        }
    if isinstance(value, Matrix):
        return {"kind": "linear_map", "rows": value.nrows, "cols": value.ncols, "matrix": _mat(value)}
    if isinstance(value, HomLeftSymmetricAlgebra):
        return {"kind": "hlsa", "dim": value.dim, "product": _pairs(value.product, "coeffs"), "psi": _mat(value.psi)}
    raise InputError(f"no document form for {type(value).__name__}")


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def serialize(value) -> str:
    return dumps(to_data(value))
