"""Command line front end.

Each subcommand reads documents, runs one library operation and prints a
report.  Exit status: 0 when every check passes, 1 when a check fails or a
precondition of the operation is not met, 2 for unreadable input or bad usage.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from datetime import datetime, timezone

from . import bialgebra as bia
from . import cohomology as coh
from . import operators as ops
from . import representations as reps
from . import yangbaxter as yb
from .algebra import Failure, ValidationReport, classify, validate
from .documents import ManinTriple, dumps, expect_kind, load, to_data
from .errors import DomainError, HomLieError, InputError, InvariantViolation
from .multilinear import Multivector
from .scalar import format_rational, invert

SCHEMA_VERSION = 1
MAX_WITNESSES = 20


class Report:
    def __init__(self, command: str):
        self.command = command
        self.inputs = {}
        self.checks = []
        self.values = {}
        self.outputs = {}
        self.error = None

    def add_input(self, role: str, path: str):
        with open(path, "rb") as fh:
            digest = hashlib.sha256(fh.read()).hexdigest()
        self.inputs[role] = {"file": os.path.basename(path), "sha256": digest}

    def check(self, name: str, report):
        """Record a named check from a ValidationReport or a bare bool."""
        if isinstance(report, bool):
            report = ValidationReport(() if report else (Failure(name, (), (), ()),))
        self.checks.append((name, report))
        return report.passed

    def value(self, key: str, v):
        self.values[key] = v

    def output(self, name: str, obj):
        self.outputs[name] = obj

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for _, r in self.checks)

    def to_data(self) -> dict:
        checks = []
        for name, r in self.checks:
            entry = {"name": name, "passed": r.passed, "failures_total": len(r.failures)}
            entry["witnesses"] = [_witness(f) for f in r.failures[:MAX_WITNESSES]]
            checks.append(entry)
        data = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "passed": self.passed,
            "checks": checks,
            "values": self.values,
            "outputs": {k: to_data(v) for k, v in self.outputs.items()},
        }
        if self.error is not None:
            data["error"] = self.error
        return data


def _witness(f: Failure) -> dict:
    at = [w + 1 if isinstance(w, int) else w for w in f.witness]
    return {"axiom": f.axiom, "at": at, "lhs": [format_rational(c) for c in f.lhs], "rhs": [format_rational(c) for c in f.rhs]}


def _fmt_vec(v) -> str:
    return "[" + ", ".join(v) + "]"


def render_text(rep: Report, written: dict) -> str:
    lines = [f"homlie {rep.command}: {'PASS' if rep.passed else 'FAIL'}"]
    for role, info in rep.inputs.items():
        lines.append(f"  input {role}: {info['file']} (sha256 {info['sha256'][:12]})")
    if rep.error:
        lines.append(f"  error: {rep.error}")
    for name, r in rep.checks:
        lines.append(f"  [{'PASS' if r.passed else 'FAIL'}] {name}")
        for f in r.failures[:MAX_WITNESSES]:
            w = _witness(f)
            if not w["at"] and not w["lhs"]:
                continue
            at = "(" + ", ".join(str(a) for a in w["at"]) + ")"
            lines.append(f"      {w['axiom']} at {at}: lhs = {_fmt_vec(w['lhs'])}  rhs = {_fmt_vec(w['rhs'])}")
        if len(r.failures) > MAX_WITNESSES:
            lines.append(f"      ... {len(r.failures) - MAX_WITNESSES} more")
    for k, v in rep.values.items():
        lines.append(f"  {k}: {v if isinstance(v, str) else json.dumps(v)}")
    for name in rep.outputs:
        if name in written:
            lines.append(f"  wrote {name}: {written[name]}")
        else:
            lines.append(f"  output {name}:")
            lines.extend("    " + ln for ln in dumps(to_data(rep.outputs[name])).splitlines())
    lines.append(f"generated {datetime.now(timezone.utc).strftime('%Y-%m-%dT%H:%M:%SZ')}")
    return "\n".join(lines) + "\n"


# -- helpers ----------------------------------------------------------------------

def _load(rep: Report, role: str, path: str, *kinds):
    doc = load(path)
    rep.add_input(role, path)
    return expect_kind(doc, *kinds)


def _vec_strings(v) -> list:
    return [format_rational(c) for c in v]


def _one_failure(name: str, witness, lhs, rhs) -> ValidationReport:
    return ValidationReport((Failure(name, tuple(witness), tuple(lhs), tuple(rhs)),))


# -- subcommands ---------------------------------------------------------------------

def cmd_validate(a, rep):
    g = _load(rep, "algebra", a.file, "hom_lie_algebra")
    rep.check("hom-lie-algebra", validate(g))


def cmd_classify(a, rep):
    g = _load(rep, "algebra", a.file, "hom_lie_algebra")
    c = classify(g)
    rep.check("hom-lie-algebra", True)
    rep.value("regular", c.regular)
    rep.value("involutive", c.involutive)
    rep.value("admissible", c.admissible)
    rep.value("center", [_vec_strings(v) for v in c.center])


def cmd_rep_check(a, rep):
    r = _load(rep, "representation", a.file, "representation")
    ok = rep.check("representation", reps.check_representation(r))
    if ok:
        rep.value("admissible", reps.admissible_rep_report(r).passed)


def cmd_rep_dual(a, rep):
    r = _load(rep, "representation", a.file, "representation")
    dual = reps.dual_representation(r)
    rep.value("admissible", reps.is_admissible_rep(r))
    rep.check("dual-is-representation", reps.check_representation(dual))
    rep.output("dual", dual)


def cmd_semidirect(a, rep):
    r = _load(rep, "representation", a.file, "representation")
    k = reps.semidirect_product(r)
    rep.check("hom-lie-algebra", validate(k))
    rep.output("algebra", k)


def cmd_cohom_d(a, rep):
    base = _load(rep, "base", a.file, "representation", "hom_lie_algebra")
    f = _load(rep, "cochain", a.cochain, "cochain")
    if isinstance(base, reps.Representation):
        df = coh.coboundary(base, f)
        ddf = coh.coboundary(base, df)
        rep.check("output-hom-cochain", coh.is_hom_cochain(base, df))
    else:
        df = coh.trivial_coboundary(base, f)
        ddf = coh.trivial_coboundary(base, df)
    rep.check("d-squared-zero", ddf.is_zero())
    rep.output("coboundary", df)


def cmd_cocycle2(a, rep):
    g = _load(rep, "algebra", a.file, "hom_lie_algebra")
    B = _load(rep, "form", a.form, "linear_map")
    coh.is_two_cocycle(g, B)
    bad = coh.cocycle_witnesses(g, B)
    rep.check("two-cocycle", ValidationReport(tuple(Failure("cyclic-sum", w, (s,), (0,)) for w, s in bad)))


def cmd_bialgebra_check(a, rep):
    b = _load(rep, "bialgebra", a.file, "bialgebra")
    rep.check("bialgebra", bia.check_bialgebra(b))


def cmd_double(a, rep):
    b = _load(rep, "bialgebra", a.file, "bialgebra")
    bia.standard_double(b)  # raises on a non-bialgebra
    k, bg, bh, S = bia.manin_components(b)
    rep.check("hom-lie-algebra", validate(k))
    rep.check("manin-triple", bia.check_manin_triple(k, bg, bh, S))
    rep.output("manin_triple", ManinTriple(k, tuple(bg), tuple(bh), S))


def cmd_manin_check(a, rep):
    m = _load(rep, "manin_triple", a.file, "manin_triple")
    rep.check("manin-triple", bia.check_manin_triple(m.algebra, m.basis_g, m.basis_g2, m.form))


def cmd_manin_normalize(a, rep):
    m = _load(rep, "manin_triple", a.file, "manin_triple")
    b = bia.normalize_manin_triple(m.algebra, m.basis_g, m.basis_g2, m.form)
    rep.check("bialgebra", bia.check_bialgebra(b))
    rep.output("bialgebra", b)


def _r_input(rep, a, dim) -> Multivector:
    r = _load(rep, "r", a.r, "bivector")
    if r.dim != dim:
        raise InputError(f"bivector has dimension {r.dim}, algebra has {dim}")
    return r


def cmd_r_check(a, rep):
    g = _load(rep, "algebra", a.file, "hom_lie_algebra")
    r = _r_input(rep, a, g.dim)
    rep.check("zero-cochain", yb.check_zero_cochain(g, r))
    sq = yb.schouten_square(g, r)
    rep.check("chybe", ValidationReport(tuple(Failure("schouten-square", k, (c,), (0,)) for k, c in sq.coeffs.items())))
    rep.check("invariance", yb.check_invariance(g, r))
    rep.output("r_sharp", yb.r_sharp(g, r))


def cmd_r_dualize(a, rep):
    g = _load(rep, "algebra", a.file, "hom_lie_algebra")
    r = _r_input(rep, a, g.dim)
    b = yb.build_coboundary_bialgebra(g, r)
    rep.check("bialgebra", bia.check_bialgebra(b))
    rep.output("bialgebra", b)


def cmd_lagrangian(a, rep):
    b = _load(rep, "bialgebra", a.file, "bialgebra")
    R = _r_input(rep, a, b.dim)
    res = bia.lagrangian_graph_check(b, R)
    defect = coh.maurer_cartan_defect(b, R, check=False)
    if res.graph_closed:
        rep.check("graph-closed", True)
    else:
        kind, *idx = res.witness
        rep.check("graph-closed", _one_failure(f"graph-{kind}", idx, res.lhs, res.rhs))
    rep.check("maurer-cartan", ValidationReport(tuple(Failure("mc-defect", k, (c,), (0,)) for k, c in defect.coeffs.items())))
    rep.check("twist-compatible", res.twist_compat)
    rep.check("implication", res.implication_holds)


def _o_doc(rep, a) -> ops.OOperatorDoc:
    r = _load(rep, "representation", a.file, "representation")
    T = _load(rep, "map", a.t, "linear_map")
    return ops.OOperatorDoc(r, T)


def cmd_o_check(a, rep):
    rep.check("o-operator", ops.is_o_operator(_o_doc(rep, a)))


def cmd_nijenhuis(a, rep):
    base = load(a.file)
    if base.kind == "representation":
        if a.t is None:
            raise InputError("a representation document needs --t")
        res = ops.nijenhuis_embedding(_o_doc(rep, a))
        rep.value("o_operator", res.o_operator)
        rep.value("embedding_nijenhuis", res.nijenhuis)
        rep.check("nijenhuis", res.nijenhuis)
        rep.check("equivalence", res.agree)
    else:
        g = _load(rep, "algebra", a.file, "hom_lie_algebra")
        if a.n is None:
            raise InputError("an algebra document needs --n")
        N = _load(rep, "map", a.n, "linear_map")
        rep.check("nijenhuis", ops.hom_nijenhuis_report(g, N))


def cmd_rota_baxter(a, rep):
    g = _load(rep, "algebra", a.file, "hom_lie_algebra")
    R = _load(rep, "map", a.t, "linear_map")
    rep.check("rota-baxter", ops.is_rota_baxter(g, R))


def cmd_build_r(a, rep):
    doc = _o_doc(rep, a)
    out = ops.build_r_from_T(doc)
    rep.check("chybe", ValidationReport(tuple(Failure("schouten-square", k, (c,), (0,)) for k, c in out.schouten.coeffs.items())))
    rep.value("o_operator_TA", out.o_operator_TA)
    rep.value("orthogonal_A", out.orthogonal)
    if out.invariant is not None:
        rep.value("twist_invariant", out.invariant)
    rep.check("theorem-agreement", out.chybe == out.o_operator_TA)
    rep.output("algebra", out.algebra)
    rep.output("r", out.r)


def cmd_hlsa_check(a, rep):
    h = _load(rep, "hlsa", a.file, "hlsa")
    rep.check("hlsa", ops.validate_hlsa(h))
    rep.value("regular", invert(h.psi) is not None)
    if a.r_matrix:
        rep.check("conditions", ops.hlsa_conditions(h))
        out = ops.hlsa_r(h)
        rep.check("chybe", out.chybe)
        rep.output("algebra", out.algebra)
        rep.output("r", out.r)


def cmd_hlsa_commutator(a, rep):
    h = _load(rep, "hlsa", a.file, "hlsa")
    g, L = ops.commutator_algebra(h)
    rep.check("hom-lie-algebra", validate(g))
    rep.check("left-representation", reps.check_representation(L))
    rep.output("algebra", g)
    rep.output("representation", L)


def cmd_hlsa_from_b(a, rep):
    g = _load(rep, "algebra", a.file, "hom_lie_algebra")
    B = _load(rep, "form", a.form, "linear_map")
    h = ops.hlsa_from_2cocycle(g, B)
    rep.check("hlsa", ops.validate_hlsa(h))
    rep.output("hlsa", h)


COMMANDS = {
    "validate": (cmd_validate, "check the hom-Lie axioms", []),
    "classify": (cmd_classify, "twist properties and the center", []),
    "rep-check": (cmd_rep_check, "check a representation", []),
    "rep-dual": (cmd_rep_dual, "dual representation and whether it is one", []),
    "semidirect": (cmd_semidirect, "semidirect product with a representation", []),
    "cohom-d": (cmd_cohom_d, "coboundary of a cochain", ["cochain"]),
    "cocycle2": (cmd_cocycle2, "2-cocycle test for an antisymmetric form", ["form"]),
    "bialgebra-check": (cmd_bialgebra_check, "hom-Lie bialgebra compatibility", []),
    "double": (cmd_double, "standard Manin triple of a bialgebra", []),
    "manin-check": (cmd_manin_check, "check a Manin triple", []),
    "manin-normalize": (cmd_manin_normalize, "bialgebra of a Manin triple", []),
    "r-check": (cmd_r_check, "conditions on an r-matrix", ["r"]),
    "r-dualize": (cmd_r_dualize, "coboundary bialgebra of r", ["r"]),
    "lagrangian-check": (cmd_lagrangian, "Lagrangian graph of R in the standard double", ["r"]),
    "o-check": (cmd_o_check, "O-operator test", ["t"]),
    "nijenhuis": (cmd_nijenhuis, "hom-Nijenhuis test, or the block embedding of an O-operator", ["t?", "n?"]),
    "rota-baxter": (cmd_rota_baxter, "weight-zero Rota-Baxter test", ["t"]),
    "build-r": (cmd_build_r, "r-matrix of an O-operator", ["t"]),
    "hlsa-check": (cmd_hlsa_check, "check a hom-left-symmetric algebra", []),
    "hlsa-commutator": (cmd_hlsa_commutator, "commutator algebra and left representation", []),
    "hlsa-from-b": (cmd_hlsa_from_b, "hom-left-symmetric product from a 2-cocycle", ["form"]),
}

_OPTION_HELP = {
    "cochain": "cochain document",
    "form": "linear_map document holding B[i][j] = B(e_i, e_j)",
    "r": "bivector document",
    "t": "linear_map document for T (or R)",
    "n": "linear_map document for N",
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homlie", description="Exact checks for hom-Lie algebras and related structures.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for name, (_, helptext, options) in COMMANDS.items():
        sp = sub.add_parser(name, help=helptext, description=helptext)
        sp.add_argument("file", help="input document")
        for opt in options:
            required = not opt.endswith("?")
            opt = opt.rstrip("?")
            sp.add_argument(f"--{opt}", required=required, help=_OPTION_HELP[opt])
        if name == "hlsa-check":
            sp.add_argument("--r-matrix", action="store_true", help="also build the r-matrix of a regular algebra")
        sp.add_argument("--json", action="store_true", help="print the machine-readable report")
        sp.add_argument("-o", "--output", metavar="FILE", help="write constructed documents")
    return p


def _write_outputs(rep: Report, target: str) -> dict:
    written = {}
    names = list(rep.outputs)
    for name in names:
        if len(names) == 1:
            path = target
        else:
            stem = target[:-5] if target.endswith(".json") else target
            path = f"{stem}.{name}.json"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(to_data(rep.outputs[name])))
        written[name] = path
    return written


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    handler = COMMANDS[args.command][0]
    rep = Report(args.command)
    try:
        handler(args, rep)
    except InputError as exc:
        print(f"homlie {args.command}: input error: {exc}", file=stderr)
        return 2
    except InvariantViolation as exc:
        rep.error = f"internal consistency check failed: {exc}"
    except DomainError as exc:
        rep.error = str(exc)
        if exc.report is not None:
            rep.check("precondition", exc.report)
    except HomLieError as exc:
        rep.error = str(exc)
    written = {}
    if args.output and rep.outputs:
        try:
            written = _write_outputs(rep, args.output)
        except OSError as exc:
            print(f"homlie {args.command}: cannot write output: {exc.strerror}", file=stderr)
            return 2
    if args.json:
        stdout.write(dumps(rep.to_data()))
    else:
        stdout.write(render_text(rep, written))
    return 0 if rep.passed else 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
