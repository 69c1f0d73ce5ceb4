"""Job files, result documents and independent re-verification.

Both files are UTF-8 JSON with polynomials written as strings in the
grammar of :mod:`flpfactor.parsing`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .divisors import FactorizationIncomplete
from .engine import PreconditionError, flp_run
from .grobner import NotInModuleError, ideal_reduced_gb
from .matpoly import PolyMatrix, column_reduced_minors, d_i, mat_mul, rank
from .modquot import ExtractionExhausted, module_equal, quotient_by_ideal, quotient_by_poly, row_module
from .parsing import ParseError, parse_matrix, parse_polynomial
from .polyring import DEGREVLEX, LEX, PolyRing, associated

RESULT_FORMAT = "flpfactor-result/1"

EXIT_CODES = {
    "ok": 0,
    "precondition-rejected": 2,
    "extraction-exhausted": 3,
    "factorization-incomplete": 4,
    "parse-error": 5,
}

ORDERS = {"degrevlex": DEGREVLEX, "lex": LEX}
_JOB_KEYS = {"variables", "matrix", "factors", "options"}
_OPTION_KEYS = {"order", "all_factorizations", "frp"}


@dataclass
class JobSpec:
    variables: list
    matrix: list
    factors: list | None = None
    options: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict) -> "JobSpec":
        if not isinstance(data, dict):
            raise ParseError("job must be a JSON object")
        unknown = set(data) - _JOB_KEYS
        if unknown:
            raise ParseError(f"unknown job keys: {sorted(unknown)}")
        for key in ("variables", "matrix"):
            if key not in data:
                raise ParseError(f"missing job key {key!r}")
        variables = data["variables"]
        if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
            raise ParseError("variables must be a list of names")
        if len(set(variables)) != len(variables):
            raise ParseError("variable names must be unique")
        options = dict(data.get("options") or {})
        unknown = set(options) - _OPTION_KEYS
        if unknown:
            raise ParseError(f"unknown option keys: {sorted(unknown)}")
        if options.get("order", "degrevlex") not in ORDERS:
            raise ParseError(f"unknown order {options['order']!r}")
        for flag in ("all_factorizations", "frp"):
            if not isinstance(options.get(flag, False), bool):
                raise ParseError(f"option {flag!r} must be a boolean")
        factors = data.get("factors")
        if factors is not None and not (
            isinstance(factors, list) and all(isinstance(f, str) for f in factors)
        ):
            raise ParseError("factors must be a list of polynomial strings")
        job = cls(list(variables), data["matrix"], factors, options)
        job.parsed()  # fail early on malformed expressions
        return job

    @classmethod
    def load(cls, path) -> "JobSpec":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", pos=exc.pos) from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out = {"variables": self.variables, "matrix": self.matrix}
        if self.factors is not None:
            out["factors"] = self.factors
        if self.options:
            out["options"] = self.options
        return out

    @property
    def order(self) -> str:
        return self.options.get("order", "degrevlex")

    def ring(self) -> PolyRing:
        return PolyRing(self.variables, ORDERS[self.order])

    def parsed(self):
        ring = self.ring()
        F = parse_matrix(self.matrix, ring)
        factors = None
        if self.factors is not None:
            factors = [parse_polynomial(s, ring) for s in self.factors]
        return F, factors


def _strs(ps) -> list:
    return [str(p) for p in ps]


def _mat(m: PolyMatrix) -> list:
    return m.to_strings()


def run_factorize(job: JobSpec) -> dict:
    """Run the pipeline on a job; the result document carries a ``status``."""
    doc = {"format": RESULT_FORMAT, "input": job.to_dict()}
    frp = job.options.get("frp", False)
    doc["mode"] = "frp" if frp else "flp"
    try:
        F, factors = job.parsed()
        work = F.transpose() if frp else F
        run = flp_run(
            work, factors=factors,
            all_factorizations=job.options.get("all_factorizations", False),
        )
    except ParseError as exc:
        return {**doc, "status": "parse-error", "error": str(exc)}
    except PreconditionError as exc:
        return {**doc, "status": "precondition-rejected", "error": str(exc)}
    except ExtractionExhausted as exc:
        return {**doc, "status": "extraction-exhausted", "error": str(exc)}
    except FactorizationIncomplete as exc:
        return {**doc, "status": "factorization-incomplete", "error": str(exc)}
    doc.update({
        "status": "ok",
        "order": job.order,
        "rank": run.r,
        "d_r": str(run.d),
        "column_reduced_minors": _strs(run.column_minors),
        "minor_ideal_basis": _strs(run.ideal_gb.generators),
        "branch": run.branch,
        "factors": _strs(run.lattice.factors),
        "divisors": _strs(run.lattice.divisors),
        "trace": [
            {
                "divisor": str(e.divisor),
                "generators": _mat(e.generators),
                "free": e.certificate.free,
                "column_reduced_minors": (
                    None if e.certificate.minors is None else _strs(e.certificate.minors)
                ),
            }
            for e in run.candidates
        ],
    })
    entries = []
    for fac in run.factorizations:
        G, F1 = (fac.F1.transpose(), fac.G.transpose()) if frp else (fac.G, fac.F1)
        entries.append({
            "G": _mat(G),
            "F1": _mat(F1),
            "f": str(fac.f),
            "divisor": str(fac.divisor),
            "verified": fac.verified,
        })
    doc["factorizations"] = entries
    return doc


def verify_report(doc: dict) -> list:
    """Independent re-check of every factorization in a result document.

    Returns ``(label, passed)`` pairs.  For FLP results each entry must satisfy
    ``F == G @ F1``; for FRP results ``F == G @ F1`` as well, with ``G`` on the
    left (``l x r``) and ``F1`` on the right (``r x m``).
    """
    if not isinstance(doc, dict) or "input" not in doc:
        raise ParseError("result document lacks the 'input' section")
    job = JobSpec.from_dict(doc["input"])
    if doc.get("order", job.order) != job.order:
        job.options["order"] = doc["order"]
    F, _ = job.parsed()
    ring = F.ring
    report = []
    if doc.get("status") != "ok":
        return [("status ok", False)]
    frp = doc.get("mode") == "frp"
    work = F.transpose() if frp else F
    r = rank(work)
    d = d_i(work, r)
    K = row_module(work)
    gb = ideal_reduced_gb(column_reduced_minors(work, r).values, ring=ring)
    report.append(("rank", r == doc.get("rank")))
    report.append(("d_r", associated(d, parse_polynomial(doc["d_r"], ring))))
    for n, entry in enumerate(doc.get("factorizations", [])):
        G = parse_matrix(entry["G"], ring)
        F1 = parse_matrix(entry["F1"], ring)
        divisor = parse_polynomial(entry["divisor"], ring)
        try:
            product_ok = mat_mul(G, F1) == F
        except ValueError:
            product_ok = False
        report.append((f"#{n} product", product_ok))
        # in FRP mode the factor prime side is the right factor F1 = transpose
        left, right = (F1.transpose(), G.transpose()) if frp else (G, F1)
        try:
            d_ok = associated(d_i(left, r) * d_i(right, r), d)
        except ValueError:
            d_ok = False
        report.append((f"#{n} d_r multiplicative", d_ok))
        if gb.is_unit():
            q = quotient_by_poly(K, divisor)
        else:
            q = quotient_by_ideal(K, [divisor * g for g in gb.generators])
        try:
            mod_ok = right.nrows == r and module_equal(row_module(right), q.gb)
        except (ValueError, NotInModuleError):
            mod_ok = False
        report.append((f"#{n} module", mod_ok))
    return report


def run_verify(doc: dict) -> bool:
    return all(ok for _, ok in verify_report(doc))


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
