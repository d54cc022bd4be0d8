"""Batch verification harness.

``qgollnitz <identity> [range options]`` sweeps an identity over a Cartesian
grid of integer parameters, evaluating every tuple exactly, and reports each
failing tuple with the canonical rendering of both sides.  Exit status is 0
when every tuple passes, 1 on any mismatch, 2 on a usage error.

Tuples are sharded over worker threads but results are collected in tuple
order, so a report never depends on the worker count.  The JSON rendering
puts 0 in the elapsed_ms slot for the same reason: two runs of the same
sweep with the same engine version are byte-identical.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Optional

from . import __version__, corollaries, keyid, partcomb, qcomb
from .qcore import parse_poly


class UsageError(ValueError):
    """Malformed sweep request."""


# ---------------------------------------------------------------------------
# per-identity checkers: params -> (ok, rendered lhs, rendered rhs)
# ---------------------------------------------------------------------------

def _ok():
    return True, "", ""


def _sides(lhs, rhs) -> tuple[bool, str, str]:
    # render the two sides only when they disagree; sweeps mostly pass
    if lhs == rhs:
        return _ok()
    return False, str(lhs), str(rhs)


def _check_key(i, j, k, L, M):
    return _sides(keyid.lhs_g(i, j, k, L, M), keyid.rhs_p(i, j, k, L, M))


def _check_boundary(i, j, k, M):
    return _sides(keyid.lhs_g(i, j, k, i + j - 1, M),
                  keyid.boundary_value(i, j, k, M))


def _check_rec_g(i, j, k, L, M):
    return _sides(*keyid.recurrence_sides_g(i, j, k, L, M))


def _check_rec_p(i, j, k, L, M):
    return _sides(*keyid.recurrence_sides_p(i, j, k, L, M))


def _check_rec_andrews(i, j, k, L, M):
    return _sides(*keyid.andrews_sides(i, j, k, L, M))


def _check_schur(j, k, L, M):
    if keyid.check_schur_case(j, k, L, M):
        return _ok()
    left, right = keyid.schur_sides(j, k, L, M)
    return False, str(left), str(right)


def _check_key_limit(i, j, k, order):
    return _sides(keyid.key_limit_lhs(i, j, k, order),
                  keyid.key_limit_rhs(i, j, k, order))


def _check_theorem1(i, j, k, L):
    if partcomb.check_theorem1(L, i, j, k):
        return _ok()
    return False, str(keyid.lhs_g(i, j, k, L, L)), \
        str(keyid.closed_form_diag(i, j, k, L))


def _check_gollnitz(n):
    b = partcomb.gollnitz_B(n)
    c = partcomb.gollnitz_C(n)
    if b == c:
        return _ok()
    return False, f"B({n}) = {b}", f"C({n}) = {c}"


def _check_remark3(n):
    if partcomb.check_remark3(n):
        return _ok()
    total = sum(1 for p in partcomb.iter_type1_transformed(n)
                if partcomb.transformed_weight(p) == n)
    return False, f"{total} transformed Type-1 partitions", \
        f"C({n}) = {partcomb.gollnitz_C(n)}"


def _check_jtp_bounded(L):
    return _sides(corollaries.bounded_jtp_lhs(L), corollaries.bounded_jtp_rhs(L))


def _check_jtp_series(order):
    return _sides(*corollaries.jtp_series(order))


def _check_false_theta(order):
    return _sides(*corollaries.false_theta_sides(order))


def _check_jacobi_cube_poly(L):
    return _sides(*corollaries.jacobi_cube_poly_sides(L))


def _check_jacobi_cube_series(order):
    return _sides(*corollaries.jacobi_cube_series(order))


def _check_carl(L):
    lhs, rhs = corollaries.carl_poly_sides(L)
    if lhs == rhs:
        return _ok()
    return False, lhs.render("a"), rhs.render("a")


def _check_carlitz(L):
    lhs, rhs = corollaries.carlitz_sides(L)
    if lhs == rhs and lhs.substitute_one().at_one() == L + 1:
        return _ok()
    return False, lhs.render("a"), rhs.render("a")


def _check_four_param(i, j, k, l, order):
    return _sides(*corollaries.four_param_sides(i, j, k, l, order))


def _check_qpascal(top, bottom):
    return _sides(*qcomb.qpascal_sides(top, bottom))


def _check_multinom_rec(L, s, i, j):
    for label, lhs, rhs in qcomb.multinom_recurrence_relations(L, s, i, j):
        if lhs != rhs:
            return False, f"{label}: {lhs}", f"{label}: {rhs}"
    return True, "", ""


def _check_support(i, j, k, L):
    if keyid.check_support(i, j, k, L):
        return _ok()
    return False, "every nonzero summand has L-t >= 0", "violated"


@dataclass(frozen=True)
class IdentitySpec:
    """How to sweep one identity: swept parameter names, default inclusive
    ranges, the checker, and an optional tuple filter."""
    name: str
    params: tuple[str, ...]
    defaults: dict[str, tuple[int, int]]
    check: Callable
    uses_order: bool = False
    default_order: int = 1
    tuple_filter: Optional[Callable] = None


def _bound_covers_pairs(params):
    # counting interpretations need L at least every pairwise sum of i, j, k
    return params["L"] >= max(params["i"] + params["j"],
                              params["j"] + params["k"],
                              params["k"] + params["i"])


IDENTITIES: dict[str, IdentitySpec] = {}


def _register(spec: IdentitySpec) -> None:
    IDENTITIES[spec.name] = spec


_register(IdentitySpec("key", ("i", "j", "k", "L", "M"),
                       {"i": (0, 3), "j": (0, 3), "k": (0, 3),
                        "L": (0, 8), "M": (0, 8)}, _check_key))
_register(IdentitySpec("boundary", ("i", "j", "k", "M"),
                       {"i": (0, 4), "j": (0, 4), "k": (0, 4), "M": (0, 10)},
                       _check_boundary))
_register(IdentitySpec("recurrence-g", ("i", "j", "k", "L", "M"),
                       {"i": (0, 3), "j": (0, 3), "k": (0, 3),
                        "L": (0, 8), "M": (0, 8)}, _check_rec_g))
_register(IdentitySpec("recurrence-p", ("i", "j", "k", "L", "M"),
                       {"i": (0, 3), "j": (0, 3), "k": (0, 3),
                        "L": (0, 8), "M": (0, 8)}, _check_rec_p))
_register(IdentitySpec("recurrence-andrews", ("i", "j", "k", "L", "M"),
                       {"i": (0, 3), "j": (0, 3), "k": (0, 3),
                        "L": (0, 8), "M": (0, 8)}, _check_rec_andrews))
_register(IdentitySpec("schur", ("j", "k", "L", "M"),
                       {"j": (0, 3), "k": (0, 3), "L": (0, 6), "M": (0, 6)},
                       _check_schur))
_register(IdentitySpec("key-limit", ("i", "j", "k"),
                       {"i": (0, 3), "j": (0, 3), "k": (0, 3)},
                       _check_key_limit, uses_order=True, default_order=25))
_register(IdentitySpec("theorem1", ("i", "j", "k", "L"),
                       {"i": (0, 3), "j": (0, 3), "k": (0, 3), "L": (0, 7)},
                       _check_theorem1, tuple_filter=_bound_covers_pairs))
_register(IdentitySpec("gollnitz", ("n",), {"n": (0, 60)}, _check_gollnitz))
_register(IdentitySpec("remark3", ("n",), {"n": (0, 60)}, _check_remark3))
_register(IdentitySpec("jtp-bounded", ("L",), {"L": (0, 8)}, _check_jtp_bounded))
_register(IdentitySpec("jtp-series", (), {}, _check_jtp_series,
                       uses_order=True, default_order=10))
_register(IdentitySpec("false-theta", (), {}, _check_false_theta,
                       uses_order=True, default_order=30))
_register(IdentitySpec("jacobi-cube-poly", ("L",), {"L": (0, 20)},
                       _check_jacobi_cube_poly))
_register(IdentitySpec("jacobi-cube-series", (), {}, _check_jacobi_cube_series,
                       uses_order=True, default_order=50))
_register(IdentitySpec("carl", ("L",), {"L": (0, 10)}, _check_carl))
_register(IdentitySpec("carlitz", ("L",), {"L": (0, 12)}, _check_carlitz))
_register(IdentitySpec("four-param", ("i", "j", "k", "l"),
                       {"i": (0, 2), "j": (0, 2), "k": (0, 2), "l": (0, 2)},
                       _check_four_param, uses_order=True, default_order=20))
_register(IdentitySpec("qpascal", ("top", "bottom"),
                       {"top": (-6, 10), "bottom": (-6, 10)}, _check_qpascal))
_register(IdentitySpec("multinom-rec", ("L", "s", "i", "j"),
                       {"L": (0, 8), "s": (0, 8), "i": (0, 8), "j": (0, 8)},
                       _check_multinom_rec))
_register(IdentitySpec("support", ("i", "j", "k", "L"),
                       {"i": (0, 4), "j": (0, 4), "k": (0, 4), "L": (0, 10)},
                       _check_support, tuple_filter=_bound_covers_pairs))


# ---------------------------------------------------------------------------
# sweeping
# ---------------------------------------------------------------------------

@dataclass
class SweepSpec:
    """A sweep request: identity name, inclusive per-parameter ranges
    (defaults fill anything omitted), truncation order where relevant."""
    identity: str
    ranges: dict[str, tuple[int, int]] = field(default_factory=dict)
    order: Optional[int] = None
    jobs: int = 1


@dataclass
class SweepReport:
    identity: str
    total: int
    failures: list
    elapsed_ms: int
    version: str = __version__

    @property
    def ok(self) -> bool:
        return not self.failures


def run_sweep(spec: SweepSpec) -> SweepReport:
    """Evaluate every tuple in the sweep grid; deterministic output order
    regardless of the worker count."""
    ident = IDENTITIES.get(spec.identity)
    if ident is None:
        raise UsageError(f"unknown identity {spec.identity!r}")
    for name in spec.ranges:
        if name not in ident.params:
            raise UsageError(
                f"identity {ident.name!r} does not take a range for {name!r}")
    ranges = []
    for name in ident.params:
        lo, hi = spec.ranges.get(name, ident.defaults[name])
        if lo > hi:
            raise UsageError(f"empty range for {name!r}: {lo}..{hi}")
        ranges.append(range(lo, hi + 1))
    order = spec.order
    if ident.uses_order:
        order = ident.default_order if order is None else order
        if order < 1:
            raise UsageError(f"order must be >= 1, got {order}")
    if spec.jobs < 1:
        raise UsageError(f"jobs must be >= 1, got {spec.jobs}")

    tuples = []
    for combo in itertools.product(*ranges):
        params = dict(zip(ident.params, combo))
        if ident.tuple_filter is not None and not ident.tuple_filter(params):
            continue
        tuples.append(params)

    def evaluate(params):
        kwargs = dict(params)
        if ident.uses_order:
            kwargs["order"] = order
        return ident.check(**kwargs)

    start = time.perf_counter()
    if spec.jobs == 1:
        results = [evaluate(p) for p in tuples]
    else:
        with ThreadPoolExecutor(max_workers=spec.jobs) as pool:
            results = list(pool.map(evaluate, tuples))
    failures = []
    for params, (ok, lhs, rhs) in zip(tuples, results):
        if not ok:
            shown = dict(params)
            if ident.uses_order:
                shown["order"] = order
            failures.append({"params": shown, "lhs": lhs, "rhs": rhs})
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return SweepReport(ident.name, len(tuples), failures, elapsed_ms)


def render_report(report: SweepReport, fmt: str = "text") -> str:
    """Render a report; JSON keeps a stable key order and zeroes the elapsed
    slot so identical sweeps give byte-identical output."""
    if fmt == "json":
        return json.dumps({
            "identity": report.identity,
            "total": report.total,
            "failures": report.failures,
            "elapsed_ms": 0,
            "version": report.version,
        })
    if fmt != "text":
        raise UsageError(f"unknown format {fmt!r}")
    lines = [
        f"identity: {report.identity}",
        f"tuples:   {report.total}",
        f"failures: {len(report.failures)}",
        f"elapsed:  {report.elapsed_ms} ms",
        f"version:  {report.version}",
    ]
    if report.failures:
        rows = [(", ".join(f"{k}={v}" for k, v in f["params"].items()),
                 f["lhs"], f["rhs"]) for f in report.failures]
        widths = [max(len(r[col]) for r in rows) for col in range(3)]
        header = ("params".ljust(widths[0]), "lhs".ljust(widths[1]),
                  "rhs".ljust(widths[2]))
        widths = [max(w, len(h)) for w, h in zip(widths, header)]
        lines.append("")
        lines.append(" | ".join(s.ljust(w) for s, w in
                                zip(("params", "lhs", "rhs"), widths)))
        lines.append("-+-".join("-" * w for w in widths))
        for row in rows:
            lines.append(" | ".join(s.ljust(w) for s, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# golden corpus
# ---------------------------------------------------------------------------

_GOLDEN_IJK = [(0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 1), (2, 1, 1),
               (2, 2, 2), (3, 1, 0), (4, 2, 1), (-1, 2, 0)]
_GOLDEN_LM = [(0, 0), (1, 3), (4, 4), (5, 7), (-2, 3), (8, 8)]


def golden_lines():
    """Derive the golden corpus: tab-separated tuple, lhs and rhs renderings
    for a fixed set of key-identity instances."""
    for i, j, k in _GOLDEN_IJK:
        for L, M in _GOLDEN_LM:
            lhs = keyid.lhs_g(i, j, k, L, M)
            rhs = keyid.rhs_p(i, j, k, L, M)
            yield f"{i} {j} {k} {L} {M}\t{lhs}\t{rhs}"


def run_golden() -> SweepReport:
    """Re-derive the shipped golden corpus and diff it line by line; a
    failure carries the stored and freshly computed renderings."""
    text = resources.files("qgollnitz").joinpath("data/golden_key.txt") \
        .read_text(encoding="utf-8")
    stored = [ln for ln in text.splitlines() if ln.strip()]
    derived = list(golden_lines())
    failures = []
    start = time.perf_counter()
    total = max(len(stored), len(derived))
    for idx in range(total):
        if idx >= len(stored) or idx >= len(derived):
            failures.append({"params": {"line": idx + 1},
                             "lhs": stored[idx] if idx < len(stored) else "<missing>",
                             "rhs": derived[idx] if idx < len(derived) else "<missing>"})
            continue
        got, want = stored[idx], derived[idx]
        try:
            head, lhs_txt, rhs_txt = got.split("\t")
            i, j, k, L, M = map(int, head.split())
            ok = (parse_poly(lhs_txt) == keyid.lhs_g(i, j, k, L, M)
                  and parse_poly(rhs_txt) == keyid.rhs_p(i, j, k, L, M)
                  and got == want)
            params = {"i": i, "j": j, "k": k, "L": L, "M": M}
        except ValueError:
            ok = False
            params = {"line": idx + 1}
        if not ok:
            failures.append({"params": params, "lhs": got, "rhs": want})
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return SweepReport("golden", total, failures, elapsed_ms)


# ---------------------------------------------------------------------------
# command line entry point
# ---------------------------------------------------------------------------

def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QGOLLNITZ_JOBS", "1")))
    except ValueError:
        return 1


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_txt, hi_txt = text.split("..", 1)
        try:
            return int(lo_txt), int(hi_txt)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    return v, v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgollnitz",
        description="Sweep exact q-series identities and report mismatches.")
    names = ", ".join(sorted(IDENTITIES))
    parser.add_argument("identity",
                        help=f"identity to sweep ({names}) or 'golden'")
    for name in ("i", "j", "k", "l", "s", "n", "L", "M", "top", "bottom"):
        parser.add_argument(f"--{name}", type=_parse_range, metavar="LO..HI",
                            help=f"inclusive range for parameter {name}")
    parser.add_argument("--order", type=int,
                        help="truncation order for series identities")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--jobs", type=int, default=_default_jobs(),
                        help="worker threads (default 1 or $QGOLLNITZ_JOBS)")
    parser.add_argument("--emit", action="store_true",
                        help="with 'golden': print the freshly derived corpus")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.identity == "golden":
            if args.emit:
                for line in golden_lines():
                    print(line)
                return 0
            report = run_golden()
        else:
            if args.identity not in IDENTITIES:
                raise UsageError(f"unknown identity {args.identity!r}")
            ranges = {}
            for name in ("i", "j", "k", "l", "s", "n", "L", "M",
                         "top", "bottom"):
                value = getattr(args, name)
                if value is not None:
                    ranges[name] = value
            spec = SweepSpec(args.identity, ranges, args.order, args.jobs)
            report = run_sweep(spec)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = render_report(report, args.format)
    sys.stdout.write(out)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
