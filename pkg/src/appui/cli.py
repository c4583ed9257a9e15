"""Command-line interface.

Exit codes: 0 ok, 2 usage or validation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import affine as af
from . import oracle as orc
from . import standard as st
from . import worked
from .chevalley import ChevalleyAlgebra, chevalley_algebra
from .corpus import DEFAULT_TYPES, sweep
from .rootsys import InvalidLieType, LieType, Root, RootSystem, build_root_system

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 2, 3


class UsageError(ValueError):
    pass


# -- descriptors -----------------------------------------------------------


@dataclass(frozen=True)
class SubalgebraDescriptor:
    """Input of ``compute`` and ``affine-verify``.

    ``psi`` holds 1-based simple-root indices, matching the ``a1..ap`` tokens.
    """

    type: LieType
    antichain: tuple[Root, ...]
    psi: Optional[tuple[int, ...]] = None
    n: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "antichain": [list(a) for a in self.antichain],
            "psi": None if self.psi is None else list(self.psi),
            "n": self.n,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SubalgebraDescriptor":
        psi = data.get("psi")
        return cls(
            type=LieType.parse(data["type"]),
            antichain=tuple(tuple(int(x) for x in a) for a in data["antichain"]),
            psi=None if psi is None else tuple(int(i) for i in psi),
            n=data.get("n"),
        )

    @property
    def psi_set(self) -> Optional[frozenset[int]]:
        return None if self.psi is None else frozenset(i - 1 for i in self.psi)


_TERM = re.compile(r"([+-]?)(\d*)a(\d+)")


def parse_root(text: str, rank: int) -> Root:
    """Coordinates "0,1,2,2" or a sum of simple-root tokens such as "a2+2a3+2a4"."""
    text = text.strip().replace(" ", "")
    if not text:
        raise UsageError("empty root")
    if "a" not in text:
        try:
            coords = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise UsageError(f"cannot parse root {text!r}") from None
    else:
        pos = 0
        c = [0] * rank
        for m in _TERM.finditer(text):
            if m.start() != pos:
                break
            i = int(m.group(3))
            if not 1 <= i <= rank:
                raise UsageError(f"simple root index {i} out of range 1..{rank}")
            k = int(m.group(2) or 1)
            c[i - 1] += -k if m.group(1) == "-" else k
            pos = m.end()
        if pos != len(text):
            raise UsageError(f"cannot parse root {text!r}")
        coords = tuple(c)
    if len(coords) != rank:
        raise UsageError(f"root {text!r} has {len(coords)} coordinates, rank is {rank}")
    return coords


def parse_antichain(values: Sequence[str], rank: int) -> tuple[Root, ...]:
    roots = []
    for v in values:
        for piece in v.split(";"):
            if piece.strip():
                roots.append(parse_root(piece, rank))
    return tuple(roots)


def parse_psi(text: str, rank: int) -> tuple[int, ...]:
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        tok = tok[1:] if tok.lower().startswith("a") else tok
        if not tok.isdigit() or not 1 <= int(tok) <= rank:
            raise UsageError(f"bad Psi entry {tok!r}; use a1..a{rank} or 1..{rank}")
        out.append(int(tok))
    if not out:
        raise UsageError("Psi must be nonempty")
    return tuple(sorted(set(out)))


def _descriptor(args) -> SubalgebraDescriptor:
    if args.descriptor:
        with open(args.descriptor) as fh:
            desc = SubalgebraDescriptor.from_json(json.load(fh))
        if args.n is not None:
            desc = SubalgebraDescriptor(desc.type, desc.antichain, desc.psi, args.n)
        return desc
    if not args.type or not args.antichain:
        raise UsageError("give --type and --antichain, or --descriptor")
    t = LieType.parse(args.type)
    psi = parse_psi(args.psi, t.rank) if args.psi else None
    return SubalgebraDescriptor(t, parse_antichain(args.antichain, t.rank), psi, args.n)


# -- report helpers ----------------------------------------------------------


def _simple_names(rs: RootSystem, S) -> list[str]:
    return [f"a{i + 1}" for i in sorted(S)]


def _root_names(rs: RootSystem, roots) -> list[str]:
    return [rs.format_root(a) for a in roots]


def derived_report(rs: RootSystem, nil: st.NilpotentStandard) -> dict:
    return {
        "R": _root_names(rs, nil.R),
        "R1": _root_names(rs, nil.R1),
        "S1": _simple_names(rs, nil.S1),
        "S2": _simple_names(rs, nil.S2),
        "delta1_pos": _root_names(rs, nil.delta1_pos),
        "R2": _root_names(rs, nil.R2),
        "RC": None if nil.RC is None else _root_names(rs, nil.RC),
    }


def r3_readings(g: ChevalleyAlgebra, s: st.StandardSubalgebra) -> dict:
    """Both readings of the excluded simple roots, judged against [m, g]."""
    nil = s.nil
    vm = orc.appui_oracle(g, s.m)
    return {
        "r3_adopted": {
            "R3": _simple_names(g.rs, nil.R3),
            "rule": "simple roots extremal for no root of R1",
            "matches_oracle": st.appui_nilpotent(g, nil, nil.R3) == vm,
        },
        "r3_literal": {
            "R3": _simple_names(g.rs, nil.R3_literal),
            "rule": "complement of S2",
            "matches_oracle": st.appui_nilpotent(g, nil, nil.R3_literal) == vm,
        },
    }


def compute_report(desc: SubalgebraDescriptor, mode: str, explain: bool = False, allow_s2: bool = False) -> tuple[dict, bool]:
    g = chevalley_algebra(desc.type)
    s = st.build_standard(g, desc.antichain, desc.psi_set, allow_s2_components=allow_s2)
    rho = st.normalizer_finite(g, s)
    V_formula = st.appui_formula(g, s)
    V_oracle = orc.appui_oracle(g, s.tau)
    ok = True
    report: dict = {
        "descriptor": desc.to_json(),
        "mode": mode,
        "tau": g.describe(s.tau),
        "normalizer": g.describe(rho),
    }
    appui: dict = {}
    if mode in ("formula", "both"):
        appui["formula"] = g.describe(V_formula)
    if mode in ("oracle", "both"):
        appui["oracle"] = g.describe(V_oracle)
    if mode == "both":
        norm_ok = orc.normalizer_oracle(g, s.tau) == rho
        appui["agree"] = V_formula == V_oracle
        report["normalizer_agrees_with_oracle"] = norm_ok
        ok = appui["agree"] and norm_ok
    report["appui"] = appui
    V = V_oracle if mode == "oracle" else V_formula
    report.update(r3_readings(g, s))
    if s.psi is not None:
        p_minus = st.p_psi(g, s, -1)
        vm = orc.appui_oracle(g, s.m) if mode == "oracle" else st.appui_nilpotent(g, s.nil)
        report["p_psi_minus"] = g.describe(p_minus)
        report["V == V_m"] = V == vm
        report["V == g"] = V == g.full()
    if explain:
        report["derived"] = derived_report(g.rs, s.nil)
        if s.nil.is_complete and s.psi is None:
            report["complete_form_agrees"] = st.appui_complete(g, s.nil) == V
    ref = worked.compare(g, s, V)
    if ref is not None:
        report["published_example"] = ref
    if desc.n is not None:
        T = af.build_tau_bar(g, s.tau, V, desc.n, rho)
        report["affine"] = {
            "n": desc.n,
            "tau_bar": af.affine_roots(g, T),
            "has_K": T.has_K,
            "tail_degree": T.tail,
        }
        if ref is not None and "appui_cartan_dim_printed" in ref:
            top = af.AffineRoot(None, desc.n + 1).format(g)
            report["affine"]["imaginary_readings"] = {
                "printed": top,
                "exact": top if len(V.cartan) == g.rank else None,
            }
    return report, ok


def affine_report(
    desc: SubalgebraDescriptor, cap: Optional[int] = None, remove_root: Optional[Root] = None, allow_s2: bool = False
) -> tuple[dict, bool]:
    if desc.n is None or desc.n < 1:
        raise UsageError("--n must be a positive integer")
    g = chevalley_algebra(desc.type)
    s = st.build_standard(g, desc.antichain, desc.psi_set, allow_s2_components=allow_s2)
    rho = st.normalizer_finite(g, s)
    V = st.appui_formula(g, s)
    report: dict = {"descriptor": desc.to_json()}
    if remove_root is not None:
        if not V.has_root(remove_root):
            raise UsageError(f"{g.rs.format_root(remove_root)} is not a root space of V")
        V = V.without(remove_root)
        report["removed_root"] = g.rs.format_root(remove_root)
    pre = {
        "V_contains_tau_g": V.contains(g.bracket_spaces(s.tau, g.full())),
        "V_stable_under_normalizer": V.contains(g.bracket_spaces(V, rho)),
    }
    report["preconditions"] = pre
    T = af.build_tau_bar(g, s.tau, V, desc.n, rho, check=False)
    rep = af.verify_standard(g, T, rho, cap=cap)
    report["verify"] = {
        "is_subalgebra": rep.is_subalgebra,
        "ideal_of_claimed_normalizer": rep.ideal_of_claimed_normalizer,
        "maximal": rep.maximal,
        "cap": rep.cap,
        "notes": rep.notes,
        "passed": rep.passed,
    }
    try:
        N = af.affine_normalizer(g, T, cap)
        report["normalizer"] = g.describe(N.layer(g, 0))
        report["normalizer_matches_rho"] = N == af.rho_bar(g, rho)
    except (af.NoFamilyNormalizer, af.IndeterminateError) as exc:
        report["normalizer"] = None
        report["normalizer_matches_rho"] = False
        report["normalizer_error"] = str(exc)
    try:
        cl = af.classify_graded(g, T)
        report["classification"] = {
            "round_trip": cl.tau == s.tau and cl.V == V and cl.n == desc.n,
            "relations": cl.relations,
        }
    except af.GradedRejection as exc:
        report["classification"] = {"round_trip": False, "rejected": exc.reasons}
    report["truncation_is_standard"] = af.verify_standard(g, af.appui_truncation(g, V, desc.n)).passed
    report["tau_bar"] = af.affine_roots(g, T)
    ok = (
        all(pre.values())
        and rep.passed
        and report["normalizer_matches_rho"]
        and report["classification"]["round_trip"]
        and report["truncation_is_standard"]
    )
    report["passed"] = ok
    return report, ok


def roots_report(t: LieType) -> dict:
    rs = build_root_system(t)
    return {
        "type": str(t),
        "rank": rs.rank,
        "cartan_matrix": [list(r) for r in rs.cartan],
        "positive_roots": [
            {"coords": list(a), "name": rs.format_root(a), "height": sum(a)} for a in rs.positive_roots
        ],
        "count": len(rs.positive_roots),
        "highest_root": list(rs.highest_root),
    }


def antichains_report(t: LieType, include_empty: bool) -> dict:
    rs = build_root_system(t)
    items = [[rs.format_root(a) for a in R] for R in rs.enumerate_antichains(include_empty)]
    return {"type": str(t), "count": len(items), "antichains": items}


# -- output ------------------------------------------------------------------


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)


def _emit(report: dict, as_json: bool):
    if as_json:
        print(dumps(report))
        return
    for key, val in report.items():
        if isinstance(val, (dict, list)):
            print(f"{key}: {json.dumps(val, sort_keys=True, ensure_ascii=False)}")
        else:
            print(f"{key}: {val}")


# -- argparse ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="appui", description="Standard subalgebras, their normalizers and appui subspaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON")

    def add_desc(sp):
        sp.add_argument("--type", help="Lie type such as B4")
        sp.add_argument("--antichain", action="append", help="root(s): '0,1,2,2' or 'a3'; ';' separates")
        sp.add_argument("--psi", help="simple roots of Psi: 'a4', 'a1,a2' or '1,2'")
        sp.add_argument("--descriptor", help="JSON descriptor file instead of --type/--antichain/--psi")
        sp.add_argument("--allow-s2-components", action="store_true", help="accept any component of Pi\\S2 as Psi")

    sp = sub.add_parser("roots", help="list positive roots")
    sp.add_argument("--type", required=True)
    add_common(sp)

    sp = sub.add_parser("antichains", help="enumerate antichains of the root poset")
    sp.add_argument("--type", required=True)
    sp.add_argument("--include-empty", action="store_true")
    add_common(sp)

    sp = sub.add_parser("compute", help="tau, its normalizer and its appui subspace")
    add_desc(sp)
    sp.add_argument("--mode", choices=("formula", "oracle", "both"), default="both")
    sp.add_argument("--n", type=int, help="also render the graded lift at this degree")
    sp.add_argument("--explain", action="store_true", help="include the derived root sets")
    add_common(sp)

    sp = sub.add_parser("affine-verify", help="check the graded lift of tau")
    add_desc(sp)
    sp.add_argument("--n", type=int, help="degree of the lowest layer (>= 1)")
    sp.add_argument("--cap", type=int, help="truncation degree for the checks")
    sp.add_argument("--remove-root", help="drop this root space from V before checking")
    add_common(sp)

    sp = sub.add_parser("sweep", help="run every check over a corpus of algebras")
    sp.add_argument("--types", default=",".join(DEFAULT_TYPES))
    sp.add_argument("--max-rank", type=int)
    sp.add_argument("--n", default="", help="comma-separated affine degrees to check, e.g. 1,2")
    sp.add_argument("--mutations", action="store_true", help="also run single-root-space removals")
    sp.add_argument("--no-unions", action="store_true", help="single components only for Psi")
    sp.add_argument("--cases", action="store_true", help="include per-case results")
    add_common(sp)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "roots":
            _emit(roots_report(LieType.parse(args.type)), args.json)
            return EXIT_OK
        if args.command == "antichains":
            _emit(antichains_report(LieType.parse(args.type), args.include_empty), args.json)
            return EXIT_OK
        if args.command == "compute":
            desc = _descriptor(args)
            if desc.n is not None and desc.n < 1:
                raise UsageError("--n must be a positive integer")
            report, ok = compute_report(desc, args.mode, args.explain, args.allow_s2_components)
            _emit(report, args.json)
            return EXIT_OK if ok else EXIT_FAIL
        if args.command == "affine-verify":
            desc = _descriptor(args)
            removed = parse_root(args.remove_root, desc.type.rank) if args.remove_root else None
            report, ok = affine_report(desc, args.cap, removed, args.allow_s2_components)
            _emit(report, args.json)
            return EXIT_OK if ok else EXIT_FAIL
        if args.command == "sweep":
            types = [LieType.parse(t) for t in args.types.split(",") if t.strip()]
            if args.max_rank is not None:
                types = [t for t in types if t.rank <= args.max_rank]
            ns = tuple(int(x) for x in args.n.split(",") if x.strip())
            if any(n < 1 for n in ns):
                raise UsageError("affine degrees must be positive")
            report = sweep([str(t) for t in types], ns, args.mutations, not args.no_unions, args.cases)
            _emit(report, args.json)
            return EXIT_OK if report["summary"]["failures"] == 0 else EXIT_FAIL
    except (UsageError, InvalidLieType, st.InvalidAntichain, st.InvalidPsi, af.PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None):
    sys.exit(run(argv))
