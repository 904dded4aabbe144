"""Command-line front end: ``fockr {lcoeff,block,verify} ...``.

Exit status: 0 on success, 1 when a requested check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import cache, verify
from .cache import SCHEMA_VERSION, SchemaMismatch
from .fock import FockBlock, assemble_full_block
from .params import params_from_context
from .ratfunc import PRIME, PRIME_FIELD, RATIONAL_POINT, SYMBOLIC, EvalContext
from .toroidal import LTable, RbarCoeffs, L_table, entries_from_json, rbar_coeffs

log = logging.getLogger("fockr")

MODES = {"symbolic": SYMBOLIC, "eval": RATIONAL_POINT, "modp": PRIME_FIELD}
DEFAULT_WEIGHT = {"symmetry": 4, "ybe": 2, "askew": 4, "macdonald": 4, "coproduct": 3}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    weight: int | None = None
    degree: int | None = None
    check: str | None = None
    mode: str = "symbolic"
    assign: dict = field(default_factory=dict)
    prime: int = PRIME
    seed: int = 0
    out: str | None = None
    cache_dir: str | None = None

    def __post_init__(self):
        for name in ("weight", "degree"):
            x = getattr(self, name)
            if x is not None and x < 0:
                raise UsageError(f"--{name} must be non-negative")
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")

    def context(self, extra=("q", "t")) -> EvalContext:
        mode = MODES[self.mode]
        if mode == SYMBOLIC:
            return EvalContext()
        drawn = EvalContext.random(mode, self.seed, variables=extra).assignments
        drawn.update(self.assign)
        return EvalContext(mode, drawn, prime=self.prime, seed=self.seed)


def parse_assign(text: str | None) -> dict:
    """``q=2/3,t=5`` -> {"q": Fraction(2, 3), "t": Fraction(5)}."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in ("q", "t", "u", "v"):
            raise UsageError(f"bad assignment {item!r}")
        try:
            out[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad value in {item!r}") from exc
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=sorted(MODES), default="symbolic")
    common.add_argument("--assign", default=None, help="q=a/b,t=c/d[,u=..,v=..]")
    common.add_argument("--prime", type=int, default=PRIME)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None)
    common.add_argument("--cache", default=None, help="directory for cached tables")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="fockr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (("lcoeff", "emit the L-table of one weight"),
                           ("rbar", "emit R_{mu,nu}(u) of one weight"),
                           ("block", "emit the R-matrix block of one weight")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--weight", type=int, required=True)
    p = sub.add_parser("verify", parents=[common], help="run a consistency check")
    p.add_argument("check", choices=verify.CHECKS + ("all",))
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--degree", type=int, default=None)
    return parser


def config_from_args(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO)
    return RunConfig(command=args.command, weight=args.weight,
                     degree=getattr(args, "degree", None), check=getattr(args, "check", None),
                     mode=args.mode, assign=parse_assign(args.assign), prime=args.prime,
                     seed=args.seed, out=args.out, cache_dir=args.cache)


# ---------------------------------------------------------------------------
# artifacts


def stamp(obj: dict, kind: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, **obj}


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def export_artifact(path, obj, kind: str) -> None:
    cache.atomic_write(Path(path), stamp(obj.to_json(), kind))


def import_artifact(path, kind: str):
    obj = json.loads(Path(path).read_text())
    found = obj.get("schema_version")
    if found != SCHEMA_VERSION:
        raise SchemaMismatch(f"schema version mismatch: expected {SCHEMA_VERSION}, found {found}")
    if obj.get("kind") != kind:
        raise ValueError(f"expected a {kind!r} artifact, found {obj.get('kind')!r}")
    if kind == "ltable":
        return LTable(obj["weight"], entries_from_json(obj))
    if kind == "rbar":
        return RbarCoeffs(obj["weight"], entries_from_json(obj))
    if kind == "block":
        return FockBlock.from_json(obj)
    if kind == "report":
        return verify.CheckReport(**{k: obj[k] for k in
                                     ("name", "parameters", "verdict", "counterexample", "details")})
    raise ValueError(f"unknown artifact kind {kind!r}")


def export_import(path, kind: str, obj=None):
    """Write ``obj`` to ``path`` when given, then read the file back."""
    if obj is not None:
        export_artifact(path, obj, kind)
    return import_artifact(path, kind)


# ---------------------------------------------------------------------------


def run_check(cfg: RunConfig) -> list:
    names = verify.CHECKS if cfg.check == "all" else (cfg.check,)
    reports = []
    for name in names:
        level = cfg.degree if name == "coproduct" and cfg.degree is not None else cfg.weight
        level = DEFAULT_WEIGHT.get(name) if level is None else level
        if name == "sixvertex":
            reports.append(verify.verify_sixvertex())
        elif name == "symmetry":
            reports.append(verify.verify_symmetry(level, params_from_context(cfg.context())))
        elif name == "askew":
            reports.append(verify.verify_askew(level, params_from_context(cfg.context())))
        elif name == "macdonald":
            reports.append(verify.verify_macdonald(level, level, params_from_context(cfg.context())))
        elif name == "coproduct":
            extra = ("q", "t", "u") if cfg.mode == "modp" else ("q", "t")
            reports.append(_redrawing(cfg, extra, lambda ctx: verify.verify_coproduct(level, ctx)))
        elif name == "ybe":
            extra = ("q", "t", "u", "v") if cfg.mode == "modp" else ("q", "t")
            reports.append(_redrawing(cfg, extra, lambda ctx: verify.verify_ybe(level, ctx)))
    return reports


def _redrawing(cfg: RunConfig, extra, check, attempts: int = 8):
    """Run ``check`` at the configured point, re-drawing random points that hit a pole."""
    seed = cfg.seed
    for _ in range(attempts):
        ctx = RunConfig(**{**cfg.__dict__, "seed": seed}).context(extra)
        try:
            report = check(ctx)
        except ZeroDivisionError:
            if cfg.assign or ctx.mode == SYMBOLIC:
                raise
            log.info("pole at seed %d, re-drawing", seed)
            seed += 1
            continue
        if seed != cfg.seed:
            report.details["redrawn_from_seed"] = cfg.seed
        return report
    raise ZeroDivisionError(f"no pole-free point after {attempts} draws")


def run(cfg: RunConfig) -> int:
    cache.set_cache_dir(cfg.cache_dir)
    if cfg.command == "verify":
        reports = run_check(cfg)
        payload = (stamp(reports[0].to_json(), "report") if len(reports) == 1
                   else stamp({"reports": [r.to_json() for r in reports]}, "reports"))
        code = 0 if all(r.passed for r in reports) else 1
    else:
        extra = ("q", "t", "u") if cfg.mode == "modp" else ("q", "t")
        params = params_from_context(cfg.context(extra))
        if cfg.command == "lcoeff":
            payload = stamp(L_table(cfg.weight, params).to_json(), "ltable")
        elif cfg.command == "rbar":
            payload = stamp(rbar_coeffs(cfg.weight, params).to_json(), "rbar")
        else:
            payload = stamp(assemble_full_block(cfg.weight, params).to_json(), "block")
        code = 0
    text = dumps(payload)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except UsageError as exc:
        print(f"fockr: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:          # argparse reports usage errors this way
        return int(exc.code or 0)
    try:
        return run(cfg)
    except (UsageError, SchemaMismatch) as exc:
        print(f"fockr: error: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"fockr: evaluation point is a pole: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
