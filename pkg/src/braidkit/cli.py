"""Command line front end: ``braid <command> ...``.

Word arguments are either braid word text (``"4: 1 -2 3"``) or the path of a
file holding it.  Exit status: 0 success, 1 domain error, 2 usage error,
3 resource cap exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import conjugacy, diagram, dual, garside, hecke, markov, ordering, representations, skein
from .core import BraidWord
from .errors import BraidError, ResourceCapExceeded
from .laurent import Laurent

CONFIG_ENV = "BRAID_CONFIG"


@dataclass
class CliConfig:
    format: str = "text"
    uss_cap: int = conjugacy.DEFAULT_CAP
    skein_budget: int = skein.DEFAULT_BUDGET
    var_names: dict = field(default_factory=dict)
    timing: bool = True

    def validate(self):
        if self.format not in ("text", "json"):
            raise BraidError(f"unknown output format {self.format!r}")
        if self.uss_cap <= 0 or self.skein_budget <= 0:
            raise BraidError("resource caps must be positive")


def load_config(path: str | None) -> CliConfig:
    path = path or os.environ.get(CONFIG_ENV)
    cfg = CliConfig()
    if path:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise BraidError(f"cannot read config {path}: {exc}") from None
        for key, value in data.items():
            if not hasattr(cfg, key):
                raise BraidError(f"unknown config key {key!r}")
            setattr(cfg, key, value)
    return cfg


def _text_arg(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg) as fh:
            return fh.read().strip()
    return arg


def _word(arg: str) -> BraidWord:
    return BraidWord.parse(_text_arg(arg))


def _diagram(arg: str) -> diagram.LinkDiagram:
    return diagram.LinkDiagram.parse(_text_arg(arg))


def nf_json(nf: garside.NormalForm) -> dict:
    return {"kind": nf.kind, "n": nf.n, "inf": nf.inf,
            "factors": [[x + 1 for x in f] for f in nf.factors]}


def _poly(p: Laurent, cfg: CliConfig) -> str:
    return p.render(cfg.var_names or None)


# handlers return (json result, text lines)


def cmd_nf(a, cfg):
    w = _word(a.word)
    nf = dual.dual_normalize_classical(w) if a.dual else garside.normalize(w)
    return nf_json(nf), [str(nf)]


def cmd_eq(a, cfg):
    same = garside.equal(_word(a.u), _word(a.v))
    return same, ["true" if same else "false"]


def cmd_conj(a, cfg):
    ok, cert = conjugacy.are_conjugate(_word(a.u), _word(a.v), cfg.uss_cap)
    witness = str(cert.witness_word()) if ok else None
    lines = ["true", f"witness {witness}"] if ok else ["false"]
    return {"conjugate": ok, "witness": witness}, lines


def cmd_uss(a, cfg):
    uss, _ = conjugacy.ultra_summit_set(garside.normalize(_word(a.word)), cfg.uss_cap)
    return [nf_json(x) for x in uss.elements], [str(x) for x in uss.elements]


def cmd_geodesic(a, cfg):
    g = conjugacy.geodesic_length(garside.normalize(_word(a.word)))
    return g, [str(g)]


def cmd_dual_nf(a, cfg):
    text = _text_arg(a.word)
    if "(" in text:
        nf = dual.dual_normalize(dual.BandWord.parse(text))
    else:
        nf = dual.dual_normalize_classical(BraidWord.parse(text))
    return nf_json(nf), [str(nf), str(dual.dual_nf_band_word(nf))]


def cmd_rep(a, cfg):
    w = _word(a.word)
    fn = {"burau": representations.burau_matrix,
          "burau-reduced": representations.reduced_burau_matrix,
          "lk": representations.lk_matrix}[a.kind]
    m = fn(w)
    rows = [[_poly(x, cfg) for x in row] for row in m]
    return rows, ["[" + ", ".join(r) + "]" for r in rows]


def _homfly_of(a, cfg) -> Laurent:
    if a.diagram:
        d = _diagram(a.diagram)
        if a.method == "trace":
            return hecke.homfly(diagram.to_closed_braid(d).braid)
        return skein.homfly_skein(d, cfg.skein_budget)
    if a.word is None:
        raise BraidError("give a braid word or --diagram FILE")
    w = _word(a.word)
    if a.method == "skein":
        return skein.homfly_skein(diagram.closure(w), cfg.skein_budget)
    return hecke.homfly(w)


def cmd_invariant(a, cfg):
    if a.kind == "alexander" and not a.diagram and a.word is not None and a.method != "skein":
        p = hecke.alexander(_word(a.word))
        return _poly(p, cfg), [_poly(p, cfg)]
    p = _homfly_of(a, cfg)
    if a.kind == "homfly":
        out = p
    elif a.kind == "jones":
        out = hecke.jones_from_homfly(p)
    elif a.kind == "alexander":
        out = hecke.alexander_from_homfly(p)
    else:
        bound = hecke.mfw_bound(p)
        return bound, [str(bound)]
    return _poly(out, cfg), [_poly(out, cfg)]


def cmd_fromdiagram(a, cfg):
    res = diagram.to_closed_braid(_diagram(a.file))
    return ({"braid": str(res.braid), "moves": res.moves, "heights": res.heights,
             "seifert_circles": res.circles}, [str(res.braid)])


def cmd_closure(a, cfg):
    d = diagram.closure(_word(a.word))
    text = d.to_text()
    return text, text.rstrip("\n").split("\n")


def cmd_stabilize(a, cfg):
    w = markov.stabilize(_word(a.word), -1 if a.negative else 1)
    return str(w), [str(w)]


def cmd_destabilize(a, cfg):
    w = markov.destabilize(_word(a.word))
    text = str(w) if w is not None else "none"
    return (str(w) if w is not None else None), [text]


def cmd_order(a, cfg):
    r = ordering.compare(_word(a.u), _word(a.v))
    return str(r), [str(r)]


def cmd_singular_eq(a, cfg):
    u = representations.SingularBraidWord.parse(_text_arg(a.u))
    v = representations.SingularBraidWord.parse(_text_arg(a.v))
    same = representations.singular_equal(u, v)
    return same, ["true" if same else "false"]


def cmd_selftest(a, cfg):
    from .acceptance import run_all
    results = run_all(a.only or None)
    report = [r.to_json() for r in results]
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    if passed != len(results):
        raise _SelftestFailed(report, lines)
    return report, lines


class _SelftestFailed(Exception):
    def __init__(self, report, lines):
        super().__init__("selftest failed")
        self.report = report
        self.lines = lines


def _caches():
    return [garside.classical, hecke._basis_trace, representations._burau_gen,
            representations._lk_gen, representations._times_letter, markov._triple_table]


def _cache_hits() -> int:
    return sum(c.cache_info().hits for c in _caches())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braid", description="Braid group computations.")
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.add_argument("--config", help=f"JSON config file (default: ${CONFIG_ENV})")
    p.add_argument("--uss-cap", type=int, default=None)
    p.add_argument("--skein-budget", type=int, default=None)
    p.add_argument("--var", action="append", default=[], metavar="OLD=NEW",
                   help="rename a polynomial variable in output")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args, help=None):
        sp = sub.add_parser(name, help=help)
        for arg in args:
            sp.add_argument(arg)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("nf", cmd_nf, "word", help="left-greedy normal form")
    sp.add_argument("--dual", action="store_true", help="use band generators")
    add("eq", cmd_eq, "u", "v", help="word problem")
    add("conj", cmd_conj, "u", "v", help="conjugacy with a witness")
    add("uss", cmd_uss, "word", help="ultra summit set")
    add("geodesic", cmd_geodesic, "word", help="geodesic length over the conjugacy class")
    add("dual-nf", cmd_dual_nf, "word", help="dual normal form of a classical or band word")
    sp = sub.add_parser("rep", help="matrix representations")
    sp.add_argument("kind", choices=("burau", "burau-reduced", "lk"))
    sp.add_argument("word")
    sp.set_defaults(fn=cmd_rep)
    sp = sub.add_parser("invariant", help="polynomial invariants of the closure")
    sp.add_argument("kind", choices=("homfly", "jones", "alexander", "mfw"))
    sp.add_argument("word", nargs="?")
    sp.add_argument("--diagram", help="PD diagram file instead of a braid")
    sp.add_argument("--method", choices=("trace", "skein"), default=None)
    sp.set_defaults(fn=cmd_invariant)
    add("fromdiagram", cmd_fromdiagram, "file", help="Yamada-Vogel braiding of a diagram")
    add("closure", cmd_closure, "word", help="closed braid diagram in PD format")
    sp = add("stabilize", cmd_stabilize, "word", help="Markov stabilization")
    sp.add_argument("--negative", action="store_true")
    add("destabilize", cmd_destabilize, "word", help="Markov destabilization if one is found")
    add("order", cmd_order, "u", "v", help="Dehornoy order: <, = or >")
    add("singular-eq", cmd_singular_eq, "u", "v", help="equality of singular braids")
    sp = add("selftest", cmd_selftest, help="run the acceptance checks")
    sp.add_argument("--only", type=int, action="append", metavar="N")
    return p


def _merge(args, cfg: CliConfig) -> CliConfig:
    if args.format:
        cfg.format = args.format
    if args.uss_cap is not None:
        cfg.uss_cap = args.uss_cap
    if args.skein_budget is not None:
        cfg.skein_budget = args.skein_budget
    for item in args.var:
        old, sep, new = item.partition("=")
        if not sep or not old or not new:
            raise BraidError(f"bad --var {item!r}, expected OLD=NEW")
        cfg.var_names[old] = new
    if args.no_timing:
        cfg.timing = False
    cfg.validate()
    return cfg


def _inputs(args) -> dict:
    skip = {"fn", "command", "format", "config", "uss_cap", "skein_budget", "var", "no_timing"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _merge(args, load_config(args.config))
    except BraidError as exc:
        print(f"error: {exc}", file=err)
        return 2
    hits0 = _cache_hits()
    start = time.perf_counter()
    status = 0
    try:
        result, lines = args.fn(args, cfg)
    except _SelftestFailed as exc:
        result, lines, status = exc.report, exc.lines, 1
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=err)
        return 3
    except BraidError as exc:
        print(f"error: {exc}", file=err)
        return 1
    elapsed = (time.perf_counter() - start) * 1000 if cfg.timing else 0
    if cfg.format == "json":
        doc = {"command": args.command, "input": _inputs(args), "result": result,
               "stats": {"elapsed_ms": round(elapsed, 3), "cache_hits": _cache_hits() - hits0}}
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
