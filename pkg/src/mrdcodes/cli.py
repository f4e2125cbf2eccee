"""``mrdcodes`` command line: setup | encode | corrupt | decode | simulate | selftest.

Every command reads JSON from ``--in`` (default stdin) and writes JSON to
``--out`` (default stdout). Field elements are hex strings. Randomness for
trial ``i`` comes from ``random.Random(f"{seed}/{i}")``: ``encode`` draws the
message from it and ``corrupt`` replays those draws before sampling the
error, so ``encode | corrupt`` with ``--trial i`` reproduces simulation trial i.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import channels
from .channels import ModelAParams, ModelBParams, model_a_setup
from .codes import CodeSpec, encode, new_code
from .decoders import decode
from .errors import DecodeAmbiguous, RankCodeError
from .field import FieldContext, norm_to_base
from .simulation import draw_error, run_trials, trial_rng

MAX_EPS_DRAWS = 1000


class ParamError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parameter documents


def param_document(spec: CodeSpec, model, seed=0, mrd_checked=True) -> dict:
    ctx = spec.ctx
    doc = {
        "p": ctx.p, "l": ctx.l, "n": ctx.n, "s": ctx.s, "k": spec.k,
        "family": spec.family, "h": spec.h,
        "eps": ctx.to_hex(spec.eps) if spec.twisted else None,
        "l0": ctx.l0, "u": ctx.u,
        "modulus": list(ctx.modulus),
        "alphas": [ctx.to_hex(a) for a in ctx.alphas],
        "seed": seed,
    }
    if isinstance(model, ModelAParams):
        doc["model"] = {"type": "A", "theta1": model.theta1, "theta2": model.theta2,
                        "variant": model.variant}
    elif isinstance(model, ModelBParams):
        doc["model"] = {"type": "B", "parity": model.parity}
    else:
        doc["model"] = {"type": "none"}
    if not mrd_checked:
        doc["mrd_checked"] = False
    return doc


def _field(doc, name, required=True, default=None):
    if name not in doc or doc[name] is None:
        if required:
            raise ParamError(f"parameter document is missing {name!r}")
        return default
    return doc[name]


def load_params(doc: dict):
    """ParamDocument -> (CodeSpec, model); errors name the offending field."""
    try:
        p, l, n = int(_field(doc, "p")), int(_field(doc, "l")), int(_field(doc, "n"))
        s, k = int(_field(doc, "s", default=1, required=False)), int(_field(doc, "k"))
        l0 = _field(doc, "l0", required=False)
        u = _field(doc, "u", required=False)
    except (TypeError, ValueError) as exc:
        raise ParamError(f"malformed numeric parameter: {exc}") from None
    if l0 is not None and u is not None and int(l0) * int(u) != l:
        raise ParamError(f"u={u} and l0={l0} do not multiply to l={l}")
    try:
        ctx = FieldContext(p, l, n, s, l0=l0, modulus=doc.get("modulus"))
    except ValueError as exc:
        raise ParamError(f"field parameters (p, l, n, s, l0, modulus): {exc}") from None
    if doc.get("alphas") is not None:
        try:
            ctx = ctx.with_alphas([ctx.from_hex(a) for a in doc["alphas"]])
        except ValueError as exc:
            raise ParamError(f"alphas: {exc}") from None
    family = _field(doc, "family")
    eps = doc.get("eps")
    try:
        spec = new_code(ctx, family, k, int(doc.get("h") or 0),
                        ctx.from_hex(eps) if eps else 0,
                        require_mrd=doc.get("mrd_checked", True))
    except ValueError as exc:
        raise ParamError(f"code parameters (family, k, h, eps): {exc}") from None
    m = doc.get("model") or {"type": "none"}
    mtype = m.get("type", "none")
    try:
        if mtype == "A":
            variant = m.get("variant") or (channels.GABIDULIN_BEYOND if family == "GG"
                                           else channels.TWISTED_BEYOND)
            model = ModelAParams(ctx, int(m["theta1"]), int(m["theta2"]), variant)
        elif mtype == "B":
            model = ModelBParams(m.get("parity") or ("odd" if n % 2 else "even"))
            model.check(ctx)
        elif mtype in ("none", None):
            model = None
        else:
            raise ParamError(f"model.type must be A, B or none, got {mtype!r}")
    except KeyError as exc:
        raise ParamError(f"model: missing {exc.args[0]!r}") from None
    except ValueError as exc:
        raise ParamError(f"model: {exc}") from None
    return spec, model


def setup_from_flags(a) -> dict:
    try:
        ctx = FieldContext(a.p, a.l, a.n, a.s, l0=a.q0exp)
    except ValueError as exc:
        raise ParamError(f"field parameters: {exc}") from None
    if a.u is not None and (a.q0exp is None or a.q0exp * a.u != a.l):
        raise ParamError(f"--u={a.u} needs --q0exp with q0exp * u = l={a.l}")
    model = None
    if a.model == "A":
        variant = channels.GABIDULIN_BEYOND if a.family == "GG" else channels.TWISTED_BEYOND
        try:
            model = model_a_setup(ctx, a.k, variant)
        except ValueError as exc:
            raise ParamError(f"model A: {exc}") from None
        ctx = model.ctx
    elif a.model == "B":
        model = ModelBParams.for_context(ctx)
    check = not a.no_mrd_check
    eps = 0
    if a.family != "GG":
        if a.eps is not None and a.random_eps:
            raise ParamError("give either --eps or --random-eps")
        if a.eps is not None:
            try:
                eps = ctx.from_hex(a.eps)
            except ValueError as exc:
                raise ParamError(f"eps: {exc}") from None
        elif a.random_eps:
            eps = _random_eps(ctx, a.family, a.k, random.Random(f"{a.seed}/setup"), check)
        else:
            raise ParamError(f"{a.family} needs --eps or --random-eps")
    try:
        spec = new_code(ctx, a.family, a.k, a.h, eps, require_mrd=check)
    except ValueError as exc:
        raise ParamError(f"code parameters: {exc}") from None
    return param_document(spec, model, a.seed, check)


def _random_eps(ctx, family, k, rng, check):
    base, u = ("q", 1) if family == "GTG" else ("q0", ctx.u)
    bad = ctx.pow(ctx.neg(1), ctx.n * k * (u or 1))
    for _ in range(MAX_EPS_DRAWS):
        e = ctx.random_nonzero(rng)
        if not check or norm_to_base(ctx, e, base) != bad:
            return e
    raise ParamError(f"eps: no draw passed the norm condition in {MAX_EPS_DRAWS} tries "
                     f"(every nonzero eps has norm (-1)^(nk) here)")


# ---------------------------------------------------------------------------
# I/O helpers


def _read_json(path):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return json.loads(text)


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _vector(ctx, doc, key):
    vec = doc.get(key) if isinstance(doc, dict) else doc
    if not isinstance(vec, list):
        raise ParamError(f"input needs a {key!r} list of hex strings")
    try:
        return [ctx.from_hex(x) for x in vec]
    except (ValueError, TypeError) as exc:
        raise ParamError(f"{key}: {exc}") from None


def _load_param_file(path):
    try:
        return load_params(json.load(open(path)))
    except OSError as exc:
        raise ParamError(f"cannot read parameter file: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_setup(a):
    _write(_dump(setup_from_flags(a)), a.out)
    return 0


def cmd_encode(a):
    spec, _ = _load_param_file(a.params)
    ctx = spec.ctx
    if a.random:
        rng = trial_rng(a.seed, a.trial)
        m = [ctx.random_element(rng) for _ in range(spec.k)]
    else:
        m = _vector(ctx, _read_json(a.inp), "message")
    c = encode(spec, m)
    _write(_dump({"message": [ctx.to_hex(x) for x in m],
                  "codeword": [ctx.to_hex(x) for x in c]}), a.out)
    return 0


def cmd_corrupt(a):
    spec, model = _load_param_file(a.params)
    ctx = spec.ctx
    doc = _read_json(a.inp)
    c = _vector(ctx, doc, "codeword")
    rng = trial_rng(a.seed, a.trial)
    for _ in range(spec.k):  # replay the message draws of this trial
        ctx.random_element(rng)
    if a.t is None and not isinstance(model, ModelBParams):
        raise ParamError("--t is required unless the model is B")
    e = draw_error(spec, model, a.t, rng)
    r = channels.apply_error(c, e)
    out = dict(doc) if isinstance(doc, dict) else {"codeword": doc}
    out.update({"received": [ctx.to_hex(x) for x in r], "error": e.to_dict()})
    _write(_dump(out), a.out)
    return 0


def cmd_decode(a):
    spec, model = _load_param_file(a.params)
    ctx = spec.ctx
    r = _vector(ctx, _read_json(a.inp), "received")
    try:
        rep = decode(spec, model, r)
    except DecodeAmbiguous as exc:
        _write(_dump({"status": "ambiguous", "error": str(exc),
                      "candidates": [c.to_dict(a.verbose) for c in exc.candidates]}), a.out)
        return 1
    except RankCodeError as exc:
        _write(_dump({"status": "failure", "error": f"{type(exc).__name__}: {exc}"}), a.out)
        return 1
    out = {"status": "ok"}
    out.update(rep.to_dict(a.verbose))
    _write(_dump(out), a.out)
    return 0


def stats_csv(stats: dict) -> str:
    row = {k: v for k, v in stats.items() if k != "branch_histogram"}
    for name, count in stats["branch_histogram"].items():
        row[f"branch_{name}"] = count
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
    w.writeheader()
    w.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()


def cmd_simulate(a):
    spec, model = _load_param_file(a.params)
    if a.t is None and not isinstance(model, ModelBParams):
        raise ParamError("--t is required unless the model is B")
    seed = a.seed if a.seed is not None else 0
    stats = run_trials(spec, model, a.t or 0, a.trials, seed, timing=a.timing).to_dict()
    _write(stats_csv(stats) if a.format == "csv" else _dump(stats), a.out)
    return 0


def cmd_selftest(a):
    """Small end-to-end round trips over each family and channel."""
    from . import oracle
    from .field import solve_quadratic
    checks = []

    ctx = FieldContext(2, 1, 4)
    bad = sum(sorted(solve_quadratic(ctx, r, s)) != oracle.quad_roots_bruteforce(ctx, r, s)
              for r in ctx.elements() for s in ctx.elements())
    checks.append(("quadratic solver F_16", bad == 0))

    def roundtrip(name, spec, model, t, trials=10):
        st = run_trials(spec, model, t, trials, seed=a.seed or 0)
        checks.append((name, st.successes + st.ambiguous == trials and st.wrong == 0))

    pa = model_a_setup(FieldContext(2, 1, 6), 3)
    roundtrip("GG model A beyond half", new_code(pa.ctx, "GG", 3), pa, 2)
    ctx = FieldContext(2, 2, 4)
    eps = _random_eps(ctx, "GTG", 1, random.Random("selftest"), True)
    pa = model_a_setup(ctx, 1, channels.TWISTED_BEYOND)
    roundtrip("GTG model A", new_code(pa.ctx, "GTG", 1, 1, eps), pa, 1)
    ctx = FieldContext(2, 2, 7)
    eps = _random_eps(ctx, "GTG", 3, random.Random("selftest"), True)
    roundtrip("GTG model B", new_code(ctx, "GTG", 3, 1, eps), ModelBParams("odd"), 0)

    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=sys.stderr)
    _write(_dump({name: ok for name, ok in checks}), a.out)
    return 0 if all(ok for _, ok in checks) else 1


# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="mrdcodes", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def io_flags(sp, inp=True):
        if inp:
            sp.add_argument("--in", dest="inp", help="input JSON (default stdin)")
        sp.add_argument("--out", help="output path (default stdout)")

    sp = sub.add_parser("setup", help="validate parameters and write a parameter document")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--l", type=int, default=1)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, default=1)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--family", choices=("GG", "GTG", "AGTG"), default="GG")
    sp.add_argument("--h", type=int, default=0)
    sp.add_argument("--eps", help="hex field element")
    sp.add_argument("--random-eps", action="store_true")
    sp.add_argument("--q0exp", type=int, help="l0, with q0 = p^l0 (AGTG)")
    sp.add_argument("--u", type=int, help="l / l0, checked against --q0exp")
    sp.add_argument("--model", choices=("A", "B", "none"), default="none")
    sp.add_argument("--no-mrd-check", action="store_true",
                    help="accept an eps that fails the norm condition (non-MRD code)")
    sp.add_argument("--seed", type=int, default=0)
    io_flags(sp, inp=False)
    sp.set_defaults(func=cmd_setup)

    for name, func, hlp in (("encode", cmd_encode, "encode a message"),
                            ("corrupt", cmd_corrupt, "add a channel error to a codeword"),
                            ("decode", cmd_decode, "decode a received word"),
                            ("simulate", cmd_simulate, "run seeded Monte-Carlo trials")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("--params", required=True, help="parameter document")
        sp.add_argument("--seed", type=int, default=0)
        io_flags(sp, inp=name != "simulate")
        sp.set_defaults(func=func)
        if name in ("encode", "corrupt"):
            sp.add_argument("--trial", type=int, default=0, help="trial index for the seed stream")
        if name == "encode":
            sp.add_argument("--random", action="store_true", help="draw the message from the seed")
        if name in ("corrupt", "simulate"):
            sp.add_argument("--t", type=int, help="error rank (ignored for model B)")
        if name == "decode":
            sp.add_argument("--verbose", action="store_true", help="include the decoder trace")
        if name == "simulate":
            sp.add_argument("--trials", type=int, default=100)
            sp.add_argument("--format", choices=("json", "csv"), default="json")
            sp.add_argument("--timing", action="store_true",
                            help="report mean decode time (output is then not reproducible)")

    sp = sub.add_parser("selftest", help="quick end-to-end checks")
    sp.add_argument("--seed", type=int, default=0)
    io_flags(sp, inp=False)
    sp.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParamError, RankCodeError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
