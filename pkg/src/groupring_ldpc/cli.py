"""grqc: build, check, encode, decode and simulate group-ring QC-LDPC codes.

Exit status: 0 success, 2 validation failure (bad spec/input, failed check),
1 any other error."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

log = logging.getLogger("grqc")


class ValidationFailure(Exception):
    pass


def _snr_range(text):
    """a:step:b inclusive, or a comma list."""
    import numpy as np
    if ":" in text:
        a, step, b = (float(v) for v in text.split(":"))
        if step <= 0:
            raise argparse.ArgumentTypeError("step must be positive")
        return [round(float(v), 10) for v in np.arange(a, b + step / 2, step)]
    return [float(v) for v in text.split(",")]


def _load_spec(args):
    from .codespec import CodeSpec
    from .fixtures import get
    if getattr(args, "fixture", None):
        return get(args.fixture).code_spec()
    if getattr(args, "code", None):
        return CodeSpec.load(args.code)
    raise ValidationFailure("give --code SPEC.json or --fixture NAME")


def _out(args, name):
    os.makedirs(args.out_dir, exist_ok=True)
    return os.path.join(args.out_dir, name)


def _check_report(H, W=None, cap=8):
    from . import gf2
    from .construction import check_constraints, block_size_check
    r = gf2.rank(H)
    cdeg, rdeg = H.sum(0), H.sum(1)
    # quasi-cyclic structure lets the BFS start from one column per block
    g = gf2.girth(H, cap=cap, block_size=None if W is None else W.b)
    rep = {"rows": int(H.shape[0]), "length": int(H.shape[1]), "rank": int(r),
           "dimension": int(H.shape[1] - r), "girth": g if g is not None else f">{cap}",
           "girth_at_least_6": g is None or g >= 6,
           "column_degrees": sorted({int(v) for v in cdeg}),
           "row_degrees": sorted({int(v) for v in rdeg}),
           "regular": bool(len(set(cdeg)) == 1 and len(set(rdeg)) == 1)}
    if W is not None:
        rep["constraints"] = str(check_constraints(W))
        rep["b_at_least_n"] = bool(block_size_check(W))
    return rep


def cmd_construct(args):
    from .construction import check_constraints
    from .fileio import write_alist
    spec = _load_spec(args)
    W = spec.exponent_matrix()
    H = spec.H
    write_alist(H, _out(args, "H.alist"))
    spec.save(_out(args, "spec.json"))
    d = spec.derived()
    cons = check_constraints(W)
    lines = [f"construction: {spec.construction}", f"group: {json.dumps(spec.group)}",
             f"exponent matrix: {W.shape[0]} x {W.shape[1]} over moduli {list(W.moduli)}",
             f"b = {d['b']}, length = {d['length']}, rank = {d['rank']}, dimension = {d['dimension']}",
             f"rate = {d['dimension'] / d['length']:.4f}", f"constraints: {cons}"]
    with open(_out(args, "report.txt"), "w") as f:
        f.write("\n".join(lines) + "\n")
    print("\n".join(lines))
    if not cons.ok:
        raise ValidationFailure(f"constraint check failed: {cons}")


def cmd_check(args):
    from .fileio import read_alist
    if args.alist:
        rep = _check_report(read_alist(args.alist))
    else:
        spec = _load_spec(args)
        rep = _check_report(spec.H, spec.exponent_matrix())
    print(json.dumps(rep, indent=2))
    if not rep["girth_at_least_6"] or rep.get("constraints", "pass") != "pass":
        raise ValidationFailure("code has 4-cycles")


def cmd_search_s2(args):
    from .combinatorics import search_max_s2, s2_upper_bound
    moduli = tuple(int(v) for v in args.group.split(","))
    t = time.time()
    S = search_max_s2(moduli, modified=args.modified, budget=args.budget)
    out = S.to_dict()
    out["modified"] = bool(S.is_modified)
    out["upper_bound"] = int(s2_upper_bound(S.group))
    out["nodes"] = int(S.nodes)
    out["seconds"] = round(time.time() - t, 3)
    text = json.dumps(out)
    print(text)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")


def _encoder(spec, seed):
    from . import encoder as E
    return E.module_context(spec.H, spec.exponent_matrix().moduli, seed=seed)


def cmd_encode(args):
    from . import encoder as E
    from .fileio import read_words, write_words
    spec = _load_spec(args)
    ctx = _encoder(spec, args.seed)
    msgs = read_words(args.inp, ctx.k)
    if args.path == "matrix":
        cw = E.encode_matrix(msgs, E.derive_generator(ctx))
    elif args.path == "groupring":
        cw = E.encode_groupring(msgs, ctx)
    else:
        cw = E.encode_fast(msgs, ctx)
    write_words(args.out, cw)
    print(f"encoded {len(msgs)} message(s) of {ctx.k} bits into {ctx.length}-bit codewords")


def _read_llr(path, n):
    import numpy as np
    if path.endswith(".npy"):
        a = np.load(path)
    else:
        a = np.loadtxt(path, ndmin=2)
    a = np.asarray(a, dtype=np.float64).reshape(-1, n) if a.size % n == 0 else None
    if a is None:
        raise ValidationFailure(f"LLR count is not a multiple of n = {n}")
    return a


def cmd_decode(args):
    from .channel import SPADecoder
    from .fileio import write_words
    spec = _load_spec(args)
    H = spec.H
    llr = _read_llr(args.inp, H.shape[1])
    bits, conv, iters = SPADecoder(H).decode(llr, args.iters)
    write_words(args.out, bits)
    print(f"decoded {len(bits)} frame(s): {int(conv.sum())} converged, "
          f"mean iterations {float(iters.mean()) if len(iters) else 0:.2f}")


def cmd_simulate(args):
    from . import channel as ch
    from . import encoder as E
    spec = None if args.uncoded else _load_spec(args)
    code = None
    if spec is not None:
        ctx = _encoder(spec, args.seed)
        code = ch.SimCode(spec.H, E.derive_generator(ctx))

    def progress(p):
        log.info("%.2f dB: %d frames, %d frame errors", p.ebn0_db, p.frames, p.frame_errors)

    res = ch.simulate(code, args.snr, min_frame_errors=args.min_errors,
                      max_frames=int(float(args.max_frames)), iters=args.iters, seed=args.seed,
                      progress=progress)
    text = res.to_csv()
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    print(text, end="")


def cmd_fixtures(args):
    from .fixtures import FIXTURES
    bad = 0
    for f in FIXTURES.values():
        line = f"{f.name:14s} length {f.length:5d} dimension {f.dimension!s:>5}  {f.source}"
        if args.verify:
            d = f.code_spec().derived()
            ok = d["length"] == f.length and (f.dimension is None or d["dimension"] == f.dimension)
            bad += not ok
            line += f"  [{'ok' if ok else 'MISMATCH'} {d['length']},{d['dimension']}]"
        print(line)
    if bad:
        raise ValidationFailure(f"{bad} fixture(s) mismatch")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed (default 0)")
    common.add_argument("--out-dir", default=argparse.SUPPRESS, help="output directory (default .)")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="BLAS threads (default: library default)")

    p = argparse.ArgumentParser(prog="grqc", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def spec_args(q):
        g = q.add_mutually_exclusive_group()
        g.add_argument("--code", help="JSON code spec")
        g.add_argument("--fixture", help="named preset, see `grqc fixtures`")

    q = sub.add_parser("construct", parents=[common], help="build H; write H.alist, spec.json, report.txt")
    spec_args(q)
    q.set_defaults(func=cmd_construct)

    q = sub.add_parser("check", parents=[common], help="girth, rank, dimension, regularity")
    spec_args(q)
    q.add_argument("--alist", help="check an alist file instead of a spec")
    q.set_defaults(func=cmd_check)

    q = sub.add_parser("search-s2", parents=[common], help="largest (modified) S2-set in Z_m1 x ... x Z_mt")
    q.add_argument("--group", required=True, help="comma separated moduli, e.g. 4,4,4,4")
    q.add_argument("--modified", action="store_true")
    q.add_argument("--budget", type=int, default=10 ** 7, help="search node budget")
    q.add_argument("--out", help="also write the JSON here")
    q.set_defaults(func=cmd_search_s2)

    q = sub.add_parser("encode", parents=[common], help="packed message bits -> packed codewords")
    spec_args(q)
    q.add_argument("--in", dest="inp", required=True, help="bits, LSB first; short tail zero padded")
    q.add_argument("--out", required=True)
    q.add_argument("--path", choices=("matrix", "groupring", "fast"), default="fast")
    q.set_defaults(func=cmd_encode)

    q = sub.add_parser("decode", parents=[common], help="channel LLRs -> packed hard decisions")
    spec_args(q)
    q.add_argument("--in", dest="inp", required=True, help=".npy or whitespace separated text")
    q.add_argument("--out", required=True)
    q.add_argument("--iters", type=int, default=30)
    q.set_defaults(func=cmd_decode)

    q = sub.add_parser("simulate", parents=[common], help="BER/WER over BPSK/AWGN, CSV output")
    spec_args(q)
    q.add_argument("--uncoded", action="store_true", help="uncoded BPSK reference")
    q.add_argument("--snr", type=_snr_range, default=[1.0, 2.0, 3.0], help="a:step:b or a,b,c (Eb/N0 dB)")
    q.add_argument("--min-errors", type=int, default=100)
    q.add_argument("--max-frames", default="1e6")
    q.add_argument("--iters", type=int, default=30)
    q.add_argument("--out", help="CSV path")
    q.set_defaults(func=cmd_simulate)

    q = sub.add_parser("fixtures", parents=[common], help="list presets")
    q.add_argument("--verify", action="store_true", help="rebuild each and compare")
    q.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    args.seed = getattr(args, "seed", 0)
    args.out_dir = getattr(args, "out_dir", ".")
    threads = getattr(args, "threads", None)
    if threads:
        for k in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ[k] = str(threads)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    from .codespec import SpecError
    from .construction import ConstructionError
    try:
        args.func(args)
    except (ValidationFailure, SpecError, ConstructionError, KeyError, FileNotFoundError) as e:
        print(f"grqc: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001
        log.debug("failure", exc_info=True)
        print(f"grqc: error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
