"""Command line driver: ``gl3slopes --q 2 --k 0..8 --op u1,t1 --format md``."""

import argparse
import json
import logging
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import building as bld
from . import cocycle, cosets, hecke
from . import representation as rep
from .algebra import field, prime_power
from .linalg import mat_mul
from .slopes import UnknownFormat, compute_table, format_table

log = logging.getLogger("gl3slopes")

Q_CEILING = 9
OPS = {"u1": 1, "u2": 2, "t1": 1, "t2": 2}
U_LEVELS = ("gamma1", "gamma0", "p0", "p2")
FORMATS = ("md", "csv", "json")
CONFIG_KEYS = {"q", "k", "op", "level", "format", "out", "verify", "jobs",
               "emit-charpoly", "cache-dir"}


class ConfigError(ValueError):
    pass


def parse_k(text):
    text = str(text).strip()
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ConfigError(f"bad k range {text!r}; use N or A..B") from None
    if lo < 0 or hi < lo:
        raise ConfigError(f"bad k range {text!r}")
    return lo, hi


def read_config(path):
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{n}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("_", "-")
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{path}:{n}: unknown key {key!r}")
        out[key] = val
    return out


def build_parser():
    p = argparse.ArgumentParser(
        prog="gl3slopes",
        description="Slopes of the Hecke operators U_1, U_2, T_1, T_2 on "
                    "harmonic cocycles for GL_3 over F_q(t).")
    p.add_argument("--config", help="key=value file; command line flags take precedence")
    p.add_argument("--q", type=int)
    p.add_argument("--k", help="weight N or range A..B (inclusive)")
    p.add_argument("--op", help="comma list from u1,u2,t1,t2 (default all)")
    p.add_argument("--level", help="comma list from gamma1,gamma0,p0,p2 for U operators "
                                   "(default all); T operators always use gl3")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--verify", action="store_true", default=None,
                   help="also run the property suites; exit 1 on any failure")
    p.add_argument("--jobs", type=int)
    p.add_argument("--emit-charpoly", nargs="?", const="", metavar="PATH",
                   help="write the characteristic polynomials as JSON")
    p.add_argument("--cache-dir", help="on-disk memo of action matrices "
                                       "(COCYCLE_CACHE_DIR overrides)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _truthy(v):
    return str(v).lower() in ("1", "true", "yes", "on")


def resolve(args):
    """Merge config file and flags into a validated plain dict."""
    cfg = read_config(args.config) if args.config else {}
    get = lambda name, flag: flag if flag is not None else cfg.get(name)
    q = get("q", args.q)
    if q is None:
        raise ConfigError("--q is required")
    try:
        q = int(q)
    except ValueError:
        raise ConfigError(f"q={q!r} is not an integer") from None
    if prime_power(q) is None:
        raise ConfigError(f"q={q} is not a prime power")
    if q > Q_CEILING:
        raise ConfigError(f"q={q} exceeds the supported ceiling {Q_CEILING}")
    k = get("k", args.k)
    if k is None:
        raise ConfigError("--k is required")
    klo, khi = parse_k(k)
    ops = [o.strip() for o in (get("op", args.op) or "u1,u2,t1,t2").split(",") if o.strip()]
    for o in ops:
        if o not in OPS:
            raise ConfigError(f"unknown operator {o!r}; expected u1, u2, t1 or t2")
    lv = get("level", args.level)
    levels = [x.strip() for x in lv.split(",") if x.strip()] if lv else None
    if levels is not None:
        for x in levels:
            if x not in rep.LEVELS:
                raise ConfigError(f"unknown level {x!r}; expected one of {', '.join(rep.LEVELS)}")
    units = []
    for o in ops:
        if o.startswith("t"):
            if levels is not None and "gl3" not in levels:
                raise ConfigError(f"{o} acts on level gl3 only")
            use = ["gl3"]
        else:
            use = [x for x in (levels or U_LEVELS) if x != "gl3"]
            if not use:
                raise ConfigError(f"{o} needs a level among {', '.join(U_LEVELS)}; use t1/t2 for gl3")
        for kk in range(klo, khi + 1):
            for x in use:
                units.append((kk, OPS[o], x))
    units = sorted(set(units), key=lambda u: (u[0], u[1], rep.LEVELS.index(u[2])))
    fmt = get("format", args.format) or "md"
    if fmt not in FORMATS:
        raise ConfigError(f"unknown format {fmt!r}")
    jobs = get("jobs", args.jobs)
    try:
        jobs = int(jobs) if jobs is not None else 1
    except ValueError:
        raise ConfigError(f"bad jobs value {jobs!r}") from None
    if jobs < 1:
        raise ConfigError("jobs must be positive")
    verify = args.verify if args.verify is not None else _truthy(cfg.get("verify", "false"))
    cache = os.environ.get("COCYCLE_CACHE_DIR") or get("cache-dir", args.cache_dir)
    emit = get("emit-charpoly", args.emit_charpoly)
    return {"q": q, "k": (klo, khi), "units": units, "format": fmt,
            "out": get("out", args.out), "verify": verify, "jobs": jobs,
            "cache_dir": cache or None, "emit_charpoly": emit}


# ---------------------------------------------------------------- work

def _init_worker(cache_dir):
    rep.set_cache(rep.ActionCache(cache_dir))


def _work(q, unit):
    k, i, level = unit
    table, cp = compute_table(i, level, k, q, return_charpoly=True)
    return table, [list(c) for c in cp]


def compute_all(q, units, jobs=1, cache_dir=None):
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                 initargs=(cache_dir,)) as ex:
            return list(ex.map(_work, [q] * len(units), units))
    if cache_dir and rep.get_cache().directory != cache_dir:
        _init_worker(cache_dir)
    return [_work(q, u) for u in units]


# ---------------------------------------------------------------- verification

def verification_suite(q, kmax, seed=0):
    """[(name, passed)] for the property checks at this q."""
    rng = random.Random(seed)
    F = field(q)
    kk = min(kmax, 4)
    out = []

    act = cocycle.Action(q, min(kk, 2))
    N = rep.dimension(act.k)
    ok = True
    for e in bld.edges_within(2):
        w = [rng.randrange(q) for _ in range(N)]
        ok &= cocycle.is_zero_vector(cocycle.harmonic_defect(e, w, act))
    out.append(("harmonic defects", ok))

    ok = True
    for e in bld.edges_within(3):
        r, s, reps = bld.stabilizer_coset_reps(F, e)
        ok &= len(bld.chamber_stabilizer(F, s)) == q * len(bld.chamber_stabilizer(F, r))
        ok &= len(reps) == q
    out.append(("index q", ok))

    if q <= 4:
        ok = all(cosets.verify_reps(i, lv, q) for i in (1, 2) for lv in cosets.LEVEL_TAGS)
        out.append(("coset representatives", ok))
        if q <= 3:
            out.append(("Bruhat decomposition", cosets.bruhat_check(q)))

    out.append(("transcription", hecke.check_transcription(q)))
    ok = all(hecke.check_fp_entries(hecke.operator_matrix(n, i, k, q), F.p)
             for n in hecke.OPERATORS for i in (1, 2) for k in range(kk + 1))
    out.append(("F_p entries", ok))

    ok = True
    for k in range(kk + 1):
        for _ in range(5):
            g = _random_gl3(F, rng)
            h = _random_gl3(F, rng)
            A = rep.action_matrix(F, g, k)
            ok &= A == rep.action_matrix_naive(F, g, k)
            gh = cosets.mmul(F, g, h)
            ok &= mat_mul(F, A, rep.action_matrix(F, h, k)) == rep.action_matrix(F, gh, k)
    out.append(("action oracle", ok))
    return out


def _random_gl3(F, rng):
    while True:
        g = tuple(tuple(rng.randrange(F.q) for _ in range(3)) for _ in range(3))
        if cosets.mdet(F, g):
            return g


# ---------------------------------------------------------------- entry point

def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = resolve(args)
    except ConfigError as exc:
        print(f"gl3slopes: error: {exc}", file=sys.stderr)
        return 2

    q = cfg["q"]
    log.info("computing %d tables for q=%d", len(cfg["units"]), q)
    results = compute_all(q, cfg["units"], cfg["jobs"], cfg["cache_dir"])
    tables = [t for t, _ in results]
    try:
        text = format_table(tables, cfg["format"])
    except UnknownFormat as exc:
        print(f"gl3slopes: error: {exc}", file=sys.stderr)
        return 2
    if cfg["out"]:
        with open(cfg["out"], "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if cfg["emit_charpoly"] is not None:
        path = cfg["emit_charpoly"] or ((cfg["out"] or "gl3slopes") + ".charpoly.json")
        data = [{"q": t.q, "k": t.k, "i": t.i, "level": t.level, "coefficients": cp}
                for t, cp in results]
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
            fh.write("\n")

    c = rep.get_cache()
    log.info("action cache: %d hits, %d disk hits, %d misses", c.hits, c.disk_hits, c.misses)

    if cfg["verify"]:
        failed = [name for name, ok in verification_suite(q, cfg["k"][1]) if not ok]
        for name in failed:
            print(f"gl3slopes: verification failed: {name}", file=sys.stderr)
        if failed:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
