"""Command-line interface.

Records are read from positional arguments or, when none are given, one per
non-empty line of standard input. Exit status: 0 on success, 1 when a check
fails, 2 on bad input or an over-cap request.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import textio
from .errors import FiniteSpaceError, ParseError

THREADS_ENV = "FINITESPACES_THREADS"

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _parallel_map(fn, items):
    """Order-preserving map, fanned out over processes when the env var asks for it."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _records(args, count=None):
    """``(line_number, text)`` pairs from argv or stdin."""
    if args.records:
        recs = [(1, r) for r in args.records]
    else:
        recs = [(i, ln) for i, ln in enumerate(sys.stdin.read().splitlines(), 1) if ln.strip()]
    if count is not None and len(recs) != count:
        raise InputError(f"expected {count} records, got {len(recs)}")
    return recs


def _spaces(args, count=None):
    return [textio.parse_space_or_preorder(text, line) for line, text in _records(args, count)]


# ---------------------------------------------------------------------------
# commands


def cmd_canon(args, out):
    for X in _spaces(args):
        print(textio.format_space(X), file=out)


def cmd_dual(args, out):
    from .spaces import dual

    for X in _spaces(args):
        print(textio.format_space(dual(X)), file=out)


def cmd_product(args, out):
    from .algebra import space_join, space_sum

    X, Y = _spaces(args, 2)
    op = space_sum if args.command == "product" else space_join
    print(textio.format_space(op(X, Y)), file=out)


def cmd_coproduct(args, out):
    from .algebra import coproduct

    for X in _spaces(args):
        print(textio.format_ftensor(coproduct(X)), file=out)


def cmd_antipode(args, out):
    from .algebra import antipode

    for X in _spaces(args):
        print(textio.format_fvector(antipode(X)), file=out)


def cmd_phi(args, out):
    from .qsym import phi_q

    q = None if args.eval_q is None else textio.parse_rational(args.eval_q)
    for X in _spaces(args):
        value = phi_q(X)
        print(textio.format_qsym(value) if q is None else textio.format_qsym_at(value, q), file=out)


def cmd_zeta(args, out):
    from .algebra import zeta_q

    q = None if args.eval_q is None else textio.parse_rational(args.eval_q)
    for X in _spaces(args):
        value = zeta_q(X)
        print(value if q is None else value.evaluate(q), file=out)


def cmd_core(args, out):
    from .homotopy import core

    for X in _spaces(args):
        print(textio.format_space(core(X)), file=out)


def cmd_euler(args, out):
    from .homotopy import euler_characteristic

    for X in _spaces(args):
        print(euler_characteristic(X), file=out)


def cmd_complex(args, out):
    from .homotopy import order_complex

    for i, X in enumerate(_spaces(args)):
        if i:
            print(file=out)
        text = textio.format_complex(order_complex(X))
        if text:
            print(text, file=out)


def cmd_enumerate(args, out):
    from .enumeration import enumerate_kind

    fmt = textio.format_preorder if args.kind == "topologies" else textio.format_space
    for item in enumerate_kind(args.n, args.kind, args.unsafe_large):
        print(fmt(item), file=out)


def _suite_job(job):
    suite, max_n, seed = job
    if suite == "hopf":
        from .algebra import verify_axioms

        names = ("coassoc", "counit", "hopf-compat", "antipode", "duality", "products")
        return [str(verify_axioms(max_n, s)) for s in names]
    if suite == "infinitesimal":
        from .algebra import verify_axioms

        return [str(verify_axioms(max_n, "infinitesimal"))]
    if suite == "tensor":
        from .tensor import check_tensor_identities

        return [str(r) for r in check_tensor_identities(max_n, seed=seed)]
    if suite == "qsym":
        from .qsym import check_qsym

        return [str(r) for r in check_qsym(max_n, seed=seed)]
    from .homotopy import check_homotopy

    return [str(r) for r in check_homotopy(max_n, seed=seed)]


SUITE_CAPS = {"hopf": 6, "infinitesimal": 6, "tensor": 7, "qsym": 6, "homotopy": 7}


def cmd_check(args, out):
    if args.max_n < 1:
        raise InputError("--max-n must be at least 1")
    if args.max_n > SUITE_CAPS[args.suite] and not args.unsafe_large:
        raise InputError(f"--max-n above {SUITE_CAPS[args.suite]} for suite {args.suite} needs --unsafe-large")
    lines = _suite_job((args.suite, args.max_n, args.seed))
    for line in lines:
        print(line, file=out)
    return EXIT_OK if all(line.startswith("PASS") for line in lines) else EXIT_CHECK_FAILED


def _count_row(job):
    n, unsafe = job
    from .enumeration import TOPOLOGY_CAP, count_families, count_topologies, enumerate_spaces

    t = count_topologies(n, unsafe) if (n <= TOPOLOGY_CAP or unsafe) else None
    return n, t, len(enumerate_spaces(n, unsafe)), count_families(n, unsafe)


def _table(rows) -> list[str]:
    """Rows of cells, columns padded to a common width, ``|`` separated."""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return [" | ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def cmd_counts(args, out):
    from .enumeration import SPACE_CAP, TOPOLOGY_CAP

    if args.max_n < 1:
        raise InputError("--max-n must be at least 1")
    if args.max_n > SPACE_CAP and not args.unsafe_large:
        raise InputError(f"--max-n above {SPACE_CAP} needs --unsafe-large")
    rows = _parallel_map(_count_row, [(n, args.unsafe_large) for n in range(1, args.max_n + 1)])
    ns = [str(r[0]) for r in rows]
    t_cols = [str(r[1]) for r in rows if r[1] is not None]
    for line in _table([["n"] + ns[: len(t_cols)], ["t_n"] + t_cols]):
        print(line, file=out)
    if len(t_cols) < len(rows):
        print(f"# t_n above n={TOPOLOGY_CAP} needs --unsafe-large", file=out)
    print(file=out)
    for line in _table([["n"] + ns, ["f_n"] + [str(r[2]) for r in rows]]):
        print(line, file=out)
    print(file=out)
    table = [["n"] + ns]
    for i, name in enumerate(("p_n", "q_n", "r_n")):
        table.append([name] + [str(r[3][i]) for r in rows])
    for line in _table(table):
        print(line, file=out)


COMMANDS = {
    "canon": (cmd_canon, "canonical form of a preorder or space"),
    "dual": (cmd_dual, "dual space (order reversed)"),
    "product": (cmd_product, "disjoint-union product of two spaces"),
    "join": (cmd_product, "join of two spaces, the first below the second"),
    "coproduct": (cmd_coproduct, "open-set coproduct"),
    "antipode": (cmd_antipode, "antipode of a space"),
    "phi": (cmd_phi, "image in QSym, symbolic in q"),
    "zeta": (cmd_zeta, "q to the number of strict pairs"),
    "core": (cmd_core, "core after beat-point reduction"),
    "euler": (cmd_euler, "Euler characteristic of the order complex"),
    "complex": (cmd_complex, "facets of the order complex, one per line"),
    "enumerate": (cmd_enumerate, "stream topologies or spaces of a given size"),
    "check": (cmd_check, "run an identity suite"),
    "counts": (cmd_counts, "count tables for topologies, spaces and subfamilies"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--unsafe-large", action="store_true", help="lift the default size caps")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="finitespaces", description="Finite topological spaces toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "enumerate":
            p.add_argument("--n", type=int, required=True)
            p.add_argument(
                "--kind",
                default="spaces",
                choices=["topologies", "spaces", "connected", "join-indec", "irreducible"],
            )
        elif name == "check":
            p.add_argument("--suite", required=True, choices=sorted(SUITE_CAPS))
            p.add_argument("--max-n", type=int, default=4)
        elif name == "counts":
            p.add_argument("--max-n", type=int, default=6)
        else:
            p.add_argument("records", nargs="*", help="FS or PRE records (default: stdin lines)")
            if name in ("phi", "zeta"):
                p.add_argument("--eval-q", default=None, help="evaluate at a rational q, e.g. 1/2")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    handler = COMMANDS[args.command][0]
    try:
        code = handler(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_INPUT
    except (FiniteSpaceError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    return EXIT_OK if code is None else code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
