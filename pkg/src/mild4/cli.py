"""Command-line interface: ``mild4 {classify,dims,search,enumerate,poincare}``.

Exit codes: 0 success, 1 input error, 2 internal invariant violation.
"""

import argparse
import json
import sys

from . import classifier as clf
from . import lie
from .census import enumerate_orbits
from .errors import InternalInvariantViolation, Mild4Error, ValidationError
from .lie import QuadraticPresentation


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def read_matrix_file(path):
    """Parse ``p <modulus>`` followed by four rows of six integers."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix_text(text)


def parse_matrix_text(text):
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValidationError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "p":
        raise ValidationError("first line must be 'p <modulus>'")
    try:
        p = int(head[1])
        rows = [[int(x) for x in line.split()] for line in lines[1:]]
    except ValueError as exc:
        raise ValidationError(f"non-integer entry: {exc}") from None
    if len(rows) != 4 or any(len(r) != 6 for r in rows):
        raise ValidationError("expected exactly 4 rows of 6 integers")
    return QuadraticPresentation.from_rows(rows, p)


def _parse_primes(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"bad prime list {text!r}") from None


def _emit(obj, as_json, text):
    if as_json:
        print(json.dumps(obj))
    else:
        print(text)


def _report_text(d):
    lines = [f"p = {d['p']}"]
    if d["orbit"] is None:
        lines.append("orbit: none (relators are linearly dependent)")
    else:
        lines.append(f"orbit: {d['orbit']}")
    lines.append(f"mild: {'yes' if d['mild'] else 'no'}")
    if d["dims"]:
        lines.append("dims: " + " ".join(map(str, d["dims"])))
    if d["witness"]:
        lines.append(f"witness: {d['witness']}")
    if d["complement"]:
        lines.append("complement: " + "; ".join(" ".join(map(str, r)) for r in d["complement"]))
    if d["linking"]:
        lines.append("linking: " + "; ".join(" ".join(map(str, r)) for r in d["linking"]["l"]))
    lines.append("methods: " + ", ".join(f"{k}={v}" for k, v in d["methods"].items()))
    lines += [f"note: {n}" for n in d["notes"]]
    return "\n".join(lines)


def cmd_classify(args):
    if (args.matrix is None) == (args.primes is None):
        raise ValidationError("give exactly one of --matrix or --p/--primes")
    if args.primes is not None:
        if args.p is None:
            raise ValidationError("--primes needs --p")
        report = clf.classify_prime_set(args.p, _parse_primes(args.primes), verify=args.verify)
    else:
        q = read_matrix_file(args.matrix)
        if args.p is not None and args.p != q.p:
            raise ValidationError(f"--p {args.p} disagrees with file modulus {q.p}")
        report = clf.classify(q, verify=args.verify)
    d = report.as_dict()
    _emit(d, args.json, _report_text(d))
    return 0


def cmd_dims(args):
    q = read_matrix_file(args.matrix)
    dims = lie.quotient_dims(q, args.max_degree)
    ok = lie.series_check(dims)
    _emit({"p": q.p, "dims": list(dims.a), "strongly_free": ok}, args.json,
          " ".join(map(str, dims.a)) + f"\nstrongly-free: {'yes' if ok else 'no'}")
    return 0


def cmd_poincare(args):
    q = read_matrix_file(args.matrix)
    dims = lie.quotient_dims(q, args.max_degree)
    res = lie.question_d_residual(dims)
    _emit({"p": q.p, "dims": list(dims.a), "residual": res}, args.json,
          "residual: " + " ".join(map(str, res)))
    return 0


def cmd_search(args):
    n = 0
    for s, label in clf.search_prime_sets(args.p, args.max_prime, args.orbit, verify=args.verify):
        if args.limit is not None and n >= args.limit:
            break
        orbit = None if label is None else int(label)
        if args.json:
            print(json.dumps({"p": s.p, "primes": list(s.q), "orbit": orbit}))
        else:
            print(",".join(map(str, s.q)), "orbit", "-" if orbit is None else orbit)
        sys.stdout.flush()
        n += 1
    return 0


def cmd_enumerate(args):
    census = enumerate_orbits(args.p, args.dim)
    if args.json:
        print(json.dumps({
            "p": census.p, "dim": census.dim, "total": census.total, "count": census.count,
            "orbits": [{"label": o.label.value, "size": o.size,
                        "canonical": [list(r) for r in o.canonical.basis]} for o in census.orbits],
        }))
        return 0
    print(f"p = {census.p}, dim = {census.dim}: {census.count} orbits, {census.total} subspaces")
    for o in census.orbits:
        print(f"  {o.label.value}: size {o.size}, representative {o.canonical}")
    return 0


def build_parser():
    ap = _Parser(prog="mild4", description="Classify 4-generator quadratic presentations.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="orbit and mildness of a presentation")
    c.add_argument("--p", type=int)
    c.add_argument("--primes", help="four primes, comma separated")
    c.add_argument("--matrix", help="relator matrix file")
    c.add_argument("--verify", action="store_true", help="run and cross-check all three routes")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    for name, func, helptext in (("dims", cmd_dims, "graded dimensions a_1..a_c"),
                                 ("poincare", cmd_poincare, "truncated series residual")):
        d = sub.add_parser(name, help=helptext)
        d.add_argument("--matrix", required=True)
        d.add_argument("--max-degree", type=int, default=4)
        d.add_argument("--json", action="store_true")
        d.set_defaults(func=func)

    s = sub.add_parser("search", help="prime sets by orbit")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--max-prime", type=int, required=True)
    s.add_argument("--orbit", type=int, choices=[1, 2, 3, 4])
    s.add_argument("--limit", type=int)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("enumerate", help="orbit census of lines or planes")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--dim", type=int, choices=[1, 2], required=True)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except Mild4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
