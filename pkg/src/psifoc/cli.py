"""Command line front end.

Grammar::

    psifoc binom --family F N K
    psifoc fact --family F N
    psifoc falling --family F X K
    psifoc expand --family F --power N
    psifoc verify cauchy --family F --r R --s S --j J [--maxdeg M]
    psifoc verify fermat --family F --size N [--maxdeg M]
    psifoc verify obs1 --family F --n N
    psifoc matrix {pascal|fermat} --family F --size N [--x X] [--eigen M]
                  --format {csv|json} [--out PATH]
    psifoc oracle subspaces --q Q --n N --k K

Families: ``classical`` | ``gauss`` | ``gauss@<rational>`` | ``fib`` |
``custom:<path>`` (one rational per line, line n holding the n-th family
integer).  ``--pretty`` anywhere pretty-prints JSON output.

Exit codes: 0 on success or a passing verification, 1 when a verification
reports mismatches (the JSON report goes to standard output), 2 on any
error.  The environment variable PSIFOC_TRUNC sets the default sweep
truncation degree (default 32).
"""

from __future__ import annotations

import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import matrices, psi, qplane, scalars
from .errors import InvalidFamilyFile, ParseError, PsifocError
from .matrices import EigenMode, ScalarMode
from .scalars import Q, Rational

USAGE = """\
usage: psifoc <command> ...
commands:
  binom --family F N K           family binomial coefficient
  fact --family F N              family factorial
  falling --family F X K         family falling factorial
  expand --family F --power N    convolution power of x + y (JSON terms)
  verify cauchy --family F --r R --s S --j J [--maxdeg M]
  verify fermat --family F --size N [--maxdeg M]
  verify obs1 --family F --n N
  matrix {pascal|fermat} --family F --size N [--x X] [--eigen M] --format {csv|json} [--out PATH]
  oracle subspaces --q Q --n N --k K
families: classical | gauss | gauss@<rational> | fib | custom:<path>
global flags: --pretty\
"""

_FAMILY_RE = re.compile(r"^(classical|gauss(@.+)?|fib|custom:.+)$")


@dataclass(frozen=True)
class FamilySpec:
    """Validated textual family name; resolves to a PsiFamily on demand
    (custom tables are read from disk at resolution time)."""

    text: str

    def to_family(self) -> psi.PsiFamily:
        if self.text == "classical":
            return psi.classical()
        if self.text == "fib":
            return psi.fibonacci()
        if self.text == "gauss":
            return psi.gauss()
        if self.text.startswith("gauss@"):
            return psi.gauss(scalars.parse_rational(self.text[6:]))
        path = self.text[len("custom:"):]
        try:
            with open(path, "r", encoding="utf-8") as handle:
                lines = [line.strip() for line in handle]
        except OSError as exc:
            raise InvalidFamilyFile(f"cannot read family file {path}: {exc}")
        values = []
        for lineno, line in enumerate(lines, start=1):
            if not line:
                continue
            try:
                values.append(Fraction(scalars.parse_rational(line)))
            except ValueError:
                raise InvalidFamilyFile(
                    f"{path}:{lineno}: not a rational: {line!r}")
        if not values:
            raise InvalidFamilyFile(f"{path}: empty family table")
        return psi.custom(values)


def parse_family(text: str, position: int) -> FamilySpec:
    if not _FAMILY_RE.match(text):
        raise ParseError(f"bad family {text!r}", position,
                         ("classical", "gauss", "gauss@<rational>", "fib",
                          "custom:<path>"))
    if text.startswith("gauss@"):
        try:
            scalars.parse_rational(text[6:])
        except ValueError:
            raise ParseError(f"bad rational in family {text!r}", position,
                             ("gauss@<rational>",))
    return FamilySpec(text)


@dataclass(frozen=True)
class Command:
    """A parsed command; every instance round-trips through
    :meth:`canonical` and :func:`parse_command`."""

    verb: str
    subverb: str | None = None
    family: FamilySpec | None = None
    n: int | None = None
    k: int | None = None
    xval: int | None = None
    r: int | None = None
    s: int | None = None
    j: int | None = None
    size: int | None = None
    maxdeg: int | None = None
    power: int | None = None
    eigen: int | None = None
    qfield: int | None = None
    x0: Rational | None = None
    fmt: str | None = None
    out: str | None = None
    pretty: bool = False

    def canonical(self) -> list[str]:
        argv = [self.verb]
        if self.subverb is not None:
            argv.append(self.subverb)
        if self.family is not None:
            argv += ["--family", self.family.text]
        if self.verb == "binom":
            argv += [str(self.n), str(self.k)]
        elif self.verb == "fact":
            argv += [str(self.n)]
        elif self.verb == "falling":
            argv += [str(self.xval), str(self.k)]
        elif self.verb == "expand":
            argv += ["--power", str(self.power)]
        elif self.verb == "verify":
            if self.subverb == "cauchy":
                argv += ["--r", str(self.r), "--s", str(self.s),
                         "--j", str(self.j)]
            elif self.subverb == "fermat":
                argv += ["--size", str(self.size)]
            else:
                argv += ["--n", str(self.n)]
            if self.subverb in ("cauchy", "fermat") and self.maxdeg is not None:
                argv += ["--maxdeg", str(self.maxdeg)]
        elif self.verb == "matrix":
            argv += ["--size", str(self.size)]
            if self.x0 is not None:
                argv += ["--x", scalars.render(self.x0)]
            if self.eigen is not None:
                argv += ["--eigen", str(self.eigen)]
            argv += ["--format", str(self.fmt)]
            if self.out is not None:
                argv += ["--out", self.out]
        elif self.verb == "oracle":
            argv += ["--q", str(self.qfield), "--n", str(self.n),
                     "--k", str(self.k)]
        if self.pretty:
            argv.append("--pretty")
        return argv


_INT_RE = re.compile(r"^-?\d+$")

# per (verb, subverb): flag name -> (value kind, Command field, required)
_GRAMMAR: dict[tuple[str, str | None], dict] = {
    ("binom", None): {
        "flags": {"--family": ("family", "family", True)},
        "positionals": [("int", "n", "N"), ("int", "k", "K")],
    },
    ("fact", None): {
        "flags": {"--family": ("family", "family", True)},
        "positionals": [("int", "n", "N")],
    },
    ("falling", None): {
        "flags": {"--family": ("family", "family", True)},
        "positionals": [("int", "xval", "X"), ("int", "k", "K")],
    },
    ("expand", None): {
        "flags": {"--family": ("family", "family", True),
                  "--power": ("int", "power", True)},
        "positionals": [],
    },
    ("verify", "cauchy"): {
        "flags": {"--family": ("family", "family", True),
                  "--r": ("int", "r", True),
                  "--s": ("int", "s", True),
                  "--j": ("int", "j", True),
                  "--maxdeg": ("int", "maxdeg", False)},
        "positionals": [],
    },
    ("verify", "fermat"): {
        "flags": {"--family": ("family", "family", True),
                  "--size": ("int", "size", True),
                  "--maxdeg": ("int", "maxdeg", False)},
        "positionals": [],
    },
    ("verify", "obs1"): {
        "flags": {"--family": ("family", "family", True),
                  "--n": ("int", "n", True)},
        "positionals": [],
    },
    ("matrix", "pascal"): {
        "flags": {"--family": ("family", "family", True),
                  "--size": ("int", "size", True),
                  "--x": ("rational", "x0", False),
                  "--eigen": ("int", "eigen", False),
                  "--format": ("format", "fmt", True),
                  "--out": ("path", "out", False)},
        "positionals": [],
    },
    ("matrix", "fermat"): {
        "flags": {"--family": ("family", "family", True),
                  "--size": ("int", "size", True),
                  "--x": ("rational", "x0", False),
                  "--eigen": ("int", "eigen", False),
                  "--format": ("format", "fmt", True),
                  "--out": ("path", "out", False)},
        "positionals": [],
    },
    ("oracle", "subspaces"): {
        "flags": {"--q": ("int", "qfield", True),
                  "--n": ("int", "n", True),
                  "--k": ("int", "k", True)},
        "positionals": [],
    },
}

_SUBVERBS = {"verify": ("cauchy", "fermat", "obs1"),
             "matrix": ("pascal", "fermat"),
             "oracle": ("subspaces",)}


def _parse_value(kind: str, token: str, position: int, label: str):
    if kind == "int":
        if not _INT_RE.match(token):
            raise ParseError(f"bad integer {token!r} for {label}", position,
                             ("<integer>",))
        return int(token)
    if kind == "rational":
        try:
            return scalars.parse_rational(token)
        except ValueError:
            raise ParseError(f"bad rational {token!r} for {label}", position,
                             ("<rational>",))
    if kind == "family":
        return parse_family(token, position)
    if kind == "format":
        if token not in ("csv", "json"):
            raise ParseError(f"bad format {token!r}", position,
                             ("csv", "json"))
        return token
    return token  # path


def parse_command(argv: list[str]) -> Command:
    """Parse an argv list into a Command, or raise ParseError.

    Total on arbitrary token lists: anything outside the grammar becomes a
    ParseError carrying the offending position and the expected tokens.
    """
    tokens = list(argv)
    if not tokens:
        raise ParseError("missing command", 0, tuple(sorted(
            {verb for verb, _ in _GRAMMAR})))
    verb = tokens[0]
    known_verbs = tuple(sorted({v for v, _ in _GRAMMAR}))
    if verb not in known_verbs:
        raise ParseError(f"unknown command {verb!r}", 0, known_verbs)
    pos = 1
    subverb = None
    if verb in _SUBVERBS:
        if pos >= len(tokens):
            raise ParseError(f"{verb} needs a subcommand", pos,
                             _SUBVERBS[verb])
        subverb = tokens[pos]
        if subverb not in _SUBVERBS[verb]:
            raise ParseError(f"unknown {verb} subcommand {subverb!r}", pos,
                             _SUBVERBS[verb])
        pos += 1
    rule = _GRAMMAR[(verb, subverb)]
    flags = rule["flags"]
    positionals = rule["positionals"]
    values: dict[str, object] = {}
    filled = 0
    while pos < len(tokens):
        token = tokens[pos]
        if token == "--pretty":
            values["pretty"] = True
            pos += 1
            continue
        if token in flags:
            kind, dest, _required = flags[token]
            if pos + 1 >= len(tokens):
                raise ParseError(f"flag {token} needs a value", pos,
                                 (f"<{kind}>",))
            values[dest] = _parse_value(kind, tokens[pos + 1], pos + 1,
                                        token)
            pos += 2
            continue
        if token.startswith("--"):
            raise ParseError(f"unknown flag {token!r}", pos,
                             tuple(sorted(flags)) + ("--pretty",))
        if filled < len(positionals):
            kind, dest, label = positionals[filled]
            values[dest] = _parse_value(kind, token, pos, label)
            filled += 1
            pos += 1
            continue
        raise ParseError(f"unexpected argument {token!r}", pos)
    missing = [name for name, (_k, dest, required) in flags.items()
               if required and dest not in values]
    if missing:
        raise ParseError(f"missing required {', '.join(sorted(missing))}",
                         len(tokens), tuple(sorted(missing)))
    if filled < len(positionals):
        labels = [label for _k, _d, label in positionals[filled:]]
        raise ParseError(f"missing argument {labels[0]}", len(tokens),
                         tuple(labels))
    return Command(verb=verb, subverb=subverb, **values)


def _default_trunc() -> int:
    raw = os.environ.get("PSIFOC_TRUNC", "32")
    try:
        value = int(raw)
    except ValueError:
        raise PsifocError(f"PSIFOC_TRUNC must be an integer, got {raw!r}")
    if value < 0:
        raise PsifocError("PSIFOC_TRUNC must be nonnegative")
    return value


def _scalar_mode_for(fam: psi.PsiFamily) -> ScalarMode:
    if fam.kind == "classical":
        return ScalarMode(1)
    if fam.kind == "gauss":
        return ScalarMode(Q if fam.q0 is None else fam.q0)
    raise PsifocError(
        f"family {fam.label} has no single deformation parameter; "
        f"pass --eigen M to pick a monomial degree")


def _run_matrix(cmd: Command) -> tuple[int, str]:
    fam = cmd.family.to_family()
    if cmd.eigen is not None:
        mode: matrices.EvalMode = EigenMode(fam, cmd.eigen)
    else:
        mode = _scalar_mode_for(fam)
    if cmd.subverb == "pascal":
        x0 = 1 if cmd.x0 is None else cmd.x0
        matrix = matrices.pascal_matrix(x0, cmd.size, mode)
    else:
        matrix = matrices.fermat_matrix(cmd.size, mode)
    text = matrices.export_matrix(matrix, cmd.fmt)
    if cmd.fmt == "json" and cmd.pretty:
        text = json.dumps(json.loads(text), indent=2)
    if cmd.out is not None:
        with open(cmd.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        return 0, cmd.out
    return 0, text.rstrip("\n")


def _run_verify(cmd: Command) -> tuple[int, str]:
    fam = cmd.family.to_family()
    if cmd.subverb == "cauchy":
        maxdeg = cmd.maxdeg if cmd.maxdeg is not None else _default_trunc()
        report = qplane.verify_cauchy_operator(fam, cmd.r, cmd.s, cmd.j,
                                               maxdeg)
    elif cmd.subverb == "fermat":
        maxdeg = cmd.maxdeg if cmd.maxdeg is not None else _default_trunc()
        report = qplane.Report({"check": "fermat-factorization",
                                "family": fam.label, "size": cmd.size,
                                "maxdeg": maxdeg})
        verdicts: dict = {}
        for m in range(maxdeg + 1):
            t = matrices.resolve_mode(EigenMode(fam, m))
            key = t
            if key not in verdicts:
                verdicts[key] = matrices.fermat_factorization_mismatches(
                    cmd.size, ScalarMode(t))
            for (i, j, lhs, rhs) in verdicts[key]:
                report.mismatches.append({
                    "degree": m, "entry": [i, j],
                    "lhs": scalars.render(lhs), "rhs": scalars.render(rhs)})
    else:
        report = qplane.explore_observation1_general(fam, cmd.n)
    if report.passed:
        return 0, "PASS"
    return 1, report.to_json(cmd.pretty)


def run_command(cmd: Command) -> tuple[int, str]:
    """Execute a parsed command; returns (exit code, output text)."""
    try:
        if cmd.verb == "binom":
            fam = cmd.family.to_family()
            return 0, scalars.render(psi.psi_binomial(fam, cmd.n, cmd.k))
        if cmd.verb == "fact":
            fam = cmd.family.to_family()
            return 0, scalars.render(psi.psi_factorial(fam, cmd.n))
        if cmd.verb == "falling":
            fam = cmd.family.to_family()
            return 0, scalars.render(psi.psi_falling(fam, cmd.xval, cmd.k))
        if cmd.verb == "expand":
            fam = cmd.family.to_family()
            terms = psi.psi_plus_power(fam, cmd.power).to_json_terms()
            return 0, json.dumps(terms, indent=2 if cmd.pretty else None)
        if cmd.verb == "verify":
            return _run_verify(cmd)
        if cmd.verb == "matrix":
            return _run_matrix(cmd)
        if cmd.verb == "oracle":
            count = matrices.count_subspaces(cmd.qfield, cmd.n, cmd.k)
            return 0, str(count)
        raise PsifocError(f"unhandled verb {cmd.verb!r}")
    except (PsifocError, ValueError, OSError) as exc:
        return 2, f"error: {exc}"


def main(argv: list[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        cmd = parse_command(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(USAGE, file=sys.stderr)
        return 2
    code, text = run_command(cmd)
    if text:
        print(text, file=sys.stderr if code == 2 else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
