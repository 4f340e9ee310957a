"""Line-oriented text documents, one per graph class.

    wig 1 <class>
    <header>
    <records>

ASCII, LF endings, single spaces, canonical decimal integers.  Headers and
records per class:

    interval      "n"        then n lines "l r"
    circular-arc  "n C"      then n lines "s e"
    permutation   "n"        then one line "pi(1) ... pi(n)"
    trapezoid     "n"        then n lines "a b c d"
    cactus        "n m"      then m lines "u v w"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .cactus import CactusRep
from .circular_arc import ArcRep
from .errors import InvalidInput, ParseError
from .interval import IntervalRep
from .permutation import PermutationRep
from .trapezoid import TrapezoidRep

KINDS = ("interval", "circular-arc", "permutation", "trapezoid", "cactus")
VERSION = 1

Rep = Union[IntervalRep, ArcRep, PermutationRep, TrapezoidRep, CactusRep]

_INT = re.compile(r"-?(?:0|[1-9][0-9]*)\Z")


@dataclass(frozen=True)
class InputDocument:
    kind: str
    rep: Rep

    @property
    def n(self) -> int:
        return self.rep.n


def _ints(line: str, lineno: int, arity: int) -> list[int]:
    fields = line.split(" ")
    if len(fields) != arity:
        raise ParseError(lineno, f"expected {arity} integers, found {len(fields) if line else 0}")
    out = []
    for f in fields:
        if not _INT.match(f) or f == "-0":
            raise ParseError(lineno, f"{f!r} is not a canonical integer")
        out.append(int(f))
    return out


def parse_document(data: bytes) -> InputDocument:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise ParseError(1, f"non-ASCII byte at offset {exc.start}") from None
    if not text.endswith("\n"):
        raise ParseError(text.count("\n") + 1, "document must end with a newline")
    if "\r" in text:
        raise ParseError(text[: text.index("\r")].count("\n") + 1, "CR line endings are not allowed")
    lines = text[:-1].split("\n")

    head = lines[0].split(" ")
    if len(head) != 3 or head[0] != "wig":
        raise ParseError(1, "header must be 'wig <version> <class>'")
    if head[1] != str(VERSION):
        raise ParseError(1, f"unsupported format version {head[1]!r}")
    kind = head[2]
    if kind not in KINDS:
        raise ParseError(1, f"unknown class {kind!r}")
    if len(lines) < 2:
        raise ParseError(2, "missing size header")

    header_arity = 2 if kind in ("circular-arc", "cactus") else 1
    header = _ints(lines[1], 2, header_arity)
    n = header[0]
    if n < 0:
        raise ParseError(2, "n must be non-negative")
    if kind == "circular-arc" and header[1] < 2:
        raise ParseError(2, "circumference must be at least 2")

    if kind == "permutation":
        count, arity = 1, n
    elif kind == "cactus":
        count, arity = header[1], 3
        if count < 0:
            raise ParseError(2, "m must be non-negative")
    else:
        count, arity = n, 4 if kind == "trapezoid" else 2

    body = lines[2:]
    if len(body) < count:
        raise ParseError(len(lines) + 1, f"expected {count} record lines, found {len(body)}")
    if len(body) > count:
        raise ParseError(2 + count + 1, "trailing data after the last record")
    records = [_ints(line, 3 + k, arity) if arity else _empty(line, 3 + k) for k, line in enumerate(body)]

    for k, rec in enumerate(records):
        _check_record(kind, header, rec, 3 + k)
    try:
        rep = _build(kind, header, records)
    except InvalidInput as exc:
        raise ParseError(3, str(exc)) from None
    return InputDocument(kind, rep)


def _empty(line: str, lineno: int) -> list[int]:
    if line:
        raise ParseError(lineno, "expected an empty record for n = 0")
    return []


def _check_record(kind: str, header: list[int], rec: list[int], lineno: int) -> None:
    n = header[0]
    if kind == "interval":
        l, r = rec
        if l > r:
            raise ParseError(lineno, f"left endpoint {l} exceeds right endpoint {r}")
    elif kind == "circular-arc":
        C = header[1]
        s, e = rec
        if not (0 <= s < C and 0 <= e < C):
            raise ParseError(lineno, f"arc endpoints must lie in [0, {C})")
        if s == e:
            raise ParseError(lineno, "arc start equals end")
    elif kind == "trapezoid":
        a, b, c, d = rec
        if a > b or c > d:
            raise ParseError(lineno, "corners must satisfy a <= b and c <= d")
    elif kind == "permutation":
        if sorted(rec) != list(range(1, n + 1)):
            raise ParseError(lineno, f"not a permutation of 1..{n}")
    elif kind == "cactus":
        u, v, w = rec
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"vertex id outside 1..{n}")
        if u == v:
            raise ParseError(lineno, "self-loop")
        if w < 1:
            raise ParseError(lineno, f"weight {w} is not >= 1")


def _build(kind: str, header: list[int], records: list[list[int]]) -> Rep:
    if kind == "interval":
        return IntervalRep(records)
    if kind == "circular-arc":
        return ArcRep(header[1], records)
    if kind == "permutation":
        return PermutationRep(records[0])
    if kind == "trapezoid":
        return TrapezoidRep(records)
    return CactusRep(header[0], records)


def serialize_document(doc: InputDocument) -> bytes:
    rep = doc.rep
    out = [f"wig {VERSION} {doc.kind}"]
    if doc.kind == "interval":
        out.append(str(rep.n))
        out += [f"{l} {r}" for l, r in rep.intervals]
    elif doc.kind == "circular-arc":
        out.append(f"{rep.n} {rep.circumference}")
        out += [f"{s} {e}" for s, e in rep.arcs]
    elif doc.kind == "permutation":
        out.append(str(rep.n))
        out.append(" ".join(map(str, rep.pi)))
    elif doc.kind == "trapezoid":
        out.append(str(rep.n))
        out += [" ".join(map(str, t)) for t in rep.traps]
    elif doc.kind == "cactus":
        out.append(f"{rep.n} {rep.m}")
        out += [f"{u} {v} {w}" for u, v, w in rep.edges]
    else:
        raise InvalidInput(f"unknown class {doc.kind!r}")
    return ("\n".join(out) + "\n").encode("ascii")
