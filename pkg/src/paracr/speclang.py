"""Line-oriented input language for classification requests.

Statements are keyword-initial, one per line; `#` starts a comment:

    algebra E6
    realform su(3,3)            # or: satake black {2} arrows {(1,3)}
    pi1 {1,4,6}
    split plus {1,6} minus {4}
    mode classify               # classify | enumerate | tables

The same syntax doubles as the catalog asset format, where blank-line
separated blocks of `realform` / `algebra` / `satake` statements each
declare one named diagram.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .rootsys import AlgebraType, InvalidAlgebraError
from .satake import SatakeDiagram

MODES = ("classify", "enumerate", "tables")


class SpecError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class SpecDocument:
    algebra: AlgebraType
    real_form: str | None = None
    satake: SatakeDiagram | None = None
    pi1: tuple[int, ...] | None = None
    plus: tuple[int, ...] | None = None
    minus: tuple[int, ...] | None = None
    mode: str = "classify"


_SET_RE = r"\{\s*(?:\d+\s*(?:,\s*\d+\s*)*)?\}"
_PAIRSET_RE = r"\{\s*(?:\(\s*\d+\s*,\s*\d+\s*\)\s*(?:,\s*\(\s*\d+\s*,\s*\d+\s*\)\s*)*)?\}"

_STATEMENTS = {
    "algebra": re.compile(r"algebra\s+(\S+)\s*$"),
    "realform": re.compile(r"realform\s+(\S.*?)\s*$"),
    "satake": re.compile(
        rf"satake\s+black\s*({_SET_RE})\s+arrows\s*({_PAIRSET_RE})\s*$"
    ),
    "pi1": re.compile(rf"pi1\s*({_SET_RE})\s*$"),
    "split": re.compile(rf"split\s+plus\s*({_SET_RE})\s+minus\s*({_SET_RE})\s*$"),
    "mode": re.compile(r"mode\s+(\S+)\s*$"),
}


def _parse_set(text: str) -> tuple[int, ...]:
    body = text.strip()[1:-1].strip()
    if not body:
        return ()
    return tuple(int(tok) for tok in body.split(","))


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    return tuple((int(a), int(b)) for a, b in pairs)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _scan(text: str):
    """Yield (lineno, keyword, match) for every statement line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line.strip():
            continue
        stripped = line.lstrip()
        col = len(line) - len(stripped) + 1
        keyword = stripped.split(None, 1)[0]
        if keyword not in _STATEMENTS:
            raise SpecError(f"unknown statement {keyword!r}", lineno, col)
        m = _STATEMENTS[keyword].match(stripped)
        if not m:
            raise SpecError(f"cannot parse {keyword!r} statement", lineno, col)
        yield lineno, col, keyword, m


def parse_spec(text: str) -> SpecDocument:
    seen: dict[str, int] = {}
    algebra: AlgebraType | None = None
    real_form: str | None = None
    satake_raw = None
    pi1: tuple[int, ...] | None = None
    plus = minus = None
    mode = "classify"

    for lineno, col, keyword, m in _scan(text):
        if keyword in seen:
            raise SpecError(f"duplicate {keyword!r} statement (first at line {seen[keyword]})",
                            lineno, col)
        seen[keyword] = lineno
        if keyword == "algebra":
            try:
                algebra = AlgebraType.parse(m.group(1))
            except InvalidAlgebraError as exc:
                raise SpecError(str(exc), lineno, col) from None
        elif keyword == "realform":
            real_form = m.group(1)
        elif keyword == "satake":
            satake_raw = (_parse_set(m.group(1)), _parse_pairs(m.group(2)), lineno, col)
        elif keyword == "pi1":
            pi1 = tuple(sorted(set(_parse_set(m.group(1)))))
        elif keyword == "split":
            plus = tuple(sorted(set(_parse_set(m.group(1)))))
            minus = tuple(sorted(set(_parse_set(m.group(2)))))
        elif keyword == "mode":
            mode = m.group(1)
            if mode not in MODES:
                raise SpecError(f"mode must be one of {', '.join(MODES)}", lineno, col)

    if algebra is None:
        raise SpecError("missing 'algebra' statement", 1)
    if real_form is not None and satake_raw is not None:
        raise SpecError("'realform' and inline 'satake' are mutually exclusive",
                        satake_raw[2], satake_raw[3])

    satake = None
    if satake_raw is not None:
        black, arrows, lineno, col = satake_raw
        try:
            satake = SatakeDiagram(
                algebra, frozenset(black),
                frozenset(tuple(sorted(p)) for p in arrows),
            )
        except ValueError as exc:
            raise SpecError(str(exc), lineno, col) from None

    rank = algebra.rank
    if pi1 is not None:
        out = [v for v in pi1 if not 1 <= v <= rank]
        if out:
            raise SpecError(f"index {out[0]} out of range 1..{rank}", seen["pi1"])
        if satake is not None:
            black_hit = sorted(set(pi1) & satake.black)
            if black_hit:
                raise SpecError(f"black vertex {black_hit[0]} in pi1", seen["pi1"])
    if (plus is None) != (minus is None):
        raise SpecError("split needs both plus and minus", seen["split"])
    if plus is not None:
        if pi1 is None:
            raise SpecError("split requires a pi1 statement", seen["split"])
        if set(plus) & set(minus):
            raise SpecError(f"split parts overlap: {sorted(set(plus) & set(minus))}",
                            seen["split"])
        if set(plus) | set(minus) != set(pi1):
            raise SpecError("split parts must partition pi1", seen["split"])
        if not plus or not minus:
            raise SpecError("both split parts must be nonempty", seen["split"])

    return SpecDocument(algebra=algebra, real_form=real_form, satake=satake,
                        pi1=pi1, plus=plus, minus=minus, mode=mode)


def _fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _fmt_pairs(pairs) -> str:
    return "{" + ",".join(f"({i},{j})" for i, j in sorted(pairs)) + "}"


def print_spec(doc: SpecDocument) -> str:
    lines = [f"algebra {doc.algebra}"]
    if doc.real_form is not None:
        lines.append(f"realform {doc.real_form}")
    if doc.satake is not None:
        lines.append(
            f"satake black {_fmt_set(doc.satake.black)} arrows {_fmt_pairs(doc.satake.arrows)}"
        )
    if doc.pi1 is not None:
        lines.append(f"pi1 {_fmt_set(doc.pi1)}")
    if doc.plus is not None:
        lines.append(f"split plus {_fmt_set(doc.plus)} minus {_fmt_set(doc.minus)}")
    lines.append(f"mode {doc.mode}")
    return "\n".join(lines) + "\n"


def parse_catalog(text: str) -> list[SatakeDiagram]:
    """Parse blank-line separated catalog blocks into named diagrams."""
    diagrams = []
    for block_lines, start in _blocks(text):
        name = None
        algebra = None
        satake_raw = None
        for lineno, col, keyword, m in _scan("\n".join(block_lines)):
            lineno += start - 1
            if keyword == "realform":
                name = m.group(1)
            elif keyword == "algebra":
                try:
                    algebra = AlgebraType.parse(m.group(1))
                except InvalidAlgebraError as exc:
                    raise SpecError(str(exc), lineno, col) from None
            elif keyword == "satake":
                satake_raw = (_parse_set(m.group(1)), _parse_pairs(m.group(2)), lineno, col)
            else:
                raise SpecError(f"{keyword!r} statement not allowed in a catalog", lineno, col)
        if name is None or algebra is None or satake_raw is None:
            raise SpecError("catalog block needs realform, algebra and satake statements", start)
        black, arrows, lineno, col = satake_raw
        try:
            diagrams.append(SatakeDiagram(
                algebra, frozenset(black),
                frozenset(tuple(sorted(p)) for p in arrows),
                name=name,
            ))
        except ValueError as exc:
            raise SpecError(str(exc), lineno, col) from None
    return diagrams


def _blocks(text: str):
    lines = text.splitlines()
    block: list[str] = []
    start = 1
    for lineno, raw in enumerate(lines, start=1):
        if _strip(raw).strip():
            if not block:
                start = lineno
            block.append(raw)
        elif block:
            yield block, start
            block = []
    if block:
        yield block, start


def dump_catalog(diagrams) -> str:
    blocks = []
    for sd in diagrams:
        blocks.append(
            f"realform {sd.name}\n"
            f"algebra {sd.algebra}\n"
            f"satake black {_fmt_set(sd.black)} arrows {_fmt_pairs(sd.arrows)}\n"
        )
    return "\n".join(blocks)
