"""Monomials, monomial ideals and multidegrees, with a small text format.

All exponent data is exact integer data.  Ideals normalize themselves to
their unique minimal generating set on construction, so two ideals are
equal iff they define the same quotient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class ParseError(ValueError):
    """Malformed ideal text.  Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Monomial:
    """A monomial x^e recorded as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(self.exponents)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {e!r}")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def support(self) -> frozenset[int]:
        """Indices (1-based) of variables that appear."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def divides(self, other: "Monomial") -> bool:
        if self.n != other.n:
            raise ValueError("monomials live in different rings")
        return all(a <= b for a, b in zip(self.exponents, other.exponents))


def divides(m: Monomial, other: Monomial) -> bool:
    return m.divides(other)


def _canonical_key(m: Monomial) -> tuple:
    # ascending total degree, then descending lex, so x^2 prints before x*y
    return (m.total_degree, tuple(-e for e in m.exponents))


def minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial strictly divisible by another in the list.

    Duplicates count once.  The result is the unique minimal generating
    set of the ideal the input generates, in canonical order.
    """
    unique = {m.exponents: m for m in gens}
    ms = list(unique.values())
    if ms and any(m.n != ms[0].n for m in ms):
        raise ValueError("mixed ambient rings")
    kept = [
        m
        for m in ms
        if not any(g is not m and g.divides(m) for g in ms)
    ]
    return sorted(kept, key=_canonical_key)


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in k[var_names], stored by its minimal generators."""

    var_names: tuple[str, ...]
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        names = tuple(self.var_names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for nm in names:
            if not _NAME_RE.fullmatch(nm):
                raise ValueError(f"bad variable name {nm!r}")
        gens = tuple(minimalize(self.gens))
        for m in gens:
            if m.n != len(names):
                raise ValueError("generator does not match variable count")
        object.__setattr__(self, "var_names", names)
        object.__setattr__(self, "gens", gens)

    @property
    def n(self) -> int:
        return len(self.var_names)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(m.is_unit for m in self.gens)


def rho(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Per-variable exponent bounds: max of each exponent over the
    minimal generators, clamped below by 1 so every variable owns at
    least one polarized copy."""
    out = []
    for i in range(ideal.n):
        best = max((m.exponents[i] for m in ideal.gens), default=0)
        out.append(max(1, best))
    return tuple(out)


def rho_total(ideal: MonomialIdeal) -> int:
    return sum(rho(ideal))


@dataclass(frozen=True)
class MultiDegree:
    """A point of Z^n grading the quotient ring."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        ents = tuple(self.entries)
        for e in ents:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError(f"degree entries must be integers, got {e!r}")
        object.__setattr__(self, "entries", ents)

    @property
    def n(self) -> int:
        return len(self.entries)

    def negative_support(self) -> frozenset[int]:
        """Indices (1-based) with a strictly negative entry."""
        return frozenset(i + 1 for i, e in enumerate(self.entries) if e < 0)

    def truncated(self) -> "MultiDegree":
        """Replace every negative entry by -1."""
        return MultiDegree(tuple(e if e >= 0 else -1 for e in self.entries))

    def leq(self, bound: Sequence[int]) -> bool:
        if len(bound) != self.n:
            raise ValueError("length mismatch")
        return all(e <= b for e, b in zip(self.entries, bound))


def negative_support(degree: MultiDegree) -> frozenset[int]:
    return degree.negative_support()


# ---------------------------------------------------------------------------
# text format:  a "vars" line, then a "gens" line, '#' starts a comment


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for nm, e in zip(names, m.exponents):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append(f"{nm}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    vars_line = "vars " + " ".join(ideal.var_names)
    gens_line = "gens " + ", ".join(
        format_monomial(m, ideal.var_names) for m in ideal.gens
    )
    return vars_line + "\n" + gens_line.rstrip() + "\n"


class _LineScanner:
    """Cursor over one significant line, tracking columns for errors."""

    def __init__(self, text: str, lineno: int):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def fail(self, message: str) -> "ParseError":
        return ParseError(message, self.lineno, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_name(self) -> str:
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            raise self.fail("expected a name")
        self.pos = m.end()
        return m.group()

    def take_int(self) -> int:
        self.skip_ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise self.fail("expected a non-negative integer")
        self.pos = m.end()
        return int(m.group())

    def take_char(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise self.fail(f"expected {ch!r}")
        self.pos += 1


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            out.append((lineno, body))
    return out


def _parse_monomial(sc: _LineScanner, index_of: dict[str, int], n: int) -> Monomial:
    exps = [0] * n
    while True:
        sc.skip_ws()
        if sc.peek().isdigit():
            start = sc.pos
            val = sc.take_int()
            if val != 1:
                sc.pos = start
                raise sc.fail("only the factor 1 may be a bare integer")
        else:
            start = sc.pos
            name = sc.take_name()
            if name not in index_of:
                sc.pos = start
                raise sc.fail(f"unknown variable {name!r}")
            e = 1
            if sc.peek() == "^":
                sc.take_char("^")
                e = sc.take_int()
            exps[index_of[name]] += e
        if sc.peek() == "*":
            sc.take_char("*")
            continue
        return Monomial(tuple(exps))


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the two-line ideal format.

    Raises:
        ParseError: on any malformed input, with line and column.
    """
    lines = _significant_lines(text)
    total_lines = len(text.splitlines())
    if not lines:
        raise ParseError("expected a vars line", total_lines + 1, 1)

    sc = _LineScanner(lines[0][1], lines[0][0])
    kw = sc.take_name() if not sc.at_end() else ""
    if kw != "vars":
        raise ParseError("expected a vars line", sc.lineno, 1)
    names: list[str] = []
    while not sc.at_end():
        names.append(sc.take_name())
    if not names:
        raise sc.fail("vars line declares no variables")
    if len(set(names)) != len(names):
        raise sc.fail("duplicate variable name")

    if len(lines) < 2:
        raise ParseError("expected a gens line", total_lines + 1, 1)
    sc = _LineScanner(lines[1][1], lines[1][0])
    kw = sc.take_name() if not sc.at_end() else ""
    if kw != "gens":
        raise ParseError("expected a gens line", sc.lineno, 1)
    if len(lines) > 2:
        extra = lines[2]
        raise ParseError("unexpected extra line", extra[0], 1)

    index_of = {nm: i for i, nm in enumerate(names)}
    gens: list[Monomial] = []
    if not sc.at_end():
        while True:
            gens.append(_parse_monomial(sc, index_of, len(names)))
            if sc.at_end():
                break
            sc.take_char(",")
            if sc.at_end():
                raise sc.fail("trailing comma")
    return MonomialIdeal(tuple(names), tuple(gens))
