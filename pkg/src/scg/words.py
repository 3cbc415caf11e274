"""Evaluate words over a generator tuple.

Syntax (whitespace ignored)::

    r1 r2 r3            product, left to right (also ``r1*r2`` or ``r1·r2``)
    (r2 (r1 r0)^2)^3    grouping and integer powers, ``^-1`` for inverses
    a^7 (a^7)^r1        ``x^y`` with a word ``y`` is the conjugate y^-1 x y
    r2 (7,8)(9,10)      cycle literals, 1-based
    id                  the identity

Generators may be written ``r3``, ``rho3`` or ``ρ3``; ``ρ_3`` and ``r_{3}``
also work.  Any other identifier refers to a previously evaluated named word.
"""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence

from .perm import Permutation, parse_cycles

__all__ = ["WordError", "evaluate"]


class WordError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<cycle>\(\s*\d+(?:\s*,\s*\d+)+\s*\))"
    r"|(?P<gen>(?:rho|ρ|r)_?(?:\{(?P<bidx>\d+)\}|(?P<idx>\d+)))"
    r"|(?P<int>-?\d+)"
    r"|(?P<name>[A-Za-z_α-ωΑ-Ω][A-Za-z_0-9α-ωΑ-Ω']*)"
    r"|(?P<op>[()^*·{}]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordError(f"cannot parse word at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        if m.group("gen"):
            out.append(("gen", m.group("idx") or m.group("bidx")))
        else:
            out.append((kind, m.group(kind)))
    return out


class _Parser:
    def __init__(self, tokens, gens, env, degree):
        self.toks = tokens
        self.i = 0
        self.gens = gens
        self.env = env
        self.degree = degree

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self, closer=None) -> Permutation:
        result = Permutation.identity(self.degree)
        while True:
            kind, val = self.peek()
            if kind is None or (kind == "op" and val == closer):
                return result
            if kind == "op" and val in "*·":
                self.take()
                continue
            result = result * self.term()

    def term(self) -> Permutation:
        x = self.atom()
        while self.peek() == ("op", "^"):
            self.take()
            kind, val = self.peek()
            if kind == "int":
                self.take()
                x = x ** int(val)
            elif kind == "op" and val == "{":
                # ^{...}: integer or word
                self.take()
                if self.peek()[0] == "int" and self.toks[self.i + 1] == ("op", "}"):
                    x = x ** int(self.take()[1])
                    self.take()
                else:
                    y = self.expr("}")
                    self._expect("}")
                    x = ~y * x * y
            else:
                y = self.atom()
                x = ~y * x * y
        return x

    def atom(self) -> Permutation:
        kind, val = self.take()
        if kind == "gen":
            k = int(val)
            if k >= len(self.gens):
                raise WordError(f"generator index {k} outside rank {len(self.gens)}")
            return self.gens[k]
        if kind == "cycle":
            return parse_cycles(val, self.degree)
        if kind == "name":
            if val == "id":
                return Permutation.identity(self.degree)
            if val not in self.env:
                raise WordError(f"unknown name {val!r}")
            return self.env[val]
        if kind == "op" and val in "({":
            closer = ")" if val == "(" else "}"
            x = self.expr(closer)
            self._expect(closer)
            return x
        raise WordError(f"unexpected token {val!r}")

    def _expect(self, val):
        if self.take() != ("op", val):
            raise WordError(f"expected {val!r}")


def evaluate(
    word: str,
    gens: Sequence[Permutation],
    env: Mapping[str, Permutation] | None = None,
    degree: int | None = None,
) -> Permutation:
    """Evaluate ``word`` with ``r0, r1, ...`` bound to ``gens``."""
    if degree is None:
        if not gens:
            raise WordError("degree needed when there are no generators")
        degree = gens[0].degree
    p = _Parser(_tokenize(word), list(gens), dict(env or {}), degree)
    result = p.expr()
    if p.i != len(p.toks):
        raise WordError(f"trailing tokens in {word!r}")
    return result
