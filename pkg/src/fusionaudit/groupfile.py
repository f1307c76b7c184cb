"""Loader for the group-description text format.

Two dialects, selected by the first token:

  table           explicit n x n multiplication table of indices
  semidirect-gf2  F2^4 semidirect a matrix group generated by named
                  4x4 GF(2) matrices, with optional relation checks

The format is token-based and whitespace-insensitive; `#` starts a
comment running to end of line.  See docs/group-file-format.md.
"""
from __future__ import annotations

from typing import Dict, List, Tuple

from . import gf2
from .groups import DEFAULT_ORDER_CAP, FiniteGroup


class GroupFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for tok in body.split():
            tokens.append((tok, lineno))
    return tokens


class _Stream:
    def __init__(self, tokens: List[Tuple[str, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, what: str) -> Tuple[str, int]:
        if self.pos >= len(self.tokens):
            last = self.tokens[-1][1] if self.tokens else 1
            raise GroupFileError(last, f"unexpected end of file, expected {what}")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok


def load_group(text: str, max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    stream = _Stream(_tokenize(text))
    kind, line = stream.next("format tag")
    if kind == "table":
        return _load_table(stream, max_order)
    if kind == "semidirect-gf2":
        return _load_semidirect(stream, max_order)
    raise GroupFileError(line, f"unknown format {kind!r} "
                               "(expected 'table' or 'semidirect-gf2')")


def load_group_file(path: str, max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return load_group(fh.read(), max_order=max_order)


def _load_table(stream: _Stream, max_order: int) -> FiniteGroup:
    tok, line = stream.next("group order")
    try:
        n = int(tok)
    except ValueError:
        raise GroupFileError(line, f"group order must be an integer, got {tok!r}")
    if n < 1:
        raise GroupFileError(line, f"group order must be positive, got {n}")
    if n > max_order:
        raise GroupFileError(line, f"group order {n} exceeds the cap {max_order}")
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            tok, line = stream.next(f"table entry ({i},{j})")
            try:
                v = int(tok)
            except ValueError:
                raise GroupFileError(line, f"entry ({i},{j}) is not an integer: {tok!r}")
            if not 0 <= v < n:
                raise GroupFileError(line, f"entry ({i},{j}) = {v} out of range 0..{n-1}")
            row.append(v)
        table.append(row)
    extra = stream.peek()
    if extra is not None:
        raise GroupFileError(extra[1], f"unexpected trailing token {extra[0]!r}")
    try:
        G = FiniteGroup(table, name="file:table")
    except ValueError as exc:
        raise GroupFileError(1, f"not a group table: {exc}")
    G.check_axioms()
    return G


def _parse_matrix_rows(stream: _Stream, name: str) -> gf2.GF2Matrix:
    rows = []
    for i in range(4):
        tok, line = stream.next(f"row {i} of generator {name}")
        if len(tok) != 4 or any(c not in "01" for c in tok):
            raise GroupFileError(line, f"row {i} of generator {name} must be "
                                       f"4 bits of 0/1, got {tok!r}")
        rows.append(int(tok, 2))
    return tuple(rows)


def _load_semidirect(stream: _Stream, max_order: int) -> FiniteGroup:
    gens: Dict[str, gf2.GF2Matrix] = {}
    relations: List[Tuple[str, int]] = []
    while True:
        item = stream.peek()
        if item is None:
            break
        tok, line = stream.next("'gen' or 'rel'")
        if tok == "gen":
            name, nline = stream.next("generator name")
            if name in gens:
                raise GroupFileError(nline, f"duplicate generator {name!r}")
            m = _parse_matrix_rows(stream, name)
            if not gf2.is_invertible(m):
                raise GroupFileError(nline, f"generator {name} is not invertible")
            gens[name] = m
        elif tok == "rel":
            relations.append(stream.next("relation word"))
        else:
            raise GroupFileError(line, f"expected 'gen' or 'rel', got {tok!r}")
    if not gens:
        raise GroupFileError(1, "no generators given")

    for word, line in relations:
        if _evaluate_word(word, line, gens) != gf2.IDENTITY:
            raise GroupFileError(line, f"relation {word!r} does not hold")

    mats = _matrix_closure(list(gens.values()), max_order)
    order = 16 * len(mats)
    if order > max_order:
        raise GroupFileError(1, f"group order {order} exceeds the cap {max_order}")
    index_of = {m: i for i, m in enumerate(mats)}
    k = len(mats)

    def mul(x: int, y: int) -> int:
        h1, m1 = divmod(x, k)
        h2, m2 = divmod(y, k)
        h = h1 ^ gf2.mat_vec(mats[m1], h2)
        return h * k + index_of[gf2.mat_mul(mats[m1], mats[m2])]

    return FiniteGroup.from_mul(order, mul, name="file:semidirect-gf2")


def _evaluate_word(word: str, line: int, gens: Dict[str, gf2.GF2Matrix]) -> gf2.GF2Matrix:
    result = gf2.IDENTITY
    for factor in word.split("*"):
        name, _, exp_s = factor.partition("^")
        if name not in gens:
            raise GroupFileError(line, f"unknown generator {name!r} in relation {word!r}")
        try:
            exp = int(exp_s) if exp_s else 1
        except ValueError:
            raise GroupFileError(line, f"bad exponent {exp_s!r} in relation {word!r}")
        m = gens[name] if exp >= 0 else gf2.mat_inverse(gens[name])
        for _ in range(abs(exp)):
            result = gf2.mat_mul(result, m)
    return result


def _matrix_closure(gens: List[gf2.GF2Matrix], max_order: int) -> List[gf2.GF2Matrix]:
    members = {gf2.IDENTITY}
    frontier = [gf2.IDENTITY]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = gf2.mat_mul(m, g)
                if prod not in members:
                    members.add(prod)
                    new.append(prod)
        frontier = new
        if 16 * len(members) > max(max_order, 16 * gf2.GL4_ORDER):
            break
    # Identity first, remaining matrices in canonical order.
    rest = sorted((m for m in members if m != gf2.IDENTITY), key=gf2.mat_key)
    return [gf2.IDENTITY] + rest
