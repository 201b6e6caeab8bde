"""Text grammar for rings, modules, matrices, complexes and subcategories.

    ring     := QQ[vars] [/ (polys)] [order] | Fp(p)[vars] [/ (polys)] [order]
              | ZZ | ZZ/n
    order    := grevlex | lex | elim:k
    module   := summand (+ summand)*           (``+`` splits only at depth 0)
    summand  := 0 | R | R^n | R/(polys) | coker MATRIX | Z | Z/n   (Z forms over ZZ rings)
    matrix   := [[e, e, ...], [e, ...], ...]   (row-major; e is a ring element)
    complex  := dN=MATRIX; dM=MATRIX; ...      (d_n : C_n -> C_{n-1})
    wide     := wide[RING]{module; module; ...} | module; module; ...

All errors are ``ParseError`` with a 1-based line and column.
"""

import re

from .exactarith import GF, QQ, IntegerRing
from .freemod import FPModule, direct_sum
from .polyring import ParseError, PolyRing, parse_poly, parse_poly_list

_RING = re.compile(
    r"^\s*(?:QQ|Fp\(\s*(\d+)\s*\))\s*\[([^\]]*)\]\s*(?:/\s*\((.*)\))?\s*(lex|grevlex|elim:\d+)?\s*$",
    re.S,
)
_ZRING = re.compile(r"^\s*ZZ\s*(?:/\s*(\d+))?\s*$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def parse_ring(text):
    m = _ZRING.match(text)
    if m:
        n = int(m.group(1) or 0)
        if n == 1:
            raise ParseError("ZZ/1 is the zero ring", text, text.find("1"))
        return IntegerRing(n)
    m = _RING.match(text)
    if m is None:
        raise ParseError("expected a ring such as 'QQ[x,y] grevlex', 'Fp(7)[x] lex' or 'ZZ/12'", text, 0)
    if m.group(1) is not None:
        try:
            field = GF(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc), text, m.start(1)) from None
    else:
        field = QQ
    names = [v.strip() for v in m.group(2).split(",") if v.strip()]
    for v in names:
        if not _IDENT.match(v):
            raise ParseError(f"bad variable name {v!r}", text, m.start(2) + m.group(2).find(v))
    if not names:
        raise ParseError("need at least one variable", text, m.start(2))
    if len(set(names)) != len(names):
        raise ParseError("repeated variable", text, m.start(2))
    order = m.group(4) or "grevlex"
    if order.startswith("elim:") and not 0 < int(order[5:]) <= len(names):
        raise ParseError("elimination block out of range", text, m.start(4))
    ring = PolyRing(field, names, order)
    if m.group(3) is not None:
        off = m.start(3)
        gens = _shifted(lambda: parse_poly_list(m.group(3), ring), text, off)
        ring = ring.quotient(gens)
    return ring


def _shifted(fn, text, offset):
    # re-anchor a nested ParseError in the enclosing text
    try:
        return fn()
    except ParseError as exc:
        msg = str(exc).rsplit(" at line", 1)[0]
        raise ParseError(msg, text, offset + exc.column - 1) from None


def parse_element(text, ring, full=None, offset=0):
    full = text if full is None else full
    if isinstance(ring, IntegerRing):
        s = text.strip()
        if not re.fullmatch(r"[+-]?\d+", s):
            raise ParseError(f"expected an integer, got {s!r}", full, offset + max(text.find(s), 0))
        return ring.canonical(int(s))
    return _shifted(lambda: parse_poly(text, ring), full, offset)


def split_top(text, sep, offset=0):
    """Split on ``sep`` outside (), [] and {}; yields ``(start, piece)``."""
    depth = 0
    start = 0
    out = []
    for i, ch in enumerate(text):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced {ch!r}", text, i)
        elif ch == sep and depth == 0:
            out.append((offset + start, text[start:i]))
            start = i + 1
    if depth:
        raise ParseError("unbalanced brackets", text, len(text))
    out.append((offset + start, text[start:]))
    return out


def parse_matrix(text, ring, full=None, offset=0):
    """Row-major ``[[a, b], [c, d]]``; ``[[]]`` or ``[]`` is the empty matrix."""
    full = text if full is None else full
    s = text.strip()
    base = offset + text.find(s)
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("expected a matrix like [[a, b], [c, d]]", full, base)
    inner = s[1:-1]
    rows = []
    if not inner.strip():
        return rows
    for start, piece in split_top(inner, ",", base + 1):
        p = piece.strip()
        pstart = start + piece.find(p)
        if not (p.startswith("[") and p.endswith("]")):
            raise ParseError("expected a row [a, b, ...]", full, pstart)
        body = p[1:-1]
        if not body.strip():
            rows.append([])
            continue
        rows.append(
            [parse_element(e, ring, full, st) for st, e in split_top(body, ",", pstart + 1)]
        )
    if len({len(r) for r in rows}) > 1:
        raise ParseError("rows have different lengths", full, base)
    if rows and not rows[0]:
        return []
    return rows


def _graded_or_plain(M):
    if isinstance(M.ring, PolyRing) and M.degrees is None:
        M.degrees = (0,) * M.ngens
        if not M.is_homogeneous():
            M.degrees = None
    return M


_POWER = re.compile(r"^R\s*\^\s*(\d+)$")
_ZCYC = re.compile(r"^Z\s*/\s*(\d+)$")


def parse_summand(text, ring, full, offset):
    s = text.strip()
    pos = offset + max(text.find(s), 0)
    if s == "0":
        return FPModule.zero(ring)
    if s == "R" or (s == "Z" and isinstance(ring, IntegerRing)):
        return FPModule.free(ring, 1)
    m = _POWER.match(s)
    if m:
        return FPModule.free(ring, int(m.group(1)))
    m = _ZCYC.match(s)
    if m:
        if not isinstance(ring, IntegerRing):
            raise ParseError("Z/n modules need a ZZ ring", full, pos)
        return FPModule.cyclic(ring, [int(m.group(1))])
    if s.startswith("R/"):
        rest = s[2:].strip()
        if not (rest.startswith("(") and rest.endswith(")")):
            raise ParseError("expected R/(generators)", full, pos + 2)
        body = rest[1:-1]
        bstart = pos + s.find("(") + 1
        if isinstance(ring, IntegerRing):
            gens = [] if not body.strip() else [
                parse_element(e, ring, full, st) for st, e in split_top(body, ",", bstart)
            ]
        else:
            gens = _shifted(lambda: parse_poly_list(body, ring), full, bstart)
        return _graded_or_plain(FPModule.cyclic(ring, gens))
    if s.startswith("coker"):
        rows = parse_matrix(s[5:], ring, full, pos + 5)
        if not rows:
            raise ParseError("coker needs a nonempty matrix", full, pos)
        return _graded_or_plain(FPModule.from_matrix(ring, rows))
    raise ParseError(f"unknown module {s!r}", full, pos)


def parse_module(text, ring, full=None, offset=0):
    full = text if full is None else full
    parts = split_top(text, "+", offset)
    M = None
    for start, piece in parts:
        if not piece.strip():
            raise ParseError("empty summand", full, start)
        N = parse_summand(piece, ring, full, start)
        M = N if M is None else direct_sum(M, N)
    return M


_DIFF = re.compile(r"^\s*d\s*(-?\d+)\s*=", re.S)


def parse_complex(text, ring):
    from .derived import FreeComplex

    diffs = {}
    for start, piece in split_top(text, ";"):
        if not piece.strip():
            continue
        m = _DIFF.match(piece)
        if m is None:
            raise ParseError("expected dN=[[...]]", text, start)
        n = int(m.group(1))
        if n in diffs:
            raise ParseError(f"d{n} given twice", text, start)
        diffs[n] = parse_matrix(piece[m.end():], ring, text, start + m.end())
    if not diffs:
        raise ParseError("empty complex", text, 0)
    ranks = {}

    def put(n, r):
        if ranks.setdefault(n, r) != r:
            raise ParseError(f"rank of C_{n} is inconsistent", text, 0)

    for n, mat in sorted(diffs.items()):
        if mat:
            put(n - 1, len(mat))
            put(n, len(mat[0]))
    full_diffs = {}
    for n, mat in diffs.items():
        rows, cols = ranks.get(n - 1, 0), ranks.get(n, 0)
        full_diffs[n] = mat if mat else [[ring.zero] * cols for _ in range(rows)]
    return FreeComplex(ring, ranks, full_diffs)


def parse_wide(text, ring=None):
    """Returns ``(ring, [modules])``."""
    s = text.strip()
    off = text.find(s) if s else 0
    if s.startswith("wide["):
        depth = 0
        for i in range(4, len(s)):
            if s[i] == "[":
                depth += 1
            elif s[i] == "]":
                depth -= 1
                if depth == 0:
                    break
        else:
            raise ParseError("unterminated wide[...]", text, off)
        ring = _shifted(lambda: parse_ring(s[5:i]), text, off + 5)
        rest = s[i + 1:].strip()
        if not (rest.startswith("{") and rest.endswith("}")):
            raise ParseError("expected {module; ...}", text, off + i + 1)
        body_off = off + s.find("{", i) + 1
        body = rest[1:-1]
    else:
        if ring is None:
            raise ParseError("a plain module list needs --ring", text, off)
        body, body_off = text, 0
    mods = [
        parse_module(piece, ring, text, start)
        for start, piece in split_top(body, ";", body_off)
        if piece.strip()
    ]
    return ring, mods


def format_element(a):
    return str(a)


def format_matrix(rows):
    return "[" + ", ".join("[" + ", ".join(map(format_element, r)) + "]" for r in rows) + "]"


def format_module(M):
    if M.ngens == 0:
        return "0"
    if M.ngens == 1:
        gens = [r[0] for r in M.relations]
        if not gens:
            return "R"
        return "R/(" + ", ".join(map(format_element, gens)) + ")"
    if not M.relations:
        return f"R^{M.ngens}"
    return "coker" + format_matrix(M.matrix())
