"""A deliberately small validator for the DOT subset this package emits.

Accepted grammar::

    graph ID { stmt* }
    stmt := ID [attrs] ';' | ID '--' ID [attrs] ';'
    attrs := '[' key=value (',' key=value)* ']'
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r'\s*(?:(--)|([{}\[\];=,])|("(?:[^"\\]|\\.)*")|([A-Za-z_][A-Za-z0-9_]*|-?\d+))')


class DotSyntaxError(ValueError):
    pass


def tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise DotSyntaxError(f"unexpected character at offset {pos}: {text[pos:pos + 10]!r}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return out


def _is_id(tok: str) -> bool:
    return bool(tok) and (tok[0].isalpha() or tok[0] in '_"-' or tok[0].isdigit()) and tok not in ("--",)


def check_dot(text: str) -> dict[str, int]:
    """Validate ``text``; return node and edge counts or raise DotSyntaxError."""
    toks = tokenize(text)
    if len(toks) < 4 or toks[0] != "graph" or not _is_id(toks[1]) or toks[2] != "{" or toks[-1] != "}":
        raise DotSyntaxError("expected 'graph NAME { ... }'")
    body = toks[3:-1]
    nodes: set[str] = set()
    edges = 0
    i = 0

    def attrs(i: int) -> int:
        if i < len(body) and body[i] == "[":
            i += 1
            while True:
                if i + 2 >= len(body) or not _is_id(body[i]) or body[i + 1] != "=" or not _is_id(body[i + 2]):
                    raise DotSyntaxError("malformed attribute list")
                i += 3
                if body[i] == ",":
                    i += 1
                    continue
                if body[i] == "]":
                    return i + 1
                raise DotSyntaxError("expected ',' or ']' in attribute list")
        return i

    while i < len(body):
        if not _is_id(body[i]) or body[i] in "{}[];=,":
            raise DotSyntaxError(f"expected a node id, got {body[i]!r}")
        first = body[i]
        i += 1
        if i < len(body) and body[i] == "--":
            if i + 1 >= len(body) or not _is_id(body[i + 1]) or body[i + 1] in "{}[];=,":
                raise DotSyntaxError("edge is missing its second endpoint")
            nodes.update((first, body[i + 1]))
            edges += 1
            i += 2
        else:
            nodes.add(first)
        i = attrs(i)
        if i >= len(body) or body[i] != ";":
            raise DotSyntaxError("statement must end with ';'")
        i += 1
    return {"nodes": len(nodes), "edges": edges}
