"""Reading and writing the .hstruct structure file format.

The format is a JSON-syntax object with a fixed field set per structure
kind. Parsing is strict and position-aware: unknown fields, wrong shapes,
empty hyperoperation cells and out-of-range indices are all rejected with
the 1-based line and column of the offending token, which the stock json
module cannot provide for semantic errors. Serialization is deterministic
(sorted keys, row-major tables, ascending cell members) so equal structures
produce byte-identical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from .core import (
    MAX_CARRIER,
    BJoinSemilattice,
    Carrier,
    LMosaic,
    StructureError,
    members,
)

Structure = Union[BJoinSemilattice, LMosaic]

FILE_SUFFIX = ".hstruct"


class ParseError(ValueError):
    """Document rejected; carries the 1-based line and column."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


# --- serialization -----------------------------------------------------------

def serialize_structure(s: Structure) -> str:
    """Canonical document text for a structure, labels included."""
    doc: Dict[str, object] = {"size": s.n}
    if s.carrier.labels is not None:
        doc["labels"] = list(s.carrier.labels)
    if isinstance(s, BJoinSemilattice):
        doc["kind"] = "bjoin"
        doc["bot"] = s.bot
        doc["table"] = [list(row) for row in s.join]
    elif isinstance(s, LMosaic):
        doc["kind"] = "lmosaic"
        doc["e"] = s.e
        doc["rho"] = list(s.rho)
        doc["table"] = [[list(members(cell)) for cell in row] for row in s.hyp]
    else:
        raise TypeError(f"cannot serialize {type(s).__name__}")
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# --- tokenizer ---------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str  # one of {}[]:, or "string", "int", "end"
    value: object
    line: int
    col: int


_ESCAPES = {
    '"': '"', "\\": "\\", "/": "/",
    "b": "\b", "f": "\f", "n": "\n", "r": "\r", "t": "\t",
}


def _scan_string(text: str, start: int, line: int, col: int) -> Tuple[str, int]:
    out: List[str] = []
    i = start + 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == '"':
            return "".join(out), i + 1 - start
        if ch == "\n":
            break
        if ch == "\\":
            if i + 1 >= n:
                break
            esc = text[i + 1]
            if esc in _ESCAPES:
                out.append(_ESCAPES[esc])
                i += 2
                continue
            if esc == "u":
                hexs = text[i + 2 : i + 6]
                if len(hexs) == 4 and all(c in "0123456789abcdefABCDEF" for c in hexs):
                    out.append(chr(int(hexs, 16)))
                    i += 6
                    continue
                raise ParseError(line, col, "invalid unicode escape in string")
            raise ParseError(line, col, f"invalid escape '\\{esc}' in string")
        out.append(ch)
        i += 1
    raise ParseError(line, col, "unterminated string")


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch in "{}[]:,":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        if ch == '"':
            value, consumed = _scan_string(text, i, line, col)
            tokens.append(_Token("string", value, line, col))
            i += consumed
            col += consumed
            continue
        if ch == "-" or ch.isdigit():
            j = i + 1 if ch == "-" else i
            if j >= n or not text[j].isdigit():
                raise ParseError(line, col, "invalid number")
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k < n and text[k] in ".eE":
                raise ParseError(line, col, "only integers are allowed")
            digits = text[j:k]
            if len(digits) > 1 and digits[0] == "0":
                raise ParseError(line, col, "leading zeros are not allowed")
            tokens.append(_Token("int", int(text[i:k]), line, col))
            col += k - i
            i = k
            continue
        raise ParseError(line, col, f"unexpected character {ch!r}")
    tokens.append(_Token("end", None, line, col))
    return tokens


# --- parser ------------------------------------------------------------------

@dataclass(frozen=True)
class _Node:
    """A parsed value plus the position of its first token."""

    value: object  # int | str | List[_Node] | Dict[str, Tuple[_Token, _Node]]
    line: int
    col: int


def _describe(tok: _Token) -> str:
    if tok.kind == "end":
        return "end of input"
    if tok.kind == "string":
        return f"string {tok.value!r}"
    if tok.kind == "int":
        return f"number {tok.value}"
    return f"'{tok.kind}'"


class _Parser:
    def __init__(self, tokens: List[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.advance()
        if tok.kind != kind:
            raise ParseError(tok.line, tok.col,
                             f"expected {kind!r}, got {_describe(tok)}")
        return tok

    def parse_value(self) -> _Node:
        tok = self.advance()
        if tok.kind in ("int", "string"):
            return _Node(tok.value, tok.line, tok.col)
        if tok.kind == "{":
            entries: Dict[str, Tuple[_Token, _Node]] = {}
            if self.peek().kind == "}":
                self.advance()
                return _Node(entries, tok.line, tok.col)
            while True:
                key = self.expect("string")
                if key.value in entries:
                    raise ParseError(key.line, key.col,
                                     f"duplicate field {key.value!r}")
                self.expect(":")
                entries[key.value] = (key, self.parse_value())
                sep = self.advance()
                if sep.kind == "}":
                    return _Node(entries, tok.line, tok.col)
                if sep.kind != ",":
                    raise ParseError(sep.line, sep.col,
                                     f"expected ',' or '}}', got {_describe(sep)}")
        if tok.kind == "[":
            items: List[_Node] = []
            if self.peek().kind == "]":
                self.advance()
                return _Node(items, tok.line, tok.col)
            while True:
                items.append(self.parse_value())
                sep = self.advance()
                if sep.kind == "]":
                    return _Node(items, tok.line, tok.col)
                if sep.kind != ",":
                    raise ParseError(sep.line, sep.col,
                                     f"expected ',' or ']', got {_describe(sep)}")
        raise ParseError(tok.line, tok.col, f"unexpected {_describe(tok)}")


# --- validation --------------------------------------------------------------

def _need_int(node: _Node, what: str, lo: int, hi: int) -> int:
    if not isinstance(node.value, int):
        raise ParseError(node.line, node.col, f"{what} must be an integer")
    if not lo <= node.value <= hi:
        raise ParseError(node.line, node.col,
                         f"{what} must be in {lo}..{hi}, got {node.value}")
    return node.value


def _need_list(node: _Node, what: str, length: Optional[int] = None) -> List[_Node]:
    if not isinstance(node.value, list):
        raise ParseError(node.line, node.col, f"{what} must be an array")
    if length is not None and len(node.value) != length:
        raise ParseError(node.line, node.col,
                         f"{what} must have {length} entries, got {len(node.value)}")
    return node.value


_FIELDS = {
    "bjoin": frozenset({"kind", "size", "labels", "bot", "table"}),
    "lmosaic": frozenset({"kind", "size", "labels", "e", "rho", "table"}),
}


def parse_structure(text: str) -> Structure:
    """Parse a document into a shape-valid structure.

    Strict field checking: unknown or duplicate fields, shape and range
    violations all raise ParseError at the offending position.
    """
    parser = _Parser(_tokenize(text))
    root = parser.parse_value()
    tail = parser.advance()
    if tail.kind != "end":
        raise ParseError(tail.line, tail.col, "trailing content after document")
    if not isinstance(root.value, dict):
        raise ParseError(root.line, root.col, "top-level value must be an object")
    fields = root.value

    if "kind" not in fields:
        raise ParseError(root.line, root.col, "missing field 'kind'")
    kind_node = fields["kind"][1]
    kind = kind_node.value
    if kind not in _FIELDS:
        if not isinstance(kind, str):
            raise ParseError(kind_node.line, kind_node.col,
                             "field 'kind' must be a string")
        raise ParseError(kind_node.line, kind_node.col,
                         f"unknown kind {kind!r}; expected 'bjoin' or 'lmosaic'")
    allowed = _FIELDS[kind]
    for name, (key_tok, _) in fields.items():
        if name not in allowed:
            raise ParseError(key_tok.line, key_tok.col,
                             f"unknown field {name!r} for kind {kind!r}")
    for name in sorted(allowed - {"labels"}):
        if name not in fields:
            raise ParseError(root.line, root.col, f"missing field {name!r}")

    size = _need_int(fields["size"][1], "size", 1, MAX_CARRIER)
    labels: Optional[Tuple[str, ...]] = None
    if "labels" in fields:
        items = _need_list(fields["labels"][1], "labels", size)
        seen: Dict[str, bool] = {}
        out: List[str] = []
        for item in items:
            if not isinstance(item.value, str):
                raise ParseError(item.line, item.col, "labels must be strings")
            if item.value in seen:
                raise ParseError(item.line, item.col,
                                 f"duplicate label {item.value!r}")
            seen[item.value] = True
            out.append(item.value)
        labels = tuple(out)

    try:
        carrier = Carrier(size, labels)
        if kind == "bjoin":
            return _finish_bjoin(carrier, fields)
        return _finish_lmosaic(carrier, fields)
    except StructureError as exc:
        # shape errors are pre-checked above, so this is a safety net
        raise ParseError(root.line, root.col, str(exc)) from exc


def _finish_bjoin(carrier: Carrier, fields: dict) -> BJoinSemilattice:
    n = carrier.size
    bot = _need_int(fields["bot"][1], "bot", 0, n - 1)
    rows = _need_list(fields["table"][1], "table", n)
    table = []
    for x, row_node in enumerate(rows):
        row_items = _need_list(row_node, f"table row {x}", n)
        table.append(tuple(
            _need_int(cell, f"table cell ({x},{y})", 0, n - 1)
            for y, cell in enumerate(row_items)
        ))
    return BJoinSemilattice(carrier, tuple(table), bot)


def _finish_lmosaic(carrier: Carrier, fields: dict) -> LMosaic:
    n = carrier.size
    e = _need_int(fields["e"][1], "e", 0, n - 1)
    rho_items = _need_list(fields["rho"][1], "rho", n)
    rho = tuple(
        _need_int(item, f"rho[{i}]", 0, n - 1)
        for i, item in enumerate(rho_items)
    )
    rows = _need_list(fields["table"][1], "table", n)
    table = []
    for x, row_node in enumerate(rows):
        row_items = _need_list(row_node, f"table row {x}", n)
        row = []
        for y, cell_node in enumerate(row_items):
            if not isinstance(cell_node.value, list):
                raise ParseError(cell_node.line, cell_node.col,
                                 f"table cell ({x},{y}) must be an array of indices")
            if not cell_node.value:
                raise ParseError(cell_node.line, cell_node.col,
                                 f"empty hyperoperation cell at ({x},{y})")
            mask = 0
            for item in cell_node.value:
                z = _need_int(item, f"element of cell ({x},{y})", 0, n - 1)
                if mask >> z & 1:
                    raise ParseError(item.line, item.col,
                                     f"duplicate element {z} in cell ({x},{y})")
                mask |= 1 << z
            row.append(mask)
        table.append(tuple(row))
    return LMosaic(carrier, tuple(table), e, rho)


def load_structure(path) -> Structure:
    """Parse a structure from a file path."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_structure(fh.read())


def save_structure(s: Structure, path) -> None:
    """Serialize a structure to a file path."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_structure(s))
