"""The unified query language: a GraphQL-compatible subset.

Two roots — ``paper(doi:)`` and ``person(id:)`` — with fixed nested
vocabularies. Comments, commas-as-whitespace, string escapes, and
``$variable`` arguments are supported so real query text can be replayed
verbatim.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import SchemaError

_NAME_RE = re.compile(r"[_A-Za-z][_0-9A-Za-z]*")
_NUMBER_RE = re.compile(r"-?\d+(\.\d+)?")

# ! and [] appear only in skipped variable-definition headers
_PUNCT = set("{}():![]")

_CONNECTION = {
    "totalCount": None,
    "nodes": {
        "id": None,
        "type": None,
        "titles": {"title": None},
        "creators": {"givenName": None, "familyName": None, "id": None},
        "fundingReferences": {"funderName": None, "awardTitle": None,
                              "awardNumber": None},
    },
}

VOCABULARY: dict[str, dict] = {
    "paper": {
        "doi": None,
        "title": None,
        "abstract": None,
        "citations": {"title": None, "doi": None},
        "references": {"title": None, "doi": None},
        "project": {"funder": None, "project": None},
        "topicDetails": {"topic": None},
        "metricsInformation": {"url": None, "image": None, "score": None},
    },
    "person": {
        "id": None,
        "name": None,
        "employment": {"organizationName": None, "organizationId": None,
                       "startDate": None, "endDate": None},
        "publications": _CONNECTION,
        "datasets": _CONNECTION,
        "softwares": _CONNECTION,
        "topics": None,
    },
}

ROOT_ARG = {"paper": "doi", "person": "id"}


@dataclass(frozen=True)
class Token:
    kind: str  # punct | name | string | number | variable
    value: str
    position: int


@dataclass(frozen=True)
class Field:
    name: str
    args: dict = field(default_factory=dict)
    selections: tuple["Field", ...] = ()


@dataclass(frozen=True)
class ParsedQuery:
    root: str
    key: str
    selection: tuple[Field, ...]

    def selects(self, name: str) -> bool:
        return any(f.name == name for f in self.selection)


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch.isspace() or ch == ",":
            i += 1
            continue
        if ch == "#":
            end = text.find("\n", i)
            i = length if end < 0 else end + 1
            continue
        if ch in _PUNCT:
            tokens.append(Token("punct", ch, i))
            i += 1
            continue
        if ch == '"':
            j = i + 1
            parts = []
            while j < length and text[j] != '"':
                if text[j] == "\\" and j + 1 < length:
                    parts.append(text[j + 1])
                    j += 2
                else:
                    parts.append(text[j])
                    j += 1
            if j >= length:
                raise SchemaError(f"unterminated string at offset {i}")
            tokens.append(Token("string", "".join(parts), i))
            i = j + 1
            continue
        if ch == "$":
            match = _NAME_RE.match(text, i + 1)
            if not match:
                raise SchemaError(f"bad variable name at offset {i}")
            tokens.append(Token("variable", match.group(0), i))
            i = match.end()
            continue
        match = _NAME_RE.match(text, i)
        if match:
            tokens.append(Token("name", match.group(0), i))
            i = match.end()
            continue
        match = _NUMBER_RE.match(text, i)
        if match:
            tokens.append(Token("number", match.group(0), i))
            i = match.end()
            continue
        raise SchemaError(f"unexpected character {ch!r} at offset {i}")
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], variables: dict | None):
        self.tokens = tokens
        self.variables = variables or {}
        self.index = 0

    def peek(self) -> Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self) -> Token:
        token = self.peek()
        if token is None:
            raise SchemaError("unexpected end of query")
        self.index += 1
        return token

    def expect(self, kind: str, value: str | None = None) -> Token:
        token = self.next()
        if token.kind != kind or (value is not None and token.value != value):
            want = value or kind
            raise SchemaError(
                f"expected {want!r}, got {token.value!r} at offset {token.position}")
        return token

    def parse_document(self) -> tuple[Field, ...]:
        token = self.peek()
        if token is None:
            raise SchemaError("empty query")
        if token.kind == "name":
            if token.value != "query":
                raise SchemaError(f"unsupported operation {token.value!r}")
            self.next()
            token = self.peek()
            if token is not None and token.kind == "name":  # operation name
                self.next()
                token = self.peek()
            if token is not None and token.kind == "punct" and token.value == "(":
                self._skip_balanced_parens()
        selection = self.parse_selection_set()
        if self.peek() is not None:
            trailing = self.peek()
            raise SchemaError(
                f"trailing content at offset {trailing.position}: {trailing.value!r}")
        return selection

    def _skip_balanced_parens(self) -> None:
        self.expect("punct", "(")
        depth = 1
        while depth:
            token = self.next()
            if token.kind == "punct" and token.value == "(":
                depth += 1
            elif token.kind == "punct" and token.value == ")":
                depth -= 1

    def parse_selection_set(self) -> tuple[Field, ...]:
        self.expect("punct", "{")
        fields = []
        while True:
            token = self.peek()
            if token is None:
                raise SchemaError("unterminated selection set")
            if token.kind == "punct" and token.value == "}":
                self.next()
                break
            fields.append(self.parse_field())
        if not fields:
            raise SchemaError("empty selection set")
        return tuple(fields)

    def parse_field(self) -> Field:
        name = self.expect("name").value
        args = {}
        token = self.peek()
        if token is not None and token.kind == "punct" and token.value == "(":
            self.next()
            while True:
                token = self.peek()
                if token is not None and token.kind == "punct" and token.value == ")":
                    self.next()
                    break
                arg_name = self.expect("name").value
                self.expect("punct", ":")
                args[arg_name] = self.parse_value()
        selections: tuple[Field, ...] = ()
        token = self.peek()
        if token is not None and token.kind == "punct" and token.value == "{":
            selections = self.parse_selection_set()
        return Field(name=name, args=args, selections=selections)

    def parse_value(self):
        token = self.next()
        if token.kind == "string":
            return token.value
        if token.kind == "number":
            return float(token.value) if "." in token.value else int(token.value)
        if token.kind == "variable":
            if token.value not in self.variables:
                raise SchemaError(f"undefined variable ${token.value}")
            return self.variables[token.value]
        raise SchemaError(
            f"unsupported argument value {token.value!r} at offset {token.position}")


def _validate_selection(path: str, vocabulary: dict,
                        selection: tuple[Field, ...]) -> None:
    for node in selection:
        if node.name not in vocabulary:
            raise SchemaError(f"unknown field {path}.{node.name}")
        child = vocabulary[node.name]
        if child is None and node.selections:
            raise SchemaError(f"{path}.{node.name} takes no sub-selection")
        if child is not None and not node.selections:
            raise SchemaError(f"{path}.{node.name} needs a sub-selection")
        if child is not None:
            _validate_selection(f"{path}.{node.name}", child, node.selections)


def parse_query(text: str, variables: dict | None = None) -> ParsedQuery:
    """Parse and validate query text against the unified schema."""
    if not isinstance(text, str) or not text.strip():
        raise SchemaError("query text is empty")
    parser = _Parser(tokenize(text), variables)
    top = parser.parse_document()
    if len(top) != 1:
        raise SchemaError("exactly one root field is required")
    root = top[0]
    if root.name not in VOCABULARY:
        raise SchemaError(f"unknown root field {root.name!r}")
    arg_name = ROOT_ARG[root.name]
    key = root.args.get(arg_name)
    if not key or not isinstance(key, str):
        raise SchemaError(f"{root.name} requires a string argument {arg_name!r}")
    if not root.selections:
        raise SchemaError(f"{root.name} needs a selection set")
    _validate_selection(root.name, VOCABULARY[root.name], root.selections)
    return ParsedQuery(root=root.name, key=key, selection=root.selections)


def _render(selection: tuple[Field, ...]) -> str:
    parts = []
    for node in selection:
        if node.selections:
            parts.append(f"{node.name} {{ {_render(node.selections)} }}")
        else:
            parts.append(node.name)
    return " ".join(parts)


def _full_selection(vocabulary: dict) -> tuple[Field, ...]:
    fields = []
    for name, child in vocabulary.items():
        selections = _full_selection(child) if child else ()
        fields.append(Field(name=name, selections=selections))
    return tuple(fields)


def build_paper_query(doi: str, groups: list[str] | None = None) -> str:
    """Render query text for a paper, optionally restricted to named fields."""
    selection = _full_selection(VOCABULARY["paper"])
    if groups is not None:
        wanted = set(groups)
        unknown = wanted - set(VOCABULARY["paper"])
        if unknown:
            raise SchemaError(f"unknown paper fields: {sorted(unknown)}")
        selection = tuple(f for f in selection if f.name in wanted)
    return f'{{ paper(doi: "{doi}") {{ {_render(selection)} }} }}'


def build_person_query(orcid: str, groups: list[str] | None = None) -> str:
    selection = _full_selection(VOCABULARY["person"])
    if groups is not None:
        wanted = set(groups)
        unknown = wanted - set(VOCABULARY["person"])
        if unknown:
            raise SchemaError(f"unknown person fields: {sorted(unknown)}")
        selection = tuple(f for f in selection if f.name in wanted)
    return f'{{ person(id: "{orcid}") {{ {_render(selection)} }} }}'
