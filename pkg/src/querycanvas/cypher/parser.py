"""Parser for the translator's emission grammar.

Accepted statements are lines of `MATCH` single-hop patterns (or bare
nodes), at most one `WHERE` line of `AND`-joined predicates, and a final
`RETURN` line. Inline property maps are accepted in node and relationship
annotations even though the translator emits equalities in WHERE. This is not
a Cypher parser; anything outside the emission subset is a syntax error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import CypherSyntaxError
from ..query_model import QueryGraph, QueryNode, QueryRelation
from ..scalars import Scalar


@dataclass(frozen=True)
class ReturnItem:
    variable: str
    alias: str
    identity: bool  # True for id(var) AS alias


@dataclass
class ParsedQuery:
    graph: QueryGraph
    equalities: list = field(default_factory=list)  # (var, key, value)
    inequalities: list = field(default_factory=list)  # (var_a, var_b)
    returns: list = field(default_factory=list)

    @property
    def node_vars(self) -> set:
        return {qnode.id for qnode in self.graph.qnodes}

    @property
    def rel_vars(self) -> set:
        return {qrel.id for qrel in self.graph.qrels}


class _Scanner:
    def __init__(self, text: str, line_no: int):
        self.text = text
        self.pos = 0
        self.line_no = line_no

    def error(self, message: str) -> CypherSyntaxError:
        return CypherSyntaxError(f"line {self.line_no}: {message}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def take(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            raise self.error(f"expected {literal!r} at column {self.pos + 1}")

    def name(self) -> str:
        self.skip_ws()
        if self.peek() == "`":
            self.pos += 1
            out = []
            while self.pos < len(self.text):
                ch = self.text[self.pos]
                if ch == "`":
                    if self.text.startswith("``", self.pos):
                        out.append("`")
                        self.pos += 2
                        continue
                    self.pos += 1
                    if not out:
                        raise self.error("empty backticked name")
                    return "".join(out)
                out.append(ch)
                self.pos += 1
            raise self.error("unterminated backticked name")
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start or self.text[start].isdigit():
            raise self.error(f"expected a name at column {start + 1}")
        return self.text[start:self.pos]

    def literal(self) -> Scalar:
        self.skip_ws()
        ch = self.peek()
        if ch == "'":
            self.pos += 1
            out = []
            while self.pos < len(self.text):
                ch = self.text[self.pos]
                if ch == "\\":
                    escape = self.text[self.pos + 1 : self.pos + 2]
                    if escape not in ("\\", "'"):
                        raise self.error(f"unsupported escape \\{escape}")
                    out.append(escape)
                    self.pos += 2
                    continue
                if ch == "'":
                    self.pos += 1
                    return "".join(out)
                out.append(ch)
                self.pos += 1
            raise self.error("unterminated string literal")
        if self.text.startswith("true", self.pos):
            self.pos += 4
            return True
        if self.text.startswith("false", self.pos):
            self.pos += 5
            return False
        start = self.pos
        if ch == "-":
            self.pos += 1
        digits = False
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
            digits = True
        if not digits:
            raise self.error(f"expected a literal at column {start + 1}")
        is_float = False
        if self.peek() == ".":
            is_float = True
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
        if self.peek() in ("e", "E"):
            is_float = True
            self.pos += 1
            if self.peek() in ("+", "-"):
                self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
        token = self.text[start:self.pos]
        return float(token) if is_float else int(token)

    def property_map(self) -> dict:
        self.expect("{")
        props: dict = {}
        if self.take("}"):
            return props
        while True:
            key = self.name()
            if key in props:
                raise self.error(f"duplicate property key {key!r}")
            self.expect(":")
            props[key] = self.literal()
            if self.take("}"):
                return props
            self.expect(",")


class _Builder:
    def __init__(self):
        self.node_order: list = []
        self.node_label: dict = {}
        self.node_props: dict = {}
        self.rels: list = []
        self.rel_vars: set = set()

    def see_node(self, scanner, var, label, props) -> None:
        if var in self.rel_vars:
            raise scanner.error(f"{var!r} is already a relationship variable")
        if var not in self.node_label:
            self.node_order.append(var)
            self.node_label[var] = label
            self.node_props[var] = props
            return
        if label is not None and self.node_label[var] not in (None, label):
            raise scanner.error(f"conflicting labels for {var!r}")
        if label is not None:
            self.node_label[var] = label
        for key, value in props.items():
            if key in self.node_props[var] and self.node_props[var][key] != value:
                raise scanner.error(f"conflicting property {key!r} for {var!r}")
            self.node_props[var][key] = value

    def see_rel(self, scanner, var, rel_type, props, source, target, directed) -> None:
        if var in self.rel_vars or var in self.node_label:
            raise scanner.error(f"duplicate variable {var!r}")
        self.rel_vars.add(var)
        self.rels.append((var, rel_type, props, source, target, directed))

    def graph(self) -> QueryGraph:
        graph = QueryGraph()
        for var in self.node_order:
            graph.add_node(
                QueryNode(id=var, label=self.node_label[var], properties=self.node_props[var])
            )
        for var, rel_type, props, source, target, directed in self.rels:
            graph.add_relation(
                QueryRelation(
                    id=var,
                    source=source,
                    target=target,
                    type=rel_type,
                    directed=directed,
                    properties=props,
                )
            )
        return graph


def _parse_node_term(scanner: _Scanner, builder: _Builder) -> str:
    scanner.expect("(")
    var = scanner.name()
    label = None
    if scanner.take(":"):
        label = scanner.name()
    props: dict = {}
    scanner.skip_ws()
    if scanner.peek() == "{":
        props = scanner.property_map()
    scanner.expect(")")
    builder.see_node(scanner, var, label, props)
    return var


def _parse_match(scanner: _Scanner, builder: _Builder) -> None:
    source = _parse_node_term(scanner, builder)
    scanner.skip_ws()
    if scanner.at_end():
        return
    scanner.expect("-")
    scanner.expect("[")
    var = scanner.name()
    rel_type = None
    if scanner.take(":"):
        rel_type = scanner.name()
    props: dict = {}
    scanner.skip_ws()
    if scanner.peek() == "{":
        props = scanner.property_map()
    scanner.expect("]")
    scanner.expect("-")
    directed = scanner.take(">")
    target = _parse_node_term(scanner, builder)
    builder.see_rel(scanner, var, rel_type, props, source, target, directed)
    if not scanner.at_end():
        raise scanner.error("one pattern per MATCH line")


def _parse_where(scanner: _Scanner, parsed: ParsedQuery, known: set) -> None:
    while True:
        if scanner.take("id("):
            left = scanner.name()
            scanner.expect(")")
            scanner.expect("<>")
            scanner.expect("id(")
            right = scanner.name()
            scanner.expect(")")
            for var in (left, right):
                if var not in known:
                    raise scanner.error(f"unknown variable {var!r}")
            parsed.inequalities.append((left, right))
        else:
            var = scanner.name()
            if var not in known:
                raise scanner.error(f"unknown variable {var!r}")
            scanner.expect(".")
            key = scanner.name()
            scanner.expect("=")
            parsed.equalities.append((var, key, scanner.literal()))
        if scanner.at_end():
            return
        scanner.expect("AND")


def _parse_return(scanner: _Scanner, parsed: ParsedQuery, known: set) -> None:
    while True:
        if scanner.take("id("):
            var = scanner.name()
            scanner.expect(")")
            scanner.expect("AS")
            alias = scanner.name()
            item = ReturnItem(variable=var, alias=alias, identity=True)
        else:
            var = scanner.name()
            alias = scanner.name() if scanner.take("AS") else var
            item = ReturnItem(variable=var, alias=alias, identity=False)
        if item.variable not in known:
            raise scanner.error(f"unknown variable {item.variable!r}")
        if any(existing.alias == item.alias for existing in parsed.returns):
            raise scanner.error(f"duplicate output name {item.alias!r}")
        parsed.returns.append(item)
        if scanner.at_end():
            return
        scanner.expect(",")


def parse(text: str) -> ParsedQuery:
    builder = _Builder()
    parsed = ParsedQuery(graph=QueryGraph())
    stage = "match"
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("MATCH "):
            if stage != "match":
                raise CypherSyntaxError(f"line {line_no}: MATCH after {stage.upper()}")
            _parse_match(_Scanner(line[len("MATCH "):], line_no), builder)
        elif line.startswith("WHERE "):
            if stage != "match":
                raise CypherSyntaxError(f"line {line_no}: unexpected WHERE")
            stage = "where"
            parsed.graph = builder.graph()
            known = parsed.node_vars | parsed.rel_vars
            scanner = _Scanner(line[len("WHERE "):], line_no)
            _parse_where(scanner, parsed, known)
        elif line.startswith("RETURN "):
            if stage == "return":
                raise CypherSyntaxError(f"line {line_no}: duplicate RETURN")
            if stage == "match":
                parsed.graph = builder.graph()
            stage = "return"
            known = parsed.node_vars | parsed.rel_vars
            scanner = _Scanner(line[len("RETURN "):], line_no)
            _parse_return(scanner, parsed, known)
        else:
            raise CypherSyntaxError(f"line {line_no}: unsupported statement {line.split(' ')[0]!r}")
    if stage != "return":
        raise CypherSyntaxError("statement has no RETURN clause")
    if not parsed.graph.qnodes:
        raise CypherSyntaxError("statement matches no nodes")
    return parsed
