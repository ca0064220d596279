"""
Text formats read and written by the command line, and the
[Glom](https://glom.readthedocs.io/en/latest/) specs that turn results into
JSON-ready dicts.

Every text format numbers vertices from 1; everything in memory numbers them
from 0. A `#` starts a comment anywhere in an input line.

The colored graph format (CGF) is:

    cgf 1
    n 5
    k 2
    colors 2 1 1 2 2
    edge 1 2
    edge 1 5
    ...

with one `edge u v` line per edge, u < v, sorted. Output is always in this
canonical form; input may list edges in any order and orientation.

"""

from glom import glom, Coalesce, T
import regex

from .color_degree import ColorDegreeMatrix, MatrixInputError
from .graph import ColoredGraph, Coloring, Graph, GraphInputError, make_family
from .switching import TwoSwitch


CGF_VERSION = 1

COLOR_LETTERS = {1: "R", 2: "B", 3: "G"}

header_regex = regex.compile(r"^cgf (?P<version>\d+)$")
count_regex = regex.compile(r"^(?P<key>n|k) (?P<value>\d+)$")
colors_regex = regex.compile(r"^colors(?P<colors>(?: \d+)*)$")
edge_regex = regex.compile(r"^edge (?P<u>\d+) (?P<v>\d+)$")
integers_regex = regex.compile(r"^\d+(?: \d+)*$")
family_regex = regex.compile(r"^(?P<name>[a-z_]+)(?::(?P<params>\d+(?:,\d+)*))?$")


class CgfParseError(ValueError):
    """A malformed input document; `line` is 1-indexed, or None at end of input."""

    def __init__(self, message, line=None):
        location = f"line {line}" if line is not None else "end of input"
        super().__init__(f"{location}: {message}")
        self.line = line


def parse_cgf(text):
    lines = iter(_content_lines(text))

    line_no, line = _next_line(lines, "the cgf header")
    match = header_regex.match(line)
    if match is None:
        raise CgfParseError(f"expected 'cgf {CGF_VERSION}', got {line!r}", line_no)
    if int(match["version"]) != CGF_VERSION:
        raise CgfParseError(f"unsupported cgf version {match['version']}", line_no)

    _, n = _parse_count(lines, "n")
    line_no, k = _parse_count(lines, "k")
    if k < 1:
        raise CgfParseError("k must be at least 1", line_no)

    line_no, line = _next_line(lines, "the colors line")
    match = colors_regex.match(line)
    if match is None:
        raise CgfParseError(f"expected 'colors ...', got {line!r}", line_no)
    colors = [int(c) for c in match["colors"].split()]
    if len(colors) != n:
        raise CgfParseError(f"{len(colors)} colors given for n={n}", line_no)
    for v, c in enumerate(colors, start=1):
        if not 1 <= c <= k:
            raise CgfParseError(f"color {c} of vertex {v} is outside 1..{k}", line_no)

    edges = []
    seen = set()
    for line_no, line in lines:
        match = edge_regex.match(line)
        if match is None:
            raise CgfParseError(f"expected 'edge u v', got {line!r}", line_no)
        u, v = int(match["u"]), int(match["v"])
        for w in (u, v):
            if not 1 <= w <= n:
                raise CgfParseError(f"vertex {w} is outside 1..{n}", line_no)
        if u == v:
            raise CgfParseError(f"self-loop at vertex {u}", line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise CgfParseError(f"duplicate edge {key[0]} {key[1]}", line_no)
        seen.add(key)
        edges.append((u - 1, v - 1))

    return ColoredGraph(Graph.from_edges(n, edges), Coloring(colors, k))


def render_cgf(cg):
    lines = [
        f"cgf {CGF_VERSION}",
        f"n {cg.n}",
        f"k {cg.k}",
        _join("colors", cg.coloring.colors),
    ]
    lines.extend(f"edge {u + 1} {v + 1}" for u, v in cg.graph.edges())
    return "\n".join(lines) + "\n"


def parse_cdm(text):
    """One row per line: k degree columns followed by the color identifier."""
    rows = []
    for line_no, line in _content_lines(text):
        if integers_regex.match(line) is None:
            raise CgfParseError(f"expected nonnegative integers, got {line!r}", line_no)
        row = tuple(int(x) for x in line.split())
        if rows and len(row) != len(rows[0]):
            raise CgfParseError(
                f"row has {len(row)} entries, expected {len(rows[0])}", line_no
            )
        if len(row) < 2:
            raise CgfParseError("a row needs degrees and an identifier", line_no)
        rows.append(row)
    return ColorDegreeMatrix(tuple(rows))


def render_cdm(m, letters=False):
    if letters and m.k > len(COLOR_LETTERS):
        raise MatrixInputError(f"letters are only defined for k <= 3, got k={m.k}")

    lines = []
    for row in m.rows:
        identifier = COLOR_LETTERS.get(row[-1], str(row[-1])) if letters else row[-1]
        lines.append(" ".join(str(x) for x in (*row[:-1], identifier)))
    return "".join(line + "\n" for line in lines)


def parse_switches(text):
    switches = []
    for line_no, line in _content_lines(text):
        if integers_regex.match(line) is None or len(line.split()) != 4:
            raise CgfParseError(f"expected 'u x w y', got {line!r}", line_no)
        vertices = [int(x) for x in line.split()]
        if 0 in vertices:
            raise CgfParseError("vertices are numbered from 1", line_no)
        switches.append(TwoSwitch(*(v - 1 for v in vertices)))
    return switches


def render_switches(sequence):
    return "".join(" ".join(str(v + 1) for v in s.vertices()) + "\n" for s in sequence)


def render_coloring(coloring):
    return _join("witness", coloring.colors)


def render_certificate(certificate):
    """
    The λ decided, the balance kind, then either the witness coloring or the
    λ that exhaustive search refuted.

    """
    lines = [str(certificate.verdict), f"kind {certificate.kind.value}"]
    if certificate.witness is not None:
        lines.append(render_coloring(certificate.witness))
    else:
        lines.append(f"exhausted {certificate.verdict}")
    return "\n".join(lines) + "\n"


def render_verdict(verdict):
    if verdict.member:
        return f"{verdict.graph_class.value} yes " + render_coloring(verdict.witness)
    return f"{verdict.graph_class.value} no  # {verdict.reason}"


def render_class_report(report):
    lines = [f"# source: {report.source}"]
    lines.extend(render_verdict(v) for v in report.verdicts)
    return "\n".join(lines) + "\n"


def render_trace(trace):
    lines = [f"remove {r + 1} {b + 1}\n" for r, b in trace.removed_pairs]
    return "".join(lines) + render_cgf(trace.result)


def split_family(text):
    """
    Split a family shorthand such as `wheel:7`, `complete_multipartite:3,3,3`
    or `petersen` into its name and integer parameters.

    """
    match = family_regex.match(text.strip())
    if match is None:
        raise GraphInputError(f"cannot read family shorthand {text!r}")
    params = [int(p) for p in match["params"].split(",")] if match["params"] else []
    return match["name"], tuple(params)


def parse_family(text):
    name, params = split_family(text)
    return make_family(name, *params)


COLORED_GRAPH_SPEC = {
    "n": "n",
    "k": "k",
    "colors": ("coloring.colors", list),
    "edges": ("graph", lambda g: [[u + 1, v + 1] for u, v in g.edges()]),
}

CERTIFICATE_SPEC = {
    "verdict": "verdict",
    "kind": ("kind", T.value),
    "k": "k",
    "witness": Coalesce(("witness.colors", list), default=None),
    "exhausted": "exhausted",
}

VERDICT_SPEC = {
    "class": ("graph_class", T.value),
    "member": "member",
    "witness": Coalesce(("witness.colors", list), default=None),
    "reason": "reason",
}

CLASS_REPORT_SPEC = {
    "source": "source",
    "classes": ("verdicts", [VERDICT_SPEC]),
}

TRACE_SPEC = {
    "removed": ("removed_pairs", [lambda pair: [pair[0] + 1, pair[1] + 1]]),
    "index_map": ("index_map", [lambda v: v + 1]),
    "result": ("result", COLORED_GRAPH_SPEC),
}


def to_json_ready(target, spec):
    return glom(target, spec)


def _content_lines(text):
    """(line number, normalized text) for every line with content."""
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = " ".join(line.split("#", 1)[0].split())
        if line:
            yield line_no, line


def _next_line(lines, expected):
    try:
        return next(lines)
    except StopIteration:
        raise CgfParseError(f"missing {expected}")


def _parse_count(lines, key):
    line_no, line = _next_line(lines, f"the '{key}' line")
    match = count_regex.match(line)
    if match is None or match["key"] != key:
        raise CgfParseError(f"expected '{key} <int>', got {line!r}", line_no)
    return line_no, int(match["value"])


def _join(label, values):
    return " ".join([label, *(str(v) for v in values)])
