"""Text formats for matroids and graphs.

Matroid file (``#`` starts a comment, blank lines are ignored)::

    name F7
    kind linear            # linear | graph | bond | circuits
    size 7
    field 2                # linear only
    labels a b c d e f g   # optional
    rows 3                 # linear: this many lines of `size` digits follow
    1 0 0 1 1 0 1
    0 1 0 1 0 1 1
    0 0 1 0 1 1 1

Graph-backed kinds use ``vertices V`` followed by ``size`` lines ``u v``; the
circuits kind uses ``circuits C`` followed by C lines of element indices.

Graph file: first line is the vertex count, then one edge per line as two
vertex indices.

Single-line encodings (used inside reports so witnesses can be re-checked)::

    L<p>:<n>:<row>/<row>/...   e.g. L2:3:110/011
    G:<v>:<u>-<w>,...          cycle matroid
    B:<v>:<u>-<w>,...          bond matroid
    C:<n>:<hex>,...            circuit masks
"""

from __future__ import annotations

from .field import FieldError, FieldMatrix
from .graphs import GraphError, MultiGraph
from .matroid import Matroid, MatroidError, members


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class _Lines:
    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), 1):
            body = raw.split("#", 1)[0]
            if body.strip():
                self.items.append((no, body))
        self.i = 0

    def next(self, what: str):
        if self.i >= len(self.items):
            raise ParseError(f"unexpected end of input, expected {what}")
        item = self.items[self.i]
        self.i += 1
        return item

    def done(self) -> bool:
        return self.i >= len(self.items)


def _ints(no: int, body: str, what: str) -> list[int]:
    out = []
    col = 0
    for tok in body.split():
        col = body.index(tok, col) + 1
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer in {what}, got {tok!r}", no, col) from None
        col += len(tok) - 1
    return out


def parse_matroid(text: str) -> Matroid:
    lines = _Lines(text)
    header: dict[str, tuple[int, str]] = {}
    m = None
    while not lines.done():
        no, body = lines.next("a header")
        key, _, value = body.strip().partition(" ")
        value = value.strip()
        if key in ("name", "kind", "size", "field", "labels"):
            if key in header:
                raise ParseError(f"duplicate {key!r} line", no, 1)
            header[key] = (no, value)
        elif key in ("rows", "vertices", "circuits"):
            m = _payload(key, no, value, header, lines)
            if not lines.done():
                extra_no, _ = lines.next("")
                raise ParseError("unexpected content after the payload", extra_no, 1)
        else:
            raise ParseError(f"unknown keyword {key!r}", no, 1)
    if m is None:
        raise ParseError("missing payload section (rows, vertices or circuits)")
    return m


def _header_int(header, key) -> int:
    if key not in header:
        raise ParseError(f"missing {key!r} line")
    no, value = header[key]
    vals = _ints(no, value, key)
    if len(vals) != 1 or vals[0] < 0:
        raise ParseError(f"{key} must be one non-negative integer", no, len(key) + 2)
    return vals[0]


def _payload(section: str, no: int, value: str, header, lines: _Lines) -> Matroid:
    if "kind" not in header:
        raise ParseError("missing 'kind' line before the payload", no, 1)
    kind_no, kind = header["kind"]
    expected = {"linear": "rows", "graph": "vertices", "bond": "vertices", "circuits": "circuits"}
    if kind not in expected:
        raise ParseError(f"unknown kind {kind!r}", kind_no, 6)
    if expected[kind] != section:
        raise ParseError(f"kind {kind} expects a {expected[kind]!r} section", no, 1)
    n = _header_int(header, "size")
    name = header.get("name", (0, ""))[1]
    labels = None
    if "labels" in header:
        lab_no, lab = header["labels"]
        labels = lab.split()
        if len(labels) != n:
            raise ParseError(f"{len(labels)} labels for {n} elements", lab_no, 1)
    count = _ints(no, value, section)
    if len(count) != 1 or count[0] < 0:
        raise ParseError(f"{section} needs one non-negative count", no, len(section) + 2)
    count = count[0]
    try:
        if kind == "linear":
            p = _header_int(header, "field")
            rows = []
            for _ in range(count):
                rno, body = lines.next("a matrix row")
                row = _ints(rno, body, "matrix row")
                if len(row) != n:
                    raise ParseError(f"matrix row has {len(row)} entries, expected {n}", rno, 1)
                for j, a in enumerate(row):
                    if not 0 <= a < p:
                        raise ParseError(f"entry {a} is not in GF({p})", rno, 2 * j + 1)
                rows.append(tuple(row))
            mat = FieldMatrix(_field(p, header), count, n, tuple(rows))
            return Matroid.from_matrix(mat, labels, name)
        if kind in ("graph", "bond"):
            edges = []
            for _ in range(n):
                eno, body = lines.next("an edge")
                uv = _ints(eno, body, "edge")
                if len(uv) != 2:
                    raise ParseError("an edge is two vertex indices", eno, 1)
                if not all(0 <= x < count for x in uv):
                    raise ParseError(f"edge endpoint outside 0..{count - 1}", eno, 1)
                edges.append(tuple(uv))
            g = MultiGraph.of(count, edges)
            if kind == "graph":
                return Matroid.from_graph(g, labels, name)
            return Matroid.from_bond(g, labels, name)
        circ = []
        for _ in range(count):
            cno, body = lines.next("a circuit")
            elems = _ints(cno, body, "circuit")
            for x in elems:
                if not 0 <= x < n:
                    raise ParseError(f"element {x} outside 0..{n - 1}", cno, 1)
            if len(set(elems)) != len(elems):
                raise ParseError("repeated element in circuit", cno, 1)
            circ.append(elems)
        return Matroid.from_circuits(n, circ, labels, name)
    except (MatroidError, FieldError, GraphError) as err:
        raise ParseError(f"invalid matroid: {err}", no, 1) from err


def _field(p: int, header):
    from .field import PrimeField

    try:
        return PrimeField(p)
    except FieldError as err:
        raise ParseError(str(err), header["field"][0], 7) from err


def serialize_matroid(m: Matroid) -> str:
    out = []
    if m.name:
        out.append(f"name {m.name.replace(' ', '_')}")
    kind = {"graphic": "graph"}.get(m.kind, m.kind)
    out.append(f"kind {kind}")
    out.append(f"size {m.n}")
    if m.kind == "linear":
        out.append(f"field {m.payload.field.p}")
    if m.labels != tuple(str(i) for i in range(m.n)):
        out.append("labels " + " ".join(m.labels))
    if m.kind == "linear":
        out.append(f"rows {m.payload.rows}")
        out.extend(" ".join(str(a) for a in row) for row in m.payload.entries)
    elif m.kind in ("graphic", "bond"):
        out.append(f"vertices {m.payload.vertices}")
        out.extend(f"{u} {v}" for u, v in m.payload.edges)
    else:
        out.append(f"circuits {len(m.payload)}")
        out.extend(" ".join(str(e) for e in members(c)) for c in m.payload)
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> MultiGraph:
    lines = _Lines(text)
    no, body = lines.next("the vertex count")
    vals = _ints(no, body, "vertex count")
    if len(vals) != 1 or vals[0] < 0:
        raise ParseError("first line must be the vertex count", no, 1)
    nv = vals[0]
    edges = []
    while not lines.done():
        eno, body = lines.next("an edge")
        uv = _ints(eno, body, "edge")
        if len(uv) != 2:
            raise ParseError("an edge is two vertex indices", eno, 1)
        if not all(0 <= x < nv for x in uv):
            raise ParseError(f"edge endpoint outside 0..{nv - 1}", eno, 1)
        edges.append(tuple(uv))
    return MultiGraph.of(nv, edges)


def serialize_graph(g: MultiGraph) -> str:
    return "\n".join([str(g.vertices)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


# -- one-line encodings -----------------------------------------------------------

def encode_matroid(m: Matroid) -> str:
    if m.kind == "linear":
        rows = "/".join("".join(str(a) for a in row) for row in m.payload.entries)
        return f"L{m.payload.field.p}:{m.n}:{rows}"
    if m.kind in ("graphic", "bond"):
        tag = "G" if m.kind == "graphic" else "B"
        edges = ",".join(f"{u}-{v}" for u, v in m.payload.edges)
        return f"{tag}:{m.payload.vertices}:{edges}"
    return f"C:{m.n}:" + ",".join(format(c, "x") for c in m.payload)


def decode_matroid(text: str) -> Matroid:
    try:
        tag, size, body = text.split(":", 2)
        if tag.startswith("L"):
            p, n = int(tag[1:]), int(size)
            rows = [[int(ch) for ch in row] for row in body.split("/")] if body else []
            return Matroid.from_matrix(FieldMatrix.from_rows(rows, p, cols=n))
        if tag in ("G", "B"):
            edges = [tuple(int(x) for x in e.split("-")) for e in body.split(",")] if body else []
            g = MultiGraph.of(int(size), edges)
            return Matroid.from_graph(g) if tag == "G" else Matroid.from_bond(g)
        if tag == "C":
            circ = [int(x, 16) for x in body.split(",")] if body else []
            return Matroid.from_circuits(int(size), circ)
    except (ValueError, MatroidError) as err:
        raise ParseError(f"bad matroid encoding {text!r}: {err}") from err
    raise ParseError(f"unknown matroid encoding tag in {text!r}")
