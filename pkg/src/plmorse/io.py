"""Reading and writing complexes, gradient fields and analysis reports.

Two input formats are understood:

* JSON: ``{"maximal_simplices": [[...], ...], "values": [...]}`` with
  optional ``name`` and ``dimension`` keys;
* ASCII OFF triangle meshes plus a sidecar file with one value per vertex.

Documents are normalised on parsing: vertex ids that occur in some simplex
are renumbered densely in increasing order and the values follow them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .correspond import CorrespondenceMap
from .errors import ParseError
from .gvf import GradientField, MorseProfile, RPCertificate, WeakMorseReport
from .plcrit import ClassificationReport, Kind
from .simplicial import SimplicialComplex, VertexScalarField, build_complex


@dataclass
class ComplexDocument:
    maximal_simplices: list[tuple[int, ...]]
    values: list[float]
    name: str | None = None
    dimension: int | None = None
    coordinates: list[tuple[float, ...]] | None = dc_field(default=None, compare=False)

    def complex(self) -> SimplicialComplex:
        return build_complex(self.maximal_simplices)

    def field(self) -> VertexScalarField:
        return VertexScalarField(dict(enumerate(self.values)))

    def normalized(self) -> "ComplexDocument":
        used = sorted({v for s in self.maximal_simplices for v in s})
        if used and used[-1] >= len(self.values):
            raise ParseError(f"vertex {used[-1]} has no value ({len(self.values)} values given)")
        remap = {v: i for i, v in enumerate(used)}
        simplices = sorted(tuple(sorted(remap[v] for v in s)) for s in self.maximal_simplices)
        coords = None
        if self.coordinates is not None:
            coords = [self.coordinates[v] for v in used]
        return ComplexDocument(simplices, [float(self.values[v]) for v in used], self.name, self.dimension, coords)


def _detect(path: Path) -> str:
    return "off" if path.suffix.lower() == ".off" else "json"


def parse_json(text: str) -> ComplexDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict) or "maximal_simplices" not in data or "values" not in data:
        raise ParseError("expected an object with 'maximal_simplices' and 'values'")
    simplices = []
    for s in data["maximal_simplices"]:
        if not isinstance(s, list) or not s or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in s):
            raise ParseError(f"bad simplex {s!r}")
        if len(set(s)) != len(s):
            raise ParseError(f"duplicate vertex in simplex {s!r}")
        simplices.append(tuple(s))
    try:
        values = [float(x) for x in data["values"]]
    except (TypeError, ValueError):
        raise ParseError("values must be numbers") from None
    coords = data.get("coordinates")
    return ComplexDocument(
        simplices, values, data.get("name"), data.get("dimension"),
        [tuple(map(float, c)) for c in coords] if coords is not None else None,
    ).normalized()


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_off(text: str, values_text: str | None) -> ComplexDocument:
    lines = list(_content_lines(text))
    if not lines or not lines[0][1][0].upper().endswith("OFF"):
        raise ParseError("missing OFF header", lines[0][0] if lines else 1)
    header_no, header = lines[0]
    rest = lines[1:]
    counts = header[1:]
    if not counts:
        if not rest:
            raise ParseError("missing vertex/face counts", header_no)
        header_no, counts = rest[0]
        rest = rest[1:]
    try:
        nv, nf = int(counts[0]), int(counts[1])
    except (IndexError, ValueError):
        raise ParseError("malformed vertex/face counts", header_no) from None
    if len(rest) < nv + nf:
        raise ParseError(f"expected {nv} vertices and {nf} faces, file ends early", rest[-1][0] if rest else header_no)
    coords = []
    for no, tok in rest[:nv]:
        try:
            coords.append(tuple(float(x) for x in tok[:3]))
        except ValueError:
            raise ParseError("malformed vertex coordinates", no) from None
        if len(coords[-1]) != 3:
            raise ParseError("vertex needs three coordinates", no)
    faces = []
    for no, tok in rest[nv:nv + nf]:
        try:
            k = int(tok[0])
            ids = [int(x) for x in tok[1:1 + k]]
        except ValueError:
            raise ParseError("malformed face", no) from None
        if k != 3 or len(ids) != 3:
            raise ParseError(f"only triangles are supported, got a {k}-gon", no)
        if any(i < 0 or i >= nv for i in ids) or len(set(ids)) != 3:
            raise ParseError(f"bad vertex index in face {ids}", no)
        faces.append(tuple(ids))
    if values_text is None:
        raise ParseError("OFF input needs a values file")
    values = []
    for no, tok in _content_lines(values_text):
        try:
            values.append(float(tok[0]))
        except ValueError:
            raise ParseError(f"not a number: {tok[0]!r}", no) from None
    if len(values) != nv:
        raise ParseError(f"values file has {len(values)} entries for {nv} vertices")
    return ComplexDocument(faces, values, None, 2, coords).normalized()


def parse_complex(data: bytes | str, format: str = "json", values: bytes | str | None = None) -> ComplexDocument:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if format == "json":
        return parse_json(text)
    if format == "off":
        vtext = values.decode("utf-8") if isinstance(values, bytes) else values
        return parse_off(text, vtext)
    raise ParseError(f"unknown format {format!r}")


def load_complex(path: str | Path, format: str | None = None, values_path: str | Path | None = None) -> ComplexDocument:
    path = Path(path)
    fmt = format or _detect(path)
    values = None
    if fmt == "off":
        vpath = Path(values_path) if values_path else path.with_suffix(".vals")
        if not vpath.exists():
            raise ParseError(f"values file {vpath} not found")
        values = vpath.read_text(encoding="utf-8")
    doc = parse_complex(path.read_bytes(), fmt, values)
    if doc.name is None:
        doc.name = path.stem
    return doc


def dump_document(doc: ComplexDocument) -> bytes:
    out: dict = {"maximal_simplices": [list(s) for s in doc.maximal_simplices], "values": doc.values}
    if doc.name is not None:
        out["name"] = doc.name
    if doc.dimension is not None:
        out["dimension"] = doc.dimension
    if doc.coordinates is not None:
        out["coordinates"] = [list(c) for c in doc.coordinates]
    return (json.dumps(out, sort_keys=True, indent=2) + "\n").encode("utf-8")


# -- gradient fields ------------------------------------------------------

def dump_field(V: GradientField) -> bytes:
    """One ``[tail, head]`` pair per line."""
    rows = ",\n".join("  " + json.dumps([list(a), list(b)]) for a, b in V.pairs)
    body = "[\n" + rows + "\n]" if rows else "[]"
    return ('{"pairs": ' + body + "}\n").encode("utf-8")


def parse_field(data: bytes | str) -> GradientField:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    pairs = obj.get("pairs") if isinstance(obj, dict) else obj
    if not isinstance(pairs, list):
        raise ParseError("expected a list of [tail, head] pairs")
    out = []
    for p in pairs:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, list) and x for x in p)):
            raise ParseError(f"bad pair {p!r}")
        out.append((tuple(sorted(p[0])), tuple(sorted(p[1]))))
    return GradientField(out)


# -- reports --------------------------------------------------------------

def classification_json(report: ClassificationReport) -> dict:
    vertices = []
    for v, results in report.per_vertex.items():
        vertices.append({
            "vertex": v,
            "classifications": {
                s.value: {
                    "kind": c.kind.value,
                    "multiplicities": {str(i): k for i, k in sorted(c.multiplicities.items())},
                    "simple": c.simple,
                }
                for s, c in results.items()
            },
        })
    return {
        "dimension": report.dim,
        "agreement": report.agree,
        "disagreements": report.disagreements,
        "pl_morse": report.is_pl_morse(),
        "critical_vertices": [c.vertex for c in report.critical()],
        "skipped": report.skipped,
        "vertices": vertices,
    }


def field_json(V: GradientField, profile: MorseProfile, K: SimplicialComplex) -> dict:
    return {
        "pairs": len(V),
        "m": list(profile.m),
        "critical": [list(s) for s in V.critical(K)],
        "per_level": [
            {"level": key[0], "vertex": key[1], "m": list(m)}
            for key, m in profile.per_level.items() if any(m)
        ],
    }


def certificate_json(cert: RPCertificate) -> dict:
    return {
        "relatively_perfect": cert.is_rp,
        "mismatches": [
            {"level": x.level, "vertex": x.vertex, "index": x.index, "m": x.m, "beta": x.beta}
            for x in cert.mismatches
        ],
        "route_disagreements": cert.route_disagreements,
    }


def weak_morse_json(rep: WeakMorseReport) -> dict:
    return {"m": list(rep.m), "betti": list(rep.betti), "slack": list(rep.slack), "perfect": rep.perfect}


def correspondence_json(cmap: CorrespondenceMap) -> dict:
    return {
        "entries": [
            {
                "vertex": e.vertex,
                "level": e.level,
                "index": e.index,
                "multiplicity": e.multiplicity,
                "matched": [list(s) for s in e.matched],
                "surplus": e.surplus,
                "deficit": e.deficit,
            }
            for e in cmap.entries
        ],
        "unmatched": [{"vertex": v, "simplex": list(s)} for v, s in cmap.unmatched],
        "exact": cmap.exact,
        "bijective": cmap.bijective,
        "relatively_perfect": cmap.relatively_perfect,
    }


def emit_report(report: dict) -> bytes:
    """Serialise a report with stable key order."""
    return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode("utf-8")


# -- colored export -------------------------------------------------------

COLORS = {
    Kind.MINIMUM: (0, 0, 255),
    Kind.SADDLE: (0, 255, 0),
    Kind.MAXIMUM: (255, 0, 0),
    Kind.REGULAR: (128, 128, 128),
}


def export_colored_mesh(doc: ComplexDocument, report: ClassificationReport, V: GradientField | None = None) -> bytes:
    """Colour vertices by PL type; with ``V``, colour critical triangles red.

    Documents with coordinates and only triangles come out as COFF-style OFF
    (RGBA per vertex and per face). Others are written as JSON adjacency.
    """
    K = doc.complex()
    crit_tris = set(s for s in V.critical(K) if len(s) == 3) if V is not None else set()
    kinds = {v: report.primary(v).kind for v in report.per_vertex}
    kinds.update((v, Kind.REGULAR) for v in report.skipped)
    tris_only = all(len(s) == 3 for s in doc.maximal_simplices)
    if doc.coordinates is not None and tris_only and K.dim == 2:
        lines = ["COFF", f"{len(doc.coordinates)} {len(doc.maximal_simplices)} {K.count(1)}"]
        for v, xyz in enumerate(doc.coordinates):
            r, g, b = COLORS[kinds.get(v, Kind.REGULAR)]
            lines.append(" ".join(f"{x:g}" for x in xyz) + f" {r} {g} {b} 255")
        for t in doc.maximal_simplices:
            r, g, b = COLORS[Kind.MAXIMUM] if t in crit_tris else COLORS[Kind.REGULAR]
            lines.append(f"3 {t[0]} {t[1]} {t[2]} {r} {g} {b} 255")
        return ("\n".join(lines) + "\n").encode("ascii")
    out = {
        "vertices": [
            {"vertex": v, "value": doc.values[v], "kind": kinds[v].value, "color": list(COLORS[kinds[v]])}
            for v in sorted(kinds)
        ],
        "edges": [list(e) for e in K.simplices(1)],
        "maximal_simplices": [list(s) for s in doc.maximal_simplices],
        "critical_triangles": sorted(list(t) for t in crit_tris),
    }
    return emit_report(out)
