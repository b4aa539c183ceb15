"""Regenerate the files under fixtures/ from plmorse.fixtures."""

from pathlib import Path

from plmorse import fixtures as fx
from plmorse.gvf import GradientField
from plmorse.io import ComplexDocument, dump_document, dump_field

OUT = Path(__file__).resolve().parent.parent / "fixtures"

# planar layout of the fan, apex lifted above the centre
FAN_XY = {5: (1, 0.5, 0), 2: (0, 0, 0), 1: (0, 1, 0), 7: (1, 2, 0), 3: (2, 1, 0), 8: (2, 0, 0), 6: (1, -1, 0), 9: (1, 0.5, 1)}


def dense(K, f, coords=None, name=None, dimension=None):
    ids = {v: i for i, v in enumerate(K.vertices)}
    doc = ComplexDocument(
        [tuple(ids[v] for v in s) for s in K.maximal_simplices()],
        [f[v] for v in K.vertices],
        name,
        dimension,
        [coords[v] for v in K.vertices] if coords else None,
    )
    return doc, ids


def remap(V, ids):
    return GradientField([(tuple(ids[v] for v in a), tuple(ids[v] for v in b)) for a, b in V.pairs])


def write(name, payload):
    (OUT / name).write_bytes(payload)


def main():
    OUT.mkdir(exist_ok=True)
    K, f = fx.rp2()
    write("rp2_6.json", dump_document(dense(K, f, name="rp2_6", dimension=2)[0]))

    K, f = fx.fan()
    write("fig2_fan.json", dump_document(dense(K, f, FAN_XY, "fig2_fan", 2)[0]))
    K, f = fx.fan_sphere()
    doc, ids = dense(K, f, FAN_XY, "fig2_sphere", 2)
    write("fig2_sphere.json", dump_document(doc))
    write("fig3a_field.json", dump_field(remap(fx.rp_fan_field(), ids)))
    write("fig3c_field.json", dump_field(remap(fx.non_rp_fan_field(), ids)))

    K, f = fx.monkey_saddle()
    write("monkey_saddle.json", dump_document(dense(K, f, name="monkey_saddle", dimension=2)[0]))
    K = fx.torus(7)
    write("torus_7x7.json", dump_document(dense(K, {v: float(v) for v in K.vertices}, name="torus_7x7", dimension=2)[0]))
    K = fx.simplex_boundary(4)
    write("sphere3_5.json", dump_document(dense(K, {v: float(v) for v in K.vertices}, name="sphere3_5", dimension=3)[0]))

    # boundary of the tetrahedron as OFF with a values sidecar
    tet = "OFF\n4 4 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 2 1\n3 0 1 3\n3 0 3 2\n3 1 2 3\n"
    write("tetrahedron.off", tet.encode())
    write("tetrahedron.vals", b"0\n1\n2\n3\n")


if __name__ == "__main__":
    main()
