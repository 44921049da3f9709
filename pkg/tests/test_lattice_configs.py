import pytest

from k3tool.errors import PreconditionError
from k3tool.lattice import (
    CONFIG_NAMES,
    E8,
    H,
    discriminant_form,
    divisor_square,
    double_kummer_lattice,
    e8_sum_vs_d16plus,
    gram_of_classes,
    inose_spans,
    is_isometric,
    named_lattice,
    orthogonal_complement_in,
    roots,
    saturation,
    span_lattice,
    two_classes,
)
from k3tool.lattice import curve_config
from k3tool.lattice.forms import det, signature


@pytest.mark.parametrize("name", CONFIG_NAMES)
def test_fibers_are_isotropic_and_sections_meet_once(name):
    cfg = curve_config(name)
    for fname, fiber in cfg.fibers.items():
        f = cfg.divisor(fiber)
        assert f.square() == 0
        for s in cfg.sections.get(fname, []):
            assert cfg.curve(s).dot(f) == 1
        for label in fiber:
            assert cfg.curve(label).dot(f) == 0


def test_unknown_config():
    with pytest.raises(KeyError):
        curve_config("nope")


@pytest.mark.parametrize("name", ["inose_diag11", "inose_quartic_diag"])
def test_inose_spans_are_e8_e8_h(name):
    spans = inose_spans(curve_config(name))
    for key in ("E8_first", "E8_second"):
        g = gram_of_classes(spans[key])
        assert det(g) == 1 and signature(g) == (0, 8, 0)
    assert gram_of_classes(spans["H"]) == [[-2, 1], [1, 0]]
    everything = spans["E8_first"] + spans["E8_second"] + spans["H"]
    g = gram_of_classes(everything)
    assert det(g) == -1
    assert g[0][8:] == [0] * 10


def test_quartic_labels_are_aliases():
    cfg = curve_config("inose_quartic_diag")
    assert cfg.intersection("a1", "a2") == 1
    assert cfg.intersection("a3", "L1") == 1
    c11 = curve_config("inose_diag11")
    assert cfg.gram == c11.gram


def test_inose_span_lattice_is_m():
    lat = span_lattice(curve_config("inose_diag11")).lattice
    assert lat.rank == 18 and lat.det() == -1 and lat.signature() == (1, 17, 0)


def test_quotient_pieces():
    cfg = curve_config("quotient_diag22_33")
    e8 = gram_of_classes([cfg.curve(c) for c in cfg.spans["E8"]])
    assert det(e8) == 1 and signature(e8) == (0, 8, 0)
    h2 = gram_of_classes([cfg.divisor(cfg.spans["H2"]["first"]), cfg.fiber("II*")])
    assert h2 == [[-4, 2], [2, 0]]
    nik = gram_of_classes([cfg.curve(c) for c in cfg.spans["Nikulin_curves"]])
    assert nik == [[-2 if i == j else 0 for j in range(8)] for i in range(8)]


def test_divisor_square_inputs():
    cfg = curve_config("inose_diag11")
    assert divisor_square(cfg, cfg.fibers["I*12"]) == 0
    assert divisor_square(cfg, cfg.curve("C1")) == -2
    assert divisor_square(cfg, [1] + [0] * (cfg.size - 1)) == -2
    with pytest.raises(PreconditionError):
        divisor_square(cfg, curve_config("quotient_diag22_33").curve("R1"))


def test_double_kummer_lattice():
    dk = double_kummer_lattice()
    lat = dk.lattice
    assert lat.rank == 18 and lat.det() == -16 and lat.signature() == (1, 17, 0)
    assert is_isometric(discriminant_form(lat), discriminant_form(named_lattice("DK_complement")))


def test_two_classes_span_h2_with_kummer_complement():
    cfg = curve_config("double_kummer_pencil")
    h, g = two_classes(cfg)
    assert gram_of_classes([h, g]) == [[0, 2], [2, 0]]
    assert h.square() == 0 and h.dot(g) == 2
    dk = double_kummer_lattice()
    sub = [dk.coordinates(h), dk.coordinates(g)]
    comp = orthogonal_complement_in(dk.lattice, sub)
    assert comp.lattice.rank == 16 and comp.lattice.det() == 64
    assert len(roots(comp.lattice)) == 32
    assert is_isometric(discriminant_form(comp.lattice), discriminant_form(named_lattice("Kummer")))


def test_complement_of_h_in_m():
    m = named_lattice("M")
    comp = orthogonal_complement_in(m, [[1, 0] + [0] * 16, [0, 1] + [0] * 16])
    assert comp.primitive
    assert comp.lattice.det() == 1 and comp.lattice.rank == 16
    assert e8_sum_vs_d16plus(comp.lattice) == "E8+E8"


def test_non_primitive_input_flagged():
    lat = H + E8
    comp = orthogonal_complement_in(lat, [[2, 0] + [0] * 8])
    assert not comp.primitive
    assert list(comp.saturation[0]) in ([1, 0] + [0] * 8, [-1, 0] + [0] * 8)
    with pytest.raises(PreconditionError):
        orthogonal_complement_in(lat, [[1, 0], [0, 1]])


def test_saturation():
    assert saturation([[2, 4]]) in ([[1, 2]], [[-1, -2]])


def test_coordinates_roundtrip():
    cfg = curve_config("quotient_diag22_33")
    sl = span_lattice(cfg)
    f = cfg.fiber("I*6")
    coords = sl.coordinates(f)
    assert sum(c * c for c in coords) > 0
    vec = [0] * sl.lattice.rank
    assert sl.lattice.norm(coords) == 0
    assert sl.lattice.norm(vec) == 0
