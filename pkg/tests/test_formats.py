import pathlib

import pytest

from colorbalance import balance, families, formats, graph, reduction
from colorbalance.balance import BalanceCertificate, BalanceKind
from colorbalance.color_degree import MatrixInputError, compute_cdm
from colorbalance.graph import ColoredGraph, Coloring, GraphInputError
from colorbalance.switching import TwoSwitch


data_path = pathlib.Path("tests", "data")


def test_cgf_is_rendered_canonically():
    text = """
    # a triangle with a pendant vertex
    cgf 1
    n 4
    k 2
    colors 1 2 2 1   # last one is red

    edge 3 1
    edge 2  1
    edge 4 3
    edge 2 3
    """
    assert formats.render_cgf(formats.parse_cgf(text)) == (
        "cgf 1\nn 4\nk 2\ncolors 1 2 2 1\n"
        "edge 1 2\nedge 1 3\nedge 2 3\nedge 3 4\n"
    )


def test_cgf_with_no_edges():
    cg = formats.parse_cgf("cgf 1\nn 0\nk 2\ncolors\n")
    assert cg.n == 0
    assert formats.render_cgf(cg) == "cgf 1\nn 0\nk 2\ncolors\n"


@pytest.mark.parametrize(
    "text, message",
    [
        ("graph\n", "line 1: expected 'cgf 1'"),
        ("cgf 2\n", "line 1: unsupported cgf version 2"),
        ("cgf 1\nn 2\n", "end of input: missing the 'k' line"),
        ("cgf 1\nk 2\n", "line 2: expected 'n <int>'"),
        ("cgf 1\nn 2\nk 0\ncolors 1 1\n", "line 3: k must be at least 1"),
        ("cgf 1\nn 2\nk 2\ncolors 1\n", "line 4: 1 colors given for n=2"),
        ("cgf 1\nn 2\nk 2\ncolors 1 3\n", "line 4: color 3 of vertex 2"),
        ("cgf 1\nn 2\nk 2\ncolors 1 2\nedge 1 3\n", "line 5: vertex 3 is outside"),
        (
            "cgf 1\nn 2\nk 2\ncolors 1 2\nedge 1 2\nedge 2 1\n",
            "line 6: duplicate edge 1 2",
        ),
        ("cgf 1\nn 2\nk 2\ncolors 1 2\nedge 1\n", "line 5: expected 'edge u v'"),
    ],
)
def test_cgf_errors(text, message):
    with pytest.raises(formats.CgfParseError) as e:
        formats.parse_cgf(text)
    assert str(e.value).startswith(message)


def test_cgf_self_loop_reports_its_line():
    with pytest.raises(formats.CgfParseError, match="self-loop") as e:
        formats.parse_cgf((data_path / "self_loop.cgf").read_text())
    assert e.value.line == 5


def test_cdm_documents(load_cgf):
    m = formats.parse_cdm((data_path / "house_b.cdm").read_text())
    assert m == compute_cdm(load_cgf("house_b"))
    assert formats.render_cdm(m) == "1 1 2\n1 2 1\n1 1 1\n1 1 2\n1 2 2\n"
    assert formats.render_cdm(m, letters=True).splitlines()[:2] == ["1 1 B", "1 2 R"]


def test_cdm_letters_need_a_small_palette(load_cgf):
    assert formats.render_cdm(compute_cdm(load_cgf("petersen")), letters=True)
    m = compute_cdm(load_cgf("house_a"), k=4)
    with pytest.raises(MatrixInputError, match="k <= 3"):
        formats.render_cdm(m, letters=True)


@pytest.mark.parametrize(
    "text, message",
    [
        ("1 1 2\n1 x 1\n", "line 2: expected nonnegative integers"),
        ("1 1 2\n1 1\n", "line 2: row has 2 entries, expected 3"),
        ("2\n", "line 1: a row needs degrees"),
    ],
)
def test_cdm_errors(text, message):
    with pytest.raises(formats.CgfParseError) as e:
        formats.parse_cdm(text)
    assert str(e.value).startswith(message)


def test_switch_documents():
    text = (data_path / "house_b_to_switched_b.switches").read_text()
    switches = formats.parse_switches(text)
    assert switches == [TwoSwitch(1, 4, 2, 3)]
    assert formats.render_switches(switches) == "2 5 3 4\n"
    assert formats.render_switches([]) == ""

    with pytest.raises(formats.CgfParseError, match="numbered from 1"):
        formats.parse_switches("0 1 2 3\n")
    with pytest.raises(formats.CgfParseError, match="line 2"):
        formats.parse_switches("1 2 3 4\n1 2 3\n")


def test_certificate_rendering():
    witness = Coloring((1, 2, 2, 1), 2)
    found = BalanceCertificate(2, BalanceKind.OPEN, 2, witness, exhausted=True)
    assert formats.render_certificate(found) == "2\nkind open\nwitness 1 2 2 1\n"

    refuted = BalanceCertificate(0, BalanceKind.CLOSED, 2, exhausted=True)
    assert formats.render_certificate(refuted) == "0\nkind closed\nexhausted 0\n"


def test_class_report_rendering():
    text = formats.render_class_report(families.classify_path(2))
    lines = text.splitlines()
    assert lines[0] == "# source: path"
    assert lines[1].startswith("NBC no  # an endpoint")
    assert lines[2] == "CNBC yes witness 1 2"
    assert len(lines) == 7


def test_trace_rendering(load_cgf):
    trace = reduction.red_blue_reduce(load_cgf("k333_reducible"))
    assert formats.render_trace(trace) == (
        "remove 1 3\nremove 4 6\nremove 7 8\n"
        "cgf 1\nn 3\nk 2\ncolors 1 1 2\nedge 1 2\nedge 1 3\nedge 2 3\n"
    )


def test_family_shorthand():
    assert formats.split_family("complete_multipartite:3,3,3") == (
        "complete_multipartite",
        (3, 3, 3),
    )
    assert formats.split_family(" petersen ") == ("petersen", ())
    assert formats.parse_family("wheel:5") == graph.wheel(5)

    for text in ("wheel:", "wheel:a", "Wheel:5", "wheel:5,"):
        with pytest.raises(GraphInputError, match="shorthand"):
            formats.split_family(text)
    with pytest.raises(GraphInputError, match="unknown family"):
        formats.parse_family("hypercube:3")
    with pytest.raises(GraphInputError, match="takes 1 parameter"):
        formats.parse_family("wheel:5,6")


def test_json_ready_documents(load_cgf):
    k2 = ColoredGraph(graph.complete(2), Coloring((1, 2), 2))
    assert formats.to_json_ready(k2, formats.COLORED_GRAPH_SPEC) == {
        "n": 2,
        "k": 2,
        "colors": [1, 2],
        "edges": [[1, 2]],
    }

    refuted = balance.certify(graph.cycle(5), 2, 0, "open")
    assert formats.to_json_ready(refuted, formats.CERTIFICATE_SPEC) == {
        "verdict": 0,
        "kind": "open",
        "k": 2,
        "witness": None,
        "exhausted": True,
    }

    trace = reduction.red_blue_reduce(load_cgf("k333_reducible"))
    ready = formats.to_json_ready(trace, formats.TRACE_SPEC)
    assert ready["removed"] == [[1, 3], [4, 6], [7, 8]]
    assert ready["index_map"] == [2, 5, 9]
    assert ready["result"]["colors"] == [1, 1, 2]

    report = formats.to_json_ready(families.classify_path(2), formats.CLASS_REPORT_SPEC)
    assert report["source"] == "path"
    assert [c["class"] for c in report["classes"]] == [
        "NBC",
        "CNBC",
        "OSB",
        "CSB",
        "SBV",
        "PB",
    ]
    assert report["classes"][0]["witness"] is None
    assert report["classes"][1] == {
        "class": "CNBC",
        "member": True,
        "witness": [1, 2],
        "reason": None,
    }
