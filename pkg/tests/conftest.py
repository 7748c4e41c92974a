import hypothesis.strategies as st
from hypothesis import settings

from antiramsey.multipartite import build_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE: list[tuple[str, bool, str]] = []


@st.composite
def graphs(draw, max_part=4, min_k=2, max_k=4):
    return build_graph(draw(st.lists(st.integers(1, max_part), min_size=min_k, max_size=max_k)))


@st.composite
def graph_and_counts(draw, **kw):
    g = draw(graphs(**kw))
    counts = tuple(draw(st.integers(0, p)) for p in g.parts)
    return g, counts


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
