"""Generators for the graph families used as extremal examples.

Each generator returns a :class:`Construction`: the graph plus a map from
named vertices (``"u"``, ``"v_2_3"``, ``"x_5"``, ...) to integer labels.

Labeling conventions
--------------------
* ``Gl``/``GlPrime``/``GlDoublePrime``: blocks are laid out left to right
  along the base path.  A 4-cycle block ``i`` holds ``c_i_0..c_i_3`` with
  cycle ``c0-c1-c3-c2-c0``; ``c_i_1`` is the path vertex.  In ``GlPrime`` the
  first block is the 6-vertex gadget ``a..f`` (path vertex ``b``, and
  ``x = d``); in ``GlDoublePrime`` it is the 7-vertex gadget ``x_1..x_6, y``
  (path vertex ``x_5``).
* ``Gkn``/``Hkn``: the ``K_n`` block first, then the ``K_n - e`` copies; in
  copy ``i`` the missing edge joins its first two vertices ``u_i, v_i``.  The
  hub vertices ``u`` (and ``v``) come last.
* Triangle families (``G2l``, ``Gkl``, ``H2l``, ``Hkl``, ``Fkl``): triangle
  ``i`` (1-based) holds ``v_i_1, v_i_2, v_i_3`` at ``3(i-1)..3(i-1)+2``; then
  ``u``, ``v`` and, where present, ``w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, to_edge_list


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class Construction:
    family: str
    params: dict[str, int]
    graph: Graph
    labels: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, name: str) -> int:
        return self.labels[name]

    def edge_list(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        special = " ".join(f"{k}={v}" for k, v in self.labels.items() if not k.startswith(("v_", "c_")))
        comments = [f"family: {self.family}", f"params: {params}"]
        if special:
            comments.append(f"vertices: {special}")
        return to_edge_list(self.graph, comments)


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.labels: dict[str, int] = {}

    def vertex(self, name: str) -> int:
        self.labels[name] = self.n
        self.n += 1
        return self.n - 1

    def edge(self, a: str | int, b: str | int) -> None:
        a = self.labels[a] if isinstance(a, str) else a
        b = self.labels[b] if isinstance(b, str) else b
        self.edges.append((min(a, b), max(a, b)))

    def build(self, family: str, params: dict[str, int]) -> Construction:
        name = family + "(" + ",".join(f"{k}={v}" for k, v in params.items()) + ")"
        g = Graph.from_edges(self.n, sorted(self.edges), name)
        return Construction(family, params, g, dict(self.labels))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def _c4_blocks(b: _Builder, first: int, last: int) -> None:
    for i in range(first, last + 1):
        for j in range(4):
            b.vertex(f"c_{i}_{j}")
        for x, y in ((0, 1), (1, 3), (3, 2), (2, 0)):
            b.edge(f"c_{i}_{x}", f"c_{i}_{y}")


def _path_of_blocks(b: _Builder, head: str, l: int) -> None:
    prev = head
    for i in range(2, l + 1):
        b.edge(prev, f"c_{i}_1")
        prev = f"c_{i}_1"


def gen_Gl(l: int) -> Construction:
    """Path ``P_l`` with a 4-cycle hung on each vertex; order ``4l``."""
    _require(l >= 1, "Gl requires l >= 1")
    b = _Builder()
    _c4_blocks(b, 1, l)
    _path_of_blocks(b, "c_1_1", l)
    return b.build("Gl", {"l": l})


def gen_Gl_prime(l: int) -> Construction:
    """Like ``Gl`` but the first block is a 6-vertex gadget; order ``4l + 2``."""
    _require(l >= 1, "GlPrime requires l >= 1")
    b = _Builder()
    for name in "abcdef":
        b.vertex(name)
    for x, y in ("ab", "ac", "bd", "cd", "ae", "df", "ef"):
        b.edge(x, y)
    b.labels["x"] = b.labels["d"]
    _c4_blocks(b, 2, l)
    _path_of_blocks(b, "b", l)
    return b.build("GlPrime", {"l": l})


def gen_Gl_double_prime(l: int) -> Construction:
    """Like ``Gl`` but the first block is the 7-vertex gadget ``H``; order ``4l + 3``."""
    _require(l >= 1, "GlDoublePrime requires l >= 1")
    b = _Builder()
    for i in range(1, 7):
        b.vertex(f"x_{i}")
    b.vertex("y")
    for x, y in ((2, 5), (2, 3), (2, 6), (5, 1), (3, 1), (6, 1), (2, 4), (3, 4)):
        b.edge(f"x_{x}", f"x_{y}")
    for x in (1, 4, 3):
        b.edge(f"x_{x}", "y")
    _c4_blocks(b, 2, l)
    _path_of_blocks(b, "x_5", l)
    return b.build("GlDoublePrime", {"l": l})


def _clique(b: _Builder, names: list[str], missing: tuple[str, str] | None = None) -> None:
    for i, x in enumerate(names):
        for y in names[i + 1:]:
            if missing is None or {x, y} != set(missing):
                b.edge(x, y)


def _gkn_body(b: _Builder, k: int, n: int) -> list[str]:
    """Cliques of ``G_{k,n}``; returns the vertices joined to the hub(s)."""
    clique = [f"y_{j}" for j in range(1, n + 1)]
    for name in clique:
        b.vertex(name)
    _clique(b, clique)
    hub_nbrs = list(clique)
    for i in range(1, k):
        names = [f"u_{i}", f"v_{i}"] + [f"z_{i}_{j}" for j in range(3, n + 1)]
        for name in names:
            b.vertex(name)
        _clique(b, names, missing=(f"u_{i}", f"v_{i}"))
        hub_nbrs += [f"u_{i}", f"v_{i}"]
    return hub_nbrs


def gen_Gkn(k: int, n: int) -> Construction:
    """``K_n`` plus ``k-1`` copies of ``K_n - e`` joined through a hub ``u``; order ``kn + 1``."""
    _require(k >= 2 and n >= 4, "Gkn requires k >= 2 and n >= 4")
    b = _Builder()
    nbrs = _gkn_body(b, k, n)
    b.vertex("u")
    for x in nbrs:
        b.edge("u", x)
    return b.build("Gkn", {"k": k, "n": n})


def gen_Hkn(k: int, n: int) -> Construction:
    """``G_{k,n}`` with the hub doubled into non-adjacent twins ``u, v``; order ``kn + 2``."""
    _require(k >= 2 and n >= 4, "Hkn requires k >= 2 and n >= 4")
    b = _Builder()
    nbrs = _gkn_body(b, k, n)
    b.vertex("u")
    b.vertex("v")
    for x in nbrs:
        b.edge("u", x)
        b.edge("v", x)
    return b.build("Hkn", {"k": k, "n": n})


def _triangles(b: _Builder, count: int) -> None:
    for i in range(1, count + 1):
        for j in (1, 2, 3):
            b.vertex(f"v_{i}_{j}")
        _clique(b, [f"v_{i}_{j}" for j in (1, 2, 3)])


def _join(b: _Builder, hub: str, triangles: range, slots: tuple[int, ...]) -> None:
    for i in triangles:
        for j in slots:
            b.edge(hub, f"v_{i}_{j}")


def gen_G2l(l: int) -> Construction:
    _require(l >= 3, "G2l requires l >= 3")
    b = _Builder()
    _triangles(b, l - 1)
    b.vertex("u")
    b.vertex("v")
    b.edge("u", "v_1_1")
    b.edge("v", "v_1_1")
    rest = range(2, l)
    _join(b, "u", rest, (1, 2, 3))
    _join(b, "v", rest, (1, 2))
    b.edge("u", "v")
    return b.build("G2l", {"l": l})


def gen_Gkl(k: int, l: int) -> Construction:
    _require(3 <= k <= l, "Gkl requires 3 <= k <= l")
    b = _Builder()
    t = k + l - 2
    _triangles(b, t)
    b.vertex("u")
    b.vertex("v")
    _join(b, "u", range(1, k), (1,))
    _join(b, "u", range(k, t + 1), (1, 2, 3))
    _join(b, "v", range(1, k), (1, 2, 3))
    _join(b, "v", range(k, t + 1), (1, 2))
    return b.build("Gkl", {"k": k, "l": l})


def gen_H2l(l: int) -> Construction:
    _require(l >= 3, "H2l requires l >= 3")
    b = _Builder()
    _triangles(b, l - 1)
    for name in "uvw":
        b.vertex(name)
    for name, idx in b.labels.items():
        if name not in ("v", "w"):
            b.edge("v", name)
        if name not in ("u", "v_1_2", "v_1_3", "v"):
            b.edge("u", name)
    b.edge("w", "v_1_1")
    _join(b, "w", range(2, l), (1, 2))
    return b.build("H2l", {"l": l})


def gen_Hkl(k: int, l: int) -> Construction:
    _require(3 <= k <= l, "Hkl requires 3 <= k <= l")
    b = _Builder()
    t = k + l - 2
    _triangles(b, t)
    for name in "uvw":
        b.vertex(name)
    b.edge("u", "v")
    _join(b, "u", range(1, t + 1), (1,))
    _join(b, "u", range(k, t + 1), (2, 3))
    _join(b, "v", range(1, t + 1), (1, 2))
    _join(b, "v", range(k, t + 1), (3,))
    _join(b, "w", range(1, t + 1), (1, 2))
    _join(b, "w", range(1, k), (3,))
    return b.build("Hkl", {"k": k, "l": l})


def gen_Fkl(k: int, l: int) -> Construction:
    _require(2 <= k <= l, "Fkl requires 2 <= k <= l")
    b = _Builder()
    t = k + l - 2
    _triangles(b, t)
    b.vertex("u")
    b.vertex("v")
    _join(b, "u", range(1, t + 1), (1, 2))
    _join(b, "u", range(k, t + 1), (3,))
    _join(b, "v", range(1, t + 1), (1, 2))
    _join(b, "v", range(1, k), (3,))
    return b.build("Fkl", {"k": k, "l": l})


def gen_basic(family: str, n: int) -> Construction:
    """``Path``, ``Cycle``, ``Complete`` or ``CompleteMinusEdge`` (missing edge ``0 1``)."""
    if family == "Path":
        _require(n >= 1, "Path requires n >= 1")
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "Cycle":
        _require(n >= 3, "Cycle requires n >= 3")
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif family in ("Complete", "CompleteMinusEdge"):
        low = 2 if family == "CompleteMinusEdge" else 1
        _require(n >= low, f"{family} requires n >= {low}")
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        if family == "CompleteMinusEdge":
            edges.remove((0, 1))
    else:
        raise ParameterError(f"unknown basic family {family!r}")
    g = Graph.from_edges(n, sorted(edges), f"{family}(n={n})")
    return Construction(family, {"n": n}, g, {})


# family name -> (generator, parameter names, human-readable range)
FAMILIES = {
    "Gl": (gen_Gl, ("l",), "l >= 1"),
    "GlPrime": (gen_Gl_prime, ("l",), "l >= 1"),
    "GlDoublePrime": (gen_Gl_double_prime, ("l",), "l >= 1"),
    "Gkn": (gen_Gkn, ("k", "n"), "k >= 2, n >= 4"),
    "Hkn": (gen_Hkn, ("k", "n"), "k >= 2, n >= 4"),
    "G2l": (gen_G2l, ("l",), "l >= 3"),
    "Gkl": (gen_Gkl, ("k", "l"), "3 <= k <= l"),
    "H2l": (gen_H2l, ("l",), "l >= 3"),
    "Hkl": (gen_Hkl, ("k", "l"), "3 <= k <= l"),
    "Fkl": (gen_Fkl, ("k", "l"), "2 <= k <= l"),
    "Path": (lambda n: gen_basic("Path", n), ("n",), "n >= 1"),
    "Cycle": (lambda n: gen_basic("Cycle", n), ("n",), "n >= 3"),
    "Complete": (lambda n: gen_basic("Complete", n), ("n",), "n >= 1"),
    "CompleteMinusEdge": (lambda n: gen_basic("CompleteMinusEdge", n), ("n",), "n >= 2"),
}


def construct(family: str, **params: int) -> Construction:
    """Build ``family`` from keyword parameters, e.g. ``construct("Fkl", k=2, l=3)``."""
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    gen, names, valid = FAMILIES[family]
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ParameterError(f"{family} needs {', '.join(missing)} ({valid})")
    return gen(*(params[p] for p in names))
