"""Presentation files: parsing, the string-algebra axioms, and sign maps.

The ``.sqa`` format::

    # comment
    algebra GP23
    vertices: v
    arrow a: v -> v
    arrow b: v -> v
    relations: a a; b b b; a b; b a
    sigma: a=1 b=-1
    epsilon: a=-1 b=1

Relation paths list arrow ids in right-to-left composition order, so the
relation ``c b`` is the composite "c after b"; read left to right it matches
the printed form of a word exactly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import NotAStringAlgebra, PresentationError, SignConsistencyError

_ID_RE = re.compile(r"^[^\s,()'=;>-]+$")


@dataclass(frozen=True)
class SignAssignment:
    sigma: dict
    epsilon: dict


@dataclass(frozen=True)
class QuiverPresentation:
    name: str
    vertices: tuple
    arrows: tuple  # of (id, source, target)
    relations: frozenset  # of tuples of arrow ids, leftmost acts last
    signs: SignAssignment | None = None

    def arrow_map(self) -> dict:
        return {a: (s, t) for a, s, t in self.arrows}


@dataclass
class ValidationReport:
    is_string_algebra: bool = True
    violations: list = field(default_factory=list)  # (tag, locus)

    def add(self, tag: str, locus: str):
        self.is_string_algebra = False
        self.violations.append((tag, locus))


def parse_presentation(text: str) -> QuiverPresentation:
    name = None
    vertices: list = []
    arrows: list = []
    relations: list = []
    sigma: dict = {}
    epsilon: dict = {}

    def err(msg, ln):
        raise PresentationError(msg, ln)

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("algebra "):
            name = line[len("algebra "):].strip()
            if not _ID_RE.match(name):
                err(f"bad algebra name {name!r}", ln)
        elif line.startswith("vertices:"):
            for v in line[len("vertices:"):].split():
                if not _ID_RE.match(v):
                    err(f"bad vertex id {v!r}", ln)
                if v in vertices:
                    err(f"duplicate vertex {v!r}", ln)
                vertices.append(v)
        elif line.startswith("arrow "):
            m = re.match(r"^arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$", line)
            if not m:
                err("expected 'arrow <id>: <src> -> <tgt>'", ln)
            aid, src, tgt = m.groups()
            if not _ID_RE.match(aid):
                err(f"bad arrow id {aid!r}", ln)
            if any(a == aid for a, _, _ in arrows):
                err(f"duplicate arrow {aid!r}", ln)
            if aid in vertices:
                err(f"arrow id {aid!r} collides with a vertex id", ln)
            for v in (src, tgt):
                if v not in vertices:
                    err(f"unknown vertex {v!r}", ln)
            arrows.append((aid, src, tgt))
        elif line.startswith("relations:"):
            for chunk in line[len("relations:"):].split(";"):
                path = tuple(chunk.split())
                if path:
                    relations.append((path, ln))
        elif line.startswith("sigma:") or line.startswith("epsilon:"):
            target = sigma if line.startswith("sigma:") else epsilon
            body = line.split(":", 1)[1]
            for item in body.split():
                m = re.match(r"^(\S+)=(-?1)$", item)
                if not m:
                    err(f"expected '<arrow>=1' or '<arrow>=-1', got {item!r}", ln)
                target[m.group(1)] = int(m.group(2))
        else:
            err(f"unrecognized line {line!r}", ln)

    if not vertices:
        raise PresentationError("presentation declares no vertices")
    amap = {a: (s, t) for a, s, t in arrows}

    checked = []
    for path, ln in relations:
        for a in path:
            if a not in amap:
                err(f"unknown arrow {a!r} in relation", ln)
        # composability: leftmost arrow acts last
        for left, right in zip(path, path[1:]):
            if amap[left][0] != amap[right][1]:
                err(f"relation {' '.join(path)} is not a composable path", ln)
        checked.append(tuple(path))

    signs = None
    if sigma or epsilon:
        for d, kind in ((sigma, "sigma"), (epsilon, "epsilon")):
            for a in d:
                if a not in amap:
                    raise PresentationError(f"{kind} given for unknown arrow {a!r}")
            for a in amap:
                if a not in d:
                    raise PresentationError(f"{kind} missing for arrow {a!r}")
        signs = SignAssignment(dict(sigma), dict(epsilon))

    return QuiverPresentation(
        name=name or "unnamed",
        vertices=tuple(vertices),
        arrows=tuple(arrows),
        relations=frozenset(checked),
        signs=signs,
    )


def serialize_presentation(p: QuiverPresentation) -> str:
    lines = [f"algebra {p.name}", "vertices: " + " ".join(p.vertices)]
    for a, s, t in p.arrows:
        lines.append(f"arrow {a}: {s} -> {t}")
    if p.relations:
        rels = sorted(" ".join(r) for r in p.relations)
        lines.append("relations: " + "; ".join(rels))
    if p.signs is not None:
        for kind, d in (("sigma", p.signs.sigma), ("epsilon", p.signs.epsilon)):
            items = " ".join(f"{a}={d[a]}" for a in sorted(d))
            lines.append(f"{kind}: {items}")
    return "\n".join(lines) + "\n"


def _forbidden_factors(p: QuiverPresentation) -> set:
    """Relations as application-order sequences (first-applied arrow first)."""
    return {tuple(reversed(r)) for r in p.relations}


def relation_walk_automaton(p: QuiverPresentation):
    """Deterministic automaton of relation-avoiding directed walks.

    States are (current endpoint, longest suffix of the applied-arrow
    sequence that is a proper prefix of a relation).  Returns
    (acyclic, longest path in arrows or None, cycle witness or None).
    """
    amap = p.arrow_map()
    forbidden = _forbidden_factors(p)
    proper_prefixes = {()}
    for f in forbidden:
        for k in range(1, len(f)):
            proper_prefixes.add(f[:k])
    max_f = max((len(f) for f in forbidden), default=1)

    def step(prefix, a):
        seq = prefix + (a,)
        for f in forbidden:
            if len(seq) >= len(f) and seq[-len(f):] == f:
                return None
        for k in range(min(len(seq), max_f - 1), 0, -1):
            if seq[-k:] in proper_prefixes:
                return seq[-k:]
        return ()

    nodes = {(v, ()) for v in p.vertices}
    edges: dict = {n: [] for n in nodes}
    todo = list(nodes)
    while todo:
        node = todo.pop()
        vtx, prefix = node
        for a, (src, tgt) in amap.items():
            if src != vtx:
                continue
            nxt_prefix = step(prefix, a)
            if nxt_prefix is None:
                continue
            nxt = (tgt, nxt_prefix)
            if nxt not in edges:
                edges[nxt] = []
                todo.append(nxt)
            edges[node].append(nxt)

    # iterative DFS cycle detection + longest path on the DAG
    color: dict = {}
    order: list = []
    cycle: list | None = None
    for start in sorted(edges, key=repr):
        if color.get(start):
            continue
        stack = [(start, iter(edges[start]))]
        color[start] = 1
        path = [start]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color.get(nxt) == 1:
                    cycle = path[path.index(nxt):] + [nxt]
                    return False, None, cycle
                if color.get(nxt) is None:
                    color[nxt] = 1
                    path.append(nxt)
                    stack.append((nxt, iter(edges[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                order.append(node)
                stack.pop()
                path.pop()

    longest = {n: 0 for n in edges}
    for n in order:  # reverse topological
        for nxt in edges[n]:
            longest[n] = max(longest[n], 1 + longest[nxt])
    return True, max(longest.values(), default=0), None


def sign_constraint_edges(p: QuiverPresentation):
    """'Must differ' edges between the variables (arrow, 's'|'e')."""
    amap = p.arrow_map()
    arrows = sorted(amap)
    edges = []
    for i, a in enumerate(arrows):
        for b in arrows[i + 1:]:
            if amap[a][0] == amap[b][0]:
                edges.append(((a, "s"), (b, "s"), f"shared source {amap[a][0]}"))
            if amap[a][1] == amap[b][1]:
                edges.append(((a, "e"), (b, "e"), f"shared target {amap[a][1]}"))
    for b in arrows:
        for c in arrows:
            if amap[b][0] == amap[c][1] and (b, c) not in p.relations:
                edges.append(((b, "s"), (c, "e"), f"composition {b} {c} allowed"))
    return edges


def validate_string_algebra(p: QuiverPresentation) -> ValidationReport:
    report = ValidationReport()
    amap = p.arrow_map()

    # (a) monomial relations: structural in this format, recorded for completeness
    # (b) finitely many relation-avoiding directed paths
    acyclic, _, cycle = relation_walk_automaton(p)
    if not acyclic:
        locus = " -> ".join(f"{v}" for v, _ in cycle)
        report.add("finiteness", f"relation-avoiding walks cycle through {locus}")

    for v in p.vertices:
        out = [a for a, (s, _) in amap.items() if s == v]
        if len(out) > 2:
            report.add("out-degree", f"vertex {v} sources {sorted(out)}")
        into = [a for a, (_, t) in amap.items() if t == v]
        if len(into) > 2:
            report.add("in-degree", f"vertex {v} targets {sorted(into)}")

    for b, (bs, bt) in sorted(amap.items()):
        succ = [c for c, (cs, _) in amap.items() if cs == bt and (c, b) not in p.relations]
        if len(succ) > 1:
            report.add("unique-successor", f"arrow {b} continues by {sorted(succ)}")
        pred = [a for a, (_, at) in amap.items() if at == bs and (b, a) not in p.relations]
        if len(pred) > 1:
            report.add("unique-predecessor", f"arrow {b} is preceded by {sorted(pred)}")

    if p.signs is not None:
        for x, y, why in sign_constraint_edges(p):
            vx = (p.signs.sigma if x[1] == "s" else p.signs.epsilon)[x[0]]
            vy = (p.signs.sigma if y[1] == "s" else p.signs.epsilon)[y[0]]
            if vx != -vy:
                report.add("sign-consistency", f"{x} and {y} must differ ({why})")
    return report


def derive_signs(p: QuiverPresentation) -> SignAssignment:
    """Verify supplied signs, or solve the parity constraints deterministically.

    Free components are rooted at their least variable, ordered by arrow id
    with sigma before epsilon, and the root gets +1.
    """
    report = validate_string_algebra(p)
    if not report.is_string_algebra:
        sign_only = all(tag == "sign-consistency" for tag, _ in report.violations)
        if p.signs is not None and sign_only:
            raise SignConsistencyError(
                "; ".join(locus for _, locus in report.violations))
        raise NotAStringAlgebra(report)
    if p.signs is not None:
        return p.signs

    adj: dict = {}
    for x, y, why in sign_constraint_edges(p):
        adj.setdefault(x, []).append((y, why))
        adj.setdefault(y, []).append((x, why))

    variables = sorted(
        [(a, k) for a, _, _ in p.arrows for k in ("s", "e")],
        key=lambda v: (v[0], 0 if v[1] == "s" else 1),
    )
    value: dict = {}
    for root in variables:
        if root in value:
            continue
        value[root] = 1
        queue = [root]
        while queue:
            cur = queue.pop(0)
            for nxt, why in adj.get(cur, []):
                want = -value[cur]
                if nxt in value:
                    if value[nxt] != want:
                        raise SignConsistencyError(
                            f"odd constraint cycle at {nxt} ({why})")
                else:
                    value[nxt] = want
                    queue.append(nxt)

    sigma = {a: value[(a, "s")] for a, _, _ in p.arrows}
    epsilon = {a: value[(a, "e")] for a, _, _ in p.arrows}
    return SignAssignment(sigma, epsilon)
