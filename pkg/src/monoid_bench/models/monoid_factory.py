from __future__ import annotations

from monoid_bench.arith.superstructure import ListSuperstructure
from monoid_bench.models.base_model import Structure
from monoid_bench.models.bs_monoid import BaumslagSolitarMonoid
from monoid_bench.models.free_monoid import FreeMonoid
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.naturals import NaturalNumbers
from monoid_bench.models.trace_monoid import TraceMonoid
from monoid_bench.models.words import Alphabet


def create_monoid(spec: str) -> MonoidModel:
    """
    Build a monoid model from its spec string.

    Parameters:
    -----------
    spec : str
        "free:<g1,g2,...>", "trace:<g1,...>;edges=<gi-gj,...>" or "bs:<k>,<m>"

    Returns:
    --------
    MonoidModel
    """
    kind, _, body = spec.strip().partition(":")
    kind = kind.strip().lower()
    if kind == "free":
        return FreeMonoid(_alphabet(body))
    if kind == "trace":
        names, _, edge_part = body.partition(";")
        edges: list[tuple[str, str]] = []
        edge_part = edge_part.strip()
        if edge_part:
            if not edge_part.startswith("edges="):
                raise ValueError(f"Invalid trace spec: {spec}")
            for item in edge_part[len("edges="):].split(","):
                if not item.strip():
                    continue
                a, sep, b = item.strip().partition("-")
                if not sep:
                    raise ValueError(f"Invalid edge: {item}")
                edges.append((a.strip(), b.strip()))
        return TraceMonoid(_alphabet(names), edges)
    if kind == "bs":
        try:
            k, m = (int(part) for part in body.split(","))
        except ValueError:
            raise ValueError(f"Invalid Baumslag-Solitar spec: {spec}")
        return BaumslagSolitarMonoid(k, m)
    raise ValueError(f"Invalid monoid kind: {kind}")


def create_structure(spec: str) -> Structure:
    key = spec.strip().lower()
    if key in ("nat", "n"):
        return NaturalNumbers()
    if key == "lists":
        return ListSuperstructure()
    return create_monoid(spec)


def _alphabet(body: str) -> Alphabet:
    names = tuple(name.strip() for name in body.split(",") if name.strip())
    return Alphabet(names)
