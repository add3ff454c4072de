"""Chain of upper bounds from hyperbolic volume to pathwidth.

The chain is conditional on a user-supplied constant ``K``: a closed
hyperbolic 3-manifold of volume ``vol`` is assumed to have a triangulation of
its thick part with at most ``K * vol`` tetrahedra.  Every step is stored as a
record that can be recomputed from its inputs, see :func:`verify_report`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Multigraph
from .heegaard import amalgamate, thick_thin_splitting
from .trikernel import Triangulation, dual_graph
from .widths import DEFAULT_CUTOFF, CutoffExceeded, WidthCertificate, exact_width, heuristic_width

MARGULIS_BRACKET = (0.104, 0.616)
NON_HAKEN_HYPOTHESES = ("closed", "irreducible", "non-Haken")


class BoundsError(ValueError):
    pass


def manifold_width_upper_bound(
    t: Triangulation,
    parameter: str = "treewidth",
    cutoff: int | None = DEFAULT_CUTOFF,
    strategy: str = "min_degree",
) -> WidthCertificate:
    """Width of the dual graph of ``t``: an upper bound for the manifold's width.

    Uses the exact solver when every component fits under ``cutoff``,
    the heuristic otherwise.
    """
    g = dual_graph(t)
    try:
        return exact_width(g, parameter, cutoff)
    except CutoffExceeded:
        return heuristic_width(g, parameter, strategy)


def pathwidth_from_genus(g: int) -> int:
    """``4g - 2``, clamped to 0 for genus 0 where the formula is vacuous."""
    if g < 0:
        raise BoundsError("genus must be non-negative")
    return max(0, 4 * g - 2)


def genus_lower_bound_from_treewidth(tw: int) -> int:
    """``18 (tw + 1)``.

    Despite the name this bounds the Heegaard genus from *above* in terms of
    treewidth; it only holds for closed, irreducible, non-Haken manifolds,
    which nothing here checks.
    """
    if tw < 0:
        raise BoundsError("treewidth must be non-negative")
    return 18 * (tw + 1)


def _exact(x) -> Fraction:
    # str() keeps the decimal the user typed instead of the binary float
    return Fraction(str(x))


@dataclass(frozen=True)
class BoundInputs:
    volume: float
    K: float
    epsilon: float = MARGULIS_BRACKET[0]
    heegaard_genus: int | None = None
    treewidth_ub: int | None = None
    pathwidth_ub: int | None = None
    thick_genus: int | None = None
    m_thin: int | None = None

    def __post_init__(self):
        if not math.isfinite(self.volume) or self.volume < 0:
            raise BoundsError("volume must be a finite non-negative number")
        if not math.isfinite(self.K) or self.K <= 0:
            raise BoundsError("K must be a finite positive number")
        if not 0 < self.epsilon <= MARGULIS_BRACKET[1]:
            raise BoundsError(f"epsilon must lie in (0, {MARGULIS_BRACKET[1]}]")
        for name in ("heegaard_genus", "treewidth_ub", "pathwidth_ub", "thick_genus", "m_thin"):
            value = getattr(self, name)
            if value is not None and (not isinstance(value, int) or value < 0):
                raise BoundsError(f"{name} must be a non-negative integer")


@dataclass(frozen=True)
class BoundRecord:
    step: str
    source: str
    inputs: dict
    output: int
    assumptions: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out = {"inputs": dict(sorted(self.inputs.items())), "output": self.output, "source": self.source, "step": self.step}
        if self.assumptions:
            out["assumptions"] = list(self.assumptions)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "BoundRecord":
        return cls(data["step"], data["source"], dict(data["inputs"]), data["output"], tuple(data.get("assumptions", ())))


@dataclass(frozen=True)
class BoundChainReport:
    records: tuple[BoundRecord, ...]
    pathwidth_bound: int
    genus_bound: int
    degenerate: bool
    constants: dict = field(default_factory=dict)

    def record(self, step: str) -> BoundRecord:
        for r in self.records:
            if r.step == step:
                return r
        raise KeyError(step)

    def to_dict(self) -> dict:
        return {
            "constants": dict(sorted(self.constants.items())),
            "degenerate": self.degenerate,
            "genus_bound": self.genus_bound,
            "pathwidth_bound": self.pathwidth_bound,
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "BoundChainReport":
        return cls(
            records=tuple(BoundRecord.from_dict(r) for r in data["records"]),
            pathwidth_bound=data["pathwidth_bound"],
            genus_bound=data["genus_bound"],
            degenerate=data["degenerate"],
            constants=dict(data["constants"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "BoundChainReport":
        return cls.from_dict(json.loads(text))

    def table(self) -> list[tuple[str, str, str]]:
        rows = []
        for r in self.records:
            args = ", ".join(f"{k}={v}" for k, v in sorted(r.inputs.items()))
            rows.append((r.step, args, str(r.output)))
        return rows


def _budget(K, volume) -> int:
    return math.ceil(_exact(K) * _exact(volume))


def _thick_genus(tets: int) -> int:
    # a closed triangulation has a 4-regular dual graph: Betti number 2n - n + 1
    return tets + 1 if tets else 0


def _amalgamated(thick: int, m: int) -> tuple[dict, int]:
    ledger = amalgamate(thick_thin_splitting(thick, m))
    inputs = {
        "euler_char_dual": ledger.euler_char_dual,
        "m_thin": m,
        "sum_gluing_genera": ledger.sum_gluing_genera,
        "sum_splitting_genera": ledger.sum_splitting_genera,
        "thick_genus": thick,
    }
    return inputs, ledger.amalgamated_genus


def bound_chain(b: BoundInputs) -> BoundChainReport:
    records = []
    n = _budget(b.K, b.volume)
    records.append(BoundRecord("tetrahedron_budget", "thick-part triangulation size", {"K": b.K, "volume": b.volume}, n))

    if b.m_thin is not None and b.m_thin > n:
        raise BoundsError(f"m_thin={b.m_thin} exceeds the tetrahedron budget {n}")
    m = n if b.m_thin is None else b.m_thin
    records.append(
        BoundRecord("thin_pieces", "each boundary torus needs a tetrahedron after isolation", {"tetrahedra": n}, m)
    )

    if b.thick_genus is None:
        thick = _thick_genus(n)
        records.append(BoundRecord("thick_genus", "dual-graph Betti number of a closed triangulation", {"tetrahedra": n}, thick))
    else:
        thick = b.thick_genus
        records.append(BoundRecord("thick_genus", "user supplied", {"thick_genus": thick}, thick))
    if m >= 1 and thick < 1:
        raise BoundsError("a thick part with boundary tori needs splitting genus at least 1")

    inputs, genus = _amalgamated(thick, m)
    records.append(BoundRecord("amalgamated_genus", "amalgamation of the thick-thin splitting", inputs, genus))
    pw = pathwidth_from_genus(genus)
    records.append(BoundRecord("pathwidth_from_genus", "pathwidth at most 4g - 2", {"genus": genus}, pw))
    candidates = [pw]

    if b.heegaard_genus is not None:
        hp = pathwidth_from_genus(b.heegaard_genus)
        records.append(BoundRecord("pathwidth_from_heegaard_genus", "pathwidth at most 4g - 2", {"genus": b.heegaard_genus}, hp))
        candidates.append(hp)
    if b.pathwidth_ub is not None:
        records.append(BoundRecord("pathwidth_supplied", "user supplied", {"pathwidth": b.pathwidth_ub}, b.pathwidth_ub))
        candidates.append(b.pathwidth_ub)
    if b.treewidth_ub is not None:
        records.append(
            BoundRecord(
                "genus_from_treewidth",
                "genus at most 18 (tw + 1)",
                {"treewidth": b.treewidth_ub},
                genus_lower_bound_from_treewidth(b.treewidth_ub),
                assumptions=tuple(f"{h} (unverified)" for h in NON_HAKEN_HYPOTHESES),
            )
        )
    final = min(candidates)
    degenerate = b.volume == 0 or genus == 0
    constants = {
        "C_genus": None if b.volume == 0 else genus / b.volume,
        "C_pathwidth": None if b.volume == 0 else pw / b.volume,
        "C_treewidth": None if b.volume == 0 else pw / b.volume,
        "K": b.K,
        "epsilon": b.epsilon,
        "margulis_bracket": list(MARGULIS_BRACKET),
    }
    return BoundChainReport(tuple(records), final, genus, degenerate, constants)


def _recompute(r: BoundRecord) -> int:
    i = r.inputs
    if r.step == "tetrahedron_budget":
        return _budget(i["K"], i["volume"])
    if r.step == "thin_pieces":
        return r.output if r.output <= i["tetrahedra"] else -1
    if r.step == "thick_genus":
        return i["thick_genus"] if "thick_genus" in i else _thick_genus(i["tetrahedra"])
    if r.step == "amalgamated_genus":
        expected = i["sum_splitting_genera"] - i["sum_gluing_genera"] + 1 - i["euler_char_dual"]
        again = _amalgamated(i["thick_genus"], i["m_thin"])[1]
        return expected if expected == again else -1
    if r.step in ("pathwidth_from_genus", "pathwidth_from_heegaard_genus"):
        return pathwidth_from_genus(i["genus"])
    if r.step == "pathwidth_supplied":
        return i["pathwidth"]
    if r.step == "genus_from_treewidth":
        return genus_lower_bound_from_treewidth(i["treewidth"])
    raise BoundsError(f"unknown step {r.step!r}")


def verify_report(report: BoundChainReport) -> list[str]:
    """Steps whose stored output disagrees with a recomputation; empty if all agree."""
    bad = [r.step for r in report.records if _recompute(r) != r.output]
    chained = {r.step: r for r in report.records}
    try:
        if chained["thin_pieces"].inputs["tetrahedra"] != chained["tetrahedron_budget"].output:
            bad.append("thin_pieces")
        amal = chained["amalgamated_genus"].inputs
        if amal["m_thin"] != chained["thin_pieces"].output or amal["thick_genus"] != chained["thick_genus"].output:
            bad.append("amalgamated_genus")
        if chained["pathwidth_from_genus"].inputs["genus"] != chained["amalgamated_genus"].output:
            bad.append("pathwidth_from_genus")
    except KeyError as missing:
        bad.append(f"missing step {missing}")
    outputs = [r.output for r in report.records if r.step.startswith("pathwidth")]
    if outputs and report.pathwidth_bound != min(outputs):
        bad.append("pathwidth_bound")
    return bad


def closed_pathwidth_bound(n_tetrahedra: int) -> int:
    """Pathwidth bound for a closed triangulation with ``n`` tetrahedra:
    the handlebody splitting has genus ``n + 1``, so ``4(n + 1) - 2``."""
    return pathwidth_from_genus(Multigraph.from_arcs(n_tetrahedra, _four_regular(n_tetrahedra)).betti_number())


def _four_regular(n: int) -> list[tuple[int, int]]:
    # any 4-regular multigraph on n nodes has the same Betti number; use a doubled cycle
    if n == 1:
        return [(0, 0), (0, 0)]
    return [(i, (i + 1) % n) for i in range(n)] * 2
