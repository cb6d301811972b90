"""Token-range alignment links shared by the converter, corpus and suggester.

A link maps a half-open informal token range to a half-open formal
token range. An empty informal span marks an insertion (e.g. a restored
conjunction), an empty formal span a deletion (e.g. a dropped article);
at most one side may be empty.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AlignmentLink:
    informal_span: tuple[int, int]
    formal_span: tuple[int, int]

    def __post_init__(self) -> None:
        for name, (a, b) in (("informal_span", self.informal_span),
                             ("formal_span", self.formal_span)):
            if a < 0 or b < a:
                raise ValueError(f"{name} must be a non-negative half-open range, got [{a}, {b})")
        if self.informal_empty and self.formal_empty:
            raise ValueError("a link may not have both spans empty")

    @property
    def informal_empty(self) -> bool:
        a, b = self.informal_span
        return a == b

    @property
    def formal_empty(self) -> bool:
        a, b = self.formal_span
        return a == b

    def to_json(self) -> dict:
        return {"informal_span": list(self.informal_span),
                "formal_span": list(self.formal_span)}

    @classmethod
    def from_json(cls, obj: dict) -> "AlignmentLink":
        return cls(tuple(obj["informal_span"]), tuple(obj["formal_span"]))


def side_overlaps(links: list[AlignmentLink], side: str) -> list[tuple[int, int]]:
    """Indices of link pairs whose spans on ``side`` share a token."""
    covered: dict[int, int] = {}
    bad: list[tuple[int, int]] = []
    for li, link in enumerate(links):
        a, b = getattr(link, side)
        for tok in range(a, b):
            if tok in covered:
                pair = (covered[tok], li)
                if pair not in bad:
                    bad.append(pair)
            else:
                covered[tok] = li
    return bad


def uncovered(links: list[AlignmentLink], side: str, n_tokens: int) -> list[int]:
    """Token indices on ``side`` not covered by any link."""
    seen = set()
    for link in links:
        a, b = getattr(link, side)
        seen.update(range(a, b))
    return [i for i in range(n_tokens) if i not in seen]


def out_of_bounds(links: list[AlignmentLink], n_informal: int, n_formal: int) -> list[int]:
    """Indices of links whose spans exceed the sentence bounds."""
    bad = []
    for li, link in enumerate(links):
        ia, ib = link.informal_span
        fa, fb = link.formal_span
        if ib > n_informal or fb > n_formal:
            bad.append(li)
    return bad


def is_monotonic(links: list[AlignmentLink]) -> bool:
    """True when non-empty links, ordered by informal start, have non-decreasing formal order."""
    real = [l for l in links if not l.informal_empty and not l.formal_empty]
    real.sort(key=lambda l: l.informal_span)
    starts = [l.formal_span[0] for l in real]
    return all(a <= b for a, b in zip(starts, starts[1:]))


def has_syntactic_change(links: list[AlignmentLink]) -> bool:
    """Structural-change flag: non-monotonic links or any empty span."""
    return (not is_monotonic(links)
            or any(l.informal_empty or l.formal_empty for l in links))
