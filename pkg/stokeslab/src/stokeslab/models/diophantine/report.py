from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..exact import Scalar
from ..quandle import BraidWord
from ..stokes import StokesMat


@dataclass
class OrbitReport:
    """
    Result of an orbit scan: one canonical representative per class found, the
    word reaching it from the first scanned point of the class, and tags.
    Counts are bounded evidence at the scanned height, never a certificate.
    """
    invariants: dict
    height: int
    representatives: List[StokesMat] = field(default_factory=list)
    words: List[BraidWord] = field(default_factory=list)
    seeds: List[StokesMat] = field(default_factory=list)
    tags: List[Optional[str]] = field(default_factory=list)
    sizes: List[int] = field(default_factory=list)
    points: int = 0
    truncated: bool = False
    disc: Scalar = 0
    # rank 4 only: the height the last merge pass was confined to
    merge_bound: Optional[int] = None
    # set by a scan over several heights: counts per height and their trend
    growth: Optional[dict] = None
    # scanned point key -> class index; kept out of the JSON
    lookup: Dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def count(self) -> int:
        return len(self.representatives)

    @property
    def degenerate(self) -> bool:
        return self.disc == 0

    def classify(self, s: StokesMat) -> Optional[int]:
        return self.lookup.get(s.key())

    def add(self, rep: StokesMat, word: BraidWord, seed: StokesMat, tag: Optional[str], size: int):
        self.representatives.append(rep)
        self.words.append(word)
        self.seeds.append(seed)
        self.tags.append(tag)
        self.sizes.append(size)

    def to_json(self):
        out = {
            "invariants": self.invariants,
            "height": self.height,
            "count": self.count,
            "points": self.points,
            "representatives": [s.to_rows() for s in self.representatives],
            "words": [str(w) for w in self.words],
            "seeds": [s.to_rows() for s in self.seeds],
            "sizes": self.sizes,
            "tags": self.tags,
            "truncated": self.truncated,
            "disc": self.disc,
            "degenerate": self.degenerate,
            "certified": False,
        }
        if self.merge_bound is not None:
            out["merge_bound"] = self.merge_bound
        if self.growth is not None:
            out["growth"] = self.growth
        if self.representatives and self.representatives[0].r == 3:
            out["triples"] = [[s.get(1, 2), s.get(2, 3), s.get(1, 3)] for s in self.representatives]
        return out
