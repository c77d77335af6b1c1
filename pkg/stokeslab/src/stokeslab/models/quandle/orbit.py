import logging
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from .braid import BraidWord


logger = logging.getLogger(__name__)

# (i, sign, element) -> element
Mover = Callable[[int, int, Any], Any]


@dataclass(frozen=True)
class OrbitEntry:
    element: Any
    word: BraidWord
    seed: int


class OrbitStore:
    """
    Deduplicating set keyed by canonical form. insert_if_absent is atomic, so
    concurrent expanders may share one store.
    """
    def __init__(self, key: Callable[[Any], Any]):
        self.key = key
        self._entries: Dict[Any, OrbitEntry] = {}
        self._lock = threading.Lock()
        self.truncated = False
        self.steps = 0

    def insert_if_absent(self, element, word: BraidWord = BraidWord(), seed: int = 0) -> bool:
        k = self.key(element)
        with self._lock:
            if k in self._entries:
                return False
            self._entries[k] = OrbitEntry(element, word, seed)
            return True

    def __contains__(self, element) -> bool:
        return self.key(element) in self._entries

    def __len__(self):
        return len(self._entries)

    def get(self, element) -> Optional[OrbitEntry]:
        return self._entries.get(self.key(element))

    def entries(self) -> List[OrbitEntry]:
        return [self._entries[k] for k in sorted(self._entries)]

    def elements(self) -> List[Any]:
        return [e.element for e in self.entries()]

    def representative(self) -> Optional[OrbitEntry]:
        if not self._entries:
            return None
        return self._entries[min(self._entries)]


def braid_letters(r: int) -> List[Tuple[int, int]]:
    return [(i, sign) for i in range(1, r) for sign in (1, -1)]


def _expand(element, letters, move: Mover, bound):
    out = []
    for i, sign in letters:
        nxt = move(i, sign, element)
        if bound is None or bound(nxt):
            out.append((i, sign, nxt))
    return out


def orbit_enumerate(
    seeds: Iterable,
    r: int,
    move: Mover,
    key: Callable[[Any], Any],
    bound: Optional[Callable[[Any], bool]] = None,
    budget: Optional[int] = None,
    workers: int = 1,
    progress: bool = False,
    letters: Optional[Sequence[Tuple[int, int]]] = None,
    empty_word: BraidWord = BraidWord(),
) -> OrbitStore:
    """
    BFS closure of the seeds under every σ_i^{±1}, restricted to elements the
    bound accepts. Each level is expanded (possibly in parallel) and inserted in
    canonical order, so the final store does not depend on scheduling. `budget`
    caps the number of expanded elements; hitting it sets store.truncated.
    `letters` overrides the move set (default every σ_i^{±1}, i < r).
    """
    letters = list(letters) if letters is not None else braid_letters(r)
    store = OrbitStore(key)
    frontier = []
    for n, s in enumerate(sorted(seeds, key=key)):
        if (bound is None or bound(s)) and store.insert_if_absent(s, empty_word, n):
            frontier.append(s)

    pbar = tqdm(desc="orbit", unit="elt", disable=not progress)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        while frontier:
            if budget is not None and store.steps + len(frontier) > budget:
                frontier = frontier[:max(0, budget - store.steps)]
                store.truncated = True
            futures = {executor.submit(_expand, x, letters, move, bound): n for n, x in enumerate(frontier)}
            expanded: List[List[Tuple[int, int, Any]]] = [None] * len(frontier)
            for fut in as_completed(futures):
                expanded[futures[fut]] = fut.result()
            store.steps += len(frontier)
            pbar.update(len(frontier))

            nxt = []
            for parent, children in zip(frontier, expanded):
                origin = store.get(parent)
                for i, sign, child in children:
                    if store.insert_if_absent(child, origin.word.append(i, sign), origin.seed):
                        nxt.append(child)
            if store.truncated:
                break
            frontier = sorted(nxt, key=key)
    pbar.close()
    if store.truncated:
        logger.warning(f"orbit enumeration truncated after {store.steps} expansions, {len(store)} elements stored")
    return store
