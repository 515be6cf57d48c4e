"""Exhaustive search for crucial words: minimal length, certificates, enumeration.

The engine runs an iterative-deepening scan: for each target length L it
enumerates abelian-k-power-free words of length L by depth-first extension,
pruning any prefix that already ends in an abelian k-th power, and tests
cruciality at the leaves. Minimal-length search stops at the first length
carrying a witness; the witness returned is the lexicographically least
canonical crucial word of that length.

Symmetry reduction restricts the scan to canonical words, those whose letters
are named in order of first occurrence (letter i+1 may only appear after
letter i has). Every word is a renaming of exactly one canonical word and
renaming preserves cruciality, so minimal lengths are unaffected; the
canonical word is also the lex-least among its renamings, so the reported
witness does not change either. Leaves are always tested by the full
cruciality predicate; the reduction only shapes which prefixes are walked.

The tree is split at a fixed shallow depth into branches. Branches are
scanned in lexicographic order, sequentially or on a process pool; the merge
consumes results in branch order and stops at the first branch containing a
witness, so parallel runs return byte-identical results to sequential ones
(speculative later branches are discarded, and their nodes are not counted).

Node budgets are enforced deterministically: each branch runs under the full
budget as a hard cap, and the driver stops dispatching once the running total
crosses the budget. Time budgets are a wall-clock safety net and are the one
knob that trades determinism for protection. A budget that trips mid-search
downgrades the result to exhaustive=False rather than raising, except in
enumeration mode where truncating the stream raises BudgetExhaustedError.

Checkpoint files make long scans resumable. The file starts with a header
line recording n, k, reduction flag and branch depth, then one line per
completed branch: target length, comma-joined branch prefix, nodes expanded
below it, number of crucial words found, and the least witness found (or -).
Re-running with the same configuration reuses recorded branches and appends
new ones; find and verify runs of the same (n, k) may share a file.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_all_start_methods, get_context
from pathlib import Path
from typing import Iterator, Union

from .cruciality import is_crucial
from .errors import BudgetExhaustedError, DomainError
from .words import MAX_ALPHABET, Word

DEFAULT_MAX_LENGTH = 40
_BRANCH_DEPTH = 4
_TIME_CHECK_MASK = 0xFFF  # poll the deadline every 4096 node expansions
_SHIFT = 16  # per-letter lane width in packed Parikh prefixes


@dataclass(frozen=True)
class FindMinimalCrucial:
    """Locate the minimal crucial length and a witness."""


@dataclass(frozen=True)
class EnumerateAllCrucialAtLength:
    """Stream every crucial word of exactly this length."""

    length: int


@dataclass(frozen=True)
class VerifyNoneBelow:
    """Certify that no crucial word shorter than this length exists."""

    length: int


TargetMode = Union[FindMinimalCrucial, EnumerateAllCrucialAtLength, VerifyNoneBelow]


@dataclass(frozen=True)
class SearchConfig:
    n: int
    k: int
    max_length: int = DEFAULT_MAX_LENGTH
    target_mode: TargetMode = field(default_factory=FindMinimalCrucial)
    symmetry_reduction: bool = True
    node_budget: int | None = None
    time_budget: float | None = None
    workers: int = 1
    checkpoint_path: str | Path | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ALPHABET:
            raise DomainError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {self.n}")
        if self.k < 2:
            raise DomainError(f"exponent k must be at least 2, got {self.k}")
        if not 1 <= self.max_length < (1 << _SHIFT):
            raise DomainError(f"max_length must be in 1..{(1 << _SHIFT) - 1}")
        if self.node_budget is not None and self.node_budget < 1:
            raise DomainError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise DomainError("time_budget must be positive")
        if self.workers < 1:
            raise DomainError("workers must be at least 1")
        if isinstance(self.target_mode, (EnumerateAllCrucialAtLength, VerifyNoneBelow)):
            if self.target_mode.length < 1:
                raise DomainError("target length must be positive")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search run.

    exhaustive means the reported verdict is proven: no budget interfered
    with the scans the verdict depends on. exhaustive=True with
    crucial_words_found=0 in verify mode certifies the absence claim;
    exhaustive=False means budgets cut the run short and the fields report
    whatever was established before the cut.
    """

    minimal_length: int | None
    witness: Word | None
    exhaustive: bool
    nodes_expanded: int
    crucial_words_found: int


def _branches(
    n: int, k: int, depth: int, full_length: int, reduction: bool
) -> tuple[list[tuple[int, ...]], int]:
    """All free (optionally canonical) prefixes of exactly `depth` letters.

    Returns them in lexicographic order along with the node count spent, one
    per attempted letter append. Prefixes that cannot reach all n letters
    within full_length positions are pruned, matching the deep scan.
    `seen` tracks the max letter under reduction, a bitmask otherwise.
    """
    prefixes: list[tuple[int, ...]] = []
    nodes = 0
    P = [0] * (depth + 1)
    word = [0] * depth
    unit = [0] + [1 << ((c - 1) * _SHIFT) for c in range(1, n + 1)]

    def free_after_append(m: int) -> bool:
        # m = index of the appended letter; blocks read off packed prefixes
        t = m + 1
        for b in range(1, t // k + 1):
            first = P[t] - P[t - b]
            j = 2
            while j <= k and P[t - (j - 1) * b] - P[t - j * b] == first:
                j += 1
            if j > k:
                return False
        return True

    def walk(m: int, seen: int) -> None:
        nonlocal nodes
        missing = (n - seen) if reduction else (n - bin(seen).count("1"))
        if missing > full_length - m:
            return
        if m == depth:
            prefixes.append(tuple(word))
            return
        lim = min(seen + 1, n) if reduction else n
        for a in range(1, lim + 1):
            nodes += 1
            P[m + 1] = P[m] + unit[a]
            if free_after_append(m):
                word[m] = a
                walk(m + 1, max(seen, a) if reduction else seen | (1 << (a - 1)))

    walk(0, 0)
    return prefixes, nodes


def _scan_branch(task: tuple) -> tuple[int, tuple[tuple[int, ...], ...], bool]:
    """Depth-first scan below one branch prefix.

    task = (n, k, L, prefix, reduction, node_cap, deadline). Returns the
    nodes expanded below the prefix, the crucial words found (lex order),
    and whether a budget tripped mid-branch.
    """
    n, k, L, prefix, reduction, node_cap, deadline = task
    m0 = len(prefix)
    P = [0] * (L + 1)
    acc = 0
    for i, a in enumerate(prefix):
        acc += 1 << ((a - 1) * _SHIFT)
        P[i + 1] = acc
    word = list(prefix) + [0] * (L - m0)
    unit = [0] + [1 << ((c - 1) * _SHIFT) for c in range(1, n + 1)]
    nodes = 0
    tripped = False
    found: list[tuple[int, ...]] = []

    def leaf_is_crucial() -> bool:
        top = P[L]
        for x in range(1, n + 1):
            px = top + unit[x]
            t = L + 1
            ok = False
            for b in range(1, t // k + 1):
                first = px - P[t - b]
                j = 2
                while j <= k and P[t - (j - 1) * b] - P[t - j * b] == first:
                    j += 1
                if j > k:
                    ok = True
                    break
            if not ok:
                return False
        return True

    def dfs(m: int, seen: int) -> None:
        nonlocal nodes, tripped
        if tripped:
            return
        missing = (n - seen) if reduction else (n - bin(seen).count("1"))
        if missing > L - m:
            return
        if m == L:
            if leaf_is_crucial():
                found.append(tuple(word))
            return
        lim = min(seen + 1, n) if reduction else n
        pm = P[m]
        for a in range(1, lim + 1):
            nodes += 1
            if node_cap is not None and nodes >= node_cap:
                tripped = True
                return
            if deadline is not None and nodes & _TIME_CHECK_MASK == 0:
                if time.monotonic() > deadline:
                    tripped = True
                    return
            pa = pm + unit[a]
            # reject extensions ending in an abelian k-th power
            t = m + 1
            bad = False
            for b in range(1, t // k + 1):
                first = pa - P[t - b]
                j = 2
                while j <= k and P[t - (j - 1) * b] - P[t - j * b] == first:
                    j += 1
                if j > k:
                    bad = True
                    break
            if bad:
                continue
            P[t] = pa
            word[m] = a
            dfs(m + 1, (max(seen, a) if reduction else seen | (1 << (a - 1))))
            if tripped:
                return

    if reduction:
        seen0 = max(prefix) if prefix else 0
    else:
        seen0 = 0
        for a in prefix:
            seen0 |= 1 << (a - 1)
    dfs(m0, seen0)
    return nodes, tuple(found), tripped


class _Checkpoint:
    """Append-only record of completed branch scans."""

    def __init__(self, path: str | Path, cfg: SearchConfig):
        self.path = Path(path)
        self.header = (
            f"# crucialis checkpoint v1 n={cfg.n} k={cfg.k} "
            f"reduction={int(cfg.symmetry_reduction)} depth={_BRANCH_DEPTH}"
        )
        self.done: dict[tuple[int, tuple[int, ...]], tuple[int, int, tuple[int, ...] | None]] = {}
        if self.path.exists() and self.path.stat().st_size > 0:
            self._load()
        else:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "w") as fh:
                fh.write(self.header + "\n")

    def _load(self) -> None:
        with open(self.path) as fh:
            first = fh.readline().rstrip("\n")
            if first != self.header:
                raise DomainError(
                    f"checkpoint {self.path} belongs to a different search "
                    f"(found {first!r})"
                )
            for line in fh:
                parts = line.split()
                if len(parts) != 5:
                    continue  # torn tail line from an interrupted run
                length = int(parts[0])
                prefix = tuple(int(x) for x in parts[1].split(","))
                nodes, count = int(parts[2]), int(parts[3])
                lexmin = None if parts[4] == "-" else tuple(int(x) for x in parts[4].split(","))
                self.done[(length, prefix)] = (nodes, count, lexmin)

    def get(self, length: int, prefix: tuple[int, ...]):
        return self.done.get((length, prefix))

    def record(
        self,
        length: int,
        prefix: tuple[int, ...],
        nodes: int,
        count: int,
        lexmin: tuple[int, ...] | None,
    ) -> None:
        key = (length, prefix)
        if key in self.done:
            return
        self.done[key] = (nodes, count, lexmin)
        pw = ",".join(map(str, prefix))
        lw = ",".join(map(str, lexmin)) if lexmin else "-"
        with open(self.path, "a") as fh:
            fh.write(f"{length} {pw} {nodes} {count} {lw}\n")


@dataclass
class _ScanState:
    nodes: int = 0
    words: int = 0
    tripped: bool = False
    first_found: tuple[int, tuple[int, ...]] | None = None  # (length, lexmin word)


def _deadline(cfg: SearchConfig) -> float | None:
    return time.monotonic() + cfg.time_budget if cfg.time_budget is not None else None


def _over_budget(cfg: SearchConfig, state: _ScanState) -> bool:
    return cfg.node_budget is not None and state.nodes >= cfg.node_budget


def _scan_length(
    cfg: SearchConfig,
    L: int,
    state: _ScanState,
    ckpt: _Checkpoint | None,
    deadline: float | None,
    stop_on_found: bool,
) -> None:
    """Scan all branches at target length L, updating state in branch order.

    Sets state.first_found at the first branch carrying a word; stops there
    when stop_on_found. Branches already in the checkpoint are reused, not
    re-run; freshly completed branches are recorded.
    """
    depth = min(_BRANCH_DEPTH, L)
    prefixes, enum_nodes = _branches(cfg.n, cfg.k, depth, L, cfg.symmetry_reduction)
    state.nodes += enum_nodes

    def consume(prefix, nodes, count, lexmin, tripped, fresh) -> bool:
        """Fold one branch outcome into state; True means stop the scan."""
        state.nodes += nodes
        if tripped:
            state.tripped = True
            return True
        state.words += count
        if ckpt and fresh:
            ckpt.record(L, prefix, nodes, count, lexmin)
        if count > 0 and state.first_found is None:
            state.first_found = (L, lexmin)
            if stop_on_found:
                return True
        if _over_budget(cfg, state):
            state.tripped = True
            return True
        if deadline is not None and time.monotonic() > deadline:
            state.tripped = True
            return True
        return False

    if _over_budget(cfg, state):
        state.tripped = True
        return

    cap = cfg.node_budget
    pending = [p for p in prefixes if ckpt is None or ckpt.get(L, p) is None]

    if cfg.workers <= 1 or len(pending) <= 1:
        for prefix in prefixes:
            rec = ckpt.get(L, prefix) if ckpt else None
            if rec is not None:
                nodes, count, lexmin = rec
                stop = consume(prefix, nodes, count, lexmin, False, fresh=False)
            else:
                nodes, fnd, tripped = _scan_branch(
                    (cfg.n, cfg.k, L, prefix, cfg.symmetry_reduction, cap, deadline)
                )
                lexmin = fnd[0] if fnd else None
                stop = consume(prefix, nodes, len(fnd), lexmin, tripped, fresh=True)
            if stop:
                return
        return

    # parallel: dispatch unrecorded branches on a pool, consume in branch order
    tasks = [
        (cfg.n, cfg.k, L, p, cfg.symmetry_reduction, cap, deadline) for p in pending
    ]
    # fork keeps workers independent of how the parent was launched
    method = "fork" if "fork" in get_all_start_methods() else "spawn"
    ctx = get_context(method)
    with ProcessPoolExecutor(max_workers=cfg.workers, mp_context=ctx) as pool:
        results = pool.map(_scan_branch, tasks, chunksize=1)
        for prefix in prefixes:
            rec = ckpt.get(L, prefix) if ckpt else None
            if rec is not None:
                nodes, count, lexmin = rec
                stop = consume(prefix, nodes, count, lexmin, False, fresh=False)
            else:
                nodes, fnd, tripped = next(results)
                lexmin = fnd[0] if fnd else None
                stop = consume(prefix, nodes, len(fnd), lexmin, tripped, fresh=True)
            if stop:
                pool.shutdown(wait=False, cancel_futures=True)
                return


def _open_checkpoint(cfg: SearchConfig) -> _Checkpoint | None:
    if cfg.checkpoint_path is None:
        return None
    return _Checkpoint(cfg.checkpoint_path, cfg)


def search_minimal(cfg: SearchConfig) -> SearchResult:
    """Find the minimal crucial length for (n, k) up to cfg.max_length.

    Scans lengths upward; the first length carrying a crucial word is the
    minimum, and the witness is the lex-least canonical crucial word there.
    Returns exhaustive=False with whatever was established if a budget trips.
    """
    if not isinstance(cfg.target_mode, FindMinimalCrucial):
        raise DomainError("search_minimal requires target_mode=FindMinimalCrucial()")
    ckpt = _open_checkpoint(cfg)
    deadline = _deadline(cfg)
    state = _ScanState()
    for L in range(1, cfg.max_length + 1):
        _scan_length(cfg, L, state, ckpt, deadline, stop_on_found=True)
        if state.first_found is not None:
            length, lexmin = state.first_found
            return SearchResult(
                minimal_length=length,
                witness=Word(lexmin, cfg.n),
                exhaustive=not state.tripped,
                nodes_expanded=state.nodes,
                crucial_words_found=state.words,
            )
        if state.tripped:
            break
    return SearchResult(
        minimal_length=None,
        witness=None,
        exhaustive=not state.tripped,
        nodes_expanded=state.nodes,
        crucial_words_found=state.words,
    )


def verify_none_below(cfg: SearchConfig) -> SearchResult:
    """Certify no crucial word of length < target exists, or refute with one.

    exhaustive=True with crucial_words_found=0 is the certificate; a found
    word comes back as minimal_length/witness with the count seen up to the
    stopping branch. max_length must cover target-1 so the certificate is
    meaningful.
    """
    if not isinstance(cfg.target_mode, VerifyNoneBelow):
        raise DomainError("verify_none_below requires target_mode=VerifyNoneBelow(L)")
    limit = cfg.target_mode.length
    if cfg.max_length < limit - 1:
        raise DomainError(
            f"max_length={cfg.max_length} cannot certify lengths below {limit}"
        )
    ckpt = _open_checkpoint(cfg)
    deadline = _deadline(cfg)
    state = _ScanState()
    for L in range(1, limit):
        _scan_length(cfg, L, state, ckpt, deadline, stop_on_found=True)
        if state.first_found is not None:
            length, lexmin = state.first_found
            return SearchResult(
                minimal_length=length,
                witness=Word(lexmin, cfg.n),
                exhaustive=not state.tripped,
                nodes_expanded=state.nodes,
                crucial_words_found=state.words,
            )
        if state.tripped:
            return SearchResult(
                minimal_length=None,
                witness=None,
                exhaustive=False,
                nodes_expanded=state.nodes,
                crucial_words_found=state.words,
            )
    return SearchResult(
        minimal_length=None,
        witness=None,
        exhaustive=True,
        nodes_expanded=state.nodes,
        crucial_words_found=0,
    )


def enumerate_crucial(cfg: SearchConfig) -> Iterator[Word]:
    """Yield every crucial word of the target length in lexicographic order.

    With symmetry reduction only canonical words are yielded (one per
    renaming class). Runs sequentially; a tripping budget raises
    BudgetExhaustedError after the words found so far have been yielded.
    """
    if not isinstance(cfg.target_mode, EnumerateAllCrucialAtLength):
        raise DomainError(
            "enumerate_crucial requires target_mode=EnumerateAllCrucialAtLength(L)"
        )
    if cfg.checkpoint_path is not None:
        raise DomainError("checkpointing applies to find and verify modes only")
    L = cfg.target_mode.length
    deadline = _deadline(cfg)
    state = _ScanState()
    depth = min(_BRANCH_DEPTH, L)
    prefixes, enum_nodes = _branches(cfg.n, cfg.k, depth, L, cfg.symmetry_reduction)
    state.nodes += enum_nodes
    if _over_budget(cfg, state):
        raise BudgetExhaustedError(f"node budget exhausted after {state.nodes} nodes")
    for prefix in prefixes:
        nodes, fnd, tripped = _scan_branch(
            (cfg.n, cfg.k, L, prefix, cfg.symmetry_reduction, cfg.node_budget, deadline)
        )
        state.nodes += nodes
        for letters in fnd:
            yield Word(letters, cfg.n)
        if tripped or _over_budget(cfg, state):
            raise BudgetExhaustedError(f"budget exhausted after {state.nodes} nodes")
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExhaustedError("time budget exhausted")


def double_check_witness(w: Word, k: int) -> bool:
    """Independent confirmation that a search witness is crucial.

    Routes through the plain cruciality predicate rather than the packed
    scanner, so the two implementations cross-validate each other.
    """
    return is_crucial(w, k)
