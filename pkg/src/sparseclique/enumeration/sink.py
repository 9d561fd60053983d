"""Clique sinks, run statistics and the buffer bridge between kernels and Python."""
from __future__ import annotations

import ctypes
from dataclasses import dataclass
from typing import Callable

import numpy as np

# slots of the int64 stats vector shared with every kernel
COUNT = 0
CALLS = 1
MAX_DEPTH = 2
PIVOTS = 3
STOP = 4
FILL_V = 5
FILL_C = 6
LIVE = 7
PEAK = 8
MAX_TOP_P = 9
TOP_CALLS = 10
N_SLOTS = 11

FLUSH_TYPE = ctypes.CFUNCTYPE(ctypes.c_int64, ctypes.c_int64)

_CLIQUE_SLOTS = 1 << 14
_VERTEX_SLOTS = 1 << 17

MODES = ("count", "collect", "stream")


class CliqueSink:
    """Receives each maximal clique once.

    ``mode="count"`` only counts, ``"collect"`` keeps every clique in
    ``cliques``, and ``"stream"`` hands each clique to ``callback``. A callback
    returning a truthy value asks the enumerator to stop as soon as possible.
    Cliques are tuples of internal vertex ids in ascending order.
    """

    def __init__(self, mode: str = "count", callback: Callable[[tuple[int, ...]], object] | None = None):
        if mode not in MODES:
            raise ValueError(f"unknown sink mode {mode!r}")
        if mode == "stream" and callback is None:
            raise ValueError("stream mode needs a callback")
        self.mode = mode
        self.callback = callback
        self.count = 0
        self.cliques: list[tuple[int, ...]] | None = [] if mode == "collect" else None

    @classmethod
    def counter(cls) -> "CliqueSink":
        return cls("count")

    @classmethod
    def collector(cls) -> "CliqueSink":
        return cls("collect")

    @classmethod
    def stream(cls, callback: Callable[[tuple[int, ...]], object]) -> "CliqueSink":
        return cls("stream", callback)

    def report(self, clique: tuple[int, ...]) -> bool:
        self.count += 1
        if self.cliques is not None:
            self.cliques.append(clique)
        elif self.callback is not None:
            return bool(self.callback(clique))
        return False

    def __repr__(self) -> str:
        return f"CliqueSink(mode={self.mode!r}, count={self.count})"


@dataclass
class EnumStats:
    """Instrumentation for one enumeration run.

    ``max_depth`` is the largest ``|R| + 1`` over all calls. ``aux_slots`` is the
    peak auxiliary integer storage of the ``degen`` variant and ``None`` elsewhere.
    """

    cliques: int = 0
    recursive_calls: int = 0
    max_depth: int = 0
    pivot_selections: int = 0
    top_level_calls: int = 0
    max_top_level_p: int = 0
    stopped: bool = False
    aux_slots: int | None = None


class KernelBridge:
    """Owns the stats vector and the report buffers a kernel writes into."""

    def __init__(self, n: int, sink: CliqueSink):
        self.sink = sink
        self.stats = np.zeros(N_SLOTS, dtype=np.int64)
        self.collect = sink.mode != "count"
        if self.collect:
            self.buf = np.empty(max(_VERTEX_SLOTS, n + 1), dtype=np.int64)
            self.ends = np.empty(_CLIQUE_SLOTS, dtype=np.int64)
        else:
            self.buf = np.empty(1, dtype=np.int64)
            self.ends = np.empty(1, dtype=np.int64)
        self.error: BaseException | None = None
        self._emitted = 0
        self._callback = FLUSH_TYPE(self._flush)
        self.flush = ctypes.cast(self._callback, ctypes.c_void_p).value

    def _flush(self, n_cliques: int) -> int:
        try:
            start = 0
            stop = False
            buf = self.buf
            for k in range(n_cliques):
                end = int(self.ends[k])
                self._emitted += 1
                if self.sink.report(tuple(buf[start:end].tolist())):
                    stop = True
                    break
                start = end
            return 1 if stop else 0
        except BaseException as exc:  # re-raised once the kernel has unwound
            self.error = exc
            return 1

    def finish(self) -> EnumStats:
        s = self.stats
        if self.collect and s[FILL_C] and not s[STOP]:
            if self._flush(int(s[FILL_C])):
                s[STOP] = 1
            s[FILL_C] = 0
            s[FILL_V] = 0
        if self.error is not None:
            raise self.error
        if self.collect:
            if s[STOP]:
                # cliques buffered after a stop request are discarded
                s[COUNT] = self._emitted
        else:
            self.sink.count += int(s[COUNT])
        return EnumStats(
            cliques=int(s[COUNT]),
            recursive_calls=int(s[CALLS]),
            max_depth=int(s[MAX_DEPTH]),
            pivot_selections=int(s[PIVOTS]),
            top_level_calls=int(s[TOP_CALLS]),
            max_top_level_p=int(s[MAX_TOP_P]),
            stopped=bool(s[STOP]),
        )
