"""Report and bookkeeping helpers compiled into every enumeration kernel."""
from llvmlite import ir
from numba import njit, types
from numba.extending import intrinsic

from .sink import CALLS, COUNT, FILL_C, FILL_V, LIVE, MAX_DEPTH, PEAK, STOP


@intrinsic
def call_flush(typingctx, addr, n_cliques):
    """Call the C callback at integer address ``addr``; a runtime value, so cached code stays valid."""
    sig = types.int64(types.int64, types.int64)

    def codegen(context, builder, signature, args):
        fnty = ir.FunctionType(ir.IntType(64), [ir.IntType(64)])
        fn = builder.inttoptr(args[0], fnty.as_pointer())
        return builder.call(fn, [args[1]])

    return sig, codegen


@njit(cache=True)
def enter(stats, depth):
    stats[CALLS] += 1
    if depth + 1 > stats[MAX_DEPTH]:
        stats[MAX_DEPTH] = depth + 1


@njit(cache=True)
def emit(R, depth, stats, buf, ends, flush, collect):
    """Report ``R[:depth]``; clique vertices are written sorted."""
    if stats[STOP] != 0:
        return
    stats[COUNT] += 1
    if not collect:
        return
    fv = stats[FILL_V]
    fc = stats[FILL_C]
    if fc == ends.size or fv + depth > buf.size:
        if call_flush(flush, fc) != 0:
            stats[STOP] = 1
        stats[FILL_V] = 0
        stats[FILL_C] = 0
        fv = 0
        fc = 0
        if stats[STOP] != 0:
            return
    for i in range(depth):
        x = R[i]
        j = fv + i
        while j > fv and buf[j - 1] > x:
            buf[j] = buf[j - 1]
            j -= 1
        buf[j] = x
    ends[fc] = fv + depth
    stats[FILL_V] = fv + depth
    stats[FILL_C] = fc + 1


@njit(cache=True)
def alloc(stats, slots):
    stats[LIVE] += slots
    if stats[LIVE] > stats[PEAK]:
        stats[PEAK] = stats[LIVE]


@njit(cache=True)
def free(stats, slots):
    stats[LIVE] -= slots
