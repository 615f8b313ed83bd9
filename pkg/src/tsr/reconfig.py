"""Reconfiguration sequences: TJ, TAR, and TJN steps, validation, conversions.

A TJ step swaps one vertex of the current target set for one outside it.
A TAR step adds or removes a single vertex; a k-TAR sequence keeps every
intermediate set a target set of size at most k+1.  A TJN step is a TJ step
or a no-op.  Sequences are stored as step lists; the validator reconstructs
the intermediate sets.
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Iterator

from .activation import is_target_set
from .errors import EndpointSizeMismatch, InvalidInput, MalformedLine
from .graph import ThresholdGraph

TJ = "tj"
TAR = "tar"
TJN = "tjn"


@dataclasses.dataclass(frozen=True)
class Step:
    """One reconfiguration step: jump(out,in), add(v), remove(v), or noop."""

    kind: str  # "jump" | "add" | "remove" | "noop"
    out: int | None = None
    into: int | None = None

    @staticmethod
    def jump(out: int, into: int) -> "Step":
        if out == into:
            raise InvalidInput(f"jump with out == in == {out}")
        return Step("jump", out, into)

    @staticmethod
    def add(v: int) -> "Step":
        return Step("add", None, v)

    @staticmethod
    def remove(v: int) -> "Step":
        return Step("remove", v, None)

    @staticmethod
    def noop() -> "Step":
        return Step("noop")

    def format(self) -> str:
        if self.kind == "jump":
            return f"j {self.out} {self.into}"
        if self.kind == "add":
            return f"a {self.into}"
        if self.kind == "remove":
            return f"r {self.out}"
        return "n"


@dataclasses.dataclass(frozen=True)
class ReconfigSequence:
    """A reconfiguration sequence: start set, step list, and a model tag.

    ``model`` is one of TJ, TAR, TJN; ``k`` is the TAR budget (every
    intermediate set must have size at most k+1) and is ignored for TJ/TJN.
    """

    start: frozenset[int]
    steps: tuple[Step, ...]
    model: str
    k: int = 0

    def __len__(self) -> int:
        return len(self.steps)

    def sets(self) -> Iterator[frozenset[int]]:
        """Yield the |steps|+1 intermediate sets, start first."""
        cur = self.start
        yield cur
        for st in self.steps:
            cur = apply_step(cur, st)
            yield cur

    @property
    def end(self) -> frozenset[int]:
        cur = self.start
        for st in self.steps:
            cur = apply_step(cur, st)
        return cur

    def format(self) -> str:
        lines = [f"q {self.model} {self.k if self.model == TAR else len(self.start)}"]
        lines.append("s " + " ".join(str(v) for v in sorted(self.start)))
        lines += [st.format() for st in self.steps]
        return "\n".join(lines) + "\n"


def apply_step(current: frozenset[int], step: Step) -> frozenset[int]:
    """Apply a step without legality checks (the validator reports those)."""
    if step.kind == "jump":
        return (current - {step.out}) | {step.into}
    if step.kind == "add":
        return current | {step.into}
    if step.kind == "remove":
        return current - {step.out}
    return current


@dataclasses.dataclass(frozen=True)
class ValidityReport:
    ok: bool
    first_violation: int | None = None  # step index, or -1 for the start set
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


_ALLOWED_KINDS = {TJ: {"jump"}, TAR: {"add", "remove"}, TJN: {"jump", "noop"}}


def validate_sequence(
    g: ThresholdGraph,
    seq: ReconfigSequence,
    is_ts: Callable[[frozenset[int]], bool] | None = None,
) -> ValidityReport:
    """Check step legality, the target-set property of every intermediate set,
    and the model's size constraint.  Reports the first violation, raising
    nothing.  ``is_ts`` optionally overrides the target-set test (e.g. a
    precomputed table); it must agree with activation on g.
    """
    if seq.model not in _ALLOWED_KINDS:
        return ValidityReport(False, -1, f"unknown model {seq.model!r}")
    ts = is_ts if is_ts is not None else (lambda s: is_target_set(g, s))
    cur = seq.start
    for v in cur:
        if not 1 <= v <= g.n:
            return ValidityReport(False, -1, f"start contains unknown vertex {v}")
    if not ts(cur):
        return ValidityReport(False, -1, "start set is not a target set")
    if seq.model == TAR and len(cur) > seq.k + 1:
        return ValidityReport(False, -1, f"start set exceeds size {seq.k}+1")
    size0 = len(cur)
    for i, st in enumerate(seq.steps):
        if st.kind not in _ALLOWED_KINDS[seq.model]:
            return ValidityReport(False, i, f"step kind {st.kind!r} not allowed in model {seq.model}")
        if st.kind == "jump":
            if st.out not in cur:
                return ValidityReport(False, i, f"jump removes {st.out} which is not in the set")
            if st.into in cur:
                return ValidityReport(False, i, f"jump adds {st.into} which is already in the set")
            if not 1 <= st.into <= g.n:
                return ValidityReport(False, i, f"jump adds unknown vertex {st.into}")
        elif st.kind == "add":
            if st.into in cur:
                return ValidityReport(False, i, f"add of {st.into} already in the set")
            if not 1 <= st.into <= g.n:
                return ValidityReport(False, i, f"add of unknown vertex {st.into}")
        elif st.kind == "remove":
            if st.out not in cur:
                return ValidityReport(False, i, f"remove of {st.out} not in the set")
        cur = apply_step(cur, st)
        if seq.model in (TJ, TJN) and len(cur) != size0:
            return ValidityReport(False, i, "TJ/TJN set size changed")
        if seq.model == TAR and len(cur) > seq.k + 1:
            return ValidityReport(False, i, f"set size {len(cur)} exceeds {seq.k}+1")
        if not ts(cur):
            return ValidityReport(
                False, i, f"set after step {i} is not a target set: {sorted(cur)}"
            )
    return ValidityReport(True)


def tj_to_tar(seq: ReconfigSequence) -> ReconfigSequence:
    """Convert each jump(out,in) into add(in) followed by remove(out).

    The intermediate union is a superset of a target set, hence a target set;
    the result is a k-TAR sequence for k = |start| and the length doubles.
    """
    if seq.model != TJ:
        raise InvalidInput(f"expected a TJ sequence, got model {seq.model}")
    steps: list[Step] = []
    for st in seq.steps:
        if st.kind != "jump":
            raise InvalidInput(f"TJ sequence contains step kind {st.kind!r}")
        steps.append(Step.add(st.into))
        steps.append(Step.remove(st.out))
    return ReconfigSequence(seq.start, tuple(steps), TAR, k=len(seq.start))


def tar_to_tj(seq: ReconfigSequence) -> ReconfigSequence:
    """Convert a TAR(k) sequence with size-k endpoints into a TJ sequence.

    Scans left to right for a removal followed by an addition whose middle
    set has size below k; cancels the pair when it removes and re-adds the
    same vertex, otherwise swaps it into add-then-remove.  At the fixpoint
    all sets have size k or k+1 and steps pair up into jumps.
    """
    if seq.model != TAR:
        raise InvalidInput(f"expected a TAR sequence, got model {seq.model}")
    k = seq.k
    if len(seq.start) != k or len(seq.end) != k:
        raise EndpointSizeMismatch(
            f"endpoints have sizes {len(seq.start)}, {len(seq.end)}; expected k={k}"
        )
    kinds: list[Step] = list(seq.steps)
    for st in kinds:
        if st.kind not in ("add", "remove"):
            raise InvalidInput(f"TAR sequence contains step kind {st.kind!r}")

    changed = True
    while changed:
        changed = False
        size = len(seq.start)
        i = 0
        while i + 1 < len(kinds):
            a, b = kinds[i], kinds[i + 1]
            mid = size - 1 if a.kind == "remove" else size + 1
            if a.kind == "remove" and b.kind == "add" and mid < k:
                if a.out == b.into:
                    del kinds[i : i + 2]
                else:
                    kinds[i] = Step.add(b.into)
                    kinds[i + 1] = Step.remove(a.out)
                changed = True
                break
            size = mid
            i += 1

    # Pair adds with the following removes into jumps; an add/remove of the
    # same vertex is a detour through a superset and is dropped.
    steps: list[Step] = []
    i = 0
    while i < len(kinds):
        a = kinds[i]
        if a.kind != "add" or i + 1 >= len(kinds) or kinds[i + 1].kind != "remove":
            raise InvalidInput("TAR sequence did not normalize to add/remove pairs")
        b = kinds[i + 1]
        if a.into != b.out:
            steps.append(Step.jump(b.out, a.into))
        i += 2
    return ReconfigSequence(seq.start, tuple(steps), TJ)


def strip_noops(seq: ReconfigSequence) -> ReconfigSequence:
    """Drop noop steps from a TJN sequence, yielding a TJ sequence."""
    if seq.model not in (TJN, TJ):
        raise InvalidInput(f"expected a TJN sequence, got model {seq.model}")
    steps = tuple(st for st in seq.steps if st.kind != "noop")
    return ReconfigSequence(seq.start, steps, TJ)


def concat(a: ReconfigSequence, b: ReconfigSequence) -> ReconfigSequence:
    """Concatenate two sequences of the same model; b must start at a's end."""
    if a.model != b.model:
        raise InvalidInput(f"model mismatch: {a.model} vs {b.model}")
    if a.end != b.start:
        raise InvalidInput("second sequence does not start at the first one's end")
    return ReconfigSequence(a.start, a.steps + b.steps, a.model, max(a.k, b.k))


def reverse(seq: ReconfigSequence) -> ReconfigSequence:
    """Reverse a sequence; adds become removes and jumps swap direction."""
    rev: list[Step] = []
    for st in reversed(seq.steps):
        if st.kind == "jump":
            rev.append(Step.jump(st.into, st.out))
        elif st.kind == "add":
            rev.append(Step.remove(st.into))
        elif st.kind == "remove":
            rev.append(Step.add(st.out))
        else:
            rev.append(Step.noop())
    return ReconfigSequence(seq.end, tuple(rev), seq.model, seq.k)


# -- sequence file format -------------------------------------------------
#
#   q <model> <k>
#   s <ids...>
#   j <out> <in> | a <v> | r <v> | n        (one step per line)


def parse_sequence(text: str) -> ReconfigSequence:
    model: str | None = None
    k = 0
    start: frozenset[int] | None = None
    steps: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "q":
                if model is not None or len(parts) != 3:
                    raise MalformedLine(f"line {lineno}: expected single 'q <model> <k>'")
                model = parts[1].lower()
                if model not in (TJ, TAR, TJN):
                    raise MalformedLine(f"line {lineno}: unknown model {parts[1]!r}")
                k = int(parts[2])
            elif parts[0] == "s":
                if model is None or start is not None:
                    raise MalformedLine(f"line {lineno}: 's' line misplaced")
                start = frozenset(int(p) for p in parts[1:])
            elif parts[0] == "j":
                if len(parts) != 3:
                    raise MalformedLine(f"line {lineno}: expected 'j <out> <in>'")
                steps.append(Step.jump(int(parts[1]), int(parts[2])))
            elif parts[0] == "a":
                if len(parts) != 2:
                    raise MalformedLine(f"line {lineno}: expected 'a <v>'")
                steps.append(Step.add(int(parts[1])))
            elif parts[0] == "r":
                if len(parts) != 2:
                    raise MalformedLine(f"line {lineno}: expected 'r <v>'")
                steps.append(Step.remove(int(parts[1])))
            elif parts[0] == "n":
                steps.append(Step.noop())
            else:
                raise MalformedLine(f"line {lineno}: unknown line kind {parts[0]!r}")
        except ValueError as exc:
            raise MalformedLine(f"line {lineno}: {exc}") from exc
    if model is None or start is None:
        raise MalformedLine("missing 'q' or 's' line")
    return ReconfigSequence(start, tuple(steps), model, k)
