"""JSON document for Goodstein traces."""

from typing import Literal, Optional

from pydantic import BaseModel, Field

from ackermann_goodstein.core.goodstein import Budget, GoodsteinTrace, Terminated
from ackermann_goodstein.core.grammar import print_ordinal


class TraceEntryModel(BaseModel):
    """One state of the process."""

    i: int = Field(ge=0, description="Step index", examples=[0])
    base: int = Field(ge=2, description="Base the state is written in (i + 2)", examples=[2])
    nf: str = Field(description="Normal form in the term grammar", examples=["A(0,A(0,0))+A(0,0)"])
    ordinal: str = Field(description="Base-omega image in the ordinal grammar")
    descent_ok: Optional[bool] = Field(
        default=None,
        description="Whether this ordinal is above the next one; null on the last entry",
    )


class TraceOutcomeModel(BaseModel):
    """How the run ended."""

    kind: Literal["terminated", "budget"]
    index: int = Field(ge=0, description="Step at which the run ended")
    reason: Optional[str] = Field(default=None, examples=["max_steps", "blowup"])


class TraceDocument(BaseModel):
    """A full trace: {seed, mode, entries, outcome}."""

    seed: int = Field(ge=0)
    mode: Literal["concrete", "symbolic"]
    entries: list[TraceEntryModel] = Field(default_factory=list)
    outcome: TraceOutcomeModel

    @classmethod
    def from_trace(cls, trace: GoodsteinTrace) -> "TraceDocument":
        """Render a trace with printed terms and ordinals."""
        entries = [
            TraceEntryModel(
                i=entry.i,
                base=entry.base,
                nf=entry.nf,
                ordinal=print_ordinal(entry.ordinal),
                descent_ok=entry.descent_ok,
            )
            for entry in trace.entries
        ]
        if isinstance(trace.outcome, Terminated):
            outcome = TraceOutcomeModel(kind="terminated", index=trace.outcome.at)
        else:
            assert isinstance(trace.outcome, Budget)
            outcome = TraceOutcomeModel(
                kind="budget", index=trace.outcome.at, reason=trace.outcome.reason
            )
        return cls(seed=trace.seed, mode=trace.mode.value, entries=entries, outcome=outcome)
